//! C ABI for mfkit.
//!
//! Objects are opaque heap handles released by their `_free` function.
//! Every fallible call returns an [`MfkitStatus`]; on failure the message
//! is available from [`mfkit_last_error_message`] on the same thread.
//! Strings returned through out-parameters are owned by the caller and
//! released with [`mfkit_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use mfkit::algebra::{PrimeField, Rationals};
use mfkit::catalog::{catalog_mf, SingularityType};
use mfkit::cli::{parse_documents, MfJson};
use mfkit::groebner::GbConfig;
use mfkit::mf::{MatrixFactorization, MfContext};
use mfkit::quiver::{ar_quiver, emit, QuiverFormat};
use mfkit::MfError;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MfkitStatus {
    Ok = 0,
    ParseError,
    InvalidField,
    NotScalarPlusNilpotent,
    DegreeGuardExceeded,
    NotZeroDimensional,
    NotHomFinite,
    NotAMatrixFactorization,
    NotAMorphism,
    MixedHypersurface,
    ShapeMismatch,
    PreconditionViolated,
    SocleEmpty,
    NotASummand,
    UnrecognizedSummand,
    NoScalarBlock,
    InvalidTypeCombination,
    IndexOutOfRange,
    NonClosure,
    UnknownFormat,
    InvalidInput,
    NullPointer,
    InvalidUtf8,
    Panic,
}

impl From<&MfError> for MfkitStatus {
    fn from(e: &MfError) -> Self {
        use MfkitStatus as S;
        match e {
            MfError::Syntax { .. }
            | MfError::UnknownVariable { .. }
            | MfError::NonIntegerCoefficient { .. } => S::ParseError,
            MfError::NotPrime(_) => S::InvalidField,
            MfError::NotScalarPlusNilpotent(_) => S::NotScalarPlusNilpotent,
            MfError::DegreeGuardExceeded { .. } => S::DegreeGuardExceeded,
            MfError::NotZeroDimensional(_) => S::NotZeroDimensional,
            MfError::NotHomFinite(_) => S::NotHomFinite,
            MfError::NotAMatrixFactorization(_) => S::NotAMatrixFactorization,
            MfError::NotAMorphism(_) => S::NotAMorphism,
            MfError::MixedHypersurface => S::MixedHypersurface,
            MfError::ShapeMismatch(_) => S::ShapeMismatch,
            MfError::PreconditionViolated(_) => S::PreconditionViolated,
            MfError::SocleEmpty => S::SocleEmpty,
            MfError::NotASummand(_) => S::NotASummand,
            MfError::UnrecognizedSummand(_) => S::UnrecognizedSummand,
            MfError::NoScalarBlock => S::NoScalarBlock,
            MfError::InvalidTypeCombination(_) => S::InvalidTypeCombination,
            MfError::IndexOutOfRange { .. } => S::IndexOutOfRange,
            MfError::NonClosure(_) => S::NonClosure,
            MfError::UnknownFormat(_) => S::UnknownFormat,
            MfError::InvalidInput(_) => S::InvalidInput,
        }
    }
}

/// Engine settings, a random seed and a cache of Hom spaces.
pub struct MfkitContext {
    rationals: MfContext<Rationals>,
    primes: MfContext<PrimeField>,
}

/// A matrix factorization over ℚ or a prime field.
pub struct MfkitFactorization {
    inner: AnyMf,
}

#[derive(Clone)]
enum AnyMf {
    Q(Arc<MatrixFactorization<Rationals>>),
    P(Arc<MatrixFactorization<PrimeField>>),
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(MfkitStatus, String);

impl From<MfError> for Failure {
    fn from(e: MfError) -> Self {
        Failure((&e).into(), e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn guard(body: impl FnOnce() -> FfiResult<()>) -> MfkitStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            MfkitStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MfkitStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Failure(
            MfkitStatus::NullPointer,
            "null string argument".into(),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(MfkitStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> FfiResult<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(MfkitStatus::NullPointer, "null handle".into()))
}

unsafe fn store<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return Err(Failure(
            MfkitStatus::NullPointer,
            "null output pointer".into(),
        ));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

fn boxed(inner: AnyMf) -> *mut MfkitFactorization {
    Box::into_raw(Box::new(MfkitFactorization { inner }))
}

fn pair<'a>(m: &'a MfkitFactorization, n: &'a MfkitFactorization) -> FfiResult<Pair<'a>> {
    match (&m.inner, &n.inner) {
        (AnyMf::Q(a), AnyMf::Q(b)) => Ok(Pair::Q(a, b)),
        (AnyMf::P(a), AnyMf::P(b)) => Ok(Pair::P(a, b)),
        _ => Err(MfError::MixedHypersurface.into()),
    }
}

enum Pair<'a> {
    Q(
        &'a Arc<MatrixFactorization<Rationals>>,
        &'a Arc<MatrixFactorization<Rationals>>,
    ),
    P(
        &'a Arc<MatrixFactorization<PrimeField>>,
        &'a Arc<MatrixFactorization<PrimeField>>,
    ),
}

/// The message of the last failed call on this thread, or "" after a
/// successful one. Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn mfkit_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn mfkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A context with the given random seed and the Gröbner degree guard
/// taken from the environment.
#[no_mangle]
pub extern "C" fn mfkit_context_new(seed: u64) -> *mut MfkitContext {
    let cfg = GbConfig::from_env();
    Box::into_raw(Box::new(MfkitContext {
        rationals: MfContext::new(cfg, seed),
        primes: MfContext::new(cfg, seed),
    }))
}

/// # Safety
/// `ctx` must come from [`mfkit_context_new`], or be null.
#[no_mangle]
pub unsafe extern "C" fn mfkit_context_free(ctx: *mut MfkitContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Catalog entry M_index of the type named by `spec`, e.g. "E6^1@3".
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mfkit_catalog_entry(
    spec: *const c_char,
    index: usize,
    out: *mut *mut MfkitFactorization,
) -> MfkitStatus {
    guard(|| {
        let t: SingularityType = text(spec)?.parse()?;
        let inner = match t.characteristic {
            0 => AnyMf::Q(Arc::new(catalog_mf(&t, &Rationals, index)?.factorization)),
            p => AnyMf::P(Arc::new(
                catalog_mf(&t, &PrimeField::new(p)?, index)?.factorization,
            )),
        };
        store(out, boxed(inner))
    })
}

/// Reads one MFJSON object and verifies it.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mfkit_factorization_from_json(
    json: *const c_char,
    out: *mut *mut MfkitFactorization,
) -> MfkitStatus {
    guard(|| {
        let docs = parse_documents(text(json)?)?;
        let [doc] = docs.as_slice() else {
            return Err(MfError::InvalidInput("expected exactly one MFJSON object".into()).into());
        };
        let inner = match doc.characteristic {
            0 => AnyMf::Q(Arc::new(doc.to_factorization(&Rationals)?)),
            p => AnyMf::P(Arc::new(doc.to_factorization(&PrimeField::new(p)?)?)),
        };
        store(out, boxed(inner))
    })
}

/// # Safety
/// `mf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mfkit_factorization_to_json(
    mf: *const MfkitFactorization,
    out: *mut *mut c_char,
) -> MfkitStatus {
    guard(|| {
        let doc = match &handle(mf)?.inner {
            AnyMf::Q(m) => MfJson::from_factorization(m),
            AnyMf::P(m) => MfJson::from_factorization(m),
        };
        let s = serde_json::to_string(&doc).expect("serializable");
        store(out, c_string(s))
    })
}

/// # Safety
/// `mf` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn mfkit_factorization_free(mf: *mut MfkitFactorization) {
    if !mf.is_null() {
        drop(Box::from_raw(mf));
    }
}

/// Matrix size, or 0 for a null handle.
///
/// # Safety
/// `mf` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn mfkit_factorization_size(mf: *const MfkitFactorization) -> usize {
    match mf.as_ref().map(|m| &m.inner) {
        Some(AnyMf::Q(m)) => m.size(),
        Some(AnyMf::P(m)) => m.size(),
        None => 0,
    }
}

/// Whether AB = BA = fI.
///
/// # Safety
/// `mf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mfkit_factorization_verify(
    mf: *const MfkitFactorization,
    out: *mut bool,
) -> MfkitStatus {
    guard(|| {
        let ok = match &handle(mf)?.inner {
            AnyMf::Q(m) => m.verify(),
            AnyMf::P(m) => m.verify(),
        };
        store(out, ok)
    })
}

/// The shifted factorization (B, A).
///
/// # Safety
/// `mf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mfkit_factorization_shift(
    mf: *const MfkitFactorization,
    out: *mut *mut MfkitFactorization,
) -> MfkitStatus {
    guard(|| {
        let inner = match &handle(mf)?.inner {
            AnyMf::Q(m) => AnyMf::Q(Arc::new(m.shift())),
            AnyMf::P(m) => AnyMf::P(Arc::new(m.shift())),
        };
        store(out, boxed(inner))
    })
}

/// Rank of coker A as a maximal Cohen-Macaulay module.
///
/// # Safety
/// `mf` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mfkit_mcm_rank(
    mf: *const MfkitFactorization,
    out: *mut usize,
) -> MfkitStatus {
    guard(|| {
        let r = match &handle(mf)?.inner {
            AnyMf::Q(m) => m.mcm_rank(),
            AnyMf::P(m) => m.mcm_rank(),
        };
        store(out, r)
    })
}

/// dim Hom(m, n) in the homotopy category.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mfkit_hom_dim(
    ctx: *const MfkitContext,
    m: *const MfkitFactorization,
    n: *const MfkitFactorization,
    out: *mut usize,
) -> MfkitStatus {
    guard(|| {
        let cx = handle(ctx)?;
        let d = match pair(handle(m)?, handle(n)?)? {
            Pair::Q(a, b) => cx.rationals.hom_dim(a, b)?,
            Pair::P(a, b) => cx.primes.hom_dim(a, b)?,
        };
        store(out, d)
    })
}

/// Whether m and n are isomorphic; `strict` selects the Nullstellensatz
/// certificate.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mfkit_iso_test(
    ctx: *const MfkitContext,
    m: *const MfkitFactorization,
    n: *const MfkitFactorization,
    strict: bool,
    out: *mut bool,
) -> MfkitStatus {
    guard(|| {
        let cx = handle(ctx)?;
        let iso = match pair(handle(m)?, handle(n)?)? {
            Pair::Q(a, b) => cx.rationals.iso_test(a, b, strict)?,
            Pair::P(a, b) => cx.primes.iso_test(a, b, strict)?,
        };
        store(out, iso)
    })
}

/// The AR quiver of a catalog type, serialized as "dot" or "json".
///
/// # Safety
/// String arguments must be NUL-terminated, `ctx` live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mfkit_ar_quiver(
    ctx: *const MfkitContext,
    spec: *const c_char,
    format: *const c_char,
    out: *mut *mut c_char,
) -> MfkitStatus {
    guard(|| {
        let cx = handle(ctx)?;
        let t: SingularityType = text(spec)?.parse()?;
        let format: QuiverFormat = text(format)?.parse()?;
        let q = match t.characteristic {
            0 => ar_quiver(&cx.rationals, &t, &Rationals)?,
            p => ar_quiver(&cx.primes, &t, &PrimeField::new(p)?)?,
        };
        store(out, c_string(emit(&q, format)))
    })
}
