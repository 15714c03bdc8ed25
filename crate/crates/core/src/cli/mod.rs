//! The `mfkit` command-line front end.
//!
//! Exit codes: 0 for success or a positive verdict, 1 for a negative
//! verdict, 2 for errors.

mod mfjson;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{Field, PolyMatrix, PrimeField, Rationals};
use crate::catalog::{catalog_all, catalog_mf, Series, SingularityType};
use crate::error::{MfError, Result};
use crate::mf::{MatrixFactorization, MfContext, Morphism};
use crate::quiver::{
    ar_quiver, dynkin_double_quiver, emit, find_relabeling, fundamental_cycle, knit_from_seed,
    quiver_equal, DynkinGraph, QuiverFormat,
};

pub use mfjson::{parse_documents, parse_morphism, MfJson, MorphismJson};

type Mf<F> = Arc<MatrixFactorization<F>>;

#[derive(Parser, Debug)]
#[command(
    name = "mfkit",
    version,
    about = "Matrix factorizations over simple surface singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where the objects of a command come from: catalog entries of `--spec`
/// selected by `--i`/`--j`, or MFJSON files.
#[derive(Args, Debug, Clone, Default)]
struct Objects {
    /// Catalog type, e.g. `E6^1@3`.
    #[arg(long)]
    spec: Option<String>,
    /// Index of the first object (1-based).
    #[arg(long = "i")]
    i: Option<usize>,
    /// Index of the second object (1-based).
    #[arg(long = "j")]
    j: Option<usize>,
    /// MFJSON file for the first object.
    #[arg(long)]
    source: Option<String>,
    /// MFJSON file for the second object.
    #[arg(long)]
    target: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check AB = BA = fI for a catalog family or an MFJSON file.
    Verify {
        /// Spec string or path to an MFJSON file.
        target: Option<String>,
        #[arg(long)]
        spec: Option<String>,
    },
    /// Print catalog entries as MFJSON.
    Emit {
        #[arg(long)]
        spec: String,
        #[arg(long = "i")]
        i: Option<usize>,
    },
    /// Dimension and basis of Hom(M_i, M_j) in the homotopy category.
    Hom {
        #[command(flatten)]
        objects: Objects,
        #[arg(long)]
        dims_only: bool,
        /// Report the radical instead of the whole Hom space.
        #[arg(long)]
        radical: bool,
    },
    /// Decide whether a morphism is null-homotopic and print a witness.
    Nullhomotopic {
        #[command(flatten)]
        objects: Objects,
        /// JSON file with entries X and Y, or `id` or `f*id`.
        #[arg(long)]
        morphism: String,
    },
    /// Decide whether two factorizations are isomorphic.
    Iso {
        #[command(flatten)]
        objects: Objects,
        #[arg(long)]
        strict_nullstellensatz: bool,
    },
    /// Rank of the maximal Cohen-Macaulay module coker A.
    Rank {
        #[command(flatten)]
        objects: Objects,
    },
    /// The almost split triangle ending in M_i.
    ArTriangle {
        #[command(flatten)]
        objects: Objects,
        /// Decompose the middle term against the catalog.
        #[arg(long)]
        recognize: bool,
    },
    /// The AR quiver of a catalog family.
    Quiver {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value = "dot")]
        format: String,
        /// Compare with the double quiver of the Dynkin diagram.
        #[arg(long)]
        check_dynkin: bool,
    },
    /// Rebuild a family from one object by AR triangles.
    Knit {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        seed: usize,
        /// Indices treated as already known (defaults to the seed).
        #[arg(long, value_delimiter = ',')]
        known: Vec<usize>,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// The fundamental cycle of a Dynkin diagram.
    FundamentalCycle {
        #[arg(long)]
        spec: Option<String>,
        /// Diagram name such as `E6`, when no spec is given.
        #[arg(long = "type")]
        dynkin: Option<String>,
        /// Compare with the ranks of the catalog objects.
        #[arg(long)]
        check_ranks: bool,
    },
}

/// Everything a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    text: String,
    verdict: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report {
            text,
            verdict: true,
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(r) => Outcome {
            code: if r.verdict { 0 } else { 1 },
            stdout: r.text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| MfError::InvalidInput(format!("{path}: {e}")))
}

fn parse_spec(s: &str) -> Result<SingularityType> {
    s.parse()
}

/// Inputs read before the field is known.
#[derive(Default)]
struct Files {
    source: Option<Vec<MfJson>>,
    target: Option<Vec<MfJson>>,
}

fn load(objects: &Objects) -> Result<(Option<SingularityType>, Files)> {
    let spec = objects.spec.as_deref().map(parse_spec).transpose()?;
    let docs = |p: &Option<String>| -> Result<Option<Vec<MfJson>>> {
        p.as_deref().map(|p| parse_documents(&read(p)?)).transpose()
    };
    Ok((
        spec,
        Files {
            source: docs(&objects.source)?,
            target: docs(&objects.target)?,
        },
    ))
}

fn characteristic(spec: Option<&SingularityType>, files: &Files) -> Result<u64> {
    if let Some(t) = spec {
        return Ok(t.characteristic);
    }
    files
        .source
        .iter()
        .chain(files.target.iter())
        .flatten()
        .map(|d| d.characteristic)
        .next()
        .ok_or_else(|| MfError::InvalidInput("give --spec or an MFJSON file".into()))
}

/// Calls `$body` with `$k` bound to the field of characteristic `$p`.
macro_rules! with_field {
    ($p:expr, |$k:ident| $body:expr) => {{
        match $p {
            0 => {
                let $k = Rationals;
                $body
            }
            p => {
                let $k = PrimeField::new(p)?;
                $body
            }
        }
    }};
}

fn dispatch(command: &Command) -> Result<Report> {
    match command {
        Command::Verify { target, spec } => {
            let arg = spec.as_deref().or(target.as_deref()).ok_or_else(|| {
                MfError::InvalidInput("verify needs a spec string or an MFJSON file".into())
            })?;
            verify(arg)
        }
        Command::Emit { spec, i } => {
            let t = parse_spec(spec)?;
            with_field!(t.characteristic, |k| emit_entries(&t, &k, *i))
        }
        Command::Quiver {
            spec,
            format,
            check_dynkin,
        } => {
            let t = parse_spec(spec)?;
            let format: QuiverFormat = format.parse()?;
            with_field!(t.characteristic, |k| quiver(&t, &k, format, *check_dynkin))
        }
        Command::Knit {
            spec,
            seed,
            known,
            max_steps,
        } => {
            let t = parse_spec(spec)?;
            with_field!(t.characteristic, |k| knit(&t, &k, *seed, known, *max_steps))
        }
        Command::FundamentalCycle {
            spec,
            dynkin,
            check_ranks,
        } => cycle(spec.as_deref(), dynkin.as_deref(), *check_ranks),
        Command::Hom { objects, .. }
        | Command::Nullhomotopic { objects, .. }
        | Command::Iso { objects, .. }
        | Command::Rank { objects }
        | Command::ArTriangle { objects, .. } => {
            let (spec, files) = load(objects)?;
            let p = characteristic(spec.as_ref(), &files)?;
            with_field!(p, |k| {
                let s = Session {
                    cx: MfContext::from_env(),
                    field: k,
                    spec,
                    files,
                    objects: objects.clone(),
                };
                s.run(command)
            })
        }
    }
}

fn verify(arg: &str) -> Result<Report> {
    let (total, good) = match parse_spec(arg) {
        Ok(t) => with_field!(t.characteristic, |k| {
            let entries = catalog_all(&t, &k)?;
            (
                entries.len(),
                entries.iter().filter(|e| e.factorization.verify()).count(),
            )
        }),
        Err(spec_err) => {
            if !std::path::Path::new(arg).exists() {
                return Err(spec_err);
            }
            let docs = parse_documents(&read(arg)?)?;
            let mut good = 0;
            for d in &docs {
                if with_field!(d.characteristic, |k| d.satisfies_identity(&k)?) {
                    good += 1;
                }
            }
            (docs.len(), good)
        }
    };
    let word = if good == total { "OK" } else { "FAIL" };
    Ok(Report {
        text: format!("{word}: {good}/{total} entries satisfy AB=BA=fI\n"),
        verdict: good == total,
    })
}

fn emit_entries<F: Field>(t: &SingularityType, k: &F, i: Option<usize>) -> Result<Report> {
    let text = match i {
        Some(i) => pretty(&MfJson::from_factorization(
            &catalog_mf(t, k, i)?.factorization,
        )),
        None => {
            let all: Vec<MfJson> = catalog_all(t, k)?
                .iter()
                .map(|e| MfJson::from_factorization(&e.factorization))
                .collect();
            pretty(&all)
        }
    };
    Ok(Report::ok(text))
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn dynkin_name(g: &DynkinGraph) -> String {
    format!("{:?}{}", g.series, g.n)
}

fn match_line(ok: bool, g: &DynkinGraph) -> String {
    let word = if ok { "MATCH" } else { "MISMATCH" };
    format!("{word}: {} double quiver\n", dynkin_name(g))
}

fn quiver<F: Field>(
    t: &SingularityType,
    k: &F,
    format: QuiverFormat,
    check: bool,
) -> Result<Report> {
    let cx = MfContext::from_env();
    let q = ar_quiver(&cx, t, k)?;
    if check {
        let g = DynkinGraph::of_type(t)?;
        let ok = quiver_equal(&q, &dynkin_double_quiver(&g), true);
        return Ok(Report {
            text: match_line(ok, &g),
            verdict: ok,
        });
    }
    Ok(Report::ok(emit(&q, format)))
}

fn knit<F: Field>(
    t: &SingularityType,
    k: &F,
    seed: usize,
    known: &[usize],
    max_steps: usize,
) -> Result<Report> {
    let cx = MfContext::from_env();
    let entry = |i: usize| -> Result<(String, Mf<F>)> {
        Ok((
            format!("M{i}"),
            Arc::new(catalog_mf(t, k, i)?.factorization),
        ))
    };
    let (seed_label, seed_obj) = entry(seed)?;
    let known_list = if known.is_empty() {
        vec![seed]
    } else {
        known.to_vec()
    };
    let known_objs = known_list
        .iter()
        .map(|&i| entry(i))
        .collect::<Result<Vec<_>>>()?;
    let report = knit_from_seed(&cx, (&seed_label, &seed_obj), &known_objs, max_steps)?;

    let mut s = format!("seed: {seed_label}\n");
    for (n, step) in report.steps.iter().enumerate() {
        let middle: Vec<String> = step
            .recognized
            .iter()
            .map(|(l, c)| {
                if *c == 1 {
                    l.clone()
                } else {
                    format!("{c}*{l}")
                }
            })
            .collect();
        let _ = write!(
            s,
            "step {}: {} -> {{{}}}",
            n + 1,
            step.source,
            middle.join(", ")
        );
        if !step.discovered.is_empty() {
            let _ = write!(s, "; new: {}", step.discovered.join(", "));
        }
        s.push('\n');
    }
    let _ = writeln!(
        s,
        "closure: {} objects, {} new",
        report.labels.len(),
        report.new_labels.len()
    );
    let _ = writeln!(s, "labels: {}", report.labels.join(" "));
    let sizes: Vec<String> = report.sizes().iter().map(|n| n.to_string()).collect();
    let _ = writeln!(s, "sizes: {}", sizes.join(" "));
    let g = DynkinGraph::of_type(t)?;
    let ok = quiver_equal(&report.quiver(&cx)?, &dynkin_double_quiver(&g), true);
    s.push_str(&match_line(ok, &g));
    Ok(Report {
        text: s,
        verdict: ok,
    })
}

fn parse_dynkin(name: &str) -> Result<DynkinGraph> {
    let bad = || MfError::Syntax {
        message: format!("expected a diagram name like E6, got `{name}`"),
        position: 0,
    };
    let series = match name.chars().next() {
        Some('A') => Series::A,
        Some('D') => Series::D,
        Some('E') => Series::E,
        _ => return Err(bad()),
    };
    let n = name[1..].parse().map_err(|_| bad())?;
    DynkinGraph::new(series, n)
}

fn cycle(spec: Option<&str>, dynkin: Option<&str>, check_ranks: bool) -> Result<Report> {
    let t = spec.map(parse_spec).transpose()?;
    let g = match (&t, dynkin) {
        (Some(t), _) => DynkinGraph::of_type(t)?,
        (None, Some(name)) => parse_dynkin(name)?,
        (None, None) => return Err(MfError::InvalidInput("give --spec or --type".into())),
    };
    let z = fundamental_cycle(&g);
    let show = |v: &[u32]| {
        v.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut s = format!("Z({}) = {}\n", dynkin_name(&g), show(&z.coefficients));
    if !check_ranks {
        return Ok(Report::ok(s));
    }
    let t = t.ok_or_else(|| MfError::InvalidInput("--check-ranks needs --spec".into()))?;
    let ranks = with_field!(t.characteristic, |k| {
        let q = ar_quiver(&MfContext::from_env(), &t, &k)?;
        let p = find_relabeling(&q, &dynkin_double_quiver(&g)).ok_or_else(|| {
            MfError::InvalidInput("the AR quiver is not the Dynkin double quiver".into())
        })?;
        let objs = catalog_all(&t, &k)?;
        let mut ranks = vec![0u32; g.n];
        for (i, e) in objs.iter().enumerate() {
            ranks[p[i]] = e.factorization.mcm_rank() as u32;
        }
        ranks
    });
    let _ = writeln!(s, "ranks  = {}", show(&ranks));
    let ok = ranks == z.coefficients;
    s.push_str(if ok {
        "MATCH: fundamental cycle equals ranks\n"
    } else {
        "MISMATCH: fundamental cycle differs from ranks\n"
    });
    Ok(Report {
        text: s,
        verdict: ok,
    })
}

fn json_matrix<F: Field>(m: &MatrixFactorization<F>, p: &PolyMatrix<F>) -> String {
    serde_json::to_string(&p.to_strings(m.ring())).expect("serializable")
}

struct Session<F: Field> {
    cx: MfContext<F>,
    field: F,
    spec: Option<SingularityType>,
    files: Files,
    objects: Objects,
}

impl<F: Field> Session<F> {
    fn pick(
        &self,
        docs: Option<&Vec<MfJson>>,
        index: Option<usize>,
        role: &str,
    ) -> Result<(String, Mf<F>)> {
        if let Some(docs) = docs {
            let i = index.unwrap_or(1);
            let d = docs
                .get(i.wrapping_sub(1))
                .ok_or(MfError::IndexOutOfRange {
                    index: i,
                    size: docs.len(),
                })?;
            let label = if docs.len() == 1 {
                role.to_string()
            } else {
                format!("{role}[{i}]")
            };
            return Ok((label, Arc::new(d.to_factorization(&self.field)?)));
        }
        let t = self.spec.as_ref().ok_or_else(|| {
            MfError::InvalidInput(format!("no {role} object: give --spec or an MFJSON file"))
        })?;
        let i = index
            .ok_or_else(|| MfError::InvalidInput(format!("no index for the {role} object")))?;
        Ok((
            format!("M{i}"),
            Arc::new(catalog_mf(t, &self.field, i)?.factorization),
        ))
    }

    fn first(&self) -> Result<(String, Mf<F>)> {
        self.pick(self.files.source.as_ref(), self.objects.i, "source")
    }

    fn second(&self) -> Result<(String, Mf<F>)> {
        if self.files.target.is_some() || self.spec.is_some() {
            self.pick(
                self.files.target.as_ref(),
                self.objects.j.or(self.objects.i),
                "target",
            )
        } else {
            self.pick(
                self.files.source.as_ref(),
                self.objects.j.or(self.objects.i),
                "source",
            )
        }
    }

    fn run(&self, command: &Command) -> Result<Report> {
        match command {
            Command::Hom {
                dims_only, radical, ..
            } => self.hom(*dims_only, *radical),
            Command::Nullhomotopic { morphism, .. } => self.nullhomotopic(morphism),
            Command::Iso {
                strict_nullstellensatz,
                ..
            } => {
                let (_, m) = self.first()?;
                let (_, n) = self.second()?;
                let iso = self.cx.iso_test(&m, &n, *strict_nullstellensatz)?;
                Ok(Report {
                    text: if iso {
                        "ISOMORPHIC\n".into()
                    } else {
                        "NOT ISOMORPHIC\n".into()
                    },
                    verdict: iso,
                })
            }
            Command::Rank { .. } => self.rank(),
            Command::ArTriangle { recognize, .. } => self.ar_triangle(*recognize),
            _ => unreachable!("handled before a field is chosen"),
        }
    }

    fn hom(&self, dims_only: bool, radical: bool) -> Result<Report> {
        let name = if radical { "rad" } else { "Hom" };
        if self.objects.i.is_none() && self.files.source.is_none() {
            let t = self
                .spec
                .as_ref()
                .ok_or_else(|| MfError::InvalidInput("give --spec or an MFJSON file".into()))?;
            let objs: Vec<Mf<F>> = catalog_all(t, &self.field)?
                .into_iter()
                .map(|e| Arc::new(e.factorization))
                .collect();
            let mut s = format!("dim {name}(M_i, M_j) for {t}\n");
            for m in &objs {
                let row = objs
                    .iter()
                    .map(|n| self.dim(m, n, radical).map(|d| d.to_string()))
                    .collect::<Result<Vec<_>>>()?;
                let _ = writeln!(s, "{}", row.join(" "));
            }
            return Ok(Report::ok(s));
        }
        let (lm, m) = self.first()?;
        let (ln, n) = self.second()?;
        let basis = if radical {
            self.cx.radical_space(&m, &n)?.basis
        } else {
            self.cx.hom(&m, &n)?.basis().to_vec()
        };
        let mut s = format!("dim {name}({lm}, {ln}) = {}\n", basis.len());
        if !dims_only {
            for (k, phi) in basis.iter().enumerate() {
                let _ = writeln!(s, "[{}] X = {}", k + 1, json_matrix(&m, phi.x()));
                let _ = writeln!(s, "[{}] Y = {}", k + 1, json_matrix(&m, phi.y()));
            }
        }
        Ok(Report::ok(s))
    }

    fn dim(&self, m: &Mf<F>, n: &Mf<F>, radical: bool) -> Result<usize> {
        if radical {
            Ok(self.cx.radical_space(m, n)?.dim())
        } else {
            self.cx.hom_dim(m, n)
        }
    }

    fn nullhomotopic(&self, morphism: &str) -> Result<Report> {
        let (_, m) = self.first()?;
        let phi = match morphism {
            "id" => Morphism::identity(&m),
            "f*id" => Morphism::identity(&m).scale_poly(m.f()),
            path => {
                let (_, n) = self.second()?;
                let mj = parse_morphism(&read(path)?)?;
                let x = PolyMatrix::parse(m.ring(), &mj.x)?;
                let y = PolyMatrix::parse(m.ring(), &mj.y)?;
                Morphism::new(m.clone(), n, x, y)?
            }
        };
        Ok(match self.cx.is_null_homotopic(&phi)? {
            Some(h) => {
                let mut s = String::from("NULL-HOMOTOPIC\n");
                let _ = writeln!(s, "H_A = {}", json_matrix(&m, &h.h_a));
                let _ = writeln!(s, "H_B = {}", json_matrix(&m, &h.h_b));
                Report::ok(s)
            }
            None => Report {
                text: "NOT NULL-HOMOTOPIC\n".into(),
                verdict: false,
            },
        })
    }

    fn rank(&self) -> Result<Report> {
        if self.objects.i.is_none() && self.files.source.is_none() {
            let t = self
                .spec
                .as_ref()
                .ok_or_else(|| MfError::InvalidInput("give --spec or an MFJSON file".into()))?;
            let mut s = String::new();
            for e in catalog_all(t, &self.field)? {
                let _ = writeln!(s, "rk M{} = {}", e.index, e.factorization.mcm_rank());
            }
            return Ok(Report::ok(s));
        }
        let (l, m) = self.first()?;
        Ok(Report::ok(format!("rk {l} = {}\n", m.mcm_rank())))
    }

    fn ar_triangle(&self, recognize: bool) -> Result<Report> {
        let (l, m) = self.first()?;
        let tri = self.cx.ar_triangle(&m)?;
        let middle = Arc::new(tri.middle.reduce_constant_pivots());
        let mut s = format!("AR triangle ending in {l}\n");
        let _ = writeln!(s, "socle dimension: {}", tri.socle_dim);
        let _ = writeln!(
            s,
            "middle size: {} (after reduction {})",
            tri.middle.size(),
            middle.size()
        );
        if recognize {
            let t = self
                .spec
                .as_ref()
                .ok_or_else(|| MfError::InvalidInput("--recognize needs --spec".into()))?;
            let objs: Vec<Mf<F>> = catalog_all(t, &self.field)?
                .into_iter()
                .map(|e| Arc::new(e.factorization))
                .collect();
            let counts = self.cx.decompose(&middle, &objs)?;
            let parts: Vec<String> = counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, &c)| {
                    if c == 1 {
                        format!("M{}", i + 1)
                    } else {
                        format!("{c}*M{}", i + 1)
                    }
                })
                .collect();
            let shown = if parts.is_empty() {
                "0".to_string()
            } else {
                parts.join(" + ")
            };
            let _ = writeln!(s, "middle = {shown}");
        }
        Ok(Report::ok(s))
    }
}

#[cfg(test)]
mod tests;
