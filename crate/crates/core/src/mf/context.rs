use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::factorization::MatrixFactorization;
use super::hom::HomSpace;
use super::linalg::{flatten_pair, independent_subset, random_invertible_point, symbolic_pencil};
use super::morphism::{Homotopy, Morphism};
use crate::algebra::{Field, KMatrix, Poly};
use crate::error::{MfError, Result};
use crate::groebner::{compute_gb, GbConfig, MVec};

type Mf<F> = Arc<MatrixFactorization<F>>;
type HomKey<F> = (MatrixFactorization<F>, MatrixFactorization<F>);

const RANDOM_TRIES: usize = 4;

/// Shared state for homotopy-category computations: engine limits, the
/// random seed, and a cache of Hom spaces that tolerates concurrent use.
pub struct MfContext<F: Field> {
    cfg: GbConfig,
    seed: u64,
    cache: Mutex<HashMap<HomKey<F>, Arc<HomSpace<F>>>>,
}

/// A basis of rad(M, N) with coordinates in the basis of Hom(M, N).
#[derive(Debug, Clone)]
pub struct Radical<F: Field> {
    pub hom: Arc<HomSpace<F>>,
    pub basis: Vec<Morphism<F>>,
    pub coordinates: Vec<Vec<F::Elem>>,
}

impl<F: Field> Radical<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Dimensions of rad(M, N) and rad(M, N)/rad²(M, N).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadDims {
    pub rad: usize,
    pub rad2: usize,
}

impl RadDims {
    /// Number of irreducible maps, dim rad/rad².
    pub fn irreducible(&self) -> usize {
        self.rad - self.rad2
    }
}

/// The data of an almost split triangle M → ... : ψ generating the socle of
/// Hom(M, τM[1]) and a representative of the middle term.
#[derive(Debug, Clone)]
pub struct ArTriangle<F: Field> {
    pub psi: Morphism<F>,
    pub middle: MatrixFactorization<F>,
    pub socle_dim: usize,
    /// Set when rad End(M) = 0, so any nonzero ψ qualifies.
    pub degenerate: bool,
}

/// The eigenvalue of the constant part of an endomorphism.
pub fn eigenvalue<F: Field>(phi: &Morphism<F>) -> Result<F::Elem> {
    phi.x0().unique_eigenvalue()
}

/// Whether det X_0 and det Y_0 are both nonzero.
pub fn is_isomorphism<F: Field>(phi: &Morphism<F>) -> Result<bool> {
    let (s, t) = (phi.source(), phi.target());
    if s.size() != t.size() {
        return Ok(false);
    }
    if !s.reduced_entries() || !t.reduced_entries() {
        return Err(MfError::PreconditionViolated(
            "isomorphism test needs factorizations without constant terms".into(),
        ));
    }
    let k = phi.field();
    Ok(!k.is_zero(&phi.x0().det()) && !k.is_zero(&phi.y0().det()))
}

impl<F: Field> MfContext<F> {
    pub fn new(cfg: GbConfig, seed: u64) -> Self {
        MfContext {
            cfg,
            seed,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Limits from MFKIT_GB_MAXDEG and seed from MFKIT_SEED.
    pub fn from_env() -> Self {
        let seed = std::env::var("MFKIT_SEED")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(0);
        MfContext::new(GbConfig::from_env(), seed)
    }

    pub fn config(&self) -> GbConfig {
        self.cfg
    }
    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    pub fn hom(&self, m: &Mf<F>, n: &Mf<F>) -> Result<Arc<HomSpace<F>>> {
        let key = ((**m).clone(), (**n).clone());
        if let Some(h) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(h.clone());
        }
        let h = Arc::new(HomSpace::compute(m, n, self.cfg, None)?);
        Ok(self
            .cache
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert(h)
            .clone())
    }

    pub fn hom_dim(&self, m: &Mf<F>, n: &Mf<F>) -> Result<usize> {
        Ok(self.hom(m, n)?.dim())
    }

    pub fn is_null_homotopic(&self, phi: &Morphism<F>) -> Result<Option<Homotopy<F>>> {
        self.hom(phi.source(), phi.target())?.null_homotopy(phi)
    }

    pub fn coordinates(&self, phi: &Morphism<F>) -> Result<Vec<F::Elem>> {
        self.hom(phi.source(), phi.target())?.coordinates(phi)
    }

    pub fn relations(&self, morphisms: &[Morphism<F>]) -> Result<Vec<Vec<F::Elem>>> {
        let Some(first) = morphisms.first() else {
            return Ok(Vec::new());
        };
        self.hom(first.source(), first.target())?
            .relations(morphisms)
    }

    /// Decides M ≅ N in the homotopy category. The strict flag adds the
    /// Rabinowitsch ideal test on top of the generic determinant.
    pub fn iso_test(&self, m: &Mf<F>, n: &Mf<F>, strict: bool) -> Result<bool> {
        m.check_same_hypersurface(n)?;
        if !m.reduced_entries() || !n.reduced_entries() {
            return Err(MfError::PreconditionViolated(
                "isomorphism test needs factorizations without constant terms".into(),
            ));
        }
        if m.size() != n.size() {
            return Ok(false);
        }
        let h = self.hom(m, n)?;
        let back = self.hom(n, m)?;
        if h.dim() != back.dim() || h.dim() == 0 {
            return Ok(false);
        }
        let k = m.field();
        let flat: Vec<Vec<F::Elem>> = h
            .basis()
            .iter()
            .map(|p| flatten_pair(&p.x0(), &p.y0()))
            .collect();
        let keep = independent_subset(k, &flat);
        if keep.is_empty() {
            return Ok(false);
        }
        let xs: Vec<KMatrix<F>> = keep.iter().map(|&i| h.basis()[i].x0()).collect();
        let ys: Vec<KMatrix<F>> = keep.iter().map(|&i| h.basis()[i].y0()).collect();
        let l = xs.len();

        if !strict && random_invertible_point(k, &xs, &ys, &mut self.rng(1), RANDOM_TRIES) {
            return Ok(true);
        }
        let dx = symbolic_pencil(k, &xs, l + 2).det();
        let dy = symbolic_pencil(k, &ys, l + 2).det();
        let generic = !dx.is_zero() && !dy.is_zero();
        if !strict {
            return Ok(generic);
        }
        let one = Poly::one(k, l + 2);
        let gens = [
            &(&Poly::var(k, l + 2, l) * &dx) - &one,
            &(&Poly::var(k, l + 2, l + 1) * &dy) - &one,
        ];
        let raw: Vec<MVec<F>> = gens
            .iter()
            .map(|g| MVec::from_polys(std::slice::from_ref(g)))
            .collect();
        let (gb, _) = compute_gb(k, l + 2, 1, &raw, false, self.cfg)?;
        let verdict = !gb.is_unit();
        debug_assert_eq!(verdict, generic);
        Ok(verdict)
    }

    /// rad(M, N) for indecomposable M and N.
    pub fn radical_space(&self, m: &Mf<F>, n: &Mf<F>) -> Result<Radical<F>> {
        let h = self.hom(m, n)?;
        let k = m.field();
        let unit = |i: usize| -> Vec<F::Elem> {
            (0..h.dim())
                .map(|j| if i == j { k.one() } else { k.zero() })
                .collect()
        };

        if m == n {
            if h.dim() == 0 {
                return Ok(Radical {
                    hom: h,
                    basis: Vec::new(),
                    coordinates: Vec::new(),
                });
            }
            let id = h.coordinates(&Morphism::identity(m))?;
            let mut vecs = Vec::with_capacity(h.dim());
            for (i, phi) in h.basis().iter().enumerate() {
                let lambda = eigenvalue(phi)?;
                vecs.push(
                    unit(i)
                        .iter()
                        .zip(&id)
                        .map(|(e, c)| k.sub(e, &k.mul(&lambda, c)))
                        .collect::<Vec<_>>(),
                );
            }
            let keep = independent_subset(k, &vecs);
            if keep.len() + 1 != h.dim() {
                return Err(MfError::NotScalarPlusNilpotent(format!(
                    "radical has dimension {} in an endomorphism space of dimension {}",
                    keep.len(),
                    h.dim()
                )));
            }
            let coordinates: Vec<Vec<F::Elem>> =
                keep.into_iter().map(|i| vecs[i].clone()).collect();
            let basis = coordinates.iter().map(|c| h.combination(c)).collect();
            return Ok(Radical {
                hom: h,
                basis,
                coordinates,
            });
        }

        if !self.iso_test(m, n, false)? {
            let coordinates: Vec<Vec<F::Elem>> = (0..h.dim()).map(unit).collect();
            return Ok(Radical {
                basis: h.basis().to_vec(),
                hom: h,
                coordinates,
            });
        }
        let pairing = self.pairing(m, n)?;
        let coordinates = pairing.kernel_basis();
        let basis = coordinates.iter().map(|c| h.combination(c)).collect();
        Ok(Radical {
            hom: h,
            basis,
            coordinates,
        })
    }

    /// P_{ba} = eigenvalue(ψ_b ∘ φ_a) over bases φ of Hom(M, E) and ψ of Hom(E, M).
    fn pairing(&self, m: &Mf<F>, e: &Mf<F>) -> Result<KMatrix<F>> {
        if !m.reduced_entries() {
            return Err(MfError::PreconditionViolated(
                "indecomposable needs reduced entries".into(),
            ));
        }
        let k = m.field();
        let to = self.hom(m, e)?;
        let from = self.hom(e, m)?;
        let rows: Vec<Result<Vec<F::Elem>>> = from
            .basis()
            .par_iter()
            .map(|psi| {
                to.basis()
                    .iter()
                    .map(|phi| eigenvalue(&psi.after(phi)?))
                    .collect::<Result<Vec<_>>>()
            })
            .collect();
        let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Ok(KMatrix::zeros(k, 0, to.dim()));
        }
        Ok(KMatrix::from_rows(k, rows))
    }

    /// The multiplicity of the indecomposable M as a summand of E.
    pub fn multiplicity(&self, m: &Mf<F>, e: &Mf<F>) -> Result<usize> {
        m.check_same_hypersurface(e)?;
        Ok(self.pairing(m, e)?.rank())
    }

    /// A representative of the complement of one copy of M in E, namely the
    /// cone of a split monomorphism M → E.
    pub fn split_summand(&self, m: &Mf<F>, e: &Mf<F>) -> Result<MatrixFactorization<F>> {
        m.check_same_hypersurface(e)?;
        let p = self.pairing(m, e)?;
        let before = p.rank();
        let to = self.hom(m, e)?;
        let k = m.field();
        let found = (0..p.rows()).find_map(|b| (0..p.cols()).find(|&a| !k.is_zero(p.get(b, a))));
        let Some(a) = found else {
            return Err(MfError::NotASummand(
                "no split monomorphism into the object".into(),
            ));
        };
        let complement = to.basis()[a].cone();
        let check = Arc::new(complement.reduce_constant_pivots());
        let after = self.multiplicity(m, &check)?;
        if after + 1 != before {
            return Err(MfError::NotASummand(format!(
                "complement has multiplicity {after}, expected {}",
                before - 1
            )));
        }
        Ok(complement)
    }

    /// Multiplicities of each candidate in E, checked against Hom dimensions.
    pub fn decompose(&self, e: &Mf<F>, candidates: &[Mf<F>]) -> Result<Vec<usize>> {
        let mults = candidates
            .par_iter()
            .map(|c| self.multiplicity(c, e))
            .collect::<Result<Vec<_>>>()?;
        let dims = self.hom_matrix(candidates)?;
        for (j, cj) in candidates.iter().enumerate() {
            let out = self.hom_dim(e, cj)?;
            let into = self.hom_dim(cj, e)?;
            let expect_out: usize = (0..candidates.len()).map(|i| mults[i] * dims[i][j]).sum();
            let expect_in: usize = (0..candidates.len()).map(|i| mults[i] * dims[j][i]).sum();
            if out != expect_out || into != expect_in {
                return Err(MfError::UnrecognizedSummand(format!(
                    "Hom dimensions against candidate {j} are ({out}, {into}), the recognized summands give ({expect_out}, {expect_in})"
                )));
            }
        }
        Ok(mults)
    }

    /// dim Hom(M_i, M_j) for all ordered pairs.
    pub fn hom_matrix(&self, objs: &[Mf<F>]) -> Result<Vec<Vec<usize>>> {
        let pairs: Vec<(usize, usize)> = (0..objs.len())
            .flat_map(|i| (0..objs.len()).map(move |j| (i, j)))
            .collect();
        let dims = pairs
            .par_iter()
            .map(|&(i, j)| self.hom_dim(&objs[i], &objs[j]))
            .collect::<Result<Vec<_>>>()?;
        Ok(dims.chunks(objs.len().max(1)).map(|c| c.to_vec()).collect())
    }

    /// dim rad and dim rad² for every ordered pair of the given pairwise
    /// non-isomorphic indecomposables.
    pub fn rad_power_dims(&self, objs: &[Mf<F>]) -> Result<Vec<Vec<RadDims>>> {
        let count = objs.len();
        let pairs: Vec<(usize, usize)> = (0..count)
            .flat_map(|i| (0..count).map(move |j| (i, j)))
            .collect();
        let rads = pairs
            .par_iter()
            .map(|&(i, j)| self.radical_space(&objs[i], &objs[j]))
            .collect::<Result<Vec<_>>>()?;
        let rad = |i: usize, j: usize| &rads[i * count + j];
        let out = pairs
            .par_iter()
            .map(|&(i, j)| {
                let target = rad(i, j);
                let mut vectors = Vec::new();
                for l in 0..count {
                    for phi in &rad(i, l).basis {
                        for psi in &rad(l, j).basis {
                            vectors.push(target.hom.coordinates(&psi.after(phi)?)?);
                        }
                    }
                }
                let rad2 = independent_subset(objs[i].field(), &vectors).len();
                Ok(RadDims {
                    rad: target.dim(),
                    rad2,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(out.chunks(count.max(1)).map(|c| c.to_vec()).collect())
    }

    /// The Auslander–Reiten translate in Krull dimension `d`: the shift by d − 2.
    pub fn ar_translate(m: &MatrixFactorization<F>, d: usize) -> MatrixFactorization<F> {
        if d.is_multiple_of(2) {
            m.clone()
        } else {
            m.shift()
        }
    }

    /// Almost split triangle ending in M for a surface singularity.
    pub fn ar_triangle(&self, m: &Mf<F>) -> Result<ArTriangle<F>> {
        self.ar_triangle_in_dimension(m, 2)
    }

    pub fn ar_triangle_in_dimension(&self, m: &Mf<F>, d: usize) -> Result<ArTriangle<F>> {
        if !m.reduced_entries() {
            return Err(MfError::PreconditionViolated(
                "AR triangle needs reduced entries".into(),
            ));
        }
        let k = m.field();
        let rad = self.radical_space(m, m)?;
        let target = Arc::new(Self::ar_translate(m, d).shift());
        let h = self.hom(m, &target)?;
        let n = h.dim();
        if n == 0 {
            return Err(MfError::SocleEmpty);
        }
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for phi in &rad.basis {
            let cols = h
                .basis()
                .iter()
                .map(|psi| h.coordinates(&psi.after(phi)?))
                .collect::<Result<Vec<_>>>()?;
            for r in 0..n {
                rows.push(cols.iter().map(|c| c[r].clone()).collect());
            }
        }
        let kernel = if rows.is_empty() {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { k.one() } else { k.zero() })
                        .collect()
                })
                .collect()
        } else {
            KMatrix::from_rows(k, rows).kernel_basis()
        };
        let Some(lambda) = kernel.first() else {
            return Err(MfError::SocleEmpty);
        };
        let psi = h.combination(lambda);
        if h.null_homotopy(&psi)?.is_some() {
            return Err(MfError::SocleEmpty);
        }
        for phi in &rad.basis {
            let comp = psi.after(phi)?;
            assert!(
                h.null_homotopy(&comp)?.is_some(),
                "ψ annihilates the radical"
            );
        }
        Ok(ArTriangle {
            middle: psi.cone().shift(),
            psi,
            socle_dim: kernel.len(),
            degenerate: rad.basis.is_empty(),
        })
    }

    /// Some(true) iff End(M) is local, decided by the generic unit test on
    /// the radical; None when M has constant entries.
    pub fn is_indecomposable(&self, m: &Mf<F>) -> Result<Option<bool>> {
        if !m.reduced_entries() {
            return Ok(None);
        }
        let h = self.hom(m, m)?;
        if h.dim() == 0 {
            return Ok(Some(false));
        }
        let rad = match self.radical_space(m, m) {
            Ok(r) => r,
            Err(MfError::NotScalarPlusNilpotent(_)) => return Ok(Some(false)),
            Err(e) => return Err(e),
        };
        if rad.basis.is_empty() {
            return Ok(Some(true));
        }
        let k = m.field();
        let xs: Vec<KMatrix<F>> = rad.basis.iter().map(|p| p.x0()).collect();
        let ys: Vec<KMatrix<F>> = rad.basis.iter().map(|p| p.y0()).collect();
        if random_invertible_point(k, &xs, &ys, &mut self.rng(2), RANDOM_TRIES) {
            return Ok(Some(false));
        }
        let l = xs.len();
        let product = &symbolic_pencil(k, &xs, l).det() * &symbolic_pencil(k, &ys, l).det();
        Ok(Some(product.is_zero()))
    }
}
