use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::factorization::MatrixFactorization;
use super::linalg::Echelon;
use super::morphism::{Homotopy, Morphism};
use crate::algebra::{Field, KMatrix, Monomial, Poly, PolyMatrix};
use crate::error::{MfError, Result};
use crate::groebner::mvec::Term;
use crate::groebner::{colon_raw, compute_gb, std_monomials, GbConfig, GroebnerBasis, MVec};

type Mf<F> = Arc<MatrixFactorization<F>>;

/// A K-basis of Hom(M, N) in the homotopy category, with the normal-form
/// data needed to express any morphism in that basis.
#[derive(Debug)]
pub struct HomSpace<F: Field> {
    source: Mf<F>,
    target: Mf<F>,
    basis: Vec<Morphism<F>>,
    nf_support: Vec<(Monomial, usize)>,
    support_index: HashMap<(Monomial, u32), usize>,
    nf_matrix: KMatrix<F>,
    pivot_rows: Vec<usize>,
    pivot_inverse: KMatrix<F>,
    beta_gb: Option<GroebnerBasis<F>>,
    c_gens: Vec<MVec<F>>,
    c_tracked: OnceLock<Result<GroebnerBasis<F>>>,
    cfg: GbConfig,
}

fn columns<F: Field>(m: &PolyMatrix<F>) -> Vec<MVec<F>> {
    (0..m.cols())
        .map(|c| {
            let col: Vec<Poly<F>> = (0..m.rows()).map(|r| m.get(r, c).clone()).collect();
            MVec::from_polys(&col)
        })
        .collect()
}

pub(crate) fn vectorize<F: Field>(x: &PolyMatrix<F>, y: &PolyMatrix<F>) -> MVec<F> {
    let mut polys = x.vectorize();
    polys.extend(y.vectorize());
    MVec::from_polys(&polys)
}

fn split_vector<F: Field>(
    v: &MVec<F>,
    field: &F,
    nvars: usize,
    rows: usize,
    cols: usize,
) -> (PolyMatrix<F>, PolyMatrix<F>) {
    let len = rows * cols;
    let polys = v.to_polys(field, nvars, 2 * len);
    (
        PolyMatrix::from_vector(field, nvars, rows, cols, &polys[..len]),
        PolyMatrix::from_vector(field, nvars, rows, cols, &polys[len..]),
    )
}

/// Keeps the components in `lo..lo+len`, renumbered from zero.
fn slice_components<F: Field>(v: &MVec<F>, lo: usize, len: usize) -> MVec<F> {
    MVec {
        terms: v
            .terms
            .iter()
            .filter(|t| (lo..lo + len).contains(&(t.comp as usize)))
            .map(|t| Term {
                mon: t.mon.clone(),
                comp: t.comp - lo as u32,
                coeff: t.coeff.clone(),
            })
            .collect(),
    }
}

fn relabel<F: Field>(v: &MVec<F>, map: &[usize], field: &F, nvars: usize) -> MVec<F> {
    let polys = v.to_polys(field, nvars, map.len());
    let mut out = vec![Poly::zero(field, nvars); map.len()];
    for (k, p) in polys.into_iter().enumerate() {
        out[map[k]] = p;
    }
    MVec::from_polys(&out)
}

impl<F: Field> HomSpace<F> {
    /// Runs the Hom pipeline. `shuffle` permutes the generator order of the
    /// intermediate syzygy computation, which must not change the result.
    pub fn compute(
        source: &Mf<F>,
        target: &Mf<F>,
        cfg: GbConfig,
        shuffle: Option<u64>,
    ) -> Result<Self> {
        source.check_same_hypersurface(target)?;
        let k = source.field().clone();
        let nv = source.nvars();
        let (m, n) = (source.size(), target.size());
        let mn = m * n;
        let (a, b) = (source.a(), source.b());
        let (a2, b2) = (target.a(), target.b());
        let id_m = PolyMatrix::identity(&k, nv, m);
        let id_n = PolyMatrix::identity(&k, nv, n);

        let i_at = id_n.kronecker(&a.transpose());
        let c_mat_gens: Vec<MVec<F>> = columns(&i_at)
            .into_iter()
            .chain(columns(&b2.kronecker(&id_m)))
            .collect();

        let mut empty = HomSpace {
            source: source.clone(),
            target: target.clone(),
            basis: Vec::new(),
            nf_support: Vec::new(),
            support_index: HashMap::new(),
            nf_matrix: KMatrix::zeros(&k, 0, 0),
            pivot_rows: Vec::new(),
            pivot_inverse: KMatrix::zeros(&k, 0, 0),
            beta_gb: None,
            c_gens: c_mat_gens,
            c_tracked: OnceLock::new(),
            cfg,
        };
        if mn == 0 {
            return Ok(empty);
        }

        // Strict morphisms: syzygies of [I_n ⊗ Aᵀ | −A' ⊗ I_m].
        let mut phi_gens: Vec<MVec<F>> = columns(&i_at)
            .into_iter()
            .chain(columns(&a2.kronecker(&id_m).neg()))
            .collect();
        let mut perm: Vec<usize> = (0..phi_gens.len()).collect();
        if let Some(seed) = shuffle {
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            phi_gens = perm.iter().map(|&i| phi_gens[i].clone()).collect();
        }
        let (_, mut syz) = compute_gb(&k, nv, mn, &phi_gens, true, cfg)?;
        if shuffle.is_some() {
            syz = syz.iter().map(|s| relabel(s, &perm, &k, nv)).collect();
            syz.shuffle(&mut ChaCha8Rng::seed_from_u64(
                shuffle.unwrap_or(0) ^ 0x5eed,
            ));
        }

        let (c_gb, _) = compute_gb(&k, nv, mn, &empty.c_gens, false, cfg)?;

        // For each generator, the standard monomials of (Im C : v(Y_i)).
        let per_gen: Vec<Result<Vec<MVec<F>>>> = syz
            .par_iter()
            .map(|s| {
                let y = slice_components(s, mn, mn);
                if c_gb.reduce_mvec(y.clone(), None).is_zero() {
                    return Ok(Vec::new());
                }
                let colon = colon_raw(&c_gb, y, cfg)?;
                let gens: Vec<MVec<F>> = colon
                    .iter()
                    .map(|p| MVec::from_polys(std::slice::from_ref(p)))
                    .collect();
                let (ideal, _) = compute_gb(&k, nv, 1, &gens, false, cfg)?;
                let std = std_monomials(&ideal).map_err(|e| match e {
                    MfError::NotZeroDimensional(s) => MfError::NotHomFinite(s),
                    other => other,
                })?;
                let one = k.one();
                Ok(std
                    .monomials
                    .iter()
                    .map(|(g, _)| MVec::zero().add_mul(&k, s, g, &one))
                    .collect())
            })
            .collect();
        let mut spanning = Vec::new();
        for r in per_gen {
            spanning.extend(r?);
        }

        // Homotopy relations: the image of β.
        let beta = PolyMatrix::from_blocks(
            &a2.kronecker(&id_m),
            &id_n.kronecker(&b.transpose()),
            &i_at,
            &b2.kronecker(&id_m),
        );
        let (beta_gb, _) = compute_gb(&k, nv, 2 * mn, &columns(&beta), false, cfg)?;

        let nfs: Vec<MVec<F>> = spanning
            .par_iter()
            .map(|v| beta_gb.reduce_mvec(v.clone(), None))
            .collect();
        let mut index: HashMap<(Monomial, u32), usize> = HashMap::new();
        let mut ech = Echelon::new(&k);
        let mut chosen = Vec::new();
        for (i, nf) in nfs.iter().enumerate() {
            if nf.is_zero() {
                continue;
            }
            for t in &nf.terms {
                let next = index.len();
                index.entry((t.mon.clone(), t.comp)).or_insert(next);
            }
            let mut dense = vec![k.zero(); index.len()];
            for t in &nf.terms {
                dense[index[&(t.mon.clone(), t.comp)]] = t.coeff.clone();
            }
            if ech.insert(dense) {
                chosen.push(i);
            }
        }

        let mut support: Vec<(Monomial, u32)> = chosen
            .iter()
            .flat_map(|&i| nfs[i].terms.iter().map(|t| (t.mon.clone(), t.comp)))
            .collect();
        support.sort_by(|x, y| crate::groebner::mvec::cmp_pos(&y.0, y.1, &x.0, x.1));
        support.dedup();
        let support_index: HashMap<(Monomial, u32), usize> = support
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, key)| (key, i))
            .collect();
        let dim = chosen.len();
        let mut nf_matrix = KMatrix::zeros(&k, support.len(), dim);
        for (j, &i) in chosen.iter().enumerate() {
            for t in &nfs[i].terms {
                nf_matrix.set(support_index[&(t.mon.clone(), t.comp)], j, t.coeff.clone());
            }
        }
        let (_, pivot_rows) = nf_matrix.transpose().rref();
        let mut square = KMatrix::zeros(&k, dim, dim);
        for (r, &pr) in pivot_rows.iter().enumerate() {
            for c in 0..dim {
                square.set(r, c, nf_matrix.get(pr, c).clone());
            }
        }
        let pivot_inverse = square.inverse().expect("independent normal forms");

        let basis = chosen
            .iter()
            .map(|&i| {
                let (x, y) = split_vector(&spanning[i], &k, nv, n, m);
                Morphism::new_unchecked(source.clone(), target.clone(), x, y)
            })
            .collect();

        empty.basis = basis;
        empty.nf_support = support
            .into_iter()
            .map(|(mon, c)| (mon, c as usize))
            .collect();
        empty.support_index = support_index;
        empty.nf_matrix = nf_matrix;
        empty.pivot_rows = pivot_rows;
        empty.pivot_inverse = pivot_inverse;
        empty.beta_gb = Some(beta_gb);
        Ok(empty)
    }

    pub fn source(&self) -> &Mf<F> {
        &self.source
    }
    pub fn target(&self) -> &Mf<F> {
        &self.target
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Morphism<F>] {
        &self.basis
    }
    pub fn nf_support(&self) -> &[(Monomial, usize)] {
        &self.nf_support
    }
    pub fn nf_matrix(&self) -> &KMatrix<F> {
        &self.nf_matrix
    }
    /// Gröbner basis of the vectorized null-homotopic morphisms.
    pub fn homotopy_basis(&self) -> Option<&GroebnerBasis<F>> {
        self.beta_gb.as_ref()
    }

    fn check_endpoints(&self, phi: &Morphism<F>) -> Result<()> {
        if phi.source() == &self.source && phi.target() == &self.target {
            Ok(())
        } else {
            Err(MfError::ShapeMismatch(
                "morphism endpoints differ from the Hom space".into(),
            ))
        }
    }

    /// The unique coefficients of φ in the basis, modulo null-homotopic maps.
    pub fn coordinates(&self, phi: &Morphism<F>) -> Result<Vec<F::Elem>> {
        self.check_endpoints(phi)?;
        let k = self.source.field();
        let Some(beta) = &self.beta_gb else {
            return Ok(Vec::new());
        };
        let nf = beta.reduce_mvec(vectorize(phi.x(), phi.y()), None);
        let mut w = vec![k.zero(); self.nf_support.len()];
        for t in &nf.terms {
            match self.support_index.get(&(t.mon.clone(), t.comp)) {
                Some(&i) => w[i] = t.coeff.clone(),
                None => {
                    return Err(MfError::NotAMorphism(
                        "normal form leaves the span of the basis".into(),
                    ))
                }
            }
        }
        let picked: Vec<F::Elem> = self.pivot_rows.iter().map(|&r| w[r].clone()).collect();
        let c = self.pivot_inverse.mul_vec(&picked);
        if self.nf_matrix.mul_vec(&c) != w {
            return Err(MfError::NotAMorphism(
                "normal form leaves the span of the basis".into(),
            ));
        }
        Ok(c)
    }

    /// Σ c_j · basis_j.
    pub fn combination(&self, coeffs: &[F::Elem]) -> Morphism<F> {
        assert_eq!(
            coeffs.len(),
            self.dim(),
            "one coefficient per basis element"
        );
        let mut acc = Morphism::zero(&self.source, &self.target);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !self.source.field().is_zero(c) {
                acc = acc.add(&b.scale(c)).expect("same endpoints");
            }
        }
        acc
    }

    /// A basis of the K-linear relations among the given morphisms.
    pub fn relations(&self, morphisms: &[Morphism<F>]) -> Result<Vec<Vec<F::Elem>>> {
        let k = self.source.field();
        let cols = morphisms
            .iter()
            .map(|p| self.coordinates(p))
            .collect::<Result<Vec<_>>>()?;
        if self.dim() == 0 {
            return Ok((0..morphisms.len())
                .map(|i| {
                    (0..morphisms.len())
                        .map(|j| if i == j { k.one() } else { k.zero() })
                        .collect()
                })
                .collect());
        }
        Ok(KMatrix::from_columns(k, self.dim(), &cols).kernel_basis())
    }

    /// A verified homotopy if φ is null-homotopic.
    pub fn null_homotopy(&self, phi: &Morphism<F>) -> Result<Option<Homotopy<F>>> {
        self.check_endpoints(phi)?;
        let k = self.source.field();
        let nv = self.source.nvars();
        let (m, n) = (self.source.size(), self.target.size());
        let zero = PolyMatrix::zeros(k, nv, n, m);
        if m * n == 0 {
            return Ok(Some(Homotopy {
                h_a: zero.clone(),
                h_b: zero,
            }));
        }
        let gb = self
            .c_tracked
            .get_or_init(|| compute_gb(k, nv, m * n, &self.c_gens, true, self.cfg).map(|r| r.0));
        let gb = gb.as_ref().map_err(|e| e.clone())?;
        let y = MVec::from_polys(&phi.y().vectorize());
        let Some(h) = gb.lift_mvec(y) else {
            return Ok(None);
        };
        let (h_a, h_b) = split_vector(&h, k, nv, n, m);
        let witness = Homotopy { h_a, h_b };
        assert!(phi.is_witnessed_by(&witness), "homotopy witness verified");
        Ok(Some(witness))
    }
}
