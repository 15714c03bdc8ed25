//! Gröbner bases for submodules of free modules S^n over a polynomial ring,
//! with normal forms, syzygies, lifts, colon ideals and standard monomials.

mod engine;
pub(crate) mod mvec;

use std::collections::BTreeMap;

use engine::Engine;
pub(crate) use mvec::MVec;
use mvec::{axpy, Term};

use crate::algebra::{Field, Monomial, Poly};
use crate::error::{MfError, Result};

/// Engine limits. `max_degree` caps the leading-term degree of any new
/// basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbConfig {
    pub max_degree: u32,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { max_degree: 64 }
    }
}

impl GbConfig {
    /// Reads `MFKIT_GB_MAXDEG`, falling back to the default of 64.
    pub fn from_env() -> Self {
        let max_degree = std::env::var("MFKIT_GB_MAXDEG")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(64);
        GbConfig { max_degree }
    }
}

/// An element of S^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeVector<F: Field> {
    comps: Vec<Poly<F>>,
}

impl<F: Field> FreeVector<F> {
    pub fn new(comps: Vec<Poly<F>>) -> Self {
        assert!(
            !comps.is_empty(),
            "free vectors need at least one component"
        );
        FreeVector { comps }
    }

    pub fn zero(field: &F, nvars: usize, rank: usize) -> Self {
        FreeVector {
            comps: vec![Poly::zero(field, nvars); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn field(&self) -> &F {
        self.comps[0].field()
    }

    pub fn nvars(&self) -> usize {
        self.comps[0].nvars()
    }

    pub fn comps(&self) -> &[Poly<F>] {
        &self.comps
    }

    pub fn get(&self, i: usize) -> &Poly<F> {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        FreeVector::new(
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        FreeVector::new(
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn mul_poly(&self, p: &Poly<F>) -> Self {
        FreeVector::new(self.comps.iter().map(|a| a * p).collect())
    }

    /// Leading (monomial, component, coefficient) under the module order.
    pub fn lead(&self) -> Option<(Monomial, usize, F::Elem)> {
        MVec::from_polys(&self.comps)
            .lead()
            .map(|t| (t.mon.clone(), t.comp as usize, t.coeff.clone()))
    }

    pub(crate) fn to_mvec(&self) -> MVec<F> {
        MVec::from_polys(&self.comps)
    }

    pub(crate) fn from_mvec(v: &MVec<F>, field: &F, nvars: usize, rank: usize) -> Self {
        FreeVector::new(v.to_polys(field, nvars, rank))
    }
}

/// `Σ h_i · gens_i`.
pub fn combine<F: Field>(coeffs: &[Poly<F>], gens: &[FreeVector<F>], rank: usize) -> FreeVector<F> {
    let (field, nvars) = match (coeffs.first(), gens.first()) {
        (Some(c), _) => (c.field().clone(), c.nvars()),
        (None, Some(g)) => (g.field().clone(), g.nvars()),
        (None, None) => panic!("empty combination has no ring"),
    };
    let mut acc = FreeVector::zero(&field, nvars, rank);
    for (h, g) in coeffs.iter().zip(gens) {
        if !h.is_zero() {
            acc = acc.add(&g.mul_poly(h));
        }
    }
    acc
}

/// A reduced, monic Gröbner basis of a submodule of S^rank. When built with
/// tracking, every element carries its expression in the input generators.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    nvars: usize,
    rank: usize,
    elems: Vec<MVec<F>>,
    tails: Option<Vec<MVec<F>>>,
    ngens: usize,
    by_comp: BTreeMap<u32, Vec<usize>>,
}

impl<F: Field> GroebnerBasis<F> {
    fn from_parts(
        field: &F,
        nvars: usize,
        rank: usize,
        elems: Vec<MVec<F>>,
        tails: Option<Vec<MVec<F>>>,
        ngens: usize,
    ) -> Self {
        let mut by_comp: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, e) in elems.iter().enumerate() {
            by_comp
                .entry(e.lead().expect("nonzero").comp)
                .or_default()
                .push(i);
        }
        GroebnerBasis {
            field: field.clone(),
            nvars,
            rank,
            elems,
            tails,
            ngens,
            by_comp,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn len(&self) -> usize {
        self.elems.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
    pub fn has_tails(&self) -> bool {
        self.tails.is_some()
    }

    pub fn elements(&self) -> Vec<FreeVector<F>> {
        self.elems
            .iter()
            .map(|e| FreeVector::from_mvec(e, &self.field, self.nvars, self.rank))
            .collect()
    }

    /// Leading (monomial, component) pairs.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elems
            .iter()
            .map(|e| {
                let t = e.lead().expect("nonzero");
                (t.mon.clone(), t.comp as usize)
            })
            .collect()
    }

    /// Whether the basis is {1} in some component, i.e. the unit ideal when rank is 1.
    pub fn is_unit(&self) -> bool {
        self.rank == 1
            && self
                .elems
                .iter()
                .any(|e| e.lead().expect("nonzero").mon.is_one())
    }

    fn find_reducer(&self, mon: &Monomial, comp: u32) -> Option<usize> {
        self.by_comp
            .get(&comp)?
            .iter()
            .copied()
            .find(|&g| self.elems[g].lead().expect("nonzero").mon.divides(mon))
    }

    /// Full reduction; when `tail` is given, accumulates `Σ c·m·tail_g` so that
    /// `result = v + tail·gens` holds afterwards.
    pub(crate) fn reduce_mvec(&self, v: MVec<F>, mut tail: Option<&mut MVec<F>>) -> MVec<F> {
        let k = &self.field;
        let mut p = v.terms;
        let mut rem: Vec<Term<F>> = Vec::new();
        let mut i = 0;
        while i < p.len() {
            match self.find_reducer(&p[i].mon, p[i].comp) {
                Some(g) => {
                    let ge = &self.elems[g];
                    let q = ge
                        .lead()
                        .expect("nonzero")
                        .mon
                        .quotient(&p[i].mon)
                        .expect("divides");
                    let c = k.neg(&p[i].coeff);
                    if let (Some(t), Some(tails)) = (tail.as_deref_mut(), self.tails.as_ref()) {
                        *t = t.add_mul(k, &tails[g], &q, &c);
                    }
                    p = axpy(k, &p[i..], &ge.terms, &q, &c);
                    i = 0;
                }
                None => {
                    rem.push(p[i].clone());
                    i += 1;
                }
            }
        }
        MVec { terms: rem }
    }

    /// The normal form: no term is divisible by a leading term of the basis.
    pub fn normal_form(&self, v: &FreeVector<F>) -> FreeVector<F> {
        assert_eq!(v.rank(), self.rank, "ambient rank mismatch");
        let r = self.reduce_mvec(v.to_mvec(), None);
        FreeVector::from_mvec(&r, &self.field, self.nvars, self.rank)
    }

    pub fn contains(&self, v: &FreeVector<F>) -> bool {
        self.reduce_mvec(v.to_mvec(), None).is_zero()
    }

    /// Coefficients h with `Σ h_i gens_i = v`, if `v` lies in the submodule.
    /// Requires a basis built with tracking.
    pub fn lift(&self, v: &FreeVector<F>) -> Option<Vec<Poly<F>>> {
        assert!(
            self.tails.is_some(),
            "lift needs a basis built with tracking"
        );
        let mut tail = MVec::zero();
        let r = self.reduce_mvec(v.to_mvec(), Some(&mut tail));
        if !r.is_zero() {
            return None;
        }
        let neg = tail.scale(&self.field, &self.field.neg(&self.field.one()));
        Some(neg.to_polys(&self.field, self.nvars, self.ngens))
    }

    pub(crate) fn lift_mvec(&self, v: MVec<F>) -> Option<MVec<F>> {
        let mut tail = MVec::zero();
        let r = self.reduce_mvec(v, Some(&mut tail));
        if !r.is_zero() {
            return None;
        }
        Some(tail.scale(&self.field, &self.field.neg(&self.field.one())))
    }

    /// Checks that every S-vector of basis elements reduces to zero.
    pub fn buchberger_criterion_holds(&self) -> bool {
        let k = &self.field;
        let one = k.one();
        let mone = k.neg(&one);
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (li, lj) = (self.elems[i].lead().unwrap(), self.elems[j].lead().unwrap());
                if li.comp != lj.comp {
                    continue;
                }
                let l = li.mon.lcm(&lj.mon);
                let mi = li.mon.quotient(&l).unwrap();
                let mj = lj.mon.quotient(&l).unwrap();
                let s = axpy(
                    k,
                    &axpy(k, &[], &self.elems[i].terms, &mi, &one),
                    &self.elems[j].terms,
                    &mj,
                    &mone,
                );
                if !self.reduce_mvec(MVec { terms: s }, None).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// A submodule of S^rank given by generators, with an optional basis.
#[derive(Clone, Debug)]
pub struct Submodule<F: Field> {
    rank: usize,
    gens: Vec<FreeVector<F>>,
    gb: Option<GroebnerBasis<F>>,
}

impl<F: Field> Submodule<F> {
    pub fn new(rank: usize, gens: Vec<FreeVector<F>>) -> Self {
        assert!(rank >= 1, "ambient rank must be positive");
        assert!(
            gens.iter().all(|g| g.rank() == rank),
            "ambient rank mismatch"
        );
        Submodule {
            rank,
            gens,
            gb: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[FreeVector<F>] {
        &self.gens
    }

    pub fn gb(&self) -> Option<&GroebnerBasis<F>> {
        self.gb.as_ref()
    }
}

fn ring_of<F: Field>(gens: &[FreeVector<F>]) -> Option<(F, usize)> {
    gens.first().map(|g| (g.field().clone(), g.nvars()))
}

/// Runs the engine on raw module vectors. Generators are processed in
/// increasing order of their leading terms.
pub(crate) fn compute_gb<F: Field>(
    field: &F,
    nvars: usize,
    rank: usize,
    gens: &[MVec<F>],
    track: bool,
    cfg: GbConfig,
) -> Result<(GroebnerBasis<F>, Vec<MVec<F>>)> {
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by(|&a, &b| match (gens[a].lead(), gens[b].lead()) {
        (None, None) => std::cmp::Ordering::Equal,
        (None, Some(_)) => std::cmp::Ordering::Less,
        (Some(_), None) => std::cmp::Ordering::Greater,
        (Some(x), Some(y)) => mvec::cmp_pos(&x.mon, x.comp, &y.mon, y.comp),
    });
    let mut eng = Engine::new(field, cfg.max_degree, track, rank == 1);
    for i in order {
        let tail = if track {
            MVec::unit(nvars, i as u32, field)
        } else {
            MVec::zero()
        };
        eng.add_generator(gens[i].clone(), tail)?;
    }
    eng.run()?;
    let (elems, syz) = eng.finish();
    let (vecs, tails): (Vec<_>, Vec<_>) = elems.into_iter().map(|e| (e.vec, e.tail)).unzip();
    let gb =
        GroebnerBasis::from_parts(field, nvars, rank, vecs, track.then_some(tails), gens.len());
    Ok((gb, syz))
}

/// The reduced Gröbner basis of the submodule.
pub fn groebner_basis<F: Field>(sub: &Submodule<F>, cfg: GbConfig) -> Result<Submodule<F>> {
    let mut out = sub.clone();
    out.gb = Some(basis_of(sub.rank, &sub.gens, false, cfg)?);
    Ok(out)
}

/// Gröbner basis of the generators, optionally tracking cofactors.
pub fn basis_of<F: Field>(
    rank: usize,
    gens: &[FreeVector<F>],
    track: bool,
    cfg: GbConfig,
) -> Result<GroebnerBasis<F>> {
    let Some((field, nvars)) = ring_of(gens) else {
        return Err(MfError::InvalidInput(
            "a basis needs at least one generator to fix the ring".into(),
        ));
    };
    let raw: Vec<MVec<F>> = gens.iter().map(|g| g.to_mvec()).collect();
    Ok(compute_gb(&field, nvars, rank, &raw, track, cfg)?.0)
}

/// NF(v) with respect to the basis of `w`.
pub fn normal_form<F: Field>(v: &FreeVector<F>, w: &GroebnerBasis<F>) -> FreeVector<F> {
    w.normal_form(v)
}

/// Coefficients h with Σ h_i gens_i = v, verified by multiplication.
pub fn member_with_lift<F: Field>(
    v: &FreeVector<F>,
    gens: &[FreeVector<F>],
    cfg: GbConfig,
) -> Result<Option<Vec<Poly<F>>>> {
    if gens.is_empty() {
        return Ok(if v.is_zero() { Some(Vec::new()) } else { None });
    }
    let gb = basis_of(v.rank(), gens, true, cfg)?;
    let lift = gb.lift(v);
    if let Some(h) = &lift {
        assert_eq!(&combine(h, gens, v.rank()), v, "lift reproduces the input");
    }
    Ok(lift)
}

/// Generators of the module of relations among `gens`, each verified.
pub fn syzygies<F: Field>(gens: &[FreeVector<F>], cfg: GbConfig) -> Result<Submodule<F>> {
    let Some((field, nvars)) = ring_of(gens) else {
        return Err(MfError::InvalidInput("syzygies of an empty list".into()));
    };
    let rank = gens[0].rank();
    let raw: Vec<MVec<F>> = gens.iter().map(|g| g.to_mvec()).collect();
    let (_, syz) = compute_gb(&field, nvars, rank, &raw, true, cfg)?;
    let out: Vec<FreeVector<F>> = syz
        .iter()
        .map(|s| FreeVector::from_mvec(s, &field, nvars, gens.len()))
        .collect();
    for s in &out {
        assert!(
            combine(s.comps(), gens, rank).is_zero(),
            "syzygy evaluates to zero"
        );
    }
    Ok(Submodule::new(gens.len(), out))
}

/// Generators of {g : g·v ∈ W}, given a basis of W. The basis is extended
/// by v with a scalar cofactor and the zero reductions are collected.
pub(crate) fn colon_raw<F: Field>(
    w: &GroebnerBasis<F>,
    v: MVec<F>,
    cfg: GbConfig,
) -> Result<Vec<Poly<F>>> {
    let field = &w.field;
    let nvars = w.nvars;
    let mut eng = Engine::new(field, cfg.max_degree, true, false);
    eng.seed_basis(w.elems.iter().map(|e| (e.clone(), MVec::zero())).collect());
    eng.add_generator(v, MVec::unit(nvars, 0, field))?;
    eng.run()?;
    let (_, syz) = eng.finish();
    Ok(syz
        .into_iter()
        .map(|s| s.to_polys(field, nvars, 1).pop().expect("rank one"))
        .collect())
}

/// The colon ideal (W : v) = {g : g·v ∈ W}, returned with its basis.
pub fn colon_module<F: Field>(
    w: &Submodule<F>,
    v: &FreeVector<F>,
    cfg: GbConfig,
) -> Result<Submodule<F>> {
    let field = v.field().clone();
    let nvars = v.nvars();
    if w.gens.is_empty() {
        return Ok(if v.is_zero() {
            unit_ideal(&field, nvars)
        } else {
            Submodule::new(1, Vec::new())
        });
    }
    let owned;
    let gb = match &w.gb {
        Some(gb) => gb,
        None => {
            owned = basis_of(w.rank, &w.gens, false, cfg)?;
            &owned
        }
    };
    let gens: Vec<FreeVector<F>> = colon_raw(gb, v.to_mvec(), cfg)?
        .into_iter()
        .map(|p| FreeVector::new(vec![p]))
        .collect();
    if gens.is_empty() {
        return Ok(Submodule::new(1, gens));
    }
    groebner_basis(&Submodule::new(1, gens), cfg)
}

fn unit_ideal<F: Field>(field: &F, nvars: usize) -> Submodule<F> {
    let one = FreeVector::new(vec![Poly::one(field, nvars)]);
    let gb = GroebnerBasis::from_parts(field, nvars, 1, vec![one.to_mvec()], None, 1);
    Submodule {
        rank: 1,
        gens: vec![one],
        gb: Some(gb),
    }
}

/// Standard monomials of a zero-dimensional quotient S^rank / W.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StdMonomialBasis {
    pub rank: usize,
    pub monomials: Vec<(Monomial, usize)>,
}

impl StdMonomialBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }
    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

/// Enumerates the (monomial, component) pairs outside the leading-term module.
pub fn std_monomials<F: Field>(gb: &GroebnerBasis<F>) -> Result<StdMonomialBasis> {
    let nvars = gb.nvars;
    let mut out = Vec::new();
    for comp in 0..gb.rank {
        let leads: Vec<&Monomial> = gb
            .by_comp
            .get(&(comp as u32))
            .map(|v| {
                v.iter()
                    .map(|&i| &gb.elems[i].lead().expect("nonzero").mon)
                    .collect()
            })
            .unwrap_or_default();
        if leads.iter().any(|m| m.is_one()) {
            continue;
        }
        let mut bounds = vec![u32::MAX; nvars];
        for m in &leads {
            if let Some(v) = m.pure_power_var() {
                bounds[v] = bounds[v].min(m.exponent(v));
            }
        }
        if let Some(v) = bounds.iter().position(|b| *b == u32::MAX) {
            return Err(MfError::NotZeroDimensional(format!(
                "no pure power of variable {} in component {}",
                v + 1,
                comp + 1
            )));
        }
        let mut exps = vec![0u32; nvars];
        loop {
            let m = Monomial::from_exponents(&exps);
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push((m, comp));
            }
            let mut v = 0;
            loop {
                if v == nvars {
                    break;
                }
                exps[v] += 1;
                if exps[v] < bounds[v] {
                    break;
                }
                exps[v] = 0;
                v += 1;
            }
            if v == nvars {
                break;
            }
        }
    }
    out.sort_by(|a, b| mvec::cmp_pos(&a.0, a.1 as u32, &b.0, b.1 as u32));
    Ok(StdMonomialBasis {
        rank: gb.rank,
        monomials: out,
    })
}

#[cfg(test)]
mod tests;
