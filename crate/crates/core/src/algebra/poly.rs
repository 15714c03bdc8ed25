use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::monomial::Monomial;

/// Sparse multivariate polynomial. Terms are kept sorted by decreasing
/// degrevlex order with no zero coefficients, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    field: F,
    nvars: usize,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Poly<F> {
    pub fn zero(field: &F, nvars: usize) -> Self {
        Poly {
            field: field.clone(),
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: &F, nvars: usize, c: F::Elem) -> Self {
        let mut p = Poly::zero(field, nvars);
        if !field.is_zero(&c) {
            p.terms.push((Monomial::one(nvars), c));
        }
        p
    }

    pub fn one(field: &F, nvars: usize) -> Self {
        Poly::constant(field, nvars, field.one())
    }

    pub fn from_i64(field: &F, nvars: usize, n: i64) -> Self {
        Poly::constant(field, nvars, field.from_i64(n))
    }

    pub fn var(field: &F, nvars: usize, var: usize) -> Self {
        Poly::term(field, Monomial::var(nvars, var), field.one())
    }

    pub fn term(field: &F, mon: Monomial, c: F::Elem) -> Self {
        let nvars = mon.nvars();
        let mut p = Poly::zero(field, nvars);
        if !field.is_zero(&c) {
            p.terms.push((mon, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(field: &F, nvars: usize, mut terms: Vec<(Monomial, F::Elem)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if field.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if field.is_zero(lc) {
                out.pop();
            }
        }
        Poly {
            field: field.clone(),
            nvars,
            terms: out,
        }
    }

    /// Terms already sorted in decreasing order with nonzero coefficients.
    pub(crate) fn from_sorted_terms(
        field: &F,
        nvars: usize,
        terms: Vec<(Monomial, F::Elem)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Poly {
            field: field.clone(),
            nvars,
            terms,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> F::Elem {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.field.zero(),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F::Elem)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn coefficient(&self, mon: &Monomial) -> F::Elem {
        self.terms
            .binary_search_by(|(m, _)| mon.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Poly::zero(&self.field, self.nvars);
        }
        Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, mon: &Monomial, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Poly::zero(&self.field, self.nvars);
        }
        Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mon), self.field.mul(a, c)))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("nonzero")),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Poly<F>, c: &F::Elem) -> Self {
        let k = &self.field;
        if k.is_zero(c) || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), k.mul(&b[j].1, c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = k.add(&a[i].1, &k.mul(&b[j].1, c));
                    if !k.is_zero(&s) {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, bc)| (m.clone(), k.mul(bc, c))));
        Poly {
            field: k.clone(),
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one(&self.field, self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly<F>) -> Option<Self> {
        let k = &self.field;
        let (dm, dc) = d.leading_term()?;
        let dinv = k.inv(dc).expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.leading_term() {
            let q = dm.quotient(rm)?;
            let c = k.mul(rc, &dinv);
            rem = rem.add_scaled(&d.mul_term(&q, &k.one()), &k.neg(&c));
            quot.push((q, c));
        }
        Some(Poly::from_sorted_terms(k, self.nvars, quot))
    }

    /// Substitutes `images[v]` for variable v. The images fix the target ring.
    pub fn compose(&self, images: &[Poly<F>]) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target_nvars = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut acc = Poly::zero(&self.field, target_nvars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&self.field, target_nvars, c.clone());
            for (v, e) in m.exponents().iter().enumerate() {
                if *e > 0 {
                    t = &t * &images[v].pow(*e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        let k = &self.field;
        let mut acc = k.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.exponents().iter().enumerate() {
                if *e > 0 {
                    t = k.mul(&t, &k.pow(&point[v], *e as u64));
                }
            }
            acc = k.add(&acc, &t);
        }
        acc
    }

    /// Re-embeds into a ring with `nvars` variables; dropped variables must not occur.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                debug_assert!(m.exponents().iter().skip(nvars).all(|e| *e == 0));
                (m.with_nvars(nvars), c.clone())
            })
            .collect();
        Poly::from_terms(&self.field, nvars, terms)
    }

    /// Text form with the given variable names, e.g. `z^2+x*y`.
    pub fn format_with(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let coeff = self.field.format(c);
            let mut term = String::new();
            if m.is_one() {
                term.push_str(&coeff);
            } else {
                if coeff == "-1" {
                    term.push('-');
                } else if coeff != "1" {
                    term.push_str(&coeff);
                    term.push('*');
                }
                let mut first = true;
                for (v, e) in m.exponents().iter().enumerate() {
                    if *e == 0 {
                        continue;
                    }
                    if !first {
                        term.push('*');
                    }
                    first = false;
                    term.push_str(&vars[v]);
                    if *e > 1 {
                        term.push('^');
                        term.push_str(&e.to_string());
                    }
                }
            }
            if idx > 0 && !term.starts_with('-') {
                s.push('+');
            }
            s.push_str(&term);
        }
        s
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        self.add_scaled(rhs, &self.field.one())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self.add_scaled(rhs, &self.field.neg(&self.field.one()))
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        }
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field, self.nvars);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let k = &self.field;
        let mut prods = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                prods.push((ma.mul(mb), k.mul(ca, cb)));
            }
        }
        Poly::from_terms(k, self.nvars, prods)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use crate::algebra::ring::PolyRing;
    use proptest::prelude::*;

    fn ring5() -> PolyRing<PrimeField> {
        PolyRing::xyz(PrimeField::new(5).unwrap())
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring5();
        let p = r.parse("x+y").unwrap();
        let q = r.parse("x-y").unwrap();
        assert_eq!(&p * &q, r.parse("x^2-y^2").unwrap());
        assert_eq!(p.pow(5), r.parse("x^5+y^5").unwrap());
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        let r = PolyRing::xyz(Rationals);
        let a = r.parse("x^3-y^3").unwrap();
        let d = r.parse("x-y").unwrap();
        assert_eq!(a.div_exact(&d), Some(r.parse("x^2+x*y+y^2").unwrap()));
        assert_eq!(r.parse("x^2+1").unwrap().div_exact(&d), None);
    }

    #[test]
    fn constant_term_and_evaluation() {
        let r = PolyRing::xyz(Rationals);
        let p = r.parse("3+x*y-2*z").unwrap();
        assert_eq!(p.constant_term(), Rationals.from_i64(3));
        let pt = vec![
            Rationals.from_i64(1),
            Rationals.from_i64(2),
            Rationals.from_i64(3),
        ];
        assert_eq!(p.evaluate(&pt), Rationals.from_i64(-1));
    }

    #[test]
    fn compose_substitutes_variables() {
        let r = PolyRing::new(Rationals, &["x", "y", "z", "h"]);
        let s = PolyRing::xyz(Rationals);
        let p = r.parse("z+h").unwrap();
        let images = vec![s.var(0), s.var(1), s.var(2), s.parse("y^2+x*y").unwrap()];
        assert_eq!(p.compose(&images), s.parse("z+y^2+x*y").unwrap());
    }

    fn small_poly() -> impl Strategy<Value = Poly<PrimeField>> {
        prop::collection::vec((0u32..3, 0u32..3, 0u32..3, 0i64..7), 0..5).prop_map(|ts| {
            let k = PrimeField::new(7).unwrap();
            Poly::from_terms(
                &k,
                3,
                ts.into_iter()
                    .map(|(a, b, c, n)| (Monomial::from_exponents(&[a, b, c]), k.from_i64(n)))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &g, &g * &f);
            if !g.is_zero() {
                prop_assert_eq!((&f * &g).div_exact(&g), Some(f.clone()));
            }
        }

        #[test]
        fn print_parse_round_trip(f in small_poly()) {
            let r = PolyRing::xyz(PrimeField::new(7).unwrap());
            let text = r.format(&f);
            prop_assert_eq!(r.parse(&text).unwrap(), f);
        }
    }
}
