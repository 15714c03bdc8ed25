use std::cmp::Ordering;

use crate::algebra::{Field, Monomial, Poly};

/// One term c·m·e_comp of a module element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<F: Field> {
    pub mon: Monomial,
    pub comp: u32,
    pub coeff: F::Elem,
}

/// Term-over-position comparison; the lower component wins ties.
pub fn cmp_pos(am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
    am.cmp(bm).then(bc.cmp(&ac))
}

/// Sparse module element: terms sorted strictly decreasing in the module
/// order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MVec<F: Field> {
    pub terms: Vec<Term<F>>,
}

impl<F: Field> Default for MVec<F> {
    fn default() -> Self {
        MVec { terms: Vec::new() }
    }
}

impl<F: Field> MVec<F> {
    pub fn zero() -> Self {
        MVec { terms: Vec::new() }
    }

    pub fn unit(nvars: usize, comp: u32, field: &F) -> Self {
        MVec {
            terms: vec![Term {
                mon: Monomial::one(nvars),
                comp,
                coeff: field.one(),
            }],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn from_polys(polys: &[Poly<F>]) -> Self {
        let mut terms: Vec<Term<F>> = Vec::new();
        for (c, p) in polys.iter().enumerate() {
            for (m, coeff) in p.terms() {
                terms.push(Term {
                    mon: m.clone(),
                    comp: c as u32,
                    coeff: coeff.clone(),
                });
            }
        }
        terms.sort_by(|a, b| cmp_pos(&b.mon, b.comp, &a.mon, a.comp));
        MVec { terms }
    }

    /// Splits into `rank` component polynomials.
    pub fn to_polys(&self, field: &F, nvars: usize, rank: usize) -> Vec<Poly<F>> {
        let mut buckets: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp as usize].push((t.mon.clone(), t.coeff.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Poly::from_sorted_terms(field, nvars, b))
            .collect()
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        if field.is_zero(c) {
            return MVec::zero();
        }
        MVec {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mon: t.mon.clone(),
                    comp: t.comp,
                    coeff: field.mul(&t.coeff, c),
                })
                .collect(),
        }
    }

    /// `self + c·m·other`.
    pub fn add_mul(&self, field: &F, other: &MVec<F>, m: &Monomial, c: &F::Elem) -> Self {
        MVec {
            terms: axpy(field, &self.terms, &other.terms, m, c),
        }
    }
}

/// Merge `a + c·m·b` for term lists sorted decreasingly.
pub fn axpy<F: Field>(
    field: &F,
    a: &[Term<F>],
    b: &[Term<F>],
    m: &Monomial,
    c: &F::Elem,
) -> Vec<Term<F>> {
    if field.is_zero(c) || b.is_empty() {
        return a.to_vec();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|t| (t.mon.mul(m), t)).peekable();
    while let Some((bm, bt)) = bi.peek() {
        if i < a.len() {
            match cmp_pos(&a[i].mon, a[i].comp, bm, bt.comp) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    continue;
                }
                Ordering::Equal => {
                    let s = field.add(&a[i].coeff, &field.mul(&bt.coeff, c));
                    if !field.is_zero(&s) {
                        out.push(Term {
                            mon: a[i].mon.clone(),
                            comp: a[i].comp,
                            coeff: s,
                        });
                    }
                    i += 1;
                    bi.next();
                    continue;
                }
                Ordering::Less => {}
            }
        }
        let (bm, bt) = bi.next().expect("peeked");
        out.push(Term {
            mon: bm,
            comp: bt.comp,
            coeff: field.mul(&bt.coeff, c),
        });
    }
    out.extend_from_slice(&a[i..]);
    out
}
