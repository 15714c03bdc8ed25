use std::cmp::Ordering;

use smallvec::SmallVec;

/// A power product x_1^{e_1} ... x_n^{e_n}. The variable count is fixed by
/// the ring the monomial belongs to.
///
/// `Ord` is the degree reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 4]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
            degree: exps.iter().sum(),
        }
    }

    /// The monomial x_var.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u32; 4]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If the monomial is a pure power x_v^e with e > 0, returns `v`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (v, e) in self.exps.iter().enumerate() {
            if *e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(v);
            }
        }
        found
    }

    /// Extends or truncates the exponent vector to `nvars` variables.
    pub fn with_nvars(&self, nvars: usize) -> Monomial {
        let mut exps: SmallVec<[u32; 4]> = SmallVec::from_elem(0, nvars);
        for (i, e) in self.exps.iter().enumerate().take(nvars) {
            exps[i] = *e;
        }
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(other.exps.iter()).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The global monomial order in force. Only degrevlex is provided; module
/// elements compare term-over-position with the lower component first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.cmp(b),
        }
    }

    /// Term-over-position comparison of (monomial, component) pairs.
    pub fn compare_module(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        self.compare(a.0, b.0).then(b.1.cmp(&a.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..6, 3).prop_map(|v| Monomial::from_exponents(&v))
    }

    #[test]
    fn degrevlex_small_cases() {
        let m = |e: [u32; 3]| Monomial::from_exponents(&e);
        assert!(m([1, 0, 0]) > m([0, 1, 0]));
        assert!(m([0, 1, 0]) > m([0, 0, 1]));
        assert!(m([1, 0, 1]) < m([0, 2, 0]));
        assert!(m([2, 0, 0]) > m([1, 1, 0]));
        assert!(m([0, 0, 2]) > m([1, 0, 0]));
    }

    #[test]
    fn position_breaks_ties_toward_lower_component() {
        let o = MonomialOrder::DegRevLex;
        let x = Monomial::var(3, 0);
        assert_eq!(o.compare_module((&x, 0), (&x, 1)), Ordering::Greater);
    }

    proptest! {
        #[test]
        fn order_is_total_multiplicative_global(a in mono(), b in mono(), c in mono()) {
            let one = Monomial::one(3);
            prop_assert!(one <= a);
            if a < b {
                prop_assert!(a.mul(&c) < b.mul(&c));
            }
            prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
            if a < b && b < c {
                prop_assert!(a < c);
            }
        }

        #[test]
        fn quotient_inverts_product(a in mono(), b in mono()) {
            let ab = a.mul(&b);
            prop_assert_eq!(a.quotient(&ab), Some(b.clone()));
            prop_assert!(a.divides(&a.lcm(&b)));
            prop_assert_eq!(ab.degree(), a.degree() + b.degree());
        }
    }
}
