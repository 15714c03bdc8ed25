use std::fmt;

use super::field::Field;
use crate::error::{MfError, Result};

/// Dense matrix over the coefficient field, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for KMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.field.format(self.get(r, c)))
                .collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> KMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        KMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = KMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        KMatrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(field: &F, rows: &[&[i64]]) -> Self {
        KMatrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|n| field.from_i64(*n)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        let mut m = KMatrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = KMatrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &KMatrix<F>) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let k = &self.field;
        let mut out = KMatrix::zeros(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if k.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !k.is_zero(b) {
                        let v = k.add(out.get(i, j), &k.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        let k = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(k.zero(), |acc, (a, b)| k.add(&acc, &k.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, other: &KMatrix<F>) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        KMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| self.field.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &KMatrix<F>) -> Self {
        self.add(&other.scale(&self.field.neg(&self.field.one())))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        KMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| self.field.mul(a, c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = KMatrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> F::Elem {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| {
            self.field.add(&acc, self.get(i, i))
        })
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let k = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !k.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = k.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = k.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if k.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let v = k.sub(m.get(i, j), &k.mul(&factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {v : Mv = 0}; empty iff the matrix is injective.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let k = &self.field;
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![k.zero(); self.cols];
            v[free] = k.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(r.get(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `M x = b`, if any.
    pub fn solve(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows);
        let k = &self.field;
        let mut aug = KMatrix::zeros(k, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![k.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn det(&self) -> F::Elem {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let k = &self.field;
        let mut m = self.clone();
        let mut det = k.one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !k.is_zero(m.get(i, c))) else {
                return k.zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = k.neg(&det);
            }
            let pivot = m.get(c, c).clone();
            det = k.mul(&det, &pivot);
            let inv = k.inv(&pivot).expect("nonzero pivot");
            for i in c + 1..m.rows {
                let factor = k.mul(m.get(i, c), &inv);
                if k.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let v = k.sub(m.get(i, j), &k.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let k = &self.field;
        let mut aug = KMatrix::zeros(k, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, k.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = KMatrix::zeros(k, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// `Some(λ)` when the matrix equals λ·I.
    pub fn scalar_value(&self) -> Option<F::Elem> {
        if self.rows != self.cols {
            return None;
        }
        let k = &self.field;
        let lambda = if self.rows == 0 {
            k.zero()
        } else {
            self.get(0, 0).clone()
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j { &lambda } else { &k.zero() };
                if self.get(i, j) != expect {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    /// The unique eigenvalue of a scalar-plus-nilpotent matrix, validated.
    ///
    /// In characteristic 0 the candidate is trace/m, checked by
    /// (M − λI)^m = 0. In characteristic p the matrix is raised to p^e with
    /// p^e ≥ m, which must give λ·I.
    pub fn unique_eigenvalue(&self) -> Result<F::Elem> {
        if self.rows != self.cols || self.rows == 0 {
            return Err(MfError::NotScalarPlusNilpotent(format!(
                "{}x{} matrix has no unique eigenvalue",
                self.rows, self.cols
            )));
        }
        let k = &self.field;
        let m = self.rows;
        let p = k.characteristic();
        if p == 0 {
            let lambda = k
                .div(&self.trace(), &k.from_i64(m as i64))
                .expect("m is invertible in characteristic 0");
            let shifted = self.sub(&KMatrix::identity(k, m).scale(&lambda));
            if shifted.pow(m as u64).is_zero() {
                Ok(lambda)
            } else {
                Err(MfError::NotScalarPlusNilpotent(format!("{self:?}")))
            }
        } else {
            let mut q = p;
            while (q as u128) < m as u128 {
                q *= p;
            }
            self.pow(q)
                .scalar_value()
                .ok_or_else(|| MfError::NotScalarPlusNilpotent(format!("{self:?}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    #[test]
    fn kernel_examples() {
        let q = Rationals;
        assert!(KMatrix::identity(&q, 3).kernel_basis().is_empty());
        assert_eq!(KMatrix::zeros(&q, 2, 2).kernel_basis().len(), 2);
        let f2 = PrimeField::new(2).unwrap();
        let m = KMatrix::from_i64_rows(&f2, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![1, 1]]);
    }

    #[test]
    fn eigenvalue_examples() {
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(KMatrix::identity(&f2, 4).unique_eigenvalue(), Ok(1));
        let j = KMatrix::from_i64_rows(&f2, &[&[1, 1], &[0, 1]]);
        assert_eq!(j.unique_eigenvalue(), Ok(1));
        let f3 = PrimeField::new(3).unwrap();
        let swap = KMatrix::from_i64_rows(&f3, &[&[0, 1], &[1, 0]]);
        assert!(matches!(
            swap.unique_eigenvalue(),
            Err(MfError::NotScalarPlusNilpotent(_))
        ));
        let q = Rationals;
        let jq = KMatrix::from_i64_rows(&q, &[&[3, 1, 0], &[0, 3, 5], &[0, 0, 3]]);
        assert_eq!(jq.unique_eigenvalue(), Ok(q.from_i64(3)));
        let bad = KMatrix::from_i64_rows(&q, &[&[1, 0], &[0, 3]]);
        assert!(bad.unique_eigenvalue().is_err());
    }

    #[test]
    fn det_inverse_solve() {
        let q = Rationals;
        let m = KMatrix::from_i64_rows(&q, &[&[0, 2, 1], &[1, 1, 0], &[3, 0, 1]]);
        assert_eq!(m.det(), q.from_i64(-5));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), KMatrix::identity(&q, 3));
        let b = vec![q.from_i64(1), q.from_i64(2), q.from_i64(3)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let singular = KMatrix::from_i64_rows(&q, &[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det(), q.zero());
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&[q.from_i64(1), q.from_i64(0)]).is_none());
    }

    fn mat7(n: usize) -> impl Strategy<Value = KMatrix<PrimeField>> {
        prop::collection::vec(0i64..7, n * n).prop_map(move |v| {
            let k = PrimeField::new(7).unwrap();
            let rows = v
                .chunks(n)
                .map(|r| r.iter().map(|x| k.from_i64(*x)).collect())
                .collect();
            KMatrix::from_rows(&k, rows)
        })
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated(m in mat7(4)) {
            let ker = m.kernel_basis();
            prop_assert_eq!(ker.len() + m.rank(), 4);
            for v in ker {
                prop_assert!(m.mul_vec(&v).iter().all(|x| *x == 0));
            }
        }

        #[test]
        fn determinant_is_multiplicative(a in mat7(3), b in mat7(3)) {
            let k = PrimeField::new(7).unwrap();
            prop_assert_eq!(a.mul(&b).det(), k.mul(&a.det(), &b.det()));
        }

        #[test]
        fn eigenvalue_methods_agree(shift in 0i64..7, n in prop::collection::vec(0i64..7, 3)) {
            // λI + strictly upper triangular; m = 3 is prime to 7 so trace works too.
            let k = PrimeField::new(7).unwrap();
            let m = KMatrix::from_i64_rows(&k, &[&[shift, n[0], n[1]], &[0, shift, n[2]], &[0, 0, shift]]);
            let by_power = m.unique_eigenvalue().unwrap();
            let by_trace = k.div(&m.trace(), &k.from_i64(3)).unwrap();
            prop_assert_eq!(by_power, by_trace);
        }
    }
}
