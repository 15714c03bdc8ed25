use super::field::Field;
use super::kmatrix::KMatrix;
use super::poly::Poly;
use super::ring::PolyRing;

/// Dense matrix of polynomials, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix<F: Field> {
    field: F,
    nvars: usize,
    rows: usize,
    cols: usize,
    data: Vec<Poly<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(field: &F, nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            field: field.clone(),
            nvars,
            rows,
            cols,
            data: vec![Poly::zero(field, nvars); rows * cols],
        }
    }

    /// p·I_n.
    pub fn scalar(p: &Poly<F>, n: usize) -> Self {
        let mut m = PolyMatrix::zeros(p.field(), p.nvars(), n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn identity(field: &F, nvars: usize, n: usize) -> Self {
        PolyMatrix::scalar(&Poly::one(field, nvars), n)
    }

    pub fn from_rows(field: &F, nvars: usize, rows: Vec<Vec<Poly<F>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        PolyMatrix {
            field: field.clone(),
            nvars,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Parses a matrix given as rows of polynomial strings.
    pub fn parse<S: AsRef<str>>(ring: &PolyRing<F>, rows: &[Vec<S>]) -> crate::Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| ring.parse(s.as_ref())).collect())
            .collect::<crate::Result<Vec<Vec<_>>>>()?;
        let c = parsed.first().map(|x| x.len()).unwrap_or(0);
        if parsed.iter().any(|r| r.len() != c) {
            return Err(crate::MfError::ShapeMismatch("ragged matrix rows".into()));
        }
        Ok(PolyMatrix::from_rows(ring.field(), ring.nvars(), parsed))
    }

    /// Inverse of `vectorize`: fills a `rows`×`cols` matrix row by row.
    pub fn from_vector(field: &F, nvars: usize, rows: usize, cols: usize, v: &[Poly<F>]) -> Self {
        assert_eq!(v.len(), rows * cols);
        PolyMatrix {
            field: field.clone(),
            nvars,
            rows,
            cols,
            data: v.to_vec(),
        }
    }

    /// Embeds a constant matrix.
    pub fn from_kmatrix(m: &KMatrix<F>, nvars: usize) -> Self {
        let k = m.field();
        let mut out = PolyMatrix::zeros(k, nvars, m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                out.set(r, c, Poly::constant(k, nvars, m.get(r, c).clone()));
            }
        }
        out
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly<F> {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly<F>) {
        self.data[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> &[Poly<F>] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn mul(&self, other: &PolyMatrix<F>) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = PolyMatrix::zeros(&self.field, self.nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix<F>) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix<F>) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &PolyMatrix<F>, op: impl Fn(&Poly<F>, &Poly<F>) -> Poly<F>) -> Self {
        PolyMatrix {
            field: self.field.clone(),
            nvars: self.nvars,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    pub fn map(&self, op: impl Fn(&Poly<F>) -> Poly<F>) -> Self {
        PolyMatrix {
            field: self.field.clone(),
            nvars: self.nvars,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(op).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|p| -p)
    }

    pub fn scale(&self, p: &Poly<F>) -> Self {
        self.map(|a| a * p)
    }

    pub fn transpose(&self) -> Self {
        let mut t = PolyMatrix::zeros(&self.field, self.nvars, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// A ⊗ B, the block matrix (a_ij B).
    pub fn kronecker(&self, other: &PolyMatrix<F>) -> Self {
        let (p, q) = (other.rows, other.cols);
        let mut out = PolyMatrix::zeros(&self.field, self.nvars, self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * p + k, j * q + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Rows of the matrix concatenated in order.
    pub fn vectorize(&self) -> Vec<Poly<F>> {
        self.data.clone()
    }

    /// Entry-wise constant coefficients.
    pub fn constant_part(&self) -> KMatrix<F> {
        let mut m = KMatrix::zeros(&self.field, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).constant_term());
            }
        }
        m
    }

    /// True if some entry has a nonzero constant term.
    pub fn has_constant_terms(&self) -> bool {
        self.data
            .iter()
            .any(|p| !self.field.is_zero(&p.constant_term()))
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut out = PolyMatrix::zeros(&self.field, self.nvars, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    /// Assembles [[a, b], [c, d]] from four conformable blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        let mut out = PolyMatrix::zeros(&a.field, a.nvars, rows, cols);
        for (blk, r0, c0) in [
            (a, 0, 0),
            (b, 0, a.cols),
            (c, a.rows, 0),
            (d, a.rows, a.cols),
        ] {
            for r in 0..blk.rows {
                for col in 0..blk.cols {
                    out.set(r0 + r, c0 + col, blk.get(r, col).clone());
                }
            }
        }
        out
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let z1 = PolyMatrix::zeros(&a.field, a.nvars, a.rows, b.cols);
        let z2 = PolyMatrix::zeros(&a.field, a.nvars, b.rows, a.cols);
        PolyMatrix::from_blocks(a, &z1, &z2, b)
    }

    /// Removes one row and one column.
    pub fn without(&self, row: usize, col: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|r| *r != row) {
            for c in (0..self.cols).filter(|c| *c != col) {
                data.push(self.get(r, c).clone());
            }
        }
        PolyMatrix {
            field: self.field.clone(),
            nvars: self.nvars,
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    /// Fraction-free (Bareiss) determinant with exact polynomial division.
    pub fn det(&self) -> Poly<F> {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let one = Poly::one(&self.field, self.nvars);
        if n == 0 {
            return one;
        }
        let mut m: Vec<Vec<Poly<F>>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = one;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Poly::zero(&self.field, self.nvars);
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -&d
        } else {
            d
        }
    }

    /// Substitutes polynomials for the variables in every entry.
    pub fn compose(&self, images: &[Poly<F>]) -> Self {
        let nvars = images.first().map(|p| p.nvars()).unwrap_or(0);
        PolyMatrix {
            field: self.field.clone(),
            nvars,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p.compose(images)).collect(),
        }
    }

    pub fn to_strings(&self, ring: &PolyRing<F>) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| ring.format(self.get(r, c)))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use crate::algebra::monomial::Monomial;
    use proptest::prelude::*;

    fn m(ring: &PolyRing<Rationals>, rows: &[&[&str]]) -> PolyMatrix<Rationals> {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        PolyMatrix::parse(ring, &rows).unwrap()
    }

    #[test]
    fn constant_part_examples() {
        let r = PolyRing::xyz(Rationals);
        assert!(m(&r, &[&["z", "-y"], &["x", "z"]])
            .constant_part()
            .is_zero());
        let c = m(&r, &[&["1+x", "2"], &["0", "3*y"]]).constant_part();
        assert_eq!(c, KMatrix::from_i64_rows(&Rationals, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kronecker_examples() {
        let r = PolyRing::xyz(Rationals);
        let a = m(&r, &[&["x", "y"], &["z", "1"]]);
        let i2 = PolyMatrix::identity(&Rationals, 3, 2);
        assert_eq!(i2.kronecker(&a), PolyMatrix::block_diag(&a, &a));
        let one_a = m(&r, &[&["x+1"]]);
        let one_b = m(&r, &[&["y"]]);
        assert_eq!(one_a.kronecker(&one_b), m(&r, &[&["x*y+y"]]));
    }

    #[test]
    fn vectorize_is_row_major() {
        let r = PolyRing::xyz(Rationals);
        let a = m(&r, &[&["x", "y"], &["z", "1"]]);
        let v: Vec<String> = a.vectorize().iter().map(|p| r.format(p)).collect();
        assert_eq!(v, vec!["x", "y", "z", "1"]);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let r = PolyRing::xyz(Rationals);
        let a = m(&r, &[&["0", "x", "y"], &["z", "1", "x"], &["y", "z", "0"]]);
        // cofactor expansion along the first row
        let expect = r.parse("x^2*y+y*z^2-y^2").unwrap();
        assert_eq!(a.det(), expect);
    }

    fn pmat(rows: usize, cols: usize) -> impl Strategy<Value = PolyMatrix<PrimeField>> {
        let entry = prop::collection::vec((0u32..2, 0u32..2, 0u32..2, 0i64..5), 0..3);
        prop::collection::vec(entry, rows * cols).prop_map(move |es| {
            let k = PrimeField::new(5).unwrap();
            let polys: Vec<Poly<PrimeField>> = es
                .into_iter()
                .map(|ts| {
                    Poly::from_terms(
                        &k,
                        3,
                        ts.into_iter()
                            .map(|(a, b, c, n)| {
                                (Monomial::from_exponents(&[a, b, c]), k.from_i64(n))
                            })
                            .collect(),
                    )
                })
                .collect();
            PolyMatrix::from_vector(&k, 3, rows, cols, &polys)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn vectorization_identity(p in pmat(2, 3), x in pmat(3, 3), q in pmat(3, 2)) {
            let lhs = p.mul(&x).mul(&q).vectorize();
            let vx = PolyMatrix::from_vector(x.field(), 3, 9, 1, &x.vectorize());
            let rhs = p.kronecker(&q.transpose()).mul(&vx).vectorize();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mixed_product(a in pmat(2, 2), b in pmat(2, 1), c in pmat(2, 2), d in pmat(1, 2)) {
            prop_assert_eq!(a.kronecker(&b).mul(&c.kronecker(&d)), a.mul(&c).kronecker(&b.mul(&d)));
        }

        #[test]
        fn constant_part_is_a_ring_map(p in pmat(2, 3), q in pmat(3, 2), r in pmat(2, 3)) {
            prop_assert_eq!(p.mul(&q).constant_part(), p.constant_part().mul(&q.constant_part()));
            prop_assert_eq!(p.add(&r).constant_part(), p.constant_part().add(&r.constant_part()));
        }

        #[test]
        fn det_is_multiplicative(a in pmat(3, 3), b in pmat(3, 3)) {
            prop_assert_eq!(a.mul(&b).det(), &a.det() * &b.det());
        }
    }
}
