use crate::algebra::{Field, Poly, PolyMatrix, PolyRing};
use crate::error::{MfError, Result};

/// A pair of square matrices (A, B) over S with A·B = B·A = f·I.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixFactorization<F: Field> {
    ring: PolyRing<F>,
    f: Poly<F>,
    a: PolyMatrix<F>,
    b: PolyMatrix<F>,
}

/// True iff both products equal f·I exactly.
pub fn mf_verify<F: Field>(f: &Poly<F>, a: &PolyMatrix<F>, b: &PolyMatrix<F>) -> bool {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return false;
    }
    let target = PolyMatrix::scalar(f, a.rows());
    a.mul(b) == target && b.mul(a) == target
}

impl<F: Field> MatrixFactorization<F> {
    pub fn new(ring: PolyRing<F>, f: Poly<F>, a: PolyMatrix<F>, b: PolyMatrix<F>) -> Result<Self> {
        if f.is_zero() {
            return Err(MfError::NotAMatrixFactorization("f must be nonzero".into()));
        }
        if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
            return Err(MfError::ShapeMismatch(format!(
                "A is {}x{}, B is {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        if f.nvars() != ring.nvars() || a.nvars() != ring.nvars() || b.nvars() != ring.nvars() {
            return Err(MfError::ShapeMismatch(
                "variable count differs from the ring".into(),
            ));
        }
        if !mf_verify(&f, &a, &b) {
            return Err(MfError::NotAMatrixFactorization(
                "A·B and B·A must both equal f·I".into(),
            ));
        }
        Ok(MatrixFactorization { ring, f, a, b })
    }

    /// Parses f and the entries of A and B in the given ring.
    pub fn parse<S: AsRef<str>>(
        ring: PolyRing<F>,
        f: &str,
        a: &[Vec<S>],
        b: &[Vec<S>],
    ) -> Result<Self> {
        let fp = ring.parse(f)?;
        let am = PolyMatrix::parse(&ring, a)?;
        let bm = PolyMatrix::parse(&ring, b)?;
        Self::new(ring, fp, am, bm)
    }

    pub(crate) fn new_unchecked(
        ring: PolyRing<F>,
        f: Poly<F>,
        a: PolyMatrix<F>,
        b: PolyMatrix<F>,
    ) -> Self {
        debug_assert!(mf_verify(&f, &a, &b));
        MatrixFactorization { ring, f, a, b }
    }

    /// The size-zero object, a zero of the homotopy category.
    pub fn zero_object(ring: PolyRing<F>, f: Poly<F>) -> Self {
        let k = ring.field().clone();
        let n = ring.nvars();
        let z = PolyMatrix::zeros(&k, n, 0, 0);
        MatrixFactorization {
            ring,
            f,
            a: z.clone(),
            b: z,
        }
    }

    /// The contractible object ((1), (f)).
    pub fn trivial(ring: PolyRing<F>, f: Poly<F>) -> Self {
        let one = PolyMatrix::identity(ring.field(), ring.nvars(), 1);
        let fm = PolyMatrix::scalar(&f, 1);
        MatrixFactorization {
            ring,
            f,
            a: one,
            b: fm,
        }
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }
    pub fn field(&self) -> &F {
        self.ring.field()
    }
    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }
    pub fn f(&self) -> &Poly<F> {
        &self.f
    }
    pub fn a(&self) -> &PolyMatrix<F> {
        &self.a
    }
    pub fn b(&self) -> &PolyMatrix<F> {
        &self.b
    }
    pub fn size(&self) -> usize {
        self.a.rows()
    }

    pub fn verify(&self) -> bool {
        mf_verify(&self.f, &self.a, &self.b)
    }

    /// No entry of A or B has a nonzero constant term.
    pub fn reduced_entries(&self) -> bool {
        !self.a.has_constant_terms() && !self.b.has_constant_terms()
    }

    pub fn same_hypersurface(&self, other: &Self) -> bool {
        self.ring == other.ring && self.f == other.f
    }

    pub(crate) fn check_same_hypersurface(&self, other: &Self) -> Result<()> {
        if self.same_hypersurface(other) {
            Ok(())
        } else {
            Err(MfError::MixedHypersurface)
        }
    }

    /// The shift M[1] = (B, A).
    pub fn shift(&self) -> Self {
        MatrixFactorization {
            ring: self.ring.clone(),
            f: self.f.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.check_same_hypersurface(other)?;
        Ok(MatrixFactorization {
            ring: self.ring.clone(),
            f: self.f.clone(),
            a: PolyMatrix::block_diag(&self.a, &other.a),
            b: PolyMatrix::block_diag(&self.b, &other.b),
        })
    }

    /// Splits off trivial blocks at constant entries until none remain.
    pub fn reduce_constant_pivots(&self) -> Self {
        let mut cur = self.clone();
        loop {
            if let Some((i, j)) = constant_pivot(&cur.a) {
                cur = cur.eliminate(i, j);
            } else if let Some((i, j)) = constant_pivot(&cur.b) {
                cur = cur.shift().eliminate(i, j).shift();
            } else {
                debug_assert!(cur.verify());
                return cur;
            }
        }
    }

    fn eliminate(&self, i: usize, j: usize) -> Self {
        let k = self.field();
        let m = self.size();
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        let cinv = k
            .inv(&a.get(i, j).constant_term())
            .expect("pivot is a unit");
        let cinv = Poly::constant(k, self.nvars(), cinv);

        for r in (0..m).filter(|&r| r != i) {
            let q = &cinv * a.get(r, j);
            if q.is_zero() {
                continue;
            }
            for c in 0..m {
                let v = a.get(r, c) - &(&q * a.get(i, c));
                a.set(r, c, v);
            }
            for s in 0..m {
                let v = b.get(s, i) + &(&q * b.get(s, r));
                b.set(s, i, v);
            }
        }
        for c in (0..m).filter(|&c| c != j) {
            let q = &cinv * a.get(i, c);
            if q.is_zero() {
                continue;
            }
            for r in 0..m {
                let v = a.get(r, c) - &(&q * a.get(r, j));
                a.set(r, c, v);
            }
            for s in 0..m {
                let v = b.get(j, s) + &(&q * b.get(c, s));
                b.set(j, s, v);
            }
        }
        MatrixFactorization::new_unchecked(
            self.ring.clone(),
            self.f.clone(),
            a.without(i, j),
            b.without(j, i),
        )
    }

    /// Presentation of the cokernel as a submodule of R^n, R = S/(f).
    pub fn coker_presentation(
        &self,
        variant: Option<CokerVariant>,
    ) -> Result<CokerPresentation<F>> {
        let m = self.size();
        if m == 1 {
            if matches!(variant, Some(v) if v != CokerVariant::Scalar) {
                return Err(MfError::NoScalarBlock);
            }
            return Ok(CokerPresentation {
                variant: CokerVariant::Scalar,
                g: self.a.get(0, 0).clone(),
                rank: 1,
                generators: vec![vec![self.b.get(0, 0).clone()]],
            });
        }
        if m == 0 || m % 2 == 1 {
            return Err(MfError::NoScalarBlock);
        }
        let n = m / 2;
        let order = match variant {
            Some(CokerVariant::Scalar) => return Err(MfError::NoScalarBlock),
            Some(v) => vec![v],
            None => vec![CokerVariant::LowerRight, CokerVariant::UpperLeft],
        };
        for v in order {
            let (block_at, rows_from) = match v {
                CokerVariant::LowerRight => (n, 0),
                _ => (0, n),
            };
            if let Some(g) = scalar_block(&self.a, block_at, n) {
                let generators = (0..m)
                    .map(|c| {
                        (0..n)
                            .map(|r| self.b.get(rows_from + r, c).clone())
                            .collect()
                    })
                    .collect();
                return Ok(CokerPresentation {
                    variant: v,
                    g,
                    rank: n,
                    generators,
                });
            }
        }
        Err(MfError::NoScalarBlock)
    }

    /// The rank of Coker(A) over R, read off as the f-adic valuation of det A.
    pub fn mcm_rank(&self) -> usize {
        let mut d = self.a.det();
        let mut r = 0;
        while !d.is_zero() && !d.is_constant() {
            match d.div_exact(&self.f) {
                Some(q) => {
                    d = q;
                    r += 1;
                }
                None => break,
            }
        }
        r
    }

    /// Rows of A and B as strings in the ring's notation.
    pub fn to_strings(&self) -> (String, Vec<Vec<String>>, Vec<Vec<String>>) {
        (
            self.ring.format(&self.f),
            self.a.to_strings(&self.ring),
            self.b.to_strings(&self.ring),
        )
    }
}

fn constant_pivot<F: Field>(m: &PolyMatrix<F>) -> Option<(usize, usize)> {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let p = m.get(r, c);
            if !p.is_zero() && p.is_constant() {
                return Some((r, c));
            }
        }
    }
    None
}

fn scalar_block<F: Field>(a: &PolyMatrix<F>, at: usize, n: usize) -> Option<Poly<F>> {
    let g = a.get(at, at).clone();
    if g.is_zero() {
        return None;
    }
    for r in 0..n {
        for c in 0..n {
            let e = a.get(at + r, at + c);
            let ok = if r == c { *e == g } else { e.is_zero() };
            if !ok {
                return None;
            }
        }
    }
    Some(g)
}

/// Which block of A carries the scalar matrix g·I_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CokerVariant {
    LowerRight,
    UpperLeft,
    Scalar,
}

/// Generators b_1, ..., b_{2n} in R^n whose span is isomorphic to Coker(A).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CokerPresentation<F: Field> {
    pub variant: CokerVariant,
    pub g: Poly<F>,
    pub rank: usize,
    pub generators: Vec<Vec<Poly<F>>>,
}
