use std::sync::Arc;

use super::factorization::MatrixFactorization;
use crate::algebra::{Field, KMatrix, Poly, PolyMatrix};
use crate::error::{MfError, Result};

type Mf<F> = Arc<MatrixFactorization<F>>;

/// A morphism (X, Y) from (A, B) to (A', B'): X·A = A'·Y and Y·B = B'·X.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism<F: Field> {
    source: Mf<F>,
    target: Mf<F>,
    x: PolyMatrix<F>,
    y: PolyMatrix<F>,
}

/// Witness (H_A, H_B) of X = H_B·B + A'·H_A and Y = B'·H_B + H_A·A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy<F: Field> {
    pub h_a: PolyMatrix<F>,
    pub h_b: PolyMatrix<F>,
}

impl<F: Field> Morphism<F> {
    pub fn new(source: Mf<F>, target: Mf<F>, x: PolyMatrix<F>, y: PolyMatrix<F>) -> Result<Self> {
        source.check_same_hypersurface(&target)?;
        let (m, n) = (source.size(), target.size());
        for (name, mat) in [("X", &x), ("Y", &y)] {
            if mat.rows() != n || mat.cols() != m {
                return Err(MfError::ShapeMismatch(format!(
                    "{name} is {}x{}, expected {n}x{m}",
                    mat.rows(),
                    mat.cols()
                )));
            }
        }
        let phi = Morphism {
            source,
            target,
            x,
            y,
        };
        if !phi.squares_commute() {
            return Err(MfError::NotAMorphism(
                "X·A = A'·Y and Y·B = B'·X must both hold".into(),
            ));
        }
        Ok(phi)
    }

    pub(crate) fn new_unchecked(
        source: Mf<F>,
        target: Mf<F>,
        x: PolyMatrix<F>,
        y: PolyMatrix<F>,
    ) -> Self {
        let phi = Morphism {
            source,
            target,
            x,
            y,
        };
        debug_assert!(phi.squares_commute());
        phi
    }

    pub fn identity(m: &Mf<F>) -> Self {
        let id = PolyMatrix::identity(m.field(), m.nvars(), m.size());
        Morphism {
            source: m.clone(),
            target: m.clone(),
            x: id.clone(),
            y: id,
        }
    }

    pub fn zero(source: &Mf<F>, target: &Mf<F>) -> Self {
        let z = PolyMatrix::zeros(source.field(), source.nvars(), target.size(), source.size());
        Morphism {
            source: source.clone(),
            target: target.clone(),
            x: z.clone(),
            y: z,
        }
    }

    pub fn squares_commute(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        self.x.mul(s.a()) == t.a().mul(&self.y) && self.y.mul(s.b()) == t.b().mul(&self.x)
    }

    pub fn source(&self) -> &Mf<F> {
        &self.source
    }
    pub fn target(&self) -> &Mf<F> {
        &self.target
    }
    pub fn x(&self) -> &PolyMatrix<F> {
        &self.x
    }
    pub fn y(&self) -> &PolyMatrix<F> {
        &self.y
    }
    pub fn field(&self) -> &F {
        self.source.field()
    }

    pub fn x0(&self) -> KMatrix<F> {
        self.x.constant_part()
    }
    pub fn y0(&self) -> KMatrix<F> {
        self.y.constant_part()
    }

    fn same_endpoints(&self, other: &Self) -> Result<()> {
        if self.source == other.source && self.target == other.target {
            Ok(())
        } else {
            Err(MfError::ShapeMismatch(
                "morphisms have different endpoints".into(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_endpoints(other)?;
        Ok(self.with_matrices(self.x.add(&other.x), self.y.add(&other.y)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_endpoints(other)?;
        Ok(self.with_matrices(self.x.sub(&other.x), self.y.sub(&other.y)))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let p = Poly::constant(self.field(), self.source.nvars(), c.clone());
        self.scale_poly(&p)
    }

    pub fn scale_poly(&self, p: &Poly<F>) -> Self {
        self.with_matrices(self.x.scale(p), self.y.scale(p))
    }

    fn with_matrices(&self, x: PolyMatrix<F>, y: PolyMatrix<F>) -> Self {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            x,
            y,
        }
    }

    /// `self ∘ first`, i.e. (X'X, Y'Y).
    pub fn after(&self, first: &Morphism<F>) -> Result<Self> {
        if *first.target != *self.source {
            return Err(MfError::ShapeMismatch(
                "target of the first map is not the source of the second".into(),
            ));
        }
        Ok(Morphism {
            source: first.source.clone(),
            target: self.target.clone(),
            x: self.x.mul(&first.x),
            y: self.y.mul(&first.y),
        })
    }

    /// Checks both homotopy identities for a candidate witness.
    pub fn is_witnessed_by(&self, h: &Homotopy<F>) -> bool {
        let (s, t) = (&self.source, &self.target);
        let x = h.h_b.mul(s.b()).add(&t.a().mul(&h.h_a));
        let y = t.b().mul(&h.h_b).add(&h.h_a.mul(s.a()));
        x == self.x && y == self.y
    }

    /// The mapping cone ([[−B, 0], [X, A']], [[−A, 0], [Y, B']]).
    pub fn cone(&self) -> MatrixFactorization<F> {
        let (s, t) = (&self.source, &self.target);
        let k = s.field();
        let nv = s.nvars();
        let (m, n) = (s.size(), t.size());
        let zero = PolyMatrix::zeros(k, nv, m, n);
        let a = PolyMatrix::from_blocks(&s.b().neg(), &zero, &self.x, t.a());
        let b = PolyMatrix::from_blocks(&s.a().neg(), &zero, &self.y, t.b());
        MatrixFactorization::new_unchecked(s.ring().clone(), s.f().clone(), a, b)
    }
}

/// `psi ∘ phi`.
pub fn compose<F: Field>(psi: &Morphism<F>, phi: &Morphism<F>) -> Result<Morphism<F>> {
    psi.after(phi)
}
