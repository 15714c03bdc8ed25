use rand::Rng;

use crate::algebra::{Field, KMatrix, Monomial, Poly, PolyMatrix};

/// Incrementally maintained reduced row echelon form over K.
pub(crate) struct Echelon<F: Field> {
    field: F,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F) -> Self {
        Echelon {
            field: field.clone(),
            rows: Vec::new(),
        }
    }

    /// Adds `v` if it is independent of the rows so far; vectors may grow
    /// longer over time but never shorter.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        let k = &self.field;
        for (p, row) in &self.rows {
            if *p < v.len() && !k.is_zero(&v[*p]) {
                let c = v[*p].clone();
                for (i, r) in row.iter().enumerate() {
                    v[i] = k.sub(&v[i], &k.mul(&c, r));
                }
            }
        }
        let Some(p) = v.iter().position(|e| !k.is_zero(e)) else {
            return false;
        };
        let inv = k.inv(&v[p]).expect("nonzero");
        for e in v.iter_mut() {
            *e = k.mul(e, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            row.resize(v.len().max(row.len()), k.zero());
            if !k.is_zero(&row[p]) {
                let c = row[p].clone();
                for (i, r) in row.iter_mut().enumerate().take(v.len()) {
                    *r = k.sub(r, &k.mul(&c, &v[i]));
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Indices of a maximal independent subset, chosen greedily in order.
pub(crate) fn independent_subset<F: Field>(field: &F, vectors: &[Vec<F::Elem>]) -> Vec<usize> {
    let mut ech = Echelon::new(field);
    (0..vectors.len())
        .filter(|&i| ech.insert(vectors[i].clone()))
        .collect()
}

pub(crate) fn flatten_pair<F: Field>(x: &KMatrix<F>, y: &KMatrix<F>) -> Vec<F::Elem> {
    let mut v = Vec::with_capacity(2 * x.rows() * x.cols());
    for r in 0..x.rows() {
        v.extend_from_slice(x.row(r));
    }
    for r in 0..y.rows() {
        v.extend_from_slice(y.row(r));
    }
    v
}

fn evaluate_pencil<F: Field>(field: &F, pencil: &[KMatrix<F>], point: &[F::Elem]) -> KMatrix<F> {
    let mut acc = KMatrix::zeros(field, pencil[0].rows(), pencil[0].cols());
    for (m, c) in pencil.iter().zip(point) {
        acc = acc.add(&m.scale(c));
    }
    acc
}

/// Tries random points for which both pencils are invertible at once.
pub(crate) fn random_invertible_point<F: Field, R: Rng>(
    field: &F,
    xs: &[KMatrix<F>],
    ys: &[KMatrix<F>],
    rng: &mut R,
    tries: usize,
) -> bool {
    for _ in 0..tries {
        let point: Vec<F::Elem> = (0..xs.len()).map(|_| field.random(rng)).collect();
        let dx = evaluate_pencil(field, xs, &point).det();
        if field.is_zero(&dx) {
            continue;
        }
        if !field.is_zero(&evaluate_pencil(field, ys, &point).det()) {
            return true;
        }
    }
    false
}

/// Σ λ_j M_j as a matrix over K[λ_1, ..., λ_l, extra...] with `nvars` variables.
pub(crate) fn symbolic_pencil<F: Field>(
    field: &F,
    pencil: &[KMatrix<F>],
    nvars: usize,
) -> PolyMatrix<F> {
    let (rows, cols) = (pencil[0].rows(), pencil[0].cols());
    let mut out = PolyMatrix::zeros(field, nvars, rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            let terms = pencil
                .iter()
                .enumerate()
                .filter(|(_, m)| !field.is_zero(m.get(r, c)))
                .map(|(j, m)| (Monomial::var(nvars, j), m.get(r, c).clone()))
                .collect();
            out.set(r, c, Poly::from_terms(field, nvars, terms));
        }
    }
    out
}
