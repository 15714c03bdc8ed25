//! The indecomposable matrix factorizations of the simple surface
//! singularities, with their defining polynomials.

mod exceptional;

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Field, Poly, PolyMatrix, PolyRing};
use crate::error::{MfError, Result};
use crate::mf::MatrixFactorization;

/// A pair of matrices given row by row, entries separated by whitespace.
pub(crate) struct Entry {
    pub a: &'static [&'static str],
    pub b: &'static [&'static str],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    D,
    E,
}

/// A simple singularity type X_n^r over a field of the given characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SingularityType {
    pub series: Series,
    pub n: usize,
    pub r: usize,
    pub characteristic: u64,
}

impl SingularityType {
    pub fn new(series: Series, n: usize, r: usize, characteristic: u64) -> Result<Self> {
        let t = SingularityType {
            series,
            n,
            r,
            characteristic,
        };
        t.validate()?;
        Ok(t)
    }

    /// Whether explicit matrices exist for this combination.
    pub fn validate(&self) -> Result<()> {
        let p = self.characteristic;
        let ok = match self.series {
            Series::A => self.n >= 1 && self.r == 0,
            Series::D => self.n >= 4 && self.r < self.n / 2,
            Series::E => match (self.n, self.r) {
                (6, 0) | (7, 0) | (8, 0) => true,
                (6, 1) => p == 2 || p == 3,
                (7, 1) => p == 2 || p == 3,
                (7, 2) | (7, 3) => p == 2,
                (8, 1) => p == 2 || p == 3 || p == 5,
                (8, 2) => p == 2 || p == 3,
                (8, 3) | (8, 4) => p == 2,
                _ => false,
            },
        };
        if ok {
            Ok(())
        } else {
            Err(MfError::InvalidTypeCombination(self.to_string()))
        }
    }

    pub fn num_objects(&self) -> usize {
        self.n
    }

    fn epsilon(&self) -> bool {
        self.r != 0
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.series {
            Series::A => 'A',
            Series::D => 'D',
            Series::E => 'E',
        };
        write!(f, "{s}{}", self.n)?;
        if self.r != 0 {
            write!(f, "^{}", self.r)?;
        }
        write!(f, "@{}", self.characteristic)
    }
}

impl FromStr for SingularityType {
    type Err = MfError;

    /// Grammar: `<series><n>[^<r>]@<char>`, e.g. `E7^1@3`.
    fn from_str(text: &str) -> Result<Self> {
        let err = |message: &str, position: usize| MfError::Syntax {
            message: message.to_string(),
            position,
        };
        let text = text.trim();
        let series = match text.chars().next() {
            Some('A') => Series::A,
            Some('D') => Series::D,
            Some('E') => Series::E,
            _ => return Err(err("expected series A, D or E", 0)),
        };
        let (body, ch) = text[1..]
            .split_once('@')
            .ok_or_else(|| err("expected '@<characteristic>'", text.len()))?;
        let (n_text, r_text) = match body.split_once('^') {
            Some((n, r)) => (n, Some(r)),
            None => (body, None),
        };
        let n: usize = n_text.parse().map_err(|_| err("expected the rank n", 1))?;
        let r: usize = match r_text {
            Some(r) => r
                .parse()
                .map_err(|_| err("expected the co-index r", 2 + n_text.len()))?,
            None => 0,
        };
        let characteristic: u64 = ch
            .parse()
            .map_err(|_| err("expected a characteristic", text.len() - ch.len()))?;
        if characteristic != 0 {
            crate::algebra::PrimeField::new(characteristic)?;
        }
        SingularityType::new(series, n, r, characteristic)
    }
}

/// One indecomposable object M_index of a catalog family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry<F: Field> {
    pub ty: SingularityType,
    pub index: usize,
    pub factorization: MatrixFactorization<F>,
}

fn check_field<F: Field>(t: &SingularityType, field: &F) -> Result<()> {
    t.validate()?;
    if field.characteristic() != t.characteristic {
        return Err(MfError::InvalidTypeCombination(format!(
            "{t} requested over a field of characteristic {}",
            field.characteristic()
        )));
    }
    Ok(())
}

/// x^a·y^b with `1` for the empty product.
fn xy(a: u32, b: u32) -> String {
    let part = |v: &str, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    let parts: Vec<String> = [part("x", a), part("y", b)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// The extra z-coefficient h with f = z² + z·h + (terms without z).
fn z_coefficient(t: &SingularityType) -> String {
    let half = (t.n / 2) as u32;
    let r = t.r as u32;
    let eps = |s: String| if t.epsilon() { s } else { "0".into() };
    match (t.series, t.n, t.r) {
        (Series::A, ..) => "0".into(),
        (Series::D, n, _) if n % 2 == 0 => eps(xy(1, half - r)),
        (Series::D, ..) => {
            if t.epsilon() {
                format!("{}+{}", xy(0, half), xy(1, half - r))
            } else {
                xy(0, half)
            }
        }
        (Series::E, 6, _) => {
            if t.epsilon() {
                "y^2+x*y".into()
            } else {
                "y^2".into()
            }
        }
        (Series::E, 7, r) if t.characteristic == 2 => ["0", "x^2*y", "y^3", "x*y"][r].into(),
        (Series::E, 8, r) if t.characteristic == 2 => {
            ["0", "x*y^3", "x*y^2", "y^3", "x*y"][r].into()
        }
        _ => "0".into(),
    }
}

/// The part of f without the z·h term.
fn base_text(t: &SingularityType) -> String {
    let half = (t.n / 2) as u32;
    match (t.series, t.n, t.r) {
        (Series::A, n, _) => format!("z^{}+x*y", n + 1),
        (Series::D, n, _) if n % 2 == 0 => format!("z^2+x^2*y+{}", xy(1, half)),
        (Series::D, ..) => "z^2+x^2*y".into(),
        (Series::E, 6, _) => "z^2+x^3".into(),
        (Series::E, 7, 1) if t.characteristic == 3 => "z^2+x^3+x*y^3+x^2*y^2".into(),
        (Series::E, 7, _) => "z^2+x^3+x*y^3".into(),
        (Series::E, 8, 1) if t.characteristic == 5 => "z^2+x^3+y^5+x*y^4".into(),
        (Series::E, 8, 1) if t.characteristic == 3 => "z^2+x^3+y^5+x^2*y^3".into(),
        (Series::E, 8, 2) if t.characteristic == 3 => "z^2+x^3+y^5+x^2*y^2".into(),
        (Series::E, ..) => "z^2+x^3+y^5".into(),
    }
}

/// The polynomial f defining the singularity, over K[x, y, z].
pub fn defining_poly<F: Field>(t: &SingularityType, field: &F) -> Result<Poly<F>> {
    check_field(t, field)?;
    let ring = PolyRing::xyz(field.clone());
    let h = ring.parse(&z_coefficient(t))?;
    Ok(&ring.parse(&base_text(t))? + &(&ring.var(2) * &h))
}

type Pair<F> = (PolyMatrix<F>, PolyMatrix<F>);

/// Parser for the internal templates, over x, y, z and one extra variable.
struct Templates<F: Field> {
    ring: PolyRing<F>,
}

impl<F: Field> Templates<F> {
    fn p(&self, s: &str) -> Poly<F> {
        self.ring.parse(s).expect("well-formed template")
    }

    fn matrix(&self, rows: Vec<Vec<Poly<F>>>) -> PolyMatrix<F> {
        PolyMatrix::from_rows(self.ring.field(), self.ring.nvars(), rows)
    }

    fn a_series(&self, n: usize, i: usize) -> Pair<F> {
        let zp = self.p(&format!("z^{}", n + 1 - i));
        let zq = self.p(&format!("z^{i}"));
        let (x, y) = (self.p("x"), self.p("y"));
        (
            self.matrix(vec![vec![zp.clone(), -&y], vec![x.clone(), zq.clone()]]),
            self.matrix(vec![vec![zq, y], vec![-&x, zp]]),
        )
    }

    /// A = [[z, u], [−v, s]], B = [[s, −u], [v, z]].
    fn two_by_two(&self, u: &str, v: &str) -> Pair<F> {
        let (u, v, z, s) = (self.p(u), self.p(v), self.p("z"), self.p("s"));
        (
            self.matrix(vec![vec![z.clone(), u.clone()], vec![-&v, s.clone()]]),
            self.matrix(vec![vec![s, -&u], vec![v, z]]),
        )
    }

    /// A = [[z·I, P], [Q, s·I]], B = [[s·I, −P], [−Q, z·I]] with 2×2 blocks.
    fn four_by_four(&self, p: [&str; 4], q: [&str; 4]) -> Pair<F> {
        let p: Vec<Poly<F>> = p.iter().map(|e| self.p(e)).collect();
        let q: Vec<Poly<F>> = q.iter().map(|e| self.p(e)).collect();
        let (z, s, o) = (self.p("z"), self.p("s"), self.p("0"));
        let a = vec![
            vec![z.clone(), o.clone(), p[0].clone(), p[1].clone()],
            vec![o.clone(), z.clone(), p[2].clone(), p[3].clone()],
            vec![q[0].clone(), q[1].clone(), s.clone(), o.clone()],
            vec![q[2].clone(), q[3].clone(), o.clone(), s.clone()],
        ];
        let b = vec![
            vec![s.clone(), o.clone(), -&p[0], -&p[1]],
            vec![o.clone(), s.clone(), -&p[2], -&p[3]],
            vec![-&q[0], -&q[1], z.clone(), o.clone()],
            vec![-&q[2], -&q[3], o, z],
        ];
        (self.matrix(a), self.matrix(b))
    }

    fn d_series(&self, t: &SingularityType, i: usize) -> Pair<F> {
        let big_n = t.n;
        let n = (big_n / 2) as u32;
        if big_n.is_multiple_of(2) {
            match i {
                1 => self.two_by_two(&format!("x^2+{}", xy(1, n - 1)), "y"),
                _ if i == big_n - 1 => self.two_by_two(&format!("x*y+{}", xy(0, n)), "x"),
                _ if i == big_n => self.two_by_two(&format!("x+{}", xy(0, n - 1)), "x*y"),
                _ if i.is_multiple_of(2) => {
                    let k = (i / 2) as u32;
                    let (yk, xyk) = (xy(0, k), xy(1, n - k));
                    self.four_by_four(
                        ["x*y", &yk, &format!("-{xyk}"), "x"],
                        ["-x", &yk, &format!("-{xyk}"), "-x*y"],
                    )
                }
                _ => {
                    let k = ((i - 1) / 2) as u32;
                    self.four_by_four(
                        ["x*y", &xy(1, n - k), &format!("-{}", xy(0, k + 1)), "x*y"],
                        ["-x", &xy(1, n - k - 1), &format!("-{}", xy(0, k)), "-x"],
                    )
                }
            }
        } else {
            match i {
                1 => self.two_by_two("x^2", "y"),
                _ if i == big_n - 1 => self.two_by_two("x*y", "x"),
                _ if i == big_n => self.two_by_two("x", "x*y"),
                _ if i.is_multiple_of(2) => {
                    let yk = xy(0, (i / 2) as u32);
                    self.four_by_four(["x*y", &yk, "0", "x"], ["-x", &yk, "0", "-x*y"])
                }
                _ => {
                    let k = ((i - 1) / 2) as u32;
                    self.four_by_four(
                        ["x*y", "0", &format!("-{}", xy(0, k + 1)), "x*y"],
                        ["-x", "0", &format!("-{}", xy(0, k)), "-x"],
                    )
                }
            }
        }
    }

    fn exceptional(&self, e: &Entry) -> Pair<F> {
        let parse = |rows: &[&str]| {
            self.matrix(
                rows.iter()
                    .map(|r| r.split_whitespace().map(|s| self.p(s)).collect())
                    .collect(),
            )
        };
        (parse(e.a), parse(e.b))
    }
}

fn e_table(t: &SingularityType) -> &'static [Entry] {
    use exceptional::*;
    match (t.n, t.r, t.characteristic) {
        (6, ..) => E6,
        (7, _, 2) => E7_CHAR2,
        (7, 1, 3) => E7_1_CHAR3,
        (7, ..) => E7_0,
        (8, _, 2) => E8_CHAR2,
        (8, 1, 5) => E8_1_CHAR5,
        (8, 1, 3) => E8_1_CHAR3,
        (8, 2, 3) => E8_2_CHAR3,
        _ => E8_0,
    }
}

/// The factorization M_i of the family, 1 ≤ i ≤ n.
pub fn catalog_mf<F: Field>(t: &SingularityType, field: &F, i: usize) -> Result<CatalogEntry<F>> {
    check_field(t, field)?;
    if i < 1 || i > t.n {
        return Err(MfError::IndexOutOfRange {
            index: i,
            size: t.n,
        });
    }
    let ring = PolyRing::xyz(field.clone());
    let f = defining_poly(t, field)?;
    let h = ring.parse(&z_coefficient(t))?;
    let (extra, image) = match t.series {
        Series::D => ("s", &ring.var(2) + &h),
        _ => ("h", h),
    };
    let tpl = Templates {
        ring: PolyRing::new(field.clone(), &["x", "y", "z", extra]),
    };
    let (a, b) = match t.series {
        Series::A => tpl.a_series(t.n, i),
        Series::D => tpl.d_series(t, i),
        Series::E => tpl.exceptional(&e_table(t)[i - 1]),
    };
    let images = [ring.var(0), ring.var(1), ring.var(2), image];
    let factorization = MatrixFactorization::new(ring, f, a.compose(&images), b.compose(&images))?;
    Ok(CatalogEntry {
        ty: *t,
        index: i,
        factorization,
    })
}

/// All n objects of the family, in index order.
pub fn catalog_all<F: Field>(t: &SingularityType, field: &F) -> Result<Vec<CatalogEntry<F>>> {
    (1..=t.n).map(|i| catalog_mf(t, field, i)).collect()
}

#[cfg(test)]
mod tests;
