//! Auslander–Reiten quivers of the catalog families, ADE diagrams, and the
//! knitting procedure that rebuilds a family from a single object.

mod knit;

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Field;
use crate::catalog::{catalog_all, Series, SingularityType};
use crate::error::{MfError, Result};
use crate::mf::{MatrixFactorization, MfContext};

pub use knit::{knit_from_seed, KnitReport, KnitStep};

/// Largest matrix size accepted by [`ar_quiver`].
pub const MAX_OBJECT_SIZE: usize = 12;

/// The dual graph of a minimal resolution of an ADE singularity.
///
/// Node numbering: A is the path 1..n; D is the path 1..n−2 with tips n−1
/// and n attached to n−2; E is the path 1..n−1 with node n attached to 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinGraph {
    pub series: Series,
    pub n: usize,
    adjacency: Vec<Vec<u32>>,
}

impl DynkinGraph {
    pub fn new(series: Series, n: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = match series {
            Series::A if n >= 1 => (1..n).map(|i| (i - 1, i)).collect(),
            Series::D if n >= 4 => {
                let mut e: Vec<_> = (1..n - 2).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
                e
            }
            Series::E if (6..=8).contains(&n) => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((2, n - 1));
                e
            }
            _ => {
                return Err(MfError::InvalidTypeCombination(format!(
                    "no Dynkin diagram {series:?}{n}"
                )))
            }
        };
        let mut adjacency = vec![vec![0; n]; n];
        for (i, j) in edges {
            adjacency[i][j] = 1;
            adjacency[j][i] = 1;
        }
        Ok(DynkinGraph {
            series,
            n,
            adjacency,
        })
    }

    pub fn of_type(t: &SingularityType) -> Result<Self> {
        DynkinGraph::new(t.series, t.n)
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adjacency
    }

    /// E_i·E_j: −2 on the diagonal, 1 for adjacent curves.
    pub fn intersection(&self, i: usize, j: usize) -> i64 {
        self.adjacency[i][j] as i64 - if i == j { 2 } else { 0 }
    }

    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.intersection(i, j)).collect())
            .collect()
    }

    /// Z·E_i for the cycle Z = Σ z_j E_j.
    pub fn pairing(&self, z: &[u32], i: usize) -> i64 {
        z.iter()
            .enumerate()
            .map(|(j, &c)| c as i64 * self.intersection(i, j))
            .sum()
    }
}

/// A positive cycle Σ c_i E_i on a Dynkin graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub coefficients: Vec<u32>,
}

impl Cycle {
    /// Z·E_i ≤ 0 for every i.
    pub fn is_anti_nef(&self, g: &DynkinGraph) -> bool {
        (0..g.n).all(|i| g.pairing(&self.coefficients, i) <= 0)
    }
}

/// Laufer's iteration: start at Σ E_i and add E_i while Z·E_i > 0.
pub fn fundamental_cycle(g: &DynkinGraph) -> Cycle {
    let mut z = vec![1u32; g.n];
    while let Some(i) = (0..g.n).find(|&i| g.pairing(&z, i) > 0) {
        z[i] += 1;
    }
    Cycle { coefficients: z }
}

/// Nodes, arrow multiplicities and the AR translation as a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ARQuiver {
    pub labels: Vec<String>,
    pub arrows: Vec<Vec<usize>>,
    pub translation: Vec<usize>,
}

impl ARQuiver {
    pub fn new(
        labels: Vec<String>,
        arrows: Vec<Vec<usize>>,
        translation: Vec<usize>,
    ) -> Result<Self> {
        let q = ARQuiver {
            labels,
            arrows,
            translation,
        };
        q.check()?;
        Ok(q)
    }

    fn check(&self) -> Result<()> {
        let n = self.labels.len();
        let bad = |m: &str| Err(MfError::InvalidInput(format!("quiver: {m}")));
        if self.arrows.len() != n || self.arrows.iter().any(|r| r.len() != n) {
            return bad("arrow matrix is not square with one row per label");
        }
        let mut seen = vec![false; n];
        for &t in &self.translation {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return bad("translation is not a permutation");
            }
        }
        if self.translation.len() != n {
            return bad("translation is not a permutation");
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| {
            self.arrows[i][i] == 0 && (0..n).all(|j| self.arrows[i][j] == self.arrows[j][i])
        })
    }
}

/// The quiver with arrows i → j counted by dim rad/rad² between the given
/// objects and τ = identity.
pub fn quiver_of<F: Field>(
    cx: &MfContext<F>,
    labels: Vec<String>,
    objects: &[Arc<MatrixFactorization<F>>],
) -> Result<ARQuiver> {
    let dims = cx.rad_power_dims(objects)?;
    let arrows = dims
        .iter()
        .map(|row| row.iter().map(|d| d.irreducible()).collect())
        .collect();
    ARQuiver::new(labels, arrows, (0..objects.len()).collect())
}

/// The AR quiver of a catalog family, nodes labelled M1..Mn.
pub fn ar_quiver<F: Field>(cx: &MfContext<F>, t: &SingularityType, field: &F) -> Result<ARQuiver> {
    let objects: Vec<_> = catalog_all(t, field)?
        .into_iter()
        .map(|e| Arc::new(e.factorization))
        .collect();
    if let Some(m) = objects.iter().find(|m| m.size() > MAX_OBJECT_SIZE) {
        return Err(MfError::PreconditionViolated(format!(
            "matrix size {} exceeds {MAX_OBJECT_SIZE}",
            m.size()
        )));
    }
    let labels = (1..=objects.len()).map(|i| format!("M{i}")).collect();
    quiver_of(cx, labels, &objects)
}

/// The Dynkin diagram with every edge replaced by a pair of opposite arrows.
pub fn dynkin_double_quiver(g: &DynkinGraph) -> ARQuiver {
    ARQuiver {
        labels: (1..=g.n).map(|i| format!("E{i}")).collect(),
        arrows: g
            .adjacency
            .iter()
            .map(|r| r.iter().map(|&a| a as usize).collect())
            .collect(),
        translation: (0..g.n).collect(),
    }
}

/// Equality of arrow matrices and translations, index by index or up to a
/// relabeling of the nodes.
pub fn quiver_equal(q1: &ARQuiver, q2: &ARQuiver, up_to_relabeling: bool) -> bool {
    if up_to_relabeling {
        find_relabeling(q1, q2).is_some()
    } else {
        q1.arrows == q2.arrows && q1.translation == q2.translation
    }
}

/// A bijection `p` with q2.arrows[p[i]][p[j]] = q1.arrows[i][j] that also
/// intertwines the translations. Backtracking search.
pub fn find_relabeling(q1: &ARQuiver, q2: &ARQuiver) -> Option<Vec<usize>> {
    let n = q1.len();
    if q2.len() != n {
        return None;
    }
    let profile = |q: &ARQuiver, i: usize| {
        let mut out: Vec<usize> = q.arrows[i].clone();
        out.sort_unstable();
        let mut inc: Vec<usize> = (0..n).map(|j| q.arrows[j][i]).collect();
        inc.sort_unstable();
        out.extend(inc);
        out.push(q.arrows[i][i]);
        out
    };
    let p1: Vec<_> = (0..n).map(|i| profile(q1, i)).collect();
    let p2: Vec<_> = (0..n).map(|i| profile(q2, i)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        k: usize,
        q1: &ARQuiver,
        q2: &ARQuiver,
        p1: &[Vec<usize>],
        p2: &[Vec<usize>],
        perm: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = perm.len();
        if k == n {
            return (0..n).all(|i| q2.translation[perm[i]] == perm[q1.translation[i]]);
        }
        for c in 0..n {
            if used[c] || p1[k] != p2[c] {
                continue;
            }
            let consistent = (0..k).all(|j| {
                q1.arrows[k][j] == q2.arrows[c][perm[j]] && q1.arrows[j][k] == q2.arrows[perm[j]][c]
            });
            if !consistent {
                continue;
            }
            perm[k] = c;
            used[c] = true;
            if extend(k + 1, q1, q2, p1, p2, perm, used) {
                return true;
            }
            used[c] = false;
        }
        perm[k] = usize::MAX;
        false
    }

    extend(0, q1, q2, &p1, &p2, &mut perm, &mut used).then_some(perm)
}

/// Serialization formats for [`emit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuiverFormat {
    Dot,
    Json,
}

impl FromStr for QuiverFormat {
    type Err = MfError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(QuiverFormat::Dot),
            "json" => Ok(QuiverFormat::Json),
            other => Err(MfError::UnknownFormat(other.to_string())),
        }
    }
}

/// Renders the quiver. In DOT the translation appears as dashed edges.
pub fn emit(q: &ARQuiver, format: QuiverFormat) -> String {
    match format {
        QuiverFormat::Json => {
            let mut s = serde_json::to_string_pretty(q).expect("quiver serializes");
            s.push('\n');
            s
        }
        QuiverFormat::Dot => {
            let mut s = String::from("digraph ARQuiver {\n");
            for l in &q.labels {
                let _ = writeln!(s, "  \"{l}\";");
            }
            for (i, row) in q.arrows.iter().enumerate() {
                for (j, &k) in row.iter().enumerate() {
                    for _ in 0..k {
                        let _ = writeln!(s, "  \"{}\" -> \"{}\";", q.labels[i], q.labels[j]);
                    }
                }
            }
            for (i, &t) in q.translation.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "  \"{}\" -> \"{}\" [style=dashed];",
                    q.labels[i], q.labels[t]
                );
            }
            s.push_str("}\n");
            s
        }
    }
}

pub fn emit_named(q: &ARQuiver, format: &str) -> Result<String> {
    Ok(emit(q, format.parse()?))
}

/// Reads the JSON form written by [`emit`].
pub fn parse_json(text: &str) -> Result<ARQuiver> {
    let q: ARQuiver =
        serde_json::from_str(text).map_err(|e| MfError::InvalidInput(e.to_string()))?;
    q.check()?;
    Ok(q)
}
