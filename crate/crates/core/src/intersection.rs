//! Pairwise side-disk intersection, the coloured intersection graph and the
//! disjoint-pair bounds.
//!
//! Two side disks with arc lengths `Δi`, `Δj` whose centers sit `δ` apart
//! along the circle have center distance `2 sin(δ/2)` and radii
//! `2 sin(Δ/4)`, so the sign of
//!
//! ```text
//! margin = sin(δ/2) - (sin(Δi/4) + sin(Δj/4))
//! ```
//!
//! decides the relation. Disks are closed: tangency counts as intersecting.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Tolerance;
use crate::polygon::{GreatPolygon, SideDisk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationKind {
    Disjoint,
    Intersecting,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Relation {
    pub kind: RelationKind,
    /// Positive means disjoint.
    pub margin: f64,
}

impl Relation {
    pub fn is_disjoint(&self) -> bool {
        self.kind == RelationKind::Disjoint
    }
}

pub fn intersection_margin(a: &SideDisk, b: &SideDisk) -> f64 {
    let delta = a.center_angle.circular_distance(b.center_angle);
    (0.5 * delta).sin() - ((0.25 * a.arc_length).sin() + (0.25 * b.arc_length).sin())
}

/// Classifies a pair of side disks by the sign of the closed-form margin.
///
/// The tolerance does not move the decision; near-tangent pairs are left to
/// callers, which see the margin.
pub fn disks_intersect(a: &SideDisk, b: &SideDisk, _tol: Tolerance) -> Relation {
    let margin = intersection_margin(a, b);
    let kind = if margin > 0.0 {
        RelationKind::Disjoint
    } else {
        RelationKind::Intersecting
    };
    Relation { kind, margin }
}

/// Unordered index pair with `0 <= i < j < n`.
pub type Pair = (usize, usize);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifiedDiagonal {
    pub pair: Pair,
    pub relation: Relation,
}

/// Intersection graph over the cyclic order of side disks. Diagonals (non-adjacent
/// pairs) are coloured red when their disks intersect and blue when disjoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntersectionGraph {
    pub n: usize,
    pub neighbour_edges: Vec<Pair>,
    pub red_diagonals: Vec<Pair>,
    pub blue_diagonals: Vec<Pair>,
    /// Every diagonal with its relation, in lexicographic pair order.
    pub diagonals: Vec<ClassifiedDiagonal>,
}

pub fn is_cyclically_adjacent(i: usize, j: usize, n: usize) -> bool {
    (i + 1) % n == j || (j + 1) % n == i
}

pub fn intersection_graph(poly: &GreatPolygon, tol: Tolerance) -> Result<IntersectionGraph> {
    let n = poly.n();
    if n < 3 {
        return Err(Error::TooFewVertices { min: 3, got: n });
    }
    let disks = poly.side_disks();
    let neighbour_edges = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            (i.min(j), i.max(j))
        })
        .collect();

    let mut diagonals = Vec::with_capacity(n * (n - 3) / 2);
    let mut red = Vec::new();
    let mut blue = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if is_cyclically_adjacent(i, j, n) {
                continue;
            }
            let relation = disks_intersect(&disks[i], &disks[j], tol);
            match relation.kind {
                RelationKind::Intersecting => red.push((i, j)),
                RelationKind::Disjoint => blue.push((i, j)),
            }
            diagonals.push(ClassifiedDiagonal {
                pair: (i, j),
                relation,
            });
        }
    }
    Ok(IntersectionGraph {
        n,
        neighbour_edges,
        red_diagonals: red,
        blue_diagonals: blue,
        diagonals,
    })
}

/// Number of disjoint side-disk pairs. Neighbours always intersect, so this is
/// the blue diagonal count.
pub fn disjoint_pair_count(graph: &IntersectionGraph) -> usize {
    graph.blue_diagonals.len()
}

/// `((n-2)(n-3)/2, n(n-3)/2)`.
pub fn theorem_bounds(n: usize) -> Result<(usize, usize)> {
    if n < 3 {
        return Err(Error::TooFewVertices { min: 3, got: n });
    }
    Ok(((n - 2) * (n - 3) / 2, n * (n - 3) / 2))
}

/// Whether `x` lies strictly inside the counterclockwise run from `from` to `to`.
fn strictly_between(from: usize, to: usize, x: usize, n: usize) -> bool {
    let span = (to + n - from) % n;
    let off = (x + n - from) % n;
    off > 0 && off < span
}

/// Whether chords `{i, j}` and `{k, l}` of a convex n-gon cross.
pub fn chords_cross(i: usize, j: usize, k: usize, l: usize, n: usize) -> Result<bool> {
    for idx in [i, j, k, l] {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx, n });
        }
    }
    if i == j || k == l {
        return Err(Error::Precondition("chord endpoints must differ".into()));
    }
    if i == k || i == l || j == k || j == l {
        return Err(Error::SharedEndpoint);
    }
    Ok(strictly_between(i, j, k, n) != strictly_between(i, j, l, n))
}

/// First crossing pair of red diagonals, if any.
pub fn find_red_crossing(graph: &IntersectionGraph) -> Option<(Pair, Pair)> {
    let red = &graph.red_diagonals;
    for (a, &(i, j)) in red.iter().enumerate() {
        for &(k, l) in &red[a + 1..] {
            if i == k || i == l || j == k || j == l {
                continue;
            }
            if chords_cross(i, j, k, l, graph.n).unwrap_or(false) {
                return Some(((i, j), (k, l)));
            }
        }
    }
    None
}

pub fn red_noncrossing(graph: &IntersectionGraph) -> bool {
    find_red_crossing(graph).is_none()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub d: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub bounds_ok: bool,
    pub noncrossing_ok: bool,
    /// Smallest `|margin|` over the diagonal pairs; `None` when there are no
    /// diagonals (n = 3).
    pub min_abs_margin: Option<f64>,
    pub red_diagonals: Vec<Pair>,
    pub blue_diagonals: Vec<Pair>,
}

impl AnalysisReport {
    pub fn verified(&self) -> bool {
        self.bounds_ok && self.noncrossing_ok
    }

    /// Whether some diagonal pair sits within `eps_geom` of a classification flip.
    pub fn near_tangent(&self, tol: Tolerance) -> bool {
        self.min_abs_margin.is_some_and(|m| m <= tol.eps_geom)
    }
}

pub fn analyze_graph(graph: &IntersectionGraph) -> Result<AnalysisReport> {
    let (lower_bound, upper_bound) = theorem_bounds(graph.n)?;
    let d = disjoint_pair_count(graph);
    let min_abs_margin = graph
        .diagonals
        .iter()
        .map(|c| c.relation.margin.abs())
        .reduce(f64::min);
    Ok(AnalysisReport {
        n: graph.n,
        d,
        lower_bound,
        upper_bound,
        bounds_ok: lower_bound <= d && d <= upper_bound,
        noncrossing_ok: red_noncrossing(graph),
        min_abs_margin,
        red_diagonals: graph.red_diagonals.clone(),
        blue_diagonals: graph.blue_diagonals.clone(),
    })
}

pub fn analyze(poly: &GreatPolygon, tol: Tolerance) -> Result<AnalysisReport> {
    analyze_graph(&intersection_graph(poly, tol)?)
}
