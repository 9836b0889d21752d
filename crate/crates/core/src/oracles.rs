//! Numerical checks for the containment, corner-point and separation claims
//! about side disks.
//!
//! Every check produces an [`OracleReport`]. Residuals are oriented so that a
//! larger value is worse: equality checks report a deviation, and
//! non-membership or disjointness checks report a penetration depth (the
//! negated margin). A case fails when its residual exceeds the check's
//! threshold.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{derive_seed, random_polygon};
use crate::geometry::{
    collinearity_residual, concyclic_residual, incenter, line_intersection, point_on_circle, Angle, Point,
    Tolerance,
};
use crate::intersection::{disks_intersect, intersection_graph, RelationKind};
use crate::polygon::{GreatPolygon, SideDisk, DEFAULT_MIN_GAP};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Replayable input angles in radians.
    pub angles: Vec<f64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub claim: String,
    pub trials: usize,
    pub failures: usize,
    /// Cases left out because they sat within `eps_geom` of a classification flip.
    pub skipped: usize,
    /// Largest residual seen over every component; `None` if nothing was measured.
    pub worst_residual: Option<f64>,
    /// Largest residual per named sub-check.
    pub components: BTreeMap<String, f64>,
    pub counterexample: Option<Counterexample>,
}

impl OracleReport {
    pub fn new(claim: &str) -> Self {
        OracleReport {
            claim: claim.to_string(),
            trials: 0,
            failures: 0,
            skipped: 0,
            worst_residual: None,
            components: BTreeMap::new(),
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, component: &str, residual: f64) {
        let slot = self
            .components
            .entry(component.to_string())
            .or_insert(f64::NEG_INFINITY);
        if residual > *slot || residual.is_nan() {
            *slot = residual;
        }
        self.worst_residual = Some(match self.worst_residual {
            Some(w) if w.is_nan() || w >= residual => w,
            _ => residual,
        });
    }

    fn finish_case(&mut self, failed: bool, angles: &[f64], detail: impl FnOnce() -> String) {
        self.trials += 1;
        if failed {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(Counterexample {
                    angles: angles.to_vec(),
                    detail: detail(),
                });
            }
        }
    }

    /// Folds another report for the same claim into this one.
    pub fn merge(&mut self, other: &OracleReport) {
        self.trials += other.trials;
        self.failures += other.failures;
        self.skipped += other.skipped;
        for (name, &value) in &other.components {
            self.record(name, value);
        }
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample.clone();
        }
    }
}

/// Four points on the unit circle in cyclic order, with the side disks of
/// the four arcs between consecutive points.
///
/// Either orientation is accepted; `ab` is always the disk of the arc between
/// `A` and `B` that avoids `C` and `D`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quadruple {
    pub a: Angle,
    pub b: Angle,
    pub c: Angle,
    pub d: Angle,
    pub ab: SideDisk,
    pub bc: SideDisk,
    pub cd: SideDisk,
    pub da: SideDisk,
}

impl Quadruple {
    pub fn new(a: Angle, b: Angle, c: Angle, d: Angle, min_gap: f64) -> Result<Quadruple> {
        let ccw = [a.ccw_to(b), b.ccw_to(c), c.ccw_to(d), d.ccw_to(a)];
        let cw = [b.ccw_to(a), c.ccw_to(b), d.ccw_to(c), a.ccw_to(d)];
        let closes = |arcs: &[f64; 4]| (arcs.iter().sum::<f64>() - TAU).abs() < 1e-9;
        let arcs = if closes(&ccw) {
            ccw
        } else if closes(&cw) {
            cw
        } else {
            return Err(Error::Precondition(
                "points are not in cyclic order around the circle".into(),
            ));
        };
        if let Some(gap) = arcs.iter().copied().find(|&g| g < min_gap || g == 0.0) {
            return Err(Error::Precondition(format!(
                "gap {gap:e} between consecutive points is below the minimum {min_gap:e}"
            )));
        }
        let counterclockwise = arcs == ccw;
        // each disk starts at whichever endpoint comes first counterclockwise
        let (ab, bc, cd, da) = if counterclockwise {
            (
                SideDisk::from_arc(0, a, arcs[0]),
                SideDisk::from_arc(1, b, arcs[1]),
                SideDisk::from_arc(2, c, arcs[2]),
                SideDisk::from_arc(3, d, arcs[3]),
            )
        } else {
            (
                SideDisk::from_arc(0, b, arcs[0]),
                SideDisk::from_arc(1, c, arcs[1]),
                SideDisk::from_arc(2, d, arcs[2]),
                SideDisk::from_arc(3, a, arcs[3]),
            )
        };
        Ok(Quadruple {
            a,
            b,
            c,
            d,
            ab,
            bc,
            cd,
            da,
        })
    }

    pub fn from_radians(angles: [f64; 4]) -> Result<Quadruple> {
        let [a, b, c, d] = angles.map(Angle::new);
        Quadruple::new(a, b, c, d, DEFAULT_MIN_GAP)
    }

    pub fn angles(&self) -> Vec<f64> {
        vec![
            self.a.radians(),
            self.b.radians(),
            self.c.radians(),
            self.d.radians(),
        ]
    }

    pub fn points(&self) -> [Point; 4] {
        [self.a, self.b, self.c, self.d].map(point_on_circle)
    }
}

/// Second boundary intersections of consecutive side disks, and the
/// intersection `e` of the diagonals `xz` and `yt`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CornerPoints {
    /// `∂(da) ∩ ∂(cd)`, other than `D`.
    pub x: Point,
    /// `∂(cd) ∩ ∂(bc)`, other than `C`.
    pub y: Point,
    /// `∂(bc) ∩ ∂(ab)`, other than `B`.
    pub z: Point,
    /// `∂(ab) ∩ ∂(da)`, other than `A`.
    pub t: Point,
    pub e: Point,
}

/// The boundary intersection of two side disks other than their shared vertex.
///
/// Both circles pass through `shared`, so the other common point is its mirror
/// image across the line of centers. This stays accurate when the circles are
/// close to tangent, where solving the two circle equations loses precision.
fn second_intersection(p: &SideDisk, q: &SideDisk, shared: Point, tol: Tolerance) -> Result<Point> {
    let axis = q.center - p.center;
    let len = axis.norm();
    if len <= tol.eps_strict {
        return Err(Error::CoincidentCenters { distance: len });
    }
    let u = axis * (1.0 / len);
    let foot = p.center + u * (shared - p.center).dot(u);
    let other = foot * 2.0 - shared;
    if other.distance(shared) <= tol.eps_geom {
        return Err(Error::Degenerate(format!(
            "side disks {} and {} are tangent at their shared vertex",
            p.index, q.index
        )));
    }
    let residual = (p.center.distance(other) - p.radius)
        .abs()
        .max((q.center.distance(other) - q.radius).abs());
    if residual > tol.eps_geom {
        return Err(Error::Degenerate(format!(
            "side disks {} and {} do not share vertex {shared}",
            p.index, q.index
        )));
    }
    Ok(other)
}

pub fn corner_points(q: &Quadruple, tol: Tolerance) -> Result<CornerPoints> {
    let [pa, pb, pc, pd] = q.points();
    let x = second_intersection(&q.da, &q.cd, pd, tol)?;
    let y = second_intersection(&q.cd, &q.bc, pc, tol)?;
    let z = second_intersection(&q.bc, &q.ab, pb, tol)?;
    let t = second_intersection(&q.ab, &q.da, pa, tol)?;
    let e = line_intersection(x, z, y, t)
        .ok_or_else(|| Error::Degenerate("diagonals XZ and YT are parallel".into()))?;
    Ok(CornerPoints { x, y, z, t, e })
}

/// Each corner lies outside the two side disks it is not defined by.
///
/// Components are penetration depths `radius - distance`; a case fails when
/// any exceeds `eps_geom`.
pub fn lemma2a_check(q: &Quadruple, corners: &CornerPoints, tol: Tolerance) -> OracleReport {
    let claims: [(&str, Point, &SideDisk); 8] = [
        ("x_outside_ab", corners.x, &q.ab),
        ("y_outside_ab", corners.y, &q.ab),
        ("y_outside_da", corners.y, &q.da),
        ("z_outside_da", corners.z, &q.da),
        ("z_outside_cd", corners.z, &q.cd),
        ("t_outside_cd", corners.t, &q.cd),
        ("x_outside_bc", corners.x, &q.bc),
        ("t_outside_bc", corners.t, &q.bc),
    ];
    let mut report = OracleReport::new("lemma2a");
    let mut violated = Vec::new();
    for (name, point, disk) in claims {
        let depth = disk.radius - disk.center.distance(point);
        report.record(name, depth);
        if depth > tol.eps_geom {
            violated.push(format!("{name} (depth {depth:e})"));
        }
    }
    report.finish_case(!violated.is_empty(), &q.angles(), || violated.join(", "));
    report
}

/// `XYZT` has equal diagonals that bisect each other, and is concyclic.
pub fn lemma2b_rectangle_check(
    corners: &CornerPoints,
    angles: &[f64],
    tol: Tolerance,
) -> Result<OracleReport> {
    let CornerPoints { x, y, z, t, .. } = *corners;
    let midpoints = x.midpoint(z).distance(y.midpoint(t));
    let diagonals = (x.distance(z) - y.distance(t)).abs();
    let cyclic = concyclic_residual(x, y, z, t, tol)?;

    let mut report = OracleReport::new("lemma2b");
    report.record("diagonal_midpoints", midpoints);
    report.record("diagonal_lengths", diagonals);
    report.record("concyclic", cyclic);
    let failed = midpoints > tol.eps_geom || diagonals > tol.eps_geom || cyclic > tol.eps_geom;
    report.finish_case(failed, angles, || {
        format!(
            "midpoint gap {midpoints:e}, diagonal difference {diagonals:e}, concyclic residual {cyclic:e}"
        )
    });
    Ok(report)
}

/// `X, Y, Z, T` are the incenters of `ADC`, `DCB`, `CBA` and `BAD`.
pub fn incenter_coincidence_check(
    q: &Quadruple,
    corners: &CornerPoints,
    tol: Tolerance,
) -> Result<OracleReport> {
    let [a, b, c, d] = q.points();
    let identities = [
        ("x_incenter_adc", corners.x, incenter(a, d, c)?),
        ("y_incenter_dcb", corners.y, incenter(d, c, b)?),
        ("z_incenter_cba", corners.z, incenter(c, b, a)?),
        ("t_incenter_bad", corners.t, incenter(b, a, d)?),
    ];
    let mut report = OracleReport::new("incenter");
    let mut worst = 0.0f64;
    for (name, corner, center) in identities {
        let gap = corner.distance(center);
        worst = worst.max(gap);
        report.record(name, gap);
    }
    report.finish_case(worst >= tol.eps_geom, &q.angles(), || {
        format!("corner-incenter distance {worst:e}")
    });
    Ok(report)
}

/// `F, X, A` and `W, X, C` are collinear, with `F` and `W` the centers of
/// the `cd` and `da` disks.
pub fn collinearity_check(q: &Quadruple, corners: &CornerPoints, tol: Tolerance) -> OracleReport {
    let [a, _, c, _] = q.points();
    let fxa = collinearity_residual(q.cd.center, corners.x, a);
    let wxc = collinearity_residual(q.da.center, corners.x, c);
    let mut report = OracleReport::new("collinear");
    report.record("f_x_a", fxa);
    report.record("w_x_c", wxc);
    report.finish_case(fxa > tol.eps_geom || wxc > tol.eps_geom, &q.angles(), || {
        format!("F,X,A residual {fxa:e}, W,X,C residual {wxc:e}")
    });
    report
}

/// Some pair of opposite side disks is disjoint, and the diagonal
/// intersection `E` of `XYZT` lies on both lines joining opposite centers.
pub fn step1_check(q: &Quadruple, tol: Tolerance) -> Result<OracleReport> {
    let corners = corner_points(q, tol)?;
    let ab_cd = disks_intersect(&q.ab, &q.cd, tol);
    let bc_da = disks_intersect(&q.bc, &q.da, tol);
    let some_disjoint = ab_cd.kind == RelationKind::Disjoint || bc_da.kind == RelationKind::Disjoint;

    // F = cd, G = bc, H = ab, W = da
    let on_fh = collinearity_residual(q.cd.center, corners.e, q.ab.center);
    let on_gw = collinearity_residual(q.bc.center, corners.e, q.da.center);

    let mut report = OracleReport::new("step1");
    report.record("opposite_pair_overlap", -ab_cd.margin.max(bc_da.margin));
    report.record("e_on_fh", on_fh);
    report.record("e_on_gw", on_gw);
    let failed = !some_disjoint || on_fh > tol.eps_geom || on_gw > tol.eps_geom;
    report.finish_case(failed, &q.angles(), || {
        format!(
            "opposite margins ({:e}, {:e}), E off FH by {on_fh:e}, off GW by {on_gw:e}",
            ab_cd.margin, bc_da.margin
        )
    });
    Ok(report)
}

/// For every intersecting non-neighbouring pair `(i, j)`, each disk strictly
/// between `i` and `j` is disjoint from each disk strictly between `j` and `i`.
///
/// One case per red diagonal; the `separation` component is the largest
/// negated margin over the pairs required to be disjoint.
pub fn step2_check(poly: &GreatPolygon, tol: Tolerance) -> Result<OracleReport> {
    let n = poly.n();
    if n < 4 {
        return Err(Error::TooFewVertices { min: 4, got: n });
    }
    let graph = intersection_graph(poly, tol)?;
    let disks = poly.side_disks();
    let angles = poly.angles_radians();
    let mut report = OracleReport::new("step2");

    for &(i, j) in &graph.red_diagonals {
        let inside: Vec<usize> = (i + 1..j).collect();
        let outside: Vec<usize> = (j + 1..n).chain(0..i).collect();
        let mut bad = None;
        for &k in &inside {
            for &l in &outside {
                let rel = disks_intersect(&disks[k], &disks[l], tol);
                report.record("separation", -rel.margin);
                if rel.kind == RelationKind::Intersecting && bad.is_none() {
                    bad = Some((k, l, rel.margin));
                }
            }
        }
        report.finish_case(bad.is_some(), &angles, || {
            let (k, l, m) = bad.unwrap();
            format!("disks {i} and {j} intersect but {k} and {l} do too (margin {m:e})")
        });
    }
    Ok(report)
}

/// The containment claim for nested arcs sharing endpoint `A`.
///
/// With `ω₁` the side disk of the counterclockwise arc `a -> b` and `ω₂` that
/// of `a -> c`, draws `samples` uniform points of `ω₂` inside the unit disk and
/// requires every one farther than `10·eps_geom` from `A` to lie strictly
/// inside `ω₁`. The residual is `|p - O₁| - r₁`.
pub fn lemma1_check(
    a: Angle,
    b: Angle,
    c: Angle,
    samples: usize,
    seed: u64,
    tol: Tolerance,
) -> Result<OracleReport> {
    let outer = a.ccw_to(b);
    let inner = a.ccw_to(c);
    if samples == 0 {
        return Err(Error::Precondition("samples must be at least 1".into()));
    }
    if !(inner > 0.0 && inner < outer) {
        return Err(Error::Precondition(
            "c must lie strictly inside the counterclockwise arc from a to b".into(),
        ));
    }
    let w1 = SideDisk::from_arc(0, a, outer);
    let w2 = SideDisk::from_arc(1, a, inner);
    let pa = point_on_circle(a);
    let exclusion = 10.0 * tol.eps_geom;
    let angles = [a.radians(), b.radians(), c.radians()];

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = OracleReport::new("lemma1");
    let budget = samples.saturating_mul(1000);
    let mut attempts = 0usize;
    let mut accepted = 0usize;
    while accepted < samples {
        attempts += 1;
        if attempts > budget {
            return Err(Error::Construction(format!(
                "rejection sampler accepted only {accepted} of {samples} points"
            )));
        }
        let p = Point::new(
            w2.center.x + w2.radius * (2.0 * rng.gen::<f64>() - 1.0),
            w2.center.y + w2.radius * (2.0 * rng.gen::<f64>() - 1.0),
        );
        if p.norm() > 1.0 || w2.center.distance(p) > w2.radius {
            continue;
        }
        accepted += 1;
        if p.distance(pa) <= exclusion {
            report.skipped += 1;
            continue;
        }
        let dist = w1.center.distance(p);
        report.record("penetration", dist - w1.radius);
        let failed = dist >= w1.radius - tol.eps_strict;
        report.finish_case(failed, &angles, || {
            format!(
                "sample {p} is not interior to the outer disk (distance {dist}, radius {})",
                w1.radius
            )
        });
    }
    Ok(report)
}

/// Which claim a batch run exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaClaim {
    #[serde(rename = "1")]
    Lemma1,
    #[serde(rename = "2a")]
    Lemma2a,
    #[serde(rename = "2b")]
    Lemma2b,
    Incenter,
    Collinear,
    Step1,
    Step2,
}

impl std::str::FromStr for LemmaClaim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "1" => LemmaClaim::Lemma1,
            "2a" => LemmaClaim::Lemma2a,
            "2b" => LemmaClaim::Lemma2b,
            "incenter" => LemmaClaim::Incenter,
            "collinear" => LemmaClaim::Collinear,
            "step1" => LemmaClaim::Step1,
            "step2" => LemmaClaim::Step2,
            other => {
                return Err(Error::Precondition(format!(
                    "unknown claim '{other}' (expected 1, 2a, 2b, incenter, collinear, step1 or step2)"
                )))
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatchParams {
    pub trials: usize,
    pub seed: u64,
    pub tol: Tolerance,
    /// Points drawn per triple for the containment claim.
    pub samples: usize,
    /// Vertex count of the random polygons used for the separation claim.
    pub step2_n: usize,
}

impl Default for BatchParams {
    fn default() -> Self {
        BatchParams {
            trials: 500,
            seed: 0,
            tol: Tolerance::default(),
            samples: 10_000,
            step2_n: 8,
        }
    }
}

const QUAD_STREAM: u64 = 0x51;
const TRIPLE_STREAM: u64 = 0x7a;
const POLY_STREAM: u64 = 0x52;

/// Random quadruple number `index` of the stream seeded by `seed`.
pub fn random_quadruple(seed: u64, index: u64) -> Result<Quadruple> {
    let poly = random_polygon(4, derive_seed(seed, QUAD_STREAM, index), DEFAULT_MIN_GAP)?;
    let v = poly.vertex_angles();
    Quadruple::new(v[0], v[1], v[2], v[3], DEFAULT_MIN_GAP)
}

/// Random `(a, b, c)` with `c` strictly inside the counterclockwise arc `a -> b`
/// and every gap at least `DEFAULT_MIN_GAP`.
pub fn random_triple(seed: u64, index: u64) -> (Angle, Angle, Angle) {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, TRIPLE_STREAM, index));
    loop {
        let a = rng.gen::<f64>() * TAU;
        let span = rng.gen::<f64>() * TAU;
        let frac = rng.gen::<f64>();
        let inner = span * frac;
        if inner >= DEFAULT_MIN_GAP && span - inner >= DEFAULT_MIN_GAP && TAU - span >= DEFAULT_MIN_GAP {
            return (Angle::new(a), Angle::new(a + span), Angle::new(a + inner));
        }
    }
}

/// Runs every quadruple-based check on one quadruple.
pub fn quadruple_suite(q: &Quadruple, tol: Tolerance) -> Result<Vec<OracleReport>> {
    let corners = corner_points(q, tol)?;
    Ok(vec![
        lemma2a_check(q, &corners, tol),
        lemma2b_rectangle_check(&corners, &q.angles(), tol)?,
        incenter_coincidence_check(q, &corners, tol)?,
        collinearity_check(q, &corners, tol),
        step1_check(q, tol)?,
    ])
}

fn quadruple_case(claim: LemmaClaim, q: &Quadruple, tol: Tolerance) -> Result<OracleReport> {
    if claim == LemmaClaim::Step1 {
        return step1_check(q, tol);
    }
    let corners = corner_points(q, tol)?;
    match claim {
        LemmaClaim::Lemma2a => Ok(lemma2a_check(q, &corners, tol)),
        LemmaClaim::Lemma2b => lemma2b_rectangle_check(&corners, &q.angles(), tol),
        LemmaClaim::Incenter => incenter_coincidence_check(q, &corners, tol),
        LemmaClaim::Collinear => Ok(collinearity_check(q, &corners, tol)),
        _ => unreachable!("not a quadruple claim"),
    }
}

/// Runs `params.trials` seeded random cases of one claim and merges them.
pub fn run_claim(claim: LemmaClaim, params: &BatchParams) -> Result<OracleReport> {
    let name = match claim {
        LemmaClaim::Lemma1 => "lemma1",
        LemmaClaim::Lemma2a => "lemma2a",
        LemmaClaim::Lemma2b => "lemma2b",
        LemmaClaim::Incenter => "incenter",
        LemmaClaim::Collinear => "collinear",
        LemmaClaim::Step1 => "step1",
        LemmaClaim::Step2 => "step2",
    };
    let mut total = OracleReport::new(name);
    for index in 0..params.trials as u64 {
        let case = match claim {
            LemmaClaim::Lemma1 => {
                let (a, b, c) = random_triple(params.seed, index);
                let sub = derive_seed(params.seed, TRIPLE_STREAM + 1, index);
                let r = lemma1_check(a, b, c, params.samples, sub, params.tol)?;
                // one trial per triple rather than per sample
                OracleReport {
                    trials: 1,
                    failures: usize::from(r.failures > 0),
                    ..r
                }
            }
            LemmaClaim::Step2 => {
                let poly = random_polygon(
                    params.step2_n,
                    derive_seed(params.seed, POLY_STREAM, index),
                    DEFAULT_MIN_GAP,
                )?;
                let graph = intersection_graph(&poly, params.tol)?;
                let near = graph
                    .diagonals
                    .iter()
                    .any(|c| c.relation.margin.abs() <= params.tol.eps_geom);
                if near {
                    total.skipped += 1;
                    continue;
                }
                let r = step2_check(&poly, params.tol)?;
                OracleReport {
                    trials: 1,
                    failures: usize::from(r.failures > 0),
                    ..r
                }
            }
            _ => quadruple_case(claim, &random_quadruple(params.seed, index)?, params.tol)?,
        };
        total.merge(&case);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::triangle_config;
    use crate::polygon::regular_polygon;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn square() -> Quadruple {
        Quadruple::from_radians([FRAC_PI_2, 0.0, 3.0 * FRAC_PI_2, PI]).unwrap()
    }

    #[test]
    fn square_corner_points() {
        let c = corner_points(&square(), tol()).unwrap();
        let k = SQRT_2 - 1.0;
        assert_abs_diff_eq!(c.x.x, -k, epsilon = 1e-12);
        assert_abs_diff_eq!(c.x.y, 0.0, epsilon = 1e-12);
        // Y, Z, T are X rotated by successive quarter turns
        for (p, phi) in [(c.y, FRAC_PI_2), (c.z, PI), (c.t, 3.0 * FRAC_PI_2)] {
            let r = c.x.rotate(phi);
            assert_abs_diff_eq!(p.x, r.x, epsilon = 1e-12);
            assert_abs_diff_eq!(p.y, r.y, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(c.e.norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn orientation_does_not_change_disks() {
        let cw = square();
        let ccw = Quadruple::from_radians([FRAC_PI_2, PI, 3.0 * FRAC_PI_2, 0.0]).unwrap();
        assert_abs_diff_eq!(cw.ab.center_angle.radians(), PI / 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(ccw.ab.center_angle.radians(), 3.0 * PI / 4.0, epsilon = 1e-15);
    }

    #[test]
    fn quadruple_preconditions() {
        assert!(Quadruple::from_radians([0.0, 2.0, 1.0, 3.0]).is_err());
        assert!(Quadruple::from_radians([0.0, 1e-9, 2.0, 4.0]).is_err());
    }

    #[test]
    fn square_suite_passes() {
        let q = square();
        let corners = corner_points(&q, tol()).unwrap();
        let a = lemma2a_check(&q, &corners, tol());
        assert!(a.passed());
        assert!(a.components.values().all(|&depth| depth < 0.0));

        let b = lemma2b_rectangle_check(&corners, &q.angles(), tol()).unwrap();
        assert!(b.passed());
        // XYZT is a square with half-diagonal sqrt(2) - 1
        assert_abs_diff_eq!(corners.x.distance(corners.e), SQRT_2 - 1.0, epsilon = 1e-12);

        let inc = incenter_coincidence_check(&q, &corners, tol()).unwrap();
        assert!(inc.worst_residual.unwrap() < 1e-12);
        assert!(collinearity_check(&q, &corners, tol()).passed());

        let s1 = step1_check(&q, tol()).unwrap();
        assert!(s1.passed());
        assert!(disks_intersect(&q.ab, &q.cd, tol()).is_disjoint());
        assert!(disks_intersect(&q.bc, &q.da, tol()).is_disjoint());
    }

    #[test]
    fn lemma2a_flags_injected_corner() {
        let q = square();
        let mut corners = corner_points(&q, tol()).unwrap();
        corners.x = q.ab.center;
        let r = lemma2a_check(&q, &corners, tol());
        assert_eq!(r.failures, 1);
        assert!(r.counterexample.unwrap().detail.contains("x_outside_ab"));
    }

    #[test]
    fn lemma2b_degenerate_corners() {
        let mut corners = corner_points(&square(), tol()).unwrap();
        corners.y = corners.x.midpoint(corners.z);
        assert!(matches!(
            lemma2b_rectangle_check(&corners, &[], tol()),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn incenter_check_is_sensitive() {
        let q = Quadruple::from_radians([0.2, 1.4, 3.3, 4.9]).unwrap();
        let other = Quadruple::from_radians([0.1, 1.9, 3.0, 5.2]).unwrap();
        let wrong = corner_points(&other, tol()).unwrap();
        assert!(!incenter_coincidence_check(&q, &wrong, tol()).unwrap().passed());
        let right = corner_points(&q, tol()).unwrap();
        assert!(incenter_coincidence_check(&q, &right, tol()).unwrap().passed());
    }

    #[test]
    fn collinearity_check_is_sensitive() {
        let q = Quadruple::from_radians([0.2, 1.4, 3.3, 4.9]).unwrap();
        let mut corners = corner_points(&q, tol()).unwrap();
        assert!(collinearity_check(&q, &corners, tol()).passed());
        corners.x = corners.e;
        assert!(!collinearity_check(&q, &corners, tol()).passed());
    }

    #[test]
    fn step1_perturbed_square() {
        let q =
            Quadruple::from_radians([FRAC_PI_2 + 1e-3, -1e-3, 3.0 * FRAC_PI_2 + 1e-3, PI - 1e-3]).unwrap();
        assert!(step1_check(&q, tol()).unwrap().passed());
    }

    #[test]
    fn step2_examples() {
        let r = step2_check(&regular_polygon(6).unwrap(), tol()).unwrap();
        assert_eq!(r.trials, 0);
        assert!(r.passed());

        let (poly, _) = triangle_config(7, None).unwrap();
        let r = step2_check(&poly, tol()).unwrap();
        assert_eq!(r.trials, 4);
        assert!(r.passed());

        assert!(step2_check(&regular_polygon(3).unwrap(), tol()).is_err());
    }

    #[test]
    fn lemma1_examples() {
        let r = lemma1_check(
            Angle::new(0.0),
            Angle::new(PI),
            Angle::new(FRAC_PI_2),
            10_000,
            5,
            tol(),
        )
        .unwrap();
        assert_eq!(r.failures, 0);
        assert_eq!(r.trials + r.skipped, 10_000);
        assert!(r.worst_residual.unwrap() < 0.0);

        let r = lemma1_check(
            Angle::new(0.0),
            Angle::new(PI),
            Angle::new(0.01),
            10_000,
            6,
            tol(),
        )
        .unwrap();
        assert_eq!(r.failures, 0);

        assert!(lemma1_check(Angle::new(0.0), Angle::new(PI), Angle::new(PI), 10, 0, tol()).is_err());
        assert!(lemma1_check(Angle::new(0.0), Angle::new(PI), Angle::new(4.0), 10, 0, tol()).is_err());
    }

    #[test]
    fn claim_parsing() {
        assert_eq!("2b".parse::<LemmaClaim>().unwrap(), LemmaClaim::Lemma2b);
        assert_eq!("step2".parse::<LemmaClaim>().unwrap(), LemmaClaim::Step2);
        assert!("bogus".parse::<LemmaClaim>().is_err());
    }

    #[test]
    fn merge_keeps_worst() {
        let mut a = OracleReport::new("x");
        a.record("r", 1.0);
        a.finish_case(false, &[], String::new);
        let mut b = OracleReport::new("x");
        b.record("r", 3.0);
        b.finish_case(true, &[1.0], || "bad".into());
        a.merge(&b);
        assert_eq!(a.trials, 2);
        assert_eq!(a.failures, 1);
        assert_eq!(a.worst_residual, Some(3.0));
        assert_eq!(a.counterexample.unwrap().angles, vec![1.0]);
    }
}
