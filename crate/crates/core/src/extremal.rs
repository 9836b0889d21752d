//! Tightness witnesses for the disjoint-pair bounds, random configurations,
//! and the seeded verification harness.
//!
//! # Seeding
//!
//! Every random object is drawn from its own `ChaCha8Rng` whose seed is
//! [`derive_seed`]`(master, stream, index)`: a SplitMix64 finalizer applied
//! to the master seed mixed with a stream tag and then with the case index.
//! Harness trial `t` for vertex count `n` uses stream `n`, index `t`, so the
//! report does not depend on evaluation order or thread count.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Angle, Tolerance};
use crate::intersection::{analyze, disks_intersect, is_cyclically_adjacent, theorem_bounds, Pair};
use crate::oracles::{quadruple_suite, step2_check, Quadruple};
use crate::polygon::{make_polygon, polygon_from_arcs, regular_polygon, GreatPolygon, DEFAULT_MIN_GAP};

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn derive_seed(master: u64, stream: u64, index: u64) -> u64 {
    splitmix64(splitmix64(master ^ splitmix64(stream)) ^ index)
}

/// The equal-arc configuration, which attains the upper bound `n(n-3)/2`.
pub fn star(n: usize) -> Result<(GreatPolygon, usize)> {
    let (_, upper) = theorem_bounds(n)?;
    Ok((regular_polygon(n)?, upper))
}

/// Whether disk 0 meets every other disk while the others meet only their
/// cyclic neighbours, with every non-neighbouring pair at least `eps_geom`
/// away from a flip.
pub fn has_triangle_pattern(poly: &GreatPolygon, tol: Tolerance) -> bool {
    let n = poly.n();
    let disks = poly.side_disks();
    for i in 0..n {
        for j in i + 1..n {
            let rel = disks_intersect(&disks[i], &disks[j], tol);
            let adjacent = is_cyclically_adjacent(i, j, n);
            let should_meet = i == 0 || adjacent;
            if rel.is_disjoint() == should_meet || (!adjacent && rel.margin.abs() <= tol.eps_geom) {
                return false;
            }
        }
    }
    true
}

fn triangle_arcs(n: usize, s: f64) -> Vec<f64> {
    let mut arcs = vec![s; n];
    arcs[0] = TAU - (n - 1) as f64 * s;
    arcs
}

/// One long arc followed by `n - 1` equal short arcs of length `s`, chosen
/// so the long arc's disk meets all others and the short arcs' disks meet
/// only their neighbours. This attains the lower bound `(n-2)(n-3)/2`.
///
/// Without `s`, starts from `π/n²` and halves until the pattern holds.
pub fn triangle_config(n: usize, s: Option<f64>) -> Result<(GreatPolygon, usize)> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "triangle configuration needs n >= 4, got {n}"
        )));
    }
    let tol = Tolerance::default();
    let (lower, _) = theorem_bounds(n)?;
    let build = |s: f64| -> Option<GreatPolygon> {
        let poly = polygon_from_arcs(&triangle_arcs(n, s), 0.0).ok()?;
        has_triangle_pattern(&poly, tol).then_some(poly)
    };

    if let Some(s) = s {
        if !(s.is_finite() && s > 0.0 && (n - 1) as f64 * s < TAU) {
            return Err(Error::Precondition(format!(
                "short arc length {s} must satisfy 0 < (n-1)·s < 2π"
            )));
        }
        return build(s).map(|p| (p, lower)).ok_or_else(|| {
            Error::Construction(format!(
                "short arc {s} does not give the one-hub pattern for n = {n}"
            ))
        });
    }

    let mut s = PI / (n * n) as f64;
    for _ in 0..=64 {
        if let Some(p) = build(s) {
            return Ok((p, lower));
        }
        s *= 0.5;
    }
    Err(Error::Construction(format!(
        "no short arc length gave the one-hub pattern for n = {n}"
    )))
}

/// Diagonals at the hub disk of [`triangle_config`].
pub fn hub_fan(n: usize) -> Vec<Pair> {
    (2..n.saturating_sub(1)).map(|j| (0, j)).collect()
}

const RESAMPLE_BUDGET: usize = 10_000;

/// `n` i.i.d. uniform angles, redrawn until every cyclic gap is at least `min_gap`.
pub fn random_polygon(n: usize, seed: u64, min_gap: f64) -> Result<GreatPolygon> {
    if n < 2 {
        return Err(Error::TooFewVertices { min: 2, got: n });
    }
    if min_gap.is_nan() || min_gap < 0.0 || min_gap * n as f64 >= TAU {
        return Err(Error::Precondition(format!(
            "minimum gap {min_gap} is infeasible for {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut angles = vec![0.0; n];
    for _ in 0..RESAMPLE_BUDGET {
        for a in angles.iter_mut() {
            *a = rng.gen::<f64>() * TAU;
        }
        match make_polygon(&angles, min_gap) {
            Ok(p) => return Ok(p),
            Err(Error::NearDuplicate { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Construction(format!(
        "no valid {n}-vertex sample within {RESAMPLE_BUDGET} draws at minimum gap {min_gap}"
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarnessParams {
    pub n_min: usize,
    pub n_max: usize,
    pub trials_per_n: usize,
    pub seed: u64,
    pub eps_geom: f64,
    pub eps_strict: f64,
}

impl HarnessParams {
    pub fn new(n_min: usize, n_max: usize, trials_per_n: usize, seed: u64, tol: Tolerance) -> Self {
        HarnessParams {
            n_min,
            n_max,
            trials_per_n,
            seed,
            eps_geom: tol.eps_geom,
            eps_strict: tol.eps_strict,
        }
    }

    pub fn tolerance(&self) -> Tolerance {
        Tolerance {
            eps_geom: self.eps_geom,
            eps_strict: self.eps_strict,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationCategory {
    Bounds,
    Noncrossing,
    Step2,
    Lemma,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarnessCounterexample {
    pub category: ViolationCategory,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub angles_radians: Vec<f64>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TrialCounts {
    pub trials: usize,
    pub passed: usize,
    pub skipped: usize,
    /// Trials with at least one violation of any category.
    pub violated: usize,
    pub bounds_violations: usize,
    pub noncrossing_violations: usize,
    pub step2_failures: usize,
    pub lemma_failures: usize,
}

impl TrialCounts {
    fn add(&mut self, other: &TrialCounts) {
        self.trials += other.trials;
        self.passed += other.passed;
        self.skipped += other.skipped;
        self.violated += other.violated;
        self.bounds_violations += other.bounds_violations;
        self.noncrossing_violations += other.noncrossing_violations;
        self.step2_failures += other.step2_failures;
        self.lemma_failures += other.lemma_failures;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PerN {
    pub n: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub min_d: Option<usize>,
    pub max_d: Option<usize>,
    #[serde(flatten)]
    pub counts: TrialCounts,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarnessReport {
    pub params: HarnessParams,
    pub per_n: Vec<PerN>,
    pub totals: TrialCounts,
    /// Largest residual seen by the quadruple checks, per check.
    pub worst_lemma_residuals: std::collections::BTreeMap<String, f64>,
    /// First counterexample in each category, in (n, trial) order.
    pub counterexamples: Vec<HarnessCounterexample>,
}

impl HarnessReport {
    pub fn violations(&self) -> usize {
        self.totals.violated
    }

    pub fn skip_rate(&self) -> f64 {
        if self.totals.trials == 0 {
            0.0
        } else {
            self.totals.skipped as f64 / self.totals.trials as f64
        }
    }
}

struct TrialOutcome {
    n: usize,
    d: Option<usize>,
    counts: TrialCounts,
    residuals: Vec<(String, f64)>,
    counterexamples: Vec<HarnessCounterexample>,
}

const SUBQUAD_STREAM: u64 = 0x5155_4144;

fn run_trial(n: usize, trial: usize, params: &HarnessParams) -> Result<TrialOutcome> {
    let tol = params.tolerance();
    let seed = derive_seed(params.seed, n as u64, trial as u64);
    let poly = random_polygon(n, seed, DEFAULT_MIN_GAP)?;
    let report = analyze(&poly, tol)?;
    let mut out = TrialOutcome {
        n,
        d: None,
        counts: TrialCounts {
            trials: 1,
            ..Default::default()
        },
        residuals: Vec::new(),
        counterexamples: Vec::new(),
    };
    if report.near_tangent(tol) {
        out.counts.skipped = 1;
        return Ok(out);
    }
    out.d = Some(report.d);

    let angles = poly.angles_radians();
    let mut flag = |category, detail: String, counts: &mut TrialCounts| {
        match category {
            ViolationCategory::Bounds => counts.bounds_violations += 1,
            ViolationCategory::Noncrossing => counts.noncrossing_violations += 1,
            ViolationCategory::Step2 => counts.step2_failures += 1,
            ViolationCategory::Lemma => counts.lemma_failures += 1,
        }
        out.counterexamples.push(HarnessCounterexample {
            category,
            n,
            trial,
            seed,
            angles_radians: angles.clone(),
            detail,
        });
    };

    if !report.bounds_ok {
        flag(
            ViolationCategory::Bounds,
            format!(
                "d = {} outside [{}, {}]",
                report.d, report.lower_bound, report.upper_bound
            ),
            &mut out.counts,
        );
    }
    if !report.noncrossing_ok {
        flag(
            ViolationCategory::Noncrossing,
            format!("red diagonals cross: {:?}", report.red_diagonals),
            &mut out.counts,
        );
    }
    if n >= 4 {
        let s2 = step2_check(&poly, tol)?;
        if !s2.passed() {
            let detail = s2.counterexample.map(|c| c.detail).unwrap_or_default();
            flag(ViolationCategory::Step2, detail, &mut out.counts);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, SUBQUAD_STREAM, 0));
        let picks = rand::seq::index::sample(&mut rng, n, 4);
        let mut idx: Vec<usize> = picks.into_iter().collect();
        idx.sort_unstable();
        let v = poly.vertex_angles();
        let [a, b, c, d]: [Angle; 4] = [v[idx[0]], v[idx[1]], v[idx[2]], v[idx[3]]];
        let quad = Quadruple::new(a, b, c, d, DEFAULT_MIN_GAP)?;
        let mut failed = Vec::new();
        for r in quadruple_suite(&quad, tol)? {
            for (name, &value) in &r.components {
                out.residuals.push((format!("{}.{}", r.claim, name), value));
            }
            if !r.passed() {
                failed.push(format!(
                    "{} on vertices {:?}: {}",
                    r.claim,
                    idx,
                    r.counterexample.map(|c| c.detail).unwrap_or_default()
                ));
            }
        }
        if !failed.is_empty() {
            flag(ViolationCategory::Lemma, failed.join("; "), &mut out.counts);
        }
    }

    let c = &out.counts;
    let any = c.bounds_violations + c.noncrossing_violations + c.step2_failures + c.lemma_failures;
    if any > 0 {
        out.counts.violated = 1;
    } else {
        out.counts.passed = 1;
    }
    Ok(out)
}

/// Random polygons for every `n` in `n_min..=n_max`, each checked against the
/// disjoint-pair bounds, red-diagonal non-crossing, the separation claim,
/// and the quadruple checks on one random 4-vertex sub-polygon. Trials within
/// `eps_geom` of a classification flip are counted as skipped.
pub fn harness(params: &HarnessParams) -> Result<HarnessReport> {
    if params.n_min < 3 || params.n_min > params.n_max {
        return Err(Error::Precondition(format!(
            "need 3 <= n_min <= n_max, got {}..{}",
            params.n_min, params.n_max
        )));
    }
    if params.trials_per_n == 0 {
        return Err(Error::Precondition("trials per n must be at least 1".into()));
    }
    Tolerance::new(params.eps_geom, params.eps_strict)?;

    let jobs: Vec<(usize, usize)> = (params.n_min..=params.n_max)
        .flat_map(|n| (0..params.trials_per_n).map(move |t| (n, t)))
        .collect();

    #[cfg(feature = "parallel")]
    let outcomes: Vec<Result<TrialOutcome>> = {
        use rayon::prelude::*;
        jobs.par_iter().map(|&(n, t)| run_trial(n, t, params)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<Result<TrialOutcome>> = jobs.iter().map(|&(n, t)| run_trial(n, t, params)).collect();

    let mut per_n: Vec<PerN> = (params.n_min..=params.n_max)
        .map(|n| {
            let (lower_bound, upper_bound) = theorem_bounds(n).expect("n >= 3");
            PerN {
                n,
                lower_bound,
                upper_bound,
                min_d: None,
                max_d: None,
                counts: TrialCounts::default(),
            }
        })
        .collect();
    let mut totals = TrialCounts::default();
    let mut worst = std::collections::BTreeMap::<String, f64>::new();
    let mut counterexamples: Vec<HarnessCounterexample> = Vec::new();

    for outcome in outcomes {
        let outcome = outcome?;
        let row = &mut per_n[outcome.n - params.n_min];
        row.counts.add(&outcome.counts);
        if let Some(d) = outcome.d {
            row.min_d = Some(row.min_d.map_or(d, |m| m.min(d)));
            row.max_d = Some(row.max_d.map_or(d, |m| m.max(d)));
        }
        totals.add(&outcome.counts);
        for (name, value) in outcome.residuals {
            let slot = worst.entry(name).or_insert(f64::NEG_INFINITY);
            *slot = slot.max(value);
        }
        for cx in outcome.counterexamples {
            if !counterexamples.iter().any(|c| c.category == cx.category) {
                counterexamples.push(cx);
            }
        }
    }

    Ok(HarnessReport {
        params: *params,
        per_n,
        totals,
        worst_lemma_residuals: worst,
        counterexamples,
    })
}
