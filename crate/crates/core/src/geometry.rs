//! Planar primitives on and around the unit circle.
//!
//! Everything is plain `f64`. Classification checks take a [`Tolerance`]
//! carrying two levels: `eps_geom` decides geometric predicates, `eps_strict`
//! guards internal self-consistency and degeneracy.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Rotates counterclockwise about the origin.
    pub fn rotate(self, phi: f64) -> Point {
        let (s, c) = phi.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// An angle in radians, normalized to `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(into = "f64", from = "f64")]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Self {
        let mut v = radians.rem_euclid(TAU);
        // rem_euclid can round a tiny negative input up to exactly TAU
        if v >= TAU {
            v = 0.0;
        }
        Angle(v)
    }

    pub fn from_degrees(degrees: f64) -> Self {
        Angle::new(degrees.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// Counterclockwise sweep from `self` to `other`, in `[0, 2π)`.
    pub fn ccw_to(self, other: Angle) -> f64 {
        Angle::new(other.0 - self.0).0
    }

    /// Shortest distance along the circle, in `[0, π]`.
    pub fn circular_distance(self, other: Angle) -> f64 {
        // symmetric in its arguments, bit for bit
        let d = (self.0 - other.0).abs();
        d.min(TAU - d)
    }

    pub fn offset(self, delta: f64) -> Angle {
        Angle::new(self.0 + delta)
    }
}

impl From<f64> for Angle {
    fn from(v: f64) -> Self {
        Angle::new(v)
    }
}

impl From<Angle> for f64 {
    fn from(a: Angle) -> f64 {
        a.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Classification tolerance.
    pub eps_geom: f64,
    /// Self-consistency and degeneracy tolerance.
    pub eps_strict: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_geom: 1e-9,
            eps_strict: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn new(eps_geom: f64, eps_strict: f64) -> Result<Self> {
        let ok = eps_strict > 0.0 && eps_strict < eps_geom && eps_geom < 1e-3;
        if !ok {
            return Err(Error::InvalidTolerance { eps_geom, eps_strict });
        }
        Ok(Tolerance { eps_geom, eps_strict })
    }
}

pub fn point_on_circle(theta: Angle) -> Point {
    let (s, c) = theta.radians().sin_cos();
    Point::new(c, s)
}

/// Length of the chord between two points of the unit circle.
pub fn chord_length(alpha: Angle, beta: Angle) -> f64 {
    2.0 * (0.5 * alpha.circular_distance(beta)).sin()
}

/// Common points of the boundary circles `|p - c1| = r1` and `|p - c2| = r2`.
///
/// Returns two points (the one left of `c1 -> c2` first) for a proper
/// crossing, a single point when the circles are tangent within `eps_geom`,
/// and nothing otherwise.
pub fn circle_circle_intersections(
    c1: Point,
    r1: f64,
    c2: Point,
    r2: f64,
    tol: Tolerance,
) -> Result<Vec<Point>> {
    let delta = c2 - c1;
    let d = delta.norm();
    if d <= tol.eps_strict {
        return Err(Error::CoincidentCenters { distance: d });
    }
    let u = delta * (1.0 / d);
    let outer = d - (r1 + r2);
    let inner = d - (r1 - r2).abs();

    if outer.abs() <= tol.eps_geom || inner.abs() <= tol.eps_geom {
        let a = ((d * d + r1 * r1 - r2 * r2) / (2.0 * d)).clamp(-r1, r1);
        return Ok(vec![c1 + u * a]);
    }
    if outer > 0.0 || inner < 0.0 {
        return Ok(Vec::new());
    }

    let a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    // Heron's formula on the triangle (d, r1, r2); each factor is formed
    // directly so near-tangent configurations keep their precision.
    let heron = (r1 + r2 + d) * (r1 + r2 - d) * (d + r1 - r2) * (d - r1 + r2);
    let h = heron.max(0.0).sqrt() / (2.0 * d);
    let base = c1 + u * a;
    let perp = Point::new(-u.y, u.x);
    Ok(vec![base + perp * h, base - perp * h])
}

/// Twice the signed triangle area, normalized by `max(1, |q-p|·|r-p|)`.
pub fn collinearity_residual(p: Point, q: Point, r: Point) -> f64 {
    let u = q - p;
    let v = r - p;
    u.cross(v).abs() / (u.norm() * v.norm()).max(1.0)
}

pub fn collinear(p: Point, q: Point, r: Point, tol: Tolerance) -> bool {
    collinearity_residual(p, q, r) <= tol.eps_geom
}

pub fn incenter(a: Point, b: Point, c: Point) -> Result<Point> {
    if collinearity_residual(a, b, c) <= Tolerance::default().eps_strict {
        return Err(Error::DegenerateTriangle);
    }
    let la = b.distance(c);
    let lb = c.distance(a);
    let lc = a.distance(b);
    let sum = la + lb + lc;
    Ok(Point::new(
        (la * a.x + lb * b.x + lc * c.x) / sum,
        (la * a.y + lb * b.y + lc * c.y) / sum,
    ))
}

/// Center and radius of the circle through three points.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Result<(Point, f64)> {
    let ab = b - a;
    let ac = c - a;
    let denom = 2.0 * ab.cross(ac);
    if collinearity_residual(a, b, c) <= Tolerance::default().eps_strict || denom == 0.0 {
        return Err(Error::Degenerate("circumcircle of collinear points".into()));
    }
    let ab2 = ab.dot(ab);
    let ac2 = ac.dot(ac);
    let off = Point::new(
        (ac.y * ab2 - ab.y * ac2) / denom,
        (ab.x * ac2 - ac.x * ab2) / denom,
    );
    Ok((a + off, off.norm()))
}

/// Relative deviation of `p4` from the circle through `p1, p2, p3`.
///
/// Fails if any three of the four points are collinear within `eps_strict`.
pub fn concyclic_residual(p1: Point, p2: Point, p3: Point, p4: Point, tol: Tolerance) -> Result<f64> {
    let pts = [p1, p2, p3, p4];
    for skip in 0..4 {
        let tri: Vec<Point> = (0..4).filter(|&i| i != skip).map(|i| pts[i]).collect();
        if collinearity_residual(tri[0], tri[1], tri[2]) <= tol.eps_strict {
            return Err(Error::Degenerate("three of the four points are collinear".into()));
        }
    }
    let (center, radius) = circumcircle(p1, p2, p3)?;
    Ok((center.distance(p4) - radius).abs() / radius)
}

pub fn concyclic(p1: Point, p2: Point, p3: Point, p4: Point, tol: Tolerance) -> Result<bool> {
    Ok(concyclic_residual(p1, p2, p3, p4, tol)? <= tol.eps_geom)
}

/// Intersection of the infinite lines `p1 p2` and `q1 q2`.
pub fn line_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Option<Point> {
    let r = p2 - p1;
    let s = q2 - q1;
    let denom = r.cross(s);
    if denom.abs() <= f64::EPSILON * r.norm() * s.norm() {
        return None;
    }
    let t = (q1 - p1).cross(s) / denom;
    Some(p1 + r * t)
}
