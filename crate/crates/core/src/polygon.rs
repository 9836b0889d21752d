//! Circles partitioned into arcs ("great polygons") and their side disks.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{point_on_circle, Angle, Point};

pub const DEFAULT_MIN_GAP: f64 = 1e-6;

/// The unit circle with `n >= 2` marked vertices, stored counterclockwise.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GreatPolygon {
    vertex_angles: Vec<Angle>,
}

/// The disk centered at the midpoint of an arc whose boundary passes
/// through both arc endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SideDisk {
    pub index: usize,
    pub start_angle: Angle,
    pub end_angle: Angle,
    pub arc_length: f64,
    pub center_angle: Angle,
    pub center: Point,
    pub radius: f64,
}

impl SideDisk {
    /// Side disk of the counterclockwise arc of length `arc_length` starting at `start`.
    pub fn from_arc(index: usize, start: Angle, arc_length: f64) -> SideDisk {
        let center_angle = start.offset(0.5 * arc_length);
        SideDisk {
            index,
            start_angle: start,
            end_angle: start.offset(arc_length),
            arc_length,
            center_angle,
            center: point_on_circle(center_angle),
            radius: 2.0 * (0.25 * arc_length).sin(),
        }
    }

    /// Closed-disk membership.
    pub fn contains(&self, p: Point) -> bool {
        self.center.distance(p) <= self.radius
    }
}

pub fn make_polygon(raw_angles: &[f64], min_gap: f64) -> Result<GreatPolygon> {
    if raw_angles.len() < 2 {
        return Err(Error::TooFewVertices {
            min: 2,
            got: raw_angles.len(),
        });
    }
    if let Some(i) = raw_angles.iter().position(|a| !a.is_finite()) {
        return Err(Error::NonFiniteAngle(i));
    }
    let mut angles: Vec<Angle> = raw_angles.iter().map(|&a| Angle::new(a)).collect();
    angles.sort_by(|a, b| a.radians().total_cmp(&b.radians()));

    let n = angles.len();
    for i in 0..n {
        let j = (i + 1) % n;
        let gap = angles[i].ccw_to(angles[j]);
        if gap < min_gap || gap == 0.0 {
            return Err(Error::NearDuplicate {
                first: i,
                second: j,
                gap,
                min_gap,
            });
        }
    }
    Ok(GreatPolygon {
        vertex_angles: angles,
    })
}

/// All arcs equal.
pub fn regular_polygon(n: usize) -> Result<GreatPolygon> {
    if n < 2 {
        return Err(Error::TooFewVertices { min: 2, got: n });
    }
    let angles: Vec<f64> = (0..n).map(|k| TAU * k as f64 / n as f64).collect();
    make_polygon(&angles, 0.0)
}

/// Builds a polygon from consecutive counterclockwise arc lengths, the first
/// vertex at angle 0. The arc lengths must sum to 2π.
pub fn polygon_from_arcs(arcs: &[f64], min_gap: f64) -> Result<GreatPolygon> {
    let mut angles = Vec::with_capacity(arcs.len());
    let mut acc = 0.0;
    for &a in arcs {
        angles.push(acc);
        acc += a;
    }
    if (acc - TAU).abs() > 1e-9 {
        return Err(Error::Precondition(format!(
            "arc lengths sum to {acc}, expected 2π"
        )));
    }
    make_polygon(&angles, min_gap)
}

impl GreatPolygon {
    pub fn n(&self) -> usize {
        self.vertex_angles.len()
    }

    pub fn vertex_angles(&self) -> &[Angle] {
        &self.vertex_angles
    }

    pub fn angles_radians(&self) -> Vec<f64> {
        self.vertex_angles.iter().map(|a| a.radians()).collect()
    }

    pub fn vertex(&self, i: usize) -> Point {
        point_on_circle(self.vertex_angles[i])
    }

    /// Counterclockwise length of arc `i` (vertex `i` to vertex `i + 1`).
    pub fn arc_length(&self, i: usize) -> f64 {
        let n = self.n();
        let start = self.vertex_angles[i].radians();
        if i + 1 < n {
            self.vertex_angles[i + 1].radians() - start
        } else {
            self.vertex_angles[0].radians() + TAU - start
        }
    }

    pub fn side_disk(&self, i: usize) -> SideDisk {
        SideDisk::from_arc(i, self.vertex_angles[i], self.arc_length(i))
    }

    pub fn side_disks(&self) -> Vec<SideDisk> {
        (0..self.n()).map(|i| self.side_disk(i)).collect()
    }

    /// Same polygon rotated counterclockwise by `phi`. Vertex 0 of the result
    /// is the image of the smallest resulting angle, so indices may shift.
    pub fn rotated(&self, phi: f64) -> Result<GreatPolygon> {
        let raw: Vec<f64> = self.vertex_angles.iter().map(|a| a.radians() + phi).collect();
        make_polygon(&raw, 0.0)
    }

    /// Smallest cyclic gap between consecutive vertices.
    pub fn min_gap(&self) -> f64 {
        (0..self.n())
            .map(|i| self.arc_length(i))
            .fold(f64::INFINITY, f64::min)
    }
}

pub fn side_disks(poly: &GreatPolygon) -> Vec<SideDisk> {
    poly.side_disks()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};

    #[test]
    fn make_polygon_sorts_and_normalizes() {
        let a = make_polygon(&[0.0, FRAC_PI_2, PI, 3.0 * FRAC_PI_2], DEFAULT_MIN_GAP).unwrap();
        let b = make_polygon(&[3.0 * FRAC_PI_2, 0.0, PI, FRAC_PI_2], DEFAULT_MIN_GAP).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.n(), 4);
        for i in 0..4 {
            assert_abs_diff_eq!(a.arc_length(i), FRAC_PI_2, epsilon = 1e-15);
        }
        let c = make_polygon(&[-FRAC_PI_2, TAU, PI + TAU, FRAC_PI_2], DEFAULT_MIN_GAP).unwrap();
        for (x, y) in c.angles_radians().iter().zip(a.angles_radians()) {
            assert_abs_diff_eq!(*x, y, epsilon = 1e-14);
        }
    }

    #[test]
    fn make_polygon_errors() {
        assert!(matches!(
            make_polygon(&[0.0, 1e-9], DEFAULT_MIN_GAP),
            Err(Error::NearDuplicate { .. })
        ));
        assert!(matches!(
            make_polygon(&[1.0], DEFAULT_MIN_GAP),
            Err(Error::TooFewVertices { min: 2, got: 1 })
        ));
        assert!(matches!(
            make_polygon(&[0.0, 1.0, 1.0], 0.0),
            Err(Error::NearDuplicate { .. })
        ));
        // wrap-around gap
        assert!(matches!(
            make_polygon(&[1e-8, 2.0, TAU - 1e-8], DEFAULT_MIN_GAP),
            Err(Error::NearDuplicate { .. })
        ));
        assert!(matches!(
            make_polygon(&[0.0, f64::NAN], DEFAULT_MIN_GAP),
            Err(Error::NonFiniteAngle(1))
        ));
    }

    #[test]
    fn regular_polygon_examples() {
        let p = regular_polygon(4).unwrap();
        let expected = [0.0, FRAC_PI_2, PI, 3.0 * FRAC_PI_2];
        for (a, e) in p.angles_radians().iter().zip(expected) {
            assert_abs_diff_eq!(*a, e, epsilon = 1e-15);
        }
        for d in regular_polygon(3).unwrap().side_disks() {
            assert_abs_diff_eq!(d.radius, 1.0, epsilon = 1e-15);
        }
        for d in regular_polygon(2).unwrap().side_disks() {
            assert_abs_diff_eq!(d.radius, SQRT_2, epsilon = 1e-15);
        }
        assert!(regular_polygon(1).is_err());
    }

    #[test]
    fn side_disk_examples() {
        let disks = regular_polygon(4).unwrap().side_disks();
        assert_eq!(disks.len(), 4);
        for (k, d) in disks.iter().enumerate() {
            assert_eq!(d.index, k);
            assert_abs_diff_eq!(d.radius, 0.76536686, epsilon = 1e-8);
            assert_abs_diff_eq!(
                d.center_angle.radians(),
                FRAC_PI_4 * (2 * k + 1) as f64,
                epsilon = 1e-14
            );
        }

        let disks = make_polygon(&[0.0, PI], DEFAULT_MIN_GAP).unwrap().side_disks();
        assert_abs_diff_eq!(disks[0].radius, SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(disks[0].center_angle.radians(), FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(disks[1].center_angle.radians(), 3.0 * FRAC_PI_2, epsilon = 1e-15);
    }

    #[test]
    fn neighbours_share_vertex() {
        let p = make_polygon(&[0.3, 1.1, 2.9, 4.0, 5.5], DEFAULT_MIN_GAP).unwrap();
        let disks = p.side_disks();
        for i in 0..p.n() {
            let j = (i + 1) % p.n();
            let v = p.vertex(j);
            assert_abs_diff_eq!(disks[i].center.distance(v), disks[i].radius, epsilon = 1e-12);
            assert_abs_diff_eq!(disks[j].center.distance(v), disks[j].radius, epsilon = 1e-12);
        }
    }

    #[test]
    fn polygon_from_arcs_checks_sum() {
        assert!(polygon_from_arcs(&[1.0, 1.0], 0.0).is_err());
        let p = polygon_from_arcs(&[PI, FRAC_PI_2, FRAC_PI_2], 0.0).unwrap();
        assert_eq!(p.n(), 3);
    }
}
