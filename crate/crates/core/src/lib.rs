//! Side disks of a circle partitioned into arcs.
//!
//! Mark `n` points on the unit circle. Each arc between consecutive points
//! has a side disk: the disk centered at the arc's midpoint whose boundary
//! passes through both endpoints. This crate builds those disks, decides
//! which pairs intersect, colours the resulting intersection graph, and
//! checks numerically that
//!
//! * the number of disjoint pairs `d` satisfies `(n-2)(n-3)/2 <= d <= n(n-3)/2`,
//! * intersecting non-neighbouring pairs never cross as chords of the cyclic
//!   order (so the intersection graph is outerplanar),
//! * the four-point corner constructions behave as stated (rectangle,
//!   incenters, collinearities, separations).
//!
//! ```
//! use sidedisk_core::{analyze, regular_polygon, Tolerance};
//!
//! let report = analyze(&regular_polygon(5).unwrap(), Tolerance::default()).unwrap();
//! assert_eq!(report.d, 5);
//! assert!(report.bounds_ok && report.noncrossing_ok);
//! ```

pub mod config;
pub mod error;
pub mod extremal;
pub mod geometry;
pub mod intersection;
pub mod oracles;
pub mod polygon;
pub mod svg;

pub use config::{ConfigFile, Preset};
pub use error::{Error, Result};
pub use extremal::{harness, random_polygon, star, triangle_config, HarnessParams, HarnessReport};
pub use geometry::{Angle, Point, Tolerance};
pub use intersection::{
    analyze, chords_cross, disjoint_pair_count, disks_intersect, intersection_graph, red_noncrossing,
    theorem_bounds, AnalysisReport, IntersectionGraph, Relation, RelationKind,
};
pub use oracles::{corner_points, CornerPoints, LemmaClaim, OracleReport, Quadruple};
pub use polygon::{make_polygon, regular_polygon, GreatPolygon, SideDisk, DEFAULT_MIN_GAP};
pub use svg::{render_svg, RenderSpec};
