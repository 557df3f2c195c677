//! Convex equilateral small polygons with maximal or near-maximal
//! perimeter.
//!
//! A *small* polygon has unit diameter: no two vertices are more than one
//! unit apart. For odd vertex counts the regular polygon already has the
//! longest possible perimeter; for powers of two the optimum is open
//! beyond n = 8, and this crate builds the strongest known equilateral
//! constructions:
//!
//! - regular small n-gons and Reinhardt polygons R_{m,n}, which attain
//!   the upper bound 2n·sin(π/2n) whenever n has an odd factor m;
//! - an equilateral family for n = 2^s (s ≥ 4) whose perimeter is within
//!   π⁴/n⁴ + O(1/n⁵) of the bound, defined by a one-angle closure
//!   equation solved here by bracketed bisection;
//! - the improved 32-gon and 64-gon that beat that family at those sizes;
//! - the optimal equilateral octagon, whose squared side length is a
//!   sextic root.
//!
//! Every construction is checked by four certificates (smallness,
//! convexity, equilaterality, mirror symmetry) with explicit numeric
//! margins, and truncated asymptotic series provide independent
//! cross-checks. The `report` module emits polygon documents, CSV, SVG
//! figures, and the reference perimeter table; the `smallgon` binary
//! wraps those as `construct`, `verify`, `table`, `gaps`, and `render`
//! subcommands.
//!
//! ```
//! use smallgon::families::construct_bn;
//! use smallgon::geom::{upper_bound_perimeter, ToleranceConfig};
//!
//! let hexadecagon = construct_bn(16)?;
//! assert!((hexadecagon.perimeter - 3.1352878881).abs() < 1e-9);
//!
//! let report = hexadecagon.polygon.certify(Some(hexadecagon.side), &ToleranceConfig::default());
//! assert!(report.all_pass());
//! assert!(hexadecagon.perimeter < upper_bound_perimeter(16)?);
//! # Ok::<(), smallgon::Error>(())
//! ```

pub mod asymptotics;
mod error;
pub mod families;
pub mod geom;
pub mod report;
pub mod solver;

pub use error::Error;
pub use families::{Family, FamilyInstance};
pub use geom::{CertificateReport, Check, Point2, Polygon, ToleranceConfig};

pub type Result<T> = std::result::Result<T, Error>;
