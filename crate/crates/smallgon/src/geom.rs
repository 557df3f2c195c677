//! Planar geometry for small polygons: points, polygons, and the
//! certificates (smallness, convexity, equilaterality, symmetry) used to
//! validate every construction in this crate.
//!
//! All coordinates are in units of the diameter, so a certified-small
//! polygon has maximal pairwise vertex distance 1.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::Result;

/// A point in the plane, in units of the (unit) diameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn distance(self, other: Point2) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        (dx * dx + dy * dy).sqrt()
    }

    pub fn norm(self) -> f64 {
        (self.x * self.x + self.y * self.y).sqrt()
    }

    /// Reflection across the vertical axis x = 0.
    pub fn mirror_x(self) -> Point2 {
        Point2::new(-self.x, self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Point2 {
    type Output = Point2;
    fn neg(self) -> Point2 {
        Point2::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, k: f64) -> Point2 {
        Point2::new(self.x * k, self.y * k)
    }
}

/// Tolerances shared by certificates and root solvers.
///
/// `cert_tol` is the slack granted to certificate checks, `root_tol` the
/// admissible residual magnitude at a solved root, and `bracket_tol` the
/// bisection interval width at which iteration stops.
#[derive(Debug, Clone, Copy)]
pub struct ToleranceConfig {
    pub cert_tol: f64,
    pub root_tol: f64,
    pub bracket_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            cert_tol: 1e-9,
            root_tol: 1e-14,
            bracket_tol: 1e-15,
        }
    }
}

impl ToleranceConfig {
    pub fn new(cert_tol: f64, root_tol: f64, bracket_tol: f64) -> Result<Self> {
        if !(cert_tol > 0.0 && root_tol > 0.0 && bracket_tol > 0.0) {
            return Err(Error::domain("tolerances must be strictly positive"));
        }
        if cert_tol <= root_tol {
            return Err(Error::domain("cert_tol must exceed root_tol"));
        }
        Ok(ToleranceConfig { cert_tol, root_tol, bracket_tol })
    }

    /// Default tolerances with a different certificate slack.
    pub fn with_cert_tol(cert_tol: f64) -> Result<Self> {
        let d = ToleranceConfig::default();
        ToleranceConfig::new(cert_tol, d.root_tol.min(cert_tol / 10.0), d.bracket_tol)
    }
}

/// One certificate check: a pass flag plus the numeric margin backing it.
/// The margin is reported even when the flag fails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Check {
    pub pass: bool,
    pub margin: f64,
}

/// Outcome of [`Polygon::certify`].
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    /// Margin: 1 − max pairwise distance.
    pub small: Check,
    /// Margin: min σ_i over all cyclic indices.
    pub convex: Check,
    /// Margin: max |side − nominal side|.
    pub equilateral: Check,
    /// Margin: max distance from a mirrored vertex to the nearest vertex.
    pub symmetric: Check,
    /// All vertex pairs at unit distance within `cert_tol`.
    pub diameter_pairs: Vec<(usize, usize)>,
}

impl CertificateReport {
    pub fn all_pass(&self) -> bool {
        self.small.pass && self.convex.pass && self.equilateral.pass && self.symmetric.pass
    }
}

/// A polygon given by its vertices in order. The boundary closes
/// implicitly from the last vertex back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    verts: Vec<Point2>,
}

impl Polygon {
    /// Validates vertex count, finiteness, and that no two consecutive
    /// vertices coincide.
    pub fn new(verts: Vec<Point2>) -> Result<Self> {
        if verts.len() < 3 {
            return Err(Error::TooFewVertices(verts.len()));
        }
        for (i, v) in verts.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteVertex(i));
            }
        }
        let n = verts.len();
        for i in 0..n {
            if verts[i] == verts[(i + 1) % n] {
                return Err(Error::DegenerateEdge(i));
            }
        }
        Ok(Polygon { verts })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    /// Sum of the Euclidean lengths of all n closing sides.
    pub fn perimeter(&self) -> f64 {
        let n = self.verts.len();
        (0..n)
            .map(|i| self.verts[i].distance(self.verts[(i + 1) % n]))
            .sum()
    }

    pub fn side_lengths(&self) -> Vec<f64> {
        let n = self.verts.len();
        (0..n)
            .map(|i| self.verts[i].distance(self.verts[(i + 1) % n]))
            .collect()
    }

    /// Largest pairwise vertex distance and one pair attaining it.
    pub fn max_pairwise_distance(&self) -> (f64, (usize, usize)) {
        let n = self.verts.len();
        let mut best = f64::NEG_INFINITY;
        let mut pair = (0, 0);
        for i in 0..n {
            for j in (i + 1)..n {
                let d = self.verts[i].distance(self.verts[j]);
                if d > best {
                    best = d;
                    pair = (i, j);
                }
            }
        }
        (best, pair)
    }

    /// The convexity determinants σ_i for every cyclic index i:
    /// σ_i = (x_i − x_{i−1})(y_{i+1} − y_{i−1}) − (y_i − y_{i−1})(x_{i+1} − x_{i−1}).
    ///
    /// All n of them are computed, so the result does not depend on which
    /// vertex sits at index 0.
    pub fn convexity_determinants(&self) -> Vec<f64> {
        let n = self.verts.len();
        (0..n)
            .map(|i| {
                let prev = self.verts[(i + n - 1) % n];
                let cur = self.verts[i];
                let next = self.verts[(i + 1) % n];
                let a = cur - prev;
                let b = next - prev;
                a.x * b.y - a.y * b.x
            })
            .collect()
    }

    /// Twice the signed area; positive for counterclockwise order.
    pub fn signed_area2(&self) -> f64 {
        let n = self.verts.len();
        (0..n)
            .map(|i| {
                let a = self.verts[i];
                let b = self.verts[(i + 1) % n];
                a.x * b.y - a.y * b.x
            })
            .sum()
    }

    pub fn is_counterclockwise(&self) -> bool {
        self.signed_area2() > 0.0
    }

    /// Mirror image across x = 0 with the vertex order reversed, so the
    /// orientation of the boundary is preserved.
    pub fn mirrored(&self) -> Polygon {
        let verts = self.verts.iter().rev().map(|v| v.mirror_x()).collect();
        Polygon { verts }
    }

    /// All vertex pairs whose distance is within `cert_tol` of 1.
    ///
    /// May be empty: that signals a polygon with no unit-distance pair,
    /// which cannot be extremal.
    pub fn diameter_graph(&self, tol: &ToleranceConfig) -> Vec<(usize, usize)> {
        let n = self.verts.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if (self.verts[i].distance(self.verts[j]) - 1.0).abs() <= tol.cert_tol {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Runs all four certificates. `nominal_side` is the intended common
    /// side length; when absent the mean side length is used.
    pub fn certify(&self, nominal_side: Option<f64>, tol: &ToleranceConfig) -> CertificateReport {
        let (max_dist, _) = self.max_pairwise_distance();
        let small = Check {
            pass: (max_dist - 1.0).abs() <= tol.cert_tol,
            margin: 1.0 - max_dist,
        };

        let sigmas = self.convexity_determinants();
        let min_sigma = sigmas.iter().cloned().fold(f64::INFINITY, f64::min);
        let convex = Check {
            pass: min_sigma >= -tol.cert_tol && self.is_counterclockwise(),
            margin: min_sigma,
        };

        let sides = self.side_lengths();
        let nominal = nominal_side.unwrap_or_else(|| sides.iter().sum::<f64>() / sides.len() as f64);
        let eq_margin = sides
            .iter()
            .map(|s| (s - nominal).abs())
            .fold(0.0, f64::max);
        let equilateral = Check {
            pass: eq_margin <= tol.cert_tol,
            margin: eq_margin,
        };

        let sym_margin = self
            .verts
            .iter()
            .map(|v| {
                let m = v.mirror_x();
                self.verts
                    .iter()
                    .map(|w| m.distance(*w))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        let symmetric = Check {
            pass: sym_margin <= tol.cert_tol,
            margin: sym_margin,
        };

        CertificateReport {
            small,
            convex,
            equilateral,
            symmetric,
            diameter_pairs: self.diameter_graph(tol),
        }
    }
}

/// Upper bound 2n·sin(π/2n) on the perimeter of any convex small n-gon.
pub fn upper_bound_perimeter(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::domain(format!("upper bound needs n >= 3, got {n}")));
    }
    let nf = n as f64;
    Ok(2.0 * nf * (PI / (2.0 * nf)).sin())
}

/// Perimeter of the regular small n-gon: 2n·sin(π/2n) for odd n (unit
/// diagonals), n·sin(π/n) for even n (unit long diagonals).
pub fn regular_perimeter(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::domain(format!("regular polygon needs n >= 3, got {n}")));
    }
    let nf = n as f64;
    if n % 2 == 1 {
        Ok(2.0 * nf * (PI / (2.0 * nf)).sin())
    } else {
        Ok(nf * (PI / nf).sin())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coords: &[(f64, f64)]) -> Polygon {
        Polygon::new(coords.iter().map(|&(x, y)| Point2::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn perimeter_of_regular_small_4gon() {
        // Unit-diagonal square.
        let p = poly(&[(0.0, 0.0), (0.5, 0.5), (0.0, 1.0), (-0.5, 0.5)]);
        assert!((p.perimeter() - 2.828427).abs() < 1e-6);
        assert!((p.perimeter() - 8.0_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn perimeter_of_unit_triangle() {
        let p = poly(&[(0.0, 0.0), (1.0, 0.0), (0.5, 0.75_f64.sqrt())]);
        assert!((p.perimeter() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs_rejected() {
        assert!(matches!(
            Polygon::new(vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]),
            Err(Error::TooFewVertices(2))
        ));
        // Repeated vertex closes a zero-length edge.
        assert!(matches!(
            Polygon::new(vec![
                Point2::new(0.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(0.0, 0.0),
            ]),
            Err(Error::DegenerateEdge(_))
        ));
        assert!(matches!(
            Polygon::new(vec![
                Point2::new(0.0, 0.0),
                Point2::new(f64::NAN, 0.0),
                Point2::new(0.0, 1.0),
            ]),
            Err(Error::NonFiniteVertex(1))
        ));
    }

    #[test]
    fn max_pairwise_distance_unit_square() {
        let p = poly(&[(0.0, 0.0), (0.5, 0.5), (0.0, 1.0), (-0.5, 0.5)]);
        let (d, (i, j)) = p.max_pairwise_distance();
        assert!((d - 1.0).abs() < 1e-15);
        // Both diagonals have length 1; the first one found is (0, 2).
        assert_eq!((i, j), (0, 2));
    }

    #[test]
    fn convexity_determinants_regular_hexagon() {
        let r = 0.5;
        let verts: Vec<Point2> = (0..6)
            .map(|k| {
                let a = 2.0 * PI * k as f64 / 6.0;
                Point2::new(r * a.sin(), r - r * a.cos())
            })
            .collect();
        let p = Polygon::new(verts).unwrap();
        let sig = p.convexity_determinants();
        assert!(sig.iter().all(|&s| s > 0.0));
        let first = sig[0];
        assert!(sig.iter().all(|&s| (s - first).abs() < 1e-15));
    }

    #[test]
    fn reflex_quadrilateral_has_negative_determinant() {
        let p = poly(&[(0.0, 0.0), (1.0, 0.0), (0.4, 0.1), (0.0, 1.0)]);
        let sig = p.convexity_determinants();
        assert!(sig.iter().any(|&s| s < 0.0));
        let tol = ToleranceConfig::default();
        assert!(!p.certify(None, &tol).convex.pass);
    }

    #[test]
    fn certify_unit_diagonal_square() {
        let p = poly(&[(0.0, 0.0), (0.5, 0.5), (0.0, 1.0), (-0.5, 0.5)]);
        let tol = ToleranceConfig::default();
        let report = p.certify(None, &tol);
        assert!(report.all_pass());
        assert_eq!(report.diameter_pairs, vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn certify_reports_margins_on_failure() {
        // Scaled by 1.01: too large to be small.
        let p = poly(&[(0.0, 0.0), (0.505, 0.505), (0.0, 1.01), (-0.505, 0.505)]);
        let tol = ToleranceConfig::default();
        let report = p.certify(None, &tol);
        assert!(!report.small.pass);
        assert!((report.small.margin + 0.01).abs() < 1e-12);
        assert!(report.convex.pass);
    }

    #[test]
    fn upper_bound_matches_reference_values() {
        assert!((upper_bound_perimeter(16).unwrap() - 3.1365484905).abs() < 1e-9);
        assert!((upper_bound_perimeter(32).unwrap() - 3.1403311570).abs() < 1e-9);
        assert!(upper_bound_perimeter(2).is_err());
    }

    #[test]
    fn upper_bound_increases_toward_pi() {
        let mut prev = 0.0;
        for n in 3..=4096 {
            let ub = upper_bound_perimeter(n).unwrap();
            assert!(ub > prev);
            assert!(ub < PI);
            prev = ub;
        }
    }

    #[test]
    fn regular_perimeter_reference_values() {
        assert!((regular_perimeter(6).unwrap() - 3.0).abs() < 1e-14);
        let r8 = 4.0 * (2.0 - 2.0_f64.sqrt()).sqrt();
        assert!((regular_perimeter(8).unwrap() - r8).abs() < 1e-13);
        assert!((regular_perimeter(8).unwrap() - 3.0614674589).abs() < 1e-9);
        // Doubling an even n reproduces the upper bound of the half size.
        assert!((regular_perimeter(64).unwrap() - upper_bound_perimeter(32).unwrap()).abs() < 1e-12);
        assert!(regular_perimeter(1).is_err());
    }

    #[test]
    fn regular_perimeter_odd_attains_upper_bound() {
        for n in (3..=63).step_by(2) {
            let lr = regular_perimeter(n).unwrap();
            let ub = upper_bound_perimeter(n).unwrap();
            assert!((lr - ub).abs() <= 1e-15);
        }
        for n in (4..=64).step_by(2) {
            assert!(regular_perimeter(n).unwrap() < upper_bound_perimeter(n).unwrap());
        }
    }

    #[test]
    fn mirrored_polygon_preserves_orientation_and_sigma() {
        let p = poly(&[(0.0, 0.0), (0.5, 0.1), (0.6, 0.8), (-0.2, 0.9), (-0.4, 0.3)]);
        let m = p.mirrored();
        assert_eq!(p.is_counterclockwise(), m.is_counterclockwise());
        let sp = p.convexity_determinants();
        let sm = m.convexity_determinants();
        let n = sp.len();
        for i in 0..n {
            assert!((sm[i] - sp[n - 1 - i]).abs() <= 1e-15);
        }
    }

    #[test]
    fn tolerance_config_validation() {
        assert!(ToleranceConfig::new(1e-9, 1e-14, 1e-15).is_ok());
        assert!(ToleranceConfig::new(0.0, 1e-14, 1e-15).is_err());
        assert!(ToleranceConfig::new(1e-15, 1e-14, 1e-15).is_err());
    }
}
