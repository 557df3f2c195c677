//! Regular small n-gons.

use std::f64::consts::PI;

use crate::error::Error;
use crate::families::{Family, FamilyInstance};
use crate::geom::{Point2, Polygon};
use crate::Result;

/// Circumradius of the regular small n-gon: 1/(2·cos(π/2n)) for odd n so
/// the diagonals reach unit length, 1/2 for even n so the long diagonals
/// do.
pub(crate) fn regular_circumradius(n: usize) -> f64 {
    if n % 2 == 1 {
        0.5 / (PI / (2.0 * n as f64)).cos()
    } else {
        0.5
    }
}

/// Vertices of the regular small n-gon with the first vertex at the
/// origin and a vertical axis of symmetry.
pub fn regular_vertices(n: usize) -> Result<Polygon> {
    if n < 3 {
        return Err(Error::domain(format!("regular polygon needs n >= 3, got {n}")));
    }
    let r = regular_circumradius(n);
    let verts = (0..n)
        .map(|k| {
            let half = PI * k as f64 / n as f64;
            // y = r(1 - cos 2a) written as 2r sin^2 a to avoid cancellation.
            Point2::new(r * (2.0 * half).sin(), 2.0 * r * half.sin() * half.sin())
        })
        .collect();
    Polygon::new(verts)
}

pub fn construct_regular(n: usize) -> Result<FamilyInstance> {
    let polygon = regular_vertices(n)?;
    let side = polygon.side_lengths()[0];
    let perimeter = polygon.perimeter();
    Ok(FamilyInstance {
        family: Family::Regular,
        n,
        t: Some(2.0 * (side / 2.0).asin()),
        aux: None,
        side,
        polygon,
        perimeter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{regular_perimeter, ToleranceConfig};

    #[test]
    fn square_matches_reference() {
        let inst = construct_regular(4).unwrap();
        assert!((inst.perimeter - 2.828427).abs() < 1e-6);
        let tol = ToleranceConfig::default();
        let report = inst.polygon.certify(Some(inst.side), &tol);
        assert!(report.all_pass());
        // Both diagonals are diameter pairs.
        assert_eq!(report.diameter_pairs.len(), 2);
    }

    #[test]
    fn octagon_perimeter() {
        let inst = construct_regular(8).unwrap();
        assert!((inst.perimeter - 3.061467).abs() < 1e-6);
    }

    #[test]
    fn triangle_has_unit_sides() {
        let inst = construct_regular(3).unwrap();
        assert!((inst.perimeter - 3.0).abs() < 1e-12);
        for s in inst.polygon.side_lengths() {
            assert!((s - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn perimeter_agrees_with_formula_for_all_small_n() {
        for n in 3..=64 {
            let inst = construct_regular(n).unwrap();
            assert!(
                (inst.perimeter - regular_perimeter(n).unwrap()).abs() < 1e-12,
                "n = {n}"
            );
        }
    }

    #[test]
    fn odd_gon_diameter_graph_is_the_star() {
        let inst = construct_regular(5).unwrap();
        let tol = ToleranceConfig::default();
        let edges = inst.polygon.diameter_graph(&tol);
        assert_eq!(edges.len(), 5); // pentagram
    }

    #[test]
    fn even_gon_diameter_graph_is_the_diagonals() {
        let inst = construct_regular(6).unwrap();
        let tol = ToleranceConfig::default();
        let edges = inst.polygon.diameter_graph(&tol);
        assert_eq!(edges, vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn rejects_degenerate_counts() {
        assert!(construct_regular(2).is_err());
    }
}
