//! Reinhardt polygons R_{m,n}: for n with an odd factor m, subdividing
//! each arc of the Reuleaux m-gon into n/m equal parts yields a convex
//! equilateral small n-gon that attains the perimeter upper bound
//! 2n·sin(π/2n).

use std::f64::consts::PI;

use crate::error::Error;
use crate::families::regular::regular_vertices;
use crate::families::walk::order_ccw_from_origin;
use crate::families::{Family, FamilyInstance};
use crate::geom::{Point2, Polygon};
use crate::Result;

/// Builds R_{m,n} for odd m ≥ 3 and n a multiple of m.
///
/// Each edge of the regular small m-gon is replaced by the unit-radius arc
/// centred at the opposite vertex; n/m − 1 extra vertices are spread at
/// equal angles over each arc.
pub fn construct_reinhardt(m: usize, n: usize) -> Result<FamilyInstance> {
    if m < 3 || m % 2 == 0 {
        return Err(Error::domain(format!("Reuleaux base needs odd m >= 3, got {m}")));
    }
    if n == 0 || n % m != 0 {
        return Err(Error::domain(format!("n = {n} is not a multiple of m = {m}")));
    }
    let q = n / m;
    let corners = regular_vertices(m)?;
    let corners = corners.vertices();

    let mut points: Vec<Point2> = corners.to_vec();
    let arc_step = PI / (m as f64 * q as f64);
    for i in 0..m {
        let center = corners[i];
        let start = corners[(i + (m - 1) / 2) % m];
        let phi = (start.y - center.y).atan2(start.x - center.x);
        // Interior subdivision points only; the arc endpoints are corners.
        for j in 1..q {
            let a = phi + j as f64 * arc_step;
            points.push(center + Point2::new(a.cos(), a.sin()));
        }
    }

    let polygon = Polygon::new(order_ccw_from_origin(points)?)?;
    let side = polygon.side_lengths()[0];
    let perimeter = polygon.perimeter();
    Ok(FamilyInstance {
        family: Family::Reinhardt { m },
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
    use crate::geom::{upper_bound_perimeter, ToleranceConfig};

    #[test]
    fn reinhardt_hexagon_matches_reference() {
        let inst = construct_reinhardt(3, 6).unwrap();
        assert!((inst.perimeter - 3.105829).abs() < 1e-6);
        assert!((inst.perimeter - upper_bound_perimeter(6).unwrap()).abs() < 1e-12);
        // Interior arc points sit at (±0.3660, 0.3660).
        let hit = inst
            .polygon
            .vertices()
            .iter()
            .any(|v| (v.x - 0.3660).abs() < 1e-4 && (v.y - 0.3660).abs() < 1e-4);
        assert!(hit);
    }

    #[test]
    fn trivial_subdivision_is_the_regular_triangle() {
        let inst = construct_reinhardt(3, 3).unwrap();
        assert!((inst.perimeter - 3.0).abs() < 1e-12);
        assert_eq!(inst.polygon.vertex_count(), 3);
    }

    #[test]
    fn pentagon_based_20gon_attains_the_bound() {
        let inst = construct_reinhardt(5, 20).unwrap();
        assert!((inst.perimeter - upper_bound_perimeter(20).unwrap()).abs() < 1e-12);
        let tol = ToleranceConfig::default();
        let report = inst.polygon.certify(Some(inst.side), &tol);
        assert!(report.all_pass(), "{report:?}");
        // One diameter edge per vertex.
        assert_eq!(report.diameter_pairs.len(), 20);
    }

    #[test]
    fn rejects_even_base_and_non_multiples() {
        assert!(construct_reinhardt(4, 8).is_err());
        assert!(construct_reinhardt(3, 7).is_err());
    }
}
