//! The optimal convex equilateral small octagon.
//!
//! Its squared side length u is the root of a sextic (see
//! [`crate::solver::h8_side_squared`]); the vertex layout then follows
//! from the diameter graph: with the bottom vertex at the origin and the
//! apex at (0, 1), the origin also holds two skew unit diagonals, and the
//! mid-height pair sits a unit apart horizontally.

use crate::error::Error;
use crate::families::{Family, FamilyInstance};
use crate::geom::{Point2, Polygon};
use crate::solver;
use crate::Result;

/// Consistency slack for the one unit-distance constraint that is implied
/// by the sextic rather than imposed by the layout.
const CLOSURE_SLACK: f64 = 1e-12;

pub fn construct_h8() -> Result<FamilyInstance> {
    let u = solver::h8_side_squared();
    let side = u.sqrt();

    // Upper-right vertex: one side below the apex on the unit circle
    // around the origin, so cos β = 1 − u/2.
    let cos_b = 1.0 - u / 2.0;
    let b = Point2::new((u * (1.0 - u / 4.0)).sqrt(), cos_b);
    // Mid-height vertex: abscissa 1/2 (its mirror lies a unit away),
    // one side below the upper-right vertex.
    let c = Point2::new(0.5, b.y - (u - (b.x - 0.5) * (b.x - 0.5)).sqrt());
    // Lower-right vertex: a side from both the origin and the mid-height
    // vertex; of the two circle intersections, the lower one is convex.
    let d = lower_circle_intersection(c, side)?;

    // The remaining unit diagonal is implied by the sextic; check it.
    let f = d.mirror_x();
    if (b.distance(f) - 1.0).abs() > CLOSURE_SLACK {
        return Err(Error::domain(format!(
            "octagon layout inconsistent: implied diagonal has length {}",
            b.distance(f)
        )));
    }

    let verts = vec![
        Point2::ORIGIN,
        d,
        c,
        b,
        Point2::new(0.0, 1.0),
        b.mirror_x(),
        c.mirror_x(),
        f,
    ];
    let polygon = Polygon::new(verts)?;
    let perimeter = polygon.perimeter();
    Ok(FamilyInstance {
        family: Family::H8,
        n: 8,
        t: Some(2.0 * (side / 2.0).asin()),
        aux: None,
        side,
        polygon,
        perimeter,
    })
}

/// Intersection of the circles of radius `r` around the origin and around
/// `c`, picking the one with the smaller ordinate.
fn lower_circle_intersection(c: Point2, r: f64) -> Result<Point2> {
    let d2 = c.x * c.x + c.y * c.y;
    let h2 = r * r - d2 / 4.0;
    if h2 < 0.0 {
        return Err(Error::domain("circles do not intersect"));
    }
    let d = d2.sqrt();
    let mid = c * 0.5;
    let perp = Point2::new(-c.y / d, c.x / d);
    let h = h2.sqrt();
    let p1 = mid + perp * h;
    let p2 = mid - perp * h;
    Ok(if p1.y < p2.y { p1 } else { p2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::ToleranceConfig;

    #[test]
    fn perimeter_matches_reference() {
        let inst = construct_h8().unwrap();
        assert!((inst.perimeter - 3.095609).abs() < 1e-5);
        assert!((inst.perimeter - 8.0 * inst.side).abs() < 1e-12);
    }

    #[test]
    fn certificates_pass_exactly() {
        let inst = construct_h8().unwrap();
        let tol = ToleranceConfig::default();
        let report = inst.polygon.certify(Some(inst.side), &tol);
        assert!(report.all_pass(), "{report:?}");
        // v0 carries three unit diagonals; six more come from the two skew
        // pairs and the horizontal one.
        assert_eq!(report.diameter_pairs.len(), 6);
    }

    #[test]
    fn layout_matches_figure_coordinates() {
        let inst = construct_h8().unwrap();
        let fixture = crate::families::fixture(crate::families::FixtureName::H8);
        for v in inst.polygon.vertices() {
            let nearest = fixture
                .vertices()
                .iter()
                .map(|w| w.distance(*v))
                .fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-4, "vertex {v:?} deviates from the figure");
        }
    }
}
