//! The power-of-two family: convex equilateral small n-gons for n = 2^s,
//! s ≥ 4, whose perimeter falls short of the upper bound by only
//! π⁴/n⁴ + O(1/n⁵).
//!
//! The diameter graph is a tree symmetric about the vertical edge from
//! v_0 to the apex: a zig-zag half-path over the multiples m ∈ [1, n/2−1]
//! with m mod 4 ≠ 2, plus pendant edges at the skipped multiples
//! 2, 6, …, n/2−2. The closure angle t makes the one remaining boundary
//! side equal to the common side length 2·sin(t/2).

use std::f64::consts::PI;

use crate::error::Error;
use crate::families::walk::{close_under_mirror, order_ccw_from_origin, HalfPathWalk};
use crate::families::{Family, FamilyInstance};
use crate::geom::{Point2, Polygon};
use crate::solver;
use crate::Result;

pub(crate) fn validate_bn_count(n: usize) -> Result<()> {
    if !n.is_power_of_two() || n < 16 {
        return Err(Error::domain(format!(
            "this family needs n = 2^s with s >= 4, got n = {n}"
        )));
    }
    Ok(())
}

fn bn_walk(n: usize) -> HalfPathWalk {
    let path = (1..n as u32 / 2).filter(|m| m % 4 != 2).collect();
    let pendants = (1..n as u32 / 2).filter(|m| m % 4 == 2).collect();
    HalfPathWalk::new(path, pendants)
}

/// The walk vertices of the half-path, accumulated step by step:
/// p_0 = (0,0) up to p_{3n/8−1}. The second-to-last entry is the junction
/// vertex whose closed form appears in [`bn_junction_closed_form`].
pub fn bn_half_path(n: usize, t: f64) -> Result<Vec<Point2>> {
    validate_bn_count(n)?;
    Ok(bn_walk(n).path_points(t))
}

/// Closed form of the junction vertex (the half-path vertex one step
/// before the end):
/// x = sin t − (2cos t − 1)(sin 2t + sin(n/2−2)t) / (2cos 2t), and the
/// same with cosines for y.
pub fn bn_junction_closed_form(n: usize, t: f64) -> Point2 {
    let h = n as f64 / 2.0;
    let factor = (2.0 * t.cos() - 1.0) / (2.0 * (2.0 * t).cos());
    let x = t.sin() - factor * ((2.0 * t).sin() + ((h - 2.0) * t).sin());
    let y = t.cos() - factor * ((2.0 * t).cos() + ((h - 2.0) * t).cos());
    Point2::new(x, y)
}

/// Residual of the closure equation
/// (2x + sin(n/2−1)t)² + cos²(n/2−1)t − 4·sin²(t/2),
/// with x the closed-form junction abscissa. Zero exactly when the last
/// boundary side has the common side length.
///
/// Positive as t → 0⁺ and negative at t = π/n, so the root is bracketed
/// inside (0, π/n).
pub fn bn_closure_residual(n: usize, t: f64) -> f64 {
    let h = n as f64 / 2.0;
    let x = bn_junction_closed_form(n, t).x;
    let a = 2.0 * x + ((h - 1.0) * t).sin();
    let c = ((h - 1.0) * t).cos();
    let side = 2.0 * (t / 2.0).sin();
    a * a + c * c - side * side
}

/// Assembles the full n-gon for a given angle: walk vertices, pendants,
/// apex, mirror closure, and counterclockwise ordering from the origin.
pub fn bn_vertices(n: usize, t: f64) -> Result<Polygon> {
    validate_bn_count(n)?;
    if !(t > 0.0 && t < 1.5 * PI / n as f64) {
        return Err(Error::domain(format!(
            "angle t = {t} out of range for the n = {n} construction"
        )));
    }
    let half = bn_walk(n).assemble_half(t);
    let all = close_under_mirror(&half);
    if all.len() != n {
        return Err(Error::domain(format!(
            "assembled {} distinct vertices, expected {n}",
            all.len()
        )));
    }
    Polygon::new(order_ccw_from_origin(all)?)
}

/// Solves the closure angle and assembles the polygon.
pub fn construct_bn(n: usize) -> Result<FamilyInstance> {
    let t = solver::solve_bn_angle(n)?;
    let polygon = bn_vertices(n, t)?;
    let side = 2.0 * (t / 2.0).sin();
    let perimeter = polygon.perimeter();
    Ok(FamilyInstance {
        family: Family::Bn,
        n,
        t: Some(t),
        aux: None,
        side,
        polygon,
        perimeter,
    })
}
