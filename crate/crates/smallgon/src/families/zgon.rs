//! The improved 32-gon and 64-gon: hand-tailored diameter graphs whose
//! perimeters beat the power-of-two family at those sizes.

use std::f64::consts::PI;

use crate::error::Error;
use crate::families::walk::{close_under_mirror, order_ccw_from_origin, HalfPathWalk};
use crate::families::{Family, FamilyInstance};
use crate::geom::{Point2, Polygon};
use crate::solver;
use crate::Result;

fn z32_walk() -> HalfPathWalk {
    HalfPathWalk::new(vec![5, 13, 14, 15], vec![1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 12])
}

/// Multiples of the 23-step main path; 4, 9, 21, 24, 27 and 28 are the
/// pendant multiples filling the gaps up to 29.
const Z64_PATH: [u32; 23] = [
    1, 2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 22, 23, 25, 26, 29,
];
const Z64_PENDANTS: [u32; 6] = [4, 9, 21, 24, 27, 28];

fn z64_walk() -> HalfPathWalk {
    HalfPathWalk::new(Z64_PATH.to_vec(), Z64_PENDANTS.to_vec())
}

/// Residual of the 32-gon closure equation
/// (2(sin 5t − sin 13t + sin 14t) − sin 15t)² + cos² 15t − 4·sin²(t/2).
pub fn z32_closure_residual(t: f64) -> f64 {
    let x10 = (5.0 * t).sin() - (13.0 * t).sin() + (14.0 * t).sin();
    let a = 2.0 * x10 - (15.0 * t).sin();
    let c = (15.0 * t).cos();
    let side = 2.0 * (t / 2.0).sin();
    a * a + c * c - side * side
}

/// Assembles the 32 vertices for a given angle: the 4-step half-path over
/// multiples 5, 13, 14, 15, pendant fans at the origin (multiples 1–4) and
/// at the first path vertex (multiples 6–12), apex, and mirror closure.
pub fn z32_vertices(t: f64) -> Result<Polygon> {
    if !(t > 0.0 && t < PI / 32.0) {
        return Err(Error::domain(format!("angle t = {t} outside (0, pi/32)")));
    }
    let half = z32_walk().assemble_half(t);
    let all = close_under_mirror(&half);
    if all.len() != 32 {
        return Err(Error::domain(format!(
            "assembled {} distinct vertices, expected 32",
            all.len()
        )));
    }
    Polygon::new(order_ccw_from_origin(all)?)
}

pub fn construct_z32() -> Result<FamilyInstance> {
    let t = solver::solve_z32_angle()?;
    let polygon = z32_vertices(t)?;
    let side = 2.0 * (t / 2.0).sin();
    let perimeter = polygon.perimeter();
    Ok(FamilyInstance {
        family: Family::Z32,
        n: 32,
        t: Some(t),
        aux: None,
        side,
        polygon,
        perimeter,
    })
}

/// End points of the 64-gon main path: the junction vertex (one step
/// before the end) and the final vertex reached by the +29t step.
pub(crate) fn z64_main_path_ends(t: f64) -> (Point2, Point2) {
    let pts = z64_walk().path_points(t);
    (pts[pts.len() - 2], pts[pts.len() - 1])
}

/// Assembles the 64 vertices for a given angle and side-path ordinate:
/// the 23-step main path, six pendants, apex, the horizontal unit edge at
/// height y with its two closing vertices, and mirror closure.
pub fn z64_vertices(t: f64, y: f64) -> Result<Polygon> {
    if !(t > 0.0 && t < PI / 64.0) {
        return Err(Error::domain(format!("angle t = {t} outside (0, pi/64)")));
    }
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::domain(format!("ordinate y = {y} outside (0, 1)")));
    }
    let mut half = z64_walk().assemble_half(t);
    // Side path: the horizontal unit edge and the vertices one side above
    // its endpoints. Already mirror-symmetric as a set.
    half.push(Point2::new(-0.5, y));
    half.push(Point2::new(0.5, y));
    half.push(Point2::new(t.cos() - 0.5, y + t.sin()));
    half.push(Point2::new(0.5 - t.cos(), y + t.sin()));
    let all = close_under_mirror(&half);
    if all.len() != 64 {
        return Err(Error::domain(format!(
            "assembled {} distinct vertices, expected 64",
            all.len()
        )));
    }
    Polygon::new(order_ccw_from_origin(all)?)
}

pub fn construct_z64() -> Result<FamilyInstance> {
    let (t, y) = solver::solve_z64_angle()?;
    let polygon = z64_vertices(t, y)?;
    let side = 2.0 * (t / 2.0).sin();
    let perimeter = polygon.perimeter();
    Ok(FamilyInstance {
        family: Family::Z64,
        n: 64,
        t: Some(t),
        aux: Some(y),
        side,
        polygon,
        perimeter,
    })
}
