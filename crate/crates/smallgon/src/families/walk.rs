//! Shared assembly machinery for the diameter-graph families.
//!
//! Each of these polygons is generated from one angle t by a zig-zag walk:
//! starting at the origin, step j adds ±(sin mt, cos mt) for the j-th
//! multiple m in an ascending list, with alternating sign (up, down, up,
//! …). Multiples absent from the path list hang off it as pendant
//! vertices, attached to the walk vertex sitting between the neighbouring
//! multiples and pointing away from the side the walk came from. Every
//! step and pendant edge has length exactly 1, so the diameter graph is
//! unit-distance by construction.

use crate::error::Error;
use crate::geom::Point2;
use crate::Result;

/// Half of a symmetric diameter graph: the path multiples (ascending) and
/// the pendant multiples that fill the gaps.
pub(crate) struct HalfPathWalk {
    pub path: Vec<u32>,
    pub pendants: Vec<u32>,
}

fn unit_step(multiple: u32, t: f64) -> Point2 {
    let a = multiple as f64 * t;
    Point2::new(a.sin(), a.cos())
}

impl HalfPathWalk {
    pub fn new(path: Vec<u32>, pendants: Vec<u32>) -> Self {
        debug_assert!(path.windows(2).all(|w| w[0] < w[1]));
        HalfPathWalk { path, pendants }
    }

    /// The walk vertices p_0 = (0,0), p_1, …, one per path multiple.
    pub fn path_points(&self, t: f64) -> Vec<Point2> {
        let mut pts = Vec::with_capacity(self.path.len() + 1);
        pts.push(Point2::ORIGIN);
        let mut sign = 1.0;
        for &m in &self.path {
            let step = unit_step(m, t);
            let last = *pts.last().unwrap();
            pts.push(last + step * sign);
            sign = -sign;
        }
        pts
    }

    /// Path vertices, pendant vertices, and the apex (0, 1).
    pub fn assemble_half(&self, t: f64) -> Vec<Point2> {
        let path_pts = self.path_points(t);
        let mut pts = path_pts.clone();
        pts.push(Point2::new(0.0, 1.0));
        for &m in &self.pendants {
            // Attach after the last path step below m; sign (−1)^j points
            // opposite to that incoming step.
            let j = self.path.partition_point(|&p| p < m);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            pts.push(path_pts[j] + unit_step(m, t) * sign);
        }
        pts
    }
}

/// Union of a point set with its mirror across x = 0, dropping duplicates
/// (axis points and pairs that are already mirror-symmetric).
pub(crate) fn close_under_mirror(points: &[Point2]) -> Vec<Point2> {
    let mut all: Vec<Point2> = Vec::with_capacity(points.len() * 2);
    for &p in points {
        push_if_new(&mut all, p);
    }
    for &p in points {
        push_if_new(&mut all, p.mirror_x());
    }
    all
}

fn push_if_new(acc: &mut Vec<Point2>, p: Point2) {
    const DEDUP_TOL: f64 = 1e-9;
    if acc.iter().all(|q| q.distance(p) > DEDUP_TOL) {
        acc.push(p);
    }
}

/// Orders a vertex set counterclockwise by angle about its centroid,
/// starting from the vertex at the origin.
pub(crate) fn order_ccw_from_origin(points: Vec<Point2>) -> Result<Vec<Point2>> {
    let n = points.len() as f64;
    let mut cx = 0.0;
    let mut cy = 0.0;
    for p in &points {
        cx += p.x;
        cy += p.y;
    }
    let centroid = Point2::new(cx / n, cy / n);

    let origin_idx = points
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.norm().total_cmp(&b.norm()))
        .map(|(i, _)| i)
        .ok_or_else(|| Error::domain("empty vertex set"))?;
    if points[origin_idx].norm() > 1e-9 {
        return Err(Error::domain("assembled vertex set does not contain the origin"));
    }

    let base = angle_about(centroid, points[origin_idx]);
    let mut keyed: Vec<(f64, Point2)> = points
        .into_iter()
        .map(|p| {
            let key = (angle_about(centroid, p) - base).rem_euclid(std::f64::consts::TAU);
            (key, p)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, p)| p).collect())
}

fn angle_about(center: Point2, p: Point2) -> f64 {
    (p.y - center.y).atan2(p.x - center.x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walk_alternates_signs() {
        let w = HalfPathWalk::new(vec![1, 3], vec![2]);
        let t = 0.2;
        let pts = w.path_points(t);
        assert_eq!(pts.len(), 3);
        assert!((pts[1].x - t.sin()).abs() < 1e-15);
        assert!((pts[2].x - (t.sin() - (3.0 * t).sin())).abs() < 1e-15);
        // Every step has unit length.
        assert!((pts[1].distance(pts[0]) - 1.0).abs() < 1e-15);
        assert!((pts[2].distance(pts[1]) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn pendant_attaches_between_neighbouring_multiples() {
        let w = HalfPathWalk::new(vec![1, 3], vec![2]);
        let t = 0.2;
        let half = w.assemble_half(t);
        // p0, p1, p2, apex, pendant
        assert_eq!(half.len(), 5);
        let pendant = half[4];
        let expected = half[1] - unit_step(2, t); // hangs off p_1, pointing down
        assert!(pendant.distance(expected) < 1e-15);
    }

    #[test]
    fn mirror_closure_deduplicates_axis_points() {
        let pts = vec![Point2::ORIGIN, Point2::new(0.0, 1.0), Point2::new(0.3, 0.5)];
        let closed = close_under_mirror(&pts);
        assert_eq!(closed.len(), 4);
    }

    #[test]
    fn ccw_ordering_starts_at_origin() {
        let pts = vec![
            Point2::new(0.5, 0.5),
            Point2::ORIGIN,
            Point2::new(0.0, 1.0),
            Point2::new(-0.5, 0.5),
        ];
        let ordered = order_ccw_from_origin(pts).unwrap();
        assert_eq!(ordered[0], Point2::ORIGIN);
        assert_eq!(ordered[1], Point2::new(0.5, 0.5));
        assert_eq!(ordered[2], Point2::new(0.0, 1.0));
        assert_eq!(ordered[3], Point2::new(-0.5, 0.5));
    }
}
