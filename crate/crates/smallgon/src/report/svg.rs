//! Deterministic SVG rendering in the style of the reference figures:
//! dashed polygon boundary, solid unit-distance (diameter-graph) edges.

use crate::geom::{Polygon, ToleranceConfig};

#[derive(Debug, Clone)]
pub struct SvgOptions {
    pub show_diameter_graph: bool,
    pub tol: ToleranceConfig,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            show_diameter_graph: true,
            tol: ToleranceConfig::default(),
        }
    }
}

fn fmt(v: f64) -> String {
    // Fixed precision keeps the output identical across runs.
    format!("{v:.6}")
}

/// Renders the polygon to a standalone SVG string. The viewport is the
/// polygon's bounding box with a 5% margin; the y axis is flipped so the
/// apex is drawn on top.
pub fn render_svg(polygon: &Polygon, options: &SvgOptions) -> String {
    let verts = polygon.vertices();
    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in verts {
        min_x = min_x.min(v.x);
        max_x = max_x.max(v.x);
        min_y = min_y.min(v.y);
        max_y = max_y.max(v.y);
    }
    let width = max_x - min_x;
    let height = max_y - min_y;
    let margin = 0.05 * width.max(height);

    // Flip y: a point (x, y) is drawn at (x, -y).
    let view = format!(
        "{} {} {} {}",
        fmt(min_x - margin),
        fmt(-max_y - margin),
        fmt(width + 2.0 * margin),
        fmt(height + 2.0 * margin)
    );

    let stroke = 0.004;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"{view}\">\n"
    ));

    let points: Vec<String> = verts.iter().map(|v| format!("{},{}", fmt(v.x), fmt(-v.y))).collect();
    out.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\" stroke-dasharray=\"{},{}\"/>\n",
        points.join(" "),
        fmt(stroke),
        fmt(0.02),
        fmt(0.012)
    ));

    if options.show_diameter_graph {
        for (i, j) in polygon.diameter_graph(&options.tol) {
            let a = verts[i];
            let b = verts[j];
            out.push_str(&format!(
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"{}\"/>\n",
                fmt(a.x),
                fmt(-a.y),
                fmt(b.x),
                fmt(-b.y),
                fmt(stroke)
            ));
        }
    }

    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct_bn, construct_regular, construct_z32};

    #[test]
    fn output_is_deterministic() {
        let inst = construct_bn(16).unwrap();
        let opts = SvgOptions::default();
        assert_eq!(render_svg(&inst.polygon, &opts), render_svg(&inst.polygon, &opts));
    }

    #[test]
    fn pentagon_renders_its_pentagram() {
        let inst = construct_regular(5).unwrap();
        let svg = render_svg(&inst.polygon, &SvgOptions::default());
        assert_eq!(svg.matches("<line").count(), 5);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.contains("stroke-dasharray"));
    }

    #[test]
    fn diameter_graph_can_be_suppressed() {
        let inst = construct_regular(5).unwrap();
        let opts = SvgOptions { show_diameter_graph: false, ..Default::default() };
        let svg = render_svg(&inst.polygon, &opts);
        assert_eq!(svg.matches("<line").count(), 0);
    }

    #[test]
    fn improved_32gon_shows_the_full_fan() {
        let inst = construct_z32().unwrap();
        let svg = render_svg(&inst.polygon, &SvgOptions::default());
        // Tree diameter graph on 32 vertices: 31 solid edges.
        assert_eq!(svg.matches("<line").count(), 31);
    }
}
