//! The on-disk polygon document: a small JSON file with construction
//! parameters, certificate summary, and full-precision vertices.
//!
//! Writing is canonical (fixed key order, 17-significant-digit floats), so
//! write → read → write reproduces the file byte for byte. A bare
//! two-column `x,y` CSV is supported alongside for interop.

use serde::Deserialize;

use crate::error::Error;
use crate::families::FamilyInstance;
use crate::geom::{CertificateReport, Point2, Polygon, ToleranceConfig};
use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// Certificate flags and margins as stored in a document.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct CertificateSummary {
    pub small: bool,
    pub small_margin: f64,
    pub convex: bool,
    pub convex_margin: f64,
    pub equilateral: bool,
    pub equilateral_margin: f64,
    pub symmetric: bool,
    pub symmetric_margin: f64,
}

impl From<&CertificateReport> for CertificateSummary {
    fn from(report: &CertificateReport) -> Self {
        CertificateSummary {
            small: report.small.pass,
            small_margin: report.small.margin,
            convex: report.convex.pass,
            convex_margin: report.convex.margin,
            equilateral: report.equilateral.pass,
            equilateral_margin: report.equilateral.margin,
            symmetric: report.symmetric.pass,
            symmetric_margin: report.symmetric.margin,
        }
    }
}

impl CertificateSummary {
    pub fn all_pass(&self) -> bool {
        self.small && self.convex && self.equilateral && self.symmetric
    }
}

/// Self-describing polygon file.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct PolygonDocument {
    pub schema_version: u32,
    pub family: String,
    pub n: usize,
    pub t: Option<f64>,
    pub aux: Option<f64>,
    pub side: f64,
    pub perimeter: f64,
    pub certificates: CertificateSummary,
    pub vertices: Vec<[f64; 2]>,
}

fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    match v {
        Some(v) => fmt_f64(v),
        None => "null".to_string(),
    }
}

impl PolygonDocument {
    pub fn from_instance(instance: &FamilyInstance, tol: &ToleranceConfig) -> Self {
        let report = instance.polygon.certify(Some(instance.side), tol);
        PolygonDocument {
            schema_version: SCHEMA_VERSION,
            family: instance.family.to_string(),
            n: instance.n,
            t: instance.t,
            aux: instance.aux,
            side: instance.side,
            perimeter: instance.perimeter,
            certificates: CertificateSummary::from(&report),
            vertices: instance
                .polygon
                .vertices()
                .iter()
                .map(|v| [v.x, v.y])
                .collect(),
        }
    }

    /// Canonical text form.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"schema_version\": {},\n", self.schema_version));
        out.push_str(&format!("  \"family\": \"{}\",\n", self.family));
        out.push_str(&format!("  \"n\": {},\n", self.n));
        out.push_str(&format!("  \"t\": {},\n", fmt_opt(self.t)));
        out.push_str(&format!("  \"aux\": {},\n", fmt_opt(self.aux)));
        out.push_str(&format!("  \"side\": {},\n", fmt_f64(self.side)));
        out.push_str(&format!("  \"perimeter\": {},\n", fmt_f64(self.perimeter)));
        out.push_str("  \"certificates\": {\n");
        let c = &self.certificates;
        out.push_str(&format!("    \"small\": {},\n", c.small));
        out.push_str(&format!("    \"small_margin\": {},\n", fmt_f64(c.small_margin)));
        out.push_str(&format!("    \"convex\": {},\n", c.convex));
        out.push_str(&format!("    \"convex_margin\": {},\n", fmt_f64(c.convex_margin)));
        out.push_str(&format!("    \"equilateral\": {},\n", c.equilateral));
        out.push_str(&format!(
            "    \"equilateral_margin\": {},\n",
            fmt_f64(c.equilateral_margin)
        ));
        out.push_str(&format!("    \"symmetric\": {},\n", c.symmetric));
        out.push_str(&format!(
            "    \"symmetric_margin\": {}\n",
            fmt_f64(c.symmetric_margin)
        ));
        out.push_str("  },\n");
        out.push_str("  \"vertices\": [\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let sep = if i + 1 < self.vertices.len() { "," } else { "" };
            out.push_str(&format!("    [{}, {}]{}\n", fmt_f64(v[0]), fmt_f64(v[1]), sep));
        }
        out.push_str("  ]\n");
        out.push_str("}\n");
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: PolygonDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema version {}",
                doc.schema_version
            )));
        }
        if doc.vertices.len() != doc.n {
            return Err(Error::Parse(format!(
                "vertex count {} does not match n = {}",
                doc.vertices.len(),
                doc.n
            )));
        }
        Ok(doc)
    }

    pub fn to_polygon(&self) -> Result<Polygon> {
        Polygon::new(self.vertices.iter().map(|v| Point2::new(v[0], v[1])).collect())
    }
}

/// Bare two-column CSV: one `x,y` line per vertex, full precision, no
/// header.
pub fn render_csv(polygon: &Polygon) -> String {
    let mut out = String::new();
    for v in polygon.vertices() {
        out.push_str(&format!("{},{}\n", fmt_f64(v.x), fmt_f64(v.y)));
    }
    out
}

pub fn parse_csv(text: &str) -> Result<Polygon> {
    let mut verts = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (xs, ys) = line
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("line {}: expected `x,y`", lineno + 1)))?;
        let x: f64 = xs
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        let y: f64 = ys
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        verts.push(Point2::new(x, y));
    }
    Polygon::new(verts)
}

/// Reads either a polygon document or a bare CSV, detected by the leading
/// character. Returns the polygon and, when a document was given, the
/// nominal side stored in it.
pub fn parse_polygon_input(text: &str) -> Result<(Polygon, Option<f64>)> {
    if text.trim_start().starts_with('{') {
        let doc = PolygonDocument::parse(text)?;
        let poly = doc.to_polygon()?;
        Ok((poly, Some(doc.side)))
    } else {
        Ok((parse_csv(text)?, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct_bn, construct_z64, fixture_instance, FixtureName};

    #[test]
    fn document_round_trip_is_byte_identical() {
        let tol = ToleranceConfig::default();
        let inst = construct_bn(16).unwrap();
        let doc = PolygonDocument::from_instance(&inst, &tol);
        let text = doc.render();
        let parsed = PolygonDocument::parse(&text).unwrap();
        assert_eq!(parsed, doc);
        assert_eq!(parsed.render(), text);
        assert_eq!(parsed.vertices.len(), 16);
    }

    #[test]
    fn aux_field_round_trips_for_the_64gon() {
        let tol = ToleranceConfig::default();
        let inst = construct_z64().unwrap();
        let doc = PolygonDocument::from_instance(&inst, &tol);
        let parsed = PolygonDocument::parse(&doc.render()).unwrap();
        assert_eq!(parsed.aux, inst.aux);
        assert!(parsed.certificates.all_pass());
    }

    #[test]
    fn fixture_document_has_null_angle() {
        let tol = ToleranceConfig::default();
        let inst = fixture_instance(FixtureName::V8);
        let doc = PolygonDocument::from_instance(&inst, &tol);
        assert!(doc.render().contains("\"t\": null"));
        let parsed = PolygonDocument::parse(&doc.render()).unwrap();
        assert_eq!(parsed.t, None);
    }

    #[test]
    fn vertex_count_mismatch_is_rejected() {
        let tol = ToleranceConfig::default();
        let inst = construct_bn(16).unwrap();
        let mut doc = PolygonDocument::from_instance(&inst, &tol);
        doc.n = 17;
        assert!(matches!(PolygonDocument::parse(&doc.render()), Err(Error::Parse(_))));
    }

    #[test]
    fn csv_round_trip_preserves_coordinates() {
        let inst = construct_bn(16).unwrap();
        let text = render_csv(&inst.polygon);
        let parsed = parse_csv(&text).unwrap();
        assert_eq!(parsed, inst.polygon);
        assert!(!text.contains("x,")); // no header
    }

    #[test]
    fn input_detection() {
        let tol = ToleranceConfig::default();
        let inst = construct_bn(16).unwrap();
        let doc_text = PolygonDocument::from_instance(&inst, &tol).render();
        let (p1, side) = parse_polygon_input(&doc_text).unwrap();
        assert_eq!(p1, inst.polygon);
        assert_eq!(side, Some(inst.side));
        let (p2, side) = parse_polygon_input(&render_csv(&inst.polygon)).unwrap();
        assert_eq!(p2, inst.polygon);
        assert_eq!(side, None);
        assert!(parse_polygon_input("not,a,number\n").is_err());
    }
}
