//! Machine-readable artifacts: polygon documents, CSV, SVG figures, and
//! the recomputed reference table and gap analysis.

pub mod document;
pub mod svg;
pub mod table;

pub use document::{parse_csv, parse_polygon_input, render_csv, CertificateSummary, PolygonDocument};
pub use svg::{render_svg, SvgOptions};
pub use table::{gaps_report, gaps_text, perimeter_table, table_csv, table_text, GapsReport, TableRow};
