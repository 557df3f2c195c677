//! Recomputation of the published perimeter table and of the gap analysis
//! for the improved 32- and 64-gons.

use crate::families::{construct_z32, construct_z64, mossinghoff_reference};
use crate::geom::{regular_perimeter, upper_bound_perimeter};
use crate::solver::solve_bn_angle;
use crate::Result;

pub const TABLE_SIZES: [usize; 5] = [16, 32, 64, 128, 256];

/// One recomputed table row. All columns except `mossinghoff` (a tabulated
/// constant) are computed from scratch.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub n: usize,
    pub regular: f64,
    pub mossinghoff: f64,
    pub bn: f64,
    pub upper_bound: f64,
    pub fraction: f64,
}

pub fn perimeter_table() -> Result<Vec<TableRow>> {
    TABLE_SIZES
        .iter()
        .map(|&n| {
            let t = solve_bn_angle(n)?;
            let bn = 2.0 * n as f64 * (t / 2.0).sin();
            let mossinghoff = mossinghoff_reference(n)?;
            let upper_bound = upper_bound_perimeter(n)?;
            Ok(TableRow {
                n,
                regular: regular_perimeter(n)?,
                mossinghoff,
                bn,
                upper_bound,
                fraction: (bn - mossinghoff) / (upper_bound - mossinghoff),
            })
        })
        .collect()
}

pub fn table_text(rows: &[TableRow]) -> String {
    let mut out = String::new();
    out.push_str("   n      L(R_n)        L(M_n)        L(B_n)        ub L_n        fraction\n");
    for r in rows {
        out.push_str(&format!(
            "{:4}  {:.10}  {:.10}  {:.10}  {:.10}  {:.4}\n",
            r.n, r.regular, r.mossinghoff, r.bn, r.upper_bound, r.fraction
        ));
    }
    out
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,regular,mossinghoff,bn,upper_bound,fraction\n");
    for r in rows {
        out.push_str(&format!(
            "{},{:.10},{:.10},{:.10},{:.10},{:.4}\n",
            r.n, r.regular, r.mossinghoff, r.bn, r.upper_bound, r.fraction
        ));
    }
    out
}

/// How far the improved polygons close the gap to the upper bound.
#[derive(Debug, Clone, Copy)]
pub struct GapsReport {
    pub ub_32: f64,
    pub b_32: f64,
    pub z_32: f64,
    pub ub_64: f64,
    pub b_64: f64,
    pub z_64: f64,
}

impl GapsReport {
    pub fn gap_ub_z32(&self) -> f64 {
        self.ub_32 - self.z_32
    }
    pub fn gap_ub_b32(&self) -> f64 {
        self.ub_32 - self.b_32
    }
    pub fn gap_ub_z64(&self) -> f64 {
        self.ub_64 - self.z_64
    }
    pub fn gap_ub_b64(&self) -> f64 {
        self.ub_64 - self.b_64
    }
    /// Fraction of the interval [L(B_n), ub] covered by the improvement.
    pub fn fraction_32(&self) -> f64 {
        (self.z_32 - self.b_32) / (self.ub_32 - self.b_32)
    }
    pub fn fraction_64(&self) -> f64 {
        (self.z_64 - self.b_64) / (self.ub_64 - self.b_64)
    }
}

pub fn gaps_report() -> Result<GapsReport> {
    let t32 = solve_bn_angle(32)?;
    let t64 = solve_bn_angle(64)?;
    Ok(GapsReport {
        ub_32: upper_bound_perimeter(32)?,
        b_32: 64.0 * (t32 / 2.0).sin(),
        z_32: construct_z32()?.perimeter,
        ub_64: upper_bound_perimeter(64)?,
        b_64: 128.0 * (t64 / 2.0).sin(),
        z_64: construct_z64()?.perimeter,
    })
}

pub fn gaps_text(report: &GapsReport) -> String {
    format!(
        "n = 32: ub = {:.10}\n\
         \x20 L(B_32) = {:.10}   ub - L(B_32) = {:.2e}\n\
         \x20 L(Z_32) = {:.10}   ub - L(Z_32) = {:.2e}\n\
         \x20 improvement fraction (L(Z_32) - L(B_32)) / (ub - L(B_32)) = {:.4}\n\
         n = 64: ub = {:.10}\n\
         \x20 L(B_64) = {:.10}   ub - L(B_64) = {:.2e}\n\
         \x20 L(Z_64) = {:.10}   ub - L(Z_64) = {:.2e}\n\
         \x20 improvement fraction (L(Z_64) - L(B_64)) / (ub - L(B_64)) = {:.4}\n",
        report.ub_32,
        report.b_32,
        report.gap_ub_b32(),
        report.z_32,
        report.gap_ub_z32(),
        report.fraction_32(),
        report.ub_64,
        report.b_64,
        report.gap_ub_b64(),
        report.z_64,
        report.gap_ub_z64(),
        report.fraction_64(),
    )
}
