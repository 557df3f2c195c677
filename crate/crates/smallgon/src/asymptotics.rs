//! Truncated asymptotic series used as independent checks on the solved
//! constructions and to extrapolate beyond the tabulated sizes.
//!
//! Coefficients are exact combinations of powers of π evaluated once in
//! double precision; every value records the power of 1/n of the first
//! omitted term.

use std::f64::consts::PI;

/// A truncated series evaluation: the value and the power of 1/n of the
/// first omitted term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub truncation_order: u32,
}

/// Perimeter of the power-of-two family:
/// π − π³/24n² + (π⁵/1920 − π⁴)/n⁴ + π⁵/n⁵ − (π⁷/322560 + 41π⁶/24)/n⁶.
pub fn series_perimeter_bn(n: usize) -> SeriesValue {
    let n = n as f64;
    let value = PI - PI.powi(3) / (24.0 * n.powi(2))
        + (PI.powi(5) / 1920.0 - PI.powi(4)) / n.powi(4)
        + PI.powi(5) / n.powi(5)
        - (PI.powi(7) / 322560.0 + 41.0 * PI.powi(6) / 24.0) / n.powi(6);
    SeriesValue { value, truncation_order: 7 }
}

/// Perimeter of Mossinghoff's family:
/// π − π³/24n² + (π⁵/1920 − 3π⁴)/n⁴ + 9π⁵/n⁵ − (π⁷/322560 + 9π⁶/8)/n⁶.
pub fn series_perimeter_mn(n: usize) -> SeriesValue {
    let n = n as f64;
    let value = PI - PI.powi(3) / (24.0 * n.powi(2))
        + (PI.powi(5) / 1920.0 - 3.0 * PI.powi(4)) / n.powi(4)
        + 9.0 * PI.powi(5) / n.powi(5)
        - (PI.powi(7) / 322560.0 + 9.0 * PI.powi(6) / 8.0) / n.powi(6);
    SeriesValue { value, truncation_order: 7 }
}

/// Shortfall of the power-of-two family from the upper bound:
/// π⁴/n⁴ − π⁵/n⁵.
pub fn series_gap_ub_bn(n: usize) -> SeriesValue {
    let n = n as f64;
    SeriesValue {
        value: PI.powi(4) / n.powi(4) - PI.powi(5) / n.powi(5),
        truncation_order: 6,
    }
}

/// Margin of the power-of-two family over Mossinghoff's:
/// 2π⁴/n⁴ − 8π⁵/n⁵ − 7π⁶/12n⁶.
pub fn series_gap_bn_mn(n: usize) -> SeriesValue {
    let n = n as f64;
    SeriesValue {
        value: 2.0 * PI.powi(4) / n.powi(4) - 8.0 * PI.powi(5) / n.powi(5)
            - 7.0 * PI.powi(6) / (12.0 * n.powi(6)),
        truncation_order: 7,
    }
}

/// The widest horizontal vertex pair of the power-of-two family:
/// 2x_{n/4} = 1 − π³/n³ − 7π⁵/4n⁵. Always below 1, certifying smallness.
pub fn series_smallness_margin(n: usize) -> SeriesValue {
    let n = n as f64;
    SeriesValue {
        value: 1.0 - PI.powi(3) / n.powi(3) - 7.0 * PI.powi(5) / (4.0 * n.powi(5)),
        truncation_order: 7,
    }
}

/// The smallest convexity determinant of the power-of-two family, at the
/// quarter-index vertex: σ = 2π³/n³ − π⁴/n⁴. Positive for all n ≥ 16.
pub fn series_sigma_quarter(n: usize) -> SeriesValue {
    let n = n as f64;
    SeriesValue {
        value: 2.0 * PI.powi(3) / n.powi(3) - PI.powi(4) / n.powi(4),
        truncation_order: 5,
    }
}
