//! Bracketed bisection for the closure equations, the asymptotic initial
//! guess for the power-of-two family, the auxiliary-ordinate elimination
//! for the improved 64-gon, and the sextic root behind the optimal
//! equilateral octagon.
//!
//! Everything here is plain bisection: the closure residuals are cheap
//! closed forms, and bisection keeps repeated runs bit-identical.

use std::f64::consts::PI;

use crate::error::Error;
use crate::families::{bn, zgon};
use crate::geom::ToleranceConfig;
use crate::Result;

const MAX_BISECTIONS: usize = 200;
const MAX_DOUBLINGS: usize = 60;

/// Bisection on [lo, hi]; requires a sign change. Returns a root with
/// |f(root)| ≤ `root_tol` or interval width ≤ `bracket_tol`.
pub fn bisect_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: &ToleranceConfig) -> Result<f64> {
    if !(lo < hi) {
        return Err(Error::domain(format!("invalid bracket [{lo}, {hi}]")));
    }
    let f_lo = f(lo);
    let f_hi = f(hi);
    if !f_lo.is_finite() {
        return Err(Error::NonFiniteResidual(lo));
    }
    if !f_hi.is_finite() {
        return Err(Error::NonFiniteResidual(hi));
    }
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }

    let (mut lo, mut hi) = (lo, hi);
    let mut f_lo = f_lo;
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Interval no longer representable more finely.
            break;
        }
        let f_mid = f(mid);
        if !f_mid.is_finite() {
            return Err(Error::NonFiniteResidual(mid));
        }
        if f_mid == 0.0 || f_mid.abs() <= tol.root_tol || (hi - lo) <= tol.bracket_tol {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Expands a bracket symmetrically around `guess`, doubling the half-width
/// until the residual changes sign. The lower end is kept positive.
fn expand_bracket<F: Fn(f64) -> f64>(f: &F, guess: f64, initial_half_width: f64) -> Result<(f64, f64)> {
    let mut w = initial_half_width;
    for _ in 0..=MAX_DOUBLINGS {
        let lo = (guess - w).max(1e-300);
        let hi = guess + w;
        let f_lo = f(lo);
        let f_hi = f(hi);
        if !f_lo.is_finite() {
            return Err(Error::NonFiniteResidual(lo));
        }
        if !f_hi.is_finite() {
            return Err(Error::NonFiniteResidual(hi));
        }
        if f_lo == 0.0 || f_hi == 0.0 || f_lo.signum() != f_hi.signum() {
            return Ok((lo, hi));
        }
        w *= 2.0;
    }
    Err(Error::BracketExhausted { guess, half_width: w })
}

/// Truncated series for the closure angle of the power-of-two family:
/// t₀(n) = π/n − π⁴/n⁵ + π⁵/n⁶ − 11π⁶/(6n⁷) + 35π⁷/(12n⁸).
///
/// Valid for n ≥ 16; the first omitted term is O(1/n⁹).
pub fn t0_initial_guess(n: usize) -> f64 {
    let n = n as f64;
    PI / n - PI.powi(4) / n.powi(5) + PI.powi(5) / n.powi(6) - 11.0 * PI.powi(6) / (6.0 * n.powi(7))
        + 35.0 * PI.powi(7) / (12.0 * n.powi(8))
}

fn seed_half_width(n: usize) -> f64 {
    2.0 * PI.powi(4) / (n as f64).powi(5)
}

/// Solves the closure equation of the power-of-two family for its angle.
///
/// The bracket is seeded at `t0_initial_guess(n) ± 2π⁴/n⁵` and expanded by
/// doubling until the residual changes sign.
pub fn solve_bn_angle(n: usize) -> Result<f64> {
    bn::validate_bn_count(n)?;
    let tol = ToleranceConfig::default();
    let f = |t: f64| bn::bn_closure_residual(n, t);
    let (lo, hi) = expand_bracket(&f, t0_initial_guess(n), seed_half_width(n))?;
    bisect_root(f, lo, hi, &tol)
}

/// Angle of the improved 32-gon; the root of its closure equation in
/// (0, π/32), a little below the regular angle.
pub fn solve_z32_angle() -> Result<f64> {
    let tol = ToleranceConfig::default();
    let f = zgon::z32_closure_residual;
    let (lo, hi) = expand_bracket(&f, PI / 32.0, seed_half_width(32))?;
    bisect_root(f, lo, hi, &tol)
}

/// Auxiliary ordinate of the improved 64-gon: the y for which the side
/// closing onto the horizontal unit edge has the common side length.
/// Takes the branch that keeps the closing vertex below its neighbor.
pub fn z64_solve_y(t: f64) -> Result<f64> {
    let (_, v16) = zgon::z64_main_path_ends(t);
    let side = 2.0 * (t / 2.0).sin();
    let dx = v16.x - (t.cos() - 0.5);
    let disc = side * side - dx * dx;
    if disc < 0.0 {
        return Err(Error::InfeasibleAngle { t, discriminant: disc });
    }
    Ok(v16.y - t.sin() - disc.sqrt())
}

/// Solves the improved 64-gon: eliminates the ordinate via
/// [`z64_solve_y`], then bisects the remaining scalar residual near π/64.
/// Returns the angle and the ordinate.
pub fn solve_z64_angle() -> Result<(f64, f64)> {
    let tol = ToleranceConfig::default();
    let f = |t: f64| match z64_solve_y(t) {
        Ok(y) => {
            let (v51, _) = zgon::z64_main_path_ends(t);
            let side = 2.0 * (t / 2.0).sin();
            let dx = v51.x + 0.5;
            let dy = v51.y - y;
            dx * dx + dy * dy - side * side
        }
        Err(_) => f64::NAN,
    };
    let (lo, hi) = expand_bracket(&f, PI / 64.0, seed_half_width(64))?;
    let t = bisect_root(f, lo, hi, &tol)?;
    let y = z64_solve_y(t)?;
    Ok((t, y))
}

/// Square of the side length of the optimal equilateral octagon: the
/// unique root of 2u⁶ − 18u⁵ + 57u⁴ − 78u³ + 46u² − 12u + 1 in
/// (sin²(π/8), 4·sin²(π/16)).
pub fn h8_side_squared() -> f64 {
    let lo = (PI / 8.0).sin().powi(2);
    let hi = 4.0 * (PI / 16.0).sin().powi(2);
    let tol = ToleranceConfig::default();
    bisect_root(h8_polynomial, lo, hi, &tol)
        .expect("the octagon sextic changes sign on its bracketing interval")
}

/// The octagon sextic, evaluated by nested multiplication.
pub fn h8_polynomial(u: f64) -> f64 {
    (((((2.0 * u - 18.0) * u + 57.0) * u - 78.0) * u + 46.0) * u - 12.0) * u + 1.0
}

/// A family's closure equation packaged as data: residual handle, bracket,
/// and (after solving) the root with its residual.
pub struct ClosureProblem {
    pub n: usize,
    residual: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub bracket: (f64, f64),
    pub root: Option<f64>,
    pub residual_at_root: Option<f64>,
}

impl ClosureProblem {
    fn new(n: usize, residual: Box<dyn Fn(f64) -> f64 + Send + Sync>, guess: f64) -> Result<Self> {
        let bracket = expand_bracket(&residual, guess, seed_half_width(n))?;
        Ok(ClosureProblem { n, residual, bracket, root: None, residual_at_root: None })
    }

    pub fn bn(n: usize) -> Result<Self> {
        bn::validate_bn_count(n)?;
        ClosureProblem::new(n, Box::new(move |t| bn::bn_closure_residual(n, t)), t0_initial_guess(n))
    }

    pub fn z32() -> Result<Self> {
        ClosureProblem::new(32, Box::new(zgon::z32_closure_residual), PI / 32.0)
    }

    /// The scalar residual left after eliminating the ordinate. Angles with
    /// no feasible ordinate evaluate to NaN.
    pub fn z64() -> Result<Self> {
        let f = |t: f64| match z64_solve_y(t) {
            Ok(y) => {
                let (v51, _) = zgon::z64_main_path_ends(t);
                let side = 2.0 * (t / 2.0).sin();
                let dx = v51.x + 0.5;
                let dy = v51.y - y;
                dx * dx + dy * dy - side * side
            }
            Err(_) => f64::NAN,
        };
        ClosureProblem::new(64, Box::new(f), PI / 64.0)
    }

    pub fn residual(&self, t: f64) -> f64 {
        (self.residual)(t)
    }

    pub fn solve(&mut self, tol: &ToleranceConfig) -> Result<f64> {
        let root = bisect_root(&self.residual, self.bracket.0, self.bracket.1, tol)?;
        self.root = Some(root);
        self.residual_at_root = Some((self.residual)(root));
        Ok(root)
    }
}
