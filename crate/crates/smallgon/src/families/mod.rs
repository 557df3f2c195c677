//! Constructors for every polygon family covered by this crate, plus the
//! published reference constants and figure fixtures.

use std::fmt;

use crate::geom::Polygon;

mod bn;
mod fixtures;
mod h8;
mod reference;
mod regular;
mod reinhardt;
pub(crate) mod walk;
mod zgon;

pub use bn::{bn_closure_residual, bn_half_path, bn_junction_closed_form, bn_vertices, construct_bn};
pub use fixtures::{fixture, fixture_instance, FixtureName, ALL_FIXTURES};
pub use h8::construct_h8;
pub use reference::{bingane_lower_bound, mossinghoff_reference, ReferenceRow, REFERENCE_TABLE};
pub use regular::{construct_regular, regular_vertices};
pub use reinhardt::construct_reinhardt;
pub use zgon::{construct_z32, construct_z64, z32_closure_residual, z32_vertices, z64_vertices};

pub(crate) use bn::validate_bn_count;
pub(crate) use zgon::z64_main_path_ends;

/// Which construction produced a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Regular,
    Reinhardt { m: usize },
    Bn,
    Z32,
    Z64,
    H8,
    Fixture(FixtureName),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Regular => write!(f, "regular"),
            Family::Reinhardt { m } => write!(f, "reinhardt:{m}"),
            Family::Bn => write!(f, "bn"),
            Family::Z32 => write!(f, "z32"),
            Family::Z64 => write!(f, "z64"),
            Family::H8 => write!(f, "h8"),
            Family::Fixture(name) => write!(f, "fixture:{name}"),
        }
    }
}

/// A constructed polygon together with its construction parameters.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: Family,
    /// Vertex count.
    pub n: usize,
    /// Solved turning angle, where one applies; the side length of an
    /// equilateral instance is 2·sin(t/2).
    pub t: Option<f64>,
    /// Auxiliary unknown (the side-path ordinate of the improved 64-gon).
    pub aux: Option<f64>,
    /// Nominal common side length (mean side length for fixtures).
    pub side: f64,
    pub polygon: Polygon,
    pub perimeter: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{upper_bound_perimeter, ToleranceConfig};

    #[test]
    fn family_tags_render_as_cli_names() {
        assert_eq!(Family::Bn.to_string(), "bn");
        assert_eq!(Family::Reinhardt { m: 3 }.to_string(), "reinhardt:3");
        assert_eq!(Family::Fixture(FixtureName::B16).to_string(), "fixture:B16");
    }

    #[test]
    fn every_equilateral_instance_obeys_the_side_angle_relation() {
        let instances = vec![
            construct_regular(7).unwrap(),
            construct_regular(12).unwrap(),
            construct_reinhardt(3, 12).unwrap(),
            construct_bn(16).unwrap(),
            construct_z32().unwrap(),
            construct_z64().unwrap(),
            construct_h8().unwrap(),
        ];
        for inst in instances {
            let t = inst.t.expect("equilateral families have an angle");
            assert!(
                (inst.n as f64 * 2.0 * (t / 2.0).sin() - inst.perimeter).abs() < 1e-12,
                "{}",
                inst.family
            );
            assert!(inst.perimeter <= upper_bound_perimeter(inst.n).unwrap() + 1e-12);
        }
    }

    #[test]
    fn constructed_instances_pass_their_own_certificates() {
        let tol = ToleranceConfig::default();
        for inst in [
            construct_regular(5).unwrap(),
            construct_reinhardt(3, 6).unwrap(),
            construct_bn(16).unwrap(),
            construct_h8().unwrap(),
        ] {
            let report = inst.polygon.certify(Some(inst.side), &tol);
            assert!(report.all_pass(), "{}: {report:?}", inst.family);
        }
    }

    #[test]
    fn fixture_instances_carry_no_angle() {
        let inst = fixture_instance(FixtureName::V8);
        assert!(inst.t.is_none());
        assert_eq!(inst.n, 8);
    }
}
