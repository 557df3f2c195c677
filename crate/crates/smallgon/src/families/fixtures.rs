//! Published vertex coordinates (4 decimal places) for the polygons shown
//! in the reference figures. Fixtures are cross-check oracles at 1e-4 and
//! rendering inputs; no construction reads coordinates from them.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::families::{Family, FamilyInstance};
use crate::geom::{Point2, Polygon};
use crate::Result;

/// Names of the digitized figure polygons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureName {
    /// Optimal (non-equilateral) small 4-gon.
    R3plus,
    /// Optimal (non-equilateral) small 8-gon.
    V8,
    /// Vincze's equilateral 8-gon.
    X8,
    /// Optimal equilateral 8-gon.
    H8,
    /// Mossinghoff's equilateral 16-gon.
    M16,
    /// Mossinghoff's equilateral 32-gon.
    M32,
    /// Power-of-two family member, n = 16.
    B16,
    /// Power-of-two family member, n = 32.
    B32,
    /// Improved 32-gon.
    Z32,
    /// Improved 64-gon.
    Z64,
}

pub const ALL_FIXTURES: [FixtureName; 10] = [
    FixtureName::R3plus,
    FixtureName::V8,
    FixtureName::X8,
    FixtureName::H8,
    FixtureName::M16,
    FixtureName::M32,
    FixtureName::B16,
    FixtureName::B32,
    FixtureName::Z32,
    FixtureName::Z64,
];

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FixtureName::R3plus => "R3plus",
            FixtureName::V8 => "V8",
            FixtureName::X8 => "X8",
            FixtureName::H8 => "H8",
            FixtureName::M16 => "M16",
            FixtureName::M32 => "M32",
            FixtureName::B16 => "B16",
            FixtureName::B32 => "B32",
            FixtureName::Z32 => "Z32",
            FixtureName::Z64 => "Z64",
        };
        f.write_str(s)
    }
}

impl FromStr for FixtureName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r3plus" | "r3+" => Ok(FixtureName::R3plus),
            "v8" => Ok(FixtureName::V8),
            "x8" => Ok(FixtureName::X8),
            "h8" => Ok(FixtureName::H8),
            "m16" => Ok(FixtureName::M16),
            "m32" => Ok(FixtureName::M32),
            "b16" => Ok(FixtureName::B16),
            "b32" => Ok(FixtureName::B32),
            "z32" => Ok(FixtureName::Z32),
            "z64" => Ok(FixtureName::Z64),
        _ => Err(Error::UnknownFixture(s.to_string())),
        }
    }
}

const R3PLUS: &[(f64, f64)] = &[(0.0, 0.0), (0.5, 0.8660), (0.0, 1.0), (-0.5, 0.8660)];

const V8: &[(f64, f64)] = &[
    (0.0, 0.0),
    (0.2983, 0.2128),
    (0.5000, 0.5188),
    (0.4217, 0.9067),
    (0.0, 1.0),
    (-0.4217, 0.9067),
    (-0.5000, 0.5188),
    (-0.2983, 0.2128),
];

const X8: &[(f64, f64)] = &[
    (0.0, 0.0),
    (0.3335, 0.1950),
    (0.4799, 0.5525),
    (0.3790, 0.9254),
    (0.0, 1.0),
    (-0.3737, 0.9021),
    (-0.5201, 0.5446),
    (-0.3225, 0.2127),
];

// Listed clockwise from the apex in the source figure.
const H8: &[(f64, f64)] = &[
    (0.0, 1.0),
    (0.3796, 0.9251),
    (0.5000, 0.5574),
    (0.3228, 0.2134),
    (0.0, 0.0),
    (-0.3228, 0.2134),
    (-0.5000, 0.5574),
    (-0.3796, 0.9251),
];

const M16: &[(f64, f64)] = &[
    (0.0, 0.0),
    (0.1875, 0.0568),
    (0.3390, 0.1811),
    (0.4315, 0.3538),
    (0.4885, 0.5412),
    (0.4922, 0.7311),
    (0.3678, 0.8885),
    (0.1950, 0.9808),
    (0.0, 1.0),
    (-0.1950, 0.9808),
    (-0.3678, 0.8885),
    (-0.4922, 0.7311),
    (-0.4885, 0.5412),
    (-0.4315, 0.3538),
    (-0.3390, 0.1811),
    (-0.1875, 0.0568),
];

const M32: &[(f64, f64)] = &[
    (0.0, 0.0),
    (0.0971, 0.0144),
    (0.1895, 0.0475),
    (0.2736, 0.0979),
    (0.3525, 0.1564),
    (0.4184, 0.2291),
    (0.4603, 0.3178),
    (0.4842, 0.4129),
    (0.4986, 0.5100),
    (0.4966, 0.6081),
    (0.4635, 0.7005),
    (0.4131, 0.7847),
    (0.3546, 0.8635),
    (0.2819, 0.9294),
    (0.1932, 0.9713),
    (0.0980, 0.9952),
    (0.0, 1.0),
    (-0.0980, 0.9952),
    (-0.1932, 0.9713),
    (-0.2819, 0.9294),
    (-0.3546, 0.8635),
    (-0.4131, 0.7847),
    (-0.4635, 0.7005),
    (-0.4966, 0.6081),
    (-0.4986, 0.5100),
    (-0.4842, 0.4129),
    (-0.4603, 0.3178),
    (-0.4184, 0.2291),
    (-0.3525, 0.1564),
    (-0.2736, 0.0979),
    (-0.1895, 0.0475),
    (-0.0971, 0.0144),
];

const B16: &[(f64, f64)] = &[
    (0.0, 0.0),
    (0.1875, 0.0569),
    (0.3604, 0.1492),
    (0.4847, 0.3006),
    (0.4960, 0.4963),
    (0.4390, 0.6838),
    (0.3465, 0.8565),
    (0.1950, 0.9808),
    (0.0, 1.0),
    (-0.1950, 0.9808),
    (-0.3465, 0.8565),
    (-0.4390, 0.6838),
    (-0.4960, 0.4963),
    (-0.4847, 0.3006),
    (-0.3604, 0.1492),
    (-0.1875, 0.0569),
];

const B32: &[(f64, f64)] = &[
    (0.0, 0.0),
    (0.0971, 0.0144),
    (0.1923, 0.0382),
    (0.2810, 0.0802),
    (0.3537, 0.1461),
    (0.4121, 0.2249),
    (0.4626, 0.3091),
    (0.4957, 0.4015),
    (0.4995, 0.4995),
    (0.4851, 0.5966),
    (0.4613, 0.6918),
    (0.4193, 0.7805),
    (0.3534, 0.8532),
    (0.2746, 0.9117),
    (0.1904, 0.9621),
    (0.0980, 0.9952),
    (0.0, 1.0),
    (-0.0980, 0.9952),
    (-0.1904, 0.9621),
    (-0.2746, 0.9117),
    (-0.3534, 0.8532),
    (-0.4193, 0.7805),
    (-0.4613, 0.6918),
    (-0.4851, 0.5966),
    (-0.4995, 0.4995),
    (-0.4957, 0.4015),
    (-0.4626, 0.3091),
    (-0.4121, 0.2249),
    (-0.3537, 0.1461),
    (-0.2810, 0.0802),
    (-0.1923, 0.0382),
    (-0.0971, 0.0144),
];

const Z32: &[(f64, f64)] = &[
    (0.0, 0.0),
    (0.0842, 0.0505),
    (0.1630, 0.1089),
    (0.2357, 0.1748),
    (0.3016, 0.2475),
    (0.3601, 0.3263),
    (0.4105, 0.4105),
    (0.4525, 0.4992),
    (0.4855, 0.5916),
    (0.4999, 0.6887),
    (0.4952, 0.7867),
    (0.4714, 0.8819),
    (0.3827, 0.9239),
    (0.2903, 0.9569),
    (0.1951, 0.9808),
    (0.0980, 0.9952),
    (0.0, 1.0),
    (-0.0980, 0.9952),
    (-0.1951, 0.9808),
    (-0.2903, 0.9569),
    (-0.3827, 0.9239),
    (-0.4714, 0.8819),
    (-0.4952, 0.7867),
    (-0.4999, 0.6887),
    (-0.4855, 0.5916),
    (-0.4525, 0.4992),
    (-0.4105, 0.4105),
    (-0.3601, 0.3263),
    (-0.3016, 0.2475),
    (-0.2357, 0.1748),
    (-0.1630, 0.1089),
    (-0.0842, 0.0505),
];

const Z64: &[(f64, f64)] = &[
    (0.0, 0.0),
    (0.0490, 0.0036),
    (0.0973, 0.0120),
    (0.1452, 0.0228),
    (0.1918, 0.0382),
    (0.2367, 0.0580),
    (0.2805, 0.0801),
    (0.3220, 0.1064),
    (0.3607, 0.1366),
    (0.3962, 0.1704),
    (0.4283, 0.2076),
    (0.4565, 0.2477),
    (0.4786, 0.2915),
    (0.4940, 0.3382),
    (0.5000, 0.3869),
    (0.4988, 0.4359),
    (0.4952, 0.4849),
    (0.4868, 0.5332),
    (0.4760, 0.5811),
    (0.4629, 0.6284),
    (0.4453, 0.6742),
    (0.4254, 0.7191),
    (0.4012, 0.7618),
    (0.3749, 0.8033),
    (0.3447, 0.8420),
    (0.3109, 0.8775),
    (0.2737, 0.9096),
    (0.2336, 0.9378),
    (0.1909, 0.9620),
    (0.1451, 0.9797),
    (0.0978, 0.9928),
    (0.0491, 0.9988),
    (0.0, 1.0),
    (-0.0491, 0.9988),
    (-0.0978, 0.9928),
    (-0.1451, 0.9797),
    (-0.1909, 0.9620),
    (-0.2336, 0.9378),
    (-0.2737, 0.9096),
    (-0.3109, 0.8775),
    (-0.3447, 0.8420),
    (-0.3749, 0.8033),
    (-0.4012, 0.7618),
    (-0.4254, 0.7191),
    (-0.4453, 0.6742),
    (-0.4629, 0.6284),
    (-0.4760, 0.5811),
    (-0.4868, 0.5332),
    (-0.4952, 0.4849),
    (-0.4988, 0.4359),
    (-0.5000, 0.3869),
    (-0.4940, 0.3382),
    (-0.4786, 0.2915),
    (-0.4565, 0.2477),
    (-0.4283, 0.2076),
    (-0.3962, 0.1704),
    (-0.3607, 0.1366),
    (-0.3220, 0.1064),
    (-0.2805, 0.0801),
    (-0.2367, 0.0580),
    (-0.1918, 0.0382),
    (-0.1452, 0.0228),
    (-0.0973, 0.0120),
    (-0.0490, 0.0036),
];

fn coords(name: FixtureName) -> &'static [(f64, f64)] {
    match name {
        FixtureName::R3plus => R3PLUS,
        FixtureName::V8 => V8,
        FixtureName::X8 => X8,
        FixtureName::H8 => H8,
        FixtureName::M16 => M16,
        FixtureName::M32 => M32,
        FixtureName::B16 => B16,
        FixtureName::B32 => B32,
        FixtureName::Z32 => Z32,
        FixtureName::Z64 => Z64,
    }
}

/// The figure's vertices, verbatim.
pub fn fixture(name: FixtureName) -> Polygon {
    let verts = coords(name)
        .iter()
        .map(|&(x, y)| Point2::new(x, y))
        .collect();
    Polygon::new(verts).expect("fixture data is a valid polygon")
}

/// Wraps a fixture as a family instance; the nominal side is the mean
/// side length and no solved angle applies.
pub fn fixture_instance(name: FixtureName) -> FamilyInstance {
    let polygon = fixture(name);
    let sides = polygon.side_lengths();
    let side = sides.iter().sum::<f64>() / sides.len() as f64;
    let perimeter = polygon.perimeter();
    FamilyInstance {
        family: Family::Fixture(name),
        n: polygon.vertex_count(),
        t: None,
        aux: None,
        side,
        polygon,
        perimeter,
    }
}
