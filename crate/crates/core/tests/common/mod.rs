#![allow(dead_code)]

use reesalg::io::{parse_ideal, ParseOptions};
use reesalg::Ideal;

/// Homogeneous ideals in at most four variables, degrees at most three.
pub const CORPUS: &[(&str, &str)] = &[
    ("plane", "vars: 2"),
    ("space", "vars: 3"),
    ("double-point", "vars: 2\nx1^2"),
    ("embedded", "vars: 2\nx1^2\nx1*x2"),
    ("fat-point", "vars: 2\nx1^2\nx2^2"),
    ("square-of-max", "vars: 2\nx1^2\nx1*x2\nx2^2"),
    ("coordinate-cross", "vars: 2\nx1*x2"),
    ("conic", "x1*x2 - x3^2"),
    ("nonreduced-pair", "x1^2 - x2*x3\nx1*x2 - x3^2"),
    ("three-points", "x1*x2\nx1*x3\nx2*x3"),
    ("fermat-cubic", "x1^3 + x2^3 + x3^3"),
    ("monomial-cubic", "x1*x2*x3"),
    ("plane-and-line", "x1*x2\nx1*x3"),
    ("cuspidal", "x1^2*x2 - x3^3"),
    ("twisted-cubic", "x1*x3 - x2^2\nx1*x4 - x2*x3\nx2*x4 - x3^2"),
    ("skew-lines", "x1*x3\nx1*x4\nx2*x3\nx2*x4"),
    ("quadric-surface", "x1*x4 - x2*x3"),
    ("complete-intersection", "x1*x2\nx3*x4"),
];

pub fn ideal(text: &str) -> Ideal {
    parse_ideal(text, ParseOptions::default()).unwrap().ideal().unwrap()
}

pub fn corpus() -> Vec<(&'static str, Ideal)> {
    CORPUS.iter().map(|(name, t)| (*name, ideal(t))).collect()
}
