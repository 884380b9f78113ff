//! Millett–Rawdon certification of approximately equilateral polygons.
//!
//! If every edge length satisfies `|L_i - 1| < min(mu / n, mu^2 / 4)`, where
//! `mu` is the minimum distance between non-adjacent edges, then a true
//! equilateral polygon of the same knot type exists nearby.

use std::fmt;

use crate::geometry::{edge_lengths, min_nonadjacent_edge_distance, GeometryError, Polygon};

#[derive(Debug, Clone, PartialEq)]
pub struct EquilateralReport {
    pub n: usize,
    pub mu: f64,
    pub max_deviation: f64,
    pub threshold: f64,
    /// `log10(max_deviation / threshold)`; `-inf` for an exactly equilateral
    /// polygon.
    pub margin_exponent: f64,
    pub certified: bool,
}

impl EquilateralReport {
    pub fn key_values(&self) -> Vec<(&'static str, String)> {
        vec![
            ("n", self.n.to_string()),
            ("mu", format!("{:e}", self.mu)),
            ("max_deviation", format!("{:e}", self.max_deviation)),
            ("threshold", format!("{:e}", self.threshold)),
            ("margin_exponent", format!("{:.4}", self.margin_exponent)),
            ("certified", self.certified.to_string()),
        ]
    }
}

impl fmt::Display for EquilateralReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.key_values() {
            writeln!(f, "{k:<16} {v}")?;
        }
        Ok(())
    }
}

/// Certifies against the target edge length 1.
pub fn certify_equilateral(p: &Polygon) -> Result<EquilateralReport, GeometryError> {
    let n = p.len();
    let mu = min_nonadjacent_edge_distance(p)?;
    let max_deviation = edge_lengths(p).max_deviation_from(1.0);
    let threshold = (mu / n as f64).min(mu * mu / 4.0);
    let margin_exponent = (max_deviation / threshold).log10();
    Ok(EquilateralReport {
        n,
        mu,
        max_deviation,
        threshold,
        margin_exponent,
        certified: max_deviation < threshold,
    })
}
