//! Superbridge numbers of polygons and Gordan certificates.
//!
//! The number of local maxima of `v . x` along a polygon depends only on the
//! sign vector `sign(v . e_i)`, so it is constant on the open cells of the
//! arrangement of great circles `{v : v . e_i = 0}`. Every cell touches a
//! vertex of the arrangement, and each vertex is visited once per adjacent
//! quadrant with signs decided exactly.

mod gordan;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::geometry::{Direction, GeometryError, Polygon, Vec3};

pub use gordan::{
    find_gordan_certificate, verify_gordan_certificate, AlternationMatrix, GordanCertificate, GordanOutcome,
    IntegerPolygon,
};

/// `|v . e_i|` below this times `|e_i|` (with `v` a unit vector) makes a
/// direction non-generic.
pub const GENERIC_DIRECTION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SuperbridgeError {
    #[error("direction is orthogonal to edge {edge}")]
    NonGenericDirection { edge: usize },
    #[error("all edges are parallel")]
    AllEdgesParallel,
    #[error("full alternation needs an even number of edges, got {0}")]
    OddEdgeCount(usize),
    #[error("line {line}: {token:?} is not an integer")]
    NonInteger { line: usize, token: String },
    #[error("line {line}: expected 3 coordinates, found {found}")]
    Parse { line: usize, found: usize },
    #[error("certificate has {found} entries, polygon has {expected} edges")]
    WrongLength { expected: usize, found: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn maxima_of_signs(signs: &[i8]) -> usize {
    let n = signs.len();
    (0..n).filter(|&k| signs[k] > 0 && signs[(k + 1) % n] < 0).count()
}

/// Local maxima of the height function `v . x` along the closed polygon.
pub fn local_maxima_count(p: &Polygon, v: Direction) -> Result<usize, SuperbridgeError> {
    let u = v.unit();
    let mut signs = Vec::with_capacity(p.len());
    for (i, e) in p.edges().enumerate() {
        let d = u.dot(e);
        if d.abs() <= GENERIC_DIRECTION_TOLERANCE * e.norm() {
            return Err(SuperbridgeError::NonGenericDirection { edge: i });
        }
        signs.push(if d > 0.0 { 1 } else { -1 });
    }
    Ok(maxima_of_signs(&signs))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SbResult {
    pub value: usize,
    pub witness_direction: Direction,
    /// Distinct arrangement cells whose sign vectors were inspected.
    pub cell_count: usize,
}

type Q3 = [BigRational; 3];

fn exact(v: Vec3) -> Q3 {
    v.to_array().map(|x| BigRational::from_float(x).expect("finite coordinate"))
}

fn qdot(a: &Q3, b: &Q3) -> BigRational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn qcross(a: &Q3, b: &Q3) -> Q3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn qscale(s: i32, a: &Q3) -> Q3 {
    let s = BigRational::from_integer(BigInt::from(s));
    a.clone().map(|x| x * &s)
}

fn qadd(a: &Q3, b: &Q3) -> Q3 {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

fn qsign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn to_f64(a: &Q3) -> Vec3 {
    use num_traits::ToPrimitive;
    let f = |x: &BigRational| x.to_f64().unwrap_or(0.0);
    Vec3::new(f(&a[0]), f(&a[1]), f(&a[2]))
}

/// Exact superbridge number: the maximum of [`local_maxima_count`] over all
/// generic directions.
pub fn superbridge_number(p: &Polygon) -> Result<SbResult, SuperbridgeError> {
    let edges: Vec<Q3> = p.edges().map(exact).collect();
    let n = edges.len();
    let mut seen: HashSet<Vec<i8>> = HashSet::new();
    let mut best: Option<(usize, Q3, Q3)> = None;

    for i in 0..n {
        for j in i + 1..n {
            let w0 = qcross(&edges[i], &edges[j]);
            if w0.iter().all(Zero::is_zero) {
                continue;
            }
            for w in [w0.clone(), qscale(-1, &w0)] {
                let along_j = qcross(&edges[j], &w);
                let along_i = qcross(&w, &edges[i]);
                'quadrant: for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let d = qadd(&qscale(s1, &along_j), &qscale(s2, &along_i));
                    let mut signs = Vec::with_capacity(n);
                    for e in &edges {
                        let mut s = qsign(&qdot(&w, e));
                        if s == 0 {
                            s = qsign(&qdot(&d, e));
                        }
                        if s == 0 {
                            continue 'quadrant;
                        }
                        signs.push(s);
                    }
                    let count = maxima_of_signs(&signs);
                    if seen.insert(signs) && best.as_ref().is_none_or(|b| count > b.0) {
                        best = Some((count, w.clone(), d));
                    }
                }
            }
        }
    }

    let (value, w, d) = best.ok_or(SuperbridgeError::AllEdgesParallel)?;
    let witness_direction = witness(p, value, &w, &d);
    Ok(SbResult { value, witness_direction, cell_count: seen.len() })
}

/// A floating-point direction `w + eps d` in the cell, shrinking `eps` until
/// it reproduces `value` robustly.
fn witness(p: &Polygon, value: usize, w: &Q3, d: &Q3) -> Direction {
    let (wf, df) = (to_f64(w), to_f64(d));
    let scale = wf.norm() / df.norm();
    let mut eps = 0.25;
    for _ in 0..200 {
        let v = wf + df * (eps * scale);
        if let Ok(dir) = Direction::new(v) {
            if local_maxima_count(p, dir).ok() == Some(value) {
                return dir;
            }
        }
        eps /= 2.0;
    }
    Direction::new(wf + df * (1e-6 * scale)).expect("nonzero vertex direction")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        "0 0 0\n1 0 0\n1 1 0\n0 1 0".parse().unwrap()
    }

    #[test]
    fn square_has_one_maximum() {
        let v = Direction::new(Vec3::new(1.0, 2.0, 0.0)).unwrap();
        assert_eq!(local_maxima_count(&square(), v).unwrap(), 1);
        assert_eq!(superbridge_number(&square()).unwrap().value, 1);
    }

    #[test]
    fn orthogonal_direction_rejected() {
        let v = Direction::new(Vec3::X).unwrap();
        assert_eq!(
            local_maxima_count(&square(), v),
            Err(SuperbridgeError::NonGenericDirection { edge: 1 })
        );
    }

    #[test]
    fn collinear_edges_rejected() {
        let p: Polygon = "0 0 0\n1 0 0\n2 0 0\n1 0 0".parse().unwrap();
        assert_eq!(superbridge_number(&p), Err(SuperbridgeError::AllEdgesParallel));
    }

    #[test]
    fn witness_attains_value() {
        let p: Polygon = "0 0 0\n2 0 0\n2 2 1\n1 -1 1\n0 2 -1\n-1 1 2".parse().unwrap();
        let r = superbridge_number(&p).unwrap();
        assert_eq!(local_maxima_count(&p, r.witness_direction).unwrap(), r.value);
        assert!(r.value <= 3);
    }

    #[test]
    fn regular_hexagon_in_plane() {
        let verts: Vec<Vec3> = (0..6)
            .map(|k| {
                let t = std::f64::consts::PI * k as f64 / 3.0;
                Vec3::new(t.cos(), t.sin(), 0.0)
            })
            .collect();
        let p = Polygon::new(verts).unwrap();
        assert_eq!(superbridge_number(&p).unwrap().value, 1);
    }
}
