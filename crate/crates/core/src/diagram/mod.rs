//! Knot diagrams from generic orthographic projections of polygons.

mod link;
mod pd;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::{plane_basis, Direction, Polygon, Vec3};

pub use link::{LinkDiagram, Xing};
pub use pd::{PdCode, PdCrossing};

/// Distances below this in the projection plane or along the viewing axis
/// count as degenerate.
pub const GENERICITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DiagramError {
    #[error("non-generic projection: {0}")]
    NonGeneric(Degeneracy),
    #[error("no generic direction found near the requested axis after {0} attempts")]
    NoGenericDirection(usize),
    #[error("malformed PD code: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Degeneracy {
    VertexOnEdge { vertex: usize, edge: usize },
    EdgesOverlap { first: usize, second: usize },
    DepthTie { first: usize, second: usize },
    TriplePoint { first: usize, second: usize },
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::VertexOnEdge { vertex, edge } => {
                write!(f, "vertex {vertex} projects onto edge {edge}")
            }
            Degeneracy::EdgesOverlap { first, second } => {
                write!(f, "edges {first} and {second} overlap in projection")
            }
            Degeneracy::DepthTie { first, second } => {
                write!(f, "edges {first} and {second} meet at equal depth")
            }
            Degeneracy::TriplePoint { first, second } => {
                write!(f, "crossings {first} and {second} coincide")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Crossing {
    pub over_edge: usize,
    pub under_edge: usize,
    pub over_param: f64,
    pub under_param: f64,
    pub position: [f64; 2],
    pub sign: i32,
}

fn cross2(u: [f64; 2], v: [f64; 2]) -> f64 {
    u[0] * v[1] - u[1] * v[0]
}

fn sub2(u: [f64; 2], v: [f64; 2]) -> [f64; 2] {
    [u[0] - v[0], u[1] - v[1]]
}

fn point_segment_distance_2d(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    let d = sub2(b, a);
    let len2 = d[0] * d[0] + d[1] * d[1];
    let w = sub2(p, a);
    let t = if len2 > 0.0 {
        ((w[0] * d[0] + w[1] * d[1]) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = [a[0] + t * d[0] - p[0], a[1] + t * d[1] - p[1]];
    q[0].hypot(q[1])
}

/// Transverse double points of the projection along `axis`, checked for
/// genericity.
pub fn find_crossings(p: &Polygon, axis: Direction) -> Result<Vec<Crossing>, DiagramError> {
    let n = p.len();
    let (e1, e2) = plane_basis(axis);
    let w = axis.unit();
    let pts: Vec<[f64; 2]> = p.vertices().iter().map(|&v| [v.dot(e1), v.dot(e2)]).collect();
    let depth: Vec<f64> = p.vertices().iter().map(|&v| v.dot(w)).collect();
    let tol = GENERICITY_TOLERANCE;

    for v in 0..n {
        for e in 0..n {
            if e == v || (e + 1) % n == v {
                continue;
            }
            if point_segment_distance_2d(pts[v], pts[e], pts[(e + 1) % n]) < tol {
                return Err(DiagramError::NonGeneric(Degeneracy::VertexOnEdge { vertex: v, edge: e }));
            }
        }
    }

    let mut crossings = Vec::new();
    for (i, j) in crate::geometry::nonadjacent_edge_pairs(n) {
        let (p0, p1) = (pts[i], pts[(i + 1) % n]);
        let (q0, q1) = (pts[j], pts[(j + 1) % n]);
        let r = sub2(p1, p0);
        let s = sub2(q1, q0);
        let denom = cross2(r, s);
        let qp = sub2(q0, p0);
        let scale = r[0].hypot(r[1]) * s[0].hypot(s[1]);
        if denom.abs() <= 1e-15 * scale {
            // parallel: endpoint checks above already rule out touching
            continue;
        }
        let t = cross2(qp, s) / denom;
        let u = cross2(qp, r) / denom;
        if !(0.0..=1.0).contains(&t) || !(0.0..=1.0).contains(&u) {
            continue;
        }
        let di = depth[i] + t * (depth[(i + 1) % n] - depth[i]);
        let dj = depth[j] + u * (depth[(j + 1) % n] - depth[j]);
        if (di - dj).abs() < tol {
            return Err(DiagramError::NonGeneric(Degeneracy::DepthTie { first: i, second: j }));
        }
        let position = [p0[0] + t * r[0], p0[1] + t * r[1]];
        let (over_edge, under_edge, over_param, under_param, d_over, d_under) = if di > dj {
            (i, j, t, u, r, s)
        } else {
            (j, i, u, t, s, r)
        };
        let sign = if cross2(d_over, d_under) > 0.0 { 1 } else { -1 };
        crossings.push(Crossing { over_edge, under_edge, over_param, under_param, position, sign });
    }

    for a in 0..crossings.len() {
        for b in a + 1..crossings.len() {
            let (pa, pb) = (crossings[a].position, crossings[b].position);
            if (pa[0] - pb[0]).hypot(pa[1] - pb[1]) < tol {
                return Err(DiagramError::NonGeneric(Degeneracy::TriplePoint { first: a, second: b }));
            }
        }
    }
    Ok(crossings)
}

/// PD code of the diagram with arcs labelled along the polygon's
/// orientation; arc 1 is the one containing vertex 0.
pub fn pd_from_crossings(crossings: &[Crossing]) -> PdCode {
    let c = crossings.len();
    if c == 0 {
        return PdCode::empty();
    }
    // passages (edge, param, crossing, is_over) in traversal order
    let mut passages: Vec<(usize, f64, usize, bool)> = crossings
        .iter()
        .enumerate()
        .flat_map(|(k, x)| [(x.over_edge, x.over_param, k, true), (x.under_edge, x.under_param, k, false)])
        .collect();
    passages.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
    let m = 2 * c as u32;
    let mut over_pos = vec![0u32; c];
    let mut under_pos = vec![0u32; c];
    for (pos, &(_, _, k, is_over)) in passages.iter().enumerate() {
        if is_over {
            over_pos[k] = pos as u32;
        } else {
            under_pos[k] = pos as u32;
        }
    }
    // arc ending at passage p is labelled p + 1
    let incoming = |p: u32| p + 1;
    let outgoing = |p: u32| (p + 1) % m + 1;
    let crossings = crossings
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let (ui, uo) = (incoming(under_pos[k]), outgoing(under_pos[k]));
            let (oi, oo) = (incoming(over_pos[k]), outgoing(over_pos[k]));
            let positive = x.sign > 0;
            let arcs = if positive { [ui, oo, uo, oi] } else { [ui, oi, uo, oo] };
            PdCrossing { arcs, positive }
        })
        .collect();
    PdCode::new(crossings).expect("projection yields a valid single-component code")
}

pub fn project_to_diagram(p: &Polygon, axis: Direction) -> Result<(Vec<Crossing>, PdCode), DiagramError> {
    let crossings = find_crossings(p, axis)?;
    let pd = pd_from_crossings(&crossings);
    Ok((crossings, pd))
}

pub const MAX_PERTURBATION_ATTEMPTS: usize = 1000;
pub const MAX_PERTURBATION_ANGLE: f64 = 0.01;

/// `axis` itself when generic, otherwise a seeded random direction within
/// 0.01 rad of it that is.
pub fn perturb_axis_until_generic(p: &Polygon, axis: Direction, seed: u64) -> Result<Direction, DiagramError> {
    if find_crossings(p, axis).is_ok() {
        return Ok(axis);
    }
    let w = axis.unit();
    let (e1, e2) = plane_basis(axis);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_PERTURBATION_ATTEMPTS {
        let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let theta: f64 = rng.gen_range(0.0..MAX_PERTURBATION_ANGLE);
        let t = e1 * phi.cos() + e2 * phi.sin();
        let v = w * theta.cos() + t * theta.sin();
        let d = Direction::new(v).expect("unit vector");
        if find_crossings(p, d).is_ok() {
            return Ok(d);
        }
    }
    Err(DiagramError::NoGenericDirection(MAX_PERTURBATION_ATTEMPTS))
}

/// Reidemeister I and II reductions to a fixed point.
pub fn simplify_diagram(pd: &PdCode) -> PdCode {
    let simplified = pd.to_link().simplified();
    PdCode::from_link(&simplified).expect("R1/R2 moves preserve a single component")
}

/// A spread of deterministic directions (coordinate axes first, then a
/// Fibonacci lattice on the upper hemisphere).
pub fn candidate_axes(count: usize) -> Vec<Direction> {
    let mut out = vec![Direction::plus_z(), Direction::new(Vec3::X).unwrap(), Direction::new(Vec3::Y).unwrap()];
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    let m = count.saturating_sub(3);
    for k in 0..m {
        let z = 1.0 - (k as f64 + 0.5) / m as f64;
        let r = (1.0 - z * z).sqrt();
        let phi = golden * k as f64;
        out.push(Direction::new(Vec3::new(r * phi.cos(), r * phi.sin(), z)).unwrap());
    }
    out.truncate(count.max(1));
    out
}

/// The smallest simplified diagram over the candidate axes, each perturbed to
/// genericity. Returns the chosen axis with it.
pub fn smallest_diagram(p: &Polygon, axes: &[Direction], seed: u64) -> Result<(Direction, PdCode), DiagramError> {
    let mut best: Option<(Direction, PdCode)> = None;
    let mut last_err = None;
    for &axis in axes {
        let d = match perturb_axis_until_generic(p, axis, seed) {
            Ok(d) => d,
            Err(e) => {
                last_err = Some(e);
                continue;
            }
        };
        let (_, pd) = project_to_diagram(p, d)?;
        let pd = simplify_diagram(&pd);
        if best.as_ref().is_none_or(|(_, b)| pd.len() < b.len()) {
            best = Some((d, pd));
        }
    }
    best.ok_or_else(|| last_err.unwrap_or(DiagramError::NoGenericDirection(0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polygon {
        Polygon::parse("0 0 0\n1 0 0\n1 1 0\n0 1 0").unwrap()
    }

    #[test]
    fn square_has_no_crossings() {
        let (xs, pd) = project_to_diagram(&square(), Direction::plus_z()).unwrap();
        assert!(xs.is_empty());
        assert!(pd.is_empty());
    }

    #[test]
    fn edge_parallel_to_axis_is_degenerate() {
        let p = Polygon::parse("0 0 0\n0 0 1\n1 0 1\n1 1 0").unwrap();
        assert!(matches!(
            find_crossings(&p, Direction::plus_z()),
            Err(DiagramError::NonGeneric(Degeneracy::VertexOnEdge { .. }))
        ));
        let d = perturb_axis_until_generic(&p, Direction::plus_z(), 3).unwrap();
        assert_ne!(d, Direction::plus_z());
        assert!(d.unit().dot(Vec3::Z).acos() <= MAX_PERTURBATION_ANGLE);
        assert!(find_crossings(&p, d).is_ok());
    }

    #[test]
    fn generic_axis_returned_unchanged() {
        let axis = Direction::new(Vec3::new(0.1, 0.2, 1.0)).unwrap();
        assert_eq!(perturb_axis_until_generic(&square(), axis, 0).unwrap(), axis);
    }

    #[test]
    fn perturbation_is_deterministic() {
        let p = Polygon::parse("0 0 0\n0 0 1\n1 0 1\n1 1 0").unwrap();
        let a = perturb_axis_until_generic(&p, Direction::plus_z(), 11).unwrap();
        let b = perturb_axis_until_generic(&p, Direction::plus_z(), 11).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn depth_tie_detected() {
        // two edges crossing at the same height
        let p = Polygon::parse("0 0 0\n2 2 0\n2 0 0\n0 2 0").unwrap();
        assert!(matches!(
            find_crossings(&p, Direction::plus_z()),
            Err(DiagramError::NonGeneric(Degeneracy::DepthTie { .. }))
        ));
    }

    #[test]
    fn simplify_kink_and_empty() {
        assert_eq!(simplify_diagram(&PdCode::empty()), PdCode::empty());
        let kink: PdCode = "[[1,1,2,2]]".parse().unwrap();
        assert_eq!(simplify_diagram(&kink), PdCode::empty());
    }

    #[test]
    fn simplify_keeps_trefoil() {
        let t: PdCode = "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]".parse().unwrap();
        assert_eq!(simplify_diagram(&t).len(), 3);
    }

    #[test]
    fn simplify_removes_bigon() {
        // unknot drawn with an R2 bigon: a curl of one strand over another
        let p = Polygon::parse(
            "0 0 0\n4 0 0\n4 1 1\n2 -1 1\n1 -1 1\n1 1 1\n0 1 0",
        )
        .unwrap();
        let (xs, pd) = project_to_diagram(&p, Direction::plus_z()).unwrap();
        assert_eq!(xs.len(), 2);
        assert_eq!(simplify_diagram(&pd), PdCode::empty());
    }
}
