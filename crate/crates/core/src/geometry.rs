//! Closed polygons in R^3 and the elementary geometry the rest of the crate
//! builds on: edge lengths, segment distances, the normalized frame used by the
//! published coordinate tables, and orthographic projection.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("line {line}: expected 3 numbers, found {found}")]
    Parse { line: usize, found: usize },
    #[error("line {line}: invalid number {token:?}")]
    BadNumber { line: usize, token: String },
    #[error("too few vertices: {0} (need at least 3)")]
    TooFewVertices(usize),
    #[error("vertices {0} and {1} coincide")]
    CoincidentVertices(usize, usize),
    #[error("non-finite coordinate at vertex {0}")]
    NonFinite(usize),
    #[error("no non-adjacent edges in a polygon with {0} edges")]
    NoNonAdjacentEdges(usize),
    #[error("degenerate frame: first three vertices are collinear")]
    DegenerateFrame,
    #[error("zero direction vector")]
    ZeroDirection,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn normalized(self) -> Vec3 {
        self / self.norm()
    }

    pub fn distance(self, o: Vec3) -> f64 {
        (self - o).norm()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn component(self, k: usize) -> f64 {
        match k {
            0 => self.x,
            1 => self.y,
            _ => self.z,
        }
    }

    /// Rotation of `self` about the unit vector `axis` by `angle` (Rodrigues).
    pub fn rotated_about(self, axis: Vec3, angle: f64) -> Vec3 {
        let (s, c) = angle.sin_cos();
        self * c + axis.cross(self) * s + axis * (axis.dot(self) * (1.0 - c))
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    fn div(self, s: f64) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

/// A nonzero direction in space. Only the ray matters for counting maxima;
/// the sign matters for alternation tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction(Vec3);

impl Direction {
    pub fn new(v: Vec3) -> Result<Self, GeometryError> {
        if !(v.norm_squared().is_finite() && v.norm_squared() > 0.0) {
            return Err(GeometryError::ZeroDirection);
        }
        Ok(Direction(v))
    }

    pub fn vector(&self) -> Vec3 {
        self.0
    }

    pub fn unit(&self) -> Vec3 {
        self.0.normalized()
    }

    pub fn plus_z() -> Self {
        Direction(Vec3::Z)
    }
}

impl FromStr for Direction {
    type Err = GeometryError;

    /// Parses `x,y,z`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(GeometryError::Parse { line: 1, found: parts.len() });
        }
        let mut c = [0.0; 3];
        for (k, p) in parts.iter().enumerate() {
            c[k] = p.parse().map_err(|_| GeometryError::BadNumber {
                line: 1,
                token: p.to_string(),
            })?;
        }
        Direction::new(c.into())
    }
}

/// A closed polygon; edge `i` runs from vertex `i` to vertex `(i + 1) mod n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Vec3>,
}

impl Polygon {
    pub fn new(vertices: Vec<Vec3>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeometryError::TooFewVertices(n));
        }
        for (i, v) in vertices.iter().enumerate() {
            if !(v.x.is_finite() && v.y.is_finite() && v.z.is_finite()) {
                return Err(GeometryError::NonFinite(i));
            }
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if vertices[i] == vertices[j] {
                return Err(GeometryError::CoincidentVertices(i, j));
            }
        }
        Ok(Polygon { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Vec3 {
        self.vertices[i % self.len()]
    }

    pub fn edge(&self, i: usize) -> Vec3 {
        let n = self.len();
        self.vertices[(i + 1) % n] - self.vertices[i % n]
    }

    pub fn edges(&self) -> impl Iterator<Item = Vec3> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    pub fn centroid(&self) -> Vec3 {
        let sum = self.vertices.iter().fold(Vec3::ZERO, |acc, &v| acc + v);
        sum / self.len() as f64
    }

    /// Applies `f` to every vertex; fails if the result is degenerate.
    pub fn map_vertices(&self, f: impl Fn(Vec3) -> Vec3) -> Result<Polygon, GeometryError> {
        Polygon::new(self.vertices.iter().map(|&v| f(v)).collect())
    }

    pub fn scaled(&self, s: f64) -> Result<Polygon, GeometryError> {
        self.map_vertices(|v| v * s)
    }

    /// Same polygon with vertex `k` relabelled as vertex 0.
    pub fn rotated_start(&self, k: usize) -> Polygon {
        let n = self.len();
        Polygon {
            vertices: (0..n).map(|i| self.vertices[(i + k) % n]).collect(),
        }
    }

    /// Reads the coordinate-file format: one vertex per line, three numbers
    /// separated by whitespace. `#` starts a comment. `&` separators and
    /// trailing `\\` from LaTeX tables are accepted.
    pub fn parse(text: &str) -> Result<Self, GeometryError> {
        let mut vertices = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let line = line.trim().trim_end_matches('\\').replace('&', " ");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 3 {
                return Err(GeometryError::Parse { line: lineno + 1, found: tokens.len() });
            }
            let mut c = [0.0; 3];
            for (k, tok) in tokens.iter().enumerate() {
                c[k] = tok.parse().map_err(|_| GeometryError::BadNumber {
                    line: lineno + 1,
                    token: tok.to_string(),
                })?;
            }
            vertices.push(Vec3::from(c));
        }
        Polygon::new(vertices)
    }

    /// Coordinate-file text; round-trips through [`Polygon::parse`] exactly.
    pub fn to_coordinate_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            s.push_str(&format!("{:?} {:?} {:?}\n", v.x, v.y, v.z));
        }
        s
    }
}

impl FromStr for Polygon {
    type Err = GeometryError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Polygon::parse(s)
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_coordinate_text())
    }
}

pub fn load_polygon(text: &str) -> Result<Polygon, GeometryError> {
    Polygon::parse(text)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeLengths(pub Vec<f64>);

impl EdgeLengths {
    pub fn max_deviation_from(&self, target: f64) -> f64 {
        self.0.iter().map(|l| (l - target).abs()).fold(0.0, f64::max)
    }
}

pub fn edge_lengths(p: &Polygon) -> EdgeLengths {
    EdgeLengths(p.edges().map(Vec3::norm).collect())
}

/// Euclidean distance between segments `[p0, p1]` and `[q0, q1]`.
///
/// Clamped closest-point parametrization; the parallel (and degenerate
/// point) cases fall back to endpoint-to-segment distances. The result is
/// bitwise symmetric in the two segments.
pub fn segment_distance(p0: Vec3, p1: Vec3, q0: Vec3, q1: Vec3) -> f64 {
    let key = |a: Vec3, b: Vec3| [a.x, a.y, a.z, b.x, b.y, b.z];
    if key(q0, q1).iter().zip(key(p0, p1)).map(|(x, y)| x.total_cmp(&y)).find(|o| o.is_ne())
        == Some(std::cmp::Ordering::Less)
    {
        return segment_distance_ordered(q0, q1, p0, p1);
    }
    segment_distance_ordered(p0, p1, q0, q1)
}

fn segment_distance_ordered(p0: Vec3, p1: Vec3, q0: Vec3, q1: Vec3) -> f64 {
    let d1 = p1 - p0;
    let d2 = q1 - q0;
    let r = p0 - q0;
    let a = d1.dot(d1);
    let e = d2.dot(d2);
    let f = d2.dot(r);

    if a == 0.0 && e == 0.0 {
        return r.norm();
    }
    if a == 0.0 {
        let t = (f / e).clamp(0.0, 1.0);
        return (p0 - (q0 + d2 * t)).norm();
    }
    let c = d1.dot(r);
    if e == 0.0 {
        let s = (-c / a).clamp(0.0, 1.0);
        return ((p0 + d1 * s) - q0).norm();
    }

    let b = d1.dot(d2);
    let denom = a * e - b * b;
    if denom <= 1e-14 * a * e {
        // parallel: the minimum is attained at one of the four endpoints
        return point_segment_distance(p0, q0, q1)
            .min(point_segment_distance(p1, q0, q1))
            .min(point_segment_distance(q0, p0, p1))
            .min(point_segment_distance(q1, p0, p1));
    }
    let mut s = ((b * f - c * e) / denom).clamp(0.0, 1.0);
    let mut t = (b * s + f) / e;
    if t < 0.0 {
        t = 0.0;
        s = (-c / a).clamp(0.0, 1.0);
    } else if t > 1.0 {
        t = 1.0;
        s = ((b - c) / a).clamp(0.0, 1.0);
    }
    ((p0 + d1 * s) - (q0 + d2 * t)).norm()
}

pub fn point_segment_distance(p: Vec3, a: Vec3, b: Vec3) -> f64 {
    let d = b - a;
    let len2 = d.norm_squared();
    if len2 == 0.0 {
        return p.distance(a);
    }
    let t = ((p - a).dot(d) / len2).clamp(0.0, 1.0);
    p.distance(a + d * t)
}

/// Index pairs `(i, j)`, `i < j`, of edges that share no vertex.
pub fn nonadjacent_edge_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| {
        (i + 2..n)
            .filter(move |&j| !(i == 0 && j == n - 1))
            .map(move |j| (i, j))
    })
}

/// μ: the minimum distance between non-adjacent edges. Zero means the
/// polygon self-intersects.
pub fn min_nonadjacent_edge_distance(p: &Polygon) -> Result<f64, GeometryError> {
    let n = p.len();
    if n <= 3 {
        return Err(GeometryError::NoNonAdjacentEdges(n));
    }
    let v = p.vertices();
    Ok(nonadjacent_edge_pairs(n)
        .map(|(i, j)| segment_distance(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        .fold(f64::INFINITY, f64::min))
}

/// Rigid motion putting vertex 0 at the origin, vertex 1 on the positive
/// x-axis and vertex 2 in the xy-plane with y > 0. Never reflects.
pub fn normalize(p: &Polygon) -> Result<Polygon, GeometryError> {
    let v = p.vertices();
    let origin = v[0];
    let ex = v[1] - origin;
    let w = v[2] - origin;
    let normal = ex.cross(w);
    if normal.norm() <= 1e-12 * ex.norm() * w.norm() {
        return Err(GeometryError::DegenerateFrame);
    }
    let ex = ex.normalized();
    let ez = normal.normalized();
    let ey = ez.cross(ex);
    let mut out: Vec<Vec3> = v
        .iter()
        .map(|&q| {
            let d = q - origin;
            Vec3::new(d.dot(ex), d.dot(ey), d.dot(ez))
        })
        .collect();
    // the frame fixes these exactly; clear rounding residue
    out[0] = Vec3::ZERO;
    out[1].y = 0.0;
    out[1].z = 0.0;
    out[2].z = 0.0;
    Polygon::new(out)
}

/// Right-handed orthonormal basis `(e1, e2)` of the plane orthogonal to
/// `axis`, with `e1 x e2 = axis`. For `+z` this is `(x, y)`.
pub fn plane_basis(axis: Direction) -> (Vec3, Vec3) {
    let w = axis.unit();
    let k = (0..3)
        .max_by(|&a, &b| w.component(a).abs().total_cmp(&w.component(b).abs()))
        .unwrap_or(2);
    let helper = match (k + 2) % 3 {
        0 => Vec3::X,
        1 => Vec3::Y,
        _ => Vec3::Z,
    };
    let e2 = (helper - w * helper.dot(w)).normalized();
    let e1 = e2.cross(w);
    (e1, e2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Projection {
    pub points: Vec<[f64; 2]>,
    /// Height along the viewing axis; larger is closer to the viewer.
    pub depths: Vec<f64>,
}

pub fn project_orthographic(p: &Polygon, axis: Direction) -> Projection {
    let (e1, e2) = plane_basis(axis);
    let w = axis.unit();
    let points = p.vertices().iter().map(|&v| [v.dot(e1), v.dot(e2)]).collect();
    let depths = p.vertices().iter().map(|&v| v.dot(w)).collect();
    Projection { points, depths }
}
