//! Gordan's alternative for the alternation matrix of an integer polygon:
//! either some `v` has `v . a_i > 0` for every column `a_i = (-1)^i e_i`, or
//! some `u >= 0`, `u != 0` has `A u = 0`. Both sides are decided exactly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::geometry::{Polygon, Vec3};

use super::SuperbridgeError;

/// A polygon with exact integer vertex coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPolygon {
    vertices: Vec<[BigInt; 3]>,
}

impl IntegerPolygon {
    /// Same line format as [`Polygon::parse`], but every coordinate must be
    /// an integer literal.
    pub fn parse(text: &str) -> Result<Self, SuperbridgeError> {
        let mut vertices = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let line = line.trim().trim_end_matches('\\').replace('&', " ");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 3 {
                return Err(SuperbridgeError::Parse { line: lineno + 1, found: tokens.len() });
            }
            let mut c: [BigInt; 3] = Default::default();
            for (k, tok) in tokens.iter().enumerate() {
                c[k] = tok.parse().map_err(|_| SuperbridgeError::NonInteger {
                    line: lineno + 1,
                    token: tok.to_string(),
                })?;
            }
            vertices.push(c);
        }
        let p = IntegerPolygon { vertices };
        p.to_polygon()?;
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[[BigInt; 3]] {
        &self.vertices
    }

    pub fn edge(&self, i: usize) -> [BigInt; 3] {
        let a = &self.vertices[i];
        let b = &self.vertices[(i + 1) % self.len()];
        [&b[0] - &a[0], &b[1] - &a[1], &b[2] - &a[2]]
    }

    /// Floating-point copy (exact for coordinates below 2^53).
    pub fn to_polygon(&self) -> Result<Polygon, SuperbridgeError> {
        use num_traits::ToPrimitive;
        let verts = self
            .vertices
            .iter()
            .map(|c| Vec3::new(c[0].to_f64().unwrap(), c[1].to_f64().unwrap(), c[2].to_f64().unwrap()))
            .collect();
        Ok(Polygon::new(verts)?)
    }
}

/// The 3 x n matrix with columns `e_1, -e_2, e_3, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternationMatrix {
    pub columns: Vec<[BigInt; 3]>,
}

impl AlternationMatrix {
    pub fn new(p: &IntegerPolygon) -> Self {
        let columns = (0..p.len())
            .map(|i| {
                let e = p.edge(i);
                if i % 2 == 0 {
                    e
                } else {
                    e.map(|x| -x)
                }
            })
            .collect();
        AlternationMatrix { columns }
    }

    pub fn apply(&self, u: &[BigInt]) -> [BigInt; 3] {
        let mut out: [BigInt; 3] = Default::default();
        for (col, ui) in self.columns.iter().zip(u) {
            for k in 0..3 {
                out[k] += &col[k] * ui;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GordanCertificate {
    pub u: Vec<BigInt>,
}

impl fmt::Display for GordanCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.u.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum GordanOutcome {
    /// `v . a_i >= t > 0` for every column.
    Alternating { v: [BigRational; 3], t: BigRational },
    Certificate(GordanCertificate),
}

fn check_even(n: usize) -> Result<(), SuperbridgeError> {
    if n % 2 == 1 {
        Err(SuperbridgeError::OddEdgeCount(n))
    } else {
        Ok(())
    }
}

/// True iff `u >= 0`, `u != 0` and `A u = 0` exactly.
pub fn verify_gordan_certificate(p: &IntegerPolygon, u: &[BigInt]) -> Result<bool, SuperbridgeError> {
    check_even(p.len())?;
    if u.len() != p.len() {
        return Err(SuperbridgeError::WrongLength { expected: p.len(), found: u.len() });
    }
    if u.iter().any(Signed::is_negative) || u.iter().all(Zero::is_zero) {
        return Ok(false);
    }
    Ok(AlternationMatrix::new(p).apply(u).iter().all(Zero::is_zero))
}

/// Solves `max t` subject to `v . a_i >= t`, `|v_k| <= 1` by exact simplex.
/// A positive optimum gives the alternating direction; otherwise the optimal
/// dual prices on the column constraints form a certificate.
pub fn find_gordan_certificate(p: &IntegerPolygon) -> Result<GordanOutcome, SuperbridgeError> {
    let n = p.len();
    check_even(n)?;
    let a = AlternationMatrix::new(p);

    // variables: t, v+ (3), v- (3); rows: n column constraints, 6 box rows
    let nvar = 7;
    let m = n + 6;
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for col in &a.columns {
        let mut r = vec![BigRational::zero(); nvar];
        r[0] = BigRational::one();
        for k in 0..3 {
            r[1 + k] = -q(&col[k]);
            r[4 + k] = q(&col[k]);
        }
        rows.push(r);
        rhs.push(BigRational::zero());
    }
    for k in 0..6 {
        let mut r = vec![BigRational::zero(); nvar];
        r[1 + k] = BigRational::one();
        rows.push(r);
        rhs.push(BigRational::one());
    }
    let mut cost = vec![BigRational::zero(); nvar];
    cost[0] = BigRational::one();

    let sol = Simplex::new(rows, rhs, cost).maximize();
    let t = sol.x[0].clone();
    if t.is_positive() {
        let v = [0, 1, 2].map(|k| &sol.x[1 + k] - &sol.x[4 + k]);
        return Ok(GordanOutcome::Alternating { v, t });
    }

    let y = &sol.duals[..n];
    let lcm = y.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
    let mut u: Vec<BigInt> = y.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = u.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() {
        for x in &mut u {
            *x /= &g;
        }
    }
    debug_assert!(verify_gordan_certificate(p, &u).unwrap_or(false));
    Ok(GordanOutcome::Certificate(GordanCertificate { u }))
}

struct Solution {
    x: Vec<BigRational>,
    duals: Vec<BigRational>,
}

/// Dense tableau for `max c.x` subject to `A x <= b`, `x >= 0`, `b >= 0`,
/// started from the slack basis and pivoted by Bland's rule.
struct Simplex {
    tab: Vec<Vec<BigRational>>,
    obj: Vec<BigRational>,
    basis: Vec<usize>,
    nvar: usize,
}

impl Simplex {
    fn new(a: Vec<Vec<BigRational>>, b: Vec<BigRational>, c: Vec<BigRational>) -> Self {
        let m = a.len();
        let nvar = c.len();
        let width = nvar + m + 1;
        let mut tab = Vec::with_capacity(m);
        for (i, (row, bi)) in a.into_iter().zip(b).enumerate() {
            let mut r = row;
            r.resize(width, BigRational::zero());
            r[nvar + i] = BigRational::one();
            r[width - 1] = bi;
            tab.push(r);
        }
        let mut obj: Vec<BigRational> = c.into_iter().map(|x| -x).collect();
        obj.resize(width, BigRational::zero());
        Simplex { tab, obj, basis: (nvar..nvar + m).collect(), nvar }
    }

    fn maximize(mut self) -> Solution {
        let last = self.obj.len() - 1;
        while let Some(col) = (0..last).find(|&j| self.obj[j].is_negative()) {
            let mut pick: Option<(usize, BigRational)> = None;
            for (i, row) in self.tab.iter().enumerate() {
                if row[col].is_positive() {
                    let ratio = &row[last] / &row[col];
                    let better = match &pick {
                        None => true,
                        Some((pi, pr)) => ratio < *pr || (ratio == *pr && self.basis[i] < self.basis[*pi]),
                    };
                    if better {
                        pick = Some((i, ratio));
                    }
                }
            }
            let (r, _) = pick.expect("bounded program");
            self.pivot(r, col);
        }
        let mut x = vec![BigRational::zero(); self.nvar];
        for (i, &bv) in self.basis.iter().enumerate() {
            if bv < self.nvar {
                x[bv] = self.tab[i][last].clone();
            }
        }
        let duals = self.obj[self.nvar..last].to_vec();
        Solution { x, duals }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.tab[r][c].clone();
        for v in &mut self.tab[r] {
            *v = &*v / &p;
        }
        let pivot_row = self.tab[r].clone();
        for (i, row) in self.tab.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
        }
        self.basis[r] = c;
    }
}
