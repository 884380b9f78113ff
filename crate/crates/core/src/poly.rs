//! Two-variable Laurent polynomials in `(a, z)` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad polynomial term {0:?}")]
pub struct PolyParseError(pub String);

/// Exponent pairs `(i, j)` for `a^i z^j` mapped to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), i64>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(c: i64, a: i32, z: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, a, z);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i32, i32)>) -> Self {
        let mut p = Self::zero();
        for (c, a, z) in terms {
            p.add_term(c, a, z);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, c: i64, a: i32, z: i32) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((a, z)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(a, z));
        }
    }

    pub fn coefficient(&self, a: i32, z: i32) -> i64 {
        self.terms.get(&(a, z)).copied().unwrap_or(0)
    }

    /// Terms as `(coefficient, a-exponent, z-exponent)` in lexicographic
    /// exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i32, i32)> + '_ {
        self.terms.iter().map(|(&(a, z), &c)| (c, a, z))
    }

    pub fn shifted(&self, c: i64, da: i32, dz: i32) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(a, z), &k)| ((a + da, z + dz), k * c))
                .filter(|&(_, k)| k != 0)
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `a -> -a^{-1}`: the polynomial of the mirror image.
    pub fn mirror(&self) -> Self {
        Self::from_terms(
            self.terms()
                .map(|(c, a, z)| (if a.rem_euclid(2) == 0 { c } else { -c }, -a, z)),
        )
    }

    /// `(a - a^{-1}) / z`, the value of the two-component unlink.
    pub fn unlink_factor() -> Self {
        Self::from_terms([(1, 1, -1), (-1, -1, -1)])
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, o: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (c, a, z) in o.terms() {
            out.add_term(c, a, z);
        }
        out
    }
}

impl Add for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(mut self, o: LaurentPoly2) -> LaurentPoly2 {
        for (c, a, z) in o.terms() {
            self.add_term(c, a, z);
        }
        self
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.shifted(-1, 0, 0)
    }
}

impl Sub for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, o: LaurentPoly2) -> LaurentPoly2 {
        self + (-o)
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, o: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (c1, a1, z1) in self.terms() {
            for (c2, a2, z2) in o.terms() {
                out.add_term(c1 * c2, a1 + a2, z1 + z2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly2 {
    /// `c*a^i*z^j` terms joined by ` + `, sorted by `(i, j)`; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (c, a, z)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*a^{a}*z^{z}")?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly2 {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        for term in s.split(" + ") {
            let bad = || PolyParseError(term.to_string());
            let mut parts = term.trim().split('*');
            let c: i64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let a: i32 = parts
                .next()
                .and_then(|t| t.strip_prefix("a^"))
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?;
            let z: i32 = parts
                .next()
                .and_then(|t| t.strip_prefix("z^"))
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?;
            if parts.next().is_some() || c == 0 {
                return Err(bad());
            }
            p.add_term(c, a, z);
        }
        Ok(p)
    }
}
