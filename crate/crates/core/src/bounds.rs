//! Per-knot bounds on stick number, equilateral stick number and
//! superbridge index, with propagation of the general inequalities
//!
//! * `sb <= stick / 2`,
//! * `sb <= 3 b - 1` for nontrivial knots,
//! * `stick <= 3 (cr + 1) / 2` for nontrivial knots,
//! * `stick <= eqstick`.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use thiserror::Error;

pub const SHIPPED_BOUNDS_CSV: &str = include_str!("../data/bounds.csv");

pub const CSV_HEADER: [&str; 10] = [
    "knot",
    "cr",
    "bridge",
    "stick_lo",
    "stick_hi",
    "eqstick_lo",
    "eqstick_hi",
    "sb_lo",
    "sb_hi",
    "provenance",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("table row {row}: {msg}")]
    Malformed { row: usize, msg: String },
    #[error("knot {0} appears twice")]
    Duplicate(String),
    #[error("inconsistent data for {knot}: {bound} lower bound {lo} exceeds upper bound {hi}")]
    Inconsistent { knot: String, bound: &'static str, lo: u32, hi: u32 },
    #[error("the conjecture only concerns crossing number at least 7, got {0}")]
    ConjectureScope(u32),
    #[error("torus knot parameters ({p}, {q}) need 2 <= p < q, gcd 1 and q(p-1) >= 7")]
    TorusParameters { p: u32, q: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: u32,
    pub hi: u32,
}

impl Interval {
    pub fn new(lo: u32, hi: u32) -> Self {
        Interval { lo, hi }
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsEntry {
    pub knot: String,
    pub crossing_number: u32,
    pub bridge_index: Option<u32>,
    pub stick: Interval,
    pub eqstick: Interval,
    pub sb: Interval,
    pub provenance: String,
}

impl BoundsEntry {
    pub fn is_nontrivial(&self) -> bool {
        self.crossing_number >= 3
    }

    fn check(&self) -> Result<(), BoundsError> {
        for (bound, i) in [("stick", self.stick), ("eqstick", self.eqstick), ("sb", self.sb)] {
            if i.lo > i.hi {
                return Err(BoundsError::Inconsistent { knot: self.knot.clone(), bound, lo: i.lo, hi: i.hi });
            }
        }
        Ok(())
    }
}

/// Tightens an entry with the general inequalities. Idempotent, and never
/// widens an interval.
pub fn propagate(entry: &BoundsEntry) -> Result<BoundsEntry, BoundsError> {
    let mut e = entry.clone();
    e.eqstick.lo = e.eqstick.lo.max(e.stick.lo);
    e.stick.hi = e.stick.hi.min(e.eqstick.hi);
    if e.is_nontrivial() {
        e.stick.hi = e.stick.hi.min(3 * (e.crossing_number + 1) / 2);
    }
    e.sb.hi = e.sb.hi.min(e.stick.hi / 2);
    if let (true, Some(b)) = (e.is_nontrivial(), e.bridge_index) {
        e.sb.hi = e.sb.hi.min((3 * b).saturating_sub(1));
    }
    e.check()?;
    Ok(e)
}

/// Lowers the stick and equilateral stick upper bounds to the values of a
/// new realization, then propagates.
pub fn apply_theorem_result(
    entry: &BoundsEntry,
    new_stick_hi: u32,
    new_eqstick_hi: u32,
) -> Result<BoundsEntry, BoundsError> {
    for (bound, lo, hi) in [("stick", entry.stick.lo, new_stick_hi), ("eqstick", entry.eqstick.lo, new_eqstick_hi)] {
        if hi < lo {
            return Err(BoundsError::Inconsistent { knot: entry.knot.clone(), bound, lo, hi });
        }
    }
    let mut e = entry.clone();
    e.stick.hi = e.stick.hi.min(new_stick_hi);
    e.eqstick.hi = e.eqstick.hi.min(new_eqstick_hi);
    propagate(&e)
}

/// Whether `sb_hi <= ceil(cr / 2)`, for knots with at least 7 crossings.
pub fn check_conjecture(cr: u32, sb_hi: u32) -> Result<bool, BoundsError> {
    if cr < 7 {
        return Err(BoundsError::ConjectureScope(cr));
    }
    Ok(sb_hi <= cr.div_ceil(2))
}

/// The conjecture for the torus knot `T(p, q)`, whose superbridge index is
/// `min(2p, q)` and crossing number `q (p - 1)`.
pub fn check_torus_conjecture(p: u32, q: u32) -> Result<bool, BoundsError> {
    if p < 2 || p >= q || p.gcd(&q) != 1 || q * (p - 1) < 7 {
        return Err(BoundsError::TorusParameters { p, q });
    }
    check_conjecture(q * (p - 1), (2 * p).min(q))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundsTable {
    pub entries: Vec<BoundsEntry>,
}

fn field<T: std::str::FromStr>(rec: &csv::StringRecord, k: usize, row: usize) -> Result<T, BoundsError> {
    let s = rec.get(k).unwrap_or("").trim();
    s.parse().map_err(|_| BoundsError::Malformed { row, msg: format!("{}: cannot parse {s:?}", CSV_HEADER[k]) })
}

impl BoundsTable {
    pub fn load(text: &str) -> Result<BoundsTable, BoundsError> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(text.as_bytes());
        let header = rdr.headers().map_err(|e| BoundsError::Malformed { row: 0, msg: e.to_string() })?.clone();
        if !header.is_empty() && header.iter().map(str::trim).ne(CSV_HEADER) {
            return Err(BoundsError::Malformed { row: 0, msg: format!("unexpected header {header:?}") });
        }
        let mut seen = HashSet::new();
        let mut entries = Vec::new();
        for (k, rec) in rdr.records().enumerate() {
            let row = k + 1;
            let rec = rec.map_err(|e| BoundsError::Malformed { row, msg: e.to_string() })?;
            if rec.len() != CSV_HEADER.len() {
                return Err(BoundsError::Malformed { row, msg: format!("expected 10 fields, found {}", rec.len()) });
            }
            let knot = rec[0].trim().to_string();
            if !seen.insert(knot.clone()) {
                return Err(BoundsError::Duplicate(knot));
            }
            let bridge = rec[2].trim();
            let entry = BoundsEntry {
                knot,
                crossing_number: field(&rec, 1, row)?,
                bridge_index: if bridge.is_empty() { None } else { Some(field(&rec, 2, row)?) },
                stick: Interval::new(field(&rec, 3, row)?, field(&rec, 4, row)?),
                eqstick: Interval::new(field(&rec, 5, row)?, field(&rec, 6, row)?),
                sb: Interval::new(field(&rec, 7, row)?, field(&rec, 8, row)?),
                provenance: rec[9].to_string(),
            };
            entry.check()?;
            entries.push(entry);
        }
        Ok(BoundsTable { entries })
    }

    pub fn emit(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for e in &self.entries {
            let opt = |x: Option<u32>| x.map(|v| v.to_string()).unwrap_or_default();
            w.write_record([
                e.knot.clone(),
                e.crossing_number.to_string(),
                opt(e.bridge_index),
                e.stick.lo.to_string(),
                e.stick.hi.to_string(),
                e.eqstick.lo.to_string(),
                e.eqstick.hi.to_string(),
                e.sb.lo.to_string(),
                e.sb.hi.to_string(),
                e.provenance.clone(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn shipped() -> &'static BoundsTable {
        static TABLE: OnceLock<BoundsTable> = OnceLock::new();
        TABLE.get_or_init(|| BoundsTable::load(SHIPPED_BOUNDS_CSV).expect("shipped bounds table is valid"))
    }

    pub fn get(&self, knot: &str) -> Option<&BoundsEntry> {
        self.entries.iter().find(|e| e.knot == knot)
    }

    pub fn get_mut(&mut self, knot: &str) -> Option<&mut BoundsEntry> {
        self.entries.iter_mut().find(|e| e.knot == knot)
    }

    pub fn propagated(&self) -> Result<BoundsTable, BoundsError> {
        Ok(BoundsTable { entries: self.entries.iter().map(propagate).collect::<Result<_, _>>()? })
    }

    /// Knots whose entry changes under [`propagate`].
    pub fn unsettled(&self) -> Result<Vec<String>, BoundsError> {
        let mut out = Vec::new();
        for e in &self.entries {
            if propagate(e)? != *e {
                out.push(e.knot.clone());
            }
        }
        Ok(out)
    }
}

pub fn load_table(text: &str) -> Result<BoundsTable, BoundsError> {
    BoundsTable::load(text)
}

pub fn emit_table(table: &BoundsTable) -> String {
    table.emit()
}
