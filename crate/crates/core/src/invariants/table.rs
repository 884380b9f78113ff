use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use crate::diagram::{candidate_axes, smallest_diagram, PdCode};
use crate::geometry::Direction;
use crate::geometry::Polygon;
use crate::poly::LaurentPoly2;

use super::{homfly_with_budget, InvariantError, DEFAULT_CROSSING_BUDGET};

/// Minimal PD codes of the unknot and the 249 prime knots through ten
/// crossings.
pub const SHIPPED_PD_CODES: &str = include_str!("../../data/knots_pd.txt");

/// A knot type with chirality; `mirror` marks the mirror image of the
/// reference diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnotId {
    pub name: String,
    pub mirror: bool,
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mirror {
            write!(f, "{}*", self.name)
        } else {
            f.write_str(&self.name)
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct KnotTable {
    entries: BTreeMap<KnotId, LaurentPoly2>,
    by_poly: HashMap<LaurentPoly2, BTreeSet<KnotId>>,
    base_count: usize,
}

impl KnotTable {
    /// Reads `<name> <pd code>` lines (`#` comments) and computes every
    /// polynomial with [`super::homfly`]. A mirror entry is added whenever
    /// the mirror polynomial differs.
    pub fn build(source: &str) -> Result<KnotTable, InvariantError> {
        let mut table = KnotTable::default();
        let mut names = BTreeSet::new();
        for (lineno, raw) in source.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, code) = line.split_once(char::is_whitespace).ok_or_else(|| InvariantError::Table {
                line: lineno + 1,
                msg: "expected a name and a PD code".into(),
            })?;
            if !names.insert(name.to_string()) {
                return Err(InvariantError::DuplicateName(name.to_string()));
            }
            let pd: PdCode = code.trim().parse().map_err(|e| InvariantError::Table {
                line: lineno + 1,
                msg: format!("{e}"),
            })?;
            let poly = homfly_with_budget(&pd, usize::MAX)?;
            let mirror = poly.mirror();
            table.insert(KnotId { name: name.to_string(), mirror: false }, poly.clone());
            if mirror != poly {
                table.insert(KnotId { name: name.to_string(), mirror: true }, mirror);
            }
            table.base_count += 1;
        }
        Ok(table)
    }

    /// The table built from the shipped reference codes, computed once.
    pub fn shipped() -> &'static KnotTable {
        static TABLE: OnceLock<KnotTable> = OnceLock::new();
        TABLE.get_or_init(|| KnotTable::build(SHIPPED_PD_CODES).expect("shipped reference table is valid"))
    }

    fn insert(&mut self, id: KnotId, poly: LaurentPoly2) {
        self.by_poly.entry(poly.clone()).or_default().insert(id.clone());
        self.entries.insert(id, poly);
    }

    /// Number of knot types (without mirror entries).
    pub fn base_len(&self) -> usize {
        self.base_count
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &KnotId) -> Option<&LaurentPoly2> {
        self.entries.get(id)
    }

    /// Polynomial of `name`, looking through mirrors.
    pub fn polynomial(&self, name: &str) -> Option<&LaurentPoly2> {
        self.entries.get(&KnotId { name: name.to_string(), mirror: false })
    }

    pub fn entries(&self) -> impl Iterator<Item = (&KnotId, &LaurentPoly2)> {
        self.entries.iter()
    }

    pub fn lookup(&self, poly: &LaurentPoly2) -> BTreeSet<KnotId> {
        self.by_poly.get(poly).cloned().unwrap_or_default()
    }

    /// Groups of distinct knot types sharing a polynomial.
    pub fn collisions(&self) -> Vec<BTreeSet<KnotId>> {
        let mut out: Vec<BTreeSet<KnotId>> = self
            .by_poly
            .values()
            .filter(|ids| ids.iter().map(|k| &k.name).collect::<BTreeSet<_>>().len() > 1)
            .cloned()
            .collect();
        out.sort();
        out
    }
}

/// Every table entry whose polynomial equals that of `pd`.
pub fn identify(pd: &PdCode, table: &KnotTable) -> Result<BTreeSet<KnotId>, InvariantError> {
    identify_with_budget(pd, table, DEFAULT_CROSSING_BUDGET)
}

pub fn identify_with_budget(pd: &PdCode, table: &KnotTable, budget: usize) -> Result<BTreeSet<KnotId>, InvariantError> {
    let poly = homfly_with_budget(pd, budget)?;
    Ok(table.lookup(&poly))
}

#[derive(Debug, Clone)]
pub struct Identification {
    pub axis: Direction,
    pub pd: PdCode,
    pub homfly: LaurentPoly2,
    pub matches: BTreeSet<KnotId>,
}

impl Identification {
    /// Matched knot names without chirality, sorted and deduplicated.
    pub fn names(&self) -> BTreeSet<String> {
        self.matches.iter().map(|k| k.name.clone()).collect()
    }
}

/// Number of projection directions tried by [`identify_polygon`].
pub const IDENTIFY_AXES: usize = 24;

/// Projects along several directions, keeps the smallest simplified diagram
/// and looks its polynomial up in `table`.
pub fn identify_polygon(p: &Polygon, table: &KnotTable, budget: usize, seed: u64) -> Result<Identification, InvariantError> {
    identify_polygon_along(p, &candidate_axes(IDENTIFY_AXES), table, budget, seed)
}

/// [`identify_polygon`] restricted to the given projection axes.
pub fn identify_polygon_along(
    p: &Polygon,
    axes: &[Direction],
    table: &KnotTable,
    budget: usize,
    seed: u64,
) -> Result<Identification, InvariantError> {
    let (axis, pd) = smallest_diagram(p, axes, seed)?;
    let homfly = homfly_with_budget(&pd, budget)?;
    let matches = table.lookup(&homfly);
    Ok(Identification { axis, pd, homfly, matches })
}
