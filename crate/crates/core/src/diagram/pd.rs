//! Planar-diagram codes for knots.
//!
//! Each crossing lists its four arcs counterclockwise starting from the
//! incoming under-strand. Arcs are labelled `1..=2c` along the orientation,
//! so the under-strand always runs from label `a` to label `a + 1 (mod 2c)`.

use std::fmt;
use std::str::FromStr;

use super::link::{LinkDiagram, Xing};
use super::DiagramError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PdCrossing {
    pub arcs: [u32; 4],
    /// Writhe contribution: `true` when the over-strand runs from slot 3 to
    /// slot 1.
    pub positive: bool,
}

impl PdCrossing {
    pub fn sign(&self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    /// The same crossing with the strands exchanged.
    pub fn switched(&self) -> PdCrossing {
        let [a, b, c, d] = self.arcs;
        let arcs = if self.positive { [d, a, b, c] } else { [b, c, d, a] };
        PdCrossing { arcs, positive: !self.positive }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PdCode {
    crossings: Vec<PdCrossing>,
}

impl PdCode {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a code and checks that it is a single oriented component with
    /// consecutive labels.
    pub fn new(crossings: Vec<PdCrossing>) -> Result<Self, DiagramError> {
        let code = PdCode { crossings };
        code.validate()?;
        Ok(code)
    }

    /// Signs are inferred from the consecutive labelling.
    pub fn from_tuples(tuples: &[[u32; 4]]) -> Result<Self, DiagramError> {
        let m = 2 * tuples.len() as u32;
        let next = |x: u32| x % m + 1;
        let crossings = tuples
            .iter()
            .map(|&arcs| {
                let [_, b, _, d] = arcs;
                let positive = if b == next(d) {
                    true
                } else if d == next(b) {
                    false
                } else {
                    return Err(DiagramError::Malformed(format!(
                        "over-strand arcs {b} and {d} of {arcs:?} are not consecutive"
                    )));
                };
                Ok(PdCrossing { arcs, positive })
            })
            .collect::<Result<Vec<_>, _>>()?;
        PdCode::new(crossings)
    }

    pub fn crossings(&self) -> &[PdCrossing] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(PdCrossing::sign).sum()
    }

    /// Every crossing switched; the code of the mirror image.
    pub fn mirror(&self) -> PdCode {
        PdCode {
            crossings: self.crossings.iter().map(PdCrossing::switched).collect(),
        }
    }

    /// Switches the crossings selected by `mask` (bit `k` for crossing `k`).
    pub fn with_switched(&self, mask: u64) -> PdCode {
        PdCode {
            crossings: self
                .crossings
                .iter()
                .enumerate()
                .map(|(k, x)| if mask >> k & 1 == 1 { x.switched() } else { *x })
                .collect(),
        }
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let c = self.crossings.len() as u32;
        if c == 0 {
            return Ok(());
        }
        let m = 2 * c;
        let mut count = vec![0u8; m as usize + 1];
        for x in &self.crossings {
            for &l in &x.arcs {
                if l == 0 || l > m {
                    return Err(DiagramError::Malformed(format!(
                        "arc label {l} outside 1..={m}"
                    )));
                }
                count[l as usize] += 1;
            }
        }
        if let Some(l) = (1..=m).find(|&l| count[l as usize] != 2) {
            return Err(DiagramError::Malformed(format!(
                "arc label {l} appears {} times",
                count[l as usize]
            )));
        }
        let next = |x: u32| x % m + 1;
        for x in &self.crossings {
            let [a, b, cc, d] = x.arcs;
            let (over_in, over_out) = if x.positive { (d, b) } else { (b, d) };
            if cc != next(a) || over_out != next(over_in) {
                return Err(DiagramError::Malformed(format!(
                    "crossing {:?} does not follow the orientation",
                    x.arcs
                )));
            }
        }
        let link = self.to_link();
        if link.component_count() != 1 {
            return Err(DiagramError::Malformed("more than one component".into()));
        }
        Ok(())
    }

    pub(crate) fn to_link(&self) -> LinkDiagram {
        LinkDiagram::new(
            self.crossings
                .iter()
                .map(|x| Xing { arcs: x.arcs.map(|l| l - 1), positive: x.positive })
                .collect(),
            if self.crossings.is_empty() { 1 } else { 0 },
        )
    }

    /// Relabels a single-component link diagram along its orientation,
    /// starting from the arc with the smallest label.
    pub(crate) fn from_link(link: &LinkDiagram) -> Result<PdCode, DiagramError> {
        if link.xs.is_empty() {
            return match link.loops {
                1 => Ok(PdCode::empty()),
                k => Err(DiagramError::Malformed(format!("{k} components"))),
            };
        }
        if link.loops != 0 || link.component_count() != 1 {
            return Err(DiagramError::Malformed("more than one component".into()));
        }
        let start = link.xs.iter().flat_map(|x| x.arcs).min().unwrap_or(0);
        let order = link.trace_component(start);
        let mut relabel = vec![0u32; link.label_bound()];
        for (k, &l) in order.iter().enumerate() {
            relabel[l as usize] = k as u32 + 1;
        }
        Ok(PdCode {
            crossings: link
                .xs
                .iter()
                .map(|x| PdCrossing {
                    arcs: x.arcs.map(|l| relabel[l as usize]),
                    positive: x.positive,
                })
                .collect(),
        })
    }
}

impl fmt::Display for PdCode {
    /// Bracketed form: `[[1,5,2,4],[3,1,4,6],[5,3,6,2]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.crossings.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            let [a, b, c, d] = x.arcs;
            write!(f, "[{a},{b},{c},{d}]")?;
        }
        f.write_str("]")
    }
}

impl FromStr for PdCode {
    type Err = DiagramError;

    /// Accepts the bracketed form; `PD[X[...], ...]` is tolerated too.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let cleaned: String = s
            .replace("PD", "")
            .replace('X', "")
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        let inner = cleaned
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| DiagramError::Malformed(format!("not a bracketed code: {s:?}")))?;
        let mut tuples = Vec::new();
        for chunk in inner.split(']').filter(|t| !t.is_empty()) {
            let body = chunk.trim_start_matches(',').trim_start_matches('[');
            let nums: Vec<u32> = body
                .split(',')
                .map(|t| {
                    t.parse()
                        .map_err(|_| DiagramError::Malformed(format!("bad arc label {t:?}")))
                })
                .collect::<Result<_, _>>()?;
            let arcs: [u32; 4] = nums.try_into().map_err(|v: Vec<u32>| {
                DiagramError::Malformed(format!("crossing with {} arcs", v.len()))
            })?;
            tuples.push(arcs);
        }
        PdCode::from_tuples(&tuples)
    }
}
