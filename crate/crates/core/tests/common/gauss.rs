//! A deliberately naive HOMFLY evaluator on signed Gauss codes, used only as
//! a test oracle. No simplification, no memoization: every diagram is
//! resolved by crossing changes and smoothings until it is descending.

use stickknot::diagram::PdCode;
use stickknot::poly::LaurentPoly2;

/// One passage through a crossing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Visit {
    pub crossing: usize,
    pub over: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaussDiagram {
    pub components: Vec<Vec<Visit>>,
    pub signs: Vec<i32>,
}

impl GaussDiagram {
    pub fn from_pd(pd: &PdCode) -> GaussDiagram {
        let xs = pd.crossings();
        if xs.is_empty() {
            return GaussDiagram { components: vec![Vec::new()], signs: Vec::new() };
        }
        let arcs = 2 * xs.len();
        let mut ends: Vec<Option<Visit>> = vec![None; arcs + 1];
        for (c, x) in xs.iter().enumerate() {
            // under strand enters at slot 0; the over strand enters at slot 3
            // when positive and slot 1 when negative
            ends[x.arcs[0] as usize] = Some(Visit { crossing: c, over: false });
            let over_in = if x.sign() > 0 { x.arcs[3] } else { x.arcs[1] };
            ends[over_in as usize] = Some(Visit { crossing: c, over: true });
        }
        let code = (1..=arcs).map(|l| ends[l].expect("every arc ends at a crossing")).collect();
        GaussDiagram { components: vec![code], signs: xs.iter().map(|x| x.sign()).collect() }
    }

    fn first_bad(&self) -> Option<usize> {
        let mut seen = vec![false; self.signs.len()];
        for comp in &self.components {
            for v in comp {
                if !seen[v.crossing] {
                    seen[v.crossing] = true;
                    if !v.over {
                        return Some(v.crossing);
                    }
                }
            }
        }
        None
    }

    fn switched(&self, c: usize) -> GaussDiagram {
        let mut d = self.clone();
        for comp in &mut d.components {
            for v in comp.iter_mut().filter(|v| v.crossing == c) {
                v.over = !v.over;
            }
        }
        d.signs[c] = -d.signs[c];
        d
    }

    fn smoothed(&self, c: usize) -> GaussDiagram {
        let holders: Vec<(usize, usize)> = self
            .components
            .iter()
            .enumerate()
            .flat_map(|(k, comp)| comp.iter().enumerate().filter(|(_, v)| v.crossing == c).map(move |(i, _)| (k, i)))
            .collect();
        let mut comps: Vec<Vec<Visit>> = Vec::new();
        let (k1, i1) = holders[0];
        let (k2, i2) = holders[1];
        if k1 == k2 {
            let comp = &self.components[k1];
            comps.push(comp[i1 + 1..i2].to_vec());
            comps.push(comp[i2 + 1..].iter().chain(&comp[..i1]).copied().collect());
            for (k, other) in self.components.iter().enumerate() {
                if k != k1 {
                    comps.push(other.clone());
                }
            }
        } else {
            let rot = |comp: &Vec<Visit>, i: usize| -> Vec<Visit> {
                comp[i + 1..].iter().chain(&comp[..i]).copied().collect()
            };
            let mut merged = rot(&self.components[k1], i1);
            merged.extend(rot(&self.components[k2], i2));
            comps.push(merged);
            for (k, other) in self.components.iter().enumerate() {
                if k != k1 && k != k2 {
                    comps.push(other.clone());
                }
            }
        }
        // crossing c no longer exists; keep indices stable with a zero sign
        let mut signs = self.signs.clone();
        signs[c] = 0;
        GaussDiagram { components: comps, signs }
    }

    pub fn homfly(&self) -> LaurentPoly2 {
        match self.first_bad() {
            None => {
                let delta = LaurentPoly2::from_terms([(1, 1, -1), (-1, -1, -1)]);
                delta.pow(self.components.len() as u32 - 1)
            }
            Some(c) => {
                let sw = self.switched(c).homfly();
                let sm = self.smoothed(c).homfly();
                let (a2, az) = if self.signs[c] > 0 {
                    (LaurentPoly2::monomial(1, -2, 0), LaurentPoly2::monomial(1, -1, 1))
                } else {
                    (LaurentPoly2::monomial(1, 2, 0), LaurentPoly2::monomial(-1, 1, 1))
                };
                &(&a2 * &sw) + &(&az * &sm)
            }
        }
    }
}
