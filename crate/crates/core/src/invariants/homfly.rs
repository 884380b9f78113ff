//! HOMFLY polynomial by skein-tree evaluation.
//!
//! Convention: `a P(L+) - a^{-1} P(L-) = z P(L0)`, unknot = 1. A diagram is
//! reduced by switching crossings until it is descending (hence an unlink)
//! and smoothing along the way; every child is R1/R2-simplified first.

use std::collections::HashMap;

use crate::diagram::{LinkDiagram, PdCode};
use crate::poly::LaurentPoly2;

use super::InvariantError;

pub const DEFAULT_CROSSING_BUDGET: usize = 16;

pub fn homfly(pd: &PdCode) -> Result<LaurentPoly2, InvariantError> {
    homfly_with_budget(pd, DEFAULT_CROSSING_BUDGET)
}

/// `budget` bounds the crossing count of the R1/R2-simplified input.
pub fn homfly_with_budget(pd: &PdCode, budget: usize) -> Result<LaurentPoly2, InvariantError> {
    let d = pd.to_link().simplified();
    if d.crossing_count() > budget {
        return Err(InvariantError::CrossingBudget { crossings: d.crossing_count(), budget });
    }
    Ok(SkeinEvaluator::default().eval(d))
}

/// HOMFLY of an arbitrary oriented link diagram (no budget check).
pub fn homfly_link(d: &LinkDiagram) -> LaurentPoly2 {
    SkeinEvaluator::default().eval(d.simplified())
}

#[derive(Default)]
struct SkeinEvaluator {
    memo: HashMap<(Vec<crate::diagram::Xing>, u32), LaurentPoly2>,
}

impl SkeinEvaluator {
    fn eval(&mut self, d: LinkDiagram) -> LaurentPoly2 {
        let d = d.simplified();
        let mut key_xs = d.xs.clone();
        key_xs.sort_unstable();
        let key = (key_xs, d.loops);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }

        let defects = d.descending_defects();
        let result = if defects.is_empty() {
            LaurentPoly2::unlink_factor().pow(d.component_count() as u32 - 1)
        } else {
            let (i, switched, smoothed) = defects
                .iter()
                .map(|&i| {
                    let sw = d.switched(i).simplified();
                    let sm = d.smoothed(i).simplified();
                    (i, sw, sm)
                })
                .min_by_key(|(_, sw, sm)| sw.crossing_count() + sm.crossing_count())
                .expect("nonempty");
            let p_switch = self.eval(switched);
            let p_smooth = self.eval(smoothed);
            if d.xs[i].positive {
                // P(L+) = a^-2 P(L-) + a^-1 z P(L0)
                p_switch.shifted(1, -2, 0) + p_smooth.shifted(1, -1, 1)
            } else {
                // P(L-) = a^2 P(L+) - a z P(L0)
                p_switch.shifted(1, 2, 0) + p_smooth.shifted(-1, 1, 1)
            }
        };
        self.memo.insert(key, result.clone());
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_is_one() {
        assert_eq!(homfly(&PdCode::empty()).unwrap(), LaurentPoly2::one());
        let kink: PdCode = "[[1,1,2,2]]".parse().unwrap();
        assert_eq!(homfly(&kink).unwrap(), LaurentPoly2::one());
    }

    #[test]
    fn right_trefoil() {
        let t: PdCode = "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]".parse().unwrap();
        let expect = LaurentPoly2::from_terms([(-1, -4, 0), (1, -2, 2), (2, -2, 0)]);
        assert_eq!(homfly(&t).unwrap(), expect);
        assert_eq!(homfly(&t.mirror()).unwrap(), expect.mirror());
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let f: PdCode = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]".parse().unwrap();
        let p = homfly(&f).unwrap();
        assert_eq!(p, LaurentPoly2::from_terms([(1, -2, 0), (-1, 0, 0), (-1, 0, 2), (1, 2, 0)]));
        assert_eq!(p.mirror(), p);
    }

    #[test]
    fn budget_guard() {
        let t: PdCode = "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]".parse().unwrap();
        assert_eq!(
            homfly_with_budget(&t, 2),
            Err(InvariantError::CrossingBudget { crossings: 3, budget: 2 })
        );
    }
}
