mod common;

use common::gauss::GaussDiagram;
use stickknot::diagram::PdCode;
use stickknot::invariants::homfly_with_budget;
use stickknot::poly::LaurentPoly2;

#[test]
fn oracle_matches_known_values() {
    let t: PdCode = "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]".parse().unwrap();
    let right = LaurentPoly2::from_terms([(-1, -4, 0), (1, -2, 2), (2, -2, 0)]);
    assert_eq!(GaussDiagram::from_pd(&t).homfly(), right);
    assert_eq!(GaussDiagram::from_pd(&PdCode::empty()).homfly(), LaurentPoly2::one());
}

#[test]
fn skein_evaluator_agrees_with_naive_resolution() {
    let codes = common::small_codes();
    eprintln!("{} codes", codes.len());
    assert!(codes.len() > 100);
    assert!(codes.iter().any(|c| c.len() == 5));
    for pd in &codes {
        assert_eq!(homfly_with_budget(pd, usize::MAX).unwrap(), GaussDiagram::from_pd(pd).homfly(), "{pd}");
    }
}
