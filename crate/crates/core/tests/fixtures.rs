use std::path::PathBuf;
use std::time::Instant;

use stickknot::diagram::{candidate_axes, perturb_axis_until_generic, project_to_diagram, simplify_diagram, smallest_diagram};
use num_bigint::BigInt;
use stickknot::geometry::{load_polygon, Direction, Polygon, Vec3};
use stickknot::invariants::{homfly, identify_polygon, KnotTable, DEFAULT_CROSSING_BUDGET, IDENTIFY_AXES};
use stickknot::superbridge::{
    find_gordan_certificate, local_maxima_count, superbridge_number, verify_gordan_certificate, GordanOutcome,
    IntegerPolygon,
};

const EQUILATERAL: [&str; 12] = [
    "9_18", "10_18", "10_58", "10_66", "10_68", "10_79", "10_80", "10_82", "10_84", "10_93", "10_100", "10_152",
];

fn fixture(name: &str) -> Polygon {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.txt"));
    load_polygon(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

#[test]
fn every_realization_identifies_to_its_label() {
    let table = KnotTable::shipped();
    let start = Instant::now();
    for name in EQUILATERAL.iter().copied().chain(["10_37_integer"]) {
        let label = name.trim_end_matches("_integer");
        let id = identify_polygon(&fixture(name), table, DEFAULT_CROSSING_BUDGET, 0).unwrap();
        let names = id.names();
        eprintln!("{name}: {} crossings -> {names:?}", id.pd.len());
        assert!(names.contains(label), "{name} identified as {names:?}");
        assert!(names.len() <= 2);
    }
    eprintln!("identified in {:?}", start.elapsed());
}

#[test]
fn homfly_agrees_across_projection_axes() {
    for name in EQUILATERAL {
        let p = fixture(name);
        let mut polys = Vec::new();
        for (k, axis) in candidate_axes(60).into_iter().enumerate() {
            let axis = perturb_axis_until_generic(&p, axis, k as u64).unwrap();
            let (_, pd) = project_to_diagram(&p, axis).unwrap();
            let simple = simplify_diagram(&pd);
            assert!(simple.len() <= pd.len());
            if simple.len() <= DEFAULT_CROSSING_BUDGET {
                polys.push(homfly(&simple).unwrap());
            }
            if polys.len() == 5 {
                break;
            }
        }
        assert_eq!(polys.len(), 5, "{name}");
        assert!(polys.windows(2).all(|w| w[0] == w[1]), "{name}");
    }
}

#[test]
fn mirror_image_has_mirrored_polynomial() {
    for name in EQUILATERAL {
        let p = fixture(name);
        let (_, pd) = smallest_diagram(&p, &candidate_axes(IDENTIFY_AXES), 3).unwrap();
        assert_eq!(homfly(&pd.mirror()).unwrap(), homfly(&pd).unwrap().mirror(), "{name}");
    }
}

fn fixture_text(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.txt"));
    std::fs::read_to_string(path).unwrap()
}

fn published_u() -> Vec<BigInt> {
    fixture_text("10_37_certificate")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.trim().parse().unwrap())
        .collect()
}

#[test]
fn published_certificate_verifies() {
    let p = IntegerPolygon::parse(&fixture_text("10_37_integer")).unwrap();
    let u = published_u();
    assert_eq!(u.len(), 12);
    assert!(verify_gordan_certificate(&p, &u).unwrap());
    for k in 0..12 {
        let mut bad = u.clone();
        bad[k] = -bad[k].clone();
        assert!(!verify_gordan_certificate(&p, &bad).unwrap());
    }
    match find_gordan_certificate(&p).unwrap() {
        GordanOutcome::Certificate(c) => assert!(verify_gordan_certificate(&p, &c.u).unwrap()),
        other => panic!("expected a certificate, got {other:?}"),
    }
}

#[test]
fn realization_of_10_37_has_superbridge_number_5() {
    let p = fixture("10_37_integer");
    let r = superbridge_number(&p).unwrap();
    assert_eq!(r.value, 5);
    assert_eq!(local_maxima_count(&p, r.witness_direction).unwrap(), 5);
    let near_z = Direction::new(Vec3::new(1e-3, 2e-3, 1.0)).unwrap();
    assert!(local_maxima_count(&p, near_z).unwrap() <= 5);
}
