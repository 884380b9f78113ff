use std::time::Instant;

use stickknot::invariants::{KnotId, KnotTable};
use stickknot::poly::LaurentPoly2;

const KNOTINFO: &str = include_str!("data/knotinfo_homfly.txt");

fn external_values() -> Vec<(String, LaurentPoly2)> {
    KNOTINFO
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            let name = it.next().unwrap().to_string();
            let terms = it.map(|t| {
                let v: Vec<i64> = t.split(':').map(|x| x.parse().unwrap()).collect();
                (v[0], v[1] as i32, v[2] as i32)
            });
            (name, LaurentPoly2::from_terms(terms))
        })
        .collect()
}

#[test]
fn shipped_table_matches_knotinfo_up_to_mirror() {
    let start = Instant::now();
    let table = KnotTable::shipped();
    eprintln!("table built in {:?}", start.elapsed());
    assert_eq!(table.base_len(), 250);
    let external = external_values();
    assert_eq!(external.len(), 250);
    let mut bad = Vec::new();
    for (name, expect) in &external {
        let got = table.polynomial(name).unwrap_or_else(|| panic!("{name} missing"));
        if got != expect && got.mirror() != *expect {
            bad.push(name.clone());
        }
    }
    assert!(bad.is_empty(), "mismatched: {bad:?}");
}

#[test]
fn homfly_collisions_are_known_pairs() {
    let table = KnotTable::shipped();
    let groups: Vec<String> = table
        .collisions()
        .iter()
        .map(|g| g.iter().map(KnotId::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    let expect = [
        "10_103 10_40",
        "10_103* 10_40*",
        "10_129 8_8*",
        "10_129* 8_8",
        "10_132 5_1*",
        "10_132* 5_1",
        "10_156 8_16",
        "10_156* 8_16*",
        "10_25 10_56",
        "10_25* 10_56*",
    ];
    assert_eq!(groups, expect);
}
