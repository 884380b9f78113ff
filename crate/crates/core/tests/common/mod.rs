#![allow(dead_code)]

pub mod gauss;

use std::path::PathBuf;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use stickknot::geometry::{load_polygon, Direction, Polygon, Vec3};

pub const EQUILATERAL: [&str; 12] = [
    "9_18", "10_18", "10_58", "10_66", "10_68", "10_79", "10_80", "10_82", "10_84", "10_93", "10_100", "10_152",
];

pub fn fixture_text(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.txt"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn fixture(name: &str) -> Polygon {
    load_polygon(&fixture_text(name)).unwrap()
}

pub fn published_u() -> Vec<BigInt> {
    fixture_text("10_37_certificate")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.trim().parse().unwrap())
        .collect()
}

pub fn random_unit(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let r = v.norm();
        if r <= 1.0 && r > 1e-3 {
            return v / r;
        }
    }
}

pub fn random_direction(rng: &mut ChaCha8Rng) -> Direction {
    Direction::new(random_unit(rng)).unwrap()
}

/// A uniformly random rotation (axis, angle) and a translation.
pub fn random_rigid_motion(rng: &mut ChaCha8Rng) -> impl Fn(Vec3) -> Vec3 {
    let axis = random_unit(rng);
    let angle = rng.gen_range(0.0..std::f64::consts::TAU);
    let shift = random_unit(rng) * rng.gen_range(0.0..10.0);
    move |v: Vec3| v.rotated_about(axis, angle) + shift
}

pub fn random_polygon(rng: &mut ChaCha8Rng, n: usize) -> Polygon {
    let verts = (0..n).map(|_| random_unit(rng) * rng.gen_range(0.1..1.0)).collect();
    Polygon::new(verts).unwrap()
}

/// Every crossing-sign assignment on the at most 5-crossing reference
/// shadows and on distinct at most 5-crossing shadows of random polygons.
pub fn small_codes() -> Vec<stickknot::diagram::PdCode> {
    use rand::SeedableRng;
    use std::collections::BTreeSet;
    use stickknot::diagram::{perturb_axis_until_generic, project_to_diagram, PdCode};
    use stickknot::invariants::SHIPPED_PD_CODES;

    let mut shadows: Vec<PdCode> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut keep = |pd: PdCode, shadows: &mut Vec<PdCode>| {
        if pd.len() <= 5 && seen.insert(pd.to_string()) {
            shadows.push(pd);
        }
    };
    for line in SHIPPED_PD_CODES.lines() {
        let line = line.split('#').next().unwrap_or("");
        let Some((_, code)) = line.trim().split_once(' ') else { continue };
        keep(code.trim().parse().unwrap(), &mut shadows);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..400 {
        let p = random_polygon(&mut rng, 6 + k % 3);
        let Ok(axis) = perturb_axis_until_generic(&p, Direction::plus_z(), k as u64) else { continue };
        let (_, pd) = project_to_diagram(&p, axis).unwrap();
        keep(pd, &mut shadows);
    }

    let mut codes = Vec::new();
    let mut seen_codes = BTreeSet::new();
    for s in &shadows {
        for mask in 0..1u64 << s.len() {
            let pd = s.with_switched(mask);
            if seen_codes.insert(pd.to_string()) {
                codes.push(pd);
            }
        }
    }
    codes
}
