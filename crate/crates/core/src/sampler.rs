//! Random closed equilateral polygons confined to a ball around their
//! centroid, generated by a Metropolis chain of crankshaft moves.

use std::f64::consts::PI;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::{edge_lengths, GeometryError, Polygon, Vec3};

/// Accepted moves between two drift corrections.
pub const RENORMALIZE_EVERY: u64 = 10_000;
/// Emitted samples have every edge length within this of 1.
pub const EMIT_TOLERANCE: f64 = 1e-12;
/// A drift correction moving any vertex further than this aborts the chain.
pub const MAX_CORRECTION: f64 = 1e-9;
/// Proposals tried when shrinking the start polygon into a tight ball.
pub const PRE_BURN_ATTEMPTS: u64 = 2_000_000;
/// Proposals between two tightenings of the start-up ball.
pub const SHRINK_EVERY: u64 = 50;
/// Proposals in the loose ball before it starts shrinking.
pub const WARM_UP: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SamplerError {
    #[error("invalid sampler configuration: {0}")]
    InvalidConfig(String),
    #[error("no {n}-gon state fits in radius {radius} after {attempts} proposals")]
    Infeasible { n: usize, radius: f64, attempts: u64 },
    #[error("drift correction of {0:e} exceeds the allowed {MAX_CORRECTION:e}")]
    Drift(f64),
    #[error("crankshaft pivots must satisfy i < j < n with vertices i and j distinct")]
    BadPivots,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SamplerConfig {
    pub n: usize,
    /// Largest allowed vertex distance from the centroid, in edge lengths.
    pub radius: f64,
    pub seed: u64,
    /// Independent chains sharing a seed use distinct stream numbers.
    pub stream: u64,
    /// Proposals before the first emitted sample.
    pub burn_in: u64,
    /// Proposals between consecutive samples.
    pub stride: u64,
}

impl SamplerConfig {
    pub fn new(n: usize, radius: f64, seed: u64) -> Self {
        SamplerConfig { n, radius, seed, stream: 0, burn_in: 1000, stride: 10 }
    }

    pub fn validate(&self) -> Result<(), SamplerError> {
        if self.n < 3 {
            return Err(SamplerError::InvalidConfig(format!("n = {} is below 3", self.n)));
        }
        if !(self.radius.is_finite() && self.radius >= 0.5) {
            return Err(SamplerError::InvalidConfig(format!("radius {} is below 1/2", self.radius)));
        }
        if self.burn_in == 0 || self.stride == 0 {
            return Err(SamplerError::InvalidConfig("burn_in and stride must be at least 1".into()));
        }
        Ok(())
    }
}

/// Rotates the vertices strictly between `i` and `j` about the line through
/// vertices `i` and `j`.
pub fn crankshaft_step(p: &Polygon, i: usize, j: usize, angle: f64) -> Result<Polygon, SamplerError> {
    let mut verts = p.vertices().to_vec();
    rotate_chain(&mut verts, i, j, angle)?;
    Ok(Polygon::new(verts)?)
}

fn rotate_chain(verts: &mut [Vec3], i: usize, j: usize, angle: f64) -> Result<(), SamplerError> {
    if i >= j || j >= verts.len() {
        return Err(SamplerError::BadPivots);
    }
    let (a, b) = (verts[i], verts[j]);
    let axis = b - a;
    if axis.norm() == 0.0 {
        return Err(SamplerError::BadPivots);
    }
    let axis = axis.normalized();
    for v in &mut verts[i + 1..j] {
        *v = a + (*v - a).rotated_about(axis, angle);
    }
    Ok(())
}

fn max_radius(verts: &[Vec3]) -> f64 {
    let c = verts.iter().fold(Vec3::ZERO, |s, &v| s + v) / verts.len() as f64;
    verts.iter().map(|&v| v.distance(c)).fold(0.0, f64::max)
}

fn max_deviation(verts: &[Vec3]) -> f64 {
    let n = verts.len();
    (0..n)
        .map(|i| (verts[(i + 1) % n].distance(verts[i]) - 1.0).abs())
        .fold(0.0, f64::max)
}

/// Pulls edge lengths back to 1 and the edge sum back to 0, returning the
/// largest vertex displacement.
fn renormalize(verts: &mut [Vec3]) -> f64 {
    let n = verts.len();
    let mut edges: Vec<Vec3> = (0..n).map(|i| verts[(i + 1) % n] - verts[i]).collect();
    for _ in 0..50 {
        for e in &mut edges {
            *e = e.normalized();
        }
        let gap = edges.iter().fold(Vec3::ZERO, |s, &e| s + e);
        if gap.norm() < 1e-16 {
            break;
        }
        let shift = gap / n as f64;
        for e in &mut edges {
            *e = *e - shift;
        }
    }
    let mut moved: f64 = 0.0;
    let mut v = verts[0];
    for i in 1..n {
        v = v + edges[i - 1];
        moved = moved.max(v.distance(verts[i]));
        verts[i] = v;
    }
    moved
}

/// Regular planar n-gon with unit edges.
pub fn regular_polygon(n: usize) -> Vec<Vec3> {
    let r = 0.5 / (PI / n as f64).sin();
    (0..n)
        .map(|k| {
            let t = 2.0 * PI * k as f64 / n as f64;
            Vec3::new(r * t.cos(), r * t.sin(), 0.0)
        })
        .collect()
}

/// The chain state; iterate to draw samples.
#[derive(Debug, Clone)]
pub struct ConfinedSampler {
    cfg: SamplerConfig,
    rng: ChaCha8Rng,
    verts: Vec<Vec3>,
    accepted_since_fix: u64,
    steps: u64,
    accepted: u64,
    emitted: u64,
    failed: bool,
}

pub fn random_confined_polygon_stream(cfg: SamplerConfig) -> Result<ConfinedSampler, SamplerError> {
    ConfinedSampler::new(cfg)
}

impl ConfinedSampler {
    pub fn new(cfg: SamplerConfig) -> Result<Self, SamplerError> {
        cfg.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(cfg.stream);
        let mut s = ConfinedSampler {
            verts: regular_polygon(cfg.n),
            cfg,
            rng,
            accepted_since_fix: 0,
            steps: 0,
            accepted: 0,
            emitted: 0,
            failed: false,
        };
        s.shrink_into_ball()?;
        Ok(s)
    }

    pub fn config(&self) -> &SamplerConfig {
        &self.cfg
    }

    /// Proposals made so far, including burn-in.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn acceptance_rate(&self) -> f64 {
        if self.steps == 0 {
            0.0
        } else {
            self.accepted as f64 / self.steps as f64
        }
    }

    fn propose(&mut self) -> Option<(usize, usize, f64)> {
        let n = self.cfg.n;
        if n < 4 {
            return None;
        }
        loop {
            let i = self.rng.gen_range(0..n);
            let j = self.rng.gen_range(0..n);
            let (i, j) = (i.min(j), i.max(j));
            if j - i >= 2 && j - i <= n - 2 {
                return Some((i, j, self.rng.gen_range(0.0..2.0 * PI)));
            }
        }
    }

    /// Runs the chain inside a ball that shrinks to the current radius every
    /// [`SHRINK_EVERY`] proposals until the configured radius is reached.
    /// The regular polygon locally minimizes the radius, so the ball starts
    /// at twice its size.
    fn shrink_into_ball(&mut self) -> Result<(), SamplerError> {
        let start = max_radius(&self.verts);
        if start <= self.cfg.radius {
            return Ok(());
        }
        let mut bound = 2.0 * start;
        let mut attempts = 0;
        while bound > self.cfg.radius {
            if attempts == PRE_BURN_ATTEMPTS || self.cfg.n < 4 {
                return Err(SamplerError::Infeasible { n: self.cfg.n, radius: self.cfg.radius, attempts });
            }
            attempts += 1;
            let (i, j, angle) = self.propose().expect("n >= 4");
            let mut trial = self.verts.clone();
            rotate_chain(&mut trial, i, j, angle)?;
            if max_radius(&trial) <= bound {
                self.verts = trial;
                self.after_accept()?;
            }
            if attempts % SHRINK_EVERY == 0 && attempts >= WARM_UP {
                bound = bound.min(max_radius(&self.verts)).max(self.cfg.radius);
            }
        }
        Ok(())
    }

    fn after_accept(&mut self) -> Result<(), SamplerError> {
        self.accepted_since_fix += 1;
        if self.accepted_since_fix >= RENORMALIZE_EVERY {
            self.fix_drift()?;
        }
        Ok(())
    }

    fn fix_drift(&mut self) -> Result<(), SamplerError> {
        self.accepted_since_fix = 0;
        let moved = renormalize(&mut self.verts);
        if moved > MAX_CORRECTION {
            return Err(SamplerError::Drift(moved));
        }
        Ok(())
    }

    /// One Metropolis step; returns whether the proposal was accepted.
    pub fn step(&mut self) -> Result<bool, SamplerError> {
        self.steps += 1;
        let Some((i, j, angle)) = self.propose() else {
            return Ok(false);
        };
        let mut trial = self.verts.clone();
        rotate_chain(&mut trial, i, j, angle)?;
        if max_radius(&trial) > self.cfg.radius {
            return Ok(false);
        }
        self.verts = trial;
        self.accepted += 1;
        self.after_accept()?;
        Ok(true)
    }

    fn next_sample(&mut self) -> Result<Polygon, SamplerError> {
        let k = if self.emitted == 0 { self.cfg.burn_in } else { self.cfg.stride };
        for _ in 0..k {
            self.step()?;
        }
        if max_deviation(&self.verts) > EMIT_TOLERANCE / 10.0 {
            self.fix_drift()?;
        }
        self.emitted += 1;
        let p = Polygon::new(self.verts.clone())?;
        debug_assert!(edge_lengths(&p).max_deviation_from(1.0) <= EMIT_TOLERANCE);
        Ok(p)
    }
}

impl Iterator for ConfinedSampler {
    type Item = Result<Polygon, SamplerError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let r = self.next_sample();
        self.failed = r.is_err();
        Some(r)
    }
}
