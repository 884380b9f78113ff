use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::Args;

use stickknot::diagram::candidate_axes;
use stickknot::invariants::{identify_polygon_along, KnotTable};
use stickknot::sampler::{ConfinedSampler, SamplerConfig};

use crate::report::{Format, Report};
use crate::{skein_budget, Verdict};

/// Projection axes tried per sample when identifying.
const SAMPLE_AXES: usize = 3;

#[derive(Args)]
pub struct SampleArgs {
    /// Number of edges.
    #[arg(long)]
    n: usize,
    /// Confinement radius about the centroid.
    #[arg(long)]
    radius: f64,
    #[arg(long)]
    seed: u64,
    /// Number of polygons to write.
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    /// Independent chains, one per thread; chain k uses stream k.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = 1000)]
    burn_in: u64,
    /// Accepted-or-rejected proposals between emitted samples.
    #[arg(long, default_value_t = 10)]
    stride: u64,
    /// Identify each sample and record the knot type in the manifest.
    #[arg(long)]
    identify: bool,
}

struct Row {
    stream: u64,
    index: usize,
    file: String,
    knot: String,
}

fn chain(args: &SampleArgs, stream: u64, count: usize, dir: &Path) -> Result<Vec<Row>> {
    let cfg = SamplerConfig { stream, burn_in: args.burn_in, stride: args.stride, ..SamplerConfig::new(args.n, args.radius, args.seed) };
    let sampler = ConfinedSampler::new(cfg)?;
    let axes = candidate_axes(SAMPLE_AXES);
    let budget = skein_budget()?;
    let mut rows = Vec::with_capacity(count);
    for (index, p) in sampler.take(count).enumerate() {
        let p = p?;
        let file = format!("sample_s{stream}_{index:06}.txt");
        std::fs::write(dir.join(&file), p.to_coordinate_text()).with_context(|| format!("cannot write {file}"))?;
        let knot = if args.identify {
            let id = identify_polygon_along(&p, &axes, KnotTable::shipped(), budget, args.seed)?;
            let names: Vec<String> = id.matches.iter().map(|k| k.to_string()).collect();
            if names.is_empty() { "unknown".to_string() } else { names.join("|") }
        } else {
            String::new()
        };
        rows.push(Row { stream, index, file, knot });
    }
    Ok(rows)
}

pub fn run(args: SampleArgs, format: Format) -> Result<Verdict> {
    let jobs = args.jobs.max(1);
    SamplerConfig { burn_in: args.burn_in, stride: args.stride, ..SamplerConfig::new(args.n, args.radius, args.seed) }
        .validate()?;
    std::fs::create_dir_all(&args.out_dir).with_context(|| format!("cannot create {}", args.out_dir.display()))?;

    let share = |k: usize| args.count / jobs + usize::from(k < args.count % jobs);
    let args = &args;
    let results: Vec<Result<Vec<Row>>> = std::thread::scope(|s| {
        let handles: Vec<_> =
            (0..jobs).map(|k| s.spawn(move || chain(args, k as u64, share(k), &args.out_dir))).collect();
        handles.into_iter().map(|h| h.join().expect("sampler thread panicked")).collect()
    });

    let mut manifest = String::from("seed,stream,index,n,radius,file,knot\n");
    let mut written = 0;
    for rows in results {
        for r in rows? {
            let _ = writeln!(manifest, "{},{},{},{},{},{},{}", args.seed, r.stream, r.index, args.n, args.radius, r.file, r.knot);
            written += 1;
        }
    }
    let manifest_path = args.out_dir.join("manifest.csv");
    std::fs::write(&manifest_path, manifest).with_context(|| format!("cannot write {}", manifest_path.display()))?;

    let mut rep = Report::new("confined sampling");
    rep.push("n", args.n)
        .push("radius", args.radius)
        .push("seed", args.seed)
        .push("chains", jobs)
        .push("samples", written)
        .push("manifest", manifest_path.display());
    print!("{}", rep.render(format));
    Ok(Verdict::Positive)
}
