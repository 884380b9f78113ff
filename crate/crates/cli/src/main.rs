//! `stickknot`: certify, identify and analyze polygonal knots.
//!
//! Exit status is 0 on success, 1 on a negative verdict and 2 on bad input.

mod report;
mod sample;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use stickknot::bounds::{check_conjecture, BoundsTable};
use stickknot::equilateral::certify_equilateral;
use stickknot::geometry::{load_polygon, Direction, Polygon};
use stickknot::invariants::{identify_polygon, KnotTable, DEFAULT_CROSSING_BUDGET};
use stickknot::render::{render_svg, RenderOptions};
use stickknot::superbridge::{
    find_gordan_certificate, superbridge_number, verify_gordan_certificate, GordanOutcome, IntegerPolygon,
};

use report::{Format, Report};

/// Environment variable overriding the skein crossing budget.
pub const BUDGET_VAR: &str = "STICKKNOT_SKEIN_BUDGET";

#[derive(Parser)]
#[command(name = "stickknot", version, about = "Certify, identify and analyze polygonal knots")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Millett-Rawdon equilateral criterion.
    Certify { file: PathBuf },
    /// Identify the knot type by HOMFLY polynomial.
    Identify {
        file: PathBuf,
        /// Seed for axis perturbation.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact superbridge number.
    Sb { file: PathBuf },
    /// Gordan certificate that no direction alternates on every edge.
    CertifySb {
        /// Vertex file with integer coordinates.
        file: PathBuf,
        /// Verify this certificate (one integer per line) instead of searching.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Sample random confined equilateral polygons.
    Sample(sample::SampleArgs),
    /// Inspect the bounds table.
    Table {
        #[command(subcommand)]
        action: TableAction,
        /// Use this CSV instead of the shipped table.
        #[arg(long, global = true)]
        file: Option<PathBuf>,
    },
    /// Draw an orthographic projection as SVG.
    Render {
        file: PathBuf,
        /// Viewing direction as x,y,z.
        #[arg(long, default_value = "0,0,1")]
        axis: Direction,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum TableAction {
    /// Check propagation closure and the superbridge conjecture.
    Check,
    /// Print one knot's entry.
    Show { knot: String },
}

pub enum Verdict {
    Positive,
    Negative,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn polygon(path: &Path) -> Result<Polygon> {
    load_polygon(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn skein_budget() -> Result<usize> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().with_context(|| format!("{BUDGET_VAR}={v:?} is not a count")),
        Err(_) => Ok(DEFAULT_CROSSING_BUDGET),
    }
}

fn emit(report: &Report, format: Format) {
    print!("{}", report.render(format));
}

fn certify(file: &Path, format: Format) -> Result<Verdict> {
    let r = certify_equilateral(&polygon(file)?)?;
    let mut rep = Report::new(format!("equilateral certification of {}", file.display()));
    for (k, v) in r.key_values() {
        rep.push(k, v);
    }
    emit(&rep, format);
    Ok(if r.certified { Verdict::Positive } else { Verdict::Negative })
}

fn identify(file: &Path, seed: u64, format: Format) -> Result<Verdict> {
    let p = polygon(file)?;
    let id = identify_polygon(&p, KnotTable::shipped(), skein_budget()?, seed)?;
    let ids: Vec<String> = id.matches.iter().map(|k| k.to_string()).collect();
    let names: Vec<String> = id.names().into_iter().collect();
    let a = id.axis.unit();
    let mut rep = Report::new(format!("identification of {}", file.display()));
    rep.push("knot", if names.is_empty() { "unknown".to_string() } else { names.join(" ") })
        .push("matches", ids.join(" "))
        .push("crossings", id.pd.len())
        .push("axis", format!("{:.6},{:.6},{:.6}", a.x, a.y, a.z))
        .push("homfly", &id.homfly)
        .push("pd", &id.pd);
    emit(&rep, format);
    Ok(if names.is_empty() { Verdict::Negative } else { Verdict::Positive })
}

fn sb(file: &Path, format: Format) -> Result<Verdict> {
    let p = polygon(file)?;
    let r = superbridge_number(&p)?;
    let w = r.witness_direction.unit();
    let mut rep = Report::new(format!("superbridge number of {}", file.display()));
    rep.push("sb", r.value)
        .push("n", p.len())
        .push("witness", format!("{:?},{:?},{:?}", w.x, w.y, w.z))
        .push("cells", r.cell_count);
    emit(&rep, format);
    Ok(Verdict::Positive)
}

fn certify_sb(file: &Path, certificate: Option<&Path>, format: Format) -> Result<Verdict> {
    let p = IntegerPolygon::parse(&read(file)?).with_context(|| format!("{}", file.display()))?;
    let mut rep = Report::new(format!("Gordan alternative for {}", file.display()));
    let verdict = if let Some(path) = certificate {
        let u = read(path)?
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
            .filter(|l| !l.is_empty())
            .map(|l| l.parse().with_context(|| format!("{}: {l:?} is not an integer", path.display())))
            .collect::<Result<Vec<_>>>()?;
        let ok = verify_gordan_certificate(&p, &u)?;
        let shown: Vec<String> = u.iter().map(|x| x.to_string()).collect();
        rep.push("verified", ok).push("u", format!("({})", shown.join(",")));
        if ok {
            rep.push("sb_below", p.len() / 2);
        }
        if ok { Verdict::Positive } else { Verdict::Negative }
    } else {
        match find_gordan_certificate(&p)? {
            GordanOutcome::Certificate(c) => {
                rep.push("branch", "certificate").push("u", &c).push("sb_below", p.len() / 2);
                Verdict::Positive
            }
            GordanOutcome::Alternating { v, t } => {
                let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                rep.push("branch", "alternation-witness").push("v", format!("({})", v.join(","))).push("t", t);
                Verdict::Negative
            }
        }
    };
    emit(&rep, format);
    Ok(verdict)
}

fn load_table(file: Option<&Path>) -> Result<BoundsTable> {
    match file {
        Some(f) => Ok(BoundsTable::load(&read(f)?).with_context(|| format!("{}", f.display()))?),
        None => Ok(BoundsTable::shipped().clone()),
    }
}

fn table_check(file: Option<&Path>, format: Format) -> Result<Verdict> {
    let table = load_table(file)?;
    let mut rep = Report::new("bounds table check");
    rep.push("entries", table.entries.len());
    let unsettled = match table.unsettled() {
        Ok(u) => u,
        Err(e) => {
            rep.push("consistent", false).push("error", e);
            emit(&rep, format);
            return Ok(Verdict::Negative);
        }
    };
    let violations: Vec<String> = table
        .entries
        .iter()
        .filter(|e| e.crossing_number >= 7 && !check_conjecture(e.crossing_number, e.sb.hi).unwrap_or(true))
        .map(|e| e.knot.clone())
        .collect();
    let max_sb = table.entries.iter().map(|e| e.sb.hi).max().unwrap_or(0);
    rep.push("consistent", true)
        .push("fixed_point", unsettled.is_empty())
        .push("unsettled", unsettled.join(" "))
        .push("max_sb_hi", max_sb)
        .push("conjecture_holds", violations.is_empty())
        .push("violations", violations.join(" "));
    emit(&rep, format);
    Ok(if unsettled.is_empty() && violations.is_empty() { Verdict::Positive } else { Verdict::Negative })
}

fn table_show(file: Option<&Path>, knot: &str, format: Format) -> Result<Verdict> {
    let table = load_table(file)?;
    let Some(e) = table.get(knot) else { bail!("knot {knot:?} is not in the table") };
    let mut rep = Report::new(format!("bounds for {knot}"));
    rep.push("knot", &e.knot)
        .push("cr", e.crossing_number)
        .push("bridge", e.bridge_index.map(|b| b.to_string()).unwrap_or_default())
        .push("stick", e.stick)
        .push("eqstick", e.eqstick)
        .push("sb", e.sb)
        .push("provenance", &e.provenance);
    emit(&rep, format);
    Ok(Verdict::Positive)
}

fn render(file: &Path, axis: Direction, out: Option<&Path>) -> Result<Verdict> {
    let svg = render_svg(&polygon(file)?, axis, &RenderOptions::default())?;
    match out {
        Some(path) => std::fs::write(path, svg).with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{svg}"),
    }
    Ok(Verdict::Positive)
}

fn run(cli: Cli) -> Result<Verdict> {
    let f = cli.format;
    match cli.command {
        Command::Certify { file } => certify(&file, f),
        Command::Identify { file, seed } => identify(&file, seed, f),
        Command::Sb { file } => sb(&file, f),
        Command::CertifySb { file, certificate } => certify_sb(&file, certificate.as_deref(), f),
        Command::Sample(args) => sample::run(args, f),
        Command::Table { action: TableAction::Check, file } => table_check(file.as_deref(), f),
        Command::Table { action: TableAction::Show { knot }, file } => table_show(file.as_deref(), &knot, f),
        Command::Render { file, axis, out } => render(&file, axis, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Verdict::Positive) => ExitCode::SUCCESS,
        Ok(Verdict::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
