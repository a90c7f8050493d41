use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parahextile::{from_json, to_json, to_svg, FillMode, RenderStyle};
use parahextile_core::{
    bisect_patch, build_hole_tiling, build_rotational_tiling, detect_symmetry, extract_hole,
    hexagon_for_hole, hexagon_for_n, make_hexagon, validate_patch, AngleDeg, BisectCase,
    BisectionSpec, EdgeContact, FlipSource, HexagonSpec, NoFlips, Patch, SeededFlips, TileError,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "parahextile",
    version,
    about = "Rotationally symmetric tilings by convex parallelohexagons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a prototype hexagon's angles
    Hexagon(HexagonArgs),
    /// Build an n-fold rotationally symmetric patch
    Tile(TileArgs),
    /// Build a patch around an m-gonal hole
    Hole(HoleArgs),
    /// Check a patch document for overlaps and gaps
    Validate {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Print the symmetry group of a patch document
    Symmetry {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Print the angle tables for rotational and hole prototypes
    Tables {
        #[arg(long, default_value_t = 18)]
        max: i64,
        #[arg(long = "max-m", default_value_t = 25)]
        max_m: i64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "order")]
struct HexagonOrder {
    #[arg(long)]
    n: Option<i64>,
    #[arg(long = "hole-m")]
    hole_m: Option<i64>,
}

#[derive(Args)]
struct HexagonArgs {
    #[command(flatten)]
    order: HexagonOrder,
    /// Angle B in degrees (`154.5` or `1080/7`); defaults to B = C
    #[arg(long, requires = "n")]
    b: Option<AngleDeg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fill {
    Chirality,
    Wedge,
    None,
}

#[derive(Args)]
struct Output {
    /// SVG output path
    #[arg(long)]
    out: PathBuf,
    /// Also write the patch document here
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Fill::Wedge)]
    fill: Fill,
}

#[derive(Args)]
struct TileArgs {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    b: Option<AngleDeg>,
    #[arg(long, default_value_t = 2)]
    depth: u32,
    /// Split every hexagon, e.g. `II:0.3`
    #[arg(long, value_parser = parse_bisection)]
    bisect: Option<BisectionSpec>,
    /// Flip bisected cells at random
    #[arg(long = "random-seed", requires = "bisect")]
    random_seed: Option<u64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct HoleArgs {
    #[arg(long)]
    m: i64,
    #[arg(long, requires = "b")]
    a: Option<AngleDeg>,
    #[arg(long, requires = "a")]
    b: Option<AngleDeg>,
    #[arg(long, default_value_t = 2)]
    depth: u32,
    #[arg(long, value_parser = parse_bisection)]
    bisect: Option<BisectionSpec>,
    #[arg(long = "random-seed", requires = "bisect")]
    random_seed: Option<u64>,
    #[command(flatten)]
    output: Output,
}

fn parse_bisection(s: &str) -> Result<BisectionSpec, String> {
    let (case, t) = s.split_once(':').ok_or("expected CASE:t, e.g. II:0.3")?;
    let case: BisectCase = case.parse().map_err(|e| format!("{e}"))?;
    let t: f64 = t.parse().map_err(|e| format!("bad t: {e}"))?;
    BisectionSpec::new(case, t).map_err(|e| format!("{e}"))
}

/// Failure with the process exit code it maps to.
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(2, e.to_string())
    }
}

#[derive(Serialize)]
struct Angles {
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
    #[serde(rename = "C")]
    c: String,
    #[serde(rename = "D")]
    d: String,
    #[serde(rename = "E")]
    e: String,
    #[serde(rename = "F")]
    f: String,
}

impl Angles {
    fn of(hex: &HexagonSpec, show: impl Fn(AngleDeg) -> String) -> Self {
        let [a, b, c, d, e, f] = hex.angles().map(show);
        Angles { a, b, c, d, e, f }
    }
}

#[derive(Serialize)]
struct HexagonReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<i64>,
    angles: Angles,
    rounded: Angles,
    class: String,
    rotation_orders: Vec<u32>,
}

fn hexagon(args: &HexagonArgs) -> Result<(), Failure> {
    let hex = match (args.order.n, args.order.hole_m) {
        (Some(n), _) => hexagon_for_n(n, args.b)?,
        (_, Some(m)) => hexagon_for_hole(m)?,
        _ => unreachable!("clap enforces exactly one of --n and --hole-m"),
    };
    let report = HexagonReport {
        n: args.order.n,
        m: args.order.hole_m,
        angles: Angles::of(&hex, |a| a.to_string()),
        rounded: Angles::of(&hex, |a| a.display_rounded(2)),
        class: format!("{:?}", hex.classify()),
        rotation_orders: hex.rotation_orders(),
    };
    emit(&(serde_json::to_string_pretty(&report)? + "\n"))
}

fn order_u32(x: i64, what: &str) -> Result<u32, Failure> {
    u32::try_from(x).map_err(|_| Failure(2, format!("{what} must be a positive integer")))
}

fn finish(
    patch: Patch,
    bisection: Option<BisectionSpec>,
    seed: Option<u64>,
    output: &Output,
) -> Result<(), Failure> {
    let patch = match bisection {
        Some(spec) => {
            let mut flips: Box<dyn FlipSource> = match seed {
                Some(s) => Box::new(SeededFlips::new(s)),
                None => Box::new(NoFlips),
            };
            bisect_patch(&patch, &spec, flips.as_mut())?
        }
        None => patch,
    };
    let style = RenderStyle {
        fill_mode: match output.fill {
            Fill::Chirality => FillMode::ByChirality,
            Fill::Wedge => FillMode::ByWedge,
            Fill::None => FillMode::None,
        },
        ..RenderStyle::default()
    };
    write(&output.out, &to_svg(&patch, &style)?)?;
    if let Some(path) = &output.json {
        write(path, &to_json(&patch))?;
    }
    emit(&format!(
        "{} tiles written to {}\n",
        patch.len(),
        output.out.display()
    ))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure(2, format!("cannot write {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Patch, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure(2, format!("cannot read {}: {e}", path.display())))?;
    Ok(from_json(&text)?)
}

fn validate(path: &Path) -> Result<(), Failure> {
    let patch = load(path)?;
    let report = validate_patch(&patch)?;
    let mut out = String::new();
    writeln!(out, "tiles: {}", patch.len())?;
    writeln!(out, "overlapping pairs: {}", report.overlap_pairs.len())?;
    for (i, j) in &report.overlap_pairs {
        writeln!(out, "  overlap {i} {j}")?;
    }
    writeln!(out, "bad vertices: {}", report.bad_vertices.len())?;
    for (p, residual) in &report.bad_vertices {
        writeln!(
            out,
            "  ({:.6}, {:.6}) residual {:.9}",
            p.x,
            p.y,
            residual.to_f64()
        )?;
    }
    writeln!(
        out,
        "interior vertices: {} ({} exact)",
        report.interior_vertices, report.exact_interior_vertices
    )?;
    let contact = match report.edge_contact {
        EdgeContact::EdgeToEdge => "edge-to-edge",
        EdgeContact::NonEdgeToEdge => "non-edge-to-edge",
    };
    writeln!(out, "contact: {contact}")?;
    if let Ok(hole) = extract_hole(&patch) {
        writeln!(
            out,
            "hole: {}-gon, symmetry {}",
            hole.boundary.len(),
            hole.symmetry
        )?;
    }
    if report.passed {
        writeln!(out, "valid")?;
        emit(&out)
    } else {
        emit(&out)?;
        Err(Failure(1, "invalid".into()))
    }
}

fn tables(max: i64, max_m: i64) -> Result<String, Failure> {
    let mut out = String::new();
    writeln!(out, "rotational prototypes (B = C)")?;
    writeln!(out, "{:>4}  {:>8}  {:>8}", "n", "A", "B = C")?;
    for n in 3..=max {
        let hex = hexagon_for_n(n, None)?;
        writeln!(
            out,
            "{n:>4}  {:>8}  {:>8}",
            hex.a().display_rounded(2),
            hex.b().display_rounded(2)
        )?;
    }
    writeln!(out)?;
    writeln!(out, "hole prototypes (B = C)")?;
    writeln!(out, "{:>4}  {:>8}  {:>8}  {:>4}", "m", "A", "B = C", "n")?;
    for m in 5..=max_m {
        let hex = hexagon_for_hole(m)?;
        let n = hex
            .a()
            .divides_full_turn()
            .map(|n| n.to_string())
            .unwrap_or_default();
        writeln!(
            out,
            "{m:>4}  {:>8}  {:>8}  {n:>4}",
            hex.a().display_rounded(2),
            hex.b().display_rounded(2)
        )?;
    }
    Ok(out)
}

/// Write to stdout, treating a closed pipe as success.
fn emit(text: &str) -> Result<(), Failure> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Hexagon(args) => hexagon(&args),
        Command::Tile(args) => {
            let hex = hexagon_for_n(args.n, args.b)?;
            let patch = build_rotational_tiling(&hex, order_u32(args.n, "n")?, args.depth)?;
            finish(patch, args.bisect, args.random_seed, &args.output)
        }
        Command::Hole(args) => {
            let hex = match (args.a, args.b) {
                (Some(a), Some(b)) => make_hexagon(a, b)?,
                _ => hexagon_for_hole(args.m)?,
            };
            let patch = build_hole_tiling(&hex, order_u32(args.m, "m")?, args.depth)?;
            finish(patch, args.bisect, args.random_seed, &args.output)
        }
        Command::Validate { input } => validate(&input),
        Command::Symmetry { input } => {
            let patch = load(&input)?;
            match detect_symmetry(&patch) {
                Ok(sym) => emit(&format!("{sym}\n")),
                // only the identity survives, e.g. after random flips
                Err(TileError::Degenerate) if !patch.is_empty() => emit("C1\n"),
                Err(e) => Err(e.into()),
            }
        }
        Command::Tables { max, max_m } => emit(&tables(max, max_m)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
