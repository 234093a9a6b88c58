//! Command line front end: parse braid words and strand colors, compute the
//! Alexander-Conway invariant through either route, dump Burau/Gassner and
//! operator matrices, and run the verification battery.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
//! failure.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gl11::braid::{Color, ColoredBraid};
use gl11::invariant::{self, TracePath};
use gl11::matrix::Mat;
use gl11::ring::LaurentPoly;
use gl11::schurweyl::{self, GassnerBasis};
use gl11::tensorrep::{factor_bit, represent};
use gl11::verify::{run_battery, BatteryConfig};

/// The tensor route materializes 2^N basis states; wider braids must use the
/// reduced-matrix route.
const MAX_TENSOR_WIDTH: usize = 14;

#[derive(Parser)]
#[command(name = "gl11", version, about = "Braid invariants over quantized gl(1|1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum PathArg {
    Tensor,
    Exterior,
    Both,
}

#[derive(Args)]
struct BraidArgs {
    /// Number of strands.
    #[arg(long)]
    width: usize,
    /// Whitespace-separated signed generators, e.g. "1 -2 1".
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    word: String,
    /// Per-strand colors "var:weight,var:weight,..."; default: one variable,
    /// weight zero.
    #[arg(long)]
    colors: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander-Conway polynomial and tau of the braid closure.
    Alexander {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long, value_enum, default_value_t = PathArg::Exterior)]
        path: PathArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Single-variable Burau word matrix (uniform colors).
    Burau {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Colored Gassner word matrix in the rescaled basis.
    Gassner {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sparse dump of the braid operator on the 2^N basis.
    Matrices {
        #[command(flatten)]
        braid: BraidArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the identity battery.
    Verify {
        /// Run a single identity: hopf, braid, phipsi, ambiproj, spectral,
        /// crossing, trace, markov.
        #[arg(long)]
        only: Option<String>,
        /// Width for the randomized checks.
        #[arg(long, default_value_t = 4)]
        width: usize,
        /// Samples per randomized check.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time the tensor route against the reduced-matrix route and check they
    /// agree.
    TraceCompare {
        #[command(flatten)]
        braid: BraidArgs,
    },
}

fn parse_colors(spec: &str, width: usize) -> Result<Vec<Color>, String> {
    let mut out = Vec::new();
    for part in spec.split(',') {
        let (var, weight) = part
            .split_once(':')
            .ok_or_else(|| format!("color {part:?} is not var:weight"))?;
        let var: usize = var.trim().parse().map_err(|_| format!("bad variable id {var:?}"))?;
        if var == 0 {
            return Err("variable ids are 1-based".into());
        }
        let weight: i64 =
            weight.trim().parse().map_err(|_| format!("bad integer weight {weight:?}"))?;
        out.push(Color::new(var, weight));
    }
    if out.len() != width {
        return Err(format!("expected {width} colors, got {}", out.len()));
    }
    Ok(out)
}

fn build_braid(args: &BraidArgs) -> Result<ColoredBraid, String> {
    if args.width == 0 {
        return Err("width must be at least 1".into());
    }
    let colors = match &args.colors {
        Some(s) => Some(parse_colors(s, args.width)?),
        None => None,
    };
    ColoredBraid::from_text(args.width, &args.word, colors).map_err(|e| e.to_string())
}

fn poly_json(p: &LaurentPoly) -> serde_json::Value {
    p.to_json()
}

fn var_names(nvars: usize) -> Vec<String> {
    LaurentPoly::default_var_names(nvars)
}

fn mat_json(m: &Mat<LaurentPoly>) -> serde_json::Value {
    let mut entries = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                entries.push(serde_json::json!({
                    "row": i,
                    "col": j,
                    "value": poly_json(&m[(i, j)]),
                }));
            }
        }
    }
    serde_json::json!({ "dim": m.rows(), "entries": entries })
}

fn mat_text(m: &Mat<LaurentPoly>, names: &[&str]) -> String {
    let mut rows = Vec::new();
    for i in 0..m.rows() {
        let cells: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].pretty(names)).collect();
        rows.push(format!("[{}]", cells.join(", ")));
    }
    format!("[{}]", rows.join(",\n "))
}

fn cmd_alexander(braid: &BraidArgs, path: PathArg, format: Format) -> Result<(), (u8, String)> {
    let b = build_braid(braid).map_err(|e| (1, e))?;
    if matches!(path, PathArg::Tensor | PathArg::Both) && b.width() > MAX_TENSOR_WIDTH {
        return Err((
            1,
            format!(
                "tensor path refuses width {} (limit {MAX_TENSOR_WIDTH}); use --path exterior",
                b.width()
            ),
        ));
    }
    let main_path = match path {
        PathArg::Tensor => TracePath::Tensor,
        _ => TracePath::Exterior,
    };
    let value = invariant::alexander_conway(&b, main_path).map_err(|e| (1, e.to_string()))?;
    let tau = invariant::tau(&b, main_path).map_err(|e| (1, e.to_string()))?;
    let delta = value.canonical.clone().expect("alexander_conway clears");
    let mut agree = None;
    if path == PathArg::Both {
        let other = invariant::alexander_conway(&b, TracePath::Tensor)
            .map_err(|e| (1, e.to_string()))?;
        agree = Some(other.raw == value.raw);
    }
    let uniform = b.is_uniform_variable();
    let delta_t = if uniform {
        Some(invariant::specialize_to_t(&delta).map_err(|e| (1, e.to_string()))?)
    } else {
        None
    };
    match format {
        Format::Text => {
            let names = var_names(delta.nvars());
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            if let Some(dt) = &delta_t {
                println!("delta = {}   (up to units +-t^k)", invariant::balanced_t_form(dt).pretty(&["t"]));
            } else {
                println!("delta = {}   (up to units, multivariable)", delta.pretty(&refs));
            }
            match &tau.canonical {
                Some(p) => println!("tau   = {}", p.pretty(&refs)),
                None => println!("tau   = {}", tau.raw),
            }
            if let Some(ok) = agree {
                println!("paths agree: {}", if ok { "yes" } else { "NO" });
            }
        }
        Format::Json => {
            let out = serde_json::json!({
                "width": b.width(),
                "delta": poly_json(&delta),
                "delta_t": delta_t.as_ref().map(poly_json),
                "tau": tau.raw.to_json(),
                "paths_agree": agree,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
    }
    if agree == Some(false) {
        return Err((3, "tensor and exterior paths disagree".into()));
    }
    Ok(())
}

fn cmd_burau(braid: &BraidArgs, format: Format) -> Result<(), (u8, String)> {
    let b = build_braid(braid).map_err(|e| (1, e))?;
    let g = schurweyl::gassner_matrices(&b, GassnerBasis::Tensor);
    let m = schurweyl::burau_specialize(&g).map_err(|e| (1, e.to_string()))?;
    match format {
        Format::Text => println!("{}", mat_text(&m, &["t"])),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&mat_json(&m)).expect("json")
        ),
    }
    Ok(())
}

fn cmd_gassner(braid: &BraidArgs, format: Format) -> Result<(), (u8, String)> {
    let b = build_braid(braid).map_err(|e| (1, e))?;
    let g = schurweyl::gassner_matrices(&b, GassnerBasis::Rescaled);
    match format {
        Format::Text => {
            let names = var_names(b.nvars());
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            println!("{}", mat_text(&g.mat, &refs));
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&mat_json(&g.mat)).expect("json")
        ),
    }
    Ok(())
}

fn cmd_matrices(braid: &BraidArgs, format: Format) -> Result<(), (u8, String)> {
    let b = build_braid(braid).map_err(|e| (1, e))?;
    if b.width() > MAX_TENSOR_WIDTH {
        return Err((1, format!("operator dump refuses width {} (limit {MAX_TENSOR_WIDTH})", b.width())));
    }
    let rep = represent(&b);
    let n = b.width();
    let bits = |s: usize| -> Vec<usize> { (1..=n).map(|i| factor_bit(s, i, n)).collect() };
    match format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = rep
                .op
                .entries()
                .map(|(r, c, v)| {
                    serde_json::json!({ "row": bits(r), "col": bits(c), "value": poly_json(v) })
                })
                .collect();
            let out = serde_json::json!({ "dim": rep.op.dim(), "entries": entries });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        Format::Text => {
            let names = var_names(b.nvars());
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            for (r, c, v) in rep.op.entries() {
                let fmt_bits = |b: Vec<usize>| {
                    b.into_iter().map(|x| x.to_string()).collect::<String>()
                };
                println!("{} -> {}: {}", fmt_bits(bits(r)), fmt_bits(bits(c)), v.pretty(&refs));
            }
        }
    }
    Ok(())
}

fn cmd_verify(
    only: Option<String>,
    width: usize,
    samples: usize,
    seed: u64,
    format: Format,
) -> Result<(), (u8, String)> {
    if let Some(id) = &only {
        if !gl11::verify::IDENTITY_IDS.contains(&id.as_str()) {
            return Err((1, format!("unknown identity {id:?}; known: {:?}", gl11::verify::IDENTITY_IDS)));
        }
    }
    let cfg = BatteryConfig { width, samples, seed, only };
    let reports = run_battery(&cfg);
    let mut all_ok = true;
    match format {
        Format::Text => {
            for r in &reports {
                println!(
                    "{} {:<9} ({:>5} ms): {}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.id,
                    r.millis,
                    r.detail
                );
                all_ok &= r.pass;
            }
        }
        Format::Json => {
            let list: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    all_ok &= r.pass;
                    serde_json::json!({
                        "id": r.id, "pass": r.pass, "millis": r.millis, "detail": r.detail,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&list).expect("json"));
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err((3, "verification failures".into()))
    }
}

fn cmd_trace_compare(braid: &BraidArgs) -> Result<(), (u8, String)> {
    let b = build_braid(braid).map_err(|e| (1, e))?;
    // the trace is an endomorphism trace only for component-consistent colors
    invariant::framing_correction(&b, b.nvars()).map_err(|e| (1, e.to_string()))?;
    let start = Instant::now();
    let exterior = invariant::markov_scalar(&b, TracePath::Exterior)
        .map_err(|e| (1, e.to_string()))?;
    let t_ext = start.elapsed();
    println!("exterior path: {:?}", t_ext);
    if b.width() > MAX_TENSOR_WIDTH {
        println!(
            "tensor path: skipped (width {} exceeds limit {MAX_TENSOR_WIDTH})",
            b.width()
        );
        return Ok(());
    }
    let start = Instant::now();
    let tensor =
        invariant::markov_scalar(&b, TracePath::Tensor).map_err(|e| (1, e.to_string()))?;
    let t_ten = start.elapsed();
    println!("tensor path:   {:?}", t_ten);
    if tensor == exterior {
        println!("paths agree: yes");
        Ok(())
    } else {
        println!("paths agree: NO");
        println!("  tensor   = {tensor}");
        println!("  exterior = {exterior}");
        Err((3, "paths disagree".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Alexander { braid, path, format } => cmd_alexander(braid, *path, *format),
        Command::Burau { braid, format } => cmd_burau(braid, *format),
        Command::Gassner { braid, format } => cmd_gassner(braid, *format),
        Command::Matrices { braid, format } => cmd_matrices(braid, *format),
        Command::Verify { only, width, samples, seed, format } => {
            cmd_verify(only.clone(), *width, *samples, *seed, *format)
        }
        Command::TraceCompare { braid } => cmd_trace_compare(braid),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
