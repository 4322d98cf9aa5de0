use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eiii_atlas::eiii::{constrain, orbit_sample, plucker_residual, pure_frame, ChartKind, ChartPoint};
use eiii_atlas::fierz::{derive_table, sectors, Sector};
use eiii_atlas::liealg::{Algebra, JacobiMode, StructureConstants};
use eiii_atlas::rep27::Vector27;
use eiii_atlas::rng::Rng;
use eiii_atlas::suites::run_suite;
use eiii_atlas::{octonion, AtlasError};

#[derive(Parser)]
#[command(name = "eiii-atlas", version, about = "Exact checks for spinors, octonions, exceptional algebras and the Cayley plane")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Jacobi {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Fierz,
    Octonion,
    Structure,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and print its JSON report.
    Verify {
        /// all, clifford, fierz, octonion, liealg, rep27, eiii or albert
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: u64,
        #[arg(long, value_enum, default_value = "exhaustive")]
        jacobi: Jacobi,
        /// Triples drawn for the e8 check in sampled mode.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        /// Include elapsed_ms (breaks byte-identical reports).
        #[arg(long)]
        timing: bool,
    },
    /// Print a Fierz, octonion or structure-constant table.
    Tables {
        kind: TableKind,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        sector: Option<String>,
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Assemble a 27-vector from chart parameters and check the quadratic relations.
    Solve {
        /// s, tplus, tminus or xinfty
        chart: String,
        #[arg(long)]
        input: std::path::PathBuf,
    },
    /// Print seeded points on the orbit of the lowest weight.
    Sample {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        steps: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

/// A failure with its exit code: 1 for failed checks or preconditions, 2 for usage.
struct Exit(u8, String);

fn usage(msg: impl Into<String>) -> Exit {
    Exit(2, msg.into())
}

/// Writes to stdout; a reader that closes the pipe early is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| if text.ends_with('\n') { Ok(()) } else { out.write_all(b"\n") });
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialise")
}

fn verify(suite: &str, seed: u64, trials: u64, jacobi: Jacobi, budget: u64, timing: bool) -> Result<bool, Exit> {
    let mode = match jacobi {
        Jacobi::Exhaustive => JacobiMode::Exhaustive,
        Jacobi::Sampled => JacobiMode::Sampled(budget),
    };
    let start = Instant::now();
    let mut report = run_suite(suite, seed, trials, mode).map_err(|e| usage(e.to_string()))?;
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    emit(&report.to_json_string());
    Ok(report.all_passed())
}

fn structure_text(t: &StructureConstants) -> String {
    let mut out = format!("{} dim {}\n", t.algebra.name(), t.dim);
    for i in 0..t.dim {
        for j in (i + 1)..t.dim {
            let e = t.entry(i, j);
            if e.is_empty() {
                continue;
            }
            let terms: Vec<String> = e.iter().map(|(k, c)| format!("({c}) e{k}")).collect();
            out.push_str(&format!("[e{i}, e{j}] = {}\n", terms.join(" + ")));
        }
    }
    out
}

fn tables(kind: TableKind, dim: Option<usize>, sector: Option<String>, algebra: Option<String>, format: Format) -> Result<(), Exit> {
    let text = match kind {
        TableKind::Octonion => match format {
            Format::Json => pretty(&octonion::table_json()),
            Format::Text => octonion::table_text(),
        },
        TableKind::Fierz => {
            let dim = dim.ok_or_else(|| usage("tables fierz needs --dim 8, 10 or 16"))?;
            let list = match sector {
                Some(s) => vec![Sector::parse(&s).map_err(|e| usage(e.to_string()))?],
                None => sectors(dim).map_err(|e| usage(e.to_string()))?,
            };
            let mut found = Vec::new();
            for s in list {
                found.push(derive_table(dim, s).map_err(|e| usage(e.to_string()))?);
            }
            match format {
                Format::Json => pretty(&Value::Array(found.iter().map(|t| t.to_json()).collect())),
                Format::Text => found.iter().map(|t| t.to_text()).collect::<Vec<_>>().join("\n"),
            }
        }
        TableKind::Structure => {
            let name = algebra.ok_or_else(|| usage("tables structure needs --algebra g2, f4, e6 or e8"))?;
            let a = Algebra::parse(&name).map_err(|e| usage(e.to_string()))?;
            let t = StructureConstants::get(a).map_err(|e| Exit(1, e.to_string()))?;
            match format {
                Format::Json => serde_json::to_string(&t.to_json()).expect("values serialise"),
                Format::Text => structure_text(t),
            }
        }
    };
    emit(&text);
    Ok(())
}

fn residual_summary(p: &Vector27) -> (bool, Value) {
    let r = plucker_residual(p);
    let nonzero = r.iter().filter(|c| !c.is_zero()).count();
    (nonzero == 0, json!({"components": r.len(), "nonzero": nonzero, "zero": nonzero == 0}))
}

fn solve(chart: &str, input: &std::path::Path) -> Result<bool, Exit> {
    let kind = ChartKind::parse(chart).map_err(|e| usage(e.to_string()))?;
    if kind == ChartKind::Gr24 {
        return Err(usage("solve takes s, tplus, tminus or xinfty"));
    }
    let raw = std::fs::read_to_string(input).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    let v: Value = serde_json::from_str(&raw).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    // accept either {"chart", "params"} or the bare parameter object
    let params = match v.get("params") {
        Some(p) => {
            if let Some(c) = v.get("chart").and_then(|c| c.as_str()) {
                if c != kind.name() {
                    return Err(usage(format!("input is for chart {c}, not {}", kind.name())));
                }
            }
            p.clone()
        }
        None => v,
    };
    let point = ChartPoint::from_json(&json!({"chart": kind.name(), "params": params})).map_err(|e| Exit(1, e.to_string()))?;
    let (point, projected) = match point {
        ChartPoint::XInfty { psi0, f, k, ubar, s } => {
            let frame = pure_frame(&psi0).map_err(|e| Exit(1, e.to_string()))?;
            let c = constrain(&frame, &k, &ubar);
            (ChartPoint::XInfty { psi0, f, k: c.k, ubar: c.ubar, s }, c.projected)
        }
        p => (p, false),
    };
    let p = point.assemble().map_err(|e| Exit(1, e.to_string()))?;
    let (zero, residual) = residual_summary(&p);
    let mut out = json!({"chart": kind.name(), "point": p.to_json(), "residual": residual});
    if kind == ChartKind::XInfty {
        out["projected"] = json!(projected);
        if projected {
            out["warnings"] = json!(["projected"]);
        }
    }
    emit(&pretty(&out));
    Ok(zero)
}

fn sample(seed: u64, steps: usize, count: usize) -> Result<bool, Exit> {
    let mut rng = Rng::new(seed).fork("sample");
    let mut points = Vec::new();
    let mut all_zero = true;
    for index in 0..count {
        let word_seed = rng.next_u64();
        let p = if steps == 0 {
            Vector27::lowest()
        } else {
            orbit_sample(word_seed, steps).map_err(|e: AtlasError| Exit(1, e.to_string()))?
        };
        let (zero, residual) = residual_summary(&p);
        all_zero &= zero;
        points.push(json!({"index": index, "word_seed": word_seed, "point": p.to_json(), "residual": residual}));
    }
    emit(&serde_json::to_string(&json!({"seed": seed, "steps": steps, "count": count, "points": points})).expect("values serialise"));
    Ok(all_zero)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Verify { suite, seed, trials, jacobi, budget, timing } => verify(&suite, seed, trials, jacobi, budget, timing),
        Cmd::Tables { kind, dim, sector, algebra, format } => tables(kind, dim, sector, algebra, format).map(|_| true),
        Cmd::Solve { chart, input } => solve(&chart, &input),
        Cmd::Sample { seed, steps, count } => sample(seed, steps, count),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Exit(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
