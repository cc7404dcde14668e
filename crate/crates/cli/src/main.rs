use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use lrc_core::analysis::{analyze, bound_table, BoundInputs};
use lrc_core::asymptotic::{default_curves, emit_curves, uniform_grid, CurveKind, CurveParams, ROpt, DEFAULT_GRID};
use lrc_core::constructions::{paper_example, simplex};
use lrc_core::io::{read_code_file, CodeFile, LoadedCode};
use lrc_core::locality::compute_locality;
use lrc_core::set_builder::{build_low_entropy_set, RepairFamily};
use lrc_core::verify::verify_paper;
use lrc_core::Error;

#[derive(Parser)]
#[command(name = "lrc", version, about = "Locality and bounds for linear locally repairable codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CodeSource {
    /// JSON code file.
    #[arg(long = "code", value_name = "FILE", conflicts_with = "example")]
    file: Option<PathBuf>,
    /// One of the built-in worked examples (1, 2 or 3).
    #[arg(long, value_name = "N")]
    example: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, locality, bounds and optimality of a code.
    Analyze {
        #[command(flatten)]
        source: CodeSource,
        /// Local distance; repeat for several.
        #[arg(long = "delta", required = true)]
        deltas: Vec<usize>,
        /// Largest repair set examined (default min(n, δ + k)).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Also write the JSON report here.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Add a generation timestamp to the report.
        #[arg(long)]
        timestamp: bool,
    },
    /// Every applicable finite-length bound for the given parameters.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        kappa: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Asymptotic rate bounds sampled on a δ_n grid, as CSV.
    Asymptotic {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Comma-separated curve names (default: prakash, cm_rdelta, abhmt, singleton_g, cmg).
        #[arg(long, value_delimiter = ',')]
        bounds: Option<Vec<String>>,
        /// Rate bound for unrestricted codes: mrrw or plotkin.
        #[arg(long, default_value = "mrrw")]
        ropt: String,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        /// CSV destination (standard output if omitted).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// The simplex code S(m, q).
    Simplex {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Write the code file here.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// A set of entropy at most λ and guaranteed size, with its construction trace.
    BuildSet {
        #[command(flatten)]
        source: CodeSource,
        #[arg(long)]
        delta: usize,
        /// Dimension-locality; computed when omitted.
        #[arg(long)]
        kappa: Option<usize>,
        #[arg(long)]
        lambda: usize,
        #[arg(long)]
        json: bool,
    },
    /// Reference checks on the worked examples, simplex codes and Griesmer function.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
}

/// A failure that maps to exit code 1 rather than 2.
#[derive(Debug)]
struct VerificationFailed(String);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for VerificationFailed {}

fn load(source: &CodeSource) -> anyhow::Result<(String, LoadedCode)> {
    match (&source.file, source.example) {
        (Some(path), _) => {
            let loaded = read_code_file(path).with_context(|| format!("reading {}", path.display()))?;
            Ok((path.display().to_string(), loaded))
        }
        (None, Some(which)) => {
            let e = paper_example(which)?;
            let declared_k = e.code.k();
            Ok((e.name, LoadedCode { code: e.code, declared_k, repair_sets: e.repair_sets, warnings: Vec::new() }))
        }
        (None, None) => anyhow::bail!(Error::InvalidParameters("give --code FILE or --example N".into())),
    }
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let stdout = io::stdout();
    match cli.command {
        Command::Analyze { source, deltas, cap, json, out, timestamp } => {
            let (name, loaded) = load(&source)?;
            let mut report = analyze(
                &name,
                &loaded.code,
                loaded.declared_k,
                &loaded.repair_sets,
                &deltas,
                cap,
                loaded.warnings,
            )?;
            if timestamp {
                report.timestamp = Some(chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
            }
            let text = serde_json::to_string_pretty(&report)?;
            if let Some(path) = out {
                write_file(&path, &text)?;
            }
            if json {
                writeln!(stdout.lock(), "{text}")?;
            } else {
                write!(stdout.lock(), "{report}")?;
            }
            let violated: Vec<String> = report
                .localities
                .iter()
                .flat_map(|a| a.verdicts.violated.iter().map(move |v| format!("{v} at δ = {}", a.delta)))
                .collect();
            if !violated.is_empty() {
                return Err(VerificationFailed(format!("bounds violated: {}", violated.join(", "))).into());
            }
        }
        Command::Bounds { n, q, k, d, r, delta, kappa, json } => {
            lrc_core::Field::new(q)?;
            let table = bound_table(&BoundInputs { n, q, k, d, r, delta, kappa });
            if json {
                writeln!(stdout.lock(), "{}", serde_json::to_string_pretty(&table)?)?;
            } else {
                write!(stdout.lock(), "{table}")?;
            }
        }
        Command::Asymptotic { r, delta, q, bounds, ropt, grid, out } => {
            lrc_core::Field::new(q)?;
            let ropt: ROpt = ropt.parse()?;
            let kinds = match bounds {
                Some(names) => names.iter().map(|s| s.parse::<CurveKind>()).collect::<Result<Vec<_>, _>>()?,
                None => default_curves(ropt),
            };
            let params = CurveParams { r, delta, q };
            let grid = uniform_grid(grid);
            match out {
                Some(path) => {
                    let f = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    let mut w = BufWriter::new(f);
                    emit_curves(&mut w, &params, &kinds, &grid)?;
                    w.flush()?;
                }
                None => emit_curves(stdout.lock(), &params, &kinds, &grid)?,
            }
        }
        Command::Simplex { m, q, out } => {
            let s = simplex(m, q)?;
            let d = s.min_distance()?.unwrap_or(0);
            writeln!(stdout.lock(), "S({m},{q}): [n={}, k={}, d={d}]", s.n(), s.k())?;
            let file = CodeFile::from_code(&s, &[]);
            match out {
                Some(path) => write_file(&path, &file.to_json())?,
                None => writeln!(stdout.lock(), "{}", file.to_json())?,
            }
        }
        Command::BuildSet { source, delta, kappa, lambda, json } => {
            let (_, loaded) = load(&source)?;
            let code = &loaded.code;
            let family = if loaded.repair_sets.is_empty() {
                let profile = compute_locality(code, delta, Some(code.n()))?;
                let mut fam = RepairFamily::from_profile(code, &profile)?;
                if let Some(k) = kappa {
                    fam = RepairFamily::new(code, &fam.sets, k, delta)?;
                }
                fam
            } else {
                let k = match kappa {
                    Some(k) => k,
                    None => loaded
                        .repair_sets
                        .iter()
                        .map(|s| code.entropy(s))
                        .collect::<Result<Vec<_>, _>>()?
                        .into_iter()
                        .max()
                        .unwrap_or(0),
                };
                RepairFamily::new(code, &loaded.repair_sets, k, delta)?
            };
            let built = build_low_entropy_set(code, &family, lambda)?;
            if json {
                writeln!(stdout.lock(), "{}", serde_json::to_string_pretty(&built)?)?;
            } else {
                let mut w = stdout.lock();
                writeln!(w, "λ = {} = {}·{} + {}", built.lambda, built.a, built.kappa, built.b)?;
                writeln!(w, "I = {}", built.set)?;
                writeln!(w, "H(I) = {} <= {}", built.entropy, built.lambda)?;
                writeln!(w, "|I| = {} >= {}", built.size, built.guaranteed_size)?;
                writeln!(w, "trace:")?;
                write!(w, "{}", built.trace)?;
            }
        }
        Command::VerifyPaper { json } => {
            let checks = verify_paper();
            if json {
                writeln!(stdout.lock(), "{}", serde_json::to_string_pretty(&checks)?)?;
            } else {
                let mut w = stdout.lock();
                for c in &checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(w, "[{status}] {}. {} ({:.2}s)", c.id, c.name, c.seconds)?;
                    for d in &c.details {
                        writeln!(w, "       {d}")?;
                    }
                }
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            if failed > 0 {
                return Err(VerificationFailed(format!("{failed} check(s) failed")).into());
            }
        }
    }
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<VerificationFailed>().is_some() {
        return 1;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::Construction { .. }) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
