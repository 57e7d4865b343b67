//! `knotwidth` command-line tool.
//!
//! Exit codes: 0 on success, 1 when a library operation rejects its input,
//! 2 for usage errors and unparseable input (the message carries a location).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knotwidth::diagram::{certify_nontrivial, jones, writhe, Certificate};
use knotwidth::family::{enumerate_min_width, verify_family, FamilyError, FamilyParams};
use knotwidth::morse::width_from_tuple;
use knotwidth::plat::{jm_distance, plat_braid, plat_closure, PlatError, PlatSpec};
use knotwidth::tangle::{check_hypotheses, predict_bridge_number, required_distance, DistanceBound, TangleCert};
use knotwidth::{DiagramError, MorseEmbedding, PdDiagram, ThinThickTuple};

#[derive(Parser)]
#[command(
    name = "knotwidth",
    version,
    about = "Width, bridge number and diagram invariants of knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Level widths, thin-thick tuple, width and bridge number of an event string.
    Width {
        /// Critical points bottom to top: `m` for a minimum, `M` for a maximum.
        #[arg(long)]
        events: String,
    },
    /// Width of a thin-thick tuple `a1,b1,a2,...`.
    TupleWidth {
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
    },
    /// Plat closure of a plat spec file.
    Plat {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Pd)]
        emit: Emit,
    },
    /// Distance lower bound `ceil(n/(2(k-2)))` for a 2k-plat with n rows.
    JmDistance {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Jones polynomial of a PD file.
    Jones {
        #[arg(long)]
        pd: PathBuf,
    },
    /// Nontriviality certificate for a PD file.
    Certify {
        #[arg(long)]
        pd: PathBuf,
    },
    /// Bridge number of a sum of two n-strand tangles.
    PredictBridge {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        b1: u32,
        #[arg(long)]
        b2: u32,
        #[arg(long, allow_hyphen_values = true)]
        d1: i64,
        #[arg(long, allow_hyphen_values = true)]
        d2: i64,
    },
    /// Full verification report for a family parameter file.
    VerifyFamily {
        /// Parameter file; the minimal 73-row family when omitted.
        #[arg(long)]
        params: Option<PathBuf>,
        /// Also write the report to this path.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Minimum admissible width over thin-thick tuples.
    Enumerate {
        #[arg(long)]
        max_thick: usize,
        #[arg(long)]
        max_entry: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Pd,
    Braid,
}

/// A failed run: `Usage` exits 2, `Domain` exits 1.
#[derive(Debug)]
enum Failure {
    Usage(anyhow::Error),
    Domain(anyhow::Error),
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(anyhow::anyhow!(msg.into()))
    }

    fn domain(e: impl Into<anyhow::Error>) -> Self {
        Failure::Domain(e.into())
    }
}

/// Output so far plus the failure, so partial reports still reach stdout.
type Run = Result<String, (String, Failure)>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parse_events(s: &str) -> Result<MorseEmbedding, Failure> {
    if let Some((i, c)) = s.chars().enumerate().find(|&(_, c)| c != 'm' && c != 'M') {
        return Err(Failure::usage(format!(
            "--events column {}: unexpected {c:?}, expected 'm' or 'M'",
            i + 1
        )));
    }
    s.parse().map_err(Failure::domain)
}

fn parse_tuple(s: &str) -> Result<ThinThickTuple, Failure> {
    let values = s
        .split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Failure::usage(format!("--tuple entry {}: {:?} is not an integer", i + 1, t.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    ThinThickTuple::from_interleaved(&values).map_err(Failure::domain)
}

fn diagram_failure(path: &Path, e: DiagramError) -> Failure {
    match e {
        DiagramError::Parse(p) => Failure::usage(format!("{}:{}:{}: {}", path.display(), p.line, p.column, p.message)),
        e => Failure::domain(e),
    }
}

fn read_pd(path: &Path) -> Result<PdDiagram, Failure> {
    read(path)?.parse().map_err(|e| diagram_failure(path, e))
}

fn plat_failure(path: &Path, e: PlatError) -> Failure {
    match e {
        PlatError::Format(m) => Failure::usage(format!("{}: {m}", path.display())),
        e => Failure::domain(e),
    }
}

fn family_failure(path: &Path, e: FamilyError) -> Failure {
    match e {
        FamilyError::Format(m) => Failure::usage(format!("{}: {m}", path.display())),
        e => Failure::domain(e),
    }
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn plain(r: Result<String, Failure>) -> Run {
    r.map_err(|f| (String::new(), f))
}

fn run(cmd: Command) -> Run {
    match cmd {
        Command::Width { events } => plain(parse_events(&events).map(|e| {
            format!(
                "levels: {}\ntuple: {}\nwidth: {}\nbridge: {}\n",
                joined(&e.level_widths()),
                e.thin_thick(),
                e.width(),
                e.bridge_number()
            )
        })),
        Command::TupleWidth { tuple } => plain(parse_tuple(&tuple).map(|t| format!("{}\n", width_from_tuple(&t)))),
        Command::Plat { spec, emit } => plain((|| {
            let p = PlatSpec::from_toml(&read(&spec)?).map_err(|e| plat_failure(&spec, e))?;
            Ok(match emit {
                Emit::Braid => format!("{}\n", plat_braid(&p)),
                Emit::Pd => plat_closure(&p).map_err(Failure::domain)?.to_string(),
            })
        })()),
        Command::JmDistance { k, n } => plain(jm_distance(k, n).map(|d| format!("{d}\n")).map_err(Failure::domain)),
        Command::Jones { pd } => plain((|| {
            let d = read_pd(&pd)?;
            let v = jones(&d).map_err(|e| diagram_failure(&pd, e))?;
            Ok(format!("{}\n", v.display_with("t")))
        })()),
        Command::Certify { pd } => plain((|| {
            let d = read_pd(&pd)?;
            let c = certify_nontrivial(&d).map_err(|e| diagram_failure(&pd, e))?;
            let w = writhe(&d).map_err(|e| diagram_failure(&pd, e))?;
            let mut out = String::new();
            let _ = writeln!(out, "crossings: {}", d.crossing_count());
            let _ = writeln!(out, "writhe: {w}");
            let _ = writeln!(out, "reduced-alternating: {}", c.reduced_alternating);
            let _ = writeln!(out, "jones: {}", c.jones.display_with("t"));
            let verdict = match &c.certificate {
                Certificate::ReducedAlternating { crossings } => {
                    format!("nontrivial (reduced alternating, {crossings} crossings)")
                }
                Certificate::JonesWitness { .. } => "nontrivial (jones != 1)".to_string(),
                Certificate::Inconclusive => "inconclusive".to_string(),
            };
            let _ = writeln!(out, "certificate: {verdict}");
            Ok(out)
        })()),
        Command::PredictBridge { n, b1, b2, d1, d2 } => predict(n, b1, b2, d1, d2),
        Command::VerifyFamily { params, report } => verify(params, report),
        Command::Enumerate { max_thick, max_entry } => {
            let Some(e) = enumerate_min_width(max_thick, max_entry) else {
                return plain(Err(Failure::domain(anyhow::anyhow!(
                    "no admissible tuple with at most {max_thick} thick levels and entries <= {max_entry}"
                ))));
            };
            let mut out = format!("min-width: {}\n", e.min_width);
            for t in &e.attaining {
                let _ = writeln!(out, "attaining: {t}");
            }
            let _ = writeln!(out, "examined: {}\nadmitted: {}", e.examined, e.admitted);
            Ok(out)
        }
    }
}

fn predict(n: u32, b1: u32, b2: u32, d1: i64, d2: i64) -> Run {
    let cert = |b, d| {
        TangleCert::new(n, b, DistanceBound::asserted(d, "command line"))
            .map_err(|e| (String::new(), Failure::domain(e)))
    };
    let (t1, t2) = (cert(b1, d1)?, cert(b2, d2)?);
    let mut out = String::new();
    if let Ok(t) = required_distance(&t1, &t2) {
        let _ = writeln!(out, "threshold: {}", t.value);
    }
    let checks: String = check_hypotheses(&t1, &t2)
        .iter()
        .map(|h| format!("{} {h}\n", if h.holds() { "ok" } else { "FAILED" }))
        .collect();
    match predict_bridge_number(&t1, &t2) {
        Ok(b) => Ok(format!("{b}\n{out}{checks}")),
        Err(e) => Err((out + &checks, Failure::domain(e))),
    }
}

fn verify(params: Option<PathBuf>, report: Option<PathBuf>) -> Run {
    let p = match &params {
        Some(path) => {
            let text = read(path).map_err(|f| (String::new(), f))?;
            FamilyParams::from_toml(&text).map_err(|e| (String::new(), family_failure(path, e)))?
        }
        None => FamilyParams::default(),
    };
    let r = verify_family(&p);
    let text = r.to_string();
    if let Some(path) = report {
        fs::write(&path, &text).map_err(|e| (text.clone(), Failure::usage(format!("{}: {e}", path.display()))))?;
    }
    if r.passed() {
        Ok(text)
    } else {
        Err((text, Failure::domain(anyhow::anyhow!("verification failed"))))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, failure)) => {
            print!("{out}");
            let (code, e) = match failure {
                Failure::Usage(e) => (2, e),
                Failure::Domain(e) => (1, e),
            };
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
