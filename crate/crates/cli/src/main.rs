//! `staircase`: count, analyse, verify and draw lattice paths that avoid a
//! Ferrers shape.
//!
//! Exit codes: 0 success, 1 verification violation (or I/O failure),
//! 2 malformed input, 3 oracle scale exceeded.

mod render;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use staircase_core::analysis::{diagonal_sequence, real_root_sweep, root_verdict, CountSequence, RootVerdict};
use staircase_core::verify::{verify_injections, Injection};
use staircase_core::{count_paths, Error, Path, Point, Shape};

use crate::render::RenderSpec;

#[derive(Parser)]
#[command(name = "staircase", version, about = "Lattice paths avoiding a Ferrers shape")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print N(m,n), the number of paths from (m,0) to (0,n).
    Count {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Diagonal sequence N(0,T)..N(T,0) with its log-concave, unimodal and
    /// palindromic verdicts.
    Sequence {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        total: usize,
        /// Emit every total from 0 through T.
        #[arg(long)]
        sweep: bool,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// One `total,index,value` row per entry.
        #[arg(long)]
        csv: bool,
    },
    /// Exhaustive round-trip, injectivity and image checks of the injections.
    Verify {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        max_total: usize,
        #[arg(long, value_enum, default_value = "all")]
        injection: InjectionArg,
    },
    /// Generating polynomial of a diagonal and its real-root count.
    Roots {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        total: usize,
        #[arg(long)]
        json: bool,
    },
    /// Real-rootedness verdicts for all small shapes.
    Search {
        #[arg(long)]
        max_cells: usize,
        #[arg(long)]
        max_total: usize,
        #[arg(long)]
        only_failures: bool,
        #[arg(long)]
        json: bool,
    },
    /// Draw a shape and up to a few paths as SVG.
    Render {
        #[command(flatten)]
        shape: ShapeArg,
        /// Path as `(r,c):NENE`; repeatable.
        #[arg(long = "path", required = true)]
        paths: Vec<String>,
        /// Vertex `r,c` to highlight; repeatable.
        #[arg(long = "mark")]
        marks: Vec<String>,
        #[arg(long, default_value_t = 40)]
        scale: u32,
        #[arg(long)]
        out: std::path::PathBuf,
    },
}

#[derive(Args)]
struct ShapeArg {
    /// Comma-separated parts, e.g. `2,1`; empty or `0` for no shape.
    #[arg(long = "shape", default_value = "", allow_hyphen_values = true)]
    raw: String,
}

impl ShapeArg {
    fn parse(&self) -> Result<Shape, CliError> {
        self.raw.parse().map_err(CliError::from)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InjectionArg {
    Psi,
    Phi,
    Phibar,
    All,
}

impl InjectionArg {
    fn selected(self) -> Vec<Injection> {
        match self {
            InjectionArg::Psi => vec![Injection::Psi],
            InjectionArg::Phi => vec![Injection::Phi],
            InjectionArg::Phibar => vec![Injection::Phibar],
            InjectionArg::All => Injection::ALL.to_vec(),
        }
    }
}

enum CliError {
    Usage(String),
    Scale(String),
    Violation,
    Io(String),
    // downstream reader went away, e.g. `| head`
    ClosedPipe,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::OracleScale { .. } => CliError::Scale(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            CliError::ClosedPipe
        } else {
            CliError::Io(e.to_string())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn real_rooted_value(verdict: RootVerdict) -> Value {
    match verdict {
        RootVerdict::RealRooted => Value::Bool(true),
        RootVerdict::NotRealRooted => Value::Bool(false),
        RootVerdict::Empty => Value::Null,
    }
}

fn sequence_json(seq: &CountSequence) -> Value {
    json!({
        "shape": seq.shape,
        "total": seq.total,
        "sequence": seq.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "log_concave": seq.is_log_concave(),
        "unimodal": seq.is_unimodal(),
        "palindromic": seq.is_palindromic(),
        "real_rooted": real_rooted_value(root_verdict(&seq.polynomial())),
    })
}

fn parse_mark(raw: &str) -> Result<Point, CliError> {
    let bad = || CliError::Usage(format!("cannot parse mark {raw:?}: expected r,c"));
    let (r, c) = raw.trim().trim_matches(|ch| ch == '(' || ch == ')').split_once(',').ok_or_else(bad)?;
    Ok(Point::new(
        r.trim().parse().map_err(|_| bad())?,
        c.trim().parse().map_err(|_| bad())?,
    ))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Count { shape, m, n } => {
            writeln!(out, "{}", count_paths(&shape.parse()?, m, n))?;
        }
        Command::Sequence {
            shape,
            total,
            sweep,
            json,
            csv,
        } => {
            let shape = shape.parse()?;
            let totals = if sweep { 0..=total } else { total..=total };
            if csv {
                writeln!(out, "total,index,value")?;
            }
            for t in totals {
                let seq = diagonal_sequence(&shape, t);
                if json {
                    writeln!(out, "{}", sequence_json(&seq))?;
                } else if csv {
                    for (i, v) in seq.values.iter().enumerate() {
                        writeln!(out, "{t},{i},{v}")?;
                    }
                } else {
                    writeln!(
                        out,
                        "{seq} | log-concave: {} | unimodal: {} | palindromic: {}",
                        yes_no(seq.is_log_concave()),
                        yes_no(seq.is_unimodal()),
                        yes_no(seq.is_palindromic())
                    )?;
                }
            }
        }
        Command::Verify {
            shape,
            max_total,
            injection,
        } => {
            let shape = shape.parse()?;
            let report = verify_injections(&shape, &injection.selected(), max_total)?;
            for v in report.violations() {
                writeln!(out, "{}", serde_json::to_string(v).expect("violation serializes"))?;
            }
            for inj in injection.selected() {
                let cells: Vec<_> = report.cells.iter().filter(|c| c.injection == inj).collect();
                let pairs: usize = cells.iter().map(|c| c.domain_size).sum();
                let bad: usize = cells.iter().map(|c| c.violations.len()).sum();
                writeln!(
                    out,
                    "{inj}: shape {shape}, m+n <= {max_total}: {} cells, {pairs} pairs, {bad} violations",
                    cells.len()
                )?;
            }
            if !report.is_clean() {
                return Err(CliError::Violation);
            }
        }
        Command::Roots { shape, total, json } => {
            let shape = shape.parse()?;
            let poly = diagonal_sequence(&shape, total).polynomial();
            let roots = poly.count_real_roots().ok();
            let verdict = root_verdict(&poly);
            if json {
                let value = json!({
                    "shape": shape,
                    "total": total,
                    "polynomial": poly.to_string(),
                    "coefficients": poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "distinct_real_roots": roots,
                    "real_rooted": real_rooted_value(verdict),
                });
                writeln!(out, "{value}")?;
            } else if let Some(roots) = roots {
                writeln!(
                    out,
                    "{poly} | distinct real roots: {roots} | all real: {}",
                    yes_no(verdict == RootVerdict::RealRooted)
                )?;
            } else {
                writeln!(out, "0 | empty")?;
            }
        }
        Command::Search {
            max_cells,
            max_total,
            only_failures,
            json,
        } => {
            for entry in real_root_sweep(max_cells, max_total) {
                if only_failures && entry.verdict != RootVerdict::NotRealRooted {
                    continue;
                }
                if json {
                    let value = json!({
                        "shape": entry.shape,
                        "total": entry.total,
                        "polynomial": entry.polynomial.to_string(),
                        "real_rooted": real_rooted_value(entry.verdict),
                    });
                    writeln!(out, "{value}")?;
                } else {
                    let verdict = match entry.verdict {
                        RootVerdict::RealRooted => "real-rooted",
                        RootVerdict::NotRealRooted => "not-real-rooted",
                        RootVerdict::Empty => "empty",
                    };
                    writeln!(out, "{} {} {} {verdict}", entry.shape, entry.total, entry.polynomial)?;
                }
            }
        }
        Command::Render {
            shape,
            paths,
            marks,
            scale,
            out: file,
        } => {
            let shape = shape.parse()?;
            let paths = paths
                .iter()
                .map(|p| p.parse::<Path>())
                .collect::<Result<Vec<_>, _>>()?;
            let marks = marks.iter().map(|m| parse_mark(m)).collect::<Result<Vec<_>, _>>()?;
            let spec = RenderSpec::new(shape, paths, marks, scale).map_err(CliError::Usage)?;
            fs::write(&file, spec.to_svg())?;
            writeln!(out, "wrote {}", file.display())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) | Err(CliError::ClosedPipe) => ExitCode::SUCCESS,
        Err(CliError::Violation) => ExitCode::from(1),
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Scale(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
