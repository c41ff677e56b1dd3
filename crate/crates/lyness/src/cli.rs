//! `lyness` subcommands. Exit status: 0 success, 1 verification failure,
//! 2 usage or validation error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lyness_core::certify::{Certifier, NoClock};
use lyness_core::dynamics::{
    classify_regions, descent_along, g_grid, local_stability, simulate, Mode, SimOptions, Window,
};
use lyness_core::model::{equilibrium, ParamsPQ, SymbolicModel};
use lyness_core::rational::parse_rational;
use lyness_core::BigRational;

use crate::csv::{float, write_grid, write_trace};
use crate::report::{report_line, reports_json, summary_json};
use crate::run::{run_full_parallel, StdClock};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "lyness",
    version,
    about = "Descent certificates and orbits for x[n+1] = (p + q x[n]) / (1 + x[n-1])"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Replay the positivity certificates.
    Certify {
        /// Run a single step by name.
        #[arg(long)]
        step: Option<String>,
        /// Write the JSON report here (`-` for standard output).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Report zero elapsed time so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check a symbolic identity.
    Identity {
        #[arg(long, value_enum)]
        which: IdentityKind,
    },
    /// Iterate the recurrence and monitor descent.
    Simulate {
        #[arg(long, value_parser = rational)]
        p: BigRational,
        #[arg(long, value_parser = rational)]
        q: BigRational,
        #[arg(long, value_parser = rational)]
        x0: BigRational,
        #[arg(long, value_parser = rational)]
        xm1: BigRational,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 1_000_000)]
        max_iters: u64,
        /// Iterate in exact rationals.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Report which classical parameter regions contain (p, q).
    Regions {
        #[arg(long, value_parser = rational)]
        p: BigRational,
        #[arg(long, value_parser = rational)]
        q: BigRational,
    },
    /// Sample the Lyness invariant on a grid.
    Ggrid {
        #[arg(long)]
        alpha_tilde: f64,
        /// `xmin,xmax,ymin,ymax`.
        #[arg(long, value_parser = window)]
        window: Window,
        #[arg(long)]
        res: usize,
        #[arg(long)]
        csv: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityKind {
    Delta1,
    Delta2Denominator,
}

fn rational(s: &str) -> Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn window(s: &str) -> Result<Window, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|v| v.trim().parse::<f64>().map_err(|e| format!("`{v}`: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [xmin, xmax, ymin, ymax] => Ok(Window {
            xmin,
            xmax,
            ymin,
            ymax,
        }),
        _ => Err(format!(
            "expected four comma-separated numbers, got {}",
            parts.len()
        )),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
        Err(Failure::Engine(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
    Engine(lyness_core::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<lyness_core::Error> for Failure {
    fn from(e: lyness_core::Error) -> Self {
        Failure::Engine(e)
    }
}

fn exit(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn params(p: BigRational, q: BigRational) -> Result<ParamsPQ, Failure> {
    ParamsPQ::new(p, q).map_err(|e| Failure::Usage(e.to_string()))
}

fn write_to(path: &Path, out: &mut dyn Write, text: &str) -> io::Result<()> {
    if path == Path::new("-") {
        out.write_all(text.as_bytes())
    } else {
        std::fs::write(path, text)
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Certify {
            step,
            json,
            no_timing,
        } => {
            // `--json -` keeps stdout pure JSON; the text lines move to stderr.
            let (text, json_out): (&mut dyn Write, &mut dyn Write) =
                if json.as_deref() == Some(Path::new("-")) {
                    (err, out)
                } else {
                    (out, err)
                };
            certify(step, json, no_timing, text, json_out)
        }
        Command::Identity { which } => {
            let model = SymbolicModel::build()?;
            let certifier = Certifier::new(&model);
            let clock = StdClock::new();
            let report = match which {
                IdentityKind::Delta1 => certifier.verify_delta1_identity(&clock),
                IdentityKind::Delta2Denominator => certifier.verify_delta2_denominator(&clock)?,
            };
            writeln!(out, "{}", report_line(&report))?;
            Ok(exit(report.passed()))
        }
        Command::Simulate {
            p,
            q,
            x0,
            xm1,
            tol,
            max_iters,
            exact,
            csv,
        } => {
            let params = params(p, q)?;
            if tol.is_nan() || tol <= 0.0 {
                return Err(Failure::Usage("--tol must be positive".into()));
            }
            let opts = SimOptions {
                mode: if exact { Mode::Exact } else { Mode::Float },
                tol,
                max_iters,
            };
            let trace =
                simulate(&params, (&xm1, &x0), opts).map_err(|e| Failure::Usage(e.to_string()))?;
            let last = trace.last();
            writeln!(out, "verdict: {}", trace.verdict.label())?;
            writeln!(out, "xbar: {}", float(trace.xbar))?;
            writeln!(out, "iterations: {}", last.n)?;
            match trace.iters_to_tol {
                Some(n) => writeln!(out, "converged at n = {n}")?,
                None => writeln!(out, "not converged")?,
            }
            writeln!(out, "last state: {} {}", float(last.prev), float(last.curr))?;
            let stability = local_stability(&params);
            writeln!(
                out,
                "spectral radius: {} ({})",
                float(stability.spectral_radius),
                if stability.stable {
                    "stable"
                } else {
                    "unstable"
                }
            )?;
            let descent_ok = if params.q_less_than_p() {
                let outcome = descent_along(&params, &trace)?;
                match outcome.violation {
                    None => writeln!(out, "descent: holds at {} states", outcome.checked)?,
                    Some(v) => writeln!(
                        out,
                        "descent: violated at n = {} (x = {}, y = {}, delta1 = {}, delta2 = {})",
                        v.n,
                        float(v.x),
                        float(v.y),
                        float(v.delta1),
                        float(v.delta2)
                    )?,
                }
                outcome.holds()
            } else {
                writeln!(out, "descent: not applicable (q >= p)")?;
                true
            };
            if let Some(path) = csv {
                let mut file = BufWriter::new(File::create(path)?);
                write_trace(&mut file, &trace)?;
                file.flush()?;
            }
            Ok(exit(trace.iters_to_tol.is_some() && descent_ok))
        }
        Command::Regions { p, q } => {
            let params = params(p, q)?;
            let coverage = classify_regions(&params);
            let eq = equilibrium(&params);
            writeln!(out, "flags: {}", coverage.flags_text())?;
            writeln!(out, "xbar: {}", float(eq.xbar))?;
            for t in &coverage.tests {
                if t.applicable {
                    writeln!(
                        out,
                        "{}: {} -> {} (lhs = {}, rhs = {})",
                        t.region.letter(),
                        t.region.formula(),
                        t.holds,
                        float(t.lhs),
                        float(t.rhs)
                    )?;
                } else {
                    writeln!(
                        out,
                        "{}: {} -> not applicable",
                        t.region.letter(),
                        t.region.formula()
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Ggrid {
            alpha_tilde,
            window,
            res,
            csv,
        } => {
            let grid =
                g_grid(alpha_tilde, window, res).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut file = BufWriter::new(File::create(&csv)?);
            write_grid(&mut file, &grid)?;
            file.flush()?;
            let min = grid.argmin();
            writeln!(out, "points: {}", grid.points.len())?;
            writeln!(
                out,
                "min: g({}, {}) = {}",
                float(min.x),
                float(min.y),
                float(min.g)
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn certify(
    step: Option<String>,
    json: Option<PathBuf>,
    no_timing: bool,
    out: &mut dyn Write,
    json_out: &mut dyn Write,
) -> Result<i32, Failure> {
    let model = SymbolicModel::build()?;
    let certifier = Certifier::new(&model);
    let std_clock = StdClock::new();
    let clock: &dyn lyness_core::certify::Clock = if no_timing { &NoClock } else { &std_clock };

    let Some(name) = step else {
        let summary = run_full_parallel(&certifier, !no_timing)?;
        for r in &summary.reports {
            writeln!(out, "{}", report_line(r))?;
        }
        let c = summary.counts;
        writeln!(
            out,
            "counts: delta2 numerator {}, shifted {}, q1 above diagonal {}",
            c.delta2_numerator, c.eq16, c.eq17
        )?;
        writeln!(
            out,
            "overall: {}",
            if summary.overall_pass() {
                "PASS"
            } else {
                "FAIL"
            }
        )?;
        if let Some(path) = json {
            write_to(&path, json_out, &summary_json(&summary))?;
        }
        return Ok(exit(summary.overall_pass()));
    };

    let report = match name.as_str() {
        "delta1 closed form" => certifier.verify_delta1_identity(clock),
        "delta2 reduced form" => certifier.verify_delta2_denominator(clock)?,
        _ => match certifier.step(&name) {
            Some(s) => certifier.run_step(&s, clock)?,
            None => {
                let mut names = vec![
                    "delta1 closed form".to_string(),
                    "delta2 reduced form".to_string(),
                ];
                names.extend(certifier.all_steps().iter().map(|s| s.name().to_string()));
                return Err(Failure::Usage(format!(
                    "unknown step `{name}`; known steps: {}",
                    names.join(", ")
                )));
            }
        },
    };
    writeln!(out, "{}", report_line(&report))?;
    if let Some(path) = json {
        write_to(
            &path,
            json_out,
            &reports_json(std::slice::from_ref(&report)),
        )?;
    }
    Ok(exit(report.passed()))
}
