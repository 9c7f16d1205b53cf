use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use gl3_hc::highest::{hc, hc_all, HcQuery, Rep};
use gl3_hc::izergin::{Kernel, Side};
use gl3_hc::scalar::{scalar_product_numeric, scalar_product_symbolic, RationalFunctionSpec};
use gl3_hc::verify::run_suite;
use gl3_hc::{Config, ParameterSet, Rational};

/// Exact evaluation of Izergin determinants, highest coefficients and
/// scalar products, and seeded identity verification.
#[derive(Parser)]
#[command(name = "gl3hc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Plain,
    Left,
    Right,
}

#[derive(Subcommand)]
enum Command {
    /// Izergin determinant K(x|y).
    Izergin {
        #[arg(long, value_enum, default_value = "plain")]
        variant: Variant,
        #[arg(long, allow_hyphen_values = true)]
        x: ParameterSet,
        #[arg(long, allow_hyphen_values = true)]
        y: ParameterSet,
        #[arg(long, allow_hyphen_values = true)]
        q: Rational,
    },
    /// Highest coefficient Z_{a,b}(t; x | s; y).
    Hc {
        #[arg(long, default_value = "l")]
        side: Side,
        /// ws, ws-twin, ty, ty-twin, tx, sy or all.
        #[arg(long, default_value = "ws")]
        rep: String,
        #[arg(long, allow_hyphen_values = true)]
        t: ParameterSet,
        #[arg(long, allow_hyphen_values = true)]
        x: ParameterSet,
        #[arg(long, allow_hyphen_values = true)]
        s: ParameterSet,
        #[arg(long, allow_hyphen_values = true)]
        y: ParameterSet,
        #[arg(long, allow_hyphen_values = true)]
        q: Rational,
    },
    /// Scalar product as a polynomial in R1, R3 or at given r1, r3.
    ScalarProduct {
        #[arg(long, allow_hyphen_values = true)]
        uc: ParameterSet,
        #[arg(long, allow_hyphen_values = true)]
        vc: ParameterSet,
        #[arg(long, allow_hyphen_values = true)]
        ub: ParameterSet,
        #[arg(long, allow_hyphen_values = true)]
        vb: ParameterSet,
        #[arg(long, allow_hyphen_values = true)]
        q: Rational,
        /// "num:a0,a1,...;den:b0,b1,..."
        #[arg(long, allow_hyphen_values = true)]
        r1: Option<RationalFunctionSpec>,
        #[arg(long, allow_hyphen_values = true)]
        r3: Option<RationalFunctionSpec>,
        /// Print monomial/coefficient pairs instead of a number.
        #[arg(long)]
        symbolic: bool,
    },
    /// Run an identity suite and write a JSON report.
    Verify {
        /// all, izergin, hc-reps, symmetries, residues, reductions, twins, prop51 or scalar.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 2)]
        a_max: usize,
        #[arg(long, default_value_t = 2)]
        b_max: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fixed q; sampled per case when omitted.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<Rational>,
        #[arg(long, default_value_t = Config::default().laurent_window)]
        window: usize,
        #[arg(long, default_value_t = Config::default().max_abs)]
        max_abs: u64,
        /// Report path; the report goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Izergin { variant, x, y, q } => {
            let k = Kernel::new(&q)?;
            let value = match variant {
                Variant::Plain => k.izergin(&x, &y)?,
                Variant::Left => k.izergin_left(&x, &y)?,
                Variant::Right => k.izergin_right(&x, &y)?,
            };
            println!("{value}");
        }
        Command::Hc { side, rep, t, x, s, y, q } => {
            let query = HcQuery::new(side, t, x, s, y, q);
            if rep == "all" {
                let values = hc_all(&query)?;
                for (rep, value) in &values {
                    println!("{rep}: {value}");
                }
                println!("agree: {}", values.iter().all(|(_, v)| v == &values[0].1));
            } else {
                let rep: Rep = rep.parse()?;
                println!("{}", hc(&query.with_rep(rep))?);
            }
        }
        Command::ScalarProduct { uc, vc, ub, vb, q, r1, r3, symbolic } => {
            if symbolic {
                let poly = scalar_product_symbolic(&uc, &vc, &ub, &vb, &q)?;
                for (monomial, coeff) in &poly.terms {
                    println!("{monomial}: {coeff}");
                }
            } else {
                let (Some(r1), Some(r3)) = (r1, r3) else {
                    bail!("numeric mode needs --r1 and --r3 (or pass --symbolic)");
                };
                println!("{}", scalar_product_numeric(&uc, &vc, &ub, &vb, &r1, &r3, &q)?);
            }
        }
        Command::Verify { suite, a_max, b_max, trials, seed, q, window, max_abs, out } => {
            let cfg = Config { q, laurent_window: window, seed, max_abs };
            let report = run_suite(&suite, a_max, b_max, trials, seed, &cfg)?;
            let json = serde_json::to_string_pretty(&report)?;
            match out {
                Some(path) => fs::write(&path, json).with_context(|| format!("writing {}", path.display()))?,
                None => println!("{json}"),
            }
            let s = report.summary;
            eprintln!("suite {suite}: {} pass, {} fail, {} error", s.pass, s.fail, s.error);
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
