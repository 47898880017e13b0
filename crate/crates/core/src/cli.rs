//! Command-line front end. Every subcommand is a thin adapter over the
//! library; [`run`] returns the process exit status.
//!
//! Exit status: 0 when nothing is obstructed, 1 when a theorem-backed test
//! fails, 2 on usage or parse errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::alexander::{alexander_sieve, conway_to_alexander, link_conway_to_hosokawa, AlexPoly};
use crate::conway::TwoBridgeForm;
use crate::enumerate::{census, CensusConfig, Dedup};
use crate::error::Error;
use crate::fibonacci::{fib, to_fib_basis};
use crate::obstructions::{mod2_index, sieve};
use crate::poly::{Parity, ZPoly};
use crate::verdict::{SieveReport, VerdictRecord};

pub const EXIT_OK: u8 = 0;
pub const EXIT_OBSTRUCTED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "twobridge",
    version,
    about = "Conway and Alexander polynomials of two-bridge links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Fibonacci polynomial f_N.
    Fib {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Conway polynomial and mod-2 index of a form, `C(4,-2,2)` or `b=2,1,1`.
    Conway {
        form: String,
        #[arg(long)]
        json: bool,
    },
    /// Alexander (or Hosokawa) polynomial of a Conway polynomial or form.
    Alexander {
        #[arg(allow_hyphen_values = true)]
        input: String,
        /// Keep the raw sign instead of forcing a_n > 0.
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        json: bool,
    },
    /// Fibonacci-basis coefficients (c_m, alpha) of a polynomial.
    Tofib {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the Conway-level sieve on a polynomial.
    Check {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        json: bool,
        /// Treat conjecture failures as obstructions in the exit status.
        #[arg(long)]
        conjectures_strict: bool,
    },
    /// Run the Alexander-level sieve on coefficients a_0,...,a_n.
    CheckAlex {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
        /// The coefficients are a Hosokawa factor of a two-component link.
        #[arg(long)]
        link: bool,
        /// Do not normalize to a_n > 0.
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        conjectures_strict: bool,
    },
    /// Run every test over all forms within a crossing budget.
    Census {
        #[arg(long)]
        budget: u32,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = DedupArg::Fraction)]
        dedup: DedupArg,
        /// Stop (with a partial report) before exceeding this many forms.
        #[arg(long)]
        max_forms: Option<u64>,
        #[arg(long)]
        json: bool,
        /// Also write one CSV line per failure to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        conjectures_strict: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DedupArg {
    None,
    Fraction,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "{}", describe(&e));
            EXIT_USAGE
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Input(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::Parse(p) => p.diagnostic(),
        other => format!("error: {other}"),
    }
}

fn parse_poly(s: &str) -> Result<ZPoly, Error> {
    Ok(s.parse::<ZPoly>()?)
}

fn looks_like_form(s: &str) -> bool {
    let t = s.trim_start();
    t.starts_with("C(") || t.starts_with("c(") || t.starts_with("b=")
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(io::Error::other)?;
    writeln!(out, "{text}")
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Serialize)]
struct SieveOutput<'a> {
    input: &'a str,
    obstructed: bool,
    conjectural_obstruction: bool,
    verdicts: Vec<VerdictRecord>,
}

fn report_sieve(
    input: &str,
    report: &SieveReport,
    json: bool,
    strict: bool,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    let obstructed = report.obstructed();
    let conjectural = report.conjectural_obstruction();
    if json {
        let payload = SieveOutput {
            input,
            obstructed,
            conjectural_obstruction: conjectural,
            verdicts: report.verdicts.iter().map(|v| v.to_record()).collect(),
        };
        print_json(out, &payload)?;
    } else {
        writeln!(out, "{input}")?;
        for v in &report.verdicts {
            writeln!(out, "  {v}")?;
        }
        let summary = if obstructed {
            "obstructed: not a two-bridge polynomial"
        } else if conjectural {
            "not obstructed (conjectural obstruction only)"
        } else {
            "not obstructed"
        };
        writeln!(out, "{summary}")?;
    }
    Ok(if obstructed || (strict && conjectural) {
        EXIT_OBSTRUCTED
    } else {
        EXIT_OK
    })
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Fib { n } => {
            writeln!(out, "{}", fib(n))?;
        }
        Command::Conway { form, json } => {
            let form: TwoBridgeForm = form.parse()?;
            let p = form.conway_poly();
            let d = mod2_index(&form);
            if json {
                print_json(
                    out,
                    &serde_json::json!({
                        "form": form.to_string(),
                        "literal": form.literal_string(),
                        "knot": form.is_knot(),
                        "conway": p.to_string(),
                        "coeffs": strings(p.coeffs()),
                        "D": d,
                    }),
                )?;
            } else {
                writeln!(out, "{p}, D={d}")?;
            }
        }
        Command::Alexander { input, raw, json } => {
            let p = if looks_like_form(&input) {
                input.parse::<TwoBridgeForm>()?.conway_poly()
            } else {
                parse_poly(&input)?
            };
            let alex = match p.pure_parity()? {
                (_, Parity::Odd) => link_conway_to_hosokawa(&p)?,
                _ => conway_to_alexander(&p)?,
            };
            let (alex, sign) = if raw { (alex, 1) } else { alex.normalize() };
            if json {
                print_json(
                    out,
                    &serde_json::json!({
                        "conway": p.to_string(),
                        "coeffs": strings(alex.coeffs()),
                        "link_factor": alex.link_factor(),
                        "sign": sign,
                        "alexander": alex.to_string(),
                    }),
                )?;
            } else {
                writeln!(out, "{alex}")?;
                writeln!(out, "a = ({})", alex.to_coeff_list())?;
            }
        }
        Command::Tofib { poly, json } => {
            let p = parse_poly(&poly)?;
            let rep = to_fib_basis(&p)?;
            let alpha: Vec<String> = rep.alpha.iter().map(ToString::to_string).collect();
            if json {
                print_json(
                    out,
                    &serde_json::json!({
                        "degree": rep.degree,
                        "leading": rep.leading.to_string(),
                        "alpha": alpha,
                    }),
                )?;
            } else {
                writeln!(out, "c_m = {}, alpha = ({})", rep.leading, alpha.join(", "))?;
            }
        }
        Command::Check {
            poly,
            json,
            conjectures_strict,
        } => {
            let p = parse_poly(&poly)?;
            return report_sieve(&p.to_string(), &sieve(&p), json, conjectures_strict, out);
        }
        Command::CheckAlex {
            coeffs,
            link,
            raw,
            json,
            conjectures_strict,
        } => {
            let a = coeffs.parse::<AlexPoly>()?.with_link_factor(link);
            let a = if raw { a } else { a.normalize().0 };
            return report_sieve(
                &a.to_string(),
                &alexander_sieve(&a),
                json,
                conjectures_strict,
                out,
            );
        }
        Command::Census {
            budget,
            jobs,
            dedup,
            max_forms,
            json,
            csv,
            conjectures_strict,
        } => {
            let config = CensusConfig {
                budget,
                jobs,
                dedup: match dedup {
                    DedupArg::None => Dedup::None,
                    DedupArg::Fraction => Dedup::Fraction,
                },
                max_forms,
            };
            let report = census(&config)?;
            if let Some(path) = csv {
                report
                    .write_csv(File::create(path)?)
                    .map_err(io::Error::other)?;
            }
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                writeln!(out, "budget            {}", report.budget)?;
                writeln!(out, "forms             {}", report.forms_generated)?;
                if let Some(classes) = report.classes {
                    writeln!(out, "classes           {classes}")?;
                }
                writeln!(out, "knots             {}", report.counters.knots)?;
                writeln!(out, "links             {}", report.counters.links)?;
                writeln!(
                    out,
                    "theorem failures  {}",
                    report.counters.theorem_failures
                )?;
                writeln!(
                    out,
                    "conjecture fails  {}",
                    report.counters.conjecture_failures
                )?;
                if report.partial {
                    writeln!(out, "PARTIAL: form cap reached")?;
                }
                for f in &report.verdict_failures {
                    writeln!(
                        out,
                        "FAIL {} {} {}",
                        f.form,
                        f.verdict.test,
                        f.verdict.note.as_deref().unwrap_or("")
                    )?;
                }
            }
            let strict_fail = conjectures_strict && !report.conjecture_failures.is_empty();
            return Ok(if report.obstructed() || strict_fail {
                EXIT_OBSTRUCTED
            } else {
                EXIT_OK
            });
        }
    }
    Ok(EXIT_OK)
}
