//! Command-line front end.
//!
//! Exit codes: 0 when every verdict is determined, 1 on a parse error, 2 on invalid input,
//! 3 when some verdict is left unknown by the search caps.

mod parse;
mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;

pub use parse::{parse_input, parse_poly, MAX_EXPONENT};
pub use report::{
    render_survey, sigma_text, FactorReport, FamilyReport, GroupReport, IsoReport, Report,
};

use crate::algebraic::{make_algebraic, AlgebraicNumber, RootChoice};
use crate::error::{Error, Result};
use crate::factorization::{enumerate_with_atoms, is_arith_progression};
use crate::families::{survey_gap, Family, SurveySpec};
use crate::valuation::{group_check, isomorphic, SearchCaps, ValuationMonoid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "valuate",
    version,
    about = "Factorization properties of monoids N0[α]"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Args)]
pub struct Options {
    #[arg(long, global = true)]
    pub sigma_cap: Option<usize>,
    #[arg(long, global = true, default_value_t = 8)]
    pub antimatter_deg_cap: usize,
    #[arg(long, global = true, default_value_t = 30)]
    pub antimatter_height_cap: u64,
    #[arg(long, global = true, default_value_t = 64)]
    pub curtiss_cap: u32,
    #[arg(long, global = true, default_value_t = 24)]
    pub exponent_cap: usize,
    #[arg(long, global = true, default_value_t = 200_000)]
    pub node_budget: u64,
    /// largest | smallest | index:k (zero-based, increasing)
    #[arg(long, global = true, default_value = "largest", value_parser = parse_root)]
    pub root: RootChoice,
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for `survey`.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

impl Options {
    pub fn caps(&self) -> SearchCaps {
        SearchCaps {
            sigma_cap: self.sigma_cap,
            antimatter_deg_cap: self.antimatter_deg_cap,
            antimatter_height_cap: self.antimatter_height_cap,
            curtiss_cap: self.curtiss_cap,
            exponent_cap: self.exponent_cap,
            node_budget: self.node_budget,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide every property of N0[α] with certificates.
    Classify {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Atom set and σ.
    Atoms {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Factorizations of the element `element(α)`.
    Factor {
        #[arg(allow_hyphen_values = true)]
        input: String,
        element: String,
    },
    /// Whether two atomic valuation monoids are isomorphic.
    Iso {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Build and classify a member of a named family.
    Family {
        /// eisenstein | ffm-not-fgm | ohfm | fgm-not-ohfm
        name: String,
        #[arg(long)]
        d: usize,
        /// A prime, or q ∈ (0,1) for the eisenstein family.
        #[arg(long)]
        param: String,
    },
    /// Record σ − d over the families and an optional sweep.
    Survey {
        #[arg(long, default_value = "2..5", value_parser = parse_range)]
        degrees: (u64, u64),
        #[arg(long, default_value = "2..5", value_parser = parse_range)]
        primes: (u64, u64),
        #[arg(long, default_value_t = 0)]
        coeff_bound: i64,
    },
    /// For a polynomial without positive roots, certify N0[β] = Z[β].
    GroupCheck {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
}

fn parse_root(s: &str) -> std::result::Result<RootChoice, String> {
    match s {
        "largest" => Ok(RootChoice::Largest),
        "smallest" => Ok(RootChoice::Smallest),
        _ => s
            .strip_prefix("index:")
            .and_then(|k| k.parse().ok())
            .map(RootChoice::Index)
            .ok_or_else(|| format!("expected largest, smallest or index:k, got {s}")),
    }
}

/// `a..b` or `a..=b`, both inclusive.
fn parse_range(s: &str) -> std::result::Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected a..b, got {s}"))?;
    let a = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

/// Rendered output and process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        _ => EXIT_INVALID,
    }
}

fn algebraic(input: &str, root: RootChoice) -> Result<AlgebraicNumber> {
    make_algebraic(&parse_input(input)?, root)
}

fn emit<T: serde::Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text()
    }
}

/// Classification report for one input, canonicalized to the largest root.
pub fn classify_report(input: &str, root: RootChoice, caps: &SearchCaps) -> Result<Report> {
    let start = Instant::now();
    let m = ValuationMonoid::new(algebraic(input, root)?, caps.clone())?;
    report_for(input, &m, start)
}

fn report_for(input: &str, m: &ValuationMonoid, start: Instant) -> Result<Report> {
    let v = m.classify()?;
    v.replay(m.alpha())?;
    let ms = start.elapsed().as_millis() as u64;
    Ok(Report::new(
        input,
        m.alpha().min_poly(),
        m.alpha().root_interval(),
        &v,
        m.caps(),
        ms,
    ))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let opts = &cli.opts;
    let caps = opts.caps();
    let ok = |stdout: String| Outcome {
        stdout,
        code: EXIT_OK,
    };
    match &cli.command {
        Command::Classify { input } | Command::Atoms { input } => {
            let r = classify_report(input, opts.root, &caps)?;
            let atoms_only = matches!(cli.command, Command::Atoms { .. });
            let stdout = emit(opts.json, &r, || {
                if atoms_only {
                    r.render_atoms_text()
                } else {
                    r.render_text()
                }
            });
            let unknown = if atoms_only {
                !r.complete_flags["atoms"]
            } else {
                r.has_unknown()
            };
            Ok(Outcome {
                stdout,
                code: if unknown { EXIT_UNKNOWN } else { EXIT_OK },
            })
        }
        Command::Factor { input, element } => {
            let alpha = algebraic(input, opts.root)?;
            let m = ValuationMonoid::at_root(alpha, caps.clone())?;
            let x = parse_poly(element)?.to_int().ok_or_else(|| {
                Error::BadParams(format!("{element} must have integer coefficients"))
            })?;
            let atoms = m.atoms();
            let set = enumerate_with_atoms(&m, &atoms, &x, caps.exponent_cap)?;
            let lengths = set.lengths();
            let ap = is_arith_progression(&lengths).ok().map(|(b, _)| b);
            let r = FactorReport {
                input: input.clone(),
                element: x,
                canonical_min_poly: m.alpha().min_poly().clone(),
                root_interval: m.alpha().root_interval().clone(),
                atoms,
                lengths: lengths.into_iter().collect(),
                arithmetic_progression: ap,
                factorizations: set,
                caps,
            };
            let code = if r.factorizations.complete {
                EXIT_OK
            } else {
                EXIT_UNKNOWN
            };
            Ok(Outcome {
                stdout: emit(opts.json, &r, || r.render_text()),
                code,
            })
        }
        Command::Iso { left, right } => {
            let a = ValuationMonoid::new(algebraic(left, opts.root)?, caps.clone())?;
            let b = ValuationMonoid::new(algebraic(right, opts.root)?, caps)?;
            let r = IsoReport {
                left: a.alpha().min_poly().clone(),
                right: b.alpha().min_poly().clone(),
                isomorphic: isomorphic(&a, &b)?,
            };
            Ok(ok(emit(opts.json, &r, || {
                let rel = if r.isomorphic { "≅" } else { "≇" };
                format!("N₀[α] {rel} N₀[β]  ({} vs {})\n", r.left, r.right)
            })))
        }
        Command::Family { name, d, param } => {
            let family = Family::parse(name)
                .ok_or_else(|| Error::BadParams(format!("unknown family {name}")))?;
            let param: BigRational = param
                .parse()
                .map_err(|_| Error::BadParams(format!("{param} is not a rational number")))?;
            let start = Instant::now();
            let instance = family.instance(*d, &param)?;
            let m = instance.monoid(caps)?;
            let report = report_for(&instance.poly.to_string(), &m, start)?;
            let v = m.classify()?;
            let mismatches = instance.mismatches(&v);
            let code = if !mismatches.is_empty() {
                EXIT_INVALID
            } else if report.has_unknown() {
                EXIT_UNKNOWN
            } else {
                EXIT_OK
            };
            let r = FamilyReport {
                instance,
                report,
                mismatches,
            };
            Ok(Outcome {
                stdout: emit(opts.json, &r, || {
                    format!(
                        "{} family, d = {}, parameter {}: {}\n{}",
                        r.instance.family,
                        r.instance.d,
                        r.instance.param,
                        r.instance.poly,
                        r.report.render_text()
                    )
                }),
                code,
            })
        }
        Command::Survey {
            degrees,
            primes,
            coeff_bound,
        } => {
            let spec = SurveySpec {
                degrees: degrees.0 as usize..=degrees.1 as usize,
                primes: primes.0..=primes.1,
                coeff_bound: *coeff_bound,
            };
            let r = survey_gap(&spec, &caps, opts.jobs.max(1))?;
            Ok(ok(emit(opts.json, &r, || render_survey(&r))))
        }
        Command::GroupCheck { input } => {
            let (_, prim) = parse_input(input)?.content_primitive()?;
            if !crate::algebraic::is_irreducible(&prim)? {
                return Err(Error::NotIrreducible(prim.to_string()));
            }
            let r = GroupReport {
                input: input.clone(),
                result: group_check(&prim, caps.curtiss_cap)?,
                min_poly: prim,
            };
            Ok(ok(emit(opts.json, &r, || r.render_text())))
        }
    }
}

/// Parses arguments, runs the command and prints the result. Returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
