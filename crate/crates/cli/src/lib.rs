//! Command-line front end for `lexval`.
//!
//! Every subcommand prints plain text by default and a JSON object with the
//! same data under `--json`. Integers in JSON are decimal strings, values are
//! `"(a,b)"` or `"inf"`, and field elements use the library's printed form.

pub mod config;
pub mod expr;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lexval::valgroup::MonoidMode;
use lexval::valuation::{AxiomKind, ValuationSpec};
use lexval::witness::{
    image_sample, monomials, quotient_census, random_polys, successor_sequence, CensusFamily,
    CorpusSpec,
};
use lexval::ypoly::{YPoly, YPowerTable};
use serde_json::{json, Value};

use crate::config::{preset_config, read_config, SpecConfig};
use crate::expr::parse_ypoly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lexval", version, about = "Rank-two valuations on K(x,y) from w-expansions")]
struct Cli {
    /// Parameter file (TOML).
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "preset")]
    spec: Option<PathBuf>,
    /// Built-in parameters: ex52 or ex55. Default: ex55.
    #[arg(long, global = true, value_name = "NAME")]
    preset: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the nonzero cells f[i,j] of the w-expansion.
    Expand { expr: String },
    /// Value of an element, or of a quotient with --over.
    Value {
        expr: String,
        #[arg(long, value_name = "EXPR")]
        over: Option<String>,
    },
    /// The cell attaining the value.
    Lead { expr: String },
    /// The unique λ with v(f + λg) > v(f), for v(f) = v(g).
    Lambda { f: String, g: String },
    /// Audit the valuation axioms on sampled pairs.
    Axioms {
        #[arg(long, default_value_t = 500)]
        pairs: usize,
        /// Random polynomials added to the monomial corpus.
        #[arg(long, default_value_t = 100)]
        random: usize,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
    },
    /// Polynomials f_0, …, f_dmax with strictly increasing values.
    Witness {
        #[arg(long, default_value_t = 5)]
        dmax: usize,
        /// Also print each polynomial.
        #[arg(long)]
        polys: bool,
    },
    /// Sample the value image and test membership in a monoid.
    Image {
        /// ex55, cone, ray or half-lattice. Default: ex55 when β > 0, else cone.
        #[arg(long)]
        mode: Option<MonoidMode>,
        #[arg(long, default_value_t = 1000)]
        random: usize,
        #[arg(long, default_value_t = 6)]
        max_deg: usize,
    },
    /// Count classes of values modulo Z·v(x) for ℓ = 0..=ell.
    Census {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Family::H)]
        family: Family,
        /// Size of the random corpus for --family corpus.
        #[arg(long, default_value_t = 1000)]
        random: usize,
    },
    /// Validate the parameters and list every violated condition.
    SpecCheck,
    /// Expansion coefficients of y^e for e ≤ emax.
    Ypower {
        #[arg(long)]
        emax: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    /// y^r (x y^2 + y + x^4)^q
    H,
    /// y^j w^i
    W,
    /// Monomials plus seeded random polynomials.
    Corpus,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::H => "h",
            Family::W => "w",
            Family::Corpus => "corpus",
        }
    }
}

/// Output of a subcommand: text lines plus the equivalent JSON object.
struct Report {
    text: Vec<String>,
    json: Value,
    exit: i32,
}

impl Report {
    fn ok(text: Vec<String>, json: Value) -> Self {
        Report {
            text,
            json,
            exit: EXIT_OK,
        }
    }
}

struct Failure {
    message: String,
    exit: i32,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            message: e.to_string(),
            exit: EXIT_DOMAIN,
        }
    }
}

fn s<T: ToString>(v: T) -> Value {
    Value::String(v.to_string())
}

fn parse_arg(src: &str) -> Result<YPoly, Failure> {
    parse_ypoly(src).map_err(|e| Failure {
        message: format!("in {src:?}: {e}"),
        exit: EXIT_DOMAIN,
    })
}

fn config_for(cli: &Cli) -> Result<SpecConfig, Failure> {
    Ok(match (&cli.spec, &cli.preset) {
        (Some(path), _) => read_config(path)?,
        (None, Some(name)) => preset_config(name)?,
        (None, None) => preset_config("ex55")?,
    })
}

fn corpus(seed: u64, max_deg: usize, random: usize) -> Vec<YPoly> {
    let spec = CorpusSpec {
        max_deg_x: max_deg,
        max_deg_y: max_deg,
        max_total_deg: max_deg,
        random_count: random,
        seed,
    };
    let mut out = monomials(&spec);
    out.extend(random_polys(&spec));
    out
}

fn spec_check(cfg: &SpecConfig) -> Result<Report, Failure> {
    let w = parse_arg(&cfg.w)?;
    let violations = match ValuationSpec::new(cfg.m, cfg.n, w, cfg.alpha(), cfg.beta()) {
        Ok(_) => Vec::new(),
        Err(e) => e.violations,
    };
    let mut text = vec![format!("name {}", cfg.name)];
    text.push(if violations.is_empty() { "valid".into() } else { "invalid".into() });
    text.extend(violations.iter().map(|v| format!("violation {}: {v}", v.name())));
    let json = json!({
        "name": cfg.name,
        "valid": violations.is_empty(),
        "violations": violations
            .iter()
            .map(|v| json!({ "name": v.name(), "detail": v.to_string() }))
            .collect::<Vec<_>>(),
    });
    Ok(Report {
        exit: if violations.is_empty() { EXIT_OK } else { EXIT_DOMAIN },
        text,
        json,
    })
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let cfg = config_for(cli)?;
    if let Command::SpecCheck = cli.cmd {
        return spec_check(&cfg);
    }
    let spec = cfg.build()?;
    let report = match &cli.cmd {
        Command::Expand { expr } => {
            let f = parse_arg(expr)?;
            let e = spec.expand(&f);
            let cells: Vec<_> = e.cells().collect();
            Report::ok(
                cells.iter().map(|(i, j, c)| format!("f[{i},{j}] = {c}")).collect(),
                json!({
                    "cells": cells
                        .iter()
                        .map(|(i, j, c)| json!({ "i": s(i), "j": s(j), "coeff": s(c) }))
                        .collect::<Vec<_>>(),
                }),
            )
        }
        Command::Value { expr, over } => {
            let f = parse_arg(expr)?;
            let v = match over {
                Some(g) => spec.value_fraction(&f, &parse_arg(g)?)?,
                None => spec.value(&f),
            };
            Report::ok(vec![v.to_string()], json!({ "value": s(v) }))
        }
        Command::Lead { expr } => {
            let lt = spec.lead_term(&parse_arg(expr)?)?;
            Report::ok(
                vec![
                    format!("cell {} {}", lt.i, lt.j),
                    format!("coeff {}", lt.coeff),
                    format!("value {}", lt.value),
                ],
                json!({ "i": s(lt.i), "j": s(lt.j), "coeff": s(&lt.coeff), "value": s(lt.value) }),
            )
        }
        Command::Lambda { f, g } => {
            let lambda = spec.cancel_lambda(&parse_arg(f)?, &parse_arg(g)?)?;
            Report::ok(vec![lambda.to_string()], json!({ "lambda": s(lambda) }))
        }
        Command::Axioms {
            pairs,
            random,
            max_deg,
        } => {
            let items = corpus(cli.seed, *max_deg, *random);
            let r = spec.check_axioms(&items, *pairs, cli.seed);
            let mut text = vec![
                format!("pairs {}", r.pairs_checked),
                format!("lambda_checks {}", r.lambda_checks),
            ];
            let mut counts = serde_json::Map::new();
            for kind in AxiomKind::ALL {
                text.push(format!("{} {}", kind.name(), r.count(kind)));
                counts.insert(kind.name().into(), s(r.count(kind)));
            }
            text.extend(r.violations.iter().map(|v| format!("violation {}: {}", v.kind.name(), v.detail)));
            Report::ok(
                text,
                json!({
                    "pairs": s(r.pairs_checked),
                    "lambda_checks": s(r.lambda_checks),
                    "counts": counts,
                    "violations": r.violations
                        .iter()
                        .map(|v| json!({ "kind": v.kind.name(), "detail": v.detail }))
                        .collect::<Vec<_>>(),
                }),
            )
        }
        Command::Witness { dmax, polys } => {
            let seq = successor_sequence(&spec, *dmax)?;
            let rows: Vec<(usize, String, String, String)> = seq
                .iter()
                .enumerate()
                .map(|(d, (f, v))| (d, f.deg_y().to_string(), v.to_string(), f.to_string()))
                .collect();
            Report::ok(
                rows.iter()
                    .map(|(d, deg, v, f)| {
                        if *polys {
                            format!("{d} {deg} {v} {f}")
                        } else {
                            format!("{d} {deg} {v}")
                        }
                    })
                    .collect(),
                json!({
                    "sequence": rows
                        .iter()
                        .map(|(d, deg, v, f)| {
                            let mut o = json!({ "d": s(d), "deg_y": deg, "value": v });
                            if *polys {
                                o["poly"] = s(f);
                            }
                            o
                        })
                        .collect::<Vec<_>>(),
                }),
            )
        }
        Command::Image {
            mode,
            random,
            max_deg,
        } => {
            let mode = mode.unwrap_or(if spec.beta().is_positive() {
                MonoidMode::Ex55
            } else {
                MonoidMode::Cone
            });
            let cs = CorpusSpec {
                max_deg_x: *max_deg,
                max_deg_y: *max_deg,
                max_total_deg: *max_deg,
                random_count: *random,
                seed: cli.seed,
            };
            let r = image_sample(&spec, &cs, mode)?;
            let classes = r.class_count.map_or("n/a".to_string(), |c| c.to_string());
            let attained: Vec<String> = r.attained.iter().map(ToString::to_string).collect();
            let mut text = vec![
                format!("mode {}", mode.name()),
                format!("evaluated {}", r.evaluated),
                format!("distinct {}", r.attained.len()),
                format!("classes {classes}"),
                format!("violations {}", r.violations.len()),
                format!("attained {}", attained.join(" ")),
            ];
            text.extend(r.violations.iter().map(|(f, v)| format!("violation {v}: {f}")));
            Report::ok(
                text,
                json!({
                    "mode": mode.name(),
                    "evaluated": s(r.evaluated),
                    "distinct": s(r.attained.len()),
                    "classes": r.class_count.map(s),
                    "attained": attained,
                    "violations": r.violations
                        .iter()
                        .map(|(f, v)| json!({ "value": s(v), "poly": s(f) }))
                        .collect::<Vec<_>>(),
                }),
            )
        }
        Command::Census { ell, family, random } => {
            let items = match family {
                Family::Corpus => corpus(cli.seed, 6, *random),
                _ => Vec::new(),
            };
            let mut counts = Vec::new();
            for l in 0..=*ell {
                let fam = match family {
                    Family::H => CensusFamily::HFamily,
                    Family::W => CensusFamily::WMonomials,
                    Family::Corpus => CensusFamily::Corpus(&items),
                };
                counts.push((l, quotient_census(&spec, l, fam)?));
            }
            let mut text = vec![format!("family {}", family.name())];
            text.extend(counts.iter().map(|(l, c)| format!("{l} {c}")));
            Report::ok(
                text,
                json!({
                    "family": family.name(),
                    "counts": counts
                        .iter()
                        .map(|(l, c)| json!({ "ell": s(l), "classes": s(c) }))
                        .collect::<Vec<_>>(),
                }),
            )
        }
        Command::Ypower { emax } => {
            let table = YPowerTable::build(spec.w(), *emax)?;
            let entries: Vec<(usize, usize, String)> = (0..=*emax)
                .flat_map(|e| {
                    table
                        .row(e)
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(move |(t, c)| (e, t, c.to_string()))
                })
                .collect();
            Report::ok(
                entries.iter().map(|(e, t, c)| format!("y^{e}[{t}] = {c}")).collect(),
                json!({
                    "entries": entries
                        .iter()
                        .map(|(e, t, c)| json!({ "e": s(e), "t": s(t), "coeff": c }))
                        .collect::<Vec<_>>(),
                }),
            )
        }
        Command::SpecCheck => unreachable!("handled above"),
    };
    Ok(report)
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let written = if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("serializable"))
            } else {
                report.text.iter().try_for_each(|line| writeln!(out, "{line}"))
            };
            if written.is_err() {
                return EXIT_DOMAIN;
            }
            report.exit
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.exit
        }
    }
}
