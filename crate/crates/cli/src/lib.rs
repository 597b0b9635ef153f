//! Command-line front end. [`run`] is the whole program; `main` only wires
//! it to the process streams.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monolc::cech::oracle_table;
use monolc::parse::format_monomial;
use monolc::polarization::polarize_ideal;
use monolc::simplicial::format_complex;
use monolc::takayama::{depth_and_dim, lc_table, takayama_complex};
use monolc::verifier::{
    random_ideal, verify_depth_shift, verify_main_theorem, verify_reduction_chain_all,
    VerifyOptions,
};
use monolc::{parse_ideal, rho, FieldSpec, LcTable, MonomialIdeal, MultiDegree};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(
    name = "monolc",
    version,
    about = "Local cohomology of monomial quotients and their polarizations"
)]
pub struct CliConfig {
    /// Coefficient field: `q` or `gf:<p>`.
    #[arg(long, global = true, default_value = "q")]
    pub field: FieldSpec,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Ideal file; `-` or omitted reads standard input.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the ideal in canonical form.
    Parse(Input),
    /// Print the polarization, with variables `x_i_j`.
    Polarize(Input),
    /// Print the degree complex Δ_a.
    Complex {
        #[command(flatten)]
        input: Input,
        /// Comma-separated degree, one entry per variable in file order.
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
    },
    /// Local cohomology table over the canonical degree box.
    Table(Input),
    /// Same table, computed from Čech strands.
    Oracle(Input),
    /// Depth and dimension of S/I.
    Depth(Input),
    /// Check the polarization isomorphism on every box degree.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Also check the restriction / partial polarization chain.
        #[arg(long)]
        chain: bool,
        /// Also check that depth and dimension shift by ρ - n.
        #[arg(long)]
        depth_shift: bool,
    },
    /// Verify random ideals.
    Fuzz {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        max_exp: u32,
        #[arg(long, default_value_t = 4)]
        gens: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure that maps to an exit code and a message on stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<monolc::Error> for Failure {
    fn from(e: monolc::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_ideal(input: &Input, stdin: &mut dyn Read) -> Result<MonomialIdeal, Failure> {
    let text = match &input.input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    Ok(parse_ideal(&text)?)
}

fn parse_degree(text: &str, ideal: &MonomialIdeal) -> Result<MultiDegree, Failure> {
    let entries = text
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            usage(format!(
                "bad degree `{text}`: expected comma-separated integers"
            ))
        })?;
    if entries.len() != ideal.n_vars() {
        return Err(usage(format!(
            "degree has {} entries but the ring has {} variables",
            entries.len(),
            ideal.n_vars()
        )));
    }
    Ok(MultiDegree::new(entries))
}

/// `(x^2, x*y)`; the zero ideal prints as `(0)`.
fn inline_ideal(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "(0)".to_string();
    }
    let gens: Vec<String> = ideal
        .gens()
        .iter()
        .map(|m| format_monomial(m, ideal.var_names()))
        .collect();
    format!("({})", gens.join(", "))
}

fn reject_tsv(format: Format, command: &str) -> Result<(), Failure> {
    if format == Format::Tsv {
        Err(usage(format!(
            "--format tsv is only supported by `table` and `oracle`, not `{command}`"
        )))
    } else {
        Ok(())
    }
}

fn render_table(table: &LcTable, format: Format) -> String {
    match format {
        Format::Text => table.to_text(),
        Format::Json => table.to_json() + "\n",
        Format::Tsv => table.to_tsv(),
    }
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("json value serializes") + "\n"
}

fn execute(cfg: &CliConfig, stdin: &mut dyn Read) -> Result<(String, i32), Failure> {
    let field = cfg.field;
    let format = cfg.format;
    match &cfg.command {
        Command::Parse(input) => {
            reject_tsv(format, "parse")?;
            let ideal = read_ideal(input, stdin)?;
            let out = match format {
                Format::Json => pretty(json!({
                    "vars": ideal.var_names(),
                    "gens": ideal.gens().iter().map(|m| format_monomial(m, ideal.var_names())).collect::<Vec<_>>(),
                    "rho": rho(&ideal).entries(),
                })),
                _ => ideal.to_string(),
            };
            Ok((out, EXIT_OK))
        }
        Command::Polarize(input) => {
            reject_tsv(format, "polarize")?;
            let ideal = read_ideal(input, stdin)?;
            let p = polarize_ideal(&ideal);
            let out = match format {
                Format::Json => pretty(json!({
                    "vars": p.ideal.var_names(),
                    "gens": p.ideal.gens().iter().map(|m| format_monomial(m, p.ideal.var_names())).collect::<Vec<_>>(),
                    "rho": p.rho.entries(),
                    "shift": p.shift(),
                })),
                _ => p.ideal.to_string(),
            };
            Ok((out, EXIT_OK))
        }
        Command::Complex { input, degree } => {
            reject_tsv(format, "complex")?;
            let ideal = read_ideal(input, stdin)?;
            let a = parse_degree(degree, &ideal)?;
            let complex = takayama_complex(&ideal, &a)?;
            let out = match format {
                Format::Json => {
                    let facets: Vec<Vec<&str>> = complex
                        .facets()
                        .iter()
                        .map(|f| f.iter().map(|&v| ideal.var_names()[v].as_str()).collect())
                        .collect();
                    pretty(json!({
                        "vars": ideal.var_names(),
                        "degree": a.entries(),
                        "void": complex.is_void(),
                        "facets": if complex.is_void() { Vec::new() } else { facets },
                    }))
                }
                _ => format_complex(&complex, ideal.var_names()) + "\n",
            };
            Ok((out, EXIT_OK))
        }
        Command::Table(input) => {
            let ideal = read_ideal(input, stdin)?;
            Ok((render_table(&lc_table(&ideal, field)?, format), EXIT_OK))
        }
        Command::Oracle(input) => {
            let ideal = read_ideal(input, stdin)?;
            Ok((render_table(&oracle_table(&ideal, field)?, format), EXIT_OK))
        }
        Command::Depth(input) => {
            reject_tsv(format, "depth")?;
            let ideal = read_ideal(input, stdin)?;
            let d = depth_and_dim(&ideal, field)?;
            let out = match format {
                Format::Json => pretty(json!({
                    "depth": d.depth,
                    "dim": d.dim,
                    "cohen_macaulay": d.is_cohen_macaulay(),
                })),
                _ => format!(
                    "depth {}\ndim {}\ncohen-macaulay {}\n",
                    d.depth,
                    d.dim,
                    if d.is_cohen_macaulay() { "yes" } else { "no" }
                ),
            };
            Ok((out, EXIT_OK))
        }
        Command::Verify {
            input,
            chain,
            depth_shift,
        } => {
            reject_tsv(format, "verify")?;
            let ideal = read_ideal(input, stdin)?;
            let mut report = verify_main_theorem(&ideal, field);
            if *chain {
                report.merge(verify_reduction_chain_all(
                    &ideal,
                    field,
                    VerifyOptions::default(),
                )?);
            }
            if *depth_shift {
                report.merge(verify_depth_shift(&ideal, field)?);
            }
            let out = match format {
                Format::Json => report.to_json() + "\n",
                _ => format!(
                    "ideal {} over {}\n{}",
                    inline_ideal(&ideal),
                    field,
                    report.to_text()
                ),
            };
            Ok((
                out,
                if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_FAILED
                },
            ))
        }
        Command::Fuzz {
            trials,
            n,
            max_exp,
            gens,
            seed,
        } => {
            reject_tsv(format, "fuzz")?;
            let mut lines = String::new();
            let mut failed = Vec::new();
            for t in 0..*trials {
                let ideal = random_ideal(*n, *max_exp, *gens, seed.wrapping_add(t))?;
                let report = verify_main_theorem(&ideal, field);
                lines.push_str(&format!(
                    "trial {t}: {} {}\n",
                    inline_ideal(&ideal),
                    if report.passed() { "ok" } else { "FAIL" }
                ));
                if !report.passed() {
                    failed.push(report);
                }
            }
            let pass = failed.is_empty();
            let out = match format {
                Format::Json => {
                    let failures: Vec<serde_json::Value> = failed
                        .iter()
                        .map(|r| serde_json::from_str(&r.to_json()).expect("report json parses"))
                        .collect();
                    pretty(json!({
                        "trials": trials,
                        "field": field.to_string(),
                        "failures": failures,
                        "pass": pass,
                    }))
                }
                _ => {
                    for r in &failed {
                        lines.push_str(&r.to_text());
                    }
                    lines.push_str(&format!(
                        "{} trials, {} failures: {}\n",
                        trials,
                        failed.len(),
                        if pass { "PASS" } else { "FAIL" }
                    ));
                    lines
                }
            };
            Ok((out, if pass { EXIT_OK } else { EXIT_FAILED }))
        }
    }
}

/// Runs one command. Exit code 0 on success, 1 when a verification fails,
/// 2 on usage, parse or domain errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cfg, stdin) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
