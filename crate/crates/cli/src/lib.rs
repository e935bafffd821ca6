//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit code with captured output, so the binary is a thin wrapper.
//!
//! Exit codes: 0 success, 1 a verification or comparison failed, 2 usage or
//! parameter error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use evenodd::catalog::{NamedSeq, SeqParams};
use evenodd::closed_forms as cf;
use evenodd::seq::{compare, emit_bfile, parse_bfile, IntegerSequence, Periodicity};
use evenodd::series::{self, expand_rational, IntPolynomial, TruncatedSeries};
use evenodd::{CompositionClass, Exec, SweepConfig, Theorem};
use num_bigint::BigInt;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "evenodd",
    version,
    about = "Even and odd compositions with restricted parts"
)]
struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Bfile,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of compositions in a class.
    Count(ClassArgs),
    /// Odd-length count, even-length count and their difference.
    Signed(ClassArgs),
    /// Evaluate a closed formula.
    Formula(FormulaArgs),
    /// Print generating-function coefficients.
    Series(SeriesArgs),
    /// Sweep a theorem against enumeration and report.
    Verify(VerifyArgs),
    /// Detect the period of a named sequence.
    Period(PeriodArgs),
    /// Emit or check OEIS b-files.
    Bfile(BfileArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassName {
    All,
    Minpart,
    #[value(alias = "congruent")]
    MinpartCongruent,
    Distinct,
    Odd,
    ExactSmall,
    Guarded,
    FirstKind,
}

#[derive(Debug, Clone, Copy, Default, Args)]
struct Params {
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
}

#[derive(Debug, Args)]
struct ClassArgs {
    #[arg(long, value_enum)]
    class: ClassName,
    /// Index n; for classes measured at n + k - 1 the size is shifted.
    #[arg(long, conflicts_with = "size", required_unless_present = "size")]
    n: Option<u32>,
    /// Composition size, bypassing the n + k - 1 shift.
    #[arg(long)]
    size: Option<u32>,
    #[command(flatten)]
    params: Params,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormulaName {
    Thm2,
    Munagi,
    Thm3,
    CorRs,
    CorPeriod,
    Thm4,
    Thm4a,
    Thm4bar,
}

#[derive(Debug, Args)]
struct FormulaArgs {
    #[arg(value_enum)]
    which: FormulaName,
    #[arg(long)]
    n: u32,
    #[command(flatten)]
    params: Params,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    Thm2,
    Thm3,
    CorPeriod,
    Thm4bar,
    Pentagonal,
    Rational,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    #[arg(value_enum)]
    which: SeriesName,
    /// Truncation order in x.
    #[arg(long)]
    order: usize,
    /// Truncation order in y (thm4bar).
    #[arg(long, default_value_t = 3)]
    y_order: usize,
    /// Numerator coefficients, constant term first (rational).
    #[arg(long, allow_hyphen_values = true)]
    num: Option<String>,
    /// Denominator coefficients, constant term first (rational).
    #[arg(long, allow_hyphen_values = true)]
    den: Option<String>,
    #[command(flatten)]
    params: Params,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Theorem name, or `all`.
    theorem: String,
    #[arg(long)]
    max_n: Option<u32>,
    #[arg(long)]
    max_k: Option<u32>,
    #[arg(long)]
    max_r: Option<u32>,
    #[arg(long)]
    max_m: Option<u32>,
    /// Evaluate instances on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug, Args)]
struct PeriodArgs {
    #[arg(long)]
    seq: String,
    #[arg(long)]
    max_n: u32,
    #[command(flatten)]
    params: Params,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BfileAction {
    Emit,
    Check,
}

#[derive(Debug, Args)]
struct BfileArgs {
    #[arg(value_enum)]
    action: BfileAction,
    #[arg(long)]
    seq: String,
    /// Index given to the first term (defaults to the sequence's own start).
    #[arg(long, allow_hyphen_values = true)]
    offset: Option<i64>,
    /// Last n to generate (emit defaults to 30; check covers the file).
    #[arg(long)]
    max_n: Option<u32>,
    /// Output path for emit, input path for check.
    #[arg(long)]
    file: Option<PathBuf>,
    #[command(flatten)]
    params: Params,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

impl From<evenodd::Error> for Outcome {
    fn from(e: evenodd::Error) -> Self {
        Outcome::usage(format!("error: {e}\n"))
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            };
        }
    };
    let result = match cli.command {
        Command::Count(a) => count(&a, cli.format, false),
        Command::Signed(a) => count(&a, cli.format, true),
        Command::Formula(a) => formula(&a, cli.format),
        Command::Series(a) => series_cmd(&a, cli.format),
        Command::Verify(a) => verify_cmd(&a, cli.format),
        Command::Period(a) => period(&a),
        Command::Bfile(a) => bfile(&a),
    };
    result.unwrap_or_else(|o| o)
}

type CmdResult = Result<Outcome, Outcome>;

fn need(name: &str, v: Option<u32>) -> Result<u32, Outcome> {
    v.ok_or_else(|| Outcome::usage(format!("error: --{name} is required here\n")))
}

fn build_class(name: ClassName, p: &Params) -> Result<CompositionClass, Outcome> {
    Ok(match name {
        ClassName::All => CompositionClass::All,
        ClassName::Distinct => CompositionClass::DistinctParts,
        ClassName::Odd => CompositionClass::OddParts,
        ClassName::Minpart => CompositionClass::MinPart { k: need("k", p.k)? },
        ClassName::MinpartCongruent => CompositionClass::MinPartCongruent {
            k: need("k", p.k)?,
            r: need("r", p.r)?,
            s: need("s", p.s)?,
        },
        ClassName::ExactSmall => CompositionClass::ExactSmall {
            k: need("k", p.k)?,
            m: need("m", p.m)?,
        },
        ClassName::Guarded => CompositionClass::ExactSmallGuarded {
            k: need("k", p.k)?,
            m: need("m", p.m)?,
        },
        ClassName::FirstKind => CompositionClass::FirstKind {
            k: need("k", p.k)?,
            m: need("m", p.m)?,
        },
    })
}

/// Classes whose signed counts are indexed by `n` at size `n + k - 1`.
fn shifted_k(class: &CompositionClass) -> Option<u32> {
    match *class {
        CompositionClass::MinPart { k }
        | CompositionClass::MinPartCongruent { k, .. }
        | CompositionClass::ExactSmall { k, .. }
        | CompositionClass::ExactSmallGuarded { k, .. } => Some(k),
        _ => None,
    }
}

fn count(a: &ClassArgs, format: Format, signed: bool) -> CmdResult {
    let class = build_class(a.class, &a.params)?;
    class.validate()?;
    let size = match (a.size, a.n) {
        (Some(size), _) => size,
        (None, Some(n)) => match shifted_k(&class) {
            Some(k) if n == 0 => {
                return Err(Outcome::usage(format!(
                    "error: n must be at least 1 for this class (size is n + k - 1 = n + {})\n",
                    k - 1
                )))
            }
            Some(k) => n + k - 1,
            None => n,
        },
        (None, None) => unreachable!("clap requires --n or --size"),
    };
    let out = if signed {
        let sc = class.signed_count(size)?;
        match format {
            Format::Plain => format!("{sc} size={size}\n"),
            Format::Csv => format!(
                "size,odd,even,diff\n{size},{},{},{}\n",
                sc.odd, sc.even, sc.diff
            ),
            Format::Bfile => format!("{size} {}\n", sc.diff),
        }
    } else {
        let c = class.count(size)?;
        match format {
            Format::Plain => format!("count={c} size={size}\n"),
            Format::Csv => format!("size,count\n{size},{c}\n"),
            Format::Bfile => format!("{size} {c}\n"),
        }
    };
    Ok(Outcome::ok(out))
}

fn formula(a: &FormulaArgs, format: Format) -> CmdResult {
    let p = &a.params;
    let n = a.n;
    let value: BigInt = match a.which {
        FormulaName::Thm2 => cf::thm2_b(need("k", p.k)?, n)?,
        FormulaName::Munagi => cf::munagi_a(need("k", p.k)?, n)?.into(),
        FormulaName::Thm3 => cf::thm3_b(need("k", p.k)?, n, need("r", p.r)?, need("s", p.s)?)?,
        FormulaName::CorRs => {
            cf::cor_rs_indicator(need("k", p.k)?, n, need("r", p.r)?, need("s", p.s)?)?
        }
        FormulaName::CorPeriod => {
            cf::cor_period_b(need("k", p.k)?, n, need("r", p.r)?, need("s", p.s)?)?
        }
        FormulaName::Thm4 | FormulaName::Thm4a => {
            let (k, m) = (need("k", p.k)?, need("m", p.m)?);
            let signed = a.which == FormulaName::Thm4;
            let sum = if signed {
                cf::thm4_b_sum(k, n, m)?
            } else {
                cf::thm4_a_sum(k, n, m)?
            };
            if k >= 2 {
                let lam = if signed {
                    cf::thm4_b_lambda(k, n, m)?
                } else {
                    cf::thm4_a_lambda(k, n, m)?
                };
                if lam != sum {
                    return Err(Outcome {
                        code: EXIT_FAIL,
                        stdout: String::new(),
                        stderr: format!("box form {lam} disagrees with sum form {sum}\n"),
                    });
                }
            }
            sum
        }
        FormulaName::Thm4bar => cf::thm4bar_b(need("k", p.k)?, n, need("m", p.m)?)?,
    };
    let name = a
        .which
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    Ok(Outcome::ok(match format {
        Format::Plain => format!("{value}\n"),
        Format::Csv => format!("formula,n,value\n{name},{n},{value}\n"),
        Format::Bfile => format!("{n} {value}\n"),
    }))
}

fn parse_coeffs(flag: &str, text: Option<&String>) -> Result<IntPolynomial, Outcome> {
    let text =
        text.ok_or_else(|| Outcome::usage(format!("error: --{flag} is required for rational\n")))?;
    let coeffs = text
        .split(',')
        .map(|t| t.trim().parse::<BigInt>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            Outcome::usage(format!(
                "error: --{flag} must be comma-separated integers\n"
            ))
        })?;
    Ok(IntPolynomial::new(coeffs))
}

fn render_series(s: &TruncatedSeries, format: Format) -> String {
    match format {
        Format::Plain => format!("{s}\n"),
        Format::Csv => {
            let mut out = String::from("exponent,coefficient\n");
            for (e, c) in s.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{e},{c}");
            }
            out
        }
        Format::Bfile => emit_bfile(s.coeffs(), 0),
    }
}

fn series_cmd(a: &SeriesArgs, format: Format) -> CmdResult {
    let p = &a.params;
    let s = match a.which {
        SeriesName::Thm2 => series::gf_thm2(need("k", p.k)?, a.order)?,
        SeriesName::Thm3 => {
            series::gf_thm3(need("k", p.k)?, need("r", p.r)?, need("s", p.s)?, a.order)?
        }
        SeriesName::CorPeriod => series::gf_cor_period(need("r", p.r)?, a.order)?,
        SeriesName::Pentagonal => series::pentagonal_product(a.order),
        SeriesName::Rational => {
            let num = parse_coeffs("num", a.num.as_ref())?;
            let den = parse_coeffs("den", a.den.as_ref())?;
            expand_rational(&num, &den, a.order)?
        }
        SeriesName::Thm4bar => {
            let g = series::gf_thm4bar(need("k", p.k)?, a.order, a.y_order)?;
            let mut out = String::new();
            match format {
                Format::Plain => {
                    for m in 0..=a.y_order {
                        let row: Vec<String> = g.rows().iter().map(|r| r[m].to_string()).collect();
                        let _ = writeln!(out, "y^{m}: {}", row.join(","));
                    }
                }
                Format::Csv => {
                    out.push_str("x_exponent,y_exponent,coefficient\n");
                    for (x, row) in g.rows().iter().enumerate() {
                        for (y, c) in row.iter().enumerate() {
                            let _ = writeln!(out, "{x},{y},{c}");
                        }
                    }
                }
                Format::Bfile => {
                    return Err(Outcome::usage(
                        "error: a bivariate series has no b-file rendering\n",
                    ));
                }
            }
            return Ok(Outcome::ok(out));
        }
    };
    Ok(Outcome::ok(render_series(&s, format)))
}

fn verify_cmd(a: &VerifyArgs, format: Format) -> CmdResult {
    let theorems: Vec<Theorem> = if a.theorem == "all" {
        Theorem::ALL.to_vec()
    } else {
        vec![a.theorem.parse::<Theorem>()?]
    };
    let cfg = SweepConfig {
        max_n: a.max_n,
        max_k: a.max_k,
        max_r: a.max_r,
        max_m: a.max_m,
    };
    let exec = if a.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    let mut out = String::new();
    let mut all_pass = true;
    for (i, t) in theorems.iter().enumerate() {
        let rep = evenodd::verify(*t, &cfg, exec);
        all_pass &= rep.passed();
        match format {
            Format::Csv => {
                let csv = rep.render_csv();
                // one header for the whole table
                out.push_str(if i == 0 {
                    &csv
                } else {
                    csv.split_once('\n').map_or("", |x| x.1)
                });
            }
            _ => {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&rep.render_plain());
            }
        }
    }
    Ok(Outcome {
        code: if all_pass { EXIT_OK } else { EXIT_FAIL },
        stdout: out,
        stderr: String::new(),
    })
}

fn seq_params(p: &Params) -> SeqParams {
    SeqParams {
        k: p.k,
        r: p.r,
        s: p.s,
        m: p.m,
    }
}

fn period(a: &PeriodArgs) -> CmdResult {
    let named = NamedSeq::from_name(&a.seq, &seq_params(&a.params))?;
    let seq = named.generate(a.max_n)?;
    if seq.is_empty() {
        return Err(Outcome::usage("error: the window is empty\n"));
    }
    let out = match seq.detect_period() {
        Periodicity::Periodic { preperiod, period } => {
            format!(
                "preperiod={preperiod} period={period} window={}\n",
                seq.len()
            )
        }
        Periodicity::Aperiodic => format!("aperiodic window={}\n", seq.len()),
    };
    Ok(Outcome::ok(out))
}

fn bfile(a: &BfileArgs) -> CmdResult {
    let named = NamedSeq::from_name(&a.seq, &seq_params(&a.params))?;
    let start = i64::from(named.start());
    let offset = a.offset.unwrap_or(start);
    match a.action {
        BfileAction::Emit => {
            let seq = named.generate(a.max_n.unwrap_or(30))?;
            let text = emit_bfile(&seq.values, offset);
            match &a.file {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| {
                        Outcome::usage(format!("error: cannot write {}: {e}\n", path.display()))
                    })?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        BfileAction::Check => {
            let path = a
                .file
                .as_ref()
                .ok_or_else(|| Outcome::usage("error: --file is required for check\n"))?;
            let text = fs::read_to_string(path).map_err(|e| {
                Outcome::usage(format!("error: cannot read {}: {e}\n", path.display()))
            })?;
            let record = parse_bfile(&text)?;
            let max_n = match (a.max_n, record.last_index()) {
                (Some(m), _) => m,
                (None, Some(last)) => u32::try_from(last - offset + start).unwrap_or(0),
                (None, None) => start as u32,
            };
            let generated = named.generate(max_n.max(start as u32))?;
            let seq = IntegerSequence::new(offset, generated.values);
            let rep = compare(&seq, &record)?;
            Ok(match rep.mismatch {
                None => Outcome::ok(format!(
                    "match over {}..={} ({} terms)\n",
                    rep.first,
                    rep.last,
                    rep.compared()
                )),
                Some(m) => Outcome {
                    code: EXIT_FAIL,
                    stdout: format!(
                        "mismatch at index {}: b-file {}, computed {}\n",
                        m.index, m.expected, m.actual
                    ),
                    stderr: String::new(),
                },
            })
        }
    }
}
