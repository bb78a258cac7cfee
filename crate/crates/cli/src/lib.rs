//! Argument parsing, dispatch and JSON/CSV rendering for the `binsum` binary.

use std::ffi::OsString;

use binsum_core::{
    bernoulli, coeffs, identities, poly, sums, uv, BigRat, CheckReport, CoeffKind, Error, IntPoly,
    Table, UVParams, Variant,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

#[derive(Debug, Parser)]
#[command(
    name = "binsum",
    version,
    about = "Exact residue-class binomial sums and their congruences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One residue-class sum.
    Sum {
        n: u32,
        #[arg(allow_hyphen_values = true)]
        r: i64,
        m: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Plain)]
        variant: VariantArg,
    },
    /// One row of recurrence coefficients, indexed from 1.
    Coeffs {
        m: u32,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Coefficient table 1 (a_m) or 2 (b_m).
    Table {
        #[arg(long)]
        which: u32,
        #[arg(long, default_value_t = 2)]
        from: u32,
        #[arg(long, default_value_t = 12)]
        to: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// U_l^(q)(m, n) for l = 0..=lmax.
    Useq(SeqArgs),
    /// V_l^(q)(m, n) for l = 0..=lmax.
    Vseq(SeqArgs),
    /// Integer coefficients (ascending) of one named polynomial.
    Poly {
        #[arg(long, value_enum)]
        kind: PolyKind,
        n: u32,
    },
    /// Verify an identity or congruence over a parameter sweep.
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    Plain,
    Alt,
    Bracket,
    Star,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    A,
    B,
    C,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PolyKind {
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
    #[value(name = "A")]
    A,
    #[value(name = "f")]
    F,
    #[value(name = "T")]
    T,
    #[value(name = "U")]
    U,
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    m: u32,
    n: u32,
    #[arg(allow_hyphen_values = true)]
    q: i64,
    #[arg(long, default_value_t = 10)]
    lmax: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CheckName {
    Thm11,
    Thm12,
    Cor11,
    Monotone,
    HermiteGlaisher,
    Fleck,
    Catalan,
    Lemma21,
    Eq22,
    Gould,
    Raabe,
    Lemma32,
    Cheb,
    Factor,
    Uvrec,
    Closed,
    Gs,
    Lemma33,
    Harmonic,
    Euler16,
    Special38,
    Tables,
}

/// Range flags default to the acceptance sweep of each check.
#[derive(Debug, Args)]
pub struct CheckArgs {
    name: CheckName,
    #[arg(long)]
    m_max: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
    /// Restrict prime-indexed checks to this single prime.
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    l_max: Option<u32>,
    #[arg(long, default_value_t = 5)]
    max_counterexamples: usize,
}

/// What a run produced: the exit code and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Outcome {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    match execute(&cli.command) {
        Ok(Rendered::Json(value)) => {
            let failed = value.get("pass") == Some(&Value::Bool(false));
            Outcome {
                code: i32::from(failed),
                stdout: format!(
                    "{}\n",
                    serde_json::to_string_pretty(&value).expect("plain JSON")
                ),
                stderr: String::new(),
            }
        }
        Ok(Rendered::Text(text)) => Outcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

enum Rendered {
    Json(Value),
    Text(String),
}

fn rat_str(x: &BigRat) -> String {
    x.to_string()
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(
        xs.into_iter()
            .map(|x| Value::String(x.to_string()))
            .collect(),
    )
}

fn params(pairs: &[(&str, String)]) -> Value {
    let map: Map<String, Value> = pairs
        .iter()
        .map(|(k, v)| (k.to_string(), Value::String(v.clone())))
        .collect();
    Value::Object(map)
}

fn result(command: &str, params: Value, values: Value) -> Value {
    json!({
        "command": command,
        "params": params,
        "values": values,
        "counterexamples": [],
    })
}

fn poly_values(p: &IntPoly) -> Value {
    json!({
        "coefficients": strings(p.coeffs()),
        "degree": p.degree().map_or("-inf".to_string(), |d| d.to_string()),
        "display": p.to_string(),
    })
}

fn execute(command: &Command) -> Result<Rendered, Error> {
    let value = match command {
        Command::Sum { n, r, m, variant } => {
            let variant = match variant {
                VariantArg::Plain => Variant::Plain,
                VariantArg::Alt => Variant::Alternate,
                VariantArg::Bracket => Variant::Bracket,
                VariantArg::Star => Variant::Star,
            };
            let query = sums::SumQuery::new(*n, *r, *m, variant)?;
            result(
                "sum",
                params(&[
                    ("n", n.to_string()),
                    ("r", r.to_string()),
                    ("m", m.to_string()),
                    ("variant", variant.to_string()),
                ]),
                json!({ "result": query.value().to_string() }),
            )
        }
        Command::Coeffs { m, kind } => {
            let kind = match kind {
                KindArg::A => CoeffKind::A,
                KindArg::B => CoeffKind::B,
                KindArg::C => CoeffKind::C,
                KindArg::D => CoeffKind::D,
            };
            let row = coeffs::coeff_row(*m, kind)?;
            result(
                "coeffs",
                params(&[("m", m.to_string()), ("kind", kind.to_string())]),
                json!({ "coefficients": strings(&row.values) }),
            )
        }
        Command::Table {
            which,
            from,
            to,
            format,
        } => {
            let rows = coeffs::table(Table::from_number(*which)?, *from, *to)?;
            if *format == Format::Csv {
                return Ok(Rendered::Text(table_csv(&rows)));
            }
            let rows: Vec<Value> = rows
                .iter()
                .map(|row| json!({ "m": row.m.to_string(), "values": strings(&row.values) }))
                .collect();
            result(
                "table",
                params(&[
                    ("which", which.to_string()),
                    ("from", from.to_string()),
                    ("to", to.to_string()),
                ]),
                json!({ "rows": rows }),
            )
        }
        Command::Useq(args) | Command::Vseq(args) => {
            let (name, family) = match command {
                Command::Useq(_) => ("useq", uv::Family::U),
                _ => ("vseq", uv::Family::V),
            };
            let p = UVParams::new(args.m, args.n, args.q)?;
            let seq = uv::seq(&p, args.lmax, family)?;
            result(
                name,
                params(&[
                    ("m", args.m.to_string()),
                    ("n", args.n.to_string()),
                    ("q", args.q.to_string()),
                    ("lmax", args.lmax.to_string()),
                ]),
                json!({ "sequence": Value::Array(seq.values.iter().map(|v| Value::String(rat_str(v))).collect()) }),
            )
        }
        Command::Poly { kind, n } => {
            let (label, p) = match kind {
                PolyKind::C => ("C", poly::c_poly(*n)?),
                PolyKind::D => ("D", poly::d_poly(*n)?),
                PolyKind::A => ("A", poly::a_poly(*n)?),
                PolyKind::F => ("f", poly::f_char(*n)?),
                PolyKind::T => ("T", poly::cheb_t(*n)),
                PolyKind::U => ("U", poly::cheb_u(*n)),
            };
            result(
                "poly",
                params(&[("kind", label.to_string()), ("n", n.to_string())]),
                poly_values(&p),
            )
        }
        Command::Check(args) => run_check(args)?,
    };
    Ok(Rendered::Json(value))
}

fn table_csv(rows: &[binsum_core::CoeffRow]) -> String {
    let width = rows.iter().map(|r| r.values.len()).max().unwrap_or(0);
    let mut out = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("m".to_string()).chain((1..=width).map(|i| format!("i{i}")));
    out.write_record(header).expect("in-memory write");
    for row in rows {
        let cells = std::iter::once(row.m.to_string()).chain((0..width).map(|i| {
            row.values
                .get(i)
                .map(ToString::to_string)
                .unwrap_or_default()
        }));
        out.write_record(cells).expect("in-memory write");
    }
    String::from_utf8(out.into_inner().expect("in-memory flush")).expect("ASCII digits")
}

const SMALL_PRIMES: [u32; 5] = [3, 5, 7, 11, 13];

fn primes_or(p: Option<u32>, default: &[u32]) -> Vec<u32> {
    p.map_or_else(|| default.to_vec(), |p| vec![p])
}

fn run_check(args: &CheckArgs) -> Result<Value, Error> {
    let m = |d: u32| args.m_max.unwrap_or(d);
    let n = |d: u32| args.n_max.unwrap_or(d);
    let l = |d: u32| args.l_max.unwrap_or(d);
    let mut shown: Vec<(&str, String)> = Vec::new();
    let mut note = |k: &'static str, v: String| shown.push((k, v));

    let report: CheckReport = match args.name {
        CheckName::Thm11 => {
            note("m_max", m(12).to_string());
            note("n_max", n(40).to_string());
            sums::thm11_sweep(m(12), n(40))
        }
        CheckName::Thm12 => {
            note("m_max", m(12).to_string());
            note("n_max", n(40).to_string());
            sums::thm12_sweep(m(12), n(40))
        }
        CheckName::Cor11 => {
            note("m_max", m(12).to_string());
            note("n_max", n(40).to_string());
            sums::cor11_sweep(m(12), n(40))
        }
        CheckName::Monotone => {
            note("m_max", m(12).to_string());
            note("n_max", n(40).to_string());
            sums::monotonicity_sweep(m(12), n(40))
        }
        CheckName::HermiteGlaisher => {
            let primes = primes_or(args.p, &SMALL_PRIMES);
            note("primes", format!("{primes:?}"));
            note("n_max", n(40).to_string());
            sums::hermite_glaisher_sweep(&primes, n(40))?
        }
        CheckName::Fleck => {
            let primes = primes_or(args.p, &[2, 3, 5, 7, 11, 13]);
            note("primes", format!("{primes:?}"));
            note("n_max", n(80).to_string());
            sums::fleck_sweep(&primes, n(80))?
        }
        CheckName::Catalan => {
            let primes = primes_or(args.p, &[3, 5, 7, 11, 13, 17, 19]);
            note("primes", format!("{primes:?}"));
            let mut report = CheckReport::new(format!("p in {primes:?}"));
            for p in primes {
                report.absorb(coeffs::catalan_congruence_check(p)?);
            }
            report
        }
        CheckName::Lemma21 => {
            note("l_max", l(8).to_string());
            identities::lemma_2_1_sweep(l(8), -10, 10)
        }
        CheckName::Eq22 => {
            note("m_max", m(12).to_string());
            identities::curious_identity_sweep(m(12), -10, 10)
        }
        CheckName::Gould => {
            note("m_max", m(40).to_string());
            identities::gould_sweep(m(40))
        }
        CheckName::Raabe => {
            note("m_max", m(6).to_string());
            note("n_max", n(10).to_string());
            bernoulli::raabe_sweep(m(6), n(10))
        }
        CheckName::Lemma32 => {
            note("n_max", n(12).to_string());
            bernoulli::lemma32_sweep(n(12))
        }
        CheckName::Cheb => {
            note("n_max", n(40).to_string());
            let mut report = CheckReport::new(format!("n in [1,{}]", n(40)));
            for k in 1..=n(40) {
                report.absorb(poly::cheb_relation_check(k)?);
            }
            report
        }
        CheckName::Factor => {
            note("n_max", n(60).to_string());
            let mut report = CheckReport::new(format!("n in [1,{}]", n(60)));
            for k in 1..=n(60) {
                report.absorb(poly::factorization_check(k)?);
            }
            report
        }
        CheckName::Uvrec => {
            note("m_max", m(10).to_string());
            note("l_max", format!("2m+{}", l(10)));
            uv::recurrence_sweep(m(10), l(10))?
        }
        CheckName::Closed => {
            note("m_max", m(10).to_string());
            uv::closed_form_sweep(m(10))?
        }
        CheckName::Gs => {
            let primes = primes_or(args.p, &SMALL_PRIMES);
            note("primes", format!("{primes:?}"));
            note("m_max", m(10).to_string());
            bernoulli::gs_sweep(&primes, m(10))?
        }
        CheckName::Euler16 => {
            let primes = primes_or(args.p, &SMALL_PRIMES);
            note("primes", format!("{primes:?}"));
            note("m_max", m(10).to_string());
            bernoulli::euler_cong_sweep(&primes, m(10))?
        }
        CheckName::Lemma33 => {
            let primes = primes_or(args.p, &SMALL_PRIMES);
            note("primes", format!("{primes:?}"));
            note("m_max", m(10).to_string());
            bernoulli::lemma33_sweep(&primes, m(10))?
        }
        CheckName::Harmonic => {
            let primes = primes_or(args.p, &SMALL_PRIMES);
            note("primes", format!("{primes:?}"));
            note("m_max", m(10).to_string());
            bernoulli::harmonic_sweep(&primes, m(10))?
        }
        CheckName::Special38 => {
            let primes = primes_or(args.p, &[3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
            note("primes", format!("{primes:?}"));
            note("n_max", n(12).to_string());
            bernoulli::special_m_sweep(&primes, n(12))?
        }
        CheckName::Tables => coeffs::tables_check(),
    };
    shown.push(("max_counterexamples", args.max_counterexamples.to_string()));
    shown.push((
        "name",
        args.name
            .to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string(),
    ));

    let counterexamples: Vec<Value> = report
        .counterexamples
        .iter()
        .take(args.max_counterexamples)
        .map(|c| {
            json!({
                "inputs": c.inputs,
                "lhs": rat_str(&c.lhs),
                "rhs": rat_str(&c.rhs),
                "note": c.note,
            })
        })
        .collect();
    Ok(json!({
        "command": "check",
        "params": params(&shown),
        "pass": report.pass(),
        "values": {
            "swept": report.swept,
            "instances": report.instances.to_string(),
            "counterexample_count": report.counterexamples.len().to_string(),
        },
        "counterexamples": counterexamples,
    }))
}
