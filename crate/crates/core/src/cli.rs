//! Command-line front end: every library operation behind a subcommand, with
//! JSON output by default and exact data (polynomials, intervals,
//! coefficient vectors) always included.
//!
//! Exit codes: 0 success, 1 input error, 2 verification-suite failure,
//! 3 undecided result under `--require-exact`.

use crate::algebraic::{make_algebraic, AlgebraicError, AlgebraicReal, FieldElement};
use crate::bases::{
    self, enumerate_b2_window_with, family_cleared_poly, family_has_root, family_root,
    family_value_at_rational, known_bases_m1, FamilyError, FamilyId, FamilyVariant,
    DEFAULT_SWEEP_K,
};
use crate::counting::{
    count_expansions, CountError, CountKind, DEFAULT_BRANCH_CAP, DEFAULT_DEPTH_CAP,
};
use crate::expansions::{
    evaluate, is_unique_expansion, quasi_greedy_alpha, unique_set_catalog, Alphabet, BaseContext,
    DigitSeq, ExpansionError, DEFAULT_ALPHA_HORIZON,
};
use crate::poly::IntPoly;
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};
use std::ffi::OsString;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Algebraic(#[from] AlgebraicError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Count(#[from] CountError),
}

impl CliError {
    /// Stable machine-readable code for the error.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Input(_) => "InvalidInput",
            CliError::Algebraic(e) => match e {
                AlgebraicError::ZeroPolynomial => "ZeroPolynomial",
                AlgebraicError::NoRootInWindow => "NoRootInWindow",
                AlgebraicError::MultipleRootsInWindow(_) => "MultipleRootsInWindow",
                AlgebraicError::DivisionByZero => "DivisionByZero",
                AlgebraicError::FieldMismatch => "FieldMismatch",
                AlgebraicError::IrreducibilityUnverified(_) => "IrreducibilityUnverified",
                AlgebraicError::Unsupported(_) => "Unsupported",
            },
            CliError::Expansion(e) => match e {
                ExpansionError::DigitOutOfRange { .. } => "DigitOutOfRange",
                ExpansionError::HorizonExceeded { .. } => "HorizonExceeded",
                ExpansionError::AlphaUndecided => "AlphaUndecided",
                ExpansionError::BaseOutOfWindow => "BaseOutOfWindow",
                ExpansionError::InvalidBase => "InvalidBase",
                ExpansionError::Parse(_) => "ParseError",
                ExpansionError::Algebraic(_) => "Algebraic",
            },
            CliError::Family(e) => match e {
                FamilyError::InvalidFamily(_) => "InvalidFamily",
                FamilyError::NoRoot => "NoRoot",
                FamilyError::Algebraic(_) => "Algebraic",
            },
            CliError::Count(e) => match e {
                CountError::OutOfInterval => "OutOfInterval",
                CountError::Algebraic(_) => "Algebraic",
                CountError::Expansion(_) => "Expansion",
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum VariantArg {
    Even,
    Odd1,
    Odd2,
    Odd3,
}

impl From<VariantArg> for FamilyVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Even => FamilyVariant::Even,
            VariantArg::Odd1 => FamilyVariant::Odd1,
            VariantArg::Odd2 => FamilyVariant::Odd2,
            VariantArg::Odd3 => FamilyVariant::Odd3,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "multibase",
    about = "Exact expansions of reals in non-integer bases: critical bases, \
             unique-expansion tests, and certified expansion counting"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Decimal digits for approximations (env MULTIBASE_DIGITS overrides the
    /// default of 10).
    #[arg(long, global = true)]
    digits: Option<u32>,
    /// Exit with status 3 when a result is undecided.
    #[arg(long, global = true)]
    require_exact: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The generalized golden ratio p1(M).
    P1 {
        #[arg(long = "M")]
        m_big: u32,
    },
    /// The upper window endpoint p2(M).
    P2 {
        #[arg(long = "M")]
        m_big: u32,
    },
    /// The smallest two-expansion base q2(M).
    Q2 {
        #[arg(long = "M")]
        m_big: u32,
    },
    /// Quasi-greedy expansion of 1 in the given base.
    Alpha {
        #[arg(long = "M")]
        m_big: u32,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = DEFAULT_ALPHA_HORIZON)]
        horizon: usize,
    },
    /// Test whether a digit sequence is the unique expansion of its value.
    Unique {
        #[arg(long = "M")]
        m_big: u32,
        #[arg(long)]
        base: String,
        #[arg(long)]
        seq: String,
    },
    /// Catalog of unique expansions for a base in (p1, p2].
    Catalog {
        #[arg(long = "M")]
        m_big: u32,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 4)]
        max_preperiod: usize,
    },
    /// Inspect one parametric family: existence, root, or value at a point.
    Family {
        #[arg(long = "M")]
        m_big: u32,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        u: u32,
        #[arg(long)]
        v: u32,
        /// Isolate the family root beyond p1.
        #[arg(long)]
        root: bool,
        /// Evaluate the family function at a rational point.
        #[arg(long)]
        value_at: Option<String>,
    },
    /// Enumerate B2(M) ∩ (p1, p2] by full parameter sweep.
    EnumerateB2 {
        #[arg(long = "M")]
        m_big: u32,
        #[arg(long, default_value_t = DEFAULT_SWEEP_K)]
        sweep_k: u32,
    },
    /// Count the expansions of a point with certificates.
    Count {
        #[arg(long = "M")]
        m_big: u32,
        #[arg(long)]
        base: String,
        /// A rational like 3/2, a digit sequence like "1(1)", or
        /// elem:<c0>,<c1>,... coefficients in Q(q).
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH_CAP)]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_BRANCH_CAP)]
        branches: usize,
    },
    /// The point with exactly k expansions at M=2, q=1+√2.
    ConstructXk {
        #[arg(long)]
        k: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let s = s.trim();
    let mk_err = || CliError::Input(format!("cannot parse rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().map_err(|_| mk_err())?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| mk_err())?;
            if d == num_bigint::BigInt::from(0) {
                return Err(CliError::Input("zero denominator".into()));
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: num_bigint::BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Base specifications: `q2:M` | `p1:M` | `p2:M` | `poly:<coeffs>@<lo>:<hi>`.
pub fn parse_base_spec(spec: &str) -> Result<AlgebraicReal, CliError> {
    if let Some(rest) = spec.strip_prefix("q2:") {
        let m: u32 = rest
            .parse()
            .map_err(|_| CliError::Input(format!("bad M in base spec `{spec}`")))?;
        return Ok(bases::q2(m));
    }
    if let Some(rest) = spec.strip_prefix("p1:") {
        let m: u32 = rest
            .parse()
            .map_err(|_| CliError::Input(format!("bad M in base spec `{spec}`")))?;
        return Ok(bases::p1(m));
    }
    if let Some(rest) = spec.strip_prefix("p2:") {
        let m: u32 = rest
            .parse()
            .map_err(|_| CliError::Input(format!("bad M in base spec `{spec}`")))?;
        return Ok(bases::p2(m));
    }
    if let Some(rest) = spec.strip_prefix("poly:") {
        let (coeffs, window) = rest
            .split_once('@')
            .ok_or_else(|| CliError::Input(format!("base spec `{spec}` needs @lo:hi")))?;
        let poly = IntPoly::parse(coeffs).map_err(CliError::Input)?;
        let (lo, hi) = window
            .split_once(':')
            .ok_or_else(|| CliError::Input(format!("window `{window}` needs lo:hi")))?;
        let lo = parse_rational(lo)?;
        let hi = parse_rational(hi)?;
        return Ok(make_algebraic(&poly, (&lo, &hi))?);
    }
    Err(CliError::Input(format!(
        "unrecognized base spec `{spec}` (expected q2:M, p1:M, p2:M or poly:...@lo:hi)"
    )))
}

/// Point specifications for `count`: rational, digit sequence, or
/// `elem:<c0>,<c1>,...` coefficients in Q(q).
fn parse_point(x: &str, ctx: &BaseContext) -> Result<FieldElement, CliError> {
    let x = x.trim();
    if let Some(rest) = x.strip_prefix("elem:") {
        let coeffs: Result<Vec<BigRational>, CliError> =
            rest.split(',').map(parse_rational).collect();
        return Ok(ctx.field().element(coeffs?));
    }
    if x.contains('(') {
        let seq = DigitSeq::parse(x)?;
        return Ok(evaluate(&seq, ctx)?);
    }
    Ok(ctx.field().from_rational(&parse_rational(x)?))
}

fn alg_json(a: &AlgebraicReal, digits: u32) -> Value {
    let (lo, hi) = a.interval();
    json!({
        "poly": a.poly().to_descending_string(),
        "interval": format!("{lo}:{hi}"),
        "decimal": a.decimal_string(digits),
    })
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let digits = cli.digits.unwrap_or_else(|| {
        std::env::var("MULTIBASE_DIGITS")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(10)
    });
    match dispatch(&cli, digits) {
        Ok(code) => code,
        Err(e) => {
            let payload = json!({"error": {"code": e.code(), "message": e.to_string()}});
            eprintln!("{payload}");
            1
        }
    }
}

fn print_value(v: &Value, format: OutputFormat) {
    match format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(v).unwrap()),
        OutputFormat::Text => print_text(v, 0),
    }
}

fn print_text(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}{k}:");
                        print_text(val, indent + 1);
                    }
                    _ => println!("{pad}{k}: {}", scalar_text(val)),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}-");
                        print_text(item, indent + 1);
                    }
                    _ => println!("{pad}- {}", scalar_text(item)),
                }
            }
        }
        _ => println!("{pad}{}", scalar_text(v)),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn dispatch(cli: &Cli, digits: u32) -> Result<i32, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::P1 { m_big } => {
            check_m(*m_big)?;
            print_value(&alg_json(&bases::p1(*m_big), digits), format);
            Ok(0)
        }
        Command::P2 { m_big } => {
            check_m(*m_big)?;
            print_value(&alg_json(&bases::p2(*m_big), digits), format);
            Ok(0)
        }
        Command::Q2 { m_big } => {
            check_m(*m_big)?;
            print_value(&alg_json(&bases::q2(*m_big), digits), format);
            Ok(0)
        }
        Command::Alpha {
            m_big,
            base,
            horizon,
        } => {
            check_m(*m_big)?;
            let ctx = BaseContext::new(Alphabet::new(*m_big), parse_base_spec(base)?)?;
            match quasi_greedy_alpha(&ctx, *horizon) {
                Ok(alpha) => {
                    print_value(
                        &json!({"alpha": alpha.to_string(), "decided": true}),
                        format,
                    );
                    Ok(0)
                }
                Err(ExpansionError::HorizonExceeded { horizon, prefix }) => {
                    print_value(
                        &json!({
                            "decided": false,
                            "horizon": horizon,
                            "prefix": crate::expansions::format_word(&prefix),
                        }),
                        format,
                    );
                    Ok(if cli.require_exact { 3 } else { 0 })
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Unique { m_big, base, seq } => {
            check_m(*m_big)?;
            let ctx = BaseContext::new(Alphabet::new(*m_big), parse_base_spec(base)?)?;
            let seq = DigitSeq::parse(seq)?;
            let unique = is_unique_expansion(&seq, &ctx)?;
            print_value(
                &json!({"seq": seq.to_string(), "unique": unique}),
                format,
            );
            Ok(0)
        }
        Command::Catalog {
            m_big,
            base,
            max_preperiod,
        } => {
            check_m(*m_big)?;
            let ctx = BaseContext::new(Alphabet::new(*m_big), parse_base_spec(base)?)?;
            let catalog = unique_set_catalog(&ctx, *max_preperiod)?;
            let items: Vec<String> = catalog.iter().map(|s| s.to_string()).collect();
            print_value(&json!({"count": items.len(), "catalog": items}), format);
            Ok(0)
        }
        Command::Family {
            m_big,
            variant,
            k,
            j,
            u,
            v,
            root,
            value_at,
        } => {
            check_m(*m_big)?;
            let alphabet = Alphabet::new(*m_big);
            let id = FamilyId::new((*variant).into(), *k, *j, *u, *v);
            let has_root = family_has_root(&id, alphabet)?;
            let mut out = json!({
                "family": id.to_string(),
                "cleared_poly": family_cleared_poly(&id, alphabet)?.to_descending_string(),
                "has_root": has_root,
            });
            if let Some(point) = value_at {
                let q = parse_rational(point)?;
                let val = family_value_at_rational(&id, alphabet, &q)?;
                out["value_at"] = json!({"q": q.to_string(), "value": val.to_string()});
            }
            if *root {
                let r = family_root(&id, alphabet)?;
                out["root"] = alg_json(&r, digits);
            }
            print_value(&out, format);
            Ok(0)
        }
        Command::EnumerateB2 { m_big, sweep_k } => {
            check_m(*m_big)?;
            let witnesses = enumerate_b2_window_with(*m_big, *sweep_k);
            let items: Vec<Value> = witnesses
                .iter()
                .map(|w| {
                    json!({
                        "base": alg_json(&w.base, digits),
                        "family": w.family.to_string(),
                        "left": w.left_seq.to_string(),
                        "right": w.right_seq.to_string(),
                    })
                })
                .collect();
            print_value(&json!({"count": items.len(), "witnesses": items}), format);
            Ok(0)
        }
        Command::Count {
            m_big,
            base,
            x,
            depth,
            branches,
        } => {
            check_m(*m_big)?;
            let ctx = BaseContext::new(Alphabet::new(*m_big), parse_base_spec(base)?)?;
            let point = parse_point(x, &ctx)?;
            let result = count_expansions(&point, &ctx, *depth, *branches)?;
            print_value(&serde_json::to_value(&result.certificate).unwrap(), format);
            Ok(if cli.require_exact && result.kind != CountKind::Exactly {
                3
            } else {
                0
            })
        }
        Command::ConstructXk { k } => {
            if *k == 0 {
                return Err(CliError::Input("k must be at least 1".into()));
            }
            let (x, ctx) = crate::counting::construct_xk(*k);
            print_value(
                &json!({
                    "k": k,
                    "base": alg_json(ctx.base(), digits),
                    "x_coeffs": x.coeffs_string(),
                    "x_decimal": x.decimal_string(digits),
                }),
                format,
            );
            Ok(0)
        }
        Command::Verify { suite } => {
            let report = suites::run_suite(suite)?;
            match format {
                OutputFormat::Json => {
                    print_value(&serde_json::to_value(&report).unwrap(), format)
                }
                OutputFormat::Text => {
                    for c in &report.checks {
                        println!(
                            "{} {}: {}",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        );
                    }
                    println!(
                        "suite {}: {} ({} checks, {} ms)",
                        report.suite,
                        if report.pass { "PASS" } else { "FAIL" },
                        report.checks.len(),
                        report.elapsed_ms
                    );
                }
            }
            Ok(if report.pass { 0 } else { 2 })
        }
    }
}

fn check_m(m_big: u32) -> Result<(), CliError> {
    if m_big == 0 {
        Err(CliError::Input("M must be at least 1".into()))
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

pub mod suites {
    use super::*;
    use crate::counting::{construct_xk, expansions_of_one_m2, silver_context};
    use num_traits::Signed;
    use serde::Serialize;
    use std::cmp::Ordering;
    use std::time::Instant;

    #[derive(Debug, Clone, Serialize)]
    pub struct Check {
        pub name: String,
        pub pass: bool,
        pub detail: String,
    }

    #[derive(Debug, Clone, Serialize)]
    pub struct SuiteReport {
        pub suite: String,
        pub pass: bool,
        pub elapsed_ms: u128,
        pub checks: Vec<Check>,
    }

    fn finish(suite: &str, started: Instant, checks: Vec<Check>) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            pass: checks.iter().all(|c| c.pass),
            elapsed_ms: started.elapsed().as_millis(),
            checks,
        }
    }

    fn check(checks: &mut Vec<Check>, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        checks.push(Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn run_suite(name: &str) -> Result<SuiteReport, CliError> {
        match name {
            "table1" => Ok(table1()),
            "thm13" => Ok(thm13()),
            "monotonicity" => Ok(monotonicity()),
            "catalogs" => Ok(catalogs()),
            "b2-sweep" => Ok(b2_sweep()),
            "known-m1" => Ok(known_m1()),
            other => Err(CliError::Input(format!(
                "unknown suite `{other}` (expected table1, thm13, monotonicity, catalogs, \
                 b2-sweep, known-m1)"
            ))),
        }
    }

    fn tol(denom_pow: u32) -> BigRational {
        BigRational::new(1.into(), num_bigint::BigInt::from(10u32).pow(denom_pow))
    }

    /// Five-decimal reference values for q2(M), M = 1..7, plus the exact
    /// closed forms at M = 2, 4, 6.
    pub fn table1() -> SuiteReport {
        let started = Instant::now();
        let mut checks = Vec::new();
        let table: [(u32, i64); 7] = [
            (1, 171064),
            (2, 241421),
            (3, 275965),
            (4, 330278),
            (5, 380320),
            (6, 423607),
            (7, 483469),
        ];
        for (m_big, val) in table {
            let q = bases::q2(m_big);
            let target = BigRational::new(val.into(), 100000.into());
            let err = (q.approx(8) - &target).abs();
            check(
                &mut checks,
                format!("q2({m_big}) ≈ {}", (target.numer().clone())),
                err < tol(5),
                format!("q2({m_big}) = {}", q.decimal_string(8)),
            );
        }
        let silver = make_algebraic(
            &IntPoly::from_descending(&[1, -2, -1]),
            (
                &BigRational::from_integer(2.into()),
                &BigRational::from_integer(3.into()),
            ),
        )
        .unwrap();
        check(
            &mut checks,
            "q2(2) = 1+sqrt(2) exactly",
            bases::q2(2) == silver,
            "algebraic equality",
        );
        let m4 = make_algebraic(
            &IntPoly::from_descending(&[1, -3, -1]),
            (
                &BigRational::from_integer(3.into()),
                &BigRational::from_integer(4.into()),
            ),
        )
        .unwrap();
        check(
            &mut checks,
            "q2(4) = (3+sqrt(13))/2 exactly",
            bases::q2(4) == m4,
            "algebraic equality",
        );
        let m6 = make_algebraic(
            &IntPoly::from_descending(&[1, -4, -1]),
            (
                &BigRational::from_integer(4.into()),
                &BigRational::from_integer(5.into()),
            ),
        )
        .unwrap();
        check(
            &mut checks,
            "q2(6) = 2+sqrt(5) exactly",
            bases::q2(6) == m6,
            "algebraic equality",
        );
        let elapsed = started.elapsed();
        check(
            &mut checks,
            "runtime under 1 s",
            elapsed.as_millis() < 1000,
            format!("{} ms", elapsed.as_millis()),
        );
        finish("table1", started, checks)
    }

    /// The k-expansion constructions at M = 2, q = 1+√2.
    pub fn thm13() -> SuiteReport {
        let started = Instant::now();
        let mut checks = Vec::new();
        for k in 1..=6usize {
            let t0 = Instant::now();
            let (x, ctx) = construct_xk(k);
            let r = count_expansions(&x, &ctx, 128, 64).expect("in interval");
            let dt = t0.elapsed();
            check(
                &mut checks,
                format!("x_{k} has exactly {k} expansions"),
                r.kind == CountKind::Exactly && r.count == k && dt.as_millis() < 2000,
                format!("kind {:?}, count {}, {} ms", r.kind, r.count, dt.as_millis()),
            );
        }
        let ctx = silver_context();
        let one = ctx.field().one();
        let r = count_expansions(&one, &ctx, 60, 256).expect("in interval");
        check(
            &mut checks,
            "x = 1 yields at least 20 expansions at depth 60",
            r.kind == CountKind::AtLeast && r.count >= 20,
            format!("kind {:?}, count {}", r.kind, r.count),
        );
        let list = expansions_of_one_m2(8);
        // evaluation to exactly 1 is asserted inside; check distinctness here
        let distinct: std::collections::BTreeSet<_> = list.iter().cloned().collect();
        check(
            &mut checks,
            "expansions of 1 evaluate to 1 and are pairwise distinct",
            distinct.len() == list.len() && list.len() == 1 + 2 * 9,
            format!("{} sequences", list.len()),
        );
        finish("thm13", started, checks)
    }

    /// All words over {0,…,digits−1} of length 1..=max_len (plus the empty
    /// word when requested).
    fn words_up_to(digits: u32, max_len: usize, include_empty: bool) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = if include_empty { vec![vec![]] } else { Vec::new() };
        let mut frontier: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for d in 0..digits {
                    let mut w2 = w.clone();
                    w2.push(d);
                    next.push(w2);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    fn monotone_ids(alphabet: Alphabet, variant: FamilyVariant, top: u32) -> Vec<FamilyId> {
        let u_max = if alphabet.is_even() {
            alphabet.m()
        } else {
            alphabet.m() - 1
        };
        let mut ids = Vec::new();
        for k in 0..=top {
            for j in 0..=top {
                for u in 0..=u_max {
                    for v in 0..=u_max {
                        ids.push(FamilyId::new(variant, k, j, u, v));
                    }
                }
            }
        }
        ids
    }

    /// Strict increase of the family functions in q, and strict parameter
    /// monotonicity of their roots.
    pub fn monotonicity() -> SuiteReport {
        let started = Instant::now();
        let mut checks = Vec::new();
        let setups = [
            (Alphabet::new(4), FamilyVariant::Even),
            (Alphabet::new(3), FamilyVariant::Odd1),
            (Alphabet::new(3), FamilyVariant::Odd2),
            (Alphabet::new(3), FamilyVariant::Odd3),
        ];
        for (alphabet, variant) in setups {
            // 50 consecutive rational sample pairs in (p1, p1+4)
            let p1_val = bases::p1(alphabet.max_digit());
            let (_, p1_hi) = p1_val.refine(3);
            let mut violations = 0usize;
            let mut pairs = 0usize;
            let samples: Vec<BigRational> = (0..=50)
                .map(|i| {
                    &p1_hi
                        + BigRational::new((1 + 8 * i).into(), 100.into())
                })
                .collect();
            for id in monotone_ids(alphabet, variant, 4) {
                for w in samples.windows(2) {
                    pairs += 1;
                    let a = family_value_at_rational(&id, alphabet, &w[0]).unwrap();
                    let b = family_value_at_rational(&id, alphabet, &w[1]).unwrap();
                    if a >= b {
                        violations += 1;
                    }
                }
            }
            check(
                &mut checks,
                format!("{variant}: strictly increasing in q"),
                violations == 0,
                format!("{pairs} ordered pairs, {violations} violations"),
            );

            // parameter monotonicity of roots on all comparable pairs
            let mut roots: std::collections::BTreeMap<FamilyId, AlgebraicReal> =
                std::collections::BTreeMap::new();
            for id in monotone_ids(alphabet, variant, 4) {
                if family_has_root(&id, alphabet).unwrap() {
                    roots.insert(id, family_root(&id, alphabet).unwrap());
                }
            }
            let mut cmp_count = 0usize;
            let mut bad = 0usize;
            for (id, root) in &roots {
                let mut expect = |other: FamilyId, ord: Ordering| {
                    if let Some(other_root) = roots.get(&other) {
                        cmp_count += 1;
                        if root.cmp_alg(other_root) != ord {
                            bad += 1;
                        }
                    }
                };
                expect(FamilyId::new(id.variant, id.k + 1, id.j, id.u, id.v), Ordering::Less);
                expect(FamilyId::new(id.variant, id.k, id.j + 1, id.u, id.v), Ordering::Less);
                if id.u > 0 {
                    expect(
                        FamilyId::new(id.variant, id.k, id.j, id.u - 1, id.v),
                        Ordering::Less,
                    );
                }
                if id.v > 0 {
                    expect(
                        FamilyId::new(id.variant, id.k, id.j, id.u, id.v - 1),
                        Ordering::Less,
                    );
                }
            }
            check(
                &mut checks,
                format!("{variant}: root monotone in parameters"),
                bad == 0 && cmp_count > 0,
                format!("{cmp_count} comparable pairs, {bad} violations"),
            );
        }
        finish("monotonicity", started, checks)
    }

    /// Exhaustive agreement between the lexicographic uniqueness test and
    /// the explicit catalogs on (p1, p2].
    pub fn catalogs() -> SuiteReport {
        let started = Instant::now();
        let mut checks = Vec::new();
        for m_big in [2u32, 3, 4] {
            let alphabet = Alphabet::new(m_big);
            let presets: Vec<(String, AlgebraicReal)> = vec![
                (
                    format!("interior preset (M={m_big})"),
                    bases::interior_preset(m_big).unwrap(),
                ),
                (format!("p2 (M={m_big})"), bases::p2(m_big)),
            ];
            // all canonical sequences with preperiod <= 4, period <= 4
            let digits = m_big + 1;
            let pre_words = words_up_to(digits, 4, true);
            let per_words = words_up_to(digits, 4, false);
            let mut universe = std::collections::BTreeSet::new();
            for pre in &pre_words {
                for per in &per_words {
                    universe.insert(DigitSeq::new(pre.clone(), per.clone()));
                }
            }
            for (label, q) in presets {
                let ctx = BaseContext::new(alphabet, q).expect("preset context");
                let catalog: std::collections::BTreeSet<DigitSeq> =
                    unique_set_catalog(&ctx, 4).unwrap().into_iter().collect();
                let mut mismatches = 0usize;
                for seq in &universe {
                    let unique = is_unique_expansion(seq, &ctx).unwrap();
                    let listed = catalog.contains(seq);
                    if unique != listed {
                        mismatches += 1;
                    }
                }
                check(
                    &mut checks,
                    format!("catalog equivalence at {label}"),
                    mismatches == 0,
                    format!("{} sequences, {} mismatches", universe.len(), mismatches),
                );
            }
        }
        finish("catalogs", started, checks)
    }

    /// The full parameter sweep reproduces the closed-form window sets and
    /// every witness passes the two-expansion count.
    pub fn b2_sweep() -> SuiteReport {
        let started = Instant::now();
        let mut checks = Vec::new();
        for m_big in 1..=8u32 {
            let t0 = Instant::now();
            let witnesses = enumerate_b2_window_with(m_big, DEFAULT_SWEEP_K);
            let alphabet = Alphabet::new(m_big);
            let m = alphabet.m() as usize;
            let count_ok = if alphabet.is_even() {
                witnesses.len() == m
            } else {
                !witnesses.is_empty()
            };
            check(
                &mut checks,
                format!("sweep M={m_big}: window set matches closed form"),
                count_ok,
                format!("{} bases, {} ms", witnesses.len(), t0.elapsed().as_millis()),
            );
            let min_ok = witnesses
                .first()
                .map(|w| w.base == bases::q2(m_big))
                .unwrap_or(false);
            check(
                &mut checks,
                format!("sweep M={m_big}: minimum equals q2"),
                min_ok,
                "exact algebraic equality",
            );
            let mut all_two = true;
            for w in &witnesses {
                let ctx = BaseContext::new(alphabet, w.base.clone()).expect("witness context");
                let x = evaluate(&w.left_seq, &ctx).expect("witness value");
                let r = count_expansions(&x, &ctx, 128, 64).expect("in interval");
                if r.kind != CountKind::Exactly || r.count != 2 {
                    all_two = false;
                }
            }
            check(
                &mut checks,
                format!("sweep M={m_big}: every witness counts exactly 2"),
                all_two,
                format!("{} witnesses", witnesses.len()),
            );
        }
        let elapsed = started.elapsed();
        check(
            &mut checks,
            "runtime under 60 s",
            elapsed.as_secs() < 60,
            format!("{} ms", elapsed.as_millis()),
        );
        finish("b2-sweep", started, checks)
    }

    /// M = 1 constants and the five-parameter coincidence at 1+√2.
    pub fn known_m1() -> SuiteReport {
        let started = Instant::now();
        let mut checks = Vec::new();
        let k = known_bases_m1();
        for (name, value, target) in [
            ("q2(1)", &k.q2, 171064i64),
            ("qk(1)", &k.qk, 175488),
            ("q_aleph0_second(1)", &k.q_aleph0_second, 164541),
        ] {
            let t = BigRational::new(target.into(), 100000.into());
            check(
                &mut checks,
                format!("{name} near {target}e-5"),
                (value.approx(8) - &t).abs() < tol(5),
                value.decimal_string(8),
            );
        }
        // five even-family parameter tuples all give 1+√2 at M = 2
        let silver = make_algebraic(
            &IntPoly::from_descending(&[1, -2, -1]),
            (
                &BigRational::from_integer(2.into()),
                &BigRational::from_integer(3.into()),
            ),
        )
        .unwrap();
        let tuples = [(2, 1, 1, 1), (2, 0, 1, 0), (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 0, 0)];
        let alphabet = Alphabet::new(2);
        let mut all_equal = true;
        for (k_, j_, u_, v_) in tuples {
            let id = FamilyId::new(FamilyVariant::Even, k_, j_, u_, v_);
            let root = family_root(&id, alphabet).expect("tuple has a root");
            if root != silver {
                all_equal = false;
            }
        }
        check(
            &mut checks,
            "five parameter tuples coincide at 1+sqrt(2)",
            all_equal,
            "exact algebraic equalities",
        );
        finish("known-m1", started, checks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_spec_parsing() {
        assert_eq!(parse_base_spec("q2:2").unwrap(), bases::q2(2));
        assert_eq!(parse_base_spec("p1:4").unwrap(), AlgebraicReal::from_integer(3));
        let by_poly = parse_base_spec("poly:1,-2,-1@2:3").unwrap();
        assert_eq!(by_poly, bases::p2(2));
        let with_fractions = parse_base_spec("poly:1,0,-2,-1,-1@17/10:9/5").unwrap();
        assert_eq!(with_fractions, known_bases_m1().q2);
        assert!(parse_base_spec("nope:1").is_err());
        assert!(parse_base_spec("poly:1,-2,-1@3:4").is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("17/10").unwrap(), BigRational::new(17.into(), 10.into()));
        assert_eq!(parse_rational("-3").unwrap(), BigRational::from_integer((-3).into()));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn run_smoke_q2() {
        let code = run(["multibase", "q2", "--M", "4"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn run_rejects_bad_input() {
        let code = run(["multibase", "q2", "--M", "0"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn suite_known_m1_passes() {
        let report = suites::run_suite("known-m1").unwrap();
        assert!(report.pass, "{:?}", report.checks);
    }

    #[test]
    fn unknown_suite_is_input_error() {
        assert!(matches!(
            suites::run_suite("nope"),
            Err(CliError::Input(_))
        ));
    }
}
