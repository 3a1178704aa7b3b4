//! Command-line front end: argument parsing, dispatch into the library, and
//! report rendering (human text or versioned JSON).

pub mod parse;

use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use polyabc::{
    davenport_check, davenport_prime_check, elliptic_parametrization_check, flt_check,
    flt_catalan_check, mason_stothers_verdict, ms_noncoprime_verdict_char0, pth_root, radical,
    div_radical, reproduce_paper_examples, search_flt, search_mason_stothers, wronskian,
    CatalanParams, ConstancyKind, FieldDesc, MsVerdictKind, Poly, RatFunc, SearchConfig,
    SearchTarget,
};

use parse::{parse_poly, ParseError};

pub const SCHEMA_VERSION: &str = "1.0";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PRECONDITION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    PreconditionFailed,
    UsageError,
    TheoremViolated,
}

/// The envelope every command emits: versioned, with the full command echo.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: Vec<String>,
    pub status: Status,
    pub result: Value,
    pub wall_time_ms: u64,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        if let Some(msg) = self.result.get("message").and_then(Value::as_str) {
            return msg.to_string();
        }
        if let Some(err) = self.result.get("error").and_then(Value::as_str) {
            return format!("error: {err}");
        }
        if let Some(out) = self.result.get("output").and_then(Value::as_str) {
            return out.to_string();
        }
        format!(
            "status: {}\n{}",
            match self.status {
                Status::Ok => "ok",
                Status::PreconditionFailed => "precondition failed",
                Status::UsageError => "usage error",
                Status::TheoremViolated => "theorem violated",
            },
            serde_json::to_string_pretty(&self.result).expect("result serializes")
        )
    }
}

fn parse_field(text: &str) -> Result<FieldDesc, String> {
    if text == "q" || text == "Q" {
        return Ok(FieldDesc::rationals());
    }
    if let Some(rest) = text.strip_prefix("fp:") {
        let p: u64 = rest
            .parse()
            .map_err(|_| format!("bad modulus {rest:?} in field spec"))?;
        return FieldDesc::prime_field(p).map_err(|e| e.to_string());
    }
    Err(format!("bad field spec {text:?}; expected `q` or `fp:<prime>`"))
}

fn parse_target(text: &str) -> Result<SearchTarget, String> {
    match text {
        "ms" => Ok(SearchTarget::MasonStothers),
        "noncoprime" => Ok(SearchTarget::NonCoprimeVariant),
        _ => {
            if let Some(rest) = text.strip_prefix("flt:") {
                let n: u32 = rest
                    .parse()
                    .map_err(|_| format!("bad exponent {rest:?} in target spec"))?;
                return Ok(SearchTarget::Flt(n));
            }
            Err(format!(
                "bad target {text:?}; expected `ms`, `noncoprime`, or `flt:<n>`"
            ))
        }
    }
}

#[derive(Args, Debug, Clone)]
struct FieldArg {
    /// Coefficient field: `q` or `fp:<prime>`
    #[arg(long, value_parser = parse_field)]
    field: FieldDesc,
}

#[derive(Parser, Debug)]
#[command(name = "polyabc", version, about = "Exact polynomial ABC theorem toolkit", disable_help_subcommand = true)]
struct Cli {
    /// Emit the report as JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Monic square-free part rad(f) of a polynomial
    Radical {
        #[command(flatten)]
        field: FieldArg,
        expr: String,
    },
    /// The exact quotient f / rad(f)
    DivRadical {
        #[command(flatten)]
        field: FieldArg,
        expr: String,
    },
    /// Wronskian W(a, b) = a*b' - a'*b
    Wronskian {
        #[command(flatten)]
        field: FieldArg,
        #[arg(short, long, allow_hyphen_values = true)]
        a: String,
        #[arg(short, long, allow_hyphen_values = true)]
        b: String,
    },
    /// Mason-Stothers verdict on a nonzero coprime zero-sum triple
    CheckMs {
        #[command(flatten)]
        field: FieldArg,
        #[arg(short, long, allow_hyphen_values = true)]
        a: String,
        #[arg(short, long, allow_hyphen_values = true)]
        b: String,
        #[arg(short, long, allow_hyphen_values = true)]
        c: String,
    },
    /// Non-coprime degree bound over Q on a nonzero zero-sum triple
    CheckMsNoncoprime {
        #[command(flatten)]
        field: FieldArg,
        #[arg(short, long, allow_hyphen_values = true)]
        a: String,
        #[arg(short, long, allow_hyphen_values = true)]
        b: String,
        #[arg(short, long, allow_hyphen_values = true)]
        c: String,
    },
    /// Polynomial Fermat: a^n + b^n = c^n forces constants
    CheckFlt {
        #[command(flatten)]
        field: FieldArg,
        #[arg(short, long)]
        n: u32,
        #[arg(short, long, allow_hyphen_values = true)]
        a: String,
        #[arg(short, long, allow_hyphen_values = true)]
        b: String,
        #[arg(short, long, allow_hyphen_values = true)]
        c: String,
    },
    /// Fermat-Catalan: u*a^p + v*b^q + w*c^r = 0 forces constants
    CheckCatalan {
        #[command(flatten)]
        field: FieldArg,
        #[arg(short, long)]
        p: u32,
        #[arg(short, long)]
        q: u32,
        #[arg(short, long)]
        r: u32,
        /// Unit coefficients, as constant expressions
        #[arg(short, long, default_value = "1", allow_hyphen_values = true)]
        u: String,
        #[arg(short, long, default_value = "1", allow_hyphen_values = true)]
        v: String,
        #[arg(short, long, default_value = "1", allow_hyphen_values = true)]
        w: String,
        #[arg(short, long, allow_hyphen_values = true)]
        a: String,
        #[arg(short, long, allow_hyphen_values = true)]
        b: String,
        #[arg(short, long, allow_hyphen_values = true)]
        c: String,
    },
    /// Davenport: deg f + 2 <= 2 deg(f^3 - g^2) over Q
    CheckDavenport {
        #[command(flatten)]
        field: FieldArg,
        #[arg(short, long, allow_hyphen_values = true)]
        f: String,
        #[arg(short, long, allow_hyphen_values = true)]
        g: String,
    },
    /// Davenport for coprime f, g with nonvanishing derivatives (any char)
    CheckDavenportPrime {
        #[command(flatten)]
        field: FieldArg,
        #[arg(short, long, allow_hyphen_values = true)]
        f: String,
        #[arg(short, long, allow_hyphen_values = true)]
        g: String,
    },
    /// Rational parametrizations of y^2 = x^3 + 1 are constant
    CheckElliptic {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, allow_hyphen_values = true)]
        x_num: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x_den: String,
        #[arg(long, allow_hyphen_values = true)]
        y_num: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        y_den: String,
    },
    /// p-th root of a polynomial with zero derivative over F_p
    Descend {
        #[command(flatten)]
        field: FieldArg,
        expr: String,
    },
    /// Exhaustive small-field search (targets: ms, noncoprime, flt:<n>)
    Search {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_parser = parse_target)]
        target: SearchTarget,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Defaults to POLYABC_SEED if set, else 0
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Re-run the recorded worked examples and counterexamples
    Reproduce,
}

enum CmdError {
    Usage(String),
    Precondition(String),
}

impl From<polyabc::Error> for CmdError {
    fn from(e: polyabc::Error) -> Self {
        CmdError::Precondition(e.to_string())
    }
}

impl From<ParseError> for CmdError {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Syntax { .. } => CmdError::Usage(e.to_string()),
            ParseError::LiteralOutOfField { .. } => CmdError::Precondition(e.to_string()),
        }
    }
}

fn poly_json(p: &Poly) -> Value {
    Value::String(parse::format_poly(p))
}

fn parse3(
    field: FieldDesc,
    a: &str,
    b: &str,
    c: &str,
) -> Result<(Poly, Poly, Poly), CmdError> {
    Ok((
        parse_poly(a, field)?,
        parse_poly(b, field)?,
        parse_poly(c, field)?,
    ))
}

fn parse_unit(text: &str, field: FieldDesc) -> Result<polyabc::FieldElem, CmdError> {
    let p = parse_poly(text, field)?;
    if !p.is_constant() {
        return Err(CmdError::Usage(format!(
            "unit coefficient {text:?} must be constant"
        )));
    }
    Ok(p.coeff(0))
}

fn effective_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("POLYABC_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(0)
}

fn constancy_status(kind: ConstancyKind) -> Status {
    match kind {
        ConstancyKind::TheoremViolated => Status::TheoremViolated,
        _ => Status::Ok,
    }
}

// (status, result payload) for a successfully dispatched command
fn dispatch(cmd: &Cmd) -> Result<(Status, Value), CmdError> {
    match cmd {
        Cmd::Radical { field, expr } => {
            let p = parse_poly(expr, field.field)?;
            let r = radical(&p);
            Ok((
                Status::Ok,
                json!({ "input": poly_json(&p), "output": parse::format_poly(&r) }),
            ))
        }
        Cmd::DivRadical { field, expr } => {
            let p = parse_poly(expr, field.field)?;
            let r = div_radical(&p)?;
            Ok((
                Status::Ok,
                json!({ "input": poly_json(&p), "output": parse::format_poly(&r) }),
            ))
        }
        Cmd::Wronskian { field, a, b } => {
            let pa = parse_poly(a, field.field)?;
            let pb = parse_poly(b, field.field)?;
            let w = wronskian(&pa, &pb);
            Ok((
                Status::Ok,
                json!({
                    "a": poly_json(&pa),
                    "b": poly_json(&pb),
                    "output": parse::format_poly(&w),
                }),
            ))
        }
        Cmd::CheckMs { field, a, b, c } => {
            let (pa, pb, pc) = parse3(field.field, a, b, c)?;
            let v = mason_stothers_verdict(&pa, &pb, &pc)?;
            let status = if v.kind == MsVerdictKind::Violation {
                Status::TheoremViolated
            } else {
                Status::Ok
            };
            Ok((status, json!({ "verdict": v })))
        }
        Cmd::CheckMsNoncoprime { field, a, b, c } => {
            let (pa, pb, pc) = parse3(field.field, a, b, c)?;
            let v = ms_noncoprime_verdict_char0(&pa, &pb, &pc)?;
            let status = if v.kind == MsVerdictKind::Violation {
                Status::TheoremViolated
            } else {
                Status::Ok
            };
            Ok((status, json!({ "verdict": v })))
        }
        Cmd::CheckFlt { field, n, a, b, c } => {
            let (pa, pb, pc) = parse3(field.field, a, b, c)?;
            let report = flt_check(*n, &pa, &pb, &pc)?;
            Ok((constancy_status(report.kind), json!({ "report": report })))
        }
        Cmd::CheckCatalan {
            field,
            p,
            q,
            r,
            u,
            v,
            w,
            a,
            b,
            c,
        } => {
            let fd = field.field;
            let units = (
                parse_unit(u, fd)?,
                parse_unit(v, fd)?,
                parse_unit(w, fd)?,
            );
            let params = CatalanParams::new(fd, (*p, *q, *r), units)?;
            let (pa, pb, pc) = parse3(fd, a, b, c)?;
            let report = flt_catalan_check(&params, &pa, &pb, &pc)?;
            Ok((constancy_status(report.kind), json!({ "report": report })))
        }
        Cmd::CheckDavenport { field, f, g } => {
            let pf = parse_poly(f, field.field)?;
            let pg = parse_poly(g, field.field)?;
            let (lhs, rhs, holds) = davenport_check(&pf, &pg)?;
            let status = if holds { Status::Ok } else { Status::TheoremViolated };
            Ok((status, json!({ "lhs": lhs, "rhs": rhs, "holds": holds })))
        }
        Cmd::CheckDavenportPrime { field, f, g } => {
            let pf = parse_poly(f, field.field)?;
            let pg = parse_poly(g, field.field)?;
            let (lhs, rhs, holds) = davenport_prime_check(&pf, &pg)?;
            let status = if holds { Status::Ok } else { Status::TheoremViolated };
            Ok((status, json!({ "lhs": lhs, "rhs": rhs, "holds": holds })))
        }
        Cmd::CheckElliptic {
            field,
            x_num,
            x_den,
            y_num,
            y_den,
        } => {
            let fd = field.field;
            let x = RatFunc::new(parse_poly(x_num, fd)?, parse_poly(x_den, fd)?)?;
            let y = RatFunc::new(parse_poly(y_num, fd)?, parse_poly(y_den, fd)?)?;
            let report = elliptic_parametrization_check(&x, &y)?;
            Ok((constancy_status(report.kind), json!({ "report": report })))
        }
        Cmd::Descend { field, expr } => {
            let p = parse_poly(expr, field.field)?;
            let root = pth_root(&p)?;
            Ok((
                Status::Ok,
                json!({ "input": poly_json(&p), "output": parse::format_poly(&root) }),
            ))
        }
        Cmd::Search {
            field,
            target,
            max_degree,
            workers,
            seed,
        } => {
            let cfg = SearchConfig {
                field: field.field,
                max_degree: *max_degree,
                target: *target,
                seed: effective_seed(*seed),
                workers: *workers,
                samples: 0,
            };
            let report = match target {
                SearchTarget::Flt(_) => search_flt(&cfg)?,
                _ => search_mason_stothers(&cfg)?,
            };
            let status = if report.violation_count > 0 {
                Status::TheoremViolated
            } else {
                Status::Ok
            };
            Ok((status, json!({ "report": report })))
        }
        Cmd::Reproduce => {
            let records = reproduce_paper_examples();
            let all_pass = records.iter().all(|r| r.pass);
            let status = if all_pass { Status::Ok } else { Status::TheoremViolated };
            Ok((status, json!({ "examples": records, "all_pass": all_pass })))
        }
    }
}

/// Parses and executes one invocation; never panics on user input.
pub fn run_command<I, S>(argv: I) -> (i32, ReportDocument)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let echo: Vec<String> = argv.iter().skip(1).cloned().collect();
    let started = Instant::now();
    let document = |status: Status, result: Value| ReportDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        command: echo.clone(),
        status,
        result,
        wall_time_ms: started.elapsed().as_millis() as u64,
    };

    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (
                    EXIT_OK,
                    document(Status::Ok, json!({ "message": e.to_string() })),
                ),
                _ => (
                    EXIT_USAGE,
                    document(Status::UsageError, json!({ "error": e.to_string() })),
                ),
            };
        }
    };

    match dispatch(&cli.cmd) {
        Ok((status, result)) => {
            let code = match status {
                Status::Ok => EXIT_OK,
                Status::TheoremViolated => EXIT_VIOLATED,
                Status::PreconditionFailed => EXIT_PRECONDITION,
                Status::UsageError => EXIT_USAGE,
            };
            (code, document(status, result))
        }
        Err(CmdError::Usage(msg)) => (
            EXIT_USAGE,
            document(Status::UsageError, json!({ "error": msg })),
        ),
        Err(CmdError::Precondition(msg)) => (
            EXIT_PRECONDITION,
            document(Status::PreconditionFailed, json!({ "error": msg })),
        ),
    }
}

/// Whether this invocation asked for JSON output.
pub fn wants_json<S: AsRef<str>>(argv: &[S]) -> bool {
    argv.iter().any(|a| a.as_ref() == "--json")
}
