//! The `wdcalc` command line: argument parsing, report rendering and exit codes.
//!
//! [`run`] is the whole program minus process I/O, so it can be driven from tests.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix_wd::{MatrixJson, MatrixWD};
use crate::purity::{
    certificate_matrix, certificate_symbolic, reconstruct_monodromy, reconstruct_monodromy_matrix,
    strip_monodromy, Certificate, Classify, Reconstruction,
};
use crate::rational::{fmt_q, parse_q};
use crate::segments::{is_tempered, rec_segments, red_h, strata_class, SegmentJson, SegmentRep};
use crate::specseq;
use crate::verify::{self, Bounds};
use crate::wd::{SymbolicWD, WdJson};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_NEGATIVE: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "wdcalc",
    version,
    about = "Exact computations with Weil-Deligne representations"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SegmentOpts {
    /// Segment JSON file, or `-` for stdin.
    pub input: String,
    /// Residue field cardinality when the input does not give one.
    #[arg(long, default_value_t = 4)]
    pub q: u64,
    /// Base weight when the input does not give one.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub w0: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Local Langlands image of segment data, with its purity certificate.
    Rec(SegmentOpts),
    /// Purity certificate of a matrix or symbolic representation.
    Purity {
        /// Representation JSON file, or `-` for stdin.
        input: String,
        /// Forget N and reconstruct the pure monodromy operator.
        #[arg(long)]
        reconstruct: bool,
    },
    /// Red^(h) table and strata classes.
    Red {
        #[command(flatten)]
        seg: SegmentOpts,
        /// Only this h.
        #[arg(long, conflicts_with = "all")]
        h: Option<u32>,
        /// All h = 0..n (the default).
        #[arg(long)]
        all: bool,
        /// Also list the strata classes for #S = 1..n.
        #[arg(long)]
        strata: bool,
    },
    /// E1 page, degeneration, abutment and comparison with rec.
    Specseq(SegmentOpts),
    /// Run the verification sweeps.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

/// What the process prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
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
}

/// Rendered command output with its exit code.
pub struct Report {
    pub code: i32,
    pub body: String,
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_parse() {
        EXIT_PARSE
    } else if e.is_internal() {
        EXIT_INTERNAL
    } else {
        EXIT_DOMAIN
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let code = exit_code(e);
    let kind = match code {
        EXIT_PARSE => "parse",
        EXIT_INTERNAL => "internal",
        _ => "domain",
    };
    let body = json!({ "error": { "kind": kind, "message": e.to_string() }, "exit_code": code, "version": VERSION });
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("{body}\n"),
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok(r) => Outcome {
            code: r.code,
            stdout: r.body,
            stderr: String::new(),
        },
        Err(e) => error_outcome(&e),
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn load_segments(opts: &SegmentOpts, stdin: &mut dyn Read) -> Result<SegmentRep> {
    let text = read_input(&opts.input, stdin)?;
    let mut raw: SegmentJson =
        serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.q.get_or_insert(opts.q);
    if raw.w0.is_none() {
        parse_q(&opts.w0)?;
        raw.w0 = Some(opts.w0.clone());
    }
    SegmentRep::from_json(&raw)
}

fn convention(r: &SegmentRep) -> String {
    format!(
        "q={}; w0={}; geometric Frobenius, |Art^-1| lowers weights by 2; Sp_s(X) has top constituent X; V_i has weight w0+n-s_i+c_i",
        r.q().get(),
        fmt_q(r.w0())
    )
}

fn matrix_convention(q: u64) -> String {
    format!("q={q}; eigenvalue alpha has weight w where |alpha| = sqrt(q)^w; N lowers weights by 2")
}

fn symbolic_convention(q: u64) -> String {
    format!(
        "q={q}; geometric Frobenius, |Art^-1| lowers weights by 2; Sp_s(X) has top constituent X"
    )
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Report> {
    match &cli.command {
        Command::Rec(opts) => cmd_rec(&load_segments(opts, stdin)?, cli.format),
        Command::Purity { input, reconstruct } => {
            cmd_purity(&read_input(input, stdin)?, *reconstruct, cli.format)
        }
        Command::Red {
            seg,
            h,
            all: _,
            strata,
        } => cmd_red(&load_segments(seg, stdin)?, *h, *strata, cli.format),
        Command::Specseq(opts) => cmd_specseq(&load_segments(opts, stdin)?, cli.format),
        Command::Verify {
            max_n,
            max_dim,
            samples,
            seed,
        } => {
            let bounds = Bounds {
                max_n: *max_n,
                max_dim: *max_dim,
                samples: *samples,
                seed: *seed,
            };
            Ok(cmd_verify(&bounds, cli.format))
        }
    }
}

fn certificate_text(c: &Certificate, out: &mut String) {
    let center = c
        .center
        .as_ref()
        .map_or(String::new(), |k| format!("({k})"));
    let _ = writeln!(out, "verdict: {}{center}", c.verdict);
    let jumps: Vec<String> = c
        .filtration
        .iter()
        .map(|j| format!("Fil_{} = {}", j.index, j.dim))
        .collect();
    let _ = writeln!(
        out,
        "weight filtration: {}",
        if jumps.is_empty() {
            "0".into()
        } else {
            jumps.join(", ")
        }
    );
    if !c.primitive.is_empty() {
        let prim: Vec<String> = c
            .primitive
            .iter()
            .map(|p| format!("dim V({}) = {}", p.i, p.dim_primitive))
            .collect();
        let _ = writeln!(out, "primitive parts: {}", prim.join(", "));
    }
}

fn header(out: &mut String, conv: &str) {
    let _ = writeln!(out, "wdcalc {VERSION}");
    let _ = writeln!(out, "convention: {conv}");
}

pub fn cmd_rec(r: &SegmentRep, format: Format) -> Result<Report> {
    let rec = rec_segments(r);
    let cert = certificate_symbolic(&rec)?;
    let body = match format {
        Format::Json => render_json(&json!({
            "version": VERSION,
            "convention": convention(r),
            "input": r.to_json(),
            "tempered": is_tempered(r),
            "representation": rec.to_json(),
            "certificate": cert,
        })),
        Format::Text => {
            let mut out = String::new();
            header(&mut out, &convention(r));
            let _ = writeln!(out, "tempered: {}", is_tempered(r));
            let _ = writeln!(out, "rec: {rec}");
            certificate_text(&cert, &mut out);
            out
        }
    };
    Ok(Report {
        code: EXIT_OK,
        body,
    })
}

enum Parsed {
    Matrix(MatrixWD),
    Symbolic(SymbolicWD),
}

fn parse_representation(text: &str) -> Result<Parsed> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("phi").is_some() {
        let raw: MatrixJson =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Parsed::Matrix(MatrixWD::from_json(&raw)?))
    } else {
        let raw: WdJson = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Parsed::Symbolic(SymbolicWD::from_json(&raw)?))
    }
}

pub fn cmd_purity(text: &str, reconstruct: bool, format: Format) -> Result<Report> {
    let parsed = parse_representation(text)?;
    let (conv, backend, rep_json, rep_text, cert) = match &parsed {
        Parsed::Matrix(m) => (
            matrix_convention(m.q().get()),
            "matrix",
            serde_json::to_value(m.to_json()).expect("serializable"),
            format!("phi = {}, N = {}", m.phi(), m.nilp()),
            certificate_matrix(m)?,
        ),
        Parsed::Symbolic(a) => (
            symbolic_convention(a.q().get()),
            "symbolic",
            serde_json::to_value(a.to_json()).expect("serializable"),
            a.to_string(),
            certificate_symbolic(a)?,
        ),
    };
    let mut code = EXIT_OK;
    let mut rebuilt: Option<(Value, String, Certificate)> = None;
    if reconstruct {
        match &parsed {
            Parsed::Matrix(m) => match reconstruct_monodromy_matrix(m)? {
                Reconstruction::Pure(r) => {
                    let t = format!("phi = {}, N = {}", r.phi(), r.nilp());
                    rebuilt = Some((
                        serde_json::to_value(r.to_json()).expect("serializable"),
                        t,
                        certificate_matrix(&r)?,
                    ));
                }
                Reconstruction::NoPureN => code = EXIT_NEGATIVE,
            },
            Parsed::Symbolic(a) => match reconstruct_monodromy(&strip_monodromy(a)) {
                Reconstruction::Pure(r) => {
                    rebuilt = Some((
                        serde_json::to_value(r.to_json()).expect("serializable"),
                        r.to_string(),
                        certificate_symbolic(&r)?,
                    ));
                }
                Reconstruction::NoPureN => code = EXIT_NEGATIVE,
            },
        }
    }
    let body = match format {
        Format::Json => {
            let mut v = json!({
                "version": VERSION,
                "convention": conv,
                "backend": backend,
                "representation": rep_json,
                "certificate": cert,
            });
            if reconstruct {
                v["reconstruction"] = match &rebuilt {
                    Some((r, _, c)) => {
                        json!({ "status": "pure", "representation": r, "certificate": c })
                    }
                    None => json!({ "status": "no-pure-N" }),
                };
            }
            render_json(&v)
        }
        Format::Text => {
            let mut out = String::new();
            header(&mut out, &conv);
            let _ = writeln!(out, "{backend}: {rep_text}");
            certificate_text(&cert, &mut out);
            if reconstruct {
                match &rebuilt {
                    Some((_, t, c)) => {
                        let _ = writeln!(out, "reconstructed: {t}");
                        certificate_text(c, &mut out);
                    }
                    None => out.push_str("reconstructed: no N makes this representation pure\n"),
                }
            }
            out
        }
    };
    Ok(Report { code, body })
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|x| x.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, x)| format!("{x}{}", " ".repeat(widths[c] - x.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
    }
    out
}

pub fn cmd_red(r: &SegmentRep, h: Option<u32>, strata: bool, format: Format) -> Result<Report> {
    let hs: Vec<u32> = match h {
        Some(h) => vec![h],
        None => (0..=r.n()).collect(),
    };
    let reds = hs
        .iter()
        .map(|&h| Ok((h, red_h(r, h)?)))
        .collect::<Result<Vec<_>>>()?;
    let classes = if strata {
        (1..=r.n())
            .map(|s| strata_class(r, s))
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    let body = match format {
        Format::Json => {
            let mut v = json!({
                "version": VERSION,
                "convention": convention(r),
                "input": r.to_json(),
                "red": reds.iter().map(|(h, c)| json!({ "h": h, "class": c.to_json(), "text": c.to_string() })).collect::<Vec<_>>(),
            });
            if strata {
                v["strata"] = classes
                    .iter()
                    .map(|c| {
                        json!({
                            "s_size": c.s_size,
                            "class": c.class.to_json(),
                            "scalar": fmt_q(&c.scalar),
                            "alternating_sum": c.alternating.to_json(),
                            "text": c.class.to_string(),
                        })
                    })
                    .collect();
            }
            render_json(&v)
        }
        Format::Text => {
            let mut out = String::new();
            header(&mut out, &convention(r));
            let mut rows = vec![vec!["h".to_string(), "Red^(h)".to_string()]];
            rows.extend(reds.iter().map(|(h, c)| vec![h.to_string(), c.to_string()]));
            out.push_str(&table(&rows));
            if strata {
                out.push('\n');
                let mut rows = vec![vec![
                    "#S".into(),
                    "class".into(),
                    "scalar".into(),
                    "alternating sum".into(),
                ]];
                rows.extend(classes.iter().map(|c| {
                    vec![
                        c.s_size.to_string(),
                        c.class.to_string(),
                        fmt_q(&c.scalar),
                        c.alternating.to_string(),
                    ]
                }));
                out.push_str(&table(&rows));
            }
            out
        }
    };
    Ok(Report {
        code: EXIT_OK,
        body,
    })
}

pub fn cmd_specseq(r: &SegmentRep, format: Format) -> Result<Report> {
    let report = specseq::run(r)?;
    let verdict = match (report.degenerate, report.matches_rec) {
        (true, Some(true)) => "degenerate, abutment matches rec",
        (true, _) => "degenerate, abutment does not match rec",
        (false, _) => "not degenerate at E1, certificate unavailable",
    };
    let code = if report.matches_rec == Some(true) {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    let ab_verdict = report.abutment.as_ref().map(|a| a.classify().to_string());
    let body = match format {
        Format::Json => render_json(&json!({
            "version": VERSION,
            "convention": convention(r),
            "input": r.to_json(),
            "page": report.page.to_json(),
            "abutment": report.abutment.as_ref().map(SymbolicWD::to_json),
            "abutment_verdict": ab_verdict,
            "matches_rec": report.matches_rec,
            "verdict": verdict,
        })),
        Format::Text => {
            let mut out = String::new();
            header(&mut out, &convention(r));
            out.push_str(&report.page.render());
            if let Some(ab) = &report.abutment {
                let _ = writeln!(out, "abutment: {ab}");
                let _ = writeln!(out, "abutment verdict: {}", ab_verdict.unwrap_or_default());
                let _ = writeln!(out, "rec: {}", rec_segments(r));
            }
            let _ = writeln!(out, "verdict: {verdict}");
            out
        }
    };
    Ok(Report { code, body })
}

pub fn cmd_verify(bounds: &Bounds, format: Format) -> Report {
    let outcomes = verify::run_all(bounds);
    let code = if verify::failure_error(&outcomes).is_some() {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    };
    let body = match format {
        Format::Json => render_json(&json!({
            "version": VERSION,
            "bounds": { "max_n": bounds.max_n, "max_dim": bounds.max_dim, "samples": bounds.samples, "seed": bounds.seed },
            "suites": outcomes,
            "passed": code == EXIT_OK,
        })),
        Format::Text => {
            let mut rows = vec![vec![
                "suite".to_string(),
                "cases".into(),
                "result".into(),
                "ms".into(),
            ]];
            for o in &outcomes {
                let result = if o.passed() {
                    "pass".to_string()
                } else {
                    format!("FAIL ({})", o.failures.len())
                };
                rows.push(vec![
                    format!("{} {}", o.id, o.name),
                    o.cases.to_string(),
                    result,
                    o.millis.to_string(),
                ]);
            }
            let mut out = format!("wdcalc {VERSION}\n");
            out.push_str(&table(&rows));
            for o in outcomes.iter().filter(|o| !o.passed()) {
                for f in o.failures.iter().take(5) {
                    let _ = writeln!(out, "{}: {f}", o.name);
                }
            }
            out
        }
    };
    Report { code, body }
}
