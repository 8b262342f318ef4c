//! Command-line surface: polytope I/O, on-demand computations, family
//! construction, and the full catalogue verification run.
//!
//! Exit codes: 0 success, 1 invalid input or resource limits, 2
//! verification mismatch.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ehrhart_core::counting::{count_auto, count_naive_guarded, CountStrategy, DEFAULT_GUARD};
use ehrhart_core::ehrhart::{analyze, count_positive_real_roots, ehrhart_polynomial};
use ehrhart_core::error::Error;
use ehrhart_core::exactmath::QPolynomial;
use ehrhart_core::families::{
    all_negative_polytope, catalogue, min_m_all_negative, p4, p4_polynomial, p5, p5_polynomial,
    reeve, reeve_polynomial, segment, segment_polynomial, single_negative_polytope, Construction,
    FamilyKind,
};
use ehrhart_core::polytope::VPolytope;
use ehrhart_core::verify::run_full_suite;

#[derive(Parser)]
#[command(
    name = "ehrhart",
    about = "Exact Ehrhart polynomials, delta-vectors, and sign patterns of integral polytopes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Candidate-point limit for the naive counting strategy
    #[arg(long, global = true)]
    guard: Option<u128>,

    /// Suppress timing fields for byte-deterministic output
    #[arg(long, global = true)]
    no_timing: bool,

    /// Worker threads for the counting scan (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Count lattice points of the n-th dilate of a polytope
    Count {
        /// Polytope JSON file: {"ambient_dim": N, "points": [[..], ..]}
        file: PathBuf,
        /// Dilation factor (n >= 1)
        #[arg(long)]
        n: i64,
        /// Force the naive bounding-box strategy (the oracle)
        #[arg(long)]
        naive: bool,
    },
    /// Ehrhart polynomial of a polytope
    Poly { file: PathBuf },
    /// Delta-vector (h*-vector) of a polytope
    Delta { file: PathBuf },
    /// Facet inequalities and affine-hull equalities
    Facets { file: PathBuf },
    /// Exact number of distinct positive real roots of the Ehrhart polynomial
    Roots { file: PathBuf },
    /// Construct a catalogue family and emit its polytope and polynomial
    Family {
        /// segment | reeve | p4 | p5 | theorem-main | single-negative | catalogue
        kind: String,
        /// Dimension parameter
        #[arg(long)]
        d: Option<usize>,
        /// Family parameter m, or "auto" for the minimal m (theorem-main)
        #[arg(long)]
        m: Option<String>,
        /// Index of the single negative coefficient (single-negative)
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated negative indices (catalogue), e.g. 2,3
        #[arg(long)]
        negatives: Option<String>,
    },
    /// Smallest m making every free coefficient of the product family negative
    MinM {
        #[arg(long)]
        d: usize,
    },
    /// Run the complete verification suite against the bundled catalogue
    VerifyPaper {
        /// Where to write the JSON report ("-" for stdout only)
        #[arg(long, default_value = "verify-paper-report.json")]
        report: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // ignore the error if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn load_polytope(path: &PathBuf) -> Result<VPolytope, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        Error::InvalidArgument(format!("bad polytope JSON in {}: {e}", path.display()))
    })
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Count { file, n, naive } => {
            let p = load_polytope(file)?;
            let (count, strategy) = if *naive {
                let guard = cli.guard.unwrap_or(DEFAULT_GUARD);
                (count_naive_guarded(&p, *n, guard)?, CountStrategy::NaiveBox)
            } else {
                let r = count_auto(&p, *n)?;
                (r.count, r.strategy)
            };
            match cli.format {
                Format::Table => println!("i(P, {n}) = {count}    [{strategy}]"),
                _ => print_json(&json!({
                    "n": n,
                    "count": serde_json::Number::from_string_unchecked(count.to_string()),
                    "strategy": strategy.to_string(),
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Poly { file } => {
            let p = load_polytope(file)?;
            let poly = ehrhart_polynomial(&p)?;
            print_polynomial(&poly, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Delta { file } => {
            let p = load_polytope(file)?;
            let report = analyze(&p, &file.display().to_string())?;
            match cli.format {
                Format::Table | Format::Latex => {
                    println!("delta = {}", report.delta);
                }
                Format::Json => print_json(&json!({
                    "delta": report.delta,
                    "normalized_volume": serde_json::Number::from_string_unchecked(
                        report.delta.sum().to_string()
                    ),
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Facets { file } => {
            let p = load_polytope(file)?;
            let h = p.facets()?;
            match cli.format {
                Format::Table | Format::Latex => {
                    for c in &h.equalities {
                        println!("{} = {}", row_text(&c.a), c.b);
                    }
                    for c in &h.inequalities {
                        println!("{} <= {}", row_text(&c.a), c.b);
                    }
                }
                Format::Json => print_json(&serde_json::to_value(h).expect("serializable")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Roots { file } => {
            let p = load_polytope(file)?;
            let poly = ehrhart_polynomial(&p)?;
            let roots = count_positive_real_roots(&poly);
            match cli.format {
                Format::Table | Format::Latex => {
                    println!(
                        "{roots} positive real root{}",
                        if roots == 1 { "" } else { "s" }
                    )
                }
                Format::Json => print_json(&json!({
                    "polynomial": poly,
                    "positive_real_roots": roots,
                    "has_positive_real_root": roots > 0,
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Family {
            kind,
            d,
            m,
            k,
            negatives,
        } => {
            let parsed_negatives = match negatives.as_deref() {
                None => None,
                Some(s) => Some(parse_negatives(s)?),
            };
            let (kind, construction, effective_m) =
                build_family(kind, *d, m.as_deref(), *k, parsed_negatives.as_ref())?;
            emit_family(
                kind,
                &construction,
                *d,
                effective_m,
                *k,
                parsed_negatives.as_ref(),
                cli.format,
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::MinM { d } => {
            let m = min_m_all_negative(*d)?;
            match cli.format {
                Format::Table | Format::Latex => println!("minimal m for dimension {d}: {m}"),
                Format::Json => print_json(&json!({"d": d, "min_m": m})),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { report } => {
            let mut run = run_full_suite();
            if cli.no_timing {
                run = run.without_timing();
            }
            for g in &run.groups {
                for c in &g.checks {
                    println!(
                        "{} [{}] {}: expected {}, got {}{}",
                        if c.passed { "PASS" } else { "FAIL" },
                        g.name,
                        c.name,
                        c.expected,
                        c.actual,
                        match c.millis {
                            Some(ms) => format!(" ({ms} ms)"),
                            None => String::new(),
                        }
                    );
                }
            }
            println!(
                "{}/{} checks passed{}",
                run.passed,
                run.total_checks,
                match run.total_millis {
                    Some(ms) => format!(" in {ms} ms"),
                    None => String::new(),
                }
            );
            let json = serde_json::to_string_pretty(&run).expect("serializable");
            if report.as_os_str() == "-" {
                println!("{json}");
            } else {
                let mut f = std::fs::File::create(report).map_err(|e| {
                    Error::InvalidArgument(format!("cannot write {}: {e}", report.display()))
                })?;
                f.write_all(json.as_bytes())
                    .map_err(|e| Error::InvalidArgument(format!("write failed: {e}")))?;
                println!("report written to {}", report.display());
            }
            if run.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                // mismatches exit 2, with the diff already printed per check
                Ok(ExitCode::from(2))
            }
        }
    }
}

fn row_text(a: &[i128]) -> String {
    let mut out = String::new();
    for (i, c) in a.iter().enumerate() {
        if *c == 0 {
            continue;
        }
        let var = format!("x{}", i + 1);
        if out.is_empty() {
            match c {
                1 => out.push_str(&var),
                -1 => out.push_str(&format!("-{var}")),
                _ => out.push_str(&format!("{c} {var}")),
            }
        } else {
            let sign = if *c < 0 { "-" } else { "+" };
            let abs = c.abs();
            if abs == 1 {
                out.push_str(&format!(" {sign} {var}"));
            } else {
                out.push_str(&format!(" {sign} {abs} {var}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn print_polynomial(poly: &QPolynomial, format: Format) {
    match format {
        Format::Table => println!("{poly}"),
        Format::Latex => println!("{}", poly.to_latex()),
        Format::Json => print_json(&json!({
            "polynomial": poly,
            "pretty": poly.to_string(),
            "latex": poly.to_latex(),
            "degree": poly.degree(),
        })),
    }
}

fn parse_m(m: Option<&str>) -> Result<Option<i64>, Error> {
    match m {
        None => Ok(None),
        Some("auto") => Ok(None),
        Some(s) => s
            .parse::<i64>()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("bad m value {s:?}"))),
    }
}

fn parse_negatives(s: &str) -> Result<BTreeSet<usize>, Error> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad index {part:?}")))
        })
        .collect()
}

fn build_family(
    kind: &str,
    d: Option<usize>,
    m: Option<&str>,
    k: Option<usize>,
    negatives: Option<&BTreeSet<usize>>,
) -> Result<(FamilyKind, Construction, Option<i64>), Error> {
    let need_d = || d.ok_or_else(|| Error::InvalidArgument("this family needs --d".into()));
    match kind {
        "segment" => {
            let m = parse_m(m)?
                .ok_or_else(|| Error::InvalidArgument("segment needs --m <int>".into()))?;
            let polytope = segment(m as i128)?;
            let polynomial = segment_polynomial(m as i128);
            Ok((
                FamilyKind::Segment,
                Construction {
                    polytope,
                    polynomial,
                    trace: vec![format!("segment m={m}")],
                },
                Some(m),
            ))
        }
        "reeve" => {
            let m = parse_m(m)?
                .ok_or_else(|| Error::InvalidArgument("reeve needs --m <int>".into()))?;
            Ok((
                FamilyKind::Reeve,
                Construction {
                    polytope: reeve(m)?,
                    polynomial: reeve_polynomial(m),
                    trace: vec![format!("reeve m={m}")],
                },
                Some(m),
            ))
        }
        "p4" => Ok((
            FamilyKind::P4,
            Construction {
                polytope: p4(),
                polynomial: p4_polynomial(),
                trace: vec!["p4".into()],
            },
            None,
        )),
        "p5" => Ok((
            FamilyKind::P5,
            Construction {
                polytope: p5(),
                polynomial: p5_polynomial(),
                trace: vec!["p5".into()],
            },
            None,
        )),
        "theorem-main" => {
            let d = need_d()?;
            let m = match parse_m(m)? {
                Some(m) => m,
                None => min_m_all_negative(d)?,
            };
            let mut c = all_negative_polytope(d, m)?;
            c.trace.insert(0, format!("m = {m}"));
            Ok((FamilyKind::TheoremMain, c, Some(m)))
        }
        "single-negative" => {
            let d = need_d()?;
            let k = k.ok_or_else(|| Error::InvalidArgument("single-negative needs --k".into()))?;
            Ok((
                FamilyKind::SingleNegative,
                single_negative_polytope(d, k)?,
                None,
            ))
        }
        "catalogue" => {
            let d = need_d()?;
            let set = negatives.ok_or_else(|| {
                Error::InvalidArgument("catalogue needs --negatives i,j,..".into())
            })?;
            Ok((FamilyKind::Catalogue, catalogue(d, set)?, None))
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown family kind {other:?}; expected segment | reeve | p4 | p5 | \
             theorem-main | single-negative | catalogue"
        ))),
    }
}

fn emit_family(
    kind: FamilyKind,
    c: &Construction,
    d: Option<usize>,
    m: Option<i64>,
    k: Option<usize>,
    negatives: Option<&BTreeSet<usize>>,
    format: Format,
) {
    match format {
        Format::Table | Format::Latex => {
            println!(
                "kind: {}",
                serde_json::to_string(&kind)
                    .expect("enum")
                    .trim_matches('"')
            );
            println!("dimension: {}", c.polytope.dim());
            println!("polynomial: {}", c.polynomial);
            for step in &c.trace {
                println!("  step: {step}");
            }
        }
        Format::Json => print_json(&json!({
            "kind": kind,
            "d": d.unwrap_or_else(|| c.polytope.dim()),
            "m": m,
            "k": k,
            "negatives": negatives,
            "dimension": c.polytope.dim(),
            "polytope": c.polytope,
            "polynomial": c.polynomial,
            "pretty": c.polynomial.to_string(),
            "trace": c.trace,
        })),
    }
}
