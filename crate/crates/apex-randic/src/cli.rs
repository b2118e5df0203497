//! Command-line surface. Exit codes: 0 every scanned claim holds, 1 a
//! witness against a claim was found (the report is still complete), 2
//! usage errors or refused/infeasible runs.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::apex::{apex_number, audit_nonregularity};
use crate::canon::canonical_code;
use crate::enumerate::{connected_graphs, k_apex_trees, Guards};
use crate::error::{Error, Result};
use crate::family::{
    check_corollary_gap2, check_corollary_many_asym, scan_plot_row, verify_conjecture,
    ExactDecimal,
};
use crate::graph::Graph;
use crate::io::{parse_graph_file, write_graph6};
use crate::lemmas::{audit_lemma, default_grid, GridRange, LemmaId};
use crate::radical::big_ratio;
use crate::randic::randic;
use crate::report::Envelope;

#[derive(Parser)]
#[command(
    name = "apexrandic",
    version,
    about = "Exact Randić index and k-apex tree analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads (default: APEXRANDIC_JOBS or all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Lift the enumeration order guard (costly!)
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Randić index of every graph in a file (graph6 lines or edge list)
    Randic {
        #[arg(long)]
        input: PathBuf,
    },
    /// Apex number with witness set and residual tree
    Apex {
        #[arg(long)]
        input: PathBuf,
    },
    /// Audit one claim: lemma2..lemma6, theorem1, corollary1, corollary2, conjecture
    Audit {
        claim: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Inclusive range LO..HI
        #[arg(long)]
        n_range: Option<String>,
        /// Lemma grid LO..HI or LO..HI:STEP (rational step, e.g. 1/2)
        #[arg(long)]
        grid: Option<String>,
    },
    /// CSV of per-order maxima against the closed-form bound
    ScanPlot {
        #[arg(long)]
        k: usize,
        /// Inclusive range LO..HI
        #[arg(long)]
        n_range: String,
    },
    /// Dump one graph6 line per isomorphism class
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Restrict to graphs with this apex number
        #[arg(long)]
        k: Option<usize>,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let jobs = cli.jobs.or_else(|| {
        std::env::var("APEXRANDIC_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let started = std::time::Instant::now();
    let outcome = pool.install(|| execute(&cli));
    eprintln!("completed in {} ms", started.elapsed().as_millis());
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => 1,
                _ => 2,
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let guards = Guards {
        allow_large: cli.allow_large,
        ..Guards::default()
    };
    match &cli.command {
        Command::Randic { input } => cmd_randic(cli, input),
        Command::Apex { input } => cmd_apex(cli, input),
        Command::Audit {
            claim,
            k,
            n,
            n_range,
            grid,
        } => cmd_audit(cli, &guards, claim, *k, *n, n_range.as_deref(), grid.as_deref()),
        Command::ScanPlot { k, n_range } => cmd_scan_plot(cli, &guards, *k, n_range),
        Command::Enumerate { n, k } => cmd_enumerate(cli, &guards, *n, *k),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn config_string(cli: &Cli) -> String {
    let mut s = match &cli.command {
        Command::Randic { input } => format!("randic --input {}", input.display()),
        Command::Apex { input } => format!("apex --input {}", input.display()),
        Command::Audit {
            claim,
            k,
            n,
            n_range,
            grid,
        } => {
            let mut s = format!("audit {claim}");
            if let Some(k) = k {
                write!(s, " --k {k}").unwrap();
            }
            if let Some(n) = n {
                write!(s, " --n {n}").unwrap();
            }
            if let Some(r) = n_range {
                write!(s, " --n-range {r}").unwrap();
            }
            if let Some(g) = grid {
                write!(s, " --grid {g}").unwrap();
            }
            s
        }
        Command::ScanPlot { k, n_range } => format!("scan-plot --k {k} --n-range {n_range}"),
        Command::Enumerate { n, k } => match k {
            Some(k) => format!("enumerate --n {n} --k {k}"),
            None => format!("enumerate --n {n}"),
        },
    };
    if cli.allow_large {
        s.push_str(" --allow-large");
    }
    s
}

#[derive(Serialize)]
#[serde(untagged)]
enum PerGraph<T: Serialize> {
    Ok(T),
    Err { index: usize, line: usize, error: String },
}

#[derive(Serialize)]
struct RandicEntry {
    index: usize,
    n: usize,
    m: usize,
    randic: ExactDecimal,
    gap: ExactDecimal,
    spectrum: Vec<SpectrumEntry>,
    asymmetric_edges: usize,
}

#[derive(Serialize)]
struct SpectrumEntry {
    degrees: [usize; 2],
    count: usize,
}

fn cmd_randic(cli: &Cli, input: &PathBuf) -> Result<i32> {
    let text = std::fs::read_to_string(input)?;
    let parsed = parse_graph_file(&text);
    let mut entries = Vec::new();
    let mut csv = String::from("index,n,m,randic,gap,asymmetric_edges\n");
    for (index, (line, res)) in parsed.into_iter().enumerate() {
        let g =
            res.map_err(|e| Error::Usage(format!("{} line {line}: {e}", input.display())))?;
        let r = randic(&g);
        writeln!(
            csv,
            "{index},{},{},{},{},{}",
            g.n(),
            g.m(),
            r.value.decimal(12),
            r.gap.decimal(12),
            r.spectrum.asymmetric_edges()
        )
        .unwrap();
        entries.push(RandicEntry {
            index,
            n: g.n(),
            m: g.m(),
            randic: ExactDecimal::of(&r.value),
            gap: ExactDecimal::of(&r.gap),
            spectrum: r
                .spectrum
                .iter()
                .map(|((a, b), count)| SpectrumEntry { degrees: [a, b], count })
                .collect(),
            asymmetric_edges: r.spectrum.asymmetric_edges(),
        });
    }
    match cli.format {
        Format::Csv => emit(cli, &csv)?,
        Format::Json => emit(cli, &Envelope::new(config_string(cli), entries).to_json())?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct ApexEntry {
    index: usize,
    n: usize,
    apex_number: usize,
    witness: Vec<usize>,
    residual_graph6: String,
}

fn cmd_apex(cli: &Cli, input: &PathBuf) -> Result<i32> {
    let text = std::fs::read_to_string(input)?;
    let parsed = parse_graph_file(&text);
    let mut entries: Vec<PerGraph<ApexEntry>> = Vec::new();
    let mut csv = String::from("index,n,apex_number,witness,residual\n");
    let mut any_error = false;
    for (index, (line, res)) in parsed.into_iter().enumerate() {
        let outcome = res.and_then(|g| apex_number(&g).map(|c| (g, c)));
        match outcome {
            Ok((g, cert)) => {
                writeln!(
                    csv,
                    "{index},{},{},{},{}",
                    g.n(),
                    cert.k,
                    cert.witness
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    write_graph6(&cert.residual)
                )
                .unwrap();
                entries.push(PerGraph::Ok(ApexEntry {
                    index,
                    n: g.n(),
                    apex_number: cert.k,
                    witness: cert.witness,
                    residual_graph6: write_graph6(&cert.residual),
                }));
            }
            Err(e) => {
                any_error = true;
                writeln!(csv, "{index},,,,error: {e}").unwrap();
                entries.push(PerGraph::Err {
                    index,
                    line,
                    error: e.to_string(),
                });
            }
        }
    }
    match cli.format {
        Format::Csv => emit(cli, &csv)?,
        Format::Json => emit(cli, &Envelope::new(config_string(cli), entries).to_json())?,
    }
    Ok(if any_error { 1 } else { 0 })
}

/// Inclusive `LO..HI`; an inverted range is legal and empty.
fn parse_incl_range(s: &str) -> Result<Vec<usize>> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| Error::Usage(format!("range {s:?} must be LO..HI")))?;
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| Error::Usage(format!("bad range start in {s:?}")))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| Error::Usage(format!("bad range end in {s:?}")))?;
    Ok((lo..=hi).collect())
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| Error::Usage(format!("bad rational {s:?}")))?;
        let q: i64 = q.trim().parse().map_err(|_| Error::Usage(format!("bad rational {s:?}")))?;
        if q == 0 {
            return Err(Error::Usage("zero denominator".into()));
        }
        return Ok(big_ratio(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let digits = frac.len() as u32;
        let whole: i64 = format!("{int}{frac}")
            .parse()
            .map_err(|_| Error::Usage(format!("bad decimal {s:?}")))?;
        return Ok(big_ratio(whole, 10i64.pow(digits)));
    }
    let i: i64 = s.parse().map_err(|_| Error::Usage(format!("bad number {s:?}")))?;
    Ok(big_ratio(i, 1))
}

fn parse_grid(s: &str) -> Result<GridRange> {
    let (range, step) = match s.rsplit_once(':') {
        Some((r, st)) => (r, Some(st)),
        None => (s, None),
    };
    let (lo, hi) = range
        .split_once("..")
        .ok_or_else(|| Error::Usage(format!("grid {s:?} must be LO..HI[:STEP]")))?;
    let start = parse_rational(lo)?;
    let end = parse_rational(hi)?;
    let step = match step {
        Some(st) => parse_rational(st)?,
        None => big_ratio(1, 1),
    };
    use num_traits::Signed;
    if !step.is_positive() || end < start {
        return Err(Error::Usage(format!("degenerate grid {s:?}")));
    }
    Ok(GridRange { start, end, step })
}

fn audit_orders(n: Option<usize>, n_range: Option<&str>) -> Result<Vec<usize>> {
    match (n, n_range) {
        (Some(n), None) => Ok(vec![n]),
        (None, Some(r)) => parse_incl_range(r),
        (None, None) => Err(Error::Usage("this audit needs --n or --n-range".into())),
        (Some(_), Some(_)) => Err(Error::Usage("give --n or --n-range, not both".into())),
    }
}

fn cmd_audit(
    cli: &Cli,
    guards: &Guards,
    claim: &str,
    k: Option<usize>,
    n: Option<usize>,
    n_range: Option<&str>,
    grid: Option<&str>,
) -> Result<i32> {
    if cli.format == Format::Csv {
        return Err(Error::Usage("audit reports are JSON-only".into()));
    }
    let config = config_string(cli);

    if let Some(id) = LemmaId::parse(claim) {
        let grid = match grid {
            Some(g) => parse_grid(g)?,
            None => default_grid(id),
        };
        let audit = audit_lemma(id, &grid)?;
        let holds = audit.all_hold();
        emit(cli, &Envelope::new(config, audit).to_json())?;
        return Ok(if holds { 0 } else { 1 });
    }

    match claim {
        "theorem1" => {
            let k = k.ok_or_else(|| Error::Usage("theorem1 needs --k".into()))?;
            let orders = audit_orders(n, n_range)?;
            let mut reports = Vec::new();
            let mut consistent = true;
            for n in orders {
                let audit = audit_nonregularity(k, n, guards)?;
                consistent &= audit.theorem_consistent;
                reports.push(audit);
            }
            emit(cli, &Envelope::new(config, reports).to_json())?;
            Ok(if consistent { 0 } else { 1 })
        }
        "corollary1" => {
            let k = k.ok_or_else(|| Error::Usage("corollary1 needs --k".into()))?;
            let orders = audit_orders(n, n_range)?;
            let mut reports = Vec::new();
            let mut holds = true;
            for n in orders {
                let report = check_corollary_gap2(k, n, guards)?;
                holds &= report.holds;
                reports.push(report);
            }
            emit(cli, &Envelope::new(config, reports).to_json())?;
            Ok(if holds { 0 } else { 1 })
        }
        "corollary2" => {
            let k = k.ok_or_else(|| Error::Usage("corollary2 needs --k".into()))?;
            let orders = audit_orders(n, n_range)?;
            let mut reports = Vec::new();
            let mut holds = true;
            for n in orders {
                for m in 2..=k + 2 {
                    let report = check_corollary_many_asym(k, n, m, guards)?;
                    holds &= report.holds;
                    reports.push(report);
                }
            }
            emit(cli, &Envelope::new(config, reports).to_json())?;
            Ok(if holds { 0 } else { 1 })
        }
        "conjecture" => {
            let k = k.ok_or_else(|| Error::Usage("conjecture needs --k".into()))?;
            let orders = audit_orders(n, n_range)?;
            let mut reports = Vec::new();
            let mut holds = true;
            for n in orders {
                let report = verify_conjecture(k, n, guards)?;
                holds &= report.conjecture_holds;
                reports.push(report);
            }
            emit(cli, &Envelope::new(config, reports).to_json())?;
            Ok(if holds { 0 } else { 1 })
        }
        other => Err(Error::Usage(format!(
            "unknown claim {other:?}; expected lemma2..lemma6, theorem1, corollary1, corollary2 \
             or conjecture"
        ))),
    }
}

fn cmd_scan_plot(cli: &Cli, guards: &Guards, k: usize, n_range: &str) -> Result<i32> {
    let mut rows = Vec::new();
    for n in parse_incl_range(n_range)? {
        rows.push(scan_plot_row(k, n, guards)?);
    }
    match cli.format {
        Format::Json => emit(cli, &Envelope::new(config_string(cli), rows).to_json())?,
        Format::Csv => {
            let mut csv =
                String::from("n,count,max_randic,extremal_value,gap_to_bound,conjecture\n");
            for r in rows {
                writeln!(
                    csv,
                    "{},{},{},{},{},{}",
                    r.n, r.count, r.max_randic, r.extremal_value, r.gap_to_bound, r.conjecture
                )
                .unwrap();
            }
            emit(cli, &csv)?;
        }
    }
    Ok(0)
}

fn cmd_enumerate(cli: &Cli, guards: &Guards, n: usize, k: Option<usize>) -> Result<i32> {
    let graphs: Vec<Graph> = match k {
        Some(k) => k_apex_trees(k, n, guards)?.collect(),
        None => connected_graphs(n, guards)?.collect(),
    };
    let mut out = String::new();
    for g in &graphs {
        out.push_str(canonical_code(g).as_graph6());
        out.push('\n');
    }
    emit(cli, &out)?;
    eprintln!(
        "{}",
        serde_json::json!({
            "n": n,
            "filter": match k { Some(k) => format!("{k}-apex trees"), None => "connected".into() },
            "count": graphs.len(),
        })
    );
    Ok(0)
}
