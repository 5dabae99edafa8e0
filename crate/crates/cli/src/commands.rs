use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use degree_indices::closed_forms::{closed_form, min_order};
use degree_indices::edgelist::{from_edge_list, to_edge_list};
use degree_indices::indices::compute_index;
use degree_indices::partition::partition;
use degree_indices::render::{partition_csv, partition_text, report_csv, sig12};
use degree_indices::verify::{
    default_range, errata_report, relative_error, verify_family_with_variant, Erratum,
    VerificationReport,
};
use degree_indices::{Error, Family, FormulaVariant, Graph, IndexKind, Labeling};
use serde::Serialize;

use crate::args::{Cli, Command, Format, Method, ReportFormat, Source};
use crate::error::CliError;

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate { family, n, out } => {
            let family: Family = family.parse()?;
            let graph = family.generate(n)?;
            emit(out.as_deref(), &to_edge_list(&graph))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compute {
            source,
            index,
            method,
            variant,
            format,
        } => {
            let loaded = Loaded::from_source(&source)?;
            let variant: FormulaVariant = variant.parse()?;
            let kinds = parse_kinds(&index)?;
            let rows = compute_rows(&loaded, &kinds, method, variant, index != "all")?;
            print!("{}", render_compute(&rows, format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Partition { source, mode, format } => {
            let loaded = Loaded::from_source(&source)?;
            let mode: Labeling = mode.parse()?;
            let p = partition(&loaded.graph, mode);
            let text = match format {
                Format::Text => partition_text(&p),
                Format::Csv => partition_csv(&p),
                Format::Json => {
                    let doc = PartitionDoc {
                        source: loaded.label.clone(),
                        mode,
                        edges: p.total_edges(),
                        classes: p.rows(),
                    };
                    to_json_line(&doc)
                }
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            family,
            n_min,
            n_max,
            index,
            variant,
            tol,
            format,
            out,
        } => {
            let families = match family.trim().to_ascii_lowercase().as_str() {
                "all" => Family::ALL.to_vec(),
                other => vec![other.parse::<Family>()?],
            };
            let variant: FormulaVariant = variant.parse()?;
            let explicit = index.trim() != "all";
            let kinds = parse_kinds(&index)?;
            let mut report = run_verify(&families, &kinds, explicit, n_min, n_max, tol, variant)?;
            report.errata = errata_report(3)?;
            let text = match format {
                ReportFormat::Json => report.to_json() + "\n",
                ReportFormat::Csv => report_csv(&report),
            };
            emit(out.as_deref(), &text)?;
            if !report.errata.is_empty() {
                eprint!("{}", render_errata(&report.errata));
            }
            eprintln!(
                "verify: {} entries, {} passed, {} failed, max rel error {}",
                report.summary.total,
                report.summary.passed,
                report.summary.failed,
                sig12(report.summary.max_rel_error)
            );
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Errata { n, format } => {
            let errata = errata_report(n)?;
            let text = match format {
                Format::Json => to_json_line(&errata),
                Format::Text | Format::Csv => render_errata(&errata),
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

struct Loaded {
    label: String,
    family: Option<(Family, u32)>,
    graph: Graph,
}

impl Loaded {
    fn from_source(source: &Source) -> Result<Self> {
        match (&source.family, source.n, &source.edges) {
            (Some(family), Some(n), None) => {
                let family: Family = family.parse()?;
                Ok(Loaded {
                    label: format!("{family}:{n}"),
                    family: Some((family, n)),
                    graph: family.generate(n)?,
                })
            }
            (None, _, Some(path)) => {
                let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                Ok(Loaded {
                    label: path.display().to_string(),
                    family: None,
                    graph: from_edge_list(&text)?,
                })
            }
            _ => Err(CliError::Usage(
                "give either --family with --n, or --edges".into(),
            )),
        }
    }
}

fn parse_kinds(spec: &str) -> Result<Vec<IndexKind>> {
    if spec.trim() == "all" {
        return Ok(IndexKind::ALL.to_vec());
    }
    let mut kinds = spec
        .split(',')
        .map(str::parse)
        .collect::<std::result::Result<Vec<IndexKind>, _>>()?;
    kinds.sort();
    kinds.dedup();
    Ok(kinds)
}

#[derive(Debug, Serialize)]
struct ComputeRow {
    source: String,
    kind: IndexKind,
    brute: Option<f64>,
    closed: Option<f64>,
    rel_error: Option<f64>,
}

fn compute_rows(
    loaded: &Loaded,
    kinds: &[IndexKind],
    method: Method,
    variant: FormulaVariant,
    strict: bool,
) -> Result<Vec<ComputeRow>> {
    let want_closed = matches!(method, Method::Closed | Method::Both);
    let want_brute = matches!(method, Method::Brute | Method::Both);
    let family = match (want_closed, loaded.family) {
        (true, None) => {
            return Err(CliError::Usage(
                "closed forms exist only for --family sources, not edge-list files".into(),
            ))
        }
        (_, f) => f,
    };
    let mut rows = Vec::with_capacity(kinds.len());
    for &kind in kinds {
        let brute = want_brute.then(|| compute_index(&loaded.graph, kind));
        let closed = match family.filter(|_| want_closed) {
            Some((family, n)) if strict || n >= min_order(family, kind) => {
                Some(closed_form(family, kind, n, variant)?.value)
            }
            _ => None,
        };
        let rel_error = match (brute, closed) {
            (Some(b), Some(c)) => Some(relative_error(c, b)),
            _ => None,
        };
        rows.push(ComputeRow {
            source: loaded.label.clone(),
            kind,
            brute,
            closed,
            rel_error,
        });
    }
    Ok(rows)
}

fn render_compute(rows: &[ComputeRow], format: Format) -> String {
    let opt = |v: Option<f64>| v.map(sig12).unwrap_or_default();
    let mut out = String::new();
    match format {
        Format::Json => out = to_json_line(&rows),
        Format::Csv => {
            out.push_str("source,kind,brute,closed,rel_error\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.source,
                    r.kind,
                    opt(r.brute),
                    opt(r.closed),
                    opt(r.rel_error)
                );
            }
        }
        Format::Text => {
            for r in rows {
                let mut line = format!("{:<16}", r.kind.name());
                for (name, value) in [("brute", r.brute), ("closed", r.closed), ("rel_error", r.rel_error)] {
                    if let Some(v) = value {
                        let _ = write!(line, " {name}={}", sig12(v));
                    }
                }
                if r.closed.is_none() && r.brute.is_none() {
                    line.push_str(" closed=n/a");
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
    }
    out
}

#[derive(Serialize)]
struct PartitionDoc {
    source: String,
    mode: Labeling,
    edges: u64,
    classes: Vec<degree_indices::partition::PartitionRow>,
}

fn run_verify(
    families: &[Family],
    kinds: &[IndexKind],
    explicit: bool,
    n_min: Option<u32>,
    n_max: Option<u32>,
    tol: f64,
    variant: FormulaVariant,
) -> Result<VerificationReport> {
    if let (Some(lo), Some(hi)) = (n_min, n_max) {
        if lo > hi {
            return Err(Error::Domain(format!("empty range: n-min {lo} > n-max {hi}")).into());
        }
    }
    let mut report = VerificationReport::default();
    for &family in families {
        for &kind in kinds {
            let (dlo, dhi) = default_range(family, kind);
            let mut lo = n_min.unwrap_or(dlo);
            let hi = n_max.unwrap_or(dhi);
            if !explicit {
                // `--index all` skips orders below a formula's floor.
                lo = lo.max(min_order(family, kind));
                if lo > hi {
                    continue;
                }
            }
            let part = verify_family_with_variant(family, &[kind], lo, hi, tol, variant)?;
            report = report.merge(part);
        }
    }
    Ok(report)
}

fn render_errata(errata: &[Erratum]) -> String {
    let mut out = String::from("errata:\n");
    for e in errata {
        let _ = write!(out, "- {}: {}", e.location, e.description);
        if let Some(ev) = &e.evidence {
            let _ = write!(
                out,
                " [n={} as_stated={} proof_derived={} oracle={}]",
                ev.n,
                sig12(ev.as_stated),
                sig12(ev.proof_derived),
                sig12(ev.oracle)
            );
        }
        out.push('\n');
    }
    out
}

fn to_json_line<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: PathBuf::from(path),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
