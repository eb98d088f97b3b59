//! Command-line front end: JSON documents in, verdicts and certificates
//! out.
//!
//! Exit status is 0 when the question is answered affirmatively, 1 when it
//! is answered negatively (with a certificate where one exists), and 2 for
//! unreadable input or bad usage, with a JSON error on stderr.

pub mod document;
pub mod dot;
pub mod output;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use pogcomp_core::completion::{complete, CompletionCertificate};
use pogcomp_core::graph::PartiallyOrientedGraph;
use pogcomp_core::implication::implication_classes;
use pogcomp_core::interval::{straight_enumeration, wegner_witness};
use pogcomp_core::obstruction::{
    catalog_build, classify_obstruction, extract_obstruction, is_obstruction, CatalogEntry, Family,
};
use pogcomp_core::oracle::{enumerate_obstructions_by, expand_level, EnumerationReport, Level, ENUMERATION_LIMIT};
use rayon::prelude::*;
use serde::Serialize;

use document::PogDocument;
use output::*;

/// Largest order enumerated without `--long-running`.
pub const QUICK_ENUMERATION_LIMIT: usize = 5;

#[derive(Debug, Parser)]
#[command(
    name = "pogcomp",
    version,
    about = "Acyclic local tournament completion of partially oriented graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide completability and print the certificate.
    Check { file: PathBuf },
    /// Write a completion, or the certificate that none exists.
    Complete {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Name the catalog obstruction isomorphic to the input.
    Classify { file: PathBuf },
    /// Find an obstruction critically contained in the input.
    Extract { file: PathBuf },
    /// Print a catalog member, e.g. `catalog F3_vi --size 5 --dual`.
    Catalog {
        entry: String,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        dual: bool,
    },
    /// Enumerate all obstructions up to an order with the brute-force oracle.
    Enumerate {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        /// Allow orders above the quick limit.
        #[arg(long)]
        long_running: bool,
    },
    /// Print a straight enumeration of the underlying graph, or a
    /// forbidden induced subgraph.
    StraightEnum { file: PathBuf },
    /// Print the implication classes of the underlying graph.
    ImplicationClasses { file: PathBuf },
    /// Print the graph in Graphviz format.
    ExportDot { file: PathBuf },
}

enum Failure {
    Usage(String),
    Io(String),
    Parse(document::DocumentError),
}

impl Failure {
    fn to_json(&self) -> ErrorJson {
        match self {
            Failure::Usage(m) => ErrorJson {
                error: "usage",
                message: m.clone(),
                line: None,
                column: None,
            },
            Failure::Io(m) => ErrorJson {
                error: "io",
                message: m.clone(),
                line: None,
                column: None,
            },
            Failure::Parse(e) => ErrorJson {
                error: "parse",
                message: e.message.clone(),
                line: e.line,
                column: e.column,
            },
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the tool on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => return report_failure(err, Failure::Usage(e.render().to_string())),
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => report_failure(err, f),
    }
}

fn report_failure(err: &mut dyn Write, f: Failure) -> i32 {
    let _ = writeln!(err, "{}", serde_json::to_string(&f.to_json()).expect("serializable"));
    2
}

fn read_graph(path: &Path) -> Result<(PogDocument, PartiallyOrientedGraph), Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    PogDocument::parse(&text).map_err(Failure::Parse)
}

/// Indented JSON with arrays of scalars kept on one line, so index pairs
/// read as `[0, 1]`.
pub fn json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = String::new();
    write_value(&mut s, &v, 0);
    s.push('\n');
    s
}

fn write_value(s: &mut String, v: &serde_json::Value, indent: usize) {
    use serde_json::Value;
    let pad = |s: &mut String, k: usize| s.extend(std::iter::repeat_n(' ', 2 * k));
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            s.push('[');
            s.push_str(&parts.join(", "));
            s.push(']');
        }
        Value::Array(items) => {
            s.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(s, indent + 1);
                write_value(s, x, indent + 1);
                s.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(s, indent);
            s.push(']');
        }
        Value::Object(map) if map.is_empty() => s.push_str("{}"),
        Value::Object(map) => {
            s.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                pad(s, indent + 1);
                s.push_str(&Value::String(k.clone()).to_string());
                s.push_str(": ");
                write_value(s, x, indent + 1);
                s.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(s, indent);
            s.push('}');
        }
        scalar => s.push_str(&scalar.to_string()),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string()))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { file } => {
            let (_, h) = read_graph(&file)?;
            let cert = complete(&h);
            let verdict = if cert.is_completed() {
                "COMPLETABLE"
            } else {
                "UNCOMPLETABLE"
            };
            emit(out, &format!("{verdict}\n{}", json(&CertificateJson::from(&cert))))?;
            Ok(if cert.is_completed() { 0 } else { 1 })
        }
        Command::Complete { file, output } => {
            let (doc, h) = read_graph(&file)?;
            match complete(&h) {
                CompletionCertificate::Completed(d) => {
                    let text = json(&PogDocument::from_graph(&d, doc.name));
                    match output {
                        Some(path) => write_file(&path, &text)?,
                        None => emit(out, &text)?,
                    }
                    Ok(0)
                }
                cert => {
                    emit(out, &json(&CertificateJson::from(&cert)))?;
                    Ok(1)
                }
            }
        }
        Command::Classify { file } => {
            let (_, h) = read_graph(&file)?;
            if let Some(entry) = classify_obstruction(&h) {
                emit(out, &json(&EntryJson::from(entry)))?;
                return Ok(0);
            }
            let reason = if is_obstruction(&h) {
                "an obstruction outside the catalog"
            } else if pogcomp_core::can_complete(&h) {
                "not an obstruction: completable"
            } else {
                "not an obstruction: uncompletable but not minimal"
            };
            emit(out, &format!("{reason}\n"))?;
            Ok(1)
        }
        Command::Extract { file } => {
            let (_, h) = read_graph(&file)?;
            match extract_obstruction(&h) {
                Ok(x) => {
                    let entry = classify_obstruction(&x.graph);
                    let name = entry.map(|e| e.to_string());
                    let report = ExtractionJson {
                        obstruction: PogDocument::from_graph(&x.graph, name),
                        relaxed_arcs: x.relaxed_arcs(&h).into_iter().map(|(u, v)| [u, v]).collect(),
                        vertices: x.vertices,
                        classification: entry.map(EntryJson::from),
                    };
                    emit(out, &json(&report))?;
                    Ok(0)
                }
                Err(_) => {
                    emit(
                        out,
                        &format!("COMPLETABLE\n{}", json(&CertificateJson::from(&complete(&h)))),
                    )?;
                    Ok(1)
                }
            }
        }
        Command::Catalog { entry, size, dual } => {
            let family = Family::parse(&entry, size).map_err(|e| Failure::Usage(e.to_string()))?;
            let e = CatalogEntry::new(family, dual);
            let h = catalog_build(e).map_err(|e| Failure::Usage(e.to_string()))?;
            emit(out, &json(&PogDocument::from_graph(&h, Some(e.to_string()))))?;
            Ok(0)
        }
        Command::Enumerate {
            max_n,
            report,
            threads,
            long_running,
        } => {
            if max_n > ENUMERATION_LIMIT {
                return Err(Failure::Usage(format!("--max-n is at most {ENUMERATION_LIMIT}")));
            }
            if max_n > QUICK_ENUMERATION_LIMIT && !long_running {
                return Err(Failure::Usage(format!(
                    "--max-n above {QUICK_ENUMERATION_LIMIT} needs --long-running"
                )));
            }
            let r = enumerate_parallel(max_n, threads)?;
            let text = json(&ReportJson::from(&r));
            match report {
                Some(path) => {
                    write_file(&path, &text)?;
                    emit(
                        out,
                        &format!("{} obstructions, counts {:?}\n", r.obstructions.len(), r.counts),
                    )?;
                }
                None => emit(out, &text)?,
            }
            Ok(0)
        }
        Command::StraightEnum { file } => {
            let (_, h) = read_graph(&file)?;
            let g = h.underlying();
            let res = match straight_enumeration(&g) {
                Some(se) => StraightJson {
                    proper_interval: true,
                    order: Some(se.into_order()),
                    witness: None,
                },
                None => {
                    let w = wegner_witness(&g).expect("not a proper interval graph");
                    StraightJson {
                        proper_interval: false,
                        order: None,
                        witness: Some((&w).into()),
                    }
                }
            };
            emit(out, &json(&res))?;
            Ok(if res.proper_interval { 0 } else { 1 })
        }
        Command::ImplicationClasses { file } => {
            let (_, h) = read_graph(&file)?;
            let part = implication_classes(&h.underlying());
            let pairs = |v: &[(usize, usize)]| v.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>();
            let classes: Vec<ClassJson> = part
                .classes()
                .iter()
                .map(|c| ClassJson {
                    edges: pairs(&c.edges),
                    trivial: c.is_trivial(),
                    orientation: c.orientation.as_deref().map(pairs),
                })
                .collect();
            emit(out, &json(&classes))?;
            Ok(0)
        }
        Command::ExportDot { file } => {
            let (doc, h) = read_graph(&file)?;
            emit(out, &dot::to_dot(&h, doc.name.as_deref()))?;
            Ok(0)
        }
    }
}

fn enumerate_parallel(max_n: usize, threads: Option<usize>) -> Result<EnumerationReport, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = threads {
        if k == 0 {
            return Err(Failure::Usage("--threads must be positive".into()));
        }
        builder = builder.num_threads(k);
    }
    let pool = builder.build().map_err(|e| Failure::Io(e.to_string()))?;
    let expand = |parents: &[PartiallyOrientedGraph]| {
        pool.install(|| {
            parents
                .par_chunks(4)
                .map(expand_level)
                .reduce(Level::default, |mut a, b| {
                    a.merge(b);
                    a
                })
        })
    };
    enumerate_obstructions_by(max_n, expand).map_err(|e| Failure::Usage(e.to_string()))
}
