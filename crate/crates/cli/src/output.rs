//! JSON shapes written by the command-line tool. Field order is the
//! serialization order.

use pogcomp_core::completion::CompletionCertificate;
use pogcomp_core::interval::WegnerWitness;
use pogcomp_core::obstruction::CatalogEntry;
use pogcomp_core::oracle::EnumerationReport;
use serde::Serialize;

use crate::document::PogDocument;

#[derive(Debug, Serialize)]
pub struct WitnessJson {
    pub kind: &'static str,
    pub vertices: Vec<usize>,
}

impl From<&WegnerWitness> for WitnessJson {
    fn from(w: &WegnerWitness) -> Self {
        WitnessJson {
            kind: w.kind.name(),
            vertices: w.vertices.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(tag = "certificate", rename_all = "snake_case")]
pub enum CertificateJson {
    Completed {
        completion: PogDocument,
    },
    NotProperInterval {
        witness: WitnessJson,
    },
    DirectedCycle {
        cycle: Vec<usize>,
    },
    OpposingUnbalancedArcs {
        positive: [usize; 2],
        negative: [usize; 2],
        order: Vec<usize>,
    },
}

impl From<&CompletionCertificate> for CertificateJson {
    fn from(c: &CompletionCertificate) -> Self {
        match c {
            CompletionCertificate::Completed(d) => CertificateJson::Completed {
                completion: PogDocument::from_graph(d, None),
            },
            CompletionCertificate::NotProperInterval(w) => CertificateJson::NotProperInterval { witness: w.into() },
            CompletionCertificate::DirectedCycle(c) => CertificateJson::DirectedCycle { cycle: c.clone() },
            CompletionCertificate::OpposingUnbalancedArcs {
                positive,
                negative,
                order,
            } => CertificateJson::OpposingUnbalancedArcs {
                positive: [positive.0, positive.1],
                negative: [negative.0, negative.1],
                order: order.order().to_vec(),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EntryJson {
    pub name: String,
    pub family: &'static str,
    pub size: usize,
    pub dual: bool,
}

impl From<CatalogEntry> for EntryJson {
    fn from(e: CatalogEntry) -> Self {
        EntryJson {
            name: e.to_string(),
            family: e.family.name(),
            size: e.family.order(),
            dual: e.dualized,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExtractionJson {
    pub obstruction: PogDocument,
    /// Input labels of the kept vertices.
    pub vertices: Vec<usize>,
    /// Input arcs turned into edges.
    pub relaxed_arcs: Vec<[usize; 2]>,
    pub classification: Option<EntryJson>,
}

#[derive(Debug, Serialize)]
pub struct EnumeratedJson {
    /// Canonical code in lowercase hex.
    pub code: String,
    pub classification: Option<EntryJson>,
    pub graph: PogDocument,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub max_n: usize,
    pub counts: Vec<usize>,
    pub completable_counts: Vec<usize>,
    pub obstructions: Vec<EnumeratedJson>,
}

impl From<&EnumerationReport> for ReportJson {
    fn from(r: &EnumerationReport) -> Self {
        ReportJson {
            max_n: r.max_n,
            counts: r.counts.clone(),
            completable_counts: r.completable_counts.clone(),
            obstructions: r
                .obstructions
                .iter()
                .map(|(code, g)| EnumeratedJson {
                    code: code.iter().map(|b| format!("{b:02x}")).collect(),
                    classification: pogcomp_core::classify_obstruction(g).map(EntryJson::from),
                    graph: PogDocument::from_graph(g, None),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct StraightJson {
    pub proper_interval: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Serialize)]
pub struct ClassJson {
    pub edges: Vec<[usize; 2]>,
    pub trivial: bool,
    /// `null` when the class cannot be oriented consistently.
    pub orientation: Option<Vec<[usize; 2]>>,
}

#[derive(Debug, Serialize)]
pub struct ErrorJson {
    pub error: &'static str,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}
