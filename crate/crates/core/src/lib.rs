//! Completing partially oriented graphs to acyclic local tournaments.
//!
//! A partially oriented graph mixes undirected edges with arcs. It is
//! completable when its edges can be oriented so that the result is an
//! acyclic local tournament: no directed cycle, and the in- and
//! out-neighbourhood of every vertex induce tournaments. This crate decides
//! completability in polynomial time, builds completions, and explains
//! failures by certificates and by the minimal obstructions they contain.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod completion;
pub mod error;
pub mod graph;
pub mod implication;
pub mod interval;
pub mod iso;
pub mod obstruction;
pub mod oracle;

pub use completion::{can_complete, complete, verify_completion, CompletionCertificate};
pub use error::{Error, GraphError};
pub use graph::{Graph, PartiallyOrientedGraph, Rel, VertexId};
pub use iso::{canonical_code, mixed_isomorphic, IsoMapping};
pub use obstruction::{catalog_build, classify_obstruction, extract_obstruction, is_obstruction, CatalogEntry, Family};
