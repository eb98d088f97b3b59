use alloc::string::String;
use core::fmt;

use crate::graph::VertexId;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop {
        vertex: VertexId,
    },
    VertexOutOfRange {
        vertex: VertexId,
        order: usize,
    },
    /// The pair appears as an edge and an arc, or as arcs in both directions.
    ConflictingPair {
        u: VertexId,
        v: VertexId,
    },
    ArcAbsent {
        tail: VertexId,
        head: VertexId,
    },
    EdgeAbsent {
        u: VertexId,
        v: VertexId,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for a graph on {order} vertices")
            }
            GraphError::ConflictingPair { u, v } => {
                write!(f, "pair {{{u}, {v}}} appears in more than one role")
            }
            GraphError::ArcAbsent { tail, head } => write!(f, "no arc ({tail}, {head})"),
            GraphError::EdgeAbsent { u, v } => write!(f, "no edge {u}{v}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Misuse of an operation whose precondition the caller could have checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    Graph(GraphError),
    NotAPermutation,
    /// A witness was requested for a graph that is a proper interval graph.
    ProperIntervalGraph,
    /// The pair is not an edge of the graph.
    NotAnEdge {
        u: VertexId,
        v: VertexId,
    },
    /// The ordering is not a straight enumeration of the underlying graph.
    NotStraight,
    /// A family parameter below its minimum.
    ParameterTooSmall {
        family: &'static str,
        minimum: usize,
        got: usize,
    },
    /// The family has a fixed size and takes no parameter.
    FixedFamily {
        family: &'static str,
    },
    /// Obstruction extraction was asked for a completable graph.
    Completable,
    /// The brute-force oracle refuses inputs with more undirected edges than
    /// its cap.
    EdgeCapExceeded {
        edges: usize,
        cap: usize,
    },
    /// Exhaustive enumeration past the supported order.
    OrderTooLarge {
        requested: usize,
        limit: usize,
    },
    UnknownFamily(String),
    /// A parametric family was named without its size.
    MissingSize {
        family: &'static str,
    },
}

impl From<GraphError> for Error {
    fn from(e: GraphError) -> Self {
        Error::Graph(e)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Graph(e) => e.fmt(f),
            Error::NotAPermutation => f.write_str("ordering is not a permutation of the vertex set"),
            Error::ProperIntervalGraph => f.write_str("graph is a proper interval graph"),
            Error::NotAnEdge { u, v } => write!(f, "{u}{v} is not an edge"),
            Error::NotStraight => f.write_str("ordering is not a straight enumeration"),
            Error::ParameterTooSmall { family, minimum, got } => {
                write!(f, "{family} needs at least {minimum} vertices, got {got}")
            }
            Error::FixedFamily { family } => write!(f, "{family} has a fixed size"),
            Error::Completable => f.write_str("graph can be completed; it contains no obstruction"),
            Error::EdgeCapExceeded { edges, cap } => {
                write!(f, "{edges} undirected edges exceed the oracle cap of {cap}")
            }
            Error::OrderTooLarge { requested, limit } => {
                write!(f, "order {requested} exceeds the enumeration limit {limit}")
            }
            Error::UnknownFamily(name) => write!(f, "unknown obstruction family {name:?}"),
            Error::MissingSize { family } => write!(f, "{family} needs a size"),
        }
    }
}

impl core::error::Error for Error {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Error::Graph(e) => Some(e),
            _ => None,
        }
    }
}
