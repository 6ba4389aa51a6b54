//! Generalized Cayley graphs, port graphs with path-word names, and causal
//! graph dynamics given by local rules.

pub mod alphabet;
pub mod canonical;
pub mod dot;
pub mod dynamics;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod json;
pub mod localrule;
pub mod metric;
pub mod name;
pub mod pathlang;
pub mod portgraph;
pub mod word;

pub use alphabet::{Port, PortAlphabet, Signature, State};
pub use canonical::Gcg;
pub use error::{Error, Result};
pub use json::GraphDoc;
pub use name::{Atom, Base, Suffix, VertexName};
pub use portgraph::{Clause, Edge, NamedGraph, PointedGraph, Slot, ValidationReport, Verdict};
pub use word::PathWord;
