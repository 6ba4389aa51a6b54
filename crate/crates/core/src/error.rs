use thiserror::Error;

use crate::portgraph::{Inconsistency, ValidationReport};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    Alphabet(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(ValidationReport),

    #[error("port {port} of vertex {vertex} is already in use")]
    PortReuse { vertex: String, port: char },

    #[error("vertex name {0} overlaps an existing vertex name")]
    NameOverlap(String),

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("inconsistent operands: {0}")]
    Inconsistent(Inconsistency),

    #[error("name atom {0} does not resolve")]
    UnresolvableAtom(String),

    #[error("port alphabets or state sets differ")]
    SignatureMismatch,

    #[error("rule `{rule}`: {message}")]
    Rule { rule: String, message: String },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("generators do not generate the group ({reached} of {order} elements reached)")]
    NotGenerating { reached: usize, order: usize },

    #[error("structure violates the axioms: {0}")]
    Axiom(String),

    #[error("equivalence class of {0} has no witness within the bound")]
    Unwitnessed(String),

    #[error("enumeration exceeded the limit of {limit} graphs at radius {radius}")]
    Intractable { radius: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn rule(rule: &str, message: impl Into<String>) -> Self {
        Error::Rule {
            rule: rule.to_string(),
            message: message.into(),
        }
    }
}
