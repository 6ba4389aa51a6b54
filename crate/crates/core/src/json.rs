//! The JSON graph document shared by the library and the command line.
//!
//! ```json
//! { "ports": ["a","b"], "sigma": [], "delta": [],
//!   "vertices": [{"name": [["u",""]], "label": null}],
//!   "edges": [{"a": [[["u",""]], "a"], "b": [[["v",""]], "b"], "label": null}],
//!   "pointer": [["u",""]] }
//! ```

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Port, PortAlphabet, Signature, State};
use crate::canonical::Gcg;
use crate::error::{Error, Result};
use crate::name::{Atom, VertexName};
use crate::portgraph::{Issue, NamedGraph, PointedGraph, ValidationReport};

/// A vertex name as a list of `[base, suffix]` pairs; the empty suffix is ε.
pub type NameDoc = Vec<(String, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub name: NameDoc,
    #[serde(default)]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub a: (NameDoc, String),
    pub b: (NameDoc, String),
    #[serde(default)]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub ports: Vec<String>,
    #[serde(default)]
    pub sigma: Vec<String>,
    #[serde(default)]
    pub delta: Vec<String>,
    pub vertices: Vec<VertexDoc>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pointer: Option<NameDoc>,
}

pub fn encode_name(name: &VertexName, ports: &PortAlphabet) -> NameDoc {
    name.atoms()
        .iter()
        .map(|a| (a.encode_base(ports), a.suffix.encode()))
        .collect()
}

pub fn decode_name(doc: &NameDoc, ports: &PortAlphabet) -> Result<VertexName> {
    let atoms = doc
        .iter()
        .map(|(base, suffix)| Atom::decode(base, suffix, ports))
        .collect::<Result<Vec<_>>>()?;
    VertexName::new(atoms)
}

fn port_of(text: &str, ports: &PortAlphabet) -> Option<Port> {
    let mut chars = text.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => ports.port(c),
        _ => None,
    }
}

impl GraphDoc {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_named(g: &NamedGraph, pointer: Option<usize>) -> Self {
        let sig = g.signature();
        let ports = sig.ports();
        let vertices = (0..g.len())
            .map(|v| VertexDoc {
                name: encode_name(g.name(v), ports),
                label: g.label(v).map(|s| sig.vertex_state_name(s).to_string()),
            })
            .collect();
        let edges = g
            .edges()
            .into_iter()
            .map(|e| EdgeDoc {
                a: (
                    encode_name(g.name(e.a.0), ports),
                    ports.symbol(e.a.1).to_string(),
                ),
                b: (
                    encode_name(g.name(e.b.0), ports),
                    ports.symbol(e.b.1).to_string(),
                ),
                label: e.label.map(|s| sig.edge_state_name(s).to_string()),
            })
            .collect();
        GraphDoc {
            ports: ports.symbols().iter().map(|c| c.to_string()).collect(),
            sigma: sig.sigma().to_vec(),
            delta: sig.delta().to_vec(),
            vertices,
            edges,
            pointer: pointer.map(|p| encode_name(g.name(p), ports)),
        }
    }

    pub fn from_pointed(p: &PointedGraph) -> Self {
        Self::from_named(p.graph(), Some(p.pointer()))
    }

    /// Vertices are named by their path words, e.g. `[["ab.ba", ""]]`.
    pub fn from_gcg(g: &Gcg) -> Self {
        Self::from_pointed(&g.to_pointed())
    }

    pub fn signature(&self) -> Result<Arc<Signature>> {
        let mut symbols = Vec::with_capacity(self.ports.len());
        for p in &self.ports {
            let mut chars = p.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => symbols.push(c),
                _ => {
                    return Err(Error::Alphabet(format!(
                        "port `{p}` is not a single character"
                    )))
                }
            }
        }
        Signature::new(
            PortAlphabet::new(symbols)?,
            self.sigma.clone(),
            self.delta.clone(),
        )
    }

    /// Builds the graph, collecting every problem instead of stopping at the first.
    fn assemble(&self) -> (Option<NamedGraph>, Option<usize>, ValidationReport) {
        let mut report = ValidationReport::default();
        let sig = match self.signature() {
            Ok(s) => s,
            Err(e) => {
                report.issues.push(Issue::BadSignature(e.to_string()));
                return (None, None, report);
            }
        };
        let ports = sig.ports().clone();
        let mut g = NamedGraph::new(sig.clone());
        let mut index: HashMap<VertexName, usize> = HashMap::new();
        for v in &self.vertices {
            let name = match decode_name(&v.name, &ports) {
                Ok(n) => n,
                Err(e) => {
                    report.issues.push(Issue::BadName(e.to_string()));
                    continue;
                }
            };
            let label = match &v.label {
                None => None,
                Some(s) => match sig.vertex_state(s) {
                    Some(st) => Some(st),
                    None => {
                        report.issues.push(Issue::UnknownState(s.clone()));
                        None
                    }
                },
            };
            match g.add_vertex(name.clone(), label) {
                Ok(i) => {
                    index.insert(name, i);
                }
                Err(_) => report
                    .issues
                    .push(Issue::NameOverlap(name.display(&ports).to_string())),
            }
        }
        let endpoint = |(name, port): &(NameDoc, String), report: &mut ValidationReport| {
            let v = match decode_name(name, &ports) {
                Ok(n) => match index.get(&n) {
                    Some(&v) => Some(v),
                    None => {
                        report
                            .issues
                            .push(Issue::UnknownVertex(n.display(&ports).to_string()));
                        None
                    }
                },
                Err(e) => {
                    report.issues.push(Issue::BadName(e.to_string()));
                    None
                }
            };
            let p = port_of(port, &ports);
            if p.is_none() {
                report.issues.push(Issue::UnknownPort(port.clone()));
            }
            v.zip(p)
        };
        for e in &self.edges {
            let a = endpoint(&e.a, &mut report);
            let b = endpoint(&e.b, &mut report);
            let label: Option<State> = match &e.label {
                None => None,
                Some(s) => match sig.edge_state(s) {
                    Some(st) => Some(st),
                    None => {
                        report.issues.push(Issue::UnknownState(s.clone()));
                        None
                    }
                },
            };
            if let (Some(a), Some(b)) = (a, b) {
                match g.add_edge(a, b, label) {
                    Ok(()) => {}
                    Err(Error::PortReuse { vertex, port }) => {
                        report.issues.push(Issue::PortReuse { vertex, port })
                    }
                    Err(other) => report.issues.push(Issue::BadName(other.to_string())),
                }
            }
        }
        let pointer = match &self.pointer {
            None => None,
            Some(p) => {
                let found = decode_name(p, &ports)
                    .ok()
                    .and_then(|n| index.get(&n).copied());
                if found.is_none() {
                    report.issues.push(Issue::MissingPointer);
                }
                found
            }
        };
        if let Some(p) = pointer {
            let unreachable = g.distances(p).iter().filter(|d| d.is_none()).count();
            if unreachable > 0 {
                report.issues.push(Issue::NotConnected { unreachable });
            }
        }
        (Some(g), pointer, report)
    }

    /// Every problem with the document. A pointed document must also be connected.
    pub fn validate(&self) -> ValidationReport {
        self.assemble().2
    }

    /// The (possibly disconnected) named graph; the pointer, if any, is ignored.
    pub fn to_named(&self) -> Result<NamedGraph> {
        let (g, _, mut report) = self.assemble();
        report
            .issues
            .retain(|i| !matches!(i, Issue::NotConnected { .. } | Issue::MissingPointer));
        match g {
            Some(g) if report.is_valid() => Ok(g),
            _ => Err(Error::InvalidGraph(report)),
        }
    }

    pub fn to_pointed(&self) -> Result<PointedGraph> {
        let (g, pointer, mut report) = self.assemble();
        if self.pointer.is_none() {
            report.issues.push(Issue::MissingPointer);
        }
        match (g, pointer) {
            (Some(g), Some(p)) if report.is_valid() => Ok(PointedGraph::from_index(g, p)),
            _ => Err(Error::InvalidGraph(report)),
        }
    }

    pub fn to_gcg(&self) -> Result<Gcg> {
        Gcg::from_pointed(&self.to_pointed()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PATH: &str = r#"{
        "ports": ["a", "b"], "sigma": ["x"], "delta": ["e"],
        "vertices": [{"name": [["u", ""]], "label": "x"}, {"name": [["v", ""]]}],
        "edges": [{"a": [[["u", ""]], "a"], "b": [[["v", ""]], "b"], "label": "e"}],
        "pointer": [["u", ""]]
    }"#;

    #[test]
    fn roundtrip() {
        let doc = GraphDoc::parse(PATH).unwrap();
        assert!(doc.validate().is_valid());
        let p = doc.to_pointed().unwrap();
        let again = GraphDoc::from_pointed(&p);
        assert_eq!(again.to_pointed().unwrap(), p);
        let g = doc.to_gcg().unwrap();
        let gdoc = GraphDoc::from_gcg(&g);
        assert_eq!(
            gdoc.vertices[1].name,
            vec![("ab".to_string(), String::new())]
        );
        assert_eq!(gdoc.to_gcg().unwrap(), g);
    }

    #[test]
    fn reports_problems() {
        let mut doc = GraphDoc::parse(PATH).unwrap();
        doc.edges.push(EdgeDoc {
            a: (vec![("u".into(), "".into())], "a".into()),
            b: (vec![("v".into(), "".into())], "a".into()),
            label: None,
        });
        doc.vertices.push(VertexDoc {
            name: vec![("w".into(), "".into())],
            label: Some("nope".into()),
        });
        let report = doc.validate();
        assert!(report.has_port_reuse());
        assert!(report.is_disconnected());
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, Issue::UnknownState(_))));
        assert!(doc.to_pointed().is_err());
    }

    #[test]
    fn malformed_json_is_an_error() {
        assert!(matches!(GraphDoc::parse("{"), Err(Error::Json(_))));
    }
}
