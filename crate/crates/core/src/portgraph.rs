//! Concrete labelled port graphs whose vertices carry explicit names.
//!
//! A [`NamedGraph`] may be disconnected (unions of patches are built this way);
//! a [`PointedGraph`] adds a pointer and is what gets canonicalized.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Port, Signature, State};
use crate::error::{Error, Result};
use crate::name::{Atom, VertexName};

/// The far end of an occupied port.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub vertex: usize,
    pub port: Port,
    pub label: Option<State>,
}

/// An edge `{a.0:a.1, b.0:b.1}` listed once, with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub a: (usize, Port),
    pub b: (usize, Port),
    pub label: Option<State>,
}

#[derive(Clone, Debug)]
pub struct NamedGraph {
    sig: Arc<Signature>,
    names: Vec<VertexName>,
    labels: Vec<Option<State>>,
    slots: Vec<Vec<Option<Slot>>>,
    atoms: HashMap<Atom, usize>,
}

impl NamedGraph {
    pub fn new(sig: Arc<Signature>) -> Self {
        NamedGraph {
            sig,
            names: Vec::new(),
            labels: Vec::new(),
            slots: Vec::new(),
            atoms: HashMap::new(),
        }
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &VertexName {
        &self.names[v]
    }

    pub fn names(&self) -> &[VertexName] {
        &self.names
    }

    pub fn label(&self, v: usize) -> Option<State> {
        self.labels[v]
    }

    pub fn slot(&self, v: usize, port: Port) -> Option<Slot> {
        self.slots[v][port.index()]
    }

    /// The vertex whose name contains `atom`.
    pub fn vertex_by_atom(&self, atom: &Atom) -> Option<usize> {
        self.atoms.get(atom).copied()
    }

    /// The vertex named exactly `name`.
    pub fn find(&self, name: &VertexName) -> Option<usize> {
        let v = self.vertex_by_atom(&name.atoms()[0])?;
        (self.names[v] == *name).then_some(v)
    }

    pub(crate) fn describe(&self, v: usize) -> String {
        self.names[v].display(self.sig.ports()).to_string()
    }

    /// Adds a vertex; its atoms must not occur in any existing name.
    pub fn add_vertex(&mut self, name: VertexName, label: Option<State>) -> Result<usize> {
        if let Some(state) = label {
            if state.index() >= self.sig.sigma().len() {
                return Err(Error::Parse(format!(
                    "vertex state {} out of range",
                    state.0
                )));
            }
        }
        if name.atoms().iter().any(|a| self.atoms.contains_key(a)) {
            return Err(Error::NameOverlap(
                name.display(self.sig.ports()).to_string(),
            ));
        }
        let v = self.names.len();
        for atom in name.atoms() {
            self.atoms.insert(atom.clone(), v);
        }
        self.names.push(name);
        self.labels.push(label);
        self.slots.push(vec![None; self.sig.arity()]);
        Ok(v)
    }

    pub fn set_label(&mut self, v: usize, label: Option<State>) {
        self.labels[v] = label;
    }

    /// Adds `{u:a, v:b}`. Re-adding an identical edge is a no-op that may fill in a missing label.
    pub fn add_edge(
        &mut self,
        (u, a): (usize, Port),
        (v, b): (usize, Port),
        label: Option<State>,
    ) -> Result<()> {
        if let Some(state) = label {
            if state.index() >= self.sig.delta().len() {
                return Err(Error::Parse(format!("edge state {} out of range", state.0)));
            }
        }
        if (u, a) == (v, b) {
            return Err(Error::PortReuse {
                vertex: self.describe(u),
                port: self.sig.ports().symbol(a),
            });
        }
        match (self.slots[u][a.index()], self.slots[v][b.index()]) {
            (None, None) => {
                self.slots[u][a.index()] = Some(Slot {
                    vertex: v,
                    port: b,
                    label,
                });
                self.slots[v][b.index()] = Some(Slot {
                    vertex: u,
                    port: a,
                    label,
                });
                Ok(())
            }
            (Some(s), _) if s.vertex == v && s.port == b => match (s.label, label) {
                (Some(x), Some(y)) if x != y => Err(Error::Parse(format!(
                    "conflicting labels on edge {}:{}",
                    self.describe(u),
                    self.sig.ports().symbol(a)
                ))),
                (None, Some(_)) => {
                    self.slots[u][a.index()].as_mut().unwrap().label = label;
                    self.slots[v][b.index()].as_mut().unwrap().label = label;
                    Ok(())
                }
                _ => Ok(()),
            },
            (Some(_), _) => Err(Error::PortReuse {
                vertex: self.describe(u),
                port: self.sig.ports().symbol(a),
            }),
            (None, Some(_)) => Err(Error::PortReuse {
                vertex: self.describe(v),
                port: self.sig.ports().symbol(b),
            }),
        }
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (u, ports) in self.slots.iter().enumerate() {
            for (i, s) in ports.iter().enumerate() {
                if let Some(s) = s {
                    let a = (u, Port(i as u8));
                    let b = (s.vertex, s.port);
                    if a < b {
                        out.push(Edge {
                            a,
                            b,
                            label: s.label,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Breadth-first distances from `root`; `None` for unreachable vertices.
    pub fn distances(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::from([root]);
        dist[root] = Some(0);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for s in self.slots[v].iter().flatten() {
                if dist[s.vertex].is_none() {
                    dist[s.vertex] = Some(d + 1);
                    queue.push_back(s.vertex);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.distances(0).iter().all(Option::is_some)
    }

    /// Set-level view used for equality: names with labels, edges by name.
    #[allow(clippy::type_complexity)]
    pub fn normal_form(
        &self,
    ) -> (
        BTreeMap<&VertexName, Option<State>>,
        BTreeSet<((&VertexName, Port), (&VertexName, Port), Option<State>)>,
    ) {
        let vertices = self
            .names
            .iter()
            .zip(&self.labels)
            .map(|(n, l)| (n, *l))
            .collect();
        let edges = self
            .edges()
            .into_iter()
            .map(|e| {
                let a = (&self.names[e.a.0], e.a.1);
                let b = (&self.names[e.b.0], e.b.1);
                if a <= b {
                    (a, b, e.label)
                } else {
                    (b, a, e.label)
                }
            })
            .collect();
        (vertices, edges)
    }

    /// Checks the four agreement clauses between two graphs named over the same vertex set.
    pub fn consistency(&self, other: &NamedGraph) -> Verdict {
        consistency(self, other)
    }

    pub fn union(&self, other: &NamedGraph) -> Result<NamedGraph> {
        let mut g = self.clone();
        g.merge(other)?;
        Ok(g)
    }

    /// In-place union; fails without modifying `self` if the operands are inconsistent.
    pub fn merge(&mut self, other: &NamedGraph) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch);
        }
        if let Verdict::Inconsistent(why) = consistency(self, other) {
            return Err(Error::Inconsistent(why));
        }
        let mut map = Vec::with_capacity(other.len());
        for v in 0..other.len() {
            let name = &other.names[v];
            let target = match self.vertex_by_atom(&name.atoms()[0]) {
                Some(x) => {
                    if self.labels[x].is_none() {
                        self.labels[x] = other.labels[v];
                    }
                    x
                }
                None => self.add_vertex(name.clone(), other.labels[v])?,
            };
            map.push(target);
        }
        for e in other.edges() {
            self.add_edge((map[e.a.0], e.a.1), (map[e.b.0], e.b.1), e.label)?;
        }
        Ok(())
    }

    /// The same graph with every name passed through `rename`.
    pub fn rename(
        &self,
        mut rename: impl FnMut(&VertexName) -> Result<VertexName>,
    ) -> Result<Self> {
        let mut g = NamedGraph::new(self.sig.clone());
        for v in 0..self.len() {
            g.add_vertex(rename(&self.names[v])?, self.labels[v])?;
        }
        for e in self.edges() {
            g.add_edge(e.a, e.b, e.label)?;
        }
        Ok(g)
    }
}

impl PartialEq for NamedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.normal_form() == other.normal_form()
    }
}

impl Eq for NamedGraph {}

/// Which agreement clause two graphs violate, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    /// Intersecting names must be equal.
    SharedNames,
    /// A shared port must lead to the same vertex and port.
    PortTargets,
    /// Shared edges must agree on defined labels.
    EdgeLabels,
    /// Shared vertices must agree on defined labels.
    VertexLabels,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::SharedNames => "(i) shared names",
            Clause::PortTargets => "(ii) port targets",
            Clause::EdgeLabels => "(iii) edge labels",
            Clause::VertexLabels => "(iv) vertex labels",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistency {
    pub clause: Clause,
    pub detail: String,
}

impl fmt::Display for Inconsistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "clause {}: {}", self.clause, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    TriviallyConsistent,
    Consistent,
    Inconsistent(Inconsistency),
}

impl Verdict {
    pub fn is_consistent(&self) -> bool {
        !matches!(self, Verdict::Inconsistent(_))
    }

    /// Consistent and overlapping.
    pub fn is_nontrivially_consistent(&self) -> bool {
        matches!(self, Verdict::Consistent)
    }

    pub fn clause(&self) -> Option<Clause> {
        match self {
            Verdict::Inconsistent(i) => Some(i.clause),
            _ => None,
        }
    }
}

fn consistency(g: &NamedGraph, h: &NamedGraph) -> Verdict {
    let fail = |clause, detail: String| Verdict::Inconsistent(Inconsistency { clause, detail });

    // (i): every vertex of h either misses g entirely or has a twin in g with the same name.
    let mut twin: Vec<Option<usize>> = vec![None; h.len()];
    let mut overlap = false;
    for (xh, name) in h.names.iter().enumerate() {
        let mut hits = name.atoms().iter().filter_map(|a| g.vertex_by_atom(a));
        let Some(xg) = hits.next() else {
            continue;
        };
        overlap = true;
        if g.names[xg] != *name || hits.any(|x| x != xg) {
            return fail(
                Clause::SharedNames,
                format!("{} meets {}", h.describe(xh), g.describe(xg)),
            );
        }
        twin[xh] = Some(xg);
    }
    if !overlap {
        return Verdict::TriviallyConsistent;
    }
    let pairs: Vec<(usize, usize)> = twin
        .iter()
        .enumerate()
        .filter_map(|(xh, t)| t.map(|xg| (xg, xh)))
        .collect();
    let ports = g.sig.ports();

    for &(xg, xh) in &pairs {
        for p in ports.ports() {
            if let (Some(sg), Some(sh)) = (g.slot(xg, p), h.slot(xh, p)) {
                if twin[sh.vertex] != Some(sg.vertex) || sg.port != sh.port {
                    return fail(
                        Clause::PortTargets,
                        format!(
                            "{}:{} leads to {}:{} and to {}:{}",
                            g.describe(xg),
                            ports.symbol(p),
                            g.describe(sg.vertex),
                            ports.symbol(sg.port),
                            h.describe(sh.vertex),
                            ports.symbol(sh.port)
                        ),
                    );
                }
            }
        }
    }
    for &(xg, xh) in &pairs {
        for p in ports.ports() {
            if let (Some(sg), Some(sh)) = (g.slot(xg, p), h.slot(xh, p)) {
                if let (Some(a), Some(b)) = (sg.label, sh.label) {
                    if a != b {
                        return fail(
                            Clause::EdgeLabels,
                            format!("edge at {}:{}", g.describe(xg), ports.symbol(p)),
                        );
                    }
                }
            }
        }
    }
    for &(xg, xh) in &pairs {
        if let (Some(a), Some(b)) = (g.labels[xg], h.labels[xh]) {
            if a != b {
                return fail(Clause::VertexLabels, format!("vertex {}", g.describe(xg)));
            }
        }
    }
    Verdict::Consistent
}

/// A problem found by [`PointedGraph::validate`] or document validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    PortReuse { vertex: String, port: char },
    UnknownPort(String),
    UnknownVertex(String),
    NameOverlap(String),
    BadName(String),
    UnknownState(String),
    MissingPointer,
    NotConnected { unreachable: usize },
    BadSignature(String),
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::PortReuse { vertex, port } => write!(f, "port reuse at {vertex}:{port}"),
            Issue::UnknownPort(p) => write!(f, "unknown port `{p}`"),
            Issue::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Issue::NameOverlap(v) => write!(f, "vertex name {v} overlaps another name"),
            Issue::BadName(v) => write!(f, "bad vertex name: {v}"),
            Issue::UnknownState(s) => write!(f, "unknown state `{s}`"),
            Issue::MissingPointer => f.write_str("pointer is not a vertex"),
            Issue::NotConnected { unreachable } => {
                write!(f, "not connected ({unreachable} vertices unreachable)")
            }
            Issue::BadSignature(s) => write!(f, "bad signature: {s}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn has_port_reuse(&self) -> bool {
        self.issues
            .iter()
            .any(|i| matches!(i, Issue::PortReuse { .. }))
    }

    pub fn is_disconnected(&self) -> bool {
        self.issues
            .iter()
            .any(|i| matches!(i, Issue::NotConnected { .. }))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return f.write_str("valid");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

/// A named graph with a distinguished pointer vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedGraph {
    graph: NamedGraph,
    pointer: usize,
}

impl PointedGraph {
    pub fn new(graph: NamedGraph, pointer: &VertexName) -> Result<Self> {
        let pointer = graph
            .find(pointer)
            .ok_or_else(|| Error::UnknownVertex(pointer.display(graph.sig.ports()).to_string()))?;
        Ok(PointedGraph { graph, pointer })
    }

    pub fn from_index(graph: NamedGraph, pointer: usize) -> Self {
        assert!(pointer < graph.len(), "pointer out of range");
        PointedGraph { graph, pointer }
    }

    pub fn graph(&self) -> &NamedGraph {
        &self.graph
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.graph.sig
    }

    pub fn pointer(&self) -> usize {
        self.pointer
    }

    pub fn pointer_name(&self) -> &VertexName {
        self.graph.name(self.pointer)
    }

    /// Connectivity and label-domain checks. Slot uniqueness and pointer
    /// membership hold by construction.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let unreachable = self
            .graph
            .distances(self.pointer)
            .iter()
            .filter(|d| d.is_none())
            .count();
        if unreachable > 0 {
            report.issues.push(Issue::NotConnected { unreachable });
        }
        report
    }

    /// Names of the vertices at distance at most `r` from the pointer.
    pub fn ball(&self, r: usize) -> BTreeSet<VertexName> {
        self.graph
            .distances(self.pointer)
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_some_and(|d| d <= r))
            .map(|(v, _)| self.graph.name(v).clone())
            .collect()
    }

    /// The disk of radius `r`, keeping the original names: vertices of the
    /// `r+1` ball, edges touching the `r` ball, labels inside the `r` ball only.
    pub fn induced_disk(&self, r: usize) -> PointedGraph {
        let dist = self.graph.distances(self.pointer);
        let within = |v: usize, k: usize| dist[v].is_some_and(|d| d <= k);
        let mut g = NamedGraph::new(self.graph.sig.clone());
        let mut map = vec![usize::MAX; self.graph.len()];
        for (v, slot) in map.iter_mut().enumerate() {
            if within(v, r + 1) {
                let label = if within(v, r) {
                    self.graph.label(v)
                } else {
                    None
                };
                *slot = g
                    .add_vertex(self.graph.name(v).clone(), label)
                    .expect("names stay disjoint");
            }
        }
        for e in self.graph.edges() {
            let (u, v) = (e.a.0, e.b.0);
            if within(u, r) || within(v, r) {
                let label = if within(u, r) && within(v, r) {
                    e.label
                } else {
                    None
                };
                g.add_edge((map[u], e.a.1), (map[v], e.b.1), label)
                    .expect("edge slots stay unique");
            }
        }
        PointedGraph {
            pointer: map[self.pointer],
            graph: g,
        }
    }

    /// Image under the renaming `rename`, which must be total on the vertices
    /// and map them to pairwise disjoint names.
    pub fn apply_isomorphism(&self, rename: &HashMap<VertexName, VertexName>) -> Result<Self> {
        let sig = self.graph.sig.clone();
        let mut order: Vec<usize> = (0..self.graph.len()).collect();
        let image = |v: usize| {
            rename
                .get(self.graph.name(v))
                .ok_or_else(|| Error::UnknownVertex(self.graph.describe(v)))
        };
        for v in 0..self.graph.len() {
            image(v)?;
        }
        // Insert in the order of the new names so that internal order carries no trace of the old one.
        order.sort_by(|&x, &y| image(x).unwrap().cmp(image(y).unwrap()));
        let mut g = NamedGraph::new(sig);
        let mut map = vec![0; self.graph.len()];
        for &v in &order {
            map[v] = g.add_vertex(image(v)?.clone(), self.graph.label(v))?;
        }
        for e in self.graph.edges() {
            g.add_edge((map[e.a.0], e.a.1), (map[e.b.0], e.b.1), e.label)?;
        }
        Ok(PointedGraph {
            pointer: map[self.pointer],
            graph: g,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::name::Suffix;
    use crate::word::PathWord;

    fn sig() -> Arc<Signature> {
        Signature::labeled("ab", &["x", "y"], &["p", "q"])
    }

    fn path3() -> PointedGraph {
        let s = sig();
        let mut g = NamedGraph::new(s);
        let u = g.add_vertex(VertexName::id("u"), None).unwrap();
        let v = g.add_vertex(VertexName::id("v"), None).unwrap();
        let w = g.add_vertex(VertexName::id("w"), None).unwrap();
        g.add_edge((u, Port(0)), (v, Port(1)), None).unwrap();
        g.add_edge((v, Port(0)), (w, Port(1)), None).unwrap();
        PointedGraph::from_index(g, u)
    }

    fn cycle(n: usize) -> PointedGraph {
        let mut g = NamedGraph::new(sig());
        for i in 0..n {
            g.add_vertex(VertexName::id(format!("v{i}")), Some(State(0)))
                .unwrap();
        }
        for i in 0..n {
            g.add_edge((i, Port(0)), ((i + 1) % n, Port(1)), Some(State(1)))
                .unwrap();
        }
        PointedGraph::from_index(g, 0)
    }

    fn names(ids: &[&str]) -> BTreeSet<VertexName> {
        ids.iter().map(|s| VertexName::id(*s)).collect()
    }

    #[test]
    fn single_vertex_is_valid() {
        let mut g = NamedGraph::new(sig());
        g.add_vertex(VertexName::id("u"), None).unwrap();
        let p = PointedGraph::from_index(g, 0);
        assert!(p.validate().is_valid());
        assert_eq!(p.induced_disk(3), p);
    }

    #[test]
    fn port_reuse_is_rejected() {
        let mut g = NamedGraph::new(sig());
        let u = g.add_vertex(VertexName::id("u"), None).unwrap();
        let v = g.add_vertex(VertexName::id("v"), None).unwrap();
        let w = g.add_vertex(VertexName::id("w"), None).unwrap();
        g.add_edge((u, Port(0)), (v, Port(0)), None).unwrap();
        assert!(matches!(
            g.add_edge((u, Port(0)), (w, Port(1)), None),
            Err(Error::PortReuse { .. })
        ));
        // identical edge again is fine
        g.add_edge((v, Port(0)), (u, Port(0)), None).unwrap();
        assert!(g.add_edge((u, Port(1)), (u, Port(1)), None).is_err());
    }

    #[test]
    fn disconnected_is_reported() {
        let mut g = NamedGraph::new(sig());
        g.add_vertex(VertexName::id("u"), None).unwrap();
        g.add_vertex(VertexName::id("v"), None).unwrap();
        let report = PointedGraph::from_index(g, 0).validate();
        assert!(report.is_disconnected());
    }

    #[test]
    fn balls() {
        let p = path3();
        assert_eq!(p.ball(0), names(&["u"]));
        assert_eq!(p.ball(1), names(&["u", "v"]));
        let c = cycle(4);
        assert_eq!(c.ball(2).len(), 4);
        for r in 0..4 {
            assert!(c.ball(r).is_subset(&c.ball(r + 1)));
        }
    }

    #[test]
    fn six_cycle_disk() {
        let c = cycle(6);
        let d = c.induced_disk(0);
        assert_eq!(d.graph().len(), 3);
        assert_eq!(d.graph().edge_count(), 2);
        assert_eq!(d.ball(1), names(&["v0", "v1", "v5"]));
        // only the pointer keeps its label; edges touch v1 or v5, so none keep theirs
        let g = d.graph();
        for v in 0..g.len() {
            assert_eq!(g.label(v).is_some(), g.name(v) == &VertexName::id("v0"));
        }
        assert!(g.edges().iter().all(|e| e.label.is_none()));
        assert!(d.validate().is_valid());
    }

    #[test]
    fn disk_keeps_edge_between_frontier_and_ball() {
        // triangle plus a pendant: radius-0 disk keeps both edges at the pointer,
        // drops the edge between the two neighbours
        let c = cycle(3);
        let d = c.induced_disk(0);
        assert_eq!(d.graph().len(), 3);
        assert_eq!(d.graph().edge_count(), 2);
    }

    #[test]
    fn isomorphism_identity_and_composition() {
        let p = cycle(5);
        let id: HashMap<_, _> = p
            .graph()
            .names()
            .iter()
            .map(|n| (n.clone(), n.clone()))
            .collect();
        assert_eq!(p.apply_isomorphism(&id).unwrap(), p);

        let r1: HashMap<_, _> = (0..5)
            .map(|i| {
                (
                    VertexName::id(format!("v{i}")),
                    VertexName::id(format!("w{}", 4 - i)),
                )
            })
            .collect();
        let r2: HashMap<_, _> = (0..5)
            .map(|i| {
                (
                    VertexName::id(format!("w{i}")),
                    VertexName::id(format!("z{}", (i + 2) % 5)),
                )
            })
            .collect();
        let both: HashMap<_, _> = r1.iter().map(|(k, v)| (k.clone(), r2[v].clone())).collect();
        let a = p
            .apply_isomorphism(&r1)
            .unwrap()
            .apply_isomorphism(&r2)
            .unwrap();
        let b = p.apply_isomorphism(&both).unwrap();
        assert_eq!(a.graph(), b.graph());
        assert_eq!(a.pointer_name(), b.pointer_name());
    }

    fn suffixed(base: &str, k: u16) -> Atom {
        Atom::word(PathWord::parse(base, sig().ports()).unwrap(), Suffix(k))
    }

    #[test]
    fn consistency_verdicts() {
        let p = cycle(4);
        let g = p.graph();
        assert_eq!(g.consistency(g), Verdict::Consistent);

        let mut h = NamedGraph::new(sig());
        h.add_vertex(VertexName::id("zz"), None).unwrap();
        assert_eq!(g.consistency(&h), Verdict::TriviallyConsistent);
        assert_eq!(h.consistency(g), Verdict::TriviallyConsistent);

        // {u.1} against {u.1, v.2}
        let mut a = NamedGraph::new(sig());
        a.add_vertex(VertexName::single(suffixed("ab", 1)), None)
            .unwrap();
        let mut b = NamedGraph::new(sig());
        b.add_vertex(
            VertexName::new([suffixed("ab", 1), suffixed("ba", 2)]).unwrap(),
            None,
        )
        .unwrap();
        assert_eq!(a.consistency(&b).clause(), Some(Clause::SharedNames));
        assert_eq!(b.consistency(&a).clause(), Some(Clause::SharedNames));
        assert!(a.union(&b).is_err());
    }

    #[test]
    fn consistency_label_and_port_clauses() {
        let base = cycle(3);
        let mut relabeled = base.graph().clone();
        relabeled.set_label(1, Some(State(1)));
        assert_eq!(
            base.graph().consistency(&relabeled).clause(),
            Some(Clause::VertexLabels)
        );

        let mut g = NamedGraph::new(sig());
        let u = g.add_vertex(VertexName::id("v0"), None).unwrap();
        let v = g.add_vertex(VertexName::id("v2"), None).unwrap();
        g.add_edge((u, Port(0)), (v, Port(1)), None).unwrap();
        assert_eq!(
            base.graph().consistency(&g).clause(),
            Some(Clause::PortTargets)
        );

        let mut e = NamedGraph::new(sig());
        let u = e.add_vertex(VertexName::id("v0"), None).unwrap();
        let v = e.add_vertex(VertexName::id("v1"), None).unwrap();
        e.add_edge((u, Port(0)), (v, Port(1)), Some(State(0)))
            .unwrap();
        assert_eq!(
            base.graph().consistency(&e).clause(),
            Some(Clause::EdgeLabels)
        );
    }

    #[test]
    fn union_basics() {
        let p = cycle(4);
        assert_eq!(p.graph().union(p.graph()).unwrap(), *p.graph());

        let mut a = NamedGraph::new(sig());
        a.add_vertex(VertexName::id("x"), None).unwrap();
        let mut b = NamedGraph::new(sig());
        b.add_vertex(VertexName::id("y"), None).unwrap();
        let u = a.union(&b).unwrap();
        assert_eq!(u.len(), 2);
        assert_eq!(u.edge_count(), 0);
        assert!(!u.is_connected());
    }

    #[test]
    fn union_fills_partial_labels() {
        let mut a = NamedGraph::new(sig());
        let x = a.add_vertex(VertexName::id("x"), None).unwrap();
        let y = a.add_vertex(VertexName::id("y"), Some(State(0))).unwrap();
        a.add_edge((x, Port(0)), (y, Port(1)), None).unwrap();
        let mut b = NamedGraph::new(sig());
        let x2 = b.add_vertex(VertexName::id("x"), Some(State(1))).unwrap();
        let y2 = b.add_vertex(VertexName::id("y"), None).unwrap();
        b.add_edge((x2, Port(0)), (y2, Port(1)), Some(State(0)))
            .unwrap();
        let u = a.union(&b).unwrap();
        assert_eq!(
            u.label(u.find(&VertexName::id("x")).unwrap()),
            Some(State(1))
        );
        assert_eq!(u.edges()[0].label, Some(State(0)));
        assert_eq!(u, b.union(&a).unwrap());
    }
}
