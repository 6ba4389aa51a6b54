//! Generalized Cayley graphs: pointed graphs named by their shortlex-minimal
//! path words, which makes them canonical up to isomorphism.

use std::collections::HashMap;
use std::sync::Arc;

use crate::alphabet::{Port, Signature, State};
use crate::error::{Error, Result};
use crate::name::{Atom, VertexName};
use crate::portgraph::{Edge, NamedGraph, PointedGraph, Slot};
use crate::word::PathWord;

/// A generalized Cayley graph. Vertex `i` is named by `words[i]`; vertex 0 is
/// the pointer ε. Vertices are stored in shortlex order of their names, which
/// is also breadth-first order with ports expanded in alphabet order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gcg {
    sig: Arc<Signature>,
    words: Vec<PathWord>,
    labels: Vec<Option<State>>,
    slots: Vec<Vec<Option<Slot>>>,
}

/// A canonical form together with the source vertex of each canonical index.
pub(crate) struct Canon {
    pub gcg: Gcg,
    pub order: Vec<usize>,
}

/// Canonicalizes the component of `root` in an abstract port graph given by
/// its slot and label functions. With `limit = Some(r)` the result is the radius-`r` disk.
pub(crate) fn build<S, L>(
    sig: &Arc<Signature>,
    root: usize,
    limit: Option<usize>,
    slot: S,
    label: L,
) -> Canon
where
    S: Fn(usize, Port) -> Option<Slot>,
    L: Fn(usize) -> Option<State>,
{
    let inside = |d: usize| limit.is_none_or(|r| d <= r);
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut order = vec![root];
    let mut words = vec![PathWord::empty()];
    index.insert(root, 0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        if inside(words[head].len()) {
            for p in sig.ports().ports() {
                if let Some(s) = slot(v, p) {
                    if let std::collections::hash_map::Entry::Vacant(e) = index.entry(s.vertex) {
                        e.insert(order.len());
                        order.push(s.vertex);
                        let w = words[head].with((p, s.port));
                        words.push(w);
                    }
                }
            }
        }
        head += 1;
    }

    let mut labels = Vec::with_capacity(order.len());
    let mut slots = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        let di = inside(words[i].len());
        labels.push(if di { label(v) } else { None });
        let mut row = vec![None; sig.arity()];
        for p in sig.ports().ports() {
            let Some(s) = slot(v, p) else { continue };
            let Some(&j) = index.get(&s.vertex) else {
                continue;
            };
            let dj = inside(words[j].len());
            if di || dj {
                row[p.index()] = Some(Slot {
                    vertex: j,
                    port: s.port,
                    label: if di && dj { s.label } else { None },
                });
            }
        }
        slots.push(row);
    }
    Canon {
        gcg: Gcg {
            sig: sig.clone(),
            words,
            labels,
            slots,
        },
        order,
    }
}

impl Gcg {
    /// The canonical form of a connected pointed graph, plus the original name of each vertex.
    pub fn canonical_form(p: &PointedGraph) -> Result<(Gcg, Vec<VertexName>)> {
        let g = p.graph();
        let canon = build(
            p.signature(),
            p.pointer(),
            None,
            |v, port| g.slot(v, port),
            |v| g.label(v),
        );
        if canon.order.len() != g.len() {
            return Err(Error::Disconnected);
        }
        let names = canon.order.iter().map(|&v| g.name(v).clone()).collect();
        Ok((canon.gcg, names))
    }

    pub fn from_pointed(p: &PointedGraph) -> Result<Gcg> {
        Ok(Self::canonical_form(p)?.0)
    }

    /// The one-vertex graph with an optional label.
    pub fn singleton(sig: Arc<Signature>, label: Option<State>) -> Gcg {
        let arity = sig.arity();
        Gcg {
            sig,
            words: vec![PathWord::empty()],
            labels: vec![label],
            slots: vec![vec![None; arity]],
        }
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self, v: usize) -> &PathWord {
        &self.words[v]
    }

    pub fn words(&self) -> &[PathWord] {
        &self.words
    }

    pub fn label(&self, v: usize) -> Option<State> {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Option<State>] {
        &self.labels
    }

    pub fn slot(&self, v: usize, port: Port) -> Option<Slot> {
        self.slots[v][port.index()]
    }

    /// Distance from the pointer.
    pub fn dist(&self, v: usize) -> usize {
        self.words[v].len()
    }

    /// Largest distance from the pointer.
    pub fn eccentricity(&self) -> usize {
        self.words.last().map_or(0, PathWord::len)
    }

    /// Size of a vertex: its distance from the pointer, but at least 1.
    pub fn size(&self, v: usize) -> usize {
        self.dist(v).max(1)
    }

    /// Index of the vertex named `w`, if `w` is one of the minimal words.
    pub fn index_of(&self, w: &PathWord) -> Option<usize> {
        self.words.binary_search(w).ok()
    }

    /// Follows `w` starting at `from`; `None` if some step is not an edge.
    pub fn walk(&self, from: usize, w: &PathWord) -> Option<usize> {
        let mut x = from;
        for &(a, b) in w.letters() {
            let s = self.slot(x, a)?;
            if s.port != b {
                return None;
            }
            x = s.vertex;
        }
        Some(x)
    }

    /// The vertex reached from the pointer by `w`.
    pub fn resolve(&self, w: &PathWord) -> Option<usize> {
        self.walk(0, w)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (u, row) in self.slots.iter().enumerate() {
            for (i, s) in row.iter().enumerate() {
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

    pub(crate) fn shifted(&self, u: usize, limit: Option<usize>) -> Canon {
        build(
            &self.sig,
            u,
            limit,
            |v, p| self.slot(v, p),
            |v| self.label(v),
        )
    }

    /// The disk of radius `r` around the pointer. Names are unchanged since
    /// shortest paths from the pointer stay inside the disk.
    pub fn disk(&self, r: usize) -> Gcg {
        self.shifted(0, Some(r)).gcg
    }

    /// The disk of radius `r` around `u`, with `map[i]` the index in `self`
    /// of disk vertex `i`. Exact as long as `self` contains the full disk
    /// around `u`, e.g. when `dist(u) + r <= R` for a radius-`R` disk.
    pub fn disk_at(&self, u: usize, r: usize) -> (Gcg, Vec<usize>) {
        let c = self.shifted(u, Some(r));
        (c.gcg, c.order)
    }

    /// The same graph pointed at `u`.
    pub fn shift(&self, u: usize) -> Gcg {
        self.shifted(u, None).gcg
    }

    /// `shift(u)` together with the new index of every old vertex.
    pub fn shift_with_map(&self, u: usize) -> (Gcg, Vec<usize>) {
        let c = self.shifted(u, None);
        let mut map = vec![0; self.len()];
        for (i, &v) in c.order.iter().enumerate() {
            map[v] = i;
        }
        (c.gcg, map)
    }

    /// Index of the vertex named `w`, or an error naming the word.
    pub fn vertex(&self, w: &PathWord) -> Result<usize> {
        self.index_of(w)
            .ok_or_else(|| Error::UnknownVertex(w.display(self.sig.ports()).to_string()))
    }

    /// `u.v`: the vertex reached by walking `v` from `u`.
    pub fn concat(&self, u: usize, v: &PathWord) -> Result<usize> {
        self.walk(u, v).ok_or_else(|| {
            Error::UnknownVertex(format!(
                "{} from {}",
                v.display(self.sig.ports()),
                self.words[u].display(self.sig.ports())
            ))
        })
    }

    /// `ū`: the name of the old pointer in `shift(u)`.
    pub fn inverse(&self, u: usize) -> PathWord {
        let (shifted, map) = self.shift_with_map(u);
        shifted.word(map[0]).clone()
    }

    /// Re-expresses a graph named relative to `u` in terms of the pointer:
    /// each atom `(w, z)` becomes `(u.w, z)`.
    pub fn prefix_graph(&self, u: usize, g: &NamedGraph) -> Result<NamedGraph> {
        let ports = self.sig.ports();
        g.rename(|name| {
            let atoms = name
                .atoms()
                .iter()
                .map(|a| {
                    let target = a
                        .as_word()
                        .and_then(|w| self.walk(u, w))
                        .ok_or_else(|| Error::UnresolvableAtom(a.display(ports).to_string()))?;
                    Ok(Atom::word(self.words[target].clone(), a.suffix))
                })
                .collect::<Result<Vec<_>>>()?;
            VertexName::new(atoms)
        })
    }

    /// Whether `self` equals its own disk of radius `r`.
    pub fn is_disk(&self, r: usize) -> bool {
        self.disk(r) == *self
    }

    /// The graph with labels erased.
    pub fn unlabeled(&self) -> Gcg {
        let sig = self.sig.without_states();
        Gcg {
            sig,
            words: self.words.clone(),
            labels: vec![None; self.len()],
            slots: self
                .slots
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| s.map(|s| Slot { label: None, ..s }))
                        .collect()
                })
                .collect(),
        }
    }

    /// Pointed graph whose vertex names are the atoms `(w, ε)`.
    pub fn to_pointed(&self) -> PointedGraph {
        let mut g = NamedGraph::new(self.sig.clone());
        for (w, l) in self.words.iter().zip(&self.labels) {
            g.add_vertex(VertexName::word(w.clone()), *l)
                .expect("minimal words are distinct");
        }
        for e in self.edges() {
            g.add_edge(e.a, e.b, e.label)
                .expect("canonical slots are consistent");
        }
        PointedGraph::from_index(g, 0)
    }
}

impl Ord for Gcg {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.slots.cmp(&other.slots))
            .then_with(|| self.labels.cmp(&other.labels))
    }
}

impl PartialOrd for Gcg {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl PointedGraph {
    /// Pointed isomorphism test via canonical forms.
    pub fn isomorphic(&self, other: &PointedGraph) -> Result<bool> {
        Ok(Gcg::from_pointed(self)? == Gcg::from_pointed(other)?)
    }
}
