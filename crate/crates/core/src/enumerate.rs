//! Exhaustive generation of small generalized Cayley graphs.
//!
//! Graphs are grown in canonical order: vertices are completed one at a time
//! in breadth-first order and each free port is either left free, joined to a
//! fresh vertex, or joined to a free port of a vertex not yet completed. Fresh
//! vertices are appended, so the construction order is the canonical order and
//! every graph is produced exactly once.

use std::collections::HashSet;
use std::sync::Arc;

use crate::alphabet::{Port, Signature, State};
use crate::canonical::Gcg;
use crate::error::{Error, Result};
use crate::portgraph::Slot;

/// Which graphs to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    /// Every disk of radius `n`, i.e. every `X` with `disk(X, n) = X`.
    Radius(usize),
    /// Every connected graph with at most `k` vertices.
    Vertices(usize),
}

struct Search<'a> {
    sig: &'a Arc<Signature>,
    policy: Policy,
    limit: usize,
    dist: Vec<usize>,
    labels: Vec<Option<State>>,
    slots: Vec<Vec<Option<Slot>>>,
    out: HashSet<Gcg>,
}

impl Search<'_> {
    fn processable(&self, v: usize) -> bool {
        match self.policy {
            Policy::Radius(n) => self.dist[v] <= n,
            Policy::Vertices(_) => true,
        }
    }

    fn may_grow(&self) -> bool {
        match self.policy {
            Policy::Radius(_) => true,
            Policy::Vertices(k) => self.dist.len() < k,
        }
    }

    fn edge_labels(&self, u: usize, v: usize) -> Vec<Option<State>> {
        if self.processable(u) && self.processable(v) {
            options(self.sig.delta().len())
        } else {
            vec![None]
        }
    }

    fn emit(&mut self) -> Result<()> {
        let sig = self.sig.clone();
        let (labels, slots) = (&self.labels, &self.slots);
        let canon =
            crate::canonical::build(&sig, 0, None, |v, p| slots[v][p.index()], |v| labels[v]);
        self.out.insert(canon.gcg);
        if self.out.len() > self.limit {
            let radius = match self.policy {
                Policy::Radius(n) => n,
                Policy::Vertices(k) => k,
            };
            return Err(Error::Intractable {
                radius,
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// Labels and completes vertex `v`, then moves on.
    fn run(&mut self, v: usize) -> Result<()> {
        if v == self.dist.len() || !self.processable(v) {
            return self.emit();
        }
        for label in options(self.sig.sigma().len()) {
            self.labels[v] = label;
            self.ports(v, 0)?;
        }
        self.labels[v] = None;
        Ok(())
    }

    fn ports(&mut self, v: usize, p: usize) -> Result<()> {
        let arity = self.sig.arity();
        if p == arity {
            return self.run(v + 1);
        }
        if self.slots[v][p].is_some() {
            return self.ports(v, p + 1);
        }
        let port = Port(p as u8);

        // leave free
        self.ports(v, p + 1)?;

        // fresh vertex, entered through any port
        if self.may_grow() {
            let w = self.dist.len();
            self.dist.push(self.dist[v] + 1);
            self.labels.push(None);
            self.slots.push(vec![None; arity]);
            for q in 0..arity {
                for label in self.edge_labels(v, w) {
                    self.join(v, port, w, Port(q as u8), label);
                    self.ports(v, p + 1)?;
                    self.unjoin(v, port, w, Port(q as u8));
                }
            }
            self.dist.pop();
            self.labels.pop();
            self.slots.pop();
        }

        // an existing, not yet completed vertex (or a later port of `v` itself)
        for w in v..self.dist.len() {
            for q in 0..arity {
                if (w == v && q <= p) || self.slots[w][q].is_some() {
                    continue;
                }
                for label in self.edge_labels(v, w) {
                    self.join(v, port, w, Port(q as u8), label);
                    self.ports(v, p + 1)?;
                    self.unjoin(v, port, w, Port(q as u8));
                }
            }
        }
        Ok(())
    }

    fn join(&mut self, v: usize, p: Port, w: usize, q: Port, label: Option<State>) {
        self.slots[v][p.index()] = Some(Slot {
            vertex: w,
            port: q,
            label,
        });
        self.slots[w][q.index()] = Some(Slot {
            vertex: v,
            port: p,
            label,
        });
    }

    fn unjoin(&mut self, v: usize, p: Port, w: usize, q: Port) {
        self.slots[v][p.index()] = None;
        self.slots[w][q.index()] = None;
    }
}

fn options(n: usize) -> Vec<Option<State>> {
    std::iter::once(None)
        .chain((0..n).map(|i| Some(State(i as u8))))
        .collect()
}

/// All graphs selected by `policy`, sorted, failing once more than `limit`
/// have been produced.
pub fn enumerate(sig: &Arc<Signature>, policy: Policy, limit: usize) -> Result<Vec<Gcg>> {
    if let Policy::Vertices(0) = policy {
        return Ok(Vec::new());
    }
    let mut search = Search {
        sig,
        policy,
        limit,
        dist: vec![0],
        labels: vec![None],
        slots: vec![vec![None; sig.arity()]],
        out: HashSet::new(),
    };
    search.run(0)?;
    let mut out: Vec<Gcg> = search.out.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Every disk of radius `n`, in canonical order.
pub fn enumerate_disks(sig: &Arc<Signature>, n: usize, limit: usize) -> Result<Vec<Gcg>> {
    enumerate(sig, Policy::Radius(n), limit)
}
