use std::sync::Arc;

use super::LocalRule;
use crate::alphabet::{Port, Signature, State};
use crate::canonical::Gcg;
use crate::error::{Error, Result};
use crate::name::{Atom, Suffix, VertexName};
use crate::portgraph::NamedGraph;
use crate::word::PathWord;

pub const BUILTIN_NAMES: [&str; 5] = ["identity", "inflate", "turtle", "sprout", "xor_state"];

/// Looks up a builtin rule by name for the given signature.
pub fn builtin_rule(name: &str, sig: &Arc<Signature>) -> Result<LocalRule> {
    match name {
        "identity" => Ok(identity(sig, 0)),
        "inflate" => inflate(sig),
        "turtle" => turtle(sig),
        "sprout" => Ok(sprout(sig)),
        "xor_state" => xor_state(sig),
        _ => Err(Error::rule(name, "unknown rule")),
    }
}

/// Every builtin rule that accepts `sig`.
pub fn builtin_rules(sig: &Arc<Signature>) -> Vec<LocalRule> {
    BUILTIN_NAMES
        .iter()
        .filter_map(|n| builtin_rule(n, sig).ok())
        .collect()
}

fn atom(w: &PathWord, z: u16) -> Atom {
    Atom::word(w.clone(), Suffix(z))
}

/// Finds or adds the vertex named by the single atom `a`.
fn vertex(g: &mut NamedGraph, a: Atom, label: Option<State>) -> Result<usize> {
    match g.vertex_by_atom(&a) {
        Some(v) => Ok(v),
        None => g.add_vertex(VertexName::single(a), label),
    }
}

/// The pointer with its label, every neighbour unlabeled, and the edges at
/// the pointer with ports passed through `port`.
fn star(d: &Gcg, label: Option<State>, port: impl Fn(Port) -> Port) -> Result<NamedGraph> {
    let mut g = NamedGraph::new(d.signature().clone());
    let e = vertex(&mut g, Atom::origin(), label)?;
    for p in d.signature().ports().ports() {
        if let Some(s) = d.slot(0, p) {
            let w = vertex(&mut g, atom(d.word(s.vertex), 0), None)?;
            g.add_edge((e, port(p)), (w, port(s.port)), s.label)?;
        }
    }
    Ok(g)
}

/// Reproduces the disk, every vertex `w` named `(w, ε)`. With `r = 0` edge
/// labels are lost, since no radius-0 disk sees both ends of an edge labelled.
pub fn identity(sig: &Arc<Signature>, r: usize) -> LocalRule {
    let name = if r == 0 {
        "identity".to_string()
    } else {
        format!("identity{r}")
    };
    LocalRule::new(name, sig.clone(), r, 0, 1, |d: &Gcg| {
        Ok(d.to_pointed().graph().clone())
    })
}

/// Children of a vertex: south-west `ε`, south-east `1`, north-west `2`,
/// north-east `3`. `SIDES[p]` lists the two children facing port `p`.
const SIDES: [[u16; 2]; 4] = [[1, 3], [0, 2], [2, 3], [0, 1]];

/// Splits every vertex into a 2×2 block. Ports `a,b,c,d` are east, west,
/// north, south; an edge `{v:p, w:q}` becomes two edges between the children
/// of `v` facing `p` and those of `w` facing `q`. On grids `|R(u)| ≤ 2|u|`;
/// an edge joining `a` to `c` costs three steps, hence the bound `3`.
pub fn inflate(sig: &Arc<Signature>) -> Result<LocalRule> {
    if sig.arity() != 4 {
        return Err(Error::rule("inflate", "needs exactly four ports"));
    }
    Ok(LocalRule::new(
        "inflate",
        sig.clone(),
        0,
        3,
        3,
        |d: &Gcg| {
            let mut g = NamedGraph::new(d.signature().clone());
            let eps = PathWord::empty();
            let own: Vec<usize> = (0..4)
                .map(|z| vertex(&mut g, atom(&eps, z), d.label(0)))
                .collect::<Result<_>>()?;
            let (a, b, c, dd) = (Port(0), Port(1), Port(2), Port(3));
            g.add_edge((own[0], a), (own[1], b), None)?;
            g.add_edge((own[2], a), (own[3], b), None)?;
            g.add_edge((own[0], c), (own[2], dd), None)?;
            g.add_edge((own[1], c), (own[3], dd), None)?;
            for p in d.signature().ports().ports() {
                let Some(s) = d.slot(0, p) else { continue };
                let w = d.word(s.vertex).clone();
                for i in 0..2 {
                    let x = own[SIDES[p.index()][i] as usize];
                    let y = vertex(&mut g, atom(&w, SIDES[s.port.index()][i]), None)?;
                    g.add_edge((x, p), (y, s.port), None)?;
                }
            }
            Ok(g)
        },
    ))
}

/// Swaps the first two ports on every edge. On an `ab`-cycle this is the
/// mirror image, which is the same graph: `F(X) = X` while `R_X(u) = -u`.
pub fn turtle(sig: &Arc<Signature>) -> Result<LocalRule> {
    if sig.arity() < 2 {
        return Err(Error::rule("turtle", "needs at least two ports"));
    }
    let swap = |p: Port| match p.0 {
        0 => Port(1),
        1 => Port(0),
        _ => p,
    };
    Ok(LocalRule::new(
        "turtle",
        sig.clone(),
        0,
        0,
        1,
        move |d: &Gcg| star(d, d.label(0), swap),
    ))
}

/// Attaches a fresh leaf `(ε, p+1)` to every free port `p`, through its own port `p`.
pub fn sprout(sig: &Arc<Signature>) -> LocalRule {
    let arity = sig.arity() as u16;
    LocalRule::new("sprout", sig.clone(), 0, arity, 1, |d: &Gcg| {
        let mut g = star(d, d.label(0), |p| p)?;
        let e = 0;
        let eps = PathWord::empty();
        for p in d.signature().ports().ports() {
            if d.slot(0, p).is_none() {
                let leaf = vertex(&mut g, atom(&eps, p.0 as u16 + 1), None)?;
                g.add_edge((e, p), (leaf, p), None)?;
            }
        }
        Ok(g)
    })
}

/// Each vertex takes the XOR of the states seen through its occupied ports;
/// an undefined state counts as `0`.
pub fn xor_state(sig: &Arc<Signature>) -> Result<LocalRule> {
    let (Some(zero), Some(one)) = (sig.vertex_state("0"), sig.vertex_state("1")) else {
        return Err(Error::rule(
            "xor_state",
            "needs vertex states \"0\" and \"1\"",
        ));
    };
    Ok(LocalRule::new(
        "xor_state",
        sig.clone(),
        1,
        0,
        1,
        move |d: &Gcg| {
            let mut bit = false;
            for p in d.signature().ports().ports() {
                if let Some(s) = d.slot(0, p) {
                    bit ^= d.label(s.vertex) == Some(one);
                }
            }
            star(d, Some(if bit { one } else { zero }), |p| p)
        },
    ))
}
