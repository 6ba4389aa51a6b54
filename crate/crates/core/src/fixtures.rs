//! Generators for test configurations: cycles, grids, random graphs and trees,
//! and random renamings.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Port, Signature, State};
use crate::canonical::Gcg;
use crate::error::{Error, Result};
use crate::name::VertexName;
use crate::pathlang::{grid, petersen};
use crate::portgraph::{NamedGraph, PointedGraph};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn named(sig: &Arc<Signature>, n: usize) -> Result<NamedGraph> {
    let mut g = NamedGraph::new(sig.clone());
    for i in 0..n {
        g.add_vertex(VertexName::id(format!("v{i}")), None)?;
    }
    Ok(g)
}

/// `n` vertices joined `v_i:a - v_{i+1}:b`, closed into a cycle when `wrap`.
pub fn chain(sig: &Arc<Signature>, n: usize, wrap: bool) -> Result<PointedGraph> {
    if n == 0 || sig.arity() < 2 {
        return Err(Error::Parse("a chain needs a vertex and two ports".into()));
    }
    let mut g = named(sig, n)?;
    let last = if wrap { n } else { n - 1 };
    for i in 0..last {
        g.add_edge((i, Port(0)), ((i + 1) % n, Port(1)), None)?;
    }
    Ok(PointedGraph::from_index(g, 0))
}

pub fn cycle(n: usize) -> Result<Gcg> {
    Gcg::from_pointed(&chain(&Signature::unlabeled("ab"), n, true)?)
}

pub fn path(n: usize) -> Result<Gcg> {
    Gcg::from_pointed(&chain(&Signature::unlabeled("ab"), n, false)?)
}

fn random_label<R: Rng>(rng: &mut R, states: usize) -> Option<State> {
    (states > 0 && rng.gen_bool(0.7)).then(|| State(rng.gen_range(0..states) as u8))
}

fn free_slots(g: &NamedGraph) -> Vec<(usize, Port)> {
    let ports: Vec<Port> = g.signature().ports().ports().collect();
    (0..g.len())
        .flat_map(|v| ports.iter().map(move |&p| (v, p)))
        .filter(|&(v, p)| g.slot(v, p).is_none())
        .collect()
}

/// A random tree on at most `n` vertices: each new vertex hangs off a random
/// free slot. Stops early if no slot is left.
pub fn random_tree<R: Rng>(rng: &mut R, sig: &Arc<Signature>, n: usize) -> Result<PointedGraph> {
    let mut g = NamedGraph::new(sig.clone());
    let nv = sig.sigma().len();
    let ne = sig.delta().len();
    let label = random_label(rng, nv);
    g.add_vertex(VertexName::id("v0"), label)?;
    let ports: Vec<Port> = sig.ports().ports().collect();
    for i in 1..n {
        let free = free_slots(&g);
        let Some(&(v, p)) = free.choose(rng) else {
            break;
        };
        let label = random_label(rng, nv);
        let w = g.add_vertex(VertexName::id(format!("v{i}")), label)?;
        let q = *ports.choose(rng).expect("signatures have ports");
        let el = random_label(rng, ne);
        g.add_edge((v, p), (w, q), el)?;
    }
    let pointer = rng.gen_range(0..g.len());
    Ok(PointedGraph::from_index(g, pointer))
}

/// A random tree plus up to `extra` edges between random free slots,
/// self-loops included.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    sig: &Arc<Signature>,
    n: usize,
    extra: usize,
) -> Result<PointedGraph> {
    let tree = random_tree(rng, sig, n)?;
    let pointer = tree.pointer();
    let mut g = tree.graph().clone();
    let ne = sig.delta().len();
    for _ in 0..extra {
        let free = free_slots(&g);
        if free.len() < 2 {
            break;
        }
        let picks: Vec<_> = free.choose_multiple(rng, 2).copied().collect();
        let el = random_label(rng, ne);
        g.add_edge(picks[0], picks[1], el)?;
    }
    Ok(PointedGraph::from_index(g, pointer))
}

/// The same graph with every vertex renamed to a fresh random identifier.
pub fn random_renaming<R: Rng>(rng: &mut R, p: &PointedGraph) -> Result<PointedGraph> {
    let mut ids: Vec<usize> = (0..p.graph().len()).collect();
    ids.shuffle(rng);
    let salt: u32 = rng.gen();
    let map: HashMap<VertexName, VertexName> = p
        .graph()
        .names()
        .iter()
        .zip(ids)
        .map(|(n, i)| (n.clone(), VertexName::id(format!("x{salt:08x}_{i}"))))
        .collect();
    p.apply_isomorphism(&map)
}

/// Named configurations over `abcd` used across tests and the command line.
pub fn standard() -> Result<Vec<(String, Gcg)>> {
    let mut out = Vec::new();
    for (n, m) in [(1, 1), (2, 3), (3, 3), (4, 2)] {
        out.push((format!("grid_{n}x{m}"), grid(n, m, false)?));
    }
    for (n, m) in [(2, 2), (3, 3), (3, 4)] {
        out.push((format!("torus_{n}x{m}"), grid(n, m, true)?));
    }
    let sig = Signature::unlabeled("abcd");
    let mut r = rng(7);
    for i in 0..4 {
        let t = random_tree(&mut r, &sig, 6 + 2 * i)?;
        out.push((format!("tree_{i}"), Gcg::from_pointed(&t)?));
        let g = random_graph(&mut r, &sig, 5 + 2 * i, 3)?;
        out.push((format!("random_{i}"), Gcg::from_pointed(&g)?));
    }
    Ok(out)
}

/// Named configurations over `ab`: cycles and paths.
pub fn standard_ab() -> Result<Vec<(String, Gcg)>> {
    let mut out = Vec::new();
    for n in [1, 2, 3, 5, 8] {
        out.push((format!("cycle_{n}"), cycle(n)?));
        out.push((format!("path_{n}"), path(n)?));
    }
    Ok(out)
}

/// The Petersen graph over `abc`.
pub fn standard_abc() -> Vec<(String, Gcg)> {
    vec![("petersen".to_string(), petersen())]
}
