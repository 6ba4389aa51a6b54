#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use gcg::{Gcg, NamedGraph, PointedGraph, Port, Signature, VertexName};

/// Every partial matching of the port slots of `k ≤ max_vertices` vertices,
/// kept when connected and equal to its own radius-`n` disk.
pub fn brute_force(sig: &Arc<Signature>, n: Option<usize>, max_vertices: usize) -> HashSet<Gcg> {
    let arity = sig.arity();
    let mut out = HashSet::new();
    for k in 1..=max_vertices {
        let mut partner: Vec<Option<usize>> = vec![None; k * arity];
        matchings(0, &mut partner, &mut |partner| {
            let mut g = NamedGraph::new(sig.clone());
            for v in 0..k {
                g.add_vertex(VertexName::id(format!("v{v}")), None).unwrap();
            }
            for (s, t) in partner.iter().enumerate() {
                match *t {
                    Some(t) if s < t => g
                        .add_edge(
                            (s / arity, Port((s % arity) as u8)),
                            (t / arity, Port((t % arity) as u8)),
                            None,
                        )
                        .unwrap(),
                    _ => {}
                }
            }
            if let Ok(x) = Gcg::from_pointed(&PointedGraph::from_index(g, 0)) {
                if n.is_none_or(|n| x.is_disk(n)) {
                    out.insert(x);
                }
            }
        });
    }
    out
}

fn matchings(i: usize, partner: &mut Vec<Option<usize>>, visit: &mut impl FnMut(&[Option<usize>])) {
    if i == partner.len() {
        visit(partner);
        return;
    }
    if partner[i].is_some() {
        return matchings(i + 1, partner, visit);
    }
    matchings(i + 1, partner, visit);
    for j in i + 1..partner.len() {
        if partner[j].is_none() {
            partner[i] = Some(j);
            partner[j] = Some(i);
            matchings(i + 1, partner, visit);
            partner[i] = None;
            partner[j] = None;
        }
    }
}
