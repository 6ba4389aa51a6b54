use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;

use gcg::fixtures::{random_graph, random_renaming, random_tree, rng};
use gcg::metric::distance;
use gcg::{Gcg, NamedGraph, PointedGraph, Signature};

fn sig_for(k: usize) -> Arc<Signature> {
    Signature::labeled(&"abcd"[..k], &["s0", "s1"], &["e0", "e1"])
}

fn graph(seed: u64, ports: usize, n: usize) -> PointedGraph {
    random_graph(&mut rng(seed), &sig_for(ports), n, 3).unwrap()
}

/// The subgraph induced by the vertices whose bit in `mask` is set.
fn induced(g: &NamedGraph, mask: u64) -> NamedGraph {
    let keep = |v: usize| mask >> (v % 64) & 1 == 1;
    let mut h = NamedGraph::new(g.signature().clone());
    let mut map = vec![None; g.len()];
    for v in (0..g.len()).filter(|&v| keep(v)) {
        map[v] = Some(h.add_vertex(g.name(v).clone(), g.label(v)).unwrap());
    }
    for e in g.edges() {
        if let (Some(a), Some(b)) = (map[e.a.0], map[e.b.0]) {
            h.add_edge((a, e.a.1), (b, e.b.1), e.label).unwrap();
        }
    }
    h
}

/// Like `induced`, but vertex `flip` loses its label.
fn induced_unlabeled_at(g: &NamedGraph, mask: u64, flip: usize) -> NamedGraph {
    let mut h = induced(g, mask);
    if let Some(v) = h.find(g.name(flip % g.len())) {
        h.set_label(v, None);
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_names(seed in any::<u64>(), ports in 1usize..=4, n in 1usize..=12) {
        let g = graph(seed, ports, n);
        let h = random_renaming(&mut rng(seed ^ 0x5eed), &g).unwrap();
        prop_assert_eq!(Gcg::from_pointed(&g).unwrap(), Gcg::from_pointed(&h).unwrap());
        prop_assert!(g.isomorphic(&h).unwrap());
    }

    #[test]
    fn consistency_is_symmetric(seed in any::<u64>(), n in 1usize..=10, m1 in any::<u64>(), m2 in any::<u64>(), flip in any::<usize>()) {
        let g = graph(seed, 3, n);
        let a = induced(g.graph(), m1);
        let b = induced_unlabeled_at(g.graph(), m2, flip);
        let (ab, ba) = (a.consistency(&b), b.consistency(&a));
        prop_assert_eq!(ab.is_consistent(), ba.is_consistent());
        prop_assert_eq!(ab.is_nontrivially_consistent(), ba.is_nontrivially_consistent());
        prop_assert_eq!(ab.clause(), ba.clause());
    }

    #[test]
    fn union_is_commutative_and_associative(seed in any::<u64>(), n in 1usize..=10, m in any::<[u64; 3]>()) {
        let g = graph(seed, 4, n);
        let [a, b, c] = m.map(|mask| induced(g.graph(), mask));
        prop_assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());
        let left = a.union(&b).unwrap().union(&c).unwrap();
        let right = a.union(&b.union(&c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let all = induced(g.graph(), m[0] | m[1] | m[2]);
        prop_assert_eq!(all.len(), left.len());
    }

    #[test]
    fn distance_is_an_ultrametric(seeds in any::<[u64; 3]>(), n in 1usize..=8) {
        let sig = Signature::unlabeled("ab");
        let [x, y, z] = seeds.map(|s| Gcg::from_pointed(&random_tree(&mut rng(s % 16), &sig, n).unwrap()).unwrap());
        let (xy, yz, xz) = (distance(&x, &y).unwrap(), distance(&y, &z).unwrap(), distance(&x, &z).unwrap());
        prop_assert!(xz <= xy.max(yz));
        prop_assert_eq!(xy, distance(&y, &x).unwrap());
        prop_assert_eq!(distance(&x, &x).unwrap(), gcg::metric::Distance::Zero);
    }

    #[test]
    fn shift_laws(seed in any::<u64>(), n in 1usize..=12, a in any::<usize>(), b in any::<usize>()) {
        let x = Gcg::from_pointed(&graph(seed, 4, n)).unwrap();
        let u = a % x.len();
        let (xu, map) = x.shift_with_map(u);
        // shifting back along the inverse returns the original
        let back = xu.vertex(&x.inverse(u)).unwrap();
        prop_assert_eq!(xu.shift(back), x.clone());
        // (X_u)_v = X_{u.v}
        let v = b % xu.len();
        let uv = x.concat(u, xu.word(v)).unwrap();
        prop_assert_eq!(xu.shift(v), x.shift(uv));
        prop_assert_eq!(map[u], 0);
    }

    #[test]
    fn inverse_of_inverse_on_trees(seed in any::<u64>(), n in 1usize..=10, a in any::<usize>()) {
        let t = Gcg::from_pointed(&random_tree(&mut rng(seed), &sig_for(3), n).unwrap()).unwrap();
        let u = a % t.len();
        let xu = t.shift(u);
        let ubar = xu.vertex(&t.inverse(u)).unwrap();
        prop_assert_eq!(xu.inverse(ubar), t.word(u).clone());
    }
}

#[test]
fn renamings_are_distinct_from_originals() {
    let g = graph(3, 4, 10);
    let names: HashSet<_> = g.graph().names().iter().cloned().collect();
    let h = random_renaming(&mut rng(4), &g).unwrap();
    assert!(h.graph().names().iter().all(|n| !names.contains(n)));
}
