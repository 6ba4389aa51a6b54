use gcg::enumerate::{enumerate, Policy};
use gcg::fixtures::{cycle, path};
use gcg::metric::{distance, min_differing_radius, Distance};
use gcg::pathlang::{
    cayley_from_group, check_axioms, graph_from_structure, grid, petersen, FiniteStructure,
    GroupTable, PathStructure,
};
use gcg::{Gcg, GraphDoc, PathWord, Signature};

fn vertex_transitive(g: &Gcg) -> bool {
    (0..g.len()).all(|u| g.shift(u) == *g)
}

/// Length of a shortest cycle, by BFS from every vertex.
fn girth(g: &Gcg) -> usize {
    let mut best = usize::MAX;
    for s in 0..g.len() {
        let mut dist = vec![usize::MAX; g.len()];
        let mut parent = vec![usize::MAX; g.len()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for p in g.signature().ports().ports() {
                let Some(sl) = g.slot(v, p) else { continue };
                let w = sl.vertex;
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    best
}

#[test]
fn petersen_shape() {
    let p = petersen();
    assert_eq!(p.len(), 10);
    assert_eq!(p.edge_count(), 15);
    assert_eq!(girth(&p), 5);
    assert_eq!(p.eccentricity(), 2);
    assert!(check_axioms(&p, 6).passes());
}

#[test]
fn small_cayley_graphs_are_vertex_transitive() {
    let z4 = GroupTable {
        elements: ["0", "1", "2", "3"].map(String::from).to_vec(),
        table: (0..4)
            .map(|i| (0..4).map(|j| ((i + j) % 4).to_string()).collect())
            .collect(),
        generators: vec!["1".into()],
    };
    let g = z4.to_gcg().unwrap();
    assert_eq!(g, cycle(4).unwrap().unlabeled().pipe_ports("aA"));
    assert!(vertex_transitive(&g));

    let k4: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    let g = cayley_from_group(4, &k4, &[1, 2]).unwrap();
    assert_eq!((g.len(), g.edge_count()), (4, 8));
    assert!(vertex_transitive(&g));

    let perms = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let s3: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| idx([p[q[0]], p[q[1]], p[q[2]]]))
                .collect()
        })
        .collect();
    let g = cayley_from_group(6, &s3, &[1, 3]).unwrap();
    assert_eq!(g.len(), 6);
    assert!(vertex_transitive(&g));
}

trait PipePorts {
    fn pipe_ports(self, ports: &str) -> Gcg;
}

impl PipePorts for Gcg {
    /// The same graph with its ports renamed, in order, to `ports`.
    fn pipe_ports(self, ports: &str) -> Gcg {
        let mut doc = GraphDoc::from_gcg(&self);
        let from: Vec<char> = self.signature().ports().symbols().to_vec();
        let to: Vec<char> = ports.chars().collect();
        let swap = |s: &mut String| {
            let c = s.chars().next().unwrap();
            *s = to[from.iter().position(|&f| f == c).unwrap()].to_string();
        };
        doc.ports = to.iter().map(|c| c.to_string()).collect();
        let rename_word = |n: &mut Vec<(String, String)>| {
            for (w, _) in n.iter_mut() {
                *w = w
                    .chars()
                    .map(|c| from.iter().position(|&f| f == c).map_or(c, |i| to[i]))
                    .collect();
            }
        };
        for v in &mut doc.vertices {
            rename_word(&mut v.name);
        }
        for e in &mut doc.edges {
            rename_word(&mut e.a.0);
            rename_word(&mut e.b.0);
            swap(&mut e.a.1);
            swap(&mut e.b.1);
        }
        if let Some(p) = &mut doc.pointer {
            rename_word(p);
        }
        doc.to_gcg().unwrap()
    }
}

#[test]
fn grids_and_tori() {
    assert_eq!(grid(3, 4, false).unwrap().len(), 12);
    assert_eq!(grid(3, 4, false).unwrap().edge_count(), 2 * 4 + 3 * 3);
    let t = grid(3, 4, true).unwrap();
    assert_eq!(t.edge_count(), 24);
    assert!(vertex_transitive(&t));
    assert!(!vertex_transitive(&grid(3, 3, false).unwrap()));
}

#[test]
fn structure_round_trip_on_three_ports() {
    let sig = Signature::unlabeled("abc");
    let all = enumerate(&sig, Policy::Vertices(3), 1_000_000).unwrap();
    assert!(!all.is_empty());
    for x in &all {
        assert_eq!(&graph_from_structure(x, 4).unwrap(), x);
    }
}

#[test]
fn finite_structure_text() {
    // the 2-cycle, every path up to length 2 listed
    let text = "ports: ab\nε\nab == ba\nab.ab == ε\nab.ba == ε\nba.ab == ε\nba.ba == -\n";
    let s = FiniteStructure::parse(text).unwrap();
    assert!(s.equivalent(&word("ab.ab"), &PathWord::empty()));
    let g = graph_from_structure(&s, 2).unwrap();
    assert_eq!(g, cycle(2).unwrap());
}

#[test]
fn broken_structure_is_reported() {
    // ab.ab reaches a vertex whose backtrack ab.ab.ba is not the same as ab
    let s = FiniteStructure::parse("ports: ab\nab.ab == ε\n").unwrap();
    let report = check_axioms(&s, 4);
    assert!(!report.passes());
    assert!(graph_from_structure(&s, 4).is_err());
}

fn word(text: &str) -> PathWord {
    PathWord::parse(text, Signature::unlabeled("ab").ports()).unwrap()
}

#[test]
fn metric_examples() {
    let (c8, c9) = (cycle(8).unwrap(), cycle(9).unwrap());
    // disks of radius r see distance r + 1; the cycles first differ at radius 3
    assert_eq!(min_differing_radius(&c8, &c9).unwrap(), Some(3));
    assert_eq!(distance(&c8, &c9).unwrap(), Distance::Pow(3));
    assert_eq!(distance(&c8, &c8).unwrap(), Distance::Zero);
    assert_eq!(
        distance(&path(1).unwrap(), &cycle(1).unwrap()).unwrap(),
        Distance::Pow(0)
    );
    assert_eq!(Distance::Pow(3).to_string(), "2^-3");
    assert!(distance(&c8, &grid(2, 2, false).unwrap()).is_err());
}

#[test]
fn json_round_trip() {
    for g in [
        petersen(),
        grid(3, 2, true).unwrap(),
        path(4).unwrap().shift(2),
    ] {
        let text = GraphDoc::from_gcg(&g).to_json();
        assert_eq!(GraphDoc::parse(&text).unwrap().to_gcg().unwrap(), g);
    }
    let bad = r#"{"ports":["a","b"],"sigma":[],"delta":[],"vertices":[{"name":[["","id:x"]]}],"edges":[],"pointer":[["","id:y"]]}"#;
    assert!(GraphDoc::parse(bad).and_then(|d| d.to_gcg()).is_err());
}

#[test]
fn stored_fixtures_match_generators() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let all = gcg::fixtures::standard()
        .unwrap()
        .into_iter()
        .chain(gcg::fixtures::standard_ab().unwrap())
        .chain(gcg::fixtures::standard_abc());
    for (name, g) in all {
        let text = std::fs::read_to_string(dir.join(format!("{name}.json"))).unwrap();
        assert_eq!(
            GraphDoc::parse(&text).unwrap().to_gcg().unwrap(),
            g,
            "{name}"
        );
    }
}
