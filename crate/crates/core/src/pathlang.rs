//! Graphs seen as languages of path words with an equivalence relation, the
//! axioms such structures satisfy, and a few standard constructions.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Port, PortAlphabet, Signature, State};
use crate::canonical::Gcg;
use crate::error::{Error, Result};
use crate::name::VertexName;
use crate::portgraph::{NamedGraph, PointedGraph};
use crate::word::{Letter, PathWord};

/// Identifies an equivalence class of words.
pub type ClassId = usize;

/// A language `L` of path words together with the equivalence `≡_L`.
pub trait PathStructure {
    fn signature(&self) -> &Arc<Signature>;

    /// Class of `w`, or `None` if `w ∉ L`. Equal ids mean equivalent words.
    fn class_of(&self, w: &PathWord) -> Option<ClassId>;

    /// Every word of `L` of length at most `n`.
    fn words_up_to(&self, n: usize) -> Vec<PathWord>;

    fn contains(&self, w: &PathWord) -> bool {
        self.class_of(w).is_some()
    }

    fn equivalent(&self, a: &PathWord, b: &PathWord) -> bool {
        matches!((self.class_of(a), self.class_of(b)), (Some(x), Some(y)) if x == y)
    }

    fn vertex_label(&self, _w: &PathWord) -> Option<State> {
        None
    }

    /// Label of the edge left by `w` through `letter`.
    fn edge_label(&self, _w: &PathWord, _letter: Letter) -> Option<State> {
        None
    }
}

fn letters(ports: &PortAlphabet) -> impl Iterator<Item = Letter> + '_ {
    ports
        .ports()
        .flat_map(move |a| ports.ports().map(move |b| (a, b)))
}

/// Every path word of length at most `n` that can be walked from the pointer.
pub fn paths_up_to(x: &Gcg, n: usize) -> Vec<PathWord> {
    let mut out = vec![PathWord::empty()];
    let mut frontier = vec![(PathWord::empty(), 0usize)];
    for _ in 0..n {
        let mut next = Vec::new();
        for (w, v) in &frontier {
            for a in x.signature().ports().ports() {
                if let Some(s) = x.slot(*v, a) {
                    next.push((w.with((a, s.port)), s.vertex));
                }
            }
        }
        out.extend(next.iter().map(|(w, _)| w.clone()));
        frontier = next;
    }
    out.sort();
    out
}

/// The vertex reached by `w`, or `None` if `w ∉ L(X)`.
pub fn resolve(x: &Gcg, w: &PathWord) -> Option<usize> {
    x.resolve(w)
}

impl PathStructure for Gcg {
    fn signature(&self) -> &Arc<Signature> {
        Gcg::signature(self)
    }

    fn class_of(&self, w: &PathWord) -> Option<ClassId> {
        self.resolve(w)
    }

    fn words_up_to(&self, n: usize) -> Vec<PathWord> {
        paths_up_to(self, n)
    }

    fn vertex_label(&self, w: &PathWord) -> Option<State> {
        self.resolve(w).and_then(|v| self.label(v))
    }

    fn edge_label(&self, w: &PathWord, letter: Letter) -> Option<State> {
        let v = self.resolve(w)?;
        self.slot(v, letter.0)
            .filter(|s| s.port == letter.1)
            .and_then(|s| s.label)
    }
}

/// A finite, explicitly listed structure. Words not mentioned in any
/// equivalence are alone in their class.
#[derive(Clone, Debug)]
pub struct FiniteStructure {
    sig: Arc<Signature>,
    classes: BTreeMap<PathWord, ClassId>,
}

impl FiniteStructure {
    pub fn new(
        ports: PortAlphabet,
        words: impl IntoIterator<Item = PathWord>,
        equivalences: impl IntoIterator<Item = (PathWord, PathWord)>,
    ) -> Result<Self> {
        let sig = Signature::new(ports, Vec::new(), Vec::new())?;
        let mut index: BTreeMap<PathWord, usize> = BTreeMap::new();
        let mut parent: Vec<usize> = Vec::new();
        let mut id = |w: PathWord, parent: &mut Vec<usize>| {
            let next = index.len();
            *index.entry(w).or_insert_with(|| {
                parent.push(next);
                next
            })
        };
        for w in words {
            id(w, &mut parent);
        }
        let mut pairs = Vec::new();
        for (a, b) in equivalences {
            let x = id(a, &mut parent);
            let y = id(b, &mut parent);
            pairs.push((x, y));
        }
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for (x, y) in pairs {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent[rx.max(ry)] = rx.min(ry);
        }
        let classes = index
            .into_iter()
            .map(|(w, i)| {
                let c = find(&mut parent, i);
                (w, c)
            })
            .collect();
        Ok(FiniteStructure { sig, classes })
    }

    /// One word per line, or `w1 == w2`; `#` starts a comment; `ε` or `-` is the
    /// empty word. An optional `ports: abc` line fixes the alphabet, otherwise
    /// it is the sorted set of characters used.
    pub fn parse(text: &str) -> Result<Self> {
        let mut declared: Option<String> = None;
        let mut lines = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("ports:") {
                declared = Some(rest.trim().to_string());
            } else {
                lines.push(line.to_string());
            }
        }
        let ports = match declared {
            Some(p) => PortAlphabet::new(p.chars())?,
            None => {
                let used: BTreeSet<char> = lines
                    .iter()
                    .flat_map(|l| l.chars())
                    .filter(|c| !matches!(c, '.' | '=' | '-' | 'ε') && !c.is_whitespace())
                    .collect();
                PortAlphabet::new(used)?
            }
        };
        let word = |s: &str| {
            let s = s.trim();
            if s == "-" {
                Ok(PathWord::empty())
            } else {
                PathWord::parse(s, &ports)
            }
        };
        let mut words = Vec::new();
        let mut eqs = Vec::new();
        for line in &lines {
            match line.split_once("==") {
                Some((a, b)) => eqs.push((word(a)?, word(b)?)),
                None => words.push(word(line)?),
            }
        }
        FiniteStructure::new(ports, words, eqs)
    }
}

impl PathStructure for FiniteStructure {
    fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    fn class_of(&self, w: &PathWord) -> Option<ClassId> {
        self.classes.get(w).copied()
    }

    fn words_up_to(&self, n: usize) -> Vec<PathWord> {
        self.classes
            .keys()
            .filter(|w| w.len() <= n)
            .cloned()
            .collect()
    }
}

/// A violated axiom with the words that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub words: Vec<PathWord>,
    pub detail: String,
}

/// Result of [`check_axioms`]; `None` means the clause holds up to `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub bound: usize,
    /// Prefixes of words are words.
    pub completeness_i: Option<Violation>,
    /// Equivalent words extend the same way to equivalent words.
    pub completeness_ii: Option<Violation>,
    /// `u.ab ∈ L` implies `u.ab.ba ≡ u`.
    pub completeness_iii: Option<Violation>,
    /// Equivalent words never leave by the same port towards different ports.
    pub adjacency: Option<Violation>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.completeness_i.is_none()
            && self.completeness_ii.is_none()
            && self.completeness_iii.is_none()
            && self.adjacency.is_none()
    }

    fn clauses(&self) -> [(&'static str, &Option<Violation>); 4] {
        [
            ("completeness (i)", &self.completeness_i),
            ("completeness (ii)", &self.completeness_ii),
            ("completeness (iii)", &self.completeness_iii),
            ("adjacency", &self.adjacency),
        ]
    }

    pub fn display<'a>(&'a self, ports: &'a PortAlphabet) -> impl fmt::Display + 'a {
        ReportDisplay {
            report: self,
            ports,
        }
    }
}

struct ReportDisplay<'a> {
    report: &'a AxiomReport,
    ports: &'a PortAlphabet,
}

impl fmt::Display for ReportDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bound {}", self.report.bound)?;
        for (name, v) in self.report.clauses() {
            match v {
                None => writeln!(f, "{name}: pass")?,
                Some(v) => {
                    let words: Vec<String> = v
                        .words
                        .iter()
                        .map(|w| w.display(self.ports).to_string())
                        .collect();
                    writeln!(f, "{name}: FAIL {} [{}]", v.detail, words.join(", "))?
                }
            }
        }
        Ok(())
    }
}

/// Checks the completeness and adjacency axioms for every word of length at
/// most `bound`. Clause (ii) compares each word with the shortest member of its
/// class, which covers every pair by transitivity.
pub fn check_axioms<S: PathStructure + ?Sized>(s: &S, bound: usize) -> AxiomReport {
    let ports = s.signature().ports().clone();
    let words = s.words_up_to(bound);
    let mut report = AxiomReport {
        bound,
        completeness_i: None,
        completeness_ii: None,
        completeness_iii: None,
        adjacency: None,
    };
    let violation = |words: Vec<PathWord>, detail: &str| Violation {
        words,
        detail: detail.to_string(),
    };

    for w in &words {
        if !w.is_empty() && !s.contains(&w.prefix(w.len() - 1)) {
            report.completeness_i = Some(violation(
                vec![w.clone(), w.prefix(w.len() - 1)],
                "prefix missing from the language",
            ));
            break;
        }
    }

    let mut by_class: BTreeMap<ClassId, Vec<&PathWord>> = BTreeMap::new();
    for w in &words {
        if let Some(c) = s.class_of(w) {
            by_class.entry(c).or_default().push(w);
        }
    }
    for members in by_class.values_mut() {
        members.sort();
    }

    'ii: for members in by_class.values() {
        let rep = members[0];
        for &m in &members[1..] {
            if m.len() >= bound {
                continue;
            }
            for x in letters(&ports) {
                let (a, b) = (rep.with(x), m.with(x));
                let (ca, cb) = (s.class_of(&a), s.class_of(&b));
                if ca != cb {
                    report.completeness_ii = Some(violation(
                        vec![rep.clone(), m.clone(), a, b],
                        "equivalent words extend differently",
                    ));
                    break 'ii;
                }
            }
        }
    }

    for w in &words {
        if w.len() >= bound {
            continue;
        }
        if let Some((a, b)) = w.last() {
            let back = w.with((b, a));
            let u = w.prefix(w.len() - 1);
            if !s.contains(&back) || !s.equivalent(&back, &u) {
                report.completeness_iii = Some(violation(
                    vec![w.clone(), back],
                    "backtracking does not return",
                ));
                break;
            }
        }
    }

    'adj: for members in by_class.values() {
        let mut seen: HashMap<Port, (Port, &PathWord)> = HashMap::new();
        for &m in members {
            if m.len() >= bound {
                continue;
            }
            for (a, b) in letters(&ports) {
                if !s.contains(&m.with((a, b))) {
                    continue;
                }
                match seen.get(&a) {
                    Some(&(c, other)) if c != b => {
                        report.adjacency = Some(violation(
                            vec![other.with((a, c)), m.with((a, b))],
                            "one port leads to two different ports",
                        ));
                        break 'adj;
                    }
                    Some(_) => {}
                    None => {
                        seen.insert(a, (b, m));
                    }
                }
            }
        }
    }
    report
}

/// The graph whose vertices are the classes of `s`. Every class must be
/// reachable by a word shorter than `bound`.
pub fn graph_from_structure<S: PathStructure + ?Sized>(s: &S, bound: usize) -> Result<Gcg> {
    let sig = s.signature().clone();
    let ports = sig.ports().clone();
    let report = check_axioms(s, bound);
    if !report.passes() {
        return Err(Error::Axiom(
            report.display(&ports).to_string().trim().to_string(),
        ));
    }
    let root = PathWord::empty();
    let Some(c0) = s.class_of(&root) else {
        return Err(Error::Axiom("the empty word is not in the language".into()));
    };
    let mut rep: Vec<PathWord> = vec![root];
    let mut index: HashMap<ClassId, usize> = HashMap::from([(c0, 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut edges = Vec::new();
    while let Some(i) = queue.pop_front() {
        let w = rep[i].clone();
        for x in letters(&ports) {
            let next = w.with(x);
            let Some(c) = s.class_of(&next) else { continue };
            let j = match index.get(&c) {
                Some(&j) => j,
                None => {
                    if next.len() > bound {
                        return Err(Error::Unwitnessed(next.display(&ports).to_string()));
                    }
                    let j = rep.len();
                    index.insert(c, j);
                    rep.push(next.clone());
                    queue.push_back(j);
                    j
                }
            };
            edges.push(((i, x.0), (j, x.1), s.edge_label(&w, x)));
        }
    }
    let mut g = NamedGraph::new(sig);
    for w in &rep {
        g.add_vertex(VertexName::word(w.clone()), s.vertex_label(w))?;
    }
    for (a, b, label) in edges {
        g.add_edge(a, b, label)
            .map_err(|e| Error::Axiom(e.to_string()))?;
    }
    Gcg::from_pointed(&PointedGraph::from_index(g, 0))
}

/// A finite group given by its multiplication table, as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub elements: Vec<String>,
    /// `table[i][j]` is `elements[i] · elements[j]`.
    pub table: Vec<Vec<String>>,
    pub generators: Vec<String>,
}

impl GroupTable {
    pub fn to_gcg(&self) -> Result<Gcg> {
        let find = |s: &String| {
            self.elements
                .iter()
                .position(|e| e == s)
                .ok_or_else(|| Error::NotAGroup(format!("unknown element `{s}`")))
        };
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(find).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let gens = self
            .generators
            .iter()
            .map(find)
            .collect::<Result<Vec<_>>>()?;
        cayley_from_group(self.elements.len(), &table, &gens)
    }
}

/// The Cayley graph of a finite group on `n` elements, pointed at the
/// identity. Generator `k` uses port `a+k` and its inverse the upper-case
/// letter; the edge `{h:x, h·g:X}` joins `h` and `h·g`.
pub fn cayley_from_group(n: usize, table: &[Vec<usize>], generators: &[usize]) -> Result<Gcg> {
    if n == 0 {
        return Err(Error::NotAGroup("no elements".into()));
    }
    if table.len() != n
        || table
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
    {
        return Err(Error::NotAGroup(
            "table is not a closed n×n operation".into(),
        ));
    }
    let mul = |x: usize, y: usize| table[x][y];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                    return Err(Error::NotAGroup(format!(
                        "not associative at ({x},{y},{z})"
                    )));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
        .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
    for x in 0..n {
        if !(0..n).any(|y| mul(x, y) == e && mul(y, x) == e) {
            return Err(Error::NotAGroup(format!("element {x} has no inverse")));
        }
    }
    if generators.is_empty() || generators.len() > 26 {
        return Err(Error::NotAGroup("need between 1 and 26 generators".into()));
    }
    if generators.iter().any(|&g| g >= n) {
        return Err(Error::NotAGroup("generator out of range".into()));
    }
    let mut reached = vec![false; n];
    reached[e] = true;
    let mut queue = VecDeque::from([e]);
    while let Some(h) = queue.pop_front() {
        for &g in generators {
            let x = mul(h, g);
            if !reached[x] {
                reached[x] = true;
                queue.push_back(x);
            }
        }
    }
    let count = reached.iter().filter(|r| **r).count();
    if count != n {
        return Err(Error::NotGenerating {
            reached: count,
            order: n,
        });
    }

    let symbols: Vec<char> = (0..generators.len())
        .flat_map(|k| {
            let c = (b'a' + k as u8) as char;
            [c, c.to_ascii_uppercase()]
        })
        .collect();
    let sig = Signature::new(PortAlphabet::new(symbols)?, Vec::new(), Vec::new())?;
    let mut g = NamedGraph::new(sig);
    for h in 0..n {
        g.add_vertex(VertexName::id(format!("g{h}")), None)?;
    }
    for h in 0..n {
        for (k, &gen) in generators.iter().enumerate() {
            let fwd = Port(2 * k as u8);
            let back = Port(2 * k as u8 + 1);
            g.add_edge((h, fwd), (mul(h, gen), back), None)?;
        }
    }
    Gcg::from_pointed(&PointedGraph::from_index(g, e))
}

/// The Petersen graph over ports `abc`: outer cycle `o_i:a–o_{i+1}:b`, spokes
/// on `c`, inner pentagram `i_i:a–i_{i+2}:b`, pointed at an outer vertex.
pub fn petersen() -> Gcg {
    let sig = Signature::unlabeled("abc");
    let mut g = NamedGraph::new(sig);
    for i in 0..5 {
        g.add_vertex(VertexName::id(format!("o{i}")), None).unwrap();
    }
    for i in 0..5 {
        g.add_vertex(VertexName::id(format!("i{i}")), None).unwrap();
    }
    let (a, b, c) = (Port(0), Port(1), Port(2));
    for i in 0..5 {
        g.add_edge((i, a), ((i + 1) % 5, b), None).unwrap();
        g.add_edge((i, c), (5 + i, c), None).unwrap();
        g.add_edge((5 + i, a), (5 + (i + 2) % 5, b), None).unwrap();
    }
    Gcg::from_pointed(&PointedGraph::from_index(g, 0)).expect("connected")
}

/// An `n × m` grid (a torus if `wrap`) over `sig`, whose first four ports are
/// used as east, west, north, south. Vertex `(x, y)` is named `"x,y"`; the
/// pointer is `(0, 0)`, the south-west corner.
pub fn grid_graph(sig: Arc<Signature>, n: usize, m: usize, wrap: bool) -> Result<PointedGraph> {
    if n == 0 || m == 0 {
        return Err(Error::Parse("grid dimensions must be positive".into()));
    }
    if sig.arity() < 4 {
        return Err(Error::Alphabet("grids need four ports".into()));
    }
    let mut g = NamedGraph::new(sig);
    let id = |x: usize, y: usize| y * n + x;
    for y in 0..m {
        for x in 0..n {
            g.add_vertex(VertexName::id(format!("{x},{y}")), None)?;
        }
    }
    let (a, b, c, d) = (Port(0), Port(1), Port(2), Port(3));
    for y in 0..m {
        for x in 0..n {
            if x + 1 < n || wrap {
                g.add_edge((id(x, y), a), (id((x + 1) % n, y), b), None)?;
            }
            if y + 1 < m || wrap {
                g.add_edge((id(x, y), c), (id(x, (y + 1) % m), d), None)?;
            }
        }
    }
    Ok(PointedGraph::from_index(g, 0))
}

pub fn grid(n: usize, m: usize, wrap: bool) -> Result<Gcg> {
    Gcg::from_pointed(&grid_graph(Signature::unlabeled("abcd"), n, m, wrap)?)
}
