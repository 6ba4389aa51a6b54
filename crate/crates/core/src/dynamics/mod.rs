//! Global application of local rules, vertex trackers and composition.

mod checks;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use checks::{
    check_bounded_inflation, check_continuity_modulus, check_invertibility, check_shift_invariance,
    classify, image_gaps, Classification, Continuity, InvertibilityReport, ShiftWitness,
};

use crate::canonical::{build, Gcg};
use crate::error::{Error, Result};
use crate::exec::Schedule;
use crate::localrule::LocalRule;
use crate::name::{Atom, Base, Suffix, VertexName};
use crate::portgraph::NamedGraph;
use crate::word::PathWord;

/// `R_X`: where each vertex of `X` ends up in `F(X)`, by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexTracker {
    map: Vec<usize>,
}

impl VertexTracker {
    pub fn new(map: Vec<usize>) -> Self {
        VertexTracker { map }
    }

    pub fn identity(n: usize) -> Self {
        VertexTracker {
            map: (0..n).collect(),
        }
    }

    pub fn get(&self, u: usize) -> usize {
        self.map[u]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Whether the map is a bijection onto `0..target_len`.
    pub fn is_bijective(&self, target_len: usize) -> bool {
        if self.map.len() != target_len {
            return false;
        }
        let mut seen = vec![false; target_len];
        self.map
            .iter()
            .all(|&v| v < target_len && !std::mem::replace(&mut seen[v], true))
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &VertexTracker) -> VertexTracker {
        VertexTracker {
            map: self.map.iter().map(|&v| then.map[v]).collect(),
        }
    }

    /// The map as `[source word, image word]` pairs.
    pub fn to_pairs(&self, source: &Gcg, image: &Gcg) -> Vec<(String, String)> {
        let ports = source.signature().ports();
        self.map
            .iter()
            .enumerate()
            .map(|(u, &v)| (source.word(u).encode(ports), image.word(v).encode(ports)))
            .collect()
    }
}

/// The result of one global step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub image: Gcg,
    pub tracker: VertexTracker,
}

/// A step written out with its tracker, as used by the command line.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrackerDoc {
    pub pairs: Vec<(String, String)>,
}

/// Something that maps configurations to configurations and tracks vertices.
pub trait Dynamics: Send + Sync {
    fn radius(&self) -> usize;
    fn step(&self, x: &Gcg) -> Result<Step>;
}

impl Dynamics for LocalRule {
    fn radius(&self) -> usize {
        LocalRule::radius(self)
    }

    fn step(&self, x: &Gcg) -> Result<Step> {
        apply(self, x)
    }
}

/// `u.f(X_u^r)`: the patch of `u`, named over the vertices of `x`.
pub fn patch_at(rule: &LocalRule, x: &Gcg, u: usize) -> Result<NamedGraph> {
    let (disk, map) = x.disk_at(u, rule.radius());
    let out = rule.eval(&disk)?;
    out.rename(|name| {
        let atoms = name.atoms().iter().map(|a| {
            let w = a.as_word().expect("validated outputs name disk vertices");
            let i = disk
                .index_of(w)
                .expect("validated outputs name disk vertices");
            Atom::word(x.word(map[i]).clone(), a.suffix)
        });
        VertexName::new(atoms)
    })
}

/// Union of the patches of `vertices`, computed per vertex under `schedule`
/// and merged in order.
fn union_of_patches(
    rule: &LocalRule,
    x: &Gcg,
    vertices: &[usize],
    schedule: Schedule,
) -> Result<NamedGraph> {
    let patches = schedule.map(vertices, |&u| patch_at(rule, x, u));
    let mut h = NamedGraph::new(rule.signature().clone());
    for p in patches {
        h.merge(&p?)?;
    }
    Ok(h)
}

pub fn apply(rule: &LocalRule, x: &Gcg) -> Result<Step> {
    apply_with(rule, x, Schedule::default())
}

/// `F(X)`: the union of all patches, pointed at the vertex containing
/// `(ε, ε)`; `R_X(u)` is the vertex containing `(u, ε)`.
pub fn apply_with(rule: &LocalRule, x: &Gcg, schedule: Schedule) -> Result<Step> {
    if x.signature() != rule.signature() {
        return Err(Error::SignatureMismatch);
    }
    let all: Vec<usize> = (0..x.len()).collect();
    let h = union_of_patches(rule, x, &all, schedule)?;
    let pointer = h
        .vertex_by_atom(&Atom::origin())
        .ok_or_else(|| Error::rule(rule.name(), "no vertex named (ε, ε)"))?;
    let canon = build(
        rule.signature(),
        pointer,
        None,
        |v, p| h.slot(v, p),
        |v| h.label(v),
    );
    if canon.order.len() != h.len() {
        return Err(Error::Disconnected);
    }
    let mut index = vec![0; h.len()];
    for (i, &v) in canon.order.iter().enumerate() {
        index[v] = i;
    }
    let ports = x.signature().ports();
    let map = (0..x.len())
        .map(|u| {
            h.vertex_by_atom(&Atom::word(x.word(u).clone(), Suffix::EPSILON))
                .map(|v| index[v])
                .ok_or_else(|| {
                    Error::rule(
                        rule.name(),
                        format!("no image vertex contains ({}, ε)", x.word(u).display(ports)),
                    )
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Step {
        image: canon.gcg,
        tracker: VertexTracker::new(map),
    })
}

/// `steps` successive applications, each paired with its tracker.
pub fn run(rule: &LocalRule, x: &Gcg, steps: usize) -> Result<Vec<Step>> {
    let mut out = Vec::with_capacity(steps);
    let mut current = x.clone();
    for _ in 0..steps {
        let step = apply(rule, &current)?;
        current = step.image.clone();
        out.push(step);
    }
    Ok(out)
}

/// The local rule of `g ∘ f`, of radius `t = 2rs + r + s`.
///
/// On a radius-`t` disk it unions the `f`-patches of the vertices whose
/// radius-`r` disk lies inside, applies `g` around every vertex of that union
/// carrying an atom `(ε, z)`, and renames each resulting atom `(v, z_g)` into
/// the atoms `(w, z_f·(b_g+1) + z_g)` for `(w, z_f)` in the name of `v`.
pub fn compose(f: &LocalRule, g: &LocalRule) -> Result<LocalRule> {
    if f.signature() != g.signature() {
        return Err(Error::SignatureMismatch);
    }
    let (r, s) = (f.radius(), g.radius());
    let t = 2 * r * s + r + s;
    let stride = g.suffix_bound() + 1;
    let suffix_bound = (f.suffix_bound() + 1) * stride - 1;
    let bound = (f.bound() + 1) * g.bound();
    let name = format!("{}+{}", f.name(), g.name());
    let (f, g) = (f.clone(), g.clone());
    let sig = f.signature().clone();
    Ok(LocalRule::new(
        name,
        sig.clone(),
        t,
        suffix_bound,
        bound,
        move |d: &Gcg| {
            let inner: Vec<usize> = (0..d.len()).filter(|&u| d.dist(u) + r <= t).collect();
            let x1 = union_of_patches(&f, d, &inner, Schedule::Sequential)?;
            let children: Vec<usize> = (0..x1.len())
                .filter(|&v| {
                    x1.name(v)
                        .atoms()
                        .iter()
                        .any(|a| matches!(&a.base, Base::Word(w) if w.is_empty()))
                })
                .collect();
            let mut out = NamedGraph::new(sig.clone());
            for v in children {
                let local = build(&sig, v, Some(s), |x, p| x1.slot(x, p), |x| x1.label(x));
                let patch = g.eval(&local.gcg)?;
                let renamed = patch.rename(|name| {
                    let mut atoms = Vec::new();
                    for a in name.atoms() {
                        let w = a.as_word().expect("validated outputs name disk vertices");
                        let i = local
                            .gcg
                            .index_of(w)
                            .expect("validated outputs name disk vertices");
                        for b in x1.name(local.order[i]).atoms() {
                            let base: PathWord =
                                b.as_word().expect("patches are word-named").clone();
                            atoms.push(Atom::word(base, Suffix(b.suffix.0 * stride + a.suffix.0)));
                        }
                    }
                    VertexName::new(atoms)
                })?;
                out.merge(&renamed)?;
            }
            Ok(out)
        },
    ))
}

/// Runs `rules` in sequence and composes the trackers.
pub fn apply_sequence(rules: &[LocalRule], x: &Gcg) -> Result<Step> {
    let mut step = Step {
        image: x.clone(),
        tracker: VertexTracker::identity(x.len()),
    };
    for rule in rules {
        let next = apply(rule, &step.image)?;
        step = Step {
            tracker: step.tracker.then(&next.tracker),
            image: next.image,
        };
    }
    Ok(step)
}

/// Shared handle used by callers that store heterogeneous dynamics.
pub type DynamicsRef = Arc<dyn Dynamics>;
