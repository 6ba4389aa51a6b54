//! Finite checks of the causality conditions on concrete configurations.

use std::collections::{HashSet, VecDeque};

use super::{apply, apply_with, Step};
use crate::canonical::Gcg;
use crate::error::Result;
use crate::exec::Schedule;
use crate::localrule::LocalRule;
use crate::word::PathWord;

/// A vertex at which shift invariance fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftWitness {
    /// `1`: `F(X_u) ≠ F(X)_{R_X(u)}`; `2`: the trackers disagree at `v`.
    pub clause: u8,
    pub u: PathWord,
    pub v: Option<PathWord>,
    pub detail: String,
}

/// Checks `F(X_u) = F(X)_{R_X(u)}` and `R_X(u.v) = R_X(u).R_{X_u}(v)` for
/// every `u` and `v` of `x`. Returns the first failure in vertex order.
pub fn check_shift_invariance(
    rule: &LocalRule,
    x: &Gcg,
    schedule: Schedule,
) -> Result<Option<ShiftWitness>> {
    let step = apply_with(rule, x, schedule)?;
    let fx = &step.image;
    let ports = x.signature().ports();
    let us: Vec<usize> = (0..x.len()).collect();
    let found = schedule.map(&us, |&u| -> Result<Option<ShiftWitness>> {
        let (xu, map) = x.shift_with_map(u);
        let Step { image, tracker } = apply(rule, &xu)?;
        let ru = step.tracker.get(u);
        if image != fx.shift(ru) {
            return Ok(Some(ShiftWitness {
                clause: 1,
                u: x.word(u).clone(),
                v: None,
                detail: format!(
                    "F(X_u) has {} vertices, F(X) shifted to R(u) = {} differs",
                    image.len(),
                    fx.word(ru).display(ports)
                ),
            }));
        }
        for (old, &v) in map.iter().enumerate() {
            let lhs = step.tracker.get(old);
            let rhs = fx.walk(ru, image.word(tracker.get(v)));
            if rhs != Some(lhs) {
                return Ok(Some(ShiftWitness {
                    clause: 2,
                    u: x.word(u).clone(),
                    v: Some(xu.word(v).clone()),
                    detail: format!(
                        "R(u.v) = {} but R(u).R_u(v) = {}",
                        fx.word(lhs).display(ports),
                        rhs.map_or("nothing".to_string(), |i| fx
                            .word(i)
                            .display(ports)
                            .to_string())
                    ),
                }));
            }
        }
        Ok(None)
    });
    for r in found {
        if let Some(w) = r? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Checks `|R_X(u)| ≤ |u|·b` and that every vertex of `F(X)` is within `b`
/// of the image of `R_X`. Returns a description of the first failure.
pub fn check_bounded_inflation(rule: &LocalRule, x: &Gcg, b: usize) -> Result<Option<String>> {
    let step = apply(rule, x)?;
    let fx = &step.image;
    let ports = x.signature().ports();
    for u in 0..x.len() {
        let ru = step.tracker.get(u);
        if fx.size(ru) > x.size(u) * b {
            return Ok(Some(format!(
                "|R({})| = {} exceeds {}·{}",
                x.word(u).display(ports),
                fx.size(ru),
                x.size(u),
                b
            )));
        }
    }
    let mut dist = vec![usize::MAX; fx.len()];
    let mut queue = VecDeque::new();
    for &v in step.tracker.as_slice() {
        if dist[v] == usize::MAX {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for p in ports.ports() {
            if let Some(s) = fx.slot(v, p) {
                if dist[s.vertex] == usize::MAX {
                    dist[s.vertex] = dist[v] + 1;
                    queue.push_back(s.vertex);
                }
            }
        }
    }
    for (w, &d) in dist.iter().enumerate() {
        if d.max(1) > b {
            return Ok(Some(format!(
                "{} is {} away from the image of R",
                fx.word(w).display(ports),
                d
            )));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Continuity {
    /// The inputs already differ within radius `n`; nothing to check.
    Vacuous,
    Agree,
    Disagree(String),
}

/// With `n = 2(m+1)(r+1) - 1`: if `x` and `y` agree on their radius-`n`
/// disks, `F(x)` and `F(y)` must agree on their radius-`m` disks, and so must
/// the trackers on the vertices they send there.
pub fn check_continuity_modulus(
    rule: &LocalRule,
    x: &Gcg,
    y: &Gcg,
    m: usize,
) -> Result<Continuity> {
    let n = 2 * (m + 1) * (rule.radius() + 1) - 1;
    if x.disk(n) != y.disk(n) {
        return Ok(Continuity::Vacuous);
    }
    let (sx, sy) = (apply(rule, x)?, apply(rule, y)?);
    if sx.image.disk(m) != sy.image.disk(m) {
        return Ok(Continuity::Disagree(format!(
            "images differ within radius {m}"
        )));
    }
    let ports = x.signature().ports();
    for (a, sa, b, sb) in [(x, &sx, y, &sy), (y, &sy, x, &sx)] {
        for u in 0..a.len() {
            let ra = sa.tracker.get(u);
            if sa.image.dist(ra) > m {
                continue;
            }
            let same = b
                .index_of(a.word(u))
                .map(|ub| sb.image.word(sb.tracker.get(ub)) == sa.image.word(ra));
            if same != Some(true) {
                return Ok(Continuity::Disagree(format!(
                    "trackers differ at {}",
                    a.word(u).display(ports)
                )));
            }
        }
    }
    Ok(Continuity::Agree)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertibilityReport {
    pub configs: usize,
    /// Indices of two distinct configurations with the same image.
    pub collision: Option<(usize, usize)>,
    pub trackers_bijective: bool,
    /// Set only when an inverse was supplied.
    pub inverse_recovers: Option<bool>,
    pub inverse_shift_invariant: Option<bool>,
    /// A configuration and vertex with `S_{F(X)}(R_X(u)) ≠ u`.
    pub s_after_r_witness: Option<(Gcg, PathWord)>,
}

impl InvertibilityReport {
    pub fn injective(&self) -> bool {
        self.collision.is_none()
    }

    pub fn s_after_r_is_identity(&self) -> Option<bool> {
        self.inverse_recovers
            .map(|_| self.s_after_r_witness.is_none())
    }
}

/// Injectivity of `F` and bijectivity of every `R_X` over `configs`, plus,
/// given a candidate inverse `G` with tracker `S`, whether `G(F(X)) = X`,
/// whether `G` is shift invariant on the images and whether `S ∘ R` is the
/// identity.
pub fn check_invertibility(
    rule: &LocalRule,
    configs: &[Gcg],
    inverse: Option<&LocalRule>,
    schedule: Schedule,
) -> Result<InvertibilityReport> {
    let steps = schedule
        .map(configs, |x| apply(rule, x))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut report = InvertibilityReport {
        configs: configs.len(),
        collision: None,
        trackers_bijective: steps.iter().all(|s| s.tracker.is_bijective(s.image.len())),
        inverse_recovers: None,
        inverse_shift_invariant: None,
        s_after_r_witness: None,
    };
    let mut seen = std::collections::HashMap::new();
    for (i, s) in steps.iter().enumerate() {
        if let Some(&j) = seen.get(&s.image) {
            if configs[i] != configs[j] {
                report.collision = Some((j, i));
                break;
            }
        } else {
            seen.insert(&s.image, i);
        }
    }
    if let Some(g) = inverse {
        let mut recovers = true;
        let mut invariant = true;
        for (x, s) in configs.iter().zip(&steps) {
            let back = apply(g, &s.image)?;
            recovers &= back.image == *x;
            invariant &= check_shift_invariance(g, &s.image, schedule)?.is_none();
            if report.s_after_r_witness.is_none() && back.image.len() == x.len() {
                let round = s.tracker.then(&back.tracker);
                if let Some(u) = (0..x.len()).find(|&u| back.image.word(round.get(u)) != x.word(u))
                {
                    report.s_after_r_witness = Some((x.clone(), x.word(u).clone()));
                }
            }
        }
        report.inverse_recovers = Some(recovers);
        report.inverse_shift_invariant = Some(invariant);
    }
    Ok(report)
}

/// The members of `range` that are not `F(X)` for any `X` in `domain`.
pub fn image_gaps(rule: &LocalRule, domain: &[Gcg], range: &[Gcg]) -> Result<Vec<Gcg>> {
    let images = Schedule::default()
        .map(domain, |x| apply(rule, x).map(|s| s.image))
        .into_iter()
        .collect::<Result<HashSet<_>>>()?;
    Ok(range
        .iter()
        .filter(|y| !images.contains(*y))
        .cloned()
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// `F` only changes states: `F(X)` equals `X` up to labels.
    pub state_only: bool,
    /// The signature has no states, so `F` only changes the graph.
    pub graph_only: bool,
}

/// Classifies `rule` by its action on `configs`.
pub fn classify(rule: &LocalRule, configs: &[Gcg]) -> Result<Classification> {
    let mut state_only = true;
    for x in configs {
        state_only &= apply(rule, x)?.image.unlabeled() == x.unlabeled();
    }
    let sig = rule.signature();
    Ok(Classification {
        state_only,
        graph_only: sig.sigma().is_empty() && sig.delta().is_empty(),
    })
}
