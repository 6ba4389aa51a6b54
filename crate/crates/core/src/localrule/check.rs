//! The decision procedure for local rules, plus a sound check over fixtures.

use std::collections::BTreeSet;
use std::fmt;

use super::LocalRule;
use crate::canonical::Gcg;
use crate::enumerate::enumerate_disks;
use crate::error::{Error, Result};
use crate::exec::Schedule;
use crate::portgraph::Verdict;
use crate::word::PathWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Every disk of radii `r`, `r+1` and `3r+2`; aborts past `limit` disks per radius.
    Exhaustive { limit: usize },
    /// Only the disks found around the vertices of these graphs.
    Fixtures(Vec<Gcg>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleClause {
    /// The output is a valid patch containing `(ε, ε)`.
    Dynamics,
    /// Output suffixes stay within the declared bound.
    Bounded,
    /// Neighbouring patches overlap and agree.
    NontrivialConsistency,
    /// Patches of vertices up to distance `2r+2` agree.
    Consistency,
}

impl fmt::Display for RuleClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleClause::Dynamics => "dynamics",
            RuleClause::Bounded => "bounded",
            RuleClause::NontrivialConsistency => "non-trivial consistency",
            RuleClause::Consistency => "consistency",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub clause: RuleClause,
    pub disk: Gcg,
    /// The vertex `u` whose patch disagrees with the pointer's; `ε` for the
    /// first two clauses.
    pub offset: PathWord,
    pub detail: String,
}

impl Counterexample {
    /// Whether the recorded disk and offset still violate the clause.
    pub fn reverify(&self, rule: &LocalRule) -> bool {
        match self.clause {
            RuleClause::Dynamics | RuleClause::Bounded => {
                output_problem(rule, &self.disk).is_some_and(|(c, _)| c == self.clause)
            }
            RuleClause::NontrivialConsistency | RuleClause::Consistency => {
                let Some(u) = self.disk.index_of(&self.offset) else {
                    return false;
                };
                let strict = self.clause == RuleClause::NontrivialConsistency;
                pair_problem(rule, &self.disk, u, strict).is_some()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleCheckReport {
    pub rule: String,
    /// Exhaustive runs decide the question; fixture runs are only sound.
    pub exhaustive: bool,
    pub dynamics_ok: bool,
    pub bounded_ok: bool,
    pub nontrivial_consistency_ok: bool,
    pub consistency_ok: bool,
    /// At most one per failing clause, in clause order.
    pub counterexamples: Vec<Counterexample>,
    /// `(radius, number of disks)` for each radius examined.
    pub disks_checked: Vec<(usize, usize)>,
    /// Set when enumeration was abandoned; the clauses not reached read as failed.
    pub aborted: Option<String>,
}

impl RuleCheckReport {
    pub fn passes(&self) -> bool {
        self.aborted.is_none()
            && self.dynamics_ok
            && self.bounded_ok
            && self.nontrivial_consistency_ok
            && self.consistency_ok
    }
}

impl fmt::Display for RuleCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = if self.exhaustive {
            "exhaustive"
        } else {
            "fixtures"
        };
        writeln!(f, "rule {} ({mode})", self.rule)?;
        for (r, n) in &self.disks_checked {
            writeln!(f, "radius {r}: {n} disks")?;
        }
        let flag = |ok: bool| if ok { "pass" } else { "FAIL" };
        writeln!(f, "dynamics: {}", flag(self.dynamics_ok))?;
        writeln!(f, "bounded: {}", flag(self.bounded_ok))?;
        writeln!(
            f,
            "non-trivial consistency: {}",
            flag(self.nontrivial_consistency_ok)
        )?;
        writeln!(f, "consistency: {}", flag(self.consistency_ok))?;
        for c in &self.counterexamples {
            let ports = c.disk.signature().ports();
            writeln!(
                f,
                "counterexample ({}): disk with {} vertices, u = {}: {}",
                c.clause,
                c.disk.len(),
                c.offset.display(ports),
                c.detail
            )?;
        }
        if let Some(why) = &self.aborted {
            writeln!(f, "aborted: {why}")?;
        }
        Ok(())
    }
}

fn output_problem(rule: &LocalRule, disk: &Gcg) -> Option<(RuleClause, String)> {
    let out = match rule.eval_raw(disk) {
        Ok(out) => out,
        Err(e) => return Some((RuleClause::Dynamics, e.to_string())),
    };
    let over = out
        .names()
        .iter()
        .flat_map(|n| n.atoms())
        .find(|a| a.suffix.0 > rule.suffix_bound());
    if let Some(a) = over {
        return Some((
            RuleClause::Bounded,
            format!("suffix {} exceeds {}", a.suffix.0, rule.suffix_bound()),
        ));
    }
    rule.validate_output(disk, &out)
        .err()
        .map(|e| (RuleClause::Dynamics, e.to_string()))
}

/// Compares the pointer's patch with the patch of `u`, both read inside `big`.
fn pair_problem(rule: &LocalRule, big: &Gcg, u: usize, strict: bool) -> Option<String> {
    let r = rule.radius();
    let here = match rule.eval_raw(&big.disk(r)) {
        Ok(g) => g,
        Err(e) => return Some(e.to_string()),
    };
    let (local, _) = big.disk_at(u, r);
    let there = match rule.eval_raw(&local).and_then(|g| big.prefix_graph(u, &g)) {
        Ok(g) => g,
        Err(e) => return Some(e.to_string()),
    };
    match here.consistency(&there) {
        Verdict::Consistent => None,
        Verdict::TriviallyConsistent if !strict => None,
        Verdict::TriviallyConsistent => Some("patches do not overlap".into()),
        Verdict::Inconsistent(why) => Some(why.to_string()),
    }
}

fn first_pair_problem(
    rule: &LocalRule,
    disks: &[Gcg],
    max_dist: usize,
    clause: RuleClause,
    schedule: Schedule,
) -> Option<Counterexample> {
    let strict = clause == RuleClause::NontrivialConsistency;
    schedule.find_first(disks, |d| {
        (0..d.len())
            .take_while(|&u| d.dist(u) <= max_dist)
            .find_map(|u| {
                pair_problem(rule, d, u, strict).map(|detail| Counterexample {
                    clause,
                    disk: d.clone(),
                    offset: d.word(u).clone(),
                    detail,
                })
            })
    })
}

fn first_output_problem(
    rule: &LocalRule,
    disks: &[Gcg],
    clause: RuleClause,
    schedule: Schedule,
) -> Option<Counterexample> {
    schedule.find_first(disks, |d| match output_problem(rule, d) {
        Some((c, detail)) if c == clause => Some(Counterexample {
            clause,
            disk: d.clone(),
            offset: PathWord::empty(),
            detail,
        }),
        _ => None,
    })
}

/// Checks the three conditions making `rule` a local rule: valid outputs on
/// radius-`r` disks, non-trivial consistency with the patches of neighbours
/// in radius-`(r+1)` disks, and consistency with the patches of vertices up
/// to distance `2r+2` in radius-`(3r+2)` disks.
pub fn check_local_rule(
    rule: &LocalRule,
    mode: &CheckMode,
    schedule: Schedule,
) -> Result<RuleCheckReport> {
    let r = rule.radius();
    let radii = [r, r + 1, 3 * r + 2];
    let mut report = RuleCheckReport {
        rule: rule.name().to_string(),
        exhaustive: matches!(mode, CheckMode::Exhaustive { .. }),
        dynamics_ok: false,
        bounded_ok: false,
        nontrivial_consistency_ok: false,
        consistency_ok: false,
        counterexamples: Vec::new(),
        disks_checked: Vec::new(),
        aborted: None,
    };

    let disks_at = |radius: usize| -> Result<Vec<Gcg>> {
        match mode {
            CheckMode::Exhaustive { limit } => enumerate_disks(rule.signature(), radius, *limit),
            CheckMode::Fixtures(graphs) => {
                let mut set = BTreeSet::new();
                for g in graphs {
                    if g.signature() != rule.signature() {
                        return Err(Error::SignatureMismatch);
                    }
                    for c in 0..g.len() {
                        set.insert(g.disk_at(c, radius).0);
                    }
                }
                Ok(set.into_iter().collect())
            }
        }
    };

    for (step, radius) in radii.into_iter().enumerate() {
        let disks = match disks_at(radius) {
            Ok(d) => d,
            Err(e @ Error::Intractable { .. }) => {
                report.aborted = Some(e.to_string());
                return Ok(report);
            }
            Err(e) => return Err(e),
        };
        report.disks_checked.push((radius, disks.len()));
        let found = match step {
            0 => {
                let dynamics = first_output_problem(rule, &disks, RuleClause::Dynamics, schedule);
                let bounded = first_output_problem(rule, &disks, RuleClause::Bounded, schedule);
                report.dynamics_ok = dynamics.is_none();
                report.bounded_ok = bounded.is_none();
                dynamics.into_iter().chain(bounded).collect()
            }
            1 => {
                let ce = first_pair_problem(
                    rule,
                    &disks,
                    1,
                    RuleClause::NontrivialConsistency,
                    schedule,
                );
                report.nontrivial_consistency_ok = ce.is_none();
                ce.into_iter().collect()
            }
            _ => {
                let ce =
                    first_pair_problem(rule, &disks, 2 * r + 2, RuleClause::Consistency, schedule);
                report.consistency_ok = ce.is_none();
                ce.into_iter().collect::<Vec<_>>()
            }
        };
        report.counterexamples.extend(found);
    }
    Ok(report)
}
