//! Local rules: functions from radius-`r` disks to finite patches whose
//! vertices are named by sets of `(disk vertex, suffix)` atoms.

mod builtin;
mod check;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use builtin::{
    builtin_rule, builtin_rules, identity, inflate, sprout, turtle, xor_state, BUILTIN_NAMES,
};
pub use check::{check_local_rule, CheckMode, Counterexample, RuleCheckReport, RuleClause};

use crate::alphabet::Signature;
use crate::canonical::Gcg;
use crate::error::{Error, Result};
use crate::json::GraphDoc;
use crate::name::{Atom, Base};
use crate::portgraph::NamedGraph;

pub type EvalFn = dyn Fn(&Gcg) -> Result<NamedGraph> + Send + Sync;

#[derive(Clone)]
pub struct LocalRule {
    name: String,
    sig: Arc<Signature>,
    radius: usize,
    suffix_bound: u16,
    bound: usize,
    eval: Arc<EvalFn>,
}

impl fmt::Debug for LocalRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LocalRule")
            .field("name", &self.name)
            .field("ports", &self.sig.ports().to_string())
            .field("radius", &self.radius)
            .field("suffix_bound", &self.suffix_bound)
            .field("bound", &self.bound)
            .finish()
    }
}

impl LocalRule {
    /// `suffix_bound` caps the suffixes used in output names; `bound` is the
    /// inflation constant checked by the dynamics module.
    pub fn new(
        name: impl Into<String>,
        sig: Arc<Signature>,
        radius: usize,
        suffix_bound: u16,
        bound: usize,
        eval: impl Fn(&Gcg) -> Result<NamedGraph> + Send + Sync + 'static,
    ) -> Self {
        LocalRule {
            name: name.into(),
            sig,
            radius,
            suffix_bound,
            bound,
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn suffix_bound(&self) -> u16 {
        self.suffix_bound
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Evaluates on a radius-`r` disk without validating the output.
    pub fn eval_raw(&self, disk: &Gcg) -> Result<NamedGraph> {
        if disk.signature() != &self.sig {
            return Err(Error::SignatureMismatch);
        }
        (self.eval)(disk)
    }

    /// Evaluates and checks that the patch is a valid output for `disk`.
    pub fn eval(&self, disk: &Gcg) -> Result<NamedGraph> {
        let out = self.eval_raw(disk)?;
        self.validate_output(disk, &out)?;
        Ok(out)
    }

    /// The output must contain `(ε, ε)`, name only vertices of the disk,
    /// respect the suffix bound and be connected.
    pub fn validate_output(&self, disk: &Gcg, out: &NamedGraph) -> Result<()> {
        let ports = self.sig.ports();
        if out.signature() != &self.sig {
            return Err(Error::rule(
                &self.name,
                "output signature differs from input",
            ));
        }
        if out.vertex_by_atom(&Atom::origin()).is_none() {
            return Err(Error::rule(&self.name, "output has no vertex named (ε, ε)"));
        }
        for name in out.names() {
            for atom in name.atoms() {
                let Base::Word(w) = &atom.base else {
                    return Err(Error::rule(
                        &self.name,
                        format!("atom {} is not a disk vertex", atom.display(ports)),
                    ));
                };
                if disk.index_of(w).is_none() {
                    return Err(Error::UnresolvableAtom(atom.display(ports).to_string()));
                }
                if atom.suffix.0 > self.suffix_bound {
                    return Err(Error::rule(
                        &self.name,
                        format!(
                            "suffix of {} exceeds the bound {}",
                            atom.display(ports),
                            self.suffix_bound
                        ),
                    ));
                }
            }
        }
        if !out.is_connected() {
            return Err(Error::rule(&self.name, "output is not connected"));
        }
        Ok(())
    }

    /// The same rule except on `disk`, where it returns `output`.
    pub fn with_override(&self, disk: Gcg, output: NamedGraph) -> Self {
        let inner = self.eval.clone();
        LocalRule {
            eval: Arc::new(move |d: &Gcg| {
                if *d == disk {
                    Ok(output.clone())
                } else {
                    inner(d)
                }
            }),
            ..self.clone()
        }
    }

    /// A rule given by an explicit table. Disks missing from the table are an
    /// evaluation error. The radius is the smallest one all disks fit; the
    /// inflation bound is the largest eccentricity of an output.
    pub fn from_table(name: impl Into<String>, entries: Vec<(Gcg, NamedGraph)>) -> Result<Self> {
        let name = name.into();
        let Some((first, _)) = entries.first() else {
            return Err(Error::rule(&name, "empty rule table"));
        };
        let sig = first.signature().clone();
        let mut radius = 0;
        let mut suffix_bound = 0;
        let mut bound = 1;
        let mut table = HashMap::new();
        for (disk, out) in entries {
            if disk.signature() != &sig || out.signature() != &sig {
                return Err(Error::SignatureMismatch);
            }
            radius = radius.max(disk.eccentricity().saturating_sub(1));
            for n in out.names() {
                for a in n.atoms() {
                    suffix_bound = suffix_bound.max(a.suffix.0);
                }
            }
            if let Some(origin) = out.vertex_by_atom(&Atom::origin()) {
                let far = out
                    .distances(origin)
                    .into_iter()
                    .flatten()
                    .max()
                    .unwrap_or(0);
                bound = bound.max(far);
            }
            table.insert(disk, out);
        }
        let rule_name = name.clone();
        Ok(LocalRule::new(
            name,
            sig,
            radius,
            suffix_bound,
            bound,
            move |d| {
                table
                    .get(d)
                    .cloned()
                    .ok_or_else(|| Error::rule(&rule_name, "disk not in table"))
            },
        ))
    }

    pub fn from_table_json(name: impl Into<String>, text: &str) -> Result<Self> {
        let rows: Vec<TableRow> = serde_json::from_str(text)?;
        let entries = rows
            .iter()
            .map(|row| Ok((row.disk.to_gcg()?, row.output.to_named()?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_table(name, entries)
    }

    /// Tabulates the rule over `disks`.
    pub fn to_table_json(&self, disks: &[Gcg]) -> Result<String> {
        let rows = disks
            .iter()
            .map(|d| {
                Ok(TableRow {
                    disk: GraphDoc::from_gcg(d),
                    output: GraphDoc::from_named(&self.eval(d)?, None),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(serde_json::to_string_pretty(&rows)?)
    }
}

/// One entry of a serialized rule table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub disk: GraphDoc,
    pub output: GraphDoc,
}
