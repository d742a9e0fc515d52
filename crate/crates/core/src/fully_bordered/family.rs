use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::Pair;
use crate::border::{border_lengths, is_border, root_decomposition};
use crate::error::{Error, Result};
use crate::word::Word;

/// One closure rule of the family F.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DerivationStep {
    /// The axiom: the trace starts at `(0,1)` or `(1,0)`.
    Base,
    /// `(u, v) -> (v, u)`
    Swap,
    /// `(u, v) -> (s_u t_u u, v)`
    ExtendU,
    /// `(u, v) -> (u, v y v)` for a border `y` of `u` longer than `t_v`.
    ExtendV { y: Word },
}

impl DerivationStep {
    pub fn apply(&self, p: &Pair) -> Result<Pair> {
        match self {
            DerivationStep::Base => {
                if p.is_base() {
                    Ok(p.clone())
                } else {
                    Err(Error::Replay(format!("Base applied to non-base pair {p}")))
                }
            }
            DerivationStep::Swap => Ok(swap(p)),
            DerivationStep::ExtendU => extend_u(&p.u, &p.v),
            DerivationStep::ExtendV { y } => extend_v(&p.u, &p.v, y),
        }
    }
}

impl fmt::Display for DerivationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivationStep::Base => f.write_str("Base"),
            DerivationStep::Swap => f.write_str("Swap"),
            DerivationStep::ExtendU => f.write_str("ExtendU"),
            DerivationStep::ExtendV { y } => write!(f, "ExtendV[{y}]"),
        }
    }
}

/// A derivation of `end` from a base pair. `steps` always opens with `Base`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivationTrace {
    pub start: Pair,
    pub steps: Vec<DerivationStep>,
    pub end: Pair,
}

impl DerivationTrace {
    pub fn base(start: Pair) -> DerivationTrace {
        DerivationTrace {
            end: start.clone(),
            start,
            steps: vec![DerivationStep::Base],
        }
    }

    /// Number of rule applications after the axiom.
    pub fn rule_count(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    pub(crate) fn then(&self, step: DerivationStep, end: Pair) -> DerivationTrace {
        let mut steps = self.steps.clone();
        steps.push(step);
        DerivationTrace {
            start: self.start.clone(),
            steps,
            end,
        }
    }

    /// Appends a swap, cancelling it against a trailing one.
    pub(crate) fn then_swap(mut self) -> DerivationTrace {
        let end = self.end.swapped();
        if self.steps.len() > 1 && self.steps.last() == Some(&DerivationStep::Swap) {
            self.steps.pop();
            self.end = end;
            self
        } else {
            self.then(DerivationStep::Swap, end)
        }
    }

    /// Re-applies every step from `start` and checks the result is `end`.
    pub fn replay(&self) -> Result<Pair> {
        if !self.start.is_base() {
            return Err(Error::Replay(format!(
                "start {} is not a base pair",
                self.start
            )));
        }
        if self.steps.first() != Some(&DerivationStep::Base) {
            return Err(Error::Replay("trace does not open with Base".into()));
        }
        let mut p = self.start.clone();
        for (i, step) in self.steps.iter().enumerate() {
            if i > 0 && *step == DerivationStep::Base {
                return Err(Error::Replay(format!("Base at position {i}")));
            }
            p = step.apply(&p)?;
        }
        if p == self.end {
            Ok(p)
        } else {
            Err(Error::Replay(format!(
                "replay ends at {p}, trace claims {}",
                self.end
            )))
        }
    }
}

impl fmt::Display for DerivationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for step in self.steps.iter().skip(1) {
            write!(f, " {step}")?;
        }
        Ok(())
    }
}

pub fn swap(p: &Pair) -> Pair {
    p.swapped()
}

/// `(u, v) -> (s_u t_u u, v)`
pub fn extend_u(u: &Word, v: &Word) -> Result<Pair> {
    v.ensure_nonempty()?;
    let d = root_decomposition(u)?;
    Ok(Pair::new(d.root().concat(u), v.clone()))
}

/// `(u, v) -> (u, v y v)`, requiring `y` to be a border of `u` with `|t_v| < |y|`.
pub fn extend_v(u: &Word, v: &Word, y: &Word) -> Result<Pair> {
    u.ensure_nonempty()?;
    let t_v = root_decomposition(v)?.t;
    if !is_border(y, u) {
        return Err(Error::NotABorder {
            y: y.to_string(),
            u: u.to_string(),
        });
    }
    if y.len() <= t_v.len() {
        return Err(Error::BorderTooShort {
            y: y.to_string(),
            t_v: t_v.to_string(),
        });
    }
    Ok(Pair::new(u.clone(), Word::concat_all([v, y, v])))
}

/// Members of F up to a total length, each with the first derivation found.
#[derive(Clone, Debug)]
pub struct Family {
    pub max_total_length: usize,
    members: BTreeMap<Pair, DerivationTrace>,
}

impl Family {
    pub fn contains(&self, p: &Pair) -> bool {
        self.members.contains_key(p)
    }

    pub fn trace(&self, p: &Pair) -> Option<&DerivationTrace> {
        self.members.get(p)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members sorted by `|uv|`, then `uv`, then `u`.
    pub fn iter(&self) -> impl Iterator<Item = (&Pair, &DerivationTrace)> {
        self.members.iter()
    }

    pub fn pairs(&self) -> impl Iterator<Item = &Pair> {
        self.members.keys()
    }

    pub fn count_of_length(&self, n: usize) -> usize {
        self.pairs().filter(|p| p.total_len() == n).count()
    }
}

/// Closure of `{(0,1), (1,0)}` under the F rules, pruned at `max_total_length`.
///
/// Pairs are expanded in `Pair` order, so the trace kept for each member is
/// deterministic.
pub fn generate_f(max_total_length: usize) -> Result<Family> {
    if max_total_length < 2 {
        return Err(Error::BoundOutOfRange {
            bound: max_total_length,
            min: 2,
            max: usize::MAX,
        });
    }
    let mut members = BTreeMap::new();
    let mut frontier = BTreeSet::new();
    for start in [Pair::base(), Pair::base().swapped()] {
        members.insert(start.clone(), DerivationTrace::base(start.clone()));
        frontier.insert(start);
    }
    while let Some(p) = frontier.pop_first() {
        let trace = members[&p].clone();
        for (step, child) in successors(&p, max_total_length)? {
            if !members.contains_key(&child) {
                members.insert(child.clone(), trace.then(step, child.clone()));
                frontier.insert(child);
            }
        }
    }
    Ok(Family {
        max_total_length,
        members,
    })
}

fn successors(p: &Pair, bound: usize) -> Result<Vec<(DerivationStep, Pair)>> {
    let mut out = vec![(DerivationStep::Swap, swap(p))];
    let du = root_decomposition(&p.u)?;
    if du.root().len() + p.total_len() <= bound {
        out.push((DerivationStep::ExtendU, extend_u(&p.u, &p.v)?));
    }
    let t_v = root_decomposition(&p.v)?.t.len();
    for len in border_lengths(p.u.letters()) {
        if len > t_v && p.u.len() + 2 * p.v.len() + len <= bound {
            let y = p.u.prefix(len);
            let child = extend_v(&p.u, &p.v, &y)?;
            out.push((DerivationStep::ExtendV { y }, child));
        }
    }
    Ok(out)
}
