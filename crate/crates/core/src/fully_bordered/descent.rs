//! Reduction of a fully bordered pair to a strictly shorter one, and the
//! derivation traces rebuilt from chains of such reductions.

use serde::Serialize;

use super::{is_fb_pair, DerivationStep, DerivationTrace, Pair};
use crate::border::root_decomposition;
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DescentCase {
    /// `(s_u t_u)^{k_u}` is not a factor of `v`; `u` loses its leading root.
    ShrinkU,
    /// `v = v' u' v'`; the pair becomes `(u, v')`.
    ShrinkV { v_outer: Word, u_inner: Word },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentResult {
    pub case: DescentCase,
    pub next: Pair,
}

/// One descent step on a fully bordered pair with `|v| <= |u|` and `|uv| > 2`.
pub fn descend(u: &Word, v: &Word) -> Result<DescentResult> {
    if !is_fb_pair(u, v)? {
        return Err(Error::NotFullyBordered {
            u: u.to_string(),
            v: v.to_string(),
        });
    }
    if v.len() > u.len() {
        return Err(Error::Orientation {
            u_len: u.len(),
            v_len: v.len(),
        });
    }
    if u.len() + v.len() <= 2 {
        return Err(Error::TooShort);
    }
    descend_unchecked(u, v)
}

/// The case analysis of `descend` without the census precondition.
fn descend_unchecked(u: &Word, v: &Word) -> Result<DescentResult> {
    let contradiction = |detail: String| Error::DescentContradiction {
        u: u.to_string(),
        v: v.to_string(),
        detail,
    };
    let d = root_decomposition(u)?;
    if d.k == 0 {
        return Err(contradiction("u is unbordered (k_u = 0)".into()));
    }
    let root = d.root();
    let u_inner = u.suffix(u.len() - root.len());
    let power = root.pow(d.k);
    if !power.is_factor_of(v) {
        return Ok(DescentResult {
            case: DescentCase::ShrinkU,
            next: Pair::new(u_inner, v.clone()),
        });
    }
    if v.len() <= u_inner.len() || !(v.len() - u_inner.len()).is_multiple_of(2) {
        return Err(contradiction(format!(
            "|v| - |u'| = {} - {} is not a positive even number",
            v.len(),
            u_inner.len()
        )));
    }
    let v_outer = v.prefix((v.len() - u_inner.len()) / 2);
    if Word::concat_all([&v_outer, &u_inner, &v_outer]) != *v {
        return Err(contradiction(format!("v != {v_outer}.{u_inner}.{v_outer}")));
    }
    Ok(DescentResult {
        next: Pair::new(u.clone(), v_outer.clone()),
        case: DescentCase::ShrinkV { v_outer, u_inner },
    })
}

/// One link of a descent chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ChainLink {
    Swap { from: Pair, to: Pair },
    Descend { from: Pair, result: DescentResult },
}

impl ChainLink {
    pub fn to(&self) -> &Pair {
        match self {
            ChainLink::Swap { to, .. } => to,
            ChainLink::Descend { result, .. } => &result.next,
        }
    }
}

/// Descends from a fully bordered pair down to a base pair, swapping first
/// whenever `|v| > |u|`.
pub fn descent_chain(u: &Word, v: &Word) -> Result<Vec<ChainLink>> {
    if !is_fb_pair(u, v)? {
        return Err(Error::NotFullyBordered {
            u: u.to_string(),
            v: v.to_string(),
        });
    }
    let mut links = Vec::new();
    let mut p = Pair::new(u.clone(), v.clone());
    while p.total_len() > 2 {
        if p.v.len() > p.u.len() {
            let to = p.swapped();
            links.push(ChainLink::Swap {
                from: p,
                to: to.clone(),
            });
            p = to;
        }
        let result = descend_unchecked(&p.u, &p.v)?;
        let next = result.next.clone();
        if next.total_len() >= p.total_len() {
            return Err(Error::DescentContradiction {
                u: p.u.to_string(),
                v: p.v.to_string(),
                detail: "descent did not shorten the pair".into(),
            });
        }
        links.push(ChainLink::Descend { from: p, result });
        p = next;
    }
    Ok(links)
}

/// Rebuilds a derivation in F by inverting the descent chain of `(u, v)`.
///
/// A `ShrinkU` link from `(u, v)` to `(u', v)` inverts to `ExtendU` when `u'`
/// has the same periodic root as `u`; otherwise (`k_u = 1`) it inverts to
/// `Swap, ExtendV[t_u], Swap` through `(v, u')`. A `ShrinkV` link inverts to
/// `ExtendV[u']`.
pub fn derive_trace(u: &Word, v: &Word) -> Result<DerivationTrace> {
    let links = descent_chain(u, v)?;
    let start = links
        .last()
        .map(|l| l.to().clone())
        .unwrap_or_else(|| Pair::new(u.clone(), v.clone()));
    let mut trace = DerivationTrace::base(start);
    for link in links.iter().rev() {
        match link {
            ChainLink::Swap { .. } => trace = trace.then_swap(),
            ChainLink::Descend { from, result } => match &result.case {
                DescentCase::ShrinkV { u_inner, .. } => {
                    trace =
                        trace.then(DerivationStep::ExtendV { y: u_inner.clone() }, from.clone());
                }
                DescentCase::ShrinkU => {
                    let du = root_decomposition(&from.u)?;
                    let next = &result.next;
                    if root_decomposition(&next.u)?.root() == du.root() {
                        trace = trace.then(DerivationStep::ExtendU, from.clone());
                    } else {
                        let extended = Pair::new(from.v.clone(), from.u.clone());
                        trace = trace
                            .then_swap()
                            .then(DerivationStep::ExtendV { y: du.t }, extended)
                            .then_swap();
                    }
                }
            },
        }
    }
    trace.replay()?;
    Ok(trace)
}
