//! Borders, periods and the `(s, t, k)` root decomposition.
//!
//! Everything here walks the longest-border chain of the prefix function
//! rather than comparing prefixes and suffixes pairwise.

use serde::Serialize;

use crate::error::Result;
use crate::word::{Letter, Word};

/// Fills `pi` so that `pi[i]` is the length of the longest border of `s[..=i]`.
pub fn prefix_function_into(s: &[Letter], pi: &mut Vec<usize>) {
    pi.clear();
    pi.resize(s.len(), 0);
    for i in 1..s.len() {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
}

pub fn prefix_function(s: &[Letter]) -> Vec<usize> {
    let mut pi = Vec::new();
    prefix_function_into(s, &mut pi);
    pi
}

/// Length of the longest border of a nonempty slice, 0 when unbordered.
pub fn longest_border_len(s: &[Letter]) -> usize {
    prefix_function(s).last().copied().unwrap_or(0)
}

/// Border lengths of `s`, shortest first.
pub(crate) fn border_lengths(s: &[Letter]) -> Vec<usize> {
    let pi = prefix_function(s);
    let mut lens = Vec::new();
    let mut k = pi.last().copied().unwrap_or(0);
    while k > 0 {
        lens.push(k);
        k = pi[k - 1];
    }
    lens.reverse();
    lens
}

/// All borders of `w`, shortest first. Empty exactly when `w` is unbordered.
pub fn borders(w: &Word) -> Result<Vec<Word>> {
    w.ensure_nonempty()?;
    Ok(border_lengths(w.letters())
        .into_iter()
        .map(|l| w.prefix(l))
        .collect())
}

pub fn shortest_border(w: &Word) -> Result<Option<Word>> {
    w.ensure_nonempty()?;
    Ok(shortest_border_len(w.letters()).map(|l| w.prefix(l)))
}

pub(crate) fn shortest_border_len(s: &[Letter]) -> Option<usize> {
    let pi = prefix_function(s);
    let mut k = pi.last().copied().unwrap_or(0);
    if k == 0 {
        return None;
    }
    while pi[k - 1] > 0 {
        k = pi[k - 1];
    }
    Some(k)
}

pub fn is_unbordered(w: &Word) -> Result<bool> {
    w.ensure_nonempty()?;
    Ok(longest_border_len(w.letters()) == 0)
}

pub fn is_border(y: &Word, w: &Word) -> bool {
    !y.is_empty() && y.len() < w.len() && y.is_prefix_of(w) && y.is_suffix_of(w)
}

/// Smallest period of `w`.
pub fn period(w: &Word) -> Result<usize> {
    w.ensure_nonempty()?;
    Ok(w.len() - longest_border_len(w.letters()))
}

/// The prefix of `w` whose length is the period.
pub fn periodic_root(w: &Word) -> Result<Word> {
    Ok(w.prefix(period(w)?))
}

/// `w = (s t)^k s` with `s` nonempty and `s t` the periodic root of `w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RootDecomposition {
    pub s: Word,
    pub t: Word,
    pub k: usize,
}

impl RootDecomposition {
    /// The periodic root `s t`.
    pub fn root(&self) -> Word {
        self.s.concat(&self.t)
    }

    /// `t s`
    pub fn rotated_root(&self) -> Word {
        self.t.concat(&self.s)
    }

    pub fn reassemble(&self) -> Word {
        self.root().pow(self.k).concat(&self.s)
    }
}

pub fn root_decomposition(w: &Word) -> Result<RootDecomposition> {
    let p = period(w)?;
    let n = w.len();
    let reps = n / p;
    let rem = n % p;
    Ok(if rem == 0 {
        RootDecomposition {
            s: w.prefix(p),
            t: Word::empty(),
            k: reps - 1,
        }
    } else {
        RootDecomposition {
            s: w.factor(reps * p, n),
            t: w.factor(rem, p),
            k: reps,
        }
    })
}
