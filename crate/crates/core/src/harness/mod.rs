//! Brute-force oracles and exhaustive verification over all binary words up
//! to a length bound.
//!
//! Word space is cut into shards by a fixed-length prefix. Each shard is
//! checked independently and shard results are merged in shard order, so
//! every report is the same whatever the scheduling.

mod census;
pub mod golden;
mod oracle;
mod suites;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::Word;

pub use census::{census_table, census_table_with, CensusRow};
pub use oracle::{
    naive_borders, naive_is_unbordered, naive_period, verify_oracle_equivalence, RandomSample,
};
pub use suites::{
    fb_pairs, verify_descent, verify_lemma_suites, verify_pair_lemmas, verify_palindrome_theorem,
    verify_theorem_main, verify_theorem_main_with, verify_traces, verify_word_lemmas, LemmaBounds,
};

/// Largest length any exhaustive routine accepts.
pub const MAX_BOUND: usize = 22;

/// Counterexamples kept per report; the total is still counted.
pub const FAILURE_CAP: usize = 10;

const SHARD_BITS: usize = 8;

/// All `2^n` words of length `n`, in lexicographic order with `0 < 1`.
pub fn enumerate_words(n: usize) -> Result<impl Iterator<Item = Word>> {
    if n == 0 || n > 63 {
        return Err(Error::BoundOutOfRange {
            bound: n,
            min: 1,
            max: 63,
        });
    }
    Ok((0..1u64 << n).map(move |bits| Word::from_bits(bits, n)))
}

pub(crate) fn check_bound(bound: usize, min: usize) -> Result<()> {
    if (min..=MAX_BOUND).contains(&bound) {
        Ok(())
    } else {
        Err(Error::BoundOutOfRange {
            bound,
            min,
            max: MAX_BOUND,
        })
    }
}

/// A contiguous block of the words of one length, fixed by a common prefix.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Shard {
    pub n: usize,
    start: u64,
    end: u64,
}

impl Shard {
    pub fn words(self) -> impl Iterator<Item = Word> {
        (self.start..self.end).map(move |bits| Word::from_bits(bits, self.n))
    }
}

/// Shards covering every word whose length lies in `lengths`, in
/// (length, lexicographic) order.
pub(crate) fn shards(lengths: RangeInclusive<usize>) -> Vec<Shard> {
    let mut out = Vec::new();
    for n in lengths {
        let bits = n.min(SHARD_BITS);
        let width = 1u64 << (n - bits);
        for prefix in 0..1u64 << bits {
            out.push(Shard {
                n,
                start: prefix * width,
                end: (prefix + 1) * width,
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub observed: String,
    pub expected: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: observed {}, expected {}",
            self.input, self.observed, self.expected
        )
    }
}

/// Outcome of one verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub bound: usize,
    pub items_checked: u64,
    pub failure_count: u64,
    /// The first [`FAILURE_CAP`] failures in enumeration order.
    pub failures: Vec<Counterexample>,
    /// Named counters, e.g. how often each descent case occurred.
    pub tallies: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} (bound {}, {} checked, {} failures)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.bound,
            self.items_checked,
            self.failure_count
        )?;
        for (k, v) in &self.tallies {
            write!(f, " {k}={v}")?;
        }
        for c in &self.failures {
            write!(f, "\n  {c}")?;
        }
        Ok(())
    }
}

/// Accumulates one shard's worth of checks.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    items: u64,
    failure_count: u64,
    failures: Vec<Counterexample>,
    counters: BTreeMap<String, u64>,
}

impl Tally {
    pub fn item(&mut self) {
        self.items += 1;
    }

    pub fn bump(&mut self, key: &str) {
        *self.counters.entry(key.to_string()).or_default() += 1;
    }

    pub fn clear_items(&mut self) {
        self.items = 0;
    }

    pub fn set(&mut self, key: &str, value: u64) {
        self.counters.insert(key.to_string(), value);
    }

    pub fn fail(
        &mut self,
        input: impl fmt::Display,
        observed: impl fmt::Display,
        expected: impl fmt::Display,
    ) {
        self.failure_count += 1;
        if self.failures.len() < FAILURE_CAP {
            self.failures.push(Counterexample {
                input: input.to_string(),
                observed: observed.to_string(),
                expected: expected.to_string(),
            });
        }
    }

    /// Records a failure unless `ok`.
    pub fn expect(
        &mut self,
        ok: bool,
        input: impl fmt::Display,
        observed: impl fmt::Display,
        expected: impl fmt::Display,
    ) {
        if !ok {
            self.fail(input, observed, expected);
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.items += other.items;
        self.failure_count += other.failure_count;
        let room = FAILURE_CAP.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        for (k, v) in other.counters {
            *self.counters.entry(k).or_default() += v;
        }
        self
    }

    pub fn merge_all(parts: impl IntoIterator<Item = Tally>) -> Tally {
        parts.into_iter().fold(Tally::default(), Tally::merge)
    }

    pub fn report(self, suite: &str, bound: usize) -> VerificationReport {
        VerificationReport {
            suite: suite.to_string(),
            bound,
            items_checked: self.items,
            failure_count: self.failure_count,
            failures: self.failures,
            tallies: self.counters,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_examples() {
        let one: Vec<String> = enumerate_words(1).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(one, ["0", "1"]);
        let two: Vec<String> = enumerate_words(2).unwrap().map(|w| w.to_string()).collect();
        assert_eq!(two, ["00", "01", "10", "11"]);
        assert_eq!(enumerate_words(3).unwrap().count(), 8);
        assert!(enumerate_words(0).is_err());
    }

    #[test]
    fn shards_partition_word_space_in_order() {
        for n in [1, 5, 8, 11] {
            let from_shards: Vec<Word> = shards(n..=n).into_iter().flat_map(Shard::words).collect();
            let direct: Vec<Word> = enumerate_words(n).unwrap().collect();
            assert_eq!(from_shards, direct);
        }
    }

    #[test]
    fn tally_caps_failures_but_counts_all() {
        let parts = (0..25).map(|i| {
            let mut t = Tally::default();
            t.item();
            t.fail(i, "x", "y");
            t
        });
        let r = Tally::merge_all(parts).report("s", 1);
        assert_eq!(r.items_checked, 25);
        assert_eq!(r.failure_count, 25);
        assert_eq!(r.failures.len(), FAILURE_CAP);
        assert_eq!(r.failures[0].input, "0");
        assert!(!r.passed());
    }
}
