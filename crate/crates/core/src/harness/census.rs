use std::collections::BTreeMap;

use serde::Serialize;

use super::{check_bound, shards};
use crate::conjugate::is_lyndon_slice;
use crate::error::Result;
use crate::fully_bordered::{generate_f, CensusScratch};
use crate::par::{map_slice, Exec};
use crate::word::Order;

/// Counts for all words of one length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub fb_words: u64,
    /// Fully bordered words that are Lyndon with `0 < 1`, one per conjugacy class.
    pub fb_classes: u64,
    /// Generated F members `(u, v)` with `|uv| = n`.
    pub f_pairs: u64,
    /// Number of unbordered conjugates -> number of words.
    pub unbordered_histogram: BTreeMap<usize, u64>,
}

impl CensusRow {
    /// Arithmetic invariants that do not hold, as human-readable lines.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let two = self.unbordered_histogram.get(&2).copied().unwrap_or(0);
        if self.fb_words != two {
            out.push(format!(
                "n={}: fb_words {} != histogram[2] {two}",
                self.n, self.fb_words
            ));
        }
        if self.fb_words != self.n as u64 * self.fb_classes {
            out.push(format!(
                "n={}: fb_words {} != n * fb_classes {}",
                self.n, self.fb_words, self.fb_classes
            ));
        }
        if self.f_pairs != 2 * self.fb_classes {
            out.push(format!(
                "n={}: f_pairs {} != 2 * fb_classes {}",
                self.n, self.f_pairs, self.fb_classes
            ));
        }
        let total: u64 = self.unbordered_histogram.values().sum();
        if total != 1u64 << self.n {
            out.push(format!("n={}: histogram covers {total} words", self.n));
        }
        out
    }

    fn merge(mut self, other: CensusRow) -> CensusRow {
        self.fb_words += other.fb_words;
        self.fb_classes += other.fb_classes;
        for (k, v) in other.unbordered_histogram {
            *self.unbordered_histogram.entry(k).or_default() += v;
        }
        self
    }
}

pub fn census_table(max_n: usize) -> Result<Vec<CensusRow>> {
    census_table_with(max_n, Exec::default())
}

/// One row per length `2..=max_n`, by full enumeration.
pub fn census_table_with(max_n: usize, exec: Exec) -> Result<Vec<CensusRow>> {
    check_bound(max_n, 2)?;
    let family = generate_f(max_n)?;
    let all = shards(2..=max_n);
    let partial = map_slice(exec, &all, |shard| {
        let mut scratch = CensusScratch::default();
        let mut row = CensusRow {
            n: shard.n,
            ..CensusRow::default()
        };
        for w in shard.words() {
            let count = scratch.count_unbordered(w.letters());
            *row.unbordered_histogram.entry(count).or_default() += 1;
            if count == 2 {
                row.fb_words += 1;
                if is_lyndon_slice(w.letters(), Order::ZeroFirst) {
                    row.fb_classes += 1;
                }
            }
        }
        row
    });
    let mut rows: Vec<CensusRow> = Vec::new();
    for part in partial {
        match rows.last_mut() {
            Some(last) if last.n == part.n => *last = std::mem::take(last).merge(part),
            _ => rows.push(part),
        }
    }
    for row in &mut rows {
        row.f_pairs = family.count_of_length(row.n) as u64;
    }
    Ok(rows)
}
