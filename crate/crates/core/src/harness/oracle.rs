//! Quadratic definitions used as oracles. Nothing here touches the
//! prefix-function code in [`crate::border`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_bound, shards, Tally, VerificationReport};
use crate::border::{borders, is_unbordered, period};
use crate::error::Result;
use crate::par::{map_slice, Exec};
use crate::word::{Letter, Word};

fn prefix_eq_suffix(s: &[Letter], l: usize) -> bool {
    s[..l] == s[s.len() - l..]
}

pub fn naive_is_unbordered(w: &Word) -> Result<bool> {
    w.ensure_nonempty()?;
    let s = w.letters();
    Ok(!(1..s.len()).any(|l| prefix_eq_suffix(s, l)))
}

pub fn naive_borders(w: &Word) -> Result<Vec<Word>> {
    w.ensure_nonempty()?;
    let s = w.letters();
    Ok((1..s.len())
        .filter(|&l| prefix_eq_suffix(s, l))
        .map(|l| w.prefix(l))
        .collect())
}

pub fn naive_period(w: &Word) -> Result<usize> {
    w.ensure_nonempty()?;
    let s = w.letters();
    Ok((1..=s.len())
        .find(|&p| (0..s.len() - p).all(|i| s[i + p] == s[i]))
        .unwrap_or(s.len()))
}

/// Parameters for the random half of the oracle-equivalence check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSample {
    pub count: usize,
    pub max_len: usize,
    pub seed: u64,
}

impl Default for RandomSample {
    fn default() -> RandomSample {
        RandomSample {
            count: 10_000,
            max_len: 64,
            seed: 0x5eed_f00d,
        }
    }
}

fn compare(w: &Word, t: &mut Tally) {
    t.item();
    let fast = borders(w).expect("nonempty");
    let slow = naive_borders(w).expect("nonempty");
    t.expect(
        fast == slow,
        w,
        format!("borders {fast:?}"),
        format!("{slow:?}"),
    );
    let (p, q) = (
        period(w).expect("nonempty"),
        naive_period(w).expect("nonempty"),
    );
    t.expect(p == q, w, format!("period {p}"), q);
    let (a, b) = (
        is_unbordered(w).expect("nonempty"),
        naive_is_unbordered(w).expect("nonempty"),
    );
    t.expect(a == b, w, format!("unbordered {a}"), b);
}

/// Border-chain borders, periods and unborderedness against the quadratic
/// scans: every word up to `max_n`, then a seeded random sample.
pub fn verify_oracle_equivalence(
    max_n: usize,
    sample: RandomSample,
    exec: Exec,
) -> Result<VerificationReport> {
    check_bound(max_n, 1)?;
    let exhaustive = map_slice(exec, &shards(1..=max_n), |shard| {
        let mut t = Tally::default();
        shard.words().for_each(|w| compare(&w, &mut t));
        t
    });
    let mut rng = ChaCha8Rng::seed_from_u64(sample.seed);
    let random: Vec<Word> = (0..sample.count)
        .map(|_| {
            let len = rng.gen_range(1..=sample.max_len.max(1));
            Word::from_letters(
                (0..len)
                    .map(|_| {
                        if rng.gen::<bool>() {
                            Letter::One
                        } else {
                            Letter::Zero
                        }
                    })
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let sampled = map_slice(exec, &random, |w| {
        let mut t = Tally::default();
        compare(w, &mut t);
        t
    });
    let mut tally = Tally::merge_all(exhaustive.into_iter().chain(sampled));
    tally.set("random_words", sample.count as u64);
    Ok(tally.report("oracle-equivalence", max_n))
}
