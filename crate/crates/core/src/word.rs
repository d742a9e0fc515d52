//! Binary words, letters and the two lexicographic orders.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Zero,
    One,
}

impl Letter {
    pub fn flip(self) -> Letter {
        match self {
            Letter::Zero => Letter::One,
            Letter::One => Letter::Zero,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
        }
    }

    pub fn from_char(ch: char) -> Option<Letter> {
        match ch {
            '0' => Some(Letter::Zero),
            '1' => Some(Letter::One),
            _ => None,
        }
    }
}

/// One of the two lexicographic orders on binary words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Order {
    /// `0 < 1`
    ZeroFirst,
    /// `1 < 0`
    OneFirst,
}

impl Order {
    pub const BOTH: [Order; 2] = [Order::ZeroFirst, Order::OneFirst];

    pub fn opposite(self) -> Order {
        match self {
            Order::ZeroFirst => Order::OneFirst,
            Order::OneFirst => Order::ZeroFirst,
        }
    }

    /// The letter that is minimal under this order.
    pub fn smaller(self) -> Letter {
        match self {
            Order::ZeroFirst => Letter::Zero,
            Order::OneFirst => Letter::One,
        }
    }

    pub fn larger(self) -> Letter {
        self.smaller().flip()
    }

    pub fn cmp_letters(self, a: Letter, b: Letter) -> Ordering {
        match self {
            Order::ZeroFirst => a.cmp(&b),
            Order::OneFirst => b.cmp(&a),
        }
    }

    /// Lexicographic comparison; a proper prefix is smaller.
    pub fn cmp(self, a: &[Letter], b: &[Letter]) -> Ordering {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.cmp_letters(x, y))
            .find(|o| o.is_ne())
            .unwrap_or_else(|| a.len().cmp(&b.len()))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Order::ZeroFirst => "0<1",
            Order::OneFirst => "1<0",
        })
    }
}

/// An immutable finite word over `{0, 1}`.
///
/// The derived ordering is lexicographic with `0 < 1`, shorter prefixes first.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl Into<Vec<Letter>>) -> Word {
        Word(letters.into())
    }

    /// The word of length `len` whose letters are the binary digits of `bits`,
    /// most significant first.
    pub fn from_bits(bits: u64, len: usize) -> Word {
        debug_assert!(len <= 64);
        Word(
            (0..len)
                .map(|i| {
                    if (bits >> (len - 1 - i)) & 1 == 1 {
                        Letter::One
                    } else {
                        Letter::Zero
                    }
                })
                .collect(),
        )
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.len() - len..].to_vec())
    }

    /// `self[start..end]`
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Vec::with_capacity(self.len() + other.len());
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn concat_all<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        Word(
            parts
                .into_iter()
                .flat_map(|w| w.0.iter().copied())
                .collect(),
        )
    }

    pub fn push(&self, l: Letter) -> Word {
        let mut out = self.0.clone();
        out.push(l);
        Word(out)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.ends_with(&self.0)
    }

    pub fn is_factor_of(&self, other: &Word) -> bool {
        self.is_empty() || other.0.windows(self.len()).any(|w| w == self.0.as_slice())
    }

    pub fn contains_both_letters(&self) -> bool {
        self.0.contains(&Letter::Zero) && self.0.contains(&Letter::One)
    }

    pub(crate) fn ensure_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyWord)
        } else {
            Ok(())
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .enumerate()
            .map(|(pos, ch)| Letter::from_char(ch).ok_or(Error::Parse { pos, ch }))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0
            .iter()
            .try_for_each(|l| fmt::Write::write_char(f, l.to_char()))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses a word literal, panicking on bad input. Intended for tests and constants.
pub fn w(s: &str) -> Word {
    s.parse()
        .unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}
