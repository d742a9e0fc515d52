//! Fully bordered words: binary words of length at least two with exactly two
//! unbordered conjugates, and the pairs `(u, v)` such that `uv` and `vu` are
//! those two conjugates.

mod descent;
mod family;

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::border::prefix_function_into;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

pub use descent::{derive_trace, descend, descent_chain, ChainLink, DescentCase, DescentResult};
pub use family::{extend_u, extend_v, generate_f, swap, DerivationStep, DerivationTrace, Family};

/// An ordered pair of words, the objects the family F is made of.
///
/// Pairs order by `|uv|`, then `uv`, then `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pair {
    pub u: Word,
    pub v: Word,
}

impl Pair {
    pub fn new(u: Word, v: Word) -> Pair {
        Pair { u, v }
    }

    pub fn base() -> Pair {
        Pair::new(Word::letter(Letter::Zero), Word::letter(Letter::One))
    }

    pub fn total_len(&self) -> usize {
        self.u.len() + self.v.len()
    }

    pub fn uv(&self) -> Word {
        self.u.concat(&self.v)
    }

    pub fn vu(&self) -> Word {
        self.v.concat(&self.u)
    }

    pub fn swapped(&self) -> Pair {
        Pair::new(self.v.clone(), self.u.clone())
    }

    /// `(0,1)` or `(1,0)`.
    pub fn is_base(&self) -> bool {
        self.u.len() == 1 && self.v.len() == 1 && self.u != self.v
    }

    fn not_fb(&self) -> Error {
        Error::NotFullyBordered {
            u: self.u.to_string(),
            v: self.v.to_string(),
        }
    }
}

impl Ord for Pair {
    fn cmp(&self, other: &Pair) -> Ordering {
        self.total_len()
            .cmp(&other.total_len())
            .then_with(|| {
                let a = self.u.letters().iter().chain(self.v.letters());
                a.cmp(other.u.letters().iter().chain(other.v.letters()))
            })
            .then_with(|| self.u.cmp(&other.u))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Pair) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// A word together with the rotation points whose conjugates are unbordered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugateCensus {
    pub word: Word,
    pub unbordered_points: Vec<usize>,
}

impl ConjugateCensus {
    pub fn count(&self) -> usize {
        self.unbordered_points.len()
    }
}

/// Reusable buffers for census computations in hot loops.
#[derive(Default)]
pub struct CensusScratch {
    doubled: Vec<Letter>,
    pi: Vec<usize>,
}

impl CensusScratch {
    /// Unbordered points of `s`, stopping once more than `limit` are found.
    pub fn unbordered_points(&mut self, s: &[Letter], limit: usize) -> Vec<usize> {
        let n = s.len();
        self.doubled.clear();
        self.doubled.extend_from_slice(s);
        self.doubled.extend_from_slice(s);
        let mut points = Vec::new();
        for m in 0..n {
            prefix_function_into(&self.doubled[m..m + n], &mut self.pi);
            if self.pi[n - 1] == 0 {
                points.push(m);
                if points.len() > limit {
                    break;
                }
            }
        }
        points
    }

    pub fn count_unbordered(&mut self, s: &[Letter]) -> usize {
        self.unbordered_points(s, usize::MAX).len()
    }

    /// Fully-bordered test that bails out at the third unbordered conjugate.
    pub fn is_fully_bordered(&mut self, s: &[Letter]) -> bool {
        s.len() > 1 && self.unbordered_points(s, 2).len() == 2
    }

    /// `Some(|u|)` iff `s = uv` for a fully bordered pair `(u, v)`.
    pub fn fb_split(&mut self, s: &[Letter]) -> Option<usize> {
        if s.len() < 2 {
            return None;
        }
        // cheap reject: uv itself must be unbordered
        prefix_function_into(s, &mut self.pi);
        if self.pi[s.len() - 1] != 0 {
            return None;
        }
        match self.unbordered_points(s, 2).as_slice() {
            [0, m] => Some(*m),
            _ => None,
        }
    }
}

pub fn census(w: &Word) -> Result<ConjugateCensus> {
    w.ensure_nonempty()?;
    let points = CensusScratch::default().unbordered_points(w.letters(), usize::MAX);
    Ok(ConjugateCensus {
        word: w.clone(),
        unbordered_points: points,
    })
}

pub fn is_fully_bordered(w: &Word) -> Result<bool> {
    w.ensure_nonempty()?;
    Ok(CensusScratch::default().is_fully_bordered(w.letters()))
}

/// The fully bordered pair read off the two unbordered points `m1 < m2` of `w`:
/// `uv` is the conjugate at `m1` and `|u| = m2 - m1`.
pub fn fb_pair_of(w: &Word) -> Result<Option<FbPair>> {
    w.ensure_nonempty()?;
    if w.len() < 2 {
        return Ok(None);
    }
    let points = CensusScratch::default().unbordered_points(w.letters(), 2);
    Ok(match points.as_slice() {
        &[m1, m2] => {
            let uv = crate::conjugate::rotate(w, m1);
            let split = m2 - m1;
            Some(FbPair {
                u: uv.prefix(split),
                v: uv.suffix(uv.len() - split),
            })
        }
        _ => None,
    })
}

pub fn is_fb_pair(u: &Word, v: &Word) -> Result<bool> {
    u.ensure_nonempty()?;
    v.ensure_nonempty()?;
    Ok(CensusScratch::default().fb_split(u.concat(v).letters()) == Some(u.len()))
}

/// F-membership decided by the census. Equivalent to membership in F for
/// every pair, checked exhaustively against generated families in the harness.
pub fn f_membership(u: &Word, v: &Word, max_oracle_length: usize) -> Result<bool> {
    let len = u.len() + v.len();
    if len > max_oracle_length {
        return Err(Error::BoundExceeded {
            len,
            bound: max_oracle_length,
        });
    }
    if u.is_empty() || v.is_empty() {
        return Ok(false);
    }
    is_fb_pair(u, v)
}

/// A pair certified fully bordered by the census.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FbPair {
    u: Word,
    v: Word,
}

impl FbPair {
    pub fn new(u: Word, v: Word) -> Result<FbPair> {
        if is_fb_pair(&u, &v)? {
            Ok(FbPair { u, v })
        } else {
            Err(Pair::new(u, v).not_fb())
        }
    }

    pub fn u(&self) -> &Word {
        &self.u
    }

    pub fn v(&self) -> &Word {
        &self.v
    }

    pub fn pair(&self) -> Pair {
        Pair::new(self.u.clone(), self.v.clone())
    }

    pub fn swapped(&self) -> FbPair {
        FbPair {
            u: self.v.clone(),
            v: self.u.clone(),
        }
    }
}

impl TryFrom<Pair> for FbPair {
    type Error = Error;

    fn try_from(p: Pair) -> Result<FbPair> {
        FbPair::new(p.u, p.v)
    }
}

impl From<FbPair> for Pair {
    fn from(p: FbPair) -> Pair {
        Pair::new(p.u, p.v)
    }
}

impl fmt::Display for FbPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn census_examples() {
        assert_eq!(census(&w("01")).unwrap().unbordered_points, vec![0, 1]);
        assert_eq!(census(&w("00101")).unwrap().unbordered_points, vec![0, 2]);
        assert!(census(&w("0101")).unwrap().unbordered_points.is_empty());
        assert!(census(&w("000")).unwrap().unbordered_points.is_empty());
        assert_eq!(census(&w("0")).unwrap().unbordered_points, vec![0]);
        assert_eq!(census(&w("")), Err(Error::EmptyWord));
    }

    #[test]
    fn fully_bordered_examples() {
        assert!(is_fully_bordered(&w("01")).unwrap());
        assert!(is_fully_bordered(&w("00101")).unwrap());
        // 001011 has unbordered conjugates at 0, 2 and 4
        assert!(!is_fully_bordered(&w("001011")).unwrap());
        assert_eq!(
            census(&w("001011")).unwrap().unbordered_points,
            vec![0, 2, 4]
        );
        assert!(!is_fully_bordered(&w("0")).unwrap());
    }

    #[test]
    fn fb_pair_examples() {
        let p = fb_pair_of(&w("0011")).unwrap().unwrap();
        assert_eq!((p.u(), p.v()), (&w("00"), &w("11")));
        let p = fb_pair_of(&w("00101")).unwrap().unwrap();
        assert_eq!((p.u(), p.v()), (&w("00"), &w("101")));
        assert_eq!(fb_pair_of(&w("0101")).unwrap(), None);
        // unbordered points of 0010 are 2 and 3
        let p = fb_pair_of(&w("0010")).unwrap().unwrap();
        assert_eq!((p.u(), p.v()), (&w("1"), &w("000")));
    }

    #[test]
    fn is_fb_pair_examples() {
        assert!(is_fb_pair(&w("0"), &w("1")).unwrap());
        assert!(is_fb_pair(&w("00"), &w("101")).unwrap());
        assert!(!is_fb_pair(&w("01"), &w("01")).unwrap());
        // right word, wrong split
        assert!(!is_fb_pair(&w("001"), &w("01")).unwrap());
        assert!(is_fb_pair(&w(""), &w("1")).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(f_membership(&w("00"), &w("101"), 18).unwrap());
        assert!(!f_membership(&w("0"), &w("0"), 18).unwrap());
        assert!(!f_membership(&w("001"), &w("011"), 18).unwrap());
        assert!(f_membership(&w("001"), &w("011"), 5).is_err());
    }

    #[test]
    fn pair_ordering() {
        let mut ps = [
            Pair::new(w("1"), w("00")),
            Pair::new(w("1"), w("0")),
            Pair::new(w("0"), w("1")),
            Pair::new(w("00"), w("1")),
        ];
        ps.sort();
        let shown: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["(0,1)", "(1,0)", "(00,1)", "(1,00)"]);
    }

    #[test]
    fn fb_pair_constructor_checks() {
        assert!(FbPair::new(w("00"), w("101")).is_ok());
        assert!(matches!(
            FbPair::new(w("001"), w("011")),
            Err(Error::NotFullyBordered { .. })
        ));
    }
}
