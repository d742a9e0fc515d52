//! Conjugation, primitivity, Lyndon words and local periodic roots.

use std::cmp::Ordering;

use serde::Serialize;

use crate::border::{period, shortest_border_len};
use crate::error::{Error, Result};
use crate::word::{Letter, Order, Word};

pub fn is_primitive(w: &Word) -> Result<bool> {
    let p = period(w)?;
    Ok(p == w.len() || !w.len().is_multiple_of(p))
}

fn check_point(w: &Word, m: usize) -> Result<()> {
    if m < w.len() {
        Ok(())
    } else {
        Err(Error::PointOutOfRange {
            point: m,
            len: w.len(),
        })
    }
}

/// The conjugate `z^{-1} w z` where `z` is the prefix of length `m`.
pub fn conjugate_at(w: &Word, m: usize) -> Result<Word> {
    check_point(w, m)?;
    Ok(rotate(w, m))
}

pub(crate) fn rotate(w: &Word, m: usize) -> Word {
    let s = w.letters();
    let mut out = Vec::with_capacity(s.len());
    out.extend_from_slice(&s[m..]);
    out.extend_from_slice(&s[..m]);
    Word::from_letters(out)
}

/// Lyndon test on a raw slice, by Duval's scan.
pub(crate) fn is_lyndon_slice(s: &[Letter], o: Order) -> bool {
    if s.is_empty() {
        return false;
    }
    // s is a prefix of a power of s[..j - k]; Lyndon iff that root is all of s
    let mut k = 0;
    for j in 1..s.len() {
        match o.cmp_letters(s[k], s[j]) {
            Ordering::Equal => k += 1,
            Ordering::Less => k = 0,
            Ordering::Greater => return false,
        }
    }
    k == 0
}

/// True iff `w` is primitive and strictly minimal among its conjugates under `o`.
pub fn is_lyndon(w: &Word, o: Order) -> Result<bool> {
    w.ensure_nonempty()?;
    Ok(is_lyndon_slice(w.letters(), o))
}

/// The unique conjugate of the primitive word `w` that is Lyndon under `o`.
pub fn lyndon_conjugate(w: &Word, o: Order) -> Result<Word> {
    if !is_primitive(w)? {
        return Err(Error::NotPrimitive(w.to_string()));
    }
    let n = w.len();
    let doubled = w.concat(w);
    let s = doubled.letters();
    let best = (1..n).fold(0, |best, m| {
        if o.cmp(&s[m..m + n], &s[best..best + n]) == Ordering::Less {
            m
        } else {
            best
        }
    });
    Ok(rotate(w, best))
}

/// Local periodic root of a word at a rotation point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalRoot {
    pub point: usize,
    pub root: Word,
    /// The local period equals the length of the word.
    pub trivial: bool,
}

impl LocalRoot {
    pub fn period(&self) -> usize {
        self.root.len()
    }
}

/// Shortest border of the conjugate at `m`, or the conjugate itself if unbordered.
pub fn local_root(w: &Word, m: usize) -> Result<LocalRoot> {
    check_point(w, m)?;
    let c = rotate(w, m);
    Ok(match shortest_border_len(c.letters()) {
        Some(l) => LocalRoot {
            point: m,
            root: c.prefix(l),
            trivial: false,
        },
        None => LocalRoot {
            point: m,
            root: c,
            trivial: true,
        },
    })
}

/// All points `m` where `u` is a prefix of the conjugate of `w` at `m`.
pub fn cyclic_occurrences(u: &Word, w: &Word) -> Result<Vec<usize>> {
    u.ensure_nonempty()?;
    if u.len() > w.len() {
        return Err(Error::PatternTooLong {
            pattern: u.len(),
            word: w.len(),
        });
    }
    let (n, pat, text) = (w.len(), u.letters(), w.letters());
    Ok((0..n)
        .filter(|&m| pat.iter().enumerate().all(|(i, &l)| text[(m + i) % n] == l))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::border::{borders, is_unbordered};
    use crate::word::w;

    fn naive_is_lyndon(x: &Word, o: Order) -> bool {
        (1..x.len()).all(|m| o.cmp(x.letters(), rotate(x, m).letters()) == Ordering::Less)
    }

    fn naive_is_primitive(x: &Word) -> bool {
        let n = x.len();
        (1..n)
            .filter(|d| n.is_multiple_of(*d))
            .all(|d| x.prefix(d).pow(n / d) != *x)
    }

    #[test]
    fn primitive_examples() {
        assert!(!is_primitive(&w("0101")).unwrap());
        assert!(is_primitive(&w("00101")).unwrap());
        assert!(is_primitive(&w("0")).unwrap());
        assert_eq!(is_primitive(&w("")), Err(Error::EmptyWord));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate_at(&w("00101"), 2).unwrap(), w("10100"));
        assert_eq!(conjugate_at(&w("01"), 1).unwrap(), w("10"));
        assert_eq!(conjugate_at(&w("0011"), 2).unwrap(), w("1100"));
        assert_eq!(conjugate_at(&w("0011"), 0).unwrap(), w("0011"));
        assert_eq!(
            conjugate_at(&w("01"), 2),
            Err(Error::PointOutOfRange { point: 2, len: 2 })
        );
    }

    #[test]
    fn lyndon_examples() {
        assert!(is_lyndon(&w("001"), Order::ZeroFirst).unwrap());
        assert!(is_lyndon(&w("110"), Order::OneFirst).unwrap());
        assert!(!is_lyndon(&w("0101"), Order::ZeroFirst).unwrap());
        assert!(is_lyndon(&w("0"), Order::OneFirst).unwrap());
        assert_eq!(
            lyndon_conjugate(&w("100"), Order::ZeroFirst).unwrap(),
            w("001")
        );
        assert_eq!(
            lyndon_conjugate(&w("100"), Order::OneFirst).unwrap(),
            w("100")
        );
        assert_eq!(lyndon_conjugate(&w("0"), Order::ZeroFirst).unwrap(), w("0"));
        assert!(matches!(
            lyndon_conjugate(&w("0101"), Order::ZeroFirst),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn local_root_examples() {
        let r = local_root(&w("0011"), 1).unwrap();
        assert_eq!((r.root, r.trivial), (w("0"), false));
        let r = local_root(&w("0011"), 2).unwrap();
        assert_eq!((r.root, r.trivial), (w("1100"), true));
        let r = local_root(&w("00101"), 0).unwrap();
        assert_eq!((r.root, r.trivial), (w("00101"), true));
        assert!(local_root(&w("0011"), 4).is_err());
    }

    #[test]
    fn cyclic_occurrence_examples() {
        assert_eq!(
            cyclic_occurrences(&w("0"), &w("0010")).unwrap(),
            vec![0, 1, 3]
        );
        assert_eq!(cyclic_occurrences(&w("00"), &w("0011")).unwrap(), vec![0]);
        assert_eq!(cyclic_occurrences(&w("01"), &w("01")).unwrap(), vec![0]);
        assert_eq!(cyclic_occurrences(&w("10"), &w("0011")).unwrap(), vec![3]);
        assert!(cyclic_occurrences(&w("011"), &w("01")).is_err());
        assert!(cyclic_occurrences(&w(""), &w("01")).is_err());
    }

    #[test]
    fn lyndon_and_primitive_match_naive_up_to_12() {
        for n in 1..=12 {
            for bits in 0..1u64 << n {
                let x = Word::from_bits(bits, n);
                assert_eq!(is_primitive(&x).unwrap(), naive_is_primitive(&x), "{x}");
                for o in Order::BOTH {
                    assert_eq!(is_lyndon(&x, o).unwrap(), naive_is_lyndon(&x, o), "{x} {o}");
                }
            }
        }
    }

    #[test]
    fn local_root_invariants_up_to_16() {
        for n in 1..=16 {
            for bits in 0..1u64 << n {
                let x = Word::from_bits(bits, n);
                let primitive = is_primitive(&x).unwrap();
                for m in 0..n {
                    let r = local_root(&x, m).unwrap();
                    assert!(is_unbordered(&r.root).unwrap());
                    assert_eq!(r.trivial, r.period() == n);
                    if primitive {
                        assert!(2 * r.period() < n || r.period() == n, "{x} at {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn lyndon_conjugate_is_unbordered_up_to_14() {
        for n in 2..=14 {
            for bits in 0..1u64 << n {
                let x = Word::from_bits(bits, n);
                if !x.contains_both_letters() || !is_primitive(&x).unwrap() {
                    continue;
                }
                for o in Order::BOTH {
                    let l = lyndon_conjugate(&x, o).unwrap();
                    assert!(is_lyndon(&l, o).unwrap());
                    assert!(borders(&l).unwrap().is_empty(), "{x}");
                }
            }
        }
    }
}
