use crate::word::Word;

pub fn is_palindrome(w: &Word) -> bool {
    let s = w.letters();
    s.iter().eq(s.iter().rev())
}

/// Every split index `i` such that `w[..i]` and `w[i..]` are both palindromes.
/// Empty factors count as palindromes.
pub fn two_palindrome_splits(w: &Word) -> Vec<usize> {
    let s = w.letters();
    let pal = |x: &[_]| x.iter().eq(x.iter().rev());
    (0..=s.len())
        .filter(|&i| pal(&s[..i]) && pal(&s[i..]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn palindromes() {
        assert!(is_palindrome(&w("")));
        assert!(is_palindrome(&w("00100")));
        assert!(!is_palindrome(&w("001")));
    }

    #[test]
    fn splits() {
        assert!(two_palindrome_splits(&w("00101")).contains(&2));
        assert_eq!(two_palindrome_splits(&w("00101")), vec![2]);
        assert_eq!(two_palindrome_splits(&w("01")), vec![1]);
        assert_eq!(two_palindrome_splits(&w("0")), vec![0, 1]);
        assert_eq!(two_palindrome_splits(&w("")), vec![0]);
    }
}
