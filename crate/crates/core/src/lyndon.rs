//! Lyndon words and the Chen-Fox-Lyndon factorization.
//!
//! A Lyndon word is a primitive word that is strictly smallest in its
//! conjugacy class. Every non-empty word factors uniquely into a
//! lexicographically non-increasing product of Lyndon words; we compute
//! that factorization with Duval's left-to-right algorithm and keep an
//! exhaustive cut-enumeration oracle around to cross-check it.

use num::bigint::BigInt;
use num::BigUint;

use crate::error::{Error, Result};
use crate::words::{words_of_length, Alphabet, Word};

/// Default length bound for [`cfl_oracle`]; cut enumeration is
/// exponential in principle, so the oracle refuses longer inputs unless
/// the caller raises the bound.
pub const DEFAULT_ORACLE_BOUND: usize = 14;

/// The Chen-Fox-Lyndon factorization of a word: a non-increasing
/// sequence of Lyndon factors whose concatenation is the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    source: Word,
    factors: Vec<Word>,
}

impl Factorization {
    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Factors as strings joined by a middle dot, e.g. `abcc·ab`.
    pub fn display_dotted(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("\u{00b7}")
    }

    /// Checks the three defining invariants; used by tests and the oracle.
    pub fn validate(&self) -> Result<()> {
        let mut cat: Vec<u8> = Vec::with_capacity(self.source.len());
        for f in &self.factors {
            cat.extend_from_slice(f.letters());
        }
        if cat != self.source.letters() {
            return Err(Error::Inconsistency(
                "factors do not concatenate to the source".into(),
            ));
        }
        for f in &self.factors {
            if !is_lyndon_slice(f.letters()) {
                return Err(Error::Inconsistency(format!("factor {f} is not Lyndon")));
            }
        }
        for pair in self.factors.windows(2) {
            if pair[0].letters() < pair[1].letters() {
                return Err(Error::Inconsistency(format!(
                    "factors {} and {} are increasing",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(())
    }
}

pub(crate) fn is_lyndon_slice(s: &[u8]) -> bool {
    // strictly smaller than every proper suffix
    !s.is_empty() && (1..s.len()).all(|i| s < &s[i..])
}

/// Whether `w` is a Lyndon word: primitive and the smallest rotation in
/// its conjugacy class.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord { op: "is_lyndon" });
    }
    Ok(is_lyndon_slice(w.letters()))
}

pub(crate) fn duval_slice(s: &[u8]) -> Vec<&[u8]> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < s.len() {
        let (mut j, mut k) = (i + 1, i);
        while j < s.len() && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(&s[i..i + j - k]);
            i += j - k;
        }
    }
    out
}

/// The unique non-increasing Lyndon factorization, computed in linear
/// time. The empty word factors into an empty list.
pub fn cfl_factorize(w: &Word) -> Factorization {
    let factors = duval_slice(w.letters())
        .into_iter()
        .map(|f| Word::from_slice(w.alphabet(), f))
        .collect();
    Factorization {
        source: w.clone(),
        factors,
    }
}

/// Test oracle for the factorization: enumerates every way to cut `w`
/// into non-increasing Lyndon factors and demands exactly one exists.
///
/// Refuses words longer than `bound` (see [`DEFAULT_ORACLE_BOUND`]).
/// Finding zero or several factorizations is reported as an internal
/// inconsistency: it would contradict the uniqueness the rest of the
/// crate relies on.
pub fn cfl_oracle(w: &Word, bound: usize) -> Result<Factorization> {
    if w.len() > bound {
        return Err(Error::BudgetExceeded(format!(
            "oracle input of length {} exceeds bound {}",
            w.len(),
            bound
        )));
    }
    let s = w.letters();
    let mut found: Vec<Vec<&[u8]>> = Vec::new();
    let mut stack: Vec<&[u8]> = Vec::new();
    enumerate_cuts(s, 0, None, &mut stack, &mut found);
    match found.len() {
        1 => {
            let factors = found
                .pop()
                .unwrap()
                .into_iter()
                .map(|f| Word::from_slice(w.alphabet(), f))
                .collect();
            Ok(Factorization {
                source: w.clone(),
                factors,
            })
        }
        0 => Err(Error::Inconsistency(format!(
            "no non-increasing Lyndon factorization of {w:?}"
        ))),
        k => Err(Error::Inconsistency(format!(
            "{k} non-increasing Lyndon factorizations of {w:?}"
        ))),
    }
}

fn enumerate_cuts<'a>(
    s: &'a [u8],
    at: usize,
    prev: Option<&'a [u8]>,
    stack: &mut Vec<&'a [u8]>,
    found: &mut Vec<Vec<&'a [u8]>>,
) {
    if at == s.len() {
        found.push(stack.clone());
        return;
    }
    for end in at + 1..=s.len() {
        let f = &s[at..end];
        if let Some(p) = prev {
            if f > p {
                continue;
            }
        }
        if is_lyndon_slice(f) {
            stack.push(f);
            enumerate_cuts(s, end, Some(f), stack, found);
            stack.pop();
        }
    }
}

/// Splits a Lyndon word of length >= 2 as `l = r·s` where `s` is the
/// longest proper Lyndon suffix. Both parts are Lyndon and
/// `r < rs < s` lexicographically.
pub fn standard_factorization(l: &Word) -> Result<(Word, Word)> {
    if l.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "standard factorization needs length >= 2, got {:?}",
            l.to_string()
        )));
    }
    if !is_lyndon_slice(l.letters()) {
        return Err(Error::NotLyndon(l.to_string()));
    }
    let s = l.letters();
    for i in 1..s.len() {
        if is_lyndon_slice(&s[i..]) {
            let r = Word::from_slice(l.alphabet(), &s[..i]);
            let suf = Word::from_slice(l.alphabet(), &s[i..]);
            debug_assert!(is_lyndon_slice(r.letters()));
            debug_assert!(r.letters() < s && s < suf.letters());
            return Ok((r, suf));
        }
    }
    // a single trailing letter is always Lyndon, so this is unreachable
    Err(Error::Inconsistency(format!(
        "no proper Lyndon suffix in {l:?}"
    )))
}

/// All Lyndon words over `n` letters of length at most `max_len`, in
/// lexicographic order (iterative next-word generation).
pub fn generate_lyndon(n: usize, max_len: usize) -> Result<Vec<Word>> {
    let alphabet = Alphabet::new(n)?;
    if max_len == 0 {
        return Err(Error::InvalidArgument(
            "max_len must be at least 1".into(),
        ));
    }
    let top = (n - 1) as u8;
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(Word::from_slice(alphabet, &w));
        // extend periodically to max_len, then bump the last non-top letter
        let period = w.len();
        while w.len() < max_len {
            let next = w[w.len() % period];
            w.push(next);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    Ok(out)
}

/// Mobius function by trial division.
pub fn mobius(m: u64) -> i8 {
    assert!(m >= 1, "mobius is defined for m >= 1");
    let mut x = m;
    let mut res: i8 = 1;
    let mut p = 2u64;
    while p * p <= x {
        if x % p == 0 {
            x /= p;
            if x % p == 0 {
                return 0;
            }
            res = -res;
        }
        p += 1;
    }
    if x > 1 {
        res = -res;
    }
    res
}

/// Number of Lyndon words of length exactly `d` over `n` letters:
/// `(1/d) * sum over e | d of mobius(e) * n^(d/e)`.
pub fn witt_count(n: usize, d: usize) -> BigUint {
    assert!(n >= 1 && d >= 1, "witt_count needs n >= 1 and d >= 1");
    let n = BigInt::from(n);
    let mut sum = BigInt::from(0);
    for e in 1..=d as u64 {
        if d as u64 % e == 0 {
            let term = n.pow((d as u64 / e) as u32);
            match mobius(e) {
                1 => sum += term,
                -1 => sum -= term,
                _ => {}
            }
        }
    }
    let (q, r) = (sum.clone() / d, sum % d);
    assert!(r == BigInt::from(0), "Witt sum must be divisible by d");
    q.to_biguint().expect("Witt count is non-negative")
}

/// Filter-based generation used to cross-check [`generate_lyndon`] and
/// [`witt_count`] in tests.
pub fn lyndon_words_by_filter(n: usize, max_len: usize) -> Result<Vec<Word>> {
    let alphabet = Alphabet::new(n)?;
    let mut out = Vec::new();
    for len in 1..=max_len {
        for w in words_of_length(alphabet, len) {
            if is_lyndon_slice(w.letters()) {
                out.push(w);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w3(s: &str) -> Word {
        Word::parse(s, Alphabet::new(3).unwrap()).unwrap()
    }

    fn strs(v: &[Word]) -> Vec<String> {
        v.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn is_lyndon_examples() {
        assert!(is_lyndon(&w3("aab")).unwrap());
        assert!(!is_lyndon(&w3("aa")).unwrap());
        assert!(!is_lyndon(&w3("ba")).unwrap());
        assert!(is_lyndon(&Word::empty(Alphabet::new(2).unwrap())).is_err());
    }

    #[test]
    fn is_lyndon_matches_definitional_route() {
        // primitive + smallest in conjugacy class, over all ternary words
        for len in 1..=7 {
            for w in words_of_length(Alphabet::new(3).unwrap(), len) {
                let definitional = w.is_primitive().unwrap()
                    && w.conjugacy_class().unwrap()[0] == w;
                assert_eq!(is_lyndon(&w).unwrap(), definitional, "word {w}");
            }
        }
    }

    #[test]
    fn cfl_examples() {
        assert_eq!(strs(cfl_factorize(&w3("abccab")).factors()), ["abcc", "ab"]);
        assert_eq!(strs(cfl_factorize(&w3("cba")).factors()), ["c", "b", "a"]);
        assert_eq!(strs(cfl_factorize(&w3("aaa")).factors()), ["a", "a", "a"]);
        let empty = Word::empty(Alphabet::new(3).unwrap());
        assert!(cfl_factorize(&empty).factors().is_empty());
        cfl_factorize(&empty).validate().unwrap();
    }

    #[test]
    fn oracle_examples() {
        let f = cfl_oracle(&w3("abccab"), DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(strs(f.factors()), ["abcc", "ab"]);
        let f = cfl_oracle(&w3("ba"), DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(strs(f.factors()), ["b", "a"]);
        let f = cfl_oracle(&w3("ab"), DEFAULT_ORACLE_BOUND).unwrap();
        assert_eq!(strs(f.factors()), ["ab"]);
    }

    #[test]
    fn oracle_refuses_long_input() {
        let w = Word::new(Alphabet::new(2).unwrap(), vec![0; 15]).unwrap();
        assert!(matches!(
            cfl_oracle(&w, DEFAULT_ORACLE_BOUND),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn standard_factorization_examples() {
        let split = |s: &str| {
            let (r, t) = standard_factorization(&w3(s)).unwrap();
            (r.to_string(), t.to_string())
        };
        assert_eq!(split("aab"), ("a".into(), "ab".into()));
        assert_eq!(split("abcc"), ("a".into(), "bcc".into()));
        assert_eq!(split("ab"), ("a".into(), "b".into()));
        assert!(matches!(
            standard_factorization(&w3("ba")),
            Err(Error::NotLyndon(_))
        ));
        assert!(standard_factorization(&w3("a")).is_err());
    }

    #[test]
    fn generation_examples() {
        assert_eq!(strs(&generate_lyndon(2, 2).unwrap()), ["a", "ab", "b"]);
        assert_eq!(
            strs(&generate_lyndon(2, 3).unwrap()),
            ["a", "aab", "ab", "abb", "b"]
        );
        assert_eq!(strs(&generate_lyndon(1, 3).unwrap()), ["a"]);
    }

    #[test]
    fn generation_matches_filter() {
        for n in [1usize, 2, 3] {
            for max_len in 1..=7 {
                assert_eq!(
                    generate_lyndon(n, max_len).unwrap(),
                    lyndon_words_by_filter(n, max_len).unwrap(),
                    "n={n} max_len={max_len}"
                );
            }
        }
    }

    #[test]
    fn witt_examples() {
        assert_eq!(witt_count(2, 1), BigUint::from(2u32));
        assert_eq!(witt_count(2, 3), BigUint::from(2u32));
        assert_eq!(witt_count(3, 2), BigUint::from(3u32));
    }

    #[test]
    fn witt_matches_generation() {
        for n in [1usize, 2, 3] {
            let words = generate_lyndon(n, 12).unwrap();
            for d in 1..=12 {
                let count = words.iter().filter(|w| w.len() == d).count();
                assert_eq!(witt_count(n, d), BigUint::from(count), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn mobius_small_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1), e, "mobius({})", i + 1);
        }
    }

    #[test]
    fn single_factor_iff_lyndon() {
        for (n, max_len) in [(2usize, 10usize), (3, 8)] {
            let alpha = Alphabet::new(n).unwrap();
            for len in 1..=max_len {
                for w in words_of_length(alpha, len) {
                    assert_eq!(
                        cfl_factorize(&w).factor_count() == 1,
                        is_lyndon(&w).unwrap(),
                        "word {w}"
                    );
                }
            }
        }
    }
}
