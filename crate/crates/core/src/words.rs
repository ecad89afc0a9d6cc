//! Ordered alphabets and finite words.
//!
//! Letters are indices `0..n` into an ordered alphabet of at most 26
//! letters; index order is alphabet order. Externally a word renders as a
//! string of lowercase ASCII letters (`0 -> 'a'`, `1 -> 'b'`, ...), and the
//! empty word renders as the empty string. Positions are 1-based in every
//! public interface that talks about positions.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An ordered alphabet, identified by its size (1..=26).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    size: u8,
}

impl Alphabet {
    pub const MAX_SIZE: usize = 26;

    pub fn new(size: usize) -> Result<Alphabet> {
        if size == 0 || size > Self::MAX_SIZE {
            return Err(Error::InvalidAlphabetSize(size));
        }
        Ok(Alphabet { size: size as u8 })
    }

    pub fn size(self) -> usize {
        self.size as usize
    }

    /// All letter indices of this alphabet, in alphabet order.
    pub fn letters(self) -> impl Iterator<Item = u8> {
        0..self.size
    }

    pub fn contains(self, letter: u8) -> bool {
        letter < self.size
    }

    /// External rendering of a letter index.
    pub fn letter_char(letter: u8) -> char {
        (b'a' + letter) as char
    }
}

/// A finite word over an [`Alphabet`]. The empty word is valid.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<u8>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<u8>) -> Result<Word> {
        for &l in &letters {
            if !alphabet.contains(l) {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    size: alphabet.size(),
                });
            }
        }
        Ok(Word { alphabet, letters })
    }

    pub fn empty(alphabet: Alphabet) -> Word {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Parses a string of lowercase ASCII letters as a word over `alphabet`.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Word> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            if !ch.is_ascii_lowercase() {
                return Err(Error::InvalidWordChar(ch));
            }
            letters.push(ch as u8 - b'a');
        }
        Word::new(alphabet, letters)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 1-based position `pos`.
    pub fn letter_at(&self, pos: usize) -> Result<u8> {
        if pos == 0 || pos > self.len() {
            return Err(Error::PositionOutOfRange {
                pos,
                len: self.len(),
            });
        }
        Ok(self.letters[pos - 1])
    }

    /// Lexicographic comparison, with a proper prefix preceding its
    /// extensions. Both words must be over the same alphabet.
    pub fn lex_compare(&self, other: &Word) -> Result<Ordering> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.letters.cmp(&other.letters))
    }

    /// The scattered subword at a strictly ascending set of 1-based
    /// positions.
    pub fn subword_at(&self, positions: &[usize]) -> Result<Word> {
        let mut letters = Vec::with_capacity(positions.len());
        let mut prev = 0usize;
        for &pos in positions {
            if pos == 0 || pos > self.len() {
                return Err(Error::PositionOutOfRange {
                    pos,
                    len: self.len(),
                });
            }
            if pos <= prev {
                return Err(Error::PositionsNotAscending);
            }
            prev = pos;
            letters.push(self.letters[pos - 1]);
        }
        Ok(Word {
            alphabet: self.alphabet,
            letters,
        })
    }

    /// Number of occurrences of `letter`. Letters outside the alphabet
    /// occur zero times.
    pub fn letter_count(&self, letter: u8) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    /// Whether the word is not a proper power `u^k` (k >= 2).
    pub fn is_primitive(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyWord { op: "is_primitive" });
        }
        Ok(is_primitive_slice(&self.letters))
    }

    /// The necklace of the word: all distinct rotations, in lexicographic
    /// order. Its size divides the length, with equality iff the word is
    /// primitive.
    pub fn conjugacy_class(&self) -> Result<Vec<Word>> {
        if self.is_empty() {
            return Err(Error::EmptyWord {
                op: "conjugacy_class",
            });
        }
        let n = self.len();
        let mut out: Vec<Vec<u8>> = (0..n)
            .map(|i| {
                let mut v = Vec::with_capacity(n);
                v.extend_from_slice(&self.letters[i..]);
                v.extend_from_slice(&self.letters[..i]);
                v
            })
            .collect();
        out.sort();
        out.dedup();
        Ok(out
            .into_iter()
            .map(|letters| Word {
                alphabet: self.alphabet,
                letters,
            })
            .collect())
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            alphabet: self.alphabet,
            letters,
        })
    }

    pub(crate) fn from_slice(alphabet: Alphabet, letters: &[u8]) -> Word {
        debug_assert!(letters.iter().all(|&l| alphabet.contains(l)));
        Word {
            alphabet,
            letters: letters.to_vec(),
        }
    }
}

pub(crate) fn is_primitive_slice(s: &[u8]) -> bool {
    let n = s.len();
    for d in 1..n {
        if n % d == 0 && s.chunks(d).all(|c| c == &s[..d]) {
            return false;
        }
    }
    true
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", Alphabet::letter_char(l))?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All words of the given exact length, in lexicographic order.
pub fn words_of_length(alphabet: Alphabet, len: usize) -> impl Iterator<Item = Word> {
    WordRange {
        alphabet,
        current: Some(vec![0; len]),
    }
}

struct WordRange {
    alphabet: Alphabet,
    current: Option<Vec<u8>>,
}

impl Iterator for WordRange {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.take()?;
        let word = Word {
            alphabet: self.alphabet,
            letters: cur.clone(),
        };
        // advance base-n counter
        let top = self.alphabet.size() as u8 - 1;
        let mut next = cur;
        let mut i = next.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < top {
                next[i] += 1;
                for x in &mut next[i + 1..] {
                    *x = 0;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(word)
    }
}
