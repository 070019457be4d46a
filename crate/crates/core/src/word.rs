//! Fixed-length binary words and the Fibonacci/Lucas string enumerations.
//!
//! Coordinates are 1-based and counted from the left, matching the written
//! form of a string: coordinate 1 is the leftmost character. Internally a
//! word of length `n` is packed into a `u64` with coordinate `k` stored at
//! bit position `n - k`, so the leftmost coordinate is the most significant
//! bit and ascending packed value agrees with ascending binary notation.
//! `round_trip_packing` below locks this mapping.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest dimension the enumeration builders accept without forcing.
/// The vertex count grows like phi^n; beyond this the brute-force oracles
/// stop being desk-scale.
pub const MAX_GUARDED_DIMENSION: usize = 30;

/// Hard packing limit: words live in a single `u64`.
pub const MAX_WORD_LEN: usize = 63;

/// A binary word of fixed length, at most [`MAX_WORD_LEN`] coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    len: u8,
    bits: u64,
}

impl BitWord {
    /// Packs `bits` as a word of length `len`.
    ///
    /// Panics if `len > MAX_WORD_LEN` or if `bits` has a set bit at or above
    /// position `len`.
    pub fn new(len: usize, bits: u64) -> Self {
        assert!(
            len <= MAX_WORD_LEN,
            "word length {len} exceeds {MAX_WORD_LEN}"
        );
        assert!(
            bits >> len == 0,
            "bits 0x{bits:x} do not fit in a word of length {len}"
        );
        BitWord {
            len: len as u8,
            bits,
        }
    }

    /// The empty word (length 0).
    pub fn empty() -> Self {
        BitWord { len: 0, bits: 0 }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Raw packed value; equal-length words sort by this.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Value of coordinate `k` (1-based, leftmost = 1).
    pub fn coordinate(&self, k: usize) -> bool {
        assert!(
            k >= 1 && k <= self.len(),
            "coordinate {k} outside 1..={}",
            self.len()
        );
        (self.bits >> (self.len() - k)) & 1 == 1
    }

    /// Copy of the word with coordinate `k` cleared.
    pub fn with_coordinate_cleared(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.len());
        BitWord {
            len: self.len,
            bits: self.bits & !(1 << (self.len() - k)),
        }
    }

    /// Copy of the word with coordinate `k` set.
    pub fn with_coordinate_set(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.len());
        BitWord {
            len: self.len,
            bits: self.bits | (1 << (self.len() - k)),
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinates holding a 1, in ascending order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len()).filter(|&k| self.coordinate(k))
    }

    /// Hamming distance to `other`; both words must have the same length.
    pub fn hamming(&self, other: &BitWord) -> u32 {
        debug_assert_eq!(self.len, other.len);
        (self.bits ^ other.bits).count_ones()
    }

    /// The word read right to left.
    pub fn reversed(&self) -> Self {
        if self.len == 0 {
            return *self;
        }
        BitWord {
            len: self.len,
            bits: self.bits.reverse_bits() >> (64 - self.len()),
        }
    }

    /// No two adjacent coordinates are both 1.
    pub fn is_fibonacci(&self) -> bool {
        self.bits & (self.bits >> 1) == 0
    }

    /// Fibonacci validity plus the circular condition: the first and last
    /// coordinates are not both 1. A length-1 word "1" fails (its single
    /// coordinate is both first and last).
    pub fn is_lucas(&self) -> bool {
        if !self.is_fibonacci() {
            return false;
        }
        if self.len == 0 {
            return true;
        }
        !(self.coordinate(1) && self.coordinate(self.len()))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 1..=self.len() {
            f.write_str(if self.coordinate(k) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord(\"{self}\")")
    }
}

impl FromStr for BitWord {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s.len() > MAX_WORD_LEN {
            return Err(format!("word longer than {MAX_WORD_LEN}: {}", s.len()));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits = (bits << 1)
                | match c {
                    '0' => 0,
                    '1' => 1,
                    other => return Err(format!("invalid character {other:?} in binary word")),
                };
        }
        Ok(BitWord {
            len: s.len() as u8,
            bits,
        })
    }
}

/// All Fibonacci strings of length `n` in ascending packed order.
/// Refuses `n > MAX_GUARDED_DIMENSION`; count is `fib(n + 2)`.
pub fn fib_words(n: usize) -> Result<Vec<BitWord>> {
    guard(n)?;
    Ok(fib_words_unguarded(n))
}

/// All Lucas strings of length `n >= 2` in ascending packed order.
/// Refuses `n > MAX_GUARDED_DIMENSION`; count is `lucas(n)`.
pub fn lucas_words(n: usize) -> Result<Vec<BitWord>> {
    guard(n)?;
    lucas_words_unguarded(n)
}

pub(crate) fn guard(n: usize) -> Result<()> {
    if n > MAX_GUARDED_DIMENSION {
        return Err(Error::DimensionTooLarge {
            n,
            limit: MAX_GUARDED_DIMENSION,
        });
    }
    Ok(())
}

pub(crate) fn hard_cap(n: usize) -> Result<()> {
    if n > MAX_WORD_LEN {
        return Err(Error::DimensionTooLarge {
            n,
            limit: MAX_WORD_LEN,
        });
    }
    Ok(())
}

/// Builds the length-n list from the two shorter ones: words starting with 0
/// are the length-(n-1) words unchanged in packed value, words starting with
/// 10 are the length-(n-2) words with the top bit set. Each half is ascending
/// and every 0-prefixed value is below every 1-prefixed value, so the
/// concatenation is ascending with no duplicates.
pub(crate) fn fib_words_unguarded(n: usize) -> Vec<BitWord> {
    let mut prev: Vec<u64> = vec![0]; // length 0: the empty word
    let mut cur: Vec<u64> = vec![0, 1]; // length 1
    if n == 0 {
        return vec![BitWord::empty()];
    }
    for len in 2..=n {
        let mut next = Vec::with_capacity(cur.len() + prev.len());
        next.extend_from_slice(&cur);
        let top = 1u64 << (len - 1);
        next.extend(prev.iter().map(|w| top | w));
        prev = cur;
        cur = next;
    }
    cur.into_iter().map(|bits| BitWord::new(n, bits)).collect()
}

pub(crate) fn lucas_words_unguarded(n: usize) -> Result<Vec<BitWord>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall {
            what: "Lucas string enumeration",
            n,
            min: 2,
        });
    }
    Ok(fib_words_unguarded(n)
        .into_iter()
        .filter(|w| w.is_lucas())
        .collect())
}
