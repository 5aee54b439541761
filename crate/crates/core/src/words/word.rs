use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use bitvec::prelude::*;

use crate::error::{domain, Error, Result};

/// A finite word over `{0, 1}`, stored as a packed bit vector.
///
/// Index 0 is the first digit. The empty word exists only as a
/// concatenation identity; public operations that need digits reject it.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    bits: BitVec<u64, Msb0>,
}

impl BinaryWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_digits(digits: &[u8]) -> Self {
        digits
            .iter()
            .map(|&d| d != 0)
            .collect::<BitVec<u64, Msb0>>()
            .into()
    }

    /// `digit` repeated `count` times.
    pub fn repeat_digit(digit: u8, count: usize) -> Self {
        BitVec::repeat(digit != 0, count).into()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn digit(&self, index: usize) -> u8 {
        self.bits[index] as u8
    }

    pub fn first(&self) -> Option<u8> {
        self.bits.first().map(|b| *b as u8)
    }

    pub fn last(&self) -> Option<u8> {
        self.bits.last().map(|b| *b as u8)
    }

    pub fn digits(&self) -> impl ExactSizeIterator<Item = u8> + DoubleEndedIterator + '_ {
        self.bits.iter().by_vals().map(|b| b as u8)
    }

    pub fn to_digits(&self) -> Vec<u8> {
        self.digits().collect()
    }

    /// Number of occurrences of `digit`.
    pub fn count(&self, digit: u8) -> usize {
        let ones = self.bits.count_ones();
        if digit == 0 {
            self.len() - ones
        } else {
            ones
        }
    }

    pub fn push(&mut self, digit: u8) {
        self.bits.push(digit != 0);
    }

    pub fn pop(&mut self) -> Option<u8> {
        self.bits.pop().map(|b| b as u8)
    }

    pub fn append(&mut self, other: &BinaryWord) {
        self.bits.extend_from_bitslice(&other.bits);
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut out = self.clone();
        out.append(other);
        out
    }

    /// `self` repeated `times` times.
    pub fn power(&self, times: usize) -> BinaryWord {
        let mut out = BitVec::with_capacity(self.len() * times);
        for _ in 0..times {
            out.extend_from_bitslice(&self.bits);
        }
        out.into()
    }

    pub fn slice(&self, start: usize, end: usize) -> BinaryWord {
        self.bits[start..end].to_bitvec().into()
    }

    pub fn prefix(&self, len: usize) -> BinaryWord {
        self.slice(0, len.min(self.len()))
    }

    pub fn suffix_from(&self, start: usize) -> BinaryWord {
        self.slice(start.min(self.len()), self.len())
    }

    pub fn rotate_left(&self, by: usize) -> BinaryWord {
        let mut bits = self.bits.clone();
        if !bits.is_empty() {
            bits.rotate_left(by % self.len());
        }
        bits.into()
    }

    pub fn rotate_right(&self, by: usize) -> BinaryWord {
        let mut bits = self.bits.clone();
        if !bits.is_empty() {
            bits.rotate_right(by % self.len());
        }
        bits.into()
    }

    /// Flip every digit.
    pub fn reflect(&self) -> BinaryWord {
        let mut bits = self.bits.clone();
        bits = !bits;
        bits.into()
    }

    pub fn reverse(&self) -> BinaryWord {
        let mut bits = self.bits.clone();
        bits.reverse();
        bits.into()
    }

    pub fn is_palindrome(&self) -> bool {
        self.digits().eq(self.digits().rev())
    }

    /// Shortest `u` with `self = u^k`.
    pub fn primitive_root(&self) -> BinaryWord {
        let n = self.len();
        for d in 1..n {
            if n.is_multiple_of(d) && (d..n).all(|i| self.bits[i] == self.bits[i - d]) {
                return self.prefix(d);
            }
        }
        self.clone()
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive_root().len() == self.len()
    }

    /// Order `c < d` iff `c 0^inf < d 0^inf`, i.e. the shorter word is padded with zeros.
    pub fn cmp_padded(&self, other: &BinaryWord) -> Ordering {
        let n = self.len().max(other.len());
        for i in 0..n {
            let a = if i < self.len() { self.digit(i) } else { 0 };
            let b = if i < other.len() { other.digit(i) } else { 0 };
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    pub(crate) fn require_nonempty(&self, what: &'static str) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyWord(what))
        } else {
            Ok(())
        }
    }
}

/// Flip a final `1` to `0`.
pub fn word_minus(word: &BinaryWord) -> Result<BinaryWord> {
    match word.last() {
        Some(1) => {
            let mut out = word.clone();
            out.bits.set(word.len() - 1, false);
            Ok(out)
        }
        Some(_) => Err(domain(format!("{word}: minus needs a final digit 1"))),
        None => Err(Error::EmptyWord("final digit")),
    }
}

/// Flip a final `0` to `1`.
pub fn word_plus(word: &BinaryWord) -> Result<BinaryWord> {
    match word.last() {
        Some(0) => {
            let mut out = word.clone();
            out.bits.set(word.len() - 1, true);
            Ok(out)
        }
        Some(_) => Err(domain(format!("{word}: plus needs a final digit 0"))),
        None => Err(Error::EmptyWord("final digit")),
    }
}

impl From<BitVec<u64, Msb0>> for BinaryWord {
    fn from(bits: BitVec<u64, Msb0>) -> Self {
        Self { bits }
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = BitVec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(Error::InvalidDigit(other)),
            }
        }
        Ok(bits.into())
    }
}

/// Plain lexicographic order, a proper prefix sorting first.
impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.digits().zip(other.digits()) {
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.len().cmp(&other.len())
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .digits()
            .map(|d| if d == 1 { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord(\"{self}\")")
    }
}
