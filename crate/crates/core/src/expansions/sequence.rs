use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::words::BinaryWord;

/// An infinite digit sequence `pre · per^∞`, kept in normalized form.
///
/// Normalization makes the period primitive and the preperiod as short as
/// possible, so structural equality coincides with equality of sequences.
/// A finite word `w` is represented as `w · 0^∞` (period `0`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicSeq {
    pre: BinaryWord,
    per: BinaryWord,
}

impl EventuallyPeriodicSeq {
    pub fn new(preperiod: BinaryWord, period: BinaryWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::MalformedSequence("empty period".into()));
        }
        let mut per = period.primitive_root();
        let mut pre = preperiod;
        while !pre.is_empty() && pre.last() == per.last() {
            pre.pop();
            per = per.rotate_right(1);
        }
        Ok(Self { pre, per })
    }

    /// `w^∞`.
    pub fn periodic(word: &BinaryWord) -> Result<Self> {
        Self::new(BinaryWord::empty(), word.clone())
    }

    /// `w · 0^∞`.
    pub fn finite(word: &BinaryWord) -> Self {
        Self::new(word.clone(), BinaryWord::from_digits(&[0])).expect("period is nonempty")
    }

    pub fn preperiod(&self) -> &BinaryWord {
        &self.pre
    }

    pub fn period(&self) -> &BinaryWord {
        &self.per
    }

    /// True for sequences ending in `0^∞`.
    pub fn is_finite(&self) -> bool {
        self.per.len() == 1 && self.per.digit(0) == 0
    }

    /// Digit at 0-based position `index`.
    pub fn digit(&self, index: usize) -> u8 {
        if index < self.pre.len() {
            self.pre.digit(index)
        } else {
            self.per.digit((index - self.pre.len()) % self.per.len())
        }
    }

    pub fn digits(&self) -> impl Iterator<Item = u8> + '_ {
        (0..).map(move |i| self.digit(i))
    }

    pub fn prefix(&self, n: usize) -> BinaryWord {
        BinaryWord::from_digits(&self.digits().take(n).collect::<Vec<_>>())
    }

    /// `σ^n`.
    pub fn shift(&self, n: usize) -> Self {
        if n <= self.pre.len() {
            Self::new(self.pre.suffix_from(n), self.per.clone()).expect("nonempty period")
        } else {
            let k = (n - self.pre.len()) % self.per.len();
            Self::new(BinaryWord::empty(), self.per.rotate_left(k)).expect("nonempty period")
        }
    }

    /// `w · self`.
    pub fn prepend(&self, word: &BinaryWord) -> Self {
        Self::new(word.concat(&self.pre), self.per.clone()).expect("nonempty period")
    }

    /// Length of the longest common prefix with `other` (`None` if equal).
    pub fn common_prefix_len(&self, other: &Self) -> Option<usize> {
        if self == other {
            return None;
        }
        (0..).find(|&i| self.digit(i) != other.digit(i))
    }

    /// Number of positions that must be compared before two sequences agree forever.
    fn comparison_horizon(&self, other: &Self) -> usize {
        self.pre.len() + other.pre.len() + self.per.len().lcm(&other.per.len()) + 1
    }
}

/// Exact lexicographic comparison of two eventually periodic sequences.
pub fn lex_compare(seq: &EventuallyPeriodicSeq, other: &EventuallyPeriodicSeq) -> Ordering {
    for i in 0..seq.comparison_horizon(other) {
        match seq.digit(i).cmp(&other.digit(i)) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

impl Ord for EventuallyPeriodicSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_compare(self, other)
    }
}

impl PartialOrd for EventuallyPeriodicSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// True iff every shift of `seq` is lexicographically at most `seq`.
pub fn shift_dominated(seq: &EventuallyPeriodicSeq) -> bool {
    (1..seq.pre.len() + seq.per.len()).all(|n| lex_compare(&seq.shift(n), seq) != Ordering::Greater)
}

/// Literal syntax `PRE(PER)`; a bare word `w` means `w 0^∞`.
impl FromStr for EventuallyPeriodicSeq {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::MalformedSequence(text.to_string());
        let text = text.trim();
        match text.find('(') {
            None => {
                if text.is_empty() {
                    return Err(bad());
                }
                Ok(Self::finite(&text.parse()?))
            }
            Some(open) => {
                let rest = &text[open + 1..];
                let body = rest.strip_suffix(')').ok_or_else(bad)?;
                if body.is_empty() || body.contains(['(', ')']) {
                    return Err(bad());
                }
                Self::new(text[..open].parse()?, body.parse()?)
            }
        }
    }
}

impl fmt::Display for EventuallyPeriodicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.pre, self.per)
    }
}

impl fmt::Debug for EventuallyPeriodicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Seq(\"{self}\")")
    }
}
