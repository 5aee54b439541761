use crate::error::{domain, Result};
use crate::expansions::EventuallyPeriodicSeq;

use super::lyndon::{is_lyndon, largest_rotation};
use super::word::{word_minus, word_plus, BinaryWord};

/// The four blocks emitted by the substitution map of a Lyndon word `word`.
///
/// With `a = L(s)`, block `j + 1` of `s • r` is chosen by the digit pair
/// `r_j r_{j+1}`: `00 -> a`, `01 -> a+`, `10 -> s-`, `11 -> s`. The first
/// block behaves as if preceded by the opposite of `r_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    word: BinaryWord,
    word_minus: BinaryWord,
    rotation: BinaryWord,
    rotation_plus: BinaryWord,
}

impl Substitution {
    pub fn new(word: &BinaryWord) -> Result<Self> {
        if word.len() < 2 || !is_lyndon(word)? {
            return Err(domain(format!(
                "{word}: substitution needs a Lyndon word of length at least 2"
            )));
        }
        let rotation = largest_rotation(word)?;
        Ok(Self {
            word: word.clone(),
            word_minus: word_minus(word)?,
            rotation_plus: word_plus(&rotation)?,
            rotation,
        })
    }

    pub fn word(&self) -> &BinaryWord {
        &self.word
    }

    /// `L(s)`.
    pub fn rotation(&self) -> &BinaryWord {
        &self.rotation
    }

    /// `s-`.
    pub fn word_minus(&self) -> &BinaryWord {
        &self.word_minus
    }

    /// `L(s)+`.
    pub fn rotation_plus(&self) -> &BinaryWord {
        &self.rotation_plus
    }

    pub fn block_len(&self) -> usize {
        self.word.len()
    }

    fn block(&self, previous: u8, current: u8) -> &BinaryWord {
        match (previous, current) {
            (0, 0) => &self.rotation,
            (0, _) => &self.rotation_plus,
            (_, 0) => &self.word_minus,
            _ => &self.word,
        }
    }

    /// Image of a digit string whose first block is selected by `previous`.
    fn apply_with_previous(&self, previous: u8, digits: impl Iterator<Item = u8>) -> BinaryWord {
        let mut out = BinaryWord::empty();
        let mut prev = previous;
        for d in digits {
            out.append(self.block(prev, d));
            prev = d;
        }
        out
    }

    pub fn apply(&self, input: &BinaryWord) -> Result<BinaryWord> {
        let first = input
            .first()
            .ok_or_else(|| domain("substitution of the empty word"))?;
        Ok(self.apply_with_previous(1 - first, input.digits()))
    }

    /// Image of an eventually periodic sequence; the tail maps to a periodic tail.
    pub fn apply_seq(&self, input: &EventuallyPeriodicSeq) -> EventuallyPeriodicSeq {
        let (pre, per) = (input.preperiod(), input.period());
        let first = input.digit(0);
        // The first copy of the period may see a different preceding digit
        // than later copies, so it is folded into the image preperiod.
        let head = pre.concat(per);
        let image_head = self.apply_with_previous(1 - first, head.digits());
        let image_period = self.apply_with_previous(per.last().unwrap_or(0), per.digits());
        EventuallyPeriodicSeq::new(image_head, image_period)
            .expect("image period of a nonempty period is nonempty")
    }

    /// Recover `input` from `w = s • r`, if `w` lies in the image.
    pub fn invert(&self, w: &BinaryWord) -> Option<BinaryWord> {
        let m = self.block_len();
        if w.is_empty() || !w.len().is_multiple_of(m) {
            return None;
        }
        let mut input = BinaryWord::empty();
        for j in 0..w.len() / m {
            let block = w.slice(j * m, (j + 1) * m);
            let (prev, cur) = if block == self.rotation {
                (0, 0)
            } else if block == self.rotation_plus {
                (0, 1)
            } else if block == self.word_minus {
                (1, 0)
            } else if block == self.word {
                (1, 1)
            } else {
                return None;
            };
            let expected_prev = match input.last() {
                Some(d) => d,
                None => 1 - cur,
            };
            if prev != expected_prev {
                return None;
            }
            input.push(cur);
        }
        Some(input)
    }
}

/// `s • r` for a finite word `input`.
pub fn substitute(word: &BinaryWord, input: &BinaryWord) -> Result<BinaryWord> {
    Substitution::new(word)?.apply(input)
}

/// `s • r` for an eventually periodic sequence `input`.
pub fn substitute_seq(
    word: &BinaryWord,
    input: &EventuallyPeriodicSeq,
) -> Result<EventuallyPeriodicSeq> {
    Ok(Substitution::new(word)?.apply_seq(input))
}
