use std::cmp::Ordering;

use crate::error::{domain, Result};
use crate::expansions::{
    quasi_greedy, solve_unit, DigitPrefix, EventuallyPeriodicSeq, HighPrecReal,
};
use crate::words::BinaryWord;

/// What is known about the quasi-greedy expansion of 1 for a base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// Exact, eventually periodic (bases produced by the solver).
    Symbolic(EventuallyPeriodicSeq),
    /// Computed or otherwise known leading digits.
    Digits(DigitPrefix),
}

impl Expansion {
    /// Lexicographic comparison with `seq`; `None` when the known digits cannot decide.
    pub fn compare(&self, seq: &EventuallyPeriodicSeq) -> Option<Ordering> {
        match self {
            Expansion::Symbolic(own) => Some(own.cmp(seq)),
            Expansion::Digits(prefix) => prefix.compare(seq),
        }
    }

    /// Number of leading digits known to agree with `seq` (`usize::MAX` when equal).
    pub fn agreement(&self, seq: &EventuallyPeriodicSeq) -> usize {
        match self {
            Expansion::Symbolic(own) => own.common_prefix_len(seq).unwrap_or(usize::MAX),
            Expansion::Digits(prefix) => prefix.agreement(seq),
        }
    }

    pub fn is_exact(&self) -> bool {
        match self {
            Expansion::Symbolic(_) => true,
            Expansion::Digits(prefix) => !prefix.flagged(),
        }
    }

    /// The certain leading digits, at most `n` of them.
    pub fn certain_prefix(&self, n: usize) -> BinaryWord {
        match self {
            Expansion::Symbolic(seq) => seq.prefix(n),
            Expansion::Digits(prefix) => prefix.digits.prefix(n.min(prefix.reliable)),
        }
    }

    /// How many certain digits exist (`None` for unbounded).
    pub fn certain_len(&self) -> Option<usize> {
        match self {
            Expansion::Symbolic(_) => None,
            Expansion::Digits(prefix) => Some(prefix.reliable),
        }
    }
}

/// A base in `(1, 2]` together with its expansion of 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Base {
    value: HighPrecReal,
    expansion: Expansion,
}

/// Cap on numerically extracted digits, as a multiple of the precision.
const DIGIT_CAP_FACTOR: usize = 16;

impl Base {
    /// Base given only by its value; digits are extracted numerically.
    pub fn numeric(value: HighPrecReal) -> Result<Self> {
        let bits = value.precision();
        if value <= HighPrecReal::one(bits) || value > HighPrecReal::from_int(2, bits) {
            return Err(domain(format!("base {value} outside (1, 2]")));
        }
        if value == HighPrecReal::from_int(2, bits) {
            let ones = EventuallyPeriodicSeq::periodic(&BinaryWord::from_digits(&[1]))?;
            return Ok(Self {
                value,
                expansion: Expansion::Symbolic(ones),
            });
        }
        let log2_beta = value.to_f64().log2().max(1e-12);
        let wanted = ((bits / 2) as f64 / log2_beta).ceil() as usize + 16;
        let n = wanted.min(DIGIT_CAP_FACTOR * bits as usize);
        let digits = quasi_greedy(&value, n)?;
        Ok(Self {
            value,
            expansion: Expansion::Digits(digits),
        })
    }

    /// Parse a decimal literal.
    pub fn parse(text: &str, precision: u32) -> Result<Self> {
        Self::numeric(HighPrecReal::parse(text, precision)?)
    }

    /// The base whose quasi-greedy expansion of 1 is `seq`.
    pub fn from_expansion(seq: EventuallyPeriodicSeq, precision: u32) -> Result<Self> {
        let value = solve_unit(&seq, precision)?;
        Ok(Self {
            value,
            expansion: Expansion::Symbolic(seq),
        })
    }

    /// Base with independently known leading digits.
    pub fn with_digits(value: HighPrecReal, digits: DigitPrefix) -> Self {
        Self {
            value,
            expansion: Expansion::Digits(digits),
        }
    }

    pub fn value(&self) -> &HighPrecReal {
        &self.value
    }

    pub fn expansion(&self) -> &Expansion {
        &self.expansion
    }

    pub fn precision(&self) -> u32 {
        self.value.precision()
    }
}

impl Base {
    pub(crate) fn from_parts(value: HighPrecReal, seq: EventuallyPeriodicSeq) -> Self {
        Self {
            value,
            expansion: Expansion::Symbolic(seq),
        }
    }
}
