use std::cmp::Ordering;

use crate::error::{domain, Result};
use crate::words::BinaryWord;

use super::real::HighPrecReal;
use super::sequence::EventuallyPeriodicSeq;

/// A finite run of computed digits, the first `reliable` of which are certain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitPrefix {
    pub digits: BinaryWord,
    pub reliable: usize,
}

impl DigitPrefix {
    /// Prefix whose digits are all exact.
    pub fn exact(digits: BinaryWord) -> Self {
        let reliable = digits.len();
        Self { digits, reliable }
    }

    /// True when some digit was produced after the reliability marker.
    pub fn flagged(&self) -> bool {
        self.reliable < self.digits.len()
    }

    /// Compare the certain digits with `seq`; `None` when they all agree.
    pub fn compare(&self, seq: &EventuallyPeriodicSeq) -> Option<Ordering> {
        (0..self.reliable)
            .map(|i| self.digits.digit(i).cmp(&seq.digit(i)))
            .find(|o| o.is_ne())
    }

    /// Number of leading certain digits shared with `seq`.
    pub fn agreement(&self, seq: &EventuallyPeriodicSeq) -> usize {
        (0..self.reliable)
            .find(|&i| self.digits.digit(i) != seq.digit(i))
            .unwrap_or(self.reliable)
    }
}

fn check_base(beta: &HighPrecReal) -> Result<()> {
    let bits = beta.precision();
    if *beta <= HighPrecReal::one(bits) || *beta > HighPrecReal::from_int(2, bits) {
        return Err(domain(format!("base {beta} outside (1, 2]")));
    }
    Ok(())
}

/// Shared digit loop: `strict` selects `beta*x > 1` (quasi-greedy) versus `>= 1` (greedy).
fn expand(beta: &HighPrecReal, start: HighPrecReal, n: usize, strict: bool) -> DigitPrefix {
    let bits = beta.precision().max(start.precision());
    let beta = beta.with_precision(bits);
    let one = HighPrecReal::one(bits);
    let tolerance = one.near_tie_tolerance();
    let log2_beta = beta.to_f64().log2();
    let mut remainder = start.with_precision(bits);
    let mut digits = BinaryWord::empty();
    let mut reliable = None;
    for i in 0..n {
        let y = &beta * &remainder;
        let gap = &y - &one;
        // rounding error after i products is below (i + 1) * beta^i * 2^-p
        let error_log2 = ((i + 1) as f64).log2() + i as f64 * log2_beta - bits as f64;
        let tie = gap.abs() < tolerance;
        if (tie || error_log2 > -((bits / 2) as f64)) && reliable.is_none() {
            reliable = Some(i);
        }
        let take_one = if tie { !strict } else { !gap.is_negative() };
        if take_one {
            digits.push(1);
            remainder = gap;
        } else {
            digits.push(0);
            remainder = y;
        }
    }
    DigitPrefix {
        reliable: reliable.unwrap_or(n),
        digits,
    }
}

/// First `n` digits of the quasi-greedy expansion of 1 in base `beta`.
///
/// Exactly `beta = 2` short-circuits to `1^n` with no precision flag.
pub fn quasi_greedy(beta: &HighPrecReal, n: usize) -> Result<DigitPrefix> {
    check_base(beta)?;
    if *beta == HighPrecReal::from_int(2, beta.precision()) {
        return Ok(DigitPrefix::exact(BinaryWord::repeat_digit(1, n)));
    }
    Ok(expand(beta, HighPrecReal::one(beta.precision()), n, true))
}

/// First `n` digits of the greedy expansion of `target` in base `beta`.
pub fn greedy(target: &HighPrecReal, beta: &HighPrecReal, n: usize) -> Result<DigitPrefix> {
    check_base(beta)?;
    let bits = target.precision();
    if target.is_negative() || *target >= HighPrecReal::one(bits) {
        return Err(domain(format!(
            "greedy expansion needs a value in [0, 1), got {target}"
        )));
    }
    if target.is_zero() {
        return Ok(DigitPrefix::exact(BinaryWord::repeat_digit(0, n)));
    }
    Ok(expand(beta, target.clone(), n, false))
}
