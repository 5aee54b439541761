use crate::error::{domain, Error, Result};
use crate::words::BinaryWord;

use super::real::HighPrecReal;
use super::sequence::EventuallyPeriodicSeq;

/// Extra bits carried internally by evaluations and rounded away at the end.
const GUARD_BITS: u32 = 32;

/// `sum_i w_i x^i` for `i = 1..=|w|` (Horner).
fn digit_polynomial(word: &BinaryWord, inv_beta: &HighPrecReal) -> HighPrecReal {
    let mut acc = HighPrecReal::zero(inv_beta.precision());
    let one = HighPrecReal::one(inv_beta.precision());
    for d in word.digits().rev() {
        if d == 1 {
            acc = &acc + &one;
        }
        acc = &acc * inv_beta;
    }
    acc
}

fn check_base(beta: &HighPrecReal) -> Result<()> {
    if *beta <= HighPrecReal::one(beta.precision()) {
        return Err(domain(format!("base {beta} must exceed 1")));
    }
    Ok(())
}

/// `(c)_beta = sum c_i beta^-i`, closed form over preperiod and period.
pub fn seq_value(seq: &EventuallyPeriodicSeq, beta: &HighPrecReal) -> Result<HighPrecReal> {
    check_base(beta)?;
    let bits = beta.precision();
    let inv_beta = beta.with_precision(bits + GUARD_BITS).recip();
    let mut value = digit_polynomial(seq.preperiod(), &inv_beta);
    if !seq.is_finite() {
        let period = seq.period();
        let tail = digit_polynomial(period, &inv_beta);
        let one = HighPrecReal::one(inv_beta.precision());
        let x_per = inv_beta.powi(period.len() as u32);
        let x_pre = inv_beta.powi(seq.preperiod().len() as u32);
        value = &value + &(&(&x_pre * &tail) / &(&one - &x_per));
    }
    Ok(value.with_precision(bits))
}

/// Value of a finite word, i.e. of `w 0^∞`.
pub fn word_value(word: &BinaryWord, beta: &HighPrecReal) -> Result<HighPrecReal> {
    check_base(beta)?;
    let bits = beta.precision();
    let inv_beta = beta.with_precision(bits + GUARD_BITS).recip();
    Ok(digit_polynomial(word, &inv_beta).with_precision(bits))
}

/// Bisection for the root of a decreasing map `f` on `[lo, hi]`.
///
/// Stops once the bracket is narrower than `2^-(p+2)`; returns the midpoint.
pub(crate) fn bisect_decreasing<F>(
    mut lo: HighPrecReal,
    mut hi: HighPrecReal,
    mut f: F,
) -> Result<HighPrecReal>
where
    F: FnMut(&HighPrecReal) -> Result<HighPrecReal>,
{
    let bits = lo.precision().max(hi.precision());
    let width_goal = HighPrecReal::pow2(-(bits as i64) - 2, bits + 4);
    let (lo_val, hi_val) = (f(&lo)?, f(&hi)?);
    if hi_val.is_zero() {
        return Ok(hi);
    }
    if lo_val.is_negative() || !hi_val.is_negative() {
        return Err(Error::NoRootInRange);
    }
    lo = lo.with_precision(bits + 4);
    hi = hi.with_precision(bits + 4);
    let two = HighPrecReal::from_int(2, bits + 4);
    while &hi - &lo > width_goal {
        let mid = &(&lo + &hi) / &two;
        let v = f(&mid)?;
        if v.is_zero() {
            return Ok(mid.with_precision(bits));
        }
        if v.is_negative() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((&(&lo + &hi) / &two).with_precision(bits))
}

/// Lower end of the search range, `1 + 2^-20`.
pub(crate) fn search_floor(precision: u32) -> HighPrecReal {
    &HighPrecReal::one(precision) + &HighPrecReal::pow2(-20, precision)
}

/// The base in `(1, 2]` at which `seq` has value `target`.
pub fn solve_base(seq: &EventuallyPeriodicSeq, target: &HighPrecReal) -> Result<HighPrecReal> {
    Ok(solve_base_with_residual(seq, target)?.0)
}

/// [`solve_base`] with target 1 at the given precision.
pub fn solve_unit(seq: &EventuallyPeriodicSeq, precision: u32) -> Result<HighPrecReal> {
    solve_base(seq, &HighPrecReal::one(precision))
}

/// The solved base together with `|value - target|` at that base.
pub fn solve_base_with_residual(
    seq: &EventuallyPeriodicSeq,
    target: &HighPrecReal,
) -> Result<(HighPrecReal, HighPrecReal)> {
    if seq.digit(0) != 1 {
        return Err(domain(format!("sequence {seq} must start with digit 1")));
    }
    let bits = target.precision();
    let f = |beta: &HighPrecReal| -> Result<HighPrecReal> {
        Ok(&seq_value(seq, &beta.with_precision(bits + 4))? - target)
    };
    let beta = bisect_decreasing(search_floor(bits), HighPrecReal::from_int(2, bits), f)?;
    let residual = (&seq_value(seq, &beta)? - target).abs();
    Ok((beta, residual))
}
