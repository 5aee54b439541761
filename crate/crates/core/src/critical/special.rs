use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{domain, Result};
use crate::expansions::{
    bisect_decreasing, search_floor, seq_value, solve_unit, word_value, DigitPrefix,
    EventuallyPeriodicSeq, HighPrecReal,
};
use crate::intervals::{Base, ClassifyConfig, EndpointExpansions};
use crate::words::{lambda_product, thue_morse_digit, BinaryWord, LambdaWord};

use super::tau::{basic_witness, rounding_bound, tau, TauResult};

/// Values on both sides of the discontinuity at the right end of a Lyndon interval.
#[derive(Clone, Debug)]
pub struct JumpRecord {
    pub word: LambdaWord,
    pub beta_right: HighPrecReal,
    /// `(S 0^∞)` at the right endpoint.
    pub tau_at: HighPrecReal,
    /// `(S^∞)` at the right endpoint.
    pub right_limit: HighPrecReal,
}

pub fn tau_jump(word: &LambdaWord, precision: u32) -> Result<JumpRecord> {
    let beta_right = solve_unit(&EndpointExpansions::of(word).right, precision)?;
    let tau_at = word_value(word.product(), &beta_right)?;
    let right_limit = seq_value(
        &EventuallyPeriodicSeq::periodic(word.product())?,
        &beta_right,
    )?;
    Ok(JumpRecord {
        word: word.clone(),
        beta_right,
        tau_at,
        right_limit,
    })
}

/// A base in the infinite-chain set built from the Thue–Morse sequence.
#[derive(Clone, Debug)]
pub struct ThueMorseBase {
    pub word: BinaryWord,
    pub beta_inf: HighPrecReal,
    /// Closed-form critical value.
    pub tau: HighPrecReal,
    /// Partial value `(S_k 0^∞)` of the chain `s • 01 • 01 • …` at `k = CHAIN_DEPTH`.
    pub tau_limit: HighPrecReal,
    /// Width of the certified bracket around the chain limit.
    pub error_bound: HighPrecReal,
    /// The base with its exactly known leading digits.
    pub base: Base,
}

/// Number of factors in the chain used for the limit cross-check.
pub const CHAIN_DEPTH: usize = 10;

/// Expansion of 1 at the Thue–Morse base of `0 c 1`: blocks `θ_{2k+1} c θ_{2k+2}`.
fn thue_morse_digits(word: &BinaryWord, len: usize) -> BinaryWord {
    let middle = word.slice(1, word.len() - 1);
    let mut out = BinaryWord::empty();
    let mut k = 0usize;
    while out.len() < len {
        out.push(thue_morse_digit(2 * k + 1));
        out.append(&middle);
        out.push(thue_morse_digit(2 * k + 2));
        k += 1;
    }
    out.prefix(len)
}

pub fn thue_morse_base(word: &BinaryWord, precision: u32) -> Result<ThueMorseBase> {
    let start = lambda_product(std::slice::from_ref(word))?;
    let bits = precision;
    let digits = thue_morse_digits(word, 4 * bits as usize + 64);
    let one = HighPrecReal::one(bits);
    let truncated = |beta: &HighPrecReal| word_value(&digits, beta);
    let tail = |beta: &HighPrecReal| &beta.recip().powi(digits.len() as u32) / &(beta - &one);
    let floor = search_floor(bits);
    let two = HighPrecReal::from_int(2, bits);
    // the true value lies in [truncated, truncated + tail]
    let low = bisect_decreasing(floor.clone(), two.clone(), |b| Ok(&truncated(b)? - &one))?;
    let high = bisect_decreasing(floor, two.clone(), |b| {
        Ok(&(&truncated(b)? + &tail(b)) - &one)
    })?;
    let beta = &(&low + &high) / &two;

    let word_len = word.len() as u32;
    let mut weighted = HighPrecReal::zero(bits);
    for j in 2..=word_len {
        if word.digit(j as usize - 1) == 1 {
            weighted = &weighted + &beta.powi(word_len - j);
        }
    }
    let beta_m = beta.powi(word_len);
    let numerator = &(&(&weighted * &two) + &beta.powi(word_len - 1)) - &beta_m;
    let tau = &numerator / &(&beta_m - &one);

    let mut chain = start;
    let pair = BinaryWord::from_digits(&[0, 1]);
    for _ in 1..CHAIN_DEPTH {
        chain = chain.extend(&pair)?;
    }
    let tau_limit = word_value(chain.product(), &beta)?;
    let chain_low = seq_value(&basic_witness(&chain), &beta)?;
    let error_bound = &(&(&tau_limit - &chain_low) + &(&high - &low)) + &rounding_bound(bits);
    Ok(ThueMorseBase {
        word: word.clone(),
        base: Base::with_digits(beta.clone(), DigitPrefix::exact(digits)),
        beta_inf: beta,
        tau,
        tau_limit,
        error_bound,
    })
}

/// An evenly spaced grid `from, from + step, …` up to `to`, in exact arithmetic.
#[derive(Clone, Debug)]
pub struct CurveGrid {
    pub from: BigRational,
    pub to: BigRational,
    pub step: BigRational,
}

impl CurveGrid {
    pub fn points(&self) -> Result<Vec<BigRational>> {
        if !self.step.is_positive() {
            return Err(domain("grid step must be positive"));
        }
        if self.from >= self.to {
            return Err(domain("grid start must be below its end"));
        }
        let count = ((&self.to - &self.from) / &self.step).floor();
        let count: usize = count
            .to_integer()
            .try_into()
            .map_err(|_| domain("grid too large"))?;
        Ok((0..=count)
            .map(|i| &self.from + &self.step * BigRational::from_integer(i.into()))
            .filter(|b| *b <= self.to && !b.is_zero())
            .collect())
    }
}

/// Critical values over a grid, ordered by base regardless of parallelism.
pub fn tau_curve(
    grid: &CurveGrid,
    config: &ClassifyConfig,
    precision: u32,
) -> Result<Vec<TauResult>> {
    grid.points()?
        .par_iter()
        .map(|b| {
            tau(
                &Base::numeric(HighPrecReal::from_rational(b, precision))?,
                config,
            )
        })
        .collect()
}
