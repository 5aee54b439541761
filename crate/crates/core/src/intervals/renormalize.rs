use crate::error::{domain, Result};
use crate::expansions::{solve_unit, EventuallyPeriodicSeq, HighPrecReal};
use crate::words::{BinaryWord, LambdaWord};

use super::base::{Base, Expansion};

/// Image of a base under the renormalization map of a product word.
#[derive(Clone, Debug)]
pub enum Renormalized {
    /// The image expansion is known exactly, so the image base is solved directly.
    Exact(Base),
    /// Only a digit prefix is known; the image base lies in `[lower, upper]`.
    Bracket {
        digits: BinaryWord,
        lower: HighPrecReal,
        upper: HighPrecReal,
        precision_flag: bool,
    },
}

impl Renormalized {
    /// A representative value: the exact base, or the bracket midpoint.
    pub fn value(&self) -> HighPrecReal {
        match self {
            Renormalized::Exact(base) => base.value().clone(),
            Renormalized::Bracket { lower, upper, .. } => {
                let two = HighPrecReal::from_int(2, lower.precision());
                &(lower + upper) / &two
            }
        }
    }
}

/// Apply the block substitution of `word` to the expansion of 1 of `beta_hat` and
/// return the base with that expansion (using at most `n` digits when inexact).
pub fn renormalize(word: &LambdaWord, beta_hat: &Base, n: usize) -> Result<Renormalized> {
    let sub = word.substitution();
    let precision = beta_hat.precision();
    match beta_hat.expansion() {
        Expansion::Symbolic(seq) => {
            let image = sub.apply_seq(seq);
            Ok(Renormalized::Exact(Base::from_expansion(image, precision)?))
        }
        Expansion::Digits(prefix) => {
            let used = n.min(prefix.reliable);
            if used == 0 {
                return Err(domain("no reliable digits to renormalize"));
            }
            let digits = sub.apply(&prefix.digits.prefix(used))?;
            let low_seq = EventuallyPeriodicSeq::finite(&digits);
            let high_seq =
                EventuallyPeriodicSeq::new(digits.clone(), BinaryWord::from_digits(&[1]))?;
            Ok(Renormalized::Bracket {
                lower: solve_unit(&low_seq, precision)?,
                upper: solve_unit(&high_seq, precision)?,
                precision_flag: used < n,
                digits,
            })
        }
    }
}
