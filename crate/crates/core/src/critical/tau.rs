use std::cmp::Ordering;
use std::fmt;

use crate::error::{domain, Result};
use crate::expansions::{seq_value, word_value, EventuallyPeriodicSeq, HighPrecReal};
use crate::intervals::{
    classify, Base, ClassificationResult, ClassifyConfig, EndpointExpansions, Expansion, RegimeKind,
};
use crate::words::{BinaryWord, LambdaWord};

/// The expansion of the critical value, exact or truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `head` followed by `period` repeated forever, kept as built (not normalized).
    Exact {
        head: BinaryWord,
        period: BinaryWord,
    },
    /// Certified leading digits only.
    Prefix(BinaryWord),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Exact { head, period } => write!(f, "{head}({period})"),
            Witness::Prefix(prefix) => write!(f, "{prefix}..."),
        }
    }
}

impl Witness {
    fn exact(head: BinaryWord, period: BinaryWord) -> Self {
        Witness::Exact { head, period }
    }

    /// The digit sequence, when known exactly.
    pub fn sequence(&self) -> Option<EventuallyPeriodicSeq> {
        match self {
            Witness::Exact { head, period } => {
                EventuallyPeriodicSeq::new(head.clone(), period.clone()).ok()
            }
            Witness::Prefix(_) => None,
        }
    }
}

/// Critical value of one base, with a certified bracket.
#[derive(Clone, Debug)]
pub struct TauResult {
    pub beta: HighPrecReal,
    pub tau: HighPrecReal,
    pub tau_lo: HighPrecReal,
    pub tau_hi: HighPrecReal,
    pub regime: ClassificationResult,
    pub witness: Witness,
    pub error_bound: HighPrecReal,
}

/// `S- L(S)^∞`.
pub(crate) fn basic_witness(word: &LambdaWord) -> EventuallyPeriodicSeq {
    let sub = word.substitution();
    EventuallyPeriodicSeq::new(sub.word_minus().clone(), sub.rotation().clone())
        .expect("nonempty period")
}

/// Rounding allowance for closed-form evaluations at precision `bits`.
pub(crate) fn rounding_bound(bits: u32) -> HighPrecReal {
    HighPrecReal::pow2(-(bits as i64) + 8, bits)
}

/// Value of any digit sequence that starts with `prefix`, as `[w 0^∞, w 1^∞]`.
fn prefix_bracket(
    prefix: &BinaryWord,
    beta: &HighPrecReal,
) -> Result<(HighPrecReal, HighPrecReal)> {
    let lo = word_value(prefix, beta)?;
    let bits = beta.precision();
    let one = HighPrecReal::one(bits);
    let tail = &beta.recip().powi(prefix.len() as u32) / &(beta - &one);
    Ok((lo.clone(), &lo + &tail))
}

/// Critical value `tau(beta)`, dispatched on the regime of the base.
pub fn tau(base: &Base, config: &ClassifyConfig) -> Result<TauResult> {
    let regime = classify(base, config);
    let beta = base.value().clone();
    let bits = beta.precision();
    let one = HighPrecReal::one(bits);
    let upper_bound = &one - &beta.recip();
    let point = |tau: HighPrecReal, witness: Witness, regime: ClassificationResult| TauResult {
        beta: beta.clone(),
        tau_lo: tau.clone(),
        tau_hi: tau.clone(),
        tau,
        regime,
        witness,
        error_bound: rounding_bound(bits),
    };
    match regime.kind {
        RegimeKind::BifurcationE => {
            let witness = match base.expansion() {
                Expansion::Symbolic(seq) => {
                    let rest = seq.shift(1);
                    let mut head = BinaryWord::from_digits(&[0]);
                    head.append(rest.preperiod());
                    Witness::exact(head, rest.period().clone())
                }
                Expansion::Digits(known) => {
                    let mut prefix = BinaryWord::from_digits(&[0]);
                    prefix.append(&known.digits.prefix(known.reliable).suffix_from(1));
                    Witness::Prefix(prefix)
                }
            };
            Ok(point(upper_bound, witness, regime))
        }
        RegimeKind::BasicInterval => {
            let word = regime
                .terminal_word
                .clone()
                .expect("basic verdicts carry a word");
            let value = seq_value(&basic_witness(&word), &beta)?;
            let sub = word.substitution();
            let witness = Witness::exact(sub.word_minus().clone(), sub.rotation().clone());
            Ok(point(value, witness, regime))
        }
        RegimeKind::RelativeBifurcation => {
            let word = regime
                .terminal_word
                .clone()
                .expect("relative verdicts carry a word");
            let value = seq_value(&EventuallyPeriodicSeq::finite(word.product()), &beta)?;
            let witness = Witness::exact(word.product().clone(), BinaryWord::from_digits(&[0]));
            Ok(point(value, witness, regime))
        }
        RegimeKind::InfiniteChain => {
            let word = regime.terminal_word.clone().expect("chains carry a word");
            let hi = word_value(word.product(), &beta)?.min(upper_bound);
            let lo = seq_value(&basic_witness(&word), &beta)?;
            Ok(TauResult {
                beta: beta.clone(),
                tau: hi.clone(),
                error_bound: &(&hi - &lo) + &rounding_bound(bits),
                tau_lo: lo,
                tau_hi: hi,
                witness: Witness::Prefix(regime.tau_prefix.clone()),
                regime,
            })
        }
        RegimeKind::Unresolved => {
            let (mut lo, mut hi) = prefix_bracket(&regime.tau_prefix, &beta)?;
            if let Some(word) = &regime.terminal_word {
                lo = lo.max(seq_value(&basic_witness(word), &beta)?);
                hi = hi.min(word_value(word.product(), &beta)?);
            }
            hi = hi.min(upper_bound);
            lo = lo.max(HighPrecReal::zero(bits));
            if lo > hi {
                lo = hi.clone();
            }
            let two = HighPrecReal::from_int(2, bits);
            let mid = &(&lo + &hi) / &two;
            Ok(TauResult {
                beta: beta.clone(),
                error_bound: &(&(&hi - &lo) / &two) + &rounding_bound(bits),
                tau: mid,
                tau_lo: lo,
                tau_hi: hi,
                witness: Witness::Prefix(regime.tau_prefix.clone()),
                regime,
            })
        }
    }
}

/// `(S- L(S)^∞)_beta` for `beta` in the basic interval of `word`.
///
/// Membership is checked on the expansion of 1; a base too close to an
/// endpoint to decide is accepted, since the formula is continuous there.
pub fn tau_basic(word: &LambdaWord, beta: &HighPrecReal) -> Result<HighPrecReal> {
    let base = Base::numeric(beta.clone())?;
    let ends = EndpointExpansions::of(word);
    let expansion = base.expansion();
    let below = expansion.compare(&ends.left) == Some(Ordering::Less);
    let above = expansion.compare(&ends.star) == Some(Ordering::Greater);
    if below || above {
        return Err(domain(format!(
            "base {beta} is outside the basic interval of {}",
            word.product()
        )));
    }
    seq_value(&basic_witness(word), beta)
}
