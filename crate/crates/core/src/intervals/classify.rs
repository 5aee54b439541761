use std::cmp::Ordering;
use std::fmt;

use crate::expansions::EventuallyPeriodicSeq;
use crate::words::{word_minus, BinaryWord, LambdaWord};

use super::base::Base;
use super::record::EndpointExpansions;

/// Default number of nested renormalization levels explored.
pub const DEFAULT_MAX_DEPTH: usize = 8;

/// Default cap on the length of each Farey factor searched per level.
pub const DEFAULT_MAX_FACTOR_LEN: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyConfig {
    pub max_depth: usize,
    pub max_factor_len: usize,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        Self {
            max_depth: DEFAULT_MAX_DEPTH,
            max_factor_len: DEFAULT_MAX_FACTOR_LEN,
        }
    }
}

/// Which piece of the parameter partition a base was placed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegimeKind {
    /// Outside every Lyndon interval.
    BifurcationE,
    /// Inside the basic interval of the terminal word.
    BasicInterval,
    /// In the relative bifurcation set of the terminal word.
    RelativeBifurcation,
    /// Still inside nested Lyndon intervals when the depth budget ran out.
    InfiniteChain,
    /// The available digits or factor lengths could not settle the question.
    Unresolved,
}

impl RegimeKind {
    pub fn name(self) -> &'static str {
        match self {
            RegimeKind::BifurcationE => "BifurcationE",
            RegimeKind::BasicInterval => "BasicInterval",
            RegimeKind::RelativeBifurcation => "RelativeBifurcation",
            RegimeKind::InfiniteChain => "InfiniteChain",
            RegimeKind::Unresolved => "Unresolved",
        }
    }
}

impl fmt::Display for RegimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub kind: RegimeKind,
    /// Farey factors descended, outermost first.
    pub chain: Vec<BinaryWord>,
    /// Product of `chain`, when nonempty.
    pub terminal_word: Option<LambdaWord>,
    pub depth_reached: usize,
    /// Set when a comparison was left undecided by unreliable digits.
    pub precision_flag: bool,
    /// Leading digits that the greedy expansion of the critical value is certified to start with.
    pub tau_prefix: BinaryWord,
}

/// Outcome of searching one renormalization level.
enum Descent {
    /// Inside `J^{S•r}`; `at_right_end` when the expansion equals the right endpoint's.
    Found {
        word: LambdaWord,
        factor: BinaryWord,
        at_right_end: bool,
    },
    /// Strictly between the child intervals of `lo` and `hi` (virtual words `0`, `1` allowed).
    Between {
        lo: BinaryWord,
        hi: BinaryWord,
        undecided: bool,
    },
}

fn digit_word(d: u8) -> BinaryWord {
    BinaryWord::from_digits(&[d])
}

fn child(node: Option<&LambdaWord>, factor: &BinaryWord) -> LambdaWord {
    match node {
        Some(parent) => parent.extend(factor).expect("mediants are Farey words"),
        None => crate::words::lambda_product(std::slice::from_ref(factor))
            .expect("mediants are Farey words"),
    }
}

/// Walk the mediant tree of Farey factors below `node`, comparing expansions of 1
/// against the child interval endpoints until the base is located.
fn descend(base: &Base, node: Option<&LambdaWord>, max_factor_len: usize) -> Descent {
    let expansion = base.expansion();
    let (mut lo, mut hi) = (digit_word(0), digit_word(1));
    loop {
        let factor = lo.concat(&hi);
        if factor.len() > max_factor_len {
            return Descent::Between {
                lo,
                hi,
                undecided: false,
            };
        }
        let word = child(node, &factor);
        let ends = EndpointExpansions::of(&word);
        match expansion.compare(&ends.left) {
            None => {
                return Descent::Between {
                    lo,
                    hi,
                    undecided: true,
                }
            }
            Some(Ordering::Less) => {
                hi = factor;
                continue;
            }
            Some(_) => {}
        }
        match expansion.compare(&ends.right) {
            None => {
                return Descent::Between {
                    lo,
                    hi,
                    undecided: true,
                }
            }
            Some(Ordering::Greater) => {
                lo = factor;
            }
            Some(ord) => {
                return Descent::Found {
                    word,
                    factor,
                    at_right_end: ord == Ordering::Equal,
                }
            }
        }
    }
}

/// Expansion of 1 at the virtual lower end of a gap: `L(lo)+ lo^∞`, or `1 0^∞` for `lo = 0`.
fn gap_lower_bound(lo: &BinaryWord) -> EventuallyPeriodicSeq {
    if lo.len() == 1 {
        EventuallyPeriodicSeq::finite(&digit_word(1))
    } else {
        let word = crate::words::lambda_product(std::slice::from_ref(lo)).expect("Farey");
        EndpointExpansions::of(&word).right
    }
}

/// Expansion of 1 at the virtual upper end of a gap: `L(hi)^∞`, or `1^∞` for `hi = 1`.
fn gap_upper_bound(hi: &BinaryWord) -> EventuallyPeriodicSeq {
    if hi.len() == 1 {
        EventuallyPeriodicSeq::periodic(&digit_word(1)).expect("nonempty")
    } else {
        let word = crate::words::lambda_product(std::slice::from_ref(hi)).expect("Farey");
        EndpointExpansions::of(&word).left
    }
}

/// Certified prefix of the critical value's expansion for a base lying strictly
/// between the child intervals of `lo` and `hi` below `node`.
///
/// Every base there has a renormalized expansion starting with the common prefix
/// `P` of the two gap bounds, and every Farey factor in between is longer than
/// `|P|`, so the critical expansion starts with the image of `0 P_2 … P_K`.
fn gap_prefix(node: Option<&LambdaWord>, lo: &BinaryWord, hi: &BinaryWord) -> BinaryWord {
    let lower = gap_lower_bound(lo);
    let upper = gap_upper_bound(hi);
    let shared = lower.common_prefix_len(&upper).unwrap_or(0);
    let head_len = shared.min(lo.len() + hi.len() - 1).max(1);
    let mut renormalized = digit_word(0);
    renormalized.append(&upper.prefix(head_len).suffix_from(1));
    match node {
        Some(parent) => parent
            .substitution()
            .apply(&renormalized)
            .expect("nonempty word"),
        None => renormalized,
    }
}

/// Certified prefix near the basic-interval end of `word` when `agreement`
/// digits of the expansion match that endpoint's expansion.
fn star_prefix(word: &LambdaWord, agreement: usize) -> BinaryWord {
    let word_len = word.len();
    let sub = word.substitution();
    let blocks = agreement.saturating_sub(2 * word_len) / word_len;
    let mut prefix = sub.word_minus().clone();
    prefix.append(&sub.rotation().power(blocks));
    prefix
}

/// Locate `base` in the partition of `(1, 2]` into the bifurcation sets, the
/// relative bifurcation sets, the infinite-chain set and the basic intervals.
pub fn classify(base: &Base, config: &ClassifyConfig) -> ClassificationResult {
    let expansion = base.expansion();
    let mut result = ClassificationResult {
        kind: RegimeKind::Unresolved,
        chain: Vec::new(),
        terminal_word: None,
        depth_reached: 0,
        precision_flag: false,
        tau_prefix: digit_word(0),
    };
    let all_ones = EventuallyPeriodicSeq::periodic(&digit_word(1)).expect("nonempty");
    if expansion.compare(&all_ones) == Some(Ordering::Equal) {
        result.kind = RegimeKind::BifurcationE;
        return result;
    }
    for depth in 1..=config.max_depth.max(1) {
        let node = result.terminal_word.clone();
        match descend(base, node.as_ref(), config.max_factor_len) {
            Descent::Between { lo, hi, undecided } => {
                result.precision_flag = undecided;
                result.tau_prefix = gap_prefix(node.as_ref(), &lo, &hi);
                return result;
            }
            Descent::Found {
                word,
                factor,
                at_right_end,
            } => {
                result.chain.push(factor);
                result.depth_reached = depth;
                result.tau_prefix = word_minus(word.product()).expect("ends in 1");
                let star = EndpointExpansions::of(&word).star;
                result.terminal_word = Some(word.clone());
                match expansion.compare(&star) {
                    None => {
                        result.precision_flag = true;
                        result.tau_prefix = star_prefix(&word, expansion.agreement(&star));
                        return result;
                    }
                    Some(Ordering::Less | Ordering::Equal) => {
                        result.kind = RegimeKind::BasicInterval;
                        return result;
                    }
                    Some(Ordering::Greater) => {}
                }
                if at_right_end {
                    result.kind = RegimeKind::RelativeBifurcation;
                    return result;
                }
            }
        }
    }
    result.kind = RegimeKind::InfiniteChain;
    result
}
