use std::collections::{HashMap, HashSet};

use crate::error::{domain, Error, Result};
use crate::expansions::{greedy, HighPrecReal};
use crate::intervals::Base;
use crate::words::{is_lyndon, largest_rotation, word_minus, BinaryWord, LambdaWord};

use super::automaton::{BoundaryAutomaton, Side, Step};

/// Longest word handled by the counters.
pub const MAX_WORD_LEN: usize = 64;

/// Longest Lyndon word accepted by [`gamma_count`].
pub const MAX_GAMMA_WORD: usize = 12;

/// Word counts for the survivor set of the hole `(0, t)`.
///
/// The upper count treats a comparison left open by the truncated boundary
/// digits as passing, the lower count as failing.
#[derive(Clone, Debug)]
pub struct CountProfile {
    pub beta: HighPrecReal,
    pub hole: HighPrecReal,
    pub n: usize,
    pub digits_used: usize,
    pub count_upper: u128,
    pub count_lower: u128,
    pub entropy_upper: f64,
    pub entropy_lower: f64,
    pub dim_upper: f64,
    pub dim_lower: f64,
}

/// `(optimistic, pessimistic)` pair.
type Pair<T> = (T, T);

/// Counts words of length `n` that extend to an admissible word of length `n + extra`.
struct Counter<'a> {
    lower: &'a BoundaryAutomaton,
    upper: &'a BoundaryAutomaton,
    extra: usize,
    viable: HashMap<(usize, u16, u16), Pair<bool>>,
    counts: HashMap<(usize, u16, u16), Pair<u128>>,
}

impl<'a> Counter<'a> {
    fn new(lower: &'a BoundaryAutomaton, upper: &'a BoundaryAutomaton, extra: usize) -> Self {
        Self {
            lower,
            upper,
            extra,
            viable: HashMap::new(),
            counts: HashMap::new(),
        }
    }

    fn step(&self, lo: u16, hi: u16, d: u8) -> Option<(u16, u16, bool)> {
        match (self.lower.step(lo, d), self.upper.step(hi, d)) {
            (
                Step::Next {
                    state: lo,
                    exhausted: a,
                },
                Step::Next {
                    state: hi,
                    exhausted: b,
                },
            ) => Some((lo, hi, a || b)),
            _ => None,
        }
    }

    fn viable(&mut self, remaining: usize, lo: u16, hi: u16) -> Pair<bool> {
        if remaining == 0 {
            return (true, true);
        }
        if let Some(&hit) = self.viable.get(&(remaining, lo, hi)) {
            return hit;
        }
        let mut out = (false, false);
        for d in 0..2 {
            if let Some((lo2, hi2, exhausted)) = self.step(lo, hi, d) {
                let (up, down) = self.viable(remaining - 1, lo2, hi2);
                out.0 |= up;
                out.1 |= down && !exhausted;
            }
            if out == (true, true) {
                break;
            }
        }
        self.viable.insert((remaining, lo, hi), out);
        out
    }

    fn count(&mut self, remaining: usize, lo: u16, hi: u16) -> Pair<u128> {
        if remaining == 0 {
            let (up, down) = self.viable(self.extra, lo, hi);
            return (up as u128, down as u128);
        }
        if let Some(&hit) = self.counts.get(&(remaining, lo, hi)) {
            return hit;
        }
        let mut out = (0u128, 0u128);
        for d in 0..2 {
            if let Some((lo2, hi2, exhausted)) = self.step(lo, hi, d) {
                let (up, down) = self.count(remaining - 1, lo2, hi2);
                out.0 += up;
                if !exhausted {
                    out.1 += down;
                }
            }
        }
        self.counts.insert((remaining, lo, hi), out);
        out
    }
}

fn count_between(lower: &BinaryWord, upper: &BinaryWord, n: usize, extra: usize) -> Pair<u128> {
    let lower = BoundaryAutomaton::new(lower, Side::Lower);
    let upper = BoundaryAutomaton::new(upper, Side::Upper);
    Counter::new(&lower, &upper, extra).count(n, 0, 0)
}

fn check_word_len(n: usize) -> Result<()> {
    if n == 0 || n > MAX_WORD_LEN {
        return Err(domain(format!(
            "word length {n} outside 1..={MAX_WORD_LEN}"
        )));
    }
    Ok(())
}

/// Count words of length `n` in the survivor set of the hole `(0, t)`.
///
/// A word is counted when it is the start of some word of length `depth`
/// all of whose suffixes lie between the greedy expansion of `hole` (inclusive)
/// and the quasi-greedy expansion of 1 (exclusive), compared on the first
/// `depth` digits of each boundary.
pub fn count_admissible(
    base: &Base,
    hole: &HighPrecReal,
    n: usize,
    depth: usize,
) -> Result<CountProfile> {
    check_word_len(n)?;
    if depth < n {
        return Err(domain(format!(
            "depth {depth} is shorter than word length {n}"
        )));
    }
    let beta = base.value();
    let bits = beta.precision();
    if hole.is_negative() || *hole >= HighPrecReal::one(bits) {
        return Err(domain(format!("hole size {hole} outside [0, 1)")));
    }
    let expansion = base.expansion();
    let upper = expansion.certain_prefix(depth);
    if upper.len() < depth {
        return Err(Error::UnreliableDigits { index: upper.len() });
    }
    let lower = greedy(hole, beta, depth)?;
    if lower.reliable < depth {
        return Err(Error::UnreliableDigits {
            index: lower.reliable,
        });
    }
    let (count_upper, count_lower) = count_between(&lower.digits, &upper, n, depth - n);
    let log_beta = beta.to_f64().ln();
    let entropy = |c: u128| (c.max(1) as f64).ln() / n as f64;
    let (entropy_upper, entropy_lower) = (entropy(count_upper), entropy(count_lower));
    Ok(CountProfile {
        beta: beta.clone(),
        hole: hole.clone(),
        n,
        digits_used: depth,
        count_upper,
        count_lower,
        entropy_upper,
        entropy_lower,
        dim_upper: entropy_upper / log_beta,
        dim_lower: entropy_lower / log_beta,
    })
}

/// Number of words of length `n` extendable inside the set of sequences whose
/// every shift lies between `S^∞` and `L(S)^∞`, inclusive.
pub fn gamma_count(word: &BinaryWord, n: usize) -> Result<u128> {
    check_word_len(n)?;
    if word.len() < 2 || word.len() > MAX_GAMMA_WORD || !is_lyndon(word)? {
        return Err(domain(format!(
            "{word} is not a Lyndon word of length 2..={MAX_GAMMA_WORD}"
        )));
    }
    let extra = n + 4 * word.len() + 16;
    let known = n + extra + 1;
    let lower = word.power(known.div_ceil(word.len())).prefix(known);
    let top = largest_rotation(word)?;
    let upper = top.power(known.div_ceil(word.len())).prefix(known);
    Ok(count_between(&lower, &upper, n, extra).0)
}

/// The two blocks `S- A^{N+1} A_1…A_j` and `S- A^{N+2} A_1…A_j`, where
/// `A = L(S)` and `S = A_{j+1}…A_m A_1…A_j`.
pub fn subshift_blocks(word: &LambdaWord, repeats: usize) -> Result<(BinaryWord, BinaryWord)> {
    if repeats == 0 {
        return Err(domain("repeat count must be at least 1"));
    }
    let product = word.product();
    let top = largest_rotation(product)?;
    let shift = (0..top.len())
        .find(|&j| top.rotate_left(j) == *product)
        .expect("a rotation of the word");
    let tail = top.prefix(shift);
    let head = word_minus(product)?;
    let block = |k: usize| {
        let mut b = head.clone();
        b.append(&top.power(k));
        b.append(&tail);
        b
    };
    Ok((block(repeats + 1), block(repeats + 2)))
}

/// Number of distinct factors of length `n` in the free concatenations of
/// the two blocks of [`subshift_blocks`].
pub fn lower_bound_subshift(word: &LambdaWord, repeats: usize, n: usize) -> Result<u128> {
    check_word_len(n)?;
    let (short, long) = subshift_blocks(word, repeats)?;
    let blocks = [short, long];
    let mut factors = HashSet::new();
    // every factor starts inside the first block of some concatenation
    for first in &blocks {
        let mut stack = vec![first.clone()];
        while let Some(seq) = stack.pop() {
            if seq.len() >= first.len() + n {
                for start in 0..first.len() {
                    factors.insert(seq.slice(start, start + n));
                }
                continue;
            }
            for b in &blocks {
                stack.push(seq.concat(b));
            }
        }
    }
    Ok(factors.len() as u128)
}
