use num_rational::Ratio;

use crate::error::{domain, Error, Result};

use super::word::BinaryWord;

/// Largest level accepted by [`farey_level`] (`2^20 + 1` words).
pub const MAX_FAREY_LEVEL: u32 = 20;

/// The ordered list `F_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FareyLevel {
    pub level: u32,
    pub words: Vec<BinaryWord>,
}

/// Build `F_n` by repeatedly inserting the concatenation of each neighbouring pair.
pub fn farey_level(n: u32) -> Result<FareyLevel> {
    if n > MAX_FAREY_LEVEL {
        return Err(Error::ResourceLimit(format!(
            "Farey level {n} exceeds the maximum {MAX_FAREY_LEVEL}"
        )));
    }
    let mut words = vec![BinaryWord::from_digits(&[0]), BinaryWord::from_digits(&[1])];
    for _ in 0..n {
        let mut next = Vec::with_capacity(2 * words.len() - 1);
        for pair in words.windows(2) {
            next.push(pair[0].clone());
            next.push(pair[0].concat(&pair[1]));
        }
        next.push(words[words.len() - 1].clone());
        words = next;
    }
    Ok(FareyLevel { level: n, words })
}

/// All non-degenerate Farey words of length at most `max_len`, in increasing order.
///
/// In-order walk of the mediant tree: the word between neighbours `u < v` is `uv`.
pub fn farey_words_up_to(max_len: usize) -> Vec<BinaryWord> {
    fn walk(lo: &BinaryWord, hi: &BinaryWord, max_len: usize, out: &mut Vec<BinaryWord>) {
        if lo.len() + hi.len() > max_len {
            return;
        }
        let mid = lo.concat(hi);
        walk(lo, &mid, max_len, out);
        out.push(mid.clone());
        walk(&mid, hi, max_len, out);
    }
    let mut out = Vec::new();
    walk(
        &BinaryWord::from_digits(&[0]),
        &BinaryWord::from_digits(&[1]),
        max_len,
        &mut out,
    );
    out
}

/// Which canonical shape a non-degenerate Farey word has.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FareyForm {
    /// `0` or `1`.
    Degenerate,
    /// `0 1^p`.
    ZeroOnes { p: usize },
    /// `0^p 1`.
    ZerosOne { p: usize },
    /// `01^p 01^{p+t_1} ... 01^{p+t_N} 01^{p+1}`, with inner word `0 t_1..t_N 1`.
    OneRuns { p: usize, inner: BinaryWord },
    /// `0^{p+1}1 0^{p+t_1}1 ... 0^{p+t_N}1 0^p 1`, with inner word `0 t_1..t_N 1`.
    ZeroRuns { p: usize, inner: BinaryWord },
}

/// Run lengths of `digit` between single separators, or `None` if two separators touch.
///
/// For `w = x d^{e_1} x d^{e_2} ... x d^{e_k}` (separator `x` leading) or
/// `w = d^{e_1} x ... d^{e_k} x` (separator trailing) this returns `[e_1, ..., e_k]`.
fn run_lengths(word: &BinaryWord, digit: u8) -> Option<Vec<usize>> {
    let text = word.to_string();
    let sep = if digit == 1 { '0' } else { '1' };
    let mut parts: Vec<&str> = text.split(sep).collect();
    // exactly one empty piece at the separator end
    if digit == 1 {
        if parts.first() != Some(&"") {
            return None;
        }
        parts.remove(0);
    } else {
        if parts.last() != Some(&"") {
            return None;
        }
        parts.pop();
    }
    if parts.iter().any(|p| p.is_empty()) {
        return None;
    }
    Some(parts.iter().map(|p| p.len()).collect())
}

/// Validate runs `[p + lead, p + t_1, ..., p + t_N, p + trail]` and build `0 t_1..t_N 1`.
fn inner_word(runs: &[usize], lead: usize, trail: usize) -> Option<(usize, BinaryWord)> {
    if runs.len() < 2 {
        return None;
    }
    let p = runs[0].checked_sub(lead)?;
    if p == 0 || runs[runs.len() - 1] != p + trail {
        return None;
    }
    let mut inner = BinaryWord::from_digits(&[0]);
    for &r in &runs[1..runs.len() - 1] {
        match r.checked_sub(p)? {
            t @ (0 | 1) => inner.push(t as u8),
            _ => return None,
        }
    }
    inner.push(1);
    Some((p, inner))
}

/// Recursive form decomposition; `None` when the word is not Farey.
pub fn farey_form(word: &BinaryWord) -> Result<Option<FareyForm>> {
    word.require_nonempty("Farey test")?;
    if word.len() == 1 {
        return Ok(Some(FareyForm::Degenerate));
    }
    if word.first() != Some(0) || word.last() != Some(1) {
        return Ok(None);
    }
    let (zeros, ones) = (word.count(0), word.count(1));
    if zeros == 1 {
        return Ok(Some(FareyForm::ZeroOnes { p: ones }));
    }
    if ones == 1 {
        return Ok(Some(FareyForm::ZerosOne { p: zeros }));
    }
    if let Some(runs) = run_lengths(word, 1) {
        if let Some((p, inner)) = inner_word(&runs, 0, 1) {
            if is_farey(&inner)? {
                return Ok(Some(FareyForm::OneRuns { p, inner }));
            }
        }
        return Ok(None);
    }
    if let Some(runs) = run_lengths(word, 0) {
        if let Some((p, inner)) = inner_word(&runs, 1, 0) {
            if is_farey(&inner)? {
                return Ok(Some(FareyForm::ZeroRuns { p, inner }));
            }
        }
    }
    Ok(None)
}

/// True iff `word` is `0`, `1` or a non-degenerate Farey word.
pub fn is_farey(word: &BinaryWord) -> Result<bool> {
    Ok(farey_form(word)?.is_some())
}

/// True iff `word` is a Farey word of length at least 2.
pub fn is_proper_farey(word: &BinaryWord) -> bool {
    word.len() >= 2 && matches!(farey_form(word), Ok(Some(_)))
}

/// Frequency of the digit 1 as a reduced fraction.
pub fn farey_frequency(word: &BinaryWord) -> Result<Ratio<u64>> {
    if !is_farey(word)? {
        return Err(domain(format!("{word} is not a Farey word")));
    }
    Ok(Ratio::new(word.count(1) as u64, word.len() as u64))
}
