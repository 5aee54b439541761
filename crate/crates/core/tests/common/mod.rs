//! Independent reference implementations used as test oracles.
//!
//! Everything here works on plain strings, `f64` or exact rationals and does
//! not call into the crate's algorithms.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;

pub fn rotations(s: &str) -> Vec<String> {
    (0..s.len())
        .map(|i| format!("{}{}", &s[i..], &s[..i]))
        .collect()
}

/// Strictly smaller than every proper rotation.
pub fn naive_lyndon(s: &str) -> bool {
    rotations(s).iter().skip(1).all(|r| s < r.as_str())
}

pub fn naive_smallest(s: &str) -> String {
    rotations(s).into_iter().min().unwrap()
}

pub fn naive_largest(s: &str) -> String {
    rotations(s).into_iter().max().unwrap()
}

pub fn flip_last(s: &str) -> String {
    let (head, last) = s.split_at(s.len() - 1);
    format!("{head}{}", if last == "1" { "0" } else { "1" })
}

pub fn reflect(s: &str) -> String {
    s.chars()
        .map(|c| if c == '0' { '1' } else { '0' })
        .collect()
}

/// Farey levels by inserting the concatenation of every neighbouring pair.
pub fn farey_levels(n: u32) -> Vec<Vec<String>> {
    let mut levels = vec![vec!["0".to_string(), "1".to_string()]];
    for _ in 0..n {
        let last = levels.last().unwrap();
        let mut next = Vec::new();
        for pair in last.windows(2) {
            next.push(pair[0].clone());
            next.push(format!("{}{}", pair[0], pair[1]));
        }
        next.push(last.last().unwrap().clone());
        levels.push(next);
    }
    levels
}

/// Lower Christoffel word with `ones` ones and length `len`.
pub fn christoffel(ones: usize, len: usize) -> String {
    (1..=len)
        .map(|i| {
            if (i * ones) / len - ((i - 1) * ones) / len == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

/// Block substitution straight from its definition.
pub fn naive_substitute(s: &str, r: &str) -> String {
    let large = naive_largest(s);
    let large_plus = flip_last(&large);
    let s_minus = flip_last(s);
    let r: Vec<char> = r.chars().collect();
    let mut out = String::new();
    out.push_str(if r[0] == '0' { &s_minus } else { &large_plus });
    for pair in r.windows(2) {
        out.push_str(match (pair[0], pair[1]) {
            ('0', '0') => &large,
            ('0', '1') => &large_plus,
            ('1', '0') => &s_minus,
            _ => s,
        });
    }
    out
}

/// Every product of Farey factors (length >= 2) with total length at most `max_len`.
pub fn naive_lambda(max_len: usize) -> std::collections::BTreeMap<String, Vec<String>> {
    let farey: Vec<String> = farey_levels(max_len as u32)
        .last()
        .unwrap()
        .iter()
        .filter(|w| w.len() >= 2 && w.len() <= max_len)
        .cloned()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut out = std::collections::BTreeMap::new();
    let mut frontier: Vec<(String, Vec<String>)> =
        farey.iter().map(|f| (f.clone(), vec![f.clone()])).collect();
    while let Some((word, factors)) = frontier.pop() {
        for f in &farey {
            if word.len() * f.len() <= max_len {
                let mut next = factors.clone();
                next.push(f.clone());
                frontier.push((naive_substitute(&word, f), next));
            }
        }
        out.entry(word).or_insert(factors);
    }
    out
}

pub fn thue_morse(n: usize) -> String {
    let mut s = String::from("0");
    while s.len() < n {
        s = format!("{s}{}", reflect(&s));
    }
    s[..n].to_string()
}

/// Ordered factorization counts for m = 1..=24 (OEIS A074206).
pub const ORDERED_FACTORIZATIONS: [u128; 24] = [
    1, 1, 1, 2, 1, 3, 1, 4, 2, 3, 1, 8, 1, 3, 3, 8, 1, 8, 1, 8, 3, 3, 1, 20,
];

/// `pre per per per ...` truncated to `n` characters.
pub fn unroll(pre: &str, per: &str, n: usize) -> String {
    let mut s = pre.to_string();
    while s.len() < n {
        s.push_str(per);
    }
    s[..n].to_string()
}

/// `sum d_i beta^-i` over a digit string, in `f64`.
pub fn value_f64(digits: &str, beta: f64) -> f64 {
    let mut total = 0.0;
    let mut scale = 1.0;
    for c in digits.chars() {
        scale /= beta;
        if c == '1' {
            total += scale;
        }
    }
    total
}

/// Base in (1, 2] at which the unrolled sequence has value 1, by `f64` bisection.
pub fn solve_f64(pre: &str, per: &str) -> f64 {
    let digits = unroll(pre, per, 4000);
    let (mut lo, mut hi) = (1.0 + 1e-9, 2.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if value_f64(&digits, mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn rational(text: &str) -> BigRational {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    let scale = BigInt::from(10).pow(frac.len() as u32);
    let numer: BigInt = format!("{int}{frac}").parse().unwrap();
    BigRational::new(numer, scale)
}

/// First `n` digits of the quasi-greedy expansion of 1, exactly, for rational `beta`.
pub fn exact_quasi_greedy(beta: &BigRational, n: usize) -> String {
    let one = BigRational::from_integer(1.into());
    let mut x = one.clone();
    let mut out = String::new();
    for _ in 0..n {
        let y = beta * &x;
        if y > one {
            out.push('1');
            x = y - &one;
        } else {
            out.push('0');
            x = y;
        }
    }
    out
}

/// First `n` digits of the greedy expansion of `t`, exactly, for rational inputs.
pub fn exact_greedy(t: &BigRational, beta: &BigRational, n: usize) -> String {
    let one = BigRational::from_integer(1.into());
    let mut x = t.clone();
    let mut out = String::new();
    for _ in 0..n {
        let y = beta * &x;
        if y >= one {
            out.push('1');
            x = y - &one;
        } else {
            out.push('0');
            x = y;
        }
    }
    out
}

/// Brute-force survivor counts over all words of length `depth`.
///
/// Returns `(optimistic, pessimistic)` counts of distinct length-`n` prefixes
/// of words whose every suffix is at least the matching prefix of `lower` and
/// at most the matching prefix of `upper`; a full-length tie with either
/// boundary is allowed only in the optimistic count.
pub fn brute_survivors(lower: &str, upper: &str, n: usize, depth: usize) -> (u128, u128) {
    assert!(depth <= 20);
    let (lower, upper) = (&lower[..depth], &upper[..depth]);
    let mut optimistic = std::collections::HashSet::new();
    let mut pessimistic = std::collections::HashSet::new();
    for bits in 0u32..(1 << depth) {
        let word: String = (0..depth)
            .map(|i| {
                if bits >> (depth - 1 - i) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect();
        let ok = (0..depth).all(|i| {
            let tail = &word[i..];
            tail >= &lower[..tail.len()] && tail <= &upper[..tail.len()]
        });
        if !ok {
            continue;
        }
        optimistic.insert(word[..n].to_string());
        if word != lower && word != upper {
            pessimistic.insert(word[..n].to_string());
        }
    }
    (optimistic.len() as u128, pessimistic.len() as u128)
}
