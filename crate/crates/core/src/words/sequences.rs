use std::collections::HashMap;

use crate::error::{domain, Error, Result};

use super::word::BinaryWord;

/// Longest Thue–Morse prefix handed out in one call.
pub const MAX_THUE_MORSE_LEN: usize = 1 << 26;

/// Largest argument accepted by [`count_ordered_factorizations`].
pub const MAX_FACTORIZATION_ARG: u64 = 1_000_000;

/// `θ_0 … θ_{n-1}`; `θ_k` is the parity of the binary digit sum of `k`.
pub fn thue_morse_prefix(n: usize) -> Result<BinaryWord> {
    if n == 0 {
        return Err(domain("Thue-Morse prefix length must be positive"));
    }
    if n > MAX_THUE_MORSE_LEN {
        return Err(Error::ResourceLimit(format!(
            "Thue-Morse prefix {n} exceeds the maximum {MAX_THUE_MORSE_LEN}"
        )));
    }
    Ok(BinaryWord::from_digits(
        &(0..n).map(thue_morse_digit).collect::<Vec<u8>>(),
    ))
}

pub fn thue_morse_digit(k: usize) -> u8 {
    (k.count_ones() & 1) as u8
}

/// Number of ordered factorizations of `m` into factors greater than 1 (`f_1 = 1`).
pub fn count_ordered_factorizations(m: u64) -> Result<u128> {
    if m == 0 || m > MAX_FACTORIZATION_ARG {
        return Err(domain(format!(
            "factorization argument {m} outside 1..={MAX_FACTORIZATION_ARG}"
        )));
    }
    let mut memo = HashMap::new();
    Ok(ordered_factorizations(m, &mut memo))
}

fn ordered_factorizations(m: u64, memo: &mut HashMap<u64, u128>) -> u128 {
    if m == 1 {
        return 1;
    }
    if let Some(&v) = memo.get(&m) {
        return v;
    }
    let mut total = 0u128;
    let mut d = 1u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            let e = m / d;
            // d > 1 contributes f(m/d); the paired divisor e contributes f(d).
            if d > 1 {
                total += ordered_factorizations(e, memo);
            }
            if e != d {
                total += ordered_factorizations(d, memo);
            }
        }
        d += 1;
    }
    memo.insert(m, total);
    total
}
