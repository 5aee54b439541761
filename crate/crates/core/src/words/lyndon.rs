use crate::error::Result;

use super::word::BinaryWord;

/// True iff every proper suffix is strictly greater than the prefix of the same length.
///
/// Single-pass test from Duval's factorization: the word is Lyndon exactly
/// when the scan finishes with the comparison pointer back at the start.
pub fn is_lyndon(word: &BinaryWord) -> Result<bool> {
    word.require_nonempty("Lyndon test")?;
    let n = word.len();
    let (mut k, mut j) = (0usize, 1usize);
    while j < n {
        let (a, b) = (word.digit(k), word.digit(j));
        if a < b {
            k = 0;
        } else if a == b {
            k += 1;
        } else {
            return Ok(false);
        }
        j += 1;
    }
    Ok(k == 0)
}

/// Start index of the extreme rotation (two-pointer minimum-expression scan).
fn extreme_rotation_start(word: &BinaryWord, largest: bool) -> usize {
    let n = word.len();
    let at = |i: usize| {
        let d = word.digit(i % n);
        if largest {
            1 - d
        } else {
            d
        }
    };
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let (a, b) = (at(i + k), at(j + k));
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// `S(w)`: the lexicographically smallest cyclic rotation.
pub fn smallest_rotation(word: &BinaryWord) -> Result<BinaryWord> {
    word.require_nonempty("rotation")?;
    Ok(word.rotate_left(extreme_rotation_start(word, false)))
}

/// `L(w)`: the lexicographically largest cyclic rotation.
pub fn largest_rotation(word: &BinaryWord) -> Result<BinaryWord> {
    word.require_nonempty("rotation")?;
    Ok(word.rotate_left(extreme_rotation_start(word, true)))
}
