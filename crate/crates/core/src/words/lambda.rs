use std::collections::BTreeMap;
use std::fmt;

use crate::error::{domain, Error, Result};

use super::farey::{farey_words_up_to, is_proper_farey};
use super::lyndon::largest_rotation;
use super::substitution::Substitution;
use super::word::BinaryWord;

/// Largest product length accepted by [`lambda_enumerate`].
pub const MAX_LAMBDA_LEN: usize = 24;

/// A product `s_1 • s_2 • ... • s_k` of non-degenerate Farey words, with its factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaWord {
    product: BinaryWord,
    factors: Vec<BinaryWord>,
}

impl LambdaWord {
    pub fn product(&self) -> &BinaryWord {
        &self.product
    }

    pub fn factors(&self) -> &[BinaryWord] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.product.len()
    }

    pub fn is_empty(&self) -> bool {
        self.product.is_empty()
    }

    /// `self • r` for a Farey word `factor`.
    pub fn extend(&self, factor: &BinaryWord) -> Result<LambdaWord> {
        check_factor(factor)?;
        let product = Substitution::new(&self.product)?.apply(factor)?;
        let mut factors = self.factors.clone();
        factors.push(factor.clone());
        Ok(LambdaWord { product, factors })
    }

    /// The substitution map of the product.
    pub fn substitution(&self) -> Substitution {
        Substitution::new(&self.product).expect("products are Lyndon words of length >= 2")
    }
}

impl fmt::Display for LambdaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.product)
    }
}

fn check_factor(candidate: &BinaryWord) -> Result<()> {
    if is_proper_farey(candidate) {
        Ok(())
    } else {
        Err(domain(format!(
            "{candidate} is not a non-degenerate Farey word"
        )))
    }
}

/// Left fold of the substitution product over `factors`.
pub fn lambda_product(factors: &[BinaryWord]) -> Result<LambdaWord> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| domain("a product needs at least one factor"))?;
    check_factor(first)?;
    let mut acc = LambdaWord {
        product: first.clone(),
        factors: vec![first.clone()],
    };
    for factor in rest {
        acc = acc.extend(factor)?;
    }
    Ok(acc)
}

/// Factor `word` as a product of Farey words, if it lies in the semigroup.
///
/// The first factor of length `d` is forced by the prefix of `word` (the image
/// starts with `s-`), and the cofactor is forced by inverting the block map,
/// so trying each divisor `d` of `|word|` decides membership.
pub fn lambda_factorize(word: &BinaryWord) -> Option<LambdaWord> {
    let n = word.len();
    if n < 2 {
        return None;
    }
    if is_proper_farey(word) {
        return Some(LambdaWord {
            product: word.clone(),
            factors: vec![word.clone()],
        });
    }
    for d in 2..n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mut head = word.prefix(d);
        if head.last() != Some(0) {
            continue;
        }
        head.pop();
        head.push(1);
        if !is_proper_farey(&head) {
            continue;
        }
        let Ok(sub) = Substitution::new(&head) else {
            continue;
        };
        let Some(cofactor) = sub.invert(word) else {
            continue;
        };
        if let Some(inner) = lambda_factorize(&cofactor) {
            let mut factors = vec![head];
            factors.extend(inner.factors);
            return Some(LambdaWord {
                product: word.clone(),
                factors,
            });
        }
    }
    None
}

/// Every product of length at most `max_len`, keyed and ordered by product word.
pub fn lambda_enumerate(max_len: usize) -> Result<Vec<LambdaWord>> {
    if max_len > MAX_LAMBDA_LEN {
        return Err(Error::ResourceLimit(format!(
            "product length {max_len} exceeds the maximum {MAX_LAMBDA_LEN}"
        )));
    }
    let farey = farey_words_up_to(max_len);
    let mut found: BTreeMap<BinaryWord, LambdaWord> = BTreeMap::new();
    let mut frontier: Vec<LambdaWord> = farey
        .iter()
        .map(|head| LambdaWord {
            product: head.clone(),
            factors: vec![head.clone()],
        })
        .collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for word in frontier {
            for factor in farey
                .iter()
                .filter(|factor| word.len() * factor.len() <= max_len)
            {
                next.push(word.extend(factor)?);
            }
            found.entry(word.product.clone()).or_insert(word);
        }
        frontier = next;
    }
    Ok(found.into_values().collect())
}

/// Reflection of the largest rotation, for Farey words and semigroup products.
pub fn conjugate(word: &BinaryWord) -> Result<BinaryWord> {
    if word.len() == 1 || lambda_factorize(word).is_some() {
        Ok(largest_rotation(word)?.reflect())
    } else {
        Err(domain(format!(
            "{word} is neither a Farey word nor a semigroup product"
        )))
    }
}
