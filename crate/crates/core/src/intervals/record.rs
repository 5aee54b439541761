use rayon::prelude::*;

use crate::error::Result;
use crate::expansions::{solve_base_with_residual, EventuallyPeriodicSeq, HighPrecReal};
use crate::words::{lambda_enumerate, BinaryWord, LambdaWord};

use super::base::Base;

/// Solved endpoints of the Lyndon interval `[left, right]` and basic interval `[left, star]`.
#[derive(Clone, Debug)]
pub struct IntervalRecord {
    pub word: LambdaWord,
    pub beta_left: HighPrecReal,
    pub beta_star: HighPrecReal,
    pub beta_right: HighPrecReal,
    /// Defining-equation residuals, in the order left, star, right.
    pub residuals: [HighPrecReal; 3],
}

/// Expansions of 1 at the three endpoints of a product word `w` with `A = L(w)`:
/// `A^∞`, `A+ w- A^∞` and `A+ w^∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointExpansions {
    pub left: EventuallyPeriodicSeq,
    pub star: EventuallyPeriodicSeq,
    pub right: EventuallyPeriodicSeq,
}

impl EndpointExpansions {
    pub fn of(word: &LambdaWord) -> Self {
        let sub = word.substitution();
        let rotation = sub.rotation().clone();
        let rotation_plus = sub.rotation_plus().clone();
        let periodic = |w: &BinaryWord| EventuallyPeriodicSeq::periodic(w).expect("nonempty");
        let star_head = rotation_plus.concat(sub.word_minus());
        Self {
            left: periodic(&rotation),
            star: EventuallyPeriodicSeq::new(star_head, rotation.clone()).expect("nonempty"),
            right: EventuallyPeriodicSeq::new(rotation_plus, word.product().clone())
                .expect("nonempty"),
        }
    }
}

/// Solve the three endpoint equations for `word`.
pub fn lyndon_interval(word: &LambdaWord, precision: u32) -> Result<IntervalRecord> {
    let ends = EndpointExpansions::of(word);
    let one = HighPrecReal::one(precision);
    let (beta_left, r_left) = solve_base_with_residual(&ends.left, &one)?;
    let (beta_star, r_star) = solve_base_with_residual(&ends.star, &one)?;
    let (beta_right, r_right) = solve_base_with_residual(&ends.right, &one)?;
    Ok(IntervalRecord {
        word: word.clone(),
        beta_left,
        beta_star,
        beta_right,
        residuals: [r_left, r_star, r_right],
    })
}

impl IntervalRecord {
    pub fn expansions(&self) -> EndpointExpansions {
        EndpointExpansions::of(&self.word)
    }

    pub fn left_base(&self) -> Base {
        self.base_at(self.beta_left.clone(), self.expansions().left)
    }

    pub fn star_base(&self) -> Base {
        self.base_at(self.beta_star.clone(), self.expansions().star)
    }

    pub fn right_base(&self) -> Base {
        self.base_at(self.beta_right.clone(), self.expansions().right)
    }

    fn base_at(&self, value: HighPrecReal, seq: EventuallyPeriodicSeq) -> Base {
        Base::from_parts(value, seq)
    }

    /// `beta` lies in the basic interval `[left, star]`.
    pub fn basic_contains(&self, beta: &HighPrecReal) -> bool {
        *beta >= self.beta_left && *beta <= self.beta_star
    }

    /// `beta` lies in the Lyndon interval `[left, right]`.
    pub fn lyndon_contains(&self, beta: &HighPrecReal) -> bool {
        *beta >= self.beta_left && *beta <= self.beta_right
    }
}

/// Records for every product of length at most `max_len`, sorted by left endpoint.
pub fn interval_table(max_len: usize, precision: u32) -> Result<Vec<IntervalRecord>> {
    let words = lambda_enumerate(max_len)?;
    let mut records = words
        .par_iter()
        .map(|w| lyndon_interval(w, precision))
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.beta_left.cmp(&b.beta_left));
    Ok(records)
}
