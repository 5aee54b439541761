//! Critical hole size `tau(beta)` for the beta-transformation `x -> beta*x mod 1`
//! with a hole `(0, t)`, for bases in `(1, 2]`.
//!
//! The crate is organised bottom-up:
//!
//! * [`words`]: binary words, Farey and Lyndon words, the substitution product
//!   and the semigroup it generates.
//! * [`expansions`]: high-precision reals, eventually periodic digit sequences,
//!   greedy / quasi-greedy expansions and the base solver.
//! * [`intervals`]: Lyndon and basic parameter intervals, renormalization and
//!   classification of a base.
//! * [`critical`]: the critical value itself in every regime.
//! * [`survivor`]: word counting for the symbolic survivor set.

pub mod critical;
pub mod error;
pub mod expansions;
pub mod intervals;
pub mod survivor;
pub mod words;

pub use critical::{
    tau, tau_basic, tau_curve, tau_jump, thue_morse_base, CurveGrid, JumpRecord, TauResult,
    ThueMorseBase, Witness,
};
pub use error::{Error, Result};
pub use expansions::{
    greedy, lex_compare, parse_decimal, quasi_greedy, seq_value, shift_dominated, solve_base,
    solve_unit, DigitPrefix, EventuallyPeriodicSeq, HighPrecReal, DEFAULT_PRECISION,
};
pub use intervals::{
    classify, interval_table, lyndon_interval, renormalize, Base, ClassificationResult,
    ClassifyConfig, Expansion, IntervalRecord, RegimeKind, Renormalized,
};
pub use survivor::{count_admissible, gamma_count, lower_bound_subshift, CountProfile};
pub use words::{
    conjugate, count_ordered_factorizations, farey_form, farey_frequency, farey_level,
    farey_words_up_to, is_farey, is_lyndon, lambda_enumerate, lambda_factorize, lambda_product,
    largest_rotation, smallest_rotation, substitute, substitute_seq, thue_morse_prefix, word_minus,
    word_plus, BinaryWord, FareyForm, FareyLevel, LambdaWord,
};
