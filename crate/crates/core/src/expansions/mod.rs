//! Digit sequences, high-precision values and beta-expansions.

mod digits;
mod real;
mod sequence;
mod value;

pub use digits::{greedy, quasi_greedy, DigitPrefix};
pub use real::{parse_decimal, HighPrecReal, DEFAULT_PRECISION, MIN_PRECISION};
pub use sequence::{lex_compare, shift_dominated, EventuallyPeriodicSeq};
pub use value::{seq_value, solve_base, solve_base_with_residual, solve_unit, word_value};

pub(crate) use value::{bisect_decreasing, search_floor};
