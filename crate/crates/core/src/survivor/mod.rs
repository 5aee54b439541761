//! Word counts for the survivor set and for the boundary sets of product words.

mod automaton;
mod count;

pub use count::{
    count_admissible, gamma_count, lower_bound_subshift, subshift_blocks, CountProfile,
    MAX_GAMMA_WORD, MAX_WORD_LEN,
};
