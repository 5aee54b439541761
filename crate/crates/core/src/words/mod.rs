//! Exact combinatorics on binary words.

mod farey;
mod lambda;
mod lyndon;
mod sequences;
mod substitution;
mod word;

pub use farey::{
    farey_form, farey_frequency, farey_level, farey_words_up_to, is_farey, is_proper_farey,
    FareyForm, FareyLevel, MAX_FAREY_LEVEL,
};
pub use lambda::{
    conjugate, lambda_enumerate, lambda_factorize, lambda_product, LambdaWord, MAX_LAMBDA_LEN,
};
pub use lyndon::{is_lyndon, largest_rotation, smallest_rotation};
pub use sequences::{
    count_ordered_factorizations, thue_morse_digit, thue_morse_prefix, MAX_FACTORIZATION_ARG,
    MAX_THUE_MORSE_LEN,
};
pub use substitution::{substitute, substitute_seq, Substitution};
pub use word::{word_minus, word_plus, BinaryWord};
