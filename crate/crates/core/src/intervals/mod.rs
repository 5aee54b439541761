//! Parameter intervals, renormalization and classification of bases.

mod base;
mod classify;
mod record;
mod renormalize;

pub use base::{Base, Expansion};
pub use classify::{
    classify, ClassificationResult, ClassifyConfig, RegimeKind, DEFAULT_MAX_DEPTH,
    DEFAULT_MAX_FACTOR_LEN,
};
pub use record::{interval_table, lyndon_interval, EndpointExpansions, IntervalRecord};
pub use renormalize::{renormalize, Renormalized};
