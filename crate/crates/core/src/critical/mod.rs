//! The critical value in each regime, special families and curves.

mod special;
mod tau;

pub use special::{
    tau_curve, tau_jump, thue_morse_base, CurveGrid, JumpRecord, ThueMorseBase, CHAIN_DEPTH,
};
pub use tau::{tau, tau_basic, TauResult, Witness};
