//! Finitely generated groups, their representations into SL(2,C) and
//! enumeration of word balls.

mod ball;
mod octagon;
mod representation;
mod word;

pub use ball::{ball_size, for_each_in_ball, group_ball, group_ball_with_cap, DEFAULT_WORD_CAP};
pub(crate) use ball::for_each_translate;
pub use octagon::{genus2_octagon, OCTAGON_RELATOR};
pub use representation::{evaluate_word, relator_residual, Representation};
pub use word::{GroupPresentation, Letter, Word};
