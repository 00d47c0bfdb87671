//! Representation invariants of compact Lie groups, homogeneity rank of
//! linear actions, and the search that classifies absolutely irreducible
//! representations with vanishing homogeneity rank.

pub mod classify;
pub mod homrank;
pub mod lie;
pub mod parse;
pub mod repcalc;
pub mod verify;
