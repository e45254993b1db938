//! Horn filling, edge-path presentations and finite covers.
mod cover;
mod group;
mod kan;
mod pi;

pub use cover::{build_cover, first_nontrivial_hom, labeling_from_hom, verify_covering, CoverLabeling, CoveringReport};
pub use group::FiniteGroup;
pub use kan::{enumerate_horns, fibration_check, fill_horn, kan_check, FibrationReport, HornMap, KanReport, DEFAULT_KAN_DIM};
pub use pi::{
    abelianization, free_reduce, invert, pi0, pi1_presentation, tietze_simplify, Components, GroupPresentation, Letter,
    Simplified, Word, DEFAULT_TIETZE_BUDGET,
};
