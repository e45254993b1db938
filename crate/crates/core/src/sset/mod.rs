//! Finitely presented simplicial sets.

mod construct;
mod map;
mod set;
mod simplex;

pub use construct::{
    boundary, circle, coproduct, discrete, face_closure, from_vertex_sets, horn, point, product, pushout, quotient,
    shuffles, skeleton, sphere, std_simplex, std_simplex_ref, subcomplex, Product, Pushout, Quotient, Subcomplex,
};
pub use map::SimplicialMap;
pub use set::{Generator, SimplicialSet, Violation};
pub use simplex::{surjection_from_word, word_from_surjection, GenId, Simplex};
