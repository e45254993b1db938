mod complex;
mod exact;
mod group;
mod homology;
mod lattice;
mod matrix;
mod rank;
mod smith;
mod uct;

pub use complex::{
    induced_chain_map, mapping_cone, normalized_chains, relative_chains, unnormalized_chains, ChainComplex,
    ChainHomotopy, ChainMap, RelativeChains, TensorComplex,
};
pub(crate) use complex::sign;
pub use exact::{mayer_vietoris, pair_les, ExactSequence};
pub use group::{AbelianGroup, HomologyGroup};
pub use homology::{
    betti_euler, cohomology_model_mod, cohomology_with_coefficients, euler_characteristic, homology,
    homology_model, homology_model_mod, homology_with_coefficients, reduced_homology, space_homology,
};
pub use lattice::{Lattice, Subquotient};
pub use matrix::IntegerMatrix;
pub use rank::{mod_p_dimensions, rank_mod_p, rank_rational, rational_betti};
pub use smith::{invariant_factors, smith_normal_form, SmithForm};
pub use uct::{uct_check, UctReport};
