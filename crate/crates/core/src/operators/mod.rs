//! Chain-level operators: prism homotopies, barycentric subdivision, the
//! Alexander–Whitney and shuffle maps, cross and cup products.

mod cup;
mod eilenberg_zilber;
mod prism;
mod subdivision;

pub use cup::{cup_product, Cochain, CohomologyRing};
pub use eilenberg_zilber::{alexander_whitney, kunneth_check, shuffle_ez, shuffle_sign, EilenbergZilber, KunnethReport};
pub use prism::{
    constant_homotopy, find_homotopy, homotopic_maps_equal_on_homology, prism_end, prism_homotopy, HomotopyReport,
};
pub use subdivision::{barycentric_subdivide, complex_to_sset, sset_to_complex, OrderedSimplicialComplex, Subdivision};
