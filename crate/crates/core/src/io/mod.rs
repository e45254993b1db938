//! Text formats for spaces, matrices and groups, and the named-space catalog.
mod catalog;
mod space;
mod text;

pub use catalog::{catalog, klein, rp2, torus, CATALOG, CATALOG_EXAMPLES, MAX_CATALOG_DIM};
pub use space::{parse_document, parse_space, print_document, print_space, SpaceDocument, SPACE_HEADER};
pub use text::{parse_group, parse_matrix, parse_simplex, print_group, GROUP_HEADER, MATRIX_HEADER};
