use thiserror::Error;

use crate::sset::{GenId, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for a simplex of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("face operator applied to a 0-simplex")]
    FaceOfVertex,
    #[error("no generator {0}")]
    DanglingId(GenId),
    #[error("degeneracy word {word:?} is not canonical for base dimension {base_dim}")]
    NonCanonicalWord { word: Vec<usize>, base_dim: usize },
    #[error("invalid simplicial set: {0}")]
    Invalid(Violation),
    #[error("horn index {k} out of range for dimension {n}")]
    HornIndex { n: usize, k: usize },
    #[error("generator set is not face-closed: {0} is missing")]
    NotFaceClosed(GenId),
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("pushout leg is not injective: {0}")]
    NonInjective(String),
    #[error("not a simplicial map: {0}")]
    NotSimplicialMap(String),
    #[error("chain complex is corrupted: boundary composite is nonzero in degree {0}")]
    BoundarySquare(usize),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("matrix dimension mismatch: {0}")]
    Shape(String),
    #[error("vector is not in the lattice")]
    NotInLattice,
    #[error("subcomplexes do not cover the space: {0} lies in neither")]
    NotACover(GenId),
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("homotopy is not a map out of a product with the 1-simplex: {0}")]
    NotAPrism(String),
    #[error("homotopy does not restrict to the given maps: {0}")]
    HomotopyEnds(String),
    #[error("incompatible horn data: {0}")]
    IncompatibleHorn(String),
    #[error("space is not connected ({0} components)")]
    Disconnected(usize),
    #[error("group table is invalid: {0}")]
    InvalidGroup(String),
    #[error("relator {name} does not map to the identity")]
    RelatorNotKilled { name: String },
    #[error("labeling violates the cocycle condition on {0}")]
    Cocycle(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown catalog space {0:?}")]
    UnknownSpace(String),
    #[error("invalid coefficient group {0:?}")]
    BadCoefficients(String),
    #[error("invalid ordered simplicial complex: {0}")]
    InvalidComplex(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
