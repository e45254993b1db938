use crate::error::{Error, Result};
use crate::operators::{complex_to_sset, OrderedSimplicialComplex};
use crate::sset::{boundary, circle, discrete, horn, point, product, sphere, std_simplex, SimplicialSet};

use super::space::parse_space;

const KLEIN: &str = include_str!("../../data/klein.sset");

/// Facets of the six-vertex projective plane.
const RP2_FACETS: [[usize; 3]; 10] = [
    [0, 1, 3],
    [0, 1, 5],
    [0, 2, 4],
    [0, 2, 5],
    [0, 3, 4],
    [1, 2, 3],
    [1, 2, 4],
    [1, 4, 5],
    [2, 3, 5],
    [3, 4, 5],
];

/// Names accepted by [`catalog`], with a one-line description each.
pub const CATALOG: [(&str, &str); 10] = [
    ("delta:n", "standard n-simplex"),
    ("boundary:n", "boundary of the n-simplex"),
    ("horn:n:k", "k-th horn of the n-simplex"),
    ("sphere:n", "n-simplex modulo its boundary"),
    ("circle", "one vertex, one edge"),
    ("torus", "product of two circles"),
    ("rp2", "six-vertex projective plane"),
    ("klein", "one-vertex Klein bottle"),
    ("point", "the 0-simplex"),
    ("discrete:m", "m isolated points"),
];

/// Names of the parameter-free spaces plus small instances of the
/// parametrised ones.
pub const CATALOG_EXAMPLES: [&str; 16] = [
    "point", "circle", "torus", "rp2", "klein", "delta:1", "delta:2", "delta:3", "boundary:2", "boundary:3",
    "boundary:4", "horn:2:0", "horn:3:1", "sphere:2", "sphere:3", "discrete:2",
];

pub fn rp2() -> SimplicialSet {
    let facets: Vec<Vec<usize>> = RP2_FACETS.iter().map(|f| f.to_vec()).collect();
    let l = OrderedSimplicialComplex::from_facets(6, &facets).expect("valid triangulation");
    complex_to_sset(&l).expect("valid complex")
}

pub fn klein() -> SimplicialSet {
    parse_space(KLEIN).expect("shipped document is valid")
}

pub fn torus() -> SimplicialSet {
    product(&circle(), &circle()).space
}

/// Largest simplex dimension the parametrised entries accept.
pub const MAX_CATALOG_DIM: usize = 12;

pub fn catalog(name: &str) -> Result<SimplicialSet> {
    let unknown = || Error::UnknownSpace(name.to_string());
    let parts: Vec<&str> = name.split(':').collect();
    let parse = |s: &str| s.parse::<usize>().ok().filter(|v| v.to_string() == s);
    let num = |s: &str| parse(s).filter(|&v| v <= MAX_CATALOG_DIM).ok_or_else(unknown);
    match parts[..] {
        ["point"] => Ok(point()),
        ["circle"] => Ok(circle()),
        ["torus"] => Ok(torus()),
        ["rp2"] => Ok(rp2()),
        ["klein"] => Ok(klein()),
        ["delta", n] => Ok(std_simplex(num(n)?)),
        ["boundary", n] => Ok(boundary(num(n)?)),
        ["sphere", n] => Ok(sphere(num(n)?)),
        ["discrete", m] => Ok(discrete(parse(m).ok_or_else(unknown)?)),
        ["horn", n, k] => horn(num(n)?, num(k)?),
        _ => Err(unknown()),
    }
}
