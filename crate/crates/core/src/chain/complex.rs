use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};
use crate::sset::{GenId, Simplex, SimplicialMap, SimplicialSet, Subcomplex};

/// A bounded chain complex of free abelian groups with labeled bases.
///
/// `boundary(n)` is the matrix of `∂_n : C_n → C_{n-1}` (rows index
/// `C_{n-1}`); degrees outside `0..=max_degree` are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    labels: Vec<Vec<String>>,
    boundaries: Vec<IntegerMatrix>,
}

impl ChainComplex {
    /// Checks shapes and `∂∂ = 0`.
    pub fn new(labels: Vec<Vec<String>>, boundaries: Vec<IntegerMatrix>) -> Result<Self> {
        let c = Self::new_unchecked(labels, boundaries)?;
        c.verify()?;
        Ok(c)
    }

    pub fn new_unchecked(labels: Vec<Vec<String>>, mut boundaries: Vec<IntegerMatrix>) -> Result<Self> {
        if boundaries.len() > labels.len() {
            return Err(Error::Shape("more boundary matrices than degrees".into()));
        }
        while boundaries.len() < labels.len() {
            let n = boundaries.len();
            let below = if n == 0 { 0 } else { labels[n - 1].len() };
            boundaries.push(IntegerMatrix::zeros(below, labels[n].len()));
        }
        for (n, b) in boundaries.iter().enumerate() {
            let below = if n == 0 { 0 } else { labels[n - 1].len() };
            if b.rows() != below || b.cols() != labels[n].len() {
                return Err(Error::Shape(format!("boundary in degree {n} is {}x{}", b.rows(), b.cols())));
            }
        }
        Ok(Self { labels, boundaries })
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.labels.len().checked_sub(1)
    }

    /// Number of stored degrees (`max_degree + 1`).
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rank(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn labels(&self, n: usize) -> &[String] {
        self.labels.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn boundary(&self, n: usize) -> IntegerMatrix {
        match self.boundaries.get(n) {
            Some(b) => b.clone(),
            None => IntegerMatrix::zeros(if n == 0 { 0 } else { self.rank(n - 1) }, self.rank(n)),
        }
    }

    /// Verifies `∂_{n-1} ∂_n = 0` exactly in every degree.
    pub fn verify(&self) -> Result<()> {
        for n in 2..self.boundaries.len() {
            if !(&self.boundaries[n - 1] * &self.boundaries[n]).is_zero() {
                return Err(Error::BoundarySquare(n));
            }
        }
        Ok(())
    }

    /// Truncation to degrees `0..=n`.
    pub fn truncate(&self, n: usize) -> Self {
        let keep = (n + 1).min(self.labels.len());
        Self { labels: self.labels[..keep].to_vec(), boundaries: self.boundaries[..keep].to_vec() }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks().iter().enumerate().map(|(n, &r)| if n % 2 == 0 { r as i64 } else { -(r as i64) }).sum()
    }
}

/// Degree-preserving chain map given by one matrix per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub matrices: Vec<IntegerMatrix>,
}

impl ChainMap {
    pub fn matrix(&self, n: usize, source: &ChainComplex, target: &ChainComplex) -> IntegerMatrix {
        self.matrices.get(n).cloned().unwrap_or_else(|| IntegerMatrix::zeros(target.rank(n), source.rank(n)))
    }

    pub fn identity(c: &ChainComplex) -> Self {
        Self { matrices: c.ranks().iter().map(|&r| IntegerMatrix::identity(r)).collect() }
    }

    pub fn zero(source: &ChainComplex, target: &ChainComplex) -> Self {
        let top = source.len().max(target.len());
        Self { matrices: (0..top).map(|n| IntegerMatrix::zeros(target.rank(n), source.rank(n))).collect() }
    }

    /// Checks `∂ f = f ∂` in every degree, entry-exactly.
    pub fn verify(&self, source: &ChainComplex, target: &ChainComplex) -> Result<()> {
        let top = source.len().max(target.len());
        for n in 0..top {
            let f = self.matrix(n, source, target);
            if f.rows() != target.rank(n) || f.cols() != source.rank(n) {
                return Err(Error::NotChainMap(format!("matrix in degree {n} has the wrong shape")));
            }
            if n == 0 {
                continue;
            }
            let lhs = &target.boundary(n) * &f;
            let rhs = &self.matrix(n - 1, source, target) * &source.boundary(n);
            if lhs != rhs {
                return Err(Error::NotChainMap(format!("boundary does not commute in degree {n}")));
            }
        }
        Ok(())
    }

    pub fn compose_after(&self, first: &ChainMap, source: &ChainComplex, mid: &ChainComplex, target: &ChainComplex) -> ChainMap {
        let top = source.len().max(target.len());
        ChainMap {
            matrices: (0..top).map(|n| &self.matrix(n, mid, target) * &first.matrix(n, source, mid)).collect(),
        }
    }
}

/// Degree +1 maps `D_n : C_n → D_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainHomotopy {
    pub matrices: Vec<IntegerMatrix>,
}

impl ChainHomotopy {
    pub fn matrix(&self, n: usize, source: &ChainComplex, target: &ChainComplex) -> IntegerMatrix {
        self.matrices.get(n).cloned().unwrap_or_else(|| IntegerMatrix::zeros(target.rank(n + 1), source.rank(n)))
    }

    /// Checks `∂D + D∂ = g − f` in every degree.
    pub fn verify(&self, source: &ChainComplex, target: &ChainComplex, f: &ChainMap, g: &ChainMap) -> Result<()> {
        let top = source.len().max(target.len());
        for n in 0..top {
            let mut lhs = &target.boundary(n + 1) * &self.matrix(n, source, target);
            if n > 0 {
                lhs = &lhs + &(&self.matrix(n - 1, source, target) * &source.boundary(n));
            }
            let rhs = &g.matrix(n, source, target) - &f.matrix(n, source, target);
            if lhs != rhs {
                return Err(Error::NotChainMap(format!("homotopy identity fails in degree {n}")));
            }
        }
        Ok(())
    }
}

fn generator_labels(k: &SimplicialSet) -> Vec<Vec<String>> {
    k.levels()
        .iter()
        .enumerate()
        .map(|(d, level)| {
            (0..level.len()).map(|i| k.describe(&Simplex::generator(GenId::new(d, i)))).collect()
        })
        .collect()
}

/// Normalized chains: free on non-degenerate generators,
/// `∂σ = Σ (−1)^i [d_i σ]` with degenerate faces dropped.
pub fn normalized_chains(k: &SimplicialSet) -> ChainComplex {
    let mut boundaries = Vec::with_capacity(k.levels().len());
    for n in 0..k.levels().len() {
        let below = if n == 0 { 0 } else { k.count(n - 1) };
        let mut b = IntegerMatrix::zeros(below, k.count(n));
        if n > 0 {
            for (j, gen) in k.levels()[n].iter().enumerate() {
                for (i, face) in gen.faces.iter().enumerate() {
                    if !face.is_degenerate() {
                        b.add_at(face.base().idx, j, &sign(i));
                    }
                }
            }
        }
        boundaries.push(b);
    }
    ChainComplex::new_unchecked(generator_labels(k), boundaries).expect("shapes from generator counts")
}

pub(crate) fn sign(i: usize) -> BigInt {
    if i % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Unnormalized chains in degrees `0..=up_to`: free on all simplices,
/// degenerate ones included.
pub fn unnormalized_chains(k: &SimplicialSet, up_to: usize) -> ChainComplex {
    if k.is_empty() {
        return ChainComplex::new_unchecked(vec![Vec::new(); up_to + 1], Vec::new()).expect("empty");
    }
    let bases: Vec<Vec<Simplex>> = (0..=up_to).map(|n| k.all_simplices(n)).collect();
    let index: Vec<HashMap<&Simplex, usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    let mut boundaries = Vec::with_capacity(up_to + 1);
    for n in 0..=up_to {
        let below = if n == 0 { 0 } else { bases[n - 1].len() };
        let mut b = IntegerMatrix::zeros(below, bases[n].len());
        if n > 0 {
            for (j, s) in bases[n].iter().enumerate() {
                for i in 0..=n {
                    let face = k.face(s, i).expect("valid space");
                    b.add_at(index[n - 1][&face], j, &sign(i));
                }
            }
        }
        boundaries.push(b);
    }
    let labels = bases.iter().map(|b| b.iter().map(|s| k.describe(s)).collect()).collect();
    ChainComplex::new_unchecked(labels, boundaries).expect("shapes from enumeration")
}

/// Chain map `f#` on normalized chains: generators go to their image, or to
/// zero when the image is degenerate.
pub fn induced_chain_map(f: &SimplicialMap) -> ChainMap {
    let source = f.source();
    let target = f.target();
    let top = source.levels().len();
    let matrices = (0..top)
        .map(|n| {
            let mut m = IntegerMatrix::zeros(target.count(n), source.count(n));
            for (j, img) in f.images()[n].iter().enumerate() {
                if !img.is_degenerate() {
                    m.set(img.base().idx, j, BigInt::one());
                }
            }
            m
        })
        .collect();
    ChainMap { matrices }
}

/// Normalized relative chains `C(K)/C(L)`, based on the generators of `K`
/// outside `L` (in their original order).
#[derive(Clone, Debug)]
pub struct RelativeChains {
    pub complex: ChainComplex,
    /// Per degree, the ambient generator index of each relative basis element.
    pub basis: Vec<Vec<usize>>,
}

pub fn relative_chains(k: &SimplicialSet, l: &Subcomplex) -> Result<RelativeChains> {
    if l.ambient() != k {
        return Err(Error::NotSubcomplex("subcomplex of a different space".into()));
    }
    let full = normalized_chains(k);
    let basis: Vec<Vec<usize>> = (0..k.levels().len())
        .map(|d| k.ids(d).filter(|id| !l.contains(*id)).map(|id| id.idx).collect())
        .collect();
    let labels = basis.iter().enumerate().map(|(d, b)| b.iter().map(|&i| full.labels(d)[i].clone()).collect()).collect();
    let boundaries = (0..basis.len())
        .map(|n| {
            let rows = if n == 0 { Vec::new() } else { basis[n - 1].clone() };
            full.boundary(n).select(&rows, &basis[n])
        })
        .collect();
    Ok(RelativeChains { complex: ChainComplex::new_unchecked(labels, boundaries)?, basis })
}

/// Tensor product complex with the Koszul sign: `∂(a ⊗ b) = ∂a ⊗ b + (−1)^{|a|} a ⊗ ∂b`.
///
/// Degree-`n` basis: pairs `(p, i, j)` with `p + q = n`, ordered by `p`,
/// then `i`, then `j`.
#[derive(Clone, Debug)]
pub struct TensorComplex {
    pub complex: ChainComplex,
    index: Vec<HashMap<(usize, usize, usize), usize>>,
    entries: Vec<Vec<(usize, usize, usize)>>,
}

impl TensorComplex {
    pub fn new(a: &ChainComplex, b: &ChainComplex) -> Self {
        let top = (a.len() + b.len()).saturating_sub(1);
        let mut entries: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); top];
        for (n, slot) in entries.iter_mut().enumerate() {
            for p in 0..=n {
                for i in 0..a.rank(p) {
                    for j in 0..b.rank(n - p) {
                        slot.push((p, i, j));
                    }
                }
            }
        }
        let index: Vec<HashMap<_, _>> =
            entries.iter().map(|e| e.iter().enumerate().map(|(k, t)| (*t, k)).collect()).collect();
        let mut boundaries = Vec::with_capacity(top);
        for n in 0..top {
            let below = if n == 0 { 0 } else { entries[n - 1].len() };
            let mut m = IntegerMatrix::zeros(below, entries[n].len());
            if n > 0 {
                for (col, &(p, i, j)) in entries[n].iter().enumerate() {
                    let q = n - p;
                    if p > 0 {
                        let da = a.boundary(p);
                        for r in 0..da.rows() {
                            let c = da.get(r, i);
                            if !c.is_zero() {
                                m.add_at(index[n - 1][&(p - 1, r, j)], col, c);
                            }
                        }
                    }
                    if q > 0 {
                        let db = b.boundary(q);
                        let s = sign(p);
                        for r in 0..db.rows() {
                            let c = db.get(r, j);
                            if !c.is_zero() {
                                m.add_at(index[n - 1][&(p, i, r)], col, &(c * &s));
                            }
                        }
                    }
                }
            }
            boundaries.push(m);
        }
        let labels = entries
            .iter()
            .enumerate()
            .map(|(n, e)| e.iter().map(|&(p, i, j)| format!("{}⊗{}", a.labels(p)[i], b.labels(n - p)[j])).collect())
            .collect();
        let complex = ChainComplex::new_unchecked(labels, boundaries).expect("tensor shapes");
        Self { complex, index, entries }
    }

    pub fn index_of(&self, p: usize, q: usize, i: usize, j: usize) -> Option<usize> {
        self.index.get(p + q).and_then(|m| m.get(&(p, i, j))).copied()
    }

    /// `(p, i, j)` of a basis element in degree `n`.
    pub fn entry(&self, n: usize, k: usize) -> (usize, usize, usize) {
        self.entries[n][k]
    }
}

/// Mapping cone of `f : C → D`: `cone_n = C_{n−1} ⊕ D_n` with
/// `∂(c, d) = (−∂c, f(c) + ∂d)`.
pub fn mapping_cone(f: &ChainMap, source: &ChainComplex, target: &ChainComplex) -> Result<ChainComplex> {
    f.verify(source, target)?;
    let top = source.len().max(target.len()) + 1;
    let rank = |n: usize| if n == 0 { 0 } else { source.rank(n - 1) } + target.rank(n);
    let mut labels = Vec::with_capacity(top);
    for n in 0..top {
        let mut l: Vec<String> = if n == 0 {
            Vec::new()
        } else {
            source.labels(n - 1).iter().map(|s| format!("c:{s}")).collect()
        };
        l.extend(target.labels(n).iter().map(|s| format!("d:{s}")));
        labels.push(l);
    }
    let mut boundaries = Vec::with_capacity(top);
    for n in 0..top {
        if n == 0 {
            boundaries.push(IntegerMatrix::zeros(0, rank(0)));
            continue;
        }
        let c_hi = source.rank(n - 1);
        let c_lo = if n >= 2 { source.rank(n - 2) } else { 0 };
        let top_left = if n >= 2 { -&source.boundary(n - 1) } else { IntegerMatrix::zeros(c_lo, c_hi) };
        let top_right = IntegerMatrix::zeros(c_lo, target.rank(n));
        let bottom_left = f.matrix(n - 1, source, target);
        let bottom_right = target.boundary(n);
        boundaries.push(IntegerMatrix::blocks(&top_left, &top_right, &bottom_left, &bottom_right));
    }
    ChainComplex::new(labels, boundaries)
}
