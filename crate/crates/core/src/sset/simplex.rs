//! Canonical handles for simplices.
//!
//! Every simplex of a simplicial set is an iterated degeneracy of a unique
//! non-degenerate simplex. A [`Simplex`] stores that generator together with
//! the strictly decreasing degeneracy word `s_{j1} … s_{jk}` (`j1 > … > jk`),
//! which makes equality of simplices a plain comparison.
//!
//! Internally the word is interchangeable with a monotone surjection
//! `η: [n] → [m]`: the word is exactly the set of positions `t` with
//! `η(t) = η(t + 1)`. Face and degeneracy operators act by composing
//! surjections, which keeps the rewriting rules in one place.

use std::fmt;

use crate::error::{Error, Result};

/// Identifier of a non-degenerate generator: its dimension and its dense
/// index within that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenId {
    pub dim: usize,
    pub idx: usize,
}

impl GenId {
    pub const fn new(dim: usize, idx: usize) -> Self {
        Self { dim, idx }
    }
}

impl fmt::Display for GenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.dim, self.idx)
    }
}

/// A simplex in canonical (Eilenberg–Zilber) form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    base: GenId,
    word: Vec<usize>,
}

impl Simplex {
    /// The non-degenerate simplex of a generator.
    pub fn generator(base: GenId) -> Self {
        Self { base, word: Vec::new() }
    }

    /// Builds a simplex from a base and a degeneracy word, rejecting words
    /// that are not strictly decreasing or that use an out-of-range index.
    pub fn new(base: GenId, word: Vec<usize>) -> Result<Self> {
        let top = base.dim + word.len();
        let decreasing = word.windows(2).all(|w| w[0] > w[1]);
        // s_j applied to an (d)-simplex needs j <= d; for the canonical word
        // this reduces to j1 < top.
        let in_range = word.first().map_or(true, |&j| j < top);
        if !decreasing || !in_range {
            return Err(Error::NonCanonicalWord { word, base_dim: base.dim });
        }
        Ok(Self { base, word })
    }

    pub(crate) fn from_parts_unchecked(base: GenId, word: Vec<usize>) -> Self {
        Self { base, word }
    }

    /// The fully degenerate `dim`-simplex on a vertex.
    pub fn degenerate_vertex(vertex: usize, dim: usize) -> Self {
        Self { base: GenId::new(0, vertex), word: (0..dim).rev().collect() }
    }

    pub fn base(&self) -> GenId {
        self.base
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn dim(&self) -> usize {
        self.base.dim + self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    /// The monotone surjection `[dim] → [base.dim]` encoded by the word.
    pub fn surjection(&self) -> Vec<usize> {
        surjection_from_word(self.dim(), &self.word)
    }

    /// Canonical simplex `base ∘ η` for a monotone surjection `η`.
    pub fn from_surjection(base: GenId, eta: &[usize]) -> Self {
        debug_assert!(is_monotone_surjection(eta, base.dim));
        Self { base, word: word_from_surjection(eta) }
    }

    /// Applies the degeneracy `s_i`. Valid for `0 ≤ i ≤ dim`.
    pub fn degeneracy(&self, i: usize) -> Result<Self> {
        let n = self.dim();
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, dim: n });
        }
        let eta = self.surjection();
        let lifted: Vec<usize> = (0..=n + 1).map(|t| eta[if t <= i { t } else { t - 1 }]).collect();
        Ok(Self::from_surjection(self.base, &lifted))
    }

    /// Precomposes with a monotone surjection `θ: [k] → [dim]`, i.e. applies
    /// further degeneracies given in surjection form.
    pub fn degenerate_by(&self, theta: &[usize]) -> Self {
        let eta = self.surjection();
        let composed: Vec<usize> = theta.iter().map(|&t| eta[t]).collect();
        Self::from_surjection(self.base, &composed)
    }

    /// Removes the degeneracies at positions `positions` (a subset of the
    /// word), returning `x'` with `self = s_positions x'`.
    pub fn strip_degeneracies(&self, positions: &[usize]) -> Self {
        let n = self.dim();
        let collapse = surjection_from_word(n, &sorted_desc(positions));
        let eta = self.surjection();
        let m = n - positions.len();
        let mut reduced = vec![0; m + 1];
        for t in 0..=n {
            reduced[collapse[t]] = eta[t];
        }
        Self::from_surjection(self.base, &reduced)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in &self.word {
            write!(f, "s{j}")?;
        }
        write!(f, "[{}]", self.base)
    }
}

pub(crate) fn sorted_desc(positions: &[usize]) -> Vec<usize> {
    let mut v = positions.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v.dedup();
    v
}

/// `η: [n] → [n - |word|]` with `η(t) = η(t+1)` exactly for `t` in the word.
pub fn surjection_from_word(n: usize, word: &[usize]) -> Vec<usize> {
    let mut eta = Vec::with_capacity(n + 1);
    let mut value = 0;
    eta.push(0);
    for t in 0..n {
        if !word.contains(&t) {
            value += 1;
        }
        eta.push(value);
    }
    eta
}

pub fn word_from_surjection(eta: &[usize]) -> Vec<usize> {
    (0..eta.len().saturating_sub(1)).rev().filter(|&t| eta[t] == eta[t + 1]).collect()
}

fn is_monotone_surjection(eta: &[usize], m: usize) -> bool {
    !eta.is_empty()
        && eta[0] == 0
        && eta.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
        && eta[eta.len() - 1] == m
}
