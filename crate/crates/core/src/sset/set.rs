use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::simplex::{GenId, Simplex};

/// A non-degenerate generator: its codimension-1 faces in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub faces: Vec<Simplex>,
    pub label: Option<String>,
}

impl Generator {
    pub fn new(faces: Vec<Simplex>) -> Self {
        Self { faces, label: None }
    }

    pub fn labeled(faces: Vec<Simplex>, label: impl Into<String>) -> Self {
        Self { faces, label: Some(label.into()) }
    }
}

/// First invariant violation found by [`SimplicialSet::is_valid`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    FaceCount { gen: GenId, found: usize },
    DanglingFace { gen: GenId, face: usize, target: GenId },
    FaceDimension { gen: GenId, face: usize },
    NonCanonical { gen: GenId, face: usize },
    Identity { gen: GenId, i: usize, j: usize, left: Simplex, right: Simplex },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FaceCount { gen, found } => write!(f, "generator {gen} has {found} faces"),
            Violation::DanglingFace { gen, face, target } => {
                write!(f, "face {face} of generator {gen} refers to missing generator {target}")
            }
            Violation::FaceDimension { gen, face } => {
                write!(f, "face {face} of generator {gen} has the wrong dimension")
            }
            Violation::NonCanonical { gen, face } => {
                write!(f, "face {face} of generator {gen} has a non-canonical degeneracy word")
            }
            Violation::Identity { gen, i, j, left, right } => write!(
                f,
                "generator {gen} violates d{i}d{j} = d{}d{i}: {left} != {right}",
                j - 1
            ),
        }
    }
}

/// A finitely presented simplicial set.
///
/// Generators are stored per dimension with dense indices. The value is
/// immutable once built; cloning shares the generator table.
#[derive(Clone, Debug, Default)]
pub struct SimplicialSet {
    levels: Arc<Vec<Vec<Generator>>>,
}

impl PartialEq for SimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.levels, &other.levels) || self.levels == other.levels
    }
}

impl Eq for SimplicialSet {}

impl SimplicialSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a simplicial set and checks every invariant.
    pub fn from_generators(levels: Vec<Vec<Generator>>) -> Result<Self> {
        let set = Self::from_generators_unchecked(levels);
        set.is_valid().map_err(Error::Invalid)?;
        Ok(set)
    }

    /// Builds without validation. Useful for constructing deliberately broken
    /// inputs; everything else in the crate assumes validity.
    pub fn from_generators_unchecked(mut levels: Vec<Vec<Generator>>) -> Self {
        while levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        Self { levels: Arc::new(levels) }
    }

    pub fn levels(&self) -> &[Vec<Generator>] {
        &self.levels
    }

    pub fn into_generators(self) -> Vec<Vec<Generator>> {
        Arc::try_unwrap(self.levels).unwrap_or_else(|shared| (*shared).clone())
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Largest generator dimension, `None` for the empty set.
    pub fn top_dim(&self) -> Option<usize> {
        self.levels.len().checked_sub(1)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.levels.get(dim).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn total_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn generator(&self, id: GenId) -> Result<&Generator> {
        self.levels.get(id.dim).and_then(|l| l.get(id.idx)).ok_or(Error::DanglingId(id))
    }

    pub fn contains(&self, id: GenId) -> bool {
        self.generator(id).is_ok()
    }

    pub fn ids(&self, dim: usize) -> impl Iterator<Item = GenId> + '_ {
        (0..self.count(dim)).map(move |idx| GenId::new(dim, idx))
    }

    pub fn all_ids(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..self.levels.len()).flat_map(move |d| self.ids(d))
    }

    /// Human-readable name of a simplex, using generator labels when present.
    pub fn describe(&self, s: &Simplex) -> String {
        let base = match self.generator(s.base()).ok().and_then(|g| g.label.as_deref()) {
            Some(label) => format!("<{label}>"),
            None => format!("[{}]", s.base()),
        };
        let word: String = s.word().iter().map(|j| format!("s{j}")).collect();
        format!("{word}{base}")
    }

    /// The face operator `d_i`, rewritten to canonical form.
    pub fn face(&self, s: &Simplex, i: usize) -> Result<Simplex> {
        let n = s.dim();
        if n == 0 {
            return Err(Error::FaceOfVertex);
        }
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, dim: n });
        }
        let eta = s.surjection();
        let value = eta[i];
        let mut rest = eta;
        rest.remove(i);
        if rest.contains(&value) {
            // i sits next to a repeated position: d_i s_j = id.
            return Ok(Simplex::from_surjection(s.base(), &rest));
        }
        let gen = self.generator(s.base())?;
        let inner = gen.faces.get(value).ok_or(Error::DanglingId(s.base()))?;
        let squeezed: Vec<usize> = rest.iter().map(|&v| if v > value { v - 1 } else { v }).collect();
        Ok(inner.degenerate_by(&squeezed))
    }

    /// Front face on vertices `0..=p`.
    pub fn front(&self, s: &Simplex, p: usize) -> Result<Simplex> {
        let mut cur = s.clone();
        while cur.dim() > p {
            let last = cur.dim();
            cur = self.face(&cur, last)?;
        }
        Ok(cur)
    }

    /// Back face on vertices `dim-q..=dim`.
    pub fn back(&self, s: &Simplex, q: usize) -> Result<Simplex> {
        let mut cur = s.clone();
        while cur.dim() > q {
            cur = self.face(&cur, 0)?;
        }
        Ok(cur)
    }

    /// Vertex generators of a simplex, in order (with repetitions for
    /// degenerate simplices).
    pub fn vertices(&self, s: &Simplex) -> Result<Vec<usize>> {
        let n = s.dim();
        (0..=n)
            .map(|i| {
                let tail = self.back(s, n - i)?;
                Ok(self.front(&tail, 0)?.base().idx)
            })
            .collect()
    }

    /// Every `n`-simplex (degenerate or not), grouped by base dimension and
    /// generator id, words in lexicographic order of positions.
    pub fn all_simplices(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for m in 0..=n.min(self.levels.len().saturating_sub(1)) {
            if self.count(m) == 0 {
                continue;
            }
            let words = degeneracy_words(n, n - m);
            for id in self.ids(m) {
                for w in &words {
                    out.push(Simplex::from_parts_unchecked(id, w.clone()));
                }
            }
        }
        out
    }

    /// Checks structural invariants and the simplicial identities
    /// `d_i d_j = d_{j-1} d_i` for `i < j` on every generator.
    pub fn is_valid(&self) -> Result<(), Violation> {
        for (dim, level) in self.levels.iter().enumerate() {
            for (idx, gen) in level.iter().enumerate() {
                let id = GenId::new(dim, idx);
                let expected = if dim == 0 { 0 } else { dim + 1 };
                if gen.faces.len() != expected {
                    return Err(Violation::FaceCount { gen: id, found: gen.faces.len() });
                }
                for (face, s) in gen.faces.iter().enumerate() {
                    if s.dim() + 1 != dim {
                        return Err(Violation::FaceDimension { gen: id, face });
                    }
                    if Simplex::new(s.base(), s.word().to_vec()).is_err() {
                        return Err(Violation::NonCanonical { gen: id, face });
                    }
                    if !self.contains(s.base()) {
                        return Err(Violation::DanglingFace { gen: id, face, target: s.base() });
                    }
                }
            }
        }
        for (dim, level) in self.levels.iter().enumerate().skip(2) {
            for idx in 0..level.len() {
                let id = GenId::new(dim, idx);
                let sigma = Simplex::generator(id);
                for j in 1..=dim {
                    for i in 0..j {
                        let left = self.face(&self.face(&sigma, j).unwrap(), i).unwrap();
                        let right = self.face(&self.face(&sigma, i).unwrap(), j - 1).unwrap();
                        if left != right {
                            return Err(Violation::Identity { gen: id, i, j, left, right });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// All strictly decreasing words of length `k` over `0..n`.
pub(crate) fn degeneracy_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.iter().rev().copied().collect());
            return;
        }
        for t in start..n {
            cur.push(t);
            rec(t + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
