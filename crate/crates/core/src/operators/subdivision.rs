use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chain::{homology, mapping_cone, normalized_chains, sign, ChainComplex, ChainMap, IntegerMatrix};
use crate::error::{Error, Result};
use crate::sset::{from_vertex_sets, Simplex, SimplicialSet};

/// A simplicial complex on the vertices `0..vertex_count`, each face a
/// strictly increasing vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSimplicialComplex {
    vertex_count: usize,
    faces: BTreeSet<Vec<usize>>,
}

impl OrderedSimplicialComplex {
    /// Checks that faces are increasing, in range, and downward closed.
    pub fn new(vertex_count: usize, faces: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let faces: BTreeSet<Vec<usize>> = faces.into_iter().collect();
        for f in &faces {
            if f.is_empty() {
                return Err(Error::InvalidComplex("empty face".into()));
            }
            if f.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidComplex(format!("face {f:?} is not strictly increasing")));
            }
            if f.iter().any(|&v| v >= vertex_count) {
                return Err(Error::InvalidComplex(format!("face {f:?} uses a vertex outside 0..{vertex_count}")));
            }
            if f.len() > 1 {
                for i in 0..f.len() {
                    let mut sub = f.clone();
                    sub.remove(i);
                    if !faces.contains(&sub) {
                        return Err(Error::InvalidComplex(format!("face {sub:?} of {f:?} is missing")));
                    }
                }
            }
        }
        Ok(Self { vertex_count, faces })
    }

    /// The complex generated by the given simplices (vertex lists in any
    /// order); every vertex below `vertex_count` is included.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut faces: BTreeSet<Vec<usize>> = (0..vertex_count).map(|v| vec![v]).collect();
        for facet in facets {
            let mut f = facet.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() != facet.len() {
                return Err(Error::InvalidComplex(format!("facet {facet:?} repeats a vertex")));
            }
            for mask in 1u64..(1u64 << f.len()) {
                faces.insert(f.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v).collect());
            }
        }
        Self::new(vertex_count, faces)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &BTreeSet<Vec<usize>> {
        &self.faces
    }

    /// Faces of dimension `d` in lexicographic order.
    pub fn faces_of_dim(&self, d: usize) -> Vec<&Vec<usize>> {
        self.faces.iter().filter(|f| f.len() == d + 1).collect()
    }

    pub fn dim(&self) -> Option<usize> {
        self.faces.iter().map(|f| f.len() - 1).max()
    }

    pub fn counts(&self) -> Vec<usize> {
        let top = self.dim().map_or(0, |d| d + 1);
        (0..top).map(|d| self.faces_of_dim(d).len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces.iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum()
    }
}

/// One generator per face, face `i` deleting the `i`-th vertex; generators
/// are ordered by dimension, then lexicographically.
pub fn complex_to_sset(l: &OrderedSimplicialComplex) -> Result<SimplicialSet> {
    from_vertex_sets(&l.faces)
}

/// Inverse of [`complex_to_sset`]: succeeds when every generator has
/// strictly increasing, pairwise distinct vertices and non-degenerate faces.
pub fn sset_to_complex(k: &SimplicialSet) -> Result<OrderedSimplicialComplex> {
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for id in k.all_ids() {
        let s = Simplex::generator(id);
        let verts = k.vertices(&s)?;
        if verts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidComplex(format!("generator {id} has vertices {verts:?}")));
        }
        if id.dim > 0 && k.generator(id)?.faces.iter().any(Simplex::is_degenerate) {
            return Err(Error::InvalidComplex(format!("generator {id} has a degenerate face")));
        }
        if !faces.insert(verts.clone()) {
            return Err(Error::InvalidComplex(format!("two generators span {verts:?}")));
        }
    }
    OrderedSimplicialComplex::new(k.count(0), faces)
}

/// A barycentric subdivision with its subdivision chain map.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: OrderedSimplicialComplex,
    /// Vertex `i` of the subdivision is the barycenter of `barycenters[i]`.
    pub barycenters: Vec<Vec<usize>>,
    pub sd: ChainMap,
    pub source_chains: ChainComplex,
    pub target_chains: ChainComplex,
}

type Chain = BTreeMap<Vec<usize>, BigInt>;

fn add_into(acc: &mut Chain, key: Vec<usize>, coef: BigInt) {
    let slot = acc.entry(key.clone()).or_insert_with(BigInt::zero);
    *slot += coef;
    if slot.is_zero() {
        acc.remove(&key);
    }
}

/// `sd(v) = v`; `sd(σ) = (−1)^n sd(∂σ) * b_σ`, the cone on the barycenter
/// appended as the last vertex. `sd` is verified to be a chain map.
pub fn barycentric_subdivide(l: &OrderedSimplicialComplex) -> Result<Subdivision> {
    let mut barycenters: Vec<Vec<usize>> = Vec::new();
    let top = l.dim().map_or(0, |d| d + 1);
    for d in 0..top {
        barycenters.extend(l.faces_of_dim(d).into_iter().cloned());
    }
    let index: HashMap<&Vec<usize>, usize> = barycenters.iter().enumerate().map(|(i, f)| (f, i)).collect();

    let mut flags: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = (0..barycenters.len()).map(|i| vec![i]).collect();
    while let Some(flag) = stack.pop() {
        let last = &barycenters[*flag.last().expect("non-empty")];
        for (j, f) in barycenters.iter().enumerate() {
            if f.len() > last.len() && last.iter().all(|v| f.contains(v)) {
                let mut longer = flag.clone();
                longer.push(j);
                stack.push(longer);
            }
        }
        flags.insert(flag);
    }
    let complex = OrderedSimplicialComplex::new(barycenters.len(), flags)?;

    let mut sd_of: HashMap<Vec<usize>, Chain> = HashMap::new();
    for face in &barycenters {
        let n = face.len() - 1;
        let mut chain = Chain::new();
        if n == 0 {
            chain.insert(vec![index[face]], BigInt::from(1));
        } else {
            let mut inner = Chain::new();
            for i in 0..=n {
                let mut sub = face.clone();
                sub.remove(i);
                for (k, c) in &sd_of[&sub] {
                    add_into(&mut inner, k.clone(), c * sign(i));
                }
            }
            for (mut k, c) in inner {
                k.push(index[face]);
                add_into(&mut chain, k, c * sign(n));
            }
        }
        sd_of.insert(face.clone(), chain);
    }

    let source_chains = normalized_chains(&complex_to_sset(l)?);
    let target_chains = normalized_chains(&complex_to_sset(&complex)?);
    let matrices = (0..top)
        .map(|d| {
            let rows: HashMap<&Vec<usize>, usize> =
                complex.faces_of_dim(d).into_iter().enumerate().map(|(i, f)| (f, i)).collect();
            let cols = l.faces_of_dim(d);
            let mut m = IntegerMatrix::zeros(rows.len(), cols.len());
            for (j, face) in cols.iter().enumerate() {
                for (k, c) in &sd_of[*face] {
                    m.add_at(rows[k], j, c);
                }
            }
            m
        })
        .collect();
    let sd = ChainMap { matrices };
    sd.verify(&source_chains, &target_chains)?;
    Ok(Subdivision { complex, barycenters, sd, source_chains, target_chains })
}

impl Subdivision {
    /// The coefficient of each subdivision simplex in `sd(face)`.
    pub fn image_of(&self, face: &[usize]) -> Vec<(Vec<usize>, BigInt)> {
        let d = face.len() - 1;
        let Some(j) = self.complex_source_index(face) else {
            return Vec::new();
        };
        let m = self.sd.matrix(d, &self.source_chains, &self.target_chains);
        self.complex
            .faces_of_dim(d)
            .into_iter()
            .enumerate()
            .filter(|(i, _)| !m.get(*i, j).is_zero())
            .map(|(i, f)| (f.clone(), m.get(i, j).clone()))
            .collect()
    }

    fn complex_source_index(&self, face: &[usize]) -> Option<usize> {
        let d = face.len().checked_sub(1)?;
        self.barycenters.iter().filter(|f| f.len() == d + 1).position(|f| f == face)
    }

    /// `sd` is a quasi-isomorphism iff its mapping cone is acyclic; checked
    /// through degree `dim + 1`.
    pub fn cone_is_acyclic(&self) -> Result<bool> {
        let cone = mapping_cone(&self.sd, &self.source_chains, &self.target_chains)?;
        let top = cone.len().saturating_sub(1);
        Ok(homology(&cone, top)?.iter().all(|g| g.is_trivial()))
    }
}
