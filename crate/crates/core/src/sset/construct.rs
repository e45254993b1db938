//! Constructions on simplicial sets: standard simplices and their boundaries
//! and horns, products, subcomplexes, quotients, skeleta, coproducts and
//! pushouts along injective maps.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

use super::map::SimplicialMap;
use super::set::{degeneracy_words, Generator, SimplicialSet};
use super::simplex::{GenId, Simplex};

fn vertex_label(vs: &[usize], wide: bool) -> String {
    let parts: Vec<String> = vs.iter().map(usize::to_string).collect();
    parts.join(if wide { "," } else { "" })
}

/// Simplicial set of a downward-closed family of sorted vertex sets.
///
/// Generators are ordered by dimension, then lexicographically by vertex
/// list; face `i` deletes the `i`-th vertex.
pub fn from_vertex_sets(faces: &BTreeSet<Vec<usize>>) -> Result<SimplicialSet> {
    let mut by_dim: Vec<Vec<&Vec<usize>>> = Vec::new();
    for f in faces {
        if f.is_empty() {
            continue;
        }
        let d = f.len() - 1;
        if by_dim.len() <= d {
            by_dim.resize(d + 1, Vec::new());
        }
        by_dim[d].push(f);
    }
    let wide = faces.iter().flatten().any(|&v| v >= 10);
    let index: HashMap<&Vec<usize>, usize> =
        by_dim.iter().flat_map(|l| l.iter().enumerate().map(|(i, f)| (*f, i))).collect();
    let mut levels = Vec::with_capacity(by_dim.len());
    for (d, level) in by_dim.iter().enumerate() {
        let mut gens = Vec::with_capacity(level.len());
        for f in level {
            let mut bounds = Vec::new();
            if d > 0 {
                for i in 0..=d {
                    let mut sub = (*f).clone();
                    sub.remove(i);
                    let idx = *index
                        .get(&sub)
                        .ok_or_else(|| Error::InvalidComplex(format!("face {sub:?} of {f:?} is missing")))?;
                    bounds.push(Simplex::generator(GenId::new(d - 1, idx)));
                }
            }
            gens.push(Generator::labeled(bounds, vertex_label(f, wide)));
        }
        levels.push(gens);
    }
    Ok(SimplicialSet::from_generators_unchecked(levels))
}

fn subsets_of(n: usize) -> BTreeSet<Vec<usize>> {
    (1u64..(1u64 << (n + 1)))
        .map(|mask| (0..=n).filter(|v| mask & (1 << v) != 0).collect())
        .collect()
}

/// The standard simplex Δ[n].
pub fn std_simplex(n: usize) -> SimplicialSet {
    from_vertex_sets(&subsets_of(n)).expect("downward closed")
}

/// The boundary ∂Δ[n].
pub fn boundary(n: usize) -> SimplicialSet {
    let mut sets = subsets_of(n);
    sets.remove(&(0..=n).collect::<Vec<_>>());
    from_vertex_sets(&sets).expect("downward closed")
}

/// The horn Λ[n]_k: ∂Δ[n] without the face opposite vertex `k`.
pub fn horn(n: usize, k: usize) -> Result<SimplicialSet> {
    if n == 0 || k > n {
        return Err(Error::HornIndex { n, k });
    }
    let mut sets = subsets_of(n);
    sets.remove(&(0..=n).collect::<Vec<_>>());
    sets.remove(&(0..=n).filter(|&v| v != k).collect::<Vec<_>>());
    Ok(from_vertex_sets(&sets).expect("downward closed"))
}

/// Canonical simplex of Δ[n] (as built by [`std_simplex`]) with the given
/// weakly increasing vertex sequence.
pub fn std_simplex_ref(n: usize, vertices: &[usize]) -> Result<Simplex> {
    if vertices.is_empty() || vertices.windows(2).any(|w| w[0] > w[1]) || vertices[vertices.len() - 1] > n {
        return Err(Error::NotSimplicialMap(format!("{vertices:?} is not a simplex of Δ[{n}]")));
    }
    let mut distinct = vertices.to_vec();
    distinct.dedup();
    let eta: Vec<usize> = vertices.iter().map(|v| distinct.iter().position(|d| d == v).unwrap()).collect();
    let base = GenId::new(distinct.len() - 1, lex_rank(n + 1, &distinct));
    Ok(Simplex::from_surjection(base, &eta))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Rank of a sorted combination among all combinations of the same size
/// drawn from `0..universe`, in lexicographic order.
fn lex_rank(universe: usize, combo: &[usize]) -> usize {
    let k = combo.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, &c) in combo.iter().enumerate() {
        for v in prev..c {
            rank += binomial(universe - v - 1, k - i - 1);
        }
        prev = c + 1;
    }
    rank
}

/// The product `K × L` together with its projections.
#[derive(Clone, Debug)]
pub struct Product {
    pub space: SimplicialSet,
    pub left: SimplicialSet,
    pub right: SimplicialSet,
    pub proj_left: SimplicialMap,
    pub proj_right: SimplicialMap,
    pairs: Vec<Vec<(Simplex, Simplex)>>,
    lookup: HashMap<(Simplex, Simplex), GenId>,
}

impl Product {
    /// The pair of component simplices of a product generator.
    pub fn components(&self, id: GenId) -> Result<&(Simplex, Simplex)> {
        self.pairs.get(id.dim).and_then(|l| l.get(id.idx)).ok_or(Error::DanglingId(id))
    }

    /// Canonical simplex of `K × L` with components `(a, b)`.
    pub fn pair(&self, a: &Simplex, b: &Simplex) -> Result<Simplex> {
        canonical_pair(&self.lookup, a, b)
    }

    /// The inclusion `K → K × L` at a vertex `v` of `L`.
    pub fn slice_left(&self, vertex: usize) -> Result<SimplicialMap> {
        let images = (0..self.left.levels().len())
            .map(|d| {
                self.left
                    .ids(d)
                    .map(|id| self.pair(&Simplex::generator(id), &Simplex::degenerate_vertex(vertex, d)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(self.left.clone(), self.space.clone(), images)
    }
}

fn canonical_pair(lookup: &HashMap<(Simplex, Simplex), GenId>, a: &Simplex, b: &Simplex) -> Result<Simplex> {
    if a.dim() != b.dim() {
        return Err(Error::Shape(format!("pair of simplices of dimensions {} and {}", a.dim(), b.dim())));
    }
    let common: Vec<usize> = a.word().iter().copied().filter(|j| b.word().contains(j)).collect();
    let (ra, rb) = if common.is_empty() {
        (a.clone(), b.clone())
    } else {
        (a.strip_degeneracies(&common), b.strip_degeneracies(&common))
    };
    let g = *lookup
        .get(&(ra.clone(), rb.clone()))
        .ok_or_else(|| Error::NotSimplicialMap(format!("no product generator for ({ra}, {rb})")))?;
    Ok(Simplex::from_parts_unchecked(g, common))
}

/// All `(p, q)`-shuffles as `(μ, ν)`, with `μ` in lexicographic order.
pub fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = p + q;
    let mut out = Vec::new();
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for t in start..n {
            cur.push(t);
            rec(t + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut mus = Vec::new();
    rec(0, n, p, &mut Vec::new(), &mut mus);
    for mu in mus {
        let nu: Vec<usize> = (0..n).filter(|t| !mu.contains(t)).collect();
        out.push((mu, nu));
    }
    out
}

/// Non-degenerate `n`-simplices of `K × L` are the pairs `(s_I σ, s_J τ)`
/// with `σ`, `τ` non-degenerate and disjoint degeneracy sets `I`, `J`; when
/// `dim σ + dim τ = n` these are the pairs `(s_ν σ, s_μ τ)` over
/// `(p, q)`-shuffles `(μ, ν)`.
pub fn product(k: &SimplicialSet, l: &SimplicialSet) -> Product {
    let top = match (k.top_dim(), l.top_dim()) {
        (Some(a), Some(b)) => a + b,
        _ => {
            let empty = SimplicialSet::empty();
            return Product {
                proj_left: SimplicialMap::new_unchecked(empty.clone(), k.clone(), Vec::new()),
                proj_right: SimplicialMap::new_unchecked(empty.clone(), l.clone(), Vec::new()),
                space: empty,
                left: k.clone(),
                right: l.clone(),
                pairs: Vec::new(),
                lookup: HashMap::new(),
            };
        }
    };
    let mut pairs: Vec<Vec<(Simplex, Simplex)>> = Vec::new();
    let mut lookup = HashMap::new();
    let mut levels: Vec<Vec<Generator>> = Vec::new();
    for n in 0..=top {
        let mut level_pairs = Vec::new();
        for p in 0..=n {
            for q in (n - p)..=n {
                if k.count(p) == 0 || l.count(q) == 0 {
                    continue;
                }
                let words_a = degeneracy_words(n, n - p);
                let words_b = degeneracy_words(n, n - q);
                for sigma in k.ids(p) {
                    for tau in l.ids(q) {
                        for wa in &words_a {
                            for wb in words_b.iter().filter(|wb| wb.iter().all(|j| !wa.contains(j))) {
                                let a = Simplex::from_parts_unchecked(sigma, wa.clone());
                                let b = Simplex::from_parts_unchecked(tau, wb.clone());
                                level_pairs.push((a, b));
                            }
                        }
                    }
                }
            }
        }
        let mut gens = Vec::with_capacity(level_pairs.len());
        for (idx, (a, b)) in level_pairs.iter().enumerate() {
            lookup.insert((a.clone(), b.clone()), GenId::new(n, idx));
            let mut faces = Vec::new();
            if n > 0 {
                for i in 0..=n {
                    let fa = k.face(a, i).expect("valid factor");
                    let fb = l.face(b, i).expect("valid factor");
                    faces.push(canonical_pair(&lookup, &fa, &fb).expect("lower faces built"));
                }
            }
            gens.push(Generator::labeled(faces, format!("({},{})", k.describe(a), l.describe(b))));
        }
        pairs.push(level_pairs);
        levels.push(gens);
    }
    let space = SimplicialSet::from_generators_unchecked(levels);
    let proj = |first: bool| {
        let images = pairs
            .iter()
            .map(|l| l.iter().map(|(a, b)| if first { a.clone() } else { b.clone() }).collect())
            .collect();
        SimplicialMap::new_unchecked(space.clone(), if first { k.clone() } else { l.clone() }, images)
    };
    Product {
        proj_left: proj(true),
        proj_right: proj(false),
        space,
        left: k.clone(),
        right: l.clone(),
        pairs,
        lookup,
    }
}

/// A subcomplex together with its inclusion and membership table.
#[derive(Clone, Debug)]
pub struct Subcomplex {
    pub space: SimplicialSet,
    pub inclusion: SimplicialMap,
    members: Vec<Vec<Option<usize>>>,
}

impl Subcomplex {
    pub fn contains(&self, id: GenId) -> bool {
        self.local_id(id).is_some()
    }

    /// Id of an ambient generator inside the subcomplex.
    pub fn local_id(&self, id: GenId) -> Option<GenId> {
        self.members.get(id.dim).and_then(|l| l.get(id.idx)).copied().flatten().map(|i| GenId::new(id.dim, i))
    }

    pub fn ambient(&self) -> &SimplicialSet {
        self.inclusion.target()
    }

    pub fn member_ids(&self) -> BTreeSet<GenId> {
        self.ambient().all_ids().filter(|&id| self.contains(id)).collect()
    }
}

/// Face closure of a set of generator ids.
pub fn face_closure(k: &SimplicialSet, ids: &BTreeSet<GenId>) -> Result<BTreeSet<GenId>> {
    let mut closed = BTreeSet::new();
    let mut stack: Vec<GenId> = ids.iter().copied().collect();
    while let Some(id) = stack.pop() {
        let gen = k.generator(id)?;
        if closed.insert(id) {
            stack.extend(gen.faces.iter().map(Simplex::base));
        }
    }
    Ok(closed)
}

/// The subcomplex generated by `ids`. With `auto_close = false`, a set that
/// is not face-closed is an error naming a missing face.
pub fn subcomplex(k: &SimplicialSet, ids: &BTreeSet<GenId>, auto_close: bool) -> Result<Subcomplex> {
    let closed = face_closure(k, ids)?;
    if !auto_close {
        if let Some(missing) = closed.difference(ids).next() {
            return Err(Error::NotFaceClosed(*missing));
        }
    }
    let mut members: Vec<Vec<Option<usize>>> = k.levels().iter().map(|l| vec![None; l.len()]).collect();
    let mut levels: Vec<Vec<Generator>> = Vec::new();
    let mut images: Vec<Vec<Simplex>> = Vec::new();
    for id in &closed {
        if levels.len() <= id.dim {
            levels.resize(id.dim + 1, Vec::new());
            images.resize(id.dim + 1, Vec::new());
        }
        let gen = k.generator(*id)?;
        let faces = gen
            .faces
            .iter()
            .map(|f| {
                let local = members[f.base().dim][f.base().idx].expect("faces precede in id order");
                Simplex::from_parts_unchecked(GenId::new(f.base().dim, local), f.word().to_vec())
            })
            .collect();
        members[id.dim][id.idx] = Some(levels[id.dim].len());
        levels[id.dim].push(Generator { faces, label: gen.label.clone() });
        images[id.dim].push(Simplex::generator(*id));
    }
    let space = SimplicialSet::from_generators_unchecked(levels);
    images.truncate(space.levels().len());
    let inclusion = SimplicialMap::new_unchecked(space.clone(), k.clone(), images);
    Ok(Subcomplex { space, inclusion, members })
}

/// Result of collapsing a subcomplex to a point.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub space: SimplicialSet,
    pub projection: SimplicialMap,
    /// Faces of surviving generators that were redirected onto the
    /// collapsed point and became degenerate.
    pub collapse_log: Vec<String>,
}

/// `K / L`. When `L` is non-empty the collapsed point is vertex 0 of the
/// quotient; surviving generators follow in their original order.
pub fn quotient(k: &SimplicialSet, l: &Subcomplex) -> Result<Quotient> {
    if l.ambient() != k {
        return Err(Error::NotSubcomplex("subcomplex of a different space".into()));
    }
    let collapsed = !l.space.is_empty();
    let mut new_ids: Vec<Vec<Option<usize>>> = Vec::new();
    let mut levels: Vec<Vec<Generator>> = Vec::new();
    let mut log = Vec::new();
    for (dim, level) in k.levels().iter().enumerate() {
        let mut gens = Vec::new();
        let mut ids = Vec::with_capacity(level.len());
        if dim == 0 && collapsed {
            gens.push(Generator::labeled(Vec::new(), "*"));
        }
        for (idx, gen) in level.iter().enumerate() {
            if l.contains(GenId::new(dim, idx)) {
                ids.push(None);
                continue;
            }
            let mut faces = Vec::with_capacity(gen.faces.len());
            for (i, f) in gen.faces.iter().enumerate() {
                let b = f.base();
                match new_ids[b.dim][b.idx] {
                    Some(nb) => faces.push(Simplex::from_parts_unchecked(GenId::new(b.dim, nb), f.word().to_vec())),
                    None => {
                        let point = Simplex::degenerate_vertex(0, dim - 1);
                        log.push(format!("d{i} of {} -> {}", GenId::new(dim, idx), point));
                        faces.push(point);
                    }
                }
            }
            ids.push(Some(gens.len()));
            gens.push(Generator { faces, label: gen.label.clone() });
        }
        new_ids.push(ids);
        levels.push(gens);
    }
    let space = SimplicialSet::from_generators_unchecked(levels);
    let images = new_ids
        .iter()
        .enumerate()
        .map(|(dim, ids)| {
            ids.iter()
                .map(|n| match n {
                    Some(i) => Simplex::generator(GenId::new(dim, *i)),
                    None => Simplex::degenerate_vertex(0, dim),
                })
                .collect()
        })
        .collect();
    let projection = SimplicialMap::new_unchecked(k.clone(), space.clone(), images);
    Ok(Quotient { space, projection, collapse_log: log })
}

/// The `n`-skeleton.
pub fn skeleton(k: &SimplicialSet, n: usize) -> SimplicialSet {
    SimplicialSet::from_generators_unchecked(k.levels().iter().take(n + 1).cloned().collect())
}

/// Disjoint union with its summand inclusions.
pub fn coproduct(parts: &[SimplicialSet]) -> (SimplicialSet, Vec<SimplicialMap>) {
    let top = parts.iter().map(|p| p.levels().len()).max().unwrap_or(0);
    let mut levels: Vec<Vec<Generator>> = vec![Vec::new(); top];
    let mut offsets = Vec::with_capacity(parts.len());
    for part in parts {
        let offset: Vec<usize> = (0..top).map(|d| levels[d].len()).collect();
        for (d, level) in part.levels().iter().enumerate() {
            for gen in level {
                let faces = gen
                    .faces
                    .iter()
                    .map(|f| {
                        let b = f.base();
                        Simplex::from_parts_unchecked(GenId::new(b.dim, b.idx + offset[b.dim]), f.word().to_vec())
                    })
                    .collect();
                levels[d].push(Generator { faces, label: gen.label.clone() });
            }
        }
        offsets.push(offset);
    }
    let space = SimplicialSet::from_generators_unchecked(levels);
    let maps = parts
        .iter()
        .zip(&offsets)
        .map(|(part, offset)| {
            let images = (0..part.levels().len())
                .map(|d| part.ids(d).map(|id| Simplex::generator(GenId::new(d, id.idx + offset[d]))).collect())
                .collect();
            SimplicialMap::new_unchecked(part.clone(), space.clone(), images)
        })
        .collect();
    (space, maps)
}

/// Result of gluing `M` to `K` along `L`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub space: SimplicialSet,
    pub from_base: SimplicialMap,
    pub from_attached: SimplicialMap,
}

/// Pushout of `K ← L → M` where `attach: L → K` is arbitrary and
/// `inclusion: L → M` is injective on generators. Generators of `K` keep
/// their ids; generators of `M` outside the image of `L` follow.
pub fn pushout(attach: &SimplicialMap, inclusion: &SimplicialMap) -> Result<Pushout> {
    if attach.source() != inclusion.source() {
        return Err(Error::NonInjective("legs have different sources".into()));
    }
    if !inclusion.is_injective_on_generators() {
        return Err(Error::NonInjective("inclusion leg identifies generators".into()));
    }
    let k = attach.target();
    let m = inclusion.target();
    let l = inclusion.source();
    // generator of M -> generator of L it comes from
    let mut from_l: HashMap<GenId, GenId> = HashMap::new();
    for id in l.all_ids() {
        from_l.insert(inclusion.image_of(id)?.base(), id);
    }
    let top = k.levels().len().max(m.levels().len());
    let mut levels: Vec<Vec<Generator>> = (0..top).map(|d| k.levels().get(d).cloned().unwrap_or_default()).collect();
    let mut m_images: Vec<Vec<Simplex>> = Vec::new();
    for (dim, level) in m.levels().iter().enumerate() {
        let mut imgs = Vec::with_capacity(level.len());
        for (idx, gen) in level.iter().enumerate() {
            let id = GenId::new(dim, idx);
            if let Some(src) = from_l.get(&id) {
                imgs.push(attach.image_of(*src)?.clone());
                continue;
            }
            let faces = gen
                .faces
                .iter()
                .map(|f| {
                    let img: &Simplex = &m_images[f.base().dim][f.base().idx];
                    if f.is_degenerate() {
                        img.degenerate_by(&f.surjection())
                    } else {
                        img.clone()
                    }
                })
                .collect();
            imgs.push(Simplex::generator(GenId::new(dim, levels[dim].len())));
            levels[dim].push(Generator { faces, label: gen.label.clone() });
        }
        m_images.push(imgs);
    }
    let space = SimplicialSet::from_generators_unchecked(levels);
    let from_base = SimplicialMap::new_unchecked(
        k.clone(),
        space.clone(),
        (0..k.levels().len()).map(|d| k.ids(d).map(Simplex::generator).collect()).collect(),
    );
    let from_attached = SimplicialMap::new_unchecked(m.clone(), space.clone(), m_images);
    Ok(Pushout { space, from_base, from_attached })
}

/// The point Δ[0].
pub fn point() -> SimplicialSet {
    std_simplex(0)
}

/// `m` isolated points.
pub fn discrete(m: usize) -> SimplicialSet {
    let levels = if m == 0 { Vec::new() } else { vec![(0..m).map(|_| Generator::new(Vec::new())).collect()] };
    SimplicialSet::from_generators_unchecked(levels)
}

/// Δ[n] / ∂Δ[n].
pub fn sphere(n: usize) -> SimplicialSet {
    if n == 0 {
        return discrete(2);
    }
    let simplex = std_simplex(n);
    let all: BTreeSet<GenId> = boundary_ids(&simplex, n);
    let sub = subcomplex(&simplex, &all, false).expect("boundary is face-closed");
    quotient(&simplex, &sub).expect("subcomplex of the simplex").space
}

fn boundary_ids(simplex: &SimplicialSet, n: usize) -> BTreeSet<GenId> {
    simplex.all_ids().filter(|id| id.dim < n).collect()
}

/// The circle Δ[1]/∂Δ[1].
pub fn circle() -> SimplicialSet {
    sphere(1)
}
