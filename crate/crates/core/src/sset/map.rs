use crate::error::{Error, Result};

use super::set::SimplicialSet;
use super::simplex::{GenId, Simplex};

/// A simplicial map, determined by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialSet,
    target: SimplicialSet,
    images: Vec<Vec<Simplex>>,
}

impl SimplicialMap {
    /// Builds a map and verifies that it commutes with every face operator.
    pub fn new(source: SimplicialSet, target: SimplicialSet, images: Vec<Vec<Simplex>>) -> Result<Self> {
        let map = Self::new_unchecked(source, target, images);
        map.verify()?;
        Ok(map)
    }

    pub fn new_unchecked(source: SimplicialSet, target: SimplicialSet, images: Vec<Vec<Simplex>>) -> Self {
        Self { source, target, images }
    }

    pub fn identity(space: &SimplicialSet) -> Self {
        let images = (0..space.levels().len())
            .map(|d| space.ids(d).map(Simplex::generator).collect())
            .collect();
        Self::new_unchecked(space.clone(), space.clone(), images)
    }

    /// Constant map onto a vertex of the target.
    pub fn constant(source: &SimplicialSet, target: &SimplicialSet, vertex: usize) -> Result<Self> {
        target.generator(GenId::new(0, vertex))?;
        let images = (0..source.levels().len())
            .map(|d| vec![Simplex::degenerate_vertex(vertex, d); source.count(d)])
            .collect();
        Ok(Self::new_unchecked(source.clone(), target.clone(), images))
    }

    pub fn source(&self) -> &SimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &SimplicialSet {
        &self.target
    }

    pub fn images(&self) -> &[Vec<Simplex>] {
        &self.images
    }

    pub fn image_of(&self, id: GenId) -> Result<&Simplex> {
        self.images.get(id.dim).and_then(|l| l.get(id.idx)).ok_or(Error::DanglingId(id))
    }

    /// Image of an arbitrary (possibly degenerate) simplex of the source.
    pub fn apply(&self, s: &Simplex) -> Result<Simplex> {
        let img = self.image_of(s.base())?;
        if s.is_degenerate() {
            Ok(img.degenerate_by(&s.surjection()))
        } else {
            Ok(img.clone())
        }
    }

    /// `self ∘ first`.
    pub fn compose_after(&self, first: &SimplicialMap) -> Result<SimplicialMap> {
        let images = first
            .images
            .iter()
            .map(|level| level.iter().map(|s| self.apply(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(first.source.clone(), self.target.clone(), images))
    }

    /// Checks `f(d_i σ) = d_i f(σ)` on every generator.
    pub fn verify(&self) -> Result<()> {
        let shape_ok = (0..self.source.levels().len().max(self.images.len()))
            .all(|d| self.images.get(d).map_or(0, Vec::len) == self.source.count(d));
        if !shape_ok {
            return Err(Error::NotSimplicialMap("image table does not match the source".into()));
        }
        for id in self.source.all_ids() {
            let img = self.image_of(id)?;
            if img.dim() != id.dim || !self.target.contains(img.base()) {
                return Err(Error::NotSimplicialMap(format!("image of {id} is {img}")));
            }
            if id.dim == 0 {
                continue;
            }
            let sigma = Simplex::generator(id);
            for i in 0..=id.dim {
                let lhs = self.apply(&self.source.face(&sigma, i)?)?;
                let rhs = self.target.face(img, i)?;
                if lhs != rhs {
                    return Err(Error::NotSimplicialMap(format!(
                        "f(d{i} {id}) = {lhs} but d{i} f({id}) = {rhs}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// True when every generator maps to a distinct generator.
    pub fn is_injective_on_generators(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.images.iter().flatten().all(|s| !s.is_degenerate() && seen.insert(s.base()))
    }

    /// Enumerates simplicial maps `source → target` agreeing with `fixed`
    /// on the listed generators, in deterministic order, stopping after
    /// `limit` results.
    pub fn extensions(
        source: &SimplicialSet,
        target: &SimplicialSet,
        fixed: &[(GenId, Simplex)],
        limit: usize,
    ) -> Vec<SimplicialMap> {
        let order: Vec<GenId> = source.all_ids().collect();
        let mut images: Vec<Vec<Option<Simplex>>> =
            source.levels().iter().map(|l| vec![None; l.len()]).collect();
        let candidates: Vec<Vec<Simplex>> =
            (0..source.levels().len()).map(|d| target.all_simplices(d)).collect();
        let mut out = Vec::new();
        extend_rec(source, target, fixed, &order, 0, &candidates, &mut images, limit, &mut out);
        out
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_rec(
    source: &SimplicialSet,
    target: &SimplicialSet,
    fixed: &[(GenId, Simplex)],
    order: &[GenId],
    pos: usize,
    candidates: &[Vec<Simplex>],
    images: &mut Vec<Vec<Option<Simplex>>>,
    limit: usize,
    out: &mut Vec<SimplicialMap>,
) {
    if out.len() >= limit {
        return;
    }
    let Some(&id) = order.get(pos) else {
        let full = images.iter().map(|l| l.iter().map(|s| s.clone().unwrap()).collect()).collect();
        out.push(SimplicialMap::new_unchecked(source.clone(), target.clone(), full));
        return;
    };
    let forced = fixed.iter().find(|(g, _)| *g == id).map(|(_, s)| s);
    let options: Vec<&Simplex> = match forced {
        Some(s) => vec![s],
        None => candidates[id.dim].iter().collect(),
    };
    let sigma = Simplex::generator(id);
    let face_images: Vec<Simplex> = if id.dim == 0 {
        Vec::new()
    } else {
        (0..=id.dim)
            .map(|i| {
                let f = source.face(&sigma, i).expect("valid source");
                let img = images[f.base().dim][f.base().idx].clone().expect("faces assigned first");
                if f.is_degenerate() {
                    img.degenerate_by(&f.surjection())
                } else {
                    img
                }
            })
            .collect()
    };
    for cand in options {
        if cand.dim() != id.dim || !target.contains(cand.base()) {
            continue;
        }
        let fits = face_images
            .iter()
            .enumerate()
            .all(|(i, want)| target.face(cand, i).map_or(false, |got| &got == want));
        if fits {
            images[id.dim][id.idx] = Some(cand.clone());
            extend_rec(source, target, fixed, order, pos + 1, candidates, images, limit, out);
            images[id.dim][id.idx] = None;
            if out.len() >= limit {
                return;
            }
        }
    }
}
