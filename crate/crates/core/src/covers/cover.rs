use crate::chain::euler_characteristic;
use crate::error::{Error, Result};
use crate::sset::{GenId, Generator, Simplex, SimplicialMap, SimplicialSet};

use super::group::FiniteGroup;
use super::kan::{fibration_check, FibrationReport};
use super::pi::{GroupPresentation, Word};

/// Group elements on the non-degenerate edges of a space, satisfying
/// `label(d1 σ) = label(d2 σ) · label(d0 σ)` on every 2-simplex.
#[derive(Clone, Debug)]
pub struct CoverLabeling {
    pub space: SimplicialSet,
    pub group: FiniteGroup,
    labels: Vec<usize>,
}

impl CoverLabeling {
    pub fn new(space: &SimplicialSet, group: &FiniteGroup, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != space.count(1) {
            return Err(Error::Shape(format!("{} labels for {} edges", labels.len(), space.count(1))));
        }
        if let Some(&v) = labels.iter().find(|&&v| v >= group.order()) {
            return Err(Error::InvalidGroup(format!("label {v} is not an element")));
        }
        let lab = Self { space: space.clone(), group: group.clone(), labels };
        for t in space.ids(2) {
            let faces = &space.generator(t)?.faces;
            let [l0, l1, l2] = [0, 1, 2].map(|i| lab.label_of(&faces[i]));
            if l1 != group.mul(l2, l0) {
                return Err(Error::Cocycle(space.describe(&Simplex::generator(t))));
            }
        }
        Ok(lab)
    }

    pub fn trivial(space: &SimplicialSet) -> Self {
        let group = FiniteGroup::trivial();
        Self { space: space.clone(), labels: vec![group.identity(); space.count(1)], group }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Degenerate edges carry the identity.
    pub fn label_of(&self, edge: &Simplex) -> usize {
        if edge.is_degenerate() {
            self.group.identity()
        } else {
            self.labels[edge.base().idx]
        }
    }
}

fn evaluate(group: &FiniteGroup, images: &[usize], w: &Word) -> usize {
    w.iter().fold(group.identity(), |acc, &(g, e)| {
        let x = if e > 0 { images[g] } else { group.inv(images[g]) };
        group.mul(acc, x)
    })
}

/// Tree edges get the identity, generator edges their images. Every relator
/// must evaluate to the identity.
pub fn labeling_from_hom(
    k: &SimplicialSet,
    p: &GroupPresentation,
    group: &FiniteGroup,
    images: &[usize],
) -> Result<CoverLabeling> {
    if images.len() != p.generators.len() {
        return Err(Error::Shape(format!("{} images for {} generators", images.len(), p.generators.len())));
    }
    if let Some(&v) = images.iter().find(|&&v| v >= group.order()) {
        return Err(Error::InvalidGroup(format!("image {v} is not an element")));
    }
    if let Some(r) = p.relators.iter().find(|r| evaluate(group, images, r) != group.identity()) {
        return Err(Error::RelatorNotKilled { name: p.word_string(r) });
    }
    let mut labels = vec![group.identity(); k.count(1)];
    for (g, edge) in p.edges.iter().enumerate() {
        let edge = edge.ok_or_else(|| Error::Shape(format!("generator {} has no edge", p.generators[g])))?;
        labels[edge] = images[g];
    }
    CoverLabeling::new(k, group, labels)
}

/// First assignment of generators to elements, in lexicographic order of
/// element indices with the first generator most significant, that kills
/// every relator and is not constantly the identity. Gives up after
/// `limit` partial assignments.
pub fn first_nontrivial_hom(p: &GroupPresentation, group: &FiniteGroup, limit: usize) -> Option<Vec<usize>> {
    let m = p.generators.len();
    // Relators become checkable once their largest generator is assigned.
    let mut due: Vec<Vec<&Word>> = vec![Vec::new(); m];
    for r in &p.relators {
        if let Some(top) = r.iter().map(|l| l.0).max() {
            due[top].push(r);
        }
    }
    let mut images = vec![0; m];
    let mut budget = limit;
    fn rec(
        depth: usize,
        p_due: &[Vec<&Word>],
        group: &FiniteGroup,
        images: &mut Vec<usize>,
        budget: &mut usize,
    ) -> Option<bool> {
        if depth == images.len() {
            return Some(images.iter().any(|&x| x != group.identity()));
        }
        for x in 0..group.order() {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            images[depth] = x;
            if p_due[depth].iter().all(|r| evaluate(group, images, r) == group.identity())
                && rec(depth + 1, p_due, group, images, budget)?
            {
                return Some(true);
            }
        }
        Some(false)
    }
    match rec(0, &due, group, &mut images, &mut budget) {
        Some(true) => Some(images),
        _ => None,
    }
}

/// The cover `E` with generators `(σ, g)` at index `σ·|G| + g`, and the
/// projection forgetting `g`. Faces: `d_i(σ, g) = (d_i σ, g)` for `i ≥ 1`
/// and `d_0(σ, g) = (d_0 σ, g · label(σ|[0,1]))`; a degenerate face
/// `s_w b` lifts to `s_w (b, h)`.
pub fn build_cover(lab: &CoverLabeling) -> Result<(SimplicialSet, SimplicialMap)> {
    let k = &lab.space;
    let g = &lab.group;
    let order = g.order();
    let lift = |s: &Simplex, h: usize| -> Result<Simplex> {
        let b = s.base();
        Simplex::new(GenId::new(b.dim, b.idx * order + h), s.word().to_vec())
    };
    let mut levels = Vec::new();
    let mut images = Vec::new();
    for (n, level) in k.levels().iter().enumerate() {
        let mut gens = Vec::with_capacity(level.len() * order);
        let mut imgs = Vec::with_capacity(level.len() * order);
        for (idx, gen) in level.iter().enumerate() {
            let sigma = Simplex::generator(GenId::new(n, idx));
            let shift = if n == 0 { g.identity() } else { lab.label_of(&k.front(&sigma, 1)?) };
            for h in 0..order {
                let faces = gen
                    .faces
                    .iter()
                    .enumerate()
                    .map(|(i, f)| lift(f, if i == 0 { g.mul(h, shift) } else { h }))
                    .collect::<Result<Vec<_>>>()?;
                let name = match &gen.label {
                    Some(l) => format!("{l}.{}", g.name(h)),
                    None => format!("{n}:{idx}.{}", g.name(h)),
                };
                gens.push(Generator::labeled(faces, name));
                imgs.push(sigma.clone());
            }
        }
        levels.push(gens);
        images.push(imgs);
    }
    let cover = SimplicialSet::from_generators(levels)?;
    let projection = SimplicialMap::new(cover.clone(), k.clone(), images)?;
    Ok((cover, projection))
}

/// Fiber sizes, unique horn lifting along `p` and multiplicativity of `χ`.
#[derive(Clone, Debug)]
pub struct CoveringReport {
    pub sheets: usize,
    /// `(dim, base generators, base generators with exactly `sheets` preimages)`.
    pub fibers: Vec<(usize, usize, usize)>,
    pub lifting: FibrationReport,
    pub euler_total: i64,
    pub euler_base: i64,
}

impl CoveringReport {
    pub fn fibers_ok(&self) -> bool {
        self.fibers.iter().all(|&(_, total, good)| total == good)
    }

    pub fn euler_ok(&self) -> bool {
        self.euler_total == self.sheets as i64 * self.euler_base
    }

    pub fn passed(&self) -> bool {
        self.fibers_ok() && self.lifting.lifts_unique() && self.euler_ok()
    }

    pub fn lines(&self) -> Vec<String> {
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        let mut out = Vec::new();
        for &(n, total, good) in &self.fibers {
            out.push(format!(
                "{} fiber dim {n}: {good}/{total} base generators have {} preimages",
                mark(total == good),
                self.sheets
            ));
        }
        let l = &self.lifting;
        out.push(format!(
            "{} unique lifts through dim {}: {} problems, {} without a lift, {} with several",
            mark(l.lifts_unique()),
            l.up_to,
            l.problems,
            l.unfillable_count,
            l.non_unique_count
        ));
        out.extend(l.unfillable.iter().map(|w| format!("witness no lift: {w}")));
        out.extend(l.non_unique.iter().map(|w| format!("witness several lifts: {w}")));
        out.push(format!(
            "{} euler: chi(E) = {} vs {} * chi(B) = {}",
            mark(self.euler_ok()),
            self.euler_total,
            self.sheets,
            self.sheets as i64 * self.euler_base
        ));
        out
    }
}

pub fn verify_covering(p: &SimplicialMap, sheets: usize, up_to: usize) -> Result<CoveringReport> {
    p.verify()?;
    let (e, b) = (p.source(), p.target());
    let dims = e.counts().len().max(b.counts().len());
    let mut fibers = Vec::new();
    for n in 0..dims {
        let mut preimages = vec![0usize; b.count(n)];
        for id in e.ids(n) {
            let img = p.image_of(id)?;
            if !img.is_degenerate() {
                preimages[img.base().idx] += 1;
            }
        }
        fibers.push((n, b.count(n), preimages.iter().filter(|&&c| c == sheets).count()));
    }
    Ok(CoveringReport {
        sheets,
        fibers,
        lifting: fibration_check(p, up_to)?,
        euler_total: euler_characteristic(e),
        euler_base: euler_characteristic(b),
    })
}
