use num_bigint::BigInt;

use crate::chain::{
    homology_model, induced_chain_map, normalized_chains, sign, ChainComplex, ChainHomotopy, ChainMap,
    IntegerMatrix,
};
use crate::error::{Error, Result};
use crate::sset::{product, std_simplex, GenId, Product, Simplex, SimplicialMap};

/// The `(n+1)`-simplex of `Δ[1]` sending `0..=i` to 0 and the rest to 1.
fn eta(n: usize, i: usize) -> Simplex {
    let values: Vec<usize> = (0..=n + 1).map(|t| usize::from(t > i)).collect();
    Simplex::from_surjection(GenId::new(1, 0), &values)
}

fn check_prism(prod: &Product, h: &SimplicialMap) -> Result<()> {
    if prod.right.counts() != [2, 1] {
        return Err(Error::NotAPrism(format!("second factor has counts {:?}", prod.right.counts())));
    }
    if h.source() != &prod.space {
        return Err(Error::NotAPrism("map is not defined on the given product".into()));
    }
    Ok(())
}

/// `H ∘ i_e` for the end `e ∈ {0, 1}`.
pub fn prism_end(prod: &Product, h: &SimplicialMap, end: usize) -> Result<SimplicialMap> {
    check_prism(prod, h)?;
    h.compose_after(&prod.slice_left(end)?)
}

/// Prism operator `D(σ) = Σ (−1)^i H(s_i σ, η_i)`; satisfies
/// `∂D + D∂ = (H i_1)# − (H i_0)#` (checked before returning).
pub fn prism_homotopy(prod: &Product, h: &SimplicialMap) -> Result<ChainHomotopy> {
    check_prism(prod, h)?;
    let k = &prod.left;
    let l = h.target();
    let mut matrices = Vec::with_capacity(k.levels().len());
    for n in 0..k.levels().len() {
        let mut m = IntegerMatrix::zeros(l.count(n + 1), k.count(n));
        for sigma in k.ids(n) {
            let s = Simplex::generator(sigma);
            for i in 0..=n {
                let cell = prod.pair(&s.degeneracy(i)?, &eta(n, i))?;
                let img = h.apply(&cell)?;
                if !img.is_degenerate() {
                    m.add_at(img.base().idx, sigma.idx, &sign(i));
                }
            }
        }
        matrices.push(m);
    }
    let d = ChainHomotopy { matrices };
    let (ck, cl) = (normalized_chains(k), normalized_chains(l));
    let f = induced_chain_map(&prism_end(prod, h, 0)?);
    let g = induced_chain_map(&prism_end(prod, h, 1)?);
    d.verify(&ck, &cl, &f, &g)?;
    Ok(d)
}

/// Searches for a simplicial homotopy `K × Δ[1] → L` from `f` to `g`,
/// returning the first one found in deterministic search order.
pub fn find_homotopy(f: &SimplicialMap, g: &SimplicialMap) -> Result<Option<(Product, SimplicialMap)>> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::HomotopyEnds("maps with different source or target".into()));
    }
    let prod = product(f.source(), &std_simplex(1));
    let mut fixed = Vec::new();
    for (end, map) in [(0, f), (1, g)] {
        let slice = prod.slice_left(end)?;
        for (d, level) in slice.images().iter().enumerate() {
            for (idx, cell) in level.iter().enumerate() {
                fixed.push((cell.base(), map.image_of(GenId::new(d, idx))?.clone()));
            }
        }
    }
    let found = SimplicialMap::extensions(&prod.space, f.target(), &fixed, 1);
    Ok(found.into_iter().next().map(|h| (prod, h)))
}

/// Outcome of comparing two homotopic maps on homology.
#[derive(Clone, Debug)]
pub struct HomotopyReport {
    /// `∂D + D∂ = g# − f#` held entry-exactly.
    pub identity_holds: bool,
    /// Per degree, whether `f_* = g_*` on `H_n`.
    pub equal_on_homology: Vec<bool>,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.equal_on_homology.iter().all(|&b| b)
    }
}

fn induced_on_homology(map: &ChainMap, source: &ChainComplex, target: &ChainComplex, n: usize) -> Result<IntegerMatrix> {
    let hs = homology_model(source, n)?;
    let ht = homology_model(target, n)?;
    let m = map.matrix(n, source, target);
    hs.induced(&ht, |z: &[BigInt]| Ok(m.mul_vec(z)))
}

/// Checks that `H` restricts to `f` and `g` at the two ends, then verifies
/// the prism identity and `f_* = g_*` in every degree of the source.
pub fn homotopic_maps_equal_on_homology(
    f: &SimplicialMap,
    g: &SimplicialMap,
    prod: &Product,
    h: &SimplicialMap,
) -> Result<HomotopyReport> {
    if &prism_end(prod, h, 0)? != f {
        return Err(Error::HomotopyEnds("H restricted to the 0 end differs from f".into()));
    }
    if &prism_end(prod, h, 1)? != g {
        return Err(Error::HomotopyEnds("H restricted to the 1 end differs from g".into()));
    }
    let identity_holds = prism_homotopy(prod, h).is_ok();
    let (cs, ct) = (normalized_chains(f.source()), normalized_chains(f.target()));
    let (fc, gc) = (induced_chain_map(f), induced_chain_map(g));
    let equal_on_homology = (0..cs.len())
        .map(|n| Ok(induced_on_homology(&fc, &cs, &ct, n)? == induced_on_homology(&gc, &cs, &ct, n)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomotopyReport { identity_holds, equal_on_homology })
}

/// `H = f ∘ pr_K`, the constant homotopy from `f` to itself.
pub fn constant_homotopy(f: &SimplicialMap) -> Result<(Product, SimplicialMap)> {
    let prod = product(f.source(), &std_simplex(1));
    let h = f.compose_after(&prod.proj_left)?;
    Ok((prod, h))
}
