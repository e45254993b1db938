//! Long exact sequences with explicit maps, and a lattice-level exactness
//! test.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::complex::{normalized_chains, relative_chains, ChainComplex};
use super::group::AbelianGroup;
use super::homology::homology_model;
use super::lattice::{Lattice, Subquotient};
use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};
use crate::sset::{subcomplex, GenId, SimplicialSet, Subcomplex};

/// A finite sequence of groups and homomorphisms, bracketed by zero groups
/// at both ends. Maps are in summand coordinates of the groups' cyclic
/// decompositions.
#[derive(Clone, Debug)]
pub struct ExactSequence {
    pub labels: Vec<String>,
    pub groups: Vec<AbelianGroup>,
    orders: Vec<Vec<BigInt>>,
    /// `maps[i]` goes from node `i` to node `i + 1`.
    pub maps: Vec<IntegerMatrix>,
    /// Number of leading nodes whose exactness is not claimed (the
    /// sequence was cut there).
    pub unchecked: usize,
}

fn relations(orders: &[BigInt]) -> Vec<Vec<BigInt>> {
    let k = orders.len();
    orders
        .iter()
        .enumerate()
        .filter(|(_, o)| !o.is_zero())
        .map(|(i, o)| (0..k).map(|j| if i == j { o.clone() } else { BigInt::zero() }).collect())
        .collect()
}

/// Elements of the target hit by `f`, as a lattice of representatives.
fn image_lattice(f: &IntegerMatrix, target: &[BigInt]) -> Lattice {
    let mut gens = f.columns();
    gens.extend(relations(target));
    Lattice::from_generators(target.len(), &gens)
}

/// Representatives of elements of the source sent to zero by `f`.
fn kernel_lattice(f: &IntegerMatrix, source: &[BigInt], target: &[BigInt]) -> Lattice {
    let kb = source.len();
    let widened = f.hstack(&IntegerMatrix::diagonal(target.len(), target.len(), target));
    let ker = Lattice::kernel(&widened);
    let mut gens: Vec<Vec<BigInt>> = ker.basis().columns().into_iter().map(|mut c| {
        c.truncate(kb);
        c
    }).collect();
    gens.extend(relations(source));
    Lattice::from_generators(kb, &gens)
}

impl ExactSequence {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `image(maps[i-1]) = kernel(maps[i])` at interior node `i`.
    pub fn exact_at(&self, i: usize) -> bool {
        if i == 0 || i + 1 >= self.len() {
            return true;
        }
        let image = image_lattice(&self.maps[i - 1], &self.orders[i]);
        let kernel = kernel_lattice(&self.maps[i], &self.orders[i], &self.orders[i + 1]);
        image.same_as(&kernel)
    }

    /// Exactness at every node after the cut.
    pub fn is_exact(&self) -> bool {
        (self.unchecked..self.len()).all(|i| self.exact_at(i))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn group(&self, label: &str) -> Option<&AbelianGroup> {
        self.index_of(label).map(|i| &self.groups[i])
    }

    /// Whether the map out of node `i` is injective.
    pub fn injective_at(&self, i: usize) -> bool {
        let kernel = kernel_lattice(&self.maps[i], &self.orders[i], &self.orders[i + 1]);
        kernel.same_as(&Lattice::from_generators(self.orders[i].len(), &relations(&self.orders[i])))
    }

    /// Whether the map out of node `i` is surjective.
    pub fn surjective_at(&self, i: usize) -> bool {
        image_lattice(&self.maps[i], &self.orders[i + 1]).same_as(&Lattice::full(self.orders[i + 1].len()))
    }

    pub fn isomorphism_at(&self, i: usize) -> bool {
        self.injective_at(i) && self.surjective_at(i)
    }

    /// One `PASS`/`FAIL` line per checked node.
    pub fn report_lines(&self) -> Vec<String> {
        (self.unchecked..self.len())
            .filter(|&i| i > 0 && i + 1 < self.len())
            .map(|i| {
                let verdict = if self.exact_at(i) { "PASS" } else { "FAIL" };
                format!("{verdict} exact at {} = {}", self.labels[i], self.groups[i])
            })
            .collect()
    }
}

/// Assembles a sequence from homology models and chain-level maps.
struct Builder {
    labels: Vec<String>,
    models: Vec<Subquotient>,
    maps: Vec<IntegerMatrix>,
}

impl Builder {
    fn new() -> Self {
        let zero = Subquotient::new(Lattice::full(0), &[]).expect("zero group");
        Self { labels: vec!["0".into()], models: vec![zero], maps: Vec::new() }
    }

    /// Appends a node; `map` carries a chain representing a class of the
    /// previous node to a chain representing its image.
    fn push(
        &mut self,
        label: String,
        model: Subquotient,
        map: impl FnMut(&[BigInt]) -> Result<Vec<BigInt>>,
    ) -> Result<()> {
        let prev = self.models.last().expect("starts with zero");
        self.maps.push(prev.induced(&model, map)?);
        self.labels.push(label);
        self.models.push(model);
        Ok(())
    }

    fn finish(mut self, unchecked: usize) -> Result<ExactSequence> {
        let zero = Subquotient::new(Lattice::full(0), &[])?;
        self.push("0".into(), zero, |_| Ok(Vec::new()))?;
        Ok(ExactSequence {
            groups: self.models.iter().map(Subquotient::group).collect(),
            orders: self.models.iter().map(|m| m.orders().to_vec()).collect(),
            labels: self.labels,
            maps: self.maps,
            unchecked,
        })
    }
}

/// Per degree, the ambient index of each generator of a subcomplex.
fn ambient_indices(l: &Subcomplex) -> Vec<Vec<usize>> {
    l.inclusion.images().iter().map(|lvl| lvl.iter().map(|s| s.base().idx).collect()).collect()
}

fn push_forward(v: &[BigInt], index: &[usize], size: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); size];
    for (x, &i) in v.iter().zip(index) {
        out[i] += x;
    }
    out
}

fn pull_back(v: &[BigInt], index: &[usize]) -> Vec<BigInt> {
    index.iter().map(|&i| v[i].clone()).collect()
}

fn level<'a>(idx: &'a [Vec<usize>], n: usize) -> &'a [usize] {
    idx.get(n).map_or(&[], Vec::as_slice)
}

/// The homology sequence of the pair `(K, L)` from `H_{up_to+1}(K, L)`
/// down to `H_0(K, L) → 0`. The connecting map lifts a relative cycle to
/// `K`, applies `∂`, and reads the result in `L`.
pub fn pair_les(k: &SimplicialSet, l: &Subcomplex, up_to: usize) -> Result<ExactSequence> {
    let ck = normalized_chains(k);
    let cl = normalized_chains(&l.space);
    let rel = relative_chains(k, l)?;
    let cr = &rel.complex;
    let l_idx = ambient_indices(l);

    let mut b = Builder::new();
    let top = up_to + 1;
    b.push(format!("H_{top}(K,L)"), homology_model(cr, top)?, |_| Ok(Vec::new()))?;
    for p in (0..top).rev() {
        let rel_basis = level(&rel.basis, p + 1);
        let l_lvl = level(&l_idx, p);
        b.push(format!("H_{p}(L)"), homology_model(&cl, p)?, |z| {
            let lifted = push_forward(z, rel_basis, ck.rank(p + 1));
            let bd = ck.boundary(p + 1).mul_vec(&lifted);
            Ok(pull_back(&bd, l_lvl))
        })?;
        b.push(format!("H_{p}(K)"), homology_model(&ck, p)?, |z| {
            Ok(push_forward(z, l_lvl, ck.rank(p)))
        })?;
        let r_lvl = level(&rel.basis, p);
        b.push(format!("H_{p}(K,L)"), homology_model(cr, p)?, |z| Ok(pull_back(z, r_lvl)))?;
    }
    b.finish(2)
}

fn direct_sum(a: &ChainComplex, b: &ChainComplex) -> Result<ChainComplex> {
    let top = a.len().max(b.len());
    let labels = (0..top)
        .map(|n| {
            let mut l: Vec<String> = a.labels(n).iter().map(|s| format!("A:{s}")).collect();
            l.extend(b.labels(n).iter().map(|s| format!("B:{s}")));
            l
        })
        .collect();
    let boundaries = (0..top)
        .map(|n| {
            let (ra, rb) = if n == 0 { (0, 0) } else { (a.rank(n - 1), b.rank(n - 1)) };
            IntegerMatrix::blocks(
                &a.boundary(n),
                &IntegerMatrix::zeros(ra, b.rank(n)),
                &IntegerMatrix::zeros(rb, a.rank(n)),
                &b.boundary(n),
            )
        })
        .collect();
    ChainComplex::new_unchecked(labels, boundaries)
}

/// The Mayer–Vietoris sequence of `K = A ∪ B` from `H_{up_to+1}(K)` down to
/// `H_0(K) → 0`, with `φ = (i_A, −i_B)`, `ψ = j_A + j_B`, and the
/// connecting map `[a + b] ↦ [∂a]`.
pub fn mayer_vietoris(k: &SimplicialSet, a: &Subcomplex, b: &Subcomplex, up_to: usize) -> Result<ExactSequence> {
    if a.ambient() != k || b.ambient() != k {
        return Err(Error::NotSubcomplex("subcomplex of a different space".into()));
    }
    if let Some(id) = k.all_ids().find(|&id| !a.contains(id) && !b.contains(id)) {
        return Err(Error::NotACover(id));
    }
    let meet: BTreeSet<GenId> = k.all_ids().filter(|&id| a.contains(id) && b.contains(id)).collect();
    let ab = subcomplex(k, &meet, false)?;

    let ck = normalized_chains(k);
    let ca = normalized_chains(&a.space);
    let cb = normalized_chains(&b.space);
    let cab = normalized_chains(&ab.space);
    let sum = direct_sum(&ca, &cb)?;
    let (a_idx, b_idx, ab_idx) = (ambient_indices(a), ambient_indices(b), ambient_indices(&ab));
    // For each ambient generator in degree n: its local index in A, if any.
    let in_a = |n: usize| -> Vec<Option<usize>> {
        let mut v = vec![None; k.count(n)];
        for (i, &g) in level(&a_idx, n).iter().enumerate() {
            v[g] = Some(i);
        }
        v
    };

    let mut bld = Builder::new();
    let top = up_to + 1;
    bld.push(format!("H_{top}(K)"), homology_model(&ck, top)?, |_| Ok(Vec::new()))?;
    for p in (0..top).rev() {
        let a_lvl = in_a(p + 1);
        let ab_lvl = level(&ab_idx, p);
        bld.push(format!("H_{p}(A∩B)"), homology_model(&cab, p)?, |z| {
            let a_part: Vec<BigInt> = z
                .iter()
                .zip(&a_lvl)
                .map(|(x, slot)| if slot.is_some() { x.clone() } else { BigInt::zero() })
                .collect();
            let bd = ck.boundary(p + 1).mul_vec(&a_part);
            Ok(pull_back(&bd, ab_lvl))
        })?;
        let (al, bl) = (level(&a_idx, p), level(&b_idx, p));
        bld.push(format!("H_{p}(A)+H_{p}(B)"), homology_model(&sum, p)?, |z| {
            let amb = push_forward(z, ab_lvl, ck.rank(p));
            let mut out = pull_back(&amb, al);
            out.extend(pull_back(&amb, bl).into_iter().map(|x| -x));
            Ok(out)
        })?;
        let split = al.len();
        bld.push(format!("H_{p}(K)"), homology_model(&ck, p)?, |z| {
            let mut out = push_forward(&z[..split], al, ck.rank(p));
            for (o, x) in out.iter_mut().zip(push_forward(&z[split..], bl, ck.rank(p))) {
                *o += x;
            }
            Ok(out)
        })?;
    }
    bld.finish(2)
}
