use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chain::{homology, homology_model, normalized_chains, AbelianGroup, ChainComplex, ChainMap, IntegerMatrix, TensorComplex};
use crate::error::Result;
use crate::sset::{product, shuffles, GenId, Product, Simplex, SimplicialSet};

/// Chains of a product together with the tensor product of the factors'
/// chains, and the two comparison maps between them.
#[derive(Clone, Debug)]
pub struct EilenbergZilber {
    pub product: Product,
    pub left_chains: ChainComplex,
    pub right_chains: ChainComplex,
    pub product_chains: ChainComplex,
    pub tensor: TensorComplex,
    /// `N(K × L) → N(K) ⊗ N(L)`.
    pub aw: ChainMap,
    /// `N(K) ⊗ N(L) → N(K × L)`.
    pub ez: ChainMap,
}

/// Sign of the shuffle permutation `(μ, ν)`.
pub fn shuffle_sign(mu: &[usize]) -> BigInt {
    let p = mu.len();
    let total: usize = mu.iter().sum::<usize>();
    let inversions = total - p * p.saturating_sub(1) / 2;
    if inversions % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `AW(σ, τ) = Σ_i front_i σ ⊗ back_{n−i} τ`, degenerate terms dropped.
pub fn alexander_whitney(prod: &Product, tensor: &TensorComplex, product_chains: &ChainComplex) -> Result<ChainMap> {
    let (k, l) = (&prod.left, &prod.right);
    let mut matrices = Vec::new();
    for n in 0..product_chains.len() {
        let mut m = IntegerMatrix::zeros(tensor.complex.rank(n), product_chains.rank(n));
        for id in prod.space.ids(n) {
            let (a, b) = prod.components(id)?;
            for i in 0..=n {
                let front = k.front(a, i)?;
                let back = l.back(b, n - i)?;
                if front.is_degenerate() || back.is_degenerate() {
                    continue;
                }
                if let Some(row) = tensor.index_of(i, n - i, front.base().idx, back.base().idx) {
                    m.add_at(row, id.idx, &BigInt::one());
                }
            }
        }
        matrices.push(m);
    }
    Ok(ChainMap { matrices })
}

/// `EZ(σ ⊗ τ) = Σ_{(μ,ν)} sign(μ, ν) (s_ν σ, s_μ τ)` over `(p, q)`-shuffles.
pub fn shuffle_ez(prod: &Product, tensor: &TensorComplex, product_chains: &ChainComplex) -> Result<ChainMap> {
    let mut matrices = Vec::new();
    for n in 0..tensor.complex.len() {
        let mut m = IntegerMatrix::zeros(product_chains.rank(n), tensor.complex.rank(n));
        for col in 0..tensor.complex.rank(n) {
            let (p, i, j) = tensor.entry(n, col);
            let q = n - p;
            for (mu, nu) in shuffles(p, q) {
                let a = Simplex::new(GenId::new(p, i), nu.iter().rev().copied().collect())?;
                let b = Simplex::new(GenId::new(q, j), mu.iter().rev().copied().collect())?;
                let cell = prod.pair(&a, &b)?;
                m.add_at(cell.base().idx, col, &shuffle_sign(&mu));
            }
        }
        matrices.push(m);
    }
    Ok(ChainMap { matrices })
}

impl EilenbergZilber {
    pub fn new(k: &SimplicialSet, l: &SimplicialSet) -> Result<Self> {
        let prod = product(k, l);
        let left_chains = normalized_chains(k);
        let right_chains = normalized_chains(l);
        let product_chains = normalized_chains(&prod.space);
        let tensor = TensorComplex::new(&left_chains, &right_chains);
        let aw = alexander_whitney(&prod, &tensor, &product_chains)?;
        let ez = shuffle_ez(&prod, &tensor, &product_chains)?;
        aw.verify(&product_chains, &tensor.complex)?;
        ez.verify(&tensor.complex, &product_chains)?;
        Ok(Self { product: prod, left_chains, right_chains, product_chains, tensor, aw, ez })
    }

    /// `AW ∘ EZ`, degree by degree.
    pub fn aw_after_ez(&self) -> Vec<IntegerMatrix> {
        let t = &self.tensor.complex;
        (0..t.len())
            .map(|n| &self.aw.matrix(n, &self.product_chains, t) * &self.ez.matrix(n, t, &self.product_chains))
            .collect()
    }

    pub fn aw_ez_is_identity(&self) -> bool {
        self.aw_after_ez().iter().all(|m| m.rows() == m.cols() && *m == IntegerMatrix::identity(m.rows()))
    }

    /// `a × b = EZ(a ⊗ b)` for a `p`-chain `a` of `K` and a `q`-chain `b`
    /// of `L`, as a `(p+q)`-chain of `K × L`.
    pub fn cross(&self, p: usize, a: &[BigInt], q: usize, b: &[BigInt]) -> Vec<BigInt> {
        let n = p + q;
        let t = &self.tensor.complex;
        let mut v = vec![BigInt::zero(); t.rank(n)];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                if let Some(idx) = self.tensor.index_of(p, q, i, j) {
                    v[idx] += x * y;
                }
            }
        }
        self.ez.matrix(n, t, &self.product_chains).mul_vec(&v)
    }

    /// Cross products of the homology generators of the factors, as class
    /// coordinates in `H_{p+q}(K × L)`.
    pub fn cross_product_table(&self, p: usize, q: usize) -> Result<Vec<Vec<Vec<BigInt>>>> {
        let hk = homology_model(&self.left_chains, p)?;
        let hl = homology_model(&self.right_chains, q)?;
        let hp = homology_model(&self.product_chains, p + q)?;
        hk.representatives()
            .iter()
            .map(|a| hl.representatives().iter().map(|b| hp.class_of(&self.cross(p, a, q, b))).collect())
            .collect()
    }
}

/// Per degree: the homology of `K × L` computed directly, and the Künneth
/// prediction `⊕ H_p ⊗ H_q ⊕ ⊕ Tor(H_p, H_{q})` with `p + q = n` and `n − 1`.
#[derive(Clone, Debug)]
pub struct KunnethReport {
    pub direct: Vec<AbelianGroup>,
    pub predicted: Vec<AbelianGroup>,
}

impl KunnethReport {
    pub fn passed(&self) -> bool {
        self.direct == self.predicted
    }

    pub fn lines(&self) -> Vec<String> {
        self.direct
            .iter()
            .zip(&self.predicted)
            .enumerate()
            .map(|(n, (d, p))| {
                let verdict = if d == p { "PASS" } else { "FAIL" };
                format!("{verdict} kunneth H_{n}: direct={d} formula={p}")
            })
            .collect()
    }
}

pub fn kunneth_check(k: &SimplicialSet, l: &SimplicialSet, up_to: usize) -> Result<KunnethReport> {
    let prod = product(k, l);
    let direct = homology(&normalized_chains(&prod.space), up_to)?;
    let hk = homology(&normalized_chains(k), up_to)?;
    let hl = homology(&normalized_chains(l), up_to)?;
    let predicted = (0..=up_to)
        .map(|n| {
            let mut parts: Vec<AbelianGroup> = (0..=n).map(|p| hk[p].tensor(&hl[n - p])).collect();
            if n > 0 {
                parts.extend((0..n).map(|p| hk[p].tor(&hl[n - 1 - p])));
            }
            AbelianGroup::sum_all(&parts)
        })
        .collect();
    Ok(KunnethReport { direct, predicted })
}
