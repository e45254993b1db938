use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::chain::{cohomology_model_mod, normalized_chains, ChainComplex, Subquotient};
use crate::error::{Error, Result};
use crate::sset::{Simplex, SimplicialSet};

/// A normalized cochain: one value per non-degenerate generator of the given
/// degree, in `Z` (`modulus = 0`) or `Z/modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub modulus: BigInt,
    pub values: Vec<BigInt>,
}

impl Cochain {
    pub fn new(degree: usize, modulus: impl Into<BigInt>, values: Vec<BigInt>) -> Self {
        let modulus = modulus.into();
        let values = values.into_iter().map(|v| reduce(v, &modulus)).collect();
        Self { degree, modulus, values }
    }

    /// The constant 0-cochain with value 1.
    pub fn unit(k: &SimplicialSet, modulus: impl Into<BigInt>) -> Self {
        Self::new(0, modulus, vec![BigInt::from(1); k.count(0)])
    }

    fn value_on(&self, s: &Simplex) -> BigInt {
        if s.is_degenerate() {
            BigInt::zero()
        } else {
            self.values[s.base().idx].clone()
        }
    }

    /// `δα = α ∘ ∂`, reduced.
    pub fn coboundary(&self, chains: &ChainComplex) -> Cochain {
        let d = chains.boundary(self.degree + 1).transpose();
        Cochain::new(self.degree + 1, self.modulus.clone(), d.mul_vec(&self.values))
    }

    pub fn is_cocycle(&self, chains: &ChainComplex) -> bool {
        self.coboundary(chains).values.iter().all(Zero::is_zero)
    }
}

fn reduce(v: BigInt, m: &BigInt) -> BigInt {
    if m.is_zero() {
        v
    } else {
        v.mod_floor(m)
    }
}

/// `(α ∪ β)(σ) = α(front_p σ) · β(back_q σ)`. Both inputs must be cocycles.
pub fn cup_product(k: &SimplicialSet, alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    if alpha.modulus != beta.modulus {
        return Err(Error::NotCocycle("cochains with different coefficients".into()));
    }
    let chains = normalized_chains(k);
    for (name, c) in [("left factor", alpha), ("right factor", beta)] {
        if c.values.len() != k.count(c.degree) {
            return Err(Error::Shape(format!("{name} has {} values for {} generators", c.values.len(), k.count(c.degree))));
        }
        if !c.is_cocycle(&chains) {
            return Err(Error::NotCocycle(format!("{name} in degree {}", c.degree)));
        }
    }
    cup_unchecked(k, alpha, beta)
}

fn cup_unchecked(k: &SimplicialSet, alpha: &Cochain, beta: &Cochain) -> Result<Cochain> {
    let (p, q) = (alpha.degree, beta.degree);
    let n = p + q;
    let values = k
        .ids(n)
        .map(|id| {
            let s = Simplex::generator(id);
            let a = alpha.value_on(&k.front(&s, p)?);
            if a.is_zero() {
                return Ok(BigInt::zero());
            }
            Ok(a * beta.value_on(&k.back(&s, q)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Cochain::new(n, alpha.modulus.clone(), values))
}

/// Products of the chosen cohomology generators in each pair of degrees,
/// expressed in the generators of the target degree.
#[derive(Clone, Debug)]
pub struct CohomologyRing {
    pub modulus: BigInt,
    pub top: usize,
    models: Vec<Subquotient>,
    space: SimplicialSet,
}

impl CohomologyRing {
    pub fn new(k: &SimplicialSet, modulus: impl Into<BigInt>, top: usize) -> Result<Self> {
        let modulus = modulus.into();
        let chains = normalized_chains(k);
        let models = (0..=top).map(|n| cohomology_model_mod(&chains, n, &modulus)).collect::<Result<Vec<_>>>()?;
        Ok(Self { modulus, top, models, space: k.clone() })
    }

    /// Number of cyclic generators of `H^n`.
    pub fn rank(&self, n: usize) -> usize {
        self.models.get(n).map_or(0, Subquotient::len)
    }

    pub fn group(&self, n: usize) -> String {
        self.models[n].group().to_string()
    }

    /// The `i`-th generator of `H^n` as a cocycle.
    pub fn generator(&self, n: usize, i: usize) -> Cochain {
        Cochain::new(n, self.modulus.clone(), self.models[n].representatives()[i].clone())
    }

    /// Coordinates of the class of a cocycle.
    pub fn class_of(&self, c: &Cochain) -> Result<Vec<BigInt>> {
        self.models[c.degree].class_of(&c.values)
    }

    /// Class coordinates of `x_i ∪ y_j` for generators of `H^p` and `H^q`.
    pub fn product(&self, p: usize, i: usize, q: usize, j: usize) -> Result<Vec<BigInt>> {
        let c = cup_product(&self.space, &self.generator(p, i), &self.generator(q, j))?;
        self.class_of(&c)
    }

    /// `x ∪ y = (−1)^{pq} y ∪ x` on all generator pairs in range.
    pub fn is_graded_commutative(&self) -> Result<bool> {
        for p in 0..=self.top {
            for q in 0..=self.top - p {
                for i in 0..self.rank(p) {
                    for j in 0..self.rank(q) {
                        let xy = self.product(p, i, q, j)?;
                        let yx = self.product(q, j, p, i)?;
                        let signed: Vec<BigInt> = if (p * q) % 2 == 1 { yx.iter().map(|v| -v).collect() } else { yx };
                        let orders = self.models[p + q].orders();
                        let same = xy.iter().zip(&signed).zip(orders).all(|((a, b), o)| {
                            if o.is_zero() {
                                a == b
                            } else {
                                (a - b).mod_floor(o).is_zero()
                            }
                        });
                        if !same {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// `(x ∪ y) ∪ z = x ∪ (y ∪ z)` on classes, for all generator triples in
    /// range.
    pub fn is_associative(&self) -> Result<bool> {
        for p in 0..=self.top {
            for q in 0..=self.top - p {
                for r in 0..=self.top - p - q {
                    for i in 0..self.rank(p) {
                        for j in 0..self.rank(q) {
                            for l in 0..self.rank(r) {
                                let (x, y, z) = (self.generator(p, i), self.generator(q, j), self.generator(r, l));
                                let left = cup_unchecked(&self.space, &cup_unchecked(&self.space, &x, &y)?, &z)?;
                                let right = cup_unchecked(&self.space, &x, &cup_unchecked(&self.space, &y, &z)?)?;
                                if self.class_of(&left)? != self.class_of(&right)? {
                                    return Ok(false);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Generator names `x{degree}.{index}`.
fn name(n: usize, i: usize) -> String {
    format!("x{n}.{i}")
}

/// One row per product of generators with `p ≤ q`, aligned in columns.
impl fmt::Display for CohomologyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in 0..=self.top {
            let gens: Vec<String> = (0..self.rank(n)).map(|i| name(n, i)).collect();
            writeln!(f, "H^{n} = {} [{}]", self.group(n), gens.join(", "))?;
        }
        let mut rows: Vec<(String, String)> = Vec::new();
        for p in 1..=self.top {
            for q in p..=self.top - p {
                for i in 0..self.rank(p) {
                    for j in 0..self.rank(q) {
                        let value = match self.product(p, i, q, j) {
                            Ok(coords) => {
                                let terms: Vec<String> = coords
                                    .iter()
                                    .enumerate()
                                    .filter(|(_, c)| !c.is_zero())
                                    .map(|(k, c)| format!("{c}*{}", name(p + q, k)))
                                    .collect();
                                if terms.is_empty() {
                                    "0".to_string()
                                } else {
                                    terms.join(" + ")
                                }
                            }
                            Err(e) => format!("error: {e}"),
                        };
                        rows.push((format!("{} ∪ {}", name(p, i), name(q, j)), value));
                    }
                }
            }
        }
        let width = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
        for (l, v) in rows {
            let pad = width - l.chars().count();
            writeln!(f, "{l}{} = {v}", " ".repeat(pad))?;
        }
        Ok(())
    }
}
