use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;
use super::smith::invariant_factors;
use crate::error::Error;

/// A finitely generated abelian group `Z^betti ⊕ Z/d1 ⊕ … ⊕ Z/dk` in
/// invariant-factor form: every `d_i ≥ 2` and `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

/// Homology groups are reported in this form, degree by degree.
pub type HomologyGroup = AbelianGroup;

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { betti: rank, torsion: Vec::new() }
    }

    /// `Z/d`, with `d = 0` meaning `Z`.
    pub fn cyclic(d: impl Into<BigInt>) -> Self {
        Self::from_orders(&[d.into()])
    }

    /// Direct sum of cyclic groups of the given orders (0 = infinite),
    /// brought to invariant-factor form.
    pub fn from_orders(orders: &[BigInt]) -> Self {
        let betti = orders.iter().filter(|o| o.is_zero()).count();
        let finite: Vec<BigInt> = orders.iter().filter(|o| !o.is_zero()).map(|o| o.abs()).collect();
        let n = finite.len();
        let torsion = if finite.iter().all(|d| d.is_one()) {
            Vec::new()
        } else {
            let diag = IntegerMatrix::diagonal(n, n, &finite);
            invariant_factors(&diag).into_iter().filter(|d| !d.is_one()).collect()
        };
        Self { betti, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    /// Orders of the cyclic summands (0 for each free summand), free first.
    pub fn cyclic_orders(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.betti];
        v.extend(self.torsion.iter().cloned());
        v
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.cyclic_orders();
        orders.extend(other.cyclic_orders());
        Self::from_orders(&orders)
    }

    pub fn sum_all<'a>(groups: impl IntoIterator<Item = &'a AbelianGroup>) -> Self {
        groups.into_iter().fold(Self::trivial(), |acc, g| acc.direct_sum(g))
    }

    fn pairwise(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let a = self.cyclic_orders();
        let b = other.cyclic_orders();
        let orders: Vec<BigInt> = a.iter().flat_map(|x| b.iter().map(|y| f(x, y)).collect::<Vec<_>>()).collect();
        Self::from_orders(&orders)
    }

    /// `A ⊗ B`: `Z/a ⊗ Z/b = Z/gcd(a, b)` with `Z = Z/0`.
    pub fn tensor(&self, other: &Self) -> Self {
        self.pairwise(other, |a, b| a.gcd(b))
    }

    /// `Tor(A, B)`: `Z/gcd(a, b)` when both are finite, else 0.
    pub fn tor(&self, other: &Self) -> Self {
        self.pairwise(other, |a, b| if a.is_zero() || b.is_zero() { BigInt::one() } else { a.gcd(b) })
    }

    /// `Hom(A, B)`: `Hom(Z, B) = B`, `Hom(Z/a, Z) = 0`, `Hom(Z/a, Z/b) = Z/gcd`.
    pub fn hom(&self, other: &Self) -> Self {
        self.pairwise(other, |a, b| match (a.is_zero(), b.is_zero()) {
            (true, _) => b.clone(),
            (false, true) => BigInt::one(),
            (false, false) => a.gcd(b),
        })
    }

    /// `Ext(A, B)`: `Ext(Z, B) = 0`, `Ext(Z/a, Z) = Z/a`, `Ext(Z/a, Z/b) = Z/gcd`.
    pub fn ext(&self, other: &Self) -> Self {
        self.pairwise(other, |a, b| match (a.is_zero(), b.is_zero()) {
            (true, _) => BigInt::one(),
            (false, true) => a.clone(),
            (false, false) => a.gcd(b),
        })
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Parses `0`, `Z`, `Z^2`, `Z/4`, `Z^2 + Z/2 + Z/4` (spaces optional).
impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadCoefficients(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::trivial());
        }
        let mut orders = Vec::new();
        for term in compact.split('+') {
            if let Some(d) = term.strip_prefix("Z/") {
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if !d.is_positive() {
                    return Err(bad());
                }
                orders.push(d);
            } else if let Some(b) = term.strip_prefix("Z^") {
                let b: usize = b.parse().map_err(|_| bad())?;
                orders.extend(std::iter::repeat(BigInt::zero()).take(b));
            } else if term == "Z" {
                orders.push(BigInt::zero());
            } else {
                return Err(bad());
            }
        }
        Ok(Self::from_orders(&orders))
    }
}
