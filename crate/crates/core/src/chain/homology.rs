use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::complex::{normalized_chains, ChainComplex};
use super::group::AbelianGroup;
use super::lattice::{Lattice, Subquotient};
use super::smith::invariant_factors;
use crate::error::Result;
use crate::sset::SimplicialSet;

fn unit_vectors_scaled(n: usize, m: &BigInt) -> Vec<Vec<BigInt>> {
    if m.is_zero() {
        return Vec::new();
    }
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { m.clone() } else { BigInt::zero() }).collect())
        .collect()
}

/// `H_n(C ⊗ Z/m)` as an explicit subquotient of `C_n`; `m = 0` is integral
/// homology.
pub fn homology_model_mod(c: &ChainComplex, n: usize, modulus: &BigInt) -> Result<Subquotient> {
    let cycles = Lattice::preimage_mod(&c.boundary(n), modulus);
    let mut relations = c.boundary(n + 1).columns();
    relations.extend(unit_vectors_scaled(c.rank(n), modulus));
    Subquotient::new(cycles, &relations)
}

pub fn homology_model(c: &ChainComplex, n: usize) -> Result<Subquotient> {
    homology_model_mod(c, n, &BigInt::zero())
}

/// `H^n(Hom(C, Z/m))` as a subquotient of cochains `Z^{rank C_n}`.
pub fn cohomology_model_mod(c: &ChainComplex, n: usize, modulus: &BigInt) -> Result<Subquotient> {
    let cocycles = Lattice::preimage_mod(&c.boundary(n + 1).transpose(), modulus);
    let mut relations = if n == 0 { Vec::new() } else { c.boundary(n).transpose().columns() };
    relations.extend(unit_vectors_scaled(c.rank(n), modulus));
    Subquotient::new(cocycles, &relations)
}

/// Integral homology in degrees `0..=up_to`: betti numbers from ranks,
/// torsion from the invariant factors of the incoming boundary.
pub fn homology(c: &ChainComplex, up_to: usize) -> Result<Vec<AbelianGroup>> {
    c.verify()?;
    let factors: Vec<Vec<BigInt>> = (0..=up_to + 1).map(|n| invariant_factors(&c.boundary(n))).collect();
    Ok((0..=up_to)
        .map(|n| {
            let rank_out = factors[n].len();
            let rank_in = factors[n + 1].len();
            let betti = c.rank(n) - rank_out - rank_in;
            let mut orders = vec![BigInt::zero(); betti];
            orders.extend(factors[n + 1].iter().filter(|d| !d.is_one()).cloned());
            AbelianGroup::from_orders(&orders)
        })
        .collect())
}

/// Reduced homology: one copy of `Z` removed from degree 0 when the
/// complex is non-empty.
pub fn reduced_homology(c: &ChainComplex, up_to: usize) -> Result<Vec<AbelianGroup>> {
    let mut groups = homology(c, up_to)?;
    if let Some(h0) = groups.first_mut() {
        if h0.betti > 0 {
            h0.betti -= 1;
        }
    }
    Ok(groups)
}

/// `H_n(C; π)` for a finitely generated coefficient group, summed over the
/// cyclic summands of `π`.
pub fn homology_with_coefficients(c: &ChainComplex, up_to: usize, pi: &AbelianGroup) -> Result<Vec<AbelianGroup>> {
    c.verify()?;
    (0..=up_to)
        .map(|n| {
            let parts = pi
                .cyclic_orders()
                .iter()
                .map(|m| homology_model_mod(c, n, m).map(|q| q.group()))
                .collect::<Result<Vec<_>>>()?;
            Ok(AbelianGroup::sum_all(&parts))
        })
        .collect()
}

/// `H^n(Hom(C, π))`, summed over the cyclic summands of `π`.
pub fn cohomology_with_coefficients(c: &ChainComplex, up_to: usize, pi: &AbelianGroup) -> Result<Vec<AbelianGroup>> {
    c.verify()?;
    (0..=up_to)
        .map(|n| {
            let parts = pi
                .cyclic_orders()
                .iter()
                .map(|m| cohomology_model_mod(c, n, m).map(|q| q.group()))
                .collect::<Result<Vec<_>>>()?;
            Ok(AbelianGroup::sum_all(&parts))
        })
        .collect()
}

/// Integral homology of a simplicial set through its top dimension.
pub fn space_homology(k: &SimplicialSet) -> Result<Vec<AbelianGroup>> {
    homology(&normalized_chains(k), k.top_dim().unwrap_or(0))
}

/// Alternating count of non-degenerate generators.
pub fn euler_characteristic(k: &SimplicialSet) -> i64 {
    k.counts().iter().enumerate().map(|(n, &c)| if n % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
}

/// Alternating sum of betti numbers.
pub fn betti_euler(groups: &[AbelianGroup]) -> i64 {
    groups.iter().enumerate().map(|(n, g)| if n % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum()
}
