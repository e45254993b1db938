use super::complex::ChainComplex;
use super::group::AbelianGroup;
use super::homology::{cohomology_with_coefficients, homology, homology_with_coefficients};
use crate::error::Result;

/// Coefficient groups computed directly next to the values predicted from
/// integral homology, degree by degree.
#[derive(Clone, Debug)]
pub struct UctReport {
    pub coefficients: AbelianGroup,
    pub homology: Vec<(AbelianGroup, AbelianGroup)>,
    pub cohomology: Vec<(AbelianGroup, AbelianGroup)>,
}

impl UctReport {
    pub fn passed(&self) -> bool {
        self.homology.iter().chain(&self.cohomology).all(|(a, b)| a == b)
    }

    pub fn lines(&self) -> Vec<String> {
        let mark = |a: &AbelianGroup, b: &AbelianGroup| if a == b { "PASS" } else { "FAIL" };
        let pi = &self.coefficients;
        let mut out = Vec::new();
        for (n, (direct, formula)) in self.homology.iter().enumerate() {
            out.push(format!("{} uct H_{n}(;{pi}): direct={direct} formula={formula}", mark(direct, formula)));
        }
        for (n, (direct, formula)) in self.cohomology.iter().enumerate() {
            out.push(format!("{} uct H^{n}(;{pi}): direct={direct} formula={formula}", mark(direct, formula)));
        }
        out
    }
}

/// `H_n(C; π) ≅ H_n ⊗ π ⊕ Tor(H_{n−1}, π)` and
/// `H^n(C; π) ≅ Hom(H_n, π) ⊕ Ext(H_{n−1}, π)` for `n ≤ up_to`.
pub fn uct_check(c: &ChainComplex, up_to: usize, pi: &AbelianGroup) -> Result<UctReport> {
    let integral = homology(c, up_to)?;
    let direct_h = homology_with_coefficients(c, up_to, pi)?;
    let direct_c = cohomology_with_coefficients(c, up_to, pi)?;
    let zero = AbelianGroup::trivial();
    let below = |n: usize| if n == 0 { &zero } else { &integral[n - 1] };
    let homology = (0..=up_to)
        .map(|n| (direct_h[n].clone(), integral[n].tensor(pi).direct_sum(&below(n).tor(pi))))
        .collect();
    let cohomology = (0..=up_to)
        .map(|n| (direct_c[n].clone(), integral[n].hom(pi).direct_sum(&below(n).ext(pi))))
        .collect();
    Ok(UctReport { coefficients: pi.clone(), homology, cohomology })
}
