//! Matrix ranks over the rationals and over prime fields.
//!
//! These use plain Gaussian elimination and share no code with the Smith
//! normal form, so they serve as an independent cross-check of betti
//! numbers and of mod-p homology dimensions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::complex::ChainComplex;
use super::matrix::IntegerMatrix;

/// Rank over `Q` by fraction-free elimination.
pub fn rank_rational(m: &IntegerMatrix) -> usize {
    let mut rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i)).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            let factor = row[col].clone();
            if factor.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = &*x * &pivot[col] - &factor * y;
            }
            let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if g > BigInt::from(1) {
                for x in row.iter_mut() {
                    *x /= &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank over `F_p` for a prime `p < 2^31`.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> usize {
    let pb = BigInt::from(p);
    let mut rows: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.mod_floor(&pb).to_u64().expect("reduced")).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        let pivot: Vec<u64> = rows[rank].iter().map(|x| x * inv % p).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Betti numbers from rational ranks.
pub fn rational_betti(c: &ChainComplex, up_to: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=up_to + 1).map(|n| rank_rational(&c.boundary(n))).collect();
    (0..=up_to).map(|n| c.rank(n) - ranks[n] - ranks[n + 1]).collect()
}

/// Dimensions of `H_n(C; F_p)` from ranks mod `p`.
pub fn mod_p_dimensions(c: &ChainComplex, up_to: usize, p: u64) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=up_to + 1).map(|n| rank_mod_p(&c.boundary(n), p)).collect();
    (0..=up_to).map(|n| c.rank(n) - ranks[n] - ranks[n + 1]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_differ_by_characteristic() {
        let m = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 0);
        assert_eq!(rank_mod_p(&m, 3), 2);
    }

    #[test]
    fn dependent_rows() {
        let m = IntegerMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }
}
