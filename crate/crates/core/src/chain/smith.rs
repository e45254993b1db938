//! Smith normal form over the integers.
//!
//! Each round moves a nonzero entry of minimal absolute value into the pivot
//! position, clears its row and column by Euclidean steps, and repeats until
//! the pivot divides every remaining entry. Arbitrary precision entries make
//! the result exact regardless of coefficient growth.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

/// `U · M · V = S` with `U`, `V` unimodular and `S` diagonal, `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub v: IntegerMatrix,
    pub v_inv: IntegerMatrix,
    pub s: IntegerMatrix,
    /// Nonzero diagonal entries, all positive.
    pub diagonal: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Recomputes `U · M · V` and checks it equals `S`, that `S` is a
    /// divisibility chain and that `U`, `V` have determinant ±1.
    pub fn verify(&self, m: &IntegerMatrix) -> bool {
        let product = &(&self.u * m) * &self.v;
        let chain = self.diagonal.windows(2).all(|w| (&w[1] % &w[0]).is_zero());
        let inverse_ok = (&self.u * &self.u_inv) == IntegerMatrix::identity(self.u.rows())
            && (&self.v * &self.v_inv) == IntegerMatrix::identity(self.v.rows());
        product == self.s && chain && inverse_ok && self.u.is_unimodular() && self.v.is_unimodular()
    }
}

struct Transforms {
    u: IntegerMatrix,
    u_inv: IntegerMatrix,
    v: IntegerMatrix,
    v_inv: IntegerMatrix,
}

struct Reducer {
    a: IntegerMatrix,
    t: Option<Transforms>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(t) = &mut self.t {
            t.u.swap_rows(i, j);
            t.u_inv.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(t) = &mut self.t {
            t.v.swap_cols(i, j);
            t.v_inv.swap_rows(i, j);
        }
    }

    /// row[target] += k row[source]
    fn row_op(&mut self, target: usize, source: usize, k: &BigInt) {
        self.a.add_row_multiple(target, source, k);
        if let Some(t) = &mut self.t {
            t.u.add_row_multiple(target, source, k);
            t.u_inv.add_col_multiple(source, target, &-k);
        }
    }

    /// col[target] += k col[source]
    fn col_op(&mut self, target: usize, source: usize, k: &BigInt) {
        self.a.add_col_multiple(target, source, k);
        if let Some(t) = &mut self.t {
            t.v.add_col_multiple(target, source, k);
            t.v_inv.add_row_multiple(source, target, &-k);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(t) = &mut self.t {
            t.u.negate_row(i);
            t.u_inv.negate_col(i);
        }
    }

    fn min_entry(&self, from: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in from..self.a.rows() {
            for j in from..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => x.magnitude() < self.a.get(bi, bj).magnitude(),
                };
                if better {
                    best = Some((i, j));
                    if x.magnitude().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) -> Vec<BigInt> {
        let limit = self.a.rows().min(self.a.cols());
        let mut diagonal = Vec::new();
        for t in 0..limit {
            loop {
                let Some((pi, pj)) = self.min_entry(t) else {
                    return diagonal;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let pivot = self.a.get(t, t).clone();
                let mut dirty = false;
                for i in t + 1..self.a.rows() {
                    let x = self.a.get(i, t);
                    if x.is_zero() {
                        continue;
                    }
                    let q = x / &pivot;
                    self.row_op(i, t, &-q);
                    dirty |= !self.a.get(i, t).is_zero();
                }
                for j in t + 1..self.a.cols() {
                    let x = self.a.get(t, j);
                    if x.is_zero() {
                        continue;
                    }
                    let q = x / &pivot;
                    self.col_op(j, t, &-q);
                    dirty |= !self.a.get(t, j).is_zero();
                }
                if dirty {
                    continue;
                }
                let offender = (t + 1..self.a.rows())
                    .find(|&i| (t + 1..self.a.cols()).any(|j| !(self.a.get(i, j) % &pivot).is_zero()));
                match offender {
                    Some(i) => self.row_op(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a.get(t, t).is_negative() {
                self.negate_row(t);
            }
            diagonal.push(self.a.get(t, t).clone());
        }
        diagonal
    }
}

/// Full Smith normal form with both transforms and their inverses.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut red = Reducer {
        a: m.clone(),
        t: Some(Transforms {
            u: IntegerMatrix::identity(r),
            u_inv: IntegerMatrix::identity(r),
            v: IntegerMatrix::identity(c),
            v_inv: IntegerMatrix::identity(c),
        }),
    };
    let diagonal = red.run();
    let t = red.t.expect("transforms tracked");
    SmithForm { u: t.u, u_inv: t.u_inv, v: t.v, v_inv: t.v_inv, s: red.a, diagonal }
}

/// Nonzero invariant factors only, without tracking transforms.
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    Reducer { a: m.clone(), t: None }.run()
}
