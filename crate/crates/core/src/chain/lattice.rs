//! Sublattices of `Z^n` and their quotients.
//!
//! Homology, homology with cyclic coefficients and cohomology are all
//! computed as a quotient `L1 / L2` of lattices (cycles over boundaries, with
//! `m Z^n` folded into the boundaries for `Z/m` coefficients). A
//! [`Subquotient`] carries explicit representatives and a coordinate map,
//! so induced maps, connecting maps and exactness can be computed as
//! integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::group::AbelianGroup;
use super::matrix::IntegerMatrix;
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

/// A sublattice of `Z^ambient` with a basis and a coordinate map.
#[derive(Clone, Debug)]
pub struct Lattice {
    ambient: usize,
    basis: IntegerMatrix,
    coord: IntegerMatrix,
    divisors: Vec<BigInt>,
    residual: IntegerMatrix,
}

impl Lattice {
    pub fn full(n: usize) -> Self {
        Self {
            ambient: n,
            basis: IntegerMatrix::identity(n),
            coord: IntegerMatrix::identity(n),
            divisors: vec![BigInt::one(); n],
            residual: IntegerMatrix::zeros(0, n),
        }
    }

    /// Lattice spanned by arbitrary generators.
    pub fn from_generators(ambient: usize, gens: &[Vec<BigInt>]) -> Self {
        let m = IntegerMatrix::from_columns(ambient, gens);
        let snf = smith_normal_form(&m);
        let r = snf.rank();
        let basis = IntegerMatrix::from_fn(ambient, r, |i, j| snf.u_inv.get(i, j) * &snf.diagonal[j]);
        let rows: Vec<usize> = (0..r).collect();
        let rest: Vec<usize> = (r..ambient).collect();
        let all: Vec<usize> = (0..ambient).collect();
        Self {
            ambient,
            basis,
            coord: snf.u.select(&rows, &all),
            divisors: snf.diagonal.clone(),
            residual: snf.u.select(&rest, &all),
        }
    }

    /// `{ x : A x ≡ 0 (mod m) }`; `m = 0` gives the kernel of `A`.
    pub fn preimage_mod(a: &IntegerMatrix, modulus: &BigInt) -> Self {
        let n = a.cols();
        let snf = smith_normal_form(a);
        let r = snf.rank();
        let mut basis_cols = Vec::new();
        let mut coord_rows = Vec::new();
        let mut divisors = Vec::new();
        let mut residual_rows = Vec::new();
        for i in 0..n {
            let step = if i < r {
                if modulus.is_zero() {
                    residual_rows.push(i);
                    continue;
                }
                modulus / modulus.gcd(&snf.diagonal[i])
            } else {
                BigInt::one()
            };
            basis_cols.push(snf.v.col(i).into_iter().map(|x| x * &step).collect::<Vec<_>>());
            coord_rows.push(i);
            divisors.push(step);
        }
        let all: Vec<usize> = (0..n).collect();
        Self {
            ambient: n,
            basis: IntegerMatrix::from_columns(n, &basis_cols),
            coord: snf.v_inv.select(&coord_rows, &all),
            divisors,
            residual: snf.v_inv.select(&residual_rows, &all),
        }
    }

    pub fn kernel(a: &IntegerMatrix) -> Self {
        Self::preimage_mod(a, &BigInt::zero())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// Basis vectors as columns.
    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    /// Coordinates of `x` in the basis, or an error when `x` is not a member.
    pub fn coords(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.ambient {
            return Err(Error::Shape(format!("vector of length {} in Z^{}", x.len(), self.ambient)));
        }
        if self.residual.mul_vec(x).iter().any(|v| !v.is_zero()) {
            return Err(Error::NotInLattice);
        }
        self.coord
            .mul_vec(x)
            .into_iter()
            .zip(&self.divisors)
            .map(|(c, d)| {
                let (q, r) = c.div_rem(d);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::NotInLattice)
                }
            })
            .collect()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.coords(x).is_ok()
    }

    /// Same set of vectors.
    pub fn same_as(&self, other: &Lattice) -> bool {
        self.ambient == other.ambient
            && self.basis.columns().iter().all(|c| other.contains(c))
            && other.basis.columns().iter().all(|c| self.contains(c))
    }
}

/// A quotient `L1 / L2` of lattices in `Z^n`, decomposed into cyclic
/// summands with chosen representatives.
#[derive(Clone, Debug)]
pub struct Subquotient {
    lattice: Lattice,
    u: IntegerMatrix,
    orders: Vec<BigInt>,
    kept: Vec<usize>,
    reps: Vec<Vec<BigInt>>,
}

impl Subquotient {
    /// `relations` must lie in `lattice`.
    pub fn new(lattice: Lattice, relations: &[Vec<BigInt>]) -> Result<Self> {
        let r = lattice.rank();
        let coords = relations.iter().map(|v| lattice.coords(v)).collect::<Result<Vec<_>>>()?;
        let c = IntegerMatrix::from_columns(r, &coords);
        let snf = smith_normal_form(&c);
        let mut orders = Vec::new();
        let mut kept = Vec::new();
        let mut reps = Vec::new();
        for i in 0..r {
            let order = snf.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero);
            if order.is_one() {
                continue;
            }
            let rep = lattice.basis.mul_vec(&snf.u_inv.col(i));
            kept.push(i);
            orders.push(order);
            reps.push(rep);
        }
        Ok(Self { lattice, u: snf.u, orders, kept, reps })
    }

    /// Number of cyclic summands in the decomposition.
    pub fn len(&self) -> usize {
        self.kept.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kept.is_empty()
    }

    /// Order of each summand; zero marks a free summand.
    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    /// Representatives of the summand generators, in the ambient lattice.
    pub fn representatives(&self) -> &[Vec<BigInt>] {
        &self.reps
    }

    pub fn ambient(&self) -> usize {
        self.lattice.ambient()
    }

    pub fn group(&self) -> AbelianGroup {
        AbelianGroup::from_orders(&self.orders)
    }

    /// Coordinates of the class of `x` (which must lie in `L1`), reduced
    /// modulo each summand's order.
    pub fn class_of(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        let c = self.lattice.coords(x)?;
        let w = self.u.mul_vec(&c);
        Ok(self
            .kept
            .iter()
            .zip(&self.orders)
            .map(|(&i, o)| if o.is_zero() { w[i].clone() } else { w[i].mod_floor(o) })
            .collect())
    }

    pub fn is_zero_class(&self, x: &[BigInt]) -> Result<bool> {
        Ok(self.class_of(x)?.iter().all(Zero::is_zero))
    }

    /// A vector of `L1` representing the given class coordinates.
    pub fn lift(&self, class: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.ambient()];
        for (coef, rep) in class.iter().zip(&self.reps) {
            if coef.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(rep) {
                *o += coef * r;
            }
        }
        out
    }

    /// Matrix of the map induced by a chain-level map, in summand
    /// coordinates (columns indexed by this quotient's summands).
    pub fn induced(
        &self,
        target: &Subquotient,
        mut chain_map: impl FnMut(&[BigInt]) -> Result<Vec<BigInt>>,
    ) -> Result<IntegerMatrix> {
        let cols = self
            .reps
            .iter()
            .map(|rep| target.class_of(&chain_map(rep)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntegerMatrix::from_columns(target.len(), &cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn kernel_membership() {
        let a = IntegerMatrix::from_rows(&[vec![1, 1, 0]]);
        let k = Lattice::kernel(&a);
        assert_eq!(k.rank(), 2);
        assert!(k.contains(&v(&[1, -1, 5])));
        assert!(!k.contains(&v(&[1, 0, 0])));
    }

    #[test]
    fn preimage_mod_two() {
        let a = IntegerMatrix::from_rows(&[vec![1, 1]]);
        let l = Lattice::preimage_mod(&a, &BigInt::from(2));
        assert!(l.contains(&v(&[1, 1])));
        assert!(l.contains(&v(&[2, 0])));
        assert!(!l.contains(&v(&[1, 0])));
    }

    #[test]
    fn generated_lattice() {
        let l = Lattice::from_generators(2, &[v(&[2, 0]), v(&[0, 4]), v(&[2, 4])]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&v(&[4, 8])));
        assert!(!l.contains(&v(&[1, 0])));
        assert!(!l.contains(&v(&[0, 2])));
    }

    #[test]
    fn quotient_z_mod_relations() {
        let q = Subquotient::new(Lattice::full(2), &[v(&[2, 0]), v(&[0, 3])]).unwrap();
        assert_eq!(q.group().to_string(), "Z/6");
        let g = q.class_of(&v(&[1, 1])).unwrap();
        assert_eq!(g.len(), 1);
        assert!(!q.is_zero_class(&v(&[1, 1])).unwrap());
        assert!(q.is_zero_class(&v(&[2, 3])).unwrap());
    }
}
