//! Construction-only helpers: matrix Lie algebras over ℚ(i, √2, √3, √5),
//! used to derive the structure constants of the built-in spaces.

use super::{GVec, LieAlgebra};
use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldMatrix};
use crate::par::Exec;

/// Elementary matrix `E_ab` of size `n`.
pub fn elem(n: usize, a: usize, b: usize) -> FieldMatrix {
    let mut m = FieldMatrix::zeros(n, n);
    m[(a, b)] = FieldElem::one();
    m
}

pub fn diag(entries: &[FieldElem]) -> FieldMatrix {
    let n = entries.len();
    FieldMatrix::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { FieldElem::zero() })
}

pub fn block_diag(blocks: &[&FieldMatrix]) -> FieldMatrix {
    let n: usize = blocks.iter().map(|b| b.rows()).sum();
    let mut m = FieldMatrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for r in 0..b.rows() {
            for c in 0..b.cols() {
                m[(off + r, off + c)] = b[(r, c)].clone();
            }
        }
        off += b.rows();
    }
    m
}

pub fn commutator(a: &FieldMatrix, b: &FieldMatrix) -> FieldMatrix {
    a.mul(b).expect("square").sub(&b.mul(a).expect("square")).expect("same shape")
}

/// Quaternion units `1, i, j, k` as complex 2×2 matrices:
/// `i ↦ diag(i, −i)`, `j ↦ [[0, 1], [−1, 0]]`, `k = ij`.
pub fn quaternion_units() -> [FieldMatrix; 4] {
    let one = FieldElem::one();
    let i = FieldElem::i();
    let qi = diag(&[i.clone(), -i]);
    let qj = FieldMatrix::from_rows(vec![vec![FieldElem::zero(), one.clone()], vec![-one, FieldElem::zero()]], 2)
        .expect("2x2");
    let qk = qi.mul(&qj).expect("2x2");
    [FieldMatrix::identity(2), qi, qj, qk]
}

/// Quaternionic conjugate transpose of a 2×2 complex block (a quaternion).
pub fn quat_conj(q: &FieldMatrix) -> FieldMatrix {
    FieldMatrix::from_fn(q.cols(), q.rows(), |r, c| q[(c, r)].conj())
}

/// A 2×2 matrix of quaternions as a 4×4 complex matrix.
pub fn quaternion_matrix(q: [[&FieldMatrix; 2]; 2]) -> FieldMatrix {
    let mut m = FieldMatrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            for r in 0..2 {
                for c in 0..2 {
                    m[(2 * a + r, 2 * b + c)] = q[a][b][(r, c)].clone();
                }
            }
        }
    }
    m
}

/// A real-linear span of matrices with exact coordinate extraction.
pub struct MatrixModel {
    basis: Vec<FieldMatrix>,
    /// Entries (flattened positions) that determine coordinates.
    pivots: Vec<usize>,
    inverse: FieldMatrix,
}

fn flatten(m: &FieldMatrix) -> Vec<FieldElem> {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

impl MatrixModel {
    pub fn new(basis: Vec<FieldMatrix>) -> Result<Self> {
        let d = basis.len();
        let flat: Vec<Vec<FieldElem>> = basis.iter().map(flatten).collect();
        let len = flat.first().map_or(0, Vec::len);
        let bt = FieldMatrix::from_rows(flat.clone(), len)?;
        let (_, pivots) = bt.rref(Exec::Sequential);
        if pivots.len() != d {
            return Err(Error::InvariantViolation("matrix basis is linearly dependent".into()));
        }
        let square = FieldMatrix::from_fn(d, d, |r, c| flat[c][pivots[r]].clone());
        let inverse = square.inverse()?;
        Ok(MatrixModel { basis, pivots, inverse })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, m: &FieldMatrix) -> Result<GVec> {
        let flat = flatten(m);
        let rhs: Vec<FieldElem> = self.pivots.iter().map(|&p| flat[p].clone()).collect();
        let x = self.inverse.mul_vec(&rhs)?;
        let back = self.matrix(&x);
        if &back != m {
            return Err(Error::InvariantViolation("matrix does not lie in the model's span".into()));
        }
        Ok(x)
    }

    pub fn matrix(&self, x: &[FieldElem]) -> FieldMatrix {
        let (r, c) = (self.basis[0].rows(), self.basis[0].cols());
        let mut m = FieldMatrix::zeros(r, c);
        for (xi, b) in x.iter().zip(&self.basis) {
            if !xi.is_zero() {
                m = m.add(&b.scale(xi)).expect("same shape");
            }
        }
        m
    }

    /// Structure constants from commutators of the basis matrices.
    pub fn algebra(&self) -> Result<LieAlgebra> {
        let d = self.dim();
        let mut consts = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let x = self.coords(&commutator(&self.basis[i], &self.basis[j]))?;
                for (k, c) in x.into_iter().enumerate() {
                    if !c.is_zero() {
                        consts.push((i, j, k, c));
                    }
                }
            }
        }
        LieAlgebra::new(d, &consts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        let [one, i, j, k] = quaternion_units();
        let minus = one.scale(&-FieldElem::one());
        assert_eq!(i.mul(&i).unwrap(), minus);
        assert_eq!(j.mul(&j).unwrap(), minus);
        assert_eq!(k.mul(&k).unwrap(), minus);
        assert_eq!(quat_conj(&i), i.scale(&-FieldElem::one()));
    }

    #[test]
    fn su2_model() {
        let [_, i, j, k] = quaternion_units();
        let model = MatrixModel::new(vec![i.clone(), j.clone(), k.clone()]).unwrap();
        let g = model.algebra().unwrap();
        g.check_jacobi().unwrap();
        // [i, j] = 2k
        assert_eq!(g.bracket_basis(0, 1)[2], FieldElem::from_int(2));
        assert!(model.coords(&FieldMatrix::identity(2)).is_err());
    }
}
