use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldMatrix};

/// A symmetric bilinear form `h = Σ h_ab e^a ⊗ e^b` on ℝⁿ.
#[derive(Clone, PartialEq, Eq)]
pub struct SymTensor {
    m: FieldMatrix,
}

impl SymTensor {
    pub fn zero(n: usize) -> Self {
        SymTensor { m: FieldMatrix::zeros(n, n) }
    }

    pub fn identity(n: usize) -> Self {
        SymTensor { m: FieldMatrix::identity(n) }
    }

    pub fn from_matrix(m: FieldMatrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch("symmetric tensor must be square".into()));
        }
        if m != m.transpose() {
            return Err(Error::InvariantViolation("matrix is not symmetric".into()));
        }
        Ok(SymTensor { m })
    }

    /// Symmetric product `α ⊙ β = (α ⊗ β + β ⊗ α)/2` of two coframe
    /// vectors (0-based positions), so `e^a ⊙ e^b` has `h_ab = h_ba = 1/2`.
    pub fn odot(n: usize, a: usize, b: usize) -> Self {
        let half = FieldElem::from_ratio(1, 2);
        let mut m = FieldMatrix::zeros(n, n);
        m[(a, b)] += &half;
        m[(b, a)] += &half;
        SymTensor { m }
    }

    /// Symmetric part `(M + Mᵀ)/2` of an arbitrary bilinear form.
    pub fn symmetrize(m: &FieldMatrix) -> Self {
        let half = FieldElem::from_ratio(1, 2);
        SymTensor { m: m.add(&m.transpose()).expect("square").scale(&half) }
    }

    /// Traceless symmetric part `π₀(M)`.
    pub fn traceless_part(m: &FieldMatrix) -> Self {
        let s = Self::symmetrize(m);
        let n = s.n();
        let shift = s.trace() * FieldElem::from_ratio(1, n as i64);
        s.sub(&Self::identity(n).scale(&shift))
    }

    pub fn n(&self) -> usize {
        self.m.rows()
    }

    pub fn get(&self, a: usize, b: usize) -> &FieldElem {
        &self.m[(a, b)]
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.m
    }

    pub fn trace(&self) -> FieldElem {
        (0..self.n()).map(|i| self.m[(i, i)].clone()).sum()
    }

    pub fn is_traceless(&self) -> bool {
        self.trace().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        SymTensor { m: self.m.add(&other.m).expect("same size") }
    }

    pub fn sub(&self, other: &Self) -> Self {
        SymTensor { m: self.m.sub(&other.m).expect("same size") }
    }

    pub fn scale(&self, s: &FieldElem) -> Self {
        SymTensor { m: self.m.scale(s) }
    }

    /// Derivation action of `D`: with the contragredient `C = −Dᵀ`,
    /// `h ↦ C h + h Cᵀ`.
    pub fn derive(&self, d: &FieldMatrix) -> Self {
        let c = d.transpose().scale(&-FieldElem::one());
        let ch = c.mul(&self.m).expect("square");
        SymTensor { m: ch.add(&ch.transpose()).expect("square") }
    }

    /// Upper-triangular coordinates `(h_ab)_{a ≤ b}`.
    pub fn coords(&self) -> Vec<FieldElem> {
        let n = self.n();
        let mut v = Vec::with_capacity(n * (n + 1) / 2);
        for a in 0..n {
            for b in a..n {
                v.push(self.m[(a, b)].clone());
            }
        }
        v
    }
}

impl fmt::Debug for SymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymTensor{:?}", self.m)
    }
}
