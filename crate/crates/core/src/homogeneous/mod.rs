//! Lie algebras given by structure constants, naturally reductive spaces
//! `g = h ⊕ m` with an orthonormal frame of `m`, their torsion 3-form, and
//! the built-in examples SO(5)/SO(3), the squashed S⁷ and N(1,1).

mod builtin;
mod io;
mod matrix_model;
mod space;

pub use builtin::{builtin, builtin_names};
pub use io::{load_space, space_from_json, space_to_json};
pub use space::{NearlyParallelData, ReductiveSpace};

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldMatrix};

/// Coordinates of an element of `g` in its structure-constant basis.
pub type GVec = Vec<FieldElem>;

/// A Lie algebra with `[e_i, e_j] = Σ_k c_ij^k e_k`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    /// `table[i * dim + j]` holds `[e_i, e_j]` as a dense coordinate vector.
    table: Vec<GVec>,
    killing: FieldMatrix,
}

impl LieAlgebra {
    /// From 0-based `(i, j, k, c)` entries. Entries may be given for either
    /// order of `(i, j)`; conflicting or diagonal entries are rejected.
    pub fn new(dim: usize, constants: &[(usize, usize, usize, FieldElem)]) -> Result<Self> {
        let mut table = vec![vec![FieldElem::zero(); dim]; dim * dim];
        let mut seen = vec![vec![false; dim]; dim * dim];
        for (i, j, k, c) in constants {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvariantViolation(format!("structure constant index ({i},{j},{k}) out of range")));
            }
            if i == j {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::InvariantViolation(format!("antisymmetry: [e{0},e{0}] must vanish", i + 1)));
            }
            let (a, b, c) = if i < j { (i, j, c.clone()) } else { (j, i, -c) };
            if seen[a * dim + b][k] && table[a * dim + b][k] != c {
                return Err(Error::InvariantViolation(format!(
                    "antisymmetry: conflicting entries for [e{},e{}]_{}",
                    a + 1,
                    b + 1,
                    k + 1
                )));
            }
            seen[a * dim + b][k] = true;
            table[a * dim + b][k] = c.clone();
            table[b * dim + a][k] = -c;
        }
        let mut g = LieAlgebra { dim, table, killing: FieldMatrix::zeros(0, 0) };
        let ads: Vec<FieldMatrix> = (0..dim).map(|i| g.ad(&unit(dim, i))).collect();
        g.killing = FieldMatrix::from_fn(dim, dim, |i, j| trace_of_product(&ads[i], &ads[j]));
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &GVec {
        &self.table[i * self.dim + j]
    }

    /// Nonzero structure constants `(i, j, k, c_ij^k)` with `i < j`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, FieldElem)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[FieldElem], y: &[FieldElem]) -> Result<GVec> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!("vectors must have length {}", self.dim)));
        }
        let mut out = vec![FieldElem::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let s = xi * yj;
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad_x`: column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[FieldElem]) -> FieldMatrix {
        let cols: Vec<GVec> =
            (0..self.dim).map(|j| self.bracket(x, &unit(self.dim, j)).expect("sizes match")).collect();
        FieldMatrix::from_columns(&cols, self.dim).expect("square")
    }

    /// Killing form `B(x, y) = tr(ad_x ∘ ad_y)`.
    pub fn killing(&self, x: &[FieldElem], y: &[FieldElem]) -> Result<FieldElem> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!("vectors must have length {}", self.dim)));
        }
        let ky = self.killing.mul_vec(y)?;
        Ok(x.iter().zip(&ky).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
    }

    pub fn killing_matrix(&self) -> &FieldMatrix {
        &self.killing
    }

    /// Checks the Jacobi identity on all basis triples.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (unit(n, i), unit(n, j), unit(n, k));
                    let a = self.bracket(&ei, self.bracket_basis(j, k))?;
                    let b = self.bracket(&ej, self.bracket_basis(k, i))?;
                    let c = self.bracket(&ek, self.bracket_basis(i, j))?;
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z.clone()).is_zero()) {
                        return Err(Error::InvariantViolation(format!(
                            "Jacobi identity fails on (e{}, e{}, e{})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Connected components of the graph joining `i` and `k` whenever `e_k`
    /// occurs in some `[e_i, e_j]`. For a basis adapted to a decomposition
    /// into simple ideals these are exactly the ideals; abelian directions
    /// appear as singletons.
    pub fn bracket_components(&self) -> Vec<Vec<usize>> {
        let n = self.dim;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        for a in [j, k] {
                            let (ri, ra) = (find(&mut parent, i), find(&mut parent, a));
                            parent[ri.max(ra)] = ri.min(ra);
                        }
                    }
                }
            }
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            match root_of[r] {
                Some(c) => comps[c].push(i),
                None => {
                    root_of[r] = Some(comps.len());
                    comps.push(vec![i]);
                }
            }
        }
        comps
    }
}

/// The `i`-th standard coordinate vector of length `n`.
pub fn unit(n: usize, i: usize) -> GVec {
    let mut v = vec![FieldElem::zero(); n];
    v[i] = FieldElem::one();
    v
}

fn trace_of_product(a: &FieldMatrix, b: &FieldMatrix) -> FieldElem {
    let n = a.rows();
    let mut t = FieldElem::zero();
    for i in 0..n {
        for k in 0..n {
            let (x, y) = (&a[(i, k)], &b[(k, i)]);
            if !x.is_zero() && !y.is_zero() {
                t += x * y;
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so3() -> LieAlgebra {
        let one = FieldElem::one();
        LieAlgebra::new(3, &[(0, 1, 2, one.clone()), (1, 2, 0, one.clone()), (2, 0, 1, one)]).unwrap()
    }

    #[test]
    fn so3_basics() {
        let g = so3();
        g.check_jacobi().unwrap();
        assert_eq!(g.bracket(&unit(3, 1), &unit(3, 0)).unwrap(), vec![FieldElem::zero(), FieldElem::zero(), -FieldElem::one()]);
        assert_eq!(g.killing(&unit(3, 0), &unit(3, 0)).unwrap(), FieldElem::from_int(-2));
        let x = vec![FieldElem::from_int(1), FieldElem::sqrt_of(2), FieldElem::i()];
        let y = vec![FieldElem::from_int(3), FieldElem::zero(), FieldElem::from_ratio(1, 2)];
        assert_eq!(g.killing(&x, &y).unwrap(), g.killing(&y, &x).unwrap());
        assert_eq!(g.bracket_components(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn rejects_bad_constants() {
        let one = FieldElem::one();
        assert!(LieAlgebra::new(3, &[(0, 1, 2, one.clone()), (1, 0, 2, one.clone())]).is_err());
        // [e1,e2] = e3, [e1,e3] = e1 violates Jacobi on (e1, e2, e3).
        let bad = LieAlgebra::new(3, &[(0, 1, 2, one.clone()), (0, 2, 0, one)]).unwrap();
        assert!(bad.check_jacobi().is_err());
    }
}
