use std::collections::BTreeMap;

use super::GroupFactor;
use crate::error::{Error, Result};
use crate::exterior::{FormBasis, KForm};
use crate::field::{FieldElem, FieldMatrix, SparseEchelon, SparseRow};
use crate::g2::{in_lambda3_27, G2Frame, N};
use crate::homogeneous::{unit, GVec, NearlyParallelData, ReductiveSpace};
use crate::par::Exec;

/// A simple ideal of `g` as a `G`-module under the bracket.
#[derive(Clone, Debug)]
pub struct AdjointModule {
    /// Position of the ideal among the simple ideals of `g`.
    pub summand: usize,
    /// Basis of the ideal: these coordinate directions of `g`.
    pub indices: Vec<usize>,
    pub factor: Option<GroupFactor>,
    /// Action `α ↦ [X, α]` of each `h` basis vector, in ideal coordinates.
    pub rho: Vec<FieldMatrix>,
    /// The complexified module is irreducible (commutant is one-dimensional).
    pub real_type: bool,
    /// Casimir `−Σ (B⁻¹)_ij ad_i ad_j` of the ideal, which acts as this scalar.
    pub casimir: FieldElem,
}

impl AdjointModule {
    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    /// The `i`-th basis vector of the ideal as an element of `g`.
    pub fn basis_vector(&self, g_dim: usize, i: usize) -> GVec {
        unit(g_dim, self.indices[i])
    }

    /// `α ↦ [x, α]` on the ideal, for any `x ∈ g`.
    pub fn action_matrix(&self, space: &ReductiveSpace, x: &[FieldElem]) -> Result<FieldMatrix> {
        restricted_ad(space, &self.indices, x, self.summand)
    }

    /// Ideal coordinates of an element of `g` lying in the ideal.
    pub fn coords(&self, x: &[FieldElem]) -> Result<Vec<FieldElem>> {
        let inside = x.iter().enumerate().all(|(k, v)| v.is_zero() || self.indices.contains(&k));
        if !inside {
            return Err(Error::NotAnIdeal(format!("vector leaves summand {}", self.summand)));
        }
        Ok(self.indices.iter().map(|&k| x[k].clone()).collect())
    }
}

/// Restricts `ad_x` to the ideal, failing if the ideal is not preserved.
fn restricted_ad(space: &ReductiveSpace, indices: &[usize], x: &[FieldElem], summand: usize) -> Result<FieldMatrix> {
    let mut m = FieldMatrix::zeros(indices.len(), indices.len());
    for (col, &b) in indices.iter().enumerate() {
        let br = space.g.bracket(x, &unit(space.dim(), b))?;
        for (k, v) in br.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let Some(row) = indices.iter().position(|&i| i == k) else {
                return Err(Error::NotAnIdeal(format!("summand {summand} is not closed under the bracket")));
            };
            m[(row, col)] = v.clone();
        }
    }
    Ok(m)
}

/// The adjoint module of the `summand`-th simple ideal of `g`.
pub fn adjoint_module(space: &ReductiveSpace, summand: usize) -> Result<AdjointModule> {
    let ideals = space.ideals()?;
    let (indices, factor) = ideals.get(summand).cloned().ok_or_else(|| {
        Error::NotAnIdeal(format!("summand {summand} out of range ({} simple ideals)", ideals.len()))
    })?;
    let dim = space.dim();
    for j in 0..dim {
        restricted_ad(space, &indices, &unit(dim, j), summand)?;
    }
    let rho: Vec<FieldMatrix> = space
        .h_basis
        .iter()
        .map(|x| restricted_ad(space, &indices, x, summand))
        .collect::<Result<_>>()?;
    // −B restricted to the ideal is invariant: ρᵀK + Kρ = 0.
    let k = FieldMatrix::from_fn(indices.len(), indices.len(), |r, c| {
        space.g.killing_matrix()[(indices[r], indices[c])].clone()
    });
    for r in &rho {
        let s = r.transpose().mul(&k)?.add(&k.mul(r)?)?;
        if !s.is_zero() {
            return Err(Error::NotSkew(format!("action on summand {summand} is not skew for the Killing form")));
        }
    }
    let generators: Vec<FieldMatrix> = indices
        .iter()
        .map(|&i| restricted_ad(space, &indices, &unit(dim, i), summand))
        .collect::<Result<_>>()?;
    let real_type = commutant_dim(&generators) == 1;
    let casimir = scalar_casimir(&k, &generators, summand)?;
    Ok(AdjointModule { summand, indices, factor, rho, real_type, casimir })
}

/// `−Σ (B⁻¹)_ij ad_i ad_j`, required to be a multiple of the identity.
fn scalar_casimir(k: &FieldMatrix, gens: &[FieldMatrix], summand: usize) -> Result<FieldElem> {
    let kinv = k.inverse().map_err(|_| Error::NotAnIdeal(format!("Killing form degenerates on summand {summand}")))?;
    let d = k.rows();
    let mut cas = FieldMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            if !kinv[(i, j)].is_zero() {
                cas = cas.sub(&gens[i].mul(&gens[j])?.scale(&kinv[(i, j)]))?;
            }
        }
    }
    let c = cas[(0, 0)].clone();
    if cas != FieldMatrix::identity(d).scale(&c) {
        return Err(Error::NotAnIdeal(format!("summand {summand} is not simple (Casimir is not scalar)")));
    }
    Ok(c)
}

/// Dimension of `{M : M R = R M for all R}` over the field.
fn commutant_dim(gens: &[FieldMatrix]) -> usize {
    let d = gens.first().map_or(0, FieldMatrix::rows);
    let mut ech = SparseEchelon::new(d * d);
    // Unknown M[r][c] at index r*d + c.
    for g in gens {
        for r in 0..d {
            for c in 0..d {
                let mut row: BTreeMap<usize, FieldElem> = BTreeMap::new();
                for k in 0..d {
                    // (M G)[r][c] − (G M)[r][c]
                    if !g[(k, c)].is_zero() {
                        *row.entry(r * d + k).or_insert_with(FieldElem::zero) += &g[(k, c)];
                    }
                    if !g[(r, k)].is_zero() {
                        *row.entry(k * d + c).or_insert_with(FieldElem::zero) -= &g[(r, k)];
                    }
                }
                ech.insert(row.into_iter().filter(|(_, v)| !v.is_zero()).collect());
            }
        }
    }
    d * d - ech.rank()
}

/// A linear map `A: U → Λ³m*`; column `α` holds the coordinates of `A(u_α)`
/// in the lexicographic basis of `Λ³`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    pub matrix: FieldMatrix,
}

impl Intertwiner {
    pub fn from_forms(forms: &[KForm]) -> Result<Self> {
        let basis = FormBasis::new(N, 3);
        if forms.iter().any(|f| f.n() != N || f.degree() != 3) {
            return Err(Error::DimensionMismatch("intertwiner values must be 3-forms on m".into()));
        }
        let cols: Vec<Vec<FieldElem>> = forms.iter().map(|f| basis.coords(f)).collect();
        Ok(Intertwiner { matrix: FieldMatrix::from_columns(&cols, basis.len())? })
    }

    pub fn dim_u(&self) -> usize {
        self.matrix.cols()
    }

    /// `A(u)` for `u` in ideal coordinates.
    pub fn apply(&self, u: &[FieldElem]) -> Result<KForm> {
        Ok(FormBasis::new(N, 3).form(&self.matrix.mul_vec(u)?))
    }

    /// `A(u_α)` for a basis vector.
    pub fn image(&self, alpha: usize) -> KForm {
        FormBasis::new(N, 3).form(&self.matrix.column(alpha))
    }

    /// Linear combination `Σ c_a A_a`.
    pub fn combine(coeffs: &[FieldElem], maps: &[Intertwiner]) -> Result<Intertwiner> {
        let first = maps.first().ok_or_else(|| Error::DimensionMismatch("empty combination".into()))?;
        let mut m = FieldMatrix::zeros(first.matrix.rows(), first.matrix.cols());
        for (c, a) in coeffs.iter().zip(maps) {
            m = m.add(&a.matrix.scale(c))?;
        }
        Ok(Intertwiner { matrix: m })
    }

    pub fn is_equivariant(&self, u: &AdjointModule, space: &ReductiveSpace) -> Result<bool> {
        let basis = FormBasis::new(N, 3);
        for (ru, d) in u.rho.iter().zip(space.isotropy_matrices()) {
            let rv = KForm::derivation_matrix(d, &basis);
            if self.matrix.mul(ru)? != rv.mul(&self.matrix)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn in_lambda3_27(&self, frame: &G2Frame) -> bool {
        (0..self.dim_u()).all(|a| in_lambda3_27(frame, &self.image(a)))
    }
}

/// Exact basis of `Hom_H(U, Λ³₂₇m*)`, one sparse nullspace over the field.
///
/// Unknown `A[t][α]` sits at index `α·35 + t`. Equations: `A ρ_U(X) = ρ_V(X) A`
/// for every `h` basis vector and `A(u_α) ∧ σₒ = 0`, `A(u_α) ∧ ∗σₒ = 0`.
pub fn intertwiner_space(
    u: &AdjointModule,
    space: &ReductiveSpace,
    data: &NearlyParallelData,
    exec: Exec,
) -> Result<Vec<Intertwiner>> {
    let basis = FormBasis::new(N, 3);
    let nb = basis.len();
    let d = u.dim();
    let frame = G2Frame::from_sigma(data.sigma_o.clone(), space.orientation)?;
    let mut rows: Vec<SparseRow> = Vec::new();
    let rvs: Vec<FieldMatrix> = exec.map(space.isotropy_matrices(), |m| KForm::derivation_matrix(m, &basis));
    for (ru, rv) in u.rho.iter().zip(&rvs) {
        for alpha in 0..d {
            for t in 0..nb {
                let mut row: BTreeMap<usize, FieldElem> = BTreeMap::new();
                for beta in 0..d {
                    let v = &ru[(beta, alpha)];
                    if !v.is_zero() {
                        *row.entry(beta * nb + t).or_insert_with(FieldElem::zero) += v;
                    }
                }
                for s in 0..nb {
                    let v = &rv[(t, s)];
                    if !v.is_zero() {
                        *row.entry(alpha * nb + s).or_insert_with(FieldElem::zero) -= v;
                    }
                }
                let row: SparseRow = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    // Λ³₂₇ conditions: coefficients of γ ∧ σₒ (Λ⁶) and γ ∧ ∗σₒ (Λ⁷) vanish.
    for w in [&frame.sigma, &frame.star_sigma] {
        let target = FormBasis::new(N, 3 + w.degree());
        let cols: Vec<Vec<FieldElem>> =
            (0..nb).map(|t| target.coords(&basis.unit(t).wedge(w).expect("degrees fit"))).collect();
        for alpha in 0..d {
            for r in 0..target.len() {
                let row: SparseRow = (0..nb)
                    .filter(|&t| !cols[t][r].is_zero())
                    .map(|t| (alpha * nb + t, cols[t][r].clone()))
                    .collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let mut ech = SparseEchelon::new(d * nb);
    ech.extend(rows, exec);
    let maps: Vec<Intertwiner> = ech
        .nullspace()
        .into_iter()
        .map(|x| Intertwiner { matrix: FieldMatrix::from_fn(nb, d, |t, a| x[a * nb + t].clone()) })
        .collect();
    for a in &maps {
        if !a.is_equivariant(u, space)? || !a.in_lambda3_27(&frame) {
            return Err(Error::InvariantViolation("computed intertwiner fails re-verification".into()));
        }
    }
    Ok(maps)
}
