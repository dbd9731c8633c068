use num_traits::{Signed, Zero};

use super::{GVec, LieAlgebra};
use crate::error::{Error, Result};
use crate::exterior::{KForm, MultiIndex};
use crate::field::{rat, FieldElem, FieldMatrix, Rational};
use crate::g2::{induces_metric, N};
use crate::rep::GroupFactor;

/// A naturally reductive space `G/H`: `g = h ⊕ m`, metric `−c² B` on `m`,
/// and an orthonormal frame `e_1, …, e_7` of `m`.
#[derive(Clone, Debug)]
pub struct ReductiveSpace {
    pub name: String,
    pub g: LieAlgebra,
    pub h_basis: Vec<GVec>,
    pub m_frame: Vec<GVec>,
    pub c2: Rational,
    pub orientation: i32,
    /// Simple factors of `G`, in the order of its simple ideals.
    pub factors: Vec<GroupFactor>,
    /// Inverse of the matrix with columns `h_basis ++ m_frame`.
    split_inverse: FieldMatrix,
    /// `ad_X|_m` in the frame, for each `X` in `h_basis`.
    isotropy: Vec<FieldMatrix>,
}

/// Torsion-derived data of a nearly parallel G2-structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearlyParallelData {
    pub tau0: FieldElem,
    pub sigma_o: KForm,
    pub scal: FieldElem,
}

fn violation(what: impl Into<String>) -> Error {
    Error::InvariantViolation(what.into())
}

impl ReductiveSpace {
    /// Builds a space and verifies every structural invariant.
    pub fn new(
        name: impl Into<String>,
        g: LieAlgebra,
        h_basis: Vec<GVec>,
        m_frame: Vec<GVec>,
        c2: Rational,
        orientation: i32,
        factors: Vec<GroupFactor>,
    ) -> Result<Self> {
        let name = name.into();
        let dim = g.dim();
        if m_frame.len() != N {
            return Err(violation(format!("m frame must have {N} vectors, got {}", m_frame.len())));
        }
        if h_basis.len() + N != dim {
            return Err(violation(format!("dim h + dim m = {} differs from dim g = {dim}", h_basis.len() + N)));
        }
        if h_basis.iter().chain(&m_frame).any(|v| v.len() != dim) {
            return Err(violation(format!("basis vectors must have {dim} coordinates")));
        }
        if !c2.is_positive() {
            return Err(violation("c2 must be positive"));
        }
        if orientation != 1 && orientation != -1 {
            return Err(violation("orientation must be 1 or -1"));
        }
        g.check_jacobi()?;
        let cols: Vec<GVec> = h_basis.iter().chain(&m_frame).cloned().collect();
        let split_inverse = FieldMatrix::from_columns(&cols, dim)?
            .inverse()
            .map_err(|_| violation("h ⊕ m does not span g"))?;
        let mut space = ReductiveSpace {
            name,
            g,
            h_basis,
            m_frame,
            c2,
            orientation,
            factors,
            split_inverse,
            isotropy: Vec::new(),
        };
        space.verify_split()?;
        space.isotropy = (0..space.h_basis.len())
            .map(|i| space.isotropy_matrix_of(&space.h_basis[i].clone()))
            .collect::<Result<_>>()?;
        space.ideals()?;
        Ok(space)
    }

    fn verify_split(&self) -> Result<()> {
        for (i, x) in self.h_basis.iter().enumerate() {
            for y in &self.h_basis[i + 1..] {
                if !self.m_coords(&self.g.bracket(x, y)?).iter().all(FieldElem::is_zero) {
                    return Err(violation("[h, h] ⊆ h fails (h is not a subalgebra)"));
                }
            }
            for y in &self.m_frame {
                if !self.h_coords(&self.g.bracket(x, y)?).iter().all(FieldElem::is_zero) {
                    return Err(violation("[h, m] ⊆ m fails (split is not reductive)"));
                }
                if !self.g.killing(x, y)?.is_zero() {
                    return Err(violation("h is not Killing-orthogonal to m"));
                }
            }
        }
        for a in 0..N {
            for b in a..N {
                let expect = if a == b { FieldElem::one() } else { FieldElem::zero() };
                if self.metric(&self.m_frame[a], &self.m_frame[b])? != expect {
                    return Err(violation(format!(
                        "m frame is not orthonormal for -c²B (entry e{}, e{})",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// The metric `−c² B`.
    pub fn metric(&self, x: &[FieldElem], y: &[FieldElem]) -> Result<FieldElem> {
        Ok(self.g.killing(x, y)? * FieldElem::from_rational(-self.c2.clone()))
    }

    fn split_coords(&self, x: &[FieldElem]) -> Vec<FieldElem> {
        self.split_inverse.mul_vec(x).expect("length dim g")
    }

    /// Frame coordinates of the `m`-component of `x` (projection along `h`).
    pub fn m_coords(&self, x: &[FieldElem]) -> Vec<FieldElem> {
        self.split_coords(x).split_off(self.h_basis.len())
    }

    /// Coordinates of the `h`-component of `x` in `h_basis`.
    pub fn h_coords(&self, x: &[FieldElem]) -> Vec<FieldElem> {
        let mut c = self.split_coords(x);
        c.truncate(self.h_basis.len());
        c
    }

    /// The element `Σ v_a e_a` of `m`.
    pub fn frame_vector(&self, v: &[FieldElem]) -> GVec {
        let mut out = vec![FieldElem::zero(); self.dim()];
        for (va, e) in v.iter().zip(&self.m_frame) {
            if va.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(e) {
                if !x.is_zero() {
                    *o += va * x;
                }
            }
        }
        out
    }

    /// The torsion 3-form `T̂(X, Y, Z) = −⟨[X, Y]_m, Z⟩` in frame coordinates.
    pub fn torsion_form(&self) -> Result<KForm> {
        let mut t = vec![vec![vec![FieldElem::zero(); N]; N]; N];
        for a in 0..N {
            for b in 0..N {
                let br = self.g.bracket(&self.m_frame[a], &self.m_frame[b])?;
                for (c, v) in self.m_coords(&br).into_iter().enumerate() {
                    t[a][b][c] = -v;
                }
            }
        }
        let mut form = KForm::zero(N, 3);
        for a in 0..N {
            for b in 0..N {
                for c in 0..N {
                    let v = &t[a][b][c];
                    let skew_ok = v == &-&t[b][a][c] && v == &-&t[a][c][b];
                    if !skew_ok {
                        return Err(Error::NotSkew(format!(
                            "torsion is not totally antisymmetric at (e{}, e{}, e{})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                    if a < b && b < c {
                        let m = MultiIndex::from_positions([a, b, c]).expect("distinct");
                        form.add_term(m, v.clone());
                    }
                }
            }
        }
        Ok(form)
    }

    /// `τ₀ = −√(6/(5c²))`, `σₒ = −(6/τ₀) T̂`, `scal = 63/(20c²)`, with all
    /// consistency checks.
    pub fn nearly_parallel_data(&self) -> Result<NearlyParallelData> {
        let torsion = self.torsion_form()?;
        if torsion.is_zero() {
            return Err(Error::NotNearlyParallel("torsion form vanishes".into()));
        }
        let tau_sq = rat(6, 5) / &self.c2;
        let tau0 = -FieldElem::sqrt_rational(&tau_sq)
            .ok_or_else(|| Error::NotNearlyParallel(format!("√({tau_sq}) is not in the field")))?;
        let factor = FieldElem::from_int(-6).checked_div(&tau0)?;
        let sigma_o = torsion.scale(&factor);
        if sigma_o.norm_squared() != FieldElem::from_int(7) {
            return Err(Error::NotNearlyParallel(format!("|σₒ|² = {} instead of 7", sigma_o.norm_squared())));
        }
        if !induces_metric(&sigma_o, self.orientation) {
            return Err(Error::NotNearlyParallel(
                "σₒ does not induce the frame metric and orientation".into(),
            ));
        }
        let inv_c2 = FieldElem::from_rational(self.c2.recip());
        let scal = FieldElem::from_ratio(63, 20) * &inv_c2;
        let trace_formula = torsion.norm_squared() * FieldElem::from_ratio(-3, 2) + FieldElem::from_ratio(7, 2) * &inv_c2;
        if trace_formula != scal {
            return Err(Error::NotNearlyParallel(format!(
                "scalar curvature cross-check failed: {trace_formula} vs {scal}"
            )));
        }
        Ok(NearlyParallelData { tau0, sigma_o, scal })
    }

    fn isotropy_matrix_of(&self, x: &[FieldElem]) -> Result<FieldMatrix> {
        let cols: Vec<Vec<FieldElem>> = self
            .m_frame
            .iter()
            .map(|e| self.g.bracket(x, e).map(|b| self.m_coords(&b)))
            .collect::<Result<_>>()?;
        let d = FieldMatrix::from_columns(&cols, N)?;
        if d.transpose() != d.scale(&-FieldElem::one()) {
            return Err(Error::NotSkew("isotropy action is not skew in the m frame".into()));
        }
        Ok(d)
    }

    /// `ad_X|_m` in the frame for the `i`-th `h` basis vector.
    pub fn isotropy_matrix(&self, i: usize) -> &FieldMatrix {
        &self.isotropy[i]
    }

    pub fn isotropy_matrices(&self) -> &[FieldMatrix] {
        &self.isotropy
    }

    /// The isotropy action of `X ∈ h` on a form on `m`.
    pub fn isotropy_action(&self, x: &[FieldElem], w: &KForm) -> Result<KForm> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("vector must have {} coordinates", self.dim())));
        }
        if !self.m_coords(x).iter().all(FieldElem::is_zero) {
            return Err(violation("isotropy action needs an element of h"));
        }
        if w.n() != N {
            return Err(Error::DimensionMismatch("form must live on m (n = 7)".into()));
        }
        Ok(w.derive(&self.isotropy_matrix_of(x)?))
    }

    /// Simple ideals of `g` (nonabelian connected components of the bracket
    /// graph), paired with the declared group factors when present.
    pub fn ideals(&self) -> Result<Vec<(Vec<usize>, Option<GroupFactor>)>> {
        let comps: Vec<Vec<usize>> =
            self.g.bracket_components().into_iter().filter(|c| !is_abelian(&self.g, c)).collect();
        if self.factors.is_empty() {
            return Ok(comps.into_iter().map(|c| (c, None)).collect());
        }
        if comps.len() != self.factors.len() {
            return Err(violation(format!(
                "{} simple ideals found but {} group factors declared",
                comps.len(),
                self.factors.len()
            )));
        }
        comps
            .into_iter()
            .zip(&self.factors)
            .map(|(c, f)| {
                if c.len() != f.dim() {
                    Err(violation(format!("ideal of dimension {} does not match factor {f}", c.len())))
                } else {
                    Ok((c, Some(*f)))
                }
            })
            .collect()
    }

    /// The same space with metric `λ²c²` and frame `e_a/λ` (`λ²` rational).
    pub fn rescaled(&self, lambda: &FieldElem) -> Result<Self> {
        let l2 = (lambda * lambda)
            .to_rational()
            .filter(|r| !r.is_zero())
            .ok_or_else(|| violation("λ² must be a nonzero rational"))?;
        let inv = lambda.inv()?;
        let frame = self.m_frame.iter().map(|e| e.iter().map(|x| x * &inv).collect()).collect();
        ReductiveSpace::new(
            self.name.clone(),
            self.g.clone(),
            self.h_basis.clone(),
            frame,
            &self.c2 * l2,
            self.orientation,
            self.factors.clone(),
        )
    }
}

fn is_abelian(g: &LieAlgebra, comp: &[usize]) -> bool {
    comp.iter().all(|&i| comp.iter().all(|&j| g.bracket_basis(i, j).iter().all(FieldElem::is_zero)))
}
