//! The main equation `−Σᵢ eⁱ ∧ A(eᵢ·α) + c ∗A(α) = 0` with `c = (5/6)τ₀`,
//! its kernel over `Hom_H(U, Λ³₂₇m*)`, the deformation report and the
//! explicit intertwiners of the 3-Sasakian examples.

mod fixtures;
mod report;

pub use fixtures::{express_in_basis, fixture_intertwiners, Fixture, FixtureSet};
pub use report::{solve_deformations, CandidateReport, DeformationReport, ModuleType, Status, MAIN_EQUATION};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exterior::{FormBasis, KForm, MultiIndex};
use crate::field::{FieldElem, FieldMatrix};
use crate::g2::N;
use crate::homogeneous::{NearlyParallelData, ReductiveSpace};
use crate::par::Exec;
use crate::rep::{intertwiner_space, AdjointModule, Intertwiner};

/// The constant `c = (5/6)τ₀`.
pub fn main_constant(tau0: &FieldElem) -> FieldElem {
    tau0 * &FieldElem::from_ratio(5, 6)
}

/// Equation data for one module `U`: the constant and the matrices of
/// `α ↦ eᵢ·α = [eᵢ, α]` on `U`.
pub struct MainSystem<'a> {
    pub space: &'a ReductiveSpace,
    pub module: &'a AdjointModule,
    pub c: FieldElem,
    frame_action: Vec<FieldMatrix>,
}

impl<'a> MainSystem<'a> {
    pub fn new(space: &'a ReductiveSpace, module: &'a AdjointModule, c: FieldElem) -> Result<Self> {
        let frame_action = space
            .m_frame
            .iter()
            .map(|e| module.action_matrix(space, e))
            .collect::<Result<_>>()?;
        Ok(MainSystem { space, module, c, frame_action })
    }

    /// `eᵢ·α` in `U` coordinates.
    fn frame_times(&self, i: usize, alpha: &[FieldElem]) -> Vec<FieldElem> {
        self.frame_action[i].mul_vec(alpha).expect("module dimension")
    }

    /// `−Σᵢ eⁱ ∧ A(eᵢ·α) + c ∗A(α)`.
    pub fn lhs_wedge(&self, a: &Intertwiner, alpha: &[FieldElem]) -> Result<KForm> {
        let mut out = a.apply(alpha)?.hodge(self.space.orientation).scale(&self.c);
        for i in 0..N {
            let beta = a.apply(&self.frame_times(i, alpha))?;
            if beta.is_zero() {
                continue;
            }
            let ei = KForm::monomial(N, MultiIndex::from_positions([i]).expect("index"), FieldElem::one());
            out = out.checked_sub(&ei.wedge(&beta)?)?;
        }
        Ok(out)
    }

    /// The same left side, coefficient by coefficient:
    /// `Σ_{i₁<…<i₄} Σⱼ (−1)ʲ A(e_{iⱼ}·α)(e_{i₁}, …, ê_{iⱼ}, …, e_{i₄}) + c ∗A(α)`.
    pub fn lhs_indexed(&self, a: &Intertwiner, alpha: &[FieldElem]) -> Result<KForm> {
        let images: Vec<KForm> = (0..N).map(|i| a.apply(&self.frame_times(i, alpha))).collect::<Result<_>>()?;
        let star = a.apply(alpha)?.hodge(self.space.orientation);
        let mut out = KForm::zero(N, 4);
        for m in FormBasis::new(N, 4).iter() {
            let mut v = &self.c * &star.coeff(m);
            for (j, i) in m.positions().enumerate() {
                let rest = MultiIndex::from_bits(m.bits() & !(1 << i));
                let term = images[i].coeff(rest);
                // j is 0-based here, so (−1)^(j+1).
                if j % 2 == 0 {
                    v -= &term;
                } else {
                    v += &term;
                }
            }
            out.add_term(m, v);
        }
        Ok(out)
    }

    /// The left side, with the indexed and wedge forms cross-checked.
    pub fn lhs(&self, a: &Intertwiner, alpha: &[FieldElem]) -> Result<KForm> {
        let w = self.lhs_wedge(a, alpha)?;
        if self.lhs_indexed(a, alpha)? != w {
            return Err(Error::InvariantViolation("indexed and wedge forms of the main equation differ".into()));
        }
        Ok(w)
    }

    /// Column `a` stacks the `Λ⁴` coordinates of the left side for `A_a`
    /// over all basis vectors `α` of `U`.
    pub fn matrix(&self, maps: &[Intertwiner], exec: Exec) -> Result<FieldMatrix> {
        let b4 = FormBasis::new(N, 4);
        let d = self.module.dim();
        let cols: Vec<Vec<FieldElem>> = exec
            .map(maps, |a| -> Result<Vec<FieldElem>> {
                let mut col = Vec::with_capacity(d * b4.len());
                for k in 0..d {
                    let alpha = unit_coords(d, k);
                    col.extend(b4.coords(&self.lhs(a, &alpha)?));
                }
                Ok(col)
            })
            .into_iter()
            .collect::<Result<_>>()?;
        FieldMatrix::from_columns(&cols, d * b4.len())
    }

    /// Coefficient vectors `(c_a)` with `Σ c_a A_a` solving the equation,
    /// each re-verified on every basis vector of `U`.
    pub fn kernel(&self, maps: &[Intertwiner], exec: Exec) -> Result<Vec<Vec<FieldElem>>> {
        if maps.is_empty() {
            return Ok(Vec::new());
        }
        let kernel = self.matrix(maps, exec)?.nullspace_with(exec);
        for v in &kernel {
            let a = Intertwiner::combine(v, maps)?;
            for k in 0..self.module.dim() {
                if !self.lhs(&a, &unit_coords(self.module.dim(), k))?.is_zero() {
                    return Err(Error::InvariantViolation("kernel element fails the main equation".into()));
                }
            }
        }
        Ok(kernel)
    }
}

fn unit_coords(d: usize, k: usize) -> Vec<FieldElem> {
    let mut v = vec![FieldElem::zero(); d];
    v[k] = FieldElem::one();
    v
}

/// The left side of the main equation for one map and one `α ∈ U`.
pub fn main_lhs(
    space: &ReductiveSpace,
    module: &AdjointModule,
    a: &Intertwiner,
    alpha: &[FieldElem],
    c: &FieldElem,
) -> Result<KForm> {
    MainSystem::new(space, module, c.clone())?.lhs(a, alpha)
}

/// Result of solving one candidate module.
#[derive(Clone, Debug)]
pub struct CandidateSolution {
    pub hom_basis: Vec<Intertwiner>,
    pub kernel: Vec<Vec<FieldElem>>,
}

impl CandidateSolution {
    pub fn hom_dim(&self) -> usize {
        self.hom_basis.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }
}

pub fn solve_candidate(
    module: &AdjointModule,
    space: &ReductiveSpace,
    data: &NearlyParallelData,
    exec: Exec,
) -> Result<CandidateSolution> {
    let hom_basis = intertwiner_space(module, space, data, exec)?;
    if hom_basis.is_empty() {
        return Ok(CandidateSolution { hom_basis, kernel: Vec::new() });
    }
    let system = MainSystem::new(space, module, main_constant(&data.tau0))?;
    let kernel = system.kernel(&hom_basis, exec)?;
    Ok(CandidateSolution { hom_basis, kernel })
}

/// Kernel dimension after replacing the basis by a random invertible
/// recombination (seeded, so reproducible).
pub fn remixed_kernel_dim(system: &MainSystem<'_>, maps: &[Intertwiner], seed: u64, exec: Exec) -> Result<usize> {
    let r = maps.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mix = loop {
        let entries: Vec<FieldElem> = (0..r * r).map(|_| FieldElem::random_small(&mut rng)).collect();
        let m = FieldMatrix::from_fn(r, r, |i, j| entries[i * r + j].clone());
        if m.rank() == r {
            break m;
        }
    };
    let remixed: Vec<Intertwiner> = (0..r)
        .map(|j| Intertwiner::combine(&mix.column(j), maps))
        .collect::<Result<_>>()?;
    Ok(system.kernel(&remixed, exec)?.len())
}
