use crate::error::{Error, Result};
use crate::exterior::{FormBasis, KForm};
use crate::field::{FieldElem, FieldMatrix};
use crate::g2::N;

/// The irreducible G2-summands of `Λᵏ(ℝ⁷)*` for `k = 2, …, 5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Summand {
    L2_7,
    L2_14,
    L3_1,
    L3_7,
    L3_27,
    L4_1,
    L4_7,
    L4_27,
    L5_7,
    L5_14,
}

impl Summand {
    pub const ALL: [Summand; 10] = [
        Summand::L2_7,
        Summand::L2_14,
        Summand::L3_1,
        Summand::L3_7,
        Summand::L3_27,
        Summand::L4_1,
        Summand::L4_7,
        Summand::L4_27,
        Summand::L5_7,
        Summand::L5_14,
    ];

    pub fn degree(self) -> usize {
        use Summand::*;
        match self {
            L2_7 | L2_14 => 2,
            L3_1 | L3_7 | L3_27 => 3,
            L4_1 | L4_7 | L4_27 => 4,
            L5_7 | L5_14 => 5,
        }
    }

    pub fn dim(self) -> usize {
        use Summand::*;
        match self {
            L3_1 | L4_1 => 1,
            L2_7 | L3_7 | L4_7 | L5_7 => 7,
            L2_14 | L5_14 => 14,
            L3_27 | L4_27 => 27,
        }
    }

    /// The summands making up one degree.
    pub fn of_degree(k: usize) -> Vec<Summand> {
        Self::ALL.into_iter().filter(|s| s.degree() == k).collect()
    }
}

/// Orthogonal projectors onto the G2-summands of `Λ²…Λ⁵`, relative to a
/// stable σ. Matrices act on coordinates in the lexicographic basis.
#[derive(Clone, Debug)]
pub struct ProjectorSet {
    bases: [FormBasis; 4],
    mats: Vec<(Summand, FieldMatrix)>,
}

/// `B (BᵀB)⁻¹ Bᵀ` for the column span of `B`.
fn span_projector(columns: &[Vec<FieldElem>], len: usize, expect_rank: usize, what: &str) -> Result<FieldMatrix> {
    let b = FieldMatrix::from_columns(columns, len)?;
    if b.rank() != expect_rank {
        return Err(Error::NotStable(format!("{what} is not {expect_rank}-dimensional")));
    }
    let bt = b.transpose();
    let gram = bt.mul(&b)?;
    let inv = gram
        .inverse()
        .map_err(|_| Error::NotStable(format!("degenerate Gram matrix for {what}")))?;
    b.mul(&inv)?.mul(&bt)
}

fn hodge_matrix(from: &FormBasis, to: &FormBasis, orientation: i32) -> FieldMatrix {
    let cols: Vec<Vec<FieldElem>> =
        (0..from.len()).map(|c| to.coords(&from.unit(c).hodge(orientation))).collect();
    FieldMatrix::from_columns(&cols, to.len()).expect("consistent sizes")
}

impl ProjectorSet {
    pub fn new(sigma: &KForm, orientation: i32) -> Result<Self> {
        if sigma.n() != N || sigma.degree() != 3 {
            return Err(Error::DimensionMismatch("σ must be a 3-form on ℝ⁷".into()));
        }
        let bases = [2, 3, 4, 5].map(|k| FormBasis::new(N, k));
        let [b2, b3, b4, b5] = &bases;
        let star = sigma.hodge(orientation);

        let p3_1 = span_projector(&[b3.coords(sigma)], b3.len(), 1, "span of σ")?;
        let l7: Vec<Vec<FieldElem>> = (0..N).map(|i| b3.coords(&star.contract_basis(i))).collect();
        let p3_7 = span_projector(&l7, b3.len(), 7, "span of e_i ⌟ ∗σ")?;
        let mut both = l7.clone();
        both.push(b3.coords(sigma));
        let p3_17 = span_projector(&both, b3.len(), 8, "Λ³₁ ⊕ Λ³₇")?;
        let p3_27 = FieldMatrix::identity(b3.len()).sub(&p3_17)?;

        let l2: Vec<Vec<FieldElem>> = (0..N).map(|i| b2.coords(&sigma.contract_basis(i))).collect();
        let p2_7 = span_projector(&l2, b2.len(), 7, "span of e_i ⌟ σ")?;
        let p2_14 = FieldMatrix::identity(b2.len()).sub(&p2_7)?;

        // Degrees 4 and 5 by conjugation with ∗ (∗∗ = 1 in dimension 7).
        let h34 = hodge_matrix(b3, b4, orientation);
        let h43 = hodge_matrix(b4, b3, orientation);
        let h25 = hodge_matrix(b2, b5, orientation);
        let h52 = hodge_matrix(b5, b2, orientation);
        let conj = |h: &FieldMatrix, p: &FieldMatrix, hinv: &FieldMatrix| h.mul(p)?.mul(hinv);

        let mats = vec![
            (Summand::L2_7, p2_7.clone()),
            (Summand::L2_14, p2_14.clone()),
            (Summand::L3_1, p3_1.clone()),
            (Summand::L3_7, p3_7.clone()),
            (Summand::L3_27, p3_27.clone()),
            (Summand::L4_1, conj(&h34, &p3_1, &h43)?),
            (Summand::L4_7, conj(&h34, &p3_7, &h43)?),
            (Summand::L4_27, conj(&h34, &p3_27, &h43)?),
            (Summand::L5_7, conj(&h25, &p2_7, &h52)?),
            (Summand::L5_14, conj(&h25, &p2_14, &h52)?),
        ];
        let set = ProjectorSet { bases, mats };
        for s in Summand::ALL {
            if set.matrix(s).rank() != s.dim() {
                return Err(Error::NotStable(format!("projector {s:?} has the wrong rank")));
            }
        }
        Ok(set)
    }

    pub fn basis(&self, k: usize) -> &FormBasis {
        &self.bases[k - 2]
    }

    pub fn matrix(&self, s: Summand) -> &FieldMatrix {
        &self.mats.iter().find(|(t, _)| *t == s).expect("all summands present").1
    }

    pub fn project(&self, s: Summand, w: &KForm) -> Result<KForm> {
        let k = s.degree();
        if w.degree() != k || w.n() != N {
            return Err(Error::DimensionMismatch(format!("{s:?} projects {k}-forms on ℝ⁷")));
        }
        let b = self.basis(k);
        Ok(b.form(&self.matrix(s).mul_vec(&b.coords(w))?))
    }

    pub fn rank(&self, s: Summand) -> usize {
        self.matrix(s).rank()
    }
}

/// Convenience wrapper for [`ProjectorSet::new`].
pub fn projectors(sigma: &KForm, orientation: i32) -> Result<ProjectorSet> {
    ProjectorSet::new(sigma, orientation)
}
