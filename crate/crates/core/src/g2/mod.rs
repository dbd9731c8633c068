//! G2 linear algebra on ℝ⁷: the fundamental 3-form σ, the cross product P,
//! the action of 2-forms on tensors, the Λᵏ_r projectors, Bryant's maps
//! `i`/`j`, and the identity and Schur-constant verification suites.

mod bryant;
mod projectors;
mod suites;
mod sym;

pub use bryant::{bryant_i, bryant_j, in_lambda3_27, s20_basis};
pub use projectors::{projectors, ProjectorSet, Summand};
pub use suites::{identity_suite, laplace_eigen_bookkeeping, schur_suite, Check, EigenBookkeeping, SuiteReport};
pub use sym::SymTensor;

use crate::error::{Error, Result};
use crate::exterior::{FormValuedCovector, KForm, MultiIndex, Vector};
use crate::field::{FieldElem, FieldMatrix};

pub const N: usize = 7;

/// The standard fundamental 3-form
/// `e¹²³ + e¹⁴⁵ + e²⁴⁶ + e³⁴⁷ − e¹⁶⁷ + e²⁵⁷ − e³⁵⁶`.
pub fn standard_sigma() -> KForm {
    let one = FieldElem::one;
    let m = || -FieldElem::one();
    KForm::from_terms(
        N,
        3,
        &[
            (&[1, 2, 3], one()),
            (&[1, 4, 5], one()),
            (&[2, 4, 6], one()),
            (&[3, 4, 7], one()),
            (&[1, 6, 7], m()),
            (&[2, 5, 7], one()),
            (&[3, 5, 6], m()),
        ],
    )
    .expect("valid indices")
}

/// The skew endomorphism `A` of a 2-form `α`, with `⟨A Y, Z⟩ = α(Y, Z)`,
/// i.e. `A_kj = α(e_j, e_k)`.
pub fn skew_endomorphism(alpha: &KForm) -> Result<FieldMatrix> {
    if alpha.degree() != 2 {
        return Err(Error::DimensionMismatch(format!("expected a 2-form, got degree {}", alpha.degree())));
    }
    let n = alpha.n();
    let mut a = FieldMatrix::zeros(n, n);
    for (m, c) in alpha.terms() {
        let p: Vec<usize> = m.positions().collect();
        a[(p[1], p[0])] += c;
        a[(p[0], p[1])] -= c;
    }
    Ok(a)
}

/// Objects on which endomorphisms of ℝⁿ act as derivations.
///
/// For skew `D` every implementation agrees with the natural
/// `so(n)`-action; forms and tensors use the contragredient.
pub trait Actable: Sized {
    fn act(&self, d: &FieldMatrix) -> Self;
}

impl Actable for KForm {
    fn act(&self, d: &FieldMatrix) -> Self {
        self.derive(d)
    }
}

impl Actable for Vector {
    fn act(&self, d: &FieldMatrix) -> Self {
        Vector::apply(d, self).expect("matching dimensions")
    }
}

impl Actable for SymTensor {
    fn act(&self, d: &FieldMatrix) -> Self {
        self.derive(d)
    }
}

/// Acts on both slots of `Σ_i e^i ⊗ F_i`.
impl Actable for FormValuedCovector {
    fn act(&self, d: &FieldMatrix) -> Self {
        let comps = self.components();
        let n = comps.len();
        let out = (0..n)
            .map(|k| {
                let mut f = comps[k].derive(d);
                for (i, fi) in comps.iter().enumerate() {
                    let dik = &d[(i, k)];
                    if !dik.is_zero() {
                        f.axpy(&-dik, fi);
                    }
                }
                f
            })
            .collect();
        FormValuedCovector::new(out).expect("components keep their type")
    }
}

/// `α_*` applied to `target`.
pub fn two_form_action<T: Actable>(alpha: &KForm, target: &T) -> Result<T> {
    Ok(target.act(&skew_endomorphism(alpha)?))
}

/// The generators `e^{ij}`, `i < j`, of `so(n)` as skew matrices.
pub fn so_generators(n: usize) -> Vec<FieldMatrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let alpha = KForm::monomial(n, MultiIndex::from_bits((1 << i) | (1 << j)), FieldElem::one());
            out.push(skew_endomorphism(&alpha).expect("2-form"));
        }
    }
    out
}

/// `Σ_{i<j} (e_i∧e_j)_*²`, the `so(n)` Casimir on `target`.
pub fn so_casimir<T>(n: usize, target: &T) -> T
where
    T: Actable + SumActable,
{
    let gens = so_generators(n);
    T::sum(gens.iter().map(|g| target.act(g).act(g)).collect(), target)
}

/// Helper so that generic Casimir sums can be added up.
pub trait SumActable: Sized {
    fn sum(items: Vec<Self>, like: &Self) -> Self;
    fn scaled(&self, s: &FieldElem) -> Self;
}

impl SumActable for KForm {
    fn sum(items: Vec<Self>, like: &Self) -> Self {
        items.iter().fold(KForm::zero(like.n(), like.degree()), |acc, x| &acc + x)
    }
    fn scaled(&self, s: &FieldElem) -> Self {
        self.scale(s)
    }
}

impl SumActable for Vector {
    fn sum(items: Vec<Self>, like: &Self) -> Self {
        items.iter().fold(Vector::zero(like.n()), |acc, x| &acc + x)
    }
    fn scaled(&self, s: &FieldElem) -> Self {
        self.scale(s)
    }
}

impl SumActable for SymTensor {
    fn sum(items: Vec<Self>, like: &Self) -> Self {
        items.iter().fold(SymTensor::zero(like.n()), |acc, x| acc.add(x))
    }
    fn scaled(&self, s: &FieldElem) -> Self {
        self.scale(s)
    }
}

impl SumActable for FormValuedCovector {
    fn sum(items: Vec<Self>, like: &Self) -> Self {
        let n = like.n();
        let s = like.degree();
        let mut comps = vec![KForm::zero(n, s); n];
        for it in &items {
            for (c, f) in comps.iter_mut().zip(it.components()) {
                *c = &*c + f;
            }
        }
        FormValuedCovector::new(comps).expect("consistent components")
    }
    fn scaled(&self, s: &FieldElem) -> Self {
        FormValuedCovector::new(self.components().iter().map(|c| c.scale(s)).collect()).expect("same type")
    }
}

/// A G2-structure on ℝ⁷ relative to the standard orthonormal frame.
#[derive(Clone, Debug)]
pub struct G2Frame {
    pub sigma: KForm,
    pub star_sigma: KForm,
    pub orientation: i32,
    /// `cross_table[i][j] = P(e_i, e_j)`.
    pub cross_table: Vec<Vec<Vector>>,
    /// Skew matrix of `P_{e_i}`, the action of `e_i ⌟ σ`.
    p_mats: Vec<FieldMatrix>,
}

impl G2Frame {
    /// Wraps a stable 3-form; fails unless it induces the frame metric with
    /// the given orientation.
    pub fn from_sigma(sigma: KForm, orientation: i32) -> Result<Self> {
        if sigma.n() != N || sigma.degree() != 3 {
            return Err(Error::DimensionMismatch("σ must be a 3-form on ℝ⁷".into()));
        }
        if !induces_metric(&sigma, orientation) {
            return Err(Error::NotStable(
                "σ does not induce the frame metric with this orientation".into(),
            ));
        }
        let star_sigma = sigma.hodge(orientation);
        let cross_table = (0..N)
            .map(|i| {
                (0..N)
                    .map(|j| {
                        let one_form = sigma.contract_basis(i).contract_basis(j);
                        Vector::from_form(&one_form).expect("1-form")
                    })
                    .collect()
            })
            .collect();
        let p_mats =
            (0..N).map(|i| skew_endomorphism(&sigma.contract_basis(i)).expect("2-form")).collect();
        Ok(G2Frame { sigma, star_sigma, orientation, cross_table, p_mats })
    }

    /// The cross product `P(X, Y)` with `σ(X, Y, Z) = ⟨P(X, Y), Z⟩`.
    pub fn cross(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(N);
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let s = xi * yj;
                for (o, c) in out.0.iter_mut().zip(&self.cross_table[i][j].0) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    /// `P` on 2-forms: `P(X ∧ Y) = P(X, Y)`.
    pub fn cross_of_two_form(&self, alpha: &KForm) -> Vector {
        let mut out = Vector::zero(N);
        for (m, c) in alpha.terms() {
            let p: Vec<usize> = m.positions().collect();
            out = &out + &self.cross_table[p[0]][p[1]].scale(c);
        }
        out
    }

    /// The skew matrix of `P_X = (X ⌟ σ)_*`.
    pub fn p_matrix(&self, x: &Vector) -> FieldMatrix {
        let mut m = FieldMatrix::zeros(N, N);
        for (i, xi) in x.0.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.p_mats[i].scale(xi)).expect("same shape");
            }
        }
        m
    }

    pub fn p_matrix_basis(&self, i: usize) -> &FieldMatrix {
        &self.p_mats[i]
    }

    /// `P_X` applied to `target`.
    pub fn p_action<T: Actable>(&self, x: &Vector, target: &T) -> T {
        target.act(&self.p_matrix(x))
    }

    /// `Σ_i P_{e_i} P_{e_i}` on `target`.
    pub fn p_square_sum<T: Actable + SumActable>(&self, target: &T) -> T {
        T::sum(self.p_mats.iter().map(|p| target.act(p).act(p)).collect(), target)
    }

    /// The G2 Casimir `Cas^{so(7)} − (1/3) Σ_i P_{e_i}²`.
    pub fn g2_casimir<T: Actable + SumActable>(&self, target: &T) -> T {
        let so = so_casimir(N, target);
        let pp = self.p_square_sum(target);
        T::sum(vec![so, pp.scaled(&FieldElem::from_ratio(-1, 3))], target)
    }

    /// `Σ_i e^i ∧ P_{e_i}(γ)`.
    pub fn wedge_p_sum(&self, gamma: &KForm) -> KForm {
        let mut out = KForm::zero(N, gamma.degree() + 1);
        for i in 0..N {
            let ei = Vector::basis(N, i).to_form();
            out = &out + &ei.wedge(&gamma.act(&self.p_mats[i])).expect("same n");
        }
        out
    }
}

/// The standard G2-structure with orientation +1.
pub fn standard_g2() -> G2Frame {
    G2Frame::from_sigma(standard_sigma(), 1).expect("standard σ is stable")
}

/// `P(X, Y)` in the given frame.
pub fn cross(x: &Vector, y: &Vector, frame: &G2Frame) -> Vector {
    frame.cross(x, y)
}

/// `P_X` applied to `target`: the action of `X ⌟ σ`.
pub fn p_action<T: Actable>(frame: &G2Frame, x: &Vector, target: &T) -> T {
    frame.p_action(x, target)
}

/// True iff `e_i⌟σ ∧ e_j⌟σ ∧ σ = −6 δ_ij · orientation · e^{1…7}`.
pub fn induces_metric(sigma: &KForm, orientation: i32) -> bool {
    if sigma.n() != N || sigma.degree() != 3 {
        return false;
    }
    let contracted: Vec<KForm> = (0..N).map(|i| sigma.contract_basis(i)).collect();
    let target = FieldElem::from_int(-6 * i64::from(orientation.signum()));
    for i in 0..N {
        let left = contracted[i].wedge(sigma).expect("same n");
        for j in i..N {
            let top = contracted[j].wedge(&left).expect("same n").top_coeff();
            let expect = if i == j { target.clone() } else { FieldElem::zero() };
            if top != expect {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(idx: &[usize]) -> KForm {
        KForm::term(7, idx, FieldElem::one()).unwrap()
    }

    #[test]
    fn standard_frame_values() {
        let f = standard_g2();
        assert_eq!(f.sigma.coeff_of(&[1, 2, 3]), FieldElem::one());
        assert_eq!(f.sigma.coeff_of(&[1, 6, 7]), -FieldElem::one());
        assert_eq!(f.star_sigma.coeff_of(&[2, 3, 4, 5]), -FieldElem::one());
        let expected_star = KForm::parse(
            "1*e4567 + 1*e2367 + 1*e1357 + -1*e2345 + 1*e1256 + -1*e1247 + 1*e1346",
            7,
            4,
        )
        .unwrap();
        assert_eq!(f.star_sigma, expected_star);
    }

    #[test]
    fn cross_examples() {
        let f = standard_g2();
        let b = |i| Vector::basis(7, i);
        assert_eq!(f.cross(&b(0), &b(1)), b(2));
        assert_eq!(f.cross(&b(0), &b(5)), -&b(6));
        assert!(f.cross(&b(3), &b(3)).is_zero());
    }

    #[test]
    fn contraction_of_sigma() {
        let s = standard_sigma();
        let expected = &(&-e(&[1, 3]) + &e(&[4, 6])) + &e(&[5, 7]);
        assert_eq!(s.contract(&Vector::basis(7, 1)).unwrap(), expected);
    }

    #[test]
    fn two_form_acts_on_vectors() {
        let v = two_form_action(&e(&[1, 2]), &Vector::basis(7, 0)).unwrap();
        assert_eq!(v, Vector::basis(7, 1));
    }

    #[test]
    fn so7_casimir_on_forms() {
        for p in 1..=3 {
            let basis = crate::exterior::FormBasis::new(7, p);
            let expect = FieldElem::from_int(-((p * (7 - p)) as i64));
            for m in basis.iter() {
                let w = KForm::monomial(7, m, FieldElem::one());
                assert_eq!(so_casimir(7, &w), w.scale(&expect));
            }
        }
    }

    #[test]
    fn metric_induction() {
        let s = standard_sigma();
        assert!(induces_metric(&s, 1));
        assert!(!induces_metric(&s, -1));
        assert!(!induces_metric(&s.scale(&FieldElem::from_int(2)), 1));
    }

    #[test]
    fn p_sigma_is_three_contraction_of_star() {
        let f = standard_g2();
        let x = Vector::basis(7, 0);
        let lhs = f.p_action(&x, &f.sigma);
        assert_eq!(lhs, f.star_sigma.contract(&x).unwrap().scale(&FieldElem::from_int(3)));
    }
}
