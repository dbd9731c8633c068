use crate::error::{Error, Result};
use crate::exterior::{KForm, Vector};
use crate::field::{FieldElem, FieldMatrix};
use crate::g2::{G2Frame, SymTensor, N};

/// Exact membership test for `Λ³₂₇`: `γ ∧ σ = 0` and `γ ∧ ∗σ = 0`.
pub fn in_lambda3_27(frame: &G2Frame, gamma: &KForm) -> bool {
    gamma.degree() == 3
        && gamma.wedge(&frame.sigma).map(|w| w.is_zero()).unwrap_or(false)
        && gamma.wedge(&frame.star_sigma).map(|w| w.is_zero()).unwrap_or(false)
}

/// Bryant's map `i: S²₀ → Λ³₂₇`, `i(h) = 2 Σ_{a,b} h_ab e^a ∧ (e_b ⌟ σ)`.
///
/// With `α ⊙ β = (α⊗β + β⊗α)/2` this is
/// `α ⊙ β ↦ α ∧ (β ⌟ σ) + β ∧ (α ⌟ σ)` on decomposables.
pub fn bryant_i(frame: &G2Frame, h: &SymTensor) -> Result<KForm> {
    if h.n() != N {
        return Err(Error::DimensionMismatch("symmetric tensor must live on ℝ⁷".into()));
    }
    if !h.is_traceless() {
        return Err(Error::NotTraceless);
    }
    let mut out = KForm::zero(N, 3);
    for b in 0..N {
        let mut coef = Vector::zero(N);
        for a in 0..N {
            coef.0[a] = h.get(a, b) * &FieldElem::from_int(2);
        }
        if coef.is_zero() {
            continue;
        }
        let wedge = coef.to_form().wedge(&frame.sigma.contract_basis(b))?;
        out = &out + &wedge;
    }
    Ok(out)
}

/// Bryant's map `j: Λ³₂₇ → S²₀`,
/// `j(γ)(X, Y) = ∗((X ⌟ σ) ∧ (Y ⌟ σ) ∧ γ)`.
pub fn bryant_j(frame: &G2Frame, gamma: &KForm) -> Result<SymTensor> {
    if gamma.n() != N || gamma.degree() != 3 {
        return Err(Error::DimensionMismatch("γ must be a 3-form on ℝ⁷".into()));
    }
    if !in_lambda3_27(frame, gamma) {
        return Err(Error::NotIn27);
    }
    let contracted: Vec<KForm> = (0..N).map(|i| frame.sigma.contract_basis(i)).collect();
    let orient = FieldElem::from_int(i64::from(frame.orientation));
    let mut m = FieldMatrix::zeros(N, N);
    for a in 0..N {
        let left = contracted[a].wedge(gamma)?;
        for b in a..N {
            let v = contracted[b].wedge(&left)?.top_coeff() * &orient;
            m[(a, b)] = v.clone();
            m[(b, a)] = v;
        }
    }
    SymTensor::from_matrix(m)
}

/// A basis of `S²₀`: `e^a ⊙ e^b` for `a < b`, then `e^a⊗e^a − e^{a+1}⊗e^{a+1}`.
pub fn s20_basis() -> Vec<SymTensor> {
    let mut out = Vec::with_capacity(27);
    for a in 0..N {
        for b in a + 1..N {
            out.push(SymTensor::odot(N, a, b));
        }
    }
    for a in 0..N - 1 {
        let mut m = FieldMatrix::zeros(N, N);
        m[(a, a)] = FieldElem::one();
        m[(a + 1, a + 1)] = -FieldElem::one();
        out.push(SymTensor::from_matrix(m).expect("diagonal"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::standard_g2;

    #[test]
    fn explicit_element() {
        let f = standard_g2();
        let got = bryant_i(&f, &SymTensor::odot(7, 0, 1)).unwrap();
        let expect = KForm::parse("1*e146 + 1*e157 + 1*e245 + -1*e267", 7, 3).unwrap();
        assert_eq!(got, expect);
        assert!(in_lambda3_27(&f, &got));
    }

    #[test]
    fn j_inverts_i_up_to_minus_eight() {
        let f = standard_g2();
        let m8 = FieldElem::from_int(-8);
        for h in s20_basis() {
            let g = bryant_i(&f, &h).unwrap();
            assert_eq!(bryant_j(&f, &g).unwrap(), h.scale(&m8));
        }
    }

    #[test]
    fn errors() {
        let f = standard_g2();
        assert!(matches!(bryant_i(&f, &SymTensor::identity(7)), Err(Error::NotTraceless)));
        assert!(matches!(bryant_j(&f, &f.sigma), Err(Error::NotIn27)));
        assert!(bryant_i(&f, &SymTensor::zero(7)).unwrap().is_zero());
        assert!(bryant_j(&f, &KForm::zero(7, 3)).unwrap().is_zero());
    }
}
