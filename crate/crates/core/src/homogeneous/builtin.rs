//! The three built-in spaces, derived at first use from matrix models and
//! cached. Only structure constants and coordinate vectors are kept.

use std::sync::OnceLock;

use super::matrix_model::{block_diag, commutator, diag, elem, quat_conj, quaternion_matrix, quaternion_units, MatrixModel};
use super::{GVec, ReductiveSpace};
use crate::error::{Error, Result};
use crate::field::{rat, FieldElem, FieldMatrix};
use crate::rep::{Family, GroupFactor};

pub fn builtin_names() -> [&'static str; 3] {
    ["so5-so3", "squashed-s7", "n11"]
}

/// A built-in space by name.
pub fn builtin(name: &str) -> Result<ReductiveSpace> {
    static SO5: OnceLock<Result<ReductiveSpace, String>> = OnceLock::new();
    static SQUASHED: OnceLock<Result<ReductiveSpace, String>> = OnceLock::new();
    static N11: OnceLock<Result<ReductiveSpace, String>> = OnceLock::new();
    let cell = match name {
        "so5-so3" => SO5.get_or_init(|| so5_so3().map_err(|e| e.to_string())),
        "squashed-s7" => SQUASHED.get_or_init(|| squashed_s7().map_err(|e| e.to_string())),
        "n11" => N11.get_or_init(|| n11().map_err(|e| e.to_string())),
        other => {
            return Err(Error::Parse(format!(
                "unknown built-in space `{other}` (expected one of {})",
                builtin_names().join(", ")
            )))
        }
    };
    cell.clone().map_err(Error::InvariantViolation)
}

fn int(n: i64) -> FieldElem {
    FieldElem::from_int(n)
}

fn coords_all(model: &MatrixModel, ms: &[FieldMatrix]) -> Result<Vec<GVec>> {
    ms.iter().map(|m| model.coords(m)).collect()
}

/// Sp(2) × Sp(1) / Sp(1) × Sp(1) with the squashed metric.
fn squashed_s7() -> Result<ReductiveSpace> {
    let [q1, qi, qj, qk] = quaternion_units();
    let z2 = FieldMatrix::zeros(2, 2);
    let z4 = FieldMatrix::zeros(4, 4);
    let qm = |a: &FieldMatrix, b: &FieldMatrix, c: &FieldMatrix, d: &FieldMatrix| quaternion_matrix([[a, b], [c, d]]);
    let off = |q: &FieldMatrix| qm(&z2, q, &quat_conj(q).scale(&int(-1)), &z2);

    let mut basis = Vec::new();
    for q in [&qi, &qj, &qk] {
        basis.push(block_diag(&[&qm(q, &z2, &z2, &z2), &z2]));
        basis.push(block_diag(&[&qm(&z2, &z2, &z2, q), &z2]));
    }
    for q in [&q1, &qi, &qj, &qk] {
        basis.push(block_diag(&[&off(q), &z2]));
    }
    for q in [&qi, &qj, &qk] {
        basis.push(block_diag(&[&z4, q]));
    }
    let model = MatrixModel::new(basis)?;
    let g = model.algebra()?;

    let inv_sqrt5 = FieldElem::sqrt_of(5) * FieldElem::from_ratio(1, 5);
    let mut frame = Vec::new();
    for q in [&qi, &qj, &qk] {
        frame.push(block_diag(&[&qm(&z2, &z2, &z2, &q.scale(&int(2))), &q.scale(&int(-3))]).scale(&inv_sqrt5));
    }
    for q in [&q1, &qi, &qj, &qk] {
        frame.push(block_diag(&[&off(q), &z2]));
    }
    let mut h = Vec::new();
    for q in [&qi, &qj, &qk] {
        h.push(block_diag(&[&qm(q, &z2, &z2, &z2), &z2]));
    }
    for q in [&qi, &qj, &qk] {
        h.push(block_diag(&[&qm(&z2, &z2, &z2, q), q]));
    }
    ReductiveSpace::new(
        "squashed-s7",
        g,
        coords_all(&model, &h)?,
        coords_all(&model, &frame)?,
        rat(1, 24),
        1,
        vec![GroupFactor::new(Family::Sp, 2), GroupFactor::new(Family::Sp, 1)],
    )
}

/// The Aloff–Wallach space N(1,1) as SU(3) × SU(2) / U(1) × SU(2).
fn n11() -> Result<ReductiveSpace> {
    let e3 = |a, b| elem(3, a, b);
    let i = FieldElem::i();
    let mut su3 = Vec::new();
    for a in 0..3 {
        for b in a + 1..3 {
            su3.push(e3(a, b).sub(&e3(b, a))?);
            su3.push(e3(a, b).add(&e3(b, a))?.scale(&i));
        }
    }
    su3.push(diag(&[i.clone(), -&i, FieldElem::zero()]));
    su3.push(diag(&[i.clone(), i.clone(), &i * &int(-2)]));
    let su2_i = diag(&[i.clone(), -&i]);
    let su2_j = FieldMatrix::from_rows(vec![vec![int(0), int(-1)], vec![int(1), int(0)]], 2)?;
    let su2_k = FieldMatrix::from_rows(vec![vec![int(0), i.clone()], vec![i.clone(), int(0)]], 2)?;
    let su2 = [su2_i, su2_j, su2_k];
    let z2 = FieldMatrix::zeros(2, 2);
    let z3 = FieldMatrix::zeros(3, 3);

    let mut basis: Vec<FieldMatrix> = su3.iter().map(|m| block_diag(&[m, &z2])).collect();
    basis.extend(su2.iter().map(|m| block_diag(&[&z3, m])));
    let model = MatrixModel::new(basis)?;
    let g = model.algebra()?;

    let up = |a: &FieldMatrix| {
        let mut m = FieldMatrix::zeros(3, 3);
        for r in 0..2 {
            for c in 0..2 {
                m[(r, c)] = a[(r, c)].clone();
            }
        }
        m
    };
    let minus_inv_sqrt5 = FieldElem::sqrt_of(5) * FieldElem::from_ratio(-1, 5);
    let sqrt2 = FieldElem::sqrt_of(2);
    let mut frame = Vec::new();
    for a in &su2 {
        frame.push(block_diag(&[&up(&a.scale(&int(2))), &a.scale(&int(-3))]).scale(&minus_inv_sqrt5));
    }
    for (p, q) in [(0, 2), (1, 2)] {
        frame.push(block_diag(&[&e3(p, q).sub(&e3(q, p))?.scale(&sqrt2), &z2]));
        frame.push(block_diag(&[&e3(p, q).add(&e3(q, p))?.scale(&(&sqrt2 * &i)), &z2]));
    }
    let mut h = vec![block_diag(&[&diag(&[i.clone(), i.clone(), &i * &int(-2)]), &z2])];
    for a in &su2 {
        h.push(block_diag(&[&up(a), a]));
    }
    ReductiveSpace::new(
        "n11",
        g,
        coords_all(&model, &h)?,
        coords_all(&model, &frame)?,
        rat(1, 24),
        1,
        vec![GroupFactor::new(Family::SU, 3), GroupFactor::new(Family::SU, 2)],
    )
}

/// SO(5)/SO(3) with SO(3) acting irreducibly on ℝ⁵ = S²₀ℝ³.
fn so5_so3() -> Result<ReductiveSpace> {
    let e3 = |a, b| elem(3, a, b);
    let inv_sqrt2 = FieldElem::sqrt_of(2) * FieldElem::from_ratio(1, 2);
    let inv_sqrt6 = FieldElem::sqrt_of(6) * FieldElem::from_ratio(1, 6);
    // Orthonormal basis of traceless symmetric 3×3 matrices (trace form).
    let s = [
        e3(0, 1).add(&e3(1, 0))?.scale(&inv_sqrt2),
        e3(0, 2).add(&e3(2, 0))?.scale(&inv_sqrt2),
        e3(1, 2).add(&e3(2, 1))?.scale(&inv_sqrt2),
        diag(&[int(1), int(-1), int(0)]).scale(&inv_sqrt2),
        diag(&[int(1), int(1), int(-2)]).scale(&inv_sqrt6),
    ];
    let so3 = [e3(1, 2).sub(&e3(2, 1))?, e3(2, 0).sub(&e3(0, 2))?, e3(0, 1).sub(&e3(1, 0))?];
    let trace = |m: &FieldMatrix| -> FieldElem { (0..m.rows()).map(|i| m[(i, i)].clone()).sum() };

    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let basis: Vec<FieldMatrix> =
        pairs.iter().map(|&(a, b)| elem(5, a, b).sub(&elem(5, b, a))).collect::<Result<_>>()?;
    let model = MatrixModel::new(basis)?;
    let g = model.algebra()?;

    // so(3) → so(5): X ↦ (k, j) ↦ tr([X, S_j] S_k).
    let mut h = Vec::new();
    for x in &so3 {
        let rep = FieldMatrix::from_fn(5, 5, |k, j| trace(&commutator(x, &s[j]).mul(&s[k]).expect("3x3")));
        h.push(model.coords(&rep)?);
    }
    // m = Killing-orthogonal complement of h, then Gram–Schmidt for −B.
    let rows = FieldMatrix::from_rows(
        h.iter().map(|x| g.killing_matrix().mul_vec(x)).collect::<Result<_>>()?,
        g.dim(),
    )?;
    let spanning = rows.nullspace();
    let neg_b = |x: &GVec, y: &GVec| -> Result<FieldElem> { Ok(-g.killing(x, y)?) };
    let mut ortho: Vec<GVec> = Vec::new();
    for v in spanning {
        let mut u = v.clone();
        for w in &ortho {
            let f = neg_b(&v, w)?.checked_div(&neg_b(w, w)?)?;
            u = u.iter().zip(w).map(|(a, b)| a - &(&f * b)).collect();
        }
        ortho.push(u);
    }
    let mut frame = Vec::new();
    for u in ortho {
        let norm2 = neg_b(&u, &u)?
            .to_rational()
            .ok_or_else(|| Error::InvariantViolation("Gram–Schmidt norm is not rational".into()))?;
        let norm = FieldElem::sqrt_rational(&norm2)
            .ok_or_else(|| Error::InvariantViolation("Gram–Schmidt norm leaves the field".into()))?;
        let inv = norm.inv()?;
        frame.push(u.iter().map(|x| x * &inv).collect());
    }
    ReductiveSpace::new("so5-so3", g, h, frame, rat(1, 1), 1, vec![GroupFactor::new(Family::Sp, 2)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squashed_first_frame_vector() {
        let s = builtin("squashed-s7").unwrap();
        // e₁ = (1/√5)(diag(0, 2i), −3i): coordinates 2/√5 on the second sp(1)
        // block generator and −3/√5 on the separate sp(1) factor.
        let e1 = &s.m_frame[0];
        let c = FieldElem::sqrt_of(5) * FieldElem::from_ratio(2, 5);
        assert_eq!(e1[1], c);
        assert_eq!(e1[10], FieldElem::sqrt_of(5) * FieldElem::from_ratio(-3, 5));
        assert_eq!(e1.iter().filter(|x| !x.is_zero()).count(), 2);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(builtin("s7"), Err(Error::Parse(_))));
    }
}
