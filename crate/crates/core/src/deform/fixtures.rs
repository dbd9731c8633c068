//! The explicit intertwiners of the squashed S⁷ and of N(1,1), built from
//! the space's own frame and `h` basis.

use crate::error::{Error, Result};
use crate::exterior::{KForm, MultiIndex, Vector};
use crate::field::{FieldElem, FieldMatrix};
use crate::g2::{G2Frame, N};
use crate::homogeneous::{GVec, ReductiveSpace};
use crate::rep::{adjoint_module, AdjointModule, Family, Intertwiner};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// `sp(2) → Λ³₂₇`, `α ↦ p(α) ⌟ (∗σₒ − 4e⁴⁵⁶⁷)` with `p` the projection
    /// onto `m' = span(e₄, …, e₇)`.
    SquashedSp2,
    /// The four maps `A₁, …, A₄: su(3) → Λ³₂₇` of N(1,1).
    N11Su3,
    /// `su(2) → Λ³₂₇`, `a ↦ q₂(a)♭ ∧ (e⁴⁵ + e⁶⁷)`.
    N11Su2,
}

impl Fixture {
    pub fn space_name(self) -> &'static str {
        match self {
            Fixture::SquashedSp2 => "squashed-s7",
            Fixture::N11Su3 | Fixture::N11Su2 => "n11",
        }
    }

    pub fn map_count(self) -> usize {
        if self == Fixture::N11Su3 {
            4
        } else {
            1
        }
    }

    fn factor(self) -> (Family, usize) {
        match self {
            Fixture::SquashedSp2 => (Family::Sp, 2),
            Fixture::N11Su3 => (Family::SU, 3),
            Fixture::N11Su2 => (Family::SU, 2),
        }
    }

    /// The test element `α` and the `Λ⁴` coefficient probed by the
    /// fixture check (`e₄` and `e¹²³⁴` for the squashed S⁷; `(0, I)` and
    /// `e²³⁴⁵` for N(1,1)).
    pub fn probe(self, space: &ReductiveSpace) -> Result<(GVec, MultiIndex)> {
        check_space(self, space)?;
        match self {
            Fixture::SquashedSp2 => Ok((space.m_frame[3].clone(), MultiIndex::new(&[1, 2, 3, 4])?)),
            Fixture::N11Su2 => Ok((n11_parts(space).su2[0].clone(), MultiIndex::new(&[2, 3, 4, 5])?)),
            Fixture::N11Su3 => Ok((n11_parts(space).c.clone(), MultiIndex::new(&[1, 2, 3, 4])?)),
        }
    }
}

/// The module and the fixture maps on its basis.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub module: AdjointModule,
    pub maps: Vec<Intertwiner>,
}

fn check_space(fixture: Fixture, space: &ReductiveSpace) -> Result<()> {
    if space.name != fixture.space_name() {
        return Err(Error::WrongSpace { fixture: format!("{fixture:?}"), space: space.name.clone() });
    }
    Ok(())
}

fn form(indices: &[usize]) -> KForm {
    KForm::term(N, indices, FieldElem::one()).expect("valid indices")
}

/// Frame coordinates `(⟨x, e_b⟩)_b` of the `m`-component of `x`.
fn frame_coords(space: &ReductiveSpace, x: &[FieldElem]) -> Result<Vec<FieldElem>> {
    space.m_frame.iter().map(|e| space.metric(x, e)).collect()
}

fn axpy(out: &mut GVec, s: &FieldElem, x: &[FieldElem]) {
    for (o, v) in out.iter_mut().zip(x) {
        *o += s * v;
    }
}

/// Elements of `g` for N(1,1), recovered from the frame and `h` basis:
/// `C = h₀`, `q₂(a) = −√5 e_a`, `j(a) = (3h_a + q₂(a))/5` in `su(3)` and
/// `a = (2h_a − q₂(a))/5` in `su(2)`.
struct N11Parts {
    c: GVec,
    q2: Vec<GVec>,
    j: Vec<GVec>,
    su2: Vec<GVec>,
}

fn n11_parts(space: &ReductiveSpace) -> N11Parts {
    let dim = space.dim();
    let minus_sqrt5 = -FieldElem::sqrt_of(5);
    let fifth = FieldElem::from_ratio(1, 5);
    let mut q2 = Vec::new();
    let mut j = Vec::new();
    let mut su2 = Vec::new();
    for a in 0..3 {
        let h = &space.h_basis[1 + a];
        let q: GVec = space.m_frame[a].iter().map(|x| x * &minus_sqrt5).collect();
        let mut ja = vec![FieldElem::zero(); dim];
        axpy(&mut ja, &(&fifth * &FieldElem::from_int(3)), h);
        axpy(&mut ja, &fifth, &q);
        let mut sa = vec![FieldElem::zero(); dim];
        axpy(&mut sa, &(&fifth * &FieldElem::from_int(2)), h);
        axpy(&mut sa, &-fifth.clone(), &q);
        q2.push(q);
        j.push(ja);
        su2.push(sa);
    }
    N11Parts { c: space.h_basis[0].clone(), q2, j, su2 }
}

/// `B(x, y)/B(y, y)`.
fn killing_ratio(space: &ReductiveSpace, x: &[FieldElem], y: &[FieldElem]) -> Result<FieldElem> {
    space.g.killing(x, y)?.checked_div(&space.g.killing(y, y)?)
}

struct Ctx<'a> {
    space: &'a ReductiveSpace,
    /// `∗σₒ − 4e⁴⁵⁶⁷`
    emb: KForm,
    /// `e⁴⁵ + e⁶⁷`
    omega: KForm,
    /// `σₒ − 7e¹²³`
    a1_form: KForm,
    parts: Option<N11Parts>,
}

impl Ctx<'_> {
    fn parts(&self) -> &N11Parts {
        self.parts.as_ref().expect("N(1,1) fixture")
    }

    /// `Σ_a B(α, y_a)/B(y_a, y_a) · q₂(a)♭ ∧ Ω`.
    fn q2_wedge_omega(&self, al: &[FieldElem], ys: &[GVec]) -> Result<KForm> {
        let mut out = KForm::zero(N, 3);
        for (y, q) in ys.iter().zip(&self.parts().q2) {
            let coef = killing_ratio(self.space, al, y)?;
            let flat = Vector(frame_coords(self.space, q)?).to_form();
            out = out.checked_add(&flat.wedge(&self.omega)?.scale(&coef))?;
        }
        Ok(out)
    }

    /// `A₃` (`sgn = 1`) and `A₄` (`sgn = −1`): with `x` the frame
    /// coordinates of `α`, `a = (x₄ + sgn·i x₅)/2`, `a' = (x₆ + sgn·i x₇)/2`,
    /// `v = a e₄ − sgn·i a e₅ + a' e₆ − sgn·i a' e₇ ↦ v ⌟ (∗σₒ − 4e⁴⁵⁶⁷)`.
    fn a34(&self, al: &[FieldElem], sgn: i64) -> Result<KForm> {
        let x = frame_coords(self.space, al)?;
        let si = FieldElem::i() * FieldElem::from_int(sgn);
        let half = FieldElem::from_ratio(1, 2);
        let a = (&x[3] + &(&si * &x[4])) * &half;
        let a2 = (&x[5] + &(&si * &x[6])) * &half;
        let mut v = vec![FieldElem::zero(); N];
        v[4] = -(&si * &a);
        v[3] = a;
        v[6] = -(&si * &a2);
        v[5] = a2;
        self.emb.contract(&Vector(v))
    }

    fn evaluate(&self, fixture: Fixture, which: usize, al: &[FieldElem]) -> Result<KForm> {
        match (fixture, which) {
            (Fixture::SquashedSp2, _) => {
                let x = frame_coords(self.space, al)?;
                let v = (0..N).map(|b| if b >= 3 { x[b].clone() } else { FieldElem::zero() }).collect();
                self.emb.contract(&Vector(v))
            }
            (Fixture::N11Su2, _) => self.q2_wedge_omega(al, &self.parts().su2),
            (Fixture::N11Su3, 0) => Ok(self.a1_form.scale(&killing_ratio(self.space, al, &self.parts().c)?)),
            (Fixture::N11Su3, 1) => self.q2_wedge_omega(al, &self.parts().j),
            (Fixture::N11Su3, 2) => self.a34(al, 1),
            (Fixture::N11Su3, _) => self.a34(al, -1),
        }
    }
}

/// The fixture maps, verified `H`-equivariant and `Λ³₂₇`-valued.
pub fn fixture_intertwiners(space: &ReductiveSpace, fixture: Fixture) -> Result<FixtureSet> {
    check_space(fixture, space)?;
    let data = space.nearly_parallel_data()?;
    let star = data.sigma_o.hodge(space.orientation);
    let emb = star.checked_sub(&form(&[4, 5, 6, 7]).scale(&FieldElem::from_int(4)))?;
    let ideals = space.ideals()?;
    let (fam, rank) = fixture.factor();
    let summand = ideals
        .iter()
        .position(|(_, f)| f.is_some_and(|f| f.family == fam && f.rank == rank))
        .ok_or_else(|| Error::WrongSpace { fixture: format!("{fixture:?}"), space: space.name.clone() })?;
    let module = adjoint_module(space, summand)?;
    let dim = space.dim();
    let alphas: Vec<GVec> = (0..module.dim()).map(|k| module.basis_vector(dim, k)).collect();
    let omega = form(&[4, 5]).checked_add(&form(&[6, 7]))?;

    let ctx = Ctx {
        space,
        emb,
        omega,
        a1_form: data.sigma_o.checked_sub(&form(&[1, 2, 3]).scale(&FieldElem::from_int(7)))?,
        parts: (fixture != Fixture::SquashedSp2).then(|| n11_parts(space)),
    };
    let frame = G2Frame::from_sigma(data.sigma_o.clone(), space.orientation)?;
    let mut maps = Vec::new();
    for which in 0..fixture.map_count() {
        let forms: Vec<KForm> = alphas.iter().map(|al| ctx.evaluate(fixture, which, al)).collect::<Result<_>>()?;
        let a = Intertwiner::from_forms(&forms)?;
        if !a.is_equivariant(&module, space)? || !a.in_lambda3_27(&frame) {
            return Err(Error::InvariantViolation(format!("fixture {fixture:?} is not an intertwiner into Λ³₂₇")));
        }
        maps.push(a);
    }
    Ok(FixtureSet { module, maps })
}

/// Coefficients of `map` in `basis`, if it lies in their span.
pub fn express_in_basis(map: &Intertwiner, basis: &[Intertwiner]) -> Result<Option<Vec<FieldElem>>> {
    let flat = |a: &Intertwiner| -> Vec<FieldElem> {
        (0..a.matrix.cols()).flat_map(|c| a.matrix.column(c)).collect()
    };
    let target = flat(map);
    if basis.is_empty() {
        return Ok(target.iter().all(FieldElem::is_zero).then(Vec::new));
    }
    let cols: Vec<Vec<FieldElem>> = basis.iter().map(flat).collect();
    FieldMatrix::from_columns(&cols, target.len())?.solve(&target)
}
