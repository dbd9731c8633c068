use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{FormBasis, FormValuedCovector, KForm, Vector};
use crate::field::{FieldElem, FieldMatrix};
use crate::g2::{bryant_i, bryant_j, so_casimir, s20_basis, standard_g2, Actable, G2Frame, SumActable, SymTensor, N};
use crate::par::Exec;

/// Seed of the random inputs used by the suites.
pub const SUITE_SEED: u64 = 0x67_3264_6566;
/// Number of random field-valued vectors per identity.
pub const RANDOM_VECTORS: usize = 100;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs `f` on every input and summarises the outcome.
fn run_cases<I: Sync>(name: &str, inputs: &[I], exec: Exec, f: impl Fn(&I) -> bool + Sync + Send) -> Check {
    let results = exec.map(inputs, &f);
    let failures = results.iter().filter(|ok| !**ok).count();
    let first = results.iter().position(|ok| !ok);
    Check {
        name: name.to_string(),
        passed: failures == 0,
        cases: inputs.len(),
        detail: match first {
            None => "exact".to_string(),
            Some(i) => format!("{failures} failing cases, first at input #{i}"),
        },
    }
}

fn single(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.to_string(), passed, cases: 1, detail: detail.into() }
}

fn random_vector(rng: &mut ChaCha8Rng) -> Vector {
    Vector((0..N).map(|_| FieldElem::random_small(rng)).collect())
}

fn int(n: i64) -> FieldElem {
    FieldElem::from_int(n)
}

/// Exact checks of the cross-product identities and of the contraction
/// identities relating σ and ∗σ, over all basis inputs and
/// [`RANDOM_VECTORS`] random field-valued vectors.
pub fn identity_suite(frame: &G2Frame, exec: Exec) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED);
    let basis: Vec<Vector> = (0..N).map(|i| Vector::basis(N, i)).collect();
    let randoms: Vec<[Vector; 3]> =
        (0..RANDOM_VECTORS).map(|_| [random_vector(&mut rng), random_vector(&mut rng), random_vector(&mut rng)]).collect();

    let mut singles: Vec<Vector> = basis.clone();
    singles.extend(randoms.iter().map(|r| r[0].clone()));
    let mut pairs: Vec<(Vector, Vector)> = Vec::new();
    for x in &basis {
        for y in &basis {
            pairs.push((x.clone(), y.clone()));
        }
    }
    pairs.extend(randoms.iter().map(|r| (r[0].clone(), r[1].clone())));
    let mut triples: Vec<(Vector, Vector, Vector)> = Vec::new();
    for x in &basis {
        for y in &basis {
            for z in &basis {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    triples.extend(randoms.iter().map(|r| (r[0].clone(), r[1].clone(), r[2].clone())));

    let f = frame;
    let sigma = &f.sigma;
    let star = &f.star_sigma;
    let o = f.orientation;
    let mut checks = Vec::new();

    checks.push(run_cases("cross product is orthogonal and norm-preserving", &pairs, exec, |(x, y)| {
        let p = f.cross(x, y);
        let xy = x.dot(y);
        p.dot(x).is_zero() && p.dot(y).is_zero() && p.dot(&p) == x.dot(x) * y.dot(y) - &xy * &xy
    }));
    checks.push(run_cases("<P(X,Y),Z> = <X,P(Y,Z)>", &triples, exec, |(x, y, z)| {
        f.cross(x, y).dot(z) == x.dot(&f.cross(y, z))
    }));
    checks.push(run_cases("P(X,P(X,Y)) = -|X|^2 Y + <X,Y> X", &pairs, exec, |(x, y)| {
        let lhs = f.cross(x, &f.cross(x, y));
        let rhs = &y.scale(&-x.dot(x)) + &x.scale(&x.dot(y));
        lhs == rhs
    }));
    checks.push(run_cases(
        "2P(P(X,Y),Z) = P(P(Y,Z),X) + P(P(Z,X),Y) + 3<X,Z>Y - 3<Y,Z>X",
        &triples,
        exec,
        |(x, y, z)| {
            let lhs = f.cross(&f.cross(x, y), z).scale(&int(2));
            let rhs = &(&f.cross(&f.cross(y, z), x) + &f.cross(&f.cross(z, x), y))
                + &(&y.scale(&(x.dot(z) * int(3))) - &x.scale(&(y.dot(z) * int(3))));
            lhs == rhs
        },
    ));
    checks.push(run_cases("(X⌟σ)∧σ = -2 X∧∗σ", &singles, exec, |x| {
        let lhs = sigma.contract(x).unwrap().wedge(sigma).unwrap();
        let rhs = x.to_form().wedge(star).unwrap().scale(&int(-2));
        lhs == rhs
    }));
    checks.push(run_cases("(X⌟σ)∧∗σ = 3∗X", &singles, exec, |x| {
        let lhs = sigma.contract(x).unwrap().wedge(star).unwrap();
        lhs == x.to_form().hodge(o).scale(&int(3))
    }));
    checks.push(run_cases("Σ (e_i⌟X⌟σ)⌟(e_i∧σ) = 3 X⌟∗σ", &singles, exec, |x| {
        let xs = sigma.contract(x).unwrap();
        let mut lhs = KForm::zero(N, 3);
        for i in 0..N {
            let v = Vector::from_form(&xs.contract_basis(i)).unwrap();
            let ei_sigma = Vector::basis(N, i).to_form().wedge(sigma).unwrap();
            lhs = &lhs + &ei_sigma.contract(&v).unwrap();
        }
        lhs == star.contract(x).unwrap().scale(&int(3))
    }));
    checks.push(run_cases("Σ (e_i⌟X⌟σ)∧(e_i⌟σ) = 3 X⌟∗σ", &singles, exec, |x| {
        let xs = sigma.contract(x).unwrap();
        let mut lhs = KForm::zero(N, 3);
        for i in 0..N {
            lhs = &lhs + &xs.contract_basis(i).wedge(&sigma.contract_basis(i)).unwrap();
        }
        lhs == star.contract(x).unwrap().scale(&int(3))
    }));
    checks.push(run_cases("(X⌟Y⌟σ)⌟σ + X⌟Y⌟∗σ = -X∧Y", &pairs, exec, |(x, y)| {
        let v = Vector::from_form(&sigma.contract(y).unwrap().contract(x).unwrap()).unwrap();
        let lhs = &sigma.contract(&v).unwrap() + &star.contract(y).unwrap().contract(x).unwrap();
        lhs == -x.to_form().wedge(&y.to_form()).unwrap()
    }));
    checks.push(run_cases("P(X⌟σ) = 3X", &singles, exec, |x| {
        f.cross_of_two_form(&sigma.contract(x).unwrap()) == x.scale(&int(3))
    }));

    let expl = bryant_i(f, &SymTensor::odot(N, 0, 1));
    let expect = KForm::parse("1*e146 + 1*e157 + 1*e245 + -1*e267", N, 3).expect("literal");
    checks.push(match expl {
        Ok(g) => single("i(e1⊙e2) = e146 + e157 + e245 - e267", g == expect, g.to_text()),
        Err(e) => single("i(e1⊙e2) = e146 + e157 + e245 - e267", false, e.to_string()),
    });
    let s20 = s20_basis();
    checks.push(run_cases("j(i(h)) = -8h on a basis of S²₀", &s20, exec, |h| {
        bryant_i(f, h).and_then(|g| bryant_j(f, &g)).map(|j| j == h.scale(&int(-8))).unwrap_or(false)
    }));

    SuiteReport { suite: "identities".to_string(), checks }
}

/// The embedding `i₂(h)_a = π₀(Σ_{c,d} h_cd P(e_a, e_c) ⊗ e^d)` of `S²₀`
/// into `T* ⊗ S²₀`.
pub fn i2(frame: &G2Frame, h: &SymTensor) -> Vec<SymTensor> {
    (0..N)
        .map(|a| {
            let mut m = FieldMatrix::zeros(N, N);
            for c in 0..N {
                let p = &frame.cross_table[a][c];
                for d in 0..N {
                    let hcd = h.get(c, d);
                    if hcd.is_zero() {
                        continue;
                    }
                    for k in 0..N {
                        if !p.0[k].is_zero() {
                            m[(k, d)] += &(hcd * &p.0[k]);
                        }
                    }
                }
            }
            SymTensor::traceless_part(&m)
        })
        .collect()
}

/// `Q(H) = Σ_a P_{e_a}(H_a)` on `T* ⊗ S²₀`.
pub fn q_map(frame: &G2Frame, hs: &[SymTensor]) -> SymTensor {
    hs.iter()
        .enumerate()
        .fold(SymTensor::zero(N), |acc, (a, h)| acc.add(&h.act(frame.p_matrix_basis(a))))
}

/// G2 Casimir eigenvalues on the summands of `T* ⊗ Λ³₂₇`.
const T27_SPECTRUM: [(&str, i64, i64); 5] =
    [("V(1,0)", -4, 1), ("V(2,0)", -28, 3), ("V(0,1)", -8, 1), ("V(1,1)", -14, 1), ("V(3,0)", -16, 1)];

/// Projection onto the Casimir eigenspace with eigenvalue `lambda`:
/// `Π_{μ≠λ} (C − μ)/(λ − μ)`.
fn isotypic_projection(frame: &G2Frame, f: &FormValuedCovector, lambda: &FieldElem) -> FormValuedCovector {
    let mut out = f.clone();
    for (_, p, q) in T27_SPECTRUM {
        let mu = FieldElem::from_ratio(p, q);
        if &mu == lambda {
            continue;
        }
        let c = frame.g2_casimir(&out);
        let shifted = FormValuedCovector::sum(vec![c, out.scaled(&-&mu)], &out);
        out = shifted.scaled(&(lambda - &mu).inv().expect("distinct eigenvalues"));
    }
    out
}

/// `Σ_i P_{e_i}(F_i)` for `F ∈ T* ⊗ Λ³`.
fn p_contract_sum(frame: &G2Frame, f: &FormValuedCovector) -> KForm {
    f.components()
        .iter()
        .enumerate()
        .fold(KForm::zero(N, 3), |acc, (i, fi)| &acc + &fi.act(frame.p_matrix_basis(i)))
}

/// Exact checks of the equivariant-map constants on the standard frame.
pub fn schur_suite(exec: Exec) -> SuiteReport {
    let f = standard_g2();
    let mut checks = Vec::new();

    for p in 1..=3usize {
        let basis = FormBasis::new(N, p);
        let units: Vec<KForm> = (0..basis.len()).map(|i| basis.unit(i)).collect();
        let expect = int(-((p * (N - p)) as i64));
        checks.push(run_cases(&format!("so(7) Casimir = -{} on Λ^{p}", p * (N - p)), &units, exec, |w| {
            so_casimir(N, w) == w.scale(&expect)
        }));
    }
    let s20 = s20_basis();
    let l27: Vec<KForm> = s20.iter().map(|h| bryant_i(&f, h).expect("traceless")).collect();
    checks.push(run_cases("so(7) Casimir = -14 on S²₀", &s20, exec, |h| so_casimir(N, h) == h.scale(&int(-14))));
    checks.push(run_cases("Σ P_i P_i = -8 on Λ³₂₇", &l27, exec, |g| f.p_square_sum(g) == g.scale(&int(-8))));
    checks.push(run_cases("Σ P_i P_i = -14 on S²₀", &s20, exec, |h| f.p_square_sum(h) == h.scale(&int(-14))));
    checks.push(run_cases("Σ e^i ∧ P_i = -2∗ on Λ³₂₇", &l27, exec, |g| {
        f.wedge_p_sum(g) == g.hodge(f.orientation).scale(&int(-2))
    }));
    checks.push(run_cases("Q ∘ i₂ = -7 on S²₀", &s20, exec, |h| q_map(&f, &i2(&f, h)) == h.scale(&int(-7))));

    // Component constants on T* ⊗ Λ³₂₇, on Casimir-projected random elements.
    let mut rng = ChaCha8Rng::seed_from_u64(SUITE_SEED ^ 0x27);
    let samples: Vec<FormValuedCovector> = (0..2)
        .map(|_| {
            let comps = (0..N)
                .map(|_| {
                    l27.iter().fold(KForm::zero(N, 3), |acc, g| {
                        use rand::Rng;
                        &acc + &g.scale(&FieldElem::from_int(rng.gen_range(-3..=3)))
                    })
                })
                .collect();
            FormValuedCovector::new(comps).expect("7 components")
        })
        .collect();
    let decompositions: Vec<Vec<FormValuedCovector>> = exec.map(&samples, |s| {
        T27_SPECTRUM.iter().map(|(_, p, q)| isotypic_projection(&f, s, &FieldElem::from_ratio(*p, *q))).collect()
    });
    let decomposition_ok = samples.iter().zip(&decompositions).all(|(s, parts)| {
        let total = FormValuedCovector::sum(parts.clone(), s);
        let eigen = parts.iter().zip(T27_SPECTRUM).all(|(part, (_, p, q))| {
            f.g2_casimir(part) == part.scaled(&FieldElem::from_ratio(p, q))
        });
        &total == s && eigen
    });
    checks.push(single(
        "G2 Casimir splits T*⊗Λ³₂₇ into eigenvalues -4, -28/3, -8, -14, -16",
        decomposition_ok,
        "isotypic projections sum to the input and are eigenvectors",
    ));
    let t_ok = decompositions.iter().all(|parts| {
        let t = &parts[0];
        let star_eps = t.eps().hodge(f.orientation);
        !t.is_zero() && !star_eps.is_zero() && p_contract_sum(&f, t) == star_eps.scale(&int(-3))
    });
    checks.push(single("Σ P_i ∘ e_i⌟ = -3∗∘ε on the T component", t_ok, "two random samples"));
    let l_ok = decompositions.iter().all(|parts| {
        let l = &parts[1];
        let star_eps = l.eps().hodge(f.orientation);
        !l.is_zero() && !star_eps.is_zero() && p_contract_sum(&f, l) == star_eps
    });
    checks.push(single("Σ P_i ∘ e_i⌟ = ∗∘ε on the Λ³₂₇ component", l_ok, "two random samples"));
    let rest_ok = decompositions.iter().all(|parts| {
        parts[2..].iter().all(|p| p.eps().is_zero() && p_contract_sum(&f, p).is_zero())
    });
    checks.push(single(
        "ε and Σ P_i ∘ e_i⌟ vanish on the remaining components",
        rest_ok,
        "two random samples",
    ));

    SuiteReport { suite: "schur".to_string(), checks }
}

/// Eigenvalue bookkeeping for a nearly parallel structure with constant τ₀.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenBookkeeping {
    /// `c = (5/6) τ₀`.
    pub c: FieldElem,
    /// Roots `−τ₀`, `τ₀/2` of `λ² + (τ₀/2)λ − τ₀²/2 = 0`.
    pub roots: [FieldElem; 2],
    /// `(5τ₀²/6, τ₀²/3, τ₀²/2)`.
    pub eigenvalues: [FieldElem; 3],
}

pub fn laplace_eigen_bookkeeping(tau0: &FieldElem) -> Result<EigenBookkeeping> {
    if tau0.is_zero() {
        return Err(Error::ZeroTau);
    }
    let half = FieldElem::from_ratio(1, 2);
    let roots = [-tau0, tau0 * &half];
    for r in &roots {
        let q = r * r + &(tau0 * &half) * r - &(tau0 * tau0) * &half;
        if !q.is_zero() {
            return Err(Error::InvariantViolation("root check of the quadratic failed".into()));
        }
    }
    let sixth = tau0 * &FieldElem::from_ratio(1, 6);
    let eig = |l: &FieldElem| l * l + &sixth * l;
    let closed = tau0 * tau0 * half;
    Ok(EigenBookkeeping {
        c: tau0 * &FieldElem::from_ratio(5, 6),
        eigenvalues: [eig(&roots[0]), eig(&roots[1]), closed],
        roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bookkeeping_for_three_sasakian_tau() {
        let tau0: FieldElem = "-12/5*r5".parse().unwrap();
        let b = laplace_eigen_bookkeeping(&tau0).unwrap();
        assert_eq!(b.c, "-2*r5".parse().unwrap());
        assert_eq!(b.roots[0], "12/5*r5".parse().unwrap());
        let t2 = &tau0 * &tau0;
        assert_eq!(b.eigenvalues[0], &t2 * &FieldElem::from_ratio(5, 6));
        assert_eq!(b.eigenvalues[1], &t2 * &FieldElem::from_ratio(1, 3));
        assert_eq!(b.eigenvalues[2], &t2 * &FieldElem::from_ratio(1, 2));
        assert!(matches!(laplace_eigen_bookkeeping(&FieldElem::zero()), Err(Error::ZeroTau)));
    }

    #[test]
    fn i2_example() {
        let f = standard_g2();
        let h = SymTensor::odot(7, 0, 1);
        assert_eq!(q_map(&f, &i2(&f, &h)), h.scale(&int(-7)));
    }
}
