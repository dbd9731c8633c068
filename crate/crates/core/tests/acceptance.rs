//! Acceptance suite: one PASS/FAIL line per criterion, all checks exact.

use std::process::ExitCode;
use std::time::Instant;

use g2def::deform::{
    fixture_intertwiners, main_constant, remixed_kernel_dim, solve_candidate, solve_deformations, Fixture,
    MainSystem,
};
use g2def::field::{rat, FieldElem, FieldMatrix, Rational};
use g2def::g2::{identity_suite, schur_suite, standard_g2, standard_sigma, ProjectorSet, Summand, SuiteReport};
use g2def::homogeneous::{builtin, builtin_names, space_from_json, space_to_json, ReductiveSpace};
use g2def::par::Exec;
use g2def::rep::{adjoint_module, deformation_targets, enumerate_candidates, intertwiner_space, GroupSpec, Weight};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn space(name: &str) -> Result<ReductiveSpace, String> {
    builtin(name).map_err(e)
}

fn suite(report: SuiteReport) -> Outcome {
    let failed: Vec<String> =
        report.checks.iter().filter(|c| !c.passed).map(|c| format!("{} ({})", c.name, c.detail)).collect();
    ensure(failed.is_empty(), failed.join("; "))?;
    let cases: usize = report.checks.iter().map(|c| c.cases).sum();
    Ok(format!("{} checks, {cases} cases", report.checks.len()))
}

fn criterion_1() -> Outcome {
    let report = identity_suite(&standard_g2(), Exec::default());
    ensure(report.check("j(i(h)) = -8h on a basis of S²₀").is_some(), "j∘i check missing")?;
    ensure(report.check("i(e1⊙e2) = e146 + e157 + e245 - e267").is_some(), "explicit i check missing")?;
    suite(report)
}

fn criterion_2() -> Outcome {
    suite(schur_suite(Exec::default()))
}

fn criterion_3() -> Outcome {
    let r5 = FieldElem::sqrt_of(5);
    for name in ["squashed-s7", "n11"] {
        let s = space(name)?;
        ensure(s.c2 == rat(1, 24), format!("{name}: c² = {}", s.c2))?;
        let torsion = s.torsion_form().map_err(e)?;
        ensure(torsion == standard_sigma().scale(&(&r5 * &FieldElem::from_ratio(2, 5))), format!("{name}: torsion"))?;
        let d = s.nearly_parallel_data().map_err(e)?;
        ensure(d.tau0 == &r5 * &FieldElem::from_ratio(-12, 5), format!("{name}: τ₀ = {}", d.tau0))?;
        ensure(d.scal == FieldElem::from_ratio(63 * 24, 20), format!("{name}: scal = {}", d.scal))?;
        ensure(d.sigma_o.norm_squared() == FieldElem::from_int(7), format!("{name}: |σₒ|²"))?;
    }
    Ok("τ₀ = -12/√5, scal = 378/5, T = (2/√5)σ, |σₒ|² = 7 on squashed-s7 and n11".into())
}

fn criterion_4() -> Outcome {
    let targets = deformation_targets();
    let expect: [(&str, Vec<Vec<Weight>>); 3] = [
        ("so5-so3", vec![vec![vec![2, 0]]]),
        ("squashed-s7", vec![vec![vec![2, 0], vec![0]], vec![vec![0, 0], vec![2]]]),
        ("n11", vec![vec![vec![1, 0, -1], vec![0, 0]], vec![vec![0, 0, 0], vec![1, -1]]]),
    ];
    let minus_one: Rational = rat(-1, 1);
    let mut summary = Vec::new();
    for (name, weights) in expect {
        let s = space(name)?;
        let spec = GroupSpec { factors: s.factors.clone() };
        let search = enumerate_candidates(&spec, &targets).map_err(e)?;
        let got: Vec<Vec<Weight>> = search.candidates.iter().map(|c| c.weights.clone()).collect();
        ensure(got == weights, format!("{name}: candidates {got:?}"))?;
        ensure(search.candidates.iter().all(|c| c.casimir == minus_one), format!("{name}: a candidate off -1"))?;
        for c in &search.candidates {
            let direct = c
                .weights
                .iter()
                .zip(&spec.factors)
                .map(|(w, f)| f.casimir(w))
                .collect::<Result<Vec<_>, _>>()
                .map_err(e)?;
            ensure(g2def::rep::cas_product(&direct) == c.casimir, format!("{name}: Casimir of {}", c.label()))?;
        }
        let labels: Vec<String> = search.candidates.iter().map(|c| c.label()).collect();
        summary.push(format!("{spec}: {}", labels.join(", ")));
    }
    Ok(format!("at -1 only {}; none at -2/5, -3/5", summary.join("; ")))
}

fn criterion_5() -> Outcome {
    let expect = [("so5-so3", vec![0]), ("squashed-s7", vec![1, 0]), ("n11", vec![4, 1])];
    let mut parts = Vec::new();
    for (name, dims) in expect {
        let s = space(name)?;
        let d = s.nearly_parallel_data().map_err(e)?;
        let mut got = Vec::new();
        for k in 0..s.ideals().map_err(e)?.len() {
            let u = adjoint_module(&s, k).map_err(e)?;
            got.push(intertwiner_space(&u, &s, &d, Exec::default()).map_err(e)?.len());
        }
        ensure(got == dims, format!("{name}: {got:?}"))?;
        parts.push(format!("{name} {got:?}"));
    }
    Ok(parts.join(", "))
}

fn criterion_6() -> Outcome {
    let r5 = FieldElem::sqrt_of(5);

    let q = space("squashed-s7")?;
    let fx = fixture_intertwiners(&q, Fixture::SquashedSp2).map_err(e)?;
    let (alpha, probe) = Fixture::SquashedSp2.probe(&q).map_err(e)?;
    let alpha = fx.module.coords(&alpha).map_err(e)?;
    let tau0 = q.nearly_parallel_data().map_err(e)?.tau0;
    let system = MainSystem::new(&q, &fx.module, main_constant(&tau0)).map_err(e)?;
    let got = system.lhs(&fx.maps[0], &alpha).map_err(e)?.coeff(probe);
    ensure(got == FieldElem::from_int(36) * r5.inv().map_err(e)?, format!("squashed-s7 coefficient {got}"))?;

    let n = space("n11")?;
    let tau0 = n.nearly_parallel_data().map_err(e)?.tau0;
    let fx = fixture_intertwiners(&n, Fixture::N11Su2).map_err(e)?;
    let (alpha, probe) = Fixture::N11Su2.probe(&n).map_err(e)?;
    let alpha = fx.module.coords(&alpha).map_err(e)?;
    let system = MainSystem::new(&n, &fx.module, main_constant(&tau0)).map_err(e)?;
    let got = system.lhs(&fx.maps[0], &alpha).map_err(e)?.coeff(probe);
    ensure(got == FieldElem::from_int(22), format!("n11 su(2) coefficient {got}"))?;

    let fx = fixture_intertwiners(&n, Fixture::N11Su3).map_err(e)?;
    let system = MainSystem::new(&n, &fx.module, main_constant(&tau0)).map_err(e)?;
    let kernel = system.kernel(&fx.maps, Exec::default()).map_err(e)?;
    ensure(kernel.len() == 1, format!("n11 su(3) kernel dimension {}", kernel.len()))?;
    let k = &kernel[0];
    let s3 = &r5 * &FieldElem::from_ratio(1, 3);
    let i = FieldElem::i();
    ensure(k[1] == &s3 * &k[0], "c₂ ≠ (√5/3)c₁")?;
    ensure(k[2] == -(&(&s3 * &i) * &k[0]), "c₃ ≠ -(√5/3)i c₁")?;
    ensure(k[3] == &(&s3 * &i) * &k[0], "c₄ ≠ (√5/3)i c₁")?;
    Ok("36/√5 at e1234, 22 at e2345, kernel ray (1, √5/3, -√5/3 i, √5/3 i)".into())
}

fn criterion_7() -> Outcome {
    let mut parts = Vec::new();
    for (name, total) in [("so5-so3", 0), ("squashed-s7", 0), ("n11", 8)] {
        let r = solve_deformations(&space(name)?, Exec::default()).map_err(e)?;
        ensure(r.all_resolved(), format!("{name}: unresolved candidates"))?;
        ensure(r.total_dimension == total, format!("{name}: total {}", r.total_dimension))?;
        ensure(r.einstein_equals_g2, format!("{name}: Einstein ≠ G2"))?;
        if name == "n11" {
            let t = &r.deformation_type;
            ensure(t.len() == 1 && t[0].label == "su(3)" && t[0].multiplicity == 1, format!("n11 type {t:?}"))?;
        } else {
            ensure(r.deformation_type.is_empty(), format!("{name}: nonempty type"))?;
        }
        parts.push(format!("{name} {}", r.total_dimension));
    }
    Ok(format!("{}; n11 ≅ su(3) once; Einstein = G2 on all", parts.join(", ")))
}

fn projector_algebra() -> Result<(), String> {
    let proj = ProjectorSet::new(&standard_sigma(), 1).map_err(e)?;
    for k in 2..=5 {
        let summands = Summand::of_degree(k);
        let n = proj.basis(k).len();
        let mut sum = FieldMatrix::zeros(n, n);
        for &a in &summands {
            let pa = proj.matrix(a);
            ensure(pa.mul(pa).map_err(e)? == *pa, format!("{a:?} not idempotent"))?;
            ensure(pa.rank() == a.dim(), format!("{a:?} has rank {}", pa.rank()))?;
            for &b in &summands {
                if a != b {
                    ensure(pa.mul(proj.matrix(b)).map_err(e)?.is_zero(), format!("{a:?}·{b:?} ≠ 0"))?;
                }
            }
            sum = sum.add(pa).map_err(e)?;
        }
        ensure(sum == FieldMatrix::identity(n), format!("projectors of degree {k} do not sum to 1"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    projector_algebra()?;
    for name in builtin_names() {
        let built = space(name)?;
        let loaded = space_from_json(&space_to_json(&built).map_err(e)?).map_err(e)?;
        for s in [&built, &loaded] {
            s.g.check_jacobi().map_err(e)?;
            for x in &s.h_basis {
                for y in &s.h_basis {
                    let b = s.g.bracket(x, y).map_err(e)?;
                    ensure(s.m_coords(&b).iter().all(FieldElem::is_zero), format!("{name}: [h,h] ⊄ h"))?;
                }
                for m in &s.m_frame {
                    let b = s.g.bracket(x, m).map_err(e)?;
                    ensure(s.h_coords(&b).iter().all(FieldElem::is_zero), format!("{name}: [h,m] ⊄ m"))?;
                }
            }
            let d = s.nearly_parallel_data().map_err(e)?;
            for x in &s.h_basis {
                ensure(s.isotropy_action(x, &d.sigma_o).map_err(e)?.is_zero(), format!("{name}: σₒ not invariant"))?;
            }
        }
    }

    let mut remixes = 0;
    let mut agreements = 0;
    for name in builtin_names() {
        let s = space(name)?;
        let d = s.nearly_parallel_data().map_err(e)?;
        for k in 0..s.ideals().map_err(e)?.len() {
            let u = adjoint_module(&s, k).map_err(e)?;
            let sol = solve_candidate(&u, &s, &d, Exec::default()).map_err(e)?;
            if sol.hom_dim() == 0 {
                continue;
            }
            let system = MainSystem::new(&s, &u, main_constant(&d.tau0)).map_err(e)?;
            for seed in [11, 23, 47] {
                let got = remixed_kernel_dim(&system, &sol.hom_basis, seed, Exec::default()).map_err(e)?;
                ensure(got == sol.kernel_dim(), format!("{name}/{k}: remixed kernel {got}"))?;
                remixes += 1;
            }
            let dim = u.dim();
            for a in &sol.hom_basis {
                for j in 0..dim {
                    let alpha: Vec<FieldElem> =
                        (0..dim).map(|t| if t == j { FieldElem::one() } else { FieldElem::zero() }).collect();
                    let wedge = system.lhs_wedge(a, &alpha).map_err(e)?;
                    let indexed = system.lhs_indexed(a, &alpha).map_err(e)?;
                    ensure(wedge == indexed, format!("{name}/{k}: indexed and wedge forms differ"))?;
                    agreements += 1;
                }
            }
        }
    }
    Ok(format!(
        "projectors idempotent/orthogonal/complete with ranks 1,7,27 and 7,14; Jacobi, reductivity and σₒ invariance \
         on built and reloaded spaces; {remixes} remixes; {agreements} indexed = wedge evaluations"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("identity suite", criterion_1),
        ("Schur constants", criterion_2),
        ("3-Sasakian nearly parallel data", criterion_3),
        ("Casimir enumeration", criterion_4),
        ("intertwiner dimensions", criterion_5),
        ("fixture coefficients and kernel ray", criterion_6),
        ("end-to-end deformation dimensions", criterion_7),
        ("property suite", criterion_8),
    ];
    let mut failed = 0;
    for (n, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {title}: {detail} [{secs:.1}s]", n + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {why} [{secs:.1}s]", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
