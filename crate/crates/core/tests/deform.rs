use g2def::deform::{
    express_in_basis, fixture_intertwiners, main_constant, remixed_kernel_dim, solve_candidate, solve_deformations,
    Fixture, MainSystem,
};
use g2def::exterior::KForm;
use g2def::field::FieldElem;
use g2def::g2::{standard_sigma, N};
use g2def::homogeneous::builtin;
use g2def::par::Exec;
use g2def::rep::{adjoint_module, intertwiner_space};
use g2def::Error;

fn r5() -> FieldElem {
    FieldElem::sqrt_of(5)
}

#[test]
fn squashed_fixture_values() {
    let s = builtin("squashed-s7").unwrap();
    let fx = fixture_intertwiners(&s, Fixture::SquashedSp2).unwrap();
    let a = &fx.maps[0];
    let e5 = fx.module.coords(&s.m_frame[4]).unwrap();
    let expect = KForm::parse("3*e467 + 1*e137 + 1*e126 + 1*e234", N, 3).unwrap();
    assert_eq!(a.apply(&e5).unwrap(), expect);

    let (alpha, probe) = Fixture::SquashedSp2.probe(&s).unwrap();
    let alpha = fx.module.coords(&alpha).unwrap();
    let tau0 = s.nearly_parallel_data().unwrap().tau0;
    let system = MainSystem::new(&s, &fx.module, main_constant(&tau0)).unwrap();
    let lhs = system.lhs(a, &alpha).unwrap();
    assert_eq!(lhs.coeff(probe), FieldElem::from_int(36) * r5().inv().unwrap());
    assert_eq!(lhs, system.lhs_indexed(a, &alpha).unwrap());
    let zero = vec![FieldElem::zero(); fx.module.dim()];
    assert!(system.lhs(a, &zero).unwrap().is_zero());
}

#[test]
fn n11_fixture_values() {
    let s = builtin("n11").unwrap();
    let fx2 = fixture_intertwiners(&s, Fixture::N11Su2).unwrap();
    let (alpha, probe) = Fixture::N11Su2.probe(&s).unwrap();
    let alpha = fx2.module.coords(&alpha).unwrap();
    let expect = KForm::parse("1*e145 + 1*e167", N, 3).unwrap().scale(&-r5());
    assert_eq!(fx2.maps[0].apply(&alpha).unwrap(), expect);
    let tau0 = s.nearly_parallel_data().unwrap().tau0;
    let system = MainSystem::new(&s, &fx2.module, main_constant(&tau0)).unwrap();
    assert_eq!(system.lhs(&fx2.maps[0], &alpha).unwrap().coeff(probe), FieldElem::from_int(22));

    let fx3 = fixture_intertwiners(&s, Fixture::N11Su3).unwrap();
    let c = fx3.module.coords(&s.h_basis[0]).unwrap();
    let a1 = standard_sigma().checked_sub(&KForm::parse("7*e123", N, 3).unwrap()).unwrap();
    assert_eq!(fx3.maps[0].apply(&c).unwrap(), a1);
}

#[test]
fn n11_kernel_ray() {
    let s = builtin("n11").unwrap();
    let fx = fixture_intertwiners(&s, Fixture::N11Su3).unwrap();
    let tau0 = s.nearly_parallel_data().unwrap().tau0;
    let system = MainSystem::new(&s, &fx.module, main_constant(&tau0)).unwrap();
    let kernel = system.kernel(&fx.maps, Exec::default()).unwrap();
    assert_eq!(kernel.len(), 1);
    let k = &kernel[0];
    let ray: Vec<FieldElem> = k.iter().map(|x| x.checked_div(&k[0]).unwrap()).collect();
    let s3 = r5() * FieldElem::from_ratio(1, 3);
    let i = FieldElem::i();
    assert_eq!(ray, vec![FieldElem::one(), s3.clone(), -(&s3 * &i), &s3 * &i]);
}

#[test]
fn fixtures_lie_in_computed_hom_space() {
    let s = builtin("n11").unwrap();
    let data = s.nearly_parallel_data().unwrap();
    for f in [Fixture::N11Su3, Fixture::N11Su2] {
        let fx = fixture_intertwiners(&s, f).unwrap();
        let basis = intertwiner_space(&fx.module, &s, &data, Exec::default()).unwrap();
        assert_eq!(basis.len(), fx.maps.len());
        for m in &fx.maps {
            assert!(express_in_basis(m, &basis).unwrap().is_some());
        }
    }
    let q = builtin("squashed-s7").unwrap();
    let fx = fixture_intertwiners(&q, Fixture::SquashedSp2).unwrap();
    let basis = intertwiner_space(&fx.module, &q, &q.nearly_parallel_data().unwrap(), Exec::default()).unwrap();
    assert!(express_in_basis(&fx.maps[0], &basis).unwrap().is_some());
}

#[test]
fn wrong_space() {
    let s = builtin("so5-so3").unwrap();
    assert!(matches!(fixture_intertwiners(&s, Fixture::N11Su2), Err(Error::WrongSpace { .. })));
    assert!(matches!(Fixture::SquashedSp2.probe(&s), Err(Error::WrongSpace { .. })));
}

#[test]
fn candidate_solutions() {
    let expect = [("squashed-s7", 0, 1, 0), ("n11", 0, 4, 1), ("n11", 1, 1, 0), ("so5-so3", 0, 0, 0)];
    for (name, summand, hom, ker) in expect {
        let s = builtin(name).unwrap();
        let data = s.nearly_parallel_data().unwrap();
        let u = adjoint_module(&s, summand).unwrap();
        let sol = solve_candidate(&u, &s, &data, Exec::default()).unwrap();
        assert_eq!((sol.hom_dim(), sol.kernel_dim()), (hom, ker), "{name} {summand}");
        if hom > 0 {
            let system = MainSystem::new(&s, &u, main_constant(&data.tau0)).unwrap();
            for seed in [1, 2] {
                assert_eq!(remixed_kernel_dim(&system, &sol.hom_basis, seed, Exec::default()).unwrap(), ker);
            }
        }
    }
}

#[test]
fn totals() {
    for (name, total) in [("so5-so3", 0), ("squashed-s7", 0), ("n11", 8)] {
        let r = solve_deformations(&builtin(name).unwrap(), Exec::default()).unwrap();
        assert_eq!(r.total_dimension, total, "{name}");
        assert!(r.einstein_equals_g2);
        assert!(r.all_resolved());
    }
    let r = solve_deformations(&builtin("n11").unwrap(), Exec::default()).unwrap();
    assert_eq!(r.deformation_type.len(), 1);
    assert_eq!(r.deformation_type[0].label, "su(3)");
    assert_eq!(r.deformation_type[0].multiplicity, 1);
}

#[test]
fn rescaling_keeps_dimensions() {
    let s = builtin("n11").unwrap();
    let scaled = s.rescaled(&FieldElem::sqrt_of(2)).unwrap();
    let a = solve_deformations(&s, Exec::default()).unwrap();
    let b = solve_deformations(&scaled, Exec::default()).unwrap();
    let dims = |r: &g2def::deform::DeformationReport| -> Vec<_> {
        r.candidates.iter().map(|c| (c.hom_dim, c.kernel_dim)).collect()
    };
    assert_eq!(dims(&a), dims(&b));
    assert_eq!(a.total_dimension, b.total_dimension);
    assert_ne!(a.tau0, b.tau0);
}

#[test]
fn sequential_and_parallel_agree() {
    let s = builtin("n11").unwrap();
    let a = solve_deformations(&s, Exec::Sequential).unwrap();
    let b = solve_deformations(&s, Exec::Parallel).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_json(false).unwrap(), b.to_json(false).unwrap());
}

#[test]
fn report_json_is_canonical() {
    let r = solve_deformations(&builtin("squashed-s7").unwrap(), Exec::default()).unwrap();
    let text = r.to_json(false).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    assert_eq!(v["total_dimension"], 0);
    assert_eq!(v["candidates"].as_array().unwrap().len(), 2);
    assert!(r.to_json(true).unwrap().contains("tau0_approx"));
}
