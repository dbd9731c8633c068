use g2def::g2::{identity_suite, schur_suite, standard_g2};
use g2def::par::Exec;

#[test]
fn identity_suite_passes_on_standard_frame() {
    let report = identity_suite(&standard_g2(), Exec::default());
    for c in &report.checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn schur_suite_passes() {
    let report = schur_suite(Exec::default());
    for c in &report.checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
}
