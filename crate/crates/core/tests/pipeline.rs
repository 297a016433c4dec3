use genjacobi::genjacobi::Params;
use genjacobi::inner::inner_product;
use genjacobi::operators::{eigen_combined, expand_operator, OperatorKind};
use genjacobi::verify::{run_suite, GridConfig, Suite};
use genjacobi::{frac, gen_jacobi, rat, Rational, VerifyReport};
use num_traits::Zero;
use proptest::prelude::*;

fn mass() -> impl Strategy<Value = Rational> {
    (0i64..=12, 1i64..=6).prop_map(|(p, q)| frac(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn expanded_combined_operator_diagonalizes(a in 0u32..=2, b in 0u32..=2, m in mass(), n_mass in mass(), n in 0usize..=9) {
        let params = Params::new(a, b, m, n_mass).unwrap();
        let op = expand_operator(OperatorKind::Combined, &params).unwrap();
        let y = gen_jacobi(n, &params);
        prop_assert_eq!(op.apply(&y), y.scale(&eigen_combined(n, &params)));
    }

    #[test]
    fn distinct_degrees_are_orthogonal(a in 0u32..=3, b in 0u32..=3, m in mass(), n_mass in mass(), i in 0usize..=8, j in 0usize..=8) {
        prop_assume!(i != j);
        let params = Params::new(a, b, m, n_mass).unwrap();
        let ip = inner_product(&gen_jacobi(i, &params), &gen_jacobi(j, &params), &params);
        prop_assert!(ip.total.is_zero());
    }
}

#[test]
fn report_survives_json() {
    let grid = GridConfig {
        alpha_max: 1,
        beta_max: 1,
        nmax: 4,
        masses_neg: vec![rat(0), frac(1, 3)],
        masses_pos: vec![rat(2)],
        trials: 2,
        ..GridConfig::default()
    };
    let report = run_suite(Suite::All, &grid).unwrap();
    assert!(report.all_pass);
    let back: VerifyReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(back, report);
}

#[test]
fn reports_are_deterministic() {
    let grid = GridConfig {
        alpha_max: 1,
        beta_max: 0,
        nmax: 3,
        trials: 3,
        seed: 7,
        ..GridConfig::default()
    };
    let a = run_suite(Suite::Symmetry, &grid).unwrap();
    let b = run_suite(Suite::Symmetry, &grid).unwrap();
    assert_eq!(a, b);
}
