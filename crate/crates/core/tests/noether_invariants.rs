use barut_core::noether::{euler_lagrange_residual, invariants, mode_hamiltonian_coefficient, quadrature, LagrangianParams, Mode, ModeSet};
use num_complex::Complex64;
use proptest::prelude::*;

fn amplitude() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(x, y)| Complex64::new(x, y))
}

fn mode() -> impl Strategy<Value = Mode> {
    (prop::array::uniform3(-2i32..=2), prop::bool::ANY, amplitude(), amplitude())
        .prop_map(|(n, up, a, b)| Mode { n, h: if up { 0.5 } else { -0.5 }, a, b, mass: None })
}

fn on_shell() -> impl Strategy<Value = (LagrangianParams, ModeSet)> {
    (0.5f64..2.0, 0.2f64..1.0, -0.4f64..0.4, -1.0f64..1.0, 6.0f64..12.0, prop::collection::vec(mode(), 1..=3)).prop_map(
        |(m, r, a2, a3, l, modes)| {
            let a1 = Complex64::new(0.0, r);
            let a4 = LagrangianParams::on_shell_alpha4(a1, a2, m).re;
            (LagrangianParams::new(a1, a2, a3, a4), ModeSet { l, m, modes })
        },
    )
}

fn scale(r: &barut_core::noether::InvariantReport) -> (f64, f64) {
    (r.hamiltonian_terms.iter().map(|z| z.norm()).sum::<f64>().max(1e-300), r.charge_terms.iter().map(|z| z.norm()).sum::<f64>().max(1e-300))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn conserved_in_time((p, set) in on_shell(), t in 0.1f64..5.0) {
        let a = invariants(&p, &set, 0.0).unwrap();
        let b = invariants(&p, &set, t).unwrap();
        let (hs, qs) = scale(&a);
        prop_assert!((a.hamiltonian - b.hamiltonian).norm() < 1e-10 * hs);
        prop_assert!((a.charge - b.charge).norm() < 1e-10 * qs);
    }

    #[test]
    fn factorizes_through_mode_coefficients((p, set) in on_shell()) {
        let r = invariants(&p, &set, 0.0).unwrap();
        let (hs, qs) = scale(&r);
        prop_assert!((r.hamiltonian - r.hamiltonian_mode_sum).norm() < 1e-10 * hs);
        prop_assert!((r.charge - r.charge_mode_sum).norm() < 1e-10 * qs);
        prop_assert!(r.charge_terms[2].norm() < 1e-10 * qs);
    }

    #[test]
    fn quadratic_in_amplitudes((p, set) in on_shell(), c in amplitude()) {
        prop_assume!(c.norm() > 0.1);
        let a = invariants(&p, &set, 0.3).unwrap();
        let b = invariants(&p, &set.scaled(c), 0.3).unwrap();
        let (hs, qs) = scale(&a);
        prop_assert!((b.hamiltonian - a.hamiltonian * c.norm_sqr()).norm() < 1e-12 * hs * c.norm_sqr());
        prop_assert!((b.charge - a.charge * c.norm_sqr()).norm() < 1e-12 * qs * c.norm_sqr());
    }

    #[test]
    fn alpha3_leaves_field_equation_alone((p, set) in on_shell(), a3 in -3.0f64..3.0) {
        let q = LagrangianParams { alpha3: a3, ..p };
        let r1 = euler_lagrange_residual(&p, &set, 0.2, 4).unwrap();
        let r2 = euler_lagrange_residual(&q, &set, 0.2, 4).unwrap();
        prop_assert!(r1 < 1e-12 && (r1 - r2).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn quadrature_agrees_with_closed_form((p, set) in on_shell()) {
        let r = invariants(&p, &set, 0.7).unwrap();
        let (h, q) = quadrature(&p.euclidean(), &set, 0.7, 32).unwrap();
        let (hs, qs) = scale(&r);
        prop_assert!((h.iter().sum::<Complex64>() - r.hamiltonian).norm() < 1e-8 * hs);
        prop_assert!((q.iter().sum::<Complex64>() - r.charge).norm() < 1e-8 * qs);
    }
}

#[test]
fn empty_set_is_zero() {
    let r = invariants(&LagrangianParams::dirac(1.0), &ModeSet::new(4.0, 1.0, vec![]).unwrap(), 0.0).unwrap();
    assert_eq!(r.hamiltonian, Complex64::new(0.0, 0.0));
    assert_eq!(r.charge, Complex64::new(0.0, 0.0));
}

#[test]
fn dirac_mode_energy() {
    let p = LagrangianParams::dirac(1.0);
    let set = ModeSet::new(6.0, 1.0, vec![Mode { n: [0, 1, 0], h: -0.5, a: Complex64::new(0.8, 0.0), b: Complex64::new(0.0, 0.0), mass: None }]).unwrap();
    let r = invariants(&p, &set, 0.0).unwrap();
    let k = 2.0 * std::f64::consts::PI / 6.0;
    let e = p.euclidean();
    let coeff = mode_hamiltonian_coefficient(e.alpha1, e.alpha2, [0.0, k, 0.0], 1.0);
    let expected = coeff * 0.64 / 216.0;
    assert!((r.hamiltonian - expected).norm() < 1e-14, "{} {}", r.hamiltonian, expected);
    assert!((r.hamiltonian.re - (k * k + 1.0) * 0.64 / 216.0).abs() < 1e-14);
}

#[test]
fn json_round_trip() {
    let js = r#"{"L": 8.0, "m": 1.0, "modes": [{"n": [1, 0, -1], "h": -0.5, "a": [0.5, 0.1], "b": [0.0, 0.0]}]}"#;
    let set: ModeSet = serde_json::from_str(js).unwrap();
    let again: ModeSet = serde_json::from_str(&serde_json::to_string(&set).unwrap()).unwrap();
    assert_eq!(set, again);
}
