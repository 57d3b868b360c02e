use barut_core::algebra::{Metric, Representation};
use barut_core::barut::{
    closed_form_masses, superposition_operator, factorization_defect, lepton_table, muon_mass, null_dimensions, param_map,
    param_map_inverse, second_order_spectrum, second_order_spectrum_in, tau_mass_with, third_order_operator, BarutParams,
    Branch,
};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = BarutParams> {
    (0.1f64..3.0, 0.0f64..0.99, 0.1f64..10.0).prop_map(|(a, b, m)| BarutParams::new(a, b, m).unwrap())
}

fn masses(p: &BarutParams) -> Vec<f64> {
    let mut v: Vec<f64> = second_order_spectrum(p).unwrap().masses.iter().map(|s| s.numeric).collect();
    v.sort_by(f64::total_cmp);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_matches_closed_form(p in params()) {
        let r = second_order_spectrum(&p).unwrap();
        prop_assert!(r.max_relative_error() < 1e-10, "{:?}", r);
        prop_assert_eq!(r.total_roots(), 8);
    }

    #[test]
    fn four_null_directions_per_mass(p in params(), k in prop::array::uniform3(-1.0f64..1.0)) {
        let op = superposition_operator(&p, Representation::Chiral, Metric::Minkowski);
        for m in closed_form_masses(&p) {
            prop_assume!(m > 1e-6);
            let [pos, neg] = null_dimensions(&op, k, m, 1e-8);
            prop_assert_eq!(pos + neg, 4);
        }
    }

    #[test]
    fn factorization_identity(p in params()) {
        for rep in Representation::ALL {
            prop_assert!(factorization_defect(&p, rep, Metric::Minkowski) < 1e-12 * (1.0 + (p.a / p.m).powi(2)));
        }
    }

    #[test]
    fn parameter_map_preserves_spectrum(p in params()) {
        let back = param_map_inverse(&param_map(&p).unwrap(), p.m).unwrap();
        let (x, y) = (masses(&p), masses(&back));
        for (u, v) in x.iter().zip(&y) {
            prop_assert!((u - v).abs() <= 1e-10 * u.abs().max(1.0));
        }
    }

    #[test]
    fn spectrum_is_representation_independent(p in params()) {
        let base = masses(&p);
        for rep in [Representation::DiracStandard, Representation::Majorana] {
            let mut other: Vec<f64> = second_order_spectrum_in(&p, rep).unwrap().masses.iter().map(|s| s.numeric).collect();
            other.sort_by(f64::total_cmp);
            for (u, v) in base.iter().zip(&other) {
                prop_assert!((u - v).abs() <= 1e-10 * u.abs().max(1.0));
            }
        }
    }

    #[test]
    fn single_term_tau_is_muon(me in 0.01f64..10.0, inv in 50.0f64..300.0) {
        prop_assert_eq!(tau_mass_with(me, 1.0 / inv, &[1]).unwrap(), muon_mass(me, 1.0 / inv).unwrap());
    }
}

#[test]
fn dirac_limit_is_degenerate() {
    let r = second_order_spectrum(&BarutParams::new(1.0, 0.0, 1.0).unwrap()).unwrap();
    assert_eq!(r.masses.len(), 1);
    assert_eq!(r.masses[0].multiplicity, 8);
}

#[test]
fn split_masses() {
    let r = second_order_spectrum(&BarutParams::new(1.0, 0.5, 1.0).unwrap()).unwrap();
    let mut m: Vec<f64> = r.masses.iter().map(|s| s.mass).collect();
    m.sort_by(f64::total_cmp);
    assert!((m[0] - 0.5).abs() < 1e-12 && (m[1] - 1.5).abs() < 1e-12);
}

#[test]
fn every_third_order_branch_factorizes() {
    let p = BarutParams::third_order(1.0, 0.0, 0.3, 0.2, 1.0).unwrap();
    for b in Branch::ALL {
        assert!(third_order_operator(&p, b).unwrap().product_defect < 1e-12, "{}", b.label());
    }
    let t = third_order_operator(&p, Branch { s1: 1, s2: 1 }).unwrap();
    assert_eq!(t.distinct.len(), 3);
    for (x, y) in t.distinct.iter().zip([0.7, 1.3, 1.5]) {
        assert!((x - y).abs() < 1e-8);
    }
}

#[test]
fn historical_constants_give_tau() {
    let t = lepton_table(0.511, 1.0 / 137.03).unwrap();
    assert!((t.tau - 1786.08).abs() < 0.02);
    assert!((t.muon - 105.55).abs() < 0.01);
    let modern = lepton_table(0.511, 1.0 / 137.0359895).unwrap();
    assert!((modern.tau - 1786.16).abs() < 0.01);
}
