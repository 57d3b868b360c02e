use barut_core::algebra::{majorana_unitary, Spinor};
use barut_core::barut::{second_order_spectrum_in, BarutParams};
use barut_core::majorana::{from_majorana, lattice_points, real_plane_wave, recombine, split_equations, to_majorana, MajoranaSplit};
use barut_core::algebra::Representation;
use num_complex::Complex64;
use proptest::prelude::*;

fn spinor() -> impl Strategy<Value = Spinor> {
    prop::array::uniform4((-5.0f64..5.0, -5.0f64..5.0)).prop_map(|a| a.map(|(x, y)| Complex64::new(x, y)))
}

proptest! {
    #[test]
    fn round_trip(psi in spinor()) {
        let u = majorana_unitary();
        let back = from_majorana(&to_majorana(&psi, &u).unwrap(), &u).unwrap();
        for k in 0..4 {
            prop_assert!((back[k] - psi[k]).norm() < 1e-14 * (1.0 + psi[k].norm()));
        }
    }

    #[test]
    fn realness_depends_on_basis(a in 0.2f64..3.0, b in 0.05f64..0.95, m in 0.2f64..5.0) {
        let p = BarutParams::new(a, b, m).unwrap();
        prop_assert!(split_equations(&p, Representation::Majorana).unwrap().max_imag < 1e-12);
        prop_assert!(split_equations(&p, Representation::Chiral).unwrap().max_imag > 1e-3);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn split_waves_recombine(a in 0.5f64..2.0, b in 0.05f64..0.9, m in 0.3f64..3.0, k in prop::array::uniform3(-1.0f64..1.0)) {
        let p = BarutParams::new(a, b, m).unwrap();
        let eqs = split_equations(&p, Representation::Majorana).unwrap();
        let split = MajoranaSplit {
            psi1: vec![real_plane_wave(&eqs.first, k, m * (1.0 + b) / a, 0, Complex64::new(0.4, 0.3)).unwrap()],
            psi2: vec![real_plane_wave(&eqs.second, k, m * (1.0 - b) / a, 1, Complex64::new(-0.2, 0.6)).unwrap()],
        };
        let r = recombine(&split, &p, &lattice_points(3, 0.41)).unwrap();
        let scale = (1.0 + a / m * 4.0).powi(2);
        prop_assert!(r.residual() < 1e-10 * scale, "{:?}", r);
    }
}

#[test]
fn spectrum_same_in_majorana_basis() {
    let p = BarutParams::new(1.3, 0.45, 0.8).unwrap();
    let x = second_order_spectrum_in(&p, Representation::Chiral).unwrap();
    let y = second_order_spectrum_in(&p, Representation::Majorana).unwrap();
    for (s, t) in x.masses.iter().zip(&y.masses) {
        assert!((s.numeric - t.numeric).abs() < 1e-10);
        assert_eq!(s.multiplicity, t.multiplicity);
    }
}
