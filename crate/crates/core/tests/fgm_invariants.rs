use barut_core::algebra::{Metric, Representation};
use barut_core::barut::{superposition_operator, BarutParams, CanonicalParams};
use barut_core::fgm::{barut_decomposition, fgm_apply, gamma5_structure, squared_dirac_identity, EMField, TestFunction};
use barut_core::algebra::dense::{null_space, to_dynamic};
use barut_core::fourvec::FourVector;
use num_complex::Complex64;
use proptest::prelude::*;

fn field() -> impl Strategy<Value = EMField> {
    (0.0f64..1.0, prop::array::uniform4(-0.5f64..0.5), prop::array::uniform6(-1.0f64..1.0)).prop_map(|(e, a, w)| {
        let mut f = [[0.0; 4]; 4];
        let mut k = 0;
        for mu in 0..4 {
            for nu in mu + 1..4 {
                f[mu][nu] = w[k];
                f[nu][mu] = -w[k];
                k += 1;
            }
        }
        EMField::uniform(e, a, f).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn identity_holds_in_every_representation(f in field(), m in 0.3f64..3.0) {
        for rep in Representation::ALL {
            prop_assert!(squared_dirac_identity(&f, m, rep) < 1e-10);
        }
        let c = EMField::constant(f.e, f.a);
        prop_assert!(squared_dirac_identity(&c, m, Representation::Chiral) < 1e-10);
    }

    #[test]
    fn chirality_preserved(f in field(), m in 0.3f64..3.0) {
        prop_assert!(gamma5_structure(&f, m, Representation::Chiral).unwrap().max_defect() < 1e-10);
    }
}

proptest! {
    #[test]
    fn decomposition_is_exact(alpha2 in 0.0f64..3.0, kappa in -3.0f64..3.0, m in 0.1f64..5.0) {
        let r = barut_decomposition(&CanonicalParams { alpha2, kappa }, m, Representation::Chiral).unwrap();
        prop_assert_eq!(r.exact_residual, 0.0);
    }
}

#[test]
fn free_operator_on_barut_null_mode() {
    let p = BarutParams::new(1.1, 0.35, 0.9).unwrap();
    let op = superposition_operator(&p, Representation::Chiral, Metric::Minkowski);
    let m = 1.4;
    for mi in [p.m * (1.0 + p.b) / p.a, p.m * (1.0 - p.b) / p.a] {
        let k = [0.2, -0.1, 0.3];
        let four = FourVector::on_shell(k, mi).unwrap();
        let w = null_space(&to_dynamic(&op.eval_at(&four)), 1e-9);
        let w = std::array::from_fn(|i| w[0][i]);
        let pw = [four.components[0].re, k[0], k[1], k[2]];
        let psi = TestFunction::plane_wave(pw, w);
        let out = fgm_apply(&EMField::free(), m, &psi, Representation::Chiral);
        let expected = psi.scale(Complex64::new(mi * mi - m * m, 0.0));
        let x = [0.3, 0.1, -0.2, 0.5];
        let (a, b) = (out.value(&x), expected.value(&x));
        for i in 0..4 {
            assert!((a[i] - b[i]).norm() < 1e-12);
        }
    }
}
