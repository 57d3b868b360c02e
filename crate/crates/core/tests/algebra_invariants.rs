use barut_core::algebra::conjugation::{majorana_unitary_block_form, wigner_theta, wigner_xi};
use barut_core::algebra::{build_gammas, majorana_unitary, ComplexMatrix4, Metric, Representation, I};
use proptest::prelude::*;

#[test]
fn clifford_for_every_representation_and_metric() {
    for rep in Representation::ALL {
        for metric in [Metric::Minkowski, Metric::Euclidean] {
            let g = build_gammas(rep, metric);
            assert!(g.clifford_defect() < 1e-12, "{rep:?} {metric:?}");
            assert!(g.gamma5_defect() < 1e-12);
            assert!(g.gamma5_product_defect() < 1e-12);
        }
    }
}

#[test]
fn representations_are_similar_to_chiral() {
    let base = build_gammas(Representation::Chiral, Metric::Minkowski);
    for rep in Representation::ALL {
        let t = rep.from_chiral();
        assert!(t.unitarity_defect() < 1e-14);
        let g = build_gammas(rep, Metric::Minkowski);
        for mu in 0..4 {
            assert!(g.mu[mu].distance(&(t * base.mu[mu] * t.dagger())) < 1e-14, "{rep:?} {mu}");
        }
    }
}

#[test]
fn minkowski_gamma5_is_the_ordered_product() {
    for rep in Representation::ALL {
        let g = build_gammas(rep, Metric::Minkowski);
        let product = g.mu[0] * g.mu[1] * g.mu[2] * g.mu[3] * I;
        assert!(product.distance(&g.five) < 1e-12);
    }
}

#[test]
fn euclidean_gammas_are_hermitian() {
    for rep in Representation::ALL {
        let g = build_gammas(rep, Metric::Euclidean);
        for m in g.mu {
            assert!(m.hermiticity_defect() < 1e-14);
        }
    }
}

#[test]
fn majorana_gammas_are_imaginary() {
    let g = build_gammas(Representation::Majorana, Metric::Minkowski);
    for m in g.mu {
        assert!(m.max_real_part() < 1e-12);
    }
    let chiral = build_gammas(Representation::Chiral, Metric::Minkowski);
    assert!(chiral.mu.iter().any(|m| m.max_real_part() > 0.5));
}

#[test]
fn block_form_is_normalized() {
    let block = majorana_unitary_block_form();
    let used = majorana_unitary();
    assert!(used.unitarity_defect() < 1e-14);
    let ratio = used.max_norm() / block.max_norm();
    assert!(used.distance(&(block * ratio)) < 1e-14);
}

proptest! {
    #[test]
    fn wigner_operators_unitary(phi in -10.0f64..10.0) {
        let xi = wigner_xi(phi);
        prop_assert!((xi * xi.dagger() - barut_core::algebra::Matrix2::identity()).max_norm() < 1e-14);
        let th = wigner_theta();
        prop_assert!((th * th.dagger() - barut_core::algebra::Matrix2::identity()).max_norm() < 1e-15);
    }

    #[test]
    fn slash_squares_to_mass_shell(p in prop::array::uniform4(-3.0f64..3.0)) {
        for rep in Representation::ALL {
            let g = build_gammas(rep, Metric::Minkowski);
            let s = g.slash_real(&p);
            let p2 = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
            prop_assert!((s * s).distance(&(ComplexMatrix4::identity() * p2)) < 1e-12);
        }
    }
}
