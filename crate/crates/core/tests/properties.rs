//! Module invariants beyond the numbered acceptance criteria:
//! Buchberger and elimination soundness, determinism, the Chow/index
//! consistency law, and certificate soundness on computable cases.

mod common;

use common::checked;
use curvestab::curves::{curve_ideal, implicitize, samples, substitute_param};
use curvestab::poly::{groebner_basis, initial_ideal, reduce, s_polynomial, MonomialOrder};
use curvestab::rational::{int, rat, Rat};
use curvestab::stability::{
    chow_index, hilbert_index_polynomial, instability_certificate, point_index,
    point_index_bound, AmbientConfig, ChowConvention, OnePS,
};
use curvestab::suite::paper_suite;

#[test]
fn buchberger_s_polynomials_reduce_to_zero() {
    checked(
        "every S-polynomial of a returned basis reduces to zero under that basis",
        || {
            let mut r = common::rng(0x5eed_0021);
            let mut systems: Vec<(Vec<_>, MonomialOrder)> = Vec::new();
            for _ in 0..8 {
                let ideal = common::random_binomial_ideal(&mut r);
                systems.push((ideal.generators().to_vec(), MonomialOrder::GrevLex));
                let w = common::to_rat_weights(&common::random_weights(&mut r));
                systems.push((ideal.generators().to_vec(), MonomialOrder::Weighted(w)));
            }
            let bridge = curve_ideal(&samples::c_star()).unwrap();
            systems.push((bridge.generators().to_vec(), MonomialOrder::GrevLex));

            for (gens, order) in systems {
                let basis = groebner_basis(&gens, &order);
                for i in 0..basis.len() {
                    for j in i + 1..basis.len() {
                        let s = s_polynomial(&basis[i], &basis[j], &order);
                        assert!(
                            reduce(&s, &basis, &order).is_zero(),
                            "S-polynomial of elements {i}, {j} does not reduce to zero"
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn elimination_output_vanishes_on_the_parametrization() {
    checked(
        "generators of every implicitized ideal vanish under the parametrization",
        || {
            for model in [samples::c_star(), samples::one_tacnode()] {
                for component in &model.components {
                    let param = component.param.as_ref().expect("sample components are parametrized");
                    let ideal = implicitize(param).unwrap();
                    for g in ideal.generators() {
                        assert!(
                            substitute_param(g, param).is_zero(),
                            "nonzero pullback of an eliminated generator"
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn groebner_and_reports_are_deterministic() {
    checked("identical inputs give bit-identical outputs", || {
        let mut r = common::rng(0x5eed_0022);
        for _ in 0..5 {
            let ideal = common::random_binomial_ideal(&mut r);
            let order = MonomialOrder::Weighted(common::to_rat_weights(&common::random_weights(
                &mut r,
            )));
            let first = groebner_basis(ideal.generators(), &order);
            let second = groebner_basis(ideal.generators(), &order);
            assert_eq!(first, second);
        }
        assert_eq!(paper_suite(None).render_json(), paper_suite(None).render_json());
        assert_eq!(paper_suite(None).render_text(), paper_suite(None).render_text());
    });
}

#[test]
fn chow_leading_matches_the_quadratic_coefficient() {
    checked(
        "chow_index(leading) equals the m^2 coefficient of the index polynomial",
        || {
            let cfg = AmbientConfig::default();
            let cases = [
                (curve_ideal(&samples::c_star()).unwrap(), [3i64, -2, -7, 3, 3]),
                (curve_ideal(&samples::one_tacnode()).unwrap(), [0, 2, 3, 4, 2]),
            ];
            for (ideal, weights) in &cases {
                for rho in [OnePS::new(*weights), OnePS::new(*weights).inverse()] {
                    let poly = hilbert_index_polynomial(ideal, &rho, 3..=9, &cfg).unwrap();
                    let leading =
                        chow_index(ideal, &rho, ChowConvention::Leading, 3..=9, &cfg).unwrap();
                    assert_eq!(leading, poly.coeff(2), "weights {:?}", rho.gl_weights());
                }
            }
        },
    );
}

#[test]
fn certificate_bounds_the_computed_chow_index() {
    checked(
        "certificate with index-derived e-bound dominates the exact combined Chow index",
        || {
            let cfg = AmbientConfig::default();
            let ideal = curve_ideal(&samples::c_star()).unwrap();
            let point = vec![int(1), int(0), int(0), int(1), int(1)];
            for rho in [OnePS::new([3, -2, -7, 3, 3]), OnePS::new([3, -2, -7, 3, 3]).inverse()] {
                let chow = chow_index(&ideal, &rho, ChowConvention::Doubled, 3..=9, &cfg).unwrap();
                // e-bound chosen so that -e + (2d/(N+1)) sum(gl)
                // reproduces the Chow curve part exactly
                let e_derived = rat(2 * cfg.degree, cfg.n_plus_1) * int(rho.sum_gl()) - &chow;
                let certificate = instability_certificate(&rho, &e_derived, true, None, &cfg);
                let combined = &chow + rat(4, 3) * point_index(&point, &rho);
                assert!(
                    certificate >= combined,
                    "certificate {certificate} below combined index {combined}"
                );
                assert!(point_index_bound(&rho) >= point_index(&point, &rho));
            }
        },
    );
}

#[test]
fn degenerate_one_ps_gives_all_zero_indices() {
    checked("all-equal weights yield zero indices everywhere", || {
        let cfg = AmbientConfig::default();
        let ideal = curve_ideal(&samples::c_star()).unwrap();
        let rho = OnePS::new([4, 4, 4, 4, 4]);
        assert!(rho.sl_weights().iter().all(|w| w == &int(0)));
        let poly = hilbert_index_polynomial(&ideal, &rho, 3..=9, &cfg).unwrap();
        assert!(poly.is_zero());
        assert_eq!(point_index_bound(&rho), int(0));
    });
}

#[test]
fn initial_ideal_preserves_every_graded_dimension() {
    checked(
        "passing to an initial ideal preserves graded dimensions of the curve quotients",
        || {
            let zero: Vec<Rat> = vec![int(0); 5];
            for model in [samples::c_star(), samples::one_tacnode()] {
                let ideal = curve_ideal(&model).unwrap();
                let grevlex_init = initial_ideal(&ideal, &zero);
                let destabilizing =
                    initial_ideal(&ideal, &common::to_rat_weights(&[3, -2, -7, 3, 3]));
                for m in 1..=6u32 {
                    assert_eq!(
                        curvestab::poly::hilbert_function(&grevlex_init, m),
                        curvestab::poly::hilbert_function(&destabilizing, m)
                    );
                }
            }
        },
    );
}
