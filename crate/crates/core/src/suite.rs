//! Built-in regression suite: every externally recorded anchor value,
//! keyed by its source location, executed with exact arithmetic and
//! reported with match / mismatch / documented-deviation verdicts.
//!
//! Three anchors are flagged as open questions: the recorded values
//! could not be reproduced under the stated conventions, and the suite
//! displays both the recorded and the computed value for each.

use crate::curves::{classify, curve_ideal, samples};
use crate::divisors::{
    affine_lincomb, cone_membership, hs_pullback, normal_form, polarization_class,
    printed_epsilon, proportional, vital_constraints, vital_intersection, DivisorClass,
    SpaceName, Symbol, VitalData,
};
use crate::poly::{hilbert_function, initial_ideal, weighted_basis_sum, Ideal};
use crate::rational::{fmt_rat, int, rat, Rat};
use crate::report::{Report, TaskRecord, Verdict};
use crate::scenario::{verdict_string, Value};
use crate::stability::{
    balanced_index, chow_combined_index, chow_index, hilbert_index, hilbert_index_polynomial,
    instability_certificate, point_index, point_index_bound, sl_normalize, versal_weights,
    AmbientConfig, ChowConvention, OnePS,
};
use crate::unipoly::UniPoly;

struct SuiteBuilder {
    report: Report,
    filter: Option<String>,
}

impl SuiteBuilder {
    fn new(filter: Option<&str>) -> Self {
        SuiteBuilder {
            report: Report::new(),
            filter: filter.map(str::to_string),
        }
    }

    fn wants(&self, module: &str) -> bool {
        self.filter.as_deref().map_or(true, |f| f == module)
    }

    /// Anchor that is expected to reproduce exactly.
    fn anchor(&mut self, module: &str, key: &str, inputs: &str, computed: Value, expected: Value) {
        if !self.wants(module) {
            return;
        }
        let verdict = if computed == expected {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        self.report.push(TaskRecord {
            key: key.to_string(),
            module: module.to_string(),
            inputs: inputs.to_string(),
            computed: computed.render(),
            expected: Some(expected.render()),
            verdict,
            note: None,
        });
    }

    /// Open-question anchor: the recorded value is known not to
    /// reproduce; both values are always displayed. A mismatch is the
    /// documented deviation; agreement would be a suite error
    /// (reported as mismatch so it cannot masquerade as a pass).
    fn deviation(
        &mut self,
        module: &str,
        key: &str,
        question: &str,
        inputs: &str,
        computed: Value,
        recorded: Value,
    ) {
        if !self.wants(module) {
            return;
        }
        let verdict = if computed == recorded {
            Verdict::Mismatch
        } else {
            Verdict::DocumentedDeviation
        };
        self.report.push(TaskRecord {
            key: key.to_string(),
            module: module.to_string(),
            inputs: inputs.to_string(),
            computed: computed.render(),
            expected: Some(recorded.render()),
            verdict,
            note: Some(format!(
                "open question {question}: recorded {} vs computed {}",
                recorded.render(),
                computed.render()
            )),
        });
    }

    /// Anchor whose computation failed outright.
    fn failure(&mut self, module: &str, key: &str, inputs: &str, err: &crate::Error) {
        if !self.wants(module) {
            return;
        }
        self.report.push(TaskRecord {
            key: key.to_string(),
            module: module.to_string(),
            inputs: inputs.to_string(),
            computed: format!("error: {err}"),
            expected: None,
            verdict: Verdict::Mismatch,
            note: None,
        });
    }
}

fn poly(coeffs: &[i64]) -> Value {
    Value::Poly(UniPoly::from_ints(coeffs))
}

fn rlist(v: Vec<Rat>) -> Value {
    Value::List(v)
}

fn class_value(c: &DivisorClass) -> Value {
    Value::Verdict(c.to_string())
}

/// Runs the complete built-in anchor set, optionally restricted to one
/// module name.
pub fn paper_suite(filter: Option<&str>) -> Report {
    let mut b = SuiteBuilder::new(filter);
    let cfg = AmbientConfig::default();

    // the two embedded models and their ideals, shared across anchors
    let c_star = samples::c_star();
    let one_tac = samples::one_tacnode();
    let i_star = curve_ideal(&c_star).expect("tacnodal bridge model is embeddable");
    let i_tac = curve_ideal(&one_tac).expect("one-tacnode model is embeddable");
    let rho = OnePS::new([3, -2, -7, 3, 3]);
    let rho_tac = OnePS::new([0, 2, 3, 4, 2]);
    let marked: Vec<Rat> = [1, 0, 0, 1, 1].iter().map(|&c| int(c)).collect();

    polynomial_algebra_anchors(&mut b, &i_star, &rho);
    curve_models_anchors(&mut b, &c_star, &i_star, &i_tac);
    git_stability_anchors(&mut b, &cfg, &i_star, &i_tac, &rho, &rho_tac, &marked);
    divisor_calculus_anchors(&mut b);

    b.report
}

fn polynomial_algebra_anchors(b: &mut SuiteBuilder, i_star: &Ideal, rho: &OnePS) {
    let module = "polynomial_algebra";
    let zero_w = vec![int(0); 5];
    let init = initial_ideal(i_star, &zero_w);
    b.anchor(
        module,
        "S2:hilbert-function-m3",
        "standard monomials of the bridge initial ideal at m=3",
        Value::Rat(int(hilbert_function(&init, 3))),
        Value::Rat(int(17)),
    );

    let samples_lin: Vec<(i64, Rat)> = (2..=6).map(|m| (m, int(6 * m - 1))).collect();
    match crate::unipoly::interpolate_stable_polynomial(&samples_lin, 1) {
        Ok(p) => b.anchor(
            module,
            "S2:interpolate-hilbert",
            "interpolation of 6m-1 samples, m=2..6, bound 1",
            Value::Poly(p),
            poly(&[-1, 6]),
        ),
        Err(e) => b.failure(module, "S2:interpolate-hilbert", "interpolation", &e),
    }

    let samples_quad: Vec<(i64, Rat)> =
        (3..=8).map(|m| (m, int(2 * m * m - 7 * m + 5))).collect();
    match crate::unipoly::interpolate_stable_polynomial(&samples_quad, 2) {
        Ok(p) => b.anchor(
            module,
            "P:eb-special:interpolate",
            "interpolation of 2m^2-7m+5 samples, m=3..8, bound 2",
            Value::Poly(p),
            poly(&[5, -7, 2]),
        ),
        Err(e) => b.failure(module, "P:eb-special:interpolate", "interpolation", &e),
    }

    // weighted basis sums under the destabilizing weights: with
    // weight-sum zero the index is minus the weighted basis sum, so the
    // sums must run through -(2m^2-7m+5) for m = 2..8
    let gl: Vec<Rat> = rho.gl_weights().iter().map(|&w| int(w)).collect();
    let winit = initial_ideal(i_star, &gl);
    let computed: Vec<Rat> = (2..=8)
        .map(|m| weighted_basis_sum(&winit, &gl, m as u32))
        .collect();
    let expected: Vec<Rat> = (2..=8i64).map(|m| int(-(2 * m * m - 7 * m + 5))).collect();
    b.anchor(
        module,
        "P:eb-special:weighted-basis-sums",
        "weighted basis sums of the bridge under (3,-2,-7,3,3), m=2..8",
        rlist(computed),
        rlist(expected),
    );
}

fn curve_models_anchors(
    b: &mut SuiteBuilder,
    c_star: &crate::curves::CurveModel,
    i_star: &Ideal,
    i_tac: &Ideal,
) {
    let module = "curve_models";
    match classify(c_star) {
        Ok(v) => b.anchor(
            module,
            "C:eb-Chow+C:eb-hilb:classification",
            "tacnodal elliptic bridge with generic marked point",
            Value::Verdict(verdict_string(&v)),
            Value::Verdict("c_semistable".into()),
        ),
        Err(e) => b.failure(module, "C:eb-Chow+C:eb-hilb:classification", "classify", &e),
    }
    match classify(&samples::ramphoid()) {
        Ok(v) => b.anchor(
            module,
            "ramphoid-lemma:classification",
            "irreducible curve with a ramphoid cusp",
            Value::Verdict(verdict_string(&v)),
            Value::Verdict("none".into()),
        ),
        Err(e) => b.failure(module, "ramphoid-lemma:classification", "classify", &e),
    }

    let zero_w = vec![int(0); 5];
    for (key, ideal, label) in [
        ("S2:c-star-hilbert", i_star, "tacnodal bridge"),
        ("L:onetac:hilbert", i_tac, "one-tacnode curve"),
    ] {
        let init = initial_ideal(ideal, &zero_w);
        let computed: Vec<Rat> = (2..=9)
            .map(|m| int(hilbert_function(&init, m as u32)))
            .collect();
        let expected: Vec<Rat> = (2..=9i64).map(|m| int(6 * m - 1)).collect();
        b.anchor(
            module,
            key,
            &format!("Hilbert function of the {label} ideal, m=2..9"),
            rlist(computed),
            rlist(expected),
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn git_stability_anchors(
    b: &mut SuiteBuilder,
    cfg: &AmbientConfig,
    i_star: &Ideal,
    i_tac: &Ideal,
    rho: &OnePS,
    rho_tac: &OnePS,
    marked: &[Rat],
) {
    let module = "git_stability";

    b.anchor(
        module,
        "smooth-point-lemma:sl-normalize",
        "(1,0,0,0,0)",
        rlist(sl_normalize(&[1, 0, 0, 0, 0])),
        rlist(vec![rat(4, 5), rat(-1, 5), rat(-1, 5), rat(-1, 5), rat(-1, 5)]),
    );
    b.anchor(
        module,
        "ramphoid-lemma:sl-normalize",
        "(5,3,1,0,0)",
        rlist(sl_normalize(&[5, 3, 1, 0, 0])),
        rlist(vec![rat(16, 5), rat(6, 5), rat(-4, 5), rat(-9, 5), rat(-9, 5)]),
    );

    for (key, m, want) in [
        ("P:eb-special:index-m3", 3, 2),
        ("P:eb-special:index-m5", 5, 20),
    ] {
        match hilbert_index(i_star, rho, m, cfg) {
            Ok(v) => b.anchor(
                module,
                key,
                &format!("bridge ideal, rho=(3,-2,-7,3,3), m={m}"),
                Value::Rat(v),
                Value::Rat(int(want)),
            ),
            Err(e) => b.failure(module, key, "hilbert_index", &e),
        }
    }

    match hilbert_index_polynomial(i_star, rho, 3..=9, cfg) {
        Ok(p) => b.anchor(
            module,
            "P:eb-special:index-polynomial",
            "bridge ideal, rho=(3,-2,-7,3,3), m=3..9",
            Value::Poly(p),
            poly(&[5, -7, 2]),
        ),
        Err(e) => b.failure(module, "P:eb-special:index-polynomial", "interpolation", &e),
    }

    match hilbert_index_polynomial(i_tac, rho_tac, 3..=9, cfg) {
        Ok(p) => b.deviation(
            module,
            "L:onetac:index-polynomial",
            "L:onetac-index",
            "one-tacnode ideal, rho=(0,2,3,4,2), m=3..9",
            Value::Poly(p),
            poly(&[0, 4, -4]),
        ),
        Err(e) => b.failure(module, "L:onetac:index-polynomial", "interpolation", &e),
    }

    b.anchor(
        module,
        "S4:point-index-generic",
        "generic point of the bridge spine, rho=(3,-2,-7,3,3)",
        Value::Rat(point_index(marked, rho)),
        Value::Rat(int(-3)),
    );
    let origin: Vec<Rat> = [1, 0, 0, 0, 0].iter().map(|&c| int(c)).collect();
    b.anchor(
        module,
        "smooth-point-lemma:point-index",
        "p=[1,0,0,0,0], rho=(1,0,0,0,0)",
        Value::Rat(point_index(&origin, &OnePS::new([1, 0, 0, 0, 0]))),
        Value::Rat(rat(-4, 5)),
    );
    b.anchor(
        module,
        "ramphoid-lemma:point-bound",
        "rho=(5,3,1,0,0)",
        Value::Rat(point_index_bound(&OnePS::new([5, 3, 1, 0, 0]))),
        Value::Rat(rat(9, 5)),
    );
    b.anchor(
        module,
        "multiple-component-lemma:point-bound",
        "rho=(3,2,1,0,0)",
        Value::Rat(point_index_bound(&OnePS::new([3, 2, 1, 0, 0]))),
        Value::Rat(rat(6, 5)),
    );

    match balanced_index(i_star, marked, rho, 3, cfg) {
        Ok(v) => b.anchor(
            module,
            "E:eb-hilb:balanced-m3",
            "bridge with marked point, rho, m=3",
            Value::Rat(v),
            Value::Rat(int(-16)),
        ),
        Err(e) => b.failure(module, "E:eb-hilb:balanced-m3", "balanced_index", &e),
    }
    let balanced_poly = |r: &OnePS| -> crate::Result<UniPoly> {
        let mut samples = Vec::new();
        for m in 3..=9 {
            samples.push((m, balanced_index(i_star, marked, r, m, cfg)?));
        }
        crate::unipoly::interpolate_stable_polynomial(&samples, 2)
    };
    match balanced_poly(rho) {
        Ok(p) => b.anchor(
            module,
            "E:eb-hilb:balanced-polynomial",
            "bridge with marked point, rho, m=3..9",
            Value::Poly(p),
            poly(&[5, -7]),
        ),
        Err(e) => b.failure(module, "E:eb-hilb:balanced-polynomial", "interpolation", &e),
    }
    match balanced_poly(&rho.inverse()) {
        Ok(p) => b.anchor(
            module,
            "S4:balanced-inverse-polynomial",
            "bridge with marked point, rho inverse, m=3..9",
            Value::Poly(p),
            poly(&[-5, 7]),
        ),
        Err(e) => b.failure(module, "S4:balanced-inverse-polynomial", "interpolation", &e),
    }

    match chow_index(i_star, rho, ChowConvention::Doubled, 3..=9, cfg) {
        Ok(v) => b.anchor(
            module,
            "C:eb-Chow:curve-part",
            "bridge ideal, rho, doubled convention",
            Value::Rat(v),
            Value::Rat(int(4)),
        ),
        Err(e) => b.failure(module, "C:eb-Chow:curve-part", "chow_index", &e),
    }
    for (key, r, label) in [
        ("C:eb-Chow:combined", rho.clone(), "rho"),
        ("C:eb-Chow:combined-inverse", rho.inverse(), "rho inverse"),
    ] {
        match chow_combined_index(i_star, marked, &r, ChowConvention::Doubled, 3..=9, cfg) {
            Ok(v) => b.anchor(
                module,
                key,
                &format!("bridge with marked point, {label}, doubled convention"),
                Value::Rat(v),
                Value::Rat(int(0)),
            ),
            Err(e) => b.failure(module, key, "chow_combined_index", &e),
        }
    }

    match chow_index(i_tac, rho_tac, ChowConvention::Leading, 3..=9, cfg) {
        Ok(v) => b.deviation(
            module,
            "L:onetac:chow",
            "L:onetac-chow",
            "one-tacnode ideal, rho=(0,2,3,4,2), leading convention",
            Value::Rat(v),
            Value::Rat(int(-4)),
        ),
        Err(e) => b.failure(module, "L:onetac:chow", "chow_index", &e),
    }

    for (key, weights, e, bound, want) in [
        ("smooth-point-lemma:certificate", [1i64, 0, 0, 0, 0], int(2), rat(-4, 5), rat(-2, 3)),
        ("triple-point-lemma:certificate", [1, 0, 0, 0, 0], int(3), rat(1, 5), rat(-1, 3)),
        ("ramphoid-lemma:certificate", [5, 3, 1, 0, 0], int(25), rat(9, 5), int(-1)),
        ("multiple-component-lemma:certificate", [3, 2, 1, 0, 0], int(18), rat(6, 5), int(-2)),
    ] {
        let got = instability_certificate(&OnePS::new(weights), &e, true, Some(&bound), cfg);
        b.anchor(
            module,
            key,
            &format!(
                "rho={weights:?}, e-bound {}, point bound {}",
                fmt_rat(&e),
                fmt_rat(&bound)
            ),
            Value::Rat(got),
            Value::Rat(want),
        );
    }

    use crate::curves::SingularityKind;
    for (key, kind, wx, wy, want) in [
        (
            "S5:versal-tacnode",
            SingularityKind::Tacnode,
            int(5),
            int(10),
            vec![int(10), int(15), int(20)],
        ),
        (
            "S5:versal-node",
            SingularityKind::Node,
            int(-5),
            int(0),
            vec![int(-5)],
        ),
        (
            "S5:versal-cusp",
            SingularityKind::Cusp,
            int(2),
            int(3),
            vec![int(4), int(6)],
        ),
    ] {
        match versal_weights(kind, &wx, &wy) {
            Ok(w) => b.anchor(
                module,
                key,
                &format!("{} with wt_x={}, wt_y={}", kind.name(), fmt_rat(&wx), fmt_rat(&wy)),
                rlist(w),
                rlist(want),
            ),
            Err(e) => b.failure(module, key, "versal_weights", &e),
        }
    }
}

fn divisor_calculus_anchors(b: &mut SuiteBuilder) {
    let module = "divisor_calculus";
    let m21 = |pairs: &[(Symbol, Rat)]| DivisorClass::from_pairs(SpaceName::M21Bar, pairs);

    // relation rewriting in the pointed Picard group, at eps = 1/100
    let e = rat(1, 100);
    let chain_input = m21(&[
        (Symbol::Lambda, int(10) - &e),
        (Symbol::DeltaIrr, int(-1)),
        (Symbol::Delta11, int(-1)),
        (Symbol::Psi, int(1)),
    ]);
    match normal_form(&chain_input, &[Symbol::Delta11]) {
        Ok(nf) => {
            b.anchor(
                module,
                "P:Y:normal-form",
                "(10-eps)lambda - delta_irr - delta_11 + psi at eps=1/100, eliminate delta_11",
                class_value(&nf),
                class_value(&m21(&[
                    (Symbol::Lambda, int(5) - &e),
                    (Symbol::DeltaIrr, rat(-1, 2)),
                    (Symbol::Psi, int(1)),
                ])),
            );
            b.anchor(
                module,
                "P:Y:doubled-chain",
                "twice the rewritten class",
                class_value(&nf.scale(&int(2))),
                class_value(&m21(&[
                    (Symbol::Lambda, int(10) - int(2) * &e),
                    (Symbol::DeltaIrr, int(-1)),
                    (Symbol::Psi, int(2)),
                ])),
            );
        }
        Err(err) => b.failure(module, "P:Y:normal-form", "normal_form", &err),
    }

    // proportionality of the Chow pullback
    let nine_lambda_minus_delta = DivisorClass::single(SpaceName::M4Bar, Symbol::Lambda, int(9))
        .sub(&DivisorClass::total_boundary());
    let target = DivisorClass::log_canonical(&rat(5, 9));
    b.anchor(
        module,
        "E:chowpullback:proportional",
        "9*lambda - delta vs K + (5/9)*delta",
        Value::Verdict(
            proportional(&nine_lambda_minus_delta, &target)
                .map(|c| fmt_rat(&c))
                .unwrap_or_else(|| "none".into()),
        ),
        Value::Verdict("9/13".into()),
    );

    // pullback at alpha = 2/3 lands on the stated ray
    let pullback = hs_pullback(&rat(2, 3));
    b.anchor(
        module,
        "S3.2:pullback-two-thirds",
        "pullback of the adjusted class at alpha=2/3",
        class_value(&pullback),
        class_value(&m21(&[
            (Symbol::Lambda, int(13)),
            (Symbol::DeltaIrr, rat(-4, 3)),
            (Symbol::Psi, rat(4, 3)),
            (Symbol::Delta11, int(-3)),
        ])),
    );
    let ray = m21(&[
        (Symbol::DeltaIrr, int(-1)),
        (Symbol::Delta11, int(-12)),
        (Symbol::Psi, int(40)),
    ]);
    b.anchor(
        module,
        "S3.2:pullback-ray-factor",
        "pullback at alpha=2/3 vs -delta_irr - 12*delta_11 + 40*psi",
        Value::Verdict(
            proportional(&pullback, &ray)
                .map(|c| fmt_rat(&c))
                .unwrap_or_else(|| "none".into()),
        ),
        Value::Verdict("1/30".into()),
    );

    // the polarization family
    match polarization_class() {
        Ok(p) => {
            b.anchor(
                module,
                "clubsuit:coefficient-triple",
                "symbolic expansion of the polarization family",
                Value::Verdict(p.class.to_string()),
                Value::Verdict(
                    "(10/3*m^2 - 27/5*m + 1)*lambda + (-1/3*m^2 + 2/5*m)*delta_irr + (2/3*m^2 - 4/5*m)*psi"
                        .into(),
                ),
            );
            b.anchor(
                module,
                "clubsuit:limit",
                "m -> infinity normalized limit",
                class_value(&p.limit),
                class_value(&m21(&[
                    (Symbol::Lambda, int(10)),
                    (Symbol::Psi, int(2)),
                    (Symbol::DeltaIrr, int(-1)),
                ])),
            );
            // eps(m) compared against the printed closed form at a
            // reference point m = 6, where the recorded value is
            // (126-150)/(3600-720) = -1/120 but the triple forces 37/48
            let (pn, pd) = printed_epsilon();
            let printed_at_6 = pn.eval_int(6) / pd.eval_int(6);
            b.deviation(
                module,
                "clubsuit:epsilon",
                "polform-epsilon",
                "eps(6) from the coefficient triple vs the printed closed form",
                Value::Rat(p.epsilon_at(6)),
                Value::Rat(printed_at_6),
            );
        }
        Err(e) => b.failure(module, "clubsuit:coefficient-triple", "polarization_class", &e),
    }

    // affine recombination of log-canonical classes
    match affine_lincomb(&rat(2, 3), &(rat(7, 10) - rat(1, 100)), &rat(5, 9)) {
        Ok((a, bb)) => {
            // a = 10/(13 - 90 eps), b = (3 - 90 eps)/(13 - 90 eps) at eps=1/100
            let den = int(13) - int(90) * rat(1, 100);
            b.anchor(
                module,
                "E:lincomb:rational-functions",
                "alpha target 2/3 between 7/10 - eps and 5/9 at eps=1/100",
                rlist(vec![a, bb]),
                rlist(vec![int(10) / &den, (int(3) - int(90) * rat(1, 100)) / &den]),
            );
        }
        Err(e) => b.failure(module, "E:lincomb:rational-functions", "affine_lincomb", &e),
    }
    match affine_lincomb(&rat(2, 3), &rat(7, 10), &rat(5, 9)) {
        Ok((a, bb)) => b.anchor(
            module,
            "E:lincomb:specialization",
            "alpha target 2/3 between 7/10 and 5/9",
            rlist(vec![a, bb]),
            rlist(vec![rat(10, 13), rat(3, 13)]),
        ),
        Err(e) => b.failure(module, "E:lincomb:specialization", "affine_lincomb", &e),
    }

    // the boundary coefficient after eliminating lambda from the
    // pullback near alpha = 7/10
    let eps = rat(1, 100);
    let near = hs_pullback(&(rat(7, 10) - &eps));
    match normal_form(&near, &[Symbol::Lambda]) {
        Ok(nf) => {
            let eps_prime = int(10) * &eps;
            b.deviation(
                module,
                "E:L1:delta11-coefficient",
                "E:L1-delta11",
                "delta_11 coefficient after eliminating lambda at alpha=7/10-eps, eps=1/100 (coordinates scaled by 10)",
                Value::Rat(nf.coeff(Symbol::Delta11) * int(10)),
                Value::Rat(int(13) - &eps_prime),
            );
            match cone_membership(&near) {
                Ok(r) => b.anchor(
                    module,
                    "S3.2:cone-membership",
                    "pullback at alpha=7/10-eps, eps=1/100, in the (C, D) cone",
                    Value::Verdict(format!(
                        "x={},y={},inside={}",
                        fmt_rat(&r.x),
                        fmt_rat(&r.y),
                        r.inside
                    )),
                    // x = (13 - 39 e')/850, y = (13 + 46 e')/850 scaled
                    // from the (-e', 13+e') normalization by 1/10
                    Value::Verdict("x=91/8500,y=44/2125,inside=true".into()),
                ),
                Err(e) => b.failure(module, "S3.2:cone-membership", "cone_membership", &e),
            }
        }
        Err(e) => b.failure(module, "E:L1:delta11-coefficient", "normal_form", &e),
    }

    // vital-curve pairing
    let data = VitalData::shipped();
    b.anchor(
        module,
        "S3.1:data-consistency",
        "shipped intersection numbers vs the two constraints",
        Value::Verdict(format!("consistent={}", data.is_consistent())),
        Value::Verdict("consistent=true".into()),
    );
    b.anchor(
        module,
        "S3.1:endpoint-root",
        "vital intersection at alpha=19/12",
        Value::Rat(vital_intersection(&rat(19, 12), &data)),
        Value::Rat(int(0)),
    );
    b.anchor(
        module,
        "S3.1:alpha-two-thirds",
        "vital intersection at alpha=2/3",
        Value::Rat(vital_intersection(&rat(2, 3), &data)),
        Value::Rat(rat(-209, 24)),
    );
    b.anchor(
        module,
        "S3.1:constraint-rank",
        "rank of the constraint matrix",
        Value::Rat(int(vital_constraints().rank() as i64)),
        Value::Rat(int(2)),
    );
}
