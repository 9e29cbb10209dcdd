use num_complex::Complex64;

use skeinlab::algebra::{EvalPoint, Sign, Q};
use skeinlab::diagrams::{unknot_fixture, FramedLink, PlanarDiagram, SurgeryPresentation};
use skeinlab::recoupling::{dim_v_torus, meridian_series, omega_data};
use skeinlab::wrt::{
    f_mobius, gamma_tabulate, independence_certificate, recolor_check, torus_invariant, wrt_invariant, ArithMode,
    InvariantReport, Quantity, Value,
};

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

#[test]
fn torus_pipeline_matches_closed_form() {
    for d in [2u32, 3] {
        for sign in Sign::BOTH {
            let p = EvalPoint::new(d, sign);
            for a in 0..=2 {
                let got = torus_invariant(a, p, ArithMode::Exact).unwrap();
                let want = meridian_series(a, p);
                assert_eq!(got.as_exact(), Some(&want), "a={a} at {p}");
            }
            let empty = torus_invariant(0, p, ArithMode::Exact).unwrap();
            assert!(empty.as_exact().unwrap().is_rational_eq(&q(dim_v_torus(0, d).unwrap() as i64)));
            let two = torus_invariant(2, p, ArithMode::Exact).unwrap();
            assert!(two.as_exact().unwrap().is_rational_eq(&q(dim_v_torus(2, d).unwrap() as i64)));
        }
    }
}

#[test]
fn s1_times_s2_is_one() {
    let pres = SurgeryPresentation::surgery_only("S1 x S2", unknot_fixture(0));
    for d in 2..=5 {
        for sign in Sign::BOTH {
            let p = EvalPoint::new(d, sign);
            let exact = wrt_invariant(&pres, p, ArithMode::Exact).unwrap();
            assert!(exact.as_exact().unwrap().is_rational_eq(&q(1)));
            let Value::Float(z) = wrt_invariant(&pres, p, ArithMode::Float).unwrap() else {
                panic!("float mode")
            };
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
    }
}

#[test]
fn empty_presentation_is_eta() {
    let pres = SurgeryPresentation::surgery_only("S3", FramedLink::new(PlanarDiagram::empty()).unwrap());
    let p = EvalPoint::plus(3);
    assert_eq!(wrt_invariant(&pres, p, ArithMode::Exact).unwrap_err().code(), "E_ETA_ODD_POWER");
    let z = wrt_invariant(&pres, p, ArithMode::Auto).unwrap().to_c64();
    assert!((z.re - omega_data(3).eta_f64()).abs() < 1e-12);
}

#[test]
fn nonzero_signature_is_refused() {
    let pres = SurgeryPresentation::surgery_only("lens", unknot_fixture(1));
    let err = wrt_invariant(&pres, EvalPoint::plus(2), ArithMode::Float).unwrap_err();
    assert_eq!(err.code(), "E_SIGMA_NONZERO");
}

#[test]
fn colors_are_range_checked() {
    assert_eq!(
        torus_invariant(3, EvalPoint::plus(2), ArithMode::Exact).unwrap_err().code(),
        "E_COLOR_RANGE"
    );
}

#[test]
fn recoloring() {
    assert_eq!(recolor_check(EvalPoint::plus(1)), None);
    for d in 2..=12 {
        for sign in Sign::BOTH {
            assert_eq!(recolor_check(EvalPoint::new(d, sign)), Some(true));
        }
    }
}

#[test]
fn f_values() {
    assert_eq!(f_mobius(Complex64::new(1.0, 0.0)).unwrap(), Complex64::new(1.0, 0.0));
    assert_eq!(f_mobius(Complex64::new(-1.0, 0.0)).unwrap_err().code(), "E_BRANCH_CUT");
    assert_eq!(f_mobius(Complex64::new(0.0, 0.0)).unwrap_err().code(), "E_BRANCH_CUT");
    for d in 1..=1000u32 {
        let t = std::f64::consts::PI / (2 * d + 1) as f64;
        let plus = f_mobius(Complex64::from_polar(1.0, t)).unwrap();
        let minus = f_mobius(Complex64::from_polar(1.0, -t)).unwrap();
        let d = d as f64;
        assert!((plus - Complex64::new((d - 1.0) / d, 0.0)).norm() < 1e-12);
        assert!((minus - Complex64::new((d + 2.0) / (d + 1.0), 0.0)).norm() < 1e-12);
    }
}

#[test]
fn certificates() {
    let c = independence_certificate(2, 3).unwrap();
    assert_eq!((c.determinant, c.independent), (1, true));
    assert_eq!(c.matrix, [[2, 1], [3, 2]]);
    assert_eq!(independence_certificate(5, 5).unwrap_err().code(), "E_SAME_D");
    for d1 in 1..=8 {
        for d2 in d1 + 1..=9 {
            assert_eq!(independence_certificate(d1, d2).unwrap().determinant, (d2 - d1) as i64);
        }
    }
}

#[test]
fn tabulated_functions() {
    let k1 = gamma_tabulate(Quantity::K1, 1..=10, ArithMode::Exact).unwrap();
    assert!(k1.exceptions.is_empty());
    assert!(k1.matches_prediction());
    let empty = gamma_tabulate(Quantity::Empty, 1..=10, ArithMode::Exact).unwrap();
    assert!(empty.matches_prediction());
    let ratio = gamma_tabulate(Quantity::Ratio, 1..=10, ArithMode::Auto).unwrap();
    assert!(ratio.exceptions.is_empty());
    assert!(ratio.matches_prediction());
    // float and exact tabulations agree
    let ratio_f = gamma_tabulate(Quantity::Ratio, 1..=10, ArithMode::Float).unwrap();
    assert!(ratio.agrees_with(&ratio_f));
    // f agrees with the ratio at + and not at -
    let f = gamma_tabulate(Quantity::F, 1..=200, ArithMode::Float).unwrap();
    let ratio_f = gamma_tabulate(Quantity::Ratio, 1..=200, ArithMode::Float).unwrap();
    for d in 1..=200 {
        let close = |a: &Value, b: &Value| (a.to_c64() - b.to_c64()).norm() < 1e-9;
        assert!(close(f.get(EvalPoint::plus(d)).unwrap(), ratio_f.get(EvalPoint::plus(d)).unwrap()));
        assert!(!close(f.get(EvalPoint::minus(d)).unwrap(), ratio_f.get(EvalPoint::minus(d)).unwrap()));
    }
    assert!(!f.agrees_with(&ratio_f));
}

#[test]
fn report_rows() {
    let r = InvariantReport::new(&Quantity::ALL, 1..=6, ArithMode::Auto).unwrap();
    assert_eq!(r.rows.len(), 5 * 6 * 2);
    assert!(r.all_pass());
    for row in &r.rows {
        assert_eq!(row.difference().map(|x| x < 1e-9), Some(true));
    }
}
