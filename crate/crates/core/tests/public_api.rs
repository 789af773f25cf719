use std::f64::consts::PI;

use proptest::prelude::*;
use stiffgap_core::bands::{band_interval, band_length, brillouin_sweep, detect_gaps, GapReason};
use stiffgap_core::correction::{
    c0_multiple, correction_matrix, lambda_expansion, CorrectionValue, ExpansionParams, FloquetPoint,
};
use stiffgap_core::oracle::c0_quadrature;
use stiffgap_core::spectrum::{enumerate_spectrum, ModeIndex};
use stiffgap_core::{Complex64, Error};

#[test]
fn band_signs_follow_the_bessel_factor() {
    // (J_{n-1} - J_{n+1})(j_{n,k}) = 2 J_n'(j_{n,k}) alternates in sign with k.
    for n in 1..=5u32 {
        for k in 1..=3u32 {
            let cv = CorrectionValue::new(ModeIndex::sine(n, k).unwrap()).unwrap();
            let p = cv.trace_prefactor().unwrap();
            assert_eq!(p < 0.0, k % 2 == 1, "n={n} k={k}");
        }
    }
}

#[test]
fn undetermined_modes_refuse_numbers() {
    let mode = ModeIndex::cosine(4, 2).unwrap();
    let cv = CorrectionValue::new(mode).unwrap();
    assert!(matches!(cv.at(FloquetPoint::ORIGIN), Err(Error::Undetermined { n: 4, k: 2 })));
    let p = ExpansionParams::new(1e-3, 0.25, 0.0).unwrap();
    assert!(lambda_expansion(mode, FloquetPoint::ORIGIN, &p).unwrap().undetermined);
    assert_eq!(band_length(mode, &p).unwrap().leading, None);
}

#[test]
fn quadrature_and_matrix_agree_with_closed_forms() {
    let eta = FloquetPoint::new(2.2, -0.6);
    let one = Complex64::new(1.0, 0.0);
    for n in 1..=3 {
        let q = c0_quadrature(ModeIndex::sine(n, 1).unwrap(), eta, one, one, 16).unwrap();
        assert!((q - c0_multiple(n, 1, eta, one, one).unwrap()).norm() < 1e-10);
        let m = correction_matrix(n, 1, eta).unwrap();
        let v = CorrectionValue::new(ModeIndex::sine(n, 1).unwrap()).unwrap().at(eta).unwrap();
        assert!((m.matrix.trace().re - v).abs() < 1e-10);
    }
}

#[test]
fn huge_pads_block_every_gap() {
    let p = ExpansionParams::new(1e-2, 0.25, 1e6).unwrap();
    let gaps = detect_gaps(10, &p, 9).unwrap();
    assert!(gaps.iter().all(|g| !g.certified));
    assert!(gaps.iter().any(|g| g.reason == Some(GapReason::PadsOverlap)));
}

#[test]
fn spectrum_prefix_is_stable() {
    let long = enumerate_spectrum(40).unwrap();
    let short = enumerate_spectrum(17).unwrap();
    assert_eq!(&long[..17], &short[..]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bands_contain_every_sweep_value(eps in 1e-6f64..1e-1, m in 0.01f64..0.49, c in 0.0f64..10.0, idx in 0usize..14) {
        let p = ExpansionParams::new(eps, m, c).unwrap();
        let mode = enumerate_spectrum(14).unwrap()[idx].mode;
        let b = band_interval(mode, &p, 9).unwrap();
        prop_assert!(b.lower <= b.upper);
        for s in brillouin_sweep(mode, &p, 9).unwrap() {
            prop_assert!(s.value >= b.lower - 1e-12 && s.value <= b.upper + 1e-12);
        }
    }

    #[test]
    fn expansion_tends_to_the_limit(e1 in -PI..PI, e2 in -PI..PI, idx in 0usize..14) {
        let mode = enumerate_spectrum(14).unwrap()[idx].mode;
        let cv = CorrectionValue::new(mode).unwrap();
        let eta = FloquetPoint::new(e1, e2);
        let p = ExpansionParams::new(1e-14, 0.4, 0.0).unwrap();
        let v = cv.expansion(eta, &p).value;
        prop_assert!((v - cv.lambda0()).abs() <= 1e-9 * cv.lambda0());
    }
}
