use msynth_core::kernels::*;
use proptest::prelude::*;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + b.abs())
}

#[test]
fn reverse_ou_values() {
    let k = reverse_ou_kernel(1.0).unwrap();
    assert!(close(k.eval(-1.0), 0.367879441171442, 1e-14));
    assert_eq!(k.eval(0.5), 0.0);
    assert_eq!(k.eval(0.0), 1.0);
    assert!(reverse_ou_kernel(0.0).is_err());
    assert!(reverse_ou_kernel(-1.0).is_err());
    assert_eq!(
        k.local_form(1.8).unwrap(),
        LocalForm::Levy { factor: -1.0 }
    );
}

#[test]
fn extime_values() {
    let k = extime_kernel();
    assert!(close(k.eval(0.5), 0.5f64.powf(1.0 / 6.0), 1e-15));
    assert!(close(k.eval(0.5), 0.890898718140339, 1e-12));
    assert_eq!(k.eval(-2.0), 0.0);
    assert!(close(k.eval(64.0), 0.03125, 1e-14));
    match k.local_form(1.8).unwrap() {
        LocalForm::Lfsm { h, b_plus, b_minus } => {
            assert!(close(h, 1.0 / 6.0 + 1.0 / 1.8, 1e-15));
            assert_eq!((b_plus, b_minus), (1.0, 0.0));
        }
        f => panic!("{f:?}"),
    }
    assert!(k.local_form(1.1).is_err());
}

#[test]
fn lfsn_values() {
    let k = lfsn_kernel(2.0, 0.5).unwrap();
    assert_eq!(k.eval(0.5), 1.0);
    assert_eq!(k.eval(1.0), 1.0);
    assert_eq!(k.eval(2.0), 0.0);
    let k = lfsn_kernel(1.8, 0.7).unwrap();
    assert!(close(k.eval(2.0), 0.105304938579239844, 1e-13));
    assert_eq!(k.eval(-1.0), 0.0);
    assert!(lfsn_kernel(1.8, 1.0).is_err());
    assert!(lfsn_kernel(2.5, 0.5).is_err());
    // far tail keeps precision
    let x: f64 = 1e6;
    let g = 0.7 - 1.0 / 1.8;
    let expect = -x.powf(g) * (g * (-1.0 / x).ln_1p()).exp_m1();
    assert!(close(k.eval(x), expect, 1e-14));
    assert!(k.eval(x) > 0.0);
}

// Independent values of the closed form (arbitrary-precision quadrature).
const EXFREQ: [(f64, f64, f64); 7] = [
    (0.01, 21.0663227461248, 14.5565296749423),
    (0.5, -0.356243050990346, 0.00407391045876147),
    (1.3, -1.17641645959764, -1.05765164118626),
    (5.0, 0.384599644339449, 0.383390209209145),
    (20.0, -0.0901158963965570, -0.0896167504746414),
    (30.0, 0.0659850924142790, 0.0660213669328835),
    (50.0, 0.0108772675910938, 0.0110294139188788),
];

#[test]
fn exfrequency_values() {
    let a = exfrequency_kernel(-0.5).unwrap();
    let b = exfrequency_kernel(-0.3).unwrap();
    for &(x, ga, gb) in &EXFREQ {
        assert!(close(a.eval(x), ga, 1e-10), "x={x} {} vs {ga}", a.eval(x));
        assert!(close(b.eval(x), gb, 1e-10), "x={x} {} vs {gb}", b.eval(x));
        assert_eq!(a.eval(x), a.eval(-x));
    }
    assert!(a.eval(50.0).abs() <= 0.08);
    assert!(exfrequency_kernel(0.1).is_err());
    assert!(exfrequency_kernel(-1.0).is_err());
}

#[test]
fn exfrequency_decay_envelope() {
    let k = exfrequency_kernel(-0.5).unwrap();
    for i in 1..400 {
        let x = 0.25 * i as f64;
        assert!(k.eval(x).abs() <= 4.0 / x, "x={x}");
    }
}

#[test]
fn exfrequency_local_form() {
    let k = exfrequency_kernel(-0.5).unwrap();
    match k.local_form(1.5).unwrap() {
        LocalForm::Lfsm { h, b_plus, b_minus } => {
            assert!(close(h, -0.5 + 1.0 / 1.5, 1e-15));
            assert!(close(b_plus, 2.506628274631, 1e-11));
            assert_eq!(b_plus, b_minus);
        }
        f => panic!("{f:?}"),
    }
    // g(x)|x|^{-γ} approaches b at the origin
    let x: f64 = 1e-8;
    assert!(close(k.eval(x) * x.sqrt(), 2.506628274631, 1e-3));
}

#[test]
fn exfrequency_fourier_transform() {
    let k = exfrequency_kernel(-0.5).unwrap();
    for &(xi, want) in &[(0.3f64, 0.0f64), (0.6, 0.0), (1.5, 1.5f64.powf(-0.5)), (2.5, 2.5f64.powf(-0.5))] {
        let (re, im) = fourier_transform_diagnostic(&k, xi, 2000.0, 16_000);
        assert!((re - want).abs() < 0.01, "xi={xi}: {re} vs {want}");
        assert!(im.abs() < 1e-9);
    }
}

#[test]
fn fourier_coefficients() {
    let (p, m) = fourier_coefficients_b(1.0, 0.0, -0.5).unwrap();
    assert!(close(p, 0.398942280401432678, 1e-14));
    assert!(close(m, 0.398942280401432678, 1e-14));
    let (p, m) = fourier_coefficients_b(0.0, 1.0, -0.5).unwrap();
    assert!(close(p, -0.398942280401432678, 1e-14));
    assert!(close(m, 0.398942280401432678, 1e-14));
    assert_eq!(fourier_coefficients_b(0.0, 0.0, -0.5).unwrap(), (0.0, 0.0));
    let (p, _) = fourier_coefficients_b(-1.0, 0.0, -0.3).unwrap();
    assert!(close(p, -0.848457384359951, 1e-12));
    assert!(matches!(
        fourier_coefficients_b(1.0, 0.0, 0.0),
        Err(msynth_core::Error::LogarithmicCase)
    ));
    assert!(fourier_coefficients_b(1.0, 0.0, 1.0).is_err());
    assert!(fourier_coefficients_b(1.0, 0.0, -1.2).is_err());
}

#[test]
fn tangent_kernel_examples() {
    let f = LocalForm::lfsm(0.7, 1.0, 0.0).unwrap();
    for z in [-3.0, 0.0, 0.4, 10.0] {
        assert_eq!(tangent_kernel(&f, 1.8, 0.0, z), 0.0);
    }
    assert_eq!(tangent_kernel(&f, 1.8, 1.0, 0.0), 1.0);
    let levy = LocalForm::Levy { factor: 1.0 };
    assert_eq!(tangent_kernel(&levy, 1.5, 2.0, -1.0).abs(), 1.0);
    assert_eq!(tangent_kernel(&levy, 1.5, 2.0, 1.0), 0.0);
    let ou = reverse_ou_kernel(1.0).unwrap().local_form(1.5).unwrap();
    // t ≥ 0: −1 on (−t, 0]
    assert_eq!(tangent_kernel(&ou, 1.5, 2.0, -1.0), -1.0);
    assert_eq!(tangent_kernel(&ou, 1.5, 2.0, 0.0), -1.0);
    assert_eq!(tangent_kernel(&ou, 1.5, 2.0, -2.0), 0.0);
    // t < 0: +1 on (0, −t]
    assert_eq!(tangent_kernel(&ou, 1.5, -2.0, 1.0), 1.0);
    assert_eq!(tangent_kernel(&ou, 1.5, -2.0, 0.0), 0.0);
    let mix = LocalForm::LogMix { l1: 0.0, l2: 1.0 };
    assert_eq!(tangent_kernel(&mix, 1.5, 2.0, -1.0), -1.0);
    assert!(LocalForm::lfsm(1.2, 1.0, 0.0).is_err());
    assert!(LocalForm::lfsm(0.5, 0.0, 0.0).is_err());
}

#[test]
fn reverse_ou_tangent_is_limit_of_increments() {
    // (g(r(t+z)) − g(rz)) → h(t, z) pointwise away from the jump
    let k = reverse_ou_kernel(1.0).unwrap();
    let form = k.local_form(1.5).unwrap();
    let r = 1e-9;
    for &(t, z) in &[(2.0, -1.0), (2.0, 0.5), (-2.0, 1.0), (-2.0, -0.5), (1.0, -3.0)] {
        let f = k.eval(r * (t + z)) - k.eval(r * z);
        assert!((f - tangent_kernel(&form, 1.5, t, z)).abs() < 1e-6, "t={t} z={z}");
    }
}

#[test]
fn alpha_norms() {
    let q = AlphaNormQuadrature::default();
    let ou = reverse_ou_kernel(1.0).unwrap();
    assert!(close(alpha_norm(&ou, 2.0, &q).unwrap(), 0.5f64.sqrt(), 1e-10));
    let ou2 = reverse_ou_kernel(2.0).unwrap();
    assert!(close(alpha_norm(&ou2, 1.0, &q).unwrap(), 0.5, 1e-10));
    let ind = lfsn_kernel(2.0, 0.5).unwrap();
    assert!(close(alpha_norm(&ind, 2.0, &q).unwrap(), 1.0, 1e-10));
    // extime: ∫_0^1 x^{α/6} + ∫_1^∞ x^{-5α/6}
    let a: f64 = 1.8;
    let want = (1.0 / (1.0 + a / 6.0) + 1.0 / (5.0 * a / 6.0 - 1.0)).powf(1.0 / a);
    assert!(close(alpha_norm(&extime_kernel(), a, &q).unwrap(), want, 1e-9));
    assert!(matches!(
        alpha_norm(&extime_kernel(), 1.2, &q),
        Err(msynth_core::Error::NonIntegrable(_))
    ));
    assert!(alpha_norm(&exfrequency_kernel(-0.5).unwrap(), 1.5, &q)
        .unwrap()
        .is_finite());
    assert!(AlphaNormQuadrature::new(10.0, 8).is_err());
    assert!(AlphaNormQuadrature::new(0.0, 64).is_err());
}

#[test]
fn alpha_validity_ranges() {
    let r = exfrequency_kernel(-0.5).unwrap().alpha_validity();
    assert!(r.contains(1.5) && !r.contains(1.0) && !r.contains(2.0));
    let r = exfrequency_kernel(-0.3).unwrap().alpha_validity();
    assert!(r.contains(1.3) && !r.contains(1.2));
    let r = extime_kernel().alpha_validity();
    assert!(r.contains(2.0) && !r.contains(1.2));
}

#[test]
fn one_sided_limits() {
    let r: f64 = 1e-6;
    for k in [extime_kernel(), lfsn_kernel(1.8, 0.7).unwrap(), lfsn_kernel(1.3, 0.3).unwrap()] {
        let m = *k.microlocal().unwrap();
        assert!((k.eval(r) / r.powf(m.gamma) - m.c0_plus).abs() < 0.01);
        assert!((k.eval(-r) / r.powf(m.gamma) - m.c0_minus).abs() < 0.01);
    }
}

#[test]
fn lfsn_increment_counterexample() {
    // The nominal constants fail near the second singular point.
    let k = lfsn_kernel(1.8, 0.7).unwrap();
    assert!(!k.microlocal().unwrap().increment_bound_holds);
    let (u, h) = (0.5, 0.6);
    let lhs = (k.eval(u + h) - k.eval(u)).abs();
    assert!(lhs > k.increment_envelope(u, h).unwrap());
}

#[test]
fn exfrequency_envelope_is_not_an_inequality() {
    // The nominal envelope 2|h|/|u| is exceeded just past u = π.
    let k = exfrequency_kernel(-0.5).unwrap();
    let (u, h) = (-3.42, 0.98);
    let lhs = (k.eval(u + h) - k.eval(u)).abs();
    let rhs = k.increment_envelope(u, h).unwrap();
    assert!(lhs > 1.1 * rhs && lhs < 1.3 * rhs, "{lhs} {rhs}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn increment_inequality(u in -5.0f64..5.0, hf in -1.0f64..1.0, which in 0usize..4) {
        let k = match which {
            0 => reverse_ou_kernel(1.0).unwrap(),
            1 => reverse_ou_kernel(3.0).unwrap(),
            2 => reverse_ou_kernel(0.2).unwrap(),
            _ => extime_kernel(),
        };
        let m = *k.microlocal().unwrap();
        prop_assume!(u != 0.0);
        let h = hf * m.eta;
        let lhs = (k.eval(u + h) - k.eval(u)).abs();
        let rhs = k.increment_envelope(u, h).unwrap();
        prop_assert!(lhs <= rhs * (1.0 + 1e-12) + 1e-15, "u={u} h={h} {lhs} > {rhs}");
    }

    #[test]
    fn lfsm_tangent_matches_positive_part_formula(
        t in -5.0f64..5.0, z in -5.0f64..5.0,
        h in 0.05f64..0.95, bp in -2.0f64..2.0, bm in -2.0f64..2.0, a in 1.1f64..2.0,
    ) {
        prop_assume!(bp != 0.0 || bm != 0.0);
        let f = LocalForm::lfsm(h, bp, bm).unwrap();
        let e = h - 1.0 / a;
        let pp = |x: f64| if x > 0.0 { x.powf(e) } else { 0.0 };
        let x = -z;
        let want = if t == 0.0 { 0.0 } else {
            bp * (pp(t - x) - pp(-x)) + bm * (pp(x - t) - pp(x))
        };
        let got = tangent_kernel(&f, a, t, z);
        prop_assert!((got - want).abs() <= 1e-12 * (1.0 + want.abs()));
    }
}
