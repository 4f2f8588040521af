use msynth_core::bounds::*;
use msynth_core::kernels::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn generic_reverse_ou_hand_value() {
    let k = reverse_ou_kernel(1.0).unwrap();
    let b = generic_bound(&k, 2.0, 2, 1).unwrap();
    assert!(rel(b.total_alpha_power, 1.73433430828497301) < 1e-13);
    assert!(rel(b.discretization, 5.0 / 3.0) < 1e-14);
    assert!(rel(b.truncation, (-2f64).exp() / 2.0) < 1e-14);
    assert_eq!(b.total_alpha_power, b.discretization + b.truncation);
}

#[test]
fn generic_rejects_inapplicable() {
    let k = exfrequency_kernel(-0.5).unwrap();
    assert!(matches!(
        generic_bound(&k, 1.5, 10, 10),
        Err(msynth_core::Error::Inapplicable(_))
    ));
    // ω must exceed 1/η
    let k = reverse_ou_kernel(4.0).unwrap();
    assert!(generic_bound(&k, 1.5, 4, 10).is_err());
    assert!(generic_bound(&k, 1.5, 5, 10).is_ok());
}

#[test]
fn extime_values() {
    let b = extime_bound(1.8, 10, 10).unwrap();
    assert!(rel(b.discretization, 0.0863786924728723983) < 1e-12);
    assert!(rel(b.truncation, 0.632455532033675866) < 1e-12);
    assert!(rel(b.total_alpha_power, 0.718834224506548265) < 1e-12);
    // generic bound with extime metadata is the same formula
    let g = generic_bound(&extime_kernel(), 1.8, 10, 10).unwrap();
    assert!(rel(g.total_alpha_power, b.total_alpha_power) < 1e-12);
    assert!(extime_bound(1.2, 10, 10).is_err());
}

#[test]
fn extime_fixture() {
    let b = extime_bound(1.8, 104, 175504).unwrap();
    assert!(rel(b.err_scale, 0.0740437261135639856) < 1e-9);
    assert!(rel(b.err_scale, 0.074) < 0.05);
}

#[test]
fn extime_truncation_halving() {
    let a = 1.8;
    let b1 = extime_bound(a, 16, 100).unwrap();
    let b2 = extime_bound(a, 16, 200).unwrap();
    let f = 2f64.powf(-(5.0 * a / 6.0 - 1.0));
    assert!(rel(b2.truncation, f * b1.truncation) < 1e-13);
}

#[test]
fn exfrequency_values() {
    let b = exfrequency_bound(1.8, 5000, 877).unwrap();
    assert!(rel(b.err_scale, 2.17189679016743055) < 1e-9);
    assert!(b.err_scale <= 2.172);
    let b = exfrequency_bound(1.5, 10, 10).unwrap();
    assert!(rel(b.discretization, 6.14044205727758435) < 1e-12);
    assert!(rel(b.truncation, 5.05964425626940693) < 1e-12);
    for &(a, w, big) in &[(1.1, 1, 1), (1.5, 10, 10), (1.8, 5000, 877), (1.95, 3, 100_000)] {
        let e = exfrequency_bound(a, w, big).unwrap();
        let s = exfrequency_bound_simplified(a, w, big).unwrap();
        assert!(s.total_alpha_power >= e.total_alpha_power);
    }
    assert!(exfrequency_bound(1.0, 10, 10).is_err());
}

#[test]
fn exfrequency_certified_values() {
    let b = exfrequency_bound_certified(1.8, 10, 10).unwrap();
    assert!(rel(b.discretization, 146.257743864361039) < 1e-12);
    assert!(rel(b.truncation, 4.80449773592572447) < 1e-12);
    let b = exfrequency_bound_certified(1.5, 10, 10).unwrap();
    assert!(rel(b.total_alpha_power, 49.4406621798389248) < 1e-12);
    let b = exfrequency_bound_certified(1.3, 1, 10).unwrap();
    assert!(rel(b.total_alpha_power, 71.4587885898193461) < 1e-12);
}

#[test]
fn exfrequency_closed_form_bound_misses_the_singular_cell() {
    let k = exfrequency_kernel(-0.5).unwrap();
    for &(a, w, big) in &[(1.5, 10, 10), (1.8, 10, 10), (1.8, 200, 50)] {
        let truth = true_error(&k, a, w, big).unwrap();
        let shown = exfrequency_bound(a, w, big).unwrap();
        let cert = exfrequency_bound_certified(a, w, big).unwrap();
        assert!(shown.total_alpha_power < truth.total_alpha_power);
        assert!(cert.total_alpha_power >= truth.total_alpha_power);
    }
}

#[test]
fn exfrequency_truth_reference() {
    // Fresnel form g = 2√(2π)|x|^{−1/2}(1/2 − C(√(2|x|/π))), cells by adaptive quadrature
    let t = true_error(&exfrequency_kernel(-0.5).unwrap(), 1.5, 10, 10).unwrap();
    assert!(rel(t.discretization, 10.9216) < 2e-3, "{}", t.discretization);
}

#[test]
fn reverse_ou_values() {
    let b = rev_ou_bound(1.0, 1.8, 512, 7).unwrap();
    assert!(rel(b.err_scale, 0.00176191059943902373) < 1e-10);
    let b = rev_ou_bound(0.01, 1.8, 256, 800).unwrap();
    assert!(rel(b.err_scale, 0.00317038584930293821) < 1e-10);
    let b = rev_ou_bound(1.0, 1.8, 4, 3).unwrap();
    assert!(rel(b.total_alpha_power, 0.0474225200953108582) < 1e-12);
}

#[test]
fn reverse_ou_matches_classical_display() {
    // λ = 1: (2^α/(1+α))((1−e^{−αΩ})/(e^{α/ω}−1)) ω^{−1−α} + e^{−αΩ}/α
    for &(a, w, big) in &[(1.2, 3, 2), (1.8, 512, 7), (2.0, 1, 1), (0.7, 50, 9)] {
        let (wf, bf) = (w as f64, big as f64);
        let want = 2f64.powf(a) / (1.0 + a) * (1.0 - (-a * bf).exp()) / ((a / wf).exp() - 1.0)
            * wf.powf(-1.0 - a)
            + (-a * bf).exp() / a;
        let b = rev_ou_bound(1.0, a, w, big).unwrap();
        assert!(rel(b.total_alpha_power, want) < 1e-12, "{a} {w} {big}");
    }
    // Ω → ∞ limit
    let (a, w) = (1.5, 8u64);
    let lim = 2f64.powf(a) / (1.0 + a) / ((a / w as f64).exp() - 1.0) * (w as f64).powf(-1.0 - a);
    assert!(rel(rev_ou_bound(1.0, a, w, 1000).unwrap().total_alpha_power, lim) < 1e-12);
}

#[test]
fn reverse_ou_sharp_form_against_quadrature() {
    for &(l, a, w, big) in &[(1.0, 1.8, 4, 3), (0.01, 1.8, 2, 100), (3.0, 1.3, 7, 5), (0.3, 1.6, 1, 12)] {
        let k = reverse_ou_kernel(l).unwrap();
        let truth = true_error(&k, a, w, big).unwrap();
        let exact = rev_ou_exact(l, a, w, big).unwrap();
        let bound = rev_ou_bound(l, a, w, big).unwrap();
        assert!(rel(truth.total_alpha_power, exact.total_alpha_power) < 1e-8, "{l} {a} {w} {big}");
        assert!(bound.total_alpha_power >= truth.total_alpha_power);
    }
}

#[test]
fn lfsn_values() {
    let b = lfsn_bound(1.8, 0.7, 10, 10).unwrap();
    assert!(rel(b.truncation, 0.0168740342695895643) < 1e-8);
    assert!(rel(b.total_alpha_power, 0.0265885690965756449) < 1e-8);
    let c = lfsn_bound_certified(1.8, 0.7, 10, 10).unwrap();
    assert!(rel(c.total_alpha_power, 0.0288220398213708005) < 1e-8);
    // indicator kernel: nothing is truncated
    for big in [1, 2, 50] {
        assert_eq!(lfsn_bound(2.0, 0.5, 8, big).unwrap().truncation, 0.0);
    }
    assert!(lfsn_bound(1.8, 1.0, 10, 10).is_err());
}

#[test]
fn lfsn_tail_from_singular_start() {
    let k = lfsn_kernel(1.3, 0.3).unwrap();
    let t = tail_truth(&k, 1.3, Side::Right, 1.0).unwrap();
    assert!(rel(t, 1.68965203477918949) < 1e-7, "{t}");
}

#[test]
fn lfsn_closed_form_bound_fails_below_one_over_alpha() {
    let k = lfsn_kernel(1.3, 0.3).unwrap();
    let truth = true_error(&k, 1.3, 4, 20).unwrap();
    let shown = lfsn_bound(1.3, 0.3, 4, 20).unwrap();
    let cert = lfsn_bound_certified(1.3, 0.3, 4, 20).unwrap();
    assert!(shown.total_alpha_power < truth.total_alpha_power);
    assert!(cert.total_alpha_power >= truth.total_alpha_power);
}

#[test]
fn soundness_fixed_cases() {
    let cases: Vec<(KernelDescriptor, f64, u64, u64)> = vec![
        (extime_kernel(), 1.8, 10, 10),
        (extime_kernel(), 1.3, 7, 40),
        (lfsn_kernel(1.8, 0.7).unwrap(), 1.8, 10, 10),
        (lfsn_kernel(1.3, 0.9).unwrap(), 1.3, 3, 30),
        (exfrequency_kernel(-0.5).unwrap(), 1.5, 10, 10),
        (exfrequency_kernel(-0.5).unwrap(), 1.8, 20, 5),
        (reverse_ou_kernel(1.0).unwrap(), 1.3, 16, 4),
    ];
    for (k, a, w, big) in cases {
        let t = true_error(&k, a, w, big).unwrap();
        let b = kernel_bound(&k, a, w, big).unwrap();
        assert!(
            b.total_alpha_power >= t.total_alpha_power,
            "{} a={a} w={w} O={big}: bound {} < truth {}",
            k.label(),
            b.total_alpha_power,
            t.total_alpha_power
        );
        if k.microlocal().map_or(false, |m| m.increment_bound_holds) {
            let g = generic_bound(&k, a, w, big).unwrap();
            assert!(g.total_alpha_power >= t.total_alpha_power);
        }
    }
}

#[test]
fn extime_truth_reference() {
    let t = true_error(&extime_kernel(), 1.8, 10, 10).unwrap();
    assert!(rel(t.total_alpha_power, 0.63734) < 1e-4, "{}", t.total_alpha_power);
}

#[test]
fn vanishing_along_diagonal() {
    for k in [extime_kernel(), lfsn_kernel(1.8, 0.7).unwrap(), reverse_ou_kernel(1.0).unwrap()] {
        let v: Vec<f64> = [10u64, 100, 1000]
            .iter()
            .map(|&w| kernel_bound(&k, 1.8, w, w).unwrap().total_alpha_power)
            .collect();
        assert!(v[0] > v[1] && v[1] > v[2], "{}: {v:?}", k.label());
    }
}

#[test]
fn truncation_decreases_in_omega_cutoff() {
    let k = reverse_ou_kernel(1.0).unwrap();
    let mut prev = f64::INFINITY;
    for big in 1..30 {
        let t = generic_bound(&k, 1.5, 4, big).unwrap().truncation;
        assert!(t < prev);
        prev = t;
    }
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

#[test]
fn power_law_slopes() {
    let a = 1.8;
    for k in [extime_kernel(), lfsn_kernel(a, 0.7).unwrap()] {
        let m = *k.microlocal().unwrap();
        let ws = [1u64 << 8, 1 << 10, 1 << 12, 1 << 14];
        let lx: Vec<f64> = ws.iter().map(|&w| (w as f64).ln()).collect();
        let ly: Vec<f64> = ws
            .iter()
            .map(|&w| generic_bound(&k, a, w, 1 << 20).unwrap().discretization.ln())
            .collect();
        let want = -(1.0 + a * m.gamma);
        assert!(rel(slope(&lx, &ly), want) < 0.05, "{} omega slope", k.label());
        let bs = [1u64 << 8, 1 << 10, 1 << 12, 1 << 14];
        let lx: Vec<f64> = bs.iter().map(|&b| (b as f64).ln()).collect();
        let ly: Vec<f64> = bs
            .iter()
            .map(|&b| generic_bound(&k, a, 4, b).unwrap().truncation.ln())
            .collect();
        let want = -(a * k.beta_decay() - 1.0);
        assert!(rel(slope(&lx, &ly), want) < 0.05, "{} Omega slope", k.label());
    }
}

#[test]
fn lfsn_asymptotic_rates() {
    // A = O(ω^{−αH}) + O(Ω^{−α(1−H)}) for the closed form
    let (a, h) = (1.8, 0.7);
    let ws = [1u64 << 8, 1 << 10, 1 << 12];
    let lx: Vec<f64> = ws.iter().map(|&w| (w as f64).ln()).collect();
    let ly: Vec<f64> = ws.iter().map(|&w| lfsn_bound(a, h, w, 1 << 30).unwrap().total_alpha_power.ln()).collect();
    assert!(rel(slope(&lx, &ly), -a * h) < 0.05);
    let ly: Vec<f64> = ws.iter().map(|&b| lfsn_bound(a, h, 1 << 30, b).unwrap().total_alpha_power.ln()).collect();
    assert!(rel(slope(&lx, &ly), -a * (1.0 - h)) < 0.05);
}

#[test]
fn tuning() {
    let c = optimal_omega(&extime_kernel(), 1.8, 104).unwrap();
    assert!(rel(c.asymptotic, 175504.0) < 0.01);
    let c = optimal_omega(&reverse_ou_kernel(1.0).unwrap(), 1.8, 512).unwrap();
    assert!((4..=12).contains(&c.balanced), "{c:?}");
    assert!((c.asymptotic - 512f64.ln()).abs() < 1e-12);
    let c = optimal_omega(&lfsn_kernel(1.8, 0.5).unwrap(), 1.8, 1024).unwrap();
    assert!((c.asymptotic - 1024.0).abs() < 1e-9);
    let c = optimal_omega(&lfsn_kernel(2.0, 0.5).unwrap(), 2.0, 64).unwrap();
    assert_eq!(c.balanced, 1);
    assert!(optimal_omega(&extime_kernel(), 1.8, 1).is_err());
}

#[test]
fn balance_at_optimum() {
    for k in [extime_kernel(), lfsn_kernel(1.8, 0.7).unwrap()] {
        for e in 6..=14 {
            let c = optimal_omega(&k, 1.8, 1 << e).unwrap();
            let r = c.bound.discretization / c.bound.truncation;
            assert!((0.1..=10.0).contains(&r), "{} 2^{e}: {r}", k.label());
        }
    }
}

#[test]
fn generic_omega_rule() {
    let k = extime_kernel();
    let a = 1.8;
    let g = asymptotic_omega_generic(&k, a, 104).unwrap();
    // (1 + α/6)/(5α/6 − 1) = (α + 6)/(5α − 6)
    assert!(rel(g, asymptotic_omega(&k, a, 104).unwrap()) < 1e-12);
    assert!(asymptotic_omega_generic(&reverse_ou_kernel(1.0).unwrap(), a, 104).is_err());
}

#[test]
fn soundness_randomized() {
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let mut unit = move || (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    for &a in &[1.3, 1.8] {
        for _ in 0..5 {
            let w = 1 + (unit() * 200.0) as u64;
            let big = 1 + (unit() * (10_000 / w) as f64) as u64;
            let big = big.min(10_000 / w).max(1);
            let lambda = 0.05 + 3.0 * unit();
            let h = 0.05 + 0.9 * unit();
            let kernels = [
                reverse_ou_kernel(lambda).unwrap(),
                extime_kernel(),
                exfrequency_kernel(-0.5).unwrap(),
                lfsn_kernel(a, h).unwrap(),
            ];
            for k in &kernels {
                let t = true_error(k, a, w, big).unwrap();
                let b = kernel_bound(k, a, w, big).unwrap();
                assert!(
                    b.total_alpha_power >= t.total_alpha_power,
                    "{:?} a={a} w={w} O={big}: {} < {}",
                    k.params(),
                    b.total_alpha_power,
                    t.total_alpha_power
                );
            }
        }
    }
}
