//! α-norm error bounds for the Riemann-sum synthesis, their quadrature
//! reference values, and the choice of the cut-off Ω.
//!
//! All quantities are in "α-power" form: the error of `Y(k)` in α-norm is
//! `Err = (Σ_cells ∫ |g(endpoint) − g(s)|^α ds + ∫_{|x|>Ω} |g|^α)^{1/α}`.

use std::f64::consts::PI;

use statrs::function::beta::beta;
use statrs::function::gamma::gamma;

use crate::error::{invalid, Error, Result};
use crate::kernels::{KernelDescriptor, KernelKind, Side};
use crate::quad;
use crate::series::{partial_zeta, SumMode};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundBreakdown {
    pub alpha: f64,
    /// ω-driven part of `Err^α`.
    pub discretization: f64,
    /// Ω-driven part of `Err^α`.
    pub truncation: f64,
    /// `discretization + truncation`.
    pub total_alpha_power: f64,
    /// `total_alpha_power^{1/α}`, a bound on the α-norm error.
    pub err_scale: f64,
}

impl BoundBreakdown {
    pub fn new(alpha: f64, discretization: f64, truncation: f64) -> Self {
        let total = discretization + truncation;
        Self {
            alpha,
            discretization,
            truncation,
            total_alpha_power: total,
            err_scale: total.powf(1.0 / alpha),
        }
    }
}

fn check_grid(omega: u64, big_omega: u64) -> Result<u64> {
    if omega < 1 {
        return Err(invalid("omega", omega as f64, "must be >= 1"));
    }
    if big_omega < 1 {
        return Err(invalid("Omega", big_omega as f64, "must be >= 1"));
    }
    omega
        .checked_mul(big_omega)
        .ok_or(Error::TooLarge {
            what: "omega*Omega",
            requested: omega as u128 * big_omega as u128,
            limit: u64::MAX as u128,
        })
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(invalid("alpha", alpha, "must lie in (0, 2]"));
    }
    Ok(())
}

/// The general bound from the increment condition:
/// `2c^α/((1+aα) ω^{1+γα}) Σ_{j≤ωΩ} j^{−(a−γ)α}` plus the exact tails.
pub fn generic_bound(
    kernel: &KernelDescriptor,
    alpha: f64,
    omega: u64,
    big_omega: u64,
) -> Result<BoundBreakdown> {
    generic_bound_with(kernel, alpha, omega, big_omega, SumMode::Exact)
}

fn generic_bound_with(
    kernel: &KernelDescriptor,
    alpha: f64,
    omega: u64,
    big_omega: u64,
    mode: SumMode,
) -> Result<BoundBreakdown> {
    check_alpha(alpha)?;
    let n = check_grid(omega, big_omega)?;
    let m = kernel.microlocal().ok_or_else(|| {
        Error::Inapplicable(format!(
            "{} kernel has no increment-condition metadata; use its specific bound",
            kernel.label()
        ))
    })?;
    if !(omega as f64 > 1.0 / m.eta) {
        return Err(invalid("omega", omega as f64, "must exceed 1/eta"));
    }
    let s = (m.a - m.gamma) * alpha;
    if s <= 1.0 {
        return Err(Error::Domain(format!(
            "(a - gamma) * alpha = {s} <= 1: the bound does not converge"
        )));
    }
    let w = omega as f64;
    let disc = 2.0 * m.c.powf(alpha) / ((1.0 + m.a * alpha) * w.powf(1.0 + m.gamma * alpha))
        * partial_zeta(s, n, mode);
    let trunc = tail_truth(kernel, alpha, Side::Left, big_omega as f64)?
        + tail_truth(kernel, alpha, Side::Right, big_omega as f64)?;
    Ok(BoundBreakdown::new(alpha, disc, trunc))
}

/// Sharp bound for `g(x) = e^{λx} 1_{x≤0}`:
/// `(κλ)^α/(1+α) · (1 − e^{−αλΩ})/(e^{αλ/ω} − 1) · ω^{−1−α} + e^{−αλΩ}/(αλ)`
/// with `κ = max(2, (e^{λ/ω} − 1)ω/λ)`. For `λ = 1` this is the classical
/// `2^α` form whenever `ω ≥ 1`.
pub fn rev_ou_bound(lambda: f64, alpha: f64, omega: u64, big_omega: u64) -> Result<BoundBreakdown> {
    check_alpha(alpha)?;
    check_grid(omega, big_omega)?;
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(invalid("lambda", lambda, "must be > 0"));
    }
    let (w, big) = (omega as f64, big_omega as f64);
    let kappa = 2f64.max((lambda / w).exp_m1() * w / lambda);
    let decay = -(-alpha * lambda * big).exp_m1() / (alpha * lambda / w).exp_m1();
    let disc = (kappa * lambda).powf(alpha) / (1.0 + alpha) * decay * w.powf(-1.0 - alpha);
    let trunc = (-alpha * lambda * big).exp() / (alpha * lambda);
    Ok(BoundBreakdown::new(alpha, disc, trunc))
}

/// The reverse OU error itself:
/// `∫_0^{1/ω}(e^{λv} − 1)^α dv · (1 − e^{−αλΩ})/(e^{αλ/ω} − 1) + e^{−αλΩ}/(αλ)`.
pub fn rev_ou_exact(lambda: f64, alpha: f64, omega: u64, big_omega: u64) -> Result<BoundBreakdown> {
    check_alpha(alpha)?;
    check_grid(omega, big_omega)?;
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(invalid("lambda", lambda, "must be > 0"));
    }
    let (w, big) = (omega as f64, big_omega as f64);
    let cell = quad::graded(|v| (lambda * v).exp_m1().powf(alpha), 1.0 / w, 40);
    let decay = -(-alpha * lambda * big).exp_m1() / (alpha * lambda / w).exp_m1();
    let trunc = (-alpha * lambda * big).exp() / (alpha * lambda);
    Ok(BoundBreakdown::new(alpha, cell * decay, trunc))
}

fn check_h(h: f64) -> Result<()> {
    if !(h > 0.0 && h < 1.0) {
        return Err(invalid("H", h, "must lie in (0, 1)"));
    }
    Ok(())
}

/// Closed-form bound for the lfsn kernel:
/// `2^{α+1}|γ|^α/(1+α) Σ_{j≤ωΩ} j^{−1−α(1−H)} ω^{−αH} + ∫_Ω^∞|g|^α`,
/// `γ = H − 1/α`. Not a valid bound when `H < 1/α`; see
/// [`lfsn_bound_certified`].
pub fn lfsn_bound(alpha: f64, h: f64, omega: u64, big_omega: u64) -> Result<BoundBreakdown> {
    check_alpha(alpha)?;
    check_h(h)?;
    let n = check_grid(omega, big_omega)?;
    let gamma = h - 1.0 / alpha;
    let disc = 2f64.powf(alpha + 1.0) * gamma.abs().powf(alpha) / (1.0 + alpha)
        * partial_zeta(1.0 + alpha * (1.0 - h), n, SumMode::Exact)
        * (omega as f64).powf(-alpha * h);
    let trunc = lfsn_tail(alpha, h, big_omega as f64)?;
    Ok(BoundBreakdown::new(alpha, disc, trunc))
}

/// A bound for the lfsn kernel valid for every `H`, from splitting `g` into
/// its two power pieces:
/// `2 max(1, 2^{α−1}) ω^{−1−γα} [T₁ + |γ|^α/(1+α) Σ_{j<ωΩ} j^{(γ−1)α}] + ∫_Ω^∞|g|^α`
/// with `T₁ = ∫_0^1 |1 − v^γ|^α dv`.
pub fn lfsn_bound_certified(
    alpha: f64,
    h: f64,
    omega: u64,
    big_omega: u64,
) -> Result<BoundBreakdown> {
    lfsn_bound_certified_with(alpha, h, omega, big_omega, SumMode::Exact)
}

fn lfsn_bound_certified_with(
    alpha: f64,
    h: f64,
    omega: u64,
    big_omega: u64,
    mode: SumMode,
) -> Result<BoundBreakdown> {
    check_alpha(alpha)?;
    check_h(h)?;
    let n = check_grid(omega, big_omega)?;
    let gamma = h - 1.0 / alpha;
    let t1 = if gamma > 0.0 {
        beta(1.0 / gamma, alpha + 1.0) / gamma
    } else if gamma < 0.0 {
        beta(-alpha - 1.0 / gamma, alpha + 1.0) / -gamma
    } else {
        0.0
    };
    let sum = partial_zeta((1.0 - gamma) * alpha, n - 1, mode);
    let disc = 2.0
        * 2f64.powf(alpha - 1.0).max(1.0)
        * (omega as f64).powf(-1.0 - gamma * alpha)
        * (t1 + gamma.abs().powf(alpha) / (1.0 + alpha) * sum);
    let trunc = lfsn_tail(alpha, h, big_omega as f64)?;
    Ok(BoundBreakdown::new(alpha, disc, trunc))
}

// ∫_R^∞ |x^γ − (x−1)^γ|^α dx, R ≥ 1
fn lfsn_tail(alpha: f64, h: f64, r: f64) -> Result<f64> {
    let gamma = h - 1.0 / alpha;
    if gamma == 0.0 {
        return Ok(0.0);
    }
    let g = |x0: f64, x1: f64| {
        if x0 > 2.0 {
            -x0.powf(gamma) * (gamma * (-1.0 / x0).ln_1p()).exp_m1()
        } else {
            x0.powf(gamma) - x1.powf(gamma)
        }
    };
    // [R, R+1] graded toward R (singular at R = 1), then x = (R+1)/u.
    let near = quad::graded(
        |d| g(r + d, (r - 1.0) + d).abs().powf(alpha),
        1.0,
        if r == 1.0 { quad::SINGULAR_LEVELS } else { 8 },
    );
    let far = quad::to_infinity(|x| g(x, x - 1.0).abs().powf(alpha), r + 1.0, 80);
    Ok(near + far)
}

/// `(2/(1+α)) Σ_{j≤ωΩ} j^{−5α/6} ω^{−1−α/6} + Ω^{1−5α/6}/(5α/6 − 1)`.
pub fn extime_bound(alpha: f64, omega: u64, big_omega: u64) -> Result<BoundBreakdown> {
    extime_bound_with(alpha, omega, big_omega, SumMode::Exact)
}

fn extime_bound_with(alpha: f64, omega: u64, big_omega: u64, mode: SumMode) -> Result<BoundBreakdown> {
    check_alpha(alpha)?;
    if alpha <= 1.2 {
        return Err(invalid("alpha", alpha, "must exceed 6/5"));
    }
    let n = check_grid(omega, big_omega)?;
    let e = 5.0 * alpha / 6.0;
    let disc = 2.0 / (1.0 + alpha)
        * partial_zeta(e, n, mode)
        * (omega as f64).powf(-1.0 - alpha / 6.0);
    let trunc = (big_omega as f64).powf(1.0 - e) / (e - 1.0);
    Ok(BoundBreakdown::new(alpha, disc, trunc))
}

/// Closed-form bound for the Fourier-defined kernel with `γ = −1/2`:
/// `2^{α+2}/(1+α) Σ_{j≤ωΩ} j^{−α} ω^{−(1−α/2)} + 8/((α−1)Ω^{α−1})`.
pub fn exfrequency_bound(alpha: f64, omega: u64, big_omega: u64) -> Result<BoundBreakdown> {
    exfrequency_bound_with(alpha, omega, big_omega, SumMode::Exact)
}

fn exfrequency_bound_with(
    alpha: f64,
    omega: u64,
    big_omega: u64,
    mode: SumMode,
) -> Result<BoundBreakdown> {
    if !(alpha > 1.0 && alpha < 2.0) {
        return Err(invalid("alpha", alpha, "must lie in (1, 2)"));
    }
    let n = check_grid(omega, big_omega)?;
    Ok(exfrequency_from_sum(alpha, omega, big_omega, partial_zeta(alpha, n, mode)))
}

/// [`exfrequency_bound`] with `Σ j^{−α}` replaced by `α/(α−1)`.
pub fn exfrequency_bound_simplified(alpha: f64, omega: u64, big_omega: u64) -> Result<BoundBreakdown> {
    if !(alpha > 1.0 && alpha < 2.0) {
        return Err(invalid("alpha", alpha, "must lie in (1, 2)"));
    }
    check_grid(omega, big_omega)?;
    Ok(exfrequency_from_sum(alpha, omega, big_omega, alpha / (alpha - 1.0)))
}

fn exfrequency_from_sum(alpha: f64, omega: u64, big_omega: u64, sum: f64) -> BoundBreakdown {
    let disc = 2f64.powf(alpha + 2.0) / (1.0 + alpha) * sum * (omega as f64).powf(alpha / 2.0 - 1.0);
    let trunc = 8.0 / (alpha - 1.0) * (big_omega as f64).powf(1.0 - alpha);
    BoundBreakdown::new(alpha, disc, trunc)
}

/// A bound for the `γ = −1/2` Fourier kernel that holds on every grid.
///
/// With `F(x) = ∫_x^∞ u^{−1/2} cos u du` the kernel is `g = 2x^{−1/2}F(x)`,
/// `|F| ≤ √(π/2)`, and `|F| ≤ 2x^{−1/2}` by the second mean value theorem.
/// Hence `|g| ≤ √(2π)x^{−1/2}`, `|g| ≤ 4/x` and
/// `|g'| ≤ K max(x^{−3/2}, x^{−1})` with `K = 2 + √(π/2)`. The two cells next
/// to the singularity are bounded by Minkowski, the rest by the derivative
/// envelope at the cell end nearer the origin.
pub fn exfrequency_bound_certified(alpha: f64, omega: u64, big_omega: u64) -> Result<BoundBreakdown> {
    exfrequency_bound_certified_with(alpha, omega, big_omega, SumMode::Exact)
}

fn exfrequency_bound_certified_with(
    alpha: f64,
    omega: u64,
    big_omega: u64,
    mode: SumMode,
) -> Result<BoundBreakdown> {
    if !(alpha > 1.0 && alpha < 2.0) {
        return Err(invalid("alpha", alpha, "must lie in (1, 2)"));
    }
    let n = check_grid(omega, big_omega)?;
    let w = omega as f64;
    let root = (2.0 * PI).sqrt();
    let first = root.powf(alpha)
        * w.powf(alpha / 2.0 - 1.0)
        * (1.0 + (1.0 - alpha / 2.0).powf(-1.0 / alpha)).powf(alpha);
    let k = 2.0 + (PI / 2.0).sqrt();
    let near = (omega - 1).min(n - 1);
    let mut rest = w.powf(alpha / 2.0 - 1.0) * partial_zeta(1.5 * alpha, near, mode);
    if n - 1 > near {
        rest += (partial_zeta(alpha, n - 1, mode) - partial_zeta(alpha, near, mode)) / w;
    }
    let disc = 2.0 * (first + k.powf(alpha) * rest);
    let trunc = 2.0 * 4f64.powf(alpha) / (alpha - 1.0) * (big_omega as f64).powf(1.0 - alpha);
    Ok(BoundBreakdown::new(alpha, disc, trunc))
}

/// The tightest bound this crate can certify for a built-in kernel.
pub fn kernel_bound(
    kernel: &KernelDescriptor,
    alpha: f64,
    omega: u64,
    big_omega: u64,
) -> Result<BoundBreakdown> {
    kernel_bound_with(kernel, alpha, omega, big_omega, SumMode::Exact)
}

fn kernel_bound_with(
    kernel: &KernelDescriptor,
    alpha: f64,
    omega: u64,
    big_omega: u64,
    mode: SumMode,
) -> Result<BoundBreakdown> {
    match kernel.kind() {
        KernelKind::ReverseOu { lambda } => rev_ou_bound(lambda, alpha, omega, big_omega),
        KernelKind::Extime => extime_bound_with(alpha, omega, big_omega, mode),
        KernelKind::Lfsn { alpha: ka, h } => {
            if ka != alpha {
                return Err(invalid("alpha", alpha, "lfsn kernel was built for a different alpha"));
            }
            lfsn_bound_certified_with(alpha, h, omega, big_omega, mode)
        }
        KernelKind::ExFrequency { gamma } if gamma == -0.5 => {
            exfrequency_bound_certified_with(alpha, omega, big_omega, mode)
        }
        KernelKind::ExFrequency { .. } => Err(Error::Inapplicable(
            "the Fourier-kernel bound is only available for gamma = -1/2".into(),
        )),
    }
}

// ---- quadrature reference ---------------------------------------------

const CELL_LEVELS: usize = 12;
const EXFREQ_TAIL_SPAN: f64 = 4000.0;

/// `∫ |g|^α` over `x < −R` or `x > R`, computed rather than bounded where
/// the kernel allows.
pub fn tail_truth(kernel: &KernelDescriptor, alpha: f64, side: Side, r: f64) -> Result<f64> {
    match kernel.kind() {
        KernelKind::ReverseOu { .. } | KernelKind::Extime => kernel.tail_alpha_integral(alpha, side, r),
        KernelKind::Lfsn { alpha: ka, h } => match side {
            Side::Left => Ok(0.0),
            Side::Right => {
                if ka != alpha {
                    return Err(invalid("alpha", alpha, "lfsn kernel was built for a different alpha"));
                }
                lfsn_tail(alpha, h, r)
            }
        },
        KernelKind::ExFrequency { .. } => {
            if alpha <= 1.0 {
                return Err(Error::NonIntegrable(format!(
                    "exfrequency kernel: |g|^{alpha} has a 1/x^{alpha} tail"
                )));
            }
            let end = r + EXFREQ_TAIL_SPAN;
            let panels = (2.0 * EXFREQ_TAIL_SPAN) as usize;
            let body = quad::uniform(|x| kernel.eval(x).abs().powf(alpha), r, end, panels);
            // |g| ~ 2|sin x|/x: mean of |sin|^α times ∫ (2/x)^α
            let m = gamma((alpha + 1.0) / 2.0) / (PI.sqrt() * gamma(alpha / 2.0 + 1.0));
            Ok(body + 2f64.powf(alpha) * m * end.powf(1.0 - alpha) / (alpha - 1.0))
        }
    }
}

// ∫_{[k/ω, (k+1)/ω]} |v − g(s)|^α ds where v = g at the `value_at_hi` end.
fn cell_error(kernel: &KernelDescriptor, alpha: f64, omega: f64, k: i64, value_at_hi: bool) -> f64 {
    let lo = k as f64 / omega;
    let hi = (k + 1) as f64 / omega;
    let len = 1.0 / omega;
    let v = if value_at_hi { kernel.eval(hi) } else { kernel.eval(lo) };
    let is_break = |x: f64| kernel.breakpoints().contains(&x);
    let f = |anchor: f64, d: f64| (v - kernel.eval_rel(anchor, d)).abs().powf(alpha);
    let (value_end, other_end) = if value_at_hi { (hi, lo) } else { (lo, hi) };
    let toward = |end: f64| if end == hi { -1.0 } else { 1.0 };
    if is_break(other_end) {
        let half = 0.5 * len;
        let a = quad::graded(|d| f(value_end, toward(value_end) * d), half, CELL_LEVELS);
        let b = quad::graded(|d| f(other_end, toward(other_end) * d), half, quad::SINGULAR_LEVELS);
        a + b
    } else {
        quad::graded(|d| f(value_end, toward(value_end) * d), len, CELL_LEVELS)
    }
}

/// The actual `Err^α` of the synthesis at `(ω, Ω)`, by quadrature of every
/// cell of the Riemann sum plus the tails beyond `±Ω`.
pub fn true_error(
    kernel: &KernelDescriptor,
    alpha: f64,
    omega: u64,
    big_omega: u64,
) -> Result<BoundBreakdown> {
    check_alpha(alpha)?;
    let n = check_grid(omega, big_omega)?;
    if n > 10_000_000 {
        return Err(Error::TooLarge {
            what: "quadrature cells",
            requested: 2 * n as u128,
            limit: 20_000_000,
        });
    }
    let w = omega as f64;
    let n = n as i64;
    // an even kernel mirrors each negative cell onto a positive one
    let even = matches!(kernel.kind(), KernelKind::ExFrequency { .. });
    let mut disc = 0.0;
    for m in 1..=n {
        // positive cell [(m−1)/ω, m/ω] uses g(m/ω)
        let pos = cell_error(kernel, alpha, w, m - 1, true);
        // negative cell [−m/ω, −(m−1)/ω] uses g(−m/ω)
        disc += if even { 2.0 * pos } else { pos + cell_error(kernel, alpha, w, -m, false) };
    }
    let r = big_omega as f64;
    let trunc = tail_truth(kernel, alpha, Side::Left, r)? + tail_truth(kernel, alpha, Side::Right, r)?;
    Ok(BoundBreakdown::new(alpha, disc, trunc))
}

// ---- tuning -------------------------------------------------------------

/// Result of [`optimal_omega`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaChoice {
    /// The kernel's asymptotic balance rule `Ω(ω)`, unrounded.
    pub asymptotic: f64,
    /// Integer Ω at which the two bound terms are closest in ratio.
    pub balanced: u64,
    /// The bound at `balanced`.
    pub bound: BoundBreakdown,
}

/// Asymptotic `Ω(ω)` at which discretization and truncation are of the same
/// order.
pub fn asymptotic_omega(kernel: &KernelDescriptor, alpha: f64, omega: u64) -> Result<f64> {
    let w = omega as f64;
    let v = match kernel.kind() {
        KernelKind::ReverseOu { lambda } => w.ln() / lambda,
        KernelKind::Lfsn { h, .. } => w.powf(h / (1.0 - h)),
        KernelKind::Extime => w.powf((alpha + 6.0) / (5.0 * alpha - 6.0)),
        KernelKind::ExFrequency { .. } => w.powf((2.0 - alpha) / (2.0 * (alpha - 1.0))),
    };
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        asymptotic_omega_generic(kernel, alpha, omega)
    }
}

/// `ω^{(1+αγ)/(αβ−1)}`, the rule for a kernel with power-law tail `β`.
pub fn asymptotic_omega_generic(kernel: &KernelDescriptor, alpha: f64, omega: u64) -> Result<f64> {
    let m = kernel
        .microlocal()
        .ok_or_else(|| Error::Inapplicable(format!("{} kernel has no gamma", kernel.label())))?;
    let b = kernel.beta_decay();
    if !b.is_finite() || alpha * b <= 1.0 {
        return Err(Error::Inapplicable(
            "needs a finite tail exponent with alpha*beta > 1".into(),
        ));
    }
    Ok((omega as f64).powf((1.0 + alpha * m.gamma) / (alpha * b - 1.0)))
}

const OMEGA_SEARCH_MAX: f64 = 1e18;

/// Ω for a given ω: the asymptotic rule, and the integer where the
/// certified bound's two terms balance (every bound here decreases in Ω,
/// so balancing is the meaningful finite-ω optimum).
pub fn optimal_omega(kernel: &KernelDescriptor, alpha: f64, omega: u64) -> Result<OmegaChoice> {
    if omega < 2 {
        return Err(invalid("omega", omega as f64, "must be >= 2"));
    }
    let asymptotic = asymptotic_omega(kernel, alpha, omega)?;
    let eval = |big: u64| kernel_bound_with(kernel, alpha, omega, big, SumMode::Fast);
    // log(truncation / discretization) decreases in Ω
    let score = |b: &BoundBreakdown| {
        if b.truncation == 0.0 {
            f64::NEG_INFINITY
        } else {
            (b.truncation / b.discretization).ln()
        }
    };
    let limit = (OMEGA_SEARCH_MAX / omega as f64).max(1.0) as u64;
    let mut lo = 1u64;
    let b_lo = eval(lo)?;
    if score(&b_lo) <= 0.0 {
        return Ok(OmegaChoice {
            asymptotic,
            balanced: 1,
            bound: b_lo,
        });
    }
    let mut hi = (asymptotic.ceil() as u64).clamp(2, limit);
    while score(&eval(hi)?) > 0.0 {
        if hi == limit {
            return Err(Error::Domain(format!(
                "truncation still dominates at Omega = {limit}; search domain unbounded"
            )));
        }
        lo = hi;
        hi = hi.saturating_mul(4).min(limit);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if score(&eval(mid)?) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (bl, bh) = (eval(lo)?, eval(hi)?);
    let (balanced, bound) = if score(&bl).abs() <= score(&bh).abs() {
        (lo, bl)
    } else {
        (hi, bh)
    };
    Ok(OmegaChoice {
        asymptotic,
        balanced,
        bound,
    })
}
