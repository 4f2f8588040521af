//! Moving-average kernels, their localisability metadata and tangent forms.

use std::f64::consts::{FRAC_PI_2, PI};

use rustfft::num_complex::Complex64;
use statrs::function::gamma::gamma as gamma_fn;

use crate::error::{invalid, Error, Result};
use crate::quad;

/// The tangent process of a localisable moving average.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LocalForm {
    /// Linear fractional stable motion with kernel
    /// `b⁺((t−x)₊^{H−1/α} − (−x)₊^{H−1/α}) + b⁻((t−x)₋^{H−1/α} − (−x)₋^{H−1/α})`.
    Lfsm { h: f64, b_plus: f64, b_minus: f64 },
    /// `factor · L_α(t)` with Lévy motion `L_α`.
    Levy { factor: f64 },
    /// Mix of log-fractional and Lévy motion.
    LogMix { l1: f64, l2: f64 },
}

impl LocalForm {
    pub fn lfsm(h: f64, b_plus: f64, b_minus: f64) -> Result<Self> {
        if !(h > 0.0 && h < 1.0) {
            return Err(invalid("H", h, "must lie in (0, 1)"));
        }
        if b_plus == 0.0 && b_minus == 0.0 {
            return Err(Error::Domain("lfsm needs (b+, b-) != (0, 0)".into()));
        }
        Ok(LocalForm::Lfsm { h, b_plus, b_minus })
    }

    /// Self-similarity index of the tangent process.
    pub fn order(&self, alpha: f64) -> f64 {
        match *self {
            LocalForm::Lfsm { h, .. } => h,
            LocalForm::Levy { .. } | LocalForm::LogMix { .. } => 1.0 / alpha,
        }
    }
}

/// Constants of the increment condition
/// `|g(u+h) − g(u)| ≤ c|h|^a |u|^{γ−a}` for `|h| < η`, together with the
/// one-sided limits `g(±r)/r^γ → c₀^±`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Microlocal {
    pub gamma: f64,
    pub a: f64,
    pub c: f64,
    pub eta: f64,
    pub c0_plus: f64,
    pub c0_minus: f64,
    /// False when the constants are the nominal ones but the increment
    /// inequality is known not to hold everywhere.
    pub increment_bound_holds: bool,
}

/// Admissible stability indices `(lo, hi)` with optional closed ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaRange {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl AlphaRange {
    fn open_closed(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            lo_closed: false,
            hi_closed: true,
        }
    }

    pub fn contains(&self, alpha: f64) -> bool {
        let above = if self.lo_closed {
            alpha >= self.lo
        } else {
            alpha > self.lo
        };
        let below = if self.hi_closed {
            alpha <= self.hi
        } else {
            alpha < self.hi
        };
        above && below
    }

    /// A point safely inside the range.
    pub fn representative(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

impl std::fmt::Display for AlphaRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelKind {
    ReverseOu { lambda: f64 },
    Extime,
    ExFrequency { gamma: f64 },
    Lfsn { alpha: f64, h: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A kernel `g` together with everything the synthesis, bounds and
/// analysis code needs to know about it.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelDescriptor {
    kind: KernelKind,
    microlocal: Option<Microlocal>,
    beta_decay: f64,
    alpha_validity: AlphaRange,
    breakpoints: Vec<f64>,
    label: &'static str,
}

pub fn reverse_ou_kernel(lambda: f64) -> Result<KernelDescriptor> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(invalid("lambda", lambda, "must be > 0"));
    }
    KernelDescriptor {
        kind: KernelKind::ReverseOu { lambda },
        microlocal: Some(Microlocal {
            gamma: 0.0,
            a: 1.0,
            c: 2.0 * lambda.max(1.0),
            eta: (1.0 / lambda).min(1.0),
            c0_plus: 0.0,
            c0_minus: 1.0,
            increment_bound_holds: true,
        }),
        beta_decay: f64::INFINITY,
        alpha_validity: AlphaRange::open_closed(1.0, 2.0),
        breakpoints: vec![0.0],
        label: "rev_ou",
    }
    .checked()
}

pub fn extime_kernel() -> KernelDescriptor {
    KernelDescriptor {
        kind: KernelKind::Extime,
        microlocal: Some(Microlocal {
            gamma: 1.0 / 6.0,
            a: 1.0,
            c: 1.0,
            eta: 1.0,
            c0_plus: 1.0,
            c0_minus: 0.0,
            increment_bound_holds: true,
        }),
        beta_decay: 5.0 / 6.0,
        alpha_validity: AlphaRange::open_closed(1.2, 2.0),
        breakpoints: vec![0.0, 1.0],
        label: "extime",
    }
}

/// The kernel whose Fourier transform is `|ξ|^{−γ−1}` off `[−1, 1]`.
/// Its α range is the set where `γ ∈ (−1/α, 1/2 − 1/α)`.
pub fn exfrequency_kernel(gamma: f64) -> Result<KernelDescriptor> {
    if !(gamma > -1.0 && gamma < 0.0) {
        return Err(invalid("gamma", gamma, "must lie in (-1, 0)"));
    }
    let lo = (1.0 / (0.5 - gamma)).max(1.0);
    let hi = (-1.0 / gamma).min(2.0);
    KernelDescriptor {
        kind: KernelKind::ExFrequency { gamma },
        microlocal: None,
        beta_decay: 1.0,
        alpha_validity: AlphaRange {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        },
        breakpoints: vec![0.0],
        label: "exfrequency",
    }
    .checked()
}

/// Unit increment kernel of linear fractional stable motion.
///
/// `H = 1/α` is accepted and gives the indicator of `(0, 1]`.
pub fn lfsn_kernel(alpha: f64, h: f64) -> Result<KernelDescriptor> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(invalid("alpha", alpha, "must lie in (0, 2]"));
    }
    if !(h > 0.0 && h < 1.0) {
        return Err(invalid("H", h, "must lie in (0, 1)"));
    }
    let gamma = h - 1.0 / alpha;
    // At γ = 0 the kernel jumps by one at 0 and at 1.
    let c = if gamma == 0.0 { 2.0 } else { 2.0 * gamma.abs() };
    KernelDescriptor {
        kind: KernelKind::Lfsn { alpha, h },
        microlocal: Some(Microlocal {
            gamma,
            a: 1.0,
            c,
            eta: 1.0,
            c0_plus: 1.0,
            c0_minus: 0.0,
            increment_bound_holds: false,
        }),
        beta_decay: 1.0 - h + 1.0 / alpha,
        alpha_validity: AlphaRange {
            lo: alpha,
            hi: alpha,
            lo_closed: true,
            hi_closed: true,
        },
        breakpoints: vec![0.0, 1.0],
        label: "lfsn",
    }
    .checked()
}

#[inline]
fn pos_pow(x: f64, e: f64) -> f64 {
    if x > 0.0 {
        if e == 0.0 {
            1.0
        } else {
            x.powf(e)
        }
    } else {
        0.0
    }
}

impl KernelDescriptor {
    fn checked(self) -> Result<Self> {
        let alpha = self.alpha_validity.representative();
        let q = AlphaNormQuadrature::new(64.0, 256)?;
        let n = alpha_norm(&self, alpha, &q)?;
        if n.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonIntegrable(format!(
                "{} kernel has infinite {alpha}-norm",
                self.label
            )))
        }
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    pub fn label(&self) -> &'static str {
        self.label
    }

    pub fn microlocal(&self) -> Option<&Microlocal> {
        self.microlocal.as_ref()
    }

    pub fn beta_decay(&self) -> f64 {
        self.beta_decay
    }

    pub fn alpha_validity(&self) -> AlphaRange {
        self.alpha_validity
    }

    /// Points where `g` is singular or not smooth, in increasing order.
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Exponent of the worst local singularity, `g ~ |x|^e`.
    pub fn singular_exponent(&self) -> f64 {
        match self.kind {
            KernelKind::ReverseOu { .. } => 0.0,
            KernelKind::Extime => 1.0 / 6.0,
            KernelKind::ExFrequency { gamma } => gamma,
            KernelKind::Lfsn { alpha, h } => (h - 1.0 / alpha).min(0.0),
        }
    }

    /// Named parameters, for reports.
    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match self.kind {
            KernelKind::ReverseOu { lambda } => vec![("lambda", lambda)],
            KernelKind::Extime => vec![],
            KernelKind::ExFrequency { gamma } => vec![("gamma", gamma)],
            KernelKind::Lfsn { alpha, h } => vec![("alpha", alpha), ("H", h)],
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.eval_rel(x, 0.0)
    }

    /// `g(anchor + d)`, with the distance to each breakpoint formed as
    /// `(anchor − b) + d` so that tiny offsets from a breakpoint anchor
    /// are not rounded away.
    pub fn eval_rel(&self, anchor: f64, d: f64) -> f64 {
        match self.kind {
            KernelKind::ReverseOu { lambda } => {
                let x = anchor + d;
                if x <= 0.0 {
                    (lambda * x).exp()
                } else {
                    0.0
                }
            }
            KernelKind::Extime => {
                let x0 = anchor + d;
                let x1 = (anchor - 1.0) + d;
                if x0 <= 0.0 {
                    0.0
                } else if x1 <= 0.0 {
                    x0.powf(1.0 / 6.0)
                } else {
                    x0.powf(-5.0 / 6.0)
                }
            }
            KernelKind::ExFrequency { gamma } => exfrequency_eval(gamma, anchor + d),
            KernelKind::Lfsn { alpha, h } => {
                let gamma = h - 1.0 / alpha;
                let x0 = anchor + d;
                let x1 = (anchor - 1.0) + d;
                if gamma != 0.0 && x0 > 2.0 {
                    // x^γ − (x−1)^γ without cancellation
                    -x0.powf(gamma) * (gamma * (-1.0 / x0).ln_1p()).exp_m1()
                } else {
                    pos_pow(x0, gamma) - pos_pow(x1, gamma)
                }
            }
        }
    }

    /// `∫ |g|^α` over `x < −r` (left) or `x > r` (right), `r ≥ 1`: exact
    /// where a closed form exists, otherwise the integral of the decay
    /// envelope (an upper bound).
    pub fn tail_alpha_integral(&self, alpha: f64, side: Side, r: f64) -> Result<f64> {
        let nonint = || {
            Error::NonIntegrable(format!(
                "{} kernel: tail exponent {} times alpha {alpha} <= 1",
                self.label, self.beta_decay
            ))
        };
        if self.beta_decay * alpha <= 1.0 {
            return Err(nonint());
        }
        Ok(match (self.kind, side) {
            (KernelKind::ReverseOu { lambda }, Side::Left) => {
                (-alpha * lambda * r).exp() / (alpha * lambda)
            }
            (KernelKind::ReverseOu { .. }, Side::Right) => 0.0,
            (KernelKind::Extime, Side::Right) => {
                let e = 5.0 * alpha / 6.0 - 1.0;
                r.powf(-e) / e
            }
            (KernelKind::Extime, Side::Left) | (KernelKind::Lfsn { .. }, Side::Left) => 0.0,
            (KernelKind::Lfsn { alpha: ka, h }, Side::Right) => {
                // |x^γ − (x−1)^γ| ≤ |γ|(x−1)^{γ−1}
                let gamma = h - 1.0 / ka;
                if gamma == 0.0 {
                    0.0
                } else if r <= 1.0 {
                    return Err(Error::Domain("lfsn tail needs r > 1".into()));
                } else {
                    let e = (1.0 - gamma) * alpha - 1.0;
                    gamma.abs().powf(alpha) * (r - 1.0).powf(-e) / e
                }
            }
            (KernelKind::ExFrequency { .. }, _) => {
                // |g(x)| ≤ 4/|x|
                4f64.powf(alpha) * r.powf(1.0 - alpha) / (alpha - 1.0)
            }
        })
    }

    /// Right-hand side of the increment condition at `(u, h)`, when the
    /// kernel has one. For the Fourier-defined kernel (γ = −1/2 only) this
    /// is the nominal envelope `2|h|(|u|^{−3/2} ∧ |u|^{−1})`, which is
    /// exceeded by up to ~20% near `|u| ≈ 3.4`.
    pub fn increment_envelope(&self, u: f64, h: f64) -> Option<f64> {
        if let Some(m) = &self.microlocal {
            return Some(m.c * h.abs().powf(m.a) * u.abs().powf(m.gamma - m.a));
        }
        match self.kind {
            KernelKind::ExFrequency { gamma } if gamma == -0.5 => {
                let au = u.abs();
                let w = if au < 1.0 { au.powf(-1.5) } else { 1.0 / au };
                Some(2.0 * h.abs() * w)
            }
            _ => None,
        }
    }

    /// The tangent form at stability index `alpha`.
    pub fn local_form(&self, alpha: f64) -> Result<LocalForm> {
        if !self.alpha_validity.contains(alpha) {
            return Err(invalid(
                "alpha",
                alpha,
                "outside the kernel's admissible range",
            ));
        }
        match self.kind {
            KernelKind::ReverseOu { .. } => {
                let m = self.microlocal.as_ref().expect("reverse OU metadata");
                Ok(LocalForm::Levy {
                    factor: m.c0_plus - m.c0_minus,
                })
            }
            KernelKind::Extime => LocalForm::lfsm(1.0 / 6.0 + 1.0 / alpha, 1.0, 0.0),
            KernelKind::Lfsn { alpha: ka, h } => {
                if h == 1.0 / ka {
                    Ok(LocalForm::Levy { factor: 1.0 })
                } else {
                    LocalForm::lfsm(h, 1.0, 0.0)
                }
            }
            KernelKind::ExFrequency { gamma } => {
                let (b, _) = fourier_coefficients_b(2.0 * PI, 0.0, gamma)?;
                LocalForm::lfsm(gamma + 1.0 / alpha, b, b)
            }
        }
    }

    /// `∫_lo^hi w(x, g(x)) dx`, split at breakpoints, graded toward
    /// them, and with about `per_unit` panels per unit length elsewhere.
    fn integrate<W: FnMut(f64, f64) -> f64>(
        &self,
        lo: f64,
        hi: f64,
        per_unit: f64,
        mut w: W,
    ) -> f64 {
        let mut pts = vec![lo];
        pts.extend(self.breakpoints.iter().copied().filter(|&b| b > lo && b < hi));
        pts.push(hi);
        let is_break = |x: f64| self.breakpoints.contains(&x);
        let mut total = 0.0;
        for seg in pts.windows(2) {
            let (p, q) = (seg[0], seg[1]);
            let len = q - p;
            let edge = (0.5 * len).min(1.0);
            let levels = |x| if is_break(x) { quad::SINGULAR_LEVELS } else { 4 };
            total += quad::graded(
                |d| w(p + d, self.eval_rel(p, d)),
                edge,
                levels(p),
            );
            total += quad::graded(
                |d| w(q - d, self.eval_rel(q, -d)),
                edge,
                levels(q),
            );
            let mid = len - 2.0 * edge;
            if mid > 0.0 {
                let n = (mid * per_unit).ceil().max(1.0) as usize;
                total += quad::uniform(|x| w(x, self.eval(x)), p + edge, q - edge, n);
            }
        }
        total
    }
}

/// Resolution of [`alpha_norm`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaNormQuadrature {
    domain_cut: f64,
    panels: usize,
}

impl AlphaNormQuadrature {
    pub fn new(domain_cut: f64, panels: usize) -> Result<Self> {
        if !(domain_cut > 0.0 && domain_cut.is_finite()) {
            return Err(invalid("domain_cut", domain_cut, "must be > 0"));
        }
        if panels < 16 {
            return Err(invalid("panels", panels as f64, "must be >= 16"));
        }
        Ok(Self { domain_cut, panels })
    }

    pub fn domain_cut(&self) -> f64 {
        self.domain_cut
    }

    pub fn panels(&self) -> usize {
        self.panels
    }
}

impl Default for AlphaNormQuadrature {
    fn default() -> Self {
        Self {
            domain_cut: 1000.0,
            panels: 4096,
        }
    }
}

/// `‖g‖_α = (∫|g|^α)^{1/α}`: quadrature on `[−cut, cut]` plus the
/// kernel's tail integrals beyond.
pub fn alpha_norm(kernel: &KernelDescriptor, alpha: f64, quad: &AlphaNormQuadrature) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(invalid("alpha", alpha, "must lie in (0, 2]"));
    }
    if kernel.singular_exponent() * alpha <= -1.0 {
        return Err(Error::NonIntegrable(format!(
            "{} kernel: |g|^{alpha} is not integrable at its singular point",
            kernel.label
        )));
    }
    let cut = quad.domain_cut.max(1.0);
    let per_unit = quad.panels as f64 / (2.0 * cut);
    let body = kernel.integrate(-cut, cut, per_unit, |_, g| g.abs().powf(alpha));
    let tails = kernel.tail_alpha_integral(alpha, Side::Left, cut)?
        + kernel.tail_alpha_integral(alpha, Side::Right, cut)?;
    Ok((body + tails).powf(1.0 / alpha))
}

/// `(1/2π) ∫_{−cut}^{cut} g(x) e^{ixξ} dx` as `(re, im)`. A diagnostic for
/// checking a kernel against its intended Fourier transform; the hard
/// truncation leaves an error of order `1/(cut·|ξ ± 1|)` for slowly
/// decaying kernels.
pub fn fourier_transform_diagnostic(
    kernel: &KernelDescriptor,
    xi: f64,
    cut: f64,
    panels: usize,
) -> (f64, f64) {
    let per_unit = panels as f64 / (2.0 * cut);
    let re = kernel.integrate(-cut, cut, per_unit, |x, g| g * (xi * x).cos());
    let im = kernel.integrate(-cut, cut, per_unit, |x, g| g * (xi * x).sin());
    (re / (2.0 * PI), im / (2.0 * PI))
}

/// `(b⁺, b⁻)` of the Fourier criterion for `ĝ(ξ) ~ (l₁ + i l₂ sgn ξ)|ξ|^{−γ−1}`
/// at high frequency.
pub fn fourier_coefficients_b(l1: f64, l2: f64, gamma: f64) -> Result<(f64, f64)> {
    if gamma == 0.0 {
        return Err(Error::LogarithmicCase);
    }
    if !(gamma > -1.0 && gamma < 1.0) {
        return Err(Error::Domain(format!("gamma = {gamma} outside (-1, 1)")));
    }
    let arg = PI * (gamma + 1.0) / 2.0;
    let (c, s) = (arg.cos(), arg.sin());
    if c.abs() < 1e-15 || s.abs() < 1e-15 {
        return Err(Error::Domain(format!("gamma = {gamma} is a pole of the formula")));
    }
    let k = 1.0 / (2.0 * gamma_fn(gamma + 1.0));
    Ok((k * (l1 / c - l2 / s), k * (l1 / c + l2 / s)))
}

/// Kernel `h(t, z)` of the tangent process at time `t`.
pub fn tangent_kernel(form: &LocalForm, alpha: f64, t: f64, z: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    match *form {
        LocalForm::Lfsm { h, b_plus, b_minus } => {
            let e = h - 1.0 / alpha;
            b_plus * (pos_pow(t + z, e) - pos_pow(z, e))
                + b_minus * (pos_pow(-(t + z), e) - pos_pow(-z, e))
        }
        LocalForm::Levy { factor } => factor * levy_indicator(t, -z),
        LocalForm::LogMix { l1, l2 } => {
            let zt = (t + z).abs().ln() - z.abs().ln();
            -l1 / PI * zt - l2 * levy_indicator(t, -z)
        }
    }
}

// l_t(x) = 1_{[0,t)}(x) for t ≥ 0, −1_{[t,0)}(x) for t < 0
fn levy_indicator(t: f64, x: f64) -> f64 {
    if t >= 0.0 {
        if x >= 0.0 && x < t {
            1.0
        } else {
            0.0
        }
    } else if x >= t && x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

// ---- the Fourier-defined kernel --------------------------------------

const SERIES_MAX: f64 = 2.0;
const ASYMPTOTIC_MIN: f64 = 30.0;

// ∫_0^∞ v^{−s} sin v dv for s ∈ (1, 2)
fn sine_integral_total(s: f64) -> f64 {
    gamma_fn(1.0 - s) * (FRAC_PI_2 * (1.0 - s)).sin()
}

// ∫_0^x v^{−s} sin v dv by its power series
fn sine_integral_head(s: f64, x: f64) -> f64 {
    let x2 = x * x;
    let mut pow = x.powf(2.0 - s);
    let mut fact = 1.0;
    let mut sum = 0.0;
    for k in 0..60 {
        let kk = k as f64;
        let term = pow / (fact * (2.0 * kk + 2.0 - s));
        sum += if k % 2 == 0 { term } else { -term };
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
        pow *= x2;
        fact *= (2.0 * kk + 2.0) * (2.0 * kk + 3.0);
    }
    sum
}

// ∫_x^∞ v^{−s} sin v dv for large x: e^{ix} Σ_k i(−i)^k (s)_k x^{−s−k}
fn sine_integral_asymptotic(s: f64, x: f64) -> f64 {
    let mut term = x.powf(-s);
    let mut re = 0.0;
    let mut im = 0.0;
    let mut prev = f64::INFINITY;
    for k in 0..200 {
        if term > prev || term < 1e-19 * x.powf(-s) {
            break;
        }
        match k % 4 {
            0 => im += term,
            1 => re += term,
            2 => im -= term,
            _ => re -= term,
        }
        prev = term;
        term *= (s + k as f64) / x;
    }
    x.sin() * re + x.cos() * im
}

// ∫_x^∞ v^{−s} sin v dv = Im[x^{1−s} e^{ix} Γ(1−s, −ix) e^{−ix}(−ix)^{s−1}],
// the incomplete gamma by its continued fraction (modified Lentz)
fn sine_integral_cf(s: f64, x: f64) -> f64 {
    let a = 1.0 - s;
    let z = Complex64::new(0.0, -x);
    let tiny = 1e-300;
    let mut b = z + 1.0 - a;
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.norm() < tiny {
            d = Complex64::new(tiny, 0.0);
        }
        c = b + an / c;
        if c.norm() < tiny {
            c = Complex64::new(tiny, 0.0);
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    (x.powf(a) * Complex64::from_polar(1.0, x) * h).im
}

// ∫_x^∞ v^{−s} sin v dv, x > 0
fn sine_integral_tail(s: f64, x: f64) -> f64 {
    if x <= SERIES_MAX {
        sine_integral_total(s) - sine_integral_head(s, x)
    } else if x >= ASYMPTOTIC_MIN {
        sine_integral_asymptotic(s, x)
    } else {
        sine_integral_cf(s, x)
    }
}

fn exfrequency_eval(gamma: f64, x: f64) -> f64 {
    let ax = x.abs();
    if ax == 0.0 {
        return f64::INFINITY;
    }
    let sinc = if ax < 1e-8 { 1.0 } else { ax.sin() / ax };
    2.0 * (gamma + 1.0) * ax.powf(gamma) * sine_integral_tail(gamma + 2.0, ax) - 2.0 * sinc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_integral_branches_agree() {
        let s = 1.5;
        // series vs midrange at the switch point
        let a = sine_integral_total(s) - sine_integral_head(s, 8.0);
        let panels = 22;
        let b = sine_integral_asymptotic(s, 30.0)
            + quad::uniform(|v| v.powf(-s) * v.sin(), 8.0, 30.0, panels);
        assert!((a - b).abs() < 1e-12, "{a} {b}");
        // asymptotic vs quadrature from 30 to 60
        let c = sine_integral_asymptotic(s, 30.0);
        let d = sine_integral_asymptotic(s, 60.0)
            + quad::uniform(|v| v.powf(-s) * v.sin(), 30.0, 60.0, 30);
        assert!((c - d).abs() < 1e-13, "{c} {d}");
    }

    #[test]
    fn levy_indicator_orientation() {
        assert_eq!(levy_indicator(2.0, 1.0), 1.0);
        assert_eq!(levy_indicator(2.0, 2.0), 0.0);
        assert_eq!(levy_indicator(-2.0, -1.0), -1.0);
        assert_eq!(levy_indicator(-2.0, 0.0), 0.0);
    }
}
