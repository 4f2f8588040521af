//! Localisability diagnostics: `L^α` distance of rescaled kernel increments
//! to the tangent kernel, fractional-moment scale estimation, scaling
//! exponents of paths, and an empirical characteristic-function check.

use std::f64::consts::PI;

use statrs::function::gamma::gamma;

use crate::error::{invalid, Error, Result};
use crate::kernels::{tangent_kernel, KernelDescriptor, LocalForm};
use crate::quad;
use crate::synthesis::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailHandling {
    /// Integrate `|z| > z_cut` through `z = z_cut/u`, assuming power-law decay.
    PowerLaw,
    /// Drop `|z| > z_cut`.
    None,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    pub z_cut: f64,
    /// Resolution of the finite part: no panel is wider than `2 z_cut / panels`.
    pub panels: usize,
    pub tail_handling: TailHandling,
}

impl QuadConfig {
    pub fn new(z_cut: f64, panels: usize, tail_handling: TailHandling) -> Result<Self> {
        if !(z_cut > 0.0 && z_cut.is_finite()) {
            return Err(invalid("z_cut", z_cut, "must be positive and finite"));
        }
        if panels < 64 {
            return Err(invalid("panels", panels as f64, "must be >= 64"));
        }
        Ok(Self {
            z_cut,
            panels,
            tail_handling,
        })
    }
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            z_cut: 1e3,
            panels: 512,
            tail_handling: TailHandling::PowerLaw,
        }
    }
}

const SEGMENT_LEVELS: usize = 40;
const TAIL_LEVELS: usize = 60;

/// `D(r) = ∫ |r^{−γ}(g(r(t+z)) − g(rz)) − h(t,z)|^α dz`, with `h` the
/// tangent kernel of `form` and `γ = order − 1/α`.
///
/// The finite part `|z| ≤ A` is split at every point where either term
/// is non-smooth and graded toward both ends of each piece. `A` is
/// `z_cut`, widened to cover the rescaled kernel breakpoints.
pub fn lalpha_distance(
    kernel: &KernelDescriptor,
    alpha: f64,
    form: &LocalForm,
    t: f64,
    r: f64,
    quad: &QuadConfig,
) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(invalid("alpha", alpha, "must lie in (0, 2]"));
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(invalid("r", r, "must be positive and finite"));
    }
    if !t.is_finite() {
        return Err(invalid("t", t, "must be finite"));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let gamma = form.order(alpha) - 1.0 / alpha;
    let norm = r.powf(-gamma);
    let f = |z: f64| {
        let fr = norm * (kernel.eval(r * (t + z)) - kernel.eval(r * z));
        let v = (fr - tangent_kernel(form, alpha, t, z)).abs().powf(alpha);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };

    let mut nodes = vec![0.0, -t];
    for &b in kernel.breakpoints() {
        nodes.push(b / r);
        nodes.push(b / r - t);
    }
    let reach = nodes.iter().fold(0.0f64, |m, z| m.max(z.abs()));
    let cut = quad.z_cut.max(2.0 * reach);
    nodes.push(-cut);
    nodes.push(cut);
    nodes.sort_by(f64::total_cmp);
    nodes.dedup();
    let width = 2.0 * quad.z_cut / quad.panels as f64;

    let mut total = 0.0;
    for w in nodes.windows(2) {
        let (p, q) = (w[0], w[1]);
        let half = 0.5 * (q - p);
        if half <= 0.0 {
            continue;
        }
        total += quad::graded_capped(|d| f(p + d), half, SEGMENT_LEVELS, width);
        total += quad::graded_capped(|d| f(q - d), half, SEGMENT_LEVELS, width);
    }

    for side in [1.0, -1.0] {
        let g = |x: f64| f(side * x);
        // a z^{−p} tail gives far/near = 2^{1−p}; slower decay must show
        // up before the window has moved 2^40 cut-offs out
        let mut x = cut;
        loop {
            let near = quad::uniform(g, x, 2.0 * x, 64);
            let far = quad::uniform(g, 2.0 * x, 4.0 * x, 64);
            if near == 0.0 || far < near {
                break;
            }
            if x > cut * 2f64.powi(40) {
                return Err(Error::NonIntegrable(format!(
                    "|f_r - h|^alpha does not decay faster than 1/|z| beyond z = {}",
                    side * cut
                )));
            }
            x *= 2.0;
        }
        if quad.tail_handling == TailHandling::PowerLaw {
            total += quad::to_infinity(g, cut, TAIL_LEVELS);
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleEstimate {
    pub value: f64,
    /// Standard error from 8 equal sections.
    pub stderr: f64,
    pub moment_order: f64,
}

/// `E|X|^p` for `X` symmetric α-stable with unit scale
/// (`E e^{iξX} = e^{−|ξ|^α}`).
pub fn abs_moment(p: f64, alpha: f64) -> f64 {
    2f64.powf(p) * gamma((1.0 + p) / 2.0) * gamma(1.0 - p / alpha) / (PI.sqrt() * gamma(1.0 - p / 2.0))
}

const SECTIONS: usize = 8;

/// Scale of i.i.d. symmetric α-stable samples from the fractional moment of
/// order `p = α/4`.
pub fn estimate_scale(samples: &[f64], alpha_assumed: f64) -> Result<ScaleEstimate> {
    if samples.is_empty() {
        return Err(invalid("samples", 0.0, "must be nonempty"));
    }
    if !(alpha_assumed > 0.0 && alpha_assumed <= 2.0) {
        return Err(invalid("alpha", alpha_assumed, "must lie in (0, 2]"));
    }
    let p = alpha_assumed / 4.0;
    let c = abs_moment(p, alpha_assumed);
    let scale_of = |xs: &[f64]| {
        let m = xs.iter().map(|x| x.abs().powf(p)).sum::<f64>() / xs.len() as f64;
        (m / c).powf(1.0 / p)
    };
    let value = scale_of(samples);
    let k = SECTIONS.min(samples.len());
    let stderr = if k < 2 {
        0.0
    } else {
        let len = samples.len() / k;
        let parts: Vec<f64> = (0..k).map(|i| scale_of(&samples[i * len..(i + 1) * len])).collect();
        let mean = parts.iter().sum::<f64>() / k as f64;
        let var = parts.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1) as f64;
        (var / k as f64).sqrt()
    };
    Ok(ScaleEstimate {
        value,
        stderr,
        moment_order: p,
    })
}

/// Least-squares slope of `ln scale(Y(k+ℓ) − Y(k))` against `ln ℓ`.
pub fn estimate_scaling_exponent(path: &Path, alpha_assumed: f64, lags: &[usize]) -> Result<f64> {
    if let Some(&bad) = lags.iter().find(|&&l| l == 0) {
        return Err(invalid("lag", bad as f64, "must be >= 1"));
    }
    let y = &path.values;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &lag in lags {
        if lag >= y.len() {
            continue;
        }
        let inc: Vec<f64> = (0..y.len() - lag).map(|k| y[k + lag] - y[k]).collect();
        let s = estimate_scale(&inc, alpha_assumed)?.value;
        if s > 0.0 && s.is_finite() {
            xs.push((lag as f64).ln());
            ys.push(s.ln());
        }
    }
    if xs.len() < 2 {
        return Err(Error::Domain(format!(
            "need at least 2 usable lags, have {}",
            xs.len()
        )));
    }
    Ok(slope(&xs, &ys))
}

pub(crate) fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// `max_ξ |(1/n) Σ e^{iξX_k} − e^{−(scale·|ξ|)^α}|`.
pub fn empirical_cf_distance(samples: &[f64], alpha: f64, scale: f64, xi_grid: &[f64]) -> f64 {
    let n = samples.len() as f64;
    xi_grid
        .iter()
        .map(|&xi| {
            let (mut re, mut im) = (0.0, 0.0);
            for &x in samples {
                let (s, c) = (xi * x).sin_cos();
                re += c;
                im += s;
            }
            let target = (-(scale * xi.abs()).powf(alpha)).exp();
            (re / n - target).hypot(im / n)
        })
        .fold(0.0, f64::max)
}
