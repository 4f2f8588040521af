//! Riemann-sum synthesis of `Y(t) = ∫ g(t − x) M(dx)` on the integers.
//!
//! With step `1/ω` and cut-off `Ω`, the path is
//! `Y(k) = Σ_{j=1}^{2ωΩ} a(j) Z(ω(k+Ω) − j)` where
//! `a(j) = ω^{−1/α} g(m/ω)` for `m = j − 1 − ωΩ` (`j ≤ ωΩ`) or `m = j − ωΩ`
//! (`j > ωΩ`), and `Z(n)` are i.i.d. unit symmetric stable variates. The
//! variate `Z(n)` is the noise atom at index `n − ω(1 − Ω)`, so the lowest
//! index needed by `Y(1)` maps to atom 0.
//!
//! Only every ω-th output of the full convolution is needed, so the FFT path
//! splits the weights and the noise into ω polyphase components, multiplies
//! their spectra, accumulates, and inverts once.

use std::collections::BTreeMap;
use std::sync::Arc;

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::error::{invalid, Error, Result};
use crate::kernels::{KernelDescriptor, KernelKind};
use crate::rng::{PreparedNoise, StableParams};

/// Largest number of noise atoms a synthesis may request.
pub const MAX_ATOMS: u128 = 1 << 28;
/// Largest number of complex spectrum entries held by a plan.
pub const MAX_SPECTRUM: u128 = 1 << 28;
/// Largest `N·2ωΩ` accepted by [`synthesize_direct`].
pub const MAX_DIRECT_WORK: u128 = 1 << 33;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthesisConfig {
    /// Grid points per unit time.
    pub omega: u64,
    /// Cut-off of the integral, in time units.
    pub big_omega: u64,
    pub n_points: usize,
    pub seed: u64,
    pub scale: f64,
}

impl SynthesisConfig {
    pub fn new(omega: u64, big_omega: u64, n_points: usize, seed: u64, scale: f64) -> Result<Self> {
        let c = Self {
            omega,
            big_omega,
            n_points,
            seed,
            scale,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.omega < 1 {
            return Err(invalid("omega", self.omega as f64, "must be >= 1"));
        }
        if self.big_omega < 1 {
            return Err(invalid("Omega", self.big_omega as f64, "must be >= 1"));
        }
        if self.n_points < 1 {
            return Err(invalid("n", self.n_points as f64, "must be >= 1"));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(invalid("scale", self.scale, "must be finite and > 0"));
        }
        self.atom_count()?;
        Ok(())
    }

    /// `ωΩ`, the number of weights on each side of the origin.
    pub fn half_width(&self) -> Result<usize> {
        let h = self.omega as u128 * self.big_omega as u128;
        if 2 * h > MAX_ATOMS {
            return Err(Error::TooLarge {
                what: "weights",
                requested: 2 * h,
                limit: MAX_ATOMS,
            });
        }
        Ok(h as usize)
    }

    /// Noise atoms consumed: `ω(N − 1) + 2ωΩ`.
    pub fn atom_count(&self) -> Result<usize> {
        let w = self.omega as u128;
        let m = w * (self.n_points as u128 - 1) + 2 * w * self.big_omega as u128;
        if m > MAX_ATOMS {
            return Err(Error::TooLarge {
                what: "noise atoms",
                requested: m,
                limit: MAX_ATOMS,
            });
        }
        Ok(m as usize)
    }
}

/// Sample path `Y(k)` for `k = start_index, …` at spacing `dt`.
#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    pub start_index: i64,
    pub values: Vec<f64>,
    pub dt: f64,
    pub meta: BTreeMap<String, String>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Time of element `i`.
    pub fn time(&self, i: usize) -> f64 {
        (self.start_index + i as i64) as f64 * self.dt
    }
}

pub(crate) fn check_alpha(kernel: &KernelDescriptor, alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(invalid("alpha", alpha, "must lie in (0, 2]"));
    }
    if let KernelKind::Lfsn { alpha: ka, .. } = kernel.kind() {
        if ka != alpha {
            return Err(invalid(
                "alpha",
                alpha,
                "lfsn kernel was built for a different alpha",
            ));
        }
    }
    Ok(())
}

// g(m/ω) for m = −ωΩ..−1, 1..ωΩ, in weight order.
fn kernel_samples(kernel: &KernelDescriptor, omega: u64, half: usize) -> Vec<f64> {
    let w = omega as f64;
    let h = half as i64;
    (-h..0)
        .chain(1..=h)
        .map(|m| kernel.eval(m as f64 / w))
        .collect()
}

/// The weights `a(1), …, a(2ωΩ)`.
pub fn build_weights(
    kernel: &KernelDescriptor,
    alpha: f64,
    omega: u64,
    big_omega: u64,
) -> Result<Vec<f64>> {
    check_alpha(kernel, alpha)?;
    let cfg = SynthesisConfig {
        omega,
        big_omega,
        n_points: 1,
        seed: 0,
        scale: 1.0,
    };
    cfg.validate()?;
    let half = cfg.half_width()?;
    let pre = (omega as f64).powf(-1.0 / alpha);
    Ok(kernel_samples(kernel, omega, half)
        .into_iter()
        .map(|g| pre * g)
        .collect())
}

/// Kernel spectra for one `(kernel, ω, Ω)` and FFT size, reusable across
/// α, seeds and any segment of at most `capacity` output points.
pub(crate) struct ConvolutionPlan {
    omega: usize,
    taps: usize,
    size: usize,
    capacity: usize,
    spectra: Vec<Vec<Complex<f64>>>,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

/// FFT length for `n` outputs from `taps` taps per phase: the linear
/// convolution of `taps` weights with `n + taps − 1` noise values.
pub(crate) fn fft_size(taps: usize, n: usize) -> usize {
    (2 * taps + n - 2).next_power_of_two()
}

impl ConvolutionPlan {
    /// Plan sized for `n_points` outputs.
    pub(crate) fn new(kernel: &KernelDescriptor, config: &SynthesisConfig) -> Result<Self> {
        config.validate()?;
        let taps = 2 * config.big_omega as usize;
        Self::with_size(kernel, config, fft_size(taps, config.n_points))
    }

    pub(crate) fn with_size(
        kernel: &KernelDescriptor,
        config: &SynthesisConfig,
        size: usize,
    ) -> Result<Self> {
        let half = config.half_width()?;
        let omega = config.omega as usize;
        let taps = 2 * config.big_omega as usize;
        let entries = size as u128 * omega as u128;
        if entries > MAX_SPECTRUM {
            return Err(Error::TooLarge {
                what: "kernel spectra",
                requested: entries,
                limit: MAX_SPECTRUM,
            });
        }
        let mut planner = FftPlanner::new();
        let forward = planner.plan_fft_forward(size);
        let inverse = planner.plan_fft_inverse(size);
        let samples = kernel_samples(kernel, config.omega, half);
        let mut spectra = Vec::with_capacity(omega);
        // Two real phases per complex transform.
        for r1 in (0..omega).step_by(2) {
            let r2 = r1 + 1;
            let mut buf = vec![Complex::new(0.0, 0.0); size];
            for (q, b) in buf.iter_mut().take(taps).enumerate() {
                let im = if r2 < omega { samples[omega * q + r2] } else { 0.0 };
                *b = Complex::new(samples[omega * q + r1], im);
            }
            forward.process(&mut buf);
            let (s1, s2) = split_spectra(&buf);
            spectra.push(s1);
            if r2 < omega {
                spectra.push(s2);
            }
        }
        Ok(Self {
            omega,
            taps,
            size,
            capacity: size + 2 - 2 * taps,
            spectra,
            forward,
            inverse,
        })
    }

    /// Noise values needed for `n` outputs: `ω(n − 1) + 2ωΩ`.
    pub(crate) fn atoms_for(&self, n: usize) -> usize {
        self.omega * (n + self.taps - 1)
    }

    /// `Σ_j g_j Z(·)` at `n` consecutive output points, before the
    /// `ω^{−1/α}` factor; `z` starts at the first atom those points read.
    pub(crate) fn apply(&self, z: &[f64], n: usize) -> Vec<f64> {
        assert!(n <= self.capacity && z.len() >= self.atoms_for(n));
        let (omega, size) = (self.omega, self.size);
        let phase_len = n + self.taps - 1;
        let mut acc = vec![Complex::new(0.0, 0.0); size];
        let mut buf = vec![Complex::new(0.0, 0.0); size];
        for r1 in (0..omega).step_by(2) {
            let r2 = r1 + 1;
            buf.iter_mut().for_each(|b| *b = Complex::new(0.0, 0.0));
            for (p, b) in buf.iter_mut().take(phase_len).enumerate() {
                let base = omega * (p + 1) - 1;
                let im = if r2 < omega { z[base - r2] } else { 0.0 };
                *b = Complex::new(z[base - r1], im);
            }
            self.forward.process(&mut buf);
            let k1 = &self.spectra[r1];
            if r2 < omega {
                let k2 = &self.spectra[r2];
                for k in 0..size {
                    let x = buf[k];
                    let xc = buf[(size - k) % size].conj();
                    let z1 = (x + xc) * 0.5;
                    let z2 = (x - xc) * Complex::new(0.0, -0.5);
                    acc[k] += k1[k] * z1 + k2[k] * z2;
                }
            } else {
                for k in 0..size {
                    acc[k] += k1[k] * buf[k];
                }
            }
        }
        self.inverse.process(&mut acc);
        let norm = 1.0 / size as f64;
        acc[self.taps - 1..self.taps - 1 + n]
            .iter()
            .map(|c| c.re * norm)
            .collect()
    }
}

// Spectra of the real and imaginary parts of a transformed complex buffer.
fn split_spectra(x: &[Complex<f64>]) -> (Vec<Complex<f64>>, Vec<Complex<f64>>) {
    let n = x.len();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for k in 0..n {
        let xc = x[(n - k) % n].conj();
        a.push((x[k] + xc) * 0.5);
        b.push((x[k] - xc) * Complex::new(0.0, -0.5));
    }
    (a, b)
}

pub(crate) fn base_meta(
    kernel: &KernelDescriptor,
    config: &SynthesisConfig,
    method: &str,
) -> BTreeMap<String, String> {
    let mut m = BTreeMap::new();
    m.insert("kernel".into(), kernel.label().into());
    for (k, v) in kernel.params() {
        m.insert(format!("kernel_{k}"), v.to_string());
    }
    m.insert("omega".into(), config.omega.to_string());
    m.insert("Omega".into(), config.big_omega.to_string());
    m.insert("n_points".into(), config.n_points.to_string());
    m.insert("seed".into(), config.seed.to_string());
    m.insert("scale".into(), config.scale.to_string());
    m.insert("method".into(), method.into());
    m
}

/// `Y(k)` for `k = first, …, first + n − 1` from prepared noise covering
/// at least the atoms those points read:
/// `scale · ω^{−1/α} · (g ⋆ Z)`.
pub(crate) fn segment_from_noise(
    plan: &ConvolutionPlan,
    noise: &PreparedNoise,
    alpha: f64,
    config: &SynthesisConfig,
    first: usize,
    n: usize,
) -> Result<Vec<f64>> {
    let offset = config.omega as usize * (first - 1);
    let z = noise.sample_range(&StableParams::standard(alpha)?, offset, plan.atoms_for(n));
    let pre = config.scale * (config.omega as f64).powf(-1.0 / alpha);
    Ok(plan.apply(&z, n).into_iter().map(|v| pre * v).collect())
}

/// Path `Y(1..=N)` by polyphase FFT convolution.
pub fn synthesize_fft(kernel: &KernelDescriptor, alpha: f64, config: &SynthesisConfig) -> Result<Path> {
    check_alpha(kernel, alpha)?;
    let plan = ConvolutionPlan::new(kernel, config)?;
    let noise = PreparedNoise::new(config.seed, 0, config.atom_count()?);
    let values = segment_from_noise(&plan, &noise, alpha, config, 1, config.n_points)?;
    let mut meta = base_meta(kernel, config, "fft");
    meta.insert("alpha".into(), alpha.to_string());
    Ok(Path {
        start_index: 1,
        values,
        dt: 1.0,
        meta,
    })
}

/// Path `Y(1..=N)` by the explicit double sum, on the same noise atoms as
/// [`synthesize_fft`].
pub fn synthesize_direct(
    kernel: &KernelDescriptor,
    alpha: f64,
    config: &SynthesisConfig,
) -> Result<Path> {
    check_alpha(kernel, alpha)?;
    config.validate()?;
    let weights = build_weights(kernel, alpha, config.omega, config.big_omega)?;
    let work = weights.len() as u128 * config.n_points as u128;
    if work > MAX_DIRECT_WORK {
        return Err(Error::TooLarge {
            what: "direct-sum terms",
            requested: work,
            limit: MAX_DIRECT_WORK,
        });
    }
    let z = PreparedNoise::new(config.seed, 0, config.atom_count()?)
        .sample(&StableParams::standard(alpha)?);
    let omega = config.omega as usize;
    let len = weights.len();
    let values = (0..config.n_points)
        .map(|kk| {
            // Y(k) with k = kk + 1 reads atoms ω·kk + 2ωΩ − 1 − i
            let top = omega * kk + len - 1;
            let s: f64 = weights.iter().enumerate().map(|(i, a)| a * z[top - i]).sum();
            config.scale * s
        })
        .collect();
    let mut meta = base_meta(kernel, config, "direct");
    meta.insert("alpha".into(), alpha.to_string());
    Ok(Path {
        start_index: 1,
        values,
        dt: 1.0,
        meta,
    })
}

/// Running sum `Σ_{i ≤ k} Y(i)·dt`.
pub fn integrate_path(path: &Path) -> Path {
    let mut acc = 0.0;
    let values = path
        .values
        .iter()
        .map(|v| {
            acc += v * path.dt;
            acc
        })
        .collect();
    let mut meta = path.meta.clone();
    meta.insert("integrated".into(), "true".into());
    Path {
        start_index: path.start_index,
        values,
        dt: path.dt,
        meta,
    }
}
