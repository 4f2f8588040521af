//! Multistable paths by gluing: stable lines for each needed α, all driven
//! by the same noise atoms, read off along the diagonal `S(t_i) = S_{α(t_i)}(t_i)`.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::FRAC_PI_2;
use std::fmt;

use statrs::function::gamma::gamma;

use crate::error::{invalid, Error, Result};
use crate::kernels::KernelDescriptor;
use crate::rng::PreparedNoise;
use crate::synthesis::{
    base_meta, check_alpha, fft_size, segment_from_noise, ConvolutionPlan, Path, SynthesisConfig,
};

/// `α(t)` for a multistable path. Values lie in `(0, 2)`.
#[derive(Debug, Clone, PartialEq)]
pub enum AlphaFunction {
    Constant(f64),
    /// `lo + (hi − lo) / (1 + e^{−rate (t − center)})`
    Logistic { lo: f64, hi: f64, rate: f64, center: f64 },
    /// Piecewise linear through `(t, α)` knots with increasing `t`.
    Table(Vec<(f64, f64)>),
}

fn check_open_alpha(name: &'static str, a: f64) -> Result<()> {
    if a > 0.0 && a < 2.0 {
        Ok(())
    } else {
        Err(invalid(name, a, "must lie in (0, 2)"))
    }
}

impl AlphaFunction {
    /// The standard logistic ramp over `n` points: 1.2 to 1.85, rate 5/1000, centred at `n/2`.
    pub fn logistic_ramp(n: usize) -> Self {
        AlphaFunction::Logistic {
            lo: 1.2,
            hi: 1.85,
            rate: 0.005,
            center: n as f64 / 2.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            AlphaFunction::Constant(a) => check_open_alpha("alpha", *a),
            AlphaFunction::Logistic { lo, hi, rate, center } => {
                check_open_alpha("lo", *lo)?;
                check_open_alpha("hi", *hi)?;
                if !(lo < hi) {
                    return Err(invalid("hi", *hi, "must exceed lo"));
                }
                if !rate.is_finite() {
                    return Err(invalid("rate", *rate, "must be finite"));
                }
                if !center.is_finite() {
                    return Err(invalid("center", *center, "must be finite"));
                }
                Ok(())
            }
            AlphaFunction::Table(knots) => {
                if knots.is_empty() {
                    return Err(invalid("table knots", 0.0, "needs at least one knot"));
                }
                for w in knots.windows(2) {
                    if !(w[1].0 > w[0].0) {
                        return Err(invalid("table t", w[1].0, "knots must be strictly increasing"));
                    }
                }
                for &(t, a) in knots {
                    if !t.is_finite() {
                        return Err(invalid("table t", t, "must be finite"));
                    }
                    check_open_alpha("table alpha", a)?;
                }
                Ok(())
            }
        }
    }

    /// Largest slope of a table, 0 for a constant, `rate·(hi − lo)/4` for
    /// the logistic.
    pub fn lipschitz(&self) -> f64 {
        match self {
            AlphaFunction::Constant(_) => 0.0,
            AlphaFunction::Logistic { lo, hi, rate, .. } => rate.abs() * (hi - lo) / 4.0,
            AlphaFunction::Table(knots) => knots
                .windows(2)
                .map(|w| ((w[1].1 - w[0].1) / (w[1].0 - w[0].0)).abs())
                .fold(0.0, f64::max),
        }
    }
}

impl fmt::Display for AlphaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaFunction::Constant(a) => write!(f, "constant({a})"),
            AlphaFunction::Logistic { lo, hi, rate, center } => {
                write!(f, "logistic(lo={lo},hi={hi},rate={rate},center={center})")
            }
            AlphaFunction::Table(knots) => {
                write!(f, "table(")?;
                for (i, (t, a)) in knots.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{t}:{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

pub fn eval_alpha(alpha_fn: &AlphaFunction, t: f64) -> Result<f64> {
    match alpha_fn {
        AlphaFunction::Constant(a) => Ok(*a),
        AlphaFunction::Logistic { lo, hi, rate, center } => {
            Ok(lo + (hi - lo) / (1.0 + (-rate * (t - center)).exp()))
        }
        AlphaFunction::Table(knots) => {
            let (t0, t1) = (knots[0].0, knots[knots.len() - 1].0);
            if !(t >= t0 && t <= t1) {
                return Err(Error::Domain(format!(
                    "t = {t} is outside the table range [{t0}, {t1}]"
                )));
            }
            let i = knots.partition_point(|k| k.0 <= t);
            if i == knots.len() {
                return Ok(knots[i - 1].1);
            }
            let ((ta, aa), (tb, ab)) = (knots[i - 1], knots[i]);
            Ok(aa + (ab - aa) * (t - ta) / (tb - ta))
        }
    }
}

/// `c(α) = (2α^{−1} Γ(1−α) cos(πα/2))^{−1/α}`, for `α ∈ (0, 2)`, `α ≠ 1`.
pub fn c_alpha(alpha: f64) -> Result<f64> {
    check_open_alpha("alpha", alpha)?;
    if alpha == 1.0 {
        return Err(Error::Domain(
            "c(alpha) has a removable singularity at alpha = 1".into(),
        ));
    }
    let inner = 2.0 / alpha * gamma(1.0 - alpha) * (FRAC_PI_2 * alpha).cos();
    Ok(inner.powf(-1.0 / alpha))
}

/// Assignment of output points to α-lines.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaLines {
    /// α of each line, increasing.
    pub alphas: Vec<f64>,
    /// Line id of point `i` (`t = i + 1`).
    pub line_of: Vec<usize>,
}

impl AlphaLines {
    /// Maximal runs `(line, first_point, len)` with `first_point` 1-based.
    pub fn runs(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        for (i, &l) in self.line_of.iter().enumerate() {
            match out.last_mut() {
                Some(r) if r.0 == l => r.2 += 1,
                _ => out.push((l, i + 1, 1)),
            }
        }
        out
    }
}

/// α at `t = 1..=n` quantized to `alpha_grid` equal cells of the observed
/// range, each point taking its cell's midpoint. `alpha_grid = 0` keeps
/// every point's own α. A constant α maps to itself.
pub fn quantize_alpha(alpha_fn: &AlphaFunction, n_points: usize, alpha_grid: usize) -> Result<AlphaLines> {
    alpha_fn.validate()?;
    let raw = (1..=n_points)
        .map(|i| eval_alpha(alpha_fn, i as f64))
        .collect::<Result<Vec<f64>>>()?;
    let lo = raw.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = raw.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let quantized: Vec<f64> = if alpha_grid == 0 || lo == hi {
        raw
    } else {
        let g = alpha_grid as f64;
        let width = (hi - lo) / g;
        raw.iter()
            .map(|&a| {
                let cell = (((a - lo) / (hi - lo) * g) as usize).min(alpha_grid - 1);
                lo + (cell as f64 + 0.5) * width
            })
            .collect()
    };
    let mut ids: BTreeMap<u64, usize> = quantized.iter().map(|a| (a.to_bits(), 0)).collect();
    // f64 bits order like the values for positive numbers
    for (k, v) in ids.values_mut().enumerate() {
        *v = k;
    }
    let alphas = ids.keys().map(|&b| f64::from_bits(b)).collect();
    let line_of = quantized.iter().map(|a| ids[&a.to_bits()]).collect();
    Ok(AlphaLines { alphas, line_of })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultistableConfig {
    pub base: SynthesisConfig,
    pub alpha_fn: AlphaFunction,
    /// Map each α-line affinely onto `[−1, 1]` over its `N` points first.
    pub renormalize: bool,
    /// Number of α cells; 0 means one line per distinct point value.
    pub alpha_grid: usize,
}

pub const DEFAULT_ALPHA_GRID: usize = 64;

impl MultistableConfig {
    pub fn new(base: SynthesisConfig, alpha_fn: AlphaFunction) -> Self {
        Self {
            base,
            alpha_fn,
            renormalize: false,
            alpha_grid: DEFAULT_ALPHA_GRID,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        self.alpha_fn.validate()?;
        if self.alpha_grid > self.base.n_points {
            return Err(invalid(
                "alpha_grid",
                self.alpha_grid as f64,
                "must not exceed n_points",
            ));
        }
        Ok(())
    }
}

/// Glued multistable path on `t = 1..=N`.
///
/// Every line reads the same noise atoms. Without renormalization only the
/// points a line contributes are computed; with it, each line is computed
/// on all `N` points to find its range.
pub fn synthesize_multistable(kernel: &KernelDescriptor, mcfg: &MultistableConfig) -> Result<Path> {
    mcfg.validate()?;
    let cfg = &mcfg.base;
    let n = cfg.n_points;
    let lines = quantize_alpha(&mcfg.alpha_fn, n, mcfg.alpha_grid)?;
    for &a in &lines.alphas {
        check_alpha(kernel, a)?;
    }
    let noise = PreparedNoise::new(cfg.seed, 0, cfg.atom_count()?);
    let taps = 2 * cfg.big_omega as usize;
    let mut plans: HashMap<usize, ConvolutionPlan> = HashMap::new();
    let mut segment = |alpha: f64, first: usize, len: usize| -> Result<Vec<f64>> {
        let size = fft_size(taps, len);
        if !plans.contains_key(&size) {
            plans.insert(size, ConvolutionPlan::with_size(kernel, cfg, size)?);
        }
        segment_from_noise(&plans[&size], &noise, alpha, cfg, first, len)
    };

    let mut values = vec![0.0; n];
    let mut degenerate = Vec::new();
    if mcfg.renormalize {
        for (id, &a) in lines.alphas.iter().enumerate() {
            let line = segment(a, 1, n)?;
            let lo = line.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = line.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if !(hi > lo) {
                degenerate.push(id);
            }
            for (i, v) in values.iter_mut().enumerate() {
                if lines.line_of[i] == id {
                    *v = if hi > lo { 2.0 * (line[i] - lo) / (hi - lo) - 1.0 } else { 0.0 };
                }
            }
        }
    } else {
        for (id, first, len) in lines.runs() {
            let seg = segment(lines.alphas[id], first, len)?;
            values[first - 1..first - 1 + len].copy_from_slice(&seg);
        }
    }

    let mut meta = base_meta(kernel, cfg, "multistable");
    meta.insert("alpha_fn".into(), mcfg.alpha_fn.to_string());
    meta.insert("alpha_grid".into(), mcfg.alpha_grid.to_string());
    meta.insert("alpha_lines".into(), lines.alphas.len().to_string());
    meta.insert("alpha_lipschitz".into(), mcfg.alpha_fn.lipschitz().to_string());
    meta.insert("renormalize".into(), mcfg.renormalize.to_string());
    if mcfg.renormalize {
        meta.insert("renormalize_rule".into(), "line min/max over all points to [-1,1]".into());
        let list: Vec<String> = degenerate.iter().map(|d| d.to_string()).collect();
        meta.insert("degenerate_lines".into(), list.join(","));
    }
    let (vlo, vhi) = (lines.alphas[0], lines.alphas[lines.alphas.len() - 1]);
    let validity = kernel.alpha_validity();
    if !(validity.contains(vlo) && validity.contains(vhi)) {
        meta.insert(
            "advisory".into(),
            format!("alpha range [{vlo}, {vhi}] leaves the kernel's localisable range {validity}"),
        );
    }
    Ok(Path {
        start_index: 1,
        values,
        dt: 1.0,
        meta,
    })
}
