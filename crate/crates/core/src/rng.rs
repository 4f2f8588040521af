//! Seedable symmetric α-stable variates.
//!
//! Every variate is a deterministic function of `(seed, index)`: the index
//! addresses a position in a ChaCha8 keystream keyed by the seed, so any
//! atom can be fetched on its own and a contiguous run of atoms reads the
//! keystream sequentially. Streams drawn for different α with the same seed
//! and indices share their atoms, which is what couples the α-lines of a
//! multistable synthesis.
//!
//! The variates use the symmetric Chambers–Mallows–Stuck transform and the
//! convention that `S_α(σ,0,0)` has characteristic function
//! `exp(−σ^α |ξ|^α)`; in particular `S_2(σ,0,0)` has variance `2σ²`.

use std::f64::consts::PI;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{invalid, Result};

/// Parameters of the symmetric law `S_α(scale, 0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableParams {
    alpha: f64,
    scale: f64,
}

impl StableParams {
    pub fn new(alpha: f64, scale: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 2.0) {
            return Err(invalid("alpha", alpha, "must lie in (0, 2]"));
        }
        if !(scale >= 0.0 && scale.is_finite()) {
            return Err(invalid("scale", scale, "must be finite and >= 0"));
        }
        Ok(Self { alpha, scale })
    }

    /// Unit-scale law.
    pub fn standard(alpha: f64) -> Result<Self> {
        Self::new(alpha, 1.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

/// The pair of uniforms driving one variate: `u` uniform on `(−π/2, π/2)`
/// and `w` unit-mean exponential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseAtom {
    pub u: f64,
    pub w: f64,
}

// Two u64 words per atom, i.e. four 32-bit keystream words.
const WORDS_PER_ATOM: u128 = 4;

fn open_unit(bits: u64) -> f64 {
    // 53 random bits mapped to the open interval (0, 1).
    ((bits >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

fn atom_from_words(a: u64, b: u64) -> NoiseAtom {
    NoiseAtom {
        u: PI * (open_unit(a) - 0.5),
        w: -open_unit(b).ln(),
    }
}

fn keystream(seed: u64, first_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_word_pos(first_index as u128 * WORDS_PER_ATOM);
    rng
}

/// The atom at `index` of the stream keyed by `seed`.
pub fn noise_atom(seed: u64, index: u64) -> NoiseAtom {
    let mut rng = keystream(seed, index);
    let a = rng.next_u64();
    let b = rng.next_u64();
    atom_from_words(a, b)
}

/// `count` consecutive atoms starting at `first_index`.
pub fn noise_atoms(seed: u64, first_index: u64, count: usize) -> Vec<NoiseAtom> {
    let mut rng = keystream(seed, first_index);
    (0..count)
        .map(|_| {
            let a = rng.next_u64();
            let b = rng.next_u64();
            atom_from_words(a, b)
        })
        .collect()
}

// Symmetric CMS in log form: the α-free parts (ln cos u, ln w) can be
// computed once and reused for every α.
#[inline]
fn cms(alpha: f64, u: f64, ln_cos_u: f64, ln_w: f64) -> f64 {
    if alpha == 1.0 {
        return u.tan();
    }
    let one_minus = 1.0 - alpha;
    let log_mag = (-ln_cos_u + one_minus * ((one_minus * u).cos().ln() - ln_w)) / alpha;
    (alpha * u).sin() * log_mag.exp()
}

#[inline]
fn scaled(params: &StableParams, x: f64) -> f64 {
    if params.scale == 0.0 {
        0.0
    } else {
        params.scale * x
    }
}

/// Transforms one atom into an `S_α(scale,0,0)` variate.
///
/// For α below roughly 0.1 the largest variates overflow to infinity.
pub fn sas_from_atom(atom: NoiseAtom, params: &StableParams) -> f64 {
    let x = cms(params.alpha, atom.u, atom.u.cos().ln(), atom.w.ln());
    scaled(params, x)
}

/// Element `k` equals `sas_from_atom(noise_atom(seed, first_index + k), params)`.
pub fn sas_stream(seed: u64, first_index: u64, count: usize, params: &StableParams) -> Vec<f64> {
    PreparedNoise::new(seed, first_index, count).sample(params)
}

/// A block of atoms with the α-independent logarithms precomputed, so the
/// same noise can be turned into variates for many α cheaply.
#[derive(Debug, Clone)]
pub struct PreparedNoise {
    seed: u64,
    first_index: u64,
    u: Vec<f64>,
    ln_cos_u: Vec<f64>,
    ln_w: Vec<f64>,
}

impl PreparedNoise {
    pub fn new(seed: u64, first_index: u64, count: usize) -> Self {
        let atoms = noise_atoms(seed, first_index, count);
        let mut u = Vec::with_capacity(count);
        let mut ln_cos_u = Vec::with_capacity(count);
        let mut ln_w = Vec::with_capacity(count);
        for a in atoms {
            u.push(a.u);
            ln_cos_u.push(a.u.cos().ln());
            ln_w.push(a.w.ln());
        }
        Self {
            seed,
            first_index,
            u,
            ln_cos_u,
            ln_w,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn first_index(&self) -> u64 {
        self.first_index
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn sample(&self, params: &StableParams) -> Vec<f64> {
        self.sample_range(params, 0, self.len())
    }

    /// Variates for atoms `first_index + offset ..` (`count` of them).
    pub fn sample_range(&self, params: &StableParams, offset: usize, count: usize) -> Vec<f64> {
        let alpha = params.alpha;
        let r = offset..offset + count;
        self.u[r.clone()]
            .iter()
            .zip(&self.ln_cos_u[r.clone()])
            .zip(&self.ln_w[r])
            .map(|((&u, &lc), &lw)| scaled(params, cms(alpha, u, lc, lw)))
            .collect()
    }
}
