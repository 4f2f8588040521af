//! Composite Gauss–Legendre quadrature with geometric grading.
//!
//! Integrands with an integrable singularity (or a non-smooth point) are
//! always handed to these routines in *offset* form: the closure receives
//! the distance `d > 0` from the singular endpoint, never the absolute
//! abscissa. Callers reconstruct the argument relative to the breakpoint,
//! which keeps full precision at offsets far below one ulp of the
//! breakpoint itself.

use std::sync::OnceLock;

const ORDER: usize = 20;

struct Rule {
    nodes: [f64; ORDER],
    weights: [f64; ORDER],
}

fn rule() -> &'static Rule {
    static RULE: OnceLock<Rule> = OnceLock::new();
    RULE.get_or_init(|| {
        let mut nodes = [0.0; ORDER];
        let mut weights = [0.0; ORDER];
        let n = ORDER as f64;
        for i in 0..ORDER {
            // Newton on P_n starting from the Chebyshev-like guess.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=ORDER {
                    let k = k as f64;
                    let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        Rule { nodes, weights }
    })
}

/// One Gauss–Legendre panel on `[a, b]`.
pub(crate) fn panel<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> f64 {
    let r = rule();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut s = 0.0;
    for (x, w) in r.nodes.iter().zip(&r.weights) {
        s += w * f(mid + half * x);
    }
    s * half
}

/// `panels` equal Gauss–Legendre panels on `[a, b]`.
pub(crate) fn uniform<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, panels: usize) -> f64 {
    let panels = panels.max(1);
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + h * i as f64;
            let hi = if i + 1 == panels { b } else { lo + h };
            panel(&mut f, lo, hi)
        })
        .sum()
}

const GRADING: f64 = 0.25;

/// `∫_0^len f(d) dd` for `f` possibly singular at `d = 0`, using panels
/// `[len·σ^{k+1}, len·σ^k]` for `k < levels` plus one innermost panel.
pub(crate) fn graded<F: FnMut(f64) -> f64>(mut f: F, len: f64, levels: usize) -> f64 {
    if len <= 0.0 {
        return 0.0;
    }
    let mut hi = len;
    let mut total = 0.0;
    for _ in 0..levels {
        let lo = hi * GRADING;
        total += panel(&mut f, lo, hi);
        hi = lo;
    }
    total + panel(&mut f, 0.0, hi)
}

/// [`graded`] with every panel wider than `max_width` split into equal
/// panels, for integrands that are also oscillatory or long-ranged.
pub(crate) fn graded_capped<F: FnMut(f64) -> f64>(
    mut f: F,
    len: f64,
    levels: usize,
    max_width: f64,
) -> f64 {
    if len <= 0.0 {
        return 0.0;
    }
    let mut hi = len;
    let mut total = 0.0;
    for _ in 0..levels {
        let lo = hi * GRADING;
        let pieces = ((hi - lo) / max_width).ceil().max(1.0) as usize;
        total += uniform(&mut f, lo, hi, pieces);
        hi = lo;
    }
    total + panel(&mut f, 0.0, hi)
}

/// `∫_start^∞ f(x) dx` for `start > 0` and `f` decaying faster than
/// `1/x`, through `x = start/u` with grading toward `u = 0`.
pub(crate) fn to_infinity<F: FnMut(f64) -> f64>(mut f: F, start: f64, levels: usize) -> f64 {
    debug_assert!(start > 0.0);
    graded(
        |u| {
            if u <= 0.0 {
                0.0
            } else {
                let x = start / u;
                let v = f(x) * start / (u * u);
                if v.is_finite() {
                    v
                } else {
                    0.0
                }
            }
        },
        1.0,
        levels,
    )
}

/// Levels that push the innermost graded panel below `1e-120` of the
/// interval: enough for `d^β` with β down to about −0.9.
pub(crate) const SINGULAR_LEVELS: usize = 200;
