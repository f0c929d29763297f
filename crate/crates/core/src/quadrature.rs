//! Adaptive quadrature for the integrals that have no closed form here: the
//! `∫ ℰ(k, w)/(1 − w) dw` term of the quantum-walk generating function and
//! the three-dimensional lattice Green function at the origin.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureMethod {
    /// Recursive Simpson with the `|S₂ − S₁| / 15` interval-halving estimate.
    AdaptiveSimpson,
    /// Globally adaptive 7/15-point Gauss–Kronrod. Open rule: endpoints are
    /// never evaluated, so integrable endpoint singularities are allowed.
    GaussKronrod,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub method: QuadratureMethod,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            method: QuadratureMethod::AdaptiveSimpson,
            abs_tol: 1e-10,
            max_subdivisions: 4096,
        }
    }
}

impl QuadratureSpec {
    pub fn simpson(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            ..Self::default()
        }
    }

    pub fn gauss_kronrod(abs_tol: f64) -> Self {
        Self {
            method: QuadratureMethod::GaussKronrod,
            abs_tol,
            ..Self::default()
        }
    }

    pub fn with_tolerance(self, abs_tol: f64) -> Self {
        Self { abs_tol, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Integrates `f` over `[a, b]` according to `spec`.
///
/// On success `error_estimate ≤ spec.abs_tol`. When the subdivision budget
/// runs out first, [`Error::Convergence`] carries the best estimate.
pub fn integrate<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("integrate", "interval endpoints must be finite"));
    }
    if spec.abs_tol.is_nan() || spec.abs_tol <= 0.0 {
        return Err(Error::domain("integrate", "tolerance must be positive"));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }
    match spec.method {
        QuadratureMethod::AdaptiveSimpson => simpson(&f, a, b, spec),
        QuadratureMethod::GaussKronrod => gauss_kronrod(&f, a, b, spec),
    }
}

struct SimpsonPanel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
}

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<QuadratureResult> {
    let rule = |a: f64, b: f64, fa: f64, fm: f64, fb: f64| (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let (fa, fb) = (f(a), f(b));
    let fm = f(0.5 * (a + b));
    let mut evaluations = 3;
    let mut stack = vec![SimpsonPanel {
        a,
        b,
        fa,
        fm,
        fb,
        whole: rule(a, b, fa, fm, fb),
        tol: spec.abs_tol,
    }];
    let mut value = 0.0;
    let mut error = 0.0;
    let mut splits = 0usize;
    while let Some(p) = stack.pop() {
        let m = 0.5 * (p.a + p.b);
        let (lm, rm) = (0.5 * (p.a + m), 0.5 * (m + p.b));
        let (flm, frm) = (f(lm), f(rm));
        evaluations += 2;
        let left = rule(p.a, m, p.fa, flm, p.fm);
        let right = rule(m, p.b, p.fm, frm, p.fb);
        let delta = left + right - p.whole;
        if delta.abs() <= 15.0 * p.tol || (p.b - p.a).abs() < 1e-14 * (1.0 + p.a.abs()) {
            value += left + right + delta / 15.0;
            error += delta.abs() / 15.0;
            continue;
        }
        splits += 1;
        if splits > spec.max_subdivisions {
            value += left + right + delta / 15.0;
            error += delta.abs() / 15.0;
            for q in stack {
                value += q.whole;
            }
            return Err(Error::Convergence {
                estimate: value,
                error,
                evaluations,
            });
        }
        stack.push(SimpsonPanel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: frm,
            fb: p.fb,
            whole: right,
            tol: 0.5 * p.tol,
        });
        stack.push(SimpsonPanel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: flm,
            fb: p.fm,
            whole: left,
            tol: 0.5 * p.tol,
        });
    }
    Ok(QuadratureResult {
        value,
        error_estimate: error,
        evaluations,
    })
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

fn gauss_kronrod<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadratureResult> {
    let (v, e) = kronrod15(f, a, b);
    let mut panels = vec![(a, b, v, e)];
    let mut evaluations = 15;
    loop {
        let value: f64 = panels.iter().map(|p| p.2).sum();
        let error: f64 = panels.iter().map(|p| p.3).sum();
        if error <= spec.abs_tol {
            return Ok(QuadratureResult {
                value,
                error_estimate: error,
                evaluations,
            });
        }
        if panels.len() > spec.max_subdivisions {
            return Err(Error::Convergence {
                estimate: value,
                error,
                evaluations,
            });
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .expect("at least one panel");
        let (pa, pb, _, _) = panels.swap_remove(worst);
        let m = 0.5 * (pa + pb);
        if m <= pa || m >= pb {
            // interval cannot be split further in floating point
            return Err(Error::Convergence {
                estimate: value,
                error,
                evaluations,
            });
        }
        let (lv, le) = kronrod15(f, pa, m);
        let (rv, re) = kronrod15(f, m, pb);
        evaluations += 30;
        panels.push((pa, m, lv, le));
        panels.push((m, pb, rv, re));
    }
}
