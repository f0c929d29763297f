//! Generating functions `Σ r_n zⁿ` in closed form, and the truncated power
//! series they are compared against.

use std::f64::consts::PI;

use crate::crw::{closed_form_params, return_rw, return_series_closed_crw, CRWInitialState, TransitionMatrix};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadratureSpec};
use crate::qw::{return_series_closed_qw, return_series_hadamard};
use crate::series::{Model, ReturnSeries};
use crate::specfun::{central_binomial_ratio, ellip_k, ellip_k_complement, script_e, script_k};

/// Largest admissible `z²` in the quantum-walk generating function.
const Z2_MAX: f64 = 1.0 - 1e-6;

fn check_z(op: &'static str, z: f64, limit: f64) -> Result<()> {
    if z.is_finite() && z.abs() < limit {
        Ok(())
    } else {
        Err(Error::domain(op, format!("z = {z} must satisfy |z| < {limit}")))
    }
}

/// `∫₀^{z2} ℰ(k, w) / (1 − w) dw`.
pub fn integral_e_term(k: f64, z2: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(z2.is_finite() && (0.0..Z2_MAX).contains(&z2)) {
        return Err(Error::domain(
            "integral_e_term",
            format!("upper limit {z2} outside [0, {Z2_MAX})"),
        ));
    }
    if !(k.is_finite() && (-1.0..=1.0).contains(&k)) {
        return Err(Error::domain("integral_e_term", format!("k = {k} outside [-1, 1]")));
    }
    if z2 == 0.0 {
        return Ok(0.0);
    }
    let integrand = |w: f64| script_e(k, w).map_or(f64::NAN, |e| e / (1.0 - w));
    let r = integrate(integrand, 0.0, z2, spec)?;
    if !r.value.is_finite() {
        return Err(Error::domain("integral_e_term", "integrand left its domain"));
    }
    Ok(r.value)
}

/// Quantum-walk generating function with `k = 2|α|² − 1`:
///
/// ```text
/// (1/(π(k+1))) · ((1 + z²) 𝒦(k, z²) − 2k² ∫₀^{z²} ℰ(k, w)/(1 − w) dw − π/2) + 1
/// ```
pub fn gf_qw(alpha_sq: f64, z: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(alpha_sq > 0.0 && alpha_sq < 1.0) {
        return Err(Error::domain(
            "gf_qw",
            format!("|alpha|^2 = {alpha_sq} must lie strictly inside (0, 1)"),
        ));
    }
    check_z("gf_qw", z, Z2_MAX.sqrt())?;
    let k = 2.0 * alpha_sq - 1.0;
    let u = z * z;
    let integral = if k == 0.0 { 0.0 } else { integral_e_term(k, u, spec)? };
    let bracket = (1.0 + u) * script_k(k, u)? - 2.0 * k * k * integral - PI / 2.0;
    Ok(bracket / (PI * (k + 1.0)) + 1.0)
}

/// Hadamard walk: `(1 + z²) K(z²) / π + 1/2`.
pub fn gf_hadamard(z: f64) -> Result<f64> {
    check_z("gf_hadamard", z, 1.0)?;
    Ok((1.0 + z * z) * ellip_k(z * z)? / PI + 0.5)
}

/// Correlated random walk:
/// `((Δ₋k₋z² + k₊)/√(Δ₋²z⁴ − 2Δ₊z² + 1) − k₊)/(2ad) + 1`.
///
/// In the uncorrelated limit `Δ₋ = 0` this is `1/√(1 − 4pq z²)`.
pub fn gf_crw(transition: &TransitionMatrix, phi: &CRWInitialState, z: f64) -> Result<f64> {
    check_z("gf_crw", z, 1.0)?;
    let prm = closed_form_params(transition, phi);
    let ad = transition.a() * transition.d();
    if prm.is_degenerate() {
        return gf_rw(transition.a(), z);
    }
    let u = z * z;
    let radicand = prm.delta_minus * prm.delta_minus * u * u - 2.0 * prm.delta_plus * u + 1.0;
    if radicand <= 0.0 {
        return Err(Error::domain(
            "gf_crw",
            format!("radicand {radicand} not positive at z = {z}"),
        ));
    }
    Ok(((prm.delta_minus * prm.k_minus * u + prm.k_plus) / radicand.sqrt() - prm.k_plus)
        / (2.0 * ad)
        + 1.0)
}

/// Uncorrelated walk stepping left with probability `p`:
/// `Σ (pq)ⁿ C(2n, n) z^{2n} = 1/√(1 − 4pq z²)`; `1/√(1 − z²)` when `p = 1/2`.
pub fn gf_rw(p: f64, z: f64) -> Result<f64> {
    check_z("gf_rw", z, 1.0)?;
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain("gf_rw", format!("p = {p} must lie in (0, 1)")));
    }
    Ok(1.0 / (1.0 - 4.0 * p * (1.0 - p) * z * z).sqrt())
}

/// Two-dimensional simple random walk: `r_{2n} = C(2n, n)² / 16ⁿ`.
pub fn polya2d_return(n: usize) -> f64 {
    if n % 2 == 1 {
        return 0.0;
    }
    let r = central_binomial_ratio(n / 2);
    r * r
}

/// `Σ r_n zⁿ = (2/π) K(z)` for the two-dimensional walk.
pub fn polya2d_gf(z: f64) -> Result<f64> {
    check_z("polya2d_gf", z, 1.0)?;
    Ok(2.0 / PI * ellip_k(z.abs())?)
}

/// Expected visits `G` to the origin of the three-dimensional simple random
/// walk and its return probability `F = 1 − 1/G`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polya3d {
    pub g: f64,
    pub f: f64,
    pub error_estimate: f64,
}

/// `3 K(2/(3 − cos θ)) / (3 − cos θ)` with the complementary modulus
/// computed directly, so the logarithmic blow-up at `θ → 0` keeps full
/// relative accuracy.
pub fn polya3d_integrand(theta: f64) -> f64 {
    let s = (0.5 * theta).sin().powi(2);
    let kp = (s * (2.0 + s)).sqrt() / (1.0 + s);
    let k = ellip_k_complement(kp).unwrap_or(f64::INFINITY);
    3.0 * k / (2.0 + 2.0 * s)
}

/// `G = (1/π²) ∫_{−π}^{π} 3 K(2/(3 − cos θ)) / (3 − cos θ) dθ`, folded onto
/// `(0, π]` and integrated with an open rule that never touches `θ = 0`.
pub fn polya3d_constants(spec: &QuadratureSpec) -> Result<Polya3d> {
    let spec = QuadratureSpec {
        method: crate::quadrature::QuadratureMethod::GaussKronrod,
        ..*spec
    };
    let r = integrate(polya3d_integrand, 0.0, PI, &spec)?;
    let g = 2.0 * r.value / (PI * PI);
    Ok(Polya3d {
        g,
        f: 1.0 - 1.0 / g,
        error_estimate: 2.0 * r.error_estimate / (PI * PI),
    })
}

/// A truncated power series `Σ_{n≤N} r_n zⁿ` with its rigorous tail bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: f64,
    pub truncation: usize,
    pub tail_bound: f64,
}

/// `Σ_{n ≤ N} r_n zⁿ`; since `0 ≤ r_n ≤ 1` the omitted tail is at most
/// `|z|^{N+1} / (1 − |z|)`.
pub fn series_sum(series: &ReturnSeries, z: f64) -> Result<SeriesSum> {
    check_z("series_sum", z, 1.0)?;
    // Horner from the top
    let value = series.values.iter().rev().fold(0.0, |acc, r| acc * z + r);
    let n = series.nmax();
    Ok(SeriesSum {
        value,
        truncation: n,
        tail_bound: z.abs().powi(n as i32 + 1) / (1.0 - z.abs()),
    })
}

/// Smallest `N` with `|z|^{N+1} / (1 − |z|) < target / 10`.
pub fn truncation_for(z: f64, target: f64) -> usize {
    let az = z.abs();
    if az == 0.0 {
        return 0;
    }
    let bound = (target / 10.0 * (1.0 - az)).ln() / az.ln() - 1.0;
    bound.max(0.0).ceil() as usize
}

/// `r_0..=r_nmax` of `model` from its closed form.
pub fn closed_series(model: &Model, nmax: usize) -> Result<ReturnSeries> {
    Ok(match *model {
        Model::Qw { alpha_sq } => return_series_closed_qw(alpha_sq, nmax)?,
        Model::Hadamard => return_series_hadamard(nmax),
        Model::Crw { a, b, d, phi1 } => {
            let t = TransitionMatrix::new(a, d)?;
            if (t.b() - b).abs() > 1e-12 {
                return Err(Error::domain("closed_series", "b must equal 1 - d"));
            }
            return_series_closed_crw(&t, &CRWInitialState::new(phi1)?, nmax)
        }
        Model::Rw { p } => {
            if !(p > 0.0 && p < 1.0) {
                return Err(Error::domain("closed_series", format!("p = {p} must lie in (0, 1)")));
            }
            ReturnSeries::new(*model, (0..=nmax).map(|n| return_rw(p, n)).collect())
        }
        Model::Polya2d => ReturnSeries::new(*model, (0..=nmax).map(polya2d_return).collect()),
    })
}

/// Closed-form generating function of `model` at `z`.
pub fn gf_closed(model: &Model, z: f64, spec: &QuadratureSpec) -> Result<f64> {
    match *model {
        Model::Qw { alpha_sq } => gf_qw(alpha_sq, z, spec),
        Model::Hadamard => gf_hadamard(z),
        Model::Crw { a, d, phi1, .. } => gf_crw(
            &TransitionMatrix::new(a, d)?,
            &CRWInitialState::new(phi1)?,
            z,
        ),
        Model::Rw { p } => gf_rw(p, z),
        Model::Polya2d => polya2d_gf(z),
    }
}

/// Closed form and truncated series of one generating function at one `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GFEvaluation {
    pub z: f64,
    pub closed_value: f64,
    pub series_value: f64,
    pub truncation: usize,
    pub tail_bound: f64,
}

impl GFEvaluation {
    pub fn abs_err(&self) -> f64 {
        (self.closed_value - self.series_value).abs()
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.abs_err() <= tol + self.tail_bound
    }
}

/// Evaluates `model`'s generating function both ways, truncating the series
/// where its tail bound drops below `target / 10`.
pub fn compare_gf(model: &Model, z: f64, target: f64, spec: &QuadratureSpec) -> Result<GFEvaluation> {
    let closed_value = gf_closed(model, z, spec)?;
    let series = closed_series(model, truncation_for(z, target))?;
    let s = series_sum(&series, z)?;
    Ok(GFEvaluation {
        z,
        closed_value,
        series_value: s.value,
        truncation: s.truncation,
        tail_bound: s.tail_bound,
    })
}
