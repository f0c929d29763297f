//! Complete elliptic integrals by the arithmetic-geometric mean.
//!
//! With `a₀ = 1`, `b₀ = m' = √(1 − m²)`, `c₀ = m`:
//!
//! ```text
//! K(m) = π / (2 AGM(1, m'))
//! E(m) = K(m) · (1 − Σ_{j≥0} 2^{j−1} c_j²),   c_{j+1} = (a_j − b_j) / 2
//! ```

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

const MAX_ITER: usize = 40;
const EPS: f64 = 1e-16;

/// AGM iteration given the modulus and its complement, both supplied so that
/// callers near `m → 1` can pass an accurately computed complement.
fn agm_ke(m: f64, kp: f64) -> (f64, f64) {
    let mut a = 1.0;
    let mut b = kp;
    let mut sum = 0.5 * m * m;
    let mut pow = 0.5;
    for _ in 0..MAX_ITER {
        let c = 0.5 * (a - b);
        pow *= 2.0;
        sum += pow * c * c;
        let a_next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = a_next;
        if (a - b).abs() <= EPS * a {
            break;
        }
    }
    let k = FRAC_PI_2 / a;
    (k, k * (1.0 - sum))
}

fn check_modulus(op: &'static str, m: f64, allow_one: bool) -> Result<()> {
    let ok = m.is_finite() && m >= 0.0 && if allow_one { m <= 1.0 } else { m < 1.0 };
    if ok {
        Ok(())
    } else {
        let range = if allow_one { "[0, 1]" } else { "[0, 1)" };
        Err(Error::domain(op, format!("modulus {m} outside {range}")))
    }
}

/// Complete elliptic integral of the first kind, modulus convention.
pub fn ellip_k(m: f64) -> Result<f64> {
    check_modulus("ellip_k", m, false)?;
    let kp = ((1.0 - m) * (1.0 + m)).sqrt();
    Ok(agm_ke(m, kp).0)
}

/// `K` expressed through the complementary modulus `m' = √(1 − m²)`.
///
/// Loses no accuracy as `m' → 0`, where `K` has its logarithmic singularity.
pub fn ellip_k_complement(kp: f64) -> Result<f64> {
    if !(kp.is_finite() && kp > 0.0 && kp <= 1.0) {
        return Err(Error::domain(
            "ellip_k_complement",
            format!("complementary modulus {kp} outside (0, 1]"),
        ));
    }
    let m = ((1.0 - kp) * (1.0 + kp)).sqrt();
    Ok(agm_ke(m, kp).0)
}

/// Complete elliptic integral of the second kind, modulus convention.
pub fn ellip_e(m: f64) -> Result<f64> {
    check_modulus("ellip_e", m, true)?;
    if m == 1.0 {
        return Ok(1.0);
    }
    let kp = ((1.0 - m) * (1.0 + m)).sqrt();
    Ok(agm_ke(m, kp).1)
}

/// `(K(m), E(m))` from one AGM run.
pub fn ellip_ke(m: f64) -> Result<(f64, f64)> {
    check_modulus("ellip_ke", m, false)?;
    let kp = ((1.0 - m) * (1.0 + m)).sqrt();
    Ok(agm_ke(m, kp))
}

/// Inner modulus and square-rooted denominator of `𝒦(x, z)` / `ℰ(x, z)`:
/// returns `(m, m', √D)` with `D = 1 − 2z(2x² − 1) + z²`,
/// `m² = 4z(1 − x²) / D` and `m'² = 1 − m² = (1 − z)² / D`.
pub fn script_modulus(x: f64, z: f64) -> Result<(f64, f64, f64)> {
    if !(x.is_finite() && (-1.0..=1.0).contains(&x)) {
        return Err(Error::domain("script_k", format!("x = {x} outside [-1, 1]")));
    }
    if !(z.is_finite() && (0.0..1.0).contains(&z)) {
        return Err(Error::domain(
            "script_k",
            format!("z = {z} outside the admissible range [0, 1)"),
        ));
    }
    let d = 1.0 - 2.0 * z * (2.0 * x * x - 1.0) + z * z;
    if d <= 0.0 {
        return Err(Error::domain(
            "script_k",
            format!("denominator 1 - 2z(2x^2-1) + z^2 = {d} is not positive"),
        ));
    }
    let sd = d.sqrt();
    let m = (4.0 * z * (1.0 - x * x) / d).sqrt();
    let kp = (1.0 - z) / sd;
    if m >= 1.0 || kp <= 0.0 {
        return Err(Error::domain(
            "script_k",
            format!("inner modulus {m} reached 1; z = {z} must stay below 1"),
        ));
    }
    Ok((m, kp, sd))
}

/// `(𝒦(x, z), ℰ(x, z))`.
pub fn script_ke(x: f64, z: f64) -> Result<(f64, f64)> {
    let (m, kp, sd) = script_modulus(x, z)?;
    let (k, e) = agm_ke(m, kp);
    Ok((k / sd, e / sd))
}

/// `𝒦(x, z) = K(√(4z(1−x²)/D)) / √D`, `D = 1 − 2z(2x²−1) + z²`.
pub fn script_k(x: f64, z: f64) -> Result<f64> {
    script_ke(x, z).map(|(k, _)| k)
}

/// `ℰ(x, z) = E(√(4z(1−x²)/D)) / √D`.
pub fn script_e(x: f64, z: f64) -> Result<f64> {
    script_ke(x, z).map(|(_, e)| e)
}
