use crate::error::{Error, Result};

fn check_finite(op: &'static str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("argument must be finite, got {x}")))
    }
}

/// Legendre polynomial `P_n(x)` by the three-term recurrence
/// `(n+1) P_{n+1} = (2n+1) x P_n − n P_{n−1}`.
///
/// Arguments outside `[−1, 1]` are accepted; the recurrence is the exact
/// polynomial there as well, only its magnitude grows.
pub fn legendre_eval(n: usize, x: f64) -> Result<f64> {
    check_finite("legendre_eval", x)?;
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = x;
    for j in 1..n {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0) * x * cur - jf * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `P_0(x), …, P_nmax(x)`.
pub fn legendre_sequence(nmax: usize, x: f64) -> Result<Vec<f64>> {
    legendre_scaled_sequence(nmax, x, 1.0)
}

/// Homogenised Legendre polynomial `yⁿ P_n(x / y)`.
///
/// It satisfies `(n+1) Q_{n+1} = (2n+1) x Q_n − n y² Q_{n−1}` with
/// `Q_0 = 1`, `Q_1 = x`, so it stays finite when `|x / y|` is huge and is
/// well defined (the leading term `c_n xⁿ`) at `y = 0`.
pub fn legendre_scaled(n: usize, x: f64, y: f64) -> Result<f64> {
    Ok(*legendre_scaled_sequence(n, x, y)?
        .last()
        .expect("sequence has n + 1 entries"))
}

/// `yʲ P_j(x / y)` for `j = 0..=nmax`.
pub fn legendre_scaled_sequence(nmax: usize, x: f64, y: f64) -> Result<Vec<f64>> {
    check_finite("legendre_eval", x)?;
    check_finite("legendre_eval", y)?;
    let y2 = y * y;
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(1.0);
    if nmax >= 1 {
        out.push(x);
    }
    for j in 1..nmax {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0) * x * out[j] - jf * y2 * out[j - 1]) / (jf + 1.0);
        out.push(next);
    }
    Ok(out)
}

/// Jacobi polynomial `P_n^{(1,0)}(x)`.
///
/// General Jacobi recurrence specialised to `(ν, μ) = (1, 0)`:
/// `(n+1)(2n−1) P_n = ((4n²−1) x + 1) P_{n−1} − (n−1)(2n+1) P_{n−2}`.
pub fn jacobi10_eval(n: usize, x: f64) -> Result<f64> {
    Ok(*jacobi10_sequence(n, x)?
        .last()
        .expect("sequence has n + 1 entries"))
}

/// `P_0^{(1,0)}(x), …, P_nmax^{(1,0)}(x)`.
pub fn jacobi10_sequence(nmax: usize, x: f64) -> Result<Vec<f64>> {
    check_finite("jacobi10_eval", x)?;
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(1.0);
    if nmax >= 1 {
        out.push(0.5 * (1.0 + 3.0 * x));
    }
    for n in 2..=nmax {
        let nf = n as f64;
        let next = (((4.0 * nf * nf - 1.0) * x + 1.0) * out[n - 1]
            - (nf - 1.0) * (2.0 * nf + 1.0) * out[n - 2])
            / ((nf + 1.0) * (2.0 * nf - 1.0));
        out.push(next);
    }
    Ok(out)
}

/// Terminating Gauss hypergeometric sum `₂F₁(−n, b; c; z)` (n + 1 terms).
///
/// Fails when `c + j = 0` for some `j < n`, i.e. a denominator vanishes
/// before the series terminates.
pub fn hyp2f1_terminating(n: usize, b: f64, c: f64, z: f64) -> Result<f64> {
    for v in [b, c, z] {
        check_finite("hyp2f1_terminating", v)?;
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 0..n {
        let jf = j as f64;
        if c + jf == 0.0 {
            return Err(Error::domain(
                "hyp2f1_terminating",
                format!("pole: c = {c} is a non-positive integer reached at term {j} < n = {n}"),
            ));
        }
        term *= (jf - n as f64) * (b + jf) / ((c + jf) * (jf + 1.0)) * z;
        sum += term;
    }
    Ok(sum)
}
