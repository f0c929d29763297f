//! Cross-checks between the independent routes, grouped into suites.
//!
//! Each check reduces to one residual compared against a fixed tolerance.
//! The `walkers-return verify` subcommand prints the resulting report.

use std::f64::consts::{PI, TAU};
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::crw::{
    return_rw, return_series_closed_crw, simulate_return_crw,
    CRWInitialState, TransitionMatrix,
};
use crate::error::Result;
use crate::genfunc::{
    compare_gf, gf_crw, gf_hadamard, gf_qw, integral_e_term, polya2d_gf, polya2d_return,
    polya3d_constants, series_sum, truncation_for,
};
use crate::linalg::C64;
use crate::quadrature::{integrate, QuadratureSpec};
use crate::qw::{
    decompose, return_closed_qw, return_hadamard, return_series_closed_qw, simulate_return,
    xi_bruteforce, xi_lemma1, AmplitudeField, CoinMatrix, QWInitialState,
};
use crate::series::{Model, ReturnSeries};
use crate::specfun::{
    binom_f64, ellip_k, ellip_ke, hyp2f1_terminating, jacobi10_sequence, legendre_sequence,
    script_ke, SpecFunTable,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Specfun,
    Qw,
    Crw,
    Genfunc,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "specfun" => Ok(Suite::Specfun),
            "qw" => Ok(Suite::Qw),
            "crw" => Ok(Suite::Crw),
            "genfunc" => Ok(Suite::Genfunc),
            other => Err(format!(
                "unknown suite '{other}' (expected all, specfun, qw, crw or genfunc)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl Check {
    fn new(suite: &'static str, name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            suite,
            name: name.into(),
            residual,
            tolerance,
        }
    }

    /// NaN residuals fail.
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {}/{}: residual {:.3e} (tol {:.1e})",
                if c.passed() { "PASS" } else { "FAIL" },
                c.suite,
                c.name,
                c.residual,
                c.tolerance
            )?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}

fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    // NaN propagates so a broken evaluation cannot pass
    it.into_iter()
        .fold(0.0, |acc, v| if v.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(v) })
}

/// Runs one suite, or all of them.
pub fn run(suite: Suite) -> Result<Report> {
    let mut report = Report::default();
    if matches!(suite, Suite::All | Suite::Specfun) {
        report.checks.extend(specfun_checks()?);
    }
    if matches!(suite, Suite::All | Suite::Qw) {
        report.checks.extend(qw_checks()?);
    }
    if matches!(suite, Suite::All | Suite::Crw) {
        report.checks.extend(crw_checks()?);
    }
    if matches!(suite, Suite::All | Suite::Genfunc) {
        report.checks.extend(genfunc_checks()?);
    }
    Ok(report)
}

/// `Σ_{γ=1}^{n} w(γ) · ratio^γ · C(n−1, γ−1)²`.
fn binomial_sum(n: usize, ratio: f64, weight: impl Fn(usize) -> f64) -> Result<f64> {
    let mut s = 0.0;
    for g in 1..=n {
        s += weight(g) * ratio.powi(g as i32) * binom_f64((n - 1) as u64, (g - 1) as u64)?.powi(2);
    }
    Ok(s)
}

fn specfun_checks() -> Result<Vec<Check>> {
    const S: &str = "specfun";
    let mut out = Vec::new();

    let table = SpecFunTable::new();
    let mut worst: f64 = 0.0;
    for i in 0..=100 {
        let x = -1.0 + 0.02 * i as f64;
        for n in 1..200 {
            let nf = n as f64;
            let (pm, p, pp) = (table.legendre(n - 1, x)?, table.legendre(n, x)?, table.legendre(n + 1, x)?);
            let res = ((nf + 1.0) * pp - (2.0 * nf + 1.0) * x * p + nf * pm).abs() / p.abs().max(1.0);
            worst = worst.max(res);
        }
    }
    out.push(Check::new(S, "legendre three-term recurrence (n<=200, 101-point grid)", worst, 1e-12));

    let mut worst: f64 = 0.0;
    for i in 1..40 {
        let k = -1.0 + 0.05 * i as f64;
        let p = legendre_sequence(51, k)?;
        let j = jacobi10_sequence(50, k)?;
        for n in 0..=50 {
            worst = worst.max((j[n] * (1.0 - k) - (p[n] - p[n + 1])).abs());
        }
    }
    out.push(Check::new(S, "jacobi (1,0) vs legendre difference (n<=50)", worst, 1e-11));

    let mut geo1: f64 = 0.0;
    let mut geo2: f64 = 0.0;
    let mut hyp: f64 = 0.0;
    for a2 in [0.3, 0.5, 0.8] {
        let b2 = 1.0 - a2;
        let k = 2.0 * a2 - 1.0;
        let ratio = -b2 / a2;
        let p = legendre_sequence(15, k)?;
        let j = jacobi10_sequence(15, k)?;
        for n in 1..=15 {
            let scale = (1.0 / a2).powi(n as i32);
            let lhs1 = binomial_sum(n, ratio, |g| 1.0 / g as f64)?;
            let rhs1 = -(b2 / n as f64) * scale * j[n - 1];
            geo1 = geo1.max((lhs1 - rhs1).abs() / rhs1.abs());
            let lhs2 = binomial_sum(n, ratio, |_| 1.0)?;
            let rhs2 = -b2 * scale * p[n - 1];
            geo2 = geo2.max((lhs2 - rhs2).abs() / rhs2.abs().max(1e-300));
            let f = hyp2f1_terminating(n - 1, (n + 1) as f64, 2.0, b2)?;
            // alternating sum: measure against the sum of |terms|
            let mag = hyp2f1_terminating(n - 1, (n + 1) as f64, 2.0, -b2)?;
            hyp = hyp.max((n as f64 * f - j[n - 1]).abs() / (n as f64 * mag));
        }
    }
    out.push(Check::new(S, "weighted binomial sum = jacobi (1,0) form (n<=15)", geo1, 1e-9));
    out.push(Check::new(S, "binomial sum = legendre form (n<=15)", geo2, 1e-9));
    out.push(Check::new(S, "terminating 2F1 = jacobi (1,0) / n", hyp, 1e-12));

    let spec = QuadratureSpec::simpson(1e-12);
    let mut worst: f64 = 0.0;
    for i in 1..=9 {
        let m = i as f64 / 10.0;
        let (k, e) = ellip_ke(m)?;
        let qk = integrate(|t| 1.0 / (1.0 - m * m * t.sin().powi(2)).sqrt(), 0.0, PI / 2.0, &spec)?;
        let qe = integrate(|t| (1.0 - m * m * t.sin().powi(2)).sqrt(), 0.0, PI / 2.0, &spec)?;
        worst = worst.max((k - qk.value).abs()).max((e - qe.value).abs());
    }
    out.push(Check::new(S, "AGM K, E vs quadrature of defining integrals", worst, 1e-10));

    let mut worst: f64 = 0.0;
    for i in 1..100 {
        let t = i as f64 / 100.0;
        let rhs = ellip_k(2.0 * t.sqrt() / (1.0 + t))?;
        worst = worst.max(((1.0 + t) * ellip_k(t)? - rhs).abs() / rhs);
    }
    out.push(Check::new(S, "landen transformation of K (relative)", worst, 1e-12));
    Ok(out)
}

fn qw_checks() -> Result<Vec<Check>> {
    const S: &str = "qw";
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5157);

    let expected = [(2, 0.5), (4, 0.125), (6, 0.125), (8, 9.0 / 128.0), (10, 9.0 / 128.0)];
    let h = CoinMatrix::hadamard();
    let phi = QWInitialState::symmetric();
    let sim = simulate_return(&h, &phi, 10);
    let mut worst: f64 = 0.0;
    for (n, want) in expected {
        let path_sum = xi_lemma1(&h, n / 2)?.probability(&phi);
        let closed = return_closed_qw(0.5, n)?;
        for v in [sim.values[n], path_sum, closed, return_hadamard(n)] {
            worst = worst.max((v - want).abs());
        }
    }
    out.push(Check::new(S, "hadamard r2..r10 by simulation, path sum, closed form", worst, 1e-10));

    let mut triangle: f64 = 0.0;
    let mut state_spread: f64 = 0.0;
    for _ in 0..25 {
        let coin = CoinMatrix::random(&mut rng);
        let closed = return_series_closed_qw(coin.alpha_sq(), 60)?;
        let mut first: Option<ReturnSeries> = None;
        for _ in 0..10 {
            let phi = QWInitialState::random(&mut rng);
            let s = simulate_return(&coin, &phi, 60);
            triangle = triangle.max(s.max_abs_diff(&closed));
            if let Some(f) = &first {
                state_spread = state_spread.max(s.max_abs_diff(f));
            } else {
                first = Some(s);
            }
        }
    }
    out.push(Check::new(S, "simulation = closed form, 25 coins x 10 states, n<=60", triangle, 1e-10));
    out.push(Check::new(S, "return series independent of initial state", state_spread, 1e-10));

    let mut worst: f64 = 0.0;
    for &a2 in &[0.1, 0.3, 0.5, 0.8, 0.95] {
        let coin = CoinMatrix::from_alpha_sq(a2)?;
        let phi = QWInitialState::random(&mut rng);
        let sim = simulate_return(&coin, &phi, 40);
        for n in 1..=20 {
            let path_sum = xi_lemma1(&coin, n)?.probability(&phi);
            let closed = return_closed_qw(a2, 2 * n)?;
            worst = worst.max((sim.values[2 * n] - path_sum).abs()).max((path_sum - closed).abs());
        }
    }
    out.push(Check::new(S, "oracle triangle with path-sum formula, n<=40", worst, 1e-10));

    let mut worst: f64 = 0.0;
    let base = simulate_return(&CoinMatrix::from_alpha_sq(0.37)?, &QWInitialState::symmetric(), 60);
    for _ in 0..5 {
        let coin = CoinMatrix::new(
            rand::Rng::gen_range(&mut rng, 0.0..TAU),
            C64::from_polar(0.37f64.sqrt(), rand::Rng::gen_range(&mut rng, 0.0..TAU)),
            C64::from_polar(0.63f64.sqrt(), rand::Rng::gen_range(&mut rng, 0.0..TAU)),
        )?;
        worst = worst.max(simulate_return(&coin, &QWInitialState::symmetric(), 60).max_abs_diff(&base));
    }
    out.push(Check::new(S, "phase independence", worst, 1e-10));

    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let coin = CoinMatrix::random(&mut rng);
        for n in 0..=6 {
            let brute = xi_bruteforce(&coin, n, n)?.matrix;
            worst = worst.max(brute.max_abs_diff(&xi_lemma1(&coin, n)?.matrix));
        }
        let parts = decompose(&coin);
        let (p, q) = (parts.p, parts.q);
        let listed = q * q * p + q * p * q + p * q * q;
        worst = worst.max(xi_bruteforce(&coin, 1, 2)?.matrix.max_abs_diff(&listed));
    }
    out.push(Check::new(S, "path-sum formula = path enumeration, n<=6", worst, 1e-12));

    let coin = CoinMatrix::random(&mut rng);
    let mut field = AmplitudeField::new(&QWInitialState::random(&mut rng));
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        field.advance(&coin);
        worst = worst.max((field.total_probability() - 1.0).abs());
    }
    out.push(Check::new(S, "unitarity up to n=1000", worst, 1e-10));
    Ok(out)
}

/// Path-sum form of the correlated-walk return probability, before the
/// Legendre polynomials are introduced.
fn crw_binomial_form(t: &TransitionMatrix, phi: &CRWInitialState, n: usize) -> Result<f64> {
    let (a, b, c, d) = (t.a(), t.b(), t.c(), t.d());
    let ad = a * d;
    let s = a * c * phi.phi1() + b * d * phi.phi2();
    let mut sum = 0.0;
    for g in 1..=n {
        let brace = n as f64 / g as f64 * (s / ad + 1.0) + (ad - b * c) / (a * b * c * d) * s;
        sum += ad.powi((n - g) as i32) * (b * c).powi(g as i32)
            * binom_f64((n - 1) as u64, (g - 1) as u64)?.powi(2)
            * brace;
    }
    Ok(sum)
}

fn crw_checks() -> Result<Vec<Check>> {
    const S: &str = "crw";
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC4A);

    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let t = TransitionMatrix::random(&mut rng);
        let phi = CRWInitialState::random(&mut rng);
        let sim = simulate_return_crw(&t, &phi, 40);
        worst = worst.max(sim.max_abs_diff(&return_series_closed_crw(&t, &phi, 40)));
    }
    out.push(Check::new(S, "closed form = simulation, 50 random walks, n<=40", worst, 1e-12));

    let mut worst: f64 = 0.0;
    for eps in [1e-10, -1e-10, 1e-13, 3e-15] {
        // a d − b c = a + d − 1, so d = 1 − a + ε gives Δ₋ = ε
        let t = TransitionMatrix::new(0.4, 0.6 + eps)?;
        let phi = CRWInitialState::random(&mut rng);
        let sim = simulate_return_crw(&t, &phi, 40);
        worst = worst.max(sim.max_abs_diff(&return_series_closed_crw(&t, &phi, 40)));
    }
    out.push(Check::new(S, "near-degenerate correlation (|delta-| <= 1e-10)", worst, 1e-12));

    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let p = rand::Rng::gen_range(&mut rng, 0.05..0.95);
        let t = TransitionMatrix::from_persistence(p, p)?;
        let base = return_series_closed_crw(&t, &CRWInitialState::new(0.0)?, 60);
        for _ in 0..10 {
            let s = return_series_closed_crw(&t, &CRWInitialState::random(&mut rng), 60);
            worst = worst.max(s.max_abs_diff(&base));
        }
    }
    out.push(Check::new(S, "equal persistence: initial-state independence", worst, 1e-12));

    let mut worst: f64 = 0.0;
    for p in [0.2, 0.5, 0.65] {
        let t = TransitionMatrix::from_persistence(p, 1.0 - p)?;
        let sim = simulate_return_crw(&t, &CRWInitialState::random(&mut rng), 40);
        for n in 0..=40 {
            worst = worst.max((sim.values[n] - return_rw(p, n)).abs());
        }
    }
    out.push(Check::new(S, "p = 1 - q reduces to the uncorrelated walk", worst, 1e-12));

    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let t = TransitionMatrix::random(&mut rng);
        let s = return_series_closed_crw(&t, &CRWInitialState::random(&mut rng), 400);
        let bad = s.values.iter().map(|&r| (-r).max(r - 1.0).max(0.0));
        worst = worst.max(max_of(bad));
    }
    out.push(Check::new(S, "closed-form r_2n within [0, 1] up to n=200", worst, 1e-12));

    let mut worst: f64 = 0.0;
    for _ in 0..10 {
        let t = TransitionMatrix::random(&mut rng);
        let phi = CRWInitialState::random(&mut rng);
        let closed = return_series_closed_crw(&t, &phi, 30);
        for n in 1..=15 {
            worst = worst.max((crw_binomial_form(&t, &phi, n)? - closed.values[2 * n]).abs());
        }
    }
    out.push(Check::new(S, "path-sum binomial form = legendre form, n<=15", worst, 1e-10));

    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let t = TransitionMatrix::random(&mut rng);
        let phi = CRWInitialState::random(&mut rng);
        let z = rand::Rng::gen_range(&mut rng, -0.9..0.9);
        let closed = gf_crw(&t, &phi, z)?;
        let series = return_series_closed_crw(&t, &phi, truncation_for(z, 1e-12));
        let s = series_sum(&series, z)?;
        worst = worst.max((closed - s.value).abs());
    }
    out.push(Check::new(S, "generating function vs series, 20 random points", worst, 1e-10));
    Ok(out)
}

fn genfunc_checks() -> Result<Vec<Check>> {
    const S: &str = "genfunc";
    let mut out = Vec::new();
    let spec = QuadratureSpec::default();

    let mut worst: f64 = 0.0;
    for a2 in [0.2, 0.5, 0.8] {
        for z in [0.2, 0.5, 0.8] {
            let ev = compare_gf(&Model::Qw { alpha_sq: a2 }, z, 1e-8, &spec)?;
            worst = worst.max(ev.abs_err());
        }
    }
    out.push(Check::new(S, "quantum-walk generating function vs series", worst, 1e-6));

    let mut worst: f64 = 0.0;
    for i in 1..10 {
        let z = i as f64 / 10.0;
        worst = worst.max((gf_qw(0.5, z, &spec)? - gf_hadamard(z)?).abs());
    }
    out.push(Check::new(S, "general generating function at |alpha|^2=1/2 = hadamard", worst, 1e-10));

    let (mut sq, mut prod, mut weighted) = (0.0f64, 0.0f64, 0.0f64);
    for x in [-0.6, 0.0, 0.6] {
        let p = legendre_sequence(401, x)?;
        for z in [0.2, 0.5, 0.8] {
            let (kk, ee) = script_ke(x, z)?;
            let (mut s1, mut s2, mut s3) = (0.0, 0.0, 0.0);
            for n in (1..=400).rev() {
                let zn = z.powi(n as i32);
                s1 += p[n] * p[n] * zn;
                s2 += zn * p[n] * p[n - 1];
                s3 += n as f64 * z.powi(n as i32 - 1) * p[n] * p[n - 1];
            }
            sq = sq.max((s1 - (2.0 / PI * kk - 1.0)).abs());
            prod = prod.max((s2 - 2.0 * x / PI * integral_e_term(x, z, &spec)?).abs());
            weighted = weighted.max((s3 - 2.0 * x * ee / (PI * (1.0 - z))).abs());
        }
    }
    out.push(Check::new(S, "sum P_n^2 z^n = (2/pi) K(x,z) - 1", sq, 1e-8));
    out.push(Check::new(S, "sum z^n P_n P_(n-1) = (2x/pi) int E/(1-w)", prod, 1e-8));
    out.push(Check::new(S, "sum n z^(n-1) P_n P_(n-1) = 2x E/(pi(1-z))", weighted, 1e-8));

    let h = 1e-5;
    let (mut dz, mut dx) = (0.0f64, 0.0f64);
    for x in [-0.6, 0.3, 0.6] {
        for z in [0.2, 0.5, 0.8] {
            let (kk, ee) = script_ke(x, z)?;
            let fd_z = (script_ke(x, z + h)?.0 - script_ke(x, z - h)?.0) / (2.0 * h);
            let an_z = ((1.0 + z) * ee - (1.0 - z) * kk) / (2.0 * z * (1.0 - z));
            dz = dz.max((fd_z - an_z).abs() / an_z.abs());
            let fd_x = (script_ke(x + h, z)?.0 - script_ke(x - h, z)?.0) / (2.0 * h);
            let an_x = x * (ee - kk) / (x * x - 1.0);
            dx = dx.max((fd_x - an_x).abs() / an_x.abs());
        }
    }
    out.push(Check::new(S, "dK/dz relation vs finite differences (relative)", dz, 1e-6));
    out.push(Check::new(S, "dK/dx relation vs finite differences (relative)", dx, 1e-6));

    let mut worst: f64 = 0.0;
    for z in [0.3, 0.6] {
        let n = truncation_for(z, 1e-11);
        let series = ReturnSeries::new(Model::Polya2d, (0..=n).map(polya2d_return).collect());
        let s = series_sum(&series, z)?;
        worst = worst.max((polya2d_gf(z)? - s.value).abs());
    }
    out.push(Check::new(S, "two-dimensional walk: (2/pi) K(z) vs series", worst, 1e-9));

    let coarse = polya3d_constants(&QuadratureSpec::gauss_kronrod(1e-10))?;
    let fine = polya3d_constants(&QuadratureSpec::gauss_kronrod(5e-11))?;
    out.push(Check::new(S, "three-dimensional G stable under tolerance halving", (coarse.g - fine.g).abs(), 1e-6));
    let outside = if fine.f > 0.0 && fine.f < 1.0 { 0.0 } else { 1.0 };
    out.push(Check::new(
        S,
        format!("three-dimensional return probability F = {:.10} in (0, 1)", fine.f),
        outside,
        0.0,
    ));
    Ok(out)
}
