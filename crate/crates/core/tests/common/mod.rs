//! Reference computations written independently of the library internals.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64 as C;

/// `C(n, k)` as a float product.
pub fn binom(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

/// Full-lattice quantum walk; `coin` rows are `[[a, b], [c, d]]`.
/// Returns `r_0..=r_nmax`.
pub fn qw_sim(coin: [[C; 2]; 2], phi: [C; 2], nmax: usize) -> Vec<f64> {
    let width = 2 * nmax + 3;
    let origin = nmax + 1;
    let mut left = vec![C::new(0.0, 0.0); width];
    let mut right = vec![C::new(0.0, 0.0); width];
    left[origin] = phi[0];
    right[origin] = phi[1];
    let mut out = vec![(phi[0].norm_sqr() + phi[1].norm_sqr())];
    for _ in 0..nmax {
        let mut nl = vec![C::new(0.0, 0.0); width];
        let mut nr = vec![C::new(0.0, 0.0); width];
        for x in 1..width - 1 {
            // the left component at x arrives from x + 1, the right one from x - 1
            nl[x] = coin[0][0] * left[x + 1] + coin[0][1] * right[x + 1];
            nr[x] = coin[1][0] * left[x - 1] + coin[1][1] * right[x - 1];
        }
        left = nl;
        right = nr;
        out.push(left[origin].norm_sqr() + right[origin].norm_sqr());
    }
    out
}

/// Coin rows for `e^{iθ}[[α, β], [−β̄, ᾱ]]`.
pub fn coin_rows(theta: f64, alpha: C, beta: C) -> [[C; 2]; 2] {
    let g = C::from_polar(1.0, theta);
    [[g * alpha, g * beta], [-g * beta.conj(), g * alpha.conj()]]
}

/// Full-lattice correlated walk with `L ← a L + b R` from the right
/// neighbour and `R ← c L + d R` from the left neighbour.
pub fn crw_sim(a: f64, d: f64, phi1: f64, nmax: usize) -> Vec<f64> {
    let (b, c) = (1.0 - d, 1.0 - a);
    let width = 2 * nmax + 3;
    let origin = nmax + 1;
    let mut left = vec![0.0; width];
    let mut right = vec![0.0; width];
    left[origin] = phi1;
    right[origin] = 1.0 - phi1;
    let mut out = vec![1.0];
    for _ in 0..nmax {
        let mut nl = vec![0.0; width];
        let mut nr = vec![0.0; width];
        for x in 1..width - 1 {
            nl[x] = a * left[x + 1] + b * right[x + 1];
            nr[x] = c * left[x - 1] + d * right[x - 1];
        }
        left = nl;
        right = nr;
        out.push(left[origin] + right[origin]);
    }
    out
}

/// Quantum-walk `r_2n` as a finite binomial sum, valid for moderate `n`.
pub fn qw_binomial_form(alpha_sq: f64, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let beta_sq = 1.0 - alpha_sq;
    let ratio = -beta_sq / alpha_sq;
    let (mut s1, mut s2) = (0.0, 0.0);
    for g in 1..=n {
        let t = ratio.powi(g as i32) * binom(n - 1, g - 1).powi(2);
        s1 += t / g as f64;
        s2 += t;
    }
    let nf = n as f64;
    alpha_sq.powi(2 * n as i32 - 1) * (nf * nf * s1 * s1 + s2 * s2 / beta_sq - 2.0 * nf * s1 * s2)
}

/// Correlated-walk `r_2n` as a finite binomial sum.
pub fn crw_binomial_form(a: f64, d: f64, phi1: f64, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let (b, c) = (1.0 - d, 1.0 - a);
    let ad = a * d;
    let s = a * c * phi1 + b * d * (1.0 - phi1);
    (1..=n)
        .map(|g| {
            let brace = n as f64 / g as f64 * (s / ad + 1.0) + (ad - b * c) / (a * b * c * d) * s;
            ad.powi((n - g) as i32) * (b * c).powi(g as i32) * binom(n - 1, g - 1).powi(2) * brace
        })
        .sum()
}

/// `P_n(x) = Σ_k C(n,k)² ((x−1)/2)^{n−k} ((x+1)/2)^k`, with the sum of
/// absolute terms as a rounding scale.
pub fn legendre_explicit(n: usize, x: f64) -> (f64, f64) {
    let (u, v) = ((x - 1.0) / 2.0, (x + 1.0) / 2.0);
    signed_sum((0..=n).map(|k| binom(n, k).powi(2) * u.powi((n - k) as i32) * v.powi(k as i32)))
}

/// `P_n^{(1,0)}(x) = Σ_s C(n+1, s) C(n, n−s) ((x−1)/2)^{n−s} ((x+1)/2)^s`,
/// with the sum of absolute terms.
pub fn jacobi10_explicit(n: usize, x: f64) -> (f64, f64) {
    let (u, v) = ((x - 1.0) / 2.0, (x + 1.0) / 2.0);
    signed_sum((0..=n).map(|s| binom(n + 1, s) * binom(n, n - s) * u.powi((n - s) as i32) * v.powi(s as i32)))
}

fn signed_sum(terms: impl Iterator<Item = f64>) -> (f64, f64) {
    terms.fold((0.0, 0.0), |(s, m), t| (s + t, m + t.abs()))
}

/// Trapezoid rule over a full period; exponentially accurate for these
/// smooth periodic integrands.
fn periodic_mean(f: impl Fn(f64) -> f64, points: usize) -> f64 {
    let h = 2.0 * PI / points as f64;
    (0..points).map(|i| f(i as f64 * h)).sum::<f64>() / points as f64
}

/// `K(m)` in the modulus convention.
pub fn k_quad(m: f64) -> f64 {
    PI / 2.0 * periodic_mean(|t| 1.0 / (1.0 - (m * t.sin()).powi(2)).sqrt(), 4000)
}

/// `E(m)` in the modulus convention.
pub fn e_quad(m: f64) -> f64 {
    PI / 2.0 * periodic_mean(|t| (1.0 - (m * t.sin()).powi(2)).sqrt(), 4000)
}

fn script_parts(x: f64, z: f64) -> (f64, f64) {
    let d = 1.0 - 2.0 * z * (2.0 * x * x - 1.0) + z * z;
    ((4.0 * z * (1.0 - x * x) / d).sqrt(), d.sqrt())
}

pub fn script_k_quad(x: f64, z: f64) -> f64 {
    let (m, sd) = script_parts(x, z);
    k_quad(m) / sd
}

pub fn script_e_quad(x: f64, z: f64) -> f64 {
    let (m, sd) = script_parts(x, z);
    e_quad(m) / sd
}

/// Composite Simpson with `2 * half` panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, half: usize) -> f64 {
    let n = 2 * half;
    let h = (b - a) / n as f64;
    let inner: f64 = (1..n)
        .map(|i| f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 })
        .sum();
    (f(a) + f(b) + inner) * h / 3.0
}

/// Watson's closed form for the simple-cubic lattice Green function at the
/// origin.
pub fn watson_cubic_g() -> f64 {
    use statrs::function::gamma::gamma;
    6f64.sqrt() / (32.0 * PI.powi(3))
        * gamma(1.0 / 24.0)
        * gamma(5.0 / 24.0)
        * gamma(7.0 / 24.0)
        * gamma(11.0 / 24.0)
}
