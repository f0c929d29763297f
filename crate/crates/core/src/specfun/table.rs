use std::collections::HashMap;
use std::sync::RwLock;

use super::elliptic::ellip_ke;
use super::polynomial::{jacobi10_sequence, legendre_sequence};
use crate::error::Result;

/// Memoised Legendre, `(1,0)`-Jacobi and elliptic values.
///
/// Polynomial caches hold the whole sequence `P_0(x), …, P_N(x)` per
/// argument and grow on demand; entries are exactly what a fresh recurrence
/// run produces. Safe to share between threads.
#[derive(Debug, Default)]
pub struct SpecFunTable {
    legendre: RwLock<HashMap<u64, Vec<f64>>>,
    jacobi10: RwLock<HashMap<u64, Vec<f64>>>,
    elliptic: RwLock<HashMap<u64, (f64, f64)>>,
}

fn cached_sequence(
    cache: &RwLock<HashMap<u64, Vec<f64>>>,
    n: usize,
    x: f64,
    build: fn(usize, f64) -> Result<Vec<f64>>,
) -> Result<f64> {
    let key = x.to_bits();
    if let Some(seq) = cache.read().expect("cache lock poisoned").get(&key) {
        if let Some(v) = seq.get(n) {
            return Ok(*v);
        }
    }
    // grow geometrically so repeated increasing queries stay linear overall
    let len = cache
        .read()
        .expect("cache lock poisoned")
        .get(&key)
        .map_or(0, Vec::len);
    let target = n.max(2 * len).max(16);
    let seq = build(target, x)?;
    let v = seq[n];
    let mut w = cache.write().expect("cache lock poisoned");
    let entry = w.entry(key).or_default();
    if seq.len() > entry.len() {
        *entry = seq;
    }
    Ok(v)
}

impl SpecFunTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn legendre(&self, n: usize, x: f64) -> Result<f64> {
        cached_sequence(&self.legendre, n, x, legendre_sequence)
    }

    pub fn jacobi10(&self, n: usize, x: f64) -> Result<f64> {
        cached_sequence(&self.jacobi10, n, x, jacobi10_sequence)
    }

    /// `(K(m), E(m))`, modulus convention.
    pub fn elliptic(&self, m: f64) -> Result<(f64, f64)> {
        let key = m.to_bits();
        if let Some(v) = self.elliptic.read().expect("cache lock poisoned").get(&key) {
            return Ok(*v);
        }
        let v = ellip_ke(m)?;
        self.elliptic
            .write()
            .expect("cache lock poisoned")
            .insert(key, v);
        Ok(v)
    }

    /// Number of distinct arguments held by the Legendre cache.
    pub fn legendre_arguments(&self) -> usize {
        self.legendre.read().expect("cache lock poisoned").len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{ellip_ke, jacobi10_eval, legendre_eval};
    use std::sync::Arc;

    #[test]
    fn cached_values_are_bit_identical_to_fresh() {
        let t = SpecFunTable::new();
        for &x in &[-0.9, -0.1, 0.0, 0.37, 1.0] {
            for n in [0usize, 1, 5, 40, 3, 120] {
                assert_eq!(
                    t.legendre(n, x).unwrap().to_bits(),
                    legendre_eval(n, x).unwrap().to_bits()
                );
                assert_eq!(
                    t.jacobi10(n, x).unwrap().to_bits(),
                    jacobi10_eval(n, x).unwrap().to_bits()
                );
            }
        }
        for m in [0.0, 0.5, 0.99] {
            let a = t.elliptic(m).unwrap();
            assert_eq!(a, t.elliptic(m).unwrap());
            assert_eq!(a, ellip_ke(m).unwrap());
        }
        assert_eq!(t.legendre_arguments(), 5);
    }

    #[test]
    fn recurrence_residual_on_grid() {
        let t = SpecFunTable::new();
        for i in 0..=100 {
            let x = -1.0 + 2.0 * i as f64 / 100.0;
            for n in 1..200 {
                let nf = n as f64;
                let (pm, p, pp) = (
                    t.legendre(n - 1, x).unwrap(),
                    t.legendre(n, x).unwrap(),
                    t.legendre(n + 1, x).unwrap(),
                );
                let res = ((nf + 1.0) * pp - (2.0 * nf + 1.0) * x * p + nf * pm).abs();
                assert!(res < 1e-12 * p.abs().max(1.0), "n={n} x={x} res={res}");
            }
        }
    }

    #[test]
    fn concurrent_readers_see_consistent_values() {
        let t = Arc::new(SpecFunTable::new());
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let t = Arc::clone(&t);
                std::thread::spawn(move || {
                    (0..200)
                        .map(|n| t.legendre((n * 7 + i) % 150, 0.25).unwrap())
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            for (n, v) in h.join().unwrap().into_iter().enumerate() {
                let deg = (n * 7 + i) % 150;
                assert_eq!(v.to_bits(), legendre_eval(deg, 0.25).unwrap().to_bits());
            }
        }
    }
}
