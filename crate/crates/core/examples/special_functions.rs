//! Legendre and Jacobi polynomials, elliptic integrals and quadrature.

use std::f64::consts::PI;

use walkers_return::quadrature::{integrate, QuadratureSpec};
use walkers_return::specfun::{
    binom, ellip_ke, jacobi10_eval, legendre_scaled, legendre_sequence, script_ke, SpecFunTable,
};

fn main() -> walkers_return::Result<()> {
    let p = legendre_sequence(5, 0.3)?;
    println!("P_0..P_5(0.3) = {p:?}");
    println!("P_3^(1,0)(0.3) = {}", jacobi10_eval(3, 0.3)?);
    // y^n P_n(x/y) stays finite as y -> 0
    println!("y^40 P_40(x/y) at x = 0.5, y = 1e-3: {:.6e}", legendre_scaled(40, 0.5, 1e-3)?);

    let m = 0.8;
    let (k, e) = ellip_ke(m)?;
    let spec = QuadratureSpec::simpson(1e-13);
    let qk = integrate(|t| 1.0 / (1.0 - (m * t.sin()).powi(2)).sqrt(), 0.0, PI / 2.0, &spec)?;
    println!("K({m}) = {k:.15} by AGM, {:.15} by quadrature ({} evaluations)", qk.value, qk.evaluations);
    println!("E({m}) = {e:.15}");
    println!("two-parameter K, E at (x, z) = (0.2, 0.7): {:?}", script_ke(0.2, 0.7)?);

    println!("C(60, 30) = {:?}", binom(60, 30)?);
    println!("C(500, 250) = {:?}", binom(500, 250)?);

    let table = SpecFunTable::default();
    let cached = table.legendre(200, 0.6)?;
    table.legendre(50, 0.6)?;
    println!("cached P_200(0.6) = {:.6e}", cached);
    println!("distinct cached arguments: {}", table.legendre_arguments());
    Ok(())
}
