//! Lattice random walks in two and three dimensions.

use walkers_return::genfunc::{polya2d_gf, polya2d_return, polya3d_constants};
use walkers_return::quadrature::QuadratureSpec;

fn main() -> walkers_return::Result<()> {
    for n in [2, 10, 100, 1000] {
        println!("planar r_{n} = {:.6e}", polya2d_return(n));
    }
    // the planar generating function diverges as z -> 1: the walk is recurrent
    for z in [0.9, 0.99, 0.9999] {
        println!("planar G({z}) = {:.6}", polya2d_gf(z)?);
    }

    let c = polya3d_constants(&QuadratureSpec::gauss_kronrod(1e-12))?;
    println!("cubic lattice: G = {:.12}, return probability F = 1 - 1/G = {:.12}", c.g, c.f);
    println!("quadrature error estimate {:.1e}", c.error_estimate);
    Ok(())
}
