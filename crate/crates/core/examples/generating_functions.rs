//! Closed-form generating functions against truncated power series.

use walkers_return::genfunc::compare_gf;
use walkers_return::quadrature::QuadratureSpec;
use walkers_return::Model;

fn main() -> walkers_return::Result<()> {
    let spec = QuadratureSpec::default();
    let models = [
        Model::Hadamard,
        Model::Qw { alpha_sq: 0.2 },
        Model::Crw { a: 0.3, b: 0.4, d: 0.6, phi1: 0.5 },
        Model::Rw { p: 0.5 },
        Model::Polya2d,
    ];
    for model in models {
        for z in [0.3, 0.6, 0.9] {
            let ev = compare_gf(&model, z, 1e-10, &spec)?;
            println!(
                "{:<9} z = {z}: closed {:.12}  series {:.12}  (N = {}, tail <= {:.1e})",
                model.name(),
                ev.closed_value,
                ev.series_value,
                ev.truncation,
                ev.tail_bound
            );
        }
    }
    Ok(())
}
