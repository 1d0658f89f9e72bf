//! The logarithmic form of F, which needs no roots, against the direct
//! integral for z^n.

use lisbon::contour::{lisbon_f, lisbon_f_log, EntireFn, QuadratureSpec};
use lisbon::sampling::sample_sigmas;

fn main() -> lisbon::Result<()> {
    let spec = QuadratureSpec::default();
    for sigma in sample_sigmas(4, 3, 2.0, 7) {
        println!("sigma = {sigma}");
        for n in [0, 3, 6] {
            let f = EntireFn::monomial(n);
            let direct = lisbon_f(&f, &sigma, &spec)?;
            let log = lisbon_f_log(&f, &sigma, &spec)?;
            println!("  z^{n}: |F - F_log| = {:e}", (direct - log).norm());
        }
    }
    Ok(())
}
