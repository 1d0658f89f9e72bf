//! Contour integrals F, F̃ and Φ against the same quantities summed over
//! the roots of P_σ.

use lisbon::cli::fmt_complex;
use lisbon::contour::{lisbon_all, EntireFn, QuadratureSpec};
use lisbon::polyroots::{radius_bound, roots};
use lisbon::traces::{trace_form, trace_t, vector_trace};
use lisbon::SigmaPoint;

fn main() -> lisbon::Result<()> {
    let spec = QuadratureSpec::default();
    let sigma = SigmaPoint::from_real(&[1.5, -2.0, 0.5])?;
    let f: EntireFn = "exp:1".parse()?;
    println!("sigma = {sigma}, R = {}", radius_bound(&sigma));
    for r in roots(&sigma, 1e-14)? {
        println!("  root {}", fmt_complex(r));
    }

    let l = lisbon_all(&f, &sigma, &spec)?;
    println!(
        "F      = {}   T      = {}",
        fmt_complex(l.f),
        fmt_complex(trace_t(&f, &sigma)?)
    );
    println!(
        "Ftilde = {}   Ttilde = {}",
        fmt_complex(l.ftilde),
        fmt_complex(trace_form(&f, &sigma)?)
    );
    for (j, (a, b)) in l.phi.iter().zip(vector_trace(&f, &sigma)?).enumerate() {
        println!("Phi_{j}  = {}   VT_{j}   = {}", fmt_complex(*a), fmt_complex(b));
    }
    println!("quadrature nodes: {}", l.nodes);
    Ok(())
}
