//! Lagrange interpolation of f at the roots of P_σ, obtained from the
//! integrals Φ and checked against f = Π_f + P_σ·Q_f.

use lisbon::cli::fmt_complex;
use lisbon::contour::{lisbon_phi, EntireFn, QuadratureSpec};
use lisbon::polyroots::p_eval;
use lisbon::traces::{lagrange_interp, phi_to_pi, pi_to_phi, quotient_eval};
use lisbon::SigmaPoint;
use num::complex::Complex64;

fn main() -> lisbon::Result<()> {
    let spec = QuadratureSpec::default();
    let f: EntireFn = "exp:1".parse()?;
    let sigma = SigmaPoint::from_real(&[0.5, -1.0, 0.25])?;

    let phi = lisbon_phi(&f, &sigma, &spec)?;
    let pi = phi_to_pi(&sigma, &phi);
    let direct = lagrange_interp(&f, &sigma, &spec)?;
    for (j, (a, b)) in pi.coeffs.iter().zip(&direct.coeffs).enumerate() {
        println!("pi_{j}: from phi {}   direct {}", fmt_complex(*a), fmt_complex(*b));
    }
    let back = pi_to_phi(&sigma, &pi);
    let trip = back.iter().zip(&phi).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    println!("round trip deviation {trip:e}");

    for z in [Complex64::new(0.3, 0.1), Complex64::new(-0.7, 0.4)] {
        let q = quotient_eval(&f, &sigma, z, &spec)?;
        let residual = f.eval(z) - pi.eval(z) - p_eval(&sigma, z, 0) * q;
        println!("z = {z}: |f - Pi - P Q| = {:e}", residual.norm());
    }
    Ok(())
}
