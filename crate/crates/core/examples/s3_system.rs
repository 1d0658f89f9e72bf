//! The vector system satisfied by Φ(f), closedness of the associated
//! 1-form, and the recovery of the trace function T from Φ.

use lisbon::contour::{EntireFn, QuadratureSpec};
use lisbon::sampling::sample_sigmas;
use lisbon::systems::{
    check_s3_exact, check_s3_numeric, closedness_numeric, closedness_symbolic, constant_s3_solutions,
    lisbon_functional, reconstruct_trace_from_phi, symbolic_phi, FunctionalKind, SECOND_ORDER_TOL,
};

fn main() -> lisbon::Result<()> {
    let spec = QuadratureSpec::default();
    let k = 3;

    let phi = symbolic_phi(k, &EntireFn::monomial(4))?;
    for (j, p) in phi.iter().enumerate() {
        println!("Phi_{j}(z^4) = {p}");
    }
    println!("exact system: {}", check_s3_exact(&phi)?.pass);
    println!("exact closedness: {}", closedness_symbolic(&phi)?.pass);
    for v in constant_s3_solutions(k) {
        let entries: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("constant solution: ({})", entries.join(", "));
    }

    let f: EntireFn = "exp:1".parse()?;
    let samples = sample_sigmas(k, 3, 1.0, 0);
    let phi = lisbon_functional(FunctionalKind::Phi, &f, &spec);
    let s3 = check_s3_numeric(k, &*phi, &samples, SECOND_ORDER_TOL, &spec)?;
    println!("numeric system on e^z: residual {:e}", s3.residual);
    let closed = closedness_numeric(k, &*phi, &samples, SECOND_ORDER_TOL, &spec)?;
    println!("numeric closedness on e^z: residual {:e}", closed.residual);
    let rebuilt = reconstruct_trace_from_phi(&f, &samples, SECOND_ORDER_TOL, &spec)?;
    println!("trace recovered from Phi: residual {:e}", rebuilt.residual);
    Ok(())
}
