//! Pure-weight polynomial solutions of the systems S0, S1 and S2.

use lisbon::systems::{graded_kernel, OperatorSystem};

fn main() {
    let k = 3;
    for sys in [OperatorSystem::s0(k), OperatorSystem::s1(k), OperatorSystem::s2(k)] {
        println!("{} (k = {k})", sys.kind);
        for w in 0..=5 {
            let kernel = graded_kernel(&sys, w);
            let basis: Vec<String> = kernel.basis.iter().map(ToString::to_string).collect();
            println!("  w = {w}: dim {} [{}]", kernel.dim(), basis.join("; "));
        }
    }
}
