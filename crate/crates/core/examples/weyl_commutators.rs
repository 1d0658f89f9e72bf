//! Generators of the trace systems as Weyl operators and their brackets
//! with U_0 and U_{-1}.

use lisbon::weyl::{commutator_table, make_generator, weight_eigenvalue, Generator};

fn main() -> lisbon::Result<()> {
    let k = 3;
    for g in [
        Generator::U0,
        Generator::UMinus1,
        Generator::T(2),
        Generator::TTilde(3),
        Generator::A(1, 3),
    ] {
        let op = make_generator(k, g)?;
        let w = weight_eigenvalue(&op).map_or("mixed".to_string(), |w| w.to_string());
        println!("{g} = {op}   (weight {w})");
    }
    println!();
    for row in commutator_table(k) {
        let mark = if row.holds() { "ok " } else { "BAD" };
        println!("{mark} {} = {}", row.label, row.computed);
    }
    Ok(())
}
