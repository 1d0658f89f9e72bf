//! Newton polynomials N_m and derived Newton polynomials DN_m for k = 3.

use lisbon::traces::{derived_newton_table, newton_table};

fn main() {
    let k = 3;
    for (m, (n, dn)) in newton_table(k, 6).iter().zip(derived_newton_table(k, 6)).enumerate() {
        println!("m = {m}");
        println!("  N  = {n}");
        println!("  DN = {dn}");
    }
}
