//! The companion matrix A of P_σ, its powers as multiplication by z^j in
//! ℂ[σ, z]/(P_σ), and the exact derivative identities.

use lisbon::polyroots::{
    companion, companion_derivative_identity_check, companion_symbolic, gamma_power, line_equality_check, roots,
};
use lisbon::SigmaPoint;

fn main() -> lisbon::Result<()> {
    let k = 3;
    let a = companion_symbolic(k);
    println!("A =");
    for row in &a.rows {
        println!(
            "  [{}]",
            row.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        );
    }
    println!(
        "Gamma_2 equals transpose of A^2: {}",
        gamma_power(k, 2) == a.pow(2).transpose()
    );

    let sigma = SigmaPoint::from_real(&[2.0, -1.0, -2.0])?;
    let num = companion(&sigma);
    for r in roots(&sigma, 1e-14)? {
        // (1, r, …, r^{k−1}) is an eigenvector with eigenvalue r
        let v: Vec<_> = (0..k as i32).map(|j| r.powi(j)).collect();
        let av = num.mul_vec(&v);
        let dev = av.iter().zip(&v).map(|(x, y)| (x - r * y).norm()).fold(0.0, f64::max);
        println!("root {r:.6}: |A v - r v| = {dev:e}");
    }
    for k in 2..=5 {
        let d = companion_derivative_identity_check(k);
        let l = line_equality_check(k);
        println!("k = {k}: derivative identity {}, line equality {}", d.pass, l.pass);
    }
    Ok(())
}
