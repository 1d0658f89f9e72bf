//! Seeded σ samples away from the discriminant locus.

use num::complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactpoly::{GaussianRational, Monomial};
use crate::polyroots::{discriminant, SigmaPoint};
use crate::weyl::WeylOp;

/// Samples closer than this to the discriminant locus are rejected.
pub const MIN_DISCRIMINANT: f64 = 1e-4;

/// `count` points with every σ_h uniform in the closed disk of the given
/// radius and |Δ(σ)| > [`MIN_DISCRIMINANT`]. Same seed, same points.
pub fn sample_sigmas(k: usize, count: usize, radius: f64, seed: u64) -> Vec<SigmaPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((k as u64) << 32));
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let values: Vec<Complex64> = (0..k)
            .map(|_| {
                let r = radius * rng.gen::<f64>().sqrt();
                let theta = rng.gen_range(0.0..std::f64::consts::TAU);
                Complex64::from_polar(r, theta)
            })
            .collect();
        let sigma = SigmaPoint::new(values).expect("finite samples");
        if k == 1 || discriminant(&sigma).is_ok_and(|d| d.norm() > MIN_DISCRIMINANT) {
            out.push(sigma);
        }
    }
    out
}

/// `count` points uniform in the disk |z| ≤ radius.
pub fn sample_disk(count: usize, radius: f64, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = radius * rng.gen::<f64>().sqrt();
            Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
        })
        .collect()
}

/// Random operators with one to four terms, σ- and ∂-exponents at most 2
/// and small nonzero integer coefficients.
pub fn random_weyl_ops(k: usize, count: usize, seed: u64) -> Vec<WeylOp> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mono = |rng: &mut ChaCha8Rng| Monomial((0..k).map(|_| rng.gen_range(0..=2)).collect());
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=4);
            let mut op = WeylOp::zero(k);
            for _ in 0..n {
                let alpha = mono(&mut rng);
                let beta = mono(&mut rng);
                let c = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
                let t = WeylOp::term(k, alpha, beta, GaussianRational::from_integer(c));
                op = op.add(&t).expect("same arity");
            }
            op
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_bounded() {
        let a = sample_sigmas(3, 10, 5.0, 7);
        let b = sample_sigmas(3, 10, 5.0, 7);
        assert_eq!(a, b);
        assert_ne!(a, sample_sigmas(3, 10, 5.0, 8));
        for s in &a {
            assert!(s.max_abs() <= 5.0);
            assert!(discriminant(s).unwrap().norm() > MIN_DISCRIMINANT);
        }
        assert!(sample_disk(20, 2.0, 1).iter().all(|z| z.norm() <= 2.0));
    }
}
