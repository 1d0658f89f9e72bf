use lisbon::contour::{lisbon_phi, EntireFn, QuadratureSpec};
use lisbon::polyroots::{companion, SigmaPoint};
use lisbon::sampling::sample_sigmas;
use lisbon::systems::*;
use lisbon::traces::{derived_newton_symbolic, newton_symbolic, trace_t};
use lisbon::SigmaPoly;
use num::complex::Complex64;

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn exp() -> EntireFn {
    "exp:1".parse().unwrap()
}

#[test]
fn kernels_are_spanned_by_newton_polynomials() {
    for k in 2..=3 {
        for w in 1..=6 {
            let dn = derived_newton_symbolic(k, w as i64).unwrap();
            assert_eq!(graded_kernel(&OperatorSystem::s2(k), w).basis, vec![dn]);
            let n = newton_symbolic(k, w as usize);
            assert_eq!(graded_kernel(&OperatorSystem::s0(k), w).basis, vec![n.clone()]);
            assert_eq!(graded_kernel(&OperatorSystem::s1(k), w).basis, vec![n]);
        }
    }
}

#[test]
fn kernel_basis_is_annihilated() {
    let sys = OperatorSystem::s2(4);
    for w in 0..=5 {
        for g in graded_kernel(&sys, w).basis {
            assert!(check_system_symbolic(&sys, &g).unwrap().pass);
            assert_eq!(g.pure_weight(), Some(w));
        }
    }
}

#[test]
fn wrong_system_is_rejected() {
    // N_m is not a trace form and DN_m is not a trace function
    for m in 2..=5 {
        let n = newton_symbolic(3, m);
        assert!(!check_system_symbolic(&OperatorSystem::s2(3), &n).unwrap().pass);
        let dn = derived_newton_symbolic(3, m as i64).unwrap();
        assert!(!check_system_symbolic(&OperatorSystem::s1(3), &dn).unwrap().pass);
    }
}

#[test]
fn numeric_systems_on_exp() {
    let s = spec();
    let g = exp();
    let samples = sample_sigmas(2, 2, 1.0, 3);
    let f = lisbon_functional(FunctionalKind::F, &g, &s);
    assert!(
        check_system_numeric(&OperatorSystem::s1(2), &*f, &samples, SECOND_ORDER_TOL, &s)
            .unwrap()
            .pass
    );
    let ft = lisbon_functional(FunctionalKind::FTilde, &g, &s);
    assert!(
        check_system_numeric(&OperatorSystem::s2(2), &*ft, &samples, SECOND_ORDER_TOL, &s)
            .unwrap()
            .pass
    );
    assert!(
        !check_system_numeric(&OperatorSystem::s1(2), &*ft, &samples, SECOND_ORDER_TOL, &s)
            .unwrap()
            .pass
    );
}

#[test]
fn s3_numeric_and_its_negative_control() {
    let s = spec();
    let g = exp();
    let k = 3;
    let samples = sample_sigmas(k, 2, 1.0, 8);
    let phi = lisbon_functional(FunctionalKind::Phi, &g, &s);
    assert!(check_s3_numeric(k, &*phi, &samples, SECOND_ORDER_TOL, &s).unwrap().pass);
    let moved = |x: &SigmaPoint| Ok(companion(x).mul_vec(&lisbon_phi(&g, x, &s)?));
    assert!(
        check_s3_numeric(k, &moved, &samples, SECOND_ORDER_TOL, &s)
            .unwrap()
            .pass
    );
    let reversed = |x: &SigmaPoint| {
        let mut v = lisbon_phi(&g, x, &s)?;
        v.reverse();
        Ok(v)
    };
    assert!(
        !check_s3_numeric(k, &reversed, &samples, SECOND_ORDER_TOL, &s)
            .unwrap()
            .pass
    );
}

#[test]
fn s3_exact_negative_control() {
    let phi = symbolic_phi(3, &EntireFn::monomial(4)).unwrap();
    let mut swapped = phi.clone();
    swapped.swap(0, 2);
    assert!(check_s3_exact(&phi).unwrap().pass);
    assert!(!check_s3_exact(&swapped).unwrap().pass);
}

#[test]
fn closedness_negative_control() {
    let k = 3;
    let mut phi = symbolic_phi(k, &EntireFn::monomial(5)).unwrap();
    assert!(closedness_symbolic(&phi).unwrap().pass);
    phi[0] = &phi[0] + &SigmaPoly::parse(k, "s1*s2").unwrap();
    assert!(!closedness_symbolic(&phi).unwrap().pass);
}

#[test]
fn reconstruction_for_constant_function() {
    // f = 1, k = 2: g = z, T(g) = σ_1, so ∂_1 T = 1 and ∂_2 T = 0 while Φ(1) = (0, 1)
    let s = spec();
    let one: EntireFn = "poly:1".parse().unwrap();
    let samples = sample_sigmas(2, 3, 1.0, 0);
    assert!(
        reconstruct_trace_from_phi(&one, &samples, SECOND_ORDER_TOL, &s)
            .unwrap()
            .pass
    );
    let sigma = &samples[0];
    let g = one.antiderivative();
    assert!((trace_t(&g, sigma).unwrap() - sigma.sigma(1)).norm() < 1e-12);
    let phi = lisbon_phi(&one, sigma, &s).unwrap();
    assert!(phi[0].norm() < 1e-12 && (phi[1] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
}

#[test]
fn reconstruction_on_exp_k3() {
    let samples = sample_sigmas(3, 3, 1.0, 1);
    assert!(
        reconstruct_trace_from_phi(&exp(), &samples, SECOND_ORDER_TOL, &spec())
            .unwrap()
            .pass
    );
}

#[test]
fn constant_solutions_and_identities() {
    for k in 2..=4 {
        assert_eq!(constant_s3_solutions(k), vec![v_vector(k)]);
        assert!(operator_identities(k).iter().all(|r| r.pass));
        assert!(ideal_stability(&OperatorSystem::s1(k)).pass);
        assert!(ideal_stability(&OperatorSystem::s2(k)).pass);
    }
}

#[test]
fn injectivity_fails_beyond_weight_one() {
    for k in 2..=4 {
        assert!(u_minus1_injectivity(k, 1).pass);
        let r = u_minus1_injectivity(k, 2);
        assert!(!r.pass);
        let witness = SigmaPoly::parse(k, r.params["kernel_witness"].as_str().unwrap()).unwrap();
        let um = lisbon::weyl::make_generator(k, lisbon::weyl::Generator::UMinus1).unwrap();
        assert!(um.apply(&um.apply(&witness).unwrap()).unwrap().is_zero());
        assert!(!witness.is_zero());
    }
}

#[test]
fn vector_trace_separates_monomials() {
    use lisbon::linalg::rank;
    use std::collections::BTreeSet;
    for k in 2..=4 {
        let images: Vec<Vec<SigmaPoly>> = (0..=8)
            .map(|n| symbolic_phi(k, &EntireFn::monomial(n)).unwrap())
            .collect();
        let keys: BTreeSet<_> = images
            .iter()
            .flat_map(|v| {
                v.iter()
                    .enumerate()
                    .flat_map(|(j, p)| p.terms().map(move |(m, _)| (j, m.clone())))
            })
            .collect();
        let rows: Vec<_> = images
            .iter()
            .map(|v| keys.iter().map(|(j, m)| v[*j].coeff(m).re).collect())
            .collect();
        assert_eq!(rank(&rows, keys.len()), images.len(), "k={k}");
    }
}
