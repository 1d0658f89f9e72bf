use lisbon::contour::{
    circle_integral, lisbon_all, lisbon_f, lisbon_f_log, lisbon_f_partial, lisbon_phi, sigma_partial, EntireFn,
    QuadratureSpec,
};
use lisbon::polyroots::{
    companion, discriminant, gamma_power, min_separation, p_eval, radius_bound, roots, simple_roots, SigmaPoint,
};
use lisbon::sampling::sample_sigmas;
use lisbon::systems::{apply_numeric, lisbon_functional, FunctionalKind};
use lisbon::traces::{derived_newton_symbolic, trace_form, trace_poly_symbolic, trace_t, vector_trace, TraceKind};
use lisbon::weyl::{make_generator, Generator};
use lisbon::{Error, GaussianRational};
use num::complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pt(v: &[f64]) -> SigmaPoint {
    SigmaPoint::from_real(v).unwrap()
}

fn f(s: &str) -> EntireFn {
    s.parse().unwrap()
}

fn spec() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn near(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

fn sigma_strategy(k: usize, bound: f64) -> impl Strategy<Value = SigmaPoint> {
    prop::collection::vec((-bound..bound, -bound..bound), k)
        .prop_map(|v| SigmaPoint::new(v.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap())
}

/// Elementary symmetric functions of the given values.
fn elementary(z: &[Complex64]) -> Vec<Complex64> {
    let mut e = vec![c(1.0, 0.0)];
    for &x in z {
        e.push(c(0.0, 0.0));
        for j in (1..e.len()).rev() {
            let prev = e[j - 1];
            e[j] += prev * x;
        }
    }
    e[1..].to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vieta_round_trip(k in 1usize..=6, seed in any::<u64>()) {
        let sigma = &sample_sigmas(k, 1, 10.0, seed)[0];
        let z = roots(sigma, 1e-10).unwrap();
        let back = elementary(&z);
        for h in 1..=k {
            prop_assert!(near(back[h - 1], sigma.sigma(h), 1e-9), "h={} {} {}", h, back[h - 1], sigma.sigma(h));
        }
        let r = radius_bound(sigma);
        prop_assert!(z.iter().all(|x| x.norm() < r));
    }

    #[test]
    fn discriminant_matches_quadratic(s in sigma_strategy(2, 4.0)) {
        let d = discriminant(&s).unwrap();
        let closed = s.sigma(1) * s.sigma(1) - s.sigma(2) * 4.0;
        prop_assert!(near(d, closed, 1e-6));
    }

    #[test]
    fn log_form_agrees(s in sigma_strategy(3, 2.0), n in 0usize..5) {
        let g = EntireFn::monomial(n).add(&f("exp:1/2"));
        let direct = lisbon_f(&g, &s, &spec()).unwrap();
        let log = lisbon_f_log(&g, &s, &spec()).unwrap();
        prop_assert!(near(log, direct, 1e-10));
    }
}

#[test]
fn p_eval_examples() {
    let s = pt(&[3.0, 2.0]);
    assert_eq!(p_eval(&s, c(1.0, 0.0), 0), c(0.0, 0.0));
    assert_eq!(p_eval(&s, c(1.0, 0.0), 1), c(-1.0, 0.0));
    let z = c(0.3, 1.2);
    assert!(near(p_eval(&SigmaPoint::zero(3), z, 0), z.powu(3), 1e-15));
}

#[test]
fn radius_examples() {
    assert_eq!(radius_bound(&SigmaPoint::zero(3)), 2.0);
    assert_eq!(radius_bound(&pt(&[3.0, 2.0])), 8.0);
}

#[test]
fn discriminant_and_guard_agree() {
    assert!(near(discriminant(&pt(&[3.0, 2.0])).unwrap(), c(1.0, 0.0), 1e-9));
    let double = pt(&[2.0, 1.0]);
    assert!(discriminant(&double).unwrap().norm() < 1e-6);
    assert!(matches!(
        simple_roots(&double, 1e-10),
        Err(Error::DegenerateRoots { .. })
    ));
    for s in sample_sigmas(4, 10, 3.0, 11) {
        let z = simple_roots(&s, 1e-10).unwrap();
        assert!(min_separation(&z) > 1e-8 * radius_bound(&s));
    }
}

#[test]
fn companion_eigenvalues_are_roots() {
    let s = pt(&[3.0, 2.0]);
    let a = companion(&s);
    for z in roots(&s, 1e-12).unwrap() {
        let v = vec![c(1.0, 0.0), z];
        let av = a.mul_vec(&v);
        assert!(near(av[0], z * v[0], 1e-12) && near(av[1], z * v[1], 1e-12));
    }
}

#[test]
fn gamma_powers_compose() {
    for k in 1..=4 {
        for i in 0..=6 {
            for j in 0..=6 - i {
                assert_eq!(
                    gamma_power(k, i).mul(&gamma_power(k, j)),
                    gamma_power(k, i + j),
                    "k={k} i={i} j={j}"
                );
            }
        }
    }
}

#[test]
fn circle_examples() {
    let s = spec();
    assert!(near(circle_integral(|z| 1.0 / z, 3.0, &s).unwrap(), c(1.0, 0.0), 1e-14));
    assert!(circle_integral(|z| z.powu(3), 2.0, &s).unwrap().norm() < 1e-12);
    let p = pt(&[3.0, 2.0]);
    let v = circle_integral(|z| 1.0 / p_eval(&p, z, 0), 8.0, &s).unwrap();
    assert!(v.norm() < 1e-12);
}

#[test]
fn lisbon_examples() {
    let s = pt(&[3.0, 2.0]);
    let e = std::f64::consts::E;
    let l = lisbon_all(&f("exp:1"), &s, &spec()).unwrap();
    assert!(near(l.f, c(e + e * e, 0.0), 1e-10));
    assert!(near(l.ftilde, c(e * e - e, 0.0), 1e-10));
    assert!(near(l.phi[1], c(2.0 * e * e - e, 0.0), 1e-10));
    assert!(near(lisbon_f(&f("poly:0,1"), &s, &spec()).unwrap(), c(3.0, 0.0), 1e-12));
    assert!(near(
        lisbon_f(&f("poly:1"), &pt(&[1.0, 2.0, 3.0]), &spec()).unwrap(),
        c(3.0, 0.0),
        1e-12
    ));
    let ones = lisbon_phi(&f("poly:1"), &pt(&[1.0, 1.0, 1.0]), &spec()).unwrap();
    assert!(near(ones[0], c(0.0, 0.0), 1e-12) && near(ones[2], c(1.0, 0.0), 1e-12));
    assert!(near(
        lisbon_f_log(&f("poly:1"), &s, &spec()).unwrap(),
        c(2.0, 0.0),
        1e-12
    ));
    assert!(near(
        lisbon_f_log(&f("poly:0,1"), &s, &spec()).unwrap(),
        c(3.0, 0.0),
        1e-12
    ));
}

#[test]
fn doubling_past_convergence_is_stable() {
    let s = pt(&[1.0, -2.0, 0.5]);
    let g = f("exp:1;poly:0,0,1");
    let base = lisbon_f(&g, &s, &spec()).unwrap();
    let finer = QuadratureSpec::new(1e-12, 1024, 1 << 20).unwrap();
    assert!((lisbon_f(&g, &s, &finer).unwrap() - base).norm() < 1e-12 * (1.0 + base.norm()));
}

#[test]
fn quadrature_cap_is_reported() {
    let tight = QuadratureSpec::new(1e-14, 8, 8).unwrap();
    let s = pt(&[0.0, -0.97]);
    let r = lisbon_f(&f("exp:1"), &s, &tight);
    assert!(matches!(r, Err(Error::QuadratureNoConvergence { .. })));
}

#[test]
fn trace_examples() {
    let s = pt(&[3.0, 2.0]);
    let e = std::f64::consts::E;
    assert!(near(trace_t(&f("poly:0,0,1"), &s).unwrap(), c(5.0, 0.0), 1e-12));
    assert!(near(trace_t(&f("exp:1"), &s).unwrap(), c(e + e * e, 0.0), 1e-12));
    assert!(near(
        trace_t(&f("exp:1"), &pt(&[0.7])).unwrap(),
        c(0.7f64.exp(), 0.0),
        1e-12
    ));
    assert!(near(trace_form(&f("poly:0,0,1"), &s).unwrap(), c(3.0, 0.0), 1e-12));
    assert!(near(trace_form(&f("poly:0,1"), &s).unwrap(), c(1.0, 0.0), 1e-12));
    assert!(trace_form(&f("poly:1"), &s).unwrap().norm() < 1e-12);
    let vt = vector_trace(&f("poly:1"), &pt(&[2.0, -1.0, 0.5])).unwrap();
    assert!(vt[0].norm() < 1e-12 && vt[1].norm() < 1e-12 && near(vt[2], c(1.0, 0.0), 1e-12));
    // f = z gives (DN_0, DN_1) = (1, 3); f = z^2 gives (DN_1, DN_2) = (3, 7)
    let vz = vector_trace(&f("poly:0,1"), &s).unwrap();
    assert!(near(vz[0], c(1.0, 0.0), 1e-12) && near(vz[1], c(3.0, 0.0), 1e-12));
    let vz2 = vector_trace(&f("poly:0,0,1"), &s).unwrap();
    assert!(near(vz2[0], c(3.0, 0.0), 1e-12) && near(vz2[1], c(7.0, 0.0), 1e-12));
}

#[test]
fn kernel_of_trace_form() {
    for k in 2..=5 {
        for j in 0..k - 1 {
            let p = trace_poly_symbolic(&EntireFn::monomial(j), k, TraceKind::TTilde).unwrap();
            assert!(p.is_zero(), "k={k} j={j}");
        }
        for m in 0..=10 {
            let dn = derived_newton_symbolic(k, m).unwrap();
            let via = trace_poly_symbolic(&EntireFn::monomial(m as usize + k - 1), k, TraceKind::TTilde).unwrap();
            assert_eq!(dn, via);
        }
    }
    let mixed = trace_poly_symbolic(&f("poly:0,1,1"), 2, TraceKind::TTilde).unwrap();
    assert_eq!(mixed.to_string(), "s1 + 1");
}

#[test]
fn first_partials_of_trace_function() {
    // ∂_h F(f) = (−1)^{h−1} Φ(f′)_{k−h}, numerically and through formula (D)
    let s = spec();
    let g = f("exp:1");
    for sigma in sample_sigmas(3, 3, 1.5, 5) {
        let func = lisbon_functional(FunctionalKind::F, &g, &s);
        let dphi = lisbon_phi(&g.derivative(), &sigma, &s).unwrap();
        for h in 1..=3 {
            let num = sigma_partial(&*func, &sigma, &[h], &s).unwrap()[0];
            let sign = if h % 2 == 1 { 1.0 } else { -1.0 };
            assert!(near(num, dphi[3 - h] * sign, 1e-9), "h={h}");
            let d = lisbon_f_partial(&g, &sigma, h, &s).unwrap();
            assert!(near(d, num, 1e-8), "h={h}");
        }
    }
}

#[test]
fn first_partials_symbolic() {
    // ∂_h T(f) = (−1)^{h−1} T̃(z^{k−h} f′) for polynomial f
    for k in 1..=4 {
        for n in 0..=6 {
            let g = EntireFn::monomial(n);
            let t = trace_poly_symbolic(&g, k, TraceKind::T).unwrap();
            for h in 1..=k {
                let sign = GaussianRational::from_integer(if h % 2 == 1 { 1 } else { -1 });
                let rhs = trace_poly_symbolic(&g.derivative().mul_z_pow(k - h), k, TraceKind::TTilde)
                    .unwrap()
                    .scale(&sign);
                assert_eq!(t.partial(h).unwrap(), rhs, "k={k} n={n} h={h}");
            }
        }
    }
}

#[test]
fn phi_of_z_times_f() {
    let s = spec();
    let g = f("exp:1;poly:1,-1");
    for sigma in sample_sigmas(3, 4, 3.0, 9) {
        let lhs = lisbon_phi(&g.mul_z_pow(1), &sigma, &s).unwrap();
        let rhs = companion(&sigma).mul_vec(&lisbon_phi(&g, &sigma, &s).unwrap());
        for (a, b) in lhs.iter().zip(&rhs) {
            assert!(near(*a, *b, 1e-9));
        }
    }
}

#[test]
fn vector_field_actions() {
    // U_0 F(f) = T(z f′) and U_{−1} F(f) = T(f′)
    let s = spec();
    let g = f("exp:1");
    let k = 3;
    let u0 = make_generator(k, Generator::U0).unwrap();
    let um = make_generator(k, Generator::UMinus1).unwrap();
    let func = lisbon_functional(FunctionalKind::F, &g, &s);
    for sigma in sample_sigmas(k, 3, 1.0, 2) {
        let (a, _) = apply_numeric(&u0, &*func, &sigma, &s).unwrap();
        assert!(near(a[0], trace_t(&g.derivative().mul_z_pow(1), &sigma).unwrap(), 1e-8));
        let (b, _) = apply_numeric(&um, &*func, &sigma, &s).unwrap();
        assert!(near(b[0], trace_t(&g.derivative(), &sigma).unwrap(), 1e-8));
    }
}

#[test]
fn sigma_partial_of_polynomial() {
    let square = |s: &SigmaPoint| Ok(vec![s.sigma(1) * s.sigma(1)]);
    let d = sigma_partial(&square, &pt(&[3.0, 1.0]), &[1], &spec()).unwrap();
    assert!(near(d[0], c(6.0, 0.0), 1e-12));
    let dd = sigma_partial(&square, &pt(&[3.0, 1.0]), &[1, 1], &spec()).unwrap();
    assert!(near(dd[0], c(2.0, 0.0), 1e-10));
    assert!(sigma_partial(&square, &pt(&[3.0, 1.0]), &[3], &spec()).is_err());
}

#[test]
fn first_partial_lemma_on_exp() {
    // ∂_1 T(f) = T̃(z^{k−1} f′)
    let s = spec();
    let g = f("exp:1");
    for k in 2..=4 {
        let tf = |x: &SigmaPoint| Ok(vec![trace_t(&g, x)?]);
        for sigma in sample_sigmas(k, 2, 1.0, 4) {
            let lhs = sigma_partial(&tf, &sigma, &[1], &s).unwrap()[0];
            let rhs = trace_form(&g.derivative().mul_z_pow(k - 1), &sigma).unwrap();
            assert!(near(lhs, rhs, 1e-9), "k={k}");
        }
    }
}
