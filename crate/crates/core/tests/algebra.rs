use lisbon::exactpoly::{monomial_basis, weight_exponents, ArithOp};
use lisbon::weyl::{commutator_table, make_generator, weight_eigenvalue, Generator, WeylOp};
use lisbon::{GaussianRational, Monomial, SigmaPoly};
use proptest::prelude::*;

const K: usize = 3;

fn poly_strategy(k: usize) -> impl Strategy<Value = SigmaPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=2, k), -4i64..=4), 0..5).prop_map(move |terms| {
        SigmaPoly::from_terms(
            k,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial(e), GaussianRational::from_integer(c))),
        )
    })
}

fn op_strategy(k: usize) -> impl Strategy<Value = WeylOp> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..=1, k),
            prop::collection::vec(0u32..=1, k),
            -3i64..=3,
        ),
        1..4,
    )
    .prop_map(move |terms| {
        terms.into_iter().fold(WeylOp::zero(k), |acc, (a, b, c)| {
            let t = WeylOp::term(k, Monomial(a), Monomial(b), GaussianRational::from_integer(c));
            acc.add(&t).unwrap()
        })
    })
}

fn partitions(w: u64, largest: u64) -> usize {
    if w == 0 {
        return 1;
    }
    (1..=largest.min(w)).map(|p| partitions(w - p, p)).sum()
}

proptest! {
    #[test]
    fn distributive(a in poly_strategy(K), b in poly_strategy(K), c in poly_strategy(K)) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(a.arith(&b, ArithOp::Sub).unwrap(), &a - &b);
    }

    #[test]
    fn weight_decompose_partitions(a in poly_strategy(K)) {
        let parts = a.weight_decompose();
        let sum = parts.iter().fold(SigmaPoly::zero(K), |acc, (_, p)| &acc + p);
        prop_assert_eq!(sum, a);
        for (w, p) in &parts {
            prop_assert_eq!(p.pure_weight(), Some(*w));
        }
    }

    #[test]
    fn partial_lowers_weight(w in 0u64..8, h in 1usize..=K) {
        for m in monomial_basis(K, w) {
            let d = m.partial(h).unwrap();
            prop_assert!(d.is_zero() || d.pure_weight() == Some(w - h as u64));
        }
    }

    #[test]
    fn render_parse_round_trip(a in poly_strategy(K)) {
        prop_assert_eq!(SigmaPoly::parse(K, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn compose_associative(a in op_strategy(K), b in op_strategy(K), c in op_strategy(K)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn apply_is_module_action(a in op_strategy(K), b in op_strategy(K), g in poly_strategy(K)) {
        let composed = a.compose(&b).unwrap().apply(&g).unwrap();
        prop_assert_eq!(composed, a.apply(&b.apply(&g).unwrap()).unwrap());
    }

    #[test]
    fn weight_eigenvalue_iff_pure(a in op_strategy(K)) {
        let eig = weight_eigenvalue(&a);
        prop_assert_eq!(eig, a.pure_weight().map(GaussianRational::from_integer));
    }

    #[test]
    fn op_render_round_trip(a in op_strategy(K)) {
        prop_assert_eq!(WeylOp::parse(K, &a.to_string()).unwrap(), a);
    }
}

#[test]
fn basis_counts_match_partitions() {
    for k in 1..=5 {
        for w in 0..=12 {
            assert_eq!(weight_exponents(k, w).len(), partitions(w, k as u64), "k={k} w={w}");
        }
    }
}

#[test]
fn basis_examples() {
    let show = |k, w| monomial_basis(k, w).iter().map(|p| p.to_string()).collect::<Vec<_>>();
    assert_eq!(show(2, 2), ["s2", "s1^2"]);
    assert_eq!(show(1, 3), ["s1^3"]);
    assert_eq!(show(3, 3), ["s3", "s1*s2", "s1^3"]);
}

#[test]
fn commutator_table_k2_to_5() {
    for k in 2..=5 {
        for row in commutator_table(k) {
            assert!(row.holds(), "k={k} {}: {} vs {}", row.label, row.computed, row.expected);
        }
    }
}

#[test]
fn generator_examples() {
    let g = |k, gen| make_generator(k, gen).unwrap();
    assert_eq!(g(2, Generator::UMinus1), WeylOp::parse(2, "2*d1 + s1*d2").unwrap());
    assert_eq!(
        g(2, Generator::T(2)),
        WeylOp::parse(2, "d1^2 + d2*s1*d1 + d2*s2*d2").unwrap()
    );
    let u0 = g(3, Generator::U0);
    let um = g(3, Generator::UMinus1);
    assert_eq!(
        u0.commutator(&um).unwrap(),
        um.scale(&GaussianRational::from_integer(-1))
    );
    let p = SigmaPoly::parse(2, "s1^2 - s2").unwrap();
    assert!(g(2, Generator::TTilde(2)).apply(&p).unwrap().is_zero());
    let lam = SigmaPoly::parse(4, "5/2*s1").unwrap();
    assert_eq!(g(4, Generator::UMinus1).apply(&lam).unwrap(), SigmaPoly::integer(4, 10));
}

#[test]
fn a_1h_sign_in_ttilde_commutator() {
    let g = |k, gen| make_generator(k, gen).unwrap();
    let c = |x: i64| GaussianRational::from_integer(x);
    let um = g(3, Generator::UMinus1);
    let bracket = um.commutator(&g(3, Generator::TTilde(2))).unwrap();
    assert_eq!(bracket, g(3, Generator::TTilde(3)).scale(&c(-1)));
    let um = g(4, Generator::UMinus1);
    let bracket = um.commutator(&g(4, Generator::TTilde(3))).unwrap();
    let expected = g(4, Generator::TTilde(4))
        .scale(&c(-1))
        .add(&g(4, Generator::A(1, 3)).scale(&c(3)))
        .unwrap();
    assert_eq!(bracket, expected);
    assert!(!g(4, Generator::A(1, 3)).is_zero());
}
