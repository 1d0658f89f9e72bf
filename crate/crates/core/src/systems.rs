//! The differential systems satisfied by trace functions, trace forms and
//! vector traces: exact and numeric checkers, graded kernels and the
//! auxiliary lemmas about U_{−1}, constant solutions and closedness.

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::contour::{lisbon_f, lisbon_ftilde, lisbon_phi, sigma_partial, EntireFn, Functional, QuadratureSpec};
use crate::error::{Error, Result};
use crate::exactpoly::{weight_exponents, GaussianRational, Monomial, SigmaPoly};
use crate::linalg;
use crate::polyroots::{companion, companion_symbolic, SigmaPoint};
use crate::report::Report;
use crate::traces::{derived_newton_symbolic, newton_symbolic, trace_poly_symbolic, trace_t, TraceKind};
use crate::weyl::{a_generators, express, make_generator, Generator, WeylOp};

/// Numeric tolerance for second-order operator residuals.
pub const SECOND_ORDER_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// T(m) alone
    S0,
    /// T(m) and A(p,q)
    S1,
    /// Ttilde(m) and A(p,q)
    S2,
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemKind::S0 => "S0",
            SystemKind::S1 => "S1",
            SystemKind::S2 => "S2",
        })
    }
}

/// A named family of operators over k variables.
#[derive(Clone, Debug)]
pub struct OperatorSystem {
    pub k: usize,
    pub kind: SystemKind,
    pub generators: Vec<(Generator, WeylOp)>,
}

impl OperatorSystem {
    pub fn new(kind: SystemKind, k: usize) -> Self {
        let mut labels = Vec::new();
        for m in 2..=k {
            labels.push(match kind {
                SystemKind::S2 => Generator::TTilde(m),
                _ => Generator::T(m),
            });
        }
        if kind != SystemKind::S0 {
            labels.extend(a_generators(k));
        }
        let generators = labels
            .into_iter()
            .map(|g| (g, make_generator(k, g).expect("admissible index")))
            .collect();
        OperatorSystem { k, kind, generators }
    }

    pub fn s0(k: usize) -> Self {
        OperatorSystem::new(SystemKind::S0, k)
    }

    pub fn s1(k: usize) -> Self {
        OperatorSystem::new(SystemKind::S1, k)
    }

    pub fn s2(k: usize) -> Self {
        OperatorSystem::new(SystemKind::S2, k)
    }
}

/// Every generator applied to g; passes iff all residuals vanish.
pub fn check_system_symbolic(sys: &OperatorSystem, g: &SigmaPoly) -> Result<Report> {
    let mut residuals = BTreeMap::new();
    let mut worst: f64 = 0.0;
    for (label, op) in &sys.generators {
        let r = op.apply(g)?;
        worst = worst.max(r.max_abs_coeff());
        residuals.insert(label.to_string(), r.to_string());
    }
    Ok(Report::new("system_symbolic")
        .param("system", sys.kind.to_string())
        .param("k", sys.k)
        .param("g", g.to_string())
        .param("residuals", residuals)
        .exact(worst))
}

/// The value of `op` applied to a σ-functional at σ. Derivatives come
/// from nested Cauchy integrals, one per distinct multi-index.
pub fn apply_numeric(
    op: &WeylOp,
    func: &Functional<'_>,
    sigma: &SigmaPoint,
    spec: &QuadratureSpec,
) -> Result<(Vec<Complex64>, f64)> {
    let mut cache: BTreeMap<Monomial, Vec<Complex64>> = BTreeMap::new();
    let mut total: Option<Vec<Complex64>> = None;
    let mut scale: f64 = 0.0;
    for (alpha, beta, c) in op.terms() {
        if !cache.contains_key(beta) {
            let indices: Vec<usize> = beta
                .0
                .iter()
                .enumerate()
                .flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize))
                .collect();
            cache.insert(beta.clone(), sigma_partial(func, sigma, &indices, spec)?);
        }
        let d = &cache[beta];
        let coeff = c.to_complex() * alpha.eval(sigma.values());
        let acc = total.get_or_insert_with(|| vec![Complex64::zero(); d.len()]);
        for (a, x) in acc.iter_mut().zip(d) {
            let t = coeff * x;
            scale = scale.max(t.norm());
            *a += t;
        }
    }
    Ok((total.unwrap_or_default(), scale))
}

fn sigma_labels(samples: &[SigmaPoint]) -> Vec<String> {
    samples.iter().map(|s| s.to_string()).collect()
}

/// Each generator applied numerically to `func` at every sample. The
/// residual is |G·F| relative to 1 + the largest single term of G·F.
pub fn check_system_numeric(
    sys: &OperatorSystem,
    func: &Functional<'_>,
    samples: &[SigmaPoint],
    tol: f64,
    spec: &QuadratureSpec,
) -> Result<Report> {
    let mut worst: f64 = 0.0;
    let mut worst_label = String::new();
    for sigma in samples {
        for (label, op) in &sys.generators {
            let (v, scale) = apply_numeric(op, func, sigma, spec)?;
            let r = v.iter().map(|x| x.norm()).fold(0.0, f64::max) / (1.0 + scale);
            if r > worst || r.is_nan() {
                worst = r;
                worst_label = label.to_string();
            }
        }
    }
    Ok(Report::new("system_numeric")
        .param("system", sys.kind.to_string())
        .param("k", sys.k)
        .param("samples", sigma_labels(samples))
        .param("worst_generator", worst_label)
        .param("m_start", spec.m_start)
        .within(worst, tol))
}

fn sign(e: usize) -> f64 {
    if e.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn gsign(e: usize) -> GaussianRational {
    GaussianRational::from_integer(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// (−1)^{k−h} ∂_hΦ = ∂_k(A^{k−h}Φ) for h ∈ [1, k−1], exactly.
pub fn check_s3_exact(phi: &[SigmaPoly]) -> Result<Report> {
    let k = phi.len();
    let a = companion_symbolic(k);
    let mut worst: f64 = 0.0;
    for h in 1..k {
        let moved = a.pow(k - h).mul_vec(phi);
        for (j, entry) in phi.iter().enumerate() {
            let lhs = entry.partial(h)?.scale(&gsign(k - h));
            let rhs = moved[j].partial(k)?;
            worst = worst.max((&lhs - &rhs).max_abs_coeff());
        }
    }
    Ok(Report::new("s3_exact")
        .param("k", k)
        .param("phi", phi.iter().map(|p| p.to_string()).collect::<Vec<_>>())
        .exact(worst))
}

/// A(σ)^e·v.
fn apply_power(sigma: &SigmaPoint, e: usize, v: Vec<Complex64>) -> Vec<Complex64> {
    let a = companion(sigma);
    (0..e).fold(v, |acc, _| a.mul_vec(&acc))
}

/// The S3 relations for a vector functional, sampled. Residuals are taken
/// relative to 1 + |(−1)^{k−h}∂_hΦ|.
pub fn check_s3_numeric(
    k: usize,
    func: &Functional<'_>,
    samples: &[SigmaPoint],
    tol: f64,
    spec: &QuadratureSpec,
) -> Result<Report> {
    let mut worst: f64 = 0.0;
    for sigma in samples {
        if sigma.k() != k {
            return Err(Error::MismatchedArity {
                left: k,
                right: sigma.k(),
            });
        }
        for h in 1..k {
            let lhs: Vec<Complex64> = sigma_partial(func, sigma, &[h], spec)?
                .into_iter()
                .map(|x| x * sign(k - h))
                .collect();
            let moved = |s: &SigmaPoint| -> Result<Vec<Complex64>> { Ok(apply_power(s, k - h, func(s)?)) };
            let rhs = sigma_partial(&moved, sigma, &[k], spec)?;
            for (l, r) in lhs.iter().zip(&rhs) {
                worst = worst.max((l - r).norm() / (1.0 + l.norm()));
            }
        }
    }
    Ok(Report::new("s3_numeric")
        .param("k", k)
        .param("samples", sigma_labels(samples))
        .within(worst, tol))
}

/// Basis of the pure-weight-w polynomials killed by every generator.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelBasis {
    pub k: usize,
    pub w: u64,
    pub basis: Vec<SigmaPoly>,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Columns in display order (σ_1^w first), so that a normalized kernel
/// vector has σ_1^w coefficient 1 whenever that coefficient is nonzero.
fn graded_columns(k: usize, w: u64) -> Vec<Monomial> {
    let mut cols = weight_exponents(k, w);
    cols.reverse();
    cols
}

/// Rows of the exact matrix of a family of polynomial maps, one row per
/// (map, target monomial), one column per source monomial.
fn action_rows<F>(cols: &[Monomial], k: usize, maps: usize, mut apply: F) -> Vec<Vec<BigRational>>
where
    F: FnMut(usize, &SigmaPoly) -> SigmaPoly,
{
    let mut rows = Vec::new();
    for i in 0..maps {
        let images: Vec<SigmaPoly> = cols
            .iter()
            .map(|m| apply(i, &SigmaPoly::monomial(k, m.clone(), GaussianRational::one())))
            .collect();
        let mut targets: Vec<&Monomial> = images.iter().flat_map(|p| p.terms().map(|(m, _)| m)).collect();
        targets.sort();
        targets.dedup();
        for t in targets {
            rows.push(
                images
                    .iter()
                    .map(|p| p.coeff(t).to_rational().expect("integer generators"))
                    .collect(),
            );
        }
    }
    rows
}

fn vector_to_poly(k: usize, cols: &[Monomial], v: &[BigRational]) -> SigmaPoly {
    SigmaPoly::from_terms(
        k,
        cols.iter()
            .zip(v)
            .map(|(m, x)| (m.clone(), GaussianRational::from(x.clone()))),
    )
}

pub fn graded_kernel(sys: &OperatorSystem, w: u64) -> KernelBasis {
    let k = sys.k;
    let cols = graded_columns(k, w);
    let rows = action_rows(&cols, k, sys.generators.len(), |i, g| {
        sys.generators[i].1.apply(g).expect("same arity")
    });
    let basis = linalg::nullspace(&rows, cols.len())
        .iter()
        .map(|v| vector_to_poly(k, &cols, v))
        .collect();
    KernelBasis { k, w, basis }
}

fn u_minus1_power_rows(k: usize, m: u64, cols: &[Monomial]) -> Vec<Vec<BigRational>> {
    let u = make_generator(k, Generator::UMinus1).expect("U-1");
    action_rows(cols, k, 1, |_, g| {
        (0..m).fold(g.clone(), |acc, _| u.apply(&acc).expect("same arity"))
    })
}

/// Whether U_{−1}^m is injective on the pure-weight-m polynomials, by an
/// exact rank computation. The report records the dimension, the rank and
/// one kernel element when there is one.
pub fn u_minus1_injectivity(k: usize, m: u64) -> Report {
    let cols = graded_columns(k, m);
    let rows = u_minus1_power_rows(k, m, &cols);
    let rank = linalg::rank(&rows, cols.len());
    let kernel = linalg::nullspace(&rows, cols.len());
    let witness = kernel.first().map(|v| vector_to_poly(k, &cols, v).to_string());
    Report::new("u_minus1_injectivity")
        .param("k", k)
        .param("m", m)
        .param("dim", cols.len())
        .param("rank", rank)
        .param("kernel_witness", witness)
        .exact((cols.len() - rank) as f64)
}

/// Injectivity of U_{−1}^m restricted to the span of `basis` (pure weight m).
pub fn u_minus1_injectivity_on(k: usize, m: u64, basis: &[SigmaPoly]) -> Report {
    let u = make_generator(k, Generator::UMinus1).expect("U-1");
    let images: Vec<SigmaPoly> = basis
        .iter()
        .map(|g| (0..m).fold(g.clone(), |acc, _| u.apply(&acc).expect("same arity")))
        .collect();
    // weight 0 images are constants; the restriction is injective iff the
    // image vectors are independent
    let row: Vec<BigRational> = images
        .iter()
        .map(|p| p.coeff(&Monomial::one(k)).to_rational().expect("integer generators"))
        .collect();
    let rank = linalg::rank(&[row], basis.len());
    Report::new("u_minus1_injectivity_restricted")
        .param("k", k)
        .param("m", m)
        .param("dim", basis.len())
        .param("rank", rank)
        .exact((basis.len() - rank) as f64)
}

/// Constant vectors Φ ∈ ℚ^k with ∂_k(A^pΦ) = 0 for every p ∈ [1, k−1].
pub fn constant_s3_solutions(k: usize) -> Vec<Vec<BigRational>> {
    let a = companion_symbolic(k);
    let mut rows = Vec::new();
    for p in 1..k {
        let d = a.pow(p).partial(k).expect("k in range");
        for row in &d.rows {
            let mut monos: Vec<&Monomial> = row.iter().flat_map(|e| e.terms().map(|(m, _)| m)).collect();
            monos.sort();
            monos.dedup();
            for m in monos {
                rows.push(
                    row.iter()
                        .map(|e| e.coeff(m).to_rational().expect("integer entries"))
                        .collect(),
                );
            }
        }
    }
    linalg::nullspace(&rows, k)
}

/// The vector (0, …, 0, 1).
pub fn v_vector(k: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); k];
    v[k - 1] = BigRational::one();
    v
}

/// dA has nonzero entries only in its last row.
fn da_last_row_only(k: usize) -> bool {
    let a = companion_symbolic(k);
    (1..=k).all(|h| {
        let d = a.partial(h).expect("h in range");
        d.rows[..k - 1].iter().all(|row| row.iter().all(SigmaPoly::is_zero))
    })
}

/// Closedness of Σ_h (−1)^{h−1} Φ_{k−h} dσ_h for exact entries:
/// (−1)^h ∂_pΦ_{k−h} = (−1)^p ∂_hΦ_{k−p}, plus the last-row shape of dA.
pub fn closedness_symbolic(phi: &[SigmaPoly]) -> Result<Report> {
    let k = phi.len();
    let mut worst: f64 = 0.0;
    for h in 1..=k {
        for p in h + 1..=k {
            let lhs = phi[k - h].partial(p)?.scale(&gsign(h));
            let rhs = phi[k - p].partial(h)?.scale(&gsign(p));
            worst = worst.max((&lhs - &rhs).max_abs_coeff());
        }
    }
    let structural = da_last_row_only(k);
    Ok(Report::new("closedness_exact")
        .param("k", k)
        .param("da_last_row_only", structural)
        .exact(if structural { worst } else { f64::MAX }))
}

/// Sampled form of [`closedness_symbolic`].
pub fn closedness_numeric(
    k: usize,
    func: &Functional<'_>,
    samples: &[SigmaPoint],
    tol: f64,
    spec: &QuadratureSpec,
) -> Result<Report> {
    let mut worst: f64 = 0.0;
    for sigma in samples {
        let grads: Vec<Vec<Complex64>> = (1..=k)
            .map(|h| sigma_partial(func, sigma, &[h], spec))
            .collect::<Result<_>>()?;
        for h in 1..=k {
            for p in h + 1..=k {
                let lhs = grads[p - 1][k - h] * sign(h);
                let rhs = grads[h - 1][k - p] * sign(p);
                worst = worst.max((lhs - rhs).norm() / (1.0 + lhs.norm()));
            }
        }
    }
    let structural = da_last_row_only(k);
    Ok(Report::new("closedness_numeric")
        .param("k", k)
        .param("samples", sigma_labels(samples))
        .param("da_last_row_only", structural)
        .within(if structural { worst } else { f64::MAX }, tol))
}

/// With g the primitive of (−1)^k f vanishing at 0, checks
/// ∂_h T(g) = (−1)^{k−h−1} φ_{k−h}(f) at every sample for h ∈ [1, k].
pub fn reconstruct_trace_from_phi(
    f: &EntireFn,
    samples: &[SigmaPoint],
    tol: f64,
    spec: &QuadratureSpec,
) -> Result<Report> {
    let mut worst: f64 = 0.0;
    let mut k_seen = 0;
    for sigma in samples {
        let k = sigma.k();
        k_seen = k;
        let g = f.scale(&gsign(k)).antiderivative();
        let tg = |s: &SigmaPoint| -> Result<Vec<Complex64>> { Ok(vec![trace_t(&g, s)?]) };
        let phi = lisbon_phi(f, sigma, spec)?;
        for h in 1..=k {
            let lhs = sigma_partial(&tg, sigma, &[h], spec)?[0];
            let rhs = phi[k - h] * sign(k - h + 1);
            worst = worst.max((lhs - rhs).norm() / (1.0 + rhs.norm()));
        }
    }
    Ok(Report::new("reconstruct_trace")
        .param("k", k_seen)
        .param("f", f.to_string())
        .param("samples", sigma_labels(samples))
        .within(worst, tol))
}

/// Exact form of [`reconstruct_trace_from_phi`] for polynomial f.
pub fn reconstruct_trace_symbolic(f: &EntireFn, k: usize) -> Result<Report> {
    let g = f.scale(&gsign(k)).antiderivative();
    let tg = trace_poly_symbolic(&g, k, TraceKind::T)?;
    let mut worst: f64 = 0.0;
    for h in 1..=k {
        let lhs = tg.partial(h)?;
        let rhs = trace_poly_symbolic(f, k, TraceKind::VTTilde(k - h))?.scale(&gsign(k - h + 1));
        worst = worst.max((&lhs - &rhs).max_abs_coeff());
    }
    Ok(Report::new("reconstruct_trace_exact")
        .param("k", k)
        .param("f", f.to_string())
        .exact(worst))
}

/// Φ(z^n) with exact entries: Φ_j = DN_{n+j−k+1}.
pub fn symbolic_phi(k: usize, f: &EntireFn) -> Result<Vec<SigmaPoly>> {
    (0..k)
        .map(|j| trace_poly_symbolic(f, k, TraceKind::VTTilde(j)))
        .collect()
}

/// A(σ)·Φ with exact entries.
pub fn companion_times(phi: &[SigmaPoly]) -> Vec<SigmaPoly> {
    companion_symbolic(phi.len()).mul_vec(phi)
}

/// Exact operator identities between the generators:
/// Ttilde(m)·∂_h = ∂_h·T(m), [A(p,q), ∂_h] = 0 and
/// ∂_q T(p+1) − ∂_{p+1} T(q) = A(p,q)·∂_1.
pub fn operator_identities(k: usize) -> Vec<Report> {
    let d = |h: usize| WeylOp::d(k, h).expect("h in range");
    let mut out = Vec::new();
    let mut shift_fail = 0usize;
    let mut a_fail = 0usize;
    for h in 1..=k {
        for m in 2..=k {
            let t = make_generator(k, Generator::T(m)).expect("range");
            let tt = make_generator(k, Generator::TTilde(m)).expect("range");
            if tt.compose(&d(h)).expect("arity") != d(h).compose(&t).expect("arity") {
                shift_fail += 1;
            }
        }
        for g in a_generators(k) {
            let a = make_generator(k, g).expect("range");
            if !a.commutator(&d(h)).expect("arity").is_zero() {
                a_fail += 1;
            }
        }
    }
    out.push(
        Report::new("ttilde_shift")
            .param("k", k)
            .param("failures", shift_fail)
            .exact(shift_fail as f64),
    );
    out.push(
        Report::new("a_commutes_with_partials")
            .param("k", k)
            .param("failures", a_fail)
            .exact(a_fail as f64),
    );
    let mut bis_fail = 0usize;
    for g in a_generators(k) {
        let Generator::A(p, q) = g else { unreachable!() };
        let t = |m: usize| make_generator(k, Generator::T(m)).expect("range");
        let lhs = d(q)
            .compose(&t(p + 1))
            .expect("arity")
            .sub(&d(p + 1).compose(&t(q)).expect("arity"))
            .expect("arity");
        let rhs = make_generator(k, g).expect("range").compose(&d(1)).expect("arity");
        if lhs != rhs {
            bis_fail += 1;
        }
    }
    out.push(
        Report::new("restricted_system_identity")
            .param("k", k)
            .param("failures", bis_fail)
            .exact(bis_fail as f64),
    );
    out
}

/// For each generator G and V ∈ {U_0, U_{−1}}: [V, G] is a constant-
/// coefficient combination of the generators, so G·V = V·G − [V, G] lies in
/// the left ideal they generate.
pub fn ideal_stability(sys: &OperatorSystem) -> Report {
    let k = sys.k;
    let ops: Vec<WeylOp> = sys.generators.iter().map(|(_, op)| op.clone()).collect();
    let mut failures = Vec::new();
    for v in [Generator::U0, Generator::UMinus1] {
        let vop = make_generator(k, v).expect("vector field");
        for (label, g) in &sys.generators {
            let c = vop.commutator(g).expect("arity");
            let ok = match express(&c, &ops) {
                Some(x) => {
                    // rebuild G·V from the expansion and compare
                    let mut combo = WeylOp::zero(k);
                    for (coef, op) in x.iter().zip(&ops) {
                        combo = combo
                            .add(&op.scale(&GaussianRational::from(coef.clone())))
                            .expect("arity");
                    }
                    let gv = g.compose(&vop).expect("arity");
                    let rebuilt = vop.compose(g).expect("arity").sub(&combo).expect("arity");
                    gv == rebuilt
                }
                None => false,
            };
            if !ok {
                failures.push(format!("{label}*{v}"));
            }
        }
    }
    Report::new("ideal_stability")
        .param("system", sys.kind.to_string())
        .param("k", k)
        .param("failures", &failures)
        .exact(failures.len() as f64)
}

/// U_{−1}[DN_m] = (m+k−1)·DN_{m−1} for m ∈ [1, max_m].
pub fn derive_lemma(k: usize, max_m: usize) -> Result<Report> {
    let um = make_generator(k, Generator::UMinus1)?;
    let mut worst: f64 = 0.0;
    for m in 1..=max_m as i64 {
        let lhs = um.apply(&derived_newton_symbolic(k, m)?)?;
        let rhs = derived_newton_symbolic(k, m - 1)?.scale(&GaussianRational::from_integer(m + k as i64 - 1));
        worst = worst.max((&lhs - &rhs).max_abs_coeff());
    }
    Ok(Report::new("derive_lemma")
        .param("k", k)
        .param("max_m", max_m)
        .exact(worst))
}

/// DN_m = 0 on [−k+1, −1], ∂_1N_m = m·DN_{m−1}, and DN_m is monic of
/// degree m in σ_1, for m ≤ max_m.
pub fn derived_newton_calculus(k: usize, max_m: usize) -> Result<Report> {
    let mut failures = Vec::new();
    for m in -(k as i64) + 1..=-1 {
        if !derived_newton_symbolic(k, m)?.is_zero() {
            failures.push(format!("vanishing m={m}"));
        }
    }
    for m in 0..=max_m {
        let dn = derived_newton_symbolic(k, m as i64)?;
        let lead = dn.coefficient_of(1, m as u32);
        if dn.degree_in(1) != Some(m as u32) || lead != SigmaPoly::one(k) {
            failures.push(format!("monic m={m}"));
        }
        if m >= 1 {
            let lhs = newton_symbolic(k, m).partial(1)?;
            let rhs = derived_newton_symbolic(k, m as i64 - 1)?.scale(&GaussianRational::from_integer(m as i64));
            if lhs != rhs {
                failures.push(format!("d1 N m={m}"));
            }
        }
    }
    Ok(Report::new("derived_newton_calculus")
        .param("k", k)
        .param("max_m", max_m)
        .param("failures", &failures)
        .exact(failures.len() as f64))
}

/// ∂_1T(f) = T̃(z^{k−1}·f′) exactly, for f = z^n with n ≤ max_n.
pub fn first_partial_lemma(k: usize, max_n: usize) -> Result<Report> {
    let mut worst: f64 = 0.0;
    for n in 0..=max_n {
        let f = EntireFn::monomial(n);
        let lhs = trace_poly_symbolic(&f, k, TraceKind::T)?.partial(1)?;
        let g = f.derivative().mul_z_pow(k - 1);
        let rhs = trace_poly_symbolic(&g, k, TraceKind::TTilde)?;
        worst = worst.max((&lhs - &rhs).max_abs_coeff());
    }
    Ok(Report::new("first_partial_lemma")
        .param("k", k)
        .param("max_n", max_n)
        .exact(worst))
}

/// Which σ-functional of f a numeric check runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FunctionalKind {
    /// the trace function F(f)
    F,
    /// the trace form F̃(f)
    FTilde,
    /// the vector (Φ_0, …, Φ_{k−1})
    Phi,
}

/// The contour-integral functional of f as a closure over σ.
pub fn lisbon_functional<'a>(kind: FunctionalKind, f: &'a EntireFn, spec: &'a QuadratureSpec) -> Box<Functional<'a>> {
    match kind {
        FunctionalKind::F => Box::new(move |s: &SigmaPoint| Ok(vec![lisbon_f(f, s, spec)?])),
        FunctionalKind::FTilde => Box::new(move |s: &SigmaPoint| Ok(vec![lisbon_ftilde(f, s, spec)?])),
        FunctionalKind::Phi => Box::new(move |s: &SigmaPoint| lisbon_phi(f, s, spec)),
    }
}
