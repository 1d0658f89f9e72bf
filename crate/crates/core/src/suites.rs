//! Verification batteries shared by the command line and the test suites.
//! Each battery returns reports in a fixed order; randomized ones record
//! their seed.

use num::complex::Complex64;
use num::traits::One;

use crate::contour::{lisbon_all, lisbon_f_log, lisbon_phi, EntireFn, QuadratureSpec};
use crate::error::{Error, Result};
use crate::exactpoly::{GaussianRational, SigmaPoly};
use crate::polyroots::{companion_derivative_identity_check, line_equality_check, p_eval, radius_bound, SigmaPoint};
use crate::report::Report;
use crate::sampling::{random_weyl_ops, sample_disk, sample_sigmas};
use crate::systems::{
    check_s3_exact, check_s3_numeric, check_system_numeric, check_system_symbolic, closedness_numeric,
    closedness_symbolic, companion_times, constant_s3_solutions, derive_lemma, derived_newton_calculus,
    first_partial_lemma, graded_kernel, ideal_stability, lisbon_functional, operator_identities,
    reconstruct_trace_from_phi, reconstruct_trace_symbolic, symbolic_phi, u_minus1_injectivity,
    u_minus1_injectivity_on, v_vector, FunctionalKind, OperatorSystem, SystemKind, SECOND_ORDER_TOL,
};
use crate::traces::{
    derived_newton_symbolic, lagrange_interp, newton_symbolic, phi_to_pi, pi_to_phi, quotient_eval, trace_form,
    trace_t, vector_trace,
};
use crate::weyl::{commutator_report, weight_lemma_report};

pub const EQUIVALENCE_TOL: f64 = 1e-9;
pub const FORMULA_M_TOL: f64 = 1e-8;
pub const BRIDGE_TOL: f64 = 1e-9;
pub const ROUND_TRIP_TOL: f64 = 1e-12;

/// |σ_h| bound for the integral/trace comparisons.
pub const EQUIVALENCE_RADIUS: f64 = 5.0;
/// |σ_h| bound for checks that differentiate numerically in σ.
pub const DERIVATIVE_RADIUS: f64 = 1.0;

pub const MAX_K: usize = 6;
pub const MAX_W: u64 = 10;
pub const MAX_M: usize = 10;

/// z^0, …, z^8 and e^z.
pub fn default_functions() -> Vec<EntireFn> {
    let mut out: Vec<EntireFn> = (0..=8).map(EntireFn::monomial).collect();
    out.push(EntireFn::exp(GaussianRational::one()));
    out
}

pub fn exp_fn() -> EntireFn {
    EntireFn::exp(GaussianRational::one())
}

fn max_dev(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn max_norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Lisbon integrals against root sums: the residual is the largest
/// absolute deviation among F − T, F̃ − T̃ and Φ − VT̃. The largest
/// deviation relative to 1 + |trace| is recorded alongside.
pub fn equivalence(f: &EntireFn, samples: &[SigmaPoint], seed: u64, spec: &QuadratureSpec) -> Result<Report> {
    let mut dev = [0.0f64; 3];
    let mut rel: f64 = 0.0;
    let mut nodes = 0;
    for sigma in samples {
        let l = lisbon_all(f, sigma, spec)?;
        nodes = nodes.max(l.nodes);
        let t = trace_t(f, sigma)?;
        let tf = trace_form(f, sigma)?;
        let vt = vector_trace(f, sigma)?;
        let d = [(l.f - t).norm(), (l.ftilde - tf).norm(), max_dev(&l.phi, &vt)];
        let scale = [t.norm(), tf.norm(), max_norm(&vt)];
        for i in 0..3 {
            dev[i] = dev[i].max(d[i]);
            rel = rel.max(d[i] / (1.0 + scale[i]));
        }
    }
    Ok(Report::new("equivalence")
        .param("k", samples.first().map_or(0, SigmaPoint::k))
        .param("f", f.to_string())
        .param("samples", samples.len())
        .param("seed", seed)
        .param("max_nodes", nodes)
        .param("dev_f", dev[0])
        .param("dev_ftilde", dev[1])
        .param("dev_phi", dev[2])
        .param("relative", rel)
        .within(dev.into_iter().fold(0.0, f64::max), EQUIVALENCE_TOL))
}

/// The logarithmic form against the first kind; absolute residual.
pub fn formula_m(f: &EntireFn, samples: &[SigmaPoint], seed: u64, spec: &QuadratureSpec) -> Result<Report> {
    let mut dev: f64 = 0.0;
    let mut rel: f64 = 0.0;
    for sigma in samples {
        let direct = lisbon_all(f, sigma, spec)?.f;
        let log = lisbon_f_log(f, sigma, spec)?;
        dev = dev.max((direct - log).norm());
        rel = rel.max((direct - log).norm() / (1.0 + direct.norm()));
    }
    Ok(Report::new("formula_m")
        .param("k", samples.first().map_or(0, SigmaPoint::k))
        .param("f", f.to_string())
        .param("samples", samples.len())
        .param("seed", seed)
        .param("relative", rel)
        .within(dev, FORMULA_M_TOL))
}

/// The division identity f = Π_f + P_σ·Q_f at five points of |z| < R/2
/// per sample, Π_f from the integrals Φ against the direct interpolation
/// integrals, and the round trip Φ → Π → Φ.
pub fn lagrange_bridge(f: &EntireFn, samples: &[SigmaPoint], seed: u64, spec: &QuadratureSpec) -> Result<Vec<Report>> {
    let (mut division, mut coeffs, mut round_trip) = (0.0f64, 0.0f64, 0.0f64);
    for (i, sigma) in samples.iter().enumerate() {
        let pi = lagrange_interp(f, sigma, spec)?;
        let points = sample_disk(5, radius_bound(sigma) / 2.0, seed.wrapping_add(i as u64));
        for z in points {
            let q = quotient_eval(f, sigma, z, spec)?;
            division = division.max((f.eval(z) - pi.eval(z) - p_eval(sigma, z, 0) * q).norm());
        }
        let phi = lisbon_phi(f, sigma, spec)?;
        let from_phi = phi_to_pi(sigma, &phi);
        coeffs = coeffs.max(max_dev(&from_phi.coeffs, &pi.coeffs));
        round_trip = round_trip.max(max_dev(&pi_to_phi(sigma, &from_phi), &phi));
    }
    let k = samples.first().map_or(0, SigmaPoint::k);
    let base = |name: &str| {
        Report::new(name)
            .param("k", k)
            .param("f", f.to_string())
            .param("samples", samples.len())
            .param("seed", seed)
    };
    Ok(vec![
        base("division_identity").within(division, BRIDGE_TOL),
        base("interpolation_from_phi").within(coeffs, BRIDGE_TOL),
        base("phi_round_trip").within(round_trip, ROUND_TRIP_TOL),
    ])
}

/// Options shared by the batteries.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub ks: Vec<usize>,
    pub functions: Vec<EntireFn>,
    /// Functions for the interpolation bridge
    pub bridge: Vec<EntireFn>,
    pub samples: usize,
    pub seed: u64,
    pub max_m: usize,
    pub max_w: u64,
    pub spec: QuadratureSpec,
}

impl SuiteOptions {
    pub fn validate(&self) -> Result<()> {
        for &k in &self.ks {
            if !(1..=MAX_K).contains(&k) {
                return Err(Error::range(k, 1, MAX_K));
            }
        }
        if self.max_m > MAX_M {
            return Err(Error::range(self.max_m, 0, MAX_M));
        }
        if self.max_w > MAX_W {
            return Err(Error::range(self.max_w as usize, 0, MAX_W as usize));
        }
        if self.samples == 0 {
            return Err(Error::Parse("--samples must be positive".into()));
        }
        self.spec.validate()
    }

    fn ks_from(&self, lo: usize) -> impl Iterator<Item = usize> + '_ {
        self.ks.iter().copied().filter(move |&k| k >= lo)
    }
}

/// Integrals against traces, the logarithmic form and the interpolation
/// bridge, over seeded samples with |σ_h| ≤ 5.
pub fn equivalence_suite(opts: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for k in opts.ks_from(1) {
        let samples = sample_sigmas(k, opts.samples, EQUIVALENCE_RADIUS, opts.seed);
        for f in &opts.functions {
            out.push(equivalence(f, &samples, opts.seed, &opts.spec)?);
        }
        for f in &opts.functions {
            out.push(formula_m(f, &samples, opts.seed, &opts.spec)?);
        }
        for f in &opts.bridge {
            out.extend(lagrange_bridge(f, &samples, opts.seed, &opts.spec)?);
        }
    }
    Ok(out)
}

/// Every generator of S1 kills N_m and every generator of S2 kills DN_m,
/// for m ≤ max_m. One report per system.
pub fn annihilation(k: usize, max_m: usize) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for kind in [SystemKind::S1, SystemKind::S2] {
        let sys = OperatorSystem::new(kind, k);
        let mut failures = Vec::new();
        for m in 0..=max_m {
            let g = match kind {
                SystemKind::S2 => derived_newton_symbolic(k, m as i64)?,
                _ => newton_symbolic(k, m),
            };
            if !check_system_symbolic(&sys, &g)?.pass {
                failures.push(m);
            }
        }
        out.push(
            Report::new("annihilation")
                .param("system", kind.to_string())
                .param("k", k)
                .param("max_m", max_m)
                .param("failing_m", &failures)
                .exact(failures.len() as f64),
        );
    }
    Ok(out)
}

/// Symbolic annihilation, sampled numeric systems on e^z, the vector
/// system in exact and numeric form, constant vector solutions, operator
/// identities and the closedness/reconstruction pipeline.
pub fn systems_suite(opts: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let exp = exp_fn();
    let spec = &opts.spec;
    for k in opts.ks_from(2) {
        out.extend(annihilation(k, opts.max_m)?);
        let samples = sample_sigmas(k, opts.samples, DERIVATIVE_RADIUS, opts.seed);
        for (kind, func) in [
            (SystemKind::S1, FunctionalKind::F),
            (SystemKind::S2, FunctionalKind::FTilde),
        ] {
            let f = lisbon_functional(func, &exp, spec);
            let sys = OperatorSystem::new(kind, k);
            let mut r = check_system_numeric(&sys, &*f, &samples, SECOND_ORDER_TOL, spec)?;
            r.set("f", exp.to_string());
            r.set("seed", opts.seed);
            out.push(r);
        }
        for n in 0..=6 {
            let phi = symbolic_phi(k, &EntireFn::monomial(n))?;
            out.push(check_s3_exact(&phi)?.param("f", format!("z^{n}")));
            out.push(check_s3_exact(&companion_times(&phi))?.param("f", format!("z^{n}, A*phi")));
        }
        let phi = lisbon_functional(FunctionalKind::Phi, &exp, spec);
        out.push(
            check_s3_numeric(k, &*phi, &samples, SECOND_ORDER_TOL, spec)?
                .param("f", exp.to_string())
                .param("seed", opts.seed),
        );
        let solutions = constant_s3_solutions(k);
        out.push(
            Report::new("constant_s3_solutions")
                .param("k", k)
                .param("dim", solutions.len())
                .verdict(solutions == vec![v_vector(k)]),
        );
        out.extend(operator_identities(k));
        for kind in [SystemKind::S1, SystemKind::S2] {
            out.push(ideal_stability(&OperatorSystem::new(kind, k)));
        }
        out.extend(closedness_pipeline(k, &samples, opts.seed, spec)?);
    }
    Ok(out)
}

/// Closedness of the 1-form built from Φ and the reconstruction of T
/// from Φ, for f ∈ {1, z, z², e^z}.
pub fn closedness_pipeline(k: usize, samples: &[SigmaPoint], seed: u64, spec: &QuadratureSpec) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let fs = [
        EntireFn::monomial(0),
        EntireFn::monomial(1),
        EntireFn::monomial(2),
        exp_fn(),
    ];
    for f in &fs {
        let phi = lisbon_functional(FunctionalKind::Phi, f, spec);
        out.push(
            closedness_numeric(k, &*phi, samples, SECOND_ORDER_TOL, spec)?
                .param("f", f.to_string())
                .param("seed", seed),
        );
        if f.is_polynomial() {
            out.push(closedness_symbolic(&symbolic_phi(k, f)?)?.param("f", f.to_string()));
            out.push(reconstruct_trace_symbolic(f, k)?);
        }
        out.push(reconstruct_trace_from_phi(f, samples, SECOND_ORDER_TOL, spec)?.param("seed", seed));
    }
    Ok(out)
}

/// One report per weight: the pure-weight kernels of S2, S0 and S1 are
/// each one-dimensional and spanned by DN_w, N_w and N_w respectively
/// (constants at w = 0).
pub fn kernel_report(k: usize, w: u64) -> Result<Report> {
    let mut ok = true;
    let mut dims = Vec::new();
    for kind in [SystemKind::S2, SystemKind::S0, SystemKind::S1] {
        let kernel = graded_kernel(&OperatorSystem::new(kind, k), w);
        let expected = match (kind, w) {
            (_, 0) => SigmaPoly::one(k),
            (SystemKind::S2, _) => derived_newton_symbolic(k, w as i64)?,
            _ => newton_symbolic(k, w as usize),
        };
        dims.push((kind.to_string(), kernel.dim()));
        ok &= kernel.basis == vec![expected];
    }
    Ok(Report::new("graded_kernel")
        .param("k", k)
        .param("w", w)
        .param("dims", dims.into_iter().collect::<std::collections::BTreeMap<_, _>>())
        .verdict(ok))
}

pub fn kernels_suite(opts: &SuiteOptions) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for k in opts.ks_from(2) {
        for w in 0..=opts.max_w {
            out.push(kernel_report(k, w)?);
        }
    }
    Ok(out)
}

/// Names accepted by [`lemma_reports`].
pub const LEMMAS: &[&str] = &[
    "weight",
    "commutators",
    "derive",
    "newton-calculus",
    "first-partial",
    "injectivity",
    "injectivity-kernel",
    "constant-s3",
    "companion-derivative",
    "line-equality",
];

/// Number of random operators mixed into the weight check.
pub const RANDOM_OPERATORS: usize = 50;

/// Reports for one named lemma at one k.
pub fn lemma_reports(name: &str, k: usize, opts: &SuiteOptions) -> Result<Vec<Report>> {
    let max_m = opts.max_m;
    Ok(match name {
        "weight" => {
            let extra = random_weyl_ops(k, RANDOM_OPERATORS, opts.seed);
            vec![weight_lemma_report(k, &extra).param("seed", opts.seed)]
        }
        "commutators" => vec![commutator_report(k)],
        "derive" => vec![derive_lemma(k, max_m)?],
        "newton-calculus" => vec![derived_newton_calculus(k, max_m)?],
        "first-partial" => vec![first_partial_lemma(k, max_m)?],
        "injectivity" => (1..=max_m.min(8) as u64).map(|m| u_minus1_injectivity(k, m)).collect(),
        "injectivity-kernel" => (1..=max_m.min(8) as u64)
            .map(|m| Ok(u_minus1_injectivity_on(k, m, &[derived_newton_symbolic(k, m as i64)?])))
            .collect::<Result<_>>()?,
        "constant-s3" => {
            let solutions = constant_s3_solutions(k);
            vec![Report::new("constant_s3_solutions")
                .param("k", k)
                .param("dim", solutions.len())
                .verdict(solutions == vec![v_vector(k)])]
        }
        "companion-derivative" => vec![companion_derivative_identity_check(k)],
        "line-equality" => vec![line_equality_check(k)],
        other => {
            return Err(Error::Parse(format!(
                "unknown lemma `{other}`; expected one of {}",
                LEMMAS.join(", ")
            )))
        }
    })
}

pub fn lemmas_suite(opts: &SuiteOptions, only: Option<&str>) -> Result<Vec<Report>> {
    let names: Vec<&str> = match only {
        Some(name) => vec![name],
        None => LEMMAS.to_vec(),
    };
    let mut out = Vec::new();
    for name in names {
        for k in opts.ks_from(1) {
            if k == 1 && name != "derive" && name != "newton-calculus" {
                continue;
            }
            out.extend(lemma_reports(name, k, opts)?);
        }
    }
    Ok(out)
}
