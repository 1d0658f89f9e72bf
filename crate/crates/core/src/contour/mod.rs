//! Circle quadrature, the three kinds of Lisbon integrals over |ζ| = R,
//! the logarithmic form of the first kind and Cauchy-integral derivatives
//! with respect to σ.

mod entire;

use std::f64::consts::PI;

use num::complex::Complex64;
use num::traits::Zero;

pub use entire::EntireFn;

use crate::error::{Error, Result};
use crate::polyroots::{p_eval, p_over_leading, radius_bound, SigmaPoint};

/// Agreement below this many ulps of the summand magnitude counts as
/// converged even when it is above the requested tolerance.
const ROUNDOFF_ULPS: f64 = 256.0;

/// Trapezoidal-rule settings. Node counts are powers of two.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureSpec {
    pub tol: f64,
    pub m_start: usize,
    pub m_cap: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            tol: 1e-12,
            m_start: 64,
            m_cap: 1 << 20,
        }
    }
}

impl QuadratureSpec {
    pub fn new(tol: f64, m_start: usize, m_cap: usize) -> Result<Self> {
        let spec = QuadratureSpec { tol, m_start, m_cap };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_tol(tol: f64) -> Result<Self> {
        QuadratureSpec::new(tol, 64, 1 << 20)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidQuadrature(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if !self.m_start.is_power_of_two() || !self.m_cap.is_power_of_two() {
            return Err(Error::InvalidQuadrature("node counts must be powers of two".into()));
        }
        if self.m_start > self.m_cap {
            return Err(Error::InvalidQuadrature(format!(
                "m_start {} exceeds m_cap {}",
                self.m_start, self.m_cap
            )));
        }
        Ok(())
    }
}

/// Converged quadrature values and the node count that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadrature {
    pub values: Vec<Complex64>,
    pub nodes: usize,
}

/// (1/2iπ)∮ g(ζ) dζ over |ζ − center| = radius for a vector-valued g.
///
/// With ζ_j = center + radius·e^{2πij/M} this is (1/M) Σ g(ζ_j)(ζ_j − center).
/// M starts at `m_start` and doubles, reusing earlier nodes, until two
/// successive estimates differ by less than tol·(1 + |estimate|) in every
/// component, or by less than the rounding level of the summands.
pub fn circle_integral_vec<G>(
    center: Complex64,
    radius: f64,
    dim: usize,
    mut g: G,
    spec: &QuadratureSpec,
) -> Result<Quadrature>
where
    G: FnMut(Complex64) -> Result<Vec<Complex64>>,
{
    spec.validate()?;
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::NonFinite("contour radius"));
    }
    let mut sums = vec![Complex64::zero(); dim];
    let mut mags = vec![0.0f64; dim];
    let mut add_nodes =
        |m: usize, stride: usize, offset: usize, sums: &mut [Complex64], mags: &mut [f64]| -> Result<()> {
            for j in (offset..m).step_by(stride) {
                let theta = 2.0 * PI * j as f64 / m as f64;
                let u = Complex64::from_polar(radius, theta);
                let v = g(center + u)?;
                for ((s, a), x) in sums.iter_mut().zip(mags.iter_mut()).zip(&v) {
                    let t = x * u;
                    if !t.re.is_finite() || !t.im.is_finite() {
                        return Err(Error::NonFinite("integrand"));
                    }
                    *s += t;
                    *a += t.norm();
                }
            }
            Ok(())
        };
    let mut m = spec.m_start;
    add_nodes(m, 1, 0, &mut sums, &mut mags)?;
    let mut prev: Vec<Complex64> = sums.iter().map(|s| s / m as f64).collect();
    while m < spec.m_cap {
        let m2 = 2 * m;
        add_nodes(m2, 2, 1, &mut sums, &mut mags)?;
        m = m2;
        let cur: Vec<Complex64> = sums.iter().map(|s| s / m as f64).collect();
        let converged = cur.iter().zip(&prev).zip(&mags).all(|((c, p), a)| {
            let floor = ROUNDOFF_ULPS * f64::EPSILON * a / m as f64;
            (c - p).norm() < (spec.tol * (1.0 + c.norm())).max(floor)
        });
        if converged {
            return Ok(Quadrature { values: cur, nodes: m });
        }
        prev = cur;
    }
    Err(Error::QuadratureNoConvergence { nodes: m })
}

/// Scalar (1/2iπ)∮_{|ζ|=R} g(ζ) dζ.
pub fn circle_integral<G>(g: G, radius: f64, spec: &QuadratureSpec) -> Result<Complex64>
where
    G: Fn(Complex64) -> Complex64,
{
    circle_integral_vec(Complex64::zero(), radius, 1, |z| Ok(vec![g(z)]), spec).map(|q| q.values[0])
}

/// All three Lisbon integrals of f at σ from one quadrature.
#[derive(Clone, Debug, PartialEq)]
pub struct LisbonValues {
    /// (1/2iπ)∮ f·P′/P
    pub f: Complex64,
    /// (1/2iπ)∮ f/P
    pub ftilde: Complex64,
    /// (1/2iπ)∮ f·ζ^h/P for h ∈ [0, k−1]
    pub phi: Vec<Complex64>,
    pub nodes: usize,
}

pub fn lisbon_all(f: &EntireFn, sigma: &SigmaPoint, spec: &QuadratureSpec) -> Result<LisbonValues> {
    let k = sigma.k();
    let q = circle_integral_vec(
        Complex64::zero(),
        radius_bound(sigma),
        k + 1,
        |z| {
            let base = f.eval(z) / p_eval(sigma, z, 0);
            let mut out = Vec::with_capacity(k + 1);
            out.push(base * p_eval(sigma, z, 1));
            let mut zh = base;
            for _ in 0..k {
                out.push(zh);
                zh *= z;
            }
            Ok(out)
        },
        spec,
    )?;
    Ok(LisbonValues {
        f: q.values[0],
        ftilde: q.values[1],
        phi: q.values[1..].to_vec(),
        nodes: q.nodes,
    })
}

/// First kind: (1/2iπ)∮ f(ζ)·P′_σ(ζ)/P_σ(ζ) dζ.
pub fn lisbon_f(f: &EntireFn, sigma: &SigmaPoint, spec: &QuadratureSpec) -> Result<Complex64> {
    circle_integral(
        |z| f.eval(z) * p_eval(sigma, z, 1) / p_eval(sigma, z, 0),
        radius_bound(sigma),
        spec,
    )
}

/// Second kind: (1/2iπ)∮ f(ζ)/P_σ(ζ) dζ.
pub fn lisbon_ftilde(f: &EntireFn, sigma: &SigmaPoint, spec: &QuadratureSpec) -> Result<Complex64> {
    circle_integral(|z| f.eval(z) / p_eval(sigma, z, 0), radius_bound(sigma), spec)
}

/// Vector kind: φ_h = (1/2iπ)∮ f(ζ)·ζ^h/P_σ(ζ) dζ, h ∈ [0, k−1].
pub fn lisbon_phi(f: &EntireFn, sigma: &SigmaPoint, spec: &QuadratureSpec) -> Result<Vec<Complex64>> {
    let k = sigma.k();
    circle_integral_vec(
        Complex64::zero(),
        radius_bound(sigma),
        k,
        |z| {
            let mut zh = f.eval(z) / p_eval(sigma, z, 0);
            let mut out = Vec::with_capacity(k);
            for _ in 0..k {
                out.push(zh);
                zh *= z;
            }
            Ok(out)
        },
        spec,
    )
    .map(|q| q.values)
}

/// −(1/2iπ)∮ f′(ζ)·Log(P_σ(ζ)/ζ^k) dζ + k·f(0), principal branch. On the
/// contour |P_σ(ζ)/ζ^k − 1| ≤ 1/2, so the branch is unambiguous.
pub fn lisbon_f_log(f: &EntireFn, sigma: &SigmaPoint, spec: &QuadratureSpec) -> Result<Complex64> {
    let df = f.derivative();
    let integral = circle_integral(
        |z| df.eval(z) * p_over_leading(sigma, z).ln(),
        radius_bound(sigma),
        spec,
    )?;
    Ok(-integral + f.eval(Complex64::zero()) * sigma.k() as f64)
}

/// ∂_h of the first kind through its logarithmic form:
/// −(1/2iπ)∮ f′(ζ)·(−1)^h ζ^{k−h}/P_σ(ζ) dζ.
pub fn lisbon_f_partial(f: &EntireFn, sigma: &SigmaPoint, h: usize, spec: &QuadratureSpec) -> Result<Complex64> {
    let k = sigma.k();
    if h == 0 || h > k {
        return Err(Error::range(h, 1, k));
    }
    let df = f.derivative();
    let sign = if h.is_multiple_of(2) { -1.0 } else { 1.0 };
    circle_integral(
        |z| df.eval(z) * z.powu((k - h) as u32) / p_eval(sigma, z, 0) * sign,
        radius_bound(sigma),
        spec,
    )
}

/// A σ-dependent vector quantity.
pub type Functional<'a> = dyn Fn(&SigmaPoint) -> Result<Vec<Complex64>> + 'a;

/// Starting node count on the small circles used for σ-derivatives; the
/// integrands there are smooth, so the doubling stops early.
pub const DERIVATIVE_NODES: usize = 16;

/// ∂_{h_1}⋯∂_{h_n} F at σ by nested Cauchy integrals
/// (1/2iπ)∮_{|t−σ_h|=r} F(σ with slot h set to t)/(t−σ_h)² dt,
/// r = 0.1·(1 + |σ_h|). `indices` holds one entry for a first derivative,
/// two for a second. Each circle starts from at most [`DERIVATIVE_NODES`]
/// nodes and otherwise follows `spec`.
pub fn sigma_partial(
    func: &Functional<'_>,
    sigma: &SigmaPoint,
    indices: &[usize],
    spec: &QuadratureSpec,
) -> Result<Vec<Complex64>> {
    let k = sigma.k();
    if let Some(&h) = indices.iter().find(|&&h| h == 0 || h > k) {
        return Err(Error::range(h, 1, k));
    }
    if indices.is_empty() {
        return func(sigma);
    }
    let dim = func(sigma)?.len();
    let inner = QuadratureSpec {
        m_start: spec.m_start.min(DERIVATIVE_NODES),
        ..*spec
    };
    nested_partial(func, sigma, indices, dim, &inner)
}

fn nested_partial(
    func: &Functional<'_>,
    sigma: &SigmaPoint,
    indices: &[usize],
    dim: usize,
    spec: &QuadratureSpec,
) -> Result<Vec<Complex64>> {
    let Some((&h, rest)) = indices.split_first() else {
        return func(sigma);
    };
    let center = sigma.sigma(h);
    let r = 0.1 * (1.0 + center.norm());
    let q = circle_integral_vec(
        center,
        r,
        dim,
        |t| {
            let shifted = sigma.with_slot(h, t);
            let v = nested_partial(func, &shifted, rest, dim, spec)?;
            let d = (t - center) * (t - center);
            Ok(v.into_iter().map(|x| x / d).collect())
        },
        spec,
    )?;
    Ok(q.values)
}

/// Scalar form of [`sigma_partial`].
pub fn sigma_partial_scalar<F>(
    func: F,
    sigma: &SigmaPoint,
    indices: &[usize],
    spec: &QuadratureSpec,
) -> Result<Complex64>
where
    F: Fn(&SigmaPoint) -> Result<Complex64>,
{
    let wrapped = move |s: &SigmaPoint| func(s).map(|x| vec![x]);
    sigma_partial(&wrapped, sigma, indices, spec).map(|v| v[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::GaussianRational;

    fn pt(v: &[f64]) -> SigmaPoint {
        SigmaPoint::from_real(v).unwrap()
    }

    fn spec() -> QuadratureSpec {
        QuadratureSpec::default()
    }

    fn close(a: Complex64, b: f64, tol: f64) -> bool {
        (a - Complex64::new(b, 0.0)).norm() <= tol * (1.0 + b.abs())
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(1e-10, 64, 1 << 20).is_ok());
        assert!(QuadratureSpec::new(0.0, 64, 128).is_err());
        assert!(QuadratureSpec::new(1e-10, 48, 128).is_err());
        assert!(QuadratureSpec::new(1e-10, 256, 128).is_err());
    }

    #[test]
    fn circle_basics() {
        for r in [0.5, 1.0, 8.0] {
            assert!(close(circle_integral(|z| z.inv(), r, &spec()).unwrap(), 1.0, 1e-14));
            for n in 0..5 {
                let v = circle_integral(|z| z.powu(n), r, &spec()).unwrap();
                assert!(v.norm() < 1e-13 * r.powi(n as i32 + 1));
            }
        }
        let s = pt(&[3.0, 2.0]);
        let v = circle_integral(|z| p_eval(&s, z, 0).inv(), 8.0, &spec()).unwrap();
        assert!(v.norm() < 1e-14);
    }

    #[test]
    fn no_convergence_is_reported() {
        let tight = QuadratureSpec::new(1e-300, 64, 128).unwrap();
        // a pole just inside the contour slows convergence to a crawl
        let r = circle_integral(|z| (z - 0.999).inv(), 1.0, &tight);
        assert!(matches!(r, Err(Error::QuadratureNoConvergence { nodes: 128 })));
    }

    #[test]
    fn lisbon_examples() {
        let s = pt(&[3.0, 2.0]);
        let e = std::f64::consts::E;
        let one = EntireFn::monomial(0);
        let z = EntireFn::monomial(1);
        let exp = EntireFn::exp(GaussianRational::from_integer(1));
        assert!(close(lisbon_f(&one, &s, &spec()).unwrap(), 2.0, 1e-12));
        assert!(close(lisbon_f(&z, &s, &spec()).unwrap(), 3.0, 1e-12));
        assert!(close(lisbon_f(&exp, &s, &spec()).unwrap(), e + e * e, 1e-12));
        assert!(close(
            lisbon_ftilde(&EntireFn::monomial(2), &s, &spec()).unwrap(),
            3.0,
            1e-12
        ));
        assert!(close(lisbon_ftilde(&z, &s, &spec()).unwrap(), 1.0, 1e-12));
        assert!(close(lisbon_ftilde(&one, &s, &spec()).unwrap(), 0.0, 1e-12));
        let phi = lisbon_phi(&one, &pt(&[1.0, -2.0, 0.5]), &spec()).unwrap();
        assert!(close(phi[0], 0.0, 1e-12) && close(phi[1], 0.0, 1e-12) && close(phi[2], 1.0, 1e-12));
        let phi = lisbon_phi(&exp, &s, &spec()).unwrap();
        assert!(close(phi[0], -e + e * e, 1e-12));
        assert!(close(phi[1], -e + 2.0 * e * e, 1e-12));
        let all = lisbon_all(&exp, &s, &spec()).unwrap();
        assert!(close(all.f, e + e * e, 1e-12));
        assert_eq!(all.phi.len(), 2);
    }

    #[test]
    fn log_form_matches() {
        let s = pt(&[3.0, 2.0]);
        assert!(close(
            lisbon_f_log(&EntireFn::monomial(0), &s, &spec()).unwrap(),
            2.0,
            1e-14
        ));
        assert!(close(
            lisbon_f_log(&EntireFn::monomial(1), &s, &spec()).unwrap(),
            3.0,
            1e-12
        ));
    }

    #[test]
    fn sigma_derivatives() {
        let s = pt(&[3.0, 2.0]);
        let sq = |p: &SigmaPoint| Ok(p.sigma(1) * p.sigma(1));
        assert!(close(sigma_partial_scalar(sq, &s, &[1], &spec()).unwrap(), 6.0, 1e-12));
        let mixed = |p: &SigmaPoint| Ok(p.sigma(1).powu(2) * p.sigma(2).powu(3));
        // ∂_1∂_2 σ1²σ2³ = 2σ1·3σ2² = 72 at (3,2)
        assert!(close(
            sigma_partial_scalar(mixed, &s, &[1, 2], &spec()).unwrap(),
            72.0,
            1e-10
        ));
    }
}
