//! Sums over the roots of P_σ, their exact polynomial forms in σ, and
//! Lagrange interpolation at the roots.

use std::fmt;

use num::complex::Complex64;
use num::traits::Zero;

use crate::contour::{circle_integral, circle_integral_vec, EntireFn, QuadratureSpec};
use crate::error::{Error, Result};
use crate::exactpoly::{GaussianRational, SigmaPoly};
use crate::polyroots::{p_eval, radius_bound, roots, simple_roots, SigmaPoint};

/// Residual bound handed to the root finder by the trace functions.
pub const ROOT_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceKind {
    /// Σ f(z_j)
    T,
    /// Σ f(z_j)/P′(z_j)
    TTilde,
    /// Σ z_j^h f(z_j)/P′(z_j), one component h
    VTTilde(usize),
}

impl fmt::Display for TraceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceKind::T => f.write_str("T"),
            TraceKind::TTilde => f.write_str("Ttilde"),
            TraceKind::VTTilde(h) => write!(f, "VTtilde[{h}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceValue {
    pub value: Complex64,
    pub sigma: SigmaPoint,
    pub kind: TraceKind,
}

pub fn trace(kind: TraceKind, f: &EntireFn, sigma: &SigmaPoint) -> Result<TraceValue> {
    let value = match kind {
        TraceKind::T => trace_t(f, sigma)?,
        TraceKind::TTilde => trace_form(f, sigma)?,
        TraceKind::VTTilde(h) => {
            if h >= sigma.k() {
                return Err(Error::range(h, 0, sigma.k() - 1));
            }
            trace_form(&f.mul_z_pow(h), sigma)?
        }
    };
    Ok(TraceValue {
        value,
        sigma: sigma.clone(),
        kind,
    })
}

/// T(f)(σ) = Σ_j f(z_j), roots counted with multiplicity.
pub fn trace_t(f: &EntireFn, sigma: &SigmaPoint) -> Result<Complex64> {
    Ok(roots(sigma, ROOT_TOL)?.into_iter().map(|z| f.eval(z)).sum())
}

/// T̃(f)(σ) = Σ_j f(z_j)/P′_σ(z_j); requires simple roots.
pub fn trace_form(f: &EntireFn, sigma: &SigmaPoint) -> Result<Complex64> {
    Ok(simple_roots(sigma, ROOT_TOL)?
        .into_iter()
        .map(|z| f.eval(z) / p_eval(sigma, z, 1))
        .sum())
}

/// VT̃(f)_h = T̃(z^h·f) for h ∈ [0, k−1].
pub fn vector_trace(f: &EntireFn, sigma: &SigmaPoint) -> Result<Vec<Complex64>> {
    let zs = simple_roots(sigma, ROOT_TOL)?;
    let mut out = vec![Complex64::zero(); sigma.k()];
    for z in zs {
        let mut term = f.eval(z) / p_eval(sigma, z, 1);
        for slot in out.iter_mut() {
            *slot += term;
            term *= z;
        }
    }
    Ok(out)
}

fn sigma_signed(k: usize, h: usize) -> SigmaPoly {
    // (−1)^{h−1} σ_h
    let s = SigmaPoly::var(k, h).expect("h in range");
    if h % 2 == 1 {
        s
    } else {
        -&s
    }
}

/// N_0, …, N_{max_m}: power sums Σ z_j^m by Newton's identities.
pub fn newton_table(k: usize, max_m: usize) -> Vec<SigmaPoly> {
    let mut n: Vec<SigmaPoly> = Vec::with_capacity(max_m + 1);
    n.push(SigmaPoly::integer(k, k as i64));
    for m in 1..=max_m {
        let mut acc = SigmaPoly::zero(k);
        for h in 1..=m.min(k) {
            let e = sigma_signed(k, h);
            if h == m {
                acc = &acc + &e.scale(&GaussianRational::from_integer(m as i64));
            } else {
                acc = &acc + &(&e * &n[m - h]);
            }
        }
        n.push(acc);
    }
    n
}

/// The power sum N_m as a polynomial in σ.
pub fn newton_symbolic(k: usize, m: usize) -> SigmaPoly {
    newton_table(k, m).pop().expect("nonempty")
}

/// c_0, …, c_{max_m} with c_0 = 1 and c_j = Σ_{h=1}^{min(j,k)} (−1)^{h−1} σ_h c_{j−h}:
/// the coefficients of ζ^{k−1}/P_σ(ζ) = Σ c_j ζ^{−j−1}, so that
/// DN_m = c_m.
pub fn derived_newton_table(k: usize, max_m: usize) -> Vec<SigmaPoly> {
    let mut c: Vec<SigmaPoly> = Vec::with_capacity(max_m + 1);
    c.push(SigmaPoly::one(k));
    for j in 1..=max_m {
        let mut acc = SigmaPoly::zero(k);
        for h in 1..=j.min(k) {
            acc = &acc + &(&sigma_signed(k, h) * &c[j - h]);
        }
        c.push(acc);
    }
    c
}

/// DN_m = T̃(z^{m+k−1}) for m ≥ −k+1; zero for m ∈ [−k+1, −1].
pub fn derived_newton_symbolic(k: usize, m: i64) -> Result<SigmaPoly> {
    let lo = 1 - k as i64;
    if m < lo {
        return Err(Error::IndexOutOfRange {
            index: m,
            lo,
            hi: i64::MAX,
        });
    }
    if m < 0 {
        return Ok(SigmaPoly::zero(k));
    }
    Ok(derived_newton_table(k, m as usize).pop().expect("nonempty"))
}

fn polynomial_coeffs(f: &EntireFn) -> Result<Vec<GaussianRational>> {
    f.as_polynomial().ok_or_else(|| Error::NotPolynomial(f.to_string()))
}

/// The exact trace of a polynomial f: Σ λ_j N_j for T, Σ λ_j DN_{j−k+1}
/// for T̃, where f = Σ λ_j z^j.
pub fn trace_poly_symbolic(f: &EntireFn, k: usize, kind: TraceKind) -> Result<SigmaPoly> {
    let mut coeffs = polynomial_coeffs(f)?;
    let forms = match kind {
        TraceKind::T => false,
        TraceKind::TTilde => true,
        TraceKind::VTTilde(h) => {
            if h >= k {
                return Err(Error::range(h, 0, k - 1));
            }
            coeffs.splice(0..0, std::iter::repeat_n(GaussianRational::zero(), h));
            true
        }
    };
    let top = coeffs.len().saturating_sub(1);
    let mut acc = SigmaPoly::zero(k);
    if forms {
        // z^j ↦ DN_{j−k+1}, which vanishes for j < k−1
        let table = derived_newton_table(k, (top + 1).saturating_sub(k));
        for (j, lambda) in coeffs.iter().enumerate().skip(k - 1) {
            acc = &acc + &table[j + 1 - k].scale(lambda);
        }
    } else {
        let table = newton_table(k, top);
        for (j, lambda) in coeffs.iter().enumerate() {
            acc = &acc + &table[j].scale(lambda);
        }
    }
    Ok(acc)
}

/// Π_f(σ)[z] = Σ_{h<k} coeffs[h]·z^h.
#[derive(Clone, Debug, PartialEq)]
pub struct InterpolationPolynomial {
    pub coeffs: Vec<Complex64>,
}

impl InterpolationPolynomial {
    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::zero(), |acc, c| acc * z + c)
    }
}

/// γ_h(ζ) = Σ_{p=0}^{k−h−1} (−1)^p σ_p ζ^{k−p−h−1}, so that
/// (P(ζ) − P(z))/(ζ − z) = Σ_h z^h γ_h(ζ).
fn gamma_h(sigma: &SigmaPoint, h: usize, zeta: Complex64) -> Complex64 {
    let k = sigma.k();
    (0..k - h).fold(Complex64::zero(), |acc, p| {
        let s = sigma.sigma(p);
        acc * zeta + if p % 2 == 0 { s } else { -s }
    })
}

/// The Lagrange interpolation polynomial of f at the roots of P_σ, i.e.
/// the remainder of f modulo P_σ, one contour integral per coefficient:
/// Π_h = (1/2iπ)∮ f(ζ) γ_h(ζ)/P_σ(ζ) dζ.
pub fn lagrange_interp(f: &EntireFn, sigma: &SigmaPoint, spec: &QuadratureSpec) -> Result<InterpolationPolynomial> {
    let k = sigma.k();
    let q = circle_integral_vec(
        Complex64::zero(),
        radius_bound(sigma),
        k,
        |zeta| {
            let base = f.eval(zeta) / p_eval(sigma, zeta, 0);
            Ok((0..k).map(|h| base * gamma_h(sigma, h, zeta)).collect())
        },
        spec,
    )?;
    Ok(InterpolationPolynomial { coeffs: q.values })
}

/// The quotient Q_f(σ, z) = (1/2iπ)∮ f(ζ)/((ζ − z)P_σ(ζ)) dζ, so that
/// f(z) = Π_f(σ)[z] + P_σ(z)·Q_f(σ, z).
pub fn quotient_eval(f: &EntireFn, sigma: &SigmaPoint, z: Complex64, spec: &QuadratureSpec) -> Result<Complex64> {
    let r = radius_bound(sigma);
    if z.norm() >= r {
        return Err(Error::OutsideContour {
            modulus: z.norm(),
            radius: r,
        });
    }
    circle_integral(|zeta| f.eval(zeta) / ((zeta - z) * p_eval(sigma, zeta, 0)), r, spec)
}

/// Π_h = Σ_{p=0}^{k−h−1} (−1)^p σ_p Φ_{k−p−h−1}.
pub fn phi_to_pi(sigma: &SigmaPoint, phi: &[Complex64]) -> InterpolationPolynomial {
    let k = sigma.k();
    assert_eq!(phi.len(), k, "Φ must have k components");
    let coeffs = (0..k)
        .map(|h| {
            (0..k - h).fold(Complex64::zero(), |acc, p| {
                let s = sigma.sigma(p);
                let s = if p % 2 == 0 { s } else { -s };
                acc + s * phi[k - p - h - 1]
            })
        })
        .collect();
    InterpolationPolynomial { coeffs }
}

/// Inverse of [`phi_to_pi`] by forward substitution on the unit-triangular
/// system: Φ_j = Π_{k−1−j} − Σ_{p=1}^{j} (−1)^p σ_p Φ_{j−p}.
pub fn pi_to_phi(sigma: &SigmaPoint, pi: &InterpolationPolynomial) -> Vec<Complex64> {
    let k = sigma.k();
    assert_eq!(pi.k(), k, "Π must have k coefficients");
    let mut phi: Vec<Complex64> = Vec::with_capacity(k);
    for j in 0..k {
        let mut v = pi.coeffs[k - 1 - j];
        for p in 1..=j {
            let s = sigma.sigma(p);
            let s = if p % 2 == 0 { s } else { -s };
            v -= s * phi[j - p];
        }
        phi.push(v);
    }
    phi
}

/// [`phi_to_pi`] over exact polynomial entries.
pub fn phi_to_pi_symbolic(k: usize, phi: &[SigmaPoly]) -> Vec<SigmaPoly> {
    assert_eq!(phi.len(), k, "Φ must have k components");
    (0..k)
        .map(|h| {
            (0..k - h).fold(SigmaPoly::zero(k), |acc, p| {
                let term = if p == 0 {
                    phi[k - h - 1].clone()
                } else {
                    let s = SigmaPoly::var(k, p).expect("p in range");
                    let prod = &s * &phi[k - p - h - 1];
                    if p % 2 == 0 {
                        prod
                    } else {
                        -&prod
                    }
                };
                &acc + &term
            })
        })
        .collect()
}

/// [`pi_to_phi`] over exact polynomial entries.
pub fn pi_to_phi_symbolic(k: usize, pi: &[SigmaPoly]) -> Vec<SigmaPoly> {
    assert_eq!(pi.len(), k, "Π must have k coefficients");
    let mut phi: Vec<SigmaPoly> = Vec::with_capacity(k);
    for j in 0..k {
        let mut v = pi[k - 1 - j].clone();
        for p in 1..=j {
            let prod = &SigmaPoly::var(k, p).expect("p in range") * &phi[j - p];
            v = if p % 2 == 0 { &v - &prod } else { &v + &prod };
        }
        phi.push(v);
    }
    phi
}
