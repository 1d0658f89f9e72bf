//! The monic polynomial P_σ(z) = Σ (−1)^h σ_h z^{k−h} (σ_0 = 1), its roots,
//! its companion matrix A and the powers of multiplication by z.

use std::fmt;
use std::str::FromStr;

use num::complex::Complex64;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{GaussianRational, SigmaPoly};
use crate::report::Report;

const DK_STOP: f64 = 1e-13;
const DK_MAX_ITER: usize = 500;
const SIMPLE_ROOT_GUARD: f64 = 1e-8;

/// A point σ = (σ_1, …, σ_k) of the space of monic degree-k polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaPoint {
    values: Vec<Complex64>,
}

impl SigmaPoint {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Parse("sigma point needs at least one coordinate".into()));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::NonFinite("sigma point"));
        }
        Ok(SigmaPoint { values })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        SigmaPoint::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero(k: usize) -> Self {
        SigmaPoint {
            values: vec![Complex64::zero(); k],
        }
    }

    pub fn k(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// σ_h for h ∈ [0, k], with σ_0 = 1.
    pub fn sigma(&self, h: usize) -> Complex64 {
        if h == 0 {
            Complex64::one()
        } else {
            self.values[h - 1]
        }
    }

    /// Copy with slot h (1-based) replaced by `t`.
    pub fn with_slot(&self, h: usize, t: Complex64) -> SigmaPoint {
        let mut values = self.values.clone();
        values[h - 1] = t;
        SigmaPoint { values }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.re == 0.0 {
        format!("{}i", z.im)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` with float parts; `i` alone means 1i.
pub fn parse_complex(input: &str) -> Result<Complex64> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("invalid complex literal `{input}`"));
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return match s.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(Complex64::new(x, 0.0)),
            _ => Err(bad()),
        };
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let imag = |t: &str| -> Result<f64> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            t => t.parse::<f64>().map_err(|_| bad()),
        }
    };
    let z = match split {
        Some(i) => Complex64::new(body[..i].parse::<f64>().map_err(|_| bad())?, imag(&body[i..])?),
        None => Complex64::new(0.0, imag(body)?),
    };
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(bad());
    }
    Ok(z)
}

impl fmt::Display for SigmaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|&z| fmt_complex(z)).collect();
        f.write_str(&parts.join(","))
    }
}

/// Comma-separated complex literals, e.g. `3,2` or `1+2i,-0.5i`.
impl FromStr for SigmaPoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let values = s.split(',').map(parse_complex).collect::<Result<Vec<_>>>()?;
        SigmaPoint::new(values)
    }
}

/// P_σ(z) (`order = 0`) or P'_σ(z) (`order = 1`) by Horner's rule.
pub fn p_eval(sigma: &SigmaPoint, z: Complex64, order: u8) -> Complex64 {
    let k = sigma.k();
    let coeff = |h: usize| {
        let s = sigma.sigma(h);
        if h.is_multiple_of(2) {
            s
        } else {
            -s
        }
    };
    match order {
        0 => (0..=k).fold(Complex64::zero(), |acc, h| acc * z + coeff(h)),
        1 => (0..k).fold(Complex64::zero(), |acc, h| acc * z + coeff(h) * (k - h) as f64),
        _ => panic!("p_eval supports order 0 or 1"),
    }
}

/// P_σ(ζ)/ζ^k = 1 + Σ (−1)^h σ_h ζ^{−h}, evaluated without forming ζ^k.
pub fn p_over_leading(sigma: &SigmaPoint, zeta: Complex64) -> Complex64 {
    let w = zeta.inv();
    let k = sigma.k();
    // Horner in w on Σ_{h=0}^k (−1)^h σ_h w^h
    (0..=k).rev().fold(Complex64::zero(), |acc, h| {
        let s = sigma.sigma(h);
        acc * w + if h % 2 == 0 { s } else { -s }
    })
}

/// Smallest R = 2^m (1 + max|σ_h|), m ≥ 1, with Σ |σ_h| R^{−h} ≤ 1/2.
/// Every root then satisfies |z| < R/2 and |P_σ(ζ)/ζ^k − 1| ≤ 1/2 on |ζ| = R.
pub fn radius_bound(sigma: &SigmaPoint) -> f64 {
    let base = 1.0 + sigma.max_abs();
    let mut r = 2.0 * base;
    loop {
        let s: f64 = (1..=sigma.k())
            .map(|h| sigma.sigma(h).norm() * r.powi(-(h as i32)))
            .sum();
        if s <= 0.5 || r > 1e300 {
            return r;
        }
        r *= 2.0;
    }
}

fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// All k roots of P_σ by Durand–Kerner iteration, sorted by real then
/// imaginary part. Each returned root satisfies |P_σ(z)| ≤ tol·max(1,R)^k.
pub fn roots(sigma: &SigmaPoint, tol: f64) -> Result<Vec<Complex64>> {
    let k = sigma.k();
    let r = radius_bound(sigma);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..k).map(|j| seed.powu(j as u32) * r).collect();
    let mut converged = false;
    let mut iterations = 0;
    while iterations < DK_MAX_ITER {
        iterations += 1;
        let mut max_step: f64 = 0.0;
        for i in 0..k {
            let mut denom = Complex64::one();
            for j in 0..k {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates; nudge apart deterministically
                z[i] += Complex64::new(1e-8, 1e-8) * r;
                max_step = f64::INFINITY;
                continue;
            }
            let step = p_eval(sigma, z[i], 0) / denom;
            z[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < DK_STOP * r {
            converged = true;
            break;
        }
    }
    polish(sigma, &mut z);
    let bound = tol * r.max(1.0).powi(k as i32);
    let residual_ok = z.iter().all(|&x| p_eval(sigma, x, 0).norm() <= bound);
    if !residual_ok || z.iter().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
        return Err(Error::NoConvergence { iterations });
    }
    let _ = converged;
    sort_roots(&mut z);
    Ok(z)
}

/// Newton refinement, keeping a step only when it lowers |P|.
fn polish(sigma: &SigmaPoint, z: &mut [Complex64]) {
    for x in z.iter_mut() {
        for _ in 0..3 {
            let p = p_eval(sigma, *x, 0);
            let dp = p_eval(sigma, *x, 1);
            if p.norm() == 0.0 || dp.norm() == 0.0 {
                break;
            }
            let candidate = *x - p / dp;
            if p_eval(sigma, candidate, 0).norm() < p.norm() {
                *x = candidate;
            } else {
                break;
            }
        }
    }
}

pub fn min_separation(roots: &[Complex64]) -> f64 {
    let mut m = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            m = m.min((roots[i] - roots[j]).norm());
        }
    }
    m
}

/// Roots with the simple-root guard used by trace forms.
pub fn simple_roots(sigma: &SigmaPoint, tol: f64) -> Result<Vec<Complex64>> {
    let z = roots(sigma, tol)?;
    let threshold = SIMPLE_ROOT_GUARD * radius_bound(sigma);
    let min_distance = min_separation(&z);
    if min_distance <= threshold {
        return Err(Error::DegenerateRoots {
            min_distance,
            threshold,
        });
    }
    Ok(z)
}

/// Π_{i<j} (z_i − z_j)² over the computed roots.
pub fn discriminant(sigma: &SigmaPoint) -> Result<Complex64> {
    let z = roots(sigma, 1e-8)?;
    let mut d = Complex64::one();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            let diff = z[i] - z[j];
            d *= diff * diff;
        }
    }
    Ok(d)
}

/// Dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    pub rows: Vec<Vec<Complex64>>,
}

impl ComplexMatrix {
    pub fn identity(k: usize) -> Self {
        let mut rows = vec![vec![Complex64::zero(); k]; k];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Complex64::one();
        }
        ComplexMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let n = self.dim();
        let mut rows = vec![vec![Complex64::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                let a = self.rows[i][l];
                if a == Complex64::zero() {
                    continue;
                }
                for j in 0..n {
                    rows[i][j] += a * other.rows[l][j];
                }
            }
        }
        ComplexMatrix { rows }
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn pow(&self, e: usize) -> ComplexMatrix {
        (0..e).fold(ComplexMatrix::identity(self.dim()), |acc, _| acc.mul(self))
    }

    pub fn transpose(&self) -> ComplexMatrix {
        let n = self.dim();
        ComplexMatrix {
            rows: (0..n).map(|i| (0..n).map(|j| self.rows[j][i]).collect()).collect(),
        }
    }
}

/// k×k matrix of polynomials in σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    pub k: usize,
    pub rows: Vec<Vec<SigmaPoly>>,
}

impl SymbolicMatrix {
    pub fn zero(k: usize) -> Self {
        SymbolicMatrix {
            k,
            rows: vec![vec![SigmaPoly::zero(k); k]; k],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = SymbolicMatrix::zero(k);
        for i in 0..k {
            m.rows[i][i] = SigmaPoly::one(k);
        }
        m
    }

    pub fn mul(&self, other: &SymbolicMatrix) -> SymbolicMatrix {
        let k = self.k;
        let mut out = SymbolicMatrix::zero(k);
        for i in 0..k {
            for l in 0..k {
                if self.rows[i][l].is_zero() {
                    continue;
                }
                for j in 0..k {
                    if other.rows[l][j].is_zero() {
                        continue;
                    }
                    let prod = &self.rows[i][l] * &other.rows[l][j];
                    out.rows[i][j] = &out.rows[i][j] + &prod;
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> SymbolicMatrix {
        (0..e).fold(SymbolicMatrix::identity(self.k), |acc, _| acc.mul(self))
    }

    pub fn mul_vec(&self, v: &[SigmaPoly]) -> Vec<SigmaPoly> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(SigmaPoly::zero(self.k), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn transpose(&self) -> SymbolicMatrix {
        let k = self.k;
        SymbolicMatrix {
            k,
            rows: (0..k)
                .map(|i| (0..k).map(|j| self.rows[j][i].clone()).collect())
                .collect(),
        }
    }

    /// Entry-wise ∂/∂σ_h.
    pub fn partial(&self, h: usize) -> Result<SymbolicMatrix> {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|p| p.partial(h)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(SymbolicMatrix { k: self.k, rows })
    }

    pub fn scale(&self, c: &GaussianRational) -> SymbolicMatrix {
        SymbolicMatrix {
            k: self.k,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|p| p.scale(c)).collect())
                .collect(),
        }
    }

    pub fn column(&self, v: usize) -> Vec<SigmaPoly> {
        self.rows.iter().map(|row| row[v].clone()).collect()
    }

    pub fn eval(&self, sigma: &SigmaPoint) -> Result<ComplexMatrix> {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|p| p.eval(sigma)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(ComplexMatrix { rows })
    }
}

fn sign(e: usize) -> GaussianRational {
    GaussianRational::from_integer(if e.is_multiple_of(2) { 1 } else { -1 })
}

/// σ̃_h = (−1)^{h−1} σ_h as a polynomial.
fn sigma_tilde(k: usize, h: usize) -> SigmaPoly {
    SigmaPoly::var(k, h).expect("h in range").scale(&sign(h - 1))
}

/// The companion matrix A evaluated at σ: ones on the superdiagonal, last
/// row (σ̃_k, …, σ̃_1).
pub fn companion(sigma: &SigmaPoint) -> ComplexMatrix {
    let k = sigma.k();
    let mut rows = vec![vec![Complex64::zero(); k]; k];
    for (i, row) in rows.iter_mut().enumerate().take(k - 1) {
        row[i + 1] = Complex64::one();
    }
    for c in 0..k {
        let h = k - c;
        let s = sigma.sigma(h);
        rows[k - 1][c] = if (h - 1).is_multiple_of(2) { s } else { -s };
    }
    ComplexMatrix { rows }
}

/// The companion matrix A with polynomial entries.
pub fn companion_symbolic(k: usize) -> SymbolicMatrix {
    let mut m = SymbolicMatrix::zero(k);
    for i in 0..k.saturating_sub(1) {
        m.rows[i][i + 1] = SigmaPoly::one(k);
    }
    for c in 0..k {
        m.rows[k - 1][c] = sigma_tilde(k, k - c);
    }
    m
}

/// Coordinates (a_{n,0}, …, a_{n,k−1}) of z^n in the basis 1, z, …, z^{k−1}
/// of ℂ[σ, z]/(P_σ).
pub fn power_coordinates(k: usize, n: usize) -> Vec<SigmaPoly> {
    let mut coords = vec![SigmaPoly::zero(k); k];
    if n < k {
        coords[n] = SigmaPoly::one(k);
        return coords;
    }
    coords[k - 1] = SigmaPoly::one(k);
    // z^k ≡ Σ_h σ̃_h z^{k−h}
    let reduction: Vec<SigmaPoly> = (0..k).map(|b| sigma_tilde(k, k - b)).collect();
    for _ in k - 1..n {
        let top = coords[k - 1].clone();
        for b in (1..k).rev() {
            coords[b] = &coords[b - 1] + &(&top * &reduction[b]);
        }
        coords[0] = &top * &reduction[0];
    }
    coords
}

/// Γ_j, the matrix of multiplication by z^j: entry (u, v) is a_{v+j, u}.
/// Γ_j equals the transpose of A^j.
pub fn gamma_power(k: usize, j: usize) -> SymbolicMatrix {
    let mut m = SymbolicMatrix::zero(k);
    for v in 0..k {
        let col = power_coordinates(k, v + j);
        for (u, entry) in col.into_iter().enumerate() {
            m.rows[u][v] = entry;
        }
    }
    m
}

/// Exact check of (−1)^{k+h} ∂_h(A) = (∂_k A)·A^{k−h} for h ∈ [1, k].
pub fn companion_derivative_identity_check(k: usize) -> Report {
    let a = companion_symbolic(k);
    let mut failures = Vec::new();
    let mut per_h = Vec::new();
    if k >= 1 {
        let dk = a.partial(k).expect("k in range");
        for h in 1..=k {
            let lhs = a.partial(h).expect("h in range").scale(&sign(k + h));
            let rhs = dk.mul(&a.pow(k - h));
            let ok = lhs == rhs;
            per_h.push((h, ok));
            if !ok {
                failures.push(h);
            }
        }
    }
    Report::new("companion_derivative_identity")
        .param("k", k)
        .param("per_h", per_h)
        .exact(failures.len() as f64)
}

/// Exact check that row (k−q) of A^{k−p} equals row (k−p) of A^{k−q}
/// (equivalently, the corresponding columns of Γ) for all p, q ∈ [1, k].
pub fn line_equality_check(k: usize) -> Report {
    let a = companion_symbolic(k);
    let powers: Vec<SymbolicMatrix> = (0..k).map(|j| a.pow(j)).collect();
    let mut failures = 0usize;
    let mut literal_row_failures = 0usize;
    for p in 1..=k {
        for q in 1..=k {
            if powers[k - p].rows[k - q] != powers[k - q].rows[k - p] {
                failures += 1;
            }
            let gp = powers[k - p].transpose();
            let gq = powers[k - q].transpose();
            if gp.rows[k - q] != gq.rows[k - p] {
                literal_row_failures += 1;
            }
        }
    }
    Report::new("line_equality")
        .param("k", k)
        .param("convention", "rows of A^j = columns of Gamma_j")
        .param("gamma_row_reading_failures", literal_row_failures)
        .exact(failures as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn pt(v: &[f64]) -> SigmaPoint {
        SigmaPoint::from_real(v).unwrap()
    }

    #[test]
    fn p_eval_examples() {
        let s = pt(&[3.0, 2.0]);
        assert_eq!(p_eval(&s, c(1.0), 0), c(0.0));
        assert_eq!(p_eval(&s, c(1.0), 1), c(-1.0));
        let z = Complex64::new(0.3, -1.2);
        let zero = SigmaPoint::zero(4);
        assert!((p_eval(&zero, z, 0) - z.powu(4)).norm() < 1e-15);
    }

    #[test]
    fn radius_examples() {
        assert_eq!(radius_bound(&SigmaPoint::zero(3)), 2.0);
        assert_eq!(radius_bound(&pt(&[3.0, 2.0])), 8.0);
    }

    #[test]
    fn roots_examples() {
        let z = roots(&pt(&[3.0, 2.0]), 1e-10).unwrap();
        assert!((z[0] - c(1.0)).norm() < 1e-12);
        assert!((z[1] - c(2.0)).norm() < 1e-12);

        let z = roots(&SigmaPoint::zero(3), 1e-10).unwrap();
        assert!(z.iter().all(|r| r.norm() < 1e-4));

        for k in 1..=6usize {
            // z^k − 1
            let mut v = vec![0.0; k];
            v[k - 1] = if k % 2 == 1 { 1.0 } else { -1.0 };
            let z = roots(&pt(&v), 1e-10).unwrap();
            for r in &z {
                assert!((r.norm() - 1.0).abs() < 1e-12);
                assert!((r.powu(k as u32) - c(1.0)).norm() < 1e-12);
            }
            assert!(min_separation(&z) > 0.1 || k == 1);
        }
    }

    #[test]
    fn parse_complex_literals() {
        assert_eq!(parse_complex("3").unwrap(), c(3.0));
        assert_eq!(parse_complex("1+2i").unwrap(), Complex64::new(1.0, 2.0));
        assert_eq!(parse_complex("1-2i").unwrap(), Complex64::new(1.0, -2.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("2.5i").unwrap(), Complex64::new(0.0, 2.5));
        assert_eq!(parse_complex("1e-3+2e-1i").unwrap(), Complex64::new(1e-3, 0.2));
        assert!(parse_complex("x").is_err());
        assert!(parse_complex("nan").is_err());
        let s: SigmaPoint = "3,2".parse().unwrap();
        assert_eq!(s, pt(&[3.0, 2.0]));
        assert_eq!(s.to_string(), "3,2");
    }

    #[test]
    fn discriminant_examples() {
        assert!((discriminant(&pt(&[3.0, 2.0])).unwrap() - c(1.0)).norm() < 1e-12);
        assert!(discriminant(&SigmaPoint::zero(3)).unwrap().norm() < 1e-10);
        for (s1, s2) in [(0.5, -1.0), (2.0, 3.0), (-1.5, 0.25)] {
            let d = discriminant(&pt(&[s1, s2])).unwrap();
            assert!((d - c(s1 * s1 - 4.0 * s2)).norm() < 1e-10);
        }
    }

    #[test]
    fn simple_root_guard() {
        assert!(matches!(
            simple_roots(&pt(&[2.0, 1.0]), 1e-10),
            Err(Error::DegenerateRoots { .. })
        ));
        assert!(simple_roots(&pt(&[3.0, 2.0]), 1e-10).is_ok());
    }

    #[test]
    fn companion_layout() {
        let a = companion_symbolic(2);
        assert_eq!(a.rows[0][0], SigmaPoly::zero(2));
        assert_eq!(a.rows[0][1], SigmaPoly::one(2));
        assert_eq!(a.rows[1][0], SigmaPoly::parse(2, "-s2").unwrap());
        assert_eq!(a.rows[1][1], SigmaPoly::parse(2, "s1").unwrap());
        let a3 = companion_symbolic(3);
        let bottom: Vec<String> = a3.rows[2].iter().map(|p| p.to_string()).collect();
        assert_eq!(bottom, vec!["s3", "-s2", "s1"]);
    }

    #[test]
    fn companion_eigenvectors() {
        let s = pt(&[3.0, 2.0]);
        let a = companion(&s);
        for z in roots(&s, 1e-10).unwrap() {
            let e = vec![Complex64::one(), z];
            let ae = a.mul_vec(&e);
            assert!((ae[0] - z * e[0]).norm() < 1e-12);
            assert!((ae[1] - z * e[1]).norm() < 1e-12);
        }
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_power(2, 0), SymbolicMatrix::identity(2));
        assert_eq!(gamma_power(2, 1), companion_symbolic(2).transpose());
        for k in 1..=4 {
            let a = companion_symbolic(k);
            for j in 0..=5 {
                assert_eq!(gamma_power(k, j), a.pow(j).transpose(), "k={k} j={j}");
            }
        }
    }

    #[test]
    fn derivative_identity_small() {
        let a = companion_symbolic(2);
        let d1 = a.partial(1).unwrap();
        assert_eq!(d1.rows[1][1], SigmaPoly::one(2));
        let prod = a.partial(2).unwrap().mul(&a);
        assert_eq!(prod.rows[1][1], SigmaPoly::integer(2, -1));
        for k in 2..=3 {
            assert!(companion_derivative_identity_check(k).pass);
        }
    }

    #[test]
    fn line_equality_k3() {
        let r = line_equality_check(3);
        assert!(r.pass);
        // the row-of-Gamma reading does not hold
        assert!(r.params["gamma_row_reading_failures"].as_u64().unwrap() > 0);
    }
}
