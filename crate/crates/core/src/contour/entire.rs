//! Entire test functions Σ p_a(z)·e^{a·z} with exact Gaussian-rational
//! polynomial coefficients and rates. The family is closed under
//! differentiation, integration and multiplication by z.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::complex::Complex64;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::GaussianRational;

type Coeffs = Vec<GaussianRational>;

/// Rate `a` ↦ coefficients of p_a (constant term first). Rate 0 is the
/// polynomial part.
#[derive(Clone, Debug)]
pub struct EntireFn {
    parts: BTreeMap<GaussianRational, Coeffs>,
    numeric: Vec<(Complex64, Vec<Complex64>)>,
}

impl PartialEq for EntireFn {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for EntireFn {}

fn trim(c: &mut Coeffs) {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
}

fn add_into(acc: &mut Coeffs, other: &[GaussianRational]) {
    if acc.len() < other.len() {
        acc.resize(other.len(), GaussianRational::zero());
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
}

fn derive(c: &[GaussianRational]) -> Coeffs {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(n, x)| x * &GaussianRational::from_integer(n as i64))
        .collect()
}

impl EntireFn {
    fn from_parts(parts: BTreeMap<GaussianRational, Coeffs>) -> Self {
        let parts: BTreeMap<_, _> = parts
            .into_iter()
            .filter_map(|(a, mut c)| {
                trim(&mut c);
                (!c.is_empty()).then_some((a, c))
            })
            .collect();
        let numeric = parts
            .iter()
            .map(|(a, c)| (a.to_complex(), c.iter().map(|x| x.to_complex()).collect()))
            .collect();
        EntireFn { parts, numeric }
    }

    pub fn zero() -> Self {
        EntireFn::from_parts(BTreeMap::new())
    }

    pub fn polynomial(coeffs: Vec<GaussianRational>) -> Self {
        EntireFn::exp_poly(GaussianRational::zero(), coeffs)
    }

    pub fn constant(c: GaussianRational) -> Self {
        EntireFn::polynomial(vec![c])
    }

    /// z^n.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![GaussianRational::zero(); n + 1];
        c[n] = GaussianRational::one();
        EntireFn::polynomial(c)
    }

    /// e^{a·z}.
    pub fn exp(a: GaussianRational) -> Self {
        EntireFn::exp_poly(a, vec![GaussianRational::one()])
    }

    /// p(z)·e^{a·z}.
    pub fn exp_poly(a: GaussianRational, coeffs: Vec<GaussianRational>) -> Self {
        EntireFn::from_parts(BTreeMap::from([(a, coeffs)]))
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// The coefficients when the function is a polynomial.
    pub fn as_polynomial(&self) -> Option<Coeffs> {
        match self.parts.len() {
            0 => Some(Vec::new()),
            1 => self.parts.get(&GaussianRational::zero()).cloned(),
            _ => None,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.as_polynomial().is_some()
    }

    /// (rate, coefficients) pairs, rates ascending.
    pub fn parts(&self) -> impl Iterator<Item = (&GaussianRational, &[GaussianRational])> {
        self.parts.iter().map(|(a, c)| (a, c.as_slice()))
    }

    pub fn add(&self, other: &EntireFn) -> EntireFn {
        let mut parts = self.parts.clone();
        for (a, c) in &other.parts {
            add_into(parts.entry(a.clone()).or_default(), c);
        }
        EntireFn::from_parts(parts)
    }

    pub fn scale(&self, s: &GaussianRational) -> EntireFn {
        EntireFn::from_parts(
            self.parts
                .iter()
                .map(|(a, c)| (a.clone(), c.iter().map(|x| x * s).collect()))
                .collect(),
        )
    }

    /// z^n·f.
    pub fn mul_z_pow(&self, n: usize) -> EntireFn {
        EntireFn::from_parts(
            self.parts
                .iter()
                .map(|(a, c)| {
                    let mut shifted = vec![GaussianRational::zero(); n];
                    shifted.extend(c.iter().cloned());
                    (a.clone(), shifted)
                })
                .collect(),
        )
    }

    /// f′, using (p·e^{az})′ = (p′ + a·p)·e^{az}.
    pub fn derivative(&self) -> EntireFn {
        EntireFn::from_parts(
            self.parts
                .iter()
                .map(|(a, c)| {
                    let mut d = derive(c);
                    let ap: Coeffs = c.iter().map(|x| x * a).collect();
                    add_into(&mut d, &ap);
                    (a.clone(), d)
                })
                .collect(),
        )
    }

    /// The primitive g with g(0) = 0. For a ≠ 0 the primitive of p·e^{az}
    /// is q·e^{az} with q = Σ_j (−1)^j p^{(j)} / a^{j+1}.
    pub fn antiderivative(&self) -> EntireFn {
        let mut parts: BTreeMap<GaussianRational, Coeffs> = BTreeMap::new();
        let mut constant = GaussianRational::zero();
        for (a, c) in &self.parts {
            if a.is_zero() {
                let mut q = vec![GaussianRational::zero()];
                for (n, x) in c.iter().enumerate() {
                    q.push(x * &GaussianRational::from_ratio(1, n as i64 + 1));
                }
                add_into(parts.entry(a.clone()).or_default(), &q);
                continue;
            }
            let inv = a.inv();
            let mut q: Coeffs = Vec::new();
            let mut dj = c.clone();
            let mut factor = inv.clone();
            let mut sign = GaussianRational::one();
            while !dj.is_empty() {
                let term: Coeffs = dj.iter().map(|x| &(x * &factor) * &sign).collect();
                add_into(&mut q, &term);
                dj = derive(&dj);
                factor = &factor * &inv;
                sign = -sign;
            }
            if let Some(q0) = q.first() {
                constant -= q0;
            }
            add_into(parts.entry(a.clone()).or_default(), &q);
        }
        add_into(parts.entry(GaussianRational::zero()).or_default(), &[constant]);
        EntireFn::from_parts(parts)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.numeric
            .iter()
            .map(|(a, c)| {
                let p = c.iter().rev().fold(Complex64::zero(), |acc, x| acc * z + x);
                if *a == Complex64::zero() {
                    p
                } else {
                    p * (a * z).exp()
                }
            })
            .sum()
    }
}

fn render_coeffs(c: &[GaussianRational]) -> String {
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// `poly:c0,c1,…`, `exp:a`, `exp:a*poly:c0,…`, joined by `;` for sums. The
/// zero function renders as `poly:0`.
impl fmt::Display for EntireFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("poly:0");
        }
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|(a, c)| {
                let unit = c.len() == 1 && c[0].is_one();
                match (a.is_zero(), unit) {
                    (true, _) => format!("poly:{}", render_coeffs(c)),
                    (false, true) => format!("exp:{a}"),
                    (false, false) => format!("exp:{a}*poly:{}", render_coeffs(c)),
                }
            })
            .collect();
        f.write_str(&parts.join(";"))
    }
}

fn parse_coeffs(s: &str) -> Result<Coeffs> {
    s.split(',').map(|x| x.trim().parse()).collect()
}

impl FromStr for EntireFn {
    type Err = Error;
    fn from_str(input: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "invalid function spec `{input}`; expected poly:c0,c1,... or exp:a"
            ))
        };
        let mut out = EntireFn::zero();
        for part in input.split(';') {
            let part = part.trim();
            let term = if let Some(rest) = part.strip_prefix("poly:") {
                EntireFn::polynomial(parse_coeffs(rest)?)
            } else if let Some(rest) = part.strip_prefix("exp:") {
                match rest.split_once("*poly:") {
                    Some((a, c)) => EntireFn::exp_poly(a.trim().parse()?, parse_coeffs(c)?),
                    None => EntireFn::exp(rest.trim().parse()?),
                }
            } else if part == "exp" {
                EntireFn::exp(GaussianRational::one())
            } else {
                return Err(bad());
            };
            out = out.add(&term);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> EntireFn {
        s.parse().unwrap()
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() <= 1e-12 * (1.0 + b.norm())
    }

    #[test]
    fn polynomial_calculus() {
        let p = f("poly:1,2,3");
        assert_eq!(p.derivative(), f("poly:2,6"));
        assert_eq!(p.antiderivative(), f("poly:0,1,1,1"));
        assert_eq!(p.mul_z_pow(2), f("poly:0,0,1,2,3"));
        assert_eq!(f("poly:0,0"), EntireFn::zero());
        assert!(EntireFn::zero().antiderivative().is_zero());
    }

    #[test]
    fn exp_calculus() {
        let e = f("exp:1");
        assert_eq!(e.derivative(), e);
        let g = e.antiderivative();
        assert_eq!(g, f("exp:1;poly:-1"));
        assert!(close(g.eval(Complex64::new(0.0, 0.0)), Complex64::new(0.0, 0.0)));
        let e2 = f("exp:1/2+i*poly:0,1");
        let z = Complex64::new(0.3, -0.7);
        let back = e2.antiderivative().derivative();
        assert_eq!(back, e2);
        assert!(close(e2.eval(z), z * (Complex64::new(0.5, 1.0) * z).exp()));
    }

    #[test]
    fn parse_render_round_trip() {
        for s in ["poly:1,2", "exp:1", "exp:-2*poly:0,1;poly:3", "exp:i"] {
            let x = f(s);
            assert_eq!(f(&x.to_string()), x);
        }
        assert_eq!(f("exp"), f("exp:1"));
        assert!("sin:1".parse::<EntireFn>().is_err());
        assert!("poly:".parse::<EntireFn>().is_err());
        assert_eq!(f("poly:0,1").as_polynomial().unwrap().len(), 2);
        assert!(f("exp:1").as_polynomial().is_none());
    }
}
