//! Exact polynomials in the elementary symmetric coordinates σ_1..σ_k.
//!
//! Coefficients live in ℚ(i). Each monomial σ^γ carries the weight
//! `w(γ) = Σ h·γ_h`; most of the crate works one pure-weight piece at a time.

mod scalar;
pub(crate) mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::complex::Complex64;
use num::traits::{One, Zero};

pub use scalar::GaussianRational;

use crate::error::{Error, Result};
use crate::polyroots::SigmaPoint;

/// Exponent vector γ of σ^γ. Index 0 holds the exponent of σ_1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(k: usize) -> Self {
        Monomial(vec![0; k])
    }

    pub fn var(k: usize, h: usize) -> Self {
        let mut e = vec![0; k];
        e[h - 1] = 1;
        Monomial(e)
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// `Σ h·γ_h` with 1-based h.
    pub fn weight(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &e)| (i as u64 + 1) * e as u64).sum()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn exponent(&self, h: usize) -> u32 {
        self.0[h - 1]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Display order: heavier first, then lexicographically larger first.
    pub(crate) fn display_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        b.weight().cmp(&a.weight()).then_with(|| b.cmp(a))
    }

    pub(crate) fn render(&self, letter: char, out: &mut String) {
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                text::render_factor(out, letter, i + 1, e);
            }
        }
    }

    pub fn eval(&self, point: &[Complex64]) -> Complex64 {
        self.0
            .iter()
            .zip(point)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, z)| z.powu(e))
            .fold(Complex64::new(1.0, 0.0), |acc, v| acc * v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial in σ_1..σ_k. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaPoly {
    k: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl SigmaPoly {
    pub fn zero(k: usize) -> Self {
        SigmaPoly {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(k: usize, c: GaussianRational) -> Self {
        SigmaPoly::monomial(k, Monomial::one(k), c)
    }

    pub fn one(k: usize) -> Self {
        SigmaPoly::constant(k, GaussianRational::one())
    }

    pub fn integer(k: usize, n: i64) -> Self {
        SigmaPoly::constant(k, GaussianRational::from_integer(n))
    }

    /// The coordinate σ_h, 1 ≤ h ≤ k.
    pub fn var(k: usize, h: usize) -> Result<Self> {
        if h == 0 || h > k {
            return Err(Error::range(h, 1, k));
        }
        Ok(SigmaPoly::monomial(k, Monomial::var(k, h), GaussianRational::one()))
    }

    pub fn monomial(k: usize, mono: Monomial, c: GaussianRational) -> Self {
        assert_eq!(mono.k(), k, "exponent vector length must equal k");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        SigmaPoly { k, terms }
    }

    pub fn from_terms<I>(k: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut p = SigmaPoly::zero(k);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: &GaussianRational) {
        assert_eq!(mono.k(), self.k, "exponent vector length must equal k");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> GaussianRational {
        self.terms.get(mono).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.l1_norm()).fold(0.0, f64::max)
    }

    fn check_arity(&self, other: &SigmaPoly) -> Result<()> {
        if self.k != other.k {
            return Err(Error::MismatchedArity {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }

    pub fn arith(&self, other: &SigmaPoly, op: ArithOp) -> Result<SigmaPoly> {
        self.check_arity(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other, false),
            ArithOp::Sub => self.add_unchecked(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &SigmaPoly, negate: bool) -> SigmaPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            if negate {
                out.add_term(m.clone(), &-c);
            } else {
                out.add_term(m.clone(), c);
            }
        }
        out
    }

    fn mul_unchecked(&self, other: &SigmaPoly) -> SigmaPoly {
        let mut out = SigmaPoly::zero(self.k);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> SigmaPoly {
        if c.is_zero() {
            return SigmaPoly::zero(self.k);
        }
        SigmaPoly {
            k: self.k,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SigmaPoly {
        let mut acc = SigmaPoly::one(self.k);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Formal partial derivative ∂/∂σ_h.
    pub fn partial(&self, h: usize) -> Result<SigmaPoly> {
        if h == 0 || h > self.k {
            return Err(Error::range(h, 1, self.k));
        }
        let mut out = SigmaPoly::zero(self.k);
        for (m, c) in &self.terms {
            let e = m.0[h - 1];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[h - 1] -= 1;
            out.add_term(d, &(c * &GaussianRational::from_integer(e as i64)));
        }
        Ok(out)
    }

    /// Splits into pure-weight components, weights strictly increasing.
    pub fn weight_decompose(&self) -> Vec<(u64, SigmaPoly)> {
        let mut parts: BTreeMap<u64, SigmaPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.weight())
                .or_insert_with(|| SigmaPoly::zero(self.k))
                .terms
                .insert(m.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    /// The common weight of all terms; `None` for zero or mixed weight.
    pub fn pure_weight(&self) -> Option<u64> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn degree_in(&self, h: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[h - 1]).max()
    }

    /// The coefficient of σ_h^d, as a polynomial not involving σ_h.
    pub fn coefficient_of(&self, h: usize, d: u32) -> SigmaPoly {
        let mut out = SigmaPoly::zero(self.k);
        for (m, c) in &self.terms {
            if m.0[h - 1] == d {
                let mut r = m.clone();
                r.0[h - 1] = 0;
                out.add_term(r, c);
            }
        }
        out
    }

    /// Floating-point evaluation, summing in ascending exponent order.
    pub fn eval(&self, point: &SigmaPoint) -> Result<Complex64> {
        if point.k() != self.k {
            return Err(Error::MismatchedArity {
                left: self.k,
                right: point.k(),
            });
        }
        Ok(self.eval_slice(point.values()))
    }

    pub(crate) fn eval_slice(&self, values: &[Complex64]) -> Complex64 {
        self.terms.iter().fold(Complex64::new(0.0, 0.0), |acc, (m, c)| {
            acc + c.to_complex() * m.eval(values)
        })
    }

    /// Parses the canonical rendering; indices must not exceed `k`.
    pub fn parse(k: usize, s: &str) -> Result<SigmaPoly> {
        let mut p = SigmaPoly::zero(k);
        for term in text::parse_sum(s, &['s'])? {
            let mut mono = Monomial::one(k);
            for (_, idx, e) in term.factors {
                if idx > k {
                    return Err(Error::range(idx, 1, k));
                }
                mono.0[idx - 1] += e;
            }
            p.add_term(mono, &term.coeff);
        }
        Ok(p)
    }
}

/// Exponent vectors of weight `w` in `k` variables, ascending lexicographic.
pub fn weight_exponents(k: usize, w: u64) -> Vec<Monomial> {
    fn rec(idx: usize, remaining: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx == 0 {
            if remaining == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        // choose exponent of σ_idx, smallest index last so output is lex ordered
        let h = idx as u64;
        for e in 0..=remaining / h {
            cur[idx - 1] = e as u32;
            rec(idx - 1, remaining - e * h, cur, out);
        }
        cur[idx - 1] = 0;
    }
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    rec(k, w, &mut vec![0; k], &mut out);
    out.sort();
    out
}

/// All monomials of pure weight `w`, each once, in ascending lexicographic
/// order on the exponent vector.
pub fn monomial_basis(k: usize, w: u64) -> Vec<SigmaPoly> {
    weight_exponents(k, w)
        .into_iter()
        .map(|m| SigmaPoly::monomial(k, m, GaussianRational::one()))
        .collect()
}

impl fmt::Display for SigmaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| Monomial::display_cmp(a.0, b.0));
        let rendered = text::render_sum(items.into_iter().map(|(m, c)| {
            let mut s = String::new();
            m.render('s', &mut s);
            (c, s)
        }));
        f.write_str(&rendered)
    }
}

/// Infers `k` as the largest index that appears (at least 1).
impl FromStr for SigmaPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let k = text::parse_sum(s, &['s'])?
            .iter()
            .flat_map(|t| t.factors.iter().map(|f| f.1))
            .max()
            .unwrap_or(1);
        SigmaPoly::parse(k, s)
    }
}

impl<'a> Add<&'a SigmaPoly> for &'a SigmaPoly {
    type Output = SigmaPoly;
    fn add(self, rhs: &SigmaPoly) -> SigmaPoly {
        self.arith(rhs, ArithOp::Add).expect("polynomial arity")
    }
}

impl<'a> Sub<&'a SigmaPoly> for &'a SigmaPoly {
    type Output = SigmaPoly;
    fn sub(self, rhs: &SigmaPoly) -> SigmaPoly {
        self.arith(rhs, ArithOp::Sub).expect("polynomial arity")
    }
}

impl<'a> Mul<&'a SigmaPoly> for &'a SigmaPoly {
    type Output = SigmaPoly;
    fn mul(self, rhs: &SigmaPoly) -> SigmaPoly {
        self.arith(rhs, ArithOp::Mul).expect("polynomial arity")
    }
}

impl Neg for &SigmaPoly {
    type Output = SigmaPoly;
    fn neg(self) -> SigmaPoly {
        self.scale(&-GaussianRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, s: &str) -> SigmaPoly {
        SigmaPoly::parse(k, s).unwrap()
    }

    #[test]
    fn arith_examples() {
        let s1 = SigmaPoly::var(2, 1).unwrap();
        let s2 = SigmaPoly::var(2, 2).unwrap();
        assert!(s1.arith(&s1, ArithOp::Sub).unwrap().is_zero());
        assert_eq!(s1.arith(&s1, ArithOp::Mul).unwrap(), p(2, "s1^2"));
        let a = &p(2, "s1^2 - s2") + &s2;
        assert_eq!(a, p(2, "s1^2"));
        assert_eq!(a.len(), 1);
        let s1k3 = SigmaPoly::var(3, 1).unwrap();
        assert_eq!(
            s1.arith(&s1k3, ArithOp::Add),
            Err(Error::MismatchedArity { left: 2, right: 3 })
        );
    }

    #[test]
    fn partial_examples() {
        assert_eq!(p(1, "s1^2").partial(1).unwrap(), p(1, "2*s1"));
        assert!(p(2, "s2").partial(1).unwrap().is_zero());
        assert!(matches!(p(2, "s2").partial(3), Err(Error::IndexOutOfRange { .. })));
        assert!(p(2, "s2").partial(0).is_err());
    }

    #[test]
    fn weight_decomposition_examples() {
        let d = p(2, "s1^2 - s2").weight_decompose();
        assert_eq!(d, vec![(2, p(2, "s1^2 - s2"))]);
        let d = p(1, "1 + s1").weight_decompose();
        assert_eq!(d, vec![(0, p(1, "1")), (1, p(1, "s1"))]);
        let d = p(3, "s1*s3 + s2").weight_decompose();
        assert_eq!(d, vec![(2, p(3, "s2")), (4, p(3, "s1*s3"))]);
    }

    #[test]
    fn basis_examples() {
        assert_eq!(monomial_basis(2, 2), vec![p(2, "s2"), p(2, "s1^2")]);
        assert_eq!(monomial_basis(1, 3), vec![p(1, "s1^3")]);
        assert_eq!(monomial_basis(3, 3), vec![p(3, "s3"), p(3, "s1*s2"), p(3, "s1^3")]);
        assert_eq!(monomial_basis(3, 0), vec![SigmaPoly::one(3)]);
    }

    #[test]
    fn eval_examples() {
        let sigma = SigmaPoint::from_real(&[3.0, 2.0]).unwrap();
        assert_eq!(p(2, "s1^2 - s2").eval(&sigma).unwrap(), Complex64::new(7.0, 0.0));
        assert_eq!(SigmaPoly::one(2).eval(&sigma).unwrap(), Complex64::new(1.0, 0.0));
        assert!(SigmaPoly::one(3).eval(&sigma).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(p(3, "s2 + s1*s3 - 2").to_string(), "s1*s3 + s2 - 2");
        assert_eq!(p(2, "-s2 + s1^2").to_string(), "s1^2 - s2");
        assert_eq!(SigmaPoly::zero(2).to_string(), "0");
        assert_eq!(p(2, "(1/2+i)*s1 - 3/4*s2").to_string(), "-3/4*s2 + (1/2+i)*s1");
        assert_eq!(p(1, "(2i)").to_string(), "(2i)");
        assert!(SigmaPoly::parse(2, "s3").is_err());
        assert_eq!("s1*s4".parse::<SigmaPoly>().unwrap().k(), 4);
    }
}
