//! The Weyl algebra of polynomial differential operators in σ_1..σ_k, kept
//! in normal order (every σ to the left of every ∂), and its weight grading.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{text, GaussianRational, Monomial, SigmaPoly};
use crate::linalg;
use crate::report::Report;

/// Σ c_{αβ} σ^α ∂^β with nonzero coefficients only.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylOp {
    k: usize,
    terms: BTreeMap<(Monomial, Monomial), GaussianRational>,
}

/// The named operators of the trace systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// ∂_p∂_q − ∂_{p+1}∂_{q−1}
    A(usize, usize),
    /// ∂_1∂_{m−1} + ∂_m E
    T(usize),
    /// T^m + ∂_m
    TTilde(usize),
    /// E = Σ σ_h ∂_h
    Euler,
    /// U_0 = Σ h σ_h ∂_h
    U0,
    /// U_{−1} = Σ_{h=0}^{k−1} (k−h) σ_h ∂_{h+1}, σ_0 = 1
    UMinus1,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::A(p, q) => write!(f, "A({p},{q})"),
            Generator::T(m) => write!(f, "T({m})"),
            Generator::TTilde(m) => write!(f, "Ttilde({m})"),
            Generator::Euler => f.write_str("E"),
            Generator::U0 => f.write_str("U0"),
            Generator::UMinus1 => f.write_str("U-1"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("unknown generator `{s}`"));
        let args = |body: &str| -> Result<Vec<usize>> {
            body.strip_suffix(')')
                .ok_or_else(bad)?
                .split(',')
                .map(|x| x.parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        match s.as_str() {
            "E" => return Ok(Generator::Euler),
            "U0" => return Ok(Generator::U0),
            "U-1" => return Ok(Generator::UMinus1),
            _ => {}
        }
        if let Some(body) = s.strip_prefix("A(") {
            if let [p, q] = args(body)?[..] {
                return Ok(Generator::A(p, q));
            }
        } else if let Some(body) = s.strip_prefix("Ttilde(") {
            if let [m] = args(body)?[..] {
                return Ok(Generator::TTilde(m));
            }
        } else if let Some(body) = s.strip_prefix("T(") {
            if let [m] = args(body)?[..] {
                return Ok(Generator::T(m));
            }
        }
        Err(bad())
    }
}

fn int(n: i64) -> GaussianRational {
    GaussianRational::from_integer(n)
}

fn falling(m: u32, j: u32) -> BigInt {
    (0..j).fold(BigInt::one(), |acc, i| acc * BigInt::from(m - i))
}

fn binomial(n: u32, j: u32) -> BigInt {
    falling(n, j) / falling(j, j)
}

fn big(n: BigInt) -> GaussianRational {
    GaussianRational::from(BigRational::from_integer(n))
}

fn signed_weight(m: &Monomial) -> i64 {
    m.weight() as i64
}

impl WeylOp {
    pub fn zero(k: usize) -> Self {
        WeylOp {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(k: usize, c: GaussianRational) -> Self {
        WeylOp::term(k, Monomial::one(k), Monomial::one(k), c)
    }

    pub fn identity(k: usize) -> Self {
        WeylOp::scalar(k, GaussianRational::one())
    }

    /// c·σ^α ∂^β.
    pub fn term(k: usize, alpha: Monomial, beta: Monomial, c: GaussianRational) -> Self {
        let mut op = WeylOp::zero(k);
        op.add_term(alpha, beta, &c);
        op
    }

    /// Multiplication by σ_h.
    pub fn sigma(k: usize, h: usize) -> Result<Self> {
        check_index(h, 1, k)?;
        Ok(WeylOp::term(
            k,
            Monomial::var(k, h),
            Monomial::one(k),
            GaussianRational::one(),
        ))
    }

    /// ∂_h = ∂/∂σ_h.
    pub fn d(k: usize, h: usize) -> Result<Self> {
        check_index(h, 1, k)?;
        Ok(WeylOp::term(
            k,
            Monomial::one(k),
            Monomial::var(k, h),
            GaussianRational::one(),
        ))
    }

    /// Multiplication by a polynomial.
    pub fn from_poly(p: &SigmaPoly) -> Self {
        let k = p.k();
        let mut op = WeylOp::zero(k);
        for (m, c) in p.terms() {
            op.add_term(m.clone(), Monomial::one(k), c);
        }
        op
    }

    fn add_term(&mut self, alpha: Monomial, beta: Monomial, c: &GaussianRational) {
        assert!(
            alpha.k() == self.k && beta.k() == self.k,
            "exponent length must equal k"
        );
        if c.is_zero() {
            return;
        }
        let key = (alpha, beta);
        let remove = {
            let entry = self.terms.entry(key.clone()).or_default();
            *entry += c;
            entry.is_zero()
        };
        if remove {
            self.terms.remove(&key);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &GaussianRational)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, alpha: &Monomial, beta: &Monomial) -> GaussianRational {
        self.terms
            .get(&(alpha.clone(), beta.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// Largest total order Σβ_h of a term.
    pub fn order(&self) -> u64 {
        self.terms.keys().map(|(_, b)| b.degree()).max().unwrap_or(0)
    }

    fn check_arity(&self, other: &WeylOp) -> Result<()> {
        if self.k != other.k {
            return Err(Error::MismatchedArity {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &WeylOp) -> Result<WeylOp> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WeylOp) -> Result<WeylOp> {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    pub fn scale(&self, c: &GaussianRational) -> WeylOp {
        let mut out = WeylOp::zero(self.k);
        for ((a, b), x) in &self.terms {
            out.add_term(a.clone(), b.clone(), &(x * c));
        }
        out
    }

    /// The product `self · other` in normal order.
    pub fn compose(&self, other: &WeylOp) -> Result<WeylOp> {
        self.check_arity(other)?;
        let mut out = WeylOp::zero(self.k);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let c = c1 * c2;
                for (alpha, beta, n) in reorder(b1, a2) {
                    let alpha = a1.mul(&alpha);
                    let beta = beta.mul(b2);
                    out.add_term(alpha, beta, &(&c * &big(n)));
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> WeylOp {
        (0..e).fold(WeylOp::identity(self.k), |acc, _| {
            acc.compose(self).expect("same arity")
        })
    }

    /// [P, Q] = PQ − QP.
    pub fn commutator(&self, other: &WeylOp) -> Result<WeylOp> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    /// The action of the operator on a polynomial.
    pub fn apply(&self, g: &SigmaPoly) -> Result<SigmaPoly> {
        if self.k != g.k() {
            return Err(Error::MismatchedArity {
                left: self.k,
                right: g.k(),
            });
        }
        let mut out = SigmaPoly::zero(self.k);
        let mut scratch = Vec::new();
        for ((alpha, beta), c) in &self.terms {
            scratch.clear();
            for (gamma, x) in g.terms() {
                if gamma.0.iter().zip(&beta.0).any(|(g, b)| g < b) {
                    continue;
                }
                let mut n = BigInt::one();
                let mut e = alpha.0.clone();
                for i in 0..self.k {
                    n *= falling(gamma.0[i], beta.0[i]);
                    e[i] += gamma.0[i] - beta.0[i];
                }
                scratch.push((Monomial(e), &(c * x) * &big(n)));
            }
            for (m, x) in scratch.drain(..) {
                out = &out + &SigmaPoly::monomial(self.k, m, x);
            }
        }
        Ok(out)
    }

    /// Per-term weights w(α) − w(β).
    pub fn weights(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().map(|(a, b)| signed_weight(a) - signed_weight(b))
    }

    /// The common weight of all terms; `None` for zero or mixed weight.
    pub fn pure_weight(&self) -> Option<i64> {
        let mut it = self.weights();
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// Splits into pure-weight components, weights increasing.
    pub fn weight_decompose(&self) -> Vec<(i64, WeylOp)> {
        let mut parts: BTreeMap<i64, WeylOp> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let w = signed_weight(a) - signed_weight(b);
            parts
                .entry(w)
                .or_insert_with(|| WeylOp::zero(self.k))
                .add_term(a.clone(), b.clone(), c);
        }
        parts.into_iter().collect()
    }

    /// Parses a sum of products of `s`/`d` factors. Factors may come in any
    /// order; the product is normal-ordered on the way in.
    pub fn parse(k: usize, s: &str) -> Result<WeylOp> {
        let mut out = WeylOp::zero(k);
        for term in text::parse_sum(s, &['s', 'd'])? {
            let mut prod = WeylOp::scalar(k, term.coeff);
            for (letter, idx, e) in term.factors {
                let base = match letter {
                    's' => WeylOp::sigma(k, idx)?,
                    _ => WeylOp::d(k, idx)?,
                };
                prod = prod.compose(&base.pow(e))?;
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }
}

fn check_index(h: usize, lo: usize, hi: usize) -> Result<()> {
    if h < lo || h > hi {
        return Err(Error::range(h, lo, hi));
    }
    Ok(())
}

/// ∂^β σ^γ = Σ σ^{α'} ∂^{β'} · n, one variable at a time:
/// ∂^n σ^m = Σ_j C(n,j)·m!/(m−j)!·σ^{m−j}∂^{n−j}.
fn reorder(beta: &Monomial, gamma: &Monomial) -> Vec<(Monomial, Monomial, BigInt)> {
    let k = beta.k();
    let mut acc = vec![(Monomial::one(k), Monomial::one(k), BigInt::one())];
    for i in 0..k {
        let (n, m) = (beta.0[i], gamma.0[i]);
        if n == 0 && m == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(acc.len() * (n.min(m) as usize + 1));
        for (a, b, c) in &acc {
            for j in 0..=n.min(m) {
                let mut a = a.clone();
                let mut b = b.clone();
                a.0[i] = m - j;
                b.0[i] = n - j;
                next.push((a, b, c * binomial(n, j) * falling(m, j)));
            }
        }
        acc = next;
    }
    acc
}

/// The named generator in normal order.
///
/// Index ranges: A(p,q) with p ∈ [1,k−1], q ∈ [2,k]; T(m), Ttilde(m) with
/// m ∈ [2,k]. A(p,q) with q = p+1 cancels to the zero operator.
pub fn make_generator(k: usize, g: Generator) -> Result<WeylOp> {
    let d = |h: usize| WeylOp::d(k, h);
    match g {
        Generator::A(p, q) => {
            check_index(p, 1, k.saturating_sub(1))?;
            check_index(q, 2, k)?;
            d(p)?.compose(&d(q)?)?.sub(&d(p + 1)?.compose(&d(q - 1)?)?)
        }
        Generator::T(m) => {
            check_index(m, 2, k)?;
            let euler = make_generator(k, Generator::Euler)?;
            d(1)?.compose(&d(m - 1)?)?.add(&d(m)?.compose(&euler)?)
        }
        Generator::TTilde(m) => {
            check_index(m, 2, k)?;
            make_generator(k, Generator::T(m))?.add(&d(m)?)
        }
        Generator::Euler => weighted_field(k, |_| 1),
        Generator::U0 => weighted_field(k, |h| h as i64),
        Generator::UMinus1 => {
            let mut op = WeylOp::zero(k);
            for h in 0..k {
                let alpha = if h == 0 { Monomial::one(k) } else { Monomial::var(k, h) };
                op.add_term(alpha, Monomial::var(k, h + 1), &int((k - h) as i64));
            }
            Ok(op)
        }
    }
}

fn weighted_field(k: usize, c: impl Fn(usize) -> i64) -> Result<WeylOp> {
    let mut op = WeylOp::zero(k);
    for h in 1..=k {
        op.add_term(Monomial::var(k, h), Monomial::var(k, h), &int(c(h)));
    }
    Ok(op)
}

/// All A(p,q) over the admissible ranges, in (p, q) order.
pub fn a_generators(k: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for p in 1..k {
        for q in 2..=k {
            out.push(Generator::A(p, q));
        }
    }
    out
}

/// Rational coefficients x with Σ x_i·basis_i = target, if such exist.
pub fn express(target: &WeylOp, basis: &[WeylOp]) -> Option<Vec<BigRational>> {
    let mut keys: Vec<&(Monomial, Monomial)> = target.terms.keys().collect();
    for b in basis {
        keys.extend(b.terms.keys());
    }
    keys.sort();
    keys.dedup();
    let n = basis.len();
    let mut rows = Vec::with_capacity(2 * keys.len());
    let mut rhs = Vec::with_capacity(2 * keys.len());
    for key in keys {
        let get = |op: &WeylOp| op.terms.get(key).cloned().unwrap_or_default();
        rows.push(basis.iter().map(|b| get(b).re).collect::<Vec<_>>());
        rhs.push(get(target).re);
        rows.push(basis.iter().map(|b| get(b).im).collect::<Vec<_>>());
        rhs.push(get(target).im);
    }
    linalg::solve(&rows, &rhs, n)
}

/// Σ c_i·op_i with integer weights; `None` entries are skipped.
pub fn combination(k: usize, parts: &[(i64, Option<WeylOp>)]) -> WeylOp {
    parts.iter().fold(WeylOp::zero(k), |acc, (c, op)| match op {
        Some(op) if *c != 0 => acc.add(&op.scale(&int(*c))).expect("same arity"),
        _ => acc,
    })
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|((a1, b1), _), ((a2, b2), _)| {
            let w1 = signed_weight(a1) - signed_weight(b1);
            let w2 = signed_weight(a2) - signed_weight(b2);
            w2.cmp(&w1)
                .then_with(|| b2.degree().cmp(&b1.degree()))
                .then_with(|| a2.degree().cmp(&a1.degree()))
                .then_with(|| (a2, b2).cmp(&(a1, b1)))
        });
        let rendered = text::render_sum(items.into_iter().map(|((a, b), c)| {
            let mut s = String::new();
            a.render('s', &mut s);
            b.render('d', &mut s);
            (c, s)
        }));
        f.write_str(&rendered)
    }
}

/// Infers `k` as the largest index that appears (at least 1).
impl FromStr for WeylOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let k = text::parse_sum(s, &['s', 'd'])?
            .iter()
            .flat_map(|t| t.factors.iter().map(|f| f.1))
            .max()
            .unwrap_or(1);
        WeylOp::parse(k, s)
    }
}

/// One row of the commutator table: the exact commutator next to the
/// closed form it is expected to equal.
#[derive(Clone, Debug)]
pub struct CommutatorRow {
    pub label: String,
    pub computed: WeylOp,
    pub expected: WeylOp,
}

impl CommutatorRow {
    pub fn holds(&self) -> bool {
        self.computed == self.expected
    }
}

fn gen(k: usize, g: Generator) -> Option<WeylOp> {
    make_generator(k, g).ok()
}

/// The commutators of U_0 and U_{−1} with every generator of the trace
/// systems, each paired with its closed form:
///
/// * [U_0, G] = w(G)·G for G ∈ {A(p,q), T(h), Ttilde(h)}
/// * [U_{−1}, A(p,q)] = −(k−q)·A(p,q+1) − (k−p−1)·A(p+1,q)
/// * [U_{−1}, T(h)] = −(k−h)·T(h+1) + (k−1)·A(1,h)
/// * [U_{−1}, Ttilde(h)] = −(k−h)·Ttilde(h+1) + (k−1)·A(1,h)
/// * [U_{−1}, E] = k·∂_1, [U_{−1}, ∂_h] = −(k−h)·∂_{h+1}, [U_0, U_{−1}] = −U_{−1}
///
/// Terms whose coefficient vanishes are dropped, so out-of-range indices
/// never appear.
pub fn commutator_table(k: usize) -> Vec<CommutatorRow> {
    let ki = k as i64;
    let u0 = make_generator(k, Generator::U0).expect("U0");
    let um = make_generator(k, Generator::UMinus1).expect("U-1");
    let mut rows = Vec::new();
    let mut push = |label: String, computed: WeylOp, expected: WeylOp| {
        rows.push(CommutatorRow {
            label,
            computed,
            expected,
        })
    };
    for g in a_generators(k) {
        let Generator::A(p, q) = g else { unreachable!() };
        let a = gen(k, g).expect("admissible");
        push(
            format!("[U0,{g}]"),
            u0.commutator(&a).expect("arity"),
            a.scale(&int(-((p + q) as i64))),
        );
        let (pi, qi) = (p as i64, q as i64);
        let expected = combination(
            k,
            &[
                (-(ki - qi), (qi < ki).then(|| gen(k, Generator::A(p, q + 1))).flatten()),
                (
                    -(ki - pi - 1),
                    (pi + 1 < ki).then(|| gen(k, Generator::A(p + 1, q))).flatten(),
                ),
            ],
        );
        push(format!("[U-1,{g}]"), um.commutator(&a).expect("arity"), expected);
    }
    for h in 2..=k {
        let hi = h as i64;
        for tilde in [false, true] {
            let mk = |m: usize| gen(k, if tilde { Generator::TTilde(m) } else { Generator::T(m) });
            let t = mk(h).expect("admissible");
            let name = if tilde { Generator::TTilde(h) } else { Generator::T(h) };
            push(
                format!("[U0,{name}]"),
                u0.commutator(&t).expect("arity"),
                t.scale(&int(-hi)),
            );
            let expected = combination(
                k,
                &[
                    (-(ki - hi), if h < k { mk(h + 1) } else { None }),
                    (ki - 1, gen(k, Generator::A(1, h))),
                ],
            );
            push(format!("[U-1,{name}]"), um.commutator(&t).expect("arity"), expected);
        }
    }
    let euler = make_generator(k, Generator::Euler).expect("E");
    push(
        "[U-1,E]".into(),
        um.commutator(&euler).expect("arity"),
        WeylOp::d(k, 1).expect("k >= 1").scale(&int(ki)),
    );
    for h in 1..=k {
        let expected = if h < k {
            WeylOp::d(k, h + 1).expect("range").scale(&int(-((k - h) as i64)))
        } else {
            WeylOp::zero(k)
        };
        push(
            format!("[U-1,d{h}]"),
            um.commutator(&WeylOp::d(k, h).expect("range")).expect("arity"),
            expected,
        );
        push(
            format!("[U0,d{h}]"),
            u0.commutator(&WeylOp::d(k, h).expect("range")).expect("arity"),
            WeylOp::d(k, h).expect("range").scale(&int(-(h as i64))),
        );
    }
    push(
        "[U0,U-1]".into(),
        u0.commutator(&um).expect("arity"),
        um.scale(&int(-1)),
    );
    rows
}

/// The same table with the alternative closed forms
/// [U_{−1}, A(p,q)] = (k−p+1)·A(p+1,q−1) + (k−q)·A(p,q+1) and
/// [U_{−1}, T(h)] = −(k−h)·T(h+1) − (k−1)·A(1,h) (same for Ttilde). Kept to
/// show where they and the exact brackets part ways.
pub fn alternative_commutator_rows(k: usize) -> Vec<CommutatorRow> {
    let ki = k as i64;
    let um = make_generator(k, Generator::UMinus1).expect("U-1");
    let mut rows = Vec::new();
    for g in a_generators(k) {
        let Generator::A(p, q) = g else { unreachable!() };
        let a = gen(k, g).expect("admissible");
        let (pi, qi) = (p as i64, q as i64);
        let next = if p + 1 < k && q > 2 {
            gen(k, Generator::A(p + 1, q - 1))
        } else {
            None
        };
        let expected = combination(
            k,
            &[
                (ki - pi + 1, next),
                (ki - qi, if q < k { gen(k, Generator::A(p, q + 1)) } else { None }),
            ],
        );
        rows.push(CommutatorRow {
            label: format!("[U-1,{g}]"),
            computed: um.commutator(&a).expect("arity"),
            expected,
        });
    }
    for h in 2..=k {
        let hi = h as i64;
        for tilde in [false, true] {
            let mk = |m: usize| gen(k, if tilde { Generator::TTilde(m) } else { Generator::T(m) });
            let name = if tilde { Generator::TTilde(h) } else { Generator::T(h) };
            let expected = combination(
                k,
                &[
                    (-(ki - hi), if h < k { mk(h + 1) } else { None }),
                    (-(ki - 1), gen(k, Generator::A(1, h))),
                ],
            );
            rows.push(CommutatorRow {
                label: format!("[U-1,{name}]"),
                computed: um.commutator(&mk(h).expect("admissible")).expect("arity"),
                expected,
            });
        }
    }
    rows
}

/// The scalar w with [U_0, P] = w·P, when there is one.
pub fn weight_eigenvalue(op: &WeylOp) -> Option<GaussianRational> {
    let ((alpha, beta), c) = op.terms.iter().next()?;
    let u0 = make_generator(op.k, Generator::U0).ok()?;
    let bracket = u0.commutator(op).ok()?;
    let w = &bracket.coeff(alpha, beta) * &c.inv();
    (bracket == op.scale(&w)).then_some(w)
}

/// Every row of [`commutator_table`] as one exact report; failing labels
/// are listed.
pub fn commutator_report(k: usize) -> Report {
    let rows = commutator_table(k);
    let failures: Vec<&str> = rows.iter().filter(|r| !r.holds()).map(|r| r.label.as_str()).collect();
    Report::new("commutator_table")
        .param("k", k)
        .param("rows", rows.len())
        .param("failures", &failures)
        .exact(failures.len() as f64)
}

/// [U_0, P] = w·P exactly when P has pure weight w: checked on the
/// generators and on `extra`, in both directions.
pub fn weight_lemma_report(k: usize, extra: &[WeylOp]) -> Report {
    let mut ops: Vec<WeylOp> = [Generator::Euler, Generator::U0, Generator::UMinus1]
        .into_iter()
        .chain(a_generators(k))
        .chain((2..=k).flat_map(|m| [Generator::T(m), Generator::TTilde(m)]))
        .filter_map(|g| make_generator(k, g).ok())
        .filter(|op| !op.is_zero())
        .collect();
    ops.extend(extra.iter().filter(|op| !op.is_zero()).cloned());
    let mut mixed = 0usize;
    let mut failures = 0usize;
    for op in &ops {
        let eigen = weight_eigenvalue(op);
        let pure = op.pure_weight().map(GaussianRational::from_integer);
        mixed += usize::from(pure.is_none());
        if eigen != pure {
            failures += 1;
        }
    }
    Report::new("weight_lemma")
        .param("k", k)
        .param("operators", ops.len())
        .param("mixed_weight", mixed)
        .exact(failures as f64)
}
