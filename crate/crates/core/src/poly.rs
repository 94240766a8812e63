//! Sparse multivariate polynomials with exact Gaussian-rational coefficients.
//!
//! Polynomials carry the free parameters of parametric algebras (`p`),
//! dual solution families (`alpha`, `beta`, ...) and automorphism families.
//! Terms are kept in a map keyed by monomial with no zero coefficients, so
//! two polynomials are equal iff they are structurally equal.  Monomials are
//! ordered graded-lexicographically with variables compared by name.
//!
//! Besides ring arithmetic the module offers what the dual solver needs:
//! exact division, univariate gcd over ℚ(i), and rational-root isolation
//! for univariate real polynomials.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::GScalar;

/// A monomial `x₁^e₁ ⋯ x_k^e_k`, stored as `(name, exponent)` pairs sorted
/// by name with all exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(String, u32)>);

impl Monomial {
    /// The empty monomial `1`.
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// A single variable.
    pub fn var(name: &str) -> Self {
        Monomial(vec![(name.to_string(), 1)])
    }

    /// Builds a monomial from arbitrary `(name, exponent)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (String, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<String, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Exponent of `var` (0 if absent).
    pub fn exponent(&self, var: &str) -> u32 {
        self.0.iter().find(|(v, _)| v == var).map_or(0, |(_, e)| *e)
    }

    /// True for the monomial `1`.
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Variables with positive exponent.
    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(v, _)| v.as_str())
    }

    /// `(name, exponent)` pairs in name order.
    pub fn pairs(&self) -> &[(String, u32)] {
        &self.0
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.0.iter().cloned().chain(other.0.iter().cloned()))
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(
            other
                .0
                .iter()
                .map(|(v, e)| (v.clone(), e - self.exponent(v)))
                .filter(|(_, e)| *e > 0)
                .collect(),
        ))
    }

    /// Greatest common divisor of two monomials.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|(v, e)| {
                    let m = (*e).min(other.exponent(v));
                    (m > 0).then(|| (v.clone(), m))
                })
                .collect(),
        )
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order: total degree first, then the exponent of
    /// the alphabetically first variable where the two differ.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial in named real parameters with ℚ(i) coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, GScalar>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    /// The constant 1.
    pub fn one() -> Self {
        MultiPoly::constant(GScalar::one())
    }

    /// A constant polynomial.
    pub fn constant(c: GScalar) -> Self {
        MultiPoly::monomial(Monomial::one(), c)
    }

    /// The polynomial consisting of one variable.
    pub fn var(name: &str) -> Self {
        MultiPoly::monomial(Monomial::var(name), GScalar::one())
    }

    /// `c · m`.
    pub fn monomial(m: Monomial, c: GScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Sums `(monomial, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, GScalar)>>(it: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &GScalar) {
        if c.is_zero() {
            return;
        }
        let remove = {
            let slot = self.terms.entry(m.clone()).or_default();
            *slot += c;
            slot.is_zero()
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True iff there are no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GScalar)> {
        self.terms.iter()
    }

    /// All coefficients.
    pub fn coefficients(&self) -> impl Iterator<Item = &GScalar> {
        self.terms.values()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> GScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The set of variables that occur.
    pub fn variables(&self) -> BTreeSet<String> {
        self.terms.keys().flat_map(|m| m.vars().map(str::to_string)).collect()
    }

    /// Total degree (0 for constants and for zero).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Degree in one variable.
    pub fn degree_in(&self, var: &str) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// True iff no variable occurs.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<GScalar> {
        if self.is_constant() {
            Some(self.coefficient(&Monomial::one()))
        } else {
            None
        }
    }

    /// Highest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &GScalar)> {
        self.terms.iter().next_back()
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, s: &GScalar) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    /// Multiplies by `c · m`.
    pub fn mul_term(&self, m: &Monomial, c: &GScalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    /// Non-negative integer power.
    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a point; every occurring variable must be assigned.
    pub fn eval(&self, point: &BTreeMap<String, GScalar>) -> Result<GScalar> {
        let mut acc = GScalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.pairs() {
                let x = point.get(v).ok_or_else(|| Error::MissingParameter(v.clone()))?;
                t = &t * &x.pow(*e);
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes values for some variables, leaving the others symbolic.
    pub fn substitute(&self, point: &BTreeMap<String, GScalar>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.pairs() {
                match point.get(v) {
                    Some(x) => coeff = &coeff * &x.pow(*e),
                    None => rest.push((v.clone(), *e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), &coeff);
        }
        out
    }

    /// Substitutes polynomials for variables.
    pub fn compose(&self, map: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (v, e) in m.pairs() {
                let factor = match map.get(v) {
                    Some(p) => p.pow(*e),
                    None => MultiPoly::monomial(Monomial::from_pairs([(v.clone(), *e)]), GScalar::one()),
                };
                t = &t * &factor;
            }
            out = &out + &t;
        }
        out
    }

    /// Coefficientwise real part (parameters are real).
    pub fn re_part(&self) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), GScalar::real(c.re().clone()))))
    }

    /// Coefficientwise imaginary part (parameters are real).
    pub fn im_part(&self) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), GScalar::real(c.im().clone()))))
    }

    /// Divides by the leading coefficient so the leading term is monic.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => MultiPoly::zero(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Splits off the largest monomial dividing every term:
    /// returns `(m, q)` with `self = m · q`.
    pub fn monomial_content(&self) -> (Monomial, MultiPoly) {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return (Monomial::one(), MultiPoly::zero());
        };
        let g = it.fold(first.clone(), |g, m| g.gcd(m));
        let q = MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (g.quotient_of(m).expect("gcd divides"), c.clone())).collect(),
        };
        (g, q)
    }

    /// Multivariate division by one divisor in graded-lex order:
    /// returns `(q, r)` with `self = q·d + r` and no term of `r` divisible by
    /// the leading monomial of `d`.
    pub fn div_rem(&self, d: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        let (ld_m, ld_c) = d.leading_term().ok_or(Error::Scalar(crate::error::ScalarError::DivisionByZero))?;
        let (ld_m, ld_c) = (ld_m.clone(), ld_c.clone());
        let mut p = self.clone();
        let mut q = MultiPoly::zero();
        let mut r = MultiPoly::zero();
        while let Some((m, c)) = p.leading_term() {
            let (m, c) = (m.clone(), c.clone());
            match ld_m.quotient_of(&m) {
                Some(t) => {
                    let tc = c.checked_div(&ld_c)?;
                    q.add_term(t.clone(), &tc);
                    p = &p - &d.mul_term(&t, &tc);
                }
                None => {
                    r.add_term(m.clone(), &c);
                    p.terms.remove(&m);
                }
            }
        }
        Ok((q, r))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if let Some(c) = d.constant_value() {
            return c.inv().ok().map(|ci| self.scale(&ci));
        }
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// The single variable of a univariate polynomial (`None` if constant or
    /// multivariate).
    pub fn univariate_var(&self) -> Option<String> {
        let vars = self.variables();
        (vars.len() == 1).then(|| vars.into_iter().next().expect("one variable"))
    }

    /// Monic gcd when both operands involve at most one common variable;
    /// `None` for genuinely multivariate inputs.
    pub fn gcd_univariate(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
        let vars: BTreeSet<String> = a.variables().union(&b.variables()).cloned().collect();
        if vars.len() > 1 {
            return None;
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).ok()?;
            x = y;
            y = r;
        }
        Some(x.monic())
    }

    /// True iff every coefficient is real.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GScalar::is_real)
    }

    /// Rational roots of a univariate polynomial with real rational
    /// coefficients, sorted ascending.  Returns `None` when the polynomial is
    /// not univariate-real or its coefficients are too large to search.
    pub fn rational_roots(&self) -> Option<Vec<BigRational>> {
        let var = self.univariate_var()?;
        if !self.is_real() {
            return None;
        }
        let deg = self.degree_in(&var) as usize;
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.exponent(&var) as usize] = c.re().clone();
        }
        let lcm = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let low = ints.iter().position(|c| !c.is_zero())?;
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(BigRational::zero());
        }
        let a0 = ints[low].abs();
        let an = ints[deg].abs();
        let limit = BigInt::from(1_000_000_000_000i64);
        if a0 > limit || an > limit {
            return None;
        }
        let dp = divisors(a0.to_u64()?);
        let dq = divisors(an.to_u64()?);
        let mut seen = BTreeSet::new();
        for p in &dp {
            for q in &dq {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(BigInt::from(*p) * sign, BigInt::from(*q));
                    if seen.insert(cand.clone()) && horner(&ints[low..], &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Some(roots)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

fn horner(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

fn format_term(m: &Monomial, c: &GScalar) -> String {
    if m.is_one() {
        return c.to_string();
    }
    if c.is_one() {
        return m.to_string();
    }
    if (-c).is_one() {
        return format!("-{m}");
    }
    if c.is_real() || c.is_pure_imaginary() {
        format!("{c}*{m}")
    } else {
        format!("({c})*{m}")
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical form: terms in descending graded-lex order joined by
    /// ` + ` / ` - `; complex coefficients are parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let multi = self.terms.len() > 1;
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut s = format_term(m, c);
            if multi && m.is_one() && !c.is_real() && !c.is_pure_imaginary() {
                s = format!("({s})");
            }
            if idx == 0 {
                write!(f, "{s}")?;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<GScalar> for MultiPoly {
    fn from(c: GScalar) -> Self {
        MultiPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn x() -> MultiPoly {
        MultiPoly::var("x")
    }
    fn y() -> MultiPoly {
        MultiPoly::var("y")
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(GScalar::from_int(n))
    }

    #[test]
    fn arithmetic_cancels_to_structural_zero() {
        let p = &(&x() + &y()) * &(&x() - &y());
        let q = &(&x() * &x()) - &(&y() * &y());
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
    }

    #[test]
    fn graded_lex_display_order() {
        let p = &(&(&x() * &x()) + &y()) + &c(3);
        assert_eq!(p.to_string(), "x^2 + y + 3");
        let q = &MultiPoly::var("k").scale(&GScalar::i()) - &c(1);
        assert_eq!(q.to_string(), "i*k - 1");
    }

    #[test]
    fn exact_division_and_remainder() {
        let p = &(&x() * &x()) - &c(1);
        let d = &x() - &c(1);
        assert_eq!(p.exact_div(&d).unwrap(), &x() + &c(1));
        assert!((&p + &c(1)).exact_div(&d).is_none());
    }

    #[test]
    fn univariate_gcd() {
        let a = &(&x() - &c(1)) * &(&x() + &c(2));
        let b = &(&x() - &c(1)) * &(&x() - &c(5));
        assert_eq!(MultiPoly::gcd_univariate(&a, &b).unwrap(), &x() - &c(1));
        assert!(MultiPoly::gcd_univariate(&x(), &y()).is_none());
    }

    #[test]
    fn rational_roots_found() {
        // (2x − 1)(x + 3) x
        let p = &(&(&x().scale(&GScalar::from_int(2)) - &c(1)) * &(&x() + &c(3))) * &x();
        let roots = p.rational_roots().unwrap();
        assert_eq!(roots, vec![rat(-3, 1), rat(0, 1), rat(1, 2)]);
        assert_eq!((&(&x() * &x()) + &c(1)).rational_roots().unwrap(), Vec::<BigRational>::new());
    }

    #[test]
    fn monomial_content_split() {
        let p = &(&(&x() * &x()) * &y()) + &(&x() * &y()).scale(&GScalar::from_int(3));
        let (m, q) = p.monomial_content();
        assert_eq!(m.to_string(), "x*y");
        assert_eq!(q, &x() + &c(3));
    }

    #[test]
    fn evaluation_and_substitution() {
        let p = &(&x() * &y()) + &c(2);
        let mut pt = BTreeMap::new();
        pt.insert("x".to_string(), GScalar::from_int(3));
        assert!(p.eval(&pt).is_err());
        assert_eq!(p.substitute(&pt), &y().scale(&GScalar::from_int(3)) + &c(2));
        pt.insert("y".to_string(), GScalar::i());
        assert_eq!(p.eval(&pt).unwrap(), "2+3i".parse().unwrap());
    }
}
