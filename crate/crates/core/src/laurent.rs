//! Sparse Laurent polynomials in one variable `t` with arbitrary-precision
//! integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent, so iteration is always in
//! increasing exponent order and zero coefficients are never stored. The zero
//! polynomial is the empty map.
//!
//! The text format prints terms in descending exponent order:
//!
//! ```text
//! t^102 - t^101 + t^95 - 2t^37 - t + 1
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c * t^e`
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `t^e`
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(e, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `1 + t + ... + t^(n-1)`
    pub fn geometric(n: usize) -> Self {
        Self::from_terms((0..n as i64).map(|e| (e, 1)))
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient at exponent `e`, zero if absent.
    pub fn coefficient(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn evaluate_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Highest exponent minus lowest exponent.
    pub fn breadth(&self) -> Result<i64> {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => Ok(hi - lo),
            _ => Err(Error::EmptyPolynomial),
        }
    }

    /// Maps every exponent `e` to `-e`, i.e. `p(t) -> p(t^-1)`.
    pub fn substitute_inverse(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// `true` when the polynomial is `±t^k` for some `k`, i.e. a unit of the
    /// Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Long division driven by the lowest-exponent term of the divisor. The
    /// quotient of `a` by `b` in the Laurent ring has exponents within
    /// `[min(a) - min(b), max(a) - max(b)]`, which bounds the loop; any
    /// leftover remainder or non-integral leading quotient is reported as
    /// [`Error::NotDivisible`].
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (b_lo, b_lo_coeff) = match divisor.terms.iter().next() {
            Some((e, c)) => (*e, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let b_hi = divisor.max_exponent().unwrap();
        let q_hi = self.max_exponent().unwrap() - b_hi;

        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&r_lo, r_coeff)) = rem.terms.iter().next() {
            let q_exp = r_lo - b_lo;
            if q_exp > q_hi {
                return Err(Error::NotDivisible);
            }
            let (q_coeff, leftover) = r_coeff.div_rem(&b_lo_coeff);
            if !leftover.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (e, c) in &divisor.terms {
                rem.add_term(e + q_exp, -(c * &q_coeff));
            }
            quot.add_term(q_exp, q_coeff);
        }
        Ok(quot)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$inner(rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$inner(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$inner(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the canonical text format, plus some slack: arbitrary
    /// whitespace, `T` or `t`, an optional `*` between coefficient and
    /// variable, and braces around exponents (`T^{102}`).
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '{' && *c != '}')
            .map(|c| if c == 'T' { 't' } else { c })
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }

        // Split into signed chunks. A sign directly after '^' belongs to the
        // exponent.
        let mut chunks: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && prev.is_some() && prev != Some('^') {
                chunks.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        chunks.push(cur);

        let mut p = LaurentPoly::zero();
        for chunk in chunks {
            let (e, c) = parse_term(&chunk)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

fn parse_term(chunk: &str) -> Result<(i64, BigInt)> {
    let bad = || Error::Parse(format!("malformed term `{chunk}`"));
    let (negative, body) = match chunk.as_bytes().first() {
        Some(b'-') => (true, &chunk[1..]),
        Some(b'+') => (false, &chunk[1..]),
        _ => (false, chunk),
    };
    if body.is_empty() {
        return Err(bad());
    }

    let (coeff, exp) = match body.find('t') {
        None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
        Some(pos) => {
            let coeff_str = body[..pos].trim_end_matches('*');
            let coeff = if coeff_str.is_empty() {
                BigInt::one()
            } else {
                coeff_str.parse::<BigInt>().map_err(|_| bad())?
            };
            let rest = &body[pos + 1..];
            let exp = if rest.is_empty() {
                1
            } else if let Some(e) = rest.strip_prefix('^') {
                e.parse::<i64>().map_err(|_| bad())?
            } else {
                return Err(bad());
            };
            (coeff, exp)
        }
    };
    Ok((exp, if negative { -coeff } else { coeff }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancels_to_canonical_form() {
        assert_eq!(p("t - 1") + p("1"), p("t"));
        assert_eq!(LaurentPoly::zero() + p("t^3 - 2"), p("t^3 - 2"));
        assert_eq!(p("t^2 + t^-2") + p("t^2 - t^-2"), p("2t^2"));
        assert_eq!((p("t^2 + t^-2") + p("t^2 - t^-2")).num_terms(), 1);
        assert!((p("t - 1") - p("t - 1")).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("t - 1") * p("t + 1"), p("t^2 - 1"));
        assert_eq!(p("t^5 - 3t^-1") * LaurentPoly::one(), p("t^5 - 3t^-1"));
        assert_eq!(p("1 + t + t^2") * p("1 - t"), p("1 - t^3"));
        assert!((p("t") * LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p("t^2 - 1").exact_div(&p("t - 1")).unwrap(), p("t + 1"));
        assert_eq!(p("1 - t^3").exact_div(&p("1 + t + t^2")).unwrap(), p("1 - t"));
        assert_eq!(p("t^2 - 1").exact_div(&p("t + 2")), Err(Error::NotDivisible));
        assert_eq!(p("t^2 - 1").exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_div_rejects_non_integral_quotient() {
        assert_eq!(p("t + 1").exact_div(&p("2")), Err(Error::NotDivisible));
        assert_eq!(p("4t + 2").exact_div(&p("2")).unwrap(), p("2t + 1"));
    }

    #[test]
    fn exact_div_by_units() {
        assert_eq!(p("t^3 - t").exact_div(&p("-t^-2")).unwrap(), p("-t^5 + t^3"));
    }

    #[test]
    fn substitute_inverse_examples() {
        assert_eq!(p("t - 1 + t^-1").substitute_inverse(), p("t - 1 + t^-1"));
        assert_eq!(p("t^2").substitute_inverse(), p("t^-2"));
        assert!(LaurentPoly::zero().substitute_inverse().is_zero());
    }

    #[test]
    fn scalar_queries() {
        assert_eq!(p("t - 1 + t^-1").evaluate_at_one(), BigInt::from(1));
        assert_eq!(p("t^2 - 2t").coefficient(1), BigInt::from(-2));
        assert_eq!(p("t^2 - 2t").coefficient(7), BigInt::from(0));
        assert_eq!(p("t^3 + t^-4").breadth().unwrap(), 7);
        assert_eq!(LaurentPoly::zero().breadth(), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn display_format() {
        assert_eq!(p("1 - t + t^2").to_string(), "t^2 - t + 1");
        assert_eq!(p("-t^3 + 2t^-1 - 5").to_string(), "-t^3 - 5 + 2t^-1");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-2t").to_string(), "-2t");
    }

    #[test]
    fn parse_accepts_paper_notation() {
        let a = p("T^{102}    - T^{101} - 2 T^{65} + 3*t^4 - T + 1");
        assert_eq!(a.to_string(), "t^102 - t^101 - 2t^65 + 3t^4 - t + 1");
        assert_eq!(p("t^-3 - t^-1"), LaurentPoly::from_terms([(-3, 1), (-1, -1)]));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "t^", "x^2", "2t3", "--t", "t^1.5"] {
            assert!(s.parse::<LaurentPoly>().is_err(), "{s:?} should fail");
        }
    }

    #[test]
    fn big_coefficients_survive() {
        let big = p("1 + t").scale(&BigInt::from(u64::MAX));
        let sq = &big * &big;
        assert_eq!(sq.exact_div(&big).unwrap(), big);
        assert_eq!(sq.to_string().parse::<LaurentPoly>().unwrap(), sq);
    }
}
