//! Exact arithmetic in the Laurent polynomial ring `Z[t, t^-1]`.
//!
//! A [`LaurentPoly`] is stored densely: an `offset` (the lowest exponent with
//! a nonzero coefficient) and the coefficient run starting at that exponent.
//! Every constructor trims, so two equal polynomials always have identical
//! representations and derived equality is structural.
//!
//! [`AlexanderClass`] is the normal form of a polynomial up to the units
//! `±t^k`: offset 0 and positive leading coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    /// Builds `sum coeffs[i] * t^(offset + i)` and trims zero ends.
    pub fn new(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { offset, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(offset: i64, coeffs: &[i64]) -> Self {
        Self::new(offset, coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(0, vec![c.into()])
    }

    /// `c * t^k`
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        Self::new(k, vec![c.into()])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    fn trim(&mut self) {
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.offset = 0;
            return;
        }
        self.coeffs.drain(..lead_zeros);
        self.offset += lead_zeros as i64;
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn max_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> BigInt {
        let idx = k - self.offset;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Iterator over `(exponent, coefficient)` for the nonzero terms, lowest first.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.offset, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Evaluates at a nonzero integer. The result is exact; it is an integer
    /// whenever the offset is nonnegative or `x = ±1`.
    pub fn eval(&self, x: &BigInt) -> Result<BigRational> {
        if x.is_zero() {
            return Err(Error::EvalAtZero);
        }
        // Horner on the coefficient run, then apply t^offset.
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        let scale = num_traits::pow(x.clone(), self.offset.unsigned_abs() as usize);
        Ok(if self.offset >= 0 {
            BigRational::from_integer(acc * scale)
        } else {
            BigRational::new(acc, scale)
        })
    }

    /// True iff the polynomial is `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    /// Normal form up to units: shifted to offset 0 with positive leading coefficient.
    pub fn canonicalize(&self) -> AlexanderClass {
        if self.is_zero() {
            return AlexanderClass(Self::zero());
        }
        let mut coeffs = self.coeffs.clone();
        if coeffs.last().is_some_and(|c| c.is_negative()) {
            coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        AlexanderClass(LaurentPoly { offset: 0, coeffs })
    }

    /// Substitutes `t -> t^-1`.
    pub fn invert_variable(&self) -> Self {
        match self.max_exponent() {
            None => Self::zero(),
            Some(top) => LaurentPoly {
                offset: -top,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// Exact quotient in `Z[t, t^-1]`, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = &divisor.coeffs;
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return None;
        }
        let dlead = d.last().expect("nonzero divisor");
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.offset - divisor.offset, quot))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.max_exponent().max(rhs.max_exponent()).unwrap();
        let coeffs = (lo..=hi).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.offset + rhs.offset, out)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl crate::ring::IntegralDomain for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn one() -> Self {
        LaurentPoly::one()
    }

    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, divisor)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Formats as `t^2 - 3*t + 1`: highest exponent first, unit coefficients elided.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (i, (k, c)) in terms.into_iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if k == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

struct Cursor<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            input: self.src.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }
}

/// Parses sums of terms `c*t^k`. The `*` is optional, `t^-1` gives negative
/// exponents, and repeated exponents are summed.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor {
            src: s,
            bytes: s.as_bytes(),
            pos: 0,
        };
        let mut acc = LaurentPoly::zero();
        let mut first = true;
        loop {
            cur.skip_ws();
            if cur.peek().is_none() {
                if first {
                    return Err(cur.err("empty polynomial"));
                }
                break;
            }
            let negative = cur.eat(b'-');
            if !negative && !cur.eat(b'+') && !first {
                return Err(cur.err("expected '+' or '-' between terms"));
            }
            first = false;

            let coeff = match cur.digits() {
                Some(d) => Some(d.parse::<BigInt>().map_err(|_| cur.err("bad integer"))?),
                None => None,
            };
            let star = coeff.is_some() && cur.eat(b'*');
            let exponent = if cur.eat(b't') {
                if cur.eat(b'^') {
                    let neg = if cur.eat(b'-') {
                        true
                    } else {
                        cur.eat(b'+');
                        false
                    };
                    let d = cur.digits().ok_or_else(|| cur.err("expected exponent"))?;
                    let e: i64 = d.parse().map_err(|_| cur.err("exponent too large"))?;
                    if neg {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                }
            } else {
                if star {
                    return Err(cur.err("expected 't' after '*'"));
                }
                if coeff.is_none() {
                    return Err(cur.err("expected a term"));
                }
                0
            };
            let mut c = coeff.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            acc = acc + LaurentPoly::monomial(c, exponent);
        }
        Ok(acc)
    }
}

/// A Laurent polynomial normalized up to the units `±t^k`.
///
/// The wrapped polynomial is zero, or has offset 0 and a positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlexanderClass(LaurentPoly);

impl AlexanderClass {
    pub fn polynomial(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_polynomial(self) -> LaurentPoly {
        self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn one() -> Self {
        AlexanderClass(LaurentPoly::one())
    }
}

impl fmt::Display for AlexanderClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<&LaurentPoly> for AlexanderClass {
    fn from(p: &LaurentPoly) -> Self {
        p.canonicalize()
    }
}
