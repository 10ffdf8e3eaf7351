//! Scalar coefficients with a selectable backend.
//!
//! A [`Scalar`] is either an exact arbitrary-precision rational or an IEEE
//! double. The backend is chosen at construction and preserved through
//! arithmetic; mixing backends is an error, never a coercion. Algebraic
//! laws hold exactly on the exact backend, while float comparisons take a
//! caller-supplied tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// The numeric backend of a [`Scalar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    /// Exact rational arithmetic with arbitrary precision.
    Exact,
    /// IEEE 754 double precision.
    Float,
}

/// An exact rational or a double, fixed at construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn from_int(n: i64) -> Scalar {
        Scalar::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact rational `p/q`.
    pub fn from_ratio(p: i64, q: i64) -> Result<Scalar> {
        if q == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Scalar::Exact(BigRational::new(
            BigInt::from(p),
            BigInt::from(q),
        )))
    }

    pub fn from_f64(x: f64) -> Scalar {
        Scalar::Float(x)
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::Exact(r)
    }

    pub fn zero(backend: Backend) -> Scalar {
        match backend {
            Backend::Exact => Scalar::Exact(BigRational::zero()),
            Backend::Float => Scalar::Float(0.0),
        }
    }

    pub fn one(backend: Backend) -> Scalar {
        match backend {
            Backend::Exact => Scalar::Exact(BigRational::one()),
            Backend::Float => Scalar::Float(1.0),
        }
    }

    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Exact(_) => Backend::Exact,
            Scalar::Float(_) => Backend::Float,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::BackendMismatch(self.backend(), other.backend())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a + b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a + b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a - b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a - b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a * b)),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a * b)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                if b.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Exact(a / b))
            }
            (Scalar::Float(a), Scalar::Float(b)) => {
                if *b == 0.0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Float(a / b))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(-a),
            Scalar::Float(a) => Scalar::Float(-a),
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(a.abs()),
            Scalar::Float(a) => Scalar::Float(a.abs()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(a) => a.is_zero(),
            Scalar::Float(a) => *a == 0.0,
        }
    }

    pub fn square(&self) -> Scalar {
        // same backend by construction, cannot fail
        self.mul(self).expect("same backend")
    }

    /// Total order on same-backend scalars; NaN is not comparable.
    pub fn compare(&self, other: &Scalar) -> Result<Ordering> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(a.cmp(b)),
            (Scalar::Float(a), Scalar::Float(b)) => a.partial_cmp(b).ok_or(Error::NotComparable),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Scalar::Exact(a) => a.is_positive(),
            Scalar::Float(a) => *a > 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Exact(a) => a.is_negative(),
            Scalar::Float(a) => *a < 0.0,
        }
    }

    /// `|self - other| <= tol`. The tolerance is caller-supplied; there is
    /// no global default. Exact comparisons should pass a zero tolerance.
    pub fn approx_eq(&self, other: &Scalar, tol: &Scalar) -> Result<bool> {
        let diff = self.sub(other)?.abs();
        Ok(diff.compare(tol)? != Ordering::Greater)
    }

    /// Numeric value as a double (lossy on the exact backend).
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(a) => a.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(a) => *a,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(a) => Some(a),
            Scalar::Float(_) => None,
        }
    }

    /// Parses a scalar on the chosen backend.
    ///
    /// The exact backend accepts integers (`-3`), ratios (`3/2`) and
    /// decimal text (`0.25`), all read exactly. The float backend accepts
    /// anything `f64::from_str` does.
    pub fn parse(text: &str, backend: Backend) -> Result<Scalar> {
        match backend {
            Backend::Exact => parse_exact(text).map(Scalar::Exact),
            Backend::Float => f64::from_str(text)
                .map(Scalar::Float)
                .map_err(|e| Error::Parse(format!("bad float {text:?}: {e}"))),
        }
    }
}

fn parse_exact(text: &str) -> Result<BigRational> {
    let s = text.trim();
    let bad = |why: &str| Error::Parse(format!("bad rational {s:?}: {why}"));
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad("numerator"))?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad("denominator"))?;
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.trim_start().starts_with('-');
        let int = BigInt::from_str(int).map_err(|_| bad("integer part"))?;
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("fractional part"));
        }
        let digits = BigInt::from_str(frac).map_err(|_| bad("fractional part"))?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac = BigRational::new(digits, scale);
        let int = BigRational::from_integer(int);
        return Ok(if negative { int - frac } else { int + frac });
    }
    BigInt::from_str(s)
        .map(BigRational::from_integer)
        .map_err(|_| bad("integer"))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(a) => {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            Scalar::Float(a) => write!(f, "{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Scalar {
        Scalar::from_ratio(p, d).unwrap()
    }

    #[test]
    fn backend_mismatch_is_an_error() {
        let a = Scalar::from_int(1);
        let b = Scalar::from_f64(1.0);
        assert!(matches!(a.add(&b), Err(Error::BackendMismatch(_, _))));
        assert!(matches!(b.mul(&a), Err(Error::BackendMismatch(_, _))));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Scalar::from_ratio(1, 0), Err(Error::ZeroDenominator));
        assert_eq!(
            Scalar::parse("1/0", Backend::Exact),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn exact_division_by_zero() {
        let a = Scalar::from_int(3);
        assert_eq!(a.div(&Scalar::from_int(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn decimal_text_reads_exactly() {
        assert_eq!(Scalar::parse("0.25", Backend::Exact).unwrap(), q(1, 4));
        assert_eq!(Scalar::parse("-1.5", Backend::Exact).unwrap(), q(-3, 2));
        assert_eq!(Scalar::parse("3/2", Backend::Exact).unwrap(), q(3, 2));
        assert_eq!(
            Scalar::parse("7", Backend::Exact).unwrap(),
            Scalar::from_int(7)
        );
    }

    #[test]
    fn display_round_trips() {
        for s in [q(-3, 2), Scalar::from_int(4), q(22, 7)] {
            let text = s.to_string();
            assert_eq!(Scalar::parse(&text, Backend::Exact).unwrap(), s);
        }
        let f = Scalar::from_f64(0.1 + 0.2);
        let text = f.to_string();
        assert_eq!(Scalar::parse(&text, Backend::Float).unwrap(), f);
    }

    #[test]
    fn approx_eq_uses_caller_tolerance() {
        let a = Scalar::from_f64(1.0);
        let b = Scalar::from_f64(1.0 + 1e-12);
        assert!(a.approx_eq(&b, &Scalar::from_f64(1e-9)).unwrap());
        assert!(!a.approx_eq(&b, &Scalar::from_f64(1e-15)).unwrap());
    }

    #[test]
    fn nan_comparison_is_an_error() {
        let a = Scalar::from_f64(f64::NAN);
        assert_eq!(a.compare(&Scalar::from_f64(0.0)), Err(Error::NotComparable));
    }
}
