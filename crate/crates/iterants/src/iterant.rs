//! The iterant algebra: two-phase oscillations and their views.
//!
//! An iterant view `[a,b]` is one period of the alternation `...abab...`
//! seen from a starting phase; `[b,a]` is the same process one time step
//! later. Views combine slot by slot. The temporal shift operator `eta`
//! satisfies `[a,b] eta = eta [b,a]` and `eta eta = 1`, and a general
//! element of the algebra is `A + B eta` with views `A`, `B`. The element
//! `i = [1,-1] eta` squares to `[-1,-1] = -1`, which is how the complex
//! numbers arise here, and the whole algebra is isomorphic to 2x2 matrix
//! algebra with the even view on the diagonal and the odd view on the
//! antidiagonal.

use std::fmt;

use serde_json::{json, Value};

use crate::error::Error;
use crate::scalar::{Backend, Scalar};
use crate::Result;

/// An ordered pair of scalars: one period of a two-phase oscillation.
///
/// `first` is the value seen at even time steps, `second` at odd ones.
/// Both slots share one scalar backend.
#[derive(Debug, Clone, PartialEq)]
pub struct IterantView {
    first: Scalar,
    second: Scalar,
}

impl IterantView {
    pub fn new(first: Scalar, second: Scalar) -> Result<IterantView> {
        if first.backend() != second.backend() {
            return Err(Error::BackendMismatch(first.backend(), second.backend()));
        }
        Ok(IterantView { first, second })
    }

    pub fn from_ints(first: i64, second: i64) -> IterantView {
        IterantView {
            first: Scalar::from_int(first),
            second: Scalar::from_int(second),
        }
    }

    pub fn zero(backend: Backend) -> IterantView {
        IterantView {
            first: Scalar::zero(backend),
            second: Scalar::zero(backend),
        }
    }

    pub fn one(backend: Backend) -> IterantView {
        IterantView {
            first: Scalar::one(backend),
            second: Scalar::one(backend),
        }
    }

    /// Constant view `[s,s]`, insensitive to the time step.
    pub fn constant(s: Scalar) -> IterantView {
        IterantView {
            second: s.clone(),
            first: s,
        }
    }

    pub fn first(&self) -> &Scalar {
        &self.first
    }

    pub fn second(&self) -> &Scalar {
        &self.second
    }

    pub fn backend(&self) -> Backend {
        self.first.backend()
    }

    /// The same process one time step later: `[a,b] -> [b,a]`.
    pub fn swap(&self) -> IterantView {
        IterantView {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }

    /// Slotwise product `[a,b][c,d] = [ac,bd]`.
    pub fn product(&self, other: &IterantView) -> Result<IterantView> {
        Ok(IterantView {
            first: self.first.mul(&other.first)?,
            second: self.second.mul(&other.second)?,
        })
    }

    pub fn add(&self, other: &IterantView) -> Result<IterantView> {
        Ok(IterantView {
            first: self.first.add(&other.first)?,
            second: self.second.add(&other.second)?,
        })
    }

    pub fn sub(&self, other: &IterantView) -> Result<IterantView> {
        Ok(IterantView {
            first: self.first.sub(&other.first)?,
            second: self.second.sub(&other.second)?,
        })
    }

    pub fn neg(&self) -> IterantView {
        IterantView {
            first: self.first.neg(),
            second: self.second.neg(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Result<IterantView> {
        Ok(IterantView {
            first: self.first.mul(s)?,
            second: self.second.mul(s)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    /// `[a,a]`: unchanged by a time step.
    pub fn is_symmetric(&self) -> bool {
        self.first == self.second
    }

    /// `[b,-b]`: negated by a time step.
    pub fn is_antisymmetric(&self) -> bool {
        self.first == self.second.neg()
    }
}

impl fmt::Display for IterantView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.first, self.second)
    }
}

/// A full element of the iterant algebra: `even + odd * eta`.
///
/// Addition is slotwise. Multiplication is fixed by `[a,b] eta = eta [b,a]`
/// and `eta eta = 1`:
///
/// ```text
/// (A + B eta)(C + D eta) = (A C + B swap(D)) + (A D + B swap(C)) eta
/// ```
///
/// General elements do not commute; the embedded complex subring does.
#[derive(Debug, Clone, PartialEq)]
pub struct IterantElement {
    even: IterantView,
    odd: IterantView,
}

impl IterantElement {
    pub fn new(even: IterantView, odd: IterantView) -> Result<IterantElement> {
        if even.backend() != odd.backend() {
            return Err(Error::BackendMismatch(even.backend(), odd.backend()));
        }
        Ok(IterantElement { even, odd })
    }

    /// The view `V` as the element `V + 0 eta`.
    pub fn from_view(even: IterantView) -> IterantElement {
        let odd = IterantView::zero(even.backend());
        IterantElement { even, odd }
    }

    pub fn zero(backend: Backend) -> IterantElement {
        IterantElement {
            even: IterantView::zero(backend),
            odd: IterantView::zero(backend),
        }
    }

    /// The two-sided multiplicative identity `[1,1] + [0,0] eta`.
    pub fn one(backend: Backend) -> IterantElement {
        IterantElement {
            even: IterantView::one(backend),
            odd: IterantView::zero(backend),
        }
    }

    /// The temporal shift operator as an element: `[0,0] + [1,1] eta`.
    pub fn eta(backend: Backend) -> IterantElement {
        IterantElement {
            even: IterantView::zero(backend),
            odd: IterantView::one(backend),
        }
    }

    /// The square root of minus one, `i = [1,-1] eta`.
    pub fn i(backend: Backend) -> IterantElement {
        let one = Scalar::one(backend);
        IterantElement {
            even: IterantView::zero(backend),
            odd: IterantView::new(one.clone(), one.neg()).expect("same backend"),
        }
    }

    /// Embeds the complex number `re + im*i` as `[re,re] + [im,-im] eta`.
    ///
    /// This is a ring homomorphism onto its image: the elements whose even
    /// view is symmetric and whose odd view is antisymmetric.
    pub fn from_complex(re: Scalar, im: Scalar) -> Result<IterantElement> {
        if re.backend() != im.backend() {
            return Err(Error::BackendMismatch(re.backend(), im.backend()));
        }
        Ok(IterantElement {
            even: IterantView::constant(re),
            odd: IterantView::new(im.clone(), im.neg()).expect("same backend"),
        })
    }

    /// Embeds a real scalar as `[s,s]`.
    pub fn from_real(s: Scalar) -> IterantElement {
        IterantElement {
            odd: IterantView::zero(s.backend()),
            even: IterantView::constant(s),
        }
    }

    /// Inverse of [`IterantElement::from_complex`] where defined: the
    /// `(re, im)` pair if the element lies in the embedded complex subring.
    pub fn to_complex(&self) -> Option<(Scalar, Scalar)> {
        if self.even.is_symmetric() && self.odd.is_antisymmetric() {
            Some((self.even.first.clone(), self.odd.first.clone()))
        } else {
            None
        }
    }

    pub fn even(&self) -> &IterantView {
        &self.even
    }

    pub fn odd(&self) -> &IterantView {
        &self.odd
    }

    pub fn backend(&self) -> Backend {
        self.even.backend()
    }

    pub fn add(&self, other: &IterantElement) -> Result<IterantElement> {
        Ok(IterantElement {
            even: self.even.add(&other.even)?,
            odd: self.odd.add(&other.odd)?,
        })
    }

    pub fn sub(&self, other: &IterantElement) -> Result<IterantElement> {
        Ok(IterantElement {
            even: self.even.sub(&other.even)?,
            odd: self.odd.sub(&other.odd)?,
        })
    }

    pub fn neg(&self) -> IterantElement {
        IterantElement {
            even: self.even.neg(),
            odd: self.odd.neg(),
        }
    }

    /// The unique product consistent with `[a,b] eta = eta [b,a]` and
    /// `eta eta = 1`; the `eta^2` contribution lands in the even part.
    pub fn mul(&self, other: &IterantElement) -> Result<IterantElement> {
        let (a, b) = (&self.even, &self.odd);
        let (c, d) = (&other.even, &other.odd);
        Ok(IterantElement {
            even: a.product(c)?.add(&b.product(&d.swap())?)?,
            odd: a.product(d)?.add(&b.product(&c.swap())?)?,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Result<IterantElement> {
        Ok(IterantElement {
            even: self.even.scale(s)?,
            odd: self.odd.scale(s)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Negates the odd view. On the embedded subring this is complex
    /// conjugation.
    pub fn conjugate(&self) -> IterantElement {
        IterantElement {
            even: self.even.clone(),
            odd: self.odd.neg(),
        }
    }

    /// Matrix form: even view on the diagonal, odd view on the
    /// antidiagonal. A ring isomorphism onto 2x2 matrix algebra.
    pub fn to_matrix(&self) -> Matrix2 {
        Matrix2 {
            m11: self.even.first.clone(),
            m22: self.even.second.clone(),
            m12: self.odd.first.clone(),
            m21: self.odd.second.clone(),
        }
    }

    /// Inverse of [`IterantElement::to_matrix`].
    pub fn from_matrix(m: &Matrix2) -> IterantElement {
        IterantElement {
            even: IterantView {
                first: m.m11.clone(),
                second: m.m22.clone(),
            },
            odd: IterantView {
                first: m.m12.clone(),
                second: m.m21.clone(),
            },
        }
    }

    /// Multiplicative inverse, decided by the matrix determinant.
    pub fn inverse(&self) -> Result<IterantElement> {
        let inv = self.to_matrix().inverse()?;
        Ok(IterantElement::from_matrix(&inv))
    }

    /// Integer power. Negative exponents require an invertible element.
    pub fn pow(&self, exponent: i32) -> Result<IterantElement> {
        let base = if exponent < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut acc = IterantElement::one(self.backend());
        for _ in 0..exponent.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Largest absolute value among the four scalar slots, i.e. the
    /// max-norm of the matrix form.
    pub fn magnitude(&self) -> Scalar {
        let candidates = [
            self.even.first.abs(),
            self.even.second.abs(),
            self.odd.first.abs(),
            self.odd.second.abs(),
        ];
        let mut best = Scalar::zero(self.backend());
        for c in candidates {
            if c.compare(&best).map(|o| o.is_gt()).unwrap_or(true) {
                best = c;
            }
        }
        best
    }

    /// Slotwise comparison within `tol` (use a zero tolerance on the exact
    /// backend).
    pub fn approx_eq(&self, other: &IterantElement, tol: &Scalar) -> Result<bool> {
        Ok(self.sub(other)?.magnitude().compare(tol)? != std::cmp::Ordering::Greater)
    }

    /// Canonical text form `[[a,b],[c,d]]`: even view then odd view.
    pub fn to_text(&self) -> String {
        format!("[{},{}]", self.even, self.odd)
    }

    /// Parses the canonical text form on the given backend. Round-trips
    /// bit-exactly with [`IterantElement::to_text`].
    pub fn parse(text: &str, backend: Backend) -> Result<IterantElement> {
        let s = text.trim();
        let inner = s
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("expected [[a,b],[c,d]], got {s:?}")))?;
        let parts: Vec<&str> = inner.split("],[").collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected two views in {s:?}")));
        }
        let view = |part: &str| -> Result<IterantView> {
            let slots: Vec<&str> = part.split(',').collect();
            if slots.len() != 2 {
                return Err(Error::Parse(format!("expected two slots in {part:?}")));
            }
            IterantView::new(
                Scalar::parse(slots[0], backend)?,
                Scalar::parse(slots[1], backend)?,
            )
        };
        IterantElement::new(view(parts[0])?, view(parts[1])?)
    }

    /// JSON form `{"even":[a,b],"odd":[c,d]}`. Exact scalars are rendered
    /// as rational strings, floats as numbers.
    pub fn to_json(&self) -> Result<Value> {
        let slot = |s: &Scalar| -> Result<Value> {
            Ok(match s {
                Scalar::Exact(_) => Value::String(s.to_string()),
                Scalar::Float(x) => serde_json::Number::from_f64(*x)
                    .map(Value::Number)
                    .ok_or_else(|| Error::Parse(format!("non-finite float {x}")))?,
            })
        };
        Ok(json!({
            "even": [slot(&self.even.first)?, slot(&self.even.second)?],
            "odd": [slot(&self.odd.first)?, slot(&self.odd.second)?],
        }))
    }

    /// Parses the JSON form; the backend is inferred from the slot kind
    /// (strings are exact rationals, numbers are floats).
    pub fn from_json(value: &Value) -> Result<IterantElement> {
        let view = |key: &str| -> Result<IterantView> {
            let pair = value
                .get(key)
                .and_then(Value::as_array)
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse(format!("missing view {key:?}")))?;
            let slot = |v: &Value| -> Result<Scalar> {
                match v {
                    Value::String(s) => Scalar::parse(s, Backend::Exact),
                    Value::Number(n) => n
                        .as_f64()
                        .map(Scalar::from_f64)
                        .ok_or_else(|| Error::Parse(format!("bad number {n}"))),
                    other => Err(Error::Parse(format!("bad scalar {other}"))),
                }
            };
            IterantView::new(slot(&pair[0])?, slot(&pair[1])?)
        };
        IterantElement::new(view("even")?, view("odd")?)
    }
}

impl fmt::Display for IterantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// A 2x2 matrix of scalars, the target of the iterant isomorphism.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix2 {
    pub m11: Scalar,
    pub m12: Scalar,
    pub m21: Scalar,
    pub m22: Scalar,
}

impl Matrix2 {
    pub fn new(m11: Scalar, m12: Scalar, m21: Scalar, m22: Scalar) -> Matrix2 {
        Matrix2 { m11, m12, m21, m22 }
    }

    pub fn identity(backend: Backend) -> Matrix2 {
        Matrix2 {
            m11: Scalar::one(backend),
            m12: Scalar::zero(backend),
            m21: Scalar::zero(backend),
            m22: Scalar::one(backend),
        }
    }

    pub fn add(&self, other: &Matrix2) -> Result<Matrix2> {
        Ok(Matrix2 {
            m11: self.m11.add(&other.m11)?,
            m12: self.m12.add(&other.m12)?,
            m21: self.m21.add(&other.m21)?,
            m22: self.m22.add(&other.m22)?,
        })
    }

    pub fn mul(&self, other: &Matrix2) -> Result<Matrix2> {
        let dot = |a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar| -> Result<Scalar> {
            a.mul(b)?.add(&c.mul(d)?)
        };
        Ok(Matrix2 {
            m11: dot(&self.m11, &other.m11, &self.m12, &other.m21)?,
            m12: dot(&self.m11, &other.m12, &self.m12, &other.m22)?,
            m21: dot(&self.m21, &other.m11, &self.m22, &other.m21)?,
            m22: dot(&self.m21, &other.m12, &self.m22, &other.m22)?,
        })
    }

    pub fn det(&self) -> Result<Scalar> {
        self.m11.mul(&self.m22)?.sub(&self.m12.mul(&self.m21)?)
    }

    pub fn inverse(&self) -> Result<Matrix2> {
        let det = self.det()?;
        if det.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(Matrix2 {
            m11: self.m22.div(&det)?,
            m12: self.m12.neg().div(&det)?,
            m21: self.m21.neg().div(&det)?,
            m22: self.m11.div(&det)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.m11.is_zero() && self.m12.is_zero() && self.m21.is_zero() && self.m22.is_zero()
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.m11, self.m12, self.m21, self.m22
        )
    }
}

/// The step-by-step evaluation of `i*i`, each line machine-checked.
///
/// Returns the printable chain and the final element, which is asserted to
/// be the real element `-1`. The last line is `[-1,-1] = -1`.
pub fn i_squared_trace() -> Result<(Vec<String>, IterantElement)> {
    let backend = Backend::Exact;
    let i = IterantElement::i(backend);
    let view = IterantView::from_ints(1, -1);

    let mut lines = Vec::new();
    lines.push("i = [1,-1]η".to_string());
    lines.push("i·i = [1,-1]η [1,-1]η".to_string());

    // Moving [1,-1] leftward past eta swaps it: [a,b]η = η[b,a].
    let swapped = view.swap();
    lines.push(format!("    = [1,-1]{} ηη", swapped));

    let slotwise = view.product(&swapped)?;
    lines.push(format!("    = {} ηη", slotwise));

    // ηη = 1 drops the shift operators.
    let eta = IterantElement::eta(backend);
    let eta_squared = eta.mul(&eta)?;
    if eta_squared != IterantElement::one(backend) {
        return Err(Error::DerivationStep("eta squared must be the identity"));
    }
    lines.push(format!("    = {}", slotwise));

    let product = i.mul(&i)?;
    let minus_one = IterantElement::from_real(Scalar::from_int(-1));
    if product != minus_one || IterantElement::from_view(slotwise.clone()) != minus_one {
        return Err(Error::DerivationStep("i squared must equal -1"));
    }
    lines.push(format!("{} = -1", slotwise));
    Ok((lines, product))
}
