//! Exact arithmetic over `Q` and over simple extensions `Q[α]/(p(α))`.
//!
//! A [`NumberField`] is described by a monic defining polynomial of degree at
//! most four. Degree one is `Q` itself. Elements are [`Scalar`]s: coefficient
//! vectors in the power basis `1, α, …, α^(n-1)`, always kept reduced modulo
//! the defining polynomial with rationals in lowest terms.
//!
//! Irreducibility of the defining polynomial is only partially checked (no
//! rational roots). Arithmetic in a field built from a reducible quartic is
//! undefined; inversion reports [`FieldError::ZeroDivisor`] when it notices.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("cyclotomic index {0} outside 1..=6")]
    OutOfRange(u32),
    #[error("discriminant {0} is the square of a rational")]
    SquareDiscriminant(Rational),
    #[error("discriminant is zero")]
    ZeroDiscriminant,
    #[error("defining polynomial is not monic")]
    NotMonic,
    #[error("defining polynomial has degree {0}, expected 1..=4")]
    UnsupportedDegree(usize),
    #[error("defining polynomial has the rational root {0}")]
    RationalRoot(Rational),
    #[error("constant term too large for the rational root test")]
    RootTestTooLarge,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is a zero divisor (defining polynomial is reducible)")]
    ZeroDivisor,
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("expected {expected} coefficients, got {found}")]
    CoefficientCount { expected: usize, found: usize },
    #[error("cannot parse rational `{0}`")]
    Parse(String),
}

struct FieldInner {
    /// `c0, c1, …, c_{n-1}, 1`
    poly: Vec<Rational>,
    name: String,
}

/// `Q` or `Q[α]/(p(α))`. Cloning is cheap.
#[derive(Clone)]
pub struct NumberField {
    inner: Arc<FieldInner>,
}

impl NumberField {
    /// The rational numbers.
    pub fn rationals() -> NumberField {
        static Q: OnceLock<NumberField> = OnceLock::new();
        Q.get_or_init(|| NumberField {
            inner: Arc::new(FieldInner {
                poly: vec![Rational::zero(), Rational::one()],
                name: "Q".to_string(),
            }),
        })
        .clone()
    }

    /// Builds `Q[α]/(p(α))` from the coefficients `c0, …, cn` of `p`
    /// (constant term first). Any degree-one polynomial yields `Q`.
    pub fn new(poly: Vec<Rational>) -> Result<NumberField, FieldError> {
        let poly = trim(poly);
        let degree = poly.len().saturating_sub(1);
        if degree == 0 || degree > 4 {
            return Err(FieldError::UnsupportedDegree(degree));
        }
        if !poly[degree].is_one() {
            return Err(FieldError::NotMonic);
        }
        if degree == 1 {
            return Ok(NumberField::rationals());
        }
        if let Some(root) = rational_root(&poly)? {
            return Err(FieldError::RationalRoot(root));
        }
        let name = format!("Q[a]/({})", format_poly(&poly, "a"));
        Ok(NumberField {
            inner: Arc::new(FieldInner { poly, name }),
        })
    }

    fn named(poly: Vec<Rational>, name: String) -> NumberField {
        NumberField {
            inner: Arc::new(FieldInner { poly, name }),
        }
    }

    /// `Q(ζ_n)` for `1 ≤ n ≤ 6`. For `n ∈ {1, 2}` this is `Q`.
    pub fn cyclotomic(n: u32) -> Result<NumberField, FieldError> {
        let ints: &[i64] = match n {
            1 | 2 => return Ok(NumberField::rationals()),
            3 => &[1, 1, 1],
            4 => &[1, 0, 1],
            5 => &[1, 1, 1, 1, 1],
            6 => &[1, -1, 1],
            _ => return Err(FieldError::OutOfRange(n)),
        };
        let poly = ints.iter().map(|&c| Rational::from_integer(c.into())).collect();
        Ok(NumberField::named(poly, format!("Q(zeta{n})")))
    }

    /// `Q[α]/(α² − D)` for a rational `D` that is not a square.
    pub fn quadratic(d: &Rational) -> Result<NumberField, FieldError> {
        if d.is_zero() {
            return Err(FieldError::ZeroDiscriminant);
        }
        if rational_sqrt(d).is_some() {
            return Err(FieldError::SquareDiscriminant(d.clone()));
        }
        let poly = vec![-d.clone(), Rational::zero(), Rational::one()];
        Ok(NumberField::named(poly, format!("Q(sqrt({d}))")))
    }

    pub fn degree(&self) -> usize {
        self.inner.poly.len() - 1
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn poly(&self) -> &[Rational] {
        &self.inner.poly
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn zero(&self) -> Scalar {
        Scalar {
            field: self.clone(),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(&self, r: Rational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = r;
        s
    }

    /// The class of `α`. In `Q` this is the root of the (linear) defining
    /// polynomial, i.e. zero for [`NumberField::rationals`].
    pub fn generator(&self) -> Scalar {
        if self.is_rationals() {
            return self.from_rational(-self.inner.poly[0].clone());
        }
        let mut s = self.zero();
        s.coeffs[1] = Rational::one();
        s
    }

    /// Element with the given power-basis coefficients (reduced on entry).
    pub fn element(&self, coeffs: Vec<Rational>) -> Result<Scalar, FieldError> {
        if coeffs.len() != self.degree() {
            return Err(FieldError::CoefficientCount {
                expected: self.degree(),
                found: coeffs.len(),
            });
        }
        Ok(Scalar {
            field: self.clone(),
            coeffs,
        })
    }

    fn reduce(&self, mut wide: Vec<Rational>) -> Vec<Rational> {
        let n = self.degree();
        let poly = &self.inner.poly;
        for k in (n..wide.len()).rev() {
            let lead = std::mem::take(&mut wide[k]);
            if lead.is_zero() {
                continue;
            }
            for (i, c) in poly[..n].iter().enumerate() {
                if !c.is_zero() {
                    wide[k - n + i] -= &lead * c;
                }
            }
        }
        wide.truncate(n);
        wide.resize(n, Rational::zero());
        wide
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.poly == other.inner.poly
    }
}

impl Eq for NumberField {}

impl Hash for NumberField {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.poly.hash(state);
    }
}

impl PartialOrd for NumberField {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumberField {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.inner.poly.cmp(&other.inner.poly))
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.name)
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.inner.name)
    }
}

/// `ζ_n` as an element of [`NumberField::cyclotomic`]`(n)`; `1` and `-1` in `Q`
/// for `n = 1, 2`.
pub fn root_of_unity(n: u32) -> Result<Scalar, FieldError> {
    let field = NumberField::cyclotomic(n)?;
    Ok(match n {
        1 => field.one(),
        2 => field.from_int(-1),
        _ => field.generator(),
    })
}

/// An exact element of a [`NumberField`].
///
/// The derived order (field, then lexicographic on coefficients) is a
/// deterministic total order for sorting and hashing only; it has nothing to
/// do with the field structure.
#[derive(Clone)]
pub struct Scalar {
    field: NumberField,
    coeffs: Vec<Rational>,
}

impl Scalar {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Power-basis coefficients, length = field degree.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.as_rational().and_then(rational_to_f64)
    }

    /// Re-expresses a rational element in another field.
    pub fn embed(&self, field: &NumberField) -> Result<Scalar, FieldError> {
        if &self.field == field {
            return Ok(self.clone());
        }
        match self.as_rational() {
            Some(r) if self.field.is_rationals() => Ok(field.from_rational(r.clone())),
            _ => Err(FieldError::FieldMismatch),
        }
    }

    fn check_field(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Scalar {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check_field(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Scalar {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check_field(other)?;
        let n = self.coeffs.len();
        if n == 1 {
            return Ok(self.field.from_rational(&self.coeffs[0] * &other.coeffs[0]));
        }
        let mut wide = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        Ok(Scalar {
            coeffs: self.field.reduce(wide),
            field: self.field.clone(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on the
    /// coefficient polynomial and the defining polynomial.
    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(self.field.from_rational(self.coeffs[0].recip()));
        }
        let mut r0 = self.field.poly().to_vec();
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return Err(FieldError::ZeroDivisor);
        }
        let scale = r0[0].recip();
        let mut coeffs: Vec<Rational> = s0.into_iter().map(|c| c * &scale).collect();
        coeffs.resize(self.coeffs.len(), Rational::zero());
        Ok(Scalar {
            coeffs: self.field.reduce(coeffs),
            field: self.field.clone(),
        })
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Re-reduces the coefficient vector. Elements are always kept
    /// canonical, so this is the identity; it exists for idempotence checks.
    pub fn canonicalized(&self) -> Scalar {
        Scalar {
            coeffs: self.field.reduce(self.coeffs.clone()),
            field: self.field.clone(),
        }
    }
}

/// Returns `true` iff the canonical coefficient vector is all zero.
pub fn scalar_is_zero(a: &Scalar) -> bool {
    a.is_zero()
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        f.write_str(&format_poly(&self.coeffs, "a"))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect(concat!("Scalar::", stringify!($method)))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

// Operators panic on field mismatch or division by zero; the checked_*
// methods report those as errors.
forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Parses `p/q` or `p` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational, FieldError> {
    Rational::from_str(s.trim()).map_err(|_| FieldError::Parse(s.to_string()))
}

/// The non-negative rational square root of `r`, if `r` is a rational square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn rational_to_f64(r: &Rational) -> Option<f64> {
    let n = r.numer().to_f64()?;
    let d = r.denom().to_f64()?;
    Some(n / d)
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Division with remainder; `b` must be trimmed and nonempty.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &c * bc;
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Rational root test for a monic polynomial with rational coefficients.
fn rational_root(poly: &[Rational]) -> Result<Option<Rational>, FieldError> {
    let n = poly.len() - 1;
    let lcm = poly
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    // q(y) = L^n p(y / L) is monic with integer coefficients
    let ints: Vec<BigInt> = (0..n)
        .map(|i| (&poly[i] * Rational::from_integer(num_traits::pow(lcm.clone(), n - i))).to_integer())
        .collect();
    let eval = |y: &BigInt| -> bool {
        let mut acc = BigInt::one();
        for c in ints.iter().rev() {
            acc = acc * y + c;
        }
        acc.is_zero()
    };
    if ints[0].is_zero() {
        return Ok(Some(Rational::zero()));
    }
    let c0 = ints[0]
        .abs()
        .to_u64()
        .filter(|&c| c <= 1_000_000_000_000)
        .ok_or(FieldError::RootTestTooLarge)?;
    let mut k = 1u64;
    while k * k <= c0 {
        if c0 % k == 0 {
            for div in [k, c0 / k] {
                for y in [BigInt::from(div), -BigInt::from(div)] {
                    if eval(&y) {
                        return Ok(Some(Rational::new(y, lcm.clone())));
                    }
                }
            }
        }
        k += 1;
    }
    Ok(None)
}

fn format_poly(coeffs: &[Rational], var: &str) -> String {
    let mut terms = vec![];
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        let body = match i {
            0 => format!("{mag}"),
            _ => {
                let power = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                if mag.is_one() {
                    power
                } else {
                    format!("{mag}*{power}")
                }
            }
        };
        terms.push((sign, body));
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (sign, body)) in terms.into_iter().enumerate() {
        match (k, sign) {
            (0, "-") => out.push('-'),
            (0, _) => {}
            (_, s) => {
                out.push(' ');
                out.push_str(s);
                out.push(' ');
            }
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn cyclotomic_polynomials() {
        let ints = |f: &NumberField| -> Vec<i64> {
            f.poly().iter().map(|c| c.to_integer().to_i64().unwrap()).collect()
        };
        assert_eq!(ints(&NumberField::cyclotomic(3).unwrap()), vec![1, 1, 1]);
        assert_eq!(ints(&NumberField::cyclotomic(4).unwrap()), vec![1, 0, 1]);
        assert_eq!(ints(&NumberField::cyclotomic(5).unwrap()), vec![1, 1, 1, 1, 1]);
        assert!(NumberField::cyclotomic(2).unwrap().is_rationals());
        assert_eq!(NumberField::cyclotomic(0), Err(FieldError::OutOfRange(0)));
        assert_eq!(NumberField::cyclotomic(7), Err(FieldError::OutOfRange(7)));
    }

    #[test]
    fn quadratic_fields() {
        let f = NumberField::quadratic(&q(2, 1)).unwrap();
        assert_eq!(f.poly(), &[q(-2, 1), q(0, 1), q(1, 1)]);
        let g = NumberField::quadratic(&q(-3, 1)).unwrap();
        assert_eq!(g.poly(), &[q(3, 1), q(0, 1), q(1, 1)]);
        assert_eq!(
            NumberField::quadratic(&q(4, 1)),
            Err(FieldError::SquareDiscriminant(q(4, 1)))
        );
        assert!(matches!(
            NumberField::quadratic(&q(9, 4)),
            Err(FieldError::SquareDiscriminant(_))
        ));
        assert_eq!(NumberField::quadratic(&q(0, 1)), Err(FieldError::ZeroDiscriminant));
    }

    #[test]
    fn omega_arithmetic() {
        let w = root_of_unity(3).unwrap();
        let f = w.field().clone();
        // ω² = −ω − 1
        assert_eq!(&w * &w, -&w - f.one());
        assert!((&w * (-&w - f.one())).is_one());
        // (1 + ω)⁻¹ = −ω
        assert_eq!((f.one() + &w).inv().unwrap(), -&w);
        assert!((&w * &w + &w + f.one()).is_zero());
    }

    #[test]
    fn zero_tests() {
        let qf = NumberField::rationals();
        assert!(scalar_is_zero(&qf.zero()));
        assert!(!scalar_is_zero(&qf.from_rational(q(1, 3))));
    }

    #[test]
    fn division_errors() {
        let qf = NumberField::rationals();
        assert_eq!(qf.one().checked_div(&qf.zero()), Err(FieldError::DivisionByZero));
        let w = root_of_unity(3).unwrap();
        assert_eq!(w.checked_add(&qf.one()), Err(FieldError::FieldMismatch));
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        for n in 1..=6u32 {
            let z = root_of_unity(n).unwrap();
            assert!(z.pow(n).is_one(), "zeta_{n}^{n} != 1");
            for m in 1..n {
                assert!(!z.pow(m).is_one(), "zeta_{n}^{m} == 1");
            }
        }
    }

    #[test]
    fn new_field_validation() {
        let ints = |v: &[i64]| v.iter().map(|&c| q(c, 1)).collect::<Vec<_>>();
        assert_eq!(NumberField::new(ints(&[1, 0, 2])), Err(FieldError::NotMonic));
        assert_eq!(
            NumberField::new(ints(&[-4, 0, 1])),
            Err(FieldError::RationalRoot(q(2, 1)))
        );
        assert_eq!(
            NumberField::new(vec![q(-1, 4), q(0, 1), q(1, 1)]),
            Err(FieldError::RationalRoot(q(1, 2)))
        );
        assert_eq!(
            NumberField::new(ints(&[1, 1, 1, 1, 1, 1])),
            Err(FieldError::UnsupportedDegree(5))
        );
        assert!(NumberField::new(ints(&[3, 1])).unwrap().is_rationals());
        let f = NumberField::new(ints(&[1, 1, 1])).unwrap();
        assert_eq!(f, NumberField::cyclotomic(3).unwrap());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_rational(" -6/4 ").unwrap(), q(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format!("{}", NumberField::rationals().from_rational(q(-3, 2))), "-3/2");
        let w = root_of_unity(3).unwrap();
        assert_eq!(format!("{}", -&w - w.field().one()), "-a - 1");
    }

    #[test]
    fn embedding() {
        let f = NumberField::cyclotomic(5).unwrap();
        let r = NumberField::rationals().from_rational(q(2, 7));
        assert_eq!(r.embed(&f).unwrap(), f.from_rational(q(2, 7)));
        assert!(f.generator().embed(&NumberField::rationals()).is_err());
    }
}
