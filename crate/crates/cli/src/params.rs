//! Parsing of inline fields and family parameters.
//!
//! Fields: `Q`, `zetaN` (`N ≤ 6`), `sqrt(D)`, `poly:c0,c1,...,1` (constant
//! term first) or a JSON object `{"poly": [...]}`.
//! Scalars: a rational `p/q`, or `(c0,c1,...)` in the power basis of the
//! field's generator. A point of P¹ is `r` (meaning `[r:1]`) or `a:b`; a
//! point of P² is `a:b:c`.

use knet_core::families::{P1, P2};
use knet_core::io::{field_from_json, parse};
use knet_core::scalar::parse_rational;
use knet_core::{NumberField, Rational, Scalar};

pub fn parse_field(decl: &str) -> Result<NumberField, String> {
    let decl = decl.trim();
    let err = |e: &dyn std::fmt::Display| format!("bad field {decl:?}: {e}");
    if decl.starts_with('{') {
        let v = parse(decl).map_err(|e| err(&e))?;
        return field_from_json(Some(&v)).map_err(|e| err(&e));
    }
    if decl == "Q" {
        return Ok(NumberField::rationals());
    }
    if let Some(n) = decl.strip_prefix("zeta") {
        let n: u32 = n.parse().map_err(|e| err(&e))?;
        return NumberField::cyclotomic(n).map_err(|e| err(&e));
    }
    if let Some(d) = decl.strip_prefix("sqrt(").and_then(|s| s.strip_suffix(')')) {
        let d = parse_rational(d.trim()).map_err(|e| err(&e))?;
        return NumberField::quadratic(&d).map_err(|e| err(&e));
    }
    if let Some(list) = decl.strip_prefix("poly:") {
        let poly = list
            .split(',')
            .map(|c| parse_rational(c.trim()))
            .collect::<Result<Vec<Rational>, _>>()
            .map_err(|e| err(&e))?;
        return NumberField::new(poly).map_err(|e| err(&e));
    }
    Err(format!("bad field {decl:?}: expected Q, zetaN, sqrt(D), poly:c0,...,cn or JSON"))
}

pub fn parse_scalar(field: &NumberField, token: &str) -> Result<Scalar, String> {
    let token = token.trim();
    if let Some(list) = token.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        let mut coeffs = list
            .split(',')
            .map(|c| parse_rational(c.trim()))
            .collect::<Result<Vec<Rational>, _>>()
            .map_err(|e| format!("bad scalar {token:?}: {e}"))?;
        if coeffs.len() > field.degree() {
            return Err(format!("scalar {token:?} has more than {} coefficients", field.degree()));
        }
        coeffs.resize(field.degree(), Rational::from_integer(0.into()));
        return field.element(coeffs).map_err(|e| format!("bad scalar {token:?}: {e}"));
    }
    parse_rational(token).map(|r| field.from_rational(r)).map_err(|e| format!("bad scalar {token:?}: {e}"))
}

fn split<const N: usize>(field: &NumberField, text: &str) -> Result<[Scalar; N], String> {
    let parts = text.split(':').map(|t| parse_scalar(field, t)).collect::<Result<Vec<_>, _>>()?;
    let parts: [Scalar; N] = parts.try_into().map_err(|_| format!("{text:?} needs {N} coordinates"))?;
    if parts.iter().all(Scalar::is_zero) {
        return Err(format!("{text:?} is the zero vector"));
    }
    Ok(parts)
}

pub fn parse_p1(field: &NumberField, text: &str) -> Result<P1, String> {
    if text.contains(':') {
        split::<2>(field, text)
    } else {
        Ok([parse_scalar(field, text)?, field.one()])
    }
}

pub fn parse_p2(field: &NumberField, text: &str) -> Result<P2, String> {
    split::<3>(field, text)
}
