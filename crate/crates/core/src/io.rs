//! JSON exchange format.
//!
//! A file declares its field once as `{"field": {"poly": ["c0", ..., "1"]}}`
//! (absent means `Q`). Rationals are strings `"p/q"`; elements of an
//! extension are `{"coeffs": ["p/q", ...]}`, and plain strings are accepted
//! there as rationals. Points and lines are arrays of three scalars.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::families::FamilyError;
use crate::geom::{GeomError, ProjLine, ProjPoint};
use crate::latin::{LatinError, LatinSquare};
use crate::net::{KNetConfig, LineClass, NetError};
use crate::pencil::{DegreeForm, PencilError};
use crate::scalar::{parse_rational, FieldError, NumberField, Rational, Scalar};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Latin(#[from] LatinError),
    #[error(transparent)]
    Net(#[from] NetError),
    #[error(transparent)]
    Pencil(#[from] PencilError),
}

impl From<FamilyError> for FormatError {
    fn from(e: FamilyError) -> Self {
        FormatError::Shape(e.to_string())
    }
}

fn shape(msg: impl Into<String>) -> FormatError {
    FormatError::Shape(msg.into())
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value, FormatError> {
    v.get(key).ok_or_else(|| shape(format!("missing key {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, FormatError> {
    v.as_array().ok_or_else(|| shape(format!("{what} must be an array")))
}

fn rational_from_json(v: &Value) -> Result<Rational, FormatError> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().expect("checked").into())),
        _ => Err(shape(format!("expected a rational string, got {v}"))),
    }
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn field_from_json(v: Option<&Value>) -> Result<NumberField, FormatError> {
    let Some(v) = v else {
        return Ok(NumberField::rationals());
    };
    let poly = array(get(v, "poly")?, "field poly")?
        .iter()
        .map(rational_from_json)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NumberField::new(poly)?)
}

pub fn field_to_json(field: &NumberField) -> Value {
    json!({ "poly": field.poly().iter().map(rational_to_json).collect::<Vec<_>>() })
}

pub fn scalar_from_json(field: &NumberField, v: &Value) -> Result<Scalar, FormatError> {
    match v {
        Value::Object(_) => {
            let coeffs = array(get(v, "coeffs")?, "coeffs")?
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(field.element(coeffs)?)
        }
        _ => Ok(field.from_rational(rational_from_json(v)?)),
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s.as_rational() {
        Some(r) if s.field().is_rationals() => rational_to_json(r),
        _ => json!({ "coeffs": s.coeffs().iter().map(rational_to_json).collect::<Vec<_>>() }),
    }
}

fn triple(field: &NumberField, v: &Value) -> Result<[Scalar; 3], FormatError> {
    let items = array(v, "a point or line")?;
    if items.len() != 3 {
        return Err(shape(format!("expected 3 coordinates, got {}", items.len())));
    }
    let out = items.iter().map(|x| scalar_from_json(field, x)).collect::<Result<Vec<_>, _>>()?;
    Ok(out.try_into().expect("length checked"))
}

pub fn point_from_json(field: &NumberField, v: &Value) -> Result<ProjPoint, FormatError> {
    Ok(ProjPoint::new(triple(field, v)?)?)
}

pub fn line_from_json(field: &NumberField, v: &Value) -> Result<ProjLine, FormatError> {
    Ok(ProjLine::new(triple(field, v)?)?)
}

pub fn coords_to_json(c: &[Scalar]) -> Value {
    Value::Array(c.iter().map(scalar_to_json).collect())
}

fn lines_from_json(field: &NumberField, v: &Value) -> Result<Vec<ProjLine>, FormatError> {
    array(v, "lines")?.iter().map(|l| line_from_json(field, l)).collect()
}

pub fn points_from_json(field: &NumberField, v: &Value) -> Result<Vec<ProjPoint>, FormatError> {
    array(v, "points")?.iter().map(|p| point_from_json(field, p)).collect()
}

/// Reads a net; missing points are computed as the cross-class meets.
pub fn net_from_json(v: &Value) -> Result<KNetConfig, FormatError> {
    let field = field_from_json(v.get("field"))?;
    let classes = array(get(v, "classes")?, "classes")?
        .iter()
        .map(|c| {
            let lines = match c {
                Value::Array(_) => lines_from_json(&field, c)?,
                _ => lines_from_json(&field, get(c, "lines")?)?,
            };
            Ok(LineClass::new(lines)?)
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    if classes.is_empty() {
        return Err(NetError::NoClasses.into());
    }
    Ok(match v.get("points") {
        Some(p) => KNetConfig::new(classes, points_from_json(&field, p)?)?,
        None => KNetConfig::from_classes(classes)?,
    })
}

pub fn net_to_json(net: &KNetConfig) -> Value {
    let classes: Vec<Value> = net
        .classes()
        .iter()
        .map(|c| json!({ "lines": c.lines().iter().map(|l| coords_to_json(l.coords())).collect::<Vec<_>>() }))
        .collect();
    let points: Vec<Value> = net.points().iter().map(|p| coords_to_json(p.coords())).collect();
    let mut out = Map::new();
    if !net.field().is_rationals() {
        out.insert("field".into(), field_to_json(net.field()));
    }
    out.insert("classes".into(), Value::Array(classes));
    out.insert("points".into(), Value::Array(points));
    Value::Object(out)
}

/// A single class `{"field", "lines"}`, or class `index` (0-based) of a net
/// file.
pub fn class_from_json(v: &Value, index: Option<usize>) -> Result<LineClass, FormatError> {
    let field = field_from_json(v.get("field"))?;
    match (v.get("lines"), v.get("classes"), index) {
        (Some(lines), _, None) => Ok(LineClass::new(lines_from_json(&field, lines)?)?),
        (_, Some(_), Some(i)) => {
            let net = net_from_json(v)?;
            net.classes()
                .get(i)
                .cloned()
                .ok_or_else(|| shape(format!("class index {i} out of range (k = {})", net.k())))
        }
        (_, Some(_), None) => Err(shape("a net file needs a class index (FILE:INDEX)")),
        _ => Err(shape("expected a \"lines\" array or a net with \"classes\"")),
    }
}

pub fn class_to_json(c: &LineClass) -> Value {
    let mut out = Map::new();
    if !c.field().is_rationals() {
        out.insert("field".into(), field_to_json(c.field()));
    }
    out.insert("lines".into(), Value::Array(c.lines().iter().map(|l| coords_to_json(l.coords())).collect()));
    Value::Object(out)
}

/// Points from `{"field", "points"}`; a net file without points yields the
/// computed meets.
pub fn point_set_from_json(v: &Value) -> Result<Vec<ProjPoint>, FormatError> {
    if v.get("classes").is_some() {
        return Ok(net_from_json(v)?.points().to_vec());
    }
    let field = field_from_json(v.get("field"))?;
    points_from_json(&field, get(v, "points")?)
}

pub fn latin_from_json(v: &Value) -> Result<LatinSquare, FormatError> {
    let cells = match v {
        Value::Array(_) => v,
        _ => get(v, "cells")?,
    };
    let rows = array(cells, "cells")?
        .iter()
        .map(|r| {
            array(r, "a row")?
                .iter()
                .map(|x| x.as_u64().map(|n| n as usize).ok_or_else(|| shape(format!("bad symbol {x}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let square = LatinSquare::new(rows)?;
    if let Some(order) = v.get("order") {
        if order.as_u64() != Some(square.order() as u64) {
            return Err(shape(format!("declared order {order} but the square has order {}", square.order())));
        }
    }
    Ok(square)
}

pub fn latin_to_json(l: &LatinSquare) -> Value {
    json!({ "order": l.order(), "cells": l.rows() })
}

/// A single square, `{"squares": [...]}`, or a JSON array of squares.
pub fn squares_from_json(v: &Value) -> Result<Vec<LatinSquare>, FormatError> {
    if let Some(list) = v.get("squares") {
        return array(list, "squares")?.iter().map(latin_from_json).collect();
    }
    match v {
        Value::Array(items) if items.first().is_some_and(|x| x.is_object()) => {
            items.iter().map(latin_from_json).collect()
        }
        _ => Ok(vec![latin_from_json(v)?]),
    }
}

pub fn form_from_json(v: &Value) -> Result<DegreeForm, FormatError> {
    let field = field_from_json(v.get("field"))?;
    let degree = get(v, "degree")?.as_u64().ok_or_else(|| shape("degree must be a non-negative integer"))? as usize;
    let coeffs = array(get(v, "coeffs")?, "coeffs")?
        .iter()
        .map(|c| scalar_from_json(&field, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DegreeForm::new(degree, coeffs)?)
}

pub fn form_to_json(f: &DegreeForm) -> Value {
    let mut out = Map::new();
    if !f.field().is_rationals() {
        out.insert("field".into(), field_to_json(f.field()));
    }
    out.insert("degree".into(), json!(f.degree()));
    out.insert("coeffs".into(), coords_to_json(f.coeffs()));
    Value::Object(out)
}

pub fn parse(text: &str) -> Result<Value, FormatError> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{conic_net, hesse_net};
    use crate::latin::orthogonal_pair_order3;
    use crate::scalar::root_of_unity;

    #[test]
    fn scalars_round_trip() {
        let w = root_of_unity(3).unwrap();
        let v = scalar_to_json(&w);
        assert_eq!(v, json!({ "coeffs": ["0", "1"] }));
        assert_eq!(scalar_from_json(w.field(), &v).unwrap(), w);
        let q = NumberField::rationals();
        assert_eq!(scalar_to_json(&q.from_rational(Rational::new((-2).into(), 4.into()))), json!("-1/2"));
        assert_eq!(scalar_from_json(w.field(), &json!("3")).unwrap(), w.field().from_int(3));
        assert!(scalar_from_json(&q, &json!("1/0")).is_err());
        assert!(scalar_from_json(&q, &json!(true)).is_err());
    }

    #[test]
    fn nets_round_trip() {
        for net in [conic_net(), hesse_net()] {
            let v = net_to_json(&net);
            let back = net_from_json(&parse(&v.to_string()).unwrap()).unwrap();
            assert_eq!(back, net);
        }
    }

    #[test]
    fn points_are_optional() {
        let v = json!({ "classes": [
            { "lines": [["0", "0", "1"], ["1", "-1", "0"]] },
            { "lines": [["0", "1", "0"], ["1", "0", "-1"]] },
            { "lines": [["0", "1", "-1"], ["1", "0", "0"]] },
        ]});
        let net = net_from_json(&v).unwrap();
        assert_eq!(net.points().len(), 4);
        let class = class_from_json(&v, Some(2)).unwrap();
        assert_eq!(class, net.classes()[2]);
        assert!(class_from_json(&v, Some(3)).is_err());
        assert!(class_from_json(&v, None).is_err());
    }

    #[test]
    fn squares_in_several_shapes() {
        let [a, b] = orthogonal_pair_order3();
        let single = latin_to_json(&a);
        assert_eq!(squares_from_json(&single).unwrap(), vec![a.clone()]);
        let wrapped = json!({ "squares": [latin_to_json(&a), latin_to_json(&b)] });
        assert_eq!(squares_from_json(&wrapped).unwrap(), vec![a.clone(), b.clone()]);
        let bare = json!([latin_to_json(&a), latin_to_json(&b)]);
        assert_eq!(squares_from_json(&bare).unwrap().len(), 2);
        assert!(latin_from_json(&json!({ "order": 2, "cells": [[1, 2], [1, 2]] })).is_err());
        assert!(latin_from_json(&json!({ "order": 3, "cells": [[1, 2], [2, 1]] })).is_err());
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse("{"), Err(FormatError::Json(_))));
        assert!(net_from_json(&json!({ "classes": [] })).is_err());
        assert!(net_from_json(&json!({ "classes": [{ "lines": [["1", "2"]] }] })).is_err());
        assert!(net_from_json(&json!({ "field": { "poly": ["-4", "0", "1"] }, "classes": [] })).is_err());
    }
}
