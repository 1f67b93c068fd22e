//! Exact projective geometry in P² (and a little of P³).
//!
//! Points and lines are homogeneous triples stored in canonical form: the
//! first nonzero coordinate is 1. Equality of canonical representatives is
//! projective equality, so `==`, hashing and ordering work directly.

use std::fmt;

use thiserror::Error;

use crate::linalg;
use crate::scalar::{FieldError, NumberField, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("all homogeneous coordinates are zero")]
    ZeroVector,
    #[error("lines coincide, no unique meet")]
    CoincidentLines,
    #[error("points coincide, no unique join")]
    CoincidentPoints,
    #[error("transformation matrix is singular")]
    SingularTransform,
    #[error(transparent)]
    Field(#[from] FieldError),
}

fn canonical<const N: usize>(coords: [Scalar; N]) -> Result<[Scalar; N], GeomError> {
    let field = coords[0].field();
    if coords.iter().any(|c| c.field() != field) {
        return Err(FieldError::FieldMismatch.into());
    }
    let lead = coords.iter().find(|c| !c.is_zero()).ok_or(GeomError::ZeroVector)?;
    if lead.is_one() {
        return Ok(coords);
    }
    let inv = lead.inv()?;
    Ok(coords.map(|c| &c * &inv))
}

macro_rules! homogeneous {
    ($name:ident, $n:literal) => {
        impl $name {
            /// Canonicalizes the given coordinates.
            pub fn new(coords: [Scalar; $n]) -> Result<Self, GeomError> {
                Ok($name {
                    coords: canonical(coords)?,
                })
            }

            pub fn from_ints(coords: [i64; $n]) -> Result<Self, GeomError> {
                Self::from_ints_in(&NumberField::rationals(), coords)
            }

            pub fn from_ints_in(field: &NumberField, coords: [i64; $n]) -> Result<Self, GeomError> {
                Self::new(coords.map(|c| field.from_int(c)))
            }

            pub fn coords(&self) -> &[Scalar; $n] {
                &self.coords
            }

            pub fn field(&self) -> &NumberField {
                self.coords[0].field()
            }

            /// Same projective object over a larger field (only from `Q`).
            pub fn embed(&self, field: &NumberField) -> Result<Self, GeomError> {
                let mut out = Vec::with_capacity($n);
                for c in &self.coords {
                    out.push(c.embed(field)?);
                }
                let coords: [Scalar; $n] = out.try_into().expect("length preserved");
                Ok($name { coords })
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("[")?;
                for (i, c) in self.coords.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" : ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{}", stringify!($name), self)
            }
        }
    };
}

/// A point of P².
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [Scalar; 3],
}

/// A line of P², given by dual coordinates `[a:b:c]` for `ax + by + cz = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine {
    coords: [Scalar; 3],
}

/// A point of P³.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint3 {
    coords: [Scalar; 4],
}

homogeneous!(ProjPoint, 3);
homogeneous!(ProjLine, 3);
homogeneous!(ProjPoint3, 4);

pub(crate) fn dot(a: &[Scalar; 3], b: &[Scalar; 3]) -> Result<Scalar, FieldError> {
    let mut acc = a[0].checked_mul(&b[0])?;
    acc = acc.checked_add(&a[1].checked_mul(&b[1])?)?;
    acc.checked_add(&a[2].checked_mul(&b[2])?)
}

pub(crate) fn cross(a: &[Scalar; 3], b: &[Scalar; 3]) -> Result<[Scalar; 3], FieldError> {
    let c = |i: usize, j: usize| -> Result<Scalar, FieldError> {
        a[i].checked_mul(&b[j])?.checked_sub(&a[j].checked_mul(&b[i])?)
    };
    Ok([c(1, 2)?, c(2, 0)?, c(0, 1)?])
}

pub fn incident(p: &ProjPoint, l: &ProjLine) -> Result<bool, GeomError> {
    Ok(dot(&p.coords, &l.coords)?.is_zero())
}

/// Intersection point of two distinct lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint, GeomError> {
    match ProjPoint::new(cross(&l.coords, &m.coords)?) {
        Err(GeomError::ZeroVector) => Err(GeomError::CoincidentLines),
        other => other,
    }
}

/// The line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, GeomError> {
    match ProjLine::new(cross(&p.coords, &q.coords)?) {
        Err(GeomError::ZeroVector) => Err(GeomError::CoincidentPoints),
        other => other,
    }
}

fn rank_of<const N: usize>(rows: impl Iterator<Item = [Scalar; N]>) -> Result<usize, GeomError> {
    let m: Vec<Vec<Scalar>> = rows.map(Vec::from).collect();
    Ok(linalg::rank(&m)?)
}

/// Rank of the coordinate matrix is at most 2. Repeated points are allowed.
pub fn collinear(points: &[ProjPoint]) -> Result<bool, GeomError> {
    Ok(rank_of(points.iter().map(|p| p.coords.clone()))? <= 2)
}

/// Dual of [`collinear`].
pub fn concurrent(lines: &[ProjLine]) -> Result<bool, GeomError> {
    Ok(rank_of(lines.iter().map(|l| l.coords.clone()))? <= 2)
}

/// Determinant of three homogeneous triples.
pub fn det3(a: &[Scalar; 3], b: &[Scalar; 3], c: &[Scalar; 3]) -> Result<Scalar, GeomError> {
    Ok(dot(a, &cross(b, c)?)?)
}

pub fn rank_of_point_matrix3d(points: &[ProjPoint3]) -> Result<usize, GeomError> {
    rank_of(points.iter().map(|p| p.coords.clone()))
}

/// An invertible projective transformation of P², acting on points by
/// `p ↦ M p` and on lines by the cofactor matrix (inverse transpose up to
/// scale).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjTransform {
    matrix: [[Scalar; 3]; 3],
    cofactor: [[Scalar; 3]; 3],
}

impl ProjTransform {
    pub fn new(matrix: [[Scalar; 3]; 3]) -> Result<Self, GeomError> {
        let rows: Vec<Vec<Scalar>> = matrix.iter().map(|r| r.to_vec()).collect();
        if linalg::determinant(&rows)?.is_zero() {
            return Err(GeomError::SingularTransform);
        }
        let col = |j: usize| [matrix[0][j].clone(), matrix[1][j].clone(), matrix[2][j].clone()];
        // rows of C satisfy C M = det·I, so lines transform by Cᵀ
        let c = [cross(&col(1), &col(2))?, cross(&col(2), &col(0))?, cross(&col(0), &col(1))?];
        let cofactor = [0, 1, 2].map(|i| [c[0][i].clone(), c[1][i].clone(), c[2][i].clone()]);
        Ok(ProjTransform { matrix, cofactor })
    }

    pub fn identity(field: &NumberField) -> Self {
        let e = |i: usize, j: usize| if i == j { field.one() } else { field.zero() };
        let m = [[e(0, 0), e(0, 1), e(0, 2)], [e(1, 0), e(1, 1), e(1, 2)], [e(2, 0), e(2, 1), e(2, 2)]];
        ProjTransform::new(m).expect("identity is invertible")
    }

    /// The transformation taking `[1:0:0], [0:1:0], [0:0:1], [1:1:1]` to
    /// the four given points, which must be in general position.
    pub fn from_frame(frame: [&ProjPoint; 4]) -> Result<Self, GeomError> {
        let cols: Vec<&[Scalar; 3]> = frame[..3].iter().map(|p| p.coords()).collect();
        let a: Vec<Vec<Scalar>> = (0..3)
            .map(|i| (0..3).map(|j| cols[j][i].clone()).collect())
            .collect();
        let weights = linalg::solve(&a, frame[3].coords())?.ok_or(GeomError::SingularTransform)?;
        if weights.iter().any(Scalar::is_zero) {
            return Err(GeomError::SingularTransform);
        }
        let entry = |i: usize, j: usize| &cols[j][i] * &weights[j];
        let m = [
            [entry(0, 0), entry(0, 1), entry(0, 2)],
            [entry(1, 0), entry(1, 1), entry(1, 2)],
            [entry(2, 0), entry(2, 1), entry(2, 2)],
        ];
        ProjTransform::new(m)
    }

    pub fn matrix(&self) -> &[[Scalar; 3]; 3] {
        &self.matrix
    }

    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint, GeomError> {
        let row = |i: usize| dot(&self.matrix[i], p.coords());
        ProjPoint::new([row(0)?, row(1)?, row(2)?])
    }

    pub fn apply_line(&self, l: &ProjLine) -> Result<ProjLine, GeomError> {
        let row = |i: usize| dot(&self.cofactor[i], l.coords());
        ProjLine::new([row(0)?, row(1)?, row(2)?])
    }
}

/// Transform a point; see [`ProjTransform::apply`].
pub fn apply_transform(t: &ProjTransform, p: &ProjPoint) -> Result<ProjPoint, GeomError> {
    t.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::root_of_unity;

    fn pt(c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(c).unwrap()
    }
    fn ln(c: [i64; 3]) -> ProjLine {
        ProjLine::from_ints(c).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(pt([0, 2, -2]), pt([0, 1, -1]));
        assert_eq!(format!("{}", pt([0, 3, 2])), "[0 : 1 : 2/3]");
        assert_eq!(ProjPoint::from_ints([0, 0, 0]), Err(GeomError::ZeroVector));
    }

    #[test]
    fn incidence_examples() {
        assert!(incident(&pt([0, 1, -1]), &ln([1, 0, 0])).unwrap());
        assert!(!incident(&pt([1, 1, 1]), &ln([1, 0, 0])).unwrap());
        assert!(incident(&pt([1, 0, 0]), &ln([0, 0, 1])).unwrap());
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&ln([1, 0, 0]), &ln([1, 1, 1])).unwrap(), pt([0, 1, -1]));
        assert_eq!(meet(&ln([1, 0, 0]), &ln([0, 1, 0])).unwrap(), pt([0, 0, 1]));
        assert_eq!(meet(&ln([1, 2, 3]), &ln([2, 4, 6])), Err(GeomError::CoincidentLines));
        // l12 ∩ l23 = [t2 : 0 : −t0]
        let t = [5, 7, 11];
        assert_eq!(meet(&ln([0, 1, 0]), &ln(t)).unwrap(), pt([t[2], 0, -t[0]]));
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&pt([1, 0, 0]), &pt([0, 1, 0])).unwrap(), ln([0, 0, 1]));
        let l = join(&pt([0, 1, -1]), &pt([1, 0, -1])).unwrap();
        assert_eq!(l, ln([1, 1, 1]));
        assert_eq!(join(&pt([1, 2, 3]), &pt([1, 2, 3])), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn collinearity_determinant_condition() {
        // [0:1:−1], [t2:0:−t0], [s1:−s0:0] collinear iff s0 t2 = s1 t0
        let (s0, s1) = (1, 2);
        let (t0, t2) = (1, 2);
        let pts = [pt([0, 1, -1]), pt([t2, 0, -t0]), pt([s1, -s0, 0])];
        assert!(collinear(&pts).unwrap());
        let t2 = 3;
        let pts = [pt([0, 1, -1]), pt([t2, 0, -t0]), pt([s1, -s0, 0])];
        assert!(!collinear(&pts).unwrap());
        assert!(collinear(&[pt([1, 2, 3]), pt([1, 2, 3]), pt([2, 4, 6])]).unwrap());
        assert!(!collinear(&[pt([1, 0, 0]), pt([0, 1, 0]), pt([0, 0, 1])]).unwrap());
    }

    #[test]
    fn concurrency_examples() {
        assert!(concurrent(&[ln([1, 0, 0]), ln([0, 1, 0]), ln([1, 1, 0])]).unwrap());
        assert!(!concurrent(&[ln([1, 0, 0]), ln([0, 1, 0]), ln([0, 0, 1])]).unwrap());
        let w = root_of_unity(3).unwrap();
        let f = w.field().clone();
        let l11 = ProjLine::from_ints_in(&f, [1, 0, 0]).unwrap();
        let l21 = ProjLine::from_ints_in(&f, [1, 1, 1]).unwrap();
        let l31 = ProjLine::new([w.clone(), f.one(), f.one()]).unwrap();
        let l32 = ProjLine::new([f.one(), w.clone(), f.one()]).unwrap();
        assert!(concurrent(&[l11.clone(), l21.clone(), l31]).unwrap());
        assert!(!concurrent(&[l11, l21, l32]).unwrap());
    }

    #[test]
    fn p3_ranks() {
        let p = |c: [i64; 4]| ProjPoint3::from_ints(c).unwrap();
        assert_eq!(rank_of_point_matrix3d(&[p([1, 0, 0, 0]), p([1, 1, 1, 1]), p([-1, 1, 1, 1])]).unwrap(), 2);
        assert_eq!(rank_of_point_matrix3d(&[p([1, 0, 0, 0]), p([0, 1, 0, 0]), p([0, 0, 1, 0])]).unwrap(), 3);
        assert_eq!(rank_of_point_matrix3d(&[p([1, 2, 3, 4]), p([1, 2, 3, 4])]).unwrap(), 1);
    }

    #[test]
    fn transforms() {
        let q = NumberField::rationals();
        let id = ProjTransform::identity(&q);
        assert_eq!(apply_transform(&id, &pt([1, 2, 3])).unwrap(), pt([1, 2, 3]));
        let diag = ProjTransform::new([
            [q.one(), q.zero(), q.zero()],
            [q.zero(), q.one(), q.zero()],
            [q.zero(), q.zero(), q.from_int(2)],
        ])
        .unwrap();
        assert_eq!(diag.apply(&pt([0, 0, 1])).unwrap(), pt([0, 0, 1]));
        let frame = [pt([1, 0, 0]), pt([0, 1, 0]), pt([0, 0, 1]), pt([1, 1, 1])];
        let t = ProjTransform::from_frame([&frame[0], &frame[1], &frame[2], &frame[3]]).unwrap();
        assert_eq!(t.apply(&pt([1, 0, 0])).unwrap(), pt([1, 0, 0]));
        assert_eq!(t.apply(&pt([1, 1, 1])).unwrap(), pt([1, 1, 1]));
        let singular = ProjTransform::new([
            [q.one(), q.one(), q.zero()],
            [q.one(), q.one(), q.zero()],
            [q.zero(), q.zero(), q.one()],
        ]);
        assert_eq!(singular, Err(GeomError::SingularTransform));
    }

    #[test]
    fn frame_maps_standard_frame() {
        let targets = [pt([1, 2, 0]), pt([0, 1, 5]), pt([3, 0, 1]), pt([2, 1, 1])];
        let t = ProjTransform::from_frame([&targets[0], &targets[1], &targets[2], &targets[3]]).unwrap();
        let std = [pt([1, 0, 0]), pt([0, 1, 0]), pt([0, 0, 1]), pt([1, 1, 1])];
        for (s, target) in std.iter().zip(&targets) {
            assert_eq!(&t.apply(s).unwrap(), target);
        }
    }
}
