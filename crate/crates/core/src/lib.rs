//! Exact construction, verification and discovery of k-nets of lines in the
//! projective plane.
//!
//! A `(k, d)`-net is a collection of `k` pairwise disjoint classes of `d`
//! lines together with `d²` points, such that every intersection of lines
//! from different classes is one of the points and every point lies on
//! exactly one line of each class. All arithmetic is exact, over `Q` or a
//! small number field.

pub mod exact_cover;
pub mod families;
pub mod geom;
pub mod io;
pub mod latin;
pub mod linalg;
pub mod net;
pub mod pencil;
pub mod scalar;

pub use geom::{ProjLine, ProjPoint, ProjPoint3, ProjTransform};
pub use latin::LatinSquare;
pub use net::{KNetConfig, LineClass};
pub use pencil::DegreeForm;
pub use scalar::{NumberField, Rational, Scalar};
