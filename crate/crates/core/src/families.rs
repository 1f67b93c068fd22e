//! Explicit nets: the conic net, Fermat nets, the cubic family, the Hesse
//! net, two quartic families, two quintic families on their parameter
//! hypersurfaces, and the desmic tetrahedra in P³.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::geom::{meet, rank_of_point_matrix3d, GeomError, ProjLine, ProjPoint, ProjPoint3};
use crate::latin::{self, LatinSquare, Permutation};
use crate::net::{
    find_perspectivities, line_through_all, verify_net, CollinearityFailure, KNetConfig, LineClass, LineFit, NetError,
    Perspectivity,
};
use crate::scalar::{root_of_unity, FieldError, NumberField, Rational, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Net(#[from] NetError),
    #[error("parameter {0} out of range")]
    OutOfRange(usize),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("no line {line}: {failure:?}")]
    AxisFailure { line: String, failure: CollinearityFailure },
    #[error("no generic point found within the search bound")]
    SearchExhausted,
}

/// A point of P¹ given by two scalars.
pub type P1 = [Scalar; 2];
/// A point of P² given by three scalars.
pub type P2 = [Scalar; 3];

fn common_field<'a>(params: impl IntoIterator<Item = &'a Scalar>) -> Result<NumberField, FamilyError> {
    let mut it = params.into_iter();
    let f = it.next().expect("at least one parameter").field().clone();
    if it.any(|s| s.field() != &f) {
        return Err(FieldError::FieldMismatch.into());
    }
    Ok(f)
}

fn check_nonzero(name: &str, v: &[Scalar]) -> Result<(), FamilyError> {
    if v.iter().all(Scalar::is_zero) {
        return Err(FamilyError::DegenerateParameters(format!("{name} is the zero vector")));
    }
    Ok(())
}

/// Product of scalars.
fn pr(xs: &[&Scalar]) -> Scalar {
    let mut out = xs[0].clone();
    for x in &xs[1..] {
        out = &out * *x;
    }
    out
}

/// Builds the line `l{class}{index}` (1-based labels).
fn line(class: usize, index: usize, coords: [Scalar; 3]) -> Result<ProjLine, FamilyError> {
    ProjLine::new(coords).map_err(|e| match e {
        GeomError::ZeroVector => FamilyError::DegenerateParameters(format!("l{class}{index} is the zero vector")),
        e => e.into(),
    })
}

fn int_line(field: &NumberField, c: [i64; 3]) -> ProjLine {
    ProjLine::from_ints_in(field, c).expect("nonzero constant line")
}

/// Checks distinctness of all lines and the net conditions.
fn assemble(classes: Vec<Vec<ProjLine>>) -> Result<KNetConfig, FamilyError> {
    let labeled: Vec<(String, &ProjLine)> = classes
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().enumerate().map(move |(j, l)| (format!("l{}{}", i + 1, j + 1), l)))
        .collect();
    for ((na, a), (nb, b)) in labeled.iter().tuple_combinations() {
        if a == b {
            return Err(FamilyError::DegenerateParameters(format!("{na} = {nb} = {a}")));
        }
    }
    let classes = classes.into_iter().map(LineClass::new).collect::<Result<Vec<_>, _>>()?;
    let net = KNetConfig::from_classes(classes)?;
    let report = verify_net(&net)?;
    if !report.passed() {
        let failed = report.failed_conditions().iter().map(|c| c.to_string()).join("; ");
        return Err(FamilyError::DegenerateParameters(format!("not a net: {failed}")));
    }
    Ok(net)
}

/// The net of the three reducible conics through `[1:0:0]`, `[0:1:0]`,
/// `[0:0:1]`, `[1:1:1]`: `z(x−y)`, `y(z−x)`, `x(y−z)`.
pub fn conic_net() -> KNetConfig {
    let q = NumberField::rationals();
    let classes = vec![
        vec![int_line(&q, [0, 0, 1]), int_line(&q, [1, -1, 0])],
        vec![int_line(&q, [0, 1, 0]), int_line(&q, [1, 0, -1])],
        vec![int_line(&q, [0, 1, -1]), int_line(&q, [1, 0, 0])],
    ];
    let points = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
        .map(|c| ProjPoint::from_ints(c).expect("nonzero"))
        .to_vec();
    let classes = classes.into_iter().map(|c| LineClass::new(c).expect("distinct")).collect();
    KNetConfig::new(classes, points).expect("rational")
}

/// The net of `x^d − y^d`, `y^d − z^d`, `z^d − x^d` over `Q(ζ_d)`.
pub fn fermat_net(d: usize) -> Result<KNetConfig, FamilyError> {
    if !(2..=6).contains(&d) {
        return Err(FamilyError::OutOfRange(d));
    }
    let zeta = root_of_unity(d as u32)?;
    let k = zeta.field().clone();
    let (zero, one) = (k.zero(), k.one());
    let powers: Vec<Scalar> = (0..d).map(|j| -zeta.pow(j as u32)).collect();
    let mut classes = vec![vec![], vec![], vec![]];
    for (j, z) in powers.iter().enumerate() {
        classes[0].push(line(1, j + 1, [one.clone(), z.clone(), zero.clone()])?);
        classes[1].push(line(2, j + 1, [zero.clone(), one.clone(), z.clone()])?);
        classes[2].push(line(3, j + 1, [z.clone(), zero.clone(), one.clone()])?);
    }
    assemble(classes)
}

/// The two-parameter family of `(3,3)`-nets of cubics.
pub fn cubic_net(s: &P1, t: &P1) -> Result<KNetConfig, FamilyError> {
    let k = common_field(s.iter().chain(t))?;
    check_nonzero("s", s)?;
    check_nonzero("t", t)?;
    let [s0, s1] = s;
    let [t0, t1] = t;
    let a1 = vec![int_line(&k, [1, 0, 0]), int_line(&k, [0, 1, 0]), int_line(&k, [0, 0, 1])];
    let a2 = vec![
        int_line(&k, [1, 1, 1]),
        line(2, 2, [s0 * t1, s1 * t1, s1 * t0])?,
        line(2, 3, [s0 * t0, s0 * t1, s1 * t0])?,
    ];
    let a3 = vec![
        line(3, 1, [s0.clone(), s1.clone(), s1.clone()])?,
        line(3, 2, [t0.clone(), t1.clone(), t0.clone()])?,
        line(3, 3, [s0 * t1, s0 * t1, s1 * t0])?,
    ];
    assemble(vec![a1, a2, a3])
}

/// The `(4,3)`-net of the singular members of the Hesse pencil, over `Q(ω)`.
pub fn hesse_net() -> KNetConfig {
    let w = root_of_unity(3).expect("cyclotomic field");
    let k = w.field().clone();
    let (o, w2) = (k.one(), w.pow(2));
    let l = |c: [&Scalar; 3]| ProjLine::new(c.map(Scalar::clone)).expect("nonzero");
    let classes = vec![
        vec![int_line(&k, [1, 0, 0]), int_line(&k, [0, 1, 0]), int_line(&k, [0, 0, 1])],
        vec![l([&o, &o, &o]), l([&o, &w, &w2]), l([&o, &w2, &w])],
        vec![l([&w, &o, &o]), l([&o, &w, &o]), l([&o, &o, &w])],
        vec![l([&w2, &o, &o]), l([&o, &w2, &o]), l([&o, &o, &w2])],
    ];
    assemble(classes).expect("the Hesse configuration is a net")
}

/// The `(3,4)`-nets whose Latin square is the cyclic group table. The line
/// `l24` is computed as the axis of the perspectivity `l1i ↦ l3(i+3 mod 4)`.
pub fn quartic_net_cyclic(s: &P1, t: &P1, u: &P1) -> Result<KNetConfig, FamilyError> {
    let k = common_field(s.iter().chain(t).chain(u))?;
    for (n, v) in [("s", s), ("t", t), ("u", u)] {
        check_nonzero(n, v)?;
    }
    let [s0, s1] = s;
    let [t0, t1] = t;
    let [u0, u1] = u;
    let a1 = vec![
        int_line(&k, [1, 1, 1]),
        line(1, 2, [t1 * u1, t0 * u0, t1 * u0])?,
        line(1, 3, [s0 * u1, s1 * u1, s1 * u0])?,
        line(1, 4, [s0 * t1, s0 * t0, s1 * t1])?,
    ];
    let a3 = vec![
        line(3, 1, [s0.clone(), s1.clone(), s1.clone()])?,
        line(3, 2, [t1.clone(), t0.clone(), t1.clone()])?,
        line(3, 3, [u1.clone(), u1.clone(), u0.clone()])?,
        line(3, 4, [pr(&[s0, t1, u1]), pr(&[s0, t0, u0]), pr(&[s1, t1, u0])])?,
    ];
    let sigma = Permutation::new(vec![3, 0, 1, 2]).expect("permutation");
    let l24 = axis_line("l24", &a1, &a3, &sigma)?;
    let a2 = vec![int_line(&k, [1, 0, 0]), int_line(&k, [0, 1, 0]), int_line(&k, [0, 0, 1]), l24];
    assemble(vec![a1, a2, a3])
}

/// The closed form of `l24` in [`quartic_net_cyclic`].
pub fn quartic_cyclic_l24(s: &P1, t: &P1, u: &P1) -> Result<ProjLine, FamilyError> {
    let [s0, s1] = s;
    let [t0, t1] = t;
    let [u0, u1] = u;
    let x0 = t1 * &(&(&(pr(&[s0, t1, u1]) + pr(&[s1, t1, u1])) - &pr(&[s0, t0, u1])) - &pr(&[s0, t0, u0]));
    let x1 = &pr(&[s0, t0, t0, u0]) - &pr(&[s1, t1, t1, u1]);
    let x2 = t1 * &(&(&(pr(&[s1, t1, u0]) + pr(&[s1, t1, u1])) - &pr(&[s1, t0, u0])) - &pr(&[s0, t0, u0]));
    line(2, 4, [x0, -x1, x2])
}

/// The `(3,4)`-nets whose Latin square is the Klein four-group table.
pub fn quartic_net_klein(s: &P1, t: &P1, u: &P1) -> Result<KNetConfig, FamilyError> {
    let k = common_field(s.iter().chain(t).chain(u))?;
    for (n, v) in [("s", s), ("t", t), ("u", u)] {
        check_nonzero(n, v)?;
    }
    let [s0, s1] = s;
    let [t0, t1] = t;
    let [u0, u1] = u;
    let a1 = vec![
        int_line(&k, [1, 1, 1]),
        line(1, 2, [s0 * t1, s1 * t0, s1 * t1])?,
        line(1, 3, [s0 * u1, s1 * u1, s1 * u0])?,
        line(1, 4, [t1 * u1, t0 * u1, t1 * u0])?,
    ];
    let a2 = vec![
        int_line(&k, [1, 0, 0]),
        int_line(&k, [0, 1, 0]),
        int_line(&k, [0, 0, 1]),
        line(2, 4, [pr(&[&(s0 + s1), t1, u1]), pr(&[s1, &(t0 + t1), u1]), pr(&[s1, t1, &(u0 + u1)])])?,
    ];
    let a3 = vec![
        line(3, 1, [s0.clone(), s1.clone(), s1.clone()])?,
        line(3, 2, [t1.clone(), t0.clone(), t1.clone()])?,
        line(3, 3, [u1.clone(), u1.clone(), u0.clone()])?,
        line(3, 4, [pr(&[s0, t1, u1]), pr(&[s1, t0, u1]), pr(&[s1, t1, u0])])?,
    ];
    assemble(vec![a1, a2, a3])
}

/// The line through `a[i] ∩ b[σ(i)]` for all `i`.
fn axis_line(name: &str, a: &[ProjLine], b: &[ProjLine], sigma: &Permutation) -> Result<ProjLine, FamilyError> {
    let mut pts = vec![];
    for (i, l) in a.iter().enumerate() {
        let m = &b[sigma.apply(i)];
        let p = meet(l, m).map_err(|_| FamilyError::DegenerateParameters(format!("{l} = {m} while computing {name}")))?;
        pts.push(p);
    }
    match line_through_all(&pts)? {
        LineFit::Line(l) => Ok(l),
        LineFit::TooFewDistinct => Err(FamilyError::DegenerateParameters(format!("{name}: the meets coincide"))),
        LineFit::NotCollinear(failure) => Err(FamilyError::AxisFailure { line: name.into(), failure }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quintic {
    Cyclic,
    NonGroup,
}

impl Quintic {
    pub fn name(self) -> &'static str {
        match self {
            Quintic::Cyclic => "cyclic5",
            Quintic::NonGroup => "nongroup5",
        }
    }

    /// The Latin square the family realizes.
    pub fn square(self) -> LatinSquare {
        match self {
            Quintic::Cyclic => latin::cyclic_group_table(5),
            Quintic::NonGroup => latin::non_group_order5(),
        }
    }

    /// `σ` (0-based) for `l24` and `l25`: `l1i ∩ l3σ(i)` lie on the axis.
    pub fn axis_permutations(self) -> [Permutation; 2] {
        let p = |v: Vec<usize>| Permutation::new(v).expect("permutation");
        match self {
            Quintic::Cyclic => [p(vec![3, 4, 0, 1, 2]), p(vec![4, 0, 1, 2, 3])],
            Quintic::NonGroup => [p(vec![3, 4, 1, 0, 2]), p(vec![4, 2, 3, 1, 0])],
        }
    }
}

impl fmt::Display for Quintic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Quintic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cyclic5" | "cyclic" => Ok(Quintic::Cyclic),
            "nongroup5" | "nongroup" | "non-group" => Ok(Quintic::NonGroup),
            _ => Err(format!("unknown quintic family {s:?} (expected cyclic5 or nongroup5)")),
        }
    }
}

/// The degree-(3,3) polynomial cutting out the parameters of a quintic
/// family.
pub fn hypersurface_eval(which: Quintic, s: &P2, t: &P2) -> Scalar {
    let [s0, s1, s2] = s;
    let [t0, t1, t2] = t;
    let terms: Vec<(i64, Scalar)> = match which {
        Quintic::Cyclic => vec![
            (1, pr(&[s0, s0, s1, t1, t1, t2])),
            (-1, pr(&[s0, s0, s1, t1, t2, t2])),
            (-1, pr(&[s0, s1, s1, t0, t1, t2])),
            (1, pr(&[s0, s1, s1, t1, t2, t2])),
            (1, pr(&[s0, s1, s2, t0, t0, t2])),
            (-1, pr(&[s0, s1, s2, t1, t1, t2])),
            (-1, pr(&[s0, s2, s2, t0, t0, t1])),
            (1, pr(&[s0, s2, s2, t0, t1, t2])),
            (1, pr(&[s1, s2, s2, t0, t0, t1])),
            (-1, pr(&[s1, s2, s2, t0, t0, t2])),
        ],
        Quintic::NonGroup => vec![
            (1, pr(&[s0, s1, s1, t0, t2, t2])),
            (-1, pr(&[s0, s1, s2, t1, t2, t2])),
            (-1, pr(&[s1, s1, s2, t0, t1, t2])),
            (1, pr(&[s1, s1, s2, t1, t2, t2])),
            (-1, pr(&[s1, s2, s2, t1, t1, t2])),
            (1, pr(&[s2, s2, s2, t1, t1, t1])),
        ],
    };
    let mut acc = s0.field().zero();
    for (sign, v) in terms {
        acc = if sign > 0 { &acc + &v } else { &acc - &v };
    }
    acc
}

/// Parameters `(s, t)` of a quintic family, meant to lie on its hypersurface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfacePoint {
    pub which: Quintic,
    pub s: P2,
    pub t: P2,
}

impl HypersurfacePoint {
    pub fn field(&self) -> &NumberField {
        self.s[0].field()
    }

    pub fn on_hypersurface(&self) -> bool {
        hypersurface_eval(self.which, &self.s, &self.t).is_zero()
    }
}

/// A quintic net with the derived lines and any perspectivities between
/// `A₁` and `A₃` beyond the five the Latin square prescribes.
#[derive(Clone, Debug)]
pub struct QuinticNet {
    pub net: KNetConfig,
    /// `l13` of the cyclic family, computed from the fiber of `l21 ∩ l33`,
    /// `l22 ∩ l34`, `l23 ∩ l35`.
    pub derived_l13: Option<ProjLine>,
    pub l24: ProjLine,
    pub l25: ProjLine,
    pub extra_axes: Vec<Perspectivity>,
}

/// `l13 = [s0 t0 : s0 t1 : s2 t0]`, the closed form of the derived line.
pub fn cyclic_quintic_l13(s: &P2, t: &P2) -> Result<ProjLine, FamilyError> {
    let [s0, _, s2] = s;
    let [t0, t1, _] = t;
    line(1, 3, [s0 * t0, s0 * t1, s2 * t0])
}

/// Builds the quintic net at `p`; off the hypersurface this normally fails
/// with an [`FamilyError::AxisFailure`].
pub fn quintic_net(p: &HypersurfacePoint) -> Result<QuinticNet, FamilyError> {
    let k = common_field(p.s.iter().chain(&p.t))?;
    check_nonzero("s", &p.s)?;
    check_nonzero("t", &p.t)?;
    let [s0, s1, s2] = &p.s;
    let [t0, t1, t2] = &p.t;
    let a2_base = vec![int_line(&k, [1, 0, 0]), int_line(&k, [0, 1, 0]), int_line(&k, [0, 0, 1])];
    let (a1_partial, a3) = match p.which {
        Quintic::Cyclic => (
            vec![
                Some(int_line(&k, [1, 1, 1])),
                Some(line(1, 2, [s0 * t1, s1 * t1, s2 * t0])?),
                None,
                Some(line(1, 4, [s2 * t0, s1 * t2, s2 * t2])?),
                Some(line(1, 5, [s2 * t0, s1 * t1, s1 * t2])?),
            ],
            vec![
                line(3, 1, [s2 * t0, s1 * t2, s1 * t2])?,
                line(3, 2, [s2 * t0, s1 * t1, s2 * t0])?,
                line(3, 3, [s0 * t1, s0 * t1, s2 * t0])?,
                line(3, 4, p.s.clone())?,
                line(3, 5, p.t.clone())?,
            ],
        ),
        Quintic::NonGroup => (
            vec![
                Some(int_line(&k, [1, 1, 1])),
                Some(line(1, 2, [pr(&[s0, s2, t1]), pr(&[s1, s2, t1]), pr(&[s0, s1, t2])])?),
                Some(line(1, 3, [pr(&[s2, t0, t1]), pr(&[s1, t0, t2]), pr(&[s2, t1, t2])])?),
                Some(line(1, 4, [s1 * t0, s1 * t1, s2 * t1])?),
                Some(line(1, 5, [s0 * t2, s2 * t1, s2 * t2])?),
            ],
            vec![
                line(3, 1, [s2 * t1, s1 * t2, s1 * t2])?,
                line(3, 2, [s0 * t2, s2 * t1, s0 * t2])?,
                line(3, 3, [s1 * t0, s1 * t0, s2 * t1])?,
                line(3, 4, p.s.clone())?,
                line(3, 5, p.t.clone())?,
            ],
        ),
    };
    let square = p.which.square();
    let mut derived_l13 = None;
    let a1: Vec<ProjLine> = match p.which {
        Quintic::NonGroup => a1_partial.into_iter().map(|l| l.expect("all given")).collect(),
        Quintic::Cyclic => {
            // l13 passes through l2j ∩ l3n for M[2][j] = n, j = 1, 2, 3
            let fiber_meets: Vec<ProjPoint> = (0..3)
                .map(|j| {
                    let n = square.get(2, j) - 1;
                    meet(&a2_base[j], &a3[n])
                        .map_err(|_| FamilyError::DegenerateParameters(format!("l2{} = l3{}", j + 1, n + 1)))
                })
                .collect::<Result<_, _>>()?;
            let l13 = match line_through_all(&fiber_meets)? {
                LineFit::Line(l) => l,
                LineFit::TooFewDistinct => {
                    return Err(FamilyError::DegenerateParameters("l13: the fiber points coincide".into()))
                }
                LineFit::NotCollinear(failure) => return Err(FamilyError::AxisFailure { line: "l13".into(), failure }),
            };
            derived_l13 = Some(l13.clone());
            a1_partial.into_iter().map(|l| l.unwrap_or_else(|| l13.clone())).collect()
        }
    };
    let [sigma4, sigma5] = p.which.axis_permutations();
    let l24 = axis_line("l24", &a1, &a3, &sigma4)?;
    let l25 = axis_line("l25", &a1, &a3, &sigma5)?;
    let mut a2 = a2_base;
    a2.push(l24.clone());
    a2.push(l25.clone());
    let net = assemble(vec![a1, a2, a3])?;
    let expected: BTreeSet<Vec<usize>> = (0..5)
        .map(|j| (0..5).map(|i| square.get(i, j) - 1).collect())
        .collect();
    let found = find_perspectivities(&net.classes()[0], &net.classes()[2])?;
    let extra_axes = found
        .perspectivities
        .into_iter()
        .filter(|p| !expected.contains(p.sigma.images()))
        .collect();
    Ok(QuinticNet { net, derived_l13, l24, l25, extra_axes })
}

/// Squarefree part and square factor of a nonzero integer: `n = k² · D`.
fn squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut d = n.abs();
    let mut k = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= d {
        let sq = &f * &f;
        while (&d % &sq).is_zero() {
            d /= &sq;
            k *= &f;
        }
        f += 1;
    }
    if n.is_negative() {
        d = -d;
    }
    (d, k)
}

/// Roots of `c2 x² + c1 x + c0` over `Q` or a quadratic extension; empty if
/// the polynomial is constant.
fn solve_low_degree(c0: &Rational, c1: &Rational, c2: &Rational) -> Result<Vec<Scalar>, FamilyError> {
    let q = NumberField::rationals();
    if c2.is_zero() {
        if c1.is_zero() {
            return Ok(vec![]);
        }
        return Ok(vec![q.from_rational(-c0 / c1)]);
    }
    let disc = c1 * c1 - Rational::from_integer(4.into()) * c2 * c0;
    let two_a = c2 * Rational::from_integer(2.into());
    if disc.is_zero() {
        return Ok(vec![q.from_rational(-c1 / &two_a)]);
    }
    let n = disc.numer() * disc.denom();
    let (d, k) = squarefree_split(&n);
    // √disc = k √D / denom
    let coeff = Rational::new(k, disc.denom().clone());
    if d.is_one() {
        let r = coeff;
        return Ok(vec![q.from_rational((-c1 + &r) / &two_a), q.from_rational((-c1 - &r) / &two_a)]);
    }
    let field = NumberField::quadratic(&Rational::from_integer(d))?;
    let root = field.generator();
    let base = field.from_rational(-c1 / &two_a);
    let step = &root * &field.from_rational(coeff / &two_a);
    Ok(vec![&base + &step, &base - &step])
}

fn classes_nondegenerate(net: &KNetConfig) -> Result<bool, FamilyError> {
    for c in net.classes() {
        if c.has_concurrent_triple()? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integer tuples in `[−b, b]^n`, ordered by height, then lexicographically.
fn candidates(n: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    (1..=bound).flat_map(move |h| {
        (0..n)
            .map(|_| -h..=h)
            .multi_cartesian_product()
            .filter(move |v| v.iter().any(|x| x.abs() == h))
    })
}

/// The first candidate `(s, t₁, t₂)` with integer entries in
/// `[−bound, bound]`, solved for `t₀`, that gives a net with nondegenerate
/// classes. Non-square discriminants adjoin a square root.
pub fn sample_hypersurface(which: Quintic, bound: i64) -> Result<HypersurfacePoint, FamilyError> {
    sample_hypersurface_where(which, bound, |_| true)
}

/// As [`sample_hypersurface`], keeping only points accepted by `keep`.
pub fn sample_hypersurface_where(
    which: Quintic,
    bound: i64,
    mut keep: impl FnMut(&HypersurfacePoint) -> bool,
) -> Result<HypersurfacePoint, FamilyError> {
    let q = NumberField::rationals();
    for c in candidates(5, bound) {
        let s = [q.from_int(c[0]), q.from_int(c[1]), q.from_int(c[2])];
        let at = |t0: i64| {
            let t = [q.from_int(t0), q.from_int(c[3]), q.from_int(c[4])];
            hypersurface_eval(which, &s, &t).as_rational().expect("rational").clone()
        };
        // interpolate the polynomial in t0 (degree ≤ 2) from three values
        let (h0, h1, h2) = (at(0), at(1), at(2));
        let c2 = (&h2 - &h1 * Rational::from_integer(2.into()) + &h0) / Rational::from_integer(2.into());
        let c1 = &h1 - &h0 - &c2;
        for t0 in solve_low_degree(&h0, &c1, &c2)? {
            let k = t0.field().clone();
            let point = HypersurfacePoint {
                which,
                s: s.clone().map(|x| x.embed(&k).expect("embed from Q")),
                t: [t0, k.from_int(c[3]), k.from_int(c[4])],
            };
            debug_assert!(point.on_hypersurface());
            let Ok(built) = quintic_net(&point) else {
                continue;
            };
            if classes_nondegenerate(&built.net)? && keep(&point) {
                return Ok(point);
            }
        }
    }
    Err(FamilyError::SearchExhausted)
}

/// Result of checking that the desmic tetrahedra are pairwise perspective
/// from the vertices of the third.
#[derive(Clone, Debug)]
pub struct DesmicReport {
    pub vertices: Vec<VertexCheck>,
    /// `M[i][j] = n` iff `Xᵢ, Yⱼ, Zₙ` are collinear.
    pub square: Option<LatinSquare>,
    /// The collinear triples seen from X, Y and Z vertices agree.
    pub consistent: bool,
    pub klein: bool,
}

impl DesmicReport {
    pub fn passed(&self) -> bool {
        self.vertices.iter().all(|v| v.sigma.is_some()) && self.consistent && self.klein
    }
}

/// For vertex `index` (0-based) of tetrahedron `tetra`, `sigma` sends `j` to
/// the vertex of `pair.1` collinear with it and vertex `j` of `pair.0`.
#[derive(Clone, Debug)]
pub struct VertexCheck {
    pub tetra: char,
    pub index: usize,
    pub pair: (char, char),
    pub sigma: Option<Permutation>,
}

pub fn desmic_tetrahedra() -> [[ProjPoint3; 4]; 3] {
    let p = |c: [i64; 4]| ProjPoint3::from_ints(c).expect("nonzero");
    [
        [p([1, 0, 0, 0]), p([0, 1, 0, 0]), p([0, 0, 1, 0]), p([0, 0, 0, 1])],
        [p([1, 1, 1, 1]), p([1, 1, -1, -1]), p([1, -1, 1, -1]), p([1, -1, -1, 1])],
        [p([-1, 1, 1, 1]), p([1, -1, 1, 1]), p([1, 1, -1, 1]), p([1, 1, 1, -1])],
    ]
}

pub fn desmic_check() -> Result<DesmicReport, FamilyError> {
    let tetra = desmic_tetrahedra();
    let names = ['X', 'Y', 'Z'];
    let collinear = |a: &ProjPoint3, b: &ProjPoint3, c: &ProjPoint3| -> Result<bool, FamilyError> {
        Ok(rank_of_point_matrix3d(&[a.clone(), b.clone(), c.clone()])? <= 2)
    };
    let mut vertices = vec![];
    let mut triples: [BTreeSet<[usize; 3]>; 3] = Default::default();
    for c in 0..3 {
        let (a, b) = match c {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for (vi, v) in tetra[c].iter().enumerate() {
            let mut images = vec![];
            for aj in &tetra[a] {
                let hits: Vec<usize> = (0..4)
                    .filter_map(|bk| match collinear(v, aj, &tetra[b][bk]) {
                        Ok(true) => Some(Ok(bk)),
                        Ok(false) => None,
                        Err(e) => Some(Err(e)),
                    })
                    .collect::<Result<_, _>>()?;
                images.push(if hits.len() == 1 { Some(hits[0]) } else { None });
            }
            let sigma = images
                .into_iter()
                .collect::<Option<Vec<usize>>>()
                .and_then(|v| Permutation::new(v).ok());
            if let Some(s) = &sigma {
                for j in 0..4 {
                    let mut t = [0; 3];
                    t[c] = vi;
                    t[a] = j;
                    t[b] = s.apply(j);
                    triples[c].insert(t);
                }
            }
            vertices.push(VertexCheck { tetra: names[c], index: vi, pair: (names[a], names[b]), sigma });
        }
    }
    let consistent = triples[0] == triples[1] && triples[1] == triples[2] && triples[2].len() == 16;
    let square = if consistent {
        let mut cells = vec![vec![0; 4]; 4];
        for [i, j, n] in &triples[2] {
            cells[*i][*j] = n + 1;
        }
        LatinSquare::new(cells).ok()
    } else {
        None
    };
    let klein = match &square {
        Some(sq) => latin::are_isotopic(sq, &latin::klein_group_table()).map_err(NetError::from)?,
        None => false,
    };
    Ok(DesmicReport { vertices, square, consistent, klein })
}
