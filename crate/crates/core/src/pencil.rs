//! Ternary forms of degree d, products of lines, and the rank-2 pencil
//! criterion for nets.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::geom::ProjLine;
use crate::linalg;
use crate::net::{verify_net, KNetConfig};
use crate::scalar::{FieldError, NumberField, Scalar};
use crate::ProjPoint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PencilError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("forms of degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("form has {found} coefficients, degree {degree} needs {expected}")]
    CoefficientCount { degree: usize, expected: usize, found: usize },
    #[error("no forms given")]
    Empty,
    #[error("pencil generators are linearly dependent")]
    DependentGenerators,
    #[error("form is not in the pencil")]
    NotInPencil,
    #[error("zero form")]
    ZeroForm,
    #[error("configuration is not a net")]
    NotANet,
    #[error("class products span rank {rank}, expected 2")]
    RankViolation { rank: usize, matrix: Vec<Vec<Scalar>> },
}

/// Exponents `(a, b, c)` of the monomials `x^a y^b z^c` of degree `d`, in
/// graded-lex order with `x > y > z`.
pub fn monomials(d: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity((d + 1) * (d + 2) / 2);
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push((a, b, d - a - b));
        }
    }
    out
}

fn monomial_index(d: usize, a: usize, b: usize) -> usize {
    // monomials with a larger x-exponent come first
    let before: usize = (a + 1..=d).map(|e| d - e + 1).sum();
    before + (d - a - b)
}

/// A homogeneous polynomial in `x, y, z` stored by [`monomials`] order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DegreeForm {
    degree: usize,
    coeffs: Vec<Scalar>,
}

impl DegreeForm {
    pub fn new(degree: usize, coeffs: Vec<Scalar>) -> Result<Self, PencilError> {
        let expected = (degree + 1) * (degree + 2) / 2;
        if coeffs.len() != expected {
            return Err(PencilError::CoefficientCount { degree, expected, found: coeffs.len() });
        }
        let f = coeffs[0].field().clone();
        if coeffs.iter().any(|c| c.field() != &f) {
            return Err(FieldError::FieldMismatch.into());
        }
        Ok(DegreeForm { degree, coeffs })
    }

    pub fn zero(field: &NumberField, degree: usize) -> Self {
        DegreeForm { degree, coeffs: vec![field.zero(); (degree + 1) * (degree + 2) / 2] }
    }

    pub fn linear(line: &ProjLine) -> Self {
        DegreeForm { degree: 1, coeffs: line.coords().to_vec() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn field(&self) -> &NumberField {
        self.coeffs[0].field()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Coefficient of `x^a y^b z^(d−a−b)`.
    pub fn coeff(&self, a: usize, b: usize) -> &Scalar {
        &self.coeffs[monomial_index(self.degree, a, b)]
    }

    pub fn mul(&self, other: &DegreeForm) -> Result<DegreeForm, PencilError> {
        let d = self.degree + other.degree;
        let mut out = DegreeForm::zero(self.field(), d);
        let ma = monomials(self.degree);
        let mb = monomials(other.degree);
        for (i, &(a1, b1, _)) in ma.iter().enumerate() {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for (j, &(a2, b2, _)) in mb.iter().enumerate() {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let k = monomial_index(d, a1 + a2, b1 + b2);
                let term = self.coeffs[i].checked_mul(&other.coeffs[j])?;
                out.coeffs[k] = out.coeffs[k].checked_add(&term)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<DegreeForm, PencilError> {
        let coeffs = self.coeffs.iter().map(|x| x.checked_mul(c)).collect::<Result<_, _>>()?;
        Ok(DegreeForm { degree: self.degree, coeffs })
    }

    pub fn add(&self, other: &DegreeForm) -> Result<DegreeForm, PencilError> {
        if self.degree != other.degree {
            return Err(PencilError::DegreeMismatch(self.degree, other.degree));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_, _>>()?;
        Ok(DegreeForm { degree: self.degree, coeffs })
    }

    /// Scaled so the first nonzero coefficient is 1.
    pub fn normalized(&self) -> Result<DegreeForm, PencilError> {
        let lead = self.coeffs.iter().find(|c| !c.is_zero()).ok_or(PencilError::ZeroForm)?;
        self.scale(&lead.inv()?)
    }

    /// Equal up to a nonzero scalar.
    pub fn proj_eq(&self, other: &DegreeForm) -> bool {
        match (self.normalized(), other.normalized()) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    pub fn evaluate(&self, p: &ProjPoint) -> Result<Scalar, PencilError> {
        let [x, y, z] = p.coords();
        let mut acc = self.field().zero();
        for (c, (a, b, e)) in self.coeffs.iter().zip(monomials(self.degree)) {
            if c.is_zero() {
                continue;
            }
            let term = c.checked_mul(&x.pow(a as u32))?.checked_mul(&y.pow(b as u32))?.checked_mul(&z.pow(e as u32))?;
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for DegreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = vec![];
        for (c, (a, b, e)) in self.coeffs.iter().zip(monomials(self.degree)) {
            if c.is_zero() {
                continue;
            }
            let mono = [("x", a), ("y", b), ("z", e)]
                .iter()
                .filter(|(_, n)| *n > 0)
                .map(|(v, n)| if *n == 1 { v.to_string() } else { format!("{v}^{n}") })
                .join("*");
            let coeff = if c.as_rational().is_some() { c.to_string() } else { format!("({c})") };
            terms.push(match (c.is_one(), mono.is_empty()) {
                (_, true) => coeff,
                (true, false) => mono,
                (false, false) => format!("{coeff}*{mono}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for DegreeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeForm({self})")
    }
}

/// The product of the linear forms of `lines`, with no rescaling.
pub fn product_of_lines(lines: &[ProjLine]) -> Result<DegreeForm, PencilError> {
    let (first, rest) = lines.split_first().ok_or(PencilError::Empty)?;
    let mut out = DegreeForm::linear(first);
    for l in rest {
        out = out.mul(&DegreeForm::linear(l))?;
    }
    Ok(out)
}

fn coefficient_matrix(forms: &[DegreeForm]) -> Result<Vec<Vec<Scalar>>, PencilError> {
    let d = forms.first().ok_or(PencilError::Empty)?.degree;
    if let Some(f) = forms.iter().find(|f| f.degree != d) {
        return Err(PencilError::DegreeMismatch(d, f.degree));
    }
    Ok(forms.iter().map(|f| f.coeffs.clone()).collect())
}

/// Rank of the coefficient matrix of forms of one degree.
pub fn forms_rank(forms: &[DegreeForm]) -> Result<usize, PencilError> {
    Ok(linalg::rank(&coefficient_matrix(forms)?)?)
}

/// A projective point `[λ : μ]` of the pencil's parameter line.
#[derive(Clone, Debug)]
pub struct PencilCoord {
    pub lambda: Scalar,
    pub mu: Scalar,
}

impl PencilCoord {
    pub fn new(lambda: Scalar, mu: Scalar) -> Self {
        PencilCoord { lambda, mu }
    }

    /// Scaled so the first nonzero entry is 1.
    pub fn normalized(&self) -> PencilCoord {
        let lead = if self.lambda.is_zero() { &self.mu } else { &self.lambda };
        match lead.inv() {
            Ok(inv) => PencilCoord { lambda: &self.lambda * &inv, mu: &self.mu * &inv },
            Err(_) => self.clone(),
        }
    }
}

impl PartialEq for PencilCoord {
    fn eq(&self, other: &Self) -> bool {
        &self.lambda * &other.mu == &self.mu * &other.lambda
    }
}

impl Eq for PencilCoord {}

impl fmt::Display for PencilCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized();
        write!(f, "[{} : {}]", n.lambda, n.mu)
    }
}

/// The forms `λF + μG`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    f: DegreeForm,
    g: DegreeForm,
}

impl Pencil {
    pub fn new(f: DegreeForm, g: DegreeForm) -> Result<Self, PencilError> {
        if forms_rank(&[f.clone(), g.clone()])? != 2 {
            return Err(PencilError::DependentGenerators);
        }
        Ok(Pencil { f, g })
    }

    pub fn generators(&self) -> (&DegreeForm, &DegreeForm) {
        (&self.f, &self.g)
    }

    pub fn member(&self, c: &PencilCoord) -> Result<DegreeForm, PencilError> {
        self.f.scale(&c.lambda)?.add(&self.g.scale(&c.mu)?)
    }

    /// `[λ : μ]` with `H` proportional to `λF + μG`.
    pub fn coords(&self, h: &DegreeForm) -> Result<PencilCoord, PencilError> {
        pencil_coords(self, h)
    }
}

/// Solves `H = c(λF + μG)` for the projective pair `[λ : μ]`.
pub fn pencil_coords(pencil: &Pencil, h: &DegreeForm) -> Result<PencilCoord, PencilError> {
    let (f, g) = (&pencil.f, &pencil.g);
    if h.degree != f.degree {
        return Err(PencilError::DegreeMismatch(f.degree, h.degree));
    }
    if h.is_zero() {
        return Err(PencilError::ZeroForm);
    }
    // pick two monomials on which F and G are independent and solve there
    let n = f.coeffs.len();
    for (i, j) in (0..n).tuple_combinations() {
        let det = &f.coeffs[i] * &g.coeffs[j] - &f.coeffs[j] * &g.coeffs[i];
        if det.is_zero() {
            continue;
        }
        let lambda = (&h.coeffs[i] * &g.coeffs[j] - &h.coeffs[j] * &g.coeffs[i]).checked_div(&det)?;
        let mu = (&f.coeffs[i] * &h.coeffs[j] - &f.coeffs[j] * &h.coeffs[i]).checked_div(&det)?;
        let c = PencilCoord::new(lambda, mu);
        if pencil.member(&c)? != *h {
            return Err(PencilError::NotInPencil);
        }
        return Ok(c.normalized());
    }
    Err(PencilError::DependentGenerators)
}

/// Both generators vanish at every point.
pub fn base_points_check(pencil: &Pencil, points: &[ProjPoint]) -> Result<bool, PencilError> {
    for p in points {
        if !pencil.f.evaluate(p)?.is_zero() || !pencil.g.evaluate(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct PencilCertificate {
    /// `C_i`, the product of the lines of class `i`.
    pub forms: Vec<DegreeForm>,
    pub rank: usize,
    /// Generated by `C₁` and `C₂`.
    pub pencil: Pencil,
    /// `[λ : μ]` of each `C_i`; the first two are `[1:0]` and `[0:1]`.
    pub coords: Vec<PencilCoord>,
    pub base_points_ok: bool,
}

/// Builds the class products of a verified net and checks they span a pencil.
pub fn net_pencil_certificate(config: &KNetConfig) -> Result<PencilCertificate, PencilError> {
    let report = verify_net(config).map_err(|_| PencilError::NotANet)?;
    if !report.passed() || config.k() < 2 {
        return Err(PencilError::NotANet);
    }
    let forms: Vec<DegreeForm> = config
        .classes()
        .iter()
        .map(|c| product_of_lines(c.lines()))
        .collect::<Result<_, _>>()?;
    let rank = forms_rank(&forms)?;
    if rank != 2 {
        return Err(PencilError::RankViolation { rank, matrix: coefficient_matrix(&forms)? });
    }
    let pencil = Pencil::new(forms[0].clone(), forms[1].clone())?;
    let coords = forms.iter().map(|h| pencil_coords(&pencil, h)).collect::<Result<_, _>>()?;
    let base_points_ok = base_points_check(&pencil, config.points())?;
    Ok(PencilCertificate { forms, rank, pencil, coords, base_points_ok })
}
