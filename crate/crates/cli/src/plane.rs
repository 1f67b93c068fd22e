//! Finite projective planes from complete sets of orthogonal Latin squares.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use knet_core::latin::{is_orthogonal_pair, LatinSquare};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlaneError {
    #[error("no squares given")]
    Empty,
    #[error("squares of different orders {0} and {1}")]
    MixedOrders(usize, usize),
    #[error("order {order} needs {needed} orthogonal squares, got {found}")]
    NotComplete { order: usize, needed: usize, found: usize },
    #[error("squares {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),
}

/// Points are labels; each line is a set of point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    pub points: Vec<String>,
    pub lines: Vec<BTreeSet<usize>>,
}

impl IncidenceStructure {
    pub fn lines_through(&self, p: usize) -> impl Iterator<Item = usize> + '_ {
        self.lines.iter().positions(move |l| l.contains(&p))
    }
}

/// Affine points `(i, j)`, one ideal point per parallel class (rows, columns,
/// then one per square), and the line at infinity through the ideal points.
/// Line `n` of square `m` is `{ (i, j) : cells[i][j] = n }` plus its ideal
/// point.
pub fn build_projective_plane(squares: &[LatinSquare]) -> Result<IncidenceStructure, PlaneError> {
    let first = squares.first().ok_or(PlaneError::Empty)?;
    let n = first.order();
    if let Some(other) = squares.iter().find(|s| s.order() != n) {
        return Err(PlaneError::MixedOrders(n, other.order()));
    }
    for (a, b) in (0..squares.len()).tuple_combinations() {
        if !is_orthogonal_pair(&squares[a], &squares[b]).expect("orders checked") {
            return Err(PlaneError::NotOrthogonal(a, b));
        }
    }
    if squares.len() + 1 != n {
        return Err(PlaneError::NotComplete { order: n, needed: n.saturating_sub(1), found: squares.len() });
    }

    let affine = |i: usize, j: usize| i * n + j;
    let mut points: Vec<String> = (0..n).cartesian_product(0..n).map(|(i, j)| format!("({}, {})", i + 1, j + 1)).collect();
    let ideal_base = points.len();
    points.push("inf:rows".into());
    points.push("inf:cols".into());
    for m in 0..squares.len() {
        points.push(format!("inf:M{}", m + 3));
    }

    let mut lines = vec![];
    for i in 0..n {
        let mut l: BTreeSet<usize> = (0..n).map(|j| affine(i, j)).collect();
        l.insert(ideal_base);
        lines.push(l);
    }
    for j in 0..n {
        let mut l: BTreeSet<usize> = (0..n).map(|i| affine(i, j)).collect();
        l.insert(ideal_base + 1);
        lines.push(l);
    }
    for (m, sq) in squares.iter().enumerate() {
        for symbol in 1..=n {
            let mut l: BTreeSet<usize> = (0..n)
                .cartesian_product(0..n)
                .filter(|&(i, j)| sq.get(i, j) == symbol)
                .map(|(i, j)| affine(i, j))
                .collect();
            l.insert(ideal_base + 2 + m);
            lines.push(l);
        }
    }
    lines.push((ideal_base..points.len()).collect());
    Ok(IncidenceStructure { points, lines })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Counts,
    LineSize,
    TwoPointsOneLine,
    TwoLinesOnePoint,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Counts => "n^2 + n + 1 points and lines",
            Axiom::LineSize => "every line has n + 1 points",
            Axiom::TwoPointsOneLine => "two points lie on exactly one line",
            Axiom::TwoLinesOnePoint => "two lines meet in exactly one point",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// The first counterexample found.
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneReport {
    pub order: usize,
    pub points: usize,
    pub lines: usize,
    pub checks: Vec<AxiomCheck>,
}

impl PlaneReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }
}

impl fmt::Display for PlaneReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "projective plane of order {}: {} points, {} lines", self.order, self.points, self.lines)?;
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "  PASS {}", c.axiom)?,
                Some(w) => writeln!(f, "  FAIL {}: {w}", c.axiom)?,
            }
        }
        Ok(())
    }
}

/// Checks the plane axioms for order `n` exhaustively.
pub fn verify_axioms(plane: &IncidenceStructure, n: usize) -> PlaneReport {
    let expected = n * n + n + 1;
    let (np, nl) = (plane.points.len(), plane.lines.len());
    let counts = (np != expected || nl != expected)
        .then(|| format!("{np} points and {nl} lines, expected {expected}"));
    let line_size = plane
        .lines
        .iter()
        .position(|l| l.len() != n + 1)
        .map(|i| format!("line {i} has {} points", plane.lines[i].len()));
    let points_ok = (0..np).tuple_combinations().find_map(|(p, q)| {
        let k = plane.lines.iter().filter(|l| l.contains(&p) && l.contains(&q)).count();
        (k != 1).then(|| format!("{} and {} lie on {k} common lines", plane.points[p], plane.points[q]))
    });
    let lines_ok = (0..nl).tuple_combinations().find_map(|(a, b)| {
        let k = plane.lines[a].intersection(&plane.lines[b]).count();
        (k != 1).then(|| format!("lines {a} and {b} share {k} points"))
    });
    PlaneReport {
        order: n,
        points: np,
        lines: nl,
        checks: vec![
            AxiomCheck { axiom: Axiom::Counts, witness: counts },
            AxiomCheck { axiom: Axiom::LineSize, witness: line_size },
            AxiomCheck { axiom: Axiom::TwoPointsOneLine, witness: points_ok },
            AxiomCheck { axiom: Axiom::TwoLinesOnePoint, witness: lines_ok },
        ],
    }
}
