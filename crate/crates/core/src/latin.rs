//! Latin squares: validity, orthogonality, isotopy and canonical forms.
//!
//! Symbols are `1..=d`, matching the usual written matrices; row and column
//! indices are 0-based.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

/// Largest order for which canonical forms are computed.
pub const MAX_CANONICAL_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatinDefect {
    Empty,
    NotSquare { row: usize, len: usize },
    SymbolOutOfRange { row: usize, col: usize, value: usize },
    RowRepeat { row: usize, symbol: usize },
    ColumnRepeat { col: usize, symbol: usize },
}

impl fmt::Display for LatinDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatinDefect::Empty => write!(f, "empty matrix"),
            LatinDefect::NotSquare { row, len } => write!(f, "row {row} has length {len}"),
            LatinDefect::SymbolOutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} out of range")
            }
            LatinDefect::RowRepeat { row, symbol } => write!(f, "symbol {symbol} repeats in row {row}"),
            LatinDefect::ColumnRepeat { col, symbol } => {
                write!(f, "symbol {symbol} repeats in column {col}")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatinError {
    #[error("not a Latin square: {0}")]
    Invalid(LatinDefect),
    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("order {0} exceeds the supported maximum")]
    OrderTooLarge(usize),
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
}

/// Checks the row and column conditions, reporting the first defect.
pub fn check_latin(cells: &[Vec<usize>]) -> Result<(), LatinDefect> {
    let d = cells.len();
    if d == 0 {
        return Err(LatinDefect::Empty);
    }
    for (row, r) in cells.iter().enumerate() {
        if r.len() != d {
            return Err(LatinDefect::NotSquare { row, len: r.len() });
        }
        for (col, &value) in r.iter().enumerate() {
            if value == 0 || value > d {
                return Err(LatinDefect::SymbolOutOfRange { row, col, value });
            }
        }
    }
    for (row, r) in cells.iter().enumerate() {
        let mut seen = vec![false; d + 1];
        for &v in r {
            if std::mem::replace(&mut seen[v], true) {
                return Err(LatinDefect::RowRepeat { row, symbol: v });
            }
        }
    }
    for col in 0..d {
        let mut seen = vec![false; d + 1];
        for r in cells {
            let v = r[col];
            if std::mem::replace(&mut seen[v], true) {
                return Err(LatinDefect::ColumnRepeat { col, symbol: v });
            }
        }
    }
    Ok(())
}

pub fn is_latin(cells: &[Vec<usize>]) -> bool {
    check_latin(cells).is_ok()
}

/// A permutation of `0..n`, stored as the list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, LatinError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(LatinError::InvalidPermutation(n));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(Permutation)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }
}

/// Independent relabelings of rows, columns and symbols (all 0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isotopy {
    pub rows: Permutation,
    pub cols: Permutation,
    pub symbols: Permutation,
}

impl Isotopy {
    pub fn identity(d: usize) -> Self {
        Isotopy {
            rows: Permutation::identity(d),
            cols: Permutation::identity(d),
            symbols: Permutation::identity(d),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn inverse(&self) -> Self {
        Isotopy {
            rows: self.rows.inverse(),
            cols: self.cols.inverse(),
            symbols: self.symbols.inverse(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    Cyclic(usize),
    /// `Z/2 × Z/2`
    Klein,
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(d) => write!(f, "Z/{d}"),
            GroupName::Klein => write!(f, "Z/2 x Z/2"),
        }
    }
}

/// A Latin square of order `d` with symbols `1..=d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatinSquare {
    order: usize,
    cells: Vec<u8>,
}

impl LatinSquare {
    pub fn new(cells: Vec<Vec<usize>>) -> Result<Self, LatinError> {
        check_latin(&cells).map_err(LatinError::Invalid)?;
        let order = cells.len();
        if order > u8::MAX as usize {
            return Err(LatinError::OrderTooLarge(order));
        }
        Ok(LatinSquare {
            order,
            cells: cells.into_iter().flatten().map(|v| v as u8).collect(),
        })
    }

    fn from_flat(order: usize, cells: Vec<u8>) -> Self {
        debug_assert!(is_latin(
            &cells.chunks(order).map(|r| r.iter().map(|&v| v as usize).collect()).collect::<Vec<_>>()
        ));
        LatinSquare { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Symbol (1-based) at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.cells[row * self.order + col] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// First row and first column both in natural order.
    pub fn is_reduced(&self) -> bool {
        (0..self.order).all(|i| self.get(0, i) == i + 1 && self.get(i, 0) == i + 1)
    }
}

impl fmt::Debug for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatinSquare{:?}", self.rows())
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

/// Every ordered pair of symbols occurs exactly once when `l` and `m` are
/// superimposed.
pub fn is_orthogonal_pair(l: &LatinSquare, m: &LatinSquare) -> Result<bool, LatinError> {
    if l.order != m.order {
        return Err(LatinError::OrderMismatch(l.order, m.order));
    }
    let d = l.order;
    let mut seen = vec![false; d * d];
    for (&a, &b) in l.cells.iter().zip(&m.cells) {
        let k = (a as usize - 1) * d + (b as usize - 1);
        if std::mem::replace(&mut seen[k], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_orthogonal_set(squares: &[LatinSquare]) -> Result<bool, LatinError> {
    if let Some(first) = squares.first() {
        if let Some(bad) = squares.iter().find(|s| s.order != first.order) {
            return Err(LatinError::OrderMismatch(first.order, bad.order));
        }
    }
    for (a, b) in squares.iter().tuple_combinations() {
        if !is_orthogonal_pair(a, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `cells'[i][j] = symbols(cells[rows⁻¹(i)][cols⁻¹(j)])`.
pub fn apply_isotopy(l: &LatinSquare, iso: &Isotopy) -> Result<LatinSquare, LatinError> {
    let d = l.order;
    for p in [&iso.rows, &iso.cols, &iso.symbols] {
        if p.len() != d {
            return Err(LatinError::OrderMismatch(d, p.len()));
        }
    }
    let mut cells = vec![0u8; d * d];
    for i in 0..d {
        for j in 0..d {
            let v = l.get(i, j) - 1;
            cells[iso.rows.apply(i) * d + iso.cols.apply(j)] = (iso.symbols.apply(v) + 1) as u8;
        }
    }
    Ok(LatinSquare::from_flat(d, cells))
}

/// The lexicographically least flattened matrix in the isotopy class of `l`.
///
/// Rows and columns are minimized by exhaustion. For a fixed row and column
/// arrangement the least symbol relabeling numbers symbols in order of first
/// appearance, so the minimum over all `(d!)³` isotopies is reached without
/// enumerating symbol permutations.
pub fn canonical_form(l: &LatinSquare) -> Result<LatinSquare, LatinError> {
    let d = l.order;
    if d > MAX_CANONICAL_ORDER {
        return Err(LatinError::OrderTooLarge(d));
    }
    let perms: Vec<Vec<usize>> = (0..d).permutations(d).collect();
    let mut best: Option<Vec<u8>> = None;
    let mut cand = vec![0u8; d * d];
    let mut relabel = vec![0u8; d + 1];
    for rp in &perms {
        for cp in &perms {
            relabel.iter_mut().for_each(|r| *r = 0);
            let mut next = 1u8;
            let mut worse = false;
            let mut tie = best.is_some();
            for (k, slot) in cand.iter_mut().enumerate() {
                let v = l.cells[rp[k / d] * d + cp[k % d]] as usize;
                if relabel[v] == 0 {
                    relabel[v] = next;
                    next += 1;
                }
                *slot = relabel[v];
                if tie {
                    let b = best.as_ref().unwrap()[k];
                    if *slot > b {
                        worse = true;
                        break;
                    }
                    if *slot < b {
                        tie = false;
                    }
                }
            }
            if !worse && (best.is_none() || !tie) {
                best = Some(cand.clone());
            }
        }
    }
    Ok(LatinSquare::from_flat(d, best.expect("at least one isotopy")))
}

pub fn are_isotopic(a: &LatinSquare, b: &LatinSquare) -> Result<bool, LatinError> {
    if a.order != b.order {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Cayley table of `Z/d` (elements numbered `1..=d`, identity 1).
pub fn cyclic_group_table(d: usize) -> LatinSquare {
    assert!(d >= 1, "cyclic group of order zero");
    let cells = (0..d * d).map(|k| ((k / d + k % d) % d + 1) as u8).collect();
    LatinSquare::from_flat(d, cells)
}

/// Cayley table of `Z/2 × Z/2`.
pub fn klein_group_table() -> LatinSquare {
    let cells = (0..16).map(|k| (((k / 4) ^ (k % 4)) + 1) as u8).collect();
    LatinSquare::from_flat(4, cells)
}

pub fn group_table(group: GroupName) -> LatinSquare {
    match group {
        GroupName::Cyclic(d) => cyclic_group_table(d),
        GroupName::Klein => klein_group_table(),
    }
}

/// All groups of order `d ≤ 5` up to isomorphism.
pub fn groups_of_order(d: usize) -> Vec<GroupName> {
    match d {
        4 => vec![GroupName::Cyclic(4), GroupName::Klein],
        _ => vec![GroupName::Cyclic(d)],
    }
}

/// The group whose Cayley table is isotopic to `l`, if any.
pub fn is_group_isotopic(l: &LatinSquare) -> Result<Option<GroupName>, LatinError> {
    let canon = canonical_form(l)?;
    for g in groups_of_order(l.order) {
        if canonical_form(&group_table(g))? == canon {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Reduced Latin squares of order `d` (first row and column natural), by
/// row-by-row backtracking, in lexicographic order.
pub fn enumerate_reduced(d: usize) -> Result<Vec<LatinSquare>, LatinError> {
    if d > 6 {
        return Err(LatinError::OrderTooLarge(d));
    }
    if d == 0 {
        return Ok(vec![]);
    }
    let mut grid = vec![0u8; d * d];
    for i in 0..d {
        grid[i] = (i + 1) as u8;
        grid[i * d] = (i + 1) as u8;
    }
    let mut out = vec![];
    fill(&mut grid, d, d + 1, &mut out);
    Ok(out)
}

fn fill(grid: &mut [u8], d: usize, k: usize, out: &mut Vec<LatinSquare>) {
    if k >= d * d {
        out.push(LatinSquare::from_flat(d, grid.to_vec()));
        return;
    }
    let (r, c) = (k / d, k % d);
    if c == 0 {
        return fill(grid, d, k + 1, out);
    }
    for v in 1..=d as u8 {
        let row_ok = (0..c).all(|j| grid[r * d + j] != v);
        let col_ok = (0..r).all(|i| grid[i * d + c] != v);
        if row_ok && col_ok {
            grid[k] = v;
            fill(grid, d, k + 1, out);
            grid[k] = 0;
        }
    }
}

/// Canonical representatives of all isotopy classes of order `d ≤ 5`,
/// sorted.
pub fn classify_isotopy_classes(d: usize) -> Result<Vec<LatinSquare>, LatinError> {
    if d > MAX_CANONICAL_ORDER {
        return Err(LatinError::OrderTooLarge(d));
    }
    let mut classes = BTreeSet::new();
    for l in enumerate_reduced(d)? {
        classes.insert(canonical_form(&l)?);
    }
    Ok(classes.into_iter().collect())
}

fn square(rows: &[&[usize]]) -> LatinSquare {
    LatinSquare::new(rows.iter().map(|r| r.to_vec()).collect()).expect("catalog square is Latin")
}

/// The orthogonal pair of order 3 (cyclic table and its orthogonal mate).
pub fn orthogonal_pair_order3() -> [LatinSquare; 2] {
    [
        square(&[&[1, 2, 3], &[2, 3, 1], &[3, 1, 2]]),
        square(&[&[1, 2, 3], &[3, 1, 2], &[2, 3, 1]]),
    ]
}

/// A complete orthogonal set of three squares of order 4.
pub fn orthogonal_triple_order4() -> [LatinSquare; 3] {
    [
        square(&[&[1, 2, 3, 4], &[2, 1, 4, 3], &[3, 4, 1, 2], &[4, 3, 2, 1]]),
        square(&[&[1, 2, 3, 4], &[3, 4, 1, 2], &[4, 3, 2, 1], &[2, 1, 4, 3]]),
        square(&[&[1, 2, 3, 4], &[4, 3, 2, 1], &[2, 1, 4, 3], &[3, 4, 1, 2]]),
    ]
}

/// An order-5 loop table that is not isotopic to any group table.
pub fn non_group_order5() -> LatinSquare {
    square(&[
        &[1, 2, 3, 4, 5],
        &[2, 1, 4, 5, 3],
        &[3, 5, 1, 2, 4],
        &[4, 3, 5, 1, 2],
        &[5, 4, 2, 3, 1],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latin_checks() {
        assert!(is_latin(&[vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]));
        assert_eq!(
            check_latin(&[vec![1, 2], vec![1, 2]]),
            Err(LatinDefect::ColumnRepeat { col: 0, symbol: 1 })
        );
        assert!(is_latin(&[vec![1]]));
        assert_eq!(check_latin(&[]), Err(LatinDefect::Empty));
        assert_eq!(check_latin(&[vec![1, 2], vec![2]]), Err(LatinDefect::NotSquare { row: 1, len: 1 }));
        assert_eq!(
            check_latin(&[vec![1, 3], vec![2, 1]]),
            Err(LatinDefect::SymbolOutOfRange { row: 0, col: 1, value: 3 })
        );
        assert_eq!(
            check_latin(&[vec![1, 1], vec![2, 2]]),
            Err(LatinDefect::RowRepeat { row: 0, symbol: 1 })
        );
    }

    #[test]
    fn orthogonality() {
        let [a, b] = orthogonal_pair_order3();
        assert!(is_orthogonal_pair(&a, &b).unwrap());
        assert!(!is_orthogonal_pair(&a, &a).unwrap());
        let t = orthogonal_triple_order4();
        assert!(is_orthogonal_set(&t).unwrap());
        assert!(is_orthogonal_set(&t[..1]).unwrap());
        assert!(!is_orthogonal_set(&[t[0].clone(), t[0].clone()]).unwrap());
        assert_eq!(is_orthogonal_pair(&a, &t[0]), Err(LatinError::OrderMismatch(3, 4)));
    }

    #[test]
    fn isotopy_application() {
        let z2 = cyclic_group_table(2);
        assert_eq!(apply_isotopy(&z2, &Isotopy::identity(2)).unwrap(), z2);
        let swap = Isotopy {
            rows: Permutation::identity(2),
            cols: Permutation::identity(2),
            symbols: Permutation::new(vec![1, 0]).unwrap(),
        };
        assert_eq!(apply_isotopy(&z2, &swap).unwrap().rows(), vec![vec![2, 1], vec![1, 2]]);
        let iso = Isotopy {
            rows: Permutation::new(vec![2, 0, 3, 1, 4]).unwrap(),
            cols: Permutation::new(vec![4, 3, 2, 1, 0]).unwrap(),
            symbols: Permutation::new(vec![1, 2, 0, 4, 3]).unwrap(),
        };
        let l = non_group_order5();
        let there = apply_isotopy(&l, &iso).unwrap();
        assert_eq!(apply_isotopy(&there, &iso.inverse()).unwrap(), l);
        assert!(apply_isotopy(&z2, &Isotopy::identity(3)).is_err());
    }

    #[test]
    fn group_tables() {
        assert_eq!(cyclic_group_table(2).rows(), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(cyclic_group_table(3).rows(), vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]);
        assert_eq!(
            klein_group_table().rows(),
            vec![vec![1, 2, 3, 4], vec![2, 1, 4, 3], vec![3, 4, 1, 2], vec![4, 3, 2, 1]]
        );
    }

    #[test]
    fn canonical_forms() {
        let [a, _] = orthogonal_pair_order3();
        assert_eq!(canonical_form(&cyclic_group_table(3)).unwrap(), canonical_form(&a).unwrap());
        assert_ne!(
            canonical_form(&non_group_order5()).unwrap(),
            canonical_form(&cyclic_group_table(5)).unwrap()
        );
        assert_eq!(canonical_form(&cyclic_group_table(6)), Err(LatinError::OrderTooLarge(6)));
    }

    /// Brute force over all (d!)³ isotopies; used to check the first-appearance shortcut.
    fn brute_canonical(l: &LatinSquare) -> LatinSquare {
        let d = l.order();
        let perms: Vec<Permutation> = Permutation::all(d).collect();
        let mut best: Option<LatinSquare> = None;
        for r in &perms {
            for c in &perms {
                for s in &perms {
                    let iso = Isotopy { rows: r.clone(), cols: c.clone(), symbols: s.clone() };
                    let cand = apply_isotopy(l, &iso).unwrap();
                    if best.as_ref().is_none_or(|b| cand.cells < b.cells) {
                        best = Some(cand);
                    }
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn canonical_form_matches_brute_force() {
        for l in enumerate_reduced(4).unwrap() {
            assert_eq!(canonical_form(&l).unwrap(), brute_canonical(&l));
        }
        assert_eq!(canonical_form(&cyclic_group_table(3)).unwrap(), brute_canonical(&cyclic_group_table(3)));
    }

    #[test]
    fn group_recognition() {
        assert_eq!(is_group_isotopic(&cyclic_group_table(5)).unwrap(), Some(GroupName::Cyclic(5)));
        assert_eq!(is_group_isotopic(&non_group_order5()).unwrap(), None);
        assert_eq!(is_group_isotopic(&klein_group_table()).unwrap(), Some(GroupName::Klein));
        assert_eq!(is_group_isotopic(&cyclic_group_table(4)).unwrap(), Some(GroupName::Cyclic(4)));
    }

    #[test]
    fn reduced_counts_and_classes() {
        let counts: Vec<usize> = (1..=5).map(|d| enumerate_reduced(d).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 4, 56]);
        assert!(enumerate_reduced(5).unwrap().iter().all(LatinSquare::is_reduced));
        let classes: Vec<usize> = (1..=5).map(|d| classify_isotopy_classes(d).unwrap().len()).collect();
        assert_eq!(classes, vec![1, 1, 1, 2, 2]);
        assert_eq!(classify_isotopy_classes(6), Err(LatinError::OrderTooLarge(6)));
    }

    #[test]
    fn permutations() {
        let p = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert_eq!(Permutation::all(4).count(), 24);
    }
}
