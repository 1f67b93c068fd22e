//! Fraction-free (Bareiss) elimination over a [`NumberField`].

use crate::scalar::{FieldError, NumberField, Scalar};

fn check_fields(rows: &[Vec<Scalar>]) -> Result<Option<NumberField>, FieldError> {
    let mut field: Option<&NumberField> = None;
    for s in rows.iter().flatten() {
        match field {
            None => field = Some(s.field()),
            Some(f) if f != s.field() => return Err(FieldError::FieldMismatch),
            _ => {}
        }
    }
    Ok(field.cloned())
}

/// Eliminates in place and returns `(rank, pivot swaps, skipped a column)`.
fn bareiss(a: &mut [Vec<Scalar>], one: Scalar) -> (usize, usize, bool) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = one;
    let mut r = 0;
    let mut swaps = 0;
    let mut skipped = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            skipped = true;
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let pivot = a[r][c].clone();
        let prev_inv = prev.inv().expect("Bareiss pivots are nonzero");
        for i in r + 1..rows {
            let factor = a[i][c].clone();
            for j in c + 1..cols {
                let v = &(&(&pivot * &a[i][j]) - &(&factor * &a[r][j])) * &prev_inv;
                a[i][j] = v;
            }
            a[i][c] = pivot.field().zero();
        }
        prev = pivot;
        r += 1;
    }
    (r, swaps, skipped)
}

/// Exact rank of a rectangular matrix given as rows.
pub fn rank(rows: &[Vec<Scalar>]) -> Result<usize, FieldError> {
    let Some(field) = check_fields(rows)? else {
        return Ok(0);
    };
    let mut a = rows.to_vec();
    Ok(bareiss(&mut a, field.one()).0)
}

/// Exact determinant of a square matrix.
pub fn determinant(rows: &[Vec<Scalar>]) -> Result<Scalar, FieldError> {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let field = check_fields(rows)?.unwrap_or_else(NumberField::rationals);
    if n == 0 {
        return Ok(field.one());
    }
    let mut a = rows.to_vec();
    let (r, swaps, skipped) = bareiss(&mut a, field.one());
    if r < n || skipped {
        return Ok(field.zero());
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if swaps % 2 == 1 { -d } else { d })
}

/// Solves the square system `A x = b` by Cramer's rule; `None` if singular.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Option<Vec<Scalar>>, FieldError> {
    let det = determinant(a)?;
    if det.is_zero() {
        return Ok(None);
    }
    let n = a.len();
    let mut x = Vec::with_capacity(n);
    for k in 0..n {
        let replaced: Vec<Vec<Scalar>> = a
            .iter()
            .zip(b)
            .map(|(row, bi)| {
                let mut row = row.clone();
                row[k] = bi.clone();
                row
            })
            .collect();
        x.push(determinant(&replaced)?.checked_div(&det)?);
    }
    Ok(Some(x))
}
