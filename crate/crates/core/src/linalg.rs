//! Fraction-free exact elimination.
//!
//! All routines work over a [`Scalar`] ring and never leave it: the
//! Gauss–Jordan variant keeps every intermediate entry equal to a minor of
//! the input, so each division is exact and coefficient growth stays
//! polynomial. Rational answers are formed only at the very end.

use num_traits::Zero;

use crate::scalar::{Rational, Scalar};

/// Result of a fraction-free Gauss–Jordan reduction.
///
/// The first `pivots.len()` rows are the nonzero rows; row `i` has the
/// entry `scale` in column `pivots[i]` and zeros in every other pivot column.
#[derive(Debug, Clone)]
pub struct RowReduced<S> {
    pub rows: Vec<Vec<S>>,
    pub pivots: Vec<usize>,
    pub scale: S,
}

impl<S> RowReduced<S> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Reduces `rows` in place, choosing pivots only among the first
/// `pivot_limit` columns. Updates still sweep every column, which is how
/// augmented right-hand sides ride along.
pub fn row_reduce<S: Scalar>(mut rows: Vec<Vec<S>>, pivot_limit: usize) -> RowReduced<S> {
    let m = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let limit = pivot_limit.min(width);
    let mut prev = S::one();
    let mut pivots = Vec::new();
    let mut k = 0;

    for c in 0..limit {
        if k == m {
            break;
        }
        // smallest nonzero entry keeps the scale down
        let Some(p) = (k..m)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()))
        else {
            continue;
        };
        rows.swap(k, p);
        let pivot_row = rows[k].clone();
        let piv = pivot_row[c].clone();

        for (i, row) in rows.iter_mut().enumerate() {
            if i == k || row.iter().all(Zero::is_zero) {
                continue;
            }
            let factor = row[c].clone();
            for (a, b) in row.iter_mut().zip(&pivot_row) {
                let mut v = piv.clone() * a.clone();
                if !factor.is_zero() {
                    v = v - factor.clone() * b.clone();
                }
                *a = if prev.is_one() { v } else { v / prev.clone() };
            }
        }
        prev = piv;
        pivots.push(c);
        k += 1;
    }

    RowReduced {
        rows,
        pivots,
        scale: prev,
    }
}

pub fn rank<S: Scalar>(rows: Vec<Vec<S>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    row_reduce(rows, width).rank()
}

/// Determinant by Bareiss elimination. Panics if `m` is not square.
pub fn determinant<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let size = m.len();
    assert!(
        m.iter().all(|row| row.len() == size),
        "determinant of a non-square matrix"
    );
    if size == 0 {
        return S::one();
    }
    let mut sign_flip = false;
    let mut prev = S::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign_flip = !sign_flip;
                }
                None => return S::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Integer basis of the right kernel `{y : rows · y = 0}` for a matrix with
/// `ncols` columns.
pub fn nullspace<S: Scalar>(rows: Vec<Vec<S>>, ncols: usize) -> Vec<Vec<S>> {
    if rows.is_empty() {
        return (0..ncols)
            .map(|f| {
                (0..ncols)
                    .map(|j| if j == f { S::one() } else { S::zero() })
                    .collect()
            })
            .collect();
    }
    let reduced = row_reduce(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &reduced.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut y = vec![S::zero(); ncols];
            y[f] = reduced.scale.clone();
            for (i, &p) in reduced.pivots.iter().enumerate() {
                y[p] = -reduced.rows[i][f].clone();
            }
            primitive(y)
        })
        .collect()
}

/// Divides out the content of an integer vector and makes its first nonzero
/// entry positive.
pub fn primitive<S: Scalar>(mut v: Vec<S>) -> Vec<S> {
    let g = v.iter().fold(S::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v;
    }
    let negate = v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = x.clone() / g.clone();
        if negate {
            *x = -x.clone();
        }
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    RankDeficient { rank: usize, columns: usize },
    Inconsistent { rhs: usize },
}

/// Solves `a · x = b` for every `b` in `rhs`, where `a` has more rows than
/// columns and is expected to have full column rank. Rows beyond the rank
/// act as held-out checks: each system must be consistent on all of them.
pub fn solve_overdetermined<S: Scalar>(
    a: &[Vec<S>],
    rhs: &[Vec<S>],
) -> Result<Vec<Vec<Rational<S>>>, SolveError> {
    let columns = a.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<S>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut out = row.clone();
            out.extend(rhs.iter().map(|b| b[i].clone()));
            out
        })
        .collect();
    let reduced = row_reduce(augmented, columns);
    if reduced.rank() < columns {
        return Err(SolveError::RankDeficient {
            rank: reduced.rank(),
            columns,
        });
    }
    for row in &reduced.rows[columns..] {
        if let Some(q) = row[columns..].iter().position(|v| !v.is_zero()) {
            return Err(SolveError::Inconsistent { rhs: q });
        }
    }
    Ok((0..rhs.len())
        .map(|q| {
            (0..columns)
                .map(|i| Rational::new(reduced.rows[i][columns + q].clone(), reduced.scale.clone()))
                .collect()
        })
        .collect())
}
