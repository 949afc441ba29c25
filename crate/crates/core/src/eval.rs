//! Evaluation of Plücker polynomials at `r × n` integer matrices, where
//! `p_τ` is the maximal minor on the columns `τ`, and the random points
//! used as evaluation oracles.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};
use crate::lattice::{check_same_shape, IndexTuple};
use crate::linalg::{determinant, rank};
use crate::plucker::{PluckerMonomial, PluckerPolynomial};
use crate::scalar::Scalar;

/// Entry range for unconstrained evaluation points.
pub const MATRIX_ENTRY_RANGE: i64 = 5;
/// Range of the strictly-upper entries of the Borel element used for
/// Schubert points.
pub const BOREL_ENTRY_RANGE: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<S>>,
}

impl<S: Scalar> IntegerMatrix<S> {
    pub fn new(entries: Vec<Vec<S>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 || entries.iter().any(|r| r.len() != cols) {
            return Err(invalid("matrix must be a nonempty rectangle"));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_i64(entries: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            entries
                .iter()
                .map(|r| r.iter().map(|&v| S::from(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<S>] {
        &self.entries
    }

    /// Maximal minor on the columns of `tau`.
    pub fn minor(&self, tau: &IndexTuple) -> Result<S> {
        check_same_shape((self.rows, self.cols), tau.shape())?;
        Ok(self.minor_unchecked(tau))
    }

    fn minor_unchecked(&self, tau: &IndexTuple) -> S {
        let sub: Vec<Vec<S>> = self
            .entries
            .iter()
            .map(|row| tau.values().iter().map(|&c| row[c - 1].clone()).collect())
            .collect();
        determinant(sub)
    }

    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> IntegerMatrix<T> {
        IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }
}

/// A point together with a cache of the minors requested so far.
pub struct PointEvaluator<'a, S> {
    point: &'a IntegerMatrix<S>,
    minors: HashMap<IndexTuple, S>,
}

impl<'a, S: Scalar> PointEvaluator<'a, S> {
    pub fn new(point: &'a IntegerMatrix<S>) -> Self {
        Self {
            point,
            minors: HashMap::new(),
        }
    }

    pub fn minor(&mut self, tau: &IndexTuple) -> S {
        if let Some(v) = self.minors.get(tau) {
            return v.clone();
        }
        let v = self.point.minor_unchecked(tau);
        self.minors.insert(tau.clone(), v.clone());
        v
    }

    pub fn monomial(&mut self, m: &PluckerMonomial) -> S {
        let mut acc = S::one();
        for row in m.rows() {
            let v = self.minor(row);
            if v.is_zero() {
                return v;
            }
            acc = acc * v;
        }
        acc
    }

    pub fn polynomial(&mut self, f: &PluckerPolynomial<S>) -> S {
        let mut acc = S::zero();
        for (m, c) in f.terms() {
            acc = acc + c.clone() * self.monomial(m);
        }
        acc
    }
}

/// Exact value of `f` at the row space of `m`.
pub fn evaluate<S: Scalar>(f: &PluckerPolynomial<S>, m: &IntegerMatrix<S>) -> Result<S> {
    check_same_shape(f.shape(), (m.rows(), m.cols()))?;
    Ok(PointEvaluator::new(m).polynomial(f))
}

/// Deterministic stream of evaluation points for `G(r, n)`, either generic
/// or on the cone over a Schubert variety.
pub struct PointSampler {
    r: usize,
    n: usize,
    bound: Option<IndexTuple>,
    spread: i64,
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(r: usize, n: usize, bound: Option<&IndexTuple>, seed: u64) -> Result<Self> {
        if r == 0 || r > n {
            return Err(invalid(format!("no points for G({r}, {n})")));
        }
        if let Some(w) = bound {
            check_same_shape((r, n), w.shape())?;
        }
        Ok(Self {
            r,
            n,
            bound: bound.cloned(),
            spread: 1,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    /// Multiplies both entry ranges by `factor`. High-degree cells need more
    /// distinct values per entry than the default ranges offer.
    pub fn with_spread(mut self, factor: i64) -> Self {
        self.spread = factor.max(1);
        self
    }

    pub fn next_point<S: Scalar>(&mut self) -> IntegerMatrix<S> {
        let raw = match &self.bound {
            Some(w) => self.schubert_point(&w.clone()),
            None => self.generic_point(),
        };
        IntegerMatrix::from_i64(&raw).expect("sampler shapes are nonempty")
    }

    pub fn points<S: Scalar>(&mut self, count: usize) -> Vec<IntegerMatrix<S>> {
        (0..count).map(|_| self.next_point()).collect()
    }

    fn generic_point(&mut self) -> Vec<Vec<i64>> {
        let range = MATRIX_ENTRY_RANGE * self.spread;
        loop {
            let m: Vec<Vec<i64>> = (0..self.r)
                .map(|_| {
                    (0..self.n)
                        .map(|_| self.rng.gen_range(-range..=range))
                        .collect()
                })
                .collect();
            let wide: Vec<Vec<i128>> = m
                .iter()
                .map(|r| r.iter().map(|&v| v as i128).collect())
                .collect();
            if rank(wide) == self.r {
                return m;
            }
        }
    }

    // Rows are b·e_{w(i)} for a unit upper-triangular b.
    fn schubert_point(&mut self, w: &IndexTuple) -> Vec<Vec<i64>> {
        let n = self.n;
        let range = BOREL_ENTRY_RANGE * self.spread;
        let mut b = vec![vec![0i64; n]; n];
        for (i, row) in b.iter_mut().enumerate() {
            row[i] = 1;
            for entry in row.iter_mut().skip(i + 1) {
                *entry = self.rng.gen_range(-range..=range);
            }
        }
        w.values()
            .iter()
            .map(|&col| (0..n).map(|c| b[c][col - 1]).collect())
            .collect()
    }
}

/// A point on the cone over `X(w)`; deterministic in `seed`.
pub fn random_schubert_point<S: Scalar>(w: &IndexTuple, seed: u64) -> IntegerMatrix<S> {
    PointSampler::new(w.r(), w.n(), Some(w), seed)
        .expect("shape taken from w")
        .next_point()
}

/// A full-rank `r × n` matrix with entries in `[-5, 5]`.
pub fn random_matrix<S: Scalar>(r: usize, n: usize, seed: u64) -> Result<IntegerMatrix<S>> {
    Ok(PointSampler::new(r, n, None, seed)?.next_point())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::all_tuples;
    use crate::plucker::plucker_relation;
    use num_bigint::BigInt;

    fn t(v: &[usize], n: usize) -> IndexTuple {
        IndexTuple::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn identity_minor_and_scalars() {
        let m = IntegerMatrix::<i64>::from_i64(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let p12 = PluckerPolynomial::<i64>::variable(t(&[1, 2], 4));
        assert_eq!(evaluate(&p12, &m).unwrap(), 1);
        let one = PluckerPolynomial::<i64>::constant(2, 4, 1);
        assert_eq!(evaluate(&one, &m).unwrap(), 1);
        let bad = IntegerMatrix::<i64>::from_i64(&[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert!(evaluate(&p12, &bad).is_err());
    }

    #[test]
    fn three_term_relation_vanishes() {
        let rel = plucker_relation::<i64>(&t(&[1], 4), &t(&[2, 3, 4], 4), 2, 4).unwrap();
        for seed in 0..100 {
            let m = random_matrix::<i64>(2, 4, seed).unwrap();
            assert_eq!(evaluate(&rel, &m).unwrap(), 0);
        }
    }

    #[test]
    fn schubert_points_kill_minors_outside_the_interval() {
        let w = t(&[4, 5, 6], 6);
        for seed in 0..10 {
            let m = random_schubert_point::<BigInt>(&w, seed);
            for tau in all_tuples(3, 6) {
                let v = m.minor(&tau).unwrap();
                if !tau.leq(&w).unwrap() {
                    assert_eq!(v, BigInt::from(0), "{tau}");
                }
            }
            assert_ne!(m.minor(&w).unwrap(), BigInt::from(0));
        }
        let point = t(&[1, 2, 3], 6);
        let m = random_schubert_point::<i64>(&point, 3);
        for tau in all_tuples(3, 6) {
            assert_eq!(m.minor(&tau).unwrap() != 0, tau == point);
        }
    }

    #[test]
    fn points_are_deterministic() {
        let w = t(&[2, 4, 6], 6);
        assert_eq!(
            random_schubert_point::<i64>(&w, 9),
            random_schubert_point::<i64>(&w, 9)
        );
        assert_eq!(
            random_matrix::<i64>(3, 6, 4).unwrap(),
            random_matrix::<i64>(3, 6, 4).unwrap()
        );
    }

    #[test]
    fn top_schubert_point_is_generic() {
        let w = IndexTuple::top(2, 4).unwrap();
        let m = random_schubert_point::<i64>(&w, 1);
        assert_eq!(m.rows(), 2);
        assert!(all_tuples(2, 4)
            .iter()
            .any(|tau| tau != &w && m.minor(tau).unwrap() != 0));
    }
}
