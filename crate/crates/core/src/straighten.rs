//! Straightening into the standard-monomial basis by exact
//! evaluation–interpolation.
//!
//! Standard monomials of a fixed degree, torus weight and Schubert bound
//! form a basis of their weight space, so a polynomial is expanded cell by
//! cell: evaluate the candidate basis and the input at random points of the
//! (Schubert) cone, solve the overdetermined integer system exactly, and
//! confirm the expansion on points that were not used for the solve.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::eval::{IntegerMatrix, PointEvaluator, PointSampler};
use crate::lattice::{check_same_shape, IndexTuple};
use crate::linalg::{solve_overdetermined, SolveError};
use crate::plucker::{PluckerMonomial, PluckerPolynomial};
use crate::scalar::{Rational, Scalar};
use crate::tableau::{enumerate_standard, Content};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StraightenOptions {
    pub seed: u64,
    /// Sample points beyond the basis size; these double as held-out checks.
    pub extra_samples: usize,
    pub max_reseeds: usize,
    /// Fresh points evaluated after the solve.
    pub fresh_checks: usize,
}

impl Default for StraightenOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            extra_samples: 8,
            max_reseeds: 3,
            fresh_checks: 8,
        }
    }
}

impl StraightenOptions {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    fn derive(&self, salt: u64) -> Self {
        Self {
            seed: mix(self.seed, salt),
            ..*self
        }
    }
}

/// Each reseed widens the sampling ranges fourfold.
fn spread(attempt: usize) -> i64 {
    1 << (2 * attempt.min(8))
}

fn mix(seed: u64, salt: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The standard monomials of one (degree, weight, bound) cell.
#[derive(Debug, Clone)]
pub struct StandardCell {
    r: usize,
    n: usize,
    bound: Option<IndexTuple>,
    basis: Vec<PluckerMonomial>,
}

impl StandardCell {
    pub fn enumerate(
        r: usize,
        n: usize,
        degree: usize,
        bound: Option<&IndexTuple>,
        content: &Content,
    ) -> Result<Self> {
        let basis = enumerate_standard(degree, r, n, bound, Some(content))?
            .iter()
            .map(PluckerMonomial::from)
            .collect();
        Ok(Self {
            r,
            n,
            bound: bound.cloned(),
            basis,
        })
    }

    pub fn from_basis(
        r: usize,
        n: usize,
        bound: Option<&IndexTuple>,
        basis: Vec<PluckerMonomial>,
    ) -> Self {
        Self {
            r,
            n,
            bound: bound.cloned(),
            basis,
        }
    }

    pub fn basis(&self) -> &[PluckerMonomial] {
        &self.basis
    }

    /// Coordinates of each target in the cell basis.
    pub fn expand<S: Scalar>(
        &self,
        targets: &[PluckerPolynomial<S>],
        options: &StraightenOptions,
    ) -> Result<Vec<Vec<Rational<S>>>> {
        for f in targets {
            check_same_shape((self.r, self.n), f.shape())?;
        }
        if targets.is_empty() {
            return Ok(Vec::new());
        }
        let columns = self.basis.len();
        let mut last_rank = 0;
        for attempt in 0..=options.max_reseeds {
            let mut sampler = PointSampler::new(
                self.r,
                self.n,
                self.bound.as_ref(),
                mix(options.seed, attempt as u64),
            )?
            .with_spread(spread(attempt));
            let points: Vec<IntegerMatrix<S>> = sampler.points(columns + options.extra_samples);
            let (basis_rows, target_rows) = self.sample(&points, targets);
            let coords = if columns == 0 {
                if target_rows.iter().flatten().any(|v| !v.is_zero()) {
                    return Err(Error::BasisMismatch);
                }
                vec![Vec::new(); targets.len()]
            } else {
                let rhs: Vec<Vec<S>> = (0..targets.len())
                    .map(|q| target_rows.iter().map(|row| row[q].clone()).collect())
                    .collect();
                match solve_overdetermined(&basis_rows, &rhs) {
                    Ok(x) => x,
                    Err(SolveError::RankDeficient { rank, .. }) => {
                        last_rank = rank;
                        continue;
                    }
                    Err(SolveError::Inconsistent { .. }) => return Err(Error::BasisMismatch),
                }
            };
            self.verify_fresh(targets, &coords, options, attempt)?;
            return Ok(coords);
        }
        Err(Error::RankDeficient {
            rank: last_rank,
            columns,
            attempts: options.max_reseeds + 1,
        })
    }

    /// Evaluation rows (one per point) of the basis and of the targets.
    fn sample<S: Scalar>(
        &self,
        points: &[IntegerMatrix<S>],
        targets: &[PluckerPolynomial<S>],
    ) -> (Vec<Vec<S>>, Vec<Vec<S>>) {
        points
            .par_iter()
            .map(|p| {
                let mut ev = PointEvaluator::new(p);
                let b: Vec<S> = self.basis.iter().map(|m| ev.monomial(m)).collect();
                let t: Vec<S> = targets.iter().map(|f| ev.polynomial(f)).collect();
                (b, t)
            })
            .unzip()
    }

    fn verify_fresh<S: Scalar>(
        &self,
        targets: &[PluckerPolynomial<S>],
        coords: &[Vec<Rational<S>>],
        options: &StraightenOptions,
        attempt: usize,
    ) -> Result<()> {
        let mut sampler = PointSampler::new(
            self.r,
            self.n,
            self.bound.as_ref(),
            mix(!options.seed, attempt as u64),
        )?
        .with_spread(spread(attempt));
        let points: Vec<IntegerMatrix<S>> = sampler.points(options.fresh_checks);
        let (basis_rows, target_rows) = self.sample(&points, targets);
        for (b, t) in basis_rows.iter().zip(&target_rows) {
            for (q, x) in coords.iter().enumerate() {
                let predicted = x.iter().zip(b).fold(Rational::zero(), |acc, (c, v)| {
                    acc + c.clone() * Rational::from_integer(v.clone())
                });
                if predicted != Rational::from_integer(t[q].clone()) {
                    return Err(Error::VerificationFailed);
                }
            }
        }
        Ok(())
    }
}

/// Standard-basis expansion of `f`, on `X(bound)` when a bound is given.
pub fn straighten<S: Scalar>(
    f: &PluckerPolynomial<S>,
    bound: Option<&IndexTuple>,
) -> Result<PluckerPolynomial<S>> {
    straighten_with(f, bound, &StraightenOptions::default())
}

pub fn straighten_with<S: Scalar>(
    f: &PluckerPolynomial<S>,
    bound: Option<&IndexTuple>,
    options: &StraightenOptions,
) -> Result<PluckerPolynomial<S>> {
    let source = match bound {
        Some(w) => f.restrict(w)?,
        None => f.clone(),
    };
    if source.degree() == 0 || source.is_standard(bound) {
        return Ok(source);
    }
    let (r, n) = source.shape();
    let mut out = PluckerPolynomial::zero(r, n, source.degree());
    for (cell_index, (content, part)) in source.weight_cells().into_iter().enumerate() {
        let mut pending = PluckerPolynomial::zero(r, n, part.degree());
        for (m, c) in part.terms() {
            if m.is_standard(bound) {
                out.add_term(c.clone(), m.clone())?;
            } else {
                pending.add_term(c.clone(), m.clone())?;
            }
        }
        if pending.is_zero() {
            continue;
        }
        let cell =
            StandardCell::enumerate(r, n, part.degree(), bound, &Content { counts: content })?;
        let coords = cell.expand(&[pending], &options.derive(cell_index as u64))?;
        for (m, c) in cell.basis().iter().zip(&coords[0]) {
            if !c.denom().is_one() {
                return Err(Error::Internal(format!(
                    "non-integral coefficient {c} in a straightening"
                )));
            }
            out.add_term(c.numer().clone(), m.clone())?;
        }
    }
    Ok(out)
}
