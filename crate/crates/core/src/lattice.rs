//! Index tuples `I(r, n)`, the componentwise (Bruhat) order on them, and
//! the type-A weight bookkeeping needed to locate semistable Schubert
//! varieties for `L(2ω_n)` on `G(n, 2n)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A strictly increasing tuple `1 ≤ a_1 < … < a_r ≤ n`.
///
/// Used both as a Plücker index and as the one-line form of a minimal
/// coset representative in `W^{P^{α_r}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TupleRepr", into = "TupleRepr")]
pub struct IndexTuple {
    values: Vec<usize>,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct TupleRepr {
    values: Vec<usize>,
    n: usize,
}

impl TryFrom<TupleRepr> for IndexTuple {
    type Error = Error;
    fn try_from(repr: TupleRepr) -> Result<Self> {
        IndexTuple::new(repr.values, repr.n)
    }
}

impl From<IndexTuple> for TupleRepr {
    fn from(t: IndexTuple) -> Self {
        TupleRepr {
            values: t.values,
            n: t.n,
        }
    }
}

impl IndexTuple {
    pub fn new(values: Vec<usize>, n: usize) -> Result<Self> {
        let reject = |reason| Error::InvalidTuple {
            values: values.clone(),
            n,
            reason,
        };
        if values.is_empty() {
            return Err(reject("empty tuple"));
        }
        if values.iter().any(|&v| v == 0 || v > n) {
            return Err(reject("entry out of range 1..=n"));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(reject("entries not strictly increasing"));
        }
        Ok(Self { values, n })
    }

    /// `(1, 2, …, r)`, the point Schubert variety.
    pub fn identity(r: usize, n: usize) -> Result<Self> {
        Self::new((1..=r).collect(), n)
    }

    /// `(n-r+1, …, n)`, the whole Grassmannian.
    pub fn top(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(invalid(format!("r = {r} exceeds n = {n}")));
        }
        Self::new((n - r + 1..=n).collect(), n)
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn r(&self) -> usize {
        self.values.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.r(), self.n)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    /// Componentwise order. Rejects tuples of different shape.
    pub fn leq(&self, other: &IndexTuple) -> Result<bool> {
        check_same_shape(self.shape(), other.shape())?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &IndexTuple) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// The complement of the tuple in `1..=n`, increasing.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.n).filter(|v| !self.contains(*v)).collect()
    }

    /// Minimal-length permutation in one-line notation whose first `r`
    /// values are this tuple.
    pub fn coset_permutation(&self) -> Vec<usize> {
        let mut sigma = self.values.clone();
        sigma.extend(self.complement());
        sigma
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_same_shape(expected: (usize, usize), found: (usize, usize)) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ShapeMismatch { expected, found })
    }
}

pub fn make_index_tuple(values: Vec<usize>, n: usize) -> Result<IndexTuple> {
    IndexTuple::new(values, n)
}

pub fn leq_componentwise(a: &IndexTuple, b: &IndexTuple) -> Result<bool> {
    a.leq(b)
}

/// All of `I(r, n)` in lexicographic order.
pub fn all_tuples(r: usize, n: usize) -> Vec<IndexTuple> {
    let mut out = Vec::new();
    if r == 0 || r > n {
        return out;
    }
    let mut current: Vec<usize> = (1..=r).collect();
    loop {
        out.push(IndexTuple {
            values: current.clone(),
            n,
        });
        // rightmost entry that can still grow
        let Some(i) = (0..r).rev().find(|&i| current[i] < n - (r - 1 - i)) else {
            break;
        };
        current[i] += 1;
        for j in i + 1..r {
            current[j] = current[j - 1] + 1;
        }
    }
    out
}

/// Integer character of the diagonal torus of `SL(m)` in ε-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    pub coords: Vec<i64>,
}

impl WeightVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn zero(m: usize) -> Self {
        Self { coords: vec![0; m] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// `k·ω_r` on `SL(m)`, represented by `k(ε_1 + … + ε_r) − (kr/m)(1, …, 1)`.
    /// Only defined when that representative is integral, i.e. `m | kr`.
    pub fn fundamental_multiple(k: i64, r: usize, m: usize) -> Result<Self> {
        if r == 0 || r >= m {
            return Err(invalid(format!(
                "fundamental weight index r = {r} outside 1..{m}"
            )));
        }
        let kr = k * r as i64;
        if kr % m as i64 != 0 {
            return Err(invalid(format!(
                "{k}·ω_{r} has no integral representative on SL({m})"
            )));
        }
        let shift = kr / m as i64;
        Ok(Self {
            coords: (0..m)
                .map(|i| if i < r { k - shift } else { -shift })
                .collect(),
        })
    }
}

impl std::ops::Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Action of the coset representative `w` on `λ`: the `i`-th ε-coordinate of
/// `λ` moves to position `σ(i)`, `σ` the minimal permutation extending `w`.
pub fn apply_coset_to_weight(w: &IndexTuple, lambda: &WeightVector) -> Result<WeightVector> {
    if lambda.rank() != w.n() {
        return Err(invalid(format!(
            "weight of rank {} cannot be acted on by a coset of S_{}",
            lambda.rank(),
            w.n()
        )));
    }
    let sigma = w.coset_permutation();
    let mut coords = vec![0; lambda.rank()];
    for (i, &target) in sigma.iter().enumerate() {
        coords[target - 1] = lambda.coords[i];
    }
    Ok(WeightVector { coords })
}

/// `μ ≤ 0` in dominance order: every proper prefix sum is ≤ 0 and the total
/// vanishes.
pub fn is_dominance_nonpositive(mu: &WeightVector) -> bool {
    let mut partial = 0i64;
    let m = mu.coords.len();
    for (i, c) in mu.coords.iter().enumerate() {
        partial += c;
        if i + 1 < m && partial > 0 {
            return false;
        }
    }
    partial == 0
}

/// Whether `L(k·ω_r)` on `SL(m)/P` descends to the torus quotient, i.e.
/// `k·ω_r` lies in the root lattice: `m | k·r`.
pub fn line_bundle_descends(k: u64, r: usize, m: usize) -> Result<bool> {
    if r == 0 || r >= m {
        return Err(invalid(format!("r = {r} outside 1..{m}")));
    }
    Ok((k * r as u64).is_multiple_of(m as u64))
}

/// Rank parameter for `G(n, 2n)` under `SL(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MiddleRank(usize);

impl MiddleRank {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("rank n = {n} must be at least 2")));
        }
        Ok(Self(n))
    }

    pub fn n(self) -> usize {
        self.0
    }

    pub fn ambient(self) -> usize {
        2 * self.0
    }

    pub(crate) fn require_general(self) -> Result<()> {
        if self.0 < 3 {
            Err(invalid(format!(
                "this construction needs n ≥ 3, got n = {}",
                self.0
            )))
        } else {
            Ok(())
        }
    }

    /// `2ω_n` on `SL(2n)`: `(+1 ×n, −1 ×n)`.
    pub fn twice_omega(self) -> WeightVector {
        WeightVector::fundamental_multiple(2, self.0, 2 * self.0).expect("2n divides 2n")
    }
}

/// The five coset representatives `w_1 ≤ w_2, w_3 ≤ w_4 ≤ w_5` in one-line
/// form. They share the prefix `(2, 4, …, 2n−6)` and differ in the last three
/// entries.
pub fn distinguished_w(i: usize, p: MiddleRank) -> Result<IndexTuple> {
    p.require_general()?;
    let n = p.n();
    let m = 2 * n;
    let tail = match i {
        1 => [m - 4, m - 2, m],
        2 => [m - 3, m - 2, m],
        3 => [m - 4, m - 1, m],
        4 => [m - 3, m - 1, m],
        5 => [m - 2, m - 1, m],
        _ => return Err(invalid(format!("w_{i} is not defined; expected 1..=5"))),
    };
    let mut values: Vec<usize> = (1..=n - 3).map(|j| 2 * j).collect();
    values.extend(tail);
    IndexTuple::new(values, m)
}

/// Certificate from an exhaustive scan of `I(n, 2n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemistableScan {
    pub minimum: IndexTuple,
    /// Every `w` with `w(2ω_n) ≤ 0`, lexicographic.
    pub satisfying: Vec<IndexTuple>,
}

/// The unique componentwise-minimal `w ∈ I(n, 2n)` with `w(2ω_n) ≤ 0`.
pub fn minimal_semistable_w(p: MiddleRank) -> Result<SemistableScan> {
    let n = p.n();
    let lambda = p.twice_omega();
    let satisfying: Vec<IndexTuple> = all_tuples(n, 2 * n)
        .into_iter()
        .filter(|w| {
            apply_coset_to_weight(w, &lambda)
                .map(|mu| is_dominance_nonpositive(&mu))
                .unwrap_or(false)
        })
        .collect();
    let minima: Vec<&IndexTuple> = satisfying
        .iter()
        .filter(|w| satisfying.iter().all(|v| w.leq_unchecked(v)))
        .collect();
    match minima.as_slice() {
        [only] => Ok(SemistableScan {
            minimum: (*only).clone(),
            satisfying: satisfying.clone(),
        }),
        [] => Err(Error::Internal(format!(
            "no least element among {} semistable cosets",
            satisfying.len()
        ))),
        _ => Err(Error::Internal(
            "least semistable coset is not unique".into(),
        )),
    }
}
