//! Torus-invariant graded pieces `R_k = H⁰(X(w), L(2ω_r)^{⊗k})^T` on
//! `G(r, 2r)`.
//!
//! `R_k` is handled entirely through its basis of standard tableaux with
//! `2k` rows, capped by `w`, in which every value occurs exactly `k` times.
//! Products are straightened into that basis and every span question is
//! answered by exact elimination on the resulting coordinates.

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::lattice::IndexTuple;
use crate::linalg::nullspace;
use crate::plucker::{PluckerMonomial, PluckerPolynomial};
use crate::straighten::{StandardCell, StraightenOptions};
use crate::tableau::{enumerate_standard, Content, Tableau};
use crate::{BigInt, Rational};

/// Largest degree searched by [`semistable_nonempty`].
pub const SEMISTABLE_SEARCH_CAP: usize = 2;

#[derive(Debug, Clone)]
pub struct GradedPieceBasis {
    w: IndexTuple,
    k: usize,
    basis: Vec<Tableau>,
    monomials: Vec<PluckerMonomial>,
    index: HashMap<PluckerMonomial, usize>,
}

impl GradedPieceBasis {
    pub fn w(&self) -> &IndexTuple {
        &self.w
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.basis
    }

    pub fn monomials(&self) -> &[PluckerMonomial] {
        &self.monomials
    }

    pub fn position(&self, t: &Tableau) -> Option<usize> {
        self.index.get(&PluckerMonomial::from(t)).copied()
    }

    pub fn position_of(&self, m: &PluckerMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    fn cell(&self) -> StandardCell {
        let (r, n) = self.w.shape();
        StandardCell::from_basis(r, n, Some(&self.w), self.monomials.clone())
    }
}

/// Coordinates of an element of `R_k` in a [`GradedPieceBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateVector {
    pub coords: Vec<Rational>,
}

impl CoordinateVector {
    pub fn unit(len: usize, at: usize) -> Self {
        let mut coords = vec![Rational::zero(); len];
        coords[at] = Rational::one();
        Self { coords }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len())
            .filter(|&i| !self.coords[i].is_zero())
            .collect()
    }

    /// The vector scaled to integers by the lcm of its denominators.
    pub fn cleared(&self) -> Vec<BigInt> {
        use num_integer::Integer;
        let lcm = self
            .coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coords
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    }
}

/// Standard invariant basis of `R_k` on `X(w)`, `w ∈ I(r, 2r)`.
pub fn invariant_basis(w: &IndexTuple, k: usize) -> Result<GradedPieceBasis> {
    let (r, n) = w.shape();
    if n != 2 * r {
        return Err(invalid(format!(
            "invariants of L(2ω_r) need n = 2r, got r = {r}, n = {n}"
        )));
    }
    if k == 0 {
        return Err(invalid("graded pieces start at k = 1"));
    }
    let basis = enumerate_standard(2 * k, r, n, Some(w), Some(&Content::constant(k, n)))?;
    let monomials: Vec<PluckerMonomial> = basis.iter().map(PluckerMonomial::from).collect();
    let index = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    Ok(GradedPieceBasis {
        w: w.clone(),
        k,
        basis,
        monomials,
        index,
    })
}

/// Coordinates of each product monomial in `target`. Products that are
/// already standard map to unit vectors; the rest are interpolated together.
pub fn products_to_coordinates(
    products: &[PluckerMonomial],
    target: &GradedPieceBasis,
    options: &StraightenOptions,
) -> Result<Vec<CoordinateVector>> {
    let (r, n) = target.w().shape();
    let len = target.len();
    let mut out: Vec<Option<CoordinateVector>> = vec![None; products.len()];
    let mut pending = Vec::new();
    let mut pending_at = Vec::new();
    for (i, m) in products.iter().enumerate() {
        if m.degree() != 2 * target.k() {
            return Err(invalid(format!(
                "product of degree {} does not land in R_{}",
                m.degree() / 2,
                target.k()
            )));
        }
        if !m.survives_on(target.w()) {
            out[i] = Some(CoordinateVector {
                coords: vec![Rational::zero(); len],
            });
        } else if m.is_standard(Some(target.w())) {
            let at = target.position_of(m).ok_or(Error::BasisMismatch)?;
            out[i] = Some(CoordinateVector::unit(len, at));
        } else {
            pending.push(PluckerPolynomial::<BigInt>::monomial(r, n, m.clone())?);
            pending_at.push(i);
        }
    }
    if !pending.is_empty() {
        let solved = target.cell().expand(&pending, options)?;
        for (coords, i) in solved.into_iter().zip(pending_at) {
            out[i] = Some(CoordinateVector { coords });
        }
    }
    Ok(out
        .into_iter()
        .map(|c| c.expect("every product handled"))
        .collect())
}

/// The straightened product `a·b` in the basis of `target`.
pub fn multiply_to_coordinates(
    a: &Tableau,
    b: &Tableau,
    target: &GradedPieceBasis,
    options: &StraightenOptions,
) -> Result<CoordinateVector> {
    for t in [a, b] {
        if !t.sorted().is_standard(Some(target.w()))? || !t.is_torus_invariant() {
            return Err(invalid(format!(
                "{t} is not a standard invariant tableau on X{}",
                target.w()
            )));
        }
    }
    let product = PluckerMonomial::from(a).mul(&PluckerMonomial::from(b))?;
    Ok(products_to_coordinates(&[product], target, options)?.remove(0))
}

/// Rank of a family of product vectors inside a graded piece, and the basis
/// elements that lie outside their span.
#[derive(Debug, Clone)]
pub struct ProductSpan {
    pub products: usize,
    pub rank: usize,
    pub dimension: usize,
    /// Basis positions not in the span.
    pub outside: Vec<usize>,
}

impl ProductSpan {
    pub fn spanned(&self) -> bool {
        self.rank == self.dimension
    }

    pub fn cokernel_dimension(&self) -> usize {
        self.dimension - self.rank
    }
}

pub fn product_span(
    products: &[PluckerMonomial],
    target: &GradedPieceBasis,
    options: &StraightenOptions,
) -> Result<ProductSpan> {
    let coords = products_to_coordinates(products, target, options)?;
    let rows: Vec<Vec<BigInt>> = coords.iter().map(CoordinateVector::cleared).collect();
    // functionals vanishing on the span; basis vector i is outside the span
    // exactly when some such functional is nonzero on it
    let annihilator = nullspace(rows, target.len());
    let outside = (0..target.len())
        .filter(|&i| annihilator.iter().any(|y| !y[i].is_zero()))
        .collect();
    Ok(ProductSpan {
        products: products.len(),
        rank: target.len() - annihilator.len(),
        dimension: target.len(),
        outside,
    })
}

/// Distinct monomials `x·y` with `x ∈ R_a`, `y ∈ R_b` over the given degree
/// splits; unordered pairs are taken once.
fn split_products(w: &IndexTuple, splits: &[(usize, usize)]) -> Result<Vec<PluckerMonomial>> {
    let mut bases: HashMap<usize, GradedPieceBasis> = HashMap::new();
    for &(a, b) in splits {
        for k in [a, b] {
            if let std::collections::hash_map::Entry::Vacant(e) = bases.entry(k) {
                e.insert(invariant_basis(w, k)?);
            }
        }
    }
    let mut seen = BTreeSet::new();
    let mut seen_splits = BTreeSet::new();
    for &(a, b) in splits {
        let (a, b) = (a.min(b), a.max(b));
        if !seen_splits.insert((a, b)) {
            continue;
        }
        let (ra, rb) = (&bases[&a], &bases[&b]);
        for (i, x) in ra.monomials().iter().enumerate() {
            let start = if a == b { i } else { 0 };
            for y in &rb.monomials()[start..] {
                seen.insert(x.mul(y)?);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalityReport {
    pub w: IndexTuple,
    pub degree: usize,
    pub dim_lower_products: usize,
    pub dim_rd: usize,
    pub spanned: bool,
    pub cokernel_dimension: usize,
    pub cokernel_witnesses: Vec<Tableau>,
    pub products_considered: usize,
}

/// Is `R_d` spanned by the products `R_a·R_b`, `a + b = d`, `a, b ≥ 1`?
pub fn normality_probe(
    w: &IndexTuple,
    d: usize,
    options: &StraightenOptions,
) -> Result<NormalityReport> {
    if d < 2 {
        return Err(invalid("the normality probe starts at degree 2"));
    }
    let target = invariant_basis(w, d)?;
    let splits: Vec<(usize, usize)> = (1..=d / 2).map(|a| (a, d - a)).collect();
    let products = split_products(w, &splits)?;
    let span = product_span(&products, &target, options)?;
    Ok(NormalityReport {
        w: w.clone(),
        degree: d,
        dim_lower_products: span.rank,
        dim_rd: span.dimension,
        spanned: span.spanned(),
        cokernel_dimension: span.cokernel_dimension(),
        cokernel_witnesses: span
            .outside
            .iter()
            .map(|&i| target.tableaux()[i].clone())
            .collect(),
        products_considered: span.products,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeSpan {
    pub degree: usize,
    pub dimension: usize,
    pub rank: usize,
    pub spanned: bool,
    pub cokernel_dimension: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GenerationReport {
    pub w: IndexTuple,
    pub degrees: Vec<DegreeSpan>,
}

impl GenerationReport {
    pub fn all_spanned(&self) -> bool {
        self.degrees.iter().all(|d| d.spanned)
    }
}

/// For `3 ≤ d ≤ k_max`, whether `R_d = R_1·R_{d−1} + R_2·R_{d−2}`. Checked
/// in increasing `d`, this says the ring is generated in degrees ≤ 2 up to
/// `k_max`.
pub fn generation_degree_probe(
    w: &IndexTuple,
    k_max: usize,
    options: &StraightenOptions,
) -> Result<GenerationReport> {
    if k_max < 3 {
        return Err(invalid("the generation probe needs k_max ≥ 3"));
    }
    let mut degrees = Vec::new();
    for d in 3..=k_max {
        let target = invariant_basis(w, d)?;
        let products = split_products(w, &[(1, d - 1), (2, d - 2)])?;
        let span = product_span(&products, &target, options)?;
        degrees.push(DegreeSpan {
            degree: d,
            dimension: span.dimension,
            rank: span.rank,
            spanned: span.spanned(),
            cokernel_dimension: span.cokernel_dimension(),
        });
    }
    Ok(GenerationReport {
        w: w.clone(),
        degrees,
    })
}

/// `[dim R_1, …, dim R_{k_max}]`.
pub fn hilbert_series(w: &IndexTuple, k_max: usize) -> Result<Vec<usize>> {
    if k_max == 0 {
        return Err(invalid("k_max must be at least 1"));
    }
    (1..=k_max)
        .map(|k| invariant_basis(w, k).map(|b| b.len()))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Semistability {
    /// `true` is a proof; `false` only means nothing was found up to `cap`.
    pub nonempty: bool,
    pub witness: Option<Tableau>,
    pub degree: Option<usize>,
    pub cap: usize,
}

/// Looks for a nonzero invariant section of degree `≤ cap`.
pub fn semistable_nonempty(w: &IndexTuple, cap: usize) -> Result<Semistability> {
    for k in 1..=cap {
        if let Some(t) = invariant_basis(w, k)?.tableaux().first() {
            return Ok(Semistability {
                nonempty: true,
                witness: Some(t.clone()),
                degree: Some(k),
                cap,
            });
        }
    }
    Ok(Semistability {
        nonempty: false,
        witness: None,
        degree: None,
        cap,
    })
}
