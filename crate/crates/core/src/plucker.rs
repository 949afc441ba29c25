//! The integral Plücker coordinate ring of `G(r, n)`.
//!
//! Monomials are multisets of index tuples kept in lexicographic order;
//! polynomials are sparse maps from monomials to nonzero coefficients in a
//! [`Scalar`] ring, homogeneous in both the shape `(r, n)` and the degree.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{invalid, Result};
use crate::lattice::{check_same_shape, IndexTuple};
use crate::scalar::Scalar;
use crate::tableau::{Content, Tableau};

/// Sorts raw indices into a tuple, tracking the sign of the sorting
/// permutation. Repeated indices give sign 0 and no tuple.
pub fn normalize_index(raw: &[usize], n: usize) -> Result<(i8, Option<IndexTuple>)> {
    if raw.is_empty() {
        return Err(invalid("empty index list"));
    }
    if let Some(&bad) = raw.iter().find(|&&v| v == 0 || v > n) {
        return Err(invalid(format!("index {bad} outside 1..={n}")));
    }
    let mut inversions = 0usize;
    for i in 0..raw.len() {
        for j in i + 1..raw.len() {
            match raw[i].cmp(&raw[j]) {
                std::cmp::Ordering::Equal => return Ok((0, None)),
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    let mut sorted = raw.to_vec();
    sorted.sort_unstable();
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    Ok((sign, Some(IndexTuple::new(sorted, n)?)))
}

/// `p_{τ_1} ⋯ p_{τ_m}` with rows stored in lexicographic order. The empty
/// monomial is the scalar 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PluckerMonomial {
    rows: Vec<IndexTuple>,
}

impl PluckerMonomial {
    pub fn one() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn new(mut rows: Vec<IndexTuple>) -> Result<Self> {
        if let Some(first) = rows.first() {
            let shape = first.shape();
            for row in &rows[1..] {
                check_same_shape(shape, row.shape())?;
            }
        }
        rows.sort();
        Ok(Self { rows })
    }

    pub fn variable(tuple: IndexTuple) -> Self {
        Self { rows: vec![tuple] }
    }

    pub fn rows(&self) -> &[IndexTuple] {
        &self.rows
    }

    pub fn degree(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> Option<(usize, usize)> {
        self.rows.first().map(IndexTuple::shape)
    }

    /// Product of monomials (merge of row multisets).
    pub fn mul(&self, other: &PluckerMonomial) -> Result<PluckerMonomial> {
        if let (Some(a), Some(b)) = (self.shape(), other.shape()) {
            check_same_shape(a, b)?;
        }
        let mut rows = Vec::with_capacity(self.rows.len() + other.rows.len());
        let (mut i, mut j) = (0, 0);
        while i < self.rows.len() || j < other.rows.len() {
            if j == other.rows.len() || (i < self.rows.len() && self.rows[i] <= other.rows[j]) {
                rows.push(self.rows[i].clone());
                i += 1;
            } else {
                rows.push(other.rows[j].clone());
                j += 1;
            }
        }
        Ok(Self { rows })
    }

    /// Rows form a chain, capped by `bound` when given.
    pub fn is_standard(&self, bound: Option<&IndexTuple>) -> bool {
        self.rows.windows(2).all(|p| p[0].leq_unchecked(&p[1]))
            && bound.is_none_or(|w| self.rows.last().is_none_or(|top| top.leq_unchecked(w)))
    }

    /// Nonzero on `X(w)`: every row is `≤ w`.
    pub fn survives_on(&self, w: &IndexTuple) -> bool {
        self.rows.iter().all(|row| row.leq_unchecked(w))
    }

    pub fn content(&self, n: usize) -> Content {
        let mut counts = vec![0; n];
        for row in &self.rows {
            for &v in row.values() {
                counts[v - 1] += 1;
            }
        }
        Content { counts }
    }

    pub fn to_tableau(&self) -> Result<Tableau> {
        Tableau::new(self.rows.clone())
    }
}

impl From<&Tableau> for PluckerMonomial {
    fn from(t: &Tableau) -> Self {
        let mut rows = t.rows().to_vec();
        rows.sort();
        Self { rows }
    }
}

impl fmt::Display for PluckerMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "1");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "p")?;
            let joined: Vec<String> = row.values().iter().map(ToString::to_string).collect();
            write!(f, "[{}]", joined.join(","))?;
        }
        Ok(())
    }
}

/// Homogeneous integer combination of Plücker monomials on `G(r, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerPolynomial<S> {
    r: usize,
    n: usize,
    degree: usize,
    terms: BTreeMap<PluckerMonomial, S>,
}

impl<S: Scalar> PluckerPolynomial<S> {
    pub fn zero(r: usize, n: usize, degree: usize) -> Self {
        Self {
            r,
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(r: usize, n: usize, c: S) -> Self {
        let mut p = Self::zero(r, n, 0);
        p.add_term(c, PluckerMonomial::one())
            .expect("degree 0 matches");
        p
    }

    pub fn monomial(r: usize, n: usize, m: PluckerMonomial) -> Result<Self> {
        let mut p = Self::zero(r, n, m.degree());
        p.add_term(S::one(), m)?;
        Ok(p)
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        let (r, n) = t.shape();
        let m = PluckerMonomial::from(t);
        let mut p = Self::zero(r, n, m.degree());
        p.terms.insert(m, S::one());
        p
    }

    pub fn variable(t: IndexTuple) -> Self {
        let (r, n) = t.shape();
        let mut p = Self::zero(r, n, 1);
        p.terms.insert(PluckerMonomial::variable(t), S::one());
        p
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, combining
    /// repeats. The degree is taken from the first monomial (0 if none).
    pub fn from_terms(
        r: usize,
        n: usize,
        terms: impl IntoIterator<Item = (S, PluckerMonomial)>,
    ) -> Result<Self> {
        let mut iter = terms.into_iter().peekable();
        let degree = iter.peek().map_or(0, |(_, m)| m.degree());
        let mut p = Self::zero(r, n, degree);
        for (c, m) in iter {
            p.add_term(c, m)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, coeff: S, m: PluckerMonomial) -> Result<()> {
        if let Some(shape) = m.shape() {
            check_same_shape((self.r, self.n), shape)?;
        }
        if m.degree() != self.degree {
            if !self.terms.is_empty() {
                return Err(invalid(format!(
                    "degree {} term added to a degree {} polynomial",
                    m.degree(),
                    self.degree
                )));
            }
            self.degree = m.degree();
        }
        if coeff.is_zero() {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.r, self.n)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PluckerMonomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PluckerMonomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_same_shape(self.shape(), other.shape())?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), m.clone())?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-S::one()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_same_shape(self.shape(), other.shape())?;
        let mut out = Self::zero(self.r, self.n, self.degree + other.degree);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ca.clone() * cb.clone(), ma.mul(mb)?)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.r, self.n, self.degree);
        if c.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
            .collect();
        out
    }

    /// Image on `X(w)`: terms with a row `τ ≰ w` vanish.
    pub fn restrict(&self, w: &IndexTuple) -> Result<Self> {
        check_same_shape(self.shape(), w.shape())?;
        let mut out = Self::zero(self.r, self.n, self.degree);
        out.terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.survives_on(w))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok(out)
    }

    /// Every term is a standard monomial (capped by `bound` when given).
    pub fn is_standard(&self, bound: Option<&IndexTuple>) -> bool {
        self.terms.keys().all(|m| m.is_standard(bound))
    }

    /// Splits the polynomial by torus weight (content).
    pub fn weight_cells(&self) -> BTreeMap<Vec<usize>, Self> {
        let mut cells: BTreeMap<Vec<usize>, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            cells
                .entry(m.content(self.n).counts)
                .or_insert_with(|| Self::zero(self.r, self.n, self.degree))
                .terms
                .insert(m.clone(), c.clone());
        }
        cells
    }

    /// Whether `self` and `other` agree up to one global sign; returns the
    /// sign `s` with `self = s·other`.
    pub fn sign_relative_to(&self, other: &Self) -> Option<i8> {
        if self == other {
            Some(1)
        } else if *self == other.scale(&-S::one()) {
            Some(-1)
        } else {
            None
        }
    }

    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> PluckerPolynomial<T> {
        PluckerPolynomial {
            r: self.r,
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        }
    }
}

impl<S: Scalar> fmt::Display for PluckerPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() || m.degree() == 0 {
                write!(f, "{mag}")?;
                if m.degree() > 0 {
                    write!(f, "·")?;
                }
            }
            if m.degree() > 0 {
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

/// The quadratic relation
/// `Σ_h (−1)^h p_{i_1…i_{r−1} j_h} · p_{j_1…ĵ_h…j_{r+1}}` on `G(r, n)`,
/// each term sign-normalized; terms with a repeated index drop out.
pub fn plucker_relation<S: Scalar>(
    i_set: &IndexTuple,
    j_set: &IndexTuple,
    r: usize,
    n: usize,
) -> Result<PluckerPolynomial<S>> {
    if r < 2 {
        return Err(invalid("Plücker relations need r ≥ 2"));
    }
    if i_set.r() != r - 1 || j_set.r() != r + 1 {
        return Err(invalid(format!(
            "expected |I| = {} and |J| = {}, got {} and {}",
            r - 1,
            r + 1,
            i_set.r(),
            j_set.r()
        )));
    }
    if i_set.n() != n || j_set.n() != n {
        return Err(invalid("index sets must be drawn from 1..=n"));
    }
    let mut out = PluckerPolynomial::zero(r, n, 2);
    for (pos, &jh) in j_set.values().iter().enumerate() {
        let mut left: Vec<usize> = i_set.values().to_vec();
        left.push(jh);
        let (sign, Some(left)) = normalize_index(&left, n)? else {
            continue;
        };
        let right: Vec<usize> = j_set
            .values()
            .iter()
            .copied()
            .filter(|&v| v != jh)
            .collect();
        let right = IndexTuple::new(right, n)?;
        // h runs from 1, so position 0 carries (−1)^1
        let h_sign: i64 = if pos % 2 == 0 { -1 } else { 1 };
        let coeff = S::from(h_sign * sign as i64);
        out.add_term(coeff, PluckerMonomial::new(vec![left, right])?)?;
    }
    Ok(out)
}

pub fn restrict<S: Scalar>(
    f: &PluckerPolynomial<S>,
    w: &IndexTuple,
) -> Result<PluckerPolynomial<S>> {
    f.restrict(w)
}

/// First position (from 1) where `σ ≤ τ` fails.
pub fn first_violation(sigma: &IndexTuple, tau: &IndexTuple) -> Result<Option<usize>> {
    check_same_shape(sigma.shape(), tau.shape())?;
    Ok(sigma
        .values()
        .iter()
        .zip(tau.values())
        .position(|(a, b)| a > b)
        .map(|p| p + 1))
}

/// The relation with `I = σ ∖ {σ_t}` and `J = τ ∪ {σ_t}` (`t` counted from
/// 1). It contains `±p_σ·p_τ` and so rewrites that product.
pub fn two_row_exchange<S: Scalar>(
    sigma: &IndexTuple,
    tau: &IndexTuple,
    t: usize,
) -> Result<PluckerPolynomial<S>> {
    check_same_shape(sigma.shape(), tau.shape())?;
    let (r, n) = sigma.shape();
    if t == 0 || t > r {
        return Err(invalid(format!("position {t} outside 1..={r}")));
    }
    let st = sigma.values()[t - 1];
    if st <= tau.values()[t - 1] {
        return Err(invalid(format!(
            "rows {sigma} and {tau} are not out of order at position {t}"
        )));
    }
    if tau.contains(st) {
        return Err(invalid(format!(
            "{st} already occurs in {tau}; the exchange degenerates"
        )));
    }
    if r < 2 {
        return Err(invalid("exchange relations need r ≥ 2"));
    }
    let i_set: Vec<usize> = sigma
        .values()
        .iter()
        .copied()
        .filter(|&v| v != st)
        .collect();
    let mut j_set = tau.values().to_vec();
    j_set.push(st);
    j_set.sort_unstable();
    plucker_relation(
        &IndexTuple::new(i_set, n)?,
        &IndexTuple::new(j_set, n)?,
        r,
        n,
    )
}
