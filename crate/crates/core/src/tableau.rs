//! Rectangular Young tableaux whose rows are Plücker indices.
//!
//! A tableau with rows `τ_1, …, τ_m` stands for the monomial
//! `p_{τ_1} ⋯ p_{τ_m}`; it is standard when the rows form a componentwise
//! chain, optionally capped by a Schubert bound `w`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::lattice::{all_tuples, check_same_shape, IndexTuple, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<IndexTuple>,
}

/// Box counts per value `1..=n`; `counts[t - 1]` is the multiplicity of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Content {
    pub counts: Vec<usize>,
}

impl Content {
    pub fn constant(k: usize, n: usize) -> Self {
        Self { counts: vec![k; n] }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    /// `Some(k)` when every value occurs exactly `k ≥ 1` times.
    pub fn constant_level(&self) -> Option<usize> {
        let first = *self.counts.first()?;
        (first > 0 && self.counts.iter().all(|&c| c == first)).then_some(first)
    }
}

impl std::ops::Add for &Content {
    type Output = Content;
    fn add(self, rhs: &Content) -> Content {
        assert_eq!(self.n(), rhs.n(), "content length mismatch");
        Content {
            counts: self
                .counts
                .iter()
                .zip(&rhs.counts)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Tableau {
    pub fn new(rows: Vec<IndexTuple>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(invalid("a tableau needs at least one row"));
        };
        let shape = first.shape();
        for row in &rows[1..] {
            check_same_shape(shape, row.shape())?;
        }
        Ok(Self { rows })
    }

    /// Builds a tableau from plain rows over `1..=n`.
    pub fn from_rows(rows: &[Vec<usize>], n: usize) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| IndexTuple::new(r.clone(), n))
                .collect::<Result<_>>()?,
        )
    }

    pub fn rows(&self) -> &[IndexTuple] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn r(&self) -> usize {
        self.rows[0].r()
    }

    pub fn n(&self) -> usize {
        self.rows[0].n()
    }

    pub fn shape(&self) -> (usize, usize) {
        self.rows[0].shape()
    }

    /// Entry in row `i`, column `j` (both from 0).
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i].values()[j]
    }

    /// Number of rows whose column `j` holds the value `t`.
    pub fn column_count(&self, t: usize, j: usize) -> usize {
        self.rows.iter().filter(|row| row.values()[j] == t).count()
    }

    /// Rows of both tableaux, `self` first, in their given order.
    pub fn concat(&self, other: &Tableau) -> Result<Tableau> {
        check_same_shape(self.shape(), other.shape())?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Tableau { rows })
    }

    /// Same rows in lexicographic order. A tableau that admits a chain
    /// ordering of its rows is standard exactly in this order.
    pub fn sorted(&self) -> Tableau {
        let mut rows = self.rows.clone();
        rows.sort();
        Tableau { rows }
    }

    pub fn is_standard(&self, bound: Option<&IndexTuple>) -> Result<bool> {
        if let Some(w) = bound {
            check_same_shape(self.shape(), w.shape())?;
        }
        let chain = self.rows.windows(2).all(|p| p[0].leq_unchecked(&p[1]));
        let capped = bound.is_none_or(|w| self.rows.last().is_some_and(|top| top.leq_unchecked(w)));
        Ok(chain && capped)
    }

    pub fn content(&self) -> Content {
        let mut counts = vec![0; self.n()];
        for row in &self.rows {
            for &v in row.values() {
                counts[v - 1] += 1;
            }
        }
        Content { counts }
    }

    /// Every value `1..=n` occurs equally often.
    pub fn is_torus_invariant(&self) -> bool {
        self.content().constant_level().is_some()
    }

    /// `c(1)ε_1 + … + c(n)ε_n`.
    pub fn weight(&self) -> WeightVector {
        WeightVector::new(self.content().counts.iter().map(|&c| c as i64).collect())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{row}")?;
        }
        write!(f, "]")
    }
}

pub fn make_tableau(rows: Vec<IndexTuple>) -> Result<Tableau> {
    Tableau::new(rows)
}

pub fn is_standard(t: &Tableau, bound: Option<&IndexTuple>) -> Result<bool> {
    t.is_standard(bound)
}

pub fn content(t: &Tableau) -> Content {
    t.content()
}

pub fn is_torus_invariant(t: &Tableau) -> bool {
    t.is_torus_invariant()
}

pub fn tableau_weight(t: &Tableau) -> WeightVector {
    t.weight()
}

/// All standard tableaux with `rows` rows of length `r` over `1..=n`,
/// capped by `bound` and with exactly `content` when given, in
/// lexicographic order of their row sequences.
pub fn enumerate_standard(
    rows: usize,
    r: usize,
    n: usize,
    bound: Option<&IndexTuple>,
    content: Option<&Content>,
) -> Result<Vec<Tableau>> {
    if rows == 0 {
        return Err(invalid("tableaux need at least one row"));
    }
    if r == 0 || r > n {
        return Err(invalid(format!("row length r = {r} outside 1..={n}")));
    }
    if let Some(w) = bound {
        check_same_shape((r, n), w.shape())?;
    }
    if let Some(c) = content {
        if c.n() != n {
            return Err(invalid(format!(
                "content has {} entries, expected {n}",
                c.n()
            )));
        }
        if c.total() != rows * r {
            return Err(Error::InvalidArgument(format!(
                "content totals {} boxes but the shape has {}",
                c.total(),
                rows * r
            )));
        }
    }

    let candidates: Vec<IndexTuple> = all_tuples(r, n)
        .into_iter()
        .filter(|t| bound.is_none_or(|w| t.leq_unchecked(w)))
        .collect();
    let mut search = Search {
        candidates: &candidates,
        target: content.map(|c| c.counts.clone()),
        counts: vec![0; n],
        chain: Vec::with_capacity(rows),
        rows,
        bound,
        out: Vec::new(),
    };
    search.descend(0);
    Ok(search.out)
}

struct Search<'a> {
    candidates: &'a [IndexTuple],
    target: Option<Vec<usize>>,
    counts: Vec<usize>,
    chain: Vec<usize>,
    rows: usize,
    bound: Option<&'a IndexTuple>,
    out: Vec<Tableau>,
}

impl Search<'_> {
    fn descend(&mut self, start: usize) {
        if self.chain.len() == self.rows {
            self.out.push(Tableau {
                rows: self
                    .chain
                    .iter()
                    .map(|&i| self.candidates[i].clone())
                    .collect(),
            });
            return;
        }
        for idx in start..self.candidates.len() {
            let cand = &self.candidates[idx];
            if let Some(&last) = self.chain.last() {
                if !self.candidates[last].leq_unchecked(cand) {
                    continue;
                }
            }
            if let Some(target) = &self.target {
                if cand
                    .values()
                    .iter()
                    .any(|&v| self.counts[v - 1] >= target[v - 1])
                {
                    continue;
                }
            }
            for &v in cand.values() {
                self.counts[v - 1] += 1;
            }
            self.chain.push(idx);
            if self.feasible(cand) {
                self.descend(idx);
            }
            self.chain.pop();
            for &v in cand.values() {
                self.counts[v - 1] -= 1;
            }
        }
    }

    /// Whether the still-missing boxes can be placed in the remaining rows,
    /// all of which sit between `last` and the bound columnwise.
    fn feasible(&self, last: &IndexTuple) -> bool {
        let Some(target) = &self.target else {
            return true;
        };
        let remaining = self.rows - self.chain.len();
        let needed: Vec<usize> = target
            .iter()
            .zip(&self.counts)
            .map(|(t, c)| t - c)
            .collect();
        if needed.iter().any(|&d| d > remaining) {
            return false;
        }
        let r = last.r();
        let mut below = 0;
        let mut v = 1;
        // values smaller than last[j] only fit in columns before j
        for (j, &lj) in last.values().iter().enumerate() {
            while v < lj {
                below += needed[v - 1];
                v += 1;
            }
            if below > remaining * j {
                return false;
            }
        }
        // values above bound[j] only fit in columns after j
        if let Some(w) = self.bound {
            let n = needed.len();
            let mut above = 0;
            let mut v = n;
            for (j, &wj) in w.values().iter().enumerate().rev() {
                while v > wj {
                    above += needed[v - 1];
                    v -= 1;
                }
                if above > remaining * (r - 1 - j) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[usize]], n: usize) -> Tableau {
        Tableau::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), n).unwrap()
    }

    fn w(v: &[usize], n: usize) -> IndexTuple {
        IndexTuple::new(v.to_vec(), n).unwrap()
    }

    // Chain-checks every row sequence; independent of the pruned search.
    fn brute_force(
        rows: usize,
        r: usize,
        n: usize,
        bound: Option<&IndexTuple>,
        content: Option<&Content>,
    ) -> Vec<Tableau> {
        let tuples = all_tuples(r, n);
        let mut out = Vec::new();
        let mut idx = vec![0usize; rows];
        loop {
            let t = Tableau::new(idx.iter().map(|&i| tuples[i].clone()).collect()).unwrap();
            if t.is_standard(bound).unwrap() && content.is_none_or(|c| &t.content() == c) {
                out.push(t);
            }
            let mut pos = rows;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < tuples.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    #[test]
    fn construction() {
        let x1 = tab(&[&[1, 3, 5], &[2, 4, 6]], 6);
        assert_eq!(x1.row_count(), 2);
        assert_eq!(x1.entry(1, 2), 6);
        assert_eq!(x1.column_count(3, 1), 1);
        let y1 = tab(&[&[1, 2, 3], &[1, 4, 5], &[2, 4, 6], &[3, 5, 6]], 6);
        assert_eq!(y1.shape(), (3, 6));
        assert!(Tableau::new(vec![w(&[1, 2], 4), w(&[1, 3], 5)]).is_err());
        assert!(Tableau::new(vec![w(&[1, 2], 4), w(&[1, 2, 3], 4)]).is_err());
        assert!(Tableau::new(vec![w(&[1, 2], 4), w(&[1, 3], 4)]).is_ok());
        assert!(Tableau::new(vec![]).is_err());
    }

    #[test]
    fn standardness() {
        let w5 = w(&[4, 5, 6], 6);
        assert!(tab(&[&[1, 3, 5], &[2, 4, 6]], 6)
            .is_standard(Some(&w5))
            .unwrap());
        assert!(!tab(&[&[1, 4], &[2, 3]], 4).is_standard(None).unwrap());
        let y2 = tab(&[&[1, 2, 4], &[1, 3, 5], &[2, 3, 6], &[4, 5, 6]], 6);
        assert!(y2.is_standard(Some(&w5)).unwrap());
        assert!(!y2.is_standard(Some(&w(&[3, 5, 6], 6))).unwrap());
        assert!(y2.is_standard(Some(&w(&[1, 2], 4))).is_err());
    }

    #[test]
    fn content_and_weight() {
        let x1 = tab(&[&[1, 3, 5], &[2, 4, 6]], 6);
        assert_eq!(x1.content().counts, vec![1; 6]);
        let y1 = tab(&[&[1, 2, 3], &[1, 4, 5], &[2, 4, 6], &[3, 5, 6]], 6);
        assert_eq!(y1.content().counts, vec![2; 6]);
        assert_eq!(tab(&[&[1, 2]], 4).content().counts, vec![1, 1, 0, 0]);
        assert_eq!(x1.weight().coords, vec![1; 6]);
        assert_eq!(x1.concat(&x1).unwrap().weight().coords, vec![2; 6]);
        assert_eq!(tab(&[&[1, 3]], 4).weight().coords, vec![1, 0, 1, 0]);
    }

    #[test]
    fn torus_invariance() {
        assert!(tab(&[&[1, 2, 5], &[3, 4, 6]], 6).is_torus_invariant());
        assert!(!tab(&[&[1, 2], &[1, 3]], 4).is_torus_invariant());
        let y2 = tab(&[&[1, 2, 4], &[1, 3, 5], &[2, 3, 6], &[4, 5, 6]], 6);
        assert_eq!(y2.content().constant_level(), Some(2));
    }

    #[test]
    fn content_is_additive() {
        let a = tab(&[&[1, 3, 5], &[2, 4, 6]], 6);
        let b = tab(&[&[1, 2, 3], &[3, 5, 6]], 6);
        assert_eq!(a.concat(&b).unwrap().content(), &a.content() + &b.content());
        assert_eq!(a.concat(&b).unwrap().weight(), &a.weight() + &b.weight());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_standard(1, 2, 4, None, None).unwrap().len(), 6);
        assert_eq!(enumerate_standard(2, 2, 4, None, None).unwrap().len(), 20);
        let r1 = enumerate_standard(
            2,
            3,
            6,
            Some(&w(&[4, 5, 6], 6)),
            Some(&Content::constant(1, 6)),
        )
        .unwrap();
        let expected = vec![
            tab(&[&[1, 2, 3], &[4, 5, 6]], 6),
            tab(&[&[1, 2, 4], &[3, 5, 6]], 6),
            tab(&[&[1, 2, 5], &[3, 4, 6]], 6),
            tab(&[&[1, 3, 4], &[2, 5, 6]], 6),
            tab(&[&[1, 3, 5], &[2, 4, 6]], 6),
        ];
        assert_eq!(r1, expected);
    }

    #[test]
    fn enumeration_rejects_inconsistent_constraints() {
        assert!(enumerate_standard(0, 2, 4, None, None).is_err());
        assert!(enumerate_standard(2, 5, 4, None, None).is_err());
        assert!(enumerate_standard(2, 2, 4, Some(&w(&[2, 4, 6], 6)), None).is_err());
        assert!(enumerate_standard(2, 2, 4, None, Some(&Content::constant(1, 5))).is_err());
        assert!(enumerate_standard(2, 2, 4, None, Some(&Content::constant(2, 4))).is_err());
    }

    type Case = (usize, usize, usize, Option<IndexTuple>, Option<Content>);

    #[test]
    fn enumeration_matches_brute_force() {
        let cases: Vec<Case> = vec![
            (2, 2, 4, None, None),
            (3, 2, 4, Some(w(&[2, 4], 4)), None),
            (2, 2, 4, None, Some(Content::constant(1, 4))),
            (4, 2, 4, Some(w(&[3, 4], 4)), Some(Content::constant(2, 4))),
            (2, 3, 6, None, Some(Content::constant(1, 6))),
            (
                4,
                3,
                6,
                Some(w(&[4, 5, 6], 6)),
                Some(Content::constant(2, 6)),
            ),
            (
                3,
                2,
                5,
                Some(w(&[3, 5], 5)),
                Some(Content {
                    counts: vec![1, 2, 1, 1, 1],
                }),
            ),
        ];
        for (rows, r, n, bound, content) in cases {
            let fast = enumerate_standard(rows, r, n, bound.as_ref(), content.as_ref()).unwrap();
            let slow = brute_force(rows, r, n, bound.as_ref(), content.as_ref());
            assert_eq!(fast, slow, "rows={rows} r={r} n={n}");
        }
    }

    #[test]
    fn content_filter_is_an_ordered_sublist() {
        let bound = w(&[4, 5, 6], 6);
        let all = enumerate_standard(2, 3, 6, Some(&bound), None).unwrap();
        let inv =
            enumerate_standard(2, 3, 6, Some(&bound), Some(&Content::constant(1, 6))).unwrap();
        let filtered: Vec<Tableau> = all.into_iter().filter(|t| t.is_torus_invariant()).collect();
        assert_eq!(filtered, inv);
    }

    #[test]
    fn bound_implies_unbounded_standardness() {
        for t in enumerate_standard(3, 2, 5, Some(&w(&[3, 5], 5)), None).unwrap() {
            assert!(t.is_standard(None).unwrap());
        }
    }
}
