#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use schubert_smt::{IndexTuple, PluckerMonomial, Polynomial, Tableau};

/// Leibniz expansion of the minor on `cols`; independent of the crate's
/// elimination code.
pub fn leibniz_minor(m: &[Vec<i64>], cols: &[usize]) -> BigInt {
    let r = cols.len();
    let mut perm: Vec<usize> = (0..r).collect();
    let mut total = BigInt::zero();
    loop {
        let inversions = (0..r)
            .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term = BigInt::one();
        for (i, &p) in perm.iter().enumerate() {
            term *= m[i][cols[p] - 1];
        }
        if inversions % 2 == 1 {
            term = -term;
        }
        total += term;
        if !next_permutation(&mut perm) {
            return total;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn leibniz_eval(f: &Polynomial, m: &[Vec<i64>]) -> BigInt {
    f.terms()
        .map(|(mono, c)| {
            mono.rows()
                .iter()
                .fold(c.clone(), |acc, row| acc * leibniz_minor(m, row.values()))
        })
        .sum()
}

/// Every `r`-subset of `1..=n`, lexicographic, by bit enumeration.
pub fn subsets(r: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|b| b.count_ones() as usize == r)
        .map(|b| (0..n).filter(|i| b >> i & 1 == 1).map(|i| i + 1).collect())
        .collect();
    out.sort();
    out
}

/// Counts standard invariant tableaux by scanning all multisets of rows.
pub fn brute_invariant_count(w: &[usize], n: usize, k: usize) -> usize {
    let r = w.len();
    let rows: Vec<Vec<usize>> = subsets(r, n)
        .into_iter()
        .filter(|s| s.iter().zip(w).all(|(a, b)| a <= b))
        .collect();
    let mut count = 0;
    let mut pick = vec![0usize; 2 * k];
    fn walk(
        rows: &[Vec<usize>],
        pick: &mut Vec<usize>,
        depth: usize,
        start: usize,
        n: usize,
        k: usize,
        count: &mut usize,
    ) {
        if depth == pick.len() {
            let chosen: Vec<&Vec<usize>> = pick.iter().map(|&i| &rows[i]).collect();
            let chain = chosen
                .windows(2)
                .all(|p| p[0].iter().zip(p[1]).all(|(a, b)| a <= b));
            let mut content = vec![0usize; n + 1];
            for row in &chosen {
                for &v in row.iter() {
                    content[v] += 1;
                }
            }
            if chain && content[1..].iter().all(|&c| c == k) {
                *count += 1;
            }
            return;
        }
        for i in start..rows.len() {
            pick[depth] = i;
            walk(rows, pick, depth + 1, i, n, k, count);
        }
    }
    walk(&rows, &mut pick, 0, 0, n, k, &mut count);
    count
}

pub fn tuple(v: &[usize], n: usize) -> IndexTuple {
    IndexTuple::new(v.to_vec(), n).unwrap()
}

pub fn tableau(rows: &[&[usize]], n: usize) -> Tableau {
    Tableau::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), n).unwrap()
}

pub fn monomial(rows: &[&[usize]], n: usize) -> PluckerMonomial {
    PluckerMonomial::new(rows.iter().map(|r| tuple(r, n)).collect()).unwrap()
}
