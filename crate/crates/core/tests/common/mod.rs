//! Oracles for the integration tests. Everything here works with dense
//! `BigRational` tables and its own elimination, so it shares no linear
//! algebra with the crate.

#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use secohom::algebra::FiniteDimAlgebra;
use secohom::exactlin::{Rational, RationalMatrix};

pub type Q = BigRational;

pub fn q(r: &Rational) -> Q {
    Q::new(r.numer().clone(), r.denom().clone())
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn dense(m: &RationalMatrix) -> Vec<Vec<Q>> {
    m.to_dense().iter().map(|row| row.iter().map(q).collect()).collect()
}

/// `table[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
pub fn table(a: &FiniteDimAlgebra) -> Vec<Vec<Vec<Q>>> {
    a.structure_constants()
        .iter()
        .map(|r| r.iter().map(|c| c.iter().map(q).collect()).collect())
        .collect()
}

/// Plain row reduction with no pivoting strategy.
pub fn dense_rank(mut rows: Vec<Vec<Q>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &pivot;
                let pivot_row = rows[rank].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot_row).skip(col) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn tuple(mut ord: usize, len: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for s in out.iter_mut() {
        *s = ord % d;
        ord /= d;
    }
    out
}

fn ordinal(t: &[usize], d: usize) -> usize {
    t.iter().rev().fold(0, |acc, &x| acc * d + x)
}

/// Hochschild boundary `b: A^{⊗n+1} -> A^{⊗n}` on chains, as a dense matrix
/// with one row per target basis tensor.
pub fn hochschild_boundary(mu: &[Vec<Vec<Q>>], n: usize) -> Vec<Vec<Q>> {
    let d = mu.len();
    let src = d.pow(n as u32 + 1);
    let dst = d.pow(n as u32);
    let mut m = vec![vec![Q::zero(); src]; dst];
    #[allow(clippy::needless_range_loop)]
    for s in 0..src {
        let a = tuple(s, n + 1, d);
        for i in 0..n {
            let sign = if i % 2 == 0 { qi(1) } else { qi(-1) };
            for (k, c) in mu[a[i]][a[i + 1]].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut t: Vec<usize> = a[..i].to_vec();
                t.push(k);
                t.extend_from_slice(&a[i + 2..]);
                m[ordinal(&t, d)][s] += &sign * c;
            }
        }
        let sign = if n.is_multiple_of(2) { qi(1) } else { qi(-1) };
        for (k, c) in mu[a[n]][a[0]].iter().enumerate() {
            if c.is_zero() || n == 0 {
                continue;
            }
            let mut t = vec![k];
            t.extend_from_slice(&a[1..n]);
            m[ordinal(&t, d)][s] += &sign * c;
        }
    }
    m
}

/// `dim HH_n(A, A)` for `n <= max_n`; over a field this equals
/// `dim HH^n(A, A*)`.
pub fn hochschild_homology_dims(a: &FiniteDimAlgebra, max_n: usize) -> Vec<usize> {
    let mu = table(a);
    let d = mu.len();
    // rank of b_n : C_n -> C_{n-1}, with b_0 = 0
    let ranks: Vec<usize> = (0..=max_n + 1)
        .map(|n| if n == 0 { 0 } else { dense_rank(hochschild_boundary(&mu, n)) })
        .collect();
    (0..=max_n).map(|n| d.pow(n as u32 + 1) - ranks[n] - ranks[n + 1]).collect()
}

/// `dim Ω¹_{A|k}` from the presentation: free A-module on `de_j` modulo
/// `d(ab) - a db - b da`, closed under the A-action.
pub fn kaehler_dim(a: &FiniteDimAlgebra) -> usize {
    let mu = table(a);
    let d = mu.len();
    // coordinate (k, j) is e_k de_j
    let idx = |k: usize, j: usize| k * d + j;
    let mut rows = Vec::new();
    for c in 0..d {
        for x in 0..d {
            for y in 0..d {
                let mut row = vec![Q::zero(); d * d];
                for (s, m) in mu[x][y].iter().enumerate() {
                    row[idx(c, s)] += m;
                }
                for (l, m) in mu[c][x].iter().enumerate() {
                    row[idx(l, y)] -= m;
                }
                for (l, m) in mu[c][y].iter().enumerate() {
                    row[idx(l, x)] -= m;
                }
                rows.push(row);
            }
        }
    }
    d * d - dense_rank(rows)
}

/// Polynomials in one variable truncated at a fixed degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Trunc {
    pub coeffs: Vec<Q>,
}

impl Trunc {
    pub fn monomial(deg: usize, n: usize) -> Self {
        let mut coeffs = vec![Q::zero(); n];
        if deg < n {
            coeffs[deg] = Q::one();
        }
        Trunc { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Trunc { coeffs: vec![Q::zero(); n] }
    }

    pub fn mul(&self, other: &Trunc) -> Trunc {
        let n = self.coeffs.len();
        let mut out = Trunc::zero(n);
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                if i + j < n {
                    out.coeffs[i + j] += x * y;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Trunc) -> Trunc {
        Trunc {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Trunc {
        Trunc { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }
}

/// `dim HH^n(A, A*)` from the cochain complex `Hom(A^{⊗n}, A*)` with
/// `(a·g)(x) = g(xa)` and `(g·a)(x) = g(ax)`. A cochain coordinate is
/// `(ordinal of a_1..a_n, k)` for `F(a_1..a_n)(e_k)`.
pub fn bar_cochain_dims(a: &FiniteDimAlgebra, max_n: usize) -> Vec<usize> {
    let mu = table(a);
    let d = mu.len();
    let coboundary = |n: usize| -> Vec<Vec<Q>> {
        let cols = d.pow(n as u32) * d;
        let mut m = Vec::new();
        for t in 0..d.pow(n as u32 + 1) {
            let a = tuple(t, n + 1, d);
            for k in 0..d {
                let mut row = vec![Q::zero(); cols];
                let at = |args: &[usize], l: usize| ordinal(args, d) * d + l;
                // first term: F(a_2..)(e_k a_1)
                for (l, c) in mu[k][a[0]].iter().enumerate() {
                    row[at(&a[1..], l)] += c;
                }
                for i in 0..n {
                    let sign = if i % 2 == 0 { qi(-1) } else { qi(1) };
                    for (s, c) in mu[a[i]][a[i + 1]].iter().enumerate() {
                        let mut merged = a[..i].to_vec();
                        merged.push(s);
                        merged.extend_from_slice(&a[i + 2..]);
                        row[at(&merged, k)] += &sign * c;
                    }
                }
                let sign = if n.is_multiple_of(2) { qi(-1) } else { qi(1) };
                for (l, c) in mu[a[n]][k].iter().enumerate() {
                    row[at(&a[..n], l)] += &sign * c;
                }
                m.push(row);
            }
        }
        m
    };
    let ranks: Vec<usize> = (0..=max_n).map(|n| dense_rank(coboundary(n))).collect();
    (0..=max_n)
        .map(|n| d.pow(n as u32 + 1) - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect()
}
