//! Classical Hochschild cohomology `HH^n(A, A*)` from the bar complex
//! `Hom(A^{⊗n}, A*)`, used to cross-check the secondary complex when
//! `B = k`.
//!
//! `A*` is a bimodule via `(a·g)(x) = g(xa)` and `(g·a)(x) = g(ax)`; the
//! coboundary is
//! `δF(a_1..a_{n+1}) = a_1·F(a_2..) + Σ (-1)^i F(..a_i a_{i+1}..) + (-1)^{n+1} F(a_1..a_n)·a_{n+1}`.
//! A cochain is stored with coordinate `tuple * dim A + k` for `F(tuple)(e_k)`,
//! the tuple read in base `dim A` with `a_1` most significant.

use crate::algebra::FiniteDimAlgebra;
use crate::error::Error;
use crate::exactlin::{rank, Rational, RationalMatrix, SparseVec};
use crate::par;

use super::index::AMBIENT_CAP;

fn digits(mut ordinal: usize, len: usize, radix: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = ordinal % radix;
        ordinal /= radix;
    }
    out
}

fn ordinal(digits: &[usize], radix: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * radix + d)
}

/// `δ: Hom(A^{⊗n}, A*) -> Hom(A^{⊗n+1}, A*)`.
pub fn bar_coboundary(a: &FiniteDimAlgebra, n: usize) -> Result<RationalMatrix, Error> {
    let d = a.dim();
    let dim_out = (0..n + 2).try_fold(1usize, |acc, _| acc.checked_mul(d));
    let dim_out = match dim_out {
        Some(x) if x <= AMBIENT_CAP => x,
        _ => return Err(Error::TooLarge { level: n + 1, cap: AMBIENT_CAP }),
    };
    let dim_in = dim_out / d;
    let mult = a.structure_constants();
    let rows = par::map_range(dim_out, |row| {
        let tuple_ord = row / d;
        let k = row % d;
        let t = digits(tuple_ord, n + 1, d);
        let mut pairs: Vec<(usize, Rational)> = Vec::new();
        // a_1 · F(a_2..a_{n+1}) at e_k is F(a_2..)(e_k a_1)
        let tail = ordinal(&t[1..], d);
        for (l, c) in mult[k][t[0]].iter().enumerate() {
            if !c.is_zero() {
                pairs.push((tail * d + l, c.clone()));
            }
        }
        for i in 0..n {
            let sign = if (i + 1) % 2 == 0 { Rational::one() } else { Rational::from(-1) };
            for (s, c) in mult[t[i]][t[i + 1]].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut merged = Vec::with_capacity(n);
                merged.extend_from_slice(&t[..i]);
                merged.push(s);
                merged.extend_from_slice(&t[i + 2..]);
                pairs.push((ordinal(&merged, d) * d + k, &sign * c));
            }
        }
        // F(a_1..a_n) · a_{n+1} at e_k is F(a_1..a_n)(a_{n+1} e_k)
        let sign = if (n + 1).is_multiple_of(2) { Rational::one() } else { Rational::from(-1) };
        let head = ordinal(&t[..n], d);
        for (l, c) in mult[t[n]][k].iter().enumerate() {
            if !c.is_zero() {
                pairs.push((head * d + l, &sign * c));
            }
        }
        SparseVec::from_pairs(pairs)
    });
    RationalMatrix::from_rows(dim_in, rows)
}

/// `dim HH^n(A, A*)` for `0 <= n <= max_n`.
pub fn classical_hochschild_dims(a: &FiniteDimAlgebra, max_n: usize) -> Result<Vec<usize>, Error> {
    let ranks = (0..=max_n)
        .map(|n| bar_coboundary(a, n).map(|m| (m.cols(), rank(&m))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ranks
        .iter()
        .enumerate()
        .map(|(n, &(dim, r))| dim - r - if n == 0 { 0 } else { ranks[n - 1].1 })
        .collect())
}
