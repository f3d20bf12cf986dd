use crate::algebra::Triple;
use crate::error::Error;

/// Largest cochain space this crate will materialize.
pub const AMBIENT_CAP: usize = 1_000_000;

/// `dim(A)^(n+1) · dim(B)^(n(n+1)/2)`, saturating instead of overflowing.
pub fn cochain_dim(t: &Triple, n: usize) -> u128 {
    let a = t.a().dim() as u128;
    let b = t.b().dim() as u128;
    let pow = |base: u128, e: usize| (0..e).fold(1u128, |acc, _| acc.saturating_mul(base));
    pow(a, n + 1).saturating_mul(pow(b, n * (n + 1) / 2))
}

/// A basis point of `A^{⊗n+1} ⊗ B^{⊗n(n+1)/2}`, read as an upper-triangular
/// array: `a[i]` on the diagonal, `b` above it in lexicographic `(i, j)`
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorIndex {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl TensorIndex {
    pub fn level(&self) -> usize {
        self.a.len() - 1
    }

    /// Entry `b_{i,j}`, `i < j`.
    pub fn b_at(&self, i: usize, j: usize) -> usize {
        self.b[pair_index(self.level(), i, j)]
    }
}

/// Position of `(i, j)` among the pairs `0 <= i < j <= n` in lexicographic
/// order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j <= n);
    // rows r < i hold n - r pairs each
    i * n - i * i.saturating_sub(1) / 2 + (j - i - 1)
}

/// Mixed-radix layout of one cochain level: a-digits (radix dim A) first,
/// then b-digits (radix dim B), most significant first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelShape {
    pub level: usize,
    pub dim_a: usize,
    pub dim_b: usize,
    dim: usize,
}

impl LevelShape {
    pub fn new(t: &Triple, level: usize) -> Result<Self, Error> {
        let dim = cochain_dim(t, level);
        if dim > AMBIENT_CAP as u128 {
            return Err(Error::TooLarge {
                level,
                cap: AMBIENT_CAP,
            });
        }
        Ok(LevelShape {
            level,
            dim_a: t.a().dim(),
            dim_b: t.b().dim(),
            dim: dim as usize,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_pairs(&self) -> usize {
        self.level * (self.level + 1) / 2
    }

    pub fn encode(&self, idx: &TensorIndex) -> usize {
        debug_assert_eq!(idx.a.len(), self.level + 1);
        debug_assert_eq!(idx.b.len(), self.num_pairs());
        let ord = idx.a.iter().fold(0, |acc, &x| acc * self.dim_a + x);
        idx.b.iter().fold(ord, |acc, &x| acc * self.dim_b + x)
    }

    pub fn decode(&self, mut ordinal: usize) -> TensorIndex {
        let mut b = vec![0; self.num_pairs()];
        for slot in b.iter_mut().rev() {
            *slot = ordinal % self.dim_b;
            ordinal /= self.dim_b;
        }
        let mut a = vec![0; self.level + 1];
        for slot in a.iter_mut().rev() {
            *slot = ordinal % self.dim_a;
            ordinal /= self.dim_a;
        }
        TensorIndex { a, b }
    }

    /// Digit radices in ordinal order.
    pub(crate) fn radices(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::repeat_n(self.dim_a, self.level + 1)
            .chain(std::iter::repeat_n(self.dim_b, self.num_pairs()))
    }
}
