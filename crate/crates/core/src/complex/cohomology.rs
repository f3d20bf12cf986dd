use crate::algebra::Triple;
use crate::error::Error;
use crate::exactlin::{
    intersect, kernel_basis, rank, restrict_and_project, RationalMatrix, SparseVec, SubspaceBasis,
};
use crate::report::CheckReport;

use super::cyclic::cyclic_matrix;
use super::faces::boundary_matrix;

/// One level of the complex: the coboundary out of `C̄ⁿ` and the cyclic
/// action on `C̄ⁿ`.
#[derive(Clone, Debug)]
pub struct CochainLevel {
    pub level: usize,
    pub dim: usize,
    pub boundary: RationalMatrix,
    pub cyclic: RationalMatrix,
}

impl CochainLevel {
    pub fn build(t: &Triple, level: usize) -> Result<Self, Error> {
        let boundary = boundary_matrix(t, level)?;
        let cyclic = cyclic_matrix(t, level)?;
        Ok(CochainLevel {
            level,
            dim: boundary.cols(),
            boundary,
            cyclic,
        })
    }

    /// `Id - λ` on this level.
    pub fn cyclic_defect(&self) -> RationalMatrix {
        RationalMatrix::identity(self.dim)
            .sub(&self.cyclic)
            .expect("square of matching size")
    }
}

/// Levels `0..=max_n` of the secondary Hochschild cochain complex.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    levels: Vec<CochainLevel>,
    /// Cyclic action one level above the top, for the subcomplex check.
    top_cyclic: RationalMatrix,
}

impl CochainComplex {
    pub fn build(t: &Triple, max_n: usize) -> Result<Self, Error> {
        let levels = (0..=max_n)
            .map(|n| CochainLevel::build(t, n))
            .collect::<Result<Vec<_>, _>>()?;
        let top_cyclic = cyclic_matrix(t, max_n + 1)?;
        Ok(CochainComplex { levels, top_cyclic })
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &CochainLevel {
        &self.levels[n]
    }

    pub fn boundary(&self, n: usize) -> &RationalMatrix {
        &self.levels[n].boundary
    }

    fn cyclic_above(&self, n: usize) -> &RationalMatrix {
        self.levels
            .get(n + 1)
            .map_or(&self.top_cyclic, |l| &l.cyclic)
    }

    /// Checks `∂ⁿ⁺¹ ∘ ∂ⁿ = 0` for every `n < max_n`. The witness is a basis
    /// cochain of `C̄ⁿ` whose image is not killed.
    pub fn verify(&self) -> CheckReport {
        const NAME: &str = "boundary squares to zero";
        for n in 0..self.max_level() {
            let composite = self
                .boundary(n + 1)
                .mul(self.boundary(n))
                .expect("consecutive levels compose");
            if !composite.is_zero() {
                let col = composite
                    .row_vecs()
                    .iter()
                    .find_map(|r| r.leading().map(|(c, _)| c))
                    .expect("nonzero matrix");
                return CheckReport::fail(
                    NAME,
                    format!("∂{}∘∂{} != 0", n + 1, n),
                    &SparseVec::unit(col),
                );
            }
        }
        CheckReport::pass(NAME, format!("levels 0..{}", self.max_level()))
    }

    /// Checks that `λ` has order `n+1` on `C̄ⁿ` for every level.
    pub fn verify_cyclic_order(&self) -> CheckReport {
        const NAME: &str = "cyclic action has order n+1";
        for l in &self.levels {
            let power = l.cyclic.pow(l.level as u32 + 1).expect("square");
            if power != RationalMatrix::identity(l.dim) {
                let bad = (0..l.dim)
                    .find(|&r| power.row(r) != &SparseVec::unit(r))
                    .expect("differs from identity");
                return CheckReport::fail(NAME, format!("λ^{} != Id on level {}", l.level + 1, l.level), &SparseVec::unit(bad));
            }
        }
        CheckReport::pass(NAME, format!("levels 0..={}", self.max_level()))
    }

    /// `Ker ∂ⁿ`.
    pub fn cocycles(&self, n: usize) -> SubspaceBasis {
        kernel_basis(self.boundary(n))
    }

    /// `Ker(Id - λ)` on `C̄ⁿ`.
    pub fn cyclic_cochains(&self, n: usize) -> SubspaceBasis {
        kernel_basis(&self.levels[n].cyclic_defect())
    }

    /// `Ker ∂ⁿ ∩ Ker(Id - λ)`.
    pub fn cyclic_cocycles(&self, n: usize) -> SubspaceBasis {
        intersect(&self.cocycles(n), &self.cyclic_cochains(n)).expect("same ambient level")
    }

    /// `dim HHⁿ = dim Ker ∂ⁿ - rank ∂ⁿ⁻¹` for each level.
    pub fn hochschild_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.levels.iter().map(|l| rank(&l.boundary)).collect();
        self.levels
            .iter()
            .enumerate()
            .map(|(n, l)| {
                let previous = if n == 0 { 0 } else { ranks[n - 1] };
                l.dim - ranks[n] - previous
            })
            .collect()
    }

    /// `dim HCⁿ` for each level, computed on the subcomplex `Ker(Id - λ)`.
    /// Fails if some `∂ⁿ` leaves the subcomplex.
    pub fn cyclic_dims(&self) -> Result<Vec<usize>, Error> {
        let mut dims = Vec::with_capacity(self.levels.len());
        let mut previous_image = 0;
        for (n, l) in self.levels.iter().enumerate() {
            let invariant = self.cyclic_cochains(n);
            let restricted = restrict_and_project(&l.boundary, &invariant)?;
            let above = self.cyclic_above(n);
            let defect = RationalMatrix::identity(above.rows()).sub(above)?;
            if !defect.mul(&restricted)?.is_zero() {
                return Err(Error::SubcomplexViolation { level: n });
            }
            let image = rank(&restricted);
            dims.push(invariant.dim() - image - previous_image);
            previous_image = image;
        }
        Ok(dims)
    }
}

/// `dim HHⁿ(A, B, ε)` for `0 <= n <= max_n`.
pub fn hochschild_dims(t: &Triple, max_n: usize) -> Result<Vec<usize>, Error> {
    Ok(CochainComplex::build(t, max_n)?.hochschild_dims())
}

/// `dim HCⁿ(A, B, ε)` for `0 <= n <= max_n`.
pub fn cyclic_dims(t: &Triple, max_n: usize) -> Result<Vec<usize>, Error> {
    CochainComplex::build(t, max_n)?.cyclic_dims()
}

pub fn verify_complex(t: &Triple, max_n: usize) -> Result<CheckReport, Error> {
    Ok(CochainComplex::build(t, max_n)?.verify())
}
