//! Secondary Kähler differentials `Ω¹` as a quotient of a free A-module,
//! `Hom_A(Ω¹, M)`, and the universal property of `d`.
//!
//! The free module has k-basis `e_k · d(β_i ⊗ a_j)`, index
//! `(k * dim B + i) * dim A + j`. The `B ⊗ A` action factors through
//! `α ⊗ a ↦ a ε(α)`, so closing the relations under A is enough.

use std::collections::BTreeMap;

use crate::algebra::{FiniteDimAlgebra, SymmetricBimodule, Triple};
use crate::derivations::{der_system, DerivationSystem};
use crate::error::Error;
use crate::exactlin::{kernel_basis, rank, Rational, RationalMatrix, SparseVec, SubspaceBasis};
use crate::report::CheckReport;

/// `Ω¹` given by generators and the A-closed span of its relations.
#[derive(Clone, Debug)]
pub struct OmegaPresentation {
    triple: Triple,
    generators: Vec<SparseVec>,
    relation_span: SubspaceBasis,
    saturation_ranks: Vec<usize>,
}

impl OmegaPresentation {
    pub fn triple(&self) -> &Triple {
        &self.triple
    }

    pub fn free_dim(&self) -> usize {
        let t = &self.triple;
        t.a().dim() * t.b().dim() * t.a().dim()
    }

    pub fn free_index(&self, coeff: usize, beta: usize, a: usize) -> usize {
        (coeff * self.triple.b().dim() + beta) * self.triple.a().dim() + a
    }

    /// Relation vectors before closing under A.
    pub fn generators(&self) -> &[SparseVec] {
        &self.generators
    }

    pub fn relation_span(&self) -> &SubspaceBasis {
        &self.relation_span
    }

    /// Rank after the initial span and after each closure round.
    pub fn saturation_ranks(&self) -> &[usize] {
        &self.saturation_ranks
    }

    pub fn dim(&self) -> usize {
        self.free_dim() - self.relation_span.dim()
    }

    /// `x · v` for `x ∈ A` and `v` in the free module.
    pub fn act(&self, x: &SparseVec, v: &SparseVec) -> SparseVec {
        act_free(&self.triple, x, v)
    }

    /// `1 · d(β ⊗ a)` in free coordinates.
    pub fn d(&self, beta: &SparseVec, a: &SparseVec) -> SparseVec {
        d_symbol(&self.triple, self.triple.a().unit(), beta, a, &Rational::one())
    }

    /// Whether `d(1 ⊗ 1)` vanishes in `Ω¹`.
    pub fn unit_differential_vanishes(&self) -> bool {
        let t = &self.triple;
        self.relation_span.contains(&self.d(t.b().unit(), t.a().unit()))
    }

    /// Whether `e · r` stays in the relation span for every basis `e` of A
    /// and every spanning relation `r`.
    pub fn is_closed_under_a(&self) -> bool {
        let rank_before = self.relation_span.dim();
        let mut all = self.relation_span.vectors().to_vec();
        for r in self.relation_span.vectors() {
            for e in 0..self.triple.a().dim() {
                all.push(self.act(&SparseVec::unit(e), r));
            }
        }
        SubspaceBasis::span(self.free_dim(), &all)
            .map(|s| s.dim() == rank_before)
            .unwrap_or(false)
    }
}

fn act_free(t: &Triple, x: &SparseVec, v: &SparseVec) -> SparseVec {
    let (da, db) = (t.a().dim(), t.b().dim());
    let mut out = Vec::new();
    for (idx, c) in v.iter() {
        let k = idx / (db * da);
        let rest = idx % (db * da);
        let y = t.a().mul(x, &SparseVec::unit(k));
        for (k2, coef) in y.iter() {
            out.push((k2 * db * da + rest, c * coef));
        }
    }
    SparseVec::from_pairs(out)
}

/// `scale · x · d(u ⊗ v)` expanded over the free basis.
fn d_symbol(t: &Triple, x: &SparseVec, u: &SparseVec, v: &SparseVec, scale: &Rational) -> SparseVec {
    let (da, db) = (t.a().dim(), t.b().dim());
    let mut out = Vec::new();
    for (k, xk) in x.iter() {
        for (i, ui) in u.iter() {
            let c = &(scale * xk) * ui;
            for (j, vj) in v.iter() {
                out.push(((k * db + i) * da + j, &c * vj));
            }
        }
    }
    SparseVec::from_pairs(out)
}

/// Relation generators: for basis pairs `(α, a), (β, b)`
/// `d(αβ ⊗ ab) - aε(α)·d(β ⊗ b) - bε(β)·d(α ⊗ a)`; for basis `α`
/// `2·d(α ⊗ 1) - d(1 ⊗ ε(α))`. The span is then closed under A.
pub fn omega_presentation(t: &Triple) -> Result<OmegaPresentation, Error> {
    t.require_commutative("secondary Kähler differentials")?;
    let (da, db) = (t.a().dim(), t.b().dim());
    let one = Rational::one();
    let minus = Rational::from(-1);
    let unit_a = t.a().unit();
    let mut generators = Vec::new();
    for alpha in 0..db {
        for a in 0..da {
            for beta in 0..db {
                for b in 0..da {
                    let whole = d_symbol(
                        t,
                        unit_a,
                        t.b().basis_product(alpha, beta),
                        t.a().basis_product(a, b),
                        &one,
                    );
                    let a_eps = t.a().mul(&SparseVec::unit(a), t.epsilon().image_of_basis(alpha));
                    let b_eps = t.a().mul(&SparseVec::unit(b), t.epsilon().image_of_basis(beta));
                    let r = whole
                        .add_scaled(&one, &d_symbol(t, &a_eps, &SparseVec::unit(beta), &SparseVec::unit(b), &minus))
                        .add_scaled(&one, &d_symbol(t, &b_eps, &SparseVec::unit(alpha), &SparseVec::unit(a), &minus));
                    generators.push(r);
                }
            }
        }
    }
    for alpha in 0..db {
        let halves = d_symbol(t, unit_a, &SparseVec::unit(alpha), unit_a, &Rational::from(2));
        let full = d_symbol(t, unit_a, t.b().unit(), t.epsilon().image_of_basis(alpha), &minus);
        generators.push(halves.add_scaled(&one, &full));
    }

    let free_dim = da * db * da;
    let mut span = SubspaceBasis::span(free_dim, &generators)?;
    let mut saturation_ranks = vec![span.dim()];
    loop {
        let mut all = span.vectors().to_vec();
        for r in span.vectors() {
            for e in 0..da {
                all.push(act_free(t, &SparseVec::unit(e), r));
            }
        }
        let next = SubspaceBasis::span(free_dim, &all)?;
        if next.dim() == span.dim() {
            break;
        }
        saturation_ranks.push(next.dim());
        span = next;
    }
    Ok(OmegaPresentation {
        triple: t.clone(),
        generators,
        relation_span: span,
        saturation_ranks,
    })
}

/// Constraints on `φ(d(β_i ⊗ a_j)) ∈ M` (same layout as
/// [`DerivationSystem`] unknowns) saying that the A-linear extension of `φ`
/// kills every relation.
#[derive(Clone, Debug)]
pub struct HomSystem {
    omega: OmegaPresentation,
    module: SymmetricBimodule,
    constraints: RationalMatrix,
}

impl HomSystem {
    pub fn omega(&self) -> &OmegaPresentation {
        &self.omega
    }

    pub fn module(&self) -> &SymmetricBimodule {
        &self.module
    }

    pub fn unknown_dim(&self) -> usize {
        self.omega.triple.b().dim() * self.omega.triple.a().dim() * self.module.dim()
    }

    pub fn constraints(&self) -> &RationalMatrix {
        &self.constraints
    }

    pub fn solutions(&self) -> SubspaceBasis {
        kernel_basis(&self.constraints)
    }

    pub fn is_solution(&self, phi: &SparseVec) -> bool {
        self.constraints.mul_vec(phi).is_ok_and(|r| r.is_zero())
    }

    /// `φ` applied to a free-module element, using A-linearity.
    pub fn apply(&self, phi: &SparseVec, v: &SparseVec) -> SparseVec {
        let t = &self.omega.triple;
        let (da, db, dm) = (t.a().dim(), t.b().dim(), self.module.dim());
        let mut out = Vec::new();
        for (idx, c) in v.iter() {
            let k = idx / (db * da);
            let gen = idx % (db * da);
            let value = SparseVec::from_pairs(
                (0..dm).map(|m| (m, phi.get(gen * dm + m))),
            );
            for (m, x) in self.module.act(&SparseVec::unit(k), &value).iter() {
                out.push((m, c * x));
            }
        }
        SparseVec::from_pairs(out)
    }

    /// `φ ∘ d` in derivation coordinates: `(φ∘d)(β_i ⊗ a_j) = φ(1·d(β_i ⊗ a_j))`.
    pub fn compose_with_d(&self, phi: &SparseVec) -> SparseVec {
        let t = &self.omega.triple;
        let (da, db, dm) = (t.a().dim(), t.b().dim(), self.module.dim());
        let mut out = Vec::new();
        for i in 0..db {
            for j in 0..da {
                let dv = self.omega.d(&SparseVec::unit(i), &SparseVec::unit(j));
                for (m, x) in self.apply(phi, &dv).iter() {
                    out.push(((i * da + j) * dm + m, x.clone()));
                }
            }
        }
        SparseVec::from_pairs(out)
    }
}

pub fn hom_omega(t: &Triple, m: &SymmetricBimodule) -> Result<HomSystem, Error> {
    let omega = omega_presentation(t)?;
    hom_omega_from(omega, m)
}

fn hom_omega_from(omega: OmegaPresentation, m: &SymmetricBimodule) -> Result<HomSystem, Error> {
    let t = &omega.triple;
    let (da, db, dm) = (t.a().dim(), t.b().dim(), m.dim());
    let unknowns = db * da * dm;
    let mut rows = Vec::new();
    for r in omega.relation_span.vectors() {
        // sum over r's terms of e_k · φ(gen), one row per component of M
        let mut block: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); dm];
        for (idx, c) in r.iter() {
            let k = idx / (db * da);
            let gen = idx % (db * da);
            for src in 0..dm {
                for (dst, act) in m.basis_action(k, src).iter() {
                    *block[dst].entry(gen * dm + src).or_default() += &(c * act);
                }
            }
        }
        rows.extend(block.into_iter().map(SparseVec::from_sorted_map));
    }
    Ok(HomSystem {
        constraints: RationalMatrix::from_rows(unknowns, rows)?,
        omega,
        module: m.clone(),
    })
}

/// The factorization `δ = φ ∘ d`: `φ(d(β_i ⊗ a_j)) := δ(β_i ⊗ a_j)`. Errors
/// if this `φ` does not kill the relations or does not reproduce `δ`.
pub fn universal_factor(hom: &HomSystem, delta: &SparseVec) -> Result<SparseVec, Error> {
    let phi = delta.clone();
    if !hom.is_solution(&phi) {
        return Err(Error::NotUniversal(
            "φ does not annihilate the relations of Ω¹".into(),
        ));
    }
    if hom.compose_with_d(&phi) != *delta {
        return Err(Error::NotUniversal("φ∘d differs from δ".into()));
    }
    Ok(phi)
}

/// Both systems for the same `(T, M)`.
pub fn universal_pair(t: &Triple, m: &SymmetricBimodule) -> Result<(HomSystem, DerivationSystem), Error> {
    Ok((hom_omega(t, m)?, der_system(t, m)?))
}

/// `Hom_A(Ω¹, M) -> Der(T, M)`, `φ ↦ φ∘d`, is a bijection: dimensions
/// agree, every derivation factors through `d`, and the images of a Hom basis
/// are independent derivations.
pub fn check_universal(t: &Triple, m: &SymmetricBimodule) -> Result<CheckReport, Error> {
    let name = format!("Hom_A(Ω1, {}) = Der(T, {})", m.name(), m.name());
    let (hom, der) = universal_pair(t, m)?;
    let hom_basis = hom.solutions();
    let der_basis = der.solutions();
    if hom_basis.dim() != der_basis.dim() {
        return Ok(CheckReport::fail_plain(
            &name,
            format!("dim Hom = {} but dim Der = {}", hom_basis.dim(), der_basis.dim()),
        ));
    }
    for delta in der_basis.vectors() {
        if let Err(e) = universal_factor(&hom, delta) {
            return Ok(CheckReport::fail(&name, e.to_string(), delta));
        }
    }
    let images: Vec<SparseVec> = hom_basis.vectors().iter().map(|phi| hom.compose_with_d(phi)).collect();
    if let Some((phi, _)) = hom_basis
        .vectors()
        .iter()
        .zip(&images)
        .find(|(_, img)| !der.is_solution(img))
    {
        return Ok(CheckReport::fail(&name, "φ∘d is not a secondary derivation", phi));
    }
    let image_rank = rank(&RationalMatrix::from_rows(der.unknown_dim(), images)?);
    if image_rank != der_basis.dim() {
        return Ok(CheckReport::fail_plain(
            &name,
            format!("φ ↦ φ∘d has rank {image_rank}, expected {}", der_basis.dim()),
        ));
    }
    Ok(CheckReport::pass(&name, format!("dim {}", der_basis.dim())))
}

/// Classical `dim Ω¹_{A|k}` as `dim I/I²`, `I` the kernel of the
/// multiplication `A ⊗ A -> A`. Only meaningful for commutative A.
pub fn classical_omega_dim(a: &FiniteDimAlgebra) -> Result<usize, Error> {
    let d = a.dim();
    // multiplication map: column (i * d + j) is e_i e_j
    let columns: Vec<SparseVec> = (0..d * d).map(|c| a.basis_product(c / d, c % d).clone()).collect();
    let mult = RationalMatrix::from_columns(d, &columns)?;
    let ideal = kernel_basis(&mult);
    let tensor_mul = |u: &SparseVec, v: &SparseVec| {
        let mut out = Vec::new();
        for (p, x) in u.iter() {
            for (q, y) in v.iter() {
                let xy = x * y;
                let left = a.basis_product(p / d, q / d);
                let right = a.basis_product(p % d, q % d);
                for (l, c) in left.iter() {
                    for (r, e) in right.iter() {
                        out.push((l * d + r, &(&xy * c) * e));
                    }
                }
            }
        }
        SparseVec::from_pairs(out)
    };
    let products: Vec<SparseVec> = ideal
        .vectors()
        .iter()
        .flat_map(|u| ideal.vectors().iter().map(move |v| (u, v)))
        .map(|(u, v)| tensor_mul(u, v))
        .collect();
    let square = SubspaceBasis::span(d * d, &products)?;
    Ok(ideal.dim() - square.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin::builtin;

    #[test]
    fn base_field_has_trivial_omega() {
        let t = builtin("field").unwrap();
        let o = omega_presentation(&t).unwrap();
        assert_eq!(o.free_dim(), 1);
        assert_eq!(o.dim(), 0);
        assert_eq!(hom_omega(&t, &SymmetricBimodule::regular(t.a())).unwrap().solutions().dim(), 0);
    }

    #[test]
    fn dual_numbers_omega_is_one_dimensional() {
        let t = builtin("dual-k").unwrap();
        let o = omega_presentation(&t).unwrap();
        assert_eq!(o.dim(), 1);
        // x·d(1⊗x) is a relation, d(1⊗x) is not
        let dx = o.d(&SparseVec::unit(0), &SparseVec::unit(1));
        assert!(!o.relation_span().contains(&dx));
        assert!(o.relation_span().contains(&o.act(&SparseVec::unit(1), &dx)));
    }

    #[test]
    fn relations_are_a_closed() {
        for name in ["field", "dual-k", "dual-dual", "trunc-x4"] {
            let o = omega_presentation(&builtin(name).unwrap()).unwrap();
            assert!(o.is_closed_under_a(), "{name}");
            assert!(o.unit_differential_vanishes(), "{name}");
            let ranks = o.saturation_ranks();
            assert!(ranks.windows(2).all(|w| w[0] < w[1]), "{name}");
            assert!(*ranks.last().unwrap() <= o.free_dim());
        }
    }

    #[test]
    fn zero_derivation_factors_through_zero() {
        let t = builtin("dual-dual").unwrap();
        let hom = hom_omega(&t, &SymmetricBimodule::dual(t.a())).unwrap();
        assert_eq!(universal_factor(&hom, &SparseVec::new()).unwrap(), SparseVec::new());
    }

    #[test]
    fn universal_property_holds() {
        for name in ["field", "dual-k", "dual-dual", "trunc-x4"] {
            let t = builtin(name).unwrap();
            for m in [SymmetricBimodule::regular(t.a()), SymmetricBimodule::dual(t.a())] {
                let r = check_universal(&t, &m).unwrap();
                assert!(r.passed, "{name} {}: {}", m.name(), r.detail);
            }
        }
    }

    #[test]
    fn classical_omega_of_truncations() {
        // Ω¹ of Q[x]/(x^n) is A dx / (n x^{n-1} dx), dimension n - 1
        for n in 1..5 {
            let a = crate::algebra::builtin::truncated_polynomials("x", n);
            assert_eq!(classical_omega_dim(&a).unwrap(), n - 1);
        }
    }

    #[test]
    fn noncommutative_rejected() {
        let t = builtin("mat2-k").unwrap();
        assert!(matches!(omega_presentation(&t), Err(Error::NotCommutative(_))));
    }
}
