//! Secondary derivations `D: B ⊗ A -> M` as solution spaces of linear
//! systems, and the degree-one comparisons with the cochain complex.
//!
//! Two coordinate systems appear here:
//! - [`DerivationSystem`] unknowns are `D(β_i ⊗ a_j)` component `m`, at index
//!   `(i * dim A + j) * dim M + m`.
//! - [`DualDerivationSystem`] works directly in `C̄¹`: a functional
//!   `f(⊗(x, α; 1, z))` has coordinate `(x * dim A + z) * dim B + α`, the
//!   level-1 ordinal of [`LevelShape`](crate::complex::LevelShape). For
//!   `M = A*` the two are related by `f(x, α; z) = D(α ⊗ z)(x)`.

use std::collections::BTreeMap;

use crate::algebra::{SymmetricBimodule, Triple};
use crate::complex::{boundary_matrix, cyclic_dims, CochainComplex};
use crate::error::Error;
use crate::exactlin::{kernel_basis, Rational, RationalMatrix, SparseVec, SubspaceBasis};
use crate::par;
use crate::report::CheckReport;

/// Row builder: one sparse row per component of the target space.
struct RowBlock {
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl RowBlock {
    fn new(components: usize) -> Self {
        RowBlock {
            rows: vec![BTreeMap::new(); components],
        }
    }

    fn add(&mut self, component: usize, unknown: usize, coef: Rational) {
        if !coef.is_zero() {
            *self.rows[component].entry(unknown).or_default() += &coef;
        }
    }

    fn finish(self) -> Vec<SparseVec> {
        self.rows.into_iter().map(SparseVec::from_pairs).collect()
    }
}

/// The system whose solutions are `Der_k(T, M)`.
#[derive(Clone, Debug)]
pub struct DerivationSystem {
    triple: Triple,
    module: SymmetricBimodule,
    constraints: RationalMatrix,
    leibniz_rows: usize,
}

impl DerivationSystem {
    pub fn triple(&self) -> &Triple {
        &self.triple
    }

    pub fn module(&self) -> &SymmetricBimodule {
        &self.module
    }

    pub fn unknown_dim(&self) -> usize {
        self.triple.b().dim() * self.triple.a().dim() * self.module.dim()
    }

    pub fn constraints(&self) -> &RationalMatrix {
        &self.constraints
    }

    /// The rows coming from the twisted Leibniz rule alone.
    pub fn leibniz_constraints(&self) -> RationalMatrix {
        RationalMatrix::from_rows(
            self.unknown_dim(),
            self.constraints.row_vecs()[..self.leibniz_rows].to_vec(),
        )
        .expect("same width")
    }

    pub fn unknown_index(&self, beta: usize, a: usize, m: usize) -> usize {
        (beta * self.triple.a().dim() + a) * self.module.dim() + m
    }

    pub fn solutions(&self) -> SubspaceBasis {
        kernel_basis(&self.constraints)
    }

    pub fn is_solution(&self, d: &SparseVec) -> bool {
        self.constraints.mul_vec(d).is_ok_and(|r| r.is_zero())
    }

    /// `D(β ⊗ a)` for arbitrary elements `β ∈ B`, `a ∈ A`.
    pub fn evaluate(&self, d: &SparseVec, beta: &SparseVec, a: &SparseVec) -> SparseVec {
        let dm = self.module.dim();
        let mut out = Vec::new();
        for (i, x) in beta.iter() {
            for (j, y) in a.iter() {
                let xy = x * y;
                for m in 0..dm {
                    let v = d.get(self.unknown_index(i, j, m));
                    if !v.is_zero() {
                        out.push((m, &xy * &v));
                    }
                }
            }
        }
        SparseVec::from_pairs(out)
    }
}

/// Adds `coef · x · D(β ⊗ a)` (with `x ∈ A` acting on M) to `block`.
fn add_acted(
    block: &mut RowBlock,
    t: &Triple,
    m: &SymmetricBimodule,
    x: &SparseVec,
    beta: usize,
    a: usize,
    coef: &Rational,
) {
    let (da, dm) = (t.a().dim(), m.dim());
    for (i, xi) in x.iter() {
        let c = coef * xi;
        for src in 0..dm {
            for (dst, act) in m.basis_action(i, src).iter() {
                block.add(dst, (beta * da + a) * dm + src, &c * act);
            }
        }
    }
}

/// Adds `coef · D(u ⊗ v)` for `u ∈ B`, `v ∈ A` to `block`.
fn add_plain(block: &mut RowBlock, t: &Triple, dm: usize, u: &SparseVec, v: &SparseVec, coef: &Rational) {
    let da = t.a().dim();
    for (s, us) in u.iter() {
        for (j, vj) in v.iter() {
            let c = &(coef * us) * vj;
            for comp in 0..dm {
                block.add(comp, (s * da + j) * dm + comp, c.clone());
            }
        }
    }
}

/// Linear constraints for `D: B ⊗ A -> M`: the twisted Leibniz rule on every
/// basis tuple `(α, a, β, b)`, then `2 D(α ⊗ 1) = D(1 ⊗ ε(α))` for every
/// basis `α`. Linearity is implicit in working over the basis.
pub fn der_system(t: &Triple, m: &SymmetricBimodule) -> Result<DerivationSystem, Error> {
    t.require_commutative("secondary derivations")?;
    if m.validate(t.a()).is_err() {
        return Err(Error::Malformed(format!("module {} is not a valid A-module", m.name())));
    }
    let (da, db, dm) = (t.a().dim(), t.b().dim(), m.dim());
    let one = Rational::one();
    let minus = Rational::from(-1);
    let pairs = db * da;
    let leibniz: Vec<Vec<SparseVec>> = par::map_range(pairs * pairs, |k| {
        let (alpha, a) = ((k / pairs) / da, (k / pairs) % da);
        let (beta, b) = ((k % pairs) / da, (k % pairs) % da);
        let mut block = RowBlock::new(dm);
        // D(αβ ⊗ ab)
        add_plain(
            &mut block,
            t,
            dm,
            t.b().basis_product(alpha, beta),
            t.a().basis_product(a, b),
            &one,
        );
        // - aε(α)·D(β ⊗ b) - bε(β)·D(α ⊗ a)
        let a_eps = t.a().mul(&SparseVec::unit(a), t.epsilon().image_of_basis(alpha));
        let b_eps = t.a().mul(&SparseVec::unit(b), t.epsilon().image_of_basis(beta));
        add_acted(&mut block, t, m, &a_eps, beta, b, &minus);
        add_acted(&mut block, t, m, &b_eps, alpha, a, &minus);
        block.finish()
    });
    let mut rows: Vec<SparseVec> = leibniz.into_iter().flatten().collect();
    let leibniz_rows = rows.len();
    let two = Rational::from(2);
    for alpha in 0..db {
        let mut block = RowBlock::new(dm);
        add_plain(&mut block, t, dm, &SparseVec::unit(alpha), t.a().unit(), &two);
        add_plain(
            &mut block,
            t,
            dm,
            t.b().unit(),
            t.epsilon().image_of_basis(alpha),
            &minus,
        );
        rows.extend(block.finish());
    }
    Ok(DerivationSystem {
        triple: t.clone(),
        module: m.clone(),
        constraints: RationalMatrix::from_rows(db * da * dm, rows)?,
        leibniz_rows,
    })
}

/// Rewrites a solution of `der_system(t, A*)` as a functional on
/// `A ⊗ B ⊗ A` in `C̄¹` coordinates: `f(x, α; z) = D(α ⊗ z)(x)`.
pub fn dual_solution_to_cochain(t: &Triple, d: &SparseVec) -> SparseVec {
    let (da, db) = (t.a().dim(), t.b().dim());
    SparseVec::from_pairs(d.iter().map(|(idx, v)| {
        let x = idx % da;
        let z = (idx / da) % da;
        let alpha = idx / (da * da);
        ((x * da + z) * db + alpha, v.clone())
    }))
}

/// Coefficients of the three terms in the first derivation relation on
/// `C̄¹`. The default `(1, -1, -1)` is the true relation; other values exist
/// only to confirm the comparison checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeibnizSigns {
    pub whole: i64,
    pub left: i64,
    pub right: i64,
}

impl Default for LeibnizSigns {
    fn default() -> Self {
        LeibnizSigns {
            whole: 1,
            left: -1,
            right: -1,
        }
    }
}

/// Derivation relations written directly on `C̄¹ = Hom(A ⊗ B ⊗ A, k)`.
#[derive(Clone, Debug)]
pub struct DualDerivationSystem {
    ambient_dim: usize,
    constraints: RationalMatrix,
}

impl DualDerivationSystem {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn constraints(&self) -> &RationalMatrix {
        &self.constraints
    }

    pub fn solutions(&self) -> SubspaceBasis {
        kernel_basis(&self.constraints)
    }

    pub fn is_solution(&self, f: &SparseVec) -> bool {
        self.constraints.mul_vec(f).is_ok_and(|r| r.is_zero())
    }

    /// Flips the sign of one stored coefficient (row, position within the
    /// row). Mutation testing only.
    pub fn flip_entry(&mut self, row: usize, position: usize) {
        let cols = self.constraints.cols();
        let mut rows = std::mem::replace(&mut self.constraints, RationalMatrix::zeros(0, cols)).into_rows();
        let flipped = SparseVec::from_pairs(rows[row].iter().enumerate().map(|(p, (c, v))| {
            (c, if p == position { -v } else { v.clone() })
        }));
        rows[row] = flipped;
        self.constraints = RationalMatrix::from_rows(cols, rows).expect("width kept");
    }
}

/// `coef · f(x, y; z)` expanded over the `C̄¹` basis.
fn add_cochain_term(
    row: &mut BTreeMap<usize, Rational>,
    db: usize,
    da: usize,
    x: &SparseVec,
    y: &SparseVec,
    z: &SparseVec,
    coef: &Rational,
) {
    for (i, xi) in x.iter() {
        for (k, zk) in z.iter() {
            let xz = &(coef * xi) * zk;
            for (j, yj) in y.iter() {
                *row.entry((i * da + k) * db + j).or_default() += &(&xz * yj);
            }
        }
    }
}

/// The relations
/// `f(a, αβ; bc) = f(abε(α), β; c) + f(caε(β), α; b)` for every basis
/// `a, b, c, α, β`, followed by `2 f(a, γ; 1) = f(a, 1; ε(γ))` for every
/// basis `a, γ`.
pub fn dual_der_system(t: &Triple) -> Result<DualDerivationSystem, Error> {
    dual_der_system_with(t, LeibnizSigns::default())
}

pub fn dual_der_system_with(t: &Triple, signs: LeibnizSigns) -> Result<DualDerivationSystem, Error> {
    t.require_commutative("secondary derivations")?;
    let (da, db) = (t.a().dim(), t.b().dim());
    let ambient_dim = da * da * db;
    let (whole, left, right) = (
        Rational::from(signs.whole),
        Rational::from(signs.left),
        Rational::from(signs.right),
    );
    let alg = t.a();
    let eps = t.epsilon();
    let mut rows = par::map_range(da * da * da * db * db, |k| {
        let beta = k % db;
        let alpha = (k / db) % db;
        let c = (k / (db * db)) % da;
        let b = (k / (db * db * da)) % da;
        let a = k / (db * db * da * da);
        let (ea, eb, ec) = (SparseVec::unit(a), SparseVec::unit(b), SparseVec::unit(c));
        let mut row = BTreeMap::new();
        add_cochain_term(
            &mut row,
            db,
            da,
            &ea,
            t.b().basis_product(alpha, beta),
            alg.basis_product(b, c),
            &whole,
        );
        let ab_eps = alg.mul_all(&[&ea, &eb, eps.image_of_basis(alpha)]);
        add_cochain_term(&mut row, db, da, &ab_eps, &SparseVec::unit(beta), &ec, &left);
        let ca_eps = alg.mul_all(&[&ec, &ea, eps.image_of_basis(beta)]);
        add_cochain_term(&mut row, db, da, &ca_eps, &SparseVec::unit(alpha), &eb, &right);
        SparseVec::from_sorted_map(row)
    });
    let two = Rational::from(2);
    let minus = Rational::from(-1);
    for a in 0..da {
        for gamma in 0..db {
            let mut row = BTreeMap::new();
            let ea = SparseVec::unit(a);
            add_cochain_term(&mut row, db, da, &ea, &SparseVec::unit(gamma), alg.unit(), &two);
            add_cochain_term(
                &mut row,
                db,
                da,
                &ea,
                t.b().unit(),
                eps.image_of_basis(gamma),
                &minus,
            );
            rows.push(SparseVec::from_sorted_map(row));
        }
    }
    Ok(DualDerivationSystem {
        ambient_dim,
        constraints: RationalMatrix::from_rows(ambient_dim, rows)?,
    })
}

/// [`dual_der_system`] plus `f(a, α; b) = -f(b, α; a)` for every unordered
/// basis pair `{a, b}` and basis `α`.
pub fn der1_system(t: &Triple) -> Result<DualDerivationSystem, Error> {
    let base = dual_der_system(t)?;
    let (da, db) = (t.a().dim(), t.b().dim());
    let mut rows = base.constraints.into_rows();
    for a in 0..da {
        for b in a..da {
            for alpha in 0..db {
                rows.push(SparseVec::from_pairs([
                    ((a * da + b) * db + alpha, Rational::one()),
                    ((b * da + a) * db + alpha, Rational::one()),
                ]));
            }
        }
    }
    Ok(DualDerivationSystem {
        ambient_dim: base.ambient_dim,
        constraints: RationalMatrix::from_rows(base.ambient_dim, rows)?,
    })
}

/// Mutual containment of two subspaces of the same space, each given by a
/// basis and a membership test.
fn mutual_check(
    name: &str,
    left_label: &str,
    left: &SubspaceBasis,
    left_member: impl Fn(&SparseVec) -> bool,
    right_label: &str,
    right: &SubspaceBasis,
    right_member: impl Fn(&SparseVec) -> bool,
) -> CheckReport {
    if let Some(v) = left.vectors().iter().find(|v| !right_member(v)) {
        return CheckReport::fail(name, format!("a vector of {left_label} violates {right_label}"), v);
    }
    if let Some(v) = right.vectors().iter().find(|v| !left_member(v)) {
        return CheckReport::fail(name, format!("a vector of {right_label} violates {left_label}"), v);
    }
    CheckReport::pass(
        name,
        format!("{left_label} = {right_label}, dim {}", left.dim()),
    )
}

/// `HH¹ = Ker ∂¹` (since `∂⁰ = 0`) coincides with the solution space of the
/// derivation relations inside `C̄¹`.
pub fn check_hh1(t: &Triple) -> Result<CheckReport, Error> {
    check_hh1_against(t, &dual_der_system(t)?)
}

pub fn check_hh1_against(t: &Triple, system: &DualDerivationSystem) -> Result<CheckReport, Error> {
    const NAME: &str = "HH1 = Der(T, A*)";
    t.require_commutative("the HH1 comparison")?;
    let d0 = boundary_matrix(t, 0)?;
    if !d0.is_zero() {
        return Ok(CheckReport::fail_plain(NAME, "∂0 is not zero"));
    }
    let d1 = boundary_matrix(t, 1)?;
    let cocycles = kernel_basis(&d1);
    let derivations = system.solutions();
    Ok(mutual_check(
        NAME,
        "Ker ∂1",
        &cocycles,
        |v| d1.mul_vec(v).is_ok_and(|r| r.is_zero()),
        "the derivation relations",
        &derivations,
        |v| system.is_solution(v),
    ))
}

/// `HC¹` agrees with the antisymmetric derivations, both in dimension and
/// as subspaces of `C̄¹`.
pub fn check_hc1(t: &Triple) -> Result<CheckReport, Error> {
    const NAME: &str = "HC1 = Der1(T, A*)";
    t.require_commutative("the HC1 comparison")?;
    let hc1 = cyclic_dims(t, 1)?[1];
    let system = der1_system(t)?;
    let der1 = system.solutions();
    if hc1 != der1.dim() {
        return Ok(CheckReport::fail_plain(
            NAME,
            format!("dim HC1 = {hc1} but dim Der1 = {}", der1.dim()),
        ));
    }
    let complex = CochainComplex::build(t, 1)?;
    let cyclic_cocycles = complex.cyclic_cocycles(1);
    let d1 = complex.boundary(1);
    let defect = complex.level(1).cyclic_defect();
    Ok(mutual_check(
        NAME,
        "Ker ∂1 ∩ Ker(1-λ)",
        &cyclic_cocycles,
        |v| {
            d1.mul_vec(v).is_ok_and(|r| r.is_zero()) && defect.mul_vec(v).is_ok_and(|r| r.is_zero())
        },
        "the antisymmetric derivation relations",
        &der1,
        |v| system.is_solution(v),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin::builtin;

    #[test]
    fn base_field_has_no_derivations() {
        let t = builtin("field").unwrap();
        let m = SymmetricBimodule::regular(t.a());
        assert_eq!(der_system(&t, &m).unwrap().solutions().dim(), 0);
    }

    #[test]
    fn dual_numbers_into_dual() {
        // D(1⊗x) ∈ A*; Leibniz on x·x = 0 forces D(1⊗x)(x) = 0 and leaves
        // D(1⊗x)(1) free.
        let t = builtin("dual-k").unwrap();
        let sys = der_system(&t, &SymmetricBimodule::dual(t.a())).unwrap();
        let sols = sys.solutions();
        assert_eq!(sols.dim(), 1);
        let only = &sols.vectors()[0];
        assert_eq!(only.entries(), &[(sys.unknown_index(0, 1, 0), Rational::one())]);
    }

    #[test]
    fn noncommutative_rejected() {
        let t = builtin("mat2-k").unwrap();
        let m = SymmetricBimodule::regular(t.a());
        assert!(matches!(der_system(&t, &m), Err(Error::NotCommutative(_))));
        assert!(matches!(dual_der_system(&t), Err(Error::NotCommutative(_))));
        assert!(matches!(der1_system(&t), Err(Error::NotCommutative(_))));
    }

    #[test]
    fn dual_system_row_counts() {
        let t = builtin("trunc-x4").unwrap();
        let sys = dual_der_system(&t).unwrap();
        assert_eq!(sys.constraints().rows(), 4 * 4 * 4 * 2 * 2 + 4 * 2);
        assert_eq!(sys.ambient_dim(), 32);
        // pairs a <= b: 10, times dim B
        assert_eq!(der1_system(&t).unwrap().constraints().rows(), sys.constraints().rows() + 20);
    }

    #[test]
    fn both_derivation_pictures_agree() {
        for name in ["field", "dual-k", "dual-dual", "trunc-x4"] {
            let t = builtin(name).unwrap();
            let sys = der_system(&t, &SymmetricBimodule::dual(t.a())).unwrap();
            let dual = dual_der_system(&t).unwrap();
            let mapped: Vec<SparseVec> = sys
                .solutions()
                .vectors()
                .iter()
                .map(|d| dual_solution_to_cochain(&t, d))
                .collect();
            let mapped = SubspaceBasis::span(dual.ambient_dim(), &mapped).unwrap();
            assert!(mapped.same_span(&dual.solutions()), "{name}");
        }
    }

    #[test]
    fn hh1_and_hc1_checks_pass() {
        for name in ["field", "dual-k", "dual-dual", "trunc-x4"] {
            let t = builtin(name).unwrap();
            assert!(check_hh1(&t).unwrap().passed, "{name}");
            assert!(check_hc1(&t).unwrap().passed, "{name}");
        }
    }

    #[test]
    fn wrong_sign_is_caught() {
        let t = builtin("dual-dual").unwrap();
        let signs = LeibnizSigns { right: 1, ..LeibnizSigns::default() };
        let bad = dual_der_system_with(&t, signs).unwrap();
        let report = check_hh1_against(&t, &bad).unwrap();
        assert!(!report.passed);
        assert!(report.witness.is_some());
    }
}
