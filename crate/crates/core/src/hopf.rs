//! Ordinary Hopf-algebraic structures as structure-constant tensors:
//! axiom checkers, Sweedler powers, the convolution calculus,
//! coquasitriangular forms, comodules, modules, and module algebras.
//!
//! Conventions. Comodules are right comodules `δ: V → V⊗H`; modules over an
//! algebra `A` are left modules `λ: A⊗M → M`; module algebras carry a right
//! action `A⊗H → A` written `a.h`. The dual-quasitriangularity axioms are
//! pinned here once and for all:
//!
//! * r(ab|c) = r(a|c₁) r(b|c₂)
//! * r(a|bc) = r(a₁|c) r(a₂|b)
//! * b₁a₁ r(a₂|b₂) = r(a₁|b₁) a₂b₂   (r-quasi-commutativity)
//! * r(1|a) = ε(a) = r(a|1)
//! * r is convolution invertible on H⊗H, with the given inverse
//!
//! Antipodes and convolution inverses are found by exact linear solving,
//! never by closed formulas; uniqueness of convolution inverses makes the
//! solve canonical.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{self, LinSolve};
use crate::report::Report;
use crate::scalar::{FieldCtx, Scalar};
use crate::tensor::{signature, MultilinearMap, Space, TensorError};

/// Errors from Hopf-layer constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HopfError {
    Tensor(TensorError),
    /// A convolution inverse does not exist; carries the defect of the
    /// linear system that was solved.
    NotInvertible {
        unknowns: usize,
        rank: usize,
        inconsistent_row: Option<usize>,
    },
    /// The bialgebra admits no antipode (or an alleged one fails its axioms).
    NotAHopfAlgebra { detail: String },
    /// An input that must be a comodule algebra is not one.
    NotComoduleAlgebra { detail: String },
}

impl fmt::Display for HopfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfError::Tensor(e) => write!(f, "{e}"),
            HopfError::NotInvertible {
                unknowns,
                rank,
                inconsistent_row,
            } => write!(
                f,
                "not convolution invertible: rank {rank} of {unknowns} unknowns{}",
                match inconsistent_row {
                    Some(r) => format!(", inconsistent at equation {r}"),
                    None => String::new(),
                }
            ),
            HopfError::NotAHopfAlgebra { detail } => write!(f, "not a Hopf algebra: {detail}"),
            HopfError::NotComoduleAlgebra { detail } => {
                write!(f, "not a comodule algebra: {detail}")
            }
        }
    }
}

impl From<TensorError> for HopfError {
    fn from(e: TensorError) -> HopfError {
        HopfError::Tensor(e)
    }
}

fn expect_type(
    map: &MultilinearMap,
    dom: &[Space],
    cod: &[Space],
    what: &'static str,
) -> Result<(), TensorError> {
    let dom: Vec<Space> = dom.iter().filter(|s| !s.is_unit()).cloned().collect();
    let cod: Vec<Space> = cod.iter().filter(|s| !s.is_unit()).cloned().collect();
    let dom = if dom.is_empty() { vec![Space::unit()] } else { dom };
    let cod = if cod.is_empty() { vec![Space::unit()] } else { cod };
    if map.domain() != dom || map.codomain() != cod {
        return Err(TensorError::TypeMismatch {
            op: what,
            expected: format!("{} -> {}", signature(&dom), signature(&cod)),
            found: map.signature_string(),
        });
    }
    Ok(())
}

/// An algebra `(A, μ, η)` on a based space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    pub space: Space,
    pub mul: MultilinearMap,
    pub unit: MultilinearMap,
}

impl AlgebraData {
    pub fn new(space: Space, mul: MultilinearMap, unit: MultilinearMap) -> Result<Self, HopfError> {
        expect_type(&mul, &[space.clone(), space.clone()], &[space.clone()], "algebra mul")?;
        expect_type(&unit, &[], &[space.clone()], "algebra unit")?;
        Ok(AlgebraData { space, mul, unit })
    }

    /// The ground field as an algebra on a given 1-dimensional space.
    pub fn ground(ctx: &FieldCtx, space: &Space) -> AlgebraData {
        assert_eq!(space.dim(), 1);
        let mul = MultilinearMap::from_fn(
            ctx,
            vec![space.clone(), space.clone()],
            vec![space.clone()],
            |_, _| ctx.one(),
        );
        let unit =
            MultilinearMap::from_fn(ctx, vec![], vec![space.clone()], |_, _| ctx.one());
        AlgebraData {
            space: space.clone(),
            mul,
            unit,
        }
    }
}

/// A coalgebra `(C, Δ, ε)` on a based space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraData {
    pub space: Space,
    pub comul: MultilinearMap,
    pub counit: MultilinearMap,
}

impl CoalgebraData {
    pub fn new(
        space: Space,
        comul: MultilinearMap,
        counit: MultilinearMap,
    ) -> Result<Self, HopfError> {
        expect_type(&comul, &[space.clone()], &[space.clone(), space.clone()], "comul")?;
        expect_type(&counit, &[space.clone()], &[], "counit")?;
        Ok(CoalgebraData {
            space,
            comul,
            counit,
        })
    }
}

/// A bialgebra/Hopf algebra: algebra and coalgebra on the same space, with
/// an optional antipode (absent until solved).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub antipode: Option<MultilinearMap>,
}

impl HopfData {
    pub fn new(
        algebra: AlgebraData,
        coalgebra: CoalgebraData,
        antipode: Option<MultilinearMap>,
    ) -> Result<Self, HopfError> {
        assert_eq!(algebra.space, coalgebra.space, "algebra/coalgebra space");
        if let Some(s) = &antipode {
            expect_type(
                s,
                &[algebra.space.clone()],
                &[algebra.space.clone()],
                "antipode",
            )?;
        }
        Ok(HopfData {
            algebra,
            coalgebra,
            antipode,
        })
    }

    pub fn space(&self) -> &Space {
        &self.algebra.space
    }

    pub fn dim(&self) -> usize {
        self.space().dim()
    }

    pub fn mul(&self) -> &MultilinearMap {
        &self.algebra.mul
    }

    pub fn unit(&self) -> &MultilinearMap {
        &self.algebra.unit
    }

    pub fn comul(&self) -> &MultilinearMap {
        &self.coalgebra.comul
    }

    pub fn counit(&self) -> &MultilinearMap {
        &self.coalgebra.counit
    }

    pub fn antipode(&self) -> &MultilinearMap {
        self.antipode.as_ref().expect("antipode not solved yet")
    }

    /// The regular right comodule `(H, Δ)`.
    pub fn regular_comodule(&self) -> ComoduleData {
        ComoduleData {
            space: self.space().clone(),
            coaction: self.comul().clone(),
        }
    }
}

/// A dual R-matrix `r: H⊗H → k` together with its convolution inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RForm {
    pub form: MultilinearMap,
    pub inverse: MultilinearMap,
}

impl RForm {
    pub fn new(form: MultilinearMap, inverse: MultilinearMap) -> RForm {
        RForm { form, inverse }
    }

    /// Build from the form alone, solving for the convolution inverse on the
    /// tensor-product coalgebra `H⊗H`.
    pub fn solve(
        ctx: &FieldCtx,
        base: &HopfData,
        form: MultilinearMap,
    ) -> Result<RForm, HopfError> {
        let h = base.space().clone();
        expect_type(&form, &[h.clone(), h], &[], "r-form")?;
        let pair = tensor_square_coalgebra(ctx, &base.coalgebra)?;
        let ground = AlgebraData::ground(ctx, &Space::unit());
        let fused = form.reshape(vec![pair.space.clone()], vec![]);
        let inv = convolution_inverse(ctx, &fused, &pair, &ground)?;
        let inverse = inv.reshape(form.domain().to_vec(), vec![]);
        Ok(RForm { form, inverse })
    }
}

/// A right comodule `δ: V → V⊗H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleData {
    pub space: Space,
    pub coaction: MultilinearMap,
}

impl ComoduleData {
    pub fn new(space: Space, coaction: MultilinearMap, base: &HopfData) -> Result<Self, HopfError> {
        expect_type(
            &coaction,
            &[space.clone()],
            &[space.clone(), base.space().clone()],
            "coaction",
        )?;
        Ok(ComoduleData { space, coaction })
    }

    /// The trivial coaction `v ↦ v⊗1` on a given space.
    pub fn trivial(ctx: &FieldCtx, space: &Space, base: &HopfData) -> ComoduleData {
        let id = MultilinearMap::identity(ctx, space);
        let coaction = MultilinearMap::tensor(ctx, &id, base.unit());
        ComoduleData {
            space: space.clone(),
            coaction,
        }
    }
}

/// A right module algebra: an algebra `A` with a right `H`-action `a.h`
/// under which multiplication is equivariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleAlgebraData {
    pub algebra: AlgebraData,
    /// The action `A⊗H → A`.
    pub action: MultilinearMap,
}

impl ModuleAlgebraData {
    pub fn new(
        algebra: AlgebraData,
        action: MultilinearMap,
        base: &HopfData,
    ) -> Result<Self, HopfError> {
        expect_type(
            &action,
            &[algebra.space.clone(), base.space().clone()],
            &[algebra.space.clone()],
            "module-algebra action",
        )?;
        Ok(ModuleAlgebraData { algebra, action })
    }

    pub fn space(&self) -> &Space {
        &self.algebra.space
    }
}

/// A left `A`-module `λ: A⊗M → M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AModuleData {
    pub space: Space,
    pub action: MultilinearMap,
}

impl AModuleData {
    pub fn new(space: Space, action: MultilinearMap, a: &AlgebraData) -> Result<Self, HopfError> {
        expect_type(
            &action,
            &[a.space.clone(), space.clone()],
            &[space.clone()],
            "A-module action",
        )?;
        Ok(AModuleData { space, action })
    }

    /// `A` as a module over itself.
    pub fn regular(a: &AlgebraData) -> AModuleData {
        AModuleData {
            space: a.space.clone(),
            action: a.mul.clone(),
        }
    }
}

/// An algebra that is simultaneously a right comodule, with multiplication
/// and unit colinear (checked by [`check_comodule_algebra`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleAlgebraData {
    pub algebra: AlgebraData,
    pub coaction: MultilinearMap,
}

impl ComoduleAlgebraData {
    pub fn comodule(&self) -> ComoduleData {
        ComoduleData {
            space: self.algebra.space.clone(),
            coaction: self.coaction.clone(),
        }
    }
}

// --- basic checkers ----------------------------------------------------

pub fn check_algebra(ctx: &FieldCtx, a: &AlgebraData) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let id = MultilinearMap::identity(ctx, &a.space);
    let mul_id = MultilinearMap::tensor(ctx, &a.mul, &id);
    let id_mul = MultilinearMap::tensor(ctx, &id, &a.mul);
    let assoc_l = MultilinearMap::compose(ctx, &a.mul, &mul_id)?;
    let assoc_r = MultilinearMap::compose(ctx, &a.mul, &id_mul)?;
    report.push("associativity", MultilinearMap::equality_check(&assoc_l, &assoc_r)?);

    let unit_id = MultilinearMap::tensor(ctx, &a.unit, &id);
    let left = MultilinearMap::compose(ctx, &a.mul, &unit_id)?;
    report.push("unit-left", MultilinearMap::equality_check(&left, &id)?);
    let id_unit = MultilinearMap::tensor(ctx, &id, &a.unit);
    let right = MultilinearMap::compose(ctx, &a.mul, &id_unit)?;
    report.push("unit-right", MultilinearMap::equality_check(&right, &id)?);
    Ok(report)
}

pub fn check_coalgebra(ctx: &FieldCtx, c: &CoalgebraData) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let id = MultilinearMap::identity(ctx, &c.space);
    let comul_id = MultilinearMap::tensor(ctx, &c.comul, &id);
    let id_comul = MultilinearMap::tensor(ctx, &id, &c.comul);
    let l = MultilinearMap::compose(ctx, &comul_id, &c.comul)?;
    let r = MultilinearMap::compose(ctx, &id_comul, &c.comul)?;
    report.push("coassociativity", MultilinearMap::equality_check(&l, &r)?);

    let counit_id = MultilinearMap::tensor(ctx, &c.counit, &id);
    let l = MultilinearMap::compose(ctx, &counit_id, &c.comul)?;
    report.push("counit-left", MultilinearMap::equality_check(&l, &id)?);
    let id_counit = MultilinearMap::tensor(ctx, &id, &c.counit);
    let r = MultilinearMap::compose(ctx, &id_counit, &c.comul)?;
    report.push("counit-right", MultilinearMap::equality_check(&r, &id)?);
    Ok(report)
}

/// Bialgebra compatibility over the ordinary vector-space flip: Δ and ε are
/// algebra maps.
pub fn check_bialgebra(ctx: &FieldCtx, h: &HopfData) -> Result<Report, HopfError> {
    let mut report = Report::new();
    report.merge(check_algebra(ctx, &h.algebra)?);
    report.merge(check_coalgebra(ctx, &h.coalgebra)?);

    let _space = h.space().clone();

    // Δ(ab) = Δ(a)Δ(b) with the flip in the middle.
    let lhs = MultilinearMap::compose(ctx, h.comul(), h.mul())?;
    let comul2 = MultilinearMap::tensor(ctx, h.comul(), h.comul())
        .permute_codomain(ctx, &[0, 2, 1, 3]);
    let mul_mul = MultilinearMap::tensor(ctx, h.mul(), h.mul());
    let rhs = MultilinearMap::compose(ctx, &mul_mul, &comul2)?;
    report.push("comul-multiplicative", MultilinearMap::equality_check(&lhs, &rhs)?);

    // ε(ab) = ε(a)ε(b)
    let lhs = MultilinearMap::compose(ctx, h.counit(), h.mul())?;
    let rhs = MultilinearMap::tensor(ctx, h.counit(), h.counit());
    report.push("counit-multiplicative", MultilinearMap::equality_check(&lhs, &rhs)?);

    // Δ(1) = 1⊗1
    let lhs = MultilinearMap::compose(ctx, h.comul(), h.unit())?;
    let rhs = MultilinearMap::tensor(ctx, h.unit(), h.unit());
    report.push("comul-unit", MultilinearMap::equality_check(&lhs, &rhs)?);

    // ε(1) = 1
    let lhs = MultilinearMap::compose(ctx, h.counit(), h.unit())?;
    let rhs = MultilinearMap::identity(ctx, &Space::unit());
    report.push("counit-unit", MultilinearMap::equality_check(&lhs, &rhs)?);
    Ok(report)
}

/// Both antipode axioms for a candidate antipode.
pub fn check_antipode(
    ctx: &FieldCtx,
    h: &HopfData,
    antipode: &MultilinearMap,
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let id = MultilinearMap::identity(ctx, h.space());
    let conv_unit = convolution_unit(ctx, &h.coalgebra, &h.algebra)?;
    let left = convolution(ctx, antipode, &id, &h.coalgebra, &h.algebra)?;
    report.push("antipode-left", MultilinearMap::equality_check(&left, &conv_unit)?);
    let right = convolution(ctx, &id, antipode, &h.coalgebra, &h.algebra)?;
    report.push("antipode-right", MultilinearMap::equality_check(&right, &conv_unit)?);
    Ok(report)
}

// --- Sweedler powers and convolution ------------------------------------

/// Iterated comultiplication `Δ^(n): C → C^{⊗(n+1)}`; `n = 0` is the
/// identity. Coassociativity makes the association order irrelevant.
pub fn sweedler_power(ctx: &FieldCtx, c: &CoalgebraData, n: usize) -> MultilinearMap {
    let id = MultilinearMap::identity(ctx, &c.space);
    let mut acc = id.clone();
    for k in 0..n {
        // (Δ ⊗ id^{⊗k}) ∘ acc
        let mut step = c.comul.clone();
        for _ in 0..k {
            step = MultilinearMap::tensor(ctx, &step, &id);
        }
        acc = MultilinearMap::compose(ctx, &step, &acc).expect("sweedler power types");
    }
    acc
}

/// Convolution product `f * g = μ_A ∘ (f⊗g) ∘ Δ_C` of maps `C → A`.
pub fn convolution(
    ctx: &FieldCtx,
    f: &MultilinearMap,
    g: &MultilinearMap,
    c: &CoalgebraData,
    a: &AlgebraData,
) -> Result<MultilinearMap, HopfError> {
    expect_type(f, &[c.space.clone()], &[a.space.clone()], "convolution lhs")?;
    expect_type(g, &[c.space.clone()], &[a.space.clone()], "convolution rhs")?;
    let fg = MultilinearMap::tensor(ctx, f, g);
    Ok(MultilinearMap::compose_chain(ctx, &[&a.mul, &fg, &c.comul])?)
}

/// The convolution unit `η_A ∘ ε_C`.
pub fn convolution_unit(
    ctx: &FieldCtx,
    c: &CoalgebraData,
    a: &AlgebraData,
) -> Result<MultilinearMap, HopfError> {
    Ok(MultilinearMap::compose(ctx, &a.unit, &c.counit)?)
}

/// Solve `(f * x) = η∘ε = (x * f)` for `x` by exact linear elimination.
///
/// Convolution inverses are unique when they exist, so the combined system
/// is either inconsistent (not invertible, with the defect reported) or has
/// exactly one solution.
pub fn convolution_inverse(
    ctx: &FieldCtx,
    f: &MultilinearMap,
    c: &CoalgebraData,
    a: &AlgebraData,
) -> Result<MultilinearMap, HopfError> {
    expect_type(f, &[c.space.clone()], &[a.space.clone()], "convolution_inverse")?;
    let dim_c = c.space.dim();
    let dim_a = a.space.dim();
    let unknowns = dim_a * dim_c;
    let eqs = 2 * unknowns;

    // Matrix of x ↦ (x*f, f*x), built by probing with elementary maps.
    let mut matrix = vec![vec![ctx.zero(); unknowns]; eqs];
    for p in 0..dim_a {
        for q in 0..dim_c {
            let col = p * dim_c + q;
            let mut probe =
                MultilinearMap::zero(ctx, vec![c.space.clone()], vec![a.space.clone()]);
            probe.set_entry(&[p], &[q], ctx.one());
            let left = convolution(ctx, &probe, f, c, a)?;
            let right = convolution(ctx, f, &probe, c, a)?;
            for row in 0..unknowns {
                matrix[row][col] = left.entry_flat(row / dim_c, row % dim_c).clone();
                matrix[unknowns + row][col] = right.entry_flat(row / dim_c, row % dim_c).clone();
            }
        }
    }
    let unit = convolution_unit(ctx, c, a)?;
    let mut rhs = Vec::with_capacity(eqs);
    for _ in 0..2 {
        for row in 0..unknowns {
            rhs.push(unit.entry_flat(row / dim_c, row % dim_c).clone());
        }
    }
    match linalg::solve(ctx, &matrix, &rhs) {
        LinSolve::Unique(sol) => {
            let mut x = MultilinearMap::zero(ctx, vec![c.space.clone()], vec![a.space.clone()]);
            for p in 0..dim_a {
                for q in 0..dim_c {
                    x.set_entry(&[p], &[q], sol[p * dim_c + q].clone());
                }
            }
            Ok(x)
        }
        LinSolve::Underdetermined { rank, .. } => Err(HopfError::NotInvertible {
            unknowns,
            rank,
            inconsistent_row: None,
        }),
        LinSolve::Inconsistent { row } => Err(HopfError::NotInvertible {
            unknowns,
            rank: 0,
            inconsistent_row: Some(row),
        }),
    }
}

/// Antipode as the convolution inverse of the identity, with both antipode
/// axioms re-verified on the result.
pub fn solve_antipode(ctx: &FieldCtx, h: &HopfData) -> Result<MultilinearMap, HopfError> {
    let id = MultilinearMap::identity(ctx, h.space());
    let s = convolution_inverse(ctx, &id, &h.coalgebra, &h.algebra).map_err(|e| match e {
        HopfError::NotInvertible {
            unknowns,
            rank,
            inconsistent_row,
        } => HopfError::NotAHopfAlgebra {
            detail: format!(
                "identity is not convolution invertible (rank {rank}/{unknowns}{})",
                match inconsistent_row {
                    Some(r) => format!(", inconsistent at {r}"),
                    None => String::new(),
                }
            ),
        },
        other => other,
    })?;
    let report = check_antipode(ctx, h, &s)?;
    if !report.passed() {
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        return Err(HopfError::NotAHopfAlgebra {
            detail: format!("solved antipode fails {:?}", failed),
        });
    }
    Ok(s)
}

// --- coquasitriangular structure ----------------------------------------

/// The tensor-square coalgebra `H⊗H` with fused space, used for the
/// convolution calculus of r-forms.
pub fn tensor_square_coalgebra(
    ctx: &FieldCtx,
    c: &CoalgebraData,
) -> Result<CoalgebraData, HopfError> {
    let h = c.space.clone();
    let pair_space = Space::product(&[h.clone(), h.clone()]);
    let four = vec![h.clone(), h.clone(), h.clone(), h.clone()];
    let comul2 = MultilinearMap::tensor(ctx, &c.comul, &c.comul);
    let flip = MultilinearMap::permutation(ctx, &four, &[0, 2, 1, 3]);
    let comul = MultilinearMap::compose(ctx, &flip, &comul2)?
        .reshape(vec![pair_space.clone()], vec![pair_space.clone(), pair_space.clone()]);
    let counit = MultilinearMap::tensor(ctx, &c.counit, &c.counit)
        .reshape(vec![pair_space.clone()], vec![]);
    Ok(CoalgebraData {
        space: pair_space,
        comul,
        counit,
    })
}

/// All pinned dual-quasitriangularity identities, one check per axiom.
pub fn check_rform(ctx: &FieldCtx, h: &HopfData, r: &RForm) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let sp = h.space().clone();
    let id = MultilinearMap::identity(ctx, &sp);
    let four = vec![sp.clone(), sp.clone(), sp.clone(), sp.clone()];

    // r(ab|c) = r(a|c1) r(b|c2)
    let mul_id = MultilinearMap::tensor(ctx, h.mul(), &id);
    let lhs = MultilinearMap::compose(ctx, &r.form, &mul_id)?;
    let id_id_comul = MultilinearMap::tensor_all(ctx, &[&id, &id, h.comul()]);
    let perm = MultilinearMap::permutation(ctx, &four, &[0, 2, 1, 3]);
    let rr = MultilinearMap::tensor(ctx, &r.form, &r.form);
    let rhs = MultilinearMap::compose_chain(ctx, &[&rr, &perm, &id_id_comul])?;
    report.push("rform-mul-first-arg", MultilinearMap::equality_check(&lhs, &rhs)?);

    // r(a|bc) = r(a1|c) r(a2|b)
    let id_mul = MultilinearMap::tensor(ctx, &id, h.mul());
    let lhs = MultilinearMap::compose(ctx, &r.form, &id_mul)?;
    let comul_id_id = MultilinearMap::tensor_all(ctx, &[h.comul(), &id, &id]);
    let perm = MultilinearMap::permutation(ctx, &four, &[0, 3, 1, 2]);
    let rhs = MultilinearMap::compose_chain(ctx, &[&rr, &perm, &comul_id_id])?;
    report.push("rform-mul-second-arg", MultilinearMap::equality_check(&lhs, &rhs)?);

    // b1 a1 r(a2|b2) = r(a1|b1) a2 b2
    let comul2 = MultilinearMap::tensor(ctx, h.comul(), h.comul());
    let perm_l = MultilinearMap::permutation(ctx, &four, &[2, 0, 1, 3]);
    let mul_r = MultilinearMap::tensor(ctx, h.mul(), &r.form);
    let lhs = MultilinearMap::compose_chain(ctx, &[&mul_r, &perm_l, &comul2])?;
    let perm_r = MultilinearMap::permutation(ctx, &four, &[0, 2, 1, 3]);
    let r_mul = MultilinearMap::tensor(ctx, &r.form, h.mul());
    let rhs = MultilinearMap::compose_chain(ctx, &[&r_mul, &perm_r, &comul2])?;
    report.push(
        "rform-quasi-commutativity",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );

    // r(1|a) = ε(a) = r(a|1)
    let unit_id = MultilinearMap::tensor(ctx, h.unit(), &id);
    let lhs = MultilinearMap::compose(ctx, &r.form, &unit_id)?;
    report.push("rform-unit-first", MultilinearMap::equality_check(&lhs, h.counit())?);
    let id_unit = MultilinearMap::tensor(ctx, &id, h.unit());
    let lhs = MultilinearMap::compose(ctx, &r.form, &id_unit)?;
    report.push("rform-unit-second", MultilinearMap::equality_check(&lhs, h.counit())?);

    // convolution inverse on H⊗H
    let pair = tensor_square_coalgebra(ctx, &h.coalgebra)?;
    let ground = AlgebraData::ground(ctx, &Space::unit());
    let fused_r = r.form.reshape(vec![pair.space.clone()], vec![]);
    let fused_rbar = r.inverse.reshape(vec![pair.space.clone()], vec![]);
    let conv_unit = convolution_unit(ctx, &pair, &ground)?;
    let left = convolution(ctx, &fused_r, &fused_rbar, &pair, &ground)?;
    report.push(
        "rform-conv-inverse-left",
        MultilinearMap::equality_check(&left, &conv_unit)?,
    );
    let right = convolution(ctx, &fused_rbar, &fused_r, &pair, &ground)?;
    report.push(
        "rform-conv-inverse-right",
        MultilinearMap::equality_check(&right, &conv_unit)?,
    );
    Ok(report)
}

/// The braiding `c_{V,W}(v⊗w) = w₀ ⊗ v₀ · r(v₁|w₁)` on right comodules.
pub fn braiding_of_comodules(
    ctx: &FieldCtx,
    v: &ComoduleData,
    w: &ComoduleData,
    r: &RForm,
) -> Result<MultilinearMap, HopfError> {
    braiding_with(ctx, v, w, &r.form)
}

/// The inverse braiding `c_{V,W}^{-1}: W⊗V → V⊗W`, built from the
/// convolution inverse of r: `c^{-1}(w⊗v) = v₀ ⊗ w₀ · r̄(v₁|w₁)`.
pub fn braiding_inverse(
    ctx: &FieldCtx,
    v: &ComoduleData,
    w: &ComoduleData,
    r: &RForm,
) -> Result<MultilinearMap, HopfError> {
    // Same shape as the braiding with the arguments swapped and r̄ in place
    // of r, paired as (v1, w1).
    // [w0, hw, v0, hv] -> [v0, w0, hv, hw]
    let both = MultilinearMap::tensor(ctx, &w.coaction, &v.coaction)
        .permute_codomain(ctx, &[2, 0, 3, 1]);
    let idv = MultilinearMap::identity(ctx, &v.space);
    let idw = MultilinearMap::identity(ctx, &w.space);
    let tail = MultilinearMap::tensor_all(ctx, &[&idv, &idw, &r.inverse]);
    Ok(MultilinearMap::compose(ctx, &tail, &both)?)
}

fn braiding_with(
    ctx: &FieldCtx,
    v: &ComoduleData,
    w: &ComoduleData,
    pairing: &MultilinearMap,
) -> Result<MultilinearMap, HopfError> {
    // [v0, hv, w0, hw] -> [w0, v0, hv, hw]
    let both = MultilinearMap::tensor(ctx, &v.coaction, &w.coaction)
        .permute_codomain(ctx, &[2, 0, 1, 3]);
    let idv = MultilinearMap::identity(ctx, &v.space);
    let idw = MultilinearMap::identity(ctx, &w.space);
    let tail = MultilinearMap::tensor_all(ctx, &[&idw, &idv, pairing]);
    Ok(MultilinearMap::compose(ctx, &tail, &both)?)
}

/// Coassociativity and counit law for a right coaction.
pub fn check_comodule(
    ctx: &FieldCtx,
    v: &ComoduleData,
    base: &HopfData,
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let idv = MultilinearMap::identity(ctx, &v.space);
    let idh = MultilinearMap::identity(ctx, base.space());
    let lhs = MultilinearMap::compose(
        ctx,
        &MultilinearMap::tensor(ctx, &v.coaction, &idh),
        &v.coaction,
    )?;
    let rhs = MultilinearMap::compose(
        ctx,
        &MultilinearMap::tensor(ctx, &idv, base.comul()),
        &v.coaction,
    )?;
    report.push("coaction-coassoc", MultilinearMap::equality_check(&lhs, &rhs)?);
    let counit_side = MultilinearMap::compose(
        ctx,
        &MultilinearMap::tensor(ctx, &idv, base.counit()),
        &v.coaction,
    )?;
    report.push("coaction-counit", MultilinearMap::equality_check(&counit_side, &idv)?);
    Ok(report)
}

/// Left module axioms for `λ: A⊗M → M`.
pub fn check_amodule(ctx: &FieldCtx, m: &AModuleData, a: &AlgebraData) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let idm = MultilinearMap::identity(ctx, &m.space);
    let ida = MultilinearMap::identity(ctx, &a.space);
    let lhs = MultilinearMap::compose(
        ctx,
        &m.action,
        &MultilinearMap::tensor(ctx, &a.mul, &idm),
    )?;
    let rhs = MultilinearMap::compose(
        ctx,
        &m.action,
        &MultilinearMap::tensor(ctx, &ida, &m.action),
    )?;
    report.push("action-assoc", MultilinearMap::equality_check(&lhs, &rhs)?);
    let unital = MultilinearMap::compose(
        ctx,
        &m.action,
        &MultilinearMap::tensor(ctx, &a.unit, &idm),
    )?;
    report.push("action-unit", MultilinearMap::equality_check(&unital, &idm)?);
    Ok(report)
}

/// Right-action and module-algebra laws for `a.h`.
pub fn check_module_algebra(
    ctx: &FieldCtx,
    ma: &ModuleAlgebraData,
    base: &HopfData,
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let a_sp = ma.space().clone();
    let h_sp = base.space().clone();
    let ida = MultilinearMap::identity(ctx, &a_sp);
    let idh = MultilinearMap::identity(ctx, &h_sp);

    // a.(gh) = (a.g).h
    let lhs = MultilinearMap::compose(
        ctx,
        &ma.action,
        &MultilinearMap::tensor(ctx, &ida, base.mul()),
    )?;
    let rhs = MultilinearMap::compose(
        ctx,
        &ma.action,
        &MultilinearMap::tensor(ctx, &ma.action, &idh),
    )?;
    report.push("haction-assoc", MultilinearMap::equality_check(&lhs, &rhs)?);

    // a.1 = a
    let unital = MultilinearMap::compose(
        ctx,
        &ma.action,
        &MultilinearMap::tensor(ctx, &ida, base.unit()),
    )?;
    report.push("haction-unit", MultilinearMap::equality_check(&unital, &ida)?);

    // (ab).h = (a.h1)(b.h2)
    let lhs = MultilinearMap::compose(
        ctx,
        &ma.action,
        &MultilinearMap::tensor(ctx, &ma.algebra.mul, &idh),
    )?;
    let spread = MultilinearMap::tensor_all(ctx, &[&ida, &ida, base.comul()])
        .permute_codomain(ctx, &[0, 2, 1, 3]);
    let act_act = MultilinearMap::tensor(ctx, &ma.action, &ma.action);
    let paired = MultilinearMap::compose(ctx, &act_act, &spread)?;
    let rhs = MultilinearMap::compose(ctx, &ma.algebra.mul, &paired)?;
    report.push(
        "haction-multiplicative",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );

    // 1.h = ε(h) 1
    let lhs = MultilinearMap::compose(
        ctx,
        &ma.action,
        &MultilinearMap::tensor(ctx, &ma.algebra.unit, &idh),
    )?;
    let rhs = MultilinearMap::compose(ctx, &ma.algebra.unit, base.counit())?;
    report.push("haction-on-unit", MultilinearMap::equality_check(&lhs, &rhs)?);
    Ok(report)
}

/// Comodule + comodule-algebra laws: the coaction is an algebra map.
pub fn check_comodule_algebra(
    ctx: &FieldCtx,
    ca: &ComoduleAlgebraData,
    base: &HopfData,
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    report.merge(check_comodule(ctx, &ca.comodule(), base)?);
    let _a_sp = ca.algebra.space.clone();
    let _h_sp = base.space().clone();

    // δ(rs) = r0 s0 ⊗ r1 s1
    let lhs = MultilinearMap::compose(ctx, &ca.coaction, &ca.algebra.mul)?;
    let both = MultilinearMap::tensor(ctx, &ca.coaction, &ca.coaction)
        .permute_codomain(ctx, &[0, 2, 1, 3]);
    let mul_mul = MultilinearMap::tensor(ctx, &ca.algebra.mul, base.mul());
    let rhs = MultilinearMap::compose(ctx, &mul_mul, &both)?;
    report.push("coaction-multiplicative", MultilinearMap::equality_check(&lhs, &rhs)?);

    // δ(1) = 1⊗1
    let lhs = MultilinearMap::compose(ctx, &ca.coaction, &ca.algebra.unit)?;
    let rhs = MultilinearMap::tensor(ctx, &ca.algebra.unit, base.unit());
    report.push("coaction-on-unit", MultilinearMap::equality_check(&lhs, &rhs)?);
    Ok(report)
}

/// The tensor product of two right comodules, with fused carrier space.
pub fn tensor_comodule(
    ctx: &FieldCtx,
    v: &ComoduleData,
    w: &ComoduleData,
    base: &HopfData,
) -> Result<ComoduleData, HopfError> {
    let h = base.space().clone();
    let product = Space::product(&[v.space.clone(), w.space.clone()]);
    let both = MultilinearMap::tensor(ctx, &v.coaction, &w.coaction)
        .permute_codomain(ctx, &[0, 2, 1, 3]);
    let idv = MultilinearMap::identity(ctx, &v.space);
    let idw = MultilinearMap::identity(ctx, &w.space);
    let tail = MultilinearMap::tensor_all(ctx, &[&idv, &idw, base.mul()]);
    let coaction = MultilinearMap::compose(ctx, &tail, &both)?
        .reshape(vec![product.clone()], vec![product.clone(), h]);
    Ok(ComoduleData {
        space: product,
        coaction,
    })
}

/// Naturality of the braiding in both arguments against a list of comodule
/// morphisms, plus both hexagon identities and two-sided invertibility on
/// the given probes.
pub fn check_braiding_properties(
    ctx: &FieldCtx,
    base: &HopfData,
    r: &RForm,
    probes: &[ComoduleData],
    morphisms: &[(String, usize, usize, MultilinearMap)],
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    for (i, v) in probes.iter().enumerate() {
        for (j, w) in probes.iter().enumerate() {
            let c = braiding_of_comodules(ctx, v, w, r)?;
            let c_inv = braiding_inverse(ctx, v, w, r)?;
            let id_vw = MultilinearMap::identity_on(ctx, c.domain());
            let id_wv = MultilinearMap::identity_on(ctx, c.codomain());
            let round = MultilinearMap::compose(ctx, &c_inv, &c)?;
            report.push(
                format!("braiding-invertible-left/{i}-{j}"),
                MultilinearMap::equality_check(&round, &id_vw)?,
            );
            let round = MultilinearMap::compose(ctx, &c, &c_inv)?;
            report.push(
                format!("braiding-invertible-right/{i}-{j}"),
                MultilinearMap::equality_check(&round, &id_wv)?,
            );
        }
    }

    // Hexagons: c_{U,V⊗W} = (V⊗c_{U,W}) (c_{U,V}⊗W) and
    //           c_{U⊗V,W} = (c_{U,W}⊗V) (U⊗c_{V,W}).
    for (i, u) in probes.iter().enumerate() {
        for (j, v) in probes.iter().enumerate() {
            for (k, w) in probes.iter().enumerate() {
                let vw = tensor_comodule(ctx, v, w, base)?;
                let lhs = braiding_of_comodules(ctx, u, &vw, r)?
                    .reshape(
                        vec![u.space.clone(), v.space.clone(), w.space.clone()],
                        vec![v.space.clone(), w.space.clone(), u.space.clone()],
                    );
                let cuv = braiding_of_comodules(ctx, u, v, r)?;
                let cuw = braiding_of_comodules(ctx, u, w, r)?;
                let idv = MultilinearMap::identity(ctx, &v.space);
                let idw = MultilinearMap::identity(ctx, &w.space);
                let first = MultilinearMap::tensor(ctx, &cuv, &idw);
                let second = MultilinearMap::tensor(ctx, &idv, &cuw);
                let rhs = MultilinearMap::compose(ctx, &second, &first)?;
                report.push(
                    format!("hexagon-right/{i}-{j}-{k}"),
                    MultilinearMap::equality_check(&lhs, &rhs)?,
                );

                let uv = tensor_comodule(ctx, u, v, base)?;
                let lhs = braiding_of_comodules(ctx, &uv, w, r)?
                    .reshape(
                        vec![u.space.clone(), v.space.clone(), w.space.clone()],
                        vec![w.space.clone(), u.space.clone(), v.space.clone()],
                    );
                let cvw = braiding_of_comodules(ctx, v, w, r)?;
                let idu = MultilinearMap::identity(ctx, &u.space);
                let first = MultilinearMap::tensor(ctx, &idu, &cvw);
                let second = MultilinearMap::tensor(ctx, &cuw, &idv);
                let rhs = MultilinearMap::compose(ctx, &second, &first)?;
                report.push(
                    format!("hexagon-left/{i}-{j}-{k}"),
                    MultilinearMap::equality_check(&lhs, &rhs)?,
                );
            }
        }
    }

    // Naturality: c_{V',W} ∘ (f⊗W) = (W⊗f) ∘ c_{V,W} for f: V → V',
    // and likewise in the second argument.
    for (name, from, to, f) in morphisms {
        let v = &probes[*from];
        let v2 = &probes[*to];
        for (k, w) in probes.iter().enumerate() {
            let idw = MultilinearMap::identity(ctx, &w.space);
            let c_before = braiding_of_comodules(ctx, v, w, r)?;
            let c_after = braiding_of_comodules(ctx, v2, w, r)?;
            let lhs = MultilinearMap::compose(
                ctx,
                &c_after,
                &MultilinearMap::tensor(ctx, f, &idw),
            )?;
            let rhs = MultilinearMap::compose(
                ctx,
                &MultilinearMap::tensor(ctx, &idw, f),
                &c_before,
            )?;
            report.push(
                format!("braiding-natural-first/{name}-{k}"),
                MultilinearMap::equality_check(&lhs, &rhs)?,
            );

            let c_before = braiding_of_comodules(ctx, w, v, r)?;
            let c_after = braiding_of_comodules(ctx, w, v2, r)?;
            let lhs = MultilinearMap::compose(
                ctx,
                &c_after,
                &MultilinearMap::tensor(ctx, &idw, f),
            )?;
            let rhs = MultilinearMap::compose(
                ctx,
                &MultilinearMap::tensor(ctx, f, &idw),
                &c_before,
            )?;
            report.push(
                format!("braiding-natural-second/{name}-{k}"),
                MultilinearMap::equality_check(&lhs, &rhs)?,
            );
        }
    }
    Ok(report)
}

/// `Δa = a⊗a` and `ε(a) = 1` for an element given by coefficients.
pub fn is_grouplike(ctx: &FieldCtx, base: &HopfData, coeffs: &[Scalar]) -> bool {
    let dim = base.dim();
    assert_eq!(coeffs.len(), dim);
    // ε(a) = 1
    let mut eps = ctx.zero();
    for (i, c) in coeffs.iter().enumerate() {
        eps = ctx.add(&eps, &ctx.mul(c, base.counit().entry(&[], &[i])));
    }
    if !eps.is_one() {
        return false;
    }
    // Δa = a⊗a entrywise
    for j in 0..dim {
        for k in 0..dim {
            let mut lhs = ctx.zero();
            for (i, c) in coeffs.iter().enumerate() {
                lhs = ctx.add(&lhs, &ctx.mul(c, base.comul().entry(&[j, k], &[i])));
            }
            let rhs = ctx.mul(&coeffs[j], &coeffs[k]);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckStatus;

    /// k(Z/2) with basis {1, g}, built by hand for the unit tests; the zoo
    /// has the general builders.
    fn kz2(ctx: &FieldCtx) -> HopfData {
        let h = Space::new("H", vec!["1".into(), "g".into()]);
        let mut mul = MultilinearMap::zero(
            ctx,
            vec![h.clone(), h.clone()],
            vec![h.clone()],
        );
        for i in 0..2 {
            for j in 0..2 {
                mul.set_entry(&[(i + j) % 2], &[i, j], ctx.one());
            }
        }
        let mut unit = MultilinearMap::zero(ctx, vec![], vec![h.clone()]);
        unit.set_entry(&[0], &[0], ctx.one());
        let mut comul = MultilinearMap::zero(
            ctx,
            vec![h.clone()],
            vec![h.clone(), h.clone()],
        );
        for i in 0..2 {
            comul.set_entry(&[i, i], &[i], ctx.one());
        }
        let mut counit = MultilinearMap::zero(ctx, vec![h.clone()], vec![]);
        counit.set_entry(&[0], &[0], ctx.one());
        counit.set_entry(&[0], &[1], ctx.one());
        let algebra = AlgebraData::new(h.clone(), mul, unit).unwrap();
        let coalgebra = CoalgebraData::new(h, comul, counit).unwrap();
        HopfData::new(algebra, coalgebra, None).unwrap()
    }

    #[test]
    fn group_algebra_passes_bialgebra_checks() {
        let ctx = FieldCtx::rationals();
        let h = kz2(&ctx);
        assert!(check_bialgebra(&ctx, &h).unwrap().passed());
    }

    #[test]
    fn corrupted_comul_fails_counit_axiom_with_witness() {
        let ctx = FieldCtx::rationals();
        let mut h = kz2(&ctx);
        // Corrupt Δ(g) to g⊗1: (ε⊗id)Δ(g) = 1 ≠ g.
        let mut comul = h.comul().clone();
        comul.set_entry(&[1, 1], &[1], ctx.zero());
        comul.set_entry(&[1, 0], &[1], ctx.one());
        h.coalgebra.comul = comul;
        let report = check_coalgebra(&ctx, &h.coalgebra).unwrap();
        assert!(!report.passed());
        // (ε⊗id)Δ(g) = 1 ≠ g
        let fail = report.find("counit-left").unwrap();
        match &fail.status {
            CheckStatus::Fail(w) => assert_eq!(w.in_index, alloc::vec![1], "witness at g"),
            CheckStatus::Pass => panic!("counit-left should fail"),
        }
    }

    #[test]
    fn sweedler_power_zero_is_identity_and_grouplikes_are_diagonal() {
        let ctx = FieldCtx::rationals();
        let h = kz2(&ctx);
        let p0 = sweedler_power(&ctx, &h.coalgebra, 0);
        assert_eq!(p0, MultilinearMap::identity(&ctx, h.space()));
        let p2 = sweedler_power(&ctx, &h.coalgebra, 2);
        // grouplike g ↦ g⊗g⊗g
        assert!(p2.entry(&[1, 1, 1], &[1]).is_one());
        assert!(p2.entry(&[1, 1, 0], &[1]).is_zero());
    }

    #[test]
    fn sweedler_power_association_independent() {
        let ctx = FieldCtx::rationals();
        let h = kz2(&ctx);
        let id = MultilinearMap::identity(&ctx, h.space());
        for n in 1..=3usize {
            let prev = sweedler_power(&ctx, &h.coalgebra, n - 1);
            // (Δ⊗id^{⊗(n-1)})∘Δ^(n-1) vs (id^{⊗(n-1)}⊗Δ)∘Δ^(n-1)
            let mut left = h.comul().clone();
            let mut right = h.comul().clone();
            for _ in 0..n - 1 {
                left = MultilinearMap::tensor(&ctx, &left, &id);
                right = MultilinearMap::tensor(&ctx, &id, &right);
            }
            let l = MultilinearMap::compose(&ctx, &left, &prev).unwrap();
            let r = MultilinearMap::compose(&ctx, &right, &prev).unwrap();
            assert_eq!(l, r, "association at n = {n}");
            assert_eq!(l, sweedler_power(&ctx, &h.coalgebra, n));
        }
    }

    #[test]
    fn antipode_of_group_algebra_is_inversion() {
        let ctx = FieldCtx::rationals();
        let h = kz2(&ctx);
        let s = solve_antipode(&ctx, &h).unwrap();
        // On Z/2 inversion is the identity.
        assert_eq!(s, MultilinearMap::identity(&ctx, h.space()));
    }

    #[test]
    fn convolution_unit_is_neutral() {
        let ctx = FieldCtx::rationals();
        let h = kz2(&ctx);
        let e = convolution_unit(&ctx, &h.coalgebra, &h.algebra).unwrap();
        let id = MultilinearMap::identity(&ctx, h.space());
        let conv = convolution(&ctx, &id, &e, &h.coalgebra, &h.algebra).unwrap();
        assert_eq!(conv, id);
        let conv = convolution(&ctx, &e, &id, &h.coalgebra, &h.algebra).unwrap();
        assert_eq!(conv, id);
    }

    #[test]
    fn map_killing_unit_is_not_invertible() {
        let ctx = FieldCtx::rationals();
        let h = kz2(&ctx);
        // f with f(1) = 0 can have no convolution inverse.
        let mut f = MultilinearMap::zero(
            &ctx,
            vec![h.space().clone()],
            vec![h.space().clone()],
        );
        f.set_entry(&[1], &[1], ctx.one());
        let err = convolution_inverse(&ctx, &f, &h.coalgebra, &h.algebra).unwrap_err();
        assert!(matches!(err, HopfError::NotInvertible { .. }));
    }

    #[test]
    fn sign_rform_passes_and_scaled_one_fails() {
        let ctx = FieldCtx::rationals();
        let h = kz2(&ctx);
        let sp = h.space().clone();
        let mk_form = |val: i64| {
            let mut r = MultilinearMap::zero(&ctx, vec![sp.clone(), sp.clone()], vec![]);
            r.set_entry(&[], &[0, 0], ctx.one());
            r.set_entry(&[], &[0, 1], ctx.one());
            r.set_entry(&[], &[1, 0], ctx.one());
            r.set_entry(&[], &[1, 1], ctx.from_int(val));
            r
        };
        let sign = RForm::solve(&ctx, &h, mk_form(-1)).unwrap();
        assert!(check_rform(&ctx, &h, &sign).unwrap().passed());

        // r(g|g) = 2 stays quasi-commutative (the algebra is commutative)
        // but breaks the hexagon laws: r(g|g·g) = r(g|1) = 1 ≠ 4.
        let bad = RForm::solve(&ctx, &h, mk_form(2)).unwrap();
        let report = check_rform(&ctx, &h, &bad).unwrap();
        assert!(report.find("rform-quasi-commutativity").unwrap().status.passed());
        assert!(!report.find("rform-mul-first-arg").unwrap().status.passed());
        assert!(!report.passed());
    }

    #[test]
    fn trivial_rform_on_cocommutative_base_passes() {
        let ctx = FieldCtx::rationals();
        let h = kz2(&ctx);
        let eps2 = MultilinearMap::tensor(&ctx, h.counit(), h.counit());
        let r = RForm::solve(&ctx, &h, eps2).unwrap();
        assert!(check_rform(&ctx, &h, &r).unwrap().passed());
    }

    #[test]
    fn braiding_on_sign_comodules() {
        let ctx = FieldCtx::rationals();
        let h = kz2(&ctx);
        let sp = h.space().clone();
        let mut form = MultilinearMap::zero(&ctx, vec![sp.clone(), sp.clone()], vec![]);
        form.set_entry(&[], &[0, 0], ctx.one());
        form.set_entry(&[], &[0, 1], ctx.one());
        form.set_entry(&[], &[1, 0], ctx.one());
        form.set_entry(&[], &[1, 1], ctx.from_int(-1));
        let r = RForm::solve(&ctx, &h, form).unwrap();

        // Sign comodule: δv = v⊗g.
        let v_sp = Space::new("V", alloc::vec!["v".into()]);
        let mut coaction =
            MultilinearMap::zero(&ctx, vec![v_sp.clone()], vec![v_sp.clone(), sp.clone()]);
        coaction.set_entry(&[0, 1], &[0], ctx.one());
        let v = ComoduleData::new(v_sp, coaction, &h).unwrap();
        let c = braiding_of_comodules(&ctx, &v, &v, &r).unwrap();
        // c(v⊗v) = -v⊗v
        assert_eq!(*c.entry(&[0, 0], &[0, 0]), ctx.from_int(-1));

        // Trivial comodule gives plain transposition.
        let t_sp = Space::new("T", alloc::vec!["t".into(), "u".into()]);
        let t = ComoduleData::trivial(&ctx, &t_sp, &h);
        let c = braiding_of_comodules(&ctx, &t, &v, &r).unwrap();
        let flip = MultilinearMap::transposition(&ctx, &t.space, &v.space);
        assert_eq!(c, flip);

        // c ∘ c^{-1} = id on the regular comodule.
        let reg = h.regular_comodule();
        let c = braiding_of_comodules(&ctx, &reg, &reg, &r).unwrap();
        let ci = braiding_inverse(&ctx, &reg, &reg, &r).unwrap();
        let round = MultilinearMap::compose(&ctx, &c, &ci).unwrap();
        assert_eq!(round, MultilinearMap::identity_on(&ctx, c.codomain()));
    }

    #[test]
    fn regular_comodule_and_trivial_module_algebra_pass() {
        let ctx = FieldCtx::rationals();
        let h = kz2(&ctx);
        assert!(check_comodule(&ctx, &h.regular_comodule(), &h).unwrap().passed());

        // A = k with a.h = ε(h) a.
        let k_sp = Space::new("A", alloc::vec!["u".into()]);
        let a = AlgebraData::ground(&ctx, &k_sp);
        let idk = MultilinearMap::identity(&ctx, &k_sp);
        let action = MultilinearMap::tensor(&ctx, &idk, h.counit());
        let ma = ModuleAlgebraData::new(a, action, &h).unwrap();
        assert!(check_module_algebra(&ctx, &ma, &h).unwrap().passed());
    }
}
