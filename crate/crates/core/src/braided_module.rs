//! Module braidings on the module category of a module algebra.
//!
//! The comodule category of `H̄` acts on left `A`-modules by
//! `V ▷ M = V⊗M` with `a(v⊗m) = v₀⊗(a.v₁)m`. A braiding on that module
//! category can be presented two ways, and this module keeps both with
//! converters in each direction:
//!
//! * category level: a convolution-invertible [`KMap`] `K: H̄ → A`, acting
//!   as `e(v⊗m) = v₀ ⊗ K(v₁)m`;
//! * object level: an action `λ: H⊗M → M` of the transmuted Hopf algebra,
//!   acting as `e(v⊗m) = v₀ ⊗ λ(v₁⊗m)`.
//!
//! Reflective structures are K-maps satisfying the three compatibility
//! equations checked by [`check_reflective_structure`]; the two braiding
//! axioms themselves are checked componentwise on a finite probe set by
//! [`check_module_braiding`], with the crossings bound to the braiding `c`
//! of the comodule category as in the expansion that derives those
//! equations.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hopf::{
    braiding_of_comodules, convolution, convolution_inverse, convolution_unit, tensor_comodule,
    AModuleData, AlgebraData, ComoduleData, HopfData, HopfError, ModuleAlgebraData, RForm,
};
use crate::report::{CheckStatus, Report, Witness};
use crate::scalar::FieldCtx;
use crate::tensor::{MultilinearMap, Space, TensorError};
use crate::transmutation::TransmutationData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidedError {
    Hopf(HopfError),
    Tensor(TensorError),
    /// A K-map failing its constructor invariants (unit or invertibility).
    InvalidKMap { detail: String },
    /// A braiding component that is not of the natural form `v₀⊗λ(v₁⊗m)`.
    ReconstructionMismatch { witness: Witness },
}

impl fmt::Display for BraidedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidedError::Hopf(e) => write!(f, "{e}"),
            BraidedError::Tensor(e) => write!(f, "{e}"),
            BraidedError::InvalidKMap { detail } => write!(f, "invalid K-map: {detail}"),
            BraidedError::ReconstructionMismatch { witness } => {
                write!(f, "braiding is not of the natural form ({witness})")
            }
        }
    }
}

impl From<HopfError> for BraidedError {
    fn from(e: HopfError) -> BraidedError {
        BraidedError::Hopf(e)
    }
}

impl From<TensorError> for BraidedError {
    fn from(e: TensorError) -> BraidedError {
        BraidedError::Tensor(e)
    }
}

/// A convolution-invertible map `K: H̄ → A` with `K(1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMap {
    pub map: MultilinearMap,
    pub inverse: MultilinearMap,
}

impl KMap {
    /// Validate `K(1) = 1` and solve for the convolution inverse.
    pub fn solve(
        ctx: &FieldCtx,
        map: MultilinearMap,
        base: &HopfData,
        target: &AlgebraData,
    ) -> Result<KMap, BraidedError> {
        let on_unit = MultilinearMap::compose(ctx, &map, base.unit()).map_err(HopfError::from)?;
        if MultilinearMap::maps_equal(&on_unit, &target.unit)?.is_some() {
            return Err(BraidedError::InvalidKMap {
                detail: "K(1) != 1".into(),
            });
        }
        let inverse =
            convolution_inverse(ctx, &map, &base.coalgebra, target).map_err(|e| match e {
                HopfError::NotInvertible { rank, unknowns, .. } => BraidedError::InvalidKMap {
                    detail: format!("not convolution invertible (rank {rank}/{unknowns})"),
                },
                other => BraidedError::Hopf(other),
            })?;
        Ok(KMap { map, inverse })
    }

    /// The trivial K-map `η∘ε`.
    pub fn trivial(
        ctx: &FieldCtx,
        base: &HopfData,
        target: &AlgebraData,
    ) -> Result<KMap, BraidedError> {
        let unit = convolution_unit(ctx, &base.coalgebra, target)?;
        KMap::solve(ctx, unit, base, target)
    }
}

/// The action of a comodule on a module: `V ▷ M = V⊗M` with
/// `a(v⊗m) = v₀ ⊗ (a.v₁)m`, returned as a module on the fused space.
pub fn act_on_module(
    ctx: &FieldCtx,
    v: &ComoduleData,
    m: &AModuleData,
    a: &ModuleAlgebraData,
) -> Result<AModuleData, BraidedError> {
    let a_sp = a.space().clone();
    let product = Space::product(&[v.space.clone(), m.space.clone()]);
    let ida = MultilinearMap::identity(ctx, &a_sp);
    let idm = MultilinearMap::identity(ctx, &m.space);
    let idv = MultilinearMap::identity(ctx, &v.space);
    // [a, v, m] -> [a, v0, v1, m] -> [v0, a, v1, m] -> [v0, (a.v1)m]
    let spread = MultilinearMap::tensor_all(ctx, &[&ida, &v.coaction, &idm])
        .permute_codomain(ctx, &[1, 0, 2, 3]);
    let act_then = MultilinearMap::compose(
        ctx,
        &m.action,
        &MultilinearMap::tensor(ctx, &a.action, &idm),
    )
    .map_err(HopfError::from)?;
    let tail = MultilinearMap::tensor(ctx, &idv, &act_then);
    let action = MultilinearMap::compose(ctx, &tail, &spread)
        .map_err(HopfError::from)?
        .reshape(vec![a_sp, product.clone()], vec![product.clone()]);
    Ok(AModuleData {
        space: product,
        action,
    })
}

/// `e_{V,M}(v⊗m) = v₀ ⊗ K(v₁)m`.
pub fn braiding_from_kmap(
    ctx: &FieldCtx,
    k: &KMap,
    v: &ComoduleData,
    m: &AModuleData,
) -> Result<MultilinearMap, BraidedError> {
    braiding_from_pairing(ctx, &k.map, v, m)
}

/// `e⁻¹(v⊗m) = v₀ ⊗ K̄(v₁)m` — the inverse braiding from the convolution
/// inverse of K.
pub fn inverse_via_convolution(
    ctx: &FieldCtx,
    k: &KMap,
    v: &ComoduleData,
    m: &AModuleData,
) -> Result<MultilinearMap, BraidedError> {
    braiding_from_pairing(ctx, &k.inverse, v, m)
}

fn braiding_from_pairing(
    ctx: &FieldCtx,
    map: &MultilinearMap,
    v: &ComoduleData,
    m: &AModuleData,
) -> Result<MultilinearMap, BraidedError> {
    let idv = MultilinearMap::identity(ctx, &v.space);
    let idm = MultilinearMap::identity(ctx, &m.space);
    let spread = MultilinearMap::tensor(ctx, &v.coaction, &idm);
    let apply = MultilinearMap::compose(ctx, &m.action, &MultilinearMap::tensor(ctx, map, &idm))
        .map_err(HopfError::from)?;
    let tail = MultilinearMap::tensor(ctx, &idv, &apply);
    Ok(MultilinearMap::compose(ctx, &tail, &spread).map_err(HopfError::from)?)
}

/// `e_{V,M}(v⊗m) = v₀ ⊗ λ(v₁⊗m)` for an `H`-action `λ: H⊗M → M`.
pub fn braiding_from_action(
    ctx: &FieldCtx,
    action: &MultilinearMap,
    v: &ComoduleData,
) -> Result<MultilinearMap, BraidedError> {
    let m_sp = action.domain()[1].clone();
    let idv = MultilinearMap::identity(ctx, &v.space);
    let idm = MultilinearMap::identity(ctx, &m_sp);
    let spread = MultilinearMap::tensor(ctx, &v.coaction, &idm);
    let tail = MultilinearMap::tensor(ctx, &idv, action);
    Ok(MultilinearMap::compose(ctx, &tail, &spread).map_err(HopfError::from)?)
}

/// The inverse by the braided antipode:
/// `e⁻¹ = (V⊗λ)(V⊗S_H⊗M)(δ⊗M)`.
pub fn braiding_from_action_inverse(
    ctx: &FieldCtx,
    t: &TransmutationData,
    action: &MultilinearMap,
    v: &ComoduleData,
) -> Result<MultilinearMap, BraidedError> {
    let m_sp = action.domain()[1].clone();
    let idv = MultilinearMap::identity(ctx, &v.space);
    let idm = MultilinearMap::identity(ctx, &m_sp);
    let spread = MultilinearMap::tensor(ctx, &v.coaction, &idm);
    let s_m = MultilinearMap::tensor(ctx, t.braided_antipode(), &idm);
    let twisted = MultilinearMap::compose(ctx, action, &s_m).map_err(HopfError::from)?;
    let tail = MultilinearMap::tensor(ctx, &idv, &twisted);
    Ok(MultilinearMap::compose(ctx, &tail, &spread).map_err(HopfError::from)?)
}

/// Reconstruct the `H`-action from the braiding component on the regular
/// comodule: `λ = (ε⊗M) ∘ e_{H̄,M}`, verifying that it reproduces the given
/// component.
pub fn action_from_braiding(
    ctx: &FieldCtx,
    e_regular: &MultilinearMap,
    base: &HopfData,
) -> Result<MultilinearMap, BraidedError> {
    let h = base.space().clone();
    let m_sp = e_regular.domain()[1].clone();
    // Reinterpret a renamed regular-comodule leg as the Hopf space.
    let e_reg = e_regular.reshape(
        vec![h.clone(), m_sp.clone()],
        vec![h.clone(), m_sp.clone()],
    );
    let idm = MultilinearMap::identity(ctx, &m_sp);
    let eps_m = MultilinearMap::tensor(ctx, base.counit(), &idm);
    let action = MultilinearMap::compose(ctx, &eps_m, &e_reg).map_err(HopfError::from)?;
    // e must be v₀ ⊗ λ(v₁⊗m) for the regular coaction Δ.
    let spread = MultilinearMap::tensor(ctx, base.comul(), &idm);
    let idh = MultilinearMap::identity(ctx, &h);
    let tail = MultilinearMap::tensor(ctx, &idh, &action);
    let rebuilt = MultilinearMap::compose(ctx, &tail, &spread).map_err(HopfError::from)?;
    if let Some(witness) = MultilinearMap::maps_equal(&rebuilt, &e_reg)? {
        return Err(BraidedError::ReconstructionMismatch { witness });
    }
    Ok(action)
}

/// The `H`-module structure on `W ▷ M` induced through the half-braiding:
/// `h·(w⊗m) = w₀ ⊗ λ((h↼w₁) ⊗ m)`, on unfused legs `[H,W,M] → [W,M]`.
pub fn extend_action_to_tensor(
    ctx: &FieldCtx,
    t: &TransmutationData,
    action: &MultilinearMap,
    w: &ComoduleData,
) -> Result<MultilinearMap, BraidedError> {
    let h = t.space().clone();
    let m_sp = action.domain()[1].clone();
    let idh = MultilinearMap::identity(ctx, &h);
    let idm = MultilinearMap::identity(ctx, &m_sp);
    let idw = MultilinearMap::identity(ctx, &w.space);
    // [h, w, m] -> [h, w0, w1, m] -> [w0, h, w1, m] -> [w0, λ((h↼w1)⊗m)]
    let spread = MultilinearMap::tensor_all(ctx, &[&idh, &w.coaction, &idm])
        .permute_codomain(ctx, &[1, 0, 2, 3]);
    let hit_m = MultilinearMap::tensor(ctx, &t.hit, &idm);
    let inner = MultilinearMap::compose(ctx, action, &hit_m).map_err(HopfError::from)?;
    let tail = MultilinearMap::tensor(ctx, &idw, &inner);
    Ok(MultilinearMap::compose(ctx, &tail, &spread).map_err(HopfError::from)?)
}

/// A module braiding presented either by a K-map (category level) or by an
/// `H`-action on one module (object level).
#[derive(Debug, Clone)]
pub enum ModuleBraiding {
    FromKmap(KMap),
    FromAction(MultilinearMap),
}

impl ModuleBraiding {
    /// The component `e_{V,M}` on the base module.
    pub fn component(
        &self,
        ctx: &FieldCtx,
        v: &ComoduleData,
        m: &AModuleData,
    ) -> Result<MultilinearMap, BraidedError> {
        match self {
            ModuleBraiding::FromKmap(k) => braiding_from_kmap(ctx, k, v, m),
            ModuleBraiding::FromAction(action) => braiding_from_action(ctx, action, v),
        }
    }
}

/// The three reflective-structure equations for a K-map, plus its unit and
/// convolution-inverse invariants.
pub fn check_reflective_structure(
    ctx: &FieldCtx,
    k: &KMap,
    a: &ModuleAlgebraData,
    base: &HopfData,
    r: &RForm,
) -> Result<Report, BraidedError> {
    let mut report = Report::new();
    let h = base.space().clone();
    let ida = MultilinearMap::identity(ctx, &a.space().clone());
    let idh = MultilinearMap::identity(ctx, &h);
    let mul_a = &a.algebra.mul;

    // K(1) = 1
    let on_unit = MultilinearMap::compose(ctx, &k.map, base.unit()).map_err(HopfError::from)?;
    report.push(
        "kmap-unit",
        MultilinearMap::equality_check(&on_unit, &a.algebra.unit)?,
    );

    // (1) K(h1)(a.h2) = (a.h1)K(h2)
    let spread = MultilinearMap::tensor(ctx, base.comul(), &ida);
    // [h1, h2, a] -> [h1, a, h2]
    let left_legs = spread.permute_codomain(ctx, &[0, 2, 1]);
    let k_act = MultilinearMap::tensor(ctx, &k.map, &a.action);
    let lhs = MultilinearMap::compose_chain(ctx, &[mul_a, &k_act, &left_legs])
        .map_err(HopfError::from)?;
    // [h1, h2, a] -> [a, h1, h2]
    let right_legs = spread.permute_codomain(ctx, &[2, 0, 1]);
    let act_k = MultilinearMap::tensor(ctx, &a.action, &k.map);
    let rhs = MultilinearMap::compose_chain(ctx, &[mul_a, &act_k, &right_legs])
        .map_err(HopfError::from)?;
    report.push(
        "kmap-equivariance",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );

    // (2) K(gh) = K(h1) r(h2|g1) K(g2) r(g3|h3)
    let lhs = MultilinearMap::compose(ctx, &k.map, base.mul()).map_err(HopfError::from)?;
    let d2 = crate::hopf::sweedler_power(ctx, &base.coalgebra, 2);
    // [g1,g2,g3,h1,h2,h3] -> [h1, h2,g1, g2, g3,h3]
    let both = MultilinearMap::tensor(ctx, &d2, &d2).permute_codomain(ctx, &[3, 4, 0, 1, 2, 5]);
    let tail = MultilinearMap::tensor_all(ctx, &[&k.map, &r.form, &k.map, &r.form]);
    let paired = MultilinearMap::compose(ctx, &tail, &both).map_err(HopfError::from)?;
    let rhs = MultilinearMap::compose(ctx, mul_a, &paired).map_err(HopfError::from)?;
    report.push(
        "kmap-multiplicativity",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );

    // (3) K(g).h = r(h1|g1) K(g2) r(g3|h2)
    let k_id = MultilinearMap::tensor(ctx, &k.map, &idh);
    let lhs = MultilinearMap::compose(ctx, &a.action, &k_id).map_err(HopfError::from)?;
    // [g1,g2,g3,h1,h2] -> [h1,g1, g2, g3,h2]
    let both = MultilinearMap::tensor(ctx, &d2, base.comul())
        .permute_codomain(ctx, &[3, 0, 1, 2, 4]);
    let tail = MultilinearMap::tensor_all(ctx, &[&r.form, &k.map, &r.form]);
    let rhs = MultilinearMap::compose(ctx, &tail, &both).map_err(HopfError::from)?;
    report.push("kmap-action", MultilinearMap::equality_check(&lhs, &rhs)?);

    // convolution inverse, both sides
    let conv_unit = convolution_unit(ctx, &base.coalgebra, &a.algebra)?;
    let left = convolution(ctx, &k.inverse, &k.map, &base.coalgebra, &a.algebra)?;
    report.push(
        "kmap-conv-inverse-left",
        MultilinearMap::equality_check(&left, &conv_unit)?,
    );
    let right = convolution(ctx, &k.map, &k.inverse, &base.coalgebra, &a.algebra)?;
    report.push(
        "kmap-conv-inverse-right",
        MultilinearMap::equality_check(&right, &conv_unit)?,
    );
    Ok(report)
}

/// Both defining equations of a module braiding, componentwise on the probe
/// pairs, with the crossings bound to the braiding `c` of the comodule
/// category; plus `e_{I,M} = id` on a synthesized trivial probe and
/// `A`-linearity of every component.
pub fn check_module_braiding(
    ctx: &FieldCtx,
    e: &ModuleBraiding,
    t: &TransmutationData,
    a: &ModuleAlgebraData,
    m: &AModuleData,
    probes: &[ComoduleData],
) -> Result<Report, BraidedError> {
    let mut report = Report::new();
    let base = &t.base;
    let r = &t.rform;
    let idm = MultilinearMap::identity(ctx, &m.space);

    // e_{I,M} = id.
    let unit_probe = ComoduleData::trivial(
        ctx,
        &Space::new("unit-probe", vec!["u".into()]),
        base,
    );
    let comp = e.component(ctx, &unit_probe, m)?;
    let id = MultilinearMap::identity_on(ctx, comp.domain());
    report.push("e-unit-component", MultilinearMap::equality_check(&comp, &id)?);

    for v in probes {
        // A-linearity of e_{V,M}: e ∘ ρ_{V▷M} = ρ_{V▷M} ∘ (A ⊗ e).
        let comp = e.component(ctx, v, m)?;
        let vm = act_on_module(ctx, v, m, a)?;
        let rho = vm
            .action
            .reshape(
                vec![a.space().clone(), v.space.clone(), m.space.clone()],
                vec![v.space.clone(), m.space.clone()],
            );
        let lhs = MultilinearMap::compose(ctx, &comp, &rho).map_err(HopfError::from)?;
        let ida = MultilinearMap::identity(ctx, a.space());
        let rhs = MultilinearMap::compose(
            ctx,
            &rho,
            &MultilinearMap::tensor(ctx, &ida, &comp),
        )
        .map_err(HopfError::from)?;
        report.push(
            format!("e-a-linear/{}", v.space.name()),
            MultilinearMap::equality_check(&lhs, &rhs)?,
        );
    }

    for v in probes {
        for w in probes {
            let name = format!("{}-{}", v.space.name(), w.space.name());
            let c_vw = braiding_of_comodules(ctx, v, w, r)?;
            let c_wv = braiding_of_comodules(ctx, w, v, r)?;
            let e_vm = e.component(ctx, v, m)?;
            let e_wm = e.component(ctx, w, m)?;
            let idv = MultilinearMap::identity(ctx, &v.space);
            let idw = MultilinearMap::identity(ctx, &w.space);

            // Axiom 1: e_{V⊗W,M} = (V⊗e_{W,M})(c_{W,V}⊗M)(W⊗e_{V,M})(c_{V,W}⊗M).
            let vw = tensor_comodule(ctx, v, w, base)?;
            let lhs = match e {
                ModuleBraiding::FromKmap(k) => braiding_from_kmap(ctx, k, &vw, m)?,
                ModuleBraiding::FromAction(action) => braiding_from_action(ctx, action, &vw)?,
            }
            .reshape(
                vec![v.space.clone(), w.space.clone(), m.space.clone()],
                vec![v.space.clone(), w.space.clone(), m.space.clone()],
            );
            let stage1 = MultilinearMap::tensor(ctx, &c_vw, &idm);
            let stage2 = MultilinearMap::tensor(ctx, &idw, &e_vm);
            let stage3 = MultilinearMap::tensor(ctx, &c_wv, &idm);
            let stage4 = MultilinearMap::tensor(ctx, &idv, &e_wm);
            let rhs = MultilinearMap::compose_chain(ctx, &[&stage4, &stage3, &stage2, &stage1])
                .map_err(HopfError::from)?;
            report.push(
                format!("module-braiding-1/{name}"),
                MultilinearMap::equality_check(&lhs, &rhs)?,
            );

            // Axiom 2: e_{V,W▷M} = (c_{W,V}⊗M)(W⊗e_{V,M})(c_{V,W}⊗M).
            let wm = act_on_module(ctx, w, m, a)?;
            let lhs = match e {
                ModuleBraiding::FromKmap(k) => braiding_from_kmap(ctx, k, v, &wm)?,
                ModuleBraiding::FromAction(action) => {
                    let extended = extend_action_to_tensor(ctx, t, action, w)?.reshape(
                        vec![t.space().clone(), wm.space.clone()],
                        vec![wm.space.clone()],
                    );
                    braiding_from_action(ctx, &extended, v)?
                }
            }
            .reshape(
                vec![v.space.clone(), w.space.clone(), m.space.clone()],
                vec![v.space.clone(), w.space.clone(), m.space.clone()],
            );
            let rhs = MultilinearMap::compose_chain(ctx, &[&stage3, &stage2, &stage1])
                .map_err(HopfError::from)?;
            report.push(
                format!("module-braiding-2/{name}"),
                MultilinearMap::equality_check(&lhs, &rhs)?,
            );
        }
    }
    Ok(report)
}

/// Module axioms for an `H`-action in the module category: unit, braided
/// associativity over `•`, and `A`-linearity with respect to the induced
/// structure on `H ▷ M`.
pub fn check_braided_module_action(
    ctx: &FieldCtx,
    t: &TransmutationData,
    a: &ModuleAlgebraData,
    m: &AModuleData,
    action: &MultilinearMap,
) -> Result<Report, BraidedError> {
    let mut report = Report::new();
    let h = t.space().clone();
    let idm = MultilinearMap::identity(ctx, &m.space);
    let idh = MultilinearMap::identity(ctx, &h);

    let unital = MultilinearMap::compose(
        ctx,
        action,
        &MultilinearMap::tensor(ctx, t.base.unit(), &idm),
    )
    .map_err(HopfError::from)?;
    report.push("action-unit", MultilinearMap::equality_check(&unital, &idm)?);

    let lhs = MultilinearMap::compose(
        ctx,
        action,
        &MultilinearMap::tensor(ctx, &t.bullet, &idm),
    )
    .map_err(HopfError::from)?;
    let rhs = MultilinearMap::compose(
        ctx,
        action,
        &MultilinearMap::tensor(ctx, &idh, action),
    )
    .map_err(HopfError::from)?;
    report.push(
        "action-bullet-assoc",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );

    // A-linearity: λ(a·(h⊗m)) = a·λ(h⊗m) with the H▷M structure from coad.
    let hm = act_on_module(ctx, &t.coad_comodule(), m, a)?;
    let rho = hm.action.reshape(
        vec![a.space().clone(), h.clone(), m.space.clone()],
        vec![h.clone(), m.space.clone()],
    );
    let lhs = MultilinearMap::compose(ctx, action, &rho).map_err(HopfError::from)?;
    let ida = MultilinearMap::identity(ctx, a.space());
    let rhs = MultilinearMap::compose(
        ctx,
        &m.action,
        &MultilinearMap::tensor(ctx, &ida, action),
    )
    .map_err(HopfError::from)?;
    report.push("action-a-linear", MultilinearMap::equality_check(&lhs, &rhs)?);
    Ok(report)
}

/// Round-trip identity: a K-map's braiding on the regular comodule
/// reconstructs to an action whose braiding matches the K-map's on every
/// probe; packaged as a report for the correspondence suite.
pub fn check_theorem_round_trip(
    ctx: &FieldCtx,
    k: &KMap,
    t: &TransmutationData,
    a: &ModuleAlgebraData,
    m: &AModuleData,
    probes: &[ComoduleData],
) -> Result<Report, BraidedError> {
    let mut report = Report::new();
    let base = &t.base;

    // K → e on the regular comodule → λ → e again, compared per probe.
    let regular = base.regular_comodule();
    let e_reg = braiding_from_kmap(ctx, k, &regular, m)?;
    let action = action_from_braiding(ctx, &e_reg, base)?;
    report.merge_under(
        "reconstructed-action",
        check_braided_module_action(ctx, t, a, m, &action)?.into(),
    );
    for v in probes {
        let from_k = braiding_from_kmap(ctx, k, v, m)?;
        let from_action = braiding_from_action(ctx, &action, v)?;
        report.push(
            format!("round-trip/{}", v.space.name()),
            MultilinearMap::equality_check(&from_k, &from_action)?,
        );
        // Inverses from both routes are two-sided inverses.
        let inv_conv = inverse_via_convolution(ctx, k, v, m)?;
        let id = MultilinearMap::identity_on(ctx, from_k.domain());
        let round = MultilinearMap::compose(ctx, &from_k, &inv_conv).map_err(HopfError::from)?;
        report.push(
            format!("inverse-conv-right/{}", v.space.name()),
            MultilinearMap::equality_check(&round, &id)?,
        );
        let round = MultilinearMap::compose(ctx, &inv_conv, &from_k).map_err(HopfError::from)?;
        report.push(
            format!("inverse-conv-left/{}", v.space.name()),
            MultilinearMap::equality_check(&round, &id)?,
        );
        let inv_antipode = braiding_from_action_inverse(ctx, t, &action, v)?;
        let round = MultilinearMap::compose(ctx, &from_k, &inv_antipode)
            .map_err(HopfError::from)?;
        report.push(
            format!("inverse-antipode-right/{}", v.space.name()),
            MultilinearMap::equality_check(&round, &id)?,
        );
        let round = MultilinearMap::compose(ctx, &inv_antipode, &from_k)
            .map_err(HopfError::from)?;
        report.push(
            format!("inverse-antipode-left/{}", v.space.name()),
            MultilinearMap::equality_check(&round, &id)?,
        );
    }

    // λ → e_reg → λ is the identity on actions.
    let e_back = braiding_from_action(ctx, &action, &regular)?;
    let action_back = action_from_braiding(ctx, &e_back, base)?;
    report.push(
        "action-round-trip",
        MultilinearMap::equality_check(&action, &action_back)?,
    );
    Ok(report)
}

impl From<Report> for Report {
    fn from(r: Report) -> Report {
        r
    }
}
