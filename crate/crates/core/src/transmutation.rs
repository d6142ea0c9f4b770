//! Transmutation: the braided Hopf algebra `H` obtained from a
//! coquasitriangular Hopf algebra `(H̄, r)`.
//!
//! As a coalgebra `H = H̄`. The rest of the structure, in Sweedler indices:
//!
//! * coadjoint coaction   δ(h) = h₂ ⊗ S(h₁) h₃
//! * transmuted product   g•h = g₂h₃ · r(g₃ | S(h₁)) · r(g₁ | h₂)
//! * half-braiding        σ(h⊗v) = v₀ ⊗ h₂ · r(v₁ | h₁) · r(h₃ | v₂)
//! * hit action           h↼g = h₂ · r(g₁ | h₁) · r(h₃ | g₂)
//!
//! so that σ(h⊗v) = v₀ ⊗ (h ↼ v₁). The displayed hit formula in the source
//! material reads `h₂ r(g₁|h₁) r(h₂|g₂)` with `h₂` occurring twice; that
//! reading is not even well-formed as a linear map, so this crate fixes the
//! σ-consistent indexing above and [`check_hit_erratum`] documents that the
//! plausible literal repair (output `h₃`, scalars `r(g₁|h₁) r(h₂|g₂)`)
//! disagrees with σ on concrete examples.
//!
//! The braided antipode is not given by a closed formula here; it is the
//! convolution inverse of the identity with respect to (•, Δ), obtained by
//! exact linear solve and then re-verified against both antipode axioms.
//!
//! "For all X" quantifiers (the central-coalgebra equalities and goodness)
//! are certified on a finite probe set of comodules supplied by the caller.

use alloc::format;
use alloc::vec::Vec;

use crate::expr::{self, Crossing, Env, MorphismExpr};
use crate::hopf::{
    braiding_inverse, braiding_of_comodules, check_algebra, check_antipode, check_comodule,
    convolution_inverse, sweedler_power, AlgebraData, CoalgebraData, ComoduleData, HopfData,
    HopfError, RForm,
};
use crate::linalg;
use crate::report::Report;
use crate::scalar::FieldCtx;
use crate::tensor::{MultilinearMap, Space};

/// The transmuted braided Hopf algebra, bundled with its base data.
#[derive(Debug, Clone)]
pub struct TransmutationData {
    /// The underlying coquasitriangular Hopf algebra (antipode present).
    pub base: HopfData,
    pub rform: RForm,
    /// Coadjoint coaction `H → H⊗H̄`.
    pub coad: MultilinearMap,
    /// Transmuted product `H⊗H → H`.
    pub bullet: MultilinearMap,
    /// The action `H⊗H̄ → H` implementing the half-braiding.
    pub hit: MultilinearMap,
    /// Braided antipode, once solved.
    pub braided_antipode: Option<MultilinearMap>,
}

impl TransmutationData {
    pub fn space(&self) -> &Space {
        self.base.space()
    }

    /// `H` as an H̄-comodule via the coadjoint coaction.
    pub fn coad_comodule(&self) -> ComoduleData {
        ComoduleData {
            space: self.space().clone(),
            coaction: self.coad.clone(),
        }
    }

    /// `(H, •, η)` as an algebra.
    pub fn braided_algebra(&self) -> AlgebraData {
        AlgebraData {
            space: self.space().clone(),
            mul: self.bullet.clone(),
            unit: self.base.unit().clone(),
        }
    }

    /// The shared coalgebra `(H, Δ, ε)`.
    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.base.coalgebra
    }

    pub fn braided_antipode(&self) -> &MultilinearMap {
        self.braided_antipode
            .as_ref()
            .expect("braided antipode not solved yet")
    }
}

/// Build the whole transmutation, solving the base antipode if absent and
/// the braided antipode always.
pub fn transmute(ctx: &FieldCtx, base: &HopfData, r: &RForm) -> Result<TransmutationData, HopfError> {
    let mut base = base.clone();
    if base.antipode.is_none() {
        base.antipode = Some(crate::hopf::solve_antipode(ctx, &base)?);
    }
    let coad = build_coadjoint_coaction(ctx, &base)?;
    let bullet = build_transmuted_mul(ctx, &base, r)?;
    let hit = build_hit_action(ctx, &base, r)?;
    let mut t = TransmutationData {
        base,
        rform: r.clone(),
        coad,
        bullet,
        hit,
        braided_antipode: None,
    };
    t.braided_antipode = Some(solve_braided_antipode(ctx, &t)?);
    Ok(t)
}

/// δ(h) = h₂ ⊗ S(h₁)h₃.
pub fn build_coadjoint_coaction(
    ctx: &FieldCtx,
    base: &HopfData,
) -> Result<MultilinearMap, HopfError> {
    let h = base.space().clone();
    let s = base.antipode();
    let d2 = sweedler_power(ctx, &base.coalgebra, 2);
    // [h1, h2, h3] -> [h2, h1, h3]
    let spread = d2.permute_codomain(ctx, &[1, 0, 2]);
    let id = MultilinearMap::identity(ctx, &h);
    let s_id = MultilinearMap::tensor(ctx, s, &id);
    let smul = MultilinearMap::compose(ctx, base.mul(), &s_id)?;
    let tail = MultilinearMap::tensor(ctx, &id, &smul);
    Ok(MultilinearMap::compose(ctx, &tail, &spread)?)
}

/// g•h = g₂h₃ · r(g₃|S(h₁)) · r(g₁|h₂).
pub fn build_transmuted_mul(
    ctx: &FieldCtx,
    base: &HopfData,
    r: &RForm,
) -> Result<MultilinearMap, HopfError> {
    let h = base.space().clone();
    let s = base.antipode();
    let d2 = sweedler_power(ctx, &base.coalgebra, 2);
    let both = MultilinearMap::tensor(ctx, &d2, &d2);
    // [g1,g2,g3,h1,h2,h3] -> [g2,h3, g3,h1, g1,h2]
    let spread = both.permute_codomain(ctx, &[1, 5, 2, 3, 0, 4]);
    let id = MultilinearMap::identity(ctx, &h);
    let id_s = MultilinearMap::tensor(ctx, &id, s);
    let r_s = MultilinearMap::compose(ctx, &r.form, &id_s)?;
    let tail = MultilinearMap::tensor_all(ctx, &[base.mul(), &r_s, &r.form]);
    Ok(MultilinearMap::compose(ctx, &tail, &spread)?)
}

/// h↼g = h₂ · r(g₁|h₁) · r(h₃|g₂).
pub fn build_hit_action(
    ctx: &FieldCtx,
    base: &HopfData,
    r: &RForm,
) -> Result<MultilinearMap, HopfError> {
    let h = base.space().clone();
    let d2 = sweedler_power(ctx, &base.coalgebra, 2);
    let both = MultilinearMap::tensor(ctx, &d2, base.comul());
    // [h1,h2,h3,g1,g2] -> [h2, g1,h1, h3,g2]
    let spread = both.permute_codomain(ctx, &[1, 3, 0, 2, 4]);
    let id = MultilinearMap::identity(ctx, &h);
    let tail = MultilinearMap::tensor_all(ctx, &[&id, &r.form, &r.form]);
    Ok(MultilinearMap::compose(ctx, &tail, &spread)?)
}

/// σ_{H,V}(h⊗v) = v₀ ⊗ h₂ · r(v₁|h₁) · r(h₃|v₂) for a probe comodule V.
pub fn build_half_braiding(
    ctx: &FieldCtx,
    t: &TransmutationData,
    v: &ComoduleData,
) -> Result<MultilinearMap, HopfError> {
    let h = t.space().clone();
    let base = &t.base;
    let d2 = sweedler_power(ctx, &base.coalgebra, 2);
    let idh = MultilinearMap::identity(ctx, &h);
    let idv = MultilinearMap::identity(ctx, &v.space);
    // δ²: V → V⊗H̄⊗H̄
    let dv_id = MultilinearMap::tensor(ctx, &v.coaction, &idh);
    let dv2 = MultilinearMap::compose(ctx, &dv_id, &v.coaction)?;
    let both = MultilinearMap::tensor(ctx, &d2, &dv2);
    // [h1,h2,h3,v0,v1,v2] -> [v0, h2, v1,h1, h3,v2]
    let spread = both.permute_codomain(ctx, &[3, 1, 4, 0, 2, 5]);
    let tail = MultilinearMap::tensor_all(ctx, &[&idv, &idh, &t.rform.form, &t.rform.form]);
    Ok(MultilinearMap::compose(ctx, &tail, &spread)?)
}

/// The exact inverse `V⊗H → H⊗V` of the half-braiding, by matrix inversion.
pub fn half_braiding_inverse(
    ctx: &FieldCtx,
    t: &TransmutationData,
    v: &ComoduleData,
) -> Result<MultilinearMap, HopfError> {
    let sigma = build_half_braiding(ctx, t, v)?;
    linalg::invert_map(ctx, &sigma).ok_or(HopfError::NotInvertible {
        unknowns: sigma.in_size() * sigma.out_size(),
        rank: 0,
        inconsistent_row: None,
    })
}

/// Braided antipode: convolution inverse of the identity with respect to
/// `(•, Δ)`, with both antipode axioms re-verified.
pub fn solve_braided_antipode(
    ctx: &FieldCtx,
    t: &TransmutationData,
) -> Result<MultilinearMap, HopfError> {
    let algebra = t.braided_algebra();
    let id = MultilinearMap::identity(ctx, t.space());
    let s = convolution_inverse(ctx, &id, t.coalgebra(), &algebra).map_err(|e| match e {
        HopfError::NotInvertible {
            unknowns,
            rank,
            inconsistent_row,
        } => HopfError::NotAHopfAlgebra {
            detail: format!(
                "no braided antipode: rank {rank}/{unknowns}{}",
                match inconsistent_row {
                    Some(r) => format!(", inconsistent at {r}"),
                    None => alloc::string::String::new(),
                }
            ),
        },
        other => other,
    })?;
    let hopf_like = HopfData {
        algebra,
        coalgebra: t.coalgebra().clone(),
        antipode: None,
    };
    let report = check_antipode(ctx, &hopf_like, &s)?;
    if !report.passed() {
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        return Err(HopfError::NotAHopfAlgebra {
            detail: format!("braided antipode fails {failed:?}"),
        });
    }
    Ok(s)
}

/// Environment with the crossings needed by the central-coalgebra and
/// goodness diagrams for one probe.
fn crossing_env(
    ctx: &FieldCtx,
    t: &TransmutationData,
    probes: &[&ComoduleData],
) -> Result<Env, HopfError> {
    let mut env = Env::new(ctx);
    env.bind("comul", t.base.comul().clone());
    let hc = t.coad_comodule();
    for v in probes {
        env.bind(format!("coact::{}", v.space.name()), v.coaction.clone());
        let sigma = build_half_braiding(ctx, t, v)?;
        env.bind_crossing(Crossing::Half, &hc.space, &v.space, sigma)?;
        let c = braiding_of_comodules(ctx, &hc, v, &t.rform)?;
        env.bind_crossing(Crossing::Braiding, &hc.space, &v.space, c)?;
        let c_inv = braiding_inverse(ctx, v, &hc, &t.rform)?;
        env.bind_crossing(Crossing::BraidingInv, &hc.space, &v.space, c_inv)?;
    }
    for v in probes {
        for w in probes {
            let c = braiding_of_comodules(ctx, v, w, &t.rform)?;
            env.bind_crossing(Crossing::Braiding, &v.space, &w.space, c)?;
        }
    }
    Ok(env)
}

/// The three diagrams of the central-coalgebra compatibility for one probe
/// `X`, as expressions over [`crossing_env`]: left, middle, right.
pub fn central_coalgebra_exprs(
    t: &TransmutationData,
    x: &ComoduleData,
) -> (MorphismExpr, MorphismExpr, MorphismExpr) {
    let h = t.space();
    let xs = &x.space;
    let comul = MorphismExpr::gen("comul");
    let left = comul
        .clone()
        .beside(MorphismExpr::id(xs))
        .then(MorphismExpr::id(h).beside(MorphismExpr::swap(Crossing::Half, h, xs)))
        .then(MorphismExpr::swap(Crossing::BraidingInv, h, xs).beside(MorphismExpr::id(h)));
    let middle = MorphismExpr::swap(Crossing::Half, h, xs)
        .then(MorphismExpr::id(xs).beside(comul.clone()));
    let right = comul
        .beside(MorphismExpr::id(xs))
        .then(MorphismExpr::id(h).beside(MorphismExpr::swap(Crossing::Braiding, h, xs)))
        .then(MorphismExpr::swap(Crossing::Half, h, xs).beside(MorphismExpr::id(h)));
    (left, middle, right)
}

/// Both equalities of the central-coalgebra condition, per probe.
pub fn check_central_coalgebra(
    ctx: &FieldCtx,
    t: &TransmutationData,
    probes: &[ComoduleData],
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    for x in probes {
        let env = crossing_env(ctx, t, &[x])?;
        let (left, middle, right) = central_coalgebra_exprs(t, x);
        let l = expr::eval_expr(&left, &env)?;
        let m = expr::eval_expr(&middle, &env)?;
        let r = expr::eval_expr(&right, &env)?;
        let name = x.space.name();
        report.push(
            format!("central-coalgebra/{name}/left-eq-middle"),
            MultilinearMap::equality_check(&l, &m)?,
        );
        report.push(
            format!("central-coalgebra/{name}/middle-eq-right"),
            MultilinearMap::equality_check(&m, &r)?,
        );
    }
    Ok(report)
}

/// The three goodness diagrams for an `H`-comodule `X` against a probe `Y`.
pub fn goodness_exprs(
    t: &TransmutationData,
    x: &ComoduleData,
    y: &ComoduleData,
) -> (MorphismExpr, MorphismExpr, MorphismExpr) {
    let h = t.space();
    let xs = &x.space;
    let ys = &y.space;
    let coact = MorphismExpr::gen(format!("coact::{}", xs.name()));
    let left = coact
        .clone()
        .beside(MorphismExpr::id(ys))
        .then(MorphismExpr::id(xs).beside(MorphismExpr::swap(Crossing::Half, h, ys)));
    let middle = MorphismExpr::swap(Crossing::Braiding, xs, ys)
        .then(MorphismExpr::id(ys).beside(coact.clone()))
        .then(MorphismExpr::swap(Crossing::Braiding, ys, xs).beside(MorphismExpr::id(h)));
    let right = coact
        .beside(MorphismExpr::id(ys))
        .then(MorphismExpr::id(xs).beside(MorphismExpr::swap(Crossing::Braiding, h, ys)))
        .then(MorphismExpr::swap(Crossing::Braiding, xs, ys).beside(MorphismExpr::id(h)))
        .then(MorphismExpr::swap(Crossing::Braiding, ys, xs).beside(MorphismExpr::id(h)));
    (left, middle, right)
}

/// Goodness of the induced `H`-comodule structure on `X` (its H̄-coaction
/// reinterpreted) against every probe `Y`.
pub fn check_good_comodule(
    ctx: &FieldCtx,
    t: &TransmutationData,
    x: &ComoduleData,
    probes: &[ComoduleData],
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    for y in probes {
        let env = crossing_env(ctx, t, &[x, y])?;
        let (left, middle, right) = goodness_exprs(t, x, y);
        let l = expr::eval_expr(&left, &env)?;
        let m = expr::eval_expr(&middle, &env)?;
        let r = expr::eval_expr(&right, &env)?;
        let name = format!("{}/{}", x.space.name(), y.space.name());
        report.push(
            format!("good-comodule/{name}/left-eq-middle"),
            MultilinearMap::equality_check(&l, &m)?,
        );
        report.push(
            format!("good-comodule/{name}/middle-eq-right"),
            MultilinearMap::equality_check(&m, &r)?,
        );
    }
    Ok(report)
}

/// σ-commutativity of the transmuted product: • ∘ σ_{H,H} = •.
pub fn check_braided_commutativity(
    ctx: &FieldCtx,
    t: &TransmutationData,
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let sigma_hh = build_half_braiding(ctx, t, &t.coad_comodule())?;
    let twisted = MultilinearMap::compose(ctx, &t.bullet, &sigma_hh)?;
    report.push(
        "bullet-sigma-commutative",
        MultilinearMap::equality_check(&twisted, &t.bullet)?,
    );
    Ok(report)
}

/// `H` is a bialgebra in the braided category and its structure maps are
/// colinear for the coadjoint coaction; σ makes • a morphism in the center.
pub fn check_central_bialgebra(
    ctx: &FieldCtx,
    t: &TransmutationData,
    probes: &[ComoduleData],
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let h = t.space().clone();
    let idh = MultilinearMap::identity(ctx, &h);
    let hc = t.coad_comodule();

    // (•, η) is an associative unital algebra.
    report.merge_under("bullet-algebra", check_algebra(ctx, &t.braided_algebra())?);

    // coad is a comodule structure.
    report.merge_under("coad-comodule", check_comodule(ctx, &hc, &t.base)?);

    // Δ∘• = (•⊗•)∘(id⊗c_{H,H}⊗id)∘(Δ⊗Δ), the braided bialgebra law.
    let lhs = MultilinearMap::compose(ctx, t.base.comul(), &t.bullet)?;
    let c_hh = braiding_of_comodules(ctx, &hc, &hc, &t.rform)?;
    let comul2 = MultilinearMap::tensor(ctx, t.base.comul(), t.base.comul());
    let mid = MultilinearMap::tensor_all(ctx, &[&idh, &c_hh, &idh]);
    let bullet2 = MultilinearMap::tensor(ctx, &t.bullet, &t.bullet);
    let rhs = MultilinearMap::compose_chain(ctx, &[&bullet2, &mid, &comul2])?;
    report.push(
        "braided-bialgebra/comul-multiplicative",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );

    // ε(g•h) = ε(g)ε(h), Δ(1) = 1⊗1 with respect to •'s unit are inherited
    // from the base coalgebra; check the ε law against • anyway.
    let lhs = MultilinearMap::compose(ctx, t.base.counit(), &t.bullet)?;
    let rhs = MultilinearMap::tensor(ctx, t.base.counit(), t.base.counit());
    report.push(
        "braided-bialgebra/counit-multiplicative",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );

    // Colinearity of • for coad: coad∘• = (•⊗μ̄)∘flip∘(coad⊗coad).
    let lhs = MultilinearMap::compose(ctx, &t.coad, &t.bullet)?;
    let both =
        MultilinearMap::tensor(ctx, &t.coad, &t.coad).permute_codomain(ctx, &[0, 2, 1, 3]);
    let tail = MultilinearMap::tensor(ctx, &t.bullet, t.base.mul());
    let rhs = MultilinearMap::compose(ctx, &tail, &both)?;
    report.push(
        "coad-colinear/bullet",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );

    // Colinearity of Δ: (Δ⊗id)∘coad = δ_{H⊗H}∘Δ.
    let lhs = MultilinearMap::compose(
        ctx,
        &MultilinearMap::tensor(ctx, t.base.comul(), &idh),
        &t.coad,
    )?;
    let rhs = MultilinearMap::compose_chain(ctx, &[&tail_comodule_square(ctx, t)?, t.base.comul()])?;
    report.push(
        "coad-colinear/comul",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );

    // Colinearity of ε and η.
    let lhs = MultilinearMap::compose(
        ctx,
        &MultilinearMap::tensor(ctx, t.base.counit(), &idh),
        &t.coad,
    )?;
    let rhs = MultilinearMap::compose(ctx, t.base.unit(), t.base.counit())?;
    report.push(
        "coad-colinear/counit",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );
    let lhs = MultilinearMap::compose(ctx, &t.coad, t.base.unit())?;
    let rhs = MultilinearMap::tensor(ctx, t.base.unit(), t.base.unit());
    report.push(
        "coad-colinear/unit",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );

    // σ makes • a morphism in the center: for every probe V,
    // σ_{H,V}∘(•⊗V) = (V⊗•)∘(σ⊗H)∘(H⊗σ).
    for v in probes {
        let sigma = build_half_braiding(ctx, t, v)?;
        let idv = MultilinearMap::identity(ctx, &v.space);
        let lhs = MultilinearMap::compose(
            ctx,
            &sigma,
            &MultilinearMap::tensor(ctx, &t.bullet, &idv),
        )?;
        let h_sigma = MultilinearMap::tensor(ctx, &idh, &sigma);
        let sigma_h = MultilinearMap::tensor(ctx, &sigma, &idh);
        let v_bullet = MultilinearMap::tensor(ctx, &idv, &t.bullet);
        let rhs = MultilinearMap::compose_chain(ctx, &[&v_bullet, &sigma_h, &h_sigma])?;
        report.push(
            format!("mul-in-center/{}", v.space.name()),
            MultilinearMap::equality_check(&lhs, &rhs)?,
        );
    }
    Ok(report)
}

/// The coaction of the tensor-square comodule `H^coad ⊗ H^coad`, unfused:
/// `[H,H] → [H,H,H̄]`.
fn tail_comodule_square(
    ctx: &FieldCtx,
    t: &TransmutationData,
) -> Result<MultilinearMap, HopfError> {
    let h = t.space().clone();
    let both =
        MultilinearMap::tensor(ctx, &t.coad, &t.coad).permute_codomain(ctx, &[0, 2, 1, 3]);
    let idh = MultilinearMap::identity(ctx, &h);
    let tail = MultilinearMap::tensor_all(ctx, &[&idh, &idh, t.base.mul()]);
    Ok(MultilinearMap::compose(ctx, &tail, &both)?)
}

/// Right-action axioms for ↼ and the Yetter–Drinfeld compatibility of
/// (↼, coad):  coad(h↼g) = (h₀ ↼ g₂) ⊗ S(g₁) h₁ g₃.
pub fn check_yetter_drinfeld(ctx: &FieldCtx, t: &TransmutationData) -> Result<Report, HopfError> {
    let mut report = Report::new();
    let h = t.space().clone();
    let base = &t.base;
    let idh = MultilinearMap::identity(ctx, &h);

    // h↼1 = h and h↼(ab) = (h↼a)↼b.
    let unital = MultilinearMap::compose(
        ctx,
        &t.hit,
        &MultilinearMap::tensor(ctx, &idh, base.unit()),
    )?;
    report.push("hit-unit", MultilinearMap::equality_check(&unital, &idh)?);
    let lhs = MultilinearMap::compose(
        ctx,
        &t.hit,
        &MultilinearMap::tensor(ctx, &idh, base.mul()),
    )?;
    let rhs = MultilinearMap::compose(
        ctx,
        &t.hit,
        &MultilinearMap::tensor(ctx, &t.hit, &idh),
    )?;
    report.push("hit-assoc", MultilinearMap::equality_check(&lhs, &rhs)?);

    // Yetter–Drinfeld: coad(h↼g) = (h₀↼g₂) ⊗ S(g₁)h₁g₃.
    let lhs = MultilinearMap::compose(ctx, &t.coad, &t.hit)?;
    let d2 = sweedler_power(ctx, &base.coalgebra, 2);
    // [h0, h1, g1, g2, g3] -> [h0, g2, g1, h1, g3]
    let spread = MultilinearMap::tensor(ctx, &t.coad, &d2).permute_codomain(ctx, &[0, 3, 2, 1, 4]);
    // triple: (g1, h1, g3) ↦ S(g1)·h1·g3
    let s_id = MultilinearMap::tensor(ctx, base.antipode(), &idh);
    let first = MultilinearMap::compose(ctx, base.mul(), &s_id)?;
    let first_id = MultilinearMap::tensor(ctx, &first, &idh);
    let triple = MultilinearMap::compose(ctx, base.mul(), &first_id)?;
    let tail = MultilinearMap::tensor(ctx, &t.hit, &triple);
    let rhs = MultilinearMap::compose(ctx, &tail, &spread)?;
    report.push(
        "yetter-drinfeld",
        MultilinearMap::equality_check(&lhs, &rhs)?,
    );
    Ok(report)
}

/// σ built from the r-formula equals the coaction-then-hit form
/// `σ(h⊗v) = v₀ ⊗ (h ↼ v₁)` on every probe.
pub fn check_sigma_hit_consistency(
    ctx: &FieldCtx,
    t: &TransmutationData,
    probes: &[ComoduleData],
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    for v in probes {
        let direct = build_half_braiding(ctx, t, v)?;
        let via_hit = sigma_via_hit(ctx, t, v, &t.hit)?;
        report.push(
            format!("sigma-via-hit/{}", v.space.name()),
            MultilinearMap::equality_check(&direct, &via_hit)?,
        );
    }
    Ok(report)
}

/// `(h⊗v) ↦ v₀ ⊗ (h ↼ v₁)` for an arbitrary candidate hit action.
fn sigma_via_hit(
    ctx: &FieldCtx,
    t: &TransmutationData,
    v: &ComoduleData,
    hit: &MultilinearMap,
) -> Result<MultilinearMap, HopfError> {
    let h = t.space().clone();
    let idh = MultilinearMap::identity(ctx, &h);
    let idv = MultilinearMap::identity(ctx, &v.space);
    // [h, v0, v1] -> [v0, h, v1]
    let spread =
        MultilinearMap::tensor(ctx, &idh, &v.coaction).permute_codomain(ctx, &[1, 0, 2]);
    let tail = MultilinearMap::tensor(ctx, &idv, hit);
    Ok(MultilinearMap::compose(ctx, &tail, &spread)?)
}

/// The documented erratum: the literal reading of the displayed hit formula
/// (with its doubled index repaired to `h₃ · r(g₁|h₁) r(h₂|g₂)`) disagrees
/// with the half-braiding; the σ-consistent indexing is the one in
/// [`build_hit_action`]. Returns, per probe, whether each candidate matches
/// σ.
pub fn check_hit_erratum(
    ctx: &FieldCtx,
    t: &TransmutationData,
    probes: &[ComoduleData],
) -> Result<Vec<(bool, bool)>, HopfError> {
    let base = &t.base;
    let h = t.space().clone();
    // Literal repair candidate: output h3, scalars r(g1|h1) r(h2|g2).
    let d2 = sweedler_power(ctx, &base.coalgebra, 2);
    let both = MultilinearMap::tensor(ctx, &d2, base.comul());
    // [h1,h2,h3,g1,g2] -> [h3, g1,h1, h2,g2]
    let spread = both.permute_codomain(ctx, &[2, 3, 0, 1, 4]);
    let idh = MultilinearMap::identity(ctx, &h);
    let tail = MultilinearMap::tensor_all(ctx, &[&idh, &t.rform.form, &t.rform.form]);
    let literal = MultilinearMap::compose(ctx, &tail, &spread)?;

    let mut out = Vec::new();
    for v in probes {
        let direct = build_half_braiding(ctx, t, v)?;
        let via_fixed = sigma_via_hit(ctx, t, v, &t.hit)?;
        let via_literal = sigma_via_hit(ctx, t, v, &literal)?;
        out.push((
            MultilinearMap::maps_equal(&direct, &via_fixed)?.is_none(),
            MultilinearMap::maps_equal(&direct, &via_literal)?.is_none(),
        ));
    }
    Ok(out)
}

/// The full transmutation verification bundle used by the CLI and the
/// acceptance suite.
pub fn check_transmutation(
    ctx: &FieldCtx,
    t: &TransmutationData,
    probes: &[ComoduleData],
) -> Result<Report, HopfError> {
    let mut report = Report::new();
    report.merge(check_central_bialgebra(ctx, t, probes)?);
    report.merge(check_braided_commutativity(ctx, t)?);
    report.merge(check_yetter_drinfeld(ctx, t)?);
    report.merge(check_sigma_hit_consistency(ctx, t, probes)?);
    report.merge(check_central_coalgebra(ctx, t, probes)?);
    for x in probes {
        report.merge(check_good_comodule(ctx, t, x, probes)?);
    }
    if let Some(s) = &t.braided_antipode {
        let hopf_like = HopfData {
            algebra: t.braided_algebra(),
            coalgebra: t.coalgebra().clone(),
            antipode: None,
        };
        report.merge_under("braided-antipode", check_antipode(ctx, &hopf_like, s)?);
    }
    Ok(report)
}
