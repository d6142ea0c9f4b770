//! Curated example algebras and the independent brute-force oracles that
//! anchor the test suites.
//!
//! The manifest covers the cyclic group algebras kℤ/n with bicharacter
//! r-forms (n = 1, 2, 4) and the 4-dimensional Hopf algebra with
//! presentation g² = 1, x² = 0, xg = −gx, Δx = x⊗1 + g⊗x, whose
//! coquasitriangular structures form a one-parameter family r_λ that
//! [`discover_rforms`] finds by exact linear stages.
//!
//! Everything here is a builder or an oracle: builders construct structure
//! constants from presentations; oracles re-derive the same facts by a
//! different route (naive diagram evaluation, literal basis-triple loops) so
//! the optimized checkers always have a second opinion.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::expr::{self, Env, MorphismExpr};
use crate::hopf::{
    check_comodule, is_grouplike, solve_antipode, AlgebraData, CoalgebraData, ComoduleData,
    HopfData, HopfError, ModuleAlgebraData, RForm,
};
use crate::linalg;
use crate::report::{CheckStatus, Report};
use crate::scalar::{FieldCtx, Scalar};
use crate::tensor::{MultilinearMap, Space, TensorError};
use crate::transmutation::build_coadjoint_coaction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZooError {
    /// The supplied table fails the bicharacter laws.
    NotBicharacter { at: (usize, usize, usize) },
    Hopf(HopfError),
    Tensor(TensorError),
}

impl fmt::Display for ZooError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZooError::NotBicharacter { at } => {
                write!(f, "not a bicharacter at indices {at:?}")
            }
            ZooError::Hopf(e) => write!(f, "{e}"),
            ZooError::Tensor(e) => write!(f, "{e}"),
        }
    }
}

impl From<HopfError> for ZooError {
    fn from(e: HopfError) -> ZooError {
        ZooError::Hopf(e)
    }
}

impl From<TensorError> for ZooError {
    fn from(e: TensorError) -> ZooError {
        ZooError::Tensor(e)
    }
}

// --- group algebras ------------------------------------------------------

/// The group algebra kℤ/n with grouplike basis `g^0 … g^{n-1}` and
/// antipode `S(g^i) = g^{-i}`.
pub fn group_algebra(ctx: &FieldCtx, n: usize) -> HopfData {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n)
        .map(|i| {
            if i == 0 {
                "1".to_string()
            } else if i == 1 {
                "g".to_string()
            } else {
                format!("g{i}")
            }
        })
        .collect();
    let h = Space::new("H", labels);
    let mut mul = MultilinearMap::zero(ctx, vec![h.clone(), h.clone()], vec![h.clone()]);
    for i in 0..n {
        for j in 0..n {
            mul.set_entry(&[(i + j) % n], &[i, j], ctx.one());
        }
    }
    let mut unit = MultilinearMap::zero(ctx, vec![], vec![h.clone()]);
    unit.set_entry(&[0], &[], ctx.one());
    let mut comul = MultilinearMap::zero(ctx, vec![h.clone()], vec![h.clone(), h.clone()]);
    let mut counit = MultilinearMap::zero(ctx, vec![h.clone()], vec![]);
    let mut antipode = MultilinearMap::zero(ctx, vec![h.clone()], vec![h.clone()]);
    for i in 0..n {
        comul.set_entry(&[i, i], &[i], ctx.one());
        counit.set_entry(&[], &[i], ctx.one());
        antipode.set_entry(&[(n - i) % n], &[i], ctx.one());
    }
    let algebra = AlgebraData::new(h.clone(), mul, unit).expect("group algebra types");
    let coalgebra = CoalgebraData::new(h, comul, counit).expect("group coalgebra types");
    HopfData::new(algebra, coalgebra, Some(antipode)).expect("group hopf types")
}

/// Validate the bicharacter laws β(i+j, k) = β(i,k)β(j,k) and
/// β(i, j+k) = β(i,j)β(i,k) (indices mod n), with β(0,·) = β(·,0) = 1.
pub fn validate_bicharacter(ctx: &FieldCtx, n: usize, beta: &[Vec<Scalar>]) -> Result<(), ZooError> {
    assert_eq!(beta.len(), n);
    for i in 0..n {
        assert_eq!(beta[i].len(), n);
    }
    for j in 0..n {
        if !beta[0][j].is_one() {
            return Err(ZooError::NotBicharacter { at: (0, j, 0) });
        }
        if !beta[j][0].is_one() {
            return Err(ZooError::NotBicharacter { at: (j, 0, 0) });
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = &beta[(i + j) % n][k];
                let rhs = ctx.mul(&beta[i][k], &beta[j][k]);
                if *lhs != rhs {
                    return Err(ZooError::NotBicharacter { at: (i, j, k) });
                }
                let lhs = &beta[i][(j + k) % n];
                let rhs = ctx.mul(&beta[i][j], &beta[i][k]);
                if *lhs != rhs {
                    return Err(ZooError::NotBicharacter { at: (i, j, k) });
                }
            }
        }
    }
    Ok(())
}

/// kℤ/n together with the coquasitriangular form `r(g^i|g^j) = β(i,j)`.
pub fn group_algebra_with_bicharacter(
    ctx: &FieldCtx,
    n: usize,
    beta: &[Vec<Scalar>],
) -> Result<(HopfData, RForm), ZooError> {
    validate_bicharacter(ctx, n, beta)?;
    let base = group_algebra(ctx, n);
    let h = base.space().clone();
    let mut form = MultilinearMap::zero(ctx, vec![h.clone(), h.clone()], vec![]);
    let mut inverse = MultilinearMap::zero(ctx, vec![h.clone(), h.clone()], vec![]);
    for i in 0..n {
        for j in 0..n {
            form.set_entry(&[], &[i, j], beta[i][j].clone());
            // Pointwise inverse on grouplikes is the convolution inverse.
            let inv = ctx
                .inv(&beta[i][j])
                .map_err(|_| ZooError::NotBicharacter { at: (i, j, j) })?;
            inverse.set_entry(&[], &[i, j], inv);
        }
    }
    Ok((base, RForm::new(form, inverse)))
}

/// The bicharacter β(i,j) = root^{ij} on ℤ/n; `root` must satisfy
/// `root^n = 1`.
pub fn cyclic_bicharacter(ctx: &FieldCtx, n: usize, root: &Scalar) -> Vec<Vec<Scalar>> {
    let mut pow = vec![ctx.one()];
    for _ in 1..=(n * n) {
        let last = pow.last().unwrap();
        pow.push(ctx.mul(last, root));
    }
    assert!(pow[n].is_one(), "root must be an n-th root of unity");
    (0..n)
        .map(|i| (0..n).map(|j| pow[(i * j) % n].clone()).collect())
        .collect()
}

// --- the 4-dimensional Sweedler-type Hopf algebra -------------------------

/// Basis order used throughout: [1, g, x, gx].
pub const SW_ONE: usize = 0;
pub const SW_G: usize = 1;
pub const SW_X: usize = 2;
pub const SW_GX: usize = 3;

/// The 4-dimensional Hopf algebra with g² = 1, x² = 0, xg = −gx,
/// Δg = g⊗g, Δx = x⊗1 + g⊗x, S(g) = g, S(x) = −gx.
pub fn sweedler_hopf(ctx: &FieldCtx) -> HopfData {
    let labels: Vec<String> = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let h = Space::new("H", labels);
    let one = ctx.one();
    let neg = ctx.from_int(-1);

    let mut mul = MultilinearMap::zero(ctx, vec![h.clone(), h.clone()], vec![h.clone()]);
    // Products a·b as (coefficient, basis) pairs; zero products are omitted.
    let table: &[(usize, usize, usize, i64)] = &[
        (SW_ONE, SW_ONE, SW_ONE, 1),
        (SW_ONE, SW_G, SW_G, 1),
        (SW_ONE, SW_X, SW_X, 1),
        (SW_ONE, SW_GX, SW_GX, 1),
        (SW_G, SW_ONE, SW_G, 1),
        (SW_G, SW_G, SW_ONE, 1),
        (SW_G, SW_X, SW_GX, 1),
        (SW_G, SW_GX, SW_X, 1),
        (SW_X, SW_ONE, SW_X, 1),
        (SW_X, SW_G, SW_GX, -1),
        (SW_GX, SW_ONE, SW_GX, 1),
        (SW_GX, SW_G, SW_X, -1),
    ];
    for &(a, b, out, sign) in table {
        mul.set_entry(&[out], &[a, b], ctx.from_int(sign));
    }

    let mut unit = MultilinearMap::zero(ctx, vec![], vec![h.clone()]);
    unit.set_entry(&[SW_ONE], &[], one.clone());

    let mut comul = MultilinearMap::zero(ctx, vec![h.clone()], vec![h.clone(), h.clone()]);
    comul.set_entry(&[SW_ONE, SW_ONE], &[SW_ONE], one.clone());
    comul.set_entry(&[SW_G, SW_G], &[SW_G], one.clone());
    comul.set_entry(&[SW_X, SW_ONE], &[SW_X], one.clone());
    comul.set_entry(&[SW_G, SW_X], &[SW_X], one.clone());
    comul.set_entry(&[SW_GX, SW_G], &[SW_GX], one.clone());
    comul.set_entry(&[SW_ONE, SW_GX], &[SW_GX], one.clone());

    let mut counit = MultilinearMap::zero(ctx, vec![h.clone()], vec![]);
    counit.set_entry(&[], &[SW_ONE], one.clone());
    counit.set_entry(&[], &[SW_G], one.clone());

    let mut antipode = MultilinearMap::zero(ctx, vec![h.clone()], vec![h.clone()]);
    antipode.set_entry(&[SW_ONE], &[SW_ONE], one.clone());
    antipode.set_entry(&[SW_G], &[SW_G], one.clone());
    antipode.set_entry(&[SW_GX], &[SW_X], neg);
    antipode.set_entry(&[SW_X], &[SW_GX], one);

    let algebra = AlgebraData::new(h.clone(), mul, unit).expect("sweedler algebra types");
    let coalgebra = CoalgebraData::new(h, comul, counit).expect("sweedler coalgebra types");
    HopfData::new(algebra, coalgebra, Some(antipode)).expect("sweedler hopf types")
}

// --- r-form discovery by exact linear stages -------------------------------

/// The two sides of each polynomial dual-quasitriangularity identity for a
/// candidate form; unit laws and quasi-commutativity are linear in the form,
/// the hexagon laws are quadratic. Convolution invertibility is an existence
/// statement, not a polynomial one, so it is checked per instance instead.
fn rform_residual_entries(
    ctx: &FieldCtx,
    h: &HopfData,
    form: &MultilinearMap,
) -> Result<Vec<Scalar>, HopfError> {
    let sp = h.space().clone();
    let id = MultilinearMap::identity(ctx, &sp);
    let four = vec![sp.clone(), sp.clone(), sp.clone(), sp.clone()];
    let rr = MultilinearMap::tensor(ctx, form, form);
    let mut out = Vec::new();
    let mut push_diff = |l: &MultilinearMap, r: &MultilinearMap| -> Result<(), HopfError> {
        let d = MultilinearMap::sub(ctx, l, r)?;
        out.extend(d.entries().iter().cloned());
        Ok(())
    };

    // r(ab|c) = r(a|c1) r(b|c2)
    let mul_id = MultilinearMap::tensor(ctx, h.mul(), &id);
    let lhs = MultilinearMap::compose(ctx, form, &mul_id)?;
    let spread = MultilinearMap::tensor_all(ctx, &[&id, &id, h.comul()]);
    let perm = MultilinearMap::permutation(ctx, &four, &[0, 2, 1, 3]);
    let rhs = MultilinearMap::compose_chain(ctx, &[&rr, &perm, &spread])?;
    push_diff(&lhs, &rhs)?;

    // r(a|bc) = r(a1|c) r(a2|b)
    let id_mul = MultilinearMap::tensor(ctx, &id, h.mul());
    let lhs = MultilinearMap::compose(ctx, form, &id_mul)?;
    let spread = MultilinearMap::tensor_all(ctx, &[h.comul(), &id, &id]);
    let perm = MultilinearMap::permutation(ctx, &four, &[0, 3, 1, 2]);
    let rhs = MultilinearMap::compose_chain(ctx, &[&rr, &perm, &spread])?;
    push_diff(&lhs, &rhs)?;

    // b1 a1 r(a2|b2) = r(a1|b1) a2 b2
    let comul2 = MultilinearMap::tensor(ctx, h.comul(), h.comul());
    let perm_l = MultilinearMap::permutation(ctx, &four, &[2, 0, 1, 3]);
    let mul_r = MultilinearMap::tensor(ctx, h.mul(), form);
    let lhs = MultilinearMap::compose_chain(ctx, &[&mul_r, &perm_l, &comul2])?;
    let perm_r = MultilinearMap::permutation(ctx, &four, &[0, 2, 1, 3]);
    let r_mul = MultilinearMap::tensor(ctx, form, h.mul());
    let rhs = MultilinearMap::compose_chain(ctx, &[&r_mul, &perm_r, &comul2])?;
    push_diff(&lhs, &rhs)?;

    // r(1|a) = ε(a) = r(a|1)
    let unit_id = MultilinearMap::tensor(ctx, h.unit(), &id);
    let lhs = MultilinearMap::compose(ctx, form, &unit_id)?;
    push_diff(&lhs, h.counit())?;
    let id_unit = MultilinearMap::tensor(ctx, &id, h.unit());
    let lhs = MultilinearMap::compose(ctx, form, &id_unit)?;
    push_diff(&lhs, h.counit())?;

    Ok(out)
}

/// Discover coquasitriangular forms on `base` by iterated exact linear
/// stages, then instantiate remaining free parameters at `samples` and keep
/// every instance that passes the full [`crate::hopf::check_rform`] suite.
///
/// The solver only performs linear reductions: constraints that are (or
/// become, after substitution) affine in the remaining parameters are
/// solved exactly; genuinely quadratic branches are left to the sampling
/// stage. That is enough to pin the whole r_λ family on the 4-dimensional
/// example and the bicharacter families on group algebras.
pub fn discover_rforms(
    ctx: &FieldCtx,
    base: &HopfData,
    samples: &[Scalar],
) -> Result<Vec<RForm>, ZooError> {
    let dim = base.dim();
    let unknowns = dim * dim;
    let h_sp = base.space().clone();

    // Affine substitution: form = offset + Σ params_k * basis_k.
    let mut offset = vec![ctx.zero(); unknowns];
    let mut basis: Vec<Vec<Scalar>> = (0..unknowns)
        .map(|k| {
            let mut v = vec![ctx.zero(); unknowns];
            v[k] = ctx.one();
            v
        })
        .collect();

    let eval = |point: &[Scalar]| -> Result<Vec<Scalar>, ZooError> {
        let mut form = MultilinearMap::zero(ctx, vec![h_sp.clone(), h_sp.clone()], vec![]);
        for i in 0..dim {
            for j in 0..dim {
                form.set_entry(&[], &[i, j], point[i * dim + j].clone());
            }
        }
        Ok(rform_residual_entries(ctx, base, &form)?)
    };
    let instantiate = |offset: &[Scalar], basis: &[Vec<Scalar>], params: &[Scalar]| {
        let mut point = offset.to_vec();
        for (b, p) in basis.iter().zip(params) {
            for (slot, coeff) in point.iter_mut().zip(b) {
                *slot = ctx.add(slot, &ctx.mul(coeff, p));
            }
        }
        point
    };

    for _round in 0..16 {
        let np = basis.len();
        let zero = vec![ctx.zero(); np];
        let at = |params: &[Scalar]| instantiate(&offset, &basis, params);
        let e0 = eval(&at(&zero))?;
        let m = e0.len();
        let mut e1 = Vec::with_capacity(np);
        let mut e2 = Vec::with_capacity(np);
        for k in 0..np {
            let mut p = zero.clone();
            p[k] = ctx.one();
            e1.push(eval(&at(&p))?);
            p[k] = ctx.from_int(2);
            e2.push(eval(&at(&p))?);
        }
        let mut e11 = Vec::new();
        for k in 0..np {
            for l in k + 1..np {
                let mut p = zero.clone();
                p[k] = ctx.one();
                p[l] = ctx.one();
                e11.push(((k, l), eval(&at(&p))?));
            }
        }

        // Reconstruct each residual entry as c + Σ l_k p_k + Σ q_kl p_k p_l
        // and harvest the ones whose quadratic part vanishes.
        let half = ctx.rational(1, 2);
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        for i in 0..m {
            let c = &e0[i];
            let mut lin = Vec::with_capacity(np);
            let mut qdiag = Vec::with_capacity(np);
            for k in 0..np {
                // p(e_k) = c + l_k + q_kk ; p(2e_k) = c + 2 l_k + 4 q_kk
                let q_kk = ctx.mul(
                    &half,
                    &ctx.add(
                        &ctx.sub(&e2[k][i], &ctx.mul(&ctx.from_int(2), &e1[k][i])),
                        c,
                    ),
                );
                let l_k = ctx.sub(&ctx.sub(&e1[k][i], c), &q_kk);
                qdiag.push(q_kk);
                lin.push(l_k);
            }
            let mut quad_zero = qdiag.iter().all(Scalar::is_zero);
            if quad_zero {
                for ((k, l), vals) in &e11 {
                    // p(e_k + e_l) = c + l_k + l_l + q_kk + q_ll + q_kl
                    let mut expect = ctx.add(c, &lin[*k]);
                    expect = ctx.add(&expect, &lin[*l]);
                    let q_kl = ctx.sub(&vals[i], &expect);
                    if !q_kl.is_zero() {
                        quad_zero = false;
                        break;
                    }
                }
            }
            if quad_zero {
                if lin.iter().all(Scalar::is_zero) {
                    if !c.is_zero() {
                        // 0 = nonzero: no coquasitriangular structure at all.
                        return Ok(Vec::new());
                    }
                } else {
                    rows.push(lin);
                    rhs.push(ctx.neg(c));
                }
            }
        }
        if rows.is_empty() {
            break;
        }
        match linalg::solve_affine(ctx, &rows, &rhs) {
            Err(_) => return Ok(Vec::new()),
            Ok(set) => {
                let new_offset = instantiate(&offset, &basis, &set.particular);
                // Direction vectors are homogeneous combinations of the old
                // basis; the offset does not enter.
                let new_basis: Vec<Vec<Scalar>> = set
                    .nullspace
                    .iter()
                    .map(|dir| {
                        let mut v = vec![ctx.zero(); unknowns];
                        for (b, coeff) in basis.iter().zip(dir) {
                            for (slot, e) in v.iter_mut().zip(b) {
                                *slot = ctx.add(slot, &ctx.mul(e, coeff));
                            }
                        }
                        v
                    })
                    .collect();
                let stalled = new_basis.len() == basis.len() && new_offset == offset;
                offset = new_offset;
                basis = new_basis;
                if stalled {
                    break;
                }
            }
        }
    }

    // Sampling stage: set all remaining parameters to each sample value.
    let mut candidates: Vec<Vec<Scalar>> = Vec::new();
    if basis.is_empty() {
        candidates.push(offset.clone());
    } else {
        for s in samples {
            let params = vec![s.clone(); basis.len()];
            candidates.push(instantiate(&offset, &basis, &params));
        }
    }
    let mut found = Vec::new();
    for point in candidates {
        let mut form = MultilinearMap::zero(ctx, vec![h_sp.clone(), h_sp.clone()], vec![]);
        for i in 0..dim {
            for j in 0..dim {
                form.set_entry(&[], &[i, j], point[i * dim + j].clone());
            }
        }
        let Ok(rform) = RForm::solve(ctx, base, form) else {
            continue;
        };
        if crate::hopf::check_rform(ctx, base, &rform)?.passed() && !found.contains(&rform) {
            found.push(rform);
        }
    }
    Ok(found)
}

/// The coquasitriangular structures r_λ on the Sweedler Hopf algebra,
/// sampled at λ ∈ {0, 1, −1, 2}.
pub fn sweedler_rforms(ctx: &FieldCtx, base: &HopfData) -> Result<Vec<RForm>, ZooError> {
    let samples = [
        ctx.zero(),
        ctx.one(),
        ctx.from_int(-1),
        ctx.from_int(2),
    ];
    discover_rforms(ctx, base, &samples)
}

// --- module algebras -------------------------------------------------------

fn renamed_space(of: &Space, name: &str) -> Space {
    Space::new(name, of.basis_labels().to_vec())
}

/// The ground field as a module algebra: `a.h = ε(h) a` on a 1-dimensional
/// space named `A`.
pub fn trivial_module_algebra(ctx: &FieldCtx, base: &HopfData) -> ModuleAlgebraData {
    let a_sp = Space::new("A", vec!["u".to_string()]);
    let algebra = AlgebraData::ground(ctx, &a_sp);
    let id = MultilinearMap::identity(ctx, &a_sp);
    let action = MultilinearMap::tensor(ctx, &id, base.counit());
    ModuleAlgebraData { algebra, action }
}

/// `H` acting on itself by the right adjoint action `a.h = S(h₁) a h₂`,
/// carried on a renamed copy of the space.
pub fn adjoint_module_algebra(ctx: &FieldCtx, base: &HopfData) -> ModuleAlgebraData {
    let h = base.space().clone();
    let a_sp = renamed_space(&h, "A");
    let id = MultilinearMap::identity(ctx, &h);
    // On H-legs: (a, h) ↦ S(h1) a h2
    let spread = MultilinearMap::tensor(ctx, &id, base.comul());
    let legs = vec![h.clone(), h.clone(), h.clone()];
    let perm = MultilinearMap::permutation(ctx, &legs, &[1, 0, 2]);
    let s_id = MultilinearMap::tensor(ctx, base.antipode(), &id);
    let first = MultilinearMap::compose(ctx, base.mul(), &s_id).expect("adjoint types");
    let first_id = MultilinearMap::tensor(ctx, &first, &id);
    let triple = MultilinearMap::compose(ctx, base.mul(), &first_id).expect("adjoint types");
    let action = MultilinearMap::compose_chain(ctx, &[&triple, &perm, &spread])
        .expect("adjoint action types")
        .reshape(vec![a_sp.clone(), h.clone()], vec![a_sp.clone()]);
    let mul = base
        .mul()
        .reshape(vec![a_sp.clone(), a_sp.clone()], vec![a_sp.clone()]);
    let unit = base.unit().reshape(vec![], vec![a_sp.clone()]);
    let algebra = AlgebraData {
        space: a_sp,
        mul,
        unit,
    };
    ModuleAlgebraData { algebra, action }
}

/// For kℤ/2: A = k[y]/(y² − 1) with g acting by the sign flip y ↦ −y.
pub fn sign_flip_module_algebra(ctx: &FieldCtx, base: &HopfData) -> ModuleAlgebraData {
    assert_eq!(base.dim(), 2, "sign-flip algebra is a kZ/2 example");
    let a_sp = Space::new("A", vec!["1".to_string(), "y".to_string()]);
    let mut mul = MultilinearMap::zero(ctx, vec![a_sp.clone(), a_sp.clone()], vec![a_sp.clone()]);
    for i in 0..2 {
        for j in 0..2 {
            mul.set_entry(&[(i + j) % 2], &[i, j], ctx.one());
        }
    }
    let mut unit = MultilinearMap::zero(ctx, vec![], vec![a_sp.clone()]);
    unit.set_entry(&[0], &[], ctx.one());
    let mut action = MultilinearMap::zero(
        ctx,
        vec![a_sp.clone(), base.space().clone()],
        vec![a_sp.clone()],
    );
    action.set_entry(&[0], &[0, 0], ctx.one());
    action.set_entry(&[1], &[1, 0], ctx.one());
    action.set_entry(&[0], &[0, 1], ctx.one());
    action.set_entry(&[1], &[1, 1], ctx.from_int(-1));
    let algebra = AlgebraData {
        space: a_sp,
        mul,
        unit,
    };
    ModuleAlgebraData { algebra, action }
}

// --- probe comodules -------------------------------------------------------

/// The 1-dimensional comodule `v ↦ v⊗γ` attached to a grouplike γ.
pub fn character_comodule(
    ctx: &FieldCtx,
    base: &HopfData,
    grouplike: &[Scalar],
    name: &str,
) -> ComoduleData {
    let v_sp = Space::new(name, vec!["v".to_string()]);
    let mut coaction = MultilinearMap::zero(
        ctx,
        vec![v_sp.clone()],
        vec![v_sp.clone(), base.space().clone()],
    );
    for (j, c) in grouplike.iter().enumerate() {
        coaction.set_entry(&[0, j], &[0], c.clone());
    }
    ComoduleData {
        space: v_sp,
        coaction,
    }
}

/// A comodule carried on a renamed copy of its space (so that distinct
/// probes never collide in crossing tables).
pub fn renamed_comodule(c: &ComoduleData, name: &str) -> ComoduleData {
    let new_sp = renamed_space(&c.space, name);
    let h = c.coaction.codomain()[1].clone();
    let coaction = c
        .coaction
        .reshape(vec![new_sp.clone()], vec![new_sp.clone(), h]);
    ComoduleData {
        space: new_sp,
        coaction,
    }
}

/// The standard probe set: trivial comodule, one character per non-unit
/// grouplike, the regular comodule, and the coadjoint comodule. Distinct
/// space names throughout.
pub fn probe_set(
    ctx: &FieldCtx,
    base: &HopfData,
    grouplikes: &[Vec<Scalar>],
) -> Result<Vec<ComoduleData>, ZooError> {
    let mut probes = Vec::new();
    let triv_sp = Space::new("triv", vec!["t".to_string()]);
    probes.push(ComoduleData::trivial(ctx, &triv_sp, base));
    for (i, gl) in grouplikes.iter().enumerate() {
        let is_unit = gl[0].is_one() && gl[1..].iter().all(Scalar::is_zero);
        if is_unit {
            continue;
        }
        probes.push(character_comodule(ctx, base, gl, &format!("chi{i}")));
    }
    probes.push(renamed_comodule(&base.regular_comodule(), "Hreg"));
    let coad = build_coadjoint_coaction(ctx, base)?;
    let coad_com = ComoduleData {
        space: base.space().clone(),
        coaction: coad,
    };
    probes.push(renamed_comodule(&coad_com, "Hcoad"));
    Ok(probes)
}

/// Comodule morphisms among the probes: the inclusion of each grouplike
/// character (and of the trivial comodule via the unit) into the regular
/// comodule. Entries are (name, from index, to index, map).
pub fn probe_morphisms(
    ctx: &FieldCtx,
    base: &HopfData,
    grouplikes: &[Vec<Scalar>],
    probes: &[ComoduleData],
) -> Vec<(String, usize, usize, MultilinearMap)> {
    let reg_idx = probes
        .iter()
        .position(|p| p.space.name() == "Hreg")
        .expect("regular probe present");
    let reg_sp = probes[reg_idx].space.clone();
    let mut out = Vec::new();
    for gl in grouplikes {
        let is_unit = gl[0].is_one() && gl[1..].iter().all(Scalar::is_zero);
        // Find the probe carrying this grouplike's coaction.
        let from_idx = if is_unit {
            probes.iter().position(|p| p.space.name() == "triv")
        } else {
            probes.iter().position(|p| {
                p.space.dim() == 1
                    && p.space.name().starts_with("chi")
                    && (0..base.dim()).all(|j| p.coaction.entry(&[0, j], &[0]) == &gl[j])
            })
        };
        let Some(from_idx) = from_idx else { continue };
        let from_sp = probes[from_idx].space.clone();
        let mut map = MultilinearMap::zero(ctx, vec![from_sp.clone()], vec![reg_sp.clone()]);
        for (j, c) in gl.iter().enumerate() {
            map.set_entry(&[j], &[0], c.clone());
        }
        out.push((
            format!("incl-{}", from_sp.name()),
            from_idx,
            reg_idx,
            map,
        ));
    }
    out
}

// --- independent oracles -----------------------------------------------

/// Evaluate both sides with the naive (unplanned) evaluator and compare
/// entrywise; the second opinion used against every optimized check.
pub fn oracle_bruteforce_equation(
    lhs: &MorphismExpr,
    rhs: &MorphismExpr,
    env: &Env,
) -> Result<Report, TensorError> {
    let mut report = Report::new();
    report.push("oracle-equation", expr::oracle_equation(lhs, rhs, env)?);
    Ok(report)
}

/// Literal basis-triple associativity oracle: computes (e_i e_j) e_k and
/// e_i (e_j e_k) by direct structure-constant contraction, never through
/// tensor composition. Returns the first failing triple.
pub fn oracle_assoc_witness(
    ctx: &FieldCtx,
    a: &AlgebraData,
) -> Option<(usize, usize, usize)> {
    let n = a.space.dim();
    let prod = |vec_in: &[Scalar], j: usize| -> Vec<Scalar> {
        // (Σ v_i e_i) · e_j
        let mut out = vec![ctx.zero(); n];
        for (i, v) in vec_in.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (slot, out_c) in out.iter_mut().enumerate() {
                let coeff = a.mul.entry(&[slot], &[i, j]);
                if !coeff.is_zero() {
                    *out_c = ctx.add(out_c, &ctx.mul(v, coeff));
                }
            }
        }
        out
    };
    for i in 0..n {
        for j in 0..n {
            let mut e_i = vec![ctx.zero(); n];
            e_i[i] = ctx.one();
            let ij = prod(&e_i, j);
            for k in 0..n {
                let lhs = prod(&ij, k);
                // e_j e_k first, then left-multiply by e_i columnwise
                let mut e_j = vec![ctx.zero(); n];
                e_j[j] = ctx.one();
                let jk = prod(&e_j, k);
                let mut rhs = vec![ctx.zero(); n];
                for (m, c) in jk.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (slot, out_c) in rhs.iter_mut().enumerate() {
                        let coeff = a.mul.entry(&[slot], &[i, m]);
                        if !coeff.is_zero() {
                            *out_c = ctx.add(out_c, &ctx.mul(c, coeff));
                        }
                    }
                }
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

// --- the manifest ----------------------------------------------------------

/// One named example: a coquasitriangular Hopf algebra with its r-forms,
/// grouplikes, module algebras and probe comodules.
#[derive(Debug, Clone)]
pub struct ZooEntry {
    pub name: String,
    pub ctx: FieldCtx,
    pub hopf: HopfData,
    pub rforms: Vec<RForm>,
    pub grouplikes: Vec<Vec<Scalar>>,
    pub module_algebras: Vec<(String, ModuleAlgebraData)>,
    pub notes: String,
}

impl ZooEntry {
    pub fn probes(&self) -> Result<Vec<ComoduleData>, ZooError> {
        probe_set(&self.ctx, &self.hopf, &self.grouplikes)
    }

    pub fn morphisms(
        &self,
        probes: &[ComoduleData],
    ) -> Vec<(String, usize, usize, MultilinearMap)> {
        probe_morphisms(&self.ctx, &self.hopf, &self.grouplikes, probes)
    }

    pub fn default_module_algebra(&self) -> &ModuleAlgebraData {
        &self.module_algebras[0].1
    }
}

fn basis_vector(ctx: &FieldCtx, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![ctx.zero(); dim];
    v[i] = ctx.one();
    v
}

/// kℤ/n with the bicharacter generated by `root` (an n-th root of unity).
pub fn cyclic_entry(name: &str, n: usize, field_order: u32, root_power: i64) -> ZooEntry {
    let ctx = FieldCtx::new(field_order);
    let root = ctx.zeta_pow(root_power);
    let beta = cyclic_bicharacter(&ctx, n, &root);
    let (hopf, rform) =
        group_algebra_with_bicharacter(&ctx, n, &beta).expect("cyclic bicharacter");
    let grouplikes = (0..n).map(|i| basis_vector(&ctx, n, i)).collect();
    let mut module_algebras = vec![
        ("trivial".to_string(), trivial_module_algebra(&ctx, &hopf)),
        ("adjoint".to_string(), adjoint_module_algebra(&ctx, &hopf)),
    ];
    if n == 2 {
        module_algebras.insert(
            0,
            (
                "sign-flip".to_string(),
                sign_flip_module_algebra(&ctx, &hopf),
            ),
        );
    }
    ZooEntry {
        name: name.to_string(),
        ctx,
        hopf,
        rforms: vec![rform],
        grouplikes,
        module_algebras,
        notes: format!("group algebra kZ/{n} with bicharacter beta(1,1) = zeta^{root_power}"),
    }
}

/// The Sweedler entry, with the full sampled r_λ family.
pub fn sweedler_entry() -> ZooEntry {
    let ctx = FieldCtx::rationals();
    let hopf = sweedler_hopf(&ctx);
    let rforms = sweedler_rforms(&ctx, &hopf).expect("sweedler r-form discovery");
    assert!(
        !rforms.is_empty(),
        "solver bug: the Sweedler algebra admits coquasitriangular structures"
    );
    let grouplikes = vec![
        basis_vector(&ctx, 4, SW_ONE),
        basis_vector(&ctx, 4, SW_G),
    ];
    let module_algebras = vec![
        ("adjoint".to_string(), adjoint_module_algebra(&ctx, &hopf)),
        ("trivial".to_string(), trivial_module_algebra(&ctx, &hopf)),
    ];
    ZooEntry {
        name: "sweedler".to_string(),
        ctx,
        hopf,
        rforms,
        grouplikes,
        module_algebras,
        notes: "4-dim Hopf algebra g^2=1, x^2=0, xg=-gx with the r_lambda family".to_string(),
    }
}

/// The standard manifest: trivial kℤ/1, kℤ/2 with the sign form, kℤ/4 over
/// ℚ(ζ₄), and the Sweedler algebra with its discovered r_λ family.
pub fn standard_manifest() -> Vec<ZooEntry> {
    vec![
        cyclic_entry("trivial", 1, 1, 0),
        cyclic_entry("z2-sign", 2, 1, 1),
        cyclic_entry("z4-zeta", 4, 4, 1),
        sweedler_entry(),
    ]
}

/// Entry names available to the CLI demo command.
pub fn manifest_names() -> Vec<String> {
    standard_manifest().into_iter().map(|e| e.name).collect()
}

/// Structural validation: every piece of an entry passes its checkers.
pub fn validate_entry(entry: &ZooEntry) -> Result<Report, ZooError> {
    let ctx = &entry.ctx;
    let mut report = Report::new();
    report.merge_under("hopf", crate::hopf::check_bialgebra(ctx, &entry.hopf)?);
    if let Some(s) = &entry.hopf.antipode {
        report.merge_under(
            "antipode",
            crate::hopf::check_antipode(ctx, &entry.hopf, s)?,
        );
        let solved = solve_antipode(ctx, &entry.hopf)?;
        report.push(
            "antipode/matches-solved",
            MultilinearMap::equality_check(s, &solved)?,
        );
    }
    for (i, r) in entry.rforms.iter().enumerate() {
        report.merge_under(&format!("rform{i}"), crate::hopf::check_rform(ctx, &entry.hopf, r)?);
    }
    for gl in &entry.grouplikes {
        let ok = is_grouplike(ctx, &entry.hopf, gl);
        report.push(
            "grouplike",
            if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail(crate::report::Witness {
                    out_index: vec![],
                    in_index: vec![],
                    lhs: ctx.zero(),
                    rhs: ctx.one(),
                })
            },
        );
    }
    for (name, ma) in &entry.module_algebras {
        report.merge_under(
            &format!("module-algebra/{name}"),
            crate::hopf::check_module_algebra(ctx, ma, &entry.hopf)?,
        );
    }
    let probes = entry.probes()?;
    for p in &probes {
        report.merge_under(
            &format!("probe/{}", p.space.name()),
            check_comodule(ctx, p, &entry.hopf)?,
        );
    }
    // Probe morphisms must be colinear.
    for (name, from, to, f) in entry.morphisms(&probes) {
        let idh = MultilinearMap::identity(ctx, entry.hopf.space());
        let lhs = MultilinearMap::compose(
            ctx,
            &MultilinearMap::tensor(ctx, &f, &idh),
            &probes[from].coaction,
        )?;
        let rhs = MultilinearMap::compose(ctx, &probes[to].coaction, &f)?;
        report.push(
            format!("morphism-colinear/{name}"),
            MultilinearMap::equality_check(&lhs, &rhs)?,
        );
    }
    Ok(report)
}
