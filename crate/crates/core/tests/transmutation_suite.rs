//! Transmutation against hand-derived expansions and the full checker
//! bundle on the zoo examples.

use braidcalc_core::hopf::check_comodule;
use braidcalc_core::transmutation::{
    build_coadjoint_coaction, build_half_braiding, check_hit_erratum, check_transmutation,
    transmute,
};
use braidcalc_core::zoo::{self, SW_G, SW_GX, SW_ONE, SW_X};
use braidcalc_core::{FieldCtx, MultilinearMap};

#[test]
fn cocommutative_collapse_on_z2() {
    // For a group algebra with bicharacter r the transmuted product is the
    // original product and the coadjoint coaction is trivial on grouplikes.
    let entry = zoo::standard_manifest()
        .into_iter()
        .find(|e| e.name == "z2-sign")
        .unwrap();
    let ctx = &entry.ctx;
    let t = transmute(ctx, &entry.hopf, &entry.rforms[0]).unwrap();
    assert_eq!(
        MultilinearMap::maps_equal(&t.bullet, entry.hopf.mul()).unwrap(),
        None,
        "bullet == mul on kZ/2"
    );
    for i in 0..2 {
        // coad(g^i) = g^i ⊗ 1
        for j in 0..2 {
            for k in 0..2 {
                let expect = if j == i && k == 0 { ctx.one() } else { ctx.zero() };
                assert_eq!(*t.coad.entry(&[j, k], &[i]), expect);
            }
        }
    }
}

#[test]
fn coadjoint_coaction_of_sweedler_x_matches_hand_expansion() {
    // coad(x) = x⊗g + g⊗gx − 1⊗gx  from Δ²x = x⊗1⊗1 + g⊗x⊗1 + g⊗g⊗x
    // and S(x) = −gx.
    let ctx = FieldCtx::rationals();
    let h = zoo::sweedler_hopf(&ctx);
    let coad = build_coadjoint_coaction(&ctx, &h).unwrap();
    let mut expected = MultilinearMap::zero(
        &ctx,
        coad.domain().to_vec(),
        coad.codomain().to_vec(),
    );
    expected.set_entry(&[SW_X, SW_G], &[SW_X], ctx.one());
    expected.set_entry(&[SW_G, SW_GX], &[SW_X], ctx.one());
    expected.set_entry(&[SW_ONE, SW_GX], &[SW_X], ctx.from_int(-1));
    for out0 in 0..4 {
        for out1 in 0..4 {
            assert_eq!(
                coad.entry(&[out0, out1], &[SW_X]),
                expected.entry(&[out0, out1], &[SW_X]),
                "coad(x) at ({out0},{out1})"
            );
        }
    }
    // coad(gx) = gx⊗g − g⊗gx + 1⊗gx
    assert!(coad.entry(&[SW_GX, SW_G], &[SW_GX]).is_one());
    assert_eq!(*coad.entry(&[SW_G, SW_GX], &[SW_GX]), ctx.from_int(-1));
    assert!(coad.entry(&[SW_ONE, SW_GX], &[SW_GX]).is_one());
    // coad is itself a comodule structure.
    let com = braidcalc_core::hopf::ComoduleData {
        space: h.space().clone(),
        coaction: coad,
    };
    assert!(check_comodule(&ctx, &com, &h).unwrap().passed());
}

#[test]
fn sweedler_bullet_matches_hand_expansion() {
    // With the r_λ family: g•g = 1, g•x = gx = x•g, x•x = λ(1−g).
    let ctx = FieldCtx::rationals();
    let h = zoo::sweedler_hopf(&ctx);
    let rforms = zoo::sweedler_rforms(&ctx, &h).unwrap();
    assert!(!rforms.is_empty());
    for r in &rforms {
        let lambda = r.form.entry(&[], &[SW_X, SW_X]).clone();
        let t = transmute(&ctx, &h, r).unwrap();
        // g•g = 1
        assert!(t.bullet.entry(&[SW_ONE], &[SW_G, SW_G]).is_one());
        // g•x = gx and x•g = gx (while x·g = −gx for the original product)
        assert!(t.bullet.entry(&[SW_GX], &[SW_G, SW_X]).is_one());
        assert!(t.bullet.entry(&[SW_GX], &[SW_X, SW_G]).is_one());
        // x•x = λ(1 − g)
        assert_eq!(*t.bullet.entry(&[SW_ONE], &[SW_X, SW_X]), lambda);
        assert_eq!(
            *t.bullet.entry(&[SW_G], &[SW_X, SW_X]),
            ctx.neg(&lambda)
        );
    }
}

#[test]
fn discovered_rforms_have_forced_sign_and_lambda_structure() {
    let ctx = FieldCtx::rationals();
    let h = zoo::sweedler_hopf(&ctx);
    let rforms = zoo::sweedler_rforms(&ctx, &h).unwrap();
    // Samples {0, 1, -1, 2} all survive: four distinct forms.
    assert_eq!(rforms.len(), 4);
    for r in &rforms {
        // Quasi-commutativity with xg = −gx forces r(g|g) = −1.
        assert_eq!(*r.form.entry(&[], &[SW_G, SW_G]), ctx.from_int(-1));
        assert!(r.form.entry(&[], &[SW_G, SW_X]).is_zero());
        assert!(r.form.entry(&[], &[SW_X, SW_G]).is_zero());
        let lambda = r.form.entry(&[], &[SW_X, SW_X]).clone();
        // r(gx|x) = −λ, r(x|gx) = λ, r(gx|gx) = λ.
        assert_eq!(*r.form.entry(&[], &[SW_GX, SW_X]), ctx.neg(&lambda));
        assert_eq!(*r.form.entry(&[], &[SW_X, SW_GX]), lambda);
        assert_eq!(*r.form.entry(&[], &[SW_GX, SW_GX]), lambda);
    }
    // The λ = 0 member vanishes on all terms involving x.
    let zero_member = rforms
        .iter()
        .find(|r| r.form.entry(&[], &[SW_X, SW_X]).is_zero())
        .expect("lambda = 0 member");
    for i in [SW_X, SW_GX] {
        for j in 0..4 {
            assert!(zero_member.form.entry(&[], &[i, j]).is_zero());
            assert!(zero_member.form.entry(&[], &[j, i]).is_zero());
        }
    }
    // Discovery is idempotent.
    let again = zoo::sweedler_rforms(&ctx, &h).unwrap();
    assert_eq!(rforms.len(), again.len());
    for (a, b) in rforms.iter().zip(&again) {
        assert_eq!(
            MultilinearMap::maps_equal(&a.form, &b.form).unwrap(),
            None
        );
    }
}

#[test]
fn full_transmutation_checks_pass_on_z2() {
    let entry = zoo::standard_manifest()
        .into_iter()
        .find(|e| e.name == "z2-sign")
        .unwrap();
    let ctx = &entry.ctx;
    let t = transmute(ctx, &entry.hopf, &entry.rforms[0]).unwrap();
    let probes = entry.probes().unwrap();
    let report = check_transmutation(ctx, &t, &probes).unwrap();
    assert!(report.passed(), "failures:\n{report}");
    // Braided antipode on the group algebra is the ordinary antipode.
    assert_eq!(
        MultilinearMap::maps_equal(t.braided_antipode(), entry.hopf.antipode()).unwrap(),
        None
    );
}

#[test]
fn full_transmutation_checks_pass_on_sweedler_family() {
    let entry = zoo::standard_manifest()
        .into_iter()
        .find(|e| e.name == "sweedler")
        .unwrap();
    let ctx = &entry.ctx;
    let probes = entry.probes().unwrap();
    for (i, r) in entry.rforms.iter().enumerate() {
        let t = transmute(ctx, &entry.hopf, r).unwrap();
        let report = check_transmutation(ctx, &t, &probes).unwrap();
        assert!(report.passed(), "r-form #{i} failures:\n{report}");
    }
}

#[test]
fn sigma_equals_plain_transposition_on_trivial_probe() {
    let entry = zoo::standard_manifest()
        .into_iter()
        .find(|e| e.name == "sweedler")
        .unwrap();
    let ctx = &entry.ctx;
    let t = transmute(ctx, &entry.hopf, &entry.rforms[0]).unwrap();
    let probes = entry.probes().unwrap();
    let triv = probes.iter().find(|p| p.space.name() == "triv").unwrap();
    let sigma = build_half_braiding(ctx, &t, triv).unwrap();
    let flip = MultilinearMap::transposition(ctx, t.space(), &triv.space);
    assert_eq!(MultilinearMap::maps_equal(&sigma, &flip).unwrap(), None);
}

#[test]
fn hit_erratum_fixed_reading_wins() {
    // The σ-consistent indexing reproduces the half-braiding on every
    // probe; the literal repair of the displayed formula does not (it
    // disagrees as soon as λ ≠ 0 brings the x-terms into play).
    let entry = zoo::standard_manifest()
        .into_iter()
        .find(|e| e.name == "sweedler")
        .unwrap();
    let ctx = &entry.ctx;
    let probes = entry.probes().unwrap();
    let nonzero = entry
        .rforms
        .iter()
        .find(|r| !r.form.entry(&[], &[SW_X, SW_X]).is_zero())
        .expect("a member with lambda != 0");
    let t = transmute(ctx, &entry.hopf, nonzero).unwrap();
    let outcomes = check_hit_erratum(ctx, &t, &probes).unwrap();
    assert!(outcomes.iter().all(|(fixed, _)| *fixed));
    assert!(
        outcomes.iter().any(|(_, literal)| !*literal),
        "the literal reading should fail somewhere on a lambda != 0 form"
    );
}
