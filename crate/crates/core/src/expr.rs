//! A morphism-expression IR for string diagrams, with a planning evaluator
//! and a naive evaluator kept as an independent oracle.
//!
//! Diagrams are read top to bottom: `Compose(upper, lower)` applies `upper`
//! first. Crossings are not hardwired to one map because the diagrams in
//! scope use three distinct ones — the braiding `c`, its inverse, and a
//! half-braiding `σ` — so a [`Swap`](MorphismExpr::Swap) node names a
//! [`Crossing`] kind and the [`Env`] binds each kind per ordered space pair.
//!
//! The planner only reassociates composition chains (greedy smallest
//! intermediate); over an exact field the result is bit-identical to the
//! naive bottom-up evaluation, and `eval_naive` stays around so tests can
//! hold the planner to that.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::FieldCtx;
use crate::tensor::{signature, MultilinearMap, Space, TensorError};

/// Which crossing a `Swap` node denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Crossing {
    /// The braiding `c_{V,W}: V⊗W → W⊗V` of the ambient braided category.
    Braiding,
    /// The inverse braiding `V⊗W → W⊗V` (inverse of `c_{W,V}`).
    BraidingInv,
    /// A half-braiding `σ_{V,W}: V⊗W → W⊗V`.
    Half,
}

impl Crossing {
    fn label(self) -> &'static str {
        match self {
            Crossing::Braiding => "c",
            Crossing::BraidingInv => "c⁻¹",
            Crossing::Half => "σ",
        }
    }
}

/// Expression tree for a morphism built from named generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismExpr {
    /// A named generator bound in the environment.
    Gen(String),
    /// The identity on a space.
    Id(Space),
    /// `Compose(upper, lower)`: `upper` is applied first (diagram order).
    Compose(Box<MorphismExpr>, Box<MorphismExpr>),
    /// Horizontal juxtaposition.
    Tensor(Box<MorphismExpr>, Box<MorphismExpr>),
    /// A crossing `V⊗W → W⊗V` of the given kind, bound by the environment.
    Swap(Crossing, Space, Space),
}

impl MorphismExpr {
    pub fn gen(name: impl Into<String>) -> MorphismExpr {
        MorphismExpr::Gen(name.into())
    }

    pub fn id(space: &Space) -> MorphismExpr {
        MorphismExpr::Id(space.clone())
    }

    /// Identity on several legs as a tensor of identities.
    pub fn id_on(spaces: &[Space]) -> MorphismExpr {
        let mut it = spaces.iter();
        let first = match it.next() {
            Some(s) => MorphismExpr::id(s),
            None => MorphismExpr::id(&Space::unit()),
        };
        it.fold(first, |acc, s| acc.beside(MorphismExpr::id(s)))
    }

    pub fn swap(kind: Crossing, v: &Space, w: &Space) -> MorphismExpr {
        MorphismExpr::Swap(kind, v.clone(), w.clone())
    }

    /// `self` then `next` (vertical composition in diagram order).
    pub fn then(self, next: MorphismExpr) -> MorphismExpr {
        MorphismExpr::Compose(Box::new(self), Box::new(next))
    }

    /// `self` beside `right` (horizontal tensor).
    pub fn beside(self, right: MorphismExpr) -> MorphismExpr {
        MorphismExpr::Tensor(Box::new(self), Box::new(right))
    }
}

/// Binding table from generator names and crossing slots to tensors.
#[derive(Debug, Clone)]
pub struct Env {
    ctx: FieldCtx,
    gens: BTreeMap<String, MultilinearMap>,
    crossings: BTreeMap<(Crossing, String, String), MultilinearMap>,
}

impl Env {
    pub fn new(ctx: &FieldCtx) -> Env {
        Env {
            ctx: ctx.clone(),
            gens: BTreeMap::new(),
            crossings: BTreeMap::new(),
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn bind(&mut self, name: impl Into<String>, map: MultilinearMap) -> &mut Env {
        self.gens.insert(name.into(), map);
        self
    }

    /// Bind the crossing of `kind` on the ordered pair (v, w). The map must
    /// have type `v⊗w → w⊗v`.
    pub fn bind_crossing(
        &mut self,
        kind: Crossing,
        v: &Space,
        w: &Space,
        map: MultilinearMap,
    ) -> Result<&mut Env, TensorError> {
        let expect_dom = [v.clone(), w.clone()];
        let expect_cod = [w.clone(), v.clone()];
        if map.domain() != expect_dom || map.codomain() != expect_cod {
            return Err(TensorError::TypeMismatch {
                op: "bind_crossing",
                expected: signature(&expect_dom),
                found: map.signature_string(),
            });
        }
        self.crossings
            .insert((kind, v.name().to_string(), w.name().to_string()), map);
        Ok(self)
    }

    pub fn generator(&self, name: &str) -> Option<&MultilinearMap> {
        self.gens.get(name)
    }

    pub fn generators(&self) -> impl Iterator<Item = (&String, &MultilinearMap)> {
        self.gens.iter()
    }

    pub fn crossing(&self, kind: Crossing, v: &Space, w: &Space) -> Option<&MultilinearMap> {
        self.crossings
            .get(&(kind, v.name().to_string(), w.name().to_string()))
    }

    pub fn crossings(&self) -> impl Iterator<Item = (&(Crossing, String, String), &MultilinearMap)> {
        self.crossings.iter()
    }

    fn resolve_swap(
        &self,
        kind: Crossing,
        v: &Space,
        w: &Space,
    ) -> Result<MultilinearMap, TensorError> {
        // A crossing with the unit object is invisible after normalization.
        if v.is_unit() || w.is_unit() {
            let legs = [v.clone(), w.clone()];
            return Ok(MultilinearMap::identity_on(&self.ctx, &legs));
        }
        self.crossing(kind, v, w).cloned().ok_or_else(|| {
            TensorError::UnboundCrossing(alloc::format!(
                "{} on ({}, {})",
                kind.label(),
                v.name(),
                w.name()
            ))
        })
    }
}

/// Infer (domain, codomain) of an expression under an environment, checking
/// well-typedness along the way.
pub fn infer_type(e: &MorphismExpr, env: &Env) -> Result<(Vec<Space>, Vec<Space>), TensorError> {
    match e {
        MorphismExpr::Gen(name) => {
            let map = env
                .generator(name)
                .ok_or_else(|| TensorError::UnboundGenerator(name.clone()))?;
            Ok((map.domain().to_vec(), map.codomain().to_vec()))
        }
        MorphismExpr::Id(s) => {
            let legs = if s.is_unit() {
                vec![Space::unit()]
            } else {
                vec![s.clone()]
            };
            Ok((legs.clone(), legs))
        }
        MorphismExpr::Swap(kind, v, w) => {
            if !(v.is_unit() || w.is_unit()) && env.crossing(*kind, v, w).is_none() {
                return Err(TensorError::UnboundCrossing(alloc::format!(
                    "{} on ({}, {})",
                    kind.label(),
                    v.name(),
                    w.name()
                )));
            }
            let dom: Vec<Space> = [v.clone(), w.clone()]
                .into_iter()
                .filter(|s| !s.is_unit())
                .collect();
            let cod: Vec<Space> = [w.clone(), v.clone()]
                .into_iter()
                .filter(|s| !s.is_unit())
                .collect();
            let norm = |mut legs: Vec<Space>| {
                if legs.is_empty() {
                    legs.push(Space::unit());
                }
                legs
            };
            Ok((norm(dom), norm(cod)))
        }
        MorphismExpr::Compose(upper, lower) => {
            let (u_dom, u_cod) = infer_type(upper, env)?;
            let (l_dom, l_cod) = infer_type(lower, env)?;
            if u_cod != l_dom {
                return Err(TensorError::TypeMismatch {
                    op: "compose",
                    expected: signature(&u_cod),
                    found: signature(&l_dom),
                });
            }
            Ok((u_dom, l_cod))
        }
        MorphismExpr::Tensor(a, b) => {
            let (a_dom, a_cod) = infer_type(a, env)?;
            let (b_dom, b_cod) = infer_type(b, env)?;
            let join = |mut x: Vec<Space>, y: Vec<Space>| {
                x.extend(y);
                let mut real: Vec<Space> = x.into_iter().filter(|s| !s.is_unit()).collect();
                if real.is_empty() {
                    real.push(Space::unit());
                }
                real
            };
            Ok((join(a_dom, b_dom), join(a_cod, b_cod)))
        }
    }
}

/// Naive bottom-up evaluation, exactly following the tree shape. This is the
/// oracle the planner is checked against.
pub fn eval_naive(e: &MorphismExpr, env: &Env) -> Result<MultilinearMap, TensorError> {
    let ctx = &env.ctx;
    match e {
        MorphismExpr::Gen(name) => env
            .generator(name)
            .cloned()
            .ok_or_else(|| TensorError::UnboundGenerator(name.clone())),
        MorphismExpr::Id(s) => Ok(MultilinearMap::identity(ctx, s)),
        MorphismExpr::Swap(kind, v, w) => env.resolve_swap(*kind, v, w),
        MorphismExpr::Compose(upper, lower) => {
            let u = eval_naive(upper, env)?;
            let l = eval_naive(lower, env)?;
            MultilinearMap::compose(ctx, &l, &u)
        }
        MorphismExpr::Tensor(a, b) => {
            let a = eval_naive(a, env)?;
            let b = eval_naive(b, env)?;
            Ok(MultilinearMap::tensor(ctx, &a, &b))
        }
    }
}

/// Planned evaluation: flattens composition chains and contracts them
/// greedily, smallest intermediate first. Entrywise identical to
/// [`eval_naive`] — associativity is exact here — just cheaper on long
/// chains.
pub fn eval_expr(e: &MorphismExpr, env: &Env) -> Result<MultilinearMap, TensorError> {
    // Type-check up front so error reporting does not depend on plan order.
    infer_type(e, env)?;
    eval_planned(e, env)
}

fn eval_planned(e: &MorphismExpr, env: &Env) -> Result<MultilinearMap, TensorError> {
    let ctx = &env.ctx;
    match e {
        MorphismExpr::Compose(..) => {
            let mut stages = Vec::new();
            collect_chain(e, &mut stages);
            let mut maps = Vec::with_capacity(stages.len());
            for stage in stages {
                maps.push(eval_planned(stage, env)?);
            }
            contract_chain(ctx, maps)
        }
        MorphismExpr::Tensor(a, b) => {
            let a = eval_planned(a, env)?;
            let b = eval_planned(b, env)?;
            Ok(MultilinearMap::tensor(ctx, &a, &b))
        }
        _ => eval_naive(e, env),
    }
}

/// Flatten nested compositions into application order (first applied first).
fn collect_chain<'a>(e: &'a MorphismExpr, out: &mut Vec<&'a MorphismExpr>) {
    match e {
        MorphismExpr::Compose(upper, lower) => {
            collect_chain(upper, out);
            collect_chain(lower, out);
        }
        other => out.push(other),
    }
}

/// Greedy chain contraction: repeatedly compose the adjacent pair whose
/// product has the fewest entries.
fn contract_chain(
    ctx: &FieldCtx,
    mut maps: Vec<MultilinearMap>,
) -> Result<MultilinearMap, TensorError> {
    assert!(!maps.is_empty());
    while maps.len() > 1 {
        let mut best = 0;
        let mut best_cost = usize::MAX;
        for i in 0..maps.len() - 1 {
            // maps[i] applied before maps[i+1]; product is maps[i+1] ∘ maps[i].
            let cost = maps[i + 1].out_size() * maps[i].in_size();
            if cost < best_cost {
                best_cost = cost;
                best = i;
            }
        }
        let second = maps.remove(best + 1);
        let first = &maps[best];
        maps[best] = MultilinearMap::compose(ctx, &second, first)?;
    }
    Ok(maps.pop().expect("nonempty chain"))
}

/// Compare two expressions entrywise using the naive evaluator only; this is
/// the independent second opinion used against every optimized check.
pub fn oracle_equation(
    lhs: &MorphismExpr,
    rhs: &MorphismExpr,
    env: &Env,
) -> Result<crate::report::CheckStatus, TensorError> {
    let l = eval_naive(lhs, env)?;
    let r = eval_naive(rhs, env)?;
    MultilinearMap::equality_check(&l, &r)
}

// --- deterministic expression generator -------------------------------

/// SplitMix64: tiny deterministic RNG so randomized suites reproduce
/// bit-for-bit across platforms.
#[derive(Debug, Clone)]
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        (self.next_u64() % u64::from(den)) < u64::from(num)
    }
}

/// Generate a random well-typed expression over the environment by stacking
/// layers: each layer tiles the current output legs with generators, bound
/// crossings and identities whose domains fit.
pub fn random_well_typed(
    env: &Env,
    rng: &mut SplitMix64,
    layers: usize,
) -> Result<MorphismExpr, TensorError> {
    let mut atoms: Vec<(MorphismExpr, Vec<Space>, Vec<Space>)> = Vec::new();
    for (name, map) in env.generators() {
        atoms.push((
            MorphismExpr::gen(name.clone()),
            map.domain().to_vec(),
            map.codomain().to_vec(),
        ));
    }
    for ((kind, _, _), map) in env.crossings() {
        let e = MorphismExpr::Swap(
            *kind,
            map.domain()[0].clone(),
            map.domain()[1].clone(),
        );
        atoms.push((e, map.domain().to_vec(), map.codomain().to_vec()));
    }
    assert!(!atoms.is_empty(), "environment has no generators");

    // Seed row: a random atom.
    let (seed_expr, _, mut legs) = atoms[rng.below(atoms.len())].clone();
    let mut expr = seed_expr;
    for _ in 0..layers {
        let (layer, next_legs) = random_layer(&atoms, &legs, rng);
        expr = expr.then(layer);
        legs = next_legs;
    }
    infer_type(&expr, env)?;
    Ok(expr)
}

/// Tile `legs` with atoms: at each position either apply an atom whose
/// domain matches the next legs or pass the leg through an identity.
/// Unit-domain atoms (states such as a unit η) may be spliced in once.
fn random_layer(
    atoms: &[(MorphismExpr, Vec<Space>, Vec<Space>)],
    legs: &[Space],
    rng: &mut SplitMix64,
) -> (MorphismExpr, Vec<Space>) {
    let mut pieces: Vec<MorphismExpr> = Vec::new();
    let mut out_legs: Vec<Space> = Vec::new();
    let mut spliced_state = false;
    let mut i = 0;
    while i < legs.len() {
        if !spliced_state && rng.chance(1, 8) {
            let states: Vec<&(MorphismExpr, Vec<Space>, Vec<Space>)> = atoms
                .iter()
                .filter(|(_, dom, _)| dom.len() == 1 && dom[0].is_unit())
                .collect();
            if !states.is_empty() {
                let (e, _, cod) = states[rng.below(states.len())];
                pieces.push(e.clone());
                out_legs.extend(cod.iter().cloned().filter(|s| !s.is_unit()));
                spliced_state = true;
                continue;
            }
            spliced_state = true;
        }
        let fits: Vec<&(MorphismExpr, Vec<Space>, Vec<Space>)> = atoms
            .iter()
            .filter(|(_, dom, _)| {
                !dom[0].is_unit() && dom.len() <= legs.len() - i && dom[..] == legs[i..i + dom.len()]
            })
            .collect();
        if !fits.is_empty() && rng.chance(2, 3) {
            let (e, dom, cod) = fits[rng.below(fits.len())];
            pieces.push(e.clone());
            out_legs.extend(cod.iter().cloned().filter(|s| !s.is_unit()));
            i += dom.len();
        } else {
            pieces.push(MorphismExpr::id(&legs[i]));
            out_legs.push(legs[i].clone());
            i += 1;
        }
    }
    if out_legs.is_empty() {
        out_legs.push(Space::unit());
    }
    let mut it = pieces.into_iter();
    let first = it.next().expect("layer has at least one piece");
    let layer = it.fold(first, |acc, p| acc.beside(p));
    (layer, out_legs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (FieldCtx, Env, Space) {
        let ctx = FieldCtx::rationals();
        let v = Space::new("V", vec!["a".into(), "b".into()]);
        let mut env = Env::new(&ctx);
        let f = MultilinearMap::from_fn(&ctx, vec![v.clone()], vec![v.clone()], |o, i| {
            ctx.from_int((2 * o[0] + i[0] + 1) as i64)
        });
        let g = MultilinearMap::from_fn(
            &ctx,
            vec![v.clone(), v.clone()],
            vec![v.clone()],
            |o, i| ctx.from_int((o[0] + i[0] * 2 + i[1]) as i64),
        );
        env.bind("f", f);
        env.bind("g", g);
        env.bind_crossing(
            Crossing::Braiding,
            &v,
            &v,
            MultilinearMap::transposition(&ctx, &v, &v),
        )
        .unwrap();
        (ctx, env, v)
    }

    #[test]
    fn gen_evaluates_to_bound_map() {
        let (_, env, _) = setup();
        let m = eval_expr(&MorphismExpr::gen("f"), &env).unwrap();
        assert_eq!(&m, env.generator("f").unwrap());
    }

    #[test]
    fn unbound_generator_errors() {
        let (_, env, _) = setup();
        assert_eq!(
            eval_expr(&MorphismExpr::gen("nope"), &env),
            Err(TensorError::UnboundGenerator("nope".into()))
        );
    }

    #[test]
    fn compose_of_identities_is_identity() {
        let (ctx, env, v) = setup();
        let e = MorphismExpr::id(&v).then(MorphismExpr::id(&v));
        assert_eq!(
            eval_expr(&e, &env).unwrap(),
            MultilinearMap::identity(&ctx, &v)
        );
    }

    #[test]
    fn interchange_law() {
        let (_, env, v) = setup();
        // (f⊗f) ; (f⊗f) == (f;f) ⊗ (f;f)
        let ff = MorphismExpr::gen("f").beside(MorphismExpr::gen("f"));
        let lhs = ff.clone().then(ff);
        let fsq = MorphismExpr::gen("f").then(MorphismExpr::gen("f"));
        let rhs = fsq.clone().beside(fsq);
        let _ = v;
        let l = eval_expr(&lhs, &env).unwrap();
        let r = eval_expr(&rhs, &env).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn planner_matches_naive_on_random_expressions() {
        let (_, env, _) = setup();
        let mut rng = SplitMix64::new(0xbead);
        for i in 0..100 {
            let layers = 1 + rng.below(4);
            let e = random_well_typed(&env, &mut rng, layers).unwrap();
            let planned = eval_expr(&e, &env).unwrap();
            let naive = eval_naive(&e, &env).unwrap();
            assert_eq!(planned, naive, "expression #{i}: {e:?}");
        }
    }

    #[test]
    fn ill_typed_composition_is_rejected() {
        let (_, env, v) = setup();
        // g: V⊗V→V cannot follow f: V→V directly leg-for-leg.
        let e = MorphismExpr::gen("g").then(MorphismExpr::gen("g"));
        assert!(matches!(
            eval_expr(&e, &env),
            Err(TensorError::TypeMismatch { .. })
        ));
        let ok = MorphismExpr::gen("g").then(MorphismExpr::gen("f"));
        let _ = v;
        assert!(eval_expr(&ok, &env).is_ok());
    }
}
