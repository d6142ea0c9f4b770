//! Structure-constant tensors: multilinear maps between tensor products of
//! based vector spaces.
//!
//! A [`MultilinearMap`] stores a dense array of [`Scalar`] entries indexed by
//! a codomain multi-index and a domain multi-index, both flattened
//! lexicographically (first leg slowest). Dimensions in this crate are tiny
//! (≤ 16 per leg, a handful of legs), so dense storage wins over any sparse
//! scheme; composition still skips zero entries, which is what keeps the
//! 16-dimensional smash-product checks fast, since structure constants are
//! mostly zero.
//!
//! The unit object is the distinguished 1-dimensional space [`Space::unit`];
//! leg lists are kept normalized: unit legs are stripped, and an empty list
//! is represented by a single unit leg so indexing stays total.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::report::{CheckStatus, Witness};
use crate::scalar::{FieldCtx, Scalar};

/// A based vector space: a name, a dimension, and one label per basis vector.
///
/// Cloning is cheap (shared payload). Equality is structural on name,
/// dimension and labels, which is what typed composition compares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Space(Arc<SpaceData>);

#[derive(Debug, PartialEq, Eq)]
struct SpaceData {
    name: String,
    basis: Vec<String>,
}

impl Space {
    pub fn new(name: impl Into<String>, basis: Vec<String>) -> Space {
        let name = name.into();
        assert!(!basis.is_empty(), "space {name} must have dim >= 1");
        let mut seen = basis.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), basis.len(), "basis labels of {name} not distinct");
        Space(Arc::new(SpaceData { name, basis }))
    }

    /// Space with basis labels `e0, e1, …`.
    pub fn anonymous(name: impl Into<String>, dim: usize) -> Space {
        let labels = (0..dim).map(|i| format!("e{i}")).collect();
        Space::new(name, labels)
    }

    /// The unit object: the ground field as a 1-dimensional space.
    pub fn unit() -> Space {
        Space::new("I", vec!["*".to_string()])
    }

    pub fn is_unit(&self) -> bool {
        self.0.name == "I" && self.0.basis.len() == 1
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.0.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.basis[i]
    }

    /// The tensor-product space of `factors`, with paired basis labels.
    /// Unit factors are skipped; an empty product is the unit space.
    pub fn product(factors: &[Space]) -> Space {
        let real: Vec<&Space> = factors.iter().filter(|s| !s.is_unit()).collect();
        match real.len() {
            0 => Space::unit(),
            1 => real[0].clone(),
            _ => {
                let name = real
                    .iter()
                    .map(|s| s.name().to_string())
                    .collect::<Vec<_>>()
                    .join("⊗");
                let mut labels = vec![String::new()];
                for s in &real {
                    let mut next = Vec::with_capacity(labels.len() * s.dim());
                    for prefix in &labels {
                        for l in s.basis_labels() {
                            if prefix.is_empty() {
                                next.push(l.clone());
                            } else {
                                next.push(format!("{prefix}⊗{l}"));
                            }
                        }
                    }
                    labels = next;
                }
                Space::new(name, labels)
            }
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Errors from tensor construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TensorError {
    TypeMismatch {
        op: &'static str,
        expected: String,
        found: String,
    },
    UnboundGenerator(String),
    UnboundCrossing(String),
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::TypeMismatch {
                op,
                expected,
                found,
            } => write!(f, "{op}: type mismatch, expected {expected}, found {found}"),
            TensorError::UnboundGenerator(name) => write!(f, "unbound generator {name:?}"),
            TensorError::UnboundCrossing(name) => write!(f, "unbound crossing {name}"),
        }
    }
}

pub(crate) fn signature(spaces: &[Space]) -> String {
    if spaces.is_empty() {
        return "I".to_string();
    }
    spaces
        .iter()
        .map(|s| format!("{}[{}]", s.name(), s.dim()))
        .collect::<Vec<_>>()
        .join("⊗")
}

fn total_dim(spaces: &[Space]) -> usize {
    spaces.iter().map(Space::dim).product()
}

pub(crate) fn flatten_index(multi: &[usize], spaces: &[Space]) -> usize {
    debug_assert_eq!(multi.len(), spaces.len());
    let mut flat = 0;
    for (i, s) in multi.iter().zip(spaces) {
        debug_assert!(*i < s.dim());
        flat = flat * s.dim() + i;
    }
    flat
}

pub(crate) fn unflatten_index(mut flat: usize, spaces: &[Space]) -> Vec<usize> {
    let mut multi = vec![0; spaces.len()];
    for (slot, s) in multi.iter_mut().zip(spaces).rev() {
        *slot = flat % s.dim();
        flat /= s.dim();
    }
    multi
}

/// A linear map `⊗ domain → ⊗ codomain` given by its structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearMap {
    domain: Vec<Space>,
    codomain: Vec<Space>,
    /// Row-major: `entries[row * in_size + col]` with `row` the flattened
    /// codomain multi-index and `col` the flattened domain multi-index.
    entries: Vec<Scalar>,
}

fn normalize_legs(spaces: Vec<Space>) -> Vec<Space> {
    let mut real: Vec<Space> = spaces.into_iter().filter(|s| !s.is_unit()).collect();
    if real.is_empty() {
        real.push(Space::unit());
    }
    real
}

impl MultilinearMap {
    /// The zero map. Unit legs in the given lists are normalized away.
    pub fn zero(ctx: &FieldCtx, domain: Vec<Space>, codomain: Vec<Space>) -> MultilinearMap {
        let domain = normalize_legs(domain);
        let codomain = normalize_legs(codomain);
        let size = total_dim(&domain) * total_dim(&codomain);
        MultilinearMap {
            domain,
            codomain,
            entries: vec![ctx.zero(); size],
        }
    }

    /// Build entrywise from a function of (codomain multi-index, domain
    /// multi-index). Indices refer to the normalized leg lists.
    pub fn from_fn(
        ctx: &FieldCtx,
        domain: Vec<Space>,
        codomain: Vec<Space>,
        mut f: impl FnMut(&[usize], &[usize]) -> Scalar,
    ) -> MultilinearMap {
        let mut map = MultilinearMap::zero(ctx, domain, codomain);
        let in_size = map.in_size();
        let out_size = map.out_size();
        for row in 0..out_size {
            let out_multi = unflatten_index(row, &map.codomain);
            for col in 0..in_size {
                let in_multi = unflatten_index(col, &map.domain);
                let v = f(&out_multi, &in_multi);
                ctx.ensure_member(&v).expect("entry from foreign field");
                map.entries[row * in_size + col] = v;
            }
        }
        map
    }

    pub fn domain(&self) -> &[Space] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Space] {
        &self.codomain
    }

    pub fn in_size(&self) -> usize {
        total_dim(&self.domain)
    }

    pub fn out_size(&self) -> usize {
        total_dim(&self.codomain)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn entry(&self, out_multi: &[usize], in_multi: &[usize]) -> &Scalar {
        let row = flat_checked(out_multi, &self.codomain);
        let col = flat_checked(in_multi, &self.domain);
        &self.entries[row * self.in_size() + col]
    }

    pub fn entry_flat(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.in_size() + col]
    }

    pub fn set_entry(&mut self, out_multi: &[usize], in_multi: &[usize], value: Scalar) {
        let row = flat_checked(out_multi, &self.codomain);
        let col = flat_checked(in_multi, &self.domain);
        let in_size = self.in_size();
        self.entries[row * in_size + col] = value;
    }

    /// Add `value` to an entry (convenient for building sums of elementary
    /// tensors such as Δx = x⊗1 + g⊗x).
    pub fn add_entry(&mut self, ctx: &FieldCtx, out: &[usize], in_: &[usize], value: &Scalar) {
        let row = flat_checked(out, &self.codomain);
        let col = flat_checked(in_, &self.domain);
        let in_size = self.in_size();
        let slot = &mut self.entries[row * in_size + col];
        *slot = ctx.add(slot, value);
    }

    pub fn signature_string(&self) -> String {
        format!(
            "{} -> {}",
            signature(&self.domain),
            signature(&self.codomain)
        )
    }

    /// The identity on one space.
    pub fn identity(ctx: &FieldCtx, space: &Space) -> MultilinearMap {
        MultilinearMap::identity_on(ctx, &[space.clone()])
    }

    /// The identity on a list of legs.
    pub fn identity_on(ctx: &FieldCtx, spaces: &[Space]) -> MultilinearMap {
        let spaces = normalize_legs(spaces.to_vec());
        let n = total_dim(&spaces);
        let mut map = MultilinearMap::zero(ctx, spaces.clone(), spaces);
        for i in 0..n {
            map.entries[i * n + i] = ctx.one();
        }
        map
    }

    /// The permutation map `⊗ spaces → ⊗ spaces[perm]`, where `perm[j]` is
    /// the input leg landing in output position `j`.
    pub fn permutation(ctx: &FieldCtx, spaces: &[Space], perm: &[usize]) -> MultilinearMap {
        assert_eq!(spaces.len(), perm.len());
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(!seen[p], "not a permutation");
            seen[p] = true;
        }
        let codomain: Vec<Space> = perm.iter().map(|&p| spaces[p].clone()).collect();
        let domain = spaces.to_vec();
        let mut map = MultilinearMap::zero(ctx, domain.clone(), codomain.clone());
        let in_size_n = map.in_size();
        for col in 0..total_dim(&domain) {
            let in_multi = unflatten_index(col, &domain);
            let out_multi: Vec<usize> = perm.iter().map(|&p| in_multi[p]).collect();
            let col_n = project_index(&in_multi, &domain);
            let row_n = project_index(&out_multi, &codomain);
            map.entries[row_n * in_size_n + col_n] = ctx.one();
        }
        map
    }

    /// The plain transposition `V ⊗ W → W ⊗ V`.
    pub fn transposition(ctx: &FieldCtx, v: &Space, w: &Space) -> MultilinearMap {
        MultilinearMap::permutation(ctx, &[v.clone(), w.clone()], &[1, 0])
    }

    /// Rearrange the output legs: output leg `j` of the result is output leg
    /// `perm[j]` of `self`. Equivalent to composing with the corresponding
    /// permutation map on the left, but without materializing it — the
    /// materialized matrix would dwarf everything else on 5- and 6-leg
    /// intermediates.
    pub fn permute_codomain(&self, ctx: &FieldCtx, perm: &[usize]) -> MultilinearMap {
        assert_eq!(perm.len(), self.codomain.len());
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(!seen[p], "not a permutation");
            seen[p] = true;
        }
        let new_cod: Vec<Space> = perm.iter().map(|&p| self.codomain[p].clone()).collect();
        let in_size = self.in_size();
        let mut out = MultilinearMap::zero(ctx, self.domain.clone(), new_cod.clone());
        for (flat, e) in self.entries.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let row = flat / in_size;
            let col = flat % in_size;
            let old_multi = unflatten_index(row, &self.codomain);
            let new_multi: Vec<usize> = perm.iter().map(|&p| old_multi[p]).collect();
            let new_row = flatten_index(&new_multi, &new_cod);
            out.entries[new_row * in_size + col] = e.clone();
        }
        out
    }

    /// Composition `f ∘ g` (apply `g` first). Requires
    /// `codomain(g) = domain(f)` as ordered space lists.
    pub fn compose(
        ctx: &FieldCtx,
        f: &MultilinearMap,
        g: &MultilinearMap,
    ) -> Result<MultilinearMap, TensorError> {
        if f.domain != g.codomain {
            return Err(TensorError::TypeMismatch {
                op: "compose",
                expected: signature(&f.domain),
                found: signature(&g.codomain),
            });
        }
        let shared = f.in_size();
        let rows = f.out_size();
        let cols = g.in_size();
        let mut out = MultilinearMap::zero(ctx, g.domain.clone(), f.codomain.clone());
        // True sparse product: index nonzeros of f by shared index and of g
        // by row, so the work is Σ_k nnz(f[·,k]) · nnz(g[k,·]). Structure
        // constants are mostly zero, so this is what keeps the
        // 16-dimensional brute-force checks fast.
        let mut f_by_k: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); shared];
        for row in 0..rows {
            for k in 0..shared {
                let fv = &f.entries[row * shared + k];
                if !fv.is_zero() {
                    f_by_k[k].push((row, fv));
                }
            }
        }
        for (k, f_col) in f_by_k.iter().enumerate() {
            if f_col.is_empty() {
                continue;
            }
            let g_row = &g.entries[k * cols..(k + 1) * cols];
            for (col, gv) in g_row.iter().enumerate() {
                if gv.is_zero() {
                    continue;
                }
                for (row, fv) in f_col {
                    let slot = &mut out.entries[row * cols + col];
                    *slot = ctx.add(slot, &ctx.mul(fv, gv));
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product with concatenated leg lists (unit legs normalized).
    pub fn tensor(ctx: &FieldCtx, f: &MultilinearMap, g: &MultilinearMap) -> MultilinearMap {
        let mut domain = f.domain.clone();
        domain.extend(g.domain.iter().cloned());
        let mut codomain = f.codomain.clone();
        codomain.extend(g.codomain.iter().cloned());
        let (fi, fo, gi, go) = (f.in_size(), f.out_size(), g.in_size(), g.out_size());
        let mut out = MultilinearMap::zero(ctx, domain, codomain);
        let cols = out.in_size();
        debug_assert_eq!(cols, fi * gi);
        for rf in 0..fo {
            for cf in 0..fi {
                let fv = &f.entries[rf * fi + cf];
                if fv.is_zero() {
                    continue;
                }
                for rg in 0..go {
                    for cg in 0..gi {
                        let gv = &g.entries[rg * gi + cg];
                        if gv.is_zero() {
                            continue;
                        }
                        let row = rf * go + rg;
                        let col = cf * gi + cg;
                        out.entries[row * cols + col] = ctx.mul(fv, gv);
                    }
                }
            }
        }
        out
    }

    /// Tensor product of several maps, left to right.
    pub fn tensor_all(ctx: &FieldCtx, maps: &[&MultilinearMap]) -> MultilinearMap {
        let mut acc = MultilinearMap::identity(ctx, &Space::unit());
        for m in maps {
            acc = MultilinearMap::tensor(ctx, &acc, m);
        }
        acc
    }

    /// Chain of compositions `maps[0] ∘ maps[1] ∘ … ∘ maps[n-1]`
    /// (the last map is applied first).
    pub fn compose_chain(
        ctx: &FieldCtx,
        maps: &[&MultilinearMap],
    ) -> Result<MultilinearMap, TensorError> {
        assert!(!maps.is_empty());
        let mut acc = maps[maps.len() - 1].clone();
        for m in maps[..maps.len() - 1].iter().rev() {
            acc = MultilinearMap::compose(ctx, m, &acc)?;
        }
        Ok(acc)
    }

    pub fn scale(&self, ctx: &FieldCtx, by: &Scalar) -> MultilinearMap {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = ctx.mul(e, by);
        }
        out
    }

    pub fn add(
        ctx: &FieldCtx,
        f: &MultilinearMap,
        g: &MultilinearMap,
    ) -> Result<MultilinearMap, TensorError> {
        if f.domain != g.domain || f.codomain != g.codomain {
            return Err(TensorError::TypeMismatch {
                op: "add",
                expected: f.signature_string(),
                found: g.signature_string(),
            });
        }
        let mut out = f.clone();
        for (slot, v) in out.entries.iter_mut().zip(&g.entries) {
            *slot = ctx.add(slot, v);
        }
        Ok(out)
    }

    pub fn sub(
        ctx: &FieldCtx,
        f: &MultilinearMap,
        g: &MultilinearMap,
    ) -> Result<MultilinearMap, TensorError> {
        MultilinearMap::add(ctx, f, &g.scale(ctx, &ctx.from_int(-1)))
    }

    pub fn is_zero_map(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Reinterpret the leg lists without touching entries. The flattened
    /// dimensions must match; this is how legs are fused into product
    /// spaces (lexicographic flattening makes it entry-preserving).
    pub fn reshape(&self, domain: Vec<Space>, codomain: Vec<Space>) -> MultilinearMap {
        let domain = normalize_legs(domain);
        let codomain = normalize_legs(codomain);
        assert_eq!(total_dim(&domain), self.in_size(), "reshape domain size");
        assert_eq!(
            total_dim(&codomain),
            self.out_size(),
            "reshape codomain size"
        );
        MultilinearMap {
            domain,
            codomain,
            entries: self.entries.clone(),
        }
    }

    /// Fuse all domain legs into one product space and likewise for the
    /// codomain.
    pub fn fused(&self) -> MultilinearMap {
        self.reshape(
            vec![Space::product(&self.domain)],
            vec![Space::product(&self.codomain)],
        )
    }

    /// Entrywise equality; on inequality reports the first differing index
    /// in row-major order together with both values.
    pub fn maps_equal(
        f: &MultilinearMap,
        g: &MultilinearMap,
    ) -> Result<Option<Witness>, TensorError> {
        if f.domain != g.domain || f.codomain != g.codomain {
            return Err(TensorError::TypeMismatch {
                op: "maps_equal",
                expected: f.signature_string(),
                found: g.signature_string(),
            });
        }
        let in_size = f.in_size();
        for (flat, (a, b)) in f.entries.iter().zip(&g.entries).enumerate() {
            if a != b {
                let row = flat / in_size;
                let col = flat % in_size;
                return Ok(Some(Witness {
                    out_index: unflatten_index(row, &f.codomain),
                    in_index: unflatten_index(col, &f.domain),
                    lhs: a.clone(),
                    rhs: b.clone(),
                }));
            }
        }
        Ok(None)
    }

    /// [`Self::maps_equal`] packaged as a check status.
    pub fn equality_check(
        f: &MultilinearMap,
        g: &MultilinearMap,
    ) -> Result<CheckStatus, TensorError> {
        Ok(match MultilinearMap::maps_equal(f, g)? {
            None => CheckStatus::Pass,
            Some(w) => CheckStatus::Fail(w),
        })
    }

    /// Number of nonzero entries (used by the contraction planner).
    pub fn nonzeros(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }
}

/// Flatten with the convenience that a scalar leg list `[I]` accepts the
/// empty multi-index (maps into or out of the ground field are naturally
/// written with "no legs").
fn flat_checked(multi: &[usize], spaces: &[Space]) -> usize {
    if multi.is_empty() && spaces.len() == 1 && spaces[0].is_unit() {
        return 0;
    }
    flatten_index(multi, spaces)
}

/// Flatten `multi` over `spaces`, skipping unit legs, matching the
/// normalized representation.
fn project_index(multi: &[usize], spaces: &[Space]) -> usize {
    let mut flat = 0;
    for (i, s) in multi.iter().zip(spaces) {
        if s.is_unit() {
            continue;
        }
        flat = flat * s.dim() + i;
    }
    flat
}

impl fmt::Display for MultilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.signature_string())?;
        let in_size = self.in_size();
        for (flat, e) in self.entries.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let out_multi = unflatten_index(flat / in_size, &self.codomain);
            let in_multi = unflatten_index(flat % in_size, &self.domain);
            let out_labels: Vec<&str> = out_multi
                .iter()
                .zip(&self.codomain)
                .map(|(&i, s)| s.label(i))
                .collect();
            let in_labels: Vec<&str> = in_multi
                .iter()
                .zip(&self.domain)
                .map(|(&i, s)| s.label(i))
                .collect();
            writeln!(
                f,
                "  {} <- {}: {}",
                out_labels.join("⊗"),
                in_labels.join("⊗"),
                e
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ctx() -> FieldCtx {
        FieldCtx::rationals()
    }

    fn two_dim(name: &str) -> Space {
        Space::new(name, vec!["a".into(), "b".into()])
    }

    #[test]
    fn identity_is_neutral_for_compose() {
        let ctx = ctx();
        let v = two_dim("V");
        let w = two_dim("W");
        let id_v = MultilinearMap::identity(&ctx, &v);
        let f = MultilinearMap::from_fn(&ctx, vec![w.clone()], vec![v.clone()], |o, i| {
            ctx.from_int((o[0] * 2 + i[0] + 1) as i64)
        });
        let left = MultilinearMap::compose(&ctx, &id_v, &f).unwrap();
        assert_eq!(left, f);
        let id_w = MultilinearMap::identity(&ctx, &w);
        let right = MultilinearMap::compose(&ctx, &f, &id_w).unwrap();
        assert_eq!(right, f);
    }

    #[test]
    fn compose_type_mismatch() {
        let ctx = ctx();
        let v = two_dim("V");
        let w = Space::anonymous("W", 3);
        let f = MultilinearMap::identity(&ctx, &v);
        let g = MultilinearMap::identity(&ctx, &w);
        assert!(matches!(
            MultilinearMap::compose(&ctx, &f, &g),
            Err(TensorError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn tensor_entry_formula_on_random_data() {
        // (f⊗g)[(i,k),(j,l)] = f[i,j]·g[k,l], checked by direct index
        // arithmetic on 2x2 data.
        let ctx = ctx();
        let v = two_dim("V");
        let f = MultilinearMap::from_fn(&ctx, vec![v.clone()], vec![v.clone()], |o, i| {
            ctx.rational((3 * o[0] + i[0] + 1) as i64, 7)
        });
        let g = MultilinearMap::from_fn(&ctx, vec![v.clone()], vec![v.clone()], |o, i| {
            ctx.rational((5 * o[0] + 2 * i[0] + 1) as i64, 3)
        });
        let t = MultilinearMap::tensor(&ctx, &f, &g);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let expect = ctx.mul(f.entry(&[i], &[j]), g.entry(&[k], &[l]));
                        assert_eq!(*t.entry(&[i, k], &[j, l]), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_with_unit_map_is_identity_on_entries() {
        let ctx = ctx();
        let v = two_dim("V");
        let f = MultilinearMap::from_fn(&ctx, vec![v.clone()], vec![v.clone()], |o, i| {
            ctx.from_int((o[0] + 2 * i[0]) as i64)
        });
        // 1x1 identity on the unit object.
        let unit = MultilinearMap::identity(&ctx, &Space::unit());
        let left = MultilinearMap::tensor(&ctx, &f, &unit);
        assert_eq!(left, f, "unit leg is normalized away");
        let right = MultilinearMap::tensor(&ctx, &unit, &f);
        assert_eq!(right, f);
    }

    #[test]
    fn permutation_moves_legs() {
        let ctx = ctx();
        let v = two_dim("V");
        let w = Space::anonymous("W", 3);
        let swap = MultilinearMap::transposition(&ctx, &v, &w);
        for i in 0..2 {
            for j in 0..3 {
                assert!(swap.entry(&[j, i], &[i, j]).is_one());
            }
        }
        assert_eq!(swap.nonzeros(), 6);
    }

    #[test]
    fn maps_equal_reports_first_witness() {
        let ctx = ctx();
        let v = two_dim("V");
        let f = MultilinearMap::identity(&ctx, &v);
        let mut g = f.clone();
        g.set_entry(&[1], &[0], ctx.from_int(5));
        let w = MultilinearMap::maps_equal(&f, &g).unwrap().unwrap();
        assert_eq!(w.out_index, vec![1]);
        assert_eq!(w.in_index, vec![0]);
        assert!(w.lhs.is_zero());
        assert_eq!(w.rhs, ctx.from_int(5));
        assert!(MultilinearMap::maps_equal(&f, &f).unwrap().is_none());
    }

    #[test]
    fn reshape_fuses_legs_lexicographically() {
        let ctx = ctx();
        let v = two_dim("V");
        let w = Space::anonymous("W", 3);
        let f = MultilinearMap::from_fn(
            &ctx,
            vec![v.clone(), w.clone()],
            vec![w.clone(), v.clone()],
            |o, i| ctx.from_int((o[0] * 2 + o[1] + 7 * (i[0] * 3 + i[1])) as i64),
        );
        let fused = f.fused();
        assert_eq!(fused.domain().len(), 1);
        assert_eq!(fused.domain()[0].dim(), 6);
        for oi in 0..3 {
            for oj in 0..2 {
                for ii in 0..2 {
                    for ij in 0..3 {
                        assert_eq!(
                            fused.entry(&[oi * 2 + oj], &[ii * 3 + ij]),
                            f.entry(&[oi, oj], &[ii, ij])
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn composition_is_associative() {
        let ctx = ctx();
        let v = two_dim("V");
        let mk = |seed: i64| {
            MultilinearMap::from_fn(&ctx, vec![v.clone()], vec![v.clone()], |o, i| {
                ctx.from_int(seed + (o[0] * 2 + i[0]) as i64)
            })
        };
        let (a, b, c) = (mk(1), mk(-3), mk(11));
        let ab_c = MultilinearMap::compose(
            &ctx,
            &MultilinearMap::compose(&ctx, &a, &b).unwrap(),
            &c,
        )
        .unwrap();
        let a_bc = MultilinearMap::compose(
            &ctx,
            &a,
            &MultilinearMap::compose(&ctx, &b, &c).unwrap(),
        )
        .unwrap();
        assert_eq!(ab_c, a_bc);
    }
}
