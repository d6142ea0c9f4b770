//! Exact linear algebra over ℚ(ζ_n): reduced row echelon form, affine
//! solution sets, and matrix inversion.
//!
//! This backs every "solve" in the crate — convolution inverses, antipodes,
//! braiding inverses, r-form discovery — so the results are canonical: a
//! convolution inverse either exists uniquely or the system's defect is
//! reported.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{FieldCtx, Scalar};
use crate::tensor::MultilinearMap;

/// Outcome of solving `A·x = b` for a single unknown vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinSolve {
    Unique(Vec<Scalar>),
    /// Solvable but not unique: `rank` plus number of free variables.
    Underdetermined { rank: usize, free: usize },
    /// No solution; `row` indexes an equation reduced to `0 = nonzero`.
    Inconsistent { row: usize },
}

/// The full affine solution set of a consistent system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSet {
    pub particular: Vec<Scalar>,
    /// Basis of the homogeneous solution space; empty means unique.
    pub nullspace: Vec<Vec<Scalar>>,
    pub rank: usize,
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(ctx: &FieldCtx, m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = ctx.inv(&m[r][c]).expect("pivot is nonzero");
        for j in c..cols {
            m[r][j] = ctx.mul(&m[r][j], &inv);
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..cols {
                let adj = ctx.mul(&factor, &m[r][j]);
                m[i][j] = ctx.sub(&m[i][j], &adj);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solve `A·x = b` where `a` is given by rows. Demands consistency and
/// returns the defect otherwise.
pub fn solve(ctx: &FieldCtx, a: &[Vec<Scalar>], b: &[Scalar]) -> LinSolve {
    match solve_affine(ctx, a, b) {
        Err(row) => LinSolve::Inconsistent { row },
        Ok(set) if set.nullspace.is_empty() => LinSolve::Unique(set.particular),
        Ok(set) => LinSolve::Underdetermined {
            rank: set.rank,
            free: set.nullspace.len(),
        },
    }
}

/// Solve returning the full affine set, or `Err(row)` with an inconsistent
/// row index.
pub fn solve_affine(ctx: &FieldCtx, a: &[Vec<Scalar>], b: &[Scalar]) -> Result<AffineSet, usize> {
    assert_eq!(a.len(), b.len());
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(ctx, &mut aug);
    if pivots.last() == Some(&cols) {
        // The pivot in the augmented column marks the inconsistent row.
        let row = pivots.len() - 1;
        return Err(row);
    }
    let rank = pivots.len();
    let mut particular = vec![ctx.zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = aug[i][cols].clone();
    }
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut nullspace = Vec::new();
    for free_col in 0..cols {
        if pivot_set[free_col] {
            continue;
        }
        let mut vec_ = vec![ctx.zero(); cols];
        vec_[free_col] = ctx.one();
        for (i, &c) in pivots.iter().enumerate() {
            vec_[c] = ctx.neg(&aug[i][free_col]);
        }
        nullspace.push(vec_);
    }
    Ok(AffineSet {
        particular,
        nullspace,
        rank,
    })
}

/// Invert a square matrix given by rows; `None` if singular.
pub fn invert(ctx: &FieldCtx, a: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Scalar>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "invert needs a square matrix");
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { ctx.one() } else { ctx.zero() });
            }
            r
        })
        .collect();
    let pivots = rref(ctx, &mut aug);
    // Pivots escaping into the identity block mean the left block is singular.
    if pivots.iter().filter(|&&c| c < n).count() < n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Invert a multilinear map seen as a square matrix; the result swaps
/// domain and codomain. `None` if singular.
pub fn invert_map(ctx: &FieldCtx, map: &MultilinearMap) -> Option<MultilinearMap> {
    let n = map.in_size();
    if n != map.out_size() {
        return None;
    }
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|r| (0..n).map(|c| map.entry_flat(r, c).clone()).collect())
        .collect();
    let inv = invert(ctx, &rows)?;
    let mut out = MultilinearMap::zero(ctx, map.codomain().to_vec(), map.domain().to_vec());
    for (r, row) in inv.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let out_multi = crate::tensor::unflatten_index(r, map.domain());
            let in_multi = crate::tensor::unflatten_index(c, map.codomain());
            out.set_entry(&out_multi, &in_multi, v.clone());
        }
    }
    Some(out)
}

/// Materialize the matrix of a linear operator on a `dim_in`-dimensional
/// space of unknowns by probing it with basis vectors. `apply` must be
/// linear; column `j` of the result is `apply(e_j)`.
pub fn matrix_of_operator(
    ctx: &FieldCtx,
    dim_out: usize,
    dim_in: usize,
    mut apply: impl FnMut(usize) -> Vec<Scalar>,
) -> Vec<Vec<Scalar>> {
    let mut rows = vec![vec![ctx.zero(); dim_in]; dim_out];
    for j in 0..dim_in {
        let col = apply(j);
        assert_eq!(col.len(), dim_out);
        for (i, v) in col.into_iter().enumerate() {
            rows[i][j] = v;
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_unique_system() {
        let ctx = FieldCtx::rationals();
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let a = vec![
            vec![ctx.one(), ctx.one()],
            vec![ctx.one(), ctx.from_int(-1)],
        ];
        let b = vec![ctx.from_int(3), ctx.one()];
        assert_eq!(
            solve(&ctx, &a, &b),
            LinSolve::Unique(vec![ctx.from_int(2), ctx.one()])
        );
    }

    #[test]
    fn detects_inconsistency() {
        let ctx = FieldCtx::rationals();
        let a = vec![vec![ctx.one(), ctx.one()], vec![ctx.one(), ctx.one()]];
        let b = vec![ctx.from_int(1), ctx.from_int(2)];
        assert!(matches!(solve(&ctx, &a, &b), LinSolve::Inconsistent { .. }));
    }

    #[test]
    fn reports_free_variables() {
        let ctx = FieldCtx::rationals();
        let a = vec![vec![ctx.one(), ctx.one()]];
        let b = vec![ctx.from_int(4)];
        let set = solve_affine(&ctx, &a, &b).unwrap();
        assert_eq!(set.rank, 1);
        assert_eq!(set.nullspace.len(), 1);
        // particular + t·null solves the equation for any t.
        let t = ctx.from_int(7);
        let x0 = ctx.add(&set.particular[0], &ctx.mul(&t, &set.nullspace[0][0]));
        let x1 = ctx.add(&set.particular[1], &ctx.mul(&t, &set.nullspace[0][1]));
        assert_eq!(ctx.add(&x0, &x1), ctx.from_int(4));
    }

    #[test]
    fn inverts_over_cyclotomic_field() {
        let ctx = FieldCtx::new(4);
        let z = ctx.zeta();
        // det = 1 - z^2 = 2 in Q(zeta_4), so this one is invertible.
        let a = vec![vec![ctx.one(), z.clone()], vec![z.clone(), ctx.one()]];
        let inv = invert(&ctx, &a).unwrap();
        // a * inv = identity
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = ctx.zero();
                for k in 0..2 {
                    acc = ctx.add(&acc, &ctx.mul(&a[i][k], &inv[k][j]));
                }
                let expect = if i == j { ctx.one() } else { ctx.zero() };
                assert_eq!(acc, expect);
            }
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let ctx = FieldCtx::rationals();
        let a = vec![
            vec![ctx.one(), ctx.from_int(2)],
            vec![ctx.from_int(2), ctx.from_int(4)],
        ];
        assert!(invert(&ctx, &a).is_none());
    }
}
