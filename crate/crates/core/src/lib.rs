//! Exact structure-constant calculus for braided Hopf algebras.
//!
//! Everything in this crate is computed over ℚ(ζ_n) with exact arithmetic, so
//! every axiom check is a genuine equality test, never an approximation. The
//! layers build on each other:
//!
//! * [`scalar`] — the coefficient field ℚ(ζ_n) as polynomials mod the
//!   cyclotomic polynomial Φ_n.
//! * [`tensor`] — multilinear maps between tensor products of based spaces,
//!   stored as dense structure-constant arrays.
//! * [`expr`] — a small morphism-expression IR that compiles string diagrams
//!   to contraction plans, with a naive evaluator kept around as an oracle.
//! * [`linalg`] — exact Gaussian elimination, used for convolution inverses,
//!   antipode solving and r-form discovery.
//! * [`hopf`] — algebras, coalgebras, Hopf algebras, coquasitriangular forms,
//!   comodules, module algebras, and their axiom checkers.
//! * [`transmutation`] — the braided Hopf algebra obtained from a
//!   coquasitriangular Hopf algebra: coadjoint coaction, bullet product,
//!   half-braiding, hit action, braided antipode, and the central-coalgebra /
//!   good-comodule checkers.
//! * [`braided_module`] — module braidings on module categories: K-maps,
//!   reflective structures, and the action ↔ braiding correspondence.
//! * [`reflective`] — generalized smash products, the reflective algebra
//!   `A[H]` with its canonical K-map, and σ-twisted tensor products.
//! * [`zoo`] — curated example algebras with independent brute-force oracles.
//!
//! The crate is `no_std` (with `alloc`); all IO and file formats live in the
//! companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod braided_module;
pub mod expr;
pub mod hopf;
pub mod linalg;
pub mod reflective;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod transmutation;
pub mod zoo;


pub use report::{CheckResult, CheckStatus, Report, Witness};
pub use scalar::{FieldCtx, Rational, Scalar, ScalarError};
pub use tensor::{MultilinearMap, Space, TensorError};

