//! Exact-arithmetic kernel for finite-dimensional Hopf algebras and
//! Yetter-Drinfel'd-Long (YDL) bimodules.
//!
//! Everything here is computed over an exact field (arbitrary-precision
//! rationals or a prime field), so every axiom check is a genuine algebraic
//! identity test: no tolerances, no rounding. The crate is `no_std`
//! (with `alloc`); IO, file formats and the CLI live in the companion
//! `ydl-workbench` crate.
//!
//! Layout:
//! * [`scalar`], [`linmap`] — the exact field and the sparse-column linear
//!   map kernel (compose, Kronecker, invert, leg permutations).
//! * [`hopf`] — Hopf algebras as structure constants, axiom batteries and
//!   the instance constructors (group algebras, the 4-dimensional
//!   `sweedler` algebra, tensor and dual Hopf algebras).
//! * [`ydl`] — YDL bimodules, the ten-axiom battery, the canonical
//!   variant structures on `H ⊗ H`, monoidal structure and the braiding.
//! * [`analysis`] — symmetry / flip / pseudosymmetry deciders with
//!   witness extraction.
//! * [`u_condition`] — the u-condition checker and its drivers.
//! * [`qt`], [`cqt`] — (co)quasitriangular structures: axiom batteries,
//!   induction of YDL structures from an R-matrix or a bilinear form, and
//!   the inverse extraction from a braiding.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod cqt;
pub mod hopf;
pub mod linmap;
pub mod qt;
pub mod report;
pub mod scalar;
pub mod u_condition;
pub mod ydl;

pub use linmap::{LinError, LinearMap};
pub use report::{AxiomReport, Witness};
pub use scalar::{FieldSpec, Scalar};
