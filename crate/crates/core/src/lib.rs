//! Exact-arithmetic toolkit for finite orthogonal reflection groups.
//!
//! Groups are enumerated as explicit matrices over ℚ or a real quadratic
//! field, so every check is an exact equality test. The layers build on each
//! other:
//!
//! - [`algebra`]: scalars, matrices, bilinear forms, subspaces
//! - [`group`]: reflections, closure, conjugacy, named Coxeter types
//! - [`roots`]: root systems, their axioms, and the discriminant product `g_Δ`
//! - [`stabilizers`]: isotropy and inertia subgroups, fixed-locus checks
//! - [`classify`]: maximal elementary abelian 2-subgroups generated by
//!   reflections, up to conjugacy, with normalizer actions
//! - [`invariants`]: Molien series, degrees of basic invariants, Reynolds operator
//! - [`cli`]: group-spec files, reports and the `refltk` command surface

pub mod algebra;
pub mod check;
pub mod classify;
pub mod cli;
pub mod error;
pub mod group;
pub mod invariants;
pub mod roots;
pub mod stabilizers;

pub use error::{Error, Result};
