//! Modular invariants of q-deformed compact Lie groups and free unitary
//! quantum groups.
//!
//! The crate computes scaling-group and modular invariants (`T_tau`,
//! `T_tauInn`, `Mod`, ...) as closed subgroups of the real line:
//!
//! - [`rootsystems`]: Cartan data, the `⟨2ρ|ϖ_i⟩` pairing and the invariant
//!   table of `G_q`;
//! - [`freeunitary`]: spectral invariants, factor type and i.c.c. constants of
//!   `U_F⁺`;
//! - [`fusionring`]: words over `{α, β}`, the fusion rule and dimensions;
//! - [`knowntables`]: tabulated invariants of quantum `E(2)` and `az+b`.

pub mod cli;
pub mod error;
pub mod freeunitary;
pub mod fusionring;
pub mod knowntables;
pub mod numerics;
pub mod rootsystems;
pub mod subgroups;
pub mod table;

pub use error::{Error, Result};
pub use subgroups::{intersect, RealSubgroup, UnitSymbol};
pub use table::InvariantTable;
