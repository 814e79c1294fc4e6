//! Coxeter-type presentations of double affine Weyl groups, verified with
//! exact arithmetic.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`] — exact affine root-system data (Cartan matrices, marks,
//!   the normalised form, `θ`, `φ`, the lattice `M`);
//! * [`weyl`] — finite Weyl groups, inversion sets, lengths and the
//!   distinguished elements `x`, `y`;
//! * [`daweyl`] — the double affine Weyl group in normal form, its defining
//!   action, and the Bernstein-type relation suite;
//! * [`diagrams`] — double affine Coxeter diagrams and their 1-connected
//!   components;
//! * [`presentation`] — the Coxeter-type presentations, the generator
//!   dictionaries into the double affine Weyl group and their verification;
//! * [`congruence`] — `Γ₁(r)`, `Υ₁(r)` and friends over the integers,
//!   coset enumeration and word decomposition;
//! * [`autoaction`] — the automorphisms `𝔞`, `𝔟` and the anti-involution `𝔢`,
//!   evaluated in the double affine Weyl group;
//! * [`heckeparams`] — Hecke parameter counts and specialisations.

pub mod autoaction;
pub mod congruence;
pub mod daweyl;
pub mod diagrams;
pub mod error;
pub mod heckeparams;
pub mod presentation;
pub mod rational;
pub mod report;
pub mod rootsys;
pub mod weyl;

pub use daweyl::{DaweylElement, DoubleAffineWeyl};
pub use diagrams::{CoxeterDiagram, DoubleAffineLabel, Family};
pub use error::{Error, Result};
pub use presentation::Presentation;
pub use rational::Q;
pub use report::{Check, Report};
pub use rootsys::{AffineType, FiniteKind, FiniteSystem, FiniteType, RootSystem};
pub use weyl::WeylElement;
