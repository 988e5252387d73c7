//! Exact computations in infinitesimal Hecke algebras.
//!
//! The [`engine`] straightens words into PBW normal form over exact rationals.
//! On top of it, [`sl2`] builds the algebras `H_z` over `sl(2)` and their
//! central elements, [`verma`] works with truncated Verma modules, [`abelian`]
//! produces commutator certificates, and [`families`] covers the undeformed
//! `sp(2n)` and the `gl(n)` algebras.

pub mod engine;
pub mod error;
pub mod poly;
pub mod scalar;

pub use engine::{Element, GenKind, Monomial, Presentation, PresentationBuilder, Terms};
pub use error::{Error, Result};
pub use poly::{CasimirPolynomial, Poly};
pub use scalar::Scalar;
pub mod linalg;
pub mod sl2;
pub mod verma;
pub mod abelian;
pub mod families;
pub mod expr;
pub mod acceptance;
pub mod cli;
