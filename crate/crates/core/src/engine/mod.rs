//! PBW straightening engine: presentations, monomials and normal-form elements.

mod element;
mod monomial;
mod presentation;
pub mod random;

pub use element::{split_monomial, Element, ElementJson, TermJson};
pub use monomial::Monomial;
pub use monomial::Terms;
pub(crate) use monomial::{add_scaled, add_term};
pub use presentation::{GenKind, Generator, Presentation, PresentationBuilder};
