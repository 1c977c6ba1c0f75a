//! Exact-arithmetic braid invariants through the planar rook algebra.
//!
//! The braid group `B_n` maps into the group of units of the planar rook
//! algebra `CP_n` by sending each generator to a six-diagram linear
//! combination; five coefficient families make this a homomorphism. Markov
//! traces built on two of those families recover the Jones and the Alexander
//! polynomial of the braid closure, while traces over the remaining family
//! see exactly the pairwise linking numbers. Everything is computed
//! symbolically over arbitrary-precision rationals: `c = U^2`, `d = V^2`,
//! and `M = a + c + d - 1`, so no square root or denominator ever appears.
//!
//! Independent cross-checks live in [`oracle`]: a Kauffman-bracket state sum
//! and a reduced-Burau determinant that share no code with the main engine
//! beyond the polynomial ring.

pub mod braid;
pub mod diagram;
pub mod element;
pub mod error;
pub mod homs;
pub mod invariants;
pub mod oracle;
pub mod poly;
pub mod qpoly;
pub mod report;
pub mod reps;
pub mod sample;
pub mod traces;

pub use braid::{parse_word, BraidWord, LinkData, Permutation};
pub use diagram::PlanarDiagram;
pub use element::AlgebraElement;
pub use error::{Error, Result};
pub use homs::FamilySpec;
pub use poly::LaurentPoly;
pub use qpoly::QPoly;
pub use report::Report;
