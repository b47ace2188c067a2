//! An exact-arithmetic Weyl group laboratory.
//!
//! Builds finite crystallographic root systems, computes Bruhat-order
//! Poincaré polynomials P_w(q) and inversion-arrangement region polynomials
//! R_w(q), enumerates parabolic quotients and their palindromic elements,
//! materializes the lattice M(n), and verifies exhaustively that P_w(q) =
//! R_w(q) exactly for the rationally smooth elements. Everything is integer
//! arithmetic; identical inputs give bit-identical outputs.

pub mod arrangement;
pub mod bruhat;
pub mod cartan;
pub mod error;
pub mod mlattice;
pub mod parabolic;
pub mod poly;
pub mod poset;
pub mod roots;
pub mod verify;
pub mod weyl;

pub use cartan::GroupType;
pub use error::{Result, WeylError};
pub use poly::IntPolynomial;
pub use poset::GradedPoset;
pub use roots::{Root, RootSystem};
pub use weyl::{Side, WeylElement};
