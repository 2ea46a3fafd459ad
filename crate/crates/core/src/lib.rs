//! Extended Brauer quotients of N-interior G-algebras over finite fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`groups`]: enumerated permutation groups, subgroups, automorphisms of
//!   p-subgroups and the groups `K`, `K'`, `T` of automorphisms whose
//!   displacement lies in a normal subgroup `N`.
//! * [`falgebra`]: exact linear algebra over GF(p^e) and finite-dimensional
//!   algebras given by structure constants, with radicals, primitive
//!   idempotents and idempotent lifting.
//! * [`interior`]: N-interior G-algebras, crossed products, twisted diagonal
//!   actions and the graded extended Brauer quotient.
//! * [`corresp`]: points, defect groups and checkers for the point and block
//!   correspondences obtained through the extended Brauer quotient.

pub mod corresp;
pub mod error;
pub mod falgebra;
pub mod groups;
pub mod interior;

pub use error::{Error, Result};
