//! The code listings of the book, compiled and run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/groups.md")]
pub mod groups {}
#[doc = include_str!("../../../book/src/algebras.md")]
pub mod algebras {}
#[doc = include_str!("../../../book/src/interior.md")]
pub mod interior {}
#[doc = include_str!("../../../book/src/quotient.md")]
pub mod quotient {}
#[doc = include_str!("../../../book/src/points.md")]
pub mod points {}
#[doc = include_str!("../../../book/src/correspondences.md")]
pub mod correspondences {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
