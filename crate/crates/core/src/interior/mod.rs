//! N-interior G-algebras, crossed products, twisted diagonal actions and
//! the graded extended Brauer quotient.

mod algebra;
pub mod checks;
mod quotient;
mod twisted;

pub use algebra::{
    crossed_product, make_group_interior, make_kn_interior, verify_group_algebra_isomorphism, CrossedProduct,
    InteriorHom, NInteriorGAlgebra,
};
pub use quotient::{
    brauer_kernel, extended_brauer_quotient, induced_hom, rho_k_prime, GradedQuotient, InducedHom, QuotientComponent,
    RhoKPrime,
};
pub use twisted::{
    twisted_action, twisted_fixed_points, twisted_trace, twisted_trace_image, twisted_trace_with_reps,
    TwistedFixedSpace,
};
