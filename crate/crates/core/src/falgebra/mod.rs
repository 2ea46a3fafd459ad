//! Exact arithmetic over finite fields and finite-dimensional algebras.

mod algebra;
mod decompose;
mod field;
mod linalg;
pub mod poly;

pub use algebra::{
    conjugation_action, fixed_points, fixed_space, relative_trace, relative_trace_with_reps, trace_image,
    ActionOnAlgebra, Algebra, AlgebraElement, Quotient, Subalgebra, EXHAUSTIVE_ASSOC_DIM,
};
pub use decompose::{
    blocks, corner, eval_in_corner, jacobson_radical, lift_idempotent, minimal_polynomial, nilpotency_degree,
    peirce_block, primitive_decomposition, primitive_idempotents, wedderburn_components, Decomposition,
    LocalIdempotent, SPLIT_BUDGET,
};
pub use field::{is_prime, Fe, Field, MAX_FIELD_ORDER};
pub use linalg::{add, axpy, dot, is_zero, scale, sub, unit_vec, zero_vec, CoordinateMap, Matrix, Subspace, Vector};

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// Smallest `e` such that GF(p^e) contains all roots of unity of order
/// dividing the p'-part of the exponent of `group`.
pub fn splitting_degree(group: &FiniteGroup, p: u32) -> u32 {
    let mut m = group.exponent();
    while m.is_multiple_of(p as usize) {
        m /= p as usize;
    }
    if m == 1 {
        return 1;
    }
    let mut e = 1;
    let mut x = p as usize % m;
    while x != 1 {
        x = x * p as usize % m;
        e += 1;
    }
    e
}

/// GF(p^e) with `e` given or chosen as the splitting degree of `group`.
pub fn make_field(group: &FiniteGroup, p: u32, degree: Option<u32>) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Field::new(p, degree.unwrap_or_else(|| splitting_degree(group, p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{symmetric_group, Perm};

    #[test]
    fn splitting_degrees() {
        let s3 = symmetric_group(3).unwrap();
        assert_eq!(splitting_degree(&s3, 2), 2);
        assert_eq!(splitting_degree(&s3, 3), 1);
        let s4 = symmetric_group(4).unwrap();
        assert_eq!(splitting_degree(&s4, 2), 2);
        assert_eq!(splitting_degree(&s4, 3), 2);
        let a5 = FiniteGroup::from_generators(vec![
            Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
            Perm::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
        ])
        .unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(splitting_degree(&a5, 2), 4);
        assert_eq!(splitting_degree(&a5, 3), 4);
        assert_eq!(splitting_degree(&a5, 5), 2);
        assert!(make_field(&a5, 4, None).is_err());
    }
}
