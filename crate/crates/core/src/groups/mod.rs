//! Enumerated permutation groups and the subgroup machinery used by the
//! interior-algebra constructions.

mod automorphism;
mod group;
mod ops;
mod perm;

pub use automorphism::{
    automorphism_group, index_of as automorphism_index, is_closed, GroupAutomorphism, AUT_ORDER_CAP,
};
pub use group::{gcd, lcm, FiniteGroup, Subgroup, DEFAULT_GROUP_CAP};
pub use ops::{
    all_p_subgroups, are_conjugate, aut_g, bar_normalizer, centralizer, compute_k, compute_k_prime, compute_t,
    coset_decompose, coset_reps, is_subconjugate, maximal_subgroups, normalizer, p_subgroups_up_to_conjugacy,
    proper_subgroups, sylow_subgroup, symmetric_group, t_normalizer, Side, P_SUBGROUP_CAP,
};
pub use perm::Perm;
