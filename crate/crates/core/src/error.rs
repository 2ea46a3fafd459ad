use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("GF({p}^{e}) exceeds the supported field size")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("permutations of different degrees ({0} and {1})")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("group closure exceeds {0} elements")]
    GroupTooLarge(usize),
    #[error("{what} has order {order}, above the cap of {cap}")]
    CapExceeded { what: &'static str, order: usize, cap: usize },
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("set of automorphisms is not closed under composition")]
    NotClosed,
    #[error("automorphism {0} does not satisfy phi(u)u^-1 in N")]
    NotInK(String),
    #[error("element is not fixed by {0}")]
    NotFixed(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid interior algebra: {0}")]
    InvalidInterior(String),
    #[error("not a homomorphism of interior algebras: {0}")]
    NotHomomorphism(String),
    #[error("idempotent lifting did not stabilize after {0} iterations")]
    LiftingFailed(usize),
    #[error("no splitting element found after {0} attempts; the field may not split the algebra")]
    RetryBudgetExhausted(usize),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
