use alloc::string::String;

/// Errors raised while building or querying group-theoretic data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported Cartan type {family}{rank}")]
    UnsupportedType { family: char, rank: usize },
    #[error("a datum needs at least one component")]
    EmptyDatum,
    #[error("{0} affine nodes exceed the supported maximum of 64")]
    TooLarge(usize),
    #[error("not a diagram automorphism: {0}")]
    NotAutomorphism(String),
    #[error("Frobenius does not permute the components transitively")]
    NotQuasiSimple,
    #[error("coweight has {got} coordinates, expected {expected}")]
    CoweightShape { expected: usize, got: usize },
    #[error("coweight is not dominant")]
    NotDominant,
    #[error("coweight is central on some component")]
    CentralComponent,
    #[error("parahoric {0} is not stable under the Frobenius")]
    UnstableParahoric(String),
    #[error("parahoric {0} is not spherical")]
    NotSpherical(String),
    #[error("node {0} out of range")]
    NodeOutOfRange(usize),
    #[error("<mu, 2rho> = {value} exceeds the budget {budget}")]
    BudgetExceeded { value: i32, budget: i32 },
    #[error("Newton point iteration did not terminate within {0} steps")]
    NewtonCap(usize),
    #[error("search visited more than {0} elements")]
    SearchCap(usize),
    #[error("{0}")]
    Invalid(String),
    #[error("no smoothness rule applies: {0}")]
    Unsupported(String),
}
