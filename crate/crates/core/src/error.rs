use thiserror::Error;

use crate::graded::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("variable {name} has degree {degree}; ring variables need degree >= 1")]
    InvalidDegree { name: String, degree: i64 },
    #[error("{what} is not homogeneous")]
    NotHomogeneous { what: String },
    #[error("invalid presentation: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidPresentation(Vec<Violation>),
    #[error("normalization variables do not make the algebra module-finite")]
    NormalizationUnverified,
    #[error("coefficient {0} has no image in the target field")]
    CoefficientNotInField(String),
    #[error("entry ({row}, {col}) of matrix {generator}: {reason}")]
    ShapeMismatch {
        generator: usize,
        row: usize,
        col: usize,
        reason: String,
    },
    #[error("assignment has {got} values, parameter space has {expected} unknowns")]
    MissingAssignment { expected: usize, got: usize },
    #[error("matrix entries must be polynomials over the normalization ring with scalar coefficients")]
    NotScalar,
    #[error("enumeration needs {required} candidates, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("shift types differ")]
    TypeMismatch,
    #[error("shift type is empty")]
    EmptyType,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("Hilbert series is not eventually polynomial")]
    NotEventuallyPolynomial,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
