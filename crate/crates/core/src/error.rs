use thiserror::Error;

/// Errors shared across the pipeline.
///
/// Variants split into two classes: input/usage problems (parsing, arity)
/// and assumption violations detected during solving (non-squarefree input,
/// positive-dimensional systems, exhausted retry budgets). The CLI maps the
/// first class to exit code 1 and the second to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { name: String, offset: usize },
    #[error("negative exponent at offset {offset}")]
    NegativeExponent { offset: usize },
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("gradient transformation requires a single-output program")]
    MultiOutput,
    #[error("operation undefined for constant polynomial")]
    ConstantInput,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("polynomial is not squarefree; take the squarefree part first")]
    NotSquarefree,
    #[error("input polynomial is not squarefree; repeated factor witness: {witness}")]
    SquarefreeViolation { witness: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("specialization length {got} does not match free variable count {expected}")]
    SpecializationLength { expected: usize, got: usize },
    #[error("the saturated system is positive-dimensional")]
    PositiveDimensional,
    #[error("no separating linear form found within {attempts} attempts; last collision: degree {last_degree} < {solution_count} solutions")]
    SeparatingFormExhausted {
        attempts: usize,
        last_degree: usize,
        solution_count: usize,
    },
    #[error("retry budget of {budget} exhausted at level {level}; last failing certificate: {certificate}")]
    RetryBudgetExhausted {
        level: usize,
        budget: usize,
        certificate: String,
    },
    #[error("representation failed verification: {check}")]
    UnverifiedRepresentation { check: String },
    #[error("{divisor} does not divide the eliminant")]
    NonDivisor { divisor: String },
    #[error("grid oracle supports 2 or 3 variables, got {0}")]
    UnsupportedDimension(usize),
    #[error("degenerate box: {0}")]
    DegenerateBox(String),
    #[error("point interval wider than a grid cell; refine to at most {max_width}")]
    PointTooWide { max_width: String },
    #[error("point interval spans cells of {count} distinct components; refine the point further")]
    PointSpansComponents { count: usize },
    #[error("invalid straight-line program: {0}")]
    InvalidSlp(String),
    #[error("modular inverse does not exist for denominator divisible by {prime}")]
    BadModularPoint { prime: u64 },
}

impl Error {
    /// True for errors that report a violated solving assumption rather
    /// than a malformed invocation.
    pub fn is_assumption_violation(&self) -> bool {
        matches!(
            self,
            Error::SquarefreeViolation { .. }
                | Error::ConstantInput
                | Error::PositiveDimensional
                | Error::SeparatingFormExhausted { .. }
                | Error::RetryBudgetExhausted { .. }
        )
    }
}
