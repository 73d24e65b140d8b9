use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("malformed substitution: {0}")]
    BadSubstitution(String),
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("Pfaffian needs an even-sized square matrix, got {rows}x{cols}")]
    BadPfaffianShape { rows: usize, cols: usize },
    #[error("{0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid strict partition {0:?}: parts must be strictly decreasing and positive")]
    NotStrict(Vec<u32>),
    #[error("invalid cycle type {0:?}: parts must be odd and positive")]
    NotOddCycleType(Vec<u32>),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("polynomial is not in the span of odd power sums (degree {degree})")]
    NotInSpan { degree: usize },
    #[error("polynomial degree {degree} exceeds the weight bound {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("expansion in degree {degree} needs at least {degree} variables, got {n}")]
    TooFewVariables { degree: usize, n: usize },
    #[error("power sum index must be at least 1")]
    ZeroPowerSum,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("Omega_k is only defined for odd k, got {0}")]
    EvenLevel(usize),
    #[error("operator level must be at least 1")]
    ZeroLevel,
    #[error("unknown operator {0:?}")]
    UnknownOperator(String),
    #[error("operator result is not a polynomial (denominator {0} remains)")]
    NotPolynomial(String),
    #[error("partition {partition} has more than {n} parts")]
    TooLong { partition: String, n: usize },
    #[error("partitions must differ")]
    SamePartition,
    #[error("polynomial is not in R_n: {0}")]
    NotInRn(String),
    #[error("no separating polynomial found up to degree {0}")]
    Inseparable(usize),
}
