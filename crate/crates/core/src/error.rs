use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("residue field cardinality must be >= 2, got {0}")]
    InvalidResidueCard(u64),
    #[error("matrix backend needs q = p0^2 with integer p0 >= 2, got q = {0}")]
    NotPerfectSquare(u64),
    #[error("segment length must be >= 1")]
    ZeroLength,
    #[error("residue cardinalities differ: {0} vs {1}")]
    QMismatch(u64, u64),
    #[error("q^{exp} overflows for q = {q}")]
    Overflow { q: u64, exp: u32 },
    #[error("eigenvalue assigned to {0:?} must be nonzero")]
    ZeroEigenvalue(String),
    #[error("no eigenvalue assigned for atom {0:?}")]
    MissingEigenvalue(String),
    #[error("ell = {ell} is not a prime different from the residue characteristic of q = {q}")]
    BadEll { ell: u64, q: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("phi is not invertible")]
    NotInvertible,
    #[error("monodromy operator is not nilpotent")]
    NotNilpotent,
    #[error("phi N phi^-1 != q^-1 N; residual {residual}")]
    CompatibilityViolated { residual: String },
    #[error("characteristic polynomial has a factor without rational roots: {factor}")]
    IrrationalEigenvalue { factor: String },
    #[error("eigenvalue {eigenvalue} not a power of {base}")]
    NotWeilLike { eigenvalue: String, base: String },
    #[error("phi is not semisimple")]
    NotFrobeniusSemisimple,
    #[error("weight {0} is not an integer")]
    NonIntegerWeight(String),
    #[error("N raises the weight filtration: N(Fil_{index}) not inside Fil_{index}-2")]
    MonodromyViolation { index: String },
    #[error("representation is not pure")]
    NotPure,
    #[error("subspace is not stable under phi and N")]
    NotSubrepresentation,
    #[error("filtration is not decreasing at step {0}")]
    NotDecreasing(usize),
    #[error("invalid segment data: {0}")]
    InvalidSegments(String),
    #[error("index {value} out of range {lo}..={hi}")]
    OutOfRange { value: i64, lo: i64, hi: i64 },
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("instance too large for enumeration: {0}")]
    InstanceTooLarge(String),
    #[error("E1 page does not degenerate")]
    NotDegenerate,
}

impl Error {
    /// Parse failures versus domain failures, as the command line reports them.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalMismatch(_))
    }
}
