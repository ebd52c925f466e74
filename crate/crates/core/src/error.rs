use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("expected {expected} matrix entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("homomorphism matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    HomShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("generator {generator} of order {order} is not sent to an element of dividing order")]
    TorsionNotRespected { generator: usize, order: String },
    #[error("diagonal quotient needs at least 2 copies, got {0}")]
    TooFewCopies(usize),
    #[error("element has {found} coordinates, group has {expected} generators")]
    ElementShape { expected: usize, found: usize },
    #[error("{divisor} does not divide {modulus}")]
    NotADivisor { divisor: String, modulus: String },
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("element cap of {cap} exceeded during enumeration")]
    CapExceeded { cap: usize },
    #[error("permutation degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("element does not lie in the group")]
    NotInGroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("malformed cycle notation: {0}")]
    CycleSyntax(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("n must be at least {min}, got {n}")]
    SmallN { n: usize, min: usize },
    #[error("tuple lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("realized kernel has order {found}, expected {expected}")]
    OrderMismatch { expected: String, found: String },
    #[error("coordinate {index} lies outside the base group")]
    CoordinateOutsideGroup { index: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    #[error(transparent)]
    Relators(#[from] crate::words::SndError),
}
