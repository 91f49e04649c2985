use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("generator index s{index} out of range for degree {n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid root ({i},{j}) for degree {n}")]
    InvalidRoot { i: usize, j: usize, n: usize },

    #[error("root ({i},{j}) is not positive")]
    NonPositiveRoot { i: usize, j: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid parabolic subset: {0}")]
    InvalidParabolic(String),

    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),

    #[error("Hessenberg function {0} is not parabolic: its image must equal its set of fixed points")]
    NotParabolic(String),

    #[error("column {0} carries more than one pivot")]
    DuplicatePivotColumn(usize),

    #[error("tableau {0} is not row-strict")]
    NotRowStrict(String),

    #[error("q = {q} out of range 2..={n}")]
    RowIndexOutOfRange { q: usize, n: usize },

    #[error("permutation {0} does not index a flag in the Springer fiber")]
    NotInSpringerFiber(String),

    #[error("cell C_w for w = {0} does not meet the Hessenberg variety")]
    EmptyCell(String),

    #[error("unknown check id {0:?}")]
    UnknownCheck(String),

    #[error("degree {0} out of range 1..=8")]
    DegreeOutOfRange(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
