use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported root system type {0:?}")]
    UnsupportedType(String),
    #[error("rank mismatch: type {label} has rank {actual}, requested {requested}")]
    RankMismatch {
        label: String,
        actual: usize,
        requested: usize,
    },
    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,
    #[error("expected a vector of length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),
    #[error("malformed Weyl group word {0:?}")]
    BadWord(String),
    #[error("roots do not generate a rank-2 Yang-Baxter segment")]
    SegmentPrecondition,
    #[error("not a lambda-chain: {0}")]
    NotAChain(String),
    #[error("weight {0:?} is neither dominant nor antidominant")]
    MixedSign(Vec<i64>),
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("index set {0:?} is not admissible")]
    NotAdmissible(Vec<usize>),
    #[error("concatenation mismatch: {0}")]
    ConcatMismatch(String),
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("internal consistency failure: {0}")]
    Defect(String),
}
