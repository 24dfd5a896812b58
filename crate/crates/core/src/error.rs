use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("letter not in word: {0}")]
    LetterNotInWord(u32),
    #[error("letters must be positive, found 0")]
    ZeroLetter,
    #[error("pattern word must be over {{1,2}} and contain 1")]
    BadPatternWord,
    #[error("alphabet mismatch: word alphabet must be exactly 1..={n}")]
    AlphabetMismatch { n: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("labeling is not a bijection onto 1..={0}")]
    BadLabeling(usize),
    #[error("duplicate grid point ({0}, {1})")]
    DuplicatePoint(i64, i64),
    #[error("colored pattern requires a bipartition")]
    MissingBipartition,
    #[error("bipartition mismatch: {0}")]
    BipartitionMismatch(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("duplicate apex position")]
    DuplicateApex,
    #[error("ordering not pattern-free")]
    OrderingNotPatternFree,
    #[error("ordering places Y endpoint {y} before X endpoint {x} of an edge")]
    OrderingNotXFirst { x: usize, y: usize },
    #[error("input too large for exhaustive search: n = {n} exceeds {max}")]
    TooLarge { n: usize, max: usize },
    #[error("certificate failed verification: {0}")]
    CertificateRejected(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
