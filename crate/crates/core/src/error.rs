use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("coxeter matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("coxeter matrix must have at least one generator")]
    EmptyMatrix,
    #[error("coxeter matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },
    #[error("coxeter matrix diagonal entry ({index}, {index}) must be 1")]
    BadDiagonal { index: usize },
    #[error("coxeter matrix entry ({row}, {col}) = {value} must be >= 2 or infinity")]
    BadOffDiagonal { row: usize, col: usize, value: u32 },
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("elements belong to different coxeter systems")]
    MixedSystems,
    #[error("weight function has {got} entries, expected {expected}")]
    WeightArity { got: usize, expected: usize },
    #[error("weights of generators {s} and {t} must agree since m_st = {m} is odd")]
    InconsistentWeights { s: usize, t: usize, m: u32 },
    #[error("not a permutation of 1..={n}: {detail}")]
    NotPermutation { n: usize, detail: String },
    #[error("window residues mod {n} are not a permutation: {window:?}")]
    BadWindow { n: usize, window: Vec<i64> },
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("rank n = {0} must be at least 2")]
    RankTooSmall(usize),
    #[error("m = {m} is not coprime to n = {n}")]
    NotCoprime { n: usize, m: i64 },
    #[error("k = {k} must lie in [1, {max}]")]
    ShiftOutOfRange { k: usize, max: usize },
    #[error("element is not in the affine Weyl group (component {0} != 0)")]
    NonzeroComponent(i64),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
