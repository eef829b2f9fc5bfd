use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not closed: entry [{row}][{col}] = {value} is outside 0..{order}")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("element 0 is not a two-sided identity: 0*{index} or {index}*0 differs from {index}")]
    NoIdentity { index: usize },
    #[error("element {element} has no unique inverse")]
    NoInverse { element: usize },
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("group order exceeds the configured limit of {limit}")]
    OrderLimitExceeded { limit: usize },
    #[error("invalid permutation generator {index}: {reason}")]
    BadPermutation { index: usize, reason: String },
    #[error("subgroup is not normal: conjugating element {element} by {by} leaves it")]
    NotNormal { element: usize, by: usize },
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter for `{family}`: {reason}")]
    BadParameter { family: String, reason: String },
    #[error("malformed catalog spec `{spec}`: {reason}")]
    SpecSyntax { spec: String, reason: String },
    #[error("unknown theorem id `{0}` (expected t1,c2,c3,t4,t5,t5cor,t6,pconv)")]
    UnknownTheorem(String),
    #[error("subgroup budget exceeded: {count} subgroups (cap {cap})")]
    SubgroupBudgetExceeded { count: usize, cap: usize },
    #[error("group of order {order} is not a p-group")]
    NotPGroup { order: usize },
    #[error("CD lattice violation: {reason} (subgroups {first:?} and {second:?})")]
    LatticeViolation {
        reason: String,
        first: Vec<usize>,
        second: Vec<usize>,
    },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate catalog entry `{0}`")]
    DuplicateEntry(String),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}
