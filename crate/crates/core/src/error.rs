use thiserror::Error;

use crate::letter::Letter;

/// Failures raised by the tableau model and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be positive")]
    ZeroRank,
    #[error("letter {value} is not in the alphabet [±{n}]")]
    InvalidLetter { value: i32, n: usize },
    #[error("column is not strictly increasing: {0}")]
    NotIncreasing(String),
    #[error("parts are not weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("invalid skew shape: {0}")]
    InvalidShape(String),
    #[error("column breaks the one column condition at {break_letter}")]
    NotAdmissible { break_letter: u32 },
    #[error("greedy split witness could not be completed")]
    NoSplitWitness,
    #[error("column is not coadmissible")]
    NotCoadmissible,
    #[error("column {column} is not admissible")]
    ColumnNotAdmissible { column: usize },
    #[error("tableau is not Kashiwara-Nakashima: {0}")]
    NotKn(String),
    #[error("tableau is not straight")]
    NotStraight,
    #[error("tableau is not a key tableau")]
    NotKey,
    #[error("invalid orbit vector: {0}")]
    InvalidOrbitVector(String),
    #[error("invalid punctured tableau: {0}")]
    InvalidPuncturedTableau(String),
    #[error("no elementary slide is possible from the puncture")]
    NoMove,
    #[error("cell ({row}, {col}) is not an outer corner")]
    NotAnOuterCorner { row: usize, col: usize },
    #[error("cell ({row}, {col}) is not an inner corner")]
    NotAnInnerCorner { row: usize, col: usize },
    #[error("reverse slide at ({row}, {col}) would need a change in the number of cells")]
    SlideWouldLoseCells { row: usize, col: usize },
    #[error("no forward slide reproduces the configuration at ({row}, {col})")]
    Irreversible { row: usize, col: usize },
    #[error("a slide contracted a column while swapping column lengths")]
    UnexpectedContraction,
    #[error("column lengths {left} < {right}; expected the left column to be at least as long")]
    LengthOrder { left: usize, right: usize },
    #[error("invalid permutation of column lengths: {0}")]
    InvalidPermutation(String),
    #[error("entry {0} of the left column of the right neighbour has no partner")]
    UnmatchableEntry(Letter),
    #[error("no letter at or above {0} is free")]
    AlphabetExhausted(Letter),
    #[error("tableau has barred entries")]
    NotTypeA,
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
