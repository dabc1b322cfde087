use std::fmt;

/// Errors from parsing, validation, and the maps between families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A token in a text form failed to parse as an integer.
    BadToken {
        token: String,
        context: &'static str,
    },
    /// An object that must be nonempty was empty.
    Empty { context: &'static str },
    /// The values are not a rearrangement of 1..=n.
    NotAPermutation { detail: String },
    /// The sequence breaks the ascent bound; `index` is 1-based.
    NotAnAscentSequence {
        index: usize,
        value: usize,
        bound: usize,
    },
    /// The grid fails one of the matrix invariants.
    NotAFishburnMatrix { detail: String },
    /// The permutation contains the forbidden pattern; positions are 1-based,
    /// the occurrence being at (i, i+1, j).
    ContainsPattern { i: usize, j: usize },
    /// A site label at or beyond the number of active sites.
    LabelOutOfRange { label: usize, sites: usize },
    /// An addition position beyond the matrix dimension.
    PositionOutOfRange { position: usize, dim: usize },
    /// Removal applied to the weight-1 matrix, which has no predecessor.
    NoPredecessor,
    /// An enumeration request beyond the configured cap.
    BudgetExceeded { n: usize, cap: usize },
    /// A statistic name not defined on the requested family.
    UnknownStatistic { name: String, available: String },
    /// A family name other than avoiders, sequences, matrices.
    UnknownFamily { name: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadToken { token, context } => {
                write!(f, "invalid token `{token}` in {context}: expected a nonnegative integer")
            }
            Error::Empty { context } => write!(f, "{context} must be nonempty"),
            Error::NotAPermutation { detail } => write!(f, "not a permutation: {detail}"),
            Error::NotAnAscentSequence { index, value, bound } => write!(
                f,
                "not an ascent sequence: entry {value} at position {index} exceeds the bound {bound}"
            ),
            Error::NotAFishburnMatrix { detail } => write!(f, "not a Fishburn matrix: {detail}"),
            Error::ContainsPattern { i, j } => write!(
                f,
                "permutation contains the pattern at positions ({i}, {}, {j})",
                i + 1
            ),
            Error::LabelOutOfRange { label, sites } => write!(
                f,
                "site label {label} out of range: the permutation has {sites} active sites (labels 0..={})",
                sites.saturating_sub(1)
            ),
            Error::PositionOutOfRange { position, dim } => write!(
                f,
                "addition position {position} out of range: must be at most the dimension {dim}"
            ),
            Error::NoPredecessor => {
                write!(f, "the weight-1 matrix has no removal predecessor")
            }
            Error::BudgetExceeded { n, cap } => {
                write!(f, "n = {n} exceeds the enumeration cap {cap}")
            }
            Error::UnknownStatistic { name, available } => {
                write!(f, "unknown statistic `{name}`; available: {available}")
            }
            Error::UnknownFamily { name } => {
                write!(f, "unknown family `{name}`; expected avoiders, sequences, or matrices")
            }
        }
    }
}

impl std::error::Error for Error {}
