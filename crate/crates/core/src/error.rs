use thiserror::Error;

/// Errors raised by the algebra, congruence and centrality machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "operation `{symbol}`: table entry {position} is {value}, outside carrier of size {size}"
    )]
    OutOfRangeEntry {
        symbol: String,
        position: usize,
        value: usize,
        size: usize,
    },
    #[error("operation `{symbol}`: expected {expected} table entries, found {found}")]
    WrongTableLength {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("empty carrier with constant symbol `{symbol}`")]
    EmptyWithConstant { symbol: String },
    #[error("duplicate operation symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("missing table for operation `{0}`")]
    MissingTable(String),
    #[error("algebras do not share a signature")]
    SignatureMismatch,
    #[error("element {element} outside carrier of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("carrier size mismatch: expected {expected}, found {found}")]
    MismatchedCarriers { expected: usize, found: usize },
    #[error("not a congruence: {0}")]
    NotACongruence(String),
    #[error("not a homomorphism: fails at `{symbol}` on arguments {args:?}")]
    NotAHomomorphism { symbol: String, args: Vec<usize> },
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("witness cannot be normalized: meet of beta and gamma is not below ker pi")]
    NotNormalizable,
    #[error("algebra is not in the variety: {0}")]
    NotInVariety(String),
    #[error("algebra is not subdirectly irreducible")]
    NotSubdirectlyIrreducible,
    #[error("the class K is empty")]
    EmptyClass,
    #[error("modularity assertion refuted: {0}")]
    ModularityRefuted(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_budget(what: &'static str, needed: u128, limit: u128) -> Result<()> {
    if needed > limit {
        Err(Error::BudgetExceeded {
            what,
            needed,
            limit,
        })
    } else {
        Ok(())
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}
