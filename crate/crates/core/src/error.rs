use thiserror::Error;

/// Errors are kept disjoint from negative verdicts: a checker that decides
/// "no" returns a [`crate::report::ClassReport`] with `verdict: false`, while
/// malformed input, blown search budgets, and violated preconditions surface
/// here.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Input does not have the right shape (dimension mismatch, unknown
    /// element, duplicate name, ...). Distinct from an axiom failure.
    #[error("structural error: {0}")]
    Structural(String),

    /// An exhaustive search ran out of nodes. Exceeding the budget is never
    /// reported as "absent": only a completed search disproves existence.
    #[error("search budget exceeded: bound of {bound} nodes")]
    BudgetExceeded { bound: u64 },

    /// A size cap for an enumerator or permutation search was exceeded.
    #[error("size {size} exceeds the cap of {cap} for {what}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A post-hoc assertion failed that the underlying theory says cannot;
    /// reaching this would falsify the result the operation implements.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    /// Unknown suite id passed to the suite runner.
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Node budget for backtracking searches. One unit is charged per attempted
/// table-prefix extension, so the budget bounds work, not output size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn counter(self) -> BudgetCounter {
        BudgetCounter {
            bound: self.0,
            left: self.0,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(Self::DEFAULT_NODES)
    }
}

#[derive(Debug, Clone)]
pub struct BudgetCounter {
    bound: u64,
    left: u64,
}

impl BudgetCounter {
    pub fn charge(&mut self, n: u64) -> Result<()> {
        if self.left < n {
            return Err(Error::BudgetExceeded { bound: self.bound });
        }
        self.left -= n;
        Ok(())
    }
}
