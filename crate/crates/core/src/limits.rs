/// Work budgets for operations whose cost is not logarithmic in their
/// inputs. Exceeding a budget is reported as [`Error::ResourceLimit`]
/// instead of stalling.
///
/// [`Error::ResourceLimit`]: crate::Error::ResourceLimit
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest bound accepted by the prime sieve.
    pub sieve_limit: u64,
    /// Maximum number of trial divisors tried by one factorization.
    pub trial_steps: u64,
    /// Maximum number of subtraction steps for the subtractive algorithm,
    /// the dynamical map, and division by repeated addition.
    pub subtractive_steps: u64,
    /// Maximum length of a range scan (Yao-Knuth range, window lengths).
    pub scan_limit: u64,
}

impl Limits {
    pub const DEFAULT_SIEVE_LIMIT: u64 = 10_000_000;
    pub const DEFAULT_TRIAL_STEPS: u64 = 10_000_000;
    pub const DEFAULT_SUBTRACTIVE_STEPS: u64 = 1_000_000;
    pub const DEFAULT_SCAN_LIMIT: u64 = 10_000_000;

    /// Every budget set to the same value.
    pub fn uniform(budget: u64) -> Self {
        Limits {
            sieve_limit: budget,
            trial_steps: budget,
            subtractive_steps: budget,
            scan_limit: budget,
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            sieve_limit: Self::DEFAULT_SIEVE_LIMIT,
            trial_steps: Self::DEFAULT_TRIAL_STEPS,
            subtractive_steps: Self::DEFAULT_SUBTRACTIVE_STEPS,
            scan_limit: Self::DEFAULT_SCAN_LIMIT,
        }
    }
}
