//! Exact natural-number and rational arithmetic, plus the primality and
//! factorization routines the rest of the crate is built on.

mod natural;
mod primes;
mod rational;

pub use natural::{Integer, Natural};
pub use primes::{
    factorize, is_prime, lucas_lehmer, primes_up_to, sigma, smallest_prime_factor, Factorization,
    PrimeSieve,
};
pub(crate) use primes::is_prime_u64;
pub use rational::ExactRational;

/// Quotient and remainder of `a` by `b`.
pub fn divmod(a: &Natural, b: &Natural) -> crate::Result<(Natural, Natural)> {
    a.divmod(b)
}
