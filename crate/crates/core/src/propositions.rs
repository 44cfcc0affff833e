//! Coprimality by repeated subtraction, Euclid's lemma, the
//! infinitude-of-primes construction, and even perfect numbers.

use std::fmt;

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::euclid::gcd_subtractive;
use crate::integers::{is_prime, lucas_lehmer, sigma, smallest_prime_factor, Factorization, Natural};
use crate::limits::Limits;

/// Whether the subtraction chain on `(a, b)` ends at the unit.
///
/// Two equal numbers are only accepted when both are 1.
pub fn coprime_by_prop1(a: &Natural, b: &Natural, limits: &Limits) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(domain("coprimality needs positive arguments"));
    }
    if a == b && !a.is_one() {
        return Err(domain(format!("the subtraction chain needs unequal numbers, got {a} twice")));
    }
    let (g, _) = gcd_subtractive(a, b, limits)?;
    Ok(g.is_one())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaWitness {
    DividesA,
    DividesB,
    /// `p` does not divide the product.
    Neither,
}

impl fmt::Display for LemmaWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaWitness::DividesA => "divides-a",
            LemmaWitness::DividesB => "divides-b",
            LemmaWitness::Neither => "neither",
        })
    }
}

/// If the prime `p` divides `a*b`, reports which factor it divides
/// (preferring `a`). A prime dividing the product but neither factor is
/// reported as an invariant violation.
pub fn euclid_lemma_witness(p: &Natural, a: &Natural, b: &Natural, limits: &Limits) -> Result<LemmaWitness> {
    if !is_prime(p, limits)? {
        return Err(domain(format!("{p} is not prime")));
    }
    if a.is_zero() || b.is_zero() {
        return Err(domain("Euclid's lemma needs positive factors"));
    }
    if !(a * b).is_multiple_of(p) {
        return Ok(LemmaWitness::Neither);
    }
    if a.is_multiple_of(p) {
        Ok(LemmaWitness::DividesA)
    } else if b.is_multiple_of(p) {
        Ok(LemmaWitness::DividesB)
    } else {
        Err(Error::InvariantViolated(format!("{p} divides {a}*{b} but neither factor")))
    }
}

/// `E = 1 + p_1 ... p_k` and a prime factor of `E` outside the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidExtension {
    pub input_primes: Vec<Natural>,
    pub e_value: Natural,
    pub new_prime: Natural,
}

pub fn euclid_prime_extension(primes: &[Natural], limits: &Limits) -> Result<EuclidExtension> {
    let mut input_primes = primes.to_vec();
    input_primes.sort();
    if input_primes.windows(2).any(|w| w[0] == w[1]) {
        return Err(domain("duplicate prime in input"));
    }
    for p in &input_primes {
        if !is_prime(p, limits)? {
            return Err(domain(format!("{p} is not prime")));
        }
    }
    let e_value = input_primes.iter().product::<Natural>() + 1u64;
    // The least divisor > 1 of E is prime and cannot be any p_i, since
    // each p_i leaves remainder 1.
    let new_prime = smallest_prime_factor(&e_value, limits)?;
    if input_primes.binary_search(&new_prime).is_ok() {
        return Err(Error::InvariantViolated(format!("{new_prime} divides {e_value} and is already listed")));
    }
    Ok(EuclidExtension { input_primes, e_value, new_prime })
}

/// `2^(p-1) (2^p - 1)` with `2^p - 1` prime, and its divisor sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectCertificate {
    pub p: Natural,
    pub mersenne: Natural,
    pub value: Natural,
    pub sigma_value: Natural,
}

/// Builds the perfect number attached to a Mersenne prime.
///
/// The divisor sum is computed by trial-division factorization when that
/// fits the budget, otherwise from the factorization `2^(p-1) * M` whose
/// odd part is certified prime by Lucas-Lehmer.
pub fn perfect_from_mersenne(p: &Natural, limits: &Limits) -> Result<PerfectCertificate> {
    if !lucas_lehmer(p, limits)? {
        let exponent = p.to_u64().expect("Lucas-Lehmer accepted the exponent");
        let mersenne = Natural::from(2u32).pow(exponent as u32) - 1u64;
        return Err(Error::HypothesisFailed(format!("2^{p} - 1 = {mersenne} is composite")));
    }
    let exponent = p.to_u64().expect("Lucas-Lehmer accepted the exponent") as u32;
    let two = Natural::from(2u32);
    let mersenne = two.pow(exponent) - 1u64;
    let value = two.pow(exponent - 1) * &mersenne;
    let sigma_value = match sigma(&value, limits) {
        Ok(s) => s,
        Err(Error::ResourceLimit { .. }) => {
            let mut parts = vec![(mersenne.clone(), 1)];
            if exponent > 1 {
                parts.push((two.clone(), exponent - 1));
            }
            Factorization::from_certified(parts).sigma()
        }
        Err(e) => return Err(e),
    };
    if sigma_value != &value * 2u64 {
        return Err(Error::InvariantViolated(format!("sigma({value}) = {sigma_value}, not twice the value")));
    }
    Ok(PerfectCertificate { p: p.clone(), mersenne, value, sigma_value })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfectClass {
    /// Even perfect number `2^(p-1) (2^p - 1)`.
    Perfect { p: Natural },
    NotPerfect,
}

/// Given a perfect `n`, recovers `p` with `n = 2^(p-1) (2^p - 1)`.
fn euler_decomposition(n: &Natural, limits: &Limits) -> Result<Natural> {
    let Some(k) = n.trailing_zeros().filter(|&k| k > 0) else {
        return Err(Error::InvariantViolated(format!("odd perfect number {n}")));
    };
    let odd_part = n.shr(k);
    let p = Natural::from(k + 1);
    let expected = Natural::from(2u32).pow((k + 1) as u32) - 1u64;
    if odd_part != expected || !is_prime(&p, limits)? || !lucas_lehmer(&p, limits)? {
        return Err(Error::InvariantViolated(format!(
            "even perfect number {n} is not 2^(p-1)(2^p - 1) with 2^p - 1 prime"
        )));
    }
    Ok(p)
}

fn classify_with_sigma(n: &Natural, sigma_n: &Natural, limits: &Limits) -> Result<PerfectClass> {
    if *sigma_n != n * 2u64 {
        return Ok(PerfectClass::NotPerfect);
    }
    Ok(PerfectClass::Perfect { p: euler_decomposition(n, limits)? })
}

/// Perfect iff `sigma(n) = 2n`; for perfect `n` the Euler form is
/// recovered and checked.
pub fn classify_perfect(n: &Natural, limits: &Limits) -> Result<PerfectClass> {
    let s = sigma(n, limits)?;
    classify_with_sigma(n, &s, limits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectScan {
    pub limit: u64,
    /// `(n, p)` for each perfect `n <= limit`, ascending.
    pub found: Vec<(Natural, Natural)>,
}

const SCAN_BLOCK: u64 = 1 << 16;

/// Divisor sums of `lo..hi` by pairing each divisor `d <= sqrt(n)` with
/// its cofactor `n / d`.
fn sigma_block(lo: u64, hi: u64) -> Vec<u64> {
    let mut sums = vec![0u64; (hi - lo) as usize];
    let mut d = 1u64;
    while d * d < hi {
        // First multiple of d in the block that is at least d^2.
        let mut cofactor = lo.div_ceil(d).max(d);
        let mut m = cofactor * d;
        while m < hi {
            let slot = &mut sums[(m - lo) as usize];
            *slot += d;
            if cofactor != d {
                *slot += cofactor;
            }
            m += d;
            cofactor += 1;
        }
        d += 1;
    }
    sums
}

/// Classifies every `1 <= n <= limit`. Divisor sums come from a blocked
/// divisor sieve; each hit is re-classified through the trial-division
/// route before it is reported.
pub fn perfect_scan(limit: u64, limits: &Limits) -> Result<PerfectScan> {
    if limit > limits.scan_limit {
        return Err(Error::ResourceLimit { what: "perfect-number scan", limit: limits.scan_limit });
    }
    let blocks: Vec<u64> = (0..limit.div_ceil(SCAN_BLOCK)).collect();
    let hits: Vec<u64> = blocks
        .par_iter()
        .flat_map_iter(|&block| {
            let lo = (block * SCAN_BLOCK).max(1);
            let hi = ((block + 1) * SCAN_BLOCK).min(limit + 1);
            sigma_block(lo, hi)
                .into_iter()
                .enumerate()
                .filter(move |&(i, s)| s == 2 * (lo + i as u64))
                .map(move |(i, _)| lo + i as u64)
                .collect::<Vec<_>>()
        })
        .collect();
    let mut found = Vec::with_capacity(hits.len());
    for n in hits {
        let n = Natural::from(n);
        match classify_perfect(&n, limits)? {
            PerfectClass::Perfect { p } => found.push((n, p)),
            PerfectClass::NotPerfect => {
                return Err(Error::InvariantViolated(format!("divisor sieve and factorization disagree on {n}")))
            }
        }
    }
    Ok(PerfectScan { limit, found })
}
