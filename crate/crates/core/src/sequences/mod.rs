//! W sequences, primes between consecutive squares, Grimm assignments for
//! runs of composites, and the longest non-W window.

mod matching;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::integers::{factorize, is_prime, is_prime_u64, Natural, PrimeSieve};
use crate::limits::Limits;

pub use matching::{maximum_matching, perfect_matching_exists_exhaustive};

/// Result of the W-sequence test on a strictly increasing sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WReport {
    pub sequence: Vec<Natural>,
    /// Least index whose element is coprime to every other element.
    pub witness: Option<usize>,
}

impl WReport {
    pub fn is_w(&self) -> bool {
        self.witness.is_some()
    }

    pub fn witness_value(&self) -> Option<&Natural> {
        self.witness.map(|i| &self.sequence[i])
    }
}

fn least_witness_u64(seq: &[u64]) -> Option<usize> {
    (0..seq.len()).find(|&r| {
        let v = seq[r];
        seq.iter()
            .enumerate()
            .all(|(j, &w)| j == r || num_integer::gcd(v, w) == 1)
    })
}

fn least_witness_big(seq: &[Natural]) -> Option<usize> {
    (0..seq.len()).find(|&r| {
        seq.iter()
            .enumerate()
            .all(|(j, w)| j == r || seq[r].gcd_fast(w).is_one())
    })
}

/// Finds the least `r` with `gcd(a_r, a_j) = 1` for all `j != r`.
///
/// A one-element sequence is vacuously W.
pub fn w_witness(seq: &[Natural]) -> Result<WReport> {
    if seq.is_empty() {
        return Err(domain("empty sequence"));
    }
    if seq[0].is_zero() {
        return Err(domain("sequence elements must be positive"));
    }
    if seq.windows(2).any(|w| w[0] >= w[1]) {
        return Err(domain("sequence must be strictly increasing"));
    }
    let small: Option<Vec<u64>> = seq.iter().map(Natural::to_u64).collect();
    let witness = match small {
        Some(words) => least_witness_u64(&words),
        None => least_witness_big(seq),
    };
    Ok(WReport { sequence: seq.to_vec(), witness })
}

/// `m+1, ..., m+n`.
fn window(m: &Natural, n: u64) -> Vec<Natural> {
    (1..=n).map(|i| m + i).collect()
}

fn check_scan(len: u64, limits: &Limits, what: &'static str) -> Result<()> {
    if len > limits.scan_limit {
        return Err(Error::ResourceLimit { what, limit: limits.scan_limit });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalEquivalence {
    pub m: Natural,
    /// Some prime lies strictly between `m^2` and `(m+1)^2`.
    pub prime_exists: bool,
    /// `m^2 + 1, ..., m^2 + 2m` is a W sequence.
    pub is_w: bool,
    /// The least prime in the interval, if any.
    pub least_prime: Option<Natural>,
    pub witness: Option<Natural>,
}

impl IntervalEquivalence {
    pub fn holds(&self) -> bool {
        self.prime_exists == self.is_w
    }
}

/// Computes both sides of "a prime lies in `(m^2, (m+1)^2)`" iff
/// "`m^2+1, ..., m^2+2m` is a W sequence" independently: the first by
/// trial-division primality, the second by pairwise gcds.
pub fn prime_interval_equivalence(m: &Natural, limits: &Limits) -> Result<IntervalEquivalence> {
    if m.is_zero() {
        return Err(domain("interval equivalence needs m >= 1"));
    }
    let len = m.to_u64().filter(|&v| v <= u64::MAX / 2).map(|v| 2 * v);
    check_scan(len.unwrap_or(u64::MAX), limits, "interval length")?;
    let len = len.expect("checked above");
    let square = m * m;
    let mut least_prime = None;
    for i in 1..=len {
        let candidate = &square + i;
        if is_prime(&candidate, limits)? {
            least_prime = Some(candidate);
            break;
        }
    }
    let report = w_witness(&window(&square, len))?;
    Ok(IntervalEquivalence {
        m: m.clone(),
        prime_exists: least_prime.is_some(),
        is_w: report.is_w(),
        least_prime,
        witness: report.witness_value().cloned(),
    })
}

/// Distinct primes `p_i` with `p_i | m + i` for `i = 1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrimmAssignment {
    pub m: Natural,
    pub n: u64,
    pub assignment: Vec<Natural>,
}

impl GrimmAssignment {
    /// Re-checks primality, divisibility and distinctness from scratch.
    pub fn validate(&self, limits: &Limits) -> Result<()> {
        if self.assignment.len() as u64 != self.n {
            return Err(Error::InvariantViolated(format!(
                "{} primes for a window of length {}",
                self.assignment.len(),
                self.n
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (i, p) in self.assignment.iter().enumerate() {
            let target = &self.m + (i as u64 + 1);
            if !is_prime(p, limits)? {
                return Err(Error::InvariantViolated(format!("{p} assigned to {target} is not prime")));
            }
            if !target.is_multiple_of(p) {
                return Err(Error::InvariantViolated(format!("{p} does not divide {target}")));
            }
            if !seen.insert(p.clone()) {
                return Err(Error::InvariantViolated(format!("{p} assigned twice")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrimmOutcome {
    Assigned(GrimmAssignment),
    /// No system of distinct prime divisors exists: a counterexample to
    /// Grimm's conjecture, confirmed by exhaustive search.
    Infeasible,
}

/// Matches each `m + i` to a distinct prime divisor via maximum bipartite
/// matching. Every element of the window must be composite.
pub fn grimm_assign(m: &Natural, n: u64, limits: &Limits) -> Result<GrimmOutcome> {
    if n == 0 {
        return Err(domain("window length must be positive"));
    }
    check_scan(n, limits, "window length")?;
    let elements = window(m, n);
    let mut pool: BTreeMap<Natural, usize> = BTreeMap::new();
    let mut divisor_sets = Vec::with_capacity(elements.len());
    for v in &elements {
        if v < &Natural::from(4u32) {
            return Err(domain(format!("{v} is not composite")));
        }
        let f = factorize(v, limits)?;
        if f.factors().len() == 1 && f.factors()[0].1 == 1 {
            return Err(domain(format!("{v} is prime; the window must consist of composites")));
        }
        divisor_sets.push(f.primes().cloned().collect::<Vec<_>>());
        for p in f.primes() {
            let next = pool.len();
            pool.entry(p.clone()).or_insert(next);
        }
    }
    let primes_by_index: Vec<Natural> = {
        let mut v = vec![Natural::zero(); pool.len()];
        for (p, &i) in &pool {
            v[i] = p.clone();
        }
        v
    };
    let adjacency: Vec<Vec<usize>> = divisor_sets.iter().map(|ps| ps.iter().map(|p| pool[p]).collect()).collect();
    let matched = maximum_matching(&adjacency, pool.len());
    if matched.iter().any(Option::is_none) {
        if perfect_matching_exists_exhaustive(&adjacency, pool.len()) {
            return Err(Error::InvariantViolated(format!(
                "augmenting-path matching missed an assignment for window {m}+1..{m}+{n}"
            )));
        }
        return Ok(GrimmOutcome::Infeasible);
    }
    let assignment = matched.into_iter().map(|r| primes_by_index[r.expect("perfect")].clone()).collect();
    let result = GrimmAssignment { m: m.clone(), n, assignment };
    result.validate(limits)?;
    Ok(GrimmOutcome::Assigned(result))
}

/// All maximal runs of consecutive composites whose last element is at
/// most `limit`, as `(m, n)` with the run being `m+1, ..., m+n`.
pub fn composite_runs(limit: u64, limits: &Limits) -> Result<Vec<(u64, u64)>> {
    if limit < 4 {
        return Err(domain("composite runs need limit >= 4"));
    }
    let sieve = PrimeSieve::new(limit, limits)?;
    let mut runs = Vec::new();
    let mut start = None;
    for v in 4..=limit {
        match (sieve.is_prime(v), start) {
            (false, None) => start = Some(v),
            (true, Some(s)) => {
                runs.push((s - 1, v - s));
                start = None;
            }
            _ => {}
        }
    }
    // A run reaching `limit` is maximal only if `limit + 1` is prime.
    if let Some(s) = start {
        if is_prime_u64(limit + 1) {
            runs.push((s - 1, limit + 1 - s));
        }
    }
    Ok(runs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrimmRow {
    pub m: u64,
    pub n: u64,
    pub outcome: GrimmOutcome,
}

/// Grimm assignments for every maximal composite run starting at or
/// below `start_limit`.
pub fn grimm_scan(start_limit: u64, limits: &Limits) -> Result<Vec<GrimmRow>> {
    if start_limit < 4 {
        return Ok(Vec::new());
    }
    let next_prime = (start_limit + 1..).find(|&v| is_prime_u64(v)).expect("primes are unbounded");
    let runs: Vec<(u64, u64)> = composite_runs(next_prime - 1, limits)?
        .into_iter()
        .filter(|&(m, _)| m < start_limit)
        .collect();
    runs.par_iter()
        .map(|&(m, n)| grimm_assign(&Natural::from(m), n, limits).map(|outcome| GrimmRow { m, n, outcome }))
        .collect()
}

/// `ceil(4 (ln(m+2))^2)`, the default window bound for [`non_w_max_run`].
pub fn default_window_bound(m: &Natural) -> u64 {
    let x = m.to_u64().map(|v| v as f64).unwrap_or_else(|| m.to_string().parse::<f64>().unwrap_or(f64::MAX));
    let ln = (x + 2.0).ln();
    (4.0 * ln * ln).ceil() as u64
}

/// The largest `n <= n_max` such that `m+1, ..., m+n` is not a W sequence,
/// or 0 if every window is W. Every `n` is tested since the property is
/// not monotone in `n`.
pub fn non_w_max_run(m: &Natural, n_max: u64, limits: &Limits) -> Result<u64> {
    if n_max == 0 {
        return Err(domain("window bound must be positive"));
    }
    check_scan(n_max, limits, "window length")?;
    let full = window(m, n_max);
    let mut best = 0;
    for n in 1..=n_max {
        if !w_witness(&full[..n as usize])?.is_w() {
            best = n;
        }
    }
    Ok(best)
}
