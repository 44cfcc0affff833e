use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::Natural;
use crate::error::{domain, Error, Result};
use crate::limits::Limits;

/// Prime factorization with strictly increasing primes and positive
/// exponents. The factorization of 1 is empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(Natural, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &Natural> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of `prime^exponent` over all factors.
    pub fn value(&self) -> Natural {
        self.factors
            .iter()
            .fold(Natural::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    /// Sum of divisors, multiplicatively from the prime powers.
    pub fn sigma(&self) -> Natural {
        self.factors.iter().fold(Natural::one(), |acc, (p, e)| {
            let mut term = Natural::one();
            let mut power = Natural::one();
            for _ in 0..*e {
                power *= p;
                term += &power;
            }
            acc * term
        })
    }

    /// Builds a factorization from parts whose primality the caller has
    /// certified by other means (e.g. a Lucas-Lehmer test).
    pub(crate) fn from_certified(mut factors: Vec<(Natural, u32)>) -> Self {
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|(_, e)| *e > 0));
        Factorization { factors }
    }
}

/// Trial-division state shared by the u64 and big-integer paths.
struct StepCounter {
    used: u64,
    cap: u64,
}

impl StepCounter {
    fn new(limits: &Limits) -> Self {
        StepCounter { used: 0, cap: limits.trial_steps }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            return Err(Error::ResourceLimit { what: "trial-division steps", limit: self.cap });
        }
        Ok(())
    }
}

fn spf_u64(n: u64, steps: &mut StepCounter) -> Result<u64> {
    steps.tick()?;
    if n % 2 == 0 {
        return Ok(2);
    }
    let mut d = 3u64;
    while d <= n / d {
        steps.tick()?;
        if n % d == 0 {
            return Ok(d);
        }
        d += 2;
    }
    Ok(n)
}

fn spf_big(n: &BigUint, steps: &mut StepCounter) -> Result<BigUint> {
    steps.tick()?;
    if (n % 2u32).is_zero() {
        return Ok(BigUint::from(2u32));
    }
    let mut d = BigUint::from(3u32);
    while &d * &d <= *n {
        steps.tick()?;
        if (n % &d).is_zero() {
            return Ok(d);
        }
        d += 2u32;
    }
    Ok(n.clone())
}

/// The least prime dividing `n`; equals `n` exactly when `n` is prime.
pub fn smallest_prime_factor(n: &Natural, limits: &Limits) -> Result<Natural> {
    if *n < Natural::from(2u32) {
        return Err(domain(format!("smallest prime factor undefined for {n}")));
    }
    let mut steps = StepCounter::new(limits);
    match n.to_u64() {
        Some(small) => spf_u64(small, &mut steps).map(Natural::from),
        None => spf_big(n.as_biguint(), &mut steps).map(Natural::from),
    }
}

pub fn is_prime(n: &Natural, limits: &Limits) -> Result<bool> {
    if *n < Natural::from(2u32) {
        return Ok(false);
    }
    Ok(smallest_prime_factor(n, limits)? == *n)
}

/// Unbudgeted primality for word-size values, for scans whose size is
/// already bounded by the caller.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut unlimited = StepCounter { used: 0, cap: u64::MAX };
    spf_u64(n, &mut unlimited).map(|p| p == n).unwrap_or(false)
}

/// Sieve of Eratosthenes over `0..=limit`.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    composite: Vec<bool>,
}

impl PrimeSieve {
    pub fn new(limit: u64, limits: &Limits) -> Result<Self> {
        if limit > limits.sieve_limit {
            return Err(Error::ResourceLimit { what: "sieve size", limit: limits.sieve_limit });
        }
        let len = limit as usize + 1;
        let mut composite = vec![false; len.max(2)];
        composite[0] = true;
        composite[1] = true;
        let mut p = 2usize;
        while p * p < len {
            if !composite[p] {
                for multiple in (p * p..len).step_by(p) {
                    composite[multiple] = true;
                }
            }
            p += 1;
        }
        composite.truncate(len);
        Ok(PrimeSieve { composite })
    }

    pub fn limit(&self) -> u64 {
        self.composite.len() as u64 - 1
    }

    /// Panics if `n` exceeds the sieve limit.
    pub fn is_prime(&self, n: u64) -> bool {
        !self.composite[n as usize]
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| i as u64)
    }
}

/// All primes `p <= limit` in ascending order.
pub fn primes_up_to(limit: &Natural, limits: &Limits) -> Result<Vec<Natural>> {
    let bound = limit
        .to_u64()
        .ok_or(Error::ResourceLimit { what: "sieve size", limit: limits.sieve_limit })?;
    let sieve = PrimeSieve::new(bound, limits)?;
    Ok(sieve.primes().map(Natural::from).collect())
}

fn factorize_u64(n: u64, steps: &mut StepCounter) -> Result<Vec<(Natural, u32)>> {
    factorize_u64_from(n, 2, steps)
}

fn factorize_big(n: &BigUint, steps: &mut StepCounter) -> Result<Vec<(Natural, u32)>> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= n {
        if let Some(small) = n.to_u64() {
            // Continue on the word-size path once the cofactor fits.
            let rest = factorize_u64_from(small, d.to_u64().unwrap(), steps)?;
            out.extend(rest);
            return Ok(out);
        }
        steps.tick()?;
        if (&n % &d).is_zero() {
            let mut e = 0;
            while (&n % &d).is_zero() {
                n /= &d;
                e += 1;
            }
            out.push((Natural::from(d.clone()), e));
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if !n.is_one() {
        out.push((Natural::from(n), 1));
    }
    Ok(out)
}

fn factorize_u64_from(mut n: u64, start: u64, steps: &mut StepCounter) -> Result<Vec<(Natural, u32)>> {
    let mut out = Vec::new();
    let mut d = start;
    while d <= n / d {
        steps.tick()?;
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((Natural::from(d), e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((Natural::from(n), 1));
    }
    Ok(out)
}

/// Prime factorization by trial division.
pub fn factorize(n: &Natural, limits: &Limits) -> Result<Factorization> {
    if n.is_zero() {
        return Err(domain("cannot factorize 0"));
    }
    let mut steps = StepCounter::new(limits);
    let factors = match n.to_u64() {
        Some(small) => factorize_u64(small, &mut steps)?,
        None => factorize_big(n.as_biguint(), &mut steps)?,
    };
    Ok(Factorization { factors })
}

/// Sum of all positive divisors of `n`, including `n`.
pub fn sigma(n: &Natural, limits: &Limits) -> Result<Natural> {
    if n.is_zero() {
        return Err(domain("sigma undefined for 0"));
    }
    Ok(factorize(n, limits)?.sigma())
}

/// Lucas-Lehmer test: whether `2^p - 1` is prime, for prime `p`.
pub fn lucas_lehmer(p: &Natural, limits: &Limits) -> Result<bool> {
    if !is_prime(p, limits)? {
        return Err(domain(format!("Lucas-Lehmer requires a prime exponent, got {p}")));
    }
    let exponent = match p.to_u64() {
        Some(e) if e <= limits.scan_limit && e <= u32::MAX as u64 => e as u32,
        _ => return Err(Error::ResourceLimit { what: "Lucas-Lehmer exponent", limit: limits.scan_limit }),
    };
    if exponent == 2 {
        return Ok(true);
    }
    let mersenne = (BigUint::one() << exponent) - 1u32;
    let mut s = BigUint::from(4u32);
    for _ in 0..exponent - 2 {
        // s^2 - 2 stays non-negative modulo m by adding m first.
        s = (&s * &s + &mersenne - 2u32) % &mersenne;
    }
    Ok(s.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Natural {
        Natural::from(v)
    }

    fn lim() -> Limits {
        Limits::default()
    }

    /// Independent oracle: primality by checking every candidate divisor.
    fn naive_prime(v: u64) -> bool {
        v >= 2 && (2..v).all(|d| v % d != 0)
    }

    #[test]
    fn spf_examples() {
        assert_eq!(smallest_prime_factor(&n(2), &lim()).unwrap(), n(2));
        assert_eq!(smallest_prime_factor(&n(91), &lim()).unwrap(), n(7));
        assert_eq!(smallest_prime_factor(&n(30031), &lim()).unwrap(), n(59));
        assert!(matches!(smallest_prime_factor(&n(1), &lim()), Err(Error::Domain(_))));
        assert!(matches!(smallest_prime_factor(&n(0), &lim()), Err(Error::Domain(_))));
    }

    #[test]
    fn spf_bounded_by_root_or_self() {
        for v in 2..=10_000u64 {
            let p = smallest_prime_factor(&n(v), &lim()).unwrap().to_u64().unwrap();
            assert!(p * p <= v || p == v, "{v}");
            assert_eq!(v % p, 0);
            assert!(naive_prime(p));
        }
    }

    #[test]
    fn sieve_examples() {
        assert!(primes_up_to(&n(1), &lim()).unwrap().is_empty());
        assert!(primes_up_to(&n(0), &lim()).unwrap().is_empty());
        let ten: Vec<u64> = primes_up_to(&n(10), &lim()).unwrap().iter().map(|p| p.to_u64().unwrap()).collect();
        assert_eq!(ten, vec![2, 3, 5, 7]);
        let thirty: Vec<u64> = primes_up_to(&n(30), &lim()).unwrap().iter().map(|p| p.to_u64().unwrap()).collect();
        assert_eq!(thirty, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn sieve_matches_spf_fixed_points() {
        let sieve: Vec<u64> = primes_up_to(&n(10_000), &lim()).unwrap().iter().map(|p| p.to_u64().unwrap()).collect();
        let by_spf: Vec<u64> = (2..=10_000u64)
            .filter(|&v| smallest_prime_factor(&n(v), &lim()).unwrap() == n(v))
            .collect();
        assert_eq!(sieve, by_spf);
    }

    #[test]
    fn sieve_budget() {
        let tight = Limits { sieve_limit: 100, ..Limits::default() };
        assert!(matches!(primes_up_to(&n(101), &tight), Err(Error::ResourceLimit { .. })));
        assert_eq!(primes_up_to(&n(100), &tight).unwrap().len(), 25);
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(&n(1), &lim()).unwrap().is_empty());
        assert_eq!(factorize(&n(30031), &lim()).unwrap().factors(), &[(n(59), 1), (n(509), 1)]);
        assert_eq!(factorize(&n(8128), &lim()).unwrap().factors(), &[(n(2), 6), (n(127), 1)]);
        assert!(factorize(&n(0), &lim()).is_err());
    }

    #[test]
    fn factorize_reconstructs() {
        for v in 1..=10_000u64 {
            let f = factorize(&n(v), &lim()).unwrap();
            assert_eq!(f.value(), n(v));
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.primes().all(|p| naive_prime(p.to_u64().unwrap())));
        }
    }

    #[test]
    fn factorize_beyond_u64() {
        // (2^61 - 1) * 3^2 * 2^10 exceeds 64 bits.
        let m61 = n(2).pow(61) - 1u64;
        let v = &(&m61 * 9u64) * 1024u64;
        assert!(v.to_u64().is_none());
        let small = Limits { trial_steps: 10_000, ..Limits::default() };
        // The cofactor 2^61 - 1 cannot be certified within 10^4 steps...
        assert!(matches!(factorize(&v, &small), Err(Error::ResourceLimit { .. })));
        // ...but a big value with a small cofactor factors fully.
        let w = n(2).pow(70) * n(3).pow(5) * n(101);
        let f = factorize(&w, &small).unwrap();
        assert_eq!(f.factors(), &[(n(2), 70), (n(3), 5), (n(101), 1)]);
    }

    #[test]
    fn trial_budget_is_enforced() {
        let tight = Limits { trial_steps: 10, ..Limits::default() };
        // 10007 is prime; certifying it needs ~50 trial divisors.
        assert!(matches!(smallest_prime_factor(&n(10_007), &tight), Err(Error::ResourceLimit { .. })));
        assert_eq!(smallest_prime_factor(&n(10_008), &tight).unwrap(), n(2));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&n(1), &lim()).unwrap(), n(1));
        assert_eq!(sigma(&n(6), &lim()).unwrap(), n(12));
        assert_eq!(sigma(&n(28), &lim()).unwrap(), n(56));
        assert!(sigma(&n(0), &lim()).is_err());
    }

    #[test]
    fn sigma_matches_divisor_enumeration() {
        for v in 1..=2000u64 {
            let brute: u64 = (1..=v).filter(|d| v % d == 0).sum();
            assert_eq!(sigma(&n(v), &lim()).unwrap(), n(brute));
        }
    }

    #[test]
    fn sigma_is_multiplicative() {
        let table: Vec<Natural> = (0..=200u64 * 200)
            .map(|v| if v == 0 { Natural::zero() } else { sigma(&n(v), &lim()).unwrap() })
            .collect();
        for a in 1..=200u64 {
            for b in 1..=200u64 {
                if num_integer::gcd(a, b) == 1 {
                    assert_eq!(table[(a * b) as usize], &table[a as usize] * &table[b as usize], "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn lucas_lehmer_examples() {
        assert!(lucas_lehmer(&n(2), &lim()).unwrap());
        assert!(lucas_lehmer(&n(3), &lim()).unwrap());
        assert!(!lucas_lehmer(&n(11), &lim()).unwrap());
        assert!(lucas_lehmer(&n(13), &lim()).unwrap());
        assert!(matches!(lucas_lehmer(&n(9), &lim()), Err(Error::Domain(_))));
        assert!(matches!(lucas_lehmer(&n(1), &lim()), Err(Error::Domain(_))));
    }

    #[test]
    fn lucas_lehmer_agrees_with_trial_division() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let m = (1u64 << p) - 1;
            assert_eq!(lucas_lehmer(&n(p), &lim()).unwrap(), is_prime_u64(m), "p = {p}");
        }
    }

    #[test]
    fn lucas_lehmer_known_exponents_to_61() {
        let mersenne: Vec<u64> = (2..=61u64)
            .filter(|&p| is_prime_u64(p))
            .filter(|&p| lucas_lehmer(&n(p), &lim()).unwrap())
            .collect();
        assert_eq!(mersenne, vec![2, 3, 5, 7, 13, 17, 19, 31, 61]);
    }
}
