//! The subtractive, remainder and extended forms of Euclid's algorithm,
//! and the reconstruction of quotient and remainder from a Bezout identity.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::integers::{Integer, Natural};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Subtractive,
    Remainder,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Subtractive => "subtractive",
            Method::Remainder => "remainder",
        })
    }
}

/// One step of a trace.
///
/// For a remainder step `larger = smaller * quotient + remainder`; on the
/// very first step `larger` is simply the first operand, which may be the
/// smaller number (quotient 0). For a subtractive step
/// `remainder = larger - smaller` and `quotient` is absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidStep {
    pub larger: Natural,
    pub smaller: Natural,
    pub quotient: Option<Natural>,
    pub remainder: Natural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidTrace {
    pub method: Method,
    pub steps: Vec<EuclidStep>,
}

impl EuclidTrace {
    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    /// Partial quotients of a remainder trace; empty for subtractive traces.
    pub fn quotients(&self) -> impl Iterator<Item = &Natural> {
        self.steps.iter().filter_map(|s| s.quotient.as_ref())
    }

    /// Checks the per-step identities and the chaining of consecutive steps.
    pub fn validate(&self) -> Result<()> {
        let bad = |i: usize, what: &str| Err(Error::InvariantViolated(format!("trace step {}: {what}", i + 1)));
        for (i, step) in self.steps.iter().enumerate() {
            match (self.method, &step.quotient) {
                (Method::Remainder, Some(q)) => {
                    if step.remainder >= step.smaller || &(&step.smaller * q) + &step.remainder != step.larger {
                        return bad(i, "not a division step");
                    }
                }
                (Method::Subtractive, None) => {
                    if step.larger < step.smaller || &step.larger - &step.smaller != step.remainder {
                        return bad(i, "not a subtraction step");
                    }
                }
                _ => return bad(i, "quotient presence does not match method"),
            }
            if let Some(next) = self.steps.get(i + 1) {
                let chained = match self.method {
                    Method::Remainder => next.larger == step.smaller && next.smaller == step.remainder,
                    Method::Subtractive => {
                        let (hi, lo) = ordered(&step.smaller, &step.remainder);
                        next.larger == *hi && next.smaller == *lo
                    }
                };
                if !chained {
                    return bad(i, "does not chain into the next step");
                }
            }
        }
        Ok(())
    }
}

fn ordered<'a>(x: &'a Natural, y: &'a Natural) -> (&'a Natural, &'a Natural) {
    if x >= y {
        (x, y)
    } else {
        (y, x)
    }
}

fn require_positive(a: &Natural, b: &Natural) -> Result<()> {
    if a.is_zero() || b.is_zero() {
        return Err(domain(format!("gcd needs positive arguments, got ({a}, {b})")));
    }
    Ok(())
}

/// Replaces the larger number by the difference until both are equal.
///
/// The trace records each subtraction with its operands ordered
/// larger-first; it is empty when `a == b`.
pub fn gcd_subtractive(a: &Natural, b: &Natural, limits: &Limits) -> Result<(Natural, EuclidTrace)> {
    require_positive(a, b)?;
    let (mut hi, mut lo) = {
        let (h, l) = ordered(a, b);
        (h.clone(), l.clone())
    };
    let mut steps = Vec::new();
    while hi != lo {
        if steps.len() as u64 >= limits.subtractive_steps {
            return Err(Error::ResourceLimit { what: "subtraction steps", limit: limits.subtractive_steps });
        }
        let diff = &hi - &lo;
        steps.push(EuclidStep { larger: hi, smaller: lo.clone(), quotient: None, remainder: diff.clone() });
        if diff >= lo {
            hi = diff;
        } else {
            hi = lo;
            lo = diff;
        }
    }
    Ok((hi, EuclidTrace { method: Method::Subtractive, steps }))
}

/// Repeated division `a = bq + r`, `gcd(a, b) = gcd(b, r)`, until the
/// remainder vanishes.
pub fn gcd_remainder(a: &Natural, b: &Natural) -> Result<(Natural, EuclidTrace)> {
    require_positive(a, b)?;
    let (mut x, mut y) = (a.clone(), b.clone());
    let mut steps = Vec::new();
    loop {
        let (q, r) = x.divmod(&y)?;
        let done = r.is_zero();
        steps.push(EuclidStep { larger: x, smaller: y.clone(), quotient: Some(q), remainder: r.clone() });
        if done {
            return Ok((y, EuclidTrace { method: Method::Remainder, steps }));
        }
        x = y;
        y = r;
    }
}

/// `gcd(a, b)` with the given method.
pub fn gcd(a: &Natural, b: &Natural, method: Method, limits: &Limits) -> Result<(Natural, EuclidTrace)> {
    match method {
        Method::Subtractive => gcd_subtractive(a, b, limits),
        Method::Remainder => gcd_remainder(a, b),
    }
}

/// Integers `x, y` with `a*x + b*y = g = gcd(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub a: Natural,
    pub b: Natural,
    pub g: Natural,
    pub x: Integer,
    pub y: Integer,
}

impl BezoutCertificate {
    /// Checks `a*x + b*y = g`, `g | a` and `g | b`. Together these force
    /// `g = gcd(a, b)`: every common divisor of `a` and `b` divides the
    /// combination `a*x + b*y`.
    pub fn verify(&self) -> Result<()> {
        if self.a.is_zero() || self.b.is_zero() || self.g.is_zero() {
            return Err(Error::CertificateMismatch("zero entry".into()));
        }
        let combination = self.a.to_integer() * &self.x + self.b.to_integer() * &self.y;
        if combination != self.g.to_integer() {
            return Err(Error::CertificateMismatch(format!(
                "{}*({}) + {}*({}) = {combination}, not {}",
                self.a, self.x, self.b, self.y, self.g
            )));
        }
        if !self.a.is_multiple_of(&self.g) || !self.b.is_multiple_of(&self.g) {
            return Err(Error::CertificateMismatch(format!("{} is not a common divisor", self.g)));
        }
        Ok(())
    }
}

/// Extended Euclid: substitutes each remainder `r_i = r_{i-2} - q_i r_{i-1}`
/// back through the remainder trace to express the gcd as `a*x + b*y`.
pub fn xgcd(a: &Natural, b: &Natural) -> Result<BezoutCertificate> {
    let (g, trace) = gcd_remainder(a, b)?;
    // (x0, y0) expresses the previous remainder, (x1, y1) the current one;
    // initially a = 1*a + 0*b and b = 0*a + 1*b.
    let (mut x0, mut y0) = (BigInt::one(), BigInt::zero());
    let (mut x1, mut y1) = (BigInt::zero(), BigInt::one());
    // The last step has remainder 0, so the gcd is the divisor of that step
    // and only the preceding quotients contribute.
    let last = trace.step_count() - 1;
    for q in trace.quotients().take(last) {
        let q = q.to_integer();
        let x2 = &x0 - &q * &x1;
        let y2 = &y0 - &q * &y1;
        x0 = std::mem::replace(&mut x1, x2);
        y0 = std::mem::replace(&mut y1, y2);
    }
    let cert = BezoutCertificate { a: a.clone(), b: b.clone(), g, x: x1, y: y1 };
    debug_assert!(cert.verify().is_ok());
    Ok(cert)
}

/// Left fold of pairwise gcd: `gcd(gcd(a, b), c)` and so on.
pub fn gcd_many(values: &[Natural]) -> Result<Natural> {
    let (first, rest) = values.split_first().ok_or_else(|| domain("gcd of an empty list"))?;
    if first.is_zero() {
        return Err(domain("gcd needs positive arguments"));
    }
    rest.iter()
        .try_fold(first.clone(), |acc, v| gcd_remainder(&acc, v).map(|(g, _)| g))
}

/// Least common multiple `a*b / gcd(a, b)`.
pub fn lcm(a: &Natural, b: &Natural) -> Result<Natural> {
    let (g, _) = gcd_remainder(a, b)?;
    let (q, _) = a.divmod(&g)?;
    Ok(q * b)
}

/// `(a/g, b/g)` with `g = gcd(a, b)`: the least pair in the same ratio.
pub fn lowest_terms(a: &Natural, b: &Natural) -> Result<(Natural, Natural)> {
    let (g, _) = gcd_remainder(a, b)?;
    Ok((a.divmod(&g)?.0, b.divmod(&g)?.0))
}

/// Upper bound `5 * digits(max(a, b))` on the number of division steps.
pub fn lame_bound(a: &Natural, b: &Natural) -> u32 {
    5 * a.max(b).decimal_digits()
}

/// Which branch of the Bezout-to-division case analysis produced the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisionCase {
    /// `x = 0`: then `b = gcd(a, b)` divides `a`.
    XZero,
    /// `x = 1`: `a = -y*b + gcd(a, b)`.
    XOne,
    /// `x > 1` and `t = (x-1)(b-a) + gcd` already lies in `[0, b)`.
    DirectRemainder,
    /// `x > 1`, `t > b`: forces `b > a`, so `q = 0, r = a`.
    DivisorExceeds,
    /// `x > 1`, `t = b`: `b` divides `a`.
    ExactMultiple,
    /// `x > 1`, `t < 0`: locate `c = -t` among the intervals `[ib, (i+1)b)`.
    IntervalSearch,
}

impl fmt::Display for DivisionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DivisionCase::XZero => "x-zero",
            DivisionCase::XOne => "x-one",
            DivisionCase::DirectRemainder => "direct-remainder",
            DivisionCase::DivisorExceeds => "divisor-exceeds",
            DivisionCase::ExactMultiple => "exact-multiple",
            DivisionCase::IntervalSearch => "interval-search",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutDivision {
    pub quotient: Natural,
    pub remainder: Natural,
    pub case: DivisionCase,
    /// Certificate coefficients after shifting `x` to be non-negative.
    pub x: Integer,
    pub y: Integer,
}

/// Counts additions performed without division.
struct AdditionBudget {
    used: u64,
    cap: u64,
}

impl AdditionBudget {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            return Err(Error::ResourceLimit { what: "addition steps", limit: self.cap });
        }
        Ok(())
    }
}

/// The `q` with `q*b = a`, by accumulating multiples of `b`. The caller
/// guarantees `b | a`.
fn exact_quotient_by_addition(a: &Integer, b: &Integer, budget: &mut AdditionBudget) -> Result<Integer> {
    let mut q = BigInt::zero();
    let mut acc = BigInt::zero();
    while &acc < a {
        budget.tick()?;
        acc += b;
        q += 1;
    }
    Ok(q)
}

fn to_natural(v: Integer, what: &str) -> Result<Natural> {
    Natural::from_integer(&v).map_err(|_| Error::InvariantViolated(format!("{what} came out negative: {v}")))
}

/// Computes `a = bq + r`, `0 <= r < b`, from a Bezout certificate for
/// `(a, b)` by the case analysis on `x`, without any division.
///
/// The certificate is first shifted along `(x, y) -> (x + b, y - a)`
/// until `x >= 0`. Shifts and the interval search use additions only and
/// are bounded by `limits.subtractive_steps`.
pub fn division_from_bezout(
    a: &Natural,
    b: &Natural,
    cert: &BezoutCertificate,
    limits: &Limits,
) -> Result<BezoutDivision> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if cert.a != *a || cert.b != *b {
        return Err(Error::CertificateMismatch(format!(
            "certificate is for ({}, {}), not ({a}, {b})",
            cert.a, cert.b
        )));
    }
    cert.verify()?;

    let mut budget = AdditionBudget { used: 0, cap: limits.subtractive_steps };
    let (ai, bi, g) = (a.to_integer(), b.to_integer(), cert.g.to_integer());
    let (mut x, mut y) = (cert.x.clone(), cert.y.clone());
    while x.is_negative() {
        budget.tick()?;
        x += &bi;
        y -= &ai;
    }

    let done = |q: Integer, r: Integer, case: DivisionCase, x: &Integer, y: &Integer| -> Result<BezoutDivision> {
        Ok(BezoutDivision {
            quotient: to_natural(q, "quotient")?,
            remainder: to_natural(r, "remainder")?,
            case,
            x: x.clone(),
            y: y.clone(),
        })
    };

    if x.is_zero() {
        // b*y = g with g | b forces b = g, so b | a.
        let q = exact_quotient_by_addition(&ai, &bi, &mut budget)?;
        return done(q, BigInt::zero(), DivisionCase::XZero, &x, &y);
    }
    if x.is_one() {
        // a = -y*b + g.
        return if g == bi {
            done(BigInt::one() - &y, BigInt::zero(), DivisionCase::XOne, &x, &y)
        } else {
            done(-&y, g, DivisionCase::XOne, &x, &y)
        };
    }

    // x > 1: a = b(-y - x + 1) + (x - 1)(b - a) + g.
    let d = BigInt::one() - &y - &x;
    let t: Integer = (&x - 1) * (&bi - &ai) + &g;
    if !t.is_negative() && t < bi {
        return done(d, t, DivisionCase::DirectRemainder, &x, &y);
    }
    if t > bi {
        return done(BigInt::zero(), ai, DivisionCase::DivisorExceeds, &x, &y);
    }
    if t == bi {
        return done(d + 1, BigInt::zero(), DivisionCase::ExactMultiple, &x, &y);
    }

    // t < 0: a = bd - c with 0 < c < bd. Scan [0, b), [b, 2b), ... for the
    // least i with ib <= c < (i+1)b.
    let c = -t;
    let mut i = BigInt::zero();
    let mut low = BigInt::zero();
    loop {
        budget.tick()?;
        let high = &low + &bi;
        if c < high {
            break;
        }
        low = high;
        i += 1;
    }
    // a = b(d - i - 1) + ((i+1)b - c). When c sits exactly on ib the second
    // term equals b, which folds into the quotient.
    let r = &low + &bi - &c;
    if r == bi {
        done(d - i, BigInt::zero(), DivisionCase::IntervalSearch, &x, &y)
    } else {
        done(d - i - 1, r, DivisionCase::IntervalSearch, &x, &y)
    }
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

    /// Largest common divisor by enumeration.
    fn brute_gcd(a: u64, b: u64) -> u64 {
        (1..=a.min(b)).rev().find(|d| a % d == 0 && b % d == 0).unwrap()
    }

    fn pairs(trace: &EuclidTrace) -> Vec<(u64, u64)> {
        trace
            .steps
            .iter()
            .map(|s| (s.larger.to_u64().unwrap(), s.smaller.to_u64().unwrap()))
            .collect()
    }

    #[test]
    fn subtractive_examples() {
        let (g, trace) = gcd_subtractive(&n(21), &n(9), &lim()).unwrap();
        assert_eq!(g, n(3));
        assert_eq!(trace.step_count(), 4);
        assert_eq!(pairs(&trace), vec![(21, 9), (12, 9), (9, 3), (6, 3)]);
        assert_eq!(trace.steps.last().unwrap().remainder, n(3));
        trace.validate().unwrap();

        let (g, trace) = gcd_subtractive(&n(17), &n(17), &lim()).unwrap();
        assert_eq!((g, trace.step_count()), (n(17), 0));

        let (g, trace) = gcd_subtractive(&n(9), &n(4), &lim()).unwrap();
        assert_eq!(g, n(1));
        let last = trace.steps.last().unwrap();
        assert_eq!((last.smaller.clone(), last.remainder.clone()), (n(1), n(1)));
    }

    #[test]
    fn subtractive_budget_and_domain() {
        let tight = Limits { subtractive_steps: 10, ..lim() };
        assert!(matches!(gcd_subtractive(&n(1000), &n(1), &tight), Err(Error::ResourceLimit { .. })));
        assert!(gcd_subtractive(&n(11), &n(1), &tight).is_ok());
        assert!(matches!(gcd_subtractive(&n(0), &n(4), &lim()), Err(Error::Domain(_))));
        assert!(matches!(gcd_remainder(&n(4), &n(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn remainder_examples() {
        let (g, trace) = gcd_remainder(&n(240), &n(46)).unwrap();
        assert_eq!(g, n(2));
        let qs: Vec<u64> = trace.quotients().map(|q| q.to_u64().unwrap()).collect();
        assert_eq!(qs, vec![5, 4, 1, 1, 2]);
        trace.validate().unwrap();

        let (g, trace) = gcd_remainder(&n(12), &n(12)).unwrap();
        assert_eq!(g, n(12));
        assert_eq!(trace.step_count(), 1);
        assert_eq!(trace.steps[0].quotient, Some(n(1)));
        assert_eq!(trace.steps[0].remainder, n(0));

        let (g, trace) = gcd_remainder(&n(89), &n(55)).unwrap();
        assert_eq!(g, n(1));
        let qs: Vec<u64> = trace.quotients().map(|q| q.to_u64().unwrap()).collect();
        assert_eq!(qs, vec![1, 1, 1, 1, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn methods_agree_with_enumeration() {
        for a in 1..=200u64 {
            for b in 1..=200u64 {
                let (gs, ts) = gcd_subtractive(&n(a), &n(b), &lim()).unwrap();
                let (gr, tr) = gcd_remainder(&n(a), &n(b)).unwrap();
                let expected = n(brute_gcd(a, b));
                assert_eq!(gs, expected);
                assert_eq!(gr, expected);
                ts.validate().unwrap();
                tr.validate().unwrap();
            }
        }
    }

    #[test]
    fn every_remainder_step_preserves_gcd() {
        for a in 1..=150u64 {
            for b in 1..=150u64 {
                let (_, trace) = gcd_remainder(&n(a), &n(b)).unwrap();
                for s in &trace.steps {
                    let (l, m, r) = (s.larger.to_u64().unwrap(), s.smaller.to_u64().unwrap(), s.remainder.to_u64().unwrap());
                    let rhs = if r == 0 { m } else { brute_gcd(m, r) };
                    assert_eq!(brute_gcd(l, m), rhs);
                }
            }
        }
    }

    #[test]
    fn scaling_lemma() {
        for a in 1..=50u64 {
            for b in 1..=50u64 {
                let g = gcd_remainder(&n(a), &n(b)).unwrap().0;
                for c in 1..=50u64 {
                    let scaled = gcd_remainder(&n(a * c), &n(b * c)).unwrap().0;
                    assert_eq!(scaled, &g * c);
                    assert_eq!(scaled == n(c), g.is_one());
                }
            }
        }
    }

    #[test]
    fn prime_lemma() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29] {
            for a in (1..=50u64).filter(|a| a % p != 0) {
                for b in 1..=50u64 {
                    assert_eq!(gcd_remainder(&n(p * b), &n(a * b)).unwrap().0, n(b));
                }
            }
        }
    }

    #[test]
    fn fibonacci_worst_case() {
        let mut fib = vec![0u64, 1];
        while fib.len() <= 61 {
            let k = fib.len();
            fib.push(fib[k - 1] + fib[k - 2]);
        }
        for k in 3..=60usize {
            let (_, trace) = gcd_remainder(&n(fib[k + 1]), &n(fib[k])).unwrap();
            assert_eq!(trace.step_count(), k - 1, "k = {k}");
        }
    }

    #[test]
    fn lame_bound_small_pairs() {
        for a in 1..=500u64 {
            for b in 1..=500u64 {
                let (_, trace) = gcd_remainder(&n(a), &n(b)).unwrap();
                assert!(trace.step_count() as u32 <= lame_bound(&n(a), &n(b)));
            }
        }
    }

    #[test]
    fn xgcd_examples() {
        let c = xgcd(&n(240), &n(46)).unwrap();
        assert_eq!((c.g.clone(), c.x.clone(), c.y.clone()), (n(2), BigInt::from(-9), BigInt::from(47)));
        let c = xgcd(&n(1), &n(77)).unwrap();
        assert_eq!((c.g.clone(), c.x.clone(), c.y.clone()), (n(1), BigInt::from(1), BigInt::from(0)));
        let c = xgcd(&n(35), &n(35)).unwrap();
        assert_eq!((c.g.clone(), c.x.clone(), c.y.clone()), (n(35), BigInt::from(0), BigInt::from(1)));
    }

    #[test]
    fn xgcd_certificates_verify() {
        for a in 1..=200u64 {
            for b in 1..=200u64 {
                let cert = xgcd(&n(a), &n(b)).unwrap();
                cert.verify().unwrap();
                assert_eq!(cert.g, n(brute_gcd(a, b)));
                // Every common divisor divides g.
                let g = cert.g.to_u64().unwrap();
                for c in (1..=a.min(b)).filter(|c| a % c == 0 && b % c == 0) {
                    assert_eq!(g % c, 0);
                }
            }
        }
    }

    #[test]
    fn certificate_rejects_forgeries() {
        let mut cert = xgcd(&n(240), &n(46)).unwrap();
        cert.x += 1;
        assert!(matches!(cert.verify(), Err(Error::CertificateMismatch(_))));
        // 240*1 + 46*(-5) = 10 is a combination but not the gcd.
        let fake = BezoutCertificate { a: n(240), b: n(46), g: n(10), x: 1.into(), y: (-5).into() };
        assert!(matches!(fake.verify(), Err(Error::CertificateMismatch(_))));
        assert!(matches!(
            division_from_bezout(&n(240), &n(46), &fake, &lim()),
            Err(Error::CertificateMismatch(_))
        ));
        let other = xgcd(&n(46), &n(240)).unwrap();
        assert!(matches!(
            division_from_bezout(&n(240), &n(46), &other, &lim()),
            Err(Error::CertificateMismatch(_))
        ));
    }

    #[test]
    fn gcd_many_examples() {
        assert_eq!(gcd_many(&[n(12), n(18), n(30)]).unwrap(), n(6));
        assert_eq!(gcd_many(&[n(42)]).unwrap(), n(42));
        assert_eq!(gcd_many(&[n(7), n(11), n(13)]).unwrap(), n(1));
        assert!(gcd_many(&[]).is_err());
        assert!(gcd_many(&[n(4), n(0)]).is_err());
        assert!(gcd_many(&[n(0)]).is_err());
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm(&n(4), &n(6)).unwrap(), n(12));
        assert_eq!(lcm(&n(9), &n(1)).unwrap(), n(9));
        assert_eq!(lcm(&n(3), &n(5)).unwrap(), n(15));
        assert!(lcm(&n(0), &n(5)).is_err());
    }

    #[test]
    fn lcm_divides_every_common_multiple() {
        for a in 1..=40u64 {
            for b in 1..=40u64 {
                let l = lcm(&n(a), &n(b)).unwrap().to_u64().unwrap();
                assert!(l % a == 0 && l % b == 0);
                let least = (1..=a * b).find(|m| m % a == 0 && m % b == 0).unwrap();
                assert_eq!(l, least);
            }
        }
    }

    #[test]
    fn lowest_terms_examples() {
        assert_eq!(lowest_terms(&n(12), &n(18)).unwrap(), (n(2), n(3)));
        assert_eq!(lowest_terms(&n(8), &n(8)).unwrap(), (n(1), n(1)));
        assert_eq!(lowest_terms(&n(7), &n(11)).unwrap(), (n(7), n(11)));
        for a in 1..=60u64 {
            for b in 1..=60u64 {
                let (p, q) = lowest_terms(&n(a), &n(b)).unwrap();
                let g = brute_gcd(a, b);
                assert_eq!((&p * g, &q * g), (n(a), n(b)));
                assert!(gcd_remainder(&p, &q).unwrap().0.is_one());
            }
        }
    }

    #[test]
    fn bezout_division_examples() {
        let cert = BezoutCertificate { a: n(46), b: n(240), g: n(2), x: 47.into(), y: (-9).into() };
        let d = division_from_bezout(&n(46), &n(240), &cert, &lim()).unwrap();
        assert_eq!((d.quotient, d.remainder, d.case), (n(0), n(46), DivisionCase::DivisorExceeds));

        let cert = xgcd(&n(240), &n(46)).unwrap();
        let d = division_from_bezout(&n(240), &n(46), &cert, &lim()).unwrap();
        assert_eq!((d.quotient.clone(), d.remainder.clone()), (n(5), n(10)));
        assert!(!d.x.is_negative());
        assert_eq!(d.x, BigInt::from(37));
        assert_eq!(d.y, BigInt::from(-193));

        let cert = BezoutCertificate { a: n(9), b: n(9), g: n(9), x: 0.into(), y: 1.into() };
        let d = division_from_bezout(&n(9), &n(9), &cert, &lim()).unwrap();
        assert_eq!((d.quotient, d.remainder, d.case), (n(1), n(0), DivisionCase::XZero));
    }

    #[test]
    fn bezout_division_matches_divmod() {
        for a in 1..=300u64 {
            for b in 1..=300u64 {
                let cert = xgcd(&n(a), &n(b)).unwrap();
                let d = division_from_bezout(&n(a), &n(b), &cert, &lim()).unwrap();
                assert_eq!((d.quotient, d.remainder), (n(a / b), n(a % b)), "{a} / {b} via {:?}", d.case);
            }
        }
    }

    #[test]
    fn bezout_division_reaches_every_case() {
        use std::collections::BTreeSet;
        let mut seen = BTreeSet::new();
        for a in 1..=120u64 {
            for b in 1..=120u64 {
                let cert = xgcd(&n(a), &n(b)).unwrap();
                seen.insert(division_from_bezout(&n(a), &n(b), &cert, &lim()).unwrap().case.to_string());
                // Shifted certificates exercise other branches.
                let shifted = BezoutCertificate {
                    x: &cert.x + 3 * b,
                    y: &cert.y - 3 * a,
                    ..cert.clone()
                };
                let d = division_from_bezout(&n(a), &n(b), &shifted, &lim()).unwrap();
                assert_eq!((d.quotient, d.remainder), (n(a / b), n(a % b)));
                seen.insert(d.case.to_string());
            }
        }
        assert_eq!(seen.len(), 6, "{seen:?}");
    }
}
