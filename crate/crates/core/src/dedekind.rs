//! Dedekind sums in exact rational arithmetic and the reciprocity law.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::integers::{ExactRational, Integer, Natural};
use crate::limits::Limits;

/// `((x)) = x - floor(x) - 1/2` for non-integer `x`, and `0` at integers.
///
/// The result lies strictly between `-1/2` and `1/2` and is odd in `x`.
pub fn sawtooth(x: &ExactRational) -> ExactRational {
    if x.is_integer() {
        return ExactRational::zero();
    }
    let half = ExactRational::from_i64(1, 2).expect("non-zero denominator");
    &(x - &ExactRational::from_integer(x.floor())) - &half
}

/// `s(h, k) = sum_{a=1}^{k} ((a/k)) ((ah/k))`.
pub fn dedekind_sum(h: &Integer, k: &Natural, limits: &Limits) -> Result<ExactRational> {
    if k.is_zero() {
        return Err(domain("Dedekind sum needs k >= 1"));
    }
    let terms = match k.to_u64() {
        Some(v) if v <= limits.scan_limit => v,
        _ => return Err(Error::ResourceLimit { what: "Dedekind sum terms", limit: limits.scan_limit }),
    };
    let kk = k.to_integer();
    Ok((1..=terms)
        .map(|a| {
            let a = BigInt::from(a);
            let left = ExactRational::new(a.clone(), kk.clone()).expect("k >= 1");
            let right = ExactRational::new(a * h, kk.clone()).expect("k >= 1");
            sawtooth(&left) * sawtooth(&right)
        })
        .sum())
}

/// `(h^2 + k^2 + 1) / (12hk) - 1/4`.
pub fn reciprocity_rhs(h: &Natural, k: &Natural) -> Result<ExactRational> {
    let (hi, ki) = (h.to_integer(), k.to_integer());
    let num = &hi * &hi + &ki * &ki + 1;
    let den = BigInt::from(12) * &hi * &ki;
    Ok(ExactRational::new(num, den)? - ExactRational::from_i64(1, 4)?)
}

/// `s(h, k) + s(k, h) - ((h^2 + k^2 + 1)/(12hk) - 1/4)` for coprime
/// `h, k`; exactly zero when the reciprocity law holds.
pub fn reciprocity_residual(h: &Natural, k: &Natural, limits: &Limits) -> Result<ExactRational> {
    if h.is_zero() || k.is_zero() {
        return Err(domain("reciprocity needs h, k >= 1"));
    }
    if !h.gcd_fast(k).is_one() {
        return Err(domain(format!("reciprocity needs coprime arguments, gcd({h}, {k}) > 1")));
    }
    let lhs = dedekind_sum(&h.to_integer(), k, limits)? + dedekind_sum(&k.to_integer(), h, limits)?;
    Ok(lhs - reciprocity_rhs(h, k)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReciprocityScan {
    pub limit: u64,
    pub cases: u64,
    /// `(h, k, residual)` for every pair whose residual is not zero.
    pub failures: Vec<(u64, u64, ExactRational)>,
}

/// Residuals for all coprime `1 <= h < k <= limit`.
pub fn reciprocity_scan(limit: u64, limits: &Limits) -> Result<ReciprocityScan> {
    if limit > limits.scan_limit {
        return Err(Error::ResourceLimit { what: "reciprocity scan", limit: limits.scan_limit });
    }
    let pairs: Vec<(u64, u64)> = (2..=limit)
        .flat_map(|k| (1..k).map(move |h| (h, k)))
        .filter(|&(h, k)| num_integer::gcd(h, k) == 1)
        .collect();
    let residuals: Vec<Result<(u64, u64, ExactRational)>> = pairs
        .par_iter()
        .map(|&(h, k)| reciprocity_residual(&Natural::from(h), &Natural::from(k), limits).map(|r| (h, k, r)))
        .collect();
    let mut failures = Vec::new();
    for r in residuals {
        let (h, k, residual) = r?;
        if !residual.is_zero() {
            failures.push((h, k, residual));
        }
    }
    Ok(ReciprocityScan { limit, cases: pairs.len() as u64, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::from_i64(n, d).unwrap()
    }

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn s(h: i64, k: u64) -> ExactRational {
        dedekind_sum(&BigInt::from(h), &nat(k), &Limits::default()).unwrap()
    }

    #[test]
    fn sawtooth_examples() {
        assert_eq!(sawtooth(&q(1, 1)), q(0, 1));
        assert_eq!(sawtooth(&q(-3, 1)), q(0, 1));
        assert_eq!(sawtooth(&q(1, 2)), q(0, 1));
        assert_eq!(sawtooth(&q(1, 3)), q(-1, 6));
        assert_eq!(sawtooth(&q(-1, 3)), q(1, 6));
        assert_eq!(sawtooth(&q(7, 3)), q(-1, 6));
    }

    #[test]
    fn dedekind_examples() {
        assert_eq!(s(1, 3), q(1, 18));
        assert_eq!(s(0, 7), q(0, 1));
        assert_eq!(s(2, 5), q(0, 1));
        assert!(dedekind_sum(&BigInt::from(1), &nat(0), &Limits::default()).is_err());
    }

    #[test]
    fn literal_nonzero_convention_breaks_reciprocity() {
        // With ((x)) = x - floor(x) - 1/2 at integers too, the a = k term of
        // s(1, 3) becomes 1/4 and s(3, 1) becomes 1/4, so the sum misses the
        // right-hand side 1/18.
        let literal = |x: &ExactRational| x - &ExactRational::from_integer(x.floor()) - q(1, 2);
        let lit_s = |h: i64, k: i64| -> ExactRational {
            (1..=k).map(|a| literal(&q(a, k)) * literal(&q(a * h, k))).sum()
        };
        let rhs = reciprocity_rhs(&nat(1), &nat(3)).unwrap();
        assert_eq!(rhs, q(1, 18));
        assert_ne!(lit_s(1, 3) + lit_s(3, 1), rhs);
        assert_eq!(s(1, 3) + s(3, 1), rhs);
    }

    #[test]
    fn residual_examples() {
        let lim = Limits::default();
        assert!(reciprocity_residual(&nat(1), &nat(3), &lim).unwrap().is_zero());
        assert!(reciprocity_residual(&nat(2), &nat(5), &lim).unwrap().is_zero());
        assert!(reciprocity_residual(&nat(1), &nat(1), &lim).unwrap().is_zero());
        assert!(matches!(reciprocity_residual(&nat(2), &nat(4), &lim), Err(Error::Domain(_))));
    }

    #[test]
    fn periodic_and_odd() {
        for k in 1..=80u64 {
            for h in 0..=80i64 {
                let base = s(h, k);
                assert_eq!(s(h + k as i64, k), base, "periodicity {h} {k}");
                assert_eq!(s(-h, k), -&base, "oddness {h} {k}");
            }
        }
    }

    #[test]
    fn scan_small() {
        let scan = reciprocity_scan(30, &Limits::default()).unwrap();
        assert!(scan.failures.is_empty());
        let expected = (2..=30u64).flat_map(|k| (1..k).map(move |h| (h, k))).filter(|&(h, k)| num_integer::gcd(h, k) == 1).count();
        assert_eq!(scan.cases, expected as u64);
    }

    proptest! {
        #[test]
        fn sawtooth_is_odd_and_bounded(n in -100_000i64..100_000, d in 1i64..1000) {
            let x = q(n, d);
            let v = sawtooth(&x);
            prop_assert_eq!(sawtooth(&-&x), -&v);
            prop_assert!(v.abs() < q(1, 2));
            prop_assert_eq!(v.is_zero(), x.is_integer() || x.denominator() == &BigInt::from(2));
        }
    }
}
