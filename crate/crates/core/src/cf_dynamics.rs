//! Continued fractions from the remainder trace, the partial-quotient sum
//! statistic, and the subtractive algorithm as a map on pairs together
//! with its unimodular step matrices.

use std::f64::consts::PI;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::euclid::gcd_remainder;
use crate::integers::{Integer, Natural};
use crate::limits::Limits;

/// Regular continued fraction `[q1; q2, ..., qk]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    quotients: Vec<Natural>,
}

impl ContinuedFraction {
    /// Requires `k >= 1` and `q_i >= 1` for `i >= 2`.
    pub fn new(quotients: Vec<Natural>) -> Result<Self> {
        if quotients.is_empty() {
            return Err(domain("a continued fraction needs at least one quotient"));
        }
        if let Some(i) = quotients.iter().skip(1).position(Natural::is_zero) {
            return Err(domain(format!("partial quotient {} is zero", i + 2)));
        }
        Ok(ContinuedFraction { quotients })
    }

    pub fn quotients(&self) -> &[Natural] {
        &self.quotients
    }

    pub fn quotient_sum(&self) -> Natural {
        self.quotients.iter().cloned().sum()
    }
}

/// The partial quotients of `a / b`: the quotients of the remainder trace.
pub fn cf_expand(a: &Natural, b: &Natural) -> Result<ContinuedFraction> {
    let (_, trace) = gcd_remainder(a, b)?;
    ContinuedFraction::new(trace.quotients().cloned().collect())
}

/// Evaluates the continued fraction from the innermost quotient outward,
/// returning the reduced fraction `(num, den)`.
pub fn cf_value(cf: &ContinuedFraction) -> (Natural, Natural) {
    let mut rev = cf.quotients.iter().rev();
    let mut num = rev.next().expect("non-empty by construction").clone();
    let mut den = Natural::one();
    // value = q + 1 / (num/den) = (q*num + den) / num
    for q in rev {
        let next = q * &num + &den;
        den = std::mem::replace(&mut num, next);
    }
    (num, den)
}

/// Sum of the partial quotients over all `a/b`, `1 <= b <= a`, against the
/// leading term `(6/pi^2) a (ln a)^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientSumStat {
    pub a: Natural,
    pub total: Natural,
    pub predicted: f64,
    pub ratio: f64,
    /// Mean number of division steps over the same range. Reported only.
    pub mean_steps: f64,
}

/// Quotient sum and division-step count of `a/b` on machine words.
fn quotient_sum_u64(mut a: u64, mut b: u64) -> (u64, u64) {
    let (mut sum, mut steps) = (0u64, 0u64);
    while b != 0 {
        sum += a / b;
        steps += 1;
        (a, b) = (b, a % b);
    }
    (sum, steps)
}

pub fn yao_knuth_stat(a: &Natural, limits: &Limits) -> Result<QuotientSumStat> {
    let bound = match a.to_u64() {
        Some(v) if v <= limits.scan_limit => v,
        _ => return Err(Error::ResourceLimit { what: "quotient-sum range", limit: limits.scan_limit }),
    };
    if bound < 2 {
        return Err(domain("the quotient-sum statistic needs a >= 2"));
    }
    let (total, steps) = (1..=bound)
        .into_par_iter()
        .map(|b| {
            let (s, k) = quotient_sum_u64(bound, b);
            (s as u128, k as u128)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    let ln = (bound as f64).ln();
    let predicted = 6.0 / (PI * PI) * bound as f64 * ln * ln;
    Ok(QuotientSumStat {
        a: a.clone(),
        total: Natural::from(total),
        predicted,
        ratio: total as f64 / predicted,
        mean_steps: steps as f64 / bound as f64,
    })
}

/// Integer 2x2 matrix `[[m11, m12], [m21, m22]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularMatrix {
    pub m11: Integer,
    pub m12: Integer,
    pub m21: Integer,
    pub m22: Integer,
}

impl UnimodularMatrix {
    pub fn identity() -> Self {
        Self::from_i64([[1, 0], [0, 1]])
    }

    /// `(x, y) -> (x - y, y)`, taken when `x >= y`.
    pub fn subtract_right() -> Self {
        Self::from_i64([[1, -1], [0, 1]])
    }

    /// `(x, y) -> (x, y - x)`, taken when `x < y`.
    pub fn subtract_left() -> Self {
        Self::from_i64([[1, 0], [-1, 1]])
    }

    fn from_i64(m: [[i64; 2]; 2]) -> Self {
        UnimodularMatrix {
            m11: m[0][0].into(),
            m12: m[0][1].into(),
            m21: m[1][0].into(),
            m22: m[1][1].into(),
        }
    }

    pub fn determinant(&self) -> Integer {
        &self.m11 * &self.m22 - &self.m12 * &self.m21
    }

    pub fn apply(&self, x: &Integer, y: &Integer) -> (Integer, Integer) {
        (&self.m11 * x + &self.m12 * y, &self.m21 * x + &self.m22 * y)
    }
}

impl Mul for &UnimodularMatrix {
    type Output = UnimodularMatrix;

    fn mul(self, rhs: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix {
            m11: &self.m11 * &rhs.m11 + &self.m12 * &rhs.m21,
            m12: &self.m11 * &rhs.m12 + &self.m12 * &rhs.m22,
            m21: &self.m21 * &rhs.m11 + &self.m22 * &rhs.m21,
            m22: &self.m21 * &rhs.m12 + &self.m22 * &rhs.m22,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicsRun {
    pub start: (Natural, Natural),
    pub step_count: u64,
    pub terminal: (Natural, Natural),
    /// Product of the step matrices, latest on the left, so that
    /// `product * start = terminal`.
    pub product: UnimodularMatrix,
}

impl DynamicsRun {
    /// The non-zero terminal coordinate, i.e. `gcd(x, y)`.
    pub fn gcd(&self) -> &Natural {
        if self.terminal.0.is_zero() {
            &self.terminal.1
        } else {
            &self.terminal.0
        }
    }

    /// Row of the product that maps the start onto the non-zero terminal
    /// coordinate: `(u, v)` with `u*x + v*y = gcd(x, y)`.
    pub fn bezout_row(&self) -> (Integer, Integer) {
        if self.terminal.0.is_zero() {
            (self.product.m21.clone(), self.product.m22.clone())
        } else {
            (self.product.m11.clone(), self.product.m12.clone())
        }
    }
}

/// Iterates `f(x, y) = (x - y, y)` if `x >= y`, else `(x, y - x)`, until a
/// coordinate is zero.
pub fn dynamical_run(x: &Natural, y: &Natural, limits: &Limits) -> Result<DynamicsRun> {
    if x.is_zero() && y.is_zero() {
        return Err(domain("the map needs a non-zero starting pair"));
    }
    let (mut cx, mut cy) = (x.clone(), y.clone());
    let mut product = UnimodularMatrix::identity();
    let right = UnimodularMatrix::subtract_right();
    let left = UnimodularMatrix::subtract_left();
    let mut step_count = 0u64;
    while !cx.is_zero() && !cy.is_zero() {
        if step_count >= limits.subtractive_steps {
            return Err(Error::ResourceLimit { what: "subtraction steps", limit: limits.subtractive_steps });
        }
        if cx >= cy {
            cx = &cx - &cy;
            product = &right * &product;
        } else {
            cy = &cy - &cx;
            product = &left * &product;
        }
        step_count += 1;
    }
    Ok(DynamicsRun { start: (x.clone(), y.clone()), step_count, terminal: (cx, cy), product })
}

/// Whether `product * start = terminal` and `det(product) = 1`.
pub fn verify_run(run: &DynamicsRun) -> bool {
    let (tx, ty) = run.product.apply(&run.start.0.to_integer(), &run.start.1.to_integer());
    run.product.determinant() == BigInt::one()
        && tx == run.terminal.0.to_integer()
        && ty == run.terminal.1.to_integer()
        && (run.terminal.0.is_zero() || run.terminal.1.is_zero())
}
