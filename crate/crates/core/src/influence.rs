//! Exact influence values.
//!
//! An influence is the non-negative rational
//! `sum_u / n_u + sum_v / n_v = (sum_u * n_v + sum_v * n_u) / (n_u * n_v)`.
//! Values are never rounded: comparison cross-multiplies in 256-bit
//! arithmetic, and floats only appear through [`Influence::to_f64`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub enum Influence {
    /// Below every finite value. Stands in for "no r-th community yet".
    NegInfinity,
    Finite {
        num: u128,
        den: u128,
    },
}

impl Influence {
    pub fn integer(value: u128) -> Self {
        Influence::Finite { num: value, den: 1 }
    }

    pub fn ratio(num: u128, den: u128) -> Result<Self> {
        if den == 0 {
            return Err(Error::Validation("zero denominator".into()));
        }
        Ok(Influence::Finite { num, den })
    }

    /// `upper_sum / upper_count + lower_sum / lower_count`.
    pub fn from_layers(
        upper_sum: u128,
        upper_count: u64,
        lower_sum: u128,
        lower_count: u64,
    ) -> Result<Self> {
        if upper_count == 0 || lower_count == 0 {
            return Err(Error::UndefinedInfluence);
        }
        let (nu, nv) = (upper_count as u128, lower_count as u128);
        let num = upper_sum
            .checked_mul(nv)
            .and_then(|a| lower_sum.checked_mul(nu).and_then(|b| a.checked_add(b)))
            .ok_or_else(|| Error::Validation("influence numerator overflows 128 bits".into()))?;
        Ok(Influence::Finite { num, den: nu * nv })
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Influence::Finite { .. })
    }

    /// Reduced `(numerator, denominator)`, or `None` for the sentinel.
    pub fn reduced(&self) -> Option<(u128, u128)> {
        match *self {
            Influence::NegInfinity => None,
            Influence::Finite { num, den } => {
                let g = gcd(num, den);
                Some((num / g, den / g))
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self.reduced() {
            None => f64::NEG_INFINITY,
            Some((n, d)) => n as f64 / d as f64,
        }
    }
}

impl PartialEq for Influence {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Influence {}

impl PartialOrd for Influence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Influence {
    fn cmp(&self, other: &Self) -> Ordering {
        match (*self, *other) {
            (Influence::NegInfinity, Influence::NegInfinity) => Ordering::Equal,
            (Influence::NegInfinity, _) => Ordering::Less,
            (_, Influence::NegInfinity) => Ordering::Greater,
            (Influence::Finite { num: a, den: b }, Influence::Finite { num: c, den: d }) => {
                wide_mul(a, d).cmp(&wide_mul(c, b))
            }
        }
    }
}

pub fn compare_influence(a: &Influence, b: &Influence) -> Ordering {
    a.cmp(b)
}

impl fmt::Display for Influence {
    /// `"-inf"`, `"n"` or `"n/d"` in lowest terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reduced() {
            None => f.write_str("-inf"),
            Some((n, 1)) => write!(f, "{n}"),
            Some((n, d)) => write!(f, "{n}/{d}"),
        }
    }
}

/// Full 256-bit product as `(high, low)` 128-bit halves. Tuple ordering on
/// the result is numeric ordering.
fn wide_mul(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (a_hi, a_lo) = (a >> 64, a & MASK);
    let (b_hi, b_lo) = (b >> 64, b & MASK);

    let lo_lo = a_lo * b_lo;
    let hi_lo = a_hi * b_lo;
    let lo_hi = a_lo * b_hi;
    let hi_hi = a_hi * b_hi;

    // Middle column, kept below 2^130 by splitting into 64-bit pieces.
    let mid = (lo_lo >> 64) + (hi_lo & MASK) + (lo_hi & MASK);
    let low = (lo_lo & MASK) | (mid << 64);
    let high = hi_hi + (hi_lo >> 64) + (lo_hi >> 64) + (mid >> 64);
    (high, low)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn layers(upper: &[u64], lower: &[u64]) -> Influence {
        Influence::from_layers(
            upper.iter().map(|&w| w as u128).sum(),
            upper.len() as u64,
            lower.iter().map(|&w| w as u128).sum(),
            lower.len() as u64,
        )
        .unwrap()
    }

    #[test]
    fn direct_formula() {
        assert_eq!(layers(&[2, 4], &[3, 3]), Influence::integer(6));
        assert_eq!(layers(&[5], &[7]), Influence::integer(12));
        let v = layers(&[1, 2], &[3, 4, 5]);
        assert_eq!(v, Influence::ratio(11, 2).unwrap());
        assert_eq!(v.to_string(), "11/2");
        assert_eq!(layers(&[2, 4], &[3, 3]).to_string(), "6");
    }

    #[test]
    fn empty_layer_is_undefined() {
        assert_eq!(
            Influence::from_layers(3, 0, 4, 1),
            Err(Error::UndefinedInfluence)
        );
        assert_eq!(
            Influence::from_layers(3, 1, 0, 0),
            Err(Error::UndefinedInfluence)
        );
    }

    #[test]
    fn ordering_examples() {
        let four = Influence::integer(4);
        assert_eq!(
            compare_influence(&four, &Influence::ratio(8, 2).unwrap()),
            Ordering::Equal
        );
        assert_eq!(
            compare_influence(&Influence::ratio(11, 2).unwrap(), &Influence::integer(6)),
            Ordering::Less
        );
        assert_eq!(
            compare_influence(&Influence::NegInfinity, &Influence::integer(0)),
            Ordering::Less
        );
        assert_eq!(Influence::NegInfinity, Influence::NegInfinity);
    }

    #[test]
    fn wide_mul_edges() {
        assert_eq!(wide_mul(u128::MAX, u128::MAX), (u128::MAX - 1, 1));
        assert_eq!(wide_mul(1 << 64, 1 << 64), (1, 0));
        assert_eq!(wide_mul(u128::MAX, 2), (1, u128::MAX - 1));
        assert_eq!(wide_mul(0, u128::MAX), (0, 0));
    }
}
