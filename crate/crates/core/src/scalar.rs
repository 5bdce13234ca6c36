//! Scalar field abstraction.
//!
//! Every algorithm in this crate is written against [`Scalar`], a small
//! extension of `num_traits` for exact fields. The concrete field used by the
//! CLI is [`crate::Rational`] (arbitrary precision); `Ratio<i64>` is also
//! supported for quick experiments on small inputs where overflow is not a
//! concern.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, Zero};

/// An exact field element.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Signed + Neg<Output = Self> + Send + Sync + 'static
{
    /// Embeds a machine integer.
    fn int(n: i64) -> Self;

    /// `n / d`; panics when `d == 0`.
    fn ratio(n: i64, d: i64) -> Self;

    /// Rough storage size, used to pick cheap pivots during elimination.
    fn bit_size(&self) -> u64;

    /// Rescales a nonzero vector in place so that it has integer entries with
    /// content 1 and a positive first nonzero entry. Zero vectors are left
    /// untouched.
    fn normalize_direction(v: &mut [Self]);

    /// Returns `Some(n)` when the value is an integer fitting in `i64`.
    fn to_i64_exact(&self) -> Option<i64>;
}

/// Integer types usable as numerator/denominator of [`Ratio`] scalars.
pub trait ExactInteger:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + Send + Sync + 'static
{
    fn bits(&self) -> u64;
    fn to_i64(&self) -> Option<i64>;
}

impl ExactInteger for BigInt {
    fn bits(&self) -> u64 {
        BigInt::bits(self)
    }

    fn to_i64(&self) -> Option<i64> {
        num_traits::ToPrimitive::to_i64(self)
    }
}

impl ExactInteger for i64 {
    fn bits(&self) -> u64 {
        u64::from(64 - self.unsigned_abs().leading_zeros())
    }

    fn to_i64(&self) -> Option<i64> {
        Some(*self)
    }
}

impl<I: ExactInteger> Scalar for Ratio<I> {
    fn int(n: i64) -> Self {
        Ratio::from_integer(I::from_i64(n).expect("i64 fits every exact integer type"))
    }

    fn ratio(n: i64, d: i64) -> Self {
        Ratio::new(
            I::from_i64(n).expect("i64 fits every exact integer type"),
            I::from_i64(d).expect("i64 fits every exact integer type"),
        )
    }

    fn bit_size(&self) -> u64 {
        self.numer().bits() + self.denom().bits()
    }

    fn normalize_direction(v: &mut [Self]) {
        let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() else {
            return;
        };
        let lcm = v
            .iter()
            .fold(I::one(), |acc, x| acc.lcm(x.denom()));
        let gcd = v
            .iter()
            .filter(|x| !x.is_zero())
            .fold(I::zero(), |acc, x| {
                let scaled = x.numer().clone() * (lcm.clone() / x.denom().clone());
                acc.gcd(&scaled)
            });
        let mut factor = Ratio::new(lcm, gcd);
        if lead.is_negative() {
            factor = -factor;
        }
        for x in v.iter_mut() {
            *x = x.clone() * factor.clone();
        }
    }

    fn to_i64_exact(&self) -> Option<i64> {
        if self.denom().is_one() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

/// Error from [`parse_scalar`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}: expected -?digits(/digits) with positive denominator")]
pub struct ParseScalarError(pub String);

/// Parses the literal grammar `-?digits(/digits)?`, denominator positive.
/// Surrounding whitespace is ignored.
pub fn parse_scalar<T: Scalar>(text: &str) -> Result<T, ParseScalarError> {
    let err = || ParseScalarError(text.to_string());
    let s = text.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits_ok = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
    if !digits_ok(num) || !den.is_none_or(digits_ok) {
        return Err(err());
    }
    let mut value = parse_digits::<T>(num);
    if let Some(d) = den {
        let d = parse_digits::<T>(d);
        if d.is_zero() {
            return Err(err());
        }
        value = value / d;
    }
    Ok(if neg { -value } else { value })
}

fn parse_digits<T: Scalar>(digits: &str) -> T {
    let ten = T::int(10);
    digits
        .bytes()
        .fold(T::zero(), |acc, b| acc * ten.clone() + T::int(i64::from(b - b'0')))
}

/// Multinomial coefficient `(sum of parts)! / prod(part!)`.
pub fn multinomial<T: Scalar>(parts: &[u32]) -> T {
    let mut acc = T::one();
    let mut total = 0i64;
    for &p in parts {
        for i in 1..=i64::from(p) {
            total += 1;
            acc = acc * T::int(total) / T::int(i);
        }
    }
    acc
}

/// Integer power by repeated multiplication.
pub fn powu<T: Scalar>(base: &T, exp: u32) -> T {
    num_traits::pow(base.clone(), exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(parse_scalar::<Rational>("3").unwrap(), q(3, 1));
        assert_eq!(parse_scalar::<Rational>(" -6/4 ").unwrap(), q(-3, 2));
        assert_eq!(parse_scalar::<Rational>("0/7").unwrap(), q(0, 1));
        for bad in ["", "-", "1/", "/2", "1/0", "1/-2", "+1", "1.5", "a", "--1"] {
            assert!(parse_scalar::<Rational>(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn normalizes_to_primitive_integers() {
        let mut v = vec![q(-1, 2), q(0, 1), q(3, 4)];
        Rational::normalize_direction(&mut v);
        assert_eq!(v, vec![q(2, 1), q(0, 1), q(-3, 1)]);

        let mut z = vec![q(0, 1); 3];
        Rational::normalize_direction(&mut z);
        assert!(z.iter().all(Zero::is_zero));
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial::<Rational>(&[2, 1, 1]), q(12, 1));
        assert_eq!(multinomial::<Rational>(&[4, 0]), q(1, 1));
        assert_eq!(multinomial::<Ratio<i64>>(&[3, 3]), Ratio::from_integer(20));
    }

    #[test]
    fn small_ratio_bit_size() {
        assert_eq!(Ratio::<i64>::ratio(5, 3).bit_size(), 5);
    }
}
