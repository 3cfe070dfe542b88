//! Small helpers around `num::BigRational` shared by the exact modules.

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

/// Build a rational from machine integers.
pub fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Build an integer rational.
pub fn qi(num: i64) -> BigRational {
    BigRational::from(BigInt::from(num))
}

/// Parse `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, qd)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let qd: BigInt = qd.trim().parse().ok()?;
            if qd.is_zero() {
                return None;
            }
            Some(BigRational::new(p, qd))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(BigRational::from(p))
        }
    }
}

/// Canonical string form `p/q` with positive denominator.
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Fractional part in `[0, 1)`.
pub fn frac(x: &BigRational) -> BigRational {
    let f = x - x.floor();
    debug_assert!(!f.is_negative() && f < BigRational::one());
    f
}

/// Denominator as `u64`; panics if it does not fit (weights in practice are tiny).
pub fn denom_u64(x: &BigRational) -> u64 {
    x.denom().to_u64().expect("denominator exceeds u64")
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}

/// True when `x` is an integer or half-integer.
pub fn is_half_integer(x: &BigRational) -> bool {
    let two = BigInt::from(2);
    x.denom().is_one() || *x.denom() == two
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    num::integer::lcm(a, b)
}

/// `x` as `i64` when it is an integer in range.
pub fn as_i64(x: &BigRational) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(x: &BigRational) -> i32 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-1/8"), Some(q(-1, 8)));
        assert_eq!(parse_rational("3"), Some(qi(3)));
        assert_eq!(parse_rational("4/-6"), Some(q(-2, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&q(-2, 3)), "-2/3");
        assert_eq!(format_rational(&qi(5)), "5/1");
    }

    #[test]
    fn fractional_part() {
        assert_eq!(frac(&q(-1, 8)), q(7, 8));
        assert_eq!(frac(&q(9, 4)), q(1, 4));
        assert_eq!(frac(&qi(-3)), qi(0));
    }

    #[test]
    fn half_integers() {
        assert!(is_half_integer(&q(3, 2)));
        assert!(is_half_integer(&qi(-2)));
        assert!(!is_half_integer(&q(1, 3)));
    }
}
