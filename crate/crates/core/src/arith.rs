//! Exact rational arithmetic helpers and rectangle-partition counting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Formats a rational as `a` or `a/b`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid rational literal '{s}'")))
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let den = parse_int(b)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            Ok(Rational::new(parse_int(a)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Converts an integral rational to `BigInt`.
pub fn to_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.numer().clone())
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    to_integer(q).and_then(|z| z.to_i64())
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Number of partitions of `m` with at most `n` parts, each part at most `d`.
///
/// Equivalently the coefficient of `q^m` in the Gaussian binomial `[n+d choose n]_q`.
pub fn partitions_in_rectangle(m: i64, d: i64, n: i64) -> BigInt {
    if m < 0 || d < 0 || n < 0 || m > n * d {
        return BigInt::zero();
    }
    let m = m as usize;
    let d = d as usize;
    // table[k][s]: partitions of s into at most `parts` parts each <= k, built
    // with the recursion p(s; parts, k) = p(s; parts, k-1) + p(s-k; parts-1, k)
    // rolled over the number of parts.
    let n = n as usize;
    // cur[k][s] for parts = j
    let mut cur = vec![vec![BigInt::zero(); m + 1]; d + 1];
    for row in cur.iter_mut() {
        row[0] = BigInt::one();
    }
    for _parts in 1..=n {
        let prev = cur.clone();
        for k in 0..=d {
            for s in 0..=m {
                let mut v = if k == 0 { prev[0][s].clone() } else { cur[k - 1][s].clone() };
                if k > 0 && s >= k {
                    v += &prev[k][s - k];
                }
                cur[k][s] = v;
            }
        }
    }
    cur[d][m].clone()
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(m: i64, d: i64, n: i64) -> u64 {
        // enumerate weakly decreasing sequences of length n with entries in 0..=d
        fn go(left: usize, max: i64, rem: i64) -> u64 {
            if left == 0 {
                return u64::from(rem == 0);
            }
            (0..=max.min(rem)).map(|p| go(left - 1, p, rem - p)).sum()
        }
        if m < 0 {
            return 0;
        }
        go(n as usize, d, m)
    }

    #[test]
    fn rectangle_small_cases() {
        assert_eq!(partitions_in_rectangle(4, 3, 3), big(3));
        assert_eq!(partitions_in_rectangle(0, 5, 7), big(1));
        assert_eq!(partitions_in_rectangle(-1, 2, 2), big(0));
        assert_eq!(partitions_in_rectangle(5, 2, 2), big(0));
        assert_eq!(partitions_in_rectangle(0, 0, 0), big(1));
    }

    #[test]
    fn rectangle_matches_enumeration() {
        for d in 0..=5 {
            for n in 0..=5 {
                for m in -1..=(n * d + 1) {
                    assert_eq!(partitions_in_rectangle(m, d, n), big(brute(m, d, n) as i64), "{m} {d} {n}");
                }
            }
        }
    }

    #[test]
    fn rectangle_symmetry_and_column_sum() {
        for d in 0..=8 {
            for n in 0..=8 {
                let mut total = BigInt::zero();
                for m in 0..=n * d {
                    let p = partitions_in_rectangle(m, d, n);
                    assert_eq!(p, partitions_in_rectangle(n * d - m, d, n));
                    total += p;
                }
                assert_eq!(total, binomial((n + d) as u64, d as u64));
            }
        }
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(fmt_rational(&rat(4, -6)), "-2/3");
    }

    proptest::proptest! {
        #[test]
        fn add_sub_roundtrip(a in -1000i64..1000, b in 1i64..100, c in -1000i64..1000, e in 1i64..100) {
            let x = rat(a, b);
            let y = rat(c, e);
            proptest::prop_assert_eq!(&(&x + &y) - &y, x);
        }
    }
}
