//! Exact rational scalars and small vector helpers.
//!
//! Every quantity in this crate is a `BigRational`; nothing is ever rounded.
//! `num_rational` keeps values in lowest terms with a positive denominator,
//! which matches the invariants we need.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zeros(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn unit(dim: usize, j: usize) -> Vec<Q> {
    let mut v = zeros(dim);
    v[j] = Q::one();
    v
}

/// Parses "p/q" or a plain integer string.
pub fn parse_rational(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Q::from_integer(n))
    }
}

/// Formats as "p/q", or "p" when the value is an integer.
pub fn format_rational(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn lex_cmp(a: &[Q], b: &[Q]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    a.len().cmp(&b.len())
}

/// Scales a nonzero rational vector to coprime integer entries, preserving
/// orientation. The zero vector is returned unchanged.
pub fn primitive(v: &[Q]) -> Vec<Q> {
    let mut lcm = BigInt::one();
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    for n in &mut ints {
        *n = &*n / &g;
    }
    ints.into_iter().map(Q::from_integer).collect()
}

/// Rank of a set of rational row vectors, by Gaussian elimination.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].clone();
        for r in rank + 1..m.len() {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &inv;
                for c in col..ncols {
                    let delta = &f * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Smallest nonnegative integer `t` with `alpha^t >= target`; this is the
/// exact value of ceil(log2(target) / log2(alpha)) for `alpha > 1`.
pub fn ceil_log_ratio(target: &Q, alpha: &Q) -> Option<u32> {
    if *alpha <= Q::one() {
        return None;
    }
    let mut t = 0u32;
    let mut pow = Q::one();
    while pow < *target {
        pow *= alpha;
        t += 1;
        if t > 10_000 {
            return None; // target astronomically large; caller treats as failure
        }
    }
    Some(t)
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

pub fn floor_int(x: &Q) -> BigInt {
    x.floor().to_integer()
}

pub fn ceil_int(x: &Q) -> BigInt {
    x.ceil().to_integer()
}

pub fn from_int(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(format_rational(&x), s);
        }
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn primitive_clears_denominators() {
        let v = vec![qr(1, 2), qr(-3, 4), q(0)];
        assert_eq!(primitive(&v), vec![q(2), q(-3), q(0)]);
        let z = vec![q(0), q(0)];
        assert_eq!(primitive(&z), z);
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(&[vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(rank(&[vec![q(1), q(0)], vec![q(0), q(1)]]), 2);
        assert_eq!(rank(&[vec![q(0), q(0)]]), 0);
    }

    #[test]
    fn ceil_log_ratio_matches_hand_values() {
        assert_eq!(ceil_log_ratio(&q(4), &q(2)), Some(2));
        assert_eq!(ceil_log_ratio(&q(1), &q(2)), Some(0));
        assert_eq!(ceil_log_ratio(&q(4), &q(5)), Some(1));
        assert_eq!(ceil_log_ratio(&qr(3, 2), &q(2)), Some(1));
        assert_eq!(ceil_log_ratio(&q(4), &q(1)), None);
    }
}
