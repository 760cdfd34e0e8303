//! Integer helpers: factorials, binomials, small primes.

use alloc::vec::Vec;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k as u64;
    }
    acc
}

/// Factorials `0!, 1!, …, n!`.
pub fn factorial_table(n: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigUint::one();
    out.push(acc.clone());
    for k in 1..=n {
        acc *= k as u64;
        out.push(acc.clone());
    }
    out
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= (n - j) as u64;
        acc /= (j + 1) as u64;
    }
    acc
}

pub fn pow(base: &BigUint, exp: usize) -> BigUint {
    num_traits::pow(base.clone(), exp)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Number of distinct prime factors.
pub fn alpha(n: u64) -> usize {
    prime_divisors(n).len()
}

pub fn smallest_prime_divisor(n: u64) -> Option<u64> {
    prime_divisors(n).first().copied()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x) = {
        let e = (a as i128 % m as i128).extended_gcd(&(m as i128));
        (e.gcd, e.x)
    };
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(m as i128) as u64)
}

/// `floor(sqrt(n))`.
pub fn isqrt(n: u64) -> u64 {
    num_integer::Roots::sqrt(&n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_match_pascal() {
        let mut row = alloc::vec![BigUint::one()];
        for n in 1..=40usize {
            let mut next = alloc::vec![BigUint::one(); n + 1];
            for k in 1..n {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k]);
            }
        }
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(2), 1);
        assert_eq!(alpha(4), 1);
        assert_eq!(alpha(12), 2);
        assert_eq!(alpha(30), 3);
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 4), Some(3));
        assert_eq!(mod_inverse(2, 4), None);
        for m in 2..40u64 {
            for a in 1..m {
                if let Some(b) = mod_inverse(a, m) {
                    assert_eq!(a * b % m, 1);
                }
            }
        }
    }

    #[test]
    fn isqrt_small() {
        for n in 0..2000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
    }
}
