//! Permutations on `n` points and cycle-type combinatorics.
//!
//! Points are 0-based internally; text forms are 1-based.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::factorial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A bijection of `{0, …, n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{:?}", images)));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based images, as printed.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 {
                return Err(Error::InvalidPermutation(format!("{:?}", images)));
            }
            v.push((x - 1) as u32);
        }
        Self::from_images(v)
    }

    /// Product of disjoint or overlapping cycles given 1-based, applied left to right.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for c in cycles {
            let mut images: Vec<u32> = (0..n as u32).collect();
            let mut seen = vec![false; n];
            for (j, &a) in c.iter().enumerate() {
                let b = c[(j + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n || seen[a - 1] {
                    return Err(Error::InvalidPermutation(format!("cycle {:?} on {} points", c, n)));
                }
                seen[a - 1] = true;
                images[a - 1] = (b - 1) as u32;
            }
            acc = acc.mul(&Permutation { images })?;
        }
        Ok(acc)
    }

    /// The transposition of 0-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(a, b);
        p
    }

    /// The cycle `(0 1 … n-1)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation { images: (0..n as u32).map(|i| (i + 1) % n as u32).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }

    /// Apply `self`, then `other`.
    pub fn mul(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    #[inline]
    fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ self g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        self.check_degree(g)?;
        Ok(self.conj(g))
    }

    #[inline]
    pub(crate) fn conj(&self, g: &Permutation) -> Permutation {
        // (g⁻¹ p g) sends g(i) to g(p(i)).
        let mut out = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images: out }
    }

    pub fn pow(&self, e: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        result
    }

    /// All cycles, fixed points included, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            out.push(len);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts = self.cycle_lengths();
        parts.sort_unstable();
        CycleType { degree: self.degree(), parts }
    }

    pub fn parity(&self) -> Parity {
        let c = self.cycle_lengths().len();
        if (self.degree() - c).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn order(&self) -> BigUint {
        let mut acc = BigUint::one();
        for l in self.cycle_lengths() {
            acc = num_integer::Integer::lcm(&acc, &BigUint::from(l));
        }
        acc
    }

    /// Sorted image of a set of points.
    pub fn image_of_set(&self, set: &[u32]) -> Vec<u32> {
        let mut v: Vec<u32> = set.iter().map(|&x| self.images[x as usize]).collect();
        v.sort_unstable();
        v
    }

    /// Cycle notation, 1-based, fixed points omitted.
    pub fn cycle_string(&self) -> String {
        let mut s = String::new();
        for c in self.cycles() {
            if c.len() < 2 {
                continue;
            }
            s.push('(');
            for (j, x) in c.iter().enumerate() {
                if j > 0 {
                    s.push(' ');
                }
                s.push_str(&(x + 1).to_string());
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }

    /// Lexicographic rank among all permutations of the same degree (degree ≤ 20).
    pub fn rank(&self) -> u64 {
        let n = self.degree();
        let mut used: u32 = 0;
        let mut r: u64 = 0;
        for i in 0..n {
            let x = self.images[i];
            let smaller = (used & ((1u32 << x) - 1)).count_ones();
            let less = x - smaller;
            r = r * (n - i) as u64 + less as u64;
            used |= 1 << x;
        }
        r
    }

    pub fn unrank(n: usize, mut r: u64) -> Permutation {
        let mut digits = vec![0u64; n];
        for i in (0..n).rev() {
            let base = (n - i) as u64;
            digits[i] = r % base;
            r /= base;
        }
        let mut avail: Vec<u32> = (0..n as u32).collect();
        let images = digits.iter().map(|&d| avail.remove(d as usize)).collect();
        Permutation { images }
    }

    /// Every permutation of degree `n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some(Permutation::identity(n)) }
    }

    pub fn random<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
        use rand::seq::SliceRandom;
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    pub fn random_even<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
        let mut p = Permutation::random(n, rng);
        if !p.is_even() && n >= 2 {
            p.images.swap(0, 1);
        }
        p
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Left-to-right product; panics on a degree mismatch.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.then(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

/// 1-based image sequence, e.g. `2,3,1`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, x) in self.images.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut v = Vec::new();
        for tok in s.trim().split(',') {
            let x: usize = tok.trim().parse().map_err(|_| Error::Parse(format!("bad point {:?}", tok)))?;
            v.push(x);
        }
        Permutation::from_one_based(&v)
    }
}

pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut a = cur.images.clone();
        let n = a.len();
        let mut i = n;
        while i >= 2 && a[i - 2] >= a[i - 1] {
            i -= 1;
        }
        if i >= 2 {
            let pivot = i - 2;
            let mut j = n - 1;
            while a[j] <= a[pivot] {
                j -= 1;
            }
            a.swap(pivot, j);
            a[pivot + 1..].reverse();
            self.next = Some(Permutation { images: a });
        }
        Some(cur)
    }
}

/// Conjugacy-class label of `S_n`: parts sorted increasingly.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    degree: usize,
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidCycleType(format!("{:?}", parts)));
        }
        parts.sort_unstable();
        Ok(CycleType { degree: parts.iter().sum(), parts })
    }

    /// Checks the parts sum to `degree`.
    pub fn with_degree(degree: usize, parts: Vec<usize>) -> Result<Self> {
        let ct = CycleType::new(parts)?;
        if ct.degree != degree {
            return Err(Error::InvalidCycleType(format!("{} does not sum to {}", ct, degree)));
        }
        Ok(ct)
    }

    pub fn identity(n: usize) -> Self {
        CycleType { degree: n, parts: vec![1; n] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn cycle_count(&self) -> usize {
        self.parts.len()
    }

    /// `(part, multiplicity)` pairs, parts increasing.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn parity(&self) -> Parity {
        if (self.degree - self.parts.len()).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `n! / ∏ k^{m_k} m_k!`.
    pub fn class_size(&self) -> BigUint {
        let mut denom = BigUint::one();
        for (k, mk) in self.multiplicities() {
            denom *= num_traits::pow(BigUint::from(k), mk);
            denom *= factorial(mk);
        }
        factorial(self.degree) / denom
    }

    /// Canonical element: cycles on consecutive points, in part order.
    pub fn representative(&self) -> Permutation {
        let mut images = Vec::with_capacity(self.degree);
        let mut start = 0u32;
        for &p in &self.parts {
            let p = p as u32;
            for j in 0..p {
                images.push(start + (j + 1) % p);
            }
            start += p;
        }
        Permutation { images }
    }

    pub fn lcm(&self) -> BigUint {
        let mut acc = BigUint::one();
        for &p in &self.parts {
            acc = num_integer::Integer::lcm(&acc, &BigUint::from(p));
        }
        acc
    }

    /// All cycle types of degree `n`.
    pub fn all(n: usize) -> Vec<CycleType> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<CycleType>, n: usize) {
            if rem == 0 {
                let mut parts = cur.clone();
                parts.reverse();
                out.push(CycleType { degree: n, parts });
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out, n);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out, n);
        out
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (j, p) in self.parts.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            parts.push(tok.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {:?}", tok)))?);
        }
        CycleType::new(parts)
    }
}

/// Number of ways to pick a set of the given cycles whose lengths add to `k`.
fn subset_sum_count(lengths: &[usize], k: usize) -> BigUint {
    let mut dp = vec![BigUint::zero(); k + 1];
    dp[0] = BigUint::one();
    for &l in lengths {
        if l > k {
            continue;
        }
        for s in (l..=k).rev() {
            let add = dp[s - l].clone();
            dp[s] += add;
        }
    }
    dp[k].clone()
}

/// Number of `k`-subsets fixed setwise by `p`.
pub fn invariant_ksubsets(p: &Permutation, k: usize) -> BigUint {
    if k > p.degree() {
        return BigUint::zero();
    }
    subset_sum_count(&p.cycle_lengths(), k)
}

/// Number of unordered balanced bipartitions that `p` preserves or swaps.
pub fn invariant_bipartitions(p: &Permutation) -> Result<BigUint> {
    let n = p.degree();
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    let lengths = p.cycle_lengths();
    let mut total = subset_sum_count(&lengths, n / 2) / 2u32;
    if n > 0 && lengths.iter().all(|l| l % 2 == 0) {
        total += num_traits::pow(BigUint::from(2u32), lengths.len() - 1);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn composition_is_left_to_right() {
        // (1 2) then (2 3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2.
        let r = p(3, &[&[1, 2]]).mul(&p(3, &[&[2, 3]])).unwrap();
        assert_eq!(r.image(0), 2);
        assert_eq!(r.image(1), 0);
        assert_eq!(r.image(2), 1);
        assert_eq!(r, p(3, &[&[1, 3, 2]]));
        // The other convention would give (1 2 3).
        assert_ne!(r, p(3, &[&[1, 2, 3]]));
    }

    #[test]
    fn identity_and_inverse() {
        let q = p(5, &[&[1, 4, 2], &[3, 5]]);
        assert_eq!(Permutation::identity(5).mul(&q).unwrap(), q);
        assert!(q.mul(&q.inverse()).unwrap().is_identity());
        assert!(matches!(q.mul(&Permutation::identity(4)), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn conjugation_examples() {
        let t = p(3, &[&[1, 2]]);
        assert_eq!(t.conjugate(&p(3, &[&[1, 3]])).unwrap(), p(3, &[&[2, 3]]));
        assert_eq!(t.conjugate(&Permutation::identity(3)).unwrap(), t);
        // Against the literal definition g^-1 p g.
        let g = p(6, &[&[1, 5, 3], &[2, 6]]);
        let x = p(6, &[&[1, 2, 3, 4]]);
        assert_eq!(x.conjugate(&g).unwrap(), &(&g.inverse() * &x) * &g);
    }

    #[test]
    fn cycle_types_and_parity() {
        let id = Permutation::identity(6);
        assert_eq!(id.cycle_type().to_string(), "[1,1,1,1,1,1]");
        assert_eq!(id.parity(), Parity::Even);
        let c6 = Permutation::long_cycle(6);
        assert_eq!(c6.cycle_type().to_string(), "[6]");
        assert_eq!(c6.parity(), Parity::Odd);
        let x = p(6, &[&[1, 2, 3, 4]]);
        assert_eq!(x.cycle_type().parts(), &[1, 1, 4]);
        assert_eq!(x.parity(), Parity::Odd);
    }

    #[test]
    fn class_size_examples() {
        for n in 5..12usize {
            let ct = CycleType::new(vec![n]).unwrap();
            assert_eq!(ct.class_size(), factorial(n - 1));
            let d1 = CycleType::new(vec![n - 2, 1, 1]).unwrap();
            assert_eq!(d1.class_size(), factorial(n) / (2 * (n - 2)));
        }
        assert_eq!(CycleType::new(vec![4, 1, 1]).unwrap().class_size(), BigUint::from(90u32));
        let c = CycleType::new(vec![11, 19]).unwrap();
        assert_eq!(c.class_size(), factorial(30) / (11u32 * 19));
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=12 {
            let s: BigUint = CycleType::all(n).iter().map(|c| c.class_size()).sum();
            assert_eq!(s, factorial(n), "n = {}", n);
        }
    }

    #[test]
    fn class_sizes_match_enumeration() {
        for n in 1..=7 {
            let mut counts = alloc::collections::BTreeMap::new();
            for q in Permutation::all(n) {
                *counts.entry(q.cycle_type()).or_insert(0u64) += 1;
            }
            assert_eq!(counts.len(), CycleType::all(n).len());
            for (ct, c) in counts {
                assert_eq!(ct.class_size(), BigUint::from(c));
                assert_eq!(ct.representative().cycle_type(), ct);
            }
        }
    }

    #[test]
    fn ranks_roundtrip() {
        for (r, q) in Permutation::all(6).enumerate() {
            assert_eq!(q.rank(), r as u64);
            assert_eq!(Permutation::unrank(6, r as u64), q);
        }
    }

    #[test]
    fn invariant_ksubset_examples() {
        // Only {5,6}: the 4-cycle moves {1,3} to {2,4}.
        let x = p(6, &[&[1, 2, 3, 4]]);
        assert_eq!(invariant_ksubsets(&x, 2), BigUint::one());
        let id = Permutation::identity(7);
        for k in 0..=7 {
            assert_eq!(invariant_ksubsets(&id, k), binomial(7, k));
        }
        let c = Permutation::long_cycle(9);
        for k in 1..9 {
            assert!(invariant_ksubsets(&c, k).is_zero());
        }
    }

    #[test]
    fn invariant_bipartition_examples() {
        assert_eq!(invariant_bipartitions(&Permutation::long_cycle(6)).unwrap(), BigUint::one());
        assert_eq!(invariant_bipartitions(&Permutation::identity(6)).unwrap(), BigUint::from(10u32));
        let t = CycleType::new(vec![1, 13, 16]).unwrap().representative();
        assert!(invariant_bipartitions(&t).unwrap().is_zero());
        let small = CycleType::new(vec![1, 2, 3]).unwrap().representative();
        // {1,2} ∪ {…}: the 3-cycle is alone on one side, fixed point plus 2-cycle on the other.
        assert_eq!(invariant_bipartitions(&small).unwrap(), BigUint::one());
        assert_eq!(invariant_bipartitions(&Permutation::identity(5)), Err(Error::OddDegree(5)));
    }

    #[test]
    fn text_roundtrip() {
        let q = p(5, &[&[1, 4, 2], &[3, 5]]);
        let s = q.to_string();
        assert_eq!(s.parse::<Permutation>().unwrap(), q);
        let ct: CycleType = "[16,1,13]".parse().unwrap();
        assert_eq!(ct.to_string(), "[1,13,16]");
    }
}
