//! Arithmetic in `G(n, m) = A_n^m ⋊ <γ>` with `γ = (1, …, 1, τ)δ`.
//!
//! Elements are kept in the normal form `(x_1, …, x_m)γ^k`, `0 ≤ k < 2m`.
//! Conjugation by `γ` is `A(x) = (x_m^τ, x_1, …, x_{m-1})`, and
//! `(x)γ^k · (y)γ^l = (x · A^{-k}(y)) γ^{k+l}`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{factorial, pow};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupParams {
    n: usize,
    m: usize,
}

impl GroupParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 5 || m < 1 {
            return Err(Error::InvalidParameters(format!("need n ≥ 5 and m ≥ 1, got ({}, {})", n, m)));
        }
        Ok(GroupParams { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `|A_n| = n!/2`.
    pub fn an_order(&self) -> BigUint {
        factorial(self.n) / 2u32
    }

    /// `(n!/2)^m · 2m`.
    pub fn order(&self) -> BigUint {
        pow(&self.an_order(), self.m) * (2 * self.m) as u64
    }

    pub fn tau(&self) -> Permutation {
        Permutation::transposition(self.n, 0, 1)
    }

    /// `n ≡ 0 mod 6`, `n ≥ 30` and `m ≥ 2`.
    pub fn theorem_scale(&self) -> bool {
        self.n.is_multiple_of(6) && self.n >= 30 && self.m >= 2
    }

    pub fn flags(&self) -> ScaleFlags {
        ScaleFlags {
            outside_theorem_hypotheses: !(self.n.is_multiple_of(6) && self.n >= 30),
            m1_degenerate: self.m == 1,
        }
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.n, self.m)
    }
}

/// Warnings attached to results computed away from the theorem's range.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScaleFlags {
    pub outside_theorem_hypotheses: bool,
    pub m1_degenerate: bool,
}

/// `A^steps(xs)`; negative steps allowed.
pub fn gamma_action(params: &GroupParams, xs: &[Permutation], steps: i64) -> Vec<Permutation> {
    let m = params.m as i64;
    let s = steps.rem_euclid(2 * m);
    let tau = params.tau();
    (0..m)
        .map(|j| {
            let t = j - s;
            let src = t.rem_euclid(m) as usize;
            let wraps = (src as i64 - t) / m;
            if wraps % 2 == 1 {
                xs[src].conj(&tau)
            } else {
                xs[src].clone()
            }
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    params: GroupParams,
    xs: Vec<Permutation>,
    k: usize,
}

impl WreathElement {
    pub fn new(params: GroupParams, xs: Vec<Permutation>, k: usize) -> Result<Self> {
        if xs.len() != params.m {
            return Err(Error::NotInGroup(format!("{} coordinates for m = {}", xs.len(), params.m)));
        }
        for (j, x) in xs.iter().enumerate() {
            if x.degree() != params.n {
                return Err(Error::DegreeMismatch { left: x.degree(), right: params.n });
            }
            if !x.is_even() {
                return Err(Error::NotInGroup(format!("coordinate {} is odd", j + 1)));
            }
        }
        if k >= 2 * params.m {
            return Err(Error::NotInGroup(format!("exponent {} ≥ 2m", k)));
        }
        Ok(WreathElement { params, xs, k })
    }

    pub(crate) fn from_parts(params: GroupParams, xs: Vec<Permutation>, k: usize) -> Self {
        debug_assert!(xs.iter().all(|x| x.is_even()) && k < 2 * params.m);
        WreathElement { params, xs, k }
    }

    pub fn identity(params: GroupParams) -> Self {
        WreathElement { params, xs: vec![Permutation::identity(params.n); params.m], k: 0 }
    }

    pub fn gamma(params: GroupParams) -> Self {
        WreathElement { params, xs: vec![Permutation::identity(params.n); params.m], k: 1 }
    }

    pub fn socle(params: GroupParams, xs: Vec<Permutation>) -> Result<Self> {
        Self::new(params, xs, 0)
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn xs(&self) -> &[Permutation] {
        &self.xs
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.xs.iter().all(|x| x.is_identity())
    }

    pub fn mul(&self, other: &WreathElement) -> Result<WreathElement> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch);
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &WreathElement) -> WreathElement {
        let shifted = gamma_action(&self.params, &other.xs, -(self.k as i64));
        let xs = self.xs.iter().zip(&shifted).map(|(a, b)| a * b).collect();
        WreathElement { params: self.params, xs, k: (self.k + other.k) % (2 * self.params.m) }
    }

    /// `((x)γ^k)⁻¹ = A^k(x⁻¹) γ^{-k}`.
    pub fn inverse(&self) -> WreathElement {
        let inv: Vec<Permutation> = self.xs.iter().map(|x| x.inverse()).collect();
        let xs = gamma_action(&self.params, &inv, self.k as i64);
        let two_m = 2 * self.params.m;
        WreathElement { params: self.params, xs, k: (two_m - self.k) % two_m }
    }

    /// `h⁻¹ self h`.
    pub fn conj(&self, h: &WreathElement) -> Result<WreathElement> {
        Ok(h.inverse().mul(self)?.mul_unchecked(h))
    }

    /// Coordinates of `h^self` for a socle element `h = (h_1, …, h_m)`: `A^k((h_j^{x_j})_j)`.
    pub fn conj_socle(&self, h: &[Permutation]) -> Vec<Permutation> {
        let c: Vec<Permutation> = h.iter().zip(&self.xs).map(|(a, x)| a.conj(x)).collect();
        gamma_action(&self.params, &c, self.k as i64)
    }

    pub fn pow(&self, e: u64) -> WreathElement {
        let mut result = WreathElement::identity(self.params);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    pub fn order(&self) -> BigUint {
        let two_m = 2 * self.params.m as u64;
        let j = two_m / crate::arith::gcd(self.k as u64, two_m);
        let h = self.pow(j);
        let mut acc = BigUint::one();
        for x in &h.xs {
            acc = num_integer::Integer::lcm(&acc, &x.order());
        }
        acc * j
    }

    pub fn to_raw(&self) -> RawWreath {
        let mut raw = RawWreath { fs: self.xs.clone(), top: Permutation::identity(self.params.m) };
        let g = RawWreath::gamma(&self.params);
        for _ in 0..self.k {
            raw = raw.mul(&g);
        }
        raw
    }

    /// The element as a permutation of the `nm` points `(block, point)` ↦ `block·n + point`.
    pub fn to_ambient(&self) -> Permutation {
        self.to_raw().to_ambient()
    }

    pub fn random<R: rand::Rng + ?Sized>(params: GroupParams, rng: &mut R) -> Self {
        let xs = (0..params.m).map(|_| Permutation::random_even(params.n, rng)).collect();
        let k = rng.gen_range(0..2 * params.m);
        WreathElement { params, xs, k }
    }

    pub fn random_socle<R: rand::Rng + ?Sized>(params: GroupParams, rng: &mut R) -> Self {
        let xs = (0..params.m).map(|_| Permutation::random_even(params.n, rng)).collect();
        WreathElement { params, xs, k: 0 }
    }

    /// Mixed-radix rank over `S_n^m × Z_2m`; only for `n ≤ 20`.
    pub fn rank(&self) -> u128 {
        let nf = factorial_u128(self.params.n);
        let mut r: u128 = 0;
        for x in &self.xs {
            r = r * nf + x.rank() as u128;
        }
        r * (2 * self.params.m) as u128 + self.k as u128
    }
}

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl Mul for &WreathElement {
    type Output = WreathElement;

    /// Panics when the parameters differ.
    fn mul(self, rhs: &WreathElement) -> WreathElement {
        assert_eq!(self.params, rhs.params, "parameter mismatch");
        self.mul_unchecked(rhs)
    }
}

/// `[p_1;…;p_m]^k` with 1-based image sequences.
impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (j, x) in self.xs.iter().enumerate() {
            if j > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "]^{}", self.k)
    }
}

impl fmt::Debug for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, x) in self.xs.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{:?}", x)?;
        }
        write!(f, ")γ^{}", self.k)
    }
}

impl FromStr for WreathElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, k) = s.rsplit_once("]^").ok_or_else(|| Error::Parse(format!("expected [..]^k, got {:?}", s)))?;
        let body = body.strip_prefix('[').ok_or_else(|| Error::Parse(String::from("missing '['")))?;
        let k: usize = k.trim().parse().map_err(|_| Error::Parse(format!("bad exponent {:?}", k)))?;
        let xs: Result<Vec<Permutation>> = body.split(';').map(|t| t.parse()).collect();
        let xs = xs?;
        let n = xs.first().map(|x| x.degree()).unwrap_or(0);
        let params = GroupParams::new(n, xs.len())?;
        WreathElement::new(params, xs, k)
    }
}

/// An element `(f_1, …, f_m)π` of `S_n ≀ S_m`, acting by `(j, a) ↦ (j^π, a^{f_j})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawWreath {
    pub fs: Vec<Permutation>,
    pub top: Permutation,
}

impl RawWreath {
    pub fn identity(params: &GroupParams) -> Self {
        RawWreath { fs: vec![Permutation::identity(params.n); params.m], top: Permutation::identity(params.m) }
    }

    /// `(1, …, 1, τ)δ` with `δ: j ↦ j+1`.
    pub fn gamma(params: &GroupParams) -> Self {
        let mut fs = vec![Permutation::identity(params.n); params.m];
        fs[params.m - 1] = params.tau();
        RawWreath { fs, top: Permutation::long_cycle(params.m) }
    }

    /// `(f)π · (g)ρ = (f_j g_{j^π})_j πρ`.
    pub fn mul(&self, other: &RawWreath) -> RawWreath {
        let fs = self.fs.iter().enumerate().map(|(j, f)| f * &other.fs[self.top.image(j)]).collect();
        RawWreath { fs, top: &self.top * &other.top }
    }

    pub fn inverse(&self) -> RawWreath {
        let tinv = self.top.inverse();
        let fs = (0..self.fs.len()).map(|j| self.fs[tinv.image(j)].inverse()).collect();
        RawWreath { fs, top: tinv }
    }

    pub fn to_ambient(&self) -> Permutation {
        let n = self.fs[0].degree();
        let mut images = vec![0u32; n * self.fs.len()];
        for (j, f) in self.fs.iter().enumerate() {
            for a in 0..n {
                images[j * n + a] = (self.top.image(j) * n + f.image(a)) as u32;
            }
        }
        Permutation::from_images(images).expect("bijection")
    }
}

/// Normal form of a raw wreath element lying in `G(n, m)`.
pub fn canonicalize(params: GroupParams, raw: &RawWreath) -> Result<WreathElement> {
    if raw.fs.len() != params.m || raw.top.degree() != params.m {
        return Err(Error::NotInGroup(String::from("wrong number of coordinates")));
    }
    if raw.fs.iter().any(|f| f.degree() != params.n) {
        return Err(Error::NotInGroup(String::from("coordinate of wrong degree")));
    }
    let delta = Permutation::long_cycle(params.m);
    let k0 = (0..params.m)
        .find(|&k| delta.pow(k as u64) == raw.top)
        .ok_or_else(|| Error::NotInGroup(format!("top {:?} is not a power of δ", raw.top)))?;
    let ginv = RawWreath::gamma(&params).inverse();
    let mut h = raw.clone();
    for _ in 0..k0 {
        h = h.mul(&ginv);
    }
    debug_assert!(h.top.is_identity());
    let evens = h.fs.iter().filter(|f| f.is_even()).count();
    if evens == params.m {
        return Ok(WreathElement::from_parts(params, h.fs, k0));
    }
    if evens == 0 {
        // Strip γ^m = (τ, …, τ) as well.
        let tau = params.tau();
        let fs = h.fs.iter().map(|f| f * &tau).collect();
        return Ok(WreathElement::from_parts(params, fs, k0 + params.m));
    }
    Err(Error::NotInGroup(format!("coordinates of mixed parity after removing γ^{}", k0)))
}

/// Even permutations of degree `n` in lexicographic order.
pub fn alternating_elements(n: usize) -> Vec<Permutation> {
    Permutation::all(n).filter(|p| p.is_even()).collect()
}

/// Every element of `G(n, m)`; refuses more than `cap` elements.
pub fn all_elements(params: GroupParams, cap: u128) -> Result<Vec<WreathElement>> {
    let size = params.order().try_into().unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let an = alternating_elements(params.n);
    let mut out = Vec::with_capacity(size as usize);
    let mut idx = vec![0usize; params.m];
    loop {
        let xs: Vec<Permutation> = idx.iter().map(|&i| an[i].clone()).collect();
        for k in 0..2 * params.m {
            out.push(WreathElement::from_parts(params, xs.clone(), k));
        }
        let mut j = params.m;
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < an.len() {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// Calls `f` on every element of `G(n, m)` without storing them; refuses more than `cap` elements.
pub fn for_each_element<F: FnMut(&WreathElement)>(params: GroupParams, cap: u128, mut f: F) -> Result<()> {
    let size = params.order().try_into().unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let an = alternating_elements(params.n);
    let mut idx = vec![0usize; params.m];
    let mut g = WreathElement::identity(params);
    loop {
        for (slot, &i) in g.xs.iter_mut().zip(&idx) {
            if *slot != an[i] {
                *slot = an[i].clone();
            }
        }
        for k in 0..2 * params.m {
            g.k = k;
            f(&g);
        }
        let mut j = params.m;
        loop {
            if j == 0 {
                return Ok(());
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < an.len() {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// Size of the subgroup generated by `gens`, by breadth-first closure over ranks.
pub fn closure_size(params: GroupParams, gens: &[WreathElement], cap: u128) -> Result<u64> {
    let nf = factorial_u128(params.n);
    let space = nf.pow(params.m as u32) * (2 * params.m) as u128;
    if space > cap {
        return Err(Error::CapExceeded { size: space, cap });
    }
    let mut seen = FixedBitSet::with_capacity(space as usize);
    let id = WreathElement::identity(params);
    seen.insert(id.rank() as usize);
    let mut queue = vec![id];
    let mut count = 1u64;
    while let Some(g) = queue.pop() {
        for s in gens {
            let h = g.mul(s)?;
            let r = h.rank() as usize;
            if !seen.contains(r) {
                seen.insert(r);
                count += 1;
                queue.push(h);
            }
        }
    }
    Ok(count)
}

/// Whether `a` and `b` generate `S_n`, by closure over ranks; `None` above degree 10.
pub fn generates_symmetric(a: &Permutation, b: &Permutation) -> Option<bool> {
    let n = a.degree();
    if n > 10 || b.degree() != n {
        return None;
    }
    let total = factorial_u128(n) as usize;
    let mut seen = FixedBitSet::with_capacity(total);
    let id = Permutation::identity(n);
    seen.insert(id.rank() as usize);
    let mut queue = vec![id];
    let mut count = 1usize;
    while let Some(g) = queue.pop() {
        for s in [a, b] {
            let h = &g * s;
            let r = h.rank() as usize;
            if !seen.contains(r) {
                seen.insert(r);
                count += 1;
                queue.push(h);
            }
        }
    }
    Some(count == total)
}

/// Even `x_1, x_2` with `x_1τ` a long cycle and `x_2τ = (n-1 n)`, so that
/// `<x_1τ, x_2τ> = S_n`.
pub fn default_generating_pair(n: usize) -> (Permutation, Permutation) {
    let tau = Permutation::transposition(n, 0, 1);
    let len = if n.is_multiple_of(2) { n } else { n - 1 };
    let mut images: Vec<u32> = (0..n as u32).collect();
    for (j, x) in images.iter_mut().enumerate().take(len) {
        *x = ((j + 1) % len) as u32;
    }
    let c = Permutation::from_images(images).expect("cycle");
    let t = Permutation::transposition(n, n - 2, n - 1);
    (&c * &tau, &t * &tau)
}

/// `α_i = (x_i, 1, …, 1)γ` for `i = 1, 2`.
pub fn standard_generators(
    params: GroupParams,
    x1: &Permutation,
    x2: &Permutation,
) -> Result<(WreathElement, WreathElement)> {
    if !x1.is_even() || !x2.is_even() {
        return Err(Error::Generation(String::from("x_1 and x_2 must be even")));
    }
    let tau = params.tau();
    if let Some(false) = generates_symmetric(&(x1 * &tau), &(x2 * &tau)) {
        return Err(Error::Generation(String::from("x_1τ and x_2τ do not generate S_n")));
    }
    let mk = |x: &Permutation| {
        let mut xs = vec![Permutation::identity(params.n); params.m];
        xs[0] = x.clone();
        WreathElement::new(params, xs, 1)
    };
    Ok((mk(x1)?, mk(x2)?))
}
