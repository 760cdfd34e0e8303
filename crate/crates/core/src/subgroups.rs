//! Setwise stabilizers in `S_n`: subsets, balanced bipartitions, block systems,
//! and the order-bound placeholder for primitive subgroups.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{factorial, pow};
use crate::error::{Error, Result};
use crate::perm::{invariant_bipartitions, invariant_ksubsets, CycleType, Parity, Permutation};

/// Indices `-1, 1, 2, …` with `3i < n`.
pub fn index_set(n: usize) -> Vec<i32> {
    let mut out = vec![-1];
    let mut i = 1;
    while 3 * i < n {
        out.push(i as i32);
        i += 1;
    }
    out
}

/// The designated odd class for index `i`.
pub fn b_class(n: usize, i: i32) -> Result<CycleType> {
    if n < 6 || !n.is_multiple_of(6) {
        return Err(Error::InvalidParameters(format!("b_class needs n ≡ 0 mod 6, n ≥ 6 (got {})", n)));
    }
    if !index_set(n).contains(&i) {
        return Err(Error::InvalidParameters(format!("index {} not in I for n = {}", i, n)));
    }
    let h = n / 2;
    let parts = match i {
        -1 => vec![n],
        1 => vec![1, h - 2, h + 1],
        2 if h.is_multiple_of(2) => vec![2, h - 1, h - 1],
        2 => vec![2, h - 4, h + 2],
        _ => {
            let i = i as usize;
            if i % 2 == 1 {
                vec![i, (n - i - 1) / 2, (n - i).div_ceil(2)]
            } else if ((n - i) / 2) % 2 == 1 {
                vec![i, (n - i) / 2, (n - i) / 2]
            } else {
                vec![i, (n - i) / 2 - 1, (n - i) / 2 + 1]
            }
        }
    };
    CycleType::with_degree(n, parts)
}

/// `n ≡ 0 mod 6` and `n ≥ 30`.
pub fn within_theorem_range(n: usize) -> bool {
    n.is_multiple_of(6) && n >= 30
}

/// A subgroup of `S_n` given by the structure it stabilizes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StabilizerDescriptor {
    /// Stabilizer of a subset, sorted 0-based points.
    KSet { n: usize, subset: Vec<u32> },
    /// Stabilizer of `{block, complement}`; `block` holds point 0.
    Bipartition { n: usize, block: Vec<u32> },
    /// Stabilizer of a partition into equal blocks, sorted by least point.
    DBlocks { n: usize, blocks: Vec<Vec<u32>> },
    /// A primitive subgroup other than `A_n`, known only through `|H| < cap`.
    PrimitiveBound { n: usize, order_cap: BigUint },
}

fn sorted_unique(points: &[u32], n: usize) -> Result<Vec<u32>> {
    let mut v = points.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.len() != points.len() || v.iter().any(|&x| x as usize >= n) {
        return Err(Error::InvalidParameters(format!("bad point set {:?} on {} points", points, n)));
    }
    Ok(v)
}

fn complement(set: &[u32], n: usize) -> Vec<u32> {
    let mut mark = vec![false; n];
    for &x in set {
        mark[x as usize] = true;
    }
    (0..n as u32).filter(|&x| !mark[x as usize]).collect()
}

impl StabilizerDescriptor {
    pub fn kset(n: usize, subset: &[u32]) -> Result<Self> {
        let subset = sorted_unique(subset, n)?;
        if subset.is_empty() || subset.len() >= n {
            return Err(Error::InvalidParameters(String::from("subset must be proper and nonempty")));
        }
        Ok(StabilizerDescriptor::KSet { n, subset })
    }

    pub fn bipartition(n: usize, block: &[u32]) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::OddDegree(n));
        }
        let block = sorted_unique(block, n)?;
        if block.len() != n / 2 {
            return Err(Error::InvalidParameters(format!("block of size {} on {} points", block.len(), n)));
        }
        let block = if block[0] == 0 { block } else { complement(&block, n) };
        Ok(StabilizerDescriptor::Bipartition { n, block })
    }

    pub fn dblocks(n: usize, blocks: &[Vec<u32>]) -> Result<Self> {
        let d = blocks.len();
        if d < 2 || !n.is_multiple_of(d) {
            return Err(Error::InvalidParameters(format!("{} blocks on {} points", d, n)));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(d);
        for b in blocks {
            let b = sorted_unique(b, n)?;
            if b.len() != n / d {
                return Err(Error::InvalidParameters(String::from("unequal blocks")));
            }
            for &x in &b {
                if seen[x as usize] {
                    return Err(Error::InvalidParameters(String::from("blocks overlap")));
                }
                seen[x as usize] = true;
            }
            out.push(b);
        }
        out.sort();
        Ok(StabilizerDescriptor::DBlocks { n, blocks: out })
    }

    pub fn primitive_bound(n: usize) -> Self {
        StabilizerDescriptor::PrimitiveBound { n, order_cap: pow(&BigUint::from(4u32), n) }
    }

    /// Stabilizer of `{1, …, i}`.
    pub fn canonical_kset(n: usize, i: usize) -> Result<Self> {
        Self::kset(n, &(0..i as u32).collect::<Vec<_>>())
    }

    /// Stabilizer of `{1, …, n/2} | {n/2+1, …, n}`.
    pub fn canonical_bipartition(n: usize) -> Result<Self> {
        Self::bipartition(n, &(0..(n / 2) as u32).collect::<Vec<_>>())
    }

    /// Consecutive blocks of size `n/d`.
    pub fn canonical_dblocks(n: usize, d: usize) -> Result<Self> {
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::InvalidParameters(format!("{} does not divide {}", d, n)));
        }
        let a = (n / d) as u32;
        let blocks: Vec<Vec<u32>> = (0..d as u32).map(|j| (j * a..(j + 1) * a).collect()).collect();
        Self::dblocks(n, &blocks)
    }

    /// The member of the covering family for index `i`.
    pub fn covering_representative(n: usize, i: i32) -> Result<Self> {
        if i == -1 {
            Self::canonical_bipartition(n)
        } else if i >= 1 {
            Self::canonical_kset(n, i as usize)
        } else {
            Err(Error::InvalidParameters(format!("index {}", i)))
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            StabilizerDescriptor::KSet { n, .. }
            | StabilizerDescriptor::Bipartition { n, .. }
            | StabilizerDescriptor::DBlocks { n, .. }
            | StabilizerDescriptor::PrimitiveBound { n, .. } => *n,
        }
    }

    /// Index in `I` when the descriptor belongs to the covering family.
    pub fn covering_index(&self) -> Option<i32> {
        match self {
            StabilizerDescriptor::KSet { n, subset } if 3 * subset.len() < *n => Some(subset.len() as i32),
            StabilizerDescriptor::Bipartition { .. } => Some(-1),
            _ => None,
        }
    }

    /// Intransitive with `n/3 ≤ i < n/2`, at least three blocks, or primitive.
    pub fn is_competitor(&self) -> bool {
        match self {
            StabilizerDescriptor::KSet { n, subset } => {
                let i = subset.len();
                3 * i >= *n && 2 * i < *n
            }
            StabilizerDescriptor::DBlocks { blocks, .. } => blocks.len() >= 3,
            StabilizerDescriptor::PrimitiveBound { .. } => true,
            StabilizerDescriptor::Bipartition { .. } => false,
        }
    }

    /// Class-level representatives of every competitor family at degree `n`.
    pub fn competitors(n: usize) -> Vec<StabilizerDescriptor> {
        let mut out = Vec::new();
        for i in n.div_ceil(3)..n.div_ceil(2) {
            if 3 * i >= n && 2 * i < n {
                out.push(Self::canonical_kset(n, i).expect("valid"));
            }
        }
        for d in 3..=n / 2 {
            if n.is_multiple_of(d) {
                out.push(Self::canonical_dblocks(n, d).expect("valid"));
            }
        }
        out.push(Self::primitive_bound(n));
        out
    }

    /// Exact order of the stabilizer in `S_n`, or the cap for the primitive placeholder.
    pub fn normalizer_order(&self) -> BigUint {
        match self {
            StabilizerDescriptor::KSet { n, subset } => factorial(subset.len()) * factorial(n - subset.len()),
            StabilizerDescriptor::Bipartition { n, .. } => {
                let h = factorial(n / 2);
                &h * &h * 2u32
            }
            StabilizerDescriptor::DBlocks { n, blocks } => {
                let d = blocks.len();
                pow(&factorial(n / d), d) * factorial(d)
            }
            StabilizerDescriptor::PrimitiveBound { order_cap, .. } => order_cap.clone(),
        }
    }

    pub fn stabilizes(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch { left: p.degree(), right: self.degree() });
        }
        Ok(match self {
            StabilizerDescriptor::KSet { subset, .. } => p.image_of_set(subset) == *subset,
            StabilizerDescriptor::Bipartition { block, .. } => {
                let img = p.image_of_set(block);
                if img[0] == 0 {
                    img == *block
                } else {
                    // The image avoids point 0, so it must be the complement.
                    let mut mark = vec![false; p.degree()];
                    for &x in block {
                        mark[x as usize] = true;
                    }
                    img.iter().all(|&x| !mark[x as usize])
                }
            }
            StabilizerDescriptor::DBlocks { n, blocks } => {
                let mut id = vec![0usize; *n];
                for (j, b) in blocks.iter().enumerate() {
                    for &x in b {
                        id[x as usize] = j;
                    }
                }
                blocks.iter().all(|b| {
                    let t = id[p.image(b[0] as usize)];
                    b.iter().all(|&x| id[p.image(x as usize)] == t)
                })
            }
            StabilizerDescriptor::PrimitiveBound { .. } => return Err(Error::NoMembership),
        })
    }

    /// The descriptor of `S^g`, whose stabilizer is `Stab(S)^g`.
    pub fn image(&self, g: &Permutation) -> Result<Self> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch { left: g.degree(), right: self.degree() });
        }
        match self {
            StabilizerDescriptor::KSet { n, subset } => Self::kset(*n, &g.image_of_set(subset)),
            StabilizerDescriptor::Bipartition { n, block } => Self::bipartition(*n, &g.image_of_set(block)),
            StabilizerDescriptor::DBlocks { n, blocks } => {
                let imgs: Vec<Vec<u32>> = blocks.iter().map(|b| g.image_of_set(b)).collect();
                Self::dblocks(*n, &imgs)
            }
            StabilizerDescriptor::PrimitiveBound { .. } => Err(Error::NoMembership),
        }
    }

    /// An odd permutation in the stabilizer.
    pub fn odd_element(&self) -> Result<Permutation> {
        let n = self.degree();
        match self {
            StabilizerDescriptor::KSet { subset, .. } => {
                let rest = complement(subset, n);
                let (a, b) = if rest.len() >= 2 { (rest[0], rest[1]) } else { (subset[0], subset[1]) };
                Ok(Permutation::transposition(n, a as usize, b as usize))
            }
            StabilizerDescriptor::Bipartition { block, .. } => {
                Ok(Permutation::transposition(n, block[0] as usize, block[1] as usize))
            }
            StabilizerDescriptor::DBlocks { blocks, .. } => {
                if blocks[0].len() >= 2 {
                    Ok(Permutation::transposition(n, blocks[0][0] as usize, blocks[0][1] as usize))
                } else {
                    Err(Error::InvalidParameters(String::from("blocks of size one")))
                }
            }
            StabilizerDescriptor::PrimitiveBound { .. } => Err(Error::NoMembership),
        }
    }

    /// Number of elements of type `ct` in the stabilizer.
    pub fn class_count(&self, ct: &CycleType) -> Result<BigUint> {
        let n = self.degree();
        if ct.degree() != n {
            return Err(Error::DegreeMismatch { left: ct.degree(), right: n });
        }
        match self {
            StabilizerDescriptor::KSet { subset, .. } => Ok(class_count_in_young(ct, subset.len(), n - subset.len())),
            StabilizerDescriptor::Bipartition { .. } => class_count_in_wreath2(ct, n),
            StabilizerDescriptor::DBlocks { blocks, .. } => Ok(class_count_in_wreath(ct, n / blocks.len(), blocks.len())),
            StabilizerDescriptor::PrimitiveBound { .. } => Err(Error::NoMembership),
        }
    }

    /// Every permutation of the stabilizer, for small degrees.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        let n = self.degree();
        if n > 9 {
            return Err(Error::CapExceeded { size: n as u128, cap: 9 });
        }
        let mut out = Vec::new();
        for p in Permutation::all(n) {
            if self.stabilizes(&p)? {
                out.push(p);
            }
        }
        Ok(out)
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, set: &[u32]) -> fmt::Result {
    f.write_str("{")?;
    for (j, x) in set.iter().enumerate() {
        if j > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", x + 1)?;
    }
    f.write_str("}")
}

/// `kset:i:{…}`, `bipart:{…}`, `dblocks:d:{…}|{…}`, `prim:n:cap` with 1-based points.
impl fmt::Display for StabilizerDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilizerDescriptor::KSet { n, subset } => {
                write!(f, "kset:{}:{}:", n, subset.len())?;
                fmt_set(f, subset)
            }
            StabilizerDescriptor::Bipartition { n, block } => {
                write!(f, "bipart:{}:", n)?;
                fmt_set(f, block)
            }
            StabilizerDescriptor::DBlocks { n, blocks } => {
                write!(f, "dblocks:{}:{}:", n, blocks.len())?;
                for (j, b) in blocks.iter().enumerate() {
                    if j > 0 {
                        f.write_str("|")?;
                    }
                    fmt_set(f, b)?;
                }
                Ok(())
            }
            StabilizerDescriptor::PrimitiveBound { n, order_cap } => write!(f, "prim:{}:{}", n, order_cap),
        }
    }
}

impl fmt::Debug for StabilizerDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_set(s: &str) -> Result<Vec<u32>> {
    let inner = s.trim().strip_prefix('{').and_then(|t| t.strip_suffix('}'));
    let inner = inner.ok_or_else(|| Error::Parse(format!("bad set {:?}", s)))?;
    let mut v = Vec::new();
    for tok in inner.split(',') {
        let x: u32 = tok.trim().parse().map_err(|_| Error::Parse(format!("bad point {:?}", tok)))?;
        if x == 0 {
            return Err(Error::Parse(String::from("points are 1-based")));
        }
        v.push(x - 1);
    }
    Ok(v)
}

impl FromStr for StabilizerDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fields: Vec<&str> = s.trim().splitn(4, ':').collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad number {:?}", t)));
        match fields.as_slice() {
            ["kset", n, i, set] => {
                let d = Self::kset(num(n)?, &parse_set(set)?)?;
                if let StabilizerDescriptor::KSet { subset, .. } = &d {
                    if subset.len() != num(i)? {
                        return Err(Error::Parse(String::from("subset size mismatch")));
                    }
                }
                Ok(d)
            }
            ["bipart", n, set] => Self::bipartition(num(n)?, &parse_set(set)?),
            ["dblocks", n, _d, rest] => {
                let blocks: Result<Vec<Vec<u32>>> = rest.split('|').map(parse_set).collect();
                Self::dblocks(num(n)?, &blocks?)
            }
            ["prim", n, _cap] => Ok(Self::primitive_bound(num(n)?)),
            _ => Err(Error::Parse(format!("unknown descriptor {:?}", s))),
        }
    }
}

/// Enumerates the sub-multisets of `mults` (indexed like `values`) with
/// `Σ j_t · values[t] / c = target`, using only values divisible by `c`.
fn for_each_split(
    values: &[usize],
    rem: &[usize],
    c: usize,
    target: usize,
    f: &mut dyn FnMut(&[usize]),
) {
    fn go(
        t: usize,
        values: &[usize],
        rem: &[usize],
        c: usize,
        left: usize,
        pick: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if t == values.len() {
            if left == 0 {
                f(pick);
            }
            return;
        }
        let unit = values[t];
        let max = if unit.is_multiple_of(c) { rem[t].min(left / (unit / c)) } else { 0 };
        for j in 0..=max {
            pick.push(j);
            go(t + 1, values, rem, c, left - j * (unit / c), pick, f);
            pick.pop();
        }
    }
    let mut pick = Vec::with_capacity(values.len());
    go(0, values, rem, c, target, &mut pick, f);
}

/// Class size in `S_deg` of the type with multiplicities `pick` over `values / c`.
fn class_size_scaled(values: &[usize], pick: &[usize], c: usize, deg: usize) -> BigUint {
    let mut denom = BigUint::one();
    for (t, &j) in pick.iter().enumerate() {
        if j > 0 {
            denom *= pow(&BigUint::from(values[t] / c), j) * factorial(j);
        }
    }
    factorial(deg) / denom
}

/// Elements of type `ct` in a fixed `S_a × S_b`.
pub fn class_count_in_young(ct: &CycleType, a: usize, b: usize) -> BigUint {
    if a + b != ct.degree() {
        return BigUint::zero();
    }
    let mult = ct.multiplicities();
    let values: Vec<usize> = mult.iter().map(|x| x.0).collect();
    let rem: Vec<usize> = mult.iter().map(|x| x.1).collect();
    let mut total = BigUint::zero();
    for_each_split(&values, &rem, 1, a, &mut |pick| {
        let rest: Vec<usize> = rem.iter().zip(pick).map(|(r, j)| r - j).collect();
        total += class_size_scaled(&values, pick, 1, a) * class_size_scaled(&values, &rest, 1, b);
    });
    total
}

/// Elements of type `ct` in the stabilizer of a fixed balanced bipartition.
pub fn class_count_in_wreath2(ct: &CycleType, n: usize) -> Result<BigUint> {
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    if ct.degree() != n {
        return Err(Error::DegreeMismatch { left: ct.degree(), right: n });
    }
    let h = n / 2;
    let mut total = class_count_in_young(ct, h, h);
    if ct.parts().iter().all(|p| p % 2 == 0) {
        // A swapping element (f, g)·s has cycles of twice the lengths of f·g.
        let halved = CycleType::new(ct.parts().iter().map(|p| p / 2).collect())?;
        total += factorial(h) * halved.class_size();
    }
    Ok(total)
}

/// Elements of type `ct` in `S_a ≀ S_d` acting on `d` fixed blocks of size `a`.
pub fn class_count_in_wreath(ct: &CycleType, a: usize, d: usize) -> BigUint {
    if a * d != ct.degree() || a == 0 {
        return BigUint::zero();
    }
    let mult = ct.multiplicities();
    let values: Vec<usize> = mult.iter().map(|x| x.0).collect();
    let mut rem: Vec<usize> = mult.iter().map(|x| x.1).collect();
    let a_fact = factorial(a);
    let mut total = BigUint::zero();
    let mut mu = Vec::new();
    wreath_rec(&values, &mut rem, a, &a_fact, d, d, &mut mu, BigUint::one(), &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn wreath_rec(
    values: &[usize],
    rem: &mut Vec<usize>,
    a: usize,
    a_fact: &BigUint,
    d: usize,
    blocks_left: usize,
    mu: &mut Vec<usize>,
    weight: BigUint,
    total: &mut BigUint,
) {
    if blocks_left == 0 {
        if rem.iter().all(|&r| r == 0) {
            let mu_type = CycleType::new(mu.clone()).expect("positive parts");
            *total += mu_type.class_size() * weight;
        }
        return;
    }
    let max_c = mu.last().copied().unwrap_or(d).min(blocks_left);
    for c in (1..=max_c).rev() {
        let mut picks: Vec<Vec<usize>> = Vec::new();
        for_each_split(values, rem, c, a, &mut |pick| picks.push(pick.to_vec()));
        for pick in picks {
            // A c-cycle of blocks carrying w: (a!)^(c-1) choices per class element of w.
            let w = pow(a_fact, c - 1) * class_size_scaled(values, &pick, c, a);
            for (t, &j) in pick.iter().enumerate() {
                rem[t] -= j;
            }
            mu.push(c);
            wreath_rec(values, rem, a, a_fact, d, blocks_left - c, mu, &weight * w, total);
            mu.pop();
            for (t, &j) in pick.iter().enumerate() {
                rem[t] += j;
            }
        }
    }
}

/// Number of members of the covering family of `S_n` that contain `p`.
pub fn f_member_count(p: &Permutation) -> Result<BigUint> {
    let n = p.degree();
    let mut total = BigUint::zero();
    let mut i = 1;
    while 3 * i < n {
        total += invariant_ksubsets(p, i);
        i += 1;
    }
    total += invariant_bipartitions(p)?;
    Ok(total)
}

/// The covering-family members containing the odd permutation `p`, rebuilt from its cycles.
pub fn f_members_containing(p: &Permutation) -> Result<Vec<StabilizerDescriptor>> {
    let n = p.degree();
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    if p.parity() != Parity::Odd {
        return Err(Error::EvenPermutation);
    }
    let cycles = p.cycles();
    let mut out = Vec::new();
    // Unions of cycles of total size i with 3i < n.
    let limit = (n - 1) / 3;
    let mut chosen: Vec<usize> = Vec::new();
    fn unions(
        cycles: &[Vec<u32>],
        start: usize,
        size: usize,
        limit: usize,
        chosen: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize], usize),
    ) {
        if size > 0 {
            f(chosen, size);
        }
        for c in start..cycles.len() {
            let s = size + cycles[c].len();
            if s <= limit {
                chosen.push(c);
                unions(cycles, c + 1, s, limit, chosen, f);
                chosen.pop();
            }
        }
    }
    let mut ksets = Vec::new();
    unions(&cycles, 0, 0, limit, &mut chosen, &mut |sel, _| {
        let pts: Vec<u32> = sel.iter().flat_map(|&c| cycles[c].iter().copied()).collect();
        ksets.push(pts);
    });
    for pts in ksets {
        out.push(StabilizerDescriptor::kset(n, &pts)?);
    }
    // Preserved bipartitions: unions of size n/2 through the cycle of point 0.
    let h = n / 2;
    let first = cycles[0].len();
    let mut halves = Vec::new();
    if first <= h {
        chosen.clear();
        chosen.push(0);
        fn extend(
            cycles: &[Vec<u32>],
            start: usize,
            size: usize,
            target: usize,
            chosen: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if size == target {
                out.push(chosen.clone());
                return;
            }
            for c in start..cycles.len() {
                let s = size + cycles[c].len();
                if s <= target {
                    chosen.push(c);
                    extend(cycles, c + 1, s, target, chosen, out);
                    chosen.pop();
                }
            }
        }
        extend(&cycles, 1, first, h, &mut chosen, &mut halves);
    }
    for sel in halves {
        let pts: Vec<u32> = sel.iter().flat_map(|&c| cycles[c].iter().copied()).collect();
        out.push(StabilizerDescriptor::bipartition(n, &pts)?);
    }
    // Swapped bipartitions: alternate points of every even cycle.
    if cycles.iter().all(|c| c.len() % 2 == 0) {
        let rest = cycles.len() - 1;
        for mask in 0u64..(1u64 << rest) {
            let mut pts = Vec::with_capacity(h);
            for (j, c) in cycles.iter().enumerate() {
                let phase = if j == 0 { 0 } else { ((mask >> (j - 1)) & 1) as usize };
                pts.extend(c.iter().skip(phase).step_by(2).copied());
            }
            out.push(StabilizerDescriptor::bipartition(n, &pts)?);
        }
    }
    Ok(out)
}

/// `(3n² + 27n + 54) / (4n² − 9)`.
pub fn eric_sum_bound(n: usize) -> BigRational {
    let n = BigInt::from(n);
    let num = BigInt::from(3) * &n * &n + BigInt::from(27) * &n + BigInt::from(54);
    let den = BigInt::from(4) * &n * &n - BigInt::from(9);
    BigRational::new(num, den)
}
