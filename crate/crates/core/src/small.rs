//! Explicit permutation groups of small order, with exact covering and clique numbers.

mod clique;
mod cover;
mod lattice;

pub use clique::{generating_graph, max_clique, omega_exact, omega_from_lattice, CliqueResult};
pub use cover::{min_cover, sigma_exact, sigma_from_lattice, verify_covering, CoverResult};
pub use lattice::{maximal_classes, maximal_from_lattice, maximal_subgroups, subgroup_lattice, Lattice, Subgroup};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::wreath::{default_generating_pair, standard_generators, GroupParams};

/// Default cap for lattice work.
pub const LATTICE_CAP: usize = 1_000;
/// Default cap for membership-only work.
pub const MEMBERSHIP_CAP: usize = 1_000_000;
const TABLE_CAP: usize = 2_048;

/// A finite permutation group stored element by element, identity first.
#[derive(Clone, Debug)]
pub struct SmallGroup {
    name: String,
    degree: usize,
    elements: Vec<Permutation>,
    lookup: BTreeMap<u64, u32>,
    table: Option<Vec<u32>>,
    inverses: Vec<u32>,
    generators: Vec<usize>,
}

impl SmallGroup {
    /// Closure of `gens`; refuses groups with more than `cap` elements.
    pub fn from_generators(name: impl Into<String>, degree: usize, gens: &[Permutation], cap: usize) -> Result<Self> {
        if degree > 20 {
            return Err(Error::InvalidParameters(format!("degree {} is too large for explicit groups", degree)));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: g.degree(), right: degree });
            }
        }
        let mut seen = BTreeSet::new();
        let id = Permutation::identity(degree);
        seen.insert(id.rank());
        let mut all = vec![id];
        let mut at = 0;
        while at < all.len() {
            for g in gens {
                let h = &all[at] * g;
                if seen.insert(h.rank()) {
                    if all.len() >= cap {
                        return Err(Error::CapExceeded { size: all.len() as u128 + 1, cap: cap as u128 });
                    }
                    all.push(h);
                }
            }
            at += 1;
        }
        all.sort();
        let lookup: BTreeMap<u64, u32> = all.iter().enumerate().map(|(i, p)| (p.rank(), i as u32)).collect();
        let n = all.len();
        let table = if n <= TABLE_CAP {
            let mut t = vec![0u32; n * n];
            for (i, a) in all.iter().enumerate() {
                for (j, b) in all.iter().enumerate() {
                    t[i * n + j] = lookup[&(a * b).rank()];
                }
            }
            Some(t)
        } else {
            None
        };
        let inverses = all.iter().map(|p| lookup[&p.inverse().rank()]).collect();
        let generators = gens.iter().map(|g| lookup[&g.rank()] as usize).collect();
        Ok(SmallGroup { name: name.into(), degree, elements: all, lookup, table, inverses, generators })
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        let gens = if n <= 1 {
            vec![Permutation::identity(n.max(1))]
        } else {
            vec![Permutation::transposition(n, 0, 1), Permutation::long_cycle(n)]
        };
        Self::from_generators(format!("S{}", n), n.max(1), &gens, MEMBERSHIP_CAP)
    }

    pub fn alternating(n: usize) -> Result<Self> {
        let gens = if n < 3 {
            vec![Permutation::identity(n.max(1))]
        } else {
            crate::pi::alternating_generators(n).to_vec()
        };
        Self::from_generators(format!("A{}", n), n.max(1), &gens, MEMBERSHIP_CAP)
    }

    pub fn cyclic(k: usize) -> Result<Self> {
        Self::from_generators(format!("C{}", k), k.max(1), &[Permutation::long_cycle(k.max(1))], MEMBERSHIP_CAP)
    }

    /// Symmetries of a `k`-gon, of order `2k`.
    pub fn dihedral(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameters(format!("dihedral group needs k ≥ 3, got {}", k)));
        }
        let refl = Permutation::from_images((0..k as u32).map(|i| (k as u32 - i) % k as u32).collect())?;
        Self::from_generators(format!("D{}", k), k, &[Permutation::long_cycle(k), refl], MEMBERSHIP_CAP)
    }

    /// `C_2^k` acting on `2k` points.
    pub fn elementary_abelian(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameters(String::from("C2^0")));
        }
        let gens: Vec<Permutation> = (0..k).map(|j| Permutation::transposition(2 * k, 2 * j, 2 * j + 1)).collect();
        Self::from_generators(format!("C2^{}", k), 2 * k, &gens, MEMBERSHIP_CAP)
    }

    /// `G(n, m)` acting on `nm` points through the standard generators.
    pub fn wreath(n: usize, m: usize, cap: usize) -> Result<Self> {
        let params = GroupParams::new(n, m)?;
        let size: u128 = params.order().try_into().unwrap_or(u128::MAX);
        if size > cap as u128 {
            return Err(Error::CapExceeded { size, cap: cap as u128 });
        }
        let (x1, x2) = default_generating_pair(n);
        let (a1, a2) = standard_generators(params, &x1, &x2)?;
        Self::from_generators(format!("G{},{}", n, m), n * m, &[a1.to_ambient(), a2.to_ambient()], cap)
    }

    /// `S5`, `A4`, `C7`, `D4`, `C2^3`, `G6,2`.
    pub fn by_name(name: &str, cap: usize) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown group {:?}", name));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let g = if let Some(rest) = name.strip_prefix("C2^") {
            Self::elementary_abelian(num(rest)?)?
        } else if let Some(rest) = name.strip_prefix('G') {
            let (a, b) = rest.trim_matches(|c| c == '(' || c == ')').split_once(',').ok_or_else(bad)?;
            return Self::wreath(num(a.trim())?, num(b.trim())?, cap);
        } else if let Some(rest) = name.strip_prefix('S') {
            Self::symmetric(num(rest)?)?
        } else if let Some(rest) = name.strip_prefix('A') {
            Self::alternating(num(rest)?)?
        } else if let Some(rest) = name.strip_prefix('C') {
            Self::cyclic(num(rest)?)?
        } else if let Some(rest) = name.strip_prefix('D') {
            Self::dihedral(num(rest)?)?
        } else {
            return Err(bad());
        };
        if g.order() > cap {
            return Err(Error::CapExceeded { size: g.order() as u128, cap: cap as u128 });
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.degree {
            return None;
        }
        self.lookup.get(&p.rank()).map(|&i| i as usize)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.lookup[&(&self.elements[a] * &self.elements[b]).rank()] as usize,
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `b⁻¹ a b`.
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `(element order, count)` pairs in increasing order.
    pub fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut h = BTreeMap::new();
        for a in 0..self.order() {
            *h.entry(self.element_order(a)).or_insert(0) += 1;
        }
        h.into_iter().collect()
    }

    /// Subgroup generated by `gens`, or `None` once it has more than `limit` elements.
    pub fn closure(&self, gens: &[usize], limit: usize) -> Option<FixedBitSet> {
        let mut set = FixedBitSet::with_capacity(self.order());
        set.insert(0);
        let mut list = vec![0usize];
        let mut at = 0;
        while at < list.len() {
            for &g in gens {
                let h = self.mul(list[at], g);
                if !set.put(h) {
                    list.push(h);
                    if list.len() > limit {
                        return None;
                    }
                }
            }
            at += 1;
        }
        Some(set)
    }

    /// Whether `x` and `y` generate the group; stops once the closure passes half the order.
    pub fn generation_test(&self, x: usize, y: usize) -> bool {
        let n = self.order();
        if n == 1 {
            return true;
        }
        match self.closure(&[x, y], n / 2) {
            None => true,
            Some(s) => s.count_ones(..) == n,
        }
    }

    /// Conjugacy classes of elements.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[a] = id;
            let mut members = vec![a];
            let mut at = 0;
            while at < members.len() {
                for &g in &self.generators {
                    let c = self.conj(members[at], g);
                    if class_of[c] == usize::MAX {
                        class_of[c] = id;
                        members.push(c);
                    }
                }
                at += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Whether the group is cyclic.
    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|a| self.element_order(a) == self.order())
    }

    /// Whether `set` is a subgroup.
    pub fn is_subgroup(&self, set: &FixedBitSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let members: Vec<usize> = set.ones().collect();
        members.iter().all(|&a| members.iter().all(|&b| set.contains(self.mul(a, b))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_orders() {
        assert_eq!(SmallGroup::symmetric(5).unwrap().order(), 120);
        assert_eq!(SmallGroup::alternating(5).unwrap().order(), 60);
        assert_eq!(SmallGroup::alternating(4).unwrap().order(), 12);
        assert_eq!(SmallGroup::dihedral(4).unwrap().order(), 8);
        assert_eq!(SmallGroup::elementary_abelian(3).unwrap().order(), 8);
        assert_eq!(SmallGroup::cyclic(7).unwrap().order(), 7);
        assert_eq!(SmallGroup::by_name("S4", LATTICE_CAP).unwrap().order(), 24);
        assert!(matches!(SmallGroup::by_name("G6,2", LATTICE_CAP), Err(Error::CapExceeded { .. })));
        assert!(SmallGroup::by_name("X3", LATTICE_CAP).is_err());
    }

    #[test]
    fn identity_is_first_and_table_agrees() {
        let g = SmallGroup::symmetric(4).unwrap();
        assert!(g.element(0).is_identity());
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..g.order() {
                assert_eq!(*g.element(g.mul(a, b)), g.element(a) * g.element(b));
            }
        }
    }

    #[test]
    fn generation_examples() {
        let g = SmallGroup::symmetric(6).unwrap();
        assert!(!g.generation_test(0, 0));
        let a = g.index_of(&Permutation::transposition(6, 0, 1)).unwrap();
        let b = g.index_of(&Permutation::long_cycle(6)).unwrap();
        assert!(g.generation_test(a, b));
        let c = g.index_of(&Permutation::transposition(6, 2, 3)).unwrap();
        assert!(!g.generation_test(a, c));
    }

    #[test]
    fn class_counts() {
        assert_eq!(SmallGroup::symmetric(5).unwrap().conjugacy_classes().len(), 7);
        assert_eq!(SmallGroup::alternating(5).unwrap().conjugacy_classes().len(), 5);
    }
}
