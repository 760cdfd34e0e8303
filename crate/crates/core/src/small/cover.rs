use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::lattice::{maximal_from_lattice, subgroup_lattice, Lattice, Subgroup};
use super::SmallGroup;
use crate::error::{Error, Result};

/// A smallest covering by proper subgroups.
#[derive(Clone, Debug)]
pub struct CoverResult {
    pub value: usize,
    pub witness: Vec<Subgroup>,
    /// Number of maximal subgroups searched over.
    pub candidates: usize,
    pub nodes: u64,
}

struct Search<'a> {
    sets: &'a [FixedBitSet],
    containing: Vec<FixedBitSet>,
    best: Vec<usize>,
    nodes: u64,
    stop: &'a dyn Fn() -> bool,
}

impl Search<'_> {
    fn allowed(&self, e: usize, forbidden: &FixedBitSet) -> FixedBitSet {
        let mut a = self.containing[e].clone();
        a.difference_with(forbidden);
        a
    }

    // Elements whose allowed sets are pairwise disjoint each need their own set.
    fn lower_bound(&self, uncovered: &[usize], forbidden: &FixedBitSet) -> usize {
        let mut used = FixedBitSet::with_capacity(self.sets.len());
        let mut count = 0;
        for &e in uncovered {
            let a = self.allowed(e, forbidden);
            if a.is_disjoint(&used) {
                used.union_with(&a);
                count += 1;
            }
        }
        count
    }

    fn run(&mut self, covered: &FixedBitSet, chosen: &mut Vec<usize>, forbidden: &mut FixedBitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && (self.stop)() {
            return Err(Error::Interrupted);
        }
        let mut uncovered: Vec<usize> = covered.zeroes().collect();
        if uncovered.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        }
        if chosen.len() + 1 >= self.best.len() {
            return Ok(());
        }
        uncovered.sort_by_cached_key(|&e| self.allowed(e, forbidden).count_ones(..));
        let pick = uncovered[0];
        let branch = self.allowed(pick, forbidden);
        if branch.is_clear() {
            return Ok(());
        }
        if chosen.len() + self.lower_bound(&uncovered, forbidden) >= self.best.len() {
            return Ok(());
        }
        let mut options: Vec<(usize, usize)> = branch
            .ones()
            .map(|c| {
                let mut gain = self.sets[c].clone();
                gain.difference_with(covered);
                (gain.count_ones(..), c)
            })
            .collect();
        options.sort_by(|a, b| b.cmp(a));
        let mut banned = Vec::new();
        for (_, c) in options {
            let mut next = covered.clone();
            next.union_with(&self.sets[c]);
            chosen.push(c);
            let r = self.run(&next, chosen, forbidden);
            chosen.pop();
            r?;
            forbidden.insert(c);
            banned.push(c);
            if chosen.len() + 1 >= self.best.len() {
                break;
            }
        }
        for c in banned {
            forbidden.set(c, false);
        }
        Ok(())
    }
}

fn greedy_cover(universe: usize, sets: &[FixedBitSet]) -> Option<Vec<usize>> {
    let mut covered = FixedBitSet::with_capacity(universe);
    let mut chosen = Vec::new();
    while covered.count_ones(..) < universe {
        let (gain, c) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.difference(&covered).count(), i))
            .max()?;
        if gain == 0 {
            return None;
        }
        covered.union_with(&sets[c]);
        chosen.push(c);
    }
    Some(chosen)
}

/// Fewest of `sets` whose union is `0..universe`, with the node count.
/// `None` when no selection covers.
pub fn min_cover(universe: usize, sets: &[FixedBitSet], stop: &dyn Fn() -> bool) -> Result<Option<(Vec<usize>, u64)>> {
    let greedy = match greedy_cover(universe, sets) {
        Some(c) => c,
        None => return Ok(None),
    };
    let mut containing = vec![FixedBitSet::with_capacity(sets.len()); universe];
    for (i, s) in sets.iter().enumerate() {
        for e in s.ones() {
            containing[e].insert(i);
        }
    }
    let mut search = Search { sets, containing, best: greedy, nodes: 0, stop };
    let covered = FixedBitSet::with_capacity(universe);
    let mut forbidden = FixedBitSet::with_capacity(sets.len());
    search.run(&covered, &mut Vec::new(), &mut forbidden)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(Some((best, search.nodes)))
}

/// The least number of proper subgroups whose union is the group.
pub fn sigma_exact(g: &SmallGroup, cap: usize, stop: &dyn Fn() -> bool) -> Result<CoverResult> {
    if g.order() > cap {
        return Err(Error::CapExceeded { size: g.order() as u128, cap: cap as u128 });
    }
    if g.is_cyclic() {
        return Err(Error::NotCoverable);
    }
    let lat = subgroup_lattice(g, cap, stop)?;
    sigma_from_lattice(g, &lat, stop)
}

/// As [`sigma_exact`], reusing a lattice computed (or loaded) earlier.
pub fn sigma_from_lattice(g: &SmallGroup, lat: &Lattice, stop: &dyn Fn() -> bool) -> Result<CoverResult> {
    if g.is_cyclic() {
        return Err(Error::NotCoverable);
    }
    let maximal = maximal_from_lattice(g, lat);
    let sets: Vec<FixedBitSet> = maximal.iter().map(|s| s.elements.clone()).collect();
    let (chosen, nodes) = min_cover(g.order(), &sets, stop)?.ok_or(Error::NotCoverable)?;
    let witness: Vec<Subgroup> = chosen.iter().map(|&i| maximal[i].clone()).collect();
    if !verify_covering(g, &witness) {
        return Err(Error::InvalidParameters(alloc::string::String::from("covering witness failed re-verification")));
    }
    Ok(CoverResult { value: witness.len(), witness, candidates: maximal.len(), nodes })
}

/// Every member is a proper subgroup and together they contain every element.
pub fn verify_covering(g: &SmallGroup, witness: &[Subgroup]) -> bool {
    let n = g.order();
    let mut union = FixedBitSet::with_capacity(n);
    for s in witness {
        if s.elements.count_ones(..) >= n || !g.is_subgroup(&s.elements) {
            return false;
        }
        union.union_with(&s.elements);
    }
    union.count_ones(..) == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::small::maximal_subgroups;

    fn never() -> bool {
        false
    }

    // Tries every selection of k maximal subgroups for k = 2, 3, ….
    fn naive_sigma(g: &SmallGroup) -> usize {
        let max = maximal_subgroups(g, 1000, &never).unwrap();
        let n = g.order();
        fn pick(max: &[Subgroup], from: usize, left: usize, acc: &FixedBitSet, n: usize) -> bool {
            if left == 0 {
                return acc.count_ones(..) == n;
            }
            (from..max.len()).any(|i| {
                let mut next = acc.clone();
                next.union_with(&max[i].elements);
                pick(max, i + 1, left - 1, &next, n)
            })
        }
        (2..=max.len()).find(|&k| pick(&max, 0, k, &FixedBitSet::with_capacity(n), n)).unwrap()
    }

    #[test]
    fn small_sigma_values() {
        for (name, sigma) in [("S3", 4), ("A4", 5), ("S4", 4), ("D4", 3), ("C2^2", 3), ("C2^3", 3), ("D5", 6), ("D6", 3)] {
            let g = SmallGroup::by_name(name, 1000).unwrap();
            let r = sigma_exact(&g, 1000, &never).unwrap();
            assert_eq!(r.value, sigma, "{}", name);
            if g.order() <= 60 {
                assert_eq!(naive_sigma(&g), sigma, "{}", name);
            }
        }
    }

    #[test]
    fn a5_against_naive() {
        let g = SmallGroup::alternating(5).unwrap();
        assert_eq!(sigma_exact(&g, 1000, &never).unwrap().value, 10);
        assert_eq!(naive_sigma(&g), 10);
    }

    #[test]
    fn cyclic_is_not_coverable() {
        let g = SmallGroup::cyclic(6).unwrap();
        assert_eq!(sigma_exact(&g, 1000, &never).unwrap_err(), Error::NotCoverable);
    }

    #[test]
    fn min_cover_basics() {
        let mk = |xs: &[usize]| {
            let mut b = FixedBitSet::with_capacity(6);
            for &x in xs {
                b.insert(x);
            }
            b
        };
        let sets = vec![mk(&[0, 1, 2]), mk(&[3, 4]), mk(&[5]), mk(&[2, 3, 4, 5])];
        let (c, _) = min_cover(6, &sets, &never).unwrap().unwrap();
        assert_eq!(c, vec![0, 3]);
        assert!(min_cover(6, &sets[..2], &never).unwrap().is_none());
    }

    #[test]
    fn verify_rejects_bad_witness() {
        let g = SmallGroup::symmetric(3).unwrap();
        let r = sigma_exact(&g, 1000, &never).unwrap();
        assert!(verify_covering(&g, &r.witness));
        assert!(!verify_covering(&g, &r.witness[..3]));
    }
}
