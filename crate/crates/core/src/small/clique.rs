use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::lattice::{maximal_from_lattice, subgroup_lattice, Lattice, Subgroup};
use super::SmallGroup;
use crate::error::{Error, Result};

/// A largest set of pairwise generating elements.
#[derive(Clone, Debug)]
pub struct CliqueResult {
    pub value: usize,
    pub clique: Vec<usize>,
    pub nodes: u64,
}

/// `x ~ y` iff no maximal subgroup contains both.
pub fn generating_graph(g: &SmallGroup, maximal: &[Subgroup]) -> Vec<FixedBitSet> {
    let n = g.order();
    let mut inside = vec![FixedBitSet::with_capacity(maximal.len()); n];
    for (i, s) in maximal.iter().enumerate() {
        for e in s.elements.ones() {
            inside[e].insert(i);
        }
    }
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for x in 0..n {
        for y in x + 1..n {
            if inside[x].is_disjoint(&inside[y]) {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
    }
    adj
}

struct Search<'a> {
    adj: &'a [FixedBitSet],
    best: Vec<usize>,
    nodes: u64,
    stop: &'a dyn Fn() -> bool,
}

impl Search<'_> {
    // Greedy colouring; vertices come back in non-decreasing colour.
    fn colour(&self, p: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut left = p.clone();
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut k = 0;
        while !left.is_clear() {
            k += 1;
            let mut q = left.clone();
            while let Some(v) = q.minimum() {
                q.set(v, false);
                q.difference_with(&self.adj[v]);
                left.set(v, false);
                order.push(v);
                colours.push(k);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: FixedBitSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && (self.stop)() {
            return Err(Error::Interrupted);
        }
        let (order, colours) = self.colour(&p);
        for i in (0..order.len()).rev() {
            if r.len() + colours[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            r.push(v);
            let mut next = p.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, next)?;
            }
            r.pop();
            p.set(v, false);
        }
        Ok(())
    }
}

/// Largest clique of `adj`. With `classes` given, they must be orbits of
/// graph automorphisms; only one root per orbit is then expanded.
pub fn max_clique(adj: &[FixedBitSet], classes: Option<&[Vec<usize>]>, stop: &dyn Fn() -> bool) -> Result<CliqueResult> {
    let n = adj.len();
    let mut search = Search { adj, best: Vec::new(), nodes: 0, stop };
    if n > 0 {
        search.best.push(0);
    }
    match classes {
        None => {
            let mut all = FixedBitSet::with_capacity(n);
            all.insert_range(..);
            search.expand(&mut Vec::new(), all)?;
        }
        Some(classes) => {
            let mut alive = FixedBitSet::with_capacity(n);
            alive.insert_range(..);
            for class in classes {
                let v = class[0];
                let mut p = adj[v].clone();
                p.intersect_with(&alive);
                if 1 + p.count_ones(..) > search.best.len() {
                    let mut r = vec![v];
                    if p.is_clear() {
                        search.best = r;
                    } else {
                        search.expand(&mut r, p)?;
                    }
                }
                for &u in class {
                    alive.set(u, false);
                }
            }
        }
    }
    let mut clique = search.best;
    clique.sort_unstable();
    Ok(CliqueResult { value: clique.len(), clique, nodes: search.nodes })
}

/// The largest number of elements that pairwise generate the group.
pub fn omega_exact(g: &SmallGroup, cap: usize, stop: &dyn Fn() -> bool) -> Result<CliqueResult> {
    if g.order() > cap {
        return Err(Error::CapExceeded { size: g.order() as u128, cap: cap as u128 });
    }
    let lat = subgroup_lattice(g, cap, stop)?;
    omega_from_lattice(g, &lat, stop)
}

/// As [`omega_exact`], reusing a lattice computed (or loaded) earlier.
pub fn omega_from_lattice(g: &SmallGroup, lat: &Lattice, stop: &dyn Fn() -> bool) -> Result<CliqueResult> {
    let maximal = maximal_from_lattice(g, lat);
    let adj = generating_graph(g, &maximal);
    if adj.iter().all(|a| a.is_clear()) {
        return Err(Error::NotTwoGenerated);
    }
    let mut classes = g.conjugacy_classes();
    classes.sort_by_key(|c| core::cmp::Reverse(adj[c[0]].count_ones(..)));
    let r = max_clique(&adj, Some(&classes), stop)?;
    for (i, &x) in r.clique.iter().enumerate() {
        for &y in &r.clique[i + 1..] {
            if !g.generation_test(x, y) {
                return Err(Error::InvalidParameters(alloc::string::String::from("clique failed re-verification")));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::small::maximal_subgroups;

    fn never() -> bool {
        false
    }

    // Plain branch and bound with the |R| + |P| bound.
    fn naive_clique(adj: &[FixedBitSet]) -> usize {
        fn go(adj: &[FixedBitSet], size: usize, mut p: Vec<usize>, best: &mut usize) {
            if size > *best {
                *best = size;
            }
            while let Some(v) = p.pop() {
                if size + 1 + p.len() <= *best {
                    return;
                }
                let next: Vec<usize> = p.iter().copied().filter(|&u| adj[v].contains(u)).collect();
                go(adj, size + 1, next, best);
            }
        }
        let mut best = 0;
        go(adj, 0, (0..adj.len()).collect(), &mut best);
        best
    }

    #[test]
    fn graph_matches_closures() {
        let g = SmallGroup::symmetric(4).unwrap();
        let max = maximal_subgroups(&g, 1000, &never).unwrap();
        let adj = generating_graph(&g, &max);
        for x in 0..g.order() {
            for y in 0..g.order() {
                if x != y {
                    assert_eq!(adj[x].contains(y), g.generation_test(x, y));
                }
            }
        }
    }

    #[test]
    fn a5_against_naive() {
        let g = SmallGroup::alternating(5).unwrap();
        let max = maximal_subgroups(&g, 1000, &never).unwrap();
        let adj = generating_graph(&g, &max);
        let r = omega_exact(&g, 1000, &never).unwrap();
        assert_eq!(r.value, naive_clique(&adj));
        assert_eq!(max_clique(&adj, None, &never).unwrap().value, r.value);
    }

    #[test]
    fn small_values() {
        for name in ["S3", "S4", "A4", "D5", "C2^2"] {
            let g = SmallGroup::by_name(name, 1000).unwrap();
            let max = maximal_subgroups(&g, 1000, &never).unwrap();
            let adj = generating_graph(&g, &max);
            assert_eq!(omega_exact(&g, 1000, &never).unwrap().value, naive_clique(&adj), "{}", name);
        }
        let s3 = SmallGroup::symmetric(3).unwrap();
        assert_eq!(omega_exact(&s3, 1000, &never).unwrap().value, 4);
    }

    #[test]
    fn not_two_generated() {
        let g = SmallGroup::elementary_abelian(3).unwrap();
        assert_eq!(omega_exact(&g, 1000, &never).unwrap_err(), Error::NotTwoGenerated);
    }
}
