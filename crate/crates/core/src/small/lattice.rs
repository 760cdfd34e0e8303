use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::SmallGroup;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: FixedBitSet,
    pub gens: Vec<usize>,
    pub order: usize,
}

impl Subgroup {
    pub fn new(elements: FixedBitSet, gens: Vec<usize>) -> Self {
        let order = elements.count_ones(..);
        Subgroup { elements, gens, order }
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.contains(a)
    }
}

/// Every subgroup, grouped into conjugacy classes.
#[derive(Clone, Debug)]
pub struct Lattice {
    /// Sorted by order; the whole group comes last.
    pub subgroups: Vec<Subgroup>,
    pub classes: Vec<Vec<usize>>,
}

impl Lattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

fn conjugate_set(g: &SmallGroup, set: &FixedBitSet, by: usize) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(g.order());
    for a in set.ones() {
        out.insert(g.conj(a, by));
    }
    out
}

fn check_cap(g: &SmallGroup, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::CapExceeded { size: g.order() as u128, cap: cap as u128 });
    }
    Ok(())
}

/// Conjugacy classes of subgroups are built up by joining class
/// representatives with cyclic subgroups until nothing new appears.
pub fn subgroup_lattice(g: &SmallGroup, cap: usize, stop: &dyn Fn() -> bool) -> Result<Lattice> {
    check_cap(g, cap)?;
    let n = g.order();
    let half = n / 2;

    let mut cyclic: BTreeMap<FixedBitSet, usize> = BTreeMap::new();
    for a in 0..n {
        let c = g.closure(&[a], n).expect("cyclic");
        cyclic.entry(c).or_insert(a);
    }
    let cyclic: Vec<(FixedBitSet, usize)> = cyclic.into_iter().collect();

    let mut known: BTreeMap<FixedBitSet, usize> = BTreeMap::new();
    let mut subgroups: Vec<Subgroup> = Vec::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();

    let add_class = |h: Subgroup, known: &mut BTreeMap<FixedBitSet, usize>, subgroups: &mut Vec<Subgroup>, classes: &mut Vec<Vec<usize>>| -> bool {
        if known.contains_key(&h.elements) {
            return false;
        }
        let id = classes.len();
        let mut members = vec![subgroups.len()];
        known.insert(h.elements.clone(), id);
        subgroups.push(h);
        let mut at = 0;
        while at < members.len() {
            let cur = members[at];
            for &s in g.generators() {
                let e = conjugate_set(g, &subgroups[cur].elements, s);
                if !known.contains_key(&e) {
                    known.insert(e.clone(), id);
                    let gens = subgroups[cur].gens.iter().map(|&x| g.conj(x, s)).collect();
                    members.push(subgroups.len());
                    subgroups.push(Subgroup::new(e, gens));
                }
            }
            at += 1;
        }
        classes.push(members);
        true
    };

    let mut trivial = FixedBitSet::with_capacity(n);
    trivial.insert(0);
    add_class(Subgroup::new(trivial, Vec::new()), &mut known, &mut subgroups, &mut classes);

    let mut next = 0;
    while next < classes.len() {
        let rep = subgroups[classes[next][0]].clone();
        next += 1;
        for (c, a) in &cyclic {
            if stop() {
                return Err(Error::Interrupted);
            }
            if c.is_subset(&rep.elements) {
                continue;
            }
            let mut gens = rep.gens.clone();
            gens.push(*a);
            if let Some(j) = g.closure(&gens, half) {
                if j.count_ones(..) < n {
                    add_class(Subgroup::new(j, gens), &mut known, &mut subgroups, &mut classes);
                }
            }
        }
    }

    let mut whole = FixedBitSet::with_capacity(n);
    whole.insert_range(..);
    add_class(Subgroup::new(whole, g.generators().to_vec()), &mut known, &mut subgroups, &mut classes);

    let mut order: Vec<usize> = (0..subgroups.len()).collect();
    order.sort_by(|&a, &b| subgroups[a].order.cmp(&subgroups[b].order).then_with(|| subgroups[a].elements.cmp(&subgroups[b].elements)));
    let mut pos = vec![0; subgroups.len()];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let sorted: Vec<Subgroup> = order.iter().map(|&i| subgroups[i].clone()).collect();
    let mut classes: Vec<Vec<usize>> = classes
        .into_iter()
        .map(|c| {
            let mut v: Vec<usize> = c.into_iter().map(|i| pos[i]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    classes.sort_by_key(|c| c[0]);
    Ok(Lattice { subgroups: sorted, classes })
}

/// Maximal subgroups, taken from the lattice.
pub fn maximal_subgroups(g: &SmallGroup, cap: usize, stop: &dyn Fn() -> bool) -> Result<Vec<Subgroup>> {
    let lat = subgroup_lattice(g, cap, stop)?;
    Ok(maximal_from_lattice(g, &lat))
}

/// Maximal subgroups read off a complete lattice.
pub fn maximal_from_lattice(g: &SmallGroup, lat: &Lattice) -> Vec<Subgroup> {
    let n = g.order();
    let proper: Vec<&Subgroup> = lat.subgroups.iter().filter(|s| s.order < n).collect();
    let mut out = Vec::new();
    for class in &lat.classes {
        let rep = &lat.subgroups[class[0]];
        if rep.order == n {
            continue;
        }
        let covered = proper.iter().any(|k| k.order > rep.order && rep.elements.is_subset(&k.elements));
        if !covered {
            out.extend(class.iter().map(|&i| lat.subgroups[i].clone()));
        }
    }
    out
}

/// Groups maximal subgroups into conjugacy classes, as index lists.
pub fn maximal_classes(g: &SmallGroup, maximal: &[Subgroup]) -> Vec<Vec<usize>> {
    let index: BTreeMap<&FixedBitSet, usize> = maximal.iter().enumerate().map(|(i, s)| (&s.elements, i)).collect();
    let mut seen = vec![false; maximal.len()];
    let mut out = Vec::new();
    for start in 0..maximal.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut class = vec![start];
        let mut at = 0;
        while at < class.len() {
            for &s in g.generators() {
                let e = conjugate_set(g, &maximal[class[at]].elements, s);
                if let Some(&j) = index.get(&e) {
                    if !seen[j] {
                        seen[j] = true;
                        class.push(j);
                    }
                }
            }
            at += 1;
        }
        class.sort_unstable();
        out.push(class);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn never() -> bool {
        false
    }

    // Every subgroup generated by at most two elements.
    fn two_generated_subgroups(g: &SmallGroup) -> BTreeSet<FixedBitSet> {
        let n = g.order();
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in a..n {
                out.insert(g.closure(&[a, b], n).unwrap());
            }
        }
        out
    }

    #[test]
    fn lattice_sizes() {
        for (name, total, classes) in [("S3", 6, 4), ("A4", 10, 5), ("S4", 30, 11), ("A5", 59, 9), ("S5", 156, 19), ("D4", 10, 8), ("C2^3", 16, 16)] {
            let g = SmallGroup::by_name(name, 1000).unwrap();
            let lat = subgroup_lattice(&g, 1000, &never).unwrap();
            assert_eq!(lat.len(), total, "{}", name);
            assert_eq!(lat.class_count(), classes, "{}", name);
            for s in &lat.subgroups {
                assert!(g.is_subgroup(&s.elements));
                assert_eq!(g.closure(&s.gens, n_of(&g)).unwrap(), s.elements);
            }
        }
    }

    fn n_of(g: &SmallGroup) -> usize {
        g.order()
    }

    #[test]
    fn agrees_with_pair_closures() {
        // All subgroups of these groups are two-generated.
        for name in ["S3", "A4", "S4", "A5", "D6"] {
            let g = SmallGroup::by_name(name, 1000).unwrap();
            let lat = subgroup_lattice(&g, 1000, &never).unwrap();
            let mine: BTreeSet<FixedBitSet> = lat.subgroups.iter().map(|s| s.elements.clone()).collect();
            assert_eq!(mine, two_generated_subgroups(&g), "{}", name);
        }
    }

    #[test]
    fn maximal_of_s4() {
        let g = SmallGroup::symmetric(4).unwrap();
        let max = maximal_subgroups(&g, 1000, &never).unwrap();
        let mut orders: Vec<usize> = max.iter().map(|s| s.order).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![6, 6, 6, 6, 8, 8, 8, 12]);
        assert_eq!(maximal_classes(&g, &max).len(), 3);
        for s in &max {
            for a in 0..g.order() {
                if !s.contains(a) {
                    let mut gens = s.gens.clone();
                    gens.push(a);
                    assert_eq!(g.closure(&gens, 24).unwrap().count_ones(..), 24);
                }
            }
        }
    }

    #[test]
    fn cap_and_interrupt() {
        let g = SmallGroup::symmetric(5).unwrap();
        assert!(matches!(subgroup_lattice(&g, 100, &never), Err(Error::CapExceeded { .. })));
        assert_eq!(subgroup_lattice(&g, 1000, &|| true).unwrap_err(), Error::Interrupted);
    }
}
