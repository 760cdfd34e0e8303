//! Subgroup lattices persisted under `WREATHCOV_CACHE_DIR`.

use std::fs;
use std::path::PathBuf;

use anyhow::Result;
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use wreathcov_core::small::{Lattice, SmallGroup, Subgroup};

use crate::report::write_atomic;

pub const ENV: &str = "WREATHCOV_CACHE_DIR";
const FORMAT: u32 = 1;

/// Order, sorted element-order histogram and generator ranks.
pub fn fingerprint(g: &SmallGroup) -> String {
    let mut h = Sha256::new();
    h.update(format!("v{};deg {};order {};", FORMAT, g.degree(), g.order()));
    for (o, c) in g.order_histogram() {
        h.update(format!("{}x{},", o, c));
    }
    h.update(";gens ");
    for &i in g.generators() {
        h.update(format!("{},", g.element(i).rank()));
    }
    h.finalize().iter().map(|b| format!("{:02x}", b)).collect()
}

#[derive(Serialize, Deserialize)]
struct Stored {
    fingerprint: String,
    order: usize,
    subgroups: Vec<(Vec<usize>, Vec<usize>)>,
    classes: Vec<Vec<usize>>,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn from_env() -> Option<Cache> {
        std::env::var_os(ENV).filter(|v| !v.is_empty()).map(|d| Cache { dir: PathBuf::from(d) })
    }

    fn path(&self, fp: &str) -> PathBuf {
        self.dir.join(format!("lattice-{}.json", &fp[..32]))
    }

    /// A stored lattice, if present and consistent with `g`.
    pub fn load(&self, g: &SmallGroup) -> Option<Lattice> {
        let fp = fingerprint(g);
        let text = fs::read_to_string(self.path(&fp)).ok()?;
        let s: Stored = serde_json::from_str(&text).ok()?;
        if s.fingerprint != fp || s.order != g.order() || s.subgroups.is_empty() {
            return None;
        }
        let mut subgroups = Vec::with_capacity(s.subgroups.len());
        for (elements, gens) in s.subgroups {
            let mut set = FixedBitSet::with_capacity(g.order());
            for e in elements {
                if e >= g.order() {
                    return None;
                }
                set.insert(e);
            }
            if !g.is_subgroup(&set) {
                return None;
            }
            subgroups.push(Subgroup::new(set, gens));
        }
        if subgroups.last()?.order != g.order() || s.classes.iter().flatten().any(|&i| i >= subgroups.len()) {
            return None;
        }
        Some(Lattice { subgroups, classes: s.classes })
    }

    pub fn store(&self, g: &SmallGroup, lat: &Lattice) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let fp = fingerprint(g);
        let s = Stored {
            fingerprint: fp.clone(),
            order: g.order(),
            subgroups: lat.subgroups.iter().map(|s| (s.elements.ones().collect(), s.gens.clone())).collect(),
            classes: lat.classes.clone(),
        };
        write_atomic(&self.path(&fp), serde_json::to_string(&s)?.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wreathcov_core::small::{subgroup_lattice, LATTICE_CAP};

    #[test]
    fn fingerprints_separate_groups() {
        let a = fingerprint(&SmallGroup::symmetric(4).unwrap());
        assert_eq!(a, fingerprint(&SmallGroup::symmetric(4).unwrap()));
        assert_ne!(a, fingerprint(&SmallGroup::alternating(4).unwrap()));
        assert_ne!(a, fingerprint(&SmallGroup::symmetric(3).unwrap()));
    }

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache { dir: dir.path().to_path_buf() };
        let g = SmallGroup::symmetric(4).unwrap();
        assert!(cache.load(&g).is_none());
        let lat = subgroup_lattice(&g, LATTICE_CAP, &|| false).unwrap();
        cache.store(&g, &lat).unwrap();
        let back = cache.load(&g).unwrap();
        assert_eq!(back.len(), 30);
        assert_eq!(back.classes, lat.classes);
        fs::write(cache.path(&fingerprint(&g)), "{").unwrap();
        assert!(cache.load(&g).is_none());
    }
}
