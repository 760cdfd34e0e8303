use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wreathcov_core::covering::{count_pi_in_normalizer, covering_classes, sigma_formula, witness_member};
use wreathcov_core::interval::IntervalRational;
use wreathcov_core::lll::clique_family_stats;
use wreathcov_core::pi::{base_point, conjugator_to_base};
use wreathcov_core::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn params() -> impl Strategy<Value = GroupParams> {
    prop_oneof![Just((6, 2)), Just((12, 2)), Just((12, 3)), Just((18, 2)), Just((30, 2)), Just((30, 3)), Just((30, 4))]
        .prop_map(|(n, m)| GroupParams::new(n, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_group_axioms(n in 1usize..12, seed: u64) {
        let mut r = rng(seed);
        let (a, b, c) = (Permutation::random(n, &mut r), Permutation::random(n, &mut r), Permutation::random(n, &mut r));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a * &a.inverse()).is_identity());
        prop_assert_eq!((&a * &b).parity(), a.parity().combine(b.parity()));
        prop_assert_eq!(Permutation::unrank(n, a.rank()), a);
    }

    #[test]
    fn wreath_multiplication(p in params(), seed: u64) {
        let mut r = rng(seed);
        let g = WreathElement::random(p, &mut r);
        let h = WreathElement::random(p, &mut r);
        let k = WreathElement::random(p, &mut r);
        prop_assert_eq!(g.mul(&h).unwrap().mul(&k).unwrap(), g.mul(&h.mul(&k).unwrap()).unwrap());
        prop_assert!(g.mul(&g.inverse()).unwrap().is_identity());
        prop_assert_eq!(g.mul(&h).unwrap().to_ambient(), &g.to_ambient() * &h.to_ambient());
        let o: u64 = g.order().try_into().unwrap();
        prop_assert!(g.pow(o).is_identity());
    }

    #[test]
    fn socle_conjugation(p in params(), seed: u64) {
        let mut r = rng(seed);
        let g = WreathElement::random(p, &mut r);
        let h = WreathElement::random_socle(p, &mut r);
        let c = h.conj(&g).unwrap();
        prop_assert_eq!(c.xs(), &g.conj_socle(h.xs())[..]);
    }

    #[test]
    fn pi_classes_closed_and_disjoint(p in params(), pick: usize, seed: u64) {
        let mut r = rng(seed);
        let j = PiDescriptor::j_level(&p).unwrap();
        let shifts = PiDescriptor::shift_level(&p).unwrap();
        let all: Vec<&PiDescriptor> = j.iter().chain(shifts.iter()).collect();
        let d = all[pick % all.len()];
        let x = d.sample(p, &mut r);
        prop_assert!(d.contains(&x));
        let g = WreathElement::random(p, &mut r);
        let y = x.conj(&g).unwrap();
        let target = match d {
            PiDescriptor::Pi0r { r, shift: Some(t), d_classes } => {
                PiDescriptor::Pi0r { r: *r, shift: Some((t + r - g.k() % r) % r), d_classes: d_classes.clone() }
            }
            _ => d.clone(),
        };
        prop_assert!(target.contains(&y), "{} not closed", d.name());
        prop_assert_eq!(j.iter().filter(|e| e.contains(&x)).count(), 1, "{}", d.name());
        let hits = shifts.iter().filter(|e| e.contains(&x)).count();
        match d {
            PiDescriptor::Pi0r { r, .. } if p.m() % r == 0 => prop_assert_eq!(hits, 1, "{}", d.name()),
            _ => prop_assert_eq!(hits, 0, "{}", d.name()),
        }
    }

    #[test]
    fn n_cycle_class_conjugates_to_base(p in params(), seed: u64) {
        let mut r = rng(seed);
        let d = PiDescriptor::pi(p.n(), -1).unwrap();
        let x = d.sample(p, &mut r);
        let y = conjugator_to_base(&x).unwrap();
        prop_assert_eq!(x.conj(&y).unwrap(), base_point(p).unwrap());
    }

    #[test]
    fn witness_contains_element(p in params(), seed: u64) {
        let mut r = rng(seed);
        let g = WreathElement::random(p, &mut r);
        if let Some(w) = witness_member(&g).unwrap() {
            prop_assert!(w.subgroup.contains(&g).unwrap(), "{} not in {}", g, w.subgroup);
        } else {
            prop_assert!(p.n() < 30);
        }
    }

    #[test]
    fn interval_ops_enclose(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000, bits in 8u32..64) {
        let x = BigRational::new(a.into(), b.into());
        let y = BigRational::new(c.into(), d.into());
        let ix = IntervalRational::exact(x.clone()).round(bits);
        let iy = IntervalRational::exact(y.clone()).round(bits);
        prop_assert!(ix.contains(&x));
        prop_assert!(ix.add(&iy).contains(&(&x + &y)));
        prop_assert!(ix.sub(&iy).contains(&(&x - &y)));
        prop_assert!(ix.mul(&iy).contains(&(&x * &y)));
        if c != 0 && !iy.contains(&BigRational::from_integer(0.into())) {
            prop_assert!(ix.div(&iy).contains(&(&x / &y)));
        }
        prop_assert!(ix.mul(&ix).round(bits).contains(&(&x * &x)));
    }

    #[test]
    fn clique_family_identities(half in 2usize..100, m in 1usize..6) {
        let n = 2 * half;
        let s = clique_family_stats(n, m).unwrap();
        prop_assert_eq!(s.d.clone(), (&s.l - 2u32) * 2u32);
        prop_assert!(s.l < BigUint::one() << (m * (n - 1)));
        prop_assert!(s.d <= BigUint::one() << (m * n));
    }

    #[test]
    fn covering_design_totals(sixth in 1usize..20, m in 1usize..7) {
        let n = 6 * sixth;
        let d = covering_classes(n, m).unwrap();
        let sum: BigUint = d.classes.iter().map(|c| c.1.clone()).sum();
        prop_assert_eq!(&sum, &d.total);
        prop_assert_eq!(d.total, sigma_formula(n, m).unwrap());
    }
}

// |C(H)| against the counting formula for the bipartition normalizer.
#[test]
fn c_h_matches_counting_formula() {
    for n in (6..=60).step_by(6) {
        for m in 2..=4 {
            let p = GroupParams::new(n, m).unwrap();
            let bip = StabilizerDescriptor::canonical_bipartition(n).unwrap();
            let pi = PiDescriptor::pi(n, -1).unwrap();
            let c = count_pi_in_normalizer(&bip, &pi, &p).unwrap();
            assert_eq!(c, clique_family_stats(n, m).unwrap().c_h, "n = {}, m = {}", n, m);
        }
    }
}
