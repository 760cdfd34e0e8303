//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines reach the terminal. The
//! process fails when a criterion fails in a way not listed in `UNATTAINABLE`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wreathcov_core::arith::{factorial, prime_divisors};
use wreathcov_core::covering::{
    count_pi_in_normalizer, covering_classes, d_value_diagonal, d_value_product, diagonal_normalizer_enumeration,
    intersection_counts_enumerated, lemma_ab_check, sigma_formula, uniqueness_check, MaximalClassDescriptor,
};
use wreathcov_core::lll::{conjugate_count_check, ratio_scan, threshold_scan};
use wreathcov_core::pi::{closure_and_disjointness_check, closure_and_disjointness_exhaustive, single_class_exhaustive};
use wreathcov_core::small::{omega_exact, sigma_exact, SmallGroup, LATTICE_CAP};
use wreathcov_core::subgroups::{class_count_in_wreath2, class_count_in_young};
use wreathcov_core::*;

/// Sub-checks that cannot hold as stated, with the criterion they belong to.
const UNATTAINABLE: &[(u32, &str)] = &[(6, "diagonal normalizer order at degree 7")];

struct Check {
    name: String,
    ok: bool,
    detail: String,
}

fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), ok, detail: detail.into() }
}

fn timed(name: &str, limit: Duration, start: Instant) -> Check {
    let t = start.elapsed();
    check(format!("{} time", name), t <= limit, format!("{:.2?} (limit {:?})", t, limit))
}

fn never() -> bool {
    false
}

fn criterion1() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, expected, limit) in [("S3", 4, 1), ("S4", 4, 1), ("S5", 16, 60), ("S6", 13, 900)] {
        let start = Instant::now();
        let g = SmallGroup::by_name(name, LATTICE_CAP).unwrap();
        let r = sigma_exact(&g, LATTICE_CAP, &never).unwrap();
        out.push(timed(&format!("sigma({})", name), Duration::from_secs(limit), start));
        out.push(check(format!("sigma({})", name), r.value == expected, format!("{} (expected {})", r.value, expected)));
        // Element-by-element re-verification of the witness.
        let mut covered = 0;
        for a in 0..g.order() {
            if r.witness.iter().any(|s| s.contains(a)) {
                covered += 1;
            }
        }
        let proper = r.witness.iter().all(|s| s.order < g.order() && g.is_subgroup(&s.elements));
        out.push(check(
            format!("witness({})", name),
            covered == g.order() && proper && r.witness.len() == expected,
            format!("{} subgroups cover {}/{} elements", r.witness.len(), covered, g.order()),
        ));
    }
    out
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, j| acc * (n - j) / (j + 1))
}

fn criterion2() -> Vec<Check> {
    let mut out = Vec::new();
    // Independent summation: α(2) + ½C(30,15) + Σ_{i<10} C(30,i).
    let oracle = 1 + binom(30, 15) / 2 + (1..10).map(|i| binom(30, i)).sum::<u128>();
    let s = sigma_formula(30, 1).unwrap();
    out.push(check("sigma_formula(30,1)", s == BigUint::from(100_522_847u64) && s == BigUint::from(oracle), format!("{} (oracle {})", s, oracle)));
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in (30..=90).step_by(6) {
        for m in 1..=6 {
            let d = covering_classes(n, m).unwrap();
            let sum: BigUint = d.classes.iter().map(|c| c.1.clone()).sum();
            if d.total != sigma_formula(n, m).unwrap() || sum != d.total {
                bad.push((n, m));
            }
        }
    }
    out.push(check("covering_classes total", bad.is_empty(), format!("77 grid points, mismatches {:?}", bad)));
    out.push(timed("grid", Duration::from_secs(1), start));
    out
}

fn criterion3() -> Vec<Check> {
    let mut out = Vec::new();
    let p = GroupParams::new(6, 2).unwrap();
    let start = Instant::now();
    let bases = vec![
        StabilizerDescriptor::canonical_kset(6, 1).unwrap(),
        StabilizerDescriptor::canonical_kset(6, 2).unwrap(),
        StabilizerDescriptor::canonical_bipartition(6).unwrap(),
        StabilizerDescriptor::canonical_dblocks(6, 3).unwrap(),
    ];
    let mut pis = PiDescriptor::j_level(&p).unwrap();
    pis.extend(PiDescriptor::shift_level(&p).unwrap());
    let table = intersection_counts_enumerated(p, &bases, &pis, 1 << 30).unwrap();
    let mut mismatches = 0;
    let mut pairs = 0;
    let mut bip_pi = None;
    for (bi, b) in bases.iter().enumerate() {
        for (pi, d) in pis.iter().enumerate() {
            pairs += 1;
            let formula = count_pi_in_normalizer(b, d, &p).unwrap();
            if formula != BigUint::from(table.counts[bi][pi]) {
                mismatches += 1;
            }
            if bi == 2 && matches!(d, PiDescriptor::Pi { i: -1, .. }) {
                bip_pi = Some(table.counts[bi][pi]);
            }
        }
    }
    out.push(check("|N_G(M²) ∩ Π(-1)|", bip_pi == Some(432), format!("{:?}", bip_pi)));
    out.push(check("formula vs enumeration", mismatches == 0, format!("{} pairs, {} mismatches", pairs, mismatches)));
    let sizes = closure_and_disjointness_exhaustive(p, 1 << 30).unwrap();
    let size_ok = sizes.sizes.iter().all(|(_, f, c)| c.as_ref() == Some(f));
    let find = |name: &str| sizes.sizes.iter().find(|s| s.0 == name).and_then(|s| s.2.clone());
    out.push(check("Π sizes by scan", size_ok, format!("{} classes", sizes.sizes.len())));
    out.push(check("|Π(-1)|", find("Pi(-1)") == Some(BigUint::from(43_200u32)), format!("{:?}", find("Pi(-1)"))));
    let pi02 = sizes.sizes.iter().find(|s| s.0.starts_with("Pi0r(r=2")).and_then(|s| s.2.clone());
    out.push(check("|Π(0,2)|", pi02 == Some(BigUint::from(21_600u32)), format!("{:?}", pi02)));
    out.push(timed("counting", Duration::from_secs(300), start));
    out
}

fn criterion4() -> Vec<Check> {
    let mut out = Vec::new();
    let start = Instant::now();
    let ex = closure_and_disjointness_exhaustive(GroupParams::new(6, 2).unwrap(), 1 << 30).unwrap();
    out.push(check("exhaustive (6,2)", ex.findings.is_empty(), format!("{} conjugations, {} findings", ex.conjugations_checked, ex.findings.len())));
    for m in [2, 3] {
        let r = closure_and_disjointness_check(GroupParams::new(30, m).unwrap(), 10_000, 20_240_601).unwrap();
        out.push(check(
            format!("sampled (30,{})", m),
            r.findings.is_empty() && r.trials == 10_000,
            format!("{} trials, {} conjugations, {} findings", r.trials, r.conjugations_checked, r.findings.len()),
        ));
    }
    out.push(timed("closure", Duration::from_secs(120), start));
    out
}

fn criterion5() -> Vec<Check> {
    let mut out = Vec::new();
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut entries = 0;
    for n in (30..=120).step_by(6) {
        for m in [2, 3] {
            let r = uniqueness_check(n, m).unwrap();
            entries += r.entries.len();
            if !r.findings.is_empty() || !r.entries.iter().all(|e| e.ok && e.members.len() == 1) {
                bad.push((n, m));
            }
        }
    }
    out.push(check("n = 30..120", bad.is_empty(), format!("{} class checks, failures {:?}", entries, bad)));
    out.push(timed("uniqueness", Duration::from_secs(60), start));
    let six = uniqueness_check(6, 2).unwrap();
    let detail = six.findings.first().map(|f| f.to_string()).unwrap_or_default();
    out.push(check("n = 6 finding reproduced", !six.findings.is_empty(), detail));
    out
}

fn criterion6() -> Vec<Check> {
    let mut out = Vec::new();
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut reports = 0;
    for n in (30..=60).step_by(6) {
        for m in 2..=5 {
            let p = GroupParams::new(n, m).unwrap();
            for base in StabilizerDescriptor::competitors(n) {
                let r = d_value_product(&base, &p, interval::DEFAULT_PRECISION).unwrap();
                reports += 1;
                if !(r.verdict && r.margin.lo() > &BigRational::zero()) {
                    bad.push(format!("{}@({},{})", base, n, m));
                }
            }
            for t in prime_divisors(m as u64) {
                let r = d_value_diagonal(t as usize, &p).unwrap();
                reports += 1;
                if !(r.verdict && r.margin.lo() > &BigRational::zero()) {
                    bad.push(format!("diag t={}@({},{})", t, n, m));
                }
            }
        }
    }
    out.push(check("d(H) < 1", bad.is_empty(), format!("{} reports, failures {:?}", reports, bad)));
    out.push(timed("d-values", Duration::from_secs(60), start));
    let diag = diagonal_normalizer_enumeration(7, &Permutation::identity(7), 1 << 30).unwrap();
    out.push(check(
        "diagonal normalizer order at degree 7",
        diag.order == 10_080,
        format!("enumerated {} (stated 10080; formula {})", diag.order, diag.supplement_order),
    ));
    out.push(check(
        "diagonal m = 2 intersections",
        diag.odd_class_hits == 0 && diag.pi02_hits == 0,
        format!("{} + {} marked elements", diag.odd_class_hits, diag.pi02_hits),
    ));
    out
}

fn criterion7() -> Vec<Check> {
    let start = Instant::now();
    let r = lemma_ab_check(300);
    let even_n = (4..=300).step_by(2).count() as u64;
    vec![
        check("(n/d)!^d d! ≤ 2(n/2)!²", r.findings.is_empty(), format!("{} pairs, {} findings", r.checked, r.findings.len())),
        check("equality exactly at d = 2", r.equalities == even_n, format!("{} equalities over {} even n", r.equalities, even_n)),
        timed("lemma", Duration::from_secs(10), start),
    ]
}

fn criterion8() -> Vec<Check> {
    let mut out = Vec::new();
    let start = Instant::now();
    for m in [2, 3] {
        let s = threshold_scan(m, 8, 240, interval::DEFAULT_PRECISION).unwrap();
        out.push(check(format!("n0 at m = {}", m), s.n0.is_some(), format!("n0 = {:?}, first certified n = {:?}", s.n0, s.first_true)));
        out.push(check(format!("doubled precision m = {}", m), s.stable, format!("{} verdicts", s.rows.len())));
        out.push(check(format!("l and d identities m = {}", m), s.stats_hold, "l < 2^(m(n-1)), d = 2(l-2)"));
    }
    let r = ratio_scan(2, 6, 240, BigRational::new(99.into(), 100.into())).unwrap();
    let at = r.n1.and_then(|n| r.rows.iter().find(|x| x.n == n));
    out.push(check(
        "ratio > 0.99",
        r.n1.is_some(),
        format!("n1 = {:?}, ratio {:.6}", r.n1, at.map(|x| x.ratio.to_f64().unwrap_or(0.0)).unwrap_or(0.0)),
    ));
    out.push(check("ratio increasing on n ≡ 0 mod 12", r.monotone_on_grid, format!("{} rows", r.rows.len())));
    out.push(timed("lll", Duration::from_secs(60), start));
    out
}

fn criterion9() -> Vec<Check> {
    let mut out = Vec::new();
    for name in ["S3", "S4", "S5", "S6", "A4", "A5"] {
        let g = SmallGroup::by_name(name, LATTICE_CAP).unwrap();
        let s = sigma_exact(&g, LATTICE_CAP, &never).unwrap().value;
        let w = omega_exact(&g, LATTICE_CAP, &never).unwrap().value;
        out.push(check(format!("ω ≤ σ for {}", name), w <= s, format!("ω = {}, σ = {}", w, s)));
    }
    let g62 = SmallGroup::by_name("G6,2", LATTICE_CAP);
    out.push(check("G(6,2) beyond lattice cap", g62.is_err(), "σ and ω for G(6,2) are out of budget"));

    let mut bad = Vec::new();
    for n in 2..=8 {
        let all: Vec<Permutation> = Permutation::all(n).collect();
        let types = CycleType::all(n);
        for a in 1..n {
            let set: Vec<u32> = (0..a as u32).collect();
            let young = StabilizerDescriptor::kset(n, &set).unwrap();
            let mut total = BigUint::zero();
            for ct in &types {
                let c = class_count_in_young(ct, a, n - a);
                let brute = all.iter().filter(|p| p.cycle_type() == *ct && young.stabilizes(p).unwrap()).count();
                if c != BigUint::from(brute) {
                    bad.push(format!("young {} {}", n, ct));
                }
                total += c;
            }
            if total != factorial(a) * factorial(n - a) {
                bad.push(format!("young sum {} {}", n, a));
            }
        }
        if n % 2 == 0 {
            let block: Vec<u32> = (0..n as u32 / 2).collect();
            let w = StabilizerDescriptor::bipartition(n, &block).unwrap();
            let mut total = BigUint::zero();
            for ct in &types {
                let c = class_count_in_wreath2(ct, n).unwrap();
                let brute = all.iter().filter(|p| p.cycle_type() == *ct && w.stabilizes(p).unwrap()).count();
                if c != BigUint::from(brute) {
                    bad.push(format!("wreath2 {} {}", n, ct));
                }
                total += c;
            }
            if total != factorial(n / 2) * factorial(n / 2) * 2u32 {
                bad.push(format!("wreath2 sum {}", n));
            }
        }
    }
    out.push(check("class counts vs brute force, n ≤ 8", bad.is_empty(), format!("mismatches {:?}", bad)));

    let p = GroupParams::new(6, 2).unwrap();
    let pi = PiDescriptor::pi(6, -1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let samples: Vec<WreathElement> = (0..6).map(|_| pi.sample(p, &mut rng)).collect();
    let mut counts = Vec::new();
    let mut conj_ok = true;
    for base in [
        StabilizerDescriptor::canonical_kset(6, 1).unwrap(),
        StabilizerDescriptor::canonical_kset(6, 2).unwrap(),
        StabilizerDescriptor::canonical_bipartition(6).unwrap(),
        StabilizerDescriptor::canonical_dblocks(6, 3).unwrap(),
    ] {
        let class = MaximalClassDescriptor::product_class(base.clone());
        let per: Vec<u64> = samples.iter().map(|g| conjugate_count_check(p, &class, g, 100_000).unwrap()).collect();
        conj_ok &= per.iter().all(|&c| c <= 12 && c == per[0]);
        counts.push(format!("{}: {}", base, per[0]));
    }
    out.push(check("a(L) ≤ nm at (6,2)", conj_ok, counts.join(", ")));

    let sc = single_class_exhaustive(p, 1 << 30).unwrap();
    out.push(check("Π(-1) single class at (6,2)", sc.passed(), format!("orbit {:?}, class {}", sc.orbit_size, sc.class_size)));
    out
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Vec<Check>); 9] = [
        (1, "exact covering numbers of S3..S6", criterion1),
        (2, "covering number formula", criterion2),
        (3, "counting formulas at (6,2)", criterion3),
        (4, "conjugation closure and disjointness", criterion4),
        (5, "uniqueness condition", criterion5),
        (6, "d(H) < 1 verdicts", criterion6),
        (7, "factorial comparison lemma", criterion7),
        (8, "local lemma certification and ratio", criterion8),
        (9, "property suites", criterion9),
    ];
    let mut unexpected = 0;
    for (id, title, run) in criteria {
        let start = Instant::now();
        let checks = run();
        let failed: Vec<&Check> = checks.iter().filter(|c| !c.ok).collect();
        let verdict = if failed.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {} {}: {} ({:.1?})", id, verdict, title, start.elapsed());
        for c in &checks {
            println!("    [{}] {}: {}", if c.ok { "ok" } else { "FAIL" }, c.name, c.detail);
        }
        for c in failed {
            if UNATTAINABLE.contains(&(id, c.name.as_str())) {
                println!("    known: {} cannot hold as stated", c.name);
            } else {
                unexpected += 1;
            }
        }
    }
    if unexpected > 0 {
        println!("{} unexpected failure(s)", unexpected);
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
