use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigUint;
use num_rational::BigRational;
use wreathcov_core::covering::{
    count_pi_in_normalizer, covering_classes, covering_exhaustive, intersection_counts_enumerated, uniqueness_check,
    verify_minimal_covering,
};
use wreathcov_core::interval::decimal;
use wreathcov_core::lll::{lll_verdict_with_precision, ratio_scan, threshold_scan};
use wreathcov_core::pi::{
    closure_and_disjointness_check, closure_and_disjointness_exhaustive, single_class_check, single_class_exhaustive,
};
use wreathcov_core::report::{Finding, Provenance, Quantity, Summary, ToSummary};
use wreathcov_core::small::{
    omega_from_lattice, sigma_from_lattice, subgroup_lattice, Lattice, SmallGroup, LATTICE_CAP,
};
use wreathcov_core::subgroups::index_set;
use wreathcov_core::{GroupParams, PiDescriptor, StabilizerDescriptor};

use crate::cache::Cache;
use crate::report::{document, emit, log, write_csv};
use crate::{Cli, Command};

/// Largest group scanned element by element.
pub const ENUMERATION_CAP: u128 = 100_000_000;

/// Runs one command; `Ok(false)` means the report carries findings.
pub fn run(cli: &Cli) -> Result<bool> {
    let start = Instant::now();
    let deadline = cli.budget_secs.map(|s| start + Duration::from_secs(s));
    let stop = move || deadline.is_some_and(|d| Instant::now() >= d);
    let (name, summary) = match &cli.command {
        Command::SigmaFormula { n, m } => ("sigma-formula", sigma_formula(*n, *m)?),
        Command::SigmaExact { group, witness } => ("sigma-exact", sigma_exact(group, witness.as_deref(), &stop)?),
        Command::OmegaExact { group, witness } => ("omega-exact", omega_exact(group, witness.as_deref(), &stop)?),
        Command::VerifyCovering { n, m, seed, trials, exhaustive, precision } => {
            ("verify-covering", verify_covering(*n, *m, *seed, *trials, *exhaustive, *precision)?)
        }
        Command::VerifyPi { n, m, seed, trials, exhaustive } => ("verify-pi", verify_pi(*n, *m, *seed, *trials, *exhaustive)?),
        Command::CountIntersections { n, m } => ("count-intersections", count_intersections(*n, *m)?),
        Command::LllCheck { n, m, n_max, precision, csv } => ("lll-check", lll_check(*n, *m, *n_max, *precision, csv.as_deref())?),
        Command::RatioScan { m, n_min, n_max, target, csv } => ("ratio-scan", ratio(*m, *n_min, *n_max, target, csv.as_deref())?),
    };
    let mut config = serde_json::to_value(&cli.command)?;
    config["budget_secs"] = serde_json::json!(cli.budget_secs);
    emit(&document(config, &summary), cli.out.as_deref())?;
    log(name, &summary, start.elapsed().as_secs_f64());
    Ok(summary.passed())
}

fn params(n: usize, m: usize) -> Result<GroupParams> {
    Ok(GroupParams::new(n, m)?)
}

fn need_seed(seed: Option<u64>) -> Result<u64> {
    seed.context("--seed is required for sampled checks")
}

fn sigma_formula(n: usize, m: usize) -> Result<Summary> {
    params(n, m)?;
    Ok(covering_classes(n, m)?.summary())
}

fn lattice(g: &SmallGroup, stop: &dyn Fn() -> bool) -> Result<(Lattice, bool)> {
    let cache = Cache::from_env();
    if let Some(lat) = cache.as_ref().and_then(|c| c.load(g)) {
        return Ok((lat, true));
    }
    let lat = subgroup_lattice(g, LATTICE_CAP, stop)?;
    if let Some(c) = &cache {
        if let Err(e) = c.store(g, &lat) {
            eprintln!("warning: cache not written: {:#}", e);
        }
    }
    Ok((lat, false))
}

fn small_group(name: &str) -> Result<SmallGroup> {
    SmallGroup::by_name(name, LATTICE_CAP).with_context(|| format!("group {} is out of budget for exact search", name))
}

fn lattice_quantities(s: &mut Summary, g: &SmallGroup, lat: &Lattice, cached: bool) {
    s.quantities.push(Quantity::count("order", g.order() as u64, Provenance::Enumeration));
    s.quantities.push(Quantity::count("lattice.subgroups", lat.len() as u64, Provenance::Enumeration));
    s.quantities.push(Quantity::count("lattice.classes", lat.class_count() as u64, Provenance::Enumeration));
    if cached {
        eprintln!("lattice loaded from cache");
    }
}

fn gens_text(g: &SmallGroup, gens: &[usize]) -> String {
    let parts: Vec<String> = gens.iter().map(|&i| g.element(i).to_string()).collect();
    if parts.is_empty() {
        String::from("()")
    } else {
        parts.join(" ")
    }
}

fn write_witness(path: Option<&Path>, lines: &[String]) -> Result<()> {
    if let Some(p) = path {
        let mut text = lines.join("\n");
        text.push('\n');
        fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(())
}

fn sigma_exact(name: &str, witness: Option<&Path>, stop: &dyn Fn() -> bool) -> Result<Summary> {
    let g = small_group(name)?;
    let (lat, cached) = lattice(&g, stop)?;
    let r = sigma_from_lattice(&g, &lat, stop)?;
    let mut s = Summary::default();
    lattice_quantities(&mut s, &g, &lat, cached);
    s.quantities.push(Quantity::count("maximal_subgroups", r.candidates as u64, Provenance::Enumeration));
    s.quantities.push(Quantity::count("sigma", r.value as u64, Provenance::Enumeration));
    s.quantities.push(Quantity::count("search_nodes", r.nodes, Provenance::Enumeration));
    let lines: Vec<String> = r.witness.iter().map(|h| format!("order {} gens {}", h.order, gens_text(&g, &h.gens))).collect();
    for (i, l) in lines.iter().enumerate() {
        s.quantities.push(Quantity::text(format!("witness[{}]", i), l.clone(), Provenance::Enumeration));
    }
    write_witness(witness, &lines)?;
    Ok(s)
}

fn omega_exact(name: &str, witness: Option<&Path>, stop: &dyn Fn() -> bool) -> Result<Summary> {
    let g = small_group(name)?;
    let (lat, cached) = lattice(&g, stop)?;
    let r = omega_from_lattice(&g, &lat, stop)?;
    let mut s = Summary::default();
    lattice_quantities(&mut s, &g, &lat, cached);
    s.quantities.push(Quantity::count("omega", r.value as u64, Provenance::Enumeration));
    s.quantities.push(Quantity::count("search_nodes", r.nodes, Provenance::Enumeration));
    let lines: Vec<String> = r.clique.iter().map(|&x| g.element(x).to_string()).collect();
    for (i, l) in lines.iter().enumerate() {
        s.quantities.push(Quantity::text(format!("clique[{}]", i), l.clone(), Provenance::Enumeration));
    }
    write_witness(witness, &lines)?;
    Ok(s)
}

fn verify_covering(n: usize, m: usize, seed: Option<u64>, trials: u64, exhaustive: bool, bits: u32) -> Result<Summary> {
    if !n.is_multiple_of(6) {
        bail!("verify-covering needs n ≡ 0 mod 6, got n = {}", n);
    }
    let p = params(n, m)?;
    let mut s = Summary::default();
    if exhaustive {
        s.extend("covering", covering_exhaustive(p, ENUMERATION_CAP)?.summary());
        s.extend("uniqueness", uniqueness_check(n, m)?.summary());
    } else {
        let seed = need_seed(seed)?;
        let r = verify_minimal_covering(p, trials, seed, bits)?;
        s = r.summary();
        if !r.certified && s.passed() {
            s.findings.push(Finding::new("minimal_covering", format!("not certified at n = {}, m = {}", n, m), None));
        }
    }
    Ok(s)
}

fn verify_pi(n: usize, m: usize, seed: Option<u64>, trials: u64, exhaustive: bool) -> Result<Summary> {
    let p = params(n, m)?;
    let mut s = Summary::default();
    if exhaustive {
        s.extend("pi", closure_and_disjointness_exhaustive(p, ENUMERATION_CAP)?.summary());
        s.extend("single_class", single_class_exhaustive(p, ENUMERATION_CAP)?.summary());
    } else {
        let seed = need_seed(seed)?;
        s.extend("pi", closure_and_disjointness_check(p, trials, seed)?.summary());
        s.extend("single_class", single_class_check(p, trials, seed)?.summary());
    }
    Ok(s)
}

fn intersection_bases(n: usize) -> Vec<StabilizerDescriptor> {
    let mut out: Vec<StabilizerDescriptor> = Vec::new();
    let mut add = |d: wreathcov_core::Result<StabilizerDescriptor>| {
        if let Ok(d) = d {
            if !out.contains(&d) {
                out.push(d);
            }
        }
    };
    for i in index_set(n) {
        add(StabilizerDescriptor::covering_representative(n, i));
    }
    for k in 1..n / 2 {
        add(StabilizerDescriptor::canonical_kset(n, k));
    }
    add(StabilizerDescriptor::canonical_bipartition(n));
    for d in 2..n {
        if n.is_multiple_of(d) {
            add(StabilizerDescriptor::canonical_dblocks(n, d));
        }
    }
    out
}

fn count_intersections(n: usize, m: usize) -> Result<Summary> {
    let p = params(n, m)?;
    let bases = intersection_bases(n);
    let mut pis = PiDescriptor::j_level(&p)?;
    pis.extend(PiDescriptor::shift_level(&p)?);
    let table = intersection_counts_enumerated(p, &bases, &pis, ENUMERATION_CAP)?;
    let mut s = Summary::default();
    for (bi, b) in bases.iter().enumerate() {
        s.quantities.push(Quantity::count(format!("order[{}]", b), table.orders[bi], Provenance::Enumeration));
        for (pi, d) in pis.iter().enumerate() {
            let key = format!("[{}][{}]", b, d.name());
            let counted = BigUint::from(table.counts[bi][pi]);
            let formula = count_pi_in_normalizer(b, d, &p)?;
            if formula != counted {
                s.findings.push(Finding::new(
                    "intersection",
                    format!("formula {} against enumerated {}", formula, counted),
                    Some(key.clone()),
                ));
            }
            s.quantities.push(Quantity::int(format!("count{}", key), counted, Provenance::Enumeration));
            s.quantities.push(Quantity::int(format!("formula{}", key), formula, Provenance::Formula));
        }
    }
    Ok(s)
}

fn lll_check(n: usize, m: usize, n_max: Option<usize>, bits: u32, csv: Option<&Path>) -> Result<Summary> {
    params(n, m)?;
    if m < 2 {
        bail!("the local lemma check needs m ≥ 2");
    }
    let Some(n_max) = n_max else {
        if csv.is_some() {
            bail!("--csv needs a scan (--n-max)");
        }
        return Ok(lll_verdict_with_precision(n, m, bits)?.summary());
    };
    let scan = threshold_scan(m, n, n_max, bits)?;
    if let Some(path) = csv {
        let rows: Vec<Vec<String>> = scan.rows.iter().map(|&(n, a, b)| vec![n.to_string(), a.to_string(), b.to_string()]).collect();
        write_csv(path, &["n", "verdict", "verdict_double_precision"], &rows)?;
    }
    Ok(scan.summary())
}

fn ratio(m: usize, n_min: usize, n_max: usize, target: &str, csv: Option<&Path>) -> Result<Summary> {
    params(n_min.max(6) + n_min % 2, m)?;
    let target = BigRational::from_str(target).map_err(|e| anyhow!("bad --target {}: {}", target, e))?;
    let scan = ratio_scan(m, n_min, n_max, target)?;
    if let Some(path) = csv {
        let rows: Vec<Vec<String>> = scan
            .rows
            .iter()
            .map(|r| vec![r.n.to_string(), r.ratio.to_string(), decimal(&r.ratio, 12, false), r.certified.to_string()])
            .collect();
        write_csv(path, &["n", "ratio", "ratio_decimal", "certified"], &rows)?;
    }
    Ok(scan.summary())
}
