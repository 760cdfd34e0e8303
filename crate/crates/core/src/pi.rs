//! The marked element sets `Π_i`, `Π_{0,r,σ}` and, for odd `m`, `Π_{0,2}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{is_prime, pow, prime_divisors};
use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation};
use crate::report::{derive_seed, Finding, Provenance, Quantity, Summary, ToSummary};
use crate::subgroups::{b_class, index_set};
use crate::wreath::{all_elements, GroupParams, WreathElement};

/// Smallest prime `p` with `n/3 < p < 2n/3`.
pub fn bertrand_prime(n: usize) -> Result<usize> {
    if n < 6 {
        return Err(Error::InvalidParameters(format!("n = {} < 6", n)));
    }
    (n / 3 + 1..=2 * n / 3)
        .find(|&p| 3 * p > n && 3 * p < 2 * n && is_prime(p as u64))
        .ok_or_else(|| Error::InvalidParameters(format!("no prime strictly between n/3 and 2n/3 for n = {}", n)))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PiDescriptor {
    /// `k = 1` and `x_1 ⋯ x_m τ ∈ b`.
    Pi { i: i32, b: CycleType },
    /// `k = r` and `x_i x_{i+r} ⋯ x_{i+m-r} τ ∈ D_{σ(i)}` with `σ = ν^shift`,
    /// `σ(i) = ((i - 1 + shift) mod r) + 1`; `shift = None` is the union over shifts.
    Pi0r { r: usize, shift: Option<usize>, d_classes: Vec<CycleType> },
    /// Odd `m`: `k = 2` and `x_1 x_3 ⋯ x_m τ · x_2 x_4 ⋯ x_{m-1} τ ∈ [p, n-p]`.
    Pi02Odd { p: usize, c: CycleType },
}

impl PiDescriptor {
    pub fn pi(n: usize, i: i32) -> Result<Self> {
        Ok(PiDescriptor::Pi { i, b: b_class(n, i)? })
    }

    pub fn pi0r(params: &GroupParams, r: usize, shift: Option<usize>) -> Result<Self> {
        let (n, m) = (params.n(), params.m());
        if !is_prime(r as u64) || m % r != 0 {
            return Err(Error::InvalidParameters(format!("Π_(0,r) needs a prime r dividing m, got r = {}, m = {}", r, m)));
        }
        if let Some(s) = shift {
            if s >= r {
                return Err(Error::InvalidParameters(format!("shift {} ≥ r", s)));
            }
        }
        let mut d_classes = vec![CycleType::with_degree(n, vec![n - 2, 1, 1])?];
        for _ in 1..r {
            d_classes.push(CycleType::with_degree(n, vec![n])?);
        }
        Ok(PiDescriptor::Pi0r { r, shift, d_classes })
    }

    pub fn pi02_odd(params: &GroupParams) -> Result<Self> {
        if params.m().is_multiple_of(2) {
            return Err(Error::InvalidParameters(String::from("the odd-m variant needs m odd")));
        }
        let n = params.n();
        let p = bertrand_prime(n)?;
        Ok(PiDescriptor::Pi02Odd { p, c: CycleType::with_degree(n, vec![p, n - p])? })
    }

    /// One descriptor per index `j`: all `Π_i`, then one per prime `r | 2m`.
    pub fn j_level(params: &GroupParams) -> Result<Vec<PiDescriptor>> {
        let mut out = Vec::new();
        for i in index_set(params.n()) {
            out.push(Self::pi(params.n(), i)?);
        }
        for r in prime_divisors(2 * params.m() as u64) {
            let r = r as usize;
            if params.m().is_multiple_of(r) {
                out.push(Self::pi0r(params, r, None)?);
            } else {
                out.push(Self::pi02_odd(params)?);
            }
        }
        Ok(out)
    }

    /// Every shift class `Π_{0,r,σ}` for the primes `r | m`.
    pub fn shift_level(params: &GroupParams) -> Result<Vec<PiDescriptor>> {
        let mut out = Vec::new();
        for r in prime_divisors(params.m() as u64) {
            for s in 0..r as usize {
                out.push(Self::pi0r(params, r as usize, Some(s))?);
            }
        }
        Ok(out)
    }

    /// The `γ`-exponent every member has.
    pub fn exponent(&self) -> usize {
        match self {
            PiDescriptor::Pi { .. } => 1,
            PiDescriptor::Pi0r { r, .. } => *r,
            PiDescriptor::Pi02Odd { .. } => 2,
        }
    }

    pub fn name(&self) -> String {
        match self {
            PiDescriptor::Pi { i, .. } => format!("Pi({})", i),
            PiDescriptor::Pi0r { r, shift: None, .. } => format!("Pi0r(r={})", r),
            PiDescriptor::Pi0r { r, shift: Some(s), .. } => format!("Pi0r(r={},shift={})", r, s),
            PiDescriptor::Pi02Odd { p, .. } => format!("Pi02Odd(p={})", p),
        }
    }

    /// The shift class of a member of `Π_{0,r}`.
    pub fn shift_of(g: &WreathElement, r: usize) -> Option<usize> {
        let params = g.params();
        if g.k() != r || !params.m().is_multiple_of(r) {
            return None;
        }
        let n = params.n();
        let prods = strided_products(g, r);
        let mut special = None;
        for (idx, p) in prods.iter().enumerate() {
            let ct = p.cycle_type();
            if ct.parts() == [1, 1, n - 2] {
                if special.is_some() {
                    return None;
                }
                special = Some(idx);
            } else if ct.parts() != [n] {
                return None;
            }
        }
        // σ(i) = 1 at the special index i (1-based), i.e. shift ≡ 1 - i.
        special.map(|i0| (r - i0 % r) % r)
    }

    pub fn contains(&self, g: &WreathElement) -> bool {
        if g.k() != self.exponent() {
            return false;
        }
        let tau = g.params().tau();
        match self {
            PiDescriptor::Pi { b, .. } => {
                let mut s = g.xs()[0].clone();
                for x in &g.xs()[1..] {
                    s = &s * x;
                }
                (&s * &tau).cycle_type() == *b
            }
            PiDescriptor::Pi0r { r, shift, .. } => match Self::shift_of(g, *r) {
                Some(s) => shift.is_none_or(|t| t == s),
                None => false,
            },
            PiDescriptor::Pi02Odd { c, .. } => odd_m_product(g).cycle_type() == *c,
        }
    }

    /// Exact size.
    pub fn size(&self, params: &GroupParams) -> BigUint {
        let an = params.an_order();
        let m = params.m();
        match self {
            PiDescriptor::Pi { b, .. } => pow(&an, m - 1) * b.class_size(),
            PiDescriptor::Pi0r { r, shift, d_classes } => {
                let mut v = pow(&an, m - r);
                for d in d_classes {
                    v *= d.class_size();
                }
                if shift.is_none() {
                    v *= *r as u64;
                }
                v
            }
            PiDescriptor::Pi02Odd { c, .. } => pow(&an, m - 1) * c.class_size(),
        }
    }

    /// Uniform member: every coordinate but one is free, the last one solves the
    /// defining equation for a uniformly chosen class element.
    pub fn sample<R: Rng + ?Sized>(&self, params: GroupParams, rng: &mut R) -> WreathElement {
        let (n, m) = (params.n(), params.m());
        let tau = params.tau();
        let mut xs: Vec<Permutation> = (0..m).map(|_| Permutation::random_even(n, rng)).collect();
        let class_elt = |ct: &CycleType, rng: &mut R| ct.representative().conj(&Permutation::random(n, rng));
        match self {
            PiDescriptor::Pi { b, .. } => {
                let mut t = Permutation::identity(n);
                for x in &xs[1..] {
                    t = &t * x;
                }
                t = &t * &tau;
                xs[0] = &class_elt(b, rng) * &t.inverse();
            }
            PiDescriptor::Pi0r { r, shift, d_classes } => {
                let s = shift.unwrap_or_else(|| rng.gen_range(0..*r));
                for i in 0..*r {
                    let mut t = Permutation::identity(n);
                    let mut j = i + r;
                    while j < m {
                        t = &t * &xs[j];
                        j += r;
                    }
                    t = &t * &tau;
                    let d = &d_classes[(i + s) % r];
                    xs[i] = &class_elt(d, rng) * &t.inverse();
                }
            }
            PiDescriptor::Pi02Odd { c, .. } => {
                let mut rest = Permutation::identity(n);
                let mut j = 2;
                while j < m {
                    rest = &rest * &xs[j];
                    j += 2;
                }
                rest = &rest * &tau;
                let mut j = 1;
                while j < m {
                    rest = &rest * &xs[j];
                    j += 2;
                }
                rest = &rest * &tau;
                xs[0] = &class_elt(c, rng) * &rest.inverse();
            }
        }
        WreathElement::new(params, xs, self.exponent()).expect("sampled coordinates are even")
    }
}

/// `x_i x_{i+r} ⋯ x_{i+m-r} τ` for `i = 1, …, r`.
fn strided_products(g: &WreathElement, r: usize) -> Vec<Permutation> {
    let params = g.params();
    let tau = params.tau();
    (0..r)
        .map(|i| {
            let mut p = g.xs()[i].clone();
            let mut j = i + r;
            while j < params.m() {
                p = &p * &g.xs()[j];
                j += r;
            }
            &p * &tau
        })
        .collect()
}

fn odd_m_product(g: &WreathElement) -> Permutation {
    let xs = g.xs();
    let tau = g.params().tau();
    let mut p = xs[0].clone();
    let mut j = 2;
    while j < xs.len() {
        p = &p * &xs[j];
        j += 2;
    }
    p = &p * &tau;
    let mut j = 1;
    while j < xs.len() {
        p = &p * &xs[j];
        j += 2;
    }
    &p * &tau
}

impl fmt::Display for PiDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PiDescriptor::Pi { b, .. } => write!(f, "{}:{}", self.name(), b),
            PiDescriptor::Pi0r { d_classes, .. } => {
                write!(f, "{}:", self.name())?;
                for (j, d) in d_classes.iter().enumerate() {
                    if j > 0 {
                        f.write_str("|")?;
                    }
                    write!(f, "{}", d)?;
                }
                Ok(())
            }
            PiDescriptor::Pi02Odd { c, .. } => write!(f, "{}:{}", self.name(), c),
        }
    }
}

impl fmt::Debug for PiDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generators of `A_n`: `(1 2 3)` and a long even cycle fixing or moving point 1.
pub fn alternating_generators(n: usize) -> [Permutation; 2] {
    let c3 = Permutation::from_images(
        (0..n as u32).map(|i| if i < 3 { (i + 1) % 3 } else { i }).collect(),
    )
    .expect("3-cycle");
    let long = if n % 2 == 1 {
        Permutation::long_cycle(n)
    } else {
        // (2 3 … n)
        Permutation::from_images((0..n as u32).map(|i| if i == 0 { 0 } else if i == n as u32 - 1 { 1 } else { i + 1 }).collect())
            .expect("cycle")
    };
    [c3, long]
}

/// `γ` together with `(a, 1, …, 1)` for generators `a` of `A_n`.
pub fn group_generators(params: GroupParams) -> Vec<WreathElement> {
    let mut out = vec![WreathElement::gamma(params)];
    for a in alternating_generators(params.n()) {
        let mut xs = vec![Permutation::identity(params.n()); params.m()];
        xs[0] = a;
        out.push(WreathElement::new(params, xs, 0).expect("even"));
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct PiCheckReport {
    pub params: Option<GroupParams>,
    pub exhaustive: bool,
    pub trials: u64,
    pub seed: u64,
    /// `(descriptor, formula size, counted size or None when sampled)`.
    pub sizes: Vec<(String, BigUint, Option<BigUint>)>,
    pub conjugations_checked: u64,
    pub disjointness_checked: u64,
    pub findings: Vec<Finding>,
}

impl ToSummary for PiCheckReport {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        let prov = if self.exhaustive { Provenance::Enumeration } else { Provenance::Sampled };
        for (name, formula, counted) in &self.sizes {
            s.quantities.push(Quantity::int(format!("size.{}", name), formula.clone(), Provenance::Formula));
            if let Some(c) = counted {
                s.quantities.push(Quantity::int(format!("count.{}", name), c.clone(), Provenance::Enumeration));
            }
        }
        s.quantities.push(Quantity::count("conjugations_checked", self.conjugations_checked, prov));
        s.quantities.push(Quantity::count("disjointness_checked", self.disjointness_checked, prov));
        s.findings = self.findings.clone();
        s
    }
}

fn shifted_descriptor(d: &PiDescriptor, k: usize) -> PiDescriptor {
    match d {
        PiDescriptor::Pi0r { r, shift: Some(s), d_classes } => PiDescriptor::Pi0r {
            r: *r,
            shift: Some((s + r - k % r) % r),
            d_classes: d_classes.clone(),
        },
        other => other.clone(),
    }
}

/// Randomized closure and disjointness check with per-trial derived seeds.
pub fn closure_and_disjointness_check(params: GroupParams, trials: u64, seed: u64) -> Result<PiCheckReport> {
    let j_level = PiDescriptor::j_level(&params)?;
    let shifts = PiDescriptor::shift_level(&params)?;
    let gamma = WreathElement::gamma(params);
    let mut report = PiCheckReport { params: Some(params), trials, seed, ..Default::default() };
    for d in j_level.iter().chain(&shifts) {
        report.sizes.push((d.name(), d.size(&params), None));
    }
    let levels: [&[PiDescriptor]; 2] = [&j_level, &shifts];
    for (level_idx, level) in levels.iter().enumerate() {
        for (di, d) in level.iter().enumerate() {
            for t in 0..trials {
                let stream = (level_idx as u64) << 32 | di as u64;
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, stream, t));
                let g = d.sample(params, &mut rng);
                if !d.contains(&g) {
                    report.findings.push(Finding::new("sampler", format!("sample not in {}", d.name()), Some(g.to_string())));
                    continue;
                }
                let y = WreathElement::random_socle(params, &mut rng);
                let h = WreathElement::random(params, &mut rng);
                for (label, conj) in [("gamma", &gamma), ("socle", &y), ("random", &h)] {
                    let c = g.conj(conj)?;
                    let target = shifted_descriptor(d, conj.k());
                    report.conjugations_checked += 1;
                    if !target.contains(&c) {
                        report.findings.push(Finding::new(
                            "closure",
                            format!("{} member left {} under {} conjugation", d.name(), target.name(), label),
                            Some(format!("g={} h={}", g, conj)),
                        ));
                    }
                }
                for (oi, other) in level.iter().enumerate() {
                    if oi != di {
                        report.disjointness_checked += 1;
                        if other.contains(&g) {
                            report.findings.push(Finding::new(
                                "disjointness",
                                format!("{} and {} share an element", d.name(), other.name()),
                                Some(g.to_string()),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Exhaustive version over every element of a small group.
pub fn closure_and_disjointness_exhaustive(params: GroupParams, cap: u128) -> Result<PiCheckReport> {
    let j_level = PiDescriptor::j_level(&params)?;
    let shifts = PiDescriptor::shift_level(&params)?;
    let gens = group_generators(params);
    let elements = all_elements(params, cap)?;
    let mut report = PiCheckReport { params: Some(params), exhaustive: true, ..Default::default() };
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for g in &elements {
        let in_j: Vec<&PiDescriptor> = j_level.iter().filter(|d| d.contains(g)).collect();
        let in_s: Vec<&PiDescriptor> = shifts.iter().filter(|d| d.contains(g)).collect();
        report.disjointness_checked += 1;
        for d in in_j.iter().chain(&in_s) {
            *counts.entry(d.name()).or_insert(0) += 1;
        }
        if in_j.len() > 1 || in_s.len() > 1 {
            report.findings.push(Finding::new("disjointness", "element in two classes of one level", Some(g.to_string())));
        }
        let in_union = j_level.iter().any(|d| matches!(d, PiDescriptor::Pi0r { .. }) && d.contains(g));
        if in_union != !in_s.is_empty() {
            report.findings.push(Finding::new("partition", "shift classes do not partition Π_(0,r)", Some(g.to_string())));
        }
        for d in in_j.iter().chain(&in_s) {
            for h in &gens {
                let c = g.conj(h)?;
                report.conjugations_checked += 1;
                if !shifted_descriptor(d, h.k()).contains(&c) {
                    report.findings.push(Finding::new(
                        "closure",
                        format!("{} not closed", d.name()),
                        Some(format!("g={} h={}", g, h)),
                    ));
                }
            }
        }
    }
    for d in j_level.iter().chain(&shifts) {
        let c = counts.get(&d.name()).copied().unwrap_or(0);
        let f = d.size(&params);
        if f != BigUint::from(c) {
            report.findings.push(Finding::new("size", format!("{}: formula {} vs count {}", d.name(), f, c), None));
        }
        report.sizes.push((d.name(), f, Some(BigUint::from(c))));
    }
    Ok(report)
}

/// The base point `π = (z, 1, …, 1)γ` with `zτ` the cycle `(1 2 … n)`.
pub fn base_point(params: GroupParams) -> Result<WreathElement> {
    let n = params.n();
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    let z = &Permutation::long_cycle(n) * &params.tau();
    let mut xs = vec![Permutation::identity(n); params.m()];
    xs[0] = z;
    WreathElement::new(params, xs, 1)
}

/// The socle conjugator `y` with `g^y = π`, for `g ∈ Π_{-1}`.
pub fn conjugator_to_base(g: &WreathElement) -> Result<WreathElement> {
    let params = *g.params();
    let n = params.n();
    let tau = params.tau();
    let pi = base_point(params)?;
    let target = &pi.xs()[0] * &tau;
    let mut s = g.xs()[0].clone();
    for x in &g.xs()[1..] {
        s = &s * x;
    }
    s = &s * &tau;
    if g.k() != 1 || s.cycle_type().parts() != [n] {
        return Err(Error::InvalidParameters(format!("{} is not in Π_(-1)", g)));
    }
    // a sends the cycle of s onto the cycle of zτ, point by point.
    let sc = &s.cycles()[0];
    let tc = &target.cycles()[0];
    let mut images = vec![0u32; n];
    for (a, b) in sc.iter().zip(tc) {
        images[*a as usize] = *b;
    }
    let mut a = Permutation::from_images(images)?;
    if !a.is_even() {
        a = &s * &a;
    }
    let m = params.m();
    let mut ys = vec![a.clone(); m];
    let tat = &(&tau * &a) * &tau;
    for i in 1..m {
        let mut y = g.xs()[i].clone();
        for x in &g.xs()[i + 1..] {
            y = &y * x;
        }
        ys[i] = &y * &tat;
    }
    WreathElement::new(params, ys, 0)
}

#[derive(Clone, Debug, Default)]
pub struct SingleClassReport {
    pub checked: u64,
    pub orbit_size: Option<u64>,
    pub class_size: BigUint,
    pub exhaustive: bool,
    pub findings: Vec<Finding>,
}

impl SingleClassReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }
}

impl ToSummary for SingleClassReport {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        let prov = if self.exhaustive { Provenance::Enumeration } else { Provenance::Sampled };
        s.quantities.push(Quantity::count("members_conjugated_to_base", self.checked, prov));
        s.quantities.push(Quantity::int("class_size", self.class_size.clone(), Provenance::Formula));
        if let Some(o) = self.orbit_size {
            s.quantities.push(Quantity::count("orbit_size", o, Provenance::Enumeration));
        }
        s.findings = self.findings.clone();
        s
    }
}

fn check_member(g: &WreathElement, pi: &WreathElement, report: &mut SingleClassReport) -> Result<()> {
    let y = conjugator_to_base(g)?;
    report.checked += 1;
    if g.conj(&y)? != *pi {
        report.findings.push(Finding::new("single_class", "conjugator does not reach π", Some(format!("g={} y={}", g, y))));
    }
    Ok(())
}

/// Sampled check: members of `Π_{-1}` are conjugate to `π` by the explicit conjugator.
pub fn single_class_check(params: GroupParams, samples: u64, seed: u64) -> Result<SingleClassReport> {
    let pi = base_point(params)?;
    let d = PiDescriptor::Pi { i: -1, b: CycleType::with_degree(params.n(), vec![params.n()])? };
    let mut report = SingleClassReport { class_size: d.size(&params), ..Default::default() };
    let y = conjugator_to_base(&pi)?;
    if !y.is_identity() {
        report.findings.push(Finding::new("single_class", "base point has a nontrivial conjugator", Some(y.to_string())));
    }
    for t in 0..samples {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 77, t));
        let g = d.sample(params, &mut rng);
        check_member(&g, &pi, &mut report)?;
    }
    Ok(report)
}

/// Exhaustive check: every member reaches `π`, and the orbit of `π` is exactly `Π_{-1}`.
pub fn single_class_exhaustive(params: GroupParams, cap: u128) -> Result<SingleClassReport> {
    let pi = base_point(params)?;
    let n = params.n();
    let d = PiDescriptor::Pi { i: -1, b: CycleType::with_degree(n, vec![n])? };
    let mut report = SingleClassReport { class_size: d.size(&params), exhaustive: true, ..Default::default() };
    let elements = all_elements(params, cap)?;
    let mut members = 0u64;
    for g in elements.iter().filter(|g| d.contains(g)) {
        members += 1;
        check_member(g, &pi, &mut report)?;
    }
    // Orbit of π under conjugation by generators.
    let gens = group_generators(params);
    let space = {
        let nf: u128 = (1..=n as u128).product();
        nf.pow(params.m() as u32) * (2 * params.m()) as u128
    };
    let mut seen = FixedBitSet::with_capacity(space as usize);
    seen.insert(pi.rank() as usize);
    let mut stack = vec![pi.clone()];
    let mut orbit = 1u64;
    while let Some(g) = stack.pop() {
        if !d.contains(&g) {
            report.findings.push(Finding::new("single_class", "orbit of π leaves Π", Some(g.to_string())));
        }
        for h in &gens {
            let c = g.conj(h)?;
            let r = c.rank() as usize;
            if !seen.contains(r) {
                seen.insert(r);
                orbit += 1;
                stack.push(c);
            }
        }
    }
    report.orbit_size = Some(orbit);
    if BigUint::from(orbit) != report.class_size || BigUint::from(members) != report.class_size {
        report.findings.push(Finding::new(
            "single_class",
            format!("orbit {} / members {} / formula {}", orbit, members, report.class_size),
            None,
        ));
    }
    Ok(report)
}

/// Number of elements of a descriptor among `elements` (oracle helper).
pub fn count_members(d: &PiDescriptor, elements: &[WreathElement]) -> u64 {
    elements.iter().filter(|g| d.contains(g)).count() as u64
}

/// Every descriptor size at both levels.
pub fn all_sizes(params: &GroupParams) -> Result<Vec<(PiDescriptor, BigUint)>> {
    let mut out = Vec::new();
    for d in PiDescriptor::j_level(params)?.into_iter().chain(PiDescriptor::shift_level(params)?) {
        let s = d.size(params);
        out.push((d, s));
    }
    Ok(out)
}

/// `Σ |Π_j| ≤ |G|` sanity, used in reports.
pub fn total_marked(params: &GroupParams) -> Result<BigUint> {
    let mut t = BigUint::zero();
    for d in PiDescriptor::j_level(params)? {
        t += d.size(params);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, m: usize) -> GroupParams {
        GroupParams::new(n, m).unwrap()
    }

    #[test]
    fn bertrand_examples() {
        assert_eq!(bertrand_prime(30).unwrap(), 11);
        assert_eq!(bertrand_prime(12).unwrap(), 5);
        for n in 6..500 {
            let p = bertrand_prime(n).unwrap();
            assert!(3 * p > n && 3 * p < 2 * n && is_prime(p as u64));
        }
    }

    #[test]
    fn membership_examples() {
        let p = params(6, 2);
        let pi = base_point(p).unwrap();
        assert!(PiDescriptor::pi(6, -1).unwrap().contains(&pi));
        let id = WreathElement::identity(p);
        for d in PiDescriptor::j_level(&p).unwrap() {
            assert!(!d.contains(&id));
        }
        let tau = p.tau();
        let x1 = &Permutation::from_cycles(6, &[&[3, 4, 5, 6]]).unwrap() * &tau;
        let x2 = &Permutation::long_cycle(6) * &tau;
        let g = WreathElement::new(p, vec![x1, x2], 2).unwrap();
        assert!(PiDescriptor::pi0r(&p, 2, Some(0)).unwrap().contains(&g));
        assert!(!PiDescriptor::pi0r(&p, 2, Some(1)).unwrap().contains(&g));
        assert!(PiDescriptor::pi0r(&p, 2, None).unwrap().contains(&g));
    }

    #[test]
    fn sizes_at_6_2() {
        let p = params(6, 2);
        assert_eq!(PiDescriptor::pi(6, -1).unwrap().size(&p), BigUint::from(43200u32));
        assert_eq!(PiDescriptor::pi0r(&p, 2, None).unwrap().size(&p), BigUint::from(21600u32));
    }

    #[test]
    fn samples_are_members() {
        for (n, m) in [(12, 3), (12, 2), (18, 4), (30, 6)] {
            let p = params(n, m);
            let mut rng = ChaCha8Rng::seed_from_u64(5);
            for d in PiDescriptor::j_level(&p).unwrap().into_iter().chain(PiDescriptor::shift_level(&p).unwrap()) {
                for _ in 0..20 {
                    let g = d.sample(p, &mut rng);
                    assert!(d.contains(&g), "{} {:?}", d, g);
                }
            }
        }
    }

    #[test]
    fn gamma_shifts_sigma_back() {
        let p = params(12, 6);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for r in [2usize, 3] {
            for s in 0..r {
                let d = PiDescriptor::pi0r(&p, r, Some(s)).unwrap();
                let g = d.sample(p, &mut rng);
                let c = g.conj(&WreathElement::gamma(p)).unwrap();
                assert_eq!(PiDescriptor::shift_of(&c, r), Some((s + r - 1) % r));
            }
        }
    }

    #[test]
    fn conjugator_reaches_base() {
        let p = params(12, 3);
        let d = PiDescriptor::pi(12, -1).unwrap();
        let pi = base_point(p).unwrap();
        assert!(conjugator_to_base(&pi).unwrap().is_identity());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = d.sample(p, &mut rng);
            let y = conjugator_to_base(&g).unwrap();
            assert_eq!(g.conj(&y).unwrap(), pi);
        }
    }

    #[test]
    fn sampled_check_is_clean_at_small_scale() {
        let r = closure_and_disjointness_check(params(12, 3), 30, 1).unwrap();
        assert!(r.findings.is_empty(), "{:?}", r.findings);
        let r = closure_and_disjointness_check(params(12, 4), 30, 1).unwrap();
        assert!(r.findings.is_empty(), "{:?}", r.findings);
    }

    #[test]
    fn exhaustive_checks_at_6_2() {
        let p = params(6, 2);
        let r = closure_and_disjointness_exhaustive(p, 1 << 20).unwrap();
        assert!(r.findings.is_empty(), "{:?}", r.findings);
        let s = single_class_exhaustive(p, 1 << 24).unwrap();
        assert!(s.passed(), "{:?}", s.findings);
        assert_eq!(s.orbit_size, Some(43200));
    }
}
