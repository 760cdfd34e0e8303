//! Local lemma threshold check for the clique bound `ω(G(n, m)) ≥ l`, where
//! `l` is the number of conjugates of `N_G(M^m)` with `M` the two-block
//! imprimitive subgroup of `A_n`.
//!
//! Every case bound is an exact rational. Only the threshold `1/(e(d+1))`
//! and the displayed comparison bounds need enclosures.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, isqrt, pow, smallest_prime_divisor};
use crate::covering::{act_on_tuple, sigma_formula, MaximalClassDescriptor};
use crate::error::{Error, Result};
use crate::interval::{big, e_enclosure, pi_enclosure, ratio_big, rational_from_biguint, IntervalRational};
use crate::pi::group_generators;
use crate::report::{BoundReport, BoundTerm, Finding, Provenance, Quantity, Summary, ToSummary};
use crate::subgroups::StabilizerDescriptor;
use crate::wreath::{GroupParams, WreathElement};

/// `l`, the valency `d` and `|C(H)|` for the clique family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFamilyStats {
    pub n: usize,
    pub m: usize,
    pub l: BigUint,
    pub d: BigUint,
    pub c_h: BigUint,
}

pub fn clique_family_stats(n: usize, m: usize) -> Result<CliqueFamilyStats> {
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    if n < 4 || m == 0 {
        return Err(Error::InvalidParameters(format!("need n ≥ 4 and m ≥ 1, got n = {}, m = {}", n, m)));
    }
    let l = pow(&(binomial(n, n / 2) >> 1u32), m);
    let d = if l >= BigUint::from(2u32) { (&l - 2u32) * 2u32 } else { BigUint::zero() };
    let c_h = pow(&factorial(n / 2), 2 * m) * 2u32 / n;
    Ok(CliqueFamilyStats { n, m, l, d, c_h })
}

/// An upper bound for `P(E_{v,j})`.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseBound {
    pub j: usize,
    pub value: BigRational,
    /// How the bound was assembled.
    pub path: String,
    pub extra: Vec<Quantity>,
}

fn q(x: &BigUint) -> BigRational {
    rational_from_biguint(x)
}

fn qu(x: u64) -> BigRational {
    big(x)
}

/// `2m · |M|^m`, the order of `N_G(M^m)`.
fn product_order(m: usize, base_order: &BigUint) -> BigUint {
    pow(base_order, m) * (2 * m)
}

/// `(n/b)!^b · b!`, the order of the `b`-block imprimitive subgroup of `S_n`.
fn wreath_order(n: usize, b: usize) -> BigUint {
    pow(&factorial(n / b), b) * factorial(b)
}

fn halve(x: BigUint) -> BigUint {
    x >> 1u32
}

pub fn case_bound(j: usize, n: usize, m: usize) -> Result<CaseBound> {
    let stats = clique_family_stats(n, m)?;
    if m < 2 {
        return Err(Error::InvalidParameters(format!("case bounds need m ≥ 2, got {}", m)));
    }
    let c_h = q(&stats.c_h);
    let nm = qu((n * m) as u64);
    let mut extra = Vec::new();
    let (value, path) = match j {
        1 => (BigRational::zero(), String::from("no n-cycle normalizes an intransitive subgroup")),
        2 => {
            let k = product_order(m, &pow(&BigUint::from(4u32), n));
            let f = q(&k) / &c_h;
            extra.push(Quantity::rational("f_max", f.clone(), Provenance::Formula));
            (qu(n as u64) * &nm * f, String::from("c ≤ n, m_H ≤ nm, |M| ≤ 4^n"))
        }
        3 => {
            if !n.is_multiple_of(6) {
                (BigRational::zero(), String::from("3 ∤ n, no three-block subgroups"))
            } else {
                let inter = pow(&wreath_order(n, 6), m);
                let f = q(&inter) / &c_h;
                extra.push(Quantity::rational("f_max", f.clone(), Provenance::Formula));
                (&nm * f, String::from("c ≤ 1, m_H ≤ nm, intersection inside S_{n/6} ≀ S_6"))
            }
        }
        4 => {
            if !n.is_multiple_of(4) {
                (BigRational::zero(), String::from("4 ∤ n, no four-block subgroups"))
            } else {
                let k = product_order(m, &halve(wreath_order(n, 4)));
                let f = q(&k) / &c_h;
                let star = &nm * &f;
                extra.push(Quantity::rational("f_max", f.clone(), Provenance::Formula));
                extra.push(Quantity::rational("generic_path", star, Provenance::Formula));
                (&f * &f, String::from("s ≤ 1, product of two ratios"))
            }
        }
        5 => {
            let mut best: Option<(usize, BigUint)> = None;
            for b in 5..=n / 2 {
                if n.is_multiple_of(b) {
                    let o = halve(wreath_order(n, b));
                    if best.as_ref().is_none_or(|(_, x)| o > *x) {
                        best = Some((b, o));
                    }
                }
            }
            match best {
                None => (BigRational::zero(), String::from("no divisor 5 ≤ b ≤ n/2")),
                Some((b, o)) => {
                    let f = q(&product_order(m, &o)) / &c_h;
                    let c = isqrt(4 * n as u64);
                    extra.push(Quantity::count("worst_blocks", b as u64, Provenance::Formula));
                    extra.push(Quantity::count("c", c, Provenance::Formula));
                    extra.push(Quantity::rational("f_max", f.clone(), Provenance::Formula));
                    (qu(c) * &nm * f, format!("c ≤ 2√n, m_H ≤ nm, worst block count {}", b))
                }
            }
        }
        6 => {
            let t = smallest_prime_divisor(m as u64).expect("m ≥ 2") as usize;
            let k = pow(&halve(factorial(n)), m / t) * (2 * m);
            let f = q(&k) / &c_h;
            let c = (m as u64) << m;
            extra.push(Quantity::count("t", t as u64, Provenance::Formula));
            extra.push(Quantity::count("c", c, Provenance::Formula));
            extra.push(Quantity::rational("f_max", f.clone(), Provenance::Formula));
            (qu(c) * &nm * f, format!("c ≤ m·2^m, m_H ≤ nm, t = {}", t))
        }
        _ => return Err(Error::InvalidParameters(format!("case {} is not in 1..=6", j))),
    };
    Ok(CaseBound { j, value, path, extra })
}

/// `m² n³ (8e/n)^{nm}`, enclosed.
pub fn case2_display_bound(n: usize, m: usize, bits: u32) -> IntervalRational {
    let base = e_enclosure(bits).scale(&(qu(8) / qu(n as u64))).round(bits);
    base.powi_rounded((n * m) as u64, bits).scale(&qu((m * m * n * n * n) as u64)).round(bits)
}

/// `1/(e(d+1))`, enclosed.
pub fn lll_threshold(d: &BigUint, bits: u32) -> IntervalRational {
    e_enclosure(bits).scale(&q(&(d + 1u32))).recip().round(bits)
}

pub fn lll_verdict(n: usize, m: usize) -> Result<BoundReport> {
    lll_verdict_with_precision(n, m, crate::interval::DEFAULT_PRECISION)
}

/// Sum of the six case bounds against `1/(e(d+1))`.
pub fn lll_verdict_with_precision(n: usize, m: usize, bits: u32) -> Result<BoundReport> {
    let stats = clique_family_stats(n, m)?;
    let mut terms = Vec::new();
    let mut extra = Vec::new();
    let mut notes = Vec::new();
    for j in 1..=6 {
        let c = case_bound(j, n, m)?;
        for x in c.extra {
            extra.push(Quantity { name: format!("case{}.{}", j, x.name), ..x });
        }
        notes.push(format!("case {}: {}", j, c.path));
        terms.push(BoundTerm::new(format!("case{}", j), IntervalRational::exact(c.value)));
    }
    let threshold = lll_threshold(&stats.d, bits);
    let mut report = BoundReport::new("lll", n, m, terms, threshold, false);

    let l_cap = BigUint::one() << (m * (n - 1));
    let d_cap = BigUint::one() << (m * n);
    extra.push(Quantity::int("l", stats.l.clone(), Provenance::Formula));
    extra.push(Quantity::int("d", stats.d.clone(), Provenance::Formula));
    extra.push(Quantity::int("c_h", stats.c_h.clone(), Provenance::Formula));
    extra.push(Quantity::flag("l_below_2^(m(n-1))", stats.l < l_cap, Provenance::Formula));
    extra.push(Quantity::flag("d_at_most_2^(mn)", stats.d <= d_cap, Provenance::Formula));

    let display = case2_display_bound(n, m, bits);
    let case2 = report.terms[1].value.clone();
    extra.push(Quantity::interval("case2.display", display.clone()));
    extra.push(Quantity::flag("case2.below_display", case2.certainly_le(&display), Provenance::Enclosure));
    let closing = lll_threshold(&d_cap, bits);
    extra.push(Quantity::interval("closing_target", closing.clone()));
    extra.push(Quantity::flag("below_closing_target", report.total.certainly_le(&closing), Provenance::Enclosure));
    if n.is_multiple_of(4) {
        let generic = extra.iter().find(|x| x.name == "case4.generic_path").and_then(|x| match &x.value {
            crate::report::Value::Rational(r) => Some(r.clone()),
            _ => None,
        });
        if let Some(g) = generic {
            let mut alt = report.total.sub(&report.terms[3].value);
            alt = alt.add(&IntervalRational::exact(g));
            extra.push(Quantity::flag("case4.generic_verdict", alt.certainly_le(&report.threshold), Provenance::Enclosure));
        }
    }
    notes.push(String::from("c ≤ n in case 2 holds only for large enough n"));
    if report.verdict {
        notes.push(format!("ω(G({}, {})) ≥ l = {}", n, m, stats.l));
    }
    report.extra = extra;
    report.notes = notes;
    Ok(report)
}

/// Verdicts over even `n` in `n_min..=n_max`, at two precisions.
#[derive(Clone, Debug)]
pub struct ThresholdScan {
    pub m: usize,
    pub bits: u32,
    /// `(n, verdict, verdict at doubled precision)`.
    pub rows: Vec<(usize, bool, bool)>,
    /// Smallest scanned `n` with a verdict that holds.
    pub first_true: Option<usize>,
    /// Smallest scanned `n` from which every verdict holds.
    pub n0: Option<usize>,
    /// No verdict fails on the `n ≡ 0 mod 12` grid once one holds.
    pub monotone_on_grid: bool,
    pub stable: bool,
    /// `l < 2^{m(n-1)}` and `d = 2(l-2)` on every row.
    pub stats_hold: bool,
}

pub fn threshold_scan(m: usize, n_min: usize, n_max: usize, bits: u32) -> Result<ThresholdScan> {
    let mut rows = Vec::new();
    let mut stats_hold = true;
    let mut n = n_min + n_min % 2;
    while n <= n_max {
        let a = lll_verdict_with_precision(n, m, bits)?;
        let b = lll_verdict_with_precision(n, m, 2 * bits)?;
        let s = clique_family_stats(n, m)?;
        // Pairs meeting a fixed pair in exactly one member.
        let l2 = |x: &BigUint| if *x >= BigUint::from(2u32) { x * (x - 1u32) / 2u32 } else { BigUint::zero() };
        let valency = if s.l >= BigUint::from(2u32) { l2(&s.l) - l2(&(&s.l - 2u32)) - 1u32 } else { BigUint::zero() };
        stats_hold &= s.l < (BigUint::one() << (m * (n - 1))) && s.d == valency;
        rows.push((n, a.verdict, b.verdict));
        n += 2;
    }
    let n0 = rows.iter().rposition(|r| !r.1).map_or(rows.first().map(|r| r.0), |i| rows.get(i + 1).map(|r| r.0));
    let first_true = rows.iter().find(|r| r.1).map(|r| r.0);
    let grid: Vec<bool> = rows.iter().filter(|r| r.0 % 12 == 0).map(|r| r.1).collect();
    let monotone_on_grid = grid.windows(2).all(|w| !w[0] || w[1]);
    let stable = rows.iter().all(|r| r.1 == r.2);
    Ok(ThresholdScan { m, bits, rows, first_true, n0, monotone_on_grid, stable, stats_hold })
}

impl ToSummary for ThresholdScan {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for &(n, v, v2) in &self.rows {
            s.quantities.push(Quantity::flag(format!("verdict[{}]", n), v, Provenance::Enclosure));
            if v != v2 {
                s.findings.push(Finding::new("precision", format!("verdict at n = {} flips at doubled precision", n), None));
            }
        }
        if let Some(f) = self.first_true {
            s.quantities.push(Quantity::count("first_true", f as u64, Provenance::Enclosure));
        }
        match self.n0 {
            Some(n0) => {
                s.quantities.push(Quantity::count("n0", n0 as u64, Provenance::Enclosure));
                s.notes.push(format!("n0 = {} depends on the explicit constants used here", n0));
            }
            None => s.findings.push(Finding::new("lll", format!("no certified n on the scanned range for m = {}", self.m), None)),
        }
        s.quantities.push(Quantity::flag("monotone_on_grid", self.monotone_on_grid, Provenance::Enclosure));
        s.quantities.push(Quantity::flag("stats_hold", self.stats_hold, Provenance::Formula));
        if !self.monotone_on_grid {
            s.notes.push(format!("verdicts on n ≡ 0 mod 12 hold, then fail, before n0 (first holds at {:?})", self.first_true));
        }
        if !self.stats_hold {
            s.findings.push(Finding::new("lll", String::from("l or d identity failed"), None));
        }
        s
    }
}

/// Number of conjugates of the class `desc` that contain `g`.
pub fn conjugate_count_check(params: GroupParams, desc: &MaximalClassDescriptor, g: &WreathElement, cap: usize) -> Result<u64> {
    if g.params() != &params {
        return Err(Error::ParamsMismatch);
    }
    match desc {
        MaximalClassDescriptor::SocleIndex { .. } => Ok(desc.contains(g)? as u64),
        MaximalClassDescriptor::ProductNormalizer { base, .. } => {
            if matches!(base, StabilizerDescriptor::PrimitiveBound { .. }) {
                return Err(Error::NoMembership);
            }
            let start = vec![base.clone(); params.m()];
            let gens = group_generators(params);
            let mut seen = BTreeMap::new();
            seen.insert(start.clone(), ());
            let mut stack = vec![start];
            let mut count = 0u64;
            while let Some(t) = stack.pop() {
                if act_on_tuple(&t, g)? == t {
                    count += 1;
                }
                for s in &gens {
                    let u = act_on_tuple(&t, s)?;
                    if !seen.contains_key(&u) {
                        if seen.len() >= cap {
                            return Err(Error::CapExceeded { size: seen.len() as u128 + 1, cap: cap as u128 });
                        }
                        seen.insert(u.clone(), ());
                        stack.push(u);
                    }
                }
            }
            Ok(count)
        }
        MaximalClassDescriptor::Diagonal { .. } => {
            Err(Error::InvalidParameters(String::from("conjugates of diagonal classes are not enumerated")))
        }
    }
}

/// `l/σ`, a lower bound for `ω/σ` wherever the local lemma verdict holds.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioReport {
    pub n: usize,
    pub m: usize,
    pub ratio: BigRational,
    pub certified: bool,
}

pub fn omega_sigma_ratio(n: usize, m: usize) -> Result<RatioReport> {
    let stats = clique_family_stats(n, m)?;
    let sigma = sigma_formula(n, m)?;
    let certified = if m >= 2 { lll_verdict(n, m)?.verdict } else { false };
    Ok(RatioReport { n, m, ratio: ratio_big(&stats.l, &sigma), certified })
}

#[derive(Clone, Debug)]
pub struct RatioScan {
    pub m: usize,
    pub target: BigRational,
    pub rows: Vec<RatioReport>,
    /// Smallest scanned `n` from which every ratio exceeds the target.
    pub n1: Option<usize>,
    pub monotone_on_grid: bool,
}

/// Ratios over even `n` in `n_min..=n_max`; monotonicity is judged on `n ≡ 0 mod 12`.
pub fn ratio_scan(m: usize, n_min: usize, n_max: usize, target: BigRational) -> Result<RatioScan> {
    let mut rows = Vec::new();
    let mut n = (n_min.max(6) + 1) & !1;
    while n <= n_max {
        rows.push(omega_sigma_ratio(n, m)?);
        n += 2;
    }
    let n1 = match rows.iter().rposition(|r| r.ratio <= target) {
        None => rows.first().map(|r| r.n),
        Some(i) => rows.get(i + 1).map(|r| r.n),
    };
    let grid: Vec<&BigRational> = rows.iter().filter(|r| r.n % 12 == 0).map(|r| &r.ratio).collect();
    let monotone_on_grid = grid.windows(2).all(|w| w[0] < w[1]);
    Ok(RatioScan { m, target, rows, n1, monotone_on_grid })
}

impl ToSummary for RatioScan {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.rows {
            s.quantities.push(Quantity::rational(format!("ratio[{}]", r.n), r.ratio.clone(), Provenance::Formula));
            if !r.certified {
                s.notes.push(format!("n = {}: ratio not certified by the local lemma check", r.n));
            }
        }
        match self.n1 {
            Some(n1) => s.quantities.push(Quantity::count("n1", n1 as u64, Provenance::Formula)),
            None => s.findings.push(Finding::new("ratio", format!("ratio never exceeds {} on the scan", self.target), None)),
        }
        s.quantities.push(Quantity::flag("monotone_on_grid", self.monotone_on_grid, Provenance::Formula));
        if !self.monotone_on_grid {
            s.findings.push(Finding::new("ratio", String::from("ratio not increasing on n ≡ 0 mod 12"), None));
        }
        s
    }
}

/// `√(2πk)(k/e)^k ≤ k! ≤ e√k(k/e)^k` for `2 ≤ k ≤ k_max`, or the first `k` where a side cannot be certified.
pub fn stirling_check(k_max: usize, bits: u32) -> core::result::Result<(), usize> {
    let e = e_enclosure(bits);
    let two_pi = pi_enclosure(bits).scale(&qu(2));
    let e2 = e.mul(&e);
    let mut fact = BigUint::one();
    for k in 2..=k_max {
        fact *= k;
        // R = k! e^k / k^k; the claim is 2πk ≤ R² ≤ e²k.
        let ek = e.powi_rounded(k as u64, bits);
        let kk = IntervalRational::exact(qu(k as u64)).powi_rounded(k as u64, bits);
        let r = IntervalRational::exact(q(&fact)).round(bits).mul(&ek).div(&kk).round(bits);
        let r2 = r.mul(&r);
        let kq = qu(k as u64);
        if !two_pi.scale(&kq).certainly_le(&r2) || !r2.certainly_le(&e2.scale(&kq)) {
            return Err(k);
        }
    }
    Ok(())
}
