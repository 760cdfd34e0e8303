//! The covering family of `G(n, m)`, its witnesses, the counting formulas for
//! `|N_G(M^m) ∩ Π|`, the uniqueness condition and the competitor bounds `d(H) < 1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{alpha, binomial, factorial, factorial_table, gcd, mod_inverse, pow, prime_divisors};
use crate::error::{Error, Result};
use crate::interval::{big, e_enclosure, pi_enclosure, ratio_big, rational_from_biguint, IntervalRational};
use crate::perm::{CycleType, Permutation};
use crate::pi::{alternating_generators, closure_and_disjointness_check, group_generators, PiCheckReport, PiDescriptor};
use crate::report::{BoundReport, BoundTerm, Finding, Provenance, Quantity, Summary, ToSummary};
use crate::subgroups::{b_class, eric_sum_bound, f_members_containing, index_set, StabilizerDescriptor};
use crate::wreath::{for_each_element, GroupParams, ScaleFlags, WreathElement};

/// `α(2m) + (½ C(n, n/2))^m + Σ_{1 ≤ i < n/3} C(n, i)^m`.
pub fn sigma_formula(n: usize, m: usize) -> Result<BigUint> {
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    if n < 6 || m == 0 {
        return Err(Error::InvalidParameters(format!("σ formula needs n ≥ 6 and m ≥ 1, got n = {}, m = {}", n, m)));
    }
    let mut total = BigUint::from(alpha(2 * m as u64));
    total += pow(&(binomial(n, n / 2) / 2u32), m);
    let mut i = 1;
    while 3 * i < n {
        total += pow(&binomial(n, i), m);
        i += 1;
    }
    Ok(total)
}

/// A maximal subgroup of `G(n, m)`, either a single subgroup or a conjugacy class.
#[derive(Clone, PartialEq, Eq)]
pub enum MaximalClassDescriptor {
    /// `M_{0,r} = A_n^m ⋊ <γ^r>`.
    SocleIndex { r: usize },
    /// `N_G(M × M^{a_2} × … × M^{a_m})` with `M = base ∩ A_n`; `None` for the class.
    ProductNormalizer { base: StabilizerDescriptor, conjugators: Option<Vec<Permutation>> },
    /// `N_G(Δ_φ)`, coordinate `c·(m/t) + i` of `Δ_φ` equal to coordinate `i` twisted by `φ[i][c-1]`.
    Diagonal { t: usize, phi: Vec<Vec<Permutation>> },
}

impl MaximalClassDescriptor {
    pub fn product_class(base: StabilizerDescriptor) -> Self {
        MaximalClassDescriptor::ProductNormalizer { base, conjugators: None }
    }

    /// `N_G(M^m)`.
    pub fn product_diagonal_base(base: StabilizerDescriptor, m: usize) -> Self {
        let n = base.degree();
        MaximalClassDescriptor::ProductNormalizer { base, conjugators: Some(vec![Permutation::identity(n); m.saturating_sub(1)]) }
    }

    /// The structure stabilized in each coordinate, when the descriptor is a single subgroup.
    pub fn product_tuple(&self) -> Result<Option<Vec<StabilizerDescriptor>>> {
        match self {
            MaximalClassDescriptor::ProductNormalizer { base, conjugators: Some(cs) } => {
                let mut out = vec![base.clone()];
                for a in cs {
                    out.push(base.image(a)?);
                }
                Ok(Some(out))
            }
            _ => Ok(None),
        }
    }

    /// Order, using the supplement formula `2m (n!/2)^{m/t}` for diagonal type.
    pub fn order(&self, params: &GroupParams) -> BigUint {
        let m = params.m();
        match self {
            MaximalClassDescriptor::SocleIndex { r } => params.order() / *r as u64,
            MaximalClassDescriptor::ProductNormalizer { base, .. } => {
                pow(&(base.normalizer_order() / 2u32), m) * (2 * m) as u64
            }
            MaximalClassDescriptor::Diagonal { t, .. } => pow(&params.an_order(), m / t) * (2 * m) as u64,
        }
    }

    /// Number of subgroups in the class.
    pub fn class_size(&self, params: &GroupParams) -> Option<BigUint> {
        match self {
            MaximalClassDescriptor::SocleIndex { .. } => Some(BigUint::one()),
            MaximalClassDescriptor::ProductNormalizer { base, .. } => {
                Some(pow(&(factorial(params.n()) / base.normalizer_order()), params.m()))
            }
            MaximalClassDescriptor::Diagonal { .. } => None,
        }
    }

    pub fn contains(&self, g: &WreathElement) -> Result<bool> {
        match self {
            MaximalClassDescriptor::SocleIndex { r } => Ok(g.k().is_multiple_of(*r)),
            MaximalClassDescriptor::ProductNormalizer { .. } => match self.product_tuple()? {
                Some(t) => Ok(act_on_tuple(&t, g)? == t),
                None => Err(Error::InvalidParameters(String::from("class-level descriptor has no membership"))),
            },
            MaximalClassDescriptor::Diagonal { t, phi } => diagonal_normalizes(*t, phi, g),
        }
    }
}

impl fmt::Display for MaximalClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaximalClassDescriptor::SocleIndex { r } => write!(f, "socle:{}", r),
            MaximalClassDescriptor::ProductNormalizer { base, conjugators } => {
                write!(f, "product:{}", base)?;
                if let Some(cs) = conjugators {
                    for a in cs {
                        write!(f, "@{}", a)?;
                    }
                }
                Ok(())
            }
            MaximalClassDescriptor::Diagonal { t, phi } => {
                write!(f, "diag:{}", t)?;
                for row in phi {
                    f.write_str(":")?;
                    for (c, p) in row.iter().enumerate() {
                        if c > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{}", p)?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for MaximalClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The structures stabilized by `(L_1 × … × L_m)^g`.
pub fn act_on_tuple(tuple: &[StabilizerDescriptor], g: &WreathElement) -> Result<Vec<StabilizerDescriptor>> {
    let params = g.params();
    if tuple.len() != params.m() {
        return Err(Error::ParamsMismatch);
    }
    let tau = params.tau();
    let mut cur: Vec<StabilizerDescriptor> =
        tuple.iter().zip(g.xs()).map(|(l, x)| l.image(x)).collect::<Result<_>>()?;
    for _ in 0..g.k() {
        let last = cur.pop().expect("m ≥ 1").image(&tau)?;
        cur.insert(0, last);
    }
    Ok(cur)
}

fn in_diagonal(t: usize, phi: &[Vec<Permutation>], xs: &[Permutation]) -> bool {
    let b = xs.len() / t;
    (0..b).all(|i| (1..t).all(|c| xs[c * b + i] == xs[i].conj(&phi[i][c - 1])))
}

fn diagonal_generators(t: usize, phi: &[Vec<Permutation>], n: usize, m: usize) -> Result<Vec<Vec<Permutation>>> {
    if t == 0 || !m.is_multiple_of(t) || phi.len() != m / t || phi.iter().any(|r| r.len() + 1 != t) {
        return Err(Error::InvalidParameters(String::from("malformed diagonal descriptor")));
    }
    let b = m / t;
    let mut out = Vec::new();
    for i in 0..b {
        for a in alternating_generators(n) {
            let mut xs = vec![Permutation::identity(n); m];
            for c in 1..t {
                xs[c * b + i] = a.conj(&phi[i][c - 1]);
            }
            xs[i] = a;
            out.push(xs);
        }
    }
    Ok(out)
}

fn normalizes_diagonal(gens: &[Vec<Permutation>], t: usize, phi: &[Vec<Permutation>], g: &WreathElement) -> bool {
    gens.iter().all(|h| in_diagonal(t, phi, &g.conj_socle(h)))
}

fn diagonal_normalizes(t: usize, phi: &[Vec<Permutation>], g: &WreathElement) -> Result<bool> {
    let gens = diagonal_generators(t, phi, g.params().n(), g.params().m())?;
    Ok(normalizes_diagonal(&gens, t, phi, g))
}

#[derive(Clone, Debug)]
pub struct CoveringDesign {
    pub n: usize,
    pub m: usize,
    pub classes: Vec<(MaximalClassDescriptor, BigUint)>,
    pub total: BigUint,
    pub flags: ScaleFlags,
}

/// The covering family class by class: `α(2m)` socle-index subgroups, then the
/// bipartition class, then the `i`-set classes for `1 ≤ i < n/3`.
pub fn covering_classes(n: usize, m: usize) -> Result<CoveringDesign> {
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    let params = GroupParams::new(n, m)?;
    let mut classes = Vec::new();
    for r in prime_divisors(2 * m as u64) {
        classes.push((MaximalClassDescriptor::SocleIndex { r: r as usize }, BigUint::one()));
    }
    for i in index_set(n) {
        let d = MaximalClassDescriptor::product_class(StabilizerDescriptor::covering_representative(n, i)?);
        let size = d.class_size(&params).expect("product classes have a size");
        classes.push((d, size));
    }
    let total = classes.iter().map(|(_, s)| s).sum();
    Ok(CoveringDesign { n, m, classes, total, flags: params.flags() })
}

impl ToSummary for CoveringDesign {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for (d, size) in &self.classes {
            s.quantities.push(Quantity::int(format!("class.{}", d), size.clone(), Provenance::Formula));
        }
        s.quantities.push(Quantity::int("total", self.total.clone(), Provenance::Formula));
        if self.flags.outside_theorem_hypotheses {
            s.notes.push(String::from("outside theorem hypotheses (n ≡ 0 mod 6, n ≥ 30, m ≥ 2)"));
        }
        if self.flags.m1_degenerate {
            s.notes.push(String::from("m = 1 degenerate: G is S_n"));
        }
        s
    }
}

/// A covering-family subgroup containing an element, and the power used to reach `k = 1`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub subgroup: MaximalClassDescriptor,
    pub power: u64,
}

/// A member of the covering family containing `g`, or `None` when no covering-family
/// member of `S_n` contains the relevant odd product (possible only at small degree).
pub fn witness_member(g: &WreathElement) -> Result<Option<Witness>> {
    let params = *g.params();
    let (n, m) = (params.n(), params.m());
    let two_m = 2 * m as u64;
    let k = g.k() as u64;
    let common = gcd(k, two_m);
    if common != 1 {
        let r = prime_divisors(common)[0] as usize;
        return Ok(Some(Witness { subgroup: MaximalClassDescriptor::SocleIndex { r }, power: 1 }));
    }
    let order = g.order();
    let t0 = mod_inverse(k, two_m).expect("k is a unit mod 2m");
    let mut t = t0;
    while !BigUint::from(t).gcd(&order).is_one() {
        t += two_m;
    }
    let h = g.pow(t);
    debug_assert_eq!(h.k(), 1);
    let tau = params.tau();
    let mut s = Permutation::identity(n);
    for x in h.xs() {
        s = &s * x;
    }
    s = &s * &tau;
    let members = f_members_containing(&s)?;
    let Some(base) = members.into_iter().next() else {
        return Ok(None);
    };
    let mut conjugators = Vec::with_capacity(m - 1);
    let mut prefix = Permutation::identity(n);
    for x in &h.xs()[..m - 1] {
        prefix = &prefix * x;
        conjugators.push(prefix.clone());
    }
    let subgroup = MaximalClassDescriptor::ProductNormalizer { base, conjugators: Some(conjugators) };
    Ok(Some(Witness { subgroup, power: t }))
}

/// `|N_G(M^m) ∩ Π|` from the class counts of `N_{S_n}(M)`.
pub fn count_pi_in_normalizer(base: &StabilizerDescriptor, pi: &PiDescriptor, params: &GroupParams) -> Result<BigUint> {
    let (n, m) = (params.n(), params.m());
    if base.degree() != n {
        return Err(Error::DegreeMismatch { left: base.degree(), right: n });
    }
    let odd = base.odd_element()?;
    if odd.is_even() || !base.stabilizes(&odd)? {
        return Err(Error::InvalidParameters(format!("{} lies inside A_n", base)));
    }
    let half = base.normalizer_order() / 2u32;
    Ok(match pi {
        PiDescriptor::Pi { b, .. } => pow(&half, m - 1) * base.class_count(b)?,
        PiDescriptor::Pi0r { r, shift, d_classes } => {
            let mut v = pow(&half, m - r);
            for d in d_classes {
                v *= base.class_count(d)?;
            }
            if shift.is_none() {
                v *= *r as u64;
            }
            v
        }
        PiDescriptor::Pi02Odd { c, .. } => pow(&half, m - 1) * base.class_count(c)?,
    })
}

/// Orders of `N_G(M^m)` and their intersections with each `Π`, by scanning all of `G`.
#[derive(Clone, Debug)]
pub struct IntersectionTable {
    pub bases: Vec<StabilizerDescriptor>,
    pub pis: Vec<PiDescriptor>,
    pub orders: Vec<u64>,
    /// `counts[b][p]`.
    pub counts: Vec<Vec<u64>>,
}

pub fn intersection_counts_enumerated(
    params: GroupParams,
    bases: &[StabilizerDescriptor],
    pis: &[PiDescriptor],
    cap: u128,
) -> Result<IntersectionTable> {
    let tuples: Vec<Vec<StabilizerDescriptor>> = bases.iter().map(|b| vec![b.clone(); params.m()]).collect();
    let mut orders = vec![0u64; bases.len()];
    let mut counts = vec![vec![0u64; pis.len()]; bases.len()];
    let mut err = None;
    for_each_element(params, cap, |g| {
        if err.is_some() {
            return;
        }
        let member: Vec<bool> = pis.iter().map(|p| p.contains(g)).collect();
        for (bi, t) in tuples.iter().enumerate() {
            match act_on_tuple(t, g) {
                Ok(img) if img == *t => {
                    orders[bi] += 1;
                    for (pi, &inside) in member.iter().enumerate() {
                        if inside {
                            counts[bi][pi] += 1;
                        }
                    }
                }
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(IntersectionTable { bases: bases.to_vec(), pis: pis.to_vec(), orders, counts })
}

/// Per-index outcome of the uniqueness condition.
#[derive(Clone, Debug)]
pub struct UniquenessEntry {
    pub i: i32,
    pub class: CycleType,
    pub members: Vec<StabilizerDescriptor>,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct UniquenessReport {
    pub n: usize,
    pub m: usize,
    pub entries: Vec<UniquenessEntry>,
    pub outside_hypotheses: bool,
    pub findings: Vec<Finding>,
}

impl UniquenessReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }
}

impl ToSummary for UniquenessReport {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for e in &self.entries {
            s.quantities.push(Quantity::count(format!("containing_members.B({})", e.i), e.members.len() as u64, Provenance::Enumeration));
        }
        if self.outside_hypotheses {
            s.notes.push(String::from("outside theorem hypotheses"));
        }
        s.findings = self.findings.clone();
        s
    }
}

/// Exactly one covering-family member of `S_n` contains a representative of each `B_i`,
/// and it belongs to family `i`; no member meets every `D_j` (nor `C` for odd `m`).
pub fn uniqueness_check(n: usize, m: usize) -> Result<UniquenessReport> {
    if !n.is_multiple_of(6) || n < 6 {
        return Err(Error::InvalidParameters(format!("uniqueness needs n ≡ 0 mod 6, got {}", n)));
    }
    let mut report = UniquenessReport { n, m, entries: Vec::new(), outside_hypotheses: n < 30, findings: Vec::new() };
    for i in index_set(n) {
        let class = b_class(n, i)?;
        let rep = class.representative();
        let members = f_members_containing(&rep)?;
        let ok = members.len() == 1 && members[0].covering_index() == Some(i);
        if !ok {
            let names: Vec<String> = members.iter().map(|d| d.to_string()).collect();
            report.findings.push(Finding::new(
                "uniqueness",
                format!("n = {}: B({}) = {} lies in {} covering-family members", n, i, class, members.len()),
                Some(format!("{} in {}", rep, names.join(" "))),
            ));
        }
        report.entries.push(UniquenessEntry { i, class, members, ok });
    }
    let d1 = CycleType::with_degree(n, vec![n - 2, 1, 1])?;
    let d2 = CycleType::with_degree(n, vec![n])?;
    let odd_c = if m % 2 == 1 {
        let p = crate::pi::bertrand_prime(n)?;
        Some(CycleType::with_degree(n, vec![p, n - p])?)
    } else {
        None
    };
    for i in index_set(n) {
        let f = StabilizerDescriptor::covering_representative(n, i)?;
        if !f.class_count(&d1)?.is_zero() && !f.class_count(&d2)?.is_zero() {
            report.findings.push(Finding::new("uniqueness", format!("{} meets both D_1 and D_2", f), None));
        }
        if let Some(c) = &odd_c {
            if !f.class_count(c)?.is_zero() {
                report.findings.push(Finding::new("uniqueness", format!("{} meets C = {}", f, c), None));
            }
        }
    }
    Ok(report)
}

fn exact(x: BigRational) -> IntervalRational {
    IntervalRational::exact(x)
}

fn ratio(num: &BigUint, den: &BigUint) -> IntervalRational {
    exact(ratio_big(num, den))
}

/// `2m [(2^{2/3}/3)^n · n e² √n / (3 √π)]^m + (3n² + 27n + 54)/(4n² − 9)`, enclosed.
pub fn product_display_bound(n: usize, m: usize, bits: u32) -> IntervalRational {
    let cube_root_4 = exact(big(4)).nth_root(3, bits);
    let base = cube_root_4.div(&exact(big(3))).round(bits).powi_rounded(n as u64, bits);
    let e = e_enclosure(bits);
    let sqrt_n = exact(big(n as u64)).sqrt(bits);
    let sqrt_pi = pi_enclosure(bits).sqrt(bits);
    let factor = exact(big(n as u64)).mul(&e.mul(&e)).mul(&sqrt_n).div(&sqrt_pi.scale(&big(3))).round(bits);
    let inner = base.mul(&factor).round(bits).powi_rounded(m as u64, bits);
    inner.scale(&big(2 * m as u64)).add(&exact(eric_sum_bound(n))).round(bits)
}

/// Upper bound for `d(H)`, `H = N_G(M^m)` with `M` a competitor. Exact for the
/// intransitive and imprimitive families; the primitive family uses `|N_{S_n}(M)| < 4^n`.
pub fn d_value_product(base: &StabilizerDescriptor, params: &GroupParams, bits: u32) -> Result<BoundReport> {
    let (n, m) = (params.n(), params.m());
    if !base.is_competitor() {
        return Err(Error::NotCompetitor(base.to_string()));
    }
    let primitive = matches!(base, StabilizerDescriptor::PrimitiveBound { .. });
    let order = base.normalizer_order();
    let half = &order / 2u32;
    let mut terms = Vec::new();
    for d in PiDescriptor::j_level(params)? {
        let (num, den) = match &d {
            PiDescriptor::Pi { i, b } => {
                let mi = StabilizerDescriptor::covering_representative(n, *i)?;
                let den = count_pi_in_normalizer(&mi, &d, params)?;
                let num = if primitive {
                    pow(&half, m - 1) * &order
                } else {
                    pow(&half, m - 1) * base.class_count(b)?
                };
                (num, den)
            }
            PiDescriptor::Pi0r { r, d_classes, .. } => {
                let num = if primitive {
                    pow(&half, m - r) * pow(&order, *r) * *r as u64
                } else {
                    count_pi_in_normalizer(base, &d, params)?
                };
                let _ = d_classes;
                (num, d.size(params))
            }
            PiDescriptor::Pi02Odd { c, .. } => {
                let num = if primitive {
                    pow(&half, m - 1) * &order
                } else {
                    pow(&half, m - 1) * base.class_count(c)?
                };
                (num, d.size(params))
            }
        };
        terms.push(BoundTerm::new(d.name(), ratio(&num, &den)));
    }
    let mut report = BoundReport::new(format!("d(H) for {}", base), n, m, terms, exact(BigRational::one()), true);
    // The class-only sum that the closed display bounds by (3n² + 27n + 54)/(4n² − 9).
    let mut class_sum = BigRational::zero();
    for i in index_set(n) {
        let b = b_class(n, i)?;
        let mi = StabilizerDescriptor::covering_representative(n, i)?;
        let num = if primitive { order.clone() } else { base.class_count(&b)? };
        class_sum += ratio_big(&num, &mi.class_count(&b)?);
    }
    let eric = eric_sum_bound(n);
    report.extra.push(Quantity::rational("class_ratio_sum", class_sum.clone(), Provenance::Formula));
    report.extra.push(Quantity::rational("class_ratio_sum_bound", eric.clone(), Provenance::Formula));
    report.extra.push(Quantity::flag("class_ratio_sum_within_bound", class_sum <= eric, Provenance::Formula));
    let display = product_display_bound(n, m, bits);
    report.extra.push(Quantity::interval("display_bound", display.clone()));
    report.extra.push(Quantity::flag("display_bound_below_one", display.certainly_lt(&exact(BigRational::one())), Provenance::Enclosure));
    if primitive {
        report.notes.push(format!("primitive family bounded through |N_S_n(M)| < {}", order));
    }
    Ok(report)
}

/// Upper bound for `d(N_G(Δ_φ))` with `t | m`: zero for `m = 2`, the closed display otherwise.
pub fn d_value_diagonal(t: usize, params: &GroupParams) -> Result<BoundReport> {
    let (n, m) = (params.n(), params.m());
    if t < 2 || m % t != 0 || !crate::arith::is_prime(t as u64) {
        return Err(Error::InvalidParameters(format!("t = {} is not a prime divisor of m = {}", t, m)));
    }
    if n == 6 {
        return Err(Error::InvalidParameters(String::from("diagonal type is not handled at n = 6")));
    }
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    let label = format!("d(H) for diagonal type, t = {}", t);
    if m == 2 {
        let mut report = BoundReport::new(label, n, m, vec![BoundTerm::new("all", exact(BigRational::zero()))], exact(BigRational::one()), true);
        report.notes.push(String::from("m = 2: H meets no Π-class (parity and conjugacy obstruction); see the enumeration oracle"));
        return Ok(report);
    }
    let nf = factorial(n);
    let h_order = pow(&(&nf / 2u32), m / t) * (2 * m) as u64;
    let mut terms = Vec::new();
    let r_den = pow(&nf, m);
    let r_num = &h_order * pow(&BigUint::from(2u32), m - 2) * pow(&BigUint::from(n), m);
    for r in prime_divisors(2 * m as u64) {
        terms.push(BoundTerm::new(format!("Pi0r(r={})", r), ratio(&r_num, &r_den)));
    }
    let i_den = pow(&factorial(n / 2), 2 * (m - 1));
    for i in index_set(n) {
        terms.push(BoundTerm::new(format!("Pi({})", i), ratio(&h_order, &i_den)));
    }
    let mut report = BoundReport::new(label, n, m, terms, exact(BigRational::one()), true);
    report.extra.push(Quantity::int("subgroup_order", h_order, Provenance::Formula));
    Ok(report)
}

/// Exhaustive scan of `N_G(Δ_φ)` for `m = 2`.
#[derive(Clone, Debug)]
pub struct DiagonalEnumeration {
    pub n: usize,
    pub order: u64,
    pub supplement_order: BigUint,
    /// Elements of the normalizer by γ-exponent.
    pub by_exponent: Vec<u64>,
    /// Elements with `k = 1`; all of them lie in some odd-class `Π_i` generalisation.
    pub odd_class_hits: u64,
    /// Elements with `k = 2` and `x_1τ`, `x_2τ` of different cycle types.
    pub pi02_hits: u64,
    pub findings: Vec<Finding>,
}

impl ToSummary for DiagonalEnumeration {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        s.quantities.push(Quantity::count("normalizer_order", self.order, Provenance::Enumeration));
        s.quantities.push(Quantity::int("supplement_formula_order", self.supplement_order.clone(), Provenance::Formula));
        for (k, c) in self.by_exponent.iter().enumerate() {
            s.quantities.push(Quantity::count(format!("exponent_{}", k), *c, Provenance::Enumeration));
        }
        s.quantities.push(Quantity::count("pi_class_intersections", self.odd_class_hits, Provenance::Enumeration));
        s.quantities.push(Quantity::count("pi02_intersections", self.pi02_hits, Provenance::Enumeration));
        s.findings = self.findings.clone();
        s
    }
}

pub fn diagonal_normalizer_enumeration(n: usize, phi: &Permutation, cap: u128) -> Result<DiagonalEnumeration> {
    let params = GroupParams::new(n, 2)?;
    let phi_m = vec![vec![phi.clone()]];
    let tau = params.tau();
    let mut by_exponent = vec![0u64; 4];
    let mut odd_class_hits = 0;
    let mut pi02_hits = 0;
    let gens = diagonal_generators(2, &phi_m, n, 2)?;
    for_each_element(params, cap, |g| {
        if normalizes_diagonal(&gens, 2, &phi_m, g) {
            by_exponent[g.k()] += 1;
            if g.k() == 1 {
                odd_class_hits += 1;
            }
            if g.k() == 2 {
                let a = (&g.xs()[0] * &tau).cycle_type();
                let b = (&g.xs()[1] * &tau).cycle_type();
                if a != b {
                    pi02_hits += 1;
                }
            }
        }
    })?;
    let order: u64 = by_exponent.iter().sum();
    let supplement_order = pow(&params.an_order(), 1) * 4u32;
    let mut findings = Vec::new();
    if BigUint::from(order) != supplement_order {
        findings.push(Finding::new(
            "diagonal_order",
            format!("enumerated order {} differs from 2m(n!/2)^(m/t) = {}; no element with odd γ-exponent normalizes Δ_φ", order, supplement_order),
            None,
        ));
    }
    if odd_class_hits + pi02_hits > 0 {
        findings.push(Finding::new("diagonal", format!("normalizer meets Π-classes: {} + {}", odd_class_hits, pi02_hits), None));
    }
    Ok(DiagonalEnumeration { n, order, supplement_order, by_exponent, odd_class_hits, pi02_hits, findings })
}

/// `(n/d)!^d · d! ≤ 2 (n/2)!²` for every even `n ≤ max_n` and divisor `2 ≤ d ≤ n/2`,
/// with equality exactly at `d = 2`.
#[derive(Clone, Debug, Default)]
pub struct LemmaAbReport {
    pub checked: u64,
    pub equalities: u64,
    pub findings: Vec<Finding>,
}

impl ToSummary for LemmaAbReport {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        s.quantities.push(Quantity::count("pairs_checked", self.checked, Provenance::Formula));
        s.quantities.push(Quantity::count("equalities", self.equalities, Provenance::Formula));
        s.findings = self.findings.clone();
        s
    }
}

pub fn lemma_ab_check(max_n: usize) -> LemmaAbReport {
    let f = factorial_table(max_n);
    let mut report = LemmaAbReport::default();
    for n in (4..=max_n).step_by(2) {
        let rhs = &f[n / 2] * &f[n / 2] * 2u32;
        for d in 2..=n / 2 {
            if n % d != 0 {
                continue;
            }
            let lhs = pow(&f[n / d], d) * &f[d];
            report.checked += 1;
            if lhs > rhs {
                report.findings.push(Finding::new("lemma_ab", format!("n = {}, d = {}: left side exceeds 2(n/2)!²", n, d), None));
            } else if lhs == rhs {
                report.equalities += 1;
                if d != 2 {
                    report.findings.push(Finding::new("lemma_ab", format!("n = {}, d = {}: unexpected equality", n, d), None));
                }
            } else if d == 2 {
                report.findings.push(Finding::new("lemma_ab", format!("n = {}: strict at d = 2", n), None));
            }
        }
    }
    report
}

/// For every competitor `H` and every `i ∈ I`: `|H| ≤ |N_{S_n}(M_i)|` or `H ∩ B_i = ∅`,
/// together with the factorial chain the argument relies on.
pub fn order_comparison_check(n: usize) -> Result<Summary> {
    let mut s = Summary::default();
    let f = factorial_table(n);
    let bip = &f[n / 2] * &f[n / 2] * 2u32;
    let third = &f[n / 3] * &f[n - n / 3];
    let shifted = &f[n / 3 - 1] * &f[n - n / 3 + 1];
    let cap = pow(&BigUint::from(4u32), n);
    let chain = [
        ("four_pow_n_le_bipartition", cap <= bip),
        ("bipartition_le_third_split", bip <= third),
        ("third_split_le_shifted_split", third <= shifted),
    ];
    for (name, ok) in chain {
        s.quantities.push(Quantity::flag(name, ok, Provenance::Formula));
        if !ok {
            s.findings.push(Finding::new("order_comparison", format!("n = {}: {} fails", n, name), None));
        }
    }
    let mut pairs = 0u64;
    for h in StabilizerDescriptor::competitors(n) {
        let primitive = matches!(h, StabilizerDescriptor::PrimitiveBound { .. });
        for i in index_set(n) {
            let mi = StabilizerDescriptor::covering_representative(n, i)?;
            let b = b_class(n, i)?;
            pairs += 1;
            let small = h.normalizer_order() <= mi.normalizer_order();
            let disjoint = !primitive && h.class_count(&b)?.is_zero();
            if !(small || disjoint) {
                s.findings.push(Finding::new("order_comparison", format!("n = {}: {} vs B({})", n, h, i), None));
            }
        }
    }
    s.quantities.push(Quantity::count("pairs_checked", pairs, Provenance::Formula));
    Ok(s)
}

/// Every member of the covering family at element level, with fast membership by index tables.
pub struct CoveringFamily {
    params: GroupParams,
    universe: Vec<StabilizerDescriptor>,
    lookup: BTreeMap<StabilizerDescriptor, usize>,
    tau_map: Vec<usize>,
    socle: Vec<usize>,
    /// `(index in I, coordinate structures as universe indices)`.
    tuples: Vec<(i32, Vec<usize>)>,
}

impl CoveringFamily {
    pub fn new(params: GroupParams) -> Result<Self> {
        let n = params.n();
        if n % 2 == 1 {
            return Err(Error::OddDegree(n));
        }
        let sgens = [Permutation::transposition(n, 0, 1), Permutation::long_cycle(n)];
        let mut universe = Vec::new();
        let mut lookup = BTreeMap::new();
        let mut bases = Vec::new();
        for i in index_set(n) {
            let b = StabilizerDescriptor::covering_representative(n, i)?;
            bases.push((i, b.clone()));
            if lookup.contains_key(&b) {
                continue;
            }
            let start = universe.len();
            lookup.insert(b.clone(), start);
            universe.push(b);
            let mut at = start;
            while at < universe.len() {
                for s in &sgens {
                    let img = universe[at].image(s)?;
                    if !lookup.contains_key(&img) {
                        lookup.insert(img.clone(), universe.len());
                        universe.push(img);
                    }
                }
                at += 1;
            }
        }
        let tau = params.tau();
        let tau_map = universe.iter().map(|u| lookup[&u.image(&tau).expect("degree")]).collect();
        let mut fam = CoveringFamily {
            params,
            universe,
            lookup,
            tau_map,
            socle: prime_divisors(2 * params.m() as u64).into_iter().map(|r| r as usize).collect(),
            tuples: Vec::new(),
        };
        let gens = group_generators(params);
        let gen_maps: Vec<(Vec<Vec<usize>>, usize)> =
            gens.iter().map(|g| fam.image_maps(g).map(|im| (im, g.k()))).collect::<Result<_>>()?;
        for (i, b) in bases {
            let start = vec![fam.lookup[&b]; params.m()];
            let mut seen = BTreeMap::new();
            seen.insert(start.clone(), ());
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for (maps, k) in &gen_maps {
                    let u = fam.act(&t, maps, *k);
                    if !seen.contains_key(&u) {
                        seen.insert(u.clone(), ());
                        stack.push(u);
                    }
                }
            }
            fam.tuples.extend(seen.into_keys().map(|t| (i, t)));
        }
        Ok(fam)
    }

    fn image_maps(&self, g: &WreathElement) -> Result<Vec<Vec<usize>>> {
        g.xs()
            .iter()
            .map(|x| self.universe.iter().map(|u| Ok(self.lookup[&u.image(x)?])).collect::<Result<Vec<usize>>>())
            .collect()
    }

    fn act(&self, t: &[usize], maps: &[Vec<usize>], k: usize) -> Vec<usize> {
        let mut cur: Vec<usize> = t.iter().zip(maps).map(|(&u, map)| map[u]).collect();
        for _ in 0..k {
            let last = self.tau_map[cur.pop().expect("m ≥ 1")];
            cur.insert(0, last);
        }
        cur
    }

    /// Number of subgroups in the family: should equal the σ formula.
    pub fn len(&self) -> usize {
        self.socle.len() + self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of product-type members per index `i`.
    pub fn class_sizes(&self) -> BTreeMap<i32, u64> {
        let mut out = BTreeMap::new();
        for (i, _) in &self.tuples {
            *out.entry(*i).or_insert(0) += 1;
        }
        out
    }

    /// Indices (socle members first, then product members) of the subgroups containing `g`.
    pub fn containing(&self, g: &WreathElement) -> Result<Vec<usize>> {
        let maps = self.image_maps(g)?;
        let mut out: Vec<usize> = self.socle.iter().enumerate().filter(|(_, &r)| g.k().is_multiple_of(r)).map(|(j, _)| j).collect();
        for (j, (_, t)) in self.tuples.iter().enumerate() {
            if self.act(t, &maps, g.k()) == *t {
                out.push(self.socle.len() + j);
            }
        }
        Ok(out)
    }

    pub fn describe(&self, idx: usize) -> MaximalClassDescriptor {
        if idx < self.socle.len() {
            return MaximalClassDescriptor::SocleIndex { r: self.socle[idx] };
        }
        let (_, t) = &self.tuples[idx - self.socle.len()];
        let base = self.universe[t[0]].clone();
        let conjugators = t[1..]
            .iter()
            .map(|&u| conjugator_between(&base, &self.universe[u]).expect("same orbit"))
            .collect();
        MaximalClassDescriptor::ProductNormalizer { base, conjugators: Some(conjugators) }
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }
}

/// An even permutation carrying structure `a` onto structure `b` of the same kind.
fn conjugator_between(a: &StabilizerDescriptor, b: &StabilizerDescriptor) -> Option<Permutation> {
    let n = a.degree();
    let (pa, pb): (Vec<u32>, Vec<u32>) = match (a, b) {
        (StabilizerDescriptor::KSet { subset: x, .. }, StabilizerDescriptor::KSet { subset: y, .. })
        | (StabilizerDescriptor::Bipartition { block: x, .. }, StabilizerDescriptor::Bipartition { block: y, .. }) => {
            if x.len() != y.len() {
                return None;
            }
            let mut mx = vec![false; n];
            let mut my = vec![false; n];
            x.iter().for_each(|&p| mx[p as usize] = true);
            y.iter().for_each(|&p| my[p as usize] = true);
            let rx = (0..n as u32).filter(|&p| !mx[p as usize]);
            let ry = (0..n as u32).filter(|&p| !my[p as usize]);
            (x.iter().copied().chain(rx).collect(), y.iter().copied().chain(ry).collect())
        }
        _ => return None,
    };
    let mut images = vec![0u32; n];
    for (p, q) in pa.iter().zip(&pb) {
        images[*p as usize] = *q;
    }
    let mut g = Permutation::from_images(images).ok()?;
    if !g.is_even() {
        let fix = a.odd_element().ok()?;
        g = &fix * &g;
    }
    Some(g)
}

/// Exhaustive covering check at small scale.
#[derive(Clone, Debug, Default)]
pub struct CoveringCheckReport {
    pub family_size: u64,
    pub sigma_formula: BigUint,
    pub elements: u64,
    pub uncovered: u64,
    pub witness_failures: u64,
    /// Histogram of "number of containing members".
    pub multiplicity: BTreeMap<usize, u64>,
    /// Marked elements lying in a number of members other than one, per Π-class.
    pub non_unique: BTreeMap<String, u64>,
    pub findings: Vec<Finding>,
}

impl ToSummary for CoveringCheckReport {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        s.quantities.push(Quantity::count("family_size", self.family_size, Provenance::Enumeration));
        s.quantities.push(Quantity::int("sigma_formula", self.sigma_formula.clone(), Provenance::Formula));
        s.quantities.push(Quantity::count("elements", self.elements, Provenance::Enumeration));
        s.quantities.push(Quantity::count("uncovered", self.uncovered, Provenance::Enumeration));
        s.quantities.push(Quantity::count("witness_failures", self.witness_failures, Provenance::Enumeration));
        for (k, v) in &self.multiplicity {
            s.quantities.push(Quantity::count(format!("containing_{}", k), *v, Provenance::Enumeration));
        }
        for (k, v) in &self.non_unique {
            s.quantities.push(Quantity::count(format!("non_unique.{}", k), *v, Provenance::Enumeration));
        }
        s.findings = self.findings.clone();
        s
    }
}

pub fn covering_exhaustive(params: GroupParams, cap: u128) -> Result<CoveringCheckReport> {
    let family = CoveringFamily::new(params)?;
    let pis = PiDescriptor::j_level(&params)?;
    let mut report = CoveringCheckReport {
        family_size: family.len() as u64,
        sigma_formula: sigma_formula(params.n(), params.m())?,
        ..Default::default()
    };
    if BigUint::from(report.family_size) != report.sigma_formula {
        report.findings.push(Finding::new(
            "covering",
            format!("family has {} members, formula gives {}", report.family_size, report.sigma_formula),
            None,
        ));
    }
    let mut err = None;
    let mut first_non_unique: BTreeMap<String, String> = BTreeMap::new();
    for_each_element(params, cap, |g| {
        if err.is_some() {
            return;
        }
        report.elements += 1;
        let inside = match family.containing(g) {
            Ok(v) => v,
            Err(e) => {
                err = Some(e);
                return;
            }
        };
        *report.multiplicity.entry(inside.len()).or_insert(0) += 1;
        if inside.is_empty() {
            report.uncovered += 1;
            if report.uncovered == 1 {
                report.findings.push(Finding::new("covering", "element in no member", Some(g.to_string())));
            }
        }
        match witness_member(g) {
            Ok(Some(w)) => {
                if !w.subgroup.contains(g).unwrap_or(false) {
                    report.witness_failures += 1;
                }
            }
            Ok(None) => report.witness_failures += 1,
            Err(e) => err = Some(e),
        }
        if inside.len() != 1 {
            for d in &pis {
                if d.contains(g) {
                    *report.non_unique.entry(d.name()).or_insert(0) += 1;
                    first_non_unique.entry(d.name()).or_insert_with(|| {
                        let names: Vec<String> = inside.iter().map(|&j| family.describe(j).to_string()).collect();
                        format!("{} in {}", g, names.join(" "))
                    });
                }
            }
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    if report.witness_failures > 0 {
        report.findings.push(Finding::new("witness", format!("{} elements without a verified witness", report.witness_failures), None));
    }
    for (name, count) in &report.non_unique {
        report.findings.push(Finding::new(
            "uniqueness",
            format!("{} elements of {} lie in more than one covering member", count, name),
            first_non_unique.get(name).cloned(),
        ));
    }
    Ok(report)
}

/// Orbit of `N_G(M^m)` under conjugation, compared with the class size.
pub fn product_class_orbit(params: GroupParams, base: &StabilizerDescriptor, cap: usize) -> Result<(u64, BigUint)> {
    let start = vec![base.clone(); params.m()];
    let gens = group_generators(params);
    let mut seen = BTreeMap::new();
    seen.insert(start.clone(), ());
    let mut stack = vec![start];
    while let Some(t) = stack.pop() {
        for g in &gens {
            let u = act_on_tuple(&t, g)?;
            if !seen.contains_key(&u) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { size: seen.len() as u128 + 1, cap: cap as u128 });
                }
                seen.insert(u.clone(), ());
                stack.push(u);
            }
        }
    }
    let expected = MaximalClassDescriptor::product_class(base.clone()).class_size(&params).expect("product class");
    Ok((seen.len() as u64, expected))
}

/// Consolidated check of the three conditions for one `(n, m)`.
#[derive(Clone, Debug)]
pub struct MinimalCoveringReport {
    pub params: GroupParams,
    pub sigma: BigUint,
    pub design: CoveringDesign,
    pub closure: PiCheckReport,
    pub uniqueness: UniquenessReport,
    pub competitor_bounds: Vec<BoundReport>,
    pub diagonal_bounds: Vec<BoundReport>,
    pub order_comparisons: Summary,
    pub certified: bool,
}

impl ToSummary for MinimalCoveringReport {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        s.quantities.push(Quantity::int("sigma", self.sigma.clone(), Provenance::Formula));
        s.extend("design", self.design.summary());
        s.extend("closure", self.closure.summary());
        s.extend("uniqueness", self.uniqueness.summary());
        for b in &self.competitor_bounds {
            s.extend(&format!("competitor[{}]", b.label), b.summary());
        }
        for b in &self.diagonal_bounds {
            s.extend(&format!("diagonal[{}]", b.label), b.summary());
        }
        s.extend("order_comparisons", self.order_comparisons.clone());
        s.quantities.push(Quantity::flag("certified", self.certified, Provenance::Formula));
        if self.certified {
            s.notes.push(format!("unique minimal covering certified at n = {}, m = {}", self.params.n(), self.params.m()));
        }
        s
    }
}

pub fn verify_minimal_covering(params: GroupParams, trials: u64, seed: u64, bits: u32) -> Result<MinimalCoveringReport> {
    let (n, m) = (params.n(), params.m());
    if n % 6 != 0 {
        return Err(Error::InvalidParameters(format!("n = {} is not divisible by 6", n)));
    }
    let sigma = sigma_formula(n, m)?;
    let design = covering_classes(n, m)?;
    let closure = closure_and_disjointness_check(params, trials, seed)?;
    let uniqueness = uniqueness_check(n, m)?;
    let mut competitor_bounds = Vec::new();
    for c in StabilizerDescriptor::competitors(n) {
        competitor_bounds.push(d_value_product(&c, &params, bits)?);
    }
    let mut diagonal_bounds = Vec::new();
    if n != 6 {
        for t in prime_divisors(m as u64) {
            diagonal_bounds.push(d_value_diagonal(t as usize, &params)?);
        }
    }
    let order_comparisons = order_comparison_check(n)?;
    let certified = design.total == sigma
        && closure.findings.is_empty()
        && uniqueness.passed()
        && competitor_bounds.iter().chain(&diagonal_bounds).all(|b| b.verdict)
        && order_comparisons.passed();
    Ok(MinimalCoveringReport {
        params,
        sigma,
        design,
        closure,
        uniqueness,
        competitor_bounds,
        diagonal_bounds,
        order_comparisons,
        certified,
    })
}

/// `|N_G(M^m) ∩ Π| / |Π|` as an exact rational; used by reports.
pub fn intersection_density(base: &StabilizerDescriptor, pi: &PiDescriptor, params: &GroupParams) -> Result<BigRational> {
    Ok(ratio_big(&count_pi_in_normalizer(base, pi, params)?, &pi.size(params)))
}

/// Exact rational from an integer, for callers assembling bounds.
pub fn integer(x: &BigUint) -> BigRational {
    rational_from_biguint(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn params(n: usize, m: usize) -> GroupParams {
        GroupParams::new(n, m).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_formula(30, 1).unwrap(), BigUint::from(100522847u64));
        assert_eq!(sigma_formula(6, 2).unwrap(), BigUint::from(137u32));
        for n in (30..=90).step_by(6) {
            for m in 1..=6 {
                assert_eq!(covering_classes(n, m).unwrap().total, sigma_formula(n, m).unwrap());
            }
        }
        assert_eq!(covering_classes(30, 4).unwrap().classes.len(), 1 + 10);
    }

    #[test]
    fn witnesses_contain_their_element() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (n, m) in [(12, 2), (12, 3), (18, 4), (30, 5)] {
            let p = params(n, m);
            for _ in 0..40 {
                let g = WreathElement::random(p, &mut rng);
                let w = witness_member(&g).unwrap().unwrap();
                assert!(w.subgroup.contains(&g).unwrap(), "{} {:?}", g, w.subgroup);
            }
        }
    }

    #[test]
    fn witness_for_socle_and_pi() {
        let p = params(6, 2);
        let w = witness_member(&WreathElement::identity(p)).unwrap().unwrap();
        assert_eq!(w.subgroup, MaximalClassDescriptor::SocleIndex { r: 2 });
        let pi = crate::pi::base_point(p).unwrap();
        let w = witness_member(&pi).unwrap().unwrap();
        match &w.subgroup {
            MaximalClassDescriptor::ProductNormalizer { base, .. } => assert_eq!(base.covering_index(), Some(-1)),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn counting_example() {
        let p = params(6, 2);
        let bip = StabilizerDescriptor::canonical_bipartition(6).unwrap();
        let pim1 = PiDescriptor::pi(6, -1).unwrap();
        assert_eq!(count_pi_in_normalizer(&bip, &pim1, &p).unwrap(), BigUint::from(432u32));
        let k1 = StabilizerDescriptor::canonical_kset(30, 1).unwrap();
        let p30 = params(30, 2);
        let pim1 = PiDescriptor::pi(30, -1).unwrap();
        assert!(count_pi_in_normalizer(&k1, &pim1, &p30).unwrap().is_zero());
    }

    #[test]
    fn uniqueness_examples() {
        assert!(uniqueness_check(30, 2).unwrap().passed());
        assert!(uniqueness_check(30, 3).unwrap().passed());
        let r = uniqueness_check(6, 2).unwrap();
        assert!(!r.passed());
        assert_eq!(r.entries.iter().find(|e| e.i == 1).unwrap().members.len(), 2);
    }

    #[test]
    fn competitor_bounds_at_30() {
        let p = params(30, 2);
        for c in StabilizerDescriptor::competitors(30) {
            let b = d_value_product(&c, &p, 170).unwrap();
            assert!(b.verdict, "{} {}", c, b.total);
        }
        assert!(d_value_diagonal(3, &params(30, 3)).unwrap().verdict);
        assert!(d_value_diagonal(2, &params(30, 4)).unwrap().verdict);
        assert!(d_value_product(&StabilizerDescriptor::canonical_bipartition(30).unwrap(), &p, 170).is_err());
    }

    #[test]
    fn display_bound_at_30_is_below_one() {
        let b = product_display_bound(30, 2, 170);
        assert!(b.certainly_lt(&exact(BigRational::one())));
    }

    #[test]
    fn lemma_ab_small() {
        let r = lemma_ab_check(60);
        assert!(r.findings.is_empty(), "{:?}", r.findings);
    }

    #[test]
    fn orders_at_30() {
        assert!(order_comparison_check(30).unwrap().passed());
    }

    #[test]
    fn family_size_matches_formula() {
        let fam = CoveringFamily::new(params(6, 2)).unwrap();
        assert_eq!(fam.len(), 137);
        let fam = CoveringFamily::new(params(12, 1)).unwrap();
        assert_eq!(BigUint::from(fam.len()), sigma_formula(12, 1).unwrap());
    }

    #[test]
    fn product_class_is_one_orbit() {
        let p = params(6, 2);
        for i in index_set(6) {
            let b = StabilizerDescriptor::covering_representative(6, i).unwrap();
            let (orbit, expected) = product_class_orbit(p, &b, 10_000).unwrap();
            assert_eq!(BigUint::from(orbit), expected);
        }
    }

    #[test]
    fn described_members_match_tuples() {
        let p = params(6, 2);
        let fam = CoveringFamily::new(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let g = WreathElement::random(p, &mut rng);
            for j in fam.containing(&g).unwrap() {
                assert!(fam.describe(j).contains(&g).unwrap());
            }
        }
    }
}
