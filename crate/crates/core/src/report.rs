//! Report building blocks shared by the verification routines.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::interval::IntervalRational;

/// How a reported number was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Formula,
    Enumeration,
    Sampled,
    Enclosure,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Formula => "formula",
            Provenance::Enumeration => "enumeration",
            Provenance::Sampled => "sampled",
            Provenance::Enclosure => "enclosure",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Integer(BigUint),
    Rational(BigRational),
    Interval(IntervalRational),
    Bool(bool),
    Text(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Quantity {
    pub name: String,
    pub value: Value,
    pub provenance: Provenance,
}

impl Quantity {
    pub fn new(name: impl Into<String>, value: Value, provenance: Provenance) -> Self {
        Quantity { name: name.into(), value, provenance }
    }

    pub fn int(name: impl Into<String>, v: BigUint, p: Provenance) -> Self {
        Self::new(name, Value::Integer(v), p)
    }

    pub fn count(name: impl Into<String>, v: u64, p: Provenance) -> Self {
        Self::new(name, Value::Integer(BigUint::from(v)), p)
    }

    pub fn rational(name: impl Into<String>, v: BigRational, p: Provenance) -> Self {
        Self::new(name, Value::Rational(v), p)
    }

    pub fn interval(name: impl Into<String>, v: IntervalRational) -> Self {
        Self::new(name, Value::Interval(v), Provenance::Enclosure)
    }

    pub fn flag(name: impl Into<String>, v: bool, p: Provenance) -> Self {
        Self::new(name, Value::Bool(v), p)
    }

    pub fn text(name: impl Into<String>, v: impl Into<String>, p: Provenance) -> Self {
        Self::new(name, Value::Text(v.into()), p)
    }
}

/// A failed check, with the exact witness when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub check: String,
    pub message: String,
    pub witness: Option<String>,
}

impl Finding {
    pub fn new(check: impl Into<String>, message: impl Into<String>, witness: Option<String>) -> Self {
        Finding { check: check.into(), message: message.into(), witness }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.message)?;
        if let Some(w) = &self.witness {
            write!(f, " [witness {}]", w)?;
        }
        Ok(())
    }
}

/// Flat view of a typed report.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Summary {
    pub quantities: Vec<Quantity>,
    pub findings: Vec<Finding>,
    pub notes: Vec<String>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn extend(&mut self, prefix: &str, other: Summary) {
        for mut q in other.quantities {
            if !prefix.is_empty() {
                q.name = alloc::format!("{}.{}", prefix, q.name);
            }
            self.quantities.push(q);
        }
        self.findings.extend(other.findings);
        self.notes.extend(other.notes);
    }
}

pub trait ToSummary {
    fn summary(&self) -> Summary;
}

/// Splitmix64 step, used to derive per-trial seeds from one user seed.
pub fn derive_seed(seed: u64, stream: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(index.wrapping_mul(0xD1B5_4A32_D192_ED03));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// One named term of an inequality chain.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundTerm {
    pub name: String,
    pub value: IntervalRational,
}

impl BoundTerm {
    pub fn new(name: impl Into<String>, value: IntervalRational) -> Self {
        BoundTerm { name: name.into(), value }
    }
}

/// A sum of upper bounds compared against a threshold.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub label: String,
    pub n: usize,
    pub m: usize,
    pub terms: Vec<BoundTerm>,
    pub total: IntervalRational,
    /// Only its lower end matters.
    pub threshold: IntervalRational,
    /// `total < threshold` when set, `total ≤ threshold` otherwise.
    pub strict: bool,
    pub verdict: bool,
    /// `threshold - total`, positive when the verdict holds.
    pub margin: IntervalRational,
    pub extra: Vec<Quantity>,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(label: impl Into<String>, n: usize, m: usize, terms: Vec<BoundTerm>, threshold: IntervalRational, strict: bool) -> Self {
        let mut total = IntervalRational::exact(BigRational::from_integer(0.into()));
        for t in &terms {
            total = total.add(&t.value);
        }
        let verdict = if strict { total.certainly_lt(&threshold) } else { total.certainly_le(&threshold) };
        let margin = threshold.sub(&total);
        BoundReport { label: label.into(), n, m, terms, total, threshold, strict, verdict, margin, extra: Vec::new(), notes: Vec::new() }
    }
}

fn bound_quantity(name: String, v: &IntervalRational) -> Quantity {
    if v.is_exact() {
        Quantity::rational(name, v.lo().clone(), Provenance::Formula)
    } else {
        Quantity::interval(name, v.clone())
    }
}

impl ToSummary for BoundReport {
    fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for t in &self.terms {
            s.quantities.push(bound_quantity(alloc::format!("term.{}", t.name), &t.value));
        }
        s.quantities.push(bound_quantity(String::from("total"), &self.total));
        s.quantities.push(bound_quantity(String::from("threshold"), &self.threshold));
        s.quantities.push(bound_quantity(String::from("margin"), &self.margin));
        let prov = if self.total.is_exact() && self.threshold.is_exact() { Provenance::Formula } else { Provenance::Enclosure };
        s.quantities.push(Quantity::flag("verdict", self.verdict, prov));
        s.quantities.extend(self.extra.iter().cloned());
        s.notes = self.notes.clone();
        if !self.verdict {
            s.findings.push(Finding::new(
                "bound",
                alloc::format!("{} at n={}, m={}: total {} not below {}", self.label, self.n, self.m, self.total, self.threshold),
                None,
            ));
        }
        s
    }
}
