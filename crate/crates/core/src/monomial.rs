//! Monomials, monomial ideals and multidegrees.
//!
//! Variables are addressed by their 0-based position in the ambient ring.
//! A [`MonomialIdeal`] always stores its minimal generating set `G(I)`,
//! sorted in canonical order, so two ideals are equal iff they are equal as
//! Rust values.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::{check_len, Error, Result};

/// A monomial `x_1^{b_1} ... x_n^{b_n}` stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: vec![0; n],
        }
    }

    pub fn n_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of variable `i`.
    pub fn nu(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }
}

/// Canonical order: total degree ascending, then lexicographically
/// descending exponent vectors (so `x^2` precedes `x*y`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// True iff `m1` divides `m2`.
pub fn divides(m1: &Monomial, m2: &Monomial) -> Result<bool> {
    check_len(m1.n_vars(), m2.n_vars())?;
    Ok(divides_unchecked(m1, m2))
}

fn divides_unchecked(m1: &Monomial, m2: &Monomial) -> bool {
    m1.exponents.iter().zip(&m2.exponents).all(|(a, b)| a <= b)
}

/// Reduces a list of monomials to the divisibility-minimal, deduplicated,
/// canonically sorted generating set of the ideal they generate.
pub fn minimalize(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    if let Some(first) = gens.first() {
        for m in gens {
            check_len(first.n_vars(), m.n_vars())?;
        }
    }
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    // A divisor always has degree at most that of its multiple, so scanning
    // in ascending degree order only needs to look back at kept monomials.
    let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if !kept.iter().any(|k| divides_unchecked(k, &m)) {
            kept.push(m);
        }
    }
    Ok(kept)
}

/// A multidegree `a` in `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    entries: Vec<i64>,
}

impl MultiDegree {
    pub fn new(entries: Vec<i64>) -> Self {
        MultiDegree { entries }
    }

    pub fn zero(n: usize) -> Self {
        MultiDegree {
            entries: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> i64 {
        self.entries[i]
    }

    /// Replaces every negative entry by `-1`. Local cohomology of a monomial
    /// quotient only sees the negative support, not the negative values.
    pub fn truncated(&self) -> MultiDegree {
        MultiDegree {
            entries: self.entries.iter().map(|&a| a.max(-1)).collect(),
        }
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// `supp_-(a) = { i | a_i < 0 }`, as sorted 0-based indices.
pub fn negative_support(a: &MultiDegree) -> Vec<usize> {
    a.entries
        .iter()
        .enumerate()
        .filter(|(_, &x)| x < 0)
        .map(|(i, _)| i)
        .collect()
}

/// Per-variable maximal exponents over `G(I)`, each clamped below by 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rho(Vec<u32>);

impl Rho {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::Range("rho entries must be positive".into()));
        }
        Ok(Rho(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// `ρ = ρ_1 + ... + ρ_n`, the number of variables of the polarization.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&r| r as usize).sum()
    }

    /// The multidegree `ρ - 1`.
    pub fn minus_one(&self) -> MultiDegree {
        MultiDegree::new(self.0.iter().map(|&r| i64::from(r) - 1).collect())
    }
}

/// A monomial ideal in `k[x_1, ..., x_n]`, stored via its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    var_names: Vec<String>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds an ideal from arbitrary generators; the generating set is
    /// minimalized.
    pub fn new(var_names: Vec<String>, gens: Vec<Monomial>) -> Result<Self> {
        let mut seen = HashSet::new();
        for name in &var_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::Domain(format!("duplicate variable name `{name}`")));
            }
        }
        for m in &gens {
            check_len(var_names.len(), m.n_vars())?;
        }
        let gens = minimalize(&gens)?;
        Ok(MonomialIdeal { var_names, gens })
    }

    /// Ideal with generated variable names `x1, ..., xn`.
    pub fn with_default_names(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        Self::new(default_var_names(n), gens)
    }

    pub fn zero(var_names: Vec<String>) -> Result<Self> {
        Self::new(var_names, Vec::new())
    }

    pub fn unit(var_names: Vec<String>) -> Result<Self> {
        let n = var_names.len();
        Self::new(var_names, vec![Monomial::one(n)])
    }

    pub fn n_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    /// The minimal generating set `G(I)` in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(Monomial::is_square_free)
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        check_len(self.n_vars(), m.n_vars())?;
        Ok(self.gens.iter().any(|g| divides_unchecked(g, m)))
    }

    /// Same generators under a new list of variable names.
    pub fn renamed(&self, var_names: Vec<String>) -> Result<Self> {
        Self::new(var_names, self.gens.clone())
    }
}

/// `x1, ..., xn`.
pub fn default_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// `ρ_i = max(1, max{ν_i(m) | m ∈ G(I)})`.
pub fn rho(ideal: &MonomialIdeal) -> Rho {
    let entries = (0..ideal.n_vars())
        .map(|i| {
            ideal
                .gens()
                .iter()
                .map(|m| m.nu(i))
                .max()
                .unwrap_or(0)
                .max(1)
        })
        .collect();
    Rho(entries)
}
