//! Exact coefficient fields and sparse rank.
//!
//! Matrices carry integer entries; [`rank`] interprets them in the chosen
//! field. Rationals use arbitrary-precision fractions, prime fields use
//! `u64` modular arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Coefficient field `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// `GF(p)`; `p` must be a prime below `2^31`.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::Field(format!("{p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

/// `q` or `gf:<p>`.
impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("gf:")
            .ok_or_else(|| Error::Field(format!("expected `q` or `gf:<p>`, got `{s}`")))?;
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Field(format!("bad characteristic `{p}`")))?;
        FieldSpec::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Sparse integer matrix; only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), i64>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), 1);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v)?;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries.get(&(row, col)).copied().unwrap_or(0)
    }

    /// Sets an entry; writing zero removes it.
    pub fn set(&mut self, row: usize, col: usize, value: i64) -> Result<()> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::Range(format!(
                "entry ({row}, {col}) outside {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if value == 0 {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), &v)| ((c, r), v))
                .collect(),
        }
    }

    /// Integer product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
        for (r, c, v) in rhs.iter() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (r, k, v) in self.iter() {
            if let Some(row) = by_row.get(&k) {
                for &(c, w) in row {
                    *acc.entry((r, c)).or_insert(0) += v * w;
                }
            }
        }
        acc.retain(|_, v| *v != 0);
        Ok(SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries: acc,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (r, c, v) in self.iter() {
            rows[r].push((c, v));
        }
        rows
    }
}

/// Field arithmetic used by the elimination routine.
trait Arith {
    type Elem: Clone;
    fn lift(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    /// `-x / pivot`, the multiplier that clears `x` against `pivot`.
    fn elimination_factor(&self, x: &Self::Elem, pivot: &Self::Elem) -> Self::Elem;
    /// `x + f * y`.
    fn mul_add(&self, x: &Self::Elem, f: &Self::Elem, y: &Self::Elem) -> Self::Elem;
}

struct Rationals;

impl Arith for Rationals {
    type Elem = BigRational;
    fn lift(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn elimination_factor(&self, x: &BigRational, pivot: &BigRational) -> BigRational {
        -(x / pivot)
    }
    fn mul_add(&self, x: &BigRational, f: &BigRational, y: &BigRational) -> BigRational {
        x + f * y
    }
}

struct Modular(u64);

impl Modular {
    fn inv(&self, x: u64) -> u64 {
        // p is prime, so x^(p-2) is the inverse.
        let p = self.0;
        let (mut base, mut exp, mut acc) = (x % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }
}

impl Arith for Modular {
    type Elem = u64;
    fn lift(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn elimination_factor(&self, x: &u64, pivot: &u64) -> u64 {
        let p = self.0;
        (p - x * self.inv(*pivot) % p) % p
    }
    fn mul_add(&self, x: &u64, f: &u64, y: &u64) -> u64 {
        (x + f * y) % self.0
    }
}

type Row<E> = Vec<(usize, E)>;

/// `row + f * pivot_row`, both sorted by column; zeros dropped.
fn combine<A: Arith>(
    ar: &A,
    row: &Row<A::Elem>,
    f: &A::Elem,
    pivot_row: &Row<A::Elem>,
) -> Row<A::Elem> {
    let mut out = Vec::with_capacity(row.len() + pivot_row.len());
    let (mut i, mut j) = (0, 0);
    let zero = ar.lift(0);
    while i < row.len() || j < pivot_row.len() {
        let take_row = j >= pivot_row.len() || (i < row.len() && row[i].0 < pivot_row[j].0);
        let take_pivot = i >= row.len() || (j < pivot_row.len() && pivot_row[j].0 < row[i].0);
        let (col, value) = if take_row {
            let e = (row[i].0, row[i].1.clone());
            i += 1;
            e
        } else if take_pivot {
            let e = (pivot_row[j].0, ar.mul_add(&zero, f, &pivot_row[j].1));
            j += 1;
            e
        } else {
            let e = (row[i].0, ar.mul_add(&row[i].1, f, &pivot_row[j].1));
            i += 1;
            j += 1;
            e
        };
        if !ar.is_zero(&value) {
            out.push((col, value));
        }
    }
    out
}

fn rank_with<A: Arith>(ar: &A, m: &SparseMatrix) -> usize {
    // Pivot rows keyed by their leading column.
    let mut pivots: BTreeMap<usize, Row<A::Elem>> = BTreeMap::new();
    for raw in m.sparse_rows() {
        let mut row: Row<A::Elem> = raw
            .into_iter()
            .map(|(c, v)| (c, ar.lift(v)))
            .filter(|(_, v)| !ar.is_zero(v))
            .collect();
        while let Some((lead, lead_val)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(pivot_row) => {
                    let f = ar.elimination_factor(&lead_val, &pivot_row[0].1);
                    row = combine(ar, &row, &f, pivot_row);
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Rank of `m` over `field`, computed exactly.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    if m.is_zero() {
        return 0;
    }
    match field {
        FieldSpec::Rationals => rank_with(&Rationals, m),
        FieldSpec::PrimeField(p) => rank_with(&Modular(u64::from(p)), m),
    }
}
