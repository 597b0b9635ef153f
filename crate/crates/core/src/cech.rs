//! Local cohomology from the degree-`a` strand of the Čech complex on
//! `x_1, ..., x_n`.
//!
//! For a subset `F ⊆ [n]` the piece `((S/I)_{x_F})_a` is at most
//! one-dimensional, spanned by the image of `x^a`. It vanishes unless every
//! negative coordinate of `a` is inverted (`supp_-(a) ⊆ F`), and it vanishes
//! when `x^a` lands in `I_{x_F}`, i.e. when some generator `m` divides
//! `x^{a + N·e_F}` for large `N`: `ν_i(m) <= a_i` for all `i ∉ F`.
//! Localization maps send `x^a` to `x^a`, so the strand is a complex of
//! 0/1-dimensional spaces with the usual alternating Čech signs.
//!
//! This module deliberately depends only on `monomial`, `linalg` and
//! `table`; it is the cross-check for [`crate::takayama`].

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{check_len, Error, Result};
use crate::linalg::{rank, FieldSpec, SparseMatrix};
use crate::monomial::{rho, MonomialIdeal, MultiDegree};
use crate::table::LcTable;

const MAX_CECH_VARS: usize = 30;

fn subset_bits(subset: &[usize], n: usize) -> Result<u64> {
    let mut bits = 0u64;
    for &i in subset {
        if i >= n {
            return Err(Error::Range(format!("index {i} outside 0..{n}")));
        }
        bits |= 1 << i;
    }
    Ok(bits)
}

fn piece_nonzero(ideal: &MonomialIdeal, a: &MultiDegree, inverted: u64) -> bool {
    let n = ideal.n_vars();
    let is_inverted = |i: usize| inverted & (1 << i) != 0;
    for i in 0..n {
        if a.get(i) < 0 && !is_inverted(i) {
            // x^a is not an element of the localization at all
            return false;
        }
    }
    let kills_xa = |m: &crate::monomial::Monomial| {
        (0..n)
            .filter(|&i| !is_inverted(i))
            .all(|i| i64::from(m.nu(i)) <= a.get(i))
    };
    !ideal.gens().iter().any(kills_xa)
}

/// Whether `((S/I)_{x_F})_a` is nonzero, with `F` given as 0-based indices.
pub fn cech_piece_nonzero(
    ideal: &MonomialIdeal,
    a: &MultiDegree,
    subset: &[usize],
) -> Result<bool> {
    check_len(ideal.n_vars(), a.len())?;
    let bits = subset_bits(subset, ideal.n_vars())?;
    Ok(piece_nonzero(ideal, a, bits))
}

/// The degree-`a` strand: `basis[p]` lists the subsets of size `p` whose
/// piece is nonzero, `differentials[p]` maps `C^p -> C^{p+1}`.
#[derive(Clone, Debug)]
pub struct CechStrand {
    pub n: usize,
    pub basis: Vec<Vec<u64>>,
    pub differentials: Vec<SparseMatrix>,
}

impl CechStrand {
    pub fn build(ideal: &MonomialIdeal, a: &MultiDegree) -> Result<Self> {
        let n = ideal.n_vars();
        check_len(n, a.len())?;
        if n > MAX_CECH_VARS {
            return Err(Error::Range(format!(
                "{n} variables is too many for the Čech strand"
            )));
        }
        let mut basis: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
        for bits in 0u64..(1u64 << n) {
            if piece_nonzero(ideal, a, bits) {
                basis[bits.count_ones() as usize].push(bits);
            }
        }
        let mut differentials = Vec::with_capacity(n);
        for p in 0..n {
            let target: HashMap<u64, usize> = basis[p + 1]
                .iter()
                .enumerate()
                .map(|(r, &b)| (b, r))
                .collect();
            let mut d = SparseMatrix::zeros(basis[p + 1].len(), basis[p].len());
            for (col, &src) in basis[p].iter().enumerate() {
                for j in (0..n).filter(|&j| src & (1 << j) == 0) {
                    let dst = src | (1 << j);
                    if let Some(&row) = target.get(&dst) {
                        let position = (dst & ((1u64 << j) - 1)).count_ones();
                        d.set(row, col, if position.is_multiple_of(2) { 1 } else { -1 })?;
                    }
                }
            }
            differentials.push(d);
        }
        let strand = CechStrand {
            n,
            basis,
            differentials,
        };
        debug_assert!(
            strand.squares_to_zero(),
            "Čech differential is not a complex"
        );
        Ok(strand)
    }

    /// `d^{p+1} ∘ d^p = 0` for every `p`, over the integers.
    pub fn squares_to_zero(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[1].mul(&w[0]).map(|m| m.is_zero()).unwrap_or(false))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    /// Nonzero cohomology dimensions of the strand, keyed by `p`.
    pub fn cohomology(&self, field: FieldSpec) -> BTreeMap<i64, usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(|d| rank(d, field)).collect();
        let mut out = BTreeMap::new();
        for p in 0..=self.n {
            let outgoing = ranks.get(p).copied().unwrap_or(0);
            let incoming = if p == 0 { 0 } else { ranks[p - 1] };
            let h = self.basis[p].len() - outgoing - incoming;
            if h > 0 {
                out.insert(p as i64, h);
            }
        }
        out
    }
}

/// All nonzero `dim H^i_m(S/I)_a` via the Čech strand.
pub fn cech_cohomology_dims(
    ideal: &MonomialIdeal,
    a: &MultiDegree,
    field: FieldSpec,
) -> Result<BTreeMap<i64, usize>> {
    Ok(CechStrand::build(ideal, a)?.cohomology(field))
}

pub fn cech_cohomology_dim(
    ideal: &MonomialIdeal,
    a: &MultiDegree,
    i: i64,
    field: FieldSpec,
) -> Result<usize> {
    Ok(cech_cohomology_dims(ideal, a, field)?
        .get(&i)
        .copied()
        .unwrap_or(0))
}

fn degree_box(ideal: &MonomialIdeal) -> Vec<MultiDegree> {
    let r = rho(ideal);
    let mut out = vec![Vec::new()];
    for &ri in r.entries() {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (-1..i64::from(ri)).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(MultiDegree::new).collect()
}

/// The local cohomology table over the canonical box, computed through
/// Čech strands only.
pub fn oracle_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<LcTable> {
    let rows: Vec<(MultiDegree, BTreeMap<i64, usize>)> = degree_box(ideal)
        .into_par_iter()
        .map(|a| cech_cohomology_dims(ideal, &a, field).map(|d| (a, d)))
        .collect::<Result<_>>()?;
    Ok(LcTable::from_rows(ideal.clone(), field, rows))
}
