//! Graded local cohomology `H^i_m(S/I)_a` of a monomial quotient, computed
//! from the reduced cohomology of the degree complex `Δ_a`:
//!
//! `dim H^i_m(S/I)_a = dim H̃^{i - |supp_-(a)| - 1}(Δ_a; k)`.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{check_len, Error, Result};
use crate::linalg::FieldSpec;
use crate::monomial::{negative_support, rho, MonomialIdeal, MultiDegree};
use crate::simplicial::{Face, SimplicialComplex, MAX_VERTICES};
use crate::table::{depth_and_dim_from_table, DepthDim, LcTable};

/// `Δ_a = { F ∖ supp_-(a) | supp_-(a) ⊆ F ⊆ [n], ∀m ∈ G(I) ∃i ∉ F: a_i < ν_i(m) }`.
///
/// Both containments are inclusive, so `F = supp_-(a)` contributes the empty
/// face. Returns the void complex when no `F` qualifies.
pub fn takayama_complex(ideal: &MonomialIdeal, a: &MultiDegree) -> Result<SimplicialComplex> {
    let n = ideal.n_vars();
    check_len(n, a.len())?;
    if n > MAX_VERTICES {
        return Err(Error::Range(format!(
            "{n} variables exceeds {MAX_VERTICES}"
        )));
    }
    let negative = Face::from_vertices(&negative_support(a))?;
    let free: Vec<usize> = (0..n).filter(|&i| !negative.contains(i)).collect();

    let admissible = |f: Face| {
        ideal
            .gens()
            .iter()
            .all(|m| (0..n).any(|i| !f.contains(i) && a.get(i) < i64::from(m.nu(i))))
    };

    let mut faces = Vec::new();
    for size in 0..=free.len() {
        for extra in free.iter().copied().combinations(size) {
            let mut f = negative;
            for v in &extra {
                f = f.with(*v);
            }
            if admissible(f) {
                faces.push(Face::from_bits(f.bits() & !negative.bits()));
            }
        }
    }
    SimplicialComplex::from_faces(n, faces)
}

/// All nonzero `dim H^i_m(S/I)_a`, keyed by `i`.
pub fn lc_dims(
    ideal: &MonomialIdeal,
    a: &MultiDegree,
    field: FieldSpec,
) -> Result<BTreeMap<i64, usize>> {
    let complex = takayama_complex(ideal, a)?;
    let shift = negative_support(a).len() as i64 + 1;
    Ok(complex
        .reduced_cohomology_dims(field)
        .into_iter()
        .map(|(d, h)| (d + shift, h))
        .collect())
}

/// `dim_k H^i_m(S/I)_a`.
pub fn lc_dim(ideal: &MonomialIdeal, a: &MultiDegree, i: i64, field: FieldSpec) -> Result<usize> {
    Ok(lc_dims(ideal, a, field)?.get(&i).copied().unwrap_or(0))
}

/// Every `a` with `-1 <= a_i <= ρ_i - 1`, in lexicographic order.
///
/// Any other degree either truncates into this box (negative entries to -1)
/// with identical local cohomology, or has some `a_i >= ρ_i` and vanishes.
pub fn canonical_box(ideal: &MonomialIdeal) -> Vec<MultiDegree> {
    let r = rho(ideal);
    if r.is_empty() {
        return vec![MultiDegree::new(Vec::new())];
    }
    r.entries()
        .iter()
        .map(|&ri| -1..i64::from(ri))
        .multi_cartesian_product()
        .map(MultiDegree::new)
        .collect()
}

/// Evaluates `lc_dims` over the canonical box.
pub fn lc_table(ideal: &MonomialIdeal, field: FieldSpec) -> Result<LcTable> {
    let rows: Vec<(MultiDegree, BTreeMap<i64, usize>)> = canonical_box(ideal)
        .into_par_iter()
        .map(|a| lc_dims(ideal, &a, field).map(|d| (a, d)))
        .collect::<Result<_>>()?;
    Ok(LcTable::from_rows(ideal.clone(), field, rows))
}

pub fn depth_and_dim(ideal: &MonomialIdeal, field: FieldSpec) -> Result<DepthDim> {
    if ideal.is_unit() {
        return Err(Error::Domain("S/I is the zero ring".into()));
    }
    depth_and_dim_from_table(&lc_table(ideal, field)?)
}
