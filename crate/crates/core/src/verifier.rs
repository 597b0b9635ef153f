//! Executable checks of the polarization isomorphism
//! `H^i_m(S/I)_a ≅ H^{i+ρ-n}_{m'}(S'/I')_α` and of the identities that
//! reduce an arbitrary degree to degree zero, plus random ideal generation
//! for fuzzing.
//!
//! Mismatches are recorded in the report rather than raised, so a sweep
//! always runs to completion.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cech::cech_cohomology_dims;
use crate::error::{check_len, Error, Result};
use crate::linalg::FieldSpec;
use crate::monomial::{
    minimalize, negative_support, rho, Monomial, MonomialIdeal, MultiDegree, Rho,
};
use crate::polarization::{
    degree_map, partial_polarization_renaming, partial_polarize, permute_variables, polarize_ideal,
    polarize_monomial, restrict,
};
use crate::takayama::{canonical_box, depth_and_dim, lc_dims};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub degree: Vec<i64>,
    pub i: i64,
    pub lhs: usize,
    pub rhs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub degrees_checked: usize,
    pub indices_checked: usize,
    pub failures: Vec<Failure>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            degrees_checked: 0,
            indices_checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: Check) {
        self.degrees_checked += other.degrees_checked;
        self.indices_checked += other.indices_checked;
        self.failures.extend(other.failures);
    }

    fn compare(&mut self, a: &MultiDegree, i: i64, lhs: usize, rhs: usize) {
        self.indices_checked += 1;
        if lhs != rhs {
            self.fail(a, i, lhs, rhs, None);
        }
    }

    fn fail(&mut self, a: &MultiDegree, i: i64, lhs: usize, rhs: usize, detail: Option<String>) {
        self.failures.push(Failure {
            degree: a.entries().to_vec(),
            i,
            lhs,
            rhs,
            detail,
        });
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub ideal: MonomialIdeal,
    pub field: FieldSpec,
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    ideal: String,
    field: String,
    checks: &'a [Check],
    pass: bool,
}

impl VerificationReport {
    fn new(ideal: &MonomialIdeal, field: FieldSpec) -> Self {
        VerificationReport {
            ideal: ideal.clone(),
            field,
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Adds `check`, summing into an existing check of the same name.
    pub fn push(&mut self, check: Check) {
        match self.checks.iter_mut().find(|c| c.name == check.name) {
            Some(existing) => existing.absorb(check),
            None => self.checks.push(check),
        }
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.push(c);
        }
    }

    pub fn to_json(&self) -> String {
        let doc = ReportJson {
            ideal: self.ideal.to_string(),
            field: self.field.to_string(),
            checks: &self.checks,
            pass: self.passed(),
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<28} {:>6} degrees {:>7} indices  {}\n",
                c.name,
                c.degrees_checked,
                c.indices_checked,
                if c.passed() {
                    "ok".to_string()
                } else {
                    format!("{} FAILURES", c.failures.len())
                }
            ));
            for f in c.failures.iter().take(10) {
                out.push_str(&format!(
                    "    degree {:?} i={} lhs={} rhs={}{}\n",
                    f.degree,
                    f.i,
                    f.lhs,
                    f.rhs,
                    f.detail
                        .as_deref()
                        .map(|d| format!(" ({d})"))
                        .unwrap_or_default()
                ));
            }
        }
        out.push_str(if self.passed() { "PASS\n" } else { "FAIL\n" });
        out
    }
}

/// Knobs for the verification sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Recompute every visited `(ideal, degree)` through the Čech strand.
    pub oracle_crosscheck: bool,
    /// Require vanishing outside `[0, n]` on the left and `[ρ-n, ρ]` on the
    /// right.
    pub window_check: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            oracle_crosscheck: true,
            window_check: true,
        }
    }
}

fn dim_at(dims: &BTreeMap<i64, usize>, i: i64) -> usize {
    dims.get(&i).copied().unwrap_or(0)
}

/// Compares Takayama dims with Čech dims at one `(ideal, degree)`.
fn oracle_compare(
    check: &mut Check,
    ideal: &MonomialIdeal,
    a: &MultiDegree,
    takayama: &BTreeMap<i64, usize>,
    field: FieldSpec,
    label: &str,
) -> Result<()> {
    let cech = cech_cohomology_dims(ideal, a, field)?;
    check.degrees_checked += 1;
    for i in 0..=ideal.n_vars() as i64 {
        check.indices_checked += 1;
        let (t, c) = (dim_at(takayama, i), dim_at(&cech, i));
        if t != c {
            check.fail(a, i, t, c, Some(label.to_string()));
        }
    }
    for (&i, &d) in takayama.iter().chain(cech.iter()) {
        if !(0..=ideal.n_vars() as i64).contains(&i) {
            check.fail(a, i, d, 0, Some(format!("{label}: index outside [0, n]")));
        }
    }
    Ok(())
}

fn window_compare(
    check: &mut Check,
    a: &MultiDegree,
    dims: &BTreeMap<i64, usize>,
    lo: i64,
    hi: i64,
    label: &str,
) {
    check.degrees_checked += 1;
    for (&i, &d) in dims {
        check.indices_checked += 1;
        if i < lo || i > hi {
            check.fail(
                a,
                i,
                d,
                0,
                Some(format!("{label}: nonzero outside [{lo}, {hi}]")),
            );
        }
    }
}

pub fn verify_main_theorem(ideal: &MonomialIdeal, field: FieldSpec) -> VerificationReport {
    verify_main_theorem_with(ideal, field, VerifyOptions::default())
}

/// For every `a` in the canonical box and `0 <= i <= n`, checks
/// `dim H^i(S/I)_a = dim H^{i+ρ-n}(S'/I')_α` with `α = degree_map(a, ρ)`.
pub fn verify_main_theorem_with(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    opts: VerifyOptions,
) -> VerificationReport {
    let n = ideal.n_vars() as i64;
    let polarized = polarize_ideal(ideal);
    let shift = polarized.shift() as i64;
    let total = polarized.rho.total() as i64;

    let per_degree: Vec<Result<Vec<Check>>> = canonical_box(ideal)
        .into_par_iter()
        .map(|a| {
            let mut main = Check::new("main_theorem");
            let mut window = Check::new("vanishing_window");
            let mut oracle = Check::new("oracle_crosscheck");
            let alpha = degree_map(&a, &polarized.rho)?;
            let lhs = lc_dims(ideal, &a, field)?;
            let rhs = lc_dims(&polarized.ideal, &alpha, field)?;
            main.degrees_checked += 1;
            for i in 0..=n {
                main.compare(&a, i, dim_at(&lhs, i), dim_at(&rhs, i + shift));
            }
            let mut checks = vec![main];
            if opts.window_check {
                window_compare(&mut window, &a, &lhs, 0, n, "lhs");
                window_compare(&mut window, &alpha, &rhs, shift, total, "rhs");
                checks.push(window);
            }
            if opts.oracle_crosscheck {
                oracle_compare(&mut oracle, ideal, &a, &lhs, field, "S/I")?;
                oracle_compare(&mut oracle, &polarized.ideal, &alpha, &rhs, field, "S'/I'")?;
                checks.push(oracle);
            }
            Ok(checks)
        })
        .collect();

    let mut report = VerificationReport::new(ideal, field);
    report.push(Check::new("main_theorem"));
    for result in per_degree {
        match result {
            Ok(checks) => checks.into_iter().for_each(|c| report.push(c)),
            Err(e) => {
                let mut c = Check::new("main_theorem");
                c.fail(
                    &MultiDegree::new(vec![]),
                    -1,
                    0,
                    0,
                    Some(format!("error: {e}")),
                );
                report.push(c);
            }
        }
    }
    report
}

fn check_degree_in_box(ideal: &MonomialIdeal, a: &MultiDegree) -> Result<()> {
    check_len(ideal.n_vars(), a.len())?;
    let r = rho(ideal);
    for (j, &aj) in a.entries().iter().enumerate() {
        if aj >= i64::from(r.get(j)) {
            return Err(Error::Precondition(format!(
                "degree {a} is not <= rho - 1 at variable {}",
                j + 1
            )));
        }
    }
    Ok(())
}

/// One visited `(ideal, degree)` pair plus its Takayama dims.
struct Visit {
    ideal: MonomialIdeal,
    degree: MultiDegree,
    dims: BTreeMap<i64, usize>,
}

pub fn verify_reduction_chain(
    ideal: &MonomialIdeal,
    a: &MultiDegree,
    field: FieldSpec,
) -> Result<VerificationReport> {
    verify_reduction_chain_with(ideal, a, field, VerifyOptions::default())
}

/// Checks the restriction identity (when every `a_j` is `ρ_j - 1` or
/// negative), the partial polarization identity for every `j` with
/// `0 <= a_j < ρ_j - 1`, and the full chain: partial polarizations until
/// the degree has restriction shape, then restriction, then degree zero on
/// the matching restriction of the polarization.
pub fn verify_reduction_chain_with(
    ideal: &MonomialIdeal,
    a: &MultiDegree,
    field: FieldSpec,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    check_degree_in_box(ideal, a)?;
    let n = ideal.n_vars() as i64;
    let r = rho(ideal);
    let lhs = lc_dims(ideal, a, field)?;
    let mut visits = vec![Visit {
        ideal: ideal.clone(),
        degree: a.clone(),
        dims: lhs.clone(),
    }];
    let mut report = VerificationReport::new(ideal, field);

    // restriction
    let restriction_shape =
        (0..ideal.n_vars()).all(|j| a.get(j) < 0 || a.get(j) == i64::from(r.get(j)) - 1);
    if restriction_shape {
        let mut check = Check::new("restriction");
        let keep: Vec<usize> = (0..ideal.n_vars()).filter(|&j| a.get(j) >= 0).collect();
        let s = negative_support(a).len() as i64;
        let plus = restrict(ideal, &keep)?;
        let a_plus = MultiDegree::new(keep.iter().map(|&j| a.get(j)).collect());
        let rhs = lc_dims(&plus, &a_plus, field)?;
        check.degrees_checked += 1;
        for i in 0..=n {
            check.compare(a, i, dim_at(&lhs, i), dim_at(&rhs, i - s));
        }
        report.push(check);
        visits.push(Visit {
            ideal: plus,
            degree: a_plus,
            dims: rhs,
        });
    }

    // single partial polarization steps
    for j in 0..ideal.n_vars() {
        let (aj, rj) = (a.get(j), i64::from(r.get(j)));
        if !(0 <= aj && aj < rj - 1) {
            continue;
        }
        let t = aj as u32;
        let partial = partial_polarize(ideal, j, t)?;
        let mut extended = a.entries().to_vec();
        extended.extend(std::iter::repeat_n(-1, (rj - 1 - aj) as usize));
        let extended = MultiDegree::new(extended);
        let rhs = lc_dims(&partial, &extended, field)?;
        let shift = rj - (aj + 1);

        let mut check = Check::new("partial_polarization");
        check.degrees_checked += 1;
        for i in 0..=n {
            let (l, rr) = (dim_at(&lhs, i), dim_at(&rhs, i + shift));
            check.indices_checked += 1;
            if l != rr {
                check.fail(a, i, l, rr, Some(format!("variable {}", j + 1)));
            }
        }
        report.push(check);

        let mut compat = Check::new("partial_polarization_compat");
        compat.degrees_checked += 1;
        let full = polarize_ideal(ideal);
        let pp = polarize_ideal(&partial);
        let map = partial_polarization_renaming(&r, j, t)?;
        let same = pp.ideal.n_vars() == full.ideal.n_vars()
            && permute_variables(&pp.ideal, &map, full.ideal.var_names().to_vec())? == full.ideal;
        if !same {
            compat.fail(
                a,
                -1,
                0,
                0,
                Some(format!("variable {}: polarizations differ", j + 1)),
            );
        }
        report.push(compat);

        visits.push(Visit {
            ideal: partial,
            degree: extended,
            dims: rhs,
        });
    }

    // the whole chain down to degree zero
    let mut chain = Check::new("chain_to_degree_zero");
    chain.degrees_checked += 1;
    let mut cur = ideal.clone();
    let mut cur_a = a.entries().to_vec();
    let mut shift = 0i64;
    loop {
        let cr = rho(&cur);
        let Some(j) =
            (0..cur.n_vars()).find(|&j| 0 <= cur_a[j] && cur_a[j] < i64::from(cr.get(j)) - 1)
        else {
            break;
        };
        let (t, rj) = (cur_a[j], i64::from(cr.get(j)));
        cur = partial_polarize(&cur, j, t as u32)?;
        cur_a.extend(std::iter::repeat_n(-1, (rj - 1 - t) as usize));
        shift += rj - (t + 1);
    }
    // Restriction on both sides: I_+ on S, and the blocks of the kept
    // variables on the polarization of the current ideal, taken in degree 0.
    let keep: Vec<usize> = (0..cur.n_vars()).filter(|&j| cur_a[j] >= 0).collect();
    let s = cur_a.iter().filter(|&&x| x < 0).count() as i64;
    let plus = restrict(&cur, &keep)?;
    let a_plus = MultiDegree::new(keep.iter().map(|&j| cur_a[j]).collect());
    let plus_dims = lc_dims(&plus, &a_plus, field)?;
    shift -= s;
    for i in 0..=n {
        chain.compare(a, i, dim_at(&lhs, i), dim_at(&plus_dims, i + shift));
    }

    let cur_polarized = polarize_ideal(&cur);
    let block_keep: Vec<usize> = keep
        .iter()
        .flat_map(|&j| (0..cur_polarized.rho.get(j) as usize).map(move |q| (j, q)))
        .map(|(j, q)| cur_polarized.var_index(j, q))
        .collect();
    let polar_plus = restrict(&cur_polarized.ideal, &block_keep)?;
    let rho_keep = Rho::new(keep.iter().map(|&j| cur_polarized.rho.get(j)).collect())?;
    let expected_gens = minimalize(
        &plus
            .gens()
            .iter()
            .map(|m| polarize_monomial(m, &rho_keep))
            .collect::<Result<Vec<_>>>()?,
    )?;
    if polar_plus.gens() != expected_gens.as_slice() {
        chain.fail(
            a,
            -1,
            0,
            0,
            Some("restricted polarization is not the polarization of I_+".into()),
        );
    }
    let zero = MultiDegree::zero(polar_plus.n_vars());
    let final_dims = lc_dims(&polar_plus, &zero, field)?;
    shift += (rho_keep.total() - keep.len()) as i64;
    visits.push(Visit {
        ideal: plus,
        degree: a_plus,
        dims: plus_dims,
    });
    visits.push(Visit {
        ideal: polar_plus,
        degree: zero,
        dims: final_dims.clone(),
    });
    for i in 0..=n {
        chain.compare(a, i, dim_at(&lhs, i), dim_at(&final_dims, i + shift));
    }
    report.push(chain);

    if opts.oracle_crosscheck {
        let mut oracle = Check::new("oracle_crosscheck");
        for v in &visits {
            oracle_compare(&mut oracle, &v.ideal, &v.degree, &v.dims, field, "chain")?;
        }
        report.push(oracle);
    }
    Ok(report)
}

/// Runs [`verify_reduction_chain`] for every degree of the canonical box.
pub fn verify_reduction_chain_all(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    let parts: Vec<VerificationReport> = canonical_box(ideal)
        .into_par_iter()
        .map(|a| verify_reduction_chain_with(ideal, &a, field, opts))
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::new(ideal, field);
    for p in parts {
        report.merge(p);
    }
    Ok(report)
}

/// `depth(S'/I') = depth(S/I) + ρ - n` and likewise for dimension.
pub fn verify_depth_shift(ideal: &MonomialIdeal, field: FieldSpec) -> Result<VerificationReport> {
    if ideal.is_unit() {
        return Err(Error::Domain("S/I is the zero ring".into()));
    }
    let polarized = polarize_ideal(ideal);
    let shift = polarized.shift();
    let base = depth_and_dim(ideal, field)?;
    let pol = depth_and_dim(&polarized.ideal, field)?;
    let mut report = VerificationReport::new(ideal, field);
    let empty = MultiDegree::new(Vec::new());
    for (name, l, r) in [
        ("depth_shift", base.depth + shift, pol.depth),
        ("dim_shift", base.dim + shift, pol.dim),
    ] {
        let mut c = Check::new(name);
        c.degrees_checked = 1;
        c.compare(&empty, 0, l, r);
        report.push(c);
    }
    Ok(report)
}

/// A random monomial ideal in `n` variables: `max_gens` monomials with
/// exponents uniform in `[0, max_exp]`; draws equal to `1` are dropped and
/// the rest minimalized.
pub fn random_ideal(n: usize, max_exp: u32, max_gens: usize, seed: u64) -> Result<MonomialIdeal> {
    if n == 0 || max_exp == 0 {
        return Err(Error::Precondition(
            "random_ideal needs n >= 1 and max_exp >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<Monomial> = (0..max_gens)
        .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect()))
        .filter(|m| !m.is_one())
        .collect();
    MonomialIdeal::with_default_names(n, gens)
}

/// Bounds for a fuzz corpus; each ideal draws its own `n`, `max_exp` and
/// generator count uniformly up to these.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusConfig {
    pub max_n: usize,
    pub max_exp: u32,
    pub max_gens: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_n: 3,
            max_exp: 3,
            max_gens: 4,
        }
    }
}

/// `size` reproducible random ideals.
pub fn corpus(size: usize, seed: u64, cfg: CorpusConfig) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|_| {
            let n = rng.gen_range(1..=cfg.max_n);
            let e = rng.gen_range(1..=cfg.max_exp);
            let g = rng.gen_range(0..=cfg.max_gens);
            random_ideal(n, e, g, rng.gen()).expect("bounds are positive")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;
    use crate::takayama::lc_dim;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn golden() -> MonomialIdeal {
        parse_ideal("vars x y\ngens x^2, x*y").unwrap()
    }

    fn deg(a: &[i64]) -> MultiDegree {
        MultiDegree::new(a.to_vec())
    }

    #[test]
    fn main_theorem_on_golden_ideal() {
        let report = verify_main_theorem(&golden(), Q);
        assert!(report.passed(), "{}", report.to_text());
        let main = report.check("main_theorem").unwrap();
        assert_eq!(main.degrees_checked, 6);
        assert_eq!(main.indices_checked, 18);

        // a = (1,0), i = 0 on the left; (0,0,0), i = 1 on the right
        let p = polarize_ideal(&golden());
        assert_eq!(lc_dim(&golden(), &deg(&[1, 0]), 0, Q).unwrap(), 1);
        assert_eq!(lc_dim(&p.ideal, &deg(&[0, 0, 0]), 1, Q).unwrap(), 1);
    }

    #[test]
    fn main_theorem_trivial_cases() {
        let sf = parse_ideal("vars a b c\ngens a*b, b*c").unwrap();
        assert!(verify_main_theorem(&sf, Q).passed());
        let unit = MonomialIdeal::unit(vec!["x".into(), "y".into()]).unwrap();
        let report = verify_main_theorem(&unit, Q);
        assert!(report.passed());
        let zero = MonomialIdeal::zero(vec!["x".into(), "y".into()]).unwrap();
        assert!(verify_main_theorem(&zero, FieldSpec::PrimeField(2)).passed());
    }

    #[test]
    fn reduction_chain_examples() {
        let i = golden();
        let report = verify_reduction_chain(&i, &deg(&[1, -1]), Q).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.check("restriction").is_some());
        assert!(report.check("partial_polarization").is_none());

        let x3 = parse_ideal("vars x\ngens x^3").unwrap();
        let report = verify_reduction_chain(&x3, &deg(&[0]), Q).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(
            report
                .check("partial_polarization")
                .unwrap()
                .indices_checked,
            2
        );
        // H^0(S/(x^3))_0 = H^2(S''/I'')_(0,-1,-1) = k
        let partial = partial_polarize(&x3, 0, 0).unwrap();
        assert_eq!(lc_dim(&x3, &deg(&[0]), 0, Q).unwrap(), 1);
        assert_eq!(lc_dim(&partial, &deg(&[0, -1, -1]), 2, Q).unwrap(), 1);

        // a = ρ - 1: restriction to everything is the identity
        let report = verify_reduction_chain(&i, &deg(&[1, 0]), Q).unwrap();
        assert!(report.passed());
        assert_eq!(report.check("restriction").unwrap().indices_checked, 3);
    }

    #[test]
    fn reduction_chain_rejects_degrees_outside_box() {
        assert!(matches!(
            verify_reduction_chain(&golden(), &deg(&[2, 0]), Q),
            Err(Error::Precondition(_))
        ));
        assert!(verify_reduction_chain(&golden(), &deg(&[0]), Q).is_err());
    }

    #[test]
    fn depth_shift_examples() {
        let report = verify_depth_shift(&golden(), Q).unwrap();
        assert!(report.passed());
        let p = polarize_ideal(&golden());
        let d = depth_and_dim(&p.ideal, Q).unwrap();
        assert_eq!((d.depth, d.dim), (1, 2));

        let zero = MonomialIdeal::zero(vec!["x".into(), "y".into()]).unwrap();
        assert!(verify_depth_shift(&zero, Q).unwrap().passed());
        let unit = MonomialIdeal::unit(vec!["x".into()]).unwrap();
        assert!(verify_depth_shift(&unit, Q).is_err());
    }

    #[test]
    fn random_ideals_are_reproducible_and_minimal() {
        let a = random_ideal(2, 2, 3, 1).unwrap();
        let b = random_ideal(2, 2, 3, 1).unwrap();
        assert_eq!(a, b);
        for seed in 0..50 {
            let i = random_ideal(1, 1, 1, seed).unwrap();
            assert!(i.is_zero() || i.to_string() == "vars x1\ngens x1\n");
            let j = random_ideal(3, 3, 4, seed).unwrap();
            assert!(j.gens().len() <= 4);
            for (p, m) in j.gens().iter().enumerate() {
                for (q, k) in j.gens().iter().enumerate() {
                    assert!(p == q || !crate::monomial::divides(m, k).unwrap());
                }
            }
        }
        assert!(random_ideal(0, 1, 1, 0).is_err());
    }

    #[test]
    fn report_json_shape() {
        let report = verify_main_theorem(&golden(), Q);
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["pass"], true);
        assert_eq!(v["field"], "q");
        assert_eq!(v["ideal"], "vars x y\ngens x^2, x*y\n");
        assert_eq!(v["checks"][0]["name"], "main_theorem");
    }

    #[test]
    fn a_wrong_rhs_is_reported_not_thrown() {
        let mut c = Check::new("demo");
        c.compare(&deg(&[0]), 0, 1, 0);
        let mut report = VerificationReport::new(&golden(), Q);
        report.push(c);
        assert!(!report.passed());
        assert_eq!(report.failure_count(), 1);
        assert!(report.to_text().contains("FAIL"));
    }
}
