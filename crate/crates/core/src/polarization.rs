//! Polarization of monomial ideals, the matching degree map, and the two
//! auxiliary constructions used to reduce a general degree to degree zero:
//! restriction (setting variables to 1) and partial polarization of a
//! single variable.
//!
//! Polarized variables are laid out block by block: variable `i` of the
//! original ring owns the `ρ_i` consecutive coordinates `x_{i,1}, ...,
//! x_{i,ρ_i}`.

use std::collections::HashSet;

use crate::error::{check_len, Error, Result};
use crate::monomial::{minimalize, rho, Monomial, MonomialIdeal, MultiDegree, Rho};

/// `I'` together with the bookkeeping that relates it to `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizedIdeal {
    pub ideal: MonomialIdeal,
    pub origin_n: usize,
    pub rho: Rho,
    offsets: Vec<usize>,
}

impl PolarizedIdeal {
    /// Flat coordinate of `x_{i,j}` (0-based `i` and `j`).
    pub fn var_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(j < self.rho.get(i) as usize);
        self.offsets[i] + j
    }

    /// `ρ - n`, the cohomological shift between `S/I` and `S'/I'`.
    pub fn shift(&self) -> usize {
        self.rho.total() - self.origin_n
    }
}

fn block_offsets(rho: &Rho) -> Vec<usize> {
    rho.entries()
        .iter()
        .scan(0usize, |acc, &r| {
            let at = *acc;
            *acc += r as usize;
            Some(at)
        })
        .collect()
}

/// `x_{i}_{j}` with 1-based indices, made unique against `taken`.
fn fresh_name(i: usize, j: usize, taken: &mut HashSet<String>) -> String {
    let mut name = format!("x_{}_{}", i + 1, j + 1);
    while taken.contains(&name) {
        name.push('_');
    }
    taken.insert(name.clone());
    name
}

/// `m' = Π_i Π_{j <= ν_i(m)} x_{i,j}`.
pub fn polarize_monomial(m: &Monomial, rho: &Rho) -> Result<Monomial> {
    check_len(rho.len(), m.n_vars())?;
    let mut exps = Vec::with_capacity(rho.total());
    for (i, &r) in rho.entries().iter().enumerate() {
        let e = m.nu(i);
        if e > r {
            return Err(Error::Range(format!(
                "exponent {e} of variable {} exceeds rho = {r}",
                i + 1
            )));
        }
        exps.extend((0..r).map(|j| u32::from(j < e)));
    }
    Ok(Monomial::new(exps))
}

/// `I' = (m' | m ∈ G(I))` in `ρ` variables named `x_i_j`.
pub fn polarize_ideal(ideal: &MonomialIdeal) -> PolarizedIdeal {
    let r = rho(ideal);
    let mut taken = HashSet::new();
    let names: Vec<String> = r
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(i, &ri)| (0..ri as usize).map(move |j| (i, j)))
        .map(|(i, j)| fresh_name(i, j, &mut taken))
        .collect();
    let gens: Vec<Monomial> = ideal
        .gens()
        .iter()
        .map(|m| polarize_monomial(m, &r).expect("ρ bounds every generator"))
        .collect();
    let polarized = MonomialIdeal::new(names, gens).expect("generated names are distinct");
    debug_assert_eq!(polarized.gens().len(), ideal.gens().len());
    PolarizedIdeal {
        ideal: polarized,
        origin_n: ideal.n_vars(),
        offsets: block_offsets(&r),
        rho: r,
    }
}

/// The degree `α ∈ Z^ρ` matching `a ∈ Z^n`: block `i` is `a_i + 1` zeros
/// followed by `ρ_i - a_i - 1` entries `-1` when `a_i >= 0`, and `ρ_i`
/// entries `-1` when `a_i < 0`.
pub fn degree_map(a: &MultiDegree, rho: &Rho) -> Result<MultiDegree> {
    check_len(rho.len(), a.len())?;
    let mut alpha = Vec::with_capacity(rho.total());
    for (i, &r) in rho.entries().iter().enumerate() {
        let (ai, r) = (a.get(i), i64::from(r));
        if ai >= r {
            return Err(Error::Precondition(format!(
                "degree entry {ai} of variable {} is not below rho = {r}",
                i + 1
            )));
        }
        let zeros = if ai >= 0 { ai + 1 } else { 0 };
        alpha.extend((0..r).map(|j| if j < zeros { 0 } else { -1 }));
    }
    Ok(MultiDegree::new(alpha))
}

/// `I_+`: the ideal of `k[x_j | j ∈ keep]` obtained by setting every other
/// variable to 1. Equivalently, `I` localized at the dropped variables and
/// contracted back.
pub fn restrict(ideal: &MonomialIdeal, keep: &[usize]) -> Result<MonomialIdeal> {
    let n = ideal.n_vars();
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    if let Some(&bad) = keep.iter().find(|&&j| j >= n) {
        return Err(Error::Range(format!("variable index {bad} outside 0..{n}")));
    }
    let names = keep.iter().map(|&j| ideal.var_names()[j].clone()).collect();
    let gens = ideal
        .gens()
        .iter()
        .map(|m| Monomial::new(keep.iter().map(|&j| m.nu(j)).collect()))
        .collect();
    MonomialIdeal::new(names, gens)
}

/// Partial polarization of variable `var` above threshold `t`.
///
/// A generator with `ν_var(m) <= t + 1` is kept; otherwise its `x_var`
/// exponent is capped at `t + 1` and the new variables `x_{var,j}` for
/// `t + 2 <= j <= ν_var(m)` (1-based `j`) are multiplied in. The
/// `ρ_var - t - 1` new variables are appended after the original ones.
pub fn partial_polarize(ideal: &MonomialIdeal, var: usize, t: u32) -> Result<MonomialIdeal> {
    let n = ideal.n_vars();
    if var >= n {
        return Err(Error::Range(format!("variable index {var} outside 0..{n}")));
    }
    let r = rho(ideal).get(var);
    if t + 1 >= r {
        return Err(Error::Precondition(format!(
            "partial polarization needs t < rho - 1, got t = {t}, rho = {r}"
        )));
    }
    let extra = (r - t - 1) as usize;
    let mut taken: HashSet<String> = ideal.var_names().iter().cloned().collect();
    let mut names = ideal.var_names().to_vec();
    names.extend((0..extra).map(|q| fresh_name(var, t as usize + 1 + q, &mut taken)));

    let cap = t + 1;
    let gens = ideal
        .gens()
        .iter()
        .map(|m| {
            let mut exps = m.exponents().to_vec();
            let e = exps[var];
            exps[var] = e.min(cap);
            // new variable q stands for x_{var, t+2+q}
            exps.extend((0..extra as u32).map(|q| u32::from(cap + q < e)));
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(names, gens)
}

/// For `I'' = partial_polarize(I, var, t)`, maps each coordinate of the
/// polarization of `I''` to the corresponding coordinate of the polarization
/// of `I`. The two polarizations coincide under this renaming.
pub fn partial_polarization_renaming(rho_full: &Rho, var: usize, t: u32) -> Result<Vec<usize>> {
    let n = rho_full.len();
    if var >= n || t + 1 >= rho_full.get(var) {
        return Err(Error::Precondition(format!(
            "no partial polarization at ({var}, {t})"
        )));
    }
    let offsets = block_offsets(rho_full);
    let mut map = Vec::with_capacity(rho_full.total());
    for i in 0..n {
        let width = if i == var { t + 1 } else { rho_full.get(i) };
        map.extend((0..width as usize).map(|j| offsets[i] + j));
    }
    let extra = rho_full.get(var) - t - 1;
    map.extend((0..extra as usize).map(|q| offsets[var] + t as usize + 1 + q));
    Ok(map)
}

/// Substitutes `x_{i,j} -> x_{i,1}` in `G(I')`, minimalizes, and compares the
/// result with `G(I)`.
pub fn depolarize_check(polarized: &PolarizedIdeal, ideal: &MonomialIdeal) -> bool {
    if polarized.origin_n != ideal.n_vars() || polarized.rho.len() != ideal.n_vars() {
        return false;
    }
    let collapsed: Vec<Monomial> = polarized
        .ideal
        .gens()
        .iter()
        .map(|m| {
            Monomial::new(
                (0..polarized.origin_n)
                    .map(|i| {
                        (0..polarized.rho.get(i) as usize)
                            .map(|j| m.nu(polarized.var_index(i, j)))
                            .sum()
                    })
                    .collect(),
            )
        })
        .collect();
    match minimalize(&collapsed) {
        Ok(gens) => gens == ideal.gens(),
        Err(_) => false,
    }
}

/// Permutes the variables of `ideal`: coordinate `k` moves to `map[k]`.
pub fn permute_variables(
    ideal: &MonomialIdeal,
    map: &[usize],
    names: Vec<String>,
) -> Result<MonomialIdeal> {
    check_len(ideal.n_vars(), map.len())?;
    check_len(names.len(), map.len())?;
    let gens = ideal
        .gens()
        .iter()
        .map(|m| {
            let mut exps = vec![0; map.len()];
            for (k, &target) in map.iter().enumerate() {
                exps[target] = m.nu(k);
            }
            Monomial::new(exps)
        })
        .collect();
    MonomialIdeal::new(names, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn rho_of(v: &[u32]) -> Rho {
        Rho::new(v.to_vec()).unwrap()
    }

    fn exps(m: &Monomial) -> Vec<u32> {
        m.exponents().to_vec()
    }

    #[test]
    fn polarize_monomial_examples() {
        let p = polarize_monomial(&Monomial::new(vec![2, 1]), &rho_of(&[2, 1])).unwrap();
        assert_eq!(exps(&p), vec![1, 1, 1]);
        let p = polarize_monomial(&Monomial::one(2), &rho_of(&[2, 1])).unwrap();
        assert!(p.is_one());
        let p = polarize_monomial(&Monomial::new(vec![3]), &rho_of(&[3])).unwrap();
        assert_eq!(exps(&p), vec![1, 1, 1]);
        assert!(matches!(
            polarize_monomial(&Monomial::new(vec![3]), &rho_of(&[2])),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn polarize_ideal_examples() {
        let i = parse_ideal("vars x y\ngens x^2, x*y").unwrap();
        let p = polarize_ideal(&i);
        assert_eq!(p.ideal.var_names(), &["x_1_1", "x_1_2", "x_2_1"]);
        assert_eq!(
            p.ideal.to_string(),
            "vars x_1_1 x_1_2 x_2_1\ngens x_1_1*x_1_2, x_1_1*x_2_1\n"
        );
        assert_eq!(p.shift(), 1);
        assert_eq!(p.var_index(1, 0), 2);

        let sf = parse_ideal("vars x y z\ngens x*y, y*z").unwrap();
        let p = polarize_ideal(&sf);
        assert_eq!(p.ideal.gens(), sf.gens());

        let z = MonomialIdeal::zero(vec!["x".into(), "y".into()]).unwrap();
        let p = polarize_ideal(&z);
        assert!(p.ideal.is_zero());
        assert_eq!(p.ideal.n_vars(), 2);
    }

    #[test]
    fn degree_map_examples() {
        let a = MultiDegree::new(vec![1, -2]);
        assert_eq!(
            degree_map(&a, &rho_of(&[3, 2])).unwrap().entries(),
            &[0, 0, -1, -1, -1]
        );
        let r = rho_of(&[3, 2]);
        assert_eq!(
            degree_map(&r.minus_one(), &r).unwrap(),
            MultiDegree::zero(5)
        );
        assert_eq!(
            degree_map(&MultiDegree::new(vec![1, 0]), &rho_of(&[2, 1]))
                .unwrap()
                .entries(),
            &[0, 0, 0]
        );
        assert!(matches!(
            degree_map(&MultiDegree::new(vec![2, 0]), &rho_of(&[2, 1])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn restrict_examples() {
        let i = parse_ideal("vars x y\ngens x^2, x*y").unwrap();
        assert_eq!(restrict(&i, &[0]).unwrap().to_string(), "vars x\ngens x\n");
        assert_eq!(restrict(&i, &[0, 1]).unwrap(), i);
        let xy = parse_ideal("vars x y\ngens x*y").unwrap();
        assert_eq!(restrict(&xy, &[1]).unwrap().to_string(), "vars y\ngens y\n");
        assert!(restrict(&xy, &[2]).is_err());
        // dropping every variable leaves k, with I_+ = (1)
        assert!(restrict(&xy, &[]).unwrap().is_unit());
    }

    #[test]
    fn partial_polarize_examples() {
        let i = parse_ideal("vars x\ngens x^3").unwrap();
        let p = partial_polarize(&i, 0, 0).unwrap();
        assert_eq!(p.to_string(), "vars x x_1_2 x_1_3\ngens x*x_1_2*x_1_3\n");

        let i = parse_ideal("vars x y\ngens x^2, x*y").unwrap();
        assert!(matches!(
            partial_polarize(&i, 1, 0),
            Err(Error::Precondition(_))
        ));

        let i = parse_ideal("vars x y\ngens x^3, x*y").unwrap();
        let p = partial_polarize(&i, 0, 1).unwrap();
        assert_eq!(p.to_string(), "vars x y x_1_3\ngens x*y, x^2*x_1_3\n");
    }

    #[test]
    fn depolarization_examples() {
        let i = parse_ideal("vars x y\ngens x^2, x*y").unwrap();
        assert!(depolarize_check(&polarize_ideal(&i), &i));
        let x2 = parse_ideal("vars x\ngens x^2").unwrap();
        let x3 = parse_ideal("vars x\ngens x^3").unwrap();
        assert!(!depolarize_check(&polarize_ideal(&x2), &x3));
        let z = MonomialIdeal::zero(vec!["x".into()]).unwrap();
        assert!(depolarize_check(&polarize_ideal(&z), &z));
    }

    #[test]
    fn partial_then_full_polarization_agrees() {
        let i = parse_ideal("vars x y\ngens x^3*y, x*y^2, x^2*y^2").unwrap();
        let r = rho(&i);
        let full = polarize_ideal(&i);
        for var in 0..2 {
            for t in 0..r.get(var).saturating_sub(1) {
                let partial = partial_polarize(&i, var, t).unwrap();
                let pp = polarize_ideal(&partial);
                let map = partial_polarization_renaming(&r, var, t).unwrap();
                let renamed =
                    permute_variables(&pp.ideal, &map, full.ideal.var_names().to_vec()).unwrap();
                assert_eq!(renamed, full.ideal, "var {var}, t {t}");
            }
        }
    }
}
