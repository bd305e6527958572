//! Facet values of a parameter and membership in the resonance loci
//! `res`, `sres`, `dres`, `wres`, `SRes`, `DRes`.

use alloc::vec::Vec;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{add_vec, scale_vec, Int, Rat};
use crate::error::{Error, Result};
use crate::geometry::Configuration;
use crate::semigroup::{class_condition, cosets, in_na_plus_zf, lift, DegreeSet};

/// Outcome of a membership question whose negative side may only be known up to bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    True,
    False,
    FalseUpToBounds,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    pub fn is_definite(self) -> bool {
        self != Verdict::FalseUpToBounds
    }

    pub fn or(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::True, _) | (_, Verdict::True) => Verdict::True,
            (Verdict::False, Verdict::False) => Verdict::False,
            _ => Verdict::FalseUpToBounds,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::FalseUpToBounds => "false_up_to_bounds",
        }
    }
}

/// Search bounds for the loci that involve powers of ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest power `k` scanned when negatives are not certified; `None` picks
    /// `max(2, ⌈max positive facet value⌉ + 2)`.
    pub k_max: Option<usize>,
    /// Slack added to facet-value boxes in component listings and oracle windows.
    pub window: u32,
    /// Box radius for brute-force oracles.
    pub radius: u32,
    /// Certify negative `dres` answers through the stabilisation bound on `k`.
    pub certify: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { k_max: None, window: 4, radius: 8, certify: true }
    }
}

/// Facet values of `γ` and the three nonresonance flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResonanceProfile {
    /// `l_F(γ)` for each facet, in facet order.
    pub values: Vec<Rat>,
    pub nonresonant: bool,
    pub weak: bool,
    pub semi: bool,
    /// Facets with integral value.
    pub resonant: Vec<usize>,
}

pub fn facet_values(cfg: &Configuration, gamma: &[Rat]) -> Result<Vec<Rat>> {
    let g = cfg.gamma_coords(gamma)?;
    Ok(cfg.facets().iter().map(|f| f.value_coords_rat(&g)).collect())
}

pub fn classify(cfg: &Configuration, gamma: &[Rat]) -> Result<ResonanceProfile> {
    let values = facet_values(cfg, gamma)?;
    let resonant: Vec<usize> = (0..values.len()).filter(|&k| values[k].is_integer()).collect();
    let nonresonant = resonant.is_empty();
    let weak = resonant.iter().all(|&k| values[k].is_zero());
    let semi = resonant.iter().all(|&k| !values[k].is_negative());
    Ok(ResonanceProfile { values, nonresonant, weak, semi, resonant })
}

/// `γ ∈ ℤA + ⋃_F ℚF` over facets, decided by facet values.
pub fn in_res(cfg: &Configuration, gamma: &[Rat]) -> Result<bool> {
    Ok(!classify(cfg, gamma)?.nonresonant)
}

/// `γ ∈ ℤA + ⋃_F ℚF` decided directly: some facet admits a lattice coset of `γ mod ℚF`.
pub fn in_res_by_cosets(cfg: &Configuration, gamma: &[Rat]) -> Result<bool> {
    let g = cfg.gamma_coords(gamma)?;
    for f in cfg.facets() {
        if !cosets(cfg, f.face_index, &g)?.is_empty() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Some facet value lies in `ℤ<0`.
#[allow(non_snake_case)]
pub fn in_SRes(cfg: &Configuration, gamma: &[Rat]) -> Result<bool> {
    Ok(facet_values(cfg, gamma)?.iter().any(|v| v.is_integer() && v.is_negative()))
}

/// Some facet value lies in `ℤ>0`.
#[allow(non_snake_case)]
pub fn in_DRes(cfg: &Configuration, gamma: &[Rat]) -> Result<bool> {
    Ok(facet_values(cfg, gamma)?.iter().any(|v| v.is_integer() && v.is_positive()))
}

/// `γ = -m·a_A + b + α` with `b + ℕF ⊆ deg(R_A/t^{a_A}R_A)` and `α ∈ ℚF`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SresWitness {
    pub face: usize,
    pub m: u64,
    /// `b` in ambient coordinates.
    pub base: Vec<Int>,
}

/// Exact `sres` decision with a witness.
///
/// `γ + m·a_A` has a good class at `F` iff a coset `c` of `γ` satisfies
/// `c + m·a_A ∈ ℕA + ℤF` and `c + (m-1)·a_A ∉ ℕA + ℤF`; since the first condition is
/// upward closed in `m` and eventually true, some `m ≥ 1` works iff `c ∉ ℕA + ℤF`.
pub fn sres_witness(cfg: &Configuration, gamma: &[Rat]) -> Result<Option<SresWitness>> {
    let g = cfg.gamma_coords(gamma)?;
    let a = cfg.a_sum_coords();
    for f in 1..cfg.all_faces().len() {
        for c in cosets(cfg, f, &g)? {
            let y = lift(cfg, f, &c)?;
            if in_na_plus_zf(cfg, f, &y)? {
                continue;
            }
            let mut m: u64 = 1;
            loop {
                let b = add_vec(&y, &scale_vec(&a, &Int::from(m)));
                if in_na_plus_zf(cfg, f, &b)? {
                    return Ok(Some(SresWitness { face: f, m, base: cfg.point(&b) }));
                }
                m += 1;
                if m > cfg.budget() {
                    return Err(Error::LimitExceeded { what: "sres shift search", limit: cfg.budget() });
                }
            }
        }
    }
    Ok(None)
}

pub fn in_sres(cfg: &Configuration, gamma: &[Rat]) -> Result<bool> {
    Ok(sres_witness(cfg, gamma)?.is_some())
}

/// `γ ≡ b (mod ℚF)` with `b + ℕF ⊆ deg(I_i(A)) ∖ deg(I_i(A)^k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DresWitness {
    pub face: usize,
    pub level: usize,
    pub power: usize,
    pub base: Vec<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DresOutcome {
    pub verdict: Verdict,
    pub witness: Option<DresWitness>,
    /// Largest power scanned when the answer is bounded.
    pub k_max: usize,
}

pub fn default_k_max(cfg: &Configuration, gamma: &[Rat]) -> Result<usize> {
    let best = facet_values(cfg, gamma)?
        .iter()
        .filter(|v| v.is_positive())
        .map(|v| v.ceil().to_integer())
        .max()
        .unwrap_or_else(Int::zero);
    Ok(2usize.max(best.to_usize().unwrap_or(usize::MAX - 2) + 2))
}

/// `dres` membership.
///
/// With `bounds.certify` (the default) the answer is exact: if a coset `c` of `γ mod ℚF`
/// lies in `ℕA + ℤF ∖ ℤF` for a face `F ≠ A`, then at level `i = codim F - 1` every ideal
/// generator has positive value under `φ_F = Σ_{G ⊇ F} l_G`, so the sumset avoidance holds
/// for all `k > φ_F(c)`; conversely every witness for any `(i, k)` yields such a coset.
/// Without certification the definition is scanned for `k ≤ k_max` only.
pub fn in_dres(cfg: &Configuration, gamma: &[Rat], bounds: &Bounds) -> Result<DresOutcome> {
    let g = cfg.gamma_coords(gamma)?;
    let k_max = match bounds.k_max {
        Some(k) => k.max(2),
        None => default_k_max(cfg, gamma)?,
    };
    if bounds.certify {
        for f in 1..cfg.all_faces().len() {
            for c in cosets(cfg, f, &g)? {
                if c.is_zero() {
                    continue;
                }
                let y = lift(cfg, f, &c)?;
                if !in_na_plus_zf(cfg, f, &y)? {
                    continue;
                }
                let level = cfg.face(f).codim - 1;
                let phi: Int = cfg.facets_containing(f).iter().map(|&k| cfg.facets()[k].value_coords(&y)).sum();
                let k_star = 2usize.max(phi.to_usize().unwrap_or(usize::MAX - 1) + 1);
                for k in 2..=k_star {
                    if class_condition(cfg, DegreeSet::IdealQuotient { level, power: k }, f, &y)? {
                        return Ok(DresOutcome {
                            verdict: Verdict::True,
                            witness: Some(DresWitness { face: f, level, power: k, base: cfg.point(&y) }),
                            k_max,
                        });
                    }
                }
                return Err(Error::Unsupported("sumset avoidance failed past the facet-value bound".into()));
            }
        }
        return Ok(DresOutcome { verdict: Verdict::False, witness: None, k_max });
    }
    for k in 2..=k_max {
        for level in 0..cfg.rank() {
            for f in 1..cfg.all_faces().len() {
                if cfg.face(f).codim <= level {
                    continue;
                }
                for c in cosets(cfg, f, &g)? {
                    let y = lift(cfg, f, &c)?;
                    if class_condition(cfg, DegreeSet::IdealQuotient { level, power: k }, f, &y)? {
                        return Ok(DresOutcome {
                            verdict: Verdict::True,
                            witness: Some(DresWitness { face: f, level, power: k, base: cfg.point(&y) }),
                            k_max,
                        });
                    }
                }
            }
        }
    }
    Ok(DresOutcome { verdict: Verdict::FalseUpToBounds, witness: None, k_max })
}

pub fn in_wres(cfg: &Configuration, gamma: &[Rat], bounds: &Bounds) -> Result<Verdict> {
    if in_sres(cfg, gamma)? {
        return Ok(Verdict::True);
    }
    Ok(in_dres(cfg, gamma, bounds)?.verdict)
}

/// Fast path valid for normal `A`: `γ ∈ sres` iff some facet value is in `ℤ<0`.
pub fn in_sres_normal(cfg: &Configuration, gamma: &[Rat]) -> Result<bool> {
    in_SRes(cfg, gamma)
}

/// Fast path valid for normal `A`: `γ ∈ dres` iff some facet value is in `ℤ>0`.
pub fn in_dres_normal(cfg: &Configuration, gamma: &[Rat]) -> Result<bool> {
    in_DRes(cfg, gamma)
}

/// Names of the loci understood by [`region_scan`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetName {
    Res,
    Sres,
    Dres,
    Wres,
    BigSres,
    BigDres,
}

impl SetName {
    pub fn parse(s: &str) -> Option<SetName> {
        Some(match s {
            "res" => SetName::Res,
            "sres" => SetName::Sres,
            "dres" => SetName::Dres,
            "wres" => SetName::Wres,
            "SRes" => SetName::BigSres,
            "DRes" => SetName::BigDres,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SetName::Res => "res",
            SetName::Sres => "sres",
            SetName::Dres => "dres",
            SetName::Wres => "wres",
            SetName::BigSres => "SRes",
            SetName::BigDres => "DRes",
        }
    }
}

pub fn verdict(cfg: &Configuration, set: SetName, gamma: &[Rat], bounds: &Bounds) -> Result<Verdict> {
    Ok(match set {
        SetName::Res => Verdict::from_bool(in_res(cfg, gamma)?),
        SetName::Sres => Verdict::from_bool(in_sres(cfg, gamma)?),
        SetName::Dres => in_dres(cfg, gamma, bounds)?.verdict,
        SetName::Wres => in_wres(cfg, gamma, bounds)?,
        SetName::BigSres => Verdict::from_bool(in_SRes(cfg, gamma)?),
        SetName::BigDres => Verdict::from_bool(in_DRes(cfg, gamma)?),
    })
}

/// One grid point; `verdict` is `None` when the point lies outside `ℚA`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCell {
    pub point: Vec<Rat>,
    pub verdict: Option<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionGrid {
    pub set: SetName,
    /// Sample values along each axis.
    pub axes: Vec<Vec<Rat>>,
    /// Cells in row-major order over `axes` (last axis fastest).
    pub cells: Vec<GridCell>,
}

impl RegionGrid {
    pub fn members(&self) -> Vec<Vec<Rat>> {
        self.cells
            .iter()
            .filter(|c| c.verdict == Some(Verdict::True))
            .map(|c| c.point.clone())
            .collect()
    }
}

/// Sample points `lo, lo + step, …, ≤ hi` per axis.
pub fn axis_samples(lo: &Rat, hi: &Rat, step: &Rat) -> Result<Vec<Rat>> {
    if !step.is_positive() {
        return Err(Error::Unsupported("grid step must be positive".into()));
    }
    let mut out = Vec::new();
    let mut x = lo.clone();
    while &x <= hi {
        out.push(x.clone());
        x += step;
    }
    Ok(out)
}

/// Evaluates a locus on the lattice grid `box ∩ (lo + step·ℤⁿ)`.
pub fn region_scan(
    cfg: &Configuration,
    set: SetName,
    bx: &[(Rat, Rat)],
    step: &Rat,
    bounds: &Bounds,
) -> Result<RegionGrid> {
    if bx.len() != cfg.dim() {
        return Err(Error::DimensionMismatch { expected: cfg.dim(), found: bx.len() });
    }
    let axes: Vec<Vec<Rat>> = bx.iter().map(|(lo, hi)| axis_samples(lo, hi, step)).collect::<Result<_>>()?;
    let total: u64 = axes.iter().map(|a| a.len() as u64).product();
    if total > cfg.budget() {
        return Err(Error::LimitExceeded { what: "region scan", limit: cfg.budget() });
    }
    let mut cells = Vec::new();
    if axes.iter().any(Vec::is_empty) {
        return Ok(RegionGrid { set, axes, cells });
    }
    let mut idx = alloc::vec![0usize; axes.len()];
    loop {
        let point: Vec<Rat> = idx.iter().zip(&axes).map(|(&i, a)| a[i].clone()).collect();
        let v = match verdict(cfg, set, &point, bounds) {
            Ok(v) => Some(v),
            Err(Error::OutsideSpan) => None,
            Err(e) => return Err(e),
        };
        cells.push(GridCell { point, verdict: v });
        let mut k = axes.len();
        loop {
            if k == 0 {
                return Ok(RegionGrid { set, axes, cells });
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < axes[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn cfg(rows: &[&[i64]]) -> Configuration {
        Configuration::from_i64_rows(rows).unwrap()
    }

    fn r(p: i64) -> Rat {
        rat(p, 1)
    }

    #[test]
    fn classify_examples() {
        let c = cfg(&[&[1, 0, 1], &[0, 2, 1]]);
        let p = classify(&c, &[r(0), r(0)]).unwrap();
        assert!(p.weak && p.semi && !p.nonresonant);
        let c = cfg(&[&[2, 3]]);
        assert!(classify(&c, &[rat(1, 2)]).unwrap().nonresonant);
        let c = cfg(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, -1]]);
        let p = classify(&c, &[r(0), r(0), r(0)]).unwrap();
        assert!(p.weak && p.semi);
        assert_eq!(p.resonant.len(), 4);
        let c = cfg(&[&[1, 0], &[0, 1], &[0, 0]]);
        assert_eq!(classify(&c, &[r(0), r(0), r(1)]), Err(Error::OutsideSpan));
    }

    #[test]
    fn res_examples() {
        let c = cfg(&[&[2, 3]]);
        assert!(in_res(&c, &[r(7)]).unwrap());
        assert!(!in_res(&c, &[rat(1, 2)]).unwrap());
        let c = cfg(&[&[1, 1, 0], &[0, 1, 2]]);
        assert!(in_res(&c, &[rat(1, 3), r(5)]).unwrap());
        assert!(in_res_by_cosets(&c, &[rat(1, 3), r(5)]).unwrap());
    }

    #[test]
    fn numerical_semigroup_figure() {
        let c = cfg(&[&[2, 3]]);
        let b = Bounds::default();
        let sres: Vec<i64> = (-6..=6).filter(|&x| in_sres(&c, &[r(x)]).unwrap()).collect();
        assert_eq!(sres, alloc::vec![-6, -5, -4, -3, -2, -1, 1]);
        let dres: Vec<i64> = (-6..=6).filter(|&x| in_dres(&c, &[r(x)], &b).unwrap().verdict.is_true()).collect();
        assert_eq!(dres, alloc::vec![2, 3, 4, 5, 6]);
        let big_s: Vec<i64> = (-6..=6).filter(|&x| in_SRes(&c, &[r(x)]).unwrap()).collect();
        assert_eq!(big_s, (-6..=-1).collect::<Vec<_>>());
        let big_d: Vec<i64> = (-6..=6).filter(|&x| in_DRes(&c, &[r(x)]).unwrap()).collect();
        assert_eq!(big_d, (1..=6).collect::<Vec<_>>());
        assert_eq!(in_dres(&c, &[r(-2)], &b).unwrap().verdict, Verdict::False);
        let unc = Bounds { certify: false, ..b };
        assert_eq!(in_dres(&c, &[r(-2)], &unc).unwrap().verdict, Verdict::FalseUpToBounds);
        assert!(in_wres(&c, &[r(1)], &b).unwrap().is_true());
        assert_eq!(in_wres(&c, &[rat(1, 2)], &b).unwrap(), Verdict::False);
    }

    #[test]
    fn plane_figure_samples() {
        let c = cfg(&[&[1, 1, 0], &[0, 1, 2]]);
        let b = Bounds::default();
        assert!(in_sres(&c, &[r(0), rat(7, 3)]).unwrap());
        assert!(!in_sres(&c, &[rat(1, 2), rat(1, 2)]).unwrap());
        assert!(in_sres(&c, &[rat(5, 2), r(-1)]).unwrap());
        assert!(!in_sres(&c, &[r(1), r(1)]).unwrap());
        assert!(in_dres(&c, &[r(3), rat(1, 2)], &b).unwrap().verdict.is_true());
        assert!(in_dres(&c, &[rat(1, 2), r(2)], &b).unwrap().verdict.is_true());
        assert!(!in_dres(&c, &[r(0), rat(1, 2)], &b).unwrap().verdict.is_true());
        assert!(!in_SRes(&c, &[r(0), rat(1, 2)]).unwrap());
        assert!(!in_DRes(&c, &[r(0), rat(1, 2)]).unwrap());
    }

    #[test]
    fn uncertified_scan_agrees_when_k_is_large_enough() {
        let c = cfg(&[&[2, 3]]);
        let unc = Bounds { certify: false, k_max: Some(8), ..Bounds::default() };
        for x in -4..=6 {
            let exact = in_dres(&c, &[r(x)], &Bounds::default()).unwrap().verdict.is_true();
            let scanned = in_dres(&c, &[r(x)], &unc).unwrap().verdict.is_true();
            assert_eq!(exact, scanned, "x = {x}");
        }
    }

    #[test]
    fn region_scan_of_figure() {
        let c = cfg(&[&[2, 3]]);
        let g = region_scan(&c, SetName::BigDres, &[(r(-6), r(6))], &r(1), &Bounds::default()).unwrap();
        assert_eq!(g.members(), (1..=6).map(|x| alloc::vec![r(x)]).collect::<Vec<_>>());
        let g = region_scan(&c, SetName::Sres, &[(r(1), r(0))], &r(1), &Bounds::default()).unwrap();
        assert!(g.cells.is_empty());
    }
}
