//! Exact membership in `shift + ℕS + ℤL` and degree sets of the toric modules
//! behind the resonance loci.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

use crate::arith::{dot_int, integral, modulo, sub_vec, Int};
use crate::cone::facet_normals;
use crate::error::{Error, Result};
use crate::geometry::Configuration;
use crate::lattice::{quotient, LatticeBasis, LatticeQuotient, QuotientElem};

/// The question `target ∈ shift + ℕS + ℤL`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipQuery {
    pub shift: Vec<Int>,
    pub generators: Vec<Vec<Int>>,
    pub lattice: Vec<Vec<Int>>,
}

#[derive(Clone, Debug)]
struct Gen {
    coords: Vec<Int>,
    torsion: Vec<Int>,
    values: Vec<Int>,
}

/// `ℕS + ℤL` prepared for repeated membership tests.
///
/// Generators lying in the lineality space of the cone modulo `ℤL` generate a group,
/// so they are moved into the lattice part; what remains is a pointed monoid searched
/// downward from the target with facet-value pruning.
#[derive(Clone, Debug)]
pub struct Membership {
    dim: usize,
    quotient: LatticeQuotient,
    span: Option<LatticeBasis>,
    normals: Vec<Vec<Int>>,
    gens: Vec<Gen>,
}

impl Membership {
    pub fn new(dim: usize, generators: &[Vec<Int>], lattice: &[Vec<Int>], budget: u64) -> Result<Self> {
        for v in generators.iter().chain(lattice) {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
        }
        let mut lat: Vec<Vec<Int>> = lattice.to_vec();
        let mut active: Vec<Vec<Int>> = generators.to_vec();
        loop {
            let q = quotient(dim, &lat)?;
            let proj: Vec<QuotientElem> = active.iter().map(|s| q.project(s)).collect::<Result<_>>()?;
            let f = q.free_rank();
            let mut lineal = vec![false; active.len()];
            let moving: Vec<usize> = (0..active.len()).filter(|&i| proj[i].free.iter().all(Zero::is_zero)).collect();
            for &i in &moving {
                lineal[i] = true;
            }
            let free: Vec<Vec<Int>> = (0..active.len()).filter(|&i| !lineal[i]).map(|i| proj[i].free.clone()).collect();
            let mut span = None;
            let mut normals = Vec::new();
            let mut coords: Vec<Vec<Int>> = Vec::new();
            if !free.is_empty() {
                let lb = LatticeBasis::new(f, &free)?;
                coords = free.iter().map(|v| lb.coords_int(v).map(|y| y.expect("in span"))).collect::<Result<_>>()?;
                normals = facet_normals(lb.rank(), &coords, budget)?;
                span = Some(lb);
            }
            let mut k = 0;
            let mut any_new = !moving.is_empty();
            for i in 0..active.len() {
                if lineal[i] {
                    continue;
                }
                if normals.iter().all(|h| dot_int(h, &coords[k]).is_zero()) {
                    lineal[i] = true;
                    any_new = true;
                }
                k += 1;
            }
            if !any_new {
                let gens = (0..active.len())
                    .map(|i| {
                        let c = coords[i].clone();
                        Gen {
                            values: normals.iter().map(|h| dot_int(h, &c)).collect(),
                            coords: c,
                            torsion: proj[i].torsion.clone(),
                        }
                    })
                    .collect();
                return Ok(Membership { dim, quotient: q, span, normals, gens });
            }
            let mut rest = Vec::new();
            for (i, s) in active.into_iter().enumerate() {
                if lineal[i] {
                    lat.push(s);
                } else {
                    rest.push(s);
                }
            }
            active = rest;
        }
    }

    /// Decides `x ∈ ℕS + ℤL`.
    pub fn contains(&self, x: &[Int], budget: u64) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        let p = self.quotient.project(x)?;
        let coords = match &self.span {
            None => {
                return Ok(p.is_zero());
            }
            Some(lb) => match lb.coords_int(&p.free)? {
                Some(y) => y,
                None => return Ok(false),
            },
        };
        let values: Vec<Int> = self.normals.iter().map(|h| dot_int(h, &coords)).collect();
        if values.iter().any(Signed::is_negative) {
            return Ok(false);
        }
        let orders = self.quotient.torsion_invariants();
        let start = (coords, p.torsion, values);
        let mut seen: BTreeSet<(Vec<Int>, Vec<Int>)> = BTreeSet::new();
        seen.insert((start.0.clone(), start.1.clone()));
        let mut stack = vec![start];
        while let Some((y, t, v)) = stack.pop() {
            if y.iter().all(Zero::is_zero) && t.iter().all(Zero::is_zero) {
                return Ok(true);
            }
            for g in &self.gens {
                let v2: Vec<Int> = v.iter().zip(&g.values).map(|(a, b)| a - b).collect();
                if v2.iter().any(Signed::is_negative) {
                    continue;
                }
                let y2 = sub_vec(&y, &g.coords);
                let t2: Vec<Int> = t.iter().zip(&g.torsion).zip(&orders).map(|((a, b), d)| modulo(&(a - b), d)).collect();
                if seen.insert((y2.clone(), t2.clone())) {
                    if seen.len() as u64 > budget {
                        return Err(Error::LimitExceeded { what: "semigroup membership", limit: budget });
                    }
                    stack.push((y2, t2, v2));
                }
            }
        }
        Ok(false)
    }
}

/// Decides `target ∈ shift + ℕS + ℤL`.
pub fn member(q: &MembershipQuery, target: &[Int], budget: u64) -> Result<bool> {
    let dim = target.len();
    if q.shift.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: q.shift.len() });
    }
    Membership::new(dim, &q.generators, &q.lattice, budget)?.contains(&sub_vec(target, &q.shift), budget)
}

/// Degree sets whose Zariski closures define the resonance loci.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegreeSet {
    /// `deg(R_A / t^{a_A} R_A) = ℕA ∖ (a_A + ℕA)`.
    Quotient,
    /// `deg(I_i(A)) = ℕA ∖ ⋃_{codim G > i} ℕG`.
    Ideal { level: usize },
    /// The gap set `(ℝ≥0A ∩ ℤA) ∖ ℕA`.
    Gap,
    /// `deg(I_i(A)) ∖ deg(I_i(A)^k)`.
    IdealQuotient { level: usize, power: usize },
}

/// A maximal family `b + ℕF` inside a degree set, labelled by the coset of `b` in `ℤA/ℤF`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct QDegComponent {
    pub face: usize,
    /// Base point `b` in ambient coordinates.
    pub base: Vec<Int>,
    /// `b` in `ℤA` coordinates.
    pub base_coords: Vec<Int>,
    /// The coset of `b` in Smith coordinates of `ℤA/ℤF`.
    pub class: QuotientElem,
}

/// Cosets `c ∈ ℤA/ℤF` with `c ≡ γ (mod ℚF)`; `gamma` is in `ℤA` coordinates.
pub fn cosets(cfg: &Configuration, face: usize, gamma: &[crate::Rat]) -> Result<Vec<QuotientElem>> {
    let q = cfg.face_quotient(face)?;
    let Some(free) = integral(&q.free_part_rat(gamma)?) else {
        return Ok(Vec::new());
    };
    Ok(q.torsion_elements().into_iter().map(|t| QuotientElem { torsion: t, free: free.clone() }).collect())
}

/// `y ∈ ℕG + ℤF` in `ℤA` coordinates.
pub fn in_face_monoid(cfg: &Configuration, g: usize, f: usize, y: &[Int]) -> Result<bool> {
    cfg.engine(g, Some(f))?.contains(y, cfg.budget())
}

/// `y ∈ ℕA + ℤF` in `ℤA` coordinates.
pub fn in_na_plus_zf(cfg: &Configuration, f: usize, y: &[Int]) -> Result<bool> {
    in_face_monoid(cfg, 0, f, y)
}

/// Whether `y − (e₁+…+e_k) ∈ ℕA + ℤF` for some multiset of `k` ideal generators of level `i`.
/// With `f = None` the lattice part is trivial, which decides `y ∈ deg(I_i(A)^k)`.
pub fn sumset_member(cfg: &Configuration, level: usize, k: usize, y: &[Int], f: Option<usize>) -> Result<bool> {
    let gens = cfg.ideal_generators(level)?;
    let facets: Vec<usize> = match f {
        Some(f) => cfg.facets_containing(f),
        None => (0..cfg.facets().len()).collect(),
    };
    let engine = cfg.engine(0, f)?;
    let vals = |v: &[Int]| -> Vec<Int> { facets.iter().map(|&g| cfg.facets()[g].value_coords(v)).collect() };
    let gen_vals: Vec<Vec<Int>> = gens.iter().map(|e| vals(e)).collect();
    let mut work: u64 = 0;
    let mut stack: Vec<(usize, usize, Vec<Int>, Vec<Int>)> = vec![(0, k, y.to_vec(), vals(y))];
    let mut seen: BTreeSet<(usize, usize, Vec<Int>)> = BTreeSet::new();
    while let Some((start, left, rem, v)) = stack.pop() {
        if left == 0 {
            if engine.contains(&rem, cfg.budget())? {
                return Ok(true);
            }
            continue;
        }
        for i in start..gens.len() {
            let v2: Vec<Int> = v.iter().zip(&gen_vals[i]).map(|(a, b)| a - b).collect();
            if v2.iter().any(Signed::is_negative) {
                continue;
            }
            let rem2 = sub_vec(&rem, &gens[i]);
            if seen.insert((i, left - 1, rem2.clone())) {
                work += 1;
                if work > cfg.budget() {
                    return Err(Error::LimitExceeded { what: "sumset membership", limit: cfg.budget() });
                }
                stack.push((i, left - 1, rem2, v2));
            }
        }
    }
    Ok(false)
}

/// Membership of a coset (given by a lift `y` in `ℤA` coordinates) in the set of classes
/// `b mod ℤF` with `b + ℕF ⊆ D`.
pub fn class_condition(cfg: &Configuration, d: DegreeSet, f: usize, y: &[Int]) -> Result<bool> {
    match d {
        DegreeSet::Quotient => {
            Ok(in_na_plus_zf(cfg, f, y)? && !in_na_plus_zf(cfg, f, &sub_vec(y, &cfg.a_sum_coords()))?)
        }
        DegreeSet::Ideal { level } => {
            if !in_na_plus_zf(cfg, f, y)? {
                return Ok(false);
            }
            for g in cfg.faces_containing(f) {
                if cfg.face(g).codim > level && in_face_monoid(cfg, g, f, y)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        DegreeSet::Gap => {
            for g in cfg.facets_containing(f) {
                if cfg.facets()[g].value_coords(y).is_negative() {
                    return Ok(false);
                }
            }
            Ok(!in_na_plus_zf(cfg, f, y)?)
        }
        DegreeSet::IdealQuotient { level, power } => {
            if power == 0 {
                return Ok(false);
            }
            Ok(class_condition(cfg, DegreeSet::Ideal { level }, f, y)?
                && !sumset_member(cfg, level, power, y, Some(f))?)
        }
    }
}

/// Lift of a coset of `ℤA/ℤF` to `ℤA` coordinates.
pub fn lift(cfg: &Configuration, f: usize, c: &QuotientElem) -> Result<Vec<Int>> {
    Ok(cfg.face_quotient(f)?.section(c))
}

/// Whether some `b ≡ γ (mod ℚF)` has `b + ℕF ⊆ D`; `gamma` is ambient.
pub fn good_class_exists(cfg: &Configuration, d: DegreeSet, f: usize, gamma: &[crate::Rat]) -> Result<bool> {
    Ok(good_class(cfg, d, f, gamma)?.is_some())
}

/// The first good coset found, as a lift in `ℤA` coordinates.
pub fn good_class(
    cfg: &Configuration,
    d: DegreeSet,
    f: usize,
    gamma: &[crate::Rat],
) -> Result<Option<(QuotientElem, Vec<Int>)>> {
    let g = cfg.gamma_coords(gamma)?;
    for c in cosets(cfg, f, &g)? {
        let y = lift(cfg, f, &c)?;
        if class_condition(cfg, d, f, &y)? {
            return Ok(Some((c, y)));
        }
    }
    Ok(None)
}

/// Members of the gap set `(ℝ≥0A ∩ ℤA) ∖ ℕA` come from this family; the three exact families
/// (quotient, ideal, gap) are listed face by face from `A` downward, keeping only classes not
/// already covered by a component on a larger face.
///
/// The search at face `F` walks the image of `ℕA` (or of the saturation Hilbert basis for the
/// gap family) in `ℤA/ℤF` within `l_G ≤ 2 l_G(a_A) + max_h l_G(h) + window` for facets `G ⊇ F`.
pub fn qdeg_components(cfg: &Configuration, d: DegreeSet, window: u32) -> Result<Vec<QDegComponent>> {
    if let DegreeSet::IdealQuotient { .. } = d {
        return Err(Error::Unsupported("component listing for ideal quotients".into()));
    }
    let hb = cfg.hilbert_basis_coords()?;
    let a_sum = cfg.a_sum_coords();
    let mut found: Vec<QDegComponent> = Vec::new();
    let mut work: u64 = 0;
    for f in 0..cfg.all_faces().len() {
        let q = cfg.face_quotient(f)?;
        let facets = cfg.facets_containing(f);
        let bounds: Vec<Int> = facets
            .iter()
            .map(|&g| {
                let fg = &cfg.facets()[g];
                let hmax = hb.iter().map(|h| fg.value_coords(h)).max().unwrap_or_else(Int::zero);
                fg.value_coords(&a_sum) * 2 + hmax + Int::from(window)
            })
            .collect();
        let steps: Vec<Vec<Int>> = match d {
            DegreeSet::Gap => hb.clone(),
            _ => cfg.coords().to_vec(),
        };
        let step_q: Vec<QuotientElem> = steps.iter().map(|s| q.project(s)).collect::<Result<_>>()?;
        let value = |y: &[Int]| -> Vec<Int> { facets.iter().map(|&g| cfg.facets()[g].value_coords(y)).collect() };
        let zero = QuotientElem { torsion: vec![Int::zero(); q.torsion_invariants().len()], free: vec![Int::zero(); q.free_rank()] };
        let mut seen: BTreeSet<QuotientElem> = BTreeSet::new();
        seen.insert(zero.clone());
        let mut stack = vec![zero];
        while let Some(c) = stack.pop() {
            let y = q.section(&c);
            let covered = found.iter().any(|comp| {
                comp.face != f
                    && crate::geometry::is_subset(&cfg.face(f).indices, &cfg.face(comp.face).indices)
                    && cfg
                        .face_quotient(comp.face)
                        .map(|qq| qq.project(&y).map(|p| p == comp.class).unwrap_or(false))
                        .unwrap_or(false)
            });
            if !covered && class_condition(cfg, d, f, &y)? {
                found.push(QDegComponent { face: f, base: cfg.point(&y), base_coords: y.clone(), class: c.clone() });
            }
            for s in &step_q {
                let c2 = q.add(&c, s);
                let y2 = q.section(&c2);
                if value(&y2).iter().zip(&bounds).any(|(v, b)| v > b) {
                    continue;
                }
                if seen.insert(c2.clone()) {
                    work += 1;
                    if work > cfg.budget() {
                        return Err(Error::LimitExceeded { what: "qdeg component listing", limit: cfg.budget() });
                    }
                    stack.push(c2);
                }
            }
        }
    }
    found.sort_by(|a, b| (cfg.face(a.face).codim, &cfg.face(a.face).indices, &a.base).cmp(&(cfg.face(b.face).codim, &cfg.face(b.face).indices, &b.base)));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ints, rat};

    fn cfg(rows: &[&[i64]]) -> Configuration {
        Configuration::from_i64_rows(rows).unwrap()
    }

    fn q(s: &[&[i64]], l: &[&[i64]], shift: &[i64]) -> MembershipQuery {
        MembershipQuery {
            shift: ints(shift),
            generators: s.iter().map(|v| ints(v)).collect(),
            lattice: l.iter().map(|v| ints(v)).collect(),
        }
    }

    #[test]
    fn membership_examples() {
        let s: &[&[i64]] = &[&[1, 0], &[0, 2], &[1, 1]];
        assert!(member(&q(s, &[], &[0, 0]), &ints(&[3, 4]), 10_000).unwrap());
        assert!(!member(&q(s, &[&[0, 2]], &[0, 0]), &ints(&[0, 1]), 10_000).unwrap());
        assert!(!member(&q(&[&[2], &[3]], &[], &[5]), &ints(&[1]), 10_000).unwrap());
        assert!(member(&q(&[&[2], &[3]], &[&[7]], &[5]), &ints(&[5]), 10_000).unwrap());
    }

    #[test]
    fn non_pointed_generators_are_absorbed() {
        let s: &[&[i64]] = &[&[1, 0], &[-1, 0], &[0, 2]];
        assert!(member(&q(s, &[], &[0, 0]), &ints(&[-5, 4]), 10_000).unwrap());
        assert!(!member(&q(s, &[], &[0, 0]), &ints(&[-5, 3]), 10_000).unwrap());
        assert!(!member(&q(s, &[], &[0, 0]), &ints(&[0, -2]), 10_000).unwrap());
        let t: &[&[i64]] = &[&[2, 1], &[-2, 1]];
        assert!(member(&q(t, &[&[4, 0]], &[0, 0]), &ints(&[0, 2]), 10_000).unwrap());
    }

    #[test]
    fn quotient_family_examples() {
        let c = cfg(&[&[2, 3]]);
        assert!(good_class_exists(&c, DegreeSet::Quotient, 1, &[rat(6, 1)]).unwrap());
        assert!(!good_class_exists(&c, DegreeSet::Quotient, 1, &[rat(5, 1)]).unwrap());
        let c = cfg(&[&[1, 1, 0], &[0, 1, 2]]);
        let f = c.face_index(&[2]).unwrap();
        assert!(good_class_exists(&c, DegreeSet::Quotient, f, &[rat(0, 1), rat(7, 3)]).unwrap());
        assert!(!good_class_exists(&c, DegreeSet::Quotient, f, &[rat(1, 2), rat(0, 1)]).unwrap());
    }

    #[test]
    fn gap_family_example() {
        let c = cfg(&[&[1, 0, 1], &[0, 2, 1]]);
        let f = c.face_index(&[1]).unwrap();
        let (_, y) = good_class(&c, DegreeSet::Gap, f, &[rat(0, 1), rat(1, 1)]).unwrap().unwrap();
        assert!(!c.in_semigroup(&y).unwrap());
        let comps = qdeg_components(&c, DegreeSet::Gap, 2).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].face, f);
        assert_eq!(c.lattice().point(&comps[0].base_coords)[0], Int::from(0));
    }

    #[test]
    fn quotient_components_of_numerical_semigroup() {
        let c = cfg(&[&[2, 3]]);
        let comps = qdeg_components(&c, DegreeSet::Quotient, 2).unwrap();
        let bases: Vec<Vec<Int>> = comps.iter().map(|x| x.base.clone()).collect();
        assert_eq!(bases, alloc::vec![ints(&[0]), ints(&[2]), ints(&[3]), ints(&[4]), ints(&[6])]);
        assert!(comps.iter().all(|x| x.face == 1));
    }

    #[test]
    fn sumset_examples() {
        let c = cfg(&[&[2, 3]]);
        assert!(sumset_member(&c, 0, 2, &ints(&[4]), None).unwrap());
        assert!(!sumset_member(&c, 0, 2, &ints(&[3]), None).unwrap());
        assert!(!sumset_member(&c, 0, 2, &ints(&[-1]), None).unwrap());
    }

    #[test]
    fn normal_configuration_has_no_gaps() {
        let c = cfg(&[&[1, 0], &[0, 1]]);
        assert!(qdeg_components(&c, DegreeSet::Gap, 2).unwrap().is_empty());
    }
}
