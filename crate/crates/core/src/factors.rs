//! Composition-factor labels for the weight filtrations on the D-module side and the
//! perverse side, their comparison, and gap-module candidates.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::arith::{denom_lcm, frac, integral, Int, Rat};
use crate::error::{Error, Result};
use crate::geometry::{is_subset, Configuration};
use crate::resonance::{classify, in_sres, in_wres, Bounds, Verdict};
use crate::semigroup::{qdeg_components, DegreeSet};

/// A rank-one local system on the torus of a face: a rational vector of `ℚF` modulo `ℤF`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalSystemClass {
    /// Column indices of the face.
    pub face: Vec<usize>,
    /// Canonical representative: fractional parts of the coordinates in the HNF basis of `ℤF`.
    pub rep: Vec<Rat>,
    /// Least `k ≥ 1` with `k·rep ∈ ℤF`.
    pub order: Int,
}

impl LocalSystemClass {
    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }
}

/// The class of `γ ∈ ℚF` modulo `ℤF`.
pub fn class_of(cfg: &Configuration, face: usize, gamma: &[Rat]) -> Result<LocalSystemClass> {
    if gamma.len() != cfg.dim() {
        return Err(Error::DimensionMismatch { expected: cfg.dim(), found: gamma.len() });
    }
    let lb = cfg.face_lattice(face)?;
    let Some(y) = lb.coords_rat(gamma)? else {
        return Err(Error::NotInFaceSpan { face: cfg.face(face).indices.clone() });
    };
    let reduced: Vec<Rat> = y.iter().map(frac).collect();
    Ok(LocalSystemClass {
        face: cfg.face(face).indices.clone(),
        rep: lb.point_rat(&reduced),
        order: denom_lcm(&y),
    })
}

/// Whether `γ ∈ ℚF`.
pub fn in_face_span(cfg: &Configuration, face: usize, gamma: &[Rat]) -> Result<bool> {
    Ok(cfg.face_lattice(face)?.coords_rat(gamma)?.is_some())
}

/// Classes on `T_F` whose pullback to `T_A` is the given class on `A`.
///
/// These are the classes of `(γ_A + ℤA) ∩ ℚF` modulo `ℤF`; when nonempty there are exactly
/// as many as the order of the torsion subgroup of `ℤA/ℤF`.
pub fn pullback_solutions(
    cfg: &Configuration,
    face: usize,
    class: &LocalSystemClass,
) -> Result<Vec<LocalSystemClass>> {
    if face >= cfg.all_faces().len() {
        return Err(Error::NotAFace(Vec::new()));
    }
    if class.face != cfg.face(0).indices {
        return Err(Error::Unsupported("class must live on the full configuration".into()));
    }
    let g = cfg.gamma_coords(&class.rep)?;
    let q = cfg.face_quotient(face)?;
    let w = q.smith_coords_rat(&g)?;
    let rho = q.sub_rank();
    if integral(&w[rho..]).is_none() {
        return Ok(Vec::new());
    }
    let positions = q.torsion_positions();
    let mut out = Vec::new();
    for t in q.torsion_elements() {
        let mut z = w.clone();
        for (k, &i) in positions.iter().enumerate() {
            z[i] += Rat::from_integer(t[k].clone());
        }
        for x in z[rho..].iter_mut() {
            *x = Rat::zero();
        }
        let coords = q.from_smith_rat(&z);
        out.push(class_of(cfg, face, &cfg.point_rat(&coords))?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// A composition-factor label `(F, class)` at filtration level `codim F`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FactorLabel {
    pub level: usize,
    pub face: usize,
    pub class: LocalSystemClass,
    pub multiplicity: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Certification {
    /// Only the canonical epimorphism onto the listed sum is asserted.
    EpimorphismOnly,
    /// The epimorphism is an isomorphism.
    Isomorphism,
    /// Isomorphism onto a sum of minimal extensions: each graded piece is semisimple.
    SemisimpleCertified,
}

impl Certification {
    pub fn as_str(self) -> &'static str {
        match self {
            Certification::EpimorphismOnly => "epimorphism-only",
            Certification::Isomorphism => "isomorphism",
            Certification::SemisimpleCertified => "semisimple-certified",
        }
    }
}

/// How `γ` sits relative to `sres`, `wres`, `res`, with the consequences for the filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusStatus {
    pub in_sres: bool,
    pub in_wres: Verdict,
    pub in_res: bool,
    pub notes: Vec<&'static str>,
}

/// The face `F₀` cut out by the resonant facets and whether every face with `γ ∈ ℚF` contains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalFaceCheck {
    pub face: usize,
    pub holds: bool,
}

/// Stalk-count obstruction at the fixed point for trivial classes on pointed cones:
/// an isomorphism at level `r_A - 1` needs at most `dim Λ^{r_A-1} ℂ^{r_A} = r_A` factors with
/// nonzero stalk there. Factors on rays with a nontrivial class have zero stalk and are not counted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Numerology {
    pub level: usize,
    pub count: usize,
    pub bound: usize,
    pub flags_non_isomorphism: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    DModule,
    Perverse,
}

/// Factor tables for every filtration level with the hypotheses that certify them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub kind: ReportKind,
    pub gamma: Option<Vec<Rat>>,
    pub class: Option<LocalSystemClass>,
    /// `levels[i]` lists the factors of the `i`-th graded piece.
    pub levels: Vec<Vec<FactorLabel>>,
    /// Facets entering the simplicial-family hypothesis (resonant facets, or facets
    /// admitting a pulled-back class).
    pub hypothesis_facets: Vec<usize>,
    pub simplicial: bool,
    pub normal: bool,
    /// `γ` weakly nonresonant (D-module side only).
    pub weak: Option<bool>,
    pub certification: Certification,
    pub locus: Option<LocusStatus>,
    pub minimal_face: Option<MinimalFaceCheck>,
    pub numerology: Option<Numerology>,
    pub bounds: Bounds,
}

impl FiltrationReport {
    pub fn labels_at(&self, i: usize) -> &[FactorLabel] {
        self.levels.get(i).map_or(&[], Vec::as_slice)
    }

    /// Number of factors supported on each face.
    pub fn face_multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for l in self.levels.iter().flatten() {
            *m.entry(l.face).or_insert(0) += l.multiplicity;
        }
        m
    }
}

fn intersection_face(cfg: &Configuration, facets: &[usize]) -> usize {
    let mut set: Vec<usize> = cfg.face(0).indices.clone();
    for &k in facets {
        let g = &cfg.facets()[k].face.indices;
        set.retain(|j| g.binary_search(j).is_ok());
    }
    cfg.face_index(&set).expect("intersection of facets is a face")
}

/// D-module side: factors `(F, class_of(F, γ))` for faces with `γ ∈ ℚF`.
pub fn dmod_report(cfg: &Configuration, gamma: &[Rat], bounds: &Bounds) -> Result<FiltrationReport> {
    let profile = classify(cfg, gamma)?;
    let r = cfg.rank();
    let mut levels: Vec<Vec<FactorLabel>> = vec![Vec::new(); r + 1];
    let mut carrying = Vec::new();
    for f in 0..cfg.all_faces().len() {
        if in_face_span(cfg, f, gamma)? {
            let i = cfg.face(f).codim;
            levels[i].push(FactorLabel { level: i, face: f, class: class_of(cfg, f, gamma)?, multiplicity: 1 });
            carrying.push(f);
        }
    }
    let resonant_faces: Vec<usize> = profile.resonant.iter().map(|&k| cfg.facets()[k].face_index).collect();
    let simplicial = cfg.is_simplicial_family(&resonant_faces)?;
    let normal = cfg.is_normal()?.0;
    let certification = if simplicial && normal && profile.weak {
        Certification::SemisimpleCertified
    } else if simplicial {
        Certification::Isomorphism
    } else {
        Certification::EpimorphismOnly
    };
    let s = in_sres(cfg, gamma)?;
    let w = in_wres(cfg, gamma, bounds)?;
    let res = !profile.nonresonant;
    let mut notes = Vec::new();
    if !s {
        notes.push("top filtration step is the whole module: N_A(gamma) = (j_A)_+ L_A(gamma)");
    }
    if w == Verdict::False {
        notes.push("every W_i agrees with its saturated counterpart; W_0 is irreducible");
    }
    if !res {
        notes.push("all W_i equal the minimal extension; N_A(gamma) is irreducible");
    }
    let minimal_face = if simplicial {
        let f0 = intersection_face(cfg, &profile.resonant);
        let holds = carrying.iter().all(|&f| is_subset(&cfg.face(f0).indices, &cfg.face(f).indices));
        Some(MinimalFaceCheck { face: f0, holds })
    } else {
        None
    };
    Ok(FiltrationReport {
        kind: ReportKind::DModule,
        gamma: Some(gamma.to_vec()),
        class: None,
        levels,
        hypothesis_facets: profile.resonant.clone(),
        simplicial,
        normal,
        weak: Some(profile.weak),
        certification,
        locus: Some(LocusStatus { in_sres: s, in_wres: w, in_res: res, notes }),
        minimal_face,
        numerology: None,
        bounds: *bounds,
    })
}

/// Perverse side: factors `(F, c)` for every class `c` on `T_F` pulling back to the given class.
pub fn perverse_report(cfg: &Configuration, class: &LocalSystemClass) -> Result<FiltrationReport> {
    let r = cfg.rank();
    let mut levels: Vec<Vec<FactorLabel>> = vec![Vec::new(); r + 1];
    let mut solvable = vec![false; cfg.all_faces().len()];
    for f in 0..cfg.all_faces().len() {
        let sols = pullback_solutions(cfg, f, class)?;
        let i = cfg.face(f).codim;
        solvable[f] = !sols.is_empty();
        for c in sols {
            levels[i].push(FactorLabel { level: i, face: f, class: c, multiplicity: 1 });
        }
    }
    let hypothesis_facets: Vec<usize> =
        (0..cfg.facets().len()).filter(|&k| solvable[cfg.facets()[k].face_index]).collect();
    let faces: Vec<usize> = hypothesis_facets.iter().map(|&k| cfg.facets()[k].face_index).collect();
    let simplicial = cfg.is_simplicial_family(&faces)?;
    let normal = cfg.is_normal()?.0;
    let numerology = if class.is_trivial() && cfg.is_pointed() && r >= 2 {
        let level = r - 1;
        let count = levels[level].iter().filter(|l| l.class.is_trivial()).map(|l| l.multiplicity).sum();
        Some(Numerology { level, count, bound: r, flags_non_isomorphism: count > r })
    } else {
        None
    };
    Ok(FiltrationReport {
        kind: ReportKind::Perverse,
        gamma: None,
        class: Some(class.clone()),
        levels,
        hypothesis_facets,
        simplicial,
        normal,
        weak: None,
        certification: if simplicial { Certification::Isomorphism } else { Certification::EpimorphismOnly },
        locus: None,
        minimal_face: None,
        numerology,
        bounds: Bounds::default(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelComparison {
    pub level: usize,
    pub dmodule: Vec<(usize, LocalSystemClass)>,
    pub perverse: Vec<(usize, LocalSystemClass)>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhComparison {
    pub dmodule: FiltrationReport,
    pub perverse: FiltrationReport,
    /// Labels must agree (normal `A`, weakly nonresonant `γ`).
    pub asserted: bool,
    pub levels: Vec<LevelComparison>,
    pub note: Option<String>,
}

impl RhComparison {
    /// False only when agreement is asserted and some level differs.
    pub fn consistent(&self) -> bool {
        !self.asserted || self.levels.iter().all(|l| l.matches)
    }

    pub fn discrepancies(&self) -> Vec<&LevelComparison> {
        self.levels.iter().filter(|l| !l.matches).collect()
    }
}

/// Compares label multisets per level between the two filtrations.
pub fn rh_compare(cfg: &Configuration, gamma: &[Rat], bounds: &Bounds) -> Result<RhComparison> {
    let dmodule = dmod_report(cfg, gamma, bounds)?;
    let perverse = perverse_report(cfg, &class_of(cfg, 0, gamma)?)?;
    let asserted = dmodule.normal && dmodule.weak == Some(true);
    let mut levels = Vec::new();
    for i in 0..dmodule.levels.len() {
        let mut d: Vec<(usize, LocalSystemClass)> =
            dmodule.levels[i].iter().flat_map(|l| vec![(l.face, l.class.clone()); l.multiplicity]).collect();
        let mut p: Vec<(usize, LocalSystemClass)> =
            perverse.levels[i].iter().flat_map(|l| vec![(l.face, l.class.clone()); l.multiplicity]).collect();
        d.sort();
        p.sort();
        let matches = d == p;
        levels.push(LevelComparison { level: i, dmodule: d, perverse: p, matches });
    }
    let note = if levels.iter().any(|l| !l.matches) && !dmodule.normal {
        Some(String::from(
            "A is not normal: extra perverse labels come from torsion in ZA/ZF; on the D-module side they \
             appear only after augmenting A by its saturation (W-hat versus W)",
        ))
    } else {
        None
    };
    Ok(RhComparison { dmodule, perverse, asserted, levels, note })
}

/// A label read off a component `b + ℕF` of the gap set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapCandidate {
    pub face: usize,
    pub base: Vec<Int>,
    /// `class_of(F, b)` when `b ∈ ℚF`.
    pub class: Option<LocalSystemClass>,
    /// The component passes through the origin, so it can contribute to `W_0(A, 0)`.
    pub active_at_zero: bool,
}

/// Advisory labels for possible extra subquotients of `W_0(A, 0)` in the non-normal case.
pub fn gap_factor_candidates(cfg: &Configuration, window: u32) -> Result<Vec<GapCandidate>> {
    let comps = qdeg_components(cfg, DegreeSet::Gap, window)?;
    let mut out = Vec::new();
    for c in comps {
        let b: Vec<Rat> = c.base.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let class = if in_face_span(cfg, c.face, &b)? { Some(class_of(cfg, c.face, &b)?) } else { None };
        out.push(GapCandidate { face: c.face, base: c.base, active_at_zero: class.is_some(), class });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ints, rat};

    fn cfg(rows: &[&[i64]]) -> Configuration {
        Configuration::from_i64_rows(rows).unwrap()
    }

    fn r(p: i64) -> Rat {
        rat(p, 1)
    }

    #[test]
    fn class_examples() {
        let c = cfg(&[&[1, 0, 1], &[0, 2, 1]]);
        let f2 = c.face_index(&[1]).unwrap();
        let alpha = class_of(&c, f2, &[r(0), r(1)]).unwrap();
        assert_eq!(alpha.order, Int::from(2));
        assert!(class_of(&c, f2, &[r(0), r(2)]).unwrap().is_trivial());
        assert!(class_of(&c, f2, &[r(0), r(-4)]).unwrap().is_trivial());
        assert!(matches!(class_of(&c, f2, &[r(1), r(0)]), Err(Error::NotInFaceSpan { .. })));
    }

    #[test]
    fn pullback_examples() {
        let hat = cfg(&[&[0, 0], &[2, 1]]);
        let f = hat.face_index(&[0, 1]).unwrap();
        assert_eq!(f, 0);
        let triv = class_of(&hat, 0, &[r(0), r(0)]).unwrap();
        let sub = Configuration::from_i64_rows(&[&[0, 0], &[2, 1]]).unwrap();
        assert_eq!(pullback_solutions(&sub, 0, &triv).unwrap().len(), 1);

        let c = cfg(&[&[1, 0, 1], &[0, 2, 1]]);
        let triv = class_of(&c, 0, &[r(0), r(0)]).unwrap();
        let f1 = c.face_index(&[0]).unwrap();
        let f2 = c.face_index(&[1]).unwrap();
        assert_eq!(pullback_solutions(&c, f1, &triv).unwrap().len(), 1);
        let sols = pullback_solutions(&c, f2, &triv).unwrap();
        assert_eq!(sols.len(), 2);
        assert_eq!(sols[1].rep, alloc::vec![r(0), r(1)]);
        let half = class_of(&c, 0, &[rat(1, 2), r(0)]).unwrap();
        assert!(pullback_solutions(&c, f2, &half).unwrap().is_empty());
    }

    #[test]
    fn gap_configuration_reports() {
        let c = cfg(&[&[1, 0, 1], &[0, 2, 1]]);
        let b = Bounds::default();
        let d = dmod_report(&c, &[r(0), r(0)], &b).unwrap();
        assert_eq!(d.labels_at(1).len(), 2);
        assert!(d.labels_at(1).iter().all(|l| l.class.is_trivial()));
        assert_eq!(d.certification, Certification::Isomorphism);
        assert_eq!(d.minimal_face.as_ref().map(|m| m.holds), Some(true));
        let p = perverse_report(&c, &class_of(&c, 0, &[r(0), r(0)]).unwrap()).unwrap();
        assert_eq!(p.labels_at(1).len(), 3);
        let cmp = rh_compare(&c, &[r(0), r(0)], &b).unwrap();
        assert!(!cmp.asserted);
        assert_eq!(cmp.discrepancies().len(), 1);
        assert_eq!(cmp.discrepancies()[0].level, 1);
        let p = perverse_report(&c, &class_of(&c, 0, &[r(0), r(0)]).unwrap()).unwrap();
        let num = p.numerology.clone().unwrap();
        assert_eq!((num.count, num.bound, num.flags_non_isomorphism), (2, 2, false));
        let gaps = gap_factor_candidates(&c, 4).unwrap();
        assert_eq!(gaps.len(), 1);
        assert_eq!(gaps[0].base, ints(&[0, 1]));
        assert_eq!(gaps[0].class.as_ref().unwrap().order, Int::from(2));
    }

    #[test]
    fn square_cone_reports() {
        let c = cfg(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, -1]]);
        let b = Bounds::default();
        let zero = [r(0), r(0), r(0)];
        let d = dmod_report(&c, &zero, &b).unwrap();
        assert!(!d.simplicial);
        assert_eq!(d.certification, Certification::EpimorphismOnly);
        assert_eq!(d.labels_at(2).len(), 4);
        let p = perverse_report(&c, &class_of(&c, 0, &zero).unwrap()).unwrap();
        assert!(!p.simplicial);
        let num = p.numerology.clone().unwrap();
        assert_eq!((num.level, num.count, num.bound, num.flags_non_isomorphism), (2, 4, 3, true));
        let cmp = rh_compare(&c, &zero, &b).unwrap();
        assert!(cmp.asserted && cmp.consistent());
    }

    #[test]
    fn numerical_semigroup_reports() {
        let c = cfg(&[&[2, 3]]);
        let b = Bounds::default();
        let d = dmod_report(&c, &[rat(1, 2)], &b).unwrap();
        assert_eq!(d.labels_at(0).len(), 1);
        assert_eq!(d.labels_at(0)[0].class.order, Int::from(2));
        assert!(d.labels_at(1).is_empty());
        let cmp = rh_compare(&c, &[rat(1, 2)], &b).unwrap();
        assert!(cmp.levels.iter().all(|l| l.matches));
        let gaps = gap_factor_candidates(&c, 4).unwrap();
        assert_eq!(gaps.len(), 1);
        assert_eq!(gaps[0].base, ints(&[1]));
        assert!(!gaps[0].active_at_zero);
    }

    #[test]
    fn affine_line_has_point_factor() {
        let c = cfg(&[&[1]]);
        let p = perverse_report(&c, &class_of(&c, 0, &[r(0)]).unwrap()).unwrap();
        assert_eq!(p.labels_at(1).len(), 1);
        assert!(c.face(p.labels_at(1)[0].face).indices.is_empty());
    }
}
