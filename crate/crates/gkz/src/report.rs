//! Serializable report documents. Integers and rationals are exact strings; indices are numbers.

use gkz_core::arith::fmt_rat;
use gkz_core::factors::{FactorLabel, FiltrationReport, LocalSystemClass, ReportKind};
use gkz_core::resonance::{Bounds, Verdict};
use gkz_core::{Configuration, Int, Rat};
use serde::{Deserialize, Serialize};

use crate::input::InputDocument;

pub fn int_text(v: &[Int]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn rat_text(v: &[Rat]) -> Vec<String> {
    v.iter().map(fmt_rat).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    #[serde(rename = "K_max")]
    pub k_max: Option<usize>,
    #[serde(rename = "W")]
    pub window: u32,
    #[serde(rename = "R")]
    pub radius: u32,
    pub certify: bool,
}

impl From<&Bounds> for BoundsDoc {
    fn from(b: &Bounds) -> Self {
        BoundsDoc { k_max: b.k_max, window: b.window, radius: b.radius, certify: b.certify }
    }
}

/// A membership answer; `bounds` is present for loci whose negatives may be bounded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsDoc>,
}

impl VerdictDoc {
    pub fn exact(b: bool) -> Self {
        VerdictDoc { verdict: Verdict::from_bool(b).as_str().into(), bounds: None }
    }

    pub fn bounded(v: Verdict, b: &Bounds) -> Self {
        VerdictDoc { verdict: v.as_str().into(), bounds: Some(b.into()) }
    }

    pub fn is_indefinite(&self) -> bool {
        self.verdict == Verdict::FalseUpToBounds.as_str()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDoc {
    pub index: usize,
    pub columns: Vec<usize>,
    pub codim: usize,
    pub rank: usize,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetDoc {
    pub face: usize,
    pub columns: Vec<usize>,
    /// Primitive functional in lattice coordinates.
    pub normal: Vec<String>,
    /// The same functional on the ambient space.
    pub functional: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacesReport {
    pub input: InputDocument,
    pub dim: usize,
    pub rank: usize,
    pub pointed: bool,
    pub faces: Vec<FaceDoc>,
    pub facets: Vec<FacetDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityReport {
    pub input: InputDocument,
    pub normal: bool,
    pub hole: Option<Vec<String>>,
    pub saturation_hilbert_basis: Vec<Vec<String>>,
    /// Columns of the configuration augmented by the saturation basis.
    pub augmented: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetValueDoc {
    pub columns: Vec<usize>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LociDoc {
    pub res: VerdictDoc,
    pub sres: VerdictDoc,
    pub dres: VerdictDoc,
    pub wres: VerdictDoc,
    #[serde(rename = "SRes")]
    pub big_sres: VerdictDoc,
    #[serde(rename = "DRes")]
    pub big_dres: VerdictDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SresWitnessDoc {
    pub face: Vec<usize>,
    pub m: u64,
    pub base: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DresWitnessDoc {
    pub face: Vec<usize>,
    pub level: usize,
    pub power: usize,
    pub base: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResonanceReport {
    pub input: InputDocument,
    pub gamma: Vec<String>,
    pub facet_values: Vec<FacetValueDoc>,
    pub nonresonant: bool,
    pub weakly_nonresonant: bool,
    pub semi_nonresonant: bool,
    pub resonant_facets: Vec<Vec<usize>>,
    pub loci: LociDoc,
    pub sres_witness: Option<SresWitnessDoc>,
    pub dres_witness: Option<DresWitnessDoc>,
    pub bounds: BoundsDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDoc {
    pub point: Vec<String>,
    /// `None` when the point is outside the span of `A`.
    pub verdict: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetsReport {
    pub input: InputDocument,
    pub set: String,
    #[serde(rename = "box")]
    pub bx: Vec<[String; 2]>,
    pub step: String,
    pub bounds: BoundsDoc,
    pub members: Vec<Vec<String>>,
    pub cells: Vec<CellDoc>,
}

impl SetsReport {
    pub fn is_indefinite(&self) -> bool {
        self.cells.iter().any(|c| c.verdict.as_deref() == Some(Verdict::FalseUpToBounds.as_str()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub face: Vec<usize>,
    pub rep: Vec<String>,
    pub order: String,
}

impl From<&LocalSystemClass> for ClassDoc {
    fn from(c: &LocalSystemClass) -> Self {
        ClassDoc { face: c.face.clone(), rep: rat_text(&c.rep), order: c.order.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub face: Vec<usize>,
    pub class: ClassDoc,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDoc {
    pub level: usize,
    pub factors: Vec<FactorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesesDoc {
    pub simplicial: bool,
    pub hypothesis_facets: Vec<Vec<usize>>,
    pub normal: bool,
    pub weakly_nonresonant: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusDoc {
    pub sres: bool,
    pub wres: VerdictDoc,
    pub res: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalFaceDoc {
    pub face: Vec<usize>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumerologyDoc {
    pub level: usize,
    pub count: usize,
    pub bound: usize,
    pub flags_non_isomorphism: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub input: InputDocument,
    pub kind: String,
    pub gamma: Option<Vec<String>>,
    pub class: Option<ClassDoc>,
    pub certification: String,
    pub hypotheses: HypothesesDoc,
    pub levels: Vec<LevelDoc>,
    pub locus: Option<LocusDoc>,
    pub minimal_face: Option<MinimalFaceDoc>,
    pub numerology: Option<NumerologyDoc>,
    pub bounds: BoundsDoc,
}

impl FactorReport {
    pub fn is_indefinite(&self) -> bool {
        self.locus.as_ref().is_some_and(|l| l.wres.is_indefinite())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelDoc {
    pub face: Vec<usize>,
    pub class: ClassDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelComparisonDoc {
    pub level: usize,
    pub dmodule: Vec<LabelDoc>,
    pub perverse: Vec<LabelDoc>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub input: InputDocument,
    pub gamma: Vec<String>,
    pub asserted: bool,
    pub consistent: bool,
    pub dmodule_certification: String,
    pub perverse_certification: String,
    pub levels: Vec<LevelComparisonDoc>,
    pub note: Option<String>,
    pub bounds: BoundsDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapCandidateDoc {
    pub face: Vec<usize>,
    pub base: Vec<String>,
    pub class: Option<ClassDoc>,
    pub active_at_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub input: InputDocument,
    pub advisory: bool,
    pub note: String,
    pub window: u32,
    pub candidates: Vec<GapCandidateDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureDoc {
    pub seed: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub failures: Vec<FailureDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteDoc {
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckDoc>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureCaseDoc {
    pub fixture: String,
    pub case: usize,
    pub args: Vec<String>,
    pub passed: bool,
    pub diff: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixturesDoc {
    pub passed: bool,
    pub fixtures: Vec<String>,
    pub cases: Vec<FixtureCaseDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub suite: Option<SuiteDoc>,
    pub fixtures: Option<FixturesDoc>,
}

/// Any command output, tagged by the command that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command")]
pub enum Report {
    #[serde(rename = "faces")]
    Faces(FacesReport),
    #[serde(rename = "normality")]
    Normality(NormalityReport),
    #[serde(rename = "resonance")]
    Resonance(ResonanceReport),
    #[serde(rename = "sets")]
    Sets(SetsReport),
    #[serde(rename = "factors")]
    Factors(FactorReport),
    #[serde(rename = "compare")]
    Compare(CompareReport),
    #[serde(rename = "gap-factors")]
    GapFactors(GapReport),
    #[serde(rename = "verify")]
    Verify(VerifyReport),
}

impl Report {
    /// Whether some verdict is only known up to bounds.
    pub fn is_indefinite(&self) -> bool {
        match self {
            Report::Resonance(r) => r.loci.dres.is_indefinite() || r.loci.wres.is_indefinite(),
            Report::Sets(r) => r.is_indefinite(),
            Report::Factors(r) => r.is_indefinite(),
            _ => false,
        }
    }

    /// Whether a verification run failed.
    pub fn is_failure(&self) -> bool {
        matches!(self, Report::Verify(v) if !v.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}

pub fn columns_of(cfg: &Configuration, face: usize) -> Vec<usize> {
    cfg.face(face).indices.clone()
}

fn factor_doc(cfg: &Configuration, l: &FactorLabel) -> FactorDoc {
    FactorDoc { face: columns_of(cfg, l.face), class: (&l.class).into(), multiplicity: l.multiplicity }
}

pub fn factor_report(cfg: &Configuration, input: &InputDocument, r: &FiltrationReport) -> FactorReport {
    FactorReport {
        input: input.clone(),
        kind: match r.kind {
            ReportKind::DModule => "dmodule",
            ReportKind::Perverse => "perverse",
        }
        .into(),
        gamma: r.gamma.as_deref().map(rat_text),
        class: r.class.as_ref().map(Into::into),
        certification: r.certification.as_str().into(),
        hypotheses: HypothesesDoc {
            simplicial: r.simplicial,
            hypothesis_facets: r.hypothesis_facets.iter().map(|&k| cfg.facets()[k].face.indices.clone()).collect(),
            normal: r.normal,
            weakly_nonresonant: r.weak,
        },
        levels: r
            .levels
            .iter()
            .enumerate()
            .map(|(i, ls)| LevelDoc { level: i, factors: ls.iter().map(|l| factor_doc(cfg, l)).collect() })
            .collect(),
        locus: r.locus.as_ref().map(|l| LocusDoc {
            sres: l.in_sres,
            wres: VerdictDoc::bounded(l.in_wres, &r.bounds),
            res: l.in_res,
            notes: l.notes.iter().map(|s| s.to_string()).collect(),
        }),
        minimal_face: r.minimal_face.as_ref().map(|m| MinimalFaceDoc { face: columns_of(cfg, m.face), holds: m.holds }),
        numerology: r.numerology.as_ref().map(|n| NumerologyDoc {
            level: n.level,
            count: n.count,
            bound: n.bound,
            flags_non_isomorphism: n.flags_non_isomorphism,
        }),
        bounds: (&r.bounds).into(),
    }
}
