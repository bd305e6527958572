//! Command-line definition and dispatch.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gkz_core::arith::{fmt_rat, parse_rat};
use gkz_core::factors::{self, LocalSystemClass};
use gkz_core::oracle::{self, OracleConfig};
use gkz_core::resonance::{self, SetName, Verdict};
use gkz_core::Rat;
use num_traits::Zero;

use crate::error::CliError;
use crate::fixtures;
use crate::input::{self, InputDocument, Problem};
use crate::report::*;

#[derive(Parser, Debug, Clone)]
#[command(name = "gkz", version, about = "Faces, resonance loci and composition-factor tables of GKZ systems")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit with status 4 when a verdict is only known up to bounds.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FactorMode {
    Dmod,
    Perverse,
    Compare,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// List the faces and facet functionals of the cone over A.
    Faces { input: Option<PathBuf> },
    /// Decide normality and list the saturation Hilbert basis.
    Normality { input: Option<PathBuf> },
    /// Facet values, nonresonance flags and locus memberships of gamma.
    Resonance { input: Option<PathBuf> },
    /// Evaluate a locus (res, sres, dres, wres, SRes, DRes) on a grid.
    Sets {
        name: String,
        /// Axis ranges `lo:hi`, comma separated; a single range applies to every axis.
        #[arg(long = "box", allow_hyphen_values = true)]
        bx: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        step: String,
        input: Option<PathBuf>,
    },
    /// Composition-factor tables of the weight filtrations.
    Factors {
        #[arg(value_enum)]
        mode: FactorMode,
        input: Option<PathBuf>,
    },
    /// Advisory labels read off the gap set of a non-normal configuration.
    GapFactors { input: Option<PathBuf> },
    /// Run the oracle property suite and/or the golden fixtures.
    Verify {
        #[arg(long)]
        suite: bool,
        #[arg(long)]
        fixtures: bool,
        /// Only run fixtures whose name contains this string.
        #[arg(long)]
        filter: Option<String>,
        /// Fixture directory.
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Rewrite the expected output of every selected fixture case.
        #[arg(long, hide = true)]
        bless: bool,
    },
}

impl Command {
    pub fn input_path(&self) -> Option<Option<&PathBuf>> {
        match self {
            Command::Faces { input }
            | Command::Normality { input }
            | Command::Resonance { input }
            | Command::Sets { input, .. }
            | Command::Factors { input, .. }
            | Command::GapFactors { input } => Some(input.as_ref()),
            Command::Verify { .. } => None,
        }
    }
}

/// Runs a command. `doc` is required for every command except `verify`.
pub fn execute(command: &Command, doc: Option<&InputDocument>) -> Result<Report, CliError> {
    if let Command::Verify { suite, fixtures: fx, filter, dir, seed, bless } = command {
        return verify(*suite, *fx, filter.as_deref(), dir.clone(), *seed, *bless);
    }
    let doc = doc.ok_or_else(|| CliError::Input("missing input document".into()))?;
    let p = input::validate(doc)?;
    match command {
        Command::Faces { .. } => faces(&p),
        Command::Normality { .. } => normality(&p),
        Command::Resonance { .. } => resonance(&p),
        Command::Sets { name, bx, step, .. } => sets(&p, name, bx, step),
        Command::Factors { mode, .. } => factor_tables(&p, *mode),
        Command::GapFactors { .. } => gap_factors(&p),
        Command::Verify { .. } => unreachable!(),
    }
}

fn faces(p: &Problem) -> Result<Report, CliError> {
    let cfg = &p.config;
    let faces = cfg
        .all_faces()
        .iter()
        .enumerate()
        .map(|(i, f)| FaceDoc {
            index: i,
            columns: f.indices.clone(),
            codim: f.codim,
            rank: f.rank,
            witness: int_text(&f.witness),
        })
        .collect();
    let facets = cfg
        .facets()
        .iter()
        .map(|f| FacetDoc {
            face: f.face_index,
            columns: f.face.indices.clone(),
            normal: int_text(&f.normal),
            functional: rat_text(&f.functional),
        })
        .collect();
    Ok(Report::Faces(FacesReport {
        input: p.document.clone(),
        dim: cfg.dim(),
        rank: cfg.rank(),
        pointed: cfg.is_pointed(),
        faces,
        facets,
    }))
}

fn normality(p: &Problem) -> Result<Report, CliError> {
    let cfg = &p.config;
    let (normal, hole) = cfg.is_normal()?;
    let basis = cfg.saturation_hilbert_basis()?;
    let aug = cfg.augmented()?;
    Ok(Report::Normality(NormalityReport {
        input: p.document.clone(),
        normal,
        hole: hole.as_deref().map(int_text),
        saturation_hilbert_basis: basis.iter().map(|v| int_text(v)).collect(),
        augmented: aug.matrix().columns().iter().map(|v| int_text(v)).collect(),
    }))
}

fn resonance(p: &Problem) -> Result<Report, CliError> {
    let cfg = &p.config;
    let gamma = p.gamma()?;
    let b = &p.bounds;
    let profile = resonance::classify(cfg, gamma)?;
    let sw = resonance::sres_witness(cfg, gamma)?;
    let dres = resonance::in_dres(cfg, gamma, b)?;
    let wres = resonance::in_wres(cfg, gamma, b)?;
    let loci = LociDoc {
        res: VerdictDoc::exact(resonance::in_res(cfg, gamma)?),
        sres: VerdictDoc::exact(sw.is_some()),
        dres: VerdictDoc::bounded(dres.verdict, b),
        wres: VerdictDoc::bounded(wres, b),
        big_sres: VerdictDoc::exact(resonance::in_SRes(cfg, gamma)?),
        big_dres: VerdictDoc::exact(resonance::in_DRes(cfg, gamma)?),
    };
    Ok(Report::Resonance(ResonanceReport {
        input: p.document.clone(),
        gamma: rat_text(gamma),
        facet_values: cfg
            .facets()
            .iter()
            .zip(&profile.values)
            .map(|(f, v)| FacetValueDoc { columns: f.face.indices.clone(), value: fmt_rat(v) })
            .collect(),
        nonresonant: profile.nonresonant,
        weakly_nonresonant: profile.weak,
        semi_nonresonant: profile.semi,
        resonant_facets: profile.resonant.iter().map(|&k| cfg.facets()[k].face.indices.clone()).collect(),
        loci,
        sres_witness: sw.map(|w| SresWitnessDoc { face: columns_of(cfg, w.face), m: w.m, base: int_text(&w.base) }),
        dres_witness: dres.witness.map(|w| DresWitnessDoc {
            face: columns_of(cfg, w.face),
            level: w.level,
            power: w.power,
            base: int_text(&w.base),
        }),
        bounds: b.into(),
    }))
}

fn parse_box(text: &str, dim: usize) -> Result<Vec<(Rat, Rat)>, CliError> {
    let bad = || CliError::Input(format!("--box expects lo:hi[,lo:hi...], got {text:?}"));
    let mut ranges = Vec::new();
    for part in text.split(',') {
        let (lo, hi) = part.split_once(':').ok_or_else(bad)?;
        let lo = parse_rat(lo).map_err(|_| bad())?;
        let hi = parse_rat(hi).map_err(|_| bad())?;
        ranges.push((lo, hi));
    }
    if ranges.len() == 1 && dim > 1 {
        ranges = vec![ranges[0].clone(); dim];
    }
    if ranges.len() != dim {
        return Err(CliError::Input(format!("--box has {} ranges, expected {dim}", ranges.len())));
    }
    Ok(ranges)
}

fn sets(p: &Problem, name: &str, bx: &str, step: &str) -> Result<Report, CliError> {
    let cfg = &p.config;
    let set = SetName::parse(name)
        .ok_or_else(|| CliError::Input(format!("unknown set {name:?}; expected res, sres, dres, wres, SRes or DRes")))?;
    let ranges = parse_box(bx, cfg.dim())?;
    let step = parse_rat(step).map_err(|_| CliError::Input(format!("cannot parse --step {step:?}")))?;
    if step <= Rat::zero() {
        return Err(CliError::Input("--step must be positive".into()));
    }
    let grid = resonance::region_scan(cfg, set, &ranges, &step, &p.bounds)?;
    Ok(Report::Sets(SetsReport {
        input: p.document.clone(),
        set: set.as_str().into(),
        bx: ranges.iter().map(|(lo, hi)| [fmt_rat(lo), fmt_rat(hi)]).collect(),
        step: fmt_rat(&step),
        bounds: (&p.bounds).into(),
        members: grid.members().iter().map(|v| rat_text(v)).collect(),
        cells: grid
            .cells
            .iter()
            .map(|c| CellDoc { point: rat_text(&c.point), verdict: c.verdict.map(|v| v.as_str().to_string()) })
            .collect(),
    }))
}

fn perverse_class(p: &Problem) -> Result<LocalSystemClass, CliError> {
    let cfg = &p.config;
    let rep = match (&p.character, &p.gamma) {
        (Some(c), _) => c.clone(),
        (None, Some(g)) => g.clone(),
        (None, None) => vec![Rat::zero(); cfg.dim()],
    };
    Ok(factors::class_of(cfg, cfg.full_face_index(), &rep)?)
}

fn factor_tables(p: &Problem, mode: FactorMode) -> Result<Report, CliError> {
    let cfg = &p.config;
    match mode {
        FactorMode::Dmod => {
            let r = factors::dmod_report(cfg, p.gamma()?, &p.bounds)?;
            Ok(Report::Factors(factor_report(cfg, &p.document, &r)))
        }
        FactorMode::Perverse => {
            let r = factors::perverse_report(cfg, &perverse_class(p)?)?;
            Ok(Report::Factors(factor_report(cfg, &p.document, &r)))
        }
        FactorMode::Compare => {
            let gamma = p.gamma()?;
            let c = factors::rh_compare(cfg, gamma, &p.bounds)?;
            let labels = |v: &[(usize, LocalSystemClass)]| -> Vec<LabelDoc> {
                v.iter().map(|(f, cl)| LabelDoc { face: columns_of(cfg, *f), class: cl.into() }).collect()
            };
            Ok(Report::Compare(CompareReport {
                input: p.document.clone(),
                gamma: rat_text(gamma),
                asserted: c.asserted,
                consistent: c.consistent(),
                dmodule_certification: c.dmodule.certification.as_str().into(),
                perverse_certification: c.perverse.certification.as_str().into(),
                levels: c
                    .levels
                    .iter()
                    .map(|l| LevelComparisonDoc {
                        level: l.level,
                        dmodule: labels(&l.dmodule),
                        perverse: labels(&l.perverse),
                        matches: l.matches,
                    })
                    .collect(),
                note: c.note.clone(),
                bounds: (&p.bounds).into(),
            }))
        }
    }
}

fn gap_factors(p: &Problem) -> Result<Report, CliError> {
    let cfg = &p.config;
    let window = p.bounds.window;
    let candidates = factors::gap_factor_candidates(cfg, window)?
        .iter()
        .map(|c| GapCandidateDoc {
            face: columns_of(cfg, c.face),
            base: int_text(&c.base),
            class: c.class.as_ref().map(Into::into),
            active_at_zero: c.active_at_zero,
        })
        .collect();
    Ok(Report::GapFactors(GapReport {
        input: p.document.clone(),
        advisory: true,
        note: "candidate labels for extra subquotients of W_0(A, 0); read off components of the gap set, not certified"
            .into(),
        window,
        candidates,
    }))
}

fn suite_doc(seed: Option<u64>) -> Result<SuiteDoc, CliError> {
    let cfg = OracleConfig { seed: seed.unwrap_or(oracle::DEFAULT_SEED), ..OracleConfig::default() };
    let r = oracle::property_suite(&cfg)?;
    Ok(SuiteDoc {
        seed: r.seed,
        passed: r.passed(),
        checks: r
            .checks
            .iter()
            .map(|c| CheckDoc {
                name: c.name.into(),
                cases: c.cases,
                passed: c.passed(),
                failures: c.failures.iter().map(|f| FailureDoc { seed: f.seed, detail: f.detail.clone() }).collect(),
            })
            .collect(),
        notes: r.notes.clone(),
    })
}

fn verify(
    suite: bool,
    fx: bool,
    filter: Option<&str>,
    dir: Option<PathBuf>,
    seed: Option<u64>,
    bless: bool,
) -> Result<Report, CliError> {
    let (suite, fx) = if !suite && !fx { (true, true) } else { (suite, fx) };
    let suite = if suite { Some(suite_doc(seed)?) } else { None };
    let fixtures = if fx {
        let dir = dir.unwrap_or_else(fixtures::default_dir);
        Some(fixtures::run_dir(&dir, filter, bless)?)
    } else {
        None
    };
    let passed = suite.as_ref().is_none_or(|s| s.passed) && fixtures.as_ref().is_none_or(|f| f.passed);
    Ok(Report::Verify(VerifyReport { passed, suite, fixtures }))
}

pub fn verdict_symbol(v: Option<&str>) -> char {
    match v {
        Some(s) if s == Verdict::True.as_str() => '#',
        Some(s) if s == Verdict::False.as_str() => '.',
        Some(_) => '?',
        None => ' ',
    }
}
