//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::commands::verdict_symbol;
use crate::report::*;

fn cols(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn vec_text(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

fn class_text(c: &ClassDoc) -> String {
    format!("rep {} order {}", vec_text(&c.rep), c.order)
}

fn verdict_text(v: &VerdictDoc) -> String {
    match &v.bounds {
        Some(b) if v.is_indefinite() => {
            let k = b.k_max.map_or("auto".to_string(), |k| k.to_string());
            format!("{} (K_max {k}, W {}, R {})", v.verdict, b.window, b.radius)
        }
        _ => v.verdict.clone(),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render(report: &Report) -> String {
    let mut s = String::new();
    match report {
        Report::Faces(r) => faces(&mut s, r),
        Report::Normality(r) => normality(&mut s, r),
        Report::Resonance(r) => resonance(&mut s, r),
        Report::Sets(r) => sets(&mut s, r),
        Report::Factors(r) => factors(&mut s, r),
        Report::Compare(r) => compare(&mut s, r),
        Report::GapFactors(r) => gap(&mut s, r),
        Report::Verify(r) => verify(&mut s, r),
    }
    s
}

fn faces(s: &mut String, r: &FacesReport) {
    let _ = writeln!(s, "dimension {}, rank {}, pointed: {}", r.dim, r.rank, yes(r.pointed));
    let _ = writeln!(s, "{} faces", r.faces.len());
    for f in &r.faces {
        let _ = writeln!(s, "  [{}] codim {} rank {} columns {} witness {}", f.index, f.codim, f.rank, cols(&f.columns), vec_text(&f.witness));
    }
    let _ = writeln!(s, "{} facets", r.facets.len());
    for f in &r.facets {
        let _ = writeln!(s, "  {} l_F = {}", cols(&f.columns), vec_text(&f.functional));
    }
}

fn normality(s: &mut String, r: &NormalityReport) {
    let _ = writeln!(s, "normal: {}", yes(r.normal));
    if let Some(h) = &r.hole {
        let _ = writeln!(s, "hole: {}", vec_text(h));
    }
    let _ = writeln!(s, "saturation Hilbert basis:");
    for v in &r.saturation_hilbert_basis {
        let _ = writeln!(s, "  {}", vec_text(v));
    }
    let _ = writeln!(s, "augmented configuration: {} columns", r.augmented.len());
}

fn resonance(s: &mut String, r: &ResonanceReport) {
    let _ = writeln!(s, "gamma = {}", vec_text(&r.gamma));
    for f in &r.facet_values {
        let _ = writeln!(s, "  l_F(gamma) = {} on {}", f.value, cols(&f.columns));
    }
    let _ = writeln!(
        s,
        "nonresonant: {}, weakly: {}, semi: {}",
        yes(r.nonresonant),
        yes(r.weakly_nonresonant),
        yes(r.semi_nonresonant)
    );
    let l = &r.loci;
    for (name, v) in [
        ("res", &l.res),
        ("sres", &l.sres),
        ("dres", &l.dres),
        ("wres", &l.wres),
        ("SRes", &l.big_sres),
        ("DRes", &l.big_dres),
    ] {
        let _ = writeln!(s, "  {name:<5} {}", verdict_text(v));
    }
    if let Some(w) = &r.sres_witness {
        let _ = writeln!(s, "sres witness: face {}, m = {}, b = {}", cols(&w.face), w.m, vec_text(&w.base));
    }
    if let Some(w) = &r.dres_witness {
        let _ = writeln!(s, "dres witness: face {}, level {}, k = {}, b = {}", cols(&w.face), w.level, w.power, vec_text(&w.base));
    }
}

fn sets(s: &mut String, r: &SetsReport) {
    let bx: Vec<String> = r.bx.iter().map(|[lo, hi]| format!("{lo}:{hi}")).collect();
    let _ = writeln!(s, "{} on box {} step {}", r.set, bx.join(","), r.step);
    match r.bx.len() {
        2 => {
            let width = r.cells.iter().filter(|c| c.point[0] == r.cells[0].point[0]).count();
            let rows: Vec<&[CellDoc]> = r.cells.chunks(width.max(1)).collect();
            // rows are indexed by the first coordinate; draw with x to the right and y upward
            for j in (0..width).rev() {
                let line: String = rows.iter().map(|row| verdict_symbol(row[j].verdict.as_deref())).collect();
                let _ = writeln!(s, "  {:>6} {line}", r.cells[j].point[1]);
            }
            let _ = writeln!(s, "  x from {} to {}; '#' member, '.' not, '?' bounded", r.bx[0][0], r.bx[0][1]);
        }
        _ => {
            let members: Vec<String> = r.members.iter().map(|m| vec_text(m)).collect();
            let _ = writeln!(s, "members: {}", members.join(" "));
        }
    }
    let open = r.cells.iter().filter(|c| c.verdict.as_deref() == Some("false_up_to_bounds")).count();
    if open > 0 {
        let _ = writeln!(s, "{open} points false up to bounds");
    }
}

fn factors(s: &mut String, r: &FactorReport) {
    let _ = writeln!(s, "{} filtration", r.kind);
    if let Some(g) = &r.gamma {
        let _ = writeln!(s, "gamma = {}", vec_text(g));
    }
    if let Some(c) = &r.class {
        let _ = writeln!(s, "class {}", class_text(c));
    }
    let h = &r.hypotheses;
    let hf: Vec<String> = h.hypothesis_facets.iter().map(|f| cols(f)).collect();
    let _ = writeln!(s, "certification: {}", r.certification);
    let _ = writeln!(s, "simplicial: {} over [{}], normal: {}", yes(h.simplicial), hf.join(" "), yes(h.normal));
    if let Some(w) = h.weakly_nonresonant {
        let _ = writeln!(s, "weakly nonresonant: {}", yes(w));
    }
    for l in &r.levels {
        let _ = writeln!(s, "level {}:", l.level);
        for f in &l.factors {
            let m = if f.multiplicity > 1 { format!(" x{}", f.multiplicity) } else { String::new() };
            let _ = writeln!(s, "  {} {}{m}", cols(&f.face), class_text(&f.class));
        }
    }
    if let Some(l) = &r.locus {
        let _ = writeln!(s, "sres: {}, wres: {}, res: {}", yes(l.sres), verdict_text(&l.wres), yes(l.res));
        for n in &l.notes {
            let _ = writeln!(s, "  {n}");
        }
    }
    if let Some(m) = &r.minimal_face {
        let _ = writeln!(s, "minimal face {} contained in every carrying face: {}", cols(&m.face), yes(m.holds));
    }
    if let Some(n) = &r.numerology {
        let _ = writeln!(
            s,
            "level {}: {} factors against stalk bound {}{}",
            n.level,
            n.count,
            n.bound,
            if n.flags_non_isomorphism { ", not an isomorphism" } else { "" }
        );
    }
}

fn compare(s: &mut String, r: &CompareReport) {
    let _ = writeln!(s, "gamma = {}", vec_text(&r.gamma));
    let _ = writeln!(s, "agreement asserted: {}, consistent: {}", yes(r.asserted), yes(r.consistent));
    let _ = writeln!(s, "certification: dmodule {}, perverse {}", r.dmodule_certification, r.perverse_certification);
    for l in &r.levels {
        let _ = writeln!(s, "level {}: {}", l.level, if l.matches { "match" } else { "differ" });
        for (side, labels) in [("D", &l.dmodule), ("P", &l.perverse)] {
            for x in labels {
                let _ = writeln!(s, "  {side} {} {}", cols(&x.face), class_text(&x.class));
            }
        }
    }
    if let Some(n) = &r.note {
        let _ = writeln!(s, "note: {n}");
    }
}

fn gap(s: &mut String, r: &GapReport) {
    let _ = writeln!(s, "advisory: {}", r.note);
    for c in &r.candidates {
        let class = c.class.as_ref().map_or("no class".to_string(), class_text);
        let _ = writeln!(s, "  face {} base {} {class}{}", cols(&c.face), vec_text(&c.base), if c.active_at_zero { " (through 0)" } else { "" });
    }
}

fn verify(s: &mut String, r: &VerifyReport) {
    if let Some(suite) = &r.suite {
        let _ = writeln!(s, "property suite (seed {:#x})", suite.seed);
        for c in &suite.checks {
            let _ = writeln!(s, "  {} {} ({} cases)", if c.passed { "PASS" } else { "FAIL" }, c.name, c.cases);
            for f in c.failures.iter().take(5) {
                let _ = writeln!(s, "    seed {:#x}: {}", f.seed, f.detail);
            }
        }
        for n in &suite.notes {
            let _ = writeln!(s, "  note: {n}");
        }
    }
    if let Some(fx) = &r.fixtures {
        let _ = writeln!(s, "fixtures: {}", fx.fixtures.join(", "));
        for c in &fx.cases {
            let _ = writeln!(s, "  {} {}#{} {}", if c.passed { "PASS" } else { "FAIL" }, c.fixture, c.case, c.args.join(" "));
            for d in &c.diff {
                let _ = writeln!(s, "    {d}");
            }
        }
    }
    let _ = writeln!(s, "{}", if r.passed { "all passed" } else { "FAILED" });
}
