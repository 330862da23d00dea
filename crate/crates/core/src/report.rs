//! Bounds reports and the rendered outputs of the census, adjunction and
//! word commands.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::adjunction::ExistenceVerdict;
use crate::error::{CensusError, Result};
use crate::exec::Strategy;
use crate::invariants::Exact;
use crate::obstruction::{
    census_with, lower_bound_from, LowerBound, Profile, ProfileKind, Verdict,
};
use crate::tables;
use crate::twist_words::{
    abelianization_image, h1_order, to_fiber_vector, Group, NecessaryCondition, WordLine,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UpperBoundSource {
    #[serde(rename = "EVEN_2G4")]
    Even2g4,
    #[serde(rename = "ODD_5G3")]
    Odd5g3,
    #[serde(rename = "HYPERELLIPTIC_8G4")]
    Hyperelliptic8g4,
}

impl UpperBoundSource {
    pub fn as_str(self) -> &'static str {
        match self {
            UpperBoundSource::Even2g4 => "EVEN_2G4",
            UpperBoundSource::Odd5g3 => "ODD_5G3",
            UpperBoundSource::Hyperelliptic8g4 => "HYPERELLIPTIC_8G4",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UpperBound {
    pub value: i64,
    pub source: UpperBoundSource,
}

/// Known constructions bounding the minimal count from above. The odd-genus
/// constructions are not complex surfaces, so `M_g` has no upper bound there.
pub fn known_upper_bound(genus: i64, kind: ProfileKind) -> Option<UpperBound> {
    if genus % 2 == 0 {
        return Some(UpperBound {
            value: 2 * genus + 4,
            source: UpperBoundSource::Even2g4,
        });
    }
    if kind == ProfileKind::Complex {
        return None;
    }
    let five = UpperBound {
        value: 5 * genus - 3,
        source: UpperBoundSource::Odd5g3,
    };
    let eight = UpperBound {
        value: 8 * genus + 4,
        source: UpperBoundSource::Hyperelliptic8g4,
    };
    Some(if eight.value < five.value {
        eight
    } else {
        five
    })
}

/// Budget at which the census is run unless overridden.
pub fn default_budget(genus: i64) -> i64 {
    if genus % 2 == 0 {
        2 * genus + 4
    } else {
        2 * genus + 6
    }
}

pub fn render_conclusion(kind: ProfileKind, genus: i64, lower: i64, upper: Option<i64>) -> String {
    let x = format!("{}_{genus}", kind.count_symbol());
    match upper {
        Some(u) if u == lower => format!("{x} = {lower}"),
        Some(u) if u == lower + 1 => format!("{x} ∈ {{{lower}, {u}}}"),
        Some(u) if u > lower => format!("{x} ∈ {{{lower}, …, {u}}}"),
        Some(u) => format!("{x} ≥ {lower} (exceeds known upper bound {u})"),
        None => format!("{x} ≥ {lower}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub genus: i64,
    pub profile: ProfileKind,
    pub budget: i64,
    pub lower_bound: LowerBound,
    pub upper_bound: Option<UpperBound>,
    pub conclusion: String,
}

impl BoundsReport {
    pub fn new(genus: i64, profile: ProfileKind, budget: i64, lower_bound: LowerBound) -> Self {
        let upper_bound = known_upper_bound(genus, profile);
        let conclusion = render_conclusion(
            profile,
            genus,
            lower_bound.value,
            upper_bound.map(|u| u.value),
        );
        BoundsReport {
            genus,
            profile,
            budget,
            lower_bound,
            upper_bound,
            conclusion,
        }
    }
}

pub fn bounds_report(genus: i64, profile: &Profile, strategy: Strategy) -> Result<BoundsReport> {
    let budget = default_budget(genus);
    let census = census_with(genus, budget, profile, strategy)?;
    let survivors: Vec<Verdict> = census.into_iter().filter(Verdict::survives).collect();
    Ok(BoundsReport::new(
        genus,
        profile.kind(),
        budget,
        lower_bound_from(budget, &survivors),
    ))
}

pub fn render_exact(x: Exact) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Fraction(String),
}

impl From<Exact> for Number {
    fn from(x: Exact) -> Self {
        if x.is_integer() {
            Number::Int(x.to_integer())
        } else {
            Number::Fraction(render_exact(x))
        }
    }
}

#[derive(Serialize)]
struct TraceJson<'a> {
    rule: &'static str,
    applicable: bool,
    fired: bool,
    witnesses: BTreeMap<&'a str, Number>,
    citation: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct CandidateJson<'a> {
    n: i64,
    s: &'a [i64],
    e: i64,
    sigma: i64,
    c1sq: i64,
    chi_h_times4: i64,
    chi_h: String,
    verdict: &'static str,
    fired: Vec<&'static str>,
    source: Option<&'static str>,
    trace: Vec<TraceJson<'a>>,
}

impl<'a> CandidateJson<'a> {
    fn new(v: &'a Verdict) -> Self {
        let inv = &v.invariants;
        CandidateJson {
            n: v.vector.n(),
            s: v.vector.s(),
            e: inv.e,
            sigma: inv.sigma,
            c1sq: inv.c1_sq,
            chi_h_times4: inv.chi_h_times4(),
            chi_h: render_exact(inv.chi_h),
            verdict: v.status.as_str(),
            fired: v.fired().map(|t| t.rule.as_str()).collect(),
            source: tables::label_for(&v.vector),
            trace: v
                .trace
                .iter()
                .map(|t| TraceJson {
                    rule: t.rule.as_str(),
                    applicable: t.applicable,
                    fired: t.fired,
                    witnesses: t
                        .witnesses
                        .iter()
                        .map(|(k, x)| (k.as_str(), (*x).into()))
                        .collect(),
                    citation: t.citation,
                    note: t.note.as_deref(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct CensusJson<'a> {
    genus: i64,
    budget: i64,
    profile: &'static str,
    candidates: Vec<CandidateJson<'a>>,
    survivors: Vec<CandidateJson<'a>>,
    lower_bound: i64,
    qualifier: &'static str,
    upper_bound: Option<i64>,
    upper_bound_source: Option<&'static str>,
    conclusion: &'a str,
}

/// Verdicts for one census run plus the bound they imply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub verdicts: Vec<Verdict>,
    pub bounds: BoundsReport,
}

impl CensusReport {
    pub fn run(genus: i64, budget: i64, profile: &Profile, strategy: Strategy) -> Result<Self> {
        let verdicts = census_with(genus, budget, profile, strategy)?;
        let survivors: Vec<Verdict> = verdicts.iter().filter(|v| v.survives()).cloned().collect();
        let bounds = BoundsReport::new(
            genus,
            profile.kind(),
            budget,
            lower_bound_from(budget, &survivors),
        );
        Ok(CensusReport { verdicts, bounds })
    }

    pub fn survivors(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.survives())
    }

    pub fn to_json(&self) -> Result<String> {
        let b = &self.bounds;
        let doc = CensusJson {
            genus: b.genus,
            budget: b.budget,
            profile: b.profile.as_str(),
            candidates: self.verdicts.iter().map(CandidateJson::new).collect(),
            survivors: self.survivors().map(CandidateJson::new).collect(),
            lower_bound: b.lower_bound.value,
            qualifier: b.lower_bound.qualifier.as_str(),
            upper_bound: b.upper_bound.map(|u| u.value),
            upper_bound_source: b.upper_bound.map(|u| u.source.as_str()),
            conclusion: &b.conclusion,
        };
        let mut out = serde_json::to_string_pretty(&doc)
            .map_err(|e| CensusError::Resource(format!("json encoding: {e}")))?;
        out.push('\n');
        Ok(out)
    }

    pub fn to_csv(&self) -> Result<String> {
        let io = |e: csv::Error| CensusError::Resource(format!("csv encoding: {e}"));
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "vector", "e", "sigma", "c1sq", "chi_h", "verdict", "fired", "source",
        ])
        .map_err(io)?;
        for v in &self.verdicts {
            let inv = &v.invariants;
            w.write_record([
                v.vector.to_string(),
                inv.e.to_string(),
                inv.sigma.to_string(),
                inv.c1_sq.to_string(),
                render_exact(inv.chi_h),
                v.status.as_str().to_string(),
                fired_list(v),
                tables::label_for(&v.vector).unwrap_or("").to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CensusError::Resource(format!("csv encoding: {e}")))?;
        String::from_utf8(bytes).map_err(|e| CensusError::Resource(e.to_string()))
    }

    pub fn to_table(&self) -> String {
        let b = &self.bounds;
        let mut out = format!(
            "genus {}, budget {} (n + s < budget), profile {}\n",
            b.genus,
            b.budget,
            b.profile.as_str()
        );
        let mut rows = vec![vec![
            "source".to_string(),
            "vector".into(),
            "e".into(),
            "sigma".into(),
            "c1^2".into(),
            "chi_h".into(),
            "verdict".into(),
            "fired".into(),
        ]];
        for v in &self.verdicts {
            let inv = &v.invariants;
            rows.push(vec![
                tables::label_for(&v.vector).unwrap_or("-").to_string(),
                v.vector.to_string(),
                inv.e.to_string(),
                inv.sigma.to_string(),
                inv.c1_sq.to_string(),
                render_exact(inv.chi_h),
                v.status.as_str().to_string(),
                fired_list(v),
            ]);
        }
        out.push_str(&align(&rows, &[2, 3, 4, 5]));
        let mut survivors = vec![self.survivors().count().to_string()];
        survivors.extend(self.survivors().map(|v| v.vector.to_string()));
        let _ = writeln!(out, "candidates: {}", self.verdicts.len());
        let _ = writeln!(out, "survivors: {}", survivors.join(" "));
        let _ = writeln!(
            out,
            "lower bound: {} ({})",
            b.lower_bound.value,
            b.lower_bound.qualifier.as_str()
        );
        match b.upper_bound {
            Some(u) => {
                let _ = writeln!(out, "upper bound: {} ({})", u.value, u.source.as_str());
            }
            None => out.push_str("upper bound: none\n"),
        }
        let _ = writeln!(out, "conclusion: {}", b.conclusion);
        out
    }
}

fn fired_list(v: &Verdict) -> String {
    v.fired()
        .map(|t| t.rule.as_str())
        .collect::<Vec<_>>()
        .join(";")
}

/// Space-aligned columns; columns listed in `right` are right-justified.
fn align(rows: &[Vec<String>], right: &[usize]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            let pad = widths[c] - cell.chars().count();
            if right.contains(&c) {
                line.push_str(&" ".repeat(pad));
                line.push_str(cell);
            } else {
                line.push_str(cell);
                line.push_str(&" ".repeat(pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn bounds_table(reports: &[BoundsReport]) -> String {
    let mut rows = vec![vec![
        "genus".to_string(),
        "profile".into(),
        "budget".into(),
        "lower".into(),
        "qualifier".into(),
        "upper".into(),
        "source".into(),
        "conclusion".into(),
    ]];
    for r in reports {
        rows.push(vec![
            r.genus.to_string(),
            r.profile.as_str().into(),
            r.budget.to_string(),
            r.lower_bound.value.to_string(),
            r.lower_bound.qualifier.as_str().into(),
            r.upper_bound.map_or("-".into(), |u| u.value.to_string()),
            r.upper_bound.map_or("-", |u| u.source.as_str()).into(),
            r.conclusion.clone(),
        ]);
    }
    align(&rows, &[0, 2, 3, 5])
}

pub fn adjunction_table(v: &ExistenceVerdict) -> String {
    let t = &v.target;
    let mut out = format!(
        "target: (Sigma_{} x S^2) # {} CP2-bar, fiber genus {}\ndegree bound: {}\n",
        t.k, t.m, t.fiber_genus, v.degree_bound
    );
    let mut rows = vec![vec!["a".to_string(), "T_a".into(), "solutions".into()]];
    for (a, cert) in &v.per_degree {
        rows.push(vec![
            a.to_string(),
            cert.completion_constant.to_string(),
            cert.solutions.len().to_string(),
        ]);
    }
    if !v.per_degree.is_empty() {
        out.push_str(&align(&rows, &[0, 1, 2]));
    }
    for s in v.solutions() {
        let c: Vec<String> = s.c.iter().map(i64::to_string).collect();
        let _ = writeln!(out, "solution: a={} b={} c=({})", s.a, s.b, c.join(","));
    }
    let _ = writeln!(out, "outcome: {}", v.outcome.as_str());
    let _ = writeln!(out, "{}", v.summary());
    out
}

#[derive(Serialize)]
struct AdjunctionJson<'a> {
    #[serde(flatten)]
    verdict: &'a ExistenceVerdict,
    summary: &'static str,
}

pub fn adjunction_json(v: &ExistenceVerdict) -> Result<String> {
    let mut out = serde_json::to_string_pretty(&AdjunctionJson {
        verdict: v,
        summary: v.summary(),
    })
    .map_err(|e| CensusError::Resource(format!("json encoding: {e}")))?;
    out.push('\n');
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordReport {
    /// Source line, when the word came from a file.
    pub line: Option<usize>,
    pub word: String,
    /// `None` for the empty word.
    pub vector: Option<String>,
    pub image: i64,
    pub modulus: i64,
    pub necessary_condition: &'static str,
}

pub fn word_reports(genus: i64, words: &[WordLine], from_file: bool) -> Result<Vec<WordReport>> {
    let modulus = h1_order(genus, Group::Hyperelliptic)?;
    words
        .iter()
        .map(|wl| {
            let vector = if wl.word.is_empty() {
                None
            } else {
                Some(to_fiber_vector(&wl.word)?.to_string())
            };
            Ok(WordReport {
                line: from_file.then_some(wl.line),
                word: wl.word.to_string(),
                vector,
                image: abelianization_image(&wl.word)?,
                modulus,
                necessary_condition: NecessaryCondition::of(&wl.word)?.as_str(),
            })
        })
        .collect()
}

pub fn word_table(genus: i64, reports: &[WordReport]) -> String {
    let mut out = format!("genus {genus}\n");
    let mut rows = vec![vec![
        "line".to_string(),
        "vector".into(),
        "image".into(),
        "modulus".into(),
        "necessary_condition".into(),
    ]];
    for r in reports {
        rows.push(vec![
            r.line.map_or("-".into(), |l| l.to_string()),
            r.vector.clone().unwrap_or_else(|| "(empty)".into()),
            r.image.to_string(),
            r.modulus.to_string(),
            r.necessary_condition.into(),
        ]);
    }
    out.push_str(&align(&rows, &[2, 3]));
    out
}

pub fn word_json(reports: &[WordReport]) -> Result<String> {
    let mut out = serde_json::to_string_pretty(reports)
        .map_err(|e| CensusError::Resource(format!("json encoding: {e}")))?;
    out.push('\n');
    Ok(out)
}
