//! The exclusion rules, as data: identifier, citation, and a check that
//! reads and updates the per-vector evaluation state.
//!
//! Rules run in the fixed order of [`RULES`]. Each one records a trace entry
//! whether or not it fires; every fired entry carries the numbers needed to
//! re-check its inequality without rerunning the engine.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;

use crate::adjunction::{self, Outcome, RuledTarget};
use crate::enumerator::n_lower_bound;
use crate::error::Result;
use crate::invariants::{Exact, FiberTypeVector, InvariantSet};

use super::profile::{Profile, ProfileKind, RuleId};

pub type Witnesses = BTreeMap<String, Exact>;

/// Facts derived along the way that later rules may use.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// The total space must have `b2+ = 1`.
    pub b2_plus_one: bool,
    /// The total space must be a blow-up of a ruled surface.
    pub ruled_blowup: bool,
}

/// Betti numbers forced once `b2+ = 1` is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BettiResolution {
    pub b1: i64,
    pub b2_plus: i64,
    pub b2_minus: i64,
    /// `b1 / 2` when `b1` is even (base genus of a ruled model).
    pub base_genus_k: Option<i64>,
    /// `b2- − 1` when `b1` is even (number of blow-ups of a ruled model).
    pub blowups_m: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub rule: RuleId,
    pub applicable: bool,
    pub fired: bool,
    pub witnesses: Witnesses,
    pub citation: &'static str,
    pub note: Option<String>,
}

pub(crate) struct Evaluation<'a> {
    pub v: &'a FiberTypeVector,
    pub inv: &'a InvariantSet,
    pub profile: &'a Profile,
    pub flags: Flags,
    pub betti: Option<BettiResolution>,
    pub excluded: bool,
}

#[derive(Default)]
pub(crate) struct Finding {
    applicable: bool,
    fired: bool,
    witnesses: Witnesses,
    note: Option<String>,
}

impl Finding {
    fn not_applicable(note: impl Into<String>) -> Self {
        Finding {
            note: Some(note.into()),
            ..Finding::default()
        }
    }

    fn checked(fired: bool, witnesses: Witnesses) -> Self {
        Finding {
            applicable: true,
            fired,
            witnesses,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

pub struct Rule {
    pub id: RuleId,
    pub title: &'static str,
    pub citation: &'static str,
    check: fn(&mut Evaluation<'_>) -> Result<Finding>,
}

impl std::fmt::Debug for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Rule")
            .field("id", &self.id)
            .field("title", &self.title)
            .finish()
    }
}

pub static RULES: [Rule; 11] = [
    Rule {
        id: RuleId::R1,
        title: "nontriviality",
        citation: "a nontrivial fibration over the sphere has a non-separating vanishing cycle",
        check: r1_nontrivial,
    },
    Rule {
        id: RuleId::R2,
        title: "n_floor",
        citation: "Baykur-Korkmaz: n >= (8g-3)/5",
        check: r2_n_floor,
    },
    Rule {
        id: RuleId::R4,
        title: "geography_floor",
        citation: "Stipsicz: c1^2 >= 4-4g for fibrations over the sphere",
        check: r4_geography_floor,
    },
    Rule {
        id: RuleId::R5,
        title: "ozbagci",
        citation: "Ozbagci: sigma <= n-s-4 for hyperelliptic fibrations over the sphere",
        check: r5_ozbagci,
    },
    Rule {
        id: RuleId::R6,
        title: "li_rational_ruled",
        citation: "T.-J. Li: c1^2 < 2-2g forces a blow-up of a rational or ruled surface, so b2+ = 1",
        check: r6_li_rational_ruled,
    },
    Rule {
        id: RuleId::R7,
        title: "complex_chi_ruled",
        citation: "classification of complex surfaces: chi_h < 0 forces a blown-up ruled surface, which has sigma <= 0",
        check: r7_complex_chi_ruled,
    },
    Rule {
        id: RuleId::R8,
        title: "stipsicz_fiber_count",
        citation: "Stipsicz: fiber-count lower bound for fibrations with b2+ = 1",
        check: r8_stipsicz_fiber_count,
    },
    Rule {
        id: RuleId::R9,
        title: "betti_resolution",
        citation: "b2+ = 1 fixes b1 and b2-; b1 <= 2g-1 from the handle decomposition; a blown-up ruled surface over a genus-k base has b1 = 2k",
        check: r9_betti_resolution,
    },
    Rule {
        id: RuleId::R10,
        title: "adjunction_obstruction",
        citation: "square-zero and adjunction equations for the fiber class in (genus-k surface x S^2) # m CP2-bar",
        check: r10_adjunction,
    },
    Rule {
        id: RuleId::R11,
        title: "taubes_minimality_chain",
        citation: "Liu, Taubes: the minimal model of a non-ruled symplectic manifold has c1^2 >= 0, so b2- >= -c1^2; b1 = 2g-1 is excluded by T.-J. Li, Lemma 2.5 (sub-rule li_2_5, used as stated, not re-derived)",
        check: r11_taubes_minimality,
    },
    Rule {
        id: RuleId::R12,
        title: "cadavid",
        citation: "Cadavid: sigma <= n-s-2(2g-b1) with b1 <= 2g-1",
        check: r12_cadavid,
    },
];

pub fn rule(id: RuleId) -> Option<&'static Rule> {
    RULES.iter().find(|r| r.id == id)
}

fn int(x: i64) -> Exact {
    Ratio::from_integer(x)
}

fn w<const N: usize>(items: [(&str, Exact); N]) -> Witnesses {
    items.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn r1_nontrivial(ev: &mut Evaluation<'_>) -> Result<Finding> {
    let n = ev.v.n();
    Ok(Finding::checked(
        n < 1,
        w([("n", int(n)), ("n_min", int(1))]),
    ))
}

fn r2_n_floor(ev: &mut Evaluation<'_>) -> Result<Finding> {
    let n = ev.v.n();
    let floor = n_lower_bound(ev.v.genus());
    Ok(Finding::checked(
        n < floor,
        w([("n", int(n)), ("n_floor", int(floor))]),
    ))
}

fn r4_geography_floor(ev: &mut Evaluation<'_>) -> Result<Finding> {
    let bound = 4 - 4 * ev.v.genus();
    let c1 = ev.inv.c1_sq;
    Ok(Finding::checked(
        c1 < bound,
        w([("c1_sq", int(c1)), ("bound", int(bound))]),
    ))
}

fn r5_ozbagci(ev: &mut Evaluation<'_>) -> Result<Finding> {
    let bound = ev.v.n() - ev.v.separating_total() - 4;
    let sigma = ev.inv.sigma;
    Ok(Finding::checked(
        sigma > bound,
        w([("sigma", int(sigma)), ("bound", int(bound))]),
    ))
}

fn r6_li_rational_ruled(ev: &mut Evaluation<'_>) -> Result<Finding> {
    let bound = 2 - 2 * ev.v.genus();
    let c1 = ev.inv.c1_sq;
    let witnesses = w([("c1_sq", int(c1)), ("bound", int(bound))]);
    if c1 < bound {
        ev.flags.b2_plus_one = true;
        Ok(Finding::checked(false, witnesses).with_note("flags b2_plus_one"))
    } else {
        Ok(Finding::checked(false, witnesses))
    }
}

fn r7_complex_chi_ruled(ev: &mut Evaluation<'_>) -> Result<Finding> {
    if ev.profile.kind() != ProfileKind::Complex {
        return Ok(Finding::not_applicable("complex profile only"));
    }
    let chi = ev.inv.chi_h;
    let sigma = ev.inv.sigma;
    let witnesses = w([("chi_h", chi), ("sigma", int(sigma))]);
    if chi >= int(0) {
        return Ok(Finding::checked(false, witnesses));
    }
    ev.flags.b2_plus_one = true;
    ev.flags.ruled_blowup = true;
    Ok(Finding::checked(sigma > 0, witnesses).with_note("flags b2_plus_one, ruled_blowup"))
}

fn r8_stipsicz_fiber_count(ev: &mut Evaluation<'_>) -> Result<Finding> {
    if !ev.flags.b2_plus_one {
        return Ok(Finding::not_applicable("b2_plus_one not established"));
    }
    let genus = ev.v.genus();
    let Some(bound) = ev.profile.stipsicz().lookup(genus) else {
        return Ok(Finding::not_applicable(format!(
            "no fiber-count bound for genus {genus}"
        )));
    };
    let total = ev.v.total();
    let finding = Finding::checked(
        total < bound,
        w([("total", int(total)), ("stipsicz_bound", int(bound))]),
    );
    Ok(if ev.profile.stipsicz().is_circular_at(genus) {
        finding.with_note(format!(
            "potentially circular: the genus-{genus} bound is a conclusion of the adjunction route"
        ))
    } else {
        finding
    })
}

fn r9_betti_resolution(ev: &mut Evaluation<'_>) -> Result<Finding> {
    if !ev.flags.b2_plus_one {
        return Ok(Finding::not_applicable("b2_plus_one not established"));
    }
    let genus = ev.v.genus();
    let b1_twice = 4 - ev.inv.sigma - ev.inv.e;
    let b1 = Ratio::new(b1_twice, 2);
    let b2_minus = 1 - ev.inv.sigma;
    let max_b1 = 2 * genus - 1;
    let ruled = ev.flags.ruled_blowup;
    let mut witnesses = w([
        ("b1", b1),
        ("b2_plus", int(1)),
        ("b2_minus", int(b2_minus)),
        ("max_b1", int(max_b1)),
        ("ruled", int(ruled as i64)),
    ]);

    let reason = if !b1.is_integer() {
        Some("b1 is not an integer")
    } else if b1 < int(0) {
        Some("b1 is negative")
    } else if b1 > int(max_b1) {
        Some("b1 exceeds 2g-1")
    } else if b2_minus < 0 {
        Some("b2- is negative")
    } else if ruled && b1_twice % 4 != 0 {
        Some("b1 is odd but a blown-up ruled surface has even b1")
    } else {
        None
    };
    if let Some(reason) = reason {
        return Ok(Finding::checked(true, witnesses).with_note(reason));
    }

    let b1 = b1_twice / 2;
    let (k, m) = if b1 % 2 == 0 {
        (Some(b1 / 2), Some(b2_minus - 1))
    } else {
        (None, None)
    };
    if let (Some(k), Some(m)) = (k, m) {
        witnesses.insert("k".into(), int(k));
        witnesses.insert("m".into(), int(m));
    }
    ev.betti = Some(BettiResolution {
        b1,
        b2_plus: 1,
        b2_minus,
        base_genus_k: k,
        blowups_m: m,
    });
    Ok(Finding::checked(false, witnesses))
}

fn r10_adjunction(ev: &mut Evaluation<'_>) -> Result<Finding> {
    let Some(betti) = ev.betti else {
        return Ok(Finding::not_applicable("no Betti resolution"));
    };
    let (Some(k), Some(m)) = (betti.base_genus_k, betti.blowups_m) else {
        return Ok(Finding::not_applicable("odd b1: no ruled model"));
    };
    if k < 2 {
        return Ok(Finding::not_applicable(format!(
            "base genus k = {k} < 2: degree argument does not apply"
        )));
    }
    if m < 0 {
        return Ok(Finding::not_applicable("negative blow-up count"));
    }
    if ev.inv.sigma > 0 {
        return Ok(Finding::not_applicable("sigma > 0: no ruled model"));
    }
    let target = RuledTarget::new(k, m, ev.v.genus())?;
    let verdict = adjunction::decide(&target)?;
    let mut witnesses = w([
        ("k", int(k)),
        ("m", int(m)),
        ("fiber_genus", int(ev.v.genus())),
        ("degree_bound", int(verdict.degree_bound)),
    ]);
    for (a, cert) in &verdict.per_degree {
        witnesses.insert(format!("T_{a}"), int(cert.completion_constant));
    }
    let fired = verdict.outcome == Outcome::NoSolution;
    let finding = Finding::checked(fired, witnesses);
    Ok(if m == 0 {
        finding.with_note("m = 0: only the trivial bundle is checked, not the twisted one")
    } else if !fired {
        finding.with_note(verdict.summary())
    } else {
        finding
    })
}

fn r11_taubes_minimality(ev: &mut Evaluation<'_>) -> Result<Finding> {
    if ev.excluded {
        return Ok(Finding::not_applicable("already excluded"));
    }
    let (sigma, chi, c1) = (ev.inv.sigma, ev.inv.chi_h, ev.inv.c1_sq);
    if !(sigma > 0 && chi < int(0) && c1 < 0) {
        return Ok(Finding::not_applicable(
            "needs sigma > 0, chi_h < 0, c1^2 < 0",
        ));
    }
    let max_b1 = 2 * ev.v.genus() - 1;
    let lower = int(-c1 + 1 + sigma) - chi * 2;
    let li_2_5 = ev.profile.is_enabled(RuleId::R11Li25);
    let fired = lower > int(max_b1) || (li_2_5 && lower == int(max_b1));
    let witnesses = w([
        ("c1_sq", int(c1)),
        ("sigma", int(sigma)),
        ("chi_h", chi),
        ("b1_lower_bound", lower),
        ("max_b1", int(max_b1)),
        ("li_2_5", int(li_2_5 as i64)),
    ]);
    let finding = Finding::checked(fired, witnesses);
    Ok(if fired && lower == int(max_b1) {
        finding.with_note("b1 forced to equal 2g-1: excluded by sub-rule li_2_5")
    } else {
        finding
    })
}

fn r12_cadavid(ev: &mut Evaluation<'_>) -> Result<Finding> {
    let n = ev.v.n();
    let s = ev.v.separating_total();
    let sigma = ev.inv.sigma;
    let bound = n - s - 2;
    let genus = ev.v.genus();
    // b1 >= 2g - (n - s - sigma)/2
    let b1_min = (4 * genus - (n - s - sigma) + 1).div_euclid(2);
    Ok(Finding::checked(
        sigma > bound,
        w([
            ("sigma", int(sigma)),
            ("bound", int(bound)),
            ("b1_min", int(b1_min)),
        ]),
    ))
}

pub(crate) fn run(ev: &mut Evaluation<'_>) -> Result<Vec<TraceEntry>> {
    let mut trace = Vec::new();
    for rule in RULES.iter().filter(|r| ev.profile.is_enabled(r.id)) {
        let finding = (rule.check)(ev)?;
        ev.excluded |= finding.fired;
        trace.push(TraceEntry {
            rule: rule.id,
            applicable: finding.applicable,
            fired: finding.fired,
            witnesses: finding.witnesses,
            citation: rule.citation,
            note: finding.note,
        });
    }
    Ok(trace)
}

impl TraceEntry {
    fn get(&self, key: &str) -> Option<Exact> {
        self.witnesses.get(key).copied()
    }

    /// Re-derives `fired` from the recorded witnesses alone. Returns `None`
    /// when a required witness is missing.
    pub fn recheck(&self) -> Option<bool> {
        if !self.applicable {
            return Some(false);
        }
        let g = |k: &str| self.get(k);
        let zero = int(0);
        Some(match self.rule {
            RuleId::R1 => g("n")? < g("n_min")?,
            RuleId::R2 => g("n")? < g("n_floor")?,
            RuleId::R4 => g("c1_sq")? < g("bound")?,
            // flags only, never excludes
            RuleId::R6 => {
                g("c1_sq")?;
                false
            }
            RuleId::R5 | RuleId::R12 => g("sigma")? > g("bound")?,
            RuleId::R7 => g("chi_h")? < zero && g("sigma")? > zero,
            RuleId::R8 => g("total")? < g("stipsicz_bound")?,
            RuleId::R9 => {
                let b1 = g("b1")?;
                let ruled = g("ruled")? != zero;
                !b1.is_integer()
                    || b1 < zero
                    || b1 > g("max_b1")?
                    || g("b2_minus")? < zero
                    || (ruled && b1.to_integer() % 2 != 0)
            }
            RuleId::R10 => {
                let to_i = |x: Exact| x.to_integer();
                let target =
                    RuledTarget::new(to_i(g("k")?), to_i(g("m")?), to_i(g("fiber_genus")?)).ok()?;
                adjunction::decide(&target).ok()?.outcome == Outcome::NoSolution
            }
            RuleId::R11 => {
                let lower = g("b1_lower_bound")?;
                let recomputed = -g("c1_sq")? + int(1) + g("sigma")? - g("chi_h")? * 2;
                if recomputed != lower {
                    return Some(!self.fired);
                }
                let max_b1 = g("max_b1")?;
                lower > max_b1 || (g("li_2_5")? != zero && lower == max_b1)
            }
            RuleId::R11Li25 => return None,
        })
    }
}
