//! Rule engine: per-vector verdicts with certificate traces, survivor sets
//! and the resulting lower bounds.

pub mod profile;
pub mod rules;

use serde::Serialize;

use crate::enumerator::{enumerate_with, EnumerationQuery};
use crate::error::{CensusError, Result};
use crate::exec::{self, Strategy};
use crate::invariants::{invariant_set, FiberTypeVector, InvariantSet};

pub use profile::{Profile, ProfileKind, RuleId, StipsiczEntry, StipsiczTable};
pub use rules::{BettiResolution, Flags, Rule, TraceEntry, RULES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Excluded,
    Survives,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Excluded => "EXCLUDED",
            Status::Survives => "SURVIVES",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub vector: FiberTypeVector,
    pub invariants: InvariantSet,
    pub status: Status,
    pub trace: Vec<TraceEntry>,
    pub flags: Flags,
    pub betti: Option<BettiResolution>,
}

impl Verdict {
    pub fn fired(&self) -> impl Iterator<Item = &TraceEntry> {
        self.trace.iter().filter(|t| t.fired)
    }

    pub fn fired_ids(&self) -> Vec<RuleId> {
        self.fired().map(|t| t.rule).collect()
    }

    pub fn entry(&self, id: RuleId) -> Option<&TraceEntry> {
        self.trace.iter().find(|t| t.rule == id)
    }

    pub fn survives(&self) -> bool {
        self.status == Status::Survives
    }

    /// Re-derives every trace entry from its witnesses and checks the status
    /// against the fired set.
    pub fn verify_certificate(&self) -> bool {
        let any_fired = self.trace.iter().any(|t| t.fired);
        if any_fired != (self.status == Status::Excluded) {
            return false;
        }
        if let Some(b) = self.betti {
            if b.b2_plus - b.b2_minus != self.invariants.sigma
                || 2 - 2 * b.b1 + b.b2_plus + b.b2_minus != self.invariants.e
            {
                return false;
            }
        }
        self.trace.iter().all(|t| t.recheck() == Some(t.fired))
    }
}

pub fn evaluate(v: &FiberTypeVector, p: &Profile) -> Result<Verdict> {
    let invariants = invariant_set(v)?;
    if invariants.residue != 0 {
        return Err(CensusError::InvalidQuery(format!(
            "{v} is not admissible for genus {}: residue {} mod {}",
            v.genus(),
            invariants.residue,
            invariants.modulus
        )));
    }
    let mut ev = rules::Evaluation {
        v,
        inv: &invariants,
        profile: p,
        flags: Flags::default(),
        betti: None,
        excluded: false,
    };
    let trace = rules::run(&mut ev)?;
    let status = if ev.excluded {
        Status::Excluded
    } else {
        Status::Survives
    };
    let (flags, betti) = (ev.flags, ev.betti);
    Ok(Verdict {
        vector: v.clone(),
        invariants,
        status,
        trace,
        flags,
        betti,
    })
}

/// Verdicts for every enumerated vector, in enumeration order.
pub fn census(genus: i64, budget: i64, p: &Profile) -> Result<Vec<Verdict>> {
    census_with(genus, budget, p, Strategy::default())
}

pub fn census_with(
    genus: i64,
    budget: i64,
    p: &Profile,
    strategy: Strategy,
) -> Result<Vec<Verdict>> {
    let q = EnumerationQuery::new(genus, budget)?;
    let vectors = enumerate_with(&q, strategy)?;
    exec::try_map(strategy, &vectors, |v| evaluate(v, p))
}

pub fn survivors(genus: i64, budget: i64, p: &Profile) -> Result<Vec<Verdict>> {
    survivors_with(genus, budget, p, Strategy::default())
}

pub fn survivors_with(
    genus: i64,
    budget: i64,
    p: &Profile,
    strategy: Strategy,
) -> Result<Vec<Verdict>> {
    Ok(census_with(genus, budget, p, strategy)?
        .into_iter()
        .filter(Verdict::survives)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Qualifier {
    ProvenAtLeast,
    Conditional,
}

impl Qualifier {
    pub fn as_str(self) -> &'static str {
        match self {
            Qualifier::ProvenAtLeast => "PROVEN_AT_LEAST",
            Qualifier::Conditional => "CONDITIONAL",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: i64,
    pub qualifier: Qualifier,
}

/// Lower bound implied by a survivor list computed at `budget`.
pub fn lower_bound_from(budget: i64, survivors: &[Verdict]) -> LowerBound {
    match survivors.iter().map(|v| v.vector.total()).min() {
        None => LowerBound {
            value: budget,
            qualifier: Qualifier::ProvenAtLeast,
        },
        Some(value) => LowerBound {
            value,
            qualifier: Qualifier::Conditional,
        },
    }
}

pub fn lower_bound(genus: i64, budget: i64, p: &Profile) -> Result<LowerBound> {
    Ok(lower_bound_from(budget, &survivors(genus, budget, p)?))
}
