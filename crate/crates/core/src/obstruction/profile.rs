//! Rule profiles: which exclusion rules run, and the fiber-count table used
//! for `b2+ = 1` manifolds.
//!
//! Profiles can be loaded from a TOML file:
//!
//! ```toml
//! kind = "general"            # "complex" or "general"; picks the base profile
//! rules = ["R1", "R2", "R4"]  # optional: replaces the base rule set
//! enable = ["R11.li_2_5"]     # optional: applied after `rules`
//! disable = ["R12"]           # optional: applied last
//!
//! # optional: when any entry is present the default table is replaced
//! [[stipsicz]]
//! parity = "even"             # "even", "odd" or "any"
//! min_genus = 6
//! max_genus = 12              # optional
//! coefficient = 2             # bound = coefficient * g + offset
//! offset = 4
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CensusError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    Complex,
    General,
}

impl ProfileKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ProfileKind::Complex => "complex",
            ProfileKind::General => "general",
        }
    }

    /// Symbol of the minimal fiber count this profile bounds.
    pub fn count_symbol(self) -> &'static str {
        match self {
            ProfileKind::Complex => "M",
            ProfileKind::General => "N",
        }
    }
}

impl FromStr for ProfileKind {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complex" => Ok(ProfileKind::Complex),
            "general" => Ok(ProfileKind::General),
            other => Err(CensusError::Config(format!(
                "unknown profile kind {other:?}"
            ))),
        }
    }
}

/// Rule identifiers, in evaluation order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    R1,
    R2,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    /// Sub-rule of R11: a forced `b1 = 2g − 1` is itself a contradiction.
    R11Li25,
    R12,
}

impl RuleId {
    pub const ALL: [RuleId; 12] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
        RuleId::R7,
        RuleId::R8,
        RuleId::R9,
        RuleId::R10,
        RuleId::R11,
        RuleId::R11Li25,
        RuleId::R12,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R4 => "R4",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
            RuleId::R7 => "R7",
            RuleId::R8 => "R8",
            RuleId::R9 => "R9",
            RuleId::R10 => "R10",
            RuleId::R11 => "R11",
            RuleId::R11Li25 => "R11.li_2_5",
            RuleId::R12 => "R12",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = CensusError;

    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.as_str() == s || (*r == RuleId::R11Li25 && s == "li_2_5"))
            .ok_or_else(|| CensusError::Config(format!("unknown rule id {s:?}")))
    }
}

impl Serialize for RuleId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Any,
}

impl Parity {
    fn admits(self, genus: i64) -> bool {
        match self {
            Parity::Even => genus % 2 == 0,
            Parity::Odd => genus % 2 == 1,
            Parity::Any => true,
        }
    }
}

/// One row of the fiber-count table: genera matching the predicate need at
/// least `coefficient * g + offset` singular fibers when `b2+ = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StipsiczEntry {
    pub parity: Parity,
    pub min_genus: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_genus: Option<i64>,
    pub coefficient: i64,
    pub offset: i64,
}

impl StipsiczEntry {
    pub fn matches(&self, genus: i64) -> bool {
        self.parity.admits(genus)
            && genus >= self.min_genus
            && self.max_genus.is_none_or(|hi| genus <= hi)
    }

    pub fn bound(&self, genus: i64) -> i64 {
        self.coefficient * genus + self.offset
    }
}

/// Genera whose fiber-count bound is a conclusion of this engine (via the
/// adjunction route) rather than an input.
pub const CIRCULAR_GENERA: [i64; 2] = [4, 7];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StipsiczTable {
    entries: Vec<StipsiczEntry>,
}

impl Default for StipsiczTable {
    fn default() -> Self {
        StipsiczTable {
            entries: vec![
                StipsiczEntry {
                    parity: Parity::Even,
                    min_genus: 6,
                    max_genus: None,
                    coefficient: 2,
                    offset: 4,
                },
                StipsiczEntry {
                    parity: Parity::Odd,
                    min_genus: 15,
                    max_genus: None,
                    coefficient: 2,
                    offset: 10,
                },
                StipsiczEntry {
                    parity: Parity::Odd,
                    min_genus: 9,
                    max_genus: Some(13),
                    coefficient: 2,
                    offset: 6,
                },
            ],
        }
    }
}

impl StipsiczTable {
    pub fn new(entries: Vec<StipsiczEntry>) -> Self {
        StipsiczTable { entries }
    }

    pub fn entries(&self) -> &[StipsiczEntry] {
        &self.entries
    }

    /// Bound from the first matching entry.
    pub fn lookup(&self, genus: i64) -> Option<i64> {
        self.entries
            .iter()
            .find(|e| e.matches(genus))
            .map(|e| e.bound(genus))
    }

    pub fn is_circular_at(&self, genus: i64) -> bool {
        CIRCULAR_GENERA.contains(&genus) && self.lookup(genus).is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    kind: ProfileKind,
    enabled: BTreeSet<RuleId>,
    stipsicz: StipsiczTable,
}

impl Profile {
    pub fn complex() -> Self {
        Profile {
            kind: ProfileKind::Complex,
            enabled: RuleId::ALL.into_iter().collect(),
            stipsicz: StipsiczTable::default(),
        }
    }

    pub fn general() -> Self {
        Profile {
            kind: ProfileKind::General,
            enabled: RuleId::ALL
                .into_iter()
                .filter(|r| *r != RuleId::R7)
                .collect(),
            stipsicz: StipsiczTable::default(),
        }
    }

    pub fn builtin(kind: ProfileKind) -> Self {
        match kind {
            ProfileKind::Complex => Profile::complex(),
            ProfileKind::General => Profile::general(),
        }
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    pub fn is_enabled(&self, rule: RuleId) -> bool {
        self.enabled.contains(&rule)
    }

    pub fn enabled_rules(&self) -> impl Iterator<Item = RuleId> + '_ {
        self.enabled.iter().copied()
    }

    pub fn stipsicz(&self) -> &StipsiczTable {
        &self.stipsicz
    }

    pub fn with_stipsicz(mut self, table: StipsiczTable) -> Self {
        self.stipsicz = table;
        self
    }

    pub fn enable(&mut self, rule: RuleId) -> Result<()> {
        if rule == RuleId::R7 && self.kind == ProfileKind::General {
            return Err(CensusError::Config(
                "R7 relies on the classification of complex surfaces and cannot run under the general profile"
                    .into(),
            ));
        }
        self.enabled.insert(rule);
        Ok(())
    }

    pub fn disable(&mut self, rule: RuleId) {
        self.enabled.remove(&rule);
    }

    /// Applies a comma-separated override list such as `+R8,-R11.li_2_5`.
    /// A bare id is treated as `+id`.
    pub fn apply_overrides(&mut self, overrides: &str) -> Result<()> {
        for item in overrides
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            if let Some(id) = item.strip_prefix('-') {
                self.disable(id.parse()?);
            } else {
                self.enable(item.strip_prefix('+').unwrap_or(item).parse()?)?;
            }
        }
        Ok(())
    }

    /// Genera in the table that are flagged as potentially circular.
    pub fn circular_genera(&self) -> Vec<i64> {
        CIRCULAR_GENERA
            .into_iter()
            .filter(|g| self.stipsicz.is_circular_at(*g))
            .collect()
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let file: ProfileFile =
            toml::from_str(text).map_err(|e| CensusError::Config(e.message().to_string()))?;
        let mut profile = Profile::builtin(file.kind);
        if let Some(rules) = file.rules {
            profile.enabled.clear();
            for r in rules {
                profile.enable(r.parse()?)?;
            }
        }
        for r in file.enable {
            profile.enable(r.parse()?)?;
        }
        for r in file.disable {
            profile.disable(r.parse()?);
        }
        if !file.stipsicz.is_empty() {
            profile.stipsicz = StipsiczTable::new(file.stipsicz);
        }
        Ok(profile)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileFile {
    kind: ProfileKind,
    #[serde(default)]
    rules: Option<Vec<String>>,
    #[serde(default)]
    enable: Vec<String>,
    #[serde(default)]
    disable: Vec<String>,
    #[serde(default)]
    stipsicz: Vec<StipsiczEntry>,
}
