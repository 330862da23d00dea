//! Homological obstruction for fibrations on blown-up ruled surfaces.
//!
//! On `(Σ_k × S²) # m CP²-bar` write the fiber class as
//! `[F] = a U + b V + Σ c_i E_i`, where `U` is a section, `V` the sphere fiber
//! and `E_i` the exceptional classes. A genus-`gF` fiber must satisfy
//!
//! ```text
//! [F]² = 0        ⇔  2ab = Σ c_i²
//! adjunction      ⇔  2gF − 2 = 2ak − 2a − 2b − Σ c_i
//! ```
//!
//! and the degree `a` of the induced map `F → Σ_k` lies in
//! `1..=(gF − 2)/(k − 1)`. Eliminating `b` gives, for every degree,
//! `Σ (2c_i + a)² = T_a` with `T_a = 4a(2ak − 2a − 2gF + 2) + m a²`; a negative
//! `T_a` kills that degree outright, otherwise the sum of squares is searched
//! exhaustively. The result is only a statement about homology classes:
//! "solutions exist" never means a fibration exists.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{CensusError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RuledTarget {
    /// Base genus of the ruled surface.
    pub k: i64,
    /// Number of blow-ups.
    pub m: i64,
    /// Genus of the sought fiber.
    pub fiber_genus: i64,
}

impl RuledTarget {
    pub fn new(k: i64, m: i64, fiber_genus: i64) -> Result<Self> {
        if k < 2 {
            return Err(CensusError::UnsupportedBase(k));
        }
        if m < 0 {
            return Err(CensusError::InvalidQuery(format!(
                "blow-up count must be non-negative, got {m}"
            )));
        }
        if fiber_genus < 2 {
            return Err(CensusError::InvalidGenus {
                genus: fiber_genus,
                min: 2,
            });
        }
        Ok(RuledTarget { k, m, fiber_genus })
    }

    /// `2ak − 2a − 2gF + 2`, which equals `2b + Σ c_i` for any solution.
    fn adjunction_rhs(&self, a: i64) -> Result<i64> {
        let ovf = || CensusError::Overflow("adjunction constant");
        let two_a = a.checked_mul(2).ok_or_else(ovf)?;
        two_a
            .checked_mul(self.k - 1)
            .and_then(|x| x.checked_sub(2 * self.fiber_genus))
            .and_then(|x| x.checked_add(2))
            .ok_or_else(ovf)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FiberClassSolution {
    pub a: i64,
    pub b: i64,
    pub c: Vec<i64>,
}

impl FiberClassSolution {
    /// Re-substitutes into both original equations.
    pub fn satisfies(&self, t: &RuledTarget) -> bool {
        let sum_sq: i64 = self.c.iter().map(|c| c * c).sum();
        let sum: i64 = self.c.iter().sum();
        self.c.len() as i64 == t.m
            && self.a >= 1
            && self.a <= degree_bound_unchecked(t)
            && 2 * self.a * self.b == sum_sq
            && 2 * t.fiber_genus - 2 == 2 * self.a * t.k - 2 * self.a - 2 * self.b - sum
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    NoSolution,
    SolutionsExist,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::NoSolution => "NO_SOLUTION",
            Outcome::SolutionsExist => "SOLUTIONS_EXIST",
        }
    }
}

/// What was established for one degree `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCertificate {
    pub completion_constant: i64,
    /// Empty when the constant is negative or the exhaustive search found
    /// nothing.
    pub solutions: Vec<FiberClassSolution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExistenceVerdict {
    pub target: RuledTarget,
    pub degree_bound: i64,
    pub outcome: Outcome,
    pub per_degree: BTreeMap<i64, DegreeCertificate>,
}

impl ExistenceVerdict {
    pub fn solutions(&self) -> impl Iterator<Item = &FiberClassSolution> {
        self.per_degree.values().flat_map(|d| d.solutions.iter())
    }

    /// Checks the certificate: every listed solution satisfies the equations,
    /// and NO_SOLUTION is backed by a negative constant or an empty search at
    /// every admissible degree.
    pub fn is_sound(&self) -> bool {
        let degrees_ok = (1..=self.degree_bound).all(|a| self.per_degree.contains_key(&a))
            && self.per_degree.len() as i64 == self.degree_bound.max(0);
        let solutions_ok = self.solutions().all(|s| s.satisfies(&self.target));
        let outcome_ok = match self.outcome {
            Outcome::NoSolution => self.solutions().next().is_none(),
            Outcome::SolutionsExist => self.solutions().next().is_some(),
        };
        degrees_ok && solutions_ok && outcome_ok
    }

    /// Wording used wherever the verdict is shown to a user.
    pub fn summary(&self) -> &'static str {
        match self.outcome {
            Outcome::NoSolution => "no fiber class exists: fibration excluded",
            Outcome::SolutionsExist => "homological obstruction vanishes (existence not implied)",
        }
    }
}

fn degree_bound_unchecked(t: &RuledTarget) -> i64 {
    (t.fiber_genus - 2).div_euclid(t.k - 1)
}

/// Largest admissible degree `(gF − 2)/(k − 1)`; zero means none.
pub fn degree_bound(t: &RuledTarget) -> Result<i64> {
    if t.k < 2 {
        return Err(CensusError::UnsupportedBase(t.k));
    }
    Ok(degree_bound_unchecked(t).max(0))
}

/// `T_a = 4a(2ak − 2a − 2gF + 2) + m a²`, so that `Σ (2c_i + a)² = T_a`.
pub fn completion_constant(t: &RuledTarget, a: i64) -> Result<i64> {
    let bound = degree_bound(t)?;
    if a < 1 || a > bound {
        return Err(CensusError::DegreeOutOfRange { degree: a, bound });
    }
    let ovf = || CensusError::Overflow("completion constant");
    let d = t.adjunction_rhs(a)?;
    let lin = a
        .checked_mul(4)
        .and_then(|x| x.checked_mul(d))
        .ok_or_else(ovf)?;
    let quad = a
        .checked_mul(a)
        .and_then(|x| x.checked_mul(t.m))
        .ok_or_else(ovf)?;
    lin.checked_add(quad).ok_or_else(ovf)
}

pub fn decide(t: &RuledTarget) -> Result<ExistenceVerdict> {
    let bound = degree_bound(t)?;
    let mut per_degree = BTreeMap::new();
    for a in 1..=bound {
        let constant = completion_constant(t, a)?;
        let mut solutions = Vec::new();
        if constant >= 0 {
            let d = t.adjunction_rhs(a)?;
            let mut x = vec![0i64; t.m as usize];
            sums_of_squares(&mut x, 0, constant, a.rem_euclid(2), &mut |x| {
                let c: Vec<i64> = x.iter().map(|&xi| (xi - a) / 2).collect();
                let sum: i64 = c.iter().sum();
                if (d - sum).rem_euclid(2) != 0 {
                    return;
                }
                let b = (d - sum) / 2;
                let sum_sq: i64 = c.iter().map(|ci| ci * ci).sum();
                if 2 * a * b == sum_sq {
                    solutions.push(FiberClassSolution { a, b, c });
                }
            });
        }
        per_degree.insert(
            a,
            DegreeCertificate {
                completion_constant: constant,
                solutions,
            },
        );
    }
    let outcome = if per_degree.values().any(|d| !d.solutions.is_empty()) {
        Outcome::SolutionsExist
    } else {
        Outcome::NoSolution
    };
    Ok(ExistenceVerdict {
        target: *t,
        degree_bound: bound,
        outcome,
        per_degree,
    })
}

/// Every `x` with `Σ x_i² = remaining` (over the unfilled slots) and each
/// `x_i ≡ parity (mod 2)`, visited with coordinates in descending order.
fn sums_of_squares(
    x: &mut [i64],
    idx: usize,
    remaining: i64,
    parity: i64,
    emit: &mut impl FnMut(&[i64]),
) {
    if idx == x.len() {
        if remaining == 0 {
            emit(x);
        }
        return;
    }
    let slots_after = (x.len() - idx - 1) as i64;
    // each later odd coordinate contributes at least 1
    let reserve = if parity == 1 { slots_after } else { 0 };
    if remaining < reserve {
        return;
    }
    let r = (remaining - reserve).isqrt();
    let mut v = r;
    while v >= -r {
        if v.rem_euclid(2) == parity {
            x[idx] = v;
            sums_of_squares(x, idx + 1, remaining - v * v, parity, emit);
        }
        v -= 1;
    }
    x[idx] = 0;
}
