//! Exhaustive enumeration of admissible fiber-type vectors under a budget on
//! the number of singular fibers.

use crate::error::{CensusError, Result};
use crate::exec::{self, Strategy};
use crate::invariants::{modulus, separating_weight, FiberTypeVector};

/// Upper limit on the number of separating-count vectors visited by one
/// enumeration. Queries above it are refused as a resource error.
pub const MAX_VISITED: u128 = 200_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub genus: i64,
    /// Strict: candidates satisfy `n + s < budget`.
    pub budget: i64,
    pub n_floor_override: Option<i64>,
}

impl EnumerationQuery {
    pub fn new(genus: i64, budget: i64) -> Result<Self> {
        let q = EnumerationQuery {
            genus,
            budget,
            n_floor_override: None,
        };
        q.validate()?;
        Ok(q)
    }

    pub fn with_n_floor(mut self, floor: i64) -> Result<Self> {
        self.n_floor_override = Some(floor);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if self.genus < 2 {
            return Err(CensusError::InvalidGenus {
                genus: self.genus,
                min: 2,
            });
        }
        if self.budget < 2 {
            return Err(CensusError::InvalidQuery(format!(
                "budget must be at least 2, got {}",
                self.budget
            )));
        }
        if let Some(f) = self.n_floor_override {
            if f < 1 {
                return Err(CensusError::InvalidQuery(format!(
                    "n floor override must be at least 1, got {f}"
                )));
            }
        }
        Ok(())
    }

    /// Smallest `n` considered.
    pub fn n_floor(&self) -> i64 {
        self.n_floor_override
            .unwrap_or_else(|| n_lower_bound(self.genus))
            .max(1)
    }
}

/// `ceil((8g - 3) / 5)`, the known lower bound on non-separating cycles.
pub fn n_lower_bound(genus: i64) -> i64 {
    (8 * genus - 3 + 4).div_euclid(5)
}

fn binomial_saturating(n: u128, k: u128) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(x) => x / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Number of `s` vectors of length `slots` with sum at most `rem`.
fn compositions_at_most(rem: i64, slots: usize) -> u128 {
    if rem < 0 {
        return 0;
    }
    binomial_saturating(rem as u128 + slots as u128, slots as u128)
}

pub fn enumerate(q: &EnumerationQuery) -> Result<Vec<FiberTypeVector>> {
    enumerate_with(q, Strategy::default())
}

pub fn enumerate_with(q: &EnumerationQuery, strategy: Strategy) -> Result<Vec<FiberTypeVector>> {
    q.validate()?;
    let genus = q.genus;
    let slots = (genus / 2) as usize;
    let m = modulus(genus)?;
    let weights: Vec<i64> = (1..=slots as i64)
        .map(separating_weight)
        .collect::<Result<_>>()?;

    let ns: Vec<i64> = (q.n_floor()..q.budget).collect();
    let visited = ns
        .iter()
        .map(|&n| compositions_at_most(q.budget - 1 - n, slots))
        .fold(0u128, u128::saturating_add);
    if visited > MAX_VISITED {
        return Err(CensusError::Resource(format!(
            "genus {genus} with budget {} would visit {visited} candidate vectors (limit {MAX_VISITED})",
            q.budget
        )));
    }

    let weights_mod: Vec<i64> = weights.iter().map(|w| w % m).collect();
    let per_n = exec::try_map(strategy, &ns, |&n| {
        let mut out = Vec::new();
        let mut s = vec![0i64; slots];
        search(
            &weights_mod,
            m,
            0,
            q.budget - 1 - n,
            n % m,
            &mut s,
            &mut |s| out.push(s.to_vec()),
        );
        out.into_iter()
            .map(|s| FiberTypeVector::new(genus, n, s))
            .collect::<Result<Vec<_>>>()
    })?;

    let mut all: Vec<FiberTypeVector> = per_n.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// Depth-first over `s[idx..]`, each slot taking `0..=rem`, emitting every
/// completion whose residue closes to zero.
fn search(
    weights_mod: &[i64],
    m: i64,
    idx: usize,
    rem: i64,
    residue: i64,
    s: &mut [i64],
    emit: &mut impl FnMut(&[i64]),
) {
    if idx == s.len() {
        if residue == 0 {
            emit(s);
        }
        return;
    }
    let w = weights_mod[idx];
    let mut r = residue;
    for x in 0..=rem {
        s[idx] = x;
        search(weights_mod, m, idx + 1, rem - x, r, s, emit);
        r = (r + w) % m;
    }
    s[idx] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tuples(vs: &[FiberTypeVector]) -> Vec<Vec<i64>> {
        vs.iter()
            .map(|v| {
                std::iter::once(v.n())
                    .chain(v.s().iter().copied())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn floor_values() {
        assert_eq!(n_lower_bound(4), 6);
        assert_eq!(n_lower_bound(7), 11);
        assert_eq!(n_lower_bound(9), 14);
        for g in 2..200 {
            // brute-force ceiling
            let mut c = 0;
            while 5 * c < 8 * g - 3 {
                c += 1;
            }
            assert_eq!(n_lower_bound(g), c, "g={g}");
        }
    }

    #[test]
    fn genus4_budget12() {
        let got = enumerate(&EnumerationQuery::new(4, 12).unwrap()).unwrap();
        let mut want = vec![vec![6, 1, 0], vec![6, 4, 0], vec![6, 0, 3], vec![8, 2, 1]];
        want.sort();
        assert_eq!(tuples(&got), want);
    }

    #[test]
    fn genus5_budget15() {
        let got = enumerate(&EnumerationQuery::new(5, 15).unwrap()).unwrap();
        assert_eq!(
            tuples(&got),
            vec![vec![8, 0, 2], vec![8, 1, 5], vec![8, 3, 0]]
        );
    }

    #[test]
    fn tiny_budget_is_empty() {
        assert!(enumerate(&EnumerationQuery::new(4, 2).unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn override_lowers_floor() {
        let q = EnumerationQuery::new(4, 12)
            .unwrap()
            .with_n_floor(1)
            .unwrap();
        let got = enumerate(&q).unwrap();
        // n = 4 with s = (0, 1)? 4 + 40 = 44 ≡ 8 mod 18, no; n = 2, s = (0,4): 2 + 160 = 162 ≡ 0.
        assert!(tuples(&got).contains(&vec![2, 0, 4]));
        assert!(got.len() > 4);
    }

    #[test]
    fn query_validation() {
        assert!(EnumerationQuery::new(1, 10).is_err());
        assert!(EnumerationQuery::new(4, 1).is_err());
        assert!(EnumerationQuery::new(4, 10)
            .unwrap()
            .with_n_floor(0)
            .is_err());
    }

    #[test]
    fn oversized_query_is_resource_error() {
        let err = enumerate(&EnumerationQuery::new(40, 400).unwrap()).unwrap_err();
        assert!(err.is_resource(), "{err}");
    }

    #[test]
    fn strategies_agree() {
        let q = EnumerationQuery::new(10, 26).unwrap();
        assert_eq!(
            enumerate_with(&q, Strategy::Sequential).unwrap(),
            enumerate_with(&q, Strategy::default()).unwrap()
        );
    }
}
