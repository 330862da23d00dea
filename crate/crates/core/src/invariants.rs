//! Exact invariants of a fiber-type vector.
//!
//! A genus-`g` hyperelliptic fibration over the sphere is summarised by the
//! number `n` of non-separating vanishing cycles and the numbers `s_h` of
//! separating ones of type `h` (bounding genus `h` and `g - h`), for
//! `h = 1..=g/2`. Everything here is computed over checked `i64` arithmetic;
//! the signature is formed as an exact fraction with denominator `2g + 1` and
//! only accepted once it divides evenly.

use std::fmt;

use num_rational::Ratio;

use crate::error::{CensusError, Result};

/// Exact rational used for every non-integral quantity (`chi_h`, witnesses).
pub type Exact = Ratio<i64>;

/// `(n; s_1, ..., s_{g/2})` for a fixed fiber genus.
///
/// Ordering is lexicographic on `(genus, n, s_1, ..., s_{g/2})`, which is the
/// canonical row order of every table the crate emits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberTypeVector {
    genus: i64,
    n: i64,
    s: Vec<i64>,
}

impl FiberTypeVector {
    pub fn new(genus: i64, n: i64, s: Vec<i64>) -> Result<Self> {
        if genus < 2 {
            return Err(CensusError::InvalidGenus { genus, min: 2 });
        }
        let expected = (genus / 2) as usize;
        if s.len() != expected {
            return Err(CensusError::VectorShape {
                genus,
                expected,
                got: s.len(),
            });
        }
        if let Some(&value) = std::iter::once(&n).chain(s.iter()).find(|&&c| c < 0) {
            return Err(CensusError::NegativeCount { value });
        }
        let v = FiberTypeVector { genus, n, s };
        if v.checked_total()? == 0 {
            return Err(CensusError::TrivialFibration);
        }
        // Reject anything whose weighted sum or signature numerator leaves i64.
        v.weighted_count()?;
        v.signature_numerator()?;
        Ok(v)
    }

    /// Builds from the flat tuple `(n, s_1, ...)`.
    pub fn from_slice(genus: i64, counts: &[i64]) -> Result<Self> {
        match counts.split_first() {
            Some((&n, s)) => Self::new(genus, n, s.to_vec()),
            None => Err(CensusError::VectorShape {
                genus,
                expected: (genus.max(0) / 2) as usize,
                got: 0,
            }),
        }
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Separating counts; index `h - 1` holds `s_h`.
    pub fn s(&self) -> &[i64] {
        &self.s
    }

    /// `s = sum_h s_h`.
    pub fn separating_total(&self) -> i64 {
        // Bounded by construction.
        self.s.iter().sum()
    }

    /// Number of singular fibers `n + s`.
    pub fn total(&self) -> i64 {
        self.n + self.separating_total()
    }

    fn checked_total(&self) -> Result<i64> {
        self.s
            .iter()
            .try_fold(self.n, |acc, &x| acc.checked_add(x))
            .ok_or(CensusError::Overflow("singular fiber total"))
    }

    /// `n + sum_h 2h(4h+2) s_h`, the image of the monodromy in the
    /// abelianization before reduction.
    pub fn weighted_count(&self) -> Result<i64> {
        let mut acc = self.n;
        for (idx, &count) in self.s.iter().enumerate() {
            let weight = separating_weight(idx as i64 + 1)?;
            acc = weight
                .checked_mul(count)
                .and_then(|t| acc.checked_add(t))
                .ok_or(CensusError::Overflow("weighted vanishing-cycle count"))?;
        }
        Ok(acc)
    }

    /// `(2g+1) * sigma` as an exact integer.
    fn signature_numerator(&self) -> Result<i64> {
        let g = self.genus;
        let ovf = || CensusError::Overflow("signature numerator");
        let denom = 2 * g + 1;
        let mut acc = (g + 1)
            .checked_mul(self.n)
            .ok_or_else(ovf)?
            .checked_neg()
            .ok_or_else(ovf)?;
        for (idx, &count) in self.s.iter().enumerate() {
            let h = idx as i64 + 1;
            let coeff = (4 * h)
                .checked_mul(g - h)
                .and_then(|c| c.checked_sub(denom))
                .ok_or_else(ovf)?;
            acc = coeff
                .checked_mul(count)
                .and_then(|t| acc.checked_add(t))
                .ok_or_else(ovf)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for FiberTypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.n)?;
        for x in &self.s {
            write!(f, ",{x}")?;
        }
        write!(f, ")")
    }
}

/// All numeric invariants of one vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSet {
    pub e: i64,
    pub sigma: i64,
    pub chi_h: Exact,
    pub c1_sq: i64,
    pub residue: i64,
    pub modulus: i64,
}

impl InvariantSet {
    /// `4 chi_h = e + sigma`, always an integer.
    pub fn chi_h_times4(&self) -> i64 {
        self.e + self.sigma
    }
}

/// Order of the abelianized hyperelliptic mapping class group:
/// `4(2g+1)` for odd `g`, `2(2g+1)` for even `g`.
pub fn modulus(genus: i64) -> Result<i64> {
    if genus < 1 {
        return Err(CensusError::InvalidGenus { genus, min: 1 });
    }
    let base = genus
        .checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .ok_or(CensusError::Overflow("modulus"))?;
    let factor = if genus % 2 == 1 { 4 } else { 2 };
    base.checked_mul(factor)
        .ok_or(CensusError::Overflow("modulus"))
}

/// Number of non-separating twists a type-`h` separating twist is worth in
/// the abelianization: `2h(4h+2)`.
pub fn separating_weight(h: i64) -> Result<i64> {
    if h < 1 {
        return Err(CensusError::InvalidSeparatingType(h));
    }
    h.checked_mul(4)
        .and_then(|x| x.checked_add(2))
        .and_then(|x| x.checked_mul(2 * h))
        .ok_or(CensusError::Overflow("separating weight"))
}

/// Residue of `n + sum_h 2h(4h+2) s_h` modulo [`modulus`]; zero for every
/// vector that can come from a positive factorization.
pub fn congruence_residue(v: &FiberTypeVector) -> Result<i64> {
    Ok(v.weighted_count()?.rem_euclid(modulus(v.genus)?))
}

pub fn euler_characteristic(v: &FiberTypeVector) -> i64 {
    4 - 4 * v.genus + v.total()
}

/// Signature as an exact fraction, defined for every vector.
pub fn signature_exact(v: &FiberTypeVector) -> Result<Exact> {
    Ok(Ratio::new(v.signature_numerator()?, 2 * v.genus + 1))
}

/// Integral signature; fails when the exact value is fractional, which can
/// only happen for vectors violating the congruence.
pub fn signature(v: &FiberTypeVector) -> Result<i64> {
    let numerator = v.signature_numerator()?;
    let denominator = 2 * v.genus + 1;
    if numerator % denominator != 0 {
        return Err(CensusError::SignatureNotIntegral {
            vector: v.to_string(),
            numerator,
            denominator,
        });
    }
    Ok(numerator / denominator)
}

pub fn invariant_set(v: &FiberTypeVector) -> Result<InvariantSet> {
    let sigma = signature(v)?;
    let e = euler_characteristic(v);
    let c1_sq = e
        .checked_mul(2)
        .and_then(|x| sigma.checked_mul(3).and_then(|y| x.checked_add(y)))
        .ok_or(CensusError::Overflow("c1^2"))?;
    let chi4 = e.checked_add(sigma).ok_or(CensusError::Overflow("chi_h"))?;
    Ok(InvariantSet {
        e,
        sigma,
        chi_h: Ratio::new(chi4, 4),
        c1_sq,
        residue: congruence_residue(v)?,
        modulus: modulus(v.genus)?,
    })
}
