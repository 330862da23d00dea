//! Independent oracles and property checks shared by the integration tests
//! and the acceptance runner. Nothing here calls the code under test except
//! where a check compares against it.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hlf_census::adjunction::{self, Outcome, RuledTarget};
use hlf_census::enumerator::{enumerate, n_lower_bound, EnumerationQuery};
use hlf_census::invariants::{congruence_residue, signature, FiberTypeVector};
use hlf_census::obstruction::{survivors, Profile, RuleId};
use hlf_census::twist_words::{abelianization_image, Token, TwistWord};

pub type Check = Result<(), String>;

pub fn oracle_modulus(g: i64) -> i64 {
    if g % 2 == 1 {
        8 * g + 4
    } else {
        4 * g + 2
    }
}

pub fn oracle_weight(h: i64) -> i64 {
    8 * h * h + 4 * h
}

/// Smallest n with 5n >= 8g - 3, by counting.
pub fn oracle_n_floor(g: i64) -> i64 {
    let mut n = 0;
    while 5 * n < 8 * g - 3 {
        n += 1;
    }
    n
}

/// `(2g+1)·σ` straight from the signature formula.
pub fn oracle_sigma_times(g: i64, n: i64, s: &[i64]) -> i64 {
    let mut acc = -(g + 1) * n;
    for (i, &c) in s.iter().enumerate() {
        let h = i as i64 + 1;
        acc += (4 * h * (g - h) - (2 * g + 1)) * c;
    }
    acc
}

pub fn oracle_admissible(g: i64, n: i64, s: &[i64]) -> bool {
    let mut acc = n;
    for (i, &c) in s.iter().enumerate() {
        acc += oracle_weight(i as i64 + 1) * c;
    }
    acc % oracle_modulus(g) == 0
}

/// Calls `f` on every `s` of the given length with entries summing to at most `cap`.
pub fn for_each_bounded(len: usize, cap: i64, f: &mut dyn FnMut(&[i64])) {
    let mut s = vec![0i64; len];
    loop {
        f(&s);
        // odometer step skipping tuples over the cap
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            s[i] += 1;
            if s.iter().sum::<i64>() <= cap {
                break;
            }
            s[i] = 0;
            i += 1;
        }
    }
}

/// Naive enumeration: every n, every bounded s, congruence tested directly.
pub fn naive_enumerate(g: i64, budget: i64) -> BTreeSet<Vec<i64>> {
    let floor = oracle_n_floor(g).max(1);
    let mut out = BTreeSet::new();
    for n in floor..budget {
        for_each_bounded((g / 2) as usize, budget - 1 - n, &mut |s| {
            if oracle_admissible(g, n, s) {
                let mut v = vec![n];
                v.extend_from_slice(s);
                out.insert(v);
            }
        });
    }
    out
}

pub fn as_counts(v: &FiberTypeVector) -> Vec<i64> {
    let mut c = vec![v.n()];
    c.extend_from_slice(v.s());
    c
}

/// Naive adjunction search: every degree, every c in a box, b solved from
/// the adjunction equation.
pub fn naive_adjunction(k: i64, m: i64, gf: i64) -> BTreeSet<(i64, i64, Vec<i64>)> {
    let mut out = BTreeSet::new();
    let max_a = (gf - 2) / (k - 1);
    let r = 2 * gf;
    for a in 1..=max_a {
        let mut c = vec![-r; m as usize];
        loop {
            let sum: i64 = c.iter().sum();
            let twice_b = 2 * a * k - 2 * a - sum - 2 * gf + 2;
            if twice_b % 2 == 0 {
                let b = twice_b / 2;
                let sq: i64 = c.iter().map(|x| x * x).sum();
                if b.abs() <= 2 * gf * gf && 2 * a * b == sq {
                    out.insert((a, b, c.clone()));
                }
            }
            let mut i = 0;
            loop {
                if i == c.len() {
                    break;
                }
                if c[i] < r {
                    c[i] += 1;
                    break;
                }
                c[i] = -r;
                i += 1;
            }
            if i == c.len() {
                break;
            }
        }
    }
    out
}

pub fn check_enumerator_oracle(max_g: i64) -> Check {
    for g in 2..=max_g {
        if n_lower_bound(g) != oracle_n_floor(g) {
            return Err(format!("n floor differs at g={g}"));
        }
        for budget in 2..=2 * g + 6 {
            let q = EnumerationQuery::new(g, budget).map_err(|e| e.to_string())?;
            let got = enumerate(&q).map_err(|e| e.to_string())?;
            let got_set: BTreeSet<Vec<i64>> = got.iter().map(as_counts).collect();
            if got_set.len() != got.len() {
                return Err(format!("duplicates at g={g} budget={budget}"));
            }
            if got.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("not sorted at g={g} budget={budget}"));
            }
            let want = naive_enumerate(g, budget);
            if got_set != want {
                return Err(format!(
                    "g={g} budget={budget}: engine {} vectors, oracle {}",
                    got_set.len(),
                    want.len()
                ));
            }
        }
    }
    Ok(())
}

pub fn check_adjunction_oracle() -> Check {
    for k in 2..=3 {
        for m in 0..=4 {
            for gf in 2..=8 {
                let t = RuledTarget::new(k, m, gf).map_err(|e| e.to_string())?;
                let v = adjunction::decide(&t).map_err(|e| e.to_string())?;
                let got: BTreeSet<(i64, i64, Vec<i64>)> =
                    v.solutions().map(|s| (s.a, s.b, s.c.clone())).collect();
                let want = naive_adjunction(k, m, gf);
                if got != want {
                    return Err(format!(
                        "(k={k}, m={m}, gF={gf}): engine {} solutions, oracle {}",
                        got.len(),
                        want.len()
                    ));
                }
                if (v.outcome == Outcome::NoSolution) != want.is_empty() || !v.is_sound() {
                    return Err(format!(
                        "(k={k}, m={m}, gF={gf}): outcome or certificate wrong"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Integrality of σ on the whole admissible lattice: the lattice is spanned
/// by `M·e_0` and `e_h − w_h·e_0`, so it suffices that the signature
/// numerator vanishes mod 2g+1 on those generators.
pub fn check_sigma_lattice(g: i64) -> Check {
    let d = 2 * g + 1;
    let len = (g / 2) as usize;
    let zero = vec![0i64; len];
    if oracle_sigma_times(g, oracle_modulus(g), &zero) % d != 0 {
        return Err(format!("g={g}: generator M·e_0 has non-integral σ"));
    }
    for h in 1..=len {
        let mut s = zero.clone();
        s[h - 1] = 1;
        if oracle_sigma_times(g, -oracle_weight(h as i64), &s) % d != 0 {
            return Err(format!("g={g}: generator for h={h} has non-integral σ"));
        }
    }
    Ok(())
}

/// Every admissible vector with total at most 3g: σ integral and equal to
/// the engine's value.
pub fn check_sigma_exhaustive(g: i64) -> Check {
    let cap = 3 * g;
    let m = oracle_modulus(g);
    let d = 2 * g + 1;
    let mut err = None;
    for_each_bounded((g / 2) as usize, cap, &mut |s| {
        if err.is_some() {
            return;
        }
        let weighted: i64 = s
            .iter()
            .enumerate()
            .map(|(i, &c)| oracle_weight(i as i64 + 1) * c)
            .sum();
        let ssum: i64 = s.iter().sum();
        let mut n = (m - weighted.rem_euclid(m)) % m;
        while n + ssum <= cap {
            if n + ssum >= 1 {
                let num = oracle_sigma_times(g, n, s);
                let v = FiberTypeVector::new(g, n, s.to_vec()).unwrap();
                if num % d != 0 {
                    err = Some(format!("{v}: σ = {num}/{d}"));
                    return;
                }
                match signature(&v) {
                    Ok(x) if x == num / d => {}
                    other => {
                        err = Some(format!("{v}: engine σ {other:?}, oracle {}", num / d));
                        return;
                    }
                }
            }
            n += m;
        }
    });
    err.map_or(Ok(()), Err)
}

/// Replacing each separating token by its even-chain count of
/// non-separating tokens leaves the image unchanged.
pub fn check_substitution(w: &TwistWord) -> Check {
    let base = abelianization_image(w).map_err(|e| e.to_string())?;
    for (i, t) in w.tokens().iter().enumerate() {
        if let Token::Separating(h) = *t {
            let mut tokens = w.tokens().to_vec();
            tokens.splice(
                i..=i,
                std::iter::repeat_n(Token::NonSeparating, oracle_weight(h) as usize),
            );
            let w2 = TwistWord::new(w.genus(), tokens).map_err(|e| e.to_string())?;
            let img = abelianization_image(&w2).map_err(|e| e.to_string())?;
            if img != base {
                return Err(format!(
                    "g={}: replacing S{h} changed image {base} -> {img}",
                    w.genus()
                ));
            }
        }
    }
    Ok(())
}

/// Substitution invariance for every type h of every genus up to `max_g`,
/// on a few fixed context words.
pub fn check_substitution_all(max_g: i64) -> Check {
    for g in 1..=max_g {
        for h in 1..=g / 2 {
            for prefix in 0..3usize {
                let mut tokens = vec![Token::NonSeparating; prefix];
                tokens.push(Token::Separating(h));
                tokens.push(Token::Separating(1));
                tokens.extend(std::iter::repeat_n(Token::NonSeparating, 2 * prefix + 1));
                let w = TwistWord::new(g, tokens).map_err(|e| e.to_string())?;
                check_substitution(&w)?;
            }
        }
    }
    Ok(())
}

/// General-profile survivors below 2g+4 have σ > 0 and a Cadavid witness
/// b1_min above (8g−15)/6.
pub fn check_positive_survivors(g_range: std::ops::RangeInclusive<i64>) -> Check {
    let p = Profile::general();
    for g in g_range {
        for v in survivors(g, 2 * g + 4, &p).map_err(|e| e.to_string())? {
            let sigma = v.invariants.sigma;
            if sigma <= 0 {
                return Err(format!("g={g}: survivor {} has σ = {sigma}", v.vector));
            }
            let entry = v
                .entry(RuleId::R12)
                .ok_or_else(|| format!("g={g}: no R12 entry for {}", v.vector))?;
            let b1_min = entry.witnesses["b1_min"].to_integer();
            if 6 * b1_min <= 8 * g - 15 {
                return Err(format!(
                    "g={g}: survivor {} has b1_min = {b1_min}",
                    v.vector
                ));
            }
        }
    }
    Ok(())
}

pub fn residue_matches_oracle(v: &FiberTypeVector) -> bool {
    let admissible = oracle_admissible(v.genus(), v.n(), v.s());
    (congruence_residue(v).unwrap() == 0) == admissible
}
