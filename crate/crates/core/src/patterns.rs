//! Global 321 detection with a sound finite search window, classical
//! signed-pattern containment, and avoidance of the six-pattern set that
//! characterizes fully commutative top elements.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::family::Family;
use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// A global 321 occurrence: unfrozen positions `i < j < k` with
/// `w(i) > w(j) > w(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub wi: i64,
    pub wj: i64,
    pub wk: i64,
}

/// Max of `|w(x) - x|` over one fundamental stretch of positions; bounds the
/// displacement of every unfrozen integer and so bounds how far a pattern
/// witness can stray from its middle index.
pub fn displacement_bound(w: &Element) -> i64 {
    w.max_displacement()
}

/// Finds a global 321 occurrence if one exists.
///
/// The middle index ranges over one fundamental stretch of unfrozen
/// positions; any witness can be translated so its middle lands there. For a
/// fixed middle `j`, any `i < j` with `w(i) > w(j)` satisfies
/// `i >= w(i) - D > w(j) - D`, so scanning `[w(j)-D+1, j-1]` is complete,
/// and symmetrically for `k`. Deterministic choice: smallest middle (the
/// mirrored positions of the signed family come after the positive ones, so
/// a mirrored pair of witnesses is reported in its positive form), then the
/// `i` closest to it, then the smallest `k`.
pub fn contains_global_321(w: &Element) -> Option<PatternWitness> {
    let spec = w.spec();
    let d = displacement_bound(w);
    if d == 0 {
        return None;
    }
    let mut middles = spec.fundamental_positions();
    middles.sort_by_key(|&j| (j <= 0, j));
    for j in middles {
        let wj = w.apply(j);
        for i in spec.unfrozen_in(wj - d + 1, j - 1).into_iter().rev() {
            let wi = w.apply(i);
            if wi <= wj {
                continue;
            }
            for k in spec.unfrozen_in(j + 1, wj + d - 1) {
                let wk = w.apply(k);
                if wk < wj {
                    return Some(PatternWitness {
                        i,
                        j,
                        k,
                        wi,
                        wj,
                        wk,
                    });
                }
            }
        }
    }
    None
}

/// A signed pattern: a valid type-B window of size `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPattern(Vec<i64>);

impl SignedPattern {
    pub fn new(entries: &[i64]) -> Result<SignedPattern> {
        let mut abs: Vec<i64> = entries.iter().map(|v| v.abs()).collect();
        abs.sort_unstable();
        if abs != (1..=entries.len() as i64).collect::<Vec<_>>() {
            return Err(Error::WindowInvalid(format!(
                "{entries:?} is not a signed permutation window"
            )));
        }
        Ok(SignedPattern(entries.to_vec()))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}

/// The six signed patterns (12-, 1-2-, 321, 321-, 3-21, 3-21-, with `-`
/// marking a negated entry) whose classical avoidance is equivalent to
/// global 321-avoidance in type B.
pub fn p_patterns() -> Vec<SignedPattern> {
    [
        vec![1, -2],
        vec![-1, -2],
        vec![3, 2, 1],
        vec![3, 2, -1],
        vec![-3, 2, 1],
        vec![-3, 2, -1],
    ]
    .into_iter()
    .map(|v| SignedPattern::new(&v).unwrap())
    .collect()
}

/// Classical containment: indices `1 <= i_1 < ... < i_k <= n` whose absolute
/// window values are order-isomorphic to `|p|` with matching signs
/// entrywise. Type A elements embed as all-positive signed permutations.
pub fn classical_contains(w: &Element, p: &SignedPattern) -> Result<bool> {
    match w.spec().family() {
        Family::A | Family::B => {}
        other => return Err(Error::FamilyMismatch(other)),
    }
    let n = w.spec().rank();
    let k = p.0.len();
    if k > n {
        return Ok(false);
    }
    for combo in (1..=n as i64).combinations(k) {
        let values: Vec<i64> = combo.iter().map(|&i| w.apply(i)).collect();
        let signs_match = values
            .iter()
            .zip(&p.0)
            .all(|(&v, &pv)| v.signum() == pv.signum());
        if !signs_match {
            continue;
        }
        let order_iso = (0..k).tuple_combinations().all(|(a, b)| {
            (values[a].abs() < values[b].abs()) == (p.0[a].abs() < p.0[b].abs())
        });
        if order_iso {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True iff `w` classically avoids all six patterns in P.
pub fn avoids_p(w: &Element) -> Result<bool> {
    for p in p_patterns() {
        if classical_contains(w, &p)? {
            return Ok(false);
        }
    }
    Ok(true)
}
