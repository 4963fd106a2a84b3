//! Group elements in window notation and exact group arithmetic.

use crate::error::{Error, Result};
use crate::family::{Family, GroupSpec};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

/// An element of one of the four families, stored as its window
/// `(w(1), ..., w(n))`. The window determines the element: values outside
/// it follow from the family's domain symmetries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Element {
    spec: GroupSpec,
    window: Vec<i64>,
}

impl Element {
    pub fn identity(spec: GroupSpec) -> Element {
        Element {
            spec,
            window: (1..=spec.rank() as i64).collect(),
        }
    }

    /// Validates the family-specific window invariants.
    pub fn from_window(spec: GroupSpec, values: &[i64]) -> Result<Element> {
        let n = spec.rank() as i64;
        if values.len() != spec.rank() {
            return Err(Error::WindowInvalid(format!(
                "expected {} entries, got {}",
                spec.rank(),
                values.len()
            )));
        }
        match spec.family() {
            Family::A => {
                let mut sorted: Vec<i64> = values.to_vec();
                sorted.sort_unstable();
                if sorted != (1..=n).collect::<Vec<_>>() {
                    return Err(Error::WindowInvalid(format!(
                        "{values:?} is not a permutation of 1..={n}"
                    )));
                }
            }
            Family::B => {
                let mut abs: Vec<i64> = values.iter().map(|v| v.abs()).collect();
                abs.sort_unstable();
                if abs != (1..=n).collect::<Vec<_>>() {
                    return Err(Error::WindowInvalid(format!(
                        "absolute values of {values:?} are not a permutation of 1..={n}"
                    )));
                }
            }
            Family::AffineA => {
                let mut residues = HashSet::new();
                for &v in values {
                    if !residues.insert(v.rem_euclid(n)) {
                        return Err(Error::WindowInvalid(format!(
                            "duplicate residue {} mod {n} in {values:?}",
                            v.rem_euclid(n)
                        )));
                    }
                }
                let sum: i64 = values.iter().sum();
                if sum != n * (n + 1) / 2 {
                    return Err(Error::WindowInvalid(format!(
                        "window sum {sum} != {}",
                        n * (n + 1) / 2
                    )));
                }
            }
            Family::AffineC => {
                let p = 2 * (n + 1);
                let mut residues = HashSet::new();
                for &v in values {
                    if v.rem_euclid(n + 1) == 0 {
                        return Err(Error::WindowInvalid(format!(
                            "{v} is a frozen value (multiple of {})",
                            n + 1
                        )));
                    }
                    if !residues.insert(v.rem_euclid(p)) || !residues.insert((-v).rem_euclid(p)) {
                        return Err(Error::WindowInvalid(format!(
                            "residues of +-{v} mod {p} collide in {values:?}"
                        )));
                    }
                }
            }
        }
        Ok(Element {
            spec,
            window: values.to_vec(),
        })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i64 + 1)
    }

    /// Evaluates the permutation at any integer. Frozen and out-of-domain
    /// inputs are returned unchanged; everything else is reduced into the
    /// window via the family symmetries.
    pub fn apply(&self, i: i64) -> i64 {
        let n = self.spec.rank() as i64;
        match self.spec.family() {
            Family::A => {
                if (1..=n).contains(&i) {
                    self.window[(i - 1) as usize]
                } else {
                    i
                }
            }
            Family::B => {
                if i == 0 || i.abs() > n {
                    i
                } else if i > 0 {
                    self.window[(i - 1) as usize]
                } else {
                    -self.window[(-i - 1) as usize]
                }
            }
            Family::AffineA => {
                let r = (i - 1).rem_euclid(n) + 1;
                let q = (i - r) / n;
                self.window[(r - 1) as usize] + q * n
            }
            Family::AffineC => {
                if i.rem_euclid(n + 1) == 0 {
                    return i;
                }
                let p = 2 * (n + 1);
                let r = i.rem_euclid(p);
                let q = (i - r) / p;
                let v = if r <= n {
                    self.window[(r - 1) as usize]
                } else {
                    // mirror through n+1: w(p - r') = p - w(r')
                    p - self.window[(p - r - 1) as usize]
                };
                v + q * p
            }
        }
    }

    /// Product under the convention `(u . v)(x) = u(v(x))`.
    pub fn multiply(&self, other: &Element) -> Result<Element> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let window: Vec<i64> = (1..=self.spec.rank() as i64)
            .map(|i| self.apply(other.apply(i)))
            .collect();
        debug_assert!(Element::from_window(self.spec, &window).is_ok());
        Ok(Element {
            spec: self.spec,
            window,
        })
    }

    pub fn inverse(&self) -> Element {
        let bound = self.max_displacement();
        let window: Vec<i64> = (1..=self.spec.rank() as i64)
            .map(|t| {
                (t - bound..=t + bound)
                    .find(|&j| !self.spec.is_frozen(j) && self.apply(j) == t)
                    .expect("every unfrozen value has a preimage within the displacement bound")
            })
            .collect();
        let inv = Element {
            spec: self.spec,
            window,
        };
        debug_assert!(Element::from_window(self.spec, &inv.window).is_ok());
        inv
    }

    /// Max of `|w(i) - i|` over one fundamental stretch of positions. By the
    /// domain symmetries this bounds the displacement of every unfrozen
    /// integer.
    pub fn max_displacement(&self) -> i64 {
        self.spec
            .fundamental_positions()
            .into_iter()
            .map(|i| (self.apply(i) - i).abs())
            .max()
            .unwrap_or(0)
    }

    /// The simple transposition with the given alphabet letter, extended to
    /// the whole domain by the family symmetries.
    pub fn simple_reflection(spec: GroupSpec, letter: usize) -> Result<Element> {
        let letter = spec.normalize_letter(letter as i64)?;
        let n = spec.rank();
        let mut window: Vec<i64> = (1..=n as i64).collect();
        match spec.family() {
            Family::A => window.swap(letter - 1, letter),
            Family::B => {
                if letter == 0 {
                    window[0] = -1;
                } else {
                    window.swap(letter - 1, letter);
                }
            }
            Family::AffineA => {
                if letter == 0 {
                    // <(0 1)> extended by the period: also swaps n and n+1
                    window[0] = 0;
                    window[n - 1] = n as i64 + 1;
                } else {
                    window.swap(letter - 1, letter);
                }
            }
            Family::AffineC => {
                if letter == 0 {
                    window[0] = -1;
                } else if letter == n {
                    window[n - 1] = n as i64 + 2;
                } else {
                    window.swap(letter - 1, letter);
                }
            }
        }
        Ok(Element { spec, window })
    }

    /// Parses a comma-separated window, e.g. `-1,-2`.
    pub fn parse_window(spec: GroupSpec, text: &str) -> Result<Element> {
        let values: Vec<i64> = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad window entry {s:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        Element::from_window(spec, &values)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}
