//! The four group families and their domain combinatorics: alphabets,
//! frozen values, symmetry classes, and Coxeter diagram data.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The four families, all with path-shaped diagrams: finite types A and B,
/// affine types A and C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    AffineA,
    AffineC,
}

impl Family {
    /// Short code used by the CLI and in report files.
    pub fn code(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::B => "b",
            Family::AffineA => "affa",
            Family::AffineC => "affc",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "a" | "A" => Ok(Family::A),
            "b" | "B" => Ok(Family::B),
            "affa" | "affA" => Ok(Family::AffineA),
            "affc" | "affC" => Ok(Family::AffineC),
            other => Err(Error::Parse(format!(
                "unknown family code {other:?} (expected a|b|affa|affc)"
            ))),
        }
    }

    pub fn is_affine(self) -> bool {
        matches!(self, Family::AffineA | Family::AffineC)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A family tag plus a window size `n`. Everything else (alphabet, frozen
/// set, symmetry period) is derived from these two fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    family: Family,
    rank: usize,
}

impl GroupSpec {
    pub fn new(family: Family, rank: usize) -> Result<GroupSpec> {
        let min = match family {
            Family::A | Family::B | Family::AffineC => 1,
            Family::AffineA => 2,
        };
        if rank < min {
            return Err(Error::SpecInvalid(format!(
                "family {family} requires n >= {min}, got {rank}"
            )));
        }
        Ok(GroupSpec { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn n(&self) -> i64 {
        self.rank as i64
    }

    /// Generator letters: A -> 1..n-1, B -> 0..n-1, affine A -> 0..n-1
    /// (with s_n identified with s_0), affine C -> 0..n.
    pub fn alphabet(&self) -> Vec<usize> {
        match self.family {
            Family::A => (1..self.rank).collect(),
            Family::B | Family::AffineA => (0..self.rank).collect(),
            Family::AffineC => (0..=self.rank).collect(),
        }
    }

    /// Normalizes a raw letter into the canonical alphabet. In affine A the
    /// letter `n` is the same generator as `0`.
    pub fn normalize_letter(&self, raw: i64) -> Result<usize> {
        if raw < 0 {
            return Err(Error::LetterOutOfAlphabet(raw));
        }
        let l = raw as usize;
        match self.family {
            Family::A if (1..self.rank).contains(&l) => Ok(l),
            Family::B if l < self.rank => Ok(l),
            Family::AffineA if l <= self.rank => Ok(l % self.rank),
            Family::AffineC if l <= self.rank => Ok(l),
            _ => Err(Error::LetterOutOfAlphabet(raw)),
        }
    }

    /// Translation period of the domain symmetry group, if any.
    pub fn period(&self) -> Option<i64> {
        match self.family {
            Family::A | Family::B => None,
            Family::AffineA => Some(self.n()),
            Family::AffineC => Some(2 * (self.n() + 1)),
        }
    }

    /// Frozen integers are fixed by every group element. Out-of-domain
    /// integers of the finite families are treated as frozen.
    pub fn is_frozen(&self, i: i64) -> bool {
        match self.family {
            Family::A => !(1..=self.n()).contains(&i),
            Family::B => i == 0 || i.abs() > self.n(),
            Family::AffineA => false,
            Family::AffineC => i.rem_euclid(self.n() + 1) == 0,
        }
    }

    /// Canonical representative in 1..=n of the symmetry class of `i`,
    /// or `None` if `i` is frozen.
    pub fn symmetry_class(&self, i: i64) -> Option<i64> {
        if self.is_frozen(i) {
            return None;
        }
        match self.family {
            Family::A => Some(i),
            Family::B => Some(i.abs()),
            Family::AffineA => Some((i - 1).rem_euclid(self.n()) + 1),
            Family::AffineC => {
                let p = 2 * (self.n() + 1);
                let r = i.rem_euclid(p);
                Some(if r > self.n() + 1 { p - r } else { r })
            }
        }
    }

    /// The pair (a, a') of consecutive unfrozen integers transposed by the
    /// generator with the given letter.
    pub fn generator_pair(&self, letter: usize) -> (i64, i64) {
        debug_assert!(self.alphabet().contains(&letter));
        let l = letter as i64;
        match self.family {
            Family::A => (l, l + 1),
            Family::B => {
                if letter == 0 {
                    (-1, 1)
                } else {
                    (l, l + 1)
                }
            }
            Family::AffineA => (l, l + 1), // letter 0 swaps 0 and 1
            Family::AffineC => {
                if letter == 0 {
                    (-1, 1)
                } else if letter == self.rank {
                    (l, l + 2)
                } else {
                    (l, l + 1)
                }
            }
        }
    }

    /// Order of the product of two generators; `None` means infinity.
    pub fn coxeter_m(&self, a: usize, b: usize) -> Option<u32> {
        if a == b {
            return Some(1);
        }
        let adjacent = a.abs_diff(b) == 1;
        match self.family {
            Family::A => Some(if adjacent { 3 } else { 2 }),
            Family::B => {
                if a.min(b) == 0 && adjacent {
                    Some(4)
                } else if adjacent {
                    Some(3)
                } else {
                    Some(2)
                }
            }
            Family::AffineA => {
                if self.rank == 2 {
                    None // single edge of the infinite dihedral group
                } else {
                    let cyclic = adjacent || a.abs_diff(b) == self.rank - 1;
                    Some(if cyclic { 3 } else { 2 })
                }
            }
            Family::AffineC => {
                if self.rank == 1 {
                    None
                } else if adjacent && (a.min(b) == 0 || a.max(b) == self.rank) {
                    Some(4)
                } else if adjacent {
                    Some(3)
                } else {
                    Some(2)
                }
            }
        }
    }

    /// The degenerate groups collapse to the infinite dihedral group.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            (self.family, self.rank),
            (Family::AffineA, 2) | (Family::AffineC, 1)
        )
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.is_degenerate()
    }

    /// One fundamental stretch of unfrozen positions: the whole unfrozen
    /// domain for the finite families, one translation period for the
    /// affine ones.
    pub fn fundamental_positions(&self) -> Vec<i64> {
        match self.family {
            Family::A => (1..=self.n()).collect(),
            Family::B => (-self.n()..=self.n()).filter(|&i| i != 0).collect(),
            Family::AffineA => (1..=self.n()).collect(),
            Family::AffineC => {
                let p = 2 * (self.n() + 1);
                (1..=p).filter(|&i| !self.is_frozen(i)).collect()
            }
        }
    }

    /// Unfrozen positions in the closed interval `[lo, hi]`, clipped to the
    /// domain for the finite families.
    pub fn unfrozen_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&i| !self.is_frozen(i)).collect()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_bounds() {
        assert!(GroupSpec::new(Family::A, 1).is_ok());
        assert!(GroupSpec::new(Family::AffineA, 1).is_err());
        assert!(GroupSpec::new(Family::AffineA, 2).is_ok());
        assert!(GroupSpec::new(Family::AffineC, 1).is_ok());
        assert!(GroupSpec::new(Family::B, 0).is_err());
    }

    #[test]
    fn alphabets() {
        let a3 = GroupSpec::new(Family::A, 3).unwrap();
        assert_eq!(a3.alphabet(), vec![1, 2]);
        let b2 = GroupSpec::new(Family::B, 2).unwrap();
        assert_eq!(b2.alphabet(), vec![0, 1]);
        let affa3 = GroupSpec::new(Family::AffineA, 3).unwrap();
        assert_eq!(affa3.alphabet(), vec![0, 1, 2]);
        assert_eq!(affa3.normalize_letter(3).unwrap(), 0);
        let affc2 = GroupSpec::new(Family::AffineC, 2).unwrap();
        assert_eq!(affc2.alphabet(), vec![0, 1, 2]);
        assert!(affc2.normalize_letter(3).is_err());
    }

    #[test]
    fn frozen_and_classes() {
        let affc2 = GroupSpec::new(Family::AffineC, 2).unwrap();
        assert!(affc2.is_frozen(6));
        assert!(affc2.is_frozen(3));
        assert!(affc2.is_frozen(-3));
        assert_eq!(affc2.symmetry_class(4), Some(2));
        assert_eq!(affc2.symmetry_class(-1), Some(1));
        assert_eq!(affc2.symmetry_class(7), Some(1));

        let affa3 = GroupSpec::new(Family::AffineA, 3).unwrap();
        assert_eq!(affa3.symmetry_class(7), Some(1));
        assert_eq!(affa3.symmetry_class(-2), Some(1));

        let b2 = GroupSpec::new(Family::B, 2).unwrap();
        assert!(b2.is_frozen(0));
        assert!(b2.is_frozen(3));
        assert_eq!(b2.symmetry_class(-2), Some(2));
    }

    #[test]
    fn coxeter_matrix() {
        let b3 = GroupSpec::new(Family::B, 3).unwrap();
        assert_eq!(b3.coxeter_m(0, 1), Some(4));
        assert_eq!(b3.coxeter_m(1, 2), Some(3));
        assert_eq!(b3.coxeter_m(0, 2), Some(2));

        let affa2 = GroupSpec::new(Family::AffineA, 2).unwrap();
        assert_eq!(affa2.coxeter_m(0, 1), None);
        let affa3 = GroupSpec::new(Family::AffineA, 3).unwrap();
        assert_eq!(affa3.coxeter_m(0, 2), Some(3)); // cycle closes

        let affc2 = GroupSpec::new(Family::AffineC, 2).unwrap();
        assert_eq!(affc2.coxeter_m(0, 1), Some(4));
        assert_eq!(affc2.coxeter_m(1, 2), Some(4));
        let affc1 = GroupSpec::new(Family::AffineC, 1).unwrap();
        assert_eq!(affc1.coxeter_m(0, 1), None);
    }

    #[test]
    fn generator_pairs() {
        let affc2 = GroupSpec::new(Family::AffineC, 2).unwrap();
        assert_eq!(affc2.generator_pair(0), (-1, 1));
        assert_eq!(affc2.generator_pair(1), (1, 2));
        assert_eq!(affc2.generator_pair(2), (2, 4));
        let affa3 = GroupSpec::new(Family::AffineA, 3).unwrap();
        assert_eq!(affa3.generator_pair(0), (0, 1));
    }
}
