//! The disarray statistic, crossing numbers, and the tightness predicate.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::words::coxeter_length;
use serde::{Deserialize, Serialize};

/// Total displacement of the window: `sum |w(i) - i|`. Always even; asserted
/// at runtime as a sanity invariant.
pub fn disarray(w: &Element) -> i64 {
    let dis: i64 = w
        .window()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v - (i as i64 + 1)).abs())
        .sum();
    assert!(dis % 2 == 0, "disarray must be even, got {dis} for {w}");
    dis
}

/// Crossing counts at an unfrozen position `i`: `above` counts positions
/// `j <= i` with `w(j) > i`, `below` counts positions `j > i` with
/// `w(j) <= i`. The two counts are always equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub position: i64,
    pub above: usize,
    pub below: usize,
}

/// Both counts are computed over a window of radius `max_displacement(w)`
/// around `i`; positions further away cannot contribute because
/// `|w(j) - j|` is bounded.
pub fn crossing_numbers(w: &Element, i: i64) -> Result<Crossing> {
    if w.spec().is_frozen(i) {
        return Err(Error::FrozenPosition(i));
    }
    let d = w.max_displacement();
    let above = (i - d + 1..=i).filter(|&j| w.apply(j) > i).count();
    let below = (i + 1..=i + d).filter(|&j| w.apply(j) <= i).count();
    Ok(Crossing {
        position: i,
        above,
        below,
    })
}

/// `l_S(w) - dis(w)/2`; nonnegative for every element.
pub fn gap(w: &Element) -> i64 {
    let g = coxeter_length(w) as i64 - disarray(w) / 2;
    debug_assert!(g >= 0, "length bound violated for {w}");
    g
}

pub fn is_tight(w: &Element) -> bool {
    gap(w) == 0
}
