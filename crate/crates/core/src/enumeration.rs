//! Cayley-graph breadth-first enumeration by length, length-generating
//! polynomials of globally 321-avoiding elements, the q-Catalan style
//! recurrences, and the machine verification of the main equivalence.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::family::{Family, GroupSpec};
use crate::patterns::contains_global_321;
use crate::poly::QPolynomial;
use crate::stats::{disarray, is_tight};
use crate::words::{condition_b, condition_b_prime, coxeter_length};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Elements grouped by Coxeter length, layer `l` holding exactly the
/// elements of length `l`.
#[derive(Debug, Clone)]
pub struct LengthCensus {
    spec: GroupSpec,
    layers: Vec<Vec<Element>>,
    saturated: bool,
}

impl LengthCensus {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn layers(&self) -> &[Vec<Element>] {
        &self.layers
    }

    pub fn max_length(&self) -> usize {
        self.layers.len().saturating_sub(1)
    }

    /// True when the whole (necessarily finite) group was enumerated.
    pub fn saturated(&self) -> bool {
        self.saturated
    }

    pub fn total(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn elements(&self) -> impl Iterator<Item = (usize, &Element)> {
        self.layers
            .iter()
            .enumerate()
            .flat_map(|(l, layer)| layer.iter().map(move |e| (l, e)))
    }
}

/// Breadth-first search of the Cayley graph from the identity; distance
/// equals Coxeter length, deduplicated by canonical window. Layers are
/// sorted by window for determinism.
pub fn bfs_by_length(spec: GroupSpec, max_length: usize, budget: usize) -> Result<LengthCensus> {
    let gens: Vec<Element> = spec
        .alphabet()
        .into_iter()
        .map(|l| Element::simple_reflection(spec, l).unwrap())
        .collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let identity = Element::identity(spec);
    seen.insert(identity.window().to_vec());
    let mut layers = vec![vec![identity]];
    let mut saturated = false;
    for _ in 0..max_length {
        let mut next: Vec<Element> = Vec::new();
        for w in layers.last().unwrap() {
            for s in &gens {
                let nb = w.multiply(s)?;
                if seen.insert(nb.window().to_vec()) {
                    next.push(nb);
                }
            }
        }
        if seen.len() > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        if next.is_empty() {
            saturated = true;
            break;
        }
        next.sort_by(|a, b| a.window().cmp(b.window()));
        layers.push(next);
    }
    if !saturated {
        // probe one layer past the cap so hitting the cap exactly at the
        // longest element still counts as a full enumeration
        saturated = layers.last().unwrap().iter().all(|w| {
            gens.iter()
                .all(|s| seen.contains(w.multiply(s).unwrap().window()))
        });
    }
    Ok(LengthCensus {
        spec,
        layers,
        saturated,
    })
}

/// Enumerates a whole finite group (erroring on affine specs).
pub fn bfs_full_group(spec: GroupSpec, budget: usize) -> Result<LengthCensus> {
    if spec.family().is_affine() {
        return Err(Error::SpecInvalid(format!(
            "{spec} is infinite; a maximum length is required"
        )));
    }
    bfs_by_length(spec, usize::MAX - 1, budget)
}

/// Length-generating polynomial of the globally 321-avoiding elements of a
/// census; `truncated` is set when the census does not reach the longest
/// element.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AvoiderPolynomial {
    pub poly: QPolynomial,
    pub truncated: bool,
    pub max_length: usize,
}

pub fn avoider_polynomial(census: &LengthCensus) -> AvoiderPolynomial {
    let coeffs: Vec<i64> = census
        .layers()
        .iter()
        .map(|layer| {
            layer
                .iter()
                .filter(|w| contains_global_321(w).is_none())
                .count() as i64
        })
        .collect();
    AvoiderPolynomial {
        poly: QPolynomial::from_coefficients(coeffs),
        truncated: !census.saturated(),
        max_length: census.max_length(),
    }
}

/// `C_0(q), ..., C_n(q)` by the q-Catalan recurrence
/// `C_{n+1}(q) = C_n(q) + sum_{k=0}^{n-1} q^{k+1} C_k(q) C_{n-k}(q)`.
pub fn catalan_polynomials(up_to: usize) -> Vec<QPolynomial> {
    let mut c = vec![QPolynomial::one()];
    for n in 0..up_to {
        let mut next = c[n].clone();
        for k in 0..n {
            let term = &(&QPolynomial::monomial(k + 1) * &c[k]) * &c[n - k];
            next = &next + &term;
        }
        c.push(next);
    }
    c
}

pub fn catalan_poly_recurrence(n: usize) -> QPolynomial {
    catalan_polynomials(n).pop().unwrap()
}

/// `C^B_0(q), ..., C^B_n(q)`, where
/// `C^B_{n+1}(q) = (1 - q^{n+1}) C_n(q)
///   + sum_{k=0}^{n} (q^{n-k+1} + q^{k+1}) C_{n-k}(q) C^B_k(q)`.
pub fn typeb_polynomials(up_to: usize) -> Vec<QPolynomial> {
    let c = catalan_polynomials(up_to);
    let mut b = vec![QPolynomial::one()];
    for n in 0..up_to {
        let mut next = &(&QPolynomial::one() - &QPolynomial::monomial(n + 1)) * &c[n];
        for k in 0..=n {
            let weight = &QPolynomial::monomial(n - k + 1) + &QPolynomial::monomial(k + 1);
            let term = &(&weight * &c[n - k]) * &b[k];
            next = &next + &term;
        }
        b.push(next);
    }
    b
}

pub fn typeb_poly_recurrence(n: usize) -> QPolynomial {
    typeb_polynomials(n).pop().unwrap()
}

/// Coefficient-by-coefficient comparison of the BFS-computed avoider
/// polynomial with the recurrence value.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecurrenceReport {
    pub family: Family,
    pub rank: usize,
    pub bfs: QPolynomial,
    pub recurrence: QPolynomial,
    pub pass: bool,
    pub first_mismatch: Option<usize>,
}

pub fn verify_recurrence(family: Family, rank: usize, budget: usize) -> Result<RecurrenceReport> {
    let spec = GroupSpec::new(family, rank)?;
    let recurrence = match family {
        Family::A => catalan_poly_recurrence(rank),
        Family::B => typeb_poly_recurrence(rank),
        other => {
            return Err(Error::SpecInvalid(format!(
                "no recurrence is implemented for family {other}"
            )))
        }
    };
    let census = bfs_full_group(spec, budget)?;
    let bfs = avoider_polynomial(&census).poly;
    let first_mismatch = bfs.first_mismatch(&recurrence);
    Ok(RecurrenceReport {
        family,
        rank,
        pass: first_mismatch.is_none(),
        bfs,
        recurrence,
        first_mismatch,
    })
}

/// Per-length counts of a theorem-verification run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LayerRow {
    pub length: usize,
    pub count: usize,
    pub tight: usize,
    pub avoiding: usize,
}

/// An element on which the checked predicates do not all agree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Disagreement {
    pub window: String,
    pub length: usize,
    pub tight: bool,
    pub condition_b: bool,
    pub condition_b_prime: Option<bool>,
    pub avoids_321: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremReport {
    pub family: Family,
    pub rank: usize,
    pub max_length: usize,
    pub saturated: bool,
    pub total: usize,
    pub layers: Vec<LayerRow>,
    pub disagreements: Vec<Disagreement>,
    pub all_uniformly_true: bool,
}

impl TheoremReport {
    pub fn pass(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Evaluates tightness, condition (B), global 321-avoidance, and (in
/// nondegenerate groups) condition (B') on every element of length at most
/// `max_length`, reporting every element where the predicates differ.
pub fn verify_main_theorem(
    spec: GroupSpec,
    max_length: usize,
    budget: usize,
) -> Result<TheoremReport> {
    let census = bfs_by_length(spec, max_length, budget)?;
    let check_b_prime = spec.is_nondegenerate();
    let mut layers = Vec::new();
    let mut disagreements = Vec::new();
    let mut all_true = true;
    for (length, layer) in census.layers().iter().enumerate() {
        let mut row = LayerRow {
            length,
            count: layer.len(),
            tight: 0,
            avoiding: 0,
        };
        for w in layer {
            let tight = is_tight(w);
            let avoids = contains_global_321(w).is_none();
            let b = condition_b(w);
            let b_prime = check_b_prime.then(|| condition_b_prime(w));
            row.tight += tight as usize;
            row.avoiding += avoids as usize;
            let mut verdicts = vec![tight, b, avoids];
            if let Some(bp) = b_prime {
                verdicts.push(bp);
            }
            if verdicts.iter().any(|&v| v != verdicts[0]) {
                disagreements.push(Disagreement {
                    window: w.to_string(),
                    length,
                    tight,
                    condition_b: b,
                    condition_b_prime: b_prime,
                    avoids_321: avoids,
                });
            }
            if !verdicts.iter().all(|&v| v) {
                all_true = false;
            }
        }
        layers.push(row);
    }
    Ok(TheoremReport {
        family: spec.family(),
        rank: spec.rank(),
        max_length: census.max_length(),
        saturated: census.saturated(),
        total: census.total(),
        layers,
        disagreements,
        all_uniformly_true: all_true,
    })
}

/// One element's statistics on both sides of the degenerate isomorphism.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IsomorphismMismatch {
    pub source_window: String,
    pub image_window: String,
    pub source_stats: (usize, i64, bool),
    pub image_stats: (usize, i64, bool),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IsomorphismReport {
    pub max_length: usize,
    pub checked: usize,
    pub mismatches: Vec<IsomorphismMismatch>,
}

impl IsomorphismReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Conjugation by `f(z) = 2z + 1` maps the group on the odd integers
/// (affine C, n = 1) onto the affine symmetric group with window size 2.
pub fn degenerate_isomorphism_image(w: &Element) -> Result<Element> {
    let source = GroupSpec::new(Family::AffineC, 1)?;
    if w.spec() != source {
        return Err(Error::SpecMismatch);
    }
    let target = GroupSpec::new(Family::AffineA, 2)?;
    let window: Vec<i64> = (1..=2).map(|i| (w.apply(2 * i + 1) - 1) / 2).collect();
    Element::from_window(target, &window)
}

/// Checks element-by-element that the isomorphism preserves length,
/// disarray, and global 321 status up to the given length.
pub fn degenerate_isomorphism_check(max_length: usize, budget: usize) -> Result<IsomorphismReport> {
    let source = GroupSpec::new(Family::AffineC, 1)?;
    let census = bfs_by_length(source, max_length, budget)?;
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for (length, w) in census.elements() {
        let image = degenerate_isomorphism_image(w)?;
        let src = (length, disarray(w), contains_global_321(w).is_none());
        let img = (
            coxeter_length(&image),
            disarray(&image),
            contains_global_321(&image).is_none(),
        );
        checked += 1;
        if src != img {
            mismatches.push(IsomorphismMismatch {
                source_window: w.to_string(),
                image_window: image.to_string(),
                source_stats: src,
                image_stats: img,
            });
        }
    }
    Ok(IsomorphismReport {
        max_length,
        checked,
        mismatches,
    })
}
