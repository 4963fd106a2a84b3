//! Exact integer root-system computations in the rescaled simple-root
//! basis: positive-root generation, the root-reflection correspondence,
//! root heights, and minimum height-cost of elements.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::family::{Family, GroupSpec};
use crate::stats::disarray;
use crate::words::{coxeter_length, is_fully_commutative, reduced_words, Word};
use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet, VecDeque};

/// Which end generators carry the short rescaled roots. `ShortEnds` is the
/// system under which dis(t)/2 equals root height (the C-flavored lattice
/// for type B, C-dual for affine C); `LongEnds` is the opposite rescaling,
/// kept so the identity can be discriminated empirically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum RootVariant {
    #[default]
    ShortEnds,
    LongEnds,
}

impl RootVariant {
    pub fn parse(s: &str) -> Result<RootVariant> {
        match s {
            "short-zero" | "short-ends" => Ok(RootVariant::ShortEnds),
            "long-zero" | "long-ends" => Ok(RootVariant::LongEnds),
            other => Err(Error::Parse(format!(
                "unknown root variant {other:?} (expected short-zero|long-zero)"
            ))),
        }
    }
}

/// Integer coefficients over the rescaled simple roots, indexed by the
/// position of each generator letter in the alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
}

/// Integer reflection data `s(lambda_{s'}) = lambda_{s'} + d_{s,s'} lambda_s`
/// for one of the four families under a chosen rescaling.
#[derive(Debug, Clone)]
pub struct RootSystemSpec {
    spec: GroupSpec,
    letters: Vec<usize>,
    d: Vec<Vec<i64>>,
}

impl RootSystemSpec {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// `d_{s,s'}` with both generators given as alphabet letters.
    pub fn d(&self, s: usize, s_prime: usize) -> i64 {
        let i = self.index_of(s);
        let j = self.index_of(s_prime);
        self.d[i][j]
    }

    fn index_of(&self, letter: usize) -> usize {
        self.letters
            .iter()
            .position(|&l| l == letter)
            .expect("letter in alphabet")
    }

    /// The simple root attached to a generator letter.
    pub fn simple_root(&self, letter: usize) -> RootVector {
        let mut v = vec![0; self.letters.len()];
        v[self.index_of(letter)] = 1;
        RootVector(v)
    }
}

/// Builds the d-matrix for a family from its diagram: `m = 2 -> 0`,
/// `m = 3 -> 1`, `m = infinity -> 2` both ways, and across an `m = 4` edge
/// the short root picks up coefficient 2.
pub fn root_system_for(spec: GroupSpec, variant: RootVariant) -> RootSystemSpec {
    let letters = spec.alphabet();
    let is_short = |letter: usize| -> bool {
        let at_end = match spec.family() {
            Family::B => letter == 0,
            Family::AffineC => letter == 0 || letter == spec.rank(),
            Family::A | Family::AffineA => false,
        };
        match variant {
            RootVariant::ShortEnds => at_end,
            RootVariant::LongEnds => !at_end,
        }
    };
    let d: Vec<Vec<i64>> = letters
        .iter()
        .map(|&a| {
            letters
                .iter()
                .map(|&b| {
                    if a == b {
                        return 0;
                    }
                    match spec.coxeter_m(a, b) {
                        Some(2) => 0,
                        Some(3) => 1,
                        None => 2,
                        Some(4) => {
                            if is_short(a) {
                                2
                            } else {
                                1
                            }
                        }
                        Some(6) => {
                            if is_short(a) {
                                3
                            } else {
                                1
                            }
                        }
                        Some(m) => unreachable!("unexpected Coxeter label {m}"),
                    }
                })
                .collect()
        })
        .collect();
    RootSystemSpec { spec, letters, d }
}

/// Linear action of a generator: the coefficient of `lambda_s` becomes
/// `-v_s + sum_{s' != s} d_{s,s'} v_{s'}`; all other coefficients are
/// unchanged.
pub fn reflect_root(rs: &RootSystemSpec, letter: usize, v: &RootVector) -> RootVector {
    let i = rs.index_of(letter);
    let mut out = v.0.clone();
    out[i] = -v.0[i]
        + rs.d[i]
            .iter()
            .zip(&v.0)
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, (&d, &c))| d * c)
            .sum::<i64>();
    RootVector(out)
}

/// A positive root together with the reflection it corresponds to and a
/// (palindromic, not necessarily reduced) word for that reflection.
#[derive(Debug, Clone)]
pub struct PositiveRoot {
    pub root: RootVector,
    pub reflection: Element,
    pub witness: Word,
}

/// Harvests every positive root of height at most `max_height` by
/// breadth-first reflection from the simple roots, carrying the conjugated
/// reflection along. Every non-simple positive root is reachable through
/// roots of strictly smaller height, so the bound is saturating.
pub fn positive_roots_up_to_height(
    rs: &RootSystemSpec,
    max_height: i64,
    budget: usize,
) -> Result<Vec<PositiveRoot>> {
    let spec = rs.spec();
    let gens: Vec<(usize, Element)> = rs
        .letters
        .iter()
        .map(|&l| (l, Element::simple_reflection(spec, l).unwrap()))
        .collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<PositiveRoot> = VecDeque::new();
    let mut out: Vec<PositiveRoot> = Vec::new();
    if max_height >= 1 {
        for (l, s) in &gens {
            let root = rs.simple_root(*l);
            seen.insert(root.0.clone());
            queue.push_back(PositiveRoot {
                root,
                reflection: s.clone(),
                witness: Word(vec![*l]),
            });
        }
    }
    while let Some(pr) = queue.pop_front() {
        out.push(pr.clone());
        if out.len() > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        for (l, s) in &gens {
            let image = reflect_root(rs, *l, &pr.root);
            if !image.is_positive() {
                // only the negated simple root ever leaves the positive cone
                debug_assert!(image.0.iter().all(|&c| c <= 0));
                continue;
            }
            if image.height() > max_height || seen.contains(&image.0) {
                continue;
            }
            seen.insert(image.0.clone());
            let reflection = s
                .multiply(&pr.reflection)
                .and_then(|u| u.multiply(s))
                .expect("same spec");
            let mut letters = Vec::with_capacity(pr.witness.0.len() + 2);
            letters.push(*l);
            letters.extend_from_slice(&pr.witness.0);
            letters.push(*l);
            queue.push_back(PositiveRoot {
                root: image,
                reflection,
                witness: Word(letters),
            });
        }
    }
    out.sort_by(|a, b| (a.root.height(), &a.root.0).cmp(&(b.root.height(), &b.root.0)));
    Ok(out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DisHeightMismatch {
    pub root: RootVector,
    pub height: i64,
    pub reflection_window: String,
    pub half_disarray: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DisHeightReport {
    pub family: Family,
    pub rank: usize,
    pub variant: RootVariant,
    pub max_height: i64,
    pub roots_checked: usize,
    pub mismatches: Vec<DisHeightMismatch>,
}

impl DisHeightReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks `dis(t)/2 = height(lambda_t)` for every positive root up to the
/// given height.
pub fn check_dis_equals_height(
    rs: &RootSystemSpec,
    max_height: i64,
    budget: usize,
) -> Result<DisHeightReport> {
    let roots = positive_roots_up_to_height(rs, max_height, budget)?;
    let mut mismatches = Vec::new();
    for pr in &roots {
        let half_dis = disarray(&pr.reflection) / 2;
        if half_dis != pr.root.height() {
            mismatches.push(DisHeightMismatch {
                root: pr.root.clone(),
                height: pr.root.height(),
                reflection_window: pr.reflection.to_string(),
                half_disarray: half_dis,
            });
        }
    }
    Ok(DisHeightReport {
        family: rs.spec().family(),
        rank: rs.spec().rank(),
        variant: RootVariant::ShortEnds,
        max_height,
        roots_checked: roots.len(),
        mismatches,
    })
}

/// Cheapest cost of a reflection factorization of `w`, a reflection `t`
/// costing `height(lambda_t)`. Dijkstra over the reflection-weighted Cayley
/// graph; harvesting roots up to height `l_S(w)` suffices because costlier
/// edges can never improve on the all-simples factorization.
pub fn min_height_cost(w: &Element, rs: &RootSystemSpec, horizon: Option<i64>) -> Result<i64> {
    let length = coxeter_length(w) as i64;
    if length == 0 {
        return Ok(0);
    }
    let horizon = match horizon {
        None => length,
        Some(h) if h >= length => h,
        Some(h) => {
            return Err(Error::InsufficientRootHorizon {
                horizon: h,
                needed: length,
            })
        }
    };
    let roots = positive_roots_up_to_height(rs, horizon, DEFAULT_ROOT_BUDGET)?;
    let start = Element::identity(w.spec());
    let mut dist: HashMap<Vec<i64>, i64> = HashMap::new();
    dist.insert(start.window().to_vec(), 0);
    let mut heap: BinaryHeap<Reverse<(i64, Vec<i64>)>> = BinaryHeap::new();
    heap.push(Reverse((0, start.window().to_vec())));
    while let Some(Reverse((cost, window))) = heap.pop() {
        if window == w.window() {
            return Ok(cost);
        }
        if dist.get(&window) != Some(&cost) {
            continue; // stale entry
        }
        let u = Element::from_window(w.spec(), &window).expect("windows in the search are valid");
        for pr in &roots {
            let next_cost = cost + pr.root.height();
            if next_cost > length {
                continue;
            }
            let v = u.multiply(&pr.reflection)?;
            let key = v.window().to_vec();
            if dist.get(&key).is_none_or(|&c| next_cost < c) {
                dist.insert(key.clone(), next_cost);
                heap.push(Reverse((next_cost, key)));
            }
        }
    }
    unreachable!("the reduced-word factorization bounds the cost by the length")
}

const DEFAULT_ROOT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TightFactorViolation {
    pub window: String,
    pub length: usize,
    pub bad_factor: Option<(usize, usize)>,
    pub fully_commutative: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TightFactorReport {
    pub family: Family,
    pub rank: usize,
    pub max_length: usize,
    pub elements_checked: usize,
    pub cost_tight: usize,
    pub violations: Vec<TightFactorViolation>,
}

impl TightFactorReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every element whose minimum height-cost equals its length, checks
/// that each consecutive reduced-word factor `s s' s` sits on an infinite
/// edge or has the longer root in the middle, and that the element is fully
/// commutative.
pub fn check_tight_factor_condition(
    rs: &RootSystemSpec,
    census: &crate::enumeration::LengthCensus,
) -> Result<TightFactorReport> {
    let spec = rs.spec();
    debug_assert_eq!(spec, census.spec());
    let mut violations = Vec::new();
    let mut cost_tight = 0;
    let mut checked = 0;
    for (length, w) in census.elements() {
        checked += 1;
        let cost = min_height_cost(w, rs, None)?;
        debug_assert!(cost <= length as i64);
        if cost != length as i64 {
            continue;
        }
        cost_tight += 1;
        let mut bad_factor = None;
        'scan: for word in &reduced_words(w, None).words {
            for t in word.0.windows(3) {
                if t[0] != t[2] {
                    continue;
                }
                let (s, s_prime) = (t[0], t[1]);
                let infinite = spec.coxeter_m(s, s_prime).is_none();
                if !infinite && rs.d(s, s_prime) < 2 {
                    bad_factor = Some((s, s_prime));
                    break 'scan;
                }
            }
        }
        let fc = is_fully_commutative(w);
        if bad_factor.is_some() || !fc {
            violations.push(TightFactorViolation {
                window: w.to_string(),
                length,
                bad_factor,
                fully_commutative: fc,
            });
        }
    }
    Ok(TightFactorReport {
        family: spec.family(),
        rank: spec.rank(),
        max_length: census.max_length(),
        elements_checked: checked,
        cost_tight,
        violations,
    })
}
