//! End-to-end acceptance gate: nine exact checks covering the equivalence
//! theorem, the degenerate groups, the avoider counts and recurrences, the
//! displacement bound and its one-step law, crossing numbers, both pattern
//! oracles, the affine search window, and the root-height identities.
//! Each test prints a single pass/fail line.

use coxlab::{
    avoids_p, bfs_by_length, bfs_full_group, check_dis_equals_height, check_tight_factor_condition,
    contains_global_321, crossing_numbers, degenerate_isomorphism_check, disarray, gap,
    right_descents, root_system_for, verify_main_theorem, verify_recurrence, Element, Family,
    GroupSpec, RootVariant, DEFAULT_BUDGET,
};

fn spec(f: Family, n: usize) -> GroupSpec {
    GroupSpec::new(f, n).unwrap()
}

fn report(name: &str, pass: bool, detail: &str) {
    println!(
        "acceptance {name}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{name}: {detail}");
}

/// The six verification suites of criterion 1: families, ranks, and length
/// bounds (full group for the finite ones).
fn theorem_suites() -> Vec<(Family, usize, usize)> {
    vec![
        (Family::A, 4, 6),
        (Family::A, 5, 10),
        (Family::B, 2, 4),
        (Family::B, 3, 9),
        (Family::AffineA, 3, 8),
        (Family::AffineC, 2, 8),
    ]
}

#[test]
fn criterion_1_main_theorem_equivalence() {
    let mut detail = String::new();
    let mut pass = true;
    for (family, n, max_length) in theorem_suites() {
        let r = verify_main_theorem(spec(family, n), max_length, DEFAULT_BUDGET).unwrap();
        if !family.is_affine() {
            assert!(r.saturated, "{family}{n} not exhausted at length {max_length}");
        }
        if !r.pass() {
            pass = false;
            detail += &format!("{family}{n}: {} disagreement(s); ", r.disagreements.len());
        }
    }
    report("1 main-theorem equivalence", pass, &detail);
}

#[test]
fn criterion_2_degenerate_cases() {
    let mut pass = true;
    let mut detail = String::new();
    for (family, n) in [(Family::AffineA, 2), (Family::AffineC, 1)] {
        let r = verify_main_theorem(spec(family, n), 12, DEFAULT_BUDGET).unwrap();
        if !r.pass() || !r.all_uniformly_true {
            pass = false;
            detail += &format!("{family}{n} predicates not uniformly true; ");
        }
    }
    let iso = degenerate_isomorphism_check(12, DEFAULT_BUDGET).unwrap();
    if !iso.pass() {
        pass = false;
        detail += &format!("{} isomorphism mismatch(es); ", iso.mismatches.len());
    }
    report("2 degenerate cases", pass, &detail);
}

#[test]
fn criterion_3_avoider_counts() {
    let mut pass = true;
    let mut detail = String::new();
    let catalan = [1i64, 2, 5, 14, 42, 132];
    for (n, &expected) in (1..=6).zip(&catalan) {
        let census = bfs_full_group(spec(Family::A, n), DEFAULT_BUDGET).unwrap();
        let got = coxlab::avoider_polynomial(&census).poly.eval(1);
        if got != expected {
            pass = false;
            detail += &format!("A{n}: {got} != {expected}; ");
        }
    }
    let binomials = [2i64, 6, 20, 70];
    for (n, &expected) in (1..=4).zip(&binomials) {
        let census = bfs_full_group(spec(Family::B, n), DEFAULT_BUDGET).unwrap();
        let got = coxlab::avoider_polynomial(&census).poly.eval(1);
        if got != expected {
            pass = false;
            detail += &format!("B{n}: {got} != {expected}; ");
        }
    }
    report("3 avoider counts", pass, &detail);
}

#[test]
fn criterion_4_recurrences() {
    let mut pass = true;
    let mut detail = String::new();
    for (family, max_rank) in [(Family::A, 6), (Family::B, 4)] {
        for n in 1..=max_rank {
            let r = verify_recurrence(family, n, DEFAULT_BUDGET).unwrap();
            if !r.pass {
                pass = false;
                detail += &format!(
                    "{family}{n}: bfs {} vs recurrence {}; ",
                    r.bfs, r.recurrence
                );
            }
        }
    }
    report("4 q-polynomial recurrences", pass, &detail);
}

#[test]
fn criterion_5_bound_and_one_step_law() {
    let mut pass = true;
    let mut detail = String::new();
    for (family, n, max_length) in theorem_suites() {
        let census = bfs_by_length(spec(family, n), max_length, DEFAULT_BUDGET).unwrap();
        for (_, w) in census.elements() {
            if gap(w) < 0 {
                pass = false;
                detail += &format!("gap < 0 at {family}{n} <{w}>; ");
            }
        }
    }
    for (family, n, max_length) in [(Family::A, 4, 6), (Family::B, 2, 4), (Family::AffineA, 3, 6)]
    {
        let sp = spec(family, n);
        let census = bfs_by_length(sp, max_length, DEFAULT_BUDGET).unwrap();
        for (_, v) in census.elements() {
            let descents = right_descents(v);
            for letter in sp.alphabet() {
                if descents.contains(&letter) {
                    continue; // ascents only
                }
                let (a, a_prime) = sp.generator_pair(letter);
                if sp.symmetry_class(a) == sp.symmetry_class(a_prime) {
                    continue; // mirror-type generators follow a different case split
                }
                let s = Element::simple_reflection(sp, letter).unwrap();
                let vs = v.multiply(&s).unwrap();
                let delta = disarray(&vs) - disarray(v);
                let crossing = v.apply(a) <= a && a < v.apply(a_prime);
                if !matches!(delta, -2 | 0 | 2) || (delta == 2) != crossing {
                    pass = false;
                    detail += &format!(
                        "{family}{n} <{v}> * s_{letter}: delta {delta}, crossing {crossing}; "
                    );
                }
            }
        }
    }
    report("5 displacement bound and one-step law", pass, &detail);
}

#[test]
fn criterion_6_crossing_numbers() {
    let mut pass = true;
    let mut detail = String::new();
    for (family, n, max_length) in theorem_suites() {
        let sp = spec(family, n);
        let positions: Vec<i64> = match sp.period() {
            Some(p) => sp.unfrozen_in(1 - p, 2 * p),
            None => sp.fundamental_positions(),
        };
        let census = bfs_by_length(sp, max_length, DEFAULT_BUDGET).unwrap();
        for (_, w) in census.elements() {
            for &i in &positions {
                let c = crossing_numbers(w, i).unwrap();
                if c.above != c.below {
                    pass = false;
                    detail += &format!("{family}{n} <{w}> at {i}: {} != {}; ", c.above, c.below);
                }
            }
        }
    }
    report("6 crossing numbers agree", pass, &detail);
}

#[test]
fn criterion_7_pattern_oracle_equivalence() {
    let mut pass = true;
    let mut detail = String::new();
    for n in 1..=4 {
        let census = bfs_full_group(spec(Family::B, n), DEFAULT_BUDGET).unwrap();
        for (_, w) in census.elements() {
            let global = contains_global_321(w).is_some();
            let classical = !avoids_p(w).unwrap();
            if global != classical {
                pass = false;
                detail += &format!("B{n} <{w}>: global {global} vs classical {classical}; ");
            }
        }
    }
    report("7 global vs classical pattern oracle", pass, &detail);
}

/// Independent oracle: scan every position triple across five periods.
fn brute_force_321(w: &Element) -> bool {
    let p = w.spec().period().unwrap();
    let positions = w.spec().unfrozen_in(1 - 2 * p, 3 * p);
    for (x, &i) in positions.iter().enumerate() {
        for (y, &j) in positions.iter().enumerate().skip(x + 1) {
            if w.apply(i) <= w.apply(j) {
                continue;
            }
            for &k in &positions[y + 1..] {
                if w.apply(j) > w.apply(k) {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn criterion_8_affine_search_window() {
    let mut pass = true;
    let mut detail = String::new();
    for (family, n) in [(Family::AffineA, 3), (Family::AffineC, 2)] {
        let census = bfs_by_length(spec(family, n), 8, DEFAULT_BUDGET).unwrap();
        for (_, w) in census.elements() {
            let windowed = contains_global_321(w).is_some();
            let brute = brute_force_321(w);
            if windowed != brute {
                pass = false;
                detail += &format!("{family}{n} <{w}>: windowed {windowed} vs brute {brute}; ");
            }
        }
    }
    report("8 bounded search matches brute force", pass, &detail);
}

#[test]
fn criterion_9_root_identities() {
    let mut pass = true;
    let mut detail = String::new();
    let systems = [
        (Family::A, 2..=4usize),
        (Family::B, 1..=3),
        (Family::AffineA, 2..=4),
        (Family::AffineC, 1..=3),
    ];
    for (family, ranks) in systems {
        for n in ranks {
            let rs = root_system_for(spec(family, n), RootVariant::ShortEnds);
            let r = check_dis_equals_height(&rs, 10, DEFAULT_BUDGET).unwrap();
            if !r.pass() {
                pass = false;
                detail += &format!("{family}{n}: {} dis/height mismatch(es); ", r.mismatches.len());
            }
        }
    }
    for (family, n) in [(Family::A, 4), (Family::B, 2), (Family::B, 3)] {
        let sp = spec(family, n);
        let rs = root_system_for(sp, RootVariant::ShortEnds);
        let census = bfs_full_group(sp, DEFAULT_BUDGET).unwrap();
        let r = check_tight_factor_condition(&rs, &census).unwrap();
        if !r.pass() {
            pass = false;
            detail += &format!("{family}{n}: {} factor violation(s); ", r.violations.len());
        }
    }
    report("9 root-height identities", pass, &detail);
}
