//! Coxeter length, descents, exhaustive reduced-word generation, and the
//! reduced-word separation conditions of the main equivalence.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::family::{Family, GroupSpec};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// A word in the generator alphabet, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses whitespace- or comma-separated letters, e.g. `1 0 1`.
    pub fn parse(spec: GroupSpec, text: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let raw: i64 = tok
                .parse()
                .map_err(|e| Error::Parse(format!("bad letter {tok:?}: {e}")))?;
            letters.push(spec.normalize_letter(raw)?);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Letters `s` with `l(w s) = l(w) - 1`.
pub fn right_descents(w: &Element) -> BTreeSet<usize> {
    let spec = w.spec();
    spec.alphabet()
        .into_iter()
        .filter(|&l| {
            let (a, b) = spec.generator_pair(l);
            w.apply(a) > w.apply(b)
        })
        .collect()
}

/// Number of greedy descent-reduction steps to the identity; equals the
/// minimal word length expressing `w`.
pub fn coxeter_length(w: &Element) -> usize {
    let spec = w.spec();
    let mut cur = w.clone();
    let mut len = 0;
    while !cur.is_identity() {
        let l = *right_descents(&cur)
            .iter()
            .next()
            .expect("a non-identity element has a right descent");
        let s = Element::simple_reflection(spec, l).unwrap();
        cur = cur.multiply(&s).unwrap();
        len += 1;
    }
    len
}

/// Left-to-right product of the letters of `word`.
pub fn word_to_element(spec: GroupSpec, word: &Word) -> Result<Element> {
    let mut acc = Element::identity(spec);
    for &l in &word.0 {
        let s = Element::simple_reflection(spec, l)?;
        acc = acc.multiply(&s)?;
    }
    Ok(acc)
}

pub fn is_reduced(spec: GroupSpec, word: &Word) -> Result<bool> {
    let w = word_to_element(spec, word)?;
    Ok(coxeter_length(&w) == word.len())
}

/// Result of reduced-word enumeration; `truncated` is set when a cap stopped
/// the recursion before completeness.
#[derive(Debug, Clone)]
pub struct ReducedWords {
    pub words: Vec<Word>,
    pub truncated: bool,
}

/// All reduced words of `w`, generated recursively over right descents and
/// memoized on the window within one call tree. A cap, when given, bounds
/// the number of words kept at every node.
pub fn reduced_words(w: &Element, cap: Option<usize>) -> ReducedWords {
    let mut memo: HashMap<Vec<i64>, Vec<Word>> = HashMap::new();
    let mut truncated = false;
    let words = collect(w, cap, &mut memo, &mut truncated);
    ReducedWords { words, truncated }
}

/// All reduced words, erroring if the cap would truncate the set.
pub fn reduced_words_complete(w: &Element, cap: usize) -> Result<Vec<Word>> {
    let out = reduced_words(w, Some(cap));
    if out.truncated {
        Err(Error::CapExceeded(cap))
    } else {
        Ok(out.words)
    }
}

fn collect(
    w: &Element,
    cap: Option<usize>,
    memo: &mut HashMap<Vec<i64>, Vec<Word>>,
    truncated: &mut bool,
) -> Vec<Word> {
    if w.is_identity() {
        return vec![Word::empty()];
    }
    if let Some(found) = memo.get(w.window()) {
        return found.clone();
    }
    let spec = w.spec();
    let mut words = Vec::new();
    'outer: for l in right_descents(w) {
        let s = Element::simple_reflection(spec, l).unwrap();
        let shorter = w.multiply(&s).unwrap();
        for mut sub in collect(&shorter, cap, memo, truncated) {
            sub.0.push(l);
            words.push(sub);
            if cap.is_some_and(|c| words.len() >= c) {
                *truncated = true;
                break 'outer;
            }
        }
    }
    words.sort();
    words.dedup();
    memo.insert(w.window().to_vec(), words.clone());
    words
}

/// Letter of the generator `s_j` for a diagram index `j` adjacent to some
/// `i` in `[n-1]`, or `None` when that generator does not exist in the
/// family. In affine A the index wraps: `s_n = s_0`.
pub fn neighbor_letter(spec: GroupSpec, j: i64) -> Option<usize> {
    let n = spec.rank() as i64;
    match spec.family() {
        Family::A => (1..n).contains(&j).then_some(j as usize),
        Family::B => (0..n).contains(&j).then_some(j as usize),
        Family::AffineA => Some(j.rem_euclid(n) as usize),
        Family::AffineC => (0..=n).contains(&j).then_some(j as usize),
    }
}

/// Condition (B): in every reduced word, for all `i` in `[n-1]`, every two
/// copies of `i` are separated by a copy of the generator `i-1` and of the
/// generator `i+1`. Nonexistent generators make the requirement
/// unsatisfiable.
pub fn condition_b(w: &Element) -> bool {
    let spec = w.spec();
    let n = spec.rank();
    let words = reduced_words(w, None).words;
    for word in &words {
        for i in 1..n {
            let positions: Vec<usize> = word
                .0
                .iter()
                .enumerate()
                .filter(|&(_, &l)| l == i)
                .map(|(p, _)| p)
                .collect();
            for pair in positions.windows(2) {
                let (lo, hi) = (pair[0], pair[1]);
                for j in [i as i64 - 1, i as i64 + 1] {
                    match neighbor_letter(spec, j) {
                        None => return false,
                        Some(nb) => {
                            if !word.0[lo + 1..hi].contains(&nb) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Condition (B'): no reduced word contains consecutive letters
/// `i (i+-1) i` for `i` in `[n-1]` (generator identities, with the affine A
/// wrap-around).
pub fn condition_b_prime(w: &Element) -> bool {
    let spec = w.spec();
    let n = spec.rank();
    let words = reduced_words(w, None).words;
    for word in &words {
        for t in word.0.windows(3) {
            let (x, y, z) = (t[0], t[1], t[2]);
            if x != z || !(1..n).contains(&x) {
                continue;
            }
            let i = x as i64;
            for j in [i - 1, i + 1] {
                if neighbor_letter(spec, j) == Some(y) {
                    return false;
                }
            }
        }
    }
    true
}

/// True iff no reduced word contains an alternating factor of length
/// `m_{s,s'}` for a non-commuting generator pair.
pub fn is_fully_commutative(w: &Element) -> bool {
    let spec = w.spec();
    let words = reduced_words(w, None).words;
    for word in &words {
        for start in 0..word.0.len().saturating_sub(1) {
            let x = word.0[start];
            let y = word.0[start + 1];
            let Some(m) = spec.coxeter_m(x, y) else {
                continue; // infinite edge: no braid factor exists
            };
            if m < 3 {
                continue;
            }
            let mut run = 2;
            while start + run < word.0.len() {
                let expected = if run % 2 == 0 { x } else { y };
                if word.0[start + run] == expected {
                    run += 1;
                } else {
                    break;
                }
            }
            if run >= m as usize {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    fn spec(f: Family, n: usize) -> GroupSpec {
        GroupSpec::new(f, n).unwrap()
    }

    fn elem(f: Family, n: usize, w: &[i64]) -> Element {
        Element::from_window(spec(f, n), w).unwrap()
    }

    #[test]
    fn descents() {
        assert!(right_descents(&Element::identity(spec(Family::B, 3))).is_empty());
        let w = elem(Family::B, 2, &[-1, -2]);
        assert_eq!(right_descents(&w), BTreeSet::from([0, 1]));
        let s2 = elem(Family::AffineC, 2, &[1, 4]);
        assert_eq!(right_descents(&s2), BTreeSet::from([2]));
    }

    #[test]
    fn lengths() {
        assert_eq!(coxeter_length(&Element::identity(spec(Family::A, 4))), 0);
        let w = word_to_element(spec(Family::A, 3), &Word(vec![1, 2, 1])).unwrap();
        assert_eq!(coxeter_length(&w), 3);
        assert_eq!(coxeter_length(&elem(Family::B, 2, &[-1, -2])), 4);
    }

    #[test]
    fn products_of_words() {
        let b2 = spec(Family::B, 2);
        assert!(word_to_element(b2, &Word::empty()).unwrap().is_identity());
        let w = word_to_element(b2, &Word(vec![0, 1, 0])).unwrap();
        assert_eq!(w.window(), &[-2, -1]);
        let u = word_to_element(spec(Family::AffineC, 2), &Word(vec![1, 2, 1])).unwrap();
        assert_eq!(u.window(), &[5, 2]); // <(1 5)>
    }

    #[test]
    fn reducedness() {
        let b2 = spec(Family::B, 2);
        assert!(!is_reduced(b2, &Word(vec![1, 1])).unwrap());
        assert!(is_reduced(b2, &Word(vec![0, 1, 0])).unwrap());
        assert!(is_reduced(b2, &Word(vec![1, 0, 1])).unwrap());
    }

    #[test]
    fn reduced_word_sets() {
        let id = Element::identity(spec(Family::A, 3));
        assert_eq!(reduced_words(&id, None).words, vec![Word::empty()]);

        let w0 = elem(Family::A, 3, &[3, 2, 1]);
        let words = reduced_words(&w0, None).words;
        assert_eq!(words, vec![Word(vec![1, 2, 1]), Word(vec![2, 1, 2])]);

        // m(s0, s1) = 4 in type B: s0 s1 s0 and s1 s0 s1 are distinct
        // elements, each with a unique reduced word.
        let u = elem(Family::B, 2, &[-2, -1]);
        assert_eq!(reduced_words(&u, None).words, vec![Word(vec![0, 1, 0])]);
        let v = elem(Family::B, 2, &[1, -2]);
        assert_eq!(reduced_words(&v, None).words, vec![Word(vec![1, 0, 1])]);

        let capped = reduced_words(&w0, Some(1));
        assert!(capped.truncated);
        assert_eq!(capped.words.len(), 1);
        assert!(reduced_words_complete(&w0, 1).is_err());
    }

    #[test]
    fn condition_b_examples() {
        assert!(condition_b(&Element::identity(spec(Family::A, 3))));
        // (3,2,1) has word 121: two 1's with no generator 0 in type A
        assert!(!condition_b(&elem(Family::A, 3, &[3, 2, 1])));
        // degenerate affine C1: [n-1] is empty
        let s0 = Element::simple_reflection(spec(Family::AffineC, 1), 0).unwrap();
        assert!(condition_b(&s0));
    }

    #[test]
    fn condition_b_prime_examples() {
        assert!(!condition_b_prime(&elem(Family::A, 3, &[3, 2, 1])));
        // the unique word of (-2,-1) is 010, whose repeated letter 0 is
        // outside [n-1]
        assert!(condition_b_prime(&elem(Family::B, 2, &[-2, -1])));
        // 101 has outer letter 1 in [n-1] with middle letter 0 = i-1
        assert!(!condition_b_prime(&elem(Family::B, 2, &[1, -2])));
        assert!(condition_b_prime(&Element::identity(spec(Family::B, 2))));
    }

    #[test]
    fn full_commutativity() {
        assert!(!is_fully_commutative(&elem(Family::A, 3, &[3, 2, 1])));
        // 010 is not a braid factor when m(s0,s1) = 4
        assert!(is_fully_commutative(&elem(Family::B, 2, &[-2, -1])));
        assert!(is_fully_commutative(&Element::identity(spec(Family::B, 2))));
        // 0101 is a full braid word
        let w0 = elem(Family::B, 2, &[-1, -2]);
        assert!(!is_fully_commutative(&w0));
    }
}
