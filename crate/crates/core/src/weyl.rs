//! Finite Weyl groups: enumeration with canonical reduced words, action on
//! weights, Bruhat order and inversion sets.
//!
//! Elements are found by breadth-first closure from the identity under right
//! multiplication by simple reflections. The group acts simply transitively on
//! the orbit of `rho`, so `w(rho)` is used as the key of `w`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Default refusal threshold for `|W|`; admits F4 and E6, refuses E7 and E8.
pub const DEFAULT_WEYL_GUARD: u128 = 1_000_000;

pub type ElementId = usize;

#[derive(Debug, Clone)]
pub struct WeylElement {
    pub id: ElementId,
    /// Shortlex-minimal reduced word, zero-based node indices.
    pub word: Vec<usize>,
    /// Row-major matrix acting on fundamental-weight coordinates.
    pub action: Vec<i64>,
    pub rho_image: Vec<i64>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, ElementId>,
    right: Vec<ElementId>,
    left: Vec<ElementId>,
    inverse: Vec<ElementId>,
    longest: ElementId,
}

impl WeylGroup {
    /// Enumerates `W`, refusing when the classical order exceeds `guard`.
    pub fn enumerate(rs: &RootSystem, guard: u128) -> Result<Self> {
        let requested = rs.cartan_type().weyl_order();
        if requested > guard {
            return Err(Error::GuardExceeded {
                guard: "weyl order",
                requested,
                limit: guard,
            });
        }
        let n = rs.rank();
        let simple: Vec<Vec<i64>> = (0..n).map(|i| rs.simple_root_weight(i)).collect();

        let mut identity = vec![0i64; n * n];
        for i in 0..n {
            identity[i * n + i] = 1;
        }
        let rho = vec![1i64; n];
        let mut elements = vec![WeylElement {
            id: 0,
            word: Vec::new(),
            action: identity,
            rho_image: rho.clone(),
        }];
        let mut index = HashMap::new();
        index.insert(rho, 0);

        let mut level_start = 0;
        while level_start < elements.len() {
            let level_end = elements.len();
            for w in level_start..level_end {
                for (i, alpha) in simple.iter().enumerate() {
                    let moved = mat_vec(&elements[w].action, alpha, n);
                    let key: Vec<i64> = elements[w]
                        .rho_image
                        .iter()
                        .zip(&moved)
                        .map(|(r, m)| r - m)
                        .collect();
                    if index.contains_key(&key) {
                        continue;
                    }
                    let mut action = elements[w].action.clone();
                    for row in 0..n {
                        action[row * n + i] -= moved[row];
                    }
                    let mut word = elements[w].word.clone();
                    word.push(i);
                    let id = elements.len();
                    index.insert(key.clone(), id);
                    elements.push(WeylElement {
                        id,
                        word,
                        action,
                        rho_image: key,
                    });
                }
            }
            level_start = level_end;
        }

        if elements.len() as u128 != requested {
            return Err(Error::Inconsistent(format!(
                "enumerated {} elements, expected {requested}",
                elements.len()
            )));
        }

        let lookup = |key: &Vec<i64>| -> Result<ElementId> {
            index
                .get(key)
                .copied()
                .ok_or_else(|| Error::Inconsistent("Weyl group not closed".into()))
        };
        let mut right = Vec::with_capacity(elements.len() * n);
        let mut left = Vec::with_capacity(elements.len() * n);
        for e in &elements {
            for (i, alpha) in simple.iter().enumerate() {
                let moved = mat_vec(&e.action, alpha, n);
                let r: Vec<i64> = e.rho_image.iter().zip(&moved).map(|(a, b)| a - b).collect();
                right.push(lookup(&r)?);
                let ri = e.rho_image[i];
                let l: Vec<i64> = e
                    .rho_image
                    .iter()
                    .zip(alpha)
                    .map(|(a, b)| a - ri * b)
                    .collect();
                left.push(lookup(&l)?);
            }
        }
        let longest = elements.len() - 1;

        let mut group = WeylGroup {
            rank: n,
            elements,
            index,
            right,
            left,
            inverse: Vec::new(),
            longest,
        };
        group.inverse = (0..group.order())
            .map(|w| {
                let mut word = group.elements[w].word.clone();
                word.reverse();
                group.from_word(&word)
            })
            .collect::<Result<_>>()?;
        Ok(group)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, id: ElementId) -> &WeylElement {
        &self.elements[id]
    }

    pub fn identity(&self) -> ElementId {
        0
    }

    pub fn longest(&self) -> ElementId {
        self.longest
    }

    pub fn length(&self, id: ElementId) -> usize {
        self.elements[id].word.len()
    }

    pub fn inverse(&self, id: ElementId) -> ElementId {
        self.inverse[id]
    }

    /// `w * s_i`.
    pub fn right_mul(&self, id: ElementId, i: usize) -> ElementId {
        self.right[id * self.rank + i]
    }

    /// `s_i * w`.
    pub fn left_mul(&self, i: usize, id: ElementId) -> ElementId {
        self.left[id * self.rank + i]
    }

    pub fn multiply(&self, a: ElementId, b: ElementId) -> ElementId {
        self.elements[b]
            .word
            .iter()
            .fold(a, |acc, &i| self.right_mul(acc, i))
    }

    /// Product of simple reflections, zero-based indices.
    pub fn from_word(&self, word: &[usize]) -> Result<ElementId> {
        word.iter().try_fold(self.identity(), |acc, &i| {
            if i >= self.rank {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    rank: self.rank,
                });
            }
            Ok(self.right_mul(acc, i))
        })
    }

    pub fn find_by_rho_image(&self, image: &[i64]) -> Option<ElementId> {
        self.index.get(image).copied()
    }

    /// `s1.s2.s1`, or `e` for the identity. Nodes are printed one-based.
    pub fn word_string(&self, id: ElementId) -> String {
        format_word(&self.elements[id].word)
    }

    /// Parses `e` or a dot-separated list like `s2.s1`.
    pub fn parse_word(&self, s: &str) -> Result<ElementId> {
        let word = parse_word(s)?;
        self.from_word(&word)
    }

    pub fn act(&self, id: ElementId, lambda: &Weight) -> Result<Weight> {
        if lambda.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: lambda.rank(),
            });
        }
        Ok(Weight(mat_vec(
            &self.elements[id].action,
            lambda.coords(),
            self.rank,
        )))
    }

    /// Bruhat order `u <= w`, by the lifting property along the last letter
    /// of the canonical word of `w`.
    pub fn bruhat_leq(&self, mut u: ElementId, mut w: ElementId) -> bool {
        loop {
            if u == w {
                return true;
            }
            if self.length(u) >= self.length(w) {
                return false;
            }
            let i = *self.elements[w].word.last().expect("w is not the identity");
            let ws = self.right_mul(w, i);
            let us = self.right_mul(u, i);
            if self.length(us) < self.length(u) {
                u = us;
            }
            w = ws;
        }
    }

    /// Elements covered by `w` in the Bruhat order: `t*w` with `t` a
    /// reflection and length dropping by exactly one. Sorted by id.
    pub fn covers(&self, rs: &RootSystem, w: ElementId) -> Vec<ElementId> {
        let target = self.length(w);
        if target == 0 {
            return Vec::new();
        }
        let image = Weight(self.elements[w].rho_image.clone());
        let mut out: Vec<ElementId> = rs
            .positive_roots()
            .iter()
            .filter_map(|r| {
                let pairing: i64 = image
                    .coords()
                    .iter()
                    .zip(&r.coroot)
                    .map(|(a, b)| a * b)
                    .sum();
                let beta = rs.root_to_weight(&r.root);
                let key: Vec<i64> = image
                    .coords()
                    .iter()
                    .zip(beta.coords())
                    .map(|(a, b)| a - pairing * b)
                    .collect();
                let tw = self.index[&key];
                (self.length(tw) + 1 == target).then_some(tw)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Indices into `rs.positive_roots()` of the roots `beta > 0` with
    /// `w(beta) < 0`.
    pub fn inversion_set(&self, rs: &RootSystem, w: ElementId) -> Vec<usize> {
        let word = &self.elements[w].word;
        rs.positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                let image = word
                    .iter()
                    .rev()
                    .fold(r.root.clone(), |acc, &i| rs.reflect_root(&acc, i));
                image.iter().all(|&c| c <= 0)
            })
            .map(|(k, _)| k)
            .collect()
    }

    /// Number of elements of each length `0..=l(w0)`.
    pub fn length_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.length(self.longest) + 1];
        for e in &self.elements {
            counts[e.length()] += 1;
        }
        counts
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|i| format!("s{}", i + 1))
        .collect::<Vec<_>>()
        .join(".")
}

pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let trimmed = s.trim();
    if trimmed == "e" || trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for part in trimmed.split('.') {
        let node = part
            .strip_prefix('s')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&k| k >= 1)
            .ok_or_else(|| Error::parse(s, pos, format!("expected s<k>, got {part:?}")))?;
        out.push(node - 1);
        pos += part.len() + 1;
    }
    Ok(out)
}

pub(crate) fn mat_vec(m: &[i64], v: &[i64], n: usize) -> Vec<i64> {
    (0..n)
        .map(|r| {
            m[r * n..(r + 1) * n]
                .iter()
                .zip(v)
                .map(|(a, b)| a * b)
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn setup(t: &str) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::new(t.parse().unwrap()).unwrap();
        let w = WeylGroup::enumerate(&rs, DEFAULT_WEYL_GUARD).unwrap();
        (rs, w)
    }

    /// Every product of a subword of a reduced word of `w` lies below `w`,
    /// and the whole interval is reached this way.
    fn subword_interval(g: &WeylGroup, w: ElementId) -> HashSet<ElementId> {
        let word = &g.element(w).word;
        let mut out = HashSet::new();
        for mask in 0u32..(1 << word.len()) {
            let sub: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &i)| i)
                .collect();
            out.insert(g.from_word(&sub).unwrap());
        }
        out
    }

    #[test]
    fn orders() {
        assert_eq!(setup("A2").1.order(), 6);
        assert_eq!(setup("C2").1.order(), 8);
        assert_eq!(setup("G2").1.order(), 12);
        assert_eq!(setup("A1xA1").1.order(), 4);
        // F4: product of degrees 2*6*8*12.
        assert_eq!(setup("F4").1.order(), 2 * 6 * 8 * 12);
    }

    #[test]
    fn guard_refusal_reports_requested_order() {
        let rs = RootSystem::new("E7".parse().unwrap()).unwrap();
        match WeylGroup::enumerate(&rs, DEFAULT_WEYL_GUARD) {
            Err(Error::GuardExceeded { requested, .. }) => assert_eq!(requested, 2_903_040),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn canonical_order_is_length_then_shortlex() {
        for t in ["A3", "B3", "G2"] {
            let (_, g) = setup(t);
            for pair in g.elements().windows(2) {
                let key = |e: &WeylElement| (e.length(), e.word.clone());
                assert!(key(&pair[0]) < key(&pair[1]), "{t}");
            }
        }
    }

    #[test]
    fn longest_element() {
        for t in ["A2", "C2", "B3", "D4", "F4", "A1xG2"] {
            let (rs, g) = setup(t);
            assert_eq!(g.length(g.longest()), rs.num_positive_roots());
            let maximal = g
                .elements()
                .iter()
                .filter(|e| e.length() == rs.num_positive_roots());
            assert_eq!(maximal.count(), 1);
            assert_eq!(g.inverse(g.longest()), g.longest());
        }
    }

    #[test]
    fn action_examples() {
        let (_, a2) = setup("A2");
        let l = Weight(vec![1, 0]);
        assert_eq!(a2.act(a2.identity(), &l).unwrap(), l);
        assert_eq!(a2.act(a2.longest(), &l).unwrap(), Weight(vec![0, -1]));

        let (rs, c2) = setup("C2");
        // s2 s1 applied to omega_1: first s1, then s2.
        let w = c2.parse_word("s2.s1").unwrap();
        let by_reflections = rs
            .reflect_simple(&rs.reflect_simple(&Weight(vec![1, 0]), 0).unwrap(), 1)
            .unwrap();
        assert_eq!(c2.act(w, &Weight(vec![1, 0])).unwrap(), by_reflections);
        assert_eq!(by_reflections, Weight(vec![1, -1]));
        assert!(matches!(
            c2.act(w, &Weight(vec![1])),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn longest_element_sends_dominant_to_antidominant() {
        for t in ["B3", "D4", "G2"] {
            let (_, g) = setup(t);
            let img = g.act(g.longest(), &Weight(vec![1; g.rank()])).unwrap();
            assert!(img.coords().iter().all(|&c| c < 0));
        }
    }

    #[test]
    fn bruhat_examples() {
        let (_, g) = setup("A2");
        let s1 = g.parse_word("s1").unwrap();
        let s1s2 = g.parse_word("s1.s2").unwrap();
        let s2s1 = g.parse_word("s2.s1").unwrap();
        assert!(g.bruhat_leq(g.identity(), s2s1));
        assert!(g.bruhat_leq(s1, s1s2));
        assert!(!g.bruhat_leq(s1s2, s2s1));
        assert!(!g.bruhat_leq(s2s1, s1s2));
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for t in ["A2", "C2", "A3", "G2"] {
            let (_, g) = setup(t);
            for w in 0..g.order() {
                let interval = subword_interval(&g, w);
                for u in 0..g.order() {
                    assert_eq!(g.bruhat_leq(u, w), interval.contains(&u), "{t} {u} {w}");
                }
            }
        }
    }

    #[test]
    fn covers_examples_and_characterisation() {
        let (rs, a2) = setup("A2");
        let mut expect = vec![
            a2.parse_word("s1.s2").unwrap(),
            a2.parse_word("s2.s1").unwrap(),
        ];
        expect.sort();
        assert_eq!(a2.covers(&rs, a2.longest()), expect);
        assert!(a2.covers(&rs, a2.identity()).is_empty());

        for t in ["A2", "C2", "A3", "G2"] {
            let (rs, g) = setup(t);
            for w in 0..g.order() {
                let by_order: Vec<ElementId> = (0..g.order())
                    .filter(|&u| g.length(u) + 1 == g.length(w) && g.bruhat_leq(u, w))
                    .collect();
                assert_eq!(g.covers(&rs, w), by_order, "{t}");
            }
        }
        let (rs, c2) = setup("C2");
        let c = c2.covers(&rs, c2.parse_word("s1.s2").unwrap());
        assert!(!c.is_empty());
        assert!(c.iter().all(|&u| c2.length(u) == 1));
    }

    #[test]
    fn inversion_sets() {
        let (rs, a2) = setup("A2");
        assert!(a2.inversion_set(&rs, a2.identity()).is_empty());
        assert_eq!(a2.inversion_set(&rs, a2.longest()).len(), 3);
        let (rs, c2) = setup("C2");
        let s1 = c2.parse_word("s1").unwrap();
        let inv = c2.inversion_set(&rs, s1);
        assert_eq!(inv.len(), 1);
        assert_eq!(rs.positive_roots()[inv[0]].root, vec![1, 0]);
        for t in ["B3", "G2", "A1xA2"] {
            let (rs, g) = setup(t);
            for w in 0..g.order() {
                assert_eq!(g.inversion_set(&rs, w).len(), g.length(w));
            }
        }
    }

    #[test]
    fn length_complement_and_poincare_symmetry() {
        for t in ["A2", "C2", "G2", "A3", "B3", "C3", "A1xA2"] {
            let (rs, g) = setup(t);
            let n = rs.num_positive_roots();
            for w in 0..g.order() {
                let w0w = g.multiply(g.longest(), w);
                assert_eq!(g.length(w0w), n - g.length(w), "{t}");
            }
            let counts = g.length_counts();
            let mut rev = counts.clone();
            rev.reverse();
            assert_eq!(counts, rev, "{t}");
        }
    }

    #[test]
    fn left_and_right_tables_agree_with_words() {
        let (_, g) = setup("B3");
        for w in 0..g.order() {
            for i in 0..3 {
                let mut word = vec![i];
                word.extend(&g.element(w).word);
                assert_eq!(g.left_mul(i, w), g.from_word(&word).unwrap());
            }
            assert_eq!(g.multiply(w, g.inverse(w)), g.identity());
        }
    }

    #[test]
    fn word_strings_round_trip() {
        let (_, g) = setup("C2");
        assert_eq!(g.word_string(g.identity()), "e");
        for w in 0..g.order() {
            assert_eq!(g.parse_word(&g.word_string(w)).unwrap(), w);
        }
        assert!(g.parse_word("s3").is_err());
        assert!(g.parse_word("s1.t2").is_err());
    }
}
