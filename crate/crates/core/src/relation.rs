//! Finite endorelations over an indexed carrier.
//!
//! A [`Relation`] is stored as a dense `n × n` boolean matrix over outcome
//! indices. Games keep their outcomes sorted, so row-major iteration yields
//! pairs in the lexicographic order of their identifiers.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            n,
            bits: vec![false; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Relation::empty(n);
        for a in 0..n {
            r.insert(a, a);
        }
        r
    }

    pub fn full(n: usize) -> Self {
        Relation {
            n,
            bits: vec![true; n * n],
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Relation::empty(n);
        for (a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    /// Size of the carrier this relation lives on.
    pub fn carrier_len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }

    #[inline]
    pub fn insert(&mut self, a: usize, b: usize) {
        self.bits[a * self.n + b] = true;
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(k, _)| (k / n, k % n))
    }

    /// Pairs rendered with the carrier's labels.
    pub fn labeled_pairs(&self, carrier: &[String]) -> Vec<(String, String)> {
        self.pairs()
            .map(|(a, b)| (carrier[a].clone(), carrier[b].clone()))
            .collect()
    }

    pub fn union_with(&mut self, other: &Relation) {
        debug_assert_eq!(self.n, other.n);
        for (x, y) in self.bits.iter_mut().zip(&other.bits) {
            *x |= *y;
        }
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| !*a || *b)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(a, b)| self.contains(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        self.first_intransitive_triple().is_none()
    }

    /// First `(a, b, c)` with `a R b`, `b R c` but not `a R c`.
    pub fn first_intransitive_triple(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.n {
            for b in 0..self.n {
                if !self.contains(a, b) {
                    continue;
                }
                for c in 0..self.n {
                    if self.contains(b, c) && !self.contains(a, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Least reflexive and symmetric relation containing `self`.
    pub fn reflexive_symmetric_closure(&self) -> Relation {
        let mut r = self.clone();
        for a in 0..self.n {
            r.insert(a, a);
        }
        for (a, b) in self.pairs() {
            r.insert(b, a);
        }
        r
    }

    /// Least preorder containing `self` (Warshall saturation).
    pub fn reflexive_transitive_closure(&self) -> Relation {
        let n = self.n;
        let mut r = self.clone();
        for a in 0..n {
            r.insert(a, a);
        }
        for k in 0..n {
            for i in 0..n {
                if !r.contains(i, k) {
                    continue;
                }
                for j in 0..n {
                    if r.contains(k, j) {
                        r.insert(i, j);
                    }
                }
            }
        }
        r
    }

    /// Restriction to the carrier elements listed in `keep`, re-indexed by
    /// position in `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Relation {
        let m = keep.len();
        let mut r = Relation::empty(m);
        for (x, &a) in keep.iter().enumerate() {
            for (y, &b) in keep.iter().enumerate() {
                if self.contains(a, b) {
                    r.insert(x, y);
                }
            }
        }
        r
    }

    /// Direct image `{(f a, f b) : a R b}` on a carrier of size `m`.
    pub fn image(&self, map: &[usize], m: usize) -> Relation {
        Relation::from_pairs(m, self.pairs().map(|(a, b)| (map[a], map[b])))
    }
}

fn resolve_pairs<A: AsRef<str>, B: AsRef<str>>(
    pairs: &[(A, B)],
    carrier: &[String],
) -> Result<Vec<(usize, usize)>> {
    let index: HashMap<&str, usize> = carrier
        .iter()
        .enumerate()
        .map(|(k, s)| (s.as_str(), k))
        .collect();
    let lookup = |s: &str| {
        index
            .get(s)
            .copied()
            .ok_or_else(|| Error::UnknownIdentifier {
                kind: "outcome",
                id: s.to_string(),
            })
    };
    pairs
        .iter()
        .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
        .collect()
}

/// Exact relation over `outcomes` holding `pairs`; no closure is applied.
pub fn relation_from_labels<A: AsRef<str>, B: AsRef<str>>(
    pairs: &[(A, B)],
    outcomes: &[String],
) -> Result<Relation> {
    Ok(Relation::from_pairs(
        outcomes.len(),
        resolve_pairs(pairs, outcomes)?,
    ))
}

/// Least reflexive-symmetric relation over `outcomes` containing `pairs`.
pub fn closure_access<A: AsRef<str>, B: AsRef<str>>(
    pairs: &[(A, B)],
    outcomes: &[String],
) -> Result<Relation> {
    Ok(relation_from_labels(pairs, outcomes)?.reflexive_symmetric_closure())
}

/// Least preorder over `outcomes` containing `pairs`.
pub fn closure_pref<A: AsRef<str>, B: AsRef<str>>(
    pairs: &[(A, B)],
    outcomes: &[String],
) -> Result<Relation> {
    Ok(relation_from_labels(pairs, outcomes)?.reflexive_transitive_closure())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn carrier(ids: &[&str]) -> Vec<String> {
        ids.iter().map(|s| s.to_string()).collect()
    }

    fn labels(r: &Relation, c: &[String]) -> Vec<(String, String)> {
        r.labeled_pairs(c)
    }

    fn p(a: &str, b: &str) -> (String, String) {
        (a.to_string(), b.to_string())
    }

    #[test]
    fn access_closure_of_empty_is_loops() {
        let c = carrier(&["a", "b"]);
        let r = closure_access::<&str, &str>(&[], &c).unwrap();
        assert_eq!(labels(&r, &c), vec![p("a", "a"), p("b", "b")]);
    }

    #[test]
    fn access_closure_adds_mirror() {
        let c = carrier(&["a", "b"]);
        let r = closure_access(&[("a", "b")], &c).unwrap();
        assert_eq!(
            labels(&r, &c),
            vec![p("a", "a"), p("a", "b"), p("b", "a"), p("b", "b")]
        );
    }

    #[test]
    fn pref_closure_is_transitive() {
        let c = carrier(&["a", "b", "c"]);
        let r = closure_pref(&[("a", "b"), ("b", "c")], &c).unwrap();
        assert_eq!(
            labels(&r, &c),
            vec![
                p("a", "a"),
                p("a", "b"),
                p("a", "c"),
                p("b", "b"),
                p("b", "c"),
                p("c", "c")
            ]
        );
    }

    #[test]
    fn pref_closure_singleton() {
        let c = carrier(&["a"]);
        let r = closure_pref::<&str, &str>(&[], &c).unwrap();
        assert_eq!(labels(&r, &c), vec![p("a", "a")]);
    }

    #[test]
    fn unknown_identifier_is_named() {
        let c = carrier(&["a"]);
        let err = closure_access(&[("a", "zz")], &c).unwrap_err();
        assert!(err.to_string().contains("zz"), "{err}");
    }

    #[test]
    fn restrict_and_image() {
        let r = Relation::from_pairs(3, [(0, 1), (1, 2), (2, 2)]);
        let sub = r.restrict(&[1, 2]);
        assert_eq!(sub.pairs().collect::<Vec<_>>(), vec![(0, 1), (1, 1)]);
        let img = r.image(&[0, 0, 1], 2);
        assert_eq!(img.pairs().collect::<Vec<_>>(), vec![(0, 0), (0, 1), (1, 1)]);
    }

    fn arb_relation(max: usize) -> impl Strategy<Value = Relation> {
        (0..=max).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| Relation { n, bits })
        })
    }

    proptest! {
        #[test]
        fn closures_are_idempotent(r in arb_relation(6)) {
            let a = r.reflexive_symmetric_closure();
            prop_assert_eq!(a.reflexive_symmetric_closure(), a.clone());
            prop_assert!(a.is_reflexive() && a.is_symmetric());
            prop_assert!(r.is_subset(&a));

            let t = r.reflexive_transitive_closure();
            prop_assert_eq!(t.reflexive_transitive_closure(), t.clone());
            prop_assert!(t.is_reflexive() && t.is_transitive());
            prop_assert!(r.is_subset(&t));
        }

        #[test]
        fn transitive_closure_is_least(r in arb_relation(5)) {
            // any preorder containing r contains its closure; test against
            // the full relation and against the closure itself
            let t = r.reflexive_transitive_closure();
            for (a, b) in t.pairs() {
                // a reaches b through a chain of r-steps or a == b
                let mut seen = vec![false; r.carrier_len()];
                let mut stack = vec![a];
                while let Some(x) = stack.pop() {
                    if seen[x] { continue; }
                    seen[x] = true;
                    for y in 0..r.carrier_len() {
                        if r.contains(x, y) { stack.push(y); }
                    }
                }
                prop_assert!(seen[b]);
            }
        }
    }
}
