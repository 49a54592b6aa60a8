use alloc::collections::btree_set::{self, BTreeSet};

use super::Triple;

/// A finite set of triples. Insertion of a present triple is a no-op; a
/// singleton set is a valid graph. Iteration follows canonical triple order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    triples: BTreeSet<Triple>,
}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    pub fn insert(&mut self, triple: Triple) -> bool {
        self.triples.insert(triple)
    }

    pub fn remove(&mut self, triple: &Triple) -> bool {
        self.triples.remove(triple)
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.contains(triple)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn iter(&self) -> btree_set::Iter<'_, Triple> {
        self.triples.iter()
    }

    /// Set union: commutative and idempotent.
    pub fn merge(&self, other: &Graph) -> Graph {
        let mut out = self.clone();
        out.triples.extend(other.triples.iter().cloned());
        out
    }

    /// Changes that turn `self` into `target`: `(added, removed)` with
    /// `added = target \ self` and `removed = self \ target`.
    pub fn diff(&self, target: &Graph) -> (Graph, Graph) {
        let added = target
            .triples
            .difference(&self.triples)
            .cloned()
            .collect();
        let removed = self
            .triples
            .difference(&target.triples)
            .cloned()
            .collect();
        (Graph { triples: added }, Graph { triples: removed })
    }
}

impl FromIterator<Triple> for Graph {
    fn from_iter<I: IntoIterator<Item = Triple>>(iter: I) -> Graph {
        Graph {
            triples: iter.into_iter().collect(),
        }
    }
}

impl IntoIterator for Graph {
    type Item = Triple;
    type IntoIter = btree_set::IntoIter<Triple>;

    fn into_iter(self) -> Self::IntoIter {
        self.triples.into_iter()
    }
}

impl<'a> IntoIterator for &'a Graph {
    type Item = &'a Triple;
    type IntoIter = btree_set::Iter<'a, Triple>;

    fn into_iter(self) -> Self::IntoIter {
        self.triples.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::Term;

    fn t(n: u32) -> Triple {
        Triple::new(
            Term::uri(alloc::format!("http://example.org/s{n}")).unwrap(),
            Term::uri("http://example.org/p").unwrap(),
            Term::literal(alloc::format!("o{n}")),
        )
        .unwrap()
    }

    #[test]
    fn set_semantics() {
        let mut g = Graph::new();
        assert!(g.insert(t(1)));
        assert!(!g.insert(t(1)));
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn merge_identity_and_idempotence() {
        let g: Graph = [t(1), t(2)].into_iter().collect();
        assert_eq!(g.merge(&Graph::new()), g);
        assert_eq!(g.merge(&g), g);
        let h: Graph = [t(3)].into_iter().collect();
        assert_eq!(g.merge(&h).len(), 3);
        assert_eq!(g.merge(&h), h.merge(&g));
    }

    #[test]
    fn diff_then_reapply_reconstructs_target() {
        let a: Graph = [t(1), t(2)].into_iter().collect();
        let b: Graph = [t(2), t(3)].into_iter().collect();
        let (added, removed) = a.diff(&b);
        assert_eq!(added, [t(3)].into_iter().collect());
        assert_eq!(removed, [t(1)].into_iter().collect());
        let mut rebuilt = a.clone();
        for x in &removed {
            rebuilt.remove(x);
        }
        let rebuilt = rebuilt.merge(&added);
        assert_eq!(rebuilt, b);
    }

    #[test]
    fn diff_identity() {
        let g: Graph = [t(1)].into_iter().collect();
        let (added, removed) = g.diff(&g);
        assert!(added.is_empty() && removed.is_empty());
        let (added, removed) = Graph::new().diff(&g);
        assert_eq!(added, g);
        assert!(removed.is_empty());
    }
}
