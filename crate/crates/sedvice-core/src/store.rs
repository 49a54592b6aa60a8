//! The information store and its atomic transactions.
//!
//! A transaction is an ordered batch of insert/retract graph operations. It
//! is reduced to per-triple net effects before it touches the store:
//! duplicate inserts collapse, duplicate retracts collapse, and an insert
//! followed by a retract of the same triple cancels out entirely. A retract
//! followed by an insert nets to an insert, matching one-op-at-a-time
//! application. The whole normalized batch then commits atomically, bumping
//! the store version by exactly one.
//!
//! Blank nodes are transaction-local: on apply they are skolemized to fresh
//! `urn:skolem:<tag>:<n>` URIs (one per distinct label per transaction), so
//! the store itself never holds a blank term.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::rdf::{Graph, Term, Triple};

/// Direction of a transaction operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Insert,
    Retract,
}

/// One graph-level operation inside a transaction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TxOp {
    pub kind: OpKind,
    pub payload: Graph,
}

/// An ordered sequence of insert/retract operations, applied atomically.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Transaction {
    pub id: u64,
    ops: Vec<TxOp>,
}

impl Transaction {
    pub fn new(id: u64) -> Transaction {
        Transaction { id, ops: Vec::new() }
    }

    /// Append an insert op. Empty payloads are dropped.
    pub fn insert(&mut self, payload: Graph) -> &mut Transaction {
        if !payload.is_empty() {
            self.ops.push(TxOp {
                kind: OpKind::Insert,
                payload,
            });
        }
        self
    }

    /// Append a retract op. Empty payloads are dropped.
    pub fn retract(&mut self, payload: Graph) -> &mut Transaction {
        if !payload.is_empty() {
            self.ops.push(TxOp {
                kind: OpKind::Retract,
                payload,
            });
        }
        self
    }

    /// Append all ops of `other`, keeping order.
    pub fn extend(&mut self, other: Transaction) -> &mut Transaction {
        self.ops.extend(other.ops);
        self
    }

    pub fn ops(&self) -> &[TxOp] {
        &self.ops
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// True if any payload triple contains a blank node.
    pub fn has_blanks(&self) -> bool {
        self.ops
            .iter()
            .any(|op| op.payload.iter().any(Triple::has_blank))
    }
}

/// Reduce a transaction to its per-triple net effects.
///
/// Graph-level ops are decomposed to triples first. Per triple, the last
/// operation in sequence order wins, except that an insert followed by a
/// later retract (with no insert after it) cancels to no net operation.
pub fn normalize(tx: &Transaction) -> BTreeMap<Triple, OpKind> {
    struct Trace {
        last: OpKind,
        inserted_before_last_retract: bool,
    }
    let mut traces: BTreeMap<Triple, Trace> = BTreeMap::new();
    for op in &tx.ops {
        for triple in &op.payload {
            match traces.get_mut(triple) {
                None => {
                    traces.insert(
                        triple.clone(),
                        Trace {
                            last: op.kind,
                            inserted_before_last_retract: false,
                        },
                    );
                }
                Some(trace) => {
                    if op.kind == OpKind::Retract && trace.last == OpKind::Insert {
                        trace.inserted_before_last_retract = true;
                    }
                    trace.last = op.kind;
                }
            }
        }
    }
    traces
        .into_iter()
        .filter_map(|(triple, trace)| match trace.last {
            OpKind::Insert => Some((triple, OpKind::Insert)),
            OpKind::Retract if trace.inserted_before_last_retract => None,
            OpKind::Retract => Some((triple, OpKind::Retract)),
        })
        .collect()
}

/// The changes one committed transaction actually made.
///
/// Inserting a present triple or retracting an absent one contributes
/// nothing here, so `added` is disjoint from the pre-state and `removed` is
/// contained in it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Delta {
    pub added: Graph,
    pub removed: Graph,
    pub version_after: u64,
}

impl Delta {
    pub fn is_empty(&self) -> bool {
        self.added.is_empty() && self.removed.is_empty()
    }
}

/// The information store: a graph plus a version that increases by exactly
/// one per committed change batch.
#[derive(Debug, Clone)]
pub struct Store {
    content: Graph,
    version: u64,
    skolem_tag: String,
    skolem_seq: u64,
}

impl Store {
    /// `skolem_tag` names this store in minted skolem URIs; spaces pass
    /// their space name.
    pub fn new(skolem_tag: impl Into<String>) -> Store {
        Store {
            content: Graph::new(),
            version: 0,
            skolem_tag: skolem_tag.into(),
            skolem_seq: 0,
        }
    }

    pub fn version(&self) -> u64 {
        self.version
    }

    /// Immutable copy of the content at the moment of call; later
    /// transactions do not affect it.
    pub fn snapshot(&self) -> Graph {
        self.content.clone()
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.content.contains(triple)
    }

    pub fn len(&self) -> usize {
        self.content.len()
    }

    pub fn is_empty(&self) -> bool {
        self.content.is_empty()
    }

    /// Replace transaction-local blank nodes with fresh store-unique URIs.
    /// The same label maps to the same URI within one transaction; distinct
    /// applications never collide.
    pub fn skolemize(&mut self, tx: &Transaction) -> Transaction {
        if !tx.has_blanks() {
            return tx.clone();
        }
        let mut minted: BTreeMap<String, Term> = BTreeMap::new();
        let mut out = Transaction::new(tx.id);
        for op in &tx.ops {
            let payload: Graph = op
                .payload
                .iter()
                .map(|triple| {
                    triple.map_terms(|term| match term {
                        Term::Blank(label) => minted
                            .entry(label.clone())
                            .or_insert_with(|| {
                                let uri =
                                    format!("urn:skolem:{}:{}", self.skolem_tag, self.skolem_seq);
                                self.skolem_seq += 1;
                                Term::Uri(uri)
                            })
                            .clone(),
                        other => other.clone(),
                    })
                })
                .collect();
            match op.kind {
                OpKind::Insert => out.insert(payload),
                OpKind::Retract => out.retract(payload),
            };
        }
        out
    }

    /// Skolemize, normalize, and commit a transaction atomically.
    ///
    /// The returned delta records only actual changes; the version is
    /// incremented by one even when the net effect is empty.
    pub fn apply(&mut self, tx: &Transaction) -> Delta {
        let tx = self.skolemize(tx);
        let net = normalize(&tx);
        let mut added = Graph::new();
        let mut removed = Graph::new();
        for (triple, kind) in net {
            match kind {
                OpKind::Insert => {
                    if self.content.insert(triple.clone()) {
                        added.insert(triple);
                    }
                }
                OpKind::Retract => {
                    if self.content.remove(&triple) {
                        removed.insert(triple);
                    }
                }
            }
        }
        self.version += 1;
        Delta {
            added,
            removed,
            version_after: self.version,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::Term;

    fn t(n: u32) -> Triple {
        Triple::new(
            Term::uri(format!("http://example.org/s{n}")).unwrap(),
            Term::uri("http://example.org/p").unwrap(),
            Term::uri(format!("http://example.org/o{n}")).unwrap(),
        )
        .unwrap()
    }

    fn g(triples: &[Triple]) -> Graph {
        triples.iter().cloned().collect()
    }

    fn tx(ops: &[(OpKind, Triple)]) -> Transaction {
        let mut tx = Transaction::new(0);
        for (kind, triple) in ops {
            match kind {
                OpKind::Insert => tx.insert(g(&[triple.clone()])),
                OpKind::Retract => tx.retract(g(&[triple.clone()])),
            };
        }
        tx
    }

    #[test]
    fn duplicate_insert_collapses() {
        let net = normalize(&tx(&[(OpKind::Insert, t(1)), (OpKind::Insert, t(1))]));
        assert_eq!(net.len(), 1);
        assert_eq!(net[&t(1)], OpKind::Insert);
    }

    #[test]
    fn duplicate_retract_collapses() {
        let net = normalize(&tx(&[(OpKind::Retract, t(1)), (OpKind::Retract, t(1))]));
        assert_eq!(net.len(), 1);
        assert_eq!(net[&t(1)], OpKind::Retract);
    }

    #[test]
    fn insert_then_retract_cancels() {
        let net = normalize(&tx(&[(OpKind::Insert, t(1)), (OpKind::Retract, t(1))]));
        assert!(net.is_empty());
    }

    #[test]
    fn retract_then_insert_nets_to_insert() {
        let net = normalize(&tx(&[(OpKind::Retract, t(1)), (OpKind::Insert, t(1))]));
        assert_eq!(net[&t(1)], OpKind::Insert);
    }

    #[test]
    fn graph_level_ops_decompose_to_triples() {
        let mut tx = Transaction::new(0);
        tx.insert(g(&[t(1), t(2)]));
        tx.retract(g(&[t(2), t(3)]));
        let net = normalize(&tx);
        assert_eq!(net.get(&t(1)), Some(&OpKind::Insert));
        assert_eq!(net.get(&t(2)), None);
        assert_eq!(net.get(&t(3)), Some(&OpKind::Retract));
    }

    #[test]
    fn apply_satisfies_membership_postconditions() {
        let mut store = Store::new("s");
        let delta = store.apply(&tx(&[(OpKind::Insert, t(1))]));
        assert!(store.contains(&t(1)));
        assert_eq!(delta.added, g(&[t(1)]));
        assert_eq!(delta.version_after, 1);

        let delta = store.apply(&tx(&[(OpKind::Retract, t(1))]));
        assert!(!store.contains(&t(1)));
        assert_eq!(delta.removed, g(&[t(1)]));
        assert_eq!(store.version(), 2);
    }

    #[test]
    fn retract_of_absent_triple_is_silent() {
        let mut store = Store::new("s");
        let delta = store.apply(&tx(&[(OpKind::Retract, t(9))]));
        assert!(delta.is_empty());
        assert!(store.is_empty());
        assert_eq!(store.version(), 1, "version still increments");
    }

    #[test]
    fn delta_records_only_actual_changes() {
        let mut store = Store::new("s");
        store.apply(&tx(&[(OpKind::Insert, t(1))]));
        let delta = store.apply(&tx(&[(OpKind::Insert, t(1)), (OpKind::Insert, t(2))]));
        assert_eq!(delta.added, g(&[t(2)]));
        assert!(delta.removed.is_empty());
    }

    #[test]
    fn snapshot_is_isolated() {
        let mut store = Store::new("s");
        let snap0 = store.snapshot();
        store.apply(&tx(&[(OpKind::Insert, t(1))]));
        assert!(snap0.is_empty());
        let a = store.snapshot();
        let b = store.snapshot();
        assert_eq!(a, b);
    }

    #[test]
    fn skolemization_mints_fresh_consistent_uris() {
        let mut store = Store::new("http://spaces.example/home");
        let blank = Triple::new(
            Term::blank("m"),
            Term::uri("http://example.org/p").unwrap(),
            Term::blank("m"),
        )
        .unwrap();
        let other = Triple::new(
            Term::blank("m"),
            Term::uri("http://example.org/q").unwrap(),
            Term::blank("n"),
        )
        .unwrap();
        let mut tx1 = Transaction::new(0);
        tx1.insert(g(&[blank.clone(), other]));
        let d1 = store.apply(&tx1);
        assert_eq!(d1.added.len(), 2);
        for triple in store.snapshot().iter() {
            assert!(!triple.has_blank(), "store must never hold blanks");
        }
        // The same label skolemizes identically within the transaction.
        let same_label = d1
            .added
            .iter()
            .find(|t| t.predicate().value() == "http://example.org/p")
            .unwrap();
        assert_eq!(same_label.subject(), same_label.object());
        assert!(same_label
            .subject()
            .value()
            .starts_with("urn:skolem:http://spaces.example/home:"));

        // Re-applying the same payload mints new nodes: no collision.
        let mut tx2 = Transaction::new(1);
        tx2.insert(g(&[blank]));
        let d2 = store.apply(&tx2);
        assert_eq!(d2.added.len(), 1, "fresh skolem URIs never collide");
        assert_eq!(store.len(), 3);
    }

    /// One-op-at-a-time reference: inserts add, retracts remove.
    fn sequential(initial: &Graph, tx: &Transaction) -> Graph {
        let mut g = initial.clone();
        for op in tx.ops() {
            for triple in &op.payload {
                match op.kind {
                    OpKind::Insert => {
                        g.insert(triple.clone());
                    }
                    OpKind::Retract => {
                        g.remove(triple);
                    }
                }
            }
        }
        g
    }

    /// Normalized-atomic application agrees with one-op-at-a-time
    /// application except where the insert-then-retract rewrite cancels a
    /// triple: there the batch deliberately leaves prior state alone.
    #[test]
    fn normalization_matches_sequential_application_modulo_cancellation() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        let universe = [t(0), t(1), t(2), t(3)];
        for _ in 0..2000 {
            let mut tx = Transaction::new(0);
            for _ in 0..rng.gen_range(0..=8) {
                let triple = universe[rng.gen_range(0..universe.len())].clone();
                if rng.gen_bool(0.5) {
                    tx.insert(g(&[triple]));
                } else {
                    tx.retract(g(&[triple]));
                }
            }
            let initial: Graph = universe
                .iter()
                .filter(|_| rng.gen_bool(0.5))
                .cloned()
                .collect();
            let net = normalize(&tx);
            let mut store = Store::new("s");
            store.apply(&{
                let mut seed = Transaction::new(0);
                seed.insert(initial.clone());
                seed
            });
            store.apply(&tx);
            let atomic = store.snapshot();
            let seq = sequential(&initial, &tx);
            for triple in &universe {
                let mentioned = tx
                    .ops()
                    .iter()
                    .any(|op| op.payload.contains(triple));
                if mentioned && !net.contains_key(triple) {
                    // Cancelled: the batch preserves whatever was there.
                    assert_eq!(atomic.contains(triple), initial.contains(triple));
                } else {
                    assert_eq!(atomic.contains(triple), seq.contains(triple));
                }
            }
        }
    }

    /// From a store disjoint from the transaction's triples (in particular
    /// the empty store) the two application orders agree exactly.
    #[test]
    fn normalization_equals_sequential_from_empty_store() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(11);
        let universe = [t(0), t(1), t(2)];
        for _ in 0..2000 {
            let mut tx = Transaction::new(0);
            for _ in 0..rng.gen_range(0..=8) {
                let triple = universe[rng.gen_range(0..universe.len())].clone();
                if rng.gen_bool(0.5) {
                    tx.insert(g(&[triple]));
                } else {
                    tx.retract(g(&[triple]));
                }
            }
            let mut store = Store::new("s");
            store.apply(&tx);
            assert_eq!(store.snapshot(), sequential(&Graph::new(), &tx));
        }
    }

    #[test]
    fn empty_payloads_are_dropped() {
        let mut tx = Transaction::new(0);
        tx.insert(Graph::new()).retract(Graph::new());
        assert!(tx.is_empty());
    }
}
