//! The two query formats of a space.
//!
//! Triple queries are pattern matches over the raw stored triples — no
//! inference. Path queries are expressions of a lisp-like path language
//! (`start | (:op …)`) evaluated over the deductive closure of the store,
//! which adds subclass-hierarchy and `owl:sameAs` consequences.

mod closure;
mod eval;
mod path;

pub use closure::{compute_closure, ClosureIndex};
pub use eval::{eval_path_query, eval_triple_query};
pub use path::{parse_path_query, PathExpr, PathParseError, PathQuery};

use alloc::collections::BTreeSet;

use crate::rdf::{Bindings, Term};

/// Result of a query: bindings for triple queries, terms for path queries.
/// Both present in canonical order and deduplicate as sets, which gives
/// subscriptions well-defined change detection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryResult {
    Bindings(BTreeSet<Bindings>),
    Terms(BTreeSet<Term>),
}

impl QueryResult {
    pub fn empty_bindings() -> QueryResult {
        QueryResult::Bindings(BTreeSet::new())
    }

    pub fn empty_terms() -> QueryResult {
        QueryResult::Terms(BTreeSet::new())
    }

    /// An empty result of the same kind as `self`.
    pub fn empty_like(&self) -> QueryResult {
        match self {
            QueryResult::Bindings(_) => QueryResult::empty_bindings(),
            QueryResult::Terms(_) => QueryResult::empty_terms(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            QueryResult::Bindings(b) => b.is_empty(),
            QueryResult::Terms(t) => t.is_empty(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            QueryResult::Bindings(b) => b.len(),
            QueryResult::Terms(t) => t.len(),
        }
    }

    /// In-place set union with another result of the same kind.
    pub fn union_with(&mut self, other: &QueryResult) {
        match (self, other) {
            (QueryResult::Bindings(a), QueryResult::Bindings(b)) => {
                a.extend(b.iter().cloned());
            }
            (QueryResult::Terms(a), QueryResult::Terms(b)) => {
                a.extend(b.iter().cloned());
            }
            _ => {}
        }
    }

    /// `(added, removed)` turning `self` into `newer`.
    pub fn diff(&self, newer: &QueryResult) -> (QueryResult, QueryResult) {
        match (self, newer) {
            (QueryResult::Bindings(old), QueryResult::Bindings(new)) => (
                QueryResult::Bindings(new.difference(old).cloned().collect()),
                QueryResult::Bindings(old.difference(new).cloned().collect()),
            ),
            (QueryResult::Terms(old), QueryResult::Terms(new)) => (
                QueryResult::Terms(new.difference(old).cloned().collect()),
                QueryResult::Terms(old.difference(new).cloned().collect()),
            ),
            // Kind mismatch cannot arise for one subscription; treat the old
            // side as empty so the delta reproduces `newer`.
            (old, new) => (new.clone(), old.empty_like()),
        }
    }

    /// Apply a delta produced by [`QueryResult::diff`].
    pub fn apply_diff(&mut self, added: &QueryResult, removed: &QueryResult) {
        match self {
            QueryResult::Bindings(set) => {
                if let QueryResult::Bindings(r) = removed {
                    for x in r {
                        set.remove(x);
                    }
                }
                if let QueryResult::Bindings(a) = added {
                    set.extend(a.iter().cloned());
                }
            }
            QueryResult::Terms(set) => {
                if let QueryResult::Terms(r) = removed {
                    for x in r {
                        set.remove(x);
                    }
                }
                if let QueryResult::Terms(a) = added {
                    set.extend(a.iter().cloned());
                }
            }
        }
    }
}
