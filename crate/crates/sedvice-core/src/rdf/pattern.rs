use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;

use super::{Graph, Term, Triple};

/// One position of a triple pattern: a concrete term, a named variable, or
/// an anonymous wildcard (matches anything, binds nothing).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum PatternTerm {
    Concrete(Term),
    Variable(String),
    Any,
}

impl PatternTerm {
    pub fn var(name: impl Into<String>) -> PatternTerm {
        PatternTerm::Variable(name.into())
    }
}

impl From<Term> for PatternTerm {
    fn from(t: Term) -> PatternTerm {
        PatternTerm::Concrete(t)
    }
}

/// A pattern over triples. A fully concrete pattern is a membership test.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TriplePattern {
    pub subject: PatternTerm,
    pub predicate: PatternTerm,
    pub object: PatternTerm,
}

impl TriplePattern {
    pub fn new(subject: PatternTerm, predicate: PatternTerm, object: PatternTerm) -> TriplePattern {
        TriplePattern {
            subject,
            predicate,
            object,
        }
    }
}

/// One solution: variable name → matched term.
pub type Bindings = BTreeMap<String, Term>;

fn unify(slot: &PatternTerm, term: &Term, bindings: &mut Bindings) -> bool {
    match slot {
        PatternTerm::Concrete(t) => t == term,
        PatternTerm::Any => true,
        PatternTerm::Variable(name) => match bindings.get(name) {
            Some(bound) => bound == term,
            None => {
                bindings.insert(name.clone(), term.clone());
                true
            }
        },
    }
}

/// All bindings β such that β(pattern) is a triple of `graph`.
///
/// A repeated variable must match the same term in every position. A fully
/// concrete pattern yields one empty binding iff the triple is present.
pub fn match_pattern(graph: &Graph, pattern: &TriplePattern) -> BTreeSet<Bindings> {
    let mut out = BTreeSet::new();
    for triple in graph {
        let mut bindings = Bindings::new();
        if unify(&pattern.subject, triple.subject(), &mut bindings)
            && unify(&pattern.predicate, triple.predicate(), &mut bindings)
            && unify(&pattern.object, triple.object(), &mut bindings)
        {
            out.insert(bindings);
        }
    }
    out
}
