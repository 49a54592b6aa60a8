//! RDF terms, triples, graphs, namespaces, and triple-pattern matching.
//!
//! Everything a space stores is a [`Graph`]: a set of [`Triple`]s over
//! [`Term`]s. All types here are immutable values ordered canonically
//! (lexicographically on kind, value, datatype), which makes serialized
//! output and query-result presentation reproducible.

mod graph;
mod namespace;
mod pattern;
mod term;
mod text;

pub use graph::Graph;
pub use namespace::{NamespaceError, NamespaceTable};
pub use pattern::{match_pattern, Bindings, PatternTerm, TriplePattern};
pub use term::{Term, TermError, Triple};
pub use text::{format_graph, format_triple, parse_triples, TextError};

/// Well-known vocabulary URIs used by the deductive closure.
pub mod ns {
    pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
    pub const RDFS_SUBCLASS_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
    pub const OWL_SAME_AS: &str = "http://www.w3.org/2002/07/owl#sameAs";

    pub const RDF_BASE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub const RDFS_BASE: &str = "http://www.w3.org/2000/01/rdf-schema#";
    pub const OWL_BASE: &str = "http://www.w3.org/2002/07/owl#";
    pub const XSD_BASE: &str = "http://www.w3.org/2001/XMLSchema#";
}
