//! Core data model and logic for Sedvice smart spaces.
//!
//! A space is a shared RDF graph that autonomous knowledge processors (KPs)
//! manipulate through atomic insert/retract transactions, synchronous queries,
//! and persistent subscriptions. This crate holds everything that does not
//! touch a socket or the filesystem:
//!
//! - [`rdf`]: terms, triples, graphs, triple patterns, and namespaces
//! - [`store`]: the information store and transaction normalization
//! - [`query`]: triple-pattern queries and the path query language, including
//!   the deductive closure (subclass hierarchies and `owl:sameAs`)
//! - [`space`]: broker-side state machine — sessions, subscriptions, and
//!   reasoner scheduling in priority classes
//! - [`routing`]: routing tables and the federated scatter-gather step
//! - [`wire`]: newline-delimited JSON message framing and schema
//!
//! The crate is `no_std` (with `alloc`) so the model can be embedded in
//! constrained runtimes; the `sedvice` crate supplies TCP listeners, the
//! client library, and the demo applications on top of it.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod query;
pub mod rdf;
pub mod routing;
pub mod space;
pub mod store;
pub mod wire;
