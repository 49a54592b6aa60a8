use alloc::string::String;
use core::fmt;

/// A node of an RDF graph: a URI reference, a literal, or a blank node.
///
/// Literals carry an optional datatype URI and are compared by lexical form.
/// Blank node labels are only meaningful within one transaction payload; the
/// store skolemizes them to fresh URIs on commit.
///
/// The derived ordering is lexicographic on (kind, value, datatype), which is
/// the canonical term order used everywhere results are presented.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Uri(String),
    Literal {
        value: String,
        datatype: Option<String>,
    },
    Blank(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermError {
    /// URI values must be non-empty and contain no whitespace.
    InvalidUri(String),
    /// Triple subjects may not be literals.
    LiteralSubject,
    /// Triple predicates must be URIs.
    NonUriPredicate,
}

impl fmt::Display for TermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermError::InvalidUri(u) => write!(f, "invalid URI {u:?}: must be non-empty without whitespace"),
            TermError::LiteralSubject => write!(f, "triple subject may not be a literal"),
            TermError::NonUriPredicate => write!(f, "triple predicate must be a URI"),
        }
    }
}

impl Term {
    /// Build a URI term, checking the URI invariant.
    pub fn uri(value: impl Into<String>) -> Result<Term, TermError> {
        let value = value.into();
        if value.is_empty() || value.chars().any(char::is_whitespace) {
            return Err(TermError::InvalidUri(value));
        }
        Ok(Term::Uri(value))
    }

    /// Build a plain literal.
    pub fn literal(value: impl Into<String>) -> Term {
        Term::Literal {
            value: value.into(),
            datatype: None,
        }
    }

    /// Build a typed literal.
    pub fn typed_literal(value: impl Into<String>, datatype: impl Into<String>) -> Term {
        Term::Literal {
            value: value.into(),
            datatype: Some(datatype.into()),
        }
    }

    /// Build a blank node with a transaction-local label.
    pub fn blank(label: impl Into<String>) -> Term {
        Term::Blank(label.into())
    }

    pub fn is_uri(&self) -> bool {
        matches!(self, Term::Uri(_))
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, Term::Literal { .. })
    }

    pub fn is_blank(&self) -> bool {
        matches!(self, Term::Blank(_))
    }

    /// The lexical value: URI text, literal form, or blank label.
    pub fn value(&self) -> &str {
        match self {
            Term::Uri(v) => v,
            Term::Literal { value, .. } => value,
            Term::Blank(v) => v,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_term(self))
    }
}

/// One RDF statement. Subjects are URIs or blanks, predicates are URIs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    subject: Term,
    predicate: Term,
    object: Term,
}

impl Triple {
    pub fn new(subject: Term, predicate: Term, object: Term) -> Result<Triple, TermError> {
        if subject.is_literal() {
            return Err(TermError::LiteralSubject);
        }
        if !predicate.is_uri() {
            return Err(TermError::NonUriPredicate);
        }
        Ok(Triple {
            subject,
            predicate,
            object,
        })
    }

    pub fn subject(&self) -> &Term {
        &self.subject
    }

    pub fn predicate(&self) -> &Term {
        &self.predicate
    }

    pub fn object(&self) -> &Term {
        &self.object
    }

    /// True if any position is a blank node.
    pub fn has_blank(&self) -> bool {
        self.subject.is_blank() || self.predicate.is_blank() || self.object.is_blank()
    }

    /// Rebuild the triple with each position mapped through `f`.
    ///
    /// The mapping must preserve the positional invariants (it is used for
    /// skolemization and sameAs substitution, both of which do).
    pub fn map_terms(&self, mut f: impl FnMut(&Term) -> Term) -> Triple {
        Triple {
            subject: f(&self.subject),
            predicate: f(&self.predicate),
            object: f(&self.object),
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_triple(self))
    }
}
