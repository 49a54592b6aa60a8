use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use super::ns;

/// Prefix → URI-base mapping for compact names in queries and fixtures.
///
/// `p#local` and `p:local` both expand to `base(p) + local`; a bare name
/// expands against the default base when one is set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NamespaceTable {
    prefixes: BTreeMap<String, String>,
    default_base: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamespaceError {
    UnknownPrefix(String),
    NoDefaultNamespace(String),
}

impl fmt::Display for NamespaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamespaceError::UnknownPrefix(p) => write!(f, "unknown prefix {p:?}"),
            NamespaceError::NoDefaultNamespace(n) => {
                write!(f, "bare name {n:?} and no default namespace is bound")
            }
        }
    }
}

impl NamespaceTable {
    pub fn new() -> NamespaceTable {
        NamespaceTable::default()
    }

    /// A table with the rdf, rdfs, owl, and xsd prefixes bound.
    pub fn well_known() -> NamespaceTable {
        let mut t = NamespaceTable::new();
        t.bind("rdf", ns::RDF_BASE);
        t.bind("rdfs", ns::RDFS_BASE);
        t.bind("owl", ns::OWL_BASE);
        t.bind("xsd", ns::XSD_BASE);
        t
    }

    pub fn bind(&mut self, prefix: impl Into<String>, base: impl Into<String>) {
        self.prefixes.insert(prefix.into(), base.into());
    }

    pub fn set_default(&mut self, base: impl Into<String>) {
        self.default_base = Some(base.into());
    }

    pub fn base(&self, prefix: &str) -> Option<&str> {
        self.prefixes.get(prefix).map(String::as_str)
    }

    /// Expand a compact name to a full URI string.
    pub fn expand(&self, name: &str) -> Result<String, NamespaceError> {
        let sep = name
            .char_indices()
            .find(|&(_, c)| c == '#' || c == ':')
            .map(|(i, _)| i);
        match sep {
            Some(i) => {
                let (prefix, rest) = name.split_at(i);
                let local = &rest[1..];
                let base = self
                    .prefixes
                    .get(prefix)
                    .ok_or_else(|| NamespaceError::UnknownPrefix(prefix.to_string()))?;
                Ok(format!("{base}{local}"))
            }
            None => match &self.default_base {
                Some(base) => Ok(format!("{base}{name}")),
                None => Err(NamespaceError::NoDefaultNamespace(name.to_string())),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_hash_and_colon_forms() {
        let mut t = NamespaceTable::well_known();
        t.bind("chat", "http://sedspace.example/chat#");
        assert_eq!(
            t.expand("chat#Conversation").unwrap(),
            "http://sedspace.example/chat#Conversation"
        );
        assert_eq!(t.expand("rdf:type").unwrap(), ns::RDF_TYPE);
    }

    #[test]
    fn bare_names_use_default_base() {
        let mut t = NamespaceTable::new();
        assert!(matches!(
            t.expand("messages"),
            Err(NamespaceError::NoDefaultNamespace(_))
        ));
        t.set_default("http://sedspace.example/chat#");
        assert_eq!(
            t.expand("messages").unwrap(),
            "http://sedspace.example/chat#messages"
        );
    }

    #[test]
    fn unknown_prefix_is_an_error() {
        let t = NamespaceTable::new();
        assert!(matches!(
            t.expand("nope:thing"),
            Err(NamespaceError::UnknownPrefix(_))
        ));
    }
}
