//! Parser for the lisp-like path query language.
//!
//! ```text
//! query := start '|' path
//! start := prefixed-name | '<' uri '>'
//! path  := arc | '(' OPNAME path+ ')'
//! arc   := '!'? ( prefixed-name | '<' uri '>' )
//! OPNAME ∈ { :seq, :inv, :or, :rep* }
//! ```
//!
//! Prefixed names expand through a [`NamespaceTable`]; a leading `!` on an
//! arc is a URI-resolution marker in the source language and is accepted but
//! carries no meaning here. `:inv` and `:rep*` take exactly one argument,
//! `:or` at least two, `:seq` at least one. Whitespace between tokens is
//! insignificant.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::rdf::{NamespaceTable, Term};

/// A path expression denoting a binary relation over terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathExpr {
    /// Follow one predicate arc forward.
    Arc(Term),
    /// Converse of the inner relation.
    Inv(Box<PathExpr>),
    /// Relational composition, left to right. Non-empty.
    Seq(Vec<PathExpr>),
    /// Union of alternatives. At least two.
    Or(Vec<PathExpr>),
    /// Reflexive-transitive closure of the inner relation.
    RepStar(Box<PathExpr>),
}

/// A parsed path query: a URI start node and a path from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathQuery {
    pub start: Term,
    pub path: PathExpr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for PathParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "path query error at byte {}: {}", self.position, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Uri(Term),
    Bang,
    Pipe,
    Open,
    Close,
    Op(String),
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '-' | '.' | '#' | ':')
}

struct Tokens {
    items: Vec<(usize, Token)>,
    end: usize,
    cursor: usize,
}

impl Tokens {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.items.get(self.cursor)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let item = self.items.get(self.cursor).cloned();
        if item.is_some() {
            self.cursor += 1;
        }
        item
    }

    fn err_here(&self, message: impl Into<String>) -> PathParseError {
        let position = self.peek().map(|(p, _)| *p).unwrap_or(self.end);
        PathParseError {
            position,
            message: message.into(),
        }
    }
}

fn tokenize(text: &str, ns: &NamespaceTable) -> Result<Tokens, PathParseError> {
    let mut items = Vec::new();
    let bytes = text.char_indices().collect::<Vec<_>>();
    let mut i = 0;
    while i < bytes.len() {
        let (at, c) = bytes[i];
        match c {
            c if c.is_whitespace() => {
                i += 1;
            }
            '|' => {
                items.push((at, Token::Pipe));
                i += 1;
            }
            '!' => {
                items.push((at, Token::Bang));
                i += 1;
            }
            '(' => {
                items.push((at, Token::Open));
                i += 1;
            }
            ')' => {
                items.push((at, Token::Close));
                i += 1;
            }
            '<' => {
                let rest = &text[at + 1..];
                let Some(end) = rest.find('>') else {
                    return Err(PathParseError {
                        position: at,
                        message: "unterminated <uri>".to_string(),
                    });
                };
                let uri = Term::uri(&rest[..end]).map_err(|e| PathParseError {
                    position: at,
                    message: format!("{e}"),
                })?;
                items.push((at, Token::Uri(uri)));
                // Advance past '<uri>'.
                let consumed = 1 + end + 1;
                while i < bytes.len() && bytes[i].0 < at + consumed {
                    i += 1;
                }
            }
            ':' => {
                let mut name = String::from(":");
                i += 1;
                while i < bytes.len() {
                    let (_, c) = bytes[i];
                    if c.is_alphanumeric() || c == '*' {
                        name.push(c);
                        i += 1;
                    } else {
                        break;
                    }
                }
                items.push((at, Token::Op(name)));
            }
            c if is_name_char(c) => {
                let mut name = String::new();
                while i < bytes.len() && is_name_char(bytes[i].1) {
                    name.push(bytes[i].1);
                    i += 1;
                }
                let expanded = ns.expand(&name).map_err(|e| PathParseError {
                    position: at,
                    message: format!("{e}"),
                })?;
                let uri = Term::uri(expanded).map_err(|e| PathParseError {
                    position: at,
                    message: format!("{e}"),
                })?;
                items.push((at, Token::Uri(uri)));
            }
            other => {
                return Err(PathParseError {
                    position: at,
                    message: format!("unexpected character {other:?}"),
                })
            }
        }
    }
    Ok(Tokens {
        items,
        end: text.len(),
        cursor: 0,
    })
}

fn parse_arc(tokens: &mut Tokens) -> Result<PathExpr, PathParseError> {
    if matches!(tokens.peek(), Some((_, Token::Bang))) {
        tokens.next();
    }
    match tokens.next() {
        Some((_, Token::Uri(term))) => Ok(PathExpr::Arc(term)),
        Some((position, tok)) => Err(PathParseError {
            position,
            message: format!("expected arc name, found {tok:?}"),
        }),
        None => Err(PathParseError {
            position: tokens.end,
            message: "expected arc name, found end of input".to_string(),
        }),
    }
}

fn parse_path(tokens: &mut Tokens) -> Result<PathExpr, PathParseError> {
    match tokens.peek() {
        Some((_, Token::Open)) => {
            let (open_at, _) = tokens.next().unwrap();
            let (op_at, op) = match tokens.next() {
                Some((p, Token::Op(name))) => (p, name),
                Some((p, tok)) => {
                    return Err(PathParseError {
                        position: p,
                        message: format!("expected operator after '(', found {tok:?}"),
                    })
                }
                None => {
                    return Err(PathParseError {
                        position: tokens.end,
                        message: "expected operator after '(', found end of input".to_string(),
                    })
                }
            };
            let mut args = Vec::new();
            loop {
                match tokens.peek() {
                    Some((_, Token::Close)) => {
                        tokens.next();
                        break;
                    }
                    Some(_) => args.push(parse_path(tokens)?),
                    None => {
                        return Err(PathParseError {
                            position: tokens.end,
                            message: format!("unbalanced parenthesis opened at byte {open_at}"),
                        })
                    }
                }
            }
            if args.is_empty() {
                return Err(PathParseError {
                    position: op_at,
                    message: format!("empty path: {op} needs at least one argument"),
                });
            }
            match op.as_str() {
                ":seq" => Ok(PathExpr::Seq(args)),
                ":inv" => {
                    if args.len() != 1 {
                        return Err(PathParseError {
                            position: op_at,
                            message: format!(":inv takes exactly one argument, found {}", args.len()),
                        });
                    }
                    Ok(PathExpr::Inv(Box::new(args.into_iter().next().unwrap())))
                }
                ":rep*" => {
                    if args.len() != 1 {
                        return Err(PathParseError {
                            position: op_at,
                            message: format!(":rep* takes exactly one argument, found {}", args.len()),
                        });
                    }
                    Ok(PathExpr::RepStar(Box::new(args.into_iter().next().unwrap())))
                }
                ":or" => {
                    if args.len() < 2 {
                        return Err(PathParseError {
                            position: op_at,
                            message: ":or takes at least two arguments".to_string(),
                        });
                    }
                    Ok(PathExpr::Or(args))
                }
                other => Err(PathParseError {
                    position: op_at,
                    message: format!("unknown operator {other:?}"),
                }),
            }
        }
        Some((_, Token::Uri(_) | Token::Bang)) => parse_arc(tokens),
        Some((position, tok)) => Err(PathParseError {
            position: *position,
            message: format!("expected path, found {tok:?}"),
        }),
        None => Err(PathParseError {
            position: tokens.end,
            message: "empty path".to_string(),
        }),
    }
}

/// Parse `start | path`, expanding prefixed names through `ns`.
pub fn parse_path_query(text: &str, ns: &NamespaceTable) -> Result<PathQuery, PathParseError> {
    let mut tokens = tokenize(text, ns)?;
    let start = match tokens.next() {
        Some((_, Token::Uri(term))) => term,
        Some((position, tok)) => {
            return Err(PathParseError {
                position,
                message: format!("expected start node, found {tok:?}"),
            })
        }
        None => {
            return Err(PathParseError {
                position: tokens.end,
                message: "empty query".to_string(),
            })
        }
    };
    match tokens.next() {
        Some((_, Token::Pipe)) => {}
        Some((position, tok)) => {
            return Err(PathParseError {
                position,
                message: format!("expected '|', found {tok:?}"),
            })
        }
        None => {
            return Err(PathParseError {
                position: tokens.end,
                message: "expected '|' after start node".to_string(),
            })
        }
    }
    let path = parse_path(&mut tokens)?;
    if let Some((position, tok)) = tokens.next() {
        return Err(PathParseError {
            position,
            message: format!("trailing input: {tok:?}"),
        });
    }
    Ok(PathQuery { start, path })
}
