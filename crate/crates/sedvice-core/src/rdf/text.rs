//! Canonical triple text form for logs and test fixtures:
//! `<uri>` for URIs, `"text"` or `"text"^^<dt>` for literals, `_:label` for
//! blanks, one triple per line terminated by ` .`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Graph, Term, TermError, Triple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "triple text error at byte {}: {}", self.position, self.message)
    }
}

fn escape_into(out: &mut String, s: &str) {
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c => out.push(c),
        }
    }
}

pub fn format_term(term: &Term) -> String {
    match term {
        Term::Uri(u) => format!("<{u}>"),
        Term::Literal { value, datatype } => {
            let mut out = String::from("\"");
            escape_into(&mut out, value);
            out.push('"');
            if let Some(dt) = datatype {
                out.push_str("^^<");
                out.push_str(dt);
                out.push('>');
            }
            out
        }
        Term::Blank(label) => format!("_:{label}"),
    }
}

pub fn format_triple(triple: &Triple) -> String {
    format!(
        "{} {} {} .",
        format_term(triple.subject()),
        format_term(triple.predicate()),
        format_term(triple.object())
    )
}

/// One line per triple, in canonical order, each terminated by ` .`.
pub fn format_graph(graph: &Graph) -> String {
    let mut out = String::new();
    for triple in graph {
        out.push_str(&format_triple(triple));
        out.push('\n');
    }
    out
}

struct Lexer<'a> {
    input: &'a str,
    pos: usize,
}

#[derive(Debug, PartialEq, Eq)]
enum Token {
    Term(Term),
    Dot,
    End,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Lexer<'a> {
        Lexer { input, pos: 0 }
    }

    fn err(&self, at: usize, message: impl Into<String>) -> TextError {
        TextError {
            position: at,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.input.len() - trimmed.len();
    }

    fn take_until(&mut self, stop: char, what: &str) -> Result<&'a str, TextError> {
        let start = self.pos;
        match self.rest().find(stop) {
            Some(i) => {
                let s = &self.input[start..start + i];
                self.pos = start + i + stop.len_utf8();
                Ok(s)
            }
            None => Err(self.err(start, format!("unterminated {what}"))),
        }
    }

    fn take_quoted(&mut self) -> Result<String, TextError> {
        let start = self.pos;
        let mut out = String::new();
        let mut chars = self.rest().char_indices();
        while let Some((i, c)) = chars.next() {
            match c {
                '"' => {
                    self.pos = start + i + 1;
                    return Ok(out);
                }
                '\\' => match chars.next() {
                    Some((_, 'n')) => out.push('\n'),
                    Some((_, 'r')) => out.push('\r'),
                    Some((_, 't')) => out.push('\t'),
                    Some((_, '"')) => out.push('"'),
                    Some((_, '\\')) => out.push('\\'),
                    Some((j, other)) => {
                        return Err(self.err(start + j, format!("unknown escape \\{other}")))
                    }
                    None => return Err(self.err(self.input.len(), "unterminated escape")),
                },
                c => out.push(c),
            }
        }
        Err(self.err(self.input.len(), "unterminated string literal"))
    }

    fn next_token(&mut self) -> Result<(usize, Token), TextError> {
        self.skip_ws();
        let at = self.pos;
        let Some(c) = self.rest().chars().next() else {
            return Ok((at, Token::End));
        };
        match c {
            '.' => {
                self.pos += 1;
                Ok((at, Token::Dot))
            }
            '<' => {
                self.pos += 1;
                let uri = self.take_until('>', "URI")?;
                let term = Term::uri(uri).map_err(|e: TermError| self.err(at, format!("{e}")))?;
                Ok((at, Token::Term(term)))
            }
            '"' => {
                self.pos += 1;
                let value = self.take_quoted()?;
                if self.rest().starts_with("^^<") {
                    self.pos += 3;
                    let dt = self.take_until('>', "datatype URI")?;
                    Ok((at, Token::Term(Term::typed_literal(value, dt))))
                } else {
                    Ok((at, Token::Term(Term::literal(value))))
                }
            }
            '_' if self.rest().starts_with("_:") => {
                self.pos += 2;
                let label: &str = self
                    .rest()
                    .split(|c: char| c.is_whitespace())
                    .next()
                    .unwrap_or("");
                if label.is_empty() {
                    return Err(self.err(at, "empty blank node label"));
                }
                self.pos += label.len();
                Ok((at, Token::Term(Term::blank(label))))
            }
            other => Err(self.err(at, format!("unexpected character {other:?}"))),
        }
    }
}

/// Parse zero or more triples in the canonical text form. Whitespace between
/// tokens is insignificant, so fixtures may put several statements on a line.
pub fn parse_triples(input: &str) -> Result<Vec<Triple>, TextError> {
    let mut lexer = Lexer::new(input);
    let mut out = Vec::new();
    loop {
        let (at, tok) = lexer.next_token()?;
        let subject = match tok {
            Token::End => return Ok(out),
            Token::Term(t) => t,
            Token::Dot => return Err(lexer.err(at, "expected subject, found '.'")),
        };
        let mut term_at = |what: &str| -> Result<Term, TextError> {
            match lexer.next_token()? {
                (_, Token::Term(t)) => Ok(t),
                (p, _) => Err(TextError {
                    position: p,
                    message: format!("expected {what}"),
                }),
            }
        };
        let predicate = term_at("predicate")?;
        let object = term_at("object")?;
        match lexer.next_token()? {
            (_, Token::Dot) => {}
            (p, _) => {
                return Err(TextError {
                    position: p,
                    message: String::from("expected '.' terminator"),
                })
            }
        }
        let triple = Triple::new(subject, predicate, object).map_err(|e| TextError {
            position: at,
            message: format!("{e}"),
        })?;
        out.push(triple);
    }
}
