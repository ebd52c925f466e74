//! Text format for presentations.
//!
//! ```text
//! # comment
//! gens: a, b
//! rels: a^2, b^3, (ab)^2, [a,b^2], <a,b>
//! ```
//!
//! A generator name is one ASCII letter followed by digits or underscores, so
//! `ab` is the product `a b` and `x12` is a single generator. Sections are
//! separated by newlines or `;`. `1` denotes the empty word.

use std::fmt;

use thiserror::Error;

use super::word::Word;
use crate::GroupElement;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: generator `{name}` is not declared")]
    UndeclaredGenerator { name: String, line: usize, column: usize },
    #[error("{line}:{column}: generator `{name}` declared twice")]
    DuplicateGenerator { name: String, line: usize, column: usize },
    #[error("presentation has no `gens:` section")]
    MissingGenerators,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Checks the relators against the declared generators.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for r in &relators {
            if let Some(name) = r.generators().into_iter().find(|n| !generators.iter().any(|g| g == n)) {
                return Err(PresentationError::UndeclaredGenerator {
                    name: name.to_string(),
                    line: 0,
                    column: 0,
                });
            }
        }
        Ok(Self { generators, relators })
    }

    /// Whether every relator dies under `assign`, which gives each generator
    /// (by position) an image.
    pub fn satisfied_by<G: GroupElement>(&self, identity: &G, images: &[G]) -> bool {
        self.relators.iter().all(|r| {
            r.evaluate(identity, |name| {
                self.generators.iter().position(|g| g == name).map(|i| images[i].clone())
            })
            .is_some_and(|g| g.is_identity())
        })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(", "))?;
        let rels: Vec<String> = self.relators.iter().map(Word::to_string).collect();
        write!(f, "rels: {}", rels.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Gens,
    Rels,
    Colon,
    Semi,
    Comma,
    Caret,
    Int(i64),
    Ident(String),
    Open(char),
    Close(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> PresentationError {
    PresentationError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>, PresentationError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (l, cl) = (line, col);
        let mut push = |tok: Tok| out.push(Token { tok, line: l, column: cl });
        match c {
            '\n' => {
                push(Tok::Semi);
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            c if c.is_whitespace() => {}
            ':' => push(Tok::Colon),
            ';' => push(Tok::Semi),
            ',' => push(Tok::Comma),
            '^' => push(Tok::Caret),
            '(' | '[' | '<' => push(Tok::Open(c)),
            ')' | ']' | '>' => push(Tok::Close(c)),
            '-' | '0'..='9' => {
                let start = i;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let v = s
                    .parse::<i64>()
                    .map_err(|_| syntax(l, cl, format!("bad integer `{s}`")))?;
                push(Tok::Int(v));
                col += i - start;
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let run_end = (i..chars.len())
                    .find(|&j| !chars[j].is_ascii_alphabetic())
                    .unwrap_or(chars.len());
                let run: String = chars[i..run_end].iter().collect();
                let next = (run_end..chars.len()).find(|&j| chars[j] != ' ' && chars[j] != '\t');
                if (run == "gens" || run == "rels") && next.is_some_and(|j| chars[j] == ':') {
                    push(if run == "gens" { Tok::Gens } else { Tok::Rels });
                    col += run_end - i;
                    i = run_end;
                    continue;
                }
                let start = i;
                i += 1;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '_') {
                    i += 1;
                }
                push(Tok::Ident(chars[start..i].iter().collect()));
                col += i - start;
                continue;
            }
            other => return Err(syntax(l, cl, format!("unexpected character `{other}`"))),
        }
        i += 1;
        col += 1;
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    generators: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn skip_semis(&mut self) {
        while self.peek().tok == Tok::Semi {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<Token, PresentationError> {
        let t = self.bump();
        if t.tok == want {
            Ok(t)
        } else {
            Err(syntax(t.line, t.column, format!("expected {what}")))
        }
    }

    fn gens_section(&mut self) -> Result<(), PresentationError> {
        loop {
            let t = self.bump();
            let Tok::Ident(name) = t.tok else {
                return Err(syntax(t.line, t.column, "expected a generator name"));
            };
            if self.generators.contains(&name) {
                return Err(PresentationError::DuplicateGenerator {
                    name,
                    line: t.line,
                    column: t.column,
                });
            }
            self.generators.push(name);
            if self.peek().tok != Tok::Comma {
                return Ok(());
            }
            self.bump();
        }
    }

    fn rels_section(&mut self) -> Result<Vec<Word>, PresentationError> {
        let mut rels = Vec::new();
        if matches!(self.peek().tok, Tok::Semi | Tok::End) {
            return Ok(rels);
        }
        loop {
            rels.push(self.word()?);
            if self.peek().tok != Tok::Comma {
                return Ok(rels);
            }
            self.bump();
            // allow a relator list to continue on the next line after a comma
            self.skip_semis();
        }
    }

    fn starts_factor(tok: &Tok) -> bool {
        matches!(tok, Tok::Ident(_) | Tok::Int(1) | Tok::Open(_))
    }

    fn word(&mut self) -> Result<Word, PresentationError> {
        let t = self.peek().clone();
        if !Self::starts_factor(&t.tok) {
            return Err(syntax(t.line, t.column, "expected a word"));
        }
        let mut w = Word::empty();
        while Self::starts_factor(&self.peek().tok) {
            w = w.op(&self.factor()?);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word, PresentationError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Int(0) => Err(syntax(t.line, t.column, "exponent must be nonzero")),
            Tok::Int(k) => Ok(base.pow(k)),
            _ => Err(syntax(t.line, t.column, "expected an integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Word, PresentationError> {
        let t = self.bump();
        match t.tok {
            Tok::Int(1) => Ok(Word::empty()),
            Tok::Ident(name) => {
                if !self.generators.contains(&name) {
                    return Err(PresentationError::UndeclaredGenerator {
                        name,
                        line: t.line,
                        column: t.column,
                    });
                }
                Ok(Word::generator(&name))
            }
            Tok::Open('(') => {
                let w = self.word()?;
                self.expect(Tok::Close(')'), "`)`")?;
                Ok(w)
            }
            Tok::Open(open) => {
                let a = self.word()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.word()?;
                if open == '[' {
                    self.expect(Tok::Close(']'), "`]`")?;
                    Ok(Word::commutator(&a, &b))
                } else {
                    self.expect(Tok::Close('>'), "`>`")?;
                    Ok(Word::triple_commutator(&a, &b))
                }
            }
            _ => Err(syntax(t.line, t.column, "expected a generator, `1` or a bracket")),
        }
    }
}

/// Parses the presentation text format. Relators are freely reduced.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        generators: Vec::new(),
    };
    let mut relators = Vec::new();
    let mut saw_gens = false;
    loop {
        p.skip_semis();
        let t = p.bump();
        match t.tok {
            Tok::End => break,
            Tok::Gens if !saw_gens => {
                p.expect(Tok::Colon, "`:`")?;
                p.gens_section()?;
                saw_gens = true;
            }
            Tok::Gens => return Err(syntax(t.line, t.column, "second `gens:` section")),
            Tok::Rels if saw_gens => {
                p.expect(Tok::Colon, "`:`")?;
                relators.extend(p.rels_section()?);
            }
            Tok::Rels => return Err(PresentationError::MissingGenerators),
            _ => return Err(syntax(t.line, t.column, "expected `gens:` or `rels:`")),
        }
        let t = p.peek().clone();
        if !matches!(t.tok, Tok::Semi | Tok::End) {
            return Err(syntax(t.line, t.column, "unexpected input after section"));
        }
    }
    if !saw_gens {
        return Err(PresentationError::MissingGenerators);
    }
    Ok(Presentation {
        generators: p.generators,
        relators,
    })
}
