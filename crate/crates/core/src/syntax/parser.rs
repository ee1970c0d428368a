//! Recursive-descent parser for the concrete syntax.
//!
//! ```text
//! form    ::= imp ( "<->" imp )*
//! imp     ::= or ( "->" imp )?
//! or      ::= and ( "|" and )*
//! and     ::= unary ( "&" unary )*
//! unary   ::= bform ( "==" | "!=" ) bform
//!           | "~" unary
//!           | "box" AGENT unary
//!           | "kd" AGENT bform
//!           | "kx" AGENT bform
//!           | "[" form "]" unary
//!           | ATOM ":=" bform
//!           | ATOM
//!           | "(" form ")"
//! bform   ::= ATOM | "~" bform | "(" bform "&" bform ")"
//! ```
//!
//! Inside the operands of `==`, `!=`, `kd`, `kx` and `:=` only the boolean
//! layer is allowed and every conjunction must be parenthesized.

use thiserror::Error;

use super::{Agent, Atom, BoolForm, Form, KEYWORDS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Tilde,
    Amp,
    Bar,
    Arrow,
    DoubleArrow,
    EqEq,
    NotEq,
    Define,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

impl Tok<'_> {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Tilde => "`~`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::DoubleArrow => "`<->`".into(),
            Tok::EqEq => "`==`".into(),
            Tok::NotEq => "`!=`".into(),
            Tok::Define => "`:=`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok<'_>)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let rest = &src[i..];
        let (tok, len) = if c.is_ascii_lowercase() {
            let len = rest
                .bytes()
                .take_while(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || *b == b'_')
                .count();
            (Tok::Ident(&rest[..len]), len)
        } else if rest.starts_with("<->") {
            (Tok::DoubleArrow, 3)
        } else if rest.starts_with("->") {
            (Tok::Arrow, 2)
        } else if rest.starts_with("==") {
            (Tok::EqEq, 2)
        } else if rest.starts_with("!=") {
            (Tok::NotEq, 2)
        } else if rest.starts_with(":=") {
            (Tok::Define, 2)
        } else {
            let t = match c {
                b'~' => Tok::Tilde,
                b'&' => Tok::Amp,
                b'|' => Tok::Bar,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'[' => Tok::LBracket,
                b']' => Tok::RBracket,
                _ => {
                    let ch = rest.chars().next().unwrap_or('?');
                    return Err(ParseError {
                        position: start,
                        message: format!("unexpected character `{ch}`"),
                    });
                }
            };
            (t, 1)
        };
        out.push((start, tok));
        i += len;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    pos: usize,
    end: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> PResult<Self> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            end: src.len(),
        })
    }

    fn peek(&self) -> Option<Tok<'a>> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn error<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, expected: &str) -> PResult<T> {
        match self.peek() {
            Some(t) => self.error(format!("expected {expected}, found {}", t.describe())),
            None => self.error(format!("expected {expected}, found end of input")),
        }
    }

    fn eat(&mut self, tok: Tok<'_>) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok<'_>) -> PResult<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.unexpected(&tok.describe())
        }
    }

    fn finish(&self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::Amp) => self.error(
                "unexpected `&`: a boolean conjunction must be wrapped in parentheses, e.g. `(p & q)`",
            ),
            Some(t) => self.error(format!("unexpected {} after complete formula", t.describe())),
        }
    }

    fn atom(&mut self) -> PResult<Atom> {
        match self.peek() {
            Some(Tok::Ident(name)) if !KEYWORDS.contains(&name) => {
                let a = Atom::new(name).or_else(|e| self.error(e.to_string()))?;
                self.pos += 1;
                Ok(a)
            }
            _ => self.unexpected("an atom"),
        }
    }

    fn agent(&mut self) -> PResult<Agent> {
        match self.peek() {
            Some(Tok::Ident(name)) if !KEYWORDS.contains(&name) => {
                let a = Agent::new(name).or_else(|e| self.error(e.to_string()))?;
                self.pos += 1;
                Ok(a)
            }
            _ => self.unexpected("an agent name"),
        }
    }

    fn bform(&mut self) -> PResult<BoolForm> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(self.bform()?.not())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let left = self.bform()?;
                if !self.eat(Tok::Amp) {
                    return self.unexpected("`&` (the boolean layer only has `~` and `(P & Q)`)");
                }
                let right = self.bform()?;
                self.expect(Tok::RParen)?;
                Ok(left.and(right))
            }
            _ => Ok(BoolForm::Atom(self.atom()?)),
        }
    }

    fn form(&mut self) -> PResult<Form> {
        let mut left = self.implication()?;
        while self.eat(Tok::DoubleArrow) {
            let right = self.implication()?;
            left = left.iff(right);
        }
        Ok(left)
    }

    fn implication(&mut self) -> PResult<Form> {
        let left = self.disjunction()?;
        if self.eat(Tok::Arrow) {
            let right = self.implication()?;
            return Ok(left.implies(right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> PResult<Form> {
        let mut left = self.conjunction()?;
        while self.eat(Tok::Bar) {
            let right = self.conjunction()?;
            left = left.or(right);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> PResult<Form> {
        let mut left = self.unary()?;
        while self.eat(Tok::Amp) {
            let right = self.unary()?;
            left = left.and(right);
        }
        Ok(left)
    }

    /// Tries `bform (== | !=) bform` at the current position, rewinding if
    /// the input does not start that way.
    fn try_equivalence(&mut self) -> PResult<Option<Form>> {
        let start = self.pos;
        let left = match self.bform() {
            Ok(p) => p,
            Err(_) => {
                self.pos = start;
                return Ok(None);
            }
        };
        let negated = match self.peek() {
            Some(Tok::EqEq) => false,
            Some(Tok::NotEq) => true,
            _ => {
                self.pos = start;
                return Ok(None);
            }
        };
        self.pos += 1;
        let right = self.bform()?;
        let eq = Form::Equiv(left, right);
        Ok(Some(if negated { eq.not() } else { eq }))
    }

    fn unary(&mut self) -> PResult<Form> {
        if let Some(eq) = self.try_equivalence()? {
            return Ok(eq);
        }
        match self.peek() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(self.unary()?.not())
            }
            Some(Tok::Ident("box")) => {
                self.pos += 1;
                let agent = self.agent()?;
                Ok(Form::modal(agent, self.unary()?))
            }
            Some(Tok::Ident("kd")) => {
                self.pos += 1;
                let agent = self.agent()?;
                Ok(Form::Kd(agent, self.bform()?))
            }
            Some(Tok::Ident("kx")) => {
                self.pos += 1;
                let agent = self.agent()?;
                Ok(Form::kx(agent, self.bform()?))
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let announced = self.form()?;
                self.expect(Tok::RBracket)?;
                Ok(Form::ann(announced, self.unary()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.form()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Ident(_)) => {
                let a = self.atom()?;
                if self.peek() == Some(Tok::Define) {
                    self.pos += 1;
                    return Ok(Form::DefIs(a, self.bform()?));
                }
                Ok(Form::Atom(a))
            }
            _ => self.unexpected("a formula"),
        }
    }
}

/// Parses a boolean-layer formula. Conjunctions must be parenthesized.
pub fn parse_bool(src: &str) -> Result<BoolForm, ParseError> {
    let mut p = Parser::new(src)?;
    let f = p.bform()?;
    p.finish()?;
    Ok(f)
}

/// Parses a formula of the full language, expanding the derived connectives.
pub fn parse_form(src: &str) -> Result<Form, ParseError> {
    let mut p = Parser::new(src)?;
    let f = p.form()?;
    p.finish()?;
    Ok(f)
}
