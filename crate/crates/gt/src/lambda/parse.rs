use std::error::Error;
use std::fmt;

use super::term::{app, lam, var, Term};

/// Surface syntax for lambda terms:
///
/// ```text
/// term  := '\' ident '.' term          abstraction, body extends right
///        | atom atom* ['\' ...]        application, left-associative
/// atom  := ident | '(' term ')'
/// ident := [a-zA-Z][a-zA-Z0-9']*
/// ```
///
/// A trailing abstraction may close an application sequence, so
/// `f \x. x` reads as `f (\x. x)`.
pub fn parse_term(src: &str) -> Result<Term, TermParseError> {
    let mut p = Parser { chars: src.chars().collect(), pos: 0 };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.err("empty input"));
    }
    let t = p.term()?;
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.err("unexpected input after term"));
    }
    Ok(t)
}

/// Parse failure with a 1-based character position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for TermParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.msg)
    }
}

impl Error for TermParseError {}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, msg: impl Into<String>) -> TermParseError {
        TermParseError { pos: self.pos + 1, msg: msg.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, want: char) -> Result<(), TermParseError> {
        if self.peek() == Some(want) {
            self.bump();
            Ok(())
        } else {
            Err(self.err(format!("expected '{want}'")))
        }
    }

    fn ident(&mut self) -> Result<String, TermParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '\'' {
                        name.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                Ok(name)
            }
            _ => Err(self.err("expected an identifier")),
        }
    }

    fn term(&mut self) -> Result<Term, TermParseError> {
        self.skip_ws();
        if self.peek() == Some('\\') {
            return self.lambda();
        }
        let mut t = self.atom()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('\\') => {
                    let l = self.lambda()?;
                    t = app(t, l);
                    break;
                }
                Some(c) if c == '(' || c.is_ascii_alphabetic() => {
                    t = app(t, self.atom()?);
                }
                _ => break,
            }
        }
        Ok(t)
    }

    fn lambda(&mut self) -> Result<Term, TermParseError> {
        self.expect('\\')?;
        self.skip_ws();
        let x = self.ident()?;
        self.skip_ws();
        self.expect('.')?;
        let body = self.term()?;
        Ok(lam(x, body))
    }

    fn atom(&mut self) -> Result<Term, TermParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let t = self.term()?;
                self.skip_ws();
                self.expect(')')?;
                Ok(t)
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(var(self.ident()?)),
            Some(c) => Err(self.err(format!("unexpected character '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
