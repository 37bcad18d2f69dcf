use std::error::Error;
use std::fmt;

use super::eval::{eadd, emul, evar, Ast};

/// Surface syntax for arithmetic expressions:
///
/// ```text
/// expr   := term { '+' term }
/// term   := factor { '*' factor }
/// factor := integer | ident | '(' expr ')'
/// ```
///
/// `*` binds tighter than `+`; both associate to the left. Integer literals
/// become variables named by their digits, to be resolved by an environment
/// layered with numeric self-evaluation.
pub fn parse_expr(src: &str) -> Result<Ast, ExprParseError> {
    let mut p = Parser { chars: src.chars().collect(), pos: 0 };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.err("empty input"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.err("unexpected input after expression"));
    }
    Ok(e)
}

/// Parse failure with a 1-based character position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ExprParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.msg)
    }
}

impl Error for ExprParseError {}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err(&self, msg: impl Into<String>) -> ExprParseError {
        ExprParseError { pos: self.pos + 1, msg: msg.into() }
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

    fn expr(&mut self) -> Result<Ast, ExprParseError> {
        let mut e = self.term()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('+') {
                self.bump();
                e = eadd(e, self.term()?);
            } else {
                break;
            }
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<Ast, ExprParseError> {
        let mut e = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                e = emul(e, self.factor()?);
            } else {
                break;
            }
        }
        Ok(e)
    }

    fn factor(&mut self) -> Result<Ast, ExprParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() == Some(')') {
                    self.bump();
                    Ok(e)
                } else {
                    Err(self.err("expected ')'"))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let mut digits = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if digits.parse::<i64>().is_err() {
                    return Err(ExprParseError {
                        pos: start + 1,
                        msg: format!("integer literal {digits} is out of range"),
                    });
                }
                Ok(evar(digits))
            }
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
                Ok(evar(name))
            }
            Some(c) => Err(self.err(format!("unexpected character '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::eval::{eval, int_env, with_numeric_literals};

    #[test]
    fn precedence_and_associativity() {
        // x + y*y groups the product first.
        let e = parse_expr("x + y*y").unwrap();
        assert_eq!(e, eadd(evar("x"), emul(evar("y"), evar("y"))));

        // (x + y) * y overrides with parens.
        let e = parse_expr("(x + y) * y").unwrap();
        assert_eq!(e, emul(eadd(evar("x"), evar("y")), evar("y")));

        // a + b + c and a * b * c associate left.
        let e = parse_expr("a + b + c").unwrap();
        assert_eq!(e, eadd(eadd(evar("a"), evar("b")), evar("c")));
        let e = parse_expr("a * b * c").unwrap();
        assert_eq!(e, emul(emul(evar("a"), evar("b")), evar("c")));
    }

    #[test]
    fn literals_become_digit_named_variables() {
        let e = parse_expr("2 + 40").unwrap();
        assert_eq!(e, eadd(evar("2"), evar("40")));
        let env = with_numeric_literals(int_env(&[]));
        assert_eq!(eval(&env, &e), Ok(42));
    }

    #[test]
    fn rejected_expressions_report_positions() {
        let cases: [(&str, usize); 5] = [
            ("", 1),
            ("x +", 4),
            ("(x", 3),
            ("x y", 3),
            ("99999999999999999999 + 1", 1),
        ];
        for (src, pos) in cases {
            let err = parse_expr(src).expect_err(src);
            assert_eq!(err.pos, pos, "source: {src:?}, got: {err}");
        }
    }
}
