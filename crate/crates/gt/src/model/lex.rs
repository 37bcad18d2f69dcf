use super::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Type,
    And,
    Of,
    /// Lowercase-led identifier: type names.
    LIdent(String),
    /// Uppercase-led identifier: constructor names.
    UIdent(String),
    /// `'a`: a type parameter.
    TyVar(String),
    /// `` `Tag ``: a tagged constructor name.
    Tag(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Pipe,
    Star,
    Comma,
    Eq,
    Eof,
}

impl Tok {
    /// How the token reads in a diagnostic.
    pub fn describe(&self) -> String {
        match self {
            Tok::Type => "`type`".to_string(),
            Tok::And => "`and`".to_string(),
            Tok::Of => "`of`".to_string(),
            Tok::LIdent(n) => format!("identifier `{n}`"),
            Tok::UIdent(n) => format!("constructor `{n}`"),
            Tok::TyVar(n) => format!("type parameter '{n}"),
            Tok::Tag(n) => format!("tag `{n}`"),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::LBracket => "`[`".to_string(),
            Tok::RBracket => "`]`".to_string(),
            Tok::Pipe => "`|`".to_string(),
            Tok::Star => "`*`".to_string(),
            Tok::Comma => "`,`".to_string(),
            Tok::Eq => "`=`".to_string(),
            Tok::Eof => "end of input".to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

pub fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0usize;
    let mut line = 1u32;
    let mut col = 1u32;

    let ident_tail = |c: char| c.is_ascii_alphanumeric() || c == '_' || c == '\'';

    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let advance = |n: usize, i: &mut usize, col: &mut u32| {
            *i += n;
            *col += n as u32;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(1, &mut i, &mut col),
            '(' => {
                out.push((Tok::LParen, pos));
                advance(1, &mut i, &mut col);
            }
            ')' => {
                out.push((Tok::RParen, pos));
                advance(1, &mut i, &mut col);
            }
            '[' => {
                out.push((Tok::LBracket, pos));
                advance(1, &mut i, &mut col);
            }
            ']' => {
                out.push((Tok::RBracket, pos));
                advance(1, &mut i, &mut col);
            }
            '|' => {
                out.push((Tok::Pipe, pos));
                advance(1, &mut i, &mut col);
            }
            '*' => {
                out.push((Tok::Star, pos));
                advance(1, &mut i, &mut col);
            }
            ',' => {
                out.push((Tok::Comma, pos));
                advance(1, &mut i, &mut col);
            }
            '=' => {
                out.push((Tok::Eq, pos));
                advance(1, &mut i, &mut col);
            }
            '\'' => {
                // Type variable: quote then a lowercase-led identifier.
                let start = i + 1;
                let mut j = start;
                if j < chars.len() && chars[j].is_ascii_lowercase() {
                    j += 1;
                    while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                        j += 1;
                    }
                    let name: String = chars[start..j].iter().collect();
                    out.push((Tok::TyVar(name), pos));
                    advance(j - i, &mut i, &mut col);
                } else {
                    return Err(ParseError {
                        line,
                        col,
                        expected: vec!["a type parameter name after `'`".to_string()],
                        found: match chars.get(start) {
                            Some(c) => format!("`{c}`"),
                            None => "end of input".to_string(),
                        },
                    });
                }
            }
            '`' => {
                let start = i + 1;
                let mut j = start;
                if j < chars.len() && chars[j].is_ascii_uppercase() {
                    j += 1;
                    while j < chars.len() && ident_tail(chars[j]) {
                        j += 1;
                    }
                    let name: String = chars[start..j].iter().collect();
                    out.push((Tok::Tag(name), pos));
                    advance(j - i, &mut i, &mut col);
                } else {
                    return Err(ParseError {
                        line,
                        col,
                        expected: vec!["an uppercase constructor name after `` ` ``".to_string()],
                        found: match chars.get(start) {
                            Some(c) => format!("`{c}`"),
                            None => "end of input".to_string(),
                        },
                    });
                }
            }
            c if c.is_ascii_lowercase() => {
                let mut j = i + 1;
                while j < chars.len() && ident_tail(chars[j]) {
                    j += 1;
                }
                let name: String = chars[i..j].iter().collect();
                let tok = match name.as_str() {
                    "type" => Tok::Type,
                    "and" => Tok::And,
                    "of" => Tok::Of,
                    _ => Tok::LIdent(name),
                };
                out.push((tok, pos));
                advance(j - i, &mut i, &mut col);
            }
            c if c.is_ascii_uppercase() => {
                let mut j = i + 1;
                while j < chars.len() && ident_tail(chars[j]) {
                    j += 1;
                }
                let name: String = chars[i..j].iter().collect();
                out.push((Tok::UIdent(name), pos));
                advance(j - i, &mut i, &mut col);
            }
            other => {
                return Err(ParseError {
                    line,
                    col,
                    expected: vec!["a declaration token".to_string()],
                    found: format!("`{other}`"),
                });
            }
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_track_lines_and_columns() {
        let toks = lex("type lam =\n  Var of string").unwrap();
        assert_eq!(toks[0], (Tok::Type, Pos { line: 1, col: 1 }));
        assert_eq!(toks[3], (Tok::UIdent("Var".to_string()), Pos { line: 2, col: 3 }));
    }

    #[test]
    fn quoted_and_tagged_names() {
        let toks = lex("('a, 'b2) `Add").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|(t, _)| t).collect();
        assert_eq!(
            kinds,
            vec![
                &Tok::LParen,
                &Tok::TyVar("a".to_string()),
                &Tok::Comma,
                &Tok::TyVar("b2".to_string()),
                &Tok::RParen,
                &Tok::Tag("Add".to_string()),
                &Tok::Eof,
            ]
        );
    }

    #[test]
    fn rejects_stray_characters() {
        let err = lex("type t = A of int;").unwrap_err();
        assert_eq!((err.line, err.col), (1, 18));
    }
}
