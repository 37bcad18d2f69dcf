use super::lex::{lex, Pos, Tok};
use super::{Arm, ArgShape, Body, Cluster, CtorDecl, ParseError, TypeDecl, TypeRef};

pub fn parse_unit(src: &str) -> Result<Vec<Cluster>, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, i: 0 };
    let mut clusters = Vec::new();
    while !p.at(&Tok::Eof) {
        clusters.push(p.cluster()?);
    }
    Ok(clusters)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    fn at(&self, t: &Tok) -> bool {
        self.peek() == t
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].0.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.at(t) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        let pos = self.pos();
        Err(ParseError {
            line: pos.line,
            col: pos.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            self.fail(&[what])
        }
    }

    fn lident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Tok::LIdent(n) => {
                let n = n.clone();
                self.bump();
                Ok(n)
            }
            _ => self.fail(&[what]),
        }
    }

    fn cluster(&mut self) -> Result<Cluster, ParseError> {
        let mut decls = vec![self.decl()?];
        while self.eat(&Tok::And) {
            decls.push(self.decl()?);
        }
        Ok(Cluster { decls })
    }

    fn decl(&mut self) -> Result<TypeDecl, ParseError> {
        self.expect(&Tok::Type, "`type`")?;
        let params = self.params()?;
        let name = self.lident("a type name")?;
        self.expect(&Tok::Eq, "`=`")?;
        let body = self.body()?;
        Ok(TypeDecl { name, params, body })
    }

    fn params(&mut self) -> Result<Vec<String>, ParseError> {
        match self.peek() {
            Tok::TyVar(v) => {
                let v = v.clone();
                self.bump();
                Ok(vec![v])
            }
            Tok::LParen => {
                self.bump();
                let mut out = Vec::new();
                loop {
                    match self.peek() {
                        Tok::TyVar(v) => {
                            out.push(v.clone());
                            self.bump();
                        }
                        _ => return self.fail(&["a type parameter"]),
                    }
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
                self.expect(&Tok::RParen, "`)`")?;
                Ok(out)
            }
            _ => Ok(Vec::new()),
        }
    }

    fn body(&mut self) -> Result<Body, ParseError> {
        if self.eat(&Tok::LBracket) {
            let mut arms = vec![self.arm()?];
            while self.eat(&Tok::Pipe) {
                arms.push(self.arm()?);
            }
            self.expect(&Tok::RBracket, "`]`")?;
            Ok(Body::OpenSum(arms))
        } else {
            let mut ctors = vec![self.ctor()?];
            while self.eat(&Tok::Pipe) {
                ctors.push(self.ctor()?);
            }
            Ok(Body::Variants(ctors))
        }
    }

    fn ctor(&mut self) -> Result<CtorDecl, ParseError> {
        match self.peek() {
            Tok::UIdent(n) => {
                let name = n.clone();
                self.bump();
                let args = self.ctor_args()?;
                Ok(CtorDecl { name, is_tag: false, args })
            }
            _ => self.fail(&["a constructor name"]),
        }
    }

    fn arm(&mut self) -> Result<Arm, ParseError> {
        match self.peek() {
            Tok::Tag(n) => {
                let name = n.clone();
                self.bump();
                let args = self.ctor_args()?;
                Ok(Arm::Ctor(CtorDecl { name, is_tag: true, args }))
            }
            Tok::TyVar(_) | Tok::LIdent(_) | Tok::LParen => {
                // An include: a type expression naming a previously declared
                // open sum.
                let shape = self.shape()?;
                match shape {
                    ArgShape::External(r) => Ok(Arm::Include(r)),
                    // A bare 'a or a tuple cannot be included.
                    _ => self.fail(&["an include naming an open sum"]),
                }
            }
            _ => self.fail(&["a tagged constructor", "an include"]),
        }
    }

    fn ctor_args(&mut self) -> Result<Vec<ArgShape>, ParseError> {
        if !self.eat(&Tok::Of) {
            return Ok(Vec::new());
        }
        let mut args = vec![self.shape()?];
        while self.eat(&Tok::Star) {
            args.push(self.shape()?);
        }
        Ok(args)
    }

    /// One type shape: a parameter, a (possibly applied) type name, or a
    /// parenthesized group, with postfix application chaining
    /// (`int pair list` parses as `(int pair) list`).
    fn shape(&mut self) -> Result<ArgShape, ParseError> {
        let mut s = match self.peek().clone() {
            Tok::TyVar(v) => {
                self.bump();
                ArgShape::Param(v)
            }
            Tok::LIdent(n) => {
                self.bump();
                ArgShape::External(TypeRef { name: n, args: Vec::new() })
            }
            Tok::LParen => {
                self.bump();
                let first = self.shape()?;
                if self.at(&Tok::Comma) {
                    // Argument list of an application: ('a, 'b) t.
                    let mut args = vec![first];
                    while self.eat(&Tok::Comma) {
                        args.push(self.shape()?);
                    }
                    self.expect(&Tok::RParen, "`)`")?;
                    let name = self.lident("a type name after `)`")?;
                    ArgShape::External(TypeRef { name, args })
                } else if self.at(&Tok::Star) {
                    let mut items = vec![first];
                    while self.eat(&Tok::Star) {
                        items.push(self.shape()?);
                    }
                    self.expect(&Tok::RParen, "`)`")?;
                    ArgShape::Tuple(items)
                } else {
                    self.expect(&Tok::RParen, "`)`")?;
                    first
                }
            }
            _ => return self.fail(&["a type shape"]),
        };
        // Postfix application: the shape so far becomes the argument.
        while let Tok::LIdent(n) = self.peek().clone() {
            self.bump();
            s = ArgShape::External(TypeRef { name: n, args: vec![s] });
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shapes(src: &str) -> Vec<ArgShape> {
        let clusters = parse_unit(src).unwrap();
        match &clusters[0].decls[0].body {
            Body::Variants(cs) => cs[0].args.clone(),
            Body::OpenSum(_) => panic!("expected variants"),
        }
    }

    #[test]
    fn parses_a_closed_declaration() {
        let clusters = parse_unit("type lam = Var of string | App of lam * lam | Lam of string * lam").unwrap();
        assert_eq!(clusters.len(), 1);
        let d = &clusters[0].decls[0];
        assert_eq!(d.name, "lam");
        assert!(d.params.is_empty());
        let cs = d.ctors().unwrap();
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[1].name, "App");
        assert_eq!(cs[1].args.len(), 2);
        assert!(!cs[1].is_tag);
    }

    #[test]
    fn parses_parameter_lists() {
        let one = parse_unit("type 'a list1 = One of 'a").unwrap();
        assert_eq!(one[0].decls[0].params, vec!["a"]);
        let two = parse_unit("type ('a, 'b) t = A of 'a | B of 'b | T of ('a, 'b) t").unwrap();
        assert_eq!(two[0].decls[0].params, vec!["a", "b"]);
    }

    #[test]
    fn application_and_tuple_shapes() {
        assert_eq!(
            shapes("type 'a t = C of ('a, int) pair"),
            vec![ArgShape::External(TypeRef {
                name: "pair".to_string(),
                args: vec![
                    ArgShape::Param("a".to_string()),
                    ArgShape::External(TypeRef { name: "int".to_string(), args: vec![] }),
                ],
            })]
        );
        assert_eq!(
            shapes("type 'a t = C of ('a * bool)"),
            vec![ArgShape::Tuple(vec![
                ArgShape::Param("a".to_string()),
                ArgShape::External(TypeRef { name: "bool".to_string(), args: vec![] }),
            ])]
        );
        assert_eq!(
            shapes("type 'a t = C of 'a d e"),
            vec![ArgShape::External(TypeRef {
                name: "e".to_string(),
                args: vec![ArgShape::External(TypeRef {
                    name: "d".to_string(),
                    args: vec![ArgShape::Param("a".to_string())],
                })],
            })],
            "postfix application nests leftward"
        );
    }

    #[test]
    fn open_sum_arms() {
        let clusters = parse_unit("type 'a expr = [ v | `Add of 'a * 'a | 'a arith ]").unwrap();
        match &clusters[0].decls[0].body {
            Body::OpenSum(arms) => {
                assert!(matches!(&arms[0], Arm::Include(r) if r.name == "v" && r.args.is_empty()));
                assert!(matches!(&arms[1], Arm::Ctor(c) if c.name == "Add" && c.is_tag));
                assert!(matches!(&arms[2], Arm::Include(r) if r.name == "arith" && r.args.len() == 1));
            }
            Body::Variants(_) => panic!("expected open sum"),
        }
    }

    #[test]
    fn and_joins_a_cluster_and_type_starts_a_new_one() {
        let clusters = parse_unit(
            "type tree = Leaf of string | Node of forest and type forest = Nil | Cons of tree * forest type lam = Var of string",
        )
        .unwrap();
        assert_eq!(clusters.len(), 2);
        assert_eq!(clusters[0].decls.len(), 2);
        assert_eq!(clusters[0].decls[1].name, "forest");
        assert_eq!(clusters[1].decls[0].name, "lam");
    }

    #[test]
    fn empty_input_is_zero_clusters() {
        assert_eq!(parse_unit("").unwrap(), Vec::new());
        assert_eq!(parse_unit("  \n\t ").unwrap(), Vec::new());
    }

    #[test]
    fn errors_carry_position_and_expectation() {
        let err = parse_unit("type t = A of").unwrap_err();
        assert_eq!((err.line, err.col), (1, 14));
        assert!(err.expected.contains(&"a type shape".to_string()));
        assert_eq!(err.found, "end of input");

        let err = parse_unit("type = A").unwrap_err();
        assert_eq!((err.line, err.col), (1, 6));

        let err = parse_unit("type t = [ `A | B ]").unwrap_err();
        assert_eq!((err.line, err.col), (1, 17), "closed ctor syntax is not an arm");
    }
}
