use std::collections::HashMap;
use std::sync::Arc;

use super::ast::{Command, Declaration, Expr, SessionAst};
use super::lexer::{tokenize, Tok, Token};
use super::{ParseError, ParseErrorKind};
use crate::algebra::tensor_variable_names;
use crate::polyring::{Ambient, Limits, Monomial, Polynomial, PrimeField};
use crate::theorems::CheckId;

enum Symbol {
    Ring(Arc<Ambient>),
    Ideal { ring: String },
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    field: PrimeField,
    symbols: HashMap<String, Symbol>,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> &Token {
        let t = &self.toks[self.pos];
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, tok: &Token, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError { kind, line: tok.line, column: tok.column, message: message.into() }
    }

    fn syntax(&self, expected: &str) -> ParseError {
        let t = self.here();
        self.error_at(t, ParseErrorKind::Syntax, format!("expected {expected}, found {}", t.tok.describe()))
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.syntax(&tok.describe()))
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Token)> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let t = self.bump().clone();
                Ok((s, t))
            }
            _ => Err(self.syntax(what)),
        }
    }

    fn fresh_name(&mut self) -> PResult<String> {
        let (name, tok) = self.ident("a name")?;
        if self.symbols.contains_key(&name) {
            return Err(self.error_at(&tok, ParseErrorKind::Duplicate, format!("`{name}` is already declared")));
        }
        Ok(name)
    }

    fn ring_ref(&mut self) -> PResult<(String, Arc<Ambient>)> {
        let (name, tok) = self.ident("a ring name")?;
        match self.symbols.get(&name) {
            Some(Symbol::Ring(a)) => Ok((name, a.clone())),
            Some(Symbol::Ideal { .. }) => {
                Err(self.error_at(&tok, ParseErrorKind::Kind, format!("`{name}` is an ideal, expected a ring")))
            }
            None => Err(self.error_at(&tok, ParseErrorKind::Unbound, format!("unbound name `{name}`"))),
        }
    }

    fn ideal_ref(&mut self) -> PResult<(String, String, Token)> {
        let (name, tok) = self.ident("an ideal name")?;
        match self.symbols.get(&name) {
            Some(Symbol::Ideal { ring }) => Ok((name, ring.clone(), tok)),
            Some(Symbol::Ring(_)) => {
                Err(self.error_at(&tok, ParseErrorKind::Kind, format!("`{name}` is a ring, expected an ideal")))
            }
            None => Err(self.error_at(&tok, ParseErrorKind::Unbound, format!("unbound name `{name}`"))),
        }
    }

    fn session(&mut self) -> PResult<SessionAst> {
        let mut ast = SessionAst::default();
        while *self.peek() != Tok::Eof {
            let (kw, tok) = self.ident("a statement keyword")?;
            match kw.as_str() {
                "ring" => ast.declarations.push(self.ring_decl()?),
                "ideal" => ast.declarations.push(self.ideal_decl()?),
                "compute" => ast.commands.push(Command::Compute(self.expr()?)),
                "assert" => {
                    let lhs = self.expr()?;
                    let op = match self.peek() {
                        Tok::Cmp(op) => *op,
                        _ => return Err(self.syntax("a comparison operator")),
                    };
                    self.bump();
                    let rhs = self.expr()?;
                    ast.commands.push(Command::Assert { lhs, op, rhs });
                }
                "check" => ast.commands.push(self.check()?),
                other => {
                    return Err(self.error_at(
                        &tok,
                        ParseErrorKind::Syntax,
                        format!("expected `ring`, `ideal`, `compute`, `assert` or `check`, found `{other}`"),
                    ))
                }
            }
            self.expect(Tok::Semi)?;
        }
        Ok(ast)
    }

    fn ring_decl(&mut self) -> PResult<Declaration> {
        let name = self.fresh_name()?;
        self.expect(Tok::Assign)?;
        let (kw, tok) = self.ident("`poly` or `tensor`")?;
        match kw.as_str() {
            "poly" => {
                self.expect(Tok::LParen)?;
                let mut vars: Vec<String> = Vec::new();
                if *self.peek() != Tok::RParen {
                    loop {
                        let (v, vt) = self.ident("a variable name")?;
                        if vars.contains(&v) {
                            return Err(self.error_at(&vt, ParseErrorKind::Duplicate, format!("duplicate variable `{v}`")));
                        }
                        vars.push(v);
                        if *self.peek() == Tok::Comma {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                }
                self.expect(Tok::RParen)?;
                let ambient = Ambient::new(vars.iter().cloned(), self.field, Limits::default())
                    .expect("duplicates rejected above");
                let mut relations = Vec::new();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    relations = self.poly_list(&ambient)?;
                }
                self.symbols.insert(name.clone(), Symbol::Ring(ambient));
                Ok(Declaration::Ring { name, vars, relations })
            }
            "tensor" => {
                self.expect(Tok::LParen)?;
                let (left, la) = self.ring_ref()?;
                self.expect(Tok::Comma)?;
                let (right, ra) = self.ring_ref()?;
                self.expect(Tok::RParen)?;
                let (vars, _) = tensor_variable_names(la.names(), ra.names());
                let ambient = Ambient::new(vars.iter().cloned(), self.field, Limits::default())
                    .expect("renaming yields distinct names");
                self.symbols.insert(name.clone(), Symbol::Ring(ambient));
                Ok(Declaration::Tensor { name, left, right, vars })
            }
            _ => Err(self.error_at(&tok, ParseErrorKind::Syntax, format!("expected `poly` or `tensor`, found `{kw}`"))),
        }
    }

    fn ideal_decl(&mut self) -> PResult<Declaration> {
        let name = self.fresh_name()?;
        self.expect(Tok::Assign)?;
        let (ring, ambient) = self.ring_ref()?;
        self.expect(Tok::Colon)?;
        let generators = self.poly_list(&ambient)?;
        self.symbols.insert(name.clone(), Symbol::Ideal { ring: ring.clone() });
        Ok(Declaration::Ideal { name, ring, generators })
    }

    /// `"(" [poly {"," poly}] ")"`
    fn poly_list(&mut self, ambient: &Arc<Ambient>) -> PResult<Vec<Polynomial>> {
        self.expect(Tok::LParen)?;
        let mut out = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                out.push(self.poly(ambient)?);
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        Ok(out)
    }

    fn poly(&mut self, ambient: &Arc<Ambient>) -> PResult<Polynomial> {
        let mut neg = false;
        match self.peek() {
            Tok::Minus => {
                neg = true;
                self.bump();
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term(ambient)?;
        if neg {
            acc = acc.neg();
        }
        loop {
            let sub = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => return Ok(acc),
            };
            self.bump();
            let t = self.term(ambient)?;
            acc = if sub { acc.sub(&t) } else { acc.add(&t) }.expect("same ambient");
        }
    }

    fn term(&mut self, ambient: &Arc<Ambient>) -> PResult<Polynomial> {
        let mut acc = self.power(ambient)?;
        while *self.peek() == Tok::Star {
            let tok = self.bump().clone();
            let rhs = self.power(ambient)?;
            acc = acc
                .mul(&rhs)
                .map_err(|e| self.error_at(&tok, ParseErrorKind::Syntax, e.to_string()))?;
        }
        Ok(acc)
    }

    fn power(&mut self, ambient: &Arc<Ambient>) -> PResult<Polynomial> {
        let base = self.atom(ambient)?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let tok = self.here().clone();
        let Tok::Int(digits) = &tok.tok else { return Err(self.syntax("an integer exponent")) };
        let k: u16 = digits
            .parse()
            .map_err(|_| self.error_at(&tok, ParseErrorKind::Syntax, format!("exponent {digits} is too large")))?;
        self.bump();
        if base.terms().len() == 1 {
            // monomial powers avoid repeated multiplication
            let t = &base.terms()[0];
            let m = t.mono.pow(k).map_err(|e| self.error_at(&tok, ParseErrorKind::Syntax, e.to_string()))?;
            let f = ambient.field();
            let c = (0..k).fold(1u32, |c, _| f.mul(c, t.coeff));
            return Ok(Polynomial::from_terms(ambient, [(m, c)]));
        }
        base.pow(k as u32).map_err(|e| self.error_at(&tok, ParseErrorKind::Syntax, e.to_string()))
    }

    fn atom(&mut self, ambient: &Arc<Ambient>) -> PResult<Polynomial> {
        let tok = self.here().clone();
        match &tok.tok {
            Tok::Int(digits) => {
                self.bump();
                let f = ambient.field();
                let c = digits.bytes().fold(0u32, |acc, d| f.add(f.mul(acc, 10), (d - b'0') as u32));
                Ok(Polynomial::from_terms(ambient, [(Monomial::one(ambient.nvars()), c)]))
            }
            Tok::Ident(name) => {
                self.bump();
                Polynomial::var_named(ambient, name).map_err(|_| {
                    self.error_at(
                        &tok,
                        ParseErrorKind::Unbound,
                        format!("unbound name `{name}`: not a variable of {}", ambient.describe()),
                    )
                })
            }
            Tok::LParen => {
                self.bump();
                let p = self.poly(ambient)?;
                self.expect(Tok::RParen)?;
                Ok(p)
            }
            _ => Err(self.syntax("a polynomial")),
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let tok = self.here().clone();
        match &tok.tok {
            Tok::Int(d) => {
                self.bump();
                let v = d.parse().map_err(|_| self.error_at(&tok, ParseErrorKind::Syntax, "integer too large"))?;
                Ok(Expr::Int(v))
            }
            Tok::Minus => {
                self.bump();
                match self.expr()? {
                    Expr::Int(v) => Ok(Expr::Int(-v)),
                    _ => Err(self.error_at(&tok, ParseErrorKind::Syntax, "`-` applies to integer literals only")),
                }
            }
            Tok::Ident(f) => {
                let f = f.clone();
                self.bump();
                match f.as_str() {
                    "true" => return Ok(Expr::Bool(true)),
                    "false" => return Ok(Expr::Bool(false)),
                    _ => {}
                }
                let arities: &[usize] = match f.as_str() {
                    "grade" | "height" => &[2],
                    "dim" => &[1, 2],
                    "is_cm" => &[1],
                    _ => {
                        return Err(self.error_at(
                            &tok,
                            ParseErrorKind::Syntax,
                            format!("expected `grade`, `dim`, `height`, `is_cm` or a literal, found `{f}`"),
                        ))
                    }
                };
                self.expect(Tok::LParen)?;
                let (ring, _) = self.ring_ref()?;
                let mut ideal = None;
                if *self.peek() == Tok::Comma {
                    self.bump();
                    let (name, owner, itok) = self.ideal_ref()?;
                    if owner != ring {
                        return Err(self.error_at(
                            &itok,
                            ParseErrorKind::Kind,
                            format!("`{name}` is an ideal of `{owner}`, not of `{ring}`"),
                        ));
                    }
                    ideal = Some(name);
                }
                let n = 1 + ideal.is_some() as usize;
                if !arities.contains(&n) {
                    return Err(self.error_at(
                        &tok,
                        ParseErrorKind::Arity,
                        format!("`{f}` takes {} argument(s), got {n}", arity_list(arities)),
                    ));
                }
                self.expect(Tok::RParen)?;
                Ok(match f.as_str() {
                    "grade" => Expr::Grade { ring, ideal: ideal.unwrap() },
                    "height" => Expr::Height { ring, ideal: ideal.unwrap() },
                    "dim" => Expr::Dim { ring, ideal },
                    _ => Expr::IsCm { ring },
                })
            }
            _ => Err(self.syntax("an expression")),
        }
    }

    fn check(&mut self) -> PResult<Command> {
        let (name, tok) = self.ident("a check identifier")?;
        let id = CheckId::from_str_opt(&name).ok_or_else(|| {
            self.error_at(&tok, ParseErrorKind::Syntax, format!("unknown check `{name}`"))
        })?;
        self.expect(Tok::LParen)?;
        let mut args: Vec<(String, Token)> = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                args.push(self.ident("a name")?);
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        let sig = signature(id);
        if args.len() != sig.len() {
            return Err(self.error_at(
                &tok,
                ParseErrorKind::Arity,
                format!("`{name}` takes {} arguments, got {}", sig.len(), args.len()),
            ));
        }
        for ((arg, atok), want) in args.iter().zip(sig) {
            let ok = match (self.symbols.get(arg), want) {
                (None, _) => {
                    return Err(self.error_at(atok, ParseErrorKind::Unbound, format!("unbound name `{arg}`")))
                }
                (Some(Symbol::Ring(_)), ArgKind::Ring) | (Some(Symbol::Ideal { .. }), ArgKind::Ideal) => true,
                _ => false,
            };
            if !ok {
                let what = if matches!(want, ArgKind::Ring) { "a ring" } else { "an ideal" };
                return Err(self.error_at(atok, ParseErrorKind::Kind, format!("`{arg}` must be {what}")));
            }
        }
        Ok(Command::Check { id, args: args.into_iter().map(|(a, _)| a).collect() })
    }
}

/// Argument kinds of each theorem check.
pub fn signature(id: CheckId) -> &'static [ArgKind] {
    use ArgKind::{Ideal, Ring};
    match id {
        CheckId::Thm11a => &[Ring, Ring, Ideal],
        CheckId::Thm11b | CheckId::Thm11c | CheckId::Lemma12 => &[Ring, Ring, Ideal, Ideal],
        CheckId::Prop23a | CheckId::Remark25 => &[Ring, Ideal],
        CheckId::Thm21 => &[Ring, Ring],
    }
}

fn arity_list(a: &[usize]) -> String {
    a.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(" or ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgKind {
    Ring,
    Ideal,
}

/// Parses a session; integer literals are reduced modulo the prime of `field`.
pub fn parse_session(text: &str, field: PrimeField) -> Result<SessionAst, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks: &toks, pos: 0, field, symbols: HashMap::new() };
    p.session()
}

/// Parses a single polynomial over `ambient`.
pub fn parse_polynomial(ambient: &Arc<Ambient>, text: &str) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks: &toks, pos: 0, field: ambient.field(), symbols: HashMap::new() };
    let f = p.poly(ambient)?;
    if *p.peek() != Tok::Eof {
        return Err(p.syntax("end of input"));
    }
    Ok(f)
}
