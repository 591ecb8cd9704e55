//! Polynomial expressions.
//!
//! ```text
//! expr   := '-'? term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := base ('^' nonneg-int)?
//! base   := int | var | '(' expr ')'
//! ```
//!
//! A rational literal `a/b` is a division of integers. Division is only
//! defined when the divisor is a unit of the coefficient domain.

use std::fmt;

use num_bigint::BigInt;
use punctual::rings::{Domain, Elem, MultiPoly, UniPoly, Vars};

use crate::error::CliError;

const MAX_EXPONENT: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "{n}"),
            Token::Ident(s) => write!(f, "{s}"),
            Token::Plus => f.write_str("'+'"),
            Token::Minus => f.write_str("'-'"),
            Token::Star => f.write_str("'*'"),
            Token::Slash => f.write_str("'/'"),
            Token::Caret => f.write_str("'^'"),
            Token::Open => f.write_str("'('"),
            Token::Close => f.write_str("')'"),
            Token::End => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Token)>, CliError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Token::Int(src[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(src[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(CliError::Syntax {
                    position: start,
                    expected: "a number, variable, operator or parenthesis".into(),
                    found: src[start..].chars().next().map(String::from).unwrap_or_default(),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((src.len(), Token::End));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn bump(&mut self) -> (usize, Token) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, CliError> {
        let (position, tok) = &self.tokens[self.pos];
        Err(CliError::Syntax { position: *position, expected: expected.into(), found: tok.to_string() })
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut acc = if *self.peek() == Token::Minus {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Token::Star => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Token::Slash => {
                    self.bump();
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        let base = self.base()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Token::Int(k) => {
                let e = u32::try_from(&k).ok().filter(|&e| e <= MAX_EXPONENT);
                match e {
                    Some(e) => {
                        self.bump();
                        Ok(Expr::Pow(Box::new(base), e))
                    }
                    None => self.fail(&format!("an exponent of at most {MAX_EXPONENT}")),
                }
            }
            _ => self.fail("a nonnegative integer exponent"),
        }
    }

    fn base(&mut self) -> Result<Expr, CliError> {
        match self.peek().clone() {
            Token::Int(n) => {
                self.bump();
                Ok(Expr::Int(n))
            }
            Token::Ident(s) => {
                self.bump();
                Ok(Expr::Var(s))
            }
            Token::Open => {
                self.bump();
                let e = self.expr()?;
                if *self.peek() != Token::Close {
                    return self.fail("')'");
                }
                self.bump();
                Ok(e)
            }
            _ => self.fail("a number, variable or '('"),
        }
    }
}

/// A parsed expression together with its source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyExpr {
    source: String,
    expr: Expr,
}

impl PolyExpr {
    pub fn parse(source: &str) -> Result<PolyExpr, CliError> {
        let mut p = Parser { tokens: lex(source)?, pos: 0 };
        let expr = p.expr()?;
        if *p.peek() != Token::End {
            return p.fail("an operator or end of input");
        }
        Ok(PolyExpr { source: source.to_string(), expr })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Variable names in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        fn walk(e: &Expr, out: &mut Vec<String>) {
            match e {
                Expr::Int(_) => {}
                Expr::Var(v) => {
                    if !out.contains(v) {
                        out.push(v.clone());
                    }
                }
                Expr::Neg(a) | Expr::Pow(a, _) => walk(a, out),
                Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.expr, &mut out);
        out
    }

    fn eval<R: Target>(&self, r: &R) -> Result<R::V, CliError> {
        eval(&self.expr, r)
    }
}

trait Target {
    type V;
    fn int(&self, n: &BigInt) -> Self::V;
    fn var(&self, name: &str) -> Option<Self::V>;
    fn add(&self, a: Self::V, b: Self::V) -> Self::V;
    fn sub(&self, a: Self::V, b: Self::V) -> Self::V;
    fn mul(&self, a: Self::V, b: Self::V) -> Self::V;
    fn neg(&self, a: Self::V) -> Self::V;
    fn pow(&self, a: Self::V, e: u32) -> Self::V;
    /// The inverse of `a` when it is a unit constant.
    fn unit_inverse(&self, a: &Self::V) -> Option<Elem>;
    fn scale(&self, a: Self::V, c: &Elem) -> Self::V;
    fn show(&self, a: &Self::V) -> String;
}

fn eval<R: Target>(e: &Expr, r: &R) -> Result<R::V, CliError> {
    Ok(match e {
        Expr::Int(n) => r.int(n),
        Expr::Var(v) => r.var(v).ok_or_else(|| CliError::UnknownVariable(v.clone()))?,
        Expr::Neg(a) => r.neg(eval(a, r)?),
        Expr::Add(a, b) => r.add(eval(a, r)?, eval(b, r)?),
        Expr::Sub(a, b) => r.sub(eval(a, r)?, eval(b, r)?),
        Expr::Mul(a, b) => r.mul(eval(a, r)?, eval(b, r)?),
        Expr::Pow(a, k) => r.pow(eval(a, r)?, *k),
        Expr::Div(a, b) => {
            let d = eval(b, r)?;
            let inv = r.unit_inverse(&d).ok_or_else(|| CliError::NonUnitDivisor(r.show(&d)))?;
            r.scale(eval(a, r)?, &inv)
        }
    })
}

struct Uni<'a>(&'a Domain);

impl Target for Uni<'_> {
    type V = UniPoly;
    fn int(&self, n: &BigInt) -> UniPoly {
        UniPoly::constant(self.0, self.0.from_bigint(n))
    }
    fn var(&self, name: &str) -> Option<UniPoly> {
        if name == "x" {
            return Some(UniPoly::x(self.0));
        }
        self.0.var(name).map(|c| UniPoly::constant(self.0, c))
    }
    fn add(&self, a: UniPoly, b: UniPoly) -> UniPoly {
        &a + &b
    }
    fn sub(&self, a: UniPoly, b: UniPoly) -> UniPoly {
        &a - &b
    }
    fn mul(&self, a: UniPoly, b: UniPoly) -> UniPoly {
        &a * &b
    }
    fn neg(&self, a: UniPoly) -> UniPoly {
        -&a
    }
    fn pow(&self, a: UniPoly, e: u32) -> UniPoly {
        a.pow(e as usize)
    }
    fn unit_inverse(&self, a: &UniPoly) -> Option<Elem> {
        match a.degree() {
            Some(0) => a.coeff(0).inv().ok(),
            _ => None,
        }
    }
    fn scale(&self, a: UniPoly, c: &Elem) -> UniPoly {
        a.scale(c)
    }
    fn show(&self, a: &UniPoly) -> String {
        a.to_string()
    }
}

struct Multi<'a>(&'a Domain, &'a Vars);

impl Target for Multi<'_> {
    type V = MultiPoly;
    fn int(&self, n: &BigInt) -> MultiPoly {
        MultiPoly::constant(self.0, self.1.clone(), self.0.from_bigint(n))
    }
    fn var(&self, name: &str) -> Option<MultiPoly> {
        match self.1.iter().position(|v| v == name) {
            Some(i) => Some(MultiPoly::var(self.0, self.1.clone(), i)),
            None => self.0.var(name).map(|c| MultiPoly::constant(self.0, self.1.clone(), c)),
        }
    }
    fn add(&self, a: MultiPoly, b: MultiPoly) -> MultiPoly {
        a.add(&b)
    }
    fn sub(&self, a: MultiPoly, b: MultiPoly) -> MultiPoly {
        a.sub(&b)
    }
    fn mul(&self, a: MultiPoly, b: MultiPoly) -> MultiPoly {
        a.mul(&b)
    }
    fn neg(&self, a: MultiPoly) -> MultiPoly {
        a.neg()
    }
    fn pow(&self, a: MultiPoly, e: u32) -> MultiPoly {
        a.pow(e)
    }
    fn unit_inverse(&self, a: &MultiPoly) -> Option<Elem> {
        a.constant_value().and_then(|c| c.inv().ok())
    }
    fn scale(&self, a: MultiPoly, c: &Elem) -> MultiPoly {
        a.scale(c)
    }
    fn show(&self, a: &MultiPoly) -> String {
        a.to_string()
    }
}

pub fn parse_domain(text: &str) -> Result<Domain, CliError> {
    text.parse::<Domain>().map_err(|e| CliError::DomainParse(e.to_string()))
}

/// A polynomial in `x` over `domain`; other variables must belong to the
/// domain.
pub fn parse_uni(text: &str, domain: &Domain) -> Result<UniPoly, CliError> {
    PolyExpr::parse(text)?.eval(&Uni(domain))
}

/// A polynomial in `vars` over `domain`.
pub fn parse_multi(text: &str, domain: &Domain, vars: &Vars) -> Result<MultiPoly, CliError> {
    PolyExpr::parse(text)?.eval(&Multi(domain, vars))
}

/// An element of `domain`.
pub fn parse_elem(text: &str, domain: &Domain) -> Result<Elem, CliError> {
    let e = PolyExpr::parse(text)?;
    if e.variables().iter().any(|v| v == "x") {
        return Err(CliError::UnknownVariable("x".into()));
    }
    Ok(e.eval(&Uni(domain))?.coeff(0))
}

/// Comma-separated list; commas never occur inside an expression.
pub fn split_list(text: &str) -> Vec<&str> {
    text.split(',').map(str::trim).collect()
}

/// Either kind of parse result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Uni(UniPoly),
    Multi(MultiPoly),
}

/// Univariate when only `x` and domain variables occur; otherwise a
/// polynomial in `x` (if present) followed by the remaining variables in
/// sorted order.
pub fn parse_poly(text: &str, domain: &Domain) -> Result<Parsed, CliError> {
    let e = PolyExpr::parse(text)?;
    let mut extra: Vec<String> =
        e.variables().into_iter().filter(|v| v != "x" && domain.var(v).is_none()).collect();
    if extra.is_empty() {
        return Ok(Parsed::Uni(e.eval(&Uni(domain))?));
    }
    extra.sort_by_key(|v| var_key(v));
    let mut names = Vec::new();
    if e.variables().iter().any(|v| v == "x") {
        names.push("x".to_string());
    }
    names.extend(extra);
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let vars = MultiPoly::vars_from(&names);
    Ok(Parsed::Multi(e.eval(&Multi(domain, &vars))?))
}

fn var_key(v: &str) -> (String, u64) {
    let split = v.find(|c: char| c.is_ascii_digit()).unwrap_or(v.len());
    (v[..split].to_string(), v[split..].parse().unwrap_or(0))
}
