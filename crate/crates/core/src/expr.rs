//! A small expression language for coefficient, nonlinearity and history
//! functions in problem files.
//!
//! Grammar (one free variable per expression, `t` or `x`):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/' | '·') unary)*
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' unary)?        exponent must be constant
//! primary := number | var | ('sin' | 'cos' | 'exp') '(' expr ')' | '(' expr ')'
//! ```
//!
//! [`Expr`]'s `Display` output is canonical: it parses back to an equal tree.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Exp,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
        }
    }

    fn apply(self, v: f64) -> f64 {
        match self {
            Func::Sin => v.sin(),
            Func::Cos => v.cos(),
            Func::Exp => v.exp(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, f64),
    Call(Func, Box<Expr>),
}

impl Expr {
    /// Parses `src` with `var` as the only admissible variable name.
    pub fn parse(src: &str, var: char) -> Result<Expr> {
        let mut p = Parser { src, pos: 0, var };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < src.len() {
            return Err(p.error(format!("unexpected '{}'", p.rest().chars().next().unwrap_or(' '))));
        }
        Ok(e)
    }

    pub fn eval(&self, v: f64) -> f64 {
        match self {
            Expr::Num(c) => *c,
            Expr::Var(_) => v,
            Expr::Neg(a) => -a.eval(v),
            Expr::Add(a, b) => a.eval(v) + b.eval(v),
            Expr::Sub(a, b) => a.eval(v) - b.eval(v),
            Expr::Mul(a, b) => a.eval(v) * b.eval(v),
            Expr::Div(a, b) => a.eval(v) / b.eval(v),
            Expr::Pow(a, e) => {
                let base = a.eval(v);
                if e.fract() == 0.0 && e.abs() < 64.0 {
                    base.powi(*e as i32)
                } else {
                    base.powf(*e)
                }
            }
            Expr::Call(f, a) => f.apply(a.eval(v)),
        }
    }

    pub fn is_constant(&self) -> bool {
        match self {
            Expr::Num(_) => true,
            Expr::Var(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Call(_, a) => a.is_constant(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.is_constant() && b.is_constant()
            }
        }
    }

    /// `(slope, intercept)` when the expression is affine in its variable.
    pub fn affine(&self) -> Option<(f64, f64)> {
        match self {
            Expr::Num(c) => Some((0.0, *c)),
            Expr::Var(_) => Some((1.0, 0.0)),
            Expr::Neg(a) => a.affine().map(|(s, c)| (-s, -c)),
            Expr::Add(a, b) => {
                let ((sa, ca), (sb, cb)) = (a.affine()?, b.affine()?);
                Some((sa + sb, ca + cb))
            }
            Expr::Sub(a, b) => {
                let ((sa, ca), (sb, cb)) = (a.affine()?, b.affine()?);
                Some((sa - sb, ca - cb))
            }
            Expr::Mul(a, b) => {
                let ((sa, ca), (sb, cb)) = (a.affine()?, b.affine()?);
                match (sa == 0.0, sb == 0.0) {
                    (true, _) => Some((ca * sb, ca * cb)),
                    (false, true) => Some((sa * cb, ca * cb)),
                    _ => None,
                }
            }
            Expr::Div(a, b) => {
                let ((sa, ca), (sb, cb)) = (a.affine()?, b.affine()?);
                (sb == 0.0 && cb != 0.0).then(|| (sa / cb, ca / cb))
            }
            Expr::Pow(a, e) => {
                let (s, c) = a.affine()?;
                if s == 0.0 {
                    Some((0.0, self.eval(0.0)))
                } else if *e == 1.0 {
                    Some((s, c))
                } else if *e == 0.0 {
                    Some((0.0, 1.0))
                } else {
                    None
                }
            }
            Expr::Call(_, a) => a.is_constant().then(|| (0.0, self.eval(0.0))),
        }
    }
}

fn fmt_num(f: &mut fmt::Formatter<'_>, c: f64) -> fmt::Result {
    if c < 0.0 || (c == 0.0 && c.is_sign_negative()) {
        write!(f, "(-{})", -c)
    } else {
        write!(f, "{c}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(c) => fmt_num(f, *c),
            Expr::Var(name) => write!(f, "{name}"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, e) => {
                write!(f, "({a} ^ ")?;
                fmt_num(f, *e)?;
                write!(f, ")")
            }
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    var: char,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn error(&self, message: String) -> Error {
        Error::Parse {
            column: self.src[..self.pos].chars().count() + 1,
            message,
        }
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn bump(&mut self, c: char) {
        self.pos += c.len_utf8();
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.bump(d);
                Ok(())
            }
            Some(d) => Err(self.error(format!("expected '{c}', found '{d}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.bump(c);
            let rhs = self.term()?;
            lhs = if c == '+' {
                Expr::Add(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Sub(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(c @ ('*' | '/' | '·')) = self.peek() {
            self.bump(c);
            let rhs = self.unary()?;
            lhs = if c == '/' {
                Expr::Div(Box::new(lhs), Box::new(rhs))
            } else {
                Expr::Mul(Box::new(lhs), Box::new(rhs))
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('-') => {
                self.bump('-');
                Ok(match self.unary()? {
                    Expr::Num(c) => Expr::Num(-c),
                    e => Expr::Neg(Box::new(e)),
                })
            }
            Some('+') => {
                self.bump('+');
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.peek() == Some('^') {
            self.bump('^');
            let at = self.pos;
            let exponent = self.unary()?;
            if !exponent.is_constant() {
                self.pos = at;
                return Err(self.error("exponent must be a constant".into()));
            }
            return Ok(Expr::Pow(Box::new(base), exponent.eval(0.0)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.bump('(');
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => self.number(),
            Some(c) if c.is_alphabetic() => {
                let rest = self.rest();
                let len = rest.find(|ch: char| !ch.is_alphanumeric() && ch != '_').unwrap_or(rest.len());
                let word = &rest[..len];
                let func = match word {
                    "sin" => Some(Func::Sin),
                    "cos" => Some(Func::Cos),
                    "exp" => Some(Func::Exp),
                    _ => None,
                };
                if let Some(func) = func {
                    self.pos += len;
                    self.expect('(')?;
                    let arg = self.expr()?;
                    self.expect(')')?;
                    return Ok(Expr::Call(func, Box::new(arg)));
                }
                if word.chars().count() == 1 && word.starts_with(self.var) {
                    self.pos += len;
                    return Ok(Expr::Var(self.var));
                }
                Err(self.error(format!(
                    "unknown identifier '{word}' (the variable here is '{}')",
                    self.var
                )))
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        let rest = self.rest();
        let bytes = rest.as_bytes();
        let mut len = 0;
        while len < bytes.len() && (bytes[len].is_ascii_digit() || bytes[len] == b'.') {
            len += 1;
        }
        if len < bytes.len() && (bytes[len] == b'e' || bytes[len] == b'E') {
            let mut k = len + 1;
            if k < bytes.len() && (bytes[k] == b'+' || bytes[k] == b'-') {
                k += 1;
            }
            if k < bytes.len() && bytes[k].is_ascii_digit() {
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                len = k;
            }
        }
        let text = &rest[..len];
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => {
                self.pos += len;
                Ok(Expr::Num(v))
            }
            _ => Err(self.error(format!("malformed number '{text}'"))),
        }
    }
}

/// A real function of one real variable, either parsed from the expression
/// language or supplied as a closure.
#[derive(Clone)]
pub enum ScalarFn {
    Expr(Expr),
    Native(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl ScalarFn {
    pub fn native<F: Fn(f64) -> f64 + Send + Sync + 'static>(f: F) -> Self {
        ScalarFn::Native(Arc::new(f))
    }

    pub fn parse(src: &str, var: char) -> Result<Self> {
        Expr::parse(src, var).map(ScalarFn::Expr)
    }

    pub fn constant(c: f64) -> Self {
        ScalarFn::Expr(Expr::Num(c))
    }

    #[inline]
    pub fn eval(&self, v: f64) -> f64 {
        match self {
            ScalarFn::Expr(e) => e.eval(v),
            ScalarFn::Native(f) => f(v),
        }
    }

    pub fn as_expr(&self) -> Option<&Expr> {
        match self {
            ScalarFn::Expr(e) => Some(e),
            ScalarFn::Native(_) => None,
        }
    }
}

impl PartialEq for ScalarFn {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ScalarFn::Expr(a), ScalarFn::Expr(b)) => a == b,
            (ScalarFn::Native(a), ScalarFn::Native(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

impl fmt::Debug for ScalarFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarFn::Expr(e) => write!(f, "Expr({e})"),
            ScalarFn::Native(_) => write!(f, "Native(..)"),
        }
    }
}

impl From<Expr> for ScalarFn {
    fn from(e: Expr) -> Self {
        ScalarFn::Expr(e)
    }
}
