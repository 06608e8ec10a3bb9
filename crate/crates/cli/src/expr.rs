//! Expressions over a presented ring and its tensor square.
//!
//! ```text
//! expr  := cup (('+' | '-') cup)*
//! cup   := cross (('.' | '·') cross)*
//! cross := power ('*' power)*
//! power := unary ('^' INT)?
//! unary := '-' unary | atom
//! atom  := INT | IDENT | '(' expr ')'
//! ```
//!
//! `a * b` is the cross product `a × b` of two base-ring elements. Identifiers
//! name base generators (`u`) or tensor-square generators (`u_L`, `u_R`).

use num_bigint::BigInt;
use num_traits::Pow;
use tcshuffle::cohomology::{CohomologyError, RingElement, TensorSquare};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>, String> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Int(digits.parse().expect("ascii digits")));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-.*^()·".contains(c) {
            out.push(Token::Sym(if c == '·' { '.' } else { c }));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?} at position {i}"));
        }
    }
    Ok(out)
}

/// A parsed value: a bare integer, an element of the base ring, or of its square.
#[derive(Debug, Clone)]
pub enum Value {
    Scalar(BigInt),
    Base(RingElement),
    Square(RingElement),
}

impl Value {
    /// The value as a ring element, integers becoming multiples of the base unit.
    pub fn into_element(self, sq: &TensorSquare) -> (RingElement, bool) {
        match self {
            Value::Scalar(c) => (RingElement::scalar(sq.base(), c), false),
            Value::Base(x) => (x, false),
            Value::Square(x) => (x, true),
        }
    }
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    sq: &'a TensorSquare,
}

fn ring_err(e: CohomologyError) -> String {
    e.to_string()
}

const MIXED: &str = "cannot combine a base-ring element with a tensor-square element; use '*' to form cross products";

impl<'a> Parser<'a> {
    fn peek_sym(&self, c: char) -> bool {
        self.tokens.get(self.pos) == Some(&Token::Sym(c))
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Value, String> {
        let mut acc = self.cup()?;
        while self.peek_sym('+') || self.peek_sym('-') {
            let minus = self.peek_sym('-');
            self.pos += 1;
            let rhs = self.cup()?;
            let rhs = if minus { self.negate(rhs) } else { rhs };
            acc = self.add(acc, rhs)?;
        }
        Ok(acc)
    }

    fn cup(&mut self) -> Result<Value, String> {
        let mut acc = self.cross()?;
        while self.peek_sym('.') {
            self.pos += 1;
            let rhs = self.cross()?;
            acc = self.multiply(acc, rhs)?;
        }
        Ok(acc)
    }

    fn cross(&mut self) -> Result<Value, String> {
        let mut acc = self.power()?;
        while self.peek_sym('*') {
            self.pos += 1;
            let rhs = self.power()?;
            let base = |v: Value| match v {
                Value::Scalar(c) => Ok(RingElement::scalar(self.sq.base(), c)),
                Value::Base(x) => Ok(x),
                Value::Square(_) => Err("'*' takes two base-ring elements".to_string()),
            };
            let (a, b) = (base(acc)?, base(rhs)?);
            acc = Value::Square(self.sq.cross(&a, &b).map_err(ring_err)?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Value, String> {
        let base = self.unary()?;
        if !self.peek_sym('^') {
            return Ok(base);
        }
        self.pos += 1;
        let k = match self.next() {
            Some(Token::Int(k)) => u32::try_from(k).map_err(|_| "exponent too large".to_string())?,
            _ => return Err("expected an integer exponent after '^'".into()),
        };
        Ok(match base {
            Value::Scalar(c) => Value::Scalar(c.pow(k)),
            Value::Base(x) => Value::Base(x.pow(k).map_err(ring_err)?),
            Value::Square(x) => Value::Square(x.pow(k).map_err(ring_err)?),
        })
    }

    fn unary(&mut self) -> Result<Value, String> {
        if self.peek_sym('-') {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(self.negate(v));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Value, String> {
        match self.next() {
            Some(Token::Int(c)) => Ok(Value::Scalar(c)),
            Some(Token::Ident(name)) => {
                if let Ok(x) = RingElement::generator(self.sq.base(), &name) {
                    Ok(Value::Base(x))
                } else {
                    RingElement::generator(self.sq.square(), &name).map(Value::Square).map_err(ring_err)
                }
            }
            Some(Token::Sym('(')) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Token::Sym(')')) => Ok(v),
                    _ => Err("missing ')'".into()),
                }
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of expression".into()),
        }
    }

    fn negate(&self, v: Value) -> Value {
        match v {
            Value::Scalar(c) => Value::Scalar(-c),
            Value::Base(x) => Value::Base(x.neg()),
            Value::Square(x) => Value::Square(x.neg()),
        }
    }

    fn lift(&self, c: BigInt, square: bool) -> RingElement {
        RingElement::scalar(if square { self.sq.square() } else { self.sq.base() }, c)
    }

    fn add(&self, a: Value, b: Value) -> Result<Value, String> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
            (Value::Scalar(c), Value::Base(x)) | (Value::Base(x), Value::Scalar(c)) => Value::Base(x.add(&self.lift(c, false)).map_err(ring_err)?),
            (Value::Scalar(c), Value::Square(x)) | (Value::Square(x), Value::Scalar(c)) => {
                Value::Square(x.add(&self.lift(c, true)).map_err(ring_err)?)
            }
            (Value::Base(x), Value::Base(y)) => Value::Base(x.add(&y).map_err(ring_err)?),
            (Value::Square(x), Value::Square(y)) => Value::Square(x.add(&y).map_err(ring_err)?),
            _ => return Err(MIXED.into()),
        })
    }

    fn multiply(&self, a: Value, b: Value) -> Result<Value, String> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(c), Value::Base(x)) | (Value::Base(x), Value::Scalar(c)) => Value::Base(x.scale(&c)),
            (Value::Scalar(c), Value::Square(x)) | (Value::Square(x), Value::Scalar(c)) => Value::Square(x.scale(&c)),
            (Value::Base(x), Value::Base(y)) => Value::Base(x.cup(&y).map_err(ring_err)?),
            (Value::Square(x), Value::Square(y)) => Value::Square(x.cup(&y).map_err(ring_err)?),
            _ => return Err(MIXED.into()),
        })
    }
}

pub fn evaluate(src: &str, sq: &TensorSquare) -> Result<Value, String> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err("empty expression".into());
    }
    let mut p = Parser { tokens, pos: 0, sq };
    let v = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(format!("unexpected token {:?}", p.tokens[p.pos]));
    }
    Ok(v)
}
