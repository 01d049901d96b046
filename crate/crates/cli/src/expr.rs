//! Coefficient expressions and polynomial literals.
//!
//! A literal is a coefficient list, lowest degree first: `[1, 1, w]` is
//! `1 + X + w·X²`. Coefficients are expressions over integers, fractions and
//! the generator of the top field (`w`, `t`, or `u` for `t^(p^e)`).

use num_bigint::BigInt;
use num_traits::Zero;
use polycomp::composite::CompositeRing;
use polycomp::fieldtower::{Field, FieldDescriptor, FieldElem};
use polycomp::polyring::Poly;

use crate::config::{split_args, ParseError, Pos};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Symbol(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, Pos),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Literal {
    pub text: String,
    pub coeffs: Vec<Expr>,
}

pub fn parse_literal(s: &str, pos: Pos) -> Result<Literal, ParseError> {
    let s = s.trim();
    if !(s.starts_with('[') && s.ends_with(']')) {
        return Err(ParseError::at(pos, format!("expected a coefficient list like [1,0,w], got {s:?}")));
    }
    let coeffs = split_args(&s[1..s.len() - 1], pos.shift(1))?
        .into_iter()
        .map(|(c, p)| parse_expr(c, p))
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.is_empty() {
        return Err(ParseError::at(pos, "empty coefficient list"));
    }
    Ok(Literal { text: s.to_string(), coeffs })
}

pub fn parse_expr(s: &str, pos: Pos) -> Result<Expr, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut p = Parser { chars, i: 0, pos };
    let e = p.sum()?;
    p.skip_ws();
    if p.i < p.chars.len() {
        return Err(ParseError::at(p.here(), format!("unexpected {:?}", p.chars[p.i])));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    i: usize,
    pos: Pos,
}

impl Parser {
    fn here(&self) -> Pos {
        self.pos.shift(self.i)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.i).is_some_and(|c| c.is_whitespace()) {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.i).copied()
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.product()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.i += 1;
            let r = self.product()?;
            e = if c == '+' { Expr::Add(e.into(), r.into()) } else { Expr::Sub(e.into(), r.into()) };
        }
        Ok(e)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.i += 1;
                    e = Expr::Mul(e.into(), self.unary()?.into());
                }
                Some('/') => {
                    let at = self.here();
                    self.i += 1;
                    e = Expr::Div(e.into(), self.unary()?.into(), at);
                }
                // implicit product: `2w`, `3(w+1)`
                Some(c) if c.is_alphabetic() || c == '(' => e = Expr::Mul(e.into(), self.power()?.into()),
                _ => return Ok(e),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some('-') {
            self.i += 1;
            return Ok(Expr::Neg(self.unary()?.into()));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.i += 1;
            self.skip_ws();
            let start = self.i;
            while self.chars.get(self.i).is_some_and(|c| c.is_ascii_digit()) {
                self.i += 1;
            }
            let digits: String = self.chars[start..self.i].iter().collect();
            let k = digits
                .parse::<u32>()
                .map_err(|_| ParseError::at(self.pos.shift(start), "exponent must be a non-negative integer"))?;
            return Ok(Expr::Pow(base.into(), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let at = self.here();
        match self.peek() {
            Some('(') => {
                self.i += 1;
                let e = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(ParseError::at(self.here(), "expected ')'"));
                }
                self.i += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.i;
                while self.chars.get(self.i).is_some_and(|c| c.is_ascii_digit()) {
                    self.i += 1;
                }
                let digits: String = self.chars[start..self.i].iter().collect();
                Ok(Expr::Int(digits.parse().expect("digits")))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.i;
                while self.chars.get(self.i).is_some_and(|c| c.is_alphanumeric() || *c == '_') {
                    self.i += 1;
                }
                Ok(Expr::Symbol(self.chars[start..self.i].iter().collect(), at))
            }
            Some(c) => Err(ParseError::at(at, format!("unexpected {c:?}"))),
            None => Err(ParseError::at(at, "unexpected end of expression")),
        }
    }
}

/// Evaluation failures, reported with the position of the offending symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub pos: Option<Pos>,
    pub message: String,
}

impl std::fmt::Display for EvalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.pos {
            Some(p) => write!(f, "{}:{}: {}", p.line, p.column, self.message),
            None => f.write_str(&self.message),
        }
    }
}

fn symbol_value(field: &Field, name: &str, pos: Pos) -> Result<FieldElem, EvalError> {
    let err = |m: String| EvalError { pos: Some(pos), message: m };
    let g = field.generator().filter(|_| !matches!(field.descriptor(), FieldDescriptor::Prime { .. } | FieldDescriptor::Rationals));
    match (name, g) {
        (n, Some(g)) if n == field.generator_name() => Ok(g),
        ("u", Some(t)) if matches!(field.descriptor(), FieldDescriptor::FunctionField { .. }) => {
            // u = t^p, the generator of F_p(t^p); higher subfields via u^k
            Ok(field.pow(&t, field.characteristic()))
        }
        _ => Err(err(format!("unknown symbol {name:?} in {field}"))),
    }
}

pub fn eval(e: &Expr, field: &Field) -> Result<FieldElem, EvalError> {
    Ok(match e {
        Expr::Int(n) => field
            .from_rational(&num_rational::BigRational::from_integer(n.clone()))
            .ok_or_else(|| EvalError { pos: None, message: format!("{n} is not in {field}") })?,
        Expr::Symbol(s, p) => symbol_value(field, s, *p)?,
        Expr::Neg(a) => field.neg(&eval(a, field)?),
        Expr::Add(a, b) => field.add(&eval(a, field)?, &eval(b, field)?),
        Expr::Sub(a, b) => field.sub(&eval(a, field)?, &eval(b, field)?),
        Expr::Mul(a, b) => field.mul(&eval(a, field)?, &eval(b, field)?),
        Expr::Div(a, b, p) => {
            let d = eval(b, field)?;
            let inv = field.try_inv(&d).ok_or(EvalError { pos: Some(*p), message: "division by zero".into() })?;
            field.mul(&eval(a, field)?, &inv)
        }
        Expr::Pow(a, k) => field.pow(&eval(a, field)?, u64::from(*k)),
    })
}

impl Literal {
    /// The polynomial over the top field of `ring`.
    pub fn poly(&self, ring: &CompositeRing) -> Result<Poly, EvalError> {
        self.poly_over(ring.big())
    }

    pub fn poly_over(&self, field: &Field) -> Result<Poly, EvalError> {
        let coeffs = self.coeffs.iter().map(|c| eval(c, field)).collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(field.clone(), coeffs))
    }

    pub fn is_zero_literal(&self) -> bool {
        self.coeffs.iter().all(|c| matches!(c, Expr::Int(n) if n.is_zero()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Pos = Pos { line: 1, column: 1 };

    #[test]
    fn literals_over_gf4() {
        let l = Field::finite(2, 2, None).unwrap();
        let w = l.generator().unwrap();
        let f = parse_literal("[1, 1, w]", P).unwrap().poly_over(&l).unwrap();
        assert_eq!(f, Poly::new(l.clone(), vec![l.one(), l.one(), w.clone()]));
        let g = parse_literal("[w^2 + w, 2w, 1/w]", P).unwrap().poly_over(&l).unwrap();
        assert_eq!(g.coeffs()[0], l.one());
        assert!(l.is_zero(&g.coeffs()[1]));
        assert_eq!(g.coeffs()[2], l.inv(&w));
    }

    #[test]
    fn rationals_and_function_fields() {
        let q = Field::rationals();
        let f = parse_literal("[0, -1/2, 1/2]", P).unwrap().poly_over(&q).unwrap();
        assert_eq!(f.to_string(), "(1/2)*X^2 + (-1/2)*X");
        let t = Field::function_field(2).unwrap();
        let g = parse_literal("[1, t]", P).unwrap().poly_over(&t).unwrap();
        assert_eq!(g.coeffs()[1], t.generator().unwrap());
        let h = parse_literal("[u]", P).unwrap().poly_over(&t).unwrap();
        assert_eq!(h.coeffs()[0], t.pow(&t.generator().unwrap(), 2));
    }

    #[test]
    fn errors() {
        let l = Field::finite(2, 2, None).unwrap();
        let e = parse_literal("[1, z]", P).unwrap().poly_over(&l).unwrap_err();
        assert_eq!(e.pos, Some(Pos { line: 1, column: 5 }));
        assert!(parse_literal("[1, w+]", P).is_err());
        assert!(parse_literal("1, w", P).is_err());
        assert!(parse_literal("[1/0]", P).unwrap().poly_over(&l).is_err());
        assert!(parse_literal("[w]", P).unwrap().poly_over(&Field::rationals()).is_err());
    }
}
