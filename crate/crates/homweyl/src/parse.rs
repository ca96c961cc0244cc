//! Text grammar for Weyl-algebra expressions.
//!
//! ```text
//! expr   := ('+' | '-')? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | 'x' nat | 'y' nat | '(' expr ')'
//! ```
//!
//! Whitespace between tokens is ignored; juxtaposition without `*` is a
//! syntax error, which keeps noncommutative products unambiguous. Products
//! evaluate left to right in the algebra, so `x1*y1` parses to `y1*x1 + 1`.

use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

use crate::element::WeylElement;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// 1-based character position in the input.
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

/// Syntax tree of an expression before evaluation in the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpressionAst {
    Rational(Rational),
    /// x with the given 0-based variable position.
    X(usize),
    /// y with the given 0-based variable position.
    Y(usize),
    Neg(Box<ExpressionAst>),
    Sum(Vec<ExpressionAst>),
    /// Noncommutative, order-preserving product.
    Product(Vec<ExpressionAst>),
    Power(Box<ExpressionAst>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Var { is_x: bool, subscript: usize },
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(v) => write!(f, "{v}"),
            Token::Var { is_x, subscript } => {
                write!(f, "{}{}", if *is_x { 'x' } else { 'y' }, subscript)
            }
            Token::Plus => write!(f, "+"),
            Token::Minus => write!(f, "-"),
            Token::Star => write!(f, "*"),
            Token::Caret => write!(f, "^"),
            Token::Slash => write!(f, "/"),
            Token::LParen => write!(f, "("),
            Token::RParen => write!(f, ")"),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                tokens.push((pos, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((pos, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((pos, Token::Star));
                i += 1;
            }
            '^' => {
                tokens.push((pos, Token::Caret));
                i += 1;
            }
            '/' => {
                tokens.push((pos, Token::Slash));
                i += 1;
            }
            '(' => {
                tokens.push((pos, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((pos, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value: BigInt = digits.parse().expect("digit run parses");
                tokens.push((pos, Token::Int(value)));
            }
            'x' | 'y' => {
                let is_x = c == 'x';
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return err(pos, format!("variable '{c}' needs a numeric subscript"));
                }
                let digits: String = chars[start..i].iter().collect();
                let subscript: usize = digits.parse().map_err(|_| ParseError {
                    position: pos,
                    message: format!("subscript {digits} is too large"),
                })?;
                tokens.push((pos, Token::Var { is_x, subscript }));
            }
            other => return err(pos, format!("unexpected character {other:?}")),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    cursor: usize,
    end_position: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map_or(self.end_position, |(p, _)| *p)
    }

    fn advance(&mut self) -> Option<&(usize, Token)> {
        let t = self.tokens.get(self.cursor);
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t == want => {
                self.cursor += 1;
                Ok(())
            }
            Some(t) => err(self.position(), format!("expected '{want}', found '{t}'")),
            None => err(
                self.position(),
                format!("expected '{want}', found end of input"),
            ),
        }
    }

    fn parse_expr(&mut self) -> Result<ExpressionAst, ParseError> {
        let mut parts = Vec::new();
        let leading_minus = match self.peek() {
            Some(Token::Minus) => {
                self.cursor += 1;
                true
            }
            Some(Token::Plus) => {
                self.cursor += 1;
                false
            }
            _ => false,
        };
        let first = self.parse_term()?;
        parts.push(if leading_minus {
            ExpressionAst::Neg(Box::new(first))
        } else {
            first
        });
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.cursor += 1;
                    parts.push(self.parse_term()?);
                }
                Some(Token::Minus) => {
                    self.cursor += 1;
                    let t = self.parse_term()?;
                    parts.push(ExpressionAst::Neg(Box::new(t)));
                }
                _ => break,
            }
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            ExpressionAst::Sum(parts)
        })
    }

    fn parse_term(&mut self) -> Result<ExpressionAst, ParseError> {
        let mut factors = vec![self.parse_factor()?];
        while self.peek() == Some(&Token::Star) {
            self.cursor += 1;
            factors.push(self.parse_factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            ExpressionAst::Product(factors)
        })
    }

    fn parse_factor(&mut self) -> Result<ExpressionAst, ParseError> {
        let atom = self.parse_atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.cursor += 1;
            let pos = self.position();
            match self.advance() {
                Some((_, Token::Int(v))) => {
                    let e: u32 = v.try_into().map_err(|_| ParseError {
                        position: pos,
                        message: "exponent does not fit in 32 bits".into(),
                    })?;
                    return Ok(ExpressionAst::Power(Box::new(atom), e));
                }
                Some((p, t)) => return err(*p, format!("expected exponent, found '{t}'")),
                None => return err(pos, "expected exponent, found end of input"),
            }
        }
        Ok(atom)
    }

    fn parse_atom(&mut self) -> Result<ExpressionAst, ParseError> {
        let pos = self.position();
        match self.advance().cloned() {
            Some((_, Token::Int(numer))) => {
                if self.peek() == Some(&Token::Slash) {
                    self.cursor += 1;
                    let dpos = self.position();
                    match self.advance() {
                        Some((_, Token::Int(denom))) => {
                            if denom.is_zero() {
                                return err(dpos, "zero denominator");
                            }
                            Ok(ExpressionAst::Rational(Rational::new(numer, denom.clone())))
                        }
                        Some((p, t)) => err(*p, format!("expected denominator, found '{t}'")),
                        None => err(dpos, "expected denominator, found end of input"),
                    }
                } else {
                    Ok(ExpressionAst::Rational(Rational::from_integer(numer)))
                }
            }
            Some((p, Token::Var { is_x, subscript })) => {
                if subscript == 0 {
                    return err(p, "variable subscripts start at 1");
                }
                if subscript > self.n {
                    return err(
                        p,
                        format!("variable subscript {subscript} exceeds n = {}", self.n),
                    );
                }
                Ok(if is_x {
                    ExpressionAst::X(subscript - 1)
                } else {
                    ExpressionAst::Y(subscript - 1)
                })
            }
            Some((_, Token::LParen)) => {
                let inner = self.parse_expr()?;
                self.expect(&Token::RParen)?;
                Ok(inner)
            }
            Some((p, t)) => err(p, format!("expected an atom, found '{t}'")),
            None => err(pos, "expected an atom, found end of input"),
        }
    }
}

/// Parses `input` into the abstract syntax tree, validating variable
/// subscripts against the ambient `n`.
pub fn parse_ast(input: &str, n: usize) -> Result<ExpressionAst, ParseError> {
    let tokens = tokenize(input)?;
    let end_position = input.chars().count() + 1;
    let mut parser = Parser {
        tokens: &tokens,
        cursor: 0,
        end_position,
        n,
    };
    let ast = parser.parse_expr()?;
    if let Some((p, t)) = parser.tokens.get(parser.cursor) {
        return err(*p, format!("unexpected trailing '{t}'"));
    }
    Ok(ast)
}

fn eval(ast: &ExpressionAst, n: usize) -> WeylElement {
    match ast {
        ExpressionAst::Rational(c) => WeylElement::constant(n, c.clone()),
        ExpressionAst::X(i) => WeylElement::x_var(n, *i),
        ExpressionAst::Y(i) => WeylElement::y_var(n, *i),
        ExpressionAst::Neg(inner) => eval(inner, n).neg(),
        ExpressionAst::Sum(parts) => parts
            .iter()
            .map(|p| eval(p, n))
            .fold(WeylElement::zero(n), |acc, p| {
                acc.add(&p).expect("uniform dimension")
            }),
        ExpressionAst::Product(parts) => parts
            .iter()
            .map(|p| eval(p, n))
            .fold(WeylElement::one(n), |acc, p| {
                acc.mul(&p).expect("uniform dimension")
            }),
        ExpressionAst::Power(base, e) => {
            let base = eval(base, n);
            let mut acc = WeylElement::one(n);
            for _ in 0..*e {
                acc = acc.mul(&base).expect("uniform dimension");
            }
            acc
        }
    }
}

/// Parses and evaluates an expression in the algebra with `n` variable
/// pairs, returning the normal form.
pub fn parse(input: &str, n: usize) -> Result<WeylElement, ParseError> {
    let ast = parse_ast(input, n)?;
    Ok(eval(&ast, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn x(n: usize, i: usize) -> WeylElement {
        WeylElement::x_var(n, i)
    }

    fn y(n: usize, i: usize) -> WeylElement {
        WeylElement::y_var(n, i)
    }

    #[test]
    fn product_normalizes() {
        let p = parse("x1*y1", 1).unwrap();
        let expected = y(1, 0)
            .mul(&x(1, 0))
            .unwrap()
            .add(&WeylElement::one(1))
            .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn rational_constant() {
        assert_eq!(
            parse("3/2", 1).unwrap(),
            WeylElement::constant(1, ratio(3, 2))
        );
        assert_eq!(parse("0", 2).unwrap(), WeylElement::zero(2));
    }

    #[test]
    fn parenthesized_difference() {
        // (y1 + 1)*x1^2 - x1^2 = y1*x1^2
        let p = parse("(y1 + 1)*x1^2 - x1^2", 1).unwrap();
        let x2 = x(1, 0).mul(&x(1, 0)).unwrap();
        assert_eq!(p, y(1, 0).mul(&x2).unwrap());
    }

    #[test]
    fn leading_sign() {
        assert_eq!(parse("-x1", 1).unwrap(), x(1, 0).neg());
        assert_eq!(parse("+x1", 1).unwrap(), x(1, 0));
        assert_eq!(
            parse("-3/2", 1).unwrap(),
            WeylElement::constant(1, ratio(-3, 2))
        );
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(parse(" x1 * y1 ", 1).unwrap(), parse("x1*y1", 1).unwrap());
        assert_eq!(parse("3 / 2", 1).unwrap(), parse("3/2", 1).unwrap());
    }

    #[test]
    fn power_zero_is_one() {
        assert_eq!(parse("x1^0", 1).unwrap(), WeylElement::one(1));
    }

    #[test]
    fn rejects_juxtaposition() {
        let e = parse("x1 y1", 1).unwrap_err();
        assert_eq!(e.position, 4);
        assert!(parse("2x1", 1).is_err());
    }

    #[test]
    fn rejects_bad_subscripts() {
        assert!(parse("x0", 1).is_err());
        let e = parse("x3", 2).unwrap_err();
        assert!(e.message.contains("exceeds n"));
        assert!(parse("x", 1).is_err());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse("", 1).is_err());
        assert!(parse("(x1", 1).is_err());
        assert!(parse("x1^-2", 1).is_err());
        assert!(parse("3/0", 1).is_err());
        assert!(parse("x1 +", 1).is_err());
        assert!(parse("x1 ? y1", 1).is_err());
    }

    #[test]
    fn error_positions_are_one_based() {
        let e = parse("x1 + ?", 1).unwrap_err();
        assert_eq!(e.position, 6);
        let e = parse("?", 1).unwrap_err();
        assert_eq!(e.position, 1);
    }

    #[test]
    fn ast_shape() {
        let ast = parse_ast("x1*y1 - 2", 1).unwrap();
        match ast {
            ExpressionAst::Sum(parts) => {
                assert_eq!(parts.len(), 2);
                assert!(matches!(parts[0], ExpressionAst::Product(_)));
                assert!(matches!(parts[1], ExpressionAst::Neg(_)));
            }
            other => panic!("unexpected ast: {other:?}"),
        }
        assert_eq!(parse_ast("7", 1).unwrap(), ExpressionAst::Rational(int(7)));
    }
}
