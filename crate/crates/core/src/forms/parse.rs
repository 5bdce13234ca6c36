use super::{HomogeneousForm, Monomial};
use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' | b'-' | b'*' | b'/' | b'^' => {
                out.push(match b {
                    b'+' => Token::Plus,
                    b'-' => Token::Minus,
                    b'*' => Token::Star,
                    b'/' => Token::Slash,
                    _ => Token::Caret,
                });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token::Number(text[start..i].to_string()));
            }
            b'x' => {
                let start = i + 1;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let index = text[start..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable at byte {}", start - 1)))?;
                out.push(Token::Var(index));
            }
            _ => return Err(Error::Parse(format!("unexpected {:?} at byte {i}", b as char))),
        }
    }
    Ok(out)
}

struct Parser<'a, T> {
    tokens: &'a [Token],
    pos: usize,
    num_vars: usize,
    terms: Vec<(Monomial, T)>,
}

impl<T: Scalar> Parser<'_, T> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn number(&mut self) -> Result<T> {
        match self.bump() {
            Some(Token::Number(n)) => {
                parse_scalar(&n).map_err(|e| Error::Parse(e.to_string()))
            }
            other => Err(Error::Parse(format!("expected a number, found {other:?}"))),
        }
    }

    fn factor(&mut self, coeff: &mut T, exps: &mut [u32]) -> Result<()> {
        match self.peek() {
            Some(Token::Number(_)) => {
                let mut value = self.number()?;
                if self.peek() == Some(&Token::Slash) {
                    self.bump();
                    let den = self.number()?;
                    if den.is_zero() {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    value = value / den;
                }
                *coeff = coeff.clone() * value;
            }
            Some(Token::Var(i)) => {
                let i = *i;
                self.bump();
                if i >= self.num_vars {
                    return Err(Error::Parse(format!(
                        "variable x{i} out of range for {} variables",
                        self.num_vars
                    )));
                }
                let mut e = 1u32;
                if self.peek() == Some(&Token::Caret) {
                    self.bump();
                    match self.bump() {
                        Some(Token::Number(n)) => {
                            e = n.parse().map_err(|_| Error::Parse(format!("bad exponent {n}")))?;
                        }
                        other => {
                            return Err(Error::Parse(format!("expected exponent, found {other:?}")))
                        }
                    }
                }
                exps[i] += e;
            }
            other => return Err(Error::Parse(format!("expected a factor, found {other:?}"))),
        }
        Ok(())
    }

    fn term(&mut self, negative: bool) -> Result<()> {
        let mut coeff = if negative { -T::one() } else { T::one() };
        let mut exps = vec![0u32; self.num_vars];
        self.factor(&mut coeff, &mut exps)?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            self.factor(&mut coeff, &mut exps)?;
        }
        self.terms.push((Monomial::new(exps), coeff));
        Ok(())
    }

    fn expression(&mut self) -> Result<()> {
        let negative = match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                true
            }
            Some(Token::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        self.term(negative)?;
        loop {
            match self.bump() {
                None => return Ok(()),
                Some(Token::Plus) => self.term(false)?,
                Some(Token::Minus) => self.term(true)?,
                Some(other) => return Err(Error::Parse(format!("unexpected token {other:?}"))),
            }
        }
    }
}

impl<T: Scalar> HomogeneousForm<T> {
    /// Parses the canonical text format (see the `Display` impl), allowing
    /// arbitrary whitespace, repeated monomials, and any term order.
    ///
    /// The degree is taken from the terms; a form whose terms all cancel gets
    /// the degree of its first term, and the bare literal `0` gets degree 0.
    pub fn parse(text: &str, num_vars: usize) -> Result<Self> {
        Self::parse_impl(text, num_vars, None)
    }

    /// Like [`parse`](Self::parse) with a known degree, so the zero form keeps it.
    pub fn parse_with_degree(text: &str, num_vars: usize, degree: u32) -> Result<Self> {
        Self::parse_impl(text, num_vars, Some(degree))
    }

    fn parse_impl(text: &str, num_vars: usize, degree: Option<u32>) -> Result<Self> {
        let tokens = tokenize(text)?;
        if tokens.is_empty() {
            return Err(Error::Parse("empty form".into()));
        }
        let mut parser = Parser::<T> { tokens: &tokens, pos: 0, num_vars, terms: Vec::new() };
        parser.expression()?;
        let mut terms = parser.terms;
        // A bare zero constant may stand for the zero form of any degree.
        if let Some(d) = degree {
            terms.retain(|(m, c)| !(c.is_zero() && m.degree() != d));
        } else if terms.iter().all(|(_, c)| c.is_zero()) && terms.len() == 1 {
            return Ok(Self::zero(num_vars, 0));
        }
        let degree = degree.unwrap_or_else(|| terms[0].0.degree());
        Self::from_terms(num_vars, degree, terms)
    }
}

impl<T: Scalar> std::str::FromStr for HomogeneousForm<T> {
    type Err = Error;

    /// Parses a ternary form.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, 3)
    }
}
