use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::pipeline::Polynomial;

/// Parses either a comma-separated coefficient list (highest degree first)
/// or an expression such as `1/3*x^4 - 2*x^3 + 37/6*x^2 - 17/2*x + 4`.
/// Error positions are 1-based character columns.
pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    if text.contains('x') {
        Parser::new(text).expression()
    } else {
        coefficient_list(text)
    }
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn coefficient_list(text: &str) -> Result<Polynomial> {
    let mut coeffs = Vec::new();
    let mut col = 1;
    for field in text.split(',') {
        let lead = field.chars().take_while(|c| c.is_whitespace()).count();
        let mut p = Parser::new(field.trim());
        p.offset = col + lead - 1;
        let neg = p.eat('-') || {
            p.eat('+');
            false
        };
        let c = p.rational()?;
        p.end()?;
        coeffs.push(if neg { -c } else { c });
        col += field.chars().count() + 1;
    }
    coeffs.reverse();
    Ok(Polynomial::new(coeffs))
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    offset: usize,
    len: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Parser { chars, at: 0, offset: 0, len: text.chars().count() }
    }

    fn pos(&self) -> usize {
        self.offset + self.chars.get(self.at).map_or(self.len + 1, |&(i, _)| i)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(syntax(self.pos(), format!("unexpected {c:?}"))),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.at;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            self.at = start;
            return Err(syntax(self.pos(), "expected digits"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.uint()?;
        if self.eat('/') {
            let den = self.uint()?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    // var := "x" [ "^" uint ]
    fn var(&mut self) -> Result<usize> {
        if !self.eat('x') {
            return Err(syntax(self.pos(), "expected x"));
        }
        if self.eat('^') {
            let at = self.pos();
            let e = self.uint()?;
            return e.try_into().map_err(|_| syntax(at, "exponent too large"));
        }
        Ok(1)
    }

    // term := coeff [ "*" ] [ var ] | var
    fn term(&mut self) -> Result<(usize, BigRational)> {
        match self.peek() {
            Some('x') => Ok((self.var()?, BigRational::from_integer(1.into()))),
            Some(c) if c.is_ascii_digit() => {
                let c = self.rational()?;
                if self.eat('*') || self.peek() == Some('x') {
                    Ok((self.var()?, c))
                } else {
                    Ok((0, c))
                }
            }
            Some(c) => Err(syntax(self.pos(), format!("unexpected {c:?}"))),
            None => Err(syntax(self.pos(), "unexpected end of input")),
        }
    }

    fn expression(mut self) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        let mut neg = self.eat('-') || {
            self.eat('+');
            false
        };
        loop {
            let (deg, c) = self.term()?;
            p.add_term(deg, if neg { -c } else { c });
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                self.end()?;
                return Ok(p);
            }
        }
    }
}
