//! Parser for polynomial text such as `x^2 - (3a + 2)x + 7a - 1`.
//!
//! Variables are single letters `x`, `a` (α; `α` and `alpha` also accepted)
//! and `k`. Juxtaposition multiplies, `^` takes a nonnegative integer
//! exponent, and `/` divides by a nonzero constant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{Poly, Var};
use crate::error::FormatError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, FormatError> {
    let text = text.replace('\u{2212}', "-").replace("alpha", "α");
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        i += 1;
        let tok = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut s = c.to_string();
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    s.push(chars[i].1);
                    i += 1;
                }
                Tok::Num(s.parse().expect("digits"))
            }
            'x' => Tok::Var(Var::X),
            'a' | 'α' => Tok::Var(Var::Alpha),
            'k' => Tok::Var(Var::K),
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' | '[' | '{' => Tok::Open,
            ')' | ']' | '}' => Tok::Close,
            other => return Err(FormatError::Parse(format!("unexpected {other:?} at {pos}"))),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(usize::MAX, |t| t.0)
    }

    fn err(&self, what: &str) -> FormatError {
        match self.toks.get(self.i) {
            Some((p, t)) => FormatError::Parse(format!("{what} at {p} (found {t:?})")),
            None => FormatError::Parse(format!("{what} at end of input")),
        }
    }

    fn expr(&mut self) -> Result<Poly, FormatError> {
        let mut acc = Poly::zero();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.i += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.i += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => return Ok(acc),
            };
            self.i += 1;
        }
    }

    fn term(&mut self) -> Result<Poly, FormatError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.i += 1;
                    let at = self.pos();
                    let d = self.factor()?;
                    let c = d
                        .as_constant()
                        .filter(|c| !c.is_zero())
                        .ok_or_else(|| FormatError::Parse(format!("division by a non-constant or zero at {at}")))?;
                    acc = &acc * &Poly::constant(BigRational::from_integer(1.into()) / c);
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::Open) => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, FormatError> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.i += 1;
            match self.peek().cloned() {
                Some(Tok::Num(e)) => {
                    self.i += 1;
                    let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected an integer exponent")),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly, FormatError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.i += 1;
                Ok(Poly::constant(BigRational::from_integer(n)))
            }
            Some(Tok::Var(v)) => {
                self.i += 1;
                Ok(Poly::var(v))
            }
            Some(Tok::Open) => {
                self.i += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(self.err("expected ')'"));
                }
                self.i += 1;
                Ok(inner)
            }
            _ => Err(self.err("expected a number, variable or '('")),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<Poly, FormatError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(FormatError::Parse("empty polynomial".into()));
    }
    let mut p = Parser { toks, i: 0 };
    let out = p.expr()?;
    if p.i != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_products_and_powers() {
        let p = parse_poly("x^2 - (3a + 2)x + 7a - 1").unwrap();
        assert_eq!(p.to_string(), "x^2 - 3*x*a - 2*x + 7*a - 1");
        let q = parse_poly("(- 7\\alpha - 2ak)x^5".replace("\\alpha", "α").as_str()).unwrap();
        assert_eq!(q.to_string(), "-2*x^5*a*k - 7*x^5*a");
        assert_eq!(parse_poly("2(1-a)").unwrap(), parse_poly("2 - 2a").unwrap());
        assert_eq!(parse_poly("x/2 + x/2").unwrap(), parse_poly("x").unwrap());
    }

    #[test]
    fn errors() {
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_poly("y").is_err());
        assert!(parse_poly("x/a").is_err());
        assert!(parse_poly("x^a").is_err());
    }
}
