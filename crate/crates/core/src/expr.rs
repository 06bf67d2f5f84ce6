//! Text syntax for polynomials, matching the `Display` output of [`MultiPoly`].
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := [coeff ['*']] factor ('*'? factor)* | coeff
//! coeff  := int ['/' posint] | '(' gaussian ')'
//! factor := ('X' | 'x') [index] ['^' natural]
//! ```
//!
//! A bare `X` is `X1`. Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::algebra::{GaussianRational, MultiPoly};
use crate::error::ParseError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyExpr {
    source: String,
    poly: MultiPoly,
}

impl PolyExpr {
    /// Parses with at least `min_vars` variables; the count grows to the
    /// largest index that appears.
    pub fn parse_with_vars(s: &str, min_vars: usize) -> Result<Self, ParseError> {
        let terms = Parser::new(s).expr()?;
        let num_vars = terms
            .iter()
            .flat_map(|(_, vars)| vars.iter().map(|&(v, _)| v))
            .max()
            .unwrap_or(0)
            .max(min_vars);
        let mut poly = MultiPoly::zero(num_vars);
        for (c, vars) in terms {
            let mut exps = vec![0u32; num_vars];
            for (v, e) in vars {
                exps[v - 1] += e;
            }
            let m = MultiPoly::monomial(num_vars, exps, c).expect("exponent length matches");
            poly = &poly + &m;
        }
        Ok(Self { source: s.to_string(), poly })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }
}

impl FromStr for PolyExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Self::parse_with_vars(s, 1)
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

pub fn parse_poly(s: &str) -> Result<MultiPoly, ParseError> {
    s.parse::<PolyExpr>().map(PolyExpr::into_poly)
}

type Term = (GaussianRational, Vec<(usize, u32)>);

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::new(self.pos, msg))
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn expr(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (c, vars) = self.term()?;
            terms.push((if negate { -c } else { c }, vars));
            match self.peek() {
                None => return Ok(terms),
                Some('+') => negate = false,
                Some('-') => negate = true,
                Some(c) => return self.err(format!("unexpected '{c}'")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let coeff = match self.peek() {
            Some('(') => Some(self.paren_coeff()?),
            Some(c) if c.is_ascii_digit() => Some(self.rational()?),
            Some('X' | 'x') => None,
            Some(c) => return self.err(format!("expected a coefficient or variable, found '{c}'")),
            None => return self.err("expected a term"),
        };
        let mut vars = Vec::new();
        if coeff.is_some() && self.eat('*') {
            vars.push(self.factor()?);
        }
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    vars.push(self.factor()?);
                }
                Some('X' | 'x') => vars.push(self.factor()?),
                _ => break,
            }
        }
        Ok((coeff.unwrap_or_else(GaussianRational::one), vars))
    }

    fn rational(&mut self) -> Result<GaussianRational, ParseError> {
        let start = self.pos;
        let num = self.digits().expect("caller checked for a digit");
        if !self.eat('/') {
            return Ok(num.parse::<GaussianRational>().expect("digits"));
        }
        let Some(den) = self.digits() else {
            return self.err("expected a denominator");
        };
        if den.bytes().all(|b| b == b'0') {
            return Err(ParseError::new(start, "zero denominator"));
        }
        Ok(format!("{num}/{den}").parse().expect("digits"))
    }

    fn paren_coeff(&mut self) -> Result<GaussianRational, ParseError> {
        self.eat('(');
        let start = self.pos;
        let Some(len) = self.src[start..].find(')') else {
            return self.err("unclosed '('");
        };
        let inner = &self.src[start..start + len];
        let c = inner
            .parse::<GaussianRational>()
            .map_err(|e| ParseError::new(start + e.position, e.message))?;
        self.pos = start + len + 1;
        Ok(c)
    }

    fn factor(&mut self) -> Result<(usize, u32), ParseError> {
        if !(self.eat('X') || self.eat('x')) {
            return self.err("expected a variable");
        }
        // no whitespace between the letter and its index
        let idx_start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let idx = match &self.src[idx_start..self.pos] {
            "" => 1,
            s => match s.parse::<usize>() {
                Ok(0) | Err(_) => return Err(ParseError::new(idx_start, "variable index must be a positive integer")),
                Ok(i) => i,
            },
        };
        let mut exp = 1;
        if self.eat('^') {
            let at = self.pos;
            let Some(d) = self.digits() else {
                return self.err("expected an exponent");
            };
            exp = d.parse::<u32>().map_err(|_| ParseError::new(at, "exponent too large"))?;
        }
        Ok((idx, exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn basic_forms() {
        let d = &MultiPoly::var(2, 0) - &MultiPoly::var(2, 1);
        assert_eq!(p("X1 - X2"), d);
        assert_eq!(p("x1-x2"), d);
        assert_eq!(p(" -X2 + X1 "), d);
        assert_eq!(p("3*X1^2*X2").to_string(), "3*X1^2*X2");
        assert_eq!(p("3 X1^2 X2"), p("3*X1^2*X2"));
        assert_eq!(p("X1^2X2"), p("X1^2*X2"));
        assert_eq!(p("X"), MultiPoly::var(1, 0));
        assert_eq!(p("1/2*X1 + (1/2-3/5i)*X2").to_string(), "1/2*X1 + (1/2-3/5i)*X2");
        assert_eq!(p("(1i)*X2 + 1").to_string(), "(1i)*X2 + 1");
        assert!(p("0").is_zero());
        assert!(p("X1 - X1").is_zero());
        assert_eq!(p("X1*X1"), p("X1^2"));
        assert_eq!(p("X3").num_vars(), 3);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_poly("X1 + * X2").unwrap_err();
        assert_eq!(e.position, 5);
        assert_eq!(parse_poly("X0").unwrap_err().position, 1);
        assert_eq!(parse_poly("1/0*X1").unwrap_err().position, 0);
        assert!(parse_poly("").is_err());
        assert!(parse_poly("X1 +").is_err());
        assert!(parse_poly("X1^").is_err());
        assert!(parse_poly("(1+2i*X1").is_err());
        assert_eq!(parse_poly("X1 Y").unwrap_err().position, 3);
        assert!(parse_poly("2 3").is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["X1^2 - 2*X1*X2 + X2^2", "-X1 + 7/3", "(2-i)*X1*X3^4 - (1/2i)", "X1^2*X2 + X1*X2^2"] {
            let a = p(s);
            let b = PolyExpr::parse_with_vars(&a.to_string(), a.num_vars()).unwrap();
            assert_eq!(b.poly(), &a, "{s}");
        }
    }
}
