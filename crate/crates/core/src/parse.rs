//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := [ '+' | '-' ] term { ( '+' | '-' ) term }
//! term   := factor { [ '*' ] factor }        juxtaposition multiplies
//! factor := atom [ '^' uint ]
//! atom   := uint | var | '(' expr ')'
//! ```
//!
//! Variables are restricted to `t` (univariate mode) or `x`, `y` (bivariate
//! mode). Coefficients stay exact integers so a parsed template can be
//! reduced modulo any prime later.

use std::fmt;

use crate::poly::{IntBivarPoly, IntPolyError, IntUnivarPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnknownVariable(char),
    NegativeExponent,
    ExponentTooLarge,
    IntegerOverflow,
    ExpansionTooLarge,
    EmptyInput,
    MissingSeparator,
    BadBranchOrder(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match &self.kind {
            UnexpectedChar(c) => write!(f, "syntax error at position {}: unexpected '{}'", self.pos, c),
            UnexpectedEnd => write!(f, "syntax error at position {}: unexpected end of input", self.pos),
            UnknownVariable(c) => write!(f, "unknown variable '{}' at position {}", c, self.pos),
            NegativeExponent => write!(f, "negative exponent at position {}", self.pos),
            ExponentTooLarge => write!(f, "exponent too large at position {}", self.pos),
            IntegerOverflow => write!(f, "integer overflow at position {}", self.pos),
            ExpansionTooLarge => write!(f, "expression expands to too many terms (position {})", self.pos),
            EmptyInput => write!(f, "empty polynomial expression"),
            MissingSeparator => write!(f, "expected \"<n>; <y(t)>\" with a single ';'"),
            BadBranchOrder(s) => write!(f, "invalid branch order '{}': expected a positive integer", s),
        }
    }
}

impl std::error::Error for ParseError {}

const MAX_EXPONENT: u64 = 1 << 20;

#[derive(Clone, Copy, PartialEq, Eq)]
enum VarSet {
    T,
    Xy,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: VarSet,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: VarSet) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
            vars,
        }
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            pos: self.pos,
            kind,
        }
    }

    fn lift(&self, e: IntPolyError) -> ParseError {
        match e {
            IntPolyError::Overflow => self.err(ParseErrorKind::IntegerOverflow),
            IntPolyError::TooManyTerms => self.err(ParseErrorKind::ExpansionTooLarge),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse_expr(&mut self) -> Result<IntBivarPoly, ParseError> {
        let mut acc = IntBivarPoly::zero();
        let mut sign = 1i128;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                sign = -1;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            Some(_) => {}
            None => return Err(self.err(ParseErrorKind::UnexpectedEnd)),
        }
        loop {
            let term = self.parse_term()?;
            let term = if sign < 0 { term.neg() } else { term };
            acc = acc.add(&term);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<IntBivarPoly, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.parse_factor()?;
                    acc = acc.mul(&rhs).map_err(|e| self.lift(e))?;
                }
                // Juxtaposition: "x^5y", "3x", "2(x+y)".
                Some(c) if c == b'(' || c.is_ascii_alphabetic() || c.is_ascii_digit() => {
                    let rhs = self.parse_factor()?;
                    acc = acc.mul(&rhs).map_err(|e| self.lift(e))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<IntBivarPoly, ParseError> {
        let base = self.parse_atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.parse_exponent()?;
            return base.pow(e).map_err(|e| self.lift(e));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<IntBivarPoly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(c) => Err(self.err(ParseErrorKind::UnexpectedChar(c as char))),
                    None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.parse_uint()?;
                Ok(IntBivarPoly::constant(v as i128))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let ok = match (self.vars, c) {
                    (VarSet::T, b't') => Some(IntBivarPoly::monomial(1, 0, 1)),
                    (VarSet::Xy, b'x') => Some(IntBivarPoly::monomial(1, 0, 1)),
                    (VarSet::Xy, b'y') => Some(IntBivarPoly::monomial(0, 1, 1)),
                    _ => None,
                };
                match ok {
                    Some(p) => {
                        self.pos += 1;
                        Ok(p)
                    }
                    None => Err(self.err(ParseErrorKind::UnknownVariable(c as char))),
                }
            }
            Some(c) => Err(self.err(ParseErrorKind::UnexpectedChar(c as char))),
            None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn parse_exponent(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(b'-') => Err(self.err(ParseErrorKind::NegativeExponent)),
            Some(c) if c.is_ascii_digit() => {
                let e = self.parse_uint()?;
                if e > MAX_EXPONENT {
                    return Err(self.err(ParseErrorKind::ExponentTooLarge));
                }
                Ok(e)
            }
            Some(c) => Err(self.err(ParseErrorKind::UnexpectedChar(c as char))),
            None => Err(self.err(ParseErrorKind::UnexpectedEnd)),
        }
    }

    fn parse_uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let mut v: u64 = 0;
        let mut any = false;
        while let Some(&c) = self.src.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            any = true;
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or_else(|| self.err(ParseErrorKind::IntegerOverflow))?;
            self.pos += 1;
        }
        if !any {
            return Err(self.err(ParseErrorKind::UnexpectedEnd));
        }
        Ok(v)
    }

    fn finish(mut self, poly: IntBivarPoly) -> Result<IntBivarPoly, ParseError> {
        match self.peek() {
            None => Ok(poly),
            Some(c) => Err(self.err(ParseErrorKind::UnexpectedChar(c as char))),
        }
    }
}

fn parse_with(src: &str, vars: VarSet) -> Result<IntBivarPoly, ParseError> {
    let mut p = Parser::new(src, vars);
    if p.peek().is_none() {
        return Err(p.err(ParseErrorKind::EmptyInput));
    }
    let poly = p.parse_expr()?;
    p.finish(poly)
}

/// Parses a univariate expression in `t`, e.g. `"t^6 + t^7"`.
pub fn parse_univar(src: &str) -> Result<IntUnivarPoly, ParseError> {
    let p = parse_with(src, VarSet::T)?;
    Ok(IntUnivarPoly::from_terms(
        p.terms().map(|((e, j), c)| {
            debug_assert_eq!(j, 0);
            (e, c)
        }),
    ))
}

/// Parses a bivariate expression in `x, y`, e.g. `"(y^2 + x^3)^2 + x^5*y"`.
pub fn parse_bivar(src: &str) -> Result<IntBivarPoly, ParseError> {
    parse_with(src, VarSet::Xy)
}

/// Parses a parametrization spec of the form `"<n>; <y(t)>"`.
pub fn parse_param_spec(src: &str) -> Result<(u64, IntUnivarPoly), ParseError> {
    let mut parts = src.splitn(2, ';');
    let head = parts.next().unwrap_or("");
    let tail = parts.next().ok_or(ParseError {
        pos: 0,
        kind: ParseErrorKind::MissingSeparator,
    })?;
    let n: u64 = head.trim().parse().map_err(|_| ParseError {
        pos: 0,
        kind: ParseErrorKind::BadBranchOrder(head.trim().to_string()),
    })?;
    let y = parse_univar(tail)?;
    Ok((n, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn univariate_examples() {
        let y = parse_univar("t^6 + t^7").unwrap();
        assert_eq!(y, IntUnivarPoly::from_terms([(6, 1), (7, 1)]));
        assert_eq!(parse_univar("t").unwrap(), IntUnivarPoly::from_terms([(1, 1)]));
        assert_eq!(
            parse_univar("3t^2 - t^2").unwrap(),
            IntUnivarPoly::from_terms([(2, 2)])
        );
    }

    #[test]
    fn bivariate_examples() {
        // (y^2 + x^3)^2 + x^5*y expands with integer coefficients
        let f = parse_bivar("(y^2 + x^3)^2 + x^5*y").unwrap();
        assert_eq!(
            f,
            IntBivarPoly::from_terms([
                ((0, 4), 1),
                ((3, 2), 2),
                ((6, 0), 1),
                ((5, 1), 1),
            ])
        );
        let g = parse_bivar("x^7 + y^6 + x^6*y").unwrap();
        assert_eq!(
            g,
            IntBivarPoly::from_terms([((7, 0), 1), ((0, 6), 1), ((6, 1), 1)])
        );
        // juxtaposition
        assert_eq!(parse_bivar("x^5y").unwrap(), parse_bivar("x^5*y").unwrap());
        assert_eq!(parse_bivar("2x").unwrap(), IntBivarPoly::monomial(1, 0, 2));
        assert_eq!(
            parse_bivar("(1+x)(x^5+y^4)").unwrap(),
            parse_bivar("x^5 + y^4 + x^6 + x*y^4").unwrap()
        );
    }

    #[test]
    fn subtraction_and_signs() {
        assert_eq!(
            parse_bivar("y^2 - x^3").unwrap(),
            IntBivarPoly::from_terms([((0, 2), 1), ((3, 0), -1)])
        );
        assert_eq!(
            parse_bivar("-x + x").unwrap(),
            IntBivarPoly::zero()
        );
    }

    #[test]
    fn error_positions() {
        let e = parse_univar("t^6 + %").unwrap_err();
        assert_eq!(e.pos, 6);
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedChar('%')));

        let e = parse_univar("x^2").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnknownVariable('x')));

        let e = parse_bivar("x^-2").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::NegativeExponent));

        let e = parse_bivar("z + 1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnknownVariable('z')));

        let e = parse_bivar("").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::EmptyInput));

        let e = parse_bivar("(x + y").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::UnexpectedEnd));

        let e = parse_bivar("x^9999999999").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::ExponentTooLarge));
    }

    #[test]
    fn param_spec() {
        let (n, y) = parse_param_spec("4; t^6+t^7").unwrap();
        assert_eq!(n, 4);
        assert_eq!(y, IntUnivarPoly::from_terms([(6, 1), (7, 1)]));
        assert!(parse_param_spec("t^6+t^7").is_err());
        assert!(parse_param_spec("four; t^6").is_err());
    }
}
