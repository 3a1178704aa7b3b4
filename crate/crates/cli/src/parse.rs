//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar:
//!   expr   := ['-'] term (('+' | '-') term)*
//!   term   := factor ('*' factor)*
//!   factor := base ('^' natlit)?
//!   base   := intlit | fraclit | 't' | '(' expr ')'
//!
//! Fractions are literal-only ("1/2"); exponents are nonnegative integer
//! literals. Whitespace is insignificant between tokens.

use std::fmt;

use polyabc::{FieldDesc, Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax { offset: usize, message: String },
    LiteralOutOfField { offset: usize, literal: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { offset, message } => {
                write!(f, "syntax error at offset {offset}: {message}")
            }
            ParseError::LiteralOutOfField { offset, literal } => {
                write!(f, "literal {literal:?} at offset {offset} is not a field element")
            }
        }
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: FieldDesc,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    // digits only, no sign; errors on overflow past i64
    fn natlit(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(d) = self.src.get(self.pos).copied().filter(u8::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((d - b'0') as i64))
                .ok_or(ParseError::Syntax {
                    offset: start,
                    message: "integer literal too large".into(),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return self.syntax("expected an integer literal");
        }
        Ok(value)
    }

    fn base(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.syntax("expected ')'");
                }
                Ok(inner)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Poly::var(self.field))
            }
            Some(d) if d.is_ascii_digit() => {
                let start = self.pos;
                let num = self.natlit()?;
                if self.eat(b'/') {
                    let den_at = self.pos;
                    let den = self.natlit()?;
                    let elem = self.field.from_fraction(num, den).map_err(|_| {
                        ParseError::LiteralOutOfField {
                            offset: start,
                            literal: format!("{num}/{den}"),
                        }
                    })?;
                    let _ = den_at;
                    Ok(Poly::constant(self.field, elem))
                } else {
                    Ok(Poly::constant(self.field, self.field.from_integer(num)))
                }
            }
            _ => self.syntax("expected 't', a literal, or '('"),
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let b = self.base()?;
        if self.eat(b'^') {
            let n = self.natlit()?;
            if n > u32::MAX as i64 {
                return self.syntax("exponent too large");
            }
            Ok(b.pow(n as usize))
        } else {
            Ok(b)
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }
}

/// Parses an expression into a canonical polynomial; rejects trailing input.
pub fn parse_poly(text: &str, field: FieldDesc) -> Result<Poly, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
    };
    let poly = p.expr()?;
    if p.peek().is_some() {
        return p.syntax("unexpected trailing input");
    }
    Ok(poly)
}

/// Canonical descending-degree rendering; inverse of [`parse_poly`].
pub fn format_poly(p: &Poly) -> String {
    p.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDesc {
        FieldDesc::rationals()
    }

    fn fp(p: u64) -> FieldDesc {
        FieldDesc::prime_field(p).unwrap()
    }

    #[test]
    fn basic_parsing() {
        let p = parse_poly("t^3 - 2*t + 1", q()).unwrap();
        assert_eq!(p, Poly::from_ints(q(), &[1, -2, 0, 1]));
        assert_eq!(format_poly(&p), "t^3 - 2*t + 1");
    }

    #[test]
    fn frobenius_under_parse() {
        let p = parse_poly("(1+t)^5", fp(5)).unwrap();
        assert_eq!(p, Poly::from_ints(fp(5), &[1, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn syntax_error_offsets() {
        match parse_poly("t^^2", q()) {
            Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse_poly("", q()).is_err());
        assert!(parse_poly("t + ", q()).is_err());
        assert!(parse_poly("(t", q()).is_err());
        assert!(parse_poly("t 1", q()).is_err());
        assert!(parse_poly("x", q()).is_err());
    }

    #[test]
    fn fractions_and_fields() {
        let p = parse_poly("1/2*t + 3", q()).unwrap();
        assert_eq!(format_poly(&p), "1/2*t + 3");
        match parse_poly("1/2", fp(2)) {
            Err(ParseError::LiteralOutOfField { literal, .. }) => assert_eq!(literal, "1/2"),
            other => panic!("expected literal error, got {other:?}"),
        }
        // 1/3 = 2 over F_5
        let p = parse_poly("1/3", fp(5)).unwrap();
        assert_eq!(p, Poly::from_ints(fp(5), &[2]));
    }

    #[test]
    fn unary_minus_and_parens() {
        let p = parse_poly("-t^5", fp(5)).unwrap();
        assert_eq!(format_poly(&p), "4*t^5");
        let p = parse_poly("-(t - 1)*(t + 1)", q()).unwrap();
        assert_eq!(p, Poly::from_ints(q(), &[1, 0, -1]));
    }

    #[test]
    fn roundtrip_random() {
        use polyabc::FieldElem;
        // lightweight deterministic congruential stream, enough for coverage
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for field in [q(), fp(2), fp(3), fp(5), fp(7)] {
            for _ in 0..200 {
                let deg = (next() % 7) as usize;
                let coeffs: Vec<FieldElem> = (0..=deg)
                    .map(|_| {
                        let n = (next() % 21) as i64 - 10;
                        field.from_integer(n)
                    })
                    .collect();
                let p = Poly::new(field, coeffs);
                let rendered = format_poly(&p);
                let back = parse_poly(&rendered, field).unwrap();
                assert_eq!(back, p, "roundtrip failed for {rendered:?}");
            }
        }
    }
}
