//! Text syntax for polynomials: `3/2*x1^2*x2 - x3 + 1`.
//!
//! Terms are separated by `+` or `-`; a term is an optional rational
//! coefficient followed by variable factors with optional `^` exponents.
//! The `*` between the coefficient and the first variable may be omitted.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::Polynomial;
use super::ring::{Monomial, RingSpec};

/// Parse failure with a 1-based character column into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {col}: {msg}")]
pub struct PolyParseError {
    pub col: usize,
    pub msg: String,
}

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    _src: &'a str,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { chars: src.chars().collect(), pos: 0, _src: src }
    }

    fn col(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Result<Option<(Tok, usize)>, PolyParseError> {
        let save = self.pos;
        self.skip_ws();
        let at = self.pos;
        let tok = self.next_token()?;
        self.pos = save;
        Ok(tok.map(|t| (t, at)))
    }

    fn next_token(&mut self) -> Result<Option<Tok>, PolyParseError> {
        self.skip_ws();
        if self.pos >= self.chars.len() {
            return Ok(None);
        }
        let c = self.chars[self.pos];
        let tok = match c {
            '+' => {
                self.pos += 1;
                Tok::Plus
            }
            '-' => {
                self.pos += 1;
                Tok::Minus
            }
            '*' => {
                self.pos += 1;
                Tok::Star
            }
            '^' => {
                self.pos += 1;
                Tok::Caret
            }
            '/' => {
                self.pos += 1;
                Tok::Slash
            }
            c if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                Tok::Int(s.parse().expect("digit run parses as integer"))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                Tok::Ident(self.chars[start..self.pos].iter().collect())
            }
            other => {
                return Err(PolyParseError {
                    col: self.col(),
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        Ok(Some(tok))
    }
}

/// Parses a polynomial in the given ring.
pub fn parse_polynomial(src: &str, ring: &Arc<RingSpec>) -> Result<Polynomial, PolyParseError> {
    let mut lex = Lexer::new(src);
    let mut terms: Vec<(Monomial, BigRational)> = Vec::new();

    let mut sign = BigRational::one();
    let mut expect_term = true;
    match lex.peek()? {
        None => {
            return Err(PolyParseError { col: 1, msg: "empty polynomial".into() });
        }
        Some((Tok::Minus, _)) => {
            lex.next_token()?;
            sign = -sign;
        }
        Some((Tok::Plus, at)) => {
            return Err(PolyParseError { col: at + 1, msg: "leading `+` is not allowed".into() });
        }
        _ => {}
    }

    loop {
        if expect_term {
            let (mono, coeff) = parse_term(&mut lex, ring)?;
            terms.push((mono, coeff * &sign));
            expect_term = false;
            continue;
        }
        match lex.next_token()? {
            None => break,
            Some(Tok::Plus) => {
                sign = BigRational::one();
                expect_term = true;
            }
            Some(Tok::Minus) => {
                sign = -BigRational::one();
                expect_term = true;
            }
            Some(tok) => {
                return Err(PolyParseError {
                    col: lex.col(),
                    msg: format!("expected `+` or `-`, found {}", describe(&tok)),
                });
            }
        }
    }

    Ok(Polynomial::from_terms(ring.clone(), terms))
}

fn parse_term(
    lex: &mut Lexer,
    ring: &Arc<RingSpec>,
) -> Result<(Monomial, BigRational), PolyParseError> {
    let mut coeff = BigRational::one();
    let mut exps = vec![0u32; ring.num_vars()];
    let mut saw_factor = false;
    let mut saw_coeff = false;

    loop {
        let Some((tok, at)) = lex.peek()? else {
            break;
        };
        match tok {
            Tok::Int(_) => {
                if saw_factor || saw_coeff {
                    return Err(PolyParseError {
                        col: at + 1,
                        msg: "number is only allowed at the start of a term".into(),
                    });
                }
                lex.next_token()?;
                let Some(Tok::Int(numer)) = Some(tok) else { unreachable!() };
                let mut value = BigRational::from(numer);
                if let Some((Tok::Slash, _)) = lex.peek()? {
                    lex.next_token()?;
                    match lex.next_token()? {
                        Some(Tok::Int(denom)) => {
                            if denom == BigInt::from(0) {
                                return Err(PolyParseError {
                                    col: lex.col(),
                                    msg: "zero denominator".into(),
                                });
                            }
                            value /= BigRational::from(denom);
                        }
                        _ => {
                            return Err(PolyParseError {
                                col: lex.col(),
                                msg: "expected integer after `/`".into(),
                            })
                        }
                    }
                }
                coeff *= value;
                saw_coeff = true;
            }
            Tok::Ident(name) => {
                lex.next_token()?;
                let Some(idx) = ring.var_index(&name) else {
                    return Err(PolyParseError {
                        col: at + 1,
                        msg: format!("unknown variable `{name}`"),
                    });
                };
                let mut exp = 1u32;
                if let Some((Tok::Caret, _)) = lex.peek()? {
                    lex.next_token()?;
                    match lex.next_token()? {
                        Some(Tok::Int(e)) => {
                            exp = e.try_into().map_err(|_| PolyParseError {
                                col: lex.col(),
                                msg: "exponent too large".into(),
                            })?;
                        }
                        _ => {
                            return Err(PolyParseError {
                                col: lex.col(),
                                msg: "expected integer exponent after `^`".into(),
                            })
                        }
                    }
                }
                exps[idx] += exp;
                saw_factor = true;
            }
            Tok::Star => {
                if !saw_factor && !saw_coeff {
                    return Err(PolyParseError {
                        col: at + 1,
                        msg: "term cannot start with `*`".into(),
                    });
                }
                lex.next_token()?;
                // `*` joins factors; a variable must follow.
                match lex.peek()? {
                    Some((Tok::Ident(_), _)) => continue,
                    _ => {
                        return Err(PolyParseError {
                            col: lex.col() + 1,
                            msg: "expected variable after `*`".into(),
                        })
                    }
                }
            }
            Tok::Plus | Tok::Minus => break,
            Tok::Caret | Tok::Slash => {
                return Err(PolyParseError {
                    col: at + 1,
                    msg: format!("unexpected {}", describe(&tok)),
                })
            }
        }
        // The term continues on an explicit `*`, or implicitly from a
        // coefficient onto a variable (`3x`); anything else ends it.
        match lex.peek()? {
            Some((Tok::Star, _)) => continue,
            Some((Tok::Ident(_), _)) if saw_coeff && !saw_factor => continue,
            _ => break,
        }
    }

    if !saw_factor && !saw_coeff {
        return Err(PolyParseError { col: lex.col(), msg: "expected a term".into() });
    }
    Ok((Monomial::new(exps), coeff))
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Int(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Slash => "`/`".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> Arc<RingSpec> {
        RingSpec::standard(vec!["x1".into(), "x2".into(), "x3".into()]).unwrap()
    }

    #[test]
    fn parses_documented_syntax() {
        let ring = ring3();
        let p = parse_polynomial("3/2*x1^2*x2 - x3 + 1", &ring).unwrap();
        assert_eq!(p.to_string(), "3/2*x1^2*x2 - x3 + 1");
    }

    #[test]
    fn round_trips_through_display() {
        let ring = ring3();
        for src in ["x1 + x2", "-x1^2 + 2*x1*x2 - 1", "2/3", "x1*x2*x3"] {
            let p = parse_polynomial(src, &ring).unwrap();
            let q = parse_polynomial(&p.to_string(), &ring).unwrap();
            assert_eq!(p, q, "round trip failed for {src}");
        }
    }

    #[test]
    fn coefficient_juxtaposition() {
        let ring = ring3();
        let p = parse_polynomial("3x1", &ring).unwrap();
        assert_eq!(p.to_string(), "3*x1");
        let q = parse_polynomial("1/2x1^2", &ring).unwrap();
        assert_eq!(q.to_string(), "1/2*x1^2");
    }

    #[test]
    fn repeated_variable_accumulates() {
        let ring = ring3();
        let p = parse_polynomial("x1*x1", &ring).unwrap();
        assert_eq!(p.to_string(), "x1^2");
    }

    #[test]
    fn unknown_variable_reports_column() {
        let ring = ring3();
        let err = parse_polynomial("x1 + zz", &ring).unwrap_err();
        assert_eq!(err.col, 6);
        assert!(err.msg.contains("zz"));
    }

    #[test]
    fn malformed_inputs_rejected() {
        let ring = ring3();
        assert!(parse_polynomial("", &ring).is_err());
        assert!(parse_polynomial("x1 +", &ring).is_err());
        assert!(parse_polynomial("^2", &ring).is_err());
        assert!(parse_polynomial("1/0", &ring).is_err());
        assert!(parse_polynomial("x1 x2", &ring).is_err());
        assert!(parse_polynomial("3 4", &ring).is_err());
    }
}
