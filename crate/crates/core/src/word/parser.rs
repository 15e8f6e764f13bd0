//! Recursive-descent parser for the commutator-word language.
//!
//! ```text
//! law     := term "=" term
//! term    := factor { ["*"] factor }
//! factor  := primary [ "^" ( signed_int | primary ) ]
//! primary := ident | "1" | "(" term ")"
//!          | "[" term { "," term } [ ";" term { "," term } ] "]"
//! ident   := letter { digit | "_" }
//! ```
//!
//! After `^` an integer always wins, so `x^-1` is an inverse and `x^y` a
//! conjugate. `x^-1` becomes [`Term::Inverse`]; other exponents in `[-32, 32]`
//! become [`Term::Power`]. Brackets nest to the left, and
//! `[u1,…,uj; v1,…,vk]` is the bracket of the two left-nested halves.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::term::Term;
use super::Law;

pub const MAX_EXPONENT: i64 = 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("exponent {value} at position {position} is outside [-32, 32]")]
    ExponentRange { position: usize, value: i64 },
    #[error("law has no '='")]
    MissingEquals,
    #[error("second '=' at position {position}")]
    RepeatedEquals { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(i64),
    Caret,
    Minus,
    Star,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Semi,
    Equals,
}

fn describe(tok: Option<&Tok>) -> String {
    match tok {
        None => "end of input".to_string(),
        Some(Tok::Ident(s)) => alloc::format!("identifier {s:?}"),
        Some(Tok::Number(n)) => alloc::format!("number {n}"),
        Some(t) => {
            let s = match t {
                Tok::Caret => "'^'",
                Tok::Minus => "'-'",
                Tok::Star => "'*'",
                Tok::LParen => "'('",
                Tok::RParen => "')'",
                Tok::LBrack => "'['",
                Tok::RBrack => "']'",
                Tok::Comma => "','",
                Tok::Semi => "';'",
                _ => "'='",
            };
            s.to_string()
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'^' => Tok::Caret,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBrack,
            b']' => Tok::RBrack,
            b',' => Tok::Comma,
            b';' => Tok::Semi,
            b'=' => Tok::Equals,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value = input[start..i].parse::<i64>().unwrap_or(i64::MAX);
                out.push((start, Tok::Number(value)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                i += 1;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(input[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = input[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    position: start,
                    message: alloc::format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(input: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: tokenize(input)?, pos: 0, end: input.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { position: self.offset(), message: message.into() })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(alloc::format!("expected {what}, found {}", describe(self.peek())))
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(_) | Tok::Number(_) | Tok::LParen | Tok::LBrack))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let rhs = self.factor()?;
            acc = Term::product(acc, rhs);
        }
    }

    fn factor(&mut self) -> Result<Term, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(Tok::Minus | Tok::Number(_)) => {
                let position = self.offset();
                let negative = self.peek() == Some(&Tok::Minus);
                if negative {
                    self.pos += 1;
                }
                let Some(Tok::Number(magnitude)) = self.peek().cloned() else {
                    return self.error("expected an integer after '-'");
                };
                self.pos += 1;
                let value = if negative { -magnitude } else { magnitude };
                if value.abs() > MAX_EXPONENT {
                    return Err(ParseError::ExponentRange { position, value });
                }
                Ok(match value {
                    -1 => Term::inverse(base),
                    k => Term::power(base, k as i32),
                })
            }
            _ => {
                let by = self.primary()?;
                Ok(Term::conjugate(base, by))
            }
        }
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        let position = self.offset();
        match self.bump() {
            Some(Tok::Ident(name)) => Ok(Term::Var(name)),
            Some(Tok::Number(1)) => Ok(Term::One),
            Some(Tok::Number(n)) => Err(ParseError::Syntax {
                position,
                message: alloc::format!("only the identity literal 1 may appear as a term, found {n}"),
            }),
            Some(Tok::LParen) => {
                let t = self.term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(t)
            }
            Some(Tok::LBrack) => self.bracket(position),
            other => {
                self.pos -= 1;
                self.error(alloc::format!("expected a term, found {}", describe(other.as_ref())))
            }
        }
    }

    fn bracket(&mut self, open: usize) -> Result<Term, ParseError> {
        let left = self.term_list()?;
        if self.peek() == Some(&Tok::Semi) {
            self.pos += 1;
            let right = self.term_list()?;
            self.expect(Tok::RBrack, "']'")?;
            let l = Term::left_nest(left).expect("nonempty");
            let r = Term::left_nest(right).expect("nonempty");
            return Ok(Term::bracket(l, r));
        }
        self.expect(Tok::RBrack, "']'")?;
        if left.len() < 2 {
            return Err(ParseError::Syntax { position: open, message: "a bracket needs at least two entries".into() });
        }
        Ok(Term::left_nest(left).expect("nonempty"))
    }

    fn term_list(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut items = alloc::vec![self.term()?];
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
            items.push(self.term()?);
        }
        Ok(items)
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::Equals) => Err(ParseError::RepeatedEquals { position: self.offset() }),
            other => self.error(alloc::format!("unexpected {}", describe(other))),
        }
    }
}

pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(input)?;
    if p.peek().is_none() {
        return p.error("empty input");
    }
    let t = p.term()?;
    if p.peek() == Some(&Tok::Equals) {
        return p.error("a term may not contain '='");
    }
    p.finish()?;
    Ok(t)
}

pub fn parse_law(input: &str) -> Result<Law, ParseError> {
    let mut p = Parser::new(input)?;
    if !p.toks.iter().any(|(_, t)| *t == Tok::Equals) {
        return Err(ParseError::MissingEquals);
    }
    let lhs = p.term()?;
    p.expect(Tok::Equals, "'='")?;
    let rhs = p.term()?;
    p.finish()?;
    Ok(Law::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Term {
        Term::var(name)
    }

    #[test]
    fn semicolon_bracket() {
        let t = parse_term("[x,y;x,z]").unwrap();
        assert_eq!(t, Term::bracket(Term::bracket(v("x"), v("y")), Term::bracket(v("x"), v("z"))));
        assert_eq!(t, parse_term("[[x,y],[x,z]]").unwrap());
    }

    #[test]
    fn left_normed_multi_commutators() {
        let t = parse_term("[x,y,z]").unwrap();
        assert_eq!(t, Term::bracket(Term::bracket(v("x"), v("y")), v("z")));
        assert_ne!(t, parse_term("[x,[y,z]]").unwrap());
        assert_eq!(parse_term("[x,y,z,u]").unwrap(), parse_term("[[[x,y],z],u]").unwrap());
        assert_eq!(parse_term("[x,y;x,u,v]").unwrap(), parse_term("[[x,y],[[x,u],v]]").unwrap());
    }

    #[test]
    fn identity_literal() {
        assert_eq!(parse_term("1").unwrap(), Term::One);
        assert!(parse_term("2").is_err());
    }

    #[test]
    fn exponents_and_conjugates() {
        assert_eq!(parse_term("a^-1").unwrap(), Term::inverse(v("a")));
        assert_eq!(parse_term("a^b").unwrap(), Term::conjugate(v("a"), v("b")));
        assert_eq!(parse_term("a^1").unwrap(), Term::power(v("a"), 1));
        assert_eq!(parse_term("a^(1)").unwrap(), Term::conjugate(v("a"), Term::One));
        assert_eq!(parse_term("[x,y]^2").unwrap(), Term::power(Term::bracket(v("x"), v("y")), 2));
        assert_eq!(parse_term("a^-32").unwrap(), Term::power(v("a"), -32));
        assert!(matches!(parse_term("a^33"), Err(ParseError::ExponentRange { value: 33, .. })));
        assert!(matches!(parse_term("a^-40"), Err(ParseError::ExponentRange { value: -40, .. })));
    }

    #[test]
    fn conjugated_bracket_after_semicolon() {
        let t = parse_term("[x,y;[x,z]^u]").unwrap();
        let rhs = Term::conjugate(Term::bracket(v("x"), v("z")), v("u"));
        assert_eq!(t, Term::bracket(Term::bracket(v("x"), v("y")), rhs));
    }

    #[test]
    fn products_associate_left() {
        let abc = Term::product(Term::product(v("a"), v("b")), v("c"));
        assert_eq!(parse_term("a*b*c").unwrap(), abc);
        assert_eq!(parse_term("a b c").unwrap(), abc);
        assert_eq!(parse_term("a*b^-1").unwrap(), Term::product(v("a"), Term::inverse(v("b"))));
        assert_eq!(
            parse_term("[x,y,z][y,z,x]").unwrap(),
            Term::product(parse_term("[x,y,z]").unwrap(), parse_term("[y,z,x]").unwrap())
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse_term("[x,y"),
            Err(ParseError::Syntax { position: 4, message: "expected ']', found end of input".into() })
        );
        assert!(matches!(parse_term("[x]"), Err(ParseError::Syntax { position: 0, .. })));
        assert!(matches!(parse_term("x + y"), Err(ParseError::Syntax { position: 2, .. })));
        assert!(matches!(parse_term(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_term("x^-"), Err(ParseError::Syntax { position: 3, .. })));
        assert!(matches!(parse_term("x)"), Err(ParseError::Syntax { position: 1, .. })));
    }

    #[test]
    fn laws() {
        let law = parse_law("[x,y;x,z] = 1").unwrap();
        assert_eq!(law.variables(), ["x", "y", "z"]);
        let ci = parse_law("[w,x;y,z] = [w,y;x,z]").unwrap();
        assert_eq!(ci.variables(), ["w", "x", "y", "z"]);
        let triv = parse_law("x = x").unwrap();
        assert_eq!(triv.lhs(), triv.rhs());
        assert_eq!(parse_law("[x,y]"), Err(ParseError::MissingEquals));
        assert_eq!(parse_law("x = y = z"), Err(ParseError::RepeatedEquals { position: 6 }));
        assert!(parse_term("x = y").is_err());
    }
}
