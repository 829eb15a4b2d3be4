//! Recursive-descent parser for the text grammars: algebraic-number
//! constants, polynomials, rational functions, sign conditions and
//! semi-algebraic sets. Printing of every type is canonical, and parsing a
//! canonical print is the identity.

use crate::error::{Error, Result};
use crate::exactnum::{is_square_free, AlgNum};
use crate::poly::{Poly, RatFunc};
use crate::semialg::{BasicSet, Relation, SemiAlgSet, SignCondition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Pipe,
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize, usize)>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l, co) = (line, col);
        let mut push = |t: Tok| out.push((t, l, co));
        match c {
            '\n' => {
                line += 1;
                col = 0;
            }
            c if c.is_whitespace() => {}
            '+' => push(Tok::Plus),
            '-' => push(Tok::Minus),
            '*' => push(Tok::Star),
            '/' => push(Tok::Slash),
            '^' => push(Tok::Caret),
            '(' => push(Tok::LParen),
            ')' => push(Tok::RParen),
            '{' => push(Tok::LBrace),
            '}' => push(Tok::RBrace),
            ',' => push(Tok::Comma),
            '|' => push(Tok::Pipe),
            '=' => push(Tok::Eq),
            '<' => {
                if chars.get(i + 1) == Some(&'=') {
                    push(Tok::Le);
                    i += 1;
                    col += 1;
                } else {
                    push(Tok::Lt);
                }
            }
            '>' => {
                if chars.get(i + 1) == Some(&'=') {
                    push(Tok::Ge);
                    i += 1;
                    col += 1;
                } else {
                    push(Tok::Gt);
                }
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    col += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                out.push((Tok::Int(s.parse().expect("digits")), l, co));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                    col += 1;
                }
                let s: String = chars[start..=i].iter().collect();
                out.push((Tok::Ident(s), l, co));
            }
            other => {
                return Err(Error::Parse { line, col, msg: format!("unexpected character '{}'", other) })
            }
        }
        i += 1;
        col += 1;
    }
    out.push((Tok::End, line, col));
    Ok(out)
}

struct Parser<'a> {
    lexer: Lexer,
    vars: Vec<String>,
    radicand: u64,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &[&str], radicand: u64) -> Result<Self> {
        Ok(Parser {
            lexer: Lexer { toks: lex(src)?, pos: 0 },
            vars: vars.iter().map(|s| s.to_string()).collect(),
            radicand,
            _src: src,
        })
    }

    fn peek(&self) -> &Tok {
        &self.lexer.toks[self.lexer.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = &self.lexer.toks[self.lexer.pos];
        (*l, *c)
    }

    fn bump(&mut self) -> Tok {
        let t = self.lexer.toks[self.lexer.pos].0.clone();
        if self.lexer.pos + 1 < self.lexer.toks.len() {
            self.lexer.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(Error::Parse { line, col, msg: msg.into() })
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {:?}, found {:?}", t, self.peek()))
        }
    }

    fn var_names(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = match acc.div(&rhs) {
                        Ok(v) => v,
                        Err(_) => return self.err("division by zero"),
                    };
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let e = match self.bump() {
                Tok::Int(n) => n,
                _ => return self.err("exponent must be a nonnegative integer"),
            };
            let e: u32 = match e.to_string().parse() {
                Ok(v) => v,
                Err(_) => return self.err("exponent out of range"),
            };
            let num = base.num().pow(e);
            let den = base.den().pow(e);
            return RatFunc::new(num, den);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<RatFunc> {
        let vn = self.var_names();
        match self.bump() {
            Tok::Int(n) => Ok(RatFunc::constant(
                &vn,
                AlgNum::from_rational(BigRational::from_integer(n)),
            )),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "sqrt" => {
                self.expect(Tok::LParen)?;
                let n = match self.bump() {
                    Tok::Int(n) => n,
                    _ => return self.err("sqrt takes a nonnegative integer"),
                };
                self.expect(Tok::RParen)?;
                let n: u64 = match n.to_string().parse() {
                    Ok(v) => v,
                    Err(_) => return self.err("radicand out of range"),
                };
                let v = self.sqrt_value(n)?;
                Ok(RatFunc::constant(&vn, v))
            }
            Tok::Ident(name) => {
                if self.vars.iter().any(|v| *v == name) {
                    Ok(RatFunc::from_poly(Poly::var(&vn, &name)))
                } else {
                    self.err(format!("unknown variable '{}'", name))
                }
            }
            other => self.err(format!("unexpected token {:?}", other)),
        }
    }

    /// √n with the square part pulled out; the square-free part must match
    /// the context radicand.
    fn sqrt_value(&self, n: u64) -> Result<AlgNum> {
        if n == 0 {
            return Ok(AlgNum::zero());
        }
        let mut square = 1u64;
        let mut rest = n;
        let mut p = 2u64;
        while p * p <= rest {
            while rest % (p * p) == 0 {
                square *= p;
                rest /= p * p;
            }
            p += 1;
        }
        debug_assert!(is_square_free(rest) || rest == 1);
        let sq = AlgNum::from_int(square as i64);
        if rest == 1 {
            return Ok(sq);
        }
        if self.radicand != 0 && rest != self.radicand {
            return Err(Error::RadicandMismatch(self.radicand, rest));
        }
        Ok(sq.checked_mul(&AlgNum::sqrt(rest)?).expect("radicand"))
    }

    fn relation(&mut self) -> Option<Tok> {
        match self.peek() {
            Tok::Lt | Tok::Le | Tok::Gt | Tok::Ge | Tok::Eq => Some(self.bump()),
            _ => None,
        }
    }

    /// One condition, possibly chained: `a < b < c` yields two conditions.
    fn condition(&mut self) -> Result<Vec<SignCondition>> {
        let first = self.expr()?;
        let mut out = Vec::new();
        let mut lhs = first;
        let mut any = false;
        while let Some(rel) = self.relation() {
            any = true;
            let rhs = self.expr()?;
            let cond = self.make_condition(&lhs, &rel, &rhs)?;
            out.push(cond);
            lhs = rhs;
        }
        if !any {
            return self.err("expected a relation (<, <=, >, >=, =)");
        }
        Ok(out)
    }

    fn make_condition(&self, lhs: &RatFunc, rel: &Tok, rhs: &RatFunc) -> Result<SignCondition> {
        let to_poly = |r: &RatFunc| -> Result<Poly> {
            let c = r
                .den()
                .constant_value()
                .ok_or_else(|| Error::Invalid("condition sides must be polynomial".into()))?;
            Ok(r.num().scale(&c.inverse().expect("nonzero denominator")))
        };
        let l = to_poly(lhs)?;
        let r = to_poly(rhs)?;
        let (poly, relation) = match rel {
            Tok::Gt => (l.sub(&r), Relation::Gt),
            Tok::Ge => (l.sub(&r), Relation::Ge),
            Tok::Lt => (r.sub(&l), Relation::Gt),
            Tok::Le => (r.sub(&l), Relation::Ge),
            Tok::Eq => (l.sub(&r), Relation::Eq),
            _ => unreachable!(),
        };
        Ok(SignCondition::new(poly, relation))
    }

    fn basic_set(&mut self) -> Result<BasicSet> {
        self.expect(Tok::LBrace)?;
        let mut conds = Vec::new();
        if *self.peek() == Tok::RBrace {
            self.bump();
            return Ok(BasicSet::new(conds));
        }
        loop {
            conds.extend(self.condition()?);
            match self.bump() {
                Tok::Comma => continue,
                Tok::RBrace => break,
                t => return self.err(format!("expected ',' or '}}', found {:?}", t)),
            }
        }
        Ok(BasicSet::new(conds))
    }

    fn set(&mut self) -> Result<SemiAlgSet> {
        let mut pieces = vec![self.basic_set()?];
        while *self.peek() == Tok::Pipe {
            self.bump();
            pieces.push(self.basic_set()?);
        }
        Ok(SemiAlgSet::new(self.vars.clone(), pieces))
    }

    fn finish(&mut self) -> Result<()> {
        if *self.peek() != Tok::End {
            return self.err(format!("trailing input: {:?}", self.peek()));
        }
        Ok(())
    }
}

/// Parses a rational-function expression over the given variables.
pub fn parse_ratfunc(src: &str, vars: &[&str], radicand: u64) -> Result<RatFunc> {
    let mut p = Parser::new(src, vars, radicand)?;
    let r = p.expr()?;
    p.finish()?;
    Ok(r)
}

/// Parses a polynomial (a rational expression with constant denominator).
pub fn parse_poly(src: &str, vars: &[&str], radicand: u64) -> Result<Poly> {
    let r = parse_ratfunc(src, vars, radicand)?;
    let c = r
        .den()
        .constant_value()
        .ok_or_else(|| Error::Invalid("expected a polynomial, found a proper fraction".into()))?;
    Ok(r.num().scale(&c.inverse().expect("nonzero denominator")))
}

/// Parses an algebraic-number constant.
pub fn parse_algnum(src: &str, radicand: u64) -> Result<AlgNum> {
    let r = parse_ratfunc(src, &[], radicand)?;
    let num = r
        .num()
        .constant_value()
        .ok_or_else(|| Error::Invalid("expected a constant".into()))?;
    let den = r.den().constant_value().expect("constant denominator");
    num.checked_div(&den)
}

/// Parses a semi-algebraic set: `{ conds } | { conds } | ...`.
pub fn parse_set(src: &str, vars: &[&str], radicand: u64) -> Result<SemiAlgSet> {
    let mut p = Parser::new(src, vars, radicand)?;
    let s = p.set()?;
    p.finish()?;
    Ok(s)
}

/// Parses a single condition list (contents of one basic set, no braces).
pub fn parse_conditions(src: &str, vars: &[&str], radicand: u64) -> Result<Vec<SignCondition>> {
    let mut p = Parser::new(src, vars, radicand)?;
    let mut out = Vec::new();
    loop {
        out.extend(p.condition()?);
        if *p.peek() == Tok::Comma {
            p.bump();
            continue;
        }
        break;
    }
    p.finish()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals_and_surds() {
        let a = parse_algnum("1/2 + 1/3", 0).unwrap();
        assert_eq!(a, AlgNum::rational(5, 6));
        let b = parse_algnum("sqrt(2)*sqrt(2)", 2).unwrap();
        assert_eq!(b, AlgNum::from_int(2));
        let c = parse_algnum("1/(1 + sqrt(2))", 2).unwrap();
        assert_eq!(c.to_string(), "-1 + sqrt(2)");
        let d = parse_algnum("sqrt(8)", 2).unwrap();
        assert_eq!(d.to_string(), "2*sqrt(2)");
    }

    #[test]
    fn algnum_round_trip() {
        for s in ["5/6", "-1 + sqrt(2)", "-2*sqrt(3)", "7", "1/3 - 4*sqrt(5)"] {
            let v = parse_algnum(s, 0).unwrap();
            assert_eq!(parse_algnum(&v.to_string(), 0).unwrap(), v);
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn poly_round_trip() {
        for s in ["x^2 + 1", "-x^2*y - y + 1", "x^3 - x^2*y - y", "2*x - 3"] {
            let p = parse_poly(s, &["x", "y"], 0).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(parse_poly(&p.to_string(), &["x", "y"], 0).unwrap(), p);
        }
    }

    #[test]
    fn ratfunc_parse() {
        let r = parse_ratfunc("1/(1+x^2)", &["x"], 0).unwrap();
        assert_eq!(r.to_string(), "1/(x^2 + 1)");
        let r = parse_ratfunc("1/((1-x)*y)", &["x", "y"], 0).unwrap();
        assert_eq!(r.den().to_string(), "x*y - y");
    }

    #[test]
    fn set_parse() {
        let s = parse_set("{ x > 0, 1 - x > 0, y > 0, x^3 - y*(1+x^2) > 0 }", &["x", "y"], 0).unwrap();
        assert_eq!(s.pieces().len(), 1);
        assert_eq!(s.pieces()[0].conditions().len(), 4);
        let union = parse_set("{ x > 1 } | { x < -1 }", &["x"], 0).unwrap();
        assert_eq!(union.pieces().len(), 2);
    }

    #[test]
    fn chained_condition() {
        let cs = parse_conditions("0 < x < 1", &["x"], 0).unwrap();
        assert_eq!(cs.len(), 2);
    }

    #[test]
    fn parse_errors_have_positions() {
        let e = parse_poly("x + $", &["x"], 0).unwrap_err();
        match e {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert!(col >= 5);
            }
            other => panic!("expected parse error, got {:?}", other),
        }
    }

    #[test]
    fn unknown_variable_rejected() {
        assert!(parse_poly("x + q", &["x"], 0).is_err());
    }
}
