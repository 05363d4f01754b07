//! Expression parser.
//!
//! ```text
//! expr    := ['+'|'-'] product (('+'|'-') product)*
//! product := power (['*'] power)*
//! power   := atom ['^' ['-'] int]
//! atom    := rational | 'q' | lambda | generator | '(' expr ')'
//! lambda  := 'l' digit digit | 'l{' int ',' int '}'
//! ```
//!
//! Generators are a letter of the algebra's alphabet followed by a 1-based
//! index (`E1`, `Y2`, `Z3`). Only torus generators take negative powers.

use crate::algebra::{AlgebraSpec, Element, Generator};
use crate::coeffs::Scalar;
use crate::error::{Error, Result};

/// Abstract syntax.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(Scalar),
    Q,
    Lambda(usize, usize),
    Gen(Generator),
    Power(Box<Expr>, i64),
    Product(Vec<Expr>),
    /// Signed summands; `true` means subtracted.
    Sum(Vec<(bool, Expr)>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Scalar),
    Ident(String),
    LambdaBraced(usize, usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut p = 0;
    let digits = |p: &mut usize| -> String {
        let start = *p;
        while *p < chars.len() && chars[*p].is_ascii_digit() {
            *p += 1;
        }
        chars[start..*p].iter().collect()
    };
    while p < chars.len() {
        let c = chars[p];
        let start = p;
        match c {
            c if c.is_whitespace() => p += 1,
            '+' => {
                out.push((p, Tok::Plus));
                p += 1;
            }
            '-' => {
                out.push((p, Tok::Minus));
                p += 1;
            }
            '*' => {
                out.push((p, Tok::Star));
                p += 1;
            }
            '^' => {
                out.push((p, Tok::Caret));
                p += 1;
            }
            '(' => {
                out.push((p, Tok::LParen));
                p += 1;
            }
            ')' => {
                out.push((p, Tok::RParen));
                p += 1;
            }
            '0'..='9' => {
                let num = digits(&mut p);
                let mut text = num.clone();
                if p < chars.len() && chars[p] == '/' {
                    p += 1;
                    let den = digits(&mut p);
                    if den.is_empty() {
                        return Err(syntax(p, "expected denominator after '/'"));
                    }
                    text = format!("{num}/{den}");
                }
                let value: Scalar = text.parse().map_err(|_| syntax(start, format!("bad number '{text}'")))?;
                out.push((start, Tok::Num(value)));
            }
            'l' if chars.get(p + 1) == Some(&'{') => {
                p += 2;
                let i = digits(&mut p);
                if chars.get(p) != Some(&',') {
                    return Err(syntax(p, "expected ',' in l{i,j}"));
                }
                p += 1;
                let j = digits(&mut p);
                if chars.get(p) != Some(&'}') || i.is_empty() || j.is_empty() {
                    return Err(syntax(p, "malformed l{i,j}"));
                }
                p += 1;
                let (i, j) = (i.parse().unwrap_or(0), j.parse().unwrap_or(0));
                out.push((start, Tok::LambdaBraced(i, j)));
            }
            c if c.is_ascii_alphabetic() => {
                p += 1;
                let idx = digits(&mut p);
                out.push((start, Tok::Ident(format!("{c}{idx}"))));
            }
            other => return Err(syntax(p, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

/// What the parser needs to know about the target algebra.
#[derive(Clone, Debug)]
pub struct ParseContext {
    pub rank: usize,
    /// Lower, upper and torus letters.
    pub letters: (char, char, char),
    pub root_letters: bool,
}

impl ParseContext {
    pub fn for_spec(spec: &AlgebraSpec) -> Self {
        ParseContext {
            rank: spec.rank(),
            letters: spec.kind().letters(),
            root_letters: spec.kind().has_root_letters(),
        }
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a ParseContext,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut neg = false;
        match self.peek() {
            Some(Tok::Minus) => {
                neg = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        terms.push((neg, self.product()?));
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            terms.push((neg, self.product()?));
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(Expr::Sum(terms))
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Ident(_) | Tok::LambdaBraced(..) | Tok::LParen)
        )
    }

    fn product(&mut self) -> Result<Expr> {
        let mut factors = vec![self.power()?];
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                factors.push(self.power()?);
            } else if self.starts_atom() {
                factors.push(self.power()?);
            } else {
                break;
            }
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        Ok(Expr::Product(factors))
    }

    fn power(&mut self) -> Result<Expr> {
        let at = self.here();
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let ep = self.here();
        let n: i64 = match self.peek() {
            Some(Tok::Num(n)) => n
                .to_string()
                .parse()
                .map_err(|_| syntax(ep, "expected an integer exponent"))?,
            _ => return Err(syntax(ep, "expected an integer exponent")),
        };
        self.pos += 1;
        let n = if neg { -n } else { n };
        if n < 0 {
            if let Expr::Gen(Generator::Lower(_) | Generator::Upper(_)) = base {
                return Err(syntax(at, "negative power of a non-torus generator"));
            }
        }
        Ok(Expr::Power(Box::new(base), n))
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.here();
        let tok = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        match tok {
            Some(Tok::Num(n)) => Ok(Expr::Number(n)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(syntax(self.here(), "expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::LambdaBraced(i, j)) => self.lambda(i, j),
            Some(Tok::Ident(name)) => self.ident(at, &name),
            Some(_) => Err(syntax(at, "unexpected token")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }

    fn lambda(&self, i: usize, j: usize) -> Result<Expr> {
        for k in [i, j] {
            if k == 0 || k > self.ctx.rank {
                return Err(Error::IndexOutOfRank {
                    index: k,
                    rank: self.ctx.rank,
                });
            }
        }
        Ok(Expr::Lambda(i - 1, j - 1))
    }

    fn ident(&self, at: usize, name: &str) -> Result<Expr> {
        let mut chars = name.chars();
        let head = chars.next().expect("nonempty identifier");
        let digits: String = chars.collect();
        if name == "q" {
            return Ok(Expr::Q);
        }
        if head == 'l' && digits.len() == 2 {
            let d: Vec<usize> = digits.chars().map(|c| c as usize - '0' as usize).collect();
            return self.lambda(d[0], d[1]);
        }
        let (l, u, t) = self.ctx.letters;
        let known = head == t || (self.ctx.root_letters && (head == l || head == u));
        if !known || digits.is_empty() {
            return Err(Error::UnknownGenerator(name.to_string()));
        }
        let index: usize = digits.parse().map_err(|_| syntax(at, "bad index"))?;
        if index == 0 || index > self.ctx.rank {
            return Err(Error::IndexOutOfRank {
                index,
                rank: self.ctx.rank,
            });
        }
        let i = index - 1;
        Ok(Expr::Gen(if head == l {
            Generator::Lower(i)
        } else if head == u {
            Generator::Upper(i)
        } else {
            Generator::Torus(i)
        }))
    }
}

/// Parses a full line.
pub fn parse(src: &str, ctx: &ParseContext) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count(),
        ctx,
    };
    if p.toks.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(syntax(p.here(), "trailing input"));
    }
    Ok(e)
}

/// Evaluates an expression in `spec`.
pub fn eval(e: &Expr, spec: &AlgebraSpec) -> Result<Element> {
    let t = spec.rank();
    Ok(match e {
        Expr::Number(c) => Element::scalar(c.clone(), t),
        Expr::Q => Element::scalar(spec.params().q().clone(), t),
        Expr::Lambda(i, j) => Element::scalar(spec.params().lambda(*i, *j).clone(), t),
        Expr::Gen(g) => spec.generator(*g),
        Expr::Power(b, n) => spec.pow(&eval(b, spec)?, *n)?,
        Expr::Product(fs) => {
            let mut acc = spec.one();
            for f in fs {
                acc = spec.multiply(&acc, &eval(f, spec)?);
            }
            acc
        }
        Expr::Sum(ts) => {
            let mut acc = Element::zero();
            for (neg, s) in ts {
                let c = if *neg { -Scalar::one() } else { Scalar::one() };
                acc.add_scaled(&eval(s, spec)?, &c);
            }
            acc
        }
    })
}

/// Parses and evaluates in one step.
pub fn parse_element(src: &str, spec: &AlgebraSpec) -> Result<Element> {
    eval(&parse(src, &ParseContext::for_spec(spec))?, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Kind;
    use crate::cartan::{preset, Family};
    use crate::coeffs::make_params;

    fn spec(kind: Kind) -> AlgebraSpec {
        let c = preset(Family::A, 2).unwrap();
        let p = make_params(Scalar::from_int(2), &[((0, 1), Scalar::from_int(3))], &c).unwrap();
        AlgebraSpec::new(kind, &p, &c).unwrap()
    }

    #[test]
    fn grammar() {
        let u = spec(Kind::U);
        let ctx = ParseContext::for_spec(&u);
        assert!(matches!(parse("E1*F1 - F1*E1", &ctx).unwrap(), Expr::Sum(ts) if ts.len() == 2));
        let e = parse_element("E1*F1 - F1*E1", &u).unwrap();
        let c = parse_element("(q - q^-1)^-1 * (K1 - K1^-1)", &u).unwrap();
        assert_eq!(e, c);
        assert_eq!(parse_element("E1 F1", &u).unwrap(), parse_element("E1F1", &u).unwrap());
        assert_eq!(
            parse_element("l12 K1", &u).unwrap(),
            parse_element("3*K1", &u).unwrap()
        );
        assert_eq!(parse_element("l{1,2}", &u).unwrap(), parse_element("3", &u).unwrap());
    }

    #[test]
    fn errors() {
        let u = spec(Kind::U);
        assert!(matches!(parse_element("E1^-2", &u), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("X1", &u), Err(Error::UnknownGenerator(_))));
        assert!(matches!(parse_element("E3", &u), Err(Error::IndexOutOfRank { index: 3, rank: 2 })));
        assert!(matches!(parse_element("E1 +", &u), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("(E1", &u), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("", &u), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element("E1 F1)", &u), Err(Error::Syntax { pos: 5, .. })));
        let t = spec(Kind::Torus);
        assert!(matches!(parse_element("X1", &t), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn alambda_letters() {
        let a = spec(Kind::Alambda);
        let e = parse_element("Z1 X2", &a).unwrap();
        assert_eq!(a.format(&e), "9/2 X2 Z1");
        assert_eq!(parse_element("Z1 Z1^-1", &a).unwrap(), a.one());
    }
}
