//! Closed-form constants as small arithmetic expressions in `n` (and `i`
//! for positional families), evaluated exactly.
//!
//! Grammar: integers, `n`, `i`, `+ - * / ^`, parentheses, and the
//! functions `floor`, `ceil`, `binom(a, b)`, `fact(a)`, `H(a)` (harmonic
//! number).

use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Expr {
    Num(i128),
    N,
    I,
    Neg(Box<Expr>),
    Bin(char, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Func {
    Floor,
    Ceil,
    Binom,
    Fact,
    Harmonic,
}

impl Func {
    fn arity(self) -> usize {
        match self {
            Func::Binom => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Formula {
    text: String,
    expr: Expr,
}

impl Formula {
    pub fn parse(text: &str) -> Result<Self> {
        let tokens = tokenize(text)?;
        let mut p = Parser {
            text,
            tokens,
            pos: 0,
        };
        let expr = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(p.err("trailing input"));
        }
        Ok(Formula {
            text: text.to_string(),
            expr,
        })
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn uses_index(&self) -> bool {
        fn walk(e: &Expr) -> bool {
            match e {
                Expr::I => true,
                Expr::Num(_) | Expr::N => false,
                Expr::Neg(a) => walk(a),
                Expr::Bin(_, a, b) => walk(a) || walk(b),
                Expr::Call(_, args) => args.iter().any(walk),
            }
        }
        walk(&self.expr)
    }

    pub fn eval(&self, n: usize, i: Option<usize>) -> Result<Rational> {
        self.eval_expr(&self.expr, n, i)
    }

    fn fail(&self, why: &str) -> Error {
        Error::MalformedFormula(self.text.clone(), why.to_string())
    }

    fn eval_expr(&self, e: &Expr, n: usize, i: Option<usize>) -> Result<Rational> {
        Ok(match e {
            Expr::Num(v) => Rational::from_integer(*v),
            Expr::N => Rational::from_integer(n as i128),
            Expr::I => Rational::from_integer(i.ok_or_else(|| self.fail("i is unbound"))? as i128),
            Expr::Neg(a) => -self.eval_expr(a, n, i)?,
            Expr::Bin(op, a, b) => {
                let x = self.eval_expr(a, n, i)?;
                let y = self.eval_expr(b, n, i)?;
                match op {
                    '+' => x + y,
                    '-' => x - y,
                    '*' => x * y,
                    '/' => {
                        if y.is_zero() {
                            return Err(self.fail("division by zero"));
                        }
                        x / y
                    }
                    '^' => {
                        let k = self.integer(y)?;
                        let k = i32::try_from(k).map_err(|_| self.fail("exponent too large"))?;
                        if k < 0 && x.is_zero() {
                            return Err(self.fail("division by zero"));
                        }
                        num_traits::pow::Pow::pow(x, k)
                    }
                    _ => unreachable!(),
                }
            }
            Expr::Call(f, args) => {
                let vals: Vec<Rational> = args
                    .iter()
                    .map(|a| self.eval_expr(a, n, i))
                    .collect::<Result<_>>()?;
                match f {
                    Func::Floor => vals[0].floor(),
                    Func::Ceil => vals[0].ceil(),
                    Func::Fact => {
                        let a = self.integer(vals[0])?;
                        if a < 0 {
                            return Err(self.fail("factorial of a negative number"));
                        }
                        Rational::from_integer((1..=a).product())
                    }
                    Func::Binom => {
                        let a = self.integer(vals[0])?;
                        let b = self.integer(vals[1])?;
                        Rational::from_integer(binom(a, b))
                    }
                    Func::Harmonic => {
                        let a = self.integer(vals[0])?;
                        (1..=a).fold(Rational::zero(), |acc, k| acc + Rational::new(1, k))
                    }
                }
            }
        })
    }

    fn integer(&self, x: Rational) -> Result<i128> {
        if !x.is_integer() {
            return Err(self.fail("expected an integer argument"));
        }
        x.to_integer()
            .to_i128()
            .ok_or_else(|| self.fail("integer out of range"))
    }
}

fn binom(a: i128, b: i128) -> i128 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for k in 0..b {
        acc = acc * (a - k) / (k + 1);
    }
    acc
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Formula::parse(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i128),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            let v = s.parse().map_err(|_| {
                Error::MalformedFormula(text.to_string(), "number too large".into())
            })?;
            out.push(Tok::Num(v));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_alphanumeric() {
                k += 1;
            }
            out.push(Tok::Ident(chars[start..k].iter().collect()));
        } else if "+-*/^(),".contains(c) {
            out.push(Tok::Sym(c));
            k += 1;
        } else {
            return Err(Error::MalformedFormula(
                text.to_string(),
                format!("unexpected character {c:?}"),
            ));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    text: &'a str,
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, why: &str) -> Error {
        Error::MalformedFormula(self.text.to_string(), why.to_string())
    }

    fn peek_sym(&self, c: char) -> bool {
        self.tokens.get(self.pos) == Some(&Tok::Sym(c))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek_sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(op) = ['+', '-'].into_iter().find(|&c| self.peek_sym(c)) {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while let Some(op) = ['*', '/'].into_iter().find(|&c| self.peek_sym(c)) {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek_sym('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.peek_sym('^') {
            self.pos += 1;
            let exp = self.unary()?;
            return Ok(Expr::Bin('^', Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.err("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(Expr::Num(v)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let func = match name.as_str() {
                    "n" => return Ok(Expr::N),
                    "i" => return Ok(Expr::I),
                    "floor" => Func::Floor,
                    "ceil" => Func::Ceil,
                    "binom" => Func::Binom,
                    "fact" => Func::Fact,
                    "H" => Func::Harmonic,
                    _ => return Err(self.err(&format!("unknown name {name:?}"))),
                };
                self.expect('(')?;
                let mut args = vec![self.expr()?];
                while self.peek_sym(',') {
                    self.pos += 1;
                    args.push(self.expr()?);
                }
                self.expect(')')?;
                if args.len() != func.arity() {
                    return Err(self.err(&format!("{name} takes {} argument(s)", func.arity())));
                }
                Ok(Expr::Call(func, args))
            }
            Tok::Sym(c) => Err(self.err(&format!("unexpected {c:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(text: &str, n: usize) -> String {
        Formula::parse(text)
            .unwrap()
            .eval(n, None)
            .unwrap()
            .to_string()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(ev("n*(n-1)/4", 5), "5");
        assert_eq!(ev("n*(n-1)/4", 6), "15/2");
        assert_eq!(ev("(fact(n)+1)/2", 4), "25/2");
        assert_eq!(ev("H(n)", 3), "11/6");
        assert_eq!(ev("binom(n+1,3)", 4), "10");
        assert_eq!(ev("binom(n-1,3)/12", 3), "0");
        assert_eq!(ev("floor(n/2)^2/2", 5), "2");
        assert_eq!(ev("floor(n^2/4)/2", 5), "3");
        assert_eq!(ev("ceil((n-1)/2)/2", 4), "1");
        assert_eq!(ev("1-1/n", 4), "3/4");
        assert_eq!(ev("-n + 2^3", 1), "7");
        assert_eq!(ev("2^-1", 1), "1/2");
        assert_eq!(ev("n*(n+1)^2/4", 3), "12");
        let f = Formula::parse("(n-i)/2").unwrap();
        assert!(f.uses_index());
        assert_eq!(f.eval(5, Some(2)).unwrap().to_string(), "3/2");
        assert!(f.eval(5, None).is_err());
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "",
            "n +",
            "(n",
            "foo(n)",
            "binom(n)",
            "n $ 2",
            "n n",
            "1/0",
            "fact(1/2)",
        ] {
            let r = Formula::parse(bad).and_then(|f| f.eval(3, None));
            assert!(matches!(r, Err(Error::MalformedFormula(..))), "{bad}");
        }
    }
}
