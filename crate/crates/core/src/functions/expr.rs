//! Expression syntax for window pieces: a recursive-descent parser, an
//! evaluator over `Complex64` and a pretty-printer whose output reparses to
//! the same tree.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" int)?          int := "-"? digits | "(" "-"? digits ")"
//! atom   := number | "pi" | "i" | "t" | func "(" expr ")" | "(" expr ")"
//! func   := sin | cos | exp | abs | sqrt
//! ```

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
    Abs,
    Sqrt,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
            Func::Abs => "abs",
            Func::Sqrt => "sqrt",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "exp" => Func::Exp,
            "abs" => Func::Abs,
            "sqrt" => Func::Sqrt,
            _ => return None,
        })
    }

    fn apply(self, z: Complex64) -> Complex64 {
        match self {
            Func::Sin => z.sin(),
            Func::Cos => z.cos(),
            Func::Exp => z.exp(),
            Func::Abs => Complex64::new(z.norm(), 0.0),
            Func::Sqrt => z.sqrt(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(f64),
    Pi,
    /// The imaginary unit.
    I,
    /// The variable `t`.
    Var,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn constant(c: Complex64) -> Expr {
        let re = |x: f64| {
            if x < 0.0 {
                Expr::Neg(Box::new(Expr::Num(-x)))
            } else {
                Expr::Num(x)
            }
        };
        if c.im == 0.0 {
            return re(c.re);
        }
        let imag = Expr::Binary(BinOp::Mul, Box::new(re(c.im)), Box::new(Expr::I));
        if c.re == 0.0 {
            imag
        } else {
            Expr::Binary(BinOp::Add, Box::new(re(c.re)), Box::new(imag))
        }
    }

    pub fn binary(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Binary(op, Box::new(a), Box::new(b))
    }

    pub fn call(f: Func, a: Expr) -> Expr {
        Expr::Call(f, Box::new(a))
    }

    pub fn depends_on_t(&self) -> bool {
        match self {
            Expr::Var => true,
            Expr::Num(_) | Expr::Pi | Expr::I => false,
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Call(_, a) => a.depends_on_t(),
            Expr::Binary(_, a, b) => a.depends_on_t() || b.depends_on_t(),
        }
    }

    pub fn eval(&self, t: f64) -> std::result::Result<Complex64, String> {
        Ok(match self {
            Expr::Num(x) => Complex64::new(*x, 0.0),
            Expr::Pi => Complex64::new(std::f64::consts::PI, 0.0),
            Expr::I => Complex64::new(0.0, 1.0),
            Expr::Var => Complex64::new(t, 0.0),
            Expr::Neg(a) => -a.eval(t)?,
            Expr::Binary(op, a, b) => {
                let (x, y) = (a.eval(t)?, b.eval(t)?);
                match op {
                    BinOp::Add => x + y,
                    BinOp::Sub => x - y,
                    BinOp::Mul => x * y,
                    BinOp::Div => {
                        if y.norm() == 0.0 {
                            return Err("division by zero".into());
                        }
                        x / y
                    }
                }
            }
            Expr::Pow(a, n) => {
                let x = a.eval(t)?;
                if *n < 0 && x.norm() == 0.0 {
                    return Err("zero raised to a negative power".into());
                }
                x.powi(*n)
            }
            Expr::Call(f, a) => f.apply(a.eval(t)?),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(x) => write!(f, "{x}"),
            Expr::Pi => write!(f, "pi"),
            Expr::I => write!(f, "i"),
            Expr::Var => write!(f, "t"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Binary(op, a, b) => write!(f, "({a}{}{b})", op.symbol()),
            Expr::Pow(a, n) => write!(f, "({a})^{n}"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}

impl FromStr for Expr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
        } else if b.is_ascii_digit() || b == b'.' {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'.' {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                let mut j = i + 1;
                if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                    j += 1;
                }
                if j < bytes.len() && bytes[j].is_ascii_digit() {
                    i = j;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let v: f64 = src[start..i].parse().map_err(|_| {
                Error::parse(start, format!("malformed number {:?}", &src[start..i]))
            })?;
            out.push(Token {
                tok: Tok::Num(v),
                offset: start,
            });
        } else if b.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(src[start..i].to_string()),
                offset: start,
            });
        } else if src[i..].starts_with('π') {
            out.push(Token {
                tok: Tok::Ident("pi".into()),
                offset: i,
            });
            i += 'π'.len_utf8();
        } else if b"+-*/^()".contains(&b) {
            out.push(Token {
                tok: Tok::Sym(b as char),
                offset: i,
            });
            i += 1;
        } else {
            let c = src[i..].chars().next().unwrap_or('?');
            return Err(Error::parse(i, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    /// Offset of the current token; at end of input, the offset of the last
    /// token so the diagnostic points at visible text.
    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map_or(0, |t| t.offset)
    }

    fn error(&self, expected: &str) -> Error {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Num(x)) => format!("number {x}"),
            Some(Tok::Ident(s)) => format!("'{s}'"),
            Some(Tok::Sym(c)) => format!("'{c}'"),
        };
        Error::parse(self.offset(), format!("expected {expected}, found {found}"))
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat_sym('+') {
                BinOp::Add
            } else if self.eat_sym('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat_sym('*') {
                BinOp::Mul
            } else if self.eat_sym('/') {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            let at = self.offset();
            let rhs = self.unary()?;
            if op == BinOp::Div
                && !rhs.depends_on_t()
                && rhs.eval(0.0).is_ok_and(|v| v.norm() == 0.0)
            {
                return Err(Error::parse(at, "division by a constant zero"));
            }
            lhs = Expr::binary(op, lhs, rhs);
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_sym('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let paren = self.eat_sym('(');
        let negative = self.eat_sym('-');
        let n = match self.peek() {
            Some(Tok::Num(x)) if x.fract() == 0.0 && x.abs() <= i32::MAX as f64 => *x as i32,
            _ => return Err(self.error("integer exponent")),
        };
        self.pos += 1;
        if paren && !self.eat_sym(')') {
            return Err(self.error("')'"));
        }
        if self.peek() == Some(&Tok::Sym('^')) {
            return Err(self.error("operator (chained '^' needs parentheses)"));
        }
        Ok(Expr::Pow(Box::new(base), if negative { -n } else { n }))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(x)) => {
                self.pos += 1;
                Ok(Expr::Num(x))
            }
            Some(Tok::Ident(name)) => {
                let here = self.offset();
                self.pos += 1;
                match name.as_str() {
                    "pi" => Ok(Expr::Pi),
                    "i" => Ok(Expr::I),
                    "t" => Ok(Expr::Var),
                    _ => match Func::from_name(&name) {
                        Some(f) => {
                            if !self.eat_sym('(') {
                                return Err(self.error("'(' after function name"));
                            }
                            let arg = self.expr()?;
                            if !self.eat_sym(')') {
                                return Err(self.error("')'"));
                            }
                            Ok(Expr::call(f, arg))
                        }
                        None => Err(Error::parse(here, format!("unknown identifier '{name}'"))),
                    },
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat_sym(')') {
                    return Err(self.error("')'"));
                }
                Ok(inner)
            }
            _ => Err(self.error("number, 't', 'pi', 'i', function or '('")),
        }
    }
}

/// Parses an expression in `t`. Implicit multiplication is not supported.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.error("operator or end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn num(x: f64) -> Expr {
        Expr::Num(x)
    }

    #[test]
    fn parses_piece_formulas() {
        let e = parse_expr("sin(2*t)/2").unwrap();
        assert_eq!(
            e,
            Expr::binary(
                BinOp::Div,
                Expr::call(Func::Sin, Expr::binary(BinOp::Mul, num(2.0), Expr::Var)),
                num(2.0)
            )
        );
        let e = parse_expr("2*(sin(t)+cos(t))").unwrap();
        assert_eq!(
            e,
            Expr::binary(
                BinOp::Mul,
                num(2.0),
                Expr::binary(
                    BinOp::Add,
                    Expr::call(Func::Sin, Expr::Var),
                    Expr::call(Func::Cos, Expr::Var)
                )
            )
        );
    }

    #[test]
    fn unbalanced_paren_reports_offset() {
        match parse_expr("((t)") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 3);
                assert!(message.contains("')'"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn precedence() {
        // -t^2 is -(t^2)
        assert_eq!(
            parse_expr("-t^2").unwrap(),
            Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Var), 2)))
        );
        let e = parse_expr("1 - 2*3 + 4/2").unwrap();
        assert_eq!(e.eval(0.0).unwrap(), Complex64::new(-3.0, 0.0));
        assert_eq!(parse_expr("2^-1").unwrap().eval(0.0).unwrap().re, 0.5);
        assert_eq!(parse_expr("2^(-2)").unwrap().eval(0.0).unwrap().re, 0.25);
    }

    #[test]
    fn syntax_errors() {
        assert!(parse_expr("2t").is_err());
        assert!(parse_expr("t^1.5").is_err());
        assert!(parse_expr("t^2^3").is_err());
        assert!(parse_expr("foo(t)").is_err());
        assert!(parse_expr("t/0").is_err());
        assert!(parse_expr("t/(1-1)").is_err());
        assert!(parse_expr("").is_err());
        assert!(parse_expr("sin t").is_err());
        assert!(matches!(
            parse_expr("t $ 2"),
            Err(Error::Parse { offset: 2, .. })
        ));
    }

    #[test]
    fn runtime_division_by_zero() {
        let e = parse_expr("1/t").unwrap();
        assert!(e.eval(0.0).is_err());
        assert!(parse_expr("t^-1").unwrap().eval(0.0).is_err());
    }

    #[test]
    fn evaluates_complex_constants() {
        let e = parse_expr("exp(i*pi) + abs(-3) + sqrt(4)").unwrap();
        let v = e.eval(0.0).unwrap();
        assert!((v - Complex64::new(4.0, 0.0)).norm() < 1e-15);
        let c = Complex64::new(-1.5, 2.0);
        assert_eq!(Expr::constant(c).eval(0.0).unwrap(), c);
    }

    #[test]
    fn reference_values() {
        let table: [(&str, f64, f64); 8] = [
            ("sin(2*t)/2", PI / 4.0, 0.5),
            (
                "2*(sin(t)+cos(t))",
                PI / 4.0,
                2.0 * std::f64::consts::SQRT_2,
            ),
            ("-4*sin(6/5*(t-27/4*pi))", 27.0 / 4.0 * PI, 0.0),
            ("sin(16/7*(t-2*pi))", 2.0 * PI + 7.0 / 32.0 * PI, 1.0),
            ("t^3/200 - 1", 10.0, 4.0),
            ("(t-5)^2/4 - 2", 1.0, 2.0),
            ("exp(-t)*3", 1.0, 3.0 / std::f64::consts::E),
            ("sqrt(t)+abs(t-1)/t", 9.0, 3.0 + 8.0 / 9.0),
        ];
        for (src, t, want) in table {
            let v = parse_expr(src).unwrap().eval(t).unwrap();
            assert!(
                (v.re - want).abs() <= 1e-12 && v.im.abs() <= 1e-12,
                "{src} at {t}: {v}"
            );
        }
    }

    #[test]
    fn display_reparses() {
        for src in [
            "sin(2*t)/2",
            "-t^2",
            "-(1+t)*exp(i*t)",
            "2^-3",
            "(-t)^2",
            "0.1*pi-abs(t)",
        ] {
            let e = parse_expr(src).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{src} -> {e}");
        }
    }
}
