//! Tokenizer and Pratt parser for shell input.
//!
//! Parsing yields an [`Ast`]; identifiers stay unresolved until a
//! [`Session`](crate::session::Session) evaluates the tree.

use std::fmt;

use num_bigint::BigInt;
use symkern::expr::RelOp;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    /// 1-based character position.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Ast {
    Int(BigInt),
    /// Decimal literal text, kept verbatim so precision can follow it.
    Decimal(String),
    Name(String),
    /// `%` is 1, `%%` is 2, `%%%` is 3.
    BackRef(usize),
    Neg(Box<Ast>),
    Binary(BinOp, Box<Ast>, Box<Ast>),
    Rel(RelOp, Box<Ast>, Box<Ast>),
    Call { name: String, args: Vec<Ast>, pos: usize },
    List(Vec<Ast>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Statement {
    Expr(Ast),
    Quit,
}

#[derive(Clone, Debug)]
pub struct ParsedInput {
    pub source: String,
    pub result: Result<Statement, SyntaxError>,
}

impl ParsedInput {
    pub fn error_position(&self) -> Option<usize> {
        self.result.as_ref().err().map(|e| e.pos)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Decimal(String),
    Ident(String),
    BackRef(usize),
    Op(&'static str),
    End,
}

const OPS: [&str; 16] = ["==", "!=", "<=", ">=", "<", ">", "+", "-", "*", "/", "^", "(", ")", "[", "]", ","];

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, SyntaxError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mut decimal = false;
            if i < chars.len() && chars[i] == '.' {
                decimal = true;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    decimal = true;
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            let text: String = chars[start..i].iter().collect();
            out.push((if decimal { Tok::Decimal(text) } else { Tok::Int(text) }, pos));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
        } else if c == '%' {
            let start = i;
            while i < chars.len() && chars[i] == '%' {
                i += 1;
            }
            let n = i - start;
            if n > 3 {
                return Err(SyntaxError { pos, msg: "at most three back-reference marks".into() });
            }
            out.push((Tok::BackRef(n), pos));
        } else {
            let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
            match OPS.iter().find(|op| rest.starts_with(*op)) {
                Some(op) => {
                    out.push((Tok::Op(op), pos));
                    i += op.len();
                }
                None => return Err(SyntaxError { pos, msg: format!("unexpected character '{c}'") }),
            }
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

const BP_REL: u8 = 1;
const BP_ADD: u8 = 10;
const BP_MUL: u8 = 20;
const BP_NEG: u8 = 25;
const BP_POW: u8 = 30;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError { pos: self.pos(), msg: msg.into() })
    }

    fn unexpected<T>(&self) -> Result<T, SyntaxError> {
        match self.peek() {
            Tok::End => self.error("unexpected end of input"),
            Tok::Op(op) => self.error(format!("unexpected '{op}'")),
            Tok::Ident(s) | Tok::Int(s) | Tok::Decimal(s) => self.error(format!("unexpected '{s}'")),
            Tok::BackRef(n) => self.error(format!("unexpected '{}'", "%".repeat(*n))),
        }
    }

    fn expect(&mut self, op: &str) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::Op(match_op(op)) {
            self.next();
            Ok(())
        } else {
            match self.peek() {
                Tok::End => self.error(format!("expected '{op}' before end of input")),
                _ => self.error(format!("expected '{op}'")),
            }
        }
    }

    fn expr(&mut self, min_bp: u8) -> Result<Ast, SyntaxError> {
        let mut lhs = self.prefix()?;
        while let Tok::Op(op) = self.peek() {
            let (op, bp) = match *op {
                "==" | "!=" | "<" | "<=" | ">" | ">=" => (*op, BP_REL),
                "+" | "-" => (*op, BP_ADD),
                "*" | "/" => (*op, BP_MUL),
                "^" => (*op, BP_POW),
                _ => break,
            };
            if bp < min_bp || (bp == min_bp && op != "^") {
                break;
            }
            if bp == BP_REL && matches!(lhs, Ast::Rel(..)) {
                return self.error("relations do not chain");
            }
            self.next();
            lhs = match op {
                "^" => Ast::Binary(BinOp::Pow, Box::new(lhs), Box::new(self.expr(BP_POW)?)),
                "+" | "-" | "*" | "/" => {
                    let rhs = self.expr(bp + 1)?;
                    let b = match op {
                        "+" => BinOp::Add,
                        "-" => BinOp::Sub,
                        "*" => BinOp::Mul,
                        _ => BinOp::Div,
                    };
                    Ast::Binary(b, Box::new(lhs), Box::new(rhs))
                }
                _ => {
                    let rhs = self.expr(BP_REL + 1)?;
                    Ast::Rel(rel_op(op), Box::new(lhs), Box::new(rhs))
                }
            };
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Ast, SyntaxError> {
        if matches!(self.peek(), Tok::End | Tok::Op(")" | "]" | "," | "*" | "/" | "^" | "==" | "!=" | "<" | "<=" | ">" | ">=")) {
            return self.unexpected();
        }
        let (tok, pos) = self.next();
        match tok {
            Tok::Int(s) => Ok(Ast::Int(s.parse().expect("digits"))),
            Tok::Decimal(s) => Ok(Ast::Decimal(s)),
            Tok::BackRef(n) => Ok(Ast::BackRef(n)),
            Tok::Ident(name) => {
                if *self.peek() == Tok::Op("(") {
                    self.next();
                    let args = self.items(")")?;
                    Ok(Ast::Call { name, args, pos })
                } else {
                    Ok(Ast::Name(name))
                }
            }
            Tok::Op("-") => Ok(Ast::Neg(Box::new(self.expr(BP_NEG)?))),
            Tok::Op("+") => self.expr(BP_NEG),
            Tok::Op("(") => {
                let e = self.expr(0)?;
                self.expect(")")?;
                Ok(e)
            }
            Tok::Op("[") => Ok(Ast::List(self.items("]")?)),
            _ => unreachable!("filtered above"),
        }
    }

    /// Comma-separated expressions up to the closing delimiter.
    fn items(&mut self, close: &str) -> Result<Vec<Ast>, SyntaxError> {
        let mut items = Vec::new();
        if *self.peek() == Tok::Op(match_op(close)) {
            self.next();
            return Ok(items);
        }
        loop {
            items.push(self.expr(0)?);
            match self.peek() {
                Tok::Op(",") => {
                    self.next();
                }
                Tok::Op(op) if *op == close => {
                    self.next();
                    return Ok(items);
                }
                Tok::End => return self.error(format!("expected '{close}' before end of input")),
                _ => return self.error(format!("expected ',' or '{close}'")),
            }
        }
    }
}

fn match_op(op: &str) -> &'static str {
    OPS.iter().find(|o| **o == op).copied().expect("known operator")
}

fn rel_op(op: &str) -> RelOp {
    match op {
        "==" => RelOp::Eq,
        "!=" => RelOp::Ne,
        "<" => RelOp::Lt,
        "<=" => RelOp::Le,
        ">" => RelOp::Gt,
        _ => RelOp::Ge,
    }
}

/// Parses one expression, with no terminator.
pub fn parse_expr(src: &str) -> Result<Ast, SyntaxError> {
    let mut p = Parser { toks: tokenize(src)?, at: 0 };
    let e = p.expr(0)?;
    if *p.peek() != Tok::End {
        return p.unexpected();
    }
    Ok(e)
}

/// Parses one statement: an expression or `quit`/`exit`.
pub fn parse(src: &str) -> ParsedInput {
    let trimmed = src.trim();
    let result = if trimmed == "quit" || trimmed == "exit" {
        Ok(Statement::Quit)
    } else {
        parse_expr(src).map(Statement::Expr)
    };
    ParsedInput { source: src.to_string(), result }
}
