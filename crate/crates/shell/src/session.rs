//! Evaluation of parsed input against a session: symbol table, back-reference
//! ring and the command set.

use std::collections::{HashMap, VecDeque};

use symkern::expr::{build_add, build_mul, catalan, euler, pi};
use symkern::matrix::solve_linear;
use symkern::num::{literal_significant_digits, Float};
use symkern::poly::{self, normal};
use symkern::series::series_of;
use symkern::{diff, evalf, expand, func, subs, symbol, Expr, Matrix, Number, Precision};
use thiserror::Error;

use crate::parser::{self, Ast, BinOp, Statement, SyntaxError};

#[derive(Debug, Error)]
pub enum ShellError {
    #[error("{0}")]
    Syntax(#[from] SyntaxError),
    #[error("{0}")]
    Kernel(#[from] symkern::Error),
    #[error("{0}")]
    Usage(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, ShellError> {
    Err(ShellError::Usage(msg.into()))
}

/// What a statement did.
#[derive(Debug)]
pub enum Outcome {
    Value(Expr),
    Quit,
}

#[derive(Debug, Default)]
pub struct Session {
    symbols: HashMap<String, Expr>,
    ring: VecDeque<Expr>,
}

const RING: usize = 3;

impl Session {
    pub fn new() -> Session {
        Session::default()
    }

    /// The session symbol named `name`, created on first use.
    pub fn symbol(&mut self, name: &str) -> Expr {
        self.symbols.entry(name.to_string()).or_insert_with(|| symbol(name)).clone()
    }

    /// Back-reference `k` (1 is the most recent print).
    pub fn back(&self, k: usize) -> Option<&Expr> {
        self.ring.get(k.checked_sub(1)?)
    }

    /// Records a printed expression.
    pub fn push(&mut self, e: Expr) {
        self.ring.push_front(e);
        self.ring.truncate(RING);
    }

    /// Parses and evaluates one statement; values are pushed to the ring.
    pub fn run(&mut self, src: &str) -> Result<Outcome, ShellError> {
        match parser::parse(src).result? {
            Statement::Quit => Ok(Outcome::Quit),
            Statement::Expr(ast) => {
                let e = self.eval(&ast)?;
                self.push(e.clone());
                Ok(Outcome::Value(e))
            }
        }
    }

    /// Parses and evaluates an expression without touching the ring.
    pub fn eval_str(&mut self, src: &str) -> Result<Expr, ShellError> {
        let ast = parser::parse_expr(src)?;
        self.eval(&ast)
    }

    pub fn eval(&mut self, ast: &Ast) -> Result<Expr, ShellError> {
        Ok(match ast {
            Ast::Int(n) => Expr::num(Number::Integer(n.clone())),
            Ast::Decimal(s) => {
                let digits = literal_significant_digits(s).max(Precision::DEFAULT.digits());
                let prec = Precision::new(digits).expect("at least two digits");
                let f = Float::parse_decimal(s, prec).ok_or_else(|| ShellError::Usage(format!("bad number {s}")))?;
                Expr::num(Number::Float(f))
            }
            Ast::Name(n) => self.name(n),
            Ast::BackRef(k) => match self.back(*k) {
                Some(e) => e.clone(),
                None => return usage(format!("{} refers to nothing yet", "%".repeat(*k))),
            },
            Ast::Neg(_) | Ast::Binary(BinOp::Mul | BinOp::Div, ..) => {
                // a whole chain becomes one product, as the kernel builds it
                let mut fs = Vec::new();
                self.factors(ast, &mut fs)?;
                let mut it = fs.into_iter();
                let first = it.next().expect("nonempty chain");
                if it.len() == 0 || has_matrix(&first, it.as_slice()) {
                    it.try_fold(first, |acc, f| arith(BinOp::Mul, acc, f))?
                } else {
                    build_mul(std::iter::once(first).chain(it))
                }
            }
            Ast::Binary(op, a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                arith(*op, a, b)?
            }
            Ast::Rel(op, a, b) => Expr::relational(self.eval(a)?, *op, self.eval(b)?),
            Ast::List(items) => {
                let vals = items.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>, _>>()?;
                as_matrix_literal(&vals)?.unwrap_or_else(|| Expr::list(vals))
            }
            Ast::Call { name, args, .. } => {
                let vals = args.iter().map(|a| self.eval(a)).collect::<Result<Vec<_>, _>>()?;
                call(name, vals)?
            }
        })
    }

    /// Operands of a `*`, `/` and unary minus chain; divisors are inverted.
    fn factors(&mut self, ast: &Ast, out: &mut Vec<Expr>) -> Result<(), ShellError> {
        match ast {
            Ast::Binary(BinOp::Mul, a, b) => {
                self.factors(a, out)?;
                self.factors(b, out)
            }
            Ast::Binary(BinOp::Div, a, b) => {
                self.factors(a, out)?;
                let mut ds = Vec::new();
                self.factors(b, &mut ds)?;
                if ds.iter().any(|d| d.as_matrix().is_some()) {
                    let d = ds.into_iter().try_fold(Expr::one(), |acc, f| arith(BinOp::Mul, acc, f))?;
                    let m = d.as_matrix().expect("matrix product");
                    out.push(Expr::matrix(m.inverse()?));
                } else {
                    for d in ds {
                        out.push(Expr::one().checked_div(d)?);
                    }
                }
                Ok(())
            }
            Ast::Neg(a) => {
                out.push(Expr::int(-1));
                self.factors(a, out)
            }
            _ => {
                out.push(self.eval(ast)?);
                Ok(())
            }
        }
    }

    fn name(&mut self, n: &str) -> Expr {
        match n {
            "Pi" => pi(),
            "Euler" => euler(),
            "Catalan" => catalan(),
            "I" => Expr::imaginary_unit(),
            _ => self.symbol(n),
        }
    }
}

fn has_matrix(first: &Expr, rest: &[Expr]) -> bool {
    first.as_matrix().is_some() || rest.iter().any(|f| f.as_matrix().is_some())
}

/// `[[..],[..]]` with equal-length rows becomes a matrix.
fn as_matrix_literal(vals: &[Expr]) -> Result<Option<Expr>, ShellError> {
    if vals.is_empty() {
        return Ok(None);
    }
    let rows: Option<Vec<Vec<Expr>>> = vals.iter().map(|v| v.as_list().map(|r| r.to_vec())).collect();
    let Some(rows) = rows else {
        return Ok(None);
    };
    if rows[0].is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return usage("matrix rows must be nonempty and of equal length");
    }
    Ok(Some(Expr::matrix(Matrix::from_rows(rows)?)))
}

fn arith(op: BinOp, a: Expr, b: Expr) -> Result<Expr, ShellError> {
    if a.as_matrix().is_some() || b.as_matrix().is_some() {
        return matrix_arith(op, a, b);
    }
    Ok(match op {
        BinOp::Add => build_add([a, b]),
        BinOp::Sub => build_add([a, build_mul([Expr::int(-1), b])]),
        BinOp::Mul => build_mul([a, b]),
        BinOp::Div => a.checked_div(b)?,
        BinOp::Pow => a.checked_pow(b)?,
    })
}

fn matrix_arith(op: BinOp, a: Expr, b: Expr) -> Result<Expr, ShellError> {
    let m = match (op, a.as_matrix(), b.as_matrix()) {
        (BinOp::Add, Some(x), Some(y)) => x.add(y)?,
        (BinOp::Sub, Some(x), Some(y)) => x.add(&y.scale(&Expr::int(-1)))?,
        (BinOp::Mul, Some(x), Some(y)) => x.mul(y)?,
        (BinOp::Mul, Some(x), None) => x.scale(&b),
        (BinOp::Mul, None, Some(y)) => y.scale(&a),
        (BinOp::Div, Some(x), None) => x.scale(&Expr::int(1).checked_div(b)?),
        (BinOp::Pow, Some(x), None) => {
            let k = b.as_number().and_then(|n| n.to_i64()).ok_or_else(|| ShellError::Usage("matrix powers need an integer exponent".into()))?;
            let base = if k < 0 { x.inverse()? } else { x.clone() };
            let mut acc = Matrix::identity(x.rows());
            for _ in 0..k.unsigned_abs() {
                acc = acc.mul(&base)?;
            }
            acc
        }
        _ => return usage("unsupported matrix operation"),
    };
    Ok(Expr::matrix(m))
}

fn arity(name: &str, args: &[Expr], lo: usize, hi: usize) -> Result<(), ShellError> {
    if args.len() < lo || args.len() > hi {
        let want = if lo == hi { lo.to_string() } else { format!("{lo} to {hi}") };
        return usage(format!("{name} takes {want} argument(s), got {}", args.len()));
    }
    Ok(())
}

fn int_arg(name: &str, e: &Expr) -> Result<i64, ShellError> {
    e.as_number().and_then(|n| n.to_i64()).ok_or_else(|| ShellError::Usage(format!("{name}: {e} is not an integer")))
}

fn matrix_arg<'a>(name: &str, e: &'a Expr) -> Result<&'a Matrix, ShellError> {
    e.as_matrix().ok_or_else(|| ShellError::Usage(format!("{name}: {e} is not a matrix")))
}

/// `e` as a list of items; a non-list is a one-element list.
fn items(e: &Expr) -> Vec<Expr> {
    e.as_list().map(|l| l.to_vec()).unwrap_or_else(|| vec![e.clone()])
}

fn call(name: &str, a: Vec<Expr>) -> Result<Expr, ShellError> {
    Ok(match name {
        "expand" => {
            arity(name, &a, 1, 1)?;
            expand(&a[0])?
        }
        "normal" => {
            arity(name, &a, 1, 1)?;
            normal(&a[0])?
        }
        "collect" => {
            arity(name, &a, 2, 2)?;
            poly::collect(&a[0], &a[1])?
        }
        "degree" | "ldegree" => {
            arity(name, &a, 2, 2)?;
            let d = if name == "degree" { poly::degree(&a[0], &a[1])? } else { poly::ldegree(&a[0], &a[1])? };
            Expr::int(d)
        }
        "coeff" => {
            arity(name, &a, 3, 3)?;
            poly::coeff(&a[0], &a[1], int_arg(name, &a[2])?)?
        }
        "diff" => {
            arity(name, &a, 2, 3)?;
            let n = if a.len() == 3 { int_arg(name, &a[2])? } else { 1 };
            let n = u32::try_from(n).map_err(|_| ShellError::Usage("diff: order must be nonnegative".into()))?;
            diff(&a[0], &a[1], n)?
        }
        "series" => {
            arity(name, &a, 3, 3)?;
            Expr::series(series_of(&a[0], &a[1], int_arg(name, &a[2])?)?)
        }
        "subs" => {
            arity(name, &a, 2, 2)?;
            subs(&a[0], &items(&a[1]))?
        }
        "evalf" => {
            arity(name, &a, 1, 2)?;
            let digits = if a.len() == 2 { int_arg(name, &a[1])? } else { Precision::DEFAULT.digits() as i64 };
            let prec = u32::try_from(digits).ok().and_then(Precision::new).ok_or_else(|| ShellError::Usage("evalf: need at least 2 digits".into()))?;
            evalf(&a[0], prec)?
        }
        "gcd" | "lcm" => {
            arity(name, &a, 2, 2)?;
            if let (Some(x), Some(y)) = (a[0].as_number(), a[1].as_number()) {
                Expr::num(if name == "gcd" { x.gcd(y)? } else { x.lcm(y)? })
            } else if name == "gcd" {
                poly::gcd(&a[0], &a[1])?
            } else {
                poly::lcm(&a[0], &a[1])?
            }
        }
        "lsolve" => {
            arity(name, &a, 2, 2)?;
            Expr::list(solve_linear(&items(&a[0]), &items(&a[1]))?)
        }
        "det" => {
            arity(name, &a, 1, 1)?;
            matrix_arg(name, &a[0])?.det()?
        }
        "inverse" => {
            arity(name, &a, 1, 1)?;
            Expr::matrix(matrix_arg(name, &a[0])?.inverse()?)
        }
        "transpose" => {
            arity(name, &a, 1, 1)?;
            Expr::matrix(matrix_arg(name, &a[0])?.transpose())
        }
        "charpoly" => {
            arity(name, &a, 2, 2)?;
            matrix_arg(name, &a[0])?.charpoly(&a[1])?
        }
        "sqrt" => {
            arity(name, &a, 1, 1)?;
            a[0].checked_pow(Expr::rational(1, 2))?
        }
        "psi" if a.len() == 1 => func::psi(&Expr::zero(), &a[0])?,
        _ => func::apply_named(name, a)?,
    })
}
