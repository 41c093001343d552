//! Infix rendering. The output parses back to the same expression.

use std::fmt::{self, Write};

use super::{build_add, build_mul, build_power, Expr, Kind, PairSeq};
use crate::num::Number;

const P_REL: u8 = 0;
const P_ADD: u8 = 1;
const P_MUL: u8 = 2;
const P_POW: u8 = 3;
const P_ATOM: u8 = 4;

fn number_prec(n: &Number) -> u8 {
    match n {
        Number::Integer(_) | Number::Float(_) if n.is_negative() => P_ADD,
        Number::Integer(_) | Number::Float(_) => P_ATOM,
        Number::Rational(_) if n.is_negative() => P_ADD,
        Number::Rational(_) => P_MUL,
        Number::Complex(re, im) => {
            if re.is_zero() && re.is_exact() {
                if im.is_one() {
                    P_ATOM
                } else if im.is_negative() {
                    P_ADD
                } else {
                    P_MUL
                }
            } else {
                P_ADD
            }
        }
    }
}

fn prec(e: &Expr) -> u8 {
    match e.kind() {
        Kind::Numeric(n) => number_prec(n),
        Kind::Symbol(_) | Kind::Constant(_) | Kind::Function(_) | Kind::List(_) | Kind::Matrix(_) => P_ATOM,
        Kind::Power(_, e) if e.as_number().is_some_and(|n| *n == Number::rational(1, 2)) => P_ATOM,
        Kind::Power(..) => P_POW,
        Kind::Mul(ps) if ps.overall.is_negative() => P_ADD,
        Kind::Mul(_) => P_MUL,
        Kind::Add(_) | Kind::Series(_) => P_ADD,
        Kind::Relational(..) => P_REL,
    }
}

fn write_prec(out: &mut String, e: &Expr, min: u8) {
    if prec(e) < min {
        out.push('(');
        write_expr(out, e);
        out.push(')');
    } else {
        write_expr(out, e);
    }
}

fn write_power(out: &mut String, base: &Expr, exp: &Expr) {
    if exp.as_number().is_some_and(|n| *n == Number::rational(1, 2)) {
        out.push_str("sqrt(");
        write_expr(out, base);
        out.push(')');
        return;
    }
    write_prec(out, base, P_ATOM);
    out.push('^');
    write_prec(out, exp, P_ATOM);
}

fn write_factor(out: &mut String, base: &Expr, key: &Number) {
    if key.is_one() {
        write_prec(out, base, P_MUL + 1);
    } else {
        write_power(out, base, &Expr::num(key.clone()));
    }
}

/// Writes `coeff * prod(base^key)`, moving negative powers into a denominator.
fn write_product(out: &mut String, coeff: &Number, factors: &[(Expr, Number)]) {
    let (num, den): (Vec<_>, Vec<_>) = factors.iter().partition(|(_, k)| !(k.is_real() && k.is_negative()));
    let (cnum, cden) = if !den.is_empty() && coeff.is_rational() {
        (coeff.numer(), coeff.denom())
    } else {
        (coeff.clone(), Number::one())
    };
    if num.is_empty() {
        let min = if den.is_empty() || cnum.is_real() { P_ADD } else { P_MUL };
        write_prec(out, &Expr::num(cnum), min);
    } else {
        if cnum.is_minus_one() {
            out.push('-');
        } else if !cnum.is_one() {
            let p = number_prec(&cnum);
            if p == P_ADD && !(cnum.is_real() && cnum.is_negative()) {
                let _ = write!(out, "({cnum})");
            } else {
                let _ = write!(out, "{cnum}");
            }
            out.push('*');
        }
        for (i, (b, k)) in num.iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            write_factor(out, b, k);
        }
    }
    let mut items = Vec::new();
    if !cden.is_one() {
        items.push(cden.to_string());
    }
    for (b, k) in &den {
        let mut s = String::new();
        write_factor(&mut s, b, &k.neg());
        items.push(s);
    }
    if items.len() == 1 {
        out.push('/');
        out.push_str(&items[0]);
    } else if items.len() > 1 {
        out.push_str("/(");
        out.push_str(&items.join("*"));
        out.push(')');
    }
}

fn term_factors(rest: &Expr) -> Vec<(Expr, Number)> {
    match rest.kind() {
        Kind::Mul(ps) => ps.pairs.clone(),
        Kind::Power(b, e) if e.is_numeric() => vec![(b.clone(), e.as_number().unwrap().clone())],
        _ => vec![(rest.clone(), Number::one())],
    }
}

fn push_term(out: &mut String, term: &str) {
    if !out.is_empty() && !term.starts_with('-') {
        out.push('+');
    }
    out.push_str(term);
}

fn write_add(out: &mut String, ps: &PairSeq) {
    let mut s = String::new();
    if !ps.overall.is_zero() {
        write_prec(&mut s, &Expr::num(ps.overall.clone()), P_ADD);
    }
    for (r, k) in &ps.pairs {
        let mut t = String::new();
        write_product(&mut t, k, &term_factors(r));
        push_term(&mut s, &t);
    }
    out.push_str(&s);
}

fn write_expr(out: &mut String, e: &Expr) {
    match e.kind() {
        Kind::Numeric(n) => {
            let _ = write!(out, "{n}");
        }
        Kind::Symbol(s) => out.push_str(s.name()),
        Kind::Constant(c) => out.push_str(c.name()),
        Kind::Add(ps) => write_add(out, ps),
        Kind::Mul(ps) => write_product(out, &ps.overall, &ps.pairs),
        Kind::Power(b, x) => match x.as_number() {
            Some(k) if k.is_real() && k.is_negative() => write_product(out, &Number::one(), &[(b.clone(), k.clone())]),
            _ => write_power(out, b, x),
        },
        Kind::Function(f) => {
            let args = f.args();
            let shown = if f.def().name() == "psi" && args.len() == 2 && args[0].is_zero() { &args[1..] } else { args };
            out.push_str(f.def().name());
            out.push('(');
            for (i, a) in shown.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_expr(out, a);
            }
            out.push(')');
        }
        Kind::Series(s) => {
            let base = if s.point().is_zero() {
                s.var().clone()
            } else {
                build_add([s.var().clone(), -s.point()])
            };
            let mut acc = String::new();
            for (c, k) in s.terms() {
                let t = build_mul([c.clone(), build_power(base.clone(), Expr::int(*k)).expect("nonzero base")]);
                let mut ts = String::new();
                match t.kind() {
                    Kind::Add(_) => {
                        ts.push('(');
                        write_expr(&mut ts, &t);
                        ts.push(')');
                    }
                    _ => write_expr(&mut ts, &t),
                }
                push_term(&mut acc, &ts);
            }
            if let Some(n) = s.order() {
                let mut o = String::from("O(");
                match build_power(base.clone(), Expr::int(n)) {
                    Ok(p) => write_expr(&mut o, &p),
                    Err(_) => o.push('0'),
                }
                o.push(')');
                push_term(&mut acc, &o);
            }
            if acc.is_empty() {
                acc.push('0');
            }
            out.push_str(&acc);
        }
        Kind::List(items) => {
            out.push('[');
            for (i, a) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_expr(out, a);
            }
            out.push(']');
        }
        Kind::Relational(l, op, r) => {
            write_prec(out, l, P_ADD);
            out.push_str(op.as_str());
            write_prec(out, r, P_ADD);
        }
        Kind::Matrix(m) => {
            out.push('[');
            for i in 0..m.rows() {
                if i > 0 {
                    out.push(',');
                }
                out.push('[');
                for j in 0..m.cols() {
                    if j > 0 {
                        out.push(',');
                    }
                    write_expr(out, m.get(i, j));
                }
                out.push(']');
            }
            out.push(']');
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_expr(&mut s, self);
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use crate::expr::{pi, symbol, Expr};

    #[test]
    fn products_and_quotients() {
        let (x, y, c) = (symbol("x"), symbol("y"), symbol("c"));
        assert_eq!((&x * &y * 2).to_string(), "2*x*y");
        assert_eq!((&x / 2).to_string(), "1/2*x");
        assert_eq!((Expr::int(1) / &x).to_string(), "1/x");
        assert_eq!((Expr::int(1) / (2 * c.pow(2))).to_string(), "1/(2*c^2)");
        assert_eq!((-&x).to_string(), "-x");
        assert_eq!((&x - 1).to_string(), "-1+x");
        assert_eq!((&x + &y / 2).to_string(), "x+1/2*y");
        assert_eq!(x.pow(Expr::rational(1, 2)).to_string(), "sqrt(x)");
        assert_eq!(x.pow(Expr::rational(2, 3)).to_string(), "x^(2/3)");
        assert_eq!(x.pow(Expr::int(-2)).to_string(), "1/x^2");
        assert_eq!((&x + &y).pow(-1).to_string(), "1/(x+y)");
        assert_eq!((&x + 1).pow(2).to_string(), "(1+x)^2");
        assert_eq!(Expr::rational(1, 2).to_string(), "1/2");
        assert_eq!((pi() * (&x + &y / 2)).to_string(), "Pi*(x+1/2*y)");
        assert_eq!((Expr::imaginary_unit() * 2 + 1).to_string(), "1+2*I");
        assert_eq!(((Expr::imaginary_unit() * 2 + 1) * &x).to_string(), "(1+2*I)*x");
        assert_eq!((Expr::int(2).sqrt() * 3).to_string(), "3*sqrt(2)");
        assert_eq!((&y / &x * 3 - 1).to_string(), "-1+3*y/x");
        assert_eq!(((Expr::imaginary_unit() * 2 + 1) / &x).to_string(), "(1+2*I)/x");
        assert_eq!((Expr::int(-3) / &x).to_string(), "-3/x");
    }
}
