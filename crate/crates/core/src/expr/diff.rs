use super::{build_add, build_mul, build_power, map_children, Expr, Kind};
use crate::error::{Error, Result};
use crate::func::log;
use crate::series::PSeries;

/// `n`-th derivative of `e` with respect to the symbol `x`.
pub fn diff(e: &Expr, x: &Expr, n: u32) -> Result<Expr> {
    if !x.is_symbol() {
        return Err(Error::Domain(format!("cannot differentiate with respect to {x}")));
    }
    let mut d = e.clone();
    for _ in 0..n {
        d = diff1(&d, x)?;
    }
    Ok(d)
}

fn diff1(e: &Expr, x: &Expr) -> Result<Expr> {
    if !e.has(x) {
        return Ok(match e.kind() {
            Kind::List(_) | Kind::Matrix(_) => map_children(e, |_| Ok(Expr::zero()))?,
            _ => Expr::zero(),
        });
    }
    match e.kind() {
        Kind::Symbol(_) => Ok(Expr::one()),
        Kind::Add(ps) => {
            let mut terms = Vec::with_capacity(ps.pairs.len());
            for (r, k) in &ps.pairs {
                if r.has(x) {
                    terms.push(build_mul([diff1(r, x)?, Expr::num(k.clone())]));
                }
            }
            Ok(build_add(terms))
        }
        Kind::Mul(ps) => {
            let factors: Vec<Expr> = ps
                .pairs
                .iter()
                .map(|(r, k)| build_power(r.clone(), Expr::num(k.clone())))
                .collect::<Result<_>>()?;
            let mut terms = Vec::new();
            for (i, (r, k)) in ps.pairs.iter().enumerate() {
                if !r.has(x) {
                    continue;
                }
                // d(r^k) = k r^(k-1) dr
                let dk = if k.is_one() {
                    diff1(r, x)?
                } else {
                    let lowered = build_power(r.clone(), Expr::num(k.sub(&crate::num::Number::one())))?;
                    build_mul([Expr::num(k.clone()), lowered, diff1(r, x)?])
                };
                let mut t = vec![Expr::num(ps.overall.clone()), dk];
                t.extend(factors.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, f)| f.clone()));
                terms.push(build_mul(t));
            }
            Ok(build_add(terms))
        }
        Kind::Power(b, p) => {
            if !p.has(x) {
                let lowered = build_power(b.clone(), build_add([p.clone(), Expr::int(-1)]))?;
                return Ok(build_mul([p.clone(), lowered, diff1(b, x)?]));
            }
            // d(b^p) = b^p (p' log b + p b'/b)
            let mut inner = vec![build_mul([diff1(p, x)?, log(b)?])];
            if b.has(x) {
                inner.push(build_mul([p.clone(), diff1(b, x)?, build_power(b.clone(), Expr::int(-1))?]));
            }
            Ok(build_mul([e.clone(), build_add(inner)]))
        }
        Kind::Function(app) => {
            let mut terms = Vec::new();
            for (i, a) in app.args().iter().enumerate() {
                if a.has(x) {
                    terms.push(build_mul([app.def().derivative(app.args(), i)?, diff1(a, x)?]));
                }
            }
            Ok(build_add(terms))
        }
        Kind::Series(s) if s.var() == x => {
            let mut terms = Vec::with_capacity(s.terms().len());
            for (c, k) in s.terms() {
                if *k != 0 {
                    terms.push((build_mul([c.clone(), Expr::int(*k)]), k - 1));
                }
            }
            Ok(Expr::series(PSeries::new(s.var().clone(), s.point().clone(), terms, s.order().map(|o| o - 1))))
        }
        Kind::Series(s) if s.point().has(x) => Err(Error::Domain("series point depends on the variable".into())),
        Kind::Relational(..) => Err(Error::Domain("cannot differentiate a relation".into())),
        _ => map_children(e, |c| diff1(c, x)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{evalf, subs_pairs, symbol};
    use crate::func::{cos, exp, sin};
    use crate::num::{Number, Precision};

    fn at(e: &Expr, x: &Expr, v: &Number) -> f64 {
        let p = Precision::DEFAULT;
        let r = evalf(&subs_pairs(e, &[(x.clone(), Expr::num(v.clone()))]).unwrap(), p).unwrap();
        r.as_number().expect("numeric").to_f64()
    }

    fn central(e: &Expr, x: &Expr, v: &Number) -> f64 {
        let h = Number::rational(1, 100000);
        (at(e, x, &v.add(&h)) - at(e, x, &v.sub(&h))) / (2.0 * h.to_f64())
    }

    #[test]
    fn polynomial() {
        let x = symbol("x");
        assert_eq!(diff(&x.pow(3), &x, 2).unwrap(), 6 * &x);
        assert_eq!(diff(&Expr::int(7), &x, 1).unwrap(), Expr::zero());
        assert_eq!(diff(&x.pow(3), &x, 4).unwrap(), Expr::zero());
    }

    #[test]
    fn chain_rule() {
        let x = symbol("x");
        let g = exp(&-x.pow(2));
        assert_eq!(diff(&g, &x, 1).unwrap(), -2 * &x * &g);
        assert_eq!(diff(&sin(&(2 * &x)), &x, 1).unwrap(), 2 * cos(&(2 * &x)));
        let v = Number::rational(7, 10);
        let d = diff(&g, &x, 1).unwrap();
        let fd = central(&g, &x, &v);
        assert!(((at(&d, &x, &v) - fd) / fd).abs() < 1e-8);
    }

    #[test]
    fn symbolic_exponent() {
        let x = symbol("x");
        let e = x.pow(x.clone());
        let d = diff(&e, &x, 1).unwrap();
        let v = Number::rational(13, 10);
        let fd = central(&e, &x, &v);
        assert!(((at(&d, &x, &v) - fd) / fd).abs() < 1e-8);
    }

    #[test]
    fn non_symbol_variable() {
        let x = symbol("x");
        assert!(diff(&x, &(&x + 1), 1).is_err());
    }
}
