use super::{build_add, build_mul, build_power, map_children, ConstValue, Expr, Kind};
use crate::error::Result;
use crate::num::{elementary, Number, Precision};

/// Numeric evaluation at `prec` digits. Symbols and functions without a
/// numeric hook stay symbolic.
pub fn evalf(e: &Expr, prec: Precision) -> Result<Expr> {
    Ok(match e.kind() {
        Kind::Numeric(n) => Expr::num(n.to_float(prec)),
        Kind::Symbol(_) => e.clone(),
        Kind::Constant(c) => Expr::num(match c.value() {
            ConstValue::Pi => Number::Float(elementary::pi(prec)),
            ConstValue::Euler => Number::Float(elementary::euler_gamma(prec)),
            ConstValue::Catalan => Number::Float(elementary::catalan(prec)),
            ConstValue::Fixed(n) => n.clone(),
        }),
        Kind::Add(ps) => {
            let mut terms = vec![Expr::num(ps.overall.to_float(prec))];
            for (r, k) in &ps.pairs {
                // unit keys stay exact so that x prints as x, not 1.0*x
                let k = if k.is_one() || k.is_minus_one() { k.clone() } else { k.to_float(prec) };
                terms.push(build_mul([evalf(r, prec)?, Expr::num(k)]));
            }
            build_add(terms)
        }
        Kind::Mul(ps) => {
            // exponents stay exact
            let mut factors = vec![Expr::num(ps.overall.to_float(prec))];
            for (r, k) in &ps.pairs {
                factors.push(build_power(evalf(r, prec)?, Expr::num(k.clone()))?);
            }
            build_mul(factors)
        }
        Kind::Power(b, x) => {
            let x = if x.is_numeric() { x.clone() } else { evalf(x, prec)? };
            build_power(evalf(b, prec)?, x)?
        }
        _ => map_children(e, |c| evalf(c, prec))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{constant, pi, symbol};

    #[test]
    fn constants() {
        let p = Precision::DEFAULT;
        assert_eq!(evalf(&pi(), p).unwrap().to_string(), "3.1415926535897932385");
        let qe = constant("qe", Number::Float(crate::num::Float::from_f64(1.60219e-19).unwrap()));
        assert_eq!(evalf(&qe, p).unwrap().to_string(), "1.60219E-19");
    }

    #[test]
    fn symbols_survive() {
        let x = symbol("x");
        let e = evalf(&(&x + Expr::rational(1, 2)), Precision::DEFAULT).unwrap();
        assert_eq!(e.to_string(), "0.5+x");
        let s = evalf(&(Expr::int(2).sqrt() * &x), Precision::new(10).unwrap()).unwrap();
        assert_eq!(s.to_string(), "1.414213562*x");
    }
}
