//! Rational normal form: numerator over denominator with the gcd cancelled.
//!
//! Non-rational pieces (function applications, non-integer powers, inexact
//! numbers) are replaced by temporary symbols first and restored afterwards.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::gcd::gcd;
use super::mpoly::MPoly;
use super::Vars;
use crate::error::{Error, Result};
use crate::expr::{build_mul, build_power, compare, fresh_symbol, map_children, subs_pairs, Expr, Kind};
use crate::func::apply;
use crate::num::Number;

/// `num / den` with `den` having a positive leading coefficient.
#[derive(Clone)]
struct Frac {
    num: MPoly,
    den: MPoly,
}

impl Frac {
    fn poly(p: MPoly) -> Frac {
        Frac { num: p, den: MPoly::one() }
    }

    fn int(c: BigInt) -> Frac {
        Frac::poly(MPoly::constant(c))
    }

    fn cancel(num: MPoly, den: MPoly) -> Result<Frac> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Frac::int(BigInt::from(0)));
        }
        let g = gcd(&num, &den);
        let (mut n, mut d) = if g.as_constant().is_some_and(|c| c.is_one()) {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if !d.is_unit_normal() {
            n = n.neg();
            d = d.neg();
        }
        Ok(Frac { num: n, den: d })
    }

    fn add(&self, o: &Frac) -> Result<Frac> {
        if let (Some(a), Some(b)) = (self.den.as_constant(), o.den.as_constant()) {
            let l = a.lcm(&b);
            let n = self.num.scale(&(&l / &a)).add(&o.num.scale(&(&l / &b)));
            return Frac::cancel(n, MPoly::constant(l));
        }
        let g = gcd(&self.den, &o.den);
        let da = self.den.div_exact(&g).expect("gcd divides");
        let db = o.den.div_exact(&g).expect("gcd divides");
        let n = self.num.mul(&db).add(&o.num.mul(&da));
        Frac::cancel(n, self.den.mul(&db))
    }

    fn mul(&self, o: &Frac) -> Result<Frac> {
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n = self.num.div_exact(&g1).unwrap().mul(&o.num.div_exact(&g2).unwrap());
        let d = self.den.div_exact(&g2).unwrap().mul(&o.den.div_exact(&g1).unwrap());
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !d.is_unit_normal() {
            return Ok(Frac { num: n.neg(), den: d.neg() });
        }
        Ok(Frac { num: n, den: d })
    }

    fn powi(&self, k: i64) -> Result<Frac> {
        let e = k.unsigned_abs() as u32;
        if k >= 0 {
            return Ok(Frac { num: self.num.pow(e), den: self.den.pow(e) });
        }
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Frac::cancel(self.den.pow(e), self.num.pow(e))
    }
}

struct Normalizer {
    vars: Vars,
    /// generator expression -> temporary symbol
    gens: HashMap<Expr, Expr>,
    back: Vec<(Expr, Expr)>,
}

impl Normalizer {
    fn gen(&mut self, e: &Expr) -> Frac {
        let sym = match self.gens.get(e) {
            Some(s) => s.clone(),
            None => {
                let s = fresh_symbol();
                self.gens.insert(e.clone(), s.clone());
                self.back.push((s.clone(), e.clone()));
                s
            }
        };
        Frac::poly(MPoly::var(self.vars.index_of(&sym)))
    }

    fn number(&mut self, n: &Number) -> Frac {
        match n.to_rational() {
            Some(r) => Frac { num: MPoly::constant(r.numer().clone()), den: MPoly::constant(r.denom().clone()) },
            None if n.is_complex() && n.real_part().is_rational() && n.imag_part().is_rational() => {
                let re = self.number(&n.real_part());
                let im = self.number(&n.imag_part());
                let i = self.gen(&Expr::imaginary_unit());
                re.add(&im.mul(&i).expect("no zero denominators")).expect("no zero denominators")
            }
            None => self.gen(&Expr::num(n.clone())),
        }
    }

    /// `base^(p/q)` through the generator `base^(1/q)`.
    fn root_power(&mut self, base: &Expr, k: &Number) -> Result<Frac> {
        let r = k.to_rational().expect("rational exponent");
        let q = r.denom().to_i64().ok_or_else(|| Error::Domain("exponent denominator too large".into()))?;
        let p = r.numer().to_i64().ok_or_else(|| Error::Domain("exponent too large".into()))?;
        let nb = normal(base)?;
        let g = build_power(nb, Expr::rational(1, q))?;
        if !matches!(g.kind(), Kind::Power(..)) {
            return self.frac(&build_power(g, Expr::int(p))?);
        }
        self.gen(&g).powi(p)
    }

    fn function(&mut self, e: &Expr) -> Result<Frac> {
        let Kind::Function(app) = e.kind() else { unreachable!() };
        let args = app.args().iter().map(normal).collect::<Result<Vec<_>>>()?;
        let f = apply(app.def(), args.clone())?;
        if !matches!(f.kind(), Kind::Function(_)) {
            return self.frac(&f);
        }
        // exp(u) and exp(-u) share one generator
        if app.def().name() == "exp" {
            let neg = normal(&-&args[0])?;
            if compare(&neg, &args[0]).is_lt() {
                let g = apply(app.def(), vec![neg])?;
                return self.gen(&g).powi(-1);
            }
        }
        Ok(self.gen(&f))
    }

    fn frac(&mut self, e: &Expr) -> Result<Frac> {
        match e.kind() {
            Kind::Numeric(n) => Ok(self.number(n)),
            Kind::Symbol(_) | Kind::Constant(_) => Ok(Frac::poly(MPoly::var(self.vars.index_of(e)))),
            Kind::Add(ps) => {
                let mut acc = self.number(ps.overall());
                for (r, k) in ps.pairs() {
                    let t = self.frac(r)?.mul(&self.number(k))?;
                    acc = acc.add(&t)?;
                }
                Ok(acc)
            }
            Kind::Mul(ps) => {
                let mut acc = self.number(ps.overall());
                for (r, k) in ps.pairs() {
                    let f = self.power(r, k)?;
                    acc = acc.mul(&f)?;
                }
                Ok(acc)
            }
            Kind::Power(b, k) => match k.as_number() {
                Some(kn) => self.power(b, kn),
                None => {
                    let g = build_power(normal(b)?, normal(k)?)?;
                    if matches!(g.kind(), Kind::Power(..)) { Ok(self.gen(&g)) } else { self.frac(&g) }
                }
            },
            Kind::Function(_) => self.function(e),
            _ => Ok(self.gen(e)),
        }
    }

    fn power(&mut self, b: &Expr, k: &Number) -> Result<Frac> {
        if k.is_integer() {
            let n = k.to_i64().ok_or_else(|| Error::Domain("exponent too large".into()))?;
            return self.frac(b)?.powi(n);
        }
        if k.is_rational() {
            return self.root_power(b, k);
        }
        let g = build_power(b.clone(), Expr::num(k.clone()))?;
        Ok(self.gen(&g))
    }
}

/// Rational normal form of `e`: a single quotient of coprime polynomials,
/// numerator expanded, generators restored.
pub fn normal(e: &Expr) -> Result<Expr> {
    match e.kind() {
        Kind::Numeric(_) | Kind::Symbol(_) | Kind::Constant(_) | Kind::Series(_) => return Ok(e.clone()),
        Kind::List(_) | Kind::Relational(..) | Kind::Matrix(_) => return map_children(e, normal),
        _ => {}
    }
    let mut n = Normalizer { vars: Vars::of(&[e]), gens: HashMap::new(), back: Vec::new() };
    let f = n.frac(e)?;
    let num = n.vars.to_expr(&f.num);
    let den = n.vars.to_expr(&f.den);
    let q = if let Some(c) = f.den.as_constant() {
        build_mul([num, Expr::num(Number::make(BigInt::one(), c)?)])
    } else {
        build_mul([num, build_power(den, Expr::int(-1))?])
    };
    if n.back.is_empty() {
        return Ok(q);
    }
    subs_pairs(&q, &n.back)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{diff, symbol};
    use crate::func::{exp, sin};

    #[test]
    fn cancels() {
        let x = symbol("x");
        let e = (x.pow(2) - 1) / (&x - 1);
        assert_eq!(normal(&e).unwrap(), &x + 1);
        assert_eq!(normal(&(Expr::rational(1, 2) + Expr::rational(1, 3))).unwrap(), Expr::rational(5, 6));
        let y = symbol("y");
        let s = Expr::one() / &x + Expr::one() / &y;
        assert_eq!(normal(&s).unwrap(), (&x + &y) / (&x * &y));
    }

    #[test]
    fn hermite_generators() {
        let z = symbol("z");
        let g = exp(&-z.pow(2));
        let h = normal(&(-diff(&g, &z, 11).unwrap() / &g)).unwrap();
        assert_eq!(
            h.to_string(),
            "-665280*z+2217600*z^3-1774080*z^5+506880*z^7-56320*z^9+2048*z^11"
        );
        let h2 = normal(&(-exp(&z.pow(2)) * diff(&g, &z, 11).unwrap())).unwrap();
        assert_eq!(h2, h);
    }

    #[test]
    fn function_generators() {
        let x = symbol("x");
        let s = sin(&x);
        let e = (s.pow(2) - 1) / (&s + 1);
        assert_eq!(normal(&e).unwrap(), &s - 1);
        let r = Expr::int(2).sqrt();
        assert_eq!(normal(&(&r * &r / 2)).unwrap(), Expr::one());
    }

    #[test]
    fn idempotent() {
        let (x, y) = (symbol("x"), symbol("y"));
        let e = (&x + &y) / (x.pow(2) - y.pow(2)) + Expr::one() / &y;
        let n = normal(&e).unwrap();
        assert_eq!(normal(&n).unwrap(), n);
    }

    #[test]
    fn zero_denominator() {
        let x = symbol("x");
        let d = (&x + 1).pow(2) - x.pow(2) - 2 * &x - 1;
        assert!(matches!(normal(&(Expr::one() / d)), Err(Error::DivisionByZero)));
    }
}
