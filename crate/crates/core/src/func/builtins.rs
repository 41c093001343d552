use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{apply, builtin, FunctionBuilder, FunctionDef};
use crate::error::{Error, Result};
use crate::expr::{build_add, build_mul, build_power, euler, pi, Expr, Kind};
use crate::num::{bernoulli_rational, elementary, factorial as int_factorial, Float, Number, Precision};
use crate::series::fn_series;

pub(super) fn definitions() -> Vec<FunctionBuilder> {
    vec![
        FunctionDef::builder("sin", 1)
            .eval(|a| Ok(trig_eval(&a[0], true)))
            .evalf(|a, p| Ok(real_arg(&a[0], p).map(|x| Number::Float(elementary::sin(&x, p)))))
            .derivative(|a, _| Ok(cos(&a[0])))
            .series(|a, v, n| fn_series::sin_cos(&a[0], v, n, true).map(Some)),
        FunctionDef::builder("cos", 1)
            .eval(|a| Ok(trig_eval(&a[0], false)))
            .evalf(|a, p| Ok(real_arg(&a[0], p).map(|x| Number::Float(elementary::cos(&x, p)))))
            .derivative(|a, _| Ok(-sin(&a[0])))
            .series(|a, v, n| fn_series::sin_cos(&a[0], v, n, false).map(Some)),
        FunctionDef::builder("exp", 1)
            .eval(|a| Ok(exp_eval(&a[0])))
            .evalf(|a, p| match real_arg(&a[0], p) {
                Some(x) => Ok(Some(Number::Float(elementary::exp(&x, p)?))),
                None => Ok(None),
            })
            .derivative(|a, _| Ok(exp(&a[0])))
            .series(|a, v, n| fn_series::exp(&a[0], v, n).map(Some)),
        FunctionDef::builder("log", 1)
            .eval(|a| log_eval(&a[0]))
            .evalf(|a, p| log_evalf(&a[0], p))
            .derivative(|a, _| a[0].checked_pow(Expr::int(-1)))
            .series(|a, v, n| fn_series::log(&a[0], v, n).map(Some)),
        FunctionDef::builder("gamma", 1)
            .eval(|a| gamma_eval(&a[0]))
            .evalf(|a, p| match real_arg(&a[0], p) {
                Some(x) => Ok(Some(Number::Float(elementary::gamma(&x, p)?))),
                None => Ok(None),
            })
            .derivative(|a, _| Ok(build_mul([gamma(&a[0])?, psi(&Expr::zero(), &a[0])?])))
            .series(|a, v, n| fn_series::gamma(&a[0], v, n)),
        FunctionDef::builder("psi", 2)
            .eval(|a| psi_eval(&a[0], &a[1]))
            .derivative(|a, i| {
                if i == 0 {
                    return Err(Error::UnevaluatedDerivative("psi with respect to its order".into()));
                }
                psi(&build_add([a[0].clone(), Expr::one()]), &a[1])
            }),
        FunctionDef::builder("zeta", 1)
            .eval(|a| zeta_eval(&a[0]))
            .evalf(|a, p| match real_arg(&a[0], p) {
                Some(x) => Ok(Some(Number::Float(elementary::zeta(&x, p)?))),
                None => Ok(None),
            }),
        FunctionDef::builder("factorial", 1)
            .eval(|a| factorial_eval(&a[0]))
            .evalf(|a, p| match real_arg(&a[0], p) {
                Some(x) => {
                    let one = Float::from_bigint(&BigInt::one(), p);
                    Ok(Some(Number::Float(elementary::gamma(&x.add(&one), p)?)))
                }
                None => Ok(None),
            }),
    ]
}

fn real_arg(n: &Number, p: Precision) -> Option<Float> {
    match n.to_float(p) {
        Number::Float(f) => Some(f),
        _ => None,
    }
}

pub fn sin(x: &Expr) -> Expr {
    apply(&builtin("sin"), vec![x.clone()]).expect("sin does not fail")
}

pub fn cos(x: &Expr) -> Expr {
    apply(&builtin("cos"), vec![x.clone()]).expect("cos does not fail")
}

pub fn exp(x: &Expr) -> Expr {
    apply(&builtin("exp"), vec![x.clone()]).expect("exp of this argument")
}

/// Natural logarithm; `log(0)` is a pole.
pub fn log(x: &Expr) -> Result<Expr> {
    apply(&builtin("log"), vec![x.clone()])
}

/// Gamma function; non-positive integers are poles.
pub fn gamma(x: &Expr) -> Result<Expr> {
    apply(&builtin("gamma"), vec![x.clone()])
}

/// Polygamma `psi(n, x)`, the n-th derivative of the digamma function.
pub fn psi(n: &Expr, x: &Expr) -> Result<Expr> {
    apply(&builtin("psi"), vec![n.clone(), x.clone()])
}

pub fn zeta(s: &Expr) -> Result<Expr> {
    apply(&builtin("zeta"), vec![s.clone()])
}

pub fn factorial(n: &Expr) -> Result<Expr> {
    apply(&builtin("factorial"), vec![n.clone()])
}

/// `r` when `e = r*Pi` with rational `r`.
fn pi_multiple(e: &Expr) -> Option<BigRational> {
    match e.kind() {
        Kind::Numeric(n) if n.is_exact_zero() => Some(BigRational::zero()),
        Kind::Constant(_) if *e == pi() => Some(BigRational::one()),
        Kind::Mul(ps) if ps.pairs().len() == 1 && ps.pairs()[0].0 == pi() && ps.pairs()[0].1.is_one() => {
            ps.overall().to_rational()
        }
        _ => None,
    }
}

/// sin/cos at integer and half-integer multiples of pi.
fn trig_eval(arg: &Expr, is_sin: bool) -> Option<Expr> {
    let r = pi_multiple(arg)?;
    let twice = &r * BigInt::from(2);
    if !twice.is_integer() {
        return None;
    }
    // quarter turns
    let q = twice.to_integer().mod_floor(&BigInt::from(4)).to_u32().unwrap();
    let (s, c) = [(0, 1), (1, 0), (0, -1), (-1, 0)][q as usize];
    Some(Expr::int(if is_sin { s } else { c }))
}

fn exp_eval(arg: &Expr) -> Option<Expr> {
    if arg.as_number().is_some_and(|n| n.is_exact_zero()) {
        return Some(Expr::one());
    }
    if let Kind::Function(f) = arg.kind() {
        if f.def().name() == "log" {
            return Some(f.args()[0].clone());
        }
    }
    None
}

fn log_eval(arg: &Expr) -> Result<Option<Expr>> {
    match arg.as_number() {
        Some(n) if n.is_exact_zero() => Err(Error::Pole("log(0)".into())),
        Some(n) if n.is_one() => Ok(Some(Expr::zero())),
        _ => Ok(None),
    }
}

fn log_evalf(a: &Number, p: Precision) -> Result<Option<Number>> {
    if a.is_complex() {
        return Ok(None);
    }
    if a.is_zero() {
        return Err(Error::Pole("log(0)".into()));
    }
    let x = real_arg(a, p).unwrap();
    if x.is_negative() {
        let re = elementary::ln(&x.neg(), p)?;
        return Number::complex(Number::Float(re), Number::Float(elementary::pi(p))).map(Some);
    }
    Ok(Some(Number::Float(elementary::ln(&x, p)?)))
}

fn gamma_eval(arg: &Expr) -> Result<Option<Expr>> {
    let Some(n) = arg.as_number().and_then(|n| n.as_bigint()) else {
        return Ok(None);
    };
    if !n.is_positive() {
        return Err(Error::Pole(format!("gamma({n})")));
    }
    let m = (n - 1u32).to_u64().ok_or_else(|| Error::Domain("gamma argument too large".into()))?;
    Ok(Some(Expr::num(Number::from(int_factorial(m)))))
}

/// Exact zeta(2k) as a rational multiple of pi^(2k).
fn zeta_even(k: u64) -> Expr {
    let b = bernoulli_rational(2 * k);
    let mut c = b.abs() * BigRational::from_integer(BigInt::from(2).pow((2 * k - 1) as u32));
    c /= BigRational::from_integer(int_factorial(2 * k));
    build_mul([Expr::num(Number::from_rational(c)), build_power(pi(), Expr::int(2 * k as i64)).unwrap()])
}

fn zeta_eval(arg: &Expr) -> Result<Option<Expr>> {
    let Some(n) = arg.as_number().and_then(|n| n.as_bigint()) else {
        return Ok(None);
    };
    if n.is_one() {
        return Err(Error::Pole("zeta(1)".into()));
    }
    let Some(n) = n.to_i64() else {
        return Ok(None);
    };
    if n > 0 && n % 2 == 0 {
        return Ok(Some(zeta_even(n as u64 / 2)));
    }
    if n <= 0 {
        // zeta(-m) = (-1)^m B_(m+1) / (m+1)
        let m = (-n) as u64;
        let mut v = bernoulli_rational(m + 1) / BigInt::from(m + 1);
        if m % 2 == 1 {
            v = -v;
        }
        return Ok(Some(Expr::num(Number::from_rational(v))));
    }
    Ok(None)
}

fn psi_eval(order: &Expr, x: &Expr) -> Result<Option<Expr>> {
    let Some(n) = order.as_number().and_then(|n| n.to_i64()) else {
        return Ok(None);
    };
    if n < 0 {
        return Err(Error::Domain("psi order must be nonnegative".into()));
    }
    let Some(m) = x.as_number().and_then(|v| v.as_bigint()) else {
        return Ok(None);
    };
    if !m.is_positive() {
        return Err(Error::Pole(format!("psi({n},{m})")));
    }
    let Some(m) = m.to_u64() else {
        return Ok(None);
    };
    let at_one = if n == 0 {
        -euler()
    } else {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let c = Number::from(int_factorial(n as u64)).mul(&Number::from(sign));
        build_mul([Expr::num(c), zeta(&Expr::int(n + 1))?])
    };
    if m == 1 {
        return Ok(Some(at_one));
    }
    // psi(n, m) = psi(n, 1) + (-1)^n n! sum_{k<m} k^-(n+1)
    let mut s = BigRational::zero();
    for k in 1..m {
        s += BigRational::new(BigInt::one(), BigInt::from(k).pow((n + 1) as u32));
    }
    s *= BigRational::from_integer(int_factorial(n as u64));
    if n % 2 == 1 {
        s = -s;
    }
    Ok(Some(build_add([at_one, Expr::num(Number::from_rational(s))])))
}

fn factorial_eval(arg: &Expr) -> Result<Option<Expr>> {
    match arg.as_number() {
        Some(n) if n.is_integer() => Ok(Some(Expr::num(n.factorial()?))),
        Some(n) if n.is_rational() => Err(Error::Domain("factorial of a non-integer".into())),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{evalf, subs_pairs, symbol};
    use crate::num::Precision;

    #[test]
    fn deferred_sin_transcript() {
        let (x, y) = (symbol("x"), symbol("y"));
        let d = pi() * (&x + &y / 2);
        assert_eq!(sin(&d).to_string(), "sin(Pi*(x+1/2*y))");
        let re = subs_pairs(&d, &[(y.clone(), Expr::one())]).unwrap();
        assert_eq!(sin(&re).to_string(), "sin(Pi*(1/2+x))");
        let mi = subs_pairs(&re, &[(x.clone(), Expr::int(11))]).unwrap();
        assert_eq!(mi.to_string(), "23/2*Pi");
        assert_eq!(sin(&mi), Expr::int(-1));
        let fa = evalf(&mi, Precision::DEFAULT).unwrap();
        assert_eq!(fa.to_string(), "36.128315516282622242");
        assert_eq!(sin(&fa).to_string(), "-1.0");
    }

    #[test]
    fn eval_rules() {
        let x = symbol("x");
        assert_eq!(exp(&Expr::zero()), Expr::one());
        assert_eq!(exp(&log(&x).unwrap()), x);
        assert_eq!(log(&Expr::one()).unwrap(), Expr::zero());
        assert!(matches!(log(&Expr::zero()), Err(Error::Pole(_))));
        assert_eq!(gamma(&Expr::int(5)).unwrap(), Expr::int(24));
        assert!(matches!(gamma(&Expr::int(-2)), Err(Error::Pole(_))));
        assert_eq!(zeta(&Expr::int(2)).unwrap(), pi().pow(2) / 6);
        assert_eq!(zeta(&Expr::int(4)).unwrap(), pi().pow(4) / 90);
        assert_eq!(zeta(&Expr::int(0)).unwrap(), Expr::rational(-1, 2));
        assert_eq!(zeta(&Expr::int(-1)).unwrap(), Expr::rational(-1, 12));
        assert_eq!(zeta(&Expr::int(3)).unwrap().to_string(), "zeta(3)");
        assert_eq!(psi(&Expr::zero(), &Expr::one()).unwrap(), -euler());
        assert_eq!(psi(&Expr::one(), &Expr::one()).unwrap(), pi().pow(2) / 6);
        assert_eq!(psi(&Expr::int(2), &Expr::one()).unwrap(), -2 * zeta(&Expr::int(3)).unwrap());
        assert_eq!(psi(&Expr::zero(), &Expr::int(3)).unwrap(), Expr::rational(3, 2) - euler());
        assert_eq!(psi(&Expr::zero(), &x).unwrap().to_string(), "psi(x)");
        assert_eq!(factorial(&Expr::int(5)).unwrap(), Expr::int(120));
        assert!(sin(&Expr::rational(1, 3)).to_string().starts_with("sin("));
        assert_eq!(cos(&(pi() * 3)), Expr::int(-1));
        assert_eq!(sin(&(pi() * Expr::rational(-1, 2))), Expr::int(-1));
    }

    #[test]
    fn numeric_values() {
        let p = Precision::DEFAULT;
        let z2 = evalf(&zeta(&Expr::num(Number::from(2).to_float(p))).unwrap(), p).unwrap();
        assert_eq!(z2.to_string(), "1.6449340668482264365");
        let l1 = log(&Expr::num(Number::one().to_float(p))).unwrap();
        assert!(l1.is_zero());
        assert!(log(&Expr::num(Number::zero().to_float(p))).is_err());
        let g = gamma(&Expr::num(Number::rational(1, 2).to_float(p))).unwrap();
        assert_eq!(g.to_string(), "1.7724538509055160273");
        let psi_f = psi(&Expr::zero(), &Expr::num(Number::rational(1, 2).to_float(p))).unwrap();
        assert!(psi_f.to_string().starts_with("psi("));
    }

    #[test]
    fn zeta_even_matches_numeric() {
        let p = Precision::DEFAULT;
        for k in 1..=6i64 {
            let exact = evalf(&zeta(&Expr::int(2 * k)).unwrap(), p).unwrap();
            let f = Number::from(2 * k).to_float(p);
            let direct = elementary::zeta(f.as_float().unwrap(), p).unwrap();
            let diff = exact.as_number().unwrap().sub(&Number::Float(direct));
            assert!(diff.to_f64().abs() < 1e-18, "zeta({})", 2 * k);
        }
    }
}
