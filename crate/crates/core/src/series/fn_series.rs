//! Series of the built-in functions and the Taylor fallback.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{cmul, pow_to, ps_add, series, PSeries};
use crate::error::{Error, Result};
use crate::expr::{build_add, build_mul, diff, euler, fresh_symbol, subs_pairs, Expr};
use crate::func::{self, apply, FunctionDef};
use crate::num::Number;

fn arg_series(arg: &Expr, var: &Expr, n: i64) -> Result<PSeries> {
    series(arg, var, &Expr::zero(), n)
}

/// Splits `a = a0 + u` with `ldeg(u) >= 1`.
fn split_constant(a: &PSeries, what: &str) -> Result<(Expr, PSeries)> {
    if a.ldegree().is_some_and(|m| m < 0) {
        return Err(Error::Series(format!("{what} has an essential singularity here")));
    }
    let a0 = a.coeff(0);
    let u = a.like(a.terms.iter().filter(|t| t.1 != 0).cloned().collect(), a.order);
    Ok((a0, u))
}

/// `exp(u)` for `ldeg(u) >= 1` by `n e_n = sum k u_k e_(n-k)`.
pub(crate) fn exp_unit(u: &PSeries) -> Result<PSeries> {
    let Some(n) = u.order else {
        return Err(Error::Series("exp of an exact series needs an order".into()));
    };
    let coeffs: Vec<Expr> = (0..n.max(0)).map(|k| u.coeff(k)).collect();
    let mut e = vec![Expr::one()];
    for m in 1..n.max(0) {
        let mut acc = Vec::new();
        for k in 1..=m {
            let uk = &coeffs[k as usize];
            if !uk.is_zero() {
                acc.push(cmul(&build_mul([Expr::int(k), uk.clone()]), &e[(m - k) as usize])?);
            }
        }
        let s = build_add(acc);
        e.push(if s.is_zero() { s } else { cmul(&s, &Expr::rational(1, m))? });
    }
    Ok(u.like(e.into_iter().enumerate().map(|(k, c)| (c, k as i64)).collect(), Some(n)))
}

pub fn exp(arg: &Expr, var: &Expr, n: i64) -> Result<PSeries> {
    let a = arg_series(arg, var, n)?;
    let (a0, u) = split_constant(&a, "exp")?;
    let e = exp_unit(&u)?;
    if a0.is_zero() {
        Ok(e)
    } else {
        e.scale(&func::exp(&a0))
    }
}

pub fn log(arg: &Expr, var: &Expr, n: i64) -> Result<PSeries> {
    let a = arg_series(arg, var, n)?;
    if a.ldegree() != Some(0) {
        return Err(Error::Series(format!("log({arg}) is singular at the expansion point")));
    }
    let order = a.order.unwrap_or(n);
    let c: Vec<Expr> = (0..order).map(|k| a.coeff(k)).collect();
    let inv0 = c[0].checked_pow(Expr::int(-1))?;
    // l_m = (a_m - 1/m sum_{k<m} k l_k a_(m-k)) / a_0
    let mut l = vec![func::log(&c[0])?];
    for m in 1..order {
        let mut acc = vec![c[m as usize].clone()];
        for k in 1..m {
            if !l[k as usize].is_zero() && !c[(m - k) as usize].is_zero() {
                let t = cmul(&l[k as usize], &c[(m - k) as usize])?;
                acc.push(cmul(&t, &Expr::rational(-k, m))?);
            }
        }
        let s = build_add(acc);
        l.push(if s.is_zero() { s } else { cmul(&s, &inv0)? });
    }
    Ok(a.like(l.into_iter().enumerate().map(|(k, c)| (c, k as i64)).collect(), Some(order)))
}

pub fn sin_cos(arg: &Expr, var: &Expr, n: i64, want_sin: bool) -> Result<PSeries> {
    let a = arg_series(arg, var, n)?;
    let (a0, u) = split_constant(&a, if want_sin { "sin" } else { "cos" })?;
    let order = u.order.unwrap_or(n);
    let uc: Vec<Expr> = (0..order).map(|k| u.coeff(k)).collect();
    let (mut s, mut c) = (vec![Expr::zero()], vec![Expr::one()]);
    for m in 1..order {
        let (mut sa, mut ca) = (Vec::new(), Vec::new());
        for k in 1..=m {
            let uk = &uc[k as usize];
            if uk.is_zero() {
                continue;
            }
            let w = build_mul([Expr::int(k), uk.clone()]);
            sa.push(cmul(&w, &c[(m - k) as usize])?);
            ca.push(cmul(&w, &s[(m - k) as usize])?);
        }
        s.push(cmul(&build_add(sa), &Expr::rational(1, m))?);
        c.push(cmul(&build_add(ca), &Expr::rational(-1, m))?);
    }
    let to = |v: Vec<Expr>| u.like(v.into_iter().enumerate().map(|(k, c)| (c, k as i64)).collect(), Some(order));
    let (su, cu) = (to(s), to(c));
    if a0.is_zero() {
        return Ok(if want_sin { su } else { cu });
    }
    let (sa, ca) = (func::sin(&a0), func::cos(&a0));
    if want_sin {
        ps_add(&cu.scale(&sa)?, &su.scale(&ca)?)
    } else {
        ps_add(&cu.scale(&ca)?, &su.scale(&-sa)?)
    }
}

/// `g(u)` for `g` a series in its own variable and `ldeg(u) >= 1`.
fn compose(g: &PSeries, u: &PSeries, n: i64) -> Result<PSeries> {
    let mut acc = u.like(Vec::new(), g.order.map(|o| o.saturating_mul(u.ldegree().unwrap_or(1))).map(|o| o.min(n)).or(Some(n)));
    for (c, j) in &g.terms {
        let p = pow_to(u, &Expr::int(*j), Some(n))?;
        acc = ps_add(&acc, &p.scale(c)?)?;
    }
    Ok(acc)
}

/// `Gamma(w - m)` around `w = 0` in `w`, to order `n`.
pub fn gamma_pole(m: u64, w: &Expr, n: i64) -> Result<PSeries> {
    let zero = Expr::zero();
    // log Gamma(1+w) = -Euler w + sum_{k>=2} (-1)^k zeta(k) w^k / k
    let mut a = vec![(-euler(), 1)];
    for k in 2..=n + 1 {
        let z = func::zeta(&Expr::int(k))?;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        a.push((build_mul([z, Expr::rational(sign, k)]), k));
    }
    let mut s = exp_unit(&PSeries::new(w.clone(), zero.clone(), a, Some(n + 1)))?;
    for j in 1..=m as i64 {
        // 1/(w - j) = -sum w^i / j^(i+1)
        let terms = (0..=n + 1).map(|i| (Expr::num(Number::from(j).powi(&BigInt::from(-(i + 1))).unwrap().neg()), i)).collect();
        s = super::ps_mul(&s, &PSeries::new(w.clone(), zero.clone(), terms, Some(n + 1)))?;
    }
    Ok(s.shift(-1))
}

pub fn gamma(arg: &Expr, var: &Expr, n: i64) -> Result<Option<PSeries>> {
    let a = arg_series(arg, var, n + 2)?;
    let (a0, u) = split_constant(&a, "gamma")?;
    let Some(m) = a0.as_number().filter(|v| v.is_integer() && !v.is_positive()).and_then(|v| v.neg().to_i64()) else {
        return Ok(None);
    };
    let p = u.ldegree().unwrap_or(1).max(1);
    let u = if p > 1 || u.order.is_some_and(|o| o < n + 2 * p) { split_constant(&arg_series(arg, var, n + 2 * p)?, "gamma")?.1 } else { u };
    let w = fresh_symbol();
    let g = gamma_pole(m as u64, &w, n.div_euclid(p) + 1)?;
    compose(&g, &u, n).map(Some)
}

/// Laurent expansion of `Gamma(var)` around `point`.
pub fn gamma_series(var: &Expr, point: &Expr, n: i64) -> Result<PSeries> {
    series(&func::gamma(var)?, var, point, n)
}

/// Taylor expansion by differentiation, for functions without a series hook
/// or when the hook declines.
pub(crate) fn taylor(def: &Arc<FunctionDef>, args: &[Expr], var: &Expr, n: i64) -> Result<PSeries> {
    let zero = Expr::zero();
    if let [arg] = args {
        let a = arg_series(arg, var, n)?;
        let (a0, u) = split_constant(&a, def.name())?;
        let t = fresh_symbol();
        let p = u.ldegree().unwrap_or(1).max(1);
        let terms_needed = (n + p - 1) / p;
        let mut d = apply(def, vec![t.clone()])?;
        let mut coeffs = Vec::new();
        let mut fact = Number::one();
        for j in 0..terms_needed.max(1) {
            if j > 0 {
                d = diff(&d, &t, 1)?;
                fact = fact.mul(&Number::from(j));
            }
            let v = subs_pairs(&d, &[(t.clone(), a0.clone())])?;
            coeffs.push((crate::expr::expand(&build_mul([v, Expr::num(fact.recip()?)]))?, j));
        }
        let g = PSeries::new(t.clone(), zero, coeffs, Some(terms_needed.max(1)));
        return compose(&g, &u, n);
    }
    let mut d = apply(def, args.to_vec())?;
    let mut terms = Vec::new();
    let mut fact = Number::one();
    for j in 0..n.max(0) {
        if j > 0 {
            d = diff(&d, var, 1)?;
            fact = fact.mul(&Number::from(j));
        }
        let v = subs_pairs(&d, &[(var.clone(), zero.clone())])?;
        terms.push((crate::expr::expand(&build_mul([v, Expr::num(fact.recip()?)]))?, j));
    }
    Ok(PSeries::new(var.clone(), zero, terms, Some(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{pi, symbol};
    use crate::func::{cos, zeta};

    #[test]
    fn elementary() {
        let x = symbol("x");
        let e = series(&crate::func::exp(&x), &x, &Expr::zero(), 5).unwrap();
        assert_eq!(Expr::series(e).to_string(), "1+x+1/2*x^2+1/6*x^3+1/24*x^4+O(x^5)");
        let s = series(&crate::func::sin(&x), &x, &Expr::zero(), 6).unwrap();
        assert_eq!(Expr::series(s).to_string(), "x-1/6*x^3+1/120*x^5+O(x^6)");
        let l = series(&crate::func::log(&(1 + &x)).unwrap(), &x, &Expr::zero(), 4).unwrap();
        assert_eq!(Expr::series(l).to_string(), "x-1/2*x^2+1/3*x^3+O(x^4)");
        let c = series(&cos(&x), &x, &pi(), 3).unwrap();
        assert_eq!(Expr::series(c).to_string(), "-1+1/2*(x-Pi)^2+O((x-Pi)^3)");
        assert!(series(&crate::func::log(&x).unwrap(), &x, &Expr::zero(), 3).is_err());
    }

    #[test]
    fn gamma_at_zero() {
        let x = symbol("x");
        let g = gamma_series(&x, &Expr::zero(), 3).unwrap();
        let ga = euler();
        assert_eq!(g.coeff(-1), Expr::one());
        assert_eq!(g.coeff(0), -&ga);
        assert_eq!(g.coeff(1), pi().pow(2) / 12 + ga.pow(2) / 2);
        let c2 = -(pi().pow(2) * &ga / 12 + ga.pow(3) / 6 + zeta(&Expr::int(3)).unwrap() / 3);
        assert_eq!(g.coeff(2), c2);
        assert_eq!(g.order(), Some(3));
    }

    #[test]
    fn gamma_at_negative_pole() {
        let x = symbol("x");
        let g = gamma_series(&x, &Expr::int(-1), 1).unwrap();
        assert_eq!(g.coeff(-1), Expr::int(-1));
        assert_eq!(g.coeff(0), euler() - 1);
    }

    #[test]
    fn gamma_regular_point_uses_taylor() {
        let x = symbol("x");
        let g = gamma_series(&x, &Expr::one(), 2).unwrap();
        assert_eq!(g.coeff(0), Expr::one());
        assert_eq!(g.coeff(1), -euler());
    }

    #[test]
    fn gamma_functional_equation() {
        let x = symbol("x");
        for n in 1..=8 {
            let lhs = series(&crate::func::gamma(&(&x + 1)).unwrap(), &x, &Expr::zero(), n).unwrap();
            let xs = PSeries::new(x.clone(), Expr::zero(), vec![(Expr::one(), 1)], None);
            let rhs = super::super::ps_mul(&xs, &gamma_series(&x, &Expr::zero(), n).unwrap()).unwrap();
            for k in 0..n {
                assert_eq!(lhs.coeff(k), rhs.coeff(k), "order {n}, x^{k}");
            }
        }
    }
}
