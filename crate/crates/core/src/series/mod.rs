//! Truncated power and Laurent series with exact coefficients.

pub mod fn_series;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::expr::{build_add, build_mul, build_power, expand, subs_pairs, Expr, Kind, RelOp};
use crate::func::FunctionApp;
use crate::num::Number;

/// `sum(c_k * (var - point)^k) + O((var - point)^order)`.
///
/// Without an order term the series is an exact polynomial.
#[derive(Clone, Debug)]
pub struct PSeries {
    var: Expr,
    point: Expr,
    terms: Vec<(Expr, i64)>,
    order: Option<i64>,
}

/// Product of coefficients, kept expanded.
pub(crate) fn cmul(a: &Expr, b: &Expr) -> Result<Expr> {
    if a.is_numeric() || b.is_numeric() {
        return Ok(build_mul([a.clone(), b.clone()]));
    }
    expand(&build_mul([a.clone(), b.clone()]))
}

impl PSeries {
    /// Normalizes `terms`: merges equal exponents, drops zeros and terms at or
    /// beyond the order.
    pub fn new(var: Expr, point: Expr, terms: Vec<(Expr, i64)>, order: Option<i64>) -> PSeries {
        let mut by_exp: BTreeMap<i64, Vec<Expr>> = BTreeMap::new();
        for (c, k) in terms {
            if order.is_none_or(|n| k < n) {
                by_exp.entry(k).or_default().push(c);
            }
        }
        let terms = by_exp
            .into_iter()
            .filter_map(|(k, cs)| {
                let c = if cs.len() == 1 { cs.into_iter().next().unwrap() } else { build_add(cs) };
                (!c.is_zero()).then_some((c, k))
            })
            .collect();
        PSeries { var, point, terms, order }
    }

    fn like(&self, terms: Vec<(Expr, i64)>, order: Option<i64>) -> PSeries {
        PSeries::new(self.var.clone(), self.point.clone(), terms, order)
    }

    /// The constant `c` as a series.
    pub fn constant(var: &Expr, point: &Expr, c: Expr) -> PSeries {
        PSeries::new(var.clone(), point.clone(), vec![(c, 0)], None)
    }

    pub fn var(&self) -> &Expr {
        &self.var
    }

    pub fn point(&self) -> &Expr {
        &self.point
    }

    pub fn terms(&self) -> &[(Expr, i64)] {
        &self.terms
    }

    pub fn order(&self) -> Option<i64> {
        self.order
    }

    /// Lowest exponent present, or the order for a pure order term.
    pub fn ldegree(&self) -> Option<i64> {
        self.terms.first().map(|t| t.1).or(self.order)
    }

    pub fn coeff(&self, k: i64) -> Expr {
        self.terms.iter().find(|t| t.1 == k).map_or_else(Expr::zero, |t| t.0.clone())
    }

    /// Drops terms at exponent `n` and above and sets the order to `n`.
    pub fn truncate(&self, n: i64) -> PSeries {
        let n = self.order.map_or(n, |o| o.min(n));
        self.like(self.terms.clone(), Some(n))
    }

    /// The polynomial part as an ordinary expression.
    pub fn to_expr(&self) -> Expr {
        let base = if self.point.is_zero() { self.var.clone() } else { build_add([self.var.clone(), -&self.point]) };
        build_add(self.terms.iter().map(|(c, k)| {
            build_mul([c.clone(), build_power(base.clone(), Expr::int(*k)).expect("nonzero base")])
        }))
    }

    fn check_compatible(&self, other: &PSeries) -> Result<()> {
        if self.var != other.var || self.point != other.point {
            return Err(Error::Domain("series in different variables or points".into()));
        }
        Ok(())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Expr) -> Result<PSeries> {
        let terms = self.terms.iter().map(|(a, k)| Ok((cmul(a, c)?, *k))).collect::<Result<_>>()?;
        Ok(self.like(terms, self.order))
    }

    /// Multiplies by `(var - point)^s`.
    pub fn shift(&self, s: i64) -> PSeries {
        let terms = self.terms.iter().map(|(c, k)| (c.clone(), k + s)).collect();
        self.like(terms, self.order.map(|o| o + s))
    }
}

fn min_order(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

/// Termwise sum; the order is the smaller of the two.
pub fn ps_add(a: &PSeries, b: &PSeries) -> Result<PSeries> {
    a.check_compatible(b)?;
    let mut terms = a.terms.clone();
    terms.extend(b.terms.iter().cloned());
    Ok(a.like(terms, min_order(a.order, b.order)))
}

/// Cauchy product truncated at `min(Na + ldeg b, Nb + ldeg a)`.
pub fn ps_mul(a: &PSeries, b: &PSeries) -> Result<PSeries> {
    a.check_compatible(b)?;
    let order = min_order(
        a.order.map(|n| n + b.ldegree().unwrap_or(0)),
        b.order.map(|n| n + a.ldegree().unwrap_or(0)),
    );
    let mut acc: BTreeMap<i64, Vec<Expr>> = BTreeMap::new();
    for (ca, ka) in &a.terms {
        for (cb, kb) in &b.terms {
            let k = ka + kb;
            if order.is_none_or(|n| k < n) {
                acc.entry(k).or_default().push(cmul(ca, cb)?);
            }
        }
    }
    let terms = acc.into_iter().map(|(k, cs)| (build_add(cs), k)).collect();
    Ok(a.like(terms, order))
}

/// `a^k`. A non-integer `k` requires `ldeg(a) * k` to be an integer; a
/// symbolic `k` requires `ldeg(a) = 0`.
pub fn ps_pow(a: &PSeries, k: &Expr) -> Result<PSeries> {
    pow_to(a, k, None)
}

/// `a^k` with the result order capped at `target`.
pub(crate) fn pow_to(a: &PSeries, k: &Expr, target: Option<i64>) -> Result<PSeries> {
    let cap = |s: PSeries| match target {
        Some(t) => s.truncate(t),
        None => s,
    };
    if k.is_one() {
        return Ok(cap(a.clone()));
    }
    if k.is_zero() {
        return Ok(cap(a.like(vec![(Expr::one(), 0)], None)));
    }
    let Some(&(ref lead, m)) = a.terms.first() else {
        return match k.as_number() {
            Some(kn) if kn.is_integer() && kn.is_positive() => {
                let o = a.order.unwrap().checked_mul(kn.to_i64().unwrap_or(i64::MAX)).unwrap_or(i64::MAX);
                Ok(cap(a.like(Vec::new(), Some(o))))
            }
            _ => Err(Error::Series("power of a series with unknown leading term".into())),
        };
    };
    let kn = k.as_number();
    // exponent of the leading factor x^(m k)
    let shift = match kn {
        _ if m == 0 => 0,
        Some(kn) => {
            let mk = kn.mul(&Number::from(m));
            match mk.to_i64() {
                Some(s) if mk.is_integer() => s,
                _ => return Err(Error::Series(format!("fractional power of a series with leading exponent {m}"))),
            }
        }
        None => return Err(Error::Series("symbolic power of a series with a zero or pole".into())),
    };
    let exact_poly_power = a.order.is_none() && kn.is_some_and(|kn| kn.is_integer() && kn.is_positive());
    if exact_poly_power {
        let n = kn.unwrap().to_i64().ok_or_else(|| Error::Domain("exponent too large".into()))?;
        let mut acc = a.clone();
        for _ in 1..n {
            acc = ps_mul(&acc, a)?;
        }
        return Ok(cap(acc));
    }
    // relative order of the unit part
    let rel = match (a.order, target) {
        (Some(n), Some(t)) => (n - m).min(t - shift),
        (Some(n), None) => n - m,
        (None, Some(t)) => t - shift,
        (None, None) => return Err(Error::Series("infinite expansion of an exact series needs an order".into())),
    };
    if rel <= 0 {
        return Ok(a.like(Vec::new(), Some(shift + rel)));
    }
    let u: Vec<Expr> = (0..rel).map(|j| a.coeff(m + j)).collect();
    let inv0 = build_power(lead.clone(), Expr::int(-1))?;
    let p0 = expand(&build_power(lead.clone(), k.clone())?)?;
    let k1 = build_add([k.clone(), Expr::one()]);
    // Miller: p_n = 1/(n u_0) sum_{j=1..n} ((k+1) j - n) u_j p_{n-j}
    let mut p = vec![p0];
    for n in 1..rel {
        let mut acc = Vec::new();
        for j in 1..=n {
            if u[j as usize].is_zero() {
                continue;
            }
            let w = build_add([build_mul([k1.clone(), Expr::int(j)]), Expr::int(-n)]);
            if w.is_zero() {
                continue;
            }
            acc.push(cmul(&cmul(&w, &u[j as usize])?, &p[(n - j) as usize])?);
        }
        let s = build_add(acc);
        let c = if s.is_zero() { s } else { cmul(&s, &build_mul([inv0.clone(), Expr::rational(1, n)]))? };
        p.push(c);
    }
    let terms = p.into_iter().enumerate().map(|(j, c)| (c, shift + j as i64)).collect();
    Ok(a.like(terms, Some(shift + rel)))
}

/// Expansion of `e` in `var` around `point` with order term `O((var-point)^order)`.
pub fn series(e: &Expr, var: &Expr, point: &Expr, order: i64) -> Result<PSeries> {
    if !var.is_symbol() {
        return Err(Error::Domain(format!("{var} is not a symbol")));
    }
    if point.has(var) {
        return Err(Error::Domain("expansion point depends on the variable".into()));
    }
    let ctx = Ctx { var: var.clone(), point: point.clone() };
    let s = ctx.ser(e, order)?;
    Ok(PSeries { var: var.clone(), point: point.clone(), terms: s.terms, order: Some(order) }.truncate(order))
}

/// [`series`] with the point given as a relation `var == point`.
pub fn series_of(e: &Expr, at: &Expr, order: i64) -> Result<PSeries> {
    match at.as_relational() {
        Some((v, RelOp::Eq, p)) => series(e, v, p, order),
        _ => Err(Error::Domain(format!("{at} is not an equation"))),
    }
}

struct Ctx {
    var: Expr,
    point: Expr,
}

impl Ctx {
    fn constant(&self, c: Expr) -> PSeries {
        PSeries::constant(&self.var, &self.point, c)
    }

    /// The expansion of `e` in `t = var - point`, accurate to order `n`.
    fn ser(&self, e: &Expr, n: i64) -> Result<PSeries> {
        if !e.has(&self.var) {
            return Ok(self.constant(e.clone()));
        }
        match e.kind() {
            Kind::Symbol(_) => {
                Ok(PSeries::new(self.var.clone(), self.point.clone(), vec![(self.point.clone(), 0), (Expr::one(), 1)], None))
            }
            Kind::Add(ps) => {
                let mut acc = self.constant(Expr::num(ps.overall.clone()));
                for (r, k) in &ps.pairs {
                    let s = self.ser(r, n)?.scale(&Expr::num(k.clone()))?;
                    acc = ps_add(&acc, &s)?;
                }
                Ok(acc)
            }
            Kind::Mul(ps) => {
                let factors: Vec<Expr> = ps
                    .pairs
                    .iter()
                    .map(|(r, k)| build_power(r.clone(), Expr::num(k.clone())))
                    .collect::<Result<_>>()?;
                self.product(&factors, Expr::num(ps.overall.clone()), n)
            }
            Kind::Power(b, k) => self.power(b, k, n),
            Kind::Function(app) => self.function(e, app, n),
            Kind::Series(s) if s.var() == &self.var && s.point() == &self.point => {
                Ok(PSeries::new(self.var.clone(), self.point.clone(), s.terms().to_vec(), s.order()))
            }
            Kind::Series(s) => self.ser(&s.to_expr(), n),
            _ => Err(Error::Series(format!("cannot expand {e}"))),
        }
    }

    fn product(&self, factors: &[Expr], coeff: Expr, n: i64) -> Result<PSeries> {
        let first: Vec<PSeries> = factors.iter().map(|f| self.ser(f, n)).collect::<Result<_>>()?;
        let ldegs: Vec<i64> = first.iter().map(|s| s.ldegree().unwrap_or(n)).collect();
        let total: i64 = ldegs.iter().sum();
        let mut acc = self.constant(coeff);
        for (i, f) in factors.iter().enumerate() {
            let need = n - (total - ldegs[i]);
            let s = if need > n && first[i].order.is_some() { self.ser(f, need)? } else { first[i].clone() };
            acc = ps_mul(&acc, &s)?;
        }
        Ok(acc)
    }

    fn power(&self, b: &Expr, k: &Expr, n: i64) -> Result<PSeries> {
        if k.has(&self.var) || (!k.is_numeric() && !b.has(&self.var)) {
            let l = crate::func::log(b)?;
            return self.ser(&crate::func::exp(&build_mul([k.clone(), l])), n);
        }
        let s = self.ser(b, n)?;
        let Some(m) = s.ldegree() else {
            return Err(Error::Series("power of zero".into()));
        };
        let s = match (k.as_number(), s.order) {
            (Some(kn), Some(_)) if m != 0 => {
                // unit part must reach n - m k relative to x^(m k)
                let mk = kn.mul(&Number::from(m)).to_i64().unwrap_or(0);
                let need = n - mk + m;
                if need > n { self.ser(b, need)? } else { s }
            }
            _ => s,
        };
        if s.terms.is_empty() {
            return Err(Error::Series(format!("cannot determine the leading term of {b}")));
        }
        pow_to(&s, k, Some(n))
    }

    /// Argument of a function rewritten in `var` around 0.
    fn shifted(&self, a: &Expr) -> Result<Expr> {
        if self.point.is_zero() {
            return Ok(a.clone());
        }
        subs_pairs(a, &[(self.var.clone(), build_add([self.var.clone(), self.point.clone()]))])
    }

    fn function(&self, e: &Expr, app: &FunctionApp, n: i64) -> Result<PSeries> {
        let args = app.args().iter().map(|a| self.shifted(a)).collect::<Result<Vec<_>>>()?;
        let at0 = if let Some(hook) = app.def().series_hook() {
            hook(&args, &self.var, n)?
        } else {
            None
        };
        let at0 = match at0 {
            Some(s) => s,
            None => fn_series::taylor(app.def(), &args, &self.var, n).map_err(|err| match err {
                Error::Pole(_) | Error::DivisionByZero => Error::Series(format!("{e} is singular at the expansion point")),
                other => other,
            })?,
        };
        Ok(PSeries::new(self.var.clone(), self.point.clone(), at0.terms, at0.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::symbol;

    fn s(x: &Expr, terms: &[(i64, i64)], order: Option<i64>) -> PSeries {
        PSeries::new(x.clone(), Expr::zero(), terms.iter().map(|&(c, k)| (Expr::int(c), k)).collect(), order)
    }

    #[test]
    fn add_and_mul_orders() {
        let x = symbol("x");
        let a = s(&x, &[(1, 0), (1, 1)], Some(3));
        let b = s(&x, &[(1, 1)], Some(2));
        assert_eq!(Expr::series(ps_add(&a, &b).unwrap()).to_string(), "1+2*x+O(x^2)");
        let l = s(&x, &[(1, -1), (1, 2)], Some(3));
        let neg = s(&x, &[(-1, -1), (1, 0)], Some(1));
        assert_eq!(Expr::series(ps_add(&l, &neg).unwrap()).to_string(), "1+O(x)");
        let p = ps_mul(&s(&x, &[(1, 0), (1, 1)], Some(2)), &s(&x, &[(1, 0), (-1, 1)], Some(2))).unwrap();
        assert_eq!(Expr::series(p).to_string(), "1+O(x^2)");
        let q = ps_mul(&s(&x, &[(1, -1)], Some(0)), &s(&x, &[(1, 1)], Some(2))).unwrap();
        assert_eq!(Expr::series(q).to_string(), "1+O(x)");
        let g = ps_mul(&s(&x, &[(1, 0), (1, 1), (1, 2), (1, 3)], Some(4)), &s(&x, &[(1, 0), (-1, 1)], None)).unwrap();
        assert_eq!(Expr::series(g).to_string(), "1+O(x^4)");
    }

    #[test]
    fn powers() {
        let x = symbol("x");
        let inv = ps_pow(&s(&x, &[(1, 1)], Some(3)), &Expr::int(-1)).unwrap();
        assert_eq!(Expr::series(inv).to_string(), "1/x+O(x)");
        let a = s(&x, &[(1, 0), (3, 2)], Some(5));
        assert_eq!(Expr::series(ps_pow(&a, &Expr::one()).unwrap()).to_string(), Expr::series(a.clone()).to_string());
        let geo = series(&(Expr::one() / (1 - &x)), &x, &Expr::zero(), 4).unwrap();
        assert_eq!(Expr::series(geo).to_string(), "1+x+x^2+x^3+O(x^4)");
    }

    #[test]
    fn relativity() {
        let (v, c) = (symbol("v"), symbol("c"));
        let e = (1 - (&v / &c).pow(2)).pow(Expr::rational(-1, 2));
        let r = series(&e, &v, &Expr::zero(), 6).unwrap();
        assert_eq!(r.coeff(0), Expr::one());
        assert_eq!(r.coeff(2), Expr::rational(1, 2) * c.pow(-2));
        assert_eq!(r.coeff(4), Expr::rational(3, 8) * c.pow(-4));
        assert_eq!(r.terms().len(), 3);
        let wrapped = Expr::series(r).pow(-2);
        assert!(matches!(wrapped.kind(), Kind::Power(..)));
        let again = series(&wrapped, &v, &Expr::zero(), 6).unwrap();
        assert_eq!(Expr::series(again).to_string(), "1-v^2/c^2+O(v^6)");
    }

    #[test]
    fn nonzero_point() {
        let x = symbol("x");
        let e = x.pow(2);
        let r = series(&e, &x, &Expr::one(), 5).unwrap();
        assert_eq!(r.coeff(0), Expr::one());
        assert_eq!(r.coeff(1), Expr::int(2));
        assert_eq!(r.coeff(2), Expr::one());
        assert_eq!(r.to_expr().to_string(), "-1+2*x+(-1+x)^2");
    }

    #[test]
    fn inversion() {
        let x = symbol("x");
        let a = s(&x, &[(2, 0), (3, 1), (-1, 3)], Some(6));
        let prod = ps_mul(&a, &ps_pow(&a, &Expr::int(-1)).unwrap()).unwrap();
        assert_eq!(Expr::series(prod).to_string(), "1+O(x^6)");
    }
}
