//! Distribution of products over sums.

use super::{add_from_pairs, build_mul, build_power, map_children, push_add_term, Expr, Kind};
use crate::error::Result;
use crate::num::Number;

/// Fully distributed form of `e`: products over sums are multiplied out and
/// positive integer powers of sums are expanded, recursively.
pub fn expand(e: &Expr) -> Result<Expr> {
    match e.kind() {
        Kind::Numeric(_) | Kind::Symbol(_) | Kind::Constant(_) => Ok(e.clone()),
        Kind::Add(ps) => {
            let mut overall = ps.overall.clone();
            let mut pairs = Vec::with_capacity(ps.pairs.len());
            for (r, k) in &ps.pairs {
                let x = expand(r)?;
                let scaled = if k.is_one() { x } else { build_mul([x, Expr::num(k.clone())]) };
                push_add_term(&scaled, &mut overall, &mut pairs);
            }
            Ok(add_from_pairs(overall, pairs))
        }
        Kind::Mul(ps) => {
            let mut acc = Terms::constant(ps.overall.clone());
            for (r, k) in &ps.pairs {
                let f = expand_power(&expand(r)?, k)?;
                acc = acc.mul(&Terms::of(&f));
            }
            Ok(acc.into_expr())
        }
        Kind::Power(b, x) => match x.as_number() {
            Some(k) => expand_power(&expand(b)?, k),
            None => build_power(expand(b)?, expand(x)?),
        },
        _ => map_children(e, expand),
    }
}

fn expand_power(base: &Expr, k: &Number) -> Result<Expr> {
    let n = k.to_i64().filter(|n| *n > 1 && matches!(base.kind(), Kind::Add(_)));
    let Some(n) = n else {
        return build_power(base.clone(), Expr::num(k.clone()));
    };
    let t = Terms::of(base);
    let mut acc = t.square();
    for _ in 2..n {
        acc = acc.mul(&t);
    }
    Ok(acc.into_expr())
}

/// An expanded sum as a flat list of terms.
struct Terms {
    overall: Number,
    pairs: Vec<(Expr, Number)>,
}

impl Terms {
    fn constant(c: Number) -> Terms {
        Terms { overall: c, pairs: Vec::new() }
    }

    fn of(e: &Expr) -> Terms {
        match e.kind() {
            Kind::Add(ps) => Terms { overall: ps.overall.clone(), pairs: ps.pairs.clone() },
            _ => {
                let mut t = Terms::constant(Number::zero());
                push_add_term(e, &mut t.overall, &mut t.pairs);
                t
            }
        }
    }

    fn all(&self) -> Vec<(Option<&Expr>, &Number)> {
        let mut v: Vec<_> = self.pairs.iter().map(|(r, k)| (Some(r), k)).collect();
        if !self.overall.is_zero() {
            v.push((None, &self.overall));
        }
        v
    }

    fn product(a: (Option<&Expr>, &Number), b: (Option<&Expr>, &Number), scale: &Number, out: &mut Terms) {
        let c = a.1.mul(b.1).mul(scale);
        match (a.0, b.0) {
            (None, None) => out.overall = out.overall.add(&c),
            (Some(r), None) | (None, Some(r)) => out.pairs.push((r.clone(), c)),
            (Some(r), Some(s)) => {
                let p = build_mul([Expr::num(c), r.clone(), s.clone()]);
                // a product of expanded terms can contain a sum, e.g. (x+1)^(-1) * (x+1)^2
                let p = if matches!(p.kind(), Kind::Mul(ps) if ps.pairs.iter().any(|(r, k)| k.is_integer() && k.is_positive() && matches!(r.kind(), Kind::Add(_)))) {
                    expand(&p).expect("expanding a product of expanded terms")
                } else {
                    p
                };
                push_add_term(&p, &mut out.overall, &mut out.pairs);
            }
        }
    }

    fn mul(&self, other: &Terms) -> Terms {
        let mut out = Terms::constant(Number::zero());
        let (a, b) = (self.all(), other.all());
        for x in &a {
            for y in &b {
                Terms::product(*x, *y, &Number::one(), &mut out);
            }
        }
        out
    }

    fn square(&self) -> Terms {
        let mut out = Terms::constant(Number::zero());
        let a = self.all();
        let two = Number::from(2);
        for i in 0..a.len() {
            Terms::product(a[i], a[i], &Number::one(), &mut out);
            for j in i + 1..a.len() {
                Terms::product(a[i], a[j], &two, &mut out);
            }
        }
        out
    }

    fn into_expr(self) -> Expr {
        add_from_pairs(self.overall, self.pairs)
    }
}
