//! Canonicalizing constructors for sums, products and powers.

use std::cmp::Ordering;

use num_integer::Integer;

use super::{compare, Expr, Kind, PairSeq};
use crate::error::{Error, Result};
use crate::num::Number;

/// Canonical sum of `terms`.
pub fn build_add<I: IntoIterator<Item = Expr>>(terms: I) -> Expr {
    let mut overall = Number::zero();
    let mut pairs = Vec::new();
    for t in terms {
        push_add_term(&t, &mut overall, &mut pairs);
    }
    add_from_pairs(overall, pairs)
}

pub(crate) fn push_add_term(t: &Expr, overall: &mut Number, pairs: &mut Vec<(Expr, Number)>) {
    match t.kind() {
        Kind::Numeric(n) => *overall = overall.add(n),
        Kind::Add(ps) => {
            *overall = overall.add(&ps.overall);
            pairs.extend(ps.pairs.iter().cloned());
        }
        Kind::Mul(ps) if !ps.overall.is_one() => pairs.push((mul_without_coeff(ps), ps.overall.clone())),
        _ => pairs.push((t.clone(), Number::one())),
    }
}

/// The product with its numeric coefficient replaced by 1.
fn mul_without_coeff(ps: &PairSeq) -> Expr {
    if ps.pairs.len() == 1 {
        let (r, k) = &ps.pairs[0];
        if k.is_one() {
            return r.clone();
        }
        return Expr::from_kind(Kind::Power(r.clone(), Expr::num(k.clone())));
    }
    Expr::from_kind(Kind::Mul(PairSeq { overall: Number::one(), pairs: ps.pairs.clone() }))
}

/// `coeff * rest` where `rest` is a valid sum pair.
fn scaled_term(rest: &Expr, coeff: &Number) -> Expr {
    let pairs = match rest.kind() {
        Kind::Mul(ps) => ps.pairs.clone(),
        Kind::Power(b, e) if e.is_numeric() => vec![(b.clone(), e.as_number().unwrap().clone())],
        _ => vec![(rest.clone(), Number::one())],
    };
    Expr::from_kind(Kind::Mul(PairSeq { overall: coeff.clone(), pairs }))
}

fn sort_merge(pairs: &mut Vec<(Expr, Number)>) {
    pairs.sort_by(|a, b| compare(&a.0, &b.0));
    let mut out: Vec<(Expr, Number)> = Vec::with_capacity(pairs.len());
    for (r, k) in pairs.drain(..) {
        match out.last_mut() {
            Some(last) if compare(&last.0, &r) == Ordering::Equal => last.1 = last.1.add(&k),
            _ => out.push((r, k)),
        }
    }
    *pairs = out;
}

/// Canonical sum from raw pairs whose rests are neither sums nor numbers.
pub(crate) fn add_from_pairs(overall: Number, mut pairs: Vec<(Expr, Number)>) -> Expr {
    sort_merge(&mut pairs);
    pairs.retain(|(_, k)| !k.is_zero());
    if pairs.is_empty() {
        return Expr::num(overall);
    }
    if pairs.len() == 1 && overall.is_zero() {
        let (r, k) = pairs.pop().unwrap();
        if k.is_one() {
            return r;
        }
        return scaled_term(&r, &k);
    }
    Expr::from_kind(Kind::Add(PairSeq { overall, pairs }))
}

/// Canonical product of `factors`.
pub fn build_mul<I: IntoIterator<Item = Expr>>(factors: I) -> Expr {
    let mut overall = Number::one();
    let mut pairs = Vec::new();
    for f in factors {
        match f.kind() {
            Kind::Numeric(n) => overall = overall.mul(n),
            Kind::Mul(ps) => {
                overall = overall.mul(&ps.overall);
                pairs.extend(ps.pairs.iter().cloned());
            }
            Kind::Power(b, e) if e.is_numeric() => pairs.push((b.clone(), e.as_number().unwrap().clone())),
            _ => pairs.push((f.clone(), Number::one())),
        }
    }
    mul_from_pairs(overall, pairs)
}

/// Splits `b^k` for a numeric base into a numeric factor and a residual pair.
fn numeric_power_split(b: &Number, k: &Number) -> (Number, Option<(Number, Number)>) {
    if let Some(e) = k.as_bigint() {
        return match b.powi(e) {
            Ok(v) => (v, None),
            Err(_) => (Number::one(), Some((b.clone(), k.clone()))),
        };
    }
    if b.is_float() || k.is_float() {
        return match b.pow(k) {
            Ok(v) => (v, None),
            Err(_) => (Number::one(), Some((b.clone(), k.clone()))),
        };
    }
    let (Some(r), true) = (k.to_rational(), b.is_rational()) else {
        return (Number::one(), Some((b.clone(), k.clone())));
    };
    let q = r.denom();
    if b.is_positive() {
        if let Some(root) = q.try_into().ok().and_then(|q: u32| b.exact_root(q)) {
            return (root.powi(r.numer()).expect("nonzero base"), None);
        }
    }
    let (whole, rem) = r.numer().div_mod_floor(q);
    let factor = b.powi(&whole).expect("nonzero base");
    let rem = Number::make(rem, q.clone()).expect("nonzero denominator");
    (factor, Some((b.clone(), rem)))
}

/// Canonical product from raw pairs whose rests are neither products nor sums
/// with a numeric base split out.
fn mul_from_pairs(mut overall: Number, mut pairs: Vec<(Expr, Number)>) -> Expr {
    if overall.is_exact_zero() {
        return Expr::zero();
    }
    sort_merge(&mut pairs);
    let mut rebuild = false;
    let mut kept = Vec::with_capacity(pairs.len());
    for (r, k) in pairs {
        if k.is_zero() {
            continue;
        }
        match r.kind() {
            Kind::Numeric(b) => {
                let (f, rest) = numeric_power_split(b, &k);
                overall = overall.mul(&f);
                if let Some((b2, k2)) = rest {
                    kept.push((Expr::num(b2), k2));
                }
            }
            Kind::Power(_, e) if !e.is_numeric() && k.is_integer() && !k.is_one() => {
                rebuild = true;
                kept.push((r, k));
            }
            _ => kept.push((r, k)),
        }
    }
    if rebuild {
        let mut factors = vec![Expr::num(overall)];
        for (r, k) in kept {
            let f = match r.kind() {
                Kind::Power(b, e) if !e.is_numeric() && k.is_integer() && !k.is_one() => {
                    let e2 = build_mul([e.clone(), Expr::num(k)]);
                    build_power(b.clone(), e2).expect("symbolic exponent")
                }
                _ => Expr::from_kind(Kind::Power(r, Expr::num(k))),
            };
            factors.push(f);
        }
        // Power(r, k) with k = 1 is not canonical; build_mul splits it back into a pair.
        return build_mul(factors);
    }
    if overall.is_zero() {
        return Expr::num(overall);
    }
    let mut pairs = kept;
    if pairs.is_empty() {
        return Expr::num(overall);
    }
    if pairs.len() == 1 {
        if overall.is_one() {
            let (r, k) = pairs.pop().unwrap();
            if k.is_one() {
                return r;
            }
            return Expr::from_kind(Kind::Power(r, Expr::num(k)));
        }
        if pairs[0].1.is_one() {
            if let Kind::Add(ps) = pairs[0].0.kind() {
                let terms = ps.pairs.iter().map(|(r, k)| (r.clone(), k.mul(&overall))).collect();
                return add_from_pairs(ps.overall.mul(&overall), terms);
            }
        }
    }
    Expr::from_kind(Kind::Mul(PairSeq { overall, pairs }))
}

/// Canonical power with the rewrite rules for exact exponents.
pub fn build_power(base: Expr, exponent: Expr) -> Result<Expr> {
    let Some(en) = exponent.as_number() else {
        if base.is_one() {
            return Ok(Expr::one());
        }
        return Ok(Expr::from_kind(Kind::Power(base, exponent)));
    };
    if en.is_zero() {
        return Ok(Expr::one());
    }
    if en.is_one() {
        return Ok(base);
    }
    match base.kind() {
        Kind::Numeric(bn) => {
            if bn.is_zero() {
                if en.is_real() && en.is_negative() {
                    return Err(Error::DivisionByZero);
                }
                if en.is_positive() {
                    return Ok(base);
                }
                return Ok(Expr::from_kind(Kind::Power(base.clone(), exponent)));
            }
            if bn.is_one() && bn.is_exact() && en.is_exact() {
                return Ok(Expr::one());
            }
            if let Some(e) = en.as_bigint() {
                return Ok(Expr::num(bn.powi(e)?));
            }
            if en.is_complex() || bn.is_complex() {
                return Ok(Expr::from_kind(Kind::Power(base.clone(), exponent)));
            }
            Ok(mul_from_pairs(Number::one(), vec![(base.clone(), en.clone())]))
        }
        Kind::Power(b, e) if en.is_integer() => build_power(b.clone(), build_mul([e.clone(), exponent.clone()])),
        Kind::Mul(ps) if en.is_integer() => {
            let overall = ps.overall.powi(en.as_bigint().unwrap())?;
            let pairs = ps.pairs.iter().map(|(r, k)| (r.clone(), k.mul(en))).collect();
            Ok(mul_from_pairs(overall, pairs))
        }
        _ => Ok(Expr::from_kind(Kind::Power(base, exponent))),
    }
}
