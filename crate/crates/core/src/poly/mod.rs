//! Polynomial and rational-function algorithms on expressions.

mod gcd;
pub mod mpoly;
mod normal;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::expr::{build_add, build_mul, build_power, expand, Expr, Kind};
use crate::num::Number;
use mpoly::MPoly;

pub use normal::normal;

/// Atoms (symbols, constants, generators) indexed as polynomial variables.
#[derive(Default)]
pub(crate) struct Vars {
    atoms: Vec<Expr>,
    index: HashMap<Expr, usize>,
}

impl Vars {
    /// Variables for the symbols and constants of `exprs`, in canonical order.
    pub(crate) fn of(exprs: &[&Expr]) -> Vars {
        let mut found = Vec::new();
        for e in exprs {
            collect_atoms(e, &mut found);
        }
        found.sort();
        found.dedup();
        let mut v = Vars::default();
        for a in found {
            v.index_of(&a);
        }
        v
    }

    pub(crate) fn index_of(&mut self, atom: &Expr) -> usize {
        if let Some(&i) = self.index.get(atom) {
            return i;
        }
        self.atoms.push(atom.clone());
        self.index.insert(atom.clone(), self.atoms.len() - 1);
        self.atoms.len() - 1
    }

    pub(crate) fn get(&self, atom: &Expr) -> Option<usize> {
        self.index.get(atom).copied()
    }

    /// The polynomial as an expanded expression.
    pub(crate) fn to_expr(&self, p: &MPoly) -> Expr {
        build_add(p.terms().map(|(m, c)| {
            let mut f = vec![Expr::num(Number::from(c.clone()))];
            for (i, e) in m.iter().enumerate() {
                if *e > 0 {
                    f.push(build_power(self.atoms[i].clone(), Expr::int(*e as i64)).expect("nonzero atom"));
                }
            }
            build_mul(f)
        }))
    }
}

fn collect_atoms(e: &Expr, out: &mut Vec<Expr>) {
    match e.kind() {
        Kind::Symbol(_) | Kind::Constant(_) => out.push(e.clone()),
        _ => {
            for c in e.children() {
                collect_atoms(&c, out);
            }
        }
    }
}

/// `e` as an integer polynomial `p` with `e = p / den`.
pub(crate) fn to_mpoly(e: &Expr, vars: &mut Vars) -> Result<(MPoly, BigInt)> {
    let x = expand(e)?;
    let terms: Vec<(Expr, Number)> = match x.kind() {
        Kind::Add(ps) => {
            let mut t: Vec<_> = ps.pairs().to_vec();
            if !ps.overall().is_zero() {
                t.push((Expr::one(), ps.overall().clone()));
            }
            t
        }
        _ => vec![(x.clone(), Number::one())],
    };
    let mut den = BigInt::one();
    let mut parts = Vec::with_capacity(terms.len());
    for (rest, k) in terms {
        let (coef, mono) = monomial_of(&rest, vars)?;
        let c = coef.mul(&k);
        let r = c.to_rational().ok_or_else(|| Error::Domain(format!("{c} is not a rational coefficient")))?;
        den = den.lcm(r.denom());
        parts.push((mono, r));
    }
    let mut p = MPoly::zero();
    for (mono, r) in parts {
        let c = r.numer() * (&den / r.denom());
        p = p.add(&MPoly::monomial(mono, c));
    }
    Ok((p, den))
}

fn monomial_of(rest: &Expr, vars: &mut Vars) -> Result<(Number, Vec<u32>)> {
    let mut coef = Number::one();
    let factors: Vec<(Expr, Number)> = match rest.kind() {
        Kind::Numeric(n) => return Ok((n.clone(), Vec::new())),
        Kind::Mul(ps) => {
            coef = ps.overall().clone();
            ps.pairs().to_vec()
        }
        Kind::Power(b, k) => vec![(b.clone(), k.as_number().cloned().unwrap_or_else(Number::zero))],
        _ => vec![(rest.clone(), Number::one())],
    };
    let mut mono = Vec::new();
    for (b, k) in factors {
        if !matches!(b.kind(), Kind::Symbol(_) | Kind::Constant(_)) {
            return Err(Error::Domain(format!("{rest} is not a polynomial term")));
        }
        let e = k.to_i64().filter(|e| *e > 0 && k.is_integer()).ok_or_else(|| Error::Domain(format!("{rest} is not a polynomial term")))?;
        let i = vars.index_of(&b);
        if mono.len() <= i {
            mono.resize(i + 1, 0);
        }
        mono[i] += e as u32;
    }
    Ok((coef, mono))
}

/// Splits a term of an expanded expression into `(k, c)` with `term = c * x^k`.
fn split_term(term: &Expr, x: &Expr) -> Result<(i64, Expr)> {
    if !term.has(x) {
        return Ok((0, term.clone()));
    }
    let bad = || Error::Domain(format!("{term} is not polynomial in {x}"));
    let (coef, pairs): (Number, Vec<(Expr, Number)>) = match term.kind() {
        Kind::Mul(ps) => (ps.overall().clone(), ps.pairs().to_vec()),
        Kind::Power(b, k) if k.is_numeric() => (Number::one(), vec![(b.clone(), k.as_number().unwrap().clone())]),
        _ if term == x => return Ok((1, Expr::one())),
        _ => return Err(bad()),
    };
    let mut deg = 0;
    let mut rest = vec![Expr::num(coef)];
    for (b, k) in pairs {
        if &b == x {
            deg = k.to_i64().filter(|_| k.is_integer()).ok_or_else(bad)?;
        } else if b.has(x) {
            return Err(bad());
        } else {
            rest.push(build_power(b, Expr::num(k))?);
        }
    }
    Ok((deg, build_mul(rest)))
}

/// Terms of `expand(e)` grouped by their power of `x`.
fn by_degree(e: &Expr, x: &Expr) -> Result<Vec<(i64, Expr)>> {
    if !x.is_symbol() {
        return Err(Error::Domain(format!("{x} is not a symbol")));
    }
    let ex = expand(e)?;
    let terms = match ex.kind() {
        Kind::Add(ps) => {
            let mut t = vec![Expr::num(ps.overall().clone())];
            t.extend(ps.pairs().iter().map(|(r, k)| build_mul([r.clone(), Expr::num(k.clone())])));
            t
        }
        _ => vec![ex.clone()],
    };
    let mut groups: std::collections::BTreeMap<i64, Vec<Expr>> = Default::default();
    for t in terms {
        if t.is_zero() {
            continue;
        }
        let (k, c) = split_term(&t, x)?;
        groups.entry(k).or_default().push(c);
    }
    Ok(groups.into_iter().map(|(k, cs)| (k, build_add(cs))).filter(|(_, c)| !c.is_zero()).collect())
}

/// Highest power of `x` in `expand(e)`; 0 for 0.
pub fn degree(e: &Expr, x: &Expr) -> Result<i64> {
    Ok(by_degree(e, x)?.last().map_or(0, |t| t.0))
}

/// Lowest power of `x` in `expand(e)`; 0 for 0.
pub fn ldegree(e: &Expr, x: &Expr) -> Result<i64> {
    Ok(by_degree(e, x)?.first().map_or(0, |t| t.0))
}

/// Coefficient of `x^k` in `expand(e)`.
pub fn coeff(e: &Expr, x: &Expr, k: i64) -> Result<Expr> {
    Ok(by_degree(e, x)?.into_iter().find(|t| t.0 == k).map_or_else(Expr::zero, |t| t.1))
}

/// `e` as a sum of coefficients times powers of `x`.
pub fn collect(e: &Expr, x: &Expr) -> Result<Expr> {
    let groups = by_degree(e, x)?;
    let mut terms = Vec::with_capacity(groups.len());
    for (k, c) in groups {
        terms.push(build_mul([c, build_power(x.clone(), Expr::int(k))?]));
    }
    Ok(build_add(terms))
}

fn two_polys(a: &Expr, b: &Expr) -> Result<(Vars, MPoly, MPoly)> {
    let mut vars = Vars::of(&[a, b]);
    let (pa, _) = to_mpoly(a, &mut vars)?;
    let (pb, _) = to_mpoly(b, &mut vars)?;
    Ok((vars, pa, pb))
}

/// Multiplicative factors of `e` for factor-wise gcd; powers with small
/// positive integer exponents are repeated.
fn syntactic_factors(e: &Expr) -> Option<Vec<Expr>> {
    let Kind::Mul(ps) = e.kind() else {
        return None;
    };
    let mut out = vec![Expr::num(ps.overall().clone())];
    for (r, k) in ps.pairs() {
        match k.to_i64() {
            Some(n) if k.is_integer() && (1..=8).contains(&n) => out.extend(std::iter::repeat_n(r.clone(), n as usize)),
            _ => out.push(build_power(r.clone(), Expr::num(k.clone())).ok()?),
        }
    }
    Some(out)
}

/// Greatest common divisor of two polynomials, with positive leading
/// coefficient and integer coefficients.
pub fn gcd(a: &Expr, b: &Expr) -> Result<Expr> {
    if let Some(fs) = syntactic_factors(a) {
        let mut g = Expr::one();
        let mut rest = b.clone();
        for f in fs {
            let gf = gcd(&f, &rest)?;
            if !gf.is_one() {
                rest = divide(&rest, &gf)?;
                g = build_mul([g, gf]);
            }
        }
        return expand(&g);
    }
    if syntactic_factors(b).is_some() {
        return gcd(b, a);
    }
    let (vars, pa, pb) = two_polys(a, b)?;
    Ok(vars.to_expr(&gcd::gcd(&pa, &pb)))
}

/// Exact polynomial quotient `a / b`.
pub fn divide(a: &Expr, b: &Expr) -> Result<Expr> {
    let mut vars = Vars::of(&[a, b]);
    let (pa, da) = to_mpoly(a, &mut vars)?;
    let (pb, db) = to_mpoly(b, &mut vars)?;
    if pb.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let q = pa.scale(&db).div_exact(&pb).ok_or_else(|| Error::Domain(format!("{b} does not divide {a}")))?;
    Ok(build_mul([vars.to_expr(&q), Expr::num(Number::make(BigInt::one(), da)?)]))
}

/// Least common multiple `a * b / gcd(a, b)` with positive leading coefficient.
pub fn lcm(a: &Expr, b: &Expr) -> Result<Expr> {
    let (vars, pa, pb) = two_polys(a, b)?;
    if pa.is_zero() || pb.is_zero() {
        return Ok(Expr::zero());
    }
    let g = gcd::gcd(&pa, &pb);
    let l = pa.div_exact(&g).expect("gcd divides").mul(&pb).unit_normal();
    Ok(vars.to_expr(&l))
}

/// Heuristic gcd; `None` when the heuristic gives up.
pub fn heur_gcd(a: &Expr, b: &Expr) -> Result<Option<Expr>> {
    let (vars, pa, pb) = two_polys(a, b)?;
    Ok(gcd::heur_gcd(&pa, &pb).map(|g| vars.to_expr(&g.unit_normal())))
}

/// Gcd by the subresultant remainder sequence.
pub fn sr_gcd(a: &Expr, b: &Expr) -> Result<Expr> {
    let (vars, pa, pb) = two_polys(a, b)?;
    Ok(vars.to_expr(&gcd::sr_gcd(&pa, &pb)))
}

/// `(unit, content, primitive part)` of `e` with respect to `x`.
pub fn content_primpart(e: &Expr, x: &Expr) -> Result<(Expr, Expr, Expr)> {
    let mut vars = Vars::of(&[e, x]);
    let (p, den) = to_mpoly(e, &mut vars)?;
    if p.is_zero() {
        return Ok((Expr::one(), Expr::zero(), Expr::zero()));
    }
    let i = vars.get(x).ok_or_else(|| Error::Domain(format!("{x} is not a symbol")))?;
    let lc = p.lc_in(i);
    let unit = if lc.lead().is_some_and(|(_, c)| c.is_negative()) { -1 } else { 1 };
    let cont = gcd::content_in(&p, i).unit_normal();
    let pp = p.div_exact(&cont).expect("content divides").scale(&BigInt::from(unit));
    let content = build_mul([vars.to_expr(&cont), Expr::num(Number::make(BigInt::one(), den)?)]);
    Ok((Expr::int(unit), content, vars.to_expr(&pp)))
}
