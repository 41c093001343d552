//! Sparse multivariate polynomials with integer coefficients.
//!
//! Monomials are exponent vectors with trailing zeros trimmed, so variables
//! can be added without touching existing polynomials. Terms are kept in lex
//! order with variable 0 most significant; the leading term is the last.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut m = long.to_vec();
    for (x, y) in m.iter_mut().zip(short) {
        *x += y;
    }
    trim(m)
}

fn mono_div(a: &[u32], b: &[u32]) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut m = a.to_vec();
    for (x, y) in m.iter_mut().zip(b) {
        if *x < *y {
            return None;
        }
        *x -= y;
    }
    Some(trim(m))
}

fn exp_of(m: &[u32], i: usize) -> u32 {
    m.get(i).copied().unwrap_or(0)
}

fn with_exp(m: &[u32], i: usize, e: u32) -> Monomial {
    let mut m = m.to_vec();
    if m.len() <= i {
        m.resize(i + 1, 0);
    }
    m[i] = e;
    trim(m)
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn constant(c: BigInt) -> MPoly {
        MPoly::monomial(Vec::new(), c)
    }

    pub fn one() -> MPoly {
        MPoly::constant(BigInt::one())
    }

    pub fn monomial(m: Monomial, c: BigInt) -> MPoly {
        let mut p = MPoly::zero();
        if !c.is_zero() {
            p.terms.insert(trim(m), c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> MPoly {
        MPoly::monomial(with_exp(&[], i, 1), BigInt::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn lead(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }

    pub fn neg(&self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                *acc.entry(mono_mul(ma, mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }

    pub fn scale(&self, k: &BigInt) -> MPoly {
        if k.is_zero() {
            return MPoly::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul_monomial(&self, m: &[u32]) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(t, c)| (mono_mul(t, m), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divides every coefficient by `k`, which must divide them exactly.
    pub fn div_int(&self, k: &BigInt) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c / k)).collect() }
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn max_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn has_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| exp_of(m, i) > 0)
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| exp_of(m, i)).max().unwrap_or(0)
    }

    pub fn min_degree(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| exp_of(m, i)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Vec::new();
        };
        let mut m = first.clone();
        for t in it {
            m.truncate(t.len());
            for (x, y) in m.iter_mut().zip(t) {
                *x = (*x).min(*y);
            }
        }
        trim(m)
    }

    /// Coefficients with respect to `x_i`, keyed by exponent.
    pub fn coeffs_in(&self, i: usize) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(exp_of(m, i)).or_default().terms.insert(with_exp(m, i, 0), c.clone());
        }
        out
    }

    /// Leading coefficient with respect to `x_i`.
    pub fn lc_in(&self, i: usize) -> MPoly {
        let d = self.degree(i);
        let terms = self.terms.iter().filter(|(m, _)| exp_of(m, i) == d).map(|(m, c)| (with_exp(m, i, 0), c.clone())).collect();
        MPoly { terms }
    }

    /// Substitutes the integer `v` for `x_i`.
    pub fn eval(&self, i: usize, v: &BigInt) -> MPoly {
        let mut out = MPoly::zero();
        let mut powers: Vec<BigInt> = vec![BigInt::one()];
        for (m, c) in &self.terms {
            let e = exp_of(m, i) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * v;
                powers.push(next);
            }
            out.add_term(with_exp(m, i, 0), c * &powers[e]);
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        let (dm, dc) = d.lead()?;
        if let Some(k) = d.as_constant() {
            return self.terms.values().all(|c| c.is_multiple_of(&k)).then(|| self.div_int(&k));
        }
        let mut r = self.clone();
        let mut q = MPoly::zero();
        while let Some((rm, rc)) = r.lead() {
            let m = mono_div(rm, dm)?;
            let (c, rem) = rc.div_rem(dc);
            if !rem.is_zero() {
                return None;
            }
            let t = MPoly::monomial(m, c);
            r = r.sub(&d.mul(&t));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Pseudo-remainder of `self` by `b` with respect to `x_i`.
    pub fn prem(&self, b: &MPoly, i: usize) -> MPoly {
        let (da, db) = (self.degree(i), b.degree(i));
        if da < db {
            return self.clone();
        }
        let lb = b.lc_in(i);
        let mut r = self.clone();
        let mut e = da - db + 1;
        while !r.is_zero() && r.degree(i) >= db {
            let dr = r.degree(i);
            let lr = r.lc_in(i);
            r = r.mul(&lb).sub(&b.mul(&lr).mul_monomial(&with_exp(&[], i, dr - db)));
            e -= 1;
        }
        r.mul(&lb.pow(e))
    }

    /// Negated if needed so the leading coefficient is positive.
    pub fn unit_normal(&self) -> MPoly {
        match self.lead() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn is_unit_normal(&self) -> bool {
        self.lead().is_none_or(|(_, c)| c.is_positive())
    }

    pub fn from_coeffs_in(i: usize, coeffs: &BTreeMap<u32, MPoly>) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in coeffs {
            out = out.add(&c.mul_monomial(&with_exp(&[], i, *e)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(&[u32], i64)]) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in terms {
            out = out.add(&MPoly::monomial(m.to_vec(), BigInt::from(*c)));
        }
        out
    }

    #[test]
    fn arithmetic() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq, p(&[(&[2], 1), (&[1, 1], 2), (&[0, 2], 1)]));
        assert_eq!(sq.div_exact(&s), Some(s.clone()));
        assert_eq!(sq.div_exact(&x), None);
        assert!(s.sub(&s).is_zero());
        assert_eq!(sq.degree(1), 2);
        assert_eq!(sq.eval(0, &BigInt::from(2)), p(&[(&[], 4), (&[0, 1], 4), (&[0, 2], 1)]));
    }

    #[test]
    fn pseudo_remainder() {
        // x^2 + 1 by 2x + 1: 4(x^2+1) = (2x-1)(2x+1) + 5
        let a = p(&[(&[2], 1), (&[], 1)]);
        let b = p(&[(&[1], 2), (&[], 1)]);
        assert_eq!(a.prem(&b, 0), MPoly::constant(BigInt::from(5)));
        let c = p(&[(&[1], 3)]);
        assert!(a.mul(&c).prem(&a, 0).is_zero());
    }

    #[test]
    fn min_monomial_and_content() {
        let q = p(&[(&[2, 1], 6), (&[1, 3], 4)]);
        assert_eq!(q.min_monomial(), vec![1, 1]);
        assert_eq!(q.content(), BigInt::from(2));
    }
}
