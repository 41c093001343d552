//! Polynomial gcd: cheap pre-passes, then the heuristic evaluation gcd with
//! the subresultant PRS as fallback.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::mpoly::MPoly;

const HEUR_RETRIES: usize = 6;
/// Evaluated images larger than this many bits make the heuristic give up.
const HEUR_MAX_BITS: u64 = 40_000;

fn vars_of(p: &MPoly) -> BTreeSet<usize> {
    (0..p.num_vars()).filter(|&i| p.has_var(i)).collect()
}

/// Gcd with positive leading coefficient.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.unit_normal();
    }
    if b.is_zero() {
        return a.unit_normal();
    }
    let (ca, cb) = (a.content(), b.content());
    let c = ca.gcd(&cb);
    if a.is_constant() || b.is_constant() {
        return MPoly::constant(c);
    }
    let (mut a, mut b) = (a.div_int(&ca), b.div_int(&cb));
    // common monomial factor
    let (ma, mb) = (a.min_monomial(), b.min_monomial());
    let m: Vec<u32> = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
    a = a.div_exact(&MPoly::monomial(ma, BigInt::one())).expect("monomial divides");
    b = b.div_exact(&MPoly::monomial(mb, BigInt::one())).expect("monomial divides");
    // a variable present in only one input cannot occur in the gcd
    let (va, vb) = (vars_of(&a), vars_of(&b));
    for v in va.difference(&vb) {
        a = content_in(&a, *v);
    }
    for v in vb.difference(&va) {
        b = content_in(&b, *v);
    }
    let g = if a.is_constant() || b.is_constant() {
        MPoly::one()
    } else {
        heur_gcd(&a, &b).unwrap_or_else(|| sr_gcd(&a, &b))
    };
    g.scale(&c).mul_monomial(&m).unit_normal()
}

/// Gcd of the coefficients of `p` with respect to `x_i`.
pub fn content_in(p: &MPoly, i: usize) -> MPoly {
    let mut g = MPoly::zero();
    for c in p.coeffs_in(i).values() {
        g = gcd(&g, c);
        if g.as_constant().is_some_and(|k| k.is_one()) {
            break;
        }
    }
    g
}

fn symmetric_mod(c: &BigInt, xi: &BigInt) -> BigInt {
    let r = c.mod_floor(xi);
    if &r * 2u32 > *xi {
        r - xi
    } else {
        r
    }
}

/// Rebuilds a polynomial in `x_i` from its image at `xi` using balanced digits.
fn interpolate(gamma: &MPoly, xi: &BigInt, i: usize) -> MPoly {
    let mut out = MPoly::zero();
    let mut rest = gamma.clone();
    let mut k = 0u32;
    while !rest.is_zero() {
        let mut digit = MPoly::zero();
        for (m, c) in rest.terms() {
            digit = digit.add(&MPoly::monomial(m.clone(), symmetric_mod(c, xi)));
        }
        let mut x = vec![0; i + 1];
        x[i] = k;
        out = out.add(&digit.mul_monomial(&x));
        rest = rest.sub(&digit).div_int(xi);
        k += 1;
    }
    out
}

/// Heuristic gcd by evaluation at a large integer, verified by trial
/// division. `None` after the retry limit.
pub fn heur_gcd(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    let (ca, cb) = (a.content(), b.content());
    if ca.is_zero() || cb.is_zero() {
        return Some(gcd(a, b));
    }
    let c = ca.gcd(&cb);
    let (a, b) = (a.div_int(&ca), b.div_int(&cb));
    if let (Some(_), _) | (_, Some(_)) = (a.as_constant(), b.as_constant()) {
        return Some(MPoly::constant(c));
    }
    let i = vars_of(&a).union(&vars_of(&b)).copied().max().unwrap();
    let mut xi = a.max_norm().max(b.max_norm()) * 2u32 + 2u32;
    let deg = a.degree(i).max(b.degree(i)).max(1) as u64;
    for _ in 0..=HEUR_RETRIES {
        if xi.bits() * deg > HEUR_MAX_BITS {
            return None;
        }
        let (ax, bx) = (a.eval(i, &xi), b.eval(i, &xi));
        if !ax.is_zero() && !bx.is_zero() {
            if let Some(gamma) = heur_gcd(&ax, &bx) {
                let g = interpolate(&gamma, &xi, i);
                let g = g.div_int(&g.content()).unit_normal();
                if !g.is_zero() && a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                    return Some(g.scale(&c));
                }
            }
        }
        xi = xi * 73794u32 / 27011u32;
    }
    None
}

/// Variable with the smallest minimum degree across both inputs.
fn main_var(a: &MPoly, b: &MPoly) -> usize {
    let vars: BTreeSet<usize> = vars_of(a).union(&vars_of(b)).copied().collect();
    *vars.iter().min_by_key(|&&v| (a.degree(v).min(b.degree(v)), v)).expect("nonconstant input")
}

/// Gcd by the subresultant polynomial remainder sequence.
pub fn sr_gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.unit_normal();
    }
    if b.is_zero() {
        return a.unit_normal();
    }
    if let (Some(x), Some(y)) = (a.as_constant(), b.as_constant()) {
        return MPoly::constant(x.gcd(&y));
    }
    let v = main_var(a, b);
    let (conta, contb) = (sr_content(a, v), sr_content(b, v));
    if !a.has_var(v) {
        return sr_gcd(a, &contb);
    }
    if !b.has_var(v) {
        return sr_gcd(&conta, b);
    }
    let c = sr_gcd(&conta, &contb);
    let mut p = a.div_exact(&conta).expect("content divides");
    let mut q = b.div_exact(&contb).expect("content divides");
    if p.degree(v) < q.degree(v) {
        std::mem::swap(&mut p, &mut q);
    }
    let mut g = MPoly::one();
    let mut h = MPoly::one();
    loop {
        let d = p.degree(v) - q.degree(v);
        let r = p.prem(&q, v);
        if r.is_zero() {
            break;
        }
        if !r.has_var(v) {
            q = MPoly::one();
            break;
        }
        p = q;
        q = r.div_exact(&g.mul(&h.pow(d))).expect("subresultant division is exact");
        g = p.lc_in(v);
        h = if d == 0 {
            h
        } else {
            g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant division is exact")
        };
    }
    let prim = if q.has_var(v) { q.div_exact(&sr_content(&q, v)).unwrap() } else { MPoly::one() };
    prim.mul(&c).unit_normal()
}

fn sr_content(p: &MPoly, v: usize) -> MPoly {
    let mut g = MPoly::zero();
    for c in p.coeffs_in(v).values() {
        g = sr_gcd(&g, c);
        if g.as_constant().is_some_and(|k| k.is_one()) {
            break;
        }
    }
    g.unit_normal()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MPoly {
        MPoly::var(0)
    }

    fn y() -> MPoly {
        MPoly::var(1)
    }

    fn k(c: i64) -> MPoly {
        MPoly::constant(BigInt::from(c))
    }

    #[test]
    fn univariate() {
        // x^3+4x^2+5x+2 = (x+1)^2 (x+2), x^2+4x+3 = (x+1)(x+3)
        let x1 = x().add(&k(1));
        let a = x1.mul(&x1).mul(&x().add(&k(2)));
        let b = x1.mul(&x().add(&k(3)));
        assert_eq!(gcd(&a, &b), x1);
        assert_eq!(heur_gcd(&a, &b), Some(x1.clone()));
        assert_eq!(sr_gcd(&a, &b), x1);
        let c = x().pow(2).add(&k(1));
        assert_eq!(sr_gcd(&c, &x().add(&k(2))), k(1));
    }

    #[test]
    fn bivariate() {
        let s = x().add(&y());
        let d = x().sub(&y());
        assert_eq!(sr_gcd(&s.mul(&d), &s.mul(&s)), s);
        assert_eq!(gcd(&s.mul(&d), &s.mul(&s)), s);
        let m = gcd(&x().pow(2).mul(&y()), &x().mul(&y().pow(2)));
        assert_eq!(m, x().mul(&y()));
    }

    #[test]
    fn negative_coefficients() {
        let a = x().pow(2).sub(&k(1));
        let b = x().pow(2).sub(&x().scale(&BigInt::from(2))).add(&k(1));
        assert_eq!(heur_gcd(&a, &b), Some(x().sub(&k(1))));
        assert_eq!(sr_gcd(&a, &x().pow(3).sub(&k(1))), x().sub(&k(1)));
    }

    #[test]
    fn zero_and_constants() {
        let a = x().scale(&BigInt::from(-3));
        assert_eq!(gcd(&a, &MPoly::zero()), x().scale(&BigInt::from(3)));
        assert_eq!(gcd(&k(4), &k(6)), k(2));
        assert_eq!(gcd(&x().scale(&BigInt::from(4)), &k(6)), k(2));
    }
}
