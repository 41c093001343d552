//! Elementary and special functions on [`Float`].
//!
//! The elementary functions run in binary fixed point (`value * 2^w` held in a
//! `BigInt`) with guard bits, then round once into the target precision.
//! Gamma and zeta are composed from `Float` operations at raised precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::bernoulli::bernoulli_rational;
use super::float::{bits_for_digits, Float};
use super::Precision;
use crate::error::{Error, Result};

const WORK_BITS: u64 = 32;

fn raised(prec: Precision, extra: u32) -> Precision {
    Precision::new(prec.digits() + extra).unwrap()
}

/// `floor(x * 2^w)`.
fn to_fixed(x: &Float, w: u64) -> BigInt {
    let shift = x.exponent() + w as i64;
    if shift >= 0 {
        x.mantissa() << shift as usize
    } else {
        x.mantissa().div_floor(&(BigInt::one() << (-shift) as usize))
    }
}

fn from_fixed(x: BigInt, w: u64, prec: Precision) -> Float {
    Float::from_parts(x, -(w as i64), prec)
}

fn fmul(a: &BigInt, b: &BigInt, w: u64) -> BigInt {
    (a * b) >> w as usize
}

/// `atan(1/k)` in fixed point.
fn atan_inv(k: u32, w: u64) -> BigInt {
    let k2 = BigInt::from(k) * k;
    let mut x = (BigInt::one() << w as usize) / k;
    let mut sum = x.clone();
    let mut n = 1u64;
    loop {
        x /= &k2;
        if x.is_zero() {
            break;
        }
        let term = &x / (2 * n + 1);
        if n % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        n += 1;
    }
    sum
}

pub(crate) fn pi_fixed(w: u64) -> BigInt {
    let g = w + 10;
    let v = atan_inv(5, g) * 16 - atan_inv(239, g) * 4;
    v >> 10usize
}

/// `ln 2 = 2 atanh(1/3)` in fixed point.
pub(crate) fn ln2_fixed(w: u64) -> BigInt {
    let g = w + 10;
    let mut x = (BigInt::one() << g as usize) / 3u32;
    let mut sum = x.clone();
    let mut n = 1u64;
    loop {
        x /= 9u32;
        if x.is_zero() {
            break;
        }
        sum += &x / (2 * n + 1);
        n += 1;
    }
    (sum * 2u32) >> 10usize
}

pub fn pi(prec: Precision) -> Float {
    let w = bits_for_digits(prec.digits()) + WORK_BITS;
    from_fixed(pi_fixed(w), w, prec)
}

pub fn exp(x: &Float, prec: Precision) -> Result<Float> {
    if x.is_zero() {
        return Ok(Float::from_bigint(&BigInt::one(), prec));
    }
    if x.top() > 62 {
        return Err(Error::Domain("exp argument too large".into()));
    }
    let bits = bits_for_digits(prec.digits());
    let k = (x.to_f64() / std::f64::consts::LN_2).round() as i64;
    let kbits = 64 - k.unsigned_abs().leading_zeros() as u64;
    let halvings = ((bits as f64).sqrt() / 2.0).ceil() as u64;
    let w = bits + WORK_BITS + halvings;
    let wide = w + kbits + 8;
    let r = to_fixed(x, wide) - ln2_fixed(wide) * k;
    // r/2^halvings at precision w
    let r = r >> (kbits + 8 + halvings) as usize;
    let one = BigInt::one() << w as usize;
    let mut sum = one.clone();
    let mut term = one;
    let mut j = 1u64;
    loop {
        term = fmul(&term, &r, w) / j;
        if term.is_zero() {
            break;
        }
        sum += &term;
        j += 1;
    }
    for _ in 0..halvings {
        sum = fmul(&sum, &sum, w);
    }
    Ok(Float::from_parts(sum, k - w as i64, prec))
}

/// Natural logarithm of a positive value.
pub fn ln(x: &Float, prec: Precision) -> Result<Float> {
    if x.signum() <= 0 {
        return Err(Error::Domain("logarithm of non-positive float".into()));
    }
    let bits = bits_for_digits(prec.digits());
    // x = y * 2^e with y in [1/2, 2)
    let mut e = x.top() - 1;
    let mut y = x.ldexp(-e);
    if y.cmp_value(&Float::from_parts(3.into(), -1, x.precision())) == std::cmp::Ordering::Greater {
        y = y.ldexp(-1);
        e += 1;
    }
    let d = y.to_rational() - num_rational::BigRational::one();
    let extra = if d.is_zero() {
        0
    } else {
        let dn = d.numer().bits() as i64 - d.denom().bits() as i64;
        (-dn).max(0) as u64
    };
    let w = bits + WORK_BITS + extra;
    let yf = to_fixed(&y, w);
    let onef = BigInt::one() << w as usize;
    let z = ((&yf - &onef) << w as usize) / (&yf + &onef);
    let z2 = fmul(&z, &z, w);
    let mut term = z.clone();
    let mut sum = z;
    let mut j = 1u64;
    loop {
        term = fmul(&term, &z2, w);
        let t = &term / (2 * j + 1);
        if t.is_zero() {
            break;
        }
        sum += t;
        j += 1;
    }
    let mut res = sum * 2u32;
    if e != 0 {
        res += ln2_fixed(w) * e;
    }
    Ok(from_fixed(res, w, prec))
}

fn sin_cos_kernel(r: &BigInt, w: u64) -> (BigInt, BigInt) {
    let r2 = fmul(r, r, w);
    let mut s_term = r.clone();
    let mut s = r.clone();
    let mut j = 1u64;
    loop {
        s_term = -fmul(&s_term, &r2, w) / ((2 * j) * (2 * j + 1));
        if s_term.is_zero() {
            break;
        }
        s += &s_term;
        j += 1;
    }
    let one = BigInt::one() << w as usize;
    let mut c_term = one.clone();
    let mut c = one;
    let mut j = 1u64;
    loop {
        c_term = -fmul(&c_term, &r2, w) / ((2 * j - 1) * (2 * j));
        if c_term.is_zero() {
            break;
        }
        c += &c_term;
        j += 1;
    }
    (s, c)
}

/// Returns (sin x, cos x).
pub fn sin_cos(x: &Float, prec: Precision) -> (Float, Float) {
    if x.is_zero() {
        return (Float::zero(prec), Float::from_bigint(&BigInt::one(), prec));
    }
    let bits = bits_for_digits(prec.digits());
    let mut extra = x.top().max(0) as u64 + 8;
    for _ in 0..8 {
        let w = bits + WORK_BITS + extra;
        let half_pi = pi_fixed(w) >> 1usize;
        let xf = to_fixed(x, w);
        let (q, _) = (&xf * 2u32 + &half_pi).div_mod_floor(&(&half_pi * 2u32));
        let r = &xf - &q * &half_pi;
        let quadrant = q.mod_floor(&BigInt::from(4)).to_u32().unwrap();
        // relative accuracy of the tiny-argument branch
        let lost = (w as i64 - r.bits() as i64).max(0) as u64;
        if lost > extra.saturating_sub(8) && !r.is_zero() && extra < 64 * bits + 4096 {
            extra = lost + 16;
            continue;
        }
        let (s, c) = sin_cos_kernel(&r, w);
        let (sv, cv) = match quadrant {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        };
        return (from_fixed(sv, w, prec), from_fixed(cv, w, prec));
    }
    let w = bits + WORK_BITS + extra;
    let half_pi = pi_fixed(w) >> 1usize;
    let xf = to_fixed(x, w);
    let (q, _) = (&xf * 2u32 + &half_pi).div_mod_floor(&(&half_pi * 2u32));
    let r = &xf - &q * &half_pi;
    let (s, c) = sin_cos_kernel(&r, w);
    (from_fixed(s, w, prec), from_fixed(c, w, prec))
}

pub fn sin(x: &Float, prec: Precision) -> Float {
    sin_cos(x, prec).0
}

pub fn cos(x: &Float, prec: Precision) -> Float {
    sin_cos(x, prec).1
}

/// Euler's constant by the Brent-McMillan series.
pub fn euler_gamma(prec: Precision) -> Float {
    let bits = bits_for_digits(prec.digits());
    let w = bits + WORK_BITS + 16;
    let n = ((w as f64) * std::f64::consts::LN_2 / 4.0).ceil() as u64 + 1;
    let wp = Precision::new(((w as f64) / std::f64::consts::LOG2_10).ceil() as u32 + 4).unwrap();
    let ln_n = ln(&Float::from_bigint(&BigInt::from(n), wp), wp).expect("positive");
    let n2 = BigInt::from(n) * n;
    let mut a = -to_fixed(&ln_n, w);
    let mut b = BigInt::one() << w as usize;
    let mut u = a.clone();
    let mut v = b.clone();
    let mut k = 1u64;
    loop {
        b = &b * &n2 / (k * k);
        a = (&a * &n2 / k + &b) / k;
        if a.is_zero() && b.is_zero() {
            break;
        }
        u += &a;
        v += &b;
        k += 1;
    }
    from_fixed((u << w as usize) / v, w, prec)
}

/// Catalan's constant via `pi/8 ln(2+sqrt 3) + 3/8 sum 1/((2k+1)^2 C(2k,k))`.
pub fn catalan(prec: Precision) -> Float {
    let bits = bits_for_digits(prec.digits());
    let w = bits + WORK_BITS;
    let wp = raised(prec, 12);
    let three = Float::from_bigint(&BigInt::from(3), wp);
    let two = Float::from_bigint(&BigInt::from(2), wp);
    let l = ln(&two.add(&three.sqrt().unwrap()), wp).expect("positive");
    let lpi = fmul(&to_fixed(&l, w), &pi_fixed(w), w);
    let mut a = BigInt::one() << w as usize;
    let mut s = a.clone();
    let mut k = 1u64;
    loop {
        a = a * k / (2 * (2 * k - 1));
        if a.is_zero() {
            break;
        }
        s += &a / ((2 * k + 1) * (2 * k + 1));
        k += 1;
    }
    let g = (lpi + s * 3u32) >> 3usize;
    from_fixed(g, w, prec)
}

/// `x^y` for real `x > 0`.
pub fn pow_real(x: &Float, y: &Float, prec: Precision) -> Result<Float> {
    let mag = (x.top().unsigned_abs() + 1) as f64 * (y.top().max(0) as f64).exp2();
    let extra = (mag.log10().max(0.0)).ceil() as u32 + 4;
    let wp = raised(prec, extra);
    let l = ln(&x.with_precision(wp), wp)?;
    let t = l.mul(&y.with_precision(wp));
    Ok(exp(&t, wp)?.with_precision(prec))
}

fn rational_float(n: i64, d: i64, prec: Precision) -> Float {
    Float::from_rational(&num_rational::BigRational::new(n.into(), d.into()), prec)
}

/// Gamma function of a real argument.
pub fn gamma(x: &Float, prec: Precision) -> Result<Float> {
    if x.is_integer() && x.signum() <= 0 {
        return Err(Error::Pole("gamma at a non-positive integer".into()));
    }
    let half = rational_float(1, 2, x.precision());
    if x.cmp_value(&half) == std::cmp::Ordering::Less {
        // reflection
        let extra = (x.top().max(0) as f64 * std::f64::consts::LOG10_2).ceil() as u32 + 6;
        let wp = raised(prec, extra);
        let p = pi(wp);
        let s = sin(&p.mul(&x.with_precision(wp)), wp);
        let one = Float::from_bigint(&BigInt::one(), wp);
        let g = gamma(&one.sub(&x.with_precision(wp)), wp)?;
        let den = s.mul(&g);
        return p.div(&den).map(|v| v.with_precision(prec)).ok_or(Error::DivisionByZero);
    }
    let xf = x.to_f64().max(1.0);
    let extra = ((xf * xf.ln()).abs() + 1.0).log10().ceil() as u32 + 8;
    let wp = raised(prec, extra);
    let wbits = bits_for_digits(wp.digits()) as f64;
    let z0 = 0.12 * wbits + 4.0;
    let shift = if xf < z0 { (z0 - x.to_f64()).ceil().max(0.0) as u64 } else { 0 };
    let xw = x.with_precision(wp);
    let z = xw.add(&Float::from_bigint(&BigInt::from(shift), wp));
    let half = rational_float(1, 2, wp);
    let two_pi = pi(wp).ldexp(1);
    let mut lg = z.sub(&half).mul(&ln(&z, wp)?).sub(&z).add(&ln(&two_pi, wp)?.ldexp(-1));
    let z2 = z.mul(&z);
    let mut zpow = z.clone();
    let eps_top = lg.top() - wbits as i64 - 8;
    let mut last_top = i64::MAX;
    let mut k = 1u32;
    loop {
        let b = bernoulli_rational(2 * k as u64);
        let denom = BigInt::from(2 * k) * BigInt::from(2 * k - 1);
        let c = Float::from_rational(&(b / num_rational::BigRational::from_integer(denom)), wp);
        let term = c.div(&zpow).unwrap();
        let t = term.top();
        if term.is_zero() || t < eps_top || t > last_top {
            break;
        }
        lg = lg.add(&term);
        last_top = t;
        zpow = zpow.mul(&z2);
        k += 1;
    }
    let mut g = exp(&lg, wp)?;
    for j in 0..shift {
        let f = xw.add(&Float::from_bigint(&BigInt::from(j), wp));
        g = g.div(&f).ok_or(Error::DivisionByZero)?;
    }
    Ok(g.with_precision(prec))
}

/// Riemann zeta of a real argument by Euler-Maclaurin summation.
pub fn zeta(s: &Float, prec: Precision) -> Result<Float> {
    let one = Float::from_bigint(&BigInt::one(), s.precision());
    if s.cmp_value(&one) == std::cmp::Ordering::Equal {
        return Err(Error::Pole("zeta at 1".into()));
    }
    let sabs = s.to_f64().abs();
    let wp = raised(prec, 10 + (sabs + 1.0).log10().ceil() as u32);
    let wbits = bits_for_digits(wp.digits()) as f64;
    let n = (0.2 * wbits + sabs).ceil() as u64 + 10;
    let sw = s.with_precision(wp);
    let neg_pow = |k: u64, e: &Float| -> Result<Float> {
        // k^(-e)
        let base = Float::from_bigint(&BigInt::from(k), wp);
        if e.is_integer() {
            let ei = e.floor();
            base.powi(&-ei).ok_or(Error::DivisionByZero)
        } else {
            pow_real(&base, &e.neg(), wp)
        }
    };
    let mut sum = Float::zero(wp);
    for k in 1..n {
        sum = sum.add(&neg_pow(k, &sw)?);
    }
    let nf = Float::from_bigint(&BigInt::from(n), wp);
    let n_s = neg_pow(n, &sw)?;
    let onew = Float::from_bigint(&BigInt::one(), wp);
    let sm1 = sw.sub(&onew);
    sum = sum.add(&n_s.mul(&nf).div(&sm1).ok_or(Error::DivisionByZero)?);
    sum = sum.add(&n_s.ldexp(-1));
    // Bernoulli corrections
    let mut rising = sw.clone();
    let mut npow = n_s.div(&nf).unwrap();
    let n2 = nf.mul(&nf);
    let mut fact = BigInt::from(2);
    let eps_top = sum.top() - wbits as i64 - 8;
    let mut last_top = i64::MAX;
    let mut k = 1u64;
    while k < 4 * n {
        let b = bernoulli_rational(2 * k);
        let c = Float::from_rational(&(b / num_rational::BigRational::from_integer(fact.clone())), wp);
        let term = c.mul(&rising).mul(&npow);
        let t = term.top();
        if term.is_zero() || t < eps_top {
            break;
        }
        if t > last_top {
            break;
        }
        sum = sum.add(&term);
        last_top = t;
        let a = sw.add(&Float::from_bigint(&BigInt::from(2 * k - 1), wp));
        let bb = sw.add(&Float::from_bigint(&BigInt::from(2 * k), wp));
        rising = rising.mul(&a).mul(&bb);
        npow = npow.div(&n2).unwrap();
        fact = fact * BigInt::from(2 * k + 1) * BigInt::from(2 * k + 2);
        k += 1;
    }
    Ok(sum.with_precision(prec))
}
