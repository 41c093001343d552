//! Arbitrary-precision binary floating point.
//!
//! A [`Float`] is `mantissa * 2^exponent` with the mantissa kept odd (or zero),
//! so two floats with the same value have identical fields. Each value also
//! carries the decimal precision it was produced at; arithmetic results take the
//! coarser of the operand precisions.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Precision;

/// Binary digits carried beyond the requested decimal precision.
pub(crate) const GUARD_BITS: u64 = 8;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Number of mantissa bits used for `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> u64 {
    (digits as f64 * LOG2_10).ceil() as u64 + GUARD_BITS
}

#[derive(Clone, Debug)]
pub struct Float {
    mant: BigInt,
    exp: i64,
    digits: u32,
}

impl Float {
    pub fn zero(prec: Precision) -> Float {
        Float { mant: BigInt::zero(), exp: 0, digits: prec.digits() }
    }

    /// Builds `mant * 2^exp` rounded to `prec`.
    pub fn from_parts(mant: BigInt, exp: i64, prec: Precision) -> Float {
        Self::round_from(mant, exp, false, prec.digits())
    }

    pub fn from_bigint(n: &BigInt, prec: Precision) -> Float {
        Self::from_parts(n.clone(), 0, prec)
    }

    pub fn from_rational(r: &BigRational, prec: Precision) -> Float {
        if r.is_zero() {
            return Float::zero(prec);
        }
        let bits = bits_for_digits(prec.digits());
        let num = r.numer();
        let den = r.denom();
        let shift = bits as i64 + 2 + den.bits() as i64 - num.bits() as i64;
        let (q, rem) = if shift >= 0 {
            (num << shift as usize).div_rem(den)
        } else {
            num.div_rem(&(den << (-shift) as usize))
        };
        Self::round_from(q, -shift, !rem.is_zero(), prec.digits())
    }

    /// Exact conversion of an `f64`, tagged with 15 significant digits (every double fits losslessly).
    pub fn from_f64(x: f64) -> Option<Float> {
        if !x.is_finite() {
            return None;
        }
        let prec = Precision::new(15).unwrap();
        if x == 0.0 {
            return Some(Float::zero(prec));
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Some(Self::from_parts(BigInt::from(m) * sign, e, prec))
    }

    /// Parses a decimal literal such as `0.8`, `-12`, `1.60219e-19`.
    pub fn parse_decimal(s: &str, prec: Precision) -> Option<Float> {
        let r = parse_decimal_rational(s)?;
        Some(Self::from_rational(&r, prec))
    }

    fn round_from(mant: BigInt, exp: i64, sticky: bool, digits: u32) -> Float {
        let (mant, exp) = round_mantissa(mant, exp, bits_for_digits(digits), sticky);
        Float { mant, exp, digits }
    }

    pub fn precision(&self) -> Precision {
        Precision::new(self.digits).unwrap()
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn with_precision(&self, prec: Precision) -> Float {
        Self::round_from(self.mant.clone(), self.exp, false, prec.digits())
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Position just above the most significant bit: `|x| < 2^top`.
    pub(crate) fn top(&self) -> i64 {
        self.exp + self.mant.bits() as i64
    }

    pub fn neg(&self) -> Float {
        Float { mant: -&self.mant, exp: self.exp, digits: self.digits }
    }

    pub fn abs(&self) -> Float {
        Float { mant: self.mant.abs(), exp: self.exp, digits: self.digits }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let b = self.mant.bits() as i64;
        let keep = b.min(60);
        let m = (&self.mant >> (b - keep) as usize).to_f64().unwrap_or(0.0);
        m * 2f64.powi((self.exp + b - keep).clamp(-2000, 2000) as i32)
    }

    /// Whether the value is an integer.
    pub fn is_integer(&self) -> bool {
        self.exp >= 0 || self.mant.is_zero()
    }

    /// Rounds toward negative infinity.
    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as usize
        } else {
            self.mant.div_floor(&(BigInt::one() << (-self.exp) as usize))
        }
    }

    /// Rounds to the nearest integer, ties away from zero.
    pub fn round(&self) -> BigInt {
        let half = Float {
            mant: BigInt::one(),
            exp: -1,
            digits: self.digits,
        };
        let shifted = if self.is_negative() {
            Float::add_exact(self, &half.neg())
        } else {
            Float::add_exact(self, &half)
        };
        if self.is_negative() {
            -(shifted.neg().floor())
        } else {
            shifted.floor()
        }
    }

    /// Multiplies by `2^k` exactly.
    pub fn ldexp(&self, k: i64) -> Float {
        if self.is_zero() {
            return self.clone();
        }
        Float { mant: self.mant.clone(), exp: self.exp + k, digits: self.digits }
    }

    fn coarser(a: &Float, b: &Float) -> u32 {
        a.digits.min(b.digits)
    }

    // Exact sum without rounding, used internally.
    fn add_exact(a: &Float, b: &Float) -> Float {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        let e = a.exp.min(b.exp);
        let m = (&a.mant << (a.exp - e) as usize) + (&b.mant << (b.exp - e) as usize);
        let (m, e) = strip(m, e);
        Float { mant: m, exp: e, digits: Self::coarser(a, b) }
    }

    pub fn add(&self, other: &Float) -> Float {
        self.add_prec(other, Self::coarser(self, other))
    }

    fn add_prec(&self, other: &Float, digits: u32) -> Float {
        if self.is_zero() {
            return Self::round_from(other.mant.clone(), other.exp, false, digits);
        }
        if other.is_zero() {
            return Self::round_from(self.mant.clone(), self.exp, false, digits);
        }
        let bits = bits_for_digits(digits) as i64;
        let (big, small) = if self.top() >= other.top() { (self, other) } else { (other, self) };
        let limit = big.top() - bits - 8;
        if small.top() < limit {
            // `small` only contributes a sticky bit below the rounding position.
            let tiny = Float {
                mant: if small.is_negative() { -BigInt::one() } else { BigInt::one() },
                exp: limit - 1,
                digits,
            };
            let s = Float::add_exact(big, &tiny);
            return Self::round_from(s.mant, s.exp, false, digits);
        }
        let s = Float::add_exact(self, other);
        Self::round_from(s.mant, s.exp, false, digits)
    }

    pub fn sub(&self, other: &Float) -> Float {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Float) -> Float {
        Self::round_from(&self.mant * &other.mant, self.exp + other.exp, false, Self::coarser(self, other))
    }

    /// Returns `None` when dividing by zero.
    pub fn div(&self, other: &Float) -> Option<Float> {
        if other.is_zero() {
            return None;
        }
        let digits = Self::coarser(self, other);
        if self.is_zero() {
            return Some(Float { mant: BigInt::zero(), exp: 0, digits });
        }
        let bits = bits_for_digits(digits) as i64;
        let shift = (bits + 2 + other.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let (q, r) = (&self.mant << shift as usize).div_rem(&other.mant);
        Some(Self::round_from(q, self.exp - other.exp - shift, !r.is_zero(), digits))
    }

    pub fn recip(&self) -> Option<Float> {
        let one = Float { mant: BigInt::one(), exp: 0, digits: self.digits };
        one.div(self)
    }

    /// Square root of a non-negative value.
    pub fn sqrt(&self) -> Option<Float> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let bits = bits_for_digits(self.digits) as i64;
        let mut m = self.mant.magnitude().clone();
        let mut e = self.exp;
        let want = 2 * bits + 4;
        let have = m.bits() as i64;
        let mut shift = (want - have).max(0);
        if (e - shift) % 2 != 0 {
            shift += 1;
        }
        m <<= shift as usize;
        e -= shift;
        let root = m.sqrt();
        let sticky = &root * &root != m;
        Some(Self::round_from(BigInt::from(root), e / 2, sticky, self.digits))
    }

    pub fn powi(&self, n: &BigInt) -> Option<Float> {
        if n.is_negative() {
            return self.powi(&-n)?.recip();
        }
        // extra working bits to absorb rounding in the squaring chain
        let guard = n.bits() as u32 + 4;
        let work = Precision::new(self.digits + guard).unwrap();
        let mut base = self.with_precision(work);
        let mut acc = Float { mant: BigInt::one(), exp: 0, digits: work.digits() };
        let mut k = n.clone();
        while !k.is_zero() {
            if k.is_odd() {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if !k.is_zero() {
                base = base.mul(&base);
            }
        }
        Some(acc.with_precision(self.precision()))
    }

    /// Compares two values exactly.
    pub fn cmp_value(&self, other: &Float) -> Ordering {
        let sa = self.signum();
        let sb = other.signum();
        if sa != sb || sa == 0 {
            return sa.cmp(&sb);
        }
        let mag = if self.top() != other.top() {
            self.top().cmp(&other.top())
        } else {
            let e = self.exp.min(other.exp);
            let a = self.mant.magnitude() << (self.exp - e) as usize;
            let b = other.mant.magnitude() << (other.exp - e) as usize;
            a.cmp(&b)
        };
        if sa > 0 {
            mag
        } else {
            mag.reverse()
        }
    }

    /// Decimal digits of `|x|` correctly rounded to `n` significant digits,
    /// together with the decimal exponent of the first digit.
    pub fn to_decimal(&self, n: u32) -> (bool, String, i64) {
        if self.is_zero() {
            return (false, "0".repeat(n as usize), 0);
        }
        let neg = self.is_negative();
        let v = self.to_rational().abs();
        let mut k = ((self.top() - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            let scale = n as i64 - 1 - k;
            let scaled = if scale >= 0 {
                &v * BigRational::from_integer(BigInt::from(10).pow(scale as u32))
            } else {
                &v / BigRational::from_integer(BigInt::from(10).pow((-scale) as u32))
            };
            let digits = round_half_even(&scaled);
            let s = digits.to_string();
            if s.len() as u32 > n {
                k += 1;
                continue;
            }
            if (s.len() as u32) < n {
                k -= 1;
                continue;
            }
            return (neg, s, k);
        }
    }

    /// Renders exactly `n` significant digits in positional notation.
    pub fn to_sig_string(&self, n: u32) -> String {
        let (neg, digits, k) = self.to_decimal(n);
        let body = positional(&digits, k, true);
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

/// Positional rendering of `0.d1d2... * 10^(k+1)`.
fn positional(digits: &str, k: i64, keep_zeros: bool) -> String {
    let digits = if keep_zeros {
        digits.to_string()
    } else {
        let t = digits.trim_end_matches('0');
        if t.is_empty() { "0".to_string() } else { t.to_string() }
    };
    if k >= 0 {
        let k = k as usize;
        if digits.len() > k + 1 {
            format!("{}.{}", &digits[..k + 1], &digits[k + 1..])
        } else {
            format!("{}{}.0", digits, "0".repeat(k + 1 - digits.len()))
        }
    } else {
        format!("0.{}{}", "0".repeat((-k - 1) as usize), digits)
    }
}

impl fmt::Display for Float {
    /// Shortest form at the value's own precision: positional for moderate
    /// exponents, otherwise `d.dddE±k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0.0");
        }
        let (neg, digits, k) = self.to_decimal(self.digits);
        let sign = if neg { "-" } else { "" };
        if k < -4 || k >= self.digits as i64 {
            let t = digits.trim_end_matches('0');
            let (head, tail) = t.split_at(1);
            let tail = if tail.is_empty() { "0" } else { tail };
            write!(f, "{sign}{head}.{tail}E{k}")
        } else {
            write!(f, "{sign}{}", positional(&digits, k, false))
        }
    }
}

fn round_half_even(r: &BigRational) -> BigInt {
    let (q, rem) = r.numer().div_mod_floor(r.denom());
    let twice = &rem * 2u32;
    match twice.cmp(r.denom()) {
        Ordering::Less => q,
        Ordering::Greater => q + 1,
        Ordering::Equal => {
            if q.is_odd() {
                q + 1
            } else {
                q
            }
        }
    }
}

fn strip(m: BigInt, e: i64) -> (BigInt, i64) {
    if m.is_zero() {
        return (m, 0);
    }
    let tz = m.trailing_zeros().unwrap_or(0);
    if tz == 0 {
        (m, e)
    } else {
        (m >> tz as usize, e + tz as i64)
    }
}

/// Rounds `mant * 2^exp` to at most `bits` significant bits, half to even.
/// `sticky` marks a nonzero tail already discarded below `mant`.
pub(crate) fn round_mantissa(mant: BigInt, exp: i64, bits: u64, sticky: bool) -> (BigInt, i64) {
    if mant.is_zero() {
        return (mant, 0);
    }
    let neg = mant.is_negative();
    let mag: BigUint = mant.magnitude().clone();
    let len = mag.bits();
    if len <= bits {
        let m = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, mag);
        return strip(m, exp);
    }
    let shift = len - bits;
    let mut q = &mag >> shift as usize;
    let rem = &mag - (&q << shift as usize);
    let half = BigUint::one() << (shift - 1) as usize;
    let round_up = match rem.cmp(&half) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => sticky || q.is_odd(),
    };
    if round_up {
        q += 1u32;
    }
    let m = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, q);
    strip(m, exp + shift as i64)
}

/// Exact rational value of a decimal literal.
pub fn parse_decimal_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (neg, s) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(i) => (&mantissa[..i], &mantissa[i + 1..]),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut n: BigInt = digits.parse().ok()?;
    if neg {
        n = -n;
    }
    let e10 = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    Some(if e10 >= 0 {
        BigRational::from_integer(n * ten.pow(e10 as u32))
    } else {
        BigRational::new(n, ten.pow((-e10) as u32))
    })
}

/// Count of significant digits written in a decimal literal.
pub fn literal_significant_digits(s: &str) -> u32 {
    let mantissa = match s.find(['e', 'E']) {
        Some(i) => &s[..i],
        None => s,
    };
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let t = digits.trim_start_matches('0');
    t.len().max(1) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: u32) -> Precision {
        Precision::new(d).unwrap()
    }

    #[test]
    fn rational_rounding() {
        let r = BigRational::new(4.into(), 5.into());
        assert_eq!(Float::from_rational(&r, p(20)).to_sig_string(20), "0.80000000000000000000");
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(Float::from_rational(&third, p(5)).to_string(), "0.33333");
    }

    #[test]
    fn display_forms() {
        let qe = Float::parse_decimal("1.60219e-19", p(20)).unwrap();
        assert_eq!(qe.to_string(), "1.60219E-19");
        let m1 = Float::parse_decimal("-1", p(20)).unwrap();
        assert_eq!(m1.to_string(), "-1.0");
        let big = Float::parse_decimal("120773.88559548416", p(20)).unwrap();
        assert_eq!(big.to_string(), "120773.88559548416");
        let f = Float::from_f64(1.60219e-19).unwrap();
        assert_eq!(f.to_string(), "1.60219E-19");
    }

    #[test]
    fn arithmetic_is_rounded() {
        let a = Float::parse_decimal("0.1", p(20)).unwrap();
        let b = Float::parse_decimal("0.2", p(20)).unwrap();
        assert_eq!(a.add(&b).to_string(), "0.3");
        let c = a.div(&b).unwrap();
        assert_eq!(c.to_string(), "0.5");
        let two = Float::from_bigint(&BigInt::from(2), p(30));
        assert_eq!(two.sqrt().unwrap().to_string(), "1.41421356237309504880168872421");
    }

    #[test]
    fn tiny_addend_keeps_rounding() {
        let one = Float::from_bigint(&BigInt::from(1), p(20));
        let tiny = Float::from_parts(BigInt::from(1), -500, p(20));
        assert_eq!(one.add(&tiny).cmp_value(&one), Ordering::Equal);
        assert_eq!(one.sub(&tiny).to_string(), "1.0");
    }

    #[test]
    fn decimal_literals() {
        assert_eq!(parse_decimal_rational("1.5e2").unwrap(), BigRational::from_integer(150.into()));
        assert_eq!(parse_decimal_rational("-.25").unwrap(), BigRational::new((-1).into(), 4.into()));
        assert!(parse_decimal_rational("1.2.3").is_none());
        assert_eq!(literal_significant_digits("0.000123"), 3);
    }
}
