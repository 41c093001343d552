//! The number tower: integers, rationals, floats and complex pairs.
//!
//! Every constructor returns the canonical variant, so equal values built along
//! different paths compare and hash identically.

mod bernoulli;
pub mod elementary;
mod float;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use bernoulli::bernoulli_rational;
pub use float::{bits_for_digits, literal_significant_digits, parse_decimal_rational, Float};

use crate::error::{domain, Error, Result};

/// Decimal digits carried by a float.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Precision(u32);

impl Precision {
    pub const DEFAULT: Precision = Precision(20);

    /// Returns `None` below two digits.
    pub fn new(digits: u32) -> Option<Precision> {
        (digits >= 2).then_some(Precision(digits))
    }

    pub fn digits(self) -> u32 {
        self.0
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DEFAULT
    }
}

#[derive(Clone, Debug)]
pub enum Number {
    Integer(BigInt),
    /// Denominator at least 2, coprime to the numerator.
    Rational(BigRational),
    Float(Float),
    /// Real and imaginary parts, neither complex; the imaginary part is nonzero.
    Complex(Box<Number>, Box<Number>),
}

use Number::*;

impl Number {
    pub fn zero() -> Number {
        Integer(BigInt::zero())
    }

    pub fn one() -> Number {
        Integer(BigInt::one())
    }

    pub fn from_i64(n: i64) -> Number {
        Integer(BigInt::from(n))
    }

    pub fn imaginary_unit() -> Number {
        Complex(Box::new(Number::zero()), Box::new(Number::one()))
    }

    /// Canonical `num/den`.
    pub fn make(num: BigInt, den: BigInt) -> Result<Number> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Number::from_rational(BigRational::new(num, den)))
    }

    pub fn from_rational(r: BigRational) -> Number {
        if r.denom().is_one() {
            Integer(r.to_integer())
        } else {
            Rational(r)
        }
    }

    pub fn rational(n: i64, d: i64) -> Number {
        Number::make(n.into(), d.into()).expect("nonzero denominator")
    }

    /// Canonical complex value; a zero imaginary part collapses to the real part.
    pub fn complex(re: Number, im: Number) -> Result<Number> {
        if re.is_complex() || im.is_complex() {
            return domain("complex parts must be real");
        }
        if im.is_exact_zero() {
            return Ok(re);
        }
        // parts share float-ness
        let (re, im) = match (re.is_float(), im.is_float()) {
            (true, false) => {
                let p = re.float_precision().unwrap();
                (re, im.to_float(p))
            }
            (false, true) => {
                let p = im.float_precision().unwrap();
                (re.to_float(p), im)
            }
            _ => (re, im),
        };
        if im.is_zero() {
            return Ok(re);
        }
        Ok(Complex(Box::new(re), Box::new(im)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Integer(n) => n.is_zero(),
            Rational(_) => false,
            Float(f) => f.is_zero(),
            Complex(..) => false,
        }
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self, Integer(n) if n.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Integer(n) if n.is_one())
    }

    pub fn is_minus_one(&self) -> bool {
        matches!(self, Integer(n) if *n == BigInt::from(-1))
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Integer(_))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Integer(_) | Rational(_))
    }

    pub fn is_exact(&self) -> bool {
        match self {
            Integer(_) | Rational(_) => true,
            Float(_) => false,
            Complex(re, im) => re.is_exact() && im.is_exact(),
        }
    }

    pub fn is_float(&self) -> bool {
        !self.is_exact()
    }

    pub fn is_real(&self) -> bool {
        !self.is_complex()
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, Complex(..))
    }

    /// Sign of a real value; complex values report 0.
    pub fn signum(&self) -> i32 {
        match self {
            Integer(n) => sign_of(n),
            Rational(r) => sign_of(r.numer()),
            Float(f) => f.signum(),
            Complex(..) => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn as_bigint(&self) -> Option<&BigInt> {
        match self {
            Integer(n) => Some(n),
            _ => None,
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_bigint().and_then(|n| n.to_i64())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Integer(n) => Some(BigRational::from_integer(n.clone())),
            Rational(r) => Some(r.clone()),
            _ => None,
        }
    }

    pub fn numer(&self) -> Number {
        match self {
            Rational(r) => Integer(r.numer().clone()),
            _ => self.clone(),
        }
    }

    pub fn denom(&self) -> Number {
        match self {
            Rational(r) => Integer(r.denom().clone()),
            _ => Number::one(),
        }
    }

    pub fn real_part(&self) -> Number {
        match self {
            Complex(re, _) => (**re).clone(),
            _ => self.clone(),
        }
    }

    pub fn imag_part(&self) -> Number {
        match self {
            Complex(_, im) => (**im).clone(),
            Float(f) => Float(Float::zero(f.precision())),
            _ => Number::zero(),
        }
    }

    /// Precision of the coarsest float component, if any.
    pub fn float_precision(&self) -> Option<Precision> {
        match self {
            Float(f) => Some(f.precision()),
            Complex(re, im) => match (re.float_precision(), im.float_precision()) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
            _ => None,
        }
    }

    /// Correctly rounded float at `prec` (componentwise for complex values).
    pub fn to_float(&self, prec: Precision) -> Number {
        match self {
            Integer(n) => Float(Float::from_bigint(n, prec)),
            Rational(r) => Float(Float::from_rational(r, prec)),
            Float(f) => Float(f.with_precision(prec)),
            Complex(re, im) => Complex(Box::new(re.to_float(prec)), Box::new(im.to_float(prec))),
        }
    }

    pub fn as_float(&self) -> Option<&Float> {
        match self {
            Float(f) => Some(f),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Integer(n) => n.to_f64().unwrap_or(f64::NAN),
            Rational(r) => Float::from_rational(r, Precision(20)).to_f64(),
            Float(f) => f.to_f64(),
            Complex(..) => f64::NAN,
        }
    }

    pub fn neg(&self) -> Number {
        match self {
            Integer(n) => Integer(-n),
            Rational(r) => Rational(-r),
            Float(f) => Float(f.neg()),
            Complex(re, im) => Complex(Box::new(re.neg()), Box::new(im.neg())),
        }
    }

    pub fn abs(&self) -> Option<Number> {
        match self {
            Complex(..) => None,
            _ if self.is_negative() => Some(self.neg()),
            _ => Some(self.clone()),
        }
    }

    pub fn add(&self, other: &Number) -> Number {
        match (self, other) {
            (Integer(a), Integer(b)) => Integer(a + b),
            (Complex(..), _) | (_, Complex(..)) => {
                let re = self.real_part().add(&other.real_part());
                let im = self.imag_part().add(&other.imag_part());
                Number::complex(re, im).unwrap()
            }
            (Float(a), Float(b)) => Float(a.add(b)),
            (Float(a), b) | (b, Float(a)) => Float(a.add(&b.real_float(a.precision()))),
            _ => Number::from_rational(self.to_rational().unwrap() + other.to_rational().unwrap()),
        }
    }

    pub fn sub(&self, other: &Number) -> Number {
        self.add(&other.neg())
    }

    /// Product; an exact zero factor gives exact zero.
    pub fn mul(&self, other: &Number) -> Number {
        if self.is_exact_zero() || other.is_exact_zero() {
            return Number::zero();
        }
        match (self, other) {
            (Integer(a), Integer(b)) => Integer(a * b),
            (Complex(..), _) | (_, Complex(..)) => {
                let (a, b) = (self.real_part(), self.imag_part());
                let (c, d) = (other.real_part(), other.imag_part());
                let re = a.mul(&c).sub(&b.mul(&d));
                let im = a.mul(&d).add(&b.mul(&c));
                Number::complex(re, im).unwrap()
            }
            (Float(a), Float(b)) => Float(a.mul(b)),
            (Float(a), b) | (b, Float(a)) => Float(a.mul(&b.real_float(a.precision()))),
            _ => Number::from_rational(self.to_rational().unwrap() * other.to_rational().unwrap()),
        }
    }

    pub fn recip(&self) -> Result<Number> {
        match self {
            Integer(n) if n.is_zero() => Err(Error::DivisionByZero),
            Integer(_) | Rational(_) => Ok(Number::from_rational(self.to_rational().unwrap().recip())),
            Float(f) => f.recip().map(Float).ok_or(Error::DivisionByZero),
            Complex(re, im) => {
                let n = re.mul(re).add(&im.mul(im));
                let inv = n.recip()?;
                Number::complex(re.mul(&inv), im.neg().mul(&inv))
            }
        }
    }

    pub fn div(&self, other: &Number) -> Result<Number> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match (self, other) {
            (Float(a), Float(b)) => Ok(Float(a.div(b).unwrap())),
            (Float(a), b) if b.is_real() => Ok(Float(a.div(&b.real_float(a.precision())).unwrap())),
            _ => Ok(self.mul(&other.recip()?)),
        }
    }

    fn real_float(&self, prec: Precision) -> Float {
        match self.to_float(prec) {
            Float(f) => f,
            _ => unreachable!("real value"),
        }
    }

    /// `self^exp`. Exact bases accept only integer exponents.
    pub fn pow(&self, exp: &Number) -> Result<Number> {
        if let Integer(e) = exp {
            return self.powi(e);
        }
        if exp.is_complex() || self.is_complex() {
            return domain("complex exponentiation is not supported");
        }
        let prec = match (self.float_precision(), exp.float_precision()) {
            (Some(a), Some(b)) => a.min(b),
            (a, b) => match a.or(b) {
                Some(p) => p,
                None => return domain("exact base with non-integer exponent"),
            },
        };
        let base = self.real_float(prec);
        let e = exp.real_float(prec);
        if base.is_zero() {
            return if e.is_negative() { Err(Error::DivisionByZero) } else { Ok(Float(base)) };
        }
        if e.is_integer() {
            return base.powi(&e.floor()).map(Float).ok_or(Error::DivisionByZero);
        }
        if base.is_negative() {
            return domain("negative base with non-integer exponent");
        }
        elementary::pow_real(&base, &e, prec).map(Float)
    }

    pub fn powi(&self, e: &BigInt) -> Result<Number> {
        if e.is_zero() {
            return Ok(match self {
                Float(f) => Float(Float::from_bigint(&BigInt::one(), f.precision())),
                _ => Number::one(),
            });
        }
        if self.is_zero() {
            return if e.is_negative() { Err(Error::DivisionByZero) } else { Ok(self.clone()) };
        }
        if e.is_negative() {
            return self.powi(&-e)?.recip();
        }
        match self {
            Integer(n) => Ok(Integer(n.pow(e.to_u32().ok_or_else(|| Error::Domain("exponent too large".into()))?))),
            Rational(r) => {
                let k = e.to_i32().ok_or_else(|| Error::Domain("exponent too large".into()))?;
                Ok(Number::from_rational(r.pow(k)))
            }
            Float(f) => f.powi(e).map(Float).ok_or(Error::DivisionByZero),
            Complex(..) => {
                let mut acc = Number::one();
                let mut base = self.clone();
                let mut k = e.clone();
                while !k.is_zero() {
                    if k.is_odd() {
                        acc = acc.mul(&base);
                    }
                    k >>= 1;
                    if !k.is_zero() {
                        base = base.mul(&base);
                    }
                }
                Ok(acc)
            }
        }
    }

    /// Exact `q`-th root when it is rational (real branch).
    pub fn exact_root(&self, q: u32) -> Option<Number> {
        let r = self.to_rational()?;
        if r.is_negative() && q.is_multiple_of(2) {
            return None;
        }
        let n = int_root(r.numer(), q)?;
        let d = int_root(r.denom(), q)?;
        Some(Number::from_rational(BigRational::new(n, d)))
    }

    /// Nonnegative gcd of two integers.
    pub fn gcd(&self, other: &Number) -> Result<Number> {
        match (self, other) {
            (Integer(a), Integer(b)) => Ok(Integer(a.gcd(b))),
            _ => domain("gcd of non-integers"),
        }
    }

    pub fn lcm(&self, other: &Number) -> Result<Number> {
        match (self, other) {
            (Integer(a), Integer(b)) => Ok(Integer(a.lcm(b))),
            _ => domain("lcm of non-integers"),
        }
    }

    pub fn factorial(&self) -> Result<Number> {
        match self {
            Integer(n) if !n.is_negative() => {
                let n = n.to_u64().ok_or_else(|| Error::Domain("factorial argument too large".into()))?;
                Ok(Integer(factorial(n)))
            }
            _ => domain("factorial of a negative or non-integer value"),
        }
    }

    fn variant_rank(&self) -> u8 {
        match self {
            Integer(_) => 0,
            Rational(_) => 1,
            Float(_) => 2,
            Complex(..) => 3,
        }
    }

    /// Value order for real numbers; `None` if either is complex.
    pub fn cmp_value(&self, other: &Number) -> Option<Ordering> {
        match (self, other) {
            (Complex(..), _) | (_, Complex(..)) => None,
            (Integer(a), Integer(b)) => Some(a.cmp(b)),
            (Float(a), Float(b)) => Some(a.cmp_value(b)),
            (Float(a), b) => Some(cmp_float_exact(a, &b.to_rational().unwrap())),
            (a, Float(b)) => Some(cmp_float_exact(b, &a.to_rational().unwrap()).reverse()),
            _ => Some(self.to_rational().unwrap().cmp(&other.to_rational().unwrap())),
        }
    }

    /// Canonical total order: by value (real part first), then variant, then precision.
    pub fn canonical_cmp(&self, other: &Number) -> Ordering {
        let re = self.real_part().cmp_value(&other.real_part()).unwrap();
        if re != Ordering::Equal {
            return re;
        }
        let im = self.imag_part().cmp_value(&other.imag_part()).unwrap();
        if im != Ordering::Equal {
            return im;
        }
        let v = self.variant_rank().cmp(&other.variant_rank());
        if v != Ordering::Equal {
            return v;
        }
        self.float_precision().cmp(&other.float_precision())
    }
}

fn sign_of(n: &BigInt) -> i32 {
    if n.is_negative() {
        -1
    } else if n.is_zero() {
        0
    } else {
        1
    }
}

fn cmp_float_exact(a: &Float, b: &BigRational) -> Ordering {
    a.to_rational().cmp(b)
}

fn int_root(n: &BigInt, q: u32) -> Option<BigInt> {
    let r = n.nth_root(q);
    (r.pow(q) == *n).then_some(r)
}

pub fn factorial(n: u64) -> BigInt {
    fn range(lo: u64, hi: u64) -> BigInt {
        if hi - lo < 16 {
            (lo..=hi).fold(BigInt::one(), |acc, k| acc * k)
        } else {
            let mid = lo + (hi - lo) / 2;
            range(lo, mid) * range(mid + 1, hi)
        }
    }
    if n < 2 {
        BigInt::one()
    } else {
        range(2, n)
    }
}

/// `B_n` as a [`Number`].
pub fn bernoulli(n: u64) -> Number {
    Number::from_rational(bernoulli_rational(n))
}

impl PartialEq for Number {
    fn eq(&self, other: &Number) -> bool {
        self.canonical_cmp(other) == Ordering::Equal
    }
}

impl Eq for Number {}

impl PartialOrd for Number {
    fn partial_cmp(&self, other: &Number) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Number {
    fn cmp(&self, other: &Number) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl Hash for Number {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.variant_rank().hash(state);
        match self {
            Integer(n) => n.hash(state),
            Rational(r) => {
                r.numer().hash(state);
                r.denom().hash(state);
            }
            Float(f) => {
                f.mantissa().hash(state);
                f.exponent().hash(state);
                f.digits().hash(state);
            }
            Complex(re, im) => {
                re.hash(state);
                im.hash(state);
            }
        }
    }
}

impl From<i64> for Number {
    fn from(n: i64) -> Number {
        Number::from_i64(n)
    }
}

impl From<BigInt> for Number {
    fn from(n: BigInt) -> Number {
        Integer(n)
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer(n) => write!(f, "{n}"),
            Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Float(x) => write!(f, "{x}"),
            Complex(re, im) => {
                let imag = if im.is_one() {
                    "I".to_string()
                } else if im.is_minus_one() {
                    "-I".to_string()
                } else {
                    format!("{im}*I")
                };
                if re.is_zero() && re.is_exact() {
                    write!(f, "{imag}")
                } else if imag.starts_with('-') {
                    write!(f, "{re}{imag}")
                } else {
                    write!(f, "{re}+{imag}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Number {
        Number::rational(n, d)
    }

    #[test]
    fn make_normalizes() {
        assert!(matches!(Number::make(4.into(), 2.into()).unwrap(), Integer(ref n) if *n == BigInt::from(2)));
        assert_eq!(Number::make(6.into(), 4.into()).unwrap().to_string(), "3/2");
        assert_eq!(Number::make(0.into(), 7.into()).unwrap(), Number::zero());
        assert_eq!(Number::make(3.into(), (-6).into()).unwrap().to_string(), "-1/2");
        assert_eq!(Number::make(1.into(), 0.into()), Err(Error::DivisionByZero));
    }

    #[test]
    fn complex_collapse() {
        let a = Number::complex(Number::zero(), q(7, 3)).unwrap();
        let b = Number::complex(Number::zero(), Number::from(-3)).unwrap();
        let p = a.mul(&b);
        assert!(p.is_integer());
        assert_eq!(p, Number::from(7));
        let z = Number::complex(Number::from(1), Number::from(-2)).unwrap();
        assert_eq!(z.to_string(), "1-2*I");
        assert_eq!(Number::imaginary_unit().to_string(), "I");
        assert_eq!(Number::complex(q(1, 2), q(3, 4)).unwrap().to_string(), "1/2+3/4*I");
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(Number::from(2).pow(&Number::from(10)).unwrap(), Number::from(1024));
        assert_eq!(Number::one().div(&Number::from(3)).unwrap().to_string(), "1/3");
        assert_eq!(Number::zero().pow(&Number::from(-1)), Err(Error::DivisionByZero));
        assert_eq!(Number::one().div(&Number::zero()), Err(Error::DivisionByZero));
        assert!(Number::from(2).pow(&q(1, 2)).is_err());
        let f = Number::one().to_float(Precision::DEFAULT);
        let s = f.add(&q(1, 2));
        assert!(s.is_float());
        assert_eq!(s.to_string(), "1.5");
    }

    #[test]
    fn gcd_and_factorial() {
        assert_eq!(Number::from(12).gcd(&Number::from(18)).unwrap(), Number::from(6));
        assert_eq!(Number::from(0).gcd(&Number::from(5)).unwrap(), Number::from(5));
        assert_eq!(Number::from(0).gcd(&Number::from(0)).unwrap(), Number::from(0));
        let a = Number::from(BigInt::from(2).pow(100u32) * 3);
        let b = Number::from(BigInt::from(2).pow(99u32) * 5);
        assert_eq!(a.gcd(&b).unwrap(), Number::from(BigInt::from(2).pow(99u32)));
        assert!(q(1, 2).gcd(&Number::one()).is_err());
        assert_eq!(Number::from(5).factorial().unwrap(), Number::from(120));
        assert_eq!(Number::from(0).factorial().unwrap(), Number::from(1));
        assert!(Number::from(-1).factorial().is_err());
        let r = Number::from(10).factorial().unwrap().div(&Number::from(8).factorial().unwrap()).unwrap();
        assert_eq!(r, Number::from(90));
    }

    #[test]
    fn to_float_examples() {
        let p20 = Precision::new(20).unwrap();
        assert_eq!(q(4, 5).to_float(p20).as_float().unwrap().to_sig_string(20), "0.80000000000000000000");
        assert_eq!(q(1, 3).to_float(Precision::new(5).unwrap()).to_string(), "0.33333");
        let h = Number::make(5897162382592i64.into(), 48828125.into()).unwrap();
        let f = h.to_float(Precision::new(19).unwrap());
        assert_eq!(f.as_float().unwrap().to_sig_string(19), "120773.8855954841600");
    }

    #[test]
    fn exact_roots() {
        assert_eq!(q(9, 4).exact_root(2), Some(q(3, 2)));
        assert_eq!(Number::from(-8).exact_root(3), Some(Number::from(-2)));
        assert_eq!(Number::from(2).exact_root(2), None);
        assert_eq!(Number::from(-4).exact_root(2), None);
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), Number::one());
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(4), q(-1, 30));
    }

    fn exact() -> impl Strategy<Value = Number> {
        (-1000i64..1000, 1i64..50).prop_map(|(n, d)| Number::rational(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in exact(), b in exact(), c in exact()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.add(&a.neg()).is_exact_zero());
            if !a.is_zero() {
                prop_assert!(a.mul(&a.recip().unwrap()).is_one());
            }
            prop_assert!(a.mul(&b).is_exact());
        }

        #[test]
        fn renormalizing_is_identity(a in exact()) {
            let r = a.to_rational().unwrap();
            let again = Number::make(r.numer().clone(), r.denom().clone()).unwrap();
            prop_assert_eq!(again.to_string(), a.to_string());
            if let Rational(r) = &a {
                prop_assert!(*r.denom() >= BigInt::from(2));
            }
        }

        #[test]
        fn gcd_divides(a in -100000i64..100000, b in -100000i64..100000) {
            let (na, nb) = (Number::from(a), Number::from(b));
            let g = na.gcd(&nb).unwrap();
            if !g.is_zero() {
                let ga = na.div(&g).unwrap();
                let gb = nb.div(&g).unwrap();
                prop_assert!(ga.is_integer() && gb.is_integer());
                prop_assert!(ga.gcd(&gb).unwrap().is_one());
            }
        }

        #[test]
        fn float_rounding_bound(a in exact(), p in 2u32..40) {
            prop_assume!(!a.is_zero());
            let prec = Precision::new(p).unwrap();
            let f = a.to_float(prec).to_rational_lossless();
            let r = a.to_rational().unwrap();
            let err = (f - &r).abs();
            let tol = r.abs() * BigRational::new(BigInt::one(), BigInt::from(10).pow(p - 1));
            prop_assert!(err <= tol);
        }

        #[test]
        fn float_contamination_is_sticky(a in exact(), b in exact()) {
            let fa = a.to_float(Precision::DEFAULT);
            prop_assume!(!b.is_exact_zero());
            prop_assert!(fa.add(&b).is_float());
            prop_assert!(fa.mul(&b).is_float() || fa.is_zero());
        }
    }

    impl Number {
        fn to_rational_lossless(&self) -> BigRational {
            match self {
                Float(f) => f.to_rational(),
                _ => self.to_rational().unwrap(),
            }
        }
    }
}
