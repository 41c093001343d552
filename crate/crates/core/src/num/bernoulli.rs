//! Exact Bernoulli numbers with `B1 = -1/2`, memoized process-wide.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

static TABLE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// `B_n` as a rational.
pub fn bernoulli_rational(n: u64) -> BigRational {
    if n > 1 && n % 2 == 1 {
        return BigRational::zero();
    }
    let mut table = TABLE.lock().unwrap_or_else(|e| e.into_inner());
    while table.len() as u64 <= n {
        let m = table.len() as u64;
        let next = if m == 0 {
            BigRational::one()
        } else if m > 1 && m % 2 == 1 {
            BigRational::zero()
        } else {
            // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
            let mut sum = BigRational::zero();
            let mut binom = BigInt::one();
            for (k, b) in table.iter().enumerate() {
                if !b.is_zero() {
                    sum += b * &binom;
                }
                binom = binom * BigInt::from(m + 1 - k as u64) / BigInt::from(k as u64 + 1);
            }
            -sum / BigInt::from(m + 1)
        };
        table.push(next);
    }
    table[n as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    // Akiyama-Tanigawa produces B_n with B1 = +1/2.
    fn akiyama_tanigawa(n: usize) -> BigRational {
        let mut a: Vec<BigRational> = (0..=n)
            .map(|m| BigRational::new(BigInt::one(), BigInt::from(m + 1)))
            .collect();
        for m in 0..=n {
            a[m] = BigRational::new(BigInt::one(), BigInt::from(m + 1));
            for j in (1..=m).rev() {
                a[j - 1] = (&a[j - 1] - &a[j]) * BigInt::from(j);
            }
        }
        a[0].clone()
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli_rational(0), BigRational::one());
        assert_eq!(bernoulli_rational(1), BigRational::new((-1).into(), 2.into()));
        assert_eq!(bernoulli_rational(2), BigRational::new(1.into(), 6.into()));
        assert_eq!(bernoulli_rational(4), BigRational::new((-1).into(), 30.into()));
        assert!(bernoulli_rational(7).is_zero());
    }

    #[test]
    fn matches_akiyama_tanigawa() {
        for n in 2..40 {
            assert_eq!(bernoulli_rational(n as u64), akiyama_tanigawa(n), "B_{n}");
        }
    }

    #[test]
    fn concurrent_access() {
        let handles: Vec<_> = (0..4)
            .map(|i| std::thread::spawn(move || bernoulli_rational(30 + 2 * i)))
            .collect();
        let vals: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(vals[0], akiyama_tanigawa(30));
    }
}
