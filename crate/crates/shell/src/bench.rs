//! Benchmark harness. Each test computes a result under a timer, then checks
//! it against an oracle outside the timed region.

use std::hash::Hasher;
use std::io::Write;
use std::time::Instant;

use fnv::FnvHasher;
use symkern::expr::{build_add, build_mul, euler, pi, Kind};
use symkern::func::zeta;
use symkern::poly::normal;
use symkern::series::fn_series::gamma_series;
use symkern::{expand, subs_pairs, symbol, Expr, PSeries};
use thiserror::Error;

use crate::lw;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown test {0}")]
    Unknown(String),
    #[error("{0}")]
    Kernel(#[from] symkern::Error),
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type BenchResult<T> = Result<T, BenchError>;

pub(crate) fn check(cond: bool, msg: impl FnOnce() -> String) -> BenchResult<()> {
    if cond {
        Ok(())
    } else {
        Err(BenchError::Assertion(msg()))
    }
}

/// Output of the timed part of a test.
pub struct Run {
    /// Canonical rendering of the result, hashed into the digest.
    pub result: String,
    /// Oracle comparison, run after timing stops.
    pub verify: Box<dyn FnOnce() -> BenchResult<()>>,
}

impl Run {
    pub fn new(result: impl ToString, verify: impl FnOnce() -> BenchResult<()> + 'static) -> Run {
        Run { result: result.to_string(), verify: Box::new(verify) }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub test_id: String,
    pub n: u64,
    pub seconds: f64,
    pub digest: u64,
}

type TestFn = fn(u64) -> BenchResult<Run>;

const TESTS: [(&str, TestFn); 19] = [
    ("expand-subs-collapse", collapse_run),
    ("gamma-series", gamma_run),
    ("A", lw::a),
    ("B", lw::b),
    ("C", lw::c),
    ("D", lw::d),
    ("E", lw::e),
    ("F", lw::f),
    ("G", lw::g),
    ("H", lw::h),
    ("I", lw::i),
    ("J", lw::j),
    ("K", lw::i),
    ("L", lw::j),
    ("M1", lw::m1),
    ("P", lw::p),
    ("P'", lw::p_dense),
    ("Q", lw::q),
    ("Q'", lw::q_dense),
];

/// Registered test ids.
pub fn test_ids() -> impl Iterator<Item = &'static str> {
    TESTS.iter().map(|(id, _)| *id)
}

/// FNV-1a over the result text.
pub fn digest(result: &str) -> u64 {
    let mut h = FnvHasher::default();
    h.write(result.as_bytes());
    h.finish()
}

/// Runs test `id` once at size `n` and checks its result.
pub fn bench_run(id: &str, n: u64) -> BenchResult<BenchRecord> {
    let f = TESTS.iter().find(|(t, _)| *t == id).ok_or_else(|| BenchError::Unknown(id.to_string()))?.1;
    let start = Instant::now();
    let run = f(n)?;
    let seconds = start.elapsed().as_secs_f64();
    (run.verify)()?;
    Ok(BenchRecord { test_id: id.to_string(), n, seconds, digest: digest(&run.result) })
}

/// Writes `test_id,n,seconds,digest` rows, with a header first when asked.
pub fn write_csv(out: impl Write, records: &[BenchRecord], header: bool) -> BenchResult<()> {
    let mut w = csv::Writer::from_writer(out);
    if header {
        w.write_record(["test_id", "n", "seconds", "digest"])?;
    }
    for r in records {
        w.write_record([r.test_id.clone(), r.n.to_string(), format!("{:.6}", r.seconds), format!("{:016x}", r.digest)])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Result of the three-step substitution test.
pub struct Collapse {
    /// Term count of the first expansion.
    pub expanded_terms: usize,
    pub result: Expr,
    /// The symbol `a1`.
    pub a1: Expr,
}

/// Expands `(a0+..+a(n-1))^2`, substitutes `a0 = -(a2+..+a(n-1))`, expands again.
pub fn expand_subs_collapse(n: u64) -> BenchResult<Collapse> {
    check(n >= 2, || format!("n = {n} needs at least two symbols"))?;
    let a: Vec<Expr> = (0..n).map(|i| symbol(&format!("a{i}"))).collect();
    let e = expand(&build_add(a.iter().cloned()).pow(2))?;
    let expanded_terms = match e.kind() {
        Kind::Add(ps) => ps.pairs().len(),
        _ => 1,
    };
    let a0 = -build_add(a[2..].iter().cloned());
    let result = expand(&subs_pairs(&e, &[(a[0].clone(), a0)])?)?;
    Ok(Collapse { expanded_terms, result, a1: a[1].clone() })
}

fn collapse_run(n: u64) -> BenchResult<Run> {
    let c = expand_subs_collapse(n)?;
    Ok(Run::new(c.result.to_string(), move || {
        let want = n * (n + 1) / 2;
        check(c.expanded_terms as u64 == want, || format!("{} terms after the first expansion, expected {want}", c.expanded_terms))?;
        check(c.result == c.a1.pow(2), || format!("collapsed to {}", c.result))
    }))
}

/// Laurent expansion of the Gamma function at 0 to `O(x^n)`.
pub fn gamma_at_zero(n: u64) -> BenchResult<(Expr, PSeries)> {
    let x = symbol("x");
    let s = gamma_series(&x, &Expr::zero(), n as i64)?;
    Ok((x, s))
}

/// Known low-order coefficients of the expansion at 0, from `x^-1` up.
pub fn gamma_pinned() -> BenchResult<Vec<Expr>> {
    let (g, p2) = (euler(), pi().pow(2));
    Ok(vec![
        Expr::one(),
        -&g,
        &p2 / 12 + g.pow(2) / 2,
        -(&p2 * &g / 12 + g.pow(3) / 6 + zeta(&Expr::int(3))? / 3),
    ])
}

/// Laurent coefficients of Gamma at 0 for `x^-1 .. x^(m-1)`, from
/// `Gamma(x) = exp(-Euler*x + sum_{k>=2} (-1)^k zeta(k)/k x^k) / x`.
pub fn gamma_exp_oracle(m: usize) -> BenchResult<Vec<Expr>> {
    let mut l = vec![Expr::zero(), -euler()];
    for k in 2..=m as i64 {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        l.push(build_mul([Expr::rational(sign, k), zeta(&Expr::int(k))?]));
    }
    // m e_m = sum_k k l_k e_{m-k}
    let mut e = vec![Expr::one()];
    for j in 1..=m {
        let terms = (1..=j).map(|k| build_mul([Expr::int(k as i64), l[k].clone(), e[j - k].clone()]));
        e.push(expand(&build_mul([Expr::rational(1, j as i64), build_add(terms)]))?);
    }
    Ok(e)
}

fn gamma_run(n: u64) -> BenchResult<Run> {
    let (_, s) = gamma_at_zero(n)?;
    let shown = Expr::series(s.clone()).to_string();
    Ok(Run::new(shown, move || {
        for (k, want) in (-1..).zip(gamma_pinned()?) {
            if k >= n as i64 {
                break;
            }
            let got = s.coeff(k);
            let diff = normal(&expand(&build_add([got.clone(), build_mul([Expr::int(-1), want.clone()])]))?)?;
            check(diff.is_zero(), || format!("coefficient of x^{k} is {got}, expected {want}"))?;
        }
        let m = n.min(9) as usize;
        for (k, want) in (-1..).zip(gamma_exp_oracle(m)?) {
            let got = s.coeff(k);
            let diff = normal(&expand(&build_add([got.clone(), build_mul([Expr::int(-1), want.clone()])]))?)?;
            check(diff.is_zero(), || format!("coefficient of x^{k} is {got}, oracle gives {want}"))?;
        }
        Ok(())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapse_small() {
        let c = expand_subs_collapse(3).unwrap();
        assert_eq!(c.expanded_terms, 6);
        assert_eq!(c.result.to_string(), "a1^2");
        let r = bench_run("expand-subs-collapse", 3).unwrap();
        assert_eq!(r.digest, digest("a1^2"));
        assert!(bench_run("expand-subs-collapse", 1).is_err());
    }

    #[test]
    fn gamma_low_orders() {
        let r = bench_run("gamma-series", 3).unwrap();
        assert_eq!(r.digest, bench_run("gamma-series", 3).unwrap().digest);
        let (_, s) = gamma_at_zero(3).unwrap();
        assert_eq!(s.coeff(0).to_string(), "-Euler");
        assert_eq!(expand(&s.coeff(1)).unwrap().to_string(), "1/12*Pi^2+1/2*Euler^2");
    }

    #[test]
    fn oracle_matches_pinned() {
        let oracle = gamma_exp_oracle(3).unwrap();
        for (o, p) in oracle.iter().zip(gamma_pinned().unwrap()) {
            assert!(normal(&(o - &p)).unwrap().is_zero(), "{o} vs {p}");
        }
    }

    #[test]
    fn csv_rows() {
        let r = BenchRecord { test_id: "B".into(), n: 10, seconds: 0.5, digest: 0xabc };
        let mut out = Vec::new();
        write_csv(&mut out, &[r], true).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "test_id,n,seconds,digest\nB,10,0.500000,0000000000000abc\n");
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(bench_run("Z", 1), Err(BenchError::Unknown(_))));
    }
}
