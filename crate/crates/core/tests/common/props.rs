//! Property suites shared by the test binaries.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use symkern::expr::{build_add, build_mul, compare};
use symkern::func::{exp, sin};
use symkern::poly::{self, normal};
use symkern::series::series;
use symkern::{diff, evalf, expand, subs_pairs, symbol, Expr, Number, Precision};

fn vars() -> [Expr; 3] {
    [symbol("x"), symbol("y"), symbol("z")]
}

thread_local! {
    static VARS: [Expr; 3] = vars();
}

fn var(i: usize) -> Expr {
    VARS.with(|v| v[i].clone())
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0usize..3).prop_map(var),
        (-5i64..=5).prop_map(Expr::int),
        (-5i64..=5, 1i64..=4).prop_map(|(n, d)| Expr::rational(n, d)),
    ]
}

/// Rational expressions in x, y, z.
fn rational_expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(build_add),
            prop::collection::vec(inner.clone(), 2..4).prop_map(build_mul),
            (inner.clone(), 1i64..=3).prop_map(|(b, k)| b.pow(k)),
            (inner.clone(), inner).prop_filter_map("zero divisor", |(a, b)| a.checked_div(b).ok()),
        ]
    })
}

/// Expressions in x with elementary functions, smooth near x = 1/2.
fn smooth_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![Just(var(0)), (-3i64..=3).prop_map(Expr::int), (1i64..=3, 1i64..=4).prop_map(|(n, d)| Expr::rational(n, d))];
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(build_add),
            prop::collection::vec(inner.clone(), 2..3).prop_map(build_mul),
            (inner.clone(), 1i64..=3).prop_map(|(b, k)| b.pow(k)),
            inner.clone().prop_map(|a| sin(&a)),
            inner.prop_map(|a| exp(&a)),
        ]
    })
}

/// Integer polynomial in x and y.
fn poly_expr(max_deg: i64) -> impl Strategy<Value = Expr> {
    prop::collection::vec((-6i64..=6, 0..=max_deg, 0..=max_deg), 1..5).prop_map(|ts| {
        build_add(ts.into_iter().map(|(c, i, j)| build_mul([Expr::int(c), var(0).pow(i), var(1).pow(j)])))
    })
}

fn value_at(e: &Expr, point: &[(Expr, Expr)]) -> Option<f64> {
    let v = evalf(&subs_pairs(e, point).ok()?, Precision::DEFAULT).ok()?;
    let n = v.as_number()?;
    n.is_real().then(|| n.to_f64())
}

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1e-300)
}

/// Fixed-seed runner so every invocation sees the same cases.
fn run<S: Strategy>(cases: u32, strategy: S, check: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, check).map_err(|e| e.to_string())
}

pub fn operand_order(cases: u32) -> Result<(), String> {
    run(cases, (prop::collection::vec(rational_expr(), 1..5), any::<u64>()), |(terms, seed)| {
        let mut shuffled = terms.clone();
        let len = shuffled.len();
        for i in (1..len).rev() {
            shuffled.swap(i, (seed as usize ^ i.wrapping_mul(2654435761)) % (i + 1));
        }
        let (s1, s2) = (build_add(terms.clone()), build_add(shuffled.clone()));
        prop_assert_eq!(compare(&s1, &s2), std::cmp::Ordering::Equal);
        prop_assert_eq!(s1.hash_value(), s2.hash_value());
        let (p1, p2) = (build_mul(terms), build_mul(shuffled));
        prop_assert_eq!(&p1, &p2);
        prop_assert_eq!(p1.hash_value(), p2.hash_value());
        Ok(())
    })
}

pub fn gcd_cofactors(cases: u32) -> Result<(), String> {
    run(cases, (poly_expr(3), poly_expr(3), poly_expr(2)), |(a, b, g)| {
        let (a, b) = (expand(&(&g * &a)).unwrap(), expand(&(&g * &b)).unwrap());
        if a.is_zero() || b.is_zero() {
            return Ok(());
        }
        let d = poly::gcd(&a, &b).unwrap();
        let ca = poly::divide(&a, &d).unwrap();
        let cb = poly::divide(&b, &d).unwrap();
        let co = poly::gcd(&ca, &cb).unwrap();
        prop_assert!(co.is_one() || co == Expr::int(-1), "cofactors share {}", co);
        if !g.is_zero() {
            prop_assert!(poly::divide(&d, &g).is_ok());
        }
        Ok(())
    })
}

pub fn heuristic_gcd(cases: u32) -> Result<(), String> {
    run(cases, (poly_expr(3), poly_expr(3), poly_expr(2)), |(a, b, g)| {
        let (a, b) = (expand(&(&g * &a)).unwrap(), expand(&(&g * &b)).unwrap());
        if a.is_zero() || b.is_zero() {
            return Ok(());
        }
        if let Some(h) = poly::heur_gcd(&a, &b).unwrap() {
            let s = poly::sr_gcd(&a, &b).unwrap();
            prop_assert!(h == s || h == expand(&-&s).unwrap(), "heuristic {} vs prs {}", h, s);
        }
        Ok(())
    })
}

pub fn normal_form(cases: u32) -> Result<(), String> {
    run(cases, rational_expr(), |e| {
        let Ok(n) = normal(&e) else { return Ok(()) };
        prop_assert_eq!(&normal(&n).unwrap(), &n);
        let point = [
            (var(0), Expr::rational(7, 13)),
            (var(1), Expr::rational(-5, 11)),
            (var(2), Expr::rational(3, 17)),
        ];
        if let (Some(u), Some(v)) = (value_at(&e, &point), value_at(&n, &point)) {
            prop_assert!(close(u, v, 1e-10), "{} -> {} vs {}", e, u, v);
        }
        Ok(())
    })
}

pub fn derivative(cases: u32) -> Result<(), String> {
    run(cases, smooth_expr(), |e| {
        let x = var(0);
        let d = diff(&e, &x, 1).unwrap();
        let x0 = Number::rational(1, 2);
        let h = Number::rational(1, 1_000_000);
        let at = |v: Number| value_at(&e, &[(x.clone(), Expr::num(v))]);
        let (Some(fp), Some(fm), Some(dv)) = (at(x0.add(&h)), at(x0.sub(&h)), value_at(&d, &[(x.clone(), Expr::num(x0.clone()))])) else {
            return Ok(());
        };
        if !(fp.is_finite() && fm.is_finite() && dv.is_finite() && fp.abs() < 1e6) {
            return Ok(());
        }
        let fd = (fp - fm) / 2e-6;
        prop_assert!((fd - dv).abs() <= 1e-8 * dv.abs().max(1.0), "{}: {} vs {}", e, fd, dv);
        Ok(())
    })
}

pub fn series_truncation(cases: u32) -> Result<(), String> {
    run(cases, (smooth_expr(), 1i64..4, 1i64..3), |(e, n, extra)| {
        let x = var(0);
        let point = Expr::zero();
        let (Ok(lo), Ok(hi)) = (series(&e, &x, &point, n), series(&e, &x, &point, n + extra)) else {
            return Ok(());
        };
        prop_assert_eq!(Expr::series(hi.truncate(n)).to_string(), Expr::series(lo).to_string());
        Ok(())
    })
}

type Suite = (&'static str, u32, fn(u32) -> Result<(), String>);

/// Name, case count and runner of each property suite.
pub const SUITES: [Suite; 6] = [
    ("canonical form under operand permutation", 1000, operand_order),
    ("gcd divisibility and coprime cofactors", 500, gcd_cofactors),
    ("heuristic gcd agrees with prs", 200, heuristic_gcd),
    ("normal idempotent and value preserving", 200, normal_form),
    ("diff against central differences", 200, derivative),
    ("series truncation consistency", 200, series_truncation),
];
