//! Lewis-Wester style tests at caller-chosen scale.
//!
//! C, F, G, M1, P, P', Q and Q' use seeded reconstructions of the original
//! inputs; their digests are self-consistency baselines.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symkern::expr::{build_add, build_mul};
use symkern::poly::{self, normal};
use symkern::{expand, subs_pairs, symbol, Expr, Matrix, Number};

use crate::bench::{check, BenchResult, Run};

fn int(n: u64) -> Number {
    Number::Integer(BigInt::from(n))
}

/// `(1000+i)!/(900+i)!` for `i = 1..n`.
pub fn a(n: u64) -> BenchResult<Run> {
    let mut qs = Vec::with_capacity(n as usize);
    for i in 1..=n {
        qs.push(int(1000 + i).factorial()?.div(&int(900 + i).factorial()?)?);
    }
    let shown = qs.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",");
    Ok(Run::new(shown, move || {
        for (i, q) in (1..).zip(&qs) {
            let want: BigInt = (901 + i..=1000 + i).map(BigInt::from).product();
            check(q.as_bigint() == Some(&want), || format!("quotient {i} is {q}"))?;
        }
        Ok(())
    }))
}

/// Harmonic number `sum(1/i, i = 1..n)`.
pub fn b(n: u64) -> BenchResult<Run> {
    let mut s = Number::zero();
    for i in 1..=n as i64 {
        s = s.add(&Number::rational(1, i));
    }
    Ok(Run::new(s.to_string(), move || {
        let l = (1..=n).map(BigInt::from).fold(BigInt::one(), |l, i| l.lcm(&i));
        let num: BigInt = (1..=n).map(|i| &l / BigInt::from(i)).sum();
        let want = BigRational::new(num, l);
        check(s.to_rational().as_ref() == Some(&want), || format!("sum is {s}, expected {want}"))
    }))
}

fn random_digits(rng: &mut ChaCha8Rng, n: u64) -> BigInt {
    let mut s = String::with_capacity(n as usize);
    s.push(char::from(b'1' + rng.gen_range(0..9u8)));
    for _ in 1..n {
        s.push(char::from(b'0' + rng.gen_range(0..10u8)));
    }
    s.parse().expect("digits")
}

/// Integer gcd of `g*p` and `g*q` for random `n`-digit `g`, `p`, `q`.
pub fn c(n: u64) -> BenchResult<Run> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0 + n);
    let g = random_digits(&mut rng, n.max(1));
    let x = &g * random_digits(&mut rng, n.max(1));
    let y = &g * random_digits(&mut rng, n.max(1));
    let (nx, ny) = (Number::Integer(x.clone()), Number::Integer(y.clone()));
    let d = nx.gcd(&ny)?;
    Ok(Run::new(d.to_string(), move || {
        let d = d.as_bigint().cloned().unwrap_or_default();
        check(!d.is_zero() && (&x % &d).is_zero() && (&y % &d).is_zero(), || format!("{d} does not divide both inputs"))?;
        check((&x / &d).gcd(&(&y / &d)).is_one(), || "cofactors are not coprime".into())?;
        check((&d % &g).is_zero(), || "the planted factor does not divide the gcd".into())
    }))
}

/// `normal(sum(i*y*t^i/(y+s(i)*t)^i, i = 1..n))` checked at rational points.
fn rational_sum(n: u64, shift: fn(i64) -> i64) -> BenchResult<Run> {
    let (y, t) = (symbol("y"), symbol("t"));
    let mut terms = Vec::new();
    for i in 1..=n as i64 {
        let den = build_add([y.clone(), build_mul([Expr::int(shift(i)), t.clone()])]).pow(i);
        terms.push(build_mul([Expr::int(i), y.clone(), t.pow(i)]).checked_div(den)?);
    }
    let r = normal(&build_add(terms))?;
    Ok(Run::new(r.to_string(), move || {
        for (yv, tv) in [((3, 7), (5, 11)), ((-2, 1), (3, 7))] {
            let (yv, tv) = (Number::rational(yv.0, yv.1), Number::rational(tv.0, tv.1));
            let got = subs_pairs(&r, &[(y.clone(), Expr::num(yv.clone())), (t.clone(), Expr::num(tv.clone()))])?;
            let mut want = Number::zero();
            for i in 1..=n as i64 {
                let ie = Number::from_i64(i);
                let den = yv.add(&Number::from_i64(shift(i)).mul(&tv)).powi(&BigInt::from(i))?;
                want = want.add(&ie.mul(&yv).mul(&tv.powi(&BigInt::from(i))?).div(&den)?);
            }
            check(got.as_number() == Some(&want), || format!("value {got} at y={yv}, t={tv}, expected {want}"))?;
        }
        Ok(())
    }))
}

pub fn d(n: u64) -> BenchResult<Run> {
    rational_sum(n, |i| i)
}

pub fn e(n: u64) -> BenchResult<Run> {
    rational_sum(n, |i| (5 - i).abs())
}

/// Dense polynomial of total degree `deg` with coefficients in -9..=9.
fn random_poly(rng: &mut ChaCha8Rng, vars: &[Expr], deg: u32) -> Expr {
    fn monomials(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
        if nvars == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in 0..=deg {
            for mut rest in monomials(nvars - 1, deg - k) {
                rest.insert(0, k);
                out.push(rest);
            }
        }
        out
    }
    let mut terms = Vec::new();
    for m in monomials(vars.len(), deg) {
        let c = rng.gen_range(-9..=9i64);
        let mut f = vec![Expr::int(c)];
        f.extend(vars.iter().zip(&m).map(|(v, &k)| v.pow(k as i64)));
        terms.push(build_mul(f));
    }
    // keep the top-degree term so that the degree is exact
    terms.push(vars[0].pow(deg as i64));
    build_add(terms)
}

/// Polynomial gcd of `g*p` and `g*q` for random dense `g`, `p`, `q` in `nvars` variables.
fn poly_gcd(nvars: usize, n: u64, seed: u64) -> BenchResult<Run> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed + n);
    let vars: Vec<Expr> = ["x", "y", "z"][..nvars].iter().map(|s| symbol(s)).collect();
    let deg = n as u32;
    let g = random_poly(&mut rng, &vars, deg);
    let x = expand(&(&g * random_poly(&mut rng, &vars, deg)))?;
    let y = expand(&(&g * random_poly(&mut rng, &vars, deg)))?;
    let d = poly::gcd(&x, &y)?;
    Ok(Run::new(d.to_string(), move || {
        let cx = poly::divide(&x, &d).map_err(|_| crate::bench::BenchError::Assertion(format!("{d} does not divide the first input")))?;
        let cy = poly::divide(&y, &d).map_err(|_| crate::bench::BenchError::Assertion(format!("{d} does not divide the second input")))?;
        let co = poly::gcd(&cx, &cy)?;
        check(co.is_one() || co == Expr::int(-1), || format!("cofactors share {co}"))?;
        check(poly::divide(&d, &g).is_ok(), || "the planted factor does not divide the gcd".into())
    }))
}

pub fn f(n: u64) -> BenchResult<Run> {
    poly_gcd(2, n, 0xF0)
}

pub fn g(n: u64) -> BenchResult<Run> {
    poly_gcd(3, n, 0x60)
}

pub fn hilbert(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| Expr::rational(1, (i + j + 1) as i64)).expect("n > 0")
}

fn superfactorial(n: u64) -> BigInt {
    (1..n).fold((BigInt::one(), BigInt::one()), |(f, acc), k| {
        let f = f * BigInt::from(k);
        (f.clone(), acc * f)
    }).1
}

/// `det` of the `n x n` Hilbert matrix in closed form.
pub fn hilbert_det(n: u64) -> Number {
    let c = superfactorial(n);
    Number::from_rational(BigRational::new(c.pow(4), superfactorial(2 * n)))
}

/// Entry `(i, j)`, 1-based, of the inverse Hilbert matrix.
pub fn hilbert_inverse_entry(n: u64, i: u64, j: u64) -> BigInt {
    let b = |a: u64, k: u64| binomial(BigInt::from(a), BigInt::from(k));
    let sign = if (i + j).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    sign * BigInt::from(i + j - 1) * b(n + i - 1, n - j) * b(n + j - 1, n - i) * b(i + j - 2, i - 1).pow(2)
}

pub fn h(n: u64) -> BenchResult<Run> {
    let d = hilbert(n as usize).det()?;
    Ok(Run::new(d.to_string(), move || {
        let want = hilbert_det(n);
        check(d.as_number() == Some(&want), || format!("det is {d}, expected {want}"))
    }))
}

pub fn i(n: u64) -> BenchResult<Run> {
    let inv = hilbert(n as usize).inverse()?;
    Ok(Run::new(Expr::matrix(inv.clone()), move || {
        for r in 0..n {
            for c in 0..n {
                let e = inv.get(r as usize, c as usize);
                let want = hilbert_inverse_entry(n, r + 1, c + 1);
                check(e.as_number().and_then(|x| x.as_bigint()) == Some(&want), || format!("entry ({r},{c}) is {e}, expected {want}"))?;
            }
        }
        Ok(())
    }))
}

pub fn j(n: u64) -> BenchResult<Run> {
    let m = hilbert(n as usize);
    let p = m.inverse()?.mul(&m)?;
    Ok(Run::new(Expr::matrix(p.clone()), move || {
        let id = Matrix::identity(n as usize);
        check(p.entries() == id.entries(), || "inverse times matrix is not the identity".into())
    }))
}

/// Tridiagonal `n x n` matrix with `x` on the diagonal, `y` above and `z` below.
pub fn tridiagonal(n: usize) -> Matrix {
    let (x, y, z) = (symbol("x"), symbol("y"), symbol("z"));
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            x.clone()
        } else if j == i + 1 {
            y.clone()
        } else if i == j + 1 {
            z.clone()
        } else {
            Expr::zero()
        }
    })
    .expect("n > 0")
}

pub fn m1(n: u64) -> BenchResult<Run> {
    let m = tridiagonal(n as usize);
    let d = m.det()?;
    Ok(Run::new(d.to_string(), move || {
        let (x, yz) = (m.get(0, 0).clone(), if n > 1 { m.get(0, 1) * m.get(1, 0) } else { Expr::zero() });
        // continuant: D(k) = x D(k-1) - y z D(k-2)
        let (mut prev, mut cur) = (Expr::one(), x.clone());
        for _ in 1..n {
            let next = expand(&(&x * &cur - &yz * &prev))?;
            prev = cur;
            cur = next;
        }
        let diff = expand(&(&d - &cur))?;
        check(diff.is_zero(), || format!("det differs from the continuant by {diff}"))
    }))
}

/// Random integer matrix with a nonzero diagonal and `extra` off-diagonal
/// entries per row.
pub fn sparse_matrix(n: usize, extra: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
        for _ in 0..extra.min(n - 1) {
            row[rng.gen_range(0..n)] = rng.gen_range(-99..=99);
        }
    }
    Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(Expr::int).collect()).collect()).expect("n > 0")
}

fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).as_number().and_then(|x| x.as_bigint()).cloned().unwrap_or_default()).collect()).collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for (j, a) in rows[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = rows[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect()).collect();
        let t = a * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

fn numeric_det(n: u64, extra: usize, seed: u64) -> BenchResult<Run> {
    let m = sparse_matrix(n as usize, extra, seed + n);
    let d = m.det()?;
    Ok(Run::new(d.to_string(), move || {
        if n <= 6 {
            let want = cofactor_det(&integer_rows(&m));
            check(d.as_number().and_then(|x| x.as_bigint()) == Some(&want), || format!("det is {d}, cofactor oracle gives {want}"))?;
        }
        if d.is_zero() {
            return check(m.inverse().is_err(), || "singular matrix was inverted".into());
        }
        let di = m.inverse()?.det()?;
        check(build_mul([d.clone(), di.clone()]).is_one(), || format!("det(A) = {d} but det(A^-1) = {di}"))
    }))
}

pub fn p(n: u64) -> BenchResult<Run> {
    numeric_det(n, 3, 0x50)
}

pub fn p_dense(n: u64) -> BenchResult<Run> {
    numeric_det(n, 10, 0x51)
}

fn charpoly(n: u64, extra: usize, seed: u64) -> BenchResult<Run> {
    let m = sparse_matrix(n as usize, extra, seed + n);
    let lambda = symbol("lambda");
    let cp = m.charpoly(&lambda)?;
    Ok(Run::new(cp.to_string(), move || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..3 {
            let r = Expr::rational(rng.gen_range(-50..=50), rng.gen_range(1..=20));
            let got = subs_pairs(&cp, &[(lambda.clone(), r.clone())])?;
            let shifted = m.add(&Matrix::identity(n as usize).scale(&-&r))?;
            let want = shifted.det()?;
            check(got == want, || format!("charpoly at {r} is {got}, det gives {want}"))?;
        }
        Ok(())
    }))
}

pub fn q(n: u64) -> BenchResult<Run> {
    charpoly(n, 3, 0x50)
}

pub fn q_dense(n: u64) -> BenchResult<Run> {
    charpoly(n, 10, 0x51)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::bench_run;

    #[test]
    fn harmonic_ten() {
        let r = b(10).unwrap();
        assert_eq!(r.result, "7381/2520");
        (r.verify)().unwrap();
    }

    #[test]
    fn hilbert_closed_forms() {
        assert_eq!(hilbert_det(3).to_string(), "1/2160");
        assert_eq!(hilbert_inverse_entry(3, 1, 1), BigInt::from(9));
        assert_eq!(hilbert_inverse_entry(3, 2, 3), BigInt::from(-180));
    }

    #[test]
    fn cofactor_oracle() {
        let rows = vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]];
        let rows: Vec<Vec<BigInt>> = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        assert_eq!(cofactor_det(&rows), BigInt::from(6));
    }

    #[test]
    fn small_scales_pass() {
        for (id, n) in [("A", 3), ("C", 30), ("D", 4), ("E", 6), ("F", 3), ("G", 2), ("H", 5), ("I", 5), ("J", 4), ("M1", 6), ("P", 5), ("P'", 6), ("Q", 5), ("Q'", 4)] {
            bench_run(id, n).unwrap_or_else(|e| panic!("{id}: {e}"));
        }
    }
}
