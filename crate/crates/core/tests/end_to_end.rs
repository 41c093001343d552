use symkern::expr::{euler, pi, Kind};
use symkern::func::{exp, gamma, sin, zeta};
use symkern::matrix::solve_linear;
use symkern::num::Float;
use symkern::poly::{self, normal};
use symkern::series::{series, series_of};
use symkern::{diff, evalf, expand, subs, subs_pairs, symbol, Expr, Matrix, Number, Precision};

fn hermite(n: u32, z: &Expr) -> Expr {
    let g = exp(&-z.pow(2));
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    expand(&normal(&(sign * exp(&z.pow(2)) * diff(&g, z, n).unwrap())).unwrap()).unwrap()
}

#[test]
fn hermite_eleven() {
    let z = symbol("z");
    let h = hermite(11, &z);
    assert_eq!(h.to_string(), "-665280*z+2217600*z^3-1774080*z^5+506880*z^7-56320*z^9+2048*z^11");
    let exact = subs(&h, &[Expr::equation(&z, &Expr::rational(4, 5))]).unwrap();
    assert_eq!(exact.to_string(), "5897162382592/48828125");
    let at = Expr::num(Number::Float(Float::parse_decimal("0.8", Precision::DEFAULT).unwrap()));
    let v = evalf(&subs_pairs(&h, &[(z, at)]).unwrap(), Precision::DEFAULT).unwrap();
    let f = v.as_number().and_then(|n| n.as_float()).unwrap().to_f64();
    assert!((f - 120773.88559548416).abs() < 1e-9);
}

#[test]
fn hermite_recurrence() {
    // H(n+1) = 2 z H(n) - 2 n H(n-1)
    let z = symbol("z");
    let hs: Vec<Expr> = (0..7).map(|n| hermite(n, &z)).collect();
    for n in 1..6 {
        let rhs = expand(&(2 * &z * &hs[n] - 2 * n as i64 * &hs[n - 1])).unwrap();
        assert_eq!(hs[n + 1], rhs, "n = {n}");
    }
}

#[test]
fn deferred_sine() {
    let (x, y) = (symbol("x"), symbol("y"));
    let e = sin(&(pi() * (&x + &y / 2)));
    assert_eq!(e.to_string(), "sin(Pi*(x+1/2*y))");
    let e = subs(&e, &[Expr::equation(&y, &Expr::one())]).unwrap();
    assert_eq!(e.to_string(), "sin(Pi*(1/2+x))");
    let e = subs(&e, &[Expr::equation(&x, &Expr::int(11))]).unwrap();
    assert_eq!(e, Expr::int(-1));
    let arg = evalf(&(Expr::rational(23, 2) * pi()), Precision::DEFAULT).unwrap();
    let v = evalf(&sin(&arg), Precision::DEFAULT).unwrap();
    assert!((v.as_number().unwrap().to_f64() + 1.0).abs() < 1e-18);
}

#[test]
fn relativistic_gamma_factor() {
    let (v, c) = (symbol("v"), symbol("c"));
    let e = (1 - (&v / &c).pow(2)).pow(Expr::rational(-1, 2));
    let s = series_of(&e, &Expr::equation(&v, &Expr::zero()), 6).unwrap();
    assert_eq!(Expr::series(s.clone()).to_string(), "1+v^2/(2*c^2)+3*v^4/(8*c^4)+O(v^6)");
    let inv = series(&Expr::series(s).pow(-2), &v, &Expr::zero(), 6).unwrap();
    assert_eq!(Expr::series(inv).to_string(), "1-v^2/c^2+O(v^6)");
}

#[test]
fn gamma_laurent_expansion() {
    let x = symbol("x");
    let s = series(&gamma(&x).unwrap(), &x, &Expr::zero(), 3).unwrap();
    let g = euler();
    let want = [
        Expr::one(),
        -&g,
        pi().pow(2) / 12 + g.pow(2) / 2,
        -(pi().pow(2) * &g / 12 + g.pow(3) / 6 + zeta(&Expr::int(3)).unwrap() / 3),
    ];
    for (k, w) in (-1..).zip(&want) {
        assert_eq!(normal(&(s.coeff(k) - w)).unwrap(), Expr::zero(), "x^{k}");
    }
    assert_eq!(s.order(), Some(3));
}

#[test]
fn rational_function_pipeline() {
    let (a, b) = (symbol("a"), symbol("b"));
    let num = expand(&((&a + &b).pow(3) * (&a - &b))).unwrap();
    let den = expand(&((&a + &b) * (&a - 2 * &b))).unwrap();
    assert_eq!(poly::gcd(&num, &den).unwrap(), &a + &b);
    let r = normal(&(&num / &den)).unwrap();
    let Kind::Mul(_) = r.kind() else { panic!("{r}") };
    assert_eq!(expand(&(normal(&(&r * (&a - 2 * &b))).unwrap())).unwrap(), expand(&((&a + &b).pow(2) * (&a - &b))).unwrap());
}

#[test]
fn linear_algebra_pipeline() {
    let (x, y, t) = (symbol("x"), symbol("y"), symbol("t"));
    let m = Matrix::from_rows(vec![vec![t.clone(), Expr::one()], vec![Expr::one(), t.clone()]]).unwrap();
    assert_eq!(m.det().unwrap().to_string(), "-1+t^2");
    let inv = m.inverse().unwrap();
    let id = m.mul(&inv).unwrap().map(normal).unwrap();
    assert_eq!(id.entries(), Matrix::identity(2).entries());
    let sol = solve_linear(&[Expr::equation(&(&t * &x + &y), &Expr::one()), Expr::equation(&(&x + &t * &y), &Expr::zero())], &[x.clone(), y.clone()]).unwrap();
    assert_eq!(sol[0].to_string(), "x==t/(-1+t^2)");
}
