//! Random expression generator for print/parse round trips.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symkern::expr::{build_add, build_mul, catalan, compare, euler, pi, RelOp};
use symkern::func::{apply_named, cos, exp, sin};
use symkern::num::Float;
use symkern::{Expr, Matrix, Number, Precision};
use symkern_shell::Session;

/// Relation, list, matrix or plain expression at the top level.
pub fn gen_top(rng: &mut ChaCha8Rng, s: &mut Session) -> Expr {
    match rng.gen_range(0..8) {
        0 => {
            let ops = [RelOp::Eq, RelOp::Ne, RelOp::Lt, RelOp::Le, RelOp::Gt, RelOp::Ge];
            Expr::relational(gen(rng, s, 3), ops[rng.gen_range(0..6)], gen(rng, s, 3))
        }
        1 => Expr::list((0..rng.gen_range(1..4)).map(|_| gen(rng, s, 3)).collect()),
        2 => {
            let (r, c) = (rng.gen_range(1..3), rng.gen_range(1..3));
            Expr::matrix(Matrix::from_fn(r, c, |_, _| Expr::zero()).unwrap().map(|_| Ok(gen(rng, s, 2))).unwrap())
        }
        3 => {
            // floats only as coefficients of a symbol reserved for them, so
            // that no inexact arithmetic touches the printed digits
            let c = Float::from_f64(rng.gen_range(-4096..=4096) as f64 / 64.0).unwrap().with_precision(Precision::DEFAULT);
            let w = s.symbol("w");
            build_add([gen(rng, s, 3), build_mul([Expr::num(Number::Float(c)), w.pow(rng.gen_range(1..3))])])
        }
        _ => gen(rng, s, 4),
    }
}

/// Random expression over the session symbols `x`, `y`, `z`.
pub fn gen(rng: &mut ChaCha8Rng, s: &mut Session, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..9) {
            0..=2 => s.symbol(["x", "y", "z"][rng.gen_range(0..3)]),
            3 => Expr::int(rng.gen_range(-20..=20)),
            4 => Expr::rational(rng.gen_range(-9..=9), rng.gen_range(1..=9)),
            5 => Expr::int(rng.gen_range(-50..=50)),
            6 => Expr::num(Number::complex(Number::rational(rng.gen_range(-4..=4), 2), Number::from_i64(rng.gen_range(1..=3))).unwrap()),
            7 => [pi(), euler(), catalan()][rng.gen_range(0..3)].clone(),
            _ => Expr::rational(1, rng.gen_range(1..=5)),
        };
    }
    let sub = |rng: &mut ChaCha8Rng, s: &mut Session| gen(rng, s, depth - 1);
    match rng.gen_range(0..9) {
        0 => {
            let k = rng.gen_range(2..4);
            build_add((0..k).map(|_| sub(rng, s)).collect::<Vec<_>>())
        }
        1 => {
            let k = rng.gen_range(2..4);
            build_mul((0..k).map(|_| sub(rng, s)).collect::<Vec<_>>())
        }
        2 => {
            let b = sub(rng, s);
            let e = match rng.gen_range(0..3) {
                0 => Expr::int(rng.gen_range(-3..=4)),
                1 => Expr::rational(rng.gen_range(-3..=3), rng.gen_range(2..=3)),
                _ => sub(rng, s),
            };
            b.checked_pow(e).unwrap_or_else(|_| Expr::zero())
        }
        3 => match rng.gen_range(0..3) {
            0 => sin(&sub(rng, s)),
            1 => cos(&sub(rng, s)),
            _ => exp(&sub(rng, s)),
        },
        4 => {
            let name = ["log", "gamma", "zeta"][rng.gen_range(0..3)];
            apply_named(name, vec![sub(rng, s)]).unwrap_or_else(|_| Expr::one())
        }
        5 => apply_named("psi", vec![Expr::int(rng.gen_range(0..3)), s.symbol("x")]).unwrap(),
        6 => {
            let a = sub(rng, s);
            a.checked_div(sub(rng, s)).unwrap_or(a)
        }
        _ => {
            let a = sub(rng, s);
            build_add([a, sub(rng, s)])
        }
    }
}

/// Prints `cases` random expressions and reads each back in one session.
pub fn run(cases: u32) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let mut session = Session::new();
    for case in 0..cases {
        let e = gen_top(&mut rng, &mut session);
        let text = e.to_string();
        let back = session.eval_str(&text).map_err(|err| format!("case {case}: {text}: {err}"))?;
        if compare(&back, &e) != std::cmp::Ordering::Equal {
            return Err(format!("case {case}: {text} reparsed as {back}"));
        }
    }
    Ok(())
}
