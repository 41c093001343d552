use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{build_add, build_mul, build_power, Expr};
use crate::error::Result;

impl Expr {
    /// `self^e`; panics on an exact zero base with a negative exponent.
    pub fn pow(&self, e: impl Into<Expr>) -> Expr {
        self.checked_pow(e).expect("zero raised to a negative power")
    }

    pub fn checked_pow(&self, e: impl Into<Expr>) -> Result<Expr> {
        build_power(self.clone(), e.into())
    }

    pub fn checked_div(&self, rhs: impl Into<Expr>) -> Result<Expr> {
        let inv = build_power(rhs.into(), Expr::int(-1))?;
        Ok(build_mul([self.clone(), inv]))
    }

    pub fn sqrt(&self) -> Expr {
        self.pow(Expr::rational(1, 2))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Expr> for Expr {
            type Output = Expr;
            fn $method(self, rhs: &Expr) -> Expr {
                $body(&self, rhs)
            }
        }
        impl $tr<Expr> for &Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                $body(self, &rhs)
            }
        }
        impl $tr<&Expr> for &Expr {
            type Output = Expr;
            fn $method(self, rhs: &Expr) -> Expr {
                $body(self, rhs)
            }
        }
        impl $tr<i64> for Expr {
            type Output = Expr;
            fn $method(self, rhs: i64) -> Expr {
                $body(&self, &Expr::int(rhs))
            }
        }
        impl $tr<i64> for &Expr {
            type Output = Expr;
            fn $method(self, rhs: i64) -> Expr {
                $body(self, &Expr::int(rhs))
            }
        }
        impl $tr<Expr> for i64 {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                $body(&Expr::int(self), &rhs)
            }
        }
        impl $tr<&Expr> for i64 {
            type Output = Expr;
            fn $method(self, rhs: &Expr) -> Expr {
                $body(&Expr::int(self), rhs)
            }
        }
    };
}

fn add(a: &Expr, b: &Expr) -> Expr {
    build_add([a.clone(), b.clone()])
}

fn sub(a: &Expr, b: &Expr) -> Expr {
    build_add([a.clone(), build_mul([Expr::int(-1), b.clone()])])
}

fn mul(a: &Expr, b: &Expr) -> Expr {
    build_mul([a.clone(), b.clone()])
}

fn div(a: &Expr, b: &Expr) -> Expr {
    a.checked_div(b).expect("division by zero")
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        build_mul([Expr::int(-1), self])
    }
}

impl Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        build_mul([Expr::int(-1), self.clone()])
    }
}
