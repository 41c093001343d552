use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use super::{Expr, Kind};
use crate::num::Number;

static NEXT_SYMBOL: AtomicU64 = AtomicU64::new(0);
// 0..=2 are the built-in constants
static NEXT_CONSTANT: AtomicU64 = AtomicU64::new(3);

/// An indeterminate. Identity is the serial; the name is only for printing.
#[derive(Clone, Debug)]
pub struct Symbol {
    serial: u64,
    name: Arc<str>,
}

impl Symbol {
    pub fn serial(&self) -> u64 {
        self.serial
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

/// A fresh symbol printing as `name`.
pub fn symbol(name: &str) -> Expr {
    let serial = NEXT_SYMBOL.fetch_add(1, Ordering::Relaxed);
    Expr::from_kind(Kind::Symbol(Symbol { serial, name: name.into() }))
}

/// A fresh symbol named `symbolN` after its serial.
pub fn fresh_symbol() -> Expr {
    let serial = NEXT_SYMBOL.fetch_add(1, Ordering::Relaxed);
    let name = format!("symbol{serial}");
    Expr::from_kind(Kind::Symbol(Symbol { serial, name: name.into() }))
}

#[derive(Clone, Debug)]
pub enum ConstValue {
    Pi,
    Euler,
    Catalan,
    Fixed(Number),
}

/// A named number that evaluates only under `evalf`.
#[derive(Clone, Debug)]
pub struct Constant {
    serial: u64,
    name: Arc<str>,
    value: ConstValue,
}

impl Constant {
    pub fn serial(&self) -> u64 {
        self.serial
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn value(&self) -> &ConstValue {
        &self.value
    }
}

fn builtin(serial: u64, name: &str, value: ConstValue) -> Expr {
    Expr::from_kind(Kind::Constant(Constant { serial, name: name.into(), value }))
}

pub fn pi() -> Expr {
    builtin(0, "Pi", ConstValue::Pi)
}

pub fn euler() -> Expr {
    builtin(1, "Euler", ConstValue::Euler)
}

pub fn catalan() -> Expr {
    builtin(2, "Catalan", ConstValue::Catalan)
}

/// A user constant whose numeric value is `value`.
pub fn constant(name: &str, value: Number) -> Expr {
    let serial = NEXT_CONSTANT.fetch_add(1, Ordering::Relaxed);
    builtin(serial, name, ConstValue::Fixed(value))
}
