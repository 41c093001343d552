//! Simultaneous replacement of symbols.

use super::{map_children, Expr, Kind, RelOp};
use crate::error::{Error, Result};

/// Replaces symbols according to `bindings`, each a relation `sym == value`.
///
/// All replacements happen at once, so `[x == y, y == x]` swaps.
pub fn subs(e: &Expr, bindings: &[Expr]) -> Result<Expr> {
    let mut pairs = Vec::with_capacity(bindings.len());
    for b in bindings {
        match b.as_relational() {
            Some((l, RelOp::Eq, r)) => pairs.push((l.clone(), r.clone())),
            _ => return Err(Error::UnsupportedPattern(format!("{b} is not an equation"))),
        }
    }
    subs_pairs(e, &pairs)
}

/// Like [`subs`] with `(symbol, value)` pairs.
pub fn subs_pairs(e: &Expr, pairs: &[(Expr, Expr)]) -> Result<Expr> {
    for (i, (l, _)) in pairs.iter().enumerate() {
        if !l.is_symbol() {
            return Err(Error::UnsupportedPattern(format!("cannot substitute for {l}")));
        }
        if pairs[..i].iter().any(|(p, _)| p == l) {
            return Err(Error::UnsupportedPattern(format!("{l} is bound twice")));
        }
    }
    if pairs.is_empty() {
        return Ok(e.clone());
    }
    walk(e, pairs)
}

fn walk(e: &Expr, pairs: &[(Expr, Expr)]) -> Result<Expr> {
    match e.kind() {
        Kind::Symbol(_) => Ok(pairs.iter().find(|(l, _)| l == e).map_or_else(|| e.clone(), |(_, r)| r.clone())),
        Kind::Numeric(_) | Kind::Constant(_) => Ok(e.clone()),
        Kind::Series(s) if pairs.iter().any(|(l, _)| l == s.var()) => walk(&s.to_expr(), pairs),
        _ if !pairs.iter().any(|(l, _)| e.has(l)) => Ok(e.clone()),
        _ => map_children(e, |c| walk(c, pairs)),
    }
}
