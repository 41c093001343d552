//! Immutable, shared expression trees in canonical form.

mod construct;
mod diff;
mod evalf;
mod expand;
mod ops;
mod order;
mod print;
mod subs;
mod symbol;

use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rustc_hash::FxHasher;

use crate::func::FunctionApp;
use crate::matrix::Matrix;
use crate::num::Number;
use crate::series::PSeries;

pub use construct::{build_add, build_mul, build_power};
pub(crate) use construct::{add_from_pairs, push_add_term};
pub use diff::diff;
pub use evalf::evalf;
pub use expand::expand;
pub use order::compare;
pub use subs::{subs, subs_pairs};
pub use symbol::{catalan, constant, euler, fresh_symbol, pi, symbol, ConstValue, Constant, Symbol};

/// Relational operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl RelOp {
    pub fn as_str(self) -> &'static str {
        match self {
            RelOp::Eq => "==",
            RelOp::Ne => "!=",
            RelOp::Lt => "<",
            RelOp::Le => "<=",
            RelOp::Gt => ">",
            RelOp::Ge => ">=",
        }
    }
}

/// Sum or product container: `overall` plus `(rest, key)` pairs.
///
/// In a sum the value is `overall + sum(key * rest)`; in a product it is
/// `overall * prod(rest ^ key)`.
#[derive(Clone, Debug)]
pub struct PairSeq {
    pub(crate) overall: Number,
    pub(crate) pairs: Vec<(Expr, Number)>,
}

impl PairSeq {
    pub fn overall(&self) -> &Number {
        &self.overall
    }

    pub fn pairs(&self) -> &[(Expr, Number)] {
        &self.pairs
    }
}

#[derive(Clone, Debug)]
pub enum Kind {
    Numeric(Number),
    Symbol(Symbol),
    Constant(Constant),
    Add(PairSeq),
    Mul(PairSeq),
    Power(Expr, Expr),
    Function(FunctionApp),
    Series(PSeries),
    List(Vec<Expr>),
    Relational(Expr, RelOp, Expr),
    Matrix(Matrix),
}

impl Kind {
    pub(crate) fn rank(&self) -> u8 {
        match self {
            Kind::Numeric(_) => 0,
            Kind::Symbol(_) => 1,
            Kind::Constant(_) => 2,
            Kind::Power(..) => 3,
            Kind::Mul(_) => 4,
            Kind::Add(_) => 5,
            Kind::Function(_) => 6,
            Kind::Series(_) => 7,
            Kind::List(_) => 8,
            Kind::Relational(..) => 9,
            Kind::Matrix(_) => 10,
        }
    }
}

#[derive(Debug)]
struct Node {
    kind: Kind,
    hash: u64,
}

/// Handle to an immutable expression node. Cloning is a reference-count bump.
#[derive(Clone, Debug)]
pub struct Expr(Arc<Node>);

fn structural_hash(kind: &Kind) -> u64 {
    let mut h = FxHasher::default();
    kind.rank().hash(&mut h);
    match kind {
        Kind::Numeric(n) => n.hash(&mut h),
        Kind::Symbol(s) => s.serial().hash(&mut h),
        Kind::Constant(c) => c.serial().hash(&mut h),
        Kind::Add(ps) | Kind::Mul(ps) => {
            ps.overall.hash(&mut h);
            for (r, k) in &ps.pairs {
                r.hash_value().hash(&mut h);
                k.hash(&mut h);
            }
        }
        Kind::Power(b, e) => {
            b.hash_value().hash(&mut h);
            e.hash_value().hash(&mut h);
        }
        Kind::Function(f) => {
            f.def().serial().hash(&mut h);
            for a in f.args() {
                a.hash_value().hash(&mut h);
            }
        }
        Kind::Series(s) => {
            s.var().hash_value().hash(&mut h);
            s.point().hash_value().hash(&mut h);
            for (c, e) in s.terms() {
                c.hash_value().hash(&mut h);
                e.hash(&mut h);
            }
            s.order().hash(&mut h);
        }
        Kind::List(items) => {
            items.len().hash(&mut h);
            for a in items {
                a.hash_value().hash(&mut h);
            }
        }
        Kind::Relational(l, op, r) => {
            l.hash_value().hash(&mut h);
            op.hash(&mut h);
            r.hash_value().hash(&mut h);
        }
        Kind::Matrix(m) => {
            m.rows().hash(&mut h);
            m.cols().hash(&mut h);
            for a in m.entries() {
                a.hash_value().hash(&mut h);
            }
        }
    }
    h.finish()
}

impl Expr {
    /// Wraps a node without canonicalization; callers guarantee canonical form.
    pub(crate) fn from_kind(kind: Kind) -> Expr {
        let hash = structural_hash(&kind);
        Expr(Arc::new(Node { kind, hash }))
    }

    pub fn kind(&self) -> &Kind {
        &self.0.kind
    }

    /// Cached 64-bit structural hash.
    pub fn hash_value(&self) -> u64 {
        self.0.hash
    }

    pub fn ptr_eq(&self, other: &Expr) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn num(n: Number) -> Expr {
        Expr::from_kind(Kind::Numeric(n))
    }

    pub fn int(n: i64) -> Expr {
        Expr::num(Number::from(n))
    }

    pub fn rational(n: i64, d: i64) -> Expr {
        Expr::num(Number::rational(n, d))
    }

    pub fn zero() -> Expr {
        Expr::int(0)
    }

    pub fn one() -> Expr {
        Expr::int(1)
    }

    pub fn imaginary_unit() -> Expr {
        Expr::num(Number::imaginary_unit())
    }

    pub fn list(items: Vec<Expr>) -> Expr {
        Expr::from_kind(Kind::List(items))
    }

    pub fn relational(lhs: Expr, op: RelOp, rhs: Expr) -> Expr {
        Expr::from_kind(Kind::Relational(lhs, op, rhs))
    }

    /// `lhs == rhs` as a relation.
    pub fn equation(lhs: &Expr, rhs: &Expr) -> Expr {
        Expr::relational(lhs.clone(), RelOp::Eq, rhs.clone())
    }

    pub fn as_number(&self) -> Option<&Number> {
        match self.kind() {
            Kind::Numeric(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_symbol(&self) -> Option<&Symbol> {
        match self.kind() {
            Kind::Symbol(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Expr]> {
        match self.kind() {
            Kind::List(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_series(&self) -> Option<&PSeries> {
        match self.kind() {
            Kind::Series(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&Matrix> {
        match self.kind() {
            Kind::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_relational(&self) -> Option<(&Expr, RelOp, &Expr)> {
        match self.kind() {
            Kind::Relational(l, op, r) => Some((l, *op, r)),
            _ => None,
        }
    }

    pub fn is_numeric(&self) -> bool {
        matches!(self.kind(), Kind::Numeric(_))
    }

    pub fn is_symbol(&self) -> bool {
        matches!(self.kind(), Kind::Symbol(_))
    }

    /// Exact or float zero.
    pub fn is_zero(&self) -> bool {
        self.as_number().is_some_and(|n| n.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.as_number().is_some_and(|n| n.is_one())
    }

    /// Immediate operands, in canonical order.
    pub fn children(&self) -> Vec<Expr> {
        match self.kind() {
            Kind::Numeric(_) | Kind::Symbol(_) | Kind::Constant(_) => Vec::new(),
            Kind::Add(ps) => ps.pairs.iter().map(|(r, k)| build_mul([r.clone(), Expr::num(k.clone())])).collect(),
            Kind::Mul(ps) => ps
                .pairs
                .iter()
                .map(|(r, k)| build_power(r.clone(), Expr::num(k.clone())).expect("canonical pair"))
                .collect(),
            Kind::Power(b, e) => vec![b.clone(), e.clone()],
            Kind::Function(f) => f.args().to_vec(),
            Kind::Series(s) => s.terms().iter().map(|(c, _)| c.clone()).collect(),
            Kind::List(v) => v.clone(),
            Kind::Relational(l, _, r) => vec![l.clone(), r.clone()],
            Kind::Matrix(m) => m.entries().to_vec(),
        }
    }

    /// Whether `sym` occurs anywhere in the tree.
    pub fn has(&self, sym: &Expr) -> bool {
        if self == sym {
            return true;
        }
        match self.kind() {
            Kind::Numeric(_) | Kind::Symbol(_) | Kind::Constant(_) => false,
            Kind::Add(ps) | Kind::Mul(ps) => ps.pairs.iter().any(|(r, _)| r.has(sym)),
            Kind::Power(b, e) => b.has(sym) || e.has(sym),
            Kind::Function(f) => f.args().iter().any(|a| a.has(sym)),
            Kind::Series(s) => s.var().has(sym) || s.point().has(sym) || s.terms().iter().any(|(c, _)| c.has(sym)),
            Kind::List(v) => v.iter().any(|a| a.has(sym)),
            Kind::Relational(l, _, r) => l.has(sym) || r.has(sym),
            Kind::Matrix(m) => m.entries().iter().any(|a| a.has(sym)),
        }
    }

    /// Whether the tree contains no symbols (constants and numbers only).
    pub fn is_constant_expr(&self) -> bool {
        match self.kind() {
            Kind::Numeric(_) | Kind::Constant(_) => true,
            Kind::Symbol(_) => false,
            Kind::Add(ps) | Kind::Mul(ps) => ps.pairs.iter().all(|(r, _)| r.is_constant_expr()),
            Kind::Power(b, e) => b.is_constant_expr() && e.is_constant_expr(),
            Kind::Function(f) => f.args().iter().all(|a| a.is_constant_expr()),
            _ => false,
        }
    }
}

impl PartialEq for Expr {
    fn eq(&self, other: &Expr) -> bool {
        self.ptr_eq(other) || (self.hash_value() == other.hash_value() && compare(self, other).is_eq())
    }
}

impl Eq for Expr {}

impl PartialOrd for Expr {
    fn partial_cmp(&self, other: &Expr) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Expr {
    fn cmp(&self, other: &Expr) -> std::cmp::Ordering {
        compare(self, other)
    }
}

impl Hash for Expr {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.hash_value());
    }
}

impl From<Number> for Expr {
    fn from(n: Number) -> Expr {
        Expr::num(n)
    }
}

impl From<i64> for Expr {
    fn from(n: i64) -> Expr {
        Expr::int(n)
    }
}

impl From<&Expr> for Expr {
    fn from(e: &Expr) -> Expr {
        e.clone()
    }
}

/// Rebuilds `e` with every immediate operand passed through `f`.
pub(crate) fn map_children(e: &Expr, mut f: impl FnMut(&Expr) -> crate::Result<Expr>) -> crate::Result<Expr> {
    Ok(match e.kind() {
        Kind::Numeric(_) | Kind::Symbol(_) | Kind::Constant(_) => e.clone(),
        Kind::Add(ps) => {
            let mut terms = Vec::with_capacity(ps.pairs.len() + 1);
            terms.push(Expr::num(ps.overall.clone()));
            for (r, k) in &ps.pairs {
                terms.push(build_mul([f(r)?, Expr::num(k.clone())]));
            }
            build_add(terms)
        }
        Kind::Mul(ps) => {
            let mut factors = Vec::with_capacity(ps.pairs.len() + 1);
            factors.push(Expr::num(ps.overall.clone()));
            for (r, k) in &ps.pairs {
                factors.push(build_power(f(r)?, Expr::num(k.clone()))?);
            }
            build_mul(factors)
        }
        Kind::Power(b, x) => build_power(f(b)?, f(x)?)?,
        Kind::Function(app) => {
            let args = app.args().iter().map(&mut f).collect::<crate::Result<Vec<_>>>()?;
            crate::func::apply(app.def(), args)?
        }
        Kind::Series(s) => {
            let terms = s.terms().iter().map(|(c, k)| Ok((f(c)?, *k))).collect::<crate::Result<Vec<_>>>()?;
            Expr::series(PSeries::new(s.var().clone(), f(s.point())?, terms, s.order()))
        }
        Kind::List(v) => Expr::list(v.iter().map(&mut f).collect::<crate::Result<_>>()?),
        Kind::Relational(l, op, r) => Expr::relational(f(l)?, *op, f(r)?),
        Kind::Matrix(m) => {
            let entries = m.entries().iter().map(&mut f).collect::<crate::Result<Vec<_>>>()?;
            Expr::matrix(Matrix::new(m.rows(), m.cols(), entries)?)
        }
    })
}

impl Expr {
    pub fn series(s: PSeries) -> Expr {
        Expr::from_kind(Kind::Series(s))
    }

    pub fn matrix(m: Matrix) -> Expr {
        Expr::from_kind(Kind::Matrix(m))
    }
}
