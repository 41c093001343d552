use std::cmp::Ordering;

use super::{Expr, Kind, PairSeq};

/// Canonical total order: kind rank first, then fields recursively.
pub fn compare(a: &Expr, b: &Expr) -> Ordering {
    if a.ptr_eq(b) {
        return Ordering::Equal;
    }
    let (ka, kb) = (a.kind(), b.kind());
    let r = ka.rank().cmp(&kb.rank());
    if r != Ordering::Equal {
        return r;
    }
    match (ka, kb) {
        (Kind::Numeric(x), Kind::Numeric(y)) => x.canonical_cmp(y),
        (Kind::Symbol(x), Kind::Symbol(y)) => x.serial().cmp(&y.serial()),
        (Kind::Constant(x), Kind::Constant(y)) => x.serial().cmp(&y.serial()),
        (Kind::Add(x), Kind::Add(y)) | (Kind::Mul(x), Kind::Mul(y)) => cmp_pairseq(x, y),
        (Kind::Power(b1, e1), Kind::Power(b2, e2)) => compare(b1, b2).then_with(|| compare(e1, e2)),
        (Kind::Function(f), Kind::Function(g)) => f
            .def()
            .serial()
            .cmp(&g.def().serial())
            .then_with(|| cmp_seq(f.args(), g.args())),
        (Kind::Series(s), Kind::Series(t)) => compare(s.var(), t.var())
            .then_with(|| compare(s.point(), t.point()))
            .then_with(|| s.order().cmp(&t.order()))
            .then_with(|| s.terms().len().cmp(&t.terms().len()))
            .then_with(|| {
                for ((c1, e1), (c2, e2)) in s.terms().iter().zip(t.terms()) {
                    let o = e1.cmp(e2).then_with(|| compare(c1, c2));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            }),
        (Kind::List(x), Kind::List(y)) => cmp_seq(x, y),
        (Kind::Relational(l1, o1, r1), Kind::Relational(l2, o2, r2)) => {
            o1.cmp(o2).then_with(|| compare(l1, l2)).then_with(|| compare(r1, r2))
        }
        (Kind::Matrix(m), Kind::Matrix(n)) => m
            .rows()
            .cmp(&n.rows())
            .then_with(|| m.cols().cmp(&n.cols()))
            .then_with(|| cmp_seq(m.entries(), n.entries())),
        _ => unreachable!("equal ranks imply equal kinds"),
    }
}

fn cmp_seq(a: &[Expr], b: &[Expr]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            let o = compare(x, y);
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

fn cmp_pairseq(a: &PairSeq, b: &PairSeq) -> Ordering {
    let o = a.pairs.len().cmp(&b.pairs.len());
    if o != Ordering::Equal {
        return o;
    }
    for ((r1, k1), (r2, k2)) in a.pairs.iter().zip(&b.pairs) {
        let o = compare(r1, r2).then_with(|| k1.canonical_cmp(k2));
        if o != Ordering::Equal {
            return o;
        }
    }
    a.overall.canonical_cmp(&b.overall)
}
