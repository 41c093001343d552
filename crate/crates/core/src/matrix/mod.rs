//! Dense matrices of expressions.

#![allow(clippy::needless_range_loop)]

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::expr::{build_add, build_mul, expand, subs_pairs, Expr};
use crate::num::Number;
use crate::poly::{coeff, collect, degree, normal};

#[derive(Clone, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Expr>,
}

impl Matrix {
    /// A `rows x cols` matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Expr>) -> Result<Matrix> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Expr>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Expr) -> Result<Matrix> {
        Matrix::new(rows, cols, (0..rows * cols).map(|k| f(k / cols, k % cols)).collect())
    }

    pub fn identity(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| Expr::int((i == j) as i64)).expect("n > 0")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Expr] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Expr {
        &self.entries[i * self.cols + j]
    }

    fn square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("{}x{} matrix is not square", self.rows, self.cols)));
        }
        Ok(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone()).unwrap()
    }

    pub fn add(&self, o: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::Shape("matrix sizes differ".into()));
        }
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + o.get(i, j))
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::Shape(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        Matrix::from_fn(self.rows, o.cols, |i, j| build_add((0..self.cols).map(|k| build_mul([self.get(i, k).clone(), o.get(k, j).clone()]))))
    }

    pub fn scale(&self, c: &Expr) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| build_mul([c.clone(), self.get(i, j).clone()])).unwrap()
    }

    /// Every entry through `f`.
    pub fn map(&self, f: impl FnMut(&Expr) -> Result<Expr>) -> Result<Matrix> {
        Matrix::new(self.rows, self.cols, self.entries.iter().map(f).collect::<Result<_>>()?)
    }

    fn is_numeric(&self) -> bool {
        self.entries.iter().all(|e| e.as_number().is_some_and(|n| n.is_exact()))
    }

    fn number_rows(&self) -> Vec<Vec<Number>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).as_number().unwrap().clone()).collect()).collect()
    }

    /// Exact determinant.
    pub fn det(&self) -> Result<Expr> {
        let n = self.square()?;
        if self.is_numeric() {
            return Ok(Expr::num(det_numeric(self.number_rows())));
        }
        let zeros = self.entries.iter().filter(|e| e.is_zero()).count();
        if n <= 3 || 2 * zeros >= n * n {
            return normal(&self.cofactor_det()?);
        }
        normal(&bareiss(self)?)
    }

    /// Minor expansion down the rows, memoized on the set of columns left.
    fn cofactor_det(&self) -> Result<Expr> {
        let n = self.rows;
        let mut memo: HashMap<Vec<usize>, Expr> = HashMap::new();
        self.minor_det(0, &(0..n).collect::<Vec<_>>(), &mut memo)
    }

    fn minor_det(&self, row: usize, cols: &[usize], memo: &mut HashMap<Vec<usize>, Expr>) -> Result<Expr> {
        if cols.len() == 1 {
            return Ok(self.get(row, cols[0]).clone());
        }
        if let Some(d) = memo.get(cols) {
            return Ok(d.clone());
        }
        let mut terms = Vec::new();
        for (k, &j) in cols.iter().enumerate() {
            let a = self.get(row, j);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            let sub = self.minor_det(row + 1, &rest, memo)?;
            if !sub.is_zero() {
                terms.push(build_mul([Expr::int(if k % 2 == 0 { 1 } else { -1 }), a.clone(), sub]));
            }
        }
        let d = expand(&build_add(terms))?;
        memo.insert(cols.to_vec(), d.clone());
        Ok(d)
    }

    /// Exact inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.square()?;
        if self.is_numeric() {
            let inv = inverse_numeric(self.number_rows()).ok_or(Error::Singular)?;
            return Matrix::new(n, n, inv.into_iter().flatten().map(Expr::num).collect());
        }
        let mut a: Vec<Vec<Expr>> = (0..n)
            .map(|i| (0..2 * n).map(|j| if j < n { self.get(i, j).clone() } else { Expr::int((j - n == i) as i64) }).collect())
            .collect();
        for col in 0..n {
            let mut pivot = None;
            for r in col..n {
                let v = normal(&a[r][col])?;
                a[r][col] = v;
                if !a[r][col].is_zero() {
                    pivot = Some(r);
                    break;
                }
            }
            let p = pivot.ok_or(Error::Singular)?;
            a.swap(col, p);
            let inv = normal(&(Expr::one() / &a[col][col]))?;
            for j in 0..2 * n {
                a[col][j] = normal(&(&a[col][j] * &inv))?;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..2 * n {
                    if !a[col][j].is_zero() {
                        a[r][j] = normal(&(&a[r][j] - &f * &a[col][j]))?;
                    }
                }
            }
        }
        Matrix::new(n, n, a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect())
    }

    /// `det(self - lambda I)`, expanded and collected in `lambda`.
    pub fn charpoly(&self, lambda: &Expr) -> Result<Expr> {
        let n = self.square()?;
        if !lambda.is_symbol() {
            return Err(Error::Domain(format!("{lambda} is not a symbol")));
        }
        if self.entries.iter().any(|e| e.has(lambda)) {
            return Err(Error::Domain(format!("{lambda} occurs in the matrix")));
        }
        let c = berkowitz(self)?;
        // c holds det(lambda I - A) from the leading coefficient down
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let mut terms = Vec::with_capacity(n + 1);
        for (k, ck) in c.into_iter().enumerate() {
            let p = lambda.pow(Expr::int((n - k) as i64));
            terms.push(build_mul([Expr::int(sign), ck, p]));
        }
        collect(&expand(&build_add(terms))?, lambda)
    }
}

/// Gaussian elimination over the rationals.
fn det_numeric(mut a: Vec<Vec<Number>>) -> Number {
    let n = a.len();
    let mut det = Number::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Number::zero();
        };
        if p != col {
            a.swap(p, col);
            det = det.neg();
        }
        let piv = a[col][col].clone();
        det = det.mul(&piv);
        let inv = piv.recip().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul(&inv);
            for j in col..n {
                let v = a[r][j].sub(&f.mul(&a[col][j]));
                a[r][j] = v;
            }
        }
    }
    det
}

fn inverse_numeric(mut a: Vec<Vec<Number>>) -> Option<Vec<Vec<Number>>> {
    let n = a.len();
    for (i, row) in a.iter_mut().enumerate() {
        row.extend((0..n).map(|j| Number::from((i == j) as i64)));
    }
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        let inv = a[col][col].recip().ok()?;
        for v in a[col].iter_mut() {
            *v = v.mul(&inv);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..2 * n {
                let v = a[r][j].sub(&f.mul(&a[col][j]));
                a[r][j] = v;
            }
        }
    }
    Some(a.into_iter().map(|row| row.into_iter().skip(n).collect()).collect())
}

/// Fraction-free elimination; every division is exact and done by `normal`.
fn bareiss(m: &Matrix) -> Result<Expr> {
    let n = m.rows;
    let mut a: Vec<Vec<Expr>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut sign = 1;
    let mut prev = Expr::one();
    for k in 0..n - 1 {
        let mut p = None;
        for r in k..n {
            let v = normal(&a[r][k])?;
            a[r][k] = v;
            if !a[r][k].is_zero() {
                p = Some(r);
                break;
            }
        }
        let Some(p) = p else {
            return Ok(Expr::zero());
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = normal(&(t / &prev))?;
            }
            a[i][k] = Expr::zero();
        }
        prev = a[k][k].clone();
    }
    Ok(build_mul([Expr::int(sign), a[n - 1][n - 1].clone()]))
}

/// Coefficients of `det(x I - A)`, leading first, without divisions.
fn berkowitz(m: &Matrix) -> Result<Vec<Expr>> {
    let n = m.rows;
    let mul = |a: &Expr, b: &Expr| -> Result<Expr> {
        if a.is_zero() || b.is_zero() {
            return Ok(Expr::zero());
        }
        expand(&build_mul([a.clone(), b.clone()]))
    };
    let mut v = vec![Expr::one(), -m.get(n - 1, n - 1)];
    for k in (0..n - 1).rev() {
        let size = n - 1 - k;
        // t = (1, -a_kk, -R C, -R A1 C, ...)
        let mut t = vec![Expr::one(), -m.get(k, k)];
        let mut col: Vec<Expr> = (0..size).map(|i| m.get(k + 1 + i, k).clone()).collect();
        for step in 0..size {
            if step > 0 {
                let mut next = Vec::with_capacity(size);
                for i in 0..size {
                    let mut s = Vec::with_capacity(size);
                    for j in 0..size {
                        s.push(mul(m.get(k + 1 + i, k + 1 + j), &col[j])?);
                    }
                    next.push(build_add(s));
                }
                col = next;
            }
            let mut s = Vec::with_capacity(size);
            for j in 0..size {
                s.push(mul(m.get(k, k + 1 + j), &col[j])?);
            }
            t.push(-build_add(s));
        }
        let mut nv = Vec::with_capacity(v.len() + 1);
        for i in 0..=v.len() {
            let mut s = Vec::new();
            for j in 0..v.len().min(i + 1) {
                s.push(mul(&t[i - j], &v[j])?);
            }
            nv.push(build_add(s));
        }
        v = nv;
    }
    Ok(v)
}

/// Solves the linear system `eqs` (relations `lhs == rhs`) for `vars`.
pub fn solve_linear(eqs: &[Expr], vars: &[Expr]) -> Result<Vec<Expr>> {
    for v in vars {
        if !v.is_symbol() {
            return Err(Error::Domain(format!("{v} is not a symbol")));
        }
    }
    let n = vars.len();
    let mut rows = Vec::with_capacity(eqs.len());
    for eq in eqs {
        let Some((l, crate::expr::RelOp::Eq, r)) = eq.as_relational() else {
            return Err(Error::Domain(format!("{eq} is not an equation")));
        };
        let d = expand(&(l - r))?;
        let mut row = Vec::with_capacity(n + 1);
        for v in vars {
            if degree(&d, v)? > 1 || crate::poly::ldegree(&d, v)? < 0 {
                return Err(Error::Domain(format!("{eq} is not linear in {v}")));
            }
            let c = coeff(&d, v, 1)?;
            if vars.iter().any(|w| c.has(w)) {
                return Err(Error::Domain(format!("{eq} is not linear")));
            }
            row.push(c);
        }
        let pairs: Vec<(Expr, Expr)> = vars.iter().map(|v| (v.clone(), Expr::zero())).collect();
        row.push(-subs_pairs(&d, &pairs)?);
        rows.push(row);
    }
    let m = rows.len();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..n {
        let mut p = None;
        for r in pivot_row..m {
            let v = normal(&rows[r][col])?;
            rows[r][col] = v;
            if !rows[r][col].is_zero() {
                p = Some(r);
                break;
            }
        }
        let Some(p) = p else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = normal(&(Expr::one() / &rows[pivot_row][col]))?;
        for j in col..=n {
            rows[pivot_row][j] = normal(&(&rows[pivot_row][j] * &inv))?;
        }
        for r in 0..m {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for j in col..=n {
                rows[r][j] = normal(&(&rows[r][j] - &f * &rows[pivot_row][j]))?;
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    for row in rows.iter().skip(pivot_row) {
        if !normal(&row[n])?.is_zero() {
            return Err(Error::NoUniqueSolution("inconsistent system".into()));
        }
    }
    if pivots.len() < n {
        return Err(Error::NoUniqueSolution("underdetermined system".into()));
    }
    Ok(vars.iter().enumerate().map(|(i, v)| Expr::equation(v, &rows[i][n])).collect())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::symbol;

    fn hilbert(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |i, j| Expr::rational(1, (i + j + 1) as i64)).unwrap()
    }

    #[test]
    fn determinants() {
        assert_eq!(hilbert(3).det().unwrap(), Expr::rational(1, 2160));
        assert_eq!(Matrix::identity(5).det().unwrap(), Expr::one());
        let x = symbol("x");
        let m = Matrix::from_rows(vec![vec![Expr::one(), x.clone()], vec![-&x, Expr::one()]]).unwrap();
        assert_eq!(m.det().unwrap(), x.pow(2) + 1);
        assert!(Matrix::new(2, 3, vec![Expr::one(); 6]).unwrap().det().is_err());
    }

    #[test]
    fn symbolic_bareiss_agrees_with_cofactor() {
        let s: Vec<Expr> = (0..4).map(|i| symbol(&format!("s{i}"))).collect();
        let m = Matrix::from_fn(4, 4, |i, j| if i == j { s[i].clone() } else { Expr::int((i * 4 + j) as i64 % 5 + 1) }).unwrap();
        let b = normal(&bareiss(&m).unwrap()).unwrap();
        let c = normal(&m.cofactor_det().unwrap()).unwrap();
        assert_eq!(b, c);
    }

    #[test]
    fn inverses() {
        let x = symbol("x");
        let m = Matrix::from_rows(vec![vec![Expr::one(), x.clone()], vec![-&x, Expr::one()]]).unwrap();
        let inv = m.inverse().unwrap();
        let d = Expr::one() / (x.pow(2) + 1);
        assert_eq!(*inv.get(0, 0), d);
        assert_eq!(*inv.get(0, 1), normal(&(-&x * &d)).unwrap());
        let h = hilbert(4).inverse().unwrap();
        assert!(h.entries().iter().all(|e| e.as_number().is_some_and(|n| n.is_integer())));
        let z = Matrix::from_rows(vec![vec![Expr::one(), Expr::int(2)], vec![Expr::int(2), Expr::int(4)]]).unwrap();
        assert!(matches!(z.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn characteristic_polynomial() {
        let l = symbol("l");
        let m = Matrix::from_rows(vec![vec![Expr::int(1), Expr::int(2)], vec![Expr::int(3), Expr::int(4)]]).unwrap();
        assert_eq!(m.charpoly(&l).unwrap(), l.pow(2) - 5 * &l - 2);
        let z = Matrix::from_fn(3, 3, |_, _| Expr::zero()).unwrap();
        assert_eq!(z.charpoly(&l).unwrap(), -l.pow(3));
        assert!(m.scale(&l).charpoly(&l).is_err());
    }

    #[test]
    fn linear_systems() {
        let (x, y) = (symbol("x"), symbol("y"));
        let sol = solve_linear(&[Expr::equation(&(&x + &y), &Expr::int(3)), Expr::equation(&(&x - &y), &Expr::one())], &[x.clone(), y.clone()]).unwrap();
        assert_eq!(sol, vec![Expr::equation(&x, &Expr::int(2)), Expr::equation(&y, &Expr::one())]);
        let (a, b) = (symbol("a"), symbol("b"));
        let s = solve_linear(&[Expr::equation(&(&a * &x), &b)], std::slice::from_ref(&x)).unwrap();
        assert_eq!(s, vec![Expr::equation(&x, &(&b / &a))]);
        assert!(matches!(
            solve_linear(&[Expr::equation(&(&x + &y), &Expr::one())], &[x.clone(), y.clone()]),
            Err(Error::NoUniqueSolution(_))
        ));
        assert!(solve_linear(&[Expr::equation(&(&x * &x), &Expr::one())], std::slice::from_ref(&x)).is_err());
    }
}
