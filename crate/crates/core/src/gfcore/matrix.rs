use std::fmt;
use std::ops::{Index, IndexMut};

use super::{Poly, RatFun};
use crate::{Error, Result};

/// Dense matrix of rational functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RFMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFun>,
}

impl RFMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RFMatrix { rows, cols, data: vec![RatFun::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RFMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = RatFun::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFun>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(RFMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn column(v: Vec<RatFun>) -> Self {
        RFMatrix { rows: v.len(), cols: 1, data: v }
    }

    pub fn row(v: Vec<RatFun>) -> Self {
        RFMatrix { rows: 1, cols: v.len(), data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn map(&self, f: impl Fn(&RatFun) -> RatFun) -> RFMatrix {
        RFMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&RatFun) -> Result<RatFun>) -> Result<RFMatrix> {
        Ok(RFMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn transpose(&self) -> RFMatrix {
        let mut m = RFMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Sub-matrix of the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> RFMatrix {
        let mut m = RFMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn add(&self, o: &RFMatrix) -> Result<RFMatrix> {
        self.same_shape(o)?;
        Ok(RFMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &RFMatrix) -> Result<RFMatrix> {
        self.same_shape(o)?;
        Ok(RFMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, o: &RFMatrix) -> Result<RFMatrix> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut m = RFMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = RatFun::zero();
                for l in 0..self.cols {
                    let (a, b) = (&self[(i, l)], &o[(l, j)]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                m[(i, j)] = acc;
            }
        }
        Ok(m)
    }

    fn same_shape(&self, o: &RFMatrix) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    /// Solves `self * X = rhs` by fraction-free Gauss-Jordan elimination.
    pub fn solve(&self, rhs: &RFMatrix) -> Result<RFMatrix> {
        let n = self.rows;
        if self.cols != n {
            return Err(Error::Dimension(format!("{}x{} is not square", self.rows, self.cols)));
        }
        if rhs.rows != n {
            return Err(Error::Dimension("right-hand side row count".into()));
        }
        let m = rhs.cols;
        let w = n + m;
        // clear denominators row by row
        let mut a: Vec<Vec<Poly>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut l = Poly::one();
            for j in 0..n {
                l = lcm(&l, self[(i, j)].den());
            }
            for j in 0..m {
                l = lcm(&l, rhs[(i, j)].den());
            }
            let mut row = Vec::with_capacity(w);
            for j in 0..w {
                let e = if j < n { &self[(i, j)] } else { &rhs[(i, j - n)] };
                let f = l.exact_div(e.den())?.expect("lcm is a multiple");
                row.push(e.num() * &f);
            }
            a.push(row);
        }
        let mut prev = Poly::one();
        for k in 0..n {
            // sparsest nonzero pivot
            let p = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| a[i][k].len())
                .ok_or(Error::SingularMatrix)?;
            a.swap(k, p);
            let piv = a[k][k].clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let mut v = &piv * &a[i][j];
                    if !f.is_zero() && !a[k][j].is_zero() {
                        v = &v - &(&f * &a[k][j]);
                    }
                    a[i][j] = if prev.is_one() {
                        v
                    } else {
                        v.exact_div(&prev)?.ok_or_else(|| Error::Dimension("inexact Bareiss step".into()))?
                    };
                }
                a[i][k] = Poly::zero();
            }
            if k + 1 < n {
                // rows above k were divided with the previous pivot too, keep them consistent
                prev = piv;
            }
        }
        let mut x = RFMatrix::zeros(n, m);
        for i in 0..n {
            for j in 0..m {
                x[(i, j)] = RatFun::new(a[i][n + j].clone(), a[i][i].clone())?;
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<RFMatrix> {
        self.solve(&RFMatrix::identity(self.rows))
    }

    /// Applies `f` to the polynomial data of each entry, used for substitutions.
    pub fn at_t(&self, a: &super::Rational) -> Result<RFMatrix> {
        self.try_map(|e| e.at_t(a))
    }
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    if b.is_one() {
        return a.clone();
    }
    if a.is_one() {
        return b.normalized();
    }
    let g = a.gcd(b);
    (a * b).exact_div(&g).unwrap().expect("gcd divides product").normalized()
}

impl Index<(usize, usize)> for RFMatrix {
    type Output = RatFun;
    fn index(&self, (i, j): (usize, usize)) -> &RatFun {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RFMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RatFun {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[ {} ]", row.join(" | "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfcore::rat;

    fn rf(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn identity_inverse() {
        let i = RFMatrix::identity(3);
        assert_eq!(i.inverse().unwrap(), i);
    }

    #[test]
    fn one_by_one() {
        let m = RFMatrix::from_rows(vec![vec![rf("1 - 1/2*z")]]).unwrap();
        assert_eq!(m.inverse().unwrap()[(0, 0)], rf("(1) / (1 - 1/2*z)"));
    }

    #[test]
    fn inverse_is_exact() {
        let m = RFMatrix::from_rows(vec![
            vec![rf("1 - z*t"), rf("(z) / (1 + t)"), rf("1/3*z^2")],
            vec![rf("-1/2*z"), rf("1"), rf("(t) / (1 - z)")],
            vec![rf("z^3*t"), rf("-z"), rf("1 - 1/4*z^2")],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RFMatrix::identity(3));
        assert_eq!(inv.mul(&m).unwrap(), RFMatrix::identity(3));
    }

    #[test]
    fn pivoting_and_singular() {
        let m = RFMatrix::from_rows(vec![vec![rf("0"), rf("z")], vec![rf("1"), rf("t")]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RFMatrix::identity(2));
        let s = RFMatrix::from_rows(vec![vec![rf("z"), rf("2*z")], vec![rf("t"), rf("2*t")]]).unwrap();
        assert_eq!(s.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn scalar_entries() {
        let m = RFMatrix::from_rows(vec![
            vec![RatFun::constant(rat(2, 1)), RatFun::constant(rat(1, 1))],
            vec![RatFun::constant(rat(1, 1)), RatFun::constant(rat(3, 1))],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(inv[(0, 0)], RatFun::constant(rat(3, 5)));
        assert_eq!(inv[(0, 1)], RatFun::constant(rat(-1, 5)));
    }
}
