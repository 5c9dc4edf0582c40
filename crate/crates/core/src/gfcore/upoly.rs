use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rat, Rational};
use crate::{Error, Result};

/// Dense univariate polynomial over the rationals, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    c: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    pub fn constant(a: Rational) -> Self {
        UPoly::new(vec![a])
    }

    /// `a x^d`
    pub fn monomial(a: Rational, d: usize) -> Self {
        let mut c = vec![Rational::zero(); d + 1];
        c[d] = a;
        UPoly::new(c)
    }

    pub fn x() -> Self {
        UPoly::monomial(Rational::one(), 1)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        UPoly::new(c.iter().map(|&a| rat(a, 1)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.c.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.c.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, a: &Rational) -> UPoly {
        if a.is_zero() {
            return UPoly::zero();
        }
        UPoly::new(self.c.iter().map(|x| x * a).collect())
    }

    pub fn shift(&self, d: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rational::zero(); d];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.lead().recip())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in self.c.iter().rev() {
            acc = acc * x + a.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(self.c.iter().enumerate().skip(1).map(|(i, a)| a * rat(i as i64, 1)).collect())
    }

    /// Euclidean division: `(q, r)` with `self = q*d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.lead().recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let f = &r[i + dd] * &lead_inv;
            if !f.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[i + j] -= &f * b;
                }
            }
            q[i] = f;
        }
        r.truncate(dd);
        Ok((UPoly::new(q), UPoly::new(r)))
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &UPoly) -> Result<Option<UPoly>> {
        let (q, r) = self.div_rem(d)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Sturm sequence `p, p', -rem(p_{i-1}, p_i), ...`.
    pub fn sturm_sequence(&self) -> Vec<UPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while let Some(last) = seq.last() {
            if last.is_zero() {
                seq.pop();
                break;
            }
            let prev = &seq[seq.len() - 2];
            let r = prev.div_rem(last).expect("nonzero").1;
            if r.is_zero() {
                break;
            }
            // keep sign, drop size
            let scale = r.c.iter().map(|x| x.abs()).max().unwrap();
            seq.push(-r.scale(&scale.recip()));
        }
        seq
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_roots(seq: &[UPoly], lo: &Rational, hi: &Rational) -> usize {
        let changes = |x: &Rational| {
            let mut last = 0i8;
            let mut n = 0usize;
            for p in seq {
                let v = p.eval(x);
                let s = if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
                if s != 0 {
                    if last != 0 && s != last {
                        n += 1;
                    }
                    last = s;
                }
            }
            n
        };
        changes(lo).saturating_sub(changes(hi))
    }

    /// Smallest real root in `(lo, hi)`, isolated with Sturm sequences and refined by exact
    /// bisection until the bracket is narrower than `tol`.
    pub fn smallest_root_in(&self, lo: &Rational, hi: &Rational, tol: f64) -> Result<f64> {
        let nofound = || Error::NoRoot { lo: lo.to_f64().unwrap_or(0.0), hi: hi.to_f64().unwrap_or(0.0) };
        if self.is_zero() {
            return Err(nofound());
        }
        // square-free part so Sturm counts are clean
        let g = self.gcd(&self.derivative());
        let p = if g.degree().unwrap_or(0) > 0 { self.div_rem(&g)?.0 } else { self.clone() };
        let seq = p.sturm_sequence();
        let (mut a, mut b) = (lo.clone(), hi.clone());
        if p.eval(&b).is_zero() {
            b = &b - (&b - &a) / rat(1 << 20, 1);
        }
        if UPoly::count_roots(&seq, &a, &b) == 0 {
            return Err(nofound());
        }
        // shrink to a bracket holding exactly the smallest root
        while UPoly::count_roots(&seq, &a, &b) > 1 {
            let mid = (&a + &b) / rat(2, 1);
            if UPoly::count_roots(&seq, &a, &mid) >= 1 {
                b = mid;
            } else {
                a = mid;
            }
        }
        let tol = Rational::from_float(tol).unwrap_or_else(|| rat(1, 1 << 50));
        let mut sa = p.eval(&a).signum();
        while &b - &a > tol {
            let mid = (&a + &b) / rat(2, 1);
            let v = p.eval(&mid);
            if v.is_zero() {
                return Ok(mid.to_f64().unwrap());
            }
            if v.signum() == sa {
                a = mid;
                sa = v.signum();
            } else {
                b = mid;
            }
        }
        Ok(((&a + &b) / rat(2, 1)).to_f64().unwrap())
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }
}

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else { "+" };
            if first {
                if a.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let m = a.abs();
            match (i, m.is_one()) {
                (0, _) => write!(f, "{m}")?,
                (_, true) => {}
                _ => write!(f, "{m}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_roundtrip() {
        let a = UPoly::from_ints(&[1, 2, 3, 4, 5]);
        let d = UPoly::from_ints(&[-1, 0, 2]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_of_products() {
        let f = UPoly::from_ints(&[1, 1]);
        let g = UPoly::from_ints(&[-2, 0, 1]);
        let h = UPoly::from_ints(&[3, 1]);
        let a = &f * &g;
        let b = &f * &h;
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn tribonacci_root() {
        // 1 - z/2 - z^2/4 - z^3/8
        let p = UPoly::new(vec![rat(1, 1), rat(-1, 2), rat(-1, 4), rat(-1, 8)]);
        let r = p.smallest_root_in(&rat(0, 1), &rat(4, 1), 1e-15).unwrap();
        assert!((r - 1.0873780254).abs() < 1e-9, "{r}");
        let t3 = 2.0 / r;
        assert!((t3 * t3 * t3 - t3 * t3 - t3 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x-3)
        let p = UPoly::from_ints(&[-6, 11, -6, 1]);
        let s = p.sturm_sequence();
        assert_eq!(UPoly::count_roots(&s, &rat(0, 1), &rat(10, 1)), 3);
        assert_eq!(UPoly::count_roots(&s, &rat(3, 2), &rat(10, 1)), 2);
        let r = p.smallest_root_in(&rat(3, 2), &rat(10, 1), 1e-15).unwrap();
        assert!((r - 2.0).abs() < 1e-14);
        assert!(p.smallest_root_in(&rat(4, 1), &rat(10, 1), 1e-15).is_err());
    }

    #[test]
    fn double_root() {
        let p = UPoly::from_ints(&[4, -4, 1]);
        let r = p.smallest_root_in(&rat(0, 1), &rat(5, 1), 1e-15).unwrap();
        assert!((r - 2.0).abs() < 1e-14);
    }
}
