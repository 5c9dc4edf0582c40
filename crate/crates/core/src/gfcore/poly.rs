use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, Rational, UPoly};
use crate::{Error, Result};

/// Sparse polynomial in `z` and `t` over the rationals. Keys are `(deg_z, deg_t)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(a: Rational) -> Self {
        Poly::monomial(a, 0, 0)
    }

    /// `a z^i t^j`
    pub fn monomial(a: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !a.is_zero() {
            terms.insert((i, j), a);
        }
        Poly { terms }
    }

    pub fn z() -> Self {
        Poly::monomial(Rational::one(), 1, 0)
    }

    pub fn t() -> Self {
        Poly::monomial(Rational::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (k, a) in it {
            p.add_term(k, a);
        }
        p
    }

    /// Polynomial in `z` alone from a univariate one.
    pub fn from_upoly_z(u: &UPoly) -> Self {
        Poly::from_terms(u.coeffs().iter().enumerate().map(|(i, a)| ((i as u32, 0), a.clone())))
    }

    /// Polynomial in `t` alone from a univariate one.
    pub fn from_upoly_t(u: &UPoly) -> Self {
        Poly::from_terms(u.coeffs().iter().enumerate().map(|(i, a)| ((0, i as u32), a.clone())))
    }

    fn add_term(&mut self, k: (u32, u32), a: Rational) {
        if a.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Rational::zero);
        *e += a;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|a| a.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_z(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Leading term in lex order `(z, t)`.
    pub fn lead(&self) -> Option<((u32, u32), &Rational)> {
        self.terms.iter().next_back().map(|(k, a)| (*k, a))
    }

    /// Lowest term in lex order `(z, t)`.
    pub fn low(&self) -> Option<((u32, u32), &Rational)> {
        self.terms.iter().next().map(|(k, a)| (*k, a))
    }

    pub fn scale(&self, a: &Rational) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(k, x)| (*k, x * a)).collect() }
    }

    pub fn mul_monomial(&self, a: &Rational, i: u32, j: u32) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(k, x)| ((k.0 + i, k.1 + j), x * a)).collect() }
    }

    pub fn eval(&self, z: &Rational, t: &Rational) -> Rational {
        // Horner in z over Horner in t
        self.as_z_poly().iter().rev().fold(Rational::zero(), |acc, c| acc * z + c.eval(t))
    }

    /// Substitute `t := a`, leaving a polynomial in `z`.
    pub fn at_t(&self, a: &Rational) -> UPoly {
        let d = self.deg_z().map_or(0, |d| d as usize + 1);
        let mut c = vec![Rational::zero(); d];
        let mut pows: Vec<Rational> = vec![Rational::one()];
        for (&(i, j), x) in &self.terms {
            while pows.len() <= j as usize {
                let next = pows.last().unwrap() * a;
                pows.push(next);
            }
            c[i as usize] += x * &pows[j as usize];
        }
        UPoly::new(c)
    }

    /// Substitute `z := a`, leaving a polynomial in `t`.
    pub fn at_z(&self, a: &Rational) -> UPoly {
        self.swap().at_t(a)
    }

    pub(crate) fn swap(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, x)| ((k.1, k.0), x.clone())).collect() }
    }

    pub fn deriv_t(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(k, _)| k.1 > 0)
                .map(|(k, x)| ((k.0, k.1 - 1), x * rat(k.1 as i64, 1))),
        )
    }

    pub fn deriv_z(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(k, _)| k.0 > 0)
                .map(|(k, x)| ((k.0 - 1, k.1), x * rat(k.0 as i64, 1))),
        )
    }

    /// Coefficients of `z^0, z^1, ...` as polynomials in `t`.
    pub fn as_z_poly(&self) -> Vec<UPoly> {
        let Some(d) = self.deg_z() else { return Vec::new() };
        let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); d as usize + 1];
        for (&(i, j), x) in &self.terms {
            let r = &mut rows[i as usize];
            if r.len() <= j as usize {
                r.resize(j as usize + 1, Rational::zero());
            }
            r[j as usize] = x.clone();
        }
        rows.into_iter().map(UPoly::new).collect()
    }

    pub fn from_z_poly(c: &[UPoly]) -> Poly {
        let mut p = Poly::zero();
        for (i, u) in c.iter().enumerate() {
            for (j, x) in u.coeffs().iter().enumerate() {
                p.add_term((i as u32, j as u32), x.clone());
            }
        }
        p
    }

    /// Exact multivariate division; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Result<Option<Poly>> {
        let (dk, dl) = d.lead().ok_or(Error::DivisionByZero)?;
        let dl_inv = dl.recip();
        if d.terms.len() == 1 {
            let mut q = BTreeMap::new();
            for (k, x) in &self.terms {
                if k.0 < dk.0 || k.1 < dk.1 {
                    return Ok(None);
                }
                q.insert((k.0 - dk.0, k.1 - dk.1), x * &dl_inv);
            }
            return Ok(Some(Poly { terms: q }));
        }
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rk, rl)) = r.lead() {
            if rk.0 < dk.0 || rk.1 < dk.1 {
                return Ok(None);
            }
            let f = rl * &dl_inv;
            let (i, j) = (rk.0 - dk.0, rk.1 - dk.1);
            r = &r - &d.mul_monomial(&f, i, j);
            q.add_term((i, j), f);
        }
        Ok(Some(q))
    }

    /// Greatest common divisor, normalised so its lowest term has coefficient 1.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one();
        }
        // common monomial factors when one side is a monomial
        if self.len() == 1 || other.len() == 1 {
            let mz = self.terms.keys().chain(other.terms.keys()).map(|k| k.0).min().unwrap();
            let mt = self.terms.keys().chain(other.terms.keys()).map(|k| k.1).min().unwrap();
            return Poly::monomial(Rational::one(), mz, mt);
        }
        // degrees of the gcd in z and in t, bounded through specialisation
        let dz = specialised_gcd_degree(self, other);
        let dt = specialised_gcd_degree(&self.swap(), &other.swap());
        let g = match (dz, dt) {
            (Some(0), Some(0)) => Poly::one(),
            (Some(0), _) => {
                let c = primitive(&self.as_z_poly()).0.gcd(&primitive(&other.as_z_poly()).0);
                Poly::from_upoly_t(&c)
            }
            (_, Some(0)) => {
                let c = primitive(&self.swap().as_z_poly()).0.gcd(&primitive(&other.swap().as_z_poly()).0);
                Poly::from_upoly_z(&c)
            }
            _ => {
                let dz_self = self.deg_z().unwrap_or(0);
                let dt_self = self.deg_t().unwrap_or(0);
                if dt_self < dz_self {
                    full_gcd(&self.swap(), &other.swap(), dt).swap()
                } else {
                    full_gcd(self, other, dz)
                }
            }
        };
        g.normalized()
    }

    /// Scaled so the lowest term has coefficient 1.
    pub fn normalized(&self) -> Poly {
        match self.low() {
            None => Poly::zero(),
            Some((_, a)) => self.scale(&a.recip()),
        }
    }
}

/// Degree in `z` of `gcd(a(z, t0), b(z, t0))` at a point `t0` where neither leading
/// coefficient vanishes: an upper bound for the `z`-degree of the bivariate gcd.
fn specialised_gcd_degree(a: &Poly, b: &Poly) -> Option<usize> {
    let az = a.as_z_poly();
    let bz = b.as_z_poly();
    let (la, lb) = (az.last()?, bz.last()?);
    for (n, d) in [(3, 7), (-5, 11), (2, 13), (17, 5), (-7, 19), (31, 3)] {
        let t0 = rat(n, d);
        if la.eval(&t0).is_zero() || lb.eval(&t0).is_zero() {
            continue;
        }
        let ua = a.at_t(&t0);
        let ub = b.at_t(&t0);
        return Some(ua.gcd(&ub).degree().unwrap_or(0));
    }
    None
}

/// Primitive PRS gcd with `z` as main variable. `target` is an upper bound for the gcd's
/// `z`-degree; once a remainder reaches it the candidate is tried by exact division.
fn full_gcd(a: &Poly, b: &Poly, target: Option<usize>) -> Poly {
    let ap = a.as_z_poly();
    let bp = b.as_z_poly();
    let (ca, pa) = primitive(&ap);
    let (cb, pb) = primitive(&bp);
    let c = ca.gcd(&cb);
    let g = prs_gcd(pa, pb, target);
    let g: Vec<UPoly> = g.iter().map(|u| u * &c).collect();
    Poly::from_z_poly(&g)
}

/// `(content, primitive part)` of a polynomial in `z` over `Q[t]`.
fn primitive(p: &[UPoly]) -> (UPoly, Vec<UPoly>) {
    let mut c = UPoly::zero();
    for u in p {
        c = c.gcd(u);
        if c.degree() == Some(0) {
            break;
        }
    }
    if c.is_zero() {
        return (c, p.to_vec());
    }
    let pp = p.iter().map(|u| u.div_rem(&c).expect("content").0).collect();
    (c, pp)
}

fn zdeg(p: &[UPoly]) -> Option<usize> {
    p.len().checked_sub(1)
}

fn trim(mut p: Vec<UPoly>) -> Vec<UPoly> {
    while p.last().is_some_and(|u| u.is_zero()) {
        p.pop();
    }
    p
}

/// Pseudo-remainder of `a` by `b` in `Q[t][z]`.
fn prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let db = zdeg(b).expect("nonzero");
    let lb = &b[db];
    let mut r = a.to_vec();
    while let Some(dr) = zdeg(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        for u in r.iter_mut() {
            *u = &*u * lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[j + shift] = &r[j + shift] - &(&lr * bj);
        }
        r = trim(r);
    }
    r
}

/// Primitive PRS gcd of two primitive polynomials.
fn prs_gcd(a: Vec<UPoly>, b: Vec<UPoly>, target: Option<usize>) -> Vec<UPoly> {
    let (a0, b0) = (a.clone(), b.clone());
    let (mut a, mut b) = if zdeg(&a) >= zdeg(&b) { (a, b) } else { (b, a) };
    loop {
        if b.is_empty() {
            return primitive(&a).1;
        }
        if zdeg(&b) == Some(0) {
            return vec![UPoly::one()];
        }
        if target.is_some_and(|d| zdeg(&b) == Some(d)) {
            let cand = Poly::from_z_poly(&b);
            let pa = Poly::from_z_poly(&a0);
            let pb = Poly::from_z_poly(&b0);
            if matches!(pa.exact_div(&cand), Ok(Some(_))) && matches!(pb.exact_div(&cand), Ok(Some(_))) {
                return b;
            }
        }
        let r = prem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive(&r).1 };
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (k, a) in &o.terms {
            p.add_term(*k, a.clone());
        }
        p
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (k, a) in &o.terms {
            p.add_term(*k, -a.clone());
        }
        p
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (ka, a) in &self.terms {
            for (kb, b) in &o.terms {
                p.add_term((ka.0 + kb.0, ka.1 + kb.1), a * b);
            }
        }
        p
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, a)| (*k, -a.clone())).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64, i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&(i, j, n, d)| ((i, j), rat(n, d))))
    }

    #[test]
    fn exact_division() {
        let a = p(&[(0, 0, 1, 1), (1, 1, -1, 2), (2, 0, 3, 1)]);
        let b = p(&[(0, 1, 1, 1), (3, 0, 1, 4), (1, 0, -1, 1)]);
        let ab = &a * &b;
        assert_eq!(ab.exact_div(&b).unwrap(), Some(a.clone()));
        assert_eq!(ab.exact_div(&a).unwrap(), Some(b.clone()));
        assert_eq!((&ab + &Poly::one()).exact_div(&a).unwrap(), None);
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let f = p(&[(0, 0, 1, 1), (1, 1, -1, 2)]);
        let g = p(&[(0, 0, 1, 1), (1, 0, -1, 1), (3, 0, 1, 8)]);
        let h = p(&[(0, 1, 2, 1), (2, 0, 1, 1), (1, 2, 1, 3)]);
        let a = &(&f * &g) * &h;
        let b = &f * &(&h * &h);
        let gcd = a.gcd(&b);
        assert_eq!(gcd, (&f * &h).normalized());
        assert_eq!(f.gcd(&g), Poly::one());
    }

    #[test]
    fn gcd_with_t_content() {
        let c = p(&[(0, 0, 1, 1), (0, 1, 1, 1)]);
        let a = &c * &p(&[(0, 0, 1, 1), (1, 0, 1, 1)]);
        let b = &c * &p(&[(0, 0, 2, 1), (1, 1, 1, 1)]);
        assert_eq!(a.gcd(&b), c);
    }

    #[test]
    fn evaluation_and_derivatives() {
        let a = p(&[(2, 1, 3, 1), (0, 2, 1, 2)]);
        assert_eq!(a.eval(&rat(2, 1), &rat(3, 1)), rat(36, 1) + rat(9, 2));
        assert_eq!(a.deriv_t(), p(&[(2, 0, 3, 1), (0, 1, 1, 1)]));
        assert_eq!(a.deriv_z(), p(&[(1, 1, 6, 1)]));
        assert_eq!(a.at_t(&rat(1, 1)), UPoly::new(vec![rat(1, 2), rat(0, 1), rat(3, 1)]));
    }
}
