use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{rat, Poly, Rational, UPoly};
use crate::{Error, Result};

/// A rational function in `z` and `t`, kept in lowest terms with the lowest denominator
/// coefficient equal to 1.
#[derive(Debug, Clone)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFun::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).unwrap().expect("gcd divides numerator"),
                    den.exact_div(&g).unwrap().expect("gcd divides denominator"),
                )
            }
        };
        RatFun::normalize(num, den)
    }

    /// Scales so the lowest denominator coefficient is 1; assumes lowest terms already.
    fn normalize(num: Poly, den: Poly) -> Self {
        let lc = den.low().unwrap().1.recip();
        if lc.is_one() {
            return RatFun { num, den };
        }
        RatFun { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn constant(a: Rational) -> Self {
        RatFun::from_poly(Poly::constant(a))
    }

    pub fn z() -> Self {
        RatFun::from_poly(Poly::z())
    }

    pub fn t() -> Self {
        RatFun::from_poly(Poly::t())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    /// `1 / (1 - z)`
    pub fn geometric() -> Self {
        RatFun::new(Poly::one(), &Poly::one() - &Poly::z()).unwrap()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, a: &Rational) -> RatFun {
        if a.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: self.num.scale(a), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<RatFun> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFun) -> Result<RatFun> {
        Ok(self * &o.recip()?)
    }

    /// `f(z, a)` as a function of `z` alone.
    pub fn at_t(&self, a: &Rational) -> Result<RatFun> {
        let n = Poly::from_upoly_z(&self.num.at_t(a));
        let d = Poly::from_upoly_z(&self.den.at_t(a));
        RatFun::new(n, d)
    }

    pub fn deriv_t(&self) -> RatFun {
        let n = &(&self.num.deriv_t() * &self.den) - &(&self.num * &self.den.deriv_t());
        RatFun::canonical(n, &self.den * &self.den)
    }

    /// `d/dt f(z, t)` at `t = 1`.
    pub fn dt_at_one(&self) -> RatFun {
        let one = Rational::one();
        let n = &(&self.num.deriv_t().at_t(&one) * &self.den.at_t(&one))
            - &(&self.num.at_t(&one) * &self.den.deriv_t().at_t(&one));
        let d = &self.den.at_t(&one) * &self.den.at_t(&one);
        RatFun::canonical(Poly::from_upoly_z(&n), Poly::from_upoly_z(&d))
    }

    pub fn eval(&self, z: &Rational, t: &Rational) -> Result<Rational> {
        let d = self.den.eval(z, t);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(z, t) / d)
    }

    /// Taylor coefficients `[z^0] .. [z^n_max]` of `f(z, at_t)`, by the linear recurrence
    /// the denominator induces.
    pub fn taylor_coeffs(&self, at_t: &Rational, n_max: usize) -> Result<Vec<Rational>> {
        let num = self.num.at_t(at_t);
        let den = self.den.at_t(at_t);
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(Error::NotExpandable);
        }
        let d0inv = d0.recip();
        let dc = den.coeffs();
        let mut out: Vec<Rational> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = num.coeff(n);
            for (i, di) in dc.iter().enumerate().skip(1).take(n) {
                if !di.is_zero() {
                    acc -= di * &out[n - i];
                }
            }
            out.push(acc * &d0inv);
        }
        Ok(out)
    }

    /// Coefficients `[z^n] f(z, t)` for `n <= n_max`, each a polynomial in `t`.
    /// Requires `den(0, t)` to divide every partial numerator exactly.
    pub fn series_in_t(&self, n_max: usize) -> Result<Vec<UPoly>> {
        let num = self.num.as_z_poly();
        let den = self.den.as_z_poly();
        let d0 = den.first().cloned().unwrap_or_default();
        if d0.is_zero() {
            return Err(Error::NotExpandable);
        }
        let mut out: Vec<UPoly> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = num.get(n).cloned().unwrap_or_default();
            for (i, di) in den.iter().enumerate().skip(1).take(n) {
                if !di.is_zero() {
                    acc = &acc - &(di * &out[n - i]);
                }
            }
            let c = if d0.degree() == Some(0) {
                acc.scale(&d0.coeff(0).recip())
            } else {
                acc.exact_div(&d0)?.ok_or(Error::NotExpandable)?
            };
            out.push(c);
        }
        Ok(out)
    }
}

impl PartialEq for RatFun {
    fn eq(&self, o: &RatFun) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for RatFun {}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFun::canonical(&self.num + &o.num, self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator
        let g = self.den.gcd(&o.den);
        let b1 = self.den.exact_div(&g).unwrap().expect("gcd divides");
        let d1 = o.den.exact_div(&g).unwrap().expect("gcd divides");
        let num = &(&self.num * &d1) + &(&o.num * &b1);
        if num.is_zero() {
            return RatFun::zero();
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.exact_div(&h).unwrap().unwrap(), g.exact_div(&h).unwrap().unwrap())
        };
        RatFun::normalize(num, &(&b1 * &d1) * &g)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun { num: &self.num * &o.num, den: Poly::one() };
        }
        // (a/b)(c/d): cancel gcd(a, d) and gcd(c, b) separately
        let (a, d) = cancel(&self.num, &o.den);
        let (c, b) = cancel(&o.num, &self.den);
        RatFun::normalize(&a * &c, &b * &d)
    }
}

fn cancel(n: &Poly, d: &Poly) -> (Poly, Poly) {
    if d.is_constant() || n.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = n.gcd(d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.exact_div(&g).unwrap().unwrap(), d.exact_div(&g).unwrap().unwrap())
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, o: RatFun) -> RatFun {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (&(i, j), a)) in self.terms().iter().enumerate() {
            if n == 0 {
                if a.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if a.is_negative() { " - " } else { " + " })?;
            }
            let m = a.abs();
            let mut factors = Vec::new();
            if !m.is_one() || (i == 0 && j == 0) {
                factors.push(m.to_string());
            }
            match i {
                0 => {}
                1 => factors.push("z".into()),
                _ => factors.push(format!("z^{i}")),
            }
            match j {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{j}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses sums of monomials such as `1 - 3/4*z^2*t + t^3`.
    fn from_str(s: &str) -> Result<Poly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Poly::zero();
        let bytes = s.as_bytes();
        let mut start = 0;
        let mut terms = Vec::new();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        for term in terms {
            let (sign, body) = match term.as_bytes()[0] {
                b'-' => (-1, &term[1..]),
                b'+' => (1, &term[1..]),
                _ => (1, term),
            };
            let mut coef = rat(sign, 1);
            let (mut zi, mut tj) = (0u32, 0u32);
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?),
                    None => (factor, 1),
                };
                match base {
                    "z" => zi += exp,
                    "t" => tj += exp,
                    _ => {
                        let r = Rational::from_str(base).map_err(|_| Error::Parse(format!("bad coefficient {base:?}")))?;
                        coef *= r;
                    }
                }
            }
            p = &p + &Poly::monomial(coef, zi, tj);
        }
        Ok(p)
    }
}

impl FromStr for RatFun {
    type Err = Error;

    /// Parses the `Display` rendering: `P` or `(P) / (Q)`.
    fn from_str(s: &str) -> Result<RatFun> {
        let s = s.trim();
        match s.split_once(") / (") {
            Some((n, d)) => {
                let n = n.strip_prefix('(').ok_or_else(|| Error::Parse("expected '('".into()))?;
                let d = d.strip_suffix(')').ok_or_else(|| Error::Parse("expected ')'".into()))?;
                RatFun::new(n.parse()?, d.parse()?)
            }
            None => Ok(RatFun::from_poly(s.parse()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic() {
        let g = RatFun::geometric();
        assert_eq!(&g - &RatFun::one(), rf("(z) / (1 - z)"));
        let h = RatFun::z().scale(&rat(1, 2));
        assert_eq!(&h * &h, rf("1/4*z^2"));
        assert_eq!(RatFun::one().div(&RatFun::zero()), Err(Error::DivisionByZero));
        let a = rf("(1 + t*z) / (1 - z^2)");
        let b = rf("(2 - z) / (1 + z)");
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!((&a * &b).div(&b).unwrap(), a);
    }

    #[test]
    fn canonical_form_is_reduced() {
        let a = rf("(1 - z^2) / (1 - z)");
        assert!(a.is_polynomial());
        assert_eq!(a.to_string(), "1 + z");
        let b = rf("(2) / (4 - 4*z)");
        assert_eq!(b.to_string(), "(1/2) / (1 - z)");
    }

    #[test]
    fn display_round_trip() {
        for s in ["(1 - 3/4*z^2*t + t^3) / (1 - z - 1/8*z^3)", "-z*t^2 + 5", "0", "(z) / (1 - 1/2*z*t)"] {
            let a = rf(s);
            let back = rf(&a.to_string());
            assert_eq!(a, back);
            assert_eq!(a.to_string(), back.to_string());
        }
    }

    #[test]
    fn geometric_coefficients() {
        let c = RatFun::geometric().taylor_coeffs(&rat(1, 1), 10).unwrap();
        assert!(c.iter().all(|x| x.is_one()));
        assert_eq!(rf("(1) / (z)").taylor_coeffs(&rat(1, 1), 3), Err(Error::NotExpandable));
    }

    #[test]
    fn avoiding_aaa_coefficients() {
        // C(z) / (z^3/8 + (1-z) C(z)), C = 1 + z/2 + z^2/4
        let c = rf("1 + 1/2*z + 1/4*z^2");
        let d = &rf("1/8*z^3") + &(&(&RatFun::one() - &RatFun::z()) * &c);
        let f = c.div(&d).unwrap();
        let coeffs = f.taylor_coeffs(&rat(1, 1), 12).unwrap();
        let mut trib = vec![1i64, 2, 4];
        while trib.len() <= 12 {
            let n = trib.len();
            trib.push(trib[n - 1] + trib[n - 2] + trib[n - 3]);
        }
        for (n, x) in coeffs.iter().enumerate() {
            assert_eq!(*x, rat(trib[n], 1 << n), "n={n}");
        }
        assert_eq!(coeffs[3], rat(7, 8));
    }

    #[test]
    fn derivative_in_t() {
        assert_eq!(rf("t*z").dt_at_one(), RatFun::z());
        assert!(rf("(1) / (1 - z)").dt_at_one().is_zero());
        let f = rf("(1) / (1 - z*t)");
        // sum n z^n
        let c = f.dt_at_one().taylor_coeffs(&rat(1, 1), 6).unwrap();
        assert_eq!(c, (0..=6).map(|n| rat(n, 1)).collect::<Vec<_>>());
    }

    #[test]
    fn series_in_t_matches_pointwise() {
        let f = rf("(1 + z*t) / (1 - 1/2*z - 1/3*z^2*t)");
        let s = f.series_in_t(8).unwrap();
        for a in [rat(0, 1), rat(1, 1), rat(-3, 2)] {
            let c = f.taylor_coeffs(&a, 8).unwrap();
            for n in 0..=8 {
                assert_eq!(s[n].eval(&a), c[n]);
            }
        }
    }
}
