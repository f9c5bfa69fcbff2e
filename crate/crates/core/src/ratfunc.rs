//! Reduced rational functions `num/den` over a generic scalar field.
//!
//! Invariants: the denominator is nonzero and monic after reduction, and
//! `gcd(num, den) = 1`. (Over an ordered field the conventional sign lives in
//! the numerator; monic denominators make equality testing canonical for
//! `Complex<Q>` as well.)

use crate::poly::Poly;
use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct RatFunc<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Scalar> RatFunc<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFunc { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) {
            self.num = self.num.div_exact(&g).expect("gcd divides num");
            self.den = self.den.div_exact(&g).expect("gcd divides den");
        }
        let l = self.den.leading();
        if !l.is_one() {
            self.den = self.den.scale(&(T::one() / l.clone()));
            self.num = self.num.scale(&(T::one() / l));
        }
    }

    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether the function is a polynomial (denominator reduced to 1).
    pub fn as_poly(&self) -> Option<&Poly<T>> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    pub fn recip(&self) -> Self {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> Self {
        // (n/d)' = (n'd - nd')/d^2
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(n, &self.den * &self.den)
    }

    /// Evaluates at a point; `None` on a pole.
    pub fn eval(&self, x: &T) -> Option<T> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Substitutes a polynomial for the variable.
    pub fn compose_poly(&self, inner: &Poly<T>) -> Self {
        RatFunc::new(self.num.compose(inner), self.den.compose(inner))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> RatFunc<U> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }

    pub fn pow(&self, n: usize) -> Self {
        RatFunc::new(self.num.pow(n), self.den.pow(n))
    }
}

impl<T: Scalar> Add for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn add(self, rhs: Self) -> RatFunc<T> {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<T: Scalar> Sub for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn sub(self, rhs: Self) -> RatFunc<T> {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<T: Scalar> Mul for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn mul(self, rhs: Self) -> RatFunc<T> {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<T: Scalar> Div for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn div(self, rhs: Self) -> RatFunc<T> {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<T: Scalar> Neg for &RatFunc<T> {
    type Output = RatFunc<T>;
    fn neg(self) -> RatFunc<T> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl<T: Scalar> fmt::Debug for RatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for RatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qi, QPoly, QRatFunc};

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn reduction_and_arith() {
        // (v^2-1)/(v+1) reduces to v-1
        let r = QRatFunc::new(p(&[-1, 0, 1]), p(&[1, 1]));
        assert_eq!(r.as_poly(), Some(&p(&[-1, 1])));
        let a = QRatFunc::new(p(&[1]), p(&[0, 1])); // 1/v
        let b = QRatFunc::new(p(&[1]), p(&[0, 0, 1])); // 1/v^2
        let s = &a + &b; // (v+1)/v^2
        assert_eq!(s.num(), &p(&[1, 1]));
        assert_eq!(s.den(), &p(&[0, 0, 1]));
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dv (1/v) = -1/v^2
        let r = QRatFunc::new(p(&[1]), p(&[0, 1]));
        let d = r.derivative();
        assert_eq!(d.num(), &p(&[-1]));
        assert_eq!(d.den(), &p(&[0, 0, 1]));
        assert_eq!(r.eval(&qi(2)), Some(crate::qr(1, 2)));
        assert_eq!(r.eval(&qi(0)), None);
    }
}
