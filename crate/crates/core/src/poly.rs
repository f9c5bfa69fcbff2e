//! Dense univariate polynomials over a generic scalar field.
//!
//! The zero polynomial is the empty coefficient vector and its degree is
//! `None` ("minus infinity"), so `deg(p*q) = deg p + deg q` holds with
//! explicit zero checks. Coefficients are stored by ascending degree with no
//! trailing zeros.

use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c * v^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The identity polynomial `v`.
    pub fn var() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Maps coefficients into another scalar type (e.g. `Q` -> `f64`).
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut kc = T::zero();
            for _ in 0..k {
                kc += T::one();
            }
            out.push(kc * c.clone());
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Substitutes `inner` for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut n: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Euclidean division; panics on zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let dl = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (Poly::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![T::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = rem[i + dd].clone() / dl.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = rem[i + j].clone() - c.clone() * dc.clone();
                rem[i + j] = t;
            }
            quot[i] = c;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact division: returns `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divides by the leading coefficient (zero polynomial is returned as is).
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.clone() / l.clone()).collect())
    }

    /// Square-free part `p / gcd(p, p')`.
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides")
    }

    pub fn is_square_free(&self) -> bool {
        self.is_zero() || self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Largest `m` with `f^m | self`, together with the cofactor `self / f^m`.
    pub fn extract_power(&self, f: &Self) -> (usize, Self) {
        assert!(f.degree().map_or(false, |d| d >= 1), "factor must be non-constant");
        let mut m = 0;
        let mut p = self.clone();
        if p.is_zero() {
            return (0, p);
        }
        while let Some(q) = p.div_exact(f) {
            p = q;
            m += 1;
        }
        (m, p)
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = t;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*v")?,
                _ => write!(f, "({c})*v^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qi, Q, QPoly};

    fn p(cs: &[i64]) -> QPoly {
        Poly::from_coeffs(cs.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
        // deg(p*q) = deg p + deg q with explicit zero checks
        let a = p(&[1, 2]);
        let b = p(&[3, 0, 1]);
        assert_eq!(
            (&a * &b).degree(),
            Some(a.degree().unwrap() + b.degree().unwrap())
        );
        assert!((&a * &QPoly::zero()).is_zero());
    }

    #[test]
    fn divrem_gcd() {
        let a = p(&[-2, 0, 1]); // v^2 - 2
        let b = p(&[1, 1]); // v + 1
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        let g = p(&[1, 2, 1]).gcd(&p(&[1, 1])); // (v+1)^2, v+1
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(p(&[0, 0, 0, 2]).extract_power(&p(&[0, 1])), (3, p(&[2])));
    }

    #[test]
    fn compose_and_eval() {
        let a = p(&[1, 0, 1]); // v^2 + 1
        let inner = p(&[0, 2]); // 2v
        assert_eq!(a.compose(&inner), p(&[1, 0, 4]));
        assert_eq!(a.eval(&qi(3)), qi(10));
        assert_eq!(a.map(|c| c.to_string().parse::<f64>().unwrap()).eval(&2.0), 5.0);
    }

    #[test]
    fn square_free() {
        let a = &p(&[1, 1]).pow(2) * &p(&[-3, 1]);
        assert!(!a.is_square_free());
        assert_eq!(a.square_free_part().monic(), (&p(&[1, 1]) * &p(&[-3, 1])).monic());
    }

    #[test]
    fn gaussian_rational_coefficients() {
        use num_complex::Complex;
        let i = Complex::new(Q::from_integer(0.into()), Q::from_integer(1.into()));
        let one = Complex::new(Q::from_integer(1.into()), Q::from_integer(0.into()));
        // (v + i)(v - i) = v^2 + 1
        let a = Poly::from_coeffs(vec![i.clone(), one.clone()]);
        let b = Poly::from_coeffs(vec![-i.clone(), one.clone()]);
        let prod = &a * &b;
        assert_eq!(prod.coeff(0), one);
        assert_eq!(prod.coeff(1), Complex::new(Q::from_integer(0.into()), Q::from_integer(0.into())));
    }
}
