//! Linear differential operators `sum_k c_k(v) (d/dv)^k` with exact
//! rational-function coefficients, closed under composition and commutator.

use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Scalar;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct DiffOp<T> {
    /// `coeffs[k]` multiplies the k-th derivative; no trailing zero entries.
    coeffs: Vec<RatFunc<T>>,
}

impl<T: Scalar> std::fmt::Debug for DiffOp<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DiffOp{:?}", self.coeffs)
    }
}

impl<T: Scalar> DiffOp<T> {
    pub fn from_coeffs(mut coeffs: Vec<RatFunc<T>>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn zero() -> Self {
        DiffOp { coeffs: vec![] }
    }

    pub fn identity() -> Self {
        DiffOp::from_coeffs(vec![RatFunc::one()])
    }

    /// Multiplication by a rational function.
    pub fn mul_by(f: RatFunc<T>) -> Self {
        DiffOp::from_coeffs(vec![f])
    }

    /// The k-th derivative operator.
    pub fn derivative(k: usize) -> Self {
        let mut coeffs = vec![RatFunc::zero(); k + 1];
        coeffs[k] = RatFunc::one();
        DiffOp::from_coeffs(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> RatFunc<T> {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn coeffs(&self) -> &[RatFunc<T>] {
        &self.coeffs
    }

    /// Applies the operator to a rational function.
    pub fn apply(&self, f: &RatFunc<T>) -> RatFunc<T> {
        let mut out = RatFunc::zero();
        let mut df = f.clone();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                df = df.derivative();
            }
            if !c.is_zero() {
                out = &out + &(c * &df);
            }
        }
        out
    }

    /// Applies to a polynomial; `None` if the result is not polynomial.
    pub fn apply_poly(&self, p: &Poly<T>) -> Option<Poly<T>> {
        self.apply(&RatFunc::from_poly(p.clone())).as_poly().cloned()
    }

    /// Operator composition `self ∘ rhs` via the Leibniz rule:
    /// `D^i ∘ (c D^j) = sum_m binom(i,m) c^{(m)} D^{i+j-m}`.
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut out: Vec<RatFunc<T>> = vec![];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut deriv = b.clone();
                let mut binom = T::one();
                for m in 0..=i {
                    if m > 0 {
                        deriv = deriv.derivative();
                        // binom(i, m) = binom(i, m-1) * (i - m + 1) / m
                        let mut num = T::zero();
                        for _ in 0..(i - m + 1) {
                            num += T::one();
                        }
                        let mut den = T::zero();
                        for _ in 0..m {
                            den += T::one();
                        }
                        binom = binom * num / den;
                    }
                    let k = i + j - m;
                    if out.len() <= k {
                        out.resize(k + 1, RatFunc::zero());
                    }
                    let term = &(a * &deriv) * &RatFunc::constant(binom.clone());
                    out[k] = &out[k] + &term;
                }
            }
        }
        DiffOp::from_coeffs(out)
    }

    /// Commutator `[self, rhs] = self∘rhs - rhs∘self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.compose(rhs) - &rhs.compose(self)
    }

    /// Substitutes the operator into a polynomial: `p(D) = sum p_k D∘...∘D`,
    /// composing on the right of nothing (pure operator polynomial).
    pub fn poly_of(&self, p: &Poly<T>) -> Self {
        let mut acc = DiffOp::zero();
        for c in p.coeffs().iter().rev() {
            acc = &acc.compose(self) + &DiffOp::mul_by(RatFunc::constant(c.clone()));
        }
        acc
    }
}

impl<T: Scalar> Add for &DiffOp<T> {
    type Output = DiffOp<T>;
    fn add(self, rhs: Self) -> DiffOp<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &DiffOp<T> {
    type Output = DiffOp<T>;
    fn sub(self, rhs: Self) -> DiffOp<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Neg for &DiffOp<T> {
    type Output = DiffOp<T>;
    fn neg(self) -> DiffOp<T> {
        DiffOp::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<T: Scalar> Mul for &DiffOp<T> {
    type Output = DiffOp<T>;
    fn mul(self, rhs: Self) -> DiffOp<T> {
        self.compose(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qi, QDiffOp, QPoly, QRatFunc};

    fn var_op() -> QDiffOp {
        QDiffOp::mul_by(QRatFunc::var())
    }

    #[test]
    fn canonical_commutators() {
        let d = QDiffOp::derivative(1);
        // [d/dv, v] = 1
        assert_eq!(d.commutator(&var_op()), QDiffOp::identity());
        // [d^2/dv^2, v] = 2 d/dv
        let d2 = QDiffOp::derivative(2);
        let expect = DiffOp::from_coeffs(vec![QRatFunc::zero(), QRatFunc::constant(qi(2))]);
        assert_eq!(d2.commutator(&var_op()), expect);
        // [v d/dv, v^2] = 2 v^2
        let vd = var_op().compose(&d);
        let v2 = QDiffOp::mul_by(&QRatFunc::var() * &QRatFunc::var());
        let expect = QDiffOp::mul_by(QRatFunc::from_poly(QPoly::monomial(qi(2), 2)));
        assert_eq!(vd.commutator(&v2), expect);
    }

    #[test]
    fn apply_and_poly_of() {
        // (v d/dv) v^3 = 3 v^3
        let vd = var_op().compose(&QDiffOp::derivative(1));
        let p = QPoly::monomial(qi(1), 3);
        assert_eq!(vd.apply_poly(&p), Some(QPoly::monomial(qi(3), 3)));
        // q(D) with q(y) = y^2 + 1 and D = d/dv applied to v^2 gives 2 + v^2
        let q = QPoly::from_coeffs(vec![qi(1), qi(0), qi(1)]);
        let op = QDiffOp::derivative(1).poly_of(&q);
        let r = op.apply_poly(&QPoly::monomial(qi(1), 2)).unwrap();
        assert_eq!(r, QPoly::from_coeffs(vec![qi(2), qi(0), qi(1)]));
    }

    #[test]
    fn composition_leibniz() {
        // d ∘ (v·) = v d + 1
        let d = QDiffOp::derivative(1);
        let m = var_op();
        let got = d.compose(&m);
        let expect = DiffOp::from_coeffs(vec![QRatFunc::one(), QRatFunc::var()]);
        assert_eq!(got, expect);
    }
}
