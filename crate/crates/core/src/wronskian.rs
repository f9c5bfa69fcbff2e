//! Wronskian determinants of polynomials and rational functions.
//!
//! Determinants are computed by fraction-free Bareiss elimination over the
//! polynomial ring, which keeps intermediate growth bounded while staying
//! exact. Rational-function matrices are cleared to polynomial form first.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Scalar;

/// Determinant of a square polynomial matrix by Bareiss elimination.
pub fn poly_matrix_det<T: Scalar>(mat: &[Vec<Poly<T>>]) -> Poly<T> {
    let n = mat.len();
    if n == 0 {
        return Poly::one();
    }
    assert!(mat.iter().all(|row| row.len() == n), "matrix must be square");
    let mut a: Vec<Vec<Poly<T>>> = mat.to_vec();
    let mut sign_flip = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Poly::zero();
            };
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t
                    .div_exact(&prev)
                    .expect("Bareiss exact division");
            }
        }
        for i in k + 1..n {
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -&det
    } else {
        det
    }
}

/// Determinant of a rational-function matrix: columns are cleared to a common
/// polynomial denominator, then Bareiss runs on the polynomial matrix.
pub fn ratfunc_matrix_det<T: Scalar>(mat: &[Vec<RatFunc<T>>]) -> RatFunc<T> {
    let n = mat.len();
    if n == 0 {
        return RatFunc::one();
    }
    let mut cleared: Vec<Vec<Poly<T>>> = vec![vec![Poly::zero(); n]; n];
    let mut scale_den = Poly::one();
    for j in 0..n {
        let mut colden = Poly::one();
        for row in mat.iter() {
            let d = row[j].den();
            let g = colden.gcd(d);
            colden = &colden * &d.div_exact(&g).expect("gcd divides");
        }
        for i in 0..n {
            let extra = colden.div_exact(mat[i][j].den()).expect("lcm divisibility");
            cleared[i][j] = mat[i][j].num() * &extra;
        }
        scale_den = &scale_den * &colden;
    }
    RatFunc::new(poly_matrix_det(&cleared), scale_den)
}

/// Wronskian `det(d^{j-1} f_k / dv^{j-1})` of polynomials in one variable.
pub fn poly_wronskian<T: Scalar>(fs: &[Poly<T>]) -> Result<Poly<T>> {
    if fs.is_empty() {
        return Err(Error::Usage("Wronskian of an empty sequence".into()));
    }
    let n = fs.len();
    let mut rows: Vec<Vec<Poly<T>>> = Vec::with_capacity(n);
    rows.push(fs.to_vec());
    for j in 1..n {
        let prev = &rows[j - 1];
        rows.push(prev.iter().map(|p| p.derivative()).collect());
    }
    Ok(poly_matrix_det(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{qi, QPoly};

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn single_entry_is_identity() {
        let f = p(&[1, 2, 3]);
        assert_eq!(poly_wronskian(&[f.clone()]).unwrap(), f);
        assert!(poly_wronskian::<crate::Q>(&[]).is_err());
    }

    #[test]
    fn two_by_two_by_hand() {
        // W[x, x^2] = x * 2x - 1 * x^2 = x^2
        let w = poly_wronskian(&[p(&[0, 1]), p(&[0, 0, 1])]).unwrap();
        assert_eq!(w, p(&[0, 0, 1]));
        // W[2x, 4x^2 - 2] = 8x^2 + 4, the degree-2 pair deletion denominator
        let w = poly_wronskian(&[p(&[0, 2]), p(&[-2, 0, 4])]).unwrap();
        assert_eq!(w, p(&[4, 0, 8]));
    }

    #[test]
    fn dependent_rows_vanish() {
        let f = p(&[1, 1]);
        let w = poly_wronskian(&[f.clone(), f.scale(&qi(3))]).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor_3x3() {
        let m = vec![
            vec![p(&[1, 1]), p(&[0, 1]), p(&[2])],
            vec![p(&[1]), p(&[1, 0, 1]), p(&[0, 3])],
            vec![p(&[0, 2]), p(&[5]), p(&[1, 1, 1])],
        ];
        // cofactor expansion along the first row
        let det2 = |a: &QPoly, b: &QPoly, c: &QPoly, d: &QPoly| &(a * d) - &(b * c);
        let c0 = det2(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
        let c1 = det2(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
        let c2 = det2(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
        let expect = &(&(&m[0][0] * &c0) - &(&m[0][1] * &c1)) + &(&m[0][2] * &c2);
        assert_eq!(poly_matrix_det(&m), expect);
    }
}
