//! Exact symbolic-numeric engine for solvable one-dimensional quantum mechanics.
//!
//! The crate is organised in two layers:
//!
//! * an exact substrate — arbitrary-precision rationals, dense univariate
//!   polynomials and rational functions generic over the scalar type
//!   ([`poly::Poly`], [`ratfunc::RatFunc`]), differential operators,
//!   Wronskians, Sturm-chain root counting and a prefactored-function
//!   calculus ([`prefactored`]) closed under differentiation;
//! * the solvable-model machinery built on top of it — the classical
//!   orthogonal polynomials ([`ortho`]), the catalogue of base systems
//!   ([`models`]), Darboux/Crum/Krein-Adler deformations ([`darboux`]),
//!   multi-indexed polynomials and the pseudo-virtual/eigenstate duality
//!   ([`multi`]), exactly solvable scattering ([`scattering`], [`expsum`])
//!   and the floating-point verification layer ([`numeric`], [`gamma`]).
//!
//! Every algebraic identity is verified exactly over the rationals; analytic
//! claims are checked in double precision with tolerances declared in
//! [`numeric::tol`].

pub mod diffop;
pub mod error;
pub mod gamma;
pub mod poly;
pub mod prefactored;
pub mod ratfunc;
pub mod rootcount;
pub mod scalar;
pub mod wronskian;

pub mod darboux;
pub mod expsum;
pub mod models;
pub mod multi;
pub mod numeric;
pub mod ortho;
pub mod scattering;

pub use error::{Error, Result};

use num_complex::Complex;

/// Arbitrary-precision rational scalar, the coefficient field of the exact layer.
pub type Q = num_rational::BigRational;
/// Gaussian rational, used where a substitution or amplitude factor needs `i`.
pub type CQ = Complex<Q>;
/// Dense univariate polynomial over `Q`.
pub type QPoly = poly::Poly<Q>;
/// Reduced rational function over `Q`.
pub type QRatFunc = ratfunc::RatFunc<Q>;
/// Polynomial over the Gaussian rationals.
pub type CQPoly = poly::Poly<CQ>;
/// Rational function over the Gaussian rationals.
pub type CQRatFunc = ratfunc::RatFunc<CQ>;
/// Differential operator with exact rational-function coefficients.
pub type QDiffOp = diffop::DiffOp<Q>;

/// Shorthand for an integer-valued `Q`.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Shorthand for the exact fraction `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Parses "p/q" or "p" into an exact rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let mk = |msg: String| Error::Parse(msg);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n
                .trim()
                .parse()
                .map_err(|_| mk(format!("bad rational numerator in {s:?}")))?;
            let d: num_bigint::BigInt = d
                .trim()
                .parse()
                .map_err(|_| mk(format!("bad rational denominator in {s:?}")))?;
            if d == num_bigint::BigInt::from(0) {
                return Err(mk(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: num_bigint::BigInt = s
                .parse()
                .map_err(|_| mk(format!("bad rational in {s:?}")))?;
            Ok(Q::from_integer(n))
        }
    }
}

/// Serialises a rational as "p/q", or "p" when the denominator is one.
pub fn format_q(q: &Q) -> String {
    q.to_string()
}

/// Greatest integer strictly less than `a`; integer `a` maps to `a - 1`.
pub fn floor_strict(a: &Q) -> num_bigint::BigInt {
    let f = a.floor().to_integer();
    if a.is_integer() {
        f - 1
    } else {
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        let a = qr(3, 7);
        let c = qr(-5, 11);
        assert_eq!((a.clone() + c.clone()) - c, a);
        assert_eq!(parse_q("3/7").unwrap(), qr(3, 7));
        assert_eq!(parse_q("-12").unwrap(), qi(-12));
        assert_eq!(format_q(&qr(4, 2)), "2");
        assert_eq!(format_q(&qr(-3, 9)), "-1/3");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn floor_strict_integer_maps_down() {
        assert_eq!(floor_strict(&qi(3)), 2.into());
        assert_eq!(floor_strict(&qr(7, 2)), 3.into());
        assert_eq!(floor_strict(&qr(-1, 2)), (-1).into());
        assert_eq!(floor_strict(&qi(0)), (-1).into());
    }
}
