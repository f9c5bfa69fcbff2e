//! Hermite, Laguerre and Jacobi polynomials, built from their terminating
//! hypergeometric definitions, with the differential equation, the Rodrigues
//! formula and the three-term recurrence as independent cross-checks.

use crate::error::{Error, Result};
use crate::prefactored::{Coord, FactorKind, Prefactored};
use crate::{qi, Q, QPoly};
use num_traits::{One, Signed, Zero};

/// Pochhammer symbol (a)_n = a (a+1) ... (a+n-1).
pub fn pochhammer(a: &Q, n: usize) -> Q {
    let mut acc = Q::one();
    let mut t = a.clone();
    for _ in 0..n {
        acc *= t.clone();
        t += Q::one();
    }
    acc
}

pub fn factorial(n: usize) -> Q {
    pochhammer(&Q::one(), n)
}

/// Generalised binomial coefficient C(a, k) = (a-k+1)_k / k! for rational a.
pub fn binom(a: &Q, k: usize) -> Q {
    pochhammer(&(a - qi(k as i64) + Q::one()), k) / factorial(k)
}

/// Classical family with the paper-convention parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyId {
    Hermite,
    Laguerre { alpha: Q },
    Jacobi { alpha: Q, beta: Q },
}

impl FamilyId {
    /// Weight integrability bounds: Laguerre α > -1, Jacobi α, β > -1.
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            FamilyId::Hermite => true,
            FamilyId::Laguerre { alpha } => *alpha > qi(-1),
            FamilyId::Jacobi { alpha, beta } => *alpha > qi(-1) && *beta > qi(-1),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("family parameters outside weight bounds: {self:?}")))
        }
    }
}

/// H_n via the terminating 2F0 sum.
pub fn hermite_poly(n: usize) -> QPoly {
    let mut coeffs = vec![Q::zero(); n + 1];
    let a = Q::new((-(n as i64)).into(), 2.into());
    let b = Q::new((1 - n as i64).into(), 2.into());
    let mut pow2 = Q::one();
    for _ in 0..n {
        pow2 *= qi(2);
    }
    for k in 0..=n / 2 {
        let c = pochhammer(&a, k) * pochhammer(&b, k) / factorial(k);
        let sign = if k % 2 == 0 { Q::one() } else { -Q::one() };
        coeffs[n - 2 * k] = pow2.clone() * sign * c;
    }
    QPoly::from_coeffs(coeffs)
}

/// i^{-v} H_v(i x): the real polynomial obtained from H_v by x -> ix.
/// Coefficient of x^k picks up (-1)^{(k-v)/2}.
pub fn hermite_imag(v: usize) -> QPoly {
    let h = hermite_poly(v);
    let mut coeffs = vec![Q::zero(); v + 1];
    for k in (0..=v).rev() {
        let c = h.coeff(k);
        if c.is_zero() {
            continue;
        }
        // k ≡ v (mod 2) for Hermite
        let half = (v - k) / 2;
        coeffs[k] = if half % 2 == 0 { c } else { -c };
    }
    QPoly::from_coeffs(coeffs)
}

/// L_n^{(α)} for arbitrary rational α (binomial form, defined for all α).
pub fn laguerre_poly(alpha: &Q, n: usize) -> QPoly {
    let mut coeffs = vec![Q::zero(); n + 1];
    let na = qi(n as i64) + alpha.clone();
    for (k, c) in coeffs.iter_mut().enumerate() {
        let sign = if k % 2 == 0 { Q::one() } else { -Q::one() };
        *c = sign * binom(&na, n - k) / factorial(k);
    }
    QPoly::from_coeffs(coeffs)
}

/// P_n^{(α,β)} for arbitrary rational α, β (binomial form, defined for all
/// parameters, including the negative-integer cases the hypergeometric sum
/// cannot reach).
pub fn jacobi_poly(alpha: &Q, beta: &Q, n: usize) -> QPoly {
    let na = qi(n as i64) + alpha.clone();
    let nb = qi(n as i64) + beta.clone();
    let vm1 = QPoly::from_coeffs(vec![qi(-1), qi(1)]); // y - 1
    let vp1 = QPoly::from_coeffs(vec![qi(1), qi(1)]); // y + 1
    let mut acc = QPoly::zero();
    for l in 0..=n {
        let c = binom(&na, l) * binom(&nb, n - l);
        if c.is_zero() {
            continue;
        }
        let term = &vm1.pow(n - l) * &vp1.pow(l);
        acc = &acc + &term.scale(&c);
    }
    let mut half_n = Q::one();
    for _ in 0..n {
        half_n /= qi(2);
    }
    acc.scale(&half_n)
}

/// The degree-n polynomial of a family in the hypergeometric normalisation.
pub fn classical_poly(family: &FamilyId, n: usize) -> Result<QPoly> {
    family.validate()?;
    Ok(match family {
        FamilyId::Hermite => hermite_poly(n),
        FamilyId::Laguerre { alpha } => {
            // ((α+1)_n / n!) 1F1(-n; α+1; y), expanded exactly
            let lead = pochhammer(&(alpha + Q::one()), n) / factorial(n);
            let mut coeffs = vec![Q::zero(); n + 1];
            for (k, c) in coeffs.iter_mut().enumerate() {
                let den = pochhammer(&(alpha + Q::one()), k) * factorial(k);
                if den.is_zero() {
                    return Err(Error::Domain(
                        "vanishing Pochhammer denominator in the 1F1 sum".into(),
                    ));
                }
                *c = lead.clone() * pochhammer(&qi(-(n as i64)), k) / den;
            }
            QPoly::from_coeffs(coeffs)
        }
        FamilyId::Jacobi { alpha, beta } => {
            // ((α+1)_n / n!) 2F1(-n, n+α+β+1; α+1; (1-y)/2)
            let lead = pochhammer(&(alpha + Q::one()), n) / factorial(n);
            let s = qi(n as i64) + alpha.clone() + beta.clone() + Q::one();
            let arg =
                QPoly::from_coeffs(vec![Q::new(1.into(), 2.into()), Q::new((-1).into(), 2.into())]);
            let mut acc = QPoly::zero();
            for k in 0..=n {
                let den = pochhammer(&(alpha + Q::one()), k) * factorial(k);
                if den.is_zero() {
                    return Err(Error::Domain(
                        "vanishing Pochhammer denominator in the 2F1 sum".into(),
                    ));
                }
                let c = lead.clone() * pochhammer(&qi(-(n as i64)), k) * pochhammer(&s, k) / den;
                acc = &acc + &arg.pow(k).scale(&c);
            }
            acc
        }
    })
}

/// Applies the family's second-order operator minus the eigenvalue; the
/// result must be the zero polynomial.
pub fn diffeq_residual(family: &FamilyId, n: usize) -> Result<QPoly> {
    family.validate()?;
    let p = classical_poly(family, n)?;
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let v = QPoly::var();
    let nq = qi(n as i64);
    Ok(match family {
        FamilyId::Hermite => {
            // y'' - 2x y' + 2n y
            let t = &d2 - &(&v * &d1).scale(&qi(2));
            &t + &p.scale(&(qi(2) * nq))
        }
        FamilyId::Laguerre { alpha } => {
            // x y'' + (α+1-x) y' + n y
            let lin = QPoly::from_coeffs(vec![alpha + Q::one(), qi(-1)]);
            let t = &(&v * &d2) + &(&lin * &d1);
            &t + &p.scale(&nq)
        }
        FamilyId::Jacobi { alpha, beta } => {
            // (1-x²) y'' + (β-α-(α+β+2)x) y' + n(n+α+β+1) y
            let one_m_x2 = QPoly::from_coeffs(vec![qi(1), qi(0), qi(-1)]);
            let lin = QPoly::from_coeffs(vec![beta - alpha, -(alpha + beta + qi(2))]);
            let ev = nq.clone() * (nq + alpha + beta + Q::one());
            let t = &(&one_m_x2 * &d2) + &(&lin * &d1);
            &t + &p.scale(&ev)
        }
    })
}

/// Evaluates the Rodrigues formula exactly in the prefactored algebra and
/// returns (result, c) with result = c * classical_poly. The paper's
/// conventions give c = 1 for all three families.
pub fn rodrigues_poly(family: &FamilyId, n: usize) -> Result<(QPoly, Q)> {
    family.validate()?;
    let raw = match family {
        FamilyId::Hermite => {
            // (-1)^n e^{x²} d^n/dx^n e^{-x²}
            let mut f = Prefactored::factor_power(Coord::Line, FactorKind::GaussX, qi(-2));
            for _ in 0..n {
                f = f.deriv_x();
            }
            let sign = if n % 2 == 0 { qi(1) } else { qi(-1) };
            f.mul(&Prefactored::factor_power(Coord::Line, FactorKind::GaussX, qi(2)))
                .scale(&sign)
        }
        FamilyId::Laguerre { alpha } => {
            // (1/n!) e^{y} y^{-α} d^n/dy^n (e^{-y} y^{n+α})
            let mut f = Prefactored::factor_power(Coord::HalfLineSq, FactorKind::ExpEta, qi(-1))
                .mul(&Prefactored::factor_power(
                    Coord::HalfLineSq,
                    FactorKind::EtaPow,
                    qi(n as i64) + alpha.clone(),
                ));
            for _ in 0..n {
                f = f.deriv_eta();
            }
            f.mul(&Prefactored::factor_power(Coord::HalfLineSq, FactorKind::ExpEta, qi(1)))
                .mul(&Prefactored::factor_power(
                    Coord::HalfLineSq,
                    FactorKind::EtaPow,
                    -alpha.clone(),
                ))
                .scale(&(Q::one() / factorial(n)))
        }
        FamilyId::Jacobi { alpha, beta } => {
            // ((-1)^n / 2^n n!) (1-y)^{-α}(1+y)^{-β} d^n[(1-y)^{n+α}(1+y)^{n+β}]
            let na = qi(n as i64) + alpha.clone();
            let nb = qi(n as i64) + beta.clone();
            let mut f = Prefactored::factor_power(Coord::Trig, FactorKind::OneMinusEta, na)
                .mul(&Prefactored::factor_power(Coord::Trig, FactorKind::OnePlusEta, nb));
            for _ in 0..n {
                f = f.deriv_eta();
            }
            let mut c = Q::one() / factorial(n);
            for _ in 0..n {
                c /= qi(-2);
            }
            f.mul(&Prefactored::factor_power(Coord::Trig, FactorKind::OneMinusEta, -alpha.clone()))
                .mul(&Prefactored::factor_power(Coord::Trig, FactorKind::OnePlusEta, -beta.clone()))
                .scale(&c)
        }
    };
    for e in raw.exponents() {
        if !e.is_zero() {
            return Err(Error::Invariant("Rodrigues result kept a prefactor".into()));
        }
    }
    let poly = raw.poly_part()?;
    let classical = classical_poly(family, n)?;
    let (q, r) = poly.divrem(&classical);
    if !r.is_zero() || q.degree() != Some(0) {
        return Err(Error::Invariant(
            "Rodrigues polynomial is not proportional to the hypergeometric one".into(),
        ));
    }
    Ok((poly, q.coeff(0)))
}

/// Three-term recurrence coefficients of a family at degree n.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceCoeffs {
    pub a: Q,
    pub b: Q,
    pub c: Q,
}

/// Exact (A_n, B_n, C_n) with y P_n = A_n P_{n+1} + B_n P_n + C_n P_{n-1},
/// obtained by polynomial division against the constructed polynomials.
pub fn recurrence_coeffs(family: &FamilyId, n: usize) -> Result<RecurrenceCoeffs> {
    family.validate()?;
    let pn = classical_poly(family, n)?;
    let pnp = classical_poly(family, n + 1)?;
    let lhs = &QPoly::var() * &pn;
    let a = lhs.leading() / pnp.leading();
    let rem1 = &lhs - &pnp.scale(&a);
    let b = rem1.coeff(n) / pn.leading();
    let rem2 = &rem1 - &pn.scale(&b);
    let c = if n == 0 {
        if !rem2.is_zero() {
            return Err(Error::Invariant("recurrence defect at n = 0".into()));
        }
        Q::zero()
    } else {
        let pnm = classical_poly(family, n - 1)?;
        let c = rem2.coeff(n - 1) / pnm.leading();
        if !(&rem2 - &pnm.scale(&c)).is_zero() {
            return Err(Error::Invariant("three-term recurrence failed exactly".into()));
        }
        c
    };
    Ok(RecurrenceCoeffs { a, b, c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qr;

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn hermite_small_cases() {
        assert_eq!(hermite_poly(0), p(&[1]));
        assert_eq!(hermite_poly(1), p(&[0, 2]));
        assert_eq!(hermite_poly(2), p(&[-2, 0, 4]));
        assert_eq!(hermite_poly(3), p(&[0, -12, 0, 8]));
        assert_eq!(hermite_poly(4), p(&[12, 0, -48, 0, 16]));
    }

    #[test]
    fn hermite_imag_has_positive_coeffs() {
        // i^{-2} H_2(ix) = 4x² + 2
        assert_eq!(hermite_imag(2), p(&[2, 0, 4]));
        assert_eq!(hermite_imag(1), p(&[0, 2]));
        assert_eq!(hermite_imag(3), p(&[0, 12, 0, 8]));
    }

    #[test]
    fn laguerre_degree_one() {
        // L_1^{(α)} = (1+α) - y
        let alpha = qr(1, 3);
        let l = classical_poly(&FamilyId::Laguerre { alpha: alpha.clone() }, 1).unwrap();
        assert_eq!(l, QPoly::from_coeffs(vec![qi(1) + alpha, qi(-1)]));
        // hypergeometric and binomial constructions agree
        for n in 0..6 {
            let a = qr(5, 2);
            let h = classical_poly(&FamilyId::Laguerre { alpha: a.clone() }, n).unwrap();
            assert_eq!(h, laguerre_poly(&a, n));
        }
    }

    #[test]
    fn jacobi_constructions_agree() {
        let (a, b) = (qr(1, 2), qr(5, 2));
        for n in 0..6 {
            let h =
                classical_poly(&FamilyId::Jacobi { alpha: a.clone(), beta: b.clone() }, n).unwrap();
            assert_eq!(h, jacobi_poly(&a, &b, n), "n={n}");
        }
        assert_eq!(
            classical_poly(&FamilyId::Jacobi { alpha: qi(0), beta: qi(0) }, 0).unwrap(),
            p(&[1])
        );
        // Legendre P_1 = y
        assert_eq!(jacobi_poly(&qi(0), &qi(0), 1), p(&[0, 1]));
    }

    #[test]
    fn jacobi_negative_parameters_still_defined() {
        // the binomial form survives parameters the 2F1 sum cannot reach
        let q = jacobi_poly(&qr(-13, 6), &qr(-13, 6), 4);
        assert_eq!(q.degree(), Some(4));
        assert_eq!(q.coeff(0), qr(55, 1152));
        assert!(
            classical_poly(&FamilyId::Jacobi { alpha: qr(-13, 6), beta: qr(-13, 6) }, 4).is_err()
        );
        // known degree degenerations at exceptional negative parameters
        assert_eq!(jacobi_poly(&qr(-5, 2), &qr(-5, 2), 4), QPoly::constant(qr(3, 128)));
        assert!(jacobi_poly(&qi(-3), &qi(-3), 5).is_zero());
    }

    #[test]
    fn differential_equations_hold() {
        assert!(diffeq_residual(&FamilyId::Hermite, 4).unwrap().is_zero());
        assert!(diffeq_residual(&FamilyId::Laguerre { alpha: qr(3, 2) }, 3).unwrap().is_zero());
        assert!(diffeq_residual(&FamilyId::Jacobi { alpha: qr(1, 2), beta: qr(5, 2) }, 2)
            .unwrap()
            .is_zero());
        for n in 0..=12 {
            assert!(diffeq_residual(&FamilyId::Hermite, n).unwrap().is_zero());
            assert!(diffeq_residual(&FamilyId::Laguerre { alpha: qr(7, 3) }, n).unwrap().is_zero());
            assert!(diffeq_residual(&FamilyId::Jacobi { alpha: qr(2, 3), beta: qr(9, 4) }, n)
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn rodrigues_matches_hypergeometric() {
        let (h2, c) = rodrigues_poly(&FamilyId::Hermite, 2).unwrap();
        assert_eq!(h2, p(&[-2, 0, 4]));
        assert_eq!(c, qi(1));
        let (l1, c) = rodrigues_poly(&FamilyId::Laguerre { alpha: qr(1, 2) }, 1).unwrap();
        assert_eq!(l1, QPoly::from_coeffs(vec![qr(3, 2), qi(-1)]));
        assert_eq!(c, qi(1));
        let (j1, c) = rodrigues_poly(&FamilyId::Jacobi { alpha: qi(0), beta: qi(0) }, 1).unwrap();
        assert_eq!(j1, p(&[0, 1]));
        assert_eq!(c, qi(1));
        for n in 0..6 {
            let (_, c) = rodrigues_poly(&FamilyId::Hermite, n).unwrap();
            assert_eq!(c, qi(1));
            let (_, c) = rodrigues_poly(&FamilyId::Laguerre { alpha: qr(7, 5) }, n).unwrap();
            assert_eq!(c, qi(1));
            let (_, c) =
                rodrigues_poly(&FamilyId::Jacobi { alpha: qr(1, 3), beta: qr(3, 4) }, n).unwrap();
            assert_eq!(c, qi(1));
        }
    }

    #[test]
    fn recurrence_closed_forms() {
        // Hermite: A=1/2, B=0, C=n (division oracle; the printed table's
        // C_n=1 belongs to a different normalisation)
        for n in 0..8usize {
            let r = recurrence_coeffs(&FamilyId::Hermite, n).unwrap();
            assert_eq!(r.a, qr(1, 2));
            assert_eq!(r.b, qi(0));
            assert_eq!(r.c, qi(n as i64));
        }
        // Laguerre with α = g - 1/2: A = -(n+1), B = 2n+g+1/2, C = -(n+g-1/2)
        let g = qr(7, 4);
        for n in 0..8usize {
            let r = recurrence_coeffs(&FamilyId::Laguerre { alpha: &g - &qr(1, 2) }, n).unwrap();
            let nq = qi(n as i64);
            assert_eq!(r.a, -(nq.clone() + qi(1)));
            assert_eq!(r.b, qi(2) * nq.clone() + &g + &qr(1, 2));
            if n > 0 {
                assert_eq!(r.c, -(nq + &g - &qr(1, 2)));
            }
        }
    }

    #[test]
    fn jacobi_recurrence_at_zero() {
        // B_0 = (h-g)(g+h-1)/((g+h-1)(g+h+1)) in the g,h parametrisation
        let (g, h) = (qi(1), qi(3));
        let r = recurrence_coeffs(
            &FamilyId::Jacobi { alpha: &g - &qr(1, 2), beta: &h - &qr(1, 2) },
            0,
        )
        .unwrap();
        let expect = (&h - &g) * (&g + &h - qi(1)) / ((&g + &h - qi(1)) * (&g + &h + qi(1)));
        assert_eq!(r.b, expect);
        assert_eq!(r.c, qi(0));
    }

    #[test]
    fn favard_positivity() {
        let fam = FamilyId::Jacobi { alpha: qr(1, 2), beta: qr(5, 2) };
        for n in 1..=12usize {
            let prev = recurrence_coeffs(&fam, n - 1).unwrap();
            let cur = recurrence_coeffs(&fam, n).unwrap();
            assert!((prev.a * cur.c).is_positive(), "A_(n-1) C_n > 0 failed at n={n}");
        }
    }

    #[test]
    fn jacobi_parity() {
        // P_n^{(α,β)}(-y) = (-1)^n P_n^{(β,α)}(y)
        let (a, b) = (qr(2, 3), qr(7, 2));
        for n in 0..=10usize {
            let lhs = jacobi_poly(&a, &b, n).compose(&p(&[0, -1]));
            let mut rhs = jacobi_poly(&b, &a, n);
            if n % 2 == 1 {
                rhs = -&rhs;
            }
            assert_eq!(lhs, rhs, "parity failed at n={n}");
        }
    }

    #[test]
    fn degrees_are_exact() {
        for n in 0..=9 {
            assert_eq!(hermite_poly(n).degree(), Some(n));
            assert_eq!(laguerre_poly(&qr(4, 3), n).degree(), Some(n));
            assert_eq!(jacobi_poly(&qr(1, 5), &qr(2, 7), n).degree(), Some(n));
        }
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(classical_poly(&FamilyId::Laguerre { alpha: qi(-2) }, 1).is_err());
        assert!(classical_poly(&FamilyId::Jacobi { alpha: qi(0), beta: qr(-3, 2) }, 1).is_err());
    }
}
