//! Prefactored functions: (rational function of the sinusoidal coordinate)
//! times a product of fixed boundary/exponential factors with exact rational
//! exponents.
//!
//! Each coordinate system fixes a closed factor basis, so the algebra is
//! closed under multiplication, division, d/dη and d/dx, and the map from
//! (rational part, exponents) to the represented function is injective once
//! the rational part is kept free of the power-type factor polynomials.

use crate::error::{Error, Result};
use crate::rootcount::Interval;
use crate::wronskian::ratfunc_matrix_det;
use crate::{qi, qr, Q, QPoly, QRatFunc};
use num_traits::{Signed, ToPrimitive, Zero};

/// Sinusoidal coordinate systems. Each fixes η(x), its physical interval and
/// the factor basis of the prefactored algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Coord {
    /// η = x on (-∞, ∞); factors e^{x²/2}, e^{x}.
    Line,
    /// η = x² on (0, ∞); factors e^{η}, η.
    HalfLineSq,
    /// η = cos 2x on x ∈ (0, π/2), η ∈ (-1, 1); factors 1-η, 1+η.
    Trig,
    /// η = tanh x on (-∞, ∞), η ∈ (-1, 1); factors 1-η, 1+η.
    Tanh,
}

/// One multiplicative factor of the basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FactorKind {
    /// e^{x²/2} (Line)
    GaussX,
    /// e^{x} (Line)
    ExpX,
    /// e^{η} (HalfLineSq)
    ExpEta,
    /// η (HalfLineSq)
    EtaPow,
    /// 1 - η (Trig, Tanh)
    OneMinusEta,
    /// 1 + η (Trig, Tanh)
    OnePlusEta,
}

impl FactorKind {
    /// d/dη of log F, per unit exponent.
    fn dlog(self) -> QRatFunc {
        let var = QPoly::var();
        match self {
            FactorKind::GaussX => QRatFunc::from_poly(var),
            FactorKind::ExpX | FactorKind::ExpEta => QRatFunc::one(),
            FactorKind::EtaPow => QRatFunc::new(QPoly::one(), var),
            FactorKind::OneMinusEta => {
                QRatFunc::new(QPoly::constant(qi(-1)), QPoly::from_coeffs(vec![qi(1), qi(-1)]))
            }
            FactorKind::OnePlusEta => {
                QRatFunc::new(QPoly::one(), QPoly::from_coeffs(vec![qi(1), qi(1)]))
            }
        }
    }

    /// The factor as a polynomial in η, for the power-type factors only.
    fn power_poly(self) -> Option<QPoly> {
        match self {
            FactorKind::EtaPow => Some(QPoly::var()),
            FactorKind::OneMinusEta => Some(QPoly::from_coeffs(vec![qi(1), qi(-1)])),
            FactorKind::OnePlusEta => Some(QPoly::from_coeffs(vec![qi(1), qi(1)])),
            _ => None,
        }
    }

    /// log F at a physical point x (factors are positive on the open interval).
    fn log_at(self, x: f64) -> f64 {
        fn softplus(t: f64) -> f64 {
            if t > 35.0 {
                t
            } else {
                t.exp().ln_1p()
            }
        }
        match self {
            FactorKind::GaussX => x * x / 2.0,
            FactorKind::ExpX => x,
            FactorKind::ExpEta => x * x,
            FactorKind::EtaPow => 2.0 * x.abs().ln(),
            FactorKind::OneMinusEta => std::f64::consts::LN_2 - softplus(2.0 * x),
            FactorKind::OnePlusEta => std::f64::consts::LN_2 - softplus(-2.0 * x),
        }
    }
}

/// log(1 ∓ cos 2x) for the trigonometric coordinate.
fn trig_factor_log(kind: FactorKind, x: f64) -> f64 {
    match kind {
        FactorKind::OneMinusEta => std::f64::consts::LN_2 + 2.0 * x.sin().abs().ln(),
        FactorKind::OnePlusEta => std::f64::consts::LN_2 + 2.0 * x.cos().abs().ln(),
        _ => unreachable!(),
    }
}

impl Coord {
    pub fn factors(self) -> &'static [FactorKind] {
        match self {
            Coord::Line => &[FactorKind::GaussX, FactorKind::ExpX],
            Coord::HalfLineSq => &[FactorKind::ExpEta, FactorKind::EtaPow],
            Coord::Trig | Coord::Tanh => &[FactorKind::OneMinusEta, FactorKind::OnePlusEta],
        }
    }

    /// (η')² as a polynomial in η.
    pub fn eta_prime_sq(self) -> QPoly {
        match self {
            Coord::Line => QPoly::one(),
            Coord::HalfLineSq => QPoly::monomial(qi(4), 1),
            Coord::Trig => QPoly::from_coeffs(vec![qi(4), qi(0), qi(-4)]),
            Coord::Tanh => QPoly::from_coeffs(vec![qi(1), qi(0), qi(-1)]).pow(2),
        }
    }

    /// η'' as a polynomial in η.
    pub fn eta_dprime(self) -> QPoly {
        match self {
            Coord::Line => QPoly::zero(),
            Coord::HalfLineSq => QPoly::constant(qi(2)),
            Coord::Trig => QPoly::monomial(qi(-4), 1),
            Coord::Tanh => {
                // -2η(1-η²)
                QPoly::from_coeffs(vec![qi(0), qi(-2), qi(0), qi(2)])
            }
        }
    }

    /// η' as an element of the prefactored algebra.
    pub fn eta_prime(self) -> Prefactored {
        match self {
            Coord::Line => Prefactored::one(self),
            Coord::HalfLineSq => Prefactored {
                coord: self,
                rat: QRatFunc::constant(qi(2)),
                exps: vec![qi(0), qr(1, 2)],
            },
            Coord::Trig => Prefactored {
                coord: self,
                rat: QRatFunc::constant(qi(-2)),
                exps: vec![qr(1, 2), qr(1, 2)],
            },
            Coord::Tanh => Prefactored {
                coord: self,
                rat: QRatFunc::one(),
                exps: vec![qi(1), qi(1)],
            },
        }
    }

    /// Physical interval in η, for root counting.
    pub fn eta_interval(self) -> Interval<Q> {
        match self {
            Coord::Line => Interval::whole_line(),
            Coord::HalfLineSq => Interval::right_half(qi(0)),
            Coord::Trig | Coord::Tanh => Interval::open(qi(-1), qi(1)),
        }
    }

    pub fn eta_of_x(self, x: f64) -> f64 {
        match self {
            Coord::Line => x,
            Coord::HalfLineSq => x * x,
            Coord::Trig => (2.0 * x).cos(),
            Coord::Tanh => x.tanh(),
        }
    }

    /// Physical interval in x as floats (for grids); infinite ends as ±∞.
    pub fn x_interval(self) -> (f64, f64) {
        match self {
            Coord::Line | Coord::Tanh => (f64::NEG_INFINITY, f64::INFINITY),
            Coord::HalfLineSq => (0.0, f64::INFINITY),
            Coord::Trig => (0.0, std::f64::consts::FRAC_PI_2),
        }
    }
}

/// Boundary of the physical x-interval.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Lower,
    Upper,
}

/// Local square-integrability at one boundary; `None` marks the degenerate
/// power exponent -1/2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryIntegrability {
    pub self_sq: Option<bool>,
    pub recip_sq: Option<bool>,
}

#[derive(Clone, PartialEq)]
pub struct Prefactored {
    coord: Coord,
    rat: QRatFunc,
    exps: Vec<Q>,
}

impl std::fmt::Debug for Prefactored {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Prefactored({:?}, rat={:?}, exps={:?})", self.coord, self.rat, self.exps)
    }
}

impl Prefactored {
    pub fn one(coord: Coord) -> Self {
        Prefactored {
            coord,
            rat: QRatFunc::one(),
            exps: vec![Q::zero(); coord.factors().len()],
        }
    }

    pub fn from_rat(coord: Coord, rat: QRatFunc) -> Self {
        let mut f = Prefactored {
            coord,
            rat,
            exps: vec![Q::zero(); coord.factors().len()],
        };
        f.canonicalize();
        f
    }

    pub fn from_poly(coord: Coord, p: QPoly) -> Self {
        Self::from_rat(coord, QRatFunc::from_poly(p))
    }

    pub fn with_exponents(coord: Coord, rat: QRatFunc, exps: Vec<Q>) -> Self {
        assert_eq!(exps.len(), coord.factors().len());
        let mut f = Prefactored { coord, rat, exps };
        f.canonicalize();
        f
    }

    /// Builds `∏ F_i^{e_i}` with rational part 1.
    pub fn factor_power(coord: Coord, kind: FactorKind, e: Q) -> Self {
        let idx = coord
            .factors()
            .iter()
            .position(|&k| k == kind)
            .expect("factor not in this coordinate basis");
        let mut exps = vec![Q::zero(); coord.factors().len()];
        exps[idx] = e;
        Prefactored { coord, rat: QRatFunc::one(), exps }
    }

    /// Moves all powers of the power-type factor polynomials out of the
    /// rational part and into the exponents.
    fn canonicalize(&mut self) {
        if self.rat.is_zero() {
            for e in &mut self.exps {
                *e = Q::zero();
            }
            return;
        }
        for (i, kind) in self.coord.factors().iter().enumerate() {
            let Some(fp) = kind.power_poly() else { continue };
            let (mn, num) = self.rat.num().extract_power(&fp);
            let (md, den) = self.rat.den().extract_power(&fp);
            if mn > 0 || md > 0 {
                self.exps[i] += qi(mn as i64) - qi(md as i64);
                self.rat = QRatFunc::new(num, den);
            }
        }
    }

    pub fn coord(&self) -> Coord {
        self.coord
    }

    pub fn rat(&self) -> &QRatFunc {
        &self.rat
    }

    pub fn exponent(&self, kind: FactorKind) -> Q {
        self.coord
            .factors()
            .iter()
            .position(|&k| k == kind)
            .map(|i| self.exps[i].clone())
            .unwrap_or_else(Q::zero)
    }

    pub fn exponents(&self) -> &[Q] {
        &self.exps
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero()
    }

    /// The rational part as a polynomial; error if a true denominator remains.
    pub fn poly_part(&self) -> Result<QPoly> {
        self.rat
            .as_poly()
            .cloned()
            .ok_or_else(|| Error::Invariant("expected polynomial part, found denominator".into()))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.coord, rhs.coord, "mixed coordinate systems");
        if self.is_zero() || rhs.is_zero() {
            return Prefactored {
                coord: self.coord,
                rat: QRatFunc::zero(),
                exps: vec![Q::zero(); self.exps.len()],
            };
        }
        let mut f = Prefactored {
            coord: self.coord,
            rat: &self.rat * &rhs.rat,
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        };
        f.canonicalize();
        f
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Prefactored {
            coord: self.coord,
            rat: self.rat.recip(),
            exps: self.exps.iter().map(|e| -e.clone()).collect(),
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.recip())
    }

    pub fn scale(&self, c: &Q) -> Self {
        Prefactored {
            coord: self.coord,
            rat: &self.rat * &QRatFunc::constant(c.clone()),
            exps: if c.is_zero() {
                vec![Q::zero(); self.exps.len()]
            } else {
                self.exps.clone()
            },
        }
    }

    pub fn pow_int(&self, n: i64) -> Self {
        if n == 0 {
            return Prefactored::one(self.coord);
        }
        let base = if n > 0 { self.clone() } else { self.recip() };
        let mut acc = Prefactored::one(self.coord);
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Rewrites `self` and `rhs` over common exponents. Integer exponent
    /// differences of power factors are folded into the rational parts;
    /// transcendental factors must match exactly.
    fn align(&self, rhs: &Self) -> Result<(QRatFunc, QRatFunc, Vec<Q>)> {
        assert_eq!(self.coord, rhs.coord, "mixed coordinate systems");
        if self.is_zero() {
            return Ok((QRatFunc::zero(), rhs.rat.clone(), rhs.exps.clone()));
        }
        if rhs.is_zero() {
            return Ok((self.rat.clone(), QRatFunc::zero(), self.exps.clone()));
        }
        let mut ra = self.rat.clone();
        let mut rb = rhs.rat.clone();
        let mut exps = Vec::with_capacity(self.exps.len());
        for (i, kind) in self.coord.factors().iter().enumerate() {
            let (ea, eb) = (&self.exps[i], &rhs.exps[i]);
            if ea == eb {
                exps.push(ea.clone());
                continue;
            }
            let diff = ea - eb;
            let Some(fp) = kind.power_poly() else {
                return Err(Error::Invariant(format!(
                    "incompatible transcendental exponents for {kind:?}: {ea} vs {eb}"
                )));
            };
            if !diff.is_integer() {
                return Err(Error::Invariant(format!(
                    "non-integer exponent gap for {kind:?}: {ea} vs {eb}"
                )));
            }
            let d = diff.to_integer().to_i64().expect("small exponent gap");
            let fr = QRatFunc::from_poly(fp);
            let common = if d > 0 { eb.clone() } else { ea.clone() };
            if d > 0 {
                ra = &ra * &fr.pow(d as usize);
            } else {
                rb = &rb * &fr.pow((-d) as usize);
            }
            exps.push(common);
        }
        Ok((ra, rb, exps))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        let (ra, rb, exps) = self.align(rhs)?;
        let mut f = Prefactored { coord: self.coord, rat: &ra + &rb, exps };
        f.canonicalize();
        Ok(f)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.scale(&qi(-1)))
    }

    /// Exact equality as represented functions.
    pub fn equals(&self, rhs: &Self) -> bool {
        if self.is_zero() || rhs.is_zero() {
            return self.is_zero() && rhs.is_zero();
        }
        match self.align(rhs) {
            Ok((ra, rb, _)) => ra == rb,
            Err(_) => false,
        }
    }

    /// If `self = c * rhs` for a rational constant, returns `c`.
    pub fn proportionality(&self, rhs: &Self) -> Option<Q> {
        if rhs.is_zero() {
            return self.is_zero().then(Q::zero);
        }
        if self.is_zero() {
            return Some(Q::zero());
        }
        let (ra, rb, _) = self.align(rhs).ok()?;
        let ratio = &ra / &rb;
        let p = ratio.as_poly()?;
        (p.degree() == Some(0)).then(|| p.coeff(0))
    }

    /// Σ e_i · dlog F_i, the logarithmic derivative of the pure factor part.
    fn factor_dlog(&self) -> QRatFunc {
        let mut s = QRatFunc::zero();
        for (i, kind) in self.coord.factors().iter().enumerate() {
            if self.exps[i].is_zero() {
                continue;
            }
            s = &s + &(&QRatFunc::constant(self.exps[i].clone()) * &kind.dlog());
        }
        s
    }

    /// d/dη in the prefactored algebra.
    pub fn deriv_eta(&self) -> Self {
        let mut f = Prefactored {
            coord: self.coord,
            rat: &self.rat.derivative() + &(&self.rat * &self.factor_dlog()),
            exps: self.exps.clone(),
        };
        f.canonicalize();
        f
    }

    /// d/dx = η'(x) d/dη.
    pub fn deriv_x(&self) -> Self {
        self.coord.eta_prime().mul(&self.deriv_eta())
    }

    /// d/dη log f as a rational function of η.
    pub fn log_deriv_eta(&self) -> QRatFunc {
        assert!(!self.is_zero(), "log of zero");
        &(&self.rat.derivative() / &self.rat) + &self.factor_dlog()
    }

    /// -2 ∂²_x log f, exactly, as a rational function of η.
    pub fn neg_two_dlog_xx(&self) -> QRatFunc {
        let l = self.log_deriv_eta();
        let etapp = QRatFunc::from_poly(self.coord.eta_dprime());
        let etap2 = QRatFunc::from_poly(self.coord.eta_prime_sq());
        let second = &(&etapp * &l) + &(&etap2 * &l.derivative());
        &QRatFunc::constant(qi(-2)) * &second
    }

    /// Applies the Schrödinger operator `-d²/dx² + U(η)`.
    pub fn apply_hamiltonian(&self, u: &QRatFunc) -> Result<Self> {
        let minus_dd = self.deriv_x().deriv_x().scale(&qi(-1));
        let pot = Prefactored {
            coord: self.coord,
            rat: &self.rat * u,
            exps: self.exps.clone(),
        };
        let mut pot = pot;
        pot.canonicalize();
        minus_dd.add(&pot)
    }

    /// Residual of `(H - E) f` for `H = -d²/dx² + U(η)`; zero iff eigenpair.
    pub fn schrodinger_residual(&self, u: &QRatFunc, e: &Q) -> Result<Self> {
        self.apply_hamiltonian(u)?.sub(&self.scale(e))
    }

    /// Wronskian in the variable η. Common prefactors per column are stripped
    /// by the covariant-derivative rule, the residual rational determinant is
    /// computed exactly.
    pub fn wronskian_eta(fs: &[Self]) -> Result<Self> {
        if fs.is_empty() {
            return Err(Error::Usage("Wronskian of an empty sequence".into()));
        }
        let coord = fs[0].coord;
        if fs.iter().any(|f| f.coord != coord) {
            return Err(Error::Usage("incompatible factor bases in Wronskian".into()));
        }
        let n = fs.len();
        // column k, row j: covariant derivative (d/dη + S_k)^j applied to rat_k
        let mut mat: Vec<Vec<QRatFunc>> = vec![Vec::with_capacity(n); n];
        for f in fs {
            let s = f.factor_dlog();
            let mut r = f.rat.clone();
            for row in mat.iter_mut() {
                row.push(r.clone());
                r = &r.derivative() + &(&r * &s);
            }
        }
        let det = ratfunc_matrix_det(&mat);
        let mut exps = vec![Q::zero(); coord.factors().len()];
        for f in fs {
            for (e, fe) in exps.iter_mut().zip(&f.exps) {
                *e += fe.clone();
            }
        }
        let mut out = Prefactored { coord, rat: det, exps };
        out.canonicalize();
        Ok(out)
    }

    /// Wronskian in the physical variable x:
    /// `W_x[f_1..f_n] = (η')^{n(n-1)/2} W_η[f_1..f_n]`.
    pub fn wronskian_x(fs: &[Self]) -> Result<Self> {
        let weta = Self::wronskian_eta(fs)?;
        let n = fs.len() as i64;
        let power = n * (n - 1) / 2;
        Ok(fs[0].coord.eta_prime().pow_int(power).mul(&weta))
    }

    /// Square-integrability of f and 1/f near one boundary, decided from the
    /// factor exponents (power boundaries: exponent a integrable iff 2a > -1;
    /// exponential boundaries: sign of the growth rate).
    pub fn boundary_integrability(&self, side: Side) -> BoundaryIntegrability {
        assert!(!self.is_zero());
        let power = |rho: Q| -> BoundaryIntegrability {
            let half = qr(-1, 2);
            let judge = |r: Q| -> Option<bool> {
                if r == half {
                    None
                } else {
                    Some(r > half)
                }
            };
            BoundaryIntegrability { self_sq: judge(rho.clone()), recip_sq: judge(-rho) }
        };
        // growth rate γ at an exponential boundary, with the polynomial degree
        // for tie-breaking at γ = 0
        let exp_type = |gamma: Q, deg: i64, recip_deg_helps: bool| -> BoundaryIntegrability {
            let (s, r) = if gamma.is_positive() {
                (false, true)
            } else if gamma.is_negative() {
                (true, false)
            } else {
                (false, recip_deg_helps && deg >= 1)
            };
            BoundaryIntegrability { self_sq: Some(s), recip_sq: Some(r) }
        };
        let num_deg = self.rat.num().degree().unwrap_or(0) as i64;
        match (self.coord, side) {
            (Coord::Line, s) => {
                let sign = if s == Side::Upper { qi(1) } else { qi(-1) };
                let g = self.exponent(FactorKind::GaussX);
                let lin = self.exponent(FactorKind::ExpX) * sign;
                let gamma = if !g.is_zero() { g } else { lin };
                exp_type(gamma, num_deg, true)
            }
            (Coord::HalfLineSq, Side::Lower) => {
                // x-exponent is 2·(η-power)
                power(self.exponent(FactorKind::EtaPow) * qi(2))
            }
            (Coord::HalfLineSq, Side::Upper) => {
                exp_type(self.exponent(FactorKind::ExpEta), num_deg, true)
            }
            (Coord::Trig, Side::Lower) => power(self.exponent(FactorKind::OneMinusEta) * qi(2)),
            (Coord::Trig, Side::Upper) => power(self.exponent(FactorKind::OnePlusEta) * qi(2)),
            (Coord::Tanh, Side::Upper) => {
                // x → +∞: 1-η ~ 2e^{-2x}; growth rate Δ⁺ = -2a, integrable iff Δ⁺ < 0
                exp_type(self.exponent(FactorKind::OneMinusEta) * qi(-2), 0, false)
            }
            (Coord::Tanh, Side::Lower) => {
                // x → -∞: 1+η ~ 2e^{2x}; f ~ e^{Δ⁻ x}, integrable iff Δ⁻ > 0
                exp_type(self.exponent(FactorKind::OnePlusEta) * qi(-2), 0, false)
            }
        }
    }

    /// Asymptotic x-growth exponents (Δ⁻, Δ⁺) for the Tanh coordinate.
    pub fn tanh_growth_exponents(&self) -> (Q, Q) {
        assert_eq!(self.coord, Coord::Tanh);
        let dplus = self.exponent(FactorKind::OneMinusEta) * qi(-2);
        let dminus = self.exponent(FactorKind::OnePlusEta) * qi(2);
        (dminus, dplus)
    }

    /// Exponent-safe evaluation: returns (value, flagged). `flagged` marks a
    /// pole of the rational part.
    pub fn eval_x(&self, x: f64) -> (f64, bool) {
        if self.is_zero() {
            return (0.0, false);
        }
        let eta = self.coord.eta_of_x(x);
        let num = self.rat.num().map(q_to_f64).eval(&eta);
        let den = self.rat.den().map(q_to_f64).eval(&eta);
        if den == 0.0 || !den.is_finite() || !num.is_finite() {
            return (f64::NAN, true);
        }
        let ratio = num / den;
        let mut log_mag = ratio.abs().ln();
        for (i, kind) in self.coord.factors().iter().enumerate() {
            if self.exps[i].is_zero() {
                continue;
            }
            let lf = if self.coord == Coord::Trig {
                trig_factor_log(*kind, x)
            } else {
                kind.log_at(x)
            };
            log_mag += q_to_f64(&self.exps[i]) * lf;
        }
        if ratio == 0.0 {
            return (0.0, false);
        }
        let sign = ratio.signum();
        if log_mag > 709.0 {
            (sign * f64::INFINITY, true)
        } else {
            (sign * log_mag.exp(), false)
        }
    }
}

pub fn q_to_f64(q: &Q) -> f64 {
    // BigRational::to_f64 handles magnitudes beyond i64 correctly
    q.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> QPoly {
        QPoly::from_coeffs(cs.iter().map(|&c| qi(c)).collect())
    }

    #[test]
    fn canonical_form_extracts_power_factors() {
        // η² (1-η) in Tanh coords has no EtaPow factor; in HalfLineSq,
        // η²(3+η) splits as η² · (3+η)
        let f = Prefactored::from_poly(Coord::HalfLineSq, &poly(&[0, 0, 3]) * &poly(&[1, 0, 1]));
        assert_eq!(f.exponent(FactorKind::EtaPow), qi(2));
        assert_eq!(f.rat().num(), &(&poly(&[3]) * &poly(&[1, 0, 1])));
    }

    #[test]
    fn derivative_of_half_power() {
        // d/dη η^{1/2} = (1/2) η^{-1/2}
        let f = Prefactored::factor_power(Coord::HalfLineSq, FactorKind::EtaPow, qr(1, 2));
        let d = f.deriv_eta();
        assert_eq!(d.exponent(FactorKind::EtaPow), qr(-1, 2));
        assert_eq!(d.rat().as_poly().unwrap(), &poly(&[1]).scale(&qr(1, 2)));
    }

    #[test]
    fn gaussian_ground_state_derivative() {
        // f = e^{-x²/2}: f' = -x f
        let f = Prefactored::factor_power(Coord::Line, FactorKind::GaussX, qi(-1));
        let d = f.deriv_x();
        let expect = f.mul(&Prefactored::from_poly(Coord::Line, poly(&[0, -1])));
        assert!(d.equals(&expect));
    }

    #[test]
    fn wronskian_of_exponentials_is_vandermonde() {
        // W[e^x, e^{2x}](x) = e^{3x}
        let f1 = Prefactored::factor_power(Coord::Line, FactorKind::ExpX, qi(1));
        let f2 = Prefactored::factor_power(Coord::Line, FactorKind::ExpX, qi(2));
        let w = Prefactored::wronskian_x(&[f1, f2]).unwrap();
        let expect = Prefactored::factor_power(Coord::Line, FactorKind::ExpX, qi(3));
        assert!(w.equals(&expect));
    }

    #[test]
    fn wronskian_single_entry_unchanged() {
        let g = Prefactored::factor_power(Coord::HalfLineSq, FactorKind::ExpEta, qi(1));
        let f = g.mul(&Prefactored::from_poly(Coord::HalfLineSq, poly(&[1, 2])));
        let w = Prefactored::wronskian_x(&[f.clone()]).unwrap();
        assert!(w.equals(&f));
    }

    #[test]
    fn common_prefactor_strips() {
        // W_η[e^η ξ1, e^η ξ2] = e^{2η} W_η[ξ1, ξ2]
        let e = Prefactored::factor_power(Coord::HalfLineSq, FactorKind::ExpEta, qi(1));
        let xi1 = Prefactored::from_poly(Coord::HalfLineSq, poly(&[1, 1]));
        let xi2 = Prefactored::from_poly(Coord::HalfLineSq, poly(&[2, 0, 5]));
        let lhs = Prefactored::wronskian_eta(&[e.mul(&xi1), e.mul(&xi2)]).unwrap();
        let wpoly = crate::wronskian::poly_wronskian(&[poly(&[1, 1]), poly(&[2, 0, 5])]).unwrap();
        let rhs = Prefactored::factor_power(Coord::HalfLineSq, FactorKind::ExpEta, qi(2))
            .mul(&Prefactored::from_poly(Coord::HalfLineSq, wpoly));
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn harmonic_ground_state_schrodinger() {
        // (-d²/dx² + x² - 1) e^{-x²/2} = 0
        let f = Prefactored::factor_power(Coord::Line, FactorKind::GaussX, qi(-1));
        let u = QRatFunc::from_poly(poly(&[-1, 0, 1]));
        let r = f.schrodinger_residual(&u, &qi(0)).unwrap();
        assert!(r.is_zero(), "residual {r:?}");
    }

    #[test]
    fn eval_matches_closed_form() {
        // e^{-x²/2} at x = 1
        let f = Prefactored::factor_power(Coord::Line, FactorKind::GaussX, qi(-1));
        let (v, flag) = f.eval_x(1.0);
        assert!(!flag);
        assert!((v - (-0.5f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn boundary_classification_examples() {
        // L1-type seed: e^{x²/2} x^g ξ with g = 2 (HalfLineSq: ExpEta^{1/2}, η^{1})
        let f = Prefactored::with_exponents(
            Coord::HalfLineSq,
            QRatFunc::from_poly(poly(&[3, 1])),
            vec![qr(1, 2), qi(1)],
        );
        let lo = f.boundary_integrability(Side::Lower);
        let hi = f.boundary_integrability(Side::Upper);
        assert_eq!(lo.self_sq, Some(true));
        assert_eq!(lo.recip_sq, Some(false));
        assert_eq!(hi.self_sq, Some(false));
        assert_eq!(hi.recip_sq, Some(true));
    }

    #[test]
    fn proportionality_detects_constants() {
        let a = Prefactored::from_poly(Coord::Trig, poly(&[2, 4]));
        let b = Prefactored::from_poly(Coord::Trig, poly(&[1, 2]));
        assert_eq!(a.proportionality(&b), Some(qi(2)));
        let c = Prefactored::from_poly(Coord::Trig, poly(&[1, 3]));
        assert_eq!(a.proportionality(&c), None);
    }
}
