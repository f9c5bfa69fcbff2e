//! Exact real-root counting on intervals via Sturm chains.
//!
//! No floating point is involved anywhere; endpoints are rationals or
//! infinite, open-interval semantics (roots at finite endpoints are
//! excluded by deflation before counting).

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::OrderedScalar;

/// An endpoint of a (possibly unbounded) open interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Endpoint<T> {
    NegInfinity,
    Finite(T),
    PosInfinity,
}

/// Open interval with rational or infinite endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval<T> {
    pub lo: Endpoint<T>,
    pub hi: Endpoint<T>,
}

impl<T> Interval<T> {
    pub fn new(lo: Endpoint<T>, hi: Endpoint<T>) -> Self {
        Interval { lo, hi }
    }

    pub fn whole_line() -> Self {
        Interval { lo: Endpoint::NegInfinity, hi: Endpoint::PosInfinity }
    }

    pub fn open(a: T, b: T) -> Self {
        Interval { lo: Endpoint::Finite(a), hi: Endpoint::Finite(b) }
    }

    pub fn right_half(a: T) -> Self {
        Interval { lo: Endpoint::Finite(a), hi: Endpoint::PosInfinity }
    }
}

fn sign<T: OrderedScalar>(x: &T) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of `p` at an endpoint: the limit sign for infinite endpoints.
fn sign_at<T: OrderedScalar>(p: &Poly<T>, e: &Endpoint<T>) -> i8 {
    match e {
        Endpoint::Finite(x) => sign(&p.eval(x)),
        Endpoint::PosInfinity => sign(&p.leading()),
        Endpoint::NegInfinity => {
            let s = sign(&p.leading());
            if p.degree().map_or(0, |d| d) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

fn sturm_chain<T: OrderedScalar>(p: &Poly<T>) -> Vec<Poly<T>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(-&r);
    }
}

fn sign_variations<T: OrderedScalar>(chain: &[Poly<T>], e: &Endpoint<T>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let s = sign_at(p, e);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Exact number of distinct real roots of `p` in the open interval.
pub fn real_root_count<T: OrderedScalar>(p: &Poly<T>, interval: &Interval<T>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Usage("root count of the zero polynomial".into()));
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    // Distinct roots only, and finite endpoint roots deflated away so the
    // interval is treated as open.
    let mut q = p.square_free_part();
    for e in [&interval.lo, &interval.hi] {
        if let Endpoint::Finite(x) = e {
            let lin = Poly::from_coeffs(vec![-x.clone(), T::one()]);
            while q.eval(x).is_zero() {
                q = q.div_exact(&lin).expect("root divides");
            }
        }
    }
    if q.degree().map_or(true, |d| d == 0) {
        return Ok(0);
    }
    let chain = sturm_chain(&q);
    let va = sign_variations(&chain, &interval.lo);
    let vb = sign_variations(&chain, &interval.hi);
    Ok(va.saturating_sub(vb))
}
