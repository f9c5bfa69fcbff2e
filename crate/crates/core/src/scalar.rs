//! The scalar abstraction the polynomial layer is generic over.
//!
//! Coefficient arithmetic only assumes a field with exact equality testing
//! (`BigRational`, `Complex<BigRational>`); `f64` also satisfies the bounds
//! and is used by the numeric layer for cheap evaluation.

use num_traits::{Num, NumAssign, Signed};
use std::fmt;
use std::ops::Neg;

/// Field-like scalar: the coefficient type of [`crate::poly::Poly`].
pub trait Scalar: Num + NumAssign + Neg<Output = Self> + Clone + PartialEq + fmt::Debug {}

impl<T> Scalar for T where T: Num + NumAssign + Neg<Output = T> + Clone + PartialEq + fmt::Debug {}

/// Ordered signed scalar, needed for sign-based algorithms (Sturm chains).
pub trait OrderedScalar: Scalar + Signed + PartialOrd {}

impl<T> OrderedScalar for T where T: Scalar + Signed + PartialOrd {}
