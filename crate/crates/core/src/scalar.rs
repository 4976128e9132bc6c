//! Coordinate scalar abstraction.
//!
//! Every solver in this crate only copies, subtracts, multiplies and compares
//! input coordinates, so any ordered numeric type works. Floating point types
//! are the common case; signed integers give fully exact arithmetic and are
//! handy in tests.

use core::cmp::Ordering;
use core::fmt::{Debug, Display};

use num_traits::{Num, ToPrimitive};

/// A planar coordinate type.
pub trait Coord:
    Num + Copy + PartialOrd + Debug + Display + ToPrimitive + Send + Sync + 'static
{
    /// `false` for NaN and infinities.
    fn is_finite_coord(self) -> bool;

    /// Relative tolerance used when comparing derived quantities (areas,
    /// side lengths) that went through rounding. Zero for exact types.
    fn rel_tolerance() -> f64;

    /// Total order on finite values.
    #[inline]
    fn cmp_coord(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).expect("coordinates must be finite")
    }

    #[inline]
    fn max_coord(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    #[inline]
    fn min_coord(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Equality up to [`Coord::rel_tolerance`].
    fn approx_eq(self, other: Self) -> bool {
        if self == other {
            return true;
        }
        let tol = Self::rel_tolerance();
        if tol == 0.0 {
            return false;
        }
        match (self.to_f64(), other.to_f64()) {
            (Some(a), Some(b)) => (a - b).abs() <= tol * a.abs().max(b.abs()),
            _ => false,
        }
    }
}

impl Coord for f64 {
    #[inline]
    fn is_finite_coord(self) -> bool {
        self.is_finite()
    }

    fn rel_tolerance() -> f64 {
        1e-12
    }
}

impl Coord for f32 {
    #[inline]
    fn is_finite_coord(self) -> bool {
        self.is_finite()
    }

    fn rel_tolerance() -> f64 {
        1e-5
    }
}

macro_rules! exact_coord {
    ($($t:ty),*) => {$(
        impl Coord for $t {
            #[inline]
            fn is_finite_coord(self) -> bool {
                true
            }

            fn rel_tolerance() -> f64 {
                0.0
            }
        }
    )*};
}

exact_coord!(i32, i64, i128);
