//! Coordinate types accepted by the interval, box, and slot algorithms.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;

/// A coordinate usable as an interval endpoint or slot value.
///
/// Every algorithm in this crate only compares coordinates, so the
/// requirement beyond `num_traits::Num` is a total order. Exact types
/// (integers, rationals) use their `Ord`; floats use IEEE total order,
/// with NaN rejected at construction of intervals and boxes.
pub trait Scalar: num_traits::Num + Copy + PartialOrd + Debug + Display + Send + Sync + 'static {
    fn total_cmp(&self, other: &Self) -> Ordering;

    /// False for values that cannot take part in a total order (NaN).
    fn is_comparable(&self) -> bool {
        true
    }
}

impl Scalar for f64 {
    fn total_cmp(&self, other: &Self) -> Ordering {
        f64::total_cmp(self, other)
    }

    fn is_comparable(&self) -> bool {
        !self.is_nan()
    }
}

impl Scalar for f32 {
    fn total_cmp(&self, other: &Self) -> Ordering {
        f32::total_cmp(self, other)
    }

    fn is_comparable(&self) -> bool {
        !self.is_nan()
    }
}

macro_rules! impl_scalar_ord {
    ($($t:ty),*) => {
        $(impl Scalar for $t {
            fn total_cmp(&self, other: &Self) -> Ordering {
                Ord::cmp(self, other)
            }
        })*
    };
}

impl_scalar_ord!(i32, i64, i128, u32, u64, usize);

impl<I> Scalar for Ratio<I>
where
    I: Integer + Clone + Copy + Debug + Display + Send + Sync + 'static,
{
    fn total_cmp(&self, other: &Self) -> Ordering {
        Ord::cmp(self, other)
    }
}

/// Orders a [`Scalar`] by its total order so it can key ordered collections.
#[derive(Clone, Copy, Debug)]
pub struct Key<T>(pub T);

impl<T: Scalar> PartialEq for Key<T> {
    fn eq(&self, other: &Self) -> bool {
        self.0.total_cmp(&other.0) == Ordering::Equal
    }
}

impl<T: Scalar> Eq for Key<T> {}

impl<T: Scalar> PartialOrd for Key<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for Key<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// `a <= b` under the scalar's total order.
#[inline]
pub(crate) fn le<T: Scalar>(a: T, b: T) -> bool {
    a.total_cmp(&b) != Ordering::Greater
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_keys_compare_exactly() {
        let a = Key(Ratio::new(1i64, 3));
        let b = Key(Ratio::new(2i64, 6));
        assert_eq!(a, b);
        assert!(Key(Ratio::new(1i64, 3)) < Key(Ratio::new(34i64, 100)));
    }

    #[test]
    fn float_keys_follow_total_order() {
        assert!(Key(-0.5f64) < Key(0.25));
        assert!(!f64::NAN.is_comparable());
        assert!(le(1.0f64, 1.0));
        assert!(!le(1.0f64, 0.5));
    }
}
