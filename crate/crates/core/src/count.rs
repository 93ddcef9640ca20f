//! Unsigned count types.
//!
//! Engines are generic over the integer used to store totals and table
//! entries. Intermediate arithmetic is carried out in `i128` and converted
//! back with checked conversions, so a count that does not fit is reported
//! as [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};
use num_traits::{FromPrimitive, PrimInt, ToPrimitive, Unsigned};
use std::fmt::{Debug, Display};
use std::hash::Hash;

/// An unsigned integer usable as a subgraph count.
pub trait Count:
    PrimInt + Unsigned + FromPrimitive + ToPrimitive + Hash + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> Count for T where
    T: PrimInt
        + Unsigned
        + FromPrimitive
        + ToPrimitive
        + Hash
        + Debug
        + Display
        + Default
        + Send
        + Sync
        + 'static
{
}

/// Converts a signed intermediate into a count.
pub fn to_count<C: Count>(x: i128) -> Result<C> {
    if x < 0 {
        return Err(Error::NegativeResult(x));
    }
    C::from_i128(x).ok_or(Error::Overflow)
}

/// Widens a count into the signed intermediate type.
pub fn widen<C: Count>(c: C) -> i128 {
    // Every supported count type up to u128 fits; u128 values above i128::MAX
    // cannot arise because they are produced by `to_count`.
    c.to_i128().expect("count exceeds i128 range")
}

/// `n choose 2` for non-negative `n`, zero otherwise.
pub(crate) fn choose2(n: i128) -> i128 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// `n choose 3` for non-negative `n`, zero otherwise.
pub(crate) fn choose3(n: i128) -> i128 {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}
