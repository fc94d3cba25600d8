//! Half-integer scalars used as tableau labels.
//!
//! Values are stored as twice their mathematical value, so all arithmetic is
//! exact. A label `p - 1/2` is written with a prime, e.g. `2'` means `3/2`.

use std::fmt;
use std::ops::{Add, Sub};

/// An element of (1/2)Z, stored as its double.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };

    pub fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt { doubled: 2 * n }
    }

    pub fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The integer value, if this is an integer.
    pub fn as_int(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.doubled / 2)
        } else {
            None
        }
    }

    pub fn times_int(self, k: i64) -> HalfInt {
        HalfInt {
            doubled: self.doubled * k,
        }
    }

    /// Parses `"3"` as 3 and `"3'"` as 5/2.
    pub fn parse(s: &str) -> Option<HalfInt> {
        if let Some(body) = s.strip_suffix('\'') {
            let p: i64 = body.parse().ok()?;
            Some(HalfInt::from_doubled(2 * p - 1))
        } else {
            let n: i64 = s.parse().ok()?;
            Some(HalfInt::from_int(n))
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            doubled: self.doubled + rhs.doubled,
        }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            doubled: self.doubled - rhs.doubled,
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}'", (self.doubled + 1) / 2)
        }
    }
}
