//! Exact integer geometry: points, orientation and integer square roots.
//!
//! Coordinates are `i64`; every product of two coordinate differences is
//! formed in `i128`, so the predicates stay exact for any drawing whose
//! coordinates fit in 62 bits.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::ops::{Add, Mul, Sub};

/// A point of the integer grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn checked_add(self, other: Point) -> Option<Point> {
        Some(Point { x: self.x.checked_add(other.x)?, y: self.y.checked_add(other.y)? })
    }

    pub fn checked_sub(self, other: Point) -> Option<Point> {
        Some(Point { x: self.x.checked_sub(other.x)?, y: self.y.checked_sub(other.y)? })
    }

    pub fn checked_scale(self, k: i64) -> Option<Point> {
        Some(Point { x: self.x.checked_mul(k)?, y: self.y.checked_mul(k)? })
    }

    /// Rotation by 90 degrees counterclockwise: (x, y) -> (-y, x).
    pub fn rot90(self) -> Point {
        Point { x: -self.y, y: self.x }
    }

    pub fn norm_sq(self) -> i128 {
        let (x, y) = (self.x as i128, self.y as i128);
        x * x + y * y
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point { x: self.x + o.x, y: self.y + o.y }
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point { x: self.x - o.x, y: self.y - o.y }
    }
}

impl Mul<i64> for Point {
    type Output = Point;
    fn mul(self, k: i64) -> Point {
        Point { x: self.x * k, y: self.y * k }
    }
}

/// Cross product `a × b` of two direction vectors.
pub fn cross(a: Point, b: Point) -> i128 {
    a.x as i128 * b.y as i128 - a.y as i128 * b.x as i128
}

pub fn dot(a: Point, b: Point) -> i128 {
    a.x as i128 * b.x as i128 + a.y as i128 * b.y as i128
}

/// Sign of the turn `a -> b -> c`: positive for a left (counterclockwise) turn.
pub fn orient(a: Point, b: Point, c: Point) -> i128 {
    let ab = (b.x as i128 - a.x as i128, b.y as i128 - a.y as i128);
    let ac = (c.x as i128 - a.x as i128, c.y as i128 - a.y as i128);
    ab.0 * ac.1 - ab.1 * ac.0
}

pub fn orient_sign(a: Point, b: Point, c: Point) -> i8 {
    match orient(a, b, c).cmp(&0) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Floor of the square root of `v`.
pub fn isqrt_u128(v: u128) -> u128 {
    if v < 2 {
        return v;
    }
    // Float seed, then Newton correction to the exact floor.
    let mut r = (v as f64).sqrt() as u128;
    while r.checked_mul(r).is_none_or(|sq| sq > v) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= v) {
        r += 1;
    }
    r
}

/// `Some(r)` when `v = r²`.
pub fn exact_sqrt(v: u128) -> Option<u128> {
    let r = isqrt_u128(v);
    (r * r == v).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn orientation_signs() {
        let o = Point::ORIGIN;
        assert_eq!(orient_sign(o, Point::new(1, 0), Point::new(0, 1)), 1);
        assert_eq!(orient_sign(o, Point::new(0, 1), Point::new(1, 0)), -1);
        assert_eq!(orient_sign(o, Point::new(3, 4), Point::new(6, 8)), 0);
    }

    #[test]
    fn rotation_is_quarter_turn() {
        let p = Point::new(3, 4);
        assert_eq!(p.rot90(), Point::new(-4, 3));
        assert_eq!(p.rot90().rot90().rot90().rot90(), p);
    }

    #[test]
    fn sqrt_of_small_values() {
        assert_eq!(exact_sqrt(0), Some(0));
        assert_eq!(exact_sqrt(25), Some(5));
        assert_eq!(exact_sqrt(400), Some(20));
        assert_eq!(exact_sqrt(2), None);
        assert_eq!(isqrt_u128(u128::MAX), u64::MAX as u128);
    }

    proptest! {
        #[test]
        fn isqrt_brackets_value(v in any::<u128>()) {
            let r = isqrt_u128(v);
            prop_assert!(r * r <= v);
            prop_assert!((r + 1).checked_mul(r + 1).is_none_or(|s| s > v));
        }

        #[test]
        fn perfect_squares_recognised(r in 0u64..u64::MAX) {
            let r = r as u128;
            prop_assert_eq!(exact_sqrt(r * r), Some(r));
        }
    }
}
