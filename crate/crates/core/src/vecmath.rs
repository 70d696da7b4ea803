//! Small fixed-size vector and matrix types.
//!
//! Everything here is `f64`, `Copy` and pure. `Vec3` doubles as an RGB color
//! with channels in `[0, 1]`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

/// Returned when normalizing a vector with no direction.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("cannot normalize a zero-length or non-finite vector")]
pub struct ZeroLengthError;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);
    pub const ONE: Vec3 = Vec3::new(1.0, 1.0, 1.0);
    pub const X: Vec3 = Vec3::new(1.0, 0.0, 0.0);
    pub const Y: Vec3 = Vec3::new(0.0, 1.0, 0.0);
    pub const Z: Vec3 = Vec3::new(0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    #[inline]
    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Right-handed cross product.
    #[inline]
    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    #[inline]
    pub fn length_squared(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn length(self) -> f64 {
        self.length_squared().sqrt()
    }

    /// Unit vector in the direction of `self`.
    ///
    /// Fails for the zero vector and for anything whose length is not a
    /// finite positive number, so a NaN never leaks out of here.
    pub fn normalize(self) -> Result<Vec3, ZeroLengthError> {
        let len = self.length();
        if len > 0.0 && len.is_finite() {
            Ok(self / len)
        } else {
            Err(ZeroLengthError)
        }
    }

    #[inline]
    pub fn scale(self, s: f64) -> Vec3 {
        Vec3::new(s * self.x, s * self.y, s * self.z)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for Vec3 {
    fn from(a: [f64; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

macro_rules! componentwise_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Vec3 {
            type Output = Vec3;

            #[inline]
            fn $method(self, rhs: Vec3) -> Vec3 {
                Vec3::new(self.x $op rhs.x, self.y $op rhs.y, self.z $op rhs.z)
            }
        }
    };
}

componentwise_op!(Add, add, +);
componentwise_op!(Sub, sub, -);
componentwise_op!(Mul, mul, *);
// Division by a zero component yields an infinity; only `normalize` feeds geometry.
componentwise_op!(Div, div, /);

impl Neg for Vec3 {
    type Output = Vec3;

    #[inline]
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;

    #[inline]
    fn mul(self, s: f64) -> Vec3 {
        self.scale(s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;

    #[inline]
    fn mul(self, v: Vec3) -> Vec3 {
        v.scale(self)
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;

    #[inline]
    fn div(self, s: f64) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

/// Two-component vector. With integer components it holds image resolutions
/// and pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Vec2<T> {
    pub x: T,
    pub y: T,
}

impl<T> Vec2<T> {
    pub const fn new(x: T, y: T) -> Self {
        Vec2 { x, y }
    }
}

macro_rules! vec2_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<T: $trait<Output = T>> $trait for Vec2<T> {
            type Output = Vec2<T>;

            fn $method(self, rhs: Vec2<T>) -> Vec2<T> {
                Vec2::new(self.x $op rhs.x, self.y $op rhs.y)
            }
        }
    };
}

vec2_op!(Add, add, +);
vec2_op!(Sub, sub, -);
vec2_op!(Mul, mul, *);
vec2_op!(Div, div, /);

impl<T: Neg<Output = T>> Neg for Vec2<T> {
    type Output = Vec2<T>;

    fn neg(self) -> Vec2<T> {
        Vec2::new(-self.x, -self.y)
    }
}

/// Row-major 3x3 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat3 {
    pub rows: [Vec3; 3],
}

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3 {
        rows: [Vec3::X, Vec3::Y, Vec3::Z],
    };
    pub const ZERO: Mat3 = Mat3 {
        rows: [Vec3::ZERO; 3],
    };

    pub const fn from_rows(a: Vec3, b: Vec3, c: Vec3) -> Self {
        Mat3 { rows: [a, b, c] }
    }

    pub const fn from_cols(u: Vec3, v: Vec3, w: Vec3) -> Self {
        Mat3::from_rows(
            Vec3::new(u.x, v.x, w.x),
            Vec3::new(u.y, v.y, w.y),
            Vec3::new(u.z, v.z, w.z),
        )
    }

    pub fn col(&self, i: usize) -> Vec3 {
        let [a, b, c] = self.rows;
        match i {
            0 => Vec3::new(a.x, b.x, c.x),
            1 => Vec3::new(a.y, b.y, c.y),
            2 => Vec3::new(a.z, b.z, c.z),
            _ => panic!("column index {i} out of range"),
        }
    }

    /// Cofactor expansion along the first row.
    pub fn determinant(&self) -> f64 {
        let [a, b, c] = self.rows;
        a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x)
            + a.z * (b.x * c.y - b.y * c.x)
    }

    pub fn transpose(&self) -> Mat3 {
        let [a, b, c] = self.rows;
        Mat3::from_cols(a, b, c)
    }
}

impl Mul<Vec3> for Mat3 {
    type Output = Vec3;

    #[inline]
    fn mul(self, v: Vec3) -> Vec3 {
        let [a, b, c] = self.rows;
        Vec3::new(a.dot(v), b.dot(v), c.dot(v))
    }
}
