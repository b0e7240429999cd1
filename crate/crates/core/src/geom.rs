//! Minimal fixed-size vectors used by meshes and planar templates.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2<T> {
    pub x: T,
    pub y: T,
}

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Scalar> Vec2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn polar(radius: T, angle: T) -> Self {
        Self::new(radius * angle.cos(), radius * angle.sin())
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    pub fn angle(self) -> T {
        self.y.atan2(self.x)
    }

    /// Counterclockwise rotation by `angle`.
    pub fn rotated(self, angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn distance(self, o: Self) -> T {
        (self - o).norm()
    }
}

impl<T: Scalar> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }

    /// Rotation about the +y axis by `angle` (right-handed).
    pub fn rotated_about_y(self, angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x + s * self.z, self.y, c * self.z - s * self.x)
    }
}

macro_rules! impl_ops {
    ($t:ident { $($f:ident),+ }) => {
        impl<T: Scalar> Add for $t<T> {
            type Output = Self;
            fn add(self, o: Self) -> Self { Self { $($f: self.$f + o.$f),+ } }
        }
        impl<T: Scalar> Sub for $t<T> {
            type Output = Self;
            fn sub(self, o: Self) -> Self { Self { $($f: self.$f - o.$f),+ } }
        }
        impl<T: Scalar> Mul<T> for $t<T> {
            type Output = Self;
            fn mul(self, k: T) -> Self { Self { $($f: self.$f * k),+ } }
        }
        impl<T: Scalar> Neg for $t<T> {
            type Output = Self;
            fn neg(self) -> Self { Self { $($f: -self.$f),+ } }
        }
    };
}

impl_ops!(Vec2 { x, y });
impl_ops!(Vec3 { x, y, z });

/// Planar rigid motion: rotation by `angle` followed by translation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rigid2<T> {
    pub angle: T,
    pub translation: Vec2<T>,
}

impl<T: Scalar> Rigid2<T> {
    pub fn identity() -> Self {
        Self { angle: T::zero(), translation: Vec2::new(T::zero(), T::zero()) }
    }

    pub fn apply(&self, p: Vec2<T>) -> Vec2<T> {
        p.rotated(self.angle) + self.translation
    }

    /// The proper motion taking segment `(a0, a1)` onto `(b0, b1)`.
    /// Segment lengths are assumed equal.
    pub fn matching(a0: Vec2<T>, a1: Vec2<T>, b0: Vec2<T>, b1: Vec2<T>) -> Self {
        let angle = (b1 - b0).angle() - (a1 - a0).angle();
        let translation = b0 - a0.rotated(angle);
        Self { angle, translation }
    }
}
