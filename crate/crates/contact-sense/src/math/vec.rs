use std::ops::{Add, Deref, Mul, Neg, Sub};

use super::MathError;

/// A 3-vector of `f64`. Units are contextual: meters for positions,
/// newtons for forces, meters per second for velocities.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Vec3 {
        Vec3 { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f64 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

/// A 3-vector with unit Euclidean norm, within [`UnitVec3::NORM_TOL`].
///
/// Construction goes through [`UnitVec3::new`] (validates an already-unit
/// vector) or [`UnitVec3::normalize`] (rescales), so a `UnitVec3` in hand is
/// always safe to use as a direction. Derefs to [`Vec3`] for component
/// access and vector algebra.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitVec3(Vec3);

impl UnitVec3 {
    /// Allowed deviation of the norm from 1.
    pub const NORM_TOL: f64 = 1e-12;

    /// +z, the flat-ground normal.
    pub const Z: UnitVec3 = UnitVec3(Vec3 { x: 0.0, y: 0.0, z: 1.0 });

    /// Wraps a vector that is already unit-norm to within [`Self::NORM_TOL`].
    pub fn new(v: Vec3) -> Result<UnitVec3, MathError> {
        if !v.is_finite() {
            return Err(MathError::NonFinite);
        }
        if (v.norm() - 1.0).abs() > Self::NORM_TOL {
            return Err(MathError::Domain("vector is not unit-norm"));
        }
        Ok(UnitVec3(v))
    }

    /// Rescales `v` to unit norm. Fails on zero or non-finite input.
    pub fn normalize(v: Vec3) -> Result<UnitVec3, MathError> {
        if !v.is_finite() {
            return Err(MathError::NonFinite);
        }
        let n = v.norm();
        if n < 1e-300 {
            return Err(MathError::ZeroNorm);
        }
        Ok(UnitVec3(v * (1.0 / n)))
    }

    pub fn as_vec3(self) -> Vec3 {
        self.0
    }

    /// Flips the sign so the vector points out of the ground: z >= 0, with
    /// ties broken on x then y. The direction of a plane normal is only
    /// determined up to sign; this picks the upward representative.
    pub fn oriented_up(self) -> UnitVec3 {
        let v = self.0;
        let flip = v.z < 0.0
            || (v.z == 0.0 && (v.x < 0.0 || (v.x == 0.0 && v.y < 0.0)));
        if flip {
            UnitVec3(-v)
        } else {
            self
        }
    }
}

impl Deref for UnitVec3 {
    type Target = Vec3;
    fn deref(&self) -> &Vec3 {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_and_cross() {
        let a = Vec3::new(1.0, 2.0, 3.0);
        let b = Vec3::new(-4.0, 5.0, 0.5);
        assert_eq!(a.dot(b), -4.0 + 10.0 + 1.5);
        let c = a.cross(b);
        // cross product is orthogonal to both inputs
        assert!(c.dot(a).abs() < 1e-12);
        assert!(c.dot(b).abs() < 1e-12);
        assert_eq!(Vec3::new(1.0, 0.0, 0.0).cross(Vec3::new(0.0, 1.0, 0.0)), Vec3::new(0.0, 0.0, 1.0));
    }

    #[test]
    fn unit_vector_validation() {
        assert!(UnitVec3::new(Vec3::new(0.0, 0.0, 1.0)).is_ok());
        assert!(UnitVec3::new(Vec3::new(0.0, 0.0, 1.1)).is_err());
        assert_eq!(
            UnitVec3::new(Vec3::new(f64::NAN, 0.0, 0.0)),
            Err(MathError::NonFinite)
        );
        let u = UnitVec3::normalize(Vec3::new(3.0, 0.0, 4.0)).unwrap();
        assert!((u.norm() - 1.0).abs() <= UnitVec3::NORM_TOL);
        assert_eq!(UnitVec3::normalize(Vec3::ZERO), Err(MathError::ZeroNorm));
    }

    #[test]
    fn oriented_up_flips_downward_vectors() {
        let down = UnitVec3::new(Vec3::new(0.0, 0.0, -1.0)).unwrap();
        assert_eq!(down.oriented_up().z, 1.0);
        let horizontal = UnitVec3::new(Vec3::new(-1.0, 0.0, 0.0)).unwrap();
        assert_eq!(horizontal.oriented_up().x, 1.0);
        let up = UnitVec3::new(Vec3::new(0.6, 0.0, 0.8)).unwrap();
        assert_eq!(up.oriented_up(), up);
    }
}
