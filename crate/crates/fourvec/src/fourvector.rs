//! The fourvector type and its algebra.
//!
//! A fourvector has four complex components (t, x, y, z). Its defining
//! product is non-commutative and non-associative; alongside it the type
//! carries the ordinary Hamilton product, and the two are tied together by
//! the bridge identity `a ** b == hamilton(b, conjugate(a))`.

use crate::error::{Error, Result};
use crate::kernels;
use crate::scalar::ComplexScalar;
use std::ops::{Add, Mul, Neg, Sub};

/// Relative threshold below which a norm counts as zero.
pub const ZERO_NORM_EPSILON: f64 = 1e-12;

/// A four-component hypercomplex number over complex scalars.
#[derive(Copy, Clone, Debug, Default, PartialEq)]
pub struct Fourvector {
    pub t: ComplexScalar,
    pub x: ComplexScalar,
    pub y: ComplexScalar,
    pub z: ComplexScalar,
}

impl Fourvector {
    pub const ZERO: Self = Self {
        t: ComplexScalar::ZERO,
        x: ComplexScalar::ZERO,
        y: ComplexScalar::ZERO,
        z: ComplexScalar::ZERO,
    };

    /// The left identity element (1, 0, 0, 0). Note `p ** IDENTITY`
    /// yields `p.conjugate()`, not `p`: the identity works from the
    /// left only.
    pub const IDENTITY: Self = Self {
        t: ComplexScalar::ONE,
        x: ComplexScalar::ZERO,
        y: ComplexScalar::ZERO,
        z: ComplexScalar::ZERO,
    };

    pub const fn new(t: ComplexScalar, x: ComplexScalar, y: ComplexScalar, z: ComplexScalar) -> Self {
        Self { t, x, y, z }
    }

    /// Build from real components.
    pub const fn from_reals(t: f64, x: f64, y: f64, z: f64) -> Self {
        Self {
            t: ComplexScalar::real(t),
            x: ComplexScalar::real(x),
            y: ComplexScalar::real(y),
            z: ComplexScalar::real(z),
        }
    }

    /// A pure (zero scalar component) fourvector.
    pub const fn pure(x: ComplexScalar, y: ComplexScalar, z: ComplexScalar) -> Self {
        Self {
            t: ComplexScalar::ZERO,
            x,
            y,
            z,
        }
    }

    /// A pure fourvector with real components.
    pub const fn pure_real(x: f64, y: f64, z: f64) -> Self {
        Self::from_reals(0.0, x, y, z)
    }

    pub const fn components(self) -> [ComplexScalar; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub const fn from_components(c: [ComplexScalar; 4]) -> Self {
        Self::new(c[0], c[1], c[2], c[3])
    }

    /// Quaternion-style conjugate: negate the vector part.
    pub fn conjugate(self) -> Self {
        Self::new(self.t, -self.x, -self.y, -self.z)
    }

    /// Componentwise complex conjugate.
    pub fn complex_conjugate(self) -> Self {
        Self::new(self.t.conj(), self.x.conj(), self.y.conj(), self.z.conj())
    }

    /// Split into (scalar part, pure part); the two sum back to `self`.
    pub fn split(self) -> (Self, Self) {
        (
            Self::new(self.t, ComplexScalar::ZERO, ComplexScalar::ZERO, ComplexScalar::ZERO),
            Self::pure(self.x, self.y, self.z),
        )
    }

    /// The defining fourvector product.
    pub fn product(self, rhs: Self) -> Self {
        Self::from_components(kernels::fourvector_product(
            self.components(),
            rhs.components(),
        ))
    }

    /// The Hamilton (quaternion) product.
    pub fn hamilton(self, rhs: Self) -> Self {
        Self::from_components(kernels::hamilton_product(
            self.components(),
            rhs.components(),
        ))
    }

    /// Half the product difference, (a ** b - b ** a) / 2. For pure
    /// fourvectors this is the cross product of the vector parts.
    pub fn commutator(self, rhs: Self) -> Self {
        (self.product(rhs) - rhs.product(self)).scale(ComplexScalar::real(0.5))
    }

    /// Half the product sum, (a ** b + b ** a) / 2. For pure fourvectors
    /// this is the dot product of the vector parts, as a scalar element.
    pub fn anticommutator(self, rhs: Self) -> Self {
        (self.product(rhs) + rhs.product(self)).scale(ComplexScalar::real(0.5))
    }

    /// The (complex-valued) norm: the plain sum of squared components,
    /// with no complex conjugation. Equal to the scalar component of
    /// `a ** a`.
    pub fn norm(self) -> ComplexScalar {
        self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Sum of squared component moduli; the scale used to decide whether
    /// a norm is numerically zero.
    fn modulus_weight(self) -> f64 {
        self.components().iter().map(|c| c.re * c.re + c.im * c.im).sum()
    }

    /// True when |norm| <= 1e-12 * max(1, sum of squared component moduli).
    pub fn is_zero_norm(self) -> bool {
        self.norm().abs() <= ZERO_NORM_EPSILON * 1.0_f64.max(self.modulus_weight())
    }

    /// Two-sided multiplicative inverse a / norm(a); both `a ** inv(a)`
    /// and `inv(a) ** a` equal (1, 0, 0, 0).
    pub fn inverse(self) -> Result<Self> {
        if self.is_zero_norm() {
            return Err(Error::ZeroNorm);
        }
        let n = self.norm();
        Ok(Self::new(self.t / n, self.x / n, self.y / n, self.z / n))
    }

    /// Componentwise scalar multiple.
    pub fn scale(self, c: ComplexScalar) -> Self {
        Self::new(self.t * c, self.x * c, self.y * c, self.z * c)
    }

    /// Divide by the principal square root of the norm, producing a unit
    /// fourvector.
    pub fn normalize(self) -> Result<Self> {
        if self.is_zero_norm() {
            return Err(Error::ZeroNorm);
        }
        let root = self.norm().sqrt();
        Ok(self.scale(root.recip()))
    }

    /// True when the scalar component is negligible relative to the
    /// largest component modulus.
    pub fn is_pure(self, eps: f64) -> bool {
        let scale = self
            .components()
            .iter()
            .map(|c| c.abs())
            .fold(1.0_f64, f64::max);
        self.t.abs() <= eps * scale
    }

    /// Largest componentwise relative distance to `other`.
    pub fn residual(self, other: Self) -> f64 {
        self.components()
            .iter()
            .zip(other.components().iter())
            .map(|(a, b)| a.residual(*b))
            .fold(0.0_f64, f64::max)
    }

    /// Componentwise relative equality at tolerance `eps`.
    pub fn approx_eq(self, other: Self, eps: f64) -> bool {
        self.residual(other) <= eps
    }
}

impl Add for Fourvector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.t + rhs.t, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Fourvector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.t - rhs.t, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Fourvector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl Mul<Fourvector> for ComplexScalar {
    type Output = Fourvector;
    fn mul(self, rhs: Fourvector) -> Fourvector {
        rhs.scale(self)
    }
}

impl Mul<Fourvector> for f64 {
    type Output = Fourvector;
    fn mul(self, rhs: Fourvector) -> Fourvector {
        rhs.scale(ComplexScalar::real(self))
    }
}

/// Product of three pure fourvectors, grouped a ** (b ** c). The scalar
/// component is the scalar triple product of the vector parts; the vector
/// component is a x (b x c) - (b . c) a.
pub fn triple_pure_product(a: Fourvector, b: Fourvector, c: Fourvector) -> Result<Fourvector> {
    for v in [a, b, c] {
        if !v.is_pure(crate::scalar::DEFAULT_EPSILON) {
            return Err(Error::NotPure {
                magnitude: v.t.abs(),
            });
        }
    }
    Ok(a.product(b.product(c)))
}
