//! Rotors, the conjugated sandwich rotation, Lorentz-boost rotors,
//! interval invariance and reflections.
//!
//! Every transformation here is one operation: `rotate(V, r) = r ** (V̄ ** r)`
//! with a unit rotor r. Real axis-angle rotors reproduce classical 3D
//! rotations; complex hyperbolic rotors preserve the relativistic interval.

use crate::error::{Error, Result};
use crate::fourvector::Fourvector;
use crate::scalar::{ComplexScalar, DEFAULT_EPSILON};

/// A unit-norm fourvector used as a rotation operator. The norm may be
/// complex-valued in general; the invariant is |norm - 1| <= epsilon.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Rotor {
    value: Fourvector,
}

impl Rotor {
    /// The identity rotor (1, 0, 0, 0); rotation by nothing.
    pub const IDENTITY: Rotor = Rotor {
        value: Fourvector::IDENTITY,
    };

    /// Validate an arbitrary fourvector as a rotor at the default
    /// tolerance.
    pub fn new(value: Fourvector) -> Result<Rotor> {
        Self::new_with_tolerance(value, DEFAULT_EPSILON)
    }

    /// Validate an arbitrary fourvector as a rotor: |norm - 1| <= eps.
    pub fn new_with_tolerance(value: Fourvector, eps: f64) -> Result<Rotor> {
        let deviation = (value.norm() - ComplexScalar::ONE).abs();
        if deviation > eps {
            return Err(Error::NotRotor { deviation });
        }
        Ok(Rotor { value })
    }

    /// Wrap a value that is unit by construction.
    const fn trusted(value: Fourvector) -> Rotor {
        Rotor { value }
    }

    pub fn value(self) -> Fourvector {
        self.value
    }

    /// The conjugate rotor, which undoes this rotor's rotation.
    pub fn conjugate(self) -> Rotor {
        Rotor::trusted(self.value.conjugate())
    }
}

/// A rotation axis (unit 3-vector) and angle in radians.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct AxisAngle {
    axis: [f64; 3],
    angle: f64,
}

impl AxisAngle {
    pub fn new(axis: [f64; 3], angle: f64) -> Result<AxisAngle> {
        let length = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        if (length - 1.0).abs() > DEFAULT_EPSILON {
            return Err(Error::BadAxis { length });
        }
        Ok(AxisAngle { axis, angle })
    }

    pub fn axis(self) -> [f64; 3] {
        self.axis
    }

    pub fn angle(self) -> f64 {
        self.angle
    }
}

/// Relativistic velocity ratio and the matching contraction factor,
/// kept consistent by construction: gamma = 1/sqrt(1 - beta^2).
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct BoostParameters {
    beta: f64,
    gamma: f64,
}

impl BoostParameters {
    /// From a velocity ratio in (-1, 1).
    pub fn from_beta(beta: f64) -> Result<BoostParameters> {
        if !beta.is_finite() || beta.abs() >= 1.0 {
            return Err(Error::BadParameter(format!(
                "beta must lie in (-1, 1), got {beta}"
            )));
        }
        let gamma = 1.0 / (1.0 - beta * beta).sqrt();
        Ok(BoostParameters { beta, gamma })
    }

    /// From a contraction factor >= 1; the positive beta branch is chosen.
    pub fn from_gamma(gamma: f64) -> Result<BoostParameters> {
        if !gamma.is_finite() || gamma < 1.0 {
            return Err(Error::BadParameter(format!(
                "gamma must be >= 1, got {gamma}"
            )));
        }
        let beta = (1.0 - 1.0 / (gamma * gamma)).sqrt();
        Ok(BoostParameters { beta, gamma })
    }

    pub fn beta(self) -> f64 {
        self.beta
    }

    pub fn gamma(self) -> f64 {
        self.gamma
    }
}

/// A differential of interval with real components; the speed of light
/// is absorbed into `dt`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct IntervalElement {
    pub dt: f64,
    pub dx: f64,
    pub dy: f64,
    pub dz: f64,
}

impl IntervalElement {
    pub const fn new(dt: f64, dx: f64, dy: f64, dz: f64) -> IntervalElement {
        IntervalElement { dt, dx, dy, dz }
    }

    /// The complex fourvector (dt, i dx, i dy, i dz).
    pub fn materialize(self) -> Fourvector {
        Fourvector::new(
            ComplexScalar::real(self.dt),
            ComplexScalar::imaginary(self.dx),
            ComplexScalar::imaginary(self.dy),
            ComplexScalar::imaginary(self.dz),
        )
    }
}

/// The rotor (cos(θ/2), n sin(θ/2)) for axis n and angle θ.
pub fn rotor_from_axis_angle(aa: AxisAngle) -> Rotor {
    let half = aa.angle / 2.0;
    let (s, c) = half.sin_cos();
    let [nx, ny, nz] = aa.axis;
    Rotor::trusted(Fourvector::from_reals(c, nx * s, ny * s, nz * s))
}

/// Which of the three x-axis rotor families to build.
#[derive(Copy, Clone, Debug, PartialEq)]
pub enum BoostKind {
    /// Circular: (cos(α/2), sin(α/2), 0, 0).
    Trig(f64),
    /// Hyperbolic: (cosh(α/2), i sinh(α/2), 0, 0).
    Hyper(f64),
    /// Contraction-factor form: (sqrt((γ+1)/2), i sqrt((γ-1)/2), 0, 0),
    /// with the sign of the imaginary part following beta.
    Gamma(BoostParameters),
}

/// Build one of the unit rotors q1 (circular), q2 (hyperbolic) or q3
/// (contraction-factor form). All have norm exactly 1.
pub fn boost_rotor(kind: BoostKind) -> Rotor {
    let value = match kind {
        BoostKind::Trig(alpha) => {
            let (s, c) = (alpha / 2.0).sin_cos();
            Fourvector::from_reals(c, s, 0.0, 0.0)
        }
        BoostKind::Hyper(alpha) => Fourvector::new(
            ComplexScalar::real((alpha / 2.0).cosh()),
            ComplexScalar::imaginary((alpha / 2.0).sinh()),
            ComplexScalar::ZERO,
            ComplexScalar::ZERO,
        ),
        BoostKind::Gamma(p) => Fourvector::new(
            ComplexScalar::real(((p.gamma + 1.0) / 2.0).sqrt()),
            ComplexScalar::imaginary(((p.gamma - 1.0) / 2.0).sqrt().copysign(p.beta)),
            ComplexScalar::ZERO,
            ComplexScalar::ZERO,
        ),
    };
    Rotor::trusted(value)
}

/// Rotate V with rotor r: V' = r ** (V̄ ** r). The operand is
/// conjugated; the rotor appears unconjugated on both sides.
pub fn rotate(v: Fourvector, r: Rotor) -> Fourvector {
    let rv = r.value;
    rv.product(v.conjugate().product(rv))
}

/// The double rotation r ** ((r ** (a ** r)) ** r), grouped exactly so;
/// equal to a single rotation through twice the rotor's angle.
pub fn double_rotate(a: Fourvector, r: Rotor) -> Fourvector {
    let rv = r.value;
    rv.product(rv.product(a.product(rv)).product(rv))
}

/// The rotor whose single application equals applying `first` and then
/// `second`. Internally the Hamilton product of the two rotor values.
pub fn compose_rotors(second: Rotor, first: Rotor) -> Rotor {
    Rotor::trusted(second.value.hamilton(first.value))
}

/// Classical axis-angle rotation of a real 3-vector:
/// v = u cos θ + n (n·u)(1 − cos θ) + (n × u) sin θ.
/// Serves as an independent oracle for `rotate` on pure real inputs.
pub fn euler_rodrigues(u: [f64; 3], aa: AxisAngle) -> [f64; 3] {
    let n = aa.axis;
    let (sin, cos) = aa.angle.sin_cos();
    let ndotu = n[0] * u[0] + n[1] * u[1] + n[2] * u[2];
    let cross = [
        n[1] * u[2] - n[2] * u[1],
        n[2] * u[0] - n[0] * u[2],
        n[0] * u[1] - n[1] * u[0],
    ];
    std::array::from_fn(|i| u[i] * cos + n[i] * ndotu * (1.0 - cos) + cross[i] * sin)
}

/// The squared interval dt² − dx² − dy² − dz², computed as the norm of
/// the materialized fourvector; its imaginary part is exactly zero.
pub fn interval(ds: IntervalElement) -> ComplexScalar {
    ds.materialize().norm()
}

/// Mirror a pure fourvector in the plane with pure unit normal a:
/// x' = a ** (x ** a), which equals x − 2 (x·a) a.
pub fn reflect(x: Fourvector, normal: Fourvector) -> Result<Fourvector> {
    if !x.is_pure(DEFAULT_EPSILON) {
        return Err(Error::NotPure {
            magnitude: x.t.abs(),
        });
    }
    let unit = (normal.norm() - ComplexScalar::ONE).abs() <= DEFAULT_EPSILON;
    if !normal.is_pure(DEFAULT_EPSILON) || !unit {
        return Err(Error::NotUnitNormal);
    }
    Ok(normal.product(x.product(normal)))
}

/// Reflect off a sequence of plane surfaces in order: a left fold of
/// `reflect` over the normals.
pub fn reflect_chain(x: Fourvector, normals: &[Fourvector]) -> Result<Fourvector> {
    if normals.is_empty() {
        return Err(Error::EmptyChain);
    }
    normals.iter().try_fold(x, |acc, n| reflect(acc, *n))
}

#[cfg(test)]
mod tests {
    use super::*;

    const X_AXIS: [f64; 3] = [1.0, 0.0, 0.0];
    const Z_AXIS: [f64; 3] = [0.0, 0.0, 1.0];

    fn ds_sample() -> IntervalElement {
        IntervalElement::new(0.9, 0.2, -0.4, 0.7)
    }

    #[test]
    fn axis_angle_validates_unit_axis() {
        assert!(AxisAngle::new([0.6, 0.8, 0.0], 1.0).is_ok());
        let err = AxisAngle::new([1.0, 1.0, 0.0], 1.0).unwrap_err();
        assert!(matches!(err, Error::BadAxis { length } if (length - 2.0_f64.sqrt()).abs() < 1e-12));
    }

    #[test]
    fn rotor_validation() {
        let ok = Rotor::new(Fourvector::from_reals(0.6, 0.8, 0.0, 0.0)).unwrap();
        assert_eq!(ok.value(), Fourvector::from_reals(0.6, 0.8, 0.0, 0.0));
        let err = Rotor::new(Fourvector::from_reals(1.0, 1.0, 0.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::NotRotor { deviation } if (deviation - 1.0).abs() < 1e-12));
        // The complex hyperbolic rotor passes: cosh² − sinh² = 1.
        let q2 = boost_rotor(BoostKind::Hyper(1.3)).value();
        assert!(Rotor::new(q2).is_ok());
    }

    #[test]
    fn zero_angle_gives_identity_rotor() {
        let aa = AxisAngle::new([0.0, 1.0, 0.0], 0.0).unwrap();
        assert_eq!(rotor_from_axis_angle(aa).value(), Fourvector::IDENTITY);
    }

    #[test]
    fn axis_angle_rotor_components() {
        let alpha = 0.7_f64;
        let q1 = rotor_from_axis_angle(AxisAngle::new(X_AXIS, alpha).unwrap());
        assert_eq!(
            q1.value(),
            Fourvector::from_reals((alpha / 2.0).cos(), (alpha / 2.0).sin(), 0.0, 0.0)
        );
        assert_eq!(q1.value(), boost_rotor(BoostKind::Trig(alpha)).value());
        let qz = rotor_from_axis_angle(AxisAngle::new(Z_AXIS, alpha).unwrap());
        assert_eq!(
            qz.value(),
            Fourvector::from_reals((alpha / 2.0).cos(), 0.0, 0.0, (alpha / 2.0).sin())
        );
    }

    #[test]
    fn rotate_matches_classical_x_rotation() {
        let alpha = 0.7_f64;
        let a = Fourvector::from_reals(4.0, 1.0, 2.0, 3.0);
        let rotated = rotate(a, boost_rotor(BoostKind::Trig(alpha)));
        let expected = Fourvector::from_reals(
            4.0,
            1.0,
            2.0 * alpha.cos() - 3.0 * alpha.sin(),
            3.0 * alpha.cos() + 2.0 * alpha.sin(),
        );
        assert!(rotated.residual(expected) <= 1e-15);
    }

    #[test]
    fn identity_rotor_fixes_everything() {
        let v = Fourvector::from_reals(1.0, -2.0, 0.5, 3.0);
        assert_eq!(rotate(v, Rotor::IDENTITY), v);
        assert_eq!(double_rotate(v, Rotor::IDENTITY), v);
    }

    #[test]
    fn conjugate_rotor_inverts() {
        let r = rotor_from_axis_angle(AxisAngle::new([0.0, 0.6, 0.8], 1.1).unwrap());
        let v = Fourvector::from_reals(0.3, 1.0, -2.0, 0.5);
        let back = rotate(rotate(v, r), r.conjugate());
        assert!(back.residual(v) <= 1e-15);
    }

    #[test]
    fn hyperbolic_rotation_of_interval_element() {
        let alpha = 0.8_f64;
        let ds = ds_sample();
        let rotated = rotate(ds.materialize(), boost_rotor(BoostKind::Hyper(alpha)));
        let expected = Fourvector::new(
            ComplexScalar::real(ds.dt),
            ComplexScalar::imaginary(ds.dx),
            ComplexScalar::new(ds.dz * alpha.sinh(), ds.dy * alpha.cosh()),
            ComplexScalar::new(-ds.dy * alpha.sinh(), ds.dz * alpha.cosh()),
        );
        assert!(rotated.residual(expected) <= 1e-14);
    }

    #[test]
    fn gamma_rotor_matches_its_boost_form() {
        let p = BoostParameters::from_beta(0.6).unwrap();
        assert!((p.gamma() - 1.25).abs() <= 1e-15);
        let ds = ds_sample();
        let rotated = rotate(ds.materialize(), boost_rotor(BoostKind::Gamma(p)));
        let g = p.gamma();
        let b = p.beta();
        // (dt, i dx, i γ(dy − i β dz), i γ(dz + i β dy))
        let expected = Fourvector::new(
            ComplexScalar::real(ds.dt),
            ComplexScalar::imaginary(ds.dx),
            ComplexScalar::new(g * b * ds.dz, g * ds.dy),
            ComplexScalar::new(-g * b * ds.dy, g * ds.dz),
        );
        assert!(rotated.residual(expected) <= 1e-14);
    }

    #[test]
    fn gamma_rotor_equals_hyperbolic_at_matching_rapidity() {
        let p = BoostParameters::from_gamma(2.5).unwrap();
        let rapidity = p.beta().atanh();
        let q3 = boost_rotor(BoostKind::Gamma(p)).value();
        let q2 = boost_rotor(BoostKind::Hyper(rapidity)).value();
        assert!(q3.residual(q2) <= 1e-12);
    }

    #[test]
    fn boost_parameter_validation() {
        assert!(BoostParameters::from_beta(1.0).is_err());
        assert!(BoostParameters::from_beta(-1.5).is_err());
        assert!(BoostParameters::from_gamma(0.99).is_err());
        let p = BoostParameters::from_gamma(1.0).unwrap();
        assert_eq!(p.beta(), 0.0);
        assert_eq!(boost_rotor(BoostKind::Gamma(p)).value(), Fourvector::IDENTITY);
    }

    #[test]
    fn double_rotation_closed_form() {
        let alpha = 0.55_f64;
        let r = rotor_from_axis_angle(AxisAngle::new(Z_AXIS, alpha).unwrap());
        let a = Fourvector::from_reals(0.7, 1.5, -2.0, 0.3);
        let out = double_rotate(a, r);
        let (s2, c2) = (2.0 * alpha).sin_cos();
        let expected = Fourvector::from_reals(
            0.7,
            1.5 * c2 - (-2.0) * s2,
            -2.0 * c2 + 1.5 * s2,
            0.3,
        );
        assert!(out.residual(expected) <= 1e-14);
        // And it equals the single rotation by 2 alpha.
        let twice = rotate(a, rotor_from_axis_angle(AxisAngle::new(Z_AXIS, 2.0 * alpha).unwrap()));
        assert!(out.residual(twice) <= 1e-14);
    }

    #[test]
    fn coaxial_hyperbolic_composition_closed_form() {
        let (alpha, beta) = (0.45_f64, 0.9_f64);
        let roth1 = boost_rotor(BoostKind::Hyper(alpha));
        let roth2 = boost_rotor(BoostKind::Hyper(beta));
        let m = Fourvector::new(
            ComplexScalar::real(1.2),
            ComplexScalar::imaginary(-0.3),
            ComplexScalar::imaginary(0.8),
            ComplexScalar::imaginary(0.6),
        );
        let sequential = rotate(rotate(m, roth1), roth2);
        let s = (alpha + beta).sinh();
        let c = (alpha + beta).cosh();
        let expected = Fourvector::new(
            ComplexScalar::real(1.2),
            ComplexScalar::imaginary(-0.3),
            ComplexScalar::new(0.6 * s, 0.8 * c),
            ComplexScalar::new(-0.8 * s, 0.6 * c),
        );
        assert!(sequential.residual(expected) <= 1e-14);
        // The composed rotor reproduces the sequential result...
        let composed = compose_rotors(roth2, roth1);
        assert!(rotate(m, composed).residual(sequential) <= 1e-14);
        // ...and equals the single rotor at the summed angle.
        let direct = boost_rotor(BoostKind::Hyper(alpha + beta));
        assert!(composed.value().residual(direct.value()) <= 1e-14);
    }

    #[test]
    fn compose_with_identity() {
        let r = rotor_from_axis_angle(AxisAngle::new([0.0, 1.0, 0.0], 0.4).unwrap());
        assert_eq!(compose_rotors(r, Rotor::IDENTITY).value(), r.value());
        assert_eq!(compose_rotors(Rotor::IDENTITY, r).value(), r.value());
    }

    #[test]
    fn euler_rodrigues_quarter_turn() {
        let aa = AxisAngle::new(Z_AXIS, std::f64::consts::FRAC_PI_2).unwrap();
        let v = euler_rodrigues([0.0, 1.0, 0.0], aa);
        let expected = [-1.0, 0.0, 0.0];
        for i in 0..3 {
            assert!((v[i] - expected[i]).abs() <= 1e-15);
        }
        // Zero angle leaves the vector unchanged.
        let still = euler_rodrigues([3.0, -1.0, 2.0], AxisAngle::new(Z_AXIS, 0.0).unwrap());
        assert_eq!(still, [3.0, -1.0, 2.0]);
    }

    #[test]
    fn euler_rodrigues_matches_rotate_on_pure_vectors() {
        let aa = AxisAngle::new([0.48, 0.6, 0.64], 1.3).unwrap();
        let u = [0.7, -1.1, 0.4];
        let oracle = euler_rodrigues(u, aa);
        let sandwich = rotate(Fourvector::pure_real(u[0], u[1], u[2]), rotor_from_axis_angle(aa));
        let expected = Fourvector::pure_real(oracle[0], oracle[1], oracle[2]);
        assert!(sandwich.residual(expected) <= 1e-12);
    }

    #[test]
    fn interval_values_and_invariance() {
        assert_eq!(
            interval(IntervalElement::new(1.0, 0.0, 0.0, 0.0)),
            ComplexScalar::ONE
        );
        assert_eq!(
            interval(IntervalElement::new(1.0, 1.0, 0.0, 0.0)),
            ComplexScalar::ZERO
        );
        let ds = ds_sample();
        let before = interval(ds);
        assert_eq!(before.im, 0.0);
        for rotor in [
            boost_rotor(BoostKind::Trig(0.9)),
            boost_rotor(BoostKind::Hyper(1.4)),
            boost_rotor(BoostKind::Gamma(BoostParameters::from_beta(-0.35).unwrap())),
        ] {
            let after = rotate(ds.materialize(), rotor).norm();
            assert!(after.approx_eq(before, 1e-12));
        }
    }

    #[test]
    fn reflect_mirror_values() {
        let x = Fourvector::pure_real(1.0, 2.0, 3.0);
        let a = Fourvector::pure_real(1.0, 0.0, 0.0);
        assert!(reflect(x, a).unwrap().residual(Fourvector::pure_real(-1.0, 2.0, 3.0)) == 0.0);
        // A vector lying in the mirror plane is fixed.
        let in_plane = Fourvector::pure_real(0.0, 1.0, 0.0);
        assert_eq!(reflect(in_plane, a).unwrap(), in_plane);
        // Reflection is an involution.
        let twice = reflect(reflect(x, a).unwrap(), a).unwrap();
        assert!(twice.residual(x) <= 1e-15);
    }

    #[test]
    fn reflect_rejects_bad_inputs() {
        let a = Fourvector::pure_real(1.0, 0.0, 0.0);
        let not_pure = Fourvector::from_reals(1.0, 1.0, 0.0, 0.0);
        assert!(matches!(reflect(not_pure, a), Err(Error::NotPure { .. })));
        let not_unit = Fourvector::pure_real(2.0, 0.0, 0.0);
        assert_eq!(reflect(a, not_unit), Err(Error::NotUnitNormal));
        let not_pure_normal = Fourvector::from_reals(0.5, 1.0, 0.0, 0.0);
        assert_eq!(reflect(a, not_pure_normal), Err(Error::NotUnitNormal));
    }

    #[test]
    fn reflect_chain_behaviour() {
        let x = Fourvector::pure_real(1.0, 2.0, 3.0);
        let a1 = Fourvector::pure_real(1.0, 0.0, 0.0);
        let a2 = Fourvector::pure_real(0.0, 1.0, 0.0);
        assert_eq!(reflect_chain(x, &[a1]).unwrap(), reflect(x, a1).unwrap());
        assert!(reflect_chain(x, &[a1, a1]).unwrap().residual(x) <= 1e-15);
        // Perpendicular mirrors compose to a half-turn about z.
        let chained = reflect_chain(x, &[a1, a2]).unwrap();
        let half_turn = rotate(
            x,
            rotor_from_axis_angle(AxisAngle::new(Z_AXIS, std::f64::consts::PI).unwrap()),
        );
        assert!(chained.residual(half_turn) <= 1e-15);
        assert_eq!(reflect_chain(x, &[]), Err(Error::EmptyChain));
    }
}
