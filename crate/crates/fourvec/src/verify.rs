//! The randomized identity suite.
//!
//! Each identity draws its own deterministic RNG stream (derived from the
//! configured seed and the identity name), runs a sweep of sampled checks
//! and reports the worst residual seen. Polynomially exact identities are
//! sampled on small integer components, where the arithmetic is exact in
//! doubles and the residual must be literally zero; floating-point
//! identities are sampled on reals in [-1, 1] and compared against the
//! configured tolerance. A few entries are witnesses: they pass only when
//! the measured deviation is *large* (non-commutativity, non-associativity
//! of the product, rotation order sensitivity, the non-pure Jacobi
//! counterexample).

use crate::basis::{basis_product, Basis};
use crate::error::Error;
use crate::fourvector::Fourvector;
use crate::matrix::ProductMatrix;
use crate::rotation::{
    boost_rotor, compose_rotors, double_rotate, euler_rodrigues, interval, reflect, reflect_chain,
    rotate, rotor_from_axis_angle, AxisAngle, BoostKind, BoostParameters, IntervalElement, Rotor,
};
use crate::scalar::{ComplexScalar, DEFAULT_EPSILON};
use crate::solve::{
    divide, equivalent_left_rotor, left_factor, quadratic_lhs, right_factor, solve_quadratic, Side,
};
use crate::text::{format_fourvector, parse_fourvector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Sweep parameters for the identity suite.
#[derive(Copy, Clone, Debug)]
pub struct VerifyConfig {
    pub samples: u64,
    pub seed: u64,
    pub tolerance: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            samples: 1000,
            seed: 42,
            tolerance: DEFAULT_EPSILON,
        }
    }
}

/// Result of one identity's sweep.
#[derive(Clone, Debug)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub worst_residual: f64,
    pub checks: u64,
}

/// Results for the whole suite.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: u64,
    pub tolerance: f64,
    pub outcomes: Vec<IdentityOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.outcomes.iter().filter(|o| o.passed).count()
    }

    pub fn outcome(&self, name: &str) -> Option<&IdentityOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

enum PassRule {
    /// Worst residual must stay at or below the configured tolerance.
    WithinTolerance,
    /// Witness: the deviation must exceed this fixed threshold.
    Exceeds(f64),
    /// Witness: the deviation must exceed this multiple of the tolerance.
    ExceedsToleranceTimes(f64),
}

struct Sweep {
    worst: f64,
    checks: u64,
}

type Runner = fn(&mut ChaCha8Rng, &VerifyConfig) -> Sweep;

struct IdentityDef {
    name: &'static str,
    rule: PassRule,
    run: Runner,
}

/// Run the full identity suite.
pub fn run_suite(cfg: &VerifyConfig) -> VerifyReport {
    let outcomes = catalog()
        .into_iter()
        .map(|def| {
            let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(cfg.seed, def.name));
            let sweep = (def.run)(&mut rng, cfg);
            let passed = match def.rule {
                PassRule::WithinTolerance => sweep.worst <= cfg.tolerance,
                PassRule::Exceeds(threshold) => sweep.worst > threshold,
                PassRule::ExceedsToleranceTimes(factor) => sweep.worst > factor * cfg.tolerance,
            };
            IdentityOutcome {
                name: def.name,
                passed,
                worst_residual: sweep.worst,
                checks: sweep.checks,
            }
        })
        .collect();
    VerifyReport {
        seed: cfg.seed,
        samples: cfg.samples,
        tolerance: cfg.tolerance,
        outcomes,
    }
}

/// FNV-1a hash of the identity name, mixed with the suite seed, so each
/// identity consumes an independent deterministic stream.
fn stream_seed(seed: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h ^ seed.wrapping_mul(0x9e3779b97f4a7c15)
}

// ---- draw helpers -------------------------------------------------------

fn int_c(rng: &mut ChaCha8Rng) -> ComplexScalar {
    ComplexScalar::new(
        rng.gen_range(-9..=9i32) as f64,
        rng.gen_range(-9..=9i32) as f64,
    )
}

fn int_fv(rng: &mut ChaCha8Rng) -> Fourvector {
    Fourvector::new(int_c(rng), int_c(rng), int_c(rng), int_c(rng))
}

fn int_pure(rng: &mut ChaCha8Rng) -> Fourvector {
    Fourvector::pure(int_c(rng), int_c(rng), int_c(rng))
}

fn real_in(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(-1.0..=1.0)
}

fn real_c(rng: &mut ChaCha8Rng) -> ComplexScalar {
    ComplexScalar::new(real_in(rng), real_in(rng))
}

fn real_fv(rng: &mut ChaCha8Rng) -> Fourvector {
    Fourvector::new(real_c(rng), real_c(rng), real_c(rng), real_c(rng))
}

fn real_pure_real(rng: &mut ChaCha8Rng) -> Fourvector {
    Fourvector::pure_real(real_in(rng), real_in(rng), real_in(rng))
}

/// A draw bounded away from zero norm, so inverses stay well scaled and
/// residuals are not dominated by conditioning.
fn well_conditioned_fv(rng: &mut ChaCha8Rng) -> Fourvector {
    loop {
        let v = real_fv(rng);
        if v.norm().abs() > 0.05 {
            return v;
        }
    }
}

fn unit_axis(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v = [real_in(rng), real_in(rng), real_in(rng)];
        let len = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if len > 0.1 {
            return [v[0] / len, v[1] / len, v[2] / len];
        }
    }
}

fn random_rotor(rng: &mut ChaCha8Rng) -> Rotor {
    let axis = unit_axis(rng);
    let angle = rng.gen_range(-PI..=PI);
    rotor_from_axis_angle(AxisAngle::new(axis, angle).expect("axis is normalized"))
}

fn residual_to_zero(v: Fourvector) -> f64 {
    v.residual(Fourvector::ZERO)
}

fn cdot(a: [ComplexScalar; 3], b: [ComplexScalar; 3]) -> ComplexScalar {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn ccross(a: [ComplexScalar; 3], b: [ComplexScalar; 3]) -> [ComplexScalar; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn vec3(v: Fourvector) -> [ComplexScalar; 3] {
    [v.x, v.y, v.z]
}

fn sampled(rng: &mut ChaCha8Rng, cfg: &VerifyConfig, mut check: impl FnMut(&mut ChaCha8Rng) -> f64) -> Sweep {
    let n = cfg.samples.max(1);
    let mut worst = 0.0_f64;
    for _ in 0..n {
        worst = worst.max(check(rng));
    }
    Sweep { worst, checks: n }
}

fn fixed(worst: f64) -> Sweep {
    Sweep { worst, checks: 1 }
}

// ---- identity runners ---------------------------------------------------

fn run_bridge(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let b = int_fv(rng);
        a.product(b).residual(b.hamilton(a.conjugate()))
    })
}

fn run_pure_dot_cross(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_pure(rng);
        let b = int_pure(rng);
        let cross = ccross(vec3(a), vec3(b));
        let expected = Fourvector::new(cdot(vec3(a), vec3(b)), cross[0], cross[1], cross[2]);
        a.product(b).residual(expected)
    })
}

fn run_self_square(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let expected = Fourvector::new(
            a.norm(),
            ComplexScalar::ZERO,
            ComplexScalar::ZERO,
            ComplexScalar::ZERO,
        );
        a.product(a).residual(expected)
    })
}

fn run_left_identity(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        Fourvector::IDENTITY.product(a).residual(a)
    })
}

fn run_right_identity(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        a.product(Fourvector::IDENTITY).residual(a.conjugate())
    })
}

fn run_inverse_two_sided(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = well_conditioned_fv(rng);
        let inv = a.inverse().expect("draw is invertible");
        a.product(inv)
            .residual(Fourvector::IDENTITY)
            .max(inv.product(a).residual(Fourvector::IDENTITY))
    })
}

fn run_conjugate_reversal(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let b = int_fv(rng);
        a.product(b).conjugate().residual(b.product(a))
    })
}

fn run_conjugate_triple_reversal(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let p = int_fv(rng);
        let q = int_fv(rng);
        let r = int_fv(rng);
        let lhs = p.product(q.product(r)).conjugate();
        let rhs = r.product(q.conjugate().product(p));
        lhs.residual(rhs)
    })
}

fn run_conjugate_sandwich_left(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let p = int_fv(rng);
        let q = int_fv(rng);
        let a = p.product(p.conjugate().product(q));
        let b = p.conjugate().product(p.product(q));
        let scaled = q.scale(p.norm());
        a.residual(b).max(a.residual(scaled))
    })
}

fn run_conjugate_sandwich_right(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let p = int_fv(rng);
        let q = int_fv(rng);
        let a = p.conjugate().product(q).product(p);
        let b = p.product(q).product(p.conjugate());
        let scaled = q.conjugate().scale(p.norm());
        a.residual(b).max(a.residual(scaled))
    })
}

fn run_rotor_cancellation_left(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let r = random_rotor(rng).value();
        let q = real_fv(rng);
        let a = r.product(r.conjugate().product(q));
        let b = r.conjugate().product(r.product(q));
        a.residual(q).max(b.residual(q))
    })
}

fn run_rotor_cancellation_right(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let r = random_rotor(rng).value();
        let q = real_fv(rng);
        let a = r.conjugate().product(q).product(r);
        let b = r.product(q).product(r.conjugate());
        a.residual(q.conjugate()).max(b.residual(q.conjugate()))
    })
}

fn run_rotor_quad_cancellation(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let r = random_rotor(rng).value();
        let q = real_fv(rng);
        let rc = r.conjugate();
        q.product(r)
            .product(r)
            .product(rc)
            .product(rc)
            .residual(q)
    })
}

fn run_complex_pairs(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let (a, b) = (rng.gen_range(-9..=9i32) as f64, rng.gen_range(-9..=9i32) as f64);
        let (c, d) = (rng.gen_range(-9..=9i32) as f64, rng.gen_range(-9..=9i32) as f64);
        // (a, b, 0, 0) ** (c, d, 0, 0) == (ac + bd, ad - bc, 0, 0)
        let real_pair = Fourvector::from_reals(a, b, 0.0, 0.0)
            .product(Fourvector::from_reals(c, d, 0.0, 0.0))
            .residual(Fourvector::from_reals(a * c + b * d, a * d - b * c, 0.0, 0.0));
        // (a, ib, 0, 0) ** (c, id, 0, 0) == (ac - bd, i(ad - bc), 0, 0)
        let imag = |re: f64, im: f64| ComplexScalar::new(re, im);
        let imag_pair = Fourvector::new(imag(a, 0.0), imag(0.0, b), ComplexScalar::ZERO, ComplexScalar::ZERO)
            .product(Fourvector::new(imag(c, 0.0), imag(0.0, d), ComplexScalar::ZERO, ComplexScalar::ZERO))
            .residual(Fourvector::new(
                imag(a * c - b * d, 0.0),
                imag(0.0, a * d - b * c),
                ComplexScalar::ZERO,
                ComplexScalar::ZERO,
            ));
        real_pair.max(imag_pair)
    })
}

fn run_commutator_form(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let b = int_fv(rng);
        let comm = a.commutator(b);
        let prod = a.product(b);
        let from_product = Fourvector::pure(prod.x, prod.y, prod.z);
        let cross = ccross(vec3(a), vec3(b));
        let explicit = Fourvector::pure(
            a.t * b.x - a.x * b.t + cross[0],
            a.t * b.y - a.y * b.t + cross[1],
            a.t * b.z - a.z * b.t + cross[2],
        );
        comm.residual(from_product).max(comm.residual(explicit))
    })
}

fn run_anticommutator_form(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let b = int_fv(rng);
        let anti = a.anticommutator(b);
        let prod = a.product(b);
        let from_product = Fourvector::new(
            prod.t,
            ComplexScalar::ZERO,
            ComplexScalar::ZERO,
            ComplexScalar::ZERO,
        );
        let explicit = Fourvector::new(
            a.t * b.t + cdot(vec3(a), vec3(b)),
            ComplexScalar::ZERO,
            ComplexScalar::ZERO,
            ComplexScalar::ZERO,
        );
        anti.residual(from_product).max(anti.residual(explicit))
    })
}

fn run_commutator_antisymmetry(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let b = int_fv(rng);
        a.commutator(b).residual(-b.commutator(a))
    })
}

fn run_commutator_linearity(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let b = int_fv(rng);
        let c = int_fv(rng);
        (a + b).commutator(c).residual(a.commutator(c) + b.commutator(c))
    })
}

fn run_jacobi_pure(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = real_pure_real(rng);
        let b = real_pure_real(rng);
        let c = real_pure_real(rng);
        let sum = a.commutator(b).commutator(c)
            + b.commutator(c).commutator(a)
            + c.commutator(a).commutator(b);
        residual_to_zero(sum)
    })
}

fn run_jacobi_nonpure_witness(_rng: &mut ChaCha8Rng, _cfg: &VerifyConfig) -> Sweep {
    let a = Fourvector::from_reals(1.0, 1.0, 0.0, 0.0);
    let b = Fourvector::from_reals(0.0, 0.0, 1.0, 0.0);
    let c = Fourvector::from_reals(0.0, 0.0, 0.0, 1.0);
    let sum = a.commutator(b).commutator(c)
        + b.commutator(c).commutator(a)
        + c.commutator(a).commutator(b);
    fixed(residual_to_zero(sum))
}

fn run_distributivity_left(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let b = int_fv(rng);
        let c = int_fv(rng);
        a.product(b + c).residual(a.product(b) + a.product(c))
    })
}

fn run_distributivity_right(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let b = int_fv(rng);
        let c = int_fv(rng);
        (a + b).product(c).residual(a.product(c) + b.product(c))
    })
}

fn run_scalar_multiple(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let lambda = int_c(rng);
        let a = int_fv(rng);
        let b = int_fv(rng);
        let reference = a.product(b).scale(lambda);
        a.scale(lambda)
            .product(b)
            .residual(reference)
            .max(a.product(b.scale(lambda)).residual(reference))
    })
}

fn run_norm_multiplicative(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let b = int_fv(rng);
        a.product(b).norm().residual(a.norm() * b.norm())
    })
}

fn run_squared_product(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_fv(rng);
        let b = int_fv(rng);
        let ab = a.product(b);
        ab.product(ab).residual(a.product(a).product(b.product(b)))
    })
}

fn run_triple_pure_form(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = int_pure(rng);
        let b = int_pure(rng);
        let c = int_pure(rng);
        let bc_cross = ccross(vec3(b), vec3(c));
        let outer = ccross(vec3(a), bc_cross);
        let bc_dot = cdot(vec3(b), vec3(c));
        let expected = Fourvector::new(
            cdot(vec3(a), bc_cross),
            outer[0] - bc_dot * a.x,
            outer[1] - bc_dot * a.y,
            outer[2] - bc_dot * a.z,
        );
        a.product(b.product(c)).residual(expected)
    })
}

fn run_non_commutativity_witness(_rng: &mut ChaCha8Rng, _cfg: &VerifyConfig) -> Sweep {
    let p = Fourvector::from_reals(1.0, 2.0, 3.0, 4.0);
    let q = Fourvector::from_reals(5.0, 6.0, 7.0, 8.0);
    fixed(p.product(q).residual(q.product(p)))
}

fn run_non_associativity_witness(_rng: &mut ChaCha8Rng, _cfg: &VerifyConfig) -> Sweep {
    let e = Basis::E.unit();
    let i = Basis::I.unit();
    let j = Basis::J.unit();
    let k = Basis::K.unit();
    // ((i e) j) k == -e, while (i (e j)) k == +e: opposite signs.
    let grouped_left = i.product(e).product(j).product(k);
    let grouped_middle = i.product(e.product(j)).product(k);
    fixed(grouped_left.residual(-grouped_middle))
}

fn run_tait_example(_rng: &mut ChaCha8Rng, _cfg: &VerifyConfig) -> Sweep {
    let i = Basis::I.unit();
    let j = Basis::J.unit();
    let expected = Fourvector::from_reals(0.0, -1.0, 0.0, 0.0);
    let a = i.product(j.product(j));
    let b = i.product(j).product(j);
    fixed(a.residual(expected).max(b.residual(expected)))
}

fn run_basis_table(_rng: &mut ChaCha8Rng, _cfg: &VerifyConfig) -> Sweep {
    let mut worst = 0.0_f64;
    for left in Basis::ALL {
        for right in Basis::ALL {
            let table = basis_product(left, right).to_fourvector();
            let general = left.unit().product(right.unit());
            worst = worst.max(table.residual(general));
        }
    }
    Sweep { worst, checks: 16 }
}

fn run_zero_norm_existence(_rng: &mut ChaCha8Rng, _cfg: &VerifyConfig) -> Sweep {
    let null = Fourvector::new(
        ComplexScalar::ONE,
        ComplexScalar::I,
        ComplexScalar::ZERO,
        ComplexScalar::ZERO,
    );
    fixed(null.norm().abs())
}

fn run_product_matrix_apply(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let p = int_fv(rng);
        let q = int_fv(rng);
        ProductMatrix::from_left_factor(p).apply(q).residual(p.product(q))
    })
}

fn run_product_matrix_orthogonality(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let p = int_fv(rng);
        let m = ProductMatrix::from_left_factor(p);
        m.matmul(&m.transpose())
            .residual(&ProductMatrix::scalar(p.norm()))
    })
}

fn run_divide_self(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let p = well_conditioned_fv(rng);
        divide(p, p)
            .expect("draw is invertible")
            .residual(Fourvector::IDENTITY)
    })
}

fn run_right_factor_roundtrip(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = real_fv(rng);
        let b = well_conditioned_fv(rng);
        let x = right_factor(a, b).expect("divisor is invertible");
        b.product(x).residual(a)
    })
}

fn run_left_factor_roundtrip(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = real_fv(rng);
        let b = well_conditioned_fv(rng);
        let y = left_factor(a, b).expect("divisor is invertible");
        y.product(b).residual(a)
    })
}

fn run_factor_norms_equal(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = well_conditioned_fv(rng);
        let b = well_conditioned_fv(rng);
        let x = right_factor(a, b).expect("divisor is invertible");
        let y = left_factor(a, b).expect("divisor is invertible");
        x.norm().residual(y.norm())
    })
}

fn run_factor_cross_identity(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        // Both factors inherit norm(A)/norm(B), so bounding A and B away
        // from zero norm keeps X and Y invertible.
        let a = well_conditioned_fv(rng);
        let b = well_conditioned_fv(rng);
        let x = right_factor(a, b).expect("divisor is invertible");
        let y = left_factor(a, b).expect("divisor is invertible");
        match (y.inverse(), x.inverse()) {
            (Ok(y_inv), Ok(x_inv)) => x.product(y_inv).residual(x_inv.product(y)),
            _ => f64::INFINITY,
        }
    })
}

fn run_equivalent_left_rotor(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let p = well_conditioned_fv(rng);
        let r = random_rotor(rng);
        let l = equivalent_left_rotor(p, r).expect("draw is invertible");
        l.product(p).residual(rotate(p, r))
    })
}

fn run_quadratic_substitution(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        // Bound the linear coefficient away from zero norm: near-null C
        // makes the reduced quadratic ill-conditioned without being a
        // correctness statement about the solver.
        let c = well_conditioned_fv(rng);
        let k = real_fv(rng);
        let mut worst = 0.0_f64;
        for side in [Side::Right, Side::Left] {
            match solve_quadratic(side, c, k) {
                Ok(solution) => {
                    for q in &solution.solutions {
                        worst = worst.max(quadratic_lhs(side, *q, c).residual(k));
                    }
                }
                Err(Error::NoSolution) => worst = f64::INFINITY,
                Err(_) => worst = f64::INFINITY,
            }
        }
        worst
    })
}

fn run_rotation_preserves_norm(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let v = real_fv(rng);
        let real_rotor = random_rotor(rng);
        let hyper = boost_rotor(BoostKind::Hyper(rng.gen_range(-2.0..=2.0)));
        rotate(v, real_rotor)
            .norm()
            .residual(v.norm())
            .max(rotate(v, hyper).norm().residual(v.norm()))
    })
}

fn run_rotation_linearity_product(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let s = real_fv(rng);
        let t = real_fv(rng);
        let r = random_rotor(rng);
        rotate(s.product(t), r).residual(rotate(s, r).product(rotate(t, r)))
    })
}

fn run_rotation_linearity_sum(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let s = real_fv(rng);
        let t = real_fv(rng);
        let r = random_rotor(rng);
        rotate(s + t, r).residual(rotate(s, r) + rotate(t, r))
    })
}

fn run_inverse_rotation(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = real_fv(rng);
        let axis = unit_axis(rng);
        let angle = rng.gen_range(-PI..=PI);
        let forward = rotor_from_axis_angle(AxisAngle::new(axis, angle).expect("unit axis"));
        let backward = rotor_from_axis_angle(AxisAngle::new(axis, -angle).expect("unit axis"));
        rotate(rotate(a, forward), backward).residual(a)
    })
}

fn run_euler_rodrigues_agreement(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let u = [real_in(rng), real_in(rng), real_in(rng)];
        let aa = AxisAngle::new(unit_axis(rng), rng.gen_range(-PI..=PI)).expect("unit axis");
        let oracle = euler_rodrigues(u, aa);
        rotate(Fourvector::pure_real(u[0], u[1], u[2]), rotor_from_axis_angle(aa))
            .residual(Fourvector::pure_real(oracle[0], oracle[1], oracle[2]))
    })
}

fn run_double_rotation_doubles(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let a = real_fv(rng);
        let axis = unit_axis(rng);
        let theta = rng.gen_range(-PI / 2.0..=PI / 2.0);
        let single = rotor_from_axis_angle(AxisAngle::new(axis, theta).expect("unit axis"));
        let doubled = rotor_from_axis_angle(AxisAngle::new(axis, 2.0 * theta).expect("unit axis"));
        double_rotate(a, single).residual(rotate(a, doubled))
    })
}

fn run_coaxial_composition(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let alpha = rng.gen_range(-PI..=PI);
        let beta = rng.gen_range(-PI..=PI);
        let circular = compose_rotors(
            boost_rotor(BoostKind::Trig(beta)),
            boost_rotor(BoostKind::Trig(alpha)),
        )
        .value()
        .residual(boost_rotor(BoostKind::Trig(alpha + beta)).value());
        let ra = rng.gen_range(-1.5..=1.5);
        let rb = rng.gen_range(-1.5..=1.5);
        let hyperbolic = compose_rotors(
            boost_rotor(BoostKind::Hyper(rb)),
            boost_rotor(BoostKind::Hyper(ra)),
        )
        .value()
        .residual(boost_rotor(BoostKind::Hyper(ra + rb)).value());
        circular.max(hyperbolic)
    })
}

fn run_general_composition(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let first = random_rotor(rng);
        let second = random_rotor(rng);
        let v = real_fv(rng);
        rotate(rotate(v, first), second).residual(rotate(v, compose_rotors(second, first)))
    })
}

fn run_order_sensitivity_witness(_rng: &mut ChaCha8Rng, _cfg: &VerifyConfig) -> Sweep {
    let roll = rotor_from_axis_angle(AxisAngle::new([1.0, 0.0, 0.0], PI / 2.0).expect("unit axis"));
    let yaw = rotor_from_axis_angle(AxisAngle::new([0.0, 0.0, 1.0], PI / 2.0).expect("unit axis"));
    let v = Fourvector::pure_real(1.0, 2.0, 3.0);
    let roll_then_yaw = rotate(rotate(v, roll), yaw);
    let yaw_then_roll = rotate(rotate(v, yaw), roll);
    fixed(roll_then_yaw.residual(yaw_then_roll))
}

fn run_boost_invariance(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let ds = IntervalElement::new(real_in(rng), real_in(rng), real_in(rng), real_in(rng));
        let before = interval(ds);
        let rotors = [
            boost_rotor(BoostKind::Trig(rng.gen_range(-PI..=PI))),
            boost_rotor(BoostKind::Hyper(rng.gen_range(-2.0..=2.0))),
            boost_rotor(BoostKind::Gamma(
                BoostParameters::from_beta(rng.gen_range(-0.95..=0.95)).expect("beta in range"),
            )),
        ];
        rotors
            .iter()
            .map(|r| rotate(ds.materialize(), *r).norm().residual(before))
            .fold(0.0_f64, f64::max)
    })
}

fn run_boost_closed_form(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let ds = IntervalElement::new(real_in(rng), real_in(rng), real_in(rng), real_in(rng));
        let p = BoostParameters::from_beta(rng.gen_range(-0.95..=0.95)).expect("beta in range");
        let (g, b) = (p.gamma(), p.beta());
        let expected = Fourvector::new(
            ComplexScalar::real(ds.dt),
            ComplexScalar::imaginary(ds.dx),
            ComplexScalar::new(g * b * ds.dz, g * ds.dy),
            ComplexScalar::new(-g * b * ds.dy, g * ds.dz),
        );
        rotate(ds.materialize(), boost_rotor(BoostKind::Gamma(p))).residual(expected)
    })
}

fn run_reflection_mirror_oracle(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let x = real_pure_real(rng);
        let n = unit_axis(rng);
        let a = Fourvector::pure_real(n[0], n[1], n[2]);
        let dot = x.x.re * n[0] + x.y.re * n[1] + x.z.re * n[2];
        let expected = x - (2.0 * dot) * a;
        reflect(x, a).expect("valid mirror").residual(expected)
    })
}

fn run_reflection_involution(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let x = real_pure_real(rng);
        let n = unit_axis(rng);
        let a = Fourvector::pure_real(n[0], n[1], n[2]);
        let once = reflect(x, a).expect("valid mirror");
        reflect(once, a).expect("valid mirror").residual(x)
    })
}

fn run_reflection_preserves_norm(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let x = real_pure_real(rng);
        let n = unit_axis(rng);
        let a = Fourvector::pure_real(n[0], n[1], n[2]);
        reflect(x, a).expect("valid mirror").norm().residual(x.norm())
    })
}

fn run_perpendicular_mirrors(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let n1 = unit_axis(rng);
        // Build a second unit normal orthogonal to the first.
        let n2 = loop {
            let v = unit_axis(rng);
            let d = v[0] * n1[0] + v[1] * n1[1] + v[2] * n1[2];
            let w = [v[0] - d * n1[0], v[1] - d * n1[1], v[2] - d * n1[2]];
            let len = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
            if len > 0.1 {
                break [w[0] / len, w[1] / len, w[2] / len];
            }
        };
        let axis = [
            n1[1] * n2[2] - n1[2] * n2[1],
            n1[2] * n2[0] - n1[0] * n2[2],
            n1[0] * n2[1] - n1[1] * n2[0],
        ];
        let x = real_pure_real(rng);
        let chained = reflect_chain(
            x,
            &[
                Fourvector::pure_real(n1[0], n1[1], n1[2]),
                Fourvector::pure_real(n2[0], n2[1], n2[2]),
            ],
        )
        .expect("valid mirrors");
        let half_turn = rotate(
            x,
            rotor_from_axis_angle(AxisAngle::new(axis, PI).expect("unit cross product")),
        );
        chained.residual(half_turn)
    })
}

fn run_parse_format_roundtrip(rng: &mut ChaCha8Rng, cfg: &VerifyConfig) -> Sweep {
    sampled(rng, cfg, |rng| {
        let v = real_fv(rng);
        let exact = parse_fourvector(&format_fourvector(v, 17)).expect("formatter output parses");
        let rounded = parse_fourvector(&format_fourvector(v, 12)).expect("formatter output parses");
        exact.residual(v).max(rounded.residual(v))
    })
}

fn catalog() -> Vec<IdentityDef> {
    use PassRule::*;
    fn def(name: &'static str, rule: PassRule, run: Runner) -> IdentityDef {
        IdentityDef { name, rule, run }
    }
    vec![
        def("bridge-identity", WithinTolerance, run_bridge),
        def("pure-product-dot-cross", WithinTolerance, run_pure_dot_cross),
        def("self-square-is-norm", WithinTolerance, run_self_square),
        def("left-identity", WithinTolerance, run_left_identity),
        def("right-identity-conjugates", WithinTolerance, run_right_identity),
        def("inverse-two-sided", WithinTolerance, run_inverse_two_sided),
        def("conjugate-reversal", WithinTolerance, run_conjugate_reversal),
        def("conjugate-triple-reversal", WithinTolerance, run_conjugate_triple_reversal),
        def("conjugate-sandwich-left", WithinTolerance, run_conjugate_sandwich_left),
        def("conjugate-sandwich-right", WithinTolerance, run_conjugate_sandwich_right),
        def("rotor-cancellation-left", WithinTolerance, run_rotor_cancellation_left),
        def("rotor-cancellation-right", WithinTolerance, run_rotor_cancellation_right),
        def("rotor-quad-cancellation", WithinTolerance, run_rotor_quad_cancellation),
        def("complex-pairs-product", WithinTolerance, run_complex_pairs),
        def("commutator-form", WithinTolerance, run_commutator_form),
        def("anticommutator-form", WithinTolerance, run_anticommutator_form),
        def("commutator-antisymmetry", WithinTolerance, run_commutator_antisymmetry),
        def("commutator-linearity", WithinTolerance, run_commutator_linearity),
        def("jacobi-pure", WithinTolerance, run_jacobi_pure),
        def("jacobi-nonpure-witness", Exceeds(1e-3), run_jacobi_nonpure_witness),
        def("distributivity-left", WithinTolerance, run_distributivity_left),
        def("distributivity-right", WithinTolerance, run_distributivity_right),
        def("scalar-multiple-associates", WithinTolerance, run_scalar_multiple),
        def("norm-multiplicative", WithinTolerance, run_norm_multiplicative),
        def("squared-product-identity", WithinTolerance, run_squared_product),
        def("triple-pure-product-form", WithinTolerance, run_triple_pure_form),
        def("non-commutativity-witness", Exceeds(1e-3), run_non_commutativity_witness),
        def("non-associativity-witness", WithinTolerance, run_non_associativity_witness),
        def("tait-example", WithinTolerance, run_tait_example),
        def("basis-table", WithinTolerance, run_basis_table),
        def("zero-norm-existence", WithinTolerance, run_zero_norm_existence),
        def("product-matrix-apply", WithinTolerance, run_product_matrix_apply),
        def("product-matrix-orthogonality", WithinTolerance, run_product_matrix_orthogonality),
        def("divide-self", WithinTolerance, run_divide_self),
        def("right-factor-roundtrip", WithinTolerance, run_right_factor_roundtrip),
        def("left-factor-roundtrip", WithinTolerance, run_left_factor_roundtrip),
        def("factor-norms-equal", WithinTolerance, run_factor_norms_equal),
        def("factor-cross-identity", WithinTolerance, run_factor_cross_identity),
        def("equivalent-left-rotor", WithinTolerance, run_equivalent_left_rotor),
        def("quadratic-substitution", WithinTolerance, run_quadratic_substitution),
        def("rotation-preserves-norm", WithinTolerance, run_rotation_preserves_norm),
        def("rotation-linearity-product", WithinTolerance, run_rotation_linearity_product),
        def("rotation-linearity-sum", WithinTolerance, run_rotation_linearity_sum),
        def("inverse-rotation", WithinTolerance, run_inverse_rotation),
        def("euler-rodrigues-agreement", WithinTolerance, run_euler_rodrigues_agreement),
        def("double-rotation-doubles", WithinTolerance, run_double_rotation_doubles),
        def("coaxial-composition", WithinTolerance, run_coaxial_composition),
        def("general-composition", WithinTolerance, run_general_composition),
        def("order-sensitivity-witness", ExceedsToleranceTimes(10.0), run_order_sensitivity_witness),
        def("boost-invariance", WithinTolerance, run_boost_invariance),
        def("boost-closed-form", WithinTolerance, run_boost_closed_form),
        def("reflection-mirror-oracle", WithinTolerance, run_reflection_mirror_oracle),
        def("reflection-involution", WithinTolerance, run_reflection_involution),
        def("reflection-preserves-norm", WithinTolerance, run_reflection_preserves_norm),
        def("perpendicular-mirrors-half-turn", WithinTolerance, run_perpendicular_mirrors),
        def("parse-format-roundtrip", WithinTolerance, run_parse_format_roundtrip),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let cfg = VerifyConfig {
            samples: 50,
            ..VerifyConfig::default()
        };
        let report = run_suite(&cfg);
        for outcome in &report.outcomes {
            assert!(
                outcome.passed,
                "{} failed with worst residual {:e}",
                outcome.name, outcome.worst_residual
            );
        }
        assert!(report.all_passed());
        assert_eq!(report.passed_count(), report.outcomes.len());
    }

    #[test]
    fn single_sample_runs_every_identity() {
        let cfg = VerifyConfig {
            samples: 1,
            ..VerifyConfig::default()
        };
        let report = run_suite(&cfg);
        assert!(report.all_passed());
        assert!(report.outcomes.iter().all(|o| o.checks >= 1));
    }

    #[test]
    fn zero_tolerance_fails_float_identities_only() {
        let cfg = VerifyConfig {
            samples: 20,
            seed: 42,
            tolerance: 0.0,
        };
        let report = run_suite(&cfg);
        assert!(!report.all_passed());
        // Exact integer identities survive a zero tolerance.
        for name in [
            "bridge-identity",
            "basis-table",
            "self-square-is-norm",
            "norm-multiplicative",
            "squared-product-identity",
        ] {
            let outcome = report.outcome(name).expect("identity exists");
            assert!(outcome.passed, "{name} should be exact");
            assert_eq!(outcome.worst_residual, 0.0);
        }
        // Floating-point ones do not.
        let float_based = report.outcome("inverse-two-sided").unwrap();
        assert!(!float_based.passed);
    }

    #[test]
    fn report_is_deterministic_for_a_seed() {
        let cfg = VerifyConfig {
            samples: 30,
            seed: 7,
            tolerance: DEFAULT_EPSILON,
        };
        let a = run_suite(&cfg);
        let b = run_suite(&cfg);
        for (x, y) in a.outcomes.iter().zip(b.outcomes.iter()) {
            assert_eq!(x.name, y.name);
            assert_eq!(x.worst_residual.to_bits(), y.worst_residual.to_bits());
        }
    }

    #[test]
    fn criterion_identities_are_present() {
        let names: Vec<&str> = catalog().iter().map(|d| d.name).collect();
        for required in [
            "bridge-identity",
            "conjugate-reversal",
            "self-square-is-norm",
            "left-identity",
            "right-identity-conjugates",
            "inverse-two-sided",
            "rotor-cancellation-left",
            "rotor-cancellation-right",
            "distributivity-left",
            "distributivity-right",
            "squared-product-identity",
        ] {
            assert!(names.contains(&required), "missing identity {required}");
        }
    }
}
