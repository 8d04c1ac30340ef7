//! Operation counting and timing for the two composition representations.
//!
//! The multiplication/addition counts are measured, not assumed: the shared
//! product kernels are instantiated with a counting scalar that increments
//! thread-local tallies on every `*`, `+`, and `-`. Because the counted code
//! path is the same generic kernel the library executes on complex scalars,
//! the tallies describe the shipped formulas. Wall-clock timings are taken
//! separately on plain doubles and reported per operation; counts are the
//! claim, timings are informative.

use crate::kernels::{fourvector_product, mat3_product};
use std::cell::Cell;
use std::hint::black_box;
use std::ops::{Add, Mul, Sub};
use std::time::Instant;

/// Expected tally for one 4-component product.
pub const FOURVECTOR_MULTS: u64 = 16;
pub const FOURVECTOR_ADDS: u64 = 12;
/// Expected tally for one 3×3 matrix product.
pub const MATRIX_MULTS: u64 = 27;
pub const MATRIX_ADDS: u64 = 18;

thread_local! {
    static MULTS: Cell<u64> = const { Cell::new(0) };
    static ADDS: Cell<u64> = const { Cell::new(0) };
}

/// A double that tallies every arithmetic operation it participates in.
/// Additions and subtractions both count as additions, matching how
/// operation counts for composition formulas are conventionally quoted.
#[derive(Copy, Clone, Debug, PartialEq)]
struct Counted(f64);

impl Add for Counted {
    type Output = Counted;
    fn add(self, rhs: Counted) -> Counted {
        ADDS.with(|c| c.set(c.get() + 1));
        Counted(self.0 + rhs.0)
    }
}

// The tally bump inside `sub`/`mul` is deliberate instrumentation, not a
// mistaken operator.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Counted {
    type Output = Counted;
    fn sub(self, rhs: Counted) -> Counted {
        ADDS.with(|c| c.set(c.get() + 1));
        Counted(self.0 - rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Counted {
    type Output = Counted;
    fn mul(self, rhs: Counted) -> Counted {
        MULTS.with(|c| c.set(c.get() + 1));
        Counted(self.0 * rhs.0)
    }
}

/// Tallies observed while evaluating one composition.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct OperationCounts {
    pub multiplications: u64,
    pub additions: u64,
}

fn with_counters<R>(f: impl FnOnce() -> R) -> (R, OperationCounts) {
    MULTS.with(|c| c.set(0));
    ADDS.with(|c| c.set(0));
    let result = f();
    let counts = OperationCounts {
        multiplications: MULTS.with(Cell::get),
        additions: ADDS.with(Cell::get),
    };
    (result, counts)
}

/// Count the scalar operations in one 4-component product.
pub fn count_fourvector_product() -> OperationCounts {
    let a = [Counted(1.0), Counted(2.0), Counted(3.0), Counted(4.0)];
    let b = [Counted(5.0), Counted(6.0), Counted(7.0), Counted(8.0)];
    let (out, counts) = with_counters(|| fourvector_product(a, b));
    black_box(out);
    counts
}

/// Count the scalar operations in one 3×3 matrix product.
pub fn count_matrix_product() -> OperationCounts {
    let a = [[Counted(1.0); 3]; 3];
    let b = [[Counted(2.0); 3]; 3];
    let (out, counts) = with_counters(|| mat3_product(a, b));
    black_box(out);
    counts
}

/// Measured counts and per-operation timings for both representations.
#[derive(Copy, Clone, Debug)]
pub struct BenchReport {
    pub mults_fourvector: u64,
    pub adds_fourvector: u64,
    pub mults_matrix: u64,
    pub adds_matrix: u64,
    pub wall_time_ns_per_op_fourvector: f64,
    pub wall_time_ns_per_op_matrix: f64,
    pub iterations: u64,
}

impl BenchReport {
    /// True when the measured counts equal the advertised 16/12 and 27/18.
    pub fn counts_match_claim(&self) -> bool {
        self.mults_fourvector == FOURVECTOR_MULTS
            && self.adds_fourvector == FOURVECTOR_ADDS
            && self.mults_matrix == MATRIX_MULTS
            && self.adds_matrix == MATRIX_ADDS
    }
}

/// Warm up with 10% of the iteration budget, then report the median
/// ns-per-op over five timed batches.
fn median_ns_per_op(iterations: u64, mut op: impl FnMut()) -> f64 {
    let warmup = (iterations / 10).max(1);
    for _ in 0..warmup {
        op();
    }
    let mut batches = [0.0_f64; 5];
    for slot in &mut batches {
        let start = Instant::now();
        for _ in 0..iterations {
            op();
        }
        *slot = start.elapsed().as_nanos() as f64 / iterations as f64;
    }
    batches.sort_by(f64::total_cmp);
    batches[2]
}

/// Run the benchmark: instrumented counts once, timings over `iterations`
/// repetitions per batch.
pub fn run_bench(iterations: u64) -> BenchReport {
    let iterations = iterations.max(1);
    let fv_counts = count_fourvector_product();
    let mat_counts = count_matrix_product();

    let a = black_box([0.37, -1.25, 0.82, 2.11_f64]);
    let b = black_box([1.61, 0.44, -0.93, 0.58_f64]);
    let fv_ns = median_ns_per_op(iterations, || {
        black_box(fourvector_product(black_box(a), black_box(b)));
    });

    let m = black_box([[0.31, -0.75, 1.12], [0.66, 0.28, -0.41], [-1.04, 0.93, 0.57_f64]]);
    let n = black_box([[1.21, 0.35, -0.66], [-0.52, 0.87, 0.14], [0.73, -0.29, 1.08_f64]]);
    let mat_ns = median_ns_per_op(iterations, || {
        black_box(mat3_product(black_box(m), black_box(n)));
    });

    BenchReport {
        mults_fourvector: fv_counts.multiplications,
        adds_fourvector: fv_counts.additions,
        mults_matrix: mat_counts.multiplications,
        adds_matrix: mat_counts.additions,
        wall_time_ns_per_op_fourvector: fv_ns,
        wall_time_ns_per_op_matrix: mat_ns,
        iterations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourvector_product_counts() {
        let counts = count_fourvector_product();
        assert_eq!(counts.multiplications, FOURVECTOR_MULTS);
        assert_eq!(counts.additions, FOURVECTOR_ADDS);
    }

    #[test]
    fn matrix_product_counts() {
        let counts = count_matrix_product();
        assert_eq!(counts.multiplications, MATRIX_MULTS);
        assert_eq!(counts.additions, MATRIX_ADDS);
    }

    #[test]
    fn counted_arithmetic_matches_plain() {
        let ((), counts) = with_counters(|| {
            let x = Counted(3.0) * Counted(4.0) + Counted(1.0) - Counted(2.0);
            assert_eq!(x.0, 11.0);
        });
        assert_eq!(counts.multiplications, 1);
        assert_eq!(counts.additions, 2);
    }

    #[test]
    fn minimal_run_reports_everything() {
        let report = run_bench(1);
        assert!(report.counts_match_claim());
        assert_eq!(report.iterations, 1);
        assert!(report.wall_time_ns_per_op_fourvector >= 0.0);
        assert!(report.wall_time_ns_per_op_matrix >= 0.0);
    }

    #[test]
    fn counters_reset_between_measurements() {
        let first = count_fourvector_product();
        let second = count_fourvector_product();
        assert_eq!(first, second);
    }
}
