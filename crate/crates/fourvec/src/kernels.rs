//! Generic arithmetic kernels shared by the numeric fourvector type and the
//! instrumented operation-count benchmark. Keeping a single expression of
//! each product guarantees the counted formula is the executed formula.

use std::ops::{Add, Mul, Sub};

/// Anything the product kernels can be evaluated over: plain floats,
/// complex scalars, integers, or a counting wrapper.
pub trait Scalar: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {}

impl<T> Scalar for T where T: Copy + Add<Output = T> + Sub<Output = T> + Mul<Output = T> {}

/// The fourvector product on raw component quadruples, ordered (t, x, y, z).
///
/// 16 multiplications and 12 additions/subtractions.
pub fn fourvector_product<T: Scalar>(a: [T; 4], b: [T; 4]) -> [T; 4] {
    let [at, ax, ay, az] = a;
    let [bt, bx, by, bz] = b;
    [
        at * bt + ax * bx + ay * by + az * bz,
        at * bx - ax * bt + ay * bz - az * by,
        at * by - ax * bz - ay * bt + az * bx,
        at * bz + ax * by - ay * bx - az * bt,
    ]
}

/// The Hamilton (quaternion) product on raw component quadruples.
///
/// 16 multiplications and 12 additions/subtractions.
pub fn hamilton_product<T: Scalar>(a: [T; 4], b: [T; 4]) -> [T; 4] {
    let [at, ax, ay, az] = a;
    let [bt, bx, by, bz] = b;
    [
        at * bt - ax * bx - ay * by - az * bz,
        at * bx + ax * bt + ay * bz - az * by,
        at * by - ax * bz + ay * bt + az * bx,
        at * bz + ax * by - ay * bx + az * bt,
    ]
}

/// Plain 3x3 matrix product, the cost baseline for composing rotations
/// in matrix form.
///
/// 27 multiplications and 18 additions.
pub fn mat3_product<T: Scalar>(a: [[T; 3]; 3], b: [[T; 3]; 3]) -> [[T; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j])
    })
}
