//! Factor equations, division and quadratic fourvector polynomials.
//!
//! Because the product is non-commutative, "divide A by B" splits into two
//! factor problems: find X with B ** X == A (`right_factor`) and Y with
//! Y ** B == A (`left_factor`). Both have closed forms. The quadratic
//! solver handles q**q + q**C == K and q**q + C**q == K.

use crate::error::{Error, Result};
use crate::fourvector::Fourvector;
use crate::rotation::Rotor;
use crate::scalar::ComplexScalar;
use std::cmp::Ordering;

/// Which side of the product the unknown sits on in the linear term.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Side {
    /// q ** q + C ** q == K.
    Left,
    /// q ** q + q ** C == K.
    Right,
}

/// Roots of a quadratic fourvector equation.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticSolution {
    /// 0, 1 or 2 roots, in lexicographic order by the (re, im) pairs of
    /// the components t, x, y, z.
    pub solutions: Vec<Fourvector>,
    /// Set when the linear subsystem is rank-deficient and an infinite
    /// parametric family exists; no roots are enumerated in that case.
    pub degenerate: bool,
}

/// P ** Q⁻¹.
pub fn divide(p: Fourvector, q: Fourvector) -> Result<Fourvector> {
    Ok(p.product(q.inverse()?))
}

/// The X with B ** X == A, namely conjugate(B)⁻¹ ** A.
pub fn right_factor(a: Fourvector, b: Fourvector) -> Result<Fourvector> {
    Ok(b.conjugate().inverse()?.product(a))
}

/// The Y with Y ** B == A, namely hamilton(conjugate(A), B⁻¹).
pub fn left_factor(a: Fourvector, b: Fourvector) -> Result<Fourvector> {
    Ok(a.conjugate().hamilton(b.inverse()?))
}

/// The left factor L with L ** p == rotate(p, r): applying L is the same
/// as rotating p with r. Computed as hamilton((conjugate(p) ** r) ** r, p⁻¹),
/// returned unsimplified.
pub fn equivalent_left_rotor(p: Fourvector, r: Rotor) -> Result<Fourvector> {
    let rv = r.value();
    let sandwich = p.conjugate().product(rv).product(rv);
    Ok(sandwich.hamilton(p.inverse()?))
}

/// The left-hand side q**q + q**C (side=right) or q**q + C**q (side=left);
/// substituting a root reproduces K.
pub fn quadratic_lhs(side: Side, q: Fourvector, c: Fourvector) -> Fourvector {
    let linear = match side {
        Side::Right => q.product(c),
        Side::Left => c.product(q),
    };
    q.product(q) + linear
}

fn dot4(a: [ComplexScalar; 4], b: [ComplexScalar; 4]) -> ComplexScalar {
    a.iter()
        .zip(b.iter())
        .fold(ComplexScalar::ZERO, |acc, (x, y)| acc + *x * *y)
}

fn lex_order(a: &Fourvector, b: &Fourvector) -> Ordering {
    let key = |v: &Fourvector| {
        let c = v.components();
        [c[0].re, c[0].im, c[1].re, c[1].im, c[2].re, c[2].im, c[3].re, c[3].im]
    };
    key(a)
        .iter()
        .zip(key(b).iter())
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Solve q**q + q**C == K (side=right) or q**q + C**q == K (side=left).
///
/// The square q**q is a pure scalar, so the three vector components of the
/// equation are linear in q. Gauss-Jordan elimination with partial
/// pivoting reduces that 3x4 system; at full rank the solution line
/// q = u + s v turns the scalar component into one complex quadratic in s.
/// Rank below 3 means a parametric family: reported as degenerate.
pub fn solve_quadratic(side: Side, c: Fourvector, k: Fourvector) -> Result<QuadraticSolution> {
    let [c0, c1, c2, c3] = c.components();

    // Vector components of q ** C as a linear map on (q0, q1, q2, q3).
    let mut rows = [
        [c1, -c0, c3, -c2, k.x],
        [c2, -c3, -c0, c1, k.y],
        [c3, c2, -c1, -c0, k.z],
    ];
    // The vector part of C ** q is the negation of that of q ** C.
    if side == Side::Left {
        for row in &mut rows {
            for entry in row.iter_mut().take(4) {
                *entry = -*entry;
            }
        }
    }

    let scale = rows
        .iter()
        .flat_map(|row| row.iter().take(4))
        .map(|e| e.abs())
        .fold(1.0_f64, f64::max);
    let pivot_tol = 1e-12 * scale;

    // Gauss-Jordan with partial pivoting, tracking pivot columns.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut next_row = 0;
    for col in 0..4 {
        if next_row >= 3 {
            break;
        }
        let (best, best_abs) = (next_row..3)
            .map(|r| (r, rows[r][col].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if best_abs <= pivot_tol {
            continue;
        }
        rows.swap(next_row, best);
        let pivot = rows[next_row][col];
        for entry in rows[next_row].iter_mut() {
            *entry = *entry / pivot;
        }
        for r in 0..3 {
            if r == next_row {
                continue;
            }
            let factor = rows[r][col];
            let pivot_row = rows[next_row];
            for (entry, pivot_entry) in rows[r].iter_mut().zip(pivot_row.iter()) {
                *entry -= factor * *pivot_entry;
            }
            rows[r][col] = ComplexScalar::ZERO;
        }
        pivot_cols.push(col);
        next_row += 1;
    }

    if pivot_cols.len() < 3 {
        return Ok(QuadraticSolution {
            solutions: Vec::new(),
            degenerate: true,
        });
    }

    let free = (0..4).find(|col| !pivot_cols.contains(col)).unwrap();

    // Particular solution (free component 0) and kernel direction
    // (free component 1): the solution line is q = u + s v.
    let mut u = [ComplexScalar::ZERO; 4];
    let mut v = [ComplexScalar::ZERO; 4];
    v[free] = ComplexScalar::ONE;
    for (r, &col) in pivot_cols.iter().enumerate() {
        u[col] = rows[r][4];
        v[col] = -rows[r][free];
    }

    // Scalar component: q.q + C.q == K_t, with q = u + s v, becomes
    // (v.v) s^2 + (2 u.v + C.v) s + (u.u + C.u - K_t) == 0.
    let cv = c.components();
    let qa = dot4(v, v);
    let qb = dot4(u, v) * 2.0 + dot4(cv, v);
    let qc = dot4(u, u) + dot4(cv, u) - k.t;

    let coeff_scale = qa.abs().max(qb.abs()).max(qc.abs()).max(1.0);
    let coeff_tol = 1e-12 * coeff_scale;

    let line_point = |s: ComplexScalar| {
        Fourvector::from_components(std::array::from_fn(|i| u[i] + s * v[i]))
    };

    // At full rank the kernel of the linear map is spanned by C itself,
    // whose norm is then necessarily nonzero, so v.v cannot vanish; the
    // two fallback branches guard numerically marginal inputs.
    let mut solutions: Vec<Fourvector> = if qa.abs() > coeff_tol {
        let disc = qb * qb - ComplexScalar::real(4.0) * qa * qc;
        let root = disc.sqrt();
        let two_a = ComplexScalar::real(2.0) * qa;
        let s1 = (-qb + root) / two_a;
        let s2 = (-qb - root) / two_a;
        let mut sols = vec![line_point(s1)];
        if s1 != s2 {
            sols.push(line_point(s2));
        }
        sols
    } else if qb.abs() > coeff_tol {
        vec![line_point(-qc / qb)]
    } else if qc.abs() <= coeff_tol {
        return Ok(QuadraticSolution {
            solutions: Vec::new(),
            degenerate: true,
        });
    } else {
        return Err(Error::NoSolution);
    };

    solutions.sort_by(lex_order);
    Ok(QuadraticSolution {
        solutions,
        degenerate: false,
    })
}
