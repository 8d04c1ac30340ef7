//! The basis elements e, i, j, k and their multiplication table.

use crate::fourvector::Fourvector;
use crate::scalar::ComplexScalar;

/// One of the four basis elements. `E` is the scalar unit (a left
/// identity only); `I`, `J`, `K` are the pure units.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    E = 0,
    I = 1,
    J = 2,
    K = 3,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::E, Basis::I, Basis::J, Basis::K];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn from_index(index: usize) -> Option<Basis> {
        match index {
            0 => Some(Basis::E),
            1 => Some(Basis::I),
            2 => Some(Basis::J),
            3 => Some(Basis::K),
            _ => None,
        }
    }

    pub const fn symbol(self) -> &'static str {
        match self {
            Basis::E => "e",
            Basis::I => "i",
            Basis::J => "j",
            Basis::K => "k",
        }
    }

    /// The unit fourvector for this basis element.
    pub fn unit(self) -> Fourvector {
        let mut c = [ComplexScalar::ZERO; 4];
        c[self.index()] = ComplexScalar::ONE;
        Fourvector::from_components(c)
    }
}

/// A signed basis element: the value of one cell of the multiplication
/// table.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisProduct {
    /// +1 or -1.
    pub sign: i8,
    /// Index of the resulting basis element, 0..=3.
    pub index: usize,
}

impl BasisProduct {
    pub fn to_fourvector(self) -> Fourvector {
        let mut c = [ComplexScalar::ZERO; 4];
        c[self.index] = ComplexScalar::real(self.sign as f64);
        Fourvector::from_components(c)
    }

    /// Render as "e", "-i", and so on.
    pub fn symbol(self) -> String {
        let unit = Basis::from_index(self.index).expect("index in 0..=3").symbol();
        if self.sign < 0 {
            format!("-{unit}")
        } else {
            unit.to_string()
        }
    }
}

const fn cell(sign: i8, index: usize) -> BasisProduct {
    BasisProduct { sign, index }
}

/// Multiplication table for the defining product; rows are the left
/// factor, columns the right factor, both in the order e, i, j, k.
pub const TABLE: [[BasisProduct; 4]; 4] = [
    [cell(1, 0), cell(1, 1), cell(1, 2), cell(1, 3)],
    [cell(-1, 1), cell(1, 0), cell(1, 3), cell(-1, 2)],
    [cell(-1, 2), cell(-1, 3), cell(1, 0), cell(1, 1)],
    [cell(-1, 3), cell(1, 2), cell(-1, 1), cell(1, 0)],
];

/// Product of two basis elements under the defining product.
pub fn basis_product(left: Basis, right: Basis) -> BasisProduct {
    TABLE[left.index()][right.index()]
}
