//! Matrices over F[ε]/(ε²), for exact first-order expansions.

use crate::linalg::Matrix;
use std::ops::{Add, Mul, Sub};

/// re + ε·eps with ε² = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualMatrix {
    pub re: Matrix,
    pub eps: Matrix,
}

impl DualMatrix {
    pub fn new(re: Matrix, eps: Matrix) -> DualMatrix {
        assert_eq!((re.rows(), re.cols()), (eps.rows(), eps.cols()), "dual parts must have equal shape");
        DualMatrix { re, eps }
    }

    /// Embeds a plain matrix with zero ε-part.
    pub fn real(m: Matrix) -> DualMatrix {
        let eps = Matrix::zeros(m.field(), m.rows(), m.cols());
        DualMatrix { re: m, eps }
    }

    pub fn identity(m: &Matrix) -> DualMatrix {
        DualMatrix::real(Matrix::identity(m.field(), m.rows()))
    }
}

impl Mul for &DualMatrix {
    type Output = DualMatrix;
    fn mul(self, o: &DualMatrix) -> DualMatrix {
        DualMatrix { re: &self.re * &o.re, eps: &(&self.re * &o.eps) + &(&self.eps * &o.re) }
    }
}

impl Add for &DualMatrix {
    type Output = DualMatrix;
    fn add(self, o: &DualMatrix) -> DualMatrix {
        DualMatrix { re: &self.re + &o.re, eps: &self.eps + &o.eps }
    }
}

impl Sub for &DualMatrix {
    type Output = DualMatrix;
    fn sub(self, o: &DualMatrix) -> DualMatrix {
        DualMatrix { re: &self.re - &o.re, eps: &self.eps - &o.eps }
    }
}
