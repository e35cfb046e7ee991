//! Square matrices over a composition algebra.
//!
//! These are the concrete realizations behind the Hermitian Jordan algebra
//! classes. Matrix multiplication is the raw (possibly non-associative)
//! entrywise product; the Jordan structure lives one level up.

use crate::composition::{CompositionScalar, Level};
use crate::error::{JordanError, Result};

/// A size × size matrix with entries in ℝ, ℂ, ℍ or 𝕆, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositionMatrix {
    size: usize,
    level: Level,
    entries: Vec<CompositionScalar>,
}

impl CompositionMatrix {
    pub fn zero(size: usize, level: Level) -> Self {
        CompositionMatrix {
            size,
            level,
            entries: vec![CompositionScalar::zero(level); size * size],
        }
    }

    pub fn identity(size: usize, level: Level) -> Self {
        let mut m = Self::zero(size, level);
        for i in 0..size {
            m.set(i, i, CompositionScalar::one(level));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn get(&self, row: usize, col: usize) -> &CompositionScalar {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: CompositionScalar) {
        assert_eq!(value.level(), self.level, "entry level must match the matrix level");
        self.entries[row * self.size + col] = value;
    }

    fn compatible(&self, rhs: &Self) -> Result<()> {
        if self.size != rhs.size || self.level != rhs.level {
            return Err(JordanError::InvalidArgument(
                "matrix operands must share size and scalar level".into(),
            ));
        }
        Ok(())
    }

    /// Raw matrix product Σ_k a_ik b_kj. Not associative at the octonion
    /// level.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.compatible(rhs)?;
        let n = self.size;
        let mut out = Self::zero(n, self.level);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CompositionScalar::zero(self.level);
                for k in 0..n {
                    acc = acc.add_raw(&self.get(i, k).mul_raw(rhs.get(k, j)));
                }
                out.entries[i * n + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.compatible(rhs)?;
        let mut out = self.clone();
        for (o, r) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *o = o.add_raw(r);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.compatible(rhs)?;
        let mut out = self.clone();
        for (o, r) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *o = o.sub_raw(r);
        }
        Ok(out)
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.scale(factor);
        }
        out
    }

    pub fn conj_transpose(&self) -> Self {
        let n = self.size;
        let mut out = Self::zero(n, self.level);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.get(i, j).conj();
            }
        }
        out
    }

    /// Frobenius norm of M − M*.
    pub fn hermiticity_residual(&self) -> f64 {
        self.sub(&self.conj_transpose())
            .expect("conjugate transpose shares shape")
            .frobenius_norm()
    }

    /// Real Frobenius inner product: the plain dot product of all real
    /// coefficients of all entries. For Hermitian a, b this equals
    /// Re tr(a b), the trace form of the Jordan product up to the 1/ν
    /// normalization.
    pub fn dot_real(&self, rhs: &Self) -> f64 {
        self.entries
            .iter()
            .zip(rhs.entries.iter())
            .map(|(a, b)| {
                a.coeffs().iter().zip(b.coeffs().iter()).map(|(x, y)| x * y).sum::<f64>()
            })
            .sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.dot_real(self).sqrt()
    }

    /// Real part of the matrix trace.
    pub fn trace_re(&self) -> f64 {
        (0..self.size).map(|i| self.get(i, i).re()).sum()
    }

    /// out += factor · rhs
    pub fn axpy(&mut self, factor: f64, rhs: &Self) {
        for (o, r) in self.entries.iter_mut().zip(rhs.entries.iter()) {
            *o = o.add_raw(&r.scale(factor));
        }
    }
}

/// The symmetrized product ½(ab + ba). Hermitian whenever a and b are.
pub fn symmetrized_product(a: &CompositionMatrix, b: &CompositionMatrix) -> Result<CompositionMatrix> {
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    Ok(ab.add(&ba)?.scale(0.5))
}

/// Associator of the raw matrix product, (ab)c − a(bc). Zero for associative
/// scalar levels; generically nonzero over the octonions.
pub fn matrix_product_associator(
    a: &CompositionMatrix,
    b: &CompositionMatrix,
    c: &CompositionMatrix,
) -> Result<CompositionMatrix> {
    let left = a.mul(b)?.mul(c)?;
    let right = a.mul(&b.mul(c)?)?;
    left.sub(&right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_multiplies_trivially() {
        let id = CompositionMatrix::identity(3, Level::Quaternion);
        let mut m = CompositionMatrix::zero(3, Level::Quaternion);
        m.set(0, 1, CompositionScalar::unit(Level::Quaternion, 2).unwrap());
        m.set(1, 0, CompositionScalar::unit(Level::Quaternion, 2).unwrap().conj());
        m.set(2, 2, CompositionScalar::real(Level::Quaternion, -4.0));
        assert_eq!(m.mul(&id).unwrap(), m);
        assert_eq!(id.mul(&m).unwrap(), m);
        assert!(m.hermiticity_residual() <= 1e-15);
    }

    #[test]
    fn symmetrized_product_of_hermitians_is_hermitian() {
        let u = CompositionScalar::unit(Level::Octonion, 5).unwrap();
        let mut a = CompositionMatrix::zero(3, Level::Octonion);
        a.set(0, 1, u);
        a.set(1, 0, u.conj());
        a.set(2, 2, CompositionScalar::real(Level::Octonion, 2.0));
        let mut b = CompositionMatrix::zero(3, Level::Octonion);
        let v = CompositionScalar::unit(Level::Octonion, 3).unwrap();
        b.set(1, 2, v);
        b.set(2, 1, v.conj());
        b.set(0, 0, CompositionScalar::real(Level::Octonion, -1.0));

        let p = symmetrized_product(&a, &b).unwrap();
        assert!(p.hermiticity_residual() <= 1e-14);
    }

    #[test]
    fn matrix_associator_vanishes_over_complex() {
        let mut a = CompositionMatrix::zero(2, Level::Complex);
        a.set(0, 1, CompositionScalar::unit(Level::Complex, 1).unwrap());
        a.set(1, 0, CompositionScalar::unit(Level::Complex, 1).unwrap().conj());
        let b = CompositionMatrix::identity(2, Level::Complex).scale(2.0);
        let c = a.clone();
        let assoc = matrix_product_associator(&a, &b, &c).unwrap();
        assert!(assoc.frobenius_norm() <= 1e-15);
    }
}
