//! The five classes of simple formally real Jordan algebras.
//!
//! Every algebra carries an orthonormal basis {𝕀, e_1, …, e_n} under the
//! trace-form inner product (a, b) = (1/ν) tr(a∘b), and elements are stored
//! as real coefficient vectors over that basis. Matrix realizations (for the
//! Hermitian classes) are used only inside product and trace computations;
//! spin factors use the closed-form product with vanishing structure
//! constants, so all classes share one element representation.
//!
//! Basis construction for the Hermitian classes is deterministic: the
//! canonical spanning set (diagonal units first, then symmetrized
//! off-diagonal units per imaginary unit in lexicographic order) is made
//! traceless and Gram–Schmidt orthonormalized in that order. This makes the
//! structure constants T_ijk reproducible.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand_distr::StandardNormal;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::composition::{CompositionScalar, Level};
use crate::config::Tolerances;
use crate::error::{JordanError, Result};
use crate::realization::{symmetrized_product, CompositionMatrix};

/// Which of the five classes an algebra belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraClass {
    /// J(Q): the unit plus n generators with e_i∘e_j = δ_ij 𝕀.
    SpinFactor { n: usize },
    /// Hermitian size×size matrices over ℝ, ℂ, ℍ, or (for size 3 only) 𝕆.
    Hermitian { level: Level, size: usize },
}

/// Flat JSON form of an algebra: `{"class": "spin"|"herm", "field": "R|C|H|O", "size": n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub size: usize,
}

impl AlgebraSpec {
    pub fn spin(n: usize) -> Self {
        AlgebraSpec { class: "spin".into(), field: None, size: n }
    }

    pub fn hermitian(level: Level, size: usize) -> Self {
        AlgebraSpec {
            class: "herm".into(),
            field: Some(level.symbol().to_string()),
            size,
        }
    }

    /// Construct the algebra this spec describes.
    pub fn build(&self) -> Result<Algebra> {
        match self.class.as_str() {
            "spin" => AlgebraDescriptor::spin_factor(self.size),
            "herm" => {
                let field = self.field.as_deref().ok_or_else(|| {
                    JordanError::InvalidArgument("hermitian spec requires a field tag".into())
                })?;
                let level = field
                    .chars()
                    .next()
                    .filter(|_| field.len() == 1)
                    .and_then(Level::from_symbol)
                    .ok_or_else(|| {
                        JordanError::InvalidArgument(format!(
                            "unknown field tag {field:?}; expected one of R, C, H, O"
                        ))
                    })?;
                if level == Level::Octonion {
                    if self.size != 3 {
                        return Err(JordanError::InvalidArgument(
                            "the octonionic Hermitian algebra only exists at size 3".into(),
                        ));
                    }
                    AlgebraDescriptor::exceptional()
                } else {
                    AlgebraDescriptor::hermitian(level, self.size)
                }
            }
            other => Err(JordanError::InvalidArgument(format!(
                "unknown algebra class {other:?}; expected \"spin\" or \"herm\""
            ))),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.field {
            Some(field) => write!(f, "{}({},{})", self.class, field, self.size),
            None => write!(f, "{}({})", self.class, self.size),
        }
    }
}

/// A constructed Jordan algebra: class, dimensions, basis realization and
/// structure constants. Immutable after construction; share it via [`Algebra`].
#[derive(Debug)]
pub struct AlgebraDescriptor {
    class: AlgebraClass,
    dim: usize,
    degree: usize,
    /// Concrete matrices for {𝕀, e_1, …, e_n}; `None` for spin factors.
    basis: Option<Vec<CompositionMatrix>>,
    /// T_ijk over the traceless basis, flattened as i·n² + j·n + k with
    /// n = dim − 1. All zeros for spin factors.
    structure: Vec<f64>,
}

/// Shared handle to an immutable algebra.
pub type Algebra = Arc<AlgebraDescriptor>;

impl AlgebraDescriptor {
    /// The spin factor J(Q) on n generators: dim n+1, degree 2, T ≡ 0.
    pub fn spin_factor(n: usize) -> Result<Algebra> {
        if n < 1 {
            return Err(JordanError::InvalidArgument(
                "a spin factor needs at least one generator".into(),
            ));
        }
        let dim = n + 1;
        Ok(Arc::new(AlgebraDescriptor {
            class: AlgebraClass::SpinFactor { n },
            dim,
            degree: 2,
            basis: None,
            structure: vec![0.0; n * n * n],
        }))
    }

    /// Hermitian size×size matrices over ℝ, ℂ or ℍ.
    pub fn hermitian(level: Level, size: usize) -> Result<Algebra> {
        if level == Level::Octonion {
            return Err(JordanError::UnsupportedClass(
                "use exceptional() for the octonionic Hermitian algebra".into(),
            ));
        }
        if size < 2 {
            return Err(JordanError::InvalidArgument(
                "hermitian matrix algebras need size >= 2".into(),
            ));
        }
        build_hermitian(level, size)
    }

    /// The exceptional algebra: 3×3 octonionic Hermitian matrices,
    /// dimension 27, degree 3.
    pub fn exceptional() -> Result<Algebra> {
        build_hermitian(Level::Octonion, 3)
    }

    pub fn class(&self) -> AlgebraClass {
        self.class
    }

    /// Vector-space dimension n + 1.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The degree ν: the size of every Jordan frame, and the trace of 𝕀.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn spec(&self) -> AlgebraSpec {
        match self.class {
            AlgebraClass::SpinFactor { n } => AlgebraSpec::spin(n),
            AlgebraClass::Hermitian { level, size } => AlgebraSpec::hermitian(level, size),
        }
    }

    pub fn name(&self) -> String {
        self.spec().to_string()
    }

    /// Structure constant T_ijk (zero-based traceless indices i, j, k < dim−1).
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> f64 {
        let n = self.dim - 1;
        self.structure[(i * n + j) * n + k]
    }

    /// The flat T tensor, indexed as i·n² + j·n + k.
    pub fn structure_constants(&self) -> &[f64] {
        &self.structure
    }

    /// T as a nested (i, j, k) array, for JSON export.
    pub fn structure_tensor(&self) -> Vec<Vec<Vec<f64>>> {
        let n = self.dim - 1;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.structure_constant(i, j, k)).collect())
                    .collect()
            })
            .collect()
    }

    /// Worst deviation among the six index permutations of any T entry.
    pub fn structure_symmetry_residual(&self) -> f64 {
        let n = self.dim - 1;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    let perms = [
                        self.structure_constant(i, j, k),
                        self.structure_constant(i, k, j),
                        self.structure_constant(j, i, k),
                        self.structure_constant(j, k, i),
                        self.structure_constant(k, i, j),
                        self.structure_constant(k, j, i),
                    ];
                    let max = perms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                    let min = perms.iter().cloned().fold(f64::INFINITY, f64::min);
                    worst = worst.max(max - min);
                }
            }
        }
        worst
    }

    pub fn structure_max_abs(&self) -> f64 {
        self.structure.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Count of T entries with |T_ijk| above the threshold.
    pub fn structure_nonzero_count(&self, threshold: f64) -> usize {
        self.structure.iter().filter(|x| x.abs() > threshold).count()
    }

    /// The matrix realization of basis element I, if this class has one.
    pub fn basis_matrix(&self, index: usize) -> Option<&CompositionMatrix> {
        self.basis.as_ref().map(|b| &b[index])
    }

    pub(crate) fn realize(&self, coeffs: &[f64]) -> Option<CompositionMatrix> {
        let basis = self.basis.as_ref()?;
        let (size, level) = match self.class {
            AlgebraClass::Hermitian { level, size } => (size, level),
            AlgebraClass::SpinFactor { .. } => return None,
        };
        let mut m = CompositionMatrix::zero(size, level);
        for (c, b) in coeffs.iter().zip(basis.iter()) {
            if *c != 0.0 {
                m.axpy(*c, b);
            }
        }
        Some(m)
    }

    /// Expand a matrix on the orthonormal basis, requiring the relative
    /// re-expansion residual to stay below `tol`.
    pub(crate) fn expand(&self, m: &CompositionMatrix, tol: f64) -> Result<(Vec<f64>, f64)> {
        let basis = self.basis.as_ref().ok_or_else(|| {
            JordanError::InternalConsistency("expand called on an abstract algebra".into())
        })?;
        let nu = self.degree as f64;
        let coeffs: Vec<f64> = basis.iter().map(|b| m.dot_real(b) / nu).collect();
        let mut recon = CompositionMatrix::zero(m.size(), m.level());
        for (c, b) in coeffs.iter().zip(basis.iter()) {
            recon.axpy(*c, b);
        }
        let residual =
            m.sub(&recon)?.frobenius_norm() / (1.0 + m.frobenius_norm());
        if residual > tol {
            return Err(JordanError::InternalConsistency(format!(
                "basis re-expansion residual {residual:.3e} exceeds {tol:.3e} in {}; \
                 the product left the Hermitian span",
                self.name()
            )));
        }
        Ok((coeffs, residual))
    }

    /// Whether two descriptors are interchangeable for element arithmetic.
    pub fn same_algebra(&self, other: &AlgebraDescriptor) -> bool {
        std::ptr::eq(self, other) || self.class == other.class
    }
}

fn build_hermitian(level: Level, size: usize) -> Result<Algebra> {
    let tols = Tolerances::default();
    let degree = size;
    let nu = degree as f64;
    let expected_dim = size + size * (size - 1) / 2 * level.dim();

    // Canonical Hermitian spanning set in deterministic order.
    let mut candidates: Vec<CompositionMatrix> = Vec::new();
    for i in 0..size {
        let mut m = CompositionMatrix::zero(size, level);
        m.set(i, i, CompositionScalar::one(level));
        candidates.push(m);
    }
    for i in 0..size {
        for j in (i + 1)..size {
            for u in 0..level.dim() {
                let unit = CompositionScalar::unit(level, u)?;
                let mut m = CompositionMatrix::zero(size, level);
                m.set(i, j, unit);
                m.set(j, i, unit.conj());
                candidates.push(m);
            }
        }
    }

    // Gram–Schmidt under (a, b) = (1/ν)·Re tr(a b), with 𝕀 fixed first.
    let inner = |a: &CompositionMatrix, b: &CompositionMatrix| a.dot_real(b) / nu;
    let mut basis: Vec<CompositionMatrix> = vec![CompositionMatrix::identity(size, level)];
    for cand in candidates {
        let mut v = cand;
        for _ in 0..2 {
            for b in &basis {
                let coeff = inner(&v, b);
                v.axpy(-coeff, b);
            }
        }
        let norm = inner(&v, &v).sqrt();
        if norm > 1e-10 {
            basis.push(v.scale(1.0 / norm));
        }
    }
    if basis.len() != expected_dim {
        return Err(JordanError::InternalConsistency(format!(
            "basis construction produced {} elements, expected {expected_dim}",
            basis.len()
        )));
    }

    let descriptor = AlgebraDescriptor {
        class: AlgebraClass::Hermitian { level, size },
        dim: expected_dim,
        degree,
        basis: Some(basis),
        structure: Vec::new(),
    };

    // T_ijk = (1/ν) tr((e_i∘e_j)∘e_k): the traceless coefficients of the
    // expanded product e_i∘e_j.
    let n = expected_dim - 1;
    let mut structure = vec![0.0; n * n * n];
    for i in 0..n {
        for j in i..n {
            let p = symmetrized_product(
                descriptor.basis_matrix(i + 1).unwrap(),
                descriptor.basis_matrix(j + 1).unwrap(),
            )?;
            let (coeffs, _) = descriptor.expand(&p, tols.reexpansion)?;
            let unit_coeff = coeffs[0];
            let expected_unit = if i == j { 1.0 } else { 0.0 };
            if (unit_coeff - expected_unit).abs() > tols.gram_identity {
                return Err(JordanError::InternalConsistency(format!(
                    "basis product e_{i}∘e_{j} has unit coefficient {unit_coeff}, expected {expected_unit}"
                )));
            }
            for k in 0..n {
                structure[(i * n + j) * n + k] = coeffs[k + 1];
                structure[(j * n + i) * n + k] = coeffs[k + 1];
            }
        }
    }

    let descriptor = AlgebraDescriptor { structure, ..descriptor };
    let symmetry = descriptor.structure_symmetry_residual();
    if symmetry > tols.structure_symmetry {
        return Err(JordanError::InternalConsistency(format!(
            "structure constants fail total symmetry by {symmetry:.3e}"
        )));
    }
    Ok(Arc::new(descriptor))
}

/// A member of a specific algebra: real coefficients over {𝕀, e_1, …, e_n}.
#[derive(Debug, Clone)]
pub struct Element {
    alg: Algebra,
    coeffs: Vec<f64>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_algebra(&other.alg) && self.coeffs == other.coeffs
    }
}

impl Element {
    pub fn from_coeffs(alg: &Algebra, coeffs: Vec<f64>) -> Result<Element> {
        if coeffs.len() != alg.dim() {
            return Err(JordanError::InvalidArgument(format!(
                "expected {} coefficients for {}, got {}",
                alg.dim(),
                alg.name(),
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(JordanError::InvalidArgument(
                "element coefficients must be finite".into(),
            ));
        }
        Ok(Element { alg: Arc::clone(alg), coeffs })
    }

    pub fn zero(alg: &Algebra) -> Element {
        Element { alg: Arc::clone(alg), coeffs: vec![0.0; alg.dim()] }
    }

    /// The unit 𝕀.
    pub fn unit(alg: &Algebra) -> Element {
        let mut e = Self::zero(alg);
        e.coeffs[0] = 1.0;
        e
    }

    /// Basis element e_I (index 0 is the unit).
    pub fn basis(alg: &Algebra, index: usize) -> Result<Element> {
        if index >= alg.dim() {
            return Err(JordanError::InvalidArgument(format!(
                "basis index {index} out of range for dimension {}",
                alg.dim()
            )));
        }
        let mut e = Self::zero(alg);
        e.coeffs[index] = 1.0;
        Ok(e)
    }

    /// Independent standard-normal coefficients.
    pub fn random<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
        let coeffs = (0..alg.dim()).map(|_| rng.sample(StandardNormal)).collect();
        Element { alg: Arc::clone(alg), coeffs }
    }

    /// Standard-normal coefficients with zero unit component.
    pub fn random_traceless<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
        let mut e = Self::random(alg, rng);
        e.coeffs[0] = 0.0;
        e
    }

    /// A random direction: standard-normal coefficients normalized to unit
    /// trace-form norm.
    pub fn random_unit<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
        loop {
            let e = Self::random(alg, rng);
            let n = e.norm();
            if n > 1e-6 {
                return e.scale(1.0 / n);
            }
        }
    }

    /// A random traceless direction of unit norm.
    pub fn random_traceless_unit<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
        loop {
            let e = Self::random_traceless(alg, rng);
            let n = e.norm();
            if n > 1e-6 {
                return e.scale(1.0 / n);
            }
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> f64 {
        self.coeffs[index]
    }

    fn check_same_algebra(&self, rhs: &Element, op: &str) -> Result<()> {
        if self.alg.same_algebra(&rhs.alg) {
            Ok(())
        } else {
            Err(JordanError::InvalidArgument(format!(
                "{op} requires elements of the same algebra ({} vs {})",
                self.alg.name(),
                rhs.alg.name()
            )))
        }
    }

    pub fn add(&self, rhs: &Element) -> Result<Element> {
        self.check_same_algebra(rhs, "add")?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Ok(Element { alg: Arc::clone(&self.alg), coeffs })
    }

    pub fn sub(&self, rhs: &Element) -> Result<Element> {
        self.check_same_algebra(rhs, "sub")?;
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Ok(Element { alg: Arc::clone(&self.alg), coeffs })
    }

    pub fn scale(&self, factor: f64) -> Element {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        Element { alg: Arc::clone(&self.alg), coeffs }
    }

    pub fn neg(&self) -> Element {
        self.scale(-1.0)
    }

    /// Coefficient 2-norm; equals the trace-form norm √(a, a) because the
    /// basis is orthonormal.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub(crate) fn coeff_dot(&self, rhs: &Element) -> f64 {
        self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a * b).sum()
    }

    /// True when every traceless coefficient is exactly zero, i.e. the
    /// element is a real multiple of 𝕀.
    pub fn is_unit_multiple(&self) -> bool {
        self.coeffs[1..].iter().all(|c| *c == 0.0)
    }

    /// Projection onto the traceless subspace (zero the 𝕀 coefficient).
    pub fn traceless_part(&self) -> Element {
        let mut e = self.clone();
        e.coeffs[0] = 0.0;
        e
    }

    /// The Jordan product a∘b = ½(ab + ba).
    ///
    /// Matrix classes compute the symmetrized matrix product and re-expand
    /// it on the basis, failing with an internal consistency error if the
    /// result leaves the Hermitian span. Spin factors use the closed form.
    /// Multiples of 𝕀 short-circuit to an exact scalar multiple.
    pub fn jordan_product(&self, rhs: &Element) -> Result<Element> {
        self.check_same_algebra(rhs, "jordan_product")?;
        if rhs.is_unit_multiple() {
            return Ok(self.scale(rhs.coeffs[0]));
        }
        if self.is_unit_multiple() {
            return Ok(rhs.scale(self.coeffs[0]));
        }
        match self.alg.class() {
            AlgebraClass::SpinFactor { .. } => {
                let a = &self.coeffs;
                let b = &rhs.coeffs;
                let mut out = vec![0.0; a.len()];
                out[0] = a.iter().zip(b.iter()).map(|(x, y)| x * y).sum();
                for i in 1..a.len() {
                    out[i] = a[0] * b[i] + b[0] * a[i];
                }
                Ok(Element { alg: Arc::clone(&self.alg), coeffs: out })
            }
            AlgebraClass::Hermitian { .. } => {
                let ma = self.alg.realize(&self.coeffs).expect("hermitian classes have a realization");
                let mb = self.alg.realize(&rhs.coeffs).expect("hermitian classes have a realization");
                let product = symmetrized_product(&ma, &mb)?;
                let (coeffs, _) = self.alg.expand(&product, Tolerances::default().reexpansion)?;
                Ok(Element { alg: Arc::clone(&self.alg), coeffs })
            }
        }
    }

    /// Jordan power a^k with a⁰ = 𝕀 and a^k = a∘a^(k−1).
    pub fn power(&self, k: usize) -> Result<Element> {
        let mut acc = Element::unit(&self.alg);
        for _ in 0..k {
            acc = self.jordan_product(&acc)?;
        }
        Ok(acc)
    }

    /// The trace form: tr 𝕀 = ν, tr e_i = 0, so tr(a) = ν a⁰.
    pub fn trace(&self) -> f64 {
        self.alg.degree() as f64 * self.coeffs[0]
    }

    /// The inner product (a, b) = (1/ν) tr(a∘b), computed through the
    /// product (not the coefficient shortcut), so orthonormality of the
    /// basis is a checkable property rather than an assumption.
    pub fn inner(&self, rhs: &Element) -> Result<f64> {
        Ok(self.jordan_product(rhs)?.coeffs[0])
    }

    /// Expand a concrete Hermitian matrix over this element's algebra.
    pub fn from_matrix(alg: &Algebra, matrix: &CompositionMatrix) -> Result<Element> {
        match alg.class() {
            AlgebraClass::SpinFactor { .. } => Err(JordanError::UnsupportedClass(
                "spin factors have no matrix realization".into(),
            )),
            AlgebraClass::Hermitian { level, size } => {
                if matrix.size() != size || matrix.level() != level {
                    return Err(JordanError::InvalidArgument(format!(
                        "matrix shape does not match {}",
                        alg.name()
                    )));
                }
                let herm = matrix.hermiticity_residual();
                if herm > 1e-10 * (1.0 + matrix.frobenius_norm()) {
                    return Err(JordanError::InvalidArgument(format!(
                        "matrix is not Hermitian (residual {herm:.3e})"
                    )));
                }
                let (coeffs, _) = alg
                    .expand(matrix, Tolerances::default().reexpansion)
                    .map_err(|_| {
                        JordanError::InvalidArgument(
                            "matrix does not lie in the Hermitian span of the algebra".into(),
                        )
                    })?;
                Ok(Element { alg: Arc::clone(alg), coeffs })
            }
        }
    }

    /// The matrix realization of this element, if the class has one.
    pub fn to_matrix(&self) -> Option<CompositionMatrix> {
        self.alg.realize(&self.coeffs)
    }
}

/// The associator [a, b, c] = a∘(b∘c) − (a∘b)∘c.
pub fn associator(a: &Element, b: &Element, c: &Element) -> Result<Element> {
    let left = a.jordan_product(&b.jordan_product(c)?)?;
    let right = a.jordan_product(b)?.jordan_product(c)?;
    left.sub(&right)
}

// Elements serialize as {"algebra": <spec>, "coeffs": [...]}.
#[derive(Serialize, Deserialize)]
struct ElementJson {
    algebra: AlgebraSpec,
    coeffs: Vec<f64>,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson { algebra: self.alg.spec(), coeffs: self.coeffs.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ElementJson::deserialize(deserializer)?;
        let alg = raw.algebra.build().map_err(D::Error::custom)?;
        Element::from_coeffs(&alg, raw.coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn pauli_matrix(which: usize) -> CompositionMatrix {
        let level = Level::Complex;
        let i = CompositionScalar::unit(level, 1).unwrap();
        let one = CompositionScalar::one(level);
        let mut m = CompositionMatrix::zero(2, level);
        match which {
            1 => {
                m.set(0, 1, one);
                m.set(1, 0, one);
            }
            2 => {
                m.set(0, 1, i.neg());
                m.set(1, 0, i);
            }
            3 => {
                m.set(0, 0, one);
                m.set(1, 1, one.neg());
            }
            _ => panic!("pauli index must be 1..=3"),
        }
        m
    }

    fn herm_c2() -> Algebra {
        AlgebraDescriptor::hermitian(Level::Complex, 2).unwrap()
    }

    #[test]
    fn constructor_validations() {
        assert!(AlgebraDescriptor::spin_factor(0).is_err());
        assert!(AlgebraDescriptor::hermitian(Level::Real, 1).is_err());
        assert!(AlgebraDescriptor::hermitian(Level::Octonion, 3).is_err());
    }

    #[test]
    fn dimensions_and_degrees() {
        let cases = [
            (AlgebraDescriptor::spin_factor(3).unwrap(), 4, 2),
            (AlgebraDescriptor::hermitian(Level::Real, 3).unwrap(), 6, 3),
            (AlgebraDescriptor::hermitian(Level::Complex, 2).unwrap(), 4, 2),
            (AlgebraDescriptor::hermitian(Level::Complex, 3).unwrap(), 9, 3),
            (AlgebraDescriptor::hermitian(Level::Quaternion, 2).unwrap(), 6, 2),
            (AlgebraDescriptor::exceptional().unwrap(), 27, 3),
        ];
        for (alg, dim, degree) in cases {
            assert_eq!(alg.dim(), dim, "{}", alg.name());
            assert_eq!(alg.degree(), degree, "{}", alg.name());
        }
    }

    #[test]
    fn spin_factor_generators_anticommute_like_paulis() {
        // e_i∘e_j = δ_ij 𝕀 is exactly the Pauli anticommutation relation.
        let alg = AlgebraDescriptor::spin_factor(3).unwrap();
        for i in 1..alg.dim() {
            for j in 1..alg.dim() {
                let p = Element::basis(&alg, i)
                    .unwrap()
                    .jordan_product(&Element::basis(&alg, j).unwrap())
                    .unwrap();
                let expected = if i == j {
                    Element::unit(&alg)
                } else {
                    Element::zero(&alg)
                };
                assert_eq!(p, expected);
            }
        }
        assert_eq!(alg.structure_max_abs(), 0.0);
    }

    #[test]
    fn spin_factor_closed_form_product() {
        let alg = AlgebraDescriptor::spin_factor(1).unwrap();
        let a = Element::from_coeffs(&alg, vec![2.0, 3.0]).unwrap();
        let b = Element::from_coeffs(&alg, vec![-1.0, 0.5]).unwrap();
        // (a⁰b⁰ + a¹b¹)𝕀 + (a⁰b¹ + b⁰a¹)e₁
        let p = a.jordan_product(&b).unwrap();
        assert_eq!(p.coeffs(), &[2.0 * -1.0 + 3.0 * 0.5, 2.0 * 0.5 + -1.0 * 3.0]);
    }

    #[test]
    fn herm_c2_basis_is_the_pauli_set_up_to_sign() {
        let alg = herm_c2();
        for i in 1..4 {
            let b = alg.basis_matrix(i).unwrap();
            let matched = (1..=3).any(|p| {
                let pm = pauli_matrix(p);
                b.sub(&pm).unwrap().frobenius_norm() < 1e-12
                    || b.add(&pm).unwrap().frobenius_norm() < 1e-12
            });
            assert!(matched, "basis element {i} is not a signed Pauli matrix");
        }
        assert!(alg.structure_max_abs() <= 1e-12);
    }

    #[test]
    fn herm_c3_structure_constants_are_nonzero_and_symmetric() {
        let alg = AlgebraDescriptor::hermitian(Level::Complex, 3).unwrap();
        assert!(alg.structure_max_abs() > 0.1);
        assert!(alg.structure_symmetry_residual() <= 1e-10);
    }

    #[test]
    fn unit_product_is_exact_in_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for alg in [
            AlgebraDescriptor::spin_factor(4).unwrap(),
            herm_c2(),
            AlgebraDescriptor::exceptional().unwrap(),
        ] {
            let unit = Element::unit(&alg);
            for _ in 0..10 {
                let a = Element::random(&alg, &mut rng);
                assert_eq!(a.jordan_product(&unit).unwrap(), a);
                assert_eq!(unit.jordan_product(&a).unwrap(), a);
            }
        }
    }

    #[test]
    fn pauli_products_in_herm_c2() {
        let alg = herm_c2();
        let s1 = Element::from_matrix(&alg, &pauli_matrix(1)).unwrap();
        let s2 = Element::from_matrix(&alg, &pauli_matrix(2)).unwrap();
        // Anticommuting Paulis: σ₁∘σ₂ = 0.
        let p = s1.jordan_product(&s2).unwrap();
        assert!(p.norm() <= 1e-14);

        // diag(1,2)∘σ₁ = 1.5 σ₁, by direct 2×2 arithmetic.
        let mut d = CompositionMatrix::zero(2, Level::Complex);
        d.set(0, 0, CompositionScalar::real(Level::Complex, 1.0));
        d.set(1, 1, CompositionScalar::real(Level::Complex, 2.0));
        let diag = Element::from_matrix(&alg, &d).unwrap();
        let p = diag.jordan_product(&s1).unwrap();
        let expected = s1.scale(1.5);
        assert!(p.sub(&expected).unwrap().norm() <= 1e-13);
    }

    #[test]
    fn powers_of_unit_and_idempotents() {
        let alg = herm_c2();
        let unit = Element::unit(&alg);
        assert_eq!(unit.power(5).unwrap(), unit);

        let s3 = Element::from_matrix(&alg, &pauli_matrix(3)).unwrap();
        let idem = unit.add(&s3).unwrap().scale(0.5);
        for k in 1..=6 {
            let p = idem.power(k).unwrap();
            assert!(p.sub(&idem).unwrap().norm() <= 1e-12, "E^{k} != E");
        }
    }

    #[test]
    fn power_bracketings_agree_in_the_exceptional_algebra() {
        let alg = AlgebraDescriptor::exceptional().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        for _ in 0..5 {
            let a = Element::random_unit(&alg, &mut rng);
            let sq = a.jordan_product(&a).unwrap();
            let lhs = sq.jordan_product(&sq).unwrap();
            let rhs = a
                .jordan_product(&a.jordan_product(&a.jordan_product(&a).unwrap()).unwrap())
                .unwrap();
            assert!(lhs.sub(&rhs).unwrap().norm() <= 1e-10);
        }
    }

    #[test]
    fn trace_and_inner_products_of_basis_elements() {
        for alg in [
            AlgebraDescriptor::spin_factor(2).unwrap(),
            herm_c2(),
            AlgebraDescriptor::hermitian(Level::Quaternion, 2).unwrap(),
            AlgebraDescriptor::exceptional().unwrap(),
        ] {
            let nu = alg.degree() as f64;
            assert_eq!(Element::unit(&alg).trace(), nu);
            for i in 1..alg.dim() {
                assert_eq!(Element::basis(&alg, i).unwrap().trace(), 0.0);
            }
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    let ei = Element::basis(&alg, i).unwrap();
                    let ej = Element::basis(&alg, j).unwrap();
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!(
                        (ei.inner(&ej).unwrap() - expected).abs() <= 1e-12,
                        "gram deviation at ({i},{j}) in {}",
                        alg.name()
                    );
                }
            }
        }
    }

    #[test]
    fn associator_with_the_unit_vanishes() {
        let alg = AlgebraDescriptor::hermitian(Level::Real, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let a = Element::random(&alg, &mut rng);
        let b = Element::random(&alg, &mut rng);
        let unit = Element::unit(&alg);
        assert!(associator(&a, &b, &unit).unwrap().norm() <= 1e-12);
        assert!(associator(&unit, &a, &b).unwrap().norm() <= 1e-12);
    }

    #[test]
    fn jordan_identity_as_an_associator() {
        // associator(a², b, a) = 0 is the Jordan identity rearranged.
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for alg in [
            AlgebraDescriptor::spin_factor(5).unwrap(),
            AlgebraDescriptor::hermitian(Level::Quaternion, 3).unwrap(),
            AlgebraDescriptor::exceptional().unwrap(),
        ] {
            for _ in 0..5 {
                let a = Element::random_unit(&alg, &mut rng);
                let b = Element::random_unit(&alg, &mut rng);
                let sq = a.jordan_product(&a).unwrap();
                let res = associator(&sq, &b, &a).unwrap().norm();
                assert!(res <= 1e-11, "jordan identity residual {res} in {}", alg.name());
            }
        }
    }

    // Independent oracle: complex 2×2 arithmetic on plain (re, im) pairs.
    mod complex_oracle {
        pub type C = (f64, f64);
        pub type M = [[C; 2]; 2];

        fn cmul(a: C, b: C) -> C {
            (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
        }

        fn cadd(a: C, b: C) -> C {
            (a.0 + b.0, a.1 + b.1)
        }

        pub fn mat_mul(a: &M, b: &M) -> M {
            let mut out = [[(0.0, 0.0); 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    let mut acc = (0.0, 0.0);
                    for k in 0..2 {
                        acc = cadd(acc, cmul(a[i][k], b[k][j]));
                    }
                    out[i][j] = acc;
                }
            }
            out
        }

        pub fn mat_combine(alpha: f64, a: &M, beta: f64, b: &M) -> M {
            let mut out = [[(0.0, 0.0); 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    out[i][j] = (
                        alpha * a[i][j].0 + beta * b[i][j].0,
                        alpha * a[i][j].1 + beta * b[i][j].1,
                    );
                }
            }
            out
        }

        pub fn jordan(a: &M, b: &M) -> M {
            let ab = mat_mul(a, b);
            let ba = mat_mul(b, a);
            mat_combine(0.5, &ab, 0.5, &ba)
        }
    }

    #[test]
    fn herm_c2_associator_matches_the_complex_oracle() {
        use complex_oracle::*;

        let alg = herm_c2();
        let s1 = Element::from_matrix(&alg, &pauli_matrix(1)).unwrap();
        let s2 = Element::from_matrix(&alg, &pauli_matrix(2)).unwrap();
        let b = Element::unit(&alg).add(&s1).unwrap().scale(0.5);

        let got = associator(&s1, &b, &s2).unwrap();
        // Frozen value: −½σ₂.
        let expected = s2.scale(-0.5);
        assert!(got.sub(&expected).unwrap().norm() <= 1e-13);

        // Oracle route on raw complex matrices.
        let ms1: M = [[(0.0, 0.0), (1.0, 0.0)], [(1.0, 0.0), (0.0, 0.0)]];
        let ms2: M = [[(0.0, 0.0), (0.0, -1.0)], [(0.0, 1.0), (0.0, 0.0)]];
        let mid: M = [[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (1.0, 0.0)]];
        let mb = mat_combine(0.5, &mid, 0.5, &ms1);
        let left = jordan(&ms1, &jordan(&mb, &ms2));
        let right = jordan(&jordan(&ms1, &mb), &ms2);
        let oracle = mat_combine(1.0, &left, -1.0, &right);
        // oracle should be −½σ₂ entrywise
        let target = [[(0.0, 0.0), (0.0, 0.5)], [(0.0, -0.5), (0.0, 0.0)]];
        for i in 0..2 {
            for j in 0..2 {
                assert!((oracle[i][j].0 - target[i][j].0).abs() <= 1e-14);
                assert!((oracle[i][j].1 - target[i][j].1).abs() <= 1e-14);
            }
        }
    }

    #[test]
    fn algebra_mismatch_is_rejected() {
        let a = Element::unit(&herm_c2());
        let b = Element::unit(&AlgebraDescriptor::spin_factor(3).unwrap());
        assert!(a.jordan_product(&b).is_err());
        assert!(a.add(&b).is_err());
        assert!(a.inner(&b).is_err());
    }

    #[test]
    fn element_json_round_trip() {
        let alg = AlgebraDescriptor::hermitian(Level::Real, 2).unwrap();
        let e = Element::from_coeffs(&alg, vec![1.0, -0.25, 0.5]).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        assert!(json.contains("\"class\":\"herm\""));
        let back: Element = serde_json::from_str(&json).unwrap();
        assert_eq!(back.coeffs(), e.coeffs());

        let spec: AlgebraSpec = serde_json::from_str(r#"{"class":"spin","size":4}"#).unwrap();
        assert_eq!(spec.build().unwrap().dim(), 5);
        let bad: AlgebraSpec = serde_json::from_str(r#"{"class":"herm","field":"O","size":2}"#).unwrap();
        assert!(bad.build().is_err());
    }
}
