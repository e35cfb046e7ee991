//! Pure and mixed states as unit-trace elements of the closed positivity
//! cone, with expectation values ⟨a⟩ = tr(a∘ρ).

use rand::Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{Algebra, Element};
use crate::config::Tolerances;
use crate::error::{JordanError, Result};
use crate::spectral::{self, JordanFrame};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Pure,
    Mixed,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Pure => "pure",
            Classification::Mixed => "mixed",
        }
    }
}

/// A density element: trace one, eigenvalues in the closed cone, classified
/// pure exactly when it is idempotent. Invariants are re-validated on every
/// construction, including states imported from an evolution step, so
/// integration drift is caught rather than silently propagated.
#[derive(Debug, Clone)]
pub struct DensityElement {
    element: Element,
    classification: Classification,
    purity: f64,
    min_eigenvalue: f64,
}

impl DensityElement {
    /// Wrap a primitive idempotent as a pure state.
    pub fn pure_state(e: &Element) -> Result<DensityElement> {
        Self::pure_state_with(e, &Tolerances::default())
    }

    pub fn pure_state_with(e: &Element, tols: &Tolerances) -> Result<DensityElement> {
        if !spectral::is_primitive_with(e, tols) {
            return Err(JordanError::InvalidArgument(format!(
                "pure states must be primitive idempotents (trace {}, idempotent: {})",
                e.trace(),
                spectral::is_idempotent_with(e, tols)
            )));
        }
        Self::from_element_with(e, tols)
    }

    /// ρ = Σ p_α E_α over a complete orthogonal frame of primitive
    /// idempotents. Probabilities below 1e-12 are clamped to zero and the
    /// vector renormalized.
    pub fn mixed_state(frame: &JordanFrame, probabilities: &[f64]) -> Result<DensityElement> {
        Self::mixed_state_with(frame, probabilities, &Tolerances::default())
    }

    pub fn mixed_state_with(
        frame: &JordanFrame,
        probabilities: &[f64],
        tols: &Tolerances,
    ) -> Result<DensityElement> {
        if probabilities.len() != frame.len() {
            return Err(JordanError::InvalidArgument(format!(
                "probability vector length {} does not match frame size {}",
                probabilities.len(),
                frame.len()
            )));
        }
        if probabilities.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(JordanError::InvalidArgument(
                "probabilities must be nonnegative finite numbers".into(),
            ));
        }
        let raw_sum: f64 = probabilities.iter().sum();
        if (raw_sum - 1.0).abs() > 1e-9 {
            return Err(JordanError::InvalidArgument(format!(
                "probabilities must sum to 1, got {raw_sum}"
            )));
        }
        let mut p: Vec<f64> = probabilities
            .iter()
            .map(|x| if *x < 1e-12 { 0.0 } else { *x })
            .collect();
        let sum: f64 = p.iter().sum();
        for x in &mut p {
            *x /= sum;
        }

        let alg = frame.idempotents()[0].algebra();
        let mut rho = Element::zero(alg);
        for (weight, idem) in p.iter().zip(frame.idempotents()) {
            rho = rho.add(&idem.scale(*weight))?;
        }
        Self::from_element_with(&rho, tols)
    }

    /// Validate an arbitrary element as a density element. This is the entry
    /// point used when importing evolution steps.
    pub fn from_element(element: &Element) -> Result<DensityElement> {
        Self::from_element_with(element, &Tolerances::default())
    }

    pub fn from_element_with(element: &Element, tols: &Tolerances) -> Result<DensityElement> {
        let trace = element.trace();
        if (trace - 1.0).abs() > tols.trace_one {
            return Err(JordanError::InvalidArgument(format!(
                "density elements must have unit trace, got {trace}"
            )));
        }
        let min_eigenvalue = spectral::min_eigenvalue_with(element, tols)?;
        if min_eigenvalue < -tols.density_floor {
            return Err(JordanError::InvalidArgument(format!(
                "density element has eigenvalue {min_eigenvalue} outside the closed cone"
            )));
        }
        let square = element.jordan_product(element)?;
        let purity = square.trace();
        let classification = if square.sub(element)?.norm() <= tols.purity_pure {
            Classification::Pure
        } else {
            Classification::Mixed
        };
        Ok(DensityElement {
            element: element.clone(),
            classification,
            purity,
            min_eigenvalue,
        })
    }

    /// Assemble from precomputed diagnostics. The caller (the integrator)
    /// has already validated the invariants against its drift thresholds.
    pub(crate) fn assemble(
        element: Element,
        classification: Classification,
        purity: f64,
        min_eigenvalue: f64,
    ) -> DensityElement {
        DensityElement { element, classification, purity, min_eigenvalue }
    }

    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn algebra(&self) -> &Algebra {
        self.element.algebra()
    }

    pub fn classification(&self) -> Classification {
        self.classification
    }

    pub fn is_pure(&self) -> bool {
        self.classification == Classification::Pure
    }

    /// tr(ρ∘ρ): 1 exactly for pure states, 1/ν at maximal mixing.
    pub fn purity(&self) -> f64 {
        self.purity
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }

    /// A reproducible random mixed state: the frame of a random element,
    /// mixed with floored uniform weights so every eigenvalue stays well
    /// inside the cone.
    pub fn random_mixed<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Result<DensityElement> {
        let frame = spectral::jordan_frame(&Element::random(alg, rng))?;
        let raw: Vec<f64> = (0..frame.len()).map(|_| rng.gen_range(0.0..1.0) + 0.2).collect();
        let total: f64 = raw.iter().sum();
        let p: Vec<f64> = raw.iter().map(|x| x / total).collect();
        Self::mixed_state(&frame, &p)
    }

    /// A reproducible random pure state: one member of the frame of a
    /// random element.
    pub fn random_pure<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Result<DensityElement> {
        let frame = spectral::jordan_frame(&Element::random(alg, rng))?;
        let index = rng.gen_range(0..frame.len());
        Self::pure_state(&frame.idempotents()[index])
    }
}

// Density JSON is the element serialization plus purity and classification.
impl Serialize for DensityElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DensityElement", 4)?;
        s.serialize_field("algebra", &self.element.algebra().spec())?;
        s.serialize_field("coeffs", self.element.coeffs())?;
        s.serialize_field("purity", &self.purity)?;
        s.serialize_field("classification", self.classification.as_str())?;
        s.end()
    }
}

/// Expectation value ⟨a⟩ = tr(a∘ρ).
pub fn expectation(a: &Element, rho: &DensityElement) -> Result<f64> {
    Ok(a.jordan_product(rho.element())?.trace())
}
