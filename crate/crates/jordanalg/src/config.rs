//! Named numerical tolerances and thresholds.
//!
//! Every check in the library reads its tolerance from this table so that
//! the CLI can override any of them by name (`--tol <name>=<value>`).

use serde::{Deserialize, Serialize};

use crate::error::{JordanError, Result};

/// All tunable tolerances, with the defaults the test suites are pinned to.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Tolerances {
    /// ‖a∘b − b∘a‖ on random pairs.
    pub commutativity: f64,
    /// Jordan identity residual, scaled by (1 + ‖a‖²‖b‖).
    pub jordan_identity: f64,
    /// |inner(e_I, e_J) − δ_IJ| over the whole basis.
    pub gram_identity: f64,
    /// Negative part of trace(a²) on random elements.
    pub formal_reality: f64,
    /// ‖aⁿ∘aᵐ − aⁿ⁺ᵐ‖ on random unit-norm elements.
    pub power_associativity: f64,
    /// Total-symmetry residual of the structure constants T_ijk.
    pub structure_symmetry: f64,
    /// Relative residual of re-expanding a product matrix on the basis;
    /// breaching it is an internal consistency error.
    pub reexpansion: f64,
    /// Hermiticity residual of basis-pair product matrices.
    pub product_hermiticity: f64,
    /// Spectral reconstruction residual, scaled by (1 + ‖a‖).
    pub spectral_reconstruction: f64,
    /// ‖Σ E_α − 𝕀‖ for a spectral decomposition.
    pub spectral_completeness: f64,
    /// ‖E_α ∘ E_β‖ for α ≠ β.
    pub spectral_orthogonality: f64,
    /// Relative gap under which minimal-polynomial roots count as merged.
    pub root_merge: f64,
    /// Relative singular-value threshold declaring a power linearly
    /// dependent on the lower ones.
    pub minpoly_rank: f64,
    /// Window around `minpoly_rank` inside which two singular values make
    /// the numerical rank ambiguous.
    pub rank_ambiguity: f64,
    /// Eigenvalues must exceed this for cone membership.
    pub cone: f64,
    /// ‖a² − a‖ for idempotency.
    pub idempotent: f64,
    /// |trace(E) − 1| for primitivity.
    pub primitive_trace: f64,
    /// |trace(x)| allowed for "traceless" inputs to derivations.
    pub traceless: f64,
    /// |trace(ρ) − 1| for density elements.
    pub trace_one: f64,
    /// Density eigenvalues may dip this far below zero.
    pub density_floor: f64,
    /// ‖ρ² − ρ‖ under which a density element counts as pure.
    pub purity_pure: f64,
    /// Trajectory flag thresholds.
    pub trace_drift: f64,
    pub purity_drift: f64,
    pub eigenvalue_drift: f64,
    /// Derivation-algebra residuals.
    pub leibniz: f64,
    pub derivation_antisymmetry: f64,
    pub associator_equality: f64,
    pub jacobi: f64,
    /// Sup-norm tolerance for the commutator-picture comparison.
    pub equivalence: f64,
    /// Trajectory gap between different λ offsets of the same Hamiltonian.
    pub lambda_independence: f64,
    /// Max residual of the associator-vs-commutator constant fit.
    pub fit_residual: f64,
    /// Matrix-product associator norm that counts as a non-associativity
    /// witness.
    pub associator_probe: f64,
    /// |trace(h∘ρ)| that counts as a trace violation.
    pub translation_rate: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            commutativity: 1e-12,
            jordan_identity: 1e-9,
            gram_identity: 1e-10,
            formal_reality: 1e-10,
            power_associativity: 1e-9,
            structure_symmetry: 1e-10,
            reexpansion: 1e-8,
            product_hermiticity: 1e-12,
            spectral_reconstruction: 1e-8,
            spectral_completeness: 1e-9,
            spectral_orthogonality: 1e-9,
            root_merge: 1e-7,
            minpoly_rank: 1e-8,
            rank_ambiguity: 1e-6,
            cone: 1e-10,
            idempotent: 1e-9,
            primitive_trace: 1e-6,
            traceless: 1e-10,
            trace_one: 1e-9,
            density_floor: 1e-9,
            purity_pure: 1e-9,
            trace_drift: 1e-7,
            purity_drift: 1e-6,
            eigenvalue_drift: 1e-6,
            leibniz: 1e-9,
            derivation_antisymmetry: 1e-12,
            associator_equality: 1e-12,
            jacobi: 1e-9,
            equivalence: 1e-6,
            lambda_independence: 1e-12,
            fit_residual: 1e-10,
            associator_probe: 0.1,
            translation_rate: 1e-3,
        }
    }
}

impl Tolerances {
    /// Override a tolerance by name. Unknown names are rejected.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        if !value.is_finite() || value < 0.0 {
            return Err(JordanError::InvalidArgument(format!(
                "tolerance {name} must be a nonnegative finite number"
            )));
        }
        let slot = match name {
            "commutativity" => &mut self.commutativity,
            "jordan_identity" => &mut self.jordan_identity,
            "gram_identity" => &mut self.gram_identity,
            "formal_reality" => &mut self.formal_reality,
            "power_associativity" => &mut self.power_associativity,
            "structure_symmetry" => &mut self.structure_symmetry,
            "reexpansion" => &mut self.reexpansion,
            "product_hermiticity" => &mut self.product_hermiticity,
            "spectral_reconstruction" => &mut self.spectral_reconstruction,
            "spectral_completeness" => &mut self.spectral_completeness,
            "spectral_orthogonality" => &mut self.spectral_orthogonality,
            "root_merge" => &mut self.root_merge,
            "minpoly_rank" => &mut self.minpoly_rank,
            "rank_ambiguity" => &mut self.rank_ambiguity,
            "cone" => &mut self.cone,
            "idempotent" => &mut self.idempotent,
            "primitive_trace" => &mut self.primitive_trace,
            "traceless" => &mut self.traceless,
            "trace_one" => &mut self.trace_one,
            "density_floor" => &mut self.density_floor,
            "purity_pure" => &mut self.purity_pure,
            "trace_drift" => &mut self.trace_drift,
            "purity_drift" => &mut self.purity_drift,
            "eigenvalue_drift" => &mut self.eigenvalue_drift,
            "leibniz" => &mut self.leibniz,
            "derivation_antisymmetry" => &mut self.derivation_antisymmetry,
            "associator_equality" => &mut self.associator_equality,
            "jacobi" => &mut self.jacobi,
            "equivalence" => &mut self.equivalence,
            "lambda_independence" => &mut self.lambda_independence,
            "fit_residual" => &mut self.fit_residual,
            "associator_probe" => &mut self.associator_probe,
            "translation_rate" => &mut self.translation_rate,
            _ => {
                return Err(JordanError::InvalidArgument(format!(
                    "unknown tolerance name: {name}"
                )))
            }
        };
        *slot = value;
        Ok(())
    }
}
