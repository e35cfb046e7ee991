//! The seeded identity suite: every algebraic property the construction
//! promises, measured on reproducible random samples and reported as one
//! row per property.
//!
//! Each batch draws from its own ChaCha stream derived from the configured
//! seed, so results are byte-identical across runs and independent of batch
//! execution order.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Algebra, AlgebraClass, AlgebraDescriptor, AlgebraSpec, Element};
use crate::composition::Level;
use crate::config::Tolerances;
use crate::dynamics::{self, fmt17, EvolveOptions};
use crate::error::Result;
use crate::realization::matrix_product_associator;
use crate::spectral;
use crate::states::DensityElement;

/// Sample counts and numerical configuration for a suite run.
#[derive(Debug, Clone, Serialize)]
pub struct CheckConfig {
    pub seed: u64,
    pub axiom_samples: usize,
    pub power_samples: usize,
    pub spectral_samples: usize,
    pub derivation_samples: usize,
    pub jacobi_samples: usize,
    pub trajectory_samples: usize,
    pub translation_samples: usize,
    pub equivalence_samples: usize,
    pub t_end: f64,
    pub dt: f64,
    #[serde(skip)]
    pub tolerances: Tolerances,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: 42,
            axiom_samples: 500,
            power_samples: 100,
            spectral_samples: 200,
            derivation_samples: 200,
            jacobi_samples: 50,
            trajectory_samples: 5,
            translation_samples: 100,
            equivalence_samples: 2,
            t_end: 1.0,
            dt: 1e-3,
            tolerances: Tolerances::default(),
        }
    }
}

fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Whether a row passes by staying at or below the threshold, or by
/// reaching at least it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub samples: usize,
    pub statistic: f64,
    pub threshold: f64,
    pub direction: Direction,
    pub passed: bool,
}

impl PropertyResult {
    fn at_most(name: &'static str, samples: usize, statistic: f64, threshold: f64) -> Self {
        PropertyResult {
            name,
            samples,
            statistic,
            threshold,
            direction: Direction::AtMost,
            passed: statistic <= threshold,
        }
    }

    fn at_least(name: &'static str, samples: usize, statistic: f64, threshold: f64) -> Self {
        PropertyResult {
            name,
            samples,
            statistic,
            threshold,
            direction: Direction::AtLeast,
            passed: statistic >= threshold,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub algebra: AlgebraSpec,
    pub dim: usize,
    pub degree: usize,
    pub seed: u64,
    pub fitted_constant: Option<f64>,
    pub rows: Vec<PropertyResult>,
    pub passed: bool,
}

impl CheckReport {
    /// Fixed-layout text table; floats at 17 significant digits.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "algebra {}  dim {}  degree {}  seed {}\n",
            self.algebra, self.dim, self.degree, self.seed
        ));
        if let Some(c) = self.fitted_constant {
            out.push_str(&format!("fitted associator/commutator constant c = {}\n", fmt17(c)));
        }
        out.push_str(&format!(
            "{:<34} {:>8} {:>24} cmp {:>12} result\n",
            "property", "samples", "statistic", "threshold"
        ));
        for row in &self.rows {
            let cmp = match row.direction {
                Direction::AtMost => "<=",
                Direction::AtLeast => ">=",
            };
            out.push_str(&format!(
                "{:<34} {:>8} {:>24} {cmp:>3} {:>12.3e} {}\n",
                row.name,
                row.samples,
                fmt17(row.statistic),
                row.threshold,
                if row.passed { "pass" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "overall: {} ({} properties)\n",
            if self.passed { "pass" } else { "FAIL" },
            self.rows.len()
        ));
        out
    }
}

// ---------------------------------------------------------------------------
// Individual property batches
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
pub struct AxiomResiduals {
    pub commutativity: f64,
    /// Scaled by (1 + ‖a‖²‖b‖).
    pub jordan_identity: f64,
    /// Max coefficient deviation of 𝕀∘a from a; exactly zero by
    /// construction.
    pub unit_identity: f64,
    pub gram_identity: f64,
    /// Negative part of trace(a²); zero for a formally real construction.
    pub formal_reality: f64,
}

pub fn axiom_residuals(alg: &Algebra, seed: u64, samples: usize) -> Result<AxiomResiduals> {
    let mut rng = stream(seed, 1);
    let unit = Element::unit(alg);
    let mut commutativity: f64 = 0.0;
    let mut jordan: f64 = 0.0;
    let mut unit_identity: f64 = 0.0;
    let mut formal_reality: f64 = 0.0;

    for _ in 0..samples {
        let a = Element::random(alg, &mut rng);
        let b = Element::random(alg, &mut rng);

        let ab = a.jordan_product(&b)?;
        let ba = b.jordan_product(&a)?;
        commutativity = commutativity.max(ab.sub(&ba)?.norm());

        let sq = a.jordan_product(&a)?;
        let lhs = a.jordan_product(&sq.jordan_product(&b)?)?;
        let rhs = sq.jordan_product(&ab)?;
        let scale = 1.0 + a.norm() * a.norm() * b.norm();
        jordan = jordan.max(lhs.sub(&rhs)?.norm() / scale);

        let ua = unit.jordan_product(&a)?;
        let deviation = ua
            .coeffs()
            .iter()
            .zip(a.coeffs())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        unit_identity = unit_identity.max(deviation);

        formal_reality = formal_reality.max(-sq.trace().min(0.0));
    }

    let mut gram: f64 = 0.0;
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let ei = Element::basis(alg, i)?;
            let ej = Element::basis(alg, j)?;
            let expected = if i == j { 1.0 } else { 0.0 };
            gram = gram.max((ei.inner(&ej)? - expected).abs());
        }
    }

    Ok(AxiomResiduals {
        commutativity,
        jordan_identity: jordan,
        unit_identity,
        gram_identity: gram,
        formal_reality,
    })
}

/// Max ‖aⁿ∘aᵐ − aⁿ⁺ᵐ‖ over n + m ≤ 8 on unit-norm random elements.
/// Directions are normalized because eighth powers of unnormalized
/// 27-dimensional elements reach 1e7 and drown the comparison in rounding.
pub fn power_associativity_residual(alg: &Algebra, seed: u64, samples: usize) -> Result<f64> {
    let mut rng = stream(seed, 2);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let a = Element::random_unit(alg, &mut rng);
        let mut powers = vec![Element::unit(alg)];
        for k in 1..=8usize {
            let next = a.jordan_product(&powers[k - 1])?;
            powers.push(next);
        }
        for n in 0..=8usize {
            for m in 0..=(8 - n) {
                let lhs = powers[n].jordan_product(&powers[m])?;
                worst = worst.max(lhs.sub(&powers[n + m])?.norm());
            }
        }
    }
    Ok(worst)
}

/// Max Hermiticity residual of e_I∘e_J product matrices over all basis
/// pairs; `None` for spin factors.
pub fn product_hermiticity_residual(alg: &Algebra) -> Result<Option<f64>> {
    if alg.basis_matrix(0).is_none() {
        return Ok(None);
    }
    let mut worst: f64 = 0.0;
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let a = alg.basis_matrix(i).unwrap();
            let b = alg.basis_matrix(j).unwrap();
            let p = crate::realization::symmetrized_product(a, b)?;
            worst = worst.max(p.hermiticity_residual() / (1.0 + p.frobenius_norm()));
        }
    }
    Ok(Some(worst))
}

/// Whether the class is one where T ≡ 0 is promised.
pub fn structure_vanishes_by_class(alg: &Algebra) -> bool {
    match alg.class() {
        AlgebraClass::SpinFactor { .. } => true,
        AlgebraClass::Hermitian { level: Level::Complex, size: 2 } => true,
        AlgebraClass::Hermitian { level: Level::Real, size: 2 } => true,
        _ => false,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SpectralStats {
    /// Scaled by (1 + ‖a‖).
    pub reconstruction: f64,
    pub completeness: f64,
    pub orthogonality: f64,
    pub inner_orthogonality: f64,
    /// Max |frame size − ν| across samples.
    pub frame_cardinality: f64,
    pub frame_trace: f64,
    /// Against the dense Hermitian eigenvalue oracle; complex class only.
    pub eigen_oracle: Option<f64>,
}

/// Dense eigenvalue oracle for real and complex Hermitian classes: the
/// complex matrix X + iY embeds as the real symmetric [[X, −Y], [Y, X]],
/// whose spectrum is the doubled spectrum of the original.
pub fn hermitian_eigen_oracle(a: &Element) -> Result<Vec<f64>> {
    let m = dynamics::element_to_complex(a)?;
    let n = m.nrows();
    let embedded = DMatrix::<f64>::from_fn(2 * n, 2 * n, |i, j| {
        let (bi, bj) = (i % n, j % n);
        match (i < n, j < n) {
            (true, true) | (false, false) => m[(bi, bj)].re,
            (true, false) => -m[(bi, bj)].im,
            (false, true) => m[(bi, bj)].im,
        }
    });
    let mut eigen: Vec<f64> = SymmetricEigen::new(embedded).eigenvalues.iter().cloned().collect();
    eigen.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(eigen.into_iter().step_by(2).collect())
}

pub fn spectral_stats(
    alg: &Algebra,
    seed: u64,
    samples: usize,
    tols: &Tolerances,
) -> Result<SpectralStats> {
    let mut rng = stream(seed, 3);
    let unit = Element::unit(alg);
    let is_complex = matches!(alg.class(), AlgebraClass::Hermitian { level: Level::Complex, .. });

    let mut stats = SpectralStats {
        reconstruction: 0.0,
        completeness: 0.0,
        orthogonality: 0.0,
        inner_orthogonality: 0.0,
        frame_cardinality: 0.0,
        frame_trace: 0.0,
        eigen_oracle: if is_complex { Some(0.0) } else { None },
    };

    for _ in 0..samples {
        let a = Element::random(alg, &mut rng);
        let spectral = spectral::spectral_decompose_with(&a, tols)?;

        stats.reconstruction = stats
            .reconstruction
            .max(spectral.reconstruct().sub(&a)?.norm() / (1.0 + a.norm()));

        let mut sum = Element::zero(alg);
        for e in spectral.idempotents() {
            sum = sum.add(e)?;
        }
        stats.completeness = stats.completeness.max(sum.sub(&unit)?.norm());

        for i in 0..spectral.idempotents().len() {
            for j in (i + 1)..spectral.idempotents().len() {
                let ei = &spectral.idempotents()[i];
                let ej = &spectral.idempotents()[j];
                stats.orthogonality = stats.orthogonality.max(ei.jordan_product(ej)?.norm());
                stats.inner_orthogonality = stats.inner_orthogonality.max(ei.inner(ej)?.abs());
            }
        }

        let frame = spectral::jordan_frame_with(&a, tols)?;
        stats.frame_cardinality = stats
            .frame_cardinality
            .max((frame.len() as f64 - alg.degree() as f64).abs());
        for e in frame.idempotents() {
            stats.frame_trace = stats.frame_trace.max((e.trace() - 1.0).abs());
        }

        if let Some(oracle_worst) = stats.eigen_oracle.as_mut() {
            let mine = spectral.eigenvalues_with_multiplicity();
            let oracle = hermitian_eigen_oracle(&a)?;
            for (x, y) in mine.iter().zip(&oracle) {
                *oracle_worst = oracle_worst.max((x - y).abs());
            }
        }
    }
    Ok(stats)
}

#[derive(Debug, Clone, Copy)]
pub struct DerivationStats {
    pub multiplication_symmetry: f64,
    pub leibniz: f64,
    pub antisymmetry: f64,
    pub associator_equality: f64,
    pub jacobi: f64,
    pub commutator_leibniz: f64,
}

pub fn derivation_stats(
    alg: &Algebra,
    seed: u64,
    samples: usize,
    jacobi_samples: usize,
    tols: &Tolerances,
) -> Result<DerivationStats> {
    let mut rng = stream(seed, 4);
    let mut stats = DerivationStats {
        multiplication_symmetry: 0.0,
        leibniz: 0.0,
        antisymmetry: 0.0,
        associator_equality: 0.0,
        jacobi: 0.0,
        commutator_leibniz: 0.0,
    };

    for _ in 0..samples {
        let x = Element::random_traceless_unit(alg, &mut rng);
        let y = Element::random_traceless_unit(alg, &mut rng);
        let lx = dynamics::multiplication_operator(&x)?;
        stats.multiplication_symmetry = stats.multiplication_symmetry.max(lx.symmetry_residual());

        let d = dynamics::derivation_with(&x, &y, tols)?;
        stats.antisymmetry = stats.antisymmetry.max(d.antisymmetry_residual());

        let a = Element::random_unit(alg, &mut rng);
        let b = Element::random_unit(alg, &mut rng);
        stats.leibniz = stats.leibniz.max(d.leibniz_residual(&a, &b)?);

        let applied = d.apply(&b)?;
        let assoc = crate::algebra::associator(&x, &b, &y)?;
        stats.associator_equality =
            stats.associator_equality.max(applied.sub(&assoc)?.norm());
    }

    for _ in 0..jacobi_samples {
        let mut gen = |rng: &mut ChaCha8Rng| Element::random_traceless_unit(alg, rng);
        let (x1, y1) = (gen(&mut rng), gen(&mut rng));
        let (x2, y2) = (gen(&mut rng), gen(&mut rng));
        let (x3, y3) = (gen(&mut rng), gen(&mut rng));
        stats.jacobi =
            stats.jacobi.max(dynamics::jacobi_check(&x1, &y1, &x2, &y2, &x3, &y3)?);

        let d1 = dynamics::derivation_with(&x1, &y1, tols)?;
        let d2 = dynamics::derivation_with(&x2, &y2, tols)?;
        let commutator = d1.commutator(&d2);
        let a = Element::random_unit(alg, &mut rng);
        let b = Element::random_unit(alg, &mut rng);
        stats.commutator_leibniz =
            stats.commutator_leibniz.max(commutator.leibniz_residual(&a, &b)?);
    }
    Ok(stats)
}

#[derive(Debug, Clone, Copy)]
pub struct ConservationStats {
    pub trace_drift: f64,
    /// Purity drift of initially pure trajectories.
    pub purity_drift_pure: f64,
    pub eigenvalue_drift: f64,
    pub cone_preserved: bool,
    pub failed_trajectories: usize,
}

pub fn conservation_stats(
    alg: &Algebra,
    seed: u64,
    trajectories: usize,
    t_end: f64,
    dt: f64,
    tols: &Tolerances,
) -> Result<ConservationStats> {
    let mut rng = stream(seed, 5);
    let opts = EvolveOptions { t_end, dt, tolerances: tols.clone() };
    let mut stats = ConservationStats {
        trace_drift: 0.0,
        purity_drift_pure: 0.0,
        eigenvalue_drift: 0.0,
        cone_preserved: true,
        failed_trajectories: 0,
    };

    for index in 0..trajectories {
        let pure_start = index % 2 == 0;
        let rho0 = if pure_start {
            DensityElement::random_pure(alg, &mut rng)?
        } else {
            DensityElement::random_mixed(alg, &mut rng)?
        };
        let x = Element::random_traceless_unit(alg, &mut rng);
        let y = Element::random_traceless_unit(alg, &mut rng);
        let trajectory = dynamics::evolve(&rho0, &x, &y, &opts)?;

        stats.trace_drift = stats.trace_drift.max(trajectory.max_trace_drift());
        if pure_start {
            stats.purity_drift_pure =
                stats.purity_drift_pure.max(trajectory.max_purity_drift());
        }
        stats.eigenvalue_drift = stats.eigenvalue_drift.max(trajectory.max_eigenvalue_drift());
        stats.cone_preserved &= trajectory.cone_preserved();
        if !trajectory.passed() {
            stats.failed_trajectories += 1;
        }
    }
    Ok(stats)
}

/// Largest matrix-product associator ‖(e_I e_J) e_K − e_I (e_J e_K)‖ over
/// all basis triples. ~0 for associative scalar levels, order 1 for the
/// octonionic class; `None` where no matrix realization exists.
pub fn matrix_associativity_probe(alg: &Algebra) -> Result<Option<f64>> {
    if alg.basis_matrix(0).is_none() {
        return Ok(None);
    }
    let mut worst: f64 = 0.0;
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            for k in 0..alg.dim() {
                let assoc = matrix_product_associator(
                    alg.basis_matrix(i).unwrap(),
                    alg.basis_matrix(j).unwrap(),
                    alg.basis_matrix(k).unwrap(),
                )?;
                worst = worst.max(assoc.frobenius_norm());
            }
        }
    }
    Ok(Some(worst))
}

/// Fraction of (traceless h, pure ρ) samples whose translation trace rate
/// |tr(h∘ρ)| exceeds the violation threshold.
pub fn translation_violation_rate(
    alg: &Algebra,
    seed: u64,
    samples: usize,
    tols: &Tolerances,
) -> Result<f64> {
    let mut rng = stream(seed, 6);
    let mut violations = 0usize;
    for _ in 0..samples {
        let h = Element::random_traceless(alg, &mut rng);
        let rho = DensityElement::random_pure(alg, &mut rng)?;
        let report = dynamics::apply_translation(&h, &rho)?;
        if report.trace_rate.abs() > tols.translation_rate {
            violations += 1;
        }
    }
    Ok(violations as f64 / samples as f64)
}

#[derive(Debug, Clone, Copy)]
pub struct EquivalenceStats {
    pub fitted_constant: f64,
    pub fit_residual: f64,
    pub sup_error: f64,
    pub lambda_gap: f64,
}

pub fn equivalence_stats(
    alg: &Algebra,
    seed: u64,
    samples: usize,
    t_end: f64,
    dt: f64,
    tols: &Tolerances,
) -> Result<EquivalenceStats> {
    let mut rng = stream(seed, 7);
    let opts = EvolveOptions { t_end, dt, tolerances: tols.clone() };
    let (constant, fit_residual) = dynamics::associator_commutator_fit();
    let mut stats = EquivalenceStats {
        fitted_constant: constant,
        fit_residual,
        sup_error: 0.0,
        lambda_gap: 0.0,
    };
    for index in 0..samples {
        let rho0 = if index % 2 == 0 {
            DensityElement::random_pure(alg, &mut rng)?
        } else {
            DensityElement::random_mixed(alg, &mut rng)?
        };
        let x = Element::random_traceless_unit(alg, &mut rng);
        let y = Element::random_traceless_unit(alg, &mut rng);
        let (_, report) = dynamics::equivalence_report(&rho0, &x, &y, &opts)?;
        stats.sup_error = stats.sup_error.max(report.sup_error);
        stats.lambda_gap = stats.lambda_gap.max(report.lambda_gap);
    }
    Ok(stats)
}

// ---------------------------------------------------------------------------
// The assembled suite
// ---------------------------------------------------------------------------

/// Run every applicable property batch on one algebra.
pub fn run_checks(alg: &Algebra, cfg: &CheckConfig) -> Result<CheckReport> {
    let tols = &cfg.tolerances;
    let mut rows = Vec::new();

    let axioms = axiom_residuals(alg, cfg.seed, cfg.axiom_samples)?;
    rows.push(PropertyResult::at_most(
        "commutativity",
        cfg.axiom_samples,
        axioms.commutativity,
        tols.commutativity,
    ));
    rows.push(PropertyResult::at_most(
        "jordan_identity",
        cfg.axiom_samples,
        axioms.jordan_identity,
        tols.jordan_identity,
    ));
    rows.push(PropertyResult::at_most(
        "unit_identity",
        cfg.axiom_samples,
        axioms.unit_identity,
        0.0,
    ));
    rows.push(PropertyResult::at_most(
        "gram_identity",
        alg.dim() * alg.dim(),
        axioms.gram_identity,
        tols.gram_identity,
    ));
    rows.push(PropertyResult::at_most(
        "formal_reality",
        cfg.axiom_samples,
        axioms.formal_reality,
        tols.formal_reality,
    ));

    rows.push(PropertyResult::at_most(
        "power_associativity",
        cfg.power_samples,
        power_associativity_residual(alg, cfg.seed, cfg.power_samples)?,
        tols.power_associativity,
    ));

    rows.push(PropertyResult::at_most(
        "structure_symmetry",
        1,
        alg.structure_symmetry_residual(),
        tols.structure_symmetry,
    ));
    if structure_vanishes_by_class(alg) {
        rows.push(PropertyResult::at_most(
            "structure_vanishing",
            1,
            alg.structure_max_abs(),
            1e-12,
        ));
    }
    if let Some(residual) = product_hermiticity_residual(alg)? {
        rows.push(PropertyResult::at_most(
            "product_hermiticity",
            alg.dim() * alg.dim(),
            residual,
            tols.product_hermiticity,
        ));
    }

    let spectral = spectral_stats(alg, cfg.seed, cfg.spectral_samples, tols)?;
    rows.push(PropertyResult::at_most(
        "spectral_reconstruction",
        cfg.spectral_samples,
        spectral.reconstruction,
        tols.spectral_reconstruction,
    ));
    rows.push(PropertyResult::at_most(
        "spectral_completeness",
        cfg.spectral_samples,
        spectral.completeness,
        tols.spectral_completeness,
    ));
    rows.push(PropertyResult::at_most(
        "spectral_orthogonality",
        cfg.spectral_samples,
        spectral.orthogonality,
        tols.spectral_orthogonality,
    ));
    rows.push(PropertyResult::at_most(
        "spectral_inner_orthogonality",
        cfg.spectral_samples,
        spectral.inner_orthogonality,
        tols.gram_identity,
    ));
    rows.push(PropertyResult::at_most(
        "frame_cardinality",
        cfg.spectral_samples,
        spectral.frame_cardinality,
        0.0,
    ));
    rows.push(PropertyResult::at_most(
        "frame_trace",
        cfg.spectral_samples,
        spectral.frame_trace,
        tols.trace_one,
    ));
    if let Some(oracle) = spectral.eigen_oracle {
        rows.push(PropertyResult::at_most(
            "eigen_oracle",
            cfg.spectral_samples,
            oracle,
            tols.spectral_reconstruction,
        ));
    }

    let derivations =
        derivation_stats(alg, cfg.seed, cfg.derivation_samples, cfg.jacobi_samples, tols)?;
    rows.push(PropertyResult::at_most(
        "multiplication_symmetry",
        cfg.derivation_samples,
        derivations.multiplication_symmetry,
        tols.derivation_antisymmetry,
    ));
    rows.push(PropertyResult::at_most(
        "leibniz",
        cfg.derivation_samples,
        derivations.leibniz,
        tols.leibniz,
    ));
    rows.push(PropertyResult::at_most(
        "derivation_antisymmetry",
        cfg.derivation_samples,
        derivations.antisymmetry,
        tols.derivation_antisymmetry,
    ));
    rows.push(PropertyResult::at_most(
        "associator_equality",
        cfg.derivation_samples,
        derivations.associator_equality,
        tols.associator_equality,
    ));
    rows.push(PropertyResult::at_most(
        "jacobi",
        cfg.jacobi_samples,
        derivations.jacobi,
        tols.jacobi,
    ));
    // Commutators of unit-norm derivations carry an extra operator-norm
    // factor, hence the looser bound.
    rows.push(PropertyResult::at_most(
        "commutator_leibniz",
        cfg.jacobi_samples,
        derivations.commutator_leibniz,
        tols.leibniz * 10.0,
    ));

    let conservation = conservation_stats(
        alg,
        cfg.seed,
        cfg.trajectory_samples,
        cfg.t_end,
        cfg.dt,
        tols,
    )?;
    rows.push(PropertyResult::at_most(
        "conservation_trace",
        cfg.trajectory_samples,
        conservation.trace_drift,
        tols.trace_one,
    ));
    rows.push(PropertyResult::at_most(
        "conservation_purity",
        cfg.trajectory_samples,
        conservation.purity_drift_pure,
        tols.purity_drift,
    ));
    rows.push(PropertyResult::at_most(
        "conservation_spectrum",
        cfg.trajectory_samples,
        conservation.eigenvalue_drift,
        tols.eigenvalue_drift,
    ));
    rows.push(PropertyResult::at_least(
        "cone_preservation",
        cfg.trajectory_samples,
        if conservation.cone_preserved { 1.0 } else { 0.0 },
        1.0,
    ));
    rows.push(PropertyResult::at_most(
        "trajectory_flags",
        cfg.trajectory_samples,
        conservation.failed_trajectories as f64,
        0.0,
    ));

    if let Some(probe) = matrix_associativity_probe(alg)? {
        let octonionic = matches!(
            alg.class(),
            AlgebraClass::Hermitian { level: Level::Octonion, .. }
        );
        if octonionic {
            // The witness of a Jordan algebra without an associative
            // matrix realization.
            rows.push(PropertyResult::at_least(
                "matrix_associativity_probe",
                alg.dim().pow(3),
                probe,
                tols.associator_probe,
            ));
        } else {
            rows.push(PropertyResult::at_most(
                "matrix_associativity_probe",
                alg.dim().pow(3),
                probe,
                1e-10,
            ));
        }
    }

    rows.push(PropertyResult::at_least(
        "trace_translation_violation",
        cfg.translation_samples,
        translation_violation_rate(alg, cfg.seed, cfg.translation_samples, tols)?,
        0.9,
    ));

    let mut fitted_constant = None;
    if matches!(alg.class(), AlgebraClass::Hermitian { level: Level::Complex, .. }) {
        let equivalence = equivalence_stats(
            alg,
            cfg.seed,
            cfg.equivalence_samples,
            cfg.t_end,
            cfg.dt,
            tols,
        )?;
        fitted_constant = Some(equivalence.fitted_constant);
        rows.push(PropertyResult::at_most(
            "hamiltonian_equivalence",
            cfg.equivalence_samples,
            equivalence.sup_error,
            tols.equivalence,
        ));
        rows.push(PropertyResult::at_most(
            "lambda_independence",
            cfg.equivalence_samples,
            equivalence.lambda_gap,
            tols.lambda_independence,
        ));
        rows.push(PropertyResult::at_most(
            "associator_commutator_fit",
            1000,
            equivalence.fit_residual,
            tols.fit_residual,
        ));
    }

    let passed = rows.iter().all(|r| r.passed);
    Ok(CheckReport {
        algebra: alg.spec(),
        dim: alg.dim(),
        degree: alg.degree(),
        seed: cfg.seed,
        fitted_constant,
        rows,
        passed,
    })
}

/// The grid of algebras the full verification sweep runs over.
pub fn standard_algebras() -> Result<Vec<Algebra>> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(AlgebraDescriptor::spin_factor(n)?);
    }
    for m in 2..=4 {
        out.push(AlgebraDescriptor::hermitian(Level::Real, m)?);
    }
    for m in 2..=4 {
        out.push(AlgebraDescriptor::hermitian(Level::Complex, m)?);
    }
    for m in 2..=3 {
        out.push(AlgebraDescriptor::hermitian(Level::Quaternion, m)?);
    }
    out.push(AlgebraDescriptor::exceptional()?);
    Ok(out)
}
