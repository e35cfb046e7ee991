//! Derivation-driven dynamics.
//!
//! A traceless pair (x, y) defines the derivation D = [L_x, L_y], which acts
//! on any element b as the associator [x, b, y]. Density elements evolve by
//! the linear ODE ρ̇ = D ρ, integrated with a classical fixed-step RK4 and
//! *no* renormalization: conservation of trace, purity, and spectrum is a
//! test target, not an enforced constraint, so masking integration defects
//! would defeat the diagnostics.
//!
//! For complex Hermitian algebras the same evolution has a commutator
//! picture ρ̇ = −i[H, ρ] with H = c·i[x, y] + λ𝕀. The proportionality
//! constant c is fitted once per process from random triples rather than
//! hard-coded, and the fit residual is part of every equivalence report.

use std::io::Write;
use std::sync::OnceLock;

use nalgebra::{Complex, DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{Algebra, AlgebraClass, AlgebraSpec, Element};
use crate::composition::{CompositionScalar, Level};
use crate::config::Tolerances;
use crate::error::{JordanError, Result};
use crate::realization::CompositionMatrix;
use crate::spectral;
use crate::states::{Classification, DensityElement};

type ComplexMatrix = DMatrix<Complex<f64>>;

/// L_x: the matrix of b ↦ x∘b in the orthonormal basis. Symmetric, because
/// multiplication is self-adjoint under the trace form.
#[derive(Debug, Clone)]
pub struct MultiplicationOperator {
    source: Element,
    matrix: DMatrix<f64>,
}

impl MultiplicationOperator {
    pub fn source(&self) -> &Element {
        &self.source
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn apply(&self, b: &Element) -> Result<Element> {
        if !self.source.algebra().same_algebra(b.algebra()) {
            return Err(JordanError::InvalidArgument(
                "multiplication operator applied across algebras".into(),
            ));
        }
        let v = &self.matrix * DVector::from_column_slice(b.coeffs());
        Element::from_coeffs(self.source.algebra(), v.as_slice().to_vec())
    }

    /// ‖L − Lᵀ‖, which vanishes up to rounding.
    pub fn symmetry_residual(&self) -> f64 {
        (&self.matrix - self.matrix.transpose()).norm()
    }
}

/// Build L_x column by column: column J holds the coefficients of x∘e_J.
pub fn multiplication_operator(x: &Element) -> Result<MultiplicationOperator> {
    let alg = x.algebra();
    let dim = alg.dim();
    let mut matrix = DMatrix::zeros(dim, dim);
    for j in 0..dim {
        let column = x.jordan_product(&Element::basis(alg, j)?)?;
        for (i, value) in column.coeffs().iter().enumerate() {
            matrix[(i, j)] = *value;
        }
    }
    Ok(MultiplicationOperator { source: x.clone(), matrix })
}

/// D = [L_x, L_y] for traceless x, y: an antisymmetric matrix annihilating 𝕀
/// and acting as b ↦ [x, b, y].
#[derive(Debug, Clone)]
pub struct Derivation {
    alg: Algebra,
    matrix: DMatrix<f64>,
}

impl Derivation {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn apply(&self, b: &Element) -> Result<Element> {
        if !self.alg.same_algebra(b.algebra()) {
            return Err(JordanError::InvalidArgument(
                "derivation applied across algebras".into(),
            ));
        }
        let v = &self.matrix * DVector::from_column_slice(b.coeffs());
        Element::from_coeffs(&self.alg, v.as_slice().to_vec())
    }

    /// Matrix commutator [D₁, D₂]; again a derivation.
    pub fn commutator(&self, other: &Derivation) -> Derivation {
        Derivation {
            alg: self.alg.clone(),
            matrix: &self.matrix * &other.matrix - &other.matrix * &self.matrix,
        }
    }

    /// ‖D + Dᵀ‖: the generator of trace-form isometries is antisymmetric.
    pub fn antisymmetry_residual(&self) -> f64 {
        (&self.matrix + self.matrix.transpose()).norm()
    }

    /// Leibniz residual ‖D(a∘b) − D(a)∘b − a∘D(b)‖ on a given pair.
    pub fn leibniz_residual(&self, a: &Element, b: &Element) -> Result<f64> {
        let lhs = self.apply(&a.jordan_product(b)?)?;
        let rhs = self.apply(a)?.jordan_product(b)?.add(&a.jordan_product(&self.apply(b)?)?)?;
        Ok(lhs.sub(&rhs)?.norm())
    }
}

fn require_traceless(x: &Element, tols: &Tolerances, role: &str) -> Result<Element> {
    if x.trace().abs() > tols.traceless {
        return Err(JordanError::InvalidArgument(format!(
            "{role} must be traceless (|trace| = {:.3e} exceeds {:.1e})",
            x.trace().abs(),
            tols.traceless
        )));
    }
    Ok(x.traceless_part())
}

pub fn derivation(x: &Element, y: &Element) -> Result<Derivation> {
    derivation_with(x, y, &Tolerances::default())
}

pub fn derivation_with(x: &Element, y: &Element, tols: &Tolerances) -> Result<Derivation> {
    if !x.algebra().same_algebra(y.algebra()) {
        return Err(JordanError::InvalidArgument(
            "derivation generators must share an algebra".into(),
        ));
    }
    let x = require_traceless(x, tols, "x")?;
    let y = require_traceless(y, tols, "y")?;
    let lx = multiplication_operator(&x)?;
    let ly = multiplication_operator(&y)?;
    let matrix = lx.matrix() * ly.matrix() - ly.matrix() * lx.matrix();
    Ok(Derivation { alg: x.algebra().clone(), matrix })
}

/// Cyclic Jacobi residual ‖[D₁,[D₂,D₃]] + [D₂,[D₃,D₁]] + [D₃,[D₁,D₂]]‖ for
/// the derivations built from three traceless pairs.
pub fn jacobi_check(
    x1: &Element,
    y1: &Element,
    x2: &Element,
    y2: &Element,
    x3: &Element,
    y3: &Element,
) -> Result<f64> {
    let d1 = derivation(x1, y1)?;
    let d2 = derivation(x2, y2)?;
    let d3 = derivation(x3, y3)?;
    let sum = d1.commutator(&d2.commutator(&d3)).matrix
        + d2.commutator(&d3.commutator(&d1)).matrix
        + d3.commutator(&d1.commutator(&d2)).matrix;
    Ok(sum.norm())
}

/// L-translation by h: returns h∘ρ together with the trace production rate
/// d(tr ρ)/dt = tr(h∘ρ) it would add to any evolution equation. Nonzero for
/// generic h and ρ, which is why cone translations cannot appear in a
/// trace-preserving linear evolution.
#[derive(Debug, Clone)]
pub struct TranslationReport {
    pub image: Element,
    pub trace_rate: f64,
}

pub fn apply_translation(h: &Element, rho: &DensityElement) -> Result<TranslationReport> {
    let image = h.jordan_product(rho.element())?;
    let trace_rate = image.trace();
    Ok(TranslationReport { image, trace_rate })
}

// ---------------------------------------------------------------------------
// Time evolution
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct EvolveOptions {
    pub t_end: f64,
    pub dt: f64,
    pub tolerances: Tolerances,
}

impl Default for EvolveOptions {
    fn default() -> Self {
        EvolveOptions { t_end: 1.0, dt: 1e-3, tolerances: Tolerances::default() }
    }
}

/// Per-step conservation diagnostics, relative to the initial state.
#[derive(Debug, Clone, Serialize)]
pub struct StepDiagnostics {
    pub trace_drift: f64,
    pub purity_drift: f64,
    pub eigenvalue_drift: f64,
    pub min_eigenvalue: f64,
    pub cone_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrajectoryFailure {
    pub step: usize,
    pub time: f64,
    pub reason: String,
}

/// A stored integration: states at every step with their diagnostics. If a
/// diagnostic breached its threshold the trajectory is flagged failed at the
/// first offending step and integration stops there.
#[derive(Debug, Clone)]
pub struct Trajectory {
    algebra: AlgebraSpec,
    times: Vec<f64>,
    states: Vec<DensityElement>,
    diagnostics: Vec<StepDiagnostics>,
    failure: Option<TrajectoryFailure>,
}

impl Trajectory {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[DensityElement] {
        &self.states
    }

    pub fn diagnostics(&self) -> &[StepDiagnostics] {
        &self.diagnostics
    }

    pub fn failure(&self) -> Option<&TrajectoryFailure> {
        self.failure.as_ref()
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn max_trace_drift(&self) -> f64 {
        self.diagnostics.iter().map(|d| d.trace_drift).fold(0.0, f64::max)
    }

    pub fn max_purity_drift(&self) -> f64 {
        self.diagnostics.iter().map(|d| d.purity_drift).fold(0.0, f64::max)
    }

    pub fn max_eigenvalue_drift(&self) -> f64 {
        self.diagnostics.iter().map(|d| d.eigenvalue_drift).fold(0.0, f64::max)
    }

    pub fn cone_preserved(&self) -> bool {
        self.diagnostics.iter().all(|d| d.cone_ok)
    }

    /// CSV with one row per stored step:
    /// `t, coeff_0..coeff_n, trace, purity, min_eigenvalue`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let dim = self.states[0].element().coeffs().len();
        let mut header = String::from("t");
        for i in 0..dim {
            header.push_str(&format!(",coeff_{i}"));
        }
        header.push_str(",trace,purity,min_eigenvalue");
        writeln!(out, "{header}")?;
        for (t, state) in self.times.iter().zip(&self.states) {
            let mut row = fmt17(*t);
            for c in state.element().coeffs() {
                row.push(',');
                row.push_str(&fmt17(*c));
            }
            row.push(',');
            row.push_str(&fmt17(state.element().trace()));
            row.push(',');
            row.push_str(&fmt17(state.purity()));
            row.push(',');
            row.push_str(&fmt17(state.min_eigenvalue()));
            writeln!(out, "{row}")?;
        }
        Ok(())
    }
}

/// 17-significant-digit rendering used for all human-readable float output.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

impl Serialize for Trajectory {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct DiagnosticsBlock<'a> {
            max_trace_drift: f64,
            max_purity_drift: f64,
            max_eigenvalue_drift: f64,
            cone_preserved: bool,
            failed: bool,
            failure: &'a Option<TrajectoryFailure>,
            steps: &'a [StepDiagnostics],
        }
        let coeffs: Vec<&[f64]> = self.states.iter().map(|s| s.element().coeffs()).collect();
        let trace: Vec<f64> = self.states.iter().map(|s| s.element().trace()).collect();
        let purity: Vec<f64> = self.states.iter().map(|s| s.purity()).collect();
        let min_eigenvalue: Vec<f64> = self.states.iter().map(|s| s.min_eigenvalue()).collect();

        let mut s = serializer.serialize_struct("Trajectory", 7)?;
        s.serialize_field("algebra", &self.algebra)?;
        s.serialize_field("times", &self.times)?;
        s.serialize_field("coeffs", &coeffs)?;
        s.serialize_field("trace", &trace)?;
        s.serialize_field("purity", &purity)?;
        s.serialize_field("min_eigenvalue", &min_eigenvalue)?;
        s.serialize_field(
            "diagnostics",
            &DiagnosticsBlock {
                max_trace_drift: self.max_trace_drift(),
                max_purity_drift: self.max_purity_drift(),
                max_eigenvalue_drift: self.max_eigenvalue_drift(),
                cone_preserved: self.cone_preserved(),
                failed: self.failure.is_some(),
                failure: &self.failure,
                steps: &self.diagnostics,
            },
        )?;
        s.end()
    }
}

/// Fixed-step plan shared by the coefficient-space and matrix-space
/// integrators, so compared trajectories are sampled at identical times.
fn step_sizes(t_end: f64, dt: f64) -> Vec<f64> {
    let mut steps = Vec::new();
    let mut t = 0.0;
    while t + dt <= t_end + 1e-12 {
        steps.push(dt);
        t += dt;
    }
    if t_end - t > 1e-12 {
        steps.push(t_end - t);
    }
    steps
}

fn rk4_step(matrix: &DMatrix<f64>, state: &DVector<f64>, h: f64) -> DVector<f64> {
    let k1 = matrix * state;
    let k2 = matrix * (state + &k1 * (h / 2.0));
    let k3 = matrix * (state + &k2 * (h / 2.0));
    let k4 = matrix * (state + &k3 * h);
    state + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0)
}

/// Integrate ρ̇ = D_{x,y} ρ from a density element, recording every step.
pub fn evolve(
    rho0: &DensityElement,
    x: &Element,
    y: &Element,
    opts: &EvolveOptions,
) -> Result<Trajectory> {
    if !(opts.dt > 0.0) {
        return Err(JordanError::InvalidArgument("dt must be positive".into()));
    }
    if opts.t_end < 0.0 {
        return Err(JordanError::InvalidArgument("t_end must be nonnegative".into()));
    }
    let tols = &opts.tolerances;
    let alg = rho0.algebra().clone();
    if !alg.same_algebra(x.algebra()) || !alg.same_algebra(y.algebra()) {
        return Err(JordanError::InvalidArgument(
            "evolution generators must live in the state's algebra".into(),
        ));
    }
    let derivation = derivation_with(x, y, tols)?;

    let reference_trace = rho0.element().trace();
    let reference_purity = rho0.purity();
    let reference_spectrum = spectral::eigenvalues_with_multiplicity(rho0.element(), tols)?;
    let initially_pure = rho0.is_pure();
    // Strictly interior starts must stay strictly in the cone; boundary
    // starts (pure states have a zero eigenvalue) are only required to stay
    // within integration drift of the closed cone.
    let strictly_interior = rho0.min_eigenvalue() > tols.cone + tols.eigenvalue_drift;

    let mut trajectory = Trajectory {
        algebra: alg.spec(),
        times: vec![0.0],
        states: vec![rho0.clone()],
        diagnostics: vec![StepDiagnostics {
            trace_drift: 0.0,
            purity_drift: 0.0,
            eigenvalue_drift: 0.0,
            min_eigenvalue: rho0.min_eigenvalue(),
            cone_ok: true,
        }],
        failure: None,
    };

    let mut state = DVector::from_column_slice(rho0.element().coeffs());
    let mut time = 0.0;
    for (step, h) in step_sizes(opts.t_end, opts.dt).into_iter().enumerate() {
        state = rk4_step(derivation.matrix(), &state, h);
        time += h;

        let element = Element::from_coeffs(&alg, state.as_slice().to_vec())?;
        let fail = |reason: String, trajectory: &mut Trajectory| {
            trajectory.failure =
                Some(TrajectoryFailure { step: step + 1, time, reason });
        };

        let spectrum = match spectral::eigenvalues_with_multiplicity(&element, tols) {
            Ok(s) => s,
            Err(err) => {
                fail(format!("spectral diagnostics failed: {err}"), &mut trajectory);
                break;
            }
        };
        let square = element.jordan_product(&element)?;
        let purity = square.trace();
        let min_eigenvalue = spectrum[0];

        let trace_drift = (element.trace() - reference_trace).abs();
        let purity_drift = (purity - reference_purity).abs();
        let eigenvalue_drift = spectrum
            .iter()
            .zip(&reference_spectrum)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let cone_ok = if strictly_interior {
            min_eigenvalue > tols.cone
        } else {
            min_eigenvalue >= -(tols.density_floor + tols.eigenvalue_drift)
        };

        let classification = if square.sub(&element)?.norm() <= tols.purity_pure {
            Classification::Pure
        } else {
            Classification::Mixed
        };
        let density =
            DensityElement::assemble(element, classification, purity, min_eigenvalue);

        trajectory.times.push(time);
        trajectory.states.push(density);
        trajectory.diagnostics.push(StepDiagnostics {
            trace_drift,
            purity_drift,
            eigenvalue_drift,
            min_eigenvalue,
            cone_ok,
        });

        if trace_drift > tols.trace_drift {
            fail(format!("trace drift {trace_drift:.3e} breached"), &mut trajectory);
            break;
        }
        if initially_pure && purity_drift > tols.purity_drift {
            fail(format!("purity drift {purity_drift:.3e} breached"), &mut trajectory);
            break;
        }
        if eigenvalue_drift > tols.eigenvalue_drift {
            fail(
                format!("eigenvalue drift {eigenvalue_drift:.3e} breached"),
                &mut trajectory,
            );
            break;
        }
        if !cone_ok {
            fail(format!("cone membership lost (min eigenvalue {min_eigenvalue:.3e})"),
                &mut trajectory);
            break;
        }
    }

    Ok(trajectory)
}

// ---------------------------------------------------------------------------
// Commutator picture for complex Hermitian algebras
// ---------------------------------------------------------------------------

fn require_complex_hermitian(alg: &Algebra) -> Result<usize> {
    match alg.class() {
        AlgebraClass::Hermitian { level: Level::Complex, size } => Ok(size),
        _ => Err(JordanError::UnsupportedClass(format!(
            "the commutator picture is only defined for complex Hermitian algebras, not {}",
            alg.name()
        ))),
    }
}

/// Convert an element of a real or complex Hermitian algebra to a dense
/// complex matrix.
pub fn element_to_complex(e: &Element) -> Result<ComplexMatrix> {
    let m = e.to_matrix().ok_or_else(|| {
        JordanError::UnsupportedClass("spin factors have no matrix realization".into())
    })?;
    if m.level() > Level::Complex {
        return Err(JordanError::UnsupportedClass(
            "quaternionic and octonionic entries do not embed in a complex matrix".into(),
        ));
    }
    let size = m.size();
    Ok(ComplexMatrix::from_fn(size, size, |i, j| {
        let coeffs = m.get(i, j).coeffs();
        Complex::new(coeffs[0], coeffs.get(1).copied().unwrap_or(0.0))
    }))
}

/// Expand a Hermitian complex matrix as an element of a complex Hermitian
/// algebra.
pub fn complex_to_element(alg: &Algebra, m: &ComplexMatrix) -> Result<Element> {
    let size = require_complex_hermitian(alg)?;
    if m.nrows() != size || m.ncols() != size {
        return Err(JordanError::InvalidArgument("matrix size mismatch".into()));
    }
    let mut out = CompositionMatrix::zero(size, Level::Complex);
    for i in 0..size {
        for j in 0..size {
            out.set(i, j, CompositionScalar::new(Level::Complex, &[m[(i, j)].re, m[(i, j)].im])?);
        }
    }
    Element::from_matrix(alg, &out)
}

fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a * b - b * a
}

/// Fit [x, ρ, y] = c·[[x, y], ρ] over seeded random complex Hermitian 2×2
/// triples. Returns (c, max residual). Computed once per process.
pub fn associator_commutator_fit() -> (f64, f64) {
    static FIT: OnceLock<(f64, f64)> = OnceLock::new();
    *FIT.get_or_init(|| {
        fit_constant(1000, 0x6669_7443).expect("constant fit on HermC(2) cannot fail")
    })
}

fn fit_constant(samples: usize, seed: u64) -> Result<(f64, f64)> {
    let alg = crate::algebra::AlgebraDescriptor::hermitian(Level::Complex, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut pairs: Vec<(Vec<f64>, Vec<f64>)> = Vec::with_capacity(samples);
    let mut numerator = 0.0;
    let mut denominator = 0.0;
    for _ in 0..samples {
        let x = Element::random_traceless_unit(&alg, &mut rng);
        let y = Element::random_traceless_unit(&alg, &mut rng);
        let rho = Element::random_unit(&alg, &mut rng);

        let assoc = crate::algebra::associator(&x, &rho, &y)?;
        let bracket = complex_to_element(
            &alg,
            &commutator(&commutator(&element_to_complex(&x)?, &element_to_complex(&y)?), &element_to_complex(&rho)?),
        )?;

        numerator += assoc.coeff_dot(&bracket);
        denominator += bracket.coeff_dot(&bracket);
        pairs.push((assoc.coeffs().to_vec(), bracket.coeffs().to_vec()));
    }
    let c = numerator / denominator;
    let residual = pairs
        .iter()
        .map(|(a, b)| {
            a.iter()
                .zip(b)
                .map(|(ai, bi)| (ai - c * bi).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);
    Ok((c, residual))
}

/// The family H(λ) = c·i[x, y] + λ𝕀 generating the commutator picture of
/// the derivation evolution. λ only shifts the phase convention; the
/// commutator with any ρ is λ-independent.
#[derive(Debug, Clone)]
pub struct HamiltonianFamily {
    algebra: Algebra,
    base: ComplexMatrix,
    constant: f64,
}

impl HamiltonianFamily {
    /// The fitted proportionality constant c.
    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// H(λ) as a dense complex Hermitian matrix.
    pub fn at(&self, lambda: f64) -> ComplexMatrix {
        let size = self.base.nrows();
        &self.base + ComplexMatrix::identity(size, size) * Complex::new(lambda, 0.0)
    }
}

pub fn equivalent_hamiltonian(x: &Element, y: &Element) -> Result<HamiltonianFamily> {
    equivalent_hamiltonian_with(x, y, &Tolerances::default())
}

pub fn equivalent_hamiltonian_with(
    x: &Element,
    y: &Element,
    tols: &Tolerances,
) -> Result<HamiltonianFamily> {
    let alg = x.algebra().clone();
    require_complex_hermitian(&alg)?;
    if !alg.same_algebra(y.algebra()) {
        return Err(JordanError::InvalidArgument(
            "hamiltonian generators must share an algebra".into(),
        ));
    }
    let x = require_traceless(x, tols, "x")?;
    let y = require_traceless(y, tols, "y")?;
    let (constant, _) = associator_commutator_fit();
    let bracket = commutator(&element_to_complex(&x)?, &element_to_complex(&y)?);
    let base = bracket * Complex::new(0.0, constant);
    Ok(HamiltonianFamily { algebra: alg, base, constant })
}

/// Integrate the commutator equation ρ̇ = −i[H, ρ] in the raw matrix
/// picture, on the same step grid as [`evolve`]. This is the reference the
/// derivation evolution is compared against for complex Hermitian algebras.
pub fn von_neumann_evolve(
    rho0: &ComplexMatrix,
    hamiltonian: &ComplexMatrix,
    t_end: f64,
    dt: f64,
) -> Vec<ComplexMatrix> {
    let minus_i = Complex::new(0.0, -1.0);
    let rhs = |rho: &ComplexMatrix| commutator(hamiltonian, rho) * minus_i;
    let mut states = vec![rho0.clone()];
    let mut rho = rho0.clone();
    for h in step_sizes(t_end, dt) {
        let k1 = rhs(&rho);
        let k2 = rhs(&(&rho + &k1 * Complex::new(h / 2.0, 0.0)));
        let k3 = rhs(&(&rho + &k2 * Complex::new(h / 2.0, 0.0)));
        let k4 = rhs(&(&rho + &k3 * Complex::new(h, 0.0)));
        rho += (k1 + k2 * Complex::new(2.0, 0.0) + k3 * Complex::new(2.0, 0.0) + k4)
            * Complex::new(h / 6.0, 0.0);
        states.push(rho.clone());
    }
    states
}

fn sup_distance(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Comparison of the derivation evolution against the commutator picture.
#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    pub algebra: AlgebraSpec,
    pub fitted_constant: f64,
    pub fit_residual: f64,
    /// Sup-norm distance between the two pictures over all stored steps.
    pub sup_error: f64,
    /// Sup-norm distance between the λ = 0 and λ = 7 commutator
    /// trajectories.
    pub lambda_gap: f64,
    pub t_end: f64,
    pub dt: f64,
}

/// Run both pictures side by side and report the distances.
pub fn equivalence_report(
    rho0: &DensityElement,
    x: &Element,
    y: &Element,
    opts: &EvolveOptions,
) -> Result<(Trajectory, EquivalenceReport)> {
    let alg = rho0.algebra().clone();
    require_complex_hermitian(&alg)?;
    let trajectory = evolve(rho0, x, y, opts)?;
    let family = equivalent_hamiltonian_with(x, y, &opts.tolerances)?;
    let (_, fit_residual) = associator_commutator_fit();

    let rho0_matrix = element_to_complex(rho0.element())?;
    let oracle0 = von_neumann_evolve(&rho0_matrix, &family.at(0.0), opts.t_end, opts.dt);
    let oracle7 = von_neumann_evolve(&rho0_matrix, &family.at(7.0), opts.t_end, opts.dt);

    let mut sup_error: f64 = 0.0;
    for (state, oracle) in trajectory.states().iter().zip(&oracle0) {
        sup_error = sup_error.max(sup_distance(&element_to_complex(state.element())?, oracle));
    }
    let lambda_gap = oracle0
        .iter()
        .zip(&oracle7)
        .map(|(a, b)| sup_distance(a, b))
        .fold(0.0, f64::max);

    let report = EquivalenceReport {
        algebra: alg.spec(),
        fitted_constant: family.constant(),
        fit_residual,
        sup_error,
        lambda_gap,
        t_end: opts.t_end,
        dt: opts.dt,
    };
    Ok((trajectory, report))
}
