//! Spectral decomposition: minimal polynomials, idempotent expansions,
//! Jordan frames and the cone of positivity.
//!
//! The minimal polynomial of an element is found by ranking linear
//! dependence among the Jordan powers 𝕀, a, a², …; its roots are the
//! eigenvalues. Spectral idempotents come from Lagrange interpolation on the
//! powers, which is valid because the subalgebra generated by a single
//! element is associative. Formal reality guarantees real distinct roots for
//! the minimal polynomial, so complex or merged roots are reported as
//! errors rather than repaired.

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::Element;
use crate::config::Tolerances;
use crate::error::{JordanError, Result};

/// Distinct eigenvalues with their spectral idempotents.
#[derive(Debug, Clone)]
pub struct SpectralData {
    eigenvalues: Vec<f64>,
    multiplicities: Vec<usize>,
    idempotents: Vec<Element>,
}

impl SpectralData {
    /// Distinct eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// trace(E_α) for each eigenvalue, as positive integers.
    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn idempotents(&self) -> &[Element] {
        &self.idempotents
    }

    /// Σ a_α E_α; equal to the decomposed element up to the validated
    /// residual.
    pub fn reconstruct(&self) -> Element {
        let mut acc = Element::zero(self.idempotents[0].algebra());
        for (value, idem) in self.eigenvalues.iter().zip(&self.idempotents) {
            acc = acc.add(&idem.scale(*value)).expect("idempotents share the algebra");
        }
        acc
    }

    /// The ν eigenvalues with multiplicity, ascending.
    pub fn eigenvalues_with_multiplicity(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for (value, mult) in self.eigenvalues.iter().zip(&self.multiplicities) {
            out.extend(std::iter::repeat(*value).take(*mult));
        }
        out
    }
}

impl Serialize for SpectralData {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SpectralData", 3)?;
        s.serialize_field("eigenvalues", &self.eigenvalues)?;
        s.serialize_field("multiplicities", &self.multiplicities)?;
        let coeffs: Vec<&[f64]> = self.idempotents.iter().map(|e| e.coeffs()).collect();
        s.serialize_field("idempotents", &coeffs)?;
        s.end()
    }
}

/// A complete system of ν mutually orthogonal primitive idempotents, each
/// tagged with the eigenvalue of the decomposed element it refines.
#[derive(Debug, Clone)]
pub struct JordanFrame {
    eigenvalues: Vec<f64>,
    idempotents: Vec<Element>,
}

impl JordanFrame {
    /// Eigenvalue list with multiplicity, ascending; one entry per member.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn idempotents(&self) -> &[Element] {
        &self.idempotents
    }

    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// Build a frame from caller-provided idempotents, validating
    /// completeness, orthogonality and primitivity. Eigenvalue tags are set
    /// to zero.
    pub fn validate(members: Vec<Element>, tols: &Tolerances) -> Result<JordanFrame> {
        if members.is_empty() {
            return Err(JordanError::InvalidArgument("a frame cannot be empty".into()));
        }
        let alg = members[0].algebra().clone();
        if members.len() != alg.degree() {
            return Err(JordanError::InvalidArgument(format!(
                "a frame of {} must have exactly {} members, got {}",
                alg.name(),
                alg.degree(),
                members.len()
            )));
        }
        let mut sum = Element::zero(&alg);
        for (i, e) in members.iter().enumerate() {
            if !is_idempotent_with(e, tols) {
                return Err(JordanError::InvalidArgument(format!(
                    "frame member {i} is not idempotent"
                )));
            }
            if (e.trace() - 1.0).abs() > tols.primitive_trace {
                return Err(JordanError::InvalidArgument(format!(
                    "frame member {i} has trace {}, expected 1",
                    e.trace()
                )));
            }
            sum = sum.add(e)?;
        }
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                let p = members[i].jordan_product(&members[j])?;
                if p.norm() > tols.spectral_orthogonality {
                    return Err(JordanError::InvalidArgument(format!(
                        "frame members {i} and {j} are not orthogonal"
                    )));
                }
            }
        }
        if sum.sub(&Element::unit(&alg))?.norm() > tols.spectral_completeness {
            return Err(JordanError::InvalidArgument(
                "frame members do not sum to the unit".into(),
            ));
        }
        let eigenvalues = vec![0.0; members.len()];
        Ok(JordanFrame { eigenvalues, idempotents: members })
    }
}

// ---------------------------------------------------------------------------
// Power basis and minimal polynomial
// ---------------------------------------------------------------------------

/// Result of the dependence scan over the powers unit, â, â², … of the
/// normalized element â = a / max(1, ‖a‖).
struct PowerScan {
    /// q_0 = unit, q_k = â ∘ q_{k−1}.
    powers: Vec<Element>,
    /// Monic ascending coefficients of the minimal polynomial of â
    /// (relative to `unit`), length degree + 1.
    scaled_poly: Vec<f64>,
    /// The normalization factor.
    scale: f64,
}

fn orthogonalize(vec: &DVector<f64>, q_columns: &[DVector<f64>]) -> (DVector<f64>, Vec<f64>) {
    let mut w = vec.clone();
    let mut proj = vec![0.0; q_columns.len()];
    // Re-orthogonalize once; plain MGS loses accuracy near dependence.
    for _ in 0..2 {
        for (i, q) in q_columns.iter().enumerate() {
            let h = q.dot(&w);
            w -= q * h;
            proj[i] += h;
        }
    }
    (w, proj)
}

fn power_scan(a: &Element, unit: &Element, max_deg: usize, tols: &Tolerances) -> Result<PowerScan> {
    let scale = a.norm().max(1.0);
    let scaled = a.scale(1.0 / scale);

    let mut powers: Vec<Element> = vec![unit.clone()];
    // Incremental QR of the power matrix. `r_columns[j]` holds the R column
    // for power j (projections onto earlier Q columns plus the residual
    // diagonal), so the singular values of the power matrix can be read off
    // the small triangular factor.
    let mut q_columns: Vec<DVector<f64>> = Vec::new();
    let mut r_columns: Vec<Vec<f64>> = Vec::new();

    let v0 = DVector::from_column_slice(unit.coeffs());
    let n0 = v0.norm();
    q_columns.push(&v0 / n0);
    r_columns.push(vec![n0]);

    for k in 1..=max_deg {
        let next = scaled.jordan_product(&powers[k - 1])?;
        let v = DVector::from_column_slice(next.coeffs());
        powers.push(next);

        let (w, mut proj) = orthogonalize(&v, &q_columns);
        let residual_norm = w.norm();
        proj.push(residual_norm);
        r_columns.push(proj);

        let relative_residual = residual_norm / (v.norm() + f64::EPSILON);
        if relative_residual <= tols.minpoly_rank || k == max_deg {
            // Candidate dependence: confirm on the triangular factor, whose
            // singular values equal those of the power matrix.
            let r = DMatrix::from_fn(k + 1, k + 1, |i, j| {
                r_columns[j].get(i).copied().unwrap_or(0.0)
            });
            let svd = r.svd(true, true);
            let sigma = &svd.singular_values;
            let sigma_max = sigma.iter().cloned().fold(0.0f64, f64::max).max(f64::EPSILON);
            let mut min_idx = 0;
            for i in 0..sigma.len() {
                if sigma[i] < sigma[min_idx] {
                    min_idx = i;
                }
            }
            let normalized: Vec<f64> = sigma.iter().map(|s| s / sigma_max).collect();

            let in_window = normalized
                .iter()
                .filter(|s| (**s - tols.minpoly_rank).abs() <= tols.rank_ambiguity)
                .count();
            if in_window >= 2 {
                return Err(JordanError::IllConditioned(format!(
                    "{in_window} singular values lie within {:.1e} of the rank threshold {:.1e}",
                    tols.rank_ambiguity, tols.minpoly_rank
                )));
            }

            if normalized[min_idx] > tols.minpoly_rank && k < max_deg {
                // The cheap scan was pessimistic; keep extending.
                q_columns.push(&w / residual_norm);
                continue;
            }

            // Null vector of the power matrix → monic minimal polynomial.
            let v_t = svd.v_t.as_ref().ok_or_else(|| {
                JordanError::InternalConsistency("SVD did not produce right vectors".into())
            })?;
            let null = v_t.row(min_idx);
            let leading = null[k];
            if leading.abs() < 1e-8 {
                return Err(JordanError::IllConditioned(
                    "the dependence does not involve the highest power".into(),
                ));
            }
            let mut poly: Vec<f64> = (0..k).map(|j| null[j] / leading).collect();
            poly.push(1.0);
            return Ok(PowerScan { powers, scaled_poly: poly, scale });
        }

        q_columns.push(&w / residual_norm);
    }

    Err(JordanError::InternalConsistency(
        "power scan ended without finding a dependence".into(),
    ))
}

/// Real roots of a monic polynomial (ascending coefficients, trailing 1)
/// via companion-matrix eigenvalues. Complex or merged roots are a spectral
/// failure: formal reality forbids both.
fn companion_roots(monic: &[f64], tols: &Tolerances) -> Result<Vec<f64>> {
    let deg = monic.len() - 1;
    debug_assert!(deg >= 1 && (monic[deg] - 1.0).abs() < 1e-12);
    let companion = DMatrix::from_fn(deg, deg, |i, j| {
        if j + 1 == deg {
            -monic[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let eigen = companion.complex_eigenvalues();
    let radius = eigen.iter().map(|z| z.norm()).fold(1.0f64, f64::max);
    for z in eigen.iter() {
        if z.im.abs() > tols.root_merge * radius {
            return Err(JordanError::SpectralFailure(format!(
                "complex root {z} in the minimal polynomial"
            )));
        }
    }
    let mut roots: Vec<f64> = eigen.iter().map(|z| z.re).collect();
    // Newton-polish: Schur eigenvalues of the companion matrix are accurate
    // to ~1e-13, which small spectral gaps amplify in the Lagrange
    // projectors; two Newton steps push the roots to machine precision.
    let eval = |x: f64| monic.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let eval_derivative = |x: f64| {
        (1..monic.len())
            .rev()
            .fold(0.0, |acc, j| acc * x + monic[j] * j as f64)
    };
    for root in &mut roots {
        for _ in 0..2 {
            let slope = eval_derivative(*root);
            if slope.abs() > 1e-8 {
                *root -= eval(*root) / slope;
            }
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for pair in roots.windows(2) {
        if pair[1] - pair[0] < tols.root_merge * radius {
            return Err(JordanError::SpectralFailure(format!(
                "roots {} and {} are merged at the configured tolerance",
                pair[0], pair[1]
            )));
        }
    }
    Ok(roots)
}

/// Multiply ascending-coefficient polynomials.
fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

struct EigenStructure {
    /// Ascending distinct eigenvalues, in the original (unscaled) variable.
    roots: Vec<f64>,
    idempotents: Vec<Element>,
    multiplicities: Vec<usize>,
}

/// Decompose `a` relative to `unit`: the algebra unit at top level, or an
/// idempotent whose Peirce-1 subalgebra contains `a` during frame
/// refinement. `max_deg` bounds the minimal polynomial degree.
fn eigen_structure(
    a: &Element,
    unit: &Element,
    max_deg: usize,
    tols: &Tolerances,
    validate: bool,
) -> Result<EigenStructure> {
    let scan = power_scan(a, unit, max_deg, tols)?;
    let scaled_roots = companion_roots(&scan.scaled_poly, tols)?;
    let roots: Vec<f64> = scaled_roots.iter().map(|r| r * scan.scale).collect();

    // Lagrange idempotents on the scaled powers:
    // E_α = Π_{β≠α} (â − λ̂_β·unit)/(λ̂_α − λ̂_β).
    let mut idempotents = Vec::with_capacity(scaled_roots.len());
    for (alpha, &lambda_a) in scaled_roots.iter().enumerate() {
        let mut poly = vec![1.0];
        let mut denom = 1.0;
        for (beta, &lambda_b) in scaled_roots.iter().enumerate() {
            if beta != alpha {
                poly = poly_mul(&poly, &[-lambda_b, 1.0]);
                denom *= lambda_a - lambda_b;
            }
        }
        let mut idem = Element::zero(a.algebra());
        for (coeff, power) in poly.iter().zip(&scan.powers) {
            idem = idem.add(&power.scale(coeff / denom))?;
        }
        idempotents.push(idem);
    }

    // Multiplicities are idempotent traces and must be near-integers.
    let mut multiplicities = Vec::with_capacity(idempotents.len());
    let mut total = 0usize;
    for (i, idem) in idempotents.iter().enumerate() {
        let trace = idem.trace();
        let rounded = trace.round();
        if (trace - rounded).abs() > 1e-4 || rounded < 1.0 {
            return Err(JordanError::SpectralFailure(format!(
                "idempotent {i} has non-integer trace {trace}"
            )));
        }
        multiplicities.push(rounded as usize);
        total += rounded as usize;
    }
    let expected_total = unit.trace().round() as usize;
    if total != expected_total {
        return Err(JordanError::SpectralFailure(format!(
            "multiplicities sum to {total}, expected {expected_total}"
        )));
    }

    if validate {
        let scale_factor = 1.0 + a.norm();
        let residual = {
            let mut recon = Element::zero(a.algebra());
            for (root, idem) in roots.iter().zip(&idempotents) {
                recon = recon.add(&idem.scale(*root))?;
            }
            recon.sub(a)?.norm()
        };
        if residual > tols.spectral_reconstruction * scale_factor {
            return Err(JordanError::SpectralFailure(format!(
                "reconstruction residual {residual:.3e} exceeds tolerance"
            )));
        }
        let mut sum = Element::zero(a.algebra());
        for idem in &idempotents {
            sum = sum.add(idem)?;
        }
        if sum.sub(unit)?.norm() > tols.spectral_completeness {
            return Err(JordanError::SpectralFailure(
                "idempotents do not sum to the unit".into(),
            ));
        }
        for i in 0..idempotents.len() {
            let sq = idempotents[i].jordan_product(&idempotents[i])?;
            if sq.sub(&idempotents[i])?.norm() > tols.spectral_orthogonality.max(tols.idempotent) {
                return Err(JordanError::SpectralFailure(format!(
                    "spectral projector {i} is not idempotent"
                )));
            }
            for j in (i + 1)..idempotents.len() {
                let p = idempotents[i].jordan_product(&idempotents[j])?;
                if p.norm() > tols.spectral_orthogonality {
                    return Err(JordanError::SpectralFailure(format!(
                        "spectral projectors {i} and {j} are not orthogonal"
                    )));
                }
            }
        }
    }

    Ok(EigenStructure { roots, idempotents, multiplicities })
}

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

/// Ascending, monic coefficients of the minimal polynomial of `a`:
/// `p(λ) = c_0 + c_1 λ + … + λ^d` with `p(a) = 0` and d ≤ ν.
pub fn minimal_polynomial(a: &Element) -> Result<Vec<f64>> {
    minimal_polynomial_with(a, &Tolerances::default())
}

pub fn minimal_polynomial_with(a: &Element, tols: &Tolerances) -> Result<Vec<f64>> {
    let unit = Element::unit(a.algebra());
    let scan = power_scan(a, &unit, a.algebra().degree(), tols)?;
    // Undo the normalization: p(λ) = s^d · p̂(λ/s).
    let d = scan.scaled_poly.len() - 1;
    Ok(scan
        .scaled_poly
        .iter()
        .enumerate()
        .map(|(j, c)| c * scan.scale.powi((d - j) as i32))
        .collect())
}

/// Expand `a` over its distinct eigenvalues: a = Σ a_α E_α with mutually
/// orthogonal idempotents summing to 𝕀.
pub fn spectral_decompose(a: &Element) -> Result<SpectralData> {
    spectral_decompose_with(a, &Tolerances::default())
}

pub fn spectral_decompose_with(a: &Element, tols: &Tolerances) -> Result<SpectralData> {
    let unit = Element::unit(a.algebra());
    let eigen = eigen_structure(a, &unit, a.algebra().degree(), tols, true)?;
    Ok(SpectralData {
        eigenvalues: eigen.roots,
        multiplicities: eigen.multiplicities,
        idempotents: eigen.idempotents,
    })
}

/// The ν eigenvalues of `a` with multiplicity, ascending. Cheaper than a
/// fully validated decomposition; used for diagnostics along trajectories.
pub fn eigenvalues_with_multiplicity(a: &Element, tols: &Tolerances) -> Result<Vec<f64>> {
    let unit = Element::unit(a.algebra());
    let eigen = eigen_structure(a, &unit, a.algebra().degree(), tols, false)?;
    let mut out = Vec::with_capacity(a.algebra().degree());
    for (root, mult) in eigen.roots.iter().zip(&eigen.multiplicities) {
        out.extend(std::iter::repeat(*root).take(*mult));
    }
    Ok(out)
}

/// Smallest eigenvalue of `a`.
pub fn min_eigenvalue(a: &Element) -> Result<f64> {
    min_eigenvalue_with(a, &Tolerances::default())
}

pub fn min_eigenvalue_with(a: &Element, tols: &Tolerances) -> Result<f64> {
    let unit = Element::unit(a.algebra());
    let eigen = eigen_structure(a, &unit, a.algebra().degree(), tols, false)?;
    Ok(eigen.roots[0])
}

/// Refine the spectral decomposition of `a` into exactly ν primitive
/// idempotents. Degenerate eigenspaces are split by projecting a
/// deterministic pseudo-random element through the quadratic action
/// U_E(b) = 2E∘(E∘b) − E∘b and recursing; probes fall back to basis
/// elements in order, so the result is reproducible.
pub fn jordan_frame(a: &Element) -> Result<JordanFrame> {
    jordan_frame_with(a, &Tolerances::default())
}

pub fn jordan_frame_with(a: &Element, tols: &Tolerances) -> Result<JordanFrame> {
    let spectral = spectral_decompose_with(a, tols)?;
    let mut members: Vec<(f64, Element)> = Vec::with_capacity(a.algebra().degree());
    for ((value, idem), mult) in spectral
        .eigenvalues
        .iter()
        .zip(&spectral.idempotents)
        .zip(&spectral.multiplicities)
    {
        refine_idempotent(idem, *mult, *value, tols, &mut members)?;
    }

    let alg = a.algebra();
    if members.len() != alg.degree() {
        return Err(JordanError::SpectralFailure(format!(
            "frame refinement produced {} idempotents, expected {}",
            members.len(),
            alg.degree()
        )));
    }
    let mut sum = Element::zero(alg);
    for (i, (_, e)) in members.iter().enumerate() {
        if (e.trace() - 1.0).abs() > tols.trace_one {
            return Err(JordanError::SpectralFailure(format!(
                "frame member {i} has trace {} instead of 1",
                e.trace()
            )));
        }
        sum = sum.add(e)?;
    }
    if sum.sub(&Element::unit(alg))?.norm() > tols.spectral_completeness {
        return Err(JordanError::SpectralFailure(
            "refined frame does not sum to the unit".into(),
        ));
    }
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            let p = members[i].1.jordan_product(&members[j].1)?;
            if p.norm() > tols.spectral_orthogonality {
                return Err(JordanError::SpectralFailure(format!(
                    "refined frame members {i} and {j} are not orthogonal"
                )));
            }
        }
    }

    let (eigenvalues, idempotents) = members.into_iter().unzip();
    Ok(JordanFrame { eigenvalues, idempotents })
}

/// U_E(b) = 2E∘(E∘b) − E∘b: for idempotent E, the projection onto the
/// Peirce-1 subalgebra of E.
fn quadratic_image(e: &Element, b: &Element) -> Result<Element> {
    let eb = e.jordan_product(b)?;
    let eeb = e.jordan_product(&eb)?;
    eeb.scale(2.0).sub(&eb)
}

fn refine_idempotent(
    idem: &Element,
    multiplicity: usize,
    eigenvalue: f64,
    tols: &Tolerances,
    out: &mut Vec<(f64, Element)>,
) -> Result<()> {
    if multiplicity <= 1 {
        out.push((eigenvalue, idem.clone()));
        return Ok(());
    }
    let alg = idem.algebra().clone();

    // Deterministic probes: a few seeded pseudo-random elements, then the
    // basis in order.
    let mut rng = ChaCha8Rng::seed_from_u64(0x4a46_5250);
    let mut candidates: Vec<Element> = (0..8).map(|_| Element::random(&alg, &mut rng)).collect();
    for i in 1..alg.dim() {
        candidates.push(Element::basis(&alg, i)?);
    }

    for candidate in &candidates {
        let projected = quadratic_image(idem, candidate)?;
        match eigen_structure(&projected, idem, multiplicity, tols, false) {
            Ok(sub) if sub.roots.len() >= 2 => {
                for (sub_idem, sub_mult) in sub.idempotents.iter().zip(&sub.multiplicities) {
                    refine_idempotent(sub_idem, *sub_mult, eigenvalue, tols, out)?;
                }
                return Ok(());
            }
            _ => continue,
        }
    }
    Err(JordanError::SpectralFailure(format!(
        "no probe separated a degenerate idempotent of trace {multiplicity}"
    )))
}

/// ‖a² − a‖ within tolerance.
pub fn is_idempotent(a: &Element) -> bool {
    is_idempotent_with(a, &Tolerances::default())
}

pub fn is_idempotent_with(a: &Element, tols: &Tolerances) -> bool {
    match a.jordan_product(a).and_then(|sq| sq.sub(a)) {
        Ok(diff) => diff.norm() <= tols.idempotent,
        Err(_) => false,
    }
}

/// An idempotent of trace 1. With the unit-normalized trace form this is
/// equivalent to admitting no decomposition into two orthogonal nonzero
/// idempotents.
pub fn is_primitive(e: &Element) -> bool {
    is_primitive_with(e, &Tolerances::default())
}

pub fn is_primitive_with(e: &Element, tols: &Tolerances) -> bool {
    is_idempotent_with(e, tols) && (e.trace() - 1.0).abs() <= tols.primitive_trace
}

/// Membership in the open cone of positivity: every eigenvalue exceeds the
/// cone tolerance.
pub fn in_cone(a: &Element) -> Result<bool> {
    in_cone_with(a, &Tolerances::default())
}

pub fn in_cone_with(a: &Element, tols: &Tolerances) -> Result<bool> {
    Ok(min_eigenvalue_with(a, tols)? > tols.cone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraDescriptor;
    use crate::composition::Level;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn spin(n: usize) -> crate::algebra::Algebra {
        AlgebraDescriptor::spin_factor(n).unwrap()
    }

    #[test]
    fn minimal_polynomial_of_the_unit() {
        let alg = AlgebraDescriptor::hermitian(Level::Complex, 2).unwrap();
        let unit = Element::unit(&alg);
        let poly = minimal_polynomial(&unit).unwrap();
        assert_eq!(poly.len(), 2);
        assert!((poly[0] + 1.0).abs() <= 1e-12 && (poly[1] - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn minimal_polynomial_of_an_idempotent_is_lambda_squared_minus_lambda() {
        let alg = spin(4);
        let e1 = Element::basis(&alg, 1).unwrap();
        let idem = Element::unit(&alg).add(&e1).unwrap().scale(0.5);
        let poly = minimal_polynomial(&idem).unwrap();
        assert_eq!(poly.len(), 3);
        assert!(poly[0].abs() <= 1e-10, "constant term of {poly:?}");
        assert!((poly[1] + 1.0).abs() <= 1e-10);
        assert!((poly[2] - 1.0).abs() <= 1e-10);
    }

    // Closed-form spin-factor oracle: a⁰𝕀 + v·e has eigenvalues a⁰ ± |v|.
    #[test]
    fn spin_factor_minimal_polynomial_and_spectrum() {
        let alg = spin(3);
        let mut coeffs = vec![0.0; 4];
        coeffs[0] = 2.0;
        coeffs[1] = 3.0;
        let a = Element::from_coeffs(&alg, coeffs).unwrap();

        // λ² − 4λ − 5, ascending [−5, −4, 1].
        let poly = minimal_polynomial(&a).unwrap();
        assert_eq!(poly.len(), 3);
        assert!((poly[0] + 5.0).abs() <= 1e-9, "{poly:?}");
        assert!((poly[1] + 4.0).abs() <= 1e-9);
        assert!((poly[2] - 1.0).abs() <= 1e-9);

        let spectral = spectral_decompose(&a).unwrap();
        assert_eq!(spectral.eigenvalues().len(), 2);
        assert!((spectral.eigenvalues()[0] + 1.0).abs() <= 1e-9);
        assert!((spectral.eigenvalues()[1] - 5.0).abs() <= 1e-9);

        // E_± = ½(𝕀 ± e₁).
        let e1 = Element::basis(&alg, 1).unwrap();
        let minus = Element::unit(&alg).sub(&e1).unwrap().scale(0.5);
        let plus = Element::unit(&alg).add(&e1).unwrap().scale(0.5);
        assert!(spectral.idempotents()[0].sub(&minus).unwrap().norm() <= 1e-9);
        assert!(spectral.idempotents()[1].sub(&plus).unwrap().norm() <= 1e-9);
        assert!(spectral.reconstruct().sub(&a).unwrap().norm() <= 1e-9);
    }

    #[test]
    fn diagonal_matrix_decomposes_into_diagonal_units() {
        use crate::composition::CompositionScalar;
        use crate::realization::CompositionMatrix;

        let alg = AlgebraDescriptor::hermitian(Level::Real, 2).unwrap();
        let mut m = CompositionMatrix::zero(2, Level::Real);
        m.set(0, 0, CompositionScalar::real(Level::Real, 1.0));
        m.set(1, 1, CompositionScalar::real(Level::Real, 2.0));
        let a = Element::from_matrix(&alg, &m).unwrap();

        let spectral = spectral_decompose(&a).unwrap();
        assert_eq!(spectral.eigenvalues().len(), 2);
        assert!((spectral.eigenvalues()[0] - 1.0).abs() <= 1e-10);
        assert!((spectral.eigenvalues()[1] - 2.0).abs() <= 1e-10);

        let mut d0 = CompositionMatrix::zero(2, Level::Real);
        d0.set(0, 0, CompositionScalar::real(Level::Real, 1.0));
        let proj0 = Element::from_matrix(&alg, &d0).unwrap();
        assert!(spectral.idempotents()[0].sub(&proj0).unwrap().norm() <= 1e-10);
    }

    #[test]
    fn scalar_multiple_of_the_unit_is_a_single_block() {
        let alg = AlgebraDescriptor::hermitian(Level::Complex, 2).unwrap();
        let a = Element::unit(&alg).scale(5.0);
        let spectral = spectral_decompose(&a).unwrap();
        assert_eq!(spectral.eigenvalues(), &[5.0]);
        assert_eq!(spectral.multiplicities(), &[2]);
        assert!(!is_primitive(&spectral.idempotents()[0]));
    }

    #[test]
    fn zero_element_decomposes() {
        let alg = spin(2);
        let spectral = spectral_decompose(&Element::zero(&alg)).unwrap();
        assert_eq!(spectral.eigenvalues(), &[0.0]);
        assert_eq!(spectral.multiplicities(), &[2]);
    }

    #[test]
    fn frame_of_the_unit_has_primitive_members() {
        let alg = AlgebraDescriptor::hermitian(Level::Complex, 2).unwrap();
        let frame = jordan_frame(&Element::unit(&alg)).unwrap();
        assert_eq!(frame.len(), 2);
        let mut sum = Element::zero(&alg);
        for e in frame.idempotents() {
            assert!(is_primitive(e));
            sum = sum.add(e).unwrap();
        }
        assert!(sum.sub(&Element::unit(&alg)).unwrap().norm() <= 1e-9);
        let p = frame.idempotents()[0]
            .jordan_product(&frame.idempotents()[1])
            .unwrap();
        assert!(p.norm() <= 1e-9);
    }

    #[test]
    fn frame_with_distinct_eigenvalues_equals_the_spectral_idempotents() {
        let alg = AlgebraDescriptor::hermitian(Level::Real, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let a = Element::random(&alg, &mut rng);
        let spectral = spectral_decompose(&a).unwrap();
        assert_eq!(spectral.eigenvalues().len(), 3, "expected a generic element");
        let frame = jordan_frame(&a).unwrap();
        assert_eq!(frame.len(), 3);
        for (f, s) in frame.idempotents().iter().zip(spectral.idempotents()) {
            assert!(f.sub(s).unwrap().norm() <= 1e-9);
        }
        assert_eq!(frame.eigenvalues(), spectral.eigenvalues());
    }

    #[test]
    fn exceptional_frames_always_have_three_members() {
        let alg = AlgebraDescriptor::exceptional().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..3 {
            let a = Element::random(&alg, &mut rng);
            let frame = jordan_frame(&a).unwrap();
            assert_eq!(frame.len(), 3);
            for e in frame.idempotents() {
                assert!((e.trace() - 1.0).abs() <= 1e-9);
            }
        }
        // Degenerate input: the unit must still refine to three members.
        let frame = jordan_frame(&Element::unit(&alg)).unwrap();
        assert_eq!(frame.len(), 3);
    }

    #[test]
    fn idempotency_and_primitivity_predicates() {
        let alg = AlgebraDescriptor::hermitian(Level::Complex, 2).unwrap();
        let unit = Element::unit(&alg);
        assert!(is_idempotent(&unit));
        assert!(!is_primitive(&unit));
        assert!(is_idempotent(&Element::zero(&alg)));
        assert!(!is_primitive(&Element::zero(&alg)));

        let spin_alg = spin(5);
        let half = Element::unit(&spin_alg)
            .add(&Element::basis(&spin_alg, 1).unwrap())
            .unwrap()
            .scale(0.5);
        assert!(is_primitive(&half));
    }

    // A primitive idempotent has a one-dimensional Peirce-1 space: the
    // quadratic image of anything is a multiple of the idempotent. This is
    // the definitional form of primitivity (no orthogonal splitting).
    #[test]
    fn primitive_idempotents_do_not_split() {
        let alg = AlgebraDescriptor::hermitian(Level::Quaternion, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let a = Element::random(&alg, &mut rng);
        let frame = jordan_frame(&a).unwrap();
        for e in frame.idempotents() {
            for _ in 0..10 {
                let b = Element::random(&alg, &mut rng);
                let image = quadratic_image(e, &b).unwrap();
                let coefficient = image.coeff_dot(e) / e.coeff_dot(e);
                let residual = image.sub(&e.scale(coefficient)).unwrap().norm();
                assert!(residual <= 1e-9, "Peirce-1 space of a primitive is 1-dimensional");
            }
        }
    }

    #[test]
    fn cone_membership() {
        let alg = spin(3);
        assert!(in_cone(&Element::unit(&alg)).unwrap());
        // 𝕀 + 2e₁ has eigenvalues 3 and −1.
        let a = Element::unit(&alg)
            .add(&Element::basis(&alg, 1).unwrap().scale(2.0))
            .unwrap();
        assert!(!in_cone(&a).unwrap());
        assert!((min_eigenvalue(&a).unwrap() + 1.0).abs() <= 1e-9);
    }

    // Spectrum of f(a) is f applied to the spectrum of a.
    #[test]
    fn polynomial_functional_calculus_matches_the_spectrum() {
        let alg = AlgebraDescriptor::hermitian(Level::Complex, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..5 {
            let a = Element::random_unit(&alg, &mut rng);
            let coeffs: [f64; 5] = std::array::from_fn(|_| {
                use rand::Rng;
                rng.gen_range(-1.0..1.0)
            });
            // f(a) = c0·𝕀 + c1·a + … + c4·a⁴
            let mut fa = Element::zero(&alg);
            for (k, c) in coeffs.iter().enumerate() {
                fa = fa.add(&a.power(k).unwrap().scale(*c)).unwrap();
            }
            let f = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);

            let tols = Tolerances::default();
            let spec_a = eigenvalues_with_multiplicity(&a, &tols).unwrap();
            let spec_fa = eigenvalues_with_multiplicity(&fa, &tols).unwrap();
            let mut mapped: Vec<f64> = spec_a.iter().map(|x| f(*x)).collect();
            mapped.sort_by(|x, y| x.partial_cmp(y).unwrap());
            for (got, want) in spec_fa.iter().zip(&mapped) {
                assert!((got - want).abs() <= 1e-7, "{got} vs {want}");
            }
        }
    }

    #[test]
    fn near_degenerate_spectra_merge_or_fail_loudly() {
        use crate::composition::CompositionScalar;
        use crate::realization::CompositionMatrix;
        let alg = AlgebraDescriptor::hermitian(Level::Complex, 2).unwrap();

        // A gap far below every threshold merges into one eigenvalue.
        let mut m = CompositionMatrix::zero(2, Level::Complex);
        m.set(0, 0, CompositionScalar::real(Level::Complex, 1.0));
        m.set(1, 1, CompositionScalar::real(Level::Complex, 1.0 + 1e-12));
        let a = Element::from_matrix(&alg, &m).unwrap();
        let spectral = spectral_decompose(&a).unwrap();
        assert_eq!(spectral.eigenvalues().len(), 1);

        // A gap in the ambiguous band is rejected rather than guessed at.
        let mut m = CompositionMatrix::zero(2, Level::Complex);
        m.set(0, 0, CompositionScalar::real(Level::Complex, 1.0));
        m.set(1, 1, CompositionScalar::real(Level::Complex, 1.0 + 5e-8));
        let a = Element::from_matrix(&alg, &m).unwrap();
        match spectral_decompose(&a) {
            Err(JordanError::IllConditioned(_)) | Err(JordanError::SpectralFailure(_)) => {}
            other => panic!("expected an error for an ambiguous spectrum, got {other:?}"),
        }

        // With the ambiguity window disabled the same input trips the
        // merged-roots check instead.
        let mut tols = Tolerances::default();
        tols.rank_ambiguity = 1e-15;
        match spectral_decompose_with(&a, &tols) {
            Err(JordanError::SpectralFailure(msg)) => {
                assert!(msg.contains("merged"), "unexpected message: {msg}")
            }
            other => panic!("expected merged-root failure, got {other:?}"),
        }
    }

    #[test]
    fn spectral_data_serializes_to_arrays() {
        let alg = spin(1);
        let a = Element::from_coeffs(&alg, vec![2.0, 3.0]).unwrap();
        let spectral = spectral_decompose(&a).unwrap();
        let json = serde_json::to_value(&spectral).unwrap();
        assert_eq!(json["eigenvalues"].as_array().unwrap().len(), 2);
        assert_eq!(json["multiplicities"], serde_json::json!([1, 1]));
        assert_eq!(
            json["idempotents"].as_array().unwrap()[0].as_array().unwrap().len(),
            2
        );
    }
}
