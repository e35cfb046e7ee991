//! The four normed composition algebras ℝ, ℂ, ℍ, 𝕆.
//!
//! Scalars are real coefficient vectors of length `2^level` and multiply by
//! the Cayley–Dickson doubling rule
//!
//! ```text
//! (a, b) · (c, d) = (a c − d̄ b,  d a + b c̄)
//! ```
//!
//! applied recursively down to real multiplication, with ℂ = pairs of reals,
//! ℍ = pairs of ℂ and 𝕆 = pairs of ℍ. `coeffs[0]` is the real part. This
//! pins a concrete multiplication table for every level, so all downstream
//! numbers are reproducible.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{JordanError, Result};

/// Which composition algebra a scalar belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Real,
    Complex,
    Quaternion,
    Octonion,
}

impl Level {
    pub const ALL: [Level; 4] = [Level::Real, Level::Complex, Level::Quaternion, Level::Octonion];

    /// Dimension over the reals: 1, 2, 4 or 8.
    pub fn dim(self) -> usize {
        match self {
            Level::Real => 1,
            Level::Complex => 2,
            Level::Quaternion => 4,
            Level::Octonion => 8,
        }
    }

    pub fn from_dim(dim: usize) -> Option<Level> {
        match dim {
            1 => Some(Level::Real),
            2 => Some(Level::Complex),
            4 => Some(Level::Quaternion),
            8 => Some(Level::Octonion),
            _ => None,
        }
    }

    /// One-letter field tag used by the CLI and the JSON algebra spec.
    pub fn symbol(self) -> char {
        match self {
            Level::Real => 'R',
            Level::Complex => 'C',
            Level::Quaternion => 'H',
            Level::Octonion => 'O',
        }
    }

    pub fn from_symbol(symbol: char) -> Option<Level> {
        match symbol.to_ascii_uppercase() {
            'R' => Some(Level::Real),
            'C' => Some(Level::Complex),
            'H' => Some(Level::Quaternion),
            'O' => Some(Level::Octonion),
            _ => None,
        }
    }
}

/// An element of ℝ, ℂ, ℍ or 𝕆 as a real coefficient vector.
///
/// Storage is a fixed 8-slot array; only the first `level.dim()` slots are
/// meaningful and the rest are kept at zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompositionScalar {
    level: Level,
    c: [f64; 8],
}

impl CompositionScalar {
    pub fn zero(level: Level) -> Self {
        CompositionScalar { level, c: [0.0; 8] }
    }

    pub fn one(level: Level) -> Self {
        Self::real(level, 1.0)
    }

    /// Embed a real number at the given level.
    pub fn real(level: Level, value: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = value;
        CompositionScalar { level, c }
    }

    /// The k-th basis unit (k = 0 is the real unit).
    pub fn unit(level: Level, k: usize) -> Result<Self> {
        if k >= level.dim() {
            return Err(JordanError::InvalidArgument(format!(
                "unit index {k} out of range for a level with dimension {}",
                level.dim()
            )));
        }
        let mut c = [0.0; 8];
        c[k] = 1.0;
        Ok(CompositionScalar { level, c })
    }

    pub fn new(level: Level, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != level.dim() {
            return Err(JordanError::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                level.dim(),
                coeffs.len()
            )));
        }
        let mut c = [0.0; 8];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(CompositionScalar { level, c })
    }

    /// Build a scalar from a coefficient vector, inferring the level from
    /// the length (1, 2, 4 or 8).
    pub fn from_coeffs(coeffs: &[f64]) -> Result<Self> {
        let level = Level::from_dim(coeffs.len()).ok_or_else(|| {
            JordanError::InvalidArgument(format!(
                "coefficient count {} is not one of 1, 2, 4, 8",
                coeffs.len()
            ))
        })?;
        Self::new(level, coeffs)
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.c[..self.level.dim()]
    }

    /// Cayley–Dickson product. Errors if the operands live at different
    /// levels.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        if self.level != rhs.level {
            return Err(JordanError::InvalidArgument(format!(
                "cannot multiply scalars at different levels ({:?} vs {:?})",
                self.level, rhs.level
            )));
        }
        Ok(self.mul_raw(rhs))
    }

    pub(crate) fn mul_raw(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.level, rhs.level);
        let n = self.level.dim();
        let mut out = CompositionScalar::zero(self.level);
        cd_mul(&self.c[..n], &rhs.c[..n], &mut out.c[..n]);
        out
    }

    /// Conjugation: negates every coefficient except the real part.
    pub fn conj(&self) -> Self {
        let mut out = *self;
        for x in &mut out.c[1..] {
            *x = -*x;
        }
        out
    }

    /// The norm form N(x) = Σ coeffs[i]²: the *squared* Euclidean length.
    /// It is multiplicative, N(xy) = N(x)N(y).
    pub fn norm(&self) -> f64 {
        self.c.iter().map(|x| x * x).sum()
    }

    /// Real part.
    pub fn re(&self) -> f64 {
        self.c[0]
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.level != rhs.level {
            return Err(JordanError::InvalidArgument(
                "cannot add scalars at different levels".into(),
            ));
        }
        Ok(self.add_raw(rhs))
    }

    pub(crate) fn add_raw(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for (o, r) in out.c.iter_mut().zip(rhs.c.iter()) {
            *o += r;
        }
        out
    }

    pub(crate) fn sub_raw(&self, rhs: &Self) -> Self {
        let mut out = *self;
        for (o, r) in out.c.iter_mut().zip(rhs.c.iter()) {
            *o -= r;
        }
        out
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = *self;
        for x in &mut out.c {
            *x *= factor;
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.c.iter().all(|x| x.abs() <= tol)
    }
}

/// Recursive doubling product: out = x · y with |x| = |y| = |out| = 2^k.
fn cd_mul(x: &[f64], y: &[f64], out: &mut [f64]) {
    let n = x.len();
    if n == 1 {
        out[0] = x[0] * y[0];
        return;
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);

    let mut t1 = [0.0; 4];
    let mut t2 = [0.0; 4];
    let mut conj_buf = [0.0; 4];

    // first half: a c − d̄ b
    cd_mul(a, c, &mut out[..h]);
    cd_conj(d, &mut conj_buf[..h]);
    cd_mul(&conj_buf[..h], b, &mut t1[..h]);
    for i in 0..h {
        out[i] -= t1[i];
    }

    // second half: d a + b c̄
    cd_mul(d, a, &mut t2[..h]);
    cd_conj(c, &mut conj_buf[..h]);
    cd_mul(b, &conj_buf[..h], &mut t1[..h]);
    for i in 0..h {
        out[h + i] = t2[i] + t1[i];
    }
}

fn cd_conj(x: &[f64], out: &mut [f64]) {
    out[0] = x[0];
    for i in 1..x.len() {
        out[i] = -x[i];
    }
}

// Scalars serialize as plain JSON arrays of 2^level reals; the level is
// recovered from the length.
impl Serialize for CompositionScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CompositionScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<f64>::deserialize(deserializer)?;
        CompositionScalar::from_coeffs(&coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_scalar<R: Rng>(level: Level, rng: &mut R) -> CompositionScalar {
        let coeffs: Vec<f64> = (0..level.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        CompositionScalar::new(level, &coeffs).unwrap()
    }

    fn associator(
        x: &CompositionScalar,
        y: &CompositionScalar,
        z: &CompositionScalar,
    ) -> CompositionScalar {
        let xy_z = x.mul_raw(y).mul_raw(z);
        let x_yz = x.mul_raw(&y.mul_raw(z));
        xy_z.sub_raw(&x_yz)
    }

    #[test]
    fn quaternion_units_multiply_like_i_j_k() {
        let i = CompositionScalar::unit(Level::Quaternion, 1).unwrap();
        let j = CompositionScalar::unit(Level::Quaternion, 2).unwrap();
        let k = CompositionScalar::unit(Level::Quaternion, 3).unwrap();

        assert_eq!(i.multiply(&j).unwrap(), k);
        assert_eq!(j.multiply(&i).unwrap(), k.neg());
        assert_eq!(i.multiply(&i).unwrap(), CompositionScalar::real(Level::Quaternion, -1.0));
        assert_eq!(k.multiply(&k).unwrap(), CompositionScalar::real(Level::Quaternion, -1.0));
    }

    #[test]
    fn one_is_a_two_sided_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for level in Level::ALL {
            let one = CompositionScalar::one(level);
            for _ in 0..20 {
                let x = random_scalar(level, &mut rng);
                assert_eq!(x.multiply(&one).unwrap(), x);
                assert_eq!(one.multiply(&x).unwrap(), x);
            }
        }
    }

    #[test]
    fn conjugation_trivia() {
        let one = CompositionScalar::one(Level::Octonion);
        assert_eq!(one.conj(), one);
        for k in 0..8 {
            let u = CompositionScalar::unit(Level::Octonion, k).unwrap();
            assert_eq!(u.norm(), 1.0);
        }
    }

    // The doubling rule forces (u1·u2)·u4 = u7 while u1·(u2·u4) = -u7, so
    // this specific triple witnesses the nonzero octonion associator.
    #[test]
    fn octonion_unit_triple_has_nonzero_associator() {
        let u = |k: usize| CompositionScalar::unit(Level::Octonion, k).unwrap();
        let left = u(1).mul_raw(&u(2)).mul_raw(&u(4));
        let right = u(1).mul_raw(&u(2).mul_raw(&u(4)));
        assert_eq!(left, u(7));
        assert_eq!(right, u(7).neg());

        // Brute force over every unit triple: a nonzero associator exists.
        let mut max_assoc: f64 = 0.0;
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    max_assoc = max_assoc.max(associator(&u(a), &u(b), &u(c)).norm());
                }
            }
        }
        assert!(max_assoc >= 1.0, "expected an associator of norm >= 1, got {max_assoc}");
    }

    #[test]
    fn x_times_conj_x_is_the_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for level in Level::ALL {
            for _ in 0..50 {
                let x = random_scalar(level, &mut rng);
                let p = x.mul_raw(&x.conj());
                // Componentwise expansion: the product must be the squared
                // Euclidean length with all imaginary parts cancelling.
                let expected: f64 = x.coeffs().iter().map(|v| v * v).sum();
                assert!((p.re() - expected).abs() <= 1e-12 * (1.0 + expected));
                assert!((p.re() - x.norm()).abs() <= 1e-12 * (1.0 + expected));
                for im in &p.coeffs()[1..] {
                    assert!(im.abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn conj_is_an_antihomomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for level in Level::ALL {
            for _ in 0..50 {
                let x = random_scalar(level, &mut rng);
                let y = random_scalar(level, &mut rng);
                let lhs = x.mul_raw(&y).conj();
                let rhs = y.conj().mul_raw(&x.conj());
                assert!(lhs.sub_raw(&rhs).norm() <= 1e-24);
                assert_eq!(x.conj().conj(), x);
            }
        }
    }

    #[test]
    fn norm_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for level in Level::ALL {
            for _ in 0..1000 {
                let x = random_scalar(level, &mut rng);
                let y = random_scalar(level, &mut rng);
                let lhs = x.mul_raw(&y).norm();
                let rhs = x.norm() * y.norm();
                assert!(
                    (lhs - rhs).abs() <= 1e-10 * (1.0 + rhs),
                    "norm multiplicativity violated at {level:?}: {lhs} vs {rhs}"
                );
            }
        }
    }

    // Levels 0..2 are associative; the octonions are merely alternative.
    #[test]
    fn associativity_up_to_quaternions() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for level in [Level::Real, Level::Complex, Level::Quaternion] {
            for _ in 0..200 {
                let x = random_scalar(level, &mut rng);
                let y = random_scalar(level, &mut rng);
                let z = random_scalar(level, &mut rng);
                assert!(associator(&x, &y, &z).norm() <= 1e-24);
            }
        }
    }

    #[test]
    fn octonions_are_alternative() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let x = random_scalar(Level::Octonion, &mut rng);
            let y = random_scalar(Level::Octonion, &mut rng);
            // x(xy) = (xx)y
            let lhs = x.mul_raw(&x.mul_raw(&y));
            let rhs = x.mul_raw(&x).mul_raw(&y);
            assert!(lhs.sub_raw(&rhs).norm() <= 1e-20);
        }
    }

    #[test]
    fn level_mismatch_is_rejected() {
        let x = CompositionScalar::one(Level::Complex);
        let y = CompositionScalar::one(Level::Quaternion);
        assert!(x.multiply(&y).is_err());
    }

    #[test]
    fn scalars_serialize_as_plain_arrays() {
        let x = CompositionScalar::new(Level::Complex, &[1.5, -2.0]).unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "[1.5,-2.0]");
        let back: CompositionScalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<CompositionScalar>("[1,2,3]").is_err());
    }
}
