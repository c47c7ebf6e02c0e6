//! Dense spacetime algebra Cl(1,3).
//!
//! A [`Multivector`] holds 16 real coefficients indexed by a blade bitmask:
//! bit `µ` set means the coordinate generator `γ_µ` is present, factors in
//! ascending order. The metric is `diag(+1, -1, -1, -1)`.
//!
//! Index placement: storage is on the lower-index frame `γ_µ`. The
//! reciprocal frame is `γ^0 = γ_0`, `γ^i = -γ_i`. Constructors that take
//! physical components ([`Multivector::vector`]) use the upper frame, so a
//! 1-vector `v = v_0 γ^0 + v_i γ^i` splits as `v γ^0 = v_0 + v_i σ^i`.
//! Relative (Pauli) vectors are `σ^i = γ^i γ^0` and `î = σ^1 σ^2 σ^3`,
//! which equals `γ^5 = γ^0 γ^1 γ^2 γ^3`.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::vec3::Vec3;

pub const BLADES: usize = 16;

/// Metric signature of the coordinate frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metric;

impl Metric {
    pub const SIGNATURE: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

    /// `η^{µν}` (equal to `η_{µν}` for an orthonormal frame).
    pub fn eta(mu: usize, nu: usize) -> f64 {
        if mu == nu {
            Self::SIGNATURE[mu]
        } else {
            0.0
        }
    }
}

/// Sign of `e_a e_b = sign * e_{a^b}` for canonical blades `a`, `b`.
const fn blade_product_sign(a: usize, b: usize) -> i8 {
    // pairs (i in a, j in b) with j < i need one transposition each
    let mut swaps = 0u32;
    let mut x = a >> 1;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    let mut sign: i8 = if swaps.is_multiple_of(2) { 1 } else { -1 };
    // γ_1, γ_2, γ_3 square to -1
    if (a & b & 0b1110).count_ones() % 2 == 1 {
        sign = -sign;
    }
    sign
}

const fn build_sign_table() -> [[i8; BLADES]; BLADES] {
    let mut table = [[0i8; BLADES]; BLADES];
    let mut a = 0;
    while a < BLADES {
        let mut b = 0;
        while b < BLADES {
            table[a][b] = blade_product_sign(a, b);
            b += 1;
        }
        a += 1;
    }
    table
}

/// `SIGN_TABLE[a][b]`: the product of blades `a` and `b` is
/// `SIGN_TABLE[a][b] * blade(a ^ b)`.
pub static SIGN_TABLE: [[i8; BLADES]; BLADES] = build_sign_table();

/// Grade (number of generators) of a blade bitmask.
#[inline]
pub const fn blade_grade(blade: usize) -> u32 {
    (blade as u32).count_ones()
}

/// Reversion sign `(-1)^{k(k-1)/2}` for grade `k`.
#[inline]
const fn reversion_sign(k: u32) -> f64 {
    match k % 4 {
        0 | 1 => 1.0,
        _ => -1.0,
    }
}

#[derive(Clone, Copy, PartialEq, Default)]
pub struct Multivector {
    coeffs: [f64; BLADES],
}

impl Multivector {
    pub const ZERO: Self = Self { coeffs: [0.0; BLADES] };

    pub const fn from_coeffs(coeffs: [f64; BLADES]) -> Self {
        Self { coeffs }
    }

    /// Like [`Multivector::from_coeffs`] but rejects non-finite input.
    pub fn try_from_coeffs(coeffs: [f64; BLADES]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(Self { coeffs })
        } else {
            Err(Error::Domain("multivector coefficients must be finite".into()))
        }
    }

    pub fn coeffs(&self) -> &[f64; BLADES] {
        &self.coeffs
    }

    pub fn scalar(s: f64) -> Self {
        Self::blade(0, s)
    }

    pub fn blade(mask: usize, value: f64) -> Self {
        let mut coeffs = [0.0; BLADES];
        coeffs[mask] = value;
        Self { coeffs }
    }

    /// Lower-index generator `γ_µ`.
    pub fn gamma(mu: usize) -> Self {
        assert!(mu < 4, "generator index out of range");
        Self::blade(1 << mu, 1.0)
    }

    /// Upper-index generator `γ^µ = η^{µµ} γ_µ`.
    pub fn gamma_up(mu: usize) -> Self {
        assert!(mu < 4, "generator index out of range");
        Self::blade(1 << mu, Metric::SIGNATURE[mu])
    }

    /// `γ^5 = γ^0 γ^1 γ^2 γ^3`, the unit pseudoscalar (squares to -1).
    pub fn pseudoscalar() -> Self {
        // three spatial sign flips relative to γ_0 γ_1 γ_2 γ_3
        Self::blade(0b1111, -1.0)
    }

    /// Relative vector `σ^i = γ^i γ^0`, `i` in 1..=3.
    pub fn sigma(i: usize) -> Self {
        assert!((1..=3).contains(&i), "relative index must be 1, 2 or 3");
        Self::gamma_up(i) * Self::gamma_up(0)
    }

    /// 1-vector `v0 γ^0 + v_i γ^i` from upper-frame components.
    pub fn vector(v0: f64, v: Vec3) -> Self {
        let mut coeffs = [0.0; BLADES];
        coeffs[1] = v0;
        coeffs[2] = -v[0];
        coeffs[4] = -v[1];
        coeffs[8] = -v[2];
        Self { coeffs }
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Coefficient of `γ^5` in the grade-4 part.
    pub fn pseudoscalar_part(&self) -> f64 {
        -self.coeffs[0b1111]
    }

    /// Geometric product.
    pub fn geometric(&self, rhs: &Self) -> Self {
        let mut out = [0.0; BLADES];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            let row = &SIGN_TABLE[a];
            for (b, &cb) in rhs.coeffs.iter().enumerate() {
                out[a ^ b] += f64::from(row[b]) * ca * cb;
            }
        }
        Self { coeffs: out }
    }

    /// Main anti-automorphism `*`: flips grades 2 and 3.
    pub fn reversion(&self) -> Self {
        let mut out = self.coeffs;
        for (blade, c) in out.iter_mut().enumerate() {
            *c *= reversion_sign(blade_grade(blade));
        }
        Self { coeffs: out }
    }

    /// Grade-`k` projection `<a>_k`.
    pub fn grade(&self, k: usize) -> Result<Self> {
        if k > 4 {
            return Err(Error::Domain(format!("grade {k} outside 0..=4")));
        }
        Ok(self.project(k as u32))
    }

    pub(crate) fn project(&self, k: u32) -> Self {
        let mut out = [0.0; BLADES];
        for (blade, c) in self.coeffs.iter().enumerate() {
            if blade_grade(blade) == k {
                out[blade] = *c;
            }
        }
        Self { coeffs: out }
    }

    /// True if every coefficient outside the listed grades is exactly zero.
    pub fn has_only_grades(&self, grades: &[u32]) -> bool {
        self.coeffs.iter().enumerate().all(|(blade, c)| *c == 0.0 || grades.contains(&blade_grade(blade)))
    }

    /// Euclidean norm of the coefficient array.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Coefficient-space inner product; for single-blade `basis` with unit
    /// coefficient this extracts the component along it.
    fn coeff_dot(&self, basis: &Self) -> f64 {
        self.coeffs.iter().zip(basis.coeffs.iter()).map(|(a, b)| a * b).sum()
    }
}

impl Index<usize> for Multivector {
    type Output = f64;
    fn index(&self, blade: usize) -> &f64 {
        &self.coeffs[blade]
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector(")?;
        let mut first = true;
        for (blade, c) in self.coeffs.iter().enumerate() {
            if *c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            if blade != 0 {
                write!(f, "·γ_")?;
                for mu in 0..4 {
                    if blade & (1 << mu) != 0 {
                        write!(f, "{mu}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl Add for Multivector {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
        self
    }
}

impl Neg for Multivector {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

impl Mul for Multivector {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.geometric(&rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Self;
    fn mul(mut self, s: f64) -> Self {
        for c in self.coeffs.iter_mut() {
            *c *= s;
        }
        self
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        m * self
    }
}

fn require_vector(a: &Multivector) -> Result<()> {
    if a.has_only_grades(&[1]) {
        Ok(())
    } else {
        Err(Error::Domain("left operand must be a pure 1-vector".into()))
    }
}

/// Interior product `a·b` of a 1-vector with any multivector:
/// `½(a b_k - (-1)^k b_k a)` summed over the grades of `b`.
pub fn vector_dot(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    require_vector(a)?;
    Ok(graded_symmetrize(a, b, -1.0))
}

/// Exterior product `a∧b` of a 1-vector with any multivector:
/// `½(a b_k + (-1)^k b_k a)`.
pub fn vector_wedge(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    require_vector(a)?;
    Ok(graded_symmetrize(a, b, 1.0))
}

fn graded_symmetrize(a: &Multivector, b: &Multivector, sign: f64) -> Multivector {
    let mut out = Multivector::ZERO;
    for k in 0..=4u32 {
        let bk = b.project(k);
        if bk.max_abs() == 0.0 {
            continue;
        }
        let parity = if k % 2 == 0 { 1.0 } else { -1.0 };
        out += (a.geometric(&bk) + bk.geometric(a) * (sign * parity)) * 0.5;
    }
    out
}

/// Hodge dual `⋆a = a* γ^5`.
pub fn hodge_dual(a: &Multivector) -> Multivector {
    a.reversion().geometric(&Multivector::pseudoscalar())
}

/// Relative (Pauli) split of a bivector, `F = E + î H`.
#[derive(Debug, Clone, Copy, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct RelativeSplit {
    pub e: Vec3,
    pub h: Vec3,
}

struct SplitBasis {
    e: [Multivector; 3],
    h: [Multivector; 3],
}

fn split_basis() -> &'static SplitBasis {
    static BASIS: OnceLock<SplitBasis> = OnceLock::new();
    BASIS.get_or_init(|| {
        let i_hat = Multivector::pseudoscalar();
        let e = [1, 2, 3].map(Multivector::sigma);
        let h = e.map(|s| i_hat * s);
        SplitBasis { e, h }
    })
}

/// Splits a pure bivector into `E_i σ^i + î H_i σ^i`.
pub fn relative_split(f: &Multivector) -> Result<RelativeSplit> {
    if !f.has_only_grades(&[2]) {
        return Err(Error::Domain("relative split needs a pure bivector".into()));
    }
    let basis = split_basis();
    // each basis element is a single blade with coefficient ±1
    Ok(RelativeSplit { e: [0, 1, 2].map(|i| f.coeff_dot(&basis.e[i])), h: [0, 1, 2].map(|i| f.coeff_dot(&basis.h[i])) })
}

/// Inverse of [`relative_split`].
pub fn relative_join(split: &RelativeSplit) -> Multivector {
    let basis = split_basis();
    let mut out = Multivector::ZERO;
    for i in 0..3 {
        out += basis.e[i] * split.e[i] + basis.h[i] * split.h[i];
    }
    out
}

/// Relative split of a 1-vector: `v γ^0 = v_0 + v_i σ^i`.
pub fn relative_vector_split(v: &Multivector) -> Result<(f64, Vec3)> {
    require_vector(v)?;
    let c = v.coeffs();
    Ok((c[1], [-c[2], -c[4], -c[8]]))
}
