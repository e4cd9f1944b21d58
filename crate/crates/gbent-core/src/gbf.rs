//! Generalized Boolean functions `F_2^n -> Z_q`, `q = 2^m`, their spectra
//! over `Z[w]`, regularity, duals, and the restricted affine action.
//!
//! The sign function of `f` is `F(x) = w^f(x)`. Writing `k = 2^(m-1)` and
//! splitting digits as `f(x) = i` or `i + k` (signs `+w^i` / `-w^i`), the
//! sign function becomes `sum_i a_i(x) w^i` with integer coefficient
//! functions `a_i`, so the generalized transform
//! `H_f(u) = sum_x (-1)^(x*u) w^f(x)` is computed exactly as `k` ordinary
//! integer Walsh-Hadamard transforms, one per coefficient slice.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::boolean::{wht_in_place, BooleanFunction};
use crate::cyclotomic::CyclotomicInteger;
use crate::error::Error;
use crate::linear::BinMatrix;
use crate::{MAX_ORDER_EXP, MAX_VARS};

/// A function `F_2^n -> Z_(2^m)` stored as a value table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralizedBooleanFunction {
    n: usize,
    m: u32,
    values: Vec<u8>,
}

fn check_order(m: u32) -> Result<(), Error> {
    if m == 0 || m > MAX_ORDER_EXP {
        return Err(Error::InvalidOrderExponent(m));
    }
    Ok(())
}

impl GeneralizedBooleanFunction {
    /// Builds a function from its value table; the length determines `n`.
    pub fn from_values(m: u32, values: Vec<u8>) -> Result<Self, Error> {
        check_order(m)?;
        let len = values.len();
        if !len.is_power_of_two() || len < 2 {
            return Err(Error::LengthNotPowerOfTwo(len));
        }
        let n = len.trailing_zeros() as usize;
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n, max: MAX_VARS });
        }
        let q = 1u32 << m;
        if let Some(&v) = values.iter().find(|&&v| u32::from(v) >= q) {
            return Err(Error::ValueOutOfRange {
                value: v,
                modulus: q,
            });
        }
        Ok(GeneralizedBooleanFunction { n, m, values })
    }

    /// Parses a digit string such as `"2101"` (value table, ascending points).
    pub fn from_digits_str(m: u32, s: &str) -> Result<Self, Error> {
        let mut values = Vec::with_capacity(s.len());
        for c in s.chars() {
            let d = c.to_digit(10).ok_or(Error::InvalidDigit(c))?;
            values.push(d as u8);
        }
        Self::from_values(m, values)
    }

    /// The generalized function `(q/2) * b` whose sign function is `(-1)^b`.
    pub fn embed_boolean(b: &BooleanFunction, m: u32) -> Result<Self, Error> {
        check_order(m)?;
        let half = 1u8 << (m - 1);
        let values = (0..b.len())
            .map(|j| if b.value(j) { half } else { 0 })
            .collect();
        Self::from_values(m, values)
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The modulus exponent `m`.
    pub fn order_exponent(&self) -> u32 {
        self.m
    }

    /// The modulus `q = 2^m`.
    pub fn modulus(&self) -> u32 {
        1 << self.m
    }

    /// Number of points, `2^n`.
    pub fn len(&self) -> usize {
        1 << self.n
    }

    /// Always false: the domain is never empty.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Value at point `j`.
    pub fn value(&self, j: usize) -> u8 {
        self.values[j]
    }

    /// The whole value table.
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Pointwise `f + c mod q`.
    pub fn shift_constant(&self, c: u8) -> Self {
        let q = 1u16 << self.m;
        let values = self
            .values
            .iter()
            .map(|&v| ((u16::from(v) + u16::from(c)) % q) as u8)
            .collect();
        GeneralizedBooleanFunction {
            n: self.n,
            m: self.m,
            values,
        }
    }

    /// The `k = 2^(m-1)` integer coefficient slices of the sign function:
    /// `a_i(x)` is `+1` if `f(x) = i`, `-1` if `f(x) = i + k`, else `0`.
    pub fn coefficient_slices(&self) -> Vec<Vec<i64>> {
        let k = 1usize << (self.m - 1);
        let mut slices = vec![vec![0i64; self.len()]; k];
        for (x, &v) in self.values.iter().enumerate() {
            let v = v as usize;
            if v < k {
                slices[v][x] = 1;
            } else {
                slices[v - k][x] = -1;
            }
        }
        slices
    }

    /// The generalized Walsh-Hadamard spectrum `H_f`.
    pub fn gwht(&self) -> GeneralizedSpectrum {
        let mut slices = self.coefficient_slices();
        for slice in &mut slices {
            wht_in_place(slice).expect("table length is a valid transform size");
        }
        let k = slices.len();
        let values = (0..self.len())
            .map(|u| {
                let coeffs = (0..k).map(|i| slices[i][u]).collect();
                CyclotomicInteger::new(self.m, coeffs).expect("slice count matches the ring")
            })
            .collect();
        GeneralizedSpectrum {
            n: self.n,
            m: self.m,
            values,
        }
    }

    /// True when `|H_f(u)|^2 = 2^n` exactly for every `u`.
    pub fn is_gbent(&self) -> bool {
        let target =
            CyclotomicInteger::from_int(self.m, 1i64 << self.n).expect("order already validated");
        self.gwht().values.iter().all(|z| z.norm_sq() == target)
    }

    /// The dual of a regular gbent function, or `None` when `f` is not
    /// regular (i.e. `H_f(u)` is not `2^(n/2) w^fdual(u)` everywhere).
    ///
    /// For odd `n`, regularity requires `sqrt(2)` to be a ring element,
    /// which holds exactly when `8 | q`; for `m <= 2` the scaled roots
    /// `2^(n/2) w^t` have irrational coordinates while every spectrum is
    /// integral, so `None` is returned there without scanning. For `m >= 3`
    /// the test multiplies out `2^((n-1)/2) sqrt(2) w^t` in the ring and
    /// compares exactly.
    pub fn regular_dual(&self) -> Option<Self> {
        let spectrum = self.gwht();
        let q = self.modulus();
        let mut dual_values = Vec::with_capacity(self.len());
        if self.n.is_multiple_of(2) {
            let scale = 1i64 << (self.n / 2);
            for z in &spectrum.values {
                dual_values.push(z.as_scaled_root(scale)? as u8);
            }
        } else {
            let root2 = CyclotomicInteger::sqrt_two(self.m)?;
            let base = root2.scaled(1i64 << ((self.n - 1) / 2));
            for z in &spectrum.values {
                let t = (0..q).find(|&t| {
                    let root = CyclotomicInteger::omega_pow(self.m, i64::from(t))
                        .expect("order already validated");
                    base.checked_mul(&root).expect("same ring") == *z
                })?;
                dual_values.push(t as u8);
            }
        }
        Some(GeneralizedBooleanFunction {
            n: self.n,
            m: self.m,
            values: dual_values,
        })
    }

    /// True when `f` is regular gbent and equals its own dual.
    pub fn is_self_dual(&self) -> bool {
        self.regular_dual().is_some_and(|d| d == *self)
    }

    /// True when `f` is regular gbent with dual `f + q/2`.
    pub fn is_anti_self_dual(&self) -> bool {
        let half = 1u8 << (self.m - 1);
        self.regular_dual()
            .is_some_and(|d| d == self.shift_constant(half))
    }

    /// The transformed function `g(x) = f(x*M + a) + c`.
    pub fn apply_affine(&self, t: &AffineTransform) -> Result<Self, Error> {
        if t.mat.n() != self.n {
            return Err(Error::DimensionMismatch);
        }
        if t.m != self.m {
            return Err(Error::OrderMismatch {
                lhs: self.m,
                rhs: t.m,
            });
        }
        let q = 1u16 << self.m;
        let values = (0..self.len())
            .map(|x| {
                let src = (t.mat.apply_to_point(x as u32) ^ t.translation) as usize;
                ((u16::from(self.values[src]) + u16::from(t.constant)) % q) as u8
            })
            .collect();
        Ok(GeneralizedBooleanFunction {
            n: self.n,
            m: self.m,
            values,
        })
    }

    /// Value table in compact form: a digit string when `q <= 9`, otherwise
    /// comma-separated values.
    pub fn compact_string(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut s = alloc::string::String::new();
        if self.modulus() <= 9 {
            for &v in &self.values {
                write!(s, "{v}").expect("writing to a String cannot fail");
            }
        } else {
            for (j, &v) in self.values.iter().enumerate() {
                if j > 0 {
                    s.push(',');
                }
                write!(s, "{v}").expect("writing to a String cannot fail");
            }
        }
        s
    }
}

impl fmt::Display for GeneralizedBooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact_string())
    }
}

impl fmt::Debug for GeneralizedBooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GeneralizedBooleanFunction(q={}, n={}, {})",
            self.modulus(),
            self.n,
            self.compact_string()
        )
    }
}

/// A generalized Walsh-Hadamard spectrum: one ring element per point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralizedSpectrum {
    n: usize,
    m: u32,
    values: Vec<CyclotomicInteger>,
}

impl GeneralizedSpectrum {
    /// Number of variables of the transformed function.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The modulus exponent `m`.
    pub fn order_exponent(&self) -> u32 {
        self.m
    }

    /// All entries in ascending point order.
    pub fn values(&self) -> &[CyclotomicInteger] {
        &self.values
    }

    /// Entry at point `u`.
    pub fn entry(&self, u: usize) -> &CyclotomicInteger {
        &self.values[u]
    }
}

/// An invertible affine substitution plus constant shift:
/// `f -> f(x*M + a) + c` with `M` in `GL(n, 2)`, `a` in `F_2^n`, `c` in `Z_q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineTransform {
    mat: BinMatrix,
    translation: u32,
    constant: u8,
    m: u32,
}

impl AffineTransform {
    /// Builds a transform, rejecting singular matrices and out-of-range
    /// translations or constants.
    pub fn new(mat: BinMatrix, translation: u32, constant: u8, m: u32) -> Result<Self, Error> {
        check_order(m)?;
        if !mat.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        let n = mat.n();
        if translation >> n != 0 {
            return Err(Error::InvalidRow {
                row: translation,
                n,
            });
        }
        if u32::from(constant) >= 1 << m {
            return Err(Error::ValueOutOfRange {
                value: constant,
                modulus: 1 << m,
            });
        }
        Ok(AffineTransform {
            mat,
            translation,
            constant,
            m,
        })
    }

    /// The identity transform.
    pub fn identity(n: usize, m: u32) -> Result<Self, Error> {
        Self::new(BinMatrix::identity(n), 0, 0, m)
    }

    /// Domain size.
    pub fn n(&self) -> usize {
        self.mat.n()
    }

    /// The modulus exponent `m`.
    pub fn order_exponent(&self) -> u32 {
        self.m
    }

    /// The matrix `M`.
    pub fn matrix(&self) -> &BinMatrix {
        &self.mat
    }

    /// The translation `a` as a point bitmask.
    pub fn translation(&self) -> u32 {
        self.translation
    }

    /// The constant `c`.
    pub fn constant(&self) -> u8 {
        self.constant
    }

    /// The inverse transform `(M^-1, a*M^-1, -c)`.
    pub fn inverse(&self) -> Self {
        let inv = self.mat.inverse().expect("matrix invertible by invariant");
        let translation = inv.apply_to_point(self.translation);
        let q = 1u16 << self.m;
        let constant = ((q - u16::from(self.constant)) % q) as u8;
        AffineTransform {
            mat: inv,
            translation,
            constant,
            m: self.m,
        }
    }
}

/// Predicts the dual of `g(x) = f(x*M + a) + c` from the dual of `f` alone:
/// `gdual(u) = fdual(u * (M^-1)^T) + c + (q/2) * (a . (u * (M^-1)^T)) mod q`.
///
/// `f_dual` must be the dual of the original function; the result equals
/// `apply_affine(f, t).regular_dual()` whenever `f` is regular gbent.
pub fn dual_after_affine(
    f_dual: &GeneralizedBooleanFunction,
    t: &AffineTransform,
) -> Result<GeneralizedBooleanFunction, Error> {
    if t.mat.n() != f_dual.n {
        return Err(Error::DimensionMismatch);
    }
    if t.m != f_dual.m {
        return Err(Error::OrderMismatch {
            lhs: f_dual.m,
            rhs: t.m,
        });
    }
    let inv_t = t
        .mat
        .inverse()
        .expect("matrix invertible by invariant")
        .transpose();
    let q = 1u16 << f_dual.m;
    let half = 1u16 << (f_dual.m - 1);
    let values = (0..f_dual.len())
        .map(|u| {
            let v = inv_t.apply_to_point(u as u32);
            let sign_flip = ((t.translation & v).count_ones() % 2) as u16;
            let val =
                u16::from(f_dual.values[v as usize]) + u16::from(t.constant) + half * sign_flip;
            (val % q) as u8
        })
        .collect();
    Ok(GeneralizedBooleanFunction {
        n: f_dual.n,
        m: f_dual.m,
        values,
    })
}
