//! Exact arithmetic in the cyclotomic ring `Z[w]` for `w = exp(2*pi*i / q)`,
//! `q = 2^m`.
//!
//! The ring is `Z[X] / (X^k + 1)` with `k = 2^(m-1)`: an element is stored
//! as the integer coefficient vector of `c_0 + c_1 w + ... + c_(k-1) w^(k-1)`
//! and products are reduced with the negacyclic rule `w^k = -1`. For `m = 1`
//! the ring degenerates to `Z` with `w = -1`. Complex conjugation sends
//! `w^j` to `w^(-j) = -w^(k-j)`, so it is again exact on coefficients, and
//! `|z|^2 = z * conj(z)` stays in the ring. No floating point anywhere.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::MAX_ORDER_EXP;

/// An element of `Z[w]`, `w` a primitive `2^m`-th root of unity.
///
/// ```
/// use gbent_core::CyclotomicInteger;
///
/// // In Z[w] with w^4 = -1 (m = 3), sqrt(2) = w - w^3 and its square is 2.
/// let root2 = CyclotomicInteger::sqrt_two(3).unwrap();
/// let two = root2.checked_mul(&root2).unwrap();
/// assert_eq!(two, CyclotomicInteger::from_int(3, 2).unwrap());
/// assert_eq!(two.norm_sq(), CyclotomicInteger::from_int(3, 4).unwrap());
/// ```
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclotomicInteger {
    m: u32,
    coeffs: Vec<i64>,
}

fn check_order(m: u32) -> Result<(), Error> {
    if m == 0 || m > MAX_ORDER_EXP {
        return Err(Error::InvalidOrderExponent(m));
    }
    Ok(())
}

impl CyclotomicInteger {
    /// Builds an element from its `2^(m-1)` basis coefficients.
    pub fn new(m: u32, coeffs: Vec<i64>) -> Result<Self, Error> {
        check_order(m)?;
        let k = 1usize << (m - 1);
        if coeffs.len() != k {
            return Err(Error::CoefficientLength {
                expected: k,
                got: coeffs.len(),
            });
        }
        Ok(CyclotomicInteger { m, coeffs })
    }

    /// The zero element.
    pub fn zero(m: u32) -> Result<Self, Error> {
        check_order(m)?;
        Ok(CyclotomicInteger {
            m,
            coeffs: vec![0; 1 << (m - 1)],
        })
    }

    /// Embeds an ordinary integer.
    pub fn from_int(m: u32, value: i64) -> Result<Self, Error> {
        let mut z = Self::zero(m)?;
        z.coeffs[0] = value;
        Ok(z)
    }

    /// The root of unity `w^t`; `t` is taken modulo `q = 2^m`.
    pub fn omega_pow(m: u32, t: i64) -> Result<Self, Error> {
        let mut z = Self::zero(m)?;
        let q = 1i64 << m;
        let k = z.coeffs.len();
        let t = t.rem_euclid(q) as usize;
        if t < k {
            z.coeffs[t] = 1;
        } else {
            z.coeffs[t - k] = -1;
        }
        Ok(z)
    }

    /// `sqrt(2)` as a ring element, available once `8 | q`:
    /// `w_8 - w_8^3` where `w_8 = w^(q/8)`. Returns `None` for `m < 3`;
    /// there `sqrt(2)` genuinely lies outside the ring.
    pub fn sqrt_two(m: u32) -> Option<Self> {
        if m < 3 || check_order(m).is_err() {
            return None;
        }
        let mut z = Self::zero(m).expect("order already checked");
        let eighth = 1usize << (m - 3);
        z.coeffs[eighth] = 1;
        z.coeffs[3 * eighth] = -1;
        Some(z)
    }

    /// The order exponent `m`.
    pub fn order_exponent(&self) -> u32 {
        self.m
    }

    /// The root order `q = 2^m`.
    pub fn modulus(&self) -> u32 {
        1 << self.m
    }

    /// Degree of the ring over `Z`, i.e. `k = 2^(m-1)`.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Basis coefficients `c_0, ..., c_(k-1)`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Single coefficient.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    /// True when every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same_order(&self, other: &Self) -> Result<(), Error> {
        if self.m != other.m {
            return Err(Error::OrderMismatch {
                lhs: self.m,
                rhs: other.m,
            });
        }
        Ok(())
    }

    /// Sum, failing on mismatched ring orders.
    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CyclotomicInteger { m: self.m, coeffs })
    }

    /// Difference, failing on mismatched ring orders.
    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CyclotomicInteger { m: self.m, coeffs })
    }

    /// Product with negacyclic reduction, failing on mismatched orders.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_same_order(other)?;
        let k = self.coeffs.len();
        let mut out = vec![0i64; k];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let p = i + j;
                if p < k {
                    out[p] += a * b;
                } else {
                    out[p - k] -= a * b;
                }
            }
        }
        Ok(CyclotomicInteger {
            m: self.m,
            coeffs: out,
        })
    }

    /// Scalar multiple.
    pub fn scaled(&self, t: i64) -> Self {
        CyclotomicInteger {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * t).collect(),
        }
    }

    /// Additive inverse.
    pub fn negated(&self) -> Self {
        self.scaled(-1)
    }

    /// Complex conjugate: `w^j -> -w^(k-j)` for `j > 0`.
    pub fn conj(&self) -> Self {
        let k = self.coeffs.len();
        let mut out = vec![0i64; k];
        out[0] = self.coeffs[0];
        for j in 1..k {
            out[k - j] = -self.coeffs[j];
        }
        CyclotomicInteger {
            m: self.m,
            coeffs: out,
        }
    }

    /// The exact squared modulus `z * conj(z)` as a ring element.
    pub fn norm_sq(&self) -> Self {
        self.checked_mul(&self.conj())
            .expect("conjugate lives in the same ring")
    }

    /// If `self = scale * w^t` for the given positive scale, returns `t`
    /// (in `0..q`); otherwise `None`.
    pub fn as_scaled_root(&self, scale: i64) -> Option<u32> {
        debug_assert!(scale > 0);
        let k = self.coeffs.len();
        let mut found: Option<u32> = None;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if found.is_some() {
                return None;
            }
            if c == scale {
                found = Some(i as u32);
            } else if c == -scale {
                found = Some((i + k) as u32);
            } else {
                return None;
            }
        }
        found
    }
}

impl Add for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn add(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
        self.checked_add(rhs).expect("ring order mismatch")
    }
}

impl Sub for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn sub(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
        self.checked_sub(rhs).expect("ring order mismatch")
    }
}

impl Mul for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn mul(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
        self.checked_mul(rhs).expect("ring order mismatch")
    }
}

impl Neg for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn neg(self) -> CyclotomicInteger {
        self.negated()
    }
}

impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if wrote {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let mag = c.unsigned_abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("w")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, coeffs: &[i64]) -> CyclotomicInteger {
        CyclotomicInteger::new(m, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn product_reduces_negacyclically() {
        // (1 + w)(1 - w^3) = 1 + w - w^3 - w^4 = 2 + w - w^3 at m = 3.
        let a = z(3, &[1, 1, 0, 0]);
        let b = z(3, &[1, 0, 0, -1]);
        assert_eq!((&a * &b).coeffs(), [2, 1, 0, -1]);
    }

    #[test]
    fn conjugation_values() {
        let w = CyclotomicInteger::omega_pow(3, 1).unwrap();
        assert_eq!(w.conj().coeffs(), [0, 0, 0, -1]);
        let real = CyclotomicInteger::from_int(3, 7).unwrap();
        assert_eq!(real.conj(), real);
        // conj is an involution on a mixed element.
        let mixed = z(3, &[3, -2, 5, 1]);
        assert_eq!(mixed.conj().conj(), mixed);
    }

    #[test]
    fn norm_of_one_plus_omega() {
        let a = z(3, &[1, 1, 0, 0]);
        assert_eq!(a.norm_sq().coeffs(), [2, 1, 0, -1]);
    }

    #[test]
    fn omega_powers_wrap_with_sign() {
        assert_eq!(CyclotomicInteger::omega_pow(2, 0).unwrap().coeffs(), [1, 0]);
        assert_eq!(CyclotomicInteger::omega_pow(2, 1).unwrap().coeffs(), [0, 1]);
        assert_eq!(
            CyclotomicInteger::omega_pow(2, 2).unwrap().coeffs(),
            [-1, 0]
        );
        assert_eq!(
            CyclotomicInteger::omega_pow(2, 3).unwrap().coeffs(),
            [0, -1]
        );
        assert_eq!(
            CyclotomicInteger::omega_pow(3, 11).unwrap().coeffs(),
            [0, 0, 0, 1]
        );
        // Negative exponents reduce modulo q.
        assert_eq!(
            CyclotomicInteger::omega_pow(2, -1).unwrap(),
            CyclotomicInteger::omega_pow(2, 3).unwrap()
        );
    }

    #[test]
    fn scaled_root_recognition() {
        assert_eq!(z(2, &[0, -2]).as_scaled_root(2), Some(3));
        assert_eq!(z(3, &[-4, 0, 0, 0]).as_scaled_root(4), Some(4));
        assert_eq!(z(2, &[2, 2]).as_scaled_root(2), None);
        assert_eq!(z(2, &[0, 0]).as_scaled_root(2), None);
        assert_eq!(z(2, &[3, 0]).as_scaled_root(2), None);
        for t in 0..8 {
            let e = CyclotomicInteger::omega_pow(3, t).unwrap().scaled(5);
            assert_eq!(e.as_scaled_root(5), Some(t as u32));
        }
    }

    #[test]
    fn degenerate_ring_at_m1_is_the_integers() {
        let five = CyclotomicInteger::from_int(1, 5).unwrap();
        let w = CyclotomicInteger::omega_pow(1, 1).unwrap();
        assert_eq!(w.coeffs(), [-1]);
        assert_eq!((&five * &w).coeffs(), [-5]);
        assert_eq!(five.conj(), five);
        assert_eq!(five.norm_sq().coeffs(), [25]);
        assert_eq!(z(1, &[-2]).as_scaled_root(2), Some(1));
    }

    #[test]
    fn sqrt_two_squares_to_two() {
        assert!(CyclotomicInteger::sqrt_two(1).is_none());
        assert!(CyclotomicInteger::sqrt_two(2).is_none());
        for m in 3..=4 {
            let r = CyclotomicInteger::sqrt_two(m).unwrap();
            assert_eq!(&r * &r, CyclotomicInteger::from_int(m, 2).unwrap());
        }
    }

    #[test]
    fn order_checks() {
        assert!(CyclotomicInteger::zero(0).is_err());
        assert!(CyclotomicInteger::zero(7).is_err());
        assert!(matches!(
            CyclotomicInteger::new(3, vec![1, 2]),
            Err(Error::CoefficientLength {
                expected: 4,
                got: 2
            })
        ));
        let a = CyclotomicInteger::from_int(2, 1).unwrap();
        let b = CyclotomicInteger::from_int(3, 1).unwrap();
        assert_eq!(
            a.checked_add(&b).err(),
            Some(Error::OrderMismatch { lhs: 2, rhs: 3 })
        );
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn display_rendering() {
        assert_eq!(format!("{}", z(3, &[2, 1, 0, -1])), "2 + w - w^3");
        assert_eq!(format!("{}", z(2, &[0, 0])), "0");
        assert_eq!(format!("{}", z(2, &[-3, 2])), "-3 + 2w");
        assert_eq!(format!("{}", z(2, &[0, -1])), "-w");
    }
}
