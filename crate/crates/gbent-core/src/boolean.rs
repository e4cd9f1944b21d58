//! Boolean functions `F_2^n -> F_2`, their Walsh-Hadamard spectra, bentness
//! and duals.
//!
//! The Walsh-Hadamard transform used throughout is the unnormalized
//! `W_f(u) = sum_x (-1)^(x*u) (-1)^f(x)`; a function on an even number of
//! variables is bent exactly when `|W_f(u)| = 2^(n/2)` for every `u`, and
//! the dual is then read off from the signs: `(-1)^fdual(u) = W_f(u) / 2^(n/2)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::Error;
use crate::MAX_VARS;

/// In-place fast Walsh-Hadamard transform (unnormalized butterfly).
///
/// After the call, `values[u] = sum_x (-1)^(parity(x & u)) * input[x]`.
/// Applying it twice multiplies a vector by `len`. The length must be a
/// power of two no larger than `2^MAX_VARS`.
pub fn wht_in_place(values: &mut [i64]) -> Result<(), Error> {
    let len = values.len();
    if !len.is_power_of_two() {
        return Err(Error::LengthNotPowerOfTwo(len));
    }
    if len > (1 << MAX_VARS) {
        return Err(Error::TooManyVariables {
            n: len.trailing_zeros() as usize,
            max: MAX_VARS,
        });
    }
    let mut half = 1;
    while half < len {
        let step = half * 2;
        let mut start = 0;
        while start < len {
            for i in start..start + half {
                let a = values[i];
                let b = values[i + half];
                values[i] = a + b;
                values[i + half] = a - b;
            }
            start += step;
        }
        half = step;
    }
    Ok(())
}

/// A Boolean function given by its bit-packed truth table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl BooleanFunction {
    fn word_count(n: usize) -> usize {
        if n >= 6 {
            1 << (n - 6)
        } else {
            1
        }
    }

    fn check_vars(n: usize) -> Result<(), Error> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::TooManyVariables { n, max: MAX_VARS });
        }
        Ok(())
    }

    /// The all-zero function on `n` variables.
    pub fn zero(n: usize) -> Result<Self, Error> {
        Self::check_vars(n)?;
        Ok(BooleanFunction {
            n,
            words: vec![0; Self::word_count(n)],
        })
    }

    /// Builds a function from its truth table, one entry per point.
    pub fn from_bits(n: usize, bits: &[bool]) -> Result<Self, Error> {
        Self::check_vars(n)?;
        if bits.len() != 1 << n {
            return Err(Error::LengthNotPowerOfTwo(bits.len()));
        }
        let mut f = Self::zero(n)?;
        for (j, &b) in bits.iter().enumerate() {
            if b {
                f.words[j >> 6] |= 1 << (j & 63);
            }
        }
        Ok(f)
    }

    /// Parses a truth-table string such as `"0001"`; the length determines `n`.
    pub fn from_table_str(s: &str) -> Result<Self, Error> {
        let len = s.chars().count();
        if !len.is_power_of_two() || len < 2 {
            return Err(Error::LengthNotPowerOfTwo(len));
        }
        let n = len.trailing_zeros() as usize;
        Self::check_vars(n)?;
        let mut bits = Vec::with_capacity(len);
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(Error::InvalidDigit(other)),
            }
        }
        Self::from_bits(n, &bits)
    }

    /// Builds a function from a `+1/-1` vector, `+1` meaning value `0`.
    pub fn from_sign_vector(signs: &[i64]) -> Result<Self, Error> {
        let len = signs.len();
        if !len.is_power_of_two() || len < 2 {
            return Err(Error::LengthNotPowerOfTwo(len));
        }
        let n = len.trailing_zeros() as usize;
        Self::check_vars(n)?;
        let mut bits = Vec::with_capacity(len);
        for &s in signs {
            match s {
                1 => bits.push(false),
                -1 => bits.push(true),
                other => return Err(Error::InvalidSignValue(other)),
            }
        }
        Self::from_bits(n, &bits)
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
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
    pub fn value(&self, j: usize) -> bool {
        debug_assert!(j < self.len());
        (self.words[j >> 6] >> (j & 63)) & 1 == 1
    }

    /// The `(-1)^f(x)` vector.
    pub fn sign_vector(&self) -> Vec<i64> {
        (0..self.len())
            .map(|j| if self.value(j) { -1 } else { 1 })
            .collect()
    }

    /// Truth table as a `0`/`1` string in ascending point order.
    pub fn table_string(&self) -> String {
        (0..self.len())
            .map(|j| if self.value(j) { '1' } else { '0' })
            .collect()
    }

    /// Walsh-Hadamard spectrum of `(-1)^f`.
    pub fn walsh_spectrum(&self) -> IntegerSpectrum {
        let mut values = self.sign_vector();
        wht_in_place(&mut values).expect("table length is a valid transform size");
        IntegerSpectrum { n: self.n, values }
    }

    /// True when `n` is even and the whole spectrum is `+-2^(n/2)`.
    ///
    /// For odd `n` this returns false without transforming: the spectrum is
    /// integral while `2^(n/2)` is not.
    pub fn is_bent(&self) -> bool {
        if !self.n.is_multiple_of(2) {
            return false;
        }
        let root = 1i64 << (self.n / 2);
        let mut values = self.sign_vector();
        wht_in_place(&mut values).expect("table length is a valid transform size");
        values.iter().all(|&w| w == root || w == -root)
    }

    /// The dual bent function, with `(-1)^fdual(u) = W_f(u) / 2^(n/2)`.
    pub fn dual(&self) -> Result<Self, Error> {
        if !self.n.is_multiple_of(2) {
            return Err(Error::NotBent);
        }
        let root = 1i64 << (self.n / 2);
        let spectrum = self.walsh_spectrum();
        let mut bits = Vec::with_capacity(self.len());
        for &w in &spectrum.values {
            if w == root {
                bits.push(false);
            } else if w == -root {
                bits.push(true);
            } else {
                return Err(Error::NotBent);
            }
        }
        Self::from_bits(self.n, &bits)
    }

    /// True when `f` equals its own dual.
    pub fn is_self_dual(&self) -> bool {
        match self.dual() {
            Ok(d) => d == *self,
            Err(_) => false,
        }
    }

    /// True when the dual is the complement `f + 1`.
    pub fn is_anti_self_dual(&self) -> bool {
        match self.dual() {
            Ok(d) => (0..self.len()).all(|j| d.value(j) != self.value(j)),
            Err(_) => false,
        }
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.table_string())
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 6 {
            write!(f, "BooleanFunction(n={}, {})", self.n, self.table_string())
        } else {
            write!(f, "BooleanFunction(n={})", self.n)
        }
    }
}

impl PartialOrd for BooleanFunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Truth-table order: by variable count, then lexicographically by
/// `f(0), f(1), ...` (so `"0001" < "0010"` as the strings suggest).
impl Ord for BooleanFunction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for j in 0..self.len() {
                let ord = self.value(j).cmp(&other.value(j));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }
}

/// An integer Walsh-Hadamard spectrum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerSpectrum {
    n: usize,
    values: Vec<i64>,
}

impl IntegerSpectrum {
    /// Number of variables of the transformed function.
    pub fn n(&self) -> usize {
        self.n
    }

    /// All spectrum entries in ascending point order.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Spectrum entry at point `u`.
    pub fn entry(&self, u: usize) -> i64 {
        self.values[u]
    }
}

/// Ascending truth-table stream of every bent function on `n` variables.
///
/// Supported for `n = 2` and `n = 4`, where an exhaustive scan over all
/// `2^(2^n)` truth tables is cheap.
pub fn bent_functions(n: usize) -> Result<BentFunctions, Error> {
    if n != 2 && n != 4 {
        return Err(Error::UnsupportedVariables(n));
    }
    Ok(BentFunctions {
        n,
        next: 0,
        end: 1u64 << (1 << n),
    })
}

/// Like [`bent_functions`] but restricted to lexicographic table indices in
/// `start..end`; useful for splitting the scan across threads.
pub fn bent_functions_in_range(n: usize, start: u64, end: u64) -> Result<BentFunctions, Error> {
    if n != 2 && n != 4 {
        return Err(Error::UnsupportedVariables(n));
    }
    let total = 1u64 << (1 << n);
    Ok(BentFunctions {
        n,
        next: start.min(total),
        end: end.min(total),
    })
}

/// Iterator over bent functions in ascending truth-table order.
pub struct BentFunctions {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for BentFunctions {
    type Item = BooleanFunction;

    fn next(&mut self) -> Option<BooleanFunction> {
        let l = 1usize << self.n;
        let root = 1i64 << (self.n / 2);
        while self.next < self.end {
            let t = self.next;
            self.next += 1;
            // Table index t packs f(0) as the most significant bit, so
            // ascending t is ascending table order.
            let mut signs = [0i64; 16];
            for (j, s) in signs[..l].iter_mut().enumerate() {
                *s = if (t >> (l - 1 - j)) & 1 == 1 { -1 } else { 1 };
            }
            wht_in_place(&mut signs[..l]).expect("scan length is a valid transform size");
            if signs[..l].iter().all(|&w| w == root || w == -root) {
                let bits: Vec<bool> = (0..l).map(|j| (t >> (l - 1 - j)) & 1 == 1).collect();
                return Some(BooleanFunction::from_bits(self.n, &bits).expect("valid table"));
            }
        }
        None
    }
}
