//! Error type shared by the whole crate.

use core::fmt;

/// Everything that can go wrong while building or transforming functions.
///
/// Construction problems (bad lengths, out-of-range digits, mismatched
/// moduli) are distinguished from mathematical failures (a component is not
/// bent, a system violates the Hadamard property, ...) so that callers can
/// map them to different exit codes or messages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A value-table length was not a power of two.
    LengthNotPowerOfTwo(usize),
    /// The variable count exceeds what the transforms support.
    TooManyVariables { n: usize, max: usize },
    /// The operation only supports specific variable counts (e.g. 2 and 4).
    UnsupportedVariables(usize),
    /// The modulus exponent `m` must satisfy `1 <= m <= MAX_ORDER_EXP`.
    InvalidOrderExponent(u32),
    /// A table entry was `>= q`.
    ValueOutOfRange { value: u8, modulus: u32 },
    /// A sign-vector entry was not `+1` or `-1`.
    InvalidSignValue(i64),
    /// A table string contained a character that is not a valid digit.
    InvalidDigit(char),
    /// Two operands live in cyclotomic rings of different orders.
    OrderMismatch { lhs: u32, rhs: u32 },
    /// A coefficient vector had the wrong length for its ring.
    CoefficientLength { expected: usize, got: usize },
    /// A matrix row had bits outside the `n` supported columns.
    InvalidRow { row: u32, n: usize },
    /// Operand shapes (variable count, component count, ...) disagree.
    DimensionMismatch,
    /// The matrix of an affine transform must be invertible over `F_2`.
    SingularMatrix,
    /// The function is not bent, so it has no dual.
    NotBent,
    /// The function is not regular gbent, so it has no decomposition.
    NotRegular,
    /// The function is not self-dual.
    NotSelfDual,
    /// Component `index` of a system is not bent.
    NonBentComponent(usize),
    /// The system violates the Hadamard property at this point.
    HadamardViolation(usize),
    /// The system of duals violates the Hadamard property at this point.
    DualHadamardViolation(usize),
    /// An exhaustive scan over `functions` candidates exceeds the limit.
    ScanTooLarge { functions: u128, limit: u128 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::LengthNotPowerOfTwo(len) => {
                write!(f, "table length {len} is not a power of two")
            }
            Error::TooManyVariables { n, max } => {
                write!(f, "{n} variables exceeds the supported maximum of {max}")
            }
            Error::UnsupportedVariables(n) => {
                write!(f, "operation not supported for n = {n}")
            }
            Error::InvalidOrderExponent(m) => {
                write!(f, "modulus exponent m = {m} is outside 1..=6")
            }
            Error::ValueOutOfRange { value, modulus } => {
                write!(f, "value {value} is not reduced modulo {modulus}")
            }
            Error::InvalidSignValue(v) => write!(f, "sign vectors may only contain +1/-1, got {v}"),
            Error::InvalidDigit(c) => write!(f, "invalid table digit {c:?}"),
            Error::OrderMismatch { lhs, rhs } => {
                write!(f, "ring order mismatch: 2^{lhs} vs 2^{rhs}")
            }
            Error::CoefficientLength { expected, got } => {
                write!(f, "expected {expected} coefficients, got {got}")
            }
            Error::InvalidRow { row, n } => {
                write!(f, "row {row:#x} has bits outside an {n}-column matrix")
            }
            Error::DimensionMismatch => write!(f, "operand dimensions do not match"),
            Error::SingularMatrix => write!(f, "matrix is singular over F_2"),
            Error::NotBent => write!(f, "function is not bent"),
            Error::NotRegular => write!(f, "function is not regular gbent"),
            Error::NotSelfDual => write!(f, "function is not self-dual"),
            Error::NonBentComponent(i) => write!(f, "component {i} is not bent"),
            Error::HadamardViolation(x) => {
                write!(f, "system violates the Hadamard property at point {x}")
            }
            Error::DualHadamardViolation(u) => {
                write!(f, "dual system violates the Hadamard property at point {u}")
            }
            Error::ScanTooLarge { functions, limit } => {
                write!(
                    f,
                    "scan over {functions} functions exceeds the limit of {limit}"
                )
            }
        }
    }
}

impl core::error::Error for Error {}
