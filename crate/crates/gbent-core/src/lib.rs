//! Exact-arithmetic toolkit for bent Boolean functions, generalized Boolean
//! functions `F_2^n -> Z_{2^m}`, and the correspondence that decomposes a
//! regular generalized bent function into a tuple of Boolean bent functions.
//!
//! Everything is computed over the integers or over the cyclotomic ring
//! `Z[w]`, `w = exp(pi*i / 2^(m-1))`; no floating point is involved, so
//! every predicate (bent, gbent, regular, self-dual, ...) is exact.
//!
//! # Conventions
//!
//! A function on `F_2^n` is stored as a value table indexed by the points
//! `0..2^n`, where point `j` has coordinates `x_i = (j >> (i-1)) & 1` for
//! `i = 1..=n` (least significant bit first). Value tables are written and
//! compared in ascending point order: the table string `"2101"` means
//! `f(0)=2, f(1)=1, f(2)=0, f(3)=1`. The dot product `x * u` is the parity
//! of the bitwise AND of the two point indices, which is independent of the
//! bit-order convention.
//!
//! # Example
//!
//! Split a regular quaternary bent function into its two Boolean bent
//! components and rebuild it:
//!
//! ```
//! use gbent_core::{compose, decompose, GeneralizedBooleanFunction};
//!
//! let f = GeneralizedBooleanFunction::from_digits_str(2, "2101")?;
//! assert!(f.is_gbent());
//! assert_eq!(f.regular_dual().unwrap().compact_string(), "1322");
//!
//! let system = decompose(&f)?;
//! let tables: Vec<String> = system
//!     .components()
//!     .iter()
//!     .map(|g| g.table_string())
//!     .collect();
//! assert_eq!(tables, ["1000", "1101"]);
//! assert_eq!(compose(&system)?, f);
//! # Ok::<(), gbent_core::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod boolean;
pub mod classification;
pub mod cyclotomic;
pub mod decomposition;
pub mod error;
pub mod gbf;
pub mod linear;

pub use boolean::{
    bent_functions, bent_functions_in_range, wht_in_place, BooleanFunction, IntegerSpectrum,
};
pub use classification::{
    classify_quaternary, exhaustive_regular, orbit_of, regular_quaternary, GroupGenerators,
    OrbitReport, SCAN_LIMIT,
};
pub use cyclotomic::CyclotomicInteger;
pub use decomposition::{
    check_self_dual_decomposition, compose, decompose, extract_coefficients, has_hadamard_property,
    CoefficientVectors, DecompositionSystem,
};
pub use error::Error;
pub use gbf::{
    dual_after_affine, AffineTransform, GeneralizedBooleanFunction, GeneralizedSpectrum,
};
pub use linear::BinMatrix;

/// Largest supported variable count for plain Boolean-function transforms.
pub const MAX_VARS: usize = 20;

/// Largest supported modulus exponent `m` (so `q = 2^m <= 64`).
pub const MAX_ORDER_EXP: u32 = 6;

/// Tag describing the point-indexing convention used by value tables.
pub const CONVENTION: &str = "lsb-first point index; tables list f(0), f(1), ... f(2^n - 1)";
