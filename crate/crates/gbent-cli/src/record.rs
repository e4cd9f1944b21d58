//! The on-the-wire form of a generalized Boolean function and the error
//! type that maps library failures onto process exit codes.

use core::fmt;

use gbent_core::{Error, GeneralizedBooleanFunction};
use serde::{Deserialize, Serialize};

use crate::{EXIT_INVALID_INPUT, EXIT_PROPERTY_VIOLATION, EXIT_UNSUPPORTED_SCALE};

/// A value table together with its shape. Serialized field order is fixed:
/// `q`, then `n`, then `values`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionRecord {
    pub q: u32,
    pub n: usize,
    pub values: Vec<u8>,
}

impl FunctionRecord {
    pub fn from_function(f: &GeneralizedBooleanFunction) -> Self {
        FunctionRecord {
            q: f.modulus(),
            n: f.n(),
            values: f.values().to_vec(),
        }
    }

    /// Parses a table for modulus `q`: a digit string such as `2101` when
    /// `q <= 9`, or integers separated by commas or whitespace otherwise
    /// (the separated form is accepted for small moduli too).
    pub fn parse_table(q: u32, table: &str) -> Result<Self, CliError> {
        let m = order_exponent(q)?;
        let trimmed = table.trim();
        let values = if trimmed.contains(',') || trimmed.contains(char::is_whitespace) {
            trimmed
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|part| !part.is_empty())
                .map(|part| {
                    part.parse::<u8>()
                        .map_err(|_| CliError::usage(format!("invalid table entry `{part}`")))
                })
                .collect::<Result<Vec<u8>, CliError>>()?
        } else {
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or(CliError::Core(Error::InvalidDigit(c)))
                })
                .collect::<Result<Vec<u8>, CliError>>()?
        };
        let f = GeneralizedBooleanFunction::from_values(m, values)?;
        Ok(FunctionRecord::from_function(&f))
    }

    pub fn to_function(&self) -> Result<GeneralizedBooleanFunction, CliError> {
        let m = order_exponent(self.q)?;
        Ok(GeneralizedBooleanFunction::from_values(
            m,
            self.values.clone(),
        )?)
    }

    /// Digit string for `q <= 9`, comma-separated integers otherwise.
    pub fn compact(&self) -> String {
        if self.q <= 9 {
            self.values.iter().map(|v| char::from(b'0' + v)).collect()
        } else {
            let parts: Vec<String> = self.values.iter().map(u8::to_string).collect();
            parts.join(",")
        }
    }
}

impl fmt::Display for FunctionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

fn order_exponent(q: u32) -> Result<u32, CliError> {
    if q < 2 || !q.is_power_of_two() {
        return Err(CliError::usage(format!(
            "modulus {q} is not a power of two of at least 2"
        )));
    }
    Ok(q.trailing_zeros())
}

/// Anything that can stop a command, tagged with the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// A failure surfaced by the core library.
    Core(Error),
    /// A usage problem the library never saw (bad flags, malformed syntax).
    Usage(String),
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    /// 2 for invalid input, 3 for property violations, 4 for scale limits.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_INVALID_INPUT,
            CliError::Core(e) => match e {
                Error::NotBent
                | Error::NotRegular
                | Error::NotSelfDual
                | Error::NonBentComponent(_)
                | Error::HadamardViolation(_)
                | Error::DualHadamardViolation(_) => EXIT_PROPERTY_VIOLATION,
                Error::ScanTooLarge { .. } => EXIT_UNSUPPORTED_SCALE,
                _ => EXIT_INVALID_INPUT,
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}
