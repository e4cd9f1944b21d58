//! Structured command output. Every report serializes to JSON with a fixed
//! field order and contains nothing volatile, so output is byte-stable
//! across runs.

use std::fmt::Write as _;

use gbent_core::{
    classify_quaternary, decompose, GeneralizedBooleanFunction, GroupGenerators, CONVENTION,
};
use serde::Serialize;

use crate::record::{CliError, FunctionRecord};

/// Full diagnostic readout for one function.
#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub q: u32,
    pub n: usize,
    pub values: Vec<u8>,
    /// Spectrum entries as coefficient vectors on the basis
    /// `1, w, ..., w^(q/2 - 1)`, indexed by the point `u`.
    pub spectrum: Vec<Vec<i64>>,
    pub gbent: bool,
    pub regular: bool,
    pub dual: Option<FunctionRecord>,
    pub self_dual: bool,
    pub anti_self_dual: bool,
}

impl AnalyzeReport {
    pub fn build(f: &GeneralizedBooleanFunction) -> Self {
        let spectrum = f
            .gwht()
            .values()
            .iter()
            .map(|z| z.coeffs().to_vec())
            .collect();
        let dual = f.regular_dual();
        AnalyzeReport {
            q: f.modulus(),
            n: f.n(),
            values: f.values().to_vec(),
            spectrum,
            gbent: f.is_gbent(),
            regular: dual.is_some(),
            dual: dual.as_ref().map(FunctionRecord::from_function),
            self_dual: f.is_self_dual(),
            anti_self_dual: f.is_anti_self_dual(),
        }
    }

    pub fn human(&self) -> String {
        let record = FunctionRecord {
            q: self.q,
            n: self.n,
            values: self.values.clone(),
        };
        let mut out = String::new();
        let _ = writeln!(out, "q: {}", self.q);
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "table: {}", record.compact());
        let _ = writeln!(out, "spectrum (coefficients on 1, w, ..., w^(q/2 - 1)):");
        for (u, coeffs) in self.spectrum.iter().enumerate() {
            let _ = writeln!(out, "  u={u}: {coeffs:?}");
        }
        let _ = writeln!(out, "gbent: {}", self.gbent);
        let _ = writeln!(out, "regular: {}", self.regular);
        match &self.dual {
            Some(dual) => {
                let _ = writeln!(out, "dual: {}", dual.compact());
            }
            None => {
                let _ = writeln!(out, "dual: none");
            }
        }
        let _ = writeln!(out, "self-dual: {}", self.self_dual);
        let _ = writeln!(out, "anti-self-dual: {}", self.anti_self_dual);
        out
    }
}

/// Component truth tables produced by `decompose`.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub q: u32,
    pub n: usize,
    pub components: Vec<String>,
}

impl DecompositionReport {
    pub fn build(f: &GeneralizedBooleanFunction) -> Result<Self, CliError> {
        let system = decompose(f)?;
        Ok(DecompositionReport {
            q: f.modulus(),
            n: f.n(),
            components: system
                .components()
                .iter()
                .map(|b| b.table_string())
                .collect(),
        })
    }
}

/// One equivalence class in a [`ClassificationReport`].
#[derive(Debug, Clone, Serialize)]
pub struct ClassEntry {
    pub representative: String,
    pub size: u64,
}

/// The orbit inventory for one `(q, n)`, plus the tool version and the
/// table convention so other implementations can line their tables up.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub q: u32,
    pub n: usize,
    pub total: u64,
    pub classes: Vec<ClassEntry>,
    pub group_order: u64,
    pub version: String,
    pub convention: String,
}

impl ClassificationReport {
    pub fn build(n: usize) -> Result<Self, CliError> {
        let orbits = classify_quaternary(n)?;
        let group_order = GroupGenerators::restricted_ea(n, 2)?.full_group_order();
        let classes: Vec<ClassEntry> = orbits
            .iter()
            .map(|o| ClassEntry {
                representative: FunctionRecord::from_function(&o.representative).compact(),
                size: o.size,
            })
            .collect();
        let total = classes.iter().map(|c| c.size).sum();
        Ok(ClassificationReport {
            q: 4,
            n,
            total,
            classes,
            group_order: u64::try_from(group_order)
                .map_err(|_| CliError::usage("group order exceeds the report range"))?,
            version: env!("CARGO_PKG_VERSION").to_string(),
            convention: CONVENTION.to_string(),
        })
    }

    /// Two-column table with the totals appended underneath.
    pub fn human(&self) -> String {
        let mut out = String::new();
        let width = self
            .classes
            .iter()
            .map(|c| c.representative.len())
            .max()
            .unwrap_or(0)
            .max("representative".len());
        let _ = writeln!(out, "{:<width$}  size", "representative");
        for class in &self.classes {
            let _ = writeln!(out, "{:<width$}  {}", class.representative, class.size);
        }
        let _ = writeln!(
            out,
            "total: {} functions in {} classes",
            self.total,
            self.classes.len()
        );
        let _ = writeln!(out, "group order: {}", self.group_order);
        let _ = writeln!(out, "convention: {}", self.convention);
        out
    }
}
