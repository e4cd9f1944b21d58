//! The decomposition correspondence between regular gbent functions
//! `F_2^n -> Z_(2^m)` and `k = 2^(m-1)`-tuples of Boolean bent functions.
//!
//! Writing the sign function of `f` as `sum_i a_i(x) w^i`, the component
//! signs are `(G_0, ..., G_(k-1))^T = H (a_0, ..., a_(k-1))^T` where `H` is
//! the Sylvester-Hadamard matrix of size `k`; applying `H` to a length-`k`
//! vector is just a Walsh-Hadamard transform over the component index.
//! `f` is regular gbent exactly when every `G_i` is bent and both the
//! system and the system of duals afford the *Hadamard property*: at every
//! point the column of component signs is `+-` a column of `H`. For
//! `m <= 2` the Hadamard property is automatic; from `m = 3` on it is a
//! real constraint.

use alloc::vec::Vec;
use core::fmt;

use crate::boolean::{wht_in_place, BooleanFunction};
use crate::error::Error;
use crate::gbf::GeneralizedBooleanFunction;
use crate::MAX_ORDER_EXP;

/// The integer coefficient slices of a generalized function's sign vector.
///
/// Slice `i` holds `a_i(0), ..., a_i(2^n - 1)`; at every point exactly one
/// slice is nonzero, with value `+-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientVectors {
    n: usize,
    m: u32,
    slices: Vec<Vec<i64>>,
}

impl CoefficientVectors {
    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The modulus exponent `m`.
    pub fn order_exponent(&self) -> u32 {
        self.m
    }

    /// The `k` slices, each of length `2^n`.
    pub fn slices(&self) -> &[Vec<i64>] {
        &self.slices
    }
}

/// Splits the sign function of `f` into its `k` coefficient slices.
pub fn extract_coefficients(f: &GeneralizedBooleanFunction) -> CoefficientVectors {
    CoefficientVectors {
        n: f.n(),
        m: f.order_exponent(),
        slices: f.coefficient_slices(),
    }
}

/// An ordered tuple of `k = 2^(m-1)` candidate components on a common domain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionSystem {
    m: u32,
    components: Vec<BooleanFunction>,
}

impl DecompositionSystem {
    /// Builds a system, requiring exactly `2^(m-1)` components on equally
    /// many variables each.
    pub fn new(m: u32, components: Vec<BooleanFunction>) -> Result<Self, Error> {
        if m == 0 || m > MAX_ORDER_EXP {
            return Err(Error::InvalidOrderExponent(m));
        }
        if components.len() != 1 << (m - 1) {
            return Err(Error::DimensionMismatch);
        }
        let n = components[0].n();
        if components.iter().any(|g| g.n() != n) {
            return Err(Error::DimensionMismatch);
        }
        Ok(DecompositionSystem { m, components })
    }

    /// The modulus exponent `m`.
    pub fn order_exponent(&self) -> u32 {
        self.m
    }

    /// Number of variables of each component.
    pub fn n(&self) -> usize {
        self.components[0].n()
    }

    /// The components in order.
    pub fn components(&self) -> &[BooleanFunction] {
        &self.components
    }

    /// The system of duals, failing if some component is not bent.
    pub fn dual_system(&self) -> Result<Self, Error> {
        let mut duals = Vec::with_capacity(self.components.len());
        for (i, g) in self.components.iter().enumerate() {
            duals.push(g.dual().map_err(|_| Error::NonBentComponent(i))?);
        }
        Ok(DecompositionSystem {
            m: self.m,
            components: duals,
        })
    }
}

impl fmt::Display for DecompositionSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Applies the size-`k` Sylvester-Hadamard matrix to the column of
/// component signs at one point and reports whether the result is a single
/// nonzero entry `+-k` (equivalently, the original column is `+-` a column
/// of the matrix).
fn column_is_hadamard(column: &mut [i64]) -> Option<(usize, i64)> {
    let k = column.len() as i64;
    wht_in_place(column).expect("component counts are powers of two");
    let mut hit = None;
    for (i, &v) in column.iter().enumerate() {
        if v == 0 {
            continue;
        }
        if hit.is_some() || (v != k && v != -k) {
            return None;
        }
        hit = Some((i, v));
    }
    hit
}

/// True when at every point the column of component signs is `+-` a column
/// of the Sylvester-Hadamard matrix of size `k`. Always true for `m <= 2`.
pub fn has_hadamard_property(system: &DecompositionSystem) -> bool {
    let signs: Vec<Vec<i64>> = system
        .components()
        .iter()
        .map(|g| g.sign_vector())
        .collect();
    let k = signs.len();
    let mut column = alloc::vec![0i64; k];
    (0..1usize << system.n()).all(|x| {
        for (slot, s) in column.iter_mut().zip(&signs) {
            *slot = s[x];
        }
        column_is_hadamard(&mut column).is_some()
    })
}

/// Decomposes a regular gbent function into its `k` Boolean components.
///
/// The components are guaranteed bent, and both the system and its dual
/// system afford the Hadamard property; [`compose`] inverts this exactly.
///
/// Only even `n` is supported: the bent-tuple correspondence is an even-`n`
/// statement. (Odd-`n` regular functions do exist once `8 | q`, but their
/// component functions are not bent, so they fall outside it.)
pub fn decompose(f: &GeneralizedBooleanFunction) -> Result<DecompositionSystem, Error> {
    if !f.n().is_multiple_of(2) {
        return Err(Error::UnsupportedVariables(f.n()));
    }
    if f.regular_dual().is_none() {
        return Err(Error::NotRegular);
    }
    let slices = f.coefficient_slices();
    let k = slices.len();
    let l = f.len();
    let mut signs = alloc::vec![alloc::vec![0i64; l]; k];
    let mut column = alloc::vec![0i64; k];
    for x in 0..l {
        for i in 0..k {
            column[i] = slices[i][x];
        }
        wht_in_place(&mut column).expect("component counts are powers of two");
        for i in 0..k {
            signs[i][x] = column[i];
        }
    }
    let components = signs
        .iter()
        .map(|s| BooleanFunction::from_sign_vector(s).expect("transform of a unit column"))
        .collect();
    Ok(DecompositionSystem {
        m: f.order_exponent(),
        components,
    })
}

/// Rebuilds the regular gbent function from a candidate system.
///
/// Validation order (all indices ascending, first failure wins): every
/// component must be bent (`NonBentComponent`), the system must afford the
/// Hadamard property (`HadamardViolation`), and so must the system of duals
/// (`DualHadamardViolation`).
pub fn compose(system: &DecompositionSystem) -> Result<GeneralizedBooleanFunction, Error> {
    let k = system.components.len();
    let l = 1usize << system.n();

    // Bent check, recording spectra for the dual system.
    let signs: Vec<Vec<i64>> = system.components.iter().map(|g| g.sign_vector()).collect();
    let n = system.n();
    if !n.is_multiple_of(2) {
        return Err(Error::NonBentComponent(0));
    }
    let root = 1i64 << (n / 2);
    let mut dual_signs = Vec::with_capacity(k);
    for (i, s) in signs.iter().enumerate() {
        let mut spectrum = s.clone();
        wht_in_place(&mut spectrum).expect("table length is a valid transform size");
        if spectrum.iter().any(|&w| w != root && w != -root) {
            return Err(Error::NonBentComponent(i));
        }
        for w in &mut spectrum {
            *w /= root;
        }
        dual_signs.push(spectrum);
    }

    // Hadamard property of the system itself, keeping the transformed
    // columns: entry i = +-k at point x encodes f(x) = i or i + k.
    let mut values = alloc::vec![0u8; l];
    let mut column = alloc::vec![0i64; k];
    for x in 0..l {
        for i in 0..k {
            column[i] = signs[i][x];
        }
        match column_is_hadamard(&mut column) {
            Some((i, v)) => values[x] = if v > 0 { i as u8 } else { (i + k) as u8 },
            None => return Err(Error::HadamardViolation(x)),
        }
    }

    // Hadamard property of the dual system.
    for u in 0..l {
        for (slot, s) in column.iter_mut().zip(&dual_signs) {
            *slot = s[u];
        }
        if column_is_hadamard(&mut column).is_none() {
            return Err(Error::DualHadamardViolation(u));
        }
    }

    GeneralizedBooleanFunction::from_values(system.m, values)
}

/// For a self-dual regular gbent function, decomposes it and reports
/// whether every component is a self-dual bent function (always true; a
/// `false` would witness a broken invariant).
pub fn check_self_dual_decomposition(f: &GeneralizedBooleanFunction) -> Result<bool, Error> {
    if !f.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let system = decompose(f)?;
    Ok(system.components().iter().all(|g| g.is_self_dual()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean::bent_functions;

    fn b(s: &str) -> BooleanFunction {
        BooleanFunction::from_table_str(s).unwrap()
    }

    fn g(m: u32, s: &str) -> GeneralizedBooleanFunction {
        GeneralizedBooleanFunction::from_digits_str(m, s).unwrap()
    }

    fn sys(m: u32, tables: &[&str]) -> DecompositionSystem {
        DecompositionSystem::new(m, tables.iter().map(|s| b(s)).collect()).unwrap()
    }

    #[test]
    fn coefficient_slices_of_a_quaternary_example() {
        let c = extract_coefficients(&g(2, "2101"));
        assert_eq!(c.slices()[0], [-1, 0, 1, 0]);
        assert_eq!(c.slices()[1], [0, 1, 0, 1]);
        // Exactly one nonzero per point, always +-1.
        for x in 0..4 {
            let nonzero: Vec<i64> = c
                .slices()
                .iter()
                .map(|s| s[x])
                .filter(|&v| v != 0)
                .collect();
            assert!(nonzero == [1] || nonzero == [-1]);
        }
    }

    #[test]
    fn decompose_quaternary_examples() {
        let system = decompose(&g(2, "2101")).unwrap();
        assert_eq!(system.components()[0], b("1000"));
        assert_eq!(system.components()[1], b("1101"));

        let system = decompose(&g(2, "2000")).unwrap();
        assert_eq!(system.components(), [b("1000"), b("1000")]);

        let system = decompose(&g(2, "0002")).unwrap();
        assert_eq!(system.components(), [b("0001"), b("0001")]);

        assert_eq!(decompose(&g(2, "0000")).err(), Some(Error::NotRegular));
        // Odd-n inputs are outside the correspondence even when regular.
        assert_eq!(
            decompose(&g(3, "02")).err(),
            Some(Error::UnsupportedVariables(1))
        );
    }

    #[test]
    fn compose_quaternary_examples() {
        assert_eq!(compose(&sys(2, &["1000", "1101"])).unwrap(), g(2, "2101"));
        assert_eq!(compose(&sys(2, &["1000", "1000"])).unwrap(), g(2, "2000"));
        assert_eq!(compose(&sys(2, &["0111", "0111"])).unwrap(), g(2, "0222"));
        assert_eq!(compose(&sys(2, &["0111", "1000"])).unwrap(), g(2, "1333"));
    }

    #[test]
    fn octal_compose_and_dual_violation() {
        // g3 = g0 + g1 + g2 holds, and so does the dual analogue.
        let valid = sys(3, &["0001", "0010", "0001", "0010"]);
        assert!(has_hadamard_property(&valid));
        let f = compose(&valid).unwrap();
        assert_eq!(f, g(3, "0015"));
        assert_eq!(f.regular_dual().unwrap(), g(3, "0105"));
        assert_eq!(decompose(&f).unwrap(), valid);

        // Here g3 = g0 + g1 + g2 as well, but the duals do not cohere:
        // dual(0111) = 1000 while the other three duals sum to 0111.
        let dual_violating = sys(3, &["0001", "0010", "0100", "0111"]);
        assert!(has_hadamard_property(&dual_violating));
        assert_eq!(
            compose(&dual_violating).err(),
            Some(Error::DualHadamardViolation(0))
        );

        // And here the forward property already fails at point 0.
        let forward_violating = sys(3, &["0001", "0001", "0001", "1000"]);
        assert!(!has_hadamard_property(&forward_violating));
        assert_eq!(
            compose(&forward_violating).err(),
            Some(Error::HadamardViolation(0))
        );
    }

    #[test]
    fn non_bent_components_are_reported_by_lowest_index() {
        assert_eq!(
            compose(&sys(2, &["0000", "0001"])).err(),
            Some(Error::NonBentComponent(0))
        );
        assert_eq!(
            compose(&sys(2, &["0001", "0000"])).err(),
            Some(Error::NonBentComponent(1))
        );
        assert_eq!(
            compose(&sys(2, &["0000", "0000"])).err(),
            Some(Error::NonBentComponent(0))
        );
    }

    #[test]
    fn system_shape_is_validated() {
        let three = vec![b("0001"), b("0010"), b("0100")];
        assert_eq!(
            DecompositionSystem::new(2, three).err(),
            Some(Error::DimensionMismatch)
        );
        let mixed = vec![b("0001"), b("00010111")];
        assert_eq!(
            DecompositionSystem::new(2, mixed).err(),
            Some(Error::DimensionMismatch)
        );
        assert!(DecompositionSystem::new(0, vec![b("0001")]).is_err());
    }

    #[test]
    fn pair_hadamard_property_is_automatic() {
        // For m = 2 every pair of +-1 columns is +- a Hadamard column.
        let bents: Vec<BooleanFunction> = bent_functions(2).unwrap().collect();
        for g0 in &bents {
            for g1 in &bents {
                let system = DecompositionSystem::new(2, vec![g0.clone(), g1.clone()]).unwrap();
                assert!(has_hadamard_property(&system));
                assert!(has_hadamard_property(&system.dual_system().unwrap()));
                assert!(compose(&system).is_ok());
            }
        }
    }

    #[test]
    fn round_trip_over_all_quaternary_pairs_at_n2() {
        let bents: Vec<BooleanFunction> = bent_functions(2).unwrap().collect();
        let mut seen = std::collections::BTreeSet::new();
        for g0 in &bents {
            for g1 in &bents {
                let system = DecompositionSystem::new(2, vec![g0.clone(), g1.clone()]).unwrap();
                let f = compose(&system).unwrap();
                assert!(f.regular_dual().is_some());
                assert_eq!(decompose(&f).unwrap(), system);
                seen.insert(f);
            }
        }
        // The correspondence is one-to-one: 8^2 distinct functions.
        assert_eq!(seen.len(), 64);
    }

    #[test]
    fn degenerate_binary_case() {
        let system = DecompositionSystem::new(1, vec![b("0001")]).unwrap();
        assert!(has_hadamard_property(&system));
        let f = compose(&system).unwrap();
        assert_eq!(f, g(1, "0001"));
        assert_eq!(decompose(&f).unwrap(), system);
    }

    #[test]
    fn self_dual_correspondence() {
        // The four self-dual quaternary functions at n = 2 decompose into
        // pairs of self-dual bent functions.
        for table in ["0002", "1113", "2220", "3331"] {
            assert_eq!(check_self_dual_decomposition(&g(2, table)), Ok(true));
        }
        // Conversely the four ordered pairs of self-dual bent functions
        // compose to exactly those functions.
        let self_duals = [b("0001"), b("1110")];
        let mut composed = Vec::new();
        for g0 in &self_duals {
            for g1 in &self_duals {
                let f =
                    compose(&DecompositionSystem::new(2, vec![g0.clone(), g1.clone()]).unwrap())
                        .unwrap();
                assert!(f.is_self_dual());
                composed.push(f.compact_string());
            }
        }
        composed.sort();
        assert_eq!(composed, ["0002", "1113", "2220", "3331"]);

        assert_eq!(
            check_self_dual_decomposition(&g(2, "2101")).err(),
            Some(Error::NotSelfDual)
        );
        assert_eq!(
            check_self_dual_decomposition(&g(2, "0000")).err(),
            Some(Error::NotSelfDual)
        );
    }

    #[test]
    fn anti_self_dual_analogue() {
        // Same picture on the anti-self-dual side.
        for table in ["0222", "1333", "2000", "3111"] {
            let f = g(2, table);
            assert!(f.is_anti_self_dual());
            let system = decompose(&f).unwrap();
            assert!(system.components().iter().all(|c| c.is_anti_self_dual()));
        }
        let antis = [b("0111"), b("1000")];
        for g0 in &antis {
            for g1 in &antis {
                let f =
                    compose(&DecompositionSystem::new(2, vec![g0.clone(), g1.clone()]).unwrap())
                        .unwrap();
                assert!(f.is_anti_self_dual());
            }
        }
    }
}
