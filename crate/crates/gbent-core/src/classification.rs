//! Enumeration of quaternary regular bent functions and their orbits under
//! the restricted extended-affine group `f(x) -> f(x*M + a) + c`.
//!
//! The enumeration side leans on the decomposition correspondence: for
//! `q = 4` the Hadamard conditions are automatic, so the regular bent
//! functions are exactly the compositions of ordered pairs of Boolean bent
//! functions. Orbits are closed breadth-first over packed value tables
//! (2 bits per point at `q = 4`, so a whole `n = 4` table fits in 32 bits).

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::boolean::{bent_functions, BooleanFunction};
use crate::decomposition::{compose, DecompositionSystem};
use crate::error::Error;
use crate::gbf::{AffineTransform, GeneralizedBooleanFunction};
use crate::linear::BinMatrix;
use crate::MAX_ORDER_EXP;

/// Exhaustive scans refuse to enumerate more candidates than this.
pub const SCAN_LIMIT: u128 = 10_000_000;

/// Generating set for a subgroup of the restricted extended-affine group.
#[derive(Clone, Debug)]
pub struct GroupGenerators {
    n: usize,
    m: u32,
    transforms: Vec<AffineTransform>,
}

impl GroupGenerators {
    /// Generators of the full restricted extended-affine group on `n >= 2`
    /// variables: a transvection and a full-cycle permutation (together
    /// generating `GL(n, 2)`), one translation per coordinate, and the
    /// constant shift `c = 1`.
    pub fn restricted_ea(n: usize, m: u32) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::UnsupportedVariables(n));
        }
        let mut transforms = vec![
            AffineTransform::new(BinMatrix::elementary(n, 0, 1), 0, 0, m)?,
            AffineTransform::new(BinMatrix::cycle(n), 0, 0, m)?,
        ];
        for i in 0..n {
            transforms.push(AffineTransform::new(BinMatrix::identity(n), 1 << i, 0, m)?);
        }
        transforms.push(AffineTransform::new(BinMatrix::identity(n), 0, 1, m)?);
        Ok(GroupGenerators { n, m, transforms })
    }

    /// A custom generating set; all transforms must share one shape.
    pub fn from_transforms(transforms: Vec<AffineTransform>) -> Result<Self, Error> {
        let first = transforms.first().ok_or(Error::DimensionMismatch)?;
        let (n, m) = (first.n(), first.order_exponent());
        if transforms.iter().any(|t| t.n() != n) {
            return Err(Error::DimensionMismatch);
        }
        if let Some(t) = transforms.iter().find(|t| t.order_exponent() != m) {
            return Err(Error::OrderMismatch {
                lhs: m,
                rhs: t.order_exponent(),
            });
        }
        Ok(GroupGenerators { n, m, transforms })
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The modulus exponent `m`.
    pub fn order_exponent(&self) -> u32 {
        self.m
    }

    /// The generating transforms.
    pub fn transforms(&self) -> &[AffineTransform] {
        &self.transforms
    }

    /// Order of the full restricted extended-affine group,
    /// `|GL(n,2)| * 2^n * q`.
    pub fn full_group_order(&self) -> u128 {
        let mut gl: u128 = 1;
        let pow = 1u128 << self.n;
        for i in 0..self.n {
            gl *= pow - (1u128 << i);
        }
        gl * pow * (1u128 << self.m)
    }
}

/// One equivalence class: its lexicographically least member and its size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitReport {
    pub representative: GeneralizedBooleanFunction,
    pub size: u64,
}

/// Packs a value table into a `u64`, first point in the most significant
/// position so that key order is lexicographic table order.
fn pack(values: &[u8], m: u32) -> u64 {
    let mut key = 0u64;
    for &v in values {
        key = (key << m) | u64::from(v);
    }
    key
}

fn unpack(key: u64, l: usize, m: u32) -> Vec<u8> {
    let mask = (1u64 << m) - 1;
    (0..l)
        .map(|x| ((key >> ((l - 1 - x) as u32 * m)) & mask) as u8)
        .collect()
}

/// Point maps plus constant, the whole affine action precomputed per point.
struct PackedAction {
    source: Vec<u32>,
    constant: u8,
}

impl PackedAction {
    fn build(t: &AffineTransform) -> Self {
        let l = 1usize << t.n();
        let source = (0..l)
            .map(|x| t.matrix().apply_to_point(x as u32) ^ t.translation())
            .collect();
        PackedAction {
            source,
            constant: t.constant(),
        }
    }

    fn apply(&self, key: u64, m: u32) -> u64 {
        let l = self.source.len();
        let mask = (1u64 << m) - 1;
        let q = 1u64 << m;
        let mut out = 0u64;
        for (x, &src) in self.source.iter().enumerate() {
            let v = (key >> ((l - 1 - src as usize) as u32 * m)) & mask;
            let v = (v + u64::from(self.constant)) & (q - 1);
            out |= v << ((l - 1 - x) as u32 * m);
        }
        out
    }
}

fn check_packable(n: usize, m: u32) -> Result<(), Error> {
    if (1usize << n) * m as usize > 64 {
        return Err(Error::UnsupportedVariables(n));
    }
    Ok(())
}

/// Breadth-first closure of `{f}` under the generating transforms.
///
/// Each member arises from `f` by a chain of generator applications, so
/// when `f` is regular bent the whole orbit is.
pub fn orbit_of(
    f: &GeneralizedBooleanFunction,
    gens: &GroupGenerators,
) -> Result<BTreeSet<GeneralizedBooleanFunction>, Error> {
    if f.n() != gens.n {
        return Err(Error::DimensionMismatch);
    }
    if f.order_exponent() != gens.m {
        return Err(Error::OrderMismatch {
            lhs: f.order_exponent(),
            rhs: gens.m,
        });
    }
    check_packable(f.n(), gens.m)?;
    let actions: Vec<PackedAction> = gens.transforms.iter().map(PackedAction::build).collect();
    let start = pack(f.values(), gens.m);
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(key) = queue.pop_front() {
        for action in &actions {
            let next = action.apply(key, gens.m);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    let l = f.len();
    Ok(seen
        .into_iter()
        .map(|key| {
            GeneralizedBooleanFunction::from_values(gens.m, unpack(key, l, gens.m))
                .expect("orbit keys decode to valid tables")
        })
        .collect())
}

/// Stream of all quaternary regular bent functions on `n` in {2, 4}
/// variables: the compositions of every ordered pair of bent functions.
pub fn regular_quaternary(n: usize) -> Result<RegularQuaternary, Error> {
    let bents: Vec<BooleanFunction> = bent_functions(n)?.collect();
    Ok(RegularQuaternary { bents, i: 0, j: 0 })
}

/// Iterator yielded by [`regular_quaternary`].
pub struct RegularQuaternary {
    bents: Vec<BooleanFunction>,
    i: usize,
    j: usize,
}

impl Iterator for RegularQuaternary {
    type Item = GeneralizedBooleanFunction;

    fn next(&mut self) -> Option<GeneralizedBooleanFunction> {
        if self.i >= self.bents.len() {
            return None;
        }
        let system = DecompositionSystem::new(
            2,
            vec![self.bents[self.i].clone(), self.bents[self.j].clone()],
        )
        .expect("pairs always have the right shape");
        let f = compose(&system).expect("bent pairs compose at q = 4");
        self.j += 1;
        if self.j == self.bents.len() {
            self.j = 0;
            self.i += 1;
        }
        Some(f)
    }
}

/// Partitions all quaternary regular bent functions on `n` in {2, 4}
/// variables into orbits under the restricted extended-affine group.
/// Reports are sorted by size, then by representative table.
///
/// ```
/// let orbits = gbent_core::classify_quaternary(2)?;
/// let sizes: Vec<u64> = orbits.iter().map(|o| o.size).collect();
/// assert_eq!(sizes, [16, 48]);
/// assert_eq!(orbits[0].representative.compact_string(), "0002");
/// # Ok::<(), gbent_core::Error>(())
/// ```
pub fn classify_quaternary(n: usize) -> Result<Vec<OrbitReport>, Error> {
    if n != 2 && n != 4 {
        return Err(Error::UnsupportedVariables(n));
    }
    let m = 2u32;
    check_packable(n, m)?;
    let gens = GroupGenerators::restricted_ea(n, m)?;
    let actions: Vec<PackedAction> = gens.transforms.iter().map(PackedAction::build).collect();

    let mut keys: Vec<u64> = regular_quaternary(n)?
        .map(|f| pack(f.values(), m))
        .collect();
    keys.sort_unstable();
    debug_assert!(keys.windows(2).all(|w| w[0] < w[1]), "enumeration repeats");

    let l = 1usize << n;
    let mut visited = vec![false; keys.len()];
    let mut reports = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for seed in 0..keys.len() {
        if visited[seed] {
            continue;
        }
        // Seeds ascend and orbits are disjoint, so the seed is the least
        // member of its orbit.
        visited[seed] = true;
        queue.push_back(seed);
        let mut size = 0u64;
        while let Some(idx) = queue.pop_front() {
            size += 1;
            for action in &actions {
                let next = action.apply(keys[idx], m);
                let pos = keys
                    .binary_search(&next)
                    .expect("the action preserves regularity");
                if !visited[pos] {
                    visited[pos] = true;
                    queue.push_back(pos);
                }
            }
        }
        let representative = GeneralizedBooleanFunction::from_values(m, unpack(keys[seed], l, m))
            .expect("orbit keys decode to valid tables");
        reports.push(OrbitReport {
            representative,
            size,
        });
    }
    reports.sort_by(|a, b| {
        a.size
            .cmp(&b.size)
            .then_with(|| a.representative.cmp(&b.representative))
    });
    Ok(reports)
}

/// Exhaustively scans all `q^(2^n)` value tables and collects the regular
/// bent ones, in ascending table order. Guarded by [`SCAN_LIMIT`].
pub fn exhaustive_regular(n: usize, m: u32) -> Result<Vec<GeneralizedBooleanFunction>, Error> {
    if m == 0 || m > MAX_ORDER_EXP {
        return Err(Error::InvalidOrderExponent(m));
    }
    let l = 1usize << n;
    let bits = (l as u32) * m;
    let total = if bits < 128 { 1u128 << bits } else { u128::MAX };
    if total > SCAN_LIMIT {
        return Err(Error::ScanTooLarge {
            functions: total,
            limit: SCAN_LIMIT,
        });
    }
    let q = 1u8 << m;
    let mut values = vec![0u8; l];
    let mut found = Vec::new();
    loop {
        let f = GeneralizedBooleanFunction::from_values(m, values.clone())
            .expect("odometer stays in range");
        if f.regular_dual().is_some() {
            found.push(f);
        }
        // Ascending-lex odometer: bump the last position first.
        let mut pos = l;
        loop {
            if pos == 0 {
                return Ok(found);
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < q {
                break;
            }
            values[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(m: u32, s: &str) -> GeneralizedBooleanFunction {
        GeneralizedBooleanFunction::from_digits_str(m, s).unwrap()
    }

    /// Closure of the two matrix generators, counted over row-packed keys.
    fn matrix_group_size(n: usize) -> usize {
        let gens = [BinMatrix::elementary(n, 0, 1), BinMatrix::cycle(n)];
        let pack = |mat: &BinMatrix| -> u64 {
            (0..n).fold(0u64, |acc, i| (acc << n) | u64::from(mat.row(i)))
        };
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        let id = BinMatrix::identity(n);
        seen.insert(pack(&id));
        queue.push_back(id);
        while let Some(mat) = queue.pop_front() {
            for gen in &gens {
                let next = mat.multiply(gen).unwrap();
                if seen.insert(pack(&next)) {
                    queue.push_back(next);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn matrix_generators_cover_the_general_linear_groups() {
        assert_eq!(matrix_group_size(2), 6);
        assert_eq!(matrix_group_size(3), 168);
        assert_eq!(matrix_group_size(4), 20160);
    }

    #[test]
    fn full_group_orders() {
        assert_eq!(
            GroupGenerators::restricted_ea(2, 2)
                .unwrap()
                .full_group_order(),
            96
        );
        assert_eq!(
            GroupGenerators::restricted_ea(4, 2)
                .unwrap()
                .full_group_order(),
            1_290_240
        );
    }

    #[test]
    fn enumeration_counts_and_scan_cross_check() {
        let stream: Vec<_> = regular_quaternary(2).unwrap().collect();
        assert_eq!(stream.len(), 64);
        let as_set: BTreeSet<_> = stream.into_iter().collect();
        assert_eq!(as_set.len(), 64);
        // Brute force over all 256 tables finds exactly the same functions.
        let scanned = exhaustive_regular(2, 2).unwrap();
        assert_eq!(scanned.len(), 64);
        let scanned_set: BTreeSet<_> = scanned.into_iter().collect();
        assert_eq!(as_set, scanned_set);
    }

    #[test]
    fn orbit_sizes_at_n2() {
        let gens = GroupGenerators::restricted_ea(2, 2).unwrap();
        // The parity table f mod 2 is permuted and shifted by the action,
        // so "constant parity" is an orbit invariant. Exactly 16 regular
        // functions have constant parity ("2000" among them, with double
        // components), and the other 48 form the orbit of "2101".
        assert_eq!(orbit_of(&g(2, "2000"), &gens).unwrap().len(), 16);
        assert_eq!(orbit_of(&g(2, "2101"), &gens).unwrap().len(), 48);
    }

    #[test]
    fn orbits_are_closed_and_regular() {
        let gens = GroupGenerators::restricted_ea(2, 2).unwrap();
        let orbit = orbit_of(&g(2, "2000"), &gens).unwrap();
        for member in &orbit {
            assert!(member.regular_dual().is_some());
            assert!(
                member.values().iter().all(|&v| v % 2 == 0)
                    || member.values().iter().all(|&v| v % 2 == 1)
            );
        }
        // The orbit of any member is the same set.
        let other = orbit_of(orbit.iter().nth(5).unwrap(), &gens).unwrap();
        assert_eq!(orbit, other);
    }

    #[test]
    fn constant_shift_alone_cycles_through_four_functions() {
        let shift = AffineTransform::new(BinMatrix::identity(2), 0, 1, 2).unwrap();
        let gens = GroupGenerators::from_transforms(vec![shift]).unwrap();
        let orbit = orbit_of(&g(2, "2101"), &gens).unwrap();
        let tables: Vec<String> = orbit.iter().map(|f| f.compact_string()).collect();
        assert_eq!(tables, ["0323", "1030", "2101", "3212"]);
    }

    #[test]
    fn classify_two_variables() {
        let reports = classify_quaternary(2).unwrap();
        assert_eq!(reports.len(), 2);
        assert_eq!(reports[0].size, 16);
        assert_eq!(reports[0].representative, g(2, "0002"));
        assert_eq!(reports[1].size, 48);
        assert_eq!(reports[1].representative, g(2, "0013"));
        let total: u64 = reports.iter().map(|r| r.size).sum();
        assert_eq!(total, 64);
        // Lagrange: orbit sizes divide the group order.
        let order = GroupGenerators::restricted_ea(2, 2)
            .unwrap()
            .full_group_order();
        for r in &reports {
            assert_eq!(order % u128::from(r.size), 0);
        }
    }

    #[test]
    fn representatives_are_least_in_their_orbits() {
        let gens = GroupGenerators::restricted_ea(2, 2).unwrap();
        for report in classify_quaternary(2).unwrap() {
            let orbit = orbit_of(&report.representative, &gens).unwrap();
            assert_eq!(orbit.len() as u64, report.size);
            assert_eq!(orbit.iter().next().unwrap(), &report.representative);
        }
    }

    #[test]
    fn bit_order_convention_does_not_change_orbit_sizes() {
        // Re-indexing every table by the bit-reversal permutation is itself
        // an element of GL(n, 2), so orbit sizes must be unchanged.
        let reverse = AffineTransform::new(BinMatrix::cycle(2), 0, 0, 2).unwrap();
        let gens = GroupGenerators::restricted_ea(2, 2).unwrap();
        for table in ["2000", "2101"] {
            let f = g(2, table);
            let relabeled = f.apply_affine(&reverse).unwrap();
            assert_eq!(
                orbit_of(&f, &gens).unwrap().len(),
                orbit_of(&relabeled, &gens).unwrap().len()
            );
        }
    }

    #[test]
    fn odd_n_scan_is_empty_for_q4() {
        assert!(exhaustive_regular(1, 2).unwrap().is_empty());
    }

    #[test]
    fn odd_n_regular_functions_exist_once_sqrt2_is_in_the_ring() {
        // For q = 8 the ring contains sqrt(2) = w - w^3, so n = 1 admits
        // regular bent functions after all: exactly the pairs with
        // f(1) - f(0) = +-2, e.g. (0, 2) with spectrum (1+i, 1-i)
        // = sqrt(2) * (w, w^7). The even-n decomposition machinery does
        // not extend to them (their components are not bent).
        let found = exhaustive_regular(1, 3).unwrap();
        assert_eq!(found.len(), 16);
        for f in &found {
            let d = (8 + i16::from(f.value(1)) - i16::from(f.value(0))) % 8;
            assert!(d == 2 || d == 6);
        }
        let f = g(3, "02");
        assert!(found.contains(&f));
        assert_eq!(f.regular_dual().unwrap(), g(3, "17"));
    }

    #[test]
    fn scan_guard() {
        assert!(matches!(
            exhaustive_regular(3, 3),
            Err(Error::ScanTooLarge { .. })
        ));
        assert!(matches!(
            exhaustive_regular(20, 6),
            Err(Error::ScanTooLarge { .. })
        ));
    }

    #[test]
    fn classify_rejects_other_sizes() {
        assert_eq!(
            classify_quaternary(3).err(),
            Some(Error::UnsupportedVariables(3))
        );
    }

    #[test]
    fn orbit_of_validates_shapes() {
        let gens = GroupGenerators::restricted_ea(2, 2).unwrap();
        assert_eq!(
            orbit_of(&g(2, "21012101"), &gens).err(),
            Some(Error::DimensionMismatch)
        );
        assert_eq!(
            orbit_of(&g(3, "2101"), &gens).err(),
            Some(Error::OrderMismatch { lhs: 3, rhs: 2 })
        );
    }
}
