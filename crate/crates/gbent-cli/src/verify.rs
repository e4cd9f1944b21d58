//! The built-in verification suite: ten checks covering enumeration counts,
//! classification, decomposition round trips, duality, and the algebraic
//! ground rules the library stands on. Each check recomputes its facts from
//! scratch through the public library API.

use std::collections::BTreeSet;
use std::time::Instant;

use gbent_core::{
    bent_functions, check_self_dual_decomposition, classify_quaternary, compose, decompose,
    dual_after_affine, exhaustive_regular, orbit_of, regular_quaternary, wht_in_place,
    AffineTransform, BinMatrix, BooleanFunction, CyclotomicInteger, DecompositionSystem,
    GeneralizedBooleanFunction, GroupGenerators,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Result of one verification check. The timing fields stay out of the
/// JSON form so that machine output is byte-stable across runs.
#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed_ms: u128,
    #[serde(skip)]
    pub budget_ms: Option<u64>,
}

impl Outcome {
    /// One-line summary, the format the `verify` subcommand prints.
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!(
            "[{status}] criterion {:2}: {} ({:.2}s) - {}",
            self.id,
            self.name,
            self.elapsed_ms as f64 / 1000.0,
            self.detail
        )
    }
}

type Check = fn() -> (bool, String);

const CRITERIA: [(u32, &str, Option<u64>, Check); 10] = [
    (1, "bent function counts", Some(5_000), check_bent_counts),
    (
        2,
        "quaternary regular totals",
        Some(60_000),
        check_quaternary_totals,
    ),
    (
        3,
        "two-variable classification",
        Some(1_000),
        check_classification_two,
    ),
    (
        4,
        "four-variable classification",
        Some(600_000),
        check_classification_four,
    ),
    (
        5,
        "representative orbit membership",
        None,
        check_representatives,
    ),
    (
        6,
        "odd-variable exhaustive scans",
        Some(30_000),
        check_odd_scans,
    ),
    (
        7,
        "decomposition round trips",
        Some(120_000),
        check_round_trips,
    ),
    (
        8,
        "octal cross-route agreement",
        None,
        check_octal_cross_route,
    ),
    (9, "self-dual correspondence", Some(5_000), check_self_dual),
    (
        10,
        "algebraic property suites",
        Some(60_000),
        check_property_suites,
    ),
];

/// Runs one check by id (1 through 10).
pub fn criterion(id: u32) -> Option<Outcome> {
    let &(id, name, budget_ms, check) = CRITERIA.iter().find(|entry| entry.0 == id)?;
    let start = Instant::now();
    let (ok, mut detail) = check();
    let elapsed_ms = start.elapsed().as_millis();
    let within = budget_ms.is_none_or(|b| elapsed_ms <= u128::from(b));
    if !within {
        detail.push_str(&format!(
            " [took {elapsed_ms} ms, budget {} ms]",
            budget_ms.unwrap_or(0)
        ));
    }
    Some(Outcome {
        id,
        name,
        passed: ok && within,
        detail,
        elapsed_ms,
        budget_ms,
    })
}

/// Runs the whole suite in order.
pub fn run_all() -> Vec<Outcome> {
    (1..=CRITERIA.len() as u32)
        .map(|id| criterion(id).expect("all ids are registered"))
        .collect()
}

fn check_bent_counts() -> (bool, String) {
    let two = bent_functions(2).expect("n=2 is supported").count();
    let four = bent_functions(4).expect("n=4 is supported").count();
    (
        two == 8 && four == 896,
        format!("n=2: {two} (want 8), n=4: {four} (want 896)"),
    )
}

fn check_quaternary_totals() -> (bool, String) {
    let two = regular_quaternary(2).expect("n=2 is supported").count();
    let four = regular_quaternary(4).expect("n=4 is supported").count();
    (
        two == 64 && four == 802_816,
        format!("n=2: {two} (want 64), n=4: {four} (want 802816)"),
    )
}

fn check_classification_two() -> (bool, String) {
    let orbits = classify_quaternary(2).expect("n=2 is supported");
    let sizes: Vec<u64> = orbits.iter().map(|o| o.size).collect();
    let total: u64 = sizes.iter().sum();
    (
        sizes == [16, 48] && total == 64,
        format!("orbit sizes {sizes:?} (want [16, 48]), total {total} (want 64)"),
    )
}

fn check_classification_four() -> (bool, String) {
    let orbits = classify_quaternary(4).expect("n=4 is supported");
    let sizes: Vec<u64> = orbits.iter().map(|o| o.size).collect();
    let total: u64 = sizes.iter().sum();
    let expected = [1_792, 26_880, 26_880, 80_640, 129_024, 215_040, 322_560];
    (
        sizes == expected && total == 802_816,
        format!("orbit sizes {sizes:?}, total {total} (want {expected:?} summing to 802816)"),
    )
}

/// Reference representatives for the classification, with the published
/// orbit size of each four-variable row.
const TWO_VAR_REPRESENTATIVES: [&str; 2] = ["2101", "2000"];
const FOUR_VAR_ROWS: [(&str, u64); 7] = [
    ("2000202220000200", 1_792),
    ("3100312231111311", 80_640),
    ("2101202230010211", 129_024),
    ("3001202231000301", 215_040),
    ("3100303221011300", 322_560),
    ("2101212321010301", 26_880),
    ("2011202220000211", 26_880),
];

fn check_representatives() -> (bool, String) {
    let mut problems = Vec::new();
    for table in TWO_VAR_REPRESENTATIVES {
        let f =
            GeneralizedBooleanFunction::from_digits_str(2, table).expect("reference tables parse");
        if f.regular_dual().is_none() {
            problems.push(format!("{table} is not regular bent"));
        }
    }
    let gens = GroupGenerators::restricted_ea(4, 2).expect("n=4 generators");
    let mut least_members = BTreeSet::new();
    for (table, want) in FOUR_VAR_ROWS {
        let f =
            GeneralizedBooleanFunction::from_digits_str(2, table).expect("reference tables parse");
        if f.regular_dual().is_none() {
            problems.push(format!("{table} is not regular bent"));
            continue;
        }
        let orbit = orbit_of(&f, &gens).expect("shapes match the generators");
        if orbit.len() as u64 != want {
            problems.push(format!("{table}: orbit size {} (want {want})", orbit.len()));
        }
        let least = orbit
            .iter()
            .next()
            .expect("orbits are nonempty")
            .compact_string();
        if !least_members.insert(least) {
            problems.push(format!("{table} repeats an earlier orbit"));
        }
    }
    if problems.is_empty() {
        (
            true,
            "9 representatives regular bent; four-variable rows give 7 distinct orbits \
             with matching sizes"
                .to_string(),
        )
    } else {
        (false, problems.join("; "))
    }
}

fn check_odd_scans() -> (bool, String) {
    let mut parts = Vec::new();
    let mut all_empty = true;
    for (n, m) in [(1usize, 2u32), (1, 3), (3, 2)] {
        let found = exhaustive_regular(n, m)
            .expect("scan sizes are within the guard")
            .len();
        all_empty &= found == 0;
        parts.push(format!("(n={n}, q={}): {found}", 1u32 << m));
    }
    (
        all_empty,
        format!(
            "regular functions found {}; expected zero at each",
            parts.join(", ")
        ),
    )
}

fn check_round_trips() -> (bool, String) {
    // Every two-variable quaternary regular function survives a round trip.
    for f in regular_quaternary(2).expect("n=2 is supported") {
        let system = decompose(&f).expect("regular functions decompose");
        if compose(&system).expect("decompositions recompose") != f {
            return (false, format!("round trip failed at q=4 table {f}"));
        }
    }

    // 1000 uniformly sampled four-variable functions (the composition map
    // is a bijection from ordered bent pairs, so sampling pairs is uniform).
    let bents: Vec<BooleanFunction> = bent_functions(4).expect("n=4 is supported").collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0067_6265_6e74);
    for _ in 0..1000 {
        let i = rng.gen_range(0..bents.len());
        let j = rng.gen_range(0..bents.len());
        let system = DecompositionSystem::new(2, vec![bents[i].clone(), bents[j].clone()])
            .expect("pairs have matching shapes");
        let f = compose(&system).expect("bent pairs compose at q=4");
        let back = decompose(&f).expect("the composition is regular");
        if back.components() != system.components() || compose(&back).unwrap() != f {
            return (false, format!("sampled n=4 round trip failed at {f}"));
        }
    }

    // Everything the octal scan finds survives a round trip.
    let octal = exhaustive_regular(2, 3).expect("within the scan guard");
    let octal_found = octal.len();
    for f in &octal {
        let system = decompose(f).expect("regular functions decompose");
        if compose(&system).expect("decompositions recompose") != *f {
            return (false, format!("round trip failed at q=8 table {f}"));
        }
    }

    // The reverse direction: systems survive compose-then-decompose, for
    // all ordered pairs at m=2 and all valid quadruples at m=3.
    let small: Vec<BooleanFunction> = bent_functions(2).expect("n=2 is supported").collect();
    for g0 in &small {
        for g1 in &small {
            let system = DecompositionSystem::new(2, vec![g0.clone(), g1.clone()])
                .expect("pairs have matching shapes");
            let f = compose(&system).expect("bent pairs compose at q=4");
            let back = decompose(&f).expect("the composition is regular");
            if back.components() != system.components() {
                return (false, format!("pair inversion failed at {f}"));
            }
        }
    }
    let mut valid_quadruples = 0usize;
    for g0 in &small {
        for g1 in &small {
            for g2 in &small {
                for g3 in &small {
                    let system = DecompositionSystem::new(
                        3,
                        vec![g0.clone(), g1.clone(), g2.clone(), g3.clone()],
                    )
                    .expect("quadruples have matching shapes");
                    let Ok(f) = compose(&system) else { continue };
                    valid_quadruples += 1;
                    let back = decompose(&f).expect("the composition is regular");
                    if back.components() != system.components() {
                        return (false, format!("quadruple inversion failed at {f}"));
                    }
                }
            }
        }
    }
    (
        true,
        format!(
            "64 + 1000 + {octal_found} functions round trip; 64 pairs and \
             {valid_quadruples} of 4096 quadruples invert"
        ),
    )
}

fn check_octal_cross_route() -> (bool, String) {
    let scanned: BTreeSet<GeneralizedBooleanFunction> = exhaustive_regular(2, 3)
        .expect("within the scan guard")
        .into_iter()
        .collect();
    let small: Vec<BooleanFunction> = bent_functions(2).expect("n=2 is supported").collect();
    let mut composed = BTreeSet::new();
    for g0 in &small {
        for g1 in &small {
            for g2 in &small {
                for g3 in &small {
                    let system = DecompositionSystem::new(
                        3,
                        vec![g0.clone(), g1.clone(), g2.clone(), g3.clone()],
                    )
                    .expect("quadruples have matching shapes");
                    if let Ok(f) = compose(&system) {
                        composed.insert(f);
                    }
                }
            }
        }
    }
    let agree = scanned == composed;
    (
        agree,
        format!(
            "exhaustive scan finds {}, composition route finds {}; sets {}",
            scanned.len(),
            composed.len(),
            if agree { "identical" } else { "DIFFER" }
        ),
    )
}

fn check_self_dual() -> (bool, String) {
    // Exhaustive forward direction over all 256 quaternary tables on n=2.
    let mut self_duals = Vec::new();
    let mut values = vec![0u8; 4];
    'odometer: loop {
        let f = GeneralizedBooleanFunction::from_values(2, values.clone())
            .expect("odometer stays in range");
        if f.is_self_dual() {
            self_duals.push(f);
        }
        let mut pos = values.len();
        loop {
            if pos == 0 {
                break 'odometer;
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < 4 {
                continue 'odometer;
            }
            values[pos] = 0;
        }
    }
    for f in &self_duals {
        if check_self_dual_decomposition(f) != Ok(true) {
            return (false, format!("{f} does not split into self-dual parts"));
        }
        let system = decompose(f).expect("self-dual functions are regular");
        if !system
            .components()
            .iter()
            .all(BooleanFunction::is_self_dual)
        {
            return (false, format!("{f} has a non-self-dual component"));
        }
    }

    // Converse: every ordered pair of self-dual bent functions composes to
    // a self-dual function.
    let sd_bents: Vec<BooleanFunction> = bent_functions(2)
        .expect("n=2 is supported")
        .filter(BooleanFunction::is_self_dual)
        .collect();
    let mut composed = 0usize;
    for g0 in &sd_bents {
        for g1 in &sd_bents {
            let system = DecompositionSystem::new(2, vec![g0.clone(), g1.clone()])
                .expect("pairs have matching shapes");
            let f = compose(&system).expect("bent pairs compose at q=4");
            if !f.is_self_dual() {
                return (false, format!("pair composition {f} is not self-dual"));
            }
            composed += 1;
        }
    }
    let square = sd_bents.len() * sd_bents.len();
    (
        self_duals.len() == square && composed == square,
        format!(
            "{} self-dual functions found exhaustively, all with self-dual parts; \
             {composed} pair compositions self-dual (want {square} each)",
            self_duals.len()
        ),
    )
}

/// Numerical embedding sending `w` to `exp(pi*i/k)`, for the 1e-9 check.
fn embed(z: &CyclotomicInteger) -> (f64, f64) {
    let k = z.degree() as f64;
    let mut re = 0.0;
    let mut im = 0.0;
    for (i, &c) in z.coeffs().iter().enumerate() {
        let theta = std::f64::consts::PI * (i as f64) / k;
        re += c as f64 * theta.cos();
        im += c as f64 * theta.sin();
    }
    (re, im)
}

fn embeds_close(a: (f64, f64), b: (f64, f64)) -> bool {
    let scale = 1.0 + a.0.abs() + a.1.abs() + b.0.abs() + b.1.abs();
    (a.0 - b.0).abs() <= 1e-9 * scale && (a.1 - b.1).abs() <= 1e-9 * scale
}

fn random_ring_element(rng: &mut ChaCha8Rng, m: u32) -> CyclotomicInteger {
    let coeffs: Vec<i64> = (0..1usize << (m - 1))
        .map(|_| rng.gen_range(-1024i64..=1024))
        .collect();
    CyclotomicInteger::new(m, coeffs).expect("coefficient length matches m")
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> BinMatrix {
    loop {
        let rows: Vec<u32> = (0..n).map(|_| rng.gen_range(0..1u32 << n)).collect();
        if let Ok(mat) = BinMatrix::from_rows(rows) {
            if mat.is_invertible() {
                return mat;
            }
        }
    }
}

fn check_property_suites() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x57414c5348);

    // Binary transform: involution and Parseval on 1000 vectors per size.
    for n in [2usize, 4, 8] {
        let l = 1usize << n;
        for _ in 0..1000 {
            let values: Vec<i64> = (0..l).map(|_| rng.gen_range(-50i64..=50)).collect();
            let mut spectrum = values.clone();
            wht_in_place(&mut spectrum).expect("power-of-two length");
            let energy: i64 = values.iter().map(|v| v * v).sum();
            let spread: i64 = spectrum.iter().map(|w| w * w).sum();
            if spread != energy * l as i64 {
                return (false, format!("Parseval failed at n={n}"));
            }
            wht_in_place(&mut spectrum).expect("power-of-two length");
            if spectrum
                .iter()
                .zip(&values)
                .any(|(a, v)| *a != v * l as i64)
            {
                return (false, format!("involution failed at n={n}"));
            }
        }
    }

    // Generalized transform: Parseval in the ring on 1000 functions per size.
    for n in [2usize, 4, 8] {
        let l = 1usize << n;
        for trial in 0..1000u32 {
            let m = trial % 4 + 1;
            let values: Vec<u8> = (0..l).map(|_| rng.gen_range(0..1u8 << m)).collect();
            let f = GeneralizedBooleanFunction::from_values(m, values)
                .expect("values stay below the modulus");
            let mut total = CyclotomicInteger::zero(m).expect("valid order");
            for z in f.gwht().values() {
                total = total
                    .checked_add(&z.norm_sq())
                    .expect("norms stay in range");
            }
            let expected = CyclotomicInteger::from_int(m, 1i64 << (2 * n)).expect("valid order");
            if total != expected {
                return (
                    false,
                    format!("generalized Parseval failed at n={n}, m={m}"),
                );
            }
        }
    }

    // Ring axioms, conjugation, and the numerical embedding, 1000 triples
    // per order.
    for m in 1..=4u32 {
        for _ in 0..1000 {
            let a = random_ring_element(&mut rng, m);
            let b = random_ring_element(&mut rng, m);
            let c = random_ring_element(&mut rng, m);
            let ab = a.checked_mul(&b).expect("products stay in range");
            let ok = ab == b.checked_mul(&a).unwrap()
                && ab.checked_mul(&c).unwrap()
                    == a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap()
                && a.checked_mul(&b.checked_add(&c).unwrap()).unwrap()
                    == ab.checked_add(&a.checked_mul(&c).unwrap()).unwrap()
                && ab.conj() == a.conj().checked_mul(&b.conj()).unwrap()
                && a.checked_add(&b).unwrap().conj() == a.conj().checked_add(&b.conj()).unwrap()
                && a.conj().conj() == a
                && ab.norm_sq() == a.norm_sq().checked_mul(&b.norm_sq()).unwrap();
            if !ok {
                return (false, format!("ring axiom failed at m={m}"));
            }
            let (ar, ai) = embed(&a);
            let (br, bi) = embed(&b);
            let close = embeds_close(embed(&ab), (ar * br - ai * bi, ar * bi + ai * br))
                && embeds_close(embed(&a.conj()), (ar, -ai))
                && embeds_close(embed(&a.norm_sq()), (ar * ar + ai * ai, 0.0));
            if !close {
                return (false, format!("embedding disagreement at m={m}"));
            }
        }
    }

    // Duality under the group action: predicted dual equals the dual of the
    // transformed function, on 100 random transforms per modulus.
    let quaternary: Vec<GeneralizedBooleanFunction> =
        regular_quaternary(2).expect("n=2 is supported").collect();
    let octal = exhaustive_regular(2, 3).expect("within the scan guard");
    for (m, pool) in [(2u32, &quaternary), (3u32, &octal)] {
        for _ in 0..100 {
            let t = AffineTransform::new(
                random_invertible(&mut rng, 2),
                rng.gen_range(0..4),
                rng.gen_range(0..1u8 << m),
                m,
            )
            .expect("components are in range");
            let f = &pool[rng.gen_range(0..pool.len())];
            let moved = f.apply_affine(&t).expect("shapes match");
            let direct = moved
                .regular_dual()
                .expect("the action preserves regularity");
            let predicted = dual_after_affine(&f.regular_dual().expect("pool is regular"), &t)
                .expect("shapes match");
            if direct != predicted {
                return (false, format!("dual formula failed at q={}", 1 << m));
            }
        }
    }

    (
        true,
        "binary and generalized transform invariants, ring axioms, numerical embedding, \
         and the affine dual formula all hold"
            .to_string(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcome_lines_are_single_lines() {
        let outcome = criterion(1).unwrap();
        assert!(outcome.passed);
        assert_eq!(outcome.line().lines().count(), 1);
        assert!(outcome.line().starts_with("[PASS] criterion  1"));
    }

    #[test]
    fn unknown_ids_are_rejected() {
        assert!(criterion(0).is_none());
        assert!(criterion(11).is_none());
    }
}
