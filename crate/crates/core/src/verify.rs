//! Cross-checks between the closed forms and the brute-force oracles.
//!
//! [`run`] evaluates every identity up to the requested sizes and returns one
//! [`CheckOutcome`] per (identity, n). Nothing short-circuits, so the caller
//! sees every failure, not only the first.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::action::{
    conjugate_idempotent, conjugator, enumerate_permutations, same_orbit, BruteForce, Permutation,
};
use crate::combinatorics::{
    enumerate_partitions, enumerate_type_vectors, factorial, p_pentagonal, BigNat,
};
use crate::formula::{
    count_idempotents_of_type, cumulative_identity, p_via_formula_with, summand, summand_fused,
};
use crate::monoid::{
    assemble_idempotent, decompose_idempotent, enumerate_idempotents,
    enumerate_idempotents_bruteforce, is_idempotent, type_vector_of, Idempotent,
};
use crate::representation::{conjugate_rep, rep_from_idempotent};
use crate::stabilizer::{
    eta_classes, gamma_hom, gu_enumerate, gu_identity, gu_inverse, gu_multiply,
    stabilizer_order_formula, stabilizer_order_from_classes, FiberClass, GUElement,
};

/// Largest `n` for the exhaustive checks (the Burnside oracle enumerates `S_n`).
pub const EXHAUSTIVE_MAX: usize = 6;

/// Group orders up to which associativity is checked on every triple.
const EXHAUSTIVE_ASSOCIATIVITY_ORDER: usize = 500;
const RANDOM_TRIPLES: usize = 1000;
const RANDOM_GAMMA_PAIRS: usize = 200;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub exhaustive: usize,
    pub formula: usize,
    pub parallel: bool,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive: 5,
            formula: 50,
            parallel: false,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub n: usize,
    pub passed: bool,
    pub detail: String,
}

struct Recorder {
    outcomes: Vec<CheckOutcome>,
}

impl Recorder {
    fn check(&mut self, name: &'static str, n: usize, result: std::result::Result<String, String>) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.outcomes.push(CheckOutcome {
            name,
            n,
            passed,
            detail,
        });
    }
}

fn expect_eq<T: PartialEq + std::fmt::Display>(
    what: &str,
    got: T,
    want: T,
) -> std::result::Result<String, String> {
    if got == want {
        Ok(format!("{what} = {got}"))
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

/// Runs every cross-check. `exhaustive` must not exceed the brute-force limit
/// of `brute`.
pub fn run(cfg: &VerifyConfig, brute: BruteForce) -> crate::Result<Vec<CheckOutcome>> {
    if cfg.exhaustive > brute.max_n() {
        return Err(crate::Error::TooLarge {
            what: "exhaustive verification",
            n: cfg.exhaustive,
            max: brute.max_n(),
        });
    }
    let brute = brute.parallel(cfg.parallel);
    let mut rec = Recorder {
        outcomes: Vec::new(),
    };
    let mut rng = StdRng::seed_from_u64(cfg.seed);

    for n in 1..=cfg.formula {
        let p = p_pentagonal(n);
        let by_formula = p_via_formula_with(n, cfg.parallel).map_err(|e| e.to_string());
        rec.check(
            "formula-vs-pentagonal",
            n,
            by_formula.and_then(|v| expect_eq("p(n)", v, p.clone())),
        );
        if n <= 25 {
            rec.check(
                "pentagonal-vs-partitions",
                n,
                expect_eq("p(n)", p, BigNat::from(enumerate_partitions(n).len())),
            );
        }
        if n <= 12 {
            let mismatch = enumerate_type_vectors(n)
                .into_iter()
                .find(|g| summand(n, g).ok() != summand_fused(n, g).ok());
            rec.check(
                "summand-decomposition",
                n,
                match mismatch {
                    None => Ok("factored and fused summands agree".into()),
                    Some(g) => Err(format!("summands differ at g = {g}")),
                },
            );
        }
    }
    for m in 1..=cfg.formula.min(12) {
        let (lhs, rhs) = cumulative_identity(m);
        rec.check("cumulative-identity", m, expect_eq("Σ n!·p(n)", rhs, lhs));
    }

    for n in 1..=cfg.exhaustive {
        check_exhaustive(&mut rec, n, brute, &mut rng);
    }
    Ok(rec.outcomes)
}

fn check_exhaustive(rec: &mut Recorder, n: usize, brute: BruteForce, rng: &mut StdRng) {
    let idempotents = enumerate_idempotents(n);
    let n_fact = factorial(n as u64);

    rec.check(
        "burnside",
        n,
        brute
            .count_orbits(n)
            .map_err(|e| e.to_string())
            .and_then(|v| expect_eq("orbit count", v, p_pentagonal(n))),
    );

    let oracle: BTreeSet<_> = enumerate_idempotents_bruteforce(n)
        .map(|v| v.into_iter().collect())
        .unwrap_or_default();
    let built: BTreeSet<_> = idempotents.iter().cloned().collect();
    rec.check(
        "constructive-vs-bruteforce",
        n,
        if built == oracle && built.len() == idempotents.len() {
            Ok(format!("{} idempotents", built.len()))
        } else {
            Err("constructive and brute-force enumerations differ".into())
        },
    );

    let round_trip = idempotents.iter().all(|f| {
        let (image, retraction) = decompose_idempotent(f);
        is_idempotent(f.map()) && assemble_idempotent(n, &image, &retraction).as_ref() == Ok(f)
    });
    rec.check(
        "decompose-assemble",
        n,
        round_trip
            .then(|| "round trip holds".to_string())
            .ok_or_else(|| "round trip failed".to_string()),
    );

    let mut tally: BTreeMap<_, u64> = BTreeMap::new();
    for f in &idempotents {
        *tally.entry(type_vector_of(f)).or_default() += 1;
    }
    let per_type = enumerate_type_vectors(n).into_iter().try_for_each(|g| {
        let closed = count_idempotents_of_type(n, &g).map_err(|e| e.to_string())?;
        let counted = BigNat::from(tally.get(&g).copied().unwrap_or(0));
        if closed == counted {
            Ok(())
        } else {
            Err(format!("type {g}: formula {closed}, tally {counted}"))
        }
    });
    rec.check(
        "per-type-count",
        n,
        per_type.map(|_| format!("{} types", tally.len())),
    );

    let mut stab_result = Ok(());
    let mut orbit_stab = Ok(());
    for f in &idempotents {
        let brute_stab = match brute.stabilizer(f) {
            Ok(s) => s,
            Err(e) => {
                stab_result = Err(e.to_string());
                break;
            }
        };
        let order = BigNat::from(brute_stab.len());
        let g = type_vector_of(f);
        if stabilizer_order_formula(&g) != order || stabilizer_order_from_classes(f) != order {
            stab_result = Err(format!("f = {f}: |stab| = {order}"));
            break;
        }
        if n <= 5 {
            let orbit = brute.orbit_of(f).map(|o| o.len()).unwrap_or(0);
            if BigNat::from(orbit) * &order != n_fact {
                orbit_stab = Err(format!("f = {f}: orbit {orbit} x stab {order}"));
            }
        }
    }
    rec.check(
        "stabilizer-order",
        n,
        stab_result.map(|_| "formula matches brute force".into()),
    );
    if n <= 5 {
        rec.check(
            "orbit-stabilizer",
            n,
            orbit_stab.map(|_| "orbit x stab = n!".into()),
        );
        rec.check(
            "orbit-characterization",
            n,
            check_orbits(&idempotents, brute),
        );
    }
    if n <= 4 {
        rec.check(
            "representation-equivariance",
            n,
            check_equivariance(n, &idempotents),
        );
        rec.check(
            "gamma-homomorphism",
            n,
            check_gamma_exhaustive(&idempotents, brute),
        );
    } else if n == 5 {
        rec.check(
            "gamma-homomorphism",
            n,
            check_gamma_random(&idempotents, brute, rng),
        );
    }
    let shapes: BTreeSet<(usize, usize)> = idempotents
        .iter()
        .flat_map(eta_classes)
        .map(|c| (c.fiber_size(), c.members().len()))
        .collect();
    let group_result = shapes.iter().try_for_each(|&(k, m)| {
        let class = canonical_class(k, m);
        check_group_axioms(&class, rng).map_err(|e| format!("k={k}, |U|={m}: {e}"))
    });
    rec.check(
        "gu-group-axioms",
        n,
        group_result.map(|_| format!("{} class shapes", shapes.len())),
    );
}

fn check_orbits(
    idempotents: &[Idempotent],
    brute: BruteForce,
) -> std::result::Result<String, String> {
    let mut orbits = BTreeSet::new();
    for f in idempotents {
        let orbit = brute.orbit_of(f).map_err(|e| e.to_string())?;
        for g in idempotents {
            let predicted = same_orbit(f, g).map_err(|e| e.to_string())?;
            if predicted != orbit.contains(g) {
                return Err(format!("same_orbit({f}, {g}) = {predicted}"));
            }
            if predicted {
                let s = conjugator(f, g).map_err(|e| e.to_string())?;
                if conjugate_idempotent(f, &s).as_ref() != Ok(g) {
                    return Err(format!("conjugator({f}, {g}) = {s} is wrong"));
                }
            }
        }
        orbits.insert(orbit);
    }
    let n = idempotents.first().map(Idempotent::n).unwrap_or(0);
    expect_eq("orbit count", BigNat::from(orbits.len()), p_pentagonal(n))
}

fn check_equivariance(n: usize, idempotents: &[Idempotent]) -> std::result::Result<String, String> {
    let perms = enumerate_permutations(n).map_err(|e| e.to_string())?;
    for f in idempotents {
        let rho = rep_from_idempotent(f.map()).map_err(|e| e.to_string())?;
        for s in &perms {
            let left = conjugate_rep(&rho, s).map_err(|e| e.to_string())?;
            let right = conjugate_idempotent(f, s).map_err(|e| e.to_string())?;
            if left.action_of_b() != &right {
                return Err(format!("f = {f}, σ = {s}"));
            }
        }
    }
    Ok(format!(
        "{} idempotents x {} permutations",
        idempotents.len(),
        perms.len()
    ))
}

fn gamma_laws(
    f: &Idempotent,
    class: &FiberClass,
    s: &Permutation,
    t: &Permutation,
) -> std::result::Result<(), String> {
    let err = |e: crate::Error| e.to_string();
    let gs = gamma_hom(s, f, class).map_err(err)?;
    let gt = gamma_hom(t, f, class).map_err(err)?;
    let gts = gamma_hom(&t.compose(s).map_err(err)?, f, class).map_err(err)?;
    if gu_multiply(&gt, &gs).map_err(err)? != gts {
        return Err(format!("γ(τσ) ≠ γ(τ)γ(σ) for f = {f}, σ = {s}, τ = {t}"));
    }
    if gamma_hom(&s.inverse(), f, class).map_err(err)? != gu_inverse(&gs) {
        return Err(format!("γ(σ⁻¹) ≠ γ(σ)⁻¹ for f = {f}, σ = {s}"));
    }
    Ok(())
}

fn check_gamma_exhaustive(
    idempotents: &[Idempotent],
    brute: BruteForce,
) -> std::result::Result<String, String> {
    let mut pairs = 0usize;
    for f in idempotents {
        let stab = brute.stabilizer(f).map_err(|e| e.to_string())?;
        for class in eta_classes(f) {
            let id = Permutation::identity(f.n());
            if gamma_hom(&id, f, &class).map_err(|e| e.to_string())? != gu_identity(&class) {
                return Err(format!("γ(id) is not the identity for f = {f}"));
            }
            let mut image = BTreeSet::new();
            for s in &stab {
                image.insert(gamma_hom(s, f, &class).map_err(|e| e.to_string())?);
                for t in &stab {
                    gamma_laws(f, &class, s, t)?;
                    pairs += 1;
                }
            }
            if BigNat::from(image.len()) != class.group_order() {
                return Err(format!("γ is not onto G_U for f = {f}"));
            }
        }
    }
    Ok(format!("{pairs} stabilizer pairs"))
}

fn check_gamma_random(
    idempotents: &[Idempotent],
    brute: BruteForce,
    rng: &mut StdRng,
) -> std::result::Result<String, String> {
    let with_stab: Vec<_> = idempotents
        .iter()
        .map(|f| brute.stabilizer(f).map(|s| (f, s)))
        .collect::<crate::Result<_>>()
        .map_err(|e| e.to_string())?;
    for _ in 0..RANDOM_GAMMA_PAIRS {
        let (f, stab) = &with_stab[rng.gen_range(0..with_stab.len())];
        let s = &stab[rng.gen_range(0..stab.len())];
        let t = &stab[rng.gen_range(0..stab.len())];
        for class in eta_classes(f) {
            gamma_laws(f, &class, s, t)?;
        }
    }
    Ok(format!("{RANDOM_GAMMA_PAIRS} random pairs"))
}

/// The class of `m` consecutive fibers of size `k` on `[k·m]`.
pub fn canonical_class(k: usize, m: usize) -> FiberClass {
    let values: Vec<usize> = (0..m * k).map(|i| (i / k) * k + 1).collect();
    let f = Idempotent::from_values(values).expect("fiber-block map is idempotent");
    eta_classes(&f).remove(0)
}

/// Identity and inverse laws on every element; associativity on every triple
/// for small groups, on random triples otherwise.
pub fn check_group_axioms(class: &FiberClass, rng: &mut StdRng) -> std::result::Result<(), String> {
    let elems = gu_enumerate(class).map_err(|e| e.to_string())?;
    let e = gu_identity(class);
    let mul = |a: &GUElement, b: &GUElement| gu_multiply(a, b).map_err(|e| e.to_string());
    for z in &elems {
        if mul(&e, z)? != *z || mul(z, &e)? != *z {
            return Err("identity law".into());
        }
        let zi = gu_inverse(z);
        if mul(z, &zi)? != e || mul(&zi, z)? != e {
            return Err("inverse law".into());
        }
    }
    if elems.len() <= EXHAUSTIVE_ASSOCIATIVITY_ORDER {
        let index: HashMap<&GUElement, usize> =
            elems.iter().enumerate().map(|(i, z)| (z, i)).collect();
        let mut table = vec![0usize; elems.len() * elems.len()];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let ab = mul(a, b)?;
                table[i * elems.len() + j] = *index.get(&ab).ok_or("product left the group")?;
            }
        }
        let len = elems.len();
        for a in 0..len {
            for b in 0..len {
                let ab = table[a * len + b];
                for c in 0..len {
                    if table[ab * len + c] != table[a * len + table[b * len + c]] {
                        return Err("associativity".into());
                    }
                }
            }
        }
    } else {
        for _ in 0..RANDOM_TRIPLES {
            let a = &elems[rng.gen_range(0..elems.len())];
            let b = &elems[rng.gen_range(0..elems.len())];
            let c = &elems[rng.gen_range(0..elems.len())];
            if mul(&mul(a, b)?, c)? != mul(a, &mul(b, c)?)? {
                return Err("associativity".into());
            }
        }
    }
    Ok(())
}
