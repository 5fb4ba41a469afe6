//! Exact computation of partition numbers through the conjugation action of
//! the symmetric group on idempotent self-maps of a finite set.
//!
//! Idempotents on `[n]` up to conjugation correspond to partitions of `n`
//! (fiber sizes), so Burnside's lemma expresses `n! · p(n)` as a sum of
//! stabilizer orders. The crate provides both the brute-force side of that
//! statement (enumerate maps, permutations and stabilizers) and the closed
//! form summed over type vectors, together with checks relating them.
//!
//! Modules:
//! - [`combinatorics`]: big integers, factorials, binomials, partitions,
//!   type vectors, and p(n) from the pentagonal recurrence.
//! - [`monoid`]: self-maps, idempotents and their enumeration.
//! - [`representation`]: representations of the monoid `{e, b}`, `b² = b`.
//! - [`action`]: permutations, conjugation, orbits, stabilizers, Burnside.
//! - [`stabilizer`]: fiber-size classes, the groups `G_U`, and stabilizer orders.
//! - [`formula`]: per-type idempotent counts and the formula for p(n).
//! - [`verify`]: the cross-check harness used by the command-line tool.

pub mod action;
pub mod combinatorics;
pub mod error;
pub mod formula;
pub mod monoid;
pub mod representation;
pub mod stabilizer;
pub mod verify;

pub use action::{
    conjugate_idempotent, conjugator, count_orbits_burnside, enumerate_permutations, orbit_of,
    same_orbit, stabilizer_bruteforce, BruteForce, Permutation,
};
pub use combinatorics::{
    binomial, enumerate_partitions, enumerate_type_vectors, factorial, p_pentagonal,
    partition_to_type_vector, BigNat, Partition, TypeVector,
};
pub use error::{Error, Result};
pub use formula::{
    count_idempotents_of_type, cumulative_identity, p_via_formula, summand, total_idempotents,
};
pub use monoid::{
    assemble_idempotent, compose, decompose_idempotent, enumerate_idempotents,
    enumerate_idempotents_bruteforce, is_idempotent, type_vector_of, FiniteMap, Idempotent,
};
pub use representation::{
    apply_rep, check_representation, conjugate_rep, reduce_word, rep_from_idempotent, BWord,
    Representation,
};
pub use stabilizer::{
    eta_classes, gamma_hom, gu_enumerate, gu_identity, gu_inverse, gu_multiply,
    stabilizer_order_formula, FiberClass, GUElement,
};
