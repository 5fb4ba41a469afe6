//! Closed-form counts over type vectors and the resulting formula for p(n).
//!
//! For `g ∈ V_n` write `S_k = Σ_{s<k} s·g(s)`, the number of points already
//! used by fibers of size below `k`. The idempotents of type `g` are counted by
//! choosing the `g(k)` roots of size-`k` fibers among the remaining points and
//! then, root by root, the `k - 1` other members of its fiber:
//!
//! ```text
//! #{f : ϖ(f) = g} = ∏_k C(n - S_k, g(k)) · ∏_{v=1}^{g(k)} C(n - S_k - g(k) - (v-1)(k-1), k-1)
//! ```
//!
//! Burnside's lemma then gives `n! · p(n) = Σ_{g ∈ V_n} |stab(g)| · #{f : ϖ(f) = g}`.

use rayon::prelude::*;

use crate::combinatorics::{
    binomial_signed, enumerate_type_vectors, factorial, p_pentagonal, BigNat, TypeVector,
};
use crate::error::{Error, Result};
use crate::stabilizer::stabilizer_order_formula;

fn check_weight(n: usize, g: &TypeVector) -> Result<()> {
    let weight = g.weight();
    if weight != n {
        return Err(Error::WeightMismatch { weight, n });
    }
    Ok(())
}

/// Binomial factors for part size `k`, given `used = S_k`.
fn placement_factor(n: usize, k: usize, gk: usize, used: usize) -> BigNat {
    let free = n as i64 - used as i64;
    let mut acc = binomial_signed(free, gk as i64);
    for v in 1..=gk as i64 {
        acc *= binomial_signed(free - gk as i64 - (v - 1) * (k as i64 - 1), k as i64 - 1);
    }
    acc
}

/// Number of idempotents on `[n]` whose fiber-size profile is `g`.
pub fn count_idempotents_of_type(n: usize, g: &TypeVector) -> Result<BigNat> {
    check_weight(n, g)?;
    let mut used = 0;
    let mut acc = BigNat::one();
    for k in 1..=n {
        let gk = g.get(k);
        acc *= placement_factor(n, k, gk, used);
        used += k * gk;
    }
    Ok(acc)
}

/// The Burnside summand `|stab| · #type` for `g ∈ V_n`.
pub fn summand(n: usize, g: &TypeVector) -> Result<BigNat> {
    Ok(stabilizer_order_formula(g) * count_idempotents_of_type(n, g)?)
}

/// The same summand as one fused product over `k`, each factor being
/// `(k-1)!^{g(k)} · g(k)! · C(..) · ∏_v C(..)`.
pub fn summand_fused(n: usize, g: &TypeVector) -> Result<BigNat> {
    check_weight(n, g)?;
    let mut used = 0usize;
    let mut acc = BigNat::one();
    for k in 1..=n {
        let gk = g.get(k);
        let free = n as i64 - used as i64;
        let mut term = factorial(k as u64 - 1).pow(gk as u32) * factorial(gk as u64);
        term *= binomial_signed(free, gk as i64);
        for v in 1..=gk as i64 {
            term *= binomial_signed(free - gk as i64 - (v - 1) * (k as i64 - 1), k as i64 - 1);
        }
        acc *= term;
        used += k * gk;
    }
    Ok(acc)
}

/// `Σ_{g ∈ V_n} summand(n, g)`, which equals `n! · p(n)`.
pub fn burnside_sum(n: usize, parallel: bool) -> BigNat {
    let types = enumerate_type_vectors(n);
    let term = |g: &TypeVector| summand(n, g).expect("members of V_n have weight n");
    if parallel {
        types
            .par_iter()
            .map(term)
            .reduce(BigNat::zero, |a, b| a + b)
    } else {
        types.iter().map(term).sum()
    }
}

/// p(n) as `(1/n!) Σ_{g ∈ V_n} summand(n, g)`.
pub fn p_via_formula(n: usize) -> Result<BigNat> {
    p_via_formula_with(n, false)
}

pub fn p_via_formula_with(n: usize, parallel: bool) -> Result<BigNat> {
    if n == 0 {
        return Err(Error::TooLarge {
            what: "formula evaluation needs n >= 1",
            n,
            max: 0,
        });
    }
    burnside_sum(n, parallel)
        .div_exact(&factorial(n as u64))
        .ok_or(Error::NonExactDivision {
            what: "type-vector sum",
        })
}

/// Total number of idempotents on `[n]`, summed over `V_n`.
pub fn total_idempotents(n: usize) -> BigNat {
    enumerate_type_vectors(n)
        .iter()
        .map(|g| count_idempotents_of_type(n, g).expect("members of V_n have weight n"))
        .sum()
}

/// Both sides of `Σ_{n=1}^m n!·p(n) = Σ_{n=1}^m Σ_{g ∈ V_n} summand(n, g)`.
///
/// The left side uses the pentagonal recurrence for p(n).
pub fn cumulative_identity(m: usize) -> (BigNat, BigNat) {
    let lhs = (1..=m).map(|n| factorial(n as u64) * p_pentagonal(n)).sum();
    let rhs = (1..=m).map(|n| burnside_sum(n, false)).sum();
    (lhs, rhs)
}
