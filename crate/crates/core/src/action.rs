//! The conjugation action `f -> σ f σ⁻¹` of the symmetric group on
//! idempotents, its orbits and stabilizers, and Burnside orbit counting.
//!
//! [`orbit_of`] and [`stabilizer_bruteforce`] run over all of `S_n` and are
//! the oracles; [`same_orbit`] and [`conjugator`] use the fiber-size
//! criterion directly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::combinatorics::{factorial, BigNat};
use crate::error::{Error, Result};
use crate::monoid::{enumerate_idempotents, type_vector_of, FiniteMap, Idempotent};

/// Largest `n` for which [`enumerate_permutations`] materializes `S_n`.
pub const PERMUTATION_ENUMERATION_MAX: usize = 8;

/// Default size limit for the orbit, stabilizer and Burnside oracles.
pub const DEFAULT_BRUTE_FORCE_MAX: usize = 6;

/// A bijection of `[n]` with its inverse table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    /// One-line notation: `forward[i - 1]` is the image of `i`.
    pub fn new(forward: Vec<usize>) -> Result<Self> {
        let n = forward.len();
        let mut inverse = vec![0; n];
        for (i, &y) in forward.iter().enumerate() {
            if y == 0 || y > n || inverse[y - 1] != 0 {
                return Err(Error::NotAPermutation { n });
            }
            inverse[y - 1] = i + 1;
        }
        Ok(Permutation { forward, inverse })
    }

    pub fn identity(n: usize) -> Self {
        let forward: Vec<usize> = (1..=n).collect();
        Permutation {
            inverse: forward.clone(),
            forward,
        }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        for p in [a, b] {
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange { point: p, n });
            }
        }
        let mut forward: Vec<usize> = (1..=n).collect();
        forward.swap(a - 1, b - 1);
        Permutation::new(forward)
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut forward: Vec<usize> = (1..=n).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::PointOutOfRange { point: x, n });
                }
                forward[x - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::new(forward)
    }

    pub fn n(&self) -> usize {
        self.forward.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.forward[x - 1]
    }

    #[inline]
    pub fn apply_inverse(&self, x: usize) -> usize {
        self.inverse[x - 1]
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let forward = other.forward.iter().map(|&y| self.apply(y)).collect();
        let inverse = self
            .inverse
            .iter()
            .map(|&y| other.apply_inverse(y))
            .collect();
        Ok(Permutation { forward, inverse })
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &y)| y == i + 1)
    }

    pub fn to_map(&self) -> FiniteMap {
        FiniteMap::from_values_unchecked(self.forward.clone())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_map(), f)
    }
}

/// `S_n` in lexicographic order of one-line notation; `n <= 8`.
pub fn enumerate_permutations(n: usize) -> Result<Vec<Permutation>> {
    if n > PERMUTATION_ENUMERATION_MAX {
        return Err(Error::TooLarge {
            what: "permutation enumeration",
            n,
            max: PERMUTATION_ENUMERATION_MAX,
        });
    }
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::new(cur.clone()).expect("arrangement of 1..n"));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return Ok(out);
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

fn check_sizes(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::SizeMismatch { left: a, right: b });
    }
    Ok(())
}

/// `f^σ = σ ∘ f ∘ σ⁻¹`.
pub fn conjugate_map(f: &FiniteMap, sigma: &Permutation) -> Result<FiniteMap> {
    check_sizes(f.n(), sigma.n())?;
    let values = (1..=f.n())
        .map(|x| sigma.apply(f.apply(sigma.apply_inverse(x))))
        .collect();
    Ok(FiniteMap::from_values_unchecked(values))
}

pub fn conjugate_idempotent(f: &Idempotent, sigma: &Permutation) -> Result<Idempotent> {
    let map = conjugate_map(f.map(), sigma)?;
    Ok(Idempotent::new(map).expect("conjugates of idempotents are idempotent"))
}

/// Whether `σ` commutes with `f`, without building the conjugate.
pub fn stabilizes(sigma: &Permutation, f: &Idempotent) -> bool {
    sigma.n() == f.n() && (1..=f.n()).all(|x| sigma.apply(f.apply(x)) == f.apply(sigma.apply(x)))
}

/// Size-limited brute-force oracles over the whole symmetric group.
#[derive(Clone, Copy, Debug)]
pub struct BruteForce {
    max_n: usize,
    parallel: bool,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce {
            max_n: DEFAULT_BRUTE_FORCE_MAX,
            parallel: false,
        }
    }
}

impl BruteForce {
    /// The limit is clamped to [`PERMUTATION_ENUMERATION_MAX`].
    pub fn new(max_n: usize) -> Self {
        BruteForce {
            max_n: max_n.min(PERMUTATION_ENUMERATION_MAX),
            parallel: false,
        }
    }

    pub fn parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    fn guard(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::TooLarge {
                what,
                n,
                max: self.max_n,
            });
        }
        Ok(())
    }

    pub fn orbit_of(&self, f: &Idempotent) -> Result<BTreeSet<Idempotent>> {
        self.guard("orbit enumeration", f.n())?;
        enumerate_permutations(f.n())?
            .iter()
            .map(|s| conjugate_idempotent(f, s))
            .collect()
    }

    pub fn stabilizer(&self, f: &Idempotent) -> Result<Vec<Permutation>> {
        self.guard("brute-force stabilizer", f.n())?;
        Ok(enumerate_permutations(f.n())?
            .into_iter()
            .filter(|s| {
                conjugate_map(f.map(), s)
                    .map(|g| &g == f.map())
                    .unwrap_or(false)
            })
            .collect())
    }

    /// `Σ_f |stab(f)|` over all idempotents on `[n]`.
    pub fn stabilizer_sum(&self, n: usize) -> Result<BigNat> {
        self.guard("Burnside orbit count", n)?;
        let perms = enumerate_permutations(n)?;
        let idempotents = enumerate_idempotents(n);
        let fixed = |f: &Idempotent| -> u64 {
            perms
                .iter()
                .filter(|s| {
                    conjugate_map(f.map(), s)
                        .map(|g| &g == f.map())
                        .unwrap_or(false)
                })
                .count() as u64
        };
        let total: u64 = if self.parallel {
            idempotents.par_iter().map(fixed).sum()
        } else {
            idempotents.iter().map(fixed).sum()
        };
        Ok(BigNat::from(total))
    }

    /// Orbit count as `(1/n!) Σ_f |stab(f)|`.
    pub fn count_orbits(&self, n: usize) -> Result<BigNat> {
        let sum = self.stabilizer_sum(n)?;
        sum.div_exact(&factorial(n as u64))
            .ok_or(Error::NonExactDivision {
                what: "Burnside stabilizer sum",
            })
    }
}

/// All conjugates of `f`; `n <= 6`.
pub fn orbit_of(f: &Idempotent) -> Result<BTreeSet<Idempotent>> {
    BruteForce::default().orbit_of(f)
}

/// `{σ ∈ S_n : f^σ = f}` by exhaustive search; `n <= 6`.
pub fn stabilizer_bruteforce(f: &Idempotent) -> Result<Vec<Permutation>> {
    BruteForce::default().stabilizer(f)
}

/// Number of conjugation orbits on idempotents of `[n]` by Burnside's lemma; `n <= 6`.
pub fn count_orbits_burnside(n: usize) -> Result<BigNat> {
    BruteForce::default().count_orbits(n)
}

/// Two idempotents are conjugate iff they have the same fiber-size profile.
pub fn same_orbit(f: &Idempotent, g: &Idempotent) -> Result<bool> {
    check_sizes(f.n(), g.n())?;
    Ok(type_vector_of(f) == type_vector_of(g))
}

/// A permutation `σ` with `f^σ = g`.
///
/// Image points of equal fiber size are matched in ascending order; each
/// fiber is then sent to its partner root first and the remaining points in
/// ascending order.
pub fn conjugator(f: &Idempotent, g: &Idempotent) -> Result<Permutation> {
    if !same_orbit(f, g)? {
        return Err(Error::NotSameOrbit);
    }
    let by_size = |h: &Idempotent| {
        let mut m: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&x, fiber) in h.fibers() {
            m.entry(fiber.len()).or_default().push(x);
        }
        m
    };
    let (fs, gs) = (by_size(f), by_size(g));
    let mut forward = vec![0; f.n()];
    for (size, f_roots) in &fs {
        for (&x, &y) in f_roots.iter().zip(&gs[size]) {
            forward[x - 1] = y;
            let f_rest = f.fiber(x).iter().filter(|&&p| p != x);
            let g_rest = g.fiber(y).iter().filter(|&&p| p != y);
            for (&a, &b) in f_rest.zip(g_rest) {
                forward[a - 1] = b;
            }
        }
    }
    Permutation::new(forward)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idem(v: &[usize]) -> Idempotent {
        Idempotent::from_values(v.to_vec()).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let s = Permutation::new(vec![2, 3, 1]).unwrap();
        assert_eq!(s.apply(1), 2);
        assert_eq!(s.apply_inverse(2), 1);
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
        let c = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        assert_eq!(c.forward(), &[2, 3, 1, 4]);
        // (s ∘ c)(x) = s(c(x))
        let sc = Permutation::new(vec![2, 1, 3, 4])
            .unwrap()
            .compose(&c)
            .unwrap();
        assert_eq!(sc.forward(), &[1, 3, 2, 4]);
    }

    #[test]
    fn permutation_counts_and_order() {
        assert_eq!(enumerate_permutations(0).unwrap().len(), 1);
        assert_eq!(enumerate_permutations(1).unwrap().len(), 1);
        assert_eq!(enumerate_permutations(3).unwrap().len(), 6);
        assert_eq!(enumerate_permutations(5).unwrap().len(), 120);
        let perms = enumerate_permutations(4).unwrap();
        for w in perms.windows(2) {
            assert!(w[0].forward() < w[1].forward());
        }
        assert!(enumerate_permutations(9).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let f = idem(&[1, 2, 1]);
        assert_eq!(
            conjugate_idempotent(&f, &Permutation::identity(3)).unwrap(),
            f
        );
        let t13 = Permutation::transposition(3, 1, 3).unwrap();
        assert_eq!(
            conjugate_idempotent(&idem(&[1, 1, 1]), &t13).unwrap(),
            idem(&[3, 3, 3])
        );
        let s = Permutation::new(vec![3, 1, 2]).unwrap();
        let back =
            conjugate_idempotent(&conjugate_idempotent(&f, &s).unwrap(), &s.inverse()).unwrap();
        assert_eq!(back, f);
        assert!(conjugate_idempotent(&f, &Permutation::identity(2)).is_err());
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbit_of(&Idempotent::identity(4)).unwrap().len(), 1);
        let consts = orbit_of(&idem(&[1, 1, 1])).unwrap();
        assert_eq!(consts.len(), 3);
        assert!(consts.contains(&idem(&[2, 2, 2])));
        assert_eq!(orbit_of(&idem(&[1, 2, 1])).unwrap().len(), 6);
        assert!(orbit_of(&Idempotent::identity(7)).is_err());
    }

    #[test]
    fn same_orbit_examples() {
        let f = idem(&[1, 2, 1]);
        assert!(same_orbit(&f, &f).unwrap());
        assert!(same_orbit(&idem(&[1, 1, 1]), &idem(&[3, 3, 3])).unwrap());
        assert!(!same_orbit(&Idempotent::identity(3), &idem(&[1, 1, 1])).unwrap());
        assert!(same_orbit(&f, &Idempotent::identity(2)).is_err());
    }

    #[test]
    fn conjugator_examples() {
        let f = idem(&[1, 2, 1]);
        assert!(conjugator(&f, &f).unwrap().is_identity());
        let s = conjugator(&idem(&[1, 1, 1]), &idem(&[2, 2, 2])).unwrap();
        assert_eq!(s.apply(1), 2);
        assert_eq!(
            conjugate_idempotent(&idem(&[1, 1, 1]), &s).unwrap(),
            idem(&[2, 2, 2])
        );
        let g = idem(&[1, 2, 2]);
        let s = conjugator(&f, &g).unwrap();
        assert_eq!(conjugate_idempotent(&f, &s).unwrap(), g);
        assert_eq!(
            conjugator(&Idempotent::identity(3), &f),
            Err(Error::NotSameOrbit)
        );
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(
            stabilizer_bruteforce(&Idempotent::identity(3))
                .unwrap()
                .len(),
            6
        );
        let st = stabilizer_bruteforce(&idem(&[1, 1, 1])).unwrap();
        assert_eq!(st.len(), 2);
        assert!(st.iter().all(|s| s.apply(1) == 1));
        let st = stabilizer_bruteforce(&idem(&[1, 2, 1])).unwrap();
        assert_eq!(st.len(), 1);
        assert!(st[0].is_identity());
        for s in &st {
            assert!(stabilizes(s, &idem(&[1, 2, 1])));
        }
    }

    #[test]
    fn burnside_small() {
        assert_eq!(count_orbits_burnside(1).unwrap(), BigNat::one());
        assert_eq!(
            BruteForce::default().stabilizer_sum(3).unwrap(),
            BigNat::from(18u64)
        );
        assert_eq!(count_orbits_burnside(3).unwrap(), BigNat::from(3u64));
        assert!(count_orbits_burnside(7).is_err());
        assert_eq!(
            BruteForce::default()
                .parallel(true)
                .count_orbits(4)
                .unwrap(),
            BigNat::from(5u64)
        );
    }

    #[test]
    fn brute_force_limit_is_clamped() {
        assert_eq!(BruteForce::new(20).max_n(), PERMUTATION_ENUMERATION_MAX);
        assert!(BruteForce::new(2).count_orbits(3).is_err());
    }
}
