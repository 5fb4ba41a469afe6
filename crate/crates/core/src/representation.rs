//! Set representations of the two-element monoid `B = {e, b}` with `b² = b`.
//!
//! A representation on `[n]` is fixed by where it sends `b`, which must be an
//! idempotent. Conjugating a representation by a permutation conjugates that
//! idempotent.

use std::ops::Mul;

use crate::action::{conjugate_idempotent, Permutation};
use crate::error::{Error, Result};
use crate::monoid::{compose, FiniteMap, Idempotent};

/// An element of `B`: the empty word `e` or the class `b` of every nonempty word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BWord {
    Ident,
    Gen,
}

impl BWord {
    pub const ALL: [BWord; 2] = [BWord::Ident, BWord::Gen];
}

impl Mul for BWord {
    type Output = BWord;
    fn mul(self, rhs: BWord) -> BWord {
        match (self, rhs) {
            (BWord::Ident, w) | (w, BWord::Ident) => w,
            (BWord::Gen, BWord::Gen) => BWord::Gen,
        }
    }
}

/// Reduces the word `x^letters` modulo `x = x²`.
pub fn reduce_word(letters: usize) -> BWord {
    if letters == 0 {
        BWord::Ident
    } else {
        BWord::Gen
    }
}

/// A representation `ρ: B -> T([n])`, stored as `ρ(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    action_of_b: Idempotent,
}

impl Representation {
    pub fn n(&self) -> usize {
        self.action_of_b.n()
    }

    /// `ρ(b)`; this is the correspondence from representations to idempotents.
    pub fn action_of_b(&self) -> &Idempotent {
        &self.action_of_b
    }

    /// `ρ(w)` as a map.
    pub fn image_of(&self, w: BWord) -> FiniteMap {
        match w {
            BWord::Ident => FiniteMap::identity(self.n()),
            BWord::Gen => self.action_of_b.map().clone(),
        }
    }
}

impl From<Idempotent> for Representation {
    fn from(f: Idempotent) -> Self {
        Representation { action_of_b: f }
    }
}

/// The representation with `ρ(b) = f`. Fails if `f` is not idempotent.
pub fn rep_from_idempotent(f: &FiniteMap) -> Result<Representation> {
    Ok(Representation {
        action_of_b: Idempotent::new(f.clone())?,
    })
}

pub fn apply_rep(rho: &Representation, w: BWord, x: usize) -> Result<usize> {
    if x == 0 || x > rho.n() {
        return Err(Error::PointOutOfRange {
            point: x,
            n: rho.n(),
        });
    }
    Ok(match w {
        BWord::Ident => x,
        BWord::Gen => rho.action_of_b.apply(x),
    })
}

/// `ρ^σ(a) = σ ρ(a) σ⁻¹`.
pub fn conjugate_rep(rho: &Representation, sigma: &Permutation) -> Result<Representation> {
    Ok(Representation {
        action_of_b: conjugate_idempotent(&rho.action_of_b, sigma)?,
    })
}

/// Whether `e -> id, b -> action_of_b` is a monoid homomorphism `B -> T([n])`.
///
/// Checks `ρ(e) = id` and `ρ(v w) = ρ(v) ρ(w)` over the whole multiplication
/// table of `B`.
pub fn check_representation(action_of_b: &FiniteMap) -> bool {
    let n = action_of_b.n();
    let rho = |w: BWord| match w {
        BWord::Ident => FiniteMap::identity(n),
        BWord::Gen => action_of_b.clone(),
    };
    if rho(BWord::Ident) != FiniteMap::identity(n) {
        return false;
    }
    BWord::ALL.iter().all(|&v| {
        BWord::ALL.iter().all(|&w| {
            compose(&rho(v), &rho(w))
                .map(|m| m == rho(v * w))
                .unwrap_or(false)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::enumerate_idempotents;

    fn map(v: &[usize]) -> FiniteMap {
        FiniteMap::new(v.to_vec()).unwrap()
    }

    #[test]
    fn word_reduction() {
        assert_eq!(reduce_word(0), BWord::Ident);
        assert_eq!(reduce_word(1), BWord::Gen);
        assert_eq!(reduce_word(17), BWord::Gen);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(reduce_word(a) * reduce_word(b), reduce_word(a + b));
            }
        }
    }

    #[test]
    fn construction() {
        let triv = rep_from_idempotent(&FiniteMap::identity(3)).unwrap();
        for x in 1..=3 {
            assert_eq!(apply_rep(&triv, BWord::Gen, x).unwrap(), x);
        }
        let r = rep_from_idempotent(&map(&[1, 2, 1])).unwrap();
        assert_eq!(r.action_of_b().map(), &map(&[1, 2, 1]));
        assert_eq!(r.image_of(BWord::Ident), FiniteMap::identity(3));
        assert_eq!(
            rep_from_idempotent(&map(&[2, 3, 1])),
            Err(Error::NotIdempotent)
        );
    }

    #[test]
    fn application() {
        let c = rep_from_idempotent(&map(&[1, 1, 1])).unwrap();
        let r = rep_from_idempotent(&map(&[1, 2, 1])).unwrap();
        assert_eq!(apply_rep(&r, BWord::Ident, 3).unwrap(), 3);
        assert_eq!(apply_rep(&c, BWord::Gen, 3).unwrap(), 1);
        assert_eq!(apply_rep(&r, BWord::Gen, 3).unwrap(), 1);
        assert_eq!(
            apply_rep(&r, BWord::Gen, 4),
            Err(Error::PointOutOfRange { point: 4, n: 3 })
        );
    }

    #[test]
    fn conjugation() {
        let c = rep_from_idempotent(&map(&[1, 1, 1])).unwrap();
        assert_eq!(conjugate_rep(&c, &Permutation::identity(3)).unwrap(), c);
        let t = Permutation::transposition(3, 1, 2).unwrap();
        let ct = conjugate_rep(&c, &t).unwrap();
        assert_eq!(ct.action_of_b().map(), &map(&[2, 2, 2]));
        let s = Permutation::new(vec![2, 3, 1]).unwrap();
        let r = rep_from_idempotent(&map(&[1, 2, 1])).unwrap();
        let back = conjugate_rep(&conjugate_rep(&r, &s).unwrap(), &s.inverse()).unwrap();
        assert_eq!(back, r);
        assert!(conjugate_rep(&r, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn homomorphism_check() {
        assert!(check_representation(&FiniteMap::identity(3)));
        assert!(check_representation(&map(&[1, 2, 1])));
        assert!(!check_representation(&map(&[2, 3, 1])));
        for n in 1..=4 {
            for f in enumerate_idempotents(n) {
                assert!(check_representation(
                    Representation::from(f).action_of_b().map()
                ));
            }
        }
    }
}
