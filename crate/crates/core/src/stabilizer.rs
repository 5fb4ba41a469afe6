//! Structure of the stabilizer of an idempotent under conjugation.
//!
//! Image points of `f` are grouped by fiber size into classes `U`. For each
//! class there is a group `G_U` whose elements are a tuple of permutations of
//! a reference fiber (one per member of `U`) together with a permutation of
//! `U`, multiplied with a twist:
//!
//! ```text
//! ((a_u), φ1) · ((b_u), φ2) = ((a_{φ2(u)} ∘ b_u), φ1 ∘ φ2)
//! ```
//!
//! [`gamma_hom`] sends a stabilizing permutation to `G_U`, and the stabilizer
//! order is the product of the `|G_U|`.
//!
//! Indexing: members of a class are addressed by their position in the sorted
//! member list, and a block permutes positions `0..k-1` of the sorted
//! reference fiber `f⁻¹(x_U) \ {x_U}` with `x_U = min(U)`.

use std::collections::BTreeMap;

use crate::action::{conjugate_map, Permutation};
use crate::combinatorics::{factorial, BigNat, TypeVector};
use crate::error::{Error, Result};
use crate::monoid::Idempotent;

/// Upper bound on `|G_U|` for [`gu_enumerate`].
pub const GU_ENUMERATION_MAX: u64 = 100_000;

/// A permutation of `0..len`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalPerm(Vec<usize>);

impl LocalPerm {
    pub fn identity(len: usize) -> Self {
        LocalPerm((0..len).collect())
    }

    pub fn new(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(LocalPerm(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LocalPerm) -> LocalPerm {
        LocalPerm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> LocalPerm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        LocalPerm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// All permutations of `0..len` in lexicographic order.
    pub fn all(len: usize) -> Vec<LocalPerm> {
        let mut cur: Vec<usize> = (0..len).collect();
        let mut out = Vec::new();
        loop {
            out.push(LocalPerm(cur.clone()));
            let Some(i) = (1..len).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..len).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }
}

/// Image points sharing one fiber size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberClass {
    fiber_size: usize,
    members: Vec<usize>,
    reference_rest: Vec<usize>,
}

impl FiberClass {
    pub fn fiber_size(&self) -> usize {
        self.fiber_size
    }

    /// Sorted members of `U`.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// `x_U`, the smallest member.
    pub fn representative(&self) -> usize {
        self.members[0]
    }

    /// `f⁻¹(x_U) \ {x_U}`, sorted.
    pub fn reference_rest(&self) -> &[usize] {
        &self.reference_rest
    }

    fn block_len(&self) -> usize {
        self.fiber_size - 1
    }

    fn has_blocks(&self) -> bool {
        self.fiber_size > 1
    }

    /// `((k-1)!)^{|U|} · |U|!`
    pub fn group_order(&self) -> BigNat {
        factorial(self.block_len() as u64).pow(self.members.len() as u32)
            * factorial(self.members.len() as u64)
    }

    fn group_order_u64(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        let block = (1..=self.block_len() as u64).try_fold(1u64, |a, i| a.checked_mul(i))?;
        for _ in 0..self.members.len() {
            acc = acc.checked_mul(block)?;
        }
        for i in 1..=self.members.len() as u64 {
            acc = acc.checked_mul(i)?;
        }
        Some(acc)
    }
}

/// Fiber-size classes of `f`, ordered by fiber size.
pub fn eta_classes(f: &Idempotent) -> Vec<FiberClass> {
    let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (&x, fiber) in f.fibers() {
        by_size.entry(fiber.len()).or_default().push(x);
    }
    by_size
        .into_iter()
        .map(|(fiber_size, members)| {
            let root = members[0];
            let reference_rest = f
                .fiber(root)
                .iter()
                .copied()
                .filter(|&p| p != root)
                .collect();
            FiberClass {
                fiber_size,
                members,
                reference_rest,
            }
        })
        .collect()
}

/// An element `((a_u)_{u∈U}, φ)` of `G_U`.
///
/// `blocks[i]` is `a_u` for the `i`-th member; it is empty when the fiber
/// size is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GUElement {
    fiber_size: usize,
    blocks: Vec<LocalPerm>,
    outer: LocalPerm,
}

impl GUElement {
    /// Validates the shape against `class`.
    pub fn new(class: &FiberClass, blocks: Vec<LocalPerm>, outer: LocalPerm) -> Result<Self> {
        let m = class.members.len();
        let blocks_ok = if class.has_blocks() {
            blocks.len() == m && blocks.iter().all(|b| b.len() == class.block_len())
        } else {
            blocks.is_empty()
        };
        if outer.len() != m || !blocks_ok {
            return Err(Error::ClassMismatch);
        }
        Ok(GUElement {
            fiber_size: class.fiber_size,
            blocks,
            outer,
        })
    }

    pub fn blocks(&self) -> &[LocalPerm] {
        &self.blocks
    }

    /// `φ` on member positions.
    pub fn outer(&self) -> &LocalPerm {
        &self.outer
    }

    /// `φ` on the member points themselves.
    pub fn outer_on_points(&self, class: &FiberClass) -> Vec<(usize, usize)> {
        class
            .members
            .iter()
            .enumerate()
            .map(|(i, &u)| (u, class.members[self.outer.apply(i)]))
            .collect()
    }

    fn same_shape(&self, other: &GUElement) -> bool {
        self.fiber_size == other.fiber_size
            && self.outer.len() == other.outer.len()
            && self.blocks.len() == other.blocks.len()
    }

    pub fn is_identity(&self) -> bool {
        self.outer.is_identity() && self.blocks.iter().all(LocalPerm::is_identity)
    }
}

pub fn gu_identity(class: &FiberClass) -> GUElement {
    let m = class.members.len();
    let blocks = if class.has_blocks() {
        vec![LocalPerm::identity(class.block_len()); m]
    } else {
        Vec::new()
    };
    GUElement {
        fiber_size: class.fiber_size,
        blocks,
        outer: LocalPerm::identity(m),
    }
}

/// `((a_u), φ1) · ((b_u), φ2) = ((a_{φ2(u)} ∘ b_u), φ1 ∘ φ2)`.
pub fn gu_multiply(z1: &GUElement, z2: &GUElement) -> Result<GUElement> {
    if !z1.same_shape(z2) {
        return Err(Error::ClassMismatch);
    }
    let blocks = z2
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| z1.blocks[z2.outer.apply(i)].compose(b))
        .collect();
    Ok(GUElement {
        fiber_size: z1.fiber_size,
        blocks,
        outer: z1.outer.compose(&z2.outer),
    })
}

/// `((a_u), φ)⁻¹ = ((a_{φ⁻¹(u)}⁻¹), φ⁻¹)`.
pub fn gu_inverse(z: &GUElement) -> GUElement {
    let outer = z.outer.inverse();
    let blocks = (0..z.blocks.len())
        .map(|i| z.blocks[outer.apply(i)].inverse())
        .collect();
    GUElement {
        fiber_size: z.fiber_size,
        blocks,
        outer,
    }
}

/// Every element of `G_U`, outer permutation varying slowest.
pub fn gu_enumerate(class: &FiberClass) -> Result<Vec<GUElement>> {
    match class.group_order_u64() {
        Some(order) if order <= GU_ENUMERATION_MAX => {}
        _ => {
            return Err(Error::TooLarge {
                what: "G_U enumeration",
                n: class.members.len(),
                max: GU_ENUMERATION_MAX as usize,
            })
        }
    }
    let m = class.members.len();
    let block_choices = if class.has_blocks() {
        LocalPerm::all(class.block_len())
    } else {
        Vec::new()
    };
    let mut tuples: Vec<Vec<LocalPerm>> = vec![Vec::new()];
    if class.has_blocks() {
        for _ in 0..m {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    block_choices.iter().map(move |b| {
                        let mut t = t.clone();
                        t.push(b.clone());
                        t
                    })
                })
                .collect();
        }
    }
    let mut out = Vec::with_capacity(tuples.len());
    for outer in LocalPerm::all(m) {
        for blocks in &tuples {
            out.push(GUElement {
                fiber_size: class.fiber_size,
                blocks: blocks.clone(),
                outer: outer.clone(),
            });
        }
    }
    Ok(out)
}

/// Image of a stabilizing permutation in `G_U`.
///
/// The outer part is `σ` restricted to `U`. The block at `u` is
/// `r_{σ(u)}⁻¹ ∘ σ ∘ r_u`, where `r_u` maps the sorted reference fiber onto
/// the sorted `f⁻¹(u) \ {u}` in order.
pub fn gamma_hom(sigma: &Permutation, f: &Idempotent, class: &FiberClass) -> Result<GUElement> {
    if conjugate_map(f.map(), sigma)? != *f.map() {
        return Err(Error::NotInStabilizer);
    }
    let members_ok = class
        .members
        .iter()
        .all(|&u| f.is_image_point(u) && f.fiber(u).len() == class.fiber_size);
    if !members_ok {
        return Err(Error::ClassMismatch);
    }
    let position: BTreeMap<usize, usize> = class
        .members
        .iter()
        .enumerate()
        .map(|(i, &u)| (u, i))
        .collect();
    let rest =
        |u: usize| -> Vec<usize> { f.fiber(u).iter().copied().filter(|&p| p != u).collect() };

    let mut outer = Vec::with_capacity(class.members.len());
    let mut blocks = Vec::new();
    for &u in &class.members {
        let su = sigma.apply(u);
        let &j = position.get(&su).ok_or(Error::NotInStabilizer)?;
        outer.push(j);
        if class.has_blocks() {
            let (from, to) = (rest(u), rest(su));
            let psi = from
                .iter()
                .map(|&p| {
                    let q = sigma.apply(p);
                    to.iter()
                        .position(|&t| t == q)
                        .ok_or(Error::NotInStabilizer)
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(LocalPerm(psi));
        }
    }
    Ok(GUElement {
        fiber_size: class.fiber_size,
        blocks,
        outer: LocalPerm(outer),
    })
}

/// `|stab(f)| = ∏_k ((k-1)!)^{g(k)} · g(k)!`.
pub fn stabilizer_order_formula(g: &TypeVector) -> BigNat {
    (1..=g.n())
        .filter(|&k| g.get(k) > 0)
        .map(|k| {
            let gk = g.get(k);
            factorial(k as u64 - 1).pow(gk as u32) * factorial(gk as u64)
        })
        .product()
}

/// Product of `|G_U|` over the fiber-size classes of `f`.
pub fn stabilizer_order_from_classes(f: &Idempotent) -> BigNat {
    eta_classes(f).iter().map(FiberClass::group_order).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::stabilizer_bruteforce;
    use crate::monoid::type_vector_of;

    fn idem(v: &[usize]) -> Idempotent {
        Idempotent::from_values(v.to_vec()).unwrap()
    }

    fn class_of(k: usize, m: usize) -> FiberClass {
        // m fibers of size k laid out consecutively
        let mut values = Vec::new();
        for i in 0..m {
            values.extend(std::iter::repeat(i * k + 1).take(k));
        }
        eta_classes(&idem(&values)).remove(0)
    }

    #[test]
    fn eta_examples() {
        let c = eta_classes(&Idempotent::identity(3));
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].fiber_size(), c[0].members()), (1, &[1, 2, 3][..]));
        let c = eta_classes(&idem(&[1, 1, 1]));
        assert_eq!((c[0].fiber_size(), c[0].members()), (3, &[1][..]));
        assert_eq!(c[0].reference_rest(), &[2, 3]);
        let f = idem(&[1, 2, 1, 4, 4]);
        let c = eta_classes(&f);
        assert_eq!(c.len(), 2);
        assert_eq!((c[0].fiber_size(), c[0].members()), (1, &[2][..]));
        assert_eq!((c[1].fiber_size(), c[1].members()), (2, &[1, 4][..]));
        assert_eq!(c[1].representative(), 1);
        let g = type_vector_of(&f);
        for cl in &c {
            assert_eq!(cl.members().len(), g.get(cl.fiber_size()));
        }
    }

    #[test]
    fn identity_and_trivial_blocks() {
        let c = class_of(1, 3);
        let e = gu_identity(&c);
        assert!(e.blocks().is_empty());
        assert!(e.outer().is_identity());
        let c = class_of(2, 1);
        let e = gu_identity(&c);
        assert_eq!(e.blocks(), &[LocalPerm::identity(1)]);
    }

    #[test]
    fn swap_squared_is_identity() {
        let c = class_of(2, 2);
        let swap = GUElement::new(
            &c,
            vec![LocalPerm::identity(1); 2],
            LocalPerm::new(vec![1, 0]).unwrap(),
        )
        .unwrap();
        let sq = gu_multiply(&swap, &swap).unwrap();
        assert!(sq.outer().is_identity());
        assert!(sq.is_identity());
    }

    #[test]
    fn inverse_examples() {
        let c = class_of(1, 3);
        assert_eq!(gu_inverse(&gu_identity(&c)), gu_identity(&c));
        let cyc = GUElement::new(&c, vec![], LocalPerm::new(vec![1, 2, 0]).unwrap()).unwrap();
        assert_eq!(
            gu_inverse(&cyc).outer(),
            &LocalPerm::new(vec![2, 0, 1]).unwrap()
        );

        let c = class_of(4, 2);
        let a = LocalPerm::new(vec![1, 2, 0]).unwrap();
        let b = LocalPerm::new(vec![1, 0, 2]).unwrap();
        let z = GUElement::new(&c, vec![a.clone(), b.clone()], LocalPerm::identity(2)).unwrap();
        let zi = gu_inverse(&z);
        assert_eq!(zi.blocks(), &[a.inverse(), b.inverse()]);
        assert!(gu_multiply(&z, &zi).unwrap().is_identity());
    }

    #[test]
    fn multiply_rejects_mismatched_classes() {
        let a = gu_identity(&class_of(2, 2));
        let b = gu_identity(&class_of(3, 2));
        assert_eq!(gu_multiply(&a, &b), Err(Error::ClassMismatch));
        assert!(GUElement::new(&class_of(2, 2), vec![], LocalPerm::identity(2)).is_err());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(gu_enumerate(&class_of(1, 4)).unwrap().len(), 24);
        assert_eq!(gu_enumerate(&class_of(3, 1)).unwrap().len(), 2);
        assert_eq!(gu_enumerate(&class_of(2, 2)).unwrap().len(), 2);
        assert_eq!(gu_enumerate(&class_of(3, 2)).unwrap().len(), 8);
        let all = gu_enumerate(&class_of(3, 3)).unwrap();
        assert_eq!(all.len(), 48);
        let set: std::collections::BTreeSet<_> = all.iter().collect();
        assert_eq!(set.len(), 48);
        assert!(gu_enumerate(&class_of(1, 9)).is_err());
    }

    #[test]
    fn gamma_examples() {
        let f = idem(&[1, 1, 1]);
        let c = eta_classes(&f).remove(0);
        let e = gamma_hom(&Permutation::identity(3), &f, &c).unwrap();
        assert_eq!(e, gu_identity(&c));
        let t = Permutation::transposition(3, 2, 3).unwrap();
        let z = gamma_hom(&t, &f, &c).unwrap();
        assert!(z.outer().is_identity());
        assert_eq!(z.blocks(), &[LocalPerm::new(vec![1, 0]).unwrap()]);
        let bad = Permutation::transposition(3, 1, 2).unwrap();
        assert_eq!(gamma_hom(&bad, &f, &c), Err(Error::NotInStabilizer));
    }

    #[test]
    fn gamma_moves_between_fibers() {
        // fibers {1,2} and {3,4}; σ swaps them as 1<->3, 2<->4
        let f = idem(&[1, 1, 3, 3]);
        let c = eta_classes(&f).remove(0);
        let s = Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        let z = gamma_hom(&s, &f, &c).unwrap();
        assert_eq!(z.outer_on_points(&c), vec![(1, 3), (3, 1)]);
        assert!(z.blocks().iter().all(LocalPerm::is_identity));
    }

    #[test]
    fn stabilizer_order_examples() {
        for n in 1..=6 {
            let mut counts = vec![0; n];
            counts[0] = n;
            let g = TypeVector::new(counts).unwrap();
            assert_eq!(stabilizer_order_formula(&g), factorial(n as u64));
        }
        let g = TypeVector::new(vec![0, 0, 1]).unwrap();
        assert_eq!(stabilizer_order_formula(&g), BigNat::from(2u64));
        assert_eq!(stabilizer_bruteforce(&idem(&[1, 1, 1])).unwrap().len(), 2);
        let g = TypeVector::new(vec![1, 1, 0]).unwrap();
        assert_eq!(stabilizer_order_formula(&g), BigNat::one());
    }

    #[test]
    fn class_product_matches_formula() {
        for n in 1..=6 {
            for f in crate::monoid::enumerate_idempotents(n) {
                assert_eq!(
                    stabilizer_order_from_classes(&f),
                    stabilizer_order_formula(&type_vector_of(&f))
                );
            }
        }
    }
}
