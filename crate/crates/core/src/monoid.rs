//! Self-maps of `[n] = {1, ..., n}` and their idempotents.
//!
//! An idempotent is the identity on its image glued to a retraction of the
//! complement onto the image. [`enumerate_idempotents`] builds every
//! idempotent from such a pair; [`enumerate_idempotents_bruteforce`] filters
//! all `n^n` maps and serves as its oracle.

use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::TypeVector;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`enumerate_idempotents_bruteforce`].
pub const BRUTE_FORCE_IDEMPOTENT_MAX: usize = 7;

/// A total map `[n] -> [n]`, stored as its value list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteMap {
    values: Vec<usize>,
}

impl FiniteMap {
    /// `values[i - 1]` is the image of `i`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if let Some((i, &v)) = values.iter().enumerate().find(|&(_, &v)| v == 0 || v > n) {
            return Err(Error::ValueOutOfRange {
                position: i + 1,
                value: v,
                n,
            });
        }
        Ok(FiniteMap { values })
    }

    pub(crate) fn from_values_unchecked(values: Vec<usize>) -> Self {
        FiniteMap { values }
    }

    pub fn identity(n: usize) -> Self {
        FiniteMap {
            values: (1..=n).collect(),
        }
    }

    /// The map sending everything to `c`.
    pub fn constant(n: usize, c: usize) -> Result<Self> {
        FiniteMap::new(vec![c; n])
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Image of `x`. Panics if `x` is outside `[1..n]`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.values[x - 1]
    }

    pub fn try_apply(&self, x: usize) -> Result<usize> {
        if x == 0 || x > self.n() {
            return Err(Error::PointOutOfRange {
                point: x,
                n: self.n(),
            });
        }
        Ok(self.apply(x))
    }
}

impl fmt::Display for FiniteMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `f ∘ g`, i.e. `x -> f(g(x))`.
pub fn compose(f: &FiniteMap, g: &FiniteMap) -> Result<FiniteMap> {
    if f.n() != g.n() {
        return Err(Error::SizeMismatch {
            left: f.n(),
            right: g.n(),
        });
    }
    Ok(FiniteMap {
        values: g.values.iter().map(|&y| f.apply(y)).collect(),
    })
}

pub fn is_idempotent(f: &FiniteMap) -> bool {
    f.values.iter().all(|&y| f.apply(y) == y)
}

/// An idempotent self-map with its image and fibers precomputed.
#[derive(Clone, Debug)]
pub struct Idempotent {
    map: FiniteMap,
    image: Vec<usize>,
    fibers: BTreeMap<usize, Vec<usize>>,
}

impl PartialEq for Idempotent {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
    }
}

impl Eq for Idempotent {}

impl PartialOrd for Idempotent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Idempotent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.map.cmp(&other.map)
    }
}

impl std::hash::Hash for Idempotent {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.map.hash(state)
    }
}

impl Idempotent {
    pub fn new(map: FiniteMap) -> Result<Self> {
        if !is_idempotent(&map) {
            return Err(Error::NotIdempotent);
        }
        let mut fibers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &y) in map.values.iter().enumerate() {
            fibers.entry(y).or_default().push(i + 1);
        }
        let image = fibers.keys().copied().collect();
        Ok(Idempotent { map, image, fibers })
    }

    pub fn from_values(values: Vec<usize>) -> Result<Self> {
        Idempotent::new(FiniteMap::new(values)?)
    }

    pub fn identity(n: usize) -> Self {
        Idempotent::new(FiniteMap::identity(n)).expect("identity is idempotent")
    }

    pub fn n(&self) -> usize {
        self.map.n()
    }

    pub fn map(&self) -> &FiniteMap {
        &self.map
    }

    pub fn into_map(self) -> FiniteMap {
        self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map.apply(x)
    }

    /// Fixed points, ascending.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_image_point(&self, x: usize) -> bool {
        self.fibers.contains_key(&x)
    }

    /// Sorted preimage of an image point; empty for non-image points.
    pub fn fiber(&self, x: usize) -> &[usize] {
        self.fibers.get(&x).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn fibers(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.fibers
    }
}

impl fmt::Display for Idempotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.map, f)
    }
}

/// Splits an idempotent into its image and the retraction
/// `[n] \ image -> image`.
pub fn decompose_idempotent(f: &Idempotent) -> (Vec<usize>, BTreeMap<usize, usize>) {
    let retraction = (1..=f.n())
        .filter(|&x| !f.is_image_point(x))
        .map(|x| (x, f.apply(x)))
        .collect();
    (f.image.clone(), retraction)
}

/// Glues `id_image` to `retraction`.
pub fn assemble_idempotent(
    n: usize,
    image: &[usize],
    retraction: &BTreeMap<usize, usize>,
) -> Result<Idempotent> {
    if image.is_empty() || image.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::InvalidImage { n });
    }
    let mut in_image = vec![false; n + 1];
    for &x in image {
        in_image[x] = true;
    }
    let mut values = vec![0; n];
    for &x in image {
        values[x - 1] = x;
    }
    for (&x, &y) in retraction {
        if x == 0 || x > n {
            return Err(Error::PointOutOfRange { point: x, n });
        }
        if in_image[x] {
            return Err(Error::RetractionOverlapsImage { point: x });
        }
        if y == 0 || y > n || !in_image[y] {
            return Err(Error::RetractionOutsideImage { point: x, value: y });
        }
        values[x - 1] = y;
    }
    if let Some(pos) = values.iter().position(|&v| v == 0) {
        return Err(Error::RetractionNotTotal { point: pos + 1 });
    }
    Idempotent::new(FiniteMap::from_values_unchecked(values))
}

/// Filters all `n^n` self-maps of `[n]`; `n <= 7`.
pub fn enumerate_idempotents_bruteforce(n: usize) -> Result<Vec<Idempotent>> {
    if n > BRUTE_FORCE_IDEMPOTENT_MAX {
        return Err(Error::TooLarge {
            what: "brute-force idempotent enumeration",
            n,
            max: BRUTE_FORCE_IDEMPOTENT_MAX,
        });
    }
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut values = vec![1; n];
    loop {
        let map = FiniteMap::from_values_unchecked(values.clone());
        if is_idempotent(&map) {
            out.push(Idempotent::new(map)?);
        }
        // odometer over [1..n]^n, last position fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if values[i] < n {
                values[i] += 1;
                break;
            }
            values[i] = 1;
        }
    }
}

/// Every idempotent on `[n]`, built from (image, retraction) pairs.
///
/// Image sets run through nonempty subsets in lexicographic order of their
/// sorted element lists; for each, retractions run in mixed-radix order over
/// the complement (last complement point fastest).
pub fn enumerate_idempotents(n: usize) -> Vec<Idempotent> {
    let mut out = Vec::new();
    for image in subsets_lex(n) {
        let mut in_image = vec![false; n + 1];
        for &x in &image {
            in_image[x] = true;
        }
        let rest: Vec<usize> = (1..=n).filter(|&x| !in_image[x]).collect();
        let mut digits = vec![0usize; rest.len()];
        let mut values: Vec<usize> = (1..=n).collect();
        loop {
            for (&x, &d) in rest.iter().zip(&digits) {
                values[x - 1] = image[d];
            }
            let map = FiniteMap::from_values_unchecked(values.clone());
            out.push(Idempotent::new(map).expect("identity on image plus retraction"));
            let mut i = digits.len();
            let done = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                if digits[i] + 1 < image.len() {
                    digits[i] += 1;
                    break false;
                }
                digits[i] = 0;
            };
            if done {
                break;
            }
        }
    }
    out
}

/// Nonempty subsets of `[n]` as sorted lists, in lexicographic order.
fn subsets_lex(n: usize) -> Vec<Vec<usize>> {
    fn extend(start: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for x in start..=n {
            cur.push(x);
            out.push(cur.clone());
            extend(x + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(1, n, &mut Vec::new(), &mut out);
    out
}

/// `k -> #{image points whose fiber has size k}`.
pub fn type_vector_of(f: &Idempotent) -> TypeVector {
    let mut tv = TypeVector::zeros(f.n());
    for fiber in f.fibers.values() {
        tv.bump(fiber.len());
    }
    tv
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn map(v: &[usize]) -> FiniteMap {
        FiniteMap::new(v.to_vec()).unwrap()
    }

    fn idem(v: &[usize]) -> Idempotent {
        Idempotent::from_values(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_examples() {
        let f = map(&[2, 2, 3]);
        assert_eq!(compose(&f, &FiniteMap::identity(3)).unwrap(), f);
        let c = FiniteMap::constant(3, 1).unwrap();
        assert_eq!(compose(&c, &map(&[3, 1, 2])).unwrap(), c);
        assert_eq!(compose(&f, &map(&[3, 1, 1])).unwrap(), map(&[3, 2, 2]));
        assert_eq!(
            compose(&f, &FiniteMap::identity(2)),
            Err(Error::SizeMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn finite_map_range_checks() {
        assert!(FiniteMap::new(vec![1, 4, 2]).is_err());
        assert!(FiniteMap::new(vec![0]).is_err());
        assert_eq!(
            map(&[1, 1]).try_apply(3),
            Err(Error::PointOutOfRange { point: 3, n: 2 })
        );
    }

    #[test]
    fn idempotence_examples() {
        for n in 1..6 {
            assert!(is_idempotent(&FiniteMap::identity(n)));
        }
        assert!(is_idempotent(&map(&[2, 2, 3])));
        assert!(!is_idempotent(&map(&[2, 3, 1])));
        assert!(!is_idempotent(&map(&[2, 1])));
        assert_eq!(Idempotent::new(map(&[2, 3, 1])), Err(Error::NotIdempotent));
    }

    #[test]
    fn idempotent_caches() {
        let f = idem(&[1, 2, 1, 4, 4]);
        assert_eq!(f.image(), &[1, 2, 4]);
        assert_eq!(f.fiber(1), &[1, 3]);
        assert_eq!(f.fiber(2), &[2]);
        assert_eq!(f.fiber(4), &[4, 5]);
        assert_eq!(f.fiber(3), &[] as &[usize]);
    }

    #[test]
    fn decompose_examples() {
        let (im, r) = decompose_idempotent(&Idempotent::identity(3));
        assert_eq!(im, vec![1, 2, 3]);
        assert!(r.is_empty());
        let (im, r) = decompose_idempotent(&idem(&[1, 1, 1]));
        assert_eq!(im, vec![1]);
        assert_eq!(r, BTreeMap::from([(2, 1), (3, 1)]));
        let (im, r) = decompose_idempotent(&idem(&[1, 2, 1]));
        assert_eq!(im, vec![1, 2]);
        assert_eq!(r, BTreeMap::from([(3, 1)]));
    }

    #[test]
    fn assemble_examples() {
        assert_eq!(
            assemble_idempotent(3, &[1, 2, 3], &BTreeMap::new()).unwrap(),
            Idempotent::identity(3)
        );
        assert_eq!(
            assemble_idempotent(3, &[2], &BTreeMap::from([(1, 2), (3, 2)])).unwrap(),
            idem(&[2, 2, 2])
        );
        assert_eq!(
            assemble_idempotent(4, &[1, 3], &BTreeMap::from([(2, 1), (4, 3)])).unwrap(),
            idem(&[1, 1, 3, 3])
        );
    }

    #[test]
    fn assemble_errors() {
        assert_eq!(
            assemble_idempotent(3, &[1], &BTreeMap::from([(2, 3), (3, 1)])),
            Err(Error::RetractionOutsideImage { point: 2, value: 3 })
        );
        assert_eq!(
            assemble_idempotent(3, &[1, 2], &BTreeMap::from([(2, 1), (3, 1)])),
            Err(Error::RetractionOverlapsImage { point: 2 })
        );
        assert_eq!(
            assemble_idempotent(3, &[1], &BTreeMap::from([(2, 1)])),
            Err(Error::RetractionNotTotal { point: 3 })
        );
        assert_eq!(
            assemble_idempotent(3, &[], &BTreeMap::new()),
            Err(Error::InvalidImage { n: 3 })
        );
    }

    #[test]
    fn bruteforce_small_cases() {
        assert_eq!(enumerate_idempotents_bruteforce(1).unwrap().len(), 1);
        let two: Vec<_> = enumerate_idempotents_bruteforce(2)
            .unwrap()
            .into_iter()
            .map(|f| f.map().values().to_vec())
            .collect();
        assert_eq!(two.len(), 3);
        for v in [[1, 2], [1, 1], [2, 2]] {
            assert!(two.contains(&v.to_vec()));
        }
        assert_eq!(enumerate_idempotents_bruteforce(3).unwrap().len(), 10);
        assert!(matches!(
            enumerate_idempotents_bruteforce(8),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn constructive_matches_bruteforce() {
        let expected = [1usize, 3, 10, 41, 196];
        for n in 1..=5 {
            let built = enumerate_idempotents(n);
            assert_eq!(built.len(), expected[n - 1]);
            let a: BTreeSet<_> = built.into_iter().collect();
            let b: BTreeSet<_> = enumerate_idempotents_bruteforce(n)
                .unwrap()
                .into_iter()
                .collect();
            assert_eq!(a.len(), expected[n - 1], "duplicates at n={n}");
            assert_eq!(a, b);
        }
    }

    #[test]
    fn decompose_assemble_round_trip() {
        for n in 1..=7 {
            for f in enumerate_idempotents(n) {
                assert!(is_idempotent(f.map()));
                let (im, r) = decompose_idempotent(&f);
                assert_eq!(assemble_idempotent(n, &im, &r).unwrap(), f);
                assert_eq!(type_vector_of(&f).weight(), n);
            }
        }
    }

    #[test]
    fn type_vector_examples() {
        assert_eq!(
            type_vector_of(&Idempotent::identity(3)).counts(),
            &[3, 0, 0]
        );
        assert_eq!(type_vector_of(&idem(&[1, 1, 1])).counts(), &[0, 0, 1]);
        assert_eq!(type_vector_of(&idem(&[1, 2, 1])).counts(), &[1, 1, 0]);
    }

    #[test]
    fn enumeration_order_starts_with_singleton_images() {
        let fs = enumerate_idempotents(3);
        let first: Vec<_> = fs
            .iter()
            .take(3)
            .map(|f| f.map().values().to_vec())
            .collect();
        // image {1}, then {1,2} with 3 -> 1, 3 -> 2
        assert_eq!(first, vec![vec![1, 1, 1], vec![1, 2, 1], vec![1, 2, 2]]);
        assert_eq!(fs.last().unwrap(), &idem(&[3, 3, 3]));
    }
}
