//! Exact integer primitives, integer partitions and type vectors.
//!
//! Everything that counts in this crate is a [`BigNat`]: factorials grow past
//! `u64` at 21 and the per-type sums for p(50) are far beyond that.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision nonnegative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigNat(BigUint);

impl BigNat {
    pub fn zero() -> Self {
        BigNat(BigUint::zero())
    }

    pub fn one() -> Self {
        BigNat(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Exact quotient, or `None` when `divisor` is zero or leaves a remainder.
    pub fn div_exact(&self, divisor: &BigNat) -> Option<BigNat> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then_some(BigNat(q))
    }

    /// Remainder modulo a nonzero divisor.
    pub fn rem(&self, divisor: &BigNat) -> BigNat {
        BigNat(&self.0 % &divisor.0)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    /// `self^exp`.
    pub fn pow(&self, exp: u32) -> BigNat {
        BigNat(self.0.pow(exp))
    }
}

impl From<u64> for BigNat {
    fn from(v: u64) -> Self {
        BigNat(BigUint::from(v))
    }
}

impl From<usize> for BigNat {
    fn from(v: usize) -> Self {
        BigNat(BigUint::from(v))
    }
}

impl From<u32> for BigNat {
    fn from(v: u32) -> Self {
        BigNat(BigUint::from(v))
    }
}

impl From<BigUint> for BigNat {
    fn from(v: BigUint) -> Self {
        BigNat(v)
    }
}

impl std::str::FromStr for BigNat {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<BigUint>().map(BigNat)
    }
}

impl fmt::Display for BigNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Add for BigNat {
    type Output = BigNat;
    fn add(self, rhs: BigNat) -> BigNat {
        BigNat(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a BigNat> for BigNat {
    type Output = BigNat;
    fn add(self, rhs: &'a BigNat) -> BigNat {
        BigNat(self.0 + &rhs.0)
    }
}

impl<'a> Add<&'a BigNat> for &'a BigNat {
    type Output = BigNat;
    fn add(self, rhs: &'a BigNat) -> BigNat {
        BigNat(&self.0 + &rhs.0)
    }
}

impl AddAssign for BigNat {
    fn add_assign(&mut self, rhs: BigNat) {
        self.0 += rhs.0;
    }
}

impl<'a> AddAssign<&'a BigNat> for BigNat {
    fn add_assign(&mut self, rhs: &'a BigNat) {
        self.0 += &rhs.0;
    }
}

impl Mul for BigNat {
    type Output = BigNat;
    fn mul(self, rhs: BigNat) -> BigNat {
        BigNat(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a BigNat> for BigNat {
    type Output = BigNat;
    fn mul(self, rhs: &'a BigNat) -> BigNat {
        BigNat(self.0 * &rhs.0)
    }
}

impl<'a> Mul<&'a BigNat> for &'a BigNat {
    type Output = BigNat;
    fn mul(self, rhs: &'a BigNat) -> BigNat {
        BigNat(&self.0 * &rhs.0)
    }
}

impl MulAssign for BigNat {
    fn mul_assign(&mut self, rhs: BigNat) {
        self.0 *= rhs.0;
    }
}

impl<'a> MulAssign<&'a BigNat> for BigNat {
    fn mul_assign(&mut self, rhs: &'a BigNat) {
        self.0 *= &rhs.0;
    }
}

impl Sum for BigNat {
    fn sum<I: Iterator<Item = BigNat>>(iter: I) -> BigNat {
        iter.fold(BigNat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a BigNat> for BigNat {
    fn sum<I: Iterator<Item = &'a BigNat>>(iter: I) -> BigNat {
        iter.fold(BigNat::zero(), |acc, x| acc + x)
    }
}

impl Product for BigNat {
    fn product<I: Iterator<Item = BigNat>>(iter: I) -> BigNat {
        iter.fold(BigNat::one(), |acc, x| acc * x)
    }
}

/// `n!`
pub fn factorial(n: u64) -> BigNat {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    BigNat(acc)
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigNat {
    if k < 0 || k as u64 > n {
        return BigNat::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    // acc = C(n - k + i, i) after step i; each division is exact
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    BigNat(acc)
}

/// Binomial with a signed upper index; a negative upper index counts as an
/// impossible selection.
pub fn binomial_signed(n: i64, k: i64) -> BigNat {
    if n < 0 {
        return BigNat::zero();
    }
    binomial(n as u64, k)
}

/// A partition of `n`: nonincreasing positive parts summing to `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` into nonincreasing order. Returns `None` if any part is 0.
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting from `[n]`
/// and ending at `[1, 1, ..., 1]`. For `n = 0` this is the single empty
/// partition.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition { parts: Vec::new() });
        return out;
    }
    let mut parts = vec![n];
    loop {
        out.push(Partition {
            parts: parts.clone(),
        });
        // drop the trailing ones, then decrement the last part > 1
        let mut ones = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        let Some(last) = parts.last_mut() else {
            break;
        };
        *last -= 1;
        let cap = *last;
        let mut rest = ones + 1;
        while rest > 0 {
            let take = rest.min(cap);
            parts.push(take);
            rest -= take;
        }
    }
    out
}

/// The function `k -> g(k)` on `1..=n`, stored densely.
///
/// `g(k)` is the number of blocks (or fibers) of size `k`. Its weight
/// `sum_k k * g(k)` is the size of the underlying set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeVector {
    counts: Vec<usize>,
}

impl TypeVector {
    /// Builds a type vector of length `counts.len()`; `counts[k - 1]` is `g(k)`.
    /// Returns `None` if some entry exceeds the length.
    pub fn new(counts: Vec<usize>) -> Option<Self> {
        let n = counts.len();
        if counts.iter().any(|&c| c > n) {
            return None;
        }
        Some(TypeVector { counts })
    }

    pub fn zeros(n: usize) -> Self {
        TypeVector { counts: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    /// `g(k)` for `1 <= k <= n`, and 0 elsewhere.
    pub fn get(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.counts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn weight(&self) -> usize {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1) * c)
            .sum()
    }

    /// Whether the vector lies in `V_n`, i.e. its weight equals its length.
    pub fn is_balanced(&self) -> bool {
        self.weight() == self.n()
    }

    pub(crate) fn bump(&mut self, k: usize) {
        self.counts[k - 1] += 1;
    }

    /// Parts in nonincreasing order.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for k in (1..=self.n()).rev() {
            parts.extend(std::iter::repeat(k).take(self.get(k)));
        }
        Partition { parts }
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Multiplicity vector of a partition. The partition must be nonempty.
pub fn partition_to_type_vector(p: &Partition) -> TypeVector {
    let n = p.n();
    let mut tv = TypeVector::zeros(n);
    for &part in p.parts() {
        tv.bump(part);
    }
    tv
}

/// `V_n` in the order induced by [`enumerate_partitions`].
pub fn enumerate_type_vectors(n: usize) -> Vec<TypeVector> {
    if n == 0 {
        return Vec::new();
    }
    enumerate_partitions(n)
        .iter()
        .map(partition_to_type_vector)
        .collect()
}

fn pentagonal_table() -> &'static Mutex<Vec<BigNat>> {
    static TABLE: OnceLock<Mutex<Vec<BigNat>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![BigNat::one()]))
}

/// p(n) from Euler's pentagonal number recurrence. The table is shared and
/// grown on demand under a mutex.
pub fn p_pentagonal(n: usize) -> BigNat {
    let mut table = pentagonal_table().lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let i = table.len();
        // positive and negative terms are accumulated apart to stay unsigned
        let mut plus = BigNat::zero();
        let mut minus = BigNat::zero();
        for j in 1usize.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let acc = if j % 2 == 1 { &mut plus } else { &mut minus };
            *acc += &table[i - g1];
            if g2 <= i {
                *acc += &table[i - g2];
            }
        }
        let value = BigNat(plus.0 - minus.0);
        table.push(value);
    }
    table[n].clone()
}
