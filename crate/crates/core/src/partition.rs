//! Scalar partitions (denumerants).
//!
//! `count_nonneg(s, d)` is the number of nonnegative integer vectors `x` with
//! `s = x_1 d_1 + ... + x_k d_k`, i.e. the coefficient of `t^s` in
//! `prod 1 / (1 - t^{d_i})`. Counts are produced by the classical unbounded
//! coin-change recurrence and returned as arbitrary precision integers.
//!
//! Negative generators are handled by [`count_signed`] through the identity
//! `1 / (1 - t^{-a}) = -t^a / (1 - t^a)`: each negative entry flips the sign
//! and shifts the argument by its value.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::PartitionError;

/// Signed arbitrary precision count. Partition counts are never negative,
/// individual Cayley terms can be.
pub type SignedCount = BigInt;

/// Largest argument a [`PartitionTable`] will tabulate after gcd reduction.
pub const MAX_TABLE_ARGUMENT: i128 = 1 << 24;

/// An ordered list of nonzero generators. Duplicates are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorList(Vec<i128>);

impl GeneratorList {
    pub fn new(entries: Vec<i128>) -> Result<Self, PartitionError> {
        if entries.is_empty() {
            return Err(PartitionError::EmptyGenerators);
        }
        if let Some(index) = entries.iter().position(|&d| d == 0) {
            return Err(PartitionError::ZeroGenerator { index });
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i128] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negative_count(&self) -> usize {
        self.0.iter().filter(|&&d| d < 0).count()
    }

    /// Sum of the negative entries (zero if there are none).
    pub fn negative_sum(&self) -> i128 {
        self.0.iter().filter(|&&d| d < 0).sum()
    }

    /// Entrywise absolute values.
    pub fn abs(&self) -> GeneratorList {
        GeneratorList(self.0.iter().map(|d| d.abs()).collect())
    }

    fn check_positive(&self) -> Result<(), PartitionError> {
        match self.0.iter().position(|&d| d < 0) {
            Some(index) => Err(PartitionError::NonPositiveGenerator {
                index,
                value: self.0[index],
            }),
            None => Ok(()),
        }
    }
}

impl TryFrom<Vec<i128>> for GeneratorList {
    type Error = PartitionError;

    fn try_from(entries: Vec<i128>) -> Result<Self, Self::Error> {
        Self::new(entries)
    }
}

impl fmt::Display for GeneratorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone)]
enum Counts {
    Small(Vec<u128>),
    Big(Vec<BigInt>),
}

/// Denumerants `W(s, d)` for every `0 <= s <= limit` and a fixed list of
/// positive generators.
///
/// The generators are divided by their gcd before tabulation, so only
/// multiples of the gcd occupy table space. Counts are kept in `u128` and
/// the table is rebuilt with big integers if any entry overflows.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    gcd: i128,
    limit: i128,
    counts: Counts,
}

impl PartitionTable {
    pub fn new(generators: &GeneratorList, limit: i128) -> Result<Self, PartitionError> {
        generators.check_positive()?;
        let gcd = generators
            .entries()
            .iter()
            .fold(0i128, |acc, &d| acc.gcd(&d));
        let limit = limit.max(0);
        let reduced_limit = limit / gcd;
        if reduced_limit > MAX_TABLE_ARGUMENT {
            return Err(PartitionError::ArgumentTooLarge {
                argument: limit,
                limit: MAX_TABLE_ARGUMENT * gcd,
            });
        }
        let size = reduced_limit as usize + 1;
        let steps: Vec<usize> = generators
            .entries()
            .iter()
            .map(|&d| d / gcd)
            .filter(|&d| d < size as i128)
            .map(|d| d as usize)
            .collect();

        let counts = match small_table(&steps, size) {
            Some(table) => Counts::Small(table),
            None => Counts::Big(big_table(&steps, size)),
        };
        Ok(Self { gcd, limit, counts })
    }

    pub fn limit(&self) -> i128 {
        self.limit
    }

    /// `W(s, d)`, or `None` when `s` lies above the tabulated range.
    pub fn count(&self, s: i128) -> Option<SignedCount> {
        if s < 0 {
            return Some(BigInt::zero());
        }
        if s > self.limit {
            return None;
        }
        if s % self.gcd != 0 {
            return Some(BigInt::zero());
        }
        let index = (s / self.gcd) as usize;
        Some(match &self.counts {
            Counts::Small(table) => BigInt::from(table[index]),
            Counts::Big(table) => table[index].clone(),
        })
    }

    /// Like [`count`](Self::count), reporting an out-of-range argument as an error.
    pub fn try_count(&self, s: i128) -> Result<SignedCount, PartitionError> {
        self.count(s).ok_or(PartitionError::ArgumentTooLarge {
            argument: s,
            limit: self.limit,
        })
    }
}

fn small_table(steps: &[usize], size: usize) -> Option<Vec<u128>> {
    let mut table = vec![0u128; size];
    table[0] = 1;
    for &step in steps {
        for s in step..size {
            table[s] = table[s].checked_add(table[s - step])?;
        }
    }
    Some(table)
}

fn big_table(steps: &[usize], size: usize) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); size];
    table[0] = BigInt::one();
    for &step in steps {
        for s in step..size {
            let (lo, hi) = table.split_at_mut(s);
            hi[0] += &lo[s - step];
        }
    }
    table
}

/// Number of nonnegative solutions of `s = sum x_i d_i` for positive `d`.
///
/// Returns 1 for `s = 0` and 0 for `s < 0`.
pub fn count_nonneg(s: i128, d: &GeneratorList) -> Result<SignedCount, PartitionError> {
    d.check_positive()?;
    if s < 0 {
        return Ok(BigInt::zero());
    }
    PartitionTable::new(d, s)?.try_count(s)
}

/// Coefficient of `t^l` in `prod 1 / (1 - t^{d_i})` for generators of either
/// sign, each factor with a negative exponent expanded in positive powers
/// of `t`.
///
/// With `K` negative entries this is `(-1)^K * W(l + sum_{d_i<0} d_i, |d|)`.
pub fn count_signed(l: i128, d: &GeneratorList) -> Result<SignedCount, PartitionError> {
    let negatives = d.negative_count();
    if negatives == 0 {
        return count_nonneg(l, d);
    }
    let shifted = l
        .checked_add(d.negative_sum())
        .ok_or(PartitionError::ArgumentTooLarge {
            argument: l,
            limit: MAX_TABLE_ARGUMENT,
        })?;
    let magnitude = count_nonneg(shifted, &d.abs())?;
    Ok(if negatives % 2 == 1 {
        -magnitude
    } else {
        magnitude
    })
}
