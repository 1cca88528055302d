//! Double partitions by variable elimination.
//!
//! A two-row system `s = sum c_i x_i` with primitive, pairwise noncollinear
//! columns `c_i = (w_i, v_i)` ordered by increasing density `v_i / w_i` is
//! reduced to `m + 1` scalar partitions. Eliminating `x_j` with the normal
//! `n_j = (v_j, -w_j)` gives the scalar equation
//!
//! ```text
//! l_j = sum_{i != j} d_ji x_i,   l_j = W v_j - V w_j,   d_ji = w_i v_j - v_i w_j
//! ```
//!
//! and the number of solutions of the original system is
//! `sum_j count_signed(l_j, d_j)`. Individual terms can be negative; the
//! total never is.
//!
//! For a fixed capacity `W` the value axis splits into subintervals
//! `I_j = [v_{j-1} + 1, v_j]` with `v_j = floor(W v_j / w_j)`. Inside `I_j`
//! only the terms `k >= j` are nonzero, and above `v_m` every term vanishes.

use std::cmp::Ordering;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::ReductionError;
use crate::partition::{count_signed, GeneratorList, PartitionTable, SignedCount};

/// A generator column `(weight, value)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Column {
    weight: u32,
    value: u32,
}

impl Column {
    /// The slack column `(1, 0)`.
    pub const SLACK: Column = Column {
        weight: 1,
        value: 0,
    };

    pub fn new(weight: u32, value: u32) -> Result<Self, ReductionError> {
        if weight == 0 && value == 0 {
            return Err(ReductionError::ZeroColumn);
        }
        Ok(Self { weight, value })
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_primitive(&self) -> bool {
        self.weight.gcd(&self.value) == 1
    }

    /// Compares `value / weight` densities without division.
    pub fn cmp_ratio(&self, other: &Column) -> Ordering {
        let lhs = u64::from(self.value) * u64::from(other.weight);
        let rhs = u64::from(other.value) * u64::from(self.weight);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.weight, self.value)
    }
}

/// Integer normal `(v, -w)` of a column `(w, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormalVector {
    pub x: i64,
    pub y: i64,
}

impl NormalVector {
    pub fn dot(&self, weight: u64, value: u64) -> i128 {
        i128::from(self.x) * i128::from(weight) + i128::from(self.y) * i128::from(value)
    }
}

pub fn normal_vector(c: Column) -> NormalVector {
    NormalVector {
        x: i64::from(c.value),
        y: -i64::from(c.weight),
    }
}

/// The target `s = (W, V)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Target {
    pub w: u64,
    pub v: u64,
}

impl Target {
    pub fn new(w: u64, v: u64) -> Self {
        Self { w, v }
    }
}

/// Columns `c_0 = (1, 0), c_1, ..., c_m` with strictly increasing density.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorMatrix {
    columns: Vec<Column>,
}

impl GeneratorMatrix {
    /// Checks the slack column, primitivity and strict density order.
    pub fn new(columns: Vec<Column>) -> Result<Self, ReductionError> {
        match columns.first() {
            None => return Err(ReductionError::NoItems),
            Some(&c) if c != Column::SLACK => {
                return Err(ReductionError::MissingSlack {
                    weight: c.weight,
                    value: c.value,
                })
            }
            _ => {}
        }
        if columns.len() < 2 {
            return Err(ReductionError::NoItems);
        }
        for (index, c) in columns.iter().enumerate().skip(1) {
            if !c.is_primitive() {
                return Err(ReductionError::NonPrimitiveColumn {
                    index,
                    weight: c.weight,
                    value: c.value,
                });
            }
            // zero weight would make the top bound infinite
            if c.weight == 0 || c.cmp_ratio(&columns[index - 1]) != Ordering::Greater {
                return Err(ReductionError::RatioOrder {
                    index,
                    prev: index - 1,
                });
            }
        }
        Ok(Self { columns })
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> Option<Column> {
        self.columns.get(j).copied()
    }

    /// Index of the last column; the matrix has `m + 1` columns.
    pub fn m(&self) -> usize {
        self.columns.len() - 1
    }

    fn check_index(&self, j: usize) -> Result<Column, ReductionError> {
        self.column(j).ok_or(ReductionError::IndexOutOfRange {
            index: j,
            max: self.m(),
        })
    }

    /// `d_ji = w_i v_j - v_i w_j`.
    pub fn cross(&self, j: usize, i: usize) -> i128 {
        let n = normal_vector(self.columns[j]);
        let c = self.columns[i];
        n.dot(u64::from(c.weight), u64::from(c.value))
    }
}

/// The scalar equation `l = sum_{i != j} d_ji x_i` left after eliminating `x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationRow {
    pub j: usize,
    pub l: i128,
    pub d: GeneratorList,
}

impl EliminationRow {
    /// `d_ji` for column index `i`, `None` for `i == j` or out of range.
    pub fn coefficient(&self, i: usize) -> Option<i128> {
        match i.cmp(&self.j) {
            Ordering::Less => self.d.entries().get(i).copied(),
            Ordering::Equal => None,
            Ordering::Greater => self.d.entries().get(i - 1).copied(),
        }
    }
}

pub fn elimination_row(
    matrix: &GeneratorMatrix,
    j: usize,
    s: Target,
) -> Result<EliminationRow, ReductionError> {
    let cj = matrix.check_index(j)?;
    let l = normal_vector(cj).dot(s.w, s.v);
    let d = (0..matrix.columns.len())
        .filter(|&i| i != j)
        .map(|i| matrix.cross(j, i))
        .collect();
    Ok(EliminationRow {
        j,
        l,
        d: GeneratorList::new(d)?,
    })
}

/// The signed scalar partition `W(l_j, d_j)` of one row.
pub fn term_value(row: &EliminationRow) -> Result<SignedCount, ReductionError> {
    Ok(count_signed(row.l, &row.d)?)
}

/// Per-column contributions `(j, W_j(s))` in index order.
pub fn term_breakdown(
    matrix: &GeneratorMatrix,
    s: Target,
) -> Result<Vec<(usize, SignedCount)>, ReductionError> {
    (0..=matrix.m())
        .map(|j| Ok((j, term_value(&elimination_row(matrix, j, s)?)?)))
        .collect()
}

/// Number of nonnegative solutions of `s = D x`, as the sum of all row terms.
pub fn cayley_count(matrix: &GeneratorMatrix, s: Target) -> Result<SignedCount, ReductionError> {
    let mut total = BigInt::zero();
    for (_, term) in term_breakdown(matrix, s)? {
        total += term;
    }
    Ok(total)
}

/// `sum_{k=j..m} W_k(s)`; equals [`cayley_count`] when `s.v` lies in `I_j`.
pub fn partial_sum(
    matrix: &GeneratorMatrix,
    s: Target,
    j: usize,
) -> Result<SignedCount, ReductionError> {
    if j == 0 || j > matrix.m() {
        return Err(ReductionError::IndexOutOfRange {
            index: j,
            max: matrix.m(),
        });
    }
    let mut total = BigInt::zero();
    for k in j..=matrix.m() {
        total += term_value(&elimination_row(matrix, k, s)?)?;
    }
    Ok(total)
}

/// Bounds `v_j = floor(W v_j / w_j)` splitting `[1, v_m]` into the
/// subintervals `I_j = [v_{j-1} + 1, v_j]`, `j = 1..=m`. Some may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubintervalTable {
    bounds: Vec<u64>,
}

impl SubintervalTable {
    pub fn bounds(&self) -> &[u64] {
        &self.bounds
    }

    pub fn m(&self) -> usize {
        self.bounds.len() - 1
    }

    /// `v_m`, the largest value that can carry a nonzero count.
    pub fn top(&self) -> u64 {
        self.bounds[self.m()]
    }

    /// `I_j` for `1 <= j <= m`, `None` if empty or out of range.
    pub fn subinterval(&self, j: usize) -> Option<RangeInclusive<u64>> {
        if j == 0 || j > self.m() || self.bounds[j - 1] == self.bounds[j] {
            return None;
        }
        Some(self.bounds[j - 1] + 1..=self.bounds[j])
    }

    /// Index `j` with `v` in `I_j`.
    pub fn locate(&self, v: u64) -> Option<usize> {
        if v == 0 || v > self.top() {
            return None;
        }
        Some(self.bounds.partition_point(|&b| b < v))
    }

    /// Nonempty subintervals from `I_m` down to `I_1`.
    pub fn descending(&self) -> impl Iterator<Item = (usize, RangeInclusive<u64>)> + '_ {
        (1..=self.m())
            .rev()
            .filter_map(|j| self.subinterval(j).map(|r| (j, r)))
    }
}

pub fn subinterval_table(matrix: &GeneratorMatrix, capacity: u64) -> SubintervalTable {
    let bounds = matrix
        .columns
        .iter()
        .map(|c| {
            let scaled = u128::from(capacity) * u128::from(c.value) / u128::from(c.weight);
            u64::try_from(scaled).unwrap_or(u64::MAX)
        })
        .collect();
    SubintervalTable { bounds }
}

#[derive(Debug, Clone)]
struct RowKernel {
    column: Column,
    shift: i128,
    negative: bool,
    table: PartitionTable,
}

/// Cayley terms for a fixed matrix and capacity, with the scalar partition
/// tables of every row built once.
///
/// Only `l_j = W v_j - V w_j` depends on `V`, so one table per row, covering
/// every argument reachable for `V >= 0`, serves the whole value axis.
#[derive(Debug, Clone)]
pub struct CayleyEvaluator {
    capacity: u64,
    rows: Vec<RowKernel>,
}

impl CayleyEvaluator {
    pub fn new(matrix: &GeneratorMatrix, capacity: u64) -> Result<Self, ReductionError> {
        let rows = (0..=matrix.m())
            .map(|j| {
                let row = elimination_row(matrix, j, Target::new(capacity, 0))?;
                let shift = row.d.negative_sum();
                let table = PartitionTable::new(&row.d.abs(), row.l + shift)?;
                Ok(RowKernel {
                    column: matrix.columns[j],
                    shift,
                    negative: row.d.negative_count() % 2 == 1,
                    table,
                })
            })
            .collect::<Result<Vec<_>, ReductionError>>()?;
        Ok(Self { capacity, rows })
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    pub fn m(&self) -> usize {
        self.rows.len() - 1
    }

    /// `W_j((W, v))`.
    pub fn term(&self, j: usize, v: u64) -> Result<SignedCount, ReductionError> {
        let row = self.rows.get(j).ok_or(ReductionError::IndexOutOfRange {
            index: j,
            max: self.m(),
        })?;
        let l = normal_vector(row.column).dot(self.capacity, v);
        let count = row.table.try_count(l + row.shift)?;
        Ok(if row.negative { -count } else { count })
    }

    pub fn breakdown(&self, v: u64) -> Result<Vec<(usize, SignedCount)>, ReductionError> {
        (0..=self.m()).map(|j| Ok((j, self.term(j, v)?))).collect()
    }

    pub fn count(&self, v: u64) -> Result<SignedCount, ReductionError> {
        self.partial_sum(v, 0)
    }

    /// `sum_{k=j..m} W_k((W, v))`. Unlike [`partial_sum`], `j = 0` is
    /// accepted and gives the full count.
    pub fn partial_sum(&self, v: u64, j: usize) -> Result<SignedCount, ReductionError> {
        let mut total = BigInt::zero();
        for k in j..=self.m() {
            total += self.term(k, v)?;
        }
        Ok(total)
    }
}
