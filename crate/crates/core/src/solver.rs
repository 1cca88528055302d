//! Unbounded knapsack through double partitions.
//!
//! With a slack item `(1, 0)` the problem `max sum v_i x_i` subject to
//! `sum w_i x_i <= W` becomes: find the largest `V` for which the system
//! `sum w_i x_i = W, sum v_i x_i = V` has a nonnegative solution. The value
//! axis is scanned downward from `v_m = floor(W v_m / w_m)` through the
//! subintervals `I_m, I_{m-1}, ..., I_1`, evaluating in each the partial Cayley
//! sum of the terms that can be nonzero there.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cayley::{subinterval_table, CayleyEvaluator, Column, GeneratorMatrix};
use crate::error::{ReductionError, ValidationError};
use crate::partition::SignedCount;

/// A knapsack item with positive, coprime weight and value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Item {
    weight: u32,
    value: u32,
}

impl Item {
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    fn cmp_ratio(&self, other: &Item) -> Ordering {
        (u64::from(self.value) * u64::from(other.weight))
            .cmp(&(u64::from(other.value) * u64::from(self.weight)))
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.weight, self.value)
    }
}

/// Items sorted by strictly increasing value density, plus the capacity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UkpInstance {
    items: Vec<Item>,
    capacity: u64,
    removed_duplicates: Vec<Item>,
}

impl UkpInstance {
    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    /// Same items, different capacity.
    pub fn with_capacity(&self, capacity: u64) -> Self {
        Self {
            capacity,
            ..self.clone()
        }
    }

    /// Exact duplicates dropped by [`validate`], one entry per dropped copy.
    pub fn removed_duplicates(&self) -> &[Item] {
        &self.removed_duplicates
    }
}

/// Checks and canonicalizes a raw `(weight, value)` list.
///
/// Exact duplicates are dropped and reported through
/// [`UkpInstance::removed_duplicates`]; distinct items with equal density are
/// rejected.
pub fn validate(items: &[(i64, i64)], capacity: i64) -> Result<UkpInstance, ValidationError> {
    if items.is_empty() {
        return Err(ValidationError::EmptyInstance);
    }
    if capacity < 0 {
        return Err(ValidationError::NegativeCapacity(capacity));
    }

    let mut kept: Vec<Item> = Vec::with_capacity(items.len());
    let mut removed_duplicates = Vec::new();
    for (index, &(weight, value)) in items.iter().enumerate() {
        if weight < 0 || value < 0 {
            return Err(ValidationError::NegativeComponent {
                index,
                weight,
                value,
            });
        }
        if weight == 0 || value == 0 {
            return Err(ValidationError::ZeroComponent {
                index,
                weight,
                value,
            });
        }
        let (Ok(w), Ok(v)) = (u32::try_from(weight), u32::try_from(value)) else {
            return Err(ValidationError::ComponentTooLarge {
                index,
                weight,
                value,
            });
        };
        if w.gcd(&v) != 1 {
            return Err(ValidationError::NonCoprimeItem {
                index,
                weight,
                value,
            });
        }
        let item = Item {
            weight: w,
            value: v,
        };
        if kept.contains(&item) {
            removed_duplicates.push(item);
        } else {
            kept.push(item);
        }
    }

    kept.sort_by(Item::cmp_ratio);
    if let Some(pair) = kept
        .windows(2)
        .find(|pair| pair[0].cmp_ratio(&pair[1]) == Ordering::Equal)
    {
        // coprime pairs of equal density coincide, so only a regression reaches this
        return Err(ValidationError::DuplicateRatio(
            pair[0].weight,
            pair[0].value,
            pair[1].weight,
            pair[1].value,
        ));
    }

    Ok(UkpInstance {
        items: kept,
        capacity: capacity as u64,
        removed_duplicates,
    })
}

/// The generator matrix `(1, 0), c_1, ..., c_m` of a validated instance.
pub fn augment_slack(instance: &UkpInstance) -> GeneratorMatrix {
    let columns = std::iter::once(Column::SLACK)
        .chain(instance.items.iter().map(|item| {
            Column::new(item.weight, item.value).expect("items have positive components")
        }))
        .collect();
    GeneratorMatrix::new(columns).expect("validated instances satisfy the matrix invariants")
}

/// How each probe of the scan evaluates its partial sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvaluationOrder {
    /// Every term `k >= j` at every probe.
    #[default]
    Full,
    /// Evaluate `W_m` first and skip the probe when it is zero; otherwise
    /// the full partial sum. `W_m` counts solutions of the eliminated
    /// equation, and every solution of the two-row system projects to one,
    /// so a zero top term means a zero count.
    TopTermFirst,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub max_value: u64,
    /// Subinterval `I_j` holding `max_value`, `None` when it is 0.
    pub subinterval_found: Option<usize>,
    /// Number of solutions at `(W, max_value)`.
    pub count_at_max: SignedCount,
    /// Values of `V` evaluated by the scan.
    pub probes: usize,
}

/// `M(W)` by the descending subinterval scan, evaluating full partial sums.
pub fn solve_max_value(instance: &UkpInstance) -> Result<SolveResult, ReductionError> {
    solve_with_order(instance, EvaluationOrder::Full)
}

pub fn solve_with_order(
    instance: &UkpInstance,
    order: EvaluationOrder,
) -> Result<SolveResult, ReductionError> {
    let matrix = augment_slack(instance);
    let m = matrix.m();
    let table = subinterval_table(&matrix, instance.capacity);
    let evaluator = CayleyEvaluator::new(&matrix, instance.capacity)?;

    let mut probes = 0;
    for (j, range) in table.descending() {
        for v in range.rev() {
            probes += 1;
            let count = match order {
                EvaluationOrder::Full => evaluator.partial_sum(v, j)?,
                EvaluationOrder::TopTermFirst => {
                    if evaluator.term(m, v)?.is_zero() {
                        continue;
                    }
                    evaluator.partial_sum(v, j)?
                }
            };
            if count.is_positive() {
                return Ok(SolveResult {
                    max_value: v,
                    subinterval_found: Some(j),
                    count_at_max: count,
                    probes,
                });
            }
        }
    }

    // only the slack-only solution remains at V = 0
    Ok(SolveResult {
        max_value: 0,
        subinterval_found: None,
        count_at_max: SignedCount::one(),
        probes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::cayley_count;
    use crate::cayley::Target;
    use crate::oracle::{dp_knapsack_max, DEFAULT_BUDGET};
    use proptest::prelude::*;

    const THREE_ITEMS: [(i64, i64); 3] = [(4, 1), (7, 3), (5, 3)];

    fn pairs(instance: &UkpInstance) -> Vec<(u32, u32)> {
        instance
            .items()
            .iter()
            .map(|i| (i.weight(), i.value()))
            .collect()
    }

    fn columns(matrix: &GeneratorMatrix) -> Vec<(u32, u32)> {
        matrix
            .columns()
            .iter()
            .map(|c| (c.weight(), c.value()))
            .collect()
    }

    #[test]
    fn validate_sorts_by_density() {
        let instance = validate(&[(7, 3), (4, 1), (5, 3)], 10).unwrap();
        assert_eq!(pairs(&instance), vec![(4, 1), (7, 3), (5, 3)]);
        assert_eq!(instance.capacity(), 10);
        assert!(instance.removed_duplicates().is_empty());
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            validate(&[(4, 2)], 10),
            Err(ValidationError::NonCoprimeItem {
                index: 0,
                weight: 4,
                value: 2
            })
        );
        assert_eq!(validate(&[], 10), Err(ValidationError::EmptyInstance));
        assert_eq!(
            validate(&[(4, 1)], -1),
            Err(ValidationError::NegativeCapacity(-1))
        );
        assert!(matches!(
            validate(&[(4, 1), (0, 1)], 10),
            Err(ValidationError::ZeroComponent { index: 1, .. })
        ));
        assert!(matches!(
            validate(&[(4, 1), (3, -1)], 10),
            Err(ValidationError::NegativeComponent { index: 1, .. })
        ));
        assert!(matches!(
            validate(&[(1 << 33, 1)], 10),
            Err(ValidationError::ComponentTooLarge { .. })
        ));
    }

    #[test]
    fn validate_drops_exact_duplicates() {
        let instance = validate(&[(4, 1), (4, 1)], 10).unwrap();
        assert_eq!(pairs(&instance), vec![(4, 1)]);
        assert_eq!(instance.removed_duplicates().len(), 1);
    }

    #[test]
    fn augment_slack_examples() {
        let inst = validate(&THREE_ITEMS, 10).unwrap();
        assert_eq!(
            columns(&augment_slack(&inst)),
            vec![(1, 0), (4, 1), (7, 3), (5, 3)]
        );
        let single = validate(&[(2, 1)], 4).unwrap();
        assert_eq!(columns(&augment_slack(&single)), vec![(1, 0), (2, 1)]);
        let two = validate(&[(3, 1), (2, 1)], 4).unwrap();
        assert_eq!(columns(&augment_slack(&two)), vec![(1, 0), (3, 1), (2, 1)]);
    }

    #[test]
    fn solve_three_items() {
        let inst = validate(&THREE_ITEMS, 10).unwrap();
        let result = solve_max_value(&inst).unwrap();
        assert_eq!(result.max_value, 6);
        assert_eq!(result.subinterval_found, Some(3));
        assert_eq!(result.probes, 1);
        assert_eq!(result.count_at_max, SignedCount::from(1));

        let result = solve_max_value(&inst.with_capacity(3)).unwrap();
        assert_eq!((result.max_value, result.subinterval_found), (0, None));

        let result = solve_max_value(&inst.with_capacity(0)).unwrap();
        assert_eq!((result.max_value, result.probes), (0, 0));

        // floor(12 * 3/5) = 7 is out of reach, 6 is not
        let result = solve_max_value(&inst.with_capacity(12)).unwrap();
        assert_eq!(result.max_value, 6);
        assert_eq!(result.probes, 2);
    }

    #[test]
    fn single_item_degenerates_to_one_subinterval() {
        let instance = validate(&[(3, 2)], 10).unwrap();
        let result = solve_max_value(&instance).unwrap();
        assert_eq!(result.max_value, 6);
        assert_eq!(result.subinterval_found, Some(1));
    }

    fn instance_strategy() -> impl Strategy<Value = UkpInstance> {
        (
            prop::collection::vec((1i64..=9, 1i64..=9), 1..=4),
            0i64..=30,
        )
            .prop_filter_map("not a valid instance", |(items, w)| {
                validate(&items, w).ok()
            })
    }

    proptest! {
        #[test]
        fn matches_dp_oracle(instance in instance_strategy()) {
            let result = solve_max_value(&instance).unwrap();
            let opt = dp_knapsack_max(&instance, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(result.max_value, opt.max_value);
            let lazy = solve_with_order(&instance, EvaluationOrder::TopTermFirst).unwrap();
            prop_assert_eq!(lazy, result);
        }

        #[test]
        fn witness_bound_and_scan_count(instance in instance_strategy()) {
            let matrix = augment_slack(&instance);
            let w = instance.capacity();
            let top = subinterval_table(&matrix, w).top();
            let result = solve_max_value(&instance).unwrap();
            prop_assert!(result.max_value <= top);
            prop_assert!(result.probes as u64 <= top - result.max_value + 1);
            if result.max_value > 0 {
                prop_assert!(result.count_at_max >= SignedCount::one());
                prop_assert_eq!(
                    cayley_count(&matrix, Target::new(w, result.max_value)).unwrap(),
                    result.count_at_max.clone()
                );
                for v in result.max_value + 1..=top {
                    prop_assert!(cayley_count(&matrix, Target::new(w, v)).unwrap().is_zero());
                }
            }
        }

        #[test]
        fn monotone_in_capacity(instance in instance_strategy()) {
            let mut previous = 0;
            for w in 0..=instance.capacity() {
                let value = solve_max_value(&instance.with_capacity(w)).unwrap().max_value;
                prop_assert!(value >= previous);
                previous = value;
            }
        }
    }
}
