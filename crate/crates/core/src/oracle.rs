//! Brute-force reference implementations.
//!
//! Nothing here shares code with the partition or elimination paths. Each
//! routine checks its work estimate against a step budget first and refuses
//! to run rather than truncate.

use num_bigint::BigInt;

use crate::cayley::{GeneratorMatrix, Target};
use crate::error::OracleError;
use crate::partition::{GeneratorList, SignedCount};
use crate::solver::UkpInstance;

/// Default enumeration budget, in elementary steps.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Multiplicities `x_0, ..., x_m`, aligned with the matrix columns
/// (`x_0` is the slack).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SolutionVector(pub Vec<u64>);

impl SolutionVector {
    pub fn slack(&self) -> u64 {
        self.0[0]
    }

    /// `(sum w_i x_i, sum v_i x_i)` including the slack column.
    pub fn totals(&self, matrix: &GeneratorMatrix) -> (u128, u128) {
        matrix
            .columns()
            .iter()
            .zip(&self.0)
            .fold((0, 0), |(w, v), (c, &x)| {
                (
                    w + u128::from(c.weight()) * u128::from(x),
                    v + u128::from(c.value()) * u128::from(x),
                )
            })
    }
}

fn check_budget(required: u128, budget: u128) -> Result<(), OracleError> {
    if required > budget {
        Err(OracleError::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

fn enumerate_vector(
    matrix: &GeneratorMatrix,
    s: Target,
    budget: u128,
    mut visit: impl FnMut(&[u64]),
) -> Result<(), OracleError> {
    let items = &matrix.columns()[1..];
    let required = items.iter().fold(1u128, |acc, c| {
        acc.saturating_mul(u128::from(s.w / u64::from(c.weight())) + 1)
    });
    check_budget(required, budget)?;

    fn descend(
        items: &[crate::cayley::Column],
        index: usize,
        rem_w: u64,
        rem_v: u64,
        x: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[u64]),
    ) {
        if index == 0 {
            if rem_v == 0 {
                x[0] = rem_w;
                visit(x);
            }
            return;
        }
        let c = items[index - 1];
        let (w, v) = (u64::from(c.weight()), u64::from(c.value()));
        let most = (rem_w / w).min(rem_v / v);
        for k in 0..=most {
            x[index] = k;
            descend(items, index - 1, rem_w - k * w, rem_v - k * v, x, visit);
        }
        x[index] = 0;
    }

    let mut x = vec![0u64; items.len() + 1];
    descend(items, items.len(), s.w, s.v, &mut x, &mut visit);
    Ok(())
}

/// Number of `x >= 0` with `sum w_i x_i = W` and `sum v_i x_i = V`, by
/// exhaustive enumeration of the item multiplicities.
pub fn brute_force_vector_count(
    matrix: &GeneratorMatrix,
    s: Target,
    budget: u128,
) -> Result<SignedCount, OracleError> {
    let mut count = 0u128;
    enumerate_vector(matrix, s, budget, |_| count += 1)?;
    Ok(BigInt::from(count))
}

/// Every solution of the two-row system, in enumeration order.
pub fn brute_force_vector_solutions(
    matrix: &GeneratorMatrix,
    s: Target,
    budget: u128,
) -> Result<Vec<SolutionVector>, OracleError> {
    let mut out = Vec::new();
    enumerate_vector(matrix, s, budget, |x| out.push(SolutionVector(x.to_vec())))?;
    Ok(out)
}

/// Number of `x >= 0` with `sum d_i x_i = s`, by enumerating all but the
/// last multiplicity.
pub fn brute_force_scalar_count(
    s: i128,
    d: &GeneratorList,
    budget: u128,
) -> Result<SignedCount, OracleError> {
    let gens = d.entries();
    if let Some(index) = gens.iter().position(|&g| g < 0) {
        return Err(crate::error::PartitionError::NonPositiveGenerator {
            index,
            value: gens[index],
        }
        .into());
    }
    if s < 0 {
        return Ok(BigInt::from(0));
    }
    let (last, rest) = gens.split_last().expect("generator lists are nonempty");
    let required = rest
        .iter()
        .fold(1u128, |acc, &g| acc.saturating_mul((s / g) as u128 + 1));
    check_budget(required, budget)?;

    fn descend(rest: &[i128], last: i128, remaining: i128) -> u128 {
        match rest.split_first() {
            None => u128::from(remaining % last == 0),
            Some((&g, tail)) => (0..=remaining / g)
                .map(|k| descend(tail, last, remaining - k * g))
                .sum(),
        }
    }
    Ok(BigInt::from(descend(rest, *last, s)))
}

/// Optimum of an unbounded knapsack instance and a witness achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnapsackOptimum {
    pub max_value: u64,
    pub witness: SolutionVector,
}

/// Classical exact-fill table: `best[c]` is the largest value of a multiset
/// of items weighing exactly `c`. The optimum is the best entry over
/// `c <= W`, the slack taking the residual capacity.
///
/// The witness uses the smallest weight reaching the optimum and, while
/// backtracking, always the lowest item index that is consistent.
pub fn dp_knapsack_max(
    instance: &UkpInstance,
    budget: u128,
) -> Result<KnapsackOptimum, OracleError> {
    let items = instance.items();
    let capacity = instance.capacity();
    let required = (u128::from(capacity) + 1) * items.len() as u128;
    check_budget(required, budget)?;

    let size = capacity as usize + 1;
    let mut best: Vec<Option<u64>> = vec![None; size];
    best[0] = Some(0);
    for c in 1..size {
        best[c] = items
            .iter()
            .filter(|item| item.weight() as usize <= c)
            .filter_map(|item| {
                best[c - item.weight() as usize].map(|b| b + u64::from(item.value()))
            })
            .max();
    }

    let (filled, max_value) = best
        .iter()
        .enumerate()
        .filter_map(|(c, b)| b.map(|b| (c, b)))
        .fold((0, 0), |acc, (c, b)| if b > acc.1 { (c, b) } else { acc });

    let mut x = vec![0u64; items.len() + 1];
    x[0] = capacity - filled as u64;
    let mut c = filled;
    while c > 0 {
        let current = best[c].expect("backtracking stays on reachable weights");
        let (i, item) = items
            .iter()
            .enumerate()
            .find(|(_, item)| {
                let w = item.weight() as usize;
                w <= c && best[c - w].map(|b| b + u64::from(item.value())) == Some(current)
            })
            .expect("reachable weight has a predecessor");
        x[i + 1] += 1;
        c -= item.weight() as usize;
    }
    Ok(KnapsackOptimum {
        max_value,
        witness: SolutionVector(x),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::Column;
    use crate::solver::{augment_slack, validate};

    fn three_items(capacity: i64) -> UkpInstance {
        validate(&[(4, 1), (7, 3), (5, 3)], capacity).unwrap()
    }

    fn gens(d: &[i128]) -> GeneratorList {
        GeneratorList::new(d.to_vec()).unwrap()
    }

    #[test]
    fn vector_counts() {
        let d = augment_slack(&three_items(10));
        assert_eq!(
            brute_force_vector_count(&d, Target::new(10, 6), DEFAULT_BUDGET).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            brute_force_vector_count(&d, Target::new(0, 0), DEFAULT_BUDGET).unwrap(),
            BigInt::from(1)
        );
        let sols = brute_force_vector_solutions(&d, Target::new(10, 4), DEFAULT_BUDGET).unwrap();
        assert_eq!(sols, vec![SolutionVector(vec![1, 1, 0, 1])]);
        for sol in brute_force_vector_solutions(&d, Target::new(20, 6), DEFAULT_BUDGET).unwrap() {
            assert_eq!(sol.totals(&d), (20, 6));
        }
    }

    #[test]
    fn scalar_counts() {
        let count = |s, d: &[i128]| brute_force_scalar_count(s, &gens(d), DEFAULT_BUDGET).unwrap();
        assert_eq!(count(5, &[1, 2]), BigInt::from(3));
        assert_eq!(count(0, &[9]), BigInt::from(1));
        assert_eq!(count(20, &[3, 7, 6]), BigInt::from(2));
        assert_eq!(count(-1, &[3]), BigInt::from(0));
        assert!(brute_force_scalar_count(3, &gens(&[1, -2]), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn budgets_are_enforced() {
        let d = GeneratorMatrix::new(vec![Column::SLACK, Column::new(1, 1).unwrap()]).unwrap();
        assert_eq!(
            brute_force_vector_count(&d, Target::new(1000, 3), 100),
            Err(OracleError::BudgetExceeded {
                required: 1001,
                budget: 100
            })
        );
        assert!(matches!(
            brute_force_scalar_count(10_000, &gens(&[1, 1, 1, 1]), 1_000_000),
            Err(OracleError::BudgetExceeded { .. })
        ));
        assert!(dp_knapsack_max(&three_items(1_000), 10).is_err());
    }

    #[test]
    fn dp_optimum_three_items() {
        let opt = dp_knapsack_max(&three_items(10), DEFAULT_BUDGET).unwrap();
        assert_eq!(opt.max_value, 6);
        assert_eq!(opt.witness, SolutionVector(vec![0, 0, 0, 2]));
        let opt = dp_knapsack_max(&three_items(3), DEFAULT_BUDGET).unwrap();
        assert_eq!(opt.max_value, 0);
        assert_eq!(opt.witness, SolutionVector(vec![3, 0, 0, 0]));
        let single = validate(&[(1, 1)], 5).unwrap();
        let opt = dp_knapsack_max(&single, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            (opt.max_value, opt.witness),
            (5, SolutionVector(vec![0, 5]))
        );
    }

    #[test]
    fn witnesses_are_valid_and_deterministic() {
        for capacity in 0..=40 {
            let instance = three_items(capacity);
            let d = augment_slack(&instance);
            let opt = dp_knapsack_max(&instance, DEFAULT_BUDGET).unwrap();
            assert_eq!(opt, dp_knapsack_max(&instance, DEFAULT_BUDGET).unwrap());
            assert_eq!(
                opt.witness.totals(&d),
                (u128::from(capacity as u64), u128::from(opt.max_value))
            );
            if opt.max_value > 0 {
                let s = Target::new(capacity as u64, opt.max_value);
                assert!(
                    brute_force_vector_count(&d, s, DEFAULT_BUDGET).unwrap() >= BigInt::from(1)
                );
            }
        }
    }

    #[test]
    fn witness_is_aligned_with_sorted_items() {
        // (2,3) sorts after (1,1); W = 3 takes one of each
        let instance = validate(&[(2, 3), (1, 1)], 3).unwrap();
        let opt = dp_knapsack_max(&instance, DEFAULT_BUDGET).unwrap();
        assert_eq!(opt.max_value, 4);
        assert_eq!(opt.witness, SolutionVector(vec![0, 1, 1]));
    }
}
