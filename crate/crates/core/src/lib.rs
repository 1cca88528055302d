//! Exact unbounded knapsack through double partitions.
//!
//! The unbounded knapsack problem with items `(w_i, v_i)` and capacity `W`
//! is restated, with a slack item `(1, 0)`, as the question of which targets
//! `(W, V)` admit a nonnegative solution of the two-row system
//! `sum w_i x_i = W, sum v_i x_i = V`. Cayley's elimination writes the number
//! of such solutions as a signed sum of scalar partitions, and the optimum is
//! the largest `V` with a positive count.
//!
//! - [`partition`]: scalar partitions for positive and mixed-sign generators
//! - [`cayley`]: elimination rows, the Cayley sum, subinterval bounds
//! - [`solver`]: instance validation and the descending value scan
//! - [`oracle`]: brute-force references for all of the above
//! - [`cli`]: the `ukp` command line
//!
//! ```
//! use knapsack_partitions::solver::{solve_max_value, validate};
//!
//! let instance = validate(&[(4, 1), (7, 3), (5, 3)], 10).unwrap();
//! let result = solve_max_value(&instance).unwrap();
//! assert_eq!(result.max_value, 6);
//! assert_eq!(result.subinterval_found, Some(3));
//! ```

pub mod cayley;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod sample;
pub mod solver;

pub use cayley::{
    cayley_count, elimination_row, normal_vector, partial_sum, subinterval_table, term_breakdown,
    term_value, CayleyEvaluator, Column, EliminationRow, GeneratorMatrix, NormalVector,
    SubintervalTable, Target,
};
pub use error::{OracleError, PartitionError, ReductionError, ValidationError};
pub use partition::{count_nonneg, count_signed, GeneratorList, PartitionTable, SignedCount};
pub use solver::{
    augment_slack, solve_max_value, solve_with_order, validate, EvaluationOrder, Item, SolveResult,
    UkpInstance,
};
