// Solving instances by the partition scan and comparing with the classical
// dynamic program, including its witness.

use std::error::Error;

use knapsack_partitions::oracle::{dp_knapsack_max, DEFAULT_BUDGET};
use knapsack_partitions::{solve_max_value, validate};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cases: &[(&[(i64, i64)], i64)] = &[
        (&[(4, 1), (7, 3), (5, 3)], 12),
        (&[(2, 1)], 9),
        (&[(7, 2), (9, 4), (11, 7), (13, 9)], 100),
        (&[(23, 31), (29, 41), (31, 45), (37, 55)], 500),
    ];
    for &(items, capacity) in cases {
        let instance = validate(items, capacity)?;
        let result = solve_max_value(&instance)?;
        let dp = dp_knapsack_max(&instance, DEFAULT_BUDGET)?;
        assert_eq!(result.max_value, dp.max_value);
        println!(
            "W={capacity:<4} items {items:?}\n  M(W) = {} (I{}, {} probes, {} solutions at the optimum), dp witness {:?}",
            result.max_value,
            result
                .subinterval_found
                .map_or("-".to_string(), |j| j.to_string()),
            result.probes,
            result.count_at_max,
            dp.witness.0
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
