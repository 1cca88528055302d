// The value axis split into subintervals: which terms are live in each,
// the partial sums the scan evaluates, and the two evaluation orders.

use std::error::Error;

use knapsack_partitions::{
    augment_slack, solve_with_order, subinterval_table, validate, CayleyEvaluator, EvaluationOrder,
};
use num_traits::Zero;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let instance = validate(&[(5, 1), (8, 3), (6, 5), (1, 5)], 26)?;
    let matrix = augment_slack(&instance);
    let w = instance.capacity();
    let table = subinterval_table(&matrix, w);
    let eval = CayleyEvaluator::new(&matrix, w)?;

    println!("bounds: {:?}", table.bounds());
    for (j, range) in table.descending() {
        println!("I{j}: terms {j}..={} may be nonzero", matrix.m());
        for v in range.rev().take(4) {
            let live: Vec<String> = (j..=matrix.m())
                .map(|k| eval.term(k, v).map(|t| t.to_string()))
                .collect::<Result<_, _>>()?;
            let dead = (0..j).all(|k| eval.term(k, v).map(|t| t.is_zero()).unwrap_or(false));
            assert!(dead);
            println!(
                "  V={v:>3}  live terms [{}]  partial sum {}",
                live.join(", "),
                eval.partial_sum(v, j)?
            );
        }
    }

    let full = solve_with_order(&instance, EvaluationOrder::Full)?;
    let lazy = solve_with_order(&instance, EvaluationOrder::TopTermFirst)?;
    assert_eq!(full, lazy);
    println!(
        "M({w}) = {} in I{} after {} probes",
        full.max_value,
        full.subinterval_found.unwrap_or(0),
        full.probes
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
