// The three-item instance (4,1), (7,3), (5,3) with capacity 10, end to end:
// generator matrix, elimination rows, signed terms for every value, and the
// optimum found by the subinterval scan.

use std::error::Error;

use knapsack_partitions::{
    augment_slack, cayley_count, elimination_row, solve_max_value, subinterval_table,
    term_breakdown, validate, Target,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let instance = validate(&[(4, 1), (7, 3), (5, 3)], 10)?;
    let matrix = augment_slack(&instance);
    let w = instance.capacity();

    println!("columns:");
    for (j, c) in matrix.columns().iter().enumerate() {
        println!("  c{j} = {c}");
    }

    let table = subinterval_table(&matrix, w);
    println!("bounds v_j for W = {w}: {:?}", table.bounds());
    for (j, range) in table.descending() {
        println!("  I{j} = [{}, {}]", range.start(), range.end());
    }

    println!("elimination rows at s = (10, 2):");
    for j in 0..=matrix.m() {
        let row = elimination_row(&matrix, j, Target::new(w, 2))?;
        println!("  j={j}: l={:>4} d={}", row.l, row.d);
    }

    println!("signed terms per value:");
    for v in 0..=table.top() + 1 {
        let s = Target::new(w, v);
        let terms: Vec<String> = term_breakdown(&matrix, s)?
            .into_iter()
            .map(|(_, t)| format!("{t:>3}"))
            .collect();
        println!(
            "  V={v:>2}  terms [{}]  count {}",
            terms.join(" "),
            cayley_count(&matrix, s)?
        );
    }

    let result = solve_max_value(&instance)?;
    assert_eq!(result.max_value, 6);
    println!(
        "M({w}) = {} found in I{} after {} probe(s), {} solution(s)",
        result.max_value,
        result.subinterval_found.unwrap_or(0),
        result.probes,
        result.count_at_max
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
