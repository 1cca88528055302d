// Scalar partitions: counting with positive generators, the sign-flip rule
// for negative ones, reusable tables, and growth past 128-bit integers.

use std::error::Error;

use knapsack_partitions::{count_nonneg, count_signed, GeneratorList, PartitionTable};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let coins = GeneratorList::new(vec![1, 2, 5, 10, 25, 50])?;
    println!(
        "ways to change 100 with {coins}: {}",
        count_nonneg(100, &coins)?
    );

    let d = GeneratorList::new(vec![3, 7, 6])?;
    for s in [0, 13, 20, -4] {
        println!("W({s:>3}, {d}) = {}", count_nonneg(s, &d)?);
    }

    // one negative generator: -W(l - 3, {2, 3})
    let mixed = GeneratorList::new(vec![2, -3])?;
    for l in 0..=6 {
        println!("W({l}, {mixed}) = {:>2}", count_signed(l, &mixed)?);
    }

    let table = PartitionTable::new(&GeneratorList::new(vec![4, 6, 10])?, 40)?;
    let row: Vec<String> = (0..=40)
        .step_by(2)
        .map(|s| table.count(s).unwrap().to_string())
        .collect();
    println!("W(s, {{4,6,10}}) for even s <= 40: {}", row.join(" "));

    let parts: Vec<i128> = (1..=30).collect();
    let many = GeneratorList::new(parts)?;
    let big = count_nonneg(5_000, &many)?;
    println!(
        "partitions of 5000 into parts <= 30 has {} digits",
        big.to_string().len()
    );
    assert!(big > u128::MAX.into());
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
