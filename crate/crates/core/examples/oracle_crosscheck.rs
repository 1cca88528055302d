// Random instances checked against the brute-force oracles, the same
// comparison `ukp selftest` performs.

use std::error::Error;

use knapsack_partitions::oracle::{brute_force_vector_count, dp_knapsack_max, DEFAULT_BUDGET};
use knapsack_partitions::sample::{random_instance, SizeCaps};
use knapsack_partitions::{
    augment_slack, cayley_count, solve_max_value, subinterval_table, Target,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2025);
    let caps = SizeCaps::default();
    let mut targets = 0;
    for _ in 0..40 {
        let instance = random_instance(&mut rng, caps);
        let matrix = augment_slack(&instance);
        let w = instance.capacity();
        for v in 0..=subinterval_table(&matrix, w).top() + 3 {
            let s = Target::new(w, v);
            assert_eq!(
                cayley_count(&matrix, s)?,
                brute_force_vector_count(&matrix, s, DEFAULT_BUDGET)?
            );
            targets += 1;
        }
        assert_eq!(
            solve_max_value(&instance)?.max_value,
            dp_knapsack_max(&instance, DEFAULT_BUDGET)?.max_value
        );
    }
    println!("40 instances, {targets} targets: Cayley sums match enumeration");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
