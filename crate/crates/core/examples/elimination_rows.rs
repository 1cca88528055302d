// Eliminating one variable at a time: normal vectors, the scalar rows they
// produce, and the sign and antisymmetry pattern of the row coefficients.

use std::error::Error;

use knapsack_partitions::{augment_slack, elimination_row, normal_vector, validate, Target};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let instance = validate(&[(3, 1), (5, 2), (2, 1), (4, 3)], 17)?;
    let matrix = augment_slack(&instance);
    let s = Target::new(17, 9);

    for (j, &c) in matrix.columns().iter().enumerate() {
        let n = normal_vector(c);
        let row = elimination_row(&matrix, j, s)?;
        println!(
            "c{j} = {c:<7} n{j} = ({:>2}, {:>2})  l{j} = {:>4}  d{j} = {}",
            n.x, n.y, row.l, row.d
        );
        for i in (0..=matrix.m()).filter(|&i| i != j) {
            let dji = row.coefficient(i).unwrap();
            assert_eq!(dji > 0, i < j);
            assert_eq!(dji, -matrix.cross(i, j));
        }
    }
    println!("d_ji > 0 exactly when i < j, and d_ji = -d_ij");
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
