macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(three_items, "three_items.rs");
example!(scalar_partitions, "scalar_partitions.rs");
example!(elimination_rows, "elimination_rows.rs");
example!(chamber_scan, "chamber_scan.rs");
example!(solve_knapsack, "solve_knapsack.rs");
example!(oracle_crosscheck, "oracle_crosscheck.rs");
