macro_rules! example_test {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                run_example().unwrap();
            }
        }
    };
}

example_test!(symplectic_basics);
example_test!(curve_table);
example_test!(chain_calculus);
example_test!(johnson_tau);
example_test!(bcj_sigma);
example_test!(relations);
example_test!(abelianization_rank);
example_test!(orbit_closure);
example_test!(disjointness_graph);
