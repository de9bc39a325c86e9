//! Runs every example's `main` so they cannot rot.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(two_over_n_table);
example!(loaf_division);
example!(hau_false_position);
example!(tunnu_and_ladder);
example!(circle_quadrature);
example!(edfu_survey);
example!(seked_pyramid);
example!(rope_stretchers);
example!(duplation);
example!(corpus_replay);
