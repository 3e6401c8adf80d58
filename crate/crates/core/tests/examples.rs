// Every example runs with its default arguments.

macro_rules! example {
    ($name:ident, $file:literal, [$($arg:literal),*]) => {
        mod $name {
            #![allow(dead_code)]
            include!($file);
        }

        #[test]
        fn $name() {
            $name::run(vec![$($arg.to_string()),*]);
        }
    };
}

example!(bases, "../examples/bases.rs", []);
example!(facets, "../examples/facets.rs", []);
example!(cyclic_facets, "../examples/cyclic_facets.rs", []);
example!(hilbert, "../examples/hilbert.rs", []);
example!(gorenstein, "../examples/gorenstein.rs", []);
example!(classify, "../examples/classify.rs", []);
example!(normaliz_export, "../examples/normaliz_export.rs", []);
example!(membership, "../examples/membership.rs", []);
example!(membership_with_point, "../examples/membership.rs", ["5", "0", "1", "2"]);
example!(facets_of_a_lower_dimensional_cone, "../examples/facets.rs", ["n=4; {1,2},{1,2}"]);
