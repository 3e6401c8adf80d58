// Cone membership two ways: the facet description and an exact LP over the
// generators. They must agree.
//
//     cargo run --example membership -- 2 1 1 0

use polycone::geometry::{self, IntVector};
use polycone::lp::ConeOracle;
use polycone::polymatroid;

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let p = polymatroid::cyclic_presentation(4).unwrap();
    let gens: Vec<IntVector> = polymatroid::enumerate_bases(&p).points.iter().map(IntVector::from).collect();
    let cone = geometry::facet_enumeration(&gens).unwrap();
    let mut lp = ConeOracle::new(&gens);

    let coords: Vec<i64> = args.iter().map(|s| s.parse().expect("integer")).collect();
    let queries = if coords.len() == 4 {
        vec![coords]
    } else {
        vec![vec![2, 1, 1, 0], vec![3, 0, 0, 1], vec![1, 1, 1, 1], vec![0, 0, 0, 0], vec![4, 0, 1, 1]]
    };
    for q in queries {
        let x = IntVector::from_i64s(&q);
        let by_facets = cone.contains(&x);
        let by_lp = lp.contains(&x);
        println!("{x}: facets {by_facets}, lp {by_lp}");
        assert_eq!(by_facets, by_lp);
    }
}
