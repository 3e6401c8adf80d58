// Closed-form facets of the cyclic presentation {1,2},{2,3},…,{n,1}, checked
// against a from-scratch facet enumeration.
//
//     cargo run --release --example cyclic_facets -- 6

use polycone::cyclic;

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let n: usize = args.first().cloned().map_or(5, |s| s.parse().expect("n"));
    let predicted = cyclic::predicted_facets(n).expect("n >= 3");
    for (interval, h) in &predicted.normals {
        println!("{:?}  {}", interval.indices(), h.normal());
    }
    let r = cyclic::verify_cyclic_facets(n, n).expect("within budget");
    println!(
        "n={n}: {} facets computed, {} predicted, match {}, extreme rays ok {}",
        r.computed_facets.len(),
        r.predicted_facets.len(),
        r.facets_match,
        r.extreme_rays_ok
    );
}
