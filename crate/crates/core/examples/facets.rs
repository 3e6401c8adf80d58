// Facets, span equations and extreme rays of the cone over the bases.
//
//     cargo run --example facets -- "n=4; {1,2},{2,3},{3,4}"

use polycone::geometry::{self, IntVector};
use polycone::polymatroid::{self, Presentation};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let arg = args.first().cloned().unwrap_or_else(|| "n=4; {1,2},{2,3},{3,4}".into());
    let p: Presentation = arg.parse().expect("presentation");
    let base = polymatroid::enumerate_bases(&p);
    let gens: Vec<IntVector> = base.points.iter().map(IntVector::from).collect();
    let cone = geometry::facet_enumeration(&gens).expect("pointed cone");

    println!("{p}: dim {} in R^{}", cone.dim, cone.ambient_dim);
    for e in &cone.span_equations {
        println!("  <{e}, x> = 0");
    }
    for f in &cone.facets {
        println!("  <{}, x> >= 0", f.normal());
    }
    let rays = geometry::extreme_rays(&cone);
    println!("{} extreme rays", rays.len());
    for r in rays {
        println!("  {r}");
    }
}
