// Enumerate the bases of a transversal polymatroid and check the exchange
// axiom.
//
//     cargo run --example bases -- "n=4; {1,2,3},{2,3,4}"

use polycone::polymatroid::{self, Presentation};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let arg = args.first().cloned().unwrap_or_else(|| "n=4; {1,2,3},{2,3,4}".into());
    let p: Presentation = arg.parse().expect("presentation");
    let base = polymatroid::enumerate_bases(&p);
    println!("{p}");
    println!("{} bases of degree {}", base.len(), base.degree_sum());
    for x in &base.points {
        println!("  {x}");
    }
    println!("exchange axiom: {}", polymatroid::check_base_exchange(&base.points));
    println!("canonical form: {}", polymatroid::canonical_form(&p));
}
