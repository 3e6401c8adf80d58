// Gorenstein test: palindromic h-vector, cross-checked against the minimal
// interior generators.
//
//     cargo run --example gorenstein -- "n=3; {1,2,3},{1,2,3}"

use polycone::gorenstein::{self, DegreeCap};
use polycone::polymatroid::{self, Presentation};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let targets: Vec<Presentation> = match args.first().cloned() {
        Some(s) => vec![s.parse().expect("presentation")],
        None => vec![
            polymatroid::cyclic_presentation(4).unwrap(),
            "n=3; {1,2},{1,2,3},{2,3}".parse().unwrap(),
            "n=3; {1,2,3},{1,2,3}".parse().unwrap(),
        ],
    };
    for p in targets {
        let s = gorenstein::is_gorenstein(&p, DegreeCap::Default).expect("within budget");
        let gens: Vec<String> = s.canonical_generators.iter().map(|g| g.to_string()).collect();
        println!(
            "{p}\n  h = {:?}  gorenstein = {}  interior generators: {}",
            s.h,
            s.gorenstein,
            gens.join(" ")
        );
    }
}
