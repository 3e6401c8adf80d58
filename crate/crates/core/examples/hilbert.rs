// Hilbert function and h-vector of the base ring, counted from lattice points
// of the cone.
//
//     cargo run --example hilbert -- "n=4; {1,2,3,4},{2,3,4}"

use polycone::gorenstein::{self, DegreeCap};
use polycone::polymatroid::{self, Presentation};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let arg = args.first().cloned().unwrap_or_else(|| "n=4; {1,2,3,4},{2,3,4}".into());
    let p: Presentation = arg.parse().expect("presentation");
    let base = polymatroid::enumerate_bases(&p);
    let s = gorenstein::h_vector(&base, DegreeCap::Default).expect("series stabilizes");

    let num: Vec<String> = s
        .h
        .iter()
        .enumerate()
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c}t"),
            _ => format!("{c}t^{i}"),
        })
        .collect();
    println!("{p}");
    println!("H(t) = ({}) / (1-t)^{}", num.join(" + "), s.dim);
    println!("H(d), d = 0..{}: {:?}", s.degree_cap, s.hilbert_function);
    println!("lattice index {}", gorenstein::lattice_of(&base).index());
}
