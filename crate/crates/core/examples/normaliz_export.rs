// Write the bases as a Normaliz input file and read it back.
//
//     cargo run --example normaliz_export -- "n=4; {1,2},{2,3},{3,4},{1,4}" > a.in

use polycone::normaliz;
use polycone::polymatroid::{self, Presentation};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let arg = args.first().cloned().unwrap_or_else(|| "n=3; {1,2},{2,3},{1,3}".into());
    let p: Presentation = arg.parse().expect("presentation");
    let base = polymatroid::enumerate_bases(&p);
    let text = normaliz::emit(&base);
    print!("{text}");
    let back = normaliz::parse(&text).expect("own output parses");
    assert_eq!(back, base.points);
}
