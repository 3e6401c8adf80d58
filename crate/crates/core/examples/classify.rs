// All Gorenstein base rings of transversal polymatroids on [n], up to
// relabelling and reordering of the sets.
//
//     cargo run --release --example classify -- 4

use polycone::classify::{self, ClassifyOptions};

fn main() {
    run(std::env::args().skip(1).collect());
}

pub fn run(args: Vec<String>) {
    let n: usize = args.first().cloned().map_or(3, |s| s.parse().expect("n"));
    let c = classify::classify(&ClassifyOptions::new(n)).expect("within budget");
    println!(
        "n={n}: {} multisets, {} classes, {} Gorenstein",
        c.multisets_examined,
        c.classes_examined,
        c.gorenstein_classes.len()
    );
    for g in &c.gorenstein_classes {
        let tag = if g.families.is_empty() {
            String::new()
        } else {
            format!("  [{}]", g.families.join(", "))
        };
        println!("  {:<40} dim {} h {:?}{tag}", g.representative, g.dim, g.h);
    }
    println!("missing reference families: {:?}", c.families_missing);
    for note in &c.notes {
        println!("note: {note}");
    }
}
