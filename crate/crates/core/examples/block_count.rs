//! Counting the irreducible modules of a block from the d_pu table, checked
//! against a brute-force census of Omega-plus classes.

use gelfand_tsetlin::rational::{frac, int};
use gelfand_tsetlin::{block_count, census_box, d_table, enumerate_omega_classes, Seed};

fn main() {
    let seed = Seed::new(vec![
        vec![int(0), int(-1), frac(1, 3)],
        vec![int(0), frac(1, 3)],
        vec![frac(5, 7)],
    ])
    .unwrap();
    println!("seed {seed}");
    for ((p, u), d) in d_table(&seed) {
        println!("  d_{p}{u} = {d}");
    }
    println!("block count {}", block_count(&seed).unwrap());

    let bounds = census_box(&seed).unwrap();
    let poset = enumerate_omega_classes(&seed, &bounds).unwrap();
    println!(
        "census over {} shifts finds {} classes",
        bounds.size(),
        poset.len()
    );
    for (i, node) in poset.nodes.iter().enumerate() {
        println!(
            "  [{i}] Omega+ {:?} ({} shifts)",
            node.omega_plus, node.size
        );
    }
    println!("covers {:?}", poset.covers);
}
