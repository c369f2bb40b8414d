//! When do two generic seeds label the same irreducible module, and which
//! tableaux span the irreducible module of a class.

use gelfand_tsetlin::rational::{frac, int};
use gelfand_tsetlin::{basis_i_in_box, seeds_same_irreducible, Seed, Shift, ShiftBox, Tableau};

fn main() {
    let seed = Seed::new(vec![
        vec![int(0), frac(1, 3), frac(2, 3)],
        vec![int(0), frac(4, 3)],
        vec![int(0)],
    ])
    .unwrap();
    let swapped = Seed::new(vec![
        vec![int(0), frac(1, 3), frac(2, 3)],
        vec![frac(4, 3), int(0)],
        vec![int(0)],
    ])
    .unwrap();
    let raised = Seed::new(vec![
        vec![int(0), frac(1, 3), frac(2, 3)],
        vec![int(1), frac(4, 3)],
        vec![int(0)],
    ])
    .unwrap();
    println!(
        "seed vs row-2 swap:   {}",
        seeds_same_irreducible(&seed, &swapped).unwrap()
    );
    println!(
        "seed vs raised r_21:  {}",
        seeds_same_irreducible(&seed, &raised).unwrap()
    );

    let bounds = ShiftBox::cube(3, 3).unwrap();
    for coords in [[0, 0, 0], [1, 0, 0], [0, -1, 0]] {
        let t = Tableau::new(&seed, Shift::new(3, coords.to_vec()).unwrap()).unwrap();
        let class = basis_i_in_box(&t, &bounds).unwrap();
        println!(
            "I-class of {}: {} of {} shifts",
            t.shift(),
            class.len(),
            bounds.size()
        );
    }
}
