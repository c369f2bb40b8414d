//! Omega and Omega-plus of a seed and of a few shifted tableaux.

use gelfand_tsetlin::rational::{format_rational, frac, int};
use gelfand_tsetlin::{
    omega_plus_set, omega_set, omega_value, same_class, OmegaTriple, Seed, Shift, Tableau,
};

fn main() {
    let seed = Seed::new(vec![
        vec![int(0), frac(1, 3), frac(2, 3)],
        vec![int(0), frac(4, 3)],
        vec![int(0)],
    ])
    .unwrap();
    let origin = Tableau::origin(&seed);
    println!("seed      {seed}");
    println!("Omega     {}", omega_set(&origin));
    println!("Omega+    {}", omega_plus_set(&origin));
    for triple in OmegaTriple::all(3) {
        let w = omega_value(&origin, &triple).unwrap();
        println!(
            "  omega({},{},{}) = {}",
            triple.p,
            triple.s,
            triple.u,
            format_rational(&w)
        );
    }

    for coords in [[-1, 0, -1], [1, 0, 0], [0, -1, 0]] {
        let t = Tableau::new(&seed, Shift::new(3, coords.to_vec()).unwrap()).unwrap();
        println!(
            "shift {:<10} Omega+ {:<22} same class as seed: {}",
            t.shift().to_string(),
            omega_plus_set(&t).to_string(),
            same_class(&origin, &t).unwrap()
        );
    }
}
