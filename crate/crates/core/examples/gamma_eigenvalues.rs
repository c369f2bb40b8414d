//! Every tableau is an eigenvector of the generators c_mk of the
//! Gelfand-Tsetlin subalgebra.

use gelfand_tsetlin::random::{random_shift, rng, SeedSampler};
use gelfand_tsetlin::rational::format_rational;
use gelfand_tsetlin::{act_gamma_generator, gamma_eigenvalue, ActionMode, GtVector, Tableau};

fn main() {
    let mut r = rng(2024);
    let seed = SeedSampler::new(3).with_pool(4).sample(&mut r);
    let t = Tableau::new(&seed, random_shift(&mut r, 3, 2)).unwrap();
    let v = GtVector::basis(&t);
    println!("T = {t}");
    for m in 1..=3 {
        for k in 1..=m {
            let Ok(gamma) = gamma_eigenvalue(m, k, &t) else {
                println!("c_{m}{k}: row {m} has a repeated entry, skipped");
                continue;
            };
            let image = act_gamma_generator(m, k, &v, ActionMode::Generic).unwrap();
            println!(
                "c_{m}{k}: gamma = {:<12} c T == gamma T: {}",
                format_rational(&gamma),
                image == v.scaled(&gamma)
            );
        }
    }
}
