//! Finite-dimensional modules L(lambda): standard tableaux, the Weyl
//! dimension and the action restricted to the standard basis.

use gelfand_tsetlin::{act, ActionMode, FiniteModule, Generator, GtVector, HighestWeight};

fn main() {
    for lambda in [vec![1, 0], vec![2, 1, 0], vec![2, 0, 0, -1]] {
        let module = FiniteModule::new(HighestWeight::new(lambda.clone()).unwrap());
        println!(
            "lambda {:?}: {} standard tableaux, Weyl dimension {}",
            lambda,
            module.standard_tableaux().len(),
            module.dimension()
        );
    }

    let module = FiniteModule::new(HighestWeight::new(vec![2, 1, 0]).unwrap());
    let hw = GtVector::basis(&module.highest_weight_tableau());
    println!("highest weight tableau {}", module.highest_weight_tableau());
    for g in Generator::chevalley(3) {
        println!("  {g} -> {}", act(g, &hw, ActionMode::Standard).unwrap());
    }
}
