//! The gl(3) action on one tableau: Chevalley generators, a general E_ij and
//! a check of the defining relations.

use gelfand_tsetlin::rational::{frac, int};
use gelfand_tsetlin::{
    act, commutator_defect, ActionMode, Generator, GtVector, Seed, Shift, Tableau,
};

fn main() {
    let seed = Seed::new(vec![
        vec![int(0), frac(1, 3), frac(2, 3)],
        vec![int(0), frac(4, 3)],
        vec![int(0)],
    ])
    .unwrap();
    let t = Tableau::new(&seed, Shift::new(3, vec![1, -1, 0]).unwrap()).unwrap();
    let v = GtVector::basis(&t);
    println!("T = {t}");
    for g in Generator::all(3) {
        println!("{g} T = {}", act(g, &v, ActionMode::Generic).unwrap());
    }

    let mut failures = 0;
    for a in Generator::all(3) {
        for b in Generator::all(3) {
            if !commutator_defect(a, b, &v, ActionMode::Generic)
                .unwrap()
                .is_zero()
            {
                failures += 1;
            }
        }
    }
    println!("nonzero commutator defects over all 81 pairs: {failures}");
}
