//! The submodule generated by a tableau, once by the Omega-plus criterion and
//! once by breadth-first search through the action.

use gelfand_tsetlin::rational::{frac, int};
use gelfand_tsetlin::{basis_i_in_box, basis_n_in_box, closure_bfs, Seed, ShiftBox, Tableau};

fn main() {
    let seed = Seed::new(vec![
        vec![int(0), frac(1, 3), frac(2, 3)],
        vec![int(0), frac(4, 3)],
        vec![int(0)],
    ])
    .unwrap();
    let r = Tableau::origin(&seed);
    let bounds = ShiftBox::cube(3, 2).unwrap();

    let n_basis = basis_n_in_box(&r, &bounds).unwrap();
    let reached: Vec<_> = closure_bfs(&r, &bounds, 3).unwrap().into_iter().collect();
    let i_basis = basis_i_in_box(&r, &bounds).unwrap();
    println!("box [-2,2]^3 holds {} tableaux", bounds.size());
    println!("N-basis (criterion):  {}", n_basis.len());
    println!("reached by the action: {}", reached.len());
    println!("agree: {}", n_basis == reached);
    println!("I-basis: {} tableaux", i_basis.len());
    for t in i_basis.iter().take(5) {
        println!("  {}", t.shift());
    }
}
