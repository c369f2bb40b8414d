//! Generic Gelfand–Tsetlin modules of `gl(n)` in exact rational arithmetic.
//!
//! A generic seed tableau `T(L)` spans an infinite-dimensional module
//! `V(T(L))` whose basis is the lattice of tableaux `T(L + z)` for integer
//! shifts `z` of the rows below the top. The crate provides
//!
//! * the lattice itself ([`tableau`]) and the `Ω`/`Ω⁺` invariants that
//!   classify its submodules ([`omega`]),
//! * the Gelfand–Tsetlin action of `gl(n)` and of the Gelfand–Tsetlin
//!   subalgebra generators ([`action`]),
//! * submodule bases, reachability closures and block counting
//!   ([`structure`]),
//! * finite-dimensional modules `L(λ)` for validation ([`findim`]),
//! * reproducible random seeds ([`random`]), the invariant suites
//!   ([`verify`]) and the JSON documents and subcommands of the
//!   `gelfand-tsetlin` binary ([`document`], [`commands`]).

pub mod action;
pub mod commands;
pub mod document;
pub mod error;
pub mod findim;
pub mod omega;
pub mod random;
pub mod rational;
pub mod structure;
pub mod tableau;
pub mod vector;
pub mod verify;

pub use action::{
    act, act_cartan, act_gamma_generator, act_lowering, act_raising, act_word, commutator_defect,
    gamma_eigenvalue, ActionMode, Actor, Generator, WordOrder,
};
pub use error::{Error, Result};
pub use findim::{is_standard, weyl_dimension, FiniteModule, HighestWeight};
pub use omega::{
    omega_plus_set, omega_set, omega_value, same_class, seeds_same_irreducible, OmegaSet,
    OmegaTriple,
};
pub use rational::Rational;
pub use structure::{
    basis_i_in_box, basis_n_in_box, block_count, census_box, census_radius, closure_bfs, d_pu,
    d_table, enumerate_omega_classes, find_intermediate_index, generates_same_submodule,
    one_step_successors, ClassPoset, ReachabilityGraph, ShiftBox,
};
pub use tableau::{Seed, Shift, Tableau};
pub use vector::GtVector;
pub use verify::{CheckOutcome, Sampling, Suite, SuiteReport};
