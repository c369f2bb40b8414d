//! Cross-row integrality invariants.
//!
//! For a tableau `T(R)` and a triple `(p, s, u)` with `1 < p <= n`,
//! `1 <= s <= p`, `1 <= u <= p-1`, the value `ω_{p,s,u} = r_{p,s} - r_{p-1,u}`
//! compares an entry with an entry of the row below. `Ω` collects the triples
//! where this difference is an integer and `Ω⁺` those where it is a
//! non-negative integer. `Ω⁺` classifies the submodules generated by single
//! tableaux in a generic lattice.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{is_nonnegative_integer, Rational};
use crate::tableau::{Seed, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OmegaTriple {
    pub p: usize,
    pub s: usize,
    pub u: usize,
}

impl OmegaTriple {
    pub fn new(n: usize, p: usize, s: usize, u: usize) -> Result<Self> {
        if p < 2 || p > n || s == 0 || s > p || u == 0 || u >= p {
            return Err(Error::bounds(format!(
                "triple ({p},{s},{u}) is outside the range for height {n}"
            )));
        }
        Ok(OmegaTriple { p, s, u })
    }

    /// Every triple for height `n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = OmegaTriple> {
        (2..=n)
            .flat_map(|p| (1..=p).flat_map(move |s| (1..p).map(move |u| OmegaTriple { p, s, u })))
    }
}

impl fmt::Display for OmegaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.s, self.u)
    }
}

/// A finite set of triples, always iterated in sorted order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OmegaSet(BTreeSet<OmegaTriple>);

impl OmegaSet {
    pub fn new() -> Self {
        OmegaSet(BTreeSet::new())
    }

    pub fn insert(&mut self, triple: OmegaTriple) -> bool {
        self.0.insert(triple)
    }

    pub fn contains(&self, triple: &OmegaTriple) -> bool {
        self.0.contains(triple)
    }

    pub fn is_subset(&self, other: &OmegaSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &OmegaTriple> {
        self.0.iter()
    }

    /// Sorted `[p, s, u]` lists, the canonical serialized form.
    pub fn to_sorted_vec(&self) -> Vec<[usize; 3]> {
        self.0.iter().map(|t| [t.p, t.s, t.u]).collect()
    }
}

impl FromIterator<OmegaTriple> for OmegaSet {
    fn from_iter<I: IntoIterator<Item = OmegaTriple>>(iter: I) -> Self {
        OmegaSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a OmegaSet {
    type Item = &'a OmegaTriple;
    type IntoIter = std::collections::btree_set::Iter<'a, OmegaTriple>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for OmegaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.0.iter().map(ToString::to_string).join(",")
        )
    }
}

fn check_triple(n: usize, triple: &OmegaTriple) -> Result<()> {
    OmegaTriple::new(n, triple.p, triple.s, triple.u).map(|_| ())
}

/// `ω_{p,s,u}(T) = r_{p,s} - r_{p-1,u}`.
pub fn omega_value(t: &Tableau<'_>, triple: &OmegaTriple) -> Result<Rational> {
    check_triple(t.n(), triple)?;
    Ok(t.entry_unchecked(triple.p, triple.s) - t.entry_unchecked(triple.p - 1, triple.u))
}

/// `rows[p - 1]` is row `p`.
pub(crate) fn omega_sets_of_rows(rows: &[Vec<Rational>]) -> (OmegaSet, OmegaSet) {
    let mut all = OmegaSet::new();
    let mut plus = OmegaSet::new();
    for triple in OmegaTriple::all(rows.len()) {
        let w = &rows[triple.p - 1][triple.s - 1] - &rows[triple.p - 2][triple.u - 1];
        if w.is_integer() {
            all.insert(triple);
            if is_nonnegative_integer(&w) {
                plus.insert(triple);
            }
        }
    }
    (all, plus)
}

pub(crate) fn omega_plus_of_rows(rows: &[Vec<Rational>]) -> OmegaSet {
    omega_sets_of_rows(rows).1
}

/// `Ω(T)`: triples with integer `ω`.
pub fn omega_set(t: &Tableau<'_>) -> OmegaSet {
    omega_sets_of_rows(&t.rows()).0
}

/// `Ω⁺(T)`: triples with non-negative integer `ω`.
pub fn omega_plus_set(t: &Tableau<'_>) -> OmegaSet {
    omega_plus_of_rows(&t.rows())
}

/// `Ω` of the seed itself; shared by every tableau of its lattice.
pub fn seed_omega(seed: &Seed) -> OmegaSet {
    omega_set(&Tableau::origin(seed))
}

/// Whether two tableaux over one seed carry the same `Ω⁺`.
pub fn same_class(t1: &Tableau<'_>, t2: &Tableau<'_>) -> Result<bool> {
    if !t1.same_seed(t2) {
        return Err(Error::usage("tableaux belong to different seeds"));
    }
    Ok(omega_plus_set(t1) == omega_plus_set(t2))
}

/// Whether two generic seeds label the same irreducible module.
///
/// Searches every row-wise permutation `g` of `s1`: the permuted seed must
/// have exactly the top row of `s2`, integer differences from `s2` in the
/// other rows, and the same `Ω⁺` as `s2`.
pub fn seeds_same_irreducible(s1: &Seed, s2: &Seed) -> Result<bool> {
    if s1.n() != s2.n() {
        return Err(Error::usage(format!(
            "seeds have different heights {} and {}",
            s1.n(),
            s2.n()
        )));
    }
    s1.require_generic()?;
    s2.require_generic()?;
    let n = s1.n();

    // Admissible permutations of each row, rows indexed by p - 1.
    let mut candidates: Vec<Vec<Vec<Rational>>> = Vec::with_capacity(n);
    for p in 1..=n {
        let target = s2.row(p);
        let perms: Vec<Vec<Rational>> = s1
            .row(p)
            .iter()
            .cloned()
            .permutations(p)
            .filter(|perm| {
                perm.iter().zip(target).all(|(a, b)| {
                    let d = a - b;
                    if p == n {
                        num_traits::Zero::is_zero(&d)
                    } else {
                        d.is_integer()
                    }
                })
            })
            .collect();
        if perms.is_empty() {
            return Ok(false);
        }
        candidates.push(perms);
    }

    let reference = omega_plus_of_rows(&(1..=n).map(|p| s2.row(p).to_vec()).collect::<Vec<_>>());
    for rows in candidates.into_iter().multi_cartesian_product() {
        if omega_plus_of_rows(&rows) == reference {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::tableau::Shift;

    fn linked_seed() -> Seed {
        // (a, b, c | a, b+1 | a) at a = 0, b = 1/3, c = 2/3
        Seed::new(vec![
            vec![int(0), frac(1, 3), frac(2, 3)],
            vec![int(0), frac(4, 3)],
            vec![int(0)],
        ])
        .unwrap()
    }

    fn set(triples: &[(usize, usize, usize)]) -> OmegaSet {
        triples
            .iter()
            .map(|&(p, s, u)| OmegaTriple { p, s, u })
            .collect()
    }

    #[test]
    fn triple_bounds() {
        assert!(OmegaTriple::new(3, 3, 3, 2).is_ok());
        assert!(OmegaTriple::new(3, 1, 1, 1).is_err());
        assert!(OmegaTriple::new(3, 3, 4, 1).is_err());
        assert!(OmegaTriple::new(3, 3, 1, 3).is_err());
        assert!(OmegaTriple::new(3, 4, 1, 1).is_err());
        assert_eq!(OmegaTriple::all(3).count(), 8);
        assert_eq!(OmegaTriple::all(4).count(), 2 + 6 + 12);
    }

    #[test]
    fn omega_values_of_example_seed() {
        let seed = linked_seed();
        let t = Tableau::origin(&seed);
        let w = |p, s, u| omega_value(&t, &OmegaTriple { p, s, u }).unwrap();
        assert_eq!(w(3, 1, 1), int(0));
        assert_eq!(w(3, 2, 2), int(-1));
        assert_eq!(w(2, 2, 1), frac(4, 3));
        assert!(omega_value(&t, &OmegaTriple { p: 1, s: 1, u: 1 }).is_err());
    }

    #[test]
    fn omega_sets_of_example_seed() {
        let seed = linked_seed();
        let t = Tableau::origin(&seed);
        assert_eq!(omega_plus_set(&t), set(&[(3, 1, 1), (2, 1, 1)]));
        assert_eq!(omega_set(&t), set(&[(3, 1, 1), (2, 1, 1), (3, 2, 2)]));
        assert_eq!(omega_plus_set(&t).to_string(), "{(2,1,1),(3,1,1)}");
    }

    #[test]
    fn empty_omega_for_unlinked_seed() {
        let seed = Seed::new(vec![
            vec![int(0), frac(1, 5), frac(2, 5)],
            vec![frac(1, 7), frac(2, 7)],
            vec![frac(1, 11)],
        ])
        .unwrap();
        let t = Tableau::origin(&seed);
        assert!(omega_set(&t).is_empty());
        assert!(omega_plus_set(&t).is_empty());
    }

    #[test]
    fn same_class_on_example() {
        let seed = linked_seed();
        let t = Tableau::origin(&seed);
        assert!(same_class(&t, &t).unwrap());
        let inside = Tableau::new(&seed, Shift::new(3, vec![-1, 0, -1]).unwrap()).unwrap();
        assert!(same_class(&t, &inside).unwrap());
        let outside = Tableau::new(&seed, Shift::new(3, vec![1, 0, 0]).unwrap()).unwrap();
        assert!(!same_class(&t, &outside).unwrap());
    }

    #[test]
    fn same_class_rejects_mixed_seeds() {
        let a = linked_seed();
        let b = Seed::from_ints(&[&[0, 0, 0], &[0, 0], &[1]]).unwrap();
        assert!(matches!(
            same_class(&Tableau::origin(&a), &Tableau::origin(&b)),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn irreducible_labels() {
        let s = linked_seed();
        assert!(seeds_same_irreducible(&s, &s).unwrap());

        let swapped = Seed::new(vec![
            vec![int(0), frac(1, 3), frac(2, 3)],
            vec![frac(4, 3), int(0)],
            vec![int(0)],
        ])
        .unwrap();
        assert!(seeds_same_irreducible(&s, &swapped).unwrap());
        assert!(seeds_same_irreducible(&swapped, &s).unwrap());

        let shifted = Seed::new(vec![
            vec![int(0), frac(1, 3), frac(2, 3)],
            vec![int(1), frac(4, 3)],
            vec![int(0)],
        ])
        .unwrap();
        assert!(!seeds_same_irreducible(&s, &shifted).unwrap());

        // integer shift inside the class
        let inside = Seed::new(vec![
            vec![int(0), frac(1, 3), frac(2, 3)],
            vec![int(-1), frac(4, 3)],
            vec![int(-1)],
        ])
        .unwrap();
        assert!(seeds_same_irreducible(&s, &inside).unwrap());
    }

    #[test]
    fn irreducible_labels_need_generic_seeds() {
        let s = linked_seed();
        let bad = Seed::from_ints(&[&[0, 0, 0], &[0, 1], &[0]]).unwrap();
        assert!(matches!(
            seeds_same_irreducible(&s, &bad),
            Err(Error::Domain(_))
        ));
        let other_height = Seed::from_ints(&[&[0, 0], &[0]]).unwrap();
        assert!(matches!(
            seeds_same_irreducible(&s, &other_height),
            Err(Error::Usage(_))
        ));
    }
}
