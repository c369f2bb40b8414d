//! Finite-dimensional irreducible modules `L(λ)` with their standard
//! tableau bases, used to validate the action engine on modules where every
//! statement can be checked exhaustively.

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};
use crate::tableau::{shift_coord, shift_dim, Seed, Shift, Tableau};

/// Betweenness test: `r_{ki} - r_{k-1,i} ∈ Z≥0` and `r_{k-1,i} - r_{k,i+1} ∈ Z>0`
/// for every `2 <= k <= n`, `1 <= i <= k-1`.
pub fn is_standard(t: &Tableau<'_>) -> bool {
    (2..=t.n()).all(|k| {
        let upper = t.row(k);
        let lower = t.row(k - 1);
        (0..k - 1).all(|i| {
            let left = &upper[i] - &lower[i];
            let right = &lower[i] - &upper[i + 1];
            left.is_integer() && !left.is_negative() && right.is_integer() && right.is_positive()
        })
    })
}

/// An integral dominant weight `λ_1 >= … >= λ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HighestWeight(Vec<i64>);

impl HighestWeight {
    pub fn new(lambda: Vec<i64>) -> Result<Self> {
        if lambda.len() < 2 {
            return Err(Error::usage(
                "a highest weight needs at least two components",
            ));
        }
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("weight {lambda:?} is not dominant")));
        }
        Ok(HighestWeight(lambda))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    /// Top row `l_{nj} = λ_j - j + 1`.
    pub fn top_row(&self) -> Vec<i64> {
        self.0
            .iter()
            .enumerate()
            .map(|(j, l)| l - j as i64)
            .collect()
    }
}

/// `dim L(λ) = Π_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
///
/// Independent of the tableau machinery; used as an oracle for
/// [`FiniteModule::standard_tableaux`].
pub fn weyl_dimension(lam: &HighestWeight) -> u64 {
    let l = lam.components();
    let mut value = int(1);
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            let gap = (j - i) as i64;
            value *= frac(l[i] - l[j] + gap, gap);
        }
    }
    debug_assert!(value.is_integer());
    value.to_integer().to_u64().expect("dimension fits in u64")
}

/// `L(λ)` realized on the lattice whose seed has top row `λ_j - j + 1` and
/// zero lower rows, so a tableau's shift coordinates are its entries.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    weight: HighestWeight,
    seed: Seed,
}

impl FiniteModule {
    pub fn new(weight: HighestWeight) -> Self {
        let n = weight.n();
        let mut rows: Vec<Vec<Rational>> = vec![weight.top_row().into_iter().map(int).collect()];
        for k in (1..n).rev() {
            rows.push(vec![int(0); k]);
        }
        let seed = Seed::new(rows).expect("shape is correct by construction");
        FiniteModule { weight, seed }
    }

    pub fn weight(&self) -> &HighestWeight {
        &self.weight
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    pub fn dimension(&self) -> u64 {
        weyl_dimension(&self.weight)
    }

    /// Every standard tableau, ordered lexicographically by entries read row
    /// `n-1` down to row 1.
    pub fn standard_tableaux(&self) -> Vec<Tableau<'_>> {
        let n = self.weight.n();
        let top = self.weight.top_row();
        let mut coords = vec![0i64; shift_dim(n)];
        let mut out = Vec::new();
        self.fill(n, &top, 0, &mut coords, &mut out);
        out
    }

    fn fill<'s>(
        &'s self,
        n: usize,
        top: &[i64],
        offset: usize,
        coords: &mut Vec<i64>,
        out: &mut Vec<Tableau<'s>>,
    ) {
        if offset == coords.len() {
            out.push(Tableau::new_unchecked(
                &self.seed,
                Shift::from_coords(coords.clone()),
            ));
            return;
        }
        let (p, s) = shift_coord(n, offset);
        // The row above is already fixed: the top row, or earlier coordinates.
        let above = |col: usize| -> i64 {
            if p + 1 == n {
                top[col - 1]
            } else {
                coords[crate::tableau::shift_offset(n, p + 1, col)]
            }
        };
        let lo = above(s + 1) + 1;
        let hi = above(s);
        for value in lo..=hi {
            coords[offset] = value;
            self.fill(n, top, offset + 1, coords, out);
        }
        coords[offset] = 0;
    }

    /// The tableau with `l_{ki} = l_{ni}` for all `k`, annihilated by every
    /// raising operator.
    pub fn highest_weight_tableau(&self) -> Tableau<'_> {
        let n = self.weight.n();
        let top = self.weight.top_row();
        let coords = (0..shift_dim(n))
            .map(|off| top[shift_coord(n, off).1 - 1])
            .collect();
        Tableau::new_unchecked(&self.seed, Shift::from_coords(coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{act_raising, ActionMode};

    fn module(lambda: &[i64]) -> FiniteModule {
        FiniteModule::new(HighestWeight::new(lambda.to_vec()).unwrap())
    }

    #[test]
    fn standardness_boundaries() {
        let seed = Seed::from_ints(&[&[1, -1], &[0]]).unwrap();
        let at = |v| Tableau::new(&seed, Shift::new(2, vec![v]).unwrap()).unwrap();
        assert!(is_standard(&at(0)));
        assert!(!is_standard(&at(-1)));
        assert!(is_standard(&at(1)));
        assert!(!is_standard(&at(2)));
    }

    #[test]
    fn non_integral_tableaux_are_not_standard() {
        let seed = Seed::new(vec![vec![int(1), int(-1)], vec![frac(1, 2)]]).unwrap();
        assert!(!is_standard(&Tableau::origin(&seed)));
    }

    #[test]
    fn defining_representation_gl2() {
        let m = module(&[1, 0]);
        let shifts: Vec<Vec<i64>> = m
            .standard_tableaux()
            .iter()
            .map(|t| t.shift().coords().to_vec())
            .collect();
        assert_eq!(shifts, vec![vec![0], vec![1]]);
    }

    #[test]
    fn trivial_representation() {
        for n in 2..=5 {
            let m = module(&vec![0; n]);
            let basis = m.standard_tableaux();
            assert_eq!(basis.len(), 1);
            assert_eq!(basis[0], m.highest_weight_tableau());
        }
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(module(&[1, 0, 0]).standard_tableaux().len(), 3);
        assert_eq!(module(&[2, 1, 0]).standard_tableaux().len(), 8);
    }

    #[test]
    fn weyl_formula_values() {
        let w = |l: &[i64]| weyl_dimension(&HighestWeight::new(l.to_vec()).unwrap());
        assert_eq!(w(&[1, 0]), 2);
        assert_eq!(w(&[1, 0, 0]), 3);
        assert_eq!(w(&[2, 1, 0]), 8);
        assert_eq!(w(&[3, 3, 3]), 1);
    }

    #[test]
    fn enumeration_is_sorted() {
        let m = module(&[3, 1, 0, -1]);
        let basis = m.standard_tableaux();
        assert!(basis.windows(2).all(|w| w[0].shift() < w[1].shift()));
        assert!(basis.iter().all(is_standard));
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(matches!(
            HighestWeight::new(vec![0, 1]),
            Err(Error::Domain(_))
        ));
        assert!(HighestWeight::new(vec![2, 2, -5]).is_ok());
    }

    #[test]
    fn highest_weight_is_killed_by_raising() {
        let m = module(&[2, 1, 0]);
        let hw = m.highest_weight_tableau();
        assert!(is_standard(&hw));
        for k in 1..3 {
            assert!(act_raising(k, &hw, ActionMode::Standard).unwrap().is_zero());
        }
    }
}
