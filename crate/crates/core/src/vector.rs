//! Finite linear combinations of tableaux over one seed.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};
use crate::tableau::{Seed, Shift, Tableau};

/// An element of the span of a tableau lattice.
///
/// Terms are keyed by shift and never hold a zero coefficient, so the stored
/// support is exactly the set of tableaux appearing with nonzero coefficient.
#[derive(Clone, Debug)]
pub struct GtVector<'a> {
    seed: &'a Seed,
    terms: BTreeMap<Shift, Rational>,
}

impl<'a> GtVector<'a> {
    pub fn zero(seed: &'a Seed) -> Self {
        GtVector {
            seed,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector of a single tableau.
    pub fn basis(t: &Tableau<'a>) -> Self {
        let mut v = GtVector::zero(t.seed());
        v.terms
            .insert(t.shift().clone(), Rational::from_integer(1.into()));
        v
    }

    pub fn from_terms(
        seed: &'a Seed,
        terms: impl IntoIterator<Item = (Shift, Rational)>,
    ) -> Result<Self> {
        let dim = crate::tableau::shift_dim(seed.n());
        let mut v = GtVector::zero(seed);
        for (shift, coeff) in terms {
            if shift.len() != dim {
                return Err(Error::bounds(format!(
                    "shift {shift} does not fit a seed of height {}",
                    seed.n()
                )));
            }
            v.add_term(shift, coeff);
        }
        Ok(v)
    }

    pub fn seed(&self) -> &'a Seed {
        self.seed
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic shift order.
    pub fn terms(&self) -> impl Iterator<Item = (&Shift, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, shift: &Shift) -> Rational {
        self.terms
            .get(shift)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Tableaux with nonzero coefficient, in shift order.
    pub fn support(&self) -> impl Iterator<Item = Tableau<'a>> + '_ {
        let seed = self.seed;
        self.terms
            .keys()
            .map(move |z| Tableau::new_unchecked(seed, z.clone()))
    }

    /// Adds `coeff · T(L + shift)`, dropping the entry if it cancels.
    pub fn add_term(&mut self, shift: Shift, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(shift) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &GtVector<'a>, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (shift, coeff) in &other.terms {
            self.add_term(shift.clone(), coeff * factor);
        }
    }

    pub fn add_assign(&mut self, other: &GtVector<'a>) {
        for (shift, coeff) in &other.terms {
            self.add_term(shift.clone(), coeff.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &GtVector<'a>) {
        for (shift, coeff) in &other.terms {
            self.add_term(shift.clone(), -coeff);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> GtVector<'a> {
        let mut out = GtVector::zero(self.seed);
        out.add_scaled(self, factor);
        out
    }

    pub fn same_seed(&self, other: &GtVector<'_>) -> bool {
        std::ptr::eq(self.seed, other.seed) || self.seed == other.seed
    }
}

impl PartialEq for GtVector<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.same_seed(other) && self.terms == other.terms
    }
}

impl Eq for GtVector<'_> {}

impl fmt::Display for GtVector<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(z, c)| format!("{}·{z}", format_rational(c)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn seed() -> Seed {
        Seed::from_ints(&[&[1, -1], &[0]]).unwrap()
    }

    fn z(c: i64) -> Shift {
        Shift::new(2, vec![c]).unwrap()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let s = seed();
        let mut v = GtVector::zero(&s);
        v.add_term(z(0), int(0));
        assert!(v.is_zero());
        v.add_term(z(1), frac(1, 2));
        v.add_term(z(1), frac(-1, 2));
        assert!(v.is_zero());
        assert_eq!(v.len(), 0);
    }

    #[test]
    fn linear_combinations() {
        let s = seed();
        let mut v = GtVector::from_terms(&s, [(z(0), int(2)), (z(1), int(3))]).unwrap();
        let w = GtVector::from_terms(&s, [(z(1), int(3)), (z(-1), int(1))]).unwrap();
        v.sub_assign(&w);
        assert_eq!(v.coefficient(&z(0)), int(2));
        assert_eq!(v.coefficient(&z(1)), int(0));
        assert_eq!(v.coefficient(&z(-1)), int(-1));
        assert_eq!(v.support().count(), 2);
        let doubled = v.scaled(&int(2));
        assert_eq!(doubled.coefficient(&z(-1)), int(-2));
        assert!(v.scaled(&int(0)).is_zero());
        assert_eq!(doubled.to_string(), "-2·(-1) + 4·(0)");
    }

    #[test]
    fn rejects_misshapen_shifts() {
        let s = seed();
        assert!(GtVector::from_terms(&s, [(Shift::zero(3), int(1))]).is_err());
    }
}
