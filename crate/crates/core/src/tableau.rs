//! Seeds, integer shifts and the tableau lattice they span.
//!
//! A [`Seed`] is a fixed triangular array `L = (l_{n1},…,l_{nn} | … | l_{11})`.
//! Every tableau of the lattice over a seed is the seed plus an integer
//! [`Shift`] of the rows `1..n-1`; the top row never moves. Rows and columns
//! are 1-based throughout the public API.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, Rational};

/// Number of free (shiftable) coordinates of a height-`n` tableau.
pub fn shift_dim(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Position of coordinate `(p, s)` (with `1 <= s <= p <= n-1`) in the
/// canonical shift order: row `n-1` left to right, then row `n-2`, …, row 1.
pub(crate) fn shift_offset(n: usize, p: usize, s: usize) -> usize {
    shift_dim(n) - p * (p + 1) / 2 + (s - 1)
}

/// Inverse of [`shift_offset`].
pub(crate) fn shift_coord(n: usize, offset: usize) -> (usize, usize) {
    let mut start = 0;
    for p in (1..n).rev() {
        if offset < start + p {
            return (p, offset - start + 1);
        }
        start += p;
    }
    panic!("shift offset {offset} out of range for n = {n}");
}

fn check_index(n: usize, p: usize, s: usize) -> Result<()> {
    if p == 0 || p > n || s == 0 || s > p {
        return Err(Error::bounds(format!(
            "entry ({p},{s}) outside a tableau of height {n}"
        )));
    }
    Ok(())
}

/// The fixed tableau `T(L)` that defines a lattice of tableaux.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Seed {
    /// `rows[p - 1]` is row `p` and has `p` entries.
    rows: Vec<Vec<Rational>>,
}

impl Seed {
    /// Builds a seed from rows listed top-down: row `n` (length `n`) first,
    /// row 1 (length 1) last.
    pub fn new(rows_top_down: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows_top_down.len();
        if n < 2 {
            return Err(Error::usage(format!(
                "seed height must be at least 2, got {n}"
            )));
        }
        for (idx, row) in rows_top_down.iter().enumerate() {
            let expected = n - idx;
            if row.len() != expected {
                return Err(Error::usage(format!(
                    "row {expected} must have {expected} entries, got {}",
                    row.len()
                )));
            }
        }
        let mut rows = rows_top_down;
        rows.reverse();
        Ok(Seed { rows })
    }

    /// Convenience constructor for integer seeds, rows listed top-down.
    pub fn from_ints(rows_top_down: &[&[i64]]) -> Result<Self> {
        Seed::new(
            rows_top_down
                .iter()
                .map(|row| row.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, p: usize, s: usize) -> Result<&Rational> {
        check_index(self.n(), p, s)?;
        Ok(&self.rows[p - 1][s - 1])
    }

    /// Row `p` (1-based). Panics if `p` is out of range.
    pub fn row(&self, p: usize) -> &[Rational] {
        &self.rows[p - 1]
    }

    /// Rows in document order, top row first.
    pub fn rows_top_down(&self) -> impl Iterator<Item = &[Rational]> {
        self.rows.iter().rev().map(Vec::as_slice)
    }

    /// True iff every pair of entries in each row `1..n-1` differs by a
    /// non-integer. The top row is unconstrained.
    pub fn is_generic(&self) -> bool {
        self.rows[..self.n() - 1].iter().all(|row| {
            row.iter()
                .enumerate()
                .all(|(i, a)| row[i + 1..].iter().all(|b| !(a - b).is_integer()))
        })
    }

    pub(crate) fn require_generic(&self) -> Result<()> {
        if self.is_generic() {
            Ok(())
        } else {
            Err(Error::domain(
                "seed is not generic: some row below the top has an integer difference",
            ))
        }
    }

    /// Flattened entries in the layout `l_{n1},…,l_{nn} | … | l_{11}`.
    pub fn flat(&self) -> Vec<Rational> {
        self.rows_top_down()
            .flat_map(|r| r.iter().cloned())
            .collect()
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows_top_down()
            .map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "({})", rows.join(" | "))
    }
}

/// Integer displacement of rows `1..n-1` of a tableau; the top row is
/// implicitly zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shift {
    coords: Vec<i64>,
}

impl Shift {
    pub fn zero(n: usize) -> Self {
        Shift {
            coords: vec![0; shift_dim(n)],
        }
    }

    /// Coordinates in canonical order (row `n-1` first, row 1 last).
    pub fn new(n: usize, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != shift_dim(n) {
            return Err(Error::bounds(format!(
                "a shift for height {n} has {} coordinates, got {}",
                shift_dim(n),
                coords.len()
            )));
        }
        Ok(Shift { coords })
    }

    pub(crate) fn from_coords(coords: Vec<i64>) -> Self {
        Shift { coords }
    }

    /// The unit shift `δ^{ps}`.
    pub fn unit(n: usize, p: usize, s: usize) -> Result<Self> {
        let mut z = Shift::zero(n);
        z.set(n, p, s, 1)?;
        Ok(z)
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// `z_{ps}`; zero for the top row.
    pub fn get(&self, n: usize, p: usize, s: usize) -> Result<i64> {
        check_index(n, p, s)?;
        if p == n {
            Ok(0)
        } else {
            Ok(self.coords[shift_offset(n, p, s)])
        }
    }

    pub fn set(&mut self, n: usize, p: usize, s: usize, value: i64) -> Result<()> {
        check_index(n, p, s)?;
        if p == n {
            return Err(Error::bounds(format!(
                "the top row ({p},{s}) cannot be shifted"
            )));
        }
        self.coords[shift_offset(n, p, s)] = value;
        Ok(())
    }

    /// `self + delta·δ^{ps}`, with `p < n` assumed.
    pub(crate) fn moved(&self, n: usize, p: usize, s: usize, delta: i64) -> Shift {
        let mut coords = self.coords.clone();
        coords[shift_offset(n, p, s)] += delta;
        Shift { coords }
    }

    pub fn add(&self, other: &Shift) -> Shift {
        Shift {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Shift) -> Shift {
        Shift {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// ℓ¹ distance between two shifts.
    pub fn l1_distance(&self, other: &Shift) -> i64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).abs())
            .sum()
    }

    /// Nonzero coordinates as `(row, column, value)`.
    pub fn nonzero(&self, n: usize) -> Vec<(usize, usize, i64)> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| {
                let (p, s) = shift_coord(n, i);
                (p, s, v)
            })
            .collect()
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A tableau of the lattice over a seed: `T(L + z)`.
#[derive(Clone, Debug)]
pub struct Tableau<'a> {
    seed: &'a Seed,
    shift: Shift,
}

impl<'a> Tableau<'a> {
    pub fn new(seed: &'a Seed, shift: Shift) -> Result<Self> {
        if shift.len() != shift_dim(seed.n()) {
            return Err(Error::bounds(format!(
                "shift has {} coordinates, seed of height {} needs {}",
                shift.len(),
                seed.n(),
                shift_dim(seed.n())
            )));
        }
        Ok(Tableau { seed, shift })
    }

    pub fn origin(seed: &'a Seed) -> Self {
        Tableau {
            seed,
            shift: Shift::zero(seed.n()),
        }
    }

    pub(crate) fn new_unchecked(seed: &'a Seed, shift: Shift) -> Self {
        Tableau { seed, shift }
    }

    pub fn seed(&self) -> &'a Seed {
        self.seed
    }

    pub fn shift(&self) -> &Shift {
        &self.shift
    }

    pub fn into_shift(self) -> Shift {
        self.shift
    }

    pub fn n(&self) -> usize {
        self.seed.n()
    }

    /// `r_{ps} = l_{ps} + z_{ps}`.
    pub fn entry(&self, p: usize, s: usize) -> Result<Rational> {
        check_index(self.n(), p, s)?;
        Ok(self.entry_unchecked(p, s))
    }

    pub(crate) fn entry_unchecked(&self, p: usize, s: usize) -> Rational {
        let base = &self.seed.rows[p - 1][s - 1];
        if p == self.n() {
            base.clone()
        } else {
            let z = self.shift.coords[shift_offset(self.n(), p, s)];
            if z == 0 {
                base.clone()
            } else {
                base + int(z)
            }
        }
    }

    /// All entries of row `p`.
    pub fn row(&self, p: usize) -> Vec<Rational> {
        (1..=p).map(|s| self.entry_unchecked(p, s)).collect()
    }

    /// Rows indexed by `p - 1`.
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (1..=self.n()).map(|p| self.row(p)).collect()
    }

    /// `T(R + delta·δ^{ps})`.
    pub fn moved(&self, p: usize, s: usize, delta: i64) -> Tableau<'a> {
        Tableau {
            seed: self.seed,
            shift: self.shift.moved(self.n(), p, s, delta),
        }
    }

    pub fn with_shift(&self, shift: Shift) -> Tableau<'a> {
        Tableau {
            seed: self.seed,
            shift,
        }
    }

    pub(crate) fn same_seed(&self, other: &Tableau<'_>) -> bool {
        std::ptr::eq(self.seed, other.seed) || self.seed == other.seed
    }
}

impl PartialEq for Tableau<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.shift == other.shift && self.same_seed(other)
    }
}

impl Eq for Tableau<'_> {}

impl PartialOrd for Tableau<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        if std::ptr::eq(self.seed, other.seed) {
            self.shift.cmp(&other.shift)
        } else {
            self.seed
                .cmp(other.seed)
                .then_with(|| self.shift.cmp(&other.shift))
        }
    }
}

impl std::hash::Hash for Tableau<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.shift.hash(state);
    }
}

impl fmt::Display for Tableau<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.n())
            .rev()
            .map(|p| {
                self.row(p)
                    .iter()
                    .map(format_rational)
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        write!(f, "T({})", rows.join(" | "))
    }
}
