//! The Gelfand–Tsetlin action of `gl(n)` on spans of tableaux.
//!
//! The Chevalley generators `E_{k,k+1}`, `E_{k+1,k}` and `E_{kk}` act by the
//! explicit Gelfand–Tsetlin formulas. Every other `E_{ij}` is obtained from
//! the bracket
//!
//! * `E_{ij} = [E_{i,j-1}, E_{j-1,j}]` for `j > i + 1`,
//! * `E_{ij} = [E_{i,i-1}, E_{i-1,j}]` for `i > j + 1`,
//!
//! and words act with the rightmost factor first. The Gelfand–Tsetlin
//! subalgebra generators `c_{mk}` are sums of cyclic words; on every tableau
//! they act by the scalar [`gamma_eigenvalue`].

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::findim::is_standard;
use crate::rational::{int, product, Rational};
use crate::tableau::{Seed, Shift, Tableau};
use crate::vector::GtVector;

/// The elementary matrix `E_{ij}` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub i: usize,
    pub j: usize,
}

impl Generator {
    pub const fn new(i: usize, j: usize) -> Self {
        Generator { i, j }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.i == 0 || self.j == 0 || self.i > n || self.j > n {
            return Err(Error::bounds(format!("generator {self} outside gl({n})")));
        }
        Ok(())
    }

    /// All `n²` generators in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Generator> {
        (1..=n).flat_map(move |i| (1..=n).map(move |j| Generator { i, j }))
    }

    /// `E_{k,k+1}`, `E_{k+1,k}` and `E_{kk}` for all `k`.
    pub fn chevalley(n: usize) -> Vec<Generator> {
        let mut out = Vec::with_capacity(3 * n);
        for k in 1..n {
            out.push(Generator::new(k, k + 1));
            out.push(Generator::new(k + 1, k));
        }
        for k in 1..=n {
            out.push(Generator::new(k, k));
        }
        out
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E_{},{}", self.i, self.j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionMode {
    /// Keep every target tableau; needs nonvanishing denominators.
    Generic,
    /// Discard non-standard targets (finite-dimensional modules).
    Standard,
}

/// Composition convention for words of generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordOrder {
    /// `E_a E_b v = E_a(E_b v)`.
    RightmostFirst,
    /// The reversed convention, kept only to compare against.
    LeftmostFirst,
}

fn check_row(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::bounds(format!(
            "row index {k} must lie in 1..={}",
            n - 1
        )));
    }
    Ok(())
}

fn zero_denominator(mode: ActionMode, t: &Tableau<'_>, k: usize) -> Error {
    match mode {
        ActionMode::Generic => Error::domain(format!(
            "row {k} of {t} has repeated entries; the action formulas divide by zero"
        )),
        ActionMode::Standard => Error::invariant(format!(
            "standard tableau {t} has repeated entries in row {k}"
        )),
    }
}

fn require_standard(mode: ActionMode, t: &Tableau<'_>) -> Result<()> {
    if mode == ActionMode::Standard && !is_standard(t) {
        return Err(Error::domain(format!("{t} is not a standard tableau")));
    }
    Ok(())
}

/// `Π_{j≠i} (r_{ki} - r_{kj})`.
fn row_denominator(row: &[Rational], i: usize) -> Rational {
    product(
        row.iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| &row[i] - r),
    )
}

/// `E_{k,k+1} T(R) = -Σ_i [Π_j (r_{ki} - r_{k+1,j}) / Π_{j≠i} (r_{ki} - r_{kj})] T(R + δ^{ki})`.
pub fn act_raising<'a>(k: usize, t: &Tableau<'a>, mode: ActionMode) -> Result<GtVector<'a>> {
    check_row(t.n(), k)?;
    require_standard(mode, t)?;
    let row = t.row(k);
    let above = t.row(k + 1);
    let mut out = GtVector::zero(t.seed());
    for i in 0..k {
        let target = t.moved(k, i + 1, 1);
        if mode == ActionMode::Standard && !is_standard(&target) {
            continue;
        }
        let den = row_denominator(&row, i);
        if den.is_zero() {
            return Err(zero_denominator(mode, t, k));
        }
        let num = product(above.iter().map(|r| &row[i] - r));
        out.add_term(target.into_shift(), -(num / den));
    }
    Ok(out)
}

/// `E_{k+1,k} T(R) = Σ_i [Π_j (r_{ki} - r_{k-1,j}) / Π_{j≠i} (r_{ki} - r_{kj})] T(R - δ^{ki})`.
pub fn act_lowering<'a>(k: usize, t: &Tableau<'a>, mode: ActionMode) -> Result<GtVector<'a>> {
    check_row(t.n(), k)?;
    require_standard(mode, t)?;
    let row = t.row(k);
    let below = if k > 1 { t.row(k - 1) } else { Vec::new() };
    let mut out = GtVector::zero(t.seed());
    for i in 0..k {
        let target = t.moved(k, i + 1, -1);
        if mode == ActionMode::Standard && !is_standard(&target) {
            continue;
        }
        let den = row_denominator(&row, i);
        if den.is_zero() {
            return Err(zero_denominator(mode, t, k));
        }
        let num = product(below.iter().map(|r| &row[i] - r));
        out.add_term(target.into_shift(), num / den);
    }
    Ok(out)
}

/// The eigenvalue of `E_{kk}` on `t`: `k - 1 + Σ_i r_{ki} - Σ_i r_{k-1,i}`.
pub fn act_cartan(k: usize, t: &Tableau<'_>) -> Result<Rational> {
    if k == 0 || k > t.n() {
        return Err(Error::bounds(format!(
            "row index {k} must lie in 1..={}",
            t.n()
        )));
    }
    let upper: Rational = t.row(k).into_iter().sum();
    let lower: Rational = if k > 1 {
        t.row(k - 1).into_iter().sum()
    } else {
        Rational::zero()
    };
    Ok(int(k as i64 - 1) + upper - lower)
}

/// Applies generators to vectors, memoizing the action on basis tableaux.
///
/// One instance serves one seed and one mode; the cache is what keeps long
/// words (such as the cyclic words of `c_{mk}`) cheap.
pub struct Actor<'a> {
    mode: ActionMode,
    seed: Option<&'a Seed>,
    cache: HashMap<(Generator, Shift), GtVector<'a>>,
}

impl<'a> Actor<'a> {
    pub fn new(mode: ActionMode) -> Self {
        Actor {
            mode,
            seed: None,
            cache: HashMap::new(),
        }
    }

    pub fn mode(&self) -> ActionMode {
        self.mode
    }

    fn on_basis(&mut self, g: Generator, t: &Tableau<'a>) -> Result<GtVector<'a>> {
        let key = (g, t.shift().clone());
        if let Some(hit) = self.cache.get(&key) {
            return Ok(hit.clone());
        }
        let basis = GtVector::basis(t);
        let out = match (g.i, g.j) {
            (i, j) if i == j => {
                require_standard(self.mode, t)?;
                basis.scaled(&act_cartan(i, t)?)
            }
            (i, j) if j == i + 1 => act_raising(i, t, self.mode)?,
            (i, j) if i == j + 1 => act_lowering(j, t, self.mode)?,
            (i, j) if j > i + 1 => {
                self.commutator(Generator::new(i, j - 1), Generator::new(j - 1, j), &basis)?
            }
            (i, j) => {
                self.commutator(Generator::new(i, i - 1), Generator::new(i - 1, j), &basis)?
            }
        };
        self.cache.insert(key, out.clone());
        Ok(out)
    }

    /// `a(b v) - b(a v)`.
    fn commutator(&mut self, a: Generator, b: Generator, v: &GtVector<'a>) -> Result<GtVector<'a>> {
        let bv = self.apply(b, v)?;
        let mut out = self.apply(a, &bv)?;
        let av = self.apply(a, v)?;
        let bav = self.apply(b, &av)?;
        out.sub_assign(&bav);
        Ok(out)
    }

    pub fn apply(&mut self, g: Generator, v: &GtVector<'a>) -> Result<GtVector<'a>> {
        g.check(v.seed().n())?;
        match self.seed {
            Some(seed) if std::ptr::eq(seed, v.seed()) || seed == v.seed() => {}
            _ => {
                self.cache.clear();
                self.seed = Some(v.seed());
            }
        }
        let mut out = GtVector::zero(v.seed());
        for t in v.support() {
            let coeff = v.coefficient(t.shift());
            let image = self.on_basis(g, &t)?;
            out.add_scaled(&image, &coeff);
        }
        Ok(out)
    }

    /// Applies `word[0] word[1] ⋯ word[last]` to `v`.
    pub fn apply_word(
        &mut self,
        word: &[Generator],
        v: &GtVector<'a>,
        order: WordOrder,
    ) -> Result<GtVector<'a>> {
        let mut out = v.clone();
        match order {
            WordOrder::RightmostFirst => {
                for &g in word.iter().rev() {
                    out = self.apply(g, &out)?;
                }
            }
            WordOrder::LeftmostFirst => {
                for &g in word {
                    out = self.apply(g, &out)?;
                }
            }
        }
        Ok(out)
    }

    pub fn gamma_generator(
        &mut self,
        m: usize,
        k: usize,
        v: &GtVector<'a>,
        order: WordOrder,
    ) -> Result<GtVector<'a>> {
        check_gamma_indices(v.seed().n(), m, k)?;
        let mut out = GtVector::zero(v.seed());
        for tuple in std::iter::repeat_n(1..=m, k).multi_cartesian_product() {
            let word: Vec<Generator> = (0..k)
                .map(|pos| Generator::new(tuple[pos], tuple[(pos + 1) % k]))
                .collect();
            let image = self.apply_word(&word, v, order)?;
            out.add_assign(&image);
        }
        Ok(out)
    }
}

/// `E_{ij} v`, extended linearly.
pub fn act<'a>(g: Generator, v: &GtVector<'a>, mode: ActionMode) -> Result<GtVector<'a>> {
    Actor::new(mode).apply(g, v)
}

/// Applies a word of generators, rightmost factor first.
pub fn act_word<'a>(
    word: &[Generator],
    v: &GtVector<'a>,
    mode: ActionMode,
) -> Result<GtVector<'a>> {
    Actor::new(mode).apply_word(word, v, WordOrder::RightmostFirst)
}

/// `[E_a, E_b] v` minus what the `gl(n)` relation
/// `[E_{ij}, E_{kl}] = δ_{jk} E_{il} - δ_{li} E_{kj}` predicts. Zero on every
/// valid module.
pub fn commutator_defect<'a>(
    a: Generator,
    b: Generator,
    v: &GtVector<'a>,
    mode: ActionMode,
) -> Result<GtVector<'a>> {
    Actor::new(mode).commutator_defect(a, b, v)
}

impl<'a> Actor<'a> {
    pub fn commutator_defect(
        &mut self,
        a: Generator,
        b: Generator,
        v: &GtVector<'a>,
    ) -> Result<GtVector<'a>> {
        let n = v.seed().n();
        a.check(n)?;
        b.check(n)?;
        let mut out = self.commutator(a, b, v)?;
        if a.j == b.i {
            let term = self.apply(Generator::new(a.i, b.j), v)?;
            out.sub_assign(&term);
        }
        if b.j == a.i {
            let term = self.apply(Generator::new(b.i, a.j), v)?;
            out.add_assign(&term);
        }
        Ok(out)
    }
}

fn check_gamma_indices(n: usize, m: usize, k: usize) -> Result<()> {
    if k == 0 || k > m || m > n {
        return Err(Error::bounds(format!(
            "need 1 <= k <= m <= n, got m = {m}, k = {k}, n = {n}"
        )));
    }
    Ok(())
}

/// `γ_{mk} = Σ_i (r_{mi} + m - 1)^k Π_{j≠i} (1 - 1/(r_{mi} - r_{mj}))`.
pub fn gamma_eigenvalue(m: usize, k: usize, t: &Tableau<'_>) -> Result<Rational> {
    check_gamma_indices(t.n(), m, k)?;
    let row = t.row(m);
    let shift = int(m as i64 - 1);
    let mut total = Rational::zero();
    for (i, x) in row.iter().enumerate() {
        let mut factor = Rational::one();
        for (j, y) in row.iter().enumerate() {
            if i == j {
                continue;
            }
            let diff = x - y;
            if diff.is_zero() {
                return Err(Error::domain(format!(
                    "row {m} of {t} has repeated entries; γ_{m}{k} is undefined"
                )));
            }
            factor *= Rational::one() - diff.recip();
        }
        let base = x + &shift;
        let power = product(std::iter::repeat_n(base, k));
        total += power * factor;
    }
    Ok(total)
}

/// `c_{mk} v`, the sum over all `m^k` cyclic words
/// `E_{i_1 i_2} E_{i_2 i_3} ⋯ E_{i_k i_1}`.
pub fn act_gamma_generator<'a>(
    m: usize,
    k: usize,
    v: &GtVector<'a>,
    mode: ActionMode,
) -> Result<GtVector<'a>> {
    Actor::new(mode).gamma_generator(m, k, v, WordOrder::RightmostFirst)
}
