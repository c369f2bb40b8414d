//! Submodule structure of a generic lattice module `V(T(L))`.
//!
//! The module generated by a tableau `T(R)` has the basis
//! `N(T(R)) = {T(Q) : Ω⁺(T(R)) ⊆ Ω⁺(T(Q))}`, and the irreducible module
//! containing `T(R)` has the basis `I(T(R)) = {T(Q) : Ω⁺(T(Q)) = Ω⁺(T(R))}`.
//! Both bases are infinite, so everything here works inside a finite
//! [`ShiftBox`]. Reachability under the action ([`closure_bfs`]) is computed
//! independently of `Ω⁺` and serves as an oracle for the bases.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::action::{act_cartan, act_lowering, act_raising, ActionMode};
use crate::error::{Error, Result};
use crate::omega::{omega_plus_set, omega_set, same_class, OmegaSet, OmegaTriple};
use crate::rational::as_integer;
use crate::tableau::{shift_dim, shift_offset, Seed, Shift, Tableau};

/// A finite box of shifts: one closed integer interval per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftBox {
    lower: Vec<i64>,
    upper: Vec<i64>,
}

impl ShiftBox {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::usage("box bounds have different lengths"));
        }
        if lower.iter().zip(&upper).any(|(lo, hi)| lo > hi) {
            return Err(Error::usage("box has an empty interval"));
        }
        Ok(ShiftBox { lower, upper })
    }

    /// All shifts within `radius` of `center` in every coordinate.
    pub fn around(center: &Shift, radius: i64) -> Result<Self> {
        if radius < 0 {
            return Err(Error::usage(format!("negative box radius {radius}")));
        }
        Ok(ShiftBox {
            lower: center.coords().iter().map(|c| c - radius).collect(),
            upper: center.coords().iter().map(|c| c + radius).collect(),
        })
    }

    /// `[-radius, radius]` in every coordinate of a height-`n` shift.
    pub fn cube(n: usize, radius: i64) -> Result<Self> {
        ShiftBox::around(&Shift::zero(n), radius)
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    /// Number of shifts in the box.
    pub fn size(&self) -> u128 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| (hi - lo + 1) as u128)
            .product()
    }

    pub fn contains(&self, shift: &Shift) -> bool {
        shift.len() == self.dim()
            && shift
                .coords()
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(c, (lo, hi))| lo <= c && c <= hi)
    }

    pub fn inflate(&self, padding: i64) -> ShiftBox {
        ShiftBox {
            lower: self.lower.iter().map(|c| c - padding).collect(),
            upper: self.upper.iter().map(|c| c + padding).collect(),
        }
    }

    /// Shifts in lexicographic order.
    pub fn iter(&self) -> BoxIter<'_> {
        BoxIter {
            bounds: self,
            next: Some(self.lower.clone()),
        }
    }

    fn check_fits(&self, seed: &Seed) -> Result<()> {
        if self.dim() != shift_dim(seed.n()) {
            return Err(Error::bounds(format!(
                "box has {} coordinates, seed of height {} needs {}",
                self.dim(),
                seed.n(),
                shift_dim(seed.n())
            )));
        }
        Ok(())
    }
}

pub struct BoxIter<'b> {
    bounds: &'b ShiftBox,
    next: Option<Vec<i64>>,
}

impl Iterator for BoxIter<'_> {
    type Item = Shift;

    fn next(&mut self) -> Option<Shift> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if succ[pos] < self.bounds.upper[pos] {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = self.bounds.lower[pos];
        }
        Some(Shift::from_coords(current))
    }
}

/// Integer evaluation of `Ω⁺` over the lattice of one seed.
///
/// Only triples of `Ω(T(L))` can ever lie in `Ω⁺(T(L + z))`, and for those
/// `ω(T(L + z)) = ω(T(L)) + z_{p,s} - z_{p-1,u}`. The profile stores the
/// integer base values and reads `Ω⁺` as a bit mask over `Ω`.
#[derive(Clone, Debug)]
pub struct OmegaProfile {
    triples: Vec<OmegaTriple>,
    base: Vec<i64>,
    upper: Vec<Option<usize>>,
    lower: Vec<usize>,
}

impl OmegaProfile {
    pub fn new(seed: &Seed) -> Result<Self> {
        let n = seed.n();
        let origin = Tableau::origin(seed);
        let omega = omega_set(&origin);
        if omega.len() > 128 {
            return Err(Error::usage(format!(
                "|Ω| = {} is too large to profile",
                omega.len()
            )));
        }
        let mut profile = OmegaProfile {
            triples: Vec::new(),
            base: Vec::new(),
            upper: Vec::new(),
            lower: Vec::new(),
        };
        for triple in &omega {
            let value = crate::omega::omega_value(&origin, triple)?;
            let base = as_integer(&value)
                .ok_or_else(|| Error::usage(format!("ω{triple} = {value} does not fit in i64")))?;
            profile.triples.push(*triple);
            profile.base.push(base);
            profile
                .upper
                .push((triple.p < n).then(|| shift_offset(n, triple.p, triple.s)));
            profile.lower.push(shift_offset(n, triple.p - 1, triple.u));
        }
        Ok(profile)
    }

    /// `Ω(T(L))`, shared by the whole lattice.
    pub fn omega(&self) -> OmegaSet {
        self.triples.iter().copied().collect()
    }

    /// `max |ω_{p,s,u}(T(L))|` over `Ω`, or 0 when `Ω` is empty.
    pub fn max_abs_omega(&self) -> i64 {
        self.base.iter().map(|b| b.abs()).max().unwrap_or(0)
    }

    /// `ω` of triple number `idx` at `shift`.
    fn value(&self, idx: usize, shift: &Shift) -> i64 {
        let c = shift.coords();
        let up = self.upper[idx].map_or(0, |o| c[o]);
        self.base[idx] + up - c[self.lower[idx]]
    }

    pub fn mask(&self, shift: &Shift) -> u128 {
        (0..self.triples.len())
            .filter(|&i| self.value(i, shift) >= 0)
            .fold(0u128, |m, i| m | (1 << i))
    }

    pub fn to_set(&self, mask: u128) -> OmegaSet {
        self.triples
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, t)| *t)
            .collect()
    }

    /// Shift coordinates that occur in some triple of `Ω`.
    fn linked_coords(&self) -> BTreeSet<usize> {
        self.upper
            .iter()
            .flatten()
            .chain(&self.lower)
            .copied()
            .collect()
    }
}

fn scan<'a>(
    r: &Tableau<'a>,
    bounds: &ShiftBox,
    keep: impl Fn(u128, u128) -> bool,
) -> Result<Vec<Tableau<'a>>> {
    let seed = r.seed();
    seed.require_generic()?;
    bounds.check_fits(seed)?;
    let profile = OmegaProfile::new(seed)?;
    let target = profile.mask(r.shift());
    Ok(bounds
        .iter()
        .filter(|z| keep(target, profile.mask(z)))
        .map(|z| r.with_shift(z))
        .collect())
}

/// `N(T(R))` inside the box: tableaux whose `Ω⁺` contains `Ω⁺(T(R))`.
pub fn basis_n_in_box<'a>(r: &Tableau<'a>, bounds: &ShiftBox) -> Result<Vec<Tableau<'a>>> {
    scan(r, bounds, |target, m| m & target == target)
}

/// `I(T(R))` inside the box: tableaux with exactly the `Ω⁺` of `T(R)`.
pub fn basis_i_in_box<'a>(r: &Tableau<'a>, bounds: &ShiftBox) -> Result<Vec<Tableau<'a>>> {
    scan(r, bounds, |target, m| m == target)
}

/// Tableaux appearing with nonzero coefficient in `g·t` for some Chevalley
/// generator `g`.
pub fn one_step_successors<'a>(t: &Tableau<'a>, mode: ActionMode) -> Result<BTreeSet<Tableau<'a>>> {
    let mut out = BTreeSet::new();
    for k in 1..t.n() {
        out.extend(act_raising(k, t, mode)?.support());
        out.extend(act_lowering(k, t, mode)?.support());
    }
    for k in 1..=t.n() {
        if !num_traits::Zero::is_zero(&act_cartan(k, t)?) {
            out.insert(t.clone());
            break;
        }
    }
    Ok(out)
}

/// Breadth-first closure of `{r}` under [`one_step_successors`] (generic
/// mode), explored inside the box inflated by `padding` and reported
/// restricted to the box.
pub fn closure_bfs<'a>(
    r: &Tableau<'a>,
    bounds: &ShiftBox,
    padding: i64,
) -> Result<BTreeSet<Tableau<'a>>> {
    if padding < 0 {
        return Err(Error::usage(format!("negative padding {padding}")));
    }
    r.seed().require_generic()?;
    bounds.check_fits(r.seed())?;
    let arena = bounds.inflate(padding);
    if !arena.contains(r.shift()) {
        return Err(Error::usage(format!(
            "start {} lies outside the search box",
            r.shift()
        )));
    }
    let mut seen: BTreeSet<Tableau<'a>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(r.clone());
    queue.push_back(r.clone());
    while let Some(t) = queue.pop_front() {
        for next in one_step_successors(&t, ActionMode::Generic)? {
            if arena.contains(next.shift()) && !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(seen
        .into_iter()
        .filter(|t| bounds.contains(t.shift()))
        .collect())
}

/// The one-step successor relation over every shift of a box, for repeated
/// reachability queries on the same region.
#[derive(Clone, Debug)]
pub struct ReachabilityGraph {
    shifts: Vec<Shift>,
    index: BTreeMap<Shift, usize>,
    edges: Vec<Vec<usize>>,
}

impl ReachabilityGraph {
    /// Successors leaving `arena` are dropped.
    pub fn build(seed: &Seed, arena: &ShiftBox) -> Result<Self> {
        seed.require_generic()?;
        arena.check_fits(seed)?;
        let shifts: Vec<Shift> = arena.iter().collect();
        let index: BTreeMap<Shift, usize> = shifts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, z)| (z, i))
            .collect();
        let mut edges = Vec::with_capacity(shifts.len());
        for z in &shifts {
            let t = Tableau::new_unchecked(seed, z.clone());
            let next = one_step_successors(&t, ActionMode::Generic)?
                .into_iter()
                .filter_map(|s| index.get(s.shift()).copied())
                .collect();
            edges.push(next);
        }
        Ok(ReachabilityGraph {
            shifts,
            index,
            edges,
        })
    }

    /// Shifts reachable from `start` without leaving the arena.
    pub fn reach_from(&self, start: &Shift) -> Result<BTreeSet<Shift>> {
        let &first = self
            .index
            .get(start)
            .ok_or_else(|| Error::usage(format!("start {start} lies outside the search box")))?;
        let mut seen = vec![false; self.shifts.len()];
        seen[first] = true;
        let mut queue = VecDeque::from([first]);
        while let Some(i) = queue.pop_front() {
            for &j in &self.edges[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        Ok(seen
            .iter()
            .zip(&self.shifts)
            .filter(|(s, _)| **s)
            .map(|(_, z)| z.clone())
            .collect())
    }
}

/// For `z ≠ 0` with `Ω⁺(T(L)) ⊆ Ω⁺(T(L+z))`, a coordinate `(i, j)` with
/// `z_{ij} ≠ 0` and
/// `Ω⁺(T(L)) ⊆ Ω⁺(T(L + z_{ij}δ^{ij})) ⊆ Ω⁺(T(L + z))`.
///
/// Found by trying every nonzero coordinate; existence is guaranteed, so an
/// exhausted search is reported as an invariant violation.
pub fn find_intermediate_index(seed: &Seed, z: &Shift) -> Result<(usize, usize)> {
    seed.require_generic()?;
    let n = seed.n();
    let origin = Tableau::origin(seed);
    let target = Tableau::new(seed, z.clone())?;
    if z.is_zero() {
        return Err(Error::domain("the shift must be nonzero"));
    }
    let bottom = omega_plus_set(&origin);
    let top = omega_plus_set(&target);
    if !bottom.is_subset(&top) {
        return Err(Error::domain(format!(
            "Ω⁺ of the seed {bottom} is not contained in Ω⁺ of the shifted tableau {top}"
        )));
    }
    for (p, s, value) in z.nonzero(n) {
        let middle = omega_plus_set(&origin.moved(p, s, value));
        if bottom.is_subset(&middle) && middle.is_subset(&top) {
            return Ok((p, s));
        }
    }
    Err(Error::invariant(format!(
        "no intermediate coordinate for shift {z}"
    )))
}

/// `d_{pu}`: the number of distinct values `l_{ps}` over `s` with
/// `(p, s, u) ∈ Ω`.
pub fn d_pu(seed: &Seed, p: usize, u: usize) -> Result<usize> {
    let n = seed.n();
    if p < 2 || p > n || u == 0 || u >= p {
        return Err(Error::bounds(format!(
            "(p, u) = ({p}, {u}) outside the range for height {n}"
        )));
    }
    let omega = omega_set(&Tableau::origin(seed));
    let values: BTreeSet<_> = (1..=p)
        .filter(|&s| omega.contains(&OmegaTriple { p, s, u }))
        .map(|s| seed.row(p)[s - 1].clone())
        .collect();
    Ok(values.len())
}

/// `d_{pu}` for every `2 <= p <= n`, `1 <= u <= p-1`.
pub fn d_table(seed: &Seed) -> BTreeMap<(usize, usize), usize> {
    let n = seed.n();
    let mut table = BTreeMap::new();
    for p in 2..=n {
        for u in 1..p {
            table.insert((p, u), d_pu(seed, p, u).expect("indices in range"));
        }
    }
    table
}

/// Number of irreducible modules in the block of a generic seed:
/// `Π_{p,u} (d_{pu} + 1)`.
pub fn block_count(seed: &Seed) -> Result<u64> {
    seed.require_generic()?;
    d_table(seed).values().try_fold(1u64, |acc, &d| {
        acc.checked_mul(d as u64 + 1)
            .ok_or_else(|| Error::usage("block count overflows u64"))
    })
}

/// Whether two tableaux generate the same submodule.
pub fn generates_same_submodule(t1: &Tableau<'_>, t2: &Tableau<'_>) -> Result<bool> {
    same_class(t1, t2)
}

/// The `max |ω| + 2` cube radius around the seed.
pub fn census_radius(seed: &Seed) -> Result<i64> {
    Ok(OmegaProfile::new(seed)?.max_abs_omega() + 2)
}

/// A box around the seed that meets every `Ω⁺` class of the lattice.
///
/// Linked entries form chains hanging down from the top row, and each step
/// down a chain may need to move `max|ω| + 1` past its parent, so row `p`
/// gets the half-width `(n - p)(max|ω| + 1)`. Coordinates outside every
/// triple of `Ω` do not affect `Ω⁺` and are pinned to 0.
pub fn census_box(seed: &Seed) -> Result<ShiftBox> {
    let n = seed.n();
    let profile = OmegaProfile::new(seed)?;
    let step = profile.max_abs_omega() + 1;
    let linked = profile.linked_coords();
    let mut lower = vec![0; shift_dim(n)];
    let mut upper = vec![0; shift_dim(n)];
    for p in 1..n {
        for s in 1..=p {
            let off = shift_offset(n, p, s);
            if linked.contains(&off) {
                let half = (n - p) as i64 * step;
                lower[off] = -half;
                upper[off] = half;
            }
        }
    }
    ShiftBox::new(lower, upper)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassNode {
    pub omega_plus: Vec<[usize; 3]>,
    /// Lexicographically smallest shift of the class inside the box.
    pub representative: Vec<i64>,
    /// Number of shifts of the box in the class.
    pub size: u64,
}

/// The distinct `Ω⁺` values met in a box, ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPoset {
    pub nodes: Vec<ClassNode>,
    /// `(a, b)` when `Ω⁺` of node `a` is a maximal proper subset of that of
    /// node `b`, i.e. the module generated by `b` covers the one generated
    /// by `a` from below.
    pub covers: Vec<(usize, usize)>,
}

impl ClassPoset {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Brute-force census of `Ω⁺` classes over a box.
pub fn enumerate_omega_classes(seed: &Seed, bounds: &ShiftBox) -> Result<ClassPoset> {
    seed.require_generic()?;
    bounds.check_fits(seed)?;
    let profile = OmegaProfile::new(seed)?;
    let mut found: BTreeMap<u128, (Shift, u64)> = BTreeMap::new();
    for z in bounds.iter() {
        let mask = profile.mask(&z);
        found.entry(mask).and_modify(|e| e.1 += 1).or_insert((z, 1));
    }
    let mut classes: Vec<(OmegaSet, Shift, u64)> = found
        .into_iter()
        .map(|(mask, (z, count))| (profile.to_set(mask), z, count))
        .collect();
    classes.sort();

    let mut covers = Vec::new();
    for (a, (sa, ..)) in classes.iter().enumerate() {
        for (b, (sb, ..)) in classes.iter().enumerate() {
            if a == b || !sa.is_subset(sb) {
                continue;
            }
            let between = classes
                .iter()
                .any(|(sc, ..)| sc != sa && sc != sb && sa.is_subset(sc) && sc.is_subset(sb));
            if !between {
                covers.push((a, b));
            }
        }
    }
    let nodes = classes
        .into_iter()
        .map(|(set, z, size)| ClassNode {
            omega_plus: set.to_sorted_vec(),
            representative: z.coords().to_vec(),
            size,
        })
        .collect();
    Ok(ClassPoset { nodes, covers })
}

/// `max |ω|` over `Ω` as a plain integer, for reporting.
pub fn max_abs_omega(seed: &Seed) -> Result<i64> {
    Ok(OmegaProfile::new(seed)?.max_abs_omega())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn linked_seed() -> Seed {
        Seed::new(vec![
            vec![int(0), frac(1, 3), frac(2, 3)],
            vec![int(0), frac(4, 3)],
            vec![int(0)],
        ])
        .unwrap()
    }

    fn branching_seed() -> Seed {
        // (a, a-1, b | a, b | c) at a = 0, b = 1/3, c = 5/7
        Seed::new(vec![
            vec![int(0), int(-1), frac(1, 3)],
            vec![int(0), frac(1, 3)],
            vec![frac(5, 7)],
        ])
        .unwrap()
    }

    fn unlinked() -> Seed {
        Seed::new(vec![
            vec![int(0), frac(1, 5), frac(2, 5)],
            vec![frac(1, 7), frac(2, 7)],
            vec![frac(1, 11)],
        ])
        .unwrap()
    }

    #[test]
    fn box_iteration_is_lexicographic_and_complete() {
        let b = ShiftBox::new(vec![-1, 0], vec![0, 2]).unwrap();
        let all: Vec<Vec<i64>> = b.iter().map(|z| z.coords().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![-1, 0],
                vec![-1, 1],
                vec![-1, 2],
                vec![0, 0],
                vec![0, 1],
                vec![0, 2]
            ]
        );
        assert_eq!(b.size(), 6);
        assert!(ShiftBox::new(vec![1], vec![0]).is_err());
        assert!(ShiftBox::cube(3, -1).is_err());
        assert_eq!(ShiftBox::cube(3, 0).unwrap().iter().count(), 1);
    }

    #[test]
    fn profile_agrees_with_direct_definition() {
        let seed = linked_seed();
        let profile = OmegaProfile::new(&seed).unwrap();
        for z in ShiftBox::cube(3, 2).unwrap().iter() {
            let t = Tableau::new(&seed, z.clone()).unwrap();
            assert_eq!(profile.to_set(profile.mask(&z)), omega_plus_set(&t));
        }
    }

    #[test]
    fn n_basis_of_example_seed() {
        let seed = linked_seed();
        let r = Tableau::origin(&seed);
        let b = ShiftBox::cube(3, 2).unwrap();
        let got: Vec<Shift> = basis_n_in_box(&r, &b)
            .unwrap()
            .into_iter()
            .map(Tableau::into_shift)
            .collect();
        // brute force on the inclusion {(3,1,1), (2,1,1)} ⊆ Ω⁺: -m >= 0 and m - k >= 0
        let expected: Vec<Shift> = b
            .iter()
            .filter(|z| {
                let c = z.coords();
                c[0] <= 0 && c[2] <= c[0]
            })
            .collect();
        assert_eq!(got, expected);
        assert!(got.contains(r.shift()));
    }

    #[test]
    fn i_basis_of_example_seed() {
        let seed = linked_seed();
        let r = Tableau::origin(&seed);
        let b = ShiftBox::cube(3, 3).unwrap();
        let got: Vec<Shift> = basis_i_in_box(&r, &b)
            .unwrap()
            .into_iter()
            .map(Tableau::into_shift)
            .collect();
        let expected: Vec<Shift> = b
            .iter()
            .filter(|z| {
                let (m, nn, k) = (z.coords()[0], z.coords()[1], z.coords()[2]);
                m <= 0 && k <= m && nn > -1
            })
            .collect();
        assert_eq!(got, expected);
        let n_basis = basis_n_in_box(&r, &b).unwrap();
        assert!(got.iter().all(|z| n_basis.iter().any(|t| t.shift() == z)));
    }

    #[test]
    fn irreducible_lattice_has_a_single_class() {
        let seed = unlinked();
        let r = Tableau::origin(&seed);
        let b = ShiftBox::cube(3, 1).unwrap();
        assert_eq!(basis_n_in_box(&r, &b).unwrap().len(), 27);
        assert_eq!(basis_i_in_box(&r, &b).unwrap().len(), 27);
        assert_eq!(closure_bfs(&r, &b, 3).unwrap().len(), 27);
        assert_eq!(block_count(&seed).unwrap(), 1);
        let poset = enumerate_omega_classes(&seed, &b).unwrap();
        assert_eq!(poset.len(), 1);
        assert!(poset.covers.is_empty());
    }

    #[test]
    fn bases_need_generic_seeds() {
        let seed = Seed::from_ints(&[&[0, 0, 0], &[0, 1], &[0]]).unwrap();
        let r = Tableau::origin(&seed);
        let b = ShiftBox::cube(3, 1).unwrap();
        assert!(matches!(basis_n_in_box(&r, &b), Err(Error::Domain(_))));
        assert!(matches!(block_count(&seed), Err(Error::Domain(_))));
    }

    #[test]
    fn successors_in_gl2() {
        let seed = Seed::new(vec![vec![frac(1, 2), frac(-1, 3)], vec![frac(1, 7)]]).unwrap();
        let t = Tableau::origin(&seed);
        let succ: Vec<Shift> = one_step_successors(&t, ActionMode::Generic)
            .unwrap()
            .into_iter()
            .map(Tableau::into_shift)
            .collect();
        let z = |c| Shift::new(2, vec![c]).unwrap();
        assert_eq!(succ, vec![z(-1), z(0), z(1)]);
    }

    #[test]
    fn successors_miss_vanishing_raising() {
        let seed = linked_seed();
        let t = Tableau::origin(&seed);
        let succ = one_step_successors(&t, ActionMode::Generic).unwrap();
        // ω_{3,1,1} = 0 kills the δ^{21} raising term.
        assert!(!succ.contains(&t.moved(2, 1, 1)));
        assert!(succ.contains(&t.moved(2, 2, 1)));
    }

    #[test]
    fn closure_matches_n_basis_on_example() {
        let seed = linked_seed();
        let r = Tableau::origin(&seed);
        let b = ShiftBox::cube(3, 2).unwrap();
        let reach: Vec<Tableau> = closure_bfs(&r, &b, 3).unwrap().into_iter().collect();
        assert_eq!(reach, basis_n_in_box(&r, &b).unwrap());
    }

    #[test]
    fn graph_reachability_matches_bfs() {
        let seed = linked_seed();
        let b = ShiftBox::cube(3, 1).unwrap();
        let graph = ReachabilityGraph::build(&seed, &b.inflate(3)).unwrap();
        for z in b.iter() {
            let t = Tableau::new(&seed, z.clone()).unwrap();
            let bfs: BTreeSet<Shift> = closure_bfs(&t, &b, 3)
                .unwrap()
                .into_iter()
                .map(Tableau::into_shift)
                .collect();
            let graph_reach: BTreeSet<Shift> = graph
                .reach_from(&z)
                .unwrap()
                .into_iter()
                .filter(|s| b.contains(s))
                .collect();
            assert_eq!(bfs, graph_reach);
        }
    }

    #[test]
    fn intermediate_index_single_coordinate() {
        let seed = linked_seed();
        let z = Shift::new(3, vec![0, 4, 0]).unwrap();
        assert_eq!(find_intermediate_index(&seed, &z).unwrap(), (2, 2));
    }

    #[test]
    fn intermediate_index_on_example() {
        let seed = linked_seed();
        let z = Shift::new(3, vec![-1, 0, -1]).unwrap();
        let (p, s) = find_intermediate_index(&seed, &z).unwrap();
        let origin = Tableau::origin(&seed);
        let middle = omega_plus_set(&origin.moved(p, s, z.get(3, p, s).unwrap()));
        assert!(omega_plus_set(&origin).is_subset(&middle));
        assert!(middle.is_subset(&omega_plus_set(&origin.with_shift(z))));
        // Only (1,1) works: moving r21 to -1 alone breaks (2,1,1).
        assert_eq!((p, s), (1, 1));
    }

    #[test]
    fn intermediate_index_preconditions() {
        let seed = linked_seed();
        assert!(matches!(
            find_intermediate_index(&seed, &Shift::zero(3)),
            Err(Error::Domain(_))
        ));
        let z = Shift::new(3, vec![1, 0, 0]).unwrap();
        assert!(matches!(
            find_intermediate_index(&seed, &z),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn d_values_of_branching_seed() {
        let seed = branching_seed();
        assert_eq!(d_pu(&seed, 3, 1).unwrap(), 2);
        assert_eq!(d_pu(&seed, 3, 2).unwrap(), 1);
        assert_eq!(d_pu(&seed, 2, 1).unwrap(), 0);
        assert!(matches!(d_pu(&seed, 2, 2), Err(Error::Bounds(_))));
        assert_eq!(block_count(&seed).unwrap(), 6);
    }

    #[test]
    fn d_values_of_linked_seed() {
        let seed = linked_seed();
        let table = d_table(&seed);
        assert_eq!(table[&(2, 1)], 1);
        assert_eq!(table[&(3, 1)], 1);
        assert_eq!(table[&(3, 2)], 1);
        assert_eq!(block_count(&seed).unwrap(), 8);
    }

    #[test]
    fn census_of_worked_examples() {
        let seed = branching_seed();
        let radius = census_radius(&seed).unwrap();
        assert_eq!(radius, 3);
        let poset = enumerate_omega_classes(&seed, &ShiftBox::cube(3, radius).unwrap()).unwrap();
        assert_eq!(poset.len(), 6);

        let seed = linked_seed();
        let poset = enumerate_omega_classes(&seed, &ShiftBox::cube(3, 3).unwrap()).unwrap();
        assert_eq!(poset.len(), 8);
        let total: u64 = poset.nodes.iter().map(|n| n.size).sum();
        assert_eq!(total, 343);
        // 3 independent binary choices: the cover graph is a 3-cube.
        assert_eq!(poset.covers.len(), 12);
    }

    #[test]
    fn cube_radius_can_miss_classes_on_long_chains() {
        // l31 - l21 = 3 and l21 - l11 = 3: making both differences negative
        // needs z21 >= 4 and z11 >= 8, beyond max|ω| + 2 = 5.
        let seed = Seed::new(vec![
            vec![int(3), frac(1, 3), frac(2, 3)],
            vec![int(0), frac(1, 5)],
            vec![int(-3)],
        ])
        .unwrap();
        let count = block_count(&seed).unwrap();
        assert_eq!(count, 4);
        let cube = ShiftBox::cube(3, census_radius(&seed).unwrap()).unwrap();
        assert_eq!(enumerate_omega_classes(&seed, &cube).unwrap().len(), 3);
        let chain_box = census_box(&seed).unwrap();
        assert_eq!(enumerate_omega_classes(&seed, &chain_box).unwrap().len(), 4);
    }

    #[test]
    fn same_submodule_delegates() {
        let seed = linked_seed();
        let t = Tableau::origin(&seed);
        let u = t.with_shift(Shift::new(3, vec![-1, 0, -1]).unwrap());
        assert!(generates_same_submodule(&t, &u).unwrap());
        assert!(!generates_same_submodule(&t, &t.moved(2, 1, 1)).unwrap());
    }
}
