//! Invariant suites: exhaustive or sampled checks of the module structure,
//! each reported instance by instance.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::action::{gamma_eigenvalue, ActionMode, Actor, Generator, WordOrder};
use crate::error::{Error, Result};
use crate::findim::{is_standard, FiniteModule};
use crate::omega::omega_plus_set;
use crate::random::{random_shift, rng};
use crate::structure::{
    basis_i_in_box, basis_n_in_box, closure_bfs, one_step_successors, OmegaProfile,
    ReachabilityGraph, ShiftBox,
};
use crate::tableau::{Seed, Shift, Tableau};
use crate::vector::GtVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Gamma,
    Closure,
    Findim,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relations" => Ok(Suite::Relations),
            "gamma" => Ok(Suite::Gamma),
            "closure" => Ok(Suite::Closure),
            "findim" => Ok(Suite::Findim),
            other => Err(Error::usage(format!("unknown suite {other:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Relations => "relations",
            Suite::Gamma => "gamma",
            Suite::Closure => "closure",
            Suite::Findim => "findim",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn pass(label: impl Into<String>) -> Self {
        CheckOutcome {
            label: label.into(),
            passed: true,
            detail: None,
        }
    }

    fn fail(label: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckOutcome {
            label: label.into(),
            passed: false,
            detail: Some(detail.into()),
        }
    }

    fn from_failure(label: impl Into<String>, failure: Option<String>) -> Self {
        match failure {
            None => CheckOutcome::pass(label),
            Some(detail) => CheckOutcome::fail(label, detail),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckOutcome>,
    /// Instances the suite declined to check, with the reason in `notes`.
    pub skipped: usize,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: Vec::new(),
            skipped: 0,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
        self.skipped += other.skipped;
        self.notes.extend(other.notes);
    }
}

/// Sampling parameters for the suites that draw random tableaux.
#[derive(Clone, Copy, Debug)]
pub struct Sampling {
    pub samples: usize,
    pub rng_seed: u64,
    /// Sampled shifts have coordinates in `[-radius, radius]`.
    pub radius: i64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            samples: 20,
            rng_seed: 0,
            radius: 3,
        }
    }
}

fn sample_tableaux(seed: &Seed, sampling: Sampling) -> Vec<Tableau<'_>> {
    let mut r = rng(sampling.rng_seed);
    (0..sampling.samples)
        .map(|_| Tableau::new_unchecked(seed, random_shift(&mut r, seed.n(), sampling.radius)))
        .collect()
}

/// First generator pair whose commutator defect is nonzero on `t`.
fn relation_failure<'a>(actor: &mut Actor<'a>, t: &Tableau<'a>) -> Result<Option<String>> {
    let v = GtVector::basis(t);
    let n = t.n();
    for a in Generator::all(n) {
        for b in Generator::all(n) {
            let defect = actor.commutator_defect(a, b, &v)?;
            if !defect.is_zero() {
                return Ok(Some(format!("[{a}, {b}] defect {defect}")));
            }
        }
    }
    Ok(None)
}

/// `[E_ij, E_kl] = δ_jk E_il - δ_li E_kj` for all `n⁴` pairs on sampled
/// tableaux of a generic seed.
pub fn relations_generic(seed: &Seed, sampling: Sampling) -> Result<SuiteReport> {
    seed.require_generic()?;
    let mut report = SuiteReport::new(Suite::Relations);
    let mut actor = Actor::new(ActionMode::Generic);
    for t in sample_tableaux(seed, sampling) {
        let failure = relation_failure(&mut actor, &t)?;
        report.checks.push(CheckOutcome::from_failure(
            format!("relations at {}", t.shift()),
            failure,
        ));
    }
    Ok(report)
}

/// The same relations on every standard tableau of `L(λ)`.
pub fn relations_standard(module: &FiniteModule) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Relations);
    let mut actor = Actor::new(ActionMode::Standard);
    for t in module.standard_tableaux() {
        let failure = relation_failure(&mut actor, &t)?;
        report.checks.push(CheckOutcome::from_failure(
            format!("relations at {}", t.shift()),
            failure,
        ));
    }
    Ok(report)
}

/// Checks every `c_{mk}` on `t`, skipping rows `m` with a repeated entry.
/// Returns the first mismatch and the number of skipped rows.
fn gamma_check<'a>(actor: &mut Actor<'a>, t: &Tableau<'a>) -> Result<(Option<String>, usize)> {
    let v = GtVector::basis(t);
    let mut skipped = 0;
    for m in 1..=t.n() {
        if has_repeated_entries(t, m) {
            skipped += 1;
            continue;
        }
        for k in 1..=m {
            let expected = v.scaled(&gamma_eigenvalue(m, k, t)?);
            let got = actor.gamma_generator(m, k, &v, WordOrder::RightmostFirst)?;
            if got != expected {
                return Ok((
                    Some(format!("c_{m}{k}: got {got}, expected {expected}")),
                    skipped,
                ));
            }
        }
    }
    Ok((None, skipped))
}

fn has_repeated_entries(t: &Tableau<'_>, m: usize) -> bool {
    let row = t.row(m);
    let distinct: BTreeSet<_> = row.iter().collect();
    distinct.len() != row.len()
}

fn gamma_report<'a>(tableaux: Vec<Tableau<'a>>, mode: ActionMode) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Gamma);
    let mut actor = Actor::new(mode);
    for t in tableaux {
        let (failure, skipped) = gamma_check(&mut actor, &t)?;
        report.skipped += skipped;
        report.checks.push(CheckOutcome::from_failure(
            format!("gamma at {}", t.shift()),
            failure,
        ));
    }
    report.notes.push(format!(
        "{} (tableau, row) pairs skipped: repeated row entries",
        report.skipped
    ));
    Ok(report)
}

/// `c_{mk} T = γ_{mk} T` for all `1 <= k <= m <= n` on sampled tableaux of a
/// generic seed. Rows with a repeated entry are skipped and counted.
pub fn gamma_generic(seed: &Seed, sampling: Sampling) -> Result<SuiteReport> {
    seed.require_generic()?;
    gamma_report(sample_tableaux(seed, sampling), ActionMode::Generic)
}

/// The eigenvalue law on every standard tableau of `L(λ)`.
pub fn gamma_standard(module: &FiniteModule) -> Result<SuiteReport> {
    gamma_report(module.standard_tableaux(), ActionMode::Standard)
}

/// Box-local checks of the submodule structure of a generic seed:
///
/// * closure: successors of `N(T(R))` members stay in `N(T(R))`;
/// * oracle equivalence: BFS reachability from `T(R)` equals `N(T(R))`;
/// * partition: the `I`-classes partition the box;
/// * irreducibility: BFS from any member of an `I`-class reaches the whole
///   class within the box.
pub fn closure_suite(
    seed: &Seed,
    box_radius: i64,
    padding: i64,
    sampling: Sampling,
) -> Result<SuiteReport> {
    seed.require_generic()?;
    let n = seed.n();
    let bounds = ShiftBox::cube(n, box_radius)?;
    let arena = bounds.inflate(padding);
    let mut report = SuiteReport::new(Suite::Closure);

    let sampled = sample_tableaux(
        seed,
        Sampling {
            radius: box_radius,
            ..sampling
        },
    );
    for r in &sampled {
        let n_basis = basis_n_in_box(r, &bounds)?;
        let reach: Vec<Tableau<'_>> = closure_bfs(r, &bounds, padding)?.into_iter().collect();
        let failure = (reach != n_basis).then(|| {
            format!(
                "BFS reached {} tableaux, N-basis has {}",
                reach.len(),
                n_basis.len()
            )
        });
        report.checks.push(CheckOutcome::from_failure(
            format!("oracle equivalence at {}", r.shift()),
            failure,
        ));

        let target = omega_plus_set(r);
        let mut failure = None;
        for q in &n_basis {
            for next in one_step_successors(q, ActionMode::Generic)? {
                if arena.contains(next.shift()) && !target.is_subset(&omega_plus_set(&next)) {
                    failure = Some(format!("{} -> {} leaves N", q.shift(), next.shift()));
                }
            }
        }
        report.checks.push(CheckOutcome::from_failure(
            format!("submodule closure at {}", r.shift()),
            failure,
        ));
    }

    report.merge(partition_and_reachability(seed, &bounds, padding)?);
    Ok(report)
}

/// Partition of the box into `I`-classes, and reachability of each whole
/// class from every one of its members.
pub fn partition_and_reachability(
    seed: &Seed,
    bounds: &ShiftBox,
    padding: i64,
) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Closure);
    let profile = OmegaProfile::new(seed)?;
    let graph = ReachabilityGraph::build(seed, &bounds.inflate(padding))?;

    let mut covered: BTreeSet<Shift> = BTreeSet::new();
    let mut overlap = None;
    let mut classes: Vec<Vec<Tableau<'_>>> = Vec::new();
    let mut seen_masks = BTreeSet::new();
    for z in bounds.iter() {
        if !seen_masks.insert(profile.mask(&z)) {
            continue;
        }
        let class = basis_i_in_box(&Tableau::new_unchecked(seed, z), bounds)?;
        for t in &class {
            if !covered.insert(t.shift().clone()) {
                overlap = Some(format!("{} lies in two classes", t.shift()));
            }
        }
        classes.push(class);
    }
    let failure = overlap.or_else(|| {
        (covered.len() as u128 != bounds.size()).then(|| {
            format!(
                "classes cover {} of {} shifts",
                covered.len(),
                bounds.size()
            )
        })
    });
    report.checks.push(CheckOutcome::from_failure(
        format!("I-classes partition the box ({} classes)", classes.len()),
        failure,
    ));

    for class in &classes {
        let members: BTreeSet<Shift> = class.iter().map(|t| t.shift().clone()).collect();
        let mut failure = None;
        for t in class {
            let reached = graph.reach_from(t.shift())?;
            if !members.is_subset(&reached) {
                failure = Some(format!("BFS from {} misses part of its class", t.shift()));
                break;
            }
        }
        report.checks.push(CheckOutcome::from_failure(
            format!("class of {} reachable from each member", class[0].shift()),
            failure,
        ));
    }
    Ok(report)
}

/// Dimension match, highest-weight annihilation and closure of the
/// standard basis under every generator.
pub fn findim_suite(module: &FiniteModule) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(Suite::Findim);
    let basis = module.standard_tableaux();
    let dim = module.dimension();
    report.checks.push(if basis.len() as u64 == dim {
        CheckOutcome::pass(format!("dimension {dim} matches the Weyl formula"))
    } else {
        CheckOutcome::fail(
            "dimension matches the Weyl formula",
            format!("{} standard tableaux, Weyl dimension {dim}", basis.len()),
        )
    });

    let hw = module.highest_weight_tableau();
    let n = module.weight().n();
    let mut actor = Actor::new(ActionMode::Standard);
    let hw_vec = GtVector::basis(&hw);
    let mut failure = None;
    for k in 1..n {
        let image = actor.apply(Generator::new(k, k + 1), &hw_vec)?;
        if !image.is_zero() {
            failure = Some(format!(
                "E_{k},{} does not kill the highest weight tableau",
                k + 1
            ));
        }
    }
    report.checks.push(CheckOutcome::from_failure(
        "highest weight tableau annihilated by raising",
        failure,
    ));

    let members: BTreeSet<&Shift> = basis.iter().map(Tableau::shift).collect();
    let mut failure = None;
    for t in &basis {
        let v = GtVector::basis(t);
        for g in Generator::all(n) {
            for target in actor.apply(g, &v)?.support() {
                if !members.contains(target.shift()) || !is_standard(&target) {
                    failure = Some(format!("{g} maps {} outside the basis", t.shift()));
                }
            }
        }
    }
    report.checks.push(CheckOutcome::from_failure(
        "standard basis closed under gl(n)",
        failure,
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::HighestWeight;
    use crate::rational::{frac, int};

    fn module(lambda: &[i64]) -> FiniteModule {
        FiniteModule::new(HighestWeight::new(lambda.to_vec()).unwrap())
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::Relations,
            Suite::Gamma,
            Suite::Closure,
            Suite::Findim,
        ] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn findim_adjoint_sl3() {
        let report = findim_suite(&module(&[2, 1, 0])).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.checks[0].label.contains('8'));
    }

    #[test]
    fn relations_on_small_standard_modules() {
        assert!(relations_standard(&module(&[1, 0])).unwrap().passed());
        assert!(relations_standard(&module(&[1, 0, -1])).unwrap().passed());
    }

    #[test]
    fn gamma_on_gl2_standard() {
        let report = gamma_standard(&module(&[2, 0])).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.checks.len(), 3);
    }

    #[test]
    fn sampled_suites_on_example_seed() {
        let seed = Seed::new(vec![
            vec![int(0), frac(1, 3), frac(2, 3)],
            vec![int(0), frac(4, 3)],
            vec![int(0)],
        ])
        .unwrap();
        let sampling = Sampling {
            samples: 4,
            rng_seed: 5,
            radius: 2,
        };
        assert!(relations_generic(&seed, sampling).unwrap().passed());
        assert!(gamma_generic(&seed, sampling).unwrap().passed());
        let closure = closure_suite(&seed, 1, 3, sampling).unwrap();
        assert!(closure.passed(), "{closure:?}");
    }

    #[test]
    fn sampled_suites_reject_non_generic() {
        let seed = Seed::from_ints(&[&[0, 0, 0], &[0, 1], &[0]]).unwrap();
        assert!(matches!(
            relations_generic(&seed, Sampling::default()),
            Err(Error::Domain(_))
        ));
    }
}
