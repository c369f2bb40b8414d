//! The subcommands of the `gelfand-tsetlin` binary as library functions.
//!
//! Each returns a [`CommandOutput`]; errors map to exit codes through
//! [`exit_code`].

use std::path::Path;

use serde_json::{json, Value};

use crate::action::{act, ActionMode, Generator};
use crate::document::{digest_hex, seed_digest, ResultDocument, SeedDocument, WeightDocument};
use crate::error::{Error, Result};
use crate::findim::{FiniteModule, HighestWeight};
use crate::omega::{omega_plus_set, omega_set, omega_value, OmegaTriple};
use crate::rational::format_rational;
use crate::structure::{
    basis_i_in_box, basis_n_in_box, block_count, census_box, d_table, enumerate_omega_classes,
    ShiftBox,
};
use crate::tableau::{Seed, Shift, Tableau};
use crate::vector::GtVector;
use crate::verify::{self, Sampling, Suite, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::Usage(_) | Error::Bounds(_) => EXIT_INPUT,
        Error::Domain(_) => EXIT_DOMAIN,
        Error::InvariantViolation(_) => EXIT_VERIFICATION,
    }
}

#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub document: ResultDocument,
    /// False when a verification suite reported a failure.
    pub passed: bool,
}

impl CommandOutput {
    fn ok(document: ResultDocument) -> Self {
        CommandOutput {
            document,
            passed: true,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::parse(format!("cannot read {}: {e}", path.display())))
}

pub fn read_seed_file(path: &Path) -> Result<Seed> {
    SeedDocument::parse(&read_text(path)?)?.to_seed()
}

pub fn read_weight_file(path: &Path) -> Result<HighestWeight> {
    WeightDocument::parse(&read_text(path)?)?.to_weight()
}

/// Parses `"i,j"` into a generator.
pub fn parse_generator(text: &str) -> Result<Generator> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [i, j] = parts[..] else {
        return Err(Error::parse(format!("generator {text:?} must be \"i,j\"")));
    };
    let index = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::parse(format!("generator index {s:?} is not a positive integer")))
    };
    Ok(Generator::new(index(i)?, index(j)?))
}

pub fn parse_mode(text: &str) -> Result<ActionMode> {
    match text.to_ascii_lowercase().as_str() {
        "generic" => Ok(ActionMode::Generic),
        "standard" => Ok(ActionMode::Standard),
        _ => Err(Error::usage(format!(
            "unknown mode {text:?}; expected generic or standard"
        ))),
    }
}

fn mode_name(mode: ActionMode) -> &'static str {
    match mode {
        ActionMode::Generic => "generic",
        ActionMode::Standard => "standard",
    }
}

fn triples(set: &crate::omega::OmegaSet) -> Value {
    json!(set.to_sorted_vec())
}

fn shift_list<'a>(tableaux: impl IntoIterator<Item = &'a Tableau<'a>>) -> Vec<Vec<i64>> {
    tableaux
        .into_iter()
        .map(|t| t.shift().coords().to_vec())
        .collect()
}

/// `Ω`, `Ω⁺` and every `ω` value of one tableau. Genericity is not required.
pub fn cmd_omega(seed: &Seed, shift: &Shift) -> Result<CommandOutput> {
    let t = Tableau::new(seed, shift.clone())?;
    let values: Vec<Value> = OmegaTriple::all(seed.n())
        .map(|tr| {
            let w = omega_value(&t, &tr).expect("triple in range");
            json!({ "triple": [tr.p, tr.s, tr.u], "omega": format_rational(&w) })
        })
        .collect();
    let payload = json!({
        "omega": triples(&omega_set(&t)),
        "omega_plus": triples(&omega_plus_set(&t)),
        "values": values,
    });
    let command = json!({ "name": "omega", "shift": shift.coords() });
    Ok(CommandOutput::ok(ResultDocument::new(
        command,
        seed_digest(seed),
        payload,
    )))
}

/// `E_{ij} T(R)` as a list of `(shift, coefficient)` terms.
pub fn cmd_act(
    seed: &Seed,
    shift: &Shift,
    g: Generator,
    mode: ActionMode,
) -> Result<CommandOutput> {
    g.check(seed.n())?;
    if mode == ActionMode::Generic {
        seed.require_generic()?;
    }
    let t = Tableau::new(seed, shift.clone())?;
    let image = act(g, &GtVector::basis(&t), mode)?;
    let terms: Vec<Value> = image
        .terms()
        .map(|(z, c)| json!({ "shift": z.coords(), "coefficient": format_rational(c) }))
        .collect();
    let command = json!({
        "name": "act",
        "shift": shift.coords(),
        "generator": [g.i, g.j],
        "mode": mode_name(mode),
    });
    Ok(CommandOutput::ok(ResultDocument::new(
        command,
        seed_digest(seed),
        json!({ "terms": terms }),
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// The submodule generated by the tableau.
    N,
    /// The irreducible subquotient containing the tableau.
    I,
}

impl std::str::FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" | "n" => Ok(BasisKind::N),
            "I" | "i" => Ok(BasisKind::I),
            _ => Err(Error::usage(format!("--which must be N or I, got {s:?}"))),
        }
    }
}

/// The `N` or `I` basis inside the cube of `radius` around `shift`.
pub fn cmd_basis(
    seed: &Seed,
    shift: &Shift,
    radius: i64,
    which: BasisKind,
) -> Result<CommandOutput> {
    let t = Tableau::new(seed, shift.clone())?;
    let bounds = ShiftBox::around(shift, radius)?;
    let basis = match which {
        BasisKind::N => basis_n_in_box(&t, &bounds)?,
        BasisKind::I => basis_i_in_box(&t, &bounds)?,
    };
    let name = match which {
        BasisKind::N => "N",
        BasisKind::I => "I",
    };
    let payload = json!({
        "omega_plus": triples(&omega_plus_set(&t)),
        "scanned": bounds.size() as u64,
        "count": basis.len(),
        "shifts": shift_list(&basis),
    });
    let command =
        json!({ "name": "basis", "shift": shift.coords(), "radius": radius, "which": name });
    Ok(CommandOutput::ok(ResultDocument::new(
        command,
        seed_digest(seed),
        payload,
    )))
}

/// Which region, if any, `cmd_block` scans for its class census.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Census {
    None,
    /// The cube of this radius around the seed.
    Cube(i64),
    /// The box from [`census_box`], which meets every class.
    Sufficient,
}

/// `d_{pu}` table and block count, optionally checked by a class census.
pub fn cmd_block(seed: &Seed, census: Census) -> Result<CommandOutput> {
    let count = block_count(seed)?;
    let table: Vec<Value> = d_table(seed)
        .into_iter()
        .map(|((p, u), d)| json!({ "p": p, "u": u, "d": d }))
        .collect();
    let mut payload = json!({
        "d_table": table,
        "block_count": count,
        "irreducible": count == 1,
    });
    let region = match census {
        Census::None => None,
        Census::Cube(r) => Some(ShiftBox::cube(seed.n(), r)?),
        Census::Sufficient => Some(census_box(seed)?),
    };
    if let Some(bounds) = region {
        let poset = enumerate_omega_classes(seed, &bounds)?;
        payload["census"] = json!({
            "lower": bounds.lower(),
            "upper": bounds.upper(),
            "scanned": bounds.size() as u64,
            "classes": poset.len(),
            "match": poset.len() as u64 == count,
            "poset": poset,
        });
    }
    let census_echo = match census {
        Census::None => Value::Null,
        Census::Cube(r) => json!({ "radius": r }),
        Census::Sufficient => json!("sufficient"),
    };
    let command = json!({ "name": "block", "census": census_echo });
    Ok(CommandOutput::ok(ResultDocument::new(
        command,
        seed_digest(seed),
        payload,
    )))
}

/// The object a verification suite runs on.
#[derive(Clone, Debug)]
pub enum VerifyInput {
    Seed(Seed),
    Weight(HighestWeight),
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub sampling: Sampling,
    /// Box radius of the closure suite.
    pub box_radius: i64,
    /// Padding of the closure suite's search region.
    pub padding: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            sampling: Sampling::default(),
            box_radius: 2,
            padding: 3,
        }
    }
}

/// Runs one suite; the output fails (exit 1) if any check failed.
pub fn cmd_verify(input: &VerifyInput, suite: Suite, opts: VerifyOptions) -> Result<CommandOutput> {
    let report: SuiteReport = match (suite, input) {
        (Suite::Relations, VerifyInput::Seed(s)) => verify::relations_generic(s, opts.sampling)?,
        (Suite::Relations, VerifyInput::Weight(w)) => {
            verify::relations_standard(&FiniteModule::new(w.clone()))?
        }
        (Suite::Gamma, VerifyInput::Seed(s)) => verify::gamma_generic(s, opts.sampling)?,
        (Suite::Gamma, VerifyInput::Weight(w)) => {
            verify::gamma_standard(&FiniteModule::new(w.clone()))?
        }
        (Suite::Closure, VerifyInput::Seed(s)) => {
            verify::closure_suite(s, opts.box_radius, opts.padding, opts.sampling)?
        }
        (Suite::Findim, VerifyInput::Weight(w)) => {
            verify::findim_suite(&FiniteModule::new(w.clone()))?
        }
        (Suite::Closure, VerifyInput::Weight(_)) => {
            return Err(Error::usage("the closure suite needs --seed"))
        }
        (Suite::Findim, VerifyInput::Seed(_)) => {
            return Err(Error::usage("the findim suite needs --weight"))
        }
    };
    let digest = match input {
        VerifyInput::Seed(s) => seed_digest(s),
        VerifyInput::Weight(w) => {
            let doc = WeightDocument {
                lambda: w.components().to_vec(),
            };
            digest_hex(serde_json::to_string(&doc).expect("plain data").as_bytes())
        }
    };
    let passed = report.passed();
    let command = json!({
        "name": "verify",
        "suite": suite.to_string(),
        "samples": opts.sampling.samples,
        "rng_seed": opts.sampling.rng_seed,
        "radius": opts.box_radius,
    });
    let payload = json!({
        "passed": passed,
        "checked": report.checks.len(),
        "failed": report.failures().count(),
        "report": report,
    });
    Ok(CommandOutput {
        document: ResultDocument::new(command, digest, payload),
        passed,
    })
}
