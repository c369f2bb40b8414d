//! The verification suites behind `gelfand-tsetlin verify`, run from code.

use gelfand_tsetlin::random::{rng, SeedSampler};
use gelfand_tsetlin::verify::{closure_suite, findim_suite, gamma_generic, relations_generic};
use gelfand_tsetlin::{FiniteModule, HighestWeight, Sampling, SuiteReport};

fn show(name: &str, report: &SuiteReport) {
    println!(
        "{name:<10} {} checks, {} failed, {} skipped",
        report.checks.len(),
        report.failures().count(),
        report.skipped
    );
}

fn main() {
    let seed = SeedSampler::new(3).sample(&mut rng(7));
    println!("seed {seed}");
    let sampling = Sampling {
        samples: 8,
        rng_seed: 1,
        radius: 3,
    };
    show("relations", &relations_generic(&seed, sampling).unwrap());
    show("gamma", &gamma_generic(&seed, sampling).unwrap());
    show(
        "closure",
        &closure_suite(
            &seed,
            2,
            3,
            Sampling {
                samples: 3,
                ..sampling
            },
        )
        .unwrap(),
    );
    let module = FiniteModule::new(HighestWeight::new(vec![3, 1, 0]).unwrap());
    show("findim", &findim_suite(&module).unwrap());
}
