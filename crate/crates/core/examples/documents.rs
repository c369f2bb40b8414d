//! Seed documents and result documents, as read and written by the binary.

use gelfand_tsetlin::commands::{cmd_block, Census};
use gelfand_tsetlin::document::{parse_seed, seed_digest, SeedDocument};

fn main() {
    let text = r#"{"n":3,"rows":[["0","-1","1/3"],["0","1/3"],["5/7"]]}"#;
    let seed = parse_seed(text).unwrap();
    println!("parsed   {seed}");
    println!("written  {}", SeedDocument::from_seed(&seed).to_json());
    println!("digest   {}", seed_digest(&seed));

    let out = cmd_block(&seed, Census::None).unwrap();
    println!("{}", out.document.to_json());

    match parse_seed(r#"{"n":2,"rows":[["1","2/0"],["0"]]}"#) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
