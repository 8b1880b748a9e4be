//! Burn a path from chosen sources and watch the rounds.
//!
//!     cargo run --example simulate

use treeburn::graph::gen_path;
use treeburn::{canonicalize, simulate, validate_sequence, BurningSequence, Schedule};

fn main() {
    let p4 = gen_path(4).unwrap();
    let seq = BurningSequence::new(vec![1, 3]).unwrap();
    let labels = validate_sequence(&p4, &seq).unwrap();
    println!("P4 burned from (1, 3) in {} rounds", labels.total_rounds());
    for round in 1..=labels.total_rounds() {
        let burned: Vec<_> = labels.burned_in(round).collect();
        println!("  round {round}: {burned:?}");
    }

    // A schedule may skip rounds; canonicalize fills each gap with a vertex
    // that catches fire in that round anyway.
    let p7 = gen_path(7).unwrap();
    let schedule = Schedule::new(vec![Some(3), None, None]).unwrap();
    let labels = simulate(&p7, &schedule).unwrap();
    let seq = canonicalize(&p7, &schedule).unwrap();
    println!("P7 from 3 with two idle rounds: {} rounds, labels {:?}", labels.total_rounds(), labels.labels());
    println!("as a burning sequence: {:?}", seq.sources());

    match validate_sequence(&p4, &BurningSequence::new(vec![1, 2]).unwrap()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("(1, 2) on P4 is rejected: {e}"),
    }
}
