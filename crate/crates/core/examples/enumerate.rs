//! Generate listings from register-machine programs, alone and dovetailed.
//!
//! Run with `cargo run --example enumerate`.

use enumorder::{dovetail_union, run_budgeted, uniform_via_tobst, EnumProgram, Tobst};

const EVENS: &str = "\
LOADI R0 2
OUT R0
ADDI R0 2
JMP 1
";

const ODDS: &str = "\
LOADI R0 1
OUT R0
ADDI R0 2
JMP 1
";

const UP_TO_20: &str = "\
LOADI R0 2
LOADI R1 10
OUT R0
ADDI R0 2
SUBI R1 1
JZ R1 7
JMP 2
HALT
";

const DOWN_FROM_20: &str = "\
LOADI R0 20
OUT R0
SUBI R0 2
JZ R0 5
JMP 1
HALT
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let evens = EnumProgram::parse("evens", EVENS)?;
    let odds = EnumProgram::parse("odds", ODDS)?;

    println!("{}", run_budgeted(&evens, 1_000, 5).to_json());
    println!("{}", run_budgeted(&evens, 7, 100).to_json());

    // Three steps per turn lines both loops up on one emission each.
    println!(
        "{}",
        dovetail_union(&[odds.clone(), evens.clone()], 3, 1_000, 10)?.to_json()
    );
    println!(
        "{}",
        dovetail_union(&[odds, evens], 1, 1_000, 10)?.to_json()
    );

    // Same set, opposite orders.
    let up = run_budgeted(&EnumProgram::parse("up", UP_TO_20)?, 1_000, 100);
    let down = run_budgeted(&EnumProgram::parse("down", DOWN_FROM_20)?, 1_000, 100);
    println!(
        "up   {} -> {:?}",
        up.listing,
        Tobst::from_listing(&up.listing).spine_kind()
    );
    println!(
        "down {} -> {:?}",
        down.listing,
        Tobst::from_listing(&down.listing).spine_kind()
    );
    println!(
        "uniform via trees: {}",
        uniform_via_tobst(&up.listing, &down.listing)?
    );
    Ok(())
}
