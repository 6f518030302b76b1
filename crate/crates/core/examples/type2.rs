//! Recover the prefix shifts that make two listings uniform.
//!
//! Run with `cargo run --example type2`.

use enumorder::{discordant_pairs, drop_prefix, prepend, type2_search, uniform_prefix, Listing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = Listing::new(vec![100, 2, 4, 6, 8])?;
    let g = Listing::new(vec![1, 3, 5, 7])?;
    println!("{h} vs {g}: {:?}", uniform_prefix(&h, &g).kind);
    match type2_search(&h, &g, 3, 3, 3) {
        Some(w) => {
            println!(
                "type-2 uniform: drop {} from h, {} from g, overlap {}",
                w.m, w.n, w.overlap
            );
            let shifted = drop_prefix(&h, w.m)?;
            println!(
                "  shifted h = {shifted}, verdict {:?}",
                uniform_prefix(&shifted, &g).kind
            );
        }
        None => println!("no shift pair found"),
    }

    // A permanent disagreement survives every shift.
    let zigzag = Listing::new(vec![1, 3, 2, 5, 4, 7, 6])?;
    let sorted = Listing::new((1..=7).collect())?;
    println!(
        "{zigzag} vs {sorted}: {:?}",
        type2_search(&zigzag, &sorted, 2, 2, 4)
    );
    for m in 0..=2 {
        let d = discordant_pairs(&zigzag, &sorted, m, 0)?;
        println!("  m={m}: discordant pairs {:?}", d.pairs);
    }

    // Prepending a finite prefix never breaks type-2 uniformity.
    let base = Listing::new(vec![9, 4, 12, 7])?;
    let padded = prepend(&Listing::new(vec![50, 1])?, &base)?;
    println!(
        "{base} vs {padded}: {:?}",
        type2_search(&base, &padded, 0, 5, base.len())
    );
    Ok(())
}
