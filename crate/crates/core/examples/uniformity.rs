//! Compare listings by the relative order of their values.
//!
//! Run with `cargo run --example uniformity`.

use enumorder::{discordant_pairs, uniform_prefix, Listing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // i ↦ 2i and i ↦ i + 1 enumerate different sets in the same order.
    let doubling = Listing::new((1..=1000).map(|i| 2 * i).collect())?;
    let successor = Listing::new((1..=1000).map(|i| i + 1).collect())?;
    let verdict = uniform_prefix(&doubling, &successor);
    println!(
        "doubling vs successor: {}",
        serde_json::to_string(&verdict)?
    );

    let h1 = Listing::new(vec![7, 2, 5, 6, 14])?;
    let h2 = Listing::new(vec![6, 8, 1, 2, 5])?;
    let verdict = uniform_prefix(&h1, &h2);
    println!("{h1} vs {h2}: {}", serde_json::to_string(&verdict)?);
    println!("  patterns {} / {}", h1.order_pattern(), h2.order_pattern());

    let all = discordant_pairs(&h1, &h2, 0, 0)?;
    println!("  {} discordant pairs: {:?}", all.pairs.len(), all.pairs);

    // Different lengths: only the common prefix is certified.
    let short = Listing::new(vec![10, 20, 30])?;
    println!(
        "truncated: {}",
        serde_json::to_string(&uniform_prefix(&doubling, &short))?
    );
    Ok(())
}
